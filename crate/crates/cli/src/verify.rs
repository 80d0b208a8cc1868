use jacobi_cells::cellgeom::pair_set;
use jacobi_cells::diagram::h_plus;
use jacobi_cells::qtpoly::{
    area_generating, bigraded_semimodule_sum, poincare, q_binomial, q_integer, qt_catalan, Var,
};
use jacobi_cells::semigroup::coprime_pairs;
use jacobi_cells::{
    certify, check_dual_map_bijective, enumerate_semimodules, reconstruct_from_dual,
    LaurentBivariate, Semigroup, Staircase,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::Scope;
use crate::SCHEMA;

/// At most this many counterexamples are kept per check; the failure count
/// is always exact.
const MAX_LISTED: usize = 20;

pub const DEFAULT_PAIR_BOUND: i64 = 14;
pub const DEFAULT_CATALAN_BOUND: i64 = 8;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub cases: u64,
    pub failures: u64,
    pub passed: bool,
    pub counterexamples: Vec<String>,
}

impl CheckReport {
    fn new(name: &str) -> Self {
        CheckReport {
            name: name.to_string(),
            passed: true,
            ..Default::default()
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            self.passed = false;
            if self.counterexamples.len() < MAX_LISTED {
                self.counterexamples.push(describe());
            }
        }
    }

    fn merge(&mut self, other: CheckReport) {
        self.cases += other.cases;
        self.failures += other.failures;
        self.passed &= other.passed;
        let room = MAX_LISTED - self.counterexamples.len();
        self.counterexamples
            .extend(other.counterexamples.into_iter().take(room));
    }
}

/// Outcome of `verify`. Everything in it is a function of the arguments,
/// so two runs serialize identically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub schema: &'static str,
    pub command: Vec<String>,
    pub scope: String,
    pub pair_bound: Option<i64>,
    pub catalan_bound: Option<i64>,
    pub pairs_visited: usize,
    pub checks: Vec<CheckReport>,
    pub passed: bool,
}

impl RunReport {
    pub fn render_text(&self) -> String {
        let mut out = format!("{}\n", self.command.join(" "));
        if let Some(b) = self.pair_bound {
            out += &format!(
                "  coprime pairs with p + q <= {b}: {}\n",
                self.pairs_visited
            );
        }
        if let Some(b) = self.catalan_bound {
            out += &format!("  q,t-Catalan checks for n <= {b}\n");
        }
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            out += &format!("  {:<width$}  {verdict}  {} cases", c.name, c.cases);
            if c.failures > 0 {
                out += &format!(", {} failures", c.failures);
            }
            out += "\n";
            for ce in &c.counterexamples {
                out += &format!("    counterexample: {ce}\n");
            }
        }
        out += if self.passed { "PASS\n" } else { "FAIL\n" };
        out
    }
}

/// Runs each per-pair check in parallel and merges the results in
/// canonical pair order.
fn over_pairs(
    pairs: &[(i64, i64)],
    names: &[&str],
    run: impl Fn(i64, i64, &mut [CheckReport]) + Sync,
) -> Vec<CheckReport> {
    let partial: Vec<Vec<CheckReport>> = pairs
        .par_iter()
        .map(|&(p, q)| {
            let mut reports: Vec<CheckReport> = names.iter().map(|n| CheckReport::new(n)).collect();
            run(p, q, &mut reports);
            reports
        })
        .collect();
    let mut totals: Vec<CheckReport> = names.iter().map(|n| CheckReport::new(n)).collect();
    for reports in partial {
        for (total, r) in totals.iter_mut().zip(reports) {
            total.merge(r);
        }
    }
    totals
}

pub fn dimension_checks(pairs: &[(i64, i64)]) -> Vec<CheckReport> {
    over_pairs(pairs, &["dimension", "poincare"], |p, q, reports| {
        let semigroup = Semigroup::new(p, q).expect("coprime pair");
        for module in enumerate_semimodules(&semigroup) {
            let d = module.to_diagram();
            let dim = module.dimension();
            let pairs = module.dimension_via_pairs();
            let hp = h_plus(&d, p as u32, q as u32).expect("positive slope") as i64;
            let u = pair_set(&d, p, q).expect("staircase diagram").len() as i64;
            let ok = pairs == dim && semigroup.delta() - hp == dim && u == dim;
            reports[0].record(ok, || {
                format!(
                    "({p}, {q}) {d}: dim {dim}, pairs {pairs}, delta - h+ {}, |U| {u}",
                    semigroup.delta() - hp
                )
            });
        }
        let (poly, area) = (
            poincare(p, q).expect("coprime"),
            area_generating(p, q).expect("coprime"),
        );
        reports[1].record(poly == area, || {
            format!("({p}, {q}): Poincaré {poly} differs from area sum {area}")
        });
    })
}

pub fn pairing_checks(pairs: &[(i64, i64)]) -> Vec<CheckReport> {
    over_pairs(pairs, &["pairing"], |p, q, reports| {
        for d in Staircase::new(p, q).expect("coprime pair").subdiagrams() {
            let result = certify(&d, p, q);
            reports[0].record(result.is_ok(), || {
                format!("({p}, {q}) {d}: {}", result.unwrap_err())
            });
        }
    })
}

pub fn dual_map_checks(pairs: &[(i64, i64)]) -> Vec<CheckReport> {
    over_pairs(
        pairs,
        &["dual-map", "area-profile", "reconstruction"],
        |p, q, reports| {
            let perm = check_dual_map_bijective(p, q).expect("coprime pair");
            reports[0].record(perm.is_permutation(), || match perm.collisions.first() {
                Some(c) => format!(
                    "({p}, {q}): conjecture counterexample, {} and {} both map to {}",
                    c.first, c.second, c.image
                ),
                None => format!("({p}, {q}): an image leaves the staircase"),
            });
            let (sources, images) = perm.area_profiles();
            reports[1].record(sources == images, || {
                format!("({p}, {q}): areas {sources:?} vs images {images:?}")
            });
            if q == p + 1 {
                for (src, img) in &perm.pairs {
                    let back = reconstruct_from_dual(img, p as u32);
                    reports[2].record(back.as_ref() == Ok(src), || {
                        format!("({p}, {q}) {img}: expected {src}, got {back:?}")
                    });
                }
            }
        },
    )
}

pub fn catalan_checks(max_n: i64) -> Vec<CheckReport> {
    let names = [
        "catalan-symmetry",
        "catalan-specialization",
        "bigraded-identity",
        "poincare-catalan",
    ];
    let ns: Vec<i64> = (1..=max_n).collect();
    let partial: Vec<Vec<CheckReport>> = ns
        .par_iter()
        .map(|&n| {
            let mut r: Vec<CheckReport> = names.iter().map(|s| CheckReport::new(s)).collect();
            let c = qt_catalan(n as u32).expect("n >= 1");
            let top = n * (n - 1) / 2;
            r[0].record(c.swap() == c, || format!("n = {n}: C_n is not symmetric"));

            let lhs = &(&LaurentBivariate::monomial(top, 0, 1)
                * &c.substitute_monomial(Var::Second, (-1, 0)))
                * &q_integer(n + 1);
            let rhs = q_binomial(2 * n, n).expect("0 <= n <= 2n");
            r[1].record(lhs == rhs, || format!("n = {n}: {lhs} != {rhs}"));

            let sum = bigraded_semimodule_sum(n as u32).expect("n >= 1");
            let expected = &LaurentBivariate::monomial(top, 0, 1)
                * &c.substitute_monomial(Var::First, (-1, 0));
            r[2].record(sum == expected, || format!("n = {n}: {sum} != {expected}"));

            if n >= 2 {
                let poly = poincare(n, n + 1).expect("coprime");
                let expected = &LaurentBivariate::t_power(2 * top) * &c.substitute((0, -2), (0, 0));
                r[3].record(poly == expected, || {
                    format!("n = {n}: {poly} != {expected}")
                });
            }
            r
        })
        .collect();
    let mut totals: Vec<CheckReport> = names.iter().map(|s| CheckReport::new(s)).collect();
    for reports in partial {
        for (total, r) in totals.iter_mut().zip(reports) {
            total.merge(r);
        }
    }
    totals
}

/// `bound` caps `p + q`, except for the `catalan` scope where it caps `n`.
/// The `all` scope runs the Catalan checks for every `n` with
/// `n + (n + 1) <= bound`.
pub fn run(scope: Scope, bound: Option<i64>, command: Vec<String>) -> RunReport {
    let (pair_bound, catalan_bound) = match scope {
        Scope::Catalan => (None, Some(bound.unwrap_or(DEFAULT_CATALAN_BOUND))),
        Scope::All => {
            let b = bound.unwrap_or(DEFAULT_PAIR_BOUND);
            (Some(b), Some((b - 1) / 2))
        }
        _ => (Some(bound.unwrap_or(DEFAULT_PAIR_BOUND)), None),
    };
    let pairs = pair_bound.map(coprime_pairs).unwrap_or_default();
    let mut checks = Vec::new();
    if matches!(scope, Scope::Dim | Scope::All) {
        checks.extend(dimension_checks(&pairs));
    }
    if matches!(scope, Scope::Uv | Scope::All) {
        checks.extend(pairing_checks(&pairs));
    }
    if matches!(scope, Scope::Gmap | Scope::All) {
        checks.extend(dual_map_checks(&pairs));
    }
    if let Some(n) = catalan_bound {
        checks.extend(catalan_checks(n));
    }
    let passed = checks.iter().all(|c| c.passed);
    RunReport {
        schema: SCHEMA,
        command,
        scope: format!("{scope:?}").to_lowercase(),
        pair_bound,
        catalan_bound,
        pairs_visited: pairs.len(),
        checks,
        passed,
    }
}

//! Acceptance suite. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line, whatever the capture
//! settings. The process exits non-zero if any criterion fails.
//!
//! Every comparison is exact (integers and integer polynomials); the only
//! tolerances are the wall-clock limits below.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use jacobi_cells::cellgeom::{drop_in_column, lift_in_column, pair_set, reflect_in_row};
use jacobi_cells::diagram::h_plus;
use jacobi_cells::gmap::check_consecutive_pair_facts;
use jacobi_cells::qtpoly::{
    area_generating, bigraded_semimodule_sum, hilbert_cell_poly, poincare, q_binomial, q_integer,
    qt_catalan, tangent_weights, Var,
};
use jacobi_cells::semigroup::coprime_pairs;
use jacobi_cells::{
    certify, check_dual_map_bijective, dual_diagram, enumerate_semimodules, reconstruct_from_dual,
    LaurentBivariate, Part, SemiModule, Semigroup, Staircase, YoungDiagram,
};

/// Wall-clock limit for the (3,4) enumeration, including process start-up.
const ENUMERATION_LIMIT: Duration = Duration::from_secs(1);
/// Wall-clock limit for the exhaustive dimension and pairing sweep.
const SWEEP_LIMIT: Duration = Duration::from_secs(120);
/// Wall-clock limit for the q,t-Catalan identities.
const CATALAN_LIMIT: Duration = Duration::from_secs(60);

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn within(limit: Duration, started: Instant) -> Result<Duration, String> {
    let elapsed = started.elapsed();
    ensure(elapsed < limit, || {
        format!("took {elapsed:?}, limit {limit:?}")
    })?;
    Ok(elapsed)
}

fn binomial(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn diagram(cols: &[u32]) -> YoungDiagram {
    YoungDiagram::new(cols.to_vec()).unwrap()
}

fn enumeration_table() -> Outcome {
    let started = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_jacobi-cells"))
        .args(["enumerate", "3", "4", "--format", "json"])
        .output()
        .map_err(|e| format!("could not run the binary: {e}"))?;
    let elapsed = within(ENUMERATION_LIMIT, started)?;
    ensure(out.status.success(), || {
        format!("exit status {}", out.status)
    })?;
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let rows = doc["semimodules"]
        .as_array()
        .ok_or("no semimodules array")?;

    let ints = |v: &serde_json::Value| -> Vec<i64> {
        v.as_array()
            .unwrap()
            .iter()
            .map(|x| x.as_i64().unwrap())
            .collect()
    };
    let generators: Vec<Vec<i64>> = rows.iter().map(|r| ints(&r["p_generators"])).collect();
    let cogenerators: Vec<Vec<i64>> = rows.iter().map(|r| ints(&r["q_cogenerators"])).collect();
    let dual_areas: Vec<i64> = rows
        .iter()
        .map(|r| ints(&r["dual_diagram"]).iter().sum())
        .collect();

    let expected_generators = vec![
        vec![0, 4, 8],
        vec![0, 4, 5],
        vec![0, 2, 4],
        vec![0, 1, 5],
        vec![0, 1, 2],
    ];
    let expected_cogenerators = vec![
        vec![-4, -1, 2, 5],
        vec![-4, -1, 1, 2],
        vec![-4, -2, -1, 1],
        vec![-4, -3, -1, 2],
        vec![-4, -3, -2, -1],
    ];
    ensure(generators == expected_generators, || {
        format!("p-generators {generators:?}")
    })?;
    ensure(cogenerators == expected_cogenerators, || {
        format!("q-cogenerators {cogenerators:?}")
    })?;
    ensure(dual_areas == [3, 2, 1, 2, 0], || {
        format!("dual areas {dual_areas:?}")
    })?;
    Ok(format!("five rows match, {elapsed:?}"))
}

fn worked_example() -> Outcome {
    let semigroup = Semigroup::new(5, 7).unwrap();
    let module =
        SemiModule::validate(&semigroup, [8, 11, 13, 16, 18, 23]).map_err(|e| e.to_string())?;
    let missing: Vec<i64> = (0..30).filter(|&n| !module.contains(n)).collect();
    ensure(missing == [1, 2, 3, 4, 6, 9], || {
        format!("complement {missing:?}")
    })?;
    ensure(module.p_basis() == [0, 7, 8, 11, 14], || {
        format!("p-basis {:?}", module.p_basis())
    })?;
    ensure(module.q_cogenerators() == [-7, -2, 1, 3, 4, 6, 9], || {
        format!("q-cogenerators {:?}", module.q_cogenerators())
    })?;
    let d = module.to_diagram();
    ensure(d == diagram(&[4, 2]), || format!("diagram {d}"))?;
    let g: Vec<i64> = module.p_basis().into_iter().map(|a| module.g(a)).collect();
    ensure(g == [5, 1, 1, 0, 0], || format!("g-values {g:?}"))?;
    ensure(module.dimension() == 7, || {
        format!("dimension {}", module.dimension())
    })?;
    let hp = h_plus(&d, 5, 7).unwrap() as i64;
    ensure(
        semigroup.delta() == 12 && semigroup.delta() - hp == 7,
        || format!("delta {} h+ {hp}", semigroup.delta()),
    )?;
    Ok("p-basis, cogenerators, diagram, g-values and dim 7 = 12 - 5".into())
}

fn dimension_sweep() -> Outcome {
    let started = Instant::now();
    let mut modules = 0;
    for (p, q) in coprime_pairs(14) {
        let semigroup = Semigroup::new(p, q).unwrap();
        for module in enumerate_semimodules(&semigroup) {
            let d = module.to_diagram();
            let dim = module.dimension();
            let where_ = || format!("({p}, {q}) {d}");
            ensure(module.dimension_via_pairs() == dim, || {
                format!("{}: pair count", where_())
            })?;
            let hp = h_plus(&d, p as u32, q as u32).unwrap() as i64;
            ensure(semigroup.delta() - hp == dim, || {
                format!("{}: delta - h+", where_())
            })?;
            let u = pair_set(&d, p, q).map_err(|e| e.to_string())?;
            ensure(u.len() as i64 == dim, || {
                format!("{}: |U| = {}", where_(), u.len())
            })?;
            certify(&d, p, q).map_err(|e| format!("{}: {e}", where_()))?;
            for tagged in &u {
                let c = tagged.at;
                match tagged.part {
                    Part::Reflected => {
                        let image = reflect_in_row(&d, p, q, c).map_err(|e| e.to_string())?;
                        let back = reflect_in_row(&d, p, q, image).map_err(|e| e.to_string())?;
                        ensure(back == c, || {
                            format!("{}: reflection not an involution at {c}", where_())
                        })?;
                    }
                    Part::Dropped => {
                        let image = drop_in_column(&d, p, q, c).map_err(|e| e.to_string())?;
                        let back = lift_in_column(&d, p, q, image).map_err(|e| e.to_string())?;
                        ensure(back == c, || {
                            format!("{}: lift does not undo drop at {c}", where_())
                        })?;
                    }
                    Part::Shared => {}
                }
            }
            modules += 1;
        }
    }
    let elapsed = within(SWEEP_LIMIT, started)?;
    Ok(format!(
        "{modules} semi-modules over all coprime p + q <= 14, {elapsed:?}"
    ))
}

fn five_six_pairing() -> Outcome {
    let cert = certify(&diagram(&[3, 3]), 5, 6).map_err(|e| e.to_string())?;
    ensure(cert.size() == 6, || format!("|U| = |V| = {}", cert.size()))?;
    ensure(cert.pair_part_sizes() == [4, 1, 1], || {
        format!("U parts {:?}", cert.pair_part_sizes())
    })?;
    ensure(cert.residual_part_sizes() == [4, 1, 1], || {
        format!("V parts {:?}", cert.residual_part_sizes())
    })?;
    Ok("|U| = |V| = 6, parts (4, 1, 1)".into())
}

fn dual_map_bijective() -> Outcome {
    let pairs = coprime_pairs(14);
    for &(p, q) in &pairs {
        let perm = check_dual_map_bijective(p, q).unwrap();
        if let Some(c) = perm.collisions.first() {
            return Err(format!(
                "({p}, {q}): {} and {} both map to {}",
                c.first, c.second, c.image
            ));
        }
        ensure(perm.is_permutation(), || {
            format!("({p}, {q}): image leaves the staircase")
        })?;
        let images: LaurentBivariate = perm
            .pairs
            .iter()
            .map(|(_, img)| LaurentBivariate::t_power(2 * img.area() as i64))
            .sum();
        ensure(images == area_generating(p, q).unwrap(), || {
            format!("({p}, {q}): image areas {images}")
        })?;
    }
    Ok(format!(
        "no collisions over {} pairs; area polynomials agree",
        pairs.len()
    ))
}

fn consecutive_reconstruction() -> Outcome {
    let mut checked = 0;
    for n in 2..=7u32 {
        let (p, q) = (n as i64, n as i64 + 1);
        let perm = check_dual_map_bijective(p, q).unwrap();
        for (src, img) in &perm.pairs {
            let rebuilt = reconstruct_from_dual(img, n).map_err(|e| format!("n = {n}: {e}"))?;
            ensure(Some(&rebuilt) == perm.preimage(img), || {
                format!("n = {n}, {img}: got {rebuilt}")
            })?;
            ensure(&rebuilt == src, || {
                format!("n = {n}, {img}: got {rebuilt}, expected {src}")
            })?;
            checked += 1;
        }
        let semigroup = Semigroup::new(p, q).unwrap();
        for module in enumerate_semimodules(&semigroup) {
            check_consecutive_pair_facts(&module).map_err(|e| format!("n = {n}: {e}"))?;
            dual_diagram(&module).map_err(|e| e.to_string())?;
        }
    }
    Ok(format!(
        "{checked} diagrams reconstructed for n <= 7; generator facts hold"
    ))
}

fn catalan_identities() -> Outcome {
    let started = Instant::now();
    for n in 1..=8i64 {
        let c = qt_catalan(n as u32).unwrap();
        let top = n * (n - 1) / 2;
        ensure(c.swap() == c, || format!("n = {n}: not symmetric"))?;
        let folded =
            &LaurentBivariate::monomial(top, 0, 1) * &c.substitute_monomial(Var::Second, (-1, 0));
        let lhs = &folded * &q_integer(n + 1);
        ensure(lhs == q_binomial(2 * n, n).unwrap(), || {
            format!("n = {n}: specialization {lhs}")
        })?;
        ensure(c.eval_at_ones() == binomial(2 * n, n) / (n + 1), || {
            format!("n = {n}: C_n(1,1) = {}", c.eval_at_ones())
        })?;
        let bigraded = bigraded_semimodule_sum(n as u32).unwrap();
        let expected =
            &LaurentBivariate::monomial(top, 0, 1) * &c.substitute_monomial(Var::First, (-1, 0));
        ensure(bigraded == expected, || {
            format!("n = {n}: bigraded sum {bigraded}")
        })?;
    }
    let elapsed = within(CATALAN_LIMIT, started)?;
    Ok(format!(
        "symmetry, specialization, Catalan count and bigraded sum for n <= 8, {elapsed:?}"
    ))
}

fn poincare_polynomials() -> Outcome {
    let p34 = poincare(3, 4).unwrap();
    ensure(p34.to_string() == "1 + t^2 + 2*t^4 + t^6", || {
        format!("P(3,4) = {p34}")
    })?;
    for n in 2..=8i64 {
        let c = qt_catalan(n as u32).unwrap();
        let expected = &LaurentBivariate::t_power(n * (n - 1)) * &c.substitute((0, -2), (0, 0));
        let poly = poincare(n, n + 1).unwrap();
        ensure(poly == expected, || {
            format!("n = {n}: {poly} vs {expected}")
        })?;
    }
    for (p, q) in coprime_pairs(16) {
        let value = poincare(p, q).unwrap().eval_at_ones();
        ensure(value == binomial(p + q, p) / (p + q), || {
            format!("({p}, {q}): P(1) = {value}")
        })?;
    }
    Ok("(3,4) table value, consecutive pairs n <= 8, counts for p + q <= 16".into())
}

fn tangent_consistency() -> Outcome {
    let mut diagrams = 0;
    for (p, q) in coprime_pairs(12) {
        let stair = Staircase::new(p, q).unwrap();
        for d in stair.subdiagrams() {
            let expected = d.area() as i64 + h_plus(&d, p as u32, q as u32).unwrap() as i64;
            let positive = tangent_weights(&d).paired_positive_count(p, q);
            ensure(positive == expected, || {
                format!("({p}, {q}) {d}: {positive} positive weights, expected {expected}")
            })?;
            diagrams += 1;
        }
        let total: i64 = (0..=stair.area() as i64)
            .map(|h| hilbert_cell_poly(p, q, h).unwrap().eval_at_ones())
            .sum();
        let count = stair.subdiagrams().count() as i64;
        ensure(total == count, || {
            format!("({p}, {q}): cell total {total}, subdiagrams {count}")
        })?;
    }
    Ok(format!("{diagrams} diagrams over all coprime p + q <= 12"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("enumeration table for (3,4)", enumeration_table),
        ("worked example over (5,7)", worked_example),
        (
            "dimension formulas and pairing, p + q <= 14",
            dimension_sweep,
        ),
        ("pairing part sizes for (5,6), D = (3,3)", five_six_pairing),
        ("dual map bijective, p + q <= 14", dual_map_bijective),
        (
            "reconstruction of the dual map, n <= 7",
            consecutive_reconstruction,
        ),
        ("q,t-Catalan identities, n <= 8", catalan_identities),
        ("Poincaré polynomials", poincare_polynomials),
        (
            "tangent weights and cell totals, p + q <= 12",
            tangent_consistency,
        ),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! The dual diagram of a semi-module and the dual map on staircase
//! subdiagrams.
//!
//! For a semi-module `Δ` with `p`-basis `a_0 < … < a_{p-1}`, the dual
//! diagram has column heights `g(a_0), …, g(a_{p-1})`; its area is
//! `dim Δ`. Composing with the inverse of `Δ ↦ D(Δ)` gives a self-map of
//! the subdiagrams of the staircase. For the pairs `(n, n + 1)` the map is
//! a bijection and [`reconstruct_from_dual`] inverts it directly.

use std::collections::HashMap;

use serde::Serialize;

use crate::diagram::{Staircase, YoungDiagram};
use crate::error::{Error, Result};
use crate::semigroup::Semigroup;
use crate::semimodule::SemiModule;

/// The diagram with columns `g(a_j)` in `p`-basis order.
///
/// The `g`-values are expected to be weakly decreasing; they are not
/// sorted, so a violation surfaces as [`Error::NotWeaklyDecreasing`].
pub fn dual_diagram(module: &SemiModule) -> Result<YoungDiagram> {
    let columns = module
        .p_basis()
        .into_iter()
        .map(|a| module.g(a) as u32)
        .collect();
    YoungDiagram::new(columns)
}

/// `D ↦ dual_diagram(Δ(D))` for `D` inside the staircase of `(p, q)`.
pub fn dual_map(d: &YoungDiagram, p: i64, q: i64) -> Result<YoungDiagram> {
    let semigroup = Semigroup::new(p, q)?;
    dual_diagram(&SemiModule::from_diagram(&semigroup, d)?)
}

/// Two sources with the same image.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Collision {
    pub first: YoungDiagram,
    pub second: YoungDiagram,
    pub image: YoungDiagram,
}

/// The dual map tabulated on every staircase subdiagram, in canonical
/// order, with any collisions found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualMapPermutation {
    pub p: i64,
    pub q: i64,
    pub pairs: Vec<(YoungDiagram, YoungDiagram)>,
    pub collisions: Vec<Collision>,
}

impl DualMapPermutation {
    /// Images are pairwise distinct and stay inside the staircase.
    pub fn is_permutation(&self) -> bool {
        let stair = Staircase::unchecked(self.p, self.q);
        self.collisions.is_empty()
            && self
                .pairs
                .iter()
                .all(|(_, img)| stair.contains_diagram(img))
    }

    /// Brute-force inverse: the source of `image`, if unique.
    pub fn preimage(&self, image: &YoungDiagram) -> Option<&YoungDiagram> {
        let mut hits = self
            .pairs
            .iter()
            .filter(|(_, img)| img == image)
            .map(|(src, _)| src);
        let first = hits.next()?;
        hits.next().is_none().then_some(first)
    }

    /// Number of diagrams of each area, over sources and over images.
    pub fn area_profiles(&self) -> (Vec<u64>, Vec<u64>) {
        let top = Staircase::unchecked(self.p, self.q).area() as usize;
        let mut sources = vec![0; top + 1];
        let mut images = vec![0; top + 1];
        for (src, img) in &self.pairs {
            sources[src.area() as usize] += 1;
            images[(img.area() as usize).min(top)] += 1;
        }
        (sources, images)
    }
}

/// Applies the dual map to every subdiagram and records collisions rather
/// than stopping at the first one.
pub fn check_dual_map_bijective(p: i64, q: i64) -> Result<DualMapPermutation> {
    let semigroup = Semigroup::new(p, q)?;
    let stair = Staircase::new(p, q)?;
    let mut pairs: Vec<(YoungDiagram, YoungDiagram)> = Vec::new();
    let mut seen: HashMap<YoungDiagram, usize> = HashMap::new();
    let mut collisions = Vec::new();
    for d in stair.subdiagrams() {
        let image = dual_diagram(&SemiModule::from_diagram(&semigroup, &d)?)?;
        if let Some(&i) = seen.get(&image) {
            collisions.push(Collision {
                first: pairs[i].0.clone(),
                second: d.clone(),
                image: image.clone(),
            });
        } else {
            seen.insert(image.clone(), pairs.len());
        }
        pairs.push((d, image));
    }
    Ok(DualMapPermutation {
        p,
        q,
        pairs,
        collisions,
    })
}

fn not_in_image(dp: &YoungDiagram, reason: impl Into<String>) -> Error {
    Error::NotInImage {
        columns: dp.columns().to_vec(),
        reason: reason.into(),
    }
}

/// Inverts the dual map for the pair `(n, n + 1)`.
///
/// Reading the columns of `dp` as `g(a_0) ≥ … ≥ g(a_{n-1})`:
///
/// 1. the number `m_k` of generators in `[kn, (k+1)n)` follows from
///    `m_k = n - g(a_S) - S`, where `S = m_0 + … + m_{k-1}`;
/// 2. for `a_j` in window `k` and `a_l` in window `k + 1`, the residue of
///    `a_l` is below that of `a_j` iff `l < n - g(a_j)`;
/// 3. for windows further apart, the residue of `a_j` is below that of
///    `a_l` iff some generator in the window just below `a_l` has a residue
///    strictly between them.
///
/// Merging windows one at a time gives the residue of every generator and
/// hence `Δ`. The result is checked to map back onto `dp`.
pub fn reconstruct_from_dual(dp: &YoungDiagram, n: u32) -> Result<YoungDiagram> {
    if n < 2 {
        return Err(Error::IndexTooSmall(n as i64));
    }
    let (p, q) = (n as i64, n as i64 + 1);
    let semigroup = Semigroup::new(p, q)?;
    if !Staircase::unchecked(p, q).contains_diagram(dp) {
        return Err(Error::NotInStaircase(dp.columns().to_vec(), p, q));
    }
    let n = n as usize;
    let g: Vec<usize> = (1..=n as u32).map(|x| dp.height(x) as usize).collect();

    // step 1: window of each generator index
    let mut window = Vec::with_capacity(n);
    let mut k = 0;
    while window.len() < n {
        let s = window.len();
        let m = n as i64 - g[s] as i64 - s as i64;
        if m <= 0 || s + m as usize > n {
            return Err(not_in_image(
                dp,
                format!("window {k} would hold {m} generators"),
            ));
        }
        window.extend(std::iter::repeat_n(k, m as usize));
        k += 1;
    }

    // steps 2 and 3: generator indices ordered by residue
    let mut order: Vec<usize> = (0..n).filter(|&i| window[i] == 0).collect();
    for w in 1..k {
        let incoming: Vec<usize> = (0..n).filter(|&i| window[i] == w).collect();
        let mut cuts = Vec::with_capacity(incoming.len());
        for &beta in &incoming {
            // below[pos]: residue of order[pos] is smaller than that of beta
            let mut below = vec![false; order.len()];
            for (pos, &alpha) in order.iter().enumerate() {
                if window[alpha] + 1 == w {
                    below[pos] = beta >= n - g[alpha];
                }
            }
            for pos in 0..order.len() {
                if window[order[pos]] + 1 < w {
                    below[pos] = (pos + 1..order.len())
                        .any(|later| window[order[later]] + 1 == w && below[later]);
                }
            }
            let cut = below.iter().take_while(|&&b| b).count();
            if below[cut..].iter().any(|&b| b) {
                return Err(not_in_image(
                    dp,
                    format!("residues of generator {beta} do not merge"),
                ));
            }
            if cuts.last().is_some_and(|&prev| prev > cut) {
                return Err(not_in_image(dp, format!("window {w} merges out of order")));
            }
            cuts.push(cut);
        }
        for (offset, (&beta, &cut)) in incoming.iter().zip(&cuts).enumerate() {
            order.insert(cut + offset, beta);
        }
    }

    let mut generators = vec![0i64; n];
    for (residue, &idx) in order.iter().enumerate() {
        generators[idx] = (window[idx] * n + residue) as i64;
    }
    if generators.windows(2).any(|w| w[0] >= w[1]) {
        return Err(not_in_image(
            dp,
            format!("generators {generators:?} are not increasing"),
        ));
    }

    let by_residue: HashMap<i64, i64> = generators.iter().map(|&a| (a % p, a)).collect();
    let cogaps = semigroup
        .gaps()
        .iter()
        .copied()
        .filter(|&x| x >= by_residue[&(x % p)]);
    let module = SemiModule::validate(&semigroup, cogaps)
        .map_err(|e| not_in_image(dp, format!("reconstructed set is not a semi-module: {e}")))?;
    if module.p_basis() != generators {
        return Err(not_in_image(dp, "reconstructed generators are not a basis"));
    }
    if dual_diagram(&module)? != *dp {
        return Err(not_in_image(dp, "reconstruction does not map back"));
    }
    Ok(module.to_diagram())
}

/// Checks the structural facts behind [`reconstruct_from_dual`] on one
/// semi-module over `(n, n + 1)`, returning a description of the first
/// failure:
///
/// * the number of generators in `[a_i + n, a_{i+1} + n]` is
///   `g(a_i) - g(a_{i+1})`;
/// * `g(a_i) = g(a_{i+1})` iff `[a_i, a_{i+1}] ⊆ Δ`;
/// * with `s_k` the least generator in `[kn, (k+1)n]`, `[kn, s_k] ⊆ Δ`;
/// * generators `α, β` with `β - α ≡ 1 (mod n)` satisfy `β ≤ α + n + 1`.
pub fn check_consecutive_pair_facts(module: &SemiModule) -> std::result::Result<(), String> {
    let n = module.p();
    if module.q() != n + 1 {
        return Err(format!(
            "pair ({}, {}) is not of the form (n, n+1)",
            n,
            module.q()
        ));
    }
    let basis = module.p_basis();
    let g: Vec<i64> = basis.iter().map(|&a| module.g(a)).collect();
    let is_generator = |x: i64| basis.binary_search(&x).is_ok();
    let all_in = |lo: i64, hi: i64| (lo..=hi).all(|x| module.contains(x));

    for i in 0..basis.len() - 1 {
        let (lo, hi) = (basis[i] + n, basis[i + 1] + n);
        let count = (lo..=hi).filter(|&x| is_generator(x)).count() as i64;
        if count != g[i] - g[i + 1] {
            return Err(format!(
                "{count} generators in [{lo}, {hi}] but g difference is {}",
                g[i] - g[i + 1]
            ));
        }
        if (g[i] == g[i + 1]) != all_in(basis[i], basis[i + 1]) {
            return Err(format!(
                "g({}) = g({}) does not match interval containment",
                basis[i],
                basis[i + 1]
            ));
        }
    }
    let top = *basis.last().unwrap();
    for k in 0..=top / n {
        if let Some(s) = (k * n..=(k + 1) * n).find(|&x| is_generator(x)) {
            if !all_in(k * n, s) {
                return Err(format!(
                    "[{}, {s}] is not contained in the semi-module",
                    k * n
                ));
            }
        }
    }
    for &alpha in &basis {
        for &beta in &basis {
            if (beta - alpha).rem_euclid(n) == 1 && beta > alpha + n + 1 {
                return Err(format!(
                    "generators {alpha}, {beta} are more than n + 1 apart"
                ));
            }
        }
    }
    Ok(())
}

//! Exact bivariate Laurent polynomials with integer coefficients, and the
//! generating functions built from them: q,t-Catalan numbers, Poincaré
//! polynomials of the cell decompositions, Gaussian binomials, and the
//! torus weights of monomial ideals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::diagram::{arm_unchecked, dinv, h_plus, leg_unchecked, Staircase, YoungDiagram};
use crate::error::{Error, Result};
use crate::semigroup::Semigroup;
use crate::semimodule::enumerate_semimodules;

/// Exponent pair `(e1, e2)` of a monomial `x1^e1 * x2^e2`.
pub type Exponents = (i64, i64);

/// Selects one of the two variables of a [`LaurentBivariate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    First,
    Second,
}

/// A finite sum of `c * x1^e1 * x2^e2` with nonzero integer `c` and
/// arbitrary integer exponents. The variable names only affect rendering;
/// equality compares terms.
///
/// Arithmetic panics on `i64` overflow, which does not occur for the
/// documented ranges (`n <= 14`, `p + q <= 24`).
#[derive(Debug, Clone)]
pub struct LaurentBivariate {
    terms: BTreeMap<Exponents, i64>,
    vars: [&'static str; 2],
}

impl PartialEq for LaurentBivariate {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for LaurentBivariate {}

impl Default for LaurentBivariate {
    fn default() -> Self {
        Self::zero()
    }
}

impl LaurentBivariate {
    pub const QT: [&'static str; 2] = ["q", "t"];
    pub const TORUS: [&'static str; 2] = ["t1", "t2"];

    pub fn zero() -> Self {
        LaurentBivariate {
            terms: BTreeMap::new(),
            vars: Self::QT,
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn monomial(e1: i64, e2: i64, coeff: i64) -> Self {
        let mut p = Self::zero();
        p.add_term((e1, e2), coeff);
        p
    }

    /// `t^e` in the second variable.
    pub fn t_power(e: i64) -> Self {
        Self::monomial(0, e, 1)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Exponents, i64)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn with_vars(mut self, vars: [&'static str; 2]) -> Self {
        self.vars = vars;
        self
    }

    pub fn vars(&self) -> [&'static str; 2] {
        self.vars
    }

    pub fn add_term(&mut self, e: Exponents, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry(e).or_insert(0);
        *slot = slot.checked_add(coeff).expect("coefficient overflow");
        if *slot == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e1: i64, e2: i64) -> i64 {
        self.terms.get(&(e1, e2)).copied().unwrap_or(0)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (Exponents, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn scalar_mul(&self, k: i64) -> Self {
        let mut out = Self::zero().with_vars(self.vars);
        for (e, c) in self.terms() {
            out.add_term(e, c.checked_mul(k).expect("coefficient overflow"));
        }
        out
    }

    /// Replaces `x1 ↦ x1^a x2^b` and `x2 ↦ x1^c x2^d`, given as
    /// `first = (a, b)` and `second = (c, d)`. An image `(0, 0)` sets the
    /// variable to 1.
    pub fn substitute(&self, first: Exponents, second: Exponents) -> Self {
        let mut out = Self::zero().with_vars(self.vars);
        for ((e1, e2), c) in self.terms() {
            out.add_term(
                (e1 * first.0 + e2 * second.0, e1 * first.1 + e2 * second.1),
                c,
            );
        }
        out
    }

    /// Substitutes a monomial for one variable, leaving the other alone.
    pub fn substitute_monomial(&self, var: Var, image: Exponents) -> Self {
        match var {
            Var::First => self.substitute(image, (0, 1)),
            Var::Second => self.substitute((1, 0), image),
        }
    }

    /// Exchanges the two variables.
    pub fn swap(&self) -> Self {
        self.substitute((0, 1), (1, 0))
    }

    /// Value at `x1 = x2 = 1`.
    pub fn eval_at_ones(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Sum of coefficients of the terms whose exponents pair positively
    /// with `(p, q)`, i.e. `p * e1 + q * e2 > 0`.
    pub fn paired_positive_count(&self, p: i64, q: i64) -> i64 {
        self.terms()
            .filter(|&((e1, e2), _)| p * e1 + q * e2 > 0)
            .map(|(_, c)| c)
            .sum()
    }

    fn display_order(&self) -> Vec<(Exponents, i64)> {
        let mut terms: Vec<_> = self.terms().collect();
        if terms.iter().any(|&((e1, _), _)| e1 != 0) {
            terms.reverse();
        }
        terms
    }
}

impl Add for &LaurentBivariate {
    type Output = LaurentBivariate;

    fn add(self, rhs: &LaurentBivariate) -> LaurentBivariate {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &LaurentBivariate {
    type Output = LaurentBivariate;

    fn sub(self, rhs: &LaurentBivariate) -> LaurentBivariate {
        self + &(-rhs)
    }
}

impl Neg for &LaurentBivariate {
    type Output = LaurentBivariate;

    fn neg(self) -> LaurentBivariate {
        self.scalar_mul(-1)
    }
}

impl Mul for &LaurentBivariate {
    type Output = LaurentBivariate;

    fn mul(self, rhs: &LaurentBivariate) -> LaurentBivariate {
        let mut out = LaurentBivariate::zero().with_vars(self.vars);
        for ((a1, a2), c) in self.terms() {
            for ((b1, b2), d) in rhs.terms() {
                out.add_term(
                    (a1 + b1, a2 + b2),
                    c.checked_mul(d).expect("coefficient overflow"),
                );
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait for LaurentBivariate {
            type Output = LaurentBivariate;
            fn $method(self, rhs: LaurentBivariate) -> LaurentBivariate {
                (&self).$method(&rhs)
            }
        }
    )*};
}

owned_ops!(Add add, Sub sub, Mul mul);

impl std::iter::Sum for LaurentBivariate {
    fn sum<I: Iterator<Item = LaurentBivariate>>(iter: I) -> Self {
        let mut total = LaurentBivariate::zero();
        for p in iter {
            total.vars = p.vars;
            for (e, c) in p.terms() {
                total.add_term(e, c);
            }
        }
        total
    }
}

/// Text form such as `q^3 + q^2*t + q*t^2 + q*t + t^3`.
///
/// Terms involving the first variable are listed in decreasing
/// lexicographic order of `(e1, e2)`. A polynomial in the second variable
/// alone is listed in increasing degree: `1 + t^2 + 2*t^4 + t^6`.
impl fmt::Display for LaurentBivariate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.display_order();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, ((e1, e2), c)) in terms.into_iter().enumerate() {
            match (i, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut factors = Vec::new();
            for (name, e) in self.vars.iter().zip([e1, e2]) {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    e => factors.push(format!("{name}^{e}")),
                }
            }
            let c = c.unsigned_abs();
            match (factors.is_empty(), c) {
                (true, c) => write!(f, "{c}")?,
                (false, 1) => write!(f, "{}", factors.join("*"))?,
                (false, c) => write!(f, "{c}*{}", factors.join("*"))?,
            }
        }
        Ok(())
    }
}

/// `{"terms":[[e1,e2,coeff],...]}` in ascending exponent order.
impl Serialize for LaurentBivariate {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<[i64; 3]> = self.terms().map(|((a, b), c)| [a, b, c]).collect();
        let mut s = serializer.serialize_struct("LaurentBivariate", 1)?;
        s.serialize_field("terms", &terms)?;
        s.end()
    }
}

/// The Gaussian binomial `[n choose k]_q` as a polynomial in the first
/// variable, via `[n,k] = [n-1,k-1] + q^k [n-1,k]`.
pub fn q_binomial(n: i64, k: i64) -> Result<LaurentBivariate> {
    if k < 0 || k > n {
        return Err(Error::BinomialRange { n, k });
    }
    let (n, k) = (n as usize, k as usize);
    // rows[j] holds the coefficients of [m choose j] for the current m
    let mut rows: Vec<Vec<i64>> = vec![vec![1]];
    for m in 1..=n {
        let mut next = vec![vec![1]];
        for j in 1..=m.min(k) {
            let left = &rows[j - 1];
            let mut coeffs = left.clone();
            if let Some(right) = rows.get(j) {
                coeffs.resize(coeffs.len().max(right.len() + j), 0);
                for (i, c) in right.iter().enumerate() {
                    coeffs[i + j] = coeffs[i + j].checked_add(*c).expect("coefficient overflow");
                }
            }
            next.push(coeffs);
        }
        rows = next;
    }
    Ok(LaurentBivariate::from_terms(
        rows[k].iter().enumerate().map(|(i, &c)| ((i as i64, 0), c)),
    ))
}

/// `[k]_q = 1 + q + … + q^{k-1}`.
pub fn q_integer(k: i64) -> LaurentBivariate {
    LaurentBivariate::from_terms((0..k).map(|i| ((i, 0), 1)))
}

fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// `C_n(q, t)`: the sum over subdiagrams `D` of the `(n, n+1)` staircase
/// of `q^dinv(D) t^(n(n-1)/2 - |D|)`.
pub fn qt_catalan(n: u32) -> Result<LaurentBivariate> {
    match n {
        0 => Err(Error::IndexTooSmall(0)),
        1 => Ok(LaurentBivariate::one()),
        _ => {
            let top = binom2(n as i64);
            let stair = Staircase::new(n as i64, n as i64 + 1)?;
            let mut poly = LaurentBivariate::zero();
            for d in stair.subdiagrams() {
                poly.add_term((dinv(&d, n)? as i64, top - d.area() as i64), 1);
            }
            Ok(poly)
        }
    }
}

/// The sum over semi-modules of `Γ^{n,n+1}` of `q^dim t^(number of gaps)`.
pub fn bigraded_semimodule_sum(n: u32) -> Result<LaurentBivariate> {
    match n {
        0 => Err(Error::IndexTooSmall(0)),
        1 => Ok(LaurentBivariate::one()),
        _ => {
            let semigroup = Semigroup::new(n as i64, n as i64 + 1)?;
            let mut poly = LaurentBivariate::zero();
            for m in enumerate_semimodules(&semigroup) {
                poly.add_term((m.dimension(), m.gaps_count()), 1);
            }
            Ok(poly)
        }
    }
}

/// Poincaré polynomial of the cell decomposition: `Σ_Δ t^(2 dim Δ)`.
pub fn poincare(p: i64, q: i64) -> Result<LaurentBivariate> {
    let semigroup = Semigroup::new(p, q)?;
    let mut poly = LaurentBivariate::zero();
    for m in enumerate_semimodules(&semigroup) {
        poly.add_term((0, 2 * m.dimension()), 1);
    }
    Ok(poly)
}

/// `Σ_D t^(2|D|)` over subdiagrams of the staircase.
pub fn area_generating(p: i64, q: i64) -> Result<LaurentBivariate> {
    let mut poly = LaurentBivariate::zero();
    for d in Staircase::new(p, q)?.subdiagrams() {
        poly.add_term((0, 2 * d.area() as i64), 1);
    }
    Ok(poly)
}

/// Torus weights of the tangent space at the monomial ideal of `d`:
/// `Σ_c t1^(l+1) t2^(-a) + t1^(-l) t2^(a+1)`.
pub fn tangent_weights(d: &YoungDiagram) -> LaurentBivariate {
    let mut poly = LaurentBivariate::zero().with_vars(LaurentBivariate::TORUS);
    for c in d.boxes() {
        let a = arm_unchecked(d, c) as i64;
        let l = leg_unchecked(d, c) as i64;
        poly.add_term((l + 1, -a), 1);
        poly.add_term((-l, a + 1), 1);
    }
    poly
}

/// `Σ_{|D| = h} t^(2(h + h+(D)))` over staircase subdiagrams of area `h`.
///
/// Each exponent is also checked against the number of tangent weights
/// that pair positively with `(p, q)`.
pub fn hilbert_cell_poly(p: i64, q: i64, h: i64) -> Result<LaurentBivariate> {
    let stair = Staircase::new(p, q)?;
    let delta = stair.area() as i64;
    if !(0..=delta).contains(&h) {
        return Err(Error::AreaOutOfRange { h, delta });
    }
    let mut poly = LaurentBivariate::zero();
    for d in stair.subdiagrams().filter(|d| d.area() as i64 == h) {
        let dim = h + h_plus(&d, p as u32, q as u32)? as i64;
        assert_eq!(
            dim,
            tangent_weights(&d).paired_positive_count(p, q),
            "cell dimension disagrees with tangent weights at {d}"
        );
        poly.add_term((0, 2 * dim), 1);
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e1: i64, e2: i64, c: i64) -> LaurentBivariate {
        LaurentBivariate::monomial(e1, e2, c)
    }

    #[test]
    fn ring_basics() {
        let q_plus_t = &m(1, 0, 1) + &m(0, 1, 1);
        assert_eq!(
            q_plus_t.substitute_monomial(Var::First, (-1, 0)),
            &m(-1, 0, 1) + &m(0, 1, 1)
        );
        assert_eq!(&m(1, 1, 1) * &m(-1, 0, 1), m(0, 1, 1));
        assert_eq!(&m(3, 0, 1) * &LaurentBivariate::one(), m(3, 0, 1));
        assert!((&q_plus_t - &q_plus_t).is_zero());
        // t ↦ q^-1 folds the second exponent into the first
        assert_eq!(
            m(2, 3, 5).substitute_monomial(Var::Second, (-1, 0)),
            m(-1, 0, 5)
        );
        assert_eq!(m(2, 3, 1).swap(), m(3, 2, 1));
    }

    #[test]
    fn rendering() {
        assert_eq!(
            qt_catalan(3).unwrap().to_string(),
            "q^3 + q^2*t + q*t^2 + q*t + t^3"
        );
        assert_eq!(poincare(3, 4).unwrap().to_string(), "1 + t^2 + 2*t^4 + t^6");
        assert_eq!(LaurentBivariate::zero().to_string(), "0");
        assert_eq!((&m(-1, 0, -2) + &m(0, 0, 3)).to_string(), "3 - 2*q^-1");
        assert_eq!(
            tangent_weights(&YoungDiagram::new(vec![1]).unwrap()).to_string(),
            "t1 + t2"
        );
    }

    #[test]
    fn json_shape() {
        let p = &m(1, 0, 1) + &m(0, 1, -2);
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"terms":[[0,1,-2],[1,0,1]]}"#
        );
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(q_binomial(2, 1).unwrap(), &m(0, 0, 1) + &m(1, 0, 1));
        let expected = LaurentBivariate::from_terms([
            ((0, 0), 1),
            ((1, 0), 1),
            ((2, 0), 2),
            ((3, 0), 1),
            ((4, 0), 1),
        ]);
        assert_eq!(q_binomial(4, 2).unwrap(), expected);
        assert_eq!(q_binomial(7, 0).unwrap(), LaurentBivariate::one());
        assert_eq!(q_binomial(3, 4), Err(Error::BinomialRange { n: 3, k: 4 }));
        assert!(q_binomial(3, -1).is_err());
        for n in 0..12 {
            for k in 0..=n {
                let b = q_binomial(n, k).unwrap();
                let binom = (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1));
                assert_eq!(b.eval_at_ones(), binom);
                assert_eq!(b.terms().map(|((e, _), _)| e).max(), Some(k * (n - k)));
                assert!(b.terms().all(|(_, c)| c > 0));
            }
        }
    }

    #[test]
    fn catalan_small() {
        assert_eq!(qt_catalan(2).unwrap(), &m(1, 0, 1) + &m(0, 1, 1));
        assert_eq!(qt_catalan(3).unwrap().eval_at_ones(), 5);
        assert_eq!(qt_catalan(1).unwrap(), LaurentBivariate::one());
        assert!(qt_catalan(0).is_err());
    }

    #[test]
    fn bigraded_small() {
        assert_eq!(
            bigraded_semimodule_sum(2).unwrap(),
            &m(0, 0, 1) + &m(1, 1, 1)
        );
        assert_eq!(bigraded_semimodule_sum(1).unwrap(), LaurentBivariate::one());
        let c3 = qt_catalan(3)
            .unwrap()
            .substitute_monomial(Var::First, (-1, 0));
        assert_eq!(bigraded_semimodule_sum(3).unwrap(), &m(3, 0, 1) * &c3);
    }

    #[test]
    fn poincare_small() {
        assert_eq!(poincare(2, 3).unwrap(), &m(0, 0, 1) + &m(0, 2, 1));
        assert_eq!(area_generating(3, 4).unwrap(), poincare(3, 4).unwrap());
        assert_eq!(area_generating(2, 3).unwrap(), &m(0, 0, 1) + &m(0, 2, 1));
        let a57 = area_generating(5, 7).unwrap();
        assert_eq!(a57.eval_at_ones(), 66);
        assert_eq!(a57.terms().map(|((_, e), _)| e).max(), Some(24));
    }

    #[test]
    fn tangent_weight_examples() {
        assert!(tangent_weights(&YoungDiagram::empty()).is_zero());
        let col = YoungDiagram::new(vec![2]).unwrap();
        let expected =
            LaurentBivariate::from_terms([((2, 0), 1), ((-1, 1), 1), ((1, 0), 1), ((0, 1), 1)]);
        assert_eq!(tangent_weights(&col), expected);
    }

    #[test]
    fn hilbert_cells() {
        assert_eq!(hilbert_cell_poly(5, 7, 0).unwrap(), LaurentBivariate::one());
        assert_eq!(hilbert_cell_poly(3, 4, 1).unwrap(), m(0, 4, 1));
        assert_eq!(hilbert_cell_poly(3, 4, 3).unwrap(), m(0, 12, 1));
        assert_eq!(
            hilbert_cell_poly(3, 4, 4),
            Err(Error::AreaOutOfRange { h: 4, delta: 3 })
        );
        assert!(hilbert_cell_poly(3, 4, -1).is_err());
    }

    fn poly_strategy() -> impl Strategy<Value = LaurentBivariate> {
        prop::collection::vec(((-4i64..5, -4i64..5), -9i64..10), 0..6)
            .prop_map(LaurentBivariate::from_terms)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &LaurentBivariate::one(), a.clone());
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn substitution_is_a_ring_map(a in poly_strategy(), b in poly_strategy()) {
            let s = |p: &LaurentBivariate| p.substitute((-1, 0), (1, 1));
            prop_assert_eq!(s(&(&a * &b)), &s(&a) * &s(&b));
            prop_assert_eq!(s(&(&a + &b)), &s(&a) + &s(&b));
            prop_assert_eq!(a.swap().swap(), a.clone());
        }
    }
}

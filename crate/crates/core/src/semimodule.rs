//! 0-normalized semi-modules over `Γ = <p, q>`.
//!
//! A semi-module `Δ ⊆ Z>=0` contains `0` and satisfies `Δ + Γ ⊆ Δ`, so it
//! is determined by the finite set `Δ \ Γ` of gaps it adds. That set is
//! the canonical storage; the Young diagram is derived from it through the
//! box labels and is never used to validate it.

use std::collections::BTreeSet;

use crate::diagram::{label_unchecked, LatticeBox, Staircase, YoungDiagram};
use crate::error::{Error, Result};
use crate::semigroup::Semigroup;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiModule {
    semigroup: Semigroup,
    cogaps: Vec<i64>,
}

impl SemiModule {
    /// Checks that every element is a gap and that adding `p` or `q` to an
    /// element lands in `Γ` or back in the set.
    pub fn validate(semigroup: &Semigroup, cogaps: impl IntoIterator<Item = i64>) -> Result<Self> {
        let cogaps: BTreeSet<i64> = cogaps.into_iter().collect();
        if let Some(&bad) = cogaps.iter().find(|&&e| !semigroup.is_gap(e)) {
            return Err(Error::NotAGap(bad));
        }
        for &e in &cogaps {
            for step in [semigroup.p(), semigroup.q()] {
                let m = e + step;
                if !semigroup.contains(m) && !cogaps.contains(&m) {
                    return Err(Error::NotClosed {
                        element: e,
                        step,
                        missing: m,
                    });
                }
            }
        }
        Ok(SemiModule {
            semigroup: semigroup.clone(),
            cogaps: cogaps.into_iter().collect(),
        })
    }

    /// `Δ = Γ`.
    pub fn semigroup_itself(semigroup: &Semigroup) -> Self {
        SemiModule {
            semigroup: semigroup.clone(),
            cogaps: Vec::new(),
        }
    }

    /// `Δ = Z>=0`.
    pub fn everything(semigroup: &Semigroup) -> Self {
        SemiModule {
            semigroup: semigroup.clone(),
            cogaps: semigroup.gaps().to_vec(),
        }
    }

    /// The semi-module whose added gaps are the labels of the boxes of `d`.
    pub fn from_diagram(semigroup: &Semigroup, d: &YoungDiagram) -> Result<Self> {
        let (p, q) = (semigroup.p(), semigroup.q());
        if !Staircase::unchecked(p, q).contains_diagram(d) {
            return Err(Error::NotInStaircase(d.columns().to_vec(), p, q));
        }
        let mut cogaps: Vec<i64> = d
            .boxes()
            .map(|c| label_unchecked(p, q, c.x as i64, c.y as i64))
            .collect();
        cogaps.sort_unstable();
        Ok(SemiModule {
            semigroup: semigroup.clone(),
            cogaps,
        })
    }

    pub fn semigroup(&self) -> &Semigroup {
        &self.semigroup
    }

    pub fn p(&self) -> i64 {
        self.semigroup.p()
    }

    pub fn q(&self) -> i64 {
        self.semigroup.q()
    }

    /// Sorted `Δ \ Γ`.
    pub fn cogaps(&self) -> &[i64] {
        &self.cogaps
    }

    pub fn contains(&self, n: i64) -> bool {
        self.semigroup.contains(n) || self.cogaps.binary_search(&n).is_ok()
    }

    /// The diagram of staircase boxes whose labels lie in `Δ \ Γ`.
    ///
    /// Panics if those boxes do not form a Young diagram, which cannot
    /// happen for a validated semi-module.
    pub fn to_diagram(&self) -> YoungDiagram {
        let (p, q) = (self.p(), self.q());
        let stair = Staircase::unchecked(p, q);
        let mut columns = Vec::with_capacity(p as usize);
        for (i, &h) in stair.heights().iter().enumerate() {
            let x = i as i64 + 1;
            let inside: Vec<bool> = (1..=h as i64)
                .map(|y| {
                    self.cogaps
                        .binary_search(&label_unchecked(p, q, x, y))
                        .is_ok()
                })
                .collect();
            let height = inside.iter().take_while(|&&b| b).count();
            assert!(
                inside[height..].iter().all(|&b| !b),
                "labels of {:?} leave a hole in column {x}",
                self.cogaps
            );
            columns.push(height as u32);
        }
        let d = YoungDiagram::new(columns).expect("labels of a semi-module form a Young diagram");
        assert_eq!(d.area() as usize, self.cogaps.len());
        d
    }

    /// The smallest element of `Δ` in each residue class mod `p`, sorted.
    pub fn p_basis(&self) -> Vec<i64> {
        let p = self.p();
        let mut basis: Vec<i64> = (0..p)
            .map(|r| {
                (0..)
                    .map(|k| r + k * p)
                    .find(|&n| self.contains(n))
                    .expect("every residue class meets Γ")
            })
            .collect();
        basis.sort_unstable();
        basis
    }

    /// The integers `y` with `y ∉ Δ` and `y + q ∈ Δ`, sorted. There are
    /// exactly `q` of them, all in `[-q, pq)`.
    pub fn q_cogenerators(&self) -> Vec<i64> {
        let (p, q) = (self.p(), self.q());
        let cogens: Vec<i64> = (-q..p * q)
            .filter(|&y| !self.contains(y) && self.contains(y + q))
            .collect();
        assert_eq!(cogens.len() as i64, q);
        cogens
    }

    /// `|[a, a + q) \ Δ|`.
    pub fn g(&self, a: i64) -> i64 {
        (a..a + self.q()).filter(|&n| !self.contains(n)).count() as i64
    }

    /// Cell dimension: the sum of `g` over the `p`-basis.
    pub fn dimension(&self) -> i64 {
        self.p_basis().into_iter().map(|a| self.g(a)).sum()
    }

    /// Number of pairs (generator `a`, cogenerator `b`) with `a < b`.
    pub fn dimension_via_pairs(&self) -> i64 {
        let cogens = self.q_cogenerators();
        self.p_basis()
            .into_iter()
            .map(|a| cogens.iter().filter(|&&b| a < b).count() as i64)
            .sum()
    }

    /// `|Z>=0 \ Δ|`.
    pub fn gaps_count(&self) -> i64 {
        self.semigroup.delta() - self.cogaps.len() as i64
    }

    /// Elements of `Δ` up to the conductor of `Γ`, for display.
    pub fn elements_through_conductor(&self) -> Vec<i64> {
        (0..=self.semigroup.conductor())
            .filter(|&n| self.contains(n))
            .collect()
    }
}

/// All semi-modules over `Γ`, one per staircase subdiagram, in the
/// canonical subdiagram order.
pub fn enumerate_semimodules(semigroup: &Semigroup) -> impl Iterator<Item = SemiModule> + '_ {
    Staircase::unchecked(semigroup.p(), semigroup.q())
        .subdiagrams()
        .map(move |d| SemiModule::from_diagram(semigroup, &d).expect("subdiagram of the staircase"))
}

/// Column `x` of the rectangle holds the `p`-generator sitting on top of
/// column `x` of the diagram (or just below it when the column is empty).
pub(crate) fn column_generator(p: i64, q: i64, d: &YoungDiagram, x: u32) -> i64 {
    label_unchecked(p, q, x as i64, d.height(x) as i64)
}

/// Row `y` of the rectangle holds the `q`-cogenerator labelling the
/// leftmost box of that row outside the diagram.
pub(crate) fn row_cogenerator(p: i64, q: i64, d: &YoungDiagram, y: u32) -> i64 {
    label_unchecked(p, q, d.row_length(y) as i64 + 1, y as i64)
}

/// The (generator, cogenerator) pair attached to a box of the rectangle.
pub(crate) fn box_pair(p: i64, q: i64, d: &YoungDiagram, c: LatticeBox) -> (i64, i64) {
    (
        column_generator(p, q, d, c.x),
        row_cogenerator(p, q, d, c.y),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig1() -> SemiModule {
        let g = Semigroup::new(5, 7).unwrap();
        SemiModule::validate(&g, [8, 11, 13, 16, 18, 23]).unwrap()
    }

    fn d(cols: &[u32]) -> YoungDiagram {
        YoungDiagram::new(cols.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        let g34 = Semigroup::new(3, 4).unwrap();
        assert!(SemiModule::validate(&g34, []).is_ok());
        assert_eq!(
            SemiModule::validate(&g34, [2]),
            Err(Error::NotClosed {
                element: 2,
                step: 3,
                missing: 5
            })
        );
        assert_eq!(SemiModule::validate(&g34, [3]), Err(Error::NotAGap(3)));
        assert_eq!(fig1().gaps_count(), 6);
    }

    #[test]
    fn diagram_bijection() {
        let g57 = Semigroup::new(5, 7).unwrap();
        assert_eq!(fig1().to_diagram(), d(&[4, 2]));
        assert_eq!(SemiModule::from_diagram(&g57, &d(&[4, 2])).unwrap(), fig1());
        assert_eq!(SemiModule::semigroup_itself(&g57).to_diagram(), d(&[]));
        let g34 = Semigroup::new(3, 4).unwrap();
        assert_eq!(SemiModule::everything(&g34).to_diagram(), d(&[2, 1]));
        assert!(SemiModule::from_diagram(&g34, &d(&[3])).is_err());
        assert!(SemiModule::from_diagram(&g34, &d(&[1, 1, 1])).is_err());
    }

    #[test]
    fn generators_and_cogenerators() {
        let g34 = Semigroup::new(3, 4).unwrap();
        assert_eq!(fig1().p_basis(), vec![0, 7, 8, 11, 14]);
        assert_eq!(SemiModule::semigroup_itself(&g34).p_basis(), vec![0, 4, 8]);
        assert_eq!(SemiModule::everything(&g34).p_basis(), vec![0, 1, 2]);

        assert_eq!(fig1().q_cogenerators(), vec![-7, -2, 1, 3, 4, 6, 9]);
        assert_eq!(
            SemiModule::everything(&g34).q_cogenerators(),
            vec![-4, -3, -2, -1]
        );
        assert_eq!(
            SemiModule::semigroup_itself(&g34).q_cogenerators(),
            vec![-4, -1, 2, 5]
        );
    }

    #[test]
    fn g_counts() {
        assert_eq!(fig1().g(0), 5);
        assert_eq!(fig1().g(11), 0);
        let g = Semigroup::new(4, 7).unwrap();
        let all = SemiModule::everything(&g);
        assert!((0..40).all(|a| all.g(a) == 0));
    }

    #[test]
    fn dimensions() {
        let g34 = Semigroup::new(3, 4).unwrap();
        assert_eq!(fig1().dimension(), 7);
        assert_eq!(SemiModule::semigroup_itself(&g34).dimension(), 3);
        assert_eq!(SemiModule::everything(&g34).dimension(), 0);

        assert_eq!(fig1().dimension_via_pairs(), 7);
        assert_eq!(SemiModule::everything(&g34).dimension_via_pairs(), 0);
        assert_eq!(SemiModule::semigroup_itself(&g34).dimension_via_pairs(), 3);

        assert_eq!(SemiModule::everything(&g34).gaps_count(), 0);
        assert_eq!(SemiModule::semigroup_itself(&g34).gaps_count(), 3);
    }

    #[test]
    fn enumeration_counts() {
        for ((p, q), n) in [((3, 4), 5), ((2, 3), 2), ((5, 7), 66)] {
            let g = Semigroup::new(p, q).unwrap();
            assert_eq!(enumerate_semimodules(&g).count(), n);
        }
    }

    #[test]
    fn display_elements() {
        let g34 = Semigroup::new(3, 4).unwrap();
        assert_eq!(
            SemiModule::semigroup_itself(&g34).elements_through_conductor(),
            vec![0, 3, 4, 6]
        );
    }
}

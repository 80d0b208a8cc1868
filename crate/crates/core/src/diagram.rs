//! Young diagrams in column-major form, arm and leg statistics, the
//! staircase region under the anti-diagonal of a `p x q` rectangle, and the
//! `h+` statistic.
//!
//! Coordinates are 1-based: `x` counts columns from the left and `y` counts
//! rows from the bottom. A diagram is stored as its column heights.

use std::fmt;

use serde::ser::{Serialize, SerializeTuple, Serializer};

use crate::error::{Error, Result};
use crate::semigroup::{gcd, Semigroup};

/// A unit box `(x, y)` of the first quadrant grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeBox {
    pub x: u32,
    pub y: u32,
}

impl LatticeBox {
    pub const fn new(x: u32, y: u32) -> Self {
        LatticeBox { x, y }
    }
}

impl From<(u32, u32)> for LatticeBox {
    fn from((x, y): (u32, u32)) -> Self {
        LatticeBox { x, y }
    }
}

impl fmt::Display for LatticeBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Serialized as the pair `[x, y]`.
impl Serialize for LatticeBox {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = serializer.serialize_tuple(2)?;
        t.serialize_element(&self.x)?;
        t.serialize_element(&self.y)?;
        t.end()
    }
}

/// A Young diagram anchored at the bottom-left corner, stored as weakly
/// decreasing positive column heights. The empty diagram has no columns.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct YoungDiagram {
    columns: Vec<u32>,
}

impl YoungDiagram {
    /// Builds a diagram from column heights. Trailing zero columns are
    /// dropped; any increase between neighbours is an error.
    pub fn new(mut columns: Vec<u32>) -> Result<Self> {
        while columns.last() == Some(&0) {
            columns.pop();
        }
        if columns.windows(2).any(|w| w[0] < w[1]) || columns.contains(&0) {
            return Err(Error::NotWeaklyDecreasing(columns));
        }
        Ok(YoungDiagram { columns })
    }

    pub fn empty() -> Self {
        YoungDiagram::default()
    }

    pub fn columns(&self) -> &[u32] {
        &self.columns
    }

    pub fn num_columns(&self) -> u32 {
        self.columns.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn area(&self) -> u32 {
        self.columns.iter().sum()
    }

    /// Height of column `x`, zero past the last column.
    pub fn height(&self, x: u32) -> u32 {
        if x == 0 {
            return 0;
        }
        self.columns.get(x as usize - 1).copied().unwrap_or(0)
    }

    /// Number of boxes in row `y`.
    pub fn row_length(&self, y: u32) -> u32 {
        if y == 0 {
            return 0;
        }
        self.columns.iter().take_while(|&&h| h >= y).count() as u32
    }

    pub fn contains(&self, c: LatticeBox) -> bool {
        c.x >= 1 && c.y >= 1 && c.y <= self.height(c.x)
    }

    /// Boxes column by column, bottom to top.
    pub fn boxes(&self) -> impl Iterator<Item = LatticeBox> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(i, &h)| (1..=h).map(move |y| LatticeBox::new(i as u32 + 1, y)))
    }

    /// Columnwise containment.
    pub fn is_subdiagram_of(&self, other: &YoungDiagram) -> bool {
        self.columns.len() <= other.columns.len()
            && self.columns.iter().zip(&other.columns).all(|(a, b)| a <= b)
    }

    /// Boxes strictly to the right of `c` in its row.
    pub fn arm(&self, c: LatticeBox) -> Result<u32> {
        if !self.contains(c) {
            return Err(Error::BoxNotInDiagram(c));
        }
        Ok(self.row_length(c.y) - c.x)
    }

    /// Boxes strictly above `c` in its column.
    pub fn leg(&self, c: LatticeBox) -> Result<u32> {
        if !self.contains(c) {
            return Err(Error::BoxNotInDiagram(c));
        }
        Ok(self.height(c.x) - c.y)
    }

    /// For a box outside the diagram: the number of boxes strictly to its
    /// left that are also outside, scanning until the diagram or column 1.
    pub fn ext_arm(&self, c: LatticeBox) -> Result<u32> {
        if c.x == 0 || c.y == 0 {
            return Err(Error::BoxNotInDiagram(c));
        }
        if self.contains(c) {
            return Err(Error::BoxInDiagram(c));
        }
        Ok(c.x - 1 - self.row_length(c.y))
    }

    /// For a box outside the diagram: the number of boxes strictly below
    /// it that are also outside, scanning until the diagram or row 1.
    pub fn ext_leg(&self, c: LatticeBox) -> Result<u32> {
        if c.x == 0 || c.y == 0 {
            return Err(Error::BoxNotInDiagram(c));
        }
        if self.contains(c) {
            return Err(Error::BoxInDiagram(c));
        }
        Ok(c.y - 1 - self.height(c.x))
    }

    /// The conjugate diagram: row lengths become column heights.
    pub fn transpose(&self) -> YoungDiagram {
        let rows = self.columns.first().copied().unwrap_or(0);
        YoungDiagram {
            columns: (1..=rows).map(|y| self.row_length(y)).collect(),
        }
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.columns.is_empty() {
            return f.write_str("()");
        }
        f.write_str("(")?;
        for (i, h) in self.columns.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{h}")?;
        }
        f.write_str(")")
    }
}

impl Serialize for YoungDiagram {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.columns.serialize(serializer)
    }
}

/// Counts boxes `c` with `a(c)/(l(c)+1) <= x < (a(c)+1)/l(c)` for the
/// rational slope `x = num/den`. A zero leg makes the right fraction
/// infinite, which the cross-multiplied test handles on its own.
///
/// When `num` and `den` are coprime and the diagram fits in a `num x den`
/// rectangle, neither inequality can be an equality; this is asserted.
pub fn h_plus(d: &YoungDiagram, num: u32, den: u32) -> Result<u32> {
    if den == 0 {
        return Err(Error::ZeroDenominator);
    }
    let check_strict =
        gcd(num as i64, den as i64) == 1 && d.num_columns() <= num && d.height(1) <= den;
    let mut count = 0;
    for c in d.boxes() {
        let (a, l) = (arm_unchecked(d, c) as u64, leg_unchecked(d, c) as u64);
        let (num, den) = (num as u64, den as u64);
        if check_strict {
            assert_ne!(a * den, num * (l + 1), "equality attained at {c}");
            assert_ne!((a + 1) * den, num * l, "equality attained at {c}");
        }
        if a * den <= num * (l + 1) && l * num < (a + 1) * den {
            count += 1;
        }
    }
    Ok(count)
}

/// `h+` at slope `n/(n+1)`.
pub fn dinv(d: &YoungDiagram, n: u32) -> Result<u32> {
    if n == 0 {
        return Err(Error::IndexTooSmall(0));
    }
    h_plus(d, n, n + 1)
}

pub(crate) fn arm_unchecked(d: &YoungDiagram, c: LatticeBox) -> u32 {
    d.row_length(c.y) - c.x
}

pub(crate) fn leg_unchecked(d: &YoungDiagram, c: LatticeBox) -> u32 {
    d.height(c.x) - c.y
}

/// The boxes of the `p x q` rectangle strictly below its anti-diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Staircase {
    p: i64,
    q: i64,
    heights: Vec<u32>,
}

impl Staircase {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        // same preconditions as the semigroup
        Semigroup::new(p, q)?;
        Ok(Self::unchecked(p, q))
    }

    pub(crate) fn unchecked(p: i64, q: i64) -> Self {
        // column k has height q - ceil(k q / p)
        let heights = (1..=p).map(|k| (q - (k * q + p - 1) / p) as u32).collect();
        Staircase { p, q, heights }
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// All `p` column heights, including the final zero.
    pub fn heights(&self) -> &[u32] {
        &self.heights
    }

    pub fn area(&self) -> u32 {
        self.heights.iter().sum()
    }

    pub fn as_diagram(&self) -> YoungDiagram {
        YoungDiagram::new(self.heights.clone()).expect("staircase heights decrease")
    }

    pub fn contains(&self, c: LatticeBox) -> bool {
        c.x >= 1 && c.y >= 1 && (c.x as i64) <= self.p && c.y <= self.heights[c.x as usize - 1]
    }

    pub fn contains_diagram(&self, d: &YoungDiagram) -> bool {
        d.num_columns() as i64 <= self.p
            && d.columns().iter().zip(&self.heights).all(|(a, b)| a <= b)
    }

    pub fn boxes(&self) -> impl Iterator<Item = LatticeBox> + '_ {
        self.heights
            .iter()
            .enumerate()
            .flat_map(|(i, &h)| (1..=h).map(move |y| LatticeBox::new(i as u32 + 1, y)))
    }

    /// Every subdiagram, in canonical order.
    pub fn subdiagrams(&self) -> Subdiagrams {
        enumerate_subdiagrams(&self.as_diagram())
    }
}

/// The label `p*q - q*x - p*y` of a box of the `p x q` rectangle. Labels
/// are positive exactly on the staircase, where they run over the gaps of
/// the semigroup, each once.
pub fn label(p: i64, q: i64, c: LatticeBox) -> Result<i64> {
    if c.x == 0 || c.y == 0 || c.x as i64 > p || c.y as i64 > q {
        return Err(Error::OutsideRectangle { at: c, p, q });
    }
    Ok(label_unchecked(p, q, c.x as i64, c.y as i64))
}

pub(crate) fn label_unchecked(p: i64, q: i64, x: i64, y: i64) -> i64 {
    p * q - q * x - p * y
}

/// Iterates over all subdiagrams of `bound` in lexicographically decreasing
/// order of column sequences: `bound` itself first, the empty diagram last.
///
/// Each step moves to the lexicographic predecessor: a last column of
/// height one is dropped, otherwise it is lowered by one and the remaining
/// columns are refilled as high as allowed.
pub fn enumerate_subdiagrams(bound: &YoungDiagram) -> Subdiagrams {
    Subdiagrams {
        bound: bound.columns.clone(),
        current: Some(bound.columns.clone()),
    }
}

#[derive(Debug, Clone)]
pub struct Subdiagrams {
    bound: Vec<u32>,
    current: Option<Vec<u32>>,
}

impl Subdiagrams {
    fn fill(&self, cols: &mut Vec<u32>) {
        while let (Some(&last), Some(&cap)) = (cols.last(), self.bound.get(cols.len())) {
            let h = last.min(cap);
            if h == 0 {
                break;
            }
            cols.push(h);
        }
    }
}

impl Iterator for Subdiagrams {
    type Item = YoungDiagram;

    fn next(&mut self) -> Option<YoungDiagram> {
        let cols = self.current.take()?;
        let mut succ = cols.clone();
        self.current = match succ.last_mut() {
            None => None,
            Some(1) => {
                succ.pop();
                Some(succ)
            }
            Some(h) => {
                *h -= 1;
                self.fill(&mut succ);
                Some(succ)
            }
        };
        Some(YoungDiagram { columns: cols })
    }
}

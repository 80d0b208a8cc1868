//! Executable form of the dimension formula `dim Δ = δ - h+(D(Δ))`.
//!
//! Two box sets of the `p x q` rectangle `R` are compared for every
//! diagram `D` inside the staircase:
//!
//! * the *pair set*, boxes whose (column generator, row cogenerator) pair
//!   is increasing; it has `dim Δ` elements;
//! * the *residual set*, staircase boxes not counted by `h+`; it has
//!   `δ - h+(D)` elements.
//!
//! Both split into three parts. Part 1 lies outside `D` and is matched by
//! reversing each row of `R \ D`. Part 2 is the same subset of `D` on both
//! sides. Part 3 is matched by dropping a box down its column by
//! `⌊a(c) q / p⌋` rows and sliding it to the box of equal arm.
//!
//! Arms and legs of boxes outside `D` are the extended ones: the number of
//! empty boxes to the left of (resp. below) the box before the diagram or
//! the rectangle edge is reached.

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::diagram::{arm_unchecked, h_plus, leg_unchecked, LatticeBox, Staircase, YoungDiagram};
use crate::error::{Error, Result};
use crate::semigroup::Semigroup;
use crate::semimodule::{box_pair, column_generator, row_cogenerator, SemiModule};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Part {
    /// Outside the diagram; matched by row reversal.
    Reflected = 1,
    /// Inside the diagram; common to both sets.
    Shared = 2,
    /// Matched by the column drop.
    Dropped = 3,
}

impl Part {
    pub fn index(self) -> usize {
        self as usize
    }
}

impl Serialize for Part {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_u8(*self as u8)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TaggedBox {
    pub at: LatticeBox,
    pub part: Part,
}

impl Serialize for TaggedBox {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("TaggedBox", 2)?;
        s.serialize_field("box", &self.at)?;
        s.serialize_field("part", &self.part)?;
        s.end()
    }
}

/// Shared context: a diagram inside the staircase of `(p, q)`.
struct Frame<'a> {
    p: i64,
    q: i64,
    d: &'a YoungDiagram,
}

impl<'a> Frame<'a> {
    fn new(d: &'a YoungDiagram, p: i64, q: i64) -> Result<Self> {
        if !Staircase::new(p, q)?.contains_diagram(d) {
            return Err(Error::NotInStaircase(d.columns().to_vec(), p, q));
        }
        Ok(Frame { p, q, d })
    }

    fn rectangle(&self) -> impl Iterator<Item = LatticeBox> {
        let (p, q) = (self.p as u32, self.q as u32);
        (1..=p).flat_map(move |x| (1..=q).map(move |y| LatticeBox::new(x, y)))
    }

    fn in_rectangle(&self, c: LatticeBox) -> bool {
        c.x >= 1 && c.y >= 1 && c.x as i64 <= self.p && c.y as i64 <= self.q
    }

    fn in_staircase(&self, c: LatticeBox) -> bool {
        self.p * self.q - self.q * c.x as i64 - self.p * c.y as i64 > 0
    }

    /// (arm, leg) for either kind of box.
    fn arm_leg(&self, c: LatticeBox) -> (i64, i64) {
        if self.d.contains(c) {
            (
                arm_unchecked(self.d, c) as i64,
                leg_unchecked(self.d, c) as i64,
            )
        } else {
            let a = c.x - 1 - self.d.row_length(c.y);
            let l = c.y - 1 - self.d.height(c.x);
            (a as i64, l as i64)
        }
    }

    fn is_balanced(&self, c: LatticeBox) -> bool {
        let (a, l) = self.arm_leg(c);
        a * self.q <= self.p * (l + 1) && l * self.p < (a + 1) * self.q
    }

    fn residual_part(&self, c: LatticeBox) -> Option<Part> {
        if !self.in_staircase(c) {
            return None;
        }
        if !self.d.contains(c) {
            return Some(Part::Reflected);
        }
        let (a, l) = self.arm_leg(c);
        if (a + 1) * self.q <= l * self.p {
            Some(Part::Shared)
        } else if a * self.q > (l + 1) * self.p {
            Some(Part::Dropped)
        } else {
            None
        }
    }

    fn pair_part(&self, c: LatticeBox) -> Option<Part> {
        let (a, l) = self.arm_leg(c);
        let y = c.y as i64;
        let (p, q) = (self.p, self.q);
        if self.d.contains(c) {
            ((a + 1) * q <= l * p).then_some(Part::Shared)
        } else if a * q >= y * p {
            Some(Part::Reflected)
        } else if (l + 1) * p < a * q {
            Some(Part::Dropped)
        } else {
            None
        }
    }

    fn require_outside(&self, c: LatticeBox) -> Result<()> {
        if !self.in_rectangle(c) {
            return Err(Error::OutsideRectangle {
                at: c,
                p: self.p,
                q: self.q,
            });
        }
        if self.d.contains(c) {
            return Err(Error::BoxInDiagram(c));
        }
        Ok(())
    }

    fn reflect(&self, c: LatticeBox) -> Result<LatticeBox> {
        self.require_outside(c)?;
        let (a, _) = self.arm_leg(c);
        Ok(LatticeBox::new((self.p - a) as u32, c.y))
    }

    fn drop(&self, c: LatticeBox) -> Result<LatticeBox> {
        self.require_outside(c)?;
        if self.pair_part(c) != Some(Part::Dropped) {
            return Err(Error::WrongDomain {
                at: c,
                set: "part 3 of the pair set",
            });
        }
        let (a, _) = self.arm_leg(c);
        assert_ne!((a * self.q) % self.p, 0, "a(c) q / p is an integer at {c}");
        let m = (a * self.q) / self.p;
        let y = c.y as i64 - m;
        assert!(y >= 1, "drop leaves the rectangle at {c}");
        let below = LatticeBox::new(c.x, y as u32);
        assert!(self.d.contains(below), "drop from {c} misses the diagram");
        let x = c.x as i64 + arm_unchecked(self.d, below) as i64 - a;
        Ok(LatticeBox::new(x as u32, y as u32))
    }

    fn lift(&self, c: LatticeBox) -> Result<LatticeBox> {
        if !self.d.contains(c) || self.residual_part(c) != Some(Part::Dropped) {
            return Err(Error::WrongDomain {
                at: c,
                set: "part 3 of the residual set",
            });
        }
        let (a, _) = self.arm_leg(c);
        let m = (a * self.q) / self.p;
        let y = c.y as i64 + m;
        let out_of_range = || Error::WrongDomain {
            at: c,
            set: "the preimage range of the lift",
        };
        if y > self.q {
            return Err(out_of_range());
        }
        let x = self.d.row_length(y as u32) as i64 + 1 + a;
        if x > self.p {
            return Err(out_of_range());
        }
        let pre = LatticeBox::new(x as u32, y as u32);
        if self.pair_part(pre) != Some(Part::Dropped) {
            return Err(out_of_range());
        }
        Ok(pre)
    }
}

/// Boxes of `D` counted by `h+` at slope `p/q`.
pub fn balanced_set(d: &YoungDiagram, p: i64, q: i64) -> Result<Vec<LatticeBox>> {
    let f = Frame::new(d, p, q)?;
    Ok(d.boxes().filter(|&c| f.is_balanced(c)).collect())
}

/// Staircase boxes outside the balanced set, tagged by part.
pub fn residual_set(d: &YoungDiagram, p: i64, q: i64) -> Result<Vec<TaggedBox>> {
    let f = Frame::new(d, p, q)?;
    Ok(f.rectangle()
        .filter_map(|c| f.residual_part(c).map(|part| TaggedBox { at: c, part }))
        .collect())
}

/// The pair set described through arms and legs, tagged by part.
pub fn pair_set(d: &YoungDiagram, p: i64, q: i64) -> Result<Vec<TaggedBox>> {
    let f = Frame::new(d, p, q)?;
    Ok(f.rectangle()
        .filter_map(|c| f.pair_part(c).map(|part| TaggedBox { at: c, part }))
        .collect())
}

/// The pair set read directly off generators and cogenerators: box `(x, y)`
/// belongs to it iff the generator of column `x` is below the cogenerator
/// of row `y`.
pub fn pair_set_by_generators(d: &YoungDiagram, p: i64, q: i64) -> Result<Vec<LatticeBox>> {
    let f = Frame::new(d, p, q)?;
    Ok(f.rectangle()
        .filter(|&c| {
            let (a, b) = box_pair(p, q, d, c);
            a < b
        })
        .collect())
}

/// Reverses the order of boxes in the row of `c` within `R \ D`. An
/// involution on `R \ D`.
pub fn reflect_in_row(d: &YoungDiagram, p: i64, q: i64, c: LatticeBox) -> Result<LatticeBox> {
    Frame::new(d, p, q)?.reflect(c)
}

/// Moves a part-3 pair-set box `⌊a(c) q / p⌋` rows down into `D`, then
/// along that row to the box whose arm equals `a(c)`.
pub fn drop_in_column(d: &YoungDiagram, p: i64, q: i64, c: LatticeBox) -> Result<LatticeBox> {
    Frame::new(d, p, q)?.drop(c)
}

/// Inverse of [`drop_in_column`], defined on part 3 of the residual set.
pub fn lift_in_column(d: &YoungDiagram, p: i64, q: i64, c: LatticeBox) -> Result<LatticeBox> {
    Frame::new(d, p, q)?.lift(c)
}

/// A checked bijection between the pair set and the residual set of one
/// diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellCertificate {
    pub p: i64,
    pub q: i64,
    pub diagram: YoungDiagram,
    pub pair_boxes: Vec<TaggedBox>,
    pub residual_boxes: Vec<TaggedBox>,
    /// `(pair box, residual box)`, in the order of `pair_boxes`.
    pub pairing: Vec<(LatticeBox, LatticeBox)>,
}

impl CellCertificate {
    pub fn pair_part_sizes(&self) -> [usize; 3] {
        part_sizes(&self.pair_boxes)
    }

    pub fn residual_part_sizes(&self) -> [usize; 3] {
        part_sizes(&self.residual_boxes)
    }

    pub fn size(&self) -> usize {
        self.pairing.len()
    }
}

fn part_sizes(boxes: &[TaggedBox]) -> [usize; 3] {
    let mut sizes = [0; 3];
    for b in boxes {
        sizes[b.part.index() - 1] += 1;
    }
    sizes
}

/// JSON shape:
/// `{"p":5,"q":6,"diagram":[3,3],"u":[{"box":[x,y],"part":1},..],
///   "v":[..],"pairing":[[[x,y],[x',y']],..]}`.
impl Serialize for CellCertificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("CellCertificate", 6)?;
        s.serialize_field("p", &self.p)?;
        s.serialize_field("q", &self.q)?;
        s.serialize_field("diagram", &self.diagram)?;
        s.serialize_field("u", &self.pair_boxes)?;
        s.serialize_field("v", &self.residual_boxes)?;
        s.serialize_field("pairing", &self.pairing)?;
        s.end()
    }
}

fn fail(at: Option<LatticeBox>, what: impl Into<String>) -> Error {
    Error::Certificate {
        at,
        what: what.into(),
    }
}

/// Builds both box sets and the pairing, and checks every claim about them:
/// the two descriptions of the pair set agree, the column generators and
/// row cogenerators are those of the semi-module, row reversal is an
/// involution carrying part 1 onto part 1, the column drop and lift invert
/// each other between the parts 3, the pairing is a bijection, and the
/// sizes equal `dim Δ` and `δ - h+`.
///
/// A failure signals an implementation defect, not bad input.
pub fn certify(d: &YoungDiagram, p: i64, q: i64) -> Result<CellCertificate> {
    let f = Frame::new(d, p, q)?;
    let semigroup = Semigroup::new(p, q)?;
    let module = SemiModule::from_diagram(&semigroup, d)?;

    let pair_boxes = pair_set(d, p, q)?;
    let residual_boxes = residual_set(d, p, q)?;

    let by_generators = pair_set_by_generators(d, p, q)?;
    let by_arms: Vec<LatticeBox> = pair_boxes.iter().map(|t| t.at).collect();
    if by_generators != by_arms {
        let odd = by_generators
            .iter()
            .find(|c| !by_arms.contains(c))
            .or_else(|| by_arms.iter().find(|c| !by_generators.contains(c)))
            .copied();
        return Err(fail(
            odd,
            "arm/leg and generator descriptions of the pair set differ",
        ));
    }

    let mut gens: Vec<i64> = (1..=p as u32)
        .map(|x| column_generator(p, q, d, x))
        .collect();
    gens.sort_unstable();
    if gens != module.p_basis() {
        return Err(fail(
            None,
            format!("column generators {gens:?} are not the p-basis"),
        ));
    }
    let mut cogens: Vec<i64> = (1..=q as u32)
        .map(|y| row_cogenerator(p, q, d, y))
        .collect();
    cogens.sort_unstable();
    if cogens != module.q_cogenerators() {
        return Err(fail(
            None,
            format!("row cogenerators {cogens:?} are not the q-cogenerators"),
        ));
    }

    for c in f.rectangle().filter(|&c| !d.contains(c)) {
        let image = f.reflect(c)?;
        if !f.in_rectangle(image) || d.contains(image) || f.reflect(image)? != c {
            return Err(fail(Some(c), "row reversal is not an involution of R \\ D"));
        }
    }

    let residual_part = |c: LatticeBox| residual_boxes.iter().find(|t| t.at == c).map(|t| t.part);
    let mut pairing = Vec::with_capacity(pair_boxes.len());
    for t in &pair_boxes {
        let image = match t.part {
            Part::Reflected => f.reflect(t.at)?,
            Part::Shared => t.at,
            Part::Dropped => {
                let image = f.drop(t.at)?;
                if f.lift(image)? != t.at {
                    return Err(fail(Some(t.at), "lift does not undo the drop"));
                }
                image
            }
        };
        if residual_part(image) != Some(t.part) {
            return Err(fail(
                Some(t.at),
                format!("image {image} is not in residual part {}", t.part.index()),
            ));
        }
        pairing.push((t.at, image));
    }
    for t in residual_boxes.iter().filter(|t| t.part == Part::Dropped) {
        let pre = f.lift(t.at)?;
        if f.drop(pre)? != t.at {
            return Err(fail(Some(t.at), "drop does not undo the lift"));
        }
    }

    let mut images: Vec<LatticeBox> = pairing.iter().map(|&(_, v)| v).collect();
    images.sort_unstable();
    let mut targets: Vec<LatticeBox> = residual_boxes.iter().map(|t| t.at).collect();
    targets.sort_unstable();
    if images != targets {
        return Err(fail(
            None,
            "pairing is not a bijection onto the residual set",
        ));
    }

    let dim = module.dimension();
    if pair_boxes.len() as i64 != dim {
        return Err(fail(
            None,
            format!("|U| = {} but dim = {dim}", pair_boxes.len()),
        ));
    }
    let hp = h_plus(d, p as u32, q as u32)? as i64;
    if residual_boxes.len() as i64 != semigroup.delta() - hp {
        return Err(fail(
            None,
            format!(
                "|V| = {} but δ - h+ = {}",
                residual_boxes.len(),
                semigroup.delta() - hp
            ),
        ));
    }
    let balanced = balanced_set(d, p, q)?;
    if balanced.len() as i64 != hp {
        return Err(fail(None, "balanced set disagrees with h+"));
    }

    Ok(CellCertificate {
        p,
        q,
        diagram: d.clone(),
        pair_boxes,
        residual_boxes,
        pairing,
    })
}

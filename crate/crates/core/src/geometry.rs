//! Exact plane geometry for a strongly convex rational cone.
//!
//! Every lattice point `p` is mapped to its corner coordinates
//! `(s, t) = (<normal1, p>, <normal2, p>)`. Under this map the cone becomes
//! the closed first quadrant and each translate `p + cone` becomes the
//! axis-aligned quadrant `{s >= s(p), t >= t(p)}`, so unions of translates are
//! staircases and their complements are finite unions of boxes.
//!
//! The image of `Z^2` is a sublattice of index `det_abs`. It has the form
//! `{(s, t) : t = s * shift (mod det_abs)}`, which is what makes row-by-row
//! lattice counting exact and cheap.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rat = BigRational;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub x: BigInt,
    pub y: BigInt,
}

impl LatticePoint {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        LatticePoint {
            x: x.into(),
            y: y.into(),
        }
    }

    pub fn origin() -> Self {
        LatticePoint::new(0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn dot(&self, other: &LatticePoint) -> BigInt {
        &self.x * &other.x + &self.y * &other.y
    }

    pub fn add(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint {
            x: &self.x + &other.x,
            y: &self.y + &other.y,
        }
    }

    pub fn sub(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint {
            x: &self.x - &other.x,
            y: &self.y - &other.y,
        }
    }

    pub fn scale(&self, k: &BigInt) -> LatticePoint {
        LatticePoint {
            x: &self.x * k,
            y: &self.y * k,
        }
    }

    /// Divides out the gcd of the coordinates. The zero vector is returned unchanged.
    pub fn primitive(&self) -> LatticePoint {
        let g = self.x.gcd(&self.y);
        if g.is_zero() {
            return self.clone();
        }
        LatticePoint {
            x: &self.x / &g,
            y: &self.y / &g,
        }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

fn det(a: &LatticePoint, b: &LatticePoint) -> BigInt {
    &a.x * &b.y - &a.y * &b.x
}

/// Corner coordinates `(<normal1, p>, <normal2, p>)` of a point.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Corner {
    pub s: BigInt,
    pub t: BigInt,
}

impl Corner {
    pub fn new(s: impl Into<BigInt>, t: impl Into<BigInt>) -> Self {
        Corner {
            s: s.into(),
            t: t.into(),
        }
    }

    /// Componentwise `>=`.
    pub fn dominates(&self, other: &Corner) -> bool {
        self.s >= other.s && self.t >= other.t
    }

    pub fn scale(&self, k: &BigInt) -> Corner {
        Corner {
            s: &self.s * k,
            t: &self.t * k,
        }
    }

    pub fn add(&self, other: &Corner) -> Corner {
        Corner {
            s: &self.s + &other.s,
            t: &self.t + &other.t,
        }
    }
}

impl fmt::Display for Corner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.s, self.t)
    }
}

/// A strongly convex rational cone in `R^2` with primitive rays and
/// primitive inward facet normals. `normal1` vanishes on `ray1`, `normal2`
/// on `ray2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone2 {
    ray1: LatticePoint,
    ray2: LatticePoint,
    normal1: LatticePoint,
    normal2: LatticePoint,
    det_abs: BigInt,
    // A lattice point with <normal1, p> = 1, and <normal2, p> for it.
    unit_s: LatticePoint,
    shift: BigInt,
}

impl Cone2 {
    pub fn new(ray1: LatticePoint, ray2: LatticePoint) -> Result<Self> {
        if ray1.is_zero() || ray2.is_zero() {
            return Err(Error::ZeroRay);
        }
        if det(&ray1, &ray2).is_zero() {
            return Err(Error::CollinearRays);
        }
        let ray1 = ray1.primitive();
        let ray2 = ray2.primitive();
        let normal1 = inward_normal(&ray1, &ray2);
        let normal2 = inward_normal(&ray2, &ray1);
        let det_abs = det(&normal1, &normal2).abs();

        // normal1 is primitive, so some lattice point pairs with it to 1.
        let eg = normal1.x.extended_gcd(&normal1.y);
        let sign = eg.gcd.signum();
        let unit_s = LatticePoint::new(&eg.x * &sign, &eg.y * &sign);
        debug_assert!(unit_s.dot(&normal1).is_one());
        let shift = unit_s.dot(&normal2);
        debug_assert_eq!(normal2.dot(&ray1), det_abs);

        Ok(Cone2 {
            ray1,
            ray2,
            normal1,
            normal2,
            det_abs,
            unit_s,
            shift,
        })
    }

    /// The standard quadrant, rays `(1,0)` and `(0,1)`.
    pub fn quadrant() -> Self {
        Cone2::new(LatticePoint::new(1, 0), LatticePoint::new(0, 1)).expect("quadrant")
    }

    pub fn ray1(&self) -> &LatticePoint {
        &self.ray1
    }

    pub fn ray2(&self) -> &LatticePoint {
        &self.ray2
    }

    pub fn normal1(&self) -> &LatticePoint {
        &self.normal1
    }

    pub fn normal2(&self) -> &LatticePoint {
        &self.normal2
    }

    /// `|det(normal1; normal2)|`, the index of the corner lattice in `Z^2`.
    pub fn det_abs(&self) -> &BigInt {
        &self.det_abs
    }

    pub fn corner_coords(&self, p: &LatticePoint) -> Corner {
        Corner {
            s: self.normal1.dot(p),
            t: self.normal2.dot(p),
        }
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        let c = self.corner_coords(p);
        !c.s.is_negative() && !c.t.is_negative()
    }

    /// Residue class mod `det_abs` that `t` must lie in for `(s, t)` to be the
    /// corner of a lattice point.
    fn row_residue(&self, s: &BigInt) -> BigInt {
        (s * &self.shift).mod_floor(&self.det_abs)
    }

    /// True iff `c` is the corner of some lattice point.
    pub fn is_lattice_corner(&self, c: &Corner) -> bool {
        (&c.t - &c.s * &self.shift).is_multiple_of(&self.det_abs)
    }

    /// Inverse of [`Cone2::corner_coords`] on the corner lattice.
    pub fn lattice_preimage(&self, c: &Corner) -> Option<LatticePoint> {
        let (k, r) = (&c.t - &c.s * &self.shift).div_mod_floor(&self.det_abs);
        if !r.is_zero() {
            return None;
        }
        Some(self.unit_s.scale(&c.s).add(&self.ray1.scale(&k)))
    }

    /// Real preimage of a rational corner point, as exact rationals.
    pub fn real_preimage(&self, s: &Rat, t: &Rat) -> (Rat, Rat) {
        let k = (t - s * Rat::from_integer(self.shift.clone()))
            / Rat::from_integer(self.det_abs.clone());
        let x = s * Rat::from_integer(self.unit_s.x.clone())
            + &k * Rat::from_integer(self.ray1.x.clone());
        let y = s * Rat::from_integer(self.unit_s.y.clone())
            + &k * Rat::from_integer(self.ray1.y.clone());
        (x, y)
    }

    /// Number of `t` in `[lo, hi)` such that `(s, t)` is a lattice corner.
    pub(crate) fn count_row(&self, s: &BigInt, lo: &BigInt, hi: &BigInt) -> BigInt {
        if hi <= lo {
            return BigInt::zero();
        }
        let r = self.row_residue(s);
        let d = &self.det_abs;
        let upto = |bound: &BigInt| (bound - BigInt::one() - &r).div_floor(d);
        upto(hi) - upto(lo)
    }
}

/// Primitive normal to `ray`, oriented to be positive on `other`.
fn inward_normal(ray: &LatticePoint, other: &LatticePoint) -> LatticePoint {
    let n = LatticePoint::new(-ray.y.clone(), ray.x.clone());
    if n.dot(other).is_positive() {
        n
    } else {
        LatticePoint::new(ray.y.clone(), -ray.x.clone())
    }
}

/// Pareto-minimal corners, strictly increasing in `s` and strictly
/// decreasing in `t`. Represents the up-closed set `W` of all corners that
/// dominate at least one of its corners.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Staircase {
    corners: Vec<Corner>,
}

impl Staircase {
    /// Reduces to the dominance-minimal subset.
    pub fn pareto_minimal(corners: impl IntoIterator<Item = Corner>) -> Result<Self> {
        let mut all: Vec<Corner> = corners.into_iter().collect();
        if all.is_empty() {
            return Err(Error::EmptyInput);
        }
        all.sort();
        let mut kept: Vec<Corner> = Vec::with_capacity(all.len());
        for c in all {
            match kept.last() {
                Some(last) if c.t >= last.t => {}
                _ => kept.push(c),
            }
        }
        Ok(Staircase { corners: kept })
    }

    pub fn corners(&self) -> &[Corner] {
        &self.corners
    }

    pub fn len(&self) -> usize {
        self.corners.len()
    }

    pub fn is_empty(&self) -> bool {
        self.corners.is_empty()
    }

    /// Corner with the smallest `s` (and largest `t`).
    pub fn first(&self) -> &Corner {
        &self.corners[0]
    }

    /// Corner with the smallest `t` (and largest `s`).
    pub fn last(&self) -> &Corner {
        self.corners.last().expect("nonempty staircase")
    }

    /// Componentwise minima `(min s, min t)`.
    pub fn minima(&self) -> Corner {
        Corner {
            s: self.first().s.clone(),
            t: self.last().t.clone(),
        }
    }

    /// Index of the last corner with `s <= value`, if any.
    fn governing(&self, s: &BigInt) -> Option<usize> {
        let n = self.corners.partition_point(|c| &c.s <= s);
        n.checked_sub(1)
    }

    /// Smallest `t` such that `(s, t)` lies in `W`, or `None` if the whole
    /// column at `s` is outside.
    pub fn height(&self, s: &BigInt) -> Option<&BigInt> {
        self.governing(s).map(|i| &self.corners[i].t)
    }

    /// Dominance test: does `c` lie in the represented region?
    pub fn contains(&self, c: &Corner) -> bool {
        self.height(&c.s).is_some_and(|h| &c.t >= h)
    }

    pub fn scale(&self, k: &BigInt) -> Staircase {
        assert!(k.is_positive(), "staircase scale factor must be positive");
        Staircase {
            corners: self.corners.iter().map(|c| c.scale(k)).collect(),
        }
    }

    pub fn translate(&self, by: &Corner) -> Staircase {
        Staircase {
            corners: self.corners.iter().map(|c| c.add(by)).collect(),
        }
    }

    /// Single-corner staircase: the quadrant above `c`.
    pub fn quadrant_at(c: Corner) -> Staircase {
        Staircase { corners: vec![c] }
    }

    /// Vertices of the lower-left convex chain of the corners (the finite
    /// boundary of the convex hull of `W`), from the `s`-minimal corner to
    /// the `t`-minimal one.
    pub fn convex_chain(&self) -> Vec<Corner> {
        let mut hull: Vec<Corner> = Vec::with_capacity(self.corners.len());
        for p in &self.corners {
            while hull.len() >= 2 {
                let o = &hull[hull.len() - 2];
                let a = &hull[hull.len() - 1];
                let cross = (&a.s - &o.s) * (&p.t - &o.t) - (&a.t - &o.t) * (&p.s - &o.s);
                if cross.is_positive() {
                    break;
                }
                hull.pop();
            }
            hull.push(p.clone());
        }
        hull
    }
}

/// Axis-aligned box `[s0, s1) x [t0, t1)` in corner coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub s0: BigInt,
    pub s1: BigInt,
    pub t0: BigInt,
    pub t1: BigInt,
}

impl Cell {
    pub fn area(&self) -> BigInt {
        (&self.s1 - &self.s0) * (&self.t1 - &self.t0)
    }
}

/// Decomposes `W(outer) \ W(inner)` into disjoint boxes, one per interval
/// between consecutive breakpoints of the two staircases.
///
/// The difference is bounded iff `inner` starts no later in `s` and ends no
/// higher in `t` than `outer`; otherwise `UnboundedRegion`.
pub fn band_cells(outer: &Staircase, inner: &Staircase) -> Result<Vec<Cell>> {
    if inner.first().s > outer.first().s || inner.last().t > outer.last().t {
        return Err(Error::UnboundedRegion);
    }
    let start = &outer.first().s;
    let end = &inner.last().s;
    let mut breaks: Vec<&BigInt> = outer
        .corners
        .iter()
        .chain(inner.corners.iter())
        .map(|c| &c.s)
        .filter(|s| *s >= start && *s <= end)
        .collect();
    breaks.push(start);
    breaks.sort();
    breaks.dedup();

    let mut cells = Vec::new();
    for w in breaks.windows(2) {
        let (a, b) = (w[0], w[1]);
        let lo = outer.height(a).expect("column at or after the outer start");
        let hi = match inner.height(a) {
            Some(h) => h,
            None => continue,
        };
        if hi > lo {
            cells.push(Cell {
                s0: a.clone(),
                s1: b.clone(),
                t0: lo.clone(),
                t1: hi.clone(),
            });
        }
    }
    Ok(cells)
}

/// Exact count of lattice points whose corners fall in the given cells.
pub fn count_cells(cone: &Cone2, cells: &[Cell]) -> BigInt {
    // Row counts depend on `s` only modulo `det_abs`.
    let d = &cone.det_abs;
    let mut total = BigInt::zero();
    for cell in cells {
        let width = &cell.s1 - &cell.s0;
        if !width.is_positive() {
            continue;
        }
        let (periods, rem) = width.div_rem(d);
        let mut period_sum = BigInt::zero();
        let mut k = BigInt::zero();
        while &k < d {
            let row = cone.count_row(&(&cell.s0 + &k), &cell.t0, &cell.t1);
            if k < rem {
                total += &row;
            }
            period_sum += row;
            k += 1;
        }
        total += period_sum * periods;
    }
    total
}

/// Euclidean area of the cells pulled back to lattice space.
pub fn area_of_cells(cone: &Cone2, cells: &[Cell]) -> Rat {
    let st: BigInt = cells.iter().map(Cell::area).sum();
    Rat::new(st, cone.det_abs.clone())
}

fn check_threshold(threshold: &Corner, stair: &Staircase) -> Result<()> {
    if stair.minima() != *threshold {
        return Err(Error::UnboundedRegion);
    }
    Ok(())
}

/// Area of `{s >= threshold.s, t >= threshold.t} \ W(stair)` in lattice space.
///
/// The region is bounded exactly when the threshold is the componentwise
/// minimum of the staircase corners.
pub fn staircase_complement_area(cone: &Cone2, threshold: &Corner, stair: &Staircase) -> Result<Rat> {
    check_threshold(threshold, stair)?;
    let cells = band_cells(&Staircase::quadrant_at(threshold.clone()), stair)?;
    Ok(area_of_cells(cone, &cells))
}

/// Number of lattice points in `{s >= threshold.s, t >= threshold.t} \ W(stair)`.
pub fn count_lattice_complement(
    cone: &Cone2,
    threshold: &Corner,
    stair: &Staircase,
) -> Result<BigInt> {
    check_threshold(threshold, stair)?;
    let cells = band_cells(&Staircase::quadrant_at(threshold.clone()), stair)?;
    Ok(count_cells(cone, &cells))
}

/// Area between the threshold lines and the convex chain of `stair`, i.e.
/// the part of the threshold quadrant not covered by the convex hull of `W`.
pub fn area_below_convex_chain(cone: &Cone2, threshold: &Corner, stair: &Staircase) -> Result<Rat> {
    check_threshold(threshold, stair)?;
    let chain = stair.convex_chain();
    // Twice the corner-space area, as a sum of trapezoids.
    let mut twice = BigInt::zero();
    for w in chain.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        twice += (&b.s - &a.s) * (&a.t + &b.t - &threshold.t * 2);
    }
    Ok(Rat::new(twice, cone.det_abs.clone() * 2))
}

//! Monomial ideals of the semigroup ring `k[cone ∩ Z^2]`.
//!
//! An ideal is stored by its minimal generators and their staircase. Since
//! the semigroup is normal, `x^p` lies in the ideal iff the corner of `p`
//! dominates a staircase corner.
//!
//! The saturation `I : m^∞` is described by two facet thresholds: a point is
//! in it iff both of its corner coordinates reach the componentwise minima
//! of the generator corners. Symbolic powers are never expanded into
//! generators; `I^(n)` is the region above `n` times the thresholds.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::{
    band_cells, count_cells, count_lattice_complement, Cone2, Corner, LatticePoint, Staircase,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    cone: Cone2,
    // Minimal generators, in staircase order.
    gens: Vec<LatticePoint>,
    stair: Staircase,
}

/// Minimal facet values `(c1, c2)` over the generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Thresholds {
    pub c1: BigInt,
    pub c2: BigInt,
}

impl Thresholds {
    pub fn as_corner(&self) -> Corner {
        Corner::new(self.c1.clone(), self.c2.clone())
    }

    pub fn scale(&self, k: &BigInt) -> Thresholds {
        Thresholds {
            c1: &self.c1 * k,
            c2: &self.c2 * k,
        }
    }
}

/// `I^order = x^principal_part * cofactor` with the cofactor primary to the
/// maximal ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionFactorization {
    pub order: u64,
    pub principal_part: LatticePoint,
    pub cofactor: MonomialIdeal,
}

impl MonomialIdeal {
    pub fn new(cone: Cone2, gens: impl IntoIterator<Item = LatticePoint>) -> Result<Self> {
        let gens: Vec<LatticePoint> = gens.into_iter().collect();
        if gens.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(bad) = gens.iter().find(|g| !cone.contains(g)) {
            return Err(Error::GeneratorOutsideCone(bad.clone()));
        }
        let stair = Staircase::pareto_minimal(gens.iter().map(|g| cone.corner_coords(g)))?;
        Ok(Self::from_staircase(cone, stair))
    }

    /// Builds the ideal from a staircase of lattice corners in the first quadrant.
    fn from_staircase(cone: Cone2, stair: Staircase) -> Self {
        let gens = stair
            .corners()
            .iter()
            .map(|c| cone.lattice_preimage(c).expect("staircase corners are lattice corners"))
            .collect();
        MonomialIdeal { cone, gens, stair }
    }

    pub fn cone(&self) -> &Cone2 {
        &self.cone
    }

    /// Minimal generators, ordered by increasing first corner coordinate.
    pub fn generators(&self) -> &[LatticePoint] {
        &self.gens
    }

    pub fn staircase(&self) -> &Staircase {
        &self.stair
    }

    pub fn is_principal(&self) -> bool {
        self.gens.len() == 1
    }

    /// Monomial membership: `x^p ∈ I`.
    pub fn contains(&self, p: &LatticePoint) -> bool {
        self.stair.contains(&self.cone.corner_coords(p))
    }

    /// Frobenius power `I^[q]`: every generator multiplied by `q`.
    pub fn frobenius_power(&self, q: impl Into<BigInt>) -> Result<MonomialIdeal> {
        let q = q.into();
        if !q.is_positive() {
            return Err(Error::BadParameters(format!("Frobenius exponent {q} must be positive")));
        }
        Ok(Self::from_staircase(self.cone.clone(), self.stair.scale(&q)))
    }

    /// Product ideal, generated by pairwise sums of generators.
    pub fn product(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let sums = self
            .stair
            .corners()
            .iter()
            .flat_map(|a| other.stair.corners().iter().map(move |b| a.add(b)));
        let stair = Staircase::pareto_minimal(sums).expect("nonempty generator lists");
        Self::from_staircase(self.cone.clone(), stair)
    }

    /// Ordinary power `I^n`.
    ///
    /// Computed as `I^n = I^(n-1) * I` with a Pareto reduction after every
    /// product, which yields the same minimal generators as reducing all
    /// `C(n+s-1, s-1)` multiset sums at once but keeps the intermediate
    /// lists at staircase size.
    pub fn ordinary_power(&self, n: u64) -> Result<MonomialIdeal> {
        if n == 0 {
            return Err(Error::BadParameters("ordinary power exponent must be positive".into()));
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.product(self);
        }
        Ok(acc)
    }

    pub fn thresholds(&self) -> Thresholds {
        let m = self.stair.minima();
        Thresholds { c1: m.s, c2: m.t }
    }

    /// Is `x^p` in the saturation `I : m^∞`?
    pub fn saturation_contains(&self, p: &LatticePoint) -> bool {
        self.cone.corner_coords(p).dominates(&self.stair.minima())
    }

    /// `ℓ(H^0_m(R/I))`: lattice points of the saturation region not in `I`.
    pub fn gap_length(&self) -> BigInt {
        count_lattice_complement(&self.cone, &self.stair.minima(), &self.stair)
            .expect("thresholds are the staircase minima")
    }

    /// Lattice points of the saturation region outside `I`, row by row.
    pub fn gap_points(&self) -> Vec<LatticePoint> {
        let cells = band_cells(&Staircase::quadrant_at(self.stair.minima()), &self.stair)
            .expect("thresholds are the staircase minima");
        let d = self.cone.det_abs();
        let mut out = Vec::new();
        for cell in &cells {
            let mut s = cell.s0.clone();
            while s < cell.s1 {
                let mut t = cell.t0.clone();
                // Step to the first lattice corner of the row, then by det_abs.
                while t < cell.t1 && !self.cone.is_lattice_corner(&Corner::new(s.clone(), t.clone())) {
                    t += 1;
                }
                while t < cell.t1 {
                    let c = Corner::new(s.clone(), t.clone());
                    out.push(self.cone.lattice_preimage(&c).expect("lattice corner"));
                    t += d;
                }
                s += 1;
            }
        }
        out
    }

    /// A saturated ideal here is reflexive: `H^0_m(R/I) = 0`.
    pub fn is_saturated(&self) -> bool {
        self.gap_length().is_zero()
    }

    /// The saturation `I : m^∞` as an ideal. Its minimal generators are among
    /// the generators of `I` and the gap points.
    pub fn saturation(&self) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.extend(self.gap_points());
        MonomialIdeal::new(self.cone.clone(), gens).expect("gap points lie in the cone")
    }

    /// `ℓ(larger / I)` for a monomial ideal `larger ⊇ I`: the lattice points
    /// of `W_larger \ W_I`.
    pub fn colength_in(&self, larger: &MonomialIdeal) -> Result<BigInt> {
        let cells = band_cells(&larger.stair, &self.stair)?;
        Ok(count_cells(&self.cone, &cells))
    }

    /// Finds the least `r <= max_order` with `r[I] = 0` in the class group,
    /// i.e. `r * thresholds` is the corner of a lattice point `u`, and splits
    /// `I^r = x^u * J`.
    pub fn torsion_factorization(&self, max_order: u64) -> Result<TorsionFactorization> {
        if !self.is_saturated() {
            return Err(Error::NotSaturated);
        }
        let base = self.stair.minima();
        let order = (1..=max_order)
            .find(|&r| self.cone.is_lattice_corner(&base.scale(&BigInt::from(r))))
            .ok_or(Error::NotTorsionWithin(max_order))?;
        let shift = base.scale(&BigInt::from(order));
        let principal_part = self.cone.lattice_preimage(&shift).expect("checked lattice corner");
        let power = self.ordinary_power(order)?;
        let neg = Corner::new(-shift.s.clone(), -shift.t.clone());
        let cofactor = Self::from_staircase(self.cone.clone(), power.stair.translate(&neg));
        debug_assert!(cofactor.thresholds().c1.is_zero() && cofactor.thresholds().c2.is_zero());
        Ok(TorsionFactorization {
            order,
            principal_part,
            cofactor,
        })
    }

    /// Is the ideal primary to the maximal ideal (both thresholds zero)?
    pub fn is_m_primary(&self) -> bool {
        let th = self.thresholds();
        th.c1.is_zero() && th.c2.is_zero()
    }

    /// Is this the unit ideal?
    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    fn corners(i: &MonomialIdeal) -> Vec<(i64, i64)> {
        i.staircase()
            .corners()
            .iter()
            .map(|c| (c.s.clone().try_into().unwrap(), c.t.clone().try_into().unwrap()))
            .collect()
    }

    fn veronese3() -> Cone2 {
        Cone2::new(pt(1, 0), pt(1, 3)).unwrap()
    }

    fn a3() -> Cone2 {
        Cone2::new(pt(0, 1), pt(3, -1)).unwrap()
    }

    #[test]
    fn construction_and_validation() {
        let i = MonomialIdeal::new(Cone2::quadrant(), vec![pt(2, 0), pt(0, 3), pt(2, 3)]).unwrap();
        assert_eq!(i.generators(), &[pt(2, 0), pt(0, 3)]);
        assert!(i.contains(&pt(3, 1)));
        assert!(!i.contains(&pt(1, 2)));
        assert_eq!(
            MonomialIdeal::new(Cone2::quadrant(), vec![pt(-1, 0)]),
            Err(Error::GeneratorOutsideCone(pt(-1, 0)))
        );
        assert_eq!(MonomialIdeal::new(Cone2::quadrant(), vec![]), Err(Error::EmptyInput));
    }

    #[test]
    fn frobenius_scales_generators() {
        let i = MonomialIdeal::new(Cone2::quadrant(), vec![pt(2, 0), pt(0, 3)]).unwrap();
        let f = i.frobenius_power(2).unwrap();
        assert_eq!(f.generators(), &[pt(4, 0), pt(0, 6)]);
        assert_eq!(i.frobenius_power(1).unwrap(), i);
        let v = MonomialIdeal::new(veronese3(), vec![pt(1, 0), pt(1, 1)]).unwrap();
        assert_eq!(corners(&v.frobenius_power(2).unwrap()), vec![(0, 6), (2, 4)]);
        assert!(i.frobenius_power(0).is_err());
    }

    #[test]
    fn ordinary_power_examples() {
        let v = MonomialIdeal::new(veronese3(), vec![pt(1, 0), pt(1, 1)]).unwrap();
        let v2 = v.ordinary_power(2).unwrap();
        assert_eq!(v2.generators(), &[pt(2, 0), pt(2, 1), pt(2, 2)]);
        assert_eq!(corners(&v2), vec![(0, 6), (1, 5), (2, 4)]);

        let a = MonomialIdeal::new(a3(), vec![pt(3, -1), pt(1, 0)]).unwrap();
        assert_eq!(corners(&a.ordinary_power(3).unwrap()), vec![(3, 3), (5, 2), (7, 1), (9, 0)]);
        assert_eq!(a.ordinary_power(1).unwrap(), a);
    }

    #[test]
    fn thresholds_examples() {
        let a = MonomialIdeal::new(a3(), vec![pt(3, -1), pt(1, 0)]).unwrap();
        assert_eq!(a.thresholds(), Thresholds { c1: 1.into(), c2: 0.into() });
        let v = MonomialIdeal::new(veronese3(), vec![pt(1, 0), pt(1, 1)]).unwrap();
        assert_eq!(v.thresholds(), Thresholds { c1: 0.into(), c2: 2.into() });
        let q = MonomialIdeal::new(Cone2::quadrant(), vec![pt(2, 0), pt(0, 3)]).unwrap();
        assert_eq!(q.thresholds(), Thresholds { c1: 0.into(), c2: 0.into() });
    }

    #[test]
    fn saturation_checks() {
        let v = MonomialIdeal::new(veronese3(), vec![pt(1, 0), pt(1, 1)]).unwrap();
        assert!(v.is_saturated());
        let q = MonomialIdeal::new(Cone2::quadrant(), vec![pt(2, 0), pt(0, 3)]).unwrap();
        assert!(!q.is_saturated());
        assert_eq!(q.gap_length(), BigInt::from(6));
        assert_eq!(q.gap_points().len(), 6);
        assert_eq!(q.saturation().generators(), &[pt(0, 0)]);
        let p = MonomialIdeal::new(veronese3(), vec![pt(4, 7)]).unwrap();
        assert!(p.is_saturated());
    }

    #[test]
    fn torsion_examples() {
        let v = MonomialIdeal::new(veronese3(), vec![pt(1, 0), pt(1, 1)]).unwrap();
        let tf = v.torsion_factorization(10).unwrap();
        assert_eq!(tf.order, 3);
        assert_eq!(tf.principal_part, pt(2, 0));
        assert_eq!(tf.cofactor.generators(), &[pt(1, 0), pt(1, 1), pt(1, 2), pt(1, 3)]);

        let a = MonomialIdeal::new(a3(), vec![pt(3, -1), pt(1, 0)]).unwrap();
        let tf = a.torsion_factorization(10).unwrap();
        assert_eq!(tf.order, 3);
        assert_eq!(tf.principal_part, pt(3, -1));
        assert_eq!(corners(&tf.cofactor), vec![(0, 3), (2, 2), (4, 1), (6, 0)]);

        let p = MonomialIdeal::new(Cone2::quadrant(), vec![pt(2, 5)]).unwrap();
        let tf = p.torsion_factorization(1).unwrap();
        assert_eq!((tf.order, tf.principal_part), (1, pt(2, 5)));
        assert!(tf.cofactor.is_unit());

        assert_eq!(v.torsion_factorization(2), Err(Error::NotTorsionWithin(2)));
        let q = MonomialIdeal::new(Cone2::quadrant(), vec![pt(2, 0), pt(0, 3)]).unwrap();
        assert_eq!(q.torsion_factorization(5), Err(Error::NotSaturated));
    }
}

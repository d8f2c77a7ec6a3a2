//! Numerical invariants of `R/I` for a monomial ideal `I`.
//!
//! The generalized Hilbert-Kunz multiplicity is the area of the bounded
//! region between the saturation quadrant `LC_I` and the staircase `W_I`.
//! Everything else here is a lattice count of some region derived from the
//! staircases of Frobenius, ordinary and symbolic powers.
//!
//! `e_gHK` splits as `ε + (Frobenius part)`, see [`eg_hk_parts`]. For the
//! `A_{r-1}` family both parts equal `m(r-m)/(2r)`.

mod quasi;

pub use quasi::{fit_quasi_polynomial, quasi_poly_fit, QuasiPolynomial, DEFAULT_WINDOW};

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::geometry::{area_below_convex_chain, staircase_complement_area, Corner, Rat};
use crate::ideal::MonomialIdeal;

/// `e_gHK(R/I)` as an exact rational.
pub fn eg_hk(ideal: &MonomialIdeal) -> Rat {
    let stair = ideal.staircase();
    staircase_complement_area(ideal.cone(), &stair.minima(), stair)
        .expect("thresholds are the staircase minima")
}

/// Exact limit of `ℓ(H^0_m(R/I^n)) / n^2`: the area of the saturation
/// quadrant not covered by the convex hull of `W_I`.
pub fn epsilon_multiplicity(ideal: &MonomialIdeal) -> Rat {
    let stair = ideal.staircase();
    area_below_convex_chain(ideal.cone(), &stair.minima(), stair)
        .expect("thresholds are the staircase minima")
}

/// The two limits `(lim ℓ(I^(q)/I^q)/q^2, lim ℓ(I^q/I^[q])/q^2)`. They sum
/// to [`eg_hk`].
pub fn eg_hk_parts(ideal: &MonomialIdeal) -> (Rat, Rat) {
    let eps = epsilon_multiplicity(ideal);
    let rest = eg_hk(ideal) - &eps;
    (eps, rest)
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// The generalized Hilbert-Kunz function `F(n) = ℓ(H^0_m(R/I^[p^n]))` for
/// `n = 0..=n_max`.
pub fn ghk_function(ideal: &MonomialIdeal, p: u64, n_max: u32) -> Result<Vec<BigInt>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut q = BigInt::one();
    let mut out = Vec::with_capacity(n_max as usize + 1);
    for _ in 0..=n_max {
        out.push(ideal.frobenius_power(q.clone())?.gap_length());
        q *= p;
    }
    Ok(out)
}

/// Three-way split of the Frobenius gap for a saturated ideal:
/// `ℓ(I^(q)/I^[q]) = ℓ(I^(q)/I^q) + ℓ(I^q/I^[q])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KeylemSplit {
    pub total_gap: BigInt,
    pub sym_vs_ord: BigInt,
    pub ord_vs_frob: BigInt,
}

impl KeylemSplit {
    pub fn is_additive(&self) -> bool {
        self.total_gap == &self.sym_vs_ord + &self.ord_vs_frob
    }
}

/// Counts the three lengths independently; additivity is a checkable
/// property, not a construction.
pub fn keylem_split(ideal: &MonomialIdeal, q: u64) -> Result<KeylemSplit> {
    if !ideal.is_saturated() {
        return Err(Error::NotSaturated);
    }
    let frob = ideal.frobenius_power(q)?;
    let ord = ideal.ordinary_power(q)?;
    Ok(KeylemSplit {
        total_gap: frob.gap_length(),
        sym_vs_ord: ord.gap_length(),
        ord_vs_frob: frob.colength_in(&ord)?,
    })
}

/// `ℓ(H^0_m(R/I^n))` for `n = 1..=n_max`.
pub fn h0_powers(ideal: &MonomialIdeal, n_max: u64) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n_max as usize);
    let mut power = ideal.clone();
    for n in 1..=n_max {
        if n > 1 {
            power = power.product(ideal);
        }
        out.push(power.gap_length());
    }
    out
}

/// Hilbert-Samuel multiplicity `e(J)` of an ideal primary to the maximal
/// ideal, as twice the area under the Newton boundary.
pub fn newton_multiplicity(j: &MonomialIdeal) -> Result<BigInt> {
    if !j.is_m_primary() {
        return Err(Error::NotMPrimary);
    }
    let twice = area_below_convex_chain(j.cone(), &Corner::new(0, 0), j.staircase())? * Rat::from_integer(2.into());
    if !twice.is_integer() {
        return Err(Error::NonIntegralMultiplicity(twice.to_string()));
    }
    Ok(twice.to_integer())
}

/// `ℓ(H^0_m(R/I^n)) / n^2` at `n = n_max`. An estimate of the epsilon
/// multiplicity, not the limit itself; see [`epsilon_multiplicity`].
pub fn epsilon_estimate(ideal: &MonomialIdeal, n_max: u64) -> Result<Rat> {
    if n_max < 10 {
        return Err(Error::BadParameters(format!("n_max = {n_max} must be at least 10")));
    }
    let power = ideal.ordinary_power(n_max)?;
    let n = BigInt::from(n_max);
    Ok(Rat::new(power.gap_length(), &n * &n))
}

/// Constant `C` with `|F(n)/q^2 - e_gHK| <= C/q` at `q = p^n`: four times the
/// corner-space perimeter `2(W + H)` of the bounding box of the gap region
/// at `q = 1`.
pub fn convergence_constant(ideal: &MonomialIdeal) -> BigInt {
    let stair = ideal.staircase();
    let m = stair.minima();
    let width = &stair.last().s - &m.s;
    let height = &stair.first().t - &m.t;
    (width + height) * 8
}

/// `F(n) / q^2` as an exact rational.
pub fn normalized(count: &BigInt, q: &BigInt) -> Rat {
    Rat::new(count.clone(), q * q)
}

/// Leading coefficient `e(J) / (2 r^2)` predicted for the ordinary-power
/// sequence by the torsion factorization `I^r = x^u J`.
pub fn predicted_leading_coefficient(order: u64, e_j: &BigInt) -> Rat {
    let r = BigInt::from(order);
    Rat::new(e_j.clone(), &r * &r * 2)
}

/// Is the gap count within the convergence bound for this `q`?
pub fn within_convergence_bound(ideal: &MonomialIdeal, count: &BigInt, q: &BigInt) -> bool {
    let err = (normalized(count, q) - eg_hk(ideal)).abs();
    let bound = Rat::new(convergence_constant(ideal), q.clone());
    err <= bound
}

//! Exact detection of eventually quasi-polynomial integer sequences.
//!
//! A sequence `ℓ(n)` is fitted per residue class of `n` modulo the period by
//! the quadratic through the last three class samples. The fit is accepted
//! only if it reproduces at least `window` trailing class samples exactly.
//! The input slice is indexed from `n = 1`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::geometry::Rat;

/// Minimum number of trailing samples per class a fit must reproduce.
pub const DEFAULT_WINDOW: usize = 5;

/// Minimum class length, in periods, accepted by [`quasi_poly_fit`].
const MIN_PERIODS: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiPolynomial {
    pub period: usize,
    /// `[α2, α1, α0]` for each residue `n mod period`.
    pub coefficients: Vec<[Rat; 3]>,
    /// Smallest `n` from which every later term is reproduced.
    pub onset: usize,
}

impl QuasiPolynomial {
    pub fn eval(&self, n: usize) -> Rat {
        let [a2, a1, a0] = &self.coefficients[n % self.period];
        let n = Rat::from_integer(BigInt::from(n));
        a2 * &n * &n + a1 * &n + a0
    }

    /// Common leading coefficient `α2`.
    pub fn leading(&self) -> &Rat {
        &self.coefficients[0][0]
    }
}

fn quadratic_through(pts: [(usize, &BigInt); 3]) -> [Rat; 3] {
    let r = |v: &BigInt| Rat::from_integer(v.clone());
    let n = |k: usize| Rat::from_integer(BigInt::from(k));
    let [(n1, v1), (n2, v2), (n3, v3)] = pts;
    let d12 = (r(v2) - r(v1)) / (n(n2) - n(n1));
    let d23 = (r(v3) - r(v2)) / (n(n3) - n(n2));
    let a2 = (d23 - &d12) / (n(n3) - n(n1));
    let a1 = d12 - &a2 * (n(n1) + n(n2));
    let a0 = r(v1) - &a1 * n(n1) - &a2 * n(n1) * n(n1);
    [a2, a1, a0]
}

/// Fits with the default window; requires `seq.len() >= 7 * period`.
pub fn quasi_poly_fit(seq: &[BigInt], period: usize) -> Result<QuasiPolynomial> {
    fit_quasi_polynomial(seq, period, DEFAULT_WINDOW)
}

pub fn fit_quasi_polynomial(seq: &[BigInt], period: usize, window: usize) -> Result<QuasiPolynomial> {
    if period == 0 || window < 3 {
        return Err(Error::BadParameters(format!(
            "period {period} must be positive and window {window} at least 3"
        )));
    }
    let needed = period * MIN_PERIODS.max(window);
    if seq.len() < needed {
        return Err(Error::SequenceTooShort {
            len: seq.len(),
            period,
            needed,
        });
    }

    let mut coefficients = vec![[Rat::default(), Rat::default(), Rat::default()]; period];
    let mut onset = 1;
    for residue in 0..period {
        // Class members n ≡ residue (mod period), n in 1..=len.
        let members: Vec<usize> = (1..=seq.len()).filter(|n| n % period == residue).collect();
        let tail = &members[members.len() - 3..];
        let coeffs = quadratic_through([
            (tail[0], &seq[tail[0] - 1]),
            (tail[1], &seq[tail[1] - 1]),
            (tail[2], &seq[tail[2] - 1]),
        ]);
        let candidate = QuasiPolynomial {
            period,
            coefficients: vec![coeffs.clone(); period],
            onset: 1,
        };
        let reproduced = members
            .iter()
            .rev()
            .take_while(|&&n| candidate.eval(n) == Rat::from_integer(seq[n - 1].clone()))
            .count();
        if reproduced < window {
            return Err(Error::NoStabilization { residue });
        }
        let first_ok = members[members.len() - reproduced];
        // Every n after the last failing class member is covered.
        let class_onset = if reproduced == members.len() {
            1
        } else {
            first_ok + 1 - period
        };
        onset = onset.max(class_onset);
        coefficients[residue] = coeffs;
    }

    let lead = &coefficients[0][0];
    if let Some(other) = coefficients.iter().find(|c| &c[0] != lead) {
        return Err(Error::LeadingCoefficientMismatch(lead.to_string(), other[0].to_string()));
    }
    Ok(QuasiPolynomial {
        period,
        coefficients,
        onset,
    })
}

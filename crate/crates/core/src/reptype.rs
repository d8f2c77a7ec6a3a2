//! `e_gHK(M) = Σ u_i v_j ℓ(Tor_1(X_i, X_j))` over a Gorenstein ring of finite
//! Cohen-Macaulay type, for a module `M` of positive depth.
//!
//! No homological algebra happens here. The stable Cohen-Macaulay type `u`,
//! the splitting densities `v` and the Tor-length table are inputs, with the
//! `A_{r-1}` data (`min{i, j, r-i, r-j}` and `v_j = 1/r`) built in. The
//! densities are normalized by `q^d`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::Rat;

/// Multiplicities `u_i` of the indecomposable non-free MCM modules in the
/// MCM approximation of `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableCMType(Vec<BigInt>);

impl StableCMType {
    pub fn new(u: Vec<BigInt>) -> Result<Self> {
        if u.iter().any(Signed::is_negative) {
            return Err(Error::BadParameters("stable CM type entries must be nonnegative".into()));
        }
        Ok(StableCMType(u))
    }

    /// The unit vector `e_index` (1-based) of length `len`.
    pub fn unit(len: usize, index: usize) -> Result<Self> {
        if index == 0 || index > len {
            return Err(Error::BadParameters(format!("index {index} outside 1..={len}")));
        }
        let mut u = vec![BigInt::zero(); len];
        u[index - 1] = BigInt::from(1);
        Ok(StableCMType(u))
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Splitting densities `v_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingVector(Vec<Rat>);

impl SplittingVector {
    pub fn new(v: Vec<Rat>) -> Result<Self> {
        if v.iter().any(Signed::is_negative) {
            return Err(Error::BadParameters("splitting densities must be nonnegative".into()));
        }
        Ok(SplittingVector(v))
    }

    pub fn constant(len: usize, value: Rat) -> Result<Self> {
        Self::new(vec![value; len])
    }

    pub fn entries(&self) -> &[Rat] {
        &self.0
    }
}

/// Symmetric table of lengths `ℓ(Tor_1(X_i, X_j))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorTable {
    entries: Vec<Vec<BigInt>>,
}

impl TorTable {
    pub fn new(entries: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = entries.len();
        for row in &entries {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: row.len() });
            }
            if row.iter().any(Signed::is_negative) {
                return Err(Error::BadParameters("Tor lengths must be nonnegative".into()));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if entries[i][j] != entries[j][i] {
                    return Err(Error::AsymmetricTable(i + 1, j + 1));
                }
            }
        }
        Ok(TorTable { entries })
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// 1-based entry `ℓ(Tor_1(X_i, X_j))`.
    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.entries
    }
}

/// The double sum `Σ_{i,j} u_i v_j T(i,j)`.
pub fn eg_hk_from_type(u: &StableCMType, v: &SplittingVector, table: &TorTable) -> Result<Rat> {
    let n = table.dim();
    for got in [u.len(), v.0.len()] {
        if got != n {
            return Err(Error::DimensionMismatch { expected: n, got });
        }
    }
    let mut total = Rat::zero();
    for (ui, row) in u.0.iter().zip(&table.entries) {
        if ui.is_zero() {
            continue;
        }
        let inner: Rat = row
            .iter()
            .zip(&v.0)
            .map(|(t, vj)| vj * Rat::from_integer(t.clone()))
            .sum();
        total += inner * Rat::from_integer(ui.clone());
    }
    Ok(total)
}

/// Tor lengths for `k[[x,y,z]]/(xy - z^r)` with `X_i = (x, z^i)`.
pub fn a_tor_table(r: u64) -> Result<TorTable> {
    if r < 2 {
        return Err(Error::BadParameters(format!("r = {r} must be at least 2")));
    }
    let entries = (1..r)
        .map(|i| (1..r).map(|j| BigInt::from(i.min(j).min(r - i).min(r - j))).collect())
        .collect();
    TorTable::new(entries)
}

/// `e_gHK(M) = (1/r) Σ_{i,j} u_i min{i, j, r-i, r-j}` over the `A_{r-1}` singularity.
pub fn eg_hk_a(r: u64, u: &StableCMType) -> Result<Rat> {
    let table = a_tor_table(r)?;
    let v = SplittingVector::constant(table.dim(), Rat::new(1.into(), BigInt::from(r)))?;
    eg_hk_from_type(u, &v, &table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    fn ty(u: &[i64]) -> StableCMType {
        StableCMType::new(u.iter().map(|&x| BigInt::from(x)).collect()).unwrap()
    }

    #[test]
    fn table_entries() {
        let t = a_tor_table(5).unwrap();
        assert_eq!(t.entry(2, 3), &BigInt::from(2));
        assert_eq!(t.entry(1, 4), &BigInt::from(1));
        let t = a_tor_table(2).unwrap();
        assert_eq!(t.dim(), 1);
        assert_eq!(t.entry(1, 1), &BigInt::from(1));
        assert!(a_tor_table(1).is_err());
    }

    #[test]
    fn formula_examples() {
        let third = SplittingVector::constant(2, rat(1, 3)).unwrap();
        let t3 = a_tor_table(3).unwrap();
        assert_eq!(eg_hk_from_type(&ty(&[0, 0]), &third, &t3).unwrap(), rat(0, 1));
        assert_eq!(eg_hk_from_type(&ty(&[1, 0]), &third, &t3).unwrap(), rat(2, 3));
        let quarter = SplittingVector::constant(3, rat(1, 4)).unwrap();
        assert_eq!(eg_hk_from_type(&ty(&[0, 1, 0]), &quarter, &a_tor_table(4).unwrap()).unwrap(), rat(1, 1));
    }

    #[test]
    fn a_type_examples() {
        assert_eq!(eg_hk_a(3, &ty(&[1, 0])).unwrap(), rat(2, 3));
        assert_eq!(eg_hk_a(4, &ty(&[1, 1, 1])).unwrap(), rat(5, 2));
        assert_eq!(eg_hk_a(7, &ty(&[0; 6])).unwrap(), rat(0, 1));
        assert_eq!(eg_hk_a(4, &ty(&[1, 1])), Err(Error::DimensionMismatch { expected: 3, got: 2 }));
    }

    #[test]
    fn table_validation() {
        let asym = vec![vec![1.into(), 2.into()], vec![3.into(), 1.into()]];
        assert_eq!(TorTable::new(asym), Err(Error::AsymmetricTable(1, 2)));
        let ragged = vec![vec![1.into(), 2.into()], vec![2.into()]];
        assert!(matches!(TorTable::new(ragged), Err(Error::DimensionMismatch { .. })));
        assert!(StableCMType::new(vec![BigInt::from(-1)]).is_err());
        assert!(SplittingVector::new(vec![rat(-1, 2)]).is_err());
    }
}

//! Built-in instances: the `r`-Veronese of `k[[x,y]]` with its reflexive
//! ideals, the `A_{r-1}` singularity `k[[x,y,z]]/(xy - z^r)` with `(x, z^m)`,
//! and monomial ideals of the polynomial ring.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::geometry::{Cone2, LatticePoint, Rat};
use crate::ideal::MonomialIdeal;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Veronese { r: u64, m: u64 },
    ASingularity { r: u64, m: u64 },
    Quadrant { generators: Vec<LatticePoint> },
    /// Any cone and generators.
    Explicit {
        rays: [LatticePoint; 2],
        generators: Vec<LatticePoint>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricInstance {
    pub family: Family,
    pub ideal: MonomialIdeal,
    /// Known exact value of `e_gHK`, when the family has one.
    pub closed_form: Option<Rat>,
}

impl ToricInstance {
    pub fn cone(&self) -> &Cone2 {
        self.ideal.cone()
    }
}

fn check_params(r: u64, m: u64) -> Result<()> {
    if r < 2 || m < 1 || m >= r {
        return Err(Error::BadParameters(format!(
            "need r >= 2 and 1 <= m <= r - 1, got r = {r}, m = {m}"
        )));
    }
    Ok(())
}

/// `R = k[[x^r, x^(r-1)y, ..., y^r]]` and `I_m = (x^r, ..., x^(r-m) y^m)`.
///
/// Lattice model: the monomial `x^a y^b` with `r | a + b` sits at
/// `((a + b)/r, b)`, so `R` is the semigroup ring of the cone spanned by
/// `(1,0)` and `(1,r)`, and `x^(r-k) y^k` is `(1, k)`.
pub fn veronese(r: u64, m: u64) -> Result<ToricInstance> {
    check_params(r, m)?;
    let cone = Cone2::new(LatticePoint::new(1, 0), LatticePoint::new(1, r))?;
    let gens = (0..=m).map(|k| LatticePoint::new(1, k));
    let ideal = MonomialIdeal::new(cone, gens)?;
    Ok(ToricInstance {
        family: Family::Veronese { r, m },
        ideal,
        closed_form: Some(Rat::new(BigInt::from(m) * (m + 1), BigInt::from(r) * 2)),
    })
}

/// `R = k[[x,y,z]]/(xy - z^r)` and `I_m = (x, z^m)`, with `x ↦ (r,-1)`,
/// `y ↦ (0,1)`, `z ↦ (1,0)`.
pub fn a_singularity(r: u64, m: u64) -> Result<ToricInstance> {
    check_params(r, m)?;
    let x = LatticePoint::new(BigInt::from(r), -1);
    let y = LatticePoint::new(0, 1);
    let cone = Cone2::new(y, x.clone())?;
    let ideal = MonomialIdeal::new(cone, vec![x, LatticePoint::new(m, 0)])?;
    Ok(ToricInstance {
        family: Family::ASingularity { r, m },
        ideal,
        closed_form: Some(Rat::new(BigInt::from(m) * (r - m), BigInt::from(r))),
    })
}

/// A monomial ideal of `k[x, y]`.
pub fn quadrant(generators: Vec<LatticePoint>) -> Result<ToricInstance> {
    let ideal = MonomialIdeal::new(Cone2::quadrant(), generators.clone())?;
    Ok(ToricInstance {
        family: Family::Quadrant { generators },
        ideal,
        closed_form: None,
    })
}

/// A monomial ideal of the semigroup ring of the cone spanned by `rays`.
pub fn explicit(rays: [LatticePoint; 2], generators: Vec<LatticePoint>) -> Result<ToricInstance> {
    let [r1, r2] = rays.clone();
    let ideal = MonomialIdeal::new(Cone2::new(r1, r2)?, generators.clone())?;
    Ok(ToricInstance {
        family: Family::Explicit { rays, generators },
        ideal,
        closed_form: None,
    })
}

impl Family {
    pub fn instantiate(&self) -> Result<ToricInstance> {
        match self {
            Family::Veronese { r, m } => veronese(*r, *m),
            Family::ASingularity { r, m } => a_singularity(*r, *m),
            Family::Quadrant { generators } => quadrant(generators.clone()),
            Family::Explicit { rays, generators } => explicit(rays.clone(), generators.clone()),
        }
    }
}

fn parse_points(list: &str, bad: &dyn Fn() -> Error) -> Result<Vec<LatticePoint>> {
    list.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|g| {
            let inner = g
                .trim()
                .strip_prefix('(')
                .and_then(|g| g.strip_suffix(')'))
                .ok_or_else(bad)?;
            let (a, b) = inner.split_once(',').ok_or_else(bad)?;
            let a: BigInt = a.trim().parse().map_err(|_| bad())?;
            let b: BigInt = b.trim().parse().map_err(|_| bad())?;
            Ok(LatticePoint::new(a, b))
        })
        .collect()
}

fn write_points(f: &mut fmt::Formatter<'_>, pts: &[LatticePoint]) -> fmt::Result {
    for (i, g) in pts.iter().enumerate() {
        if i > 0 {
            write!(f, ";")?;
        }
        write!(f, "({},{})", g.x, g.y)?;
    }
    Ok(())
}

/// `veronese:r,m`, `a:r,m`, `quadrant:(a1,b1);(a2,b2);...` or
/// `explicit:(ray1);(ray2)|(a1,b1);...`.
impl FromStr for Family {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let bad = || Error::BadParameters(format!("unrecognized family `{spec}`"));
        let (name, args) = spec.split_once(':').ok_or_else(bad)?;
        let pair = |s: &str| -> Result<(u64, u64)> {
            let (a, b) = s.split_once(',').ok_or_else(bad)?;
            Ok((
                a.trim().parse().map_err(|_| bad())?,
                b.trim().parse().map_err(|_| bad())?,
            ))
        };
        match name.trim() {
            "veronese" => pair(args).map(|(r, m)| Family::Veronese { r, m }),
            "a" => pair(args).map(|(r, m)| Family::ASingularity { r, m }),
            "quadrant" => Ok(Family::Quadrant {
                generators: parse_points(args, &bad)?,
            }),
            "explicit" => {
                let (rays, gens) = args.split_once('|').ok_or_else(bad)?;
                let rays: [LatticePoint; 2] = parse_points(rays, &bad)?.try_into().map_err(|_| bad())?;
                Ok(Family::Explicit {
                    rays,
                    generators: parse_points(gens, &bad)?,
                })
            }
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Veronese { r, m } => write!(f, "veronese:{r},{m}"),
            Family::ASingularity { r, m } => write!(f, "a:{r},{m}"),
            Family::Quadrant { generators } => {
                write!(f, "quadrant:")?;
                write_points(f, generators)
            }
            Family::Explicit { rays, generators } => {
                write!(f, "explicit:")?;
                write_points(f, rays)?;
                write!(f, "|")?;
                write_points(f, generators)
            }
        }
    }
}

//! Brute-force oracles and random instance generators shared by the
//! integration tests. Everything here works in plain `i64` lattice
//! coordinates, without corner coordinates or staircases.

#![allow(dead_code)]

use ghk_core::geometry::{Cone2, LatticePoint};
use ghk_core::ideal::MonomialIdeal;
use num_traits::ToPrimitive;
use rand::Rng;

pub type P = (i64, i64);

fn dot(a: P, b: P) -> i64 {
    a.0 * b.0 + a.1 * b.1
}

fn cross(a: P, b: P) -> i64 {
    a.0 * b.1 - a.1 * b.0
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// A cone given by two rays, with membership by orientation tests.
#[derive(Clone, Debug)]
pub struct BruteCone {
    pub r1: P,
    pub r2: P,
}

impl BruteCone {
    pub fn new(r1: P, r2: P) -> Self {
        BruteCone { r1, r2 }
    }

    /// Inward normals: `n1` vanishes on `r1`, `n2` on `r2`.
    pub fn normals(&self) -> (P, P) {
        let prim = |p: P| {
            let g = gcd(p.0, p.1);
            (p.0 / g, p.1 / g)
        };
        let mut n1 = prim((-self.r1.1, self.r1.0));
        if dot(n1, self.r2) < 0 {
            n1 = (-n1.0, -n1.1);
        }
        let mut n2 = prim((-self.r2.1, self.r2.0));
        if dot(n2, self.r1) < 0 {
            n2 = (-n2.0, -n2.1);
        }
        (n1, n2)
    }

    pub fn contains(&self, p: P) -> bool {
        let (n1, n2) = self.normals();
        dot(n1, p) >= 0 && dot(n2, p) >= 0
    }

    pub fn to_cone(&self) -> Cone2 {
        Cone2::new(pt(self.r1), pt(self.r2)).unwrap()
    }
}

pub fn pt(p: P) -> LatticePoint {
    LatticePoint::new(p.0, p.1)
}

pub fn from_pt(p: &LatticePoint) -> P {
    (p.x.to_i64().unwrap(), p.y.to_i64().unwrap())
}

pub fn in_ideal(cone: &BruteCone, gens: &[P], p: P) -> bool {
    gens.iter().any(|&g| cone.contains((p.0 - g.0, p.1 - g.1)))
}

/// All sums of `n` generators (with repetition).
pub fn multiset_sums(gens: &[P], n: u32) -> Vec<P> {
    let mut out = vec![(0, 0)];
    for _ in 0..n {
        let mut next: Vec<P> = out
            .iter()
            .flat_map(|a| gens.iter().map(move |g| (a.0 + g.0, a.1 + g.1)))
            .collect();
        next.sort_unstable();
        next.dedup();
        out = next;
    }
    out
}

/// Facet minima over a generating set.
pub fn thresholds(cone: &BruteCone, gens: &[P]) -> (i64, i64) {
    let (n1, n2) = cone.normals();
    (
        gens.iter().map(|&g| dot(n1, g)).min().unwrap(),
        gens.iter().map(|&g| dot(n2, g)).min().unwrap(),
    )
}

/// A box in `x`-space containing every lattice point with
/// `lo.0 <= <n1,p> <= hi.0` and `lo.1 <= <n2,p> <= hi.1`.
fn search_box(cone: &BruteCone, lo: P, hi: P) -> i64 {
    let (n1, n2) = cone.normals();
    let det = cross(n1, n2).abs();
    let nmax = [n1.0, n1.1, n2.0, n2.1].iter().map(|v| v.abs()).max().unwrap();
    let cmax = [lo.0, lo.1, hi.0, hi.1].iter().map(|v| v.abs()).max().unwrap();
    // Cramer's rule: |x| <= 2 * cmax * nmax / det.
    2 * cmax * nmax / det + 1
}

/// Lattice points `p` with `<n_j, p> >= th_j` that are not in the ideal
/// generated by `gens`.
pub fn gap_points(cone: &BruteCone, gens: &[P], th: (i64, i64)) -> Vec<P> {
    let (n1, n2) = cone.normals();
    let s_hi = gens.iter().map(|&g| dot(n1, g)).max().unwrap();
    let t_hi = gens.iter().map(|&g| dot(n2, g)).max().unwrap();
    let b = search_box(cone, th, (s_hi, t_hi));
    let mut out = Vec::new();
    for x in -b..=b {
        for y in -b..=b {
            let p = (x, y);
            if dot(n1, p) >= th.0 && dot(n2, p) >= th.1 && !in_ideal(cone, gens, p) {
                out.push(p);
            }
        }
    }
    out
}

/// `ℓ(H^0_m(R/J))` for `J` generated by `gens`, with `LC` given by the
/// facet minima of `gens`.
pub fn gap_count(cone: &BruteCone, gens: &[P]) -> usize {
    gap_points(cone, gens, thresholds(cone, gens)).len()
}

/// `ℓ(W_big \ W_small)` for two generating sets with `small ⊆ big`.
pub fn colength(cone: &BruteCone, big: &[P], small: &[P]) -> usize {
    let (n1, n2) = cone.normals();
    let th = thresholds(cone, big);
    let s_hi = small.iter().map(|&g| dot(n1, g)).max().unwrap();
    let t_hi = small.iter().map(|&g| dot(n2, g)).max().unwrap();
    let b = search_box(cone, th, (s_hi, t_hi));
    let mut n = 0;
    for x in -b..=b {
        for y in -b..=b {
            let p = (x, y);
            if in_ideal(cone, big, p) && !in_ideal(cone, small, p) {
                n += 1;
            }
        }
    }
    n
}

pub fn scale(gens: &[P], q: i64) -> Vec<P> {
    gens.iter().map(|g| (g.0 * q, g.1 * q)).collect()
}

/// A random cone with ray entries in `[-bound, bound]`.
pub fn random_cone(rng: &mut impl Rng, bound: i64) -> BruteCone {
    loop {
        let r1 = (rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound));
        let r2 = (rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound));
        if cross(r1, r2) != 0 {
            return BruteCone::new(r1, r2);
        }
    }
}

/// Between one and `max_gens` random lattice points of the cone, with
/// coordinates in `[-bound, bound]`.
pub fn random_generators(rng: &mut impl Rng, cone: &BruteCone, bound: i64, max_gens: usize) -> Vec<P> {
    let k = rng.gen_range(1..=max_gens);
    let mut gens = Vec::with_capacity(k);
    while gens.len() < k {
        let p = (rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound));
        if cone.contains(p) {
            gens.push(p);
        }
    }
    gens
}

pub fn ideal_of(cone: &BruteCone, gens: &[P]) -> MonomialIdeal {
    MonomialIdeal::new(cone.to_cone(), gens.iter().copied().map(pt)).unwrap()
}

/// A random cone and ideal, small enough for brute force.
pub fn random_instance(rng: &mut impl Rng, ray_bound: i64, gen_bound: i64, max_gens: usize) -> (BruteCone, Vec<P>) {
    let cone = random_cone(rng, ray_bound);
    let gens = random_generators(rng, &cone, gen_bound, max_gens);
    (cone, gens)
}

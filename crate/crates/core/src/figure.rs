//! SVG picture of the region `LC_I \ W_I`.
//!
//! Without a marker exponent the whole gap is one red region. With `q`, the
//! gap is split at the scaled ordinary power `W_{I^q} / q`: red is the part
//! below it (symbolic vs. ordinary), green the part between it and `W_I`
//! (ordinary vs. Frobenius). All polygons are kept as exact rationals so
//! their areas can be checked against `e_gHK`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::decimal::fixed;
use crate::error::Result;
use crate::geometry::{band_cells, Cell, Cone2, LatticePoint, Rat, Staircase};
use crate::ideal::MonomialIdeal;

const PLACES: u32 = 6;
const PIXELS: i64 = 480;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RegionKind {
    /// `W_I`, clipped to the viewport.
    Ideal,
    Red,
    Green,
}

impl RegionKind {
    pub fn class(self) -> &'static str {
        match self {
            RegionKind::Ideal => "ideal",
            RegionKind::Red => "red",
            RegionKind::Green => "green",
        }
    }

    fn fill(self) -> &'static str {
        match self {
            RegionKind::Ideal => "#c8c8c8",
            RegionKind::Red => "#d62728",
            RegionKind::Green => "#2ca02c",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polygon {
    pub kind: RegionKind,
    pub vertices: Vec<(Rat, Rat)>,
}

impl Polygon {
    /// Shoelace area.
    pub fn area(&self) -> Rat {
        let n = self.vertices.len();
        let mut twice = Rat::zero();
        for i in 0..n {
            let (x0, y0) = &self.vertices[i];
            let (x1, y1) = &self.vertices[(i + 1) % n];
            twice += x0 * y1 - x1 * y0;
        }
        twice.abs() / Rat::from_integer(2.into())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionFigure {
    pub polygons: Vec<Polygon>,
    /// Far endpoints of the two cone edges; both edges start at the origin.
    pub ray_ends: [(Rat, Rat); 2],
    pub generators: Vec<LatticePoint>,
    /// `(xmin, ymin, xmax, ymax)`.
    pub viewport: [Rat; 4],
}

impl RegionFigure {
    pub fn area_of(&self, kind: RegionKind) -> Rat {
        self.polygons.iter().filter(|p| p.kind == kind).map(Polygon::area).sum()
    }
}

fn int(v: &BigInt) -> Rat {
    Rat::from_integer(v.clone())
}

fn cell_polygon(cone: &Cone2, cell: &Cell, scale: &BigInt, kind: RegionKind) -> Polygon {
    let k = int(scale);
    let (s0, s1) = (int(&cell.s0) / &k, int(&cell.s1) / &k);
    let (t0, t1) = (int(&cell.t0) / &k, int(&cell.t1) / &k);
    let vertices = [(&s0, &t0), (&s1, &t0), (&s1, &t1), (&s0, &t1)]
        .into_iter()
        .map(|(s, t)| cone.real_preimage(s, t))
        .collect();
    Polygon { kind, vertices }
}

/// Builds the exact figure. `q_mark` of `Some(q)` splits the gap into red and
/// green parts using `I^q`.
pub fn region_figure(ideal: &MonomialIdeal, q_mark: Option<u64>) -> Result<RegionFigure> {
    let cone = ideal.cone();
    let stair = ideal.staircase();
    let minima = stair.minima();
    let one = BigInt::one();
    let mut polygons = Vec::new();

    // Corner-space viewport [0, s_max] x [0, t_max].
    let width = &stair.last().s - &minima.s;
    let height = &stair.first().t - &minima.t;
    let pad = width.clone().max(height.clone()).max(one.clone());
    let s_max = &stair.last().s + &pad;
    let t_max = &stair.first().t + &pad;

    let mut outline = vec![(int(&stair.first().s), int(&t_max))];
    for (i, c) in stair.corners().iter().enumerate() {
        if i > 0 {
            outline.push((int(&c.s), int(&stair.corners()[i - 1].t)));
        }
        outline.push((int(&c.s), int(&c.t)));
    }
    outline.push((int(&s_max), int(&stair.last().t)));
    outline.push((int(&s_max), int(&t_max)));
    polygons.push(Polygon {
        kind: RegionKind::Ideal,
        vertices: outline.iter().map(|(s, t)| cone.real_preimage(s, t)).collect(),
    });

    let lc = Staircase::quadrant_at(minima.clone());
    match q_mark {
        None => {
            for cell in band_cells(&lc, stair)? {
                polygons.push(cell_polygon(cone, &cell, &one, RegionKind::Red));
            }
        }
        Some(q) => {
            let qb = BigInt::from(q);
            let ordinary = ideal.ordinary_power(q)?;
            let frobenius = stair.scale(&qb);
            let lc_q = Staircase::quadrant_at(minima.scale(&qb));
            for cell in band_cells(&lc_q, ordinary.staircase())? {
                polygons.push(cell_polygon(cone, &cell, &qb, RegionKind::Red));
            }
            for cell in band_cells(ordinary.staircase(), &frobenius)? {
                polygons.push(cell_polygon(cone, &cell, &qb, RegionKind::Green));
            }
        }
    }

    let origin = (Rat::zero(), Rat::zero());
    let ray_ends = [
        cone.real_preimage(&Rat::zero(), &int(&t_max)),
        cone.real_preimage(&int(&s_max), &Rat::zero()),
    ];
    let far = cone.real_preimage(&int(&s_max), &int(&t_max));
    let box_pts = [&origin, &ray_ends[0], &ray_ends[1], &far];
    let min_by = |f: fn(&(Rat, Rat)) -> &Rat| box_pts.iter().map(|p| f(p)).min().unwrap().clone();
    let max_by = |f: fn(&(Rat, Rat)) -> &Rat| box_pts.iter().map(|p| f(p)).max().unwrap().clone();
    let (xmin, xmax) = (min_by(|p| &p.0), max_by(|p| &p.0));
    let (ymin, ymax) = (min_by(|p| &p.1), max_by(|p| &p.1));
    let margin = (&xmax - &xmin).max(&ymax - &ymin) / Rat::from_integer(20.into());

    Ok(RegionFigure {
        polygons,
        ray_ends,
        generators: ideal.generators().to_vec(),
        viewport: [xmin - &margin, ymin - &margin, xmax + &margin, ymax + &margin],
    })
}

/// Serializes a figure as an SVG 1.1 document. Coordinates are written in
/// lattice units inside a `scale(1,-1)` group, so the `y` axis points up.
pub fn to_svg(fig: &RegionFigure) -> String {
    let [xmin, ymin, xmax, ymax] = &fig.viewport;
    let w = xmax - xmin;
    let h = ymax - ymin;
    let f = |r: &Rat| fixed(r, PLACES);
    let (px_w, px_h) = if w >= h {
        (Rat::from_integer(PIXELS.into()), Rat::from_integer(PIXELS.into()) * &h / &w)
    } else {
        (Rat::from_integer(PIXELS.into()) * &w / &h, Rat::from_integer(PIXELS.into()))
    };
    let dot = w.clone().max(h.clone()) / Rat::from_integer(120.into());

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"{} {} {} {}\">",
        fixed(&px_w, 0),
        fixed(&px_h, 0),
        f(xmin),
        f(&-ymax.clone()),
        f(&w),
        f(&h)
    );
    out.push_str("<g transform=\"scale(1,-1)\">\n");
    for p in &fig.polygons {
        let pts: Vec<String> = p.vertices.iter().map(|(x, y)| format!("{},{}", f(x), f(y))).collect();
        let _ = writeln!(
            out,
            "<polygon class=\"{}\" fill=\"{}\" stroke=\"none\" points=\"{}\"/>",
            p.kind.class(),
            p.kind.fill(),
            pts.join(" ")
        );
    }
    for (x, y) in &fig.ray_ends {
        let _ = writeln!(
            out,
            "<line class=\"ray\" x1=\"0\" y1=\"0\" x2=\"{}\" y2=\"{}\" stroke=\"black\" stroke-width=\"1.5\" vector-effect=\"non-scaling-stroke\"/>",
            f(x),
            f(y)
        );
    }
    for g in &fig.generators {
        let _ = writeln!(
            out,
            "<circle class=\"generator\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"black\"/>",
            g.x,
            g.y,
            f(&dot)
        );
    }
    out.push_str("</g>\n</svg>\n");
    out
}

pub fn render_region_svg(ideal: &MonomialIdeal, q_mark: Option<u64>) -> Result<String> {
    Ok(to_svg(&region_figure(ideal, q_mark)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{a_singularity, veronese};
    use crate::invariants::eg_hk;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    #[test]
    fn a31_red_area() {
        let inst = a_singularity(3, 1).unwrap();
        let fig = region_figure(&inst.ideal, None).unwrap();
        assert_eq!(fig.area_of(RegionKind::Red), rat(2, 3));
        assert!(fig.area_of(RegionKind::Green).is_zero());
    }

    #[test]
    fn principal_has_no_red() {
        let i = MonomialIdeal::new(Cone2::quadrant(), vec![LatticePoint::new(2, 1)]).unwrap();
        let fig = region_figure(&i, None).unwrap();
        assert!(fig.polygons.iter().all(|p| p.kind == RegionKind::Ideal));
        assert!(!render_region_svg(&i, None).unwrap().contains("class=\"red\""));
    }

    #[test]
    fn veronese_split_sums_to_eg_hk() {
        let inst = veronese(3, 1).unwrap();
        let fig = region_figure(&inst.ideal, Some(2)).unwrap();
        let red = fig.area_of(RegionKind::Red);
        let green = fig.area_of(RegionKind::Green);
        assert_eq!(red + green, rat(1, 3));
        for q in [1, 3, 5] {
            let fig = region_figure(&inst.ideal, Some(q)).unwrap();
            assert_eq!(fig.area_of(RegionKind::Red) + fig.area_of(RegionKind::Green), eg_hk(&inst.ideal));
        }
    }

    #[test]
    fn svg_is_deterministic() {
        let inst = veronese(4, 2).unwrap();
        let a = render_region_svg(&inst.ideal, Some(3)).unwrap();
        let b = render_region_svg(&inst.ideal, Some(3)).unwrap();
        assert_eq!(a, b);
        assert!(a.starts_with("<?xml"));
        assert!(a.contains("class=\"green\""));
    }
}

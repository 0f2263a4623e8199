//! Static SVG drawings of two-dimensional polyhedral complexes.

use std::fmt::Write;

use num_traits::{Signed, ToPrimitive};

use crate::convex::Polyhedron;
use crate::rational::{add, fmt_rat, scale, QVec, Rat};

const SIZE: f64 = 480.0;
const MARGIN: f64 = 24.0;

#[derive(Debug, Clone)]
pub struct SvgOptions {
    /// Rays and lines are cut at this max-norm length from their base point.
    pub ray_length: Rat,
    pub fill_regions: bool,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            ray_length: Rat::from_integer(2.into()),
            fill_regions: true,
        }
    }
}

fn unit(v: &QVec, len: &Rat) -> QVec {
    let m = v.iter().map(|x| x.abs()).max().expect("nonempty");
    scale(v, &(len / m))
}

/// Truncated outline points of a cell.
fn outline(p: &Polyhedron, len: &Rat) -> Vec<QVec> {
    let mut out = Vec::new();
    for x in p.points() {
        out.push(x.clone());
        for r in p.rays() {
            out.push(add(x, &unit(r, len)));
        }
        for l in p.lineality() {
            let d = unit(l, len);
            out.push(add(x, &d));
            out.push(add(x, &scale(&d, &Rat::from_integer((-1).into()))));
        }
    }
    out
}

fn f(x: &Rat) -> f64 {
    x.to_f64().expect("finite")
}

struct Frame {
    min: (f64, f64),
    scale: f64,
    offset: (f64, f64),
}

impl Frame {
    fn new(pts: &[QVec]) -> Frame {
        let (mut lo, mut hi) = ((-1.0f64, -1.0f64), (1.0f64, 1.0f64));
        if !pts.is_empty() {
            lo = (f64::INFINITY, f64::INFINITY);
            hi = (f64::NEG_INFINITY, f64::NEG_INFINITY);
            for p in pts {
                let (x, y) = (f(&p[0]), f(&p[1]));
                lo = (lo.0.min(x), lo.1.min(y));
                hi = (hi.0.max(x), hi.1.max(y));
            }
        }
        let w = (hi.0 - lo.0).max(1.0);
        let h = (hi.1 - lo.1).max(1.0);
        let scale = (SIZE - 2.0 * MARGIN) / w.max(h);
        let offset = (
            MARGIN + ((SIZE - 2.0 * MARGIN) - (hi.0 - lo.0) * scale) / 2.0,
            MARGIN + ((SIZE - 2.0 * MARGIN) - (hi.1 - lo.1) * scale) / 2.0,
        );
        Frame { min: lo, scale, offset }
    }

    fn map(&self, p: &QVec) -> (f64, f64) {
        let x = self.offset.0 + (f(&p[0]) - self.min.0) * self.scale;
        let y = SIZE - (self.offset.1 + (f(&p[1]) - self.min.1) * self.scale);
        (x, y)
    }
}

fn hull(mut pts: Vec<(f64, f64)>) -> Vec<(f64, f64)> {
    pts.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let cross = |o: (f64, f64), a: (f64, f64), b: (f64, f64)| (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0);
    let mut lower: Vec<(f64, f64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0.0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(f64, f64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0.0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Regions as polygons, edges as lines and vertices as labelled markers.
/// Every cell must live in the plane.
pub fn render(cells: &[Polyhedron], opts: &SvgOptions) -> String {
    let len = &opts.ray_length;
    let all: Vec<QVec> = cells.iter().flat_map(|c| outline(c, len)).collect();
    let frame = Frame::new(&all);
    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">"
    );
    let _ = writeln!(s, "  <rect x=\"0\" y=\"0\" width=\"{SIZE}\" height=\"{SIZE}\" fill=\"white\"/>");
    for c in cells.iter().filter(|c| c.dim() == 2) {
        let poly = hull(outline(c, len).iter().map(|p| frame.map(p)).collect());
        let pts: Vec<String> = poly.iter().map(|(x, y)| format!("{x:.3},{y:.3}")).collect();
        let fill = if opts.fill_regions { "#dde8f5" } else { "none" };
        let _ = writeln!(
            s,
            "  <polygon class=\"region\" points=\"{}\" fill=\"{fill}\" stroke=\"none\"/>",
            pts.join(" ")
        );
    }
    for c in cells.iter().filter(|c| c.dim() == 1) {
        let ends: Vec<QVec> = if c.points().len() == 2 {
            c.points().to_vec()
        } else if let Some(r) = c.rays().first() {
            vec![c.points()[0].clone(), add(&c.points()[0], &unit(r, len))]
        } else {
            let d = unit(&c.lineality()[0], len);
            vec![
                add(&c.points()[0], &scale(&d, &Rat::from_integer((-1).into()))),
                add(&c.points()[0], &d),
            ]
        };
        let (a, b) = (frame.map(&ends[0]), frame.map(&ends[1]));
        let _ = writeln!(
            s,
            "  <line class=\"edge\" x1=\"{:.3}\" y1=\"{:.3}\" x2=\"{:.3}\" y2=\"{:.3}\" stroke=\"black\" stroke-width=\"2\"/>",
            a.0, a.1, b.0, b.1
        );
    }
    for c in cells.iter().filter(|c| c.dim() == 0) {
        let p = &c.points()[0];
        let (x, y) = frame.map(p);
        let label = format!("({})", p.iter().map(fmt_rat).collect::<Vec<_>>().join(","));
        let _ = writeln!(s, "  <circle class=\"vertex\" cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"4\" fill=\"black\"/>");
        let _ = writeln!(
            s,
            "  <text x=\"{:.3}\" y=\"{:.3}\" font-family=\"sans-serif\" font-size=\"12\">{label}</text>",
            x + 6.0,
            y - 6.0
        );
    }
    s.push_str("</svg>\n");
    s
}

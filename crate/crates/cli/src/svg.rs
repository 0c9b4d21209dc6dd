//! Static SVG 1.1 rendering of an inclusion region.
//!
//! World coordinates are used directly in the `viewBox`, with the imaginary
//! axis flipped so that positive imaginary parts point up.

use std::fmt::Write as _;

use eigloc::InclusionRegion;
use num_complex::Complex64;

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2",
];
const DASHES: [&str; 3] = ["none", "6,3", "2,2"];
const PIXELS: f64 = 640.0;

struct Bounds {
    min_x: f64,
    max_x: f64,
    min_y: f64,
    max_y: f64,
}

impl Bounds {
    fn add_disc(&mut self, c: Complex64, r: f64) {
        self.min_x = self.min_x.min(c.re - r);
        self.max_x = self.max_x.max(c.re + r);
        self.min_y = self.min_y.min(-c.im - r);
        self.max_y = self.max_y.max(-c.im + r);
    }
}

fn f(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".to_string()
    } else {
        s
    }
}

pub fn render(region: &InclusionRegion, eigenvalues: Option<&[Complex64]>) -> String {
    let mut b = Bounds {
        min_x: -1.0,
        max_x: 1.0,
        min_y: -1.0,
        max_y: 1.0,
    };
    for g in region.groups() {
        for d in g.discs() {
            b.add_disc(d.center, d.radius);
        }
    }
    b.add_disc(region.special_point(), 0.0);
    for &z in eigenvalues.unwrap_or(&[]) {
        b.add_disc(z, 0.0);
    }
    let extent = (b.max_x - b.min_x).max(b.max_y - b.min_y);
    let margin = 0.1 * extent;
    let (x0, y0) = (b.min_x - margin, b.min_y - margin);
    let (w, h) = (b.max_x - b.min_x + 2.0 * margin, b.max_y - b.min_y + 2.0 * margin);
    let stroke = extent * 0.003;
    let mark = extent * 0.012;

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="{} {} {} {}">"#,
        f(PIXELS),
        f(PIXELS * h / w),
        f(x0),
        f(y0),
        f(w),
        f(h)
    );
    let _ = writeln!(
        out,
        "<title>Deflated Gersgorin regions G_S(i), i = 1..{}</title>",
        region.order()
    );
    let _ = writeln!(
        out,
        r##"<g class="axes" stroke="#999999" stroke-width="{s}"><line x1="{}" y1="0.000000" x2="{}" y2="0.000000"/><line x1="0.000000" y1="{}" x2="0.000000" y2="{}"/></g>"##,
        f(x0),
        f(x0 + w),
        f(y0),
        f(y0 + h),
        s = f(stroke * 0.5)
    );
    let _ = writeln!(
        out,
        r##"<circle class="unit-circle" cx="0.000000" cy="0.000000" r="1.000000" fill="none" stroke="#666666" stroke-width="{}" stroke-dasharray="{}"/>"##,
        f(stroke),
        f(stroke * 4.0)
    );

    for (g, group) in region.groups().iter().enumerate() {
        let color = PALETTE[g % PALETTE.len()];
        let dash = DASHES[(g / PALETTE.len()) % DASHES.len()];
        let _ = writeln!(
            out,
            r#"<g class="group" id="group-{}" stroke="{color}" stroke-width="{}" fill="{color}" fill-opacity="0.06" stroke-dasharray="{dash}">"#,
            g + 1,
            f(stroke)
        );
        for (label, d) in group.iter() {
            if d.radius == 0.0 {
                let _ = writeln!(
                    out,
                    r#"<circle class="point" data-label="{label}" cx="{}" cy="{}" r="{}" fill-opacity="1"/>"#,
                    f(d.center.re),
                    f(-d.center.im),
                    f(mark * 0.6)
                );
            } else {
                let _ = writeln!(
                    out,
                    r#"<circle data-label="{label}" cx="{}" cy="{}" r="{}"/>"#,
                    f(d.center.re),
                    f(-d.center.im),
                    f(d.radius)
                );
            }
        }
        let _ = writeln!(out, "</g>");
    }

    let p = region.special_point();
    let _ = writeln!(
        out,
        r##"<path class="special-point" d="M {} {} L {} {} L {} {} L {} {} Z" fill="#000000"/>"##,
        f(p.re - mark),
        f(-p.im),
        f(p.re),
        f(-p.im - mark),
        f(p.re + mark),
        f(-p.im),
        f(p.re),
        f(-p.im + mark)
    );

    if let Some(ev) = eigenvalues {
        let _ = writeln!(
            out,
            r##"<g class="eigenvalues" stroke="#000000" stroke-width="{}">"##,
            f(stroke)
        );
        for z in ev {
            let (x, y) = (z.re, -z.im);
            let _ = writeln!(
                out,
                r#"<path class="eigenvalue" d="M {} {} L {} {} M {} {} L {} {}"/>"#,
                f(x - mark),
                f(y - mark),
                f(x + mark),
                f(y + mark),
                f(x - mark),
                f(y + mark),
                f(x + mark),
                f(y - mark)
            );
        }
        let _ = writeln!(out, "</g>");
    }
    let _ = writeln!(out, "</svg>");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use eigloc::{full_inclusion_region, StochasticMatrix};

    #[test]
    fn exchange_matrix_draws_points() {
        let s = StochasticMatrix::from_rows(&[[0.0, 1.0], [1.0, 0.0]]).unwrap();
        let r = full_inclusion_region(&s).unwrap();
        let svg = render(&r, None);
        assert_eq!(svg.matches(r#"<circle class="point""#).count(), 2);
        assert_eq!(svg.matches("<circle").count(), 3);
        assert!(svg.contains("special-point"));
        assert!(!svg.contains("eigenvalue\""));
    }

    #[test]
    fn deterministic() {
        let s = StochasticMatrix::from_rows(&[[0.5, 0.5], [0.25, 0.75]]).unwrap();
        let r = full_inclusion_region(&s).unwrap();
        assert_eq!(render(&r, None), render(&r, None));
    }
}

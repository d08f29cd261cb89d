//! SVG 1.1 figures: the fundamental triangle and marked points on G_{QP}.
//! Output depends only on the input point list; coordinates are printed with
//! fixed precision so equal inputs give byte-identical files.

use std::fmt::Write;

use super::{
    geodesic_point_exact, geodesic_through, marked_geodesic_points, special_points, Geodesic, HPoint,
};
use crate::error::Result;

const X_MIN: f64 = -1.0;
const X_MAX: f64 = 5.0;
const Y_MAX: f64 = 5.0;
const SCALE: f64 = 100.0;

fn sx(x: f64) -> f64 {
    (x - X_MIN) * SCALE
}

fn sy(y: f64) -> f64 {
    (Y_MAX - y) * SCALE
}

fn header(out: &mut String, title: &str) {
    let (w, h) = ((X_MAX - X_MIN) * SCALE, Y_MAX * SCALE);
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.0} {h:.0}">"#
    )
    .unwrap();
    writeln!(out, "<title>{title}</title>").unwrap();
    writeln!(
        out,
        r##"<defs><clipPath id="half"><rect x="0" y="0" width="{w:.0}" height="{:.0}"/></clipPath></defs>"##,
        sy(0.0)
    )
    .unwrap();
    writeln!(out, r#"<rect x="0" y="0" width="{w:.0}" height="{h:.0}" fill="white"/>"#).unwrap();
    writeln!(
        out,
        r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="black" stroke-width="1"/>"#,
        sx(X_MIN),
        sy(0.0),
        sx(X_MAX),
        sy(0.0)
    )
    .unwrap();
    writeln!(
        out,
        r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="black" stroke-width="1"/>"#,
        sx(0.0),
        sy(0.0),
        sx(0.0),
        sy(4.0)
    )
    .unwrap();
    writeln!(
        out,
        r#"<text x="{:.3}" y="{:.3}" font-size="18" text-anchor="end">H</text>"#,
        sx(-0.8),
        sy(3.0)
    )
    .unwrap();
}

fn circle(out: &mut String, center: f64, radius: f64) {
    writeln!(
        out,
        r##"<circle cx="{:.3}" cy="{:.3}" r="{:.3}" fill="none" stroke="black" stroke-width="1" clip-path="url(#half)"/>"##,
        sx(center),
        sy(0.0),
        radius * SCALE
    )
    .unwrap();
}

fn marker(out: &mut String, z: &HPoint, label: &str, dx: f64, dy: f64) {
    writeln!(out, r#"<circle cx="{:.3}" cy="{:.3}" r="4" fill="black"/>"#, sx(z.re), sy(z.im)).unwrap();
    writeln!(out, r#"<text x="{:.3}" y="{:.3}" font-size="14">{label}</text>"#, sx(z.re) + dx, sy(z.im) + dy)
        .unwrap();
}

fn edge(out: &mut String, a: &HPoint, b: &HPoint) {
    match geodesic_through(a, b) {
        Geodesic::Vertical { x } => circle_free_line(out, x),
        Geodesic::Circle { center, radius } => circle(out, center, radius),
    }
}

fn circle_free_line(out: &mut String, x: f64) {
    writeln!(
        out,
        r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="0" stroke="black" stroke-width="1"/>"#,
        sx(x),
        sy(0.0),
        sx(x)
    )
    .unwrap();
}

/// Arc of the geodesic from `a` to `b` as an SVG path segment.
fn arc_to(a: &HPoint, b: &HPoint) -> String {
    match geodesic_through(a, b) {
        Geodesic::Vertical { .. } => format!("L {:.3} {:.3}", sx(b.re), sy(b.im)),
        Geodesic::Circle { center, radius } => {
            let (ax, ay) = (sx(a.re) - sx(center), sy(a.im) - sy(0.0));
            let (bx, by) = (sx(b.re) - sx(center), sy(b.im) - sy(0.0));
            let sweep = if ax * by - ay * bx > 0.0 { 1 } else { 0 };
            let r = radius * SCALE;
            format!("A {r:.3} {r:.3} 0 0 {sweep} {:.3} {:.3}", sx(b.re), sy(b.im))
        }
    }
}

/// The triangle with vertices at the given points, its three edge geodesics and labels.
pub fn triangle_svg(vertices: &[(HPoint, &str); 3]) -> String {
    let mut out = String::new();
    header(&mut out, "Fundamental triangle");
    let [(p, _), (q, _), (r, _)] = vertices;
    writeln!(
        out,
        r##"<path d="M {:.3} {:.3} {} {} {} Z" fill="#d8e4f0" stroke="none"/>"##,
        sx(p.re),
        sy(p.im),
        arc_to(p, q),
        arc_to(q, r),
        arc_to(r, p)
    )
    .unwrap();
    edge(&mut out, p, q);
    edge(&mut out, q, r);
    edge(&mut out, r, p);
    let offsets = [(-10.0, -10.0), (8.0, 4.0), (-6.0, -10.0)];
    for ((z, label), (dx, dy)) in vertices.iter().zip(offsets) {
        marker(&mut out, z, label, dx, dy);
    }
    out.push_str("</svg>\n");
    out
}

/// The default triangle `P̃Q̃R̃`.
pub fn fundamental_triangle_svg() -> Result<String> {
    let [p, q, r] = special_points()?;
    Ok(triangle_svg(&[(p, "P~"), (q, "Q~"), (r, "R~")]))
}

/// Points on G_{QP} drawn on the half circle through `P̃`.
pub fn geodesic_points_svg(points: &[(HPoint, String)]) -> String {
    let mut out = String::new();
    header(&mut out, "Points on the geodesic G_QP");
    let radius = points.first().map(|(z, _)| z.z().norm()).unwrap_or(0.0);
    circle(&mut out, 0.0, radius);
    for (z, label) in points {
        marker(&mut out, z, label, 8.0, -6.0);
    }
    out.push_str("</svg>\n");
    out
}

/// The default marked points `P̃, η⁻¹(Q₁), M̃, Q̃, R₁, Q₁, η(Q̃), P₁`.
pub fn marked_points_svg() -> Result<String> {
    let mut pts = Vec::new();
    for (name, t) in marked_geodesic_points() {
        pts.push((geodesic_point_exact(&t)?, name.to_string()));
    }
    Ok(geodesic_points_svg(&pts))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_output_is_deterministic() {
        let a = fundamental_triangle_svg().unwrap();
        let b = fundamental_triangle_svg().unwrap();
        assert_eq!(a, b);
        assert!(a.starts_with("<?xml"));
        assert!(a.contains("P~") && a.contains("Q~") && a.contains("R~"));
        assert_eq!(a.matches("<circle").count(), 6);
        assert!(a.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn triangle_edges_match_the_published_circles() {
        let [p, q, r] = special_points().unwrap();
        let mut seen = Vec::new();
        for (a, b) in [(p, q), (q, r), (r, p)] {
            if let Geodesic::Circle { center, radius } = geodesic_through(&a, &b) {
                seen.push((center, radius));
            }
        }
        let expected = [(0.0, 4.253), (8.478, 5.509), (1.382, 4.472)];
        for (c, r) in expected {
            assert!(seen.iter().any(|(c2, r2)| (c - c2).abs() < 5e-4 && (r - r2).abs() < 5e-4));
        }
    }

    #[test]
    fn marked_points_figure() {
        let s = marked_points_svg().unwrap();
        assert!(s.contains("R1") && s.contains("M~") && s.contains("P1"));
        assert_eq!(s, marked_points_svg().unwrap());
    }
}

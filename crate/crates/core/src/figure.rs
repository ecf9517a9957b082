//! Planar SVG drawings of point configurations in two charts: the given one
//! and the one obtained by projecting from a chosen pole.

use std::fmt::Write;

use crate::moebius::{PointCP1, COINCIDENCE_TOL};
use crate::scalar::C64;
use crate::sphere::project_from;

pub const WIDTH: f64 = 800.0;
pub const HEIGHT: f64 = 400.0;
const PANEL: f64 = 400.0;
const MARGIN: f64 = 40.0;

struct Panel<'a> {
    x0: f64,
    title: &'a str,
    /// Finite coordinates with labels; `None` for points at ∞.
    points: Vec<(String, Option<C64>)>,
    pole: Option<C64>,
    centroid: Option<C64>,
}

fn extent(panel: &Panel) -> f64 {
    panel
        .points
        .iter()
        .filter_map(|(_, z)| *z)
        .chain(panel.pole)
        .chain(panel.centroid)
        .map(|z| z.re.abs().max(z.im.abs()))
        .fold(1.0, f64::max)
        * 1.15
}

fn draw(svg: &mut String, panel: &Panel) {
    let r = extent(panel);
    let scale = (PANEL - 2.0 * MARGIN) / (2.0 * r);
    let (cx, cy) = (panel.x0 + PANEL / 2.0, HEIGHT / 2.0);
    let at = |z: C64| (cx + z.re * scale, cy - z.im * scale);
    let _ = writeln!(
        svg,
        r##"  <g><rect x="{:.1}" y="0" width="{PANEL}" height="{HEIGHT}" fill="none" stroke="#999"/>"##,
        panel.x0
    );
    let _ = writeln!(
        svg,
        r##"    <text x="{:.1}" y="22" font-size="15" text-anchor="middle">{}</text>"##,
        cx, panel.title
    );
    let _ = writeln!(
        svg,
        r##"    <line x1="{:.1}" y1="{cy:.1}" x2="{:.1}" y2="{cy:.1}" stroke="#ddd"/><line x1="{cx:.1}" y1="{:.1}" x2="{cx:.1}" y2="{:.1}" stroke="#ddd"/>"##,
        panel.x0 + MARGIN / 2.0,
        panel.x0 + PANEL - MARGIN / 2.0,
        MARGIN,
        HEIGHT - MARGIN / 2.0
    );
    let _ = writeln!(
        svg,
        r##"    <circle cx="{cx:.1}" cy="{cy:.1}" r="{:.1}" fill="none" stroke="#6a8caf" stroke-dasharray="4 3"/>"##,
        scale
    );
    if let Some(c) = panel.centroid {
        let (x, y) = at(c);
        let _ = writeln!(
            svg,
            r##"    <path d="M{:.1} {:.1} L{:.1} {:.1} M{:.1} {:.1} L{:.1} {:.1}" stroke="#c0392b" stroke-width="2"/>"##,
            x - 6.0,
            y - 6.0,
            x + 6.0,
            y + 6.0,
            x - 6.0,
            y + 6.0,
            x + 6.0,
            y - 6.0
        );
    }
    if let Some(p) = panel.pole {
        let (x, y) = at(p);
        let _ = writeln!(
            svg,
            r##"    <rect x="{:.1}" y="{:.1}" width="10" height="10" fill="#e67e22"/><text x="{:.1}" y="{:.1}" font-size="12">pole</text>"##,
            x - 5.0,
            y - 5.0,
            x + 8.0,
            y + 16.0
        );
    }
    let mut at_infinity = Vec::new();
    for (label, z) in &panel.points {
        match z {
            Some(z) => {
                let (x, y) = at(*z);
                let _ = writeln!(
                    svg,
                    r##"    <circle cx="{x:.1}" cy="{y:.1}" r="5" fill="#2c3e50"/><text x="{:.1}" y="{:.1}" font-size="13">{label}</text>"##,
                    x + 7.0,
                    y - 7.0
                );
            }
            None => at_infinity.push(label.as_str()),
        }
    }
    if !at_infinity.is_empty() {
        let _ = writeln!(
            svg,
            r##"    <text x="{:.1}" y="{:.1}" font-size="13">at ∞: {}</text>"##,
            panel.x0 + 12.0,
            HEIGHT - 12.0,
            at_infinity.join(", ")
        );
    }
    svg.push_str("  </g>\n");
}

/// Two panels: the points in their own chart with the pole marked, and
/// their projections from the pole. In the second panel the centroid of all
/// but the last projected point is drawn as a cross, so a last point lying
/// on the cross shows the centroid property.
pub fn render_svg(points: &[PointCP1], pole: &PointCP1) -> String {
    let labels: Vec<String> = (1..=points.len()).map(|i| format!("P{i}")).collect();
    let finite = |p: &PointCP1| p.affine_or_infinity(COINCIDENCE_TOL).finite();
    let left = Panel {
        x0: 0.0,
        title: "configuration",
        points: labels
            .iter()
            .cloned()
            .zip(points.iter().map(finite))
            .collect(),
        pole: finite(pole),
        centroid: None,
    };
    let projected: Vec<Option<C64>> = points
        .iter()
        .map(|p| project_from(pole, p).finite())
        .collect();
    let centroid = match projected.split_last() {
        Some((_, rest)) if !rest.is_empty() && rest.iter().all(Option::is_some) => {
            Some(rest.iter().flatten().sum::<C64>() / rest.len() as f64)
        }
        _ => None,
    };
    let right = Panel {
        x0: PANEL,
        title: "projected from the pole",
        points: labels.into_iter().zip(projected).collect(),
        pole: None,
        centroid,
    };
    let mut svg = format!(
        r##"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif">
  <rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>
"##
    );
    draw(&mut svg, &left);
    draw(&mut svg, &right);
    svg.push_str("</svg>\n");
    svg
}

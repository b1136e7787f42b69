//! Minimal SVG drawings: the Newton boundary with its support, and the fan.

use std::fmt::Write as _;

use mixsing_core::fan::Fan2;
use mixsing_core::newton::NewtonPolyhedron;

const PANEL: f64 = 300.0;
const MARGIN: f64 = 30.0;

/// Newton polygon (left) and fan rays (right) side by side.
pub fn render(np: &NewtonPolyhedron, fan: &Fan2) -> String {
    let mut s = String::new();
    let w = 2.0 * PANEL + 3.0 * MARGIN;
    let h = PANEL + 2.0 * MARGIN;
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#);
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    newton_panel(&mut s, np, MARGIN, MARGIN);
    fan_panel(&mut s, fan, 2.0 * MARGIN + PANEL, MARGIN);
    s.push_str("</svg>\n");
    s
}

fn newton_panel(s: &mut String, np: &NewtonPolyhedron, x0: f64, y0: f64) {
    let max = np.support.iter().flat_map(|p| p.point.iter().copied()).max().unwrap_or(1).max(1) as f64 + 1.0;
    let scale = PANEL / max;
    let at = |p: [u32; 2]| (x0 + p[0] as f64 * scale, y0 + PANEL - p[1] as f64 * scale);
    axes(s, x0, y0);
    for e in &np.compact_edges {
        let (a, b) = (at(e.from), at(e.to));
        let _ = writeln!(s, r#"<line x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}" stroke="navy" stroke-width="2"/>"#, a.0, a.1, b.0, b.1);
    }
    if let (Some(first), Some(last)) = (np.hull_vertices.first(), np.hull_vertices.last()) {
        let (a, b) = (at(*first), at(*last));
        let _ = writeln!(s, r#"<line x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{y0:.1}" stroke="navy" stroke-dasharray="4"/>"#, a.0, a.1, a.0);
        let _ = writeln!(s, r#"<line x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}" stroke="navy" stroke-dasharray="4"/>"#, b.0, b.1, x0 + PANEL, b.1);
    }
    for p in &np.support {
        let (x, y) = at([p.point[0], p.point[1]]);
        let _ = writeln!(s, r#"<circle cx="{x:.1}" cy="{y:.1}" r="4" fill="crimson"><title>({},{})</title></circle>"#, p.point[0], p.point[1]);
    }
}

fn fan_panel(s: &mut String, fan: &Fan2, x0: f64, y0: f64) {
    axes(s, x0, y0);
    for r in fan.rays() {
        let [a, b] = r.v();
        let len = ((a * a + b * b) as f64).sqrt();
        let (x, y) = (x0 + PANEL * 0.9 * a as f64 / len, y0 + PANEL - PANEL * 0.9 * b as f64 / len);
        let _ = writeln!(s, r#"<line x1="{x0:.1}" y1="{:.1}" x2="{x:.1}" y2="{y:.1}" stroke="darkgreen" stroke-width="2"/>"#, y0 + PANEL);
        let _ = writeln!(s, r#"<text x="{:.1}" y="{:.1}" font-size="12">{r}</text>"#, x + 4.0, y - 4.0);
    }
}

fn axes(s: &mut String, x0: f64, y0: f64) {
    let _ = writeln!(
        s,
        r#"<polyline points="{x0:.1},{y0:.1} {x0:.1},{:.1} {:.1},{:.1}" fill="none" stroke="gray"/>"#,
        y0 + PANEL,
        x0 + PANEL,
        y0 + PANEL
    );
}

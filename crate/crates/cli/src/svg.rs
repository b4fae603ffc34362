//! SVG picture of the rank-2 weight lattice shaded by q-ampleness.
//!
//! A weight `(a, b)` is drawn at `x = a + b/2`, `y = b·√3/2`, which puts the
//! fundamental weights at 60° and the Weyl chambers at their usual hexagonal
//! angles. Floating point is only used here.

use std::fmt::Write;

use flagcoh::qample::ChamberRecord;

const UNIT: f64 = 40.0;
const MARGIN: f64 = 1.0;
const LEGEND_WIDTH: f64 = 5.0;

/// Fill colours by q: dark grey for ample, light grey for 1-ample, then distinct hues.
const PALETTE: [&str; 8] = [
    "#3a3a3a", "#bdbdbd", "#4e79a7", "#e15759", "#59a14f", "#f28e2b", "#b07aa1", "#76b7b2",
];

pub fn colour(qmin: usize) -> &'static str {
    PALETTE[qmin.min(PALETTE.len() - 1)]
}

fn project(a: i64, b: i64) -> (f64, f64) {
    let (a, b) = (a as f64, b as f64);
    (a + b / 2.0, b * 3f64.sqrt() / 2.0)
}

/// Render records produced by `chamber_map(2, range)`.
pub fn render(range: i64, records: &[ChamberRecord]) -> String {
    let r = range as f64;
    let half_width = 1.5 * r + MARGIN;
    let half_height = r * 3f64.sqrt() / 2.0 + MARGIN;
    let width = (2.0 * half_width + LEGEND_WIDTH) * UNIT;
    let height = (2.0 * half_height).max(5.0) * UNIT;
    // lattice coordinates -> pixels, y pointing up
    let to_px = |x: f64, y: f64| ((x + half_width) * UNIT, (half_height - y) * UNIT);

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    );
    let _ = writeln!(
        out,
        "  <title>q-ample chambers of SL3/B, weights in [-{range}, {range}]^2</title>"
    );
    let _ = writeln!(
        out,
        r#"  <rect x="0" y="0" width="{width:.0}" height="{height:.0}" fill="white"/>"#
    );

    // walls <λ, α^∨> = 0 for α_1, α_2 and α_1 + α_2
    let _ = writeln!(
        out,
        r##"  <g stroke="#888888" stroke-width="1" stroke-dasharray="4 3">"##
    );
    for (da, db) in [(0, 1), (1, 0), (1, -1)] {
        let (dx, dy) = project(da, db);
        let scale = r + 0.5;
        let (x1, y1) = to_px(-dx * scale, -dy * scale);
        let (x2, y2) = to_px(dx * scale, dy * scale);
        let _ = writeln!(
            out,
            r#"    <line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}"/>"#
        );
    }
    let _ = writeln!(out, "  </g>");

    let _ = writeln!(out, r#"  <g stroke="black" stroke-width="0.75">"#);
    for rec in records {
        let c = rec.weight.coords();
        let (x, y) = project(c[0], c[1]);
        let (px, py) = to_px(x, y);
        let radius = if rec.regular { 6.0 } else { 3.5 };
        let _ = writeln!(
            out,
            r#"    <circle cx="{px:.2}" cy="{py:.2}" r="{radius}" fill="{}"><title>({},{}) q={}</title></circle>"#,
            colour(rec.qmin.value()),
            c[0],
            c[1],
            rec.qmin
        );
    }
    let _ = writeln!(out, "  </g>");

    let max_q = records.iter().map(|r| r.qmin.value()).max().unwrap_or(0);
    let lx = (2.0 * half_width + 0.5) * UNIT;
    let _ = writeln!(out, r#"  <g font-family="sans-serif" font-size="14">"#);
    for q in 0..=max_q {
        let ly = (0.6 + 0.7 * q as f64) * UNIT;
        let label = match q {
            0 => "q = 0 (ample)".to_string(),
            1 => "q = 1".to_string(),
            _ => format!("q = {q}"),
        };
        let _ = writeln!(
            out,
            r#"    <rect x="{lx:.2}" y="{:.2}" width="14" height="14" fill="{}" stroke="black"/>"#,
            ly - 12.0,
            colour(q)
        );
        let _ = writeln!(
            out,
            r#"    <text x="{:.2}" y="{ly:.2}">{label}</text>"#,
            lx + 22.0
        );
    }
    let ly = (0.6 + 0.7 * (max_q + 1) as f64) * UNIT;
    let _ = writeln!(
        out,
        r#"    <text x="{lx:.2}" y="{ly:.2}">small dots: wall weights</text>"#
    );
    let _ = writeln!(out, "  </g>");
    let _ = writeln!(out, "</svg>");
    out
}

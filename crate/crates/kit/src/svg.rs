//! Single-file SVG line plots.

use std::fmt::Write;

use ur_core::experiments::SweepResult;

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 440.0;
const MARGIN: f64 = 56.0;
const COLORS: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"];

/// Curves of `sweep` as polylines, plus optional `(x, y)` scatter points.
pub fn plot(title: &str, sweep: &SweepResult, scatter: &[(f64, f64)]) -> String {
    let xs = &sweep.grid;
    let (x0, x1) = bounds(xs.iter().copied());
    let ys = sweep
        .curves
        .iter()
        .flat_map(|(_, c)| c.iter().copied())
        .chain(scatter.iter().map(|p| p.1));
    let (y0, y1) = bounds(ys);
    let y1 = if y1 - y0 < 1e-12 { y0 + 1.0 } else { y1 };
    let px = |x: f64| MARGIN + (x - x0) / (x1 - x0).max(f64::MIN_POSITIVE) * (WIDTH - 2.0 * MARGIN);
    let py = |y: f64| HEIGHT - MARGIN - (y - y0) / (y1 - y0) * (HEIGHT - 2.0 * MARGIN);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(out, r#"<text x="{}" y="20" text-anchor="middle">{}</text>"#, WIDTH / 2.0, escape(title));
    let _ = writeln!(
        out,
        r#"<path d="M{m} {b} H{r} M{m} {b} V{m}" stroke="black" fill="none"/>"#,
        m = MARGIN,
        b = HEIGHT - MARGIN,
        r = WIDTH - MARGIN
    );
    for (v, anchor_y) in [(y0, HEIGHT - MARGIN), (y1, MARGIN)] {
        let _ = writeln!(out, r#"<text x="{}" y="{anchor_y}" text-anchor="end">{v:.3}</text>"#, MARGIN - 4.0);
    }
    for (v, anchor_x) in [(x0, MARGIN), (x1, WIDTH - MARGIN)] {
        let _ = writeln!(
            out,
            r#"<text x="{anchor_x}" y="{}" text-anchor="middle">{v:.3}</text>"#,
            HEIGHT - MARGIN + 16.0
        );
    }
    let _ = writeln!(
        out,
        r#"<text x="{}" y="{}" text-anchor="middle">{}</text>"#,
        WIDTH / 2.0,
        HEIGHT - 12.0,
        escape(&sweep.parameter_name)
    );

    for p in scatter {
        let _ = writeln!(
            out,
            r##"<circle cx="{:.2}" cy="{:.2}" r="2" fill="#7f7f7f" fill-opacity="0.6"/>"##,
            px(p.0),
            py(p.1)
        );
    }
    for (k, (label, curve)) in sweep.curves.iter().enumerate() {
        let color = COLORS[k % COLORS.len()];
        let points: Vec<String> = xs
            .iter()
            .zip(curve)
            .map(|(&x, &y)| format!("{:.2},{:.2}", px(x), py(y)))
            .collect();
        let _ = writeln!(
            out,
            r#"<polyline points="{}" stroke="{color}" stroke-width="1.5" fill="none"/>"#,
            points.join(" ")
        );
        let ly = MARGIN + 16.0 * k as f64;
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{ly}" fill="{color}">{}</text>"#,
            WIDTH - MARGIN - 110.0,
            escape(label)
        );
    }
    out.push_str("</svg>\n");
    out
}

fn bounds(values: impl Iterator<Item = f64>) -> (f64, f64) {
    values
        .filter(|v| v.is_finite())
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)))
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

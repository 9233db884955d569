use std::fmt::Write as _;

use super::approx::SpectrumApproximation;

const WIDTH: f64 = 960.0;
const MARGIN: f64 = 40.0;

/// One-file SVG: value axis along the bottom, outer cover on the upper strip,
/// inner points as ticks on the lower strip.
pub fn strip_svg(approx: &SpectrumApproximation) -> String {
    let (lo, hi) = (approx.params.lo, approx.params.hi);
    let x = |v: f64| MARGIN + (v - lo) / (hi - lo) * (WIDTH - 2.0 * MARGIN);
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="170" viewBox="0 0 {WIDTH} 170" font-family="monospace" font-size="11">"#
    );
    let _ = writeln!(
        s,
        r#"<text x="{MARGIN}" y="16">outer cover (Q = {}, N = {})</text>"#,
        approx.params.q, approx.radius
    );
    for i in &approx.outer {
        let (a, b) = (x(i.lo), x(i.hi));
        let _ = writeln!(
            s,
            r#"<rect x="{a:.3}" y="24" width="{:.3}" height="30" fill="steelblue"/>"#,
            (b - a).max(0.5)
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{MARGIN}" y="74">inner points (period ≤ {})</text>"#,
        approx.period_bound
    );
    for p in &approx.inner {
        let a = x(p.value);
        let _ = writeln!(
            s,
            r#"<line x1="{a:.3}" y1="82" x2="{a:.3}" y2="112" stroke="darkred" stroke-width="1"/>"#
        );
    }
    let _ = writeln!(
        s,
        r#"<line x1="{MARGIN}" y1="130" x2="{:.3}" y2="130" stroke="black"/>"#,
        WIDTH - MARGIN
    );
    for k in 0..=8 {
        let v = lo + (hi - lo) * k as f64 / 8.0;
        let a = x(v);
        let _ = writeln!(s, r#"<line x1="{a:.3}" y1="130" x2="{a:.3}" y2="135" stroke="black"/>"#);
        let _ = writeln!(s, r#"<text x="{a:.3}" y="150" text-anchor="middle">{v:.4}</text>"#);
    }
    s.push_str("</svg>\n");
    s
}

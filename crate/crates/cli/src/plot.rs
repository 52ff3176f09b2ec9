//! Static SVG plot of lower and upper amplitude bounds against frequency.

use std::fmt::Write;

use crate::output::SpectrumRow;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 480.0;
const LEFT: f64 = 70.0;
const RIGHT: f64 = 20.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 50.0;

pub struct Series<'a> {
    pub label: &'a str,
    pub color: &'a str,
    pub rows: &'a [SpectrumRow],
}

/// One solid upper curve and one dashed lower curve per series.
pub fn render_svg(title: &str, series: &[Series<'_>]) -> String {
    let rows = series.iter().flat_map(|s| s.rows.iter());
    let (k_lo, k_hi) = rows.clone().fold((usize::MAX, 0), |(a, b), r| (a.min(r.k), b.max(r.k)));
    let y_max = rows.fold(0.0f64, |m, r| m.max(r.amp_hi));
    let y_max = if y_max > 0.0 { y_max * 1.05 } else { 1.0 };
    let k_span = (k_hi.saturating_sub(k_lo)).max(1) as f64;

    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let x = |k: usize| LEFT + (k.saturating_sub(k_lo)) as f64 / k_span * plot_w;
    let y = |a: f64| TOP + plot_h - a / y_max * plot_h;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(svg, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="22" text-anchor="middle" font-size="15">{}</text>"#,
        WIDTH / 2.0,
        escape(title)
    );
    let _ = writeln!(
        svg,
        r#"<rect x="{LEFT}" y="{TOP}" width="{plot_w}" height="{plot_h}" fill="none" stroke="black"/>"#
    );

    for i in 0..=5 {
        let a = y_max * i as f64 / 5.0;
        let _ = writeln!(
            svg,
            r##"<line x1="{LEFT}" y1="{0:.2}" x2="{1}" y2="{0:.2}" stroke="#ddd"/><text x="{2}" y="{3:.2}" text-anchor="end">{4}</text>"##,
            y(a),
            LEFT + plot_w,
            LEFT - 6.0,
            y(a) + 4.0,
            tick_label(a)
        );
    }
    let steps = (k_hi - k_lo.min(k_hi)).min(8);
    for i in 0..=steps {
        let k = k_lo + (k_hi - k_lo) * i / steps.max(1);
        let _ = writeln!(
            svg,
            r#"<text x="{:.2}" y="{}" text-anchor="middle">{k}</text>"#,
            x(k),
            TOP + plot_h + 18.0
        );
    }
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="{}" text-anchor="middle">frequency index k</text>"#,
        LEFT + plot_w / 2.0,
        HEIGHT - 10.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="16" y="{0}" text-anchor="middle" transform="rotate(-90 16 {0})">amplitude</text>"#,
        TOP + plot_h / 2.0
    );

    for (i, s) in series.iter().enumerate() {
        for (dash, pick) in [("", true), (r#" stroke-dasharray="5 3""#, false)] {
            let points: Vec<String> = s
                .rows
                .iter()
                .map(|r| format!("{:.2},{:.2}", x(r.k), y(if pick { r.amp_hi } else { r.amp_lo })))
                .collect();
            let _ = writeln!(
                svg,
                r#"<polyline fill="none" stroke="{}" stroke-width="1.5"{dash} points="{}"/>"#,
                s.color,
                points.join(" ")
            );
        }
        let ly = TOP + 14.0 + 16.0 * i as f64;
        let lx = LEFT + plot_w - 190.0;
        let _ = writeln!(
            svg,
            r#"<line x1="{lx}" y1="{ly}" x2="{}" y2="{ly}" stroke="{}" stroke-width="1.5"/><text x="{}" y="{}">{} (upper solid, lower dashed)</text>"#,
            lx + 20.0,
            s.color,
            lx + 26.0,
            ly + 4.0,
            escape(s.label)
        );
    }
    svg.push_str("</svg>\n");
    svg
}

fn tick_label(v: f64) -> String {
    if v == 0.0 || (1e-2..1e4).contains(&v.abs()) {
        format!("{v:.2}")
    } else {
        format!("{v:.1e}")
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

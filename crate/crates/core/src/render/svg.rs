//! Self-contained SVG chart of survival probability against `n`.
//!
//! Fixed 800×500 canvas. The plot area spans x ∈ [70, 620] and
//! y ∈ [40, 440]; the legend sits to the right of it. The y axis always
//! covers survival probabilities 0.4 to 1.0, and values below 0.4 are
//! drawn on the bottom edge.

use std::fmt::Write;

use super::angle_label;
use crate::error::{Result, ZenoError};
use crate::experiments::SurvivalCurve;

pub const SVG_WIDTH: u32 = 800;
pub const SVG_HEIGHT: u32 = 500;

const PLOT_LEFT: f64 = 70.0;
const PLOT_RIGHT: f64 = 620.0;
const PLOT_TOP: f64 = 40.0;
const PLOT_BOTTOM: f64 = 440.0;
const Y_MIN: f64 = 0.4;
const Y_MAX: f64 = 1.0;

const COLORS: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
];

struct Axes {
    n_lo: usize,
    n_hi: usize,
}

impl Axes {
    fn x(&self, n: usize) -> f64 {
        let span = (self.n_hi - self.n_lo).max(1) as f64;
        PLOT_LEFT + (n - self.n_lo) as f64 / span * (PLOT_RIGHT - PLOT_LEFT)
    }

    fn y(&self, p: f64) -> f64 {
        let p = p.clamp(Y_MIN, Y_MAX);
        PLOT_BOTTOM - (p - Y_MIN) / (Y_MAX - Y_MIN) * (PLOT_BOTTOM - PLOT_TOP)
    }
}

pub fn emit_svg(curves: &[SurvivalCurve]) -> Result<String> {
    if curves.is_empty() {
        return Err(ZenoError::Usage("svg output needs at least one curve".into()));
    }
    let ns = curves.iter().flat_map(|c| c.points.iter().map(|p| p.n));
    let (n_lo, n_hi) = ns.fold((usize::MAX, 0), |(lo, hi), n| (lo.min(n), hi.max(n)));
    if n_lo > n_hi {
        return Err(ZenoError::Usage("svg output needs at least one point".into()));
    }
    let axes = Axes { n_lo, n_hi };

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SVG_WIDTH}" height="{SVG_HEIGHT}" viewBox="0 0 {SVG_WIDTH} {SVG_HEIGHT}" font-family="sans-serif" font-size="12">"#
    )
    .unwrap();
    writeln!(s, r#"<rect x="0" y="0" width="{SVG_WIDTH}" height="{SVG_HEIGHT}" fill="white"/>"#).unwrap();
    writeln!(
        s,
        r#"<text x="{:.1}" y="24" text-anchor="middle" font-size="15">Survival probability vs number of measurements</text>"#,
        0.5 * (PLOT_LEFT + PLOT_RIGHT)
    )
    .unwrap();

    // y grid and ticks
    for tick in 0..=6 {
        let p = Y_MIN + 0.1 * f64::from(tick);
        let y = axes.y(p);
        writeln!(
            s,
            r##"<line x1="{PLOT_LEFT:.1}" y1="{y:.2}" x2="{PLOT_RIGHT:.1}" y2="{y:.2}" stroke="#dddddd"/>"##
        )
        .unwrap();
        writeln!(
            s,
            r#"<text x="{:.1}" y="{:.2}" text-anchor="end">{p:.1}</text>"#,
            PLOT_LEFT - 8.0,
            y + 4.0
        )
        .unwrap();
    }
    // x ticks
    let step = ((n_hi - n_lo) / 20).max(1);
    for n in (n_lo..=n_hi).step_by(step) {
        let x = axes.x(n);
        writeln!(
            s,
            r##"<line x1="{x:.2}" y1="{PLOT_BOTTOM:.1}" x2="{x:.2}" y2="{:.1}" stroke="#000000"/>"##,
            PLOT_BOTTOM + 5.0
        )
        .unwrap();
        writeln!(s, r#"<text x="{x:.2}" y="{:.1}" text-anchor="middle">{n}</text>"#, PLOT_BOTTOM + 20.0).unwrap();
    }
    writeln!(
        s,
        r##"<rect x="{PLOT_LEFT:.1}" y="{PLOT_TOP:.1}" width="{:.1}" height="{:.1}" fill="none" stroke="#000000"/>"##,
        PLOT_RIGHT - PLOT_LEFT,
        PLOT_BOTTOM - PLOT_TOP
    )
    .unwrap();
    writeln!(
        s,
        r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">number of measurements n</text>"#,
        0.5 * (PLOT_LEFT + PLOT_RIGHT),
        PLOT_BOTTOM + 45.0
    )
    .unwrap();
    writeln!(
        s,
        r#"<text x="20" y="{:.1}" text-anchor="middle" transform="rotate(-90 20 {:.1})">survival probability</text>"#,
        0.5 * (PLOT_TOP + PLOT_BOTTOM),
        0.5 * (PLOT_TOP + PLOT_BOTTOM)
    )
    .unwrap();

    for (index, curve) in curves.iter().enumerate() {
        let color = COLORS[index % COLORS.len()];
        let label = format!("θ = {}", angle_label(curve.theta_total));
        let coords: Vec<(f64, f64)> = curve
            .points
            .iter()
            .map(|p| (axes.x(p.n), axes.y(p.probability())))
            .collect();
        let points = coords
            .iter()
            .map(|(x, y)| format!("{x:.2},{y:.2}"))
            .collect::<Vec<_>>()
            .join(" ");
        writeln!(s, r#"<g class="series" data-label="{label}">"#).unwrap();
        writeln!(
            s,
            r#"<polyline points="{points}" fill="none" stroke="{color}" stroke-width="2"/>"#
        )
        .unwrap();
        for (x, y) in &coords {
            writeln!(s, r#"<circle cx="{x:.2}" cy="{y:.2}" r="3" fill="{color}"/>"#).unwrap();
        }
        writeln!(s, "</g>").unwrap();

        let ly = PLOT_TOP + 10.0 + 22.0 * index as f64;
        writeln!(s, r#"<g class="legend-entry">"#).unwrap();
        writeln!(
            s,
            r#"<rect x="{:.1}" y="{:.1}" width="14" height="14" fill="{color}"/>"#,
            PLOT_RIGHT + 20.0,
            ly - 7.0
        )
        .unwrap();
        writeln!(s, r#"<text x="{:.1}" y="{:.1}">{label}</text>"#, PLOT_RIGHT + 42.0, ly + 4.0).unwrap();
        writeln!(s, "</g>").unwrap();
    }
    s.push_str("</svg>\n");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiments::{run_sweep, SweepConfig};
    use std::f64::consts::PI;

    #[test]
    fn five_series() {
        let curves: Vec<_> = [2.0, 3.0, 4.0, 5.0, 6.0]
            .iter()
            .map(|k| run_sweep(&SweepConfig::new(PI / k, 1, 14)).unwrap())
            .collect();
        let svg = emit_svg(&curves).unwrap();
        assert_eq!(svg.matches("<polyline").count(), 5);
        assert_eq!(svg.matches(r#"class="legend-entry""#).count(), 5);
        for label in ["π/2", "π/3", "π/4", "π/5", "π/6"] {
            assert!(svg.contains(&format!(">θ = {label}</text>")), "{label}");
        }
        assert!(!svg.contains("href"));
        assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn flat_curve_at_one() {
        let curve = run_sweep(&SweepConfig::new(0.0, 1, 5)).unwrap();
        let svg = emit_svg(&[curve]).unwrap();
        let line = svg.lines().find(|l| l.starts_with("<polyline")).unwrap();
        let points = line.split('"').nth(1).unwrap();
        for pair in points.split(' ') {
            let y: f64 = pair.split(',').nth(1).unwrap().parse().unwrap();
            assert_eq!(y, PLOT_TOP);
        }
    }

    #[test]
    fn empty_input_is_usage_error() {
        assert!(matches!(emit_svg(&[]), Err(ZenoError::Usage(_))));
    }
}

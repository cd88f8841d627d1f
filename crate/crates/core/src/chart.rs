//! Minimal deterministic SVG line charts.
//!
//! Every plotted point is emitted as a `<circle>` carrying `data-project`
//! and `data-value` attributes, so the underlying series can be recovered
//! from the file without a renderer.

use std::fmt::Write as _;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 450.0;
const LEFT: f64 = 70.0;
const RIGHT: f64 = 20.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 55.0;

pub struct LineChart<'a> {
    pub title: &'a str,
    pub x_label: &'a str,
    pub y_label: &'a str,
    /// `(project id, value)` in plotting order.
    pub points: &'a [(u32, f64)],
    pub decimals: usize,
}

/// Round `max` up to 1, 2 or 5 times a power of ten and return
/// `(axis max, tick step)` for roughly five ticks.
fn nice_axis(max: f64) -> (f64, f64) {
    if !(max > 0.0) || !max.is_finite() {
        return (1.0, 0.2);
    }
    let raw = max / 5.0;
    let mag = 10f64.powf(raw.log10().floor());
    let step = [1.0, 2.0, 5.0, 10.0]
        .iter()
        .map(|m| m * mag)
        .find(|&s| s >= raw)
        .unwrap_or(10.0 * mag);
    ((max / step).ceil() * step, step)
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn tick_label(v: f64, step: f64) -> String {
    let digits = if step >= 1.0 {
        0
    } else {
        (-step.log10().floor()) as usize
    };
    format!("{v:.digits$}")
}

impl LineChart<'_> {
    pub fn render(&self) -> String {
        let plot_w = WIDTH - LEFT - RIGHT;
        let plot_h = HEIGHT - TOP - BOTTOM;
        let n = self.points.len();
        let y_max_data = self.points.iter().map(|p| p.1).fold(0.0, f64::max);
        let (y_max, step) = nice_axis(y_max_data);

        let x_of = |i: usize| {
            if n <= 1 {
                LEFT + plot_w / 2.0
            } else {
                LEFT + plot_w * (i as f64 + 0.5) / n as f64
            }
        };
        let y_of = |v: f64| TOP + plot_h * (1.0 - v / y_max);

        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
        );
        let _ = writeln!(s, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="24" text-anchor="middle" font-size="16">{}</text>"#,
            WIDTH / 2.0,
            escape(self.title)
        );

        // Gridlines and y ticks.
        let ticks = (y_max / step).round() as usize;
        for k in 0..=ticks {
            let v = step * k as f64;
            let y = y_of(v);
            let _ = writeln!(
                s,
                r##"<line x1="{LEFT}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="#dddddd"/>"##,
                LEFT + plot_w
            );
            let _ = writeln!(
                s,
                r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#,
                LEFT - 6.0,
                y + 4.0,
                tick_label(v, step)
            );
        }

        // Axes.
        let _ = writeln!(
            s,
            r#"<line x1="{LEFT}" y1="{TOP}" x2="{LEFT}" y2="{:.2}" stroke="black"/>"#,
            TOP + plot_h
        );
        let _ = writeln!(
            s,
            r#"<line x1="{LEFT}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black"/>"#,
            TOP + plot_h,
            LEFT + plot_w,
            TOP + plot_h
        );
        for (i, (id, _)) in self.points.iter().enumerate() {
            let _ = writeln!(
                s,
                r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{id}</text>"#,
                x_of(i),
                TOP + plot_h + 16.0
            );
        }
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            LEFT + plot_w / 2.0,
            HEIGHT - 12.0,
            escape(self.x_label)
        );
        let _ = writeln!(
            s,
            r#"<text x="18" y="{:.2}" text-anchor="middle" transform="rotate(-90 18 {:.2})">{}</text>"#,
            TOP + plot_h / 2.0,
            TOP + plot_h / 2.0,
            escape(self.y_label)
        );

        // Series.
        let path: Vec<String> = self
            .points
            .iter()
            .enumerate()
            .map(|(i, &(_, v))| format!("{:.2},{:.2}", x_of(i), y_of(v)))
            .collect();
        let _ = writeln!(
            s,
            r##"<polyline fill="none" stroke="#1f77b4" stroke-width="2" points="{}"/>"##,
            path.join(" ")
        );
        for (i, &(id, v)) in self.points.iter().enumerate() {
            let _ = writeln!(
                s,
                r##"<circle cx="{:.2}" cy="{:.2}" r="3.5" fill="#1f77b4" data-project="{id}" data-value="{:.*}"/>"##,
                x_of(i),
                y_of(v),
                self.decimals,
                crate::round_to(v, self.decimals)
            );
        }
        s.push_str("</svg>\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nice_axes() {
        assert_eq!(nice_axis(44.6891), (50.0, 10.0));
        assert_eq!(nice_axis(2.2334), (2.5, 0.5));
        let (max, step) = nice_axis(7.0353);
        assert_eq!((max, step), (8.0, 2.0));
        assert_eq!(nice_axis(0.0), (1.0, 0.2));
    }

    #[test]
    fn embeds_points() {
        let pts = [(1, 44.6891), (2, 13.9357)];
        let svg = LineChart {
            title: "a < b",
            x_label: "project",
            y_label: "effort",
            points: &pts,
            decimals: 4,
        }
        .render();
        assert!(svg.starts_with("<svg"));
        assert!(svg.contains(r#"data-project="1" data-value="44.6891""#));
        assert!(svg.contains(r#"data-project="2" data-value="13.9357""#));
        assert!(svg.contains("a &lt; b"));
        assert_eq!(svg.matches("<circle").count(), 2);
    }
}

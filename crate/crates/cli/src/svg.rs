//! Minimal hand-rolled SVG plots: fixed 800x600 canvas, one polyline per
//! order for time series, one sub-panel per order for phase portraits.

use std::fmt::Write;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 600.0;
const PALETTE: [&str; 6] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
];
/// Cap on rendered points per curve; long trajectories are strided down.
const MAX_POINTS: usize = 1500;

pub struct Series {
    pub label: String,
    pub points: Vec<(f64, f64)>,
}

struct Bounds {
    min_x: f64,
    max_x: f64,
    min_y: f64,
    max_y: f64,
}

impl Bounds {
    fn of(series: &[Series]) -> Bounds {
        let mut b = Bounds {
            min_x: f64::INFINITY,
            max_x: f64::NEG_INFINITY,
            min_y: f64::INFINITY,
            max_y: f64::NEG_INFINITY,
        };
        for s in series {
            for &(x, y) in &s.points {
                b.min_x = b.min_x.min(x);
                b.max_x = b.max_x.max(x);
                b.min_y = b.min_y.min(y);
                b.max_y = b.max_y.max(y);
            }
        }
        // Pad so curves do not hug the frame; widen degenerate ranges.
        let pad = |lo: &mut f64, hi: &mut f64| {
            if !lo.is_finite() || !hi.is_finite() {
                *lo = 0.0;
                *hi = 1.0;
            }
            let span = *hi - *lo;
            if span <= 0.0 {
                *lo -= 0.5;
                *hi += 0.5;
            } else {
                *lo -= 0.05 * span;
                *hi += 0.05 * span;
            }
        };
        pad(&mut b.min_x, &mut b.max_x);
        pad(&mut b.min_y, &mut b.max_y);
        b
    }
}

fn tick_label(v: f64) -> String {
    let s = format!("{v:.4}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s.is_empty() || s == "-" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

fn strided(points: &[(f64, f64)]) -> Vec<(f64, f64)> {
    if points.len() <= MAX_POINTS {
        return points.to_vec();
    }
    let stride = points.len().div_ceil(MAX_POINTS);
    let mut out: Vec<(f64, f64)> = points.iter().copied().step_by(stride).collect();
    if out.last() != points.last() {
        out.push(*points.last().unwrap());
    }
    out
}

/// One plotting region with axes, ticks, and clipped polylines.
struct Panel {
    x0: f64,
    y0: f64,
    w: f64,
    h: f64,
}

impl Panel {
    fn render(&self, svg: &mut String, series: &[Series], x_label: &str, y_label: &str) {
        let b = Bounds::of(series);
        let sx = |x: f64| self.x0 + (x - b.min_x) / (b.max_x - b.min_x) * self.w;
        let sy = |y: f64| self.y0 + self.h - (y - b.min_y) / (b.max_y - b.min_y) * self.h;

        let _ = write!(
            svg,
            "<rect x='{:.2}' y='{:.2}' width='{:.2}' height='{:.2}' fill='white' stroke='#444'/>",
            self.x0, self.y0, self.w, self.h
        );
        // Ticks and grid.
        for k in 0..=4 {
            let fx = b.min_x + (b.max_x - b.min_x) * k as f64 / 4.0;
            let px = sx(fx);
            let _ = write!(
                svg,
                "<line x1='{px:.2}' y1='{:.2}' x2='{px:.2}' y2='{:.2}' stroke='#ddd'/>",
                self.y0,
                self.y0 + self.h
            );
            let _ = write!(
                svg,
                "<text x='{px:.2}' y='{:.2}' font-size='11' text-anchor='middle'>{}</text>",
                self.y0 + self.h + 14.0,
                tick_label(fx)
            );
            let fy = b.min_y + (b.max_y - b.min_y) * k as f64 / 4.0;
            let py = sy(fy);
            let _ = write!(
                svg,
                "<line x1='{:.2}' y1='{py:.2}' x2='{:.2}' y2='{py:.2}' stroke='#ddd'/>",
                self.x0,
                self.x0 + self.w
            );
            let _ = write!(
                svg,
                "<text x='{:.2}' y='{:.2}' font-size='11' text-anchor='end'>{}</text>",
                self.x0 - 4.0,
                py + 4.0,
                tick_label(fy)
            );
        }
        let _ = write!(
            svg,
            "<text x='{:.2}' y='{:.2}' font-size='12' text-anchor='middle'>{x_label}</text>",
            self.x0 + self.w / 2.0,
            self.y0 + self.h + 30.0
        );
        let _ = write!(
            svg,
            "<text x='{:.2}' y='{:.2}' font-size='12' text-anchor='middle' transform='rotate(-90 {:.2} {:.2})'>{y_label}</text>",
            self.x0 - 42.0,
            self.y0 + self.h / 2.0,
            self.x0 - 42.0,
            self.y0 + self.h / 2.0
        );
        for (i, s) in series.iter().enumerate() {
            let color = PALETTE[i % PALETTE.len()];
            let mut path = String::new();
            for (x, y) in strided(&s.points) {
                let _ = write!(path, "{:.2},{:.2} ", sx(x), sy(y));
            }
            let _ = write!(
                svg,
                "<polyline points='{}' fill='none' stroke='{color}' stroke-width='1.5'/>",
                path.trim_end()
            );
        }
    }
}

fn document(body: &str) -> String {
    format!(
        "<svg xmlns='http://www.w3.org/2000/svg' width='{WIDTH}' height='{HEIGHT}' \
         viewBox='0 0 {WIDTH} {HEIGHT}'>\n<rect width='100%' height='100%' fill='white'/>\n\
         {body}\n</svg>\n"
    )
}

/// All series on one set of axes, with a legend naming each order.
pub fn time_series_svg(title: &str, x_label: &str, y_label: &str, series: &[Series]) -> String {
    let mut body = String::new();
    let _ = write!(
        body,
        "<text x='{:.2}' y='24' font-size='16' text-anchor='middle'>{title}</text>",
        WIDTH / 2.0
    );
    let panel = Panel {
        x0: 70.0,
        y0: 45.0,
        w: 560.0,
        h: 495.0,
    };
    panel.render(&mut body, series, x_label, y_label);
    for (i, s) in series.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let y = 70.0 + 22.0 * i as f64;
        let _ = write!(
            body,
            "<line x1='655' y1='{y:.2}' x2='685' y2='{y:.2}' stroke='{color}' stroke-width='2'/>\
             <text x='692' y='{:.2}' font-size='12'>{}</text>",
            y + 4.0,
            s.label
        );
    }
    document(&body)
}

/// One sub-panel per series (2x2 layout), each with its own axes.
pub fn phase_portrait_svg(title: &str, x_label: &str, y_label: &str, panels: &[Series]) -> String {
    let mut body = String::new();
    let _ = write!(
        body,
        "<text x='{:.2}' y='24' font-size='16' text-anchor='middle'>{title}</text>",
        WIDTH / 2.0
    );
    for (i, s) in panels.iter().enumerate() {
        let col = (i % 2) as f64;
        let row = (i / 2) as f64;
        let panel = Panel {
            x0: 70.0 + col * 380.0,
            y0: 60.0 + row * 270.0,
            w: 290.0,
            h: 195.0,
        };
        let _ = write!(
            body,
            "<text x='{:.2}' y='{:.2}' font-size='13' text-anchor='middle'>{}</text>",
            panel.x0 + panel.w / 2.0,
            panel.y0 - 8.0,
            s.label
        );
        let single = [Series {
            label: s.label.clone(),
            points: s.points.clone(),
        }];
        panel.render(&mut body, &single, x_label, y_label);
    }
    document(&body)
}

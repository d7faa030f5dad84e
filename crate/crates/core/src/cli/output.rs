//! Text renderings of fit results and samples.

use std::fmt::Write;

use crate::clothoid::SampleRow;
use crate::fitter::FitResult;

pub const CSV_HEADER: &str = "s,x,y,theta,kappa";

/// Space left around the curve in SVG output, in viewport units.
const SVG_MARGIN: f64 = 10.0;
const SVG_MARKER_RADIUS: f64 = 4.0;

/// 17 significant digits; parses back to the same `f64`.
pub fn num(v: f64) -> String {
    format!("{v:.16e}")
}

const FIT_KEYS: [&str; 7] = [
    "kappa",
    "kappa_prime",
    "L",
    "A",
    "iterations",
    "residual_g",
    "endpoint_error",
];

fn fit_values(fit: &FitResult) -> [String; 7] {
    [
        num(fit.curve.kappa),
        num(fit.curve.kappa_prime),
        num(fit.curve.length),
        num(fit.a),
        fit.iterations.to_string(),
        num(fit.residual_g),
        num(fit.endpoint_error),
    ]
}

pub fn fit_json(fit: &FitResult) -> String {
    let fields: Vec<String> = FIT_KEYS
        .iter()
        .zip(fit_values(fit))
        .map(|(k, v)| format!("\"{k}\":{v}"))
        .collect();
    format!("{{{}}}\n", fields.join(","))
}

pub fn fit_csv(fit: &FitResult) -> String {
    format!("{}\n{}\n", FIT_KEYS.join(","), fit_values(fit).join(","))
}

fn row_values(r: &SampleRow) -> [String; 5] {
    [num(r.s), num(r.x), num(r.y), num(r.theta), num(r.kappa)]
}

pub fn samples_csv(rows: &[SampleRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&row_values(r).join(","));
        out.push('\n');
    }
    out
}

pub fn samples_json(rows: &[SampleRow]) -> String {
    let keys = CSV_HEADER.split(',');
    let objects: Vec<String> = rows
        .iter()
        .map(|r| {
            let fields: Vec<String> = keys
                .clone()
                .zip(row_values(r))
                .map(|(k, v)| format!("\"{k}\":{v}"))
                .collect();
            format!("{{{}}}", fields.join(","))
        })
        .collect();
    format!("[{}]\n", objects.join(","))
}

/// SVG document with the sampled curve scaled uniformly to fit the viewport.
///
/// `rows` must be non-empty; `width` and `height` must be positive.
pub fn samples_svg(rows: &[SampleRow], width: f64, height: f64) -> String {
    let (mut xmin, mut xmax, mut ymin, mut ymax) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for r in rows {
        xmin = xmin.min(r.x);
        xmax = xmax.max(r.x);
        ymin = ymin.min(r.y);
        ymax = ymax.max(r.y);
    }
    let (dx, dy) = (xmax - xmin, ymax - ymin);
    let avail_w = (width - 2.0 * SVG_MARGIN).max(width * 0.5);
    let avail_h = (height - 2.0 * SVG_MARGIN).max(height * 0.5);
    let scale = match (dx > 0.0, dy > 0.0) {
        (true, true) => (avail_w / dx).min(avail_h / dy),
        (true, false) => avail_w / dx,
        (false, true) => avail_h / dy,
        (false, false) => 1.0,
    };
    // center the bounding box; SVG y grows downwards
    let cx = 0.5 * (xmin + xmax);
    let cy = 0.5 * (ymin + ymax);
    let map = |x: f64, y: f64| (0.5 * width + scale * (x - cx), 0.5 * height - scale * (y - cy));

    let mut points = String::new();
    for (i, r) in rows.iter().enumerate() {
        let (px, py) = map(r.x, r.y);
        if i > 0 {
            points.push(' ');
        }
        write!(points, "{px:.6},{py:.6}").unwrap();
    }
    let marker = |class: &str, color: &str, r: &SampleRow| {
        let (px, py) = map(r.x, r.y);
        format!(
            "  <circle class=\"{class}\" cx=\"{px:.6}\" cy=\"{py:.6}\" r=\"{SVG_MARKER_RADIUS:.6}\" fill=\"{color}\"/>\n"
        )
    };
    let first = &rows[0];
    let last = &rows[rows.len() - 1];
    format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width:.6}\" height=\"{height:.6}\" viewBox=\"0 0 {width:.6} {height:.6}\">\n\
         \x20 <polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"{points}\"/>\n\
         {}{}</svg>\n",
        marker("start", "green", first),
        marker("end", "red", last),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers_round_trip() {
        for v in [0.1, -1.0 / 3.0, 1e-300, 123456.789, 0.0, -0.0, 5e-324] {
            let s = num(v);
            assert_eq!(s.parse::<f64>().unwrap().to_bits(), v.to_bits(), "{s}");
        }
        assert_eq!(num(1.0), "1.0000000000000000e0");
    }

    #[test]
    fn csv_layout() {
        let rows = [SampleRow {
            s: 0.0,
            x: 1.0,
            y: 2.0,
            theta: 0.5,
            kappa: -1.0,
        }];
        let csv = samples_csv(&rows);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some(CSV_HEADER));
        assert_eq!(lines.next().unwrap().split(',').count(), 5);
        assert!(csv.ends_with('\n'));
    }
}

//! Hand-emitted SVG line plots: fixed 800x600 viewbox, linear axes, five
//! ticks per axis, solid polylines for real parts and dashed for imaginary
//! parts, and a legend. No plotting dependency; output is deterministic.

use std::fmt::Write as _;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 600.0;
const MARGIN_LEFT: f64 = 72.0;
const MARGIN_RIGHT: f64 = 24.0;
const MARGIN_TOP: f64 = 28.0;
const MARGIN_BOTTOM: f64 = 56.0;

/// One plotted curve.
#[derive(Clone, Debug)]
pub struct Series {
    /// legend label
    pub label: String,
    /// CSS colour
    pub color: &'static str,
    /// dashed stroke (the imaginary-part convention)
    pub dashed: bool,
    /// data points
    pub points: Vec<(f64, f64)>,
}

fn tick_label(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let a = v.abs();
    let s = if (1e-3..1e4).contains(&a) {
        format!("{v:.4}")
    } else {
        return format!("{v:.3e}");
    };
    let s = s.trim_end_matches('0').trim_end_matches('.');
    s.to_string()
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Renders the plot. Non-finite points are dropped from their polylines.
pub fn render(title: &str, x_label: &str, y_label: &str, series: &[Series]) -> String {
    let finite = |v: f64| v.is_finite();
    let mut xmin = f64::INFINITY;
    let mut xmax = f64::NEG_INFINITY;
    let mut ymin = f64::INFINITY;
    let mut ymax = f64::NEG_INFINITY;
    for s in series {
        for &(x, y) in &s.points {
            if finite(x) && finite(y) {
                xmin = xmin.min(x);
                xmax = xmax.max(x);
                ymin = ymin.min(y);
                ymax = ymax.max(y);
            }
        }
    }
    if !xmin.is_finite() || !ymin.is_finite() {
        xmin = 0.0;
        xmax = 1.0;
        ymin = 0.0;
        ymax = 1.0;
    }
    if xmax == xmin {
        xmax = xmin + 1.0;
    }
    if ymax == ymin {
        ymax = ymin + 1.0;
    }
    let pad = 0.05 * (ymax - ymin);
    let (ymin, ymax) = (ymin - pad, ymax + pad);

    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let sx = move |x: f64| MARGIN_LEFT + (x - xmin) / (xmax - xmin) * plot_w;
    let sy = move |y: f64| MARGIN_TOP + (ymax - y) / (ymax - ymin) * plot_h;

    let mut out = String::with_capacity(4096);
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {WIDTH} {HEIGHT}\" \
         font-family=\"sans-serif\" font-size=\"13\">"
    );
    let _ = writeln!(
        out,
        "  <rect x=\"0\" y=\"0\" width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>"
    );
    let _ = writeln!(
        out,
        "  <text x=\"{:.1}\" y=\"18\" text-anchor=\"middle\" font-size=\"15\">{}</text>",
        MARGIN_LEFT + plot_w / 2.0,
        xml_escape(title)
    );

    // axes box
    let _ = writeln!(
        out,
        "  <rect x=\"{MARGIN_LEFT:.1}\" y=\"{MARGIN_TOP:.1}\" width=\"{plot_w:.1}\" \
         height=\"{plot_h:.1}\" fill=\"none\" stroke=\"black\"/>"
    );

    // five ticks per axis
    for i in 0..5 {
        let f = i as f64 / 4.0;
        let xv = xmin + f * (xmax - xmin);
        let xp = sx(xv);
        let _ = writeln!(
            out,
            "  <line x1=\"{xp:.2}\" y1=\"{:.2}\" x2=\"{xp:.2}\" y2=\"{:.2}\" stroke=\"black\"/>",
            MARGIN_TOP + plot_h,
            MARGIN_TOP + plot_h + 6.0
        );
        let _ = writeln!(
            out,
            "  <text x=\"{xp:.2}\" y=\"{:.2}\" text-anchor=\"middle\">{}</text>",
            MARGIN_TOP + plot_h + 22.0,
            tick_label(xv)
        );
        let yv = ymin + f * (ymax - ymin);
        let yp = sy(yv);
        let _ = writeln!(
            out,
            "  <line x1=\"{:.2}\" y1=\"{yp:.2}\" x2=\"{MARGIN_LEFT:.2}\" y2=\"{yp:.2}\" stroke=\"black\"/>",
            MARGIN_LEFT - 6.0
        );
        let _ = writeln!(
            out,
            "  <text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"end\">{}</text>",
            MARGIN_LEFT - 10.0,
            yp + 4.0,
            tick_label(yv)
        );
    }

    // zero line when visible
    if ymin < 0.0 && ymax > 0.0 {
        let yp = sy(0.0);
        let _ = writeln!(
            out,
            "  <line x1=\"{MARGIN_LEFT:.1}\" y1=\"{yp:.2}\" x2=\"{:.1}\" y2=\"{yp:.2}\" \
             stroke=\"#bbbbbb\" stroke-width=\"0.7\"/>",
            MARGIN_LEFT + plot_w
        );
    }

    // axis labels
    let _ = writeln!(
        out,
        "  <text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"middle\">{}</text>",
        MARGIN_LEFT + plot_w / 2.0,
        HEIGHT - 14.0,
        xml_escape(x_label)
    );
    let _ = writeln!(
        out,
        "  <text x=\"18\" y=\"{:.1}\" text-anchor=\"middle\" \
         transform=\"rotate(-90 18 {:.1})\">{}</text>",
        MARGIN_TOP + plot_h / 2.0,
        MARGIN_TOP + plot_h / 2.0,
        xml_escape(y_label)
    );

    // curves
    for s in series {
        let mut pts = String::new();
        for &(x, y) in &s.points {
            if finite(x) && finite(y) {
                let _ = write!(pts, "{:.2},{:.2} ", sx(x), sy(y));
            }
        }
        let dash = if s.dashed {
            " stroke-dasharray=\"7 4\""
        } else {
            ""
        };
        let _ = writeln!(
            out,
            "  <polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.6\"{} points=\"{}\"/>",
            s.color,
            dash,
            pts.trim_end()
        );
    }

    // legend, top-right inside the axes box
    let lx = MARGIN_LEFT + plot_w - 170.0;
    let mut ly = MARGIN_TOP + 16.0;
    for s in series {
        let dash = if s.dashed {
            " stroke-dasharray=\"7 4\""
        } else {
            ""
        };
        let _ = writeln!(
            out,
            "  <line x1=\"{lx:.1}\" y1=\"{ly:.1}\" x2=\"{:.1}\" y2=\"{ly:.1}\" \
             stroke=\"{}\" stroke-width=\"1.6\"{}/>",
            lx + 34.0,
            s.color,
            dash
        );
        let _ = writeln!(
            out,
            "  <text x=\"{:.1}\" y=\"{:.1}\">{}</text>",
            lx + 42.0,
            ly + 4.0,
            xml_escape(&s.label)
        );
        ly += 18.0;
    }

    out.push_str("</svg>\n");
    out
}

//! Minimal static SVG line plots: axes, ticks, polylines, legend.

pub struct Series<'a> {
    pub label: String,
    pub values: &'a [f64],
}

const WIDTH: f64 = 860.0;
const HEIGHT: f64 = 540.0;
const MARGIN_LEFT: f64 = 72.0;
const MARGIN_RIGHT: f64 = 24.0;
const MARGIN_TOP: f64 = 52.0;
const MARGIN_BOTTOM: f64 = 56.0;

const PALETTE: [&str; 7] =
    ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#7f7f7f"];

pub fn line_plot(
    title: &str,
    x_label: &str,
    y_label: &str,
    xs: &[f64],
    series: &[Series],
    subtitle: &str,
) -> String {
    let (x_min, x_max) = bounds(xs);
    let mut y_min = f64::INFINITY;
    let mut y_max = f64::NEG_INFINITY;
    for s in series {
        let (lo, hi) = bounds(s.values);
        y_min = y_min.min(lo);
        y_max = y_max.max(hi);
    }
    if y_min == y_max {
        y_min -= 0.5;
        y_max += 0.5;
    }
    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let to_x = |v: f64| MARGIN_LEFT + (v - x_min) / (x_max - x_min) * plot_w;
    let to_y = |v: f64| MARGIN_TOP + (1.0 - (v - y_min) / (y_max - y_min)) * plot_h;

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n"
    ));
    svg.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    svg.push_str(&format!(
        "<text x=\"{:.1}\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\" \
         text-anchor=\"middle\">{}</text>\n",
        WIDTH / 2.0,
        escape(title)
    ));
    svg.push_str(&format!(
        "<text x=\"{:.1}\" y=\"42\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#555\" \
         text-anchor=\"middle\">{}</text>\n",
        WIDTH / 2.0,
        escape(subtitle)
    ));

    // frame
    svg.push_str(&format!(
        "<rect x=\"{MARGIN_LEFT:.1}\" y=\"{MARGIN_TOP:.1}\" width=\"{plot_w:.1}\" \
         height=\"{plot_h:.1}\" fill=\"none\" stroke=\"#333\" stroke-width=\"1\"/>\n"
    ));

    // ticks and grid lines
    for k in 0..=5 {
        let fx = k as f64 / 5.0;
        let xv = x_min + fx * (x_max - x_min);
        let px = to_x(xv);
        svg.push_str(&format!(
            "<line x1=\"{px:.1}\" y1=\"{:.1}\" x2=\"{px:.1}\" y2=\"{:.1}\" stroke=\"#ccc\" \
             stroke-width=\"0.5\"/>\n",
            MARGIN_TOP,
            MARGIN_TOP + plot_h
        ));
        svg.push_str(&format!(
            "<text x=\"{px:.1}\" y=\"{:.1}\" font-family=\"sans-serif\" font-size=\"11\" \
             text-anchor=\"middle\">{}</text>\n",
            MARGIN_TOP + plot_h + 18.0,
            tick_label(xv)
        ));
        let yv = y_min + fx * (y_max - y_min);
        let py = to_y(yv);
        svg.push_str(&format!(
            "<line x1=\"{:.1}\" y1=\"{py:.1}\" x2=\"{:.1}\" y2=\"{py:.1}\" stroke=\"#ccc\" \
             stroke-width=\"0.5\"/>\n",
            MARGIN_LEFT,
            MARGIN_LEFT + plot_w
        ));
        svg.push_str(&format!(
            "<text x=\"{:.1}\" y=\"{:.1}\" font-family=\"sans-serif\" font-size=\"11\" \
             text-anchor=\"end\">{}</text>\n",
            MARGIN_LEFT - 6.0,
            py + 4.0,
            tick_label(yv)
        ));
    }

    // axis labels
    svg.push_str(&format!(
        "<text x=\"{:.1}\" y=\"{:.1}\" font-family=\"sans-serif\" font-size=\"13\" \
         text-anchor=\"middle\">{}</text>\n",
        MARGIN_LEFT + plot_w / 2.0,
        HEIGHT - 12.0,
        escape(x_label)
    ));
    svg.push_str(&format!(
        "<text x=\"18\" y=\"{:.1}\" font-family=\"sans-serif\" font-size=\"13\" \
         text-anchor=\"middle\" transform=\"rotate(-90 18 {:.1})\">{}</text>\n",
        MARGIN_TOP + plot_h / 2.0,
        MARGIN_TOP + plot_h / 2.0,
        escape(y_label)
    ));

    // polylines
    for (i, s) in series.iter().enumerate() {
        let colour = PALETTE[i % PALETTE.len()];
        let mut points = String::new();
        for (x, y) in xs.iter().zip(s.values) {
            points.push_str(&format!("{:.2},{:.2} ", to_x(*x), to_y(*y)));
        }
        svg.push_str(&format!(
            "<polyline points=\"{}\" fill=\"none\" stroke=\"{colour}\" stroke-width=\"1.2\"/>\n",
            points.trim_end()
        ));
    }

    // legend
    for (i, s) in series.iter().enumerate() {
        let colour = PALETTE[i % PALETTE.len()];
        let y = MARGIN_TOP + 16.0 + 16.0 * i as f64;
        let x = MARGIN_LEFT + plot_w - 120.0;
        svg.push_str(&format!(
            "<line x1=\"{x:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"{colour}\" \
             stroke-width=\"2\"/>\n",
            y - 4.0,
            x + 22.0,
            y - 4.0
        ));
        svg.push_str(&format!(
            "<text x=\"{:.1}\" y=\"{y:.1}\" font-family=\"sans-serif\" font-size=\"12\">{}</text>\n",
            x + 28.0,
            escape(&s.label)
        ));
    }

    svg.push_str("</svg>\n");
    svg
}

fn bounds(values: &[f64]) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for &v in values {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    (lo, hi)
}

fn tick_label(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    let magnitude = v.abs();
    if (0.01..10_000.0).contains(&magnitude) {
        format!("{v:.3}")
    } else {
        format!("{v:.2e}")
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

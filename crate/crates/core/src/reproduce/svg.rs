//! Fixed-style SVG rendering of the rotation set: hull, vertex labels, and
//! the graph of `h` overlaid. Styling is constant so diffs stay reviewable.

use crate::exact::Vec2Q;
use crate::potential::PotentialParams;
use crate::reproduce::rat_to_f64;

const WIDTH: f64 = 820.0;
const HEIGHT: f64 = 520.0;
const MARGIN: f64 = 50.0;

pub fn render_hull(params: &PotentialParams, vertices: &[Vec2Q], k_max: u32) -> String {
    let a = rat_to_f64(params.a());
    let b = rat_to_f64(params.b());
    let x_span = a * 1.08;
    let y_span = b * 1.08;
    let sx = |x: f64| MARGIN + x / x_span * (WIDTH - 2.0 * MARGIN);
    let sy = |y: f64| HEIGHT - MARGIN - y / y_span * (HEIGHT - 2.0 * MARGIN);

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n"
    ));
    svg.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

    // Axes.
    svg.push_str(&format!(
        "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"black\" stroke-width=\"1\"/>\n",
        sx(0.0),
        sy(0.0),
        sx(a * 1.05),
        sy(0.0)
    ));
    svg.push_str(&format!(
        "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"black\" stroke-width=\"1\"/>\n",
        sx(0.0),
        sy(0.0),
        sx(0.0),
        sy(b * 1.05)
    ));

    // Hull polygon.
    let pts: Vec<String> = vertices
        .iter()
        .map(|v| {
            let (x, y) = v.to_f64();
            format!("{:.2},{:.2}", sx(x), sy(y))
        })
        .collect();
    svg.push_str(&format!(
        "<polygon points=\"{}\" fill=\"#d0d0d0\" fill-opacity=\"0.5\" stroke=\"#404040\" stroke-width=\"1.2\"/>\n",
        pts.join(" ")
    ));

    // Graph of h(x) = b*sqrt(x/a).
    let curve: Vec<String> = (0..=200)
        .map(|i| {
            let x = a * i as f64 / 200.0;
            let y = b * (x / a).sqrt();
            format!("{:.2},{:.2}", sx(x), sy(y))
        })
        .collect();
    svg.push_str(&format!(
        "<polyline points=\"{}\" fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"1.5\"/>\n",
        curve.join(" ")
    ));
    svg.push_str(&format!(
        "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"monospace\" font-size=\"14\" fill=\"#1f5fbf\">h</text>\n",
        sx(a * 0.97),
        sy(b * 0.99) - 6.0
    ));

    // Vertices and labels.
    for v in vertices {
        let (x, y) = v.to_f64();
        let label = super::label_vertex(params, v, k_max);
        svg.push_str(&format!(
            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"3\" fill=\"#b02020\"/>\n",
            sx(x),
            sy(y)
        ));
        svg.push_str(&format!(
            "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"monospace\" font-size=\"12\" fill=\"#303030\">{}</text>\n",
            sx(x) + 5.0,
            sy(y) - 5.0,
            label
        ));
    }

    svg.push_str("</svg>\n");
    svg
}

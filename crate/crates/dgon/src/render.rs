//! Deterministic SVG output for arc diagrams.
//!
//! Green diameters are drawn as zigzag strokes, red diameters as straight
//! lines; a highlighted subdiagram is stroked thick. Rendering the same
//! spec twice yields byte-identical output.

use std::fmt::Write as _;

use thiserror::Error;

use crate::cells::{CellDecomposition, CellError, CellVertex};
use crate::diagram::Diagram;
use crate::element::{ArcElement, Color};

#[derive(Error, Debug)]
pub enum RenderError {
    #[error("highlight has rank {highlight} but the diagram has rank {diagram}")]
    RankMismatch { diagram: u32, highlight: u32 },
    #[error("cell shading needs a non-crossing highlight: {0}")]
    Cells(#[from] CellError),
}

#[derive(Clone, Debug)]
pub struct RenderSpec {
    pub diagram: Diagram,
    /// Subdiagram stroked thick; also the diagram whose cells are shaded.
    pub highlight: Option<Diagram>,
    pub shade_cells: bool,
    /// Canvas width and height in pixels.
    pub size: u32,
}

impl RenderSpec {
    pub fn new(diagram: Diagram) -> Self {
        RenderSpec { diagram, highlight: None, shade_cells: false, size: 480 }
    }
}

struct Canvas {
    cx: f64,
    cy: f64,
    r: f64,
    two_n: u32,
}

impl Canvas {
    fn vertex(&self, v: u32) -> (f64, f64) {
        let theta = std::f64::consts::PI * f64::from(v) / (f64::from(self.two_n) / 2.0);
        (self.cx + self.r * theta.cos(), self.cy - self.r * theta.sin())
    }

    fn cell_vertex(&self, v: CellVertex) -> (f64, f64) {
        match v {
            CellVertex::Boundary(u) => self.vertex(u),
            CellVertex::Center => (self.cx, self.cy),
        }
    }
}

fn fmt_pt(p: (f64, f64)) -> String {
    format!("{:.2},{:.2}", p.0, p.1)
}

fn line(out: &mut String, p: (f64, f64), q: (f64, f64), stroke: &str, width: f64) {
    writeln!(
        out,
        "  <line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"{stroke}\" stroke-width=\"{width:.2}\" stroke-linecap=\"round\"/>",
        p.0, p.1, q.0, q.1
    )
    .expect("write to string");
}

/// Zigzag polyline between two points: fixed segment count, amplitude
/// proportional to the canvas.
fn zigzag(out: &mut String, p: (f64, f64), q: (f64, f64), amp: f64, stroke: &str, width: f64) {
    const SEGMENTS: u32 = 12;
    let (dx, dy) = (q.0 - p.0, q.1 - p.1);
    let len = (dx * dx + dy * dy).sqrt();
    let (nx, ny) = (-dy / len, dx / len);
    let mut pts = vec![fmt_pt(p)];
    for s in 1..SEGMENTS {
        let t = f64::from(s) / f64::from(SEGMENTS);
        let off = if s % 2 == 1 { amp } else { -amp };
        pts.push(fmt_pt((p.0 + dx * t + nx * off, p.1 + dy * t + ny * off)));
    }
    pts.push(fmt_pt(q));
    writeln!(
        out,
        "  <polyline points=\"{}\" fill=\"none\" stroke=\"{stroke}\" stroke-width=\"{width:.2}\" stroke-linejoin=\"round\" stroke-linecap=\"round\"/>",
        pts.join(" ")
    )
    .expect("write to string");
}

fn draw_element(out: &mut String, canvas: &Canvas, e: &ArcElement, width: f64, amp: f64) {
    match e.color() {
        Some(Color::Green) => {
            let (a, b) = e.rep_chord();
            zigzag(out, canvas.vertex(a), canvas.vertex(b), amp, "#1e8449", width);
        }
        Some(Color::Red) => {
            let (a, b) = e.rep_chord();
            line(out, canvas.vertex(a), canvas.vertex(b), "#c0392b", width);
        }
        None => {
            for (a, b) in [e.rep_chord(), e.partner_chord()] {
                line(out, canvas.vertex(a), canvas.vertex(b), "#1a1a1a", width);
            }
        }
    }
}

/// Render a standalone SVG document.
pub fn render_svg(spec: &RenderSpec) -> Result<String, RenderError> {
    let n = spec.diagram.n();
    if let Some(h) = &spec.highlight {
        if h.n() != n {
            return Err(RenderError::RankMismatch { diagram: n, highlight: h.n() });
        }
    }
    let size = f64::from(spec.size.max(64));
    let canvas = Canvas { cx: size / 2.0, cy: size / 2.0, r: size * 0.42, two_n: 2 * n };
    let thin = size / 160.0;
    let thick = size / 64.0;
    let amp = size / 60.0;

    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{0}\" viewBox=\"0 0 {0} {0}\">",
        spec.size.max(64)
    )
    .expect("write to string");
    writeln!(out, "  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>").expect("write");

    if spec.shade_cells {
        let walls = spec.highlight.as_ref().unwrap_or(&spec.diagram);
        let cells = CellDecomposition::build(walls)?;
        for pair in cells.pairs() {
            for cell in [pair.cell(), pair.partner()] {
                let pts: Vec<String> =
                    cell.verts().iter().map(|&v| fmt_pt(canvas.cell_vertex(v))).collect();
                writeln!(out, "  <polygon points=\"{}\" fill=\"#eef2f7\"/>", pts.join(" "))
                    .expect("write to string");
            }
        }
    }

    // boundary polygon, anticlockwise vertex order
    let boundary: Vec<String> = (0..2 * n).map(|v| fmt_pt(canvas.vertex(v))).collect();
    writeln!(
        out,
        "  <polygon points=\"{}\" fill=\"none\" stroke=\"#222222\" stroke-width=\"{thin:.2}\"/>",
        boundary.join(" ")
    )
    .expect("write to string");

    let highlight = spec.highlight.as_ref();
    for e in spec.diagram.iter() {
        if highlight.is_some_and(|h| h.contains(e)) {
            continue; // drawn thick below
        }
        draw_element(&mut out, &canvas, e, thin, amp);
    }
    if let Some(h) = highlight {
        for e in h.iter() {
            draw_element(&mut out, &canvas, e, thick, amp);
        }
    }

    let label_r = canvas.r * 1.09;
    let font = size / 26.0;
    for v in 0..2 * n {
        let p = canvas.vertex(v);
        writeln!(out, "  <circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"{:.2}\" fill=\"#222222\"/>", p.0, p.1, thin * 1.6)
            .expect("write to string");
        let theta = std::f64::consts::PI * f64::from(v) / f64::from(n);
        let lx = canvas.cx + label_r * theta.cos();
        let ly = canvas.cy - label_r * theta.sin();
        writeln!(
            out,
            "  <text x=\"{lx:.2}\" y=\"{ly:.2}\" font-family=\"sans-serif\" font-size=\"{font:.2}\" text-anchor=\"middle\" dominant-baseline=\"central\">{v}</text>"
        )
        .expect("write to string");
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::ArcElement;

    #[test]
    fn empty_diagram_is_an_outline() {
        let svg = render_svg(&RenderSpec::new(Diagram::empty(4))).unwrap();
        assert!(svg.starts_with("<svg"));
        assert!(svg.ends_with("</svg>\n"));
        assert!(!svg.contains("<line"));
        assert!(!svg.contains("<polyline"));
        assert_eq!(svg.matches("<text").count(), 8);
    }

    #[test]
    fn rerender_is_byte_identical() {
        let d = Diagram::from_elements(
            4,
            [
                ArcElement::pair(4, 0, 2).unwrap(),
                ArcElement::diameter(4, 1, Color::Green).unwrap(),
                ArcElement::diameter(4, 3, Color::Red).unwrap(),
            ],
        )
        .unwrap();
        let mut spec = RenderSpec::new(d.clone());
        spec.highlight = Some(Diagram::from_elements(4, [ArcElement::pair(4, 0, 2).unwrap()]).unwrap());
        spec.shade_cells = true;
        let a = render_svg(&spec).unwrap();
        let b = render_svg(&spec).unwrap();
        assert_eq!(a, b);
        assert!(a.contains("<polyline")); // green diameter zigzag
    }

    #[test]
    fn shaded_diameter_cells_meet_at_the_center() {
        let d = Diagram::from_elements(4, [ArcElement::diameter(4, 0, Color::Red).unwrap()])
            .unwrap();
        let mut spec = RenderSpec::new(d);
        spec.shade_cells = true;
        spec.highlight = Some(spec.diagram.clone());
        let svg = render_svg(&spec).unwrap();
        let shaded = svg.matches("fill=\"#eef2f7\"").count();
        assert_eq!(shaded, 2);
        // both shaded polygons contain the canvas center
        assert_eq!(svg.matches("240.00,240.00").count(), 2);
    }

    #[test]
    fn highlight_rank_is_checked() {
        let mut spec = RenderSpec::new(Diagram::empty(4));
        spec.highlight = Some(Diagram::empty(5));
        assert!(matches!(render_svg(&spec), Err(RenderError::RankMismatch { .. })));
    }

    #[test]
    fn pair_orbits_draw_both_chords() {
        let d = Diagram::from_elements(4, [ArcElement::pair(4, 0, 2).unwrap()]).unwrap();
        let svg = render_svg(&RenderSpec::new(d)).unwrap();
        assert_eq!(svg.matches("<line").count(), 2);
    }
}

//! Deterministic SVG drawings of a patch of the Tonnetz.
//!
//! All layout is done in integer hundredths of a pixel. An edge is 80 px
//! long and a row of the lattice is 69.28 px high.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{wall_distance, Triangle, Vertex};
use crate::pitch::{name_triangle, spell_vertex};
use crate::progression::PlrWord;

const HALF_EDGE: i64 = 4000;
const ROW: i64 = 6928;
const MARGIN: i64 = 3000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LabelMode {
    #[default]
    Notes,
    Windows,
    Chords,
}

impl FromStr for LabelMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "notes" => Ok(LabelMode::Notes),
            "windows" => Ok(LabelMode::Windows),
            "chords" => Ok(LabelMode::Chords),
            _ => Err(Error::parse(s, 0, "expected notes, windows or chords")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Style {
    Primary,
    Secondary,
    Accent,
    Muted,
}

impl Style {
    pub fn fill(self) -> &'static str {
        match self {
            Style::Primary => "#f4a261",
            Style::Secondary => "#8ecae6",
            Style::Accent => "#e76f51",
            Style::Muted => "#d9d9d9",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RenderSpec {
    pub center: Triangle,
    /// Triangles within this gallery distance of `center` are drawn.
    pub radius: usize,
    /// Later entries win when a triangle is listed twice.
    pub highlights: Vec<(Triangle, Style)>,
    /// Drawn as arrows between successive triangles, starting at `center`.
    pub path: Option<PlrWord>,
    pub labels: LabelMode,
}

impl RenderSpec {
    pub fn new(center: Triangle, radius: usize) -> Self {
        RenderSpec {
            center,
            radius,
            highlights: Vec::new(),
            path: None,
            labels: LabelMode::Notes,
        }
    }

    pub fn triangles(&self) -> BTreeSet<Triangle> {
        let r = self.radius as i64 + 1;
        let c = self.center.root;
        let mut out = BTreeSet::new();
        for p in c.p - r..=c.p + r {
            for q in c.q - r..=c.q + r {
                for t in [Triangle::up(p, q), Triangle::down(p, q)] {
                    if wall_distance(&self.center, &t) <= self.radius as u64 {
                        out.insert(t);
                    }
                }
            }
        }
        if let Some(w) = &self.path {
            out.extend(w.trace(&self.center));
        }
        out
    }
}

/// Position of a vertex in hundredths, with `y` growing upwards.
fn raw(v: Vertex) -> (i64, i64) {
    (HALF_EDGE * (2 * v.p + v.q), ROW * v.q)
}

/// `n / d` rounded to the nearest integer, halves away from zero.
fn round_div(n: i64, d: i64) -> i64 {
    let q = (2 * n.abs() + d) / (2 * d);
    if n < 0 {
        -q
    } else {
        q
    }
}

fn num(v: i64) -> String {
    let sign = if v < 0 { "-" } else { "" };
    let a = v.abs();
    if a % 100 == 0 {
        format!("{sign}{}", a / 100)
    } else {
        format!("{sign}{}.{:02}", a / 100, a % 100)
    }
}

struct Frame {
    min_x: i64,
    max_y: i64,
}

impl Frame {
    fn point(&self, (x, y): (i64, i64)) -> (i64, i64) {
        (x - self.min_x + MARGIN, self.max_y - y + MARGIN)
    }

    fn vertex(&self, v: Vertex) -> (i64, i64) {
        self.point(raw(v))
    }

    fn centroid(&self, t: &Triangle) -> (i64, i64) {
        let (sx, sy) = t
            .vertices()
            .iter()
            .map(|&v| self.vertex(v))
            .fold((0, 0), |(a, b), (x, y)| (a + x, b + y));
        (round_div(sx, 3), round_div(sy, 3))
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

pub fn render_svg(spec: &RenderSpec) -> String {
    let triangles = spec.triangles();
    let vertices: BTreeSet<Vertex> = triangles.iter().flat_map(|t| t.vertices()).collect();
    let xs = vertices.iter().map(|&v| raw(v).0);
    let ys = vertices.iter().map(|&v| raw(v).1);
    let (min_x, max_x) = (xs.clone().min().unwrap_or(0), xs.max().unwrap_or(0));
    let (min_y, max_y) = (ys.clone().min().unwrap_or(0), ys.max().unwrap_or(0));
    let frame = Frame { min_x, max_y };
    let width = max_x - min_x + 2 * MARGIN;
    let height = max_y - min_y + 2 * MARGIN;

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = num(width),
        h = num(height),
    );
    out.push_str(concat!(
        "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" ",
        "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\">",
        "<path d=\"M0,0 L10,5 L0,10 z\" fill=\"#264653\"/></marker></defs>\n",
    ));
    let _ = writeln!(
        out,
        r##"<rect x="0" y="0" width="{}" height="{}" fill="#ffffff"/>"##,
        num(width),
        num(height)
    );

    out.push_str("<g stroke=\"#555555\" stroke-width=\"1\" stroke-linejoin=\"round\">\n");
    for t in &triangles {
        let fill = spec.highlights.iter().rev().find(|(h, _)| h == t).map_or(
            if t.is_major() { "#fbfbf4" } else { "#f1f4fb" },
            |(_, s)| s.fill(),
        );
        let pts: Vec<String> = t
            .vertices()
            .iter()
            .map(|&v| {
                let (x, y) = frame.vertex(v);
                format!("{},{}", num(x), num(y))
            })
            .collect();
        let _ = writeln!(
            out,
            r#"<polygon points="{}" fill="{}"/>"#,
            pts.join(" "),
            fill
        );
    }
    out.push_str("</g>\n");

    if let Some(word) = &spec.path {
        out.push_str("<g stroke=\"#264653\" stroke-width=\"2\" marker-end=\"url(#arrow)\">\n");
        let trace = word.trace(&spec.center);
        for w in trace.windows(2) {
            let ((x1, y1), (x2, y2)) = (frame.centroid(&w[0]), frame.centroid(&w[1]));
            let _ = writeln!(
                out,
                r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                num(x1),
                num(y1),
                num(x2),
                num(y2)
            );
        }
        out.push_str("</g>\n");
    }

    out.push_str("<g font-family=\"sans-serif\" text-anchor=\"middle\" dominant-baseline=\"central\" fill=\"#1d1d1d\">\n");
    match spec.labels {
        LabelMode::Notes => {
            for &v in &vertices {
                let (x, y) = frame.vertex(v);
                let _ = writeln!(
                    out,
                    r##"<circle cx="{x}" cy="{y}" r="11" fill="#ffffff" stroke="#555555"/><text x="{x}" y="{y}" font-size="11">{}</text>"##,
                    escape(&spell_vertex(v).to_string()),
                    x = num(x),
                    y = num(y),
                );
            }
        }
        LabelMode::Windows | LabelMode::Chords => {
            for t in &triangles {
                let (x, y) = frame.centroid(t);
                let label = match spec.labels {
                    LabelMode::Windows => t.to_perm().to_string(),
                    _ => name_triangle(t).to_string(),
                };
                let _ = writeln!(
                    out,
                    r#"<text x="{}" y="{}" font-size="9">{}</text>"#,
                    num(x),
                    num(y),
                    escape(&label)
                );
            }
        }
    }
    out.push_str("</g>\n</svg>\n");
    out
}

pub fn write_svg(spec: &RenderSpec, path: &std::path::Path) -> std::io::Result<()> {
    std::fs::write(path, render_svg(spec))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radius_zero_draws_one_triangle() {
        let svg = render_svg(&RenderSpec::new(Triangle::REFERENCE, 0));
        assert_eq!(svg.matches("<polygon").count(), 1);
        assert!(svg.starts_with("<?xml"));
        assert!(svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn note_labels_near_origin() {
        let svg = render_svg(&RenderSpec::new(Triangle::REFERENCE, 2));
        for name in [
            "F", "C", "G", "D", "Ab", "Eb", "Bb", "A", "E", "B", "C#", "G#",
        ] {
            assert!(svg.contains(&format!(">{name}</text>")), "{name}");
        }
    }

    #[test]
    fn window_label_at_pr_position() {
        let mut spec = RenderSpec::new(Triangle::REFERENCE, 2);
        spec.labels = LabelMode::Windows;
        let svg = render_svg(&spec);
        // A major sits one row above and one half edge left of C major
        let frame_line = |w: &str| {
            svg.lines()
                .find(|l| l.contains(&format!(">{w}</text>")))
                .map(str::to_string)
                .unwrap()
        };
        let coords = |l: &str| -> (String, String) {
            let x = l
                .split("x=\"")
                .nth(1)
                .unwrap()
                .split('"')
                .next()
                .unwrap()
                .to_string();
            let y = l
                .split("y=\"")
                .nth(1)
                .unwrap()
                .split('"')
                .next()
                .unwrap()
                .to_string();
            (x, y)
        };
        let pr = coords(&frame_line("[-3,1,2]"));
        let c = coords(&frame_line("[-1,0,1]"));
        let px = |s: &str| (s.parse::<f64>().unwrap() * 100.0).round() as i64;
        assert_eq!(px(&pr.0) - px(&c.0), -HALF_EDGE);
        assert_eq!(px(&c.1) - px(&pr.1), ROW);
    }

    #[test]
    fn deterministic_and_path_arrows() {
        let mut spec = RenderSpec::new(Triangle::REFERENCE, 3);
        spec.path = Some("RLP".parse().unwrap());
        spec.highlights.push((Triangle::REFERENCE, Style::Primary));
        spec.labels = LabelMode::Chords;
        let a = render_svg(&spec);
        assert_eq!(a, render_svg(&spec));
        assert_eq!(a.matches("<line").count(), 3);
        assert!(a.contains(Style::Primary.fill()));
    }

    #[test]
    fn rounding() {
        assert_eq!(round_div(5, 3), 2);
        assert_eq!(round_div(-5, 3), -2);
        assert_eq!(num(-150), "-1.50");
        assert_eq!(num(4000), "40");
    }
}

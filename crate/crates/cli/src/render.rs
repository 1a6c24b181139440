//! Plain SVG drawings of webs and matchings.

use std::fmt::Write;

use hourglass_core::projection::{Mark, Matching};
use hourglass_core::trips::Labeling;
use hourglass_core::web::{Color, EdgeKind, HourglassWeb};

const PAD: f64 = 20.0;

fn fill(c: Color) -> &'static str {
    match c {
        Color::Black => "black",
        Color::White => "white",
    }
}

pub fn web_svg(web: &HourglassWeb, labels: Option<&Labeling>) -> String {
    let xs = web.vertices.iter().map(|v| v.pos.x);
    let ys = web.vertices.iter().map(|v| v.pos.y);
    let (x0, x1) = (xs.clone().min().unwrap_or(0), xs.max().unwrap_or(0));
    let (y0, y1) = (ys.clone().min().unwrap_or(0), ys.max().unwrap_or(0));
    // Lattice units are large integers; draw about 60px per unit step.
    let s = 60.0 / 384.0;
    let px = |x: i64| PAD + (x - x0) as f64 * s;
    let py = |y: i64| PAD + (y1 - y) as f64 * s;
    let w = 2.0 * PAD + (x1 - x0) as f64 * s;
    let h = 2.0 * PAD + (y1 - y0) as f64 * s;

    let mut out = String::new();
    let _ = writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.1}" height="{h:.1}">"#);
    for e in &web.edges {
        let [b, wv] = e.ends;
        let (p, q) = (web.vertices[b].pos, web.vertices[wv].pos);
        let width = match e.kind {
            EdgeKind::Simple => 1.5,
            EdgeKind::Hourglass => 4.0,
        };
        let _ = writeln!(
            out,
            r#"<line x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}" stroke="gray" stroke-width="{width}"/>"#,
            px(p.x),
            py(p.y),
            px(q.x),
            py(q.y)
        );
        if let Some(lab) = labels {
            let text: Vec<String> = lab.colors(e.id).iter().map(u8::to_string).collect();
            let _ = writeln!(
                out,
                r#"<text x="{:.1}" y="{:.1}" font-size="9" fill="blue">{}</text>"#,
                (px(p.x) + px(q.x)) / 2.0 + 2.0,
                (py(p.y) + py(q.y)) / 2.0 - 2.0,
                text.join("")
            );
        }
    }
    for v in &web.vertices {
        let _ = writeln!(
            out,
            r#"<circle cx="{:.1}" cy="{:.1}" r="3" fill="{}" stroke="black"/>"#,
            px(v.pos.x),
            py(v.pos.y),
            fill(v.color)
        );
    }
    for (i, &b) in web.boundary.iter().enumerate() {
        let p = web.vertices[b].pos;
        let _ = writeln!(out, r#"<text x="{:.1}" y="{:.1}" font-size="10">{}</text>"#, px(p.x) + 4.0, py(p.y) - 4.0, i + 1);
    }
    out.push_str("</svg>\n");
    out
}

/// Points on a horizontal line with arcs above it.
pub fn matching_svg(m: &Matching) -> String {
    let step = 40.0;
    let n = m.points.len();
    let w = 2.0 * PAD + step * n.saturating_sub(1) as f64;
    let h = PAD * 2.0 + step * (n as f64) / 2.0;
    let base = h - PAD;
    let x = |i: usize| PAD + step * i as f64;

    let mut out = String::new();
    let _ = writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.1}" height="{h:.1}">"#);
    for e in &m.edges {
        let (a, b) = (x(e.ends[0]), x(e.ends[1]));
        let r = (b - a) / 2.0;
        let _ = writeln!(
            out,
            r#"<path d="M {a:.1} {base:.1} A {r:.1} {r:.1} 0 0 1 {b:.1} {base:.1}" fill="none" stroke="black"/>"#
        );
        let mid = match e.mark {
            Mark::Plain => None,
            Mark::White => Some(Color::White),
            Mark::Black => Some(Color::Black),
        };
        if let Some(c) = mid {
            let _ = writeln!(
                out,
                r#"<circle cx="{:.1}" cy="{:.1}" r="4" fill="{}" stroke="black"/>"#,
                a + r,
                base - r,
                fill(c)
            );
        }
    }
    for (i, p) in m.points.iter().enumerate() {
        let _ = writeln!(
            out,
            r#"<circle cx="{:.1}" cy="{base:.1}" r="4" fill="{}" stroke="black"/>"#,
            x(i),
            fill(p.color)
        );
        let _ = writeln!(out, r#"<text x="{:.1}" y="{:.1}" font-size="10">{}</text>"#, x(i) - 3.0, base + 15.0, p.label);
    }
    out.push_str("</svg>\n");
    out
}

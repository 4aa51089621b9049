//! Static SVG and CSV renderings in the plane, one unit per lattice step.

use std::fmt::Write;

use toric_bdiv::{ExponentVector, MonomialIdeal, QVector, Rational, Region};

const SCALE: f64 = 1.0;

fn num(x: f64) -> String {
    let s = format!("{x:.4}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" { "0".to_string() } else { s.to_string() }
}

/// A canvas `[0,w] × [0,h]` in lattice units with the y axis pointing up.
pub struct Canvas {
    width: f64,
    height: f64,
    body: String,
}

impl Canvas {
    pub fn new(width: f64, height: f64) -> Self {
        Canvas { width: width.max(1.0), height: height.max(1.0), body: String::new() }
    }

    fn y(&self, y: f64) -> f64 {
        self.height - y
    }

    pub fn grid(&mut self) {
        let (w, h) = (self.width.floor() as i64, self.height.floor() as i64);
        for x in 0..=w {
            let _ = writeln!(self.body, r##"<line x1="{0}" y1="0" x2="{0}" y2="{1}" stroke="#ddd" stroke-width="0.02"/>"##, x, num(self.height));
        }
        for y in 0..=h {
            let yy = num(self.y(y as f64));
            let _ = writeln!(self.body, r##"<line x1="0" y1="{yy}" x2="{}" y2="{yy}" stroke="#ddd" stroke-width="0.02"/>"##, num(self.width));
        }
    }

    pub fn polygon(&mut self, pts: &[(f64, f64)], fill: &str) {
        let p: Vec<String> = pts.iter().map(|&(x, y)| format!("{},{}", num(x), num(self.y(y)))).collect();
        let _ = writeln!(self.body, r#"<polygon points="{}" fill="{fill}" fill-opacity="0.35" stroke="{fill}" stroke-width="0.04"/>"#, p.join(" "));
    }

    pub fn polyline(&mut self, pts: &[(f64, f64)], stroke: &str) {
        let p: Vec<String> = pts.iter().map(|&(x, y)| format!("{},{}", num(x), num(self.y(y)))).collect();
        let _ = writeln!(self.body, r#"<polyline points="{}" fill="none" stroke="{stroke}" stroke-width="0.06"/>"#, p.join(" "));
    }

    pub fn dot(&mut self, x: f64, y: f64, color: &str) {
        let _ = writeln!(self.body, r#"<circle cx="{}" cy="{}" r="0.1" fill="{color}"/>"#, num(x), num(self.y(y)));
    }

    pub fn segment(&mut self, a: (f64, f64), b: (f64, f64), stroke: &str) {
        let _ = writeln!(
            self.body,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{stroke}" stroke-width="0.04"/>"#,
            num(a.0), num(self.y(a.1)), num(b.0), num(self.y(b.1))
        );
    }

    pub fn label(&mut self, x: f64, y: f64, text: &str) {
        let _ = writeln!(self.body, r#"<text x="{}" y="{}" font-size="0.35" font-family="monospace">{text}</text>"#, num(x), num(self.y(y)));
    }

    pub fn finish(self) -> String {
        format!(
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"-0.5 -0.5 {} {}\">\n{}</svg>\n",
            num(self.width + 1.0),
            num(self.height + 1.0),
            self.body
        )
    }
}

fn f(x: &Rational) -> f64 {
    x.to_f64() * SCALE
}

/// The region clipped to `[0, side]²`.
fn region_outline(q: &Region, side: f64) -> Vec<(f64, f64)> {
    let v: Vec<(f64, f64)> = q.vertices().iter().map(|c| (f(&c[0]), f(&c[1]))).collect();
    let mut pts = vec![(v[0].0, side)];
    pts.extend(v.iter().copied());
    let last = *v.last().expect("nonempty");
    pts.push((side, last.1));
    pts.push((side, side));
    pts
}

fn staircase_path(a: &MonomialIdeal, side: f64) -> Vec<(f64, f64)> {
    let g = a.generators();
    let mut pts = Vec::new();
    if let Some(first) = g.first() {
        pts.push((first[0] as f64, side));
    }
    for (i, u) in g.iter().enumerate() {
        pts.push((u[0] as f64, u[1] as f64));
        if let Some(next) = g.get(i + 1) {
            pts.push((next[0] as f64, u[1] as f64));
        }
    }
    if let Some(last) = g.last() {
        pts.push((side, last[1] as f64));
    }
    pts
}

fn side_for(points: impl Iterator<Item = f64>) -> f64 {
    (points.fold(1.0f64, f64::max) + 1.0).ceil()
}

/// The staircase of a planar ideal, optionally over a shaded region.
pub fn staircase_svg(a: &MonomialIdeal, region: Option<&Region>) -> String {
    let coords = a.generators().iter().flat_map(|u| [u[0] as f64, u[1] as f64]);
    let extra = region.into_iter().flat_map(|q| q.vertices().iter().flat_map(|c| [f(&c[0]), f(&c[1])]));
    let side = side_for(coords.chain(extra));
    let mut c = Canvas::new(side, side);
    c.grid();
    if let Some(q) = region {
        c.polygon(&region_outline(q, side), "#4a90d9");
    }
    c.polyline(&staircase_path(a, side), "#c0392b");
    for u in a.generators() {
        c.dot(u[0] as f64, u[1] as f64, "#c0392b");
    }
    c.finish()
}

pub fn region_svg(q: &Region) -> String {
    let side = side_for(q.vertices().iter().flat_map(|c| [f(&c[0]), f(&c[1])]));
    let mut c = Canvas::new(side, side);
    c.grid();
    c.polygon(&region_outline(q, side), "#4a90d9");
    for v in q.vertices() {
        c.dot(f(&v[0]), f(&v[1]), "#1f4e79");
    }
    c.finish()
}

/// Rays of a planar fan drawn to length 3, labelled with their values.
pub fn fan_svg(rays: &[(QVector, Rational)]) -> String {
    let side = 4.0;
    let mut c = Canvas::new(side, side);
    c.grid();
    for (r, v) in rays {
        let (x, y) = (f(&r[0]), f(&r[1]));
        let len = (x * x + y * y).sqrt();
        let end = (3.0 * x / len, 3.0 * y / len);
        c.segment((0.0, 0.0), end, "#2c3e50");
        c.dot(end.0, end.1, "#2c3e50");
        c.label(end.0 + 0.1, end.1 + 0.1, &format!("{r}: {v}"));
    }
    c.finish()
}

pub fn points_csv(points: &[QVector]) -> String {
    let mut out = String::from("x,y\n");
    for p in points {
        let _ = writeln!(out, "{},{}", p[0], p[1]);
    }
    out
}

pub fn exponents_csv(points: &[ExponentVector]) -> String {
    let mut out = String::from("x,y\n");
    for p in points {
        let _ = writeln!(out, "{},{}", p[0], p[1]);
    }
    out
}

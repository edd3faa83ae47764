//! Deterministic SVG figures: a triangle on the integer grid with its
//! circumcircle, Euler line and the three centers.
//!
//! Rendering is a pure function of [`FigureSpec`]: coordinates are formatted
//! with a fixed precision, element order is fixed, and nothing (timestamps,
//! random ids) varies between runs, so rendering the same spec twice yields
//! byte-identical output. All geometry is computed exactly first; floats
//! enter only in the final world-to-screen projection.

use clap::ValueEnum;
use trilat::{Rational, RationalPoint, Triangle};

/// A drawable layer of the figure, for `--hide`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum FigureElement {
    /// Dotted unit grid.
    Grid,
    /// The two coordinate axes.
    Axes,
    /// Circle around the circumcenter through the vertices.
    Circumcircle,
    /// Line through circumcenter, centroid and orthocenter.
    EulerLine,
    /// Dots for the three centers.
    Centers,
    /// Vertex coordinates and center names.
    Labels,
}

/// What to draw and at which size.
#[derive(Clone, Copy, Debug)]
pub struct FigureSpec {
    /// The triangle under examination.
    pub triangle: Triangle,
    /// Canvas width in pixels.
    pub width: u32,
    /// Canvas height in pixels.
    pub height: u32,
    /// Draw the unit grid.
    pub grid: bool,
    /// Draw the coordinate axes.
    pub axes: bool,
    /// Draw the circumcircle.
    pub circumcircle: bool,
    /// Draw the Euler line.
    pub euler_line: bool,
    /// Draw the center dots.
    pub centers: bool,
    /// Draw labels.
    pub labels: bool,
}

impl FigureSpec {
    /// A spec with every element shown on a 480×360 canvas.
    pub fn new(triangle: Triangle) -> FigureSpec {
        FigureSpec {
            triangle,
            width: 480,
            height: 360,
            grid: true,
            axes: true,
            circumcircle: true,
            euler_line: true,
            centers: true,
            labels: true,
        }
    }

    /// Removes one layer from the figure.
    pub fn hide(&mut self, element: FigureElement) {
        match element {
            FigureElement::Grid => self.grid = false,
            FigureElement::Axes => self.axes = false,
            FigureElement::Circumcircle => self.circumcircle = false,
            FigureElement::EulerLine => self.euler_line = false,
            FigureElement::Centers => self.centers = false,
            FigureElement::Labels => self.labels = false,
        }
    }
}

fn to_f64(r: Rational) -> f64 {
    r.num().raw() as f64 / r.den().raw() as f64
}

fn point_f64(p: RationalPoint) -> (f64, f64) {
    (to_f64(p.x), to_f64(p.y))
}

/// Fixed six-decimal coordinate format; negative zero is normalized so the
/// output never depends on the sign of a rounding error.
pub fn fmt6(v: f64) -> String {
    let s = format!("{v:.6}");
    if s == "-0.000000" {
        "0.000000".to_string()
    } else {
        s
    }
}

/// The uniform world-to-screen transform used by [`render_figure`].
struct Frame {
    scale: f64,
    wx0: f64,
    wy1: f64,
    ox: f64,
    oy: f64,
}

impl Frame {
    fn to_screen(&self, x: f64, y: f64) -> (f64, f64) {
        (
            self.ox + (x - self.wx0) * self.scale,
            self.oy + (self.wy1 - y) * self.scale,
        )
    }
}

const SCREEN_MARGIN: f64 = 24.0;
const WORLD_PAD: f64 = 0.8;

fn frame(spec: &FigureSpec) -> Frame {
    let t = &spec.triangle;
    let mut xs: Vec<f64> = Vec::new();
    let mut ys: Vec<f64> = Vec::new();
    for v in t.vertices() {
        xs.push(v.x.raw() as f64);
        ys.push(v.y.raw() as f64);
    }
    if spec.centers || spec.euler_line {
        for p in [t.circumcenter(), t.centroid(), t.orthocenter()] {
            let (x, y) = point_f64(p);
            xs.push(x);
            ys.push(y);
        }
    }
    if spec.circumcircle {
        let (fx, fy) = point_f64(t.circumcenter());
        let r = to_f64(t.circumradius_squared()).sqrt();
        xs.extend([fx - r, fx + r]);
        ys.extend([fy - r, fy + r]);
    }
    let min = |v: &[f64]| v.iter().copied().fold(f64::INFINITY, f64::min);
    let max = |v: &[f64]| v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let (wx0, wx1) = (min(&xs) - WORLD_PAD, max(&xs) + WORLD_PAD);
    let (wy0, wy1) = (min(&ys) - WORLD_PAD, max(&ys) + WORLD_PAD);
    let span_x = wx1 - wx0;
    let span_y = wy1 - wy0;
    let avail_x = spec.width as f64 - 2.0 * SCREEN_MARGIN;
    let avail_y = spec.height as f64 - 2.0 * SCREEN_MARGIN;
    let scale = (avail_x / span_x).min(avail_y / span_y);
    let ox = (spec.width as f64 - span_x * scale) / 2.0;
    let oy = (spec.height as f64 - span_y * scale) / 2.0;
    Frame { scale, wx0, wy1, ox, oy }
}

/// Projects a world point to pixel coordinates exactly as the renderer does;
/// exposed so tests can assert where an element lands.
pub fn world_to_screen(spec: &FigureSpec, x: f64, y: f64) -> (f64, f64) {
    frame(spec).to_screen(x, y)
}

/// Clips the infinite line through `p` with direction `d` to the rectangle
/// `[0, w] × [0, h]`, returning segment endpoints if the line crosses it.
fn clip_line(p: (f64, f64), d: (f64, f64), w: f64, h: f64) -> Option<((f64, f64), (f64, f64))> {
    let mut t0 = f64::NEG_INFINITY;
    let mut t1 = f64::INFINITY;
    for (start, delta, lo, hi) in [(p.0, d.0, 0.0, w), (p.1, d.1, 0.0, h)] {
        if delta == 0.0 {
            if start < lo || start > hi {
                return None;
            }
        } else {
            let (a, b) = ((lo - start) / delta, (hi - start) / delta);
            t0 = t0.max(a.min(b));
            t1 = t1.min(a.max(b));
        }
    }
    if t0 >= t1 {
        return None;
    }
    Some((
        (p.0 + t0 * d.0, p.1 + t0 * d.1),
        (p.0 + t1 * d.0, p.1 + t1 * d.1),
    ))
}

/// Most grid lines drawn per axis before the grid is dropped as too dense to
/// be useful.
const MAX_GRID_LINES: i64 = 200;

/// Renders the figure as a standalone SVG document.
pub fn render_figure(spec: &FigureSpec) -> String {
    let t = &spec.triangle;
    let fr = frame(spec);
    let (w, h) = (spec.width as f64, spec.height as f64);
    let mut s = String::new();
    s.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\">\n",
        spec.width, spec.height
    ));
    s.push_str(&format!("  <desc>triangle {t}</desc>\n"));
    s.push_str(&format!(
        "  <rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"#ffffff\"/>\n",
        spec.width, spec.height
    ));

    // World extents visible on screen (the full canvas, margins included),
    // for grid and axes.
    let wxa = fr.wx0 - fr.ox / fr.scale;
    let wxb = wxa + w / fr.scale;
    let wyb = fr.wy1 + fr.oy / fr.scale;
    let wya = wyb - h / fr.scale;
    if spec.grid {
        let x_lo = wxa.ceil() as i64;
        let x_hi = wxb.floor() as i64;
        let y_lo = wya.ceil() as i64;
        let y_hi = wyb.floor() as i64;
        if x_hi - x_lo < MAX_GRID_LINES && y_hi - y_lo < MAX_GRID_LINES {
            s.push_str("  <g stroke=\"#bbbbbb\" stroke-width=\"0.5\" stroke-dasharray=\"1 3\">\n");
            for gx in x_lo..=x_hi {
                let (sx, _) = fr.to_screen(gx as f64, 0.0);
                s.push_str(&format!(
                    "    <line x1=\"{0}\" y1=\"0\" x2=\"{0}\" y2=\"{1}\"/>\n",
                    fmt6(sx),
                    spec.height
                ));
            }
            for gy in y_lo..=y_hi {
                let (_, sy) = fr.to_screen(0.0, gy as f64);
                s.push_str(&format!(
                    "    <line x1=\"0\" y1=\"{0}\" x2=\"{1}\" y2=\"{0}\"/>\n",
                    fmt6(sy),
                    spec.width
                ));
            }
            s.push_str("  </g>\n");
        }
    }
    if spec.axes {
        s.push_str("  <g stroke=\"#666666\" stroke-width=\"1\">\n");
        let (x_axis_x, _) = fr.to_screen(0.0, 0.0);
        if (0.0..=w).contains(&x_axis_x) {
            s.push_str(&format!(
                "    <line x1=\"{0}\" y1=\"0\" x2=\"{0}\" y2=\"{1}\"/>\n",
                fmt6(x_axis_x),
                spec.height
            ));
        }
        let (_, y_axis_y) = fr.to_screen(0.0, 0.0);
        if (0.0..=h).contains(&y_axis_y) {
            s.push_str(&format!(
                "    <line x1=\"0\" y1=\"{0}\" x2=\"{1}\" y2=\"{0}\"/>\n",
                fmt6(y_axis_y),
                spec.width
            ));
        }
        s.push_str("  </g>\n");
    }

    if spec.circumcircle {
        let (fx, fy) = point_f64(t.circumcenter());
        let (cx, cy) = fr.to_screen(fx, fy);
        let r = to_f64(t.circumradius_squared()).sqrt() * fr.scale;
        s.push_str(&format!(
            "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"#d62828\" stroke-width=\"1.5\"/>\n",
            fmt6(cx),
            fmt6(cy),
            fmt6(r)
        ));
    }

    let screen_vertices: Vec<(f64, f64)> = t
        .vertices()
        .iter()
        .map(|v| fr.to_screen(v.x.raw() as f64, v.y.raw() as f64))
        .collect();
    let points: Vec<String> = screen_vertices
        .iter()
        .map(|&(x, y)| format!("{},{}", fmt6(x), fmt6(y)))
        .collect();
    s.push_str(&format!(
        "  <polygon points=\"{}\" fill=\"#8ecae6\" fill-opacity=\"0.45\" stroke=\"#023047\" stroke-width=\"1.5\"/>\n",
        points.join(" ")
    ));

    if spec.euler_line {
        // Circumcenter and orthocenter are distinct for every lattice
        // triangle (only equilateral triangles collapse the centers, and no
        // equilateral triangle has integer vertices), so they span the line.
        let f = fr.to_screen(point_f64(t.circumcenter()).0, point_f64(t.circumcenter()).1);
        let hp = fr.to_screen(point_f64(t.orthocenter()).0, point_f64(t.orthocenter()).1);
        let d = (hp.0 - f.0, hp.1 - f.1);
        if let Some((a, b)) = clip_line(f, d, w, h) {
            s.push_str(&format!(
                "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#5a189a\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"/>\n",
                fmt6(a.0),
                fmt6(a.1),
                fmt6(b.0),
                fmt6(b.1)
            ));
        }
    }

    for &(x, y) in &screen_vertices {
        s.push_str(&format!(
            "  <circle cx=\"{}\" cy=\"{}\" r=\"2.5\" fill=\"#023047\"/>\n",
            fmt6(x),
            fmt6(y)
        ));
    }

    let center_dots = [
        (t.circumcenter(), "#d62828", "F"),
        (t.centroid(), "#2a9d8f", "G"),
        (t.orthocenter(), "#5a189a", "H"),
    ];
    if spec.centers {
        for (p, color, _) in center_dots {
            let (x, y) = point_f64(p);
            let (sx, sy) = fr.to_screen(x, y);
            s.push_str(&format!(
                "  <circle cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"{}\"/>\n",
                fmt6(sx),
                fmt6(sy),
                color
            ));
        }
    }

    if spec.labels {
        s.push_str("  <g font-family=\"sans-serif\" font-size=\"12\" fill=\"#222222\">\n");
        for (v, &(sx, sy)) in t.vertices().iter().zip(&screen_vertices) {
            s.push_str(&format!(
                "    <text x=\"{}\" y=\"{}\">{v}</text>\n",
                fmt6(sx + 6.0),
                fmt6(sy - 6.0)
            ));
        }
        if spec.centers {
            for (p, _, name) in center_dots {
                let (x, y) = point_f64(p);
                let (sx, sy) = fr.to_screen(x, y);
                s.push_str(&format!(
                    "    <text x=\"{}\" y=\"{}\">{name}</text>\n",
                    fmt6(sx + 6.0),
                    fmt6(sy - 6.0)
                ));
            }
        }
        s.push_str("  </g>\n");
    }

    s.push_str("</svg>\n");
    s
}

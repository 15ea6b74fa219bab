//! Minimal SVG rendering: the trajectory as a polyline over the stay-map
//! polygons, one path per polygon with holes carried as even-odd subpaths.

use crate::scalar::Scalar;
use crate::staymap2d::RegionSet;
use crate::trajectory::Trajectory2;

struct Frame {
    x_min: f64,
    y_min: f64,
    x_max: f64,
    y_max: f64,
}

impl Frame {
    fn grow(&mut self, x: f64, y: f64) {
        self.x_min = self.x_min.min(x);
        self.y_min = self.y_min.min(y);
        self.x_max = self.x_max.max(x);
        self.y_max = self.y_max.max(y);
    }

    /// SVG y grows downward; mirror within the frame.
    fn flip(&self, y: f64) -> f64 {
        self.y_min + self.y_max - y
    }
}

pub fn render_svg<S: Scalar>(traj: &Trajectory2<S>, map: &RegionSet<S>) -> String {
    let mut frame = Frame {
        x_min: f64::INFINITY,
        y_min: f64::INFINITY,
        x_max: f64::NEG_INFINITY,
        y_max: f64::NEG_INFINITY,
    };
    for v in traj.vertices() {
        frame.grow(v.pos.x.to_f64_lossy(), v.pos.y.to_f64_lossy());
    }
    for ring in map.rings() {
        for p in ring {
            frame.grow(p.x.to_f64_lossy(), p.y.to_f64_lossy());
        }
    }
    if !frame.x_min.is_finite() {
        frame = Frame {
            x_min: 0.0,
            y_min: 0.0,
            x_max: 1.0,
            y_max: 1.0,
        };
    }
    let margin = 0.05 * ((frame.x_max - frame.x_min).max(frame.y_max - frame.y_min)).max(1.0);
    let view = format!(
        "{} {} {} {}",
        frame.x_min - margin,
        frame.y_min - margin,
        frame.x_max - frame.x_min + 2.0 * margin,
        frame.y_max - frame.y_min + 2.0 * margin
    );
    let stroke = 0.01 * ((frame.x_max - frame.x_min).max(frame.y_max - frame.y_min)).max(1.0);

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{}\">\n",
        view
    ));
    for poly in &map.polygons {
        let mut d = String::new();
        for ring in std::iter::once(&poly.outer).chain(poly.holes.iter()) {
            for (i, p) in ring.iter().enumerate() {
                let cmd = if i == 0 { 'M' } else { 'L' };
                d.push_str(&format!(
                    "{}{} {} ",
                    cmd,
                    p.x.to_f64_lossy(),
                    frame.flip(p.y.to_f64_lossy())
                ));
            }
            d.push_str("Z ");
        }
        out.push_str(&format!(
            "  <path d=\"{}\" fill=\"#7bc27b\" fill-opacity=\"0.6\" fill-rule=\"evenodd\" stroke=\"#2e7d32\" stroke-width=\"{}\"/>\n",
            d.trim_end(),
            stroke
        ));
    }
    let pts: Vec<String> = traj
        .vertices()
        .iter()
        .map(|v| {
            format!(
                "{},{}",
                v.pos.x.to_f64_lossy(),
                frame.flip(v.pos.y.to_f64_lossy())
            )
        })
        .collect();
    out.push_str(&format!(
        "  <polyline points=\"{}\" fill=\"none\" stroke=\"#1a237e\" stroke-width=\"{}\"/>\n",
        pts.join(" "),
        stroke
    ));
    out.push_str("</svg>\n");
    out
}

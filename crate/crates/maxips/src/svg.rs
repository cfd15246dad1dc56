//! SVG rendering of integral point sets: filled circles for points, a
//! straight segment for every pair at integral distance, and optional
//! figure circles drawn as outlines.

use num_traits::ToPrimitive;

use crate::geometry::{integral_distance, PointSet};
use crate::{Rat, Result};

/// A circle of the figure (for example the circumscribed circle of a
/// circle-construction set), in exact coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FigureCircle {
    pub cx: Rat,
    pub cy: Rat,
    pub r: Rat,
}

#[derive(Debug, Clone)]
pub struct SvgOptions {
    pub width: u32,
    pub height: u32,
    pub margin: u32,
    /// Radius of the point markers in viewport units.
    pub point_radius: f64,
    /// Figure circles to render as outlined arcs.
    pub circles: Vec<FigureCircle>,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            width: 640,
            height: 640,
            margin: 24,
            point_radius: 3.5,
            circles: Vec::new(),
        }
    }
}

/// A rendered figure together with its element counts.
#[derive(Debug, Clone)]
pub struct SvgFigure {
    pub markup: String,
    pub circle_count: usize,
    pub segment_count: usize,
}

struct Viewport {
    scale: f64,
    min_x: f64,
    max_y: f64,
    margin: f64,
}

impl Viewport {
    /// Maps grid coordinates to viewport coordinates, flipping the y axis
    /// so larger y is drawn higher.
    fn map(&self, x: f64, y: f64) -> (f64, f64) {
        (
            self.margin + (x - self.min_x) * self.scale,
            self.margin + (self.max_y - y) * self.scale,
        )
    }
}

fn fmt_coord(v: f64) -> String {
    format!("{v:.3}")
}

fn rat_to_f64(r: &Rat) -> f64 {
    r.numer().to_f64().unwrap_or(0.0) / r.denom().to_f64().unwrap_or(1.0)
}

/// Renders the set deterministically: segments first (pair order follows
/// the canonical point order), then figure circles, then point markers.
/// Exact input coordinates are carried in data-x / data-y attributes.
pub fn render_svg(set: &PointSet, opts: &SvgOptions) -> Result<SvgFigure> {
    let pts = set.points();
    let coords: Vec<(f64, f64)> = pts
        .iter()
        .map(|p| (p.x.to_f64().unwrap_or(0.0), p.y.to_f64().unwrap_or(0.0)))
        .collect();
    let min_x = coords.iter().map(|c| c.0).fold(f64::INFINITY, f64::min);
    let max_x = coords.iter().map(|c| c.0).fold(f64::NEG_INFINITY, f64::max);
    let min_y = coords.iter().map(|c| c.1).fold(f64::INFINITY, f64::min);
    let max_y = coords.iter().map(|c| c.1).fold(f64::NEG_INFINITY, f64::max);
    let span_x = (max_x - min_x).max(1.0);
    let span_y = (max_y - min_y).max(1.0);
    let inner_w = f64::from(opts.width) - 2.0 * f64::from(opts.margin);
    let inner_h = f64::from(opts.height) - 2.0 * f64::from(opts.margin);
    let vp = Viewport {
        scale: (inner_w / span_x).min(inner_h / span_y),
        min_x,
        max_y,
        margin: f64::from(opts.margin),
    };

    let mut markup = String::new();
    markup.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" \
         viewBox=\"0 0 {} {}\">\n",
        opts.width, opts.height, opts.width, opts.height
    ));

    let mut segment_count = 0;
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            if integral_distance(&pts[i], &pts[j]).is_none() {
                continue;
            }
            let (x1, y1) = vp.map(coords[i].0, coords[i].1);
            let (x2, y2) = vp.map(coords[j].0, coords[j].1);
            markup.push_str(&format!(
                "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" \
                 stroke=\"#444\" stroke-width=\"1\"/>\n",
                fmt_coord(x1),
                fmt_coord(y1),
                fmt_coord(x2),
                fmt_coord(y2)
            ));
            segment_count += 1;
        }
    }

    for c in &opts.circles {
        let (cx, cy) = vp.map(rat_to_f64(&c.cx), rat_to_f64(&c.cy));
        let r = rat_to_f64(&c.r) * vp.scale;
        markup.push_str(&format!(
            "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" \
             stroke=\"#999\" stroke-dasharray=\"4 3\" data-cx=\"{}\" data-cy=\"{}\" \
             data-r=\"{}\"/>\n",
            fmt_coord(cx),
            fmt_coord(cy),
            fmt_coord(r),
            c.cx,
            c.cy,
            c.r
        ));
    }

    let mut circle_count = 0;
    for (p, &(px, py)) in pts.iter().zip(coords.iter()) {
        let (x, y) = vp.map(px, py);
        markup.push_str(&format!(
            "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#000\" \
             data-x=\"{}\" data-y=\"{}\"/>\n",
            fmt_coord(x),
            fmt_coord(y),
            opts.point_radius,
            p.x,
            p.y
        ));
        circle_count += 1;
    }

    markup.push_str("</svg>\n");
    Ok(SvgFigure { markup, circle_count, segment_count })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{crab, decompose_crab, CrabSpec};
    use crate::geometry::GridPoint;
    use crate::Int;

    fn set(pts: &[(i64, i64)]) -> PointSet {
        PointSet::new(pts.iter().map(|&(x, y)| GridPoint::new(x, y)).collect()).unwrap()
    }

    #[test]
    fn crab_4_3_counts() {
        let c = crab(&CrabSpec::new(4, vec![Int::from(3)]).unwrap());
        let fig = render_svg(&c, &SvgOptions::default()).unwrap();
        assert_eq!(fig.circle_count, 5);
        // All 10 pairs of the 5-point rhombus are at integral distance.
        assert_eq!(fig.segment_count, 10);
    }

    #[test]
    fn single_point() {
        let fig = render_svg(&set(&[(2, 7)]), &SvgOptions::default()).unwrap();
        assert_eq!(fig.circle_count, 1);
        assert_eq!(fig.segment_count, 0);
    }

    #[test]
    fn decompose_12_crab_has_11_circles() {
        let c = decompose_crab(&Int::from(12)).unwrap();
        let fig = render_svg(&c, &SvgOptions::default()).unwrap();
        assert_eq!(fig.circle_count, 11);
    }

    #[test]
    fn deterministic_markup() {
        let s = set(&[(0, 0), (3, 0), (0, 4), (3, 4)]);
        let a = render_svg(&s, &SvgOptions::default()).unwrap();
        let b = render_svg(&s, &SvgOptions::default()).unwrap();
        assert_eq!(a.markup, b.markup);
        assert!(a.markup.contains("data-x=\"3\""));
    }

    #[test]
    fn figure_circle_rendered() {
        let mut opts = SvgOptions::default();
        opts.circles.push(FigureCircle {
            cx: Rat::from(Int::from(0)),
            cy: Rat::from(Int::from(0)),
            r: Rat::from(Int::from(5)),
        });
        let fig = render_svg(&set(&[(3, 4), (5, 0), (0, 5)]), &opts).unwrap();
        assert!(fig.markup.contains("stroke-dasharray"));
    }
}

//! SVG rendering of a solution.
//!
//! Terminals are filled circles, unused candidates hollow circles and chosen
//! Steiner points filled squares. Tree edges are lines; the bottleneck edge
//! is drawn in red. The y axis points up as in the instance coordinates.

use std::fmt::Write as _;

use crate::geometry::Instance;
use crate::tree::SteinerTree;

pub fn render_svg(inst: &Instance, tree: &SteinerTree) -> String {
    let (mut min_x, mut min_y) = (f64::INFINITY, f64::INFINITY);
    let (mut max_x, mut max_y) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    for p in inst.points() {
        min_x = min_x.min(p.x);
        min_y = min_y.min(p.y);
        max_x = max_x.max(p.x);
        max_y = max_y.max(p.y);
    }
    let extent = (max_x - min_x).max(max_y - min_y);
    let extent = if extent > 0.0 { extent } else { 1.0 };
    let margin = 0.05 * extent;
    let width = (max_x - min_x) + 2.0 * margin;
    let height = (max_y - min_y) + 2.0 * margin;
    let radius = extent / 100.0;
    let stroke = extent / 400.0;

    // Flip y so larger coordinates are drawn higher up.
    let sx = |x: f64| x - min_x + margin;
    let sy = |y: f64| max_y - y + margin;

    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="0 0 {} {}" width="800" height="{}">"#,
        fmt(width),
        fmt(height),
        fmt(800.0 * height / width)
    )
    .unwrap();
    writeln!(
        out,
        r#"  <rect x="0" y="0" width="{}" height="{}" fill="white"/>"#,
        fmt(width),
        fmt(height)
    )
    .unwrap();

    let bottleneck = tree.bottleneck_edge().copied();
    for e in &tree.edges {
        let (a, b) = (inst.point(e.u), inst.point(e.v));
        let (colour, width) = if Some(*e) == bottleneck {
            ("#d62728", 2.5 * stroke)
        } else {
            ("#444444", stroke)
        };
        writeln!(
            out,
            r#"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{colour}" stroke-width="{}"/>"#,
            fmt(sx(a.x)),
            fmt(sy(a.y)),
            fmt(sx(b.x)),
            fmt(sy(b.y)),
            fmt(width)
        )
        .unwrap();
    }

    for v in inst.num_terminals()..inst.num_vertices() {
        let p = inst.point(v);
        if tree.chosen_steiners.binary_search(&v).is_ok() {
            writeln!(
                out,
                r#"  <rect x="{}" y="{}" width="{}" height="{}" fill="black"/>"#,
                fmt(sx(p.x) - radius),
                fmt(sy(p.y) - radius),
                fmt(2.0 * radius),
                fmt(2.0 * radius)
            )
            .unwrap();
        } else {
            writeln!(
                out,
                r#"  <circle cx="{}" cy="{}" r="{}" fill="none" stroke="black" stroke-width="{}"/>"#,
                fmt(sx(p.x)),
                fmt(sy(p.y)),
                fmt(radius),
                fmt(stroke)
            )
            .unwrap();
        }
    }
    for p in inst.terminals() {
        writeln!(
            out,
            r#"  <circle cx="{}" cy="{}" r="{}" fill="black"/>"#,
            fmt(sx(p.x)),
            fmt(sy(p.y)),
            fmt(radius)
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

fn fmt(v: f64) -> String {
    let s = format!("{v:.4}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::approx::solve_sweep;
    use crate::geometry::Point;

    fn count(svg: &str, needle: &str) -> usize {
        svg.matches(needle).count()
    }

    #[test]
    fn tight_instance_drawing() {
        let inst = Instance::new(
            vec![Point::new(0.0, 0.0), Point::new(10.0, 0.0)],
            vec![Point::new(5.0, 0.0)],
            1,
        )
        .unwrap();
        let svg = render_svg(&inst, &solve_sweep(&inst).unwrap().tree);
        assert_eq!(count(&svg, r#"fill="black"/>"#), 2);
        assert_eq!(count(&svg, "<rect"), 1);
        assert_eq!(count(&svg, "<circle"), 3);
        assert_eq!(count(&svg, r#"fill="none""#), 1);
        assert_eq!(count(&svg, "<line"), 1);
        assert!(svg.contains(r#"viewBox="0 0 11 1""#));
    }

    #[test]
    fn single_terminal_drawing() {
        let inst = Instance::new(vec![Point::new(2.0, 2.0)], vec![], 0).unwrap();
        let svg = render_svg(&inst, &solve_sweep(&inst).unwrap().tree);
        assert_eq!(count(&svg, "<circle"), 1);
        assert_eq!(count(&svg, "<line"), 0);
    }

    #[test]
    fn chosen_points_are_squares() {
        let inst = Instance::new(
            vec![Point::new(0.0, 0.0), Point::new(4.0, 0.0)],
            vec![
                Point::new(1.0, 0.0),
                Point::new(2.0, 0.0),
                Point::new(3.0, 0.0),
            ],
            3,
        )
        .unwrap();
        let svg = render_svg(&inst, &solve_sweep(&inst).unwrap().tree);
        assert_eq!(count(&svg, "<line"), 2);
        // One background rect plus one chosen Steiner point.
        assert_eq!(count(&svg, "<rect"), 2);
        assert_eq!(count(&svg, "#d62728"), 1);
        assert_eq!(svg, render_svg(&inst, &solve_sweep(&inst).unwrap().tree));
    }
}

//! Minimal SVG emitters for configurations, stress graphs, and trap
//! pictures. Everything is drawn in unit-disk coordinates and scaled to a
//! fixed canvas.

use crate::balance::StressGraph;
use crate::geometry::{DiskConfig, SegConfig};
use crate::plane::{unit, Point};
use crate::segments::TrapParams;
use std::fmt::Write as _;

const SIZE: f64 = 600.0;

struct Canvas {
    body: String,
    scale: f64,
}

impl Canvas {
    fn new(world_radius: f64) -> Self {
        Canvas {
            body: String::new(),
            scale: SIZE / (2.0 * world_radius * 1.05),
        }
    }

    fn map(&self, p: Point) -> (f64, f64) {
        (SIZE / 2.0 + p.x * self.scale, SIZE / 2.0 - p.y * self.scale)
    }

    fn circle(&mut self, c: Point, r: f64, stroke: &str, fill: &str) {
        let (cx, cy) = self.map(c);
        let _ = writeln!(
            self.body,
            r#"<circle cx="{cx:.2}" cy="{cy:.2}" r="{:.2}" stroke="{stroke}" fill="{fill}" stroke-width="1.5"/>"#,
            r * self.scale
        );
    }

    fn line(&mut self, a: Point, b: Point, stroke: &str, width: f64) {
        let (x1, y1) = self.map(a);
        let (x2, y2) = self.map(b);
        let _ = writeln!(
            self.body,
            r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="{stroke}" stroke-width="{width}"/>"#
        );
    }

    fn dot(&mut self, p: Point, color: &str) {
        let (cx, cy) = self.map(p);
        let _ = writeln!(
            self.body,
            r#"<circle cx="{cx:.2}" cy="{cy:.2}" r="2.5" fill="{color}"/>"#
        );
    }

    fn label(&mut self, p: Point, text: &str) {
        let (x, y) = self.map(p);
        let _ = writeln!(
            self.body,
            r##"<text x="{x:.2}" y="{y:.2}" font-size="14" text-anchor="middle" dominant-baseline="middle" fill="#333">{text}</text>"##
        );
    }

    fn finish(self) -> String {
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">\n{}</svg>\n",
            self.body
        )
    }
}

/// Unit disk outline, disks, and labels.
pub fn disk_config_svg(config: &DiskConfig) -> String {
    let mut c = Canvas::new(1.0);
    c.circle(Point::new(0.0, 0.0), 1.0, "#444", "none");
    for (i, &center) in config.centers.iter().enumerate() {
        c.circle(center, config.radius, "#1f77b4", "#aec7e8");
        c.label(center, &(i + 1).to_string());
    }
    c.finish()
}

/// Unit disk outline, oriented segments, and labels.
pub fn seg_config_svg(config: &SegConfig) -> String {
    let mut c = Canvas::new(1.0);
    c.circle(Point::new(0.0, 0.0), 1.0, "#444", "none");
    for (i, seg) in config.segments().iter().enumerate() {
        c.line(seg.a, seg.b, "#d62728", 2.5);
        c.dot(seg.b, "#d62728");
        c.label(
            seg.midpoint() + unit(config.directions[i] + 0.25) * 0.06,
            &(i + 1).to_string(),
        );
    }
    c.finish()
}

/// Stress graph: contact edges as segments, boundary vertices marked.
pub fn stress_graph_svg(graph: &StressGraph) -> String {
    let mut c = Canvas::new(1.0);
    c.circle(Point::new(0.0, 0.0), 1.0, "#444", "none");
    for (i, &center) in graph.centers.iter().enumerate() {
        c.circle(center, graph.radius, "#1f77b4", "none");
        c.label(center, &(i + 1).to_string());
    }
    for &(i, j) in &graph.edges {
        c.line(graph.centers[i], graph.centers[j], "#2ca02c", 2.0);
    }
    for &(i, y) in &graph.boundary {
        c.line(graph.centers[i], y, "#2ca02c", 2.0);
        c.dot(y, "#2ca02c");
    }
    c.finish()
}

/// Hourglass trap picture in the strip `|y| < 1`: obstacles, the strip
/// boundaries, the hourglass wedge, and the initial vertical segment.
pub fn trap_svg(params: &TrapParams) -> String {
    let world = (params.r / 2.0 + 0.3).max(1.2);
    let mut c = Canvas::new(world);
    c.line(Point::new(-world, 1.0), Point::new(world, 1.0), "#444", 1.5);
    c.line(
        Point::new(-world, -1.0),
        Point::new(world, -1.0),
        "#444",
        1.5,
    );
    // hourglass wedge through the origin with slope b/a
    let t = params.ratio();
    c.line(Point::new(-t, 1.0), Point::new(t, -1.0), "#bbb", 1.0);
    c.line(Point::new(t, 1.0), Point::new(-t, -1.0), "#bbb", 1.0);
    for p in params.points(world) {
        c.dot(p, "#d62728");
    }
    c.line(
        Point::new(0.0, -params.r / 2.0),
        Point::new(0.0, params.r / 2.0),
        "#1f77b4",
        3.0,
    );
    c.finish()
}

/// Reachable-set projection of a trap certification: the visited segment
/// poses drawn as faint lines over the strip and obstacles.
pub fn trap_reachable_svg(params: &TrapParams, cert: &crate::segments::TrapCertificate) -> String {
    let world = (params.r / 2.0 + 0.3).max(1.2);
    let mut c = Canvas::new(world);
    c.line(Point::new(-world, 1.0), Point::new(world, 1.0), "#444", 1.5);
    c.line(
        Point::new(-world, -1.0),
        Point::new(world, -1.0),
        "#444",
        1.5,
    );
    for &(x, y, theta) in &cert.sample_poses {
        let half = unit(theta) * (params.r / 2.0);
        let center = Point::new(x, y);
        c.line(center - half, center + half, "#9ecae1", 0.4);
    }
    for p in params.points(world) {
        c.dot(p, "#d62728");
    }
    c.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::balance::contact_graph;
    use crate::geometry::{build_kn, diameter_configuration};
    use crate::segments::hourglass_params;

    #[test]
    fn svg_structure() {
        let disk_svg = disk_config_svg(&diameter_configuration(3));
        assert!(disk_svg.starts_with("<svg"));
        assert!(disk_svg.ends_with("</svg>\n"));
        // outline + 3 disks
        assert_eq!(disk_svg.matches("<circle").count(), 4);
        assert_eq!(disk_svg.matches("<text").count(), 3);

        let seg_svg = seg_config_svg(&build_kn(&[0.1, 0.4]));
        assert_eq!(seg_svg.matches("<line").count(), 2);

        let g = contact_graph(&diameter_configuration(3), 1e-9).unwrap();
        let graph_svg = stress_graph_svg(&g);
        // 2 internal edges + 2 boundary edges
        assert_eq!(graph_svg.matches("<line").count(), 4);

        let trap = trap_svg(&hourglass_params(1.5, 0.2).unwrap());
        assert!(trap.contains("<line"));
    }

    #[test]
    fn reachable_projection_svg() {
        use crate::segments::{trap_certify, PoseGrid};
        let params = hourglass_params(1.5, 0.3).unwrap();
        let cert = trap_certify(&params, &PoseGrid::new(0.01, 1.0 / 360.0)).unwrap();
        let svg = trap_reachable_svg(&params, &cert);
        assert!(!cert.sample_poses.is_empty());
        assert!(svg.matches("<line").count() >= cert.sample_poses.len());
    }
}

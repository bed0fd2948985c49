//! Plain SVG drawing of a region inside its window, with optional named-region overlays.

use std::fmt::Write;

use num_traits::ToPrimitive;

use crate::rational::{fmt_rational, Rational};
use crate::region::{FlowRegion, NamedRegion};

const W: f64 = 640.0;
const H: f64 = 400.0;
const PAD: f64 = 48.0;
const OVERLAY_COLORS: &[&str] = &["#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2"];

fn f(v: &Rational) -> f64 {
    v.to_f64().unwrap_or(0.0)
}

struct Frame {
    r: (f64, f64),
    a: (f64, f64),
}

impl Frame {
    fn x(&self, r: f64) -> f64 {
        PAD + (r - self.r.0) / (self.r.1 - self.r.0) * (W - 2.0 * PAD)
    }

    fn y(&self, a: f64) -> f64 {
        H - PAD - (a - self.a.0) / (self.a.1 - self.a.0) * (H - 2.0 * PAD)
    }

    fn point(&self, r: f64, a: f64) -> String {
        let a = a.clamp(self.a.0, self.a.1);
        let r = r.clamp(self.r.0, self.r.1);
        format!("{:.2},{:.2}", self.x(r), self.y(a))
    }
}

fn label(tag: &NamedRegion) -> String {
    match tag {
        NamedRegion::L(k) => format!("L{k}"),
        NamedRegion::M(k) => format!("M{k}"),
        NamedRegion::A(k) => format!("A{k}"),
        NamedRegion::Urd(p) => format!("urd({}, {})", fmt_rational(&p.r), fmt_rational(&p.alpha)),
    }
}

/// Renders the window, the shaded region with its frontier, and each overlay outline.
pub fn render(region: &FlowRegion, overlays: &[NamedRegion]) -> String {
    let win = &region.window;
    let fr = Frame { r: (f(&win.r.0), f(&win.r.1)), a: (f(&win.alpha.0), f(&win.alpha.1)) };
    let mut rs: Vec<Rational> = vec![win.r.0.clone()];
    rs.extend(region.corners().into_iter().map(|(r, _)| r).filter(|r| *r > win.r.0 && *r < win.r.1));
    rs.push(win.r.1.clone());
    let frontier: Vec<String> = rs.iter().map(|r| fr.point(f(r), f(&region.frontier_at(r)))).collect();

    let mut s = String::new();
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">"#);
    let _ = writeln!(s, r##"<rect x="0" y="0" width="{W}" height="{H}" fill="#ffffff"/>"##);
    let mut shade = frontier.clone();
    shade.push(fr.point(fr.r.1, fr.a.1));
    shade.push(fr.point(fr.r.0, fr.a.1));
    let _ = writeln!(s, r##"<polygon points="{}" fill="#1f77b4" fill-opacity="0.25" stroke="none"/>"##, shade.join(" "));
    let _ = writeln!(s, r##"<polyline points="{}" fill="none" stroke="#1f77b4" stroke-width="2"/>"##, frontier.join(" "));
    let _ = writeln!(
        s,
        r##"<rect x="{PAD}" y="{PAD}" width="{}" height="{}" fill="none" stroke="#000000"/>"##,
        W - 2.0 * PAD,
        H - 2.0 * PAD
    );
    let mut r = fr.r.0.ceil();
    while r <= fr.r.1 {
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" font-size="12" text-anchor="middle">{r}</text>"#,
            fr.x(r),
            H - PAD + 16.0
        );
        r += 1.0;
    }
    for a in [fr.a.0, (fr.a.0 + fr.a.1) / 2.0, fr.a.1] {
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" font-size="12" text-anchor="end">{a}</text>"#,
            PAD - 6.0,
            fr.y(a) + 4.0
        );
    }
    let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}" font-size="13">r</text>"#, W - PAD + 8.0, H - PAD + 4.0);
    let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}" font-size="13">alpha</text>"#, PAD - 16.0, PAD - 10.0);
    for (i, o) in overlays.iter().enumerate() {
        let color = OVERLAY_COLORS[i % OVERLAY_COLORS.len()];
        let pts: Vec<String> = o.outline().iter().map(|(r, a)| fr.point(f(r), f(a))).collect();
        let shape = if matches!(o, NamedRegion::A(_)) { "polygon" } else { "polyline" };
        let _ = writeln!(
            s,
            r#"<{shape} points="{}" fill="none" stroke="{color}" stroke-width="1.5" stroke-dasharray="5,3"/>"#,
            pts.join(" ")
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" font-size="12" fill="{color}">{}</text>"#,
            W - PAD - 90.0,
            PAD + 16.0 * (i as f64 + 1.0),
            label(o)
        );
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flow::FlowPoint;
    use crate::named;
    use crate::region::bed_of_graph;

    #[test]
    fn draws_frontier_and_overlays() {
        let region = bed_of_graph(&named::theta()).unwrap();
        let svg = render(&region, &[NamedRegion::M(4), NamedRegion::Urd(FlowPoint::frac(7, 2, 1, 2))]);
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
        assert_eq!(svg.matches("<polyline").count(), 3);
        assert!(svg.contains(">M4<") && svg.contains("urd(7/2, 1/2)"));
        // (2,1) is the top-left corner of the plot area
        assert!(svg.contains(&format!("{:.2},{:.2}", PAD, PAD)));
        assert_eq!(svg, render(&region, &[NamedRegion::M(4), NamedRegion::Urd(FlowPoint::frac(7, 2, 1, 2))]));
    }
}

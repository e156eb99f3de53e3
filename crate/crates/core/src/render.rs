//! Strand diagrams of signed partial permutations.
//!
//! These draw the image of a partial braid, not a geometric braid: strands
//! run straight from top point `j` to bottom point `t` and may cross
//! schematically. Deleted strands are dashed.

use std::fmt::Write;

use crate::perm::{Sign, SignedPartialPerm};

fn sign_label(s: Sign) -> &'static str {
    match s {
        Sign::Plus => "+",
        Sign::Minus => "-",
    }
}

fn unhit_targets(p: &SignedPartialPerm) -> Vec<usize> {
    let image = p.image();
    (1..=p.n())
        .filter(|t| image.binary_search(t).is_err())
        .collect()
}

/// One line per strand; a deleted top strand ends in `x`, an unreached
/// bottom point starts from `x`.
pub fn render_text(p: &SignedPartialPerm) -> String {
    let width = p.n().to_string().len();
    let mut out = String::new();
    for (i, a) in p.arrows().iter().enumerate() {
        match a {
            Some(a) => writeln!(
                out,
                "{:>width$} --({})--> {}",
                i + 1,
                sign_label(a.sign),
                a.target
            ),
            None => writeln!(out, "{:>width$} - - - x", i + 1),
        }
        .unwrap();
    }
    for t in unhit_targets(p) {
        writeln!(out, "{:>width$} - - - > {t}", "x").unwrap();
    }
    out
}

/// Graphviz source with one node per boundary point. Edges carry the sign;
/// boundary points on deleted strands are dashed.
pub fn render_dot(p: &SignedPartialPerm) -> String {
    let n = p.n();
    let domain = p.domain();
    let unhit = unhit_targets(p);
    let mut out = String::from("digraph partial_braid {\n");
    out.push_str("  node [shape=circle];\n");
    let row = |out: &mut String, prefix: &str, dashed: &dyn Fn(usize) -> bool| {
        out.push_str("  { rank=same;");
        for j in 1..=n {
            let style = if dashed(j) { ", style=dashed" } else { "" };
            write!(out, " {prefix}{j} [label=\"{j}\"{style}];").unwrap();
        }
        out.push_str(" }\n");
    };
    row(&mut out, "top", &|j| domain.binary_search(&j).is_err());
    row(&mut out, "bot", &|t| unhit.binary_search(&t).is_ok());
    for (i, a) in p.arrows().iter().enumerate() {
        if let Some(a) = a {
            writeln!(
                out,
                "  top{} -> bot{} [label=\"{}\"];",
                i + 1,
                a.target,
                sign_label(a.sign)
            )
            .unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// Standalone SVG drawing: kept strands solid (negated ones red and marked),
/// deleted strands as dashed stubs.
pub fn render_svg(p: &SignedPartialPerm) -> String {
    const GAP: usize = 60;
    const TOP: usize = 30;
    const BOTTOM: usize = 170;
    let n = p.n();
    let width = GAP * (n + 1);
    let x = |j: usize| GAP * j;
    let mut out = String::new();
    write!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="200" viewBox="0 0 {width} 200" font-family="sans-serif" font-size="13">"#
    )
    .unwrap();
    for (i, a) in p.arrows().iter().enumerate() {
        let j = i + 1;
        match a {
            Some(a) => {
                let colour = match a.sign {
                    Sign::Plus => "#222",
                    Sign::Minus => "#c0392b",
                };
                let (x0, x1) = (x(j), x(a.target));
                let mid = (TOP + BOTTOM) / 2;
                write!(
                    out,
                    r#"<path d="M{x0} {TOP} C{x0} {mid} {x1} {mid} {x1} {BOTTOM}" stroke="{colour}" stroke-width="3" fill="none"/>"#
                )
                .unwrap();
                if a.sign == Sign::Minus {
                    let lx = (x0 + x1) / 2 + 6;
                    write!(
                        out,
                        r##"<text x="{lx}" y="{mid}" fill="#c0392b">&#8722;</text>"##
                    )
                    .unwrap();
                }
            }
            None => write!(
                out,
                r##"<line x1="{xj}" y1="{TOP}" x2="{xj}" y2="{end}" stroke="#888" stroke-width="3" stroke-dasharray="6 5"/>"##,
                xj = x(j),
                end = TOP + 45
            )
            .unwrap(),
        }
    }
    for t in unhit_targets(p) {
        write!(
            out,
            r##"<line x1="{xt}" y1="{start}" x2="{xt}" y2="{BOTTOM}" stroke="#888" stroke-width="3" stroke-dasharray="6 5"/>"##,
            xt = x(t),
            start = BOTTOM - 45
        )
        .unwrap();
    }
    for j in 1..=n {
        for y in [TOP, BOTTOM] {
            write!(
                out,
                r##"<circle cx="{cx}" cy="{y}" r="6" fill="#fff" stroke="#222" stroke-width="2"/>"##,
                cx = x(j)
            )
            .unwrap();
        }
        write!(
            out,
            r#"<text x="{tx}" y="16" text-anchor="middle">{j}</text>"#,
            tx = x(j)
        )
        .unwrap();
    }
    out.push_str("</svg>");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SignedPartialPerm {
        s.parse().unwrap()
    }

    #[test]
    fn text_diagram() {
        let p = sp("[1->+2, 2->-1, 3->.]");
        assert_eq!(
            render_text(&p),
            "1 --(+)--> 2\n2 --(-)--> 1\n3 - - - x\nx - - - > 3\n"
        );
    }

    #[test]
    fn dot_diagram() {
        let p = sp("[1->., 2->-1]");
        let dot = render_dot(&p);
        assert!(dot.contains("top1 [label=\"1\", style=dashed]"));
        assert!(dot.contains("bot2 [label=\"2\", style=dashed]"));
        assert!(dot.contains("top2 -> bot1 [label=\"-\"];"));
        assert_eq!(dot.matches("->").count(), 1);
    }

    #[test]
    fn svg_has_one_path_per_kept_strand() {
        let p = sp("[1->+2, 2->-1, 3->.]");
        let svg = render_svg(&p);
        assert!(svg.starts_with("<svg"));
        assert!(svg.ends_with("</svg>"));
        assert_eq!(svg.matches("<path").count(), 2);
        assert_eq!(svg.matches("stroke-dasharray").count(), 2);
    }
}

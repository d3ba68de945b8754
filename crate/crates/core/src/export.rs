//! DOT and SVG renderings of an embedded graph with optional colouring, tree
//! edges and a dual cycle.

use std::fmt::Write;

use nalgebra::{DMatrix, DVector};

use crate::coloring::{Colour, VertexColoring};
use crate::duality::{Certificate, CertificateError};
use crate::embedding::PlanarEmbedding;
use crate::graph::edge_key;
use crate::triangulation::Triangulation;

/// Extra structure drawn on top of the graph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Overlay {
    /// Edges drawn bold (edges inside the trees of a tree pair).
    pub tree_edges: Vec<(usize, usize)>,
    /// Faces of a dual cycle, in order, as vertex triples.
    pub dual_cycle: Vec<[usize; 3]>,
}

impl Overlay {
    /// Tree edges from `TREEPAIR` certificates and the face sequence from
    /// `HAMCYCLE` ones; each certificate is validated first.
    pub fn from_certificates(tri: &Triangulation, certs: &[Certificate]) -> Result<Self, CertificateError> {
        let mut overlay = Overlay::default();
        for c in certs {
            c.verify(tri)?;
            match c {
                Certificate::TreePair { t1, t2 } => {
                    for side in [t1, t2] {
                        for (i, &u) in side.iter().enumerate() {
                            for &v in &side[i + 1..] {
                                if tri.graph().has_edge(u, v) {
                                    overlay.tree_edges.push(edge_key(u, v));
                                }
                            }
                        }
                    }
                    overlay.tree_edges.sort_unstable();
                }
                Certificate::HamCycle { faces } => overlay.dual_cycle = faces.clone(),
            }
        }
        Ok(overlay)
    }
}

fn fill(c: Colour) -> &'static str {
    match c {
        Colour::Blue => "#6fa8dc",
        Colour::Red => "#e06666",
        Colour::Green => "#93c47d",
    }
}

fn face_node(t: &[usize; 3]) -> String {
    let mut s = *t;
    s.sort_unstable();
    format!("f{}_{}_{}", s[0], s[1], s[2])
}

/// Undirected DOT graph: one node per vertex (filled by colour), one edge
/// per graph edge (tree edges bold), plus dashed edges between face nodes
/// for the dual cycle.
pub fn to_dot(emb: &PlanarEmbedding, colouring: Option<&VertexColoring>, overlay: &Overlay) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle, style=filled, fillcolor=white];\n");
    for v in 0..emb.vertex_count() {
        match colouring {
            Some(c) => writeln!(out, "  {v} [fillcolor=\"{}\"];", fill(c.colour(v))).unwrap(),
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for &(u, v) in emb.edges() {
        if overlay.tree_edges.binary_search(&(u, v)).is_ok() {
            writeln!(out, "  {u} -- {v} [style=bold, penwidth=3];").unwrap();
        } else {
            writeln!(out, "  {u} -- {v};").unwrap();
        }
    }
    if !overlay.dual_cycle.is_empty() {
        writeln!(out, "  node [shape=point, fillcolor=black];").unwrap();
        for t in &overlay.dual_cycle {
            writeln!(out, "  {};", face_node(t)).unwrap();
        }
        let k = overlay.dual_cycle.len();
        for i in 0..k {
            writeln!(
                out,
                "  {} -- {} [style=dashed, color=gray40];",
                face_node(&overlay.dual_cycle[i]),
                face_node(&overlay.dual_cycle[(i + 1) % k])
            )
            .unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// Tutte's barycentric layout: the vertices of face 0 sit on a regular
/// polygon inscribed in the unit circle and every other vertex is the
/// average of its neighbours. Vertices the system cannot place (a
/// component not touching face 0) are put at the origin.
pub fn tutte_layout(emb: &PlanarEmbedding) -> Vec<(f64, f64)> {
    let n = emb.vertex_count();
    let mut pos = vec![(0.0, 0.0); n];
    if n == 0 {
        return pos;
    }
    let mut outer: Vec<usize> = Vec::new();
    if let Some(face) = emb.faces().first() {
        for &v in &face.vertices {
            if !outer.contains(&v) {
                outer.push(v);
            }
        }
    }
    if outer.is_empty() {
        outer.push(0);
    }
    let mut fixed = vec![false; n];
    let k = outer.len() as f64;
    for (i, &v) in outer.iter().enumerate() {
        let a = std::f64::consts::TAU * i as f64 / k + std::f64::consts::FRAC_PI_2;
        pos[v] = (a.cos(), a.sin());
        fixed[v] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&v| !fixed[v]).collect();
    if free.is_empty() {
        return pos;
    }
    let mut index = vec![usize::MAX; n];
    for (i, &v) in free.iter().enumerate() {
        index[v] = i;
    }
    let m = free.len();
    let mut a = DMatrix::<f64>::zeros(m, m);
    let mut bx = DVector::<f64>::zeros(m);
    let mut by = DVector::<f64>::zeros(m);
    for (i, &v) in free.iter().enumerate() {
        a[(i, i)] = emb.degree(v).max(1) as f64;
        for &u in emb.rotation(v) {
            if fixed[u] {
                bx[i] += pos[u].0;
                by[i] += pos[u].1;
            } else {
                a[(i, index[u])] -= 1.0;
            }
        }
    }
    let lu = a.lu();
    if let (Some(x), Some(y)) = (lu.solve(&bx), lu.solve(&by)) {
        for (i, &v) in free.iter().enumerate() {
            if x[i].is_finite() && y[i].is_finite() {
                pos[v] = (x[i], y[i]);
            }
        }
    }
    pos
}

/// Straight-line SVG drawing using [`tutte_layout`].
pub fn to_svg(emb: &PlanarEmbedding, colouring: Option<&VertexColoring>, overlay: &Overlay) -> String {
    const SIZE: f64 = 480.0;
    let pos = tutte_layout(emb);
    let at = |p: (f64, f64)| (SIZE / 2.0 + p.0 * 220.0, SIZE / 2.0 - p.1 * 220.0);
    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">"
    )
    .unwrap();
    for &(u, v) in emb.edges() {
        let (a, b) = (at(pos[u]), at(pos[v]));
        let width = if overlay.tree_edges.binary_search(&(u, v)).is_ok() { 4 } else { 1 };
        writeln!(
            out,
            "  <line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"black\" stroke-width=\"{width}\"/>",
            a.0, a.1, b.0, b.1
        )
        .unwrap();
    }
    if !overlay.dual_cycle.is_empty() {
        let pts: Vec<String> = overlay
            .dual_cycle
            .iter()
            .chain(overlay.dual_cycle.first())
            .map(|t| {
                let cx = t.iter().map(|&v| pos[v].0).sum::<f64>() / 3.0;
                let cy = t.iter().map(|&v| pos[v].1).sum::<f64>() / 3.0;
                let p = at((cx, cy));
                format!("{:.2},{:.2}", p.0, p.1)
            })
            .collect();
        writeln!(
            out,
            "  <polyline points=\"{}\" fill=\"none\" stroke=\"gray\" stroke-dasharray=\"5,3\"/>",
            pts.join(" ")
        )
        .unwrap();
    }
    for (v, &p) in pos.iter().enumerate() {
        let (x, y) = at(p);
        let colour = colouring.map_or("white", |c| fill(c.colour(v)));
        writeln!(
            out,
            "  <circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"9\" fill=\"{colour}\" stroke=\"black\"/>"
        )
        .unwrap();
        writeln!(
            out,
            "  <text x=\"{x:.2}\" y=\"{:.2}\" font-size=\"9\" text-anchor=\"middle\">{v}</text>",
            y + 3.0
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::proper_3_coloring;
    use crate::corpus;
    use crate::duality::{tree_pair_to_ham_cycle, TreePair};
    use crate::hardness::build_special_h;

    #[test]
    fn octahedron_dot_with_tree_pair() {
        let oct = corpus::octahedron();
        let pair = TreePair::new(&oct, &[0, 1, 5], &[2, 3, 4]).unwrap();
        let overlay = Overlay::from_certificates(&oct, &[Certificate::from_pair(&pair)]).unwrap();
        let dot = to_dot(oct.embedding(), None, &overlay);
        let nodes = dot.lines().filter(|l| l.trim_end().ends_with(';') && !l.contains("--") && !l.contains("node [")).count();
        assert_eq!(nodes, 6);
        assert_eq!(dot.matches(" -- ").count(), 12);
        assert_eq!(dot.matches("style=bold").count(), 4);

        let cyc = tree_pair_to_ham_cycle(&oct, &pair).unwrap();
        let both = [Certificate::from_pair(&pair), Certificate::from_cycle(&oct, &cyc)];
        let overlay = Overlay::from_certificates(&oct, &both).unwrap();
        let dot = to_dot(oct.embedding(), None, &overlay);
        assert_eq!(dot.matches("style=dashed").count(), 8);
        assert_eq!(to_dot(oct.embedding(), None, &Overlay::default()).matches("bold").count(), 0);
    }

    #[test]
    fn h_svg_places_every_vertex() {
        let h = build_special_h(Colour::Blue);
        let svg = to_svg(h.tri.embedding(), Some(&h.colouring), &Overlay::default());
        assert_eq!(svg.matches("<circle").count(), 14);
        let pos = tutte_layout(h.tri.embedding());
        for &v in &h.tri.face(0) {
            let r = (pos[v].0.powi(2) + pos[v].1.powi(2)).sqrt();
            assert!((r - 1.0).abs() < 1e-9);
        }
        for (v, p) in pos.iter().enumerate() {
            if !h.tri.face(0).contains(&v) {
                assert!(p.0.powi(2) + p.1.powi(2) < 1.0);
                let nbrs = h.tri.rotation(v);
                let mx = nbrs.iter().map(|&u| pos[u].0).sum::<f64>() / nbrs.len() as f64;
                assert!((mx - p.0).abs() < 1e-9);
            }
        }
        assert!(proper_3_coloring(&h.tri).is_ok());
    }
}

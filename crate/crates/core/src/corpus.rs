//! Small named graphs used as fixtures by the tests and the CLI.

use crate::embedding::PlanarEmbedding;
use crate::graph::Graph;
use crate::triangulation::Triangulation;

/// K4 embedded in the plane.
pub fn tetrahedron() -> Triangulation {
    Triangulation::from_faces(4, &[[0, 1, 2], [0, 3, 1], [0, 2, 3], [1, 3, 2]])
        .expect("tetrahedron")
}

/// Bipyramid over a `k`-cycle: apex 0, ring `1..=k`, apex `k + 1`.
pub fn bipyramid(k: usize) -> Triangulation {
    assert!(k >= 3);
    let south = k + 1;
    let ring = |i: usize| 1 + i % k;
    let mut faces = Vec::with_capacity(2 * k);
    for i in 0..k {
        faces.push([0, ring(i), ring(i + 1)]);
    }
    for i in 0..k {
        faces.push([south, ring(i + 1), ring(i)]);
    }
    Triangulation::from_faces(k + 2, &faces).expect("bipyramid")
}

/// Octahedron with north pole N = 0, equator a, b, c, d = 1, 2, 3, 4 in
/// cyclic order, and south pole S = 5.
pub fn octahedron() -> Triangulation {
    bipyramid(4)
}

/// Regular icosahedron: apex 0, upper ring 1..=5, lower ring 6..=10, apex 11.
pub fn icosahedron() -> Triangulation {
    let u = |i: usize| 1 + i % 5;
    let l = |i: usize| 6 + i % 5;
    let mut faces = Vec::with_capacity(20);
    for i in 0..5 {
        faces.push([0, u(i), u(i + 1)]);
        faces.push([u(i), l(i), u(i + 1)]);
        faces.push([l(i), l(i + 1), u(i + 1)]);
        faces.push([11, l(i + 1), l(i)]);
    }
    Triangulation::from_faces(12, &faces).expect("icosahedron")
}

/// Prism over a `k`-cycle: outer ring `0..k`, inner ring `k..2k`, spokes
/// `i -- i + k`.
pub fn prism(k: usize) -> PlanarEmbedding {
    assert!(k >= 3);
    let mut rots = Vec::with_capacity(2 * k);
    for i in 0..k {
        rots.push(vec![i + k, (i + 1) % k, (i + k - 1) % k]);
    }
    for i in 0..k {
        rots.push(vec![i, k + (i + k - 1) % k, k + (i + 1) % k]);
    }
    PlanarEmbedding::from_rotations(rots).expect("prism")
}

/// The cube Q3 as the prism over a 4-cycle.
pub fn cube() -> PlanarEmbedding {
    prism(4)
}

/// Q3 listed explicitly: vertices are 3-bit words, edges join words at
/// Hamming distance one.
pub fn hypercube_q3() -> Graph {
    let mut edges = Vec::new();
    for v in 0..8usize {
        for bit in 0..3 {
            let u = v ^ (1 << bit);
            if v < u {
                edges.push((v, u));
            }
        }
    }
    Graph::from_edges(8, &edges)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges)
}

/// A planar cubic graph with no Hamiltonian cycle: two hubs joined through
/// three blobs, each blob a K4 with one edge subdivided twice. A Hamiltonian
/// cycle uses only two edges at each hub, so one blob is never entered.
pub fn three_blob_theta() -> Graph {
    let (hub_u, hub_v) = (0, 1);
    let mut edges = Vec::new();
    for blob in 0..3 {
        let base = 2 + 6 * blob;
        let (a, b, c, d, p, q) = (base, base + 1, base + 2, base + 3, base + 4, base + 5);
        edges.extend([
            (a, p),
            (p, q),
            (q, b),
            (a, c),
            (a, d),
            (b, c),
            (b, d),
            (c, d),
            (hub_u, p),
            (hub_v, q),
        ]);
    }
    Graph::from_edges(20, &edges)
}

/// The named triangulations used across the test corpus.
pub fn triangulations() -> Vec<(&'static str, Triangulation)> {
    vec![
        ("tetrahedron", tetrahedron()),
        ("triangular-bipyramid", bipyramid(3)),
        ("octahedron", octahedron()),
        ("pentagonal-bipyramid", bipyramid(5)),
        ("hexagonal-bipyramid", bipyramid(6)),
        ("icosahedron", icosahedron()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_counts() {
        for (name, t) in triangulations() {
            let (n, m, f) = (t.vertex_count(), t.edge_count(), t.face_count());
            assert_eq!(n + f, m + 2, "{name}");
            assert_eq!(3 * f, 2 * m, "{name}");
        }
        assert_eq!(icosahedron().vertex_count(), 12);
        assert!((0..12).all(|v| icosahedron().degree(v) == 5));
        let c = cube();
        assert_eq!((c.vertex_count(), c.edge_count(), c.face_count()), (8, 12, 6));
        assert!(three_blob_theta().is_cubic());
        assert!(petersen().is_cubic());
    }
}

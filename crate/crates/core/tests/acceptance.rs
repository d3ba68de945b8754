//! Acceptance suite: one line per criterion, non-zero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use barnette::coloring::{proper_3_coloring, Colour, VertexColoring};
use barnette::corpus;
use barnette::duality::{
    complement_tree, ham_cycle_to_tree_pair, is_permeating_subtree, permeating_subtrees,
    tree_pair_to_ham_cycle, Certificate, PermeatingSubtree, TreePair,
};
use barnette::graph::Graph;
use barnette::hardness::{
    build_family, build_special_h, generate_family, structural_lower_bound, verify_lemma_4_1,
    verify_lemma_4_2, verify_theorem_1_3,
};
use barnette::kelmans::{
    are_cofacial, contract_cut_sides, covering_path_check, cyclic_edge_connectivity,
    dual_cut_of_triangle, make_four_pole, splice_hamiltonian, CoveringPath,
};
use barnette::oracle;
use barnette::search::SearchBudget;
use barnette::sufficient::theorem1_pipeline;
use barnette::triangulation::Triangulation;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn budget() -> SearchBudget {
    SearchBudget::default()
}

fn special_h_structure() -> Check {
    for c in Colour::ALL {
        let h = build_special_h(c);
        let t = &h.tri;
        let counts = (t.vertex_count(), t.edge_count(), t.face_count());
        ensure(counts == (14, 36, 24), || format!("counts {counts:?}"))?;
        let mut degrees: Vec<usize> = (0..14).map(|v| t.degree(v)).collect();
        degrees.sort_unstable();
        ensure(degrees == [vec![4; 6], vec![6; 8]].concat(), || format!("degrees {degrees:?}"))?;
        ensure(degrees.iter().sum::<usize>() == 72, || "handshake".into())?;
        ensure(t.is_eulerian(), || "not Eulerian".into())?;
        ensure(h.colouring.is_proper(t.graph()), || "colouring not proper".into())?;
        ensure(h.colouring.class(c) == h.degree4_vertices(), || {
            "degree-4 vertices are not a colour class".into()
        })?;
        let others: Vec<usize> = Colour::ALL
            .iter()
            .filter(|&&x| x != c)
            .map(|&x| h.colouring.class(x).len())
            .collect();
        ensure(others == [4, 4], || format!("other classes {others:?}"))?;
        let propagated = proper_3_coloring(t).map_err(|e| e.to_string())?;
        ensure(propagated.same_up_to_permutation(&h.colouring), || {
            "propagated colouring differs".into()
        })?;
        let (g, f) = (t.face(h.g), t.face(h.f));
        ensure(g.iter().all(|v| !f.contains(v)), || "f meets g".into())?;
    }
    Ok("14/36/24, degrees 4x6 6x8, degree-4 class is a colour class".into())
}

fn lemma_4_1() -> Check {
    let h = build_special_h(Colour::Blue);
    let r = verify_lemma_4_1(&h, budget());
    ensure(r.holds(), || format!("{r:?}"))?;
    let naive = oracle::naive_permeating_subtrees(&h.tri);
    let (fast, _) = permeating_subtrees(&h.tri, budget());
    ensure(naive.len() == r.subtrees && fast == naive, || {
        "enumerators disagree on H".into()
    })?;
    Ok(format!(
        "{} subtrees, 0 without a degree-4 vertex; {} induced paths with face count 2 mod 4",
        r.subtrees, r.paths_checked
    ))
}

fn lemma_4_2() -> Check {
    let fam = build_family(2).map_err(|e| e.to_string())?;
    let r = verify_lemma_4_2(&fam[0], &fam[1], budget());
    ensure(r.complete, || format!("inconclusive after {} nodes", r.nodes))?;
    ensure(r.holds(), || format!("{r:?}"))?;
    let (slow, stats) = oracle::permeating_subtrees(&fam[1].tri, budget());
    ensure(stats.complete && slow.len() as u64 == r.subtrees, || {
        format!("oracle found {} subtrees, search {}", slow.len(), r.subtrees)
    })?;
    Ok(format!(
        "{} subtrees of G_2, all restrictions permeating ({} distinct on H_2, {} on G_1)",
        r.subtrees, r.distinct_copy_restrictions, r.distinct_prev_restrictions
    ))
}

fn family_counts() -> Check {
    let fam = build_family(9).map_err(|e| e.to_string())?;
    for m in &fam {
        m.check_invariants().map_err(|e| e.to_string())?;
        ensure(m.tri.vertex_count() == 11 * m.index + 3, || format!("G_{}", m.index))?;
        let mut expected = m.pasting_triangles.clone();
        expected.sort();
        ensure(m.tri.separating_triangles() == expected, || {
            format!("separating triangles of G_{}", m.index)
        })?;
    }
    for k in 1..=3 {
        let g = generate_family(k).map_err(|e| e.to_string())?;
        ensure(g.tri.vertex_count() == 33 * k + 3, || format!("k = {k}"))?;
        ensure(g.tri.is_eulerian() && g.colouring.is_proper(g.tri.graph()), || {
            format!("k = {k} invariants")
        })?;
    }
    let g3 = &fam[2];
    let s = structural_lower_bound(g3, 1, budget());
    ensure(s.holds(), || format!("{s:?}"))?;
    let direct = verify_theorem_1_3(g3, 1, budget());
    ensure(direct.holds(), || format!("{direct:?}"))?;
    Ok(format!(
        "G_1..G_9 and G_3k for k <= 3 valid; structural bound on G_3 agrees with {} enumerated subtrees",
        direct.subtrees
    ))
}

fn theorem_1_1_octahedron() -> Check {
    let oct = corpus::octahedron();
    let col = VertexColoring::from_blue_set(6, &[0, 5]);
    let out = theorem1_pipeline(&oct, &col).map_err(|e| e.to_string())?;
    ensure(out.cycle.len() == 8, || "cycle length".into())?;
    let text = format!(
        "{}\n{}\n",
        Certificate::from_pair(&out.pair),
        Certificate::from_cycle(&oct, &out.cycle)
    );
    for c in Certificate::parse_all(&text).map_err(|e| e.to_string())? {
        c.verify(&oct).map_err(|e| e.to_string())?;
    }
    ensure(is_permeating_subtree(&oct, out.subtree.vertices()).is_permeating(), || {
        "subtree".into()
    })?;
    let dual = oct.dual_embedding().to_graph();
    ensure(dual.is_cubic() && dual.bipartition().is_some() && dual.vertex_count() == 8, || {
        "dual is not the cube".into()
    })?;
    ensure(oracle::is_hamiltonian_cycle(&dual, out.cycle.faces()), || {
        "oracle rejects the dual cycle".into()
    })?;
    Ok(format!(
        "subtree {:?}, S = {:?}, 8-face dual cycle",
        out.subtree.vertices(),
        out.s
    ))
}

fn round_trips() -> Check {
    let fam = build_family(2).map_err(|e| e.to_string())?;
    let graphs: Vec<(&str, Triangulation)> = vec![
        ("tetrahedron", corpus::tetrahedron()),
        ("octahedron", corpus::octahedron()),
        ("H", build_special_h(Colour::Blue).tri),
        ("G_2", fam[1].tri.clone()),
    ];
    let mut total = 0;
    for (name, tri) in &graphs {
        let n = tri.vertex_count();
        let dual = tri.dual_embedding().to_graph();
        let (all, stats) = permeating_subtrees(tri, budget());
        ensure(stats.complete && !all.is_empty(), || format!("{name}: enumeration"))?;
        if n <= 14 {
            ensure(all == oracle::naive_permeating_subtrees(tri), || {
                format!("{name}: not exhaustive")
            })?;
        }
        for s in &all {
            let t = PermeatingSubtree::new(tri, s).map_err(|e| e.to_string())?;
            let comp = complement_tree(tri, &t);
            let pair = TreePair::new(tri, t.vertices(), comp.vertices()).map_err(|e| e.to_string())?;
            let mask = t.mask(n);
            let inv: Vec<bool> = mask.iter().map(|b| !b).collect();
            let edges = tri.graph().induced_edge_count(&mask) + tri.graph().induced_edge_count(&inv);
            ensure(edges == n - 2, || format!("{name}: {edges} induced edges"))?;
            let cycle = tree_pair_to_ham_cycle(tri, &pair).map_err(|e| e.to_string())?;
            ensure(oracle::is_hamiltonian_cycle(&dual, cycle.faces()), || {
                format!("{name}: dual cycle rejected")
            })?;
            let back = ham_cycle_to_tree_pair(tri, &cycle).map_err(|e| e.to_string())?;
            ensure(back.same_partition(&pair), || format!("{name}: round trip"))?;
            total += 1;
        }
    }
    Ok(format!("{total} tree pairs round-tripped across 4 triangulations"))
}

fn kelmans_suite() -> Check {
    let cube = corpus::cube();
    let q3 = corpus::hypercube_q3();
    let cc = cyclic_edge_connectivity(&cube.to_graph(), budget())
        .into_found()
        .ok_or("cube inconclusive")?;
    ensure(cc.value == 4 && cc.cut.as_ref().is_some_and(|c| c.verify(&cube.to_graph())), || {
        format!("cube {}", cc.value)
    })?;
    ensure(oracle::cyclic_connectivity_by_bipartition(&q3) == 4, || "Q3 oracle".into())?;
    let k4 = corpus::tetrahedron().graph().clone();
    let kk = cyclic_edge_connectivity(&k4, budget()).into_found().ok_or("K4")?;
    ensure(kk.value == 3 && oracle::cyclic_connectivity_by_bipartition(&k4) == 3, || {
        format!("K4 {}", kk.value)
    })?;

    let fam = build_family(2).map_err(|e| e.to_string())?;
    let mut barnette: Vec<(String, Graph)> = corpus::triangulations()
        .into_iter()
        .filter(|(_, t)| t.is_eulerian())
        .map(|(n, t)| (n.to_string(), t.dual_embedding().to_graph()))
        .collect();
    barnette.push(("H".into(), build_special_h(Colour::Blue).tri.dual_embedding().to_graph()));
    for m in &fam {
        barnette.push((format!("G_{}", m.index), m.tri.dual_embedding().to_graph()));
    }
    let mut scores = Vec::new();
    for (name, g) in &barnette {
        let v = cyclic_edge_connectivity(g, budget())
            .into_found()
            .ok_or(format!("{name} inconclusive"))?
            .value;
        ensure(v == 3 || v == 4, || format!("{name} scores {v}"))?;
        if g.vertex_count() <= 16 {
            ensure(oracle::cyclic_connectivity_by_bipartition(g) == v, || {
                format!("{name}: oracle disagrees")
            })?;
        }
        scores.push(format!("{name}={v}"));
    }

    let mut pairs_checked = 0;
    let edges = cube.edges().to_vec();
    for (i, &x) in edges.iter().enumerate() {
        for &y in &edges[i + 1..] {
            if !are_cofacial(&cube, x, y) {
                continue;
            }
            let fp = make_four_pole(&cube, x, y).map_err(|e| e.to_string())?;
            ensure(fp.check_invariants(), || format!("four-pole {x:?} {y:?}"))?;
            let t = fp.terminals;
            for a in 0..4 {
                for b in a + 1..4 {
                    if fp.side[t[a]] != fp.side[t[b]] {
                        continue;
                    }
                    let r = covering_path_check(&fp, t[a], t[b], budget()).map_err(|e| e.to_string())?;
                    ensure(r == CoveringPath::Holds, || format!("{x:?} {y:?}: {r:?}"))?;
                    pairs_checked += 1;
                }
            }
        }
    }

    let g2 = &fam[1];
    let dual = g2.tri.dual_embedding();
    let cut = dual_cut_of_triangle(&g2.tri, g2.pasting_triangles[0]);
    let (a, b) = contract_cut_sides(&dual, &cut).map_err(|e| e.to_string())?;
    for side in [&a, &b] {
        let g = side.graph();
        ensure(g.is_cubic() && g.bipartition().is_some(), || "contracted side".into())?;
    }
    let g = dual.to_graph();
    let spliced = splice_hamiltonian(&g, &a, &b, budget())
        .map_err(|e| e.to_string())?
        .into_found()
        .ok_or("no spliced cycle")?;
    ensure(oracle::is_hamiltonian_cycle(&g, &spliced), || "spliced cycle rejected".into())?;
    Ok(format!(
        "cube=4 K4=3 {}; {pairs_checked} covering-path pairs; G_2 dual split {}+{}",
        scores.join(" "),
        a.original.len(),
        b.original.len()
    ))
}

fn oracle_equivalence() -> Check {
    let mut graphs: Vec<(String, Graph)> = Vec::new();
    let mut checked_trees = 0;
    for (name, tri) in corpus::triangulations() {
        if tri.vertex_count() > 10 {
            continue;
        }
        let naive = oracle::naive_permeating_subtrees(&tri);
        let (slow, s1) = oracle::permeating_subtrees(&tri, budget());
        let (fast, s2) = permeating_subtrees(&tri, budget());
        ensure(s1.complete && s2.complete && slow == naive && fast == naive, || {
            format!("{name}: permeating subtrees differ")
        })?;
        checked_trees += 1;
        graphs.push((name.to_string(), tri.graph().clone()));
    }
    graphs.push(("cube".into(), corpus::cube().to_graph()));
    graphs.push(("Q3".into(), corpus::hypercube_q3()));
    graphs.push(("petersen".into(), corpus::petersen()));
    graphs.push(("prism3".into(), corpus::prism(3).to_graph()));
    graphs.push(("prism5".into(), corpus::prism(5).to_graph()));
    for (name, g) in &graphs {
        let (ham, st) = oracle::enumerate_hamiltonian_cycles(g, budget());
        ensure(st.complete && ham == oracle::naive_hamiltonian_cycles(g), || {
            format!("{name}: Hamiltonian cycles differ")
        })?;
        let (cycles, st) = oracle::enumerate_cycles(g, |_| true, budget());
        ensure(st.complete && cycles == oracle::naive_cycles(g), || {
            format!("{name}: cycles differ")
        })?;
    }
    Ok(format!(
        "{checked_trees} triangulations and {} graphs match naive filters",
        graphs.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, Duration, fn() -> Check); 8] = [
        ("special H structure", Duration::from_secs(1), special_h_structure),
        ("every subtree of H uses a degree-4 vertex", Duration::from_secs(60), lemma_4_1),
        ("G_2 subtrees restrict to permeating subtrees", Duration::from_secs(600), lemma_4_2),
        ("family counts and structural bound", Duration::from_secs(1), family_counts),
        ("sufficient-condition construction on the octahedron", Duration::from_secs(1), theorem_1_1_octahedron),
        ("tree pair and dual cycle round trips", Duration::from_secs(600), round_trips),
        ("kelmans primitives", Duration::from_secs(600), kelmans_suite),
        ("oracle equivalence", Duration::from_secs(600), oracle_equivalence),
    ];
    let mut failures = 0;
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let outcome = match result {
            Ok(detail) if elapsed <= *limit => format!("PASS {detail}"),
            Ok(detail) => format!("FAIL took {elapsed:.2?}, limit {limit:?}: {detail}"),
            Err(e) => format!("FAIL {e}"),
        };
        if outcome.starts_with("FAIL") {
            failures += 1;
        }
        println!("criterion {} [{name}] {:.3}s {outcome}", i + 1, elapsed.as_secs_f64());
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

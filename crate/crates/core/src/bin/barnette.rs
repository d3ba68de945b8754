use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};

use barnette::coloring::{proper_3_coloring, Colour, VertexColoring};
use barnette::duality::{
    find_permeating_subtree, permeating_subtrees, tree_pair_to_ham_cycle, Certificate, TreePair,
};
use barnette::embedding::PlanarEmbedding;
use barnette::export::{to_dot, to_svg, Overlay};
use barnette::hardness::{
    build_family, build_special_h, generate_family, structural_lower_bound, verify_lemma_4_1,
    verify_lemma_4_2, verify_theorem_1_3,
};
use barnette::kelmans::{covering_path_check, cyclic_edge_connectivity, make_four_pole, CoveringPath};
use barnette::oracle;
use barnette::ple::PleDocument;
use barnette::report::VerdictReport;
use barnette::search::{Search, SearchBudget};
use barnette::sufficient::{check_hypotheses, theorem1_pipeline, SufficientError};
use barnette::triangulation::Triangulation;

const EXIT_FALSE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser)]
#[command(name = "barnette", version, about = "Permeating subtrees and dual Hamiltonicity of plane triangulations")]
struct Cli {
    /// Search node limit.
    #[arg(long, global = true, default_value_t = 100_000_000)]
    budget_nodes: u64,
    /// Search time limit in seconds.
    #[arg(long, global = true, default_value_t = 600)]
    budget_seconds: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a PLE file, and any certificates against it.
    Validate {
        input: String,
        #[arg(long = "cert")]
        certs: Vec<String>,
    },
    /// List the faces of the embedding.
    Faces { input: String },
    /// Emit the dual of a triangulation as PLE.
    Dual { input: String },
    /// Emit the proper 3-colouring of an Eulerian triangulation.
    Color3 { input: String },
    /// Check the blue/red hypotheses for the colouring in the file.
    CheckThm1 { input: String },
    /// Build the tree pair and dual Hamiltonian cycle from a blue/red colouring.
    RunThm1 { input: String },
    /// Emit G_{3k} (or G_i with --index) as coloured PLE.
    GenFamily {
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        index: Option<usize>,
    },
    /// Check that every permeating subtree of H has a degree-4 vertex.
    VerifyH,
    /// Check the family at one level: 4.1, 4.2 or 1.3.
    VerifyFamily {
        #[arg(long, value_enum)]
        level: Level,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Cut two co-facial edges of a cubic plane graph into a four-pole.
    Fourpole {
        input: String,
        /// Two edges, e.g. `--cut 0,1 2,3`.
        #[arg(long, num_args = 2, required = true)]
        cut: Vec<String>,
    },
    /// Cyclic edge connectivity with a minimum cut.
    CyclicConn {
        input: String,
        /// Use the dual of the input triangulation.
        #[arg(long)]
        dual: bool,
    },
    /// Hamiltonian cycle with required and forbidden edges.
    Ham {
        input: String,
        #[arg(long = "require")]
        require: Vec<String>,
        #[arg(long = "forbid")]
        forbid: Vec<String>,
        /// Use the dual of the input triangulation.
        #[arg(long)]
        dual: bool,
    },
    /// Find a permeating subtree and emit it as certificates.
    Permeate {
        input: String,
        /// Count every permeating subtree instead.
        #[arg(long)]
        all: bool,
    },
    /// Render the embedding, optionally with certificates, as DOT or SVG.
    Export {
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        #[arg(long = "cert")]
        certs: Vec<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Level {
    #[value(name = "4.1")]
    L41,
    #[value(name = "4.2")]
    L42,
    #[value(name = "1.3")]
    L13,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Svg,
}

/// Input problem: reported on stderr with exit code 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Outcome = Result<u8, InputError>;

fn read_input(path: &str) -> Result<String, InputError> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| InputError(format!("{path}: {e}")))
    }
}

fn read_doc(path: &str) -> Result<PleDocument, InputError> {
    Ok(PleDocument::parse(&read_input(path)?)?)
}

fn read_certs(paths: &[String]) -> Result<Vec<Certificate>, InputError> {
    let mut out = Vec::new();
    for p in paths {
        out.extend(Certificate::parse_all(&read_input(p)?)?);
    }
    Ok(out)
}

fn parse_edge(s: &str) -> Result<(usize, usize), InputError> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| InputError(format!("edge {s:?} must look like u,v")))?;
    Ok((a.trim().parse()?, b.trim().parse()?))
}

fn verdict_code(ok: bool) -> u8 {
    if ok {
        0
    } else {
        EXIT_FALSE
    }
}

fn search_code<T>(s: &Search<T>) -> u8 {
    match s {
        Search::Found(_) => 0,
        Search::Exhausted => EXIT_FALSE,
        Search::Inconclusive { .. } => EXIT_INCONCLUSIVE,
    }
}

fn join(ids: &[usize]) -> String {
    ids.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn graph_of(doc: &PleDocument, dual: bool) -> Result<PlanarEmbedding, InputError> {
    if dual {
        Ok(doc.triangulation()?.dual_embedding())
    } else {
        Ok(doc.embedding()?)
    }
}

fn run(cli: Cli) -> Outcome {
    let budget = SearchBudget::new(cli.budget_nodes, Duration::from_secs(cli.budget_seconds));
    let start = Instant::now();
    match cli.command {
        Command::Validate { input, certs } => {
            let doc = read_doc(&input)?;
            let emb = doc.embedding()?;
            let mut r = VerdictReport::new("validate");
            r.push("vertices", emb.vertex_count())
                .push("edges", emb.edge_count())
                .push("faces", emb.face_count());
            let tri = Triangulation::new(emb.clone()).ok();
            r.push("triangulation", tri.is_some());
            let mut ok = true;
            if let Some(t) = &tri {
                r.push("eulerian", t.is_eulerian());
                r.push("separating_triangles", t.separating_triangles().len());
            }
            if let Some(col) = doc.colouring()? {
                let proper = col.is_proper(&emb.to_graph());
                r.push("colouring_proper", proper);
            }
            let certs = read_certs(&certs)?;
            if !certs.is_empty() {
                let t = tri.as_ref().ok_or_else(|| InputError("certificates need a triangulation".into()))?;
                for (i, c) in certs.iter().enumerate() {
                    match c.verify(t) {
                        Ok(()) => r.push(&format!("certificate_{i}"), "ok"),
                        Err(e) => {
                            ok = false;
                            r.push(&format!("certificate_{i}"), e)
                        }
                    };
                }
            }
            r.push("verdict", ok);
            print!("{r}");
            Ok(verdict_code(ok))
        }
        Command::Faces { input } => {
            let emb = read_doc(&input)?.embedding()?;
            for (i, f) in emb.faces().iter().enumerate() {
                println!("F {i} {}", join(&f.vertices));
            }
            Ok(0)
        }
        Command::Dual { input } => {
            let tri = read_doc(&input)?.triangulation()?;
            print!("{}", PleDocument::from_embedding(&tri.dual_embedding(), None));
            Ok(0)
        }
        Command::Color3 { input } => {
            let tri = read_doc(&input)?.triangulation()?;
            match proper_3_coloring(&tri) {
                Ok(col) => {
                    print!("{}", PleDocument::from_embedding(tri.embedding(), Some(&col)));
                    Ok(0)
                }
                Err(e) => {
                    let mut r = VerdictReport::new("color3");
                    r.push("verdict", false).push("witness", e);
                    print!("{r}");
                    Ok(EXIT_FALSE)
                }
            }
        }
        Command::CheckThm1 { input } => {
            let doc = read_doc(&input)?;
            let tri = doc.triangulation()?;
            let col = doc
                .colouring()?
                .ok_or_else(|| InputError("no colour lines".into()))?;
            let rep = check_hypotheses(&tri, &col)?;
            let mut r = VerdictReport::new("check-thm1");
            r.push("faces_covered", rep.faces_covered());
            if let Some(f) = rep.missed_face {
                r.push("missed_face", join(&tri.face(f)));
            }
            r.push("blue_acyclic", rep.blue_acyclic());
            if let Some(c) = &rep.blue_cycle {
                r.push("blue_cycle", join(c));
            }
            r.push("red_cycles_short", rep.red_cycles_short());
            if let Some(c) = &rep.high_red_cycle {
                r.push("high_degree_red_cycle", join(c));
            }
            r.push("verdict", rep.holds());
            print!("{r}");
            Ok(verdict_code(rep.holds()))
        }
        Command::RunThm1 { input } => {
            let doc = read_doc(&input)?;
            let tri = doc.triangulation()?;
            let col = doc
                .colouring()?
                .ok_or_else(|| InputError("no colour lines".into()))?;
            match theorem1_pipeline(&tri, &col) {
                Ok(out) => {
                    println!("# S = {}", join(&out.s));
                    println!("{}", Certificate::from_pair(&out.pair));
                    println!("{}", Certificate::from_cycle(&tri, &out.cycle));
                    Ok(0)
                }
                Err(SufficientError::Hypotheses(rep)) => {
                    eprintln!("hypotheses fail: {rep}");
                    Ok(EXIT_FALSE)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::GenFamily { k, index } => {
            if k == 0 || index == Some(0) {
                return Err(InputError("k and index must be positive".into()));
            }
            let member = match index {
                Some(i) => build_family(i)?.pop().unwrap(),
                None => generate_family(k)?,
            };
            print!(
                "{}",
                PleDocument::from_embedding(member.tri.embedding(), Some(&member.colouring))
            );
            Ok(0)
        }
        Command::VerifyH => {
            let h = build_special_h(Colour::Blue);
            let rep = verify_lemma_4_1(&h, budget);
            let mut r = VerdictReport::new("verify-h");
            r.push("vertices", h.tri.vertex_count())
                .push("edges", h.tri.edge_count())
                .push("faces", h.tri.face_count())
                .push("degree4_vertices", h.degree4_vertices().len())
                .push("subtrees", rep.subtrees)
                .push("without_degree4", rep.without_degree4)
                .push("avoiding_subsets", rep.avoiding_subsets)
                .push("paths_checked", rep.paths_checked)
                .push("parity_failures", rep.parity_failures)
                .push("complete", rep.complete)
                .push("verdict", rep.holds())
                .push("elapsed_ms", start.elapsed().as_millis());
            print!("{r}");
            Ok(if !rep.complete { EXIT_INCONCLUSIVE } else { verdict_code(rep.holds()) })
        }
        Command::VerifyFamily { level, k } => {
            if k == 0 {
                return Err(InputError("k must be positive".into()));
            }
            let mut r = VerdictReport::new("verify-family");
            let (complete, holds) = match level {
                Level::L41 => {
                    r.push("level", "4.1");
                    let rep = verify_lemma_4_1(&build_special_h(Colour::Blue), budget);
                    r.push("subtrees", rep.subtrees)
                        .push("without_degree4", rep.without_degree4);
                    (rep.complete, rep.holds())
                }
                Level::L42 => {
                    r.push("level", "4.2").push("index", 2);
                    let fam = build_family(2)?;
                    let rep = verify_lemma_4_2(&fam[0], &fam[1], budget);
                    r.push("subtrees", rep.subtrees)
                        .push("bad_restrictions", rep.bad_restrictions)
                        .push("bad_triangle_meets", rep.bad_triangle_meets)
                        .push("distinct_copy_restrictions", rep.distinct_copy_restrictions)
                        .push("distinct_prev_restrictions", rep.distinct_prev_restrictions)
                        .push("nodes", rep.nodes);
                    (rep.complete, rep.holds())
                }
                Level::L13 => {
                    r.push("level", "1.3").push("k", k);
                    let member = generate_family(k)?;
                    r.push("vertices", member.tri.vertex_count());
                    let s = structural_lower_bound(&member, k, budget);
                    r.push("structural_bound", s.holds());
                    let rep = verify_theorem_1_3(&member, k, budget);
                    let fmt = |m: &[Option<usize>; 3]| {
                        m.iter()
                            .map(|x| x.map_or("-".to_string(), |v| v.to_string()))
                            .collect::<Vec<_>>()
                            .join(",")
                    };
                    r.push("subtrees", rep.subtrees)
                        .push("min_contained_blue_red_green", fmt(&rep.min_contained))
                        .push("min_excluded_blue_red_green", fmt(&rep.min_excluded))
                        .push("nodes", rep.nodes);
                    (rep.complete, rep.holds() && s.holds())
                }
            };
            r.push("complete", complete)
                .push("verdict", if complete { holds.to_string() } else { "inconclusive".into() })
                .push("elapsed_ms", start.elapsed().as_millis());
            print!("{r}");
            Ok(if !complete { EXIT_INCONCLUSIVE } else { verdict_code(holds) })
        }
        Command::Fourpole { input, cut } => {
            let emb = read_doc(&input)?.embedding()?;
            let (x, y) = (parse_edge(&cut[0])?, parse_edge(&cut[1])?);
            let fp = make_four_pole(&emb, x, y)?;
            let t = fp.terminals;
            println!("# terminals x1 x2 y1 y2 = {}", join(&t));
            let mut all_hold = true;
            for i in 0..4 {
                for j in i + 1..4 {
                    if fp.side[t[i]] != fp.side[t[j]] {
                        continue;
                    }
                    let verdict = match covering_path_check(&fp, t[i], t[j], budget)? {
                        CoveringPath::Holds => "holds".to_string(),
                        CoveringPath::Violated(p) => {
                            all_hold = false;
                            format!("violated by path {}", join(&p))
                        }
                        CoveringPath::Inconclusive { .. } => {
                            all_hold = false;
                            "inconclusive".to_string()
                        }
                    };
                    println!("# covering path {} {}: {verdict}", t[i], t[j]);
                }
            }
            print!("{}", PleDocument::from_embedding(&fp.embedding, None));
            Ok(verdict_code(all_hold))
        }
        Command::CyclicConn { input, dual } => {
            let g = graph_of(&read_doc(&input)?, dual)?.to_graph();
            let mut r = VerdictReport::new("cyclic-conn");
            match cyclic_edge_connectivity(&g, budget) {
                Search::Found(c) => {
                    r.push("value", c.value);
                    match &c.cut {
                        Some(cut) => {
                            let edges: Vec<String> =
                                cut.edges.iter().map(|(u, v)| format!("{u},{v}")).collect();
                            r.push("cut", edges.join(" "));
                            r.push("side", join(&cut.components[0]));
                        }
                        None => {
                            r.push("cut", "none");
                        }
                    }
                    print!("{r}");
                    Ok(0)
                }
                _ => {
                    r.push("verdict", "inconclusive");
                    print!("{r}");
                    Ok(EXIT_INCONCLUSIVE)
                }
            }
        }
        Command::Ham {
            input,
            require,
            forbid,
            dual,
        } => {
            let g = graph_of(&read_doc(&input)?, dual)?.to_graph();
            let req = require.iter().map(|s| parse_edge(s)).collect::<Result<Vec<_>, _>>()?;
            let forb = forbid.iter().map(|s| parse_edge(s)).collect::<Result<Vec<_>, _>>()?;
            let res = oracle::find_hamiltonian_cycle(&g, &req, &forb, budget)?;
            let mut r = VerdictReport::new("ham");
            match &res {
                Search::Found(c) => r.push("verdict", true).push("cycle", join(c)),
                Search::Exhausted => r.push("verdict", false),
                Search::Inconclusive { nodes } => {
                    r.push("verdict", "inconclusive").push("nodes", nodes)
                }
            };
            print!("{r}");
            Ok(search_code(&res))
        }
        Command::Permeate { input, all } => {
            let tri = read_doc(&input)?.triangulation()?;
            if all {
                let (list, stats) = permeating_subtrees(&tri, budget);
                let mut r = VerdictReport::new("permeate");
                r.push("subtrees", list.len())
                    .push("complete", stats.complete)
                    .push("nodes", stats.nodes);
                print!("{r}");
                return Ok(if stats.complete {
                    verdict_code(!list.is_empty())
                } else {
                    EXIT_INCONCLUSIVE
                });
            }
            let res = find_permeating_subtree(&tri, budget);
            match &res {
                Search::Found(t) => {
                    let pair = TreePair::from_subtree(&tri, t);
                    let cycle = tree_pair_to_ham_cycle(&tri, &pair)?;
                    println!("{}", Certificate::from_pair(&pair));
                    println!("{}", Certificate::from_cycle(&tri, &cycle));
                }
                Search::Exhausted => eprintln!("no permeating subtree exists"),
                Search::Inconclusive { nodes } => eprintln!("search budget exhausted after {nodes} nodes"),
            }
            Ok(search_code(&res))
        }
        Command::Export {
            input,
            format,
            certs,
        } => {
            let doc = read_doc(&input)?;
            let emb = doc.embedding()?;
            let col: Option<VertexColoring> = doc.colouring()?;
            let certs = read_certs(&certs)?;
            let overlay = if certs.is_empty() {
                Overlay::default()
            } else {
                Overlay::from_certificates(&Triangulation::new(emb.clone())?, &certs)?
            };
            match format {
                Format::Dot => print!("{}", to_dot(&emb, col.as_ref(), &overlay)),
                Format::Svg => print!("{}", to_svg(&emb, col.as_ref(), &overlay)),
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use barnette::coloring::VertexColoring;
use barnette::corpus;
use barnette::duality::Certificate;
use barnette::ple::PleDocument;
use barnette::report::VerdictReport;

fn barnette(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_barnette"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(format!("{}-{name}", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path
}

fn coloured_octahedron() -> String {
    let oct = corpus::octahedron();
    let col = VertexColoring::from_blue_set(6, &[0, 5]);
    PleDocument::from_embedding(oct.embedding(), Some(&col)).to_string()
}

#[test]
fn run_thm1_emits_certificates_that_validate() {
    let ple = coloured_octahedron();
    let out = barnette(&["run-thm1", "-"], Some(&ple));
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let certs = Certificate::parse_all(&text).unwrap();
    assert_eq!(certs.len(), 2);
    let oct = corpus::octahedron();
    for c in &certs {
        c.verify(&oct).unwrap();
    }

    let input = scratch("oct.ple", &ple);
    let cert = scratch("oct.cert", &text);
    let out = barnette(
        &["validate", input.to_str().unwrap(), "--cert", cert.to_str().unwrap()],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    let r = VerdictReport::parse(&stdout(&out)).unwrap();
    assert_eq!(r.get("certificate_0"), Some("ok"));
    assert_eq!(r.get("certificate_1"), Some("ok"));
    assert_eq!(r.get("eulerian"), Some("true"));
}

#[test]
fn check_thm1_reports_missed_face() {
    let oct = corpus::octahedron();
    let col = VertexColoring::from_blue_set(6, &[1, 2]);
    let ple = PleDocument::from_embedding(oct.embedding(), Some(&col)).to_string();
    let out = barnette(&["check-thm1", "-"], Some(&ple));
    assert_eq!(out.status.code(), Some(1));
    let r = VerdictReport::parse(&stdout(&out)).unwrap();
    assert_eq!(r.get("faces_covered"), Some("false"));
    assert_eq!(r.get("verdict"), Some("false"));

    let out = barnette(&["run-thm1", "-"], Some(&ple));
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_h_holds() {
    let out = barnette(&["verify-h"], None);
    assert_eq!(out.status.code(), Some(0));
    let r = VerdictReport::parse(&stdout(&out)).unwrap();
    assert_eq!(r.get("verdict"), Some("true"));
}

#[test]
fn generated_family_member_validates_from_stdin() {
    let gen = barnette(&["gen-family", "--k", "1"], None);
    assert_eq!(gen.status.code(), Some(0));
    let out = barnette(&["validate", "-"], Some(&stdout(&gen)));
    assert_eq!(out.status.code(), Some(0));
    let r = VerdictReport::parse(&stdout(&out)).unwrap();
    assert_eq!(r.get("vertices"), Some("36"));
    assert_eq!(r.get("eulerian"), Some("true"));
    assert_eq!(r.get("colouring_proper"), Some("true"));

    let gen = barnette(&["gen-family", "--index", "2"], None);
    let doc = PleDocument::parse(&stdout(&gen)).unwrap();
    assert_eq!(doc.vertex_count(), 25);
}

#[test]
fn bad_input_exits_with_two() {
    let out = barnette(&["validate", "-"], Some("PLE 3\nR 0 1\n"));
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    let out = barnette(&["faces", "/nonexistent/graph.ple"], None);
    assert_eq!(out.status.code(), Some(2));
    let out = barnette(&["gen-family", "--k", "0"], None);
    assert_eq!(out.status.code(), Some(2));
    let out = barnette(&["frobnicate"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tampered_certificate_is_rejected() {
    let ple = coloured_octahedron();
    let input = scratch("tamper.ple", &ple);
    let cert = scratch("tamper.cert", "TREEPAIR 0 1 2 | 3 4 5\n");
    let out = barnette(
        &["validate", input.to_str().unwrap(), "--cert", cert.to_str().unwrap()],
        None,
    );
    assert_eq!(out.status.code(), Some(1));
    let r = VerdictReport::parse(&stdout(&out)).unwrap();
    assert_ne!(r.get("certificate_0"), Some("ok"));
}

#[test]
fn permeate_certificates_round_trip_through_validate() {
    let h = barnette(&["gen-family", "--index", "1"], None);
    let ple = stdout(&h);
    let out = barnette(&["permeate", "-"], Some(&ple));
    assert_eq!(out.status.code(), Some(0));
    let input = scratch("h.ple", &ple);
    let cert = scratch("h.cert", &stdout(&out));
    let out = barnette(
        &["validate", input.to_str().unwrap(), "--cert", cert.to_str().unwrap()],
        None,
    );
    assert_eq!(out.status.code(), Some(0));

    let out = barnette(&["permeate", "--all", "-"], Some(&ple));
    let r = VerdictReport::parse(&stdout(&out)).unwrap();
    assert_eq!(r.get("subtrees"), Some("88"));
}

#[test]
fn dual_of_octahedron_is_cyclically_four_connected() {
    let ple = coloured_octahedron();
    let out = barnette(&["cyclic-conn", "--dual", "-"], Some(&ple));
    assert_eq!(out.status.code(), Some(0));
    let r = VerdictReport::parse(&stdout(&out)).unwrap();
    assert_eq!(r.get("value"), Some("4"));

    let out = barnette(&["ham", "--dual", "-"], Some(&ple));
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn export_draws_overlay() {
    let ple = coloured_octahedron();
    let run = barnette(&["run-thm1", "-"], Some(&ple));
    let input = scratch("exp.ple", &ple);
    let cert = scratch("exp.cert", &stdout(&run));
    let out = barnette(
        &["export", input.to_str().unwrap(), "--cert", cert.to_str().unwrap()],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    let dot = stdout(&out);
    assert_eq!(dot.matches("style=bold").count(), 4);
    assert_eq!(dot.matches("style=dashed").count(), 8);
    let svg = barnette(&["export", "--format", "svg", "-"], Some(&ple));
    assert!(stdout(&svg).starts_with("<svg"));
}

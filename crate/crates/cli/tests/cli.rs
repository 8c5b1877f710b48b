use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const TETRA: &str = "scx 1\ndim 2\nvertices 4\nfacets 4\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n";
// a triangle with a dangling edge: collapsible, not a pseudo-manifold
const WHISKER: &str = "scx 1\ndim 2\nvertices 4\nfacets 2\n0 1 2\n2 3\n";
// seven-vertex torus
const TORUS: &str = "scx 1\ndim 2\nvertices 7\nfacets 14\n\
0 1 3\n1 2 4\n2 3 5\n3 4 6\n0 4 5\n1 5 6\n0 2 6\n\
0 1 5\n1 2 6\n0 2 3\n1 3 4\n2 4 5\n3 5 6\n0 4 6\n";

fn scx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scx")).args(args).output().expect("run scx")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn validate_prints_invariants() {
    let dir = TempDir::new().unwrap();
    let t = write(&dir, "t.scx", TETRA);
    let o = scx(&["validate", s(&t)]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("f-vector: (4,6,4)"), "{text}");
    assert!(text.contains("surface: closed orientable genus 0"));
}

#[test]
fn malformed_input_exits_3() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.scx", "scx 1\ndim 2\nvertices 3\nfacets 2\n1 2 3\n");
    let o = scx(&["validate", s(&bad)]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("header says 2 facets"));
    assert_eq!(scx(&["validate", "/nonexistent/x.scx"]).status.code(), Some(3));
    assert_eq!(scx(&["no-such-command"]).status.code(), Some(3));
    assert_eq!(scx(&["--help"]).status.code(), Some(0));
}

#[test]
fn sd_output_is_canonical() {
    let dir = TempDir::new().unwrap();
    let t = write(&dir, "t.scx", TETRA);
    let out = dir.path().join("sd.scx");
    let labels = dir.path().join("labels.txt");
    let o = scx(&["sd", s(&t), "-o", s(&out), "--labels", s(&labels)]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("scx 1\ndim 2\nvertices 14\nfacets 24\n"), "{text}");
    // barycentres are numbered by dimension: the four vertices come first
    let listing = fs::read_to_string(&labels).unwrap();
    assert_eq!(listing.lines().count(), 14);
    assert_eq!(listing.lines().take(5).collect::<Vec<_>>(), ["0: 1", "1: 2", "2: 3", "3: 4", "4: 1 2"]);
    // writing is idempotent
    let again = dir.path().join("again.scx");
    scx(&["sd", s(&t), "-k", "1", "-o", s(&again)]);
    assert_eq!(fs::read_to_string(&again).unwrap(), text);
    assert_eq!(scx(&["sd", s(&t), "-k", "2", "--labels", s(&labels)]).status.code(), Some(3));
}

#[test]
fn endo_certificate_verifies() {
    let dir = TempDir::new().unwrap();
    let t = write(&dir, "t.scx", TETRA);
    let sd = dir.path().join("sd.scx");
    scx(&["sd", s(&t), "-o", s(&sd)]);
    let cert = dir.path().join("c.txt");
    let o = scx(&["endo", s(&sd), "--cert", s(&cert)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("yes"));
    let o = scx(&["verify-cert", s(&sd), s(&cert)]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    // a certificate for one complex does not verify on another
    let torus = write(&dir, "torus.scx", TORUS);
    assert_eq!(scx(&["verify-cert", s(&torus), s(&cert)]).status.code(), Some(1));
}

#[test]
fn collapse_verdicts_and_exit_codes() {
    let dir = TempDir::new().unwrap();
    let w = write(&dir, "w.scx", WHISKER);
    let t = write(&dir, "t.scx", TETRA);
    let torus = write(&dir, "torus.scx", TORUS);
    let cert = dir.path().join("c.txt");
    assert_eq!(scx(&["collapse", s(&w), "--cert", s(&cert)]).status.code(), Some(0));
    assert_eq!(scx(&["verify-cert", s(&w), s(&cert)]).status.code(), Some(0));
    assert_eq!(scx(&["collapse", s(&t), "--strategy", "exhaustive"]).status.code(), Some(1));
    // greedy search can only fail to find a sequence, never refute one
    let o = scx(&["collapse", s(&torus), "--strategy", "greedy", "--attempts", "4"]);
    assert_eq!(o.status.code(), Some(2), "{}", stdout(&o));
    // the closed torus has no free face and is refuted at once; punctured, it needs a search
    assert_eq!(scx(&["collapse", s(&torus), "--strategy", "exhaustive"]).status.code(), Some(1));
    let punctured = write(&dir, "p.scx", &TORUS.replace("facets 14", "facets 13").replace("0 4 6\n", ""));
    let o = scx(&["collapse", s(&punctured), "--strategy", "exhaustive", "--budget", "10"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).starts_with("unknown"));
    // onto the edge 2 3
    let edge = write(&dir, "e.scx", "scx 1\ndim 1\nvertices 2\nfacets 1\n2 3\n");
    assert_eq!(scx(&["collapse", s(&w), "--onto", s(&edge)]).status.code(), Some(0));
    let not_sub = write(&dir, "n.scx", "scx 1\ndim 1\nvertices 2\nfacets 1\n0 3\n");
    assert_eq!(scx(&["collapse", s(&w), "--onto", s(&not_sub)]).status.code(), Some(3));
}

#[test]
fn reconstruct_inverts_sd() {
    let dir = TempDir::new().unwrap();
    let torus = write(&dir, "torus.scx", TORUS);
    let sd = dir.path().join("sd.scx");
    let back = dir.path().join("back.scx");
    scx(&["sd", s(&torus), "-o", s(&sd)]);
    assert_eq!(scx(&["reconstruct", s(&sd), "-o", s(&back)]).status.code(), Some(0));
    let o = scx(&["iso", s(&torus), s(&back)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 8);
    assert_eq!(scx(&["reconstruct", s(&torus)]).status.code(), Some(1));
}

#[test]
fn generators_are_reproducible() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.scx");
    let report = dir.path().join("r.txt");
    let o = scx(&["generate", "fig3", "--g", "2", "--pi", "2,1", "-o", s(&a), "--report", s(&report)]);
    assert_eq!(o.status.code(), Some(0));
    let r = fs::read_to_string(&report).unwrap();
    assert!(r.contains("surface: closed orientable genus 2"), "{r}");
    assert_eq!(scx(&["validate", s(&a)]).status.code(), Some(0));

    let o = scx(&["generate", "appendix", "--g", "1"]);
    assert!(stdout(&o).contains("facets 20\n"));
    assert_eq!(scx(&["generate", "fig3", "--g", "2", "--pi", "1,1"]).status.code(), Some(3));

    let o = scx(&["generate", "torus", "--r", "2", "--pattern", "(())(())"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("rejected"));

    let r1 = scx(&["--seed", "5", "generate", "random", "--steps", "6"]);
    let r2 = scx(&["generate", "random", "--steps", "6", "--seed", "5"]);
    assert_eq!(stdout(&r1), stdout(&r2));
}

#[test]
fn census_table_golden() {
    let o = scx(&["census", "--max-vertices", "6", "--jobs", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "d\tn_vertices\tN_facets\tgenus\tcount\tbound\tslack\tendo\n\
         2\t4\t4\t0\t1\t2^16\t16.00\t-\n\
         2\t5\t6\t0\t1\t2^24\t24.00\t-\n\
         2\t6\t8\t0\t2\t2^32\t31.00\t-\n\
         2\t6\t10\tN1\t1\t2^40\t40.00\t-\n"
    );
    let o = scx(&["census", "--max-vertices", "5", "--disks", "3", "--endo"]);
    let text = stdout(&o);
    assert!(text.contains("2\t5\t6\t0\t1\t2^24\t24.00\t1\n"), "{text}");
    assert!(text.contains("\tdisk\t"));
}

#[test]
fn bounds_pass() {
    let o = scx(&["bounds", "--max-vertices", "6", "--max-g", "2", "--max-r", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().all(|l| l.ends_with("pass")));
}

#[test]
fn morse_vector_of_a_sphere() {
    let dir = TempDir::new().unwrap();
    let t = write(&dir, "t.scx", TETRA);
    let o = scx(&["morse", s(&t), "--rounds", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("best: (1,0,1)\n"));
}

#[test]
fn endo_on_a_disk_writes_a_default_certificate() {
    let dir = TempDir::new().unwrap();
    // a fan of three triangles around vertex 0
    let disk = write(&dir, "disk.scx", "scx 1\ndim 2\nvertices 5\nfacets 3\n0 1 2\n0 2 3\n0 3 4\n");
    let o = scx(&["endo", s(&disk), "--strategy", "exhaustive"]);
    assert_eq!(o.status.code(), Some(0));
    let cert = dir.path().join("disk.scx.cert");
    let text = fs::read_to_string(&cert).unwrap();
    assert!(text.starts_with("scx-cert 1\nremoved "), "{text}");
    assert!(text.lines().skip(2).all(|l| l.starts_with("collapse ") || l.starts_with("terminal ")));
    assert_eq!(scx(&["verify-cert", s(&disk), s(&cert)]).status.code(), Some(0));
    // the input is untouched
    assert!(fs::read_to_string(&disk).unwrap().ends_with("0 3 4\n"));
}

#[test]
fn same_seed_same_bytes() {
    let dir = TempDir::new().unwrap();
    let t = write(&dir, "t.scx", TETRA);
    let sd = dir.path().join("sd.scx");
    scx(&["sd", s(&t), "-o", s(&sd)]);
    let original = fs::read_to_string(&sd).unwrap();
    let run = |name: &str| {
        let c = dir.path().join(name);
        let o = scx(&["--seed", "9", "endo", s(&sd), "--strategy", "greedy", "--cert", s(&c)]);
        (stdout(&o).split(',').next().unwrap().to_string(), fs::read(&c).ok())
    };
    let (a, b) = (run("a.cert"), run("b.cert"));
    assert!(a.0.starts_with("yes") && a.1.is_some());
    assert_eq!(a, b);
    assert_eq!(fs::read_to_string(&sd).unwrap(), original);
    let m1 = scx(&["--seed", "4", "morse", s(&sd), "--rounds", "4"]);
    let m2 = scx(&["--seed", "4", "morse", s(&sd), "--rounds", "4", "--jobs", "1"]);
    assert_eq!(m1.stdout, m2.stdout);
}

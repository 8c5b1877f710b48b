//! `scx`: command-line access to the simplicial complex toolkit.
//!
//! Exit status: 0 success or positive verdict, 1 negative verdict,
//! 2 unknown (budget or time exhausted), 3 usage, input or parse error.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use scx::census::{self, check_bounds, check_family, disk_census, enumerate_surfaces};
use scx::collapse::{
    discrete_morse_vector, verify_certificate, Claim, SearchStrategy, Verdict, DEFAULT_ATTEMPTS,
    DEFAULT_NODE_BUDGET,
};
use scx::constructions::{
    genus_surface_appendix, genus_surface_fig3, lower_bound_table, torus_catalan, ConstructionReport, Permutation,
    TorusOutcome,
};
use scx::format::{parse_certificate, parse_complex, write_certificate, write_complex};
use scx::random::{random_complex, random_pseudo_manifold};
use scx::subdivision::{derived_neighborhood, sd, sd_k, DEFAULT_FACET_CAP};
use scx::{classify_surface, collapse_to, is_collapsible, is_endo_collapsible, reconstruct, Face, SimplicialComplex};

#[derive(Parser)]
#[command(name = "scx", version, about = "Simplicial complexes, collapses and triangulation censuses")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Seed for randomised searches and generators
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Node budget for exhaustive search
    #[arg(long, global = true, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    /// Worker threads (default: one per core)
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyKind {
    Greedy,
    Lex,
    Exhaustive,
    Auto,
}

#[derive(Args)]
struct Search {
    #[arg(long, value_enum, default_value = "auto")]
    strategy: StrategyKind,
    /// Random greedy attempts (greedy and auto)
    #[arg(long, default_value_t = DEFAULT_ATTEMPTS)]
    attempts: u32,
    /// Wall-clock limit in seconds for exhaustive search
    #[arg(long)]
    time_limit: Option<f64>,
}

impl Search {
    fn strategy(&self, g: &Global) -> SearchStrategy {
        match self.strategy {
            StrategyKind::Greedy => SearchStrategy::GreedyRandom { seed: g.seed, attempts: self.attempts },
            StrategyKind::Lex => SearchStrategy::Lexicographic,
            StrategyKind::Exhaustive => SearchStrategy::Exhaustive {
                node_budget: g.budget,
                time_limit: self.time_limit.map(Duration::from_secs_f64),
            },
            StrategyKind::Auto => {
                SearchStrategy::Auto { seed: g.seed, attempts: self.attempts, node_budget: g.budget }
            }
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check a complex file and print its basic invariants
    Validate { input: PathBuf },
    /// Iterated barycentric subdivision
    Sd {
        input: PathBuf,
        #[arg(short, default_value_t = 1)]
        k: u32,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Write the face of the input carried by each new vertex (k = 1 only)
        #[arg(long)]
        labels: Option<PathBuf>,
    },
    /// Derived neighbourhood of a subcomplex
    Neighborhood {
        input: PathBuf,
        sub: PathBuf,
        #[arg(short, default_value_t = 1)]
        k: u32,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Collapse onto a vertex, or onto a subcomplex with --onto
    Collapse {
        input: PathBuf,
        #[arg(long)]
        onto: Option<PathBuf>,
        #[command(flatten)]
        search: Search,
        /// Certificate path on success (default: the input path plus `.cert`)
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Endo-collapsibility: remove a facet, collapse onto the boundary or a vertex
    Endo {
        input: PathBuf,
        /// Facet to remove, e.g. "0 1 2" (default: try every facet)
        #[arg(long)]
        sigma: Option<String>,
        #[command(flatten)]
        search: Search,
        /// Certificate path on success (default: the input path plus `.cert`)
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Best discrete Morse vector over several rounds
    Morse {
        input: PathBuf,
        #[arg(long, default_value_t = 16)]
        rounds: u32,
        #[command(flatten)]
        search: Search,
    },
    /// Recover T from a complex isomorphic to sd T
    Reconstruct {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Write the face of T carried by each input vertex
        #[arg(long)]
        labels: Option<PathBuf>,
    },
    /// Generate a complex from one of the built-in families
    Generate {
        #[command(subcommand)]
        family: Family,
    },
    /// Test two complexes for isomorphism
    Iso { a: PathBuf, b: PathBuf },
    /// Census of closed surfaces (and optionally disks)
    Census {
        #[arg(long, default_value_t = 7)]
        max_vertices: usize,
        /// Also list disks with up to this many triangles
        #[arg(long)]
        disks: Option<usize>,
        /// Test spheres and disks for endo-collapsibility
        #[arg(long)]
        endo: bool,
        #[command(flatten)]
        search: Search,
    },
    /// Replay a collapse certificate
    VerifyCert {
        input: PathBuf,
        cert: PathBuf,
        /// Claimed target subcomplex (default: inferred from the certificate)
        #[arg(long)]
        onto: Option<PathBuf>,
    },
    /// Compare census and family counts with the 2^(d^2 N) bound
    Bounds {
        #[arg(long, default_value_t = 7)]
        max_vertices: usize,
        #[arg(long, default_value_t = 3)]
        max_g: usize,
        #[arg(long, default_value_t = 3)]
        max_r: usize,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Strip-and-handles surface of genus g
    Fig3 {
        #[arg(long)]
        g: usize,
        /// Permutation as "2,1,3" (default: identity)
        #[arg(long)]
        pi: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Report output (default: stderr)
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Grid-and-prisms surface with 20g triangles
    Appendix {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        pi: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Square with r segments on top and bottom, glued to a torus
    Torus {
        #[arg(long)]
        r: usize,
        /// Balanced parenthesis word of length 4r
        #[arg(long)]
        pattern: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Random complex, or random pseudo-manifold with --steps
    Random {
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 8)]
        vertices: usize,
        #[arg(long, default_value_t = 10)]
        faces: usize,
        /// Grow a pseudo-manifold by this many random moves instead
        #[arg(long)]
        steps: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// Outcome of a command that succeeded in running.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Status {
    Yes,
    No,
    Unknown,
}

impl From<Status> for ExitCode {
    fn from(s: Status) -> Self {
        ExitCode::from(match s {
            Status::Yes => 0,
            Status::No => 1,
            Status::Unknown => 2,
        })
    }
}

fn read_complex(path: &Path) -> Result<SimplicialComplex> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_complex(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            out.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn emit_report(path: Option<&Path>, report: &ConstructionReport) -> Result<()> {
    match path {
        Some(p) => fs::write(p, report.to_string()).with_context(|| format!("writing {}", p.display())),
        None => {
            eprint!("{report}");
            Ok(())
        }
    }
}

fn face_text(f: &Face) -> String {
    f.vertices().iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn parse_face(text: &str) -> Result<Face> {
    let vs = text
        .split_whitespace()
        .map(|t| t.parse::<u32>().with_context(|| format!("bad vertex `{t}`")))
        .collect::<Result<Vec<_>>>()?;
    Ok(Face::new(vs)?)
}

fn default_cert_path(input: &Path) -> PathBuf {
    let mut name = input.as_os_str().to_owned();
    name.push(".cert");
    PathBuf::from(name)
}

/// Prints a verdict and saves the certificate of a positive one.
fn report_verdict(out: &mut dyn Write, verdict: &Verdict, input: &Path, cert: Option<&Path>) -> Result<Status> {
    match verdict {
        Verdict::Yes(seq) => {
            let path = cert.map_or_else(|| default_cert_path(input), Path::to_path_buf);
            fs::write(&path, write_certificate(seq)).with_context(|| format!("writing {}", path.display()))?;
            writeln!(out, "yes ({} collapses), certificate {}", seq.len(), path.display())?;
            Ok(Status::Yes)
        }
        Verdict::No => {
            writeln!(out, "no")?;
            Ok(Status::No)
        }
        Verdict::Unknown(why) => {
            writeln!(out, "unknown: {why}")?;
            Ok(Status::Unknown)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(3),
            };
        }
    };
    let jobs = cli.global.jobs;
    let result = scx::par::with_threads(jobs, || {
        let mut out = io::BufWriter::new(io::stdout().lock());
        run(&cli, &mut out).and_then(|s| Ok(out.flush().map(|_| s)?))
    });
    match result {
        Ok(status) => status.into(),
        // a closed pipe (`scx ... | head`) is not an error
        Err(e) if e.downcast_ref::<io::Error>().is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe) => {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: &Cli, out: &mut dyn Write) -> Result<Status> {
    let g = &cli.global;
    match &cli.command {
        Command::Validate { input } => {
            let c = read_complex(input)?;
            writeln!(out, "dim: {}", c.dim().map_or(-1, |d| d as i64))?;
            writeln!(out, "vertices: {}", c.n_vertices())?;
            writeln!(out, "facets: {}", c.n_facets())?;
            writeln!(out, "f-vector: {}", c.f_vector())?;
            writeln!(out, "euler: {}", c.euler_characteristic())?;
            writeln!(out, "pure: {}", c.is_pure())?;
            writeln!(out, "pseudo-manifold: {}", c.is_pseudo_manifold())?;
            writeln!(out, "connected: {}", c.is_connected())?;
            if c.dim() == Some(2) {
                writeln!(out, "surface: {}", classify_surface(&c))?;
            }
            Ok(Status::Yes)
        }
        Command::Sd { input, k, output, labels } => {
            let c = read_complex(input)?;
            if let Some(path) = labels {
                if *k != 1 {
                    bail!("--labels needs k = 1");
                }
                let (s, map) = sd(&c);
                let text: String = s.vertices().iter().map(|&v| format!("{v}: {}\n", face_text(map.label(v)))).collect();
                fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
                emit(out, output.as_deref(), &write_complex(&s))?;
            } else {
                emit(out, output.as_deref(), &write_complex(&sd_k(&c, *k, DEFAULT_FACET_CAP)?))?;
            }
            Ok(Status::Yes)
        }
        Command::Neighborhood { input, sub, k, output } => {
            let c = read_complex(input)?;
            let d = read_complex(sub)?;
            let n = derived_neighborhood(&c, &d, *k, DEFAULT_FACET_CAP)?;
            emit(out, output.as_deref(), &write_complex(&n.neighborhood))?;
            Ok(Status::Yes)
        }
        Command::Collapse { input, onto, search, cert } => {
            let c = read_complex(input)?;
            let strategy = search.strategy(g);
            let verdict = match onto {
                Some(p) => collapse_to(&c, &read_complex(p)?, &strategy)?,
                None => is_collapsible(&c, &strategy),
            };
            report_verdict(out, &verdict, input, cert.as_deref())
        }
        Command::Endo { input, sigma, search, cert } => {
            let c = read_complex(input)?;
            let sigma = sigma.as_deref().map(parse_face).transpose()?;
            let verdict = is_endo_collapsible(&c, sigma.as_ref(), &search.strategy(g))?;
            report_verdict(out, &verdict, input, cert.as_deref())
        }
        Command::Morse { input, rounds, search } => {
            let c = read_complex(input)?;
            let report = discrete_morse_vector(&c, &search.strategy(g), *rounds);
            writeln!(out, "best: {}", report.best)?;
            for (i, v) in report.rounds.iter().enumerate() {
                writeln!(out, "round {i}: {v}")?;
            }
            Ok(Status::Yes)
        }
        Command::Reconstruct { input, output, labels } => {
            let k = read_complex(input)?;
            match reconstruct(&k) {
                Ok(r) => {
                    if let Some(path) = labels {
                        let text: String = r.labels.iter().map(|(v, f)| format!("{v}: {}\n", face_text(f))).collect();
                        fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
                    }
                    emit(out, output.as_deref(), &write_complex(&r.base))?;
                    Ok(Status::Yes)
                }
                Err(scx::ReconstructionError::NotDerived(why)) => {
                    writeln!(out, "not derived: {why:?}")?;
                    Ok(Status::No)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Generate { family } => generate(g, family, out),
        Command::Iso { a, b } => {
            let (a, b) = (read_complex(a)?, read_complex(b)?);
            match census::iso(&a, &b) {
                Some(cert) => {
                    writeln!(out, "isomorphic")?;
                    for (x, y) in &cert.map {
                        writeln!(out, "{x} -> {y}")?;
                    }
                    Ok(Status::Yes)
                }
                None => {
                    writeln!(out, "not isomorphic")?;
                    Ok(Status::No)
                }
            }
        }
        Command::Census { max_vertices, disks, endo, search } => {
            let strategy = search.strategy(g);
            let endo = endo.then_some(&strategy);
            write!(out, "{}", enumerate_surfaces(*max_vertices, endo)?)?;
            if let Some(n) = disks {
                let table = disk_census(*n, endo)?;
                // same columns; skip the repeated header
                write!(out, "{}", table.to_string().split_once('\n').map_or("", |(_, rest)| rest))?;
            }
            Ok(Status::Yes)
        }
        Command::VerifyCert { input, cert, onto } => {
            let c = read_complex(input)?;
            let text = fs::read_to_string(cert).with_context(|| format!("reading {}", cert.display()))?;
            let seq = parse_certificate(&text).with_context(|| format!("parsing {}", cert.display()))?;
            let claim = match onto {
                Some(p) => Claim::CollapsesOnto(read_complex(p)?),
                None if seq.removed.is_some() => Claim::EndoCollapsible,
                None => Claim::Collapsible,
            };
            match verify_certificate(&c, &seq, &claim) {
                Ok(()) => {
                    writeln!(out, "certificate ok")?;
                    Ok(Status::Yes)
                }
                Err(e) => {
                    writeln!(out, "certificate rejected: {e}")?;
                    Ok(Status::No)
                }
            }
        }
        Command::Bounds { max_vertices, max_g, max_r } => {
            let mut report = check_bounds(&enumerate_surfaces(*max_vertices, None)?);
            for row in lower_bound_table(*max_g, *max_r) {
                if row.distinct > 0 {
                    let label = format!("{} {}={} N={}", row.family, if row.family == "torus" { "r" } else { "g" }, row.parameter, row.n_facets);
                    report.checks.push(check_family(&label, 2, row.n_facets, row.distinct as u128));
                }
            }
            write!(out, "{report}")?;
            Ok(if report.passed() { Status::Yes } else { Status::No })
        }
    }
}

fn permutation(g: usize, pi: &Option<String>) -> Result<Permutation> {
    let p = match pi {
        Some(s) => s.parse::<Permutation>()?,
        None => Permutation::identity(g),
    };
    if p.g() != g || g == 0 {
        bail!("permutation must act on 1..={g}");
    }
    Ok(p)
}

fn generate(g: &Global, family: &Family, out: &mut dyn Write) -> Result<Status> {
    match family {
        Family::Fig3 { g: genus, pi, output, report } => {
            let (c, r) = genus_surface_fig3(&permutation(*genus, pi)?);
            emit(out, output.as_deref(), &write_complex(&c))?;
            emit_report(report.as_deref(), &r)?;
            Ok(Status::Yes)
        }
        Family::Appendix { g: genus, pi, output, report } => {
            let (c, r) = genus_surface_appendix(&permutation(*genus, pi)?);
            emit(out, output.as_deref(), &write_complex(&c))?;
            emit_report(report.as_deref(), &r)?;
            Ok(Status::Yes)
        }
        Family::Torus { r, pattern, output, report } => match torus_catalan(*r, pattern)? {
            TorusOutcome::Accepted(c, rep) => {
                emit(out, output.as_deref(), &write_complex(&c))?;
                emit_report(report.as_deref(), &rep)?;
                Ok(Status::Yes)
            }
            TorusOutcome::Rejected(why) => {
                writeln!(out, "rejected: {why:?}")?;
                Ok(Status::No)
            }
        },
        Family::Random { dim, vertices, faces, steps, output } => {
            if *vertices == 0 || *faces == 0 {
                bail!("need at least one vertex and one face");
            }
            let mut rng = ChaCha8Rng::seed_from_u64(g.seed);
            let c = match steps {
                Some(s) => random_pseudo_manifold(&mut rng, *dim, *s),
                None => random_complex(&mut rng, *dim, *vertices, *faces),
            };
            emit(out, output.as_deref(), &write_complex(&c))?;
            Ok(Status::Yes)
        }
    }
}

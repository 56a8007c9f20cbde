use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use brauer::brauer::{
    algebra_of, canonical_form, find_isomorphism, parse_brauer_graph, serialize_brauer_graph, BrauerGraph,
};
use brauer::check::{check_bounds, run_suite, Bounds, CheckReport, Suite};
use brauer::cut::{admissible_cut, enumerate_cutting_sets, verify_roundtrip, CuttingSet};
use brauer::dot::{brauer_graph_dot, quiver_dot, triangulation_dot};
use brauer::gentle::{validate_gentle, GentleAlgebra};
use brauer::quiver::{parse_presentation, serialize_presentation, Presentation};
use brauer::ssb::{distinguishing_invariant, find_ssb_isomorphism, graph_of_ssb, validate_ssb, SsbPresentation};
use brauer::surface::{
    brauer_graph_of_triangulation, jacobian_algebra, parse_triangulation, ArrowConvention, Triangulation,
};
use brauer::text::ParseError;
use brauer::trivext::{graph_of_gentle, trivial_extension};

#[derive(Parser)]
#[command(name = "brauer", version, about = "Brauer graph algebras, gentle algebras and their trivial extensions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a file.
    Validate {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: Option<Kind>,
    },
    /// Convert between Brauer graphs, algebras and triangulations.
    Convert {
        file: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Write the text result here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print Graphviz DOT of the result on stdout.
        #[arg(long)]
        dot: bool,
        #[arg(long, value_enum, default_value_t = Convention::Successor)]
        arrow_convention: Convention,
    },
    /// Decide whether two Brauer graphs or two algebras are isomorphic.
    Iso {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, value_enum)]
        kind: IsoKind,
    },
    /// Admissible cuts of a multiplicity-one Brauer graph algebra.
    Cuts {
        /// A Brauer graph or a special biserial presentation.
        file: PathBuf,
        /// Comma-separated arrows to delete.
        #[arg(long, value_delimiter = ',', conflicts_with = "enumerate", required_unless_present = "enumerate")]
        cut: Option<Vec<String>>,
        /// List every cutting set.
        #[arg(long)]
        enumerate: bool,
        /// Check that the trivial extension of each cut recovers the input.
        #[arg(long)]
        verify: bool,
        /// Print DOT of the input quiver with the cut arrows dashed.
        #[arg(long, requires = "cut")]
        dot: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run property suites over exhaustively enumerated small instances.
    Check {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 4)]
        max_edges: usize,
        #[arg(long, default_value_t = 3)]
        max_mult: u32,
        #[arg(long, default_value_t = 4)]
        max_vertices: usize,
        #[arg(long, default_value_t = 6)]
        max_arrows: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads; 0 uses one per core.
        #[arg(long, default_value_t = 0)]
        threads: usize,
    },
    /// Print Graphviz DOT for a file.
    Dot {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: Option<Kind>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    /// Brauer graph.
    Bg,
    /// Gentle or special biserial presentation.
    Alg,
    Gentle,
    Ssb,
    /// Triangulation.
    Tri,
}

#[derive(Clone, Copy, ValueEnum)]
enum IsoKind {
    Bg,
    Alg,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    BgToAlg,
    AlgToBg,
    Trivext,
    GentleGraph,
    TriToJacobian,
    TriToBg,
}

#[derive(Clone, Copy, ValueEnum)]
enum Convention {
    Successor,
    Predecessor,
}

impl From<Convention> for ArrowConvention {
    fn from(c: Convention) -> Self {
        match c {
            Convention::Successor => ArrowConvention::Successor,
            Convention::Predecessor => ArrowConvention::Predecessor,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    #[value(name = "thm-1-1", alias = "roundtrip")]
    RoundTrip,
    #[value(name = "thm-1-2", alias = "trivext")]
    TrivialExtension,
    #[value(name = "thm-1-3", alias = "cuts")]
    Cuts,
    #[value(name = "lemma-2-1", alias = "socle")]
    Socle,
    Jacobian,
    All,
}

/// Exit 1: the checked property is false.
/// Exit 2: the input could not be read, parsed or validated.
enum Failure {
    False(String),
    Input(String),
}

type CliResult = Result<String, Failure>;

fn input(e: impl std::fmt::Display) -> Failure {
    Failure::Input(e.to_string())
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn detect(text: &str) -> Option<Kind> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())?;
    match first.split_whitespace().next()? {
        "bvertex" | "bedge" | "order" => Some(Kind::Bg),
        "point" | "bseg" | "arc" | "triangle" => Some(Kind::Tri),
        "vertex" | "arrow" | "rel" => Some(Kind::Alg),
        _ => None,
    }
}

fn kind_of(text: &str, path: &Path, kind: Option<Kind>) -> Result<Kind, Failure> {
    kind.or_else(|| detect(text))
        .ok_or_else(|| Failure::Input(format!("{}: cannot tell the file kind; pass --kind", path.display())))
}

fn load_graph(path: &Path) -> Result<BrauerGraph, Failure> {
    parse_brauer_graph(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_presentation(path: &Path) -> Result<Presentation, Failure> {
    parse_presentation(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_triangulation(path: &Path) -> Result<Triangulation, Failure> {
    parse_triangulation(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_gentle(path: &Path) -> Result<GentleAlgebra, Failure> {
    validate_gentle(load_presentation(path)?)
        .map_err(|r| Failure::Input(format!("{}: not gentle\n{r}", path.display())))
}

fn load_ssb(path: &Path) -> Result<SsbPresentation, Failure> {
    validate_ssb(load_presentation(path)?)
        .map_err(|r| Failure::Input(format!("{}: not a Brauer graph algebra presentation\n{r}", path.display())))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Validate { file, kind } => validate(&file, kind),
        Command::Convert {
            file,
            mode,
            out,
            dot,
            arrow_convention,
        } => convert(&file, mode, out.as_deref(), dot, arrow_convention.into()),
        Command::Iso { first, second, kind } => iso(&first, &second, kind),
        Command::Cuts {
            file,
            cut,
            enumerate,
            verify,
            dot,
            out,
        } => cuts(&file, cut, enumerate, verify, dot, out.as_deref()),
        Command::Check {
            suite,
            max_edges,
            max_mult,
            max_vertices,
            max_arrows,
            seed,
            threads,
        } => {
            let bounds = Bounds {
                max_edges,
                max_mult,
                max_vertices,
                max_arrows,
                seed,
            };
            check(suite, &bounds, threads)
        }
        Command::Dot { file, kind } => dot(&file, kind),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::False(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Input(message)) => {
            eprintln!("error: {}", message.trim_end());
            ExitCode::from(2)
        }
    }
}

fn validate(path: &Path, kind: Option<Kind>) -> CliResult {
    let text = read(path)?;
    let kind = kind_of(&text, path, kind)?;
    // Structural violations are a false property; syntax errors are bad input.
    let parsed = |e: ParseError| match e {
        ParseError::Structure(m) => Failure::False(format!("invalid: {m}\n")),
        e => Failure::Input(format!("{}: {e}", path.display())),
    };
    match kind {
        Kind::Bg => {
            let g = parse_brauer_graph(&text).map_err(parsed)?;
            Ok(format!(
                "valid Brauer graph: {} vertices, {} edges\n",
                g.vertex_count(),
                g.edge_count()
            ))
        }
        Kind::Tri => {
            let t = parse_triangulation(&text).map_err(parsed)?;
            let raw = t.raw();
            Ok(format!(
                "valid triangulation: {} points, {} arcs, {} triangles\n",
                raw.points.len(),
                raw.arcs.len(),
                raw.triangles.len()
            ))
        }
        Kind::Alg | Kind::Gentle | Kind::Ssb => {
            let p = parse_presentation(&text).map_err(parsed)?;
            let summary = |q: &brauer::quiver::Quiver, dim: usize| {
                format!("{} vertices, {} arrows, dimension {dim}", q.vertex_count(), q.arrow_count())
            };
            let gentle = || -> Result<String, String> {
                let a = validate_gentle(p.clone()).map_err(|r| format!("not gentle\n{r}"))?;
                Ok(format!("valid gentle algebra: {}\n", summary(a.quiver(), a.dimension())))
            };
            let ssb = || -> Result<String, String> {
                let l = validate_ssb(p.clone()).map_err(|r| format!("not a Brauer graph algebra presentation\n{r}"))?;
                Ok(format!(
                    "valid Brauer graph algebra presentation: {}\n",
                    summary(l.quiver(), l.dimension())
                ))
            };
            let outcome = match kind {
                Kind::Gentle => gentle(),
                Kind::Ssb => ssb(),
                _ => gentle().or_else(|g| ssb().map_err(|s| format!("{g}\n{s}"))),
            };
            outcome.map_err(|m| Failure::False(format!("invalid: {m}\n")))
        }
    }
}

enum Converted {
    Algebra(Presentation, BTreeSet<String>),
    Graph(BrauerGraph),
}

fn convert(path: &Path, mode: Mode, out: Option<&Path>, dot: bool, convention: ArrowConvention) -> CliResult {
    let converted = match mode {
        Mode::BgToAlg => Converted::Algebra(algebra_of(&load_graph(path)?).presentation().clone(), BTreeSet::new()),
        Mode::AlgToBg => Converted::Graph(graph_of_ssb(&load_ssb(path)?).map_err(input)?),
        Mode::Trivext => {
            let a = load_gentle(path)?;
            let t = trivial_extension(&a);
            let new: BTreeSet<String> = t
                .quiver()
                .arrows()
                .iter()
                .filter(|x| a.quiver().arrow(&x.id).is_none())
                .map(|x| x.id.clone())
                .collect();
            Converted::Algebra(t.presentation().clone(), new)
        }
        Mode::GentleGraph => Converted::Graph(graph_of_gentle(&load_gentle(path)?).graph),
        Mode::TriToJacobian => {
            let a = jacobian_algebra(&load_triangulation(path)?, convention)
                .map_err(|r| Failure::Input(format!("Jacobian algebra is not gentle\n{r}")))?;
            Converted::Algebra(a.presentation().clone(), BTreeSet::new())
        }
        Mode::TriToBg => Converted::Graph(
            brauer_graph_of_triangulation(&load_triangulation(path)?, convention)
                .map_err(|r| Failure::Input(format!("Brauer graph is invalid\n{r}")))?,
        ),
    };
    let (text, dot_text) = match &converted {
        Converted::Algebra(p, dashed) => (serialize_presentation(p), quiver_dot(p.quiver(), dashed)),
        Converted::Graph(g) => (serialize_brauer_graph(g), brauer_graph_dot(g)),
    };
    emit(text, dot.then_some(dot_text), out)
}

/// Writes `text` to `out` if given; stdout carries DOT if requested,
/// otherwise the text unless it went to a file.
fn emit(text: String, dot: Option<String>, out: Option<&Path>) -> CliResult {
    if let Some(out) = out {
        fs::write(out, &text).map_err(|e| Failure::Input(format!("{}: {e}", out.display())))?;
    }
    Ok(match (dot, out) {
        (Some(d), _) => d,
        (None, Some(_)) => String::new(),
        (None, None) => text,
    })
}

fn map_lines(kind: &str, map: &std::collections::BTreeMap<String, String>) -> String {
    map.iter().map(|(a, b)| format!("{kind} {a} -> {b}\n")).collect()
}

fn graph_invariant(a: &BrauerGraph, b: &BrauerGraph) -> String {
    let mults = |g: &BrauerGraph| {
        let mut m: Vec<u32> = (0..g.vertex_count()).map(|v| g.multiplicity(v)).collect();
        m.sort();
        m
    };
    let valencies = |g: &BrauerGraph| {
        let mut m: Vec<usize> = (0..g.vertex_count()).map(|v| g.valency(v)).collect();
        m.sort();
        m
    };
    if a.vertex_count() != b.vertex_count() {
        format!("vertex count {} != {}", a.vertex_count(), b.vertex_count())
    } else if a.edge_count() != b.edge_count() {
        format!("edge count {} != {}", a.edge_count(), b.edge_count())
    } else if valencies(a) != valencies(b) {
        format!("valencies {:?} != {:?}", valencies(a), valencies(b))
    } else if mults(a) != mults(b) {
        format!("multiplicities {:?} != {:?}", mults(a), mults(b))
    } else {
        format!("canonical forms differ: {:?} != {:?}", canonical_form(a), canonical_form(b))
    }
}

fn iso(first: &Path, second: &Path, kind: IsoKind) -> CliResult {
    match kind {
        IsoKind::Bg => {
            let (a, b) = (load_graph(first)?, load_graph(second)?);
            match find_isomorphism(&a, &b) {
                Some(m) => Ok(format!(
                    "isomorphic\n{}{}{}",
                    map_lines("vertex", &m.vertex_map),
                    map_lines("edge", &m.edge_map),
                    map_lines("half", &m.half_map)
                )),
                None => Err(Failure::False(format!("not isomorphic: {}\n", graph_invariant(&a, &b)))),
            }
        }
        IsoKind::Alg => {
            let (a, b) = (load_ssb(first)?, load_ssb(second)?);
            match find_ssb_isomorphism(&a, &b) {
                Some(m) => Ok(format!(
                    "isomorphic\n{}{}",
                    map_lines("vertex", &m.vertex_map),
                    map_lines("arrow", &m.arrow_map)
                )),
                None => Err(Failure::False(format!(
                    "not isomorphic: {}\n",
                    distinguishing_invariant(&a, &b).unwrap_or_default()
                ))),
            }
        }
    }
}

fn cuts(
    path: &Path,
    cut: Option<Vec<String>>,
    enumerate: bool,
    verify: bool,
    dot: bool,
    out: Option<&Path>,
) -> CliResult {
    let text = read(path)?;
    let l = match kind_of(&text, path, None)? {
        Kind::Bg => algebra_of(&load_graph(path)?),
        _ => load_ssb(path)?,
    };
    if enumerate {
        let sets = enumerate_cutting_sets(&l).map_err(input)?;
        let mut listing = String::new();
        let mut count = 0;
        let mut all_ok = true;
        for d in sets {
            count += 1;
            let arrows = d.arrows.iter().cloned().collect::<Vec<_>>().join(",");
            if verify {
                let ok = verify_roundtrip(&l, &d).unwrap_or(false);
                all_ok &= ok;
                listing += &format!("cut {arrows} {}\n", if ok { "ok" } else { "FAILED" });
            } else {
                listing += &format!("cut {arrows}\n");
            }
        }
        listing += &format!("{count} cutting sets\n");
        let shown = emit(listing, None, out)?;
        return if all_ok { Ok(shown) } else { Err(Failure::False(shown)) };
    }
    let d = CuttingSet::new(cut.unwrap_or_default());
    let a = admissible_cut(&l, &d).map_err(input)?;
    let mut text = serialize_presentation(a.presentation());
    let ok = !verify || verify_roundtrip(&l, &d).map_err(input)?;
    if verify {
        text += if ok { "# roundtrip: ok\n" } else { "# roundtrip: FAILED\n" };
    }
    let shown = emit(text, dot.then(|| quiver_dot(l.quiver(), &d.arrows)), out)?;
    if ok {
        Ok(shown)
    } else {
        Err(Failure::False(shown))
    }
}

fn check(suite: SuiteArg, bounds: &Bounds, threads: usize) -> CliResult {
    check_bounds(bounds).map_err(Failure::Input)?;
    let suites: Vec<Suite> = match suite {
        SuiteArg::RoundTrip => vec![Suite::BrauerRoundTrip],
        SuiteArg::TrivialExtension => vec![Suite::TrivialExtension],
        SuiteArg::Cuts => vec![Suite::Cuts],
        SuiteArg::Socle => vec![Suite::Socle],
        SuiteArg::Jacobian => vec![Suite::Jacobian],
        SuiteArg::All => Suite::ALL.to_vec(),
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(input)?;
    let reports: Vec<CheckReport> = pool.install(|| suites.iter().map(|&s| run_suite(s, bounds)).collect());
    let text: String = reports.iter().map(|r| r.to_string()).collect();
    if reports.iter().all(|r| r.failures.is_empty()) {
        Ok(text)
    } else {
        Err(Failure::False(text))
    }
}

fn dot(path: &Path, kind: Option<Kind>) -> CliResult {
    let text = read(path)?;
    Ok(match kind_of(&text, path, kind)? {
        Kind::Bg => brauer_graph_dot(&load_graph(path)?),
        Kind::Tri => triangulation_dot(&load_triangulation(path)?),
        Kind::Alg | Kind::Gentle | Kind::Ssb => quiver_dot(load_presentation(path)?.quiver(), &BTreeSet::new()),
    })
}

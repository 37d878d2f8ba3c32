//! `elc`: orbits, ELC-preserved tests, constructions, codes and censuses
//! from the command line.
//!
//! Exit codes: 0 success, 2 parse or validation error, 3 capacity
//! exceeded, 4 internal invariant violation.

mod input;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use elc_core::codes::{code_report, CodeReport};
use elc_core::enumeration::{
    builtin_self_dual_codes, classify_preserved, self_dual_orbit_survey, Census, Column, SurveyRow,
};
use elc_core::orbit::{elc_witness, orbit, OrbitKind};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use elc_core::{graph6, BitMatrix, Error, LinearCode};
use serde::Serialize;

use input::{read_graphs, InputFormat, Named};

#[derive(Parser)]
#[command(name = "elc", version, about = "Local and edge local complementation orbits, constructions and codes")]
struct Cli {
    /// Worker threads; output does not depend on this.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 2008)]
    seed: u64,
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// How to read graph arguments.
    #[arg(long, global = true, value_enum, default_value_t = InputFormat::Auto)]
    input_format: InputFormat,
    /// Orbit size cap (default from ELC_ORBIT_CAP, else 10000000).
    #[arg(long, global = true)]
    cap: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Graph6,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Elc,
    Lc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CensusClass {
    Bipartite,
    Nonbipartite,
    Lc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CensusWhat {
    Orbits,
    Preserved,
    SizeTwo,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SideChoice {
    Left,
    Right,
    Smaller,
    Larger,
}

#[derive(Subcommand)]
enum Command {
    /// Summarize the orbit of each input graph.
    Orbit {
        input: String,
        #[arg(long, value_enum, default_value_t = Kind::Elc)]
        kind: Kind,
        /// Also list every member as graph6.
        #[arg(long)]
        dump: bool,
    },
    /// Test whether every ELC leaves the graph unchanged up to isomorphism.
    Preserved { input: String },
    /// Build a graph from a construction expression such as "S-2(s3)".
    Construct {
        spec: String,
        /// Fail instead of warning when an operand breaks the hypotheses.
        #[arg(long)]
        strict: bool,
    },
    /// Parameters of the code of a bipartite graph or generator matrix.
    Code {
        input: String,
        /// Information side of the bipartition.
        #[arg(long, value_enum, default_value_t = SideChoice::Left)]
        side: SideChoice,
    },
    /// Orbit counts by order, mirroring the census tables.
    Census {
        #[arg(long, value_enum)]
        class: CensusClass,
        #[arg(long, value_enum, default_value_t = CensusWhat::Orbits)]
        what: CensusWhat,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        /// Raise the order limits.
        #[arg(long)]
        deep: bool,
        /// Directory for resumable per-order checkpoint files.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// Name every graph with ELC orbit of size one by a construction.
    Classify {
        #[arg(long, default_value_t = 12)]
        max_bipartite: usize,
        #[arg(long, default_value_t = 9)]
        max_nonbipartite: usize,
        #[arg(long)]
        deep: bool,
    },
    /// Orbit size class (1, 2, >2) of graphs of self-dual codes.
    Survey {
        /// Generator matrix files; the built-in codes are used when empty.
        files: Vec<PathBuf>,
    },
    /// Quick internal consistency checks.
    Selfcheck,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Capacity(_) => 3,
        Error::Invariant(_) => 4,
        _ => 2,
    }
}

fn kind_of(k: Kind) -> OrbitKind {
    match k {
        Kind::Elc => OrbitKind::Elc,
        Kind::Lc => OrbitKind::Lc,
    }
}

struct Out {
    w: io::BufWriter<io::Stdout>,
}

impl Out {
    fn line(&mut self, s: &str) -> Result<(), Error> {
        writeln!(self.w, "{s}")?;
        Ok(())
    }

    fn json<T: Serialize>(&mut self, v: &T) -> Result<(), Error> {
        let s = serde_json::to_string_pretty(v).map_err(|e| Error::Io(e.to_string()))?;
        self.line(&s)
    }

    fn csv<T: Serialize>(&mut self, rows: &[T]) -> Result<(), Error> {
        let mut wtr = csv::Writer::from_writer(Vec::new());
        for r in rows {
            wtr.serialize(r).map_err(|e| Error::Io(e.to_string()))?;
        }
        let bytes = wtr.into_inner().map_err(|e| Error::Io(e.to_string()))?;
        self.w.write_all(&bytes)?;
        Ok(())
    }
}

#[derive(Serialize)]
struct OrbitRow {
    input: String,
    kind: OrbitKind,
    size: usize,
    representative: String,
    truncated: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    members: Option<Vec<String>>,
}

fn cmd_orbit(cli: &Cli, out: &mut Out, input: &str, kind: Kind, dump: bool) -> Result<(), Error> {
    let cap = cli.cap.unwrap_or_else(elc_core::orbit::default_cap);
    let mut rows = Vec::new();
    for Named { name, graph, .. } in read_graphs(input, cli.input_format, false)? {
        let o = orbit(&graph, kind_of(kind), cap)?;
        let s = o.summary();
        let members = dump.then(|| o.dump().lines().map(str::to_string).collect());
        rows.push(OrbitRow { input: name, kind: s.kind, size: s.size, representative: s.representative, truncated: s.truncated, members });
    }
    match cli.format.unwrap_or(Format::Csv) {
        Format::Json => out.json(&rows),
        Format::Graph6 => {
            for r in &rows {
                match &r.members {
                    Some(m) => m.iter().try_for_each(|g| out.line(g))?,
                    None => out.line(&r.representative)?,
                }
            }
            Ok(())
        }
        Format::Csv => {
            if dump {
                eprintln!("note: --dump lists members only with --format json or graph6");
            }
            let flat: Vec<OrbitRow> = rows.into_iter().map(|r| OrbitRow { members: None, ..r }).collect();
            out.csv(&flat)
        }
    }
}

#[derive(Serialize)]
struct PreservedRow {
    input: String,
    preserved: bool,
    witness_u: Option<usize>,
    witness_v: Option<usize>,
}

fn cmd_preserved(cli: &Cli, out: &mut Out, input: &str) -> Result<(), Error> {
    let mut rows = Vec::new();
    for Named { name, graph, .. } in read_graphs(input, cli.input_format, false)? {
        let w = elc_witness(&graph)?;
        rows.push(PreservedRow { input: name, preserved: w.is_none(), witness_u: w.map(|e| e.0), witness_v: w.map(|e| e.1) });
    }
    match cli.format.unwrap_or(Format::Csv) {
        Format::Json => out.json(&rows),
        Format::Graph6 => rows.iter().filter(|r| r.preserved).try_for_each(|r| out.line(&r.input)),
        Format::Csv => out.csv(&rows),
    }
}

#[derive(Serialize)]
struct ConstructRow {
    spec: String,
    order: usize,
    edges: usize,
    graph6: String,
    warnings: Vec<String>,
}

fn cmd_construct(cli: &Cli, out: &mut Out, spec: &str, strict: bool) -> Result<(), Error> {
    let e: elc_core::ConstructionSpec = spec.parse()?;
    let built = e.build_with(strict)?;
    for w in &built.warnings {
        eprintln!("warning: {w}");
    }
    let row = ConstructRow {
        spec: e.to_string(),
        order: built.graph.order(),
        edges: built.graph.edge_count(),
        graph6: graph6::encode(&built.graph),
        warnings: built.warnings,
    };
    match cli.format.unwrap_or(Format::Graph6) {
        Format::Graph6 => out.line(&row.graph6),
        Format::Json => out.json(&row),
        Format::Csv => {
            #[derive(Serialize)]
            struct Flat<'a> {
                spec: &'a str,
                order: usize,
                edges: usize,
                graph6: &'a str,
            }
            out.csv(&[Flat { spec: &row.spec, order: row.order, edges: row.edges, graph6: &row.graph6 }])
        }
    }
}

#[derive(Serialize)]
struct CodeRow {
    input: String,
    #[serde(flatten)]
    report: CodeReport,
}

#[derive(Serialize)]
struct CodeCsvRow {
    input: String,
    params: String,
    dual_params: String,
    self_dual: bool,
    isodual: String,
    d_via_orbit: Option<usize>,
    d_bruteforce: Option<usize>,
}

fn cmd_code(cli: &Cli, out: &mut Out, input: &str, side: SideChoice) -> Result<(), Error> {
    let mut rows = Vec::new();
    for Named { name, graph, info } in read_graphs(input, cli.input_format, false)? {
        let p = graph.bipartition().ok_or(Error::NotBipartite)?;
        let info = match (info, side) {
            (Some(i), _) => i,
            (None, SideChoice::Left) => p.left,
            (None, SideChoice::Right) => p.right,
            (None, SideChoice::Smaller) => p.side(p.smaller_side()),
            (None, SideChoice::Larger) => p.side(p.smaller_side().other()),
        };
        rows.push(CodeRow { input: name, report: code_report(&graph, info, cli.cap)? });
    }
    match cli.format.unwrap_or(Format::Json) {
        Format::Json => out.json(&rows),
        Format::Csv => {
            let flat: Vec<CodeCsvRow> = rows
                .into_iter()
                .map(|r| CodeCsvRow {
                    input: r.input,
                    params: r.report.params.to_string(),
                    dual_params: r.report.dual_params.to_string(),
                    self_dual: r.report.self_dual,
                    isodual: serde_json::to_string(&r.report.isodual).unwrap_or_default().trim_matches('"').to_string(),
                    d_via_orbit: r.report.d_via_orbit,
                    d_bruteforce: r.report.d_bruteforce,
                })
                .collect();
            out.csv(&flat)
        }
        Format::Graph6 => Err(Error::InvalidParameter("code reports have no graph6 form".into())),
    }
}

fn census_column(class: CensusClass, what: CensusWhat) -> Result<Column, Error> {
    use CensusClass::*;
    use CensusWhat::*;
    Ok(match (class, what) {
        (Bipartite, Orbits) => Column::OrbitsBipartite,
        (Nonbipartite, Orbits) => Column::OrbitsNonBipartite,
        (Lc, Orbits) => Column::OrbitsLc,
        (Bipartite, Preserved) => Column::PreservedBipartite,
        (Nonbipartite, Preserved) => Column::PreservedNonBipartite,
        (Bipartite, SizeTwo) => Column::SizeTwoBipartite,
        (Nonbipartite, SizeTwo) => Column::SizeTwoNonBipartite,
        (Lc, SizeTwo) => Column::SizeTwoLc,
        (Lc, Preserved) => {
            return Err(Error::InvalidParameter("preserved counts are defined for ELC classes only".into()))
        }
    })
}

fn cmd_census(out: &mut Out, format: Option<Format>, args: CensusArgs) -> Result<(), Error> {
    let column = census_column(args.class, args.what)?;
    if args.from == 0 || args.from > args.to {
        return Err(Error::InvalidParameter(format!("empty order range {}..={}", args.from, args.to)));
    }
    if args.deep {
        eprintln!("warning: deep census runs can take hours and need several GB of memory");
    }
    let mut census = match &args.checkpoint {
        Some(dir) => Census::with_checkpoints(args.deep, dir),
        None => Census::new(args.deep),
    };
    let format = format.unwrap_or(Format::Csv);
    if format == Format::Graph6 {
        return Err(Error::InvalidParameter("census output is csv or json".into()));
    }
    if format == Format::Csv {
        // Rows are written as they complete so partial runs keep their output.
        out.line(&format!("n,{}", column.header()))?;
        for n in args.from..=args.to {
            let v = census.value(column, n)?;
            out.line(&format!("{n},{v}"))?;
            out.w.flush()?;
        }
        return Ok(());
    }
    let mut rows = Vec::new();
    for n in args.from..=args.to {
        rows.push(serde_json::json!({ "n": n, column.header(): census.value(column, n)? }));
    }
    out.json(&rows)
}

struct CensusArgs {
    class: CensusClass,
    what: CensusWhat,
    from: usize,
    to: usize,
    deep: bool,
    checkpoint: Option<PathBuf>,
}

#[derive(Serialize)]
struct ClassifyRow {
    n: usize,
    class: elc_core::GraphClass,
    graph6: String,
    spec: String,
}

fn cmd_classify(cli: &Cli, out: &mut Out, max_bip: usize, max_nonbip: usize, deep: bool) -> Result<(), Error> {
    let mut census = Census::new(deep);
    let entries = classify_preserved(&mut census, max_bip, max_nonbip)?;
    let unmatched = entries.iter().filter(|e| e.spec.is_none()).count();
    if unmatched > 0 {
        eprintln!("warning: {unmatched} graph(s) with ELC orbit of size one match no construction");
    }
    let rows: Vec<ClassifyRow> = entries
        .iter()
        .map(|e| ClassifyRow { n: e.n, class: e.class, graph6: e.key.graph6().to_string(), spec: e.spec_string() })
        .collect();
    match cli.format.unwrap_or(Format::Csv) {
        Format::Csv => out.csv(&rows),
        Format::Json => out.json(&rows),
        Format::Graph6 => rows.iter().try_for_each(|r| out.line(&r.graph6)),
    }
}

fn cmd_survey(cli: &Cli, out: &mut Out, files: &[PathBuf]) -> Result<(), Error> {
    let codes: Vec<(String, LinearCode)> = if files.is_empty() {
        builtin_self_dual_codes()?
    } else {
        files
            .iter()
            .map(|f| {
                let text = std::fs::read_to_string(f)?;
                let name = f.file_name().map_or_else(|| f.display().to_string(), |s| s.to_string_lossy().into_owned());
                Ok((name, LinearCode::new(BitMatrix::from_text(&text)?)?))
            })
            .collect::<Result<_, Error>>()?
    };
    let rows: Vec<SurveyRow> = self_dual_orbit_survey(&codes)?;
    match cli.format.unwrap_or(Format::Csv) {
        Format::Csv => out.csv(&rows),
        Format::Json => out.json(&rows),
        Format::Graph6 => Err(Error::InvalidParameter("survey output is csv or json".into())),
    }
}

/// Small checks that exercise every module; any failure is an invariant
/// violation.
fn cmd_selfcheck(cli: &Cli, out: &mut Out) -> Result<(), Error> {
    use elc_core::canonical_key;
    use elc_core::orbit::{elc_orbit, is_elc_preserved};
    let fail = |what: String| Err(Error::Invariant(what));
    let p4 = graph6::decode("Ch")?;
    if elc_orbit(&p4, None)?.size() != 2 {
        return fail("P4 orbit size".into());
    }
    out.line("ok  P4 has ELC orbit of size 2")?;
    for s in ["h3", "he3", "S-2(s3)", "C2(s3)", "Hkm(1,2)"] {
        let g = s.parse::<elc_core::ConstructionSpec>()?.build()?;
        if !is_elc_preserved(&g)? {
            return fail(format!("{s} is not preserved"));
        }
    }
    out.line("ok  named constructions are ELC-preserved")?;
    let mut census = Census::new(false);
    let b: Vec<u64> = (2..=8).map(|n| census.value(Column::OrbitsBipartite, n)).collect::<Result<_, _>>()?;
    if b != [1, 1, 2, 3, 8, 15, 43] {
        return fail(format!("bipartite orbit counts {b:?}"));
    }
    out.line("ok  bipartite orbit counts for n = 2..8")?;
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    for _ in 0..500 {
        let n = rng.random_range(2..=10);
        let edges: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.random_bool(0.25)).collect();
        let g = elc_core::Graph::from_edges(n, &edges)?;
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        if canonical_key(&g) != canonical_key(&g.relabel(&perm)?) {
            return fail("canonical form depends on labels".into());
        }
        for (u, v) in edges {
            if g.elc(u, v)? != g.elc_via_lc(u, v)? || g.elc(u, v)?.elc(u, v)? != g {
                return fail(format!("ELC identities on {{{u},{v}}}"));
            }
        }
    }
    out.line(&format!("ok  500 random graphs (seed {}) pass ELC and canonical checks", cli.seed))?;
    let h3 = elc_core::constructions::hamming_graph(3)?;
    let p = h3.bipartition().ok_or(Error::NotBipartite)?;
    let r = code_report(&h3, p.side(p.smaller_side()), None)?;
    if r.params.to_string() != "[7,3,4]" || r.dual_params.to_string() != "[7,4,3]" {
        return fail(format!("Hamming code parameters {} / {}", r.params, r.dual_params));
    }
    out.line("ok  Hamming code parameters [7,3,4] / [7,4,3]")
}

fn run(cli: Cli) -> Result<(), Error> {
    if let Some(j) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build_global()
            .map_err(|e| Error::InvalidParameter(e.to_string()))?;
    }
    let mut out = Out { w: io::BufWriter::new(io::stdout()) };
    match &cli.command {
        Command::Orbit { input, kind, dump } => cmd_orbit(&cli, &mut out, input, *kind, *dump)?,
        Command::Preserved { input } => cmd_preserved(&cli, &mut out, input)?,
        Command::Construct { spec, strict } => cmd_construct(&cli, &mut out, spec, *strict)?,
        Command::Code { input, side } => cmd_code(&cli, &mut out, input, *side)?,
        Command::Census { class, what, from, to, deep, checkpoint } => cmd_census(
            &mut out,
            cli.format,
            CensusArgs { class: *class, what: *what, from: *from, to: *to, deep: *deep, checkpoint: checkpoint.clone() },
        )?,
        Command::Classify { max_bipartite, max_nonbipartite, deep } => {
            cmd_classify(&cli, &mut out, *max_bipartite, *max_nonbipartite, *deep)?
        }
        Command::Survey { files } => cmd_survey(&cli, &mut out, files)?,
        Command::Selfcheck => cmd_selfcheck(&cli, &mut out)?,
    }
    out.w.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

//! Command-line interface over the voicegraph library.
//!
//! Exit codes: 0 success, 1 usage error, 2 computation infeasible
//! (enumeration budget exhausted or counter overflow), 3 census
//! reference mismatch in check mode.

use std::fmt::Write as _;
use std::fs;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use voicegraph::{
    betweenness_centrality, centrality_report, closeness_centrality, communicability,
    degree_centrality, eccentricity_summary, euler_classify, find_isomorphism,
    find_subgraph_isomorphism, hamiltonian_circuits, katz_centrality, parse_scale, regularity,
    run_census, spectral_radius, to_dot, CensusCategory, CensusCounts, CensusSummary, Eccentricity,
    GraphDocument, NameStyle, PitchClassSet, VoiceLeadingGraph, DEFAULT_ALPHA, DETAIL_HEADER,
};

#[derive(Parser)]
#[command(
    name = "voicegraph",
    version,
    about = "Parsimonious voice-leading graphs over pitch-class sets",
    long_about = "Builds the graph of triads of a scale, connected by single-step \
                  voice leading, and reports classical and network diagnostics.\n\
                  Scales are given as integer lists (\"0,2,4,5,7,9,11\"), 12-bit \
                  binary masks (\"101011010101\"), or preset names with an optional \
                  transpose suffix (\"harmonic-minor\", \"major@3\")."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a scale's voice-leading graph and render it
    Build {
        /// Scale specification
        scale: String,
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Classical diagnostics: degrees, eccentricity, traversability
    Metrics {
        scale: String,
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Step budget for Hamiltonian enumeration (0 = unlimited)
        #[arg(long, default_value_t = 2_000_000)]
        ham_cap: u64,
    },
    /// Centrality measures and communicability
    Centrality {
        scale: String,
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Katz attenuation factor
        #[arg(long, default_value_t = DEFAULT_ALPHA)]
        alpha: f64,
        /// Include the communicability matrix
        #[arg(long)]
        communicability: bool,
    },
    /// Classify the graphs of every pitch-class set in a size range
    Census {
        #[arg(long, default_value_t = 3)]
        min: usize,
        #[arg(long, default_value_t = 12)]
        max: usize,
        /// Write one detail record per set to this path
        #[arg(long)]
        details: Option<String>,
        /// Skip the reference comparison for the default bounds
        #[arg(long)]
        no_check: bool,
    },
    /// Compare two scales' graphs for isomorphism and embedding
    Compare {
        scale_a: String,
        scale_b: String,
        /// Render triad names with ♭ and ° instead of ASCII
        #[arg(long)]
        unicode: bool,
    },
    /// Count chord progressions of a fixed length between two triads
    Walks {
        scale: String,
        /// Starting triad: a name such as C, e or bo, or a vertex index
        from: String,
        /// Ending triad (same forms)
        to: String,
        /// Progression length in voice-leading steps
        length: u32,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Args)]
struct CommonArgs {
    /// Transpose the scale by this many semitones first
    #[arg(long, default_value_t = 0)]
    transpose: i32,
    /// Render triad names with ♭ and ° instead of ASCII
    #[arg(long)]
    unicode: bool,
}

impl CommonArgs {
    fn style(&self) -> NameStyle {
        if self.unicode {
            NameStyle::Unicode
        } else {
            NameStyle::Ascii
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Dot,
    Structured,
}

enum CliError {
    Usage(String),
    Infeasible(String),
    ReferenceMismatch(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Infeasible(_) => 2,
            CliError::ReferenceMismatch(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Infeasible(m) | CliError::ReferenceMismatch(m) => m,
        }
    }
}

fn main() -> ExitCode {
    // Die quietly when the reader of a pipe goes away, as other Unix
    // tools do, instead of panicking mid-print.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }

    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err)
            if matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) =>
        {
            let _ = err.print();
            return ExitCode::SUCCESS;
        }
        Err(err) => {
            let _ = err.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.code())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Build {
            scale,
            common,
            format,
        } => cmd_build(&scale, &common, format),
        Command::Metrics {
            scale,
            common,
            format,
            ham_cap,
        } => cmd_metrics(&scale, &common, format, ham_cap),
        Command::Centrality {
            scale,
            common,
            format,
            alpha,
            communicability,
        } => cmd_centrality(&scale, &common, format, alpha, communicability),
        Command::Census {
            min,
            max,
            details,
            no_check,
        } => cmd_census(min, max, details.as_deref(), no_check),
        Command::Compare {
            scale_a,
            scale_b,
            unicode,
        } => cmd_compare(&scale_a, &scale_b, unicode),
        Command::Walks {
            scale,
            from,
            to,
            length,
            common,
        } => cmd_walks(&scale, &from, &to, length, &common),
    }
}

fn load_graph(spec: &str, common: &CommonArgs) -> Result<VoiceLeadingGraph, CliError> {
    let scale = parse_scale(spec)
        .map_err(|e| CliError::Usage(format!("cannot parse scale `{spec}`: {e}")))?
        .transpose(common.transpose);
    Ok(VoiceLeadingGraph::build(scale))
}

fn name_of(g: &VoiceLeadingGraph, index: usize, style: NameStyle) -> String {
    g.vertices()[index].name(style)
}

/// Three decimals, halves rounded away from zero (table convention).
fn fmt3(value: f64) -> String {
    format!("{:.3}", (value * 1000.0).round() / 1000.0)
}

fn scale_line(g: &VoiceLeadingGraph, spec: &str) -> String {
    format!("scale: {} ({})", g.scale(), spec)
}

// ============================================================================
// build
// ============================================================================

fn cmd_build(spec: &str, common: &CommonArgs, format: Format) -> Result<(), CliError> {
    let g = load_graph(spec, common)?;
    let style = common.style();
    match format {
        Format::Dot => print!("{}", to_dot(&g, style)),
        Format::Structured => println!("{}", GraphDocument::new(&g, style).to_json()),
        Format::Table => {
            println!("{}", scale_line(&g, spec));
            println!("vertices: {}, edges: {}", g.order(), g.size());
            for (i, t) in g.vertices().iter().enumerate() {
                println!(
                    "  {i:>2}  {:<4} {:<10} {}",
                    t.name(style),
                    t.quality().label(),
                    t.pitches()
                );
            }
            if g.size() > 0 {
                println!("edges:");
                for &(i, j) in g.edges() {
                    println!("  {} -- {}", name_of(&g, i, style), name_of(&g, j, style));
                }
            }
            if g.order() >= 2 && !g.is_connected() {
                println!("warning: graph is disconnected");
            }
        }
    }
    Ok(())
}

// ============================================================================
// metrics
// ============================================================================

fn cmd_metrics(
    spec: &str,
    common: &CommonArgs,
    format: Format,
    ham_cap: u64,
) -> Result<(), CliError> {
    let g = load_graph(spec, common)?;
    let style = common.style();
    let summary = eccentricity_summary(&g);
    let budget = (ham_cap > 0).then_some(ham_cap);
    let hamiltonian = hamiltonian_circuits(&g, budget, false);

    match format {
        Format::Dot => {
            return Err(CliError::Usage(
                "metrics has no dot rendering; use build --format dot".to_string(),
            ))
        }
        Format::Structured => {
            let doc = GraphDocument::new(&g, style).with_eccentricity(&summary, g.is_connected());
            println!("{}", doc.to_json());
        }
        Format::Table => {
            println!("{}", scale_line(&g, spec));
            println!("vertices: {}, edges: {}", g.order(), g.size());
            let mut degrees = g.degrees();
            degrees.sort_unstable();
            println!(
                "degree sequence: [{}]",
                degrees
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            let reg = regularity(&g);
            match reg.degree {
                Some(d) if reg.is_regular => println!("regular: yes (degree {d})"),
                _ if reg.is_regular => println!("regular: yes (vacuously)"),
                _ => println!("regular: no"),
            }
            let show = |e: Option<Eccentricity>| match e {
                Some(Eccentricity::Finite(v)) => v.to_string(),
                Some(Eccentricity::Infinite) => "infinite".to_string(),
                None => "n/a".to_string(),
            };
            println!("radius: {}", show(summary.radius));
            println!("diameter: {}", show(summary.diameter));
            println!(
                "self-centred: {}",
                match summary.self_centred {
                    Some(true) => "yes",
                    Some(false) => "no",
                    None => "n/a",
                }
            );
            println!("Euler class: {}", euler_classify(&g).label());
            let qualifier = if hamiltonian.truncated { ">= " } else { "" };
            println!(
                "Hamiltonian circuits: {qualifier}{} undirected, {qualifier}{} directed{}",
                hamiltonian.undirected,
                hamiltonian.directed,
                if hamiltonian.truncated {
                    " (enumeration capped)"
                } else {
                    ""
                }
            );
            let names = |vs: &[usize]| {
                vs.iter()
                    .map(|&v| name_of(&g, v, style))
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            println!("central vertices: {}", names(&summary.central_vertices));
            println!(
                "peripheral vertices: {}",
                names(&summary.peripheral_vertices)
            );
        }
    }

    if hamiltonian.truncated {
        return Err(CliError::Infeasible(format!(
            "Hamiltonian enumeration exceeded the {ham_cap}-step budget; counts are lower bounds"
        )));
    }
    Ok(())
}

// ============================================================================
// centrality
// ============================================================================

fn cmd_centrality(
    spec: &str,
    common: &CommonArgs,
    format: Format,
    alpha: f64,
    with_communicability: bool,
) -> Result<(), CliError> {
    let g = load_graph(spec, common)?;
    let style = common.style();
    let n = g.order();

    if n == 0 {
        println!("{}", scale_line(&g, spec));
        println!("no triads: measures suppressed");
        return Ok(());
    }
    if n == 1 {
        println!("{}", scale_line(&g, spec));
        println!("single vertex: measures suppressed");
        return Ok(());
    }

    let adjacency = g.adjacency_matrix();
    let rho = spectral_radius(&adjacency)
        .map_err(|e| CliError::Usage(format!("spectral radius failed: {e}")))?;
    let katz = katz_centrality(&adjacency, alpha).map_err(|e| {
        CliError::Usage(format!(
            "{e}; pass --alpha with a value below {:.3}",
            1.0 / rho
        ))
    })?;
    let connected = g.is_connected();

    match format {
        Format::Dot => {
            return Err(CliError::Usage(
                "centrality has no dot rendering; use build --format dot".to_string(),
            ))
        }
        Format::Structured => {
            let mut doc = GraphDocument::new(&g, style);
            if connected && n >= 3 {
                let report =
                    centrality_report(&g, alpha).map_err(|e| CliError::Usage(e.to_string()))?;
                doc = doc.with_centrality(report);
            }
            if with_communicability {
                let c = communicability(&adjacency).map_err(|e| CliError::Usage(e.to_string()))?;
                doc = doc.with_communicability(&c);
            }
            println!("{}", doc.to_json());
        }
        Format::Table => {
            println!("{}", scale_line(&g, spec));
            println!("alpha: {alpha} (limit 1/rho = {:.3})", 1.0 / rho);
            let closeness = connected.then(|| closeness_centrality(&g).unwrap());
            let betweenness = (connected && n >= 3).then(|| betweenness_centrality(&g).unwrap());
            if !connected {
                println!("notice: graph disconnected; closeness and betweenness suppressed");
            }
            let dc = degree_centrality(&g).map_err(|e| CliError::Usage(e.to_string()))?;

            let width = g
                .vertices()
                .iter()
                .map(|t| t.name(style).chars().count())
                .max()
                .unwrap_or(5)
                .max(5);
            let mut header = format!("{:<width$}  deg  {:>12}", "triad", "deg-cent");
            let _ = write!(header, "  {:>9}  {:>11}", "closeness", "betweenness");
            let _ = write!(header, "  {:>8}  {:>9}", "katz", "katz-norm");
            println!("{header}");
            for (v, t) in g.vertices().iter().enumerate() {
                let opt = |x: Option<&Vec<f64>>| match x {
                    Some(values) => fmt3(values[v]),
                    None => "-".to_string(),
                };
                let fraction = format!("{}/{} = {}", g.degree(v), n - 1, fmt3(dc[v]));
                println!(
                    "{:<width$}  {:>3}  {:>12}  {:>9}  {:>11}  {:>8}  {:>9}",
                    t.name(style),
                    g.degree(v),
                    fraction,
                    opt(closeness.as_ref()),
                    opt(betweenness.as_ref()),
                    fmt3(katz.raw[v]),
                    fmt3(katz.normalized[v]),
                );
            }
            if with_communicability {
                let c = communicability(&adjacency).map_err(|e| CliError::Usage(e.to_string()))?;
                println!("communicability:");
                let names: Vec<String> = g.vertices().iter().map(|t| t.name(style)).collect();
                println!(
                    "{:<width$}  {}",
                    "",
                    names
                        .iter()
                        .map(|s| format!("{s:>7}"))
                        .collect::<Vec<_>>()
                        .join(" ")
                );
                for (i, name) in names.iter().enumerate() {
                    let row: Vec<String> = (0..n)
                        .map(|j| format!("{:>7}", fmt3(c.get(i, j))))
                        .collect();
                    println!("{name:<width$}  {}", row.join(" "));
                }
            }
        }
    }
    Ok(())
}

// ============================================================================
// census
// ============================================================================

fn cmd_census(
    min: usize,
    max: usize,
    details: Option<&str>,
    no_check: bool,
) -> Result<(), CliError> {
    let want_records = details.is_some() || (!no_check && (min, max) == (3, 12));
    let summary: CensusSummary =
        run_census(min, max, want_records).map_err(|e| CliError::Usage(e.to_string()))?;

    println!(
        "empty: {}, disconnected: {}, self-centred: {}, non-self-centred: {}",
        summary.counts.empty_graph,
        summary.counts.disconnected,
        summary.counts.self_centred,
        summary.counts.non_self_centred
    );
    println!("total: {}", summary.total_sets);

    if let Some(path) = details {
        let records = summary.records.as_ref().expect("records requested");
        let mut body = String::from(DETAIL_HEADER);
        body.push('\n');
        for record in records {
            body.push_str(&record.delimited_line());
            body.push('\n');
        }
        fs::write(path, body).map_err(|e| CliError::Usage(format!("cannot write {path}: {e}")))?;
        println!("details written to {path}");
    }

    if !no_check && (min, max) == (3, 12) {
        let expected = CensusCounts::REFERENCE_FULL;
        if summary.counts != expected {
            let records = summary.records.as_ref().expect("records requested");
            let mut audit = String::new();
            for category in [
                CensusCategory::EmptyGraph,
                CensusCategory::Disconnected,
                CensusCategory::SelfCentred,
                CensusCategory::NonSelfCentred,
            ] {
                if summary.counts.get(category) != expected.get(category) {
                    let masks: Vec<String> = records
                        .iter()
                        .filter(|r| r.category == category)
                        .take(20)
                        .map(|r| r.scale.mask_string())
                        .collect();
                    let _ = writeln!(
                        audit,
                        "{}: expected {}, got {}; masks: {}",
                        category,
                        expected.get(category),
                        summary.counts.get(category),
                        masks.join(" ")
                    );
                }
            }
            return Err(CliError::ReferenceMismatch(format!(
                "census counts differ from the reference values\n{audit}"
            )));
        }
        println!("reference check: ok");
    }
    Ok(())
}

// ============================================================================
// compare
// ============================================================================

fn cmd_compare(spec_a: &str, spec_b: &str, unicode: bool) -> Result<(), CliError> {
    let style = if unicode {
        NameStyle::Unicode
    } else {
        NameStyle::Ascii
    };
    let scale_a: PitchClassSet = parse_scale(spec_a)
        .map_err(|e| CliError::Usage(format!("cannot parse scale `{spec_a}`: {e}")))?;
    let scale_b: PitchClassSet = parse_scale(spec_b)
        .map_err(|e| CliError::Usage(format!("cannot parse scale `{spec_b}`: {e}")))?;
    let a = VoiceLeadingGraph::build(scale_a);
    let b = VoiceLeadingGraph::build(scale_b);
    println!(
        "A: {} ({} vertices, {} edges)",
        scale_a,
        a.order(),
        a.size()
    );
    println!(
        "B: {} ({} vertices, {} edges)",
        scale_b,
        b.order(),
        b.size()
    );

    if let Some(map) = find_isomorphism(&a, &b) {
        println!("isomorphic: yes");
        for (i, &j) in map.iter().enumerate() {
            println!("  {} -> {}", name_of(&a, i, style), name_of(&b, j, style));
        }
        return Ok(());
    }
    println!("isomorphic: no");

    // Try to embed the smaller graph into the larger one.
    let (small, big, small_label, big_label) = if (a.order(), a.size()) <= (b.order(), b.size()) {
        (&a, &b, "A", "B")
    } else {
        (&b, &a, "B", "A")
    };
    match find_subgraph_isomorphism(small, big) {
        Some(map) => {
            println!("subgraph embedding ({small_label} into {big_label}): yes");
            for (i, &j) in map.iter().enumerate() {
                println!(
                    "  {} -> {}",
                    name_of(small, i, style),
                    name_of(big, j, style)
                );
            }
        }
        None => println!("subgraph embedding ({small_label} into {big_label}): no"),
    }
    Ok(())
}

// ============================================================================
// walks
// ============================================================================

fn resolve_vertex(g: &VoiceLeadingGraph, token: &str) -> Result<usize, CliError> {
    if let Ok(index) = token.parse::<usize>() {
        if index < g.order() {
            return Ok(index);
        }
        return Err(CliError::Usage(format!(
            "vertex index {index} out of range (order {})",
            g.order()
        )));
    }
    for style in [NameStyle::Ascii, NameStyle::Unicode] {
        if let Some(i) = g.vertices().iter().position(|t| t.name(style) == token) {
            return Ok(i);
        }
    }
    Err(CliError::Usage(format!(
        "no triad named `{token}`; available: {}",
        g.vertices()
            .iter()
            .map(|t| t.name(NameStyle::Ascii))
            .collect::<Vec<_>>()
            .join(", ")
    )))
}

fn cmd_walks(
    spec: &str,
    from: &str,
    to: &str,
    length: u32,
    common: &CommonArgs,
) -> Result<(), CliError> {
    let g = load_graph(spec, common)?;
    let style = common.style();
    let from_index = resolve_vertex(&g, from)?;
    let to_index = resolve_vertex(&g, to)?;
    let count = g
        .count_walks(from_index, to_index, length)
        .map_err(|e| CliError::Infeasible(e.to_string()))?;
    println!(
        "walks of length {length} from {} to {}: {count}",
        name_of(&g, from_index, style),
        name_of(&g, to_index, style)
    );
    Ok(())
}

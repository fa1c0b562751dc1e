//! Command-line interface for the string-algebra toolkit.
//!
//! Every subcommand is a thin composition of library operations: load a
//! presentation (or a standalone automaton / word problem / order term),
//! run one pipeline stage, and print the result as text, JSON, or DOT.
//! Output is deterministic byte-for-byte for a fixed invocation. Exit
//! status is 0 on success, 1 on any module error (diagnostic on stderr),
//! and 2 on usage errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{Value, json};

use stringalg::automaton::Dfa;
use stringalg::error::Error;
use stringalg::exceptional::{DOrientation, Side, exceptional_report, surgery_dot};
use stringalg::hammock::{
    HammockAutomaton, build_hammock_automaton, build_rees_automaton, build_right_hammock_automaton,
    is_domestic,
};
use stringalg::presentation::{
    StringAlgebra, parse_presentation, validate_string_algebra, violation_report,
};
use stringalg::regular_orders::{format_term, normalize, parse_term, predicates};
use stringalg::strings::{
    BandOrientation, StringWord, Syllable, canonical_band_rotation, format_word, is_band,
    is_string, parse_word, source,
};
use stringalg::word_problems::{
    WordProblem, automaton_to_word_problem, expand_tree, expansion_to_json, format_expansion,
    format_frontier, format_word_problem, frontier, parse_word_problem, quasi_rational, solve_all,
};

#[derive(Parser)]
#[command(
    name = "stringalg",
    version,
    about = "String algebras: presentations, hammock automata, and linear order types"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    /// Human-readable text.
    #[default]
    Text,
    /// Versioned JSON document.
    Json,
    /// Graphviz DOT (graph-shaped outputs only).
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum SideArg {
    #[default]
    Left,
    Right,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum DOrientationArg {
    #[default]
    Target,
    Source,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum BandOrientationArg {
    #[default]
    RightmostDirect,
    LeftmostDirect,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a presentation and report string-algebra violations.
    Validate {
        /// Presentation JSON file.
        input: PathBuf,
    },
    /// Infer (or echo) the sign maps of a presentation.
    SignMaps {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Enumerate strings up to a length bound.
    Strings {
        input: PathBuf,
        /// Maximum number of syllables.
        #[arg(long, default_value_t = 4)]
        maxlen: usize,
        /// Only strings starting at this vertex.
        #[arg(long)]
        vertex: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Enumerate bands (canonical rotations) up to a length bound.
    Bands {
        input: PathBuf,
        /// Maximum number of syllables.
        #[arg(long, default_value_t = 6)]
        maxlen: usize,
        /// Which rotation represents a band.
        #[arg(long, value_enum, default_value_t)]
        band_orientation: BandOrientationArg,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Build the hammock automaton of an anchor.
    Hammock {
        input: PathBuf,
        /// Vertex of a trivial anchor (sign +1; use --anchor-string for
        /// full control).
        #[arg(long)]
        vertex: Option<String>,
        /// Explicit anchor word, e.g. "1_(v,-1)" or a string.
        #[arg(long)]
        anchor_string: Option<String>,
        /// Left or right hammock.
        #[arg(long, value_enum, default_value_t)]
        side: SideArg,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Build the string acceptor over arrow tokens.
    Rees {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Solve the hammock word problems and print order-type components.
    OrderType {
        input: PathBuf,
        /// Restrict to this vertex (both signs).
        #[arg(long)]
        vertex: Option<String>,
        /// Solve for one explicit anchor instead.
        #[arg(long)]
        anchor_string: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Classify automaton states (cycle and density flags).
    Classify {
        /// Automaton JSON, or a presentation (classifies every hammock).
        input: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Decide domesticity (no hammock contains a dense region).
    IsDomestic { input: PathBuf },
    /// Emit the word problem of a hammock automaton.
    WordProblem {
        input: PathBuf,
        #[arg(long)]
        vertex: Option<String>,
        #[arg(long)]
        anchor_string: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        side: SideArg,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Solve a standalone word problem (text or JSON).
    SolveWp {
        input: PathBuf,
        /// Solve only this unknown (default: all).
        #[arg(long)]
        unknown: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Expand a word problem into a bounded tree with its frontier.
    Expand {
        input: PathBuf,
        /// Unknown to expand.
        #[arg(long)]
        unknown: String,
        /// Expansion depth.
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Parse, normalize, and analyze an order term expression.
    Term {
        /// Term expression, e.g. "w + sh(w* + w) + w*".
        expr: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Report exceptional band points and the error term e.
    Exceptional {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        d_orientation: DOrientationArg,
        /// Vertex for the DOT rendering of one surgery.
        #[arg(long)]
        vertex: Option<String>,
        /// Side for the DOT rendering.
        #[arg(long, value_enum, default_value_t)]
        side: SideArg,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

/// Errors at the CLI layer: module failures (exit 1) vs misuse of the
/// command line that clap cannot catch (exit 2).
enum CliError {
    Module(Error),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        CliError::Module(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Module(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Module(Error::Io(e)))
}

fn load_algebra(path: &PathBuf) -> Result<StringAlgebra, CliError> {
    Ok(StringAlgebra::from_json(&read_input(path)?)?)
}

impl SideArg {
    fn to_side(self) -> Side {
        match self {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

/// Resolves the anchor selectors shared by hammock-shaped subcommands.
fn resolve_anchor(
    alg: &StringAlgebra,
    vertex: &Option<String>,
    anchor_string: &Option<String>,
) -> Result<StringWord, CliError> {
    if let Some(text) = anchor_string {
        return Ok(parse_word(alg, text)?);
    }
    if let Some(name) = vertex {
        let v = alg.presentation().vertex_id(name).ok_or(Error::UnknownReference {
            kind: "vertex",
            name: name.clone(),
            context: "anchor selection".into(),
        })?;
        return Ok(StringWord::trivial(v, 1));
    }
    Err(CliError::Usage("pass --vertex NAME or --anchor-string WORD".into()))
}

fn build_side_hammock(
    alg: &StringAlgebra,
    anchor: &StringWord,
    side: SideArg,
) -> Result<HammockAutomaton, CliError> {
    Ok(match side {
        SideArg::Left => build_hammock_automaton(alg, anchor)?,
        SideArg::Right => build_right_hammock_automaton(alg, anchor)?,
    })
}

/// Deterministic text rendering of an automaton: alphabet, start, then one
/// line per state with its transitions.
fn automaton_text(dfa: &Dfa) -> String {
    let mut out = String::new();
    out.push_str(&format!("alphabet: {}\n", dfa.alphabet.join(" ")));
    match dfa.start {
        Some(s) => out.push_str(&format!("start: {s}\n")),
        None => out.push_str("start: none\n"),
    }
    for (q, state) in dfa.states.iter().enumerate() {
        let marker = if state.accepting { "accepting" } else { "rejecting" };
        let trans: Vec<String> = state
            .trans
            .iter()
            .map(|(letter, to)| format!("{}->{}", dfa.alphabet[*letter], to))
            .collect();
        out.push_str(&format!("{q} [{}] {marker}: {}\n", state.label, trans.join(" ")));
    }
    out
}

fn print_automaton(dfa: &Dfa, format: Format) {
    match format {
        Format::Text => print!("{}", automaton_text(dfa)),
        Format::Json => println!("{}", dfa.to_json()),
        Format::Dot => print!("{}", dfa.to_dot()),
    }
}

/// Enumerates all strings with at most `maxlen` syllables, ordered by
/// length then token sequence.
fn enumerate_strings(alg: &StringAlgebra, maxlen: usize) -> Vec<StringWord> {
    let arrows = alg.presentation().arrows().len();
    let mut layer: Vec<StringWord> = Vec::new();
    for a in 0..arrows {
        for syl in [Syllable::direct(a), Syllable::inverted(a)] {
            let w = StringWord::from_syllables(vec![syl]);
            if is_string(alg, &w) {
                layer.push(w);
            }
        }
    }
    let mut all = Vec::new();
    let mut len = 1;
    while len <= maxlen && !layer.is_empty() {
        all.extend(layer.iter().cloned());
        let mut next = Vec::new();
        for w in &layer {
            for a in 0..arrows {
                for syl in [Syllable::direct(a), Syllable::inverted(a)] {
                    let mut syllables = vec![syl];
                    syllables.extend_from_slice(w.syllables());
                    let extended = StringWord::from_syllables(syllables);
                    if is_string(alg, &extended) {
                        next.push(extended);
                    }
                }
            }
        }
        layer = next;
        len += 1;
    }
    all.sort_by_key(|w| (w.len(), format_word(alg, w)));
    all
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Validate { input } => {
            let (presentation, _signs) = parse_presentation(&read_input(&input)?)?;
            let violations = validate_string_algebra(&presentation);
            if violations.is_empty() {
                println!("ok");
                Ok(())
            } else {
                Err(CliError::Module(Error::InvalidPresentation {
                    report: violation_report(&violations),
                }))
            }
        }
        Command::SignMaps { input, format } => {
            let alg = load_algebra(&input)?;
            let p = alg.presentation();
            match format {
                Format::Json => println!("{}", alg.signs().to_json(p)),
                _ => {
                    for (a, arrow) in p.arrows().iter().enumerate() {
                        println!(
                            "{}: sigma={:+} tau={:+}",
                            arrow.name,
                            alg.signs().sigma(a),
                            alg.signs().tau(a)
                        );
                    }
                }
            }
            Ok(())
        }
        Command::Strings { input, maxlen, vertex, format } => {
            let alg = load_algebra(&input)?;
            let filter = match &vertex {
                Some(name) => {
                    Some(alg.presentation().vertex_id(name).ok_or(Error::UnknownReference {
                        kind: "vertex",
                        name: name.clone(),
                        context: "string enumeration".into(),
                    })?)
                }
                None => None,
            };
            let words: Vec<StringWord> = enumerate_strings(&alg, maxlen)
                .into_iter()
                .filter(|w| filter.is_none_or(|v| source(&alg, w) == v))
                .collect();
            match format {
                Format::Json => {
                    let items: Vec<Value> =
                        words.iter().map(|w| json!(format_word(&alg, w))).collect();
                    println!(
                        "{}",
                        json!({ "schema_version": 1, "maxlen": maxlen, "strings": items })
                    );
                }
                _ => {
                    for w in &words {
                        println!("{}", format_word(&alg, w));
                    }
                }
            }
            Ok(())
        }
        Command::Bands { input, maxlen, band_orientation, format } => {
            let alg = load_algebra(&input)?;
            let orientation = match band_orientation {
                BandOrientationArg::RightmostDirect => BandOrientation::RightmostDirect,
                BandOrientationArg::LeftmostDirect => BandOrientation::LeftmostDirect,
            };
            let mut canon: Vec<String> = Vec::new();
            for w in enumerate_strings(&alg, maxlen) {
                if is_band(&alg, &w) {
                    let rotation = canonical_band_rotation(&alg, &w, orientation)?;
                    canon.push(format_word(&alg, &rotation));
                }
            }
            canon.sort_by_key(|w| (w.len(), w.clone()));
            canon.dedup();
            match format {
                Format::Json => {
                    println!("{}", json!({ "schema_version": 1, "maxlen": maxlen, "bands": canon }))
                }
                _ => {
                    for w in &canon {
                        println!("{w}");
                    }
                }
            }
            Ok(())
        }
        Command::Hammock { input, vertex, anchor_string, side, format } => {
            let alg = load_algebra(&input)?;
            let anchor = resolve_anchor(&alg, &vertex, &anchor_string)?;
            let hammock = build_side_hammock(&alg, &anchor, side)?;
            print_automaton(&hammock.dfa, format);
            Ok(())
        }
        Command::Rees { input, format } => {
            let alg = load_algebra(&input)?;
            print_automaton(&build_rees_automaton(&alg), format);
            Ok(())
        }
        Command::OrderType { input, vertex, anchor_string, format } => {
            let alg = load_algebra(&input)?;
            let anchors = order_type_anchors(&alg, &vertex, &anchor_string)?;
            let mut sections: Vec<Value> = Vec::new();
            let mut text = String::new();
            for anchor in anchors {
                let hammock = build_hammock_automaton(&alg, &anchor)?;
                let (problem, start) = automaton_to_word_problem(&hammock.dfa)?;
                let solved = solve_all(&problem)?;
                let anchor_name = format_word(&alg, &anchor);
                text.push_str(&format!("# anchor {anchor_name} start {start}\n"));
                let mut components = serde_json::Map::new();
                for (name, term) in &solved {
                    let rendered = format_term(term);
                    let marker = if *name == start { "  [start]" } else { "" };
                    text.push_str(&format!("{name} = {rendered}{marker}\n"));
                    components.insert(name.clone(), json!(rendered));
                }
                sections.push(json!({
                    "anchor": anchor_name,
                    "start": start,
                    "components": components,
                }));
            }
            match format {
                Format::Json => {
                    println!("{}", json!({ "schema_version": 1, "hammocks": sections }))
                }
                _ => print!("{text}"),
            }
            Ok(())
        }
        Command::Classify { input, format } => {
            let content = read_input(&input)?;
            let value: Value =
                serde_json::from_str(&content).map_err(|e| CliError::Module(json_syntax(&e)))?;
            if value.get("states").is_some() {
                let dfa = Dfa::from_json(&value)?;
                print_classification(&dfa, None, format);
            } else {
                let alg = StringAlgebra::from_json(&content)?;
                let p = alg.presentation();
                let mut first = true;
                for v in 0..p.vertices().len() {
                    for i in [1i8, -1] {
                        let anchor = StringWord::trivial(v, i);
                        let hammock = build_hammock_automaton(&alg, &anchor)?;
                        let header = format!("hammock {}", format_word(&alg, &anchor));
                        if format == Format::Text && !first {
                            println!();
                        }
                        first = false;
                        print_classification(&hammock.dfa, Some(&header), format);
                    }
                }
            }
            Ok(())
        }
        Command::IsDomestic { input } => {
            let alg = load_algebra(&input)?;
            println!("{}", is_domestic(&alg));
            Ok(())
        }
        Command::WordProblem { input, vertex, anchor_string, side, format } => {
            let alg = load_algebra(&input)?;
            let anchor = resolve_anchor(&alg, &vertex, &anchor_string)?;
            let hammock = build_side_hammock(&alg, &anchor, side)?;
            let (problem, start) = automaton_to_word_problem(&hammock.dfa)?;
            match format {
                Format::Json => {
                    let mut doc = problem.to_json();
                    doc["start"] = json!(start);
                    println!("{doc}");
                }
                _ => {
                    println!("# start {start}");
                    print!("{}", format_word_problem(&problem));
                }
            }
            Ok(())
        }
        Command::SolveWp { input, unknown, format } => {
            let problem = load_word_problem(&input)?;
            let solved = solve_all(&problem)?;
            let selected: Vec<(String, stringalg::OrderTerm)> = match &unknown {
                Some(name) => {
                    let found = solved.iter().find(|(n, _)| n == name).cloned().ok_or(
                        Error::UnknownReference {
                            kind: "unknown",
                            name: name.clone(),
                            context: "solve".into(),
                        },
                    )?;
                    vec![found]
                }
                None => solved,
            };
            match format {
                Format::Json => {
                    let mut map = serde_json::Map::new();
                    for (name, term) in &selected {
                        map.insert(name.clone(), json!(format_term(term)));
                    }
                    println!(
                        "{}",
                        json!({
                            "schema_version": 1,
                            "quasi_rational": quasi_rational(&problem),
                            "solution": map,
                        })
                    );
                }
                _ => {
                    for (name, term) in &selected {
                        println!("{name} = {}", format_term(term));
                    }
                }
            }
            Ok(())
        }
        Command::Expand { input, unknown, depth, format } => {
            let problem = load_word_problem(&input)?;
            let tree = expand_tree(&problem, &unknown, depth)?;
            let word = frontier(&tree);
            match format {
                Format::Json => println!(
                    "{}",
                    json!({
                        "schema_version": 1,
                        "unknown": unknown,
                        "depth": depth,
                        "tree": expansion_to_json(&problem, &tree),
                        "frontier": format_frontier(&problem, &word),
                    })
                ),
                _ => {
                    println!("{}", format_expansion(&problem, &tree));
                    println!("frontier: {}", format_frontier(&problem, &word));
                }
            }
            Ok(())
        }
        Command::Term { expr, format } => {
            let term = parse_term(&expr)?;
            let normal = normalize(&term);
            let preds = predicates(&normal);
            let dfa = stringalg::term_to_automaton(&normal);
            match format {
                Format::Json => println!(
                    "{}",
                    json!({
                        "schema_version": 1,
                        "input": format_term(&term),
                        "normalized": format_term(&normal),
                        "predicates": preds,
                        "automaton": dfa.to_json(),
                    })
                ),
                Format::Dot => print!("{}", dfa.to_dot()),
                Format::Text => {
                    println!("normalized: {}", format_term(&normal));
                    println!(
                        "empty: {}  finite: {}  cardinality: {}",
                        preds.empty,
                        preds.finite,
                        preds.cardinality.map_or("none".to_string(), |c| c.to_string())
                    );
                    println!(
                        "has_least: {}  has_greatest: {}  consecutive_pair: {}",
                        preds.has_least, preds.has_greatest, preds.has_consecutive_pair
                    );
                    println!("scattered: {}  is_eta: {}", preds.scattered, preds.is_eta);
                }
            }
            Ok(())
        }
        Command::Exceptional { input, d_orientation, vertex, side, format } => {
            let alg = load_algebra(&input)?;
            let orientation = match d_orientation {
                DOrientationArg::Target => DOrientation::TargetCoupled,
                DOrientationArg::Source => DOrientation::SourceCoupled,
            };
            match format {
                Format::Dot => {
                    let Some(vertex) = vertex else {
                        return Err(CliError::Usage("DOT rendering needs --vertex NAME".into()));
                    };
                    print!("{}", surgery_dot(&alg, &vertex, 1, side.to_side(), orientation)?);
                }
                Format::Json => {
                    let report = exceptional_report(&alg, orientation)?;
                    println!("{}", report.to_json(&alg));
                }
                Format::Text => {
                    let report = exceptional_report(&alg, orientation)?;
                    println!("e = {}", report.e);
                    for point in &report.band_points {
                        println!(
                            "vertex {} band {}: left={} right={}",
                            point.vertex,
                            point.word,
                            point.left_exceptional,
                            point.right_exceptional
                        );
                    }
                    let rejected: Vec<String> =
                        report.audits.iter().flat_map(|a| a.rejected.iter().cloned()).collect();
                    if !rejected.is_empty() {
                        println!("rejected candidates: {}", rejected.join(" "));
                    }
                }
            }
            Ok(())
        }
    }
}

/// Anchors examined by the order-type subcommand: an explicit anchor, both
/// signs of one vertex, or both signs of every vertex.
fn order_type_anchors(
    alg: &StringAlgebra,
    vertex: &Option<String>,
    anchor_string: &Option<String>,
) -> Result<Vec<StringWord>, CliError> {
    if let Some(text) = anchor_string {
        return Ok(vec![parse_word(alg, text)?]);
    }
    let p = alg.presentation();
    let vertices: Vec<usize> = match vertex {
        Some(name) => vec![p.vertex_id(name).ok_or(Error::UnknownReference {
            kind: "vertex",
            name: name.clone(),
            context: "order type".into(),
        })?],
        None => (0..p.vertices().len()).collect(),
    };
    Ok(vertices
        .into_iter()
        .flat_map(|v| [StringWord::trivial(v, 1), StringWord::trivial(v, -1)])
        .collect())
}

/// Loads a word problem from a file, sniffing JSON vs line format.
fn load_word_problem(path: &PathBuf) -> Result<WordProblem, CliError> {
    let content = read_input(path)?;
    if content.trim_start().starts_with('{') {
        let value: Value =
            serde_json::from_str(&content).map_err(|e| CliError::Module(json_syntax(&e)))?;
        Ok(WordProblem::from_json(&value)?)
    } else {
        Ok(parse_word_problem(&content)?)
    }
}

/// Wraps a `serde_json` error with its source position.
fn json_syntax(err: &serde_json::Error) -> Error {
    Error::Syntax { line: err.line(), column: err.column(), message: err.to_string() }
}

fn print_classification(dfa: &Dfa, header: Option<&str>, format: Format) {
    let classes = dfa.classify_states();
    let flags = dfa.linguage_flags();
    match format {
        Format::Json => {
            let states: Vec<Value> = dfa
                .states
                .iter()
                .zip(&classes)
                .map(|(state, c)| {
                    json!({
                        "label": state.label,
                        "omega": c.omega,
                        "omega_bar": c.omega_bar,
                        "eta": c.eta,
                        "eta_bar": c.eta_bar,
                    })
                })
                .collect();
            let mut doc = json!({
                "schema_version": 1,
                "states": states,
                "language": {
                    "empty": flags.empty,
                    "finite": flags.finite,
                    "scattered": flags.scattered,
                },
            });
            if let Some(h) = header {
                doc["hammock"] = json!(h.trim_start_matches("hammock "));
            }
            println!("{doc}");
        }
        _ => {
            if let Some(h) = header {
                println!("{h}");
            }
            for (q, (state, c)) in dfa.states.iter().zip(&classes).enumerate() {
                println!(
                    "{q} [{}] omega={} omega_bar={} eta={} eta_bar={}",
                    state.label, c.omega, c.omega_bar, c.eta, c.eta_bar
                );
            }
            println!(
                "language: empty={} finite={} scattered={}",
                flags.empty, flags.finite, flags.scattered
            );
        }
    }
}

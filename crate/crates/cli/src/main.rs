//! Command-line front end.
//!
//! Exit codes: 0 for true/yes/success, 1 for false/no, 2 for unknown or a
//! limit hit, 3 for input errors. Diagnostics go to stderr only.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use braidmono::factorization::{Direction, Factorization};
use braidmono::garside::normal_form;
use braidmono::invariants::{
    chern_invariants, cross_check_c2, geography_checks, moishezon_family, BranchCurveData,
};
use braidmono::monodromy::MonodromyMorphism;
use braidmono::search::{
    hurwitz_equivalent, hurwitz_orbit, EquivOptions, Equivalence, SearchLimits,
};
use braidmono::text::{
    parse_braid_word, parse_factorization, parse_theta, render_braid_word, render_factorization,
    FactorizationFile,
};
use braidmono::BraidWord;

#[derive(Parser)]
#[command(
    name = "braidmono",
    version,
    about = "Workbench for braid monodromy factorizations: Garside normal forms, Hurwitz moves, liftability, and branch-curve invariants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    Left,
    Right,
}

impl From<DirectionArg> for Direction {
    fn from(d: DirectionArg) -> Direction {
        match d {
            DirectionArg::Left => Direction::Left,
            DirectionArg::Right => Direction::Right,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Garside left-greedy normal form of a braid word
    Nf { word: String },
    /// Word problem: are two braid words the same braid?
    Eq { left: String, right: String },
    /// Product of braid words, freely reduced
    Product {
        #[arg(required = true, num_args = 2..)]
        words: Vec<String>,
    },
    /// The standard factorization of Delta^2 into d(d-1) tangencies
    F0 {
        #[arg(long)]
        strands: usize,
        /// Attach a monodromy line to the output file
        #[arg(long)]
        theta: Option<String>,
    },
    /// Apply one Hurwitz move to a factorization file
    Hurwitz {
        file: PathBuf,
        /// 1-based position of the move
        #[arg(long)]
        at: usize,
        #[arg(long, value_enum)]
        dir: DirectionArg,
    },
    /// Apply seeded pseudo-random Hurwitz moves
    Scramble {
        file: PathBuf,
        #[arg(long)]
        moves: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Enumerate the Hurwitz orbit breadth-first
    Orbit {
        file: PathBuf,
        #[arg(long, default_value_t = 100_000)]
        max_states: usize,
        /// Prune states containing a factor of canonical length above this
        #[arg(long)]
        max_conjugator_length: Option<usize>,
    },
    /// Decide Hurwitz equivalence of two factorization files
    Equiv {
        left: PathBuf,
        right: PathBuf,
        /// Also search over global conjugations up to the bound
        #[arg(long)]
        conjugation: bool,
        /// Canonical-length bound for global conjugators
        #[arg(long, default_value_t = 2)]
        conjugator_bound: usize,
        /// Restrict to the liftable setting of the supplied or embedded theta
        #[arg(long)]
        liftable: bool,
        #[arg(long)]
        theta: Option<String>,
        #[arg(long, default_value_t = 100_000)]
        max_states: usize,
        /// Print a replayable move witness on success
        #[arg(long)]
        witness: bool,
    },
    /// Liftability of a factorization file (or a single braid via --word)
    Liftable {
        file: Option<PathBuf>,
        #[arg(long, conflicts_with = "file")]
        word: Option<String>,
        #[arg(long)]
        theta: Option<String>,
    },
    /// Validation report for a monodromy morphism
    ValidateTheta {
        #[arg(long)]
        theta: String,
        #[arg(long)]
        machine: bool,
    },
    /// Branch-curve invariants from a file or from raw curve data
    Invariants {
        file: Option<PathBuf>,
        #[arg(long)]
        theta: Option<String>,
        #[arg(long, conflicts_with = "file")]
        degree: Option<i64>,
        #[arg(long, default_value_t = 0)]
        nodes_pos: i64,
        #[arg(long, default_value_t = 0)]
        nodes_neg: i64,
        #[arg(long, default_value_t = 0)]
        cusps: i64,
        #[arg(long)]
        cover: Option<i64>,
        #[arg(long)]
        machine: bool,
    },
    /// Geography checks on curve data
    Geography {
        #[arg(long)]
        degree: i64,
        #[arg(long, default_value_t = 0)]
        nodes_pos: i64,
        #[arg(long, default_value_t = 0)]
        nodes_neg: i64,
        #[arg(long, default_value_t = 0)]
        cusps: i64,
        #[arg(long)]
        cover: Option<i64>,
        #[arg(long)]
        machine: bool,
    },
    /// The cuspidal curve family indexed by p >= 2
    Moishezon {
        p: i64,
        #[arg(long)]
        machine: bool,
    },
    /// Append standard-factorization copies (raises the half-turn target)
    Stabilize {
        file: PathBuf,
        #[arg(long)]
        times: u32,
    },
    /// Fiber sum: factors of the first file followed by the second
    Concat {
        left: PathBuf,
        right: PathBuf,
        /// Require both halves liftable for the supplied or embedded theta
        #[arg(long)]
        theta: Option<String>,
        #[arg(long)]
        check_theta: bool,
    },
    /// Create or cancel a node pair
    NodePair {
        #[command(subcommand)]
        action: NodePairAction,
    },
}

#[derive(Subcommand)]
enum NodePairAction {
    /// Insert a cancelling pair (+2, -2) at a 1-based position
    Create {
        file: PathBuf,
        #[arg(long)]
        at: usize,
        /// Conjugator of the positive node (braid word body or headed word)
        #[arg(long)]
        conj: String,
        /// Conjugator of the negative node; defaults to --conj
        #[arg(long)]
        conj2: Option<String>,
        #[arg(long)]
        theta: Option<String>,
    },
    /// Remove the cancelling pair at positions at, at+1
    Cancel {
        file: PathBuf,
        #[arg(long)]
        at: usize,
    },
}

/// Anything that ends the run: a final exit code or an input error.
enum Outcome {
    Code(u8),
    Fail(String),
}

fn fail(err: impl std::fmt::Display) -> Outcome {
    Outcome::Fail(err.to_string())
}

fn read_file(path: &Path) -> Result<FactorizationFile, Outcome> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| fail(format!("{}: {e}", path.display())))?;
    parse_factorization(&text).map_err(|e| fail(format!("{}: {e}", path.display())))
}

fn parse_word_arg(text: &str, strands: Option<usize>) -> Result<BraidWord, Outcome> {
    match strands {
        Some(d) if !text.trim_start().starts_with("d=") => {
            braidmono::text::parse_braid_body(text, d, 1).map_err(fail)
        }
        _ => parse_braid_word(text).map_err(fail),
    }
}

/// Resolves a morphism from an explicit flag or from embedded file lines.
/// An explicit flag wins; two embedded morphisms must agree.
fn resolve_theta(
    flag: &Option<String>,
    embedded: &[&Option<MonodromyMorphism>],
) -> Result<Option<MonodromyMorphism>, Outcome> {
    if let Some(text) = flag {
        return Ok(Some(parse_theta(text).map_err(fail)?));
    }
    let mut found: Option<MonodromyMorphism> = None;
    for theta in embedded.iter().filter_map(|t| t.as_ref()) {
        match &found {
            Some(existing) if existing != theta => {
                return Err(fail("embedded morphisms disagree; pass --theta explicitly"));
            }
            _ => found = Some(theta.clone()),
        }
    }
    Ok(found)
}

fn emit(pairs: &[(&str, String)], machine: bool) {
    if machine {
        for (key, value) in pairs {
            println!("{key}={value}");
        }
    } else {
        let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (key, value) in pairs {
            println!("{key}:{} {value}", " ".repeat(width - key.len()));
        }
    }
}

fn print_file(file: &FactorizationFile) -> Result<Outcome, Outcome> {
    print!("{}", render_factorization(file).map_err(fail)?);
    Ok(Outcome::Code(0))
}

fn curve_pairs(data: &BranchCurveData) -> Vec<(&'static str, String)> {
    let mut pairs = vec![
        ("degree", data.degree.to_string()),
        ("nodes-positive", data.nodes_pos.to_string()),
        ("nodes-negative", data.nodes_neg.to_string()),
        ("nodes-signed", data.signed_nodes().to_string()),
        ("cusps", data.cusps.to_string()),
        ("genus", data.genus().to_string()),
        ("tangencies", data.tangencies().to_string()),
    ];
    if let Some(n) = data.cover_degree {
        pairs.push(("cover-degree", n.to_string()));
    }
    pairs
}

fn run(command: Command) -> Result<Outcome, Outcome> {
    match command {
        Command::Nf { word } => {
            let w = parse_word_arg(&word, None)?;
            let nf = normal_form(&w);
            println!("strands: {}", nf.strands());
            println!("inf: {}", nf.delta_power());
            println!("canonical-length: {}", nf.canonical_length());
            for index in 0..nf.canonical_length() {
                let word = nf.factor_word(index);
                println!("factor: {}", braidmono::text::render_braid_body(&word));
            }
            Ok(Outcome::Code(0))
        }
        Command::Eq { left, right } => {
            let l = parse_word_arg(&left, None)?;
            let r = parse_word_arg(&right, Some(l.strands()))?;
            let equal = braidmono::words_equal(&l, &r).map_err(fail)?;
            println!("{}", if equal { "equal" } else { "not-equal" });
            Ok(Outcome::Code(if equal { 0 } else { 1 }))
        }
        Command::Product { words } => {
            let first = parse_word_arg(&words[0], None)?;
            let mut product = first.clone();
            for text in &words[1..] {
                let next = parse_word_arg(text, Some(first.strands()))?;
                product = product.multiply(&next).map_err(fail)?;
            }
            println!("{}", render_braid_word(&product.free_reduced()));
            Ok(Outcome::Code(0))
        }
        Command::F0 { strands, theta } => {
            let factorization = Factorization::standard(strands).map_err(fail)?;
            let theta = match theta {
                Some(text) => Some(parse_theta(&text).map_err(fail)?),
                None => None,
            };
            print_file(&FactorizationFile {
                factorization,
                theta,
            })
        }
        Command::Hurwitz { file, at, dir } => {
            let mut parsed = read_file(&file)?;
            parsed.factorization = parsed
                .factorization
                .hurwitz_move(at, dir.into())
                .map_err(fail)?;
            print_file(&parsed)
        }
        Command::Scramble { file, moves, seed } => {
            let mut parsed = read_file(&file)?;
            parsed.factorization = parsed.factorization.scramble(moves, seed).map_err(fail)?;
            print_file(&parsed)
        }
        Command::Orbit {
            file,
            max_states,
            max_conjugator_length,
        } => {
            let parsed = read_file(&file)?;
            let limits = SearchLimits {
                max_states,
                max_conjugator_length,
            };
            let report = hurwitz_orbit(&parsed.factorization, &limits).map_err(fail)?;
            println!("visited: {}", report.visited_count);
            println!("exhausted: {}", report.frontier_exhausted);
            match report.limit_hit {
                Some(limit) => println!("limit: {limit}"),
                None => println!("limit: none"),
            }
            for key in &report.representatives {
                println!("representative: {key}");
            }
            Ok(Outcome::Code(if report.frontier_exhausted { 0 } else { 2 }))
        }
        Command::Equiv {
            left,
            right,
            conjugation,
            conjugator_bound,
            liftable,
            theta,
            max_states,
            witness,
        } => {
            let f1 = read_file(&left)?;
            let f2 = read_file(&right)?;
            let resolved = resolve_theta(&theta, &[&f1.theta, &f2.theta])?;
            if liftable && resolved.is_none() {
                return Err(fail("--liftable needs a morphism (--theta or embedded)"));
            }
            let options = EquivOptions {
                allow_global_conjugation: conjugation,
                conjugator_bound,
                restrict_liftable: if liftable { resolved } else { None },
            };
            let limits = SearchLimits {
                max_states,
                ..SearchLimits::default()
            };
            let outcome =
                hurwitz_equivalent(&f1.factorization, &f2.factorization, &options, &limits)
                    .map_err(fail)?;
            match outcome {
                Equivalence::Yes(w) => {
                    if !w.verify(&f1.factorization, &f2.factorization).map_err(fail)? {
                        return Err(fail("internal error: witness failed to replay"));
                    }
                    println!("result: yes");
                    if witness {
                        if let Some(b) = &w.conjugator {
                            println!("conjugator: {}", render_braid_word(b));
                        }
                        for mv in &w.moves {
                            println!("move: {mv}");
                        }
                    }
                    Ok(Outcome::Code(0))
                }
                Equivalence::No(reason) => {
                    println!("result: no");
                    println!("reason: {reason}");
                    Ok(Outcome::Code(1))
                }
                Equivalence::Unknown(limit) => {
                    println!("result: unknown");
                    println!("limit: {limit}");
                    Ok(Outcome::Code(2))
                }
            }
        }
        Command::Liftable { file, word, theta } => {
            let (liftable, resolved_theta);
            match (file, word) {
                (Some(path), None) => {
                    let parsed = read_file(&path)?;
                    resolved_theta = resolve_theta(&theta, &[&parsed.theta])?
                        .ok_or_else(|| fail("no morphism: pass --theta or embed a theta line"))?;
                    liftable = parsed
                        .factorization
                        .is_liftable(&resolved_theta)
                        .map_err(fail)?;
                }
                (None, Some(text)) => {
                    resolved_theta = resolve_theta(&theta, &[])?
                        .ok_or_else(|| fail("no morphism: pass --theta"))?;
                    let w = parse_word_arg(&text, Some(resolved_theta.degree()))?;
                    liftable = resolved_theta.is_liftable(&w).map_err(fail)?;
                }
                _ => return Err(fail("pass exactly one of <FILE> or --word")),
            }
            println!("liftable: {liftable}");
            Ok(Outcome::Code(if liftable { 0 } else { 1 }))
        }
        Command::ValidateTheta { theta, machine } => {
            let morphism = parse_theta(&theta).map_err(fail)?;
            let report = morphism.validate();
            emit(
                &[
                    ("all-transpositions", report.all_transpositions.to_string()),
                    ("transitive", report.transitive.to_string()),
                    ("surjective", report.surjective.to_string()),
                    ("product-is-identity", report.product_is_identity.to_string()),
                    ("degree-even", report.degree_even.to_string()),
                    ("valid", report.is_valid().to_string()),
                ],
                machine,
            );
            Ok(Outcome::Code(if report.is_valid() { 0 } else { 1 }))
        }
        Command::Invariants {
            file,
            theta,
            degree,
            nodes_pos,
            nodes_neg,
            cusps,
            cover,
            machine,
        } => {
            let data = match (file, degree) {
                (Some(path), None) => {
                    let parsed = read_file(&path)?;
                    let resolved = resolve_theta(&theta, &[&parsed.theta])?
                        .ok_or_else(|| fail("no morphism: pass --theta or embed a theta line"))?;
                    let (data, _) =
                        braidmono::invariants::factorization_invariants(
                            &parsed.factorization,
                            &resolved,
                        )
                        .map_err(fail)?;
                    data
                }
                (None, Some(d)) => {
                    BranchCurveData::new(d, nodes_pos, nodes_neg, cusps, cover).map_err(fail)?
                }
                _ => return Err(fail("pass exactly one of <FILE> or --degree")),
            };
            let set = chern_invariants(&data).map_err(fail)?;
            let mut pairs = curve_pairs(&data);
            pairs.extend([
                ("omega-sq", set.omega_sq.to_string()),
                ("c1-omega", set.c1_omega.to_string()),
                ("c1-sq", set.c1_sq.to_string()),
                ("c2", set.c2.to_string()),
                ("chi", set.euler.to_string()),
                ("sigma", set.signature.to_string()),
                ("fiber-genus", set.fiber_genus.to_string()),
            ]);
            if set.fiber_genus >= 0 {
                pairs.push((
                    "c2-cross-check",
                    cross_check_c2(&data).map_err(fail)?.to_string(),
                ));
            }
            emit(&pairs, machine);
            Ok(Outcome::Code(0))
        }
        Command::Geography {
            degree,
            nodes_pos,
            nodes_neg,
            cusps,
            cover,
            machine,
        } => {
            let data =
                BranchCurveData::new(degree, nodes_pos, nodes_neg, cusps, cover).map_err(fail)?;
            let report = geography_checks(&data);
            let mut pairs = vec![
                ("degree-even", report.degree_even.to_string()),
                (
                    "cusps-multiple-of-three",
                    report.cusps_multiple_of_three.to_string(),
                ),
                ("bmy-satisfied", report.bmy_satisfied.to_string()),
                ("genus-nonneg", report.genus_nonneg.to_string()),
                ("tangencies-nonneg", report.tangencies_nonneg.to_string()),
            ];
            if let Some(sign) = report.taubes_sign {
                // informational: assumes b2+ >= 2, not derivable from this data
                pairs.push(("taubes-sign-c1-omega", sign.to_string()));
            }
            pairs.push(("pass", report.all_pass().to_string()));
            emit(&pairs, machine);
            Ok(Outcome::Code(if report.all_pass() { 0 } else { 1 }))
        }
        Command::Moishezon { p, machine } => {
            let data = moishezon_family(p).map_err(fail)?;
            let mut pairs = vec![("p", p.to_string())];
            pairs.extend(curve_pairs(&data));
            pairs.push((
                "geography-pass",
                geography_checks(&data).all_pass().to_string(),
            ));
            emit(&pairs, machine);
            Ok(Outcome::Code(0))
        }
        Command::Stabilize { file, times } => {
            let mut parsed = read_file(&file)?;
            parsed.factorization = parsed.factorization.stabilized(times).map_err(fail)?;
            print_file(&parsed)
        }
        Command::Concat {
            left,
            right,
            theta,
            check_theta,
        } => {
            let f1 = read_file(&left)?;
            let f2 = read_file(&right)?;
            let resolved = resolve_theta(&theta, &[&f1.theta, &f2.theta])?;
            if check_theta && resolved.is_none() {
                return Err(fail("--check-theta needs a morphism"));
            }
            let check = if check_theta { resolved.as_ref() } else { None };
            let factorization = f1
                .factorization
                .concatenate(&f2.factorization, check)
                .map_err(fail)?;
            print_file(&FactorizationFile {
                factorization,
                theta: resolved,
            })
        }
        Command::NodePair { action } => match action {
            NodePairAction::Create {
                file,
                at,
                conj,
                conj2,
                theta,
            } => {
                let mut parsed = read_file(&file)?;
                let d = parsed.factorization.strands();
                let c1 = parse_word_arg(&conj, Some(d))?;
                let c2 = match &conj2 {
                    Some(text) => Some(parse_word_arg(text, Some(d))?),
                    None => None,
                };
                let resolved = resolve_theta(&theta, &[&parsed.theta])?;
                parsed.factorization = parsed
                    .factorization
                    .create_node_pair(at, &c1, c2.as_ref(), resolved.as_ref())
                    .map_err(fail)?;
                print_file(&parsed)
            }
            NodePairAction::Cancel { file, at } => {
                let mut parsed = read_file(&file)?;
                parsed.factorization = parsed.factorization.cancel_node_pair(at).map_err(fail)?;
                print_file(&parsed)
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Code(code)) => ExitCode::from(code),
        Ok(Outcome::Fail(message)) | Err(Outcome::Fail(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(3)
        }
        Err(Outcome::Code(code)) => ExitCode::from(code),
    }
}

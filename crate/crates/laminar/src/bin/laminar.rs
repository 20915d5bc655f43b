//! Command-line front end: exact lamination checks with line-oriented
//! `key: value` reports.  Exit codes: 0 success/confirmation, 1
//! refutation (with exact witness), 2 inconclusive at the given depth,
//! 64 usage error, 65 unreadable or malformed input.

use clap::{Parser, Subcommand};
use laminar::circle::OpenInterval;
use laminar::group::{self, MarkedGroup, PingPongRejection, Search, Word};
use laminar::lamination::RainbowOutcome;
use laminar::measure::SupportReport;
use laminar::svg::{render_svg, RenderOptions};
use laminar::{catalog, io as fmt_io};
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_REFUTED: u8 = 1;
const EXIT_INCONCLUSIVE: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;

#[derive(Parser)]
#[command(name = "laminar", version, about = "exact laminations on the circle")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a lamination file for linked leaves
    Validate { lamination: PathBuf },
    /// Enumerate complementary regions
    Gaps { lamination: PathBuf },
    /// Endpoint-or-rainbow dichotomy at a point
    Rainbow {
        lamination: PathBuf,
        #[arg(long)]
        point: String,
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Push a lamination around a group orbit and re-validate
    Orbit {
        group: PathBuf,
        lamination: PathBuf,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Constructive witnesses extracted from an action
    #[command(subcommand)]
    Witness(WitnessCommand),
    /// Verify a free-group ping-pong table for the first two generators
    Pingpong {
        group: PathBuf,
        #[arg(long)]
        table: PathBuf,
    },
    /// Fixed point counts over a ball in the group
    Census {
        group: PathBuf,
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Check invariance of a finite-support measure
    Measure {
        measure: PathBuf,
        group: PathBuf,
        #[arg(long)]
        lamination: Option<PathBuf>,
    },
    /// Build the leaf family of a planar order tree
    Tree2lam {
        tree: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Generate a worked example into a directory
    Example {
        /// sanov | rotation | nested
        name: String,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(short, long)]
        output: PathBuf,
        /// recorded in the report; generation itself is deterministic
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Render a lamination as an SVG disk picture
    Render {
        lamination: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        shade_gaps: bool,
    },
}

#[derive(Subcommand)]
enum WitnessCommand {
    /// Two ball elements that provably do not commute
    Noncommuting {
        group: PathBuf,
        lamination: PathBuf,
        #[arg(long)]
        depth: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints its own help/version output with code 0
            if e.use_stderr() {
                eprint!("{}", e);
                return ExitCode::from(EXIT_USAGE);
            }
            print!("{}", e);
            return ExitCode::SUCCESS;
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(EXIT_DATA)
        }
    }
}

/// Reads a file and prints its digest line, so reports pin down their
/// exact inputs.
fn read_input(path: &Path) -> Result<String, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("{}: {}", path.display(), e))?;
    let digest = Sha256::digest(text.as_bytes());
    println!("input {}: sha256:{:x}", path.display(), digest);
    Ok(text)
}

fn write_output(path: &Path, text: &str) -> Result<(), String> {
    std::fs::write(path, text).map_err(|e| format!("{}: {}", path.display(), e))?;
    println!("output: {}", path.display());
    Ok(())
}

fn default_depth(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("LAMINAR_DEPTH_DEFAULT")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(6)
}

fn interval_str(i: &OpenInterval) -> String {
    format!(
        "({},{})",
        fmt_io::format_point(i.start()),
        fmt_io::format_point(i.end())
    )
}

fn word_str(w: &Word, group: &MarkedGroup) -> String {
    w.display(group.names())
}

fn run(command: Command) -> Result<u8, String> {
    let fail = |e: laminar::Error| e.to_string();
    match command {
        Command::Validate { lamination } => {
            println!("command: validate");
            let lam = fmt_io::parse_lamination(&read_input(&lamination)?).map_err(fail)?;
            println!("leaves: {}", lam.len());
            let report = lam.validate().map_err(fail)?;
            if report.is_valid() {
                println!("result: valid");
                Ok(0)
            } else {
                println!("result: linked");
                let pair = &report.linked[0];
                println!("witness first: {:?}", pair.first);
                println!("witness second: {:?}", pair.second);
                println!(
                    "witness points: {} {}",
                    fmt_io::format_point(&pair.witness.0),
                    fmt_io::format_point(&pair.witness.1)
                );
                Ok(EXIT_REFUTED)
            }
        }
        Command::Gaps { lamination } => {
            println!("command: gaps");
            let lam = fmt_io::parse_lamination(&read_input(&lamination)?).map_err(fail)?;
            let gaps = lam.gaps().map_err(fail)?;
            println!("gaps: {}", gaps.len());
            println!("very_full: {}", lam.is_very_full().map_err(fail)?);
            for (i, gap) in gaps.iter().enumerate() {
                let sides: Vec<String> = gap.sides().iter().map(interval_str).collect();
                println!("gap {}: {}", i, sides.join(" "));
                match gap.polygon_vertices() {
                    Some(vs) => {
                        let vs: Vec<String> =
                            vs.iter().map(fmt_io::format_point).collect();
                        println!("gap {} vertices: {}", i, vs.join(" "));
                    }
                    None => println!("gap {} vertices: arc", i),
                }
            }
            Ok(0)
        }
        Command::Rainbow {
            lamination,
            point,
            depth,
        } => {
            let depth = default_depth(depth);
            println!("command: rainbow");
            let lam = fmt_io::parse_lamination(&read_input(&lamination)?).map_err(fail)?;
            let p = fmt_io::parse_point(&point, lam.model(), 0).map_err(fail)?;
            println!("point: {}", fmt_io::format_point(&p));
            println!("depth: {}", depth);
            match lam.rainbow_search(&p, depth).map_err(fail)? {
                RainbowOutcome::Endpoint(leaf) => {
                    println!("outcome: endpoint");
                    println!("leaf: {:?}", leaf);
                    Ok(0)
                }
                RainbowOutcome::Rainbow(chain) => {
                    println!("outcome: rainbow");
                    print_chain(&chain);
                    Ok(0)
                }
                RainbowOutcome::Inconclusive(chain) => {
                    println!("outcome: inconclusive");
                    print_chain(&chain);
                    Ok(EXIT_INCONCLUSIVE)
                }
            }
        }
        Command::Orbit {
            group,
            lamination,
            depth,
            output,
        } => {
            let depth = default_depth(depth);
            println!("command: orbit");
            let g = fmt_io::parse_group(&read_input(&group)?).map_err(fail)?;
            let lam = fmt_io::parse_lamination(&read_input(&lamination)?).map_err(fail)?;
            println!("depth: {}", depth);
            let orbit = group::orbit_lamination(&g, &lam, depth).map_err(fail)?;
            println!("leaves: {}", orbit.lamination.len());
            if let Some(path) = output {
                write_output(&path, &fmt_io::write_lamination(&orbit.lamination))?;
            }
            if orbit.is_invariant_so_far() {
                println!("result: unlinked");
                Ok(0)
            } else {
                println!("result: linked");
                let (pair, word) = &orbit.linked[0];
                println!("witness word: {}", word_str(word, &g));
                println!("witness first: {:?}", pair.first);
                println!("witness second: {:?}", pair.second);
                Ok(EXIT_REFUTED)
            }
        }
        Command::Witness(WitnessCommand::Noncommuting {
            group,
            lamination,
            depth,
        }) => {
            let depth = default_depth(depth);
            println!("command: witness noncommuting");
            let g = fmt_io::parse_group(&read_input(&group)?).map_err(fail)?;
            let lam = fmt_io::parse_lamination(&read_input(&lamination)?).map_err(fail)?;
            println!("depth: {}", depth);
            let gaps = lam.gaps().map_err(fail)?;
            let gap = gaps
                .iter()
                .find(|gap| !gap.is_leaf_gap() && gap.polygon_vertices().is_some())
                .ok_or("lamination has no ideal polygon gap")?;
            let sides: Vec<String> = gap.sides().iter().map(interval_str).collect();
            println!("gap: {}", sides.join(" "));
            match group::noncommuting_witness(&g, gap, depth).map_err(fail)? {
                Search::Found(w) => {
                    println!("result: found");
                    println!("f1: {}", word_str(&w.word1, &g));
                    println!("f2: {}", word_str(&w.word2, &g));
                    println!("o1: {}", interval_str(&w.o1));
                    println!("o2: {}", interval_str(&w.o2));
                    Ok(0)
                }
                Search::NotFound { depth } => {
                    println!("result: not_found");
                    println!("searched_depth: {}", depth);
                    Ok(EXIT_INCONCLUSIVE)
                }
            }
        }
        Command::Pingpong { group, table } => {
            println!("command: pingpong");
            let g = fmt_io::parse_group(&read_input(&group)?).map_err(fail)?;
            let table = fmt_io::parse_pingpong_table(&read_input(&table)?).map_err(fail)?;
            if g.generators().len() < 2 {
                return Err("ping-pong needs two generators".into());
            }
            let (h1, h2) = (&g.generators()[0], &g.generators()[1]);
            match group::pingpong_certify(h1, h2, &table).map_err(fail)? {
                Ok(cert) => {
                    println!("result: certificate");
                    for inc in &cert.inclusions {
                        println!("verified: {}", inc);
                    }
                    println!("conclusion: free group of rank 2");
                    Ok(0)
                }
                Err(PingPongRejection::IdentityGenerator) => {
                    println!("result: rejected");
                    println!("reason: identity generator");
                    Ok(EXIT_REFUTED)
                }
                Err(PingPongRejection::ArcsNotDisjoint(a, b)) => {
                    println!("result: rejected");
                    println!(
                        "reason: arcs not disjoint: {} {}",
                        interval_str(&a),
                        interval_str(&b)
                    );
                    Ok(EXIT_REFUTED)
                }
                Err(PingPongRejection::InclusionFails {
                    name,
                    image,
                    target,
                }) => {
                    println!("result: rejected");
                    println!("reason: inclusion fails: {}", name);
                    println!("image: {}", interval_str(&image));
                    println!("target: {}", interval_str(&target));
                    Ok(EXIT_REFUTED)
                }
            }
        }
        Command::Census { group, depth } => {
            let depth = default_depth(depth);
            println!("command: census");
            let g = fmt_io::parse_group(&read_input(&group)?).map_err(fail)?;
            println!("depth: {}", depth);
            let counts = group::fixedpoint_census(&g, depth).map_err(fail)?;
            println!("elements: {}", counts.len());
            let max = counts.iter().map(|(_, n)| *n).max().unwrap_or(0);
            println!("max_fixed_points: {}", max);
            for (w, n) in &counts {
                println!("fix {}: {}", word_str(w, &g), n);
            }
            Ok(0)
        }
        Command::Measure {
            measure,
            group,
            lamination,
        } => {
            println!("command: measure");
            let mu = fmt_io::parse_measure(&read_input(&measure)?).map_err(fail)?;
            let g = fmt_io::parse_group(&read_input(&group)?).map_err(fail)?;
            println!("atoms: {}", mu.support_size());
            for (name, gen) in g.names().iter().zip(g.generators()) {
                if !mu.is_invariant(gen).map_err(fail)? {
                    println!("result: not_invariant");
                    println!("witness generator: {}", name);
                    return Ok(EXIT_REFUTED);
                }
            }
            println!("result: invariant");
            if let Some(path) = lamination {
                let lam = fmt_io::parse_lamination(&read_input(&path)?).map_err(fail)?;
                match laminar::measure::support_singleton_check(&mu, &g, &lam)
                    .map_err(fail)?
                {
                    SupportReport::GlobalFixedPoint(p) => {
                        println!("support: global fixed point {}", fmt_io::format_point(&p));
                    }
                    SupportReport::NoTightPair {
                        support_size,
                        witness,
                    } => {
                        println!(
                            "support: {} atoms; no tight pair compatible",
                            support_size
                        );
                        if let Some((gap, _)) = witness {
                            let sides: Vec<String> =
                                gap.sides().iter().map(interval_str).collect();
                            println!("witness gap: {}", sides.join(" "));
                        }
                    }
                }
            }
            Ok(0)
        }
        Command::Tree2lam { tree, output } => {
            println!("command: tree2lam");
            let t = fmt_io::parse_tree(&read_input(&tree)?).map_err(fail)?;
            let lam = t.lamination_from_tree().map_err(fail)?;
            println!("leaves: {}", lam.len());
            println!("result: valid");
            if let Some(path) = output {
                write_output(&path, &fmt_io::write_lamination(&lam))?;
            } else {
                print!("{}", fmt_io::write_lamination(&lam));
            }
            Ok(0)
        }
        Command::Example {
            name,
            depth,
            output,
            seed,
        } => {
            let depth = default_depth(depth);
            println!("command: example");
            println!("name: {}", name);
            println!("depth: {}", depth);
            if let Some(seed) = seed {
                println!("seed: {}", seed);
            }
            std::fs::create_dir_all(&output)
                .map_err(|e| format!("{}: {}", output.display(), e))?;
            let (g, lam) = match name.as_str() {
                "sanov" => {
                    let (_, table) = catalog::sanov_pingpong();
                    write_output(
                        &output.join("pingpong.table"),
                        &fmt_io::write_pingpong_table(&table),
                    )?;
                    catalog::sanov_example(depth).map_err(fail)?
                }
                "rotation" => catalog::ideal_triangle_rotation(depth.max(3)).map_err(fail)?,
                "nested" => {
                    let m = laminar::homeo::MobiusMap::from_ints(2, 0, 0, 1).map_err(fail)?;
                    let lam = catalog::nested_attractor(&m, depth).map_err(fail)?;
                    let g = MarkedGroup::new(vec![(
                        "g".into(),
                        laminar::homeo::Homeo::Mobius(m),
                    )])
                    .map_err(fail)?;
                    (g, lam)
                }
                other => return Err(format!("unknown example `{}`", other)),
            };
            write_output(&output.join("group.gens"), &fmt_io::write_group(&g))?;
            write_output(
                &output.join("lamination.lam"),
                &fmt_io::write_lamination(&lam),
            )?;
            let svg = render_svg(&lam, RenderOptions::default()).map_err(fail)?;
            write_output(&output.join("render.svg"), &svg)?;
            println!("leaves: {}", lam.len());
            Ok(0)
        }
        Command::Render {
            lamination,
            output,
            shade_gaps,
        } => {
            println!("command: render");
            let lam = fmt_io::parse_lamination(&read_input(&lamination)?).map_err(fail)?;
            let svg = render_svg(&lam, RenderOptions { shade_gaps }).map_err(fail)?;
            match output {
                Some(path) => write_output(&path, &svg)?,
                None => print!("{}", svg),
            }
            Ok(0)
        }
    }
}

fn print_chain(chain: &[OpenInterval]) {
    println!("chain_length: {}", chain.len());
    for (i, link) in chain.iter().enumerate() {
        println!("chain {}: {}", i, interval_str(link));
    }
}

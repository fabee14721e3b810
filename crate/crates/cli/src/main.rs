use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use thompson::calc::{evaluate, format_element, named};
use thompson::format::{certificate_from_json, certificate_to_json, element_from_json, element_to_json, normalized};
use thompson::oracle::{cycle_pair, level_three, level_three_transposition, Check};
use thompson::{fuzz, render, signature, FamilyArg};
use thompson_core::primes::choose_primes;
use thompson_core::witness::{build_partner, verify_certificate};
use thompson_core::{Element, Signature};

#[derive(Parser)]
#[command(name = "thompson", version, about = "Generating partners and certificates in Thompson-like groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct SigArgs {
    /// Group family.
    #[arg(long, value_enum)]
    family: Option<FamilyArg>,
    /// Arity for V and Vprime.
    #[arg(long, default_value_t = 2)]
    n: u32,
    /// Dimension for mV.
    #[arg(long, default_value_t = 1)]
    m: u32,
}

impl SigArgs {
    fn signature(&self) -> anyhow::Result<Signature> {
        Ok(signature(self.family.unwrap_or(FamilyArg::V), self.n, self.m)?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build a generating partner for an element and write its certificate.
    Partner {
        #[command(flatten)]
        sig: SigArgs,
        /// Element JSON file, cycle notation or calculator expression.
        input: String,
        /// Where to write the certificate JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a certificate file.
    Verify { certificate: PathBuf },
    /// Evaluate a calculator expression such as `alpha^3 * (00 01)`.
    Eval {
        #[command(flatten)]
        sig: SigArgs,
        expr: String,
        /// Write the result as element JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a finite check through the permutation-group oracle.
    Oracle {
        #[arg(value_enum)]
        check: Check,
        #[command(flatten)]
        sig: SigArgs,
        /// First point of the second cycle (cycle-pair).
        #[arg(long, default_value_t = 2)]
        a: usize,
        /// Length of the first cycle (cycle-pair).
        #[arg(long, default_value_t = 2)]
        b: usize,
    },
    /// Print the primes fixing the generator cycle lengths.
    Primes {
        #[command(flatten)]
        sig: SigArgs,
    },
    /// Print the named generators in cycle notation.
    Generators {
        #[command(flatten)]
        sig: SigArgs,
    },
    /// Draw the tree pair of an element.
    Render {
        #[command(flatten)]
        sig: SigArgs,
        input: String,
        /// Emit Graphviz DOT instead of ASCII.
        #[arg(long)]
        dot: bool,
    },
    /// Build and verify partners for random elements.
    Fuzz {
        #[command(flatten)]
        sig: SigArgs,
        #[arg(long, default_value_t = 50)]
        cases: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Where to write the JSON summary.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Reads an element from a JSON file, or evaluates `input` as an expression.
fn read_element(sig: &SigArgs, input: &str) -> anyhow::Result<Element> {
    let path = Path::new(input);
    if path.is_file() {
        let text = fs::read_to_string(path).with_context(|| format!("reading {input}"))?;
        let json: Value = serde_json::from_str(&text).with_context(|| format!("parsing {input}"))?;
        let g = element_from_json(&json)?;
        return match sig.family {
            Some(_) => Ok(g.with_signature(sig.signature()?)?),
            None => Ok(g),
        };
    }
    Ok(evaluate(&sig.signature()?, input)?)
}

fn write_json(path: &Path, value: &Value) -> anyhow::Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))
}

fn list(items: &[impl ToString]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Partner { sig, input, out } => {
            let g = read_element(&sig, &input)?;
            let flavor = g.signature();
            let p = build_partner(&g, &flavor)?;
            println!("group: {flavor}");
            println!("factor orders: {}", list(&p.parts.orders));
            println!("|h| = {}", p.parts.order());
            println!("h = {}", format_element(&p.h));
            let report = verify_certificate(&p.certificate);
            println!(
                "certificate: {} steps, {}",
                p.certificate.steps.len(),
                if report.passed() { "verified" } else { "REJECTED" }
            );
            if let Some(path) = out {
                write_json(&path, &certificate_to_json(&p.certificate))?;
            }
            Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Verify { certificate } => {
            let text = fs::read_to_string(&certificate).with_context(|| format!("reading {}", certificate.display()))?;
            let json: Value = serde_json::from_str(&text).context("parsing certificate")?;
            let cert = certificate_from_json(&json)?;
            let report = verify_certificate(&cert);
            if report.passed() {
                println!("certificate verified: {} steps, conclusion {}", cert.steps.len(), cert.conclusion.tag());
                return Ok(ExitCode::SUCCESS);
            }
            if let Some(v) = report.first_failure() {
                println!(
                    "step {} ({}) failed: {}",
                    v.index,
                    v.kind,
                    v.detail.as_deref().unwrap_or("check failed")
                );
            }
            for problem in &report.global {
                println!("certificate rejected: {problem}");
            }
            Ok(ExitCode::from(1))
        }
        Command::Eval { sig, expr, out } => {
            let g = evaluate(&sig.signature()?, &expr)?;
            println!("{}", format_element(&g));
            if let Some(path) = out {
                write_json(&path, &element_to_json(&normalized(&g)))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { check, sig, a, b } => {
            let report = match check {
                Check::CyclePair => cycle_pair(sig.n as usize, a, b)?,
                Check::LevelThree => level_three(&sig.signature()?)?.0,
                Check::LevelThreeTransposition => level_three_transposition(&sig.signature()?)?,
            };
            println!("{}", serde_json::to_string(&report)?);
            Ok(if report.verdict { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Primes { sig } => {
            let pair = choose_primes(&sig.signature()?)?;
            match pair.p {
                Some(p) => println!("p={p} q={}", pair.q),
                None => println!("q={}", pair.q),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Generators { sig } => {
            let s = sig.signature()?;
            let mut names = vec!["delta", "zeta", "beta", "alpha"];
            if s.is_higman() && s.arity() % 2 == 1 {
                names.extend(["delta_prime", "alpha_prime"]);
            }
            for name in names {
                let g = named(&s, name)?;
                println!("{name} (order {}) = {}", g.order().expect("generators are permutations"), format_element(&g));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Render { sig, input, dot } => {
            let g = read_element(&sig, &input)?;
            print!("{}", if dot { render::dot(&g) } else { render::ascii(&g) });
            Ok(ExitCode::SUCCESS)
        }
        Command::Fuzz { sig, cases, seed, out } => {
            let s = sig.signature()?;
            if cases == 0 {
                bail!("--cases must be positive");
            }
            let summary = fuzz::fuzz(&s, cases, seed);
            let json = serde_json::to_value(&summary)?;
            match out {
                Some(path) => write_json(&path, &json)?,
                None => println!("{}", serde_json::to_string_pretty(&json)?),
            }
            eprintln!("{}: {} cases, {} failures", summary.family, summary.cases, summary.failures.len());
            Ok(if summary.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

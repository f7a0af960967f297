use clap::{Parser, Subcommand};
use pfiso_core::{congruence, encode, order, verify};
use std::process::ExitCode;

/// Exact algebra of order isomorphisms between principal filters of
/// finitely supported positive-integer sequences.
#[derive(Parser)]
#[command(name = "pfiso", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compose two elements, left argument acting first
    Compose { a: String, b: String },
    /// The inverse element
    Inverse { a: String },
    /// Evaluate an element at a point of its domain filter
    Apply { a: String, point: String },
    /// The quotient-group class of an element
    Canonical { a: String },
    /// The greatest element of the class under the natural order
    Top { a: String },
    /// Natural partial order: is A below B
    Leq { a: String, b: String },
    /// Green relation test; rel is one of L R H D J
    Green { rel: String, a: String, b: String },
    /// An element whose class is the given quotient value
    Lift { q: String },
    /// The semidirect-product image of an element
    Psi { a: String },
    /// Run seeded property suites and print a report
    Verify {
        /// all, axioms, psi, oracle, congruence, order, or units
        #[arg(long)]
        suite: String,
        /// number of cases per suite
        #[arg(long)]
        cases: u64,
        /// generator seed
        #[arg(long)]
        seed: u64,
        /// value bound for generated sequences and the oracle grid
        #[arg(long)]
        bound: u64,
    },
}

struct Outcome {
    text: String,
    ok: bool,
}

fn line(s: String) -> Outcome {
    Outcome { text: format!("{s}\n"), ok: true }
}

fn execute(cmd: Cmd) -> pfiso_core::Result<Outcome> {
    Ok(match cmd {
        Cmd::Compose { a, b } => {
            let x = encode::parse_element(&a)?;
            let y = encode::parse_element(&b)?;
            line(encode::render_element(&x.compose(&y)))
        }
        Cmd::Inverse { a } => line(encode::render_element(&encode::parse_element(&a)?.inverse())),
        Cmd::Apply { a, point } => {
            let x = encode::parse_element(&a)?;
            let p = encode::parse_nseq(&point)?;
            line(encode::render_nseq(&x.apply(&p)?))
        }
        Cmd::Canonical { a } => {
            line(encode::render_quot(&congruence::canonical(&encode::parse_element(&a)?)))
        }
        Cmd::Top { a } => line(encode::render_element(&congruence::top(&encode::parse_element(&a)?))),
        Cmd::Leq { a, b } => {
            let x = encode::parse_element(&a)?;
            let y = encode::parse_element(&b)?;
            line(order::nat_leq(&x, &y).to_string())
        }
        Cmd::Green { rel, a, b } => {
            let r: order::GreenRel = rel.parse()?;
            let x = encode::parse_element(&a)?;
            let y = encode::parse_element(&b)?;
            line(order::green(r, &x, &y).to_string())
        }
        Cmd::Lift { q } => {
            line(encode::render_element(&congruence::lift(&encode::parse_quot(&q)?)))
        }
        Cmd::Psi { a } => line(encode::render_sdp(&encode::parse_element(&a)?.psi())),
        Cmd::Verify { suite, cases, seed, bound } => {
            let o = verify::Options { suite: suite.parse()?, cases, seed, bound };
            let report = verify::run(&o)?;
            Outcome { text: report.text, ok: report.ok }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.cmd) {
        Ok(out) => {
            print!("{}", out.text);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

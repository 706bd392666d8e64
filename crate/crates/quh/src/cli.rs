//! Command-line surface. Data goes to standard output, diagnostics to the
//! error stream. Exit codes: 0 success (including Unknown verdicts), 1 a
//! verification FAIL or a Found-vs-Empty inconsistency, 2 usage or
//! parameter errors.

use std::fs;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::constructions::{fks_quh, format_quh, paley_skew, parse_quh, QuhPair};
use crate::error::Result;
use crate::gf::{jacobsthal, GfField};
use crate::matrix::{self, dot, format_pm, is_hadamard, parse_pm, SignMatrix};
use crate::morphism::{apply_morphism, quartic_is_minimal};
use crate::numtheory::{
    density_scan, emptiness_table, nonexistence_witness, prime_power_decompose, split_type,
    squarefree_part, NonexistenceVerdict,
};
use crate::search::{exhaustive_search, SearchStatus, DEFAULT_NODE_BUDGET};

#[derive(Parser)]
#[command(name = "quh", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyKind {
    Hadamard,
    Skew,
    Quh,
}

#[derive(Subcommand)]
enum Command {
    /// Paley skew-Hadamard matrix of order q+1, PM format
    Paley { q: u64 },
    /// Jacobsthal matrix of order q, PM format (zero diagonal)
    Jacobsthal { q: u64 },
    /// FKS quaternary unit Hadamard pair of order q^t, QUH format
    Fks { q: u64, t: u32 },
    /// Morph a QUH-format file by a PM-format skew matrix into a Hadamard matrix
    Morph { quh_file: String, skew_file: String },
    /// Check a matrix file against a Hadamard/skew/QUH contract
    Verify {
        file: String,
        #[arg(long, value_enum)]
        kind: VerifyKind,
    },
    /// Report the quartic identity and its minimality for a skew matrix file
    MinpolyCheck { file: String },
    /// Nonexistence verdict for H(n, X_p)
    Nonexist { n: u64, p: u64 },
    /// All odd n up to a bound with an Empty verdict for H(n, X_p)
    Table {
        p: u64,
        #[arg(long)]
        max_n: u64,
    },
    /// Splitting of the odd prime q in Q[sqrt(-p), sqrt(s)]
    SplitType { q: u64, p: u64 },
    /// Empirical density of witness-eligible primes up to a limit
    Density {
        p: u64,
        #[arg(long)]
        limit: u64,
    },
    /// Exhaustive existence search for H(n, X_m) at tiny orders
    Search {
        n: usize,
        m: u64,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
}

/// Entry point shared by the binary and the integration tests.
pub fn run<I, S, W>(args: I, out: &mut W) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
    W: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            eprintln!("{e}");
            return 2;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch<W: Write>(command: Command, out: &mut W) -> Result<i32> {
    match command {
        Command::Paley { q } => {
            let h = paley_skew(q)?;
            write!(out, "{}", format_pm(&h))?;
            Ok(0)
        }
        Command::Jacobsthal { q } => {
            let (p, k) = prime_power_decompose(q).ok_or_else(|| {
                crate::Error::Parameter(format!("{q} is not a prime power"))
            })?;
            let field = GfField::new(p, k as usize)?;
            write!(out, "{}", format_pm(&jacobsthal(&field)))?;
            Ok(0)
        }
        Command::Fks { q, t } => {
            let pair = fks_quh(q, t)?;
            write!(out, "{}", format_quh(&pair))?;
            Ok(0)
        }
        Command::Morph {
            quh_file,
            skew_file,
        } => {
            let pair = parse_quh(&fs::read_to_string(quh_file)?)?;
            let skew = parse_pm(&fs::read_to_string(skew_file)?)?;
            let result = apply_morphism(&pair, &skew)?;
            write!(out, "{}", format_pm(&result.matrix))?;
            Ok(0)
        }
        Command::Verify { file, kind } => {
            let text = fs::read_to_string(file)?;
            let failure = match kind {
                VerifyKind::Hadamard => hadamard_failure(&parse_pm(&text)?),
                VerifyKind::Skew => skew_failure(&parse_pm(&text)?),
                VerifyKind::Quh => quh_failure(&parse_quh(&text)?),
            };
            match failure {
                None => {
                    writeln!(out, "OK")?;
                    Ok(0)
                }
                Some(reason) => {
                    writeln!(out, "FAIL: {reason}")?;
                    Ok(1)
                }
            }
        }
        Command::MinpolyCheck { file } => {
            let h = parse_pm(&fs::read_to_string(file)?)?;
            let m = h.order() as u64 - 1;
            let holds = matrix::quartic_identity_check(&h);
            writeln!(
                out,
                "quartic identity H^4 + 2(m-1)H^2 + (m+1)^2 I = 0 (m={m}): {}",
                if holds { "holds" } else { "FAILS" }
            )?;
            if quartic_is_minimal(m) {
                writeln!(out, "minimal: yes (m+1 = {} is not a perfect square)", m + 1)?;
            } else {
                writeln!(
                    out,
                    "minimal: no (m+1 = {} is a perfect square; the quartic splits \
                     into two rational quadratics)",
                    m + 1
                )?;
            }
            Ok(if holds { 0 } else { 1 })
        }
        Command::Nonexist { n, p } => {
            let verdict = nonexistence_witness(n, p)?;
            print_verdict(out, &verdict)?;
            Ok(0)
        }
        Command::Table { p, max_n } => {
            for n in emptiness_table(p, max_n)? {
                writeln!(out, "{n}")?;
            }
            Ok(0)
        }
        Command::SplitType { q, p } => {
            writeln!(out, "{}", split_type(q, p)?)?;
            Ok(0)
        }
        Command::Density { p, limit } => {
            let r = density_scan(p, limit)?;
            let (num, den) = (r.qualifying, r.total);
            writeln!(out, "{num}/{den} = {:.6}", r.proportion())?;
            Ok(0)
        }
        Command::Search { n, m, budget } => {
            let outcome = exhaustive_search(n, m, budget)?;
            match &outcome.status {
                SearchStatus::Found(pair) => {
                    writeln!(out, "FOUND nodes={}", outcome.nodes_explored)?;
                    write!(out, "{}", format_quh(pair))?;
                    // cross-check against the nonexistence predicate when it applies
                    if search_contradicts_verdict(n as u64, m) {
                        eprintln!(
                            "inconsistency: search found a matrix but the \
                             nonexistence criterion says H({n}, X_{m}) is empty"
                        );
                        return Ok(1);
                    }
                    Ok(0)
                }
                SearchStatus::ExhaustedEmpty => {
                    writeln!(out, "EMPTY (search space exhausted) nodes={}", outcome.nodes_explored)?;
                    Ok(0)
                }
                SearchStatus::Aborted { budget } => {
                    writeln!(
                        out,
                        "ABORTED budget={budget} nodes={}",
                        outcome.nodes_explored
                    )?;
                    Ok(0)
                }
            }
        }
    }
}

fn search_contradicts_verdict(n: u64, m: u64) -> bool {
    if n % 2 == 0 {
        return false;
    }
    if m == 3 {
        return matches!(crate::numtheory::x3_emptiness(n), NonexistenceVerdict::Empty { .. });
    }
    if crate::numtheory::is_prime(m) && m % 4 == 3 && squarefree_part(m + 1) > 1 {
        return matches!(
            nonexistence_witness(n, m),
            Ok(NonexistenceVerdict::Empty { .. })
        );
    }
    false
}

fn print_verdict<W: Write>(out: &mut W, verdict: &NonexistenceVerdict) -> Result<()> {
    match verdict {
        NonexistenceVerdict::Empty { witness } => writeln!(out, "EMPTY witness={witness}")?,
        NonexistenceVerdict::Unknown => writeln!(out, "UNKNOWN")?,
    }
    Ok(())
}

fn hadamard_failure(h: &SignMatrix) -> Option<String> {
    if !h.is_zero_free() {
        return Some("zero entry".into());
    }
    if !is_hadamard(h) {
        return Some("HHt != nI".into());
    }
    None
}

fn skew_failure(h: &SignMatrix) -> Option<String> {
    let n = h.order();
    for i in 0..n {
        for j in 0..n {
            let expect = if i == j { 2 } else { 0 };
            if (h.get(i, j) + h.get(j, i)) as i64 != expect {
                return Some("H+Ht != 2I".into());
            }
        }
    }
    hadamard_failure(h)
}

fn quh_failure(pair: &QuhPair) -> Option<String> {
    let (a, b) = (pair.a_part(), pair.b_part());
    if !a.is_zero_free() || !b.is_zero_free() {
        return Some("zero entry".into());
    }
    let n = pair.order();
    let m = pair.parameter() as i64;
    let target = n as i64 * (m + 1);
    for i in 0..n {
        for j in i..n {
            if dot(a.row(i), b.row(j)) != dot(b.row(i), a.row(j)) {
                return Some("ABt != BAt".into());
            }
            let gram = dot(a.row(i), a.row(j)) + m * dot(b.row(i), b.row(j));
            if gram != if i == j { target } else { 0 } {
                return Some("AAt + m BBt != n(m+1)I".into());
            }
        }
    }
    None
}

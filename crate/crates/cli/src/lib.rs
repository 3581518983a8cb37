//! Command-line driver: parses rings, polynomials and valuations, runs the
//! checkers and the oracle, and reports in text or JSON.
//!
//! Exit codes: 0 irreducible-certified (or a utility that succeeded),
//! 1 conjectural certificate, 2 no certificate or inconclusive, 3 reducible,
//! 4 usage or parse error.

mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dumas::criterion::{
    cubic_prop_check, find_prime_above, normal_thm2_check, orders_thm1_check, proven_bound,
    quad_cor_check, search_valuation, Family, SearchBounds,
};
use dumas::oracle::factor_search;
use dumas::oracle::fuzz::{
    explore_conjecture, fuzz_theorem, FuzzConfig, FuzzFamily, FuzzMode, FuzzReport,
};
use dumas::sample::{random_pairs, SampleSpec};
use dumas::text::{
    format_elem, format_univariate, format_valuation, parse_elem, parse_ring, parse_univariate,
    parse_valuation,
};
use dumas::valuation::certify_prime;
use dumas::{Certificate, Error, Ring, SearchBudget, UnivariateView, Valuation};
use num_bigint::BigInt;
use serde_json::{json, Value};

pub use report::{Conditions, Outcome, Report};

/// JSON schema of the reports written by `--json` and `--out`.
pub const REPORT_SCHEMA: &str = include_str!("../schema/report.schema.json");

pub const EXIT_USAGE: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "dumas",
    version,
    about = "Irreducibility certificates from Dumas valuations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print the JSON report instead of the text summary.
    #[arg(long, global = true)]
    json: bool,
    /// Also write the JSON report to this file.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Seed for commands that sample.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Debug)]
struct RingArg {
    #[arg(long, default_value = "Z")]
    ring: String,
}

#[derive(Args, Debug)]
struct PolyArgs {
    #[command(flatten)]
    ring: RingArg,
    #[arg(long, allow_hyphen_values = true)]
    poly: String,
    /// Main variable; by default the one name that is not a ring variable.
    #[arg(long)]
    var: Option<String>,
}

#[derive(Args, Debug)]
struct ElemArgs {
    #[command(flatten)]
    ring: RingArg,
    #[arg(long, allow_hyphen_values = true)]
    elem: String,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Deg,
    Codeg,
    Ord,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Validate,
    Explore,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check conditions (A) and (B) for an explicit valuation.
    Check {
        #[command(flatten)]
        poly: PolyArgs,
        /// `deg:w1,..`, `codeg:w1,..` or `ord:<elem>`, optionally `;scale=d`.
        #[arg(long, allow_hyphen_values = true)]
        val: String,
    },
    /// Search a valuation family for a certificate.
    Search {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Weight bound for deg/codeg, prime bound for ord.
        #[arg(long)]
        bound: Option<u64>,
        #[arg(long, default_value_t = 100)]
        coord_bound: u64,
    },
    /// Norm of an element of an order.
    Norm(ElemArgs),
    /// Conjugate of an element of a quadratic order.
    Conj(ElemArgs),
    /// Order of an element at `--p`.
    Ord {
        #[command(flatten)]
        elem: ElemArgs,
        #[arg(short = 'p', long = "p", allow_hyphen_values = true)]
        p: String,
    },
    /// Primality certificate for an element.
    PrimeCert(ElemArgs),
    /// Element of norm +-p with bounded coordinates.
    PrimeAbove {
        #[command(flatten)]
        ring: RingArg,
        #[arg(short = 'p', allow_hyphen_values = true)]
        p: BigInt,
        #[arg(long, default_value_t = 100)]
        bound: u64,
    },
    /// `ord` at a prime element of an order.
    Thm1 {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long, allow_hyphen_values = true)]
        prime: String,
    },
    /// `ord_p` for a rational prime over a quadratic order.
    Quad {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(short = 'p', allow_hyphen_values = true)]
        p: BigInt,
    },
    /// `ord_p` over an invariant order of a normal field.
    Normal {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(short = 'p', allow_hyphen_values = true)]
        p: BigInt,
        #[arg(long, allow_hyphen_values = true)]
        prime: String,
        /// Degree of the field; defaults to that of the ring.
        #[arg(short = 'm')]
        m: Option<u32>,
        #[arg(long)]
        assert_invariant: bool,
    },
    /// `ord_p` over a pure cubic order.
    Cubic {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(short = 'p', allow_hyphen_values = true)]
        p: BigInt,
        #[arg(long, allow_hyphen_values = true)]
        prime: String,
    },
    /// Bounded search for a factorization.
    Oracle {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long, default_value_t = 10)]
        coord_bound: u64,
        #[arg(long, default_value_t = 5_000_000)]
        max_candidates: u64,
    },
    /// Factor conditioned random instances.
    Fuzz {
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value = "ord")]
        family: FamilyArg,
        /// Defaults to Z for ord, Z[Y] for deg and Z[Y,Z] for codeg.
        #[arg(long)]
        ring: Option<String>,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long)]
        n_min: Option<usize>,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        coeff_bound: Option<u64>,
        #[arg(long)]
        max_coeff_degree: Option<u32>,
        #[arg(long)]
        coord_bound: Option<u64>,
        #[arg(long)]
        max_candidates: Option<u64>,
    },
    /// Sample the valuation axioms on random pairs.
    Axioms {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long, allow_hyphen_values = true)]
        val: String,
        #[arg(long, default_value_t = 10_000)]
        pairs: usize,
        #[arg(long, default_value_t = 5)]
        coeff_bound: u64,
    },
}

/// Runs one command; `args` includes the program name. Returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{text}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    let report = match execute(&cli) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_USAGE;
        }
    };
    if let Some(path) = &cli.out {
        let body = serde_json::to_string_pretty(&report.to_json()).expect("serializable");
        if let Err(e) = std::fs::write(path, body + "\n") {
            let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
            return EXIT_USAGE;
        }
    }
    let written = if cli.json {
        writeln!(
            stdout,
            "{}",
            serde_json::to_string_pretty(&report.to_json()).expect("serializable")
        )
    } else {
        write!(stdout, "{}", report.to_text())
    };
    if written.is_err() {
        return EXIT_USAGE;
    }
    report.exit_code()
}

fn poly_of(a: &PolyArgs) -> Result<UnivariateView, Error> {
    let ring = parse_ring(&a.ring.ring)?;
    parse_univariate(&a.poly, &ring, a.var.as_deref())
}

/// Unmet hypotheses are a missing certificate, not a usage error.
fn checker(
    command: &str,
    f: &UnivariateView,
    r: Result<Certificate, Error>,
) -> Result<Report, Error> {
    match r {
        Ok(c) => Ok(Report::from_certificate(command, &c)),
        Err(Error::Precondition(why)) => {
            let mut rep = Report::new(command, Outcome::NoCertificate);
            rep.ring = Some(f.ring().to_string());
            rep.input = format_univariate(f).ok();
            rep.detail("unmet_preconditions", why);
            Ok(rep)
        }
        Err(e) => Err(e),
    }
}

fn elem_report(command: &str, ring: &Ring, x: &dumas::Elem) -> Report {
    let mut r = Report::new(command, Outcome::Ok);
    r.ring = Some(ring.to_string());
    r.input = Some(format_elem(ring, x));
    r
}

fn execute(cli: &Cli) -> Result<Report, Error> {
    match &cli.command {
        Command::Check { poly, val } => {
            let f = poly_of(poly)?;
            let v = parse_valuation(val, f.ring())?;
            checker("check", &f, dumas::certify(&f, &v))
        }
        Command::Search {
            poly,
            family,
            bound,
            coord_bound,
        } => {
            let f = poly_of(poly)?;
            let mut bounds = SearchBounds {
                coord_bound: *coord_bound,
                ..SearchBounds::default()
            };
            let family = match family {
                FamilyArg::Deg => Family::DegNu,
                FamilyArg::Codeg => Family::CodegNu,
                FamilyArg::Ord => Family::OrdP,
            };
            if let Some(b) = bound {
                match family {
                    Family::OrdP => bounds.prime_bound = *b,
                    _ => {
                        bounds.nu_bound = u32::try_from(*b)
                            .map_err(|_| Error::Unsupported(format!("weight bound {b}")))?
                    }
                }
            }
            match search_valuation(&f, family, bounds)? {
                Some(c) => Ok(Report::from_certificate("search", &c)),
                None => {
                    let mut r = Report::new("search", Outcome::NoCertificate);
                    r.ring = Some(f.ring().to_string());
                    r.input = format_univariate(&f).ok();
                    Ok(r)
                }
            }
        }
        Command::Norm(a) => {
            let ring = parse_ring(&a.ring.ring)?;
            let x = parse_elem(&a.elem, &ring)?;
            let n = ring.norm(&x)?;
            let mut r = elem_report("norm", &ring, &x);
            r.detail("norm", n.to_string());
            Ok(r)
        }
        Command::Conj(a) => {
            let ring = parse_ring(&a.ring.ring)?;
            let x = parse_elem(&a.elem, &ring)?;
            let c = ring.conjugate(&x)?;
            let mut r = elem_report("conj", &ring, &x);
            r.detail("conjugate", format_elem(&ring, &c));
            Ok(r)
        }
        Command::Ord { elem, p } => {
            let ring = parse_ring(&elem.ring.ring)?;
            let x = parse_elem(&elem.elem, &ring)?;
            let p = parse_elem(p, &ring)?;
            let v = ring.ord(&x, &p)?;
            let mut r = elem_report("ord", &ring, &x);
            r.valuation = Some(format_valuation(
                &ring,
                &Valuation::OrdP {
                    p: p.clone(),
                    certificate: None,
                },
            ));
            r.values = vec![v.to_string()];
            Ok(r)
        }
        Command::PrimeCert(a) => {
            let ring = parse_ring(&a.ring.ring)?;
            let x = parse_elem(&a.elem, &ring)?;
            let mut r = elem_report("prime-cert", &ring, &x);
            if let Ok(n) = ring.norm(&x) {
                r.detail("norm", n.to_string());
            }
            match certify_prime(&ring, &x) {
                Some(c) => {
                    r.detail("certificate", c.to_string());
                }
                None => r.outcome = Outcome::Inconclusive,
            }
            Ok(r)
        }
        Command::PrimeAbove { ring, p, bound } => {
            let ring = parse_ring(&ring.ring)?;
            let mut r = Report::new("prime-above", Outcome::Inconclusive);
            r.ring = Some(ring.to_string());
            r.input = Some(p.to_string());
            r.detail("bound", bound.to_string());
            if let Some((x, c)) = find_prime_above(p, &ring, *bound) {
                r.outcome = Outcome::Ok;
                r.detail("element", format_elem(&ring, &x));
                r.detail("norm", ring.norm(&x)?.to_string());
                r.detail("certificate", c.to_string());
            }
            Ok(r)
        }
        Command::Thm1 { poly, prime } => {
            let f = poly_of(poly)?;
            let p = parse_elem(prime, f.ring())?;
            checker("thm1", &f, orders_thm1_check(&f, &p))
        }
        Command::Quad { poly, p } => {
            let f = poly_of(poly)?;
            checker("quad", &f, quad_cor_check(&f, p))
        }
        Command::Normal {
            poly,
            p,
            prime,
            m,
            assert_invariant,
        } => {
            let f = poly_of(poly)?;
            let frak_p = parse_elem(prime, f.ring())?;
            let m = match m {
                Some(m) => *m,
                None => f
                    .ring()
                    .field_degree()
                    .ok_or_else(|| Error::Unsupported(format!("{} is not an order", f.ring())))?,
            };
            checker(
                "normal",
                &f,
                normal_thm2_check(&f, p, &frak_p, m, *assert_invariant),
            )
        }
        Command::Cubic { poly, p, prime } => {
            let f = poly_of(poly)?;
            let frak_p = parse_elem(prime, f.ring())?;
            checker("cubic", &f, cubic_prop_check(&f, p, &frak_p))
        }
        Command::Oracle {
            poly,
            coord_bound,
            max_candidates,
        } => {
            let f = poly_of(poly)?;
            let out = factor_search(&f, SearchBudget::new(*coord_bound, *max_candidates)?)?;
            let mut r = Report::new("oracle", Outcome::Inconclusive);
            r.ring = Some(f.ring().to_string());
            r.input = format_univariate(&f).ok();
            r.detail("coord_bound", coord_bound.to_string());
            r.detail("candidates", out.candidates.to_string());
            r.detail("truncated", out.truncated);
            if let Some(w) = &out.witness {
                r.outcome = Outcome::Reducible;
                r.witness = Some((format_univariate(w.g())?, format_univariate(w.h())?));
            }
            Ok(r)
        }
        Command::Fuzz {
            mode,
            family,
            ring,
            trials,
            n_min,
            n_max,
            coeff_bound,
            max_coeff_degree,
            coord_bound,
            max_candidates,
        } => {
            let family = match family {
                FamilyArg::Deg => FuzzFamily::DegNu,
                FamilyArg::Codeg => FuzzFamily::CodegNu,
                FamilyArg::Ord => FuzzFamily::OrdP,
            };
            let ring = match (ring, family) {
                (Some(t), _) => parse_ring(t)?,
                (None, FuzzFamily::OrdP) => Ring::Integers,
                (None, FuzzFamily::DegNu) => Ring::Integers.poly(["Y"])?,
                (None, FuzzFamily::CodegNu) => Ring::Integers.poly(["Y", "Z"])?,
            };
            let bound = proven_bound(family.kind());
            let (mode, lo, hi) = match mode {
                ModeArg::Validate => (FuzzMode::Validate, 2, bound),
                ModeArg::Explore => (FuzzMode::Explore, bound + 1, bound + 1),
            };
            let mut cfg =
                FuzzConfig::new(family, mode, ring, n_min.unwrap_or(lo), n_max.unwrap_or(hi));
            cfg.seed = cli.seed;
            cfg.trials = *trials;
            if let Some(b) = coeff_bound {
                cfg.coeff_bound = *b;
            }
            if let Some(d) = max_coeff_degree {
                cfg.max_coeff_degree = *d;
            }
            cfg.budget = SearchBudget::new(
                coord_bound.unwrap_or(cfg.budget.coord_bound),
                max_candidates.unwrap_or(cfg.budget.max_candidates),
            )?;
            let rep = match mode {
                FuzzMode::Validate => fuzz_theorem(&cfg)?,
                FuzzMode::Explore => explore_conjecture(&cfg)?,
            };
            Ok(fuzz_report(&rep))
        }
        Command::Axioms {
            ring,
            val,
            pairs,
            coeff_bound,
        } => {
            let ring = parse_ring(&ring.ring)?;
            let v = parse_valuation(val, &ring)?;
            let boost = match innermost(&v) {
                Valuation::OrdP { p, .. } => Some(p.clone()),
                _ => None,
            };
            let spec = SampleSpec {
                coeff_bound: *coeff_bound,
                boost,
                ..SampleSpec::default()
            };
            let sample = random_pairs(&ring, cli.seed, *pairs, &spec);
            let rep = v.check_axioms(&ring, &sample);
            let mut r = Report::new(
                "axioms",
                if rep.passed() {
                    Outcome::Ok
                } else {
                    Outcome::AxiomViolation
                },
            );
            r.ring = Some(ring.to_string());
            r.valuation = Some(format_valuation(&ring, &v));
            r.seed = Some(cli.seed);
            r.detail("pairs", rep.pairs.to_string());
            let tallies: serde_json::Map<String, Value> = rep
                .tallies
                .iter()
                .map(|(a, t)| {
                    (
                        format!("{a:?}"),
                        json!({ "checked": t.checked.to_string(), "failed": t.failed.to_string() }),
                    )
                })
                .collect();
            r.detail("tallies", Value::Object(tallies));
            if let Some(v) = &rep.first_violation {
                r.detail(
                    "first_violation",
                    json!({ "index": v.index.to_string(), "axiom": format!("{:?}", v.axiom), "detail": v.detail }),
                );
            }
            Ok(r)
        }
    }
}

fn innermost(v: &Valuation) -> &Valuation {
    match v {
        Valuation::Scaled { inner, .. } => innermost(inner),
        other => other,
    }
}

fn fuzz_report(rep: &FuzzReport) -> Report {
    let outcome = if rep.witnesses.is_empty() {
        Outcome::Ok
    } else {
        Outcome::Reducible
    };
    let mut r = Report::new("fuzz", outcome);
    r.ring = Some(rep.ring.clone());
    r.theorem_backed = rep.mode == FuzzMode::Validate;
    r.seed = Some(rep.seed);
    r.witness = rep.witnesses.first().map(|w| (w.g.clone(), w.h.clone()));
    r.detail("family", format!("{:?}", rep.family));
    r.detail("kind", rep.kind.to_string());
    r.detail("mode", format!("{:?}", rep.mode).to_lowercase());
    r.detail("n_min", rep.n_min.to_string());
    r.detail("n_max", rep.n_max.to_string());
    r.detail("trials", rep.trials.to_string());
    r.detail("certified", rep.certified.to_string());
    r.detail("conjectural", rep.conjectural.to_string());
    r.detail("truncated", rep.truncated.to_string());
    let ws: Vec<Value> = rep
        .witnesses
        .iter()
        .map(|w| {
            json!({
                "seed": w.seed.to_string(),
                "index": w.index.to_string(),
                "poly": w.poly,
                "valuation": w.valuation,
                "g": w.g,
                "h": w.h,
                "verdict": w.verdict.to_string(),
                "candidate_counterexample": w.candidate_counterexample,
            })
        })
        .collect();
    r.detail("witnesses", ws);
    r
}

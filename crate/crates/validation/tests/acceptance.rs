//! Acceptance suite. Prints one PASS/FAIL line per criterion (sub-items are
//! indented) and exits non-zero if any criterion fails.

// Counts are compared against a pinned tolerance that happens to be zero.
#![allow(clippy::absurd_extreme_comparisons)]

use std::time::{Duration, Instant};

use dumas::criterion::{
    corollary_bounds_check, cubic_prop_check, find_prime_above, orders_thm1_check, quad_cor_check,
    BoundMode,
};
use dumas::oracle::{
    factor_search, fuzz_theorem, verify_witness, FuzzConfig, FuzzFamily, FuzzMode,
};
use dumas::ring::integer::factorial;
use dumas::sample::{planted_product, random_pairs, rng_for, SampleSpec};
use dumas::text::{format_univariate, parse_elem, parse_ring, parse_univariate, parse_valuation};
use dumas::{
    certify, Elem, ExtValue, QuadForm, Ring, SearchBudget, Valuation, Verdict, WeightVector,
};
use dumas_validation::{ensure, Check, Suite};
use num_bigint::BigInt;
use serde_json::Value;

const AXIOM_PAIRS: usize = 10_000;
const AXIOM_TIME: Duration = Duration::from_secs(60);
const DEGREE_PAIRS: usize = 10_000;
const PLANTS: u64 = 1_000;
const PLANT_COEFF: u64 = 5;
const PLANT_DEGREE: usize = 7;
const PLANT_TIME: Duration = Duration::from_secs(120);
const FUZZ_TRIALS: u64 = 500;
const FUZZ_TIME: Duration = Duration::from_secs(600);
const EXPLORE_TRIALS: u64 = 100;
const ROUND_TRIP_CASES: usize = 50;
/// Everything is exact: violations, mismatches and witnesses must all be zero.
const ALLOWED_FAILURES: u64 = 0;

fn strings(v: &[ExtValue]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = dumas_cli::run(
        std::iter::once("dumas").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (code, String::from_utf8(out).expect("utf-8"))
}

fn axiom_suite() -> Check {
    let start = Instant::now();
    let cases = [
        ("Z[Y,Z]", "deg:2,1"),
        ("Z[Y,Z]", "codeg:1,3"),
        ("Z", "ord:7"),
        ("Z[sqrt(10)]", "ord:(11+3g)"),
        ("Z[cbrt(12)]", "ord:(7-3g)"),
    ];
    for (i, (r, v)) in cases.iter().enumerate() {
        let ring = parse_ring(r).map_err(|e| e.to_string())?;
        let val = parse_valuation(v, &ring).map_err(|e| e.to_string())?;
        let boost = match &val {
            Valuation::OrdP { p, certificate } => {
                ensure(certificate.is_some(), || {
                    format!("{v} has no prime certificate")
                })?;
                Some(p.clone())
            }
            _ => None,
        };
        let spec = SampleSpec {
            boost,
            ..SampleSpec::default()
        };
        let pairs = random_pairs(&ring, 1000 + i as u64, AXIOM_PAIRS, &spec);
        let rep = val.check_axioms(&ring, &pairs);
        ensure(rep.pairs == AXIOM_PAIRS, || {
            format!("{v}: {} pairs", rep.pairs)
        })?;
        ensure(rep.violations() <= ALLOWED_FAILURES, || {
            format!("{v} over {r}: {:?}", rep.first_violation)
        })?;
    }
    let t = start.elapsed();
    ensure(t < AXIOM_TIME, || format!("took {t:?}"))?;
    Ok(format!(
        "5 valuations x {AXIOM_PAIRS} pairs, 0 violations, {:.1}s",
        t.as_secs_f64()
    ))
}

fn degree_laws() -> Check {
    let cases = [
        ("Z[Y,Z]", vec![2, 1]),
        ("Z[sqrt(10)][Y]", vec![3]),
        ("Z[cbrt(12)][Y,Z]", vec![1, 3]),
    ];
    let mut mismatches = 0u64;
    for (i, (r, w)) in cases.iter().enumerate() {
        let ring = parse_ring(r).map_err(|e| e.to_string())?;
        let nu = WeightVector::new(w.clone());
        let deg = Valuation::DegNu(nu.clone());
        let codeg = Valuation::CodegNu(nu);
        for (f, g) in random_pairs(&ring, 2000 + i as u64, DEGREE_PAIRS, &SampleSpec::default()) {
            let fg = ring.mul(&f, &g).map_err(|e| e.to_string())?;
            for v in [&deg, &codeg] {
                let lhs = v.evaluate(&ring, &fg).map_err(|e| e.to_string())?;
                let rhs = v
                    .evaluate(&ring, &f)
                    .and_then(|a| a.checked_add(&v.evaluate(&ring, &g)?))
                    .map_err(|e| e.to_string())?;
                if lhs != rhs {
                    mismatches += 1;
                }
            }
        }
    }
    ensure(mismatches <= ALLOWED_FAILURES, || {
        format!("{mismatches} product laws failed")
    })?;
    Ok(format!(
        "3 rings x {DEGREE_PAIRS} pairs, deg and codeg of products exact"
    ))
}

fn weighted_degree_golden() -> Check {
    let r = parse_ring("Z[Y,Z]").map_err(|e| e.to_string())?;
    let f = parse_univariate(
        "X^6 + Y^3*Z^3*X + Y*Z^2*X - 7*X + Y^4*Z^3 + Y^4 + Z^2 + 3",
        &r,
        None,
    )
    .map_err(|e| e.to_string())?;
    let c = certify(
        &f,
        &parse_valuation("deg:2,1", &r).map_err(|e| e.to_string())?,
    )
    .map_err(|e| e.to_string())?;
    let v = strings(&c.report.values);
    ensure(
        v == ["11", "9", "-inf", "-inf", "-inf", "-inf", "0"],
        || format!("values {v:?}"),
    )?;
    let (w0, w1) = (&c.report.values[0], &c.report.values[1]);
    ensure(w1.scale(6) <= w0.scale(5), || format!("6*{w1} > 5*{w0}"))?;
    ensure(c.verdict == Verdict::IrreducibleCertified, || {
        format!("{}", c.verdict)
    })?;
    ensure(
        corollary_bounds_check(&f, &WeightVector::new(vec![2, 1]), BoundMode::Floor)
            .map_err(|e| e.to_string())?,
        || "floor bounds fail".into(),
    )?;
    Ok("values 11, 9; certified".into())
}

fn weighted_codegree_golden() -> Check {
    let r = parse_ring("Z[Y,Z]").map_err(|e| e.to_string())?;
    let f = parse_univariate(
        "X^3 + Y*X^3 + Y^2*X^2 + Y*Z*X^2 + Z*X + Y^3*X + Y*Z + Y^5",
        &r,
        None,
    )
    .map_err(|e| e.to_string())?;
    let c = certify(
        &f,
        &parse_valuation("codeg:1,3", &r).map_err(|e| e.to_string())?,
    )
    .map_err(|e| e.to_string())?;
    let v = strings(&c.report.values);
    ensure(v == ["4", "3", "2", "0"], || format!("values {v:?}"))?;
    ensure(c.verdict == Verdict::IrreducibleCertified, || {
        format!("{}", c.verdict)
    })?;
    ensure(
        corollary_bounds_check(&f, &WeightVector::new(vec![1, 3]), BoundMode::Ceil)
            .map_err(|e| e.to_string())?,
        || "ceiling bounds fail".into(),
    )?;
    Ok("values 4, 3, 2; certified".into())
}

fn sqrt10_golden() -> Check {
    let r = parse_ring("Z[sqrt(10)]").map_err(|e| e.to_string())?;
    let f45 = r.from_int(factorial(45));
    for text in ["(11+3g)", "(29+9g)"] {
        let p = parse_elem(text, &r).map_err(|e| e.to_string())?;
        let n = r.norm(&p).map_err(|e| e.to_string())?;
        ensure(n == BigInt::from(31), || format!("N{text} = {n}"))?;
        let o = r.ord(&f45, &p).map_err(|e| e.to_string())?;
        ensure(o == ExtValue::from_int(1), || {
            format!("ord at {text} of 45! is {o}")
        })?;
        for n in 2..=6 {
            let f = parse_univariate(&format!("X^{n} + 33!*X + 45!"), &r, None)
                .map_err(|e| e.to_string())?;
            let c = orders_thm1_check(&f, &p).map_err(|e| e.to_string())?;
            ensure(
                c.verdict == Verdict::IrreducibleCertified && c.theorem_backed,
                || format!("n = {n} at {text}: {}", c.verdict),
            )?;
        }
    }
    Ok("norms 31, ord 1, n = 2..6 certified at both primes".into())
}

fn c0_and_orders() -> Check {
    let full = parse_ring("Z[sqrt(11)]").map_err(|e| e.to_string())?;
    let z0 = parse_elem("(10+55g)", &full).map_err(|e| e.to_string())?;
    let c0 = full.pow(&z0, 3).map_err(|e| e.to_string())?;
    ensure(c0 == Elem::quad(999_250, 1_846_625), || format!("{c0:?}"))?;
    for (ring, want) in [
        ("Z[sqrt(11)]", 3),
        ("Z[sqrt(11),k=425]", 1),
        ("Z[sqrt(11),k=2125]", 0),
    ] {
        let r = parse_ring(ring).map_err(|e| e.to_string())?;
        let c = parse_elem("(999250+1846625g)", &r).map_err(|e| e.to_string())?;
        let o = r.ord(&c, &r.from_int(5)).map_err(|e| e.to_string())?;
        ensure(o == ExtValue::from_int(want), || {
            format!("ord_5 over {ring} is {o}")
        })?;
    }
    Ok("cube exact; ord_5 = 3, 1, 0".into())
}

fn quad_cor_at_425() -> Check {
    let mid = parse_ring("Z[sqrt(11),k=425]").map_err(|e| e.to_string())?;
    let f = parse_univariate("X^3 - (999250+1846625g)", &mid, None).map_err(|e| e.to_string())?;
    match quad_cor_check(&f, &BigInt::from(5)) {
        Ok(c) if c.verdict == Verdict::IrreducibleCertified => Ok("certified".into()),
        Ok(c) => Err(format!("verdict {}", c.verdict)),
        Err(e) => Err(format!(
            "{e}; a^2 - 11 (425 b)^2 = +-5 needs a^2 = +-5 mod 25, which is impossible"
        )),
    }
}

fn sqrt11_oracle() -> Check {
    let full = parse_ring("Z[sqrt(11)]").map_err(|e| e.to_string())?;
    let f = parse_univariate("X^3 - (999250+1846625g)", &full, None).map_err(|e| e.to_string())?;
    let out = factor_search(
        &f,
        SearchBudget::new(60, 10_000_000).map_err(|e| e.to_string())?,
    )
    .map_err(|e| e.to_string())?;
    let w = out.witness.ok_or("no factor found")?;
    let g = format_univariate(w.g()).map_err(|e| e.to_string())?;
    ensure(g == "X - (10+55g)" && verify_witness(&f, &w), || g.clone())?;
    Ok(format!("factor {g} after {} candidates", out.candidates))
}

fn cubic_golden() -> Check {
    let r = parse_ring("Z[cbrt(12)]").map_err(|e| e.to_string())?;
    for (text, p) in [
        ("(-1+g)", 11i64),
        ("(1+g)", 13),
        ("(7-3g)", 19),
        ("(5-2g)", 29),
    ] {
        let x = parse_elem(text, &r).map_err(|e| e.to_string())?;
        let n = r.norm(&x).map_err(|e| e.to_string())?;
        ensure(n == BigInt::from(p), || format!("N{text} = {n}"))?;
        let Elem::Cubic([a, b, c]) = &x else {
            return Err("not cubic".into());
        };
        let s1: BigInt = a * b - c * c * 12;
        let s2: BigInt = a * c - b * b;
        ensure(
            &s1 % p != BigInt::from(0) || &s2 % p != BigInt::from(0),
            || format!("side condition at {p}"),
        )?;
        let f = parse_univariate(&format!("X^5 + {p}*X^2 + {}", 2 * p), &r, None)
            .map_err(|e| e.to_string())?;
        let c = cubic_prop_check(&f, &BigInt::from(p), &x).map_err(|e| e.to_string())?;
        ensure(c.verdict == Verdict::IrreducibleCertified, || {
            format!("{text}: {}", c.verdict)
        })?;
    }
    Ok("norms 11, 13, 19, 29 with side conditions".into())
}

fn norm_spot_checks() -> Check {
    for (d, a, b, n) in [
        (2, 5, 1, 23),
        (6, 1, 2, -23),
        (13, 6, 1, 23),
        (97, 39, 4, -31),
    ] {
        let r = Ring::quadratic(d, QuadForm::Sqrt, 1).map_err(|e| e.to_string())?;
        let got = r.norm(&Elem::quad(a, b)).map_err(|e| e.to_string())?;
        ensure(got == BigInt::from(n), || {
            format!("N({a}+{b}sqrt({d})) = {got}")
        })?;
    }
    let r17 = Ring::quadratic(17, QuadForm::Sqrt, 1).map_err(|e| e.to_string())?;
    for p in [23, -23, 29, -29, 31, -31] {
        let found = find_prime_above(&BigInt::from(p), &r17, 40);
        ensure(found.is_none(), || {
            format!("Z[sqrt(17)] has {found:?} for {p}")
        })?;
    }
    Ok("4 norms; Z[sqrt(17)] empty for +-23, +-29, +-31 at bound 40".into())
}

fn planted_products() -> Check {
    let start = Instant::now();
    let budget = SearchBudget::new(PLANT_COEFF, 50_000_000).map_err(|e| e.to_string())?;
    let mut missed = 0u64;
    for i in 0..PLANTS {
        let (_, _, f) = planted_product(&mut rng_for(4000, i), PLANT_DEGREE, PLANT_COEFF);
        match factor_search(&f, budget)
            .map_err(|e| e.to_string())?
            .witness
        {
            Some(w) if verify_witness(&f, &w) => {}
            _ => missed += 1,
        }
    }
    let t = start.elapsed();
    ensure(missed <= ALLOWED_FAILURES, || {
        format!("{missed} of {PLANTS} missed")
    })?;
    ensure(t < PLANT_TIME, || format!("took {t:?}"))?;
    Ok(format!(
        "{PLANTS} of {PLANTS} recovered in {:.1}s",
        t.as_secs_f64()
    ))
}

fn validation_fuzz() -> Check {
    let start = Instant::now();
    let configs = [
        (FuzzFamily::OrdP, "Z", 6),
        (FuzzFamily::CodegNu, "Z[Y,Z]", 6),
        (FuzzFamily::DegNu, "Z[Y]", 7),
    ];
    let mut parts = Vec::new();
    for (family, ring, n_max) in configs {
        let ring = parse_ring(ring).map_err(|e| e.to_string())?;
        let mut cfg = FuzzConfig::new(family, FuzzMode::Validate, ring, 2, n_max);
        cfg.trials = FUZZ_TRIALS;
        let rep = fuzz_theorem(&cfg).map_err(|e| e.to_string())?;
        ensure(rep.witnesses.len() as u64 <= ALLOWED_FAILURES, || {
            format!("{family:?}: {:?}", rep.witnesses[0])
        })?;
        ensure(rep.certified == FUZZ_TRIALS, || {
            format!("{family:?}: {} certified", rep.certified)
        })?;
        parts.push(format!(
            "{family:?} 0 witnesses ({} truncated)",
            rep.truncated
        ));
    }
    let t = start.elapsed();
    ensure(t < FUZZ_TIME, || format!("took {t:?}"))?;
    Ok(format!("{}; {:.1}s", parts.join(", "), t.as_secs_f64()))
}

fn exploration() -> Check {
    let schema = compiled_schema()?;
    let mut parts = Vec::new();
    for family in ["ord", "codeg"] {
        let path = std::env::temp_dir().join(format!(
            "dumas-explore-{family}-{}.json",
            std::process::id()
        ));
        let trials = EXPLORE_TRIALS.to_string();
        let (code, _) = cli(&[
            "fuzz",
            "--mode",
            "explore",
            "--family",
            family,
            "--trials",
            &trials,
            "--out",
            path.to_str().unwrap(),
        ]);
        let text = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
        let _ = std::fs::remove_file(&path);
        let v: Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
        ensure(schema.is_valid(&v), || {
            format!("{family}: report does not match the schema")
        })?;
        let d = &v["details"];
        ensure(
            d["n_min"] == "7" && d["n_max"] == "7" && d["kind"] == "second",
            || format!("{d}"),
        )?;
        ensure(d["trials"] == trials.as_str(), || {
            format!("{family}: trials {}", d["trials"])
        })?;
        let ws = d["witnesses"].as_array().map_or(usize::MAX, Vec::len);
        ensure(ws as u64 <= ALLOWED_FAILURES && code == 0, || {
            format!("{family}: {ws} witnesses, exit {code}")
        })?;
        parts.push(format!(
            "{family}: 0 witnesses, {} truncated",
            d["truncated"].as_str().unwrap_or("?")
        ));
    }
    Ok(parts.join("; "))
}

fn compiled_schema() -> Result<jsonschema::JSONSchema, String> {
    let schema: Value =
        serde_json::from_str(dumas_cli::REPORT_SCHEMA).map_err(|e| e.to_string())?;
    jsonschema::JSONSchema::compile(&schema).map_err(|e| e.to_string())
}

fn round_trip_corpus() -> Check {
    let corpus = include_str!("data/roundtrip.tsv");
    let mut cases = 0;
    for line in corpus.lines().filter(|l| !l.trim().is_empty()) {
        let (r, p) = line
            .split_once('\t')
            .ok_or_else(|| format!("bad line {line:?}"))?;
        let ring = parse_ring(r).map_err(|e| format!("{r}: {e}"))?;
        ensure(ring.to_string() == r, || {
            format!("ring {r} prints as {ring}")
        })?;
        let f = parse_univariate(p, &ring, None).map_err(|e| format!("{p}: {e}"))?;
        let back = format_univariate(&f).map_err(|e| e.to_string())?;
        ensure(back == p, || format!("{p} prints as {back}"))?;
        cases += 1;
    }
    ensure(cases == ROUND_TRIP_CASES, || format!("{cases} cases"))?;
    Ok(format!("{cases} canonical texts reprint identically"))
}

const INVOCATIONS: &[&[&str]] = &[
    &[
        "check",
        "--ring",
        "Z",
        "--poly",
        "X^4+2*X+2",
        "--val",
        "ord:2",
    ],
    &[
        "search",
        "--ring",
        "Z[Y,Z]",
        "--poly",
        "X^3 + Y*X^3 + Y^2*X^2 + Y*Z*X^2 + Z*X + Y^3*X + Y*Z + Y^5",
        "--family",
        "codeg",
    ],
    &["norm", "--ring", "Z[sqrt(10)]", "--elem", "(29+9g)"],
    &["conj", "--ring", "Z[omega(5)]", "--elem", "(1+g)"],
    &[
        "ord",
        "--ring",
        "Z[sqrt(10)]",
        "--elem",
        "45!",
        "-p",
        "(11+3g)",
    ],
    &["prime-cert", "--ring", "Z[cbrt(12)]", "--elem", "(7-3g)"],
    &[
        "prime-above",
        "--ring",
        "Z[sqrt(17)]",
        "-p",
        "23",
        "--bound",
        "40",
    ],
    &[
        "thm1",
        "--ring",
        "Z[sqrt(10)]",
        "--poly",
        "X^7 + 33!*X + 45!",
        "--prime",
        "(11+3g)",
    ],
    &[
        "quad",
        "--ring",
        "Z[sqrt(11),k=425]",
        "--poly",
        "X^3 - (999250+1846625g)",
        "-p",
        "5",
    ],
    &[
        "normal",
        "--ring",
        "Z[sqrt(10)]",
        "--poly",
        "X^3 + 31*X + 62",
        "-p",
        "31",
        "--prime",
        "(11+3g)",
    ],
    &[
        "cubic",
        "--ring",
        "Z[cbrt(12)]",
        "--poly",
        "X^5 + 19*X^2 + 38",
        "-p",
        "19",
        "--prime",
        "(7-3g)",
    ],
    &[
        "oracle",
        "--ring",
        "Z[sqrt(11)]",
        "--poly",
        "X^3 - (999250+1846625g)",
        "--coord-bound",
        "60",
    ],
    &[
        "fuzz", "--mode", "validate", "--family", "deg", "--trials", "5", "--seed", "3",
    ],
    &["axioms", "--ring", "Z", "--val", "ord:4", "--pairs", "300"],
];

fn schema_validation() -> Check {
    let schema = compiled_schema()?;
    for args in INVOCATIONS {
        let mut full = args.to_vec();
        full.push("--json");
        let (code, out) = cli(&full);
        ensure(code != dumas_cli::EXIT_USAGE, || {
            format!("{args:?}: usage error")
        })?;
        let v: Value = serde_json::from_str(&out).map_err(|e| format!("{args:?}: {e}"))?;
        if let Err(errors) = schema.validate(&v) {
            let msgs: Vec<String> = errors
                .map(|e| format!("{} at {}", e, e.instance_path))
                .collect();
            return Err(format!("{}: {}", args[0], msgs.join("; ")));
        }
        ensure(v["command"] == args[0], || {
            format!("command field {}", v["command"])
        })?;
    }
    Ok(format!("{} command reports validate", INVOCATIONS.len()))
}

fn exit_codes() -> Check {
    let cases: &[(&str, &[&str], i32)] = &[
        (
            "irreducible-certified",
            &["check", "--poly", "X^4+2*X+2", "--val", "ord:2"],
            0,
        ),
        ("conjectural-certificate", INVOCATIONS[7], 1),
        (
            "no-certificate",
            &["check", "--poly", "X^2+1", "--val", "ord:2"],
            2,
        ),
        (
            "inconclusive",
            &["oracle", "--poly", "X^2+1", "--coord-bound", "5"],
            2,
        ),
        ("axiom-violation", INVOCATIONS[13], 2),
        ("reducible", INVOCATIONS[11], 3),
        ("ok", INVOCATIONS[2], 0),
    ];
    for (verdict, args, want) in cases {
        let mut full = args.to_vec();
        full.push("--json");
        let (code, out) = cli(&full);
        let v: Value = serde_json::from_str(&out).map_err(|e| format!("{args:?}: {e}"))?;
        ensure(v["verdict"] == *verdict, || {
            format!("{args:?}: verdict {}", v["verdict"])
        })?;
        ensure(code == *want, || {
            format!("{verdict}: exit {code}, wanted {want}")
        })?;
    }
    for bad in [
        &["check", "--poly", "X^2+", "--val", "ord:2"][..],
        &["norm", "--ring", "Z[sqrt(8)]", "--elem", "1"],
        &["nope"],
    ] {
        let (code, _) = cli(bad);
        ensure(code == dumas_cli::EXIT_USAGE, || {
            format!("{bad:?}: exit {code}")
        })?;
    }
    Ok("0/1/2/2/2/3/0 by verdict, 4 on usage and parse errors".into())
}

fn main() {
    let mut suite = Suite::new();
    suite.run("1 valuation axioms", axiom_suite);
    suite.run("2 degree laws", degree_laws);
    suite.group(
        "3 worked examples",
        vec![
            ("weighted degree", Box::new(weighted_degree_golden)),
            ("weighted codegree", Box::new(weighted_codegree_golden)),
            ("Z[sqrt(10)] primes", Box::new(sqrt10_golden)),
            (
                "cube of 10+55g and ord_5 in three orders",
                Box::new(c0_and_orders),
            ),
            (
                "quad_cor_check fires over the k=425 order",
                Box::new(quad_cor_at_425),
            ),
            ("oracle over Z[sqrt(11)]", Box::new(sqrt11_oracle)),
            ("pure cubic primes", Box::new(cubic_golden)),
            ("quadratic norms", Box::new(norm_spot_checks)),
        ],
    );
    suite.run("4 planted products", planted_products);
    suite.run("5 validation fuzz", validation_fuzz);
    suite.run("6 exploration at n = 7", exploration);
    suite.group(
        "7 command line",
        vec![
            ("round trip corpus", Box::new(round_trip_corpus)),
            ("JSON schema", Box::new(schema_validation)),
            ("exit codes", Box::new(exit_codes)),
        ],
    );
    std::process::exit(suite.finish());
}

use std::fmt::Write;
use std::time::Instant;

use serde_json::{json, Value};

use schubert_core::classes::{
    determinant_for, double_grothendieck, ktheory_straightening_sides, push_composition, PushCache, Route, Theory,
};
use schubert_core::combinat::{
    grassmannian_permutation, straighten_composition, Composition, Partition, Permutation, StraightenOutcome,
};
use schubert_core::localize::{FixedPoint, Localizer};
use schubert_core::poly::Polynomial;
use schubert_core::verify::{self, Suite, VerifyConfig};
use schubert_core::Error;

use crate::args::{Cli, Command, Format, RouteArg, TheoryArg};
use crate::render::{json_line, parts_json, poly, poly_json};

pub struct Outcome {
    pub stdout: String,
    pub stderr: Option<String>,
    pub code: u8,
}

enum Failure {
    /// Bad input: exit 2.
    Invalid(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Invalid(e.to_string())
    }
}

/// Output and whether every check passed (exit 0) or not (exit 1).
type CmdResult = Result<(String, bool), Failure>;

pub fn run(cli: &Cli) -> Outcome {
    let result = check_dimensions(cli).and_then(|()| match &cli.command {
        Command::Schur => cmd_class(cli, Theory::Cohomology, "schur"),
        Command::Groth => cmd_class(cli, Theory::KTheory, "groth"),
        Command::Push => cmd_push(cli),
        Command::Straighten { pos } => cmd_straighten(cli, *pos),
        Command::Dgroth { perm } => cmd_dgroth(cli, perm.as_deref()),
        Command::Localize { at } => cmd_localize(cli, at.as_deref()),
        Command::Verify { suite } => cmd_verify(cli, suite),
        Command::Bench => cmd_bench(cli),
    });
    match result {
        Ok((stdout, true)) => Outcome { stdout, stderr: None, code: 0 },
        Ok((stdout, false)) => Outcome { stdout, stderr: None, code: 1 },
        Err(Failure::Invalid(msg)) => Outcome {
            stdout: String::new(),
            stderr: Some(format!("error: {msg}")),
            code: 2,
        },
    }
}

fn check_dimensions(cli: &Cli) -> Result<(), Failure> {
    if cli.k == 0 {
        return Err(Failure::Invalid("--k must be at least 1".into()));
    }
    if cli.n_cap == 0 {
        return Err(Failure::Invalid("--n-cap must be at least 1".into()));
    }
    Ok(())
}

fn theory_of(cli: &Cli) -> Theory {
    match cli.theory {
        TheoryArg::Coh => Theory::Cohomology,
        TheoryArg::K => Theory::KTheory,
    }
}

fn composition(cli: &Cli) -> Result<Composition, Failure> {
    let mu: Composition = cli.lam.parse()?;
    if mu.len() > cli.k {
        return Err(Failure::Invalid(format!(
            "--lam {} has {} parts but k = {}",
            cli.lam,
            mu.len(),
            cli.k
        )));
    }
    Ok(Composition::new(mu.padded(cli.k)))
}

fn partition(cli: &Cli) -> Result<Partition, Failure> {
    let mu = composition(cli)?;
    let lambda = Partition::new(mu.parts().to_vec())
        .map_err(|_| Failure::Invalid(format!("--lam {} must be weakly decreasing", cli.lam)))?;
    if lambda.first() as usize > cli.n_cap {
        return Err(Failure::Invalid(format!(
            "--lam {} has first part {} > N = {}",
            cli.lam,
            lambda.first(),
            cli.n_cap
        )));
    }
    Ok(lambda)
}

fn routes(cli: &Cli, default: Route) -> Vec<Route> {
    match cli.route {
        None => vec![default],
        Some(RouteArg::Det) => vec![Route::Determinant],
        Some(RouteArg::Sym) => vec![Route::Symmetrizer],
        Some(RouteArg::Op) => vec![Route::Operator],
        Some(RouteArg::All) => Route::ALL.to_vec(),
    }
}

/// Prints one polynomial per route; with several routes, adds a verdict.
fn emit_routes(cli: &Cli, command: &str, theory: Theory, mu: &Composition, values: &[(Route, Polynomial)]) -> CmdResult {
    let all_match = values.windows(2).all(|w| w[0].1 == w[1].1);
    let mut out = String::new();
    match cli.format {
        Format::Json => {
            let mut obj = json!({
                "command": command,
                "k": cli.k,
                "n_cap": cli.n_cap,
                "lambda": parts_json(mu.parts()),
                "theory": theory.name(),
            });
            if let [(route, value)] = values {
                obj["route"] = json!(route.name());
                obj["value"] = poly_json(value);
            } else {
                obj["results"] = values
                    .iter()
                    .map(|(r, v)| json!({"route": r.name(), "value": poly_json(v)}))
                    .collect();
                obj["match"] = json!(all_match);
            }
            out.push_str(&json_line(&obj));
        }
        format => {
            if let [(_, value)] = values {
                writeln!(out, "{}", poly(value, format)).unwrap();
            } else {
                for (route, value) in values {
                    writeln!(out, "{route}: {}", poly(value, format)).unwrap();
                }
                writeln!(out, "{}", if all_match { "MATCH" } else { "MISMATCH" }).unwrap();
            }
        }
    }
    Ok((out, all_match))
}

fn cmd_class(cli: &Cli, theory: Theory, command: &str) -> CmdResult {
    let lambda = partition(cli)?;
    let mu = lambda.to_composition(cli.k);
    let mut values = Vec::new();
    for route in routes(cli, Route::Determinant) {
        let value = match route {
            Route::Determinant => determinant_for(theory, &mu, cli.k, cli.n_cap)?,
            _ => push_composition(&mu, cli.k, cli.n_cap, theory, route)?.value,
        };
        values.push((route, value));
    }
    emit_routes(cli, command, theory, &mu, &values)
}

fn cmd_push(cli: &Cli) -> CmdResult {
    let mu = composition(cli)?;
    let theory = theory_of(cli);
    let mut values = Vec::new();
    for route in routes(cli, Route::Operator) {
        values.push((route, push_composition(&mu, cli.k, cli.n_cap, theory, route)?.value));
    }
    emit_routes(cli, "push", theory, &mu, &values)
}

fn cmd_straighten(cli: &Cli, pos: Option<usize>) -> CmdResult {
    let mu = composition(cli)?;
    match theory_of(cli) {
        Theory::Cohomology => straighten_coh(cli, &mu),
        Theory::KTheory => straighten_k(cli, &mu, pos),
    }
}

fn straighten_coh(cli: &Cli, mu: &Composition) -> CmdResult {
    let outcome = straighten_composition(mu, cli.k)?;
    let pushed = push_composition(mu, cli.k, cli.n_cap, Theory::Cohomology, Route::Determinant)?.value;
    let mut out = String::new();
    let (sign, lambda) = match &outcome {
        StraightenOutcome::Zero => (0, None),
        StraightenOutcome::Signed { sign, partition, .. } => (*sign, Some(partition.clone())),
    };
    match cli.format {
        Format::Json => {
            let obj = json!({
                "command": "straighten",
                "k": cli.k,
                "n_cap": cli.n_cap,
                "lambda": parts_json(mu.parts()),
                "sign": sign,
                "partition": lambda.as_ref().map(|l| parts_json(&l.padded(cli.k))),
                "value": poly_json(&pushed),
            });
            out.push_str(&json_line(&obj));
        }
        format => {
            match &lambda {
                None => writeln!(out, "sign 0").unwrap(),
                Some(l) => writeln!(out, "sign {sign}, partition ({})", Composition::new(l.padded(cli.k))).unwrap(),
            }
            writeln!(out, "{}", poly(&pushed, format)).unwrap();
        }
    }
    Ok((out, true))
}

fn straighten_k(cli: &Cli, mu: &Composition, pos: Option<usize>) -> CmdResult {
    let k = cli.k;
    if k < 2 {
        return Err(Failure::Invalid("the K-theoretic identity needs k >= 2".into()));
    }
    let positions: Vec<usize> = match pos {
        Some(i) if i == 0 || i >= k => {
            return Err(Failure::Invalid(format!("--pos must lie in 1..{}", k - 1)))
        }
        Some(i) => vec![i],
        None => (1..k).collect(),
    };
    let cache = PushCache::new(Theory::KTheory, k, cli.n_cap, Route::Operator);
    let mut rows = Vec::new();
    for i in positions {
        let verdict = match ktheory_straightening_sides(mu, i, k, cli.n_cap, &cache)? {
            None => "vacuous",
            Some((lhs, rhs)) if lhs == rhs => "holds",
            Some(_) => "FAILS",
        };
        rows.push((i, verdict));
    }
    let ok = rows.iter().all(|(_, v)| *v != "FAILS");
    let mut out = String::new();
    match cli.format {
        Format::Json => {
            let obj = json!({
                "command": "straighten",
                "theory": Theory::KTheory.name(),
                "k": k,
                "n_cap": cli.n_cap,
                "lambda": parts_json(mu.parts()),
                "positions": rows.iter().map(|(i, v)| json!({"i": i, "result": v})).collect::<Vec<_>>(),
            });
            out.push_str(&json_line(&obj));
        }
        _ => {
            for (i, verdict) in &rows {
                writeln!(out, "position {i}: {verdict}").unwrap();
            }
        }
    }
    Ok((out, ok))
}

fn cmd_dgroth(cli: &Cli, perm: Option<&str>) -> CmdResult {
    let w: Permutation = match perm {
        Some(s) => s.parse()?,
        None => grassmannian_permutation(&partition(cli)?, cli.k, cli.k + cli.n_cap)?,
    };
    let value = double_grothendieck(&w)?;
    let out = match cli.format {
        Format::Json => json_line(&json!({
            "command": "dgroth",
            "perm": w.oneline(),
            "value": poly_json(&value),
        })),
        format => format!("{}\n", poly(&value, format)),
    };
    Ok((out, true))
}

fn cmd_localize(cli: &Cli, at: Option<&str>) -> CmdResult {
    let theory = theory_of(cli);
    let lambda = partition(cli)?;
    let class = determinant_for(theory, &lambda.to_composition(cli.k), cli.k, cli.n_cap)?;
    let points = match at {
        Some(s) => {
            let mu: Partition = s.parse()?;
            vec![FixedPoint::new(&mu, cli.k, cli.n_cap)?]
        }
        None => FixedPoint::all(cli.k, cli.n_cap),
    };
    let localizer = Localizer::new(theory, &class);
    let values: Vec<(Partition, Polynomial)> = points.iter().map(|p| (p.lambda.clone(), localizer.at(p))).collect();
    let out = match cli.format {
        Format::Json => json_line(&json!({
            "command": "localize",
            "theory": theory.name(),
            "k": cli.k,
            "n_cap": cli.n_cap,
            "lambda": parts_json(lambda.parts()),
            "points": values
                .iter()
                .map(|(mu, v)| json!({"at": parts_json(mu.parts()), "value": poly_json(v)}))
                .collect::<Vec<_>>(),
        })),
        format if at.is_some() => format!("{}\n", poly(&values[0].1, format)),
        format => values
            .iter()
            .map(|(mu, v)| format!("{mu}: {}\n", poly(v, format)))
            .collect(),
    };
    Ok((out, true))
}

fn cmd_verify(cli: &Cli, suite: &str) -> CmdResult {
    let suite: Suite = suite.parse()?;
    let default_trials = match suite {
        Suite::Localize => 5,
        _ => 100,
    };
    let config = VerifyConfig {
        k: cli.k,
        n_cap: cli.n_cap,
        trials: cli.trials.unwrap_or(default_trials).max(1),
        seed: cli.seed,
    };
    let report = verify::run(suite, &config);
    let out = match cli.format {
        Format::Json => json_line(&json!({
            "command": "verify",
            "suite": suite.name(),
            "k": config.k,
            "n_cap": config.n_cap,
            "trials": config.trials,
            "seed": config.seed,
            "cases": report.cases.len(),
            "passed": report.passed_count(),
            "failed": report.failed_count(),
            "notes": report.notes,
            "first_failure": report.first_failure().map(|c| json!({"label": c.label, "detail": c.detail})),
        })),
        _ => report.to_string(),
    };
    Ok((out, report.all_passed()))
}

struct BenchRow {
    k: usize,
    lambda: Partition,
    route: Route,
    steps: usize,
    micros: u128,
    terms: usize,
}

fn cmd_bench(cli: &Cli) -> CmdResult {
    let theory = theory_of(cli);
    let cols = cli.n_cap.min(2) as u32;
    let mut rows = Vec::new();
    for k in 1..=cli.k {
        let mut grid: Vec<Partition> = Partition::all_in_box(k, cols).into_iter().filter(|l| l.length() <= 2).collect();
        grid.sort_by_key(|l| (l.size(), l.padded(k)));
        for lambda in grid {
            let mu = lambda.to_composition(k);
            for route in Route::ALL {
                let start = Instant::now();
                let value = push_composition(&mu, k, cli.n_cap, theory, route)?.value;
                let micros = start.elapsed().as_micros();
                let steps = match route {
                    Route::Operator => k * (k - 1) / 2,
                    _ => (1..=k).product(),
                };
                rows.push(BenchRow { k, lambda: lambda.clone(), route, steps, micros, terms: value.len() });
            }
        }
    }
    let mut out = String::new();
    match cli.format {
        Format::Json => {
            let list: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "k": r.k,
                        "n_cap": cli.n_cap,
                        "lambda": parts_json(r.lambda.parts()),
                        "theory": theory.name(),
                        "route": r.route.name(),
                        "steps": r.steps,
                        "micros": r.micros as u64,
                        "terms": r.terms,
                    })
                })
                .collect();
            out.push_str(&json_line(&json!({
                "command": "bench",
                "threads": schubert_core::par::current_threads(),
                "rows": list,
            })));
        }
        _ => {
            writeln!(out, "theory {theory}, N = {}, threads = {}", cli.n_cap, schubert_core::par::current_threads()).unwrap();
            writeln!(out, "{:>2} {:>8} {:>12} {:>6} {:>12} {:>7}", "k", "lambda", "route", "steps", "micros", "terms").unwrap();
            for r in &rows {
                writeln!(
                    out,
                    "{:>2} {:>8} {:>12} {:>6} {:>12} {:>7}",
                    r.k,
                    r.lambda.to_string(),
                    r.route.name(),
                    r.steps,
                    r.micros,
                    r.terms
                )
                .unwrap();
            }
        }
    }
    Ok((out, true))
}

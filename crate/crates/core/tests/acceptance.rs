//! Acceptance gate: ten exact-equality criteria, one PASS/FAIL line each.
//!
//! Run with `cargo test -p schubert-core --test acceptance`.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use schubert_core::classes::{factorial_schur_det, push_composition, specialize_family_to_zero, Route, Theory};
use schubert_core::combinat::{Composition, Partition};
use schubert_core::poly::{Family, Integer, Monomial, Polynomial, VarId};
use schubert_core::verify::{
    dgroth_cases, jacobi_laws, localize_cases, operator_relations, random_inputs, route_case, route_inputs,
    straighten_k_cases, vanishing_cases, CaseResult,
};

const SEED: u64 = 20_240_601;

type Outcome = Result<String, String>;

fn tally(cases: &[CaseResult]) -> Outcome {
    match cases.iter().find(|c| !c.passed) {
        None => Ok(format!("{} cases", cases.len())),
        Some(bad) => Err(format!(
            "{} of {} cases failed; first: {} {}",
            cases.iter().filter(|c| !c.passed).count(),
            cases.len(),
            bad.label,
            bad.detail.as_deref().unwrap_or("")
        )),
    }
}

fn worked_examples() -> Outcome {
    let c = |v: &[u32]| Composition::new(v.to_vec());
    for n_cap in [2, 3] {
        let s11 = factorial_schur_det(&c(&[1, 1]), 2, n_cap).map_err(|e| e.to_string())?;
        for route in Route::ALL {
            let zero = push_composition(&c(&[1, 2]), 2, n_cap, Theory::Cohomology, route)
                .map_err(|e| e.to_string())?
                .value;
            if !zero.is_zero() {
                return Err(format!("N={n_cap} {route}: push of (1,2) is {zero}"));
            }
            let minus = push_composition(&c(&[0, 2]), 2, n_cap, Theory::Cohomology, route)
                .map_err(|e| e.to_string())?
                .value;
            if minus != s11.neg() {
                return Err(format!("N={n_cap} {route}: push of (0,2) is {minus}, expected -({s11})"));
            }
        }
    }
    Ok("N = 2, 3 on all three routes".into())
}

fn routes(theory: Theory) -> Outcome {
    let n_cap = 3;
    let mut cases = Vec::new();
    let mut counts = Vec::new();
    for k in 1..=3 {
        let inputs = route_inputs(k, n_cap, theory);
        counts.push(format!("k={k}: {}", inputs.len()));
        cases.extend(inputs.iter().map(|mu| route_case(mu, k, n_cap, theory)));
    }
    tally(&cases).map(|s| format!("{s} ({})", counts.join(", ")))
}

fn ktheory_straightening() -> Outcome {
    let cases: Vec<_> = (2..=3).flat_map(|k| straighten_k_cases(k, 3)).collect();
    tally(&cases)
}

fn operator_algebra() -> Outcome {
    let mut cases = Vec::new();
    for k in 2..=4 {
        cases.extend(operator_relations(k, &random_inputs(k, 100, SEED)));
    }
    tally(&cases).map(|s| format!("{s}, 100 random inputs each"))
}

fn jacobi() -> Outcome {
    let mut cases = Vec::new();
    for k in 1..=4 {
        cases.extend(jacobi_laws(k, &random_inputs(k, 100, SEED)));
    }
    tally(&cases).map(|s| format!("{s}, 100 random inputs each"))
}

fn double_grothendieck() -> Outcome {
    let cases: Vec<_> = (1..=4).flat_map(dgroth_cases).collect();
    tally(&cases)
}

fn vanishing() -> Outcome {
    let mut cases = Vec::new();
    for theory in [Theory::Cohomology, Theory::KTheory] {
        for k in 1..=3 {
            cases.extend(vanishing_cases(k, 3, theory));
        }
    }
    tally(&cases)
}

fn localized_pushforward() -> Outcome {
    let mut cases = Vec::new();
    for k in 1..=3 {
        cases.extend(localize_cases(k, 2, 5, SEED).0);
    }
    tally(&cases).map(|s| format!("{s}, 5 specializations each"))
}

/// Semistandard tableaux of shape `lambda` with entries in `1..=max`,
/// as content vectors.
fn ssyt_contents(lambda: &[u32], max: u32) -> Vec<Vec<u32>> {
    let cells: Vec<(usize, usize)> = lambda
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut out = Vec::new();
    let mut filling: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    fn go(
        idx: usize,
        cells: &[(usize, usize)],
        max: u32,
        filling: &mut BTreeMap<(usize, usize), u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if idx == cells.len() {
            let mut content = vec![0; max as usize];
            for v in filling.values() {
                content[*v as usize - 1] += 1;
            }
            out.push(content);
            return;
        }
        let (r, c) = cells[idx];
        let left = if c > 0 { filling[&(r, c - 1)] } else { 1 };
        let above = if r > 0 { filling[&(r - 1, c)] + 1 } else { 1 };
        for v in left.max(above)..=max {
            filling.insert((r, c), v);
            go(idx + 1, cells, max, filling, out);
        }
        filling.remove(&(r, c));
    }
    go(0, &cells, max, &mut filling, &mut out);
    out
}

fn tableau_schur(lambda: &[u32], k: usize) -> Polynomial {
    Polynomial::from_terms(ssyt_contents(lambda, k as u32).into_iter().map(|content| {
        let pairs = content.iter().enumerate().map(|(i, &e)| (VarId::x(i as u32 + 1), e as i32));
        (Monomial::from_pairs(pairs), Integer::ONE)
    }))
}

fn classical_specialization() -> Outcome {
    let k = 2;
    let mut checked = 0;
    for lambda in Partition::all_in_box(2, 2) {
        let oracle = tableau_schur(lambda.parts(), k);
        for n_cap in [2, 3] {
            let det = factorial_schur_det(&lambda.to_composition(k), k, n_cap).map_err(|e| e.to_string())?;
            let at_zero = specialize_family_to_zero(&det, Family::Tcoh);
            if at_zero != oracle {
                return Err(format!("lambda={lambda} N={n_cap}: {at_zero} vs tableaux {oracle}"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} cases"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("worked examples (1,2) -> 0 and (0,2) -> -s_(1,1)", worked_examples),
        ("cohomology route equivalence, parts <= 3, k <= 3, N = 3", || routes(Theory::Cohomology)),
        ("K-theory route equivalence, partitions in (3^3), N = 3", || routes(Theory::KTheory)),
        ("K-theory straightening, parts <= 3, k in {2,3}", ktheory_straightening),
        ("operator algebra relations and word independence up to S_4", operator_algebra),
        ("Jacobi symmetrizer equals w0 operator, k <= 4", jacobi),
        ("double Grothendieck recursion and Grassmannian match, n <= 4", double_grothendieck),
        ("vanishing of localized determinantal classes, (3^3)", vanishing),
        ("localized pushforward consistency, (2^3)", localized_pushforward),
        ("t = 0 specialization against tableau expansion, (2^2)", classical_specialization),
    ];
    let mut failures = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|panic| {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] criterion {}: {name} ({detail}; {secs:.2}s)", n + 1),
            Err(detail) => {
                failures += 1;
                println!("[FAIL] criterion {}: {name} ({detail}; {secs:.2}s)", n + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

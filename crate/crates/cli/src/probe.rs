//! Whether the gcd of all solutions of `a x = b` is again a solution,
//! for one equation or swept over many moduli.

use std::collections::HashMap;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde_json::{json, Value};
use zelisko_core::linsolve::gcd_solution_probe;
use zelisko_core::{solve, Domain, Modulus, Residue, RingCtx};

use crate::commands::Ctx;
use crate::input::parse_range;
use crate::report::{elem, join, table, CliError, Report};

/// Rows of the human-readable failure table.
const TABLE_ROWS: usize = 40;

struct Failure {
    m: String,
    a: String,
    b: String,
    gcd: String,
}

struct Sweep {
    checked: u64,
    failures: Vec<Failure>,
}

/// One equation, or every solvable `a x = b` of R_m. For the full sweep
/// the solutions are grouped by right-hand side from the products `a x`.
fn sweep_modulus<D: Domain>(
    m: &Modulus<D>,
    equation: Option<(&str, &str)>,
    bound: u64,
) -> Result<Sweep, CliError> {
    let d = m.domain();
    let mut out = Sweep {
        checked: 0,
        failures: Vec::new(),
    };
    let mut record = |a: &Residue<D>, b: &Residue<D>, g: &D::Elem| {
        out.checked += 1;
        if &(a * &m.reduce(g)) != b {
            out.failures.push(Failure {
                m: m.value().to_string(),
                a: a.to_string(),
                b: b.to_string(),
                gcd: g.to_string(),
            });
        }
    };
    if let Some((a, b)) = equation {
        let (a, b) = (m.parse_residue(a)?, m.parse_residue(b)?);
        if a.divides(&b)? {
            let xs = solve(&a, &b)?.elements(bound)?;
            record(&a, &b, &d.gcd_all(xs.iter().map(Residue::rep)));
        }
        return Ok(out);
    }
    let ring = m.elements(bound)?;
    for a in &ring {
        let mut gcds: HashMap<Residue<D>, D::Elem> = HashMap::new();
        for x in &ring {
            gcds.entry(a * x)
                .and_modify(|g| *g = d.gcd(g, x.rep()))
                .or_insert_with(|| d.canonical(x.rep()).0);
        }
        let mut by_rhs: Vec<_> = gcds.into_iter().collect();
        by_rhs.sort_by(|(b1, _), (b2, _)| b1.enum_cmp(b2));
        for (b, g) in &by_rhs {
            record(a, b, g);
        }
    }
    Ok(out)
}

/// Integers in the range for Z; for polynomial rings the range indexes
/// the enumeration, keeping only canonical non-units.
fn moduli<D: Domain>(d: &D, ring: RingCtx, range: std::ops::RangeInclusive<u64>) -> Vec<Modulus<D>> {
    range
        .filter_map(|k| {
            let e = match ring {
                RingCtx::Integers => d.from_i64(i64::try_from(k).ok()?),
                RingCtx::PolynomialsOverFp { .. } => d.enumerate(&BigUint::from(k)),
            };
            if d.canonical(&e).0 != e {
                return None;
            }
            Modulus::new(d.clone(), e).ok()
        })
        .collect()
}

fn single<D: Domain>(ctx: &Ctx<D>, a: &str, b: &str) -> Result<Report, CliError> {
    let m = ctx.modulus()?;
    let (a, b) = (m.parse_residue(a)?, m.parse_residue(b)?);
    let r = gcd_solution_probe(&a, &b, ctx.bound())?;
    let pairs: Vec<Value> = r
        .failing_pairs
        .iter()
        .map(|(x, y, g)| json!({"x": elem(x), "y": elem(y), "gcd": elem(g)}))
        .collect();
    let data = json!({
        "modulus": elem(m.value()),
        "a": elem(&a),
        "b": elem(&b),
        "solutions": r.solutions.iter().map(elem).collect::<Vec<_>>(),
        "gcd_all": elem(&r.gcd_all),
        "gcd_all_is_solution": r.gcd_all_is_solution,
        "failing_pairs": pairs,
        "truncated": r.truncated,
    });
    let mut human = format!(
        "solutions of {a}x = {b}: {}\ngcd of all solutions: {} ({})\n",
        join(&r.solutions),
        r.gcd_all,
        if r.gcd_all_is_solution { "a solution" } else { "not a solution" }
    );
    if r.failing_pairs.is_empty() {
        human += "every pairwise gcd is a solution\n";
    } else {
        let rows: Vec<Vec<String>> = r
            .failing_pairs
            .iter()
            .map(|(x, y, g)| vec![x.to_string(), y.to_string(), g.to_string()])
            .collect();
        human += &table(&["x", "y", "gcd (not a solution)"], &rows);
    }
    let mut report = Report::ok(data, human);
    if r.truncated {
        report = report.note("failing pairs truncated");
    }
    Ok(report)
}

pub fn run<D: Domain>(
    ctx: &Ctx<D>,
    a: Option<&str>,
    b: Option<&str>,
    range: Option<&str>,
) -> Result<Report, CliError> {
    let equation = match (a, b) {
        (Some(a), Some(b)) => Some((a, b)),
        (None, None) => None,
        _ => return Err(CliError::Usage("give both --a and --b, or neither".into())),
    };
    let mods = match range {
        Some(text) => {
            let ring: RingCtx = ctx.cli.ring.parse()?;
            moduli(&ctx.domain, ring, parse_range(text)?)
        }
        None => {
            if let Some((a, b)) = equation {
                return single(ctx, a, b);
            }
            vec![ctx.modulus()?]
        }
    };
    let bound = ctx.bound();
    let sweeps = mods
        .par_iter()
        .map(|m| sweep_modulus(m, equation, bound))
        .collect::<Result<Vec<_>, _>>()?;
    let checked: u64 = sweeps.iter().map(|s| s.checked).sum();
    let failures: Vec<&Failure> = sweeps.iter().flat_map(|s| &s.failures).collect();
    let data = json!({
        "moduli": mods.len(),
        "equations_checked": checked,
        "failures": failures
            .iter()
            .map(|f| json!({"m": f.m, "a": f.a, "b": f.b, "gcd": f.gcd}))
            .collect::<Vec<_>>(),
    });
    let mut human = format!(
        "{} moduli, {checked} solvable equations, {} where the gcd of all solutions is not a solution\n",
        mods.len(),
        failures.len()
    );
    if !failures.is_empty() {
        let rows: Vec<Vec<String>> = failures
            .iter()
            .take(TABLE_ROWS)
            .map(|f| vec![f.m.clone(), format!("{}x = {}", f.a, f.b), f.gcd.clone()])
            .collect();
        human += &table(&["m", "Equation", "gcd of all solutions"], &rows);
    }
    let mut report = Report::ok(data, human);
    if failures.len() > TABLE_ROWS {
        report = report.note(format!(
            "table shows the first {TABLE_ROWS} of {} cases; --json lists all",
            failures.len()
        ));
    }
    Ok(report)
}

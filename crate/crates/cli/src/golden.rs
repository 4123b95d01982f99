//! The worked examples over Z_6, Z_36 and Z_72, checked claim by claim.

use serde_json::json;
use zelisko_core::linsolve::gcd_solution_probe;
use zelisko_core::{solve, Integers, Modulus, Residue, Result};

use crate::report::{table, Report};

struct Claim {
    block: &'static str,
    text: String,
    outcome: Result<bool>,
}

fn ints(xs: &[Residue<Integers>]) -> Vec<i64> {
    xs.iter().map(|x| i64::try_from(x.rep()).expect("small residue")).collect()
}

fn zm(m: i64) -> Modulus<Integers> {
    Modulus::integer(m).expect("valid modulus")
}

/// `(solutions, generating solutions)` of `a x = b` as sorted integers.
fn columns(m: &Modulus<Integers>, a: i64, b: i64) -> Result<(Vec<i64>, Vec<i64>)> {
    let set = solve(&m.residue_i64(a), &m.residue_i64(b))?;
    Ok((ints(&set.elements(1000)?), ints(&set.generating_solutions(1000)?)))
}

fn example_one() -> Vec<Claim> {
    let z6 = zm(6);
    let z36 = zm(36);
    let four = z6.residue_i64(4);
    let eight = z36.residue_i64(8);
    vec![
        Claim {
            block: "Z_6",
            text: "4 = 2 * 5 with 2 = gcd(4, 6) and 5 a unit".into(),
            outcome: Ok({
                let e = four.unit_part();
                four.mu() == 2.into() && e == z6.residue_i64(5) && &z6.residue_i64(2) * &e == four
            }),
        },
        Claim {
            block: "Z_6",
            text: "2 is not a unit".into(),
            outcome: Ok(!z6.residue_i64(2).is_unit()),
        },
        Claim {
            block: "Z_36",
            text: "8 = 4 * e with e in {11, 29}, e a unit".into(),
            outcome: Ok({
                let e = eight.unit_part();
                eight.mu() == 4.into()
                    && (e == z36.residue_i64(11) || e == z36.residue_i64(29))
                    && e.is_unit()
                    && &z36.residue_i64(4) * &e == eight
            }),
        },
        Claim {
            block: "Z_36",
            text: "8 = 4 * 11 = 4 * 29 with 11, 29 units".into(),
            outcome: Ok([11, 29].iter().all(|&u| {
                let u = z36.residue_i64(u);
                u.is_unit() && &z36.residue_i64(4) * &u == eight
            })),
        },
    ]
}

fn example_two() -> Vec<Claim> {
    let m = zm(36);
    let r = |n| m.residue_i64(n);
    let solutions = || -> Result<bool> { Ok(columns(&m, 4, 24)?.0 == [6, 15, 24, 33]) };
    let annihilator = || -> Result<bool> {
        let ann = solve(&r(4), &r(0))?.elements(1000)?;
        Ok(ints(&ann) == [0, 9, 18, 27] && r(4).annihilator() == r(9))
    };
    let generating = || -> Result<bool> {
        let set = solve(&r(4), &r(24))?;
        let gens = set.generating_solutions(1000)?;
        let all = set.elements(1000)?;
        let divide_all = gens
            .iter()
            .map(|g| all.iter().map(|x| g.divides(x)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .all(|ok| ok);
        Ok(ints(&gens) == [15, 33] && divide_all)
    };
    let associates = || -> Result<bool> {
        let (x, y) = (r(15), r(33));
        let witness = x.associate_unit(&y)?;
        let both = [7, 31].iter().all(|&u| r(u).is_unit() && &x * &r(u) == y);
        Ok(x.associates(&y)? && both && witness.is_some_and(|e| e == r(7) || e == r(31)))
    };
    vec![
        Claim {
            block: "Z_36",
            text: "solutions of 4x = 24 are 6 + Ann(4) = {6, 15, 24, 33}".into(),
            outcome: solutions(),
        },
        Claim {
            block: "Z_36",
            text: "Ann(4) = {0, 9, 18, 27}".into(),
            outcome: annihilator(),
        },
        Claim {
            block: "Z_36",
            text: "generating solutions are {15, 33} and divide every solution".into(),
            outcome: generating(),
        },
        Claim {
            block: "Z_36",
            text: "33 = 15 * 31 = 15 * 7 with 7, 31 units".into(),
            outcome: associates(),
        },
    ]
}

fn example_three() -> Vec<Claim> {
    let m = zm(72);
    let rows: [(i64, i64, &[i64], &[i64]); 3] = [
        (4, 8, &[2, 20, 38, 56], &[2, 38]),
        (8, 24, &[3, 12, 21, 30, 39, 48, 57, 66], &[3, 21, 39, 57]),
        (4, 24, &[6, 24, 42, 60], &[6, 42]),
    ];
    let mut claims: Vec<Claim> = rows
        .iter()
        .map(|&(a, b, sols, gens)| Claim {
            block: "Z_72",
            text: format!("{a}x = {b}: solutions {sols:?}, generating {gens:?}"),
            outcome: columns(&m, a, b).map(|(s, g)| s == sols && g == gens),
        })
        .collect();
    let product = || -> Result<bool> {
        let x = &m.residue_i64(2) * &m.residue_i64(12);
        let set = solve(&m.residue_i64(4), &m.residue_i64(24))?;
        Ok(x == m.residue_i64(24) && set.contains(&x) && !set.is_generating(&x))
    };
    claims.push(Claim {
        block: "Z_72",
        text: "2 * 12 = 24 solves 4x = 24 but is not generating".into(),
        outcome: product(),
    });
    claims
}

fn problem() -> Vec<Claim> {
    let m = zm(72);
    let (four, eight) = (m.residue_i64(4), m.residue_i64(8));
    let all = || -> Result<bool> {
        let r = gcd_solution_probe(&four, &eight, 1000)?;
        Ok(r.gcd_all == 2.into() && r.gcd_all_is_solution)
    };
    let pair = || -> Result<bool> {
        let r = gcd_solution_probe(&four, &eight, 1000)?;
        let hit = r
            .failing_pairs
            .iter()
            .any(|(x, y, g)| *x == m.residue_i64(20) && *y == m.residue_i64(56) && *g == 4.into());
        Ok(hit && !solve(&four, &eight)?.contains(&four))
    };
    vec![
        Claim {
            block: "gcd of solutions",
            text: "gcd(2, 20, 38, 56) = 2 solves 4x = 8 in Z_72".into(),
            outcome: all(),
        },
        Claim {
            block: "gcd of solutions",
            text: "gcd(20, 56) = 4 does not solve 4x = 8 in Z_72".into(),
            outcome: pair(),
        },
    ]
}

pub fn run() -> Report {
    let claims: Vec<Claim> = [example_one(), example_two(), example_three(), problem()]
        .into_iter()
        .flatten()
        .collect();
    let passed = claims.iter().filter(|c| matches!(c.outcome, Ok(true))).count();
    let rows: Vec<Vec<String>> = claims
        .iter()
        .map(|c| {
            let status = match &c.outcome {
                Ok(true) => "PASS".to_string(),
                Ok(false) => "FAIL".to_string(),
                Err(e) => format!("ERROR ({e})"),
            };
            vec![status, c.block.to_string(), c.text.clone()]
        })
        .collect();
    let data = json!({
        "passed": passed,
        "total": claims.len(),
        "claims": claims
            .iter()
            .map(|c| json!({
                "block": c.block,
                "claim": c.text,
                "pass": matches!(c.outcome, Ok(true)),
                "error": c.outcome.as_ref().err().map(|e| e.to_string()),
            }))
            .collect::<Vec<_>>(),
    });
    let mut human = table(&["Result", "Block", "Claim"], &rows);
    human += &format!("{passed}/{} claims pass\n", claims.len());
    Report {
        ok: passed == claims.len(),
        data,
        diagnostics: Vec::new(),
        human,
    }
}

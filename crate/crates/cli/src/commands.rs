//! Command handlers, generic over the base domain.

use std::fmt::Write as _;

use serde_json::json;
use zelisko_core::linsolve::{perm_identity, DEFAULT_ENUMERATION_BOUND};
use zelisko_core::smith::{complete_row, right_associate, smith};
use zelisko_core::zelisko::{lemma10_check, membership, sample, witness};
use zelisko_core::{
    matrix, solve, ChainSystem, DiagPhi, Domain, Matrix, Modulus, Residue, ResidueMatrix,
};

use crate::input::{matrix_source, parse_list, parse_permutation};
use crate::report::{elem, elems, join, matrix_json, matrix_text, table, CliError, Report};
use crate::{probe, Cli, Command, Equation};

pub struct Ctx<'a, D: Domain> {
    pub domain: D,
    pub cli: &'a Cli,
}

impl<D: Domain> Ctx<'_, D> {
    pub fn bound(&self) -> u64 {
        self.cli.bound.unwrap_or(DEFAULT_ENUMERATION_BOUND)
    }

    pub fn modulus(&self) -> Result<Modulus<D>, CliError> {
        let text = self
            .cli
            .modulus
            .as_deref()
            .ok_or_else(|| CliError::Usage("this command needs --mod".into()))?;
        Ok(Modulus::new(self.domain.clone(), self.domain.parse_elem(text)?)?)
    }

    fn no_modulus(&self) -> Result<(), CliError> {
        match self.cli.modulus {
            Some(_) => Err(CliError::Usage(
                "this command works over the domain itself; drop --mod".into(),
            )),
            None => Ok(()),
        }
    }

    fn residues(&self, m: &Modulus<D>, eq: &Equation) -> Result<(Residue<D>, Residue<D>), CliError> {
        Ok((m.parse_residue(&eq.a)?, m.parse_residue(&eq.b)?))
    }

    fn chain(&self, m: &Modulus<D>, phi: &str) -> Result<ChainSystem<D>, CliError> {
        Ok(ChainSystem::from_reps(m, &parse_list(&self.domain, phi)?)?)
    }

    fn residue_matrix(
        &self,
        m: &Modulus<D>,
        src: &crate::MatrixSource,
    ) -> Result<ResidueMatrix<D>, CliError> {
        let reps = matrix_source(&self.domain, src.matrix.as_deref(), src.matrix_file.as_deref(), "matrix")?;
        Ok(ResidueMatrix::from_reps(m, &reps)?)
    }
}

fn equation(a: &Residue<impl Domain>, b: &Residue<impl Domain>) -> String {
    format!("{a}x = {b}")
}

fn equation_header<D: Domain>(m: &Modulus<D>) -> String {
    format!("R_m with m = {} over {}\n", m.value(), m.domain().name())
}

pub fn run<D: Domain>(domain: D, cli: &Cli) -> Result<Report, CliError> {
    let ctx = Ctx { domain, cli };
    match &cli.command {
        Command::Solve { eq, all, generating } => solve_cmd(&ctx, eq, *all, *generating),
        Command::Generating { eq } => solve_cmd(&ctx, eq, false, true),
        Command::MinGen { eq } => min_gen(&ctx, eq),
        Command::Ann { a } => ann(&ctx, a),
        Command::Assoc { eq } => assoc(&ctx, eq),
        Command::UnitPart { a } => unit_part(&ctx, a),
        Command::Chain { phi } => chain(&ctx, phi),
        Command::PermCheck { phi, sigma } => perm_check(&ctx, phi, sigma),
        Command::ZeliskoCheck { phi, h } => zelisko_check(&ctx, phi, h),
        Command::ZeliskoWitness { phi, h } => zelisko_witness(&ctx, phi, h),
        Command::ZeliskoSample { phi, seed } => zelisko_sample(&ctx, phi, *seed),
        Command::Lemma10 { phi, h } => lemma10(&ctx, phi, h),
        Command::Smith { a } => smith_cmd(&ctx, a),
        Command::Fact1 { a, b } => fact1(&ctx, a, b),
        Command::CompleteRow { row } => complete_row_cmd(&ctx, row),
        Command::Probe { a, b, mod_range } => {
            probe::run(&ctx, a.as_deref(), b.as_deref(), mod_range.as_deref())
        }
        Command::Golden => unreachable!("handled before ring dispatch"),
    }
}

fn solve_cmd<D: Domain>(ctx: &Ctx<D>, eq: &Equation, all: bool, generating: bool) -> Result<Report, CliError> {
    let m = ctx.modulus()?;
    let (a, b) = ctx.residues(&m, eq)?;
    let set = solve(&a, &b)?;
    let mut data = json!({
        "modulus": elem(m.value()),
        "a": elem(&a),
        "b": elem(&b),
        "generator": elem(set.generator()),
        "annihilator": elem(set.annihilator()),
        "count": set.cardinality().map(|c| c.to_string()),
    });
    let solutions_cell = if all {
        let xs = set.elements(ctx.bound())?;
        data["solutions"] = elems(&xs);
        join(&xs)
    } else {
        format!("{} + ({})t", set.generator(), set.annihilator())
    };
    let generating_cell = if generating {
        let gs = set.generating_solutions(ctx.bound())?;
        data["generating"] = elems(&gs);
        join(&gs)
    } else {
        set.generator().to_string()
    };
    let mut human = equation_header(&m);
    human += &table(
        &["Equation", "Solutions", "Generating solutions"],
        &[vec![equation(&a, &b), solutions_cell, generating_cell]],
    );
    let _ = writeln!(human, "generator: {}", set.generator());
    let _ = writeln!(human, "annihilator of {a}: ({})", set.annihilator());
    if let Some(c) = set.cardinality() {
        let _ = writeln!(human, "number of solutions: {c}");
    }
    Ok(Report::ok(data, human))
}

fn min_gen<D: Domain>(ctx: &Ctx<D>, eq: &Equation) -> Result<Report, CliError> {
    let m = ctx.modulus()?;
    let (a, b) = ctx.residues(&m, eq)?;
    let x = solve(&a, &b)?.min_generating(ctx.bound())?;
    let data = json!({"a": elem(&a), "b": elem(&b), "min_generating": elem(&x)});
    Ok(Report::ok(data, format!("least generating solution of {}: {x}\n", equation(&a, &b))))
}

fn ann<D: Domain>(ctx: &Ctx<D>, a: &str) -> Result<Report, CliError> {
    let m = ctx.modulus()?;
    let a = m.parse_residue(a)?;
    let gen = a.annihilator();
    let mut data = json!({"a": elem(&a), "generator": elem(&gen)});
    let mut human = format!("Ann({a}) = ({gen})\n");
    if m.cardinality().is_some_and(|c| c <= ctx.bound()) {
        let members = solve(&a, &m.reduce(&ctx.domain.zero()))?.elements(ctx.bound())?;
        data["elements"] = elems(&members);
        let _ = writeln!(human, "elements: {}", join(&members));
    }
    Ok(Report::ok(data, human))
}

fn assoc<D: Domain>(ctx: &Ctx<D>, eq: &Equation) -> Result<Report, CliError> {
    let m = ctx.modulus()?;
    let (a, b) = ctx.residues(&m, eq)?;
    let unit = a.associate_unit(&b)?;
    let mut data = json!({
        "a": elem(&a),
        "b": elem(&b),
        "associates": unit.is_some(),
        "witness": unit.as_ref().map(elem),
    });
    let mut human = match &unit {
        Some(e) => format!("{a} and {b} are associates: {b} = {a} * {e}\n"),
        None => format!("{a} and {b} are not associates\n"),
    };
    if unit.is_some() && m.cardinality().is_some_and(|c| c <= ctx.bound()) {
        let units: Vec<_> = solve(&a, &b)?
            .elements(ctx.bound())?
            .into_iter()
            .filter(Residue::is_unit)
            .collect();
        data["witnesses"] = elems(&units);
        let _ = writeln!(human, "all unit witnesses: {}", join(&units));
    }
    Ok(Report::ok(data, human))
}

fn unit_part<D: Domain>(ctx: &Ctx<D>, a: &str) -> Result<Report, CliError> {
    let m = ctx.modulus()?;
    let a = m.parse_residue(a)?;
    let mu = m.reduce(&a.mu());
    let e = a.unit_part();
    let check = &mu * &e == a;
    let data = json!({"a": elem(&a), "mu": elem(&mu), "unit": elem(&e), "verified": check});
    Ok(Report::ok(data, format!("{a} = {mu} * {e}, with {e} a unit\n")))
}

fn chain<D: Domain>(ctx: &Ctx<D>, phi: &str) -> Result<Report, CliError> {
    let m = ctx.modulus()?;
    let cs = ctx.chain(&m, phi)?;
    let enumerable = m.cardinality().is_some_and(|c| c <= ctx.bound());
    let n = cs.n();
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    for gap in 1..n {
        for j in 0..n - gap {
            let i = j + gap;
            let (a, b) = (&cs.phi()[j], &cs.phi()[i]);
            let set = solve(a, b)?;
            let psi = cs.psi(i, j);
            let mut entry = json!({
                "i": i + 1,
                "j": j + 1,
                "equation": equation(a, b),
                "psi": elem(&psi),
                "psi_is_generating": set.is_generating(&psi),
            });
            let (sol, gen) = if enumerable {
                let xs = set.elements(ctx.bound())?;
                let gs = set.generating_solutions(ctx.bound())?;
                entry["solutions"] = elems(&xs);
                entry["generating"] = elems(&gs);
                (join(&xs), join(&gs))
            } else {
                (
                    format!("{} + ({})t", set.generator(), set.annihilator()),
                    set.generator().to_string(),
                )
            };
            rows.push(vec![equation(a, b), sol, gen, psi.to_string()]);
            entries.push(entry);
        }
    }
    let data = json!({"phi": elems(cs.phi()), "equations": entries});
    let mut human = equation_header(&m);
    human += &table(&["Equation", "Solutions", "Generating solutions", "psi"], &rows);
    Ok(Report::ok(data, human))
}

fn perm_check<D: Domain>(ctx: &Ctx<D>, phi: &str, sigma: &str) -> Result<Report, CliError> {
    let m = ctx.modulus()?;
    let cs = ctx.chain(&m, phi)?;
    let sigma = parse_permutation(sigma)?;
    let id = perm_identity(&cs, &sigma)?;
    let data = json!({
        "descent_product": elem(&id.descent_product),
        "ascent_product": elem(&id.ascent_product),
        "index_identity": id.index_identity,
        "holds": id.holds(),
    });
    let human = format!(
        "descent product: {}\nascent product: {}\nindex identity: {}\nholds: {}\n",
        id.descent_product,
        id.ascent_product,
        id.index_identity,
        id.holds()
    );
    Ok(Report::ok(data, human))
}

fn zelisko_check<D: Domain>(ctx: &Ctx<D>, phi: &str, src: &crate::MatrixSource) -> Result<Report, CliError> {
    let m = ctx.modulus()?;
    let phi = DiagPhi::new(ctx.chain(&m, phi)?);
    let h = ctx.residue_matrix(&m, src)?;
    let member = membership(&h, &phi)?;
    let det = h.det();
    let data = json!({"member": member, "det": elem(&det), "invertible": det.is_unit()});
    Ok(Report::ok(data, format!("member: {member}\ndet: {det}\n")))
}

fn zelisko_witness<D: Domain>(ctx: &Ctx<D>, phi: &str, src: &crate::MatrixSource) -> Result<Report, CliError> {
    let m = ctx.modulus()?;
    let phi = DiagPhi::new(ctx.chain(&m, phi)?);
    let h = ctx.residue_matrix(&m, src)?;
    let s = witness(&h, &phi)?;
    let data = json!({"s": matrix_json(s.entries()), "det": elem(&s.det())});
    Ok(Report::ok(data, format!("S = {}\ndet S: {}\n", matrix_text(s.entries()), s.det())))
}

fn zelisko_sample<D: Domain>(ctx: &Ctx<D>, phi: &str, seed: u64) -> Result<Report, CliError> {
    let m = ctx.modulus()?;
    let phi = DiagPhi::new(ctx.chain(&m, phi)?);
    let h = sample(&phi, seed)?;
    let data = json!({"h": matrix_json(h.entries()), "seed": seed, "member": membership(&h, &phi)?});
    Ok(Report::ok(data, format!("H = {}\n", matrix_text(h.entries()))))
}

fn lemma10<D: Domain>(ctx: &Ctx<D>, phi: &str, src: &crate::MatrixSource) -> Result<Report, CliError> {
    let m = ctx.modulus()?;
    let cs = ctx.chain(&m, phi)?;
    let h = ctx.residue_matrix(&m, src)?;
    let equal = lemma10_check(&cs, &h)?;
    Ok(Report::ok(
        json!({"determinants_equal": equal}),
        format!("determinants equal: {equal}\n"),
    ))
}

fn smith_cmd<D: Domain>(ctx: &Ctx<D>, src: &crate::MatrixSource) -> Result<Report, CliError> {
    ctx.no_modulus()?;
    let d = &ctx.domain;
    let a = matrix_source(d, src.matrix.as_deref(), src.matrix_file.as_deref(), "matrix")?;
    let r = smith(d, &a)?;
    let data = json!({
        "p": matrix_json(&r.p),
        "q": matrix_json(&r.q),
        "phi": elems(&r.phi),
        "rank": r.rank(d),
    });
    let human = format!(
        "invariant factors: {}\nP = {}\nQ = {}\n",
        join(&r.phi),
        matrix_text(&r.p),
        matrix_text(&r.q)
    );
    Ok(Report::ok(data, human))
}

fn fact1<D: Domain>(
    ctx: &Ctx<D>,
    a: &crate::MatrixSource,
    b: &crate::OtherMatrixSource,
) -> Result<Report, CliError> {
    ctx.no_modulus()?;
    let d = &ctx.domain;
    let a = matrix_source(d, a.matrix.as_deref(), a.matrix_file.as_deref(), "matrix")?;
    let b = matrix_source(d, b.other.as_deref(), b.other_file.as_deref(), "other")?;
    let assoc = right_associate(d, &a, &b)?;
    Ok(Report::ok(
        json!({"right_associate": assoc}),
        format!("A = B U for an invertible U: {assoc}\n"),
    ))
}

fn complete_row_cmd<D: Domain>(ctx: &Ctx<D>, row: &str) -> Result<Report, CliError> {
    ctx.no_modulus()?;
    let d = &ctx.domain;
    let row = parse_list(d, row)?;
    let c: Matrix<D::Elem> = complete_row(d, &row)?;
    let det = matrix::det(d, &c)?;
    Ok(Report::ok(
        json!({"matrix": matrix_json(&c), "det": elem(&det)}),
        format!("{}\ndet: {det}\n", matrix_text(&c)),
    ))
}

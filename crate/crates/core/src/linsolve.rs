//! Scalar linear equations `a * x = b` in R_m.
//!
//! Every solvable equation has a generating solution, one dividing every
//! other solution, and any two generating solutions are associates. The
//! solution set is the coset `gen + Ann(a)`.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::residue::{Modulus, Residue};
use crate::ring::{CommRing, Domain};

/// Default cap on the number of elements materialized by enumerations.
pub const DEFAULT_ENUMERATION_BOUND: u64 = 1_000_000;

/// Cap on the pairs listed by [`gcd_solution_probe`].
pub const PROBE_PAIR_CAP: usize = 1000;

fn common_modulus<D: Domain>(a: &Residue<D>, b: &Residue<D>) -> Result<Modulus<D>> {
    if a.modulus() == b.modulus() {
        Ok(a.modulus().clone())
    } else {
        Err(Error::ModulusMismatch)
    }
}

/// All solutions of `a * x = b`: `gen + ann * R_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSet<D: Domain> {
    a: Residue<D>,
    b: Residue<D>,
    gen: Residue<D>,
    ann: Residue<D>,
}

/// Solves `a * x = b`.
///
/// With `a = mu_a e_a` and `b = mu_b e_b` (unit parts), the generating
/// solution is `sigma * e_a^-1 * e_b` for `sigma = mu_b / mu_a`.
pub fn solve<D: Domain>(a: &Residue<D>, b: &Residue<D>) -> Result<SolutionSet<D>> {
    let modulus = common_modulus(a, b)?;
    let d = modulus.domain();
    let mu_a = a.mu();
    if !d.divides(&mu_a, b.rep()) {
        return Err(Error::Unsolvable {
            a: a.to_string(),
            b: b.to_string(),
            gcd: mu_a.to_string(),
        });
    }
    let sigma = d.exact_div(&b.mu(), &mu_a)?;
    let inv_ea = a.unit_part().invert()?;
    let gen = &(&modulus.reduce(&sigma) * &inv_ea) * &b.unit_part();
    let set = SolutionSet {
        a: a.clone(),
        b: b.clone(),
        gen,
        ann: a.annihilator(),
    };
    debug_assert!(set.contains(&set.gen));
    Ok(set)
}

impl<D: Domain> SolutionSet<D> {
    pub fn coefficient(&self) -> &Residue<D> {
        &self.a
    }

    pub fn rhs(&self) -> &Residue<D> {
        &self.b
    }

    /// The generating solution fixed by the construction in [`solve`].
    pub fn generator(&self) -> &Residue<D> {
        &self.gen
    }

    /// Generator of `Ann(a)`; the solutions are `gen + ann * t`.
    pub fn annihilator(&self) -> &Residue<D> {
        &self.ann
    }

    pub fn modulus(&self) -> &Modulus<D> {
        self.a.modulus()
    }

    /// True iff `x` solves the equation.
    pub fn contains(&self, x: &Residue<D>) -> bool {
        x.modulus() == self.a.modulus() && &self.a * x == self.b
    }

    /// Number of solutions, `|R / mu_a R|`, if it fits in a u64.
    pub fn cardinality(&self) -> Option<u64> {
        self.modulus().domain().residue_count(&self.a.mu())
    }

    /// All solutions, sorted in enumeration order.
    ///
    /// `t -> ann * t` is injective on residues modulo `mu_a`, so walking
    /// those residues lists each solution once.
    pub fn elements(&self, bound: u64) -> Result<Vec<Residue<D>>> {
        let d = self.modulus().domain();
        let mu_a = self.a.mu();
        let count = match self.cardinality() {
            Some(c) if c <= bound => c,
            other => {
                return Err(Error::TooLarge {
                    what: "solution set".into(),
                    size: other.map_or("more than 2^64".into(), |c| c.to_string()),
                    bound,
                })
            }
        };
        let mut out: Vec<Residue<D>> = (0..count)
            .map(|k| {
                let t = self.modulus().reduce(&d.nth_residue(&mu_a, k));
                &self.gen + &(&self.ann * &t)
            })
            .collect();
        out.sort_by(|x, y| x.enum_cmp(y));
        Ok(out)
    }

    /// True iff `x` is a solution dividing every solution.
    ///
    /// Generating solutions are exactly the solutions associated with
    /// [`SolutionSet::generator`].
    pub fn is_generating(&self, x: &Residue<D>) -> bool {
        let verdict = self.contains(x) && x.mu() == self.gen.mu();
        #[cfg(debug_assertions)]
        if self.cardinality().is_some_and(|c| c <= 256) {
            let all = self.elements(256).expect("small coset");
            let brute = self.contains(x) && all.iter().all(|s| x.divides(s).unwrap());
            debug_assert_eq!(verdict, brute, "generating test disagrees with enumeration");
        }
        verdict
    }

    /// All generating solutions, sorted.
    pub fn generating_solutions(&self, bound: u64) -> Result<Vec<Residue<D>>> {
        let mu = self.gen.mu();
        Ok(self
            .elements(bound)?
            .into_iter()
            .filter(|x| x.mu() == mu)
            .collect())
    }

    /// The generating solution that comes first in enumeration order.
    pub fn min_generating(&self, bound: u64) -> Result<Residue<D>> {
        let found = self.generating_solutions(bound)?.into_iter().next();
        Ok(found.expect("the generator itself is generating"))
    }
}

/// The minimal generating solution of `a * x = b`.
pub fn min_generating<D: Domain>(a: &Residue<D>, b: &Residue<D>) -> Result<Residue<D>> {
    solve(a, b)?.min_generating(DEFAULT_ENUMERATION_BOUND)
}

/// A divisibility chain `phi_1 | ... | phi_n` of nonzero residues with
/// generating solutions `psi_ij` of `phi_i = phi_j * x` for `i > j`.
///
/// `psi_{i,i-1}` is the minimal generating solution; longer steps are the
/// products `psi_{i,i-1} * ... * psi_{j+1,j}`, so
/// `psi_{i,k} * psi_{k,j} = psi_{i,j}` holds exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainSystem<D: Domain> {
    phi: Vec<Residue<D>>,
    // psi[i][j] for j < i, zero-based
    psi: Vec<Vec<Residue<D>>>,
}

impl<D: Domain> ChainSystem<D> {
    pub fn new(phi: Vec<Residue<D>>) -> Result<Self> {
        if phi.len() < 2 {
            return Err(Error::InvalidChain("need at least two entries".into()));
        }
        let modulus = phi[0].modulus().clone();
        if phi.iter().any(|x| *x.modulus() != modulus) {
            return Err(Error::ModulusMismatch);
        }
        if let Some(pos) = phi.iter().position(Residue::is_zero) {
            return Err(Error::InvalidChain(format!("entry {} is zero", pos + 1)));
        }
        for (k, w) in phi.windows(2).enumerate() {
            if !w[0].divides(&w[1])? {
                return Err(Error::InvalidChain(format!(
                    "entry {} ({}) does not divide entry {} ({})",
                    k + 1,
                    w[0],
                    k + 2,
                    w[1]
                )));
            }
        }
        let n = phi.len();
        let mut psi: Vec<Vec<Residue<D>>> = vec![Vec::new(); n];
        for i in 1..n {
            let step = min_generating(&phi[i - 1], &phi[i])?;
            let mut row = Vec::with_capacity(i);
            for j in 0..i {
                if j == i - 1 {
                    row.push(step.clone());
                } else {
                    row.push(&step * &psi[i - 1][j]);
                }
            }
            psi[i] = row;
        }
        Ok(ChainSystem { phi, psi })
    }

    pub fn from_reps(modulus: &Modulus<D>, reps: &[D::Elem]) -> Result<Self> {
        Self::new(reps.iter().map(|r| modulus.reduce(r)).collect())
    }

    pub fn n(&self) -> usize {
        self.phi.len()
    }

    pub fn phi(&self) -> &[Residue<D>] {
        &self.phi
    }

    pub fn modulus(&self) -> &Modulus<D> {
        self.phi[0].modulus()
    }

    /// `psi_ij` for zero-based `i > j`; `1` when `i == j`.
    ///
    /// Panics if `i < j` or an index is out of range.
    pub fn psi(&self, i: usize, j: usize) -> Residue<D> {
        assert!(i < self.n() && j <= i, "psi({i}, {j}) is defined for j <= i < n");
        if i == j {
            self.modulus().one()
        } else {
            self.psi[i][j].clone()
        }
    }
}

fn check_permutation(sigma: &[usize]) -> Result<()> {
    let mut seen = vec![false; sigma.len()];
    for &s in sigma {
        if s >= sigma.len() || std::mem::replace(&mut seen[s], true) {
            return Err(Error::InvalidPermutation(format!("{sigma:?}")));
        }
    }
    Ok(())
}

/// Both sides of the descent/ascent product identity for one permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermIdentity<D: Domain> {
    /// Product of `psi_{k, sigma(k)}` over columns with `k > sigma(k)`.
    pub descent_product: Residue<D>,
    /// Product of `psi_{sigma(k), k}` over columns with `k <= sigma(k)`.
    pub ascent_product: Residue<D>,
    /// The same identity on the bare indices, `prod k/sigma(k)` against
    /// `prod sigma(k)/k`, evaluated exactly.
    pub index_identity: bool,
}

impl<D: Domain> PermIdentity<D> {
    pub fn holds(&self) -> bool {
        self.index_identity && self.descent_product == self.ascent_product
    }
}

/// Evaluates the permutation identity for `sigma` (zero-based images,
/// `sigma[k]` is the image of `k`).
pub fn perm_identity<D: Domain>(cs: &ChainSystem<D>, sigma: &[usize]) -> Result<PermIdentity<D>> {
    check_permutation(sigma)?;
    if sigma.len() != cs.n() {
        return Err(Error::DimensionMismatch(format!(
            "permutation of {} points for a chain of length {}",
            sigma.len(),
            cs.n()
        )));
    }
    let modulus = cs.modulus();
    let mut descent = modulus.one();
    let mut ascent = modulus.one();
    for (k, &s) in sigma.iter().enumerate() {
        if k > s {
            descent = &descent * &cs.psi(k, s);
        } else {
            ascent = &ascent * &cs.psi(s, k);
        }
    }
    Ok(PermIdentity {
        descent_product: descent,
        ascent_product: ascent,
        index_identity: index_identity(sigma)?,
    })
}

/// True iff both sides of the permutation identity agree.
pub fn verify_perm_identity<D: Domain>(cs: &ChainSystem<D>, sigma: &[usize]) -> Result<bool> {
    Ok(perm_identity(cs, sigma)?.holds())
}

/// `prod_{k > s(k)} k/s(k) == prod_{k <= s(k)} s(k)/k` with one-based
/// indices, compared by cross multiplication.
pub fn index_identity(sigma: &[usize]) -> Result<bool> {
    check_permutation(sigma)?;
    let (mut lhs_num, mut lhs_den) = (BigUint::one(), BigUint::one());
    let (mut rhs_num, mut rhs_den) = (BigUint::one(), BigUint::one());
    for (k, &s) in sigma.iter().enumerate() {
        let (p, q) = (k + 1, s + 1);
        if p > q {
            lhs_num *= p;
            lhs_den *= q;
        } else {
            rhs_num *= q;
            rhs_den *= p;
        }
    }
    Ok(lhs_num * rhs_den == rhs_num * lhs_den)
}

/// Outcome of checking whether gcds of solutions are again solutions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeReport<D: Domain> {
    pub solutions: Vec<Residue<D>>,
    /// Canonical gcd in R of the representatives of all solutions.
    pub gcd_all: D::Elem,
    pub gcd_all_is_solution: bool,
    /// Pairs of solutions whose gcd is not a solution, with that gcd.
    pub failing_pairs: Vec<(Residue<D>, Residue<D>, D::Elem)>,
    /// Set when more than [`PROBE_PAIR_CAP`] failing pairs exist.
    pub truncated: bool,
}

/// Enumerates the solutions of `a * x = b` and tests whether the lifted
/// gcd of all of them, and of each pair, is again a solution.
pub fn gcd_solution_probe<D: Domain>(
    a: &Residue<D>,
    b: &Residue<D>,
    bound: u64,
) -> Result<ProbeReport<D>> {
    let set = solve(a, b)?;
    let solutions = set.elements(bound)?;
    let modulus = set.modulus();
    let d = modulus.domain();
    let gcd_all = d.gcd_all(solutions.iter().map(Residue::rep));
    let gcd_all_is_solution = set.contains(&modulus.reduce(&gcd_all));
    let mut failing_pairs = Vec::new();
    let mut truncated = false;
    'outer: for (i, x) in solutions.iter().enumerate() {
        for y in &solutions[i + 1..] {
            let g = d.gcd(x.rep(), y.rep());
            if !set.contains(&modulus.reduce(&g)) {
                if failing_pairs.len() == PROBE_PAIR_CAP {
                    truncated = true;
                    break 'outer;
                }
                failing_pairs.push((x.clone(), y.clone(), g));
            }
        }
    }
    Ok(ProbeReport {
        solutions,
        gcd_all,
        gcd_all_is_solution,
        failing_pairs,
        truncated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Integers;
    use num_bigint::BigInt;

    fn zm(m: i64) -> Modulus<Integers> {
        Modulus::integer(m).unwrap()
    }

    fn reps(xs: &[Residue<Integers>]) -> Vec<i64> {
        xs.iter().map(|x| x.rep().try_into().unwrap()).collect()
    }

    #[test]
    fn solve_example_two() {
        let m = zm(36);
        let s = solve(&m.residue_i64(4), &m.residue_i64(24)).unwrap();
        assert_eq!(reps(&s.elements(100).unwrap()), vec![6, 15, 24, 33]);
        let gen: i64 = s.generator().rep().try_into().unwrap();
        assert!(gen == 15 || gen == 33);
        assert_eq!(s.annihilator(), &m.residue_i64(9));
    }

    #[test]
    fn solve_unit_coefficient() {
        let m = zm(36);
        let s = solve(&m.one(), &m.residue_i64(5)).unwrap();
        assert_eq!(s.generator(), &m.residue_i64(5));
        assert_eq!(s.annihilator(), &m.zero());
        assert_eq!(reps(&s.elements(10).unwrap()), vec![5]);
    }

    #[test]
    fn solve_example_three_rows() {
        let m = zm(72);
        let s = solve(&m.residue_i64(4), &m.residue_i64(8)).unwrap();
        assert_eq!(reps(&s.elements(100).unwrap()), vec![2, 20, 38, 56]);
        assert_eq!(reps(&s.generating_solutions(100).unwrap()), vec![2, 38]);
        let s = solve(&m.residue_i64(8), &m.residue_i64(24)).unwrap();
        assert_eq!(
            reps(&s.elements(100).unwrap()),
            vec![3, 12, 21, 30, 39, 48, 57, 66]
        );
        assert_eq!(reps(&s.generating_solutions(100).unwrap()), vec![3, 21, 39, 57]);
        let s = solve(&m.residue_i64(4), &m.residue_i64(24)).unwrap();
        assert_eq!(reps(&s.generating_solutions(100).unwrap()), vec![6, 42]);
    }

    #[test]
    fn unsolvable_equation() {
        let m = zm(36);
        let err = solve(&m.residue_i64(4), &m.residue_i64(5)).unwrap_err();
        assert_eq!(
            err,
            Error::Unsolvable {
                a: "4".into(),
                b: "5".into(),
                gcd: "4".into()
            }
        );
        assert_eq!(
            solve(&m.residue_i64(4), &zm(72).residue_i64(8)),
            Err(Error::ModulusMismatch)
        );
    }

    #[test]
    fn zero_coefficient() {
        let m = zm(12);
        assert!(solve(&m.zero(), &m.one()).is_err());
        let s = solve(&m.zero(), &m.zero()).unwrap();
        assert_eq!(s.generator(), &m.one());
        assert_eq!(s.annihilator(), &m.one());
        assert_eq!(s.elements(100).unwrap().len(), 12);
        assert_eq!(s.generating_solutions(100).unwrap(), m.units(100).unwrap());
    }

    #[test]
    fn is_generating_examples() {
        let m = zm(36);
        let s = solve(&m.residue_i64(4), &m.residue_i64(24)).unwrap();
        assert!(s.is_generating(&m.residue_i64(33)));
        assert!(s.is_generating(&m.residue_i64(15)));
        assert!(!s.is_generating(&m.residue_i64(6)));
        assert!(!s.is_generating(&m.residue_i64(1)));
        assert!(s.is_generating(s.generator()));
    }

    #[test]
    fn min_generating_examples() {
        let m = zm(72);
        assert_eq!(min_generating(&m.residue_i64(4), &m.residue_i64(8)), Ok(m.residue_i64(2)));
        assert_eq!(min_generating(&m.one(), &m.residue_i64(17)), Ok(m.residue_i64(17)));
        let m8 = zm(8);
        assert_eq!(min_generating(&m8.residue_i64(2), &m8.residue_i64(4)), Ok(m8.residue_i64(2)));
    }

    #[test]
    fn chain_system_examples() {
        let m = zm(72);
        let cs = ChainSystem::from_reps(&m, &[4.into(), 8.into(), 24.into()]).unwrap();
        assert_eq!(cs.psi(1, 0), m.residue_i64(2));
        assert_eq!(cs.psi(2, 1), m.residue_i64(3));
        assert_eq!(cs.psi(2, 0), m.residue_i64(6));
        let s = solve(&m.residue_i64(4), &m.residue_i64(24)).unwrap();
        assert!(s.is_generating(&cs.psi(2, 0)));

        let ones = ChainSystem::from_reps(&m, &vec![BigInt::from(1); 4]).unwrap();
        for i in 0..4 {
            for j in 0..=i {
                assert_eq!(ones.psi(i, j), m.one());
            }
        }

        let m16 = zm(16);
        let cs = ChainSystem::from_reps(&m16, &[2.into(), 4.into(), 8.into()]).unwrap();
        assert_eq!(cs.psi(1, 0), m16.residue_i64(2));
        assert_eq!(cs.psi(2, 1), m16.residue_i64(2));
        assert_eq!(cs.psi(2, 0), m16.residue_i64(4));
    }

    #[test]
    fn chain_system_rejects_bad_chains() {
        let m = zm(72);
        assert!(matches!(
            ChainSystem::from_reps(&m, &[8.into(), 4.into()]),
            Err(Error::InvalidChain(_))
        ));
        assert!(matches!(
            ChainSystem::from_reps(&m, &[4.into(), 0.into()]),
            Err(Error::InvalidChain(_))
        ));
        assert!(matches!(
            ChainSystem::from_reps(&m, &[4.into()]),
            Err(Error::InvalidChain(_))
        ));
        // 6 | 2 in Z_8 (6 * 3 = 18 = 2), so this is a valid chain
        assert!(ChainSystem::from_reps(&zm(8), &[6.into(), 2.into()]).is_ok());
    }

    #[test]
    fn perm_identity_examples() {
        let m = zm(72);
        let cs = ChainSystem::from_reps(&m, &[4.into(), 8.into(), 24.into()]).unwrap();
        assert_eq!(verify_perm_identity(&cs, &[0, 1, 2]), Ok(true));
        let id = perm_identity(&cs, &[0, 1, 2]).unwrap();
        assert_eq!(id.descent_product, m.one());
        // 1 -> 2 -> 3 -> 1
        let cycle = perm_identity(&cs, &[1, 2, 0]).unwrap();
        assert_eq!(cycle.descent_product, m.residue_i64(6));
        assert_eq!(cycle.ascent_product, m.residue_i64(6));
        assert!(cycle.holds());
        assert_eq!(index_identity(&[1, 2, 0]), Ok(true));
        assert!(matches!(index_identity(&[0, 0, 1]), Err(Error::InvalidPermutation(_))));
        assert!(matches!(
            perm_identity(&cs, &[1, 0]),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn probe_examples() {
        let m = zm(72);
        let r = gcd_solution_probe(&m.residue_i64(4), &m.residue_i64(8), 1000).unwrap();
        assert_eq!(r.gcd_all, 2.into());
        assert!(r.gcd_all_is_solution);
        assert_eq!(r.failing_pairs.len(), 1);
        let (x, y, g) = &r.failing_pairs[0];
        assert_eq!((x, y, g), (&m.residue_i64(20), &m.residue_i64(56), &4.into()));

        let r = gcd_solution_probe(&m.one(), &m.residue_i64(9), 1000).unwrap();
        assert!(r.gcd_all_is_solution);
        assert_eq!(r.solutions.len(), 1);

        let m36 = zm(36);
        let r = gcd_solution_probe(&m36.residue_i64(4), &m36.residue_i64(24), 1000).unwrap();
        assert_eq!(r.gcd_all, 3.into());
        assert!(!r.gcd_all_is_solution);
    }

    #[test]
    fn enumeration_bound_is_enforced() {
        let m = zm(1_000_000_007 * 4);
        let s = solve(&m.zero(), &m.zero()).unwrap();
        assert!(matches!(s.elements(DEFAULT_ENUMERATION_BOUND), Err(Error::TooLarge { .. })));
    }
}

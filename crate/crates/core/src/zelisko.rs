//! Matrices over R_m and the Zelisko group of a diagonal matrix.
//!
//! For `Phi = diag(phi_1, ..., phi_n)` with `phi_1 | ... | phi_n != 0`,
//! the group `G_Phi` of invertible `H` admitting an invertible `S` with
//! `H Phi = Phi S` consists exactly of the invertible matrices whose entry
//! `(i, j)` below the diagonal is divisible by `psi_ij`, a generating
//! solution of `phi_i = phi_j x`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linsolve::{solve, ChainSystem, DEFAULT_ENUMERATION_BOUND};
use crate::matrix::{self, Matrix};
use crate::residue::{Modulus, Residue};
use crate::ring::Domain;

/// Retries allowed to [`sample`] before giving up.
pub const SAMPLE_RETRIES: u32 = 10_000;

/// Cap on candidate matrices examined by [`brute_membership`].
pub const BRUTE_FORCE_CAP: u64 = 10_000_000;

/// A square matrix of size at least 2 over a single R_m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueMatrix<D: Domain> {
    modulus: Modulus<D>,
    entries: Matrix<Residue<D>>,
}

impl<D: Domain> ResidueMatrix<D> {
    pub fn new(modulus: &Modulus<D>, entries: Matrix<Residue<D>>) -> Result<Self> {
        if !entries.is_square() || entries.rows() < 2 {
            return Err(Error::DimensionMismatch(format!(
                "need a square matrix of size >= 2, got {}x{}",
                entries.rows(),
                entries.cols()
            )));
        }
        if entries.entries().any(|x| x.modulus() != modulus) {
            return Err(Error::ModulusMismatch);
        }
        Ok(ResidueMatrix {
            modulus: modulus.clone(),
            entries,
        })
    }

    /// Reduces a matrix of domain elements.
    pub fn from_reps(modulus: &Modulus<D>, reps: &Matrix<D::Elem>) -> Result<Self> {
        Self::new(modulus, reps.map(|x| modulus.reduce(x)))
    }

    pub fn from_fn(modulus: &Modulus<D>, n: usize, f: impl FnMut(usize, usize) -> Residue<D>) -> Result<Self> {
        Self::new(modulus, Matrix::from_fn(n, n, f))
    }

    pub fn identity(modulus: &Modulus<D>, n: usize) -> Result<Self> {
        Self::new(modulus, Matrix::identity(modulus, n))
    }

    pub fn n(&self) -> usize {
        self.entries.rows()
    }

    pub fn modulus(&self) -> &Modulus<D> {
        &self.modulus
    }

    pub fn entries(&self) -> &Matrix<Residue<D>> {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Residue<D> {
        self.entries.get(i, j)
    }

    pub fn det(&self) -> Residue<D> {
        matrix::det(&self.modulus, &self.entries).expect("square")
    }

    pub fn is_invertible(&self) -> bool {
        self.det().is_unit()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch);
        }
        Self::new(&self.modulus, self.entries.mul(&self.modulus, &other.entries)?)
    }

    /// `adj(M) * det(M)^-1`.
    pub fn inverse(&self) -> Result<Self> {
        let inv = matrix::inverse_with(&self.modulus, &self.entries, |d| d.invert().ok())?
            .ok_or_else(|| Error::NotAUnit(format!("det = {}", self.det())))?;
        Self::new(&self.modulus, inv)
    }

    pub fn reps(&self) -> Matrix<D::Elem> {
        self.entries.map(|x| x.rep().clone())
    }
}

/// `diag(phi_1, ..., phi_n)` for a valid divisibility chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagPhi<D: Domain> {
    cs: ChainSystem<D>,
}

impl<D: Domain> DiagPhi<D> {
    pub fn new(cs: ChainSystem<D>) -> Self {
        DiagPhi { cs }
    }

    pub fn from_reps(modulus: &Modulus<D>, reps: &[D::Elem]) -> Result<Self> {
        Ok(DiagPhi::new(ChainSystem::from_reps(modulus, reps)?))
    }

    pub fn chain(&self) -> &ChainSystem<D> {
        &self.cs
    }

    pub fn n(&self) -> usize {
        self.cs.n()
    }

    pub fn modulus(&self) -> &Modulus<D> {
        self.cs.modulus()
    }

    pub fn as_matrix(&self) -> ResidueMatrix<D> {
        let m = self.modulus();
        ResidueMatrix::new(m, Matrix::diagonal(m, self.cs.phi())).expect("n >= 2")
    }

    /// Multiplies each `phi_i` by the unit `units[i]`; the group is unchanged.
    pub fn rescaled(&self, units: &[Residue<D>]) -> Result<Self> {
        if units.len() != self.n() {
            return Err(Error::DimensionMismatch("one unit per diagonal entry".into()));
        }
        if let Some(u) = units.iter().find(|u| !u.is_unit()) {
            return Err(Error::NotAUnit(u.to_string()));
        }
        let phi = self
            .cs
            .phi()
            .iter()
            .zip(units)
            .map(|(p, u)| p.try_mul(u))
            .collect::<Result<Vec<_>>>()?;
        Ok(DiagPhi::new(ChainSystem::new(phi)?))
    }
}

fn check_compatible<D: Domain>(h: &ResidueMatrix<D>, phi: &DiagPhi<D>) -> Result<()> {
    if h.n() != phi.n() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix against a chain of length {}",
            h.n(),
            h.n(),
            phi.n()
        )));
    }
    if h.modulus() != phi.modulus() {
        return Err(Error::ModulusMismatch);
    }
    Ok(())
}

/// Decides `H in G_Phi`: `H` invertible and `psi_ij | h_ij` for `i > j`.
pub fn membership<D: Domain>(h: &ResidueMatrix<D>, phi: &DiagPhi<D>) -> Result<bool> {
    check_compatible(h, phi)?;
    if !h.is_invertible() {
        return Ok(false);
    }
    let cs = phi.chain();
    for i in 1..h.n() {
        for j in 0..i {
            if !cs.psi(i, j).divides(h.get(i, j))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// An invertible `S` with `H Phi = Phi S`.
///
/// Writing `h_ij = psi_ij t_ij` below the diagonal, `S` keeps the diagonal,
/// carries `t_ij` below it and `psi_ji h_ij` above it. Both matrices have
/// the same determinant.
pub fn witness<D: Domain>(h: &ResidueMatrix<D>, phi: &DiagPhi<D>) -> Result<ResidueMatrix<D>> {
    if !membership(h, phi)? {
        return Err(Error::NotAMember);
    }
    let cs = phi.chain();
    let n = h.n();
    let mut entries = Matrix::from_fn(n, n, |i, j| h.get(i, j).clone());
    for i in 0..n {
        for j in 0..n {
            if i < j {
                entries.set(i, j, &cs.psi(j, i) * h.get(i, j));
            } else if i > j && !h.get(i, j).is_zero() {
                let t = solve(&cs.psi(i, j), h.get(i, j))?.generator().clone();
                entries.set(i, j, t);
            }
        }
    }
    let s = ResidueMatrix::new(h.modulus(), entries)?;
    let phi_m = phi.as_matrix();
    if h.mul(&phi_m)? != phi_m.mul(&s)? {
        return Err(Error::Internal("H Phi != Phi S".into()));
    }
    if !s.is_invertible() {
        return Err(Error::Internal("witness is not invertible".into()));
    }
    Ok(s)
}

/// Draws a member of `G_Phi`, deterministically in `seed`: free entries
/// `h_ij` uniform in R_m, `psi_ij h_ij` below the diagonal, redrawn until
/// invertible.
pub fn sample<D: Domain>(phi: &DiagPhi<D>, seed: u64) -> Result<ResidueMatrix<D>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let modulus = phi.modulus();
    let d = modulus.domain();
    let cs = phi.chain();
    let n = phi.n();
    for _ in 0..SAMPLE_RETRIES {
        let h = ResidueMatrix::from_fn(modulus, n, |i, j| {
            let free = modulus.reduce(&d.random_residue(modulus.value(), &mut rng));
            if i > j {
                &cs.psi(i, j) * &free
            } else {
                free
            }
        })?;
        if h.is_invertible() {
            return Ok(h);
        }
    }
    Err(Error::SamplingExhausted(SAMPLE_RETRIES))
}

/// Decides membership straight from the definition: lists, for every
/// position, all `s` with `phi_i s = phi_j h_ij` by scanning R_m, then
/// searches the product of those sets for an invertible `S`.
pub fn brute_membership<D: Domain>(h: &ResidueMatrix<D>, phi: &DiagPhi<D>) -> Result<bool> {
    check_compatible(h, phi)?;
    if !h.is_invertible() {
        return Ok(false);
    }
    let modulus = h.modulus();
    let ring = modulus.elements(DEFAULT_ENUMERATION_BOUND)?;
    let phis = phi.chain().phi();
    let n = h.n();
    let mut choices: Vec<Vec<Residue<D>>> = Vec::with_capacity(n * n);
    let mut total: u64 = 1;
    for i in 0..n {
        for j in 0..n {
            let target = &phis[j] * h.get(i, j);
            let options: Vec<Residue<D>> = ring
                .iter()
                .filter(|s| &phis[i] * *s == target)
                .cloned()
                .collect();
            if options.is_empty() {
                return Ok(false);
            }
            total = total.saturating_mul(options.len() as u64);
            choices.push(options);
        }
    }
    if total > BRUTE_FORCE_CAP {
        return Err(Error::TooLarge {
            what: "candidate witness space".into(),
            size: total.to_string(),
            bound: BRUTE_FORCE_CAP,
        });
    }
    let mut odometer = vec![0usize; n * n];
    loop {
        let s = Matrix::from_fn(n, n, |i, j| choices[i * n + j][odometer[i * n + j]].clone());
        if matrix::det(modulus, &s)?.is_unit() {
            return Ok(true);
        }
        let mut pos = n * n;
        loop {
            if pos == 0 {
                return Ok(false);
            }
            pos -= 1;
            odometer[pos] += 1;
            if odometer[pos] < choices[pos].len() {
                break;
            }
            odometer[pos] = 0;
        }
    }
}

/// Compares the determinants of the matrix with `psi_ij h_ij` below the
/// diagonal and the one with `psi_ji h_ij` above it; they always agree.
pub fn lemma10_check<D: Domain>(cs: &ChainSystem<D>, h: &ResidueMatrix<D>) -> Result<bool> {
    if h.n() != cs.n() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix against a chain of length {}",
            h.n(),
            h.n(),
            cs.n()
        )));
    }
    if h.modulus() != cs.modulus() {
        return Err(Error::ModulusMismatch);
    }
    let n = h.n();
    let lower = ResidueMatrix::from_fn(h.modulus(), n, |i, j| {
        if i > j {
            &cs.psi(i, j) * h.get(i, j)
        } else {
            h.get(i, j).clone()
        }
    })?;
    let upper = ResidueMatrix::from_fn(h.modulus(), n, |i, j| {
        if i < j {
            &cs.psi(j, i) * h.get(i, j)
        } else {
            h.get(i, j).clone()
        }
    })?;
    Ok(lower.det() == upper.det())
}

/// Membership over the domain itself: `det(H)` a unit of R and
/// `phi_i / phi_j` dividing entry `(i, j)` for `i > j`.
pub fn domain_membership<D: Domain>(domain: &D, h: &Matrix<D::Elem>, phi: &[D::Elem]) -> Result<bool> {
    validate_domain_chain(domain, phi)?;
    if !h.is_square() || h.rows() != phi.len() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix against a chain of length {}",
            h.rows(),
            h.cols(),
            phi.len()
        )));
    }
    if !domain.is_unit(&matrix::det(domain, h)?) {
        return Ok(false);
    }
    for i in 1..phi.len() {
        for j in 0..i {
            let ratio = domain.exact_div(&phi[i], &phi[j])?;
            if !domain.divides(&ratio, h.get(i, j)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub(crate) fn validate_domain_chain<D: Domain>(domain: &D, phi: &[D::Elem]) -> Result<()> {
    if let Some(pos) = phi.iter().position(|x| domain.is_zero(x)) {
        return Err(Error::InvalidChain(format!("entry {} is zero", pos + 1)));
    }
    for (k, w) in phi.windows(2).enumerate() {
        if !domain.divides(&w[0], &w[1]) {
            return Err(Error::InvalidChain(format!(
                "entry {} ({}) does not divide entry {} ({})",
                k + 1,
                w[0],
                k + 2,
                w[1]
            )));
        }
    }
    Ok(())
}

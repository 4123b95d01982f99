//! Brute-force oracles shared by the integration tests. Everything here
//! is computed from ring arithmetic alone, by exhaustive scans over R_m.

#![allow(dead_code)]

use std::collections::HashMap;

use rand::Rng;
use zelisko_core::{CommRing, Domain, Modulus, Residue};

/// Multiplication and divisibility tables of a finite R_m.
pub struct Table<D: Domain> {
    pub modulus: Modulus<D>,
    pub elems: Vec<Residue<D>>,
    pub index: HashMap<Residue<D>, usize>,
    mul: Vec<usize>,
    div: Vec<bool>,
    pub units: Vec<usize>,
}

impl<D: Domain> Table<D> {
    pub fn new(modulus: &Modulus<D>) -> Self {
        let d = modulus.domain();
        let count = d.residue_count(modulus.value()).expect("finite ring");
        let elems: Vec<Residue<D>> = (0..count)
            .map(|k| modulus.reduce(&d.nth_residue(modulus.value(), k)))
            .collect();
        let n = elems.len();
        let index: HashMap<Residue<D>, usize> =
            elems.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
        assert_eq!(index.len(), n, "residues are distinct");
        let mut mul = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                let p = modulus.reduce(&d.mul(elems[i].rep(), elems[j].rep()));
                mul[i * n + j] = index[&p];
            }
        }
        let mut div = vec![false; n * n];
        for x in 0..n {
            for t in 0..n {
                div[x * n + mul[x * n + t]] = true;
            }
        }
        let one = index[&modulus.one()];
        let units = (0..n)
            .filter(|&x| (0..n).any(|y| mul[x * n + y] == one))
            .collect();
        Table {
            modulus: modulus.clone(),
            elems,
            index,
            mul,
            div,
            units,
        }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn idx(&self, x: &Residue<D>) -> usize {
        self.index[x]
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.len() + y]
    }

    /// `x | y`: some `t` with `x t = y`.
    pub fn divides(&self, x: usize, y: usize) -> bool {
        self.div[x * self.len() + y]
    }

    pub fn is_unit(&self, x: usize) -> bool {
        self.units.binary_search(&x).is_ok()
    }

    /// Some unit `u` with `x u = y`.
    pub fn unit_witness(&self, x: usize, y: usize) -> Option<usize> {
        self.units.iter().copied().find(|&u| self.mul(x, u) == y)
    }

    pub fn solutions(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.mul(a, x) == b).collect()
    }

    /// Solutions dividing every solution.
    pub fn generating(&self, sols: &[usize]) -> Vec<usize> {
        sols.iter()
            .copied()
            .filter(|&x| sols.iter().all(|&y| self.divides(x, y)))
            .collect()
    }

    pub fn zero(&self) -> usize {
        self.index[&self.modulus.zero()]
    }

    pub fn nonzero(&self) -> Vec<usize> {
        let z = self.zero();
        (0..self.len()).filter(|&x| x != z).collect()
    }

    pub fn random<G: Rng>(&self, rng: &mut G) -> usize {
        rng.gen_range(0..self.len())
    }

    pub fn random_unit<G: Rng>(&self, rng: &mut G) -> usize {
        self.units[rng.gen_range(0..self.units.len())]
    }

    pub fn sorted(&self, xs: &[Residue<D>]) -> Vec<usize> {
        let mut v: Vec<usize> = xs.iter().map(|x| self.idx(x)).collect();
        v.sort_unstable();
        v
    }
}

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_det<R: CommRing>(ring: &R, m: &[Vec<R::Elem>]) -> R::Elem {
    let n = m.len();
    if n == 0 {
        return ring.one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = ring.zero();
    for j in 0..n {
        if ring.is_zero(&m[0][j]) {
            continue;
        }
        let minor: Vec<Vec<R::Elem>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = ring.mul(&m[0][j], &cofactor_det(ring, &minor));
        acc = if j % 2 == 0 {
            ring.add(&acc, &term)
        } else {
            ring.sub(&acc, &term)
        };
    }
    acc
}

pub fn mat_mul<R: CommRing>(ring: &R, a: &[Vec<R::Elem>], b: &[Vec<R::Elem>]) -> Vec<Vec<R::Elem>> {
    let (n, k, p) = (a.len(), b.len(), b[0].len());
    (0..n)
        .map(|i| {
            (0..p)
                .map(|j| {
                    (0..k).fold(ring.zero(), |acc, t| ring.add(&acc, &ring.mul(&a[i][t], &b[t][j])))
                })
                .collect()
        })
        .collect()
}

/// Adjugate from cofactors: `adj[j][i] = (-1)^(i+j) det(minor_ij)`.
pub fn cofactor_adjugate<R: CommRing>(ring: &R, m: &[Vec<R::Elem>]) -> Vec<Vec<R::Elem>> {
    let n = m.len();
    let mut adj = vec![vec![ring.zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<R::Elem>> = (0..n)
                .filter(|&r| r != i)
                .map(|r| (0..n).filter(|&c| c != j).map(|c| m[r][c].clone()).collect())
                .collect();
            let c = cofactor_det(ring, &minor);
            adj[j][i] = if (i + j) % 2 == 0 { c } else { ring.neg(&c) };
        }
    }
    adj
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Every permutation of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// A random chain `phi_1 | ... | phi_n != 0` in R_m, built by successive
/// random multiples. `None` when the product keeps collapsing to zero.
pub fn random_chain<D: Domain, G: Rng>(t: &Table<D>, n: usize, rng: &mut G) -> Option<Vec<usize>> {
    let nonzero = t.nonzero();
    let zero = t.zero();
    for _ in 0..1000 {
        let mut chain = vec![nonzero[rng.gen_range(0..nonzero.len())]];
        while chain.len() < n {
            let next = t.mul(*chain.last().unwrap(), t.random(rng));
            if next == zero {
                break;
            }
            chain.push(next);
        }
        if chain.len() == n {
            return Some(chain);
        }
    }
    None
}

/// Monic polynomials of the given degree over F_p, as coefficient vectors.
pub fn monic_polys(p: u32, degree: usize) -> Vec<Vec<i64>> {
    let count = (p as u64).pow(degree as u32);
    (0..count)
        .map(|mut k| {
            let mut c = Vec::with_capacity(degree + 1);
            for _ in 0..degree {
                c.push((k % p as u64) as i64);
                k /= p as u64;
            }
            c.push(1);
            c
        })
        .collect()
}


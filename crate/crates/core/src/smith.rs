//! Smith normal form over a Euclidean domain, right associates of
//! nonsingular matrices, and completion of unimodular rows.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::matrix::{self, Matrix};
use crate::ring::Domain;
use crate::zelisko::domain_membership;

/// `P A Q = diag(phi)` with `P`, `Q` invertible and
/// `phi_1 | phi_2 | ...`, each canonical, zeros last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithResult<D: Domain> {
    pub p: Matrix<D::Elem>,
    pub q: Matrix<D::Elem>,
    pub phi: Vec<D::Elem>,
}

impl<D: Domain> SmithResult<D> {
    pub fn diagonal(&self, domain: &D) -> Matrix<D::Elem> {
        Matrix::diagonal(domain, &self.phi)
    }

    /// Number of nonzero invariant factors.
    pub fn rank(&self, domain: &D) -> usize {
        self.phi.iter().filter(|x| !domain.is_zero(x)).count()
    }
}

struct Reducer<'a, D: Domain> {
    d: &'a D,
    a: Matrix<D::Elem>,
    p: Matrix<D::Elem>,
    q: Matrix<D::Elem>,
}

impl<D: Domain> Reducer<'_, D> {
    /// Rows `(s, t) <- (x s + y t, z s + w t)` on `A` and `P`.
    fn combine_rows(&mut self, s: usize, t: usize, [x, y, z, w]: [&D::Elem; 4]) {
        let d = self.d;
        for m in [&mut self.a, &mut self.p] {
            for j in 0..m.cols() {
                let (ms, mt) = (m.get(s, j).clone(), m.get(t, j).clone());
                m.set(s, j, d.add(&d.mul(x, &ms), &d.mul(y, &mt)));
                m.set(t, j, d.add(&d.mul(z, &ms), &d.mul(w, &mt)));
            }
        }
    }

    /// Columns `(s, t) <- (x s + y t, z s + w t)` on `A` and `Q`.
    fn combine_cols(&mut self, s: usize, t: usize, [x, y, z, w]: [&D::Elem; 4]) {
        let d = self.d;
        for m in [&mut self.a, &mut self.q] {
            for i in 0..m.rows() {
                let (ms, mt) = (m.get(i, s).clone(), m.get(i, t).clone());
                m.set(i, s, d.add(&d.mul(x, &ms), &d.mul(y, &mt)));
                m.set(i, t, d.add(&d.mul(z, &ms), &d.mul(w, &mt)));
            }
        }
    }

    /// Coefficients of a determinant-one transform sending `(a, b)` to
    /// `(gcd, 0)`.
    fn bezout_block(&self, a: &D::Elem, b: &D::Elem) -> [D::Elem; 4] {
        let d = self.d;
        if d.divides(a, b) {
            let q = d.exact_div(b, a).expect("a divides b");
            return [d.one(), d.zero(), d.neg(&q), d.one()];
        }
        let (g, u, v) = d.egcd(a, b);
        let a1 = d.exact_div(a, &g).expect("gcd divides");
        let b1 = d.exact_div(b, &g).expect("gcd divides");
        [u, v, d.neg(&b1), a1]
    }

    fn clear_column(&mut self, t: usize) {
        for i in t + 1..self.a.rows() {
            if self.d.is_zero(self.a.get(i, t)) {
                continue;
            }
            let [x, y, z, w] = self.bezout_block(self.a.get(t, t), self.a.get(i, t));
            self.combine_rows(t, i, [&x, &y, &z, &w]);
        }
    }

    fn clear_row(&mut self, t: usize) {
        for j in t + 1..self.a.cols() {
            if self.d.is_zero(self.a.get(t, j)) {
                continue;
            }
            let [x, y, z, w] = self.bezout_block(self.a.get(t, t), self.a.get(t, j));
            self.combine_cols(t, j, [&x, &y, &z, &w]);
        }
    }

    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let n = self.a.rows();
        let mut best: Option<(usize, usize)> = None;
        for i in t..n {
            for j in t..n {
                let x = self.a.get(i, j);
                if self.d.is_zero(x) {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some((bi, bj)) => self.d.norm_cmp(x, self.a.get(bi, bj)) == Ordering::Less,
                };
                if better {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    fn run(mut self) -> SmithResult<D> {
        let n = self.a.rows();
        let d = self.d;
        for t in 0..n {
            let Some((pi, pj)) = self.min_pivot(t) else {
                break;
            };
            self.a.swap_rows(t, pi);
            self.p.swap_rows(t, pi);
            self.a.swap_cols(t, pj);
            self.q.swap_cols(t, pj);
            loop {
                self.clear_column(t);
                self.clear_row(t);
                if (t + 1..n).any(|i| !d.is_zero(self.a.get(i, t))) {
                    continue;
                }
                let pivot = self.a.get(t, t).clone();
                let offender = (t + 1..n)
                    .find(|&i| (t + 1..n).any(|j| !d.divides(&pivot, self.a.get(i, j))));
                match offender {
                    Some(i) => {
                        let (one, zero) = (d.one(), d.zero());
                        // row t += row i
                        self.combine_rows(t, i, [&one, &one, &zero, &one]);
                    }
                    None => break,
                }
            }
        }
        for t in 0..n {
            let (_, unit) = d.canonical(self.a.get(t, t));
            let inv = d.unit_inverse(&unit).expect("unit");
            if !d.is_one(&inv) {
                for m in [&mut self.a, &mut self.p] {
                    for j in 0..n {
                        let v = d.mul(&inv, m.get(t, j));
                        m.set(t, j, v);
                    }
                }
            }
        }
        let phi = (0..n).map(|t| self.a.get(t, t).clone()).collect();
        SmithResult {
            p: self.p,
            q: self.q,
            phi,
        }
    }
}

/// Smith normal form of a square matrix with its transforming matrices.
pub fn smith<D: Domain>(domain: &D, a: &Matrix<D::Elem>) -> Result<SmithResult<D>> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix is not square",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    let reducer = Reducer {
        d: domain,
        a: a.clone(),
        p: Matrix::identity(domain, n),
        q: Matrix::identity(domain, n),
    };
    Ok(reducer.run())
}

/// Inverse over the domain, `None` unless the determinant is a unit.
pub fn domain_inverse<D: Domain>(domain: &D, a: &Matrix<D::Elem>) -> Result<Option<Matrix<D::Elem>>> {
    matrix::inverse_with(domain, a, |d| domain.unit_inverse(d))
}

/// Decides whether `A = B U` for an invertible `U`, for nonsingular
/// `A`, `B`: equal Smith forms and `P_B P_A^-1` in the Zelisko group of
/// the common form.
pub fn right_associate<D: Domain>(domain: &D, a: &Matrix<D::Elem>, b: &Matrix<D::Elem>) -> Result<bool> {
    if !a.is_square() || !b.is_square() || a.rows() != b.rows() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} against {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    let sa = smith(domain, a)?;
    let sb = smith(domain, b)?;
    if sa.phi.iter().chain(&sb.phi).any(|x| domain.is_zero(x)) {
        return Err(Error::SingularInput);
    }
    if sa.phi != sb.phi {
        return Ok(false);
    }
    let pa_inv = domain_inverse(domain, &sa.p)?
        .ok_or_else(|| Error::Internal("transforming matrix is not invertible".into()))?;
    let h = sb.p.mul(domain, &pa_inv)?;
    domain_membership(domain, &h, &sa.phi)
}

/// Completes a unimodular row `a_1, ..., a_n` (`n >= 3`, `a_1 != 0`) to a
/// determinant-one matrix whose last row is `a`, first row
/// `(u_n, 0, ..., 0, u_1)` and middle rows `e_k + u_k e_n`.
///
/// Successive stable lifts give `d = a_n + sum r_i a_i` coprime to `a_1`;
/// then `u_i = -r_i` and `u_n d - u_1 a_1 = 1`.
pub fn complete_row<D: Domain>(domain: &D, a: &[D::Elem]) -> Result<Matrix<D::Elem>> {
    let n = a.len();
    let d = domain;
    if n < 3 {
        return Err(Error::PreconditionViolated("row completion needs n >= 3".into()));
    }
    if d.is_zero(&a[0]) {
        return Err(Error::PreconditionViolated("first entry must be nonzero".into()));
    }
    if !d.is_one(&d.gcd_all(a)) {
        return Err(Error::PreconditionViolated(format!(
            "entries are not coprime (gcd {})",
            d.gcd_all(a)
        )));
    }
    // Invariant: gcd(acc, a_1, a_i, ..., a_{n-1}) = 1 before step i.
    let mut acc = a[n - 1].clone();
    let mut r = vec![d.zero(); n];
    for i in 1..n - 1 {
        let rest = d.gcd_all(std::iter::once(&a[0]).chain(&a[i + 1..n - 1]));
        let ri = d.stable_lift(&acc, &a[i], &rest)?;
        acc = d.add(&acc, &d.mul(&ri, &a[i]));
        r[i] = ri;
    }
    let (g, x, y) = d.egcd(&acc, &a[0]);
    debug_assert!(d.is_one(&g));
    // x acc + y a_1 = 1, so u_n = x and u_1 = -y
    let mut m = Matrix::identity(d, n);
    m.set(0, 0, x);
    m.set(0, n - 1, d.neg(&y));
    for i in 1..n - 1 {
        m.set(i, n - 1, d.neg(&r[i]));
    }
    for (j, aj) in a.iter().enumerate() {
        m.set(n - 1, j, aj.clone());
    }
    if !d.is_one(&matrix::det(d, &m)?) {
        return Err(Error::Internal("completed matrix does not have determinant 1".into()));
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{CommRing, Integers, PolysOverFp};
    use num_bigint::BigInt;

    fn int_mat(rows: &[&[i64]]) -> Matrix<BigInt> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn check_smith<D: Domain>(d: &D, a: &Matrix<D::Elem>) -> SmithResult<D> {
        let s = smith(d, a).unwrap();
        let paq = s.p.mul(d, a).unwrap().mul(d, &s.q).unwrap();
        assert_eq!(paq, s.diagonal(d));
        assert!(d.is_unit(&matrix::det(d, &s.p).unwrap()));
        assert!(d.is_unit(&matrix::det(d, &s.q).unwrap()));
        for w in s.phi.windows(2) {
            assert!(d.divides(&w[0], &w[1]));
        }
        for x in &s.phi {
            assert_eq!(&d.canonical(x).0, x);
        }
        s
    }

    #[test]
    fn smith_examples() {
        let z = Integers;
        assert_eq!(check_smith(&z, &int_mat(&[&[2, 0], &[0, 3]])).phi, ints(&[1, 6]));
        assert_eq!(check_smith(&z, &int_mat(&[&[4, 6], &[2, 8]])).phi, ints(&[2, 10]));
        let id = check_smith(&z, &int_mat(&[&[1, 0], &[0, 1]]));
        assert_eq!(id.phi, ints(&[1, 1]));
        assert_eq!(check_smith(&z, &int_mat(&[&[0, 0], &[0, 0]])).phi, ints(&[0, 0]));
        assert_eq!(
            check_smith(&z, &int_mat(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]])).phi,
            ints(&[2, 6, 12])
        );
        assert_eq!(
            check_smith(&z, &int_mat(&[&[0, 0, 5], &[0, -3, 0], &[0, 0, 0]])).phi,
            ints(&[1, 15, 0])
        );
    }

    #[test]
    fn smith_over_polynomials() {
        let f2 = PolysOverFp::new(2).unwrap();
        let x = f2.poly(&[0, 1]);
        let x1 = f2.poly(&[1, 1]);
        let a = Matrix::from_rows(vec![vec![x.clone(), f2.zero()], vec![f2.zero(), x1.clone()]]).unwrap();
        let s = check_smith(&f2, &a);
        assert_eq!(s.phi, vec![f2.one(), f2.mul(&x, &x1)]);
    }

    #[test]
    fn smith_rejects_rectangular() {
        let a = int_mat(&[&[1, 2, 3], &[4, 5, 6]]);
        assert!(matches!(smith(&Integers, &a), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn right_associate_examples() {
        let z = Integers;
        let a = int_mat(&[&[4, 6], &[2, 8]]);
        assert_eq!(right_associate(&z, &a, &a), Ok(true));
        let u = int_mat(&[&[2, 1], &[1, 1]]);
        let au = a.mul(&z, &u).unwrap();
        assert_eq!(right_associate(&z, &au, &a), Ok(true));
        assert_eq!(right_associate(&z, &a, &au), Ok(true));
        // equal Smith form (1, 2), but diag(1,2)^-1 diag(2,1) is not integral
        let b = int_mat(&[&[1, 0], &[0, 2]]);
        let c = int_mat(&[&[2, 0], &[0, 1]]);
        assert_eq!(right_associate(&z, &b, &c), Ok(false));
        let singular = int_mat(&[&[1, 2], &[2, 4]]);
        assert_eq!(right_associate(&z, &singular, &a), Err(Error::SingularInput));
        assert_eq!(right_associate(&z, &b, &int_mat(&[&[1, 0], &[0, 3]])), Ok(false));
    }

    #[test]
    fn complete_row_examples() {
        let z = Integers;
        let m = complete_row(&z, &ints(&[2, 3, 5])).unwrap();
        assert_eq!(m, int_mat(&[&[1, 0, 2], &[0, 1, 0], &[2, 3, 5]]));

        let m = complete_row(&z, &ints(&[1, 0, 0, 0])).unwrap();
        assert_eq!(matrix::det(&z, &m).unwrap(), BigInt::from(1));

        let m = complete_row(&z, &ints(&[6, 10, 15])).unwrap();
        assert_eq!(matrix::det(&z, &m).unwrap(), BigInt::from(1));
        assert_eq!(m.row(2), ints(&[6, 10, 15]).as_slice());

        assert!(complete_row(&z, &ints(&[2, 4, 6])).is_err());
        assert!(complete_row(&z, &ints(&[0, 1, 1])).is_err());
        assert!(complete_row(&z, &ints(&[2, 3])).is_err());
    }
}

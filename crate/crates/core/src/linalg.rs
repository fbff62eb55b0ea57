//! Exact dense matrices and integer polynomials.
//!
//! Characteristic polynomials are computed by the Samuelson–Berkowitz
//! recurrence, which is division-free and therefore exact over any integer
//! scalar; ranks use fraction-free Bareiss elimination (every division is
//! exact by construction).

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// Dense matrix over an exact scalar.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<T> {
    n_rows: usize,
    n_cols: usize,
    entries: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == n_cols), "ragged rows");
        Matrix {
            n_rows,
            n_cols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn is_square(&self) -> bool {
        self.n_rows == self.n_cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.n_cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.entries[i * self.n_cols + j] = v;
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            n_rows: self.n_rows,
            n_cols: self.n_cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.n_cols {
            for i in 0..self.n_rows {
                entries.push(self.get(i, j).clone());
            }
        }
        Matrix {
            n_rows: self.n_cols,
            n_cols: self.n_rows,
            entries,
        }
    }
}

impl<T: Clone + Zero> Matrix<T> {
    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        Matrix {
            n_rows,
            n_cols,
            entries: vec![T::zero(); n_rows * n_cols],
        }
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero + One + PartialEq + std::ops::Neg<Output = T> + std::ops::Sub<Output = T>,
{
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|v| v.clone() * c.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.n_rows, self.n_cols), (other.n_rows, other.n_cols));
        Matrix {
            n_rows: self.n_rows,
            n_cols: self.n_cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.n_rows, self.n_cols), (other.n_rows, other.n_cols));
        Matrix {
            n_rows: self.n_rows,
            n_cols: self.n_cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n_cols, other.n_rows);
        let mut out = Self::zeros(self.n_rows, other.n_cols);
        for i in 0..self.n_rows {
            for k in 0..self.n_cols {
                let a = self.get(i, k);
                if *a == T::zero() {
                    continue;
                }
                for j in 0..other.n_cols {
                    let b = other.get(k, j);
                    if *b == T::zero() {
                        continue;
                    }
                    let cur = out.get(i, j).clone();
                    out.set(i, j, cur + a.clone() * b.clone());
                }
            }
        }
        out
    }

    pub fn trace(&self) -> T {
        assert!(self.is_square());
        let mut t = T::zero();
        for i in 0..self.n_rows {
            t = t + self.get(i, i).clone();
        }
        t
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.entries.iter().all(|e| *e == T::zero())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.n_rows)
                .all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.is_square()
            && (0..self.n_rows).all(|i| {
                (0..=i).all(|j| {
                    let v = self.get(i, j).clone() + self.get(j, i).clone();
                    v == T::zero()
                })
            })
    }
}

impl<T: Scalar> Matrix<T> {
    /// Characteristic polynomial `det(λI − M)` by the Samuelson–Berkowitz
    /// recurrence: division-free, exact, deterministic.
    pub fn char_poly(&self) -> Poly<T> {
        assert!(self.is_square(), "characteristic polynomial of a non-square matrix");
        let n = self.n_rows;
        // coefficients in descending powers, p = [1] for the empty matrix
        let mut p: Vec<T> = vec![T::one()];
        for r in 1..=n {
            // Toeplitz column t for the r-th leading principal submatrix:
            // t = [1, -a_rr, -(R·S), -(R·A·S), …, -(R·A^{r-2}·S)]
            let mut t: Vec<T> = Vec::with_capacity(r + 1);
            t.push(T::one());
            t.push(-self.get(r - 1, r - 1).clone());
            if r > 1 {
                let mut v: Vec<T> = (0..r - 1).map(|i| self.get(i, r - 1).clone()).collect();
                for k in 2..=r {
                    let mut dot = T::zero();
                    for (i, vi) in v.iter().enumerate() {
                        if !vi.is_zero() {
                            let m = self.get(r - 1, i);
                            if !m.is_zero() {
                                dot = dot + m.clone() * vi.clone();
                            }
                        }
                    }
                    t.push(-dot);
                    if k < r {
                        let mut next = vec![T::zero(); r - 1];
                        for (i, slot) in next.iter_mut().enumerate() {
                            let mut acc = T::zero();
                            for (j, vj) in v.iter().enumerate() {
                                if !vj.is_zero() {
                                    let m = self.get(i, j);
                                    if !m.is_zero() {
                                        acc = acc + m.clone() * vj.clone();
                                    }
                                }
                            }
                            *slot = acc;
                        }
                        v = next;
                    }
                }
            }
            let mut pn = vec![T::zero(); r + 1];
            for (j, pj) in p.iter().enumerate() {
                if pj.is_zero() {
                    continue;
                }
                for (k, tk) in t.iter().enumerate() {
                    if j + k <= r && !tk.is_zero() {
                        pn[j + k] = pn[j + k].clone() + tk.clone() * pj.clone();
                    }
                }
            }
            p = pn;
        }
        p.reverse();
        Poly::new(p)
    }

    /// Rank over the rationals by fraction-free Bareiss elimination.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<T>> = (0..self.n_rows)
            .map(|i| (0..self.n_cols).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let rows = self.n_rows;
        let cols = self.n_cols;
        let mut prev = T::one();
        let mut rank = 0usize;
        for step in 0.. {
            if step >= rows.min(cols) {
                break;
            }
            // find a pivot anywhere in the remaining block
            let mut pivot = None;
            'scan: for i in step..rows {
                for j in step..cols {
                    if !m[i][j].is_zero() {
                        pivot = Some((i, j));
                        break 'scan;
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            m.swap(step, pi);
            if pj != step {
                for row in m.iter_mut() {
                    row.swap(step, pj);
                }
            }
            for i in step + 1..rows {
                for j in step + 1..cols {
                    let num = m[step][step].clone() * m[i][j].clone()
                        - m[i][step].clone() * m[step][j].clone();
                    // exact by the Bareiss identity
                    m[i][j] = Integer::div_floor(&num, &prev);
                }
                m[i][step] = T::zero();
            }
            prev = m[step][step].clone();
            rank += 1;
        }
        rank
    }

    /// Dimension of the kernel over the rationals.
    pub fn kernel_dimension(&self) -> usize {
        self.n_cols - self.rank()
    }
}

impl<T: Scalar> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n_rows {
            let row: Vec<String> = (0..self.n_cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Polynomial with coefficients in ascending degree order, trailing zeros
/// trimmed. The zero polynomial has an empty coefficient list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero_poly() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| T::from(c)).collect())
    }

    /// `λ^n`
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![T::zero(); n + 1];
        coeffs[n] = T::one();
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero_poly(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![T::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] = out[i].clone() + c.clone();
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] = out[i].clone() + c.clone();
        }
        Poly::new(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero_poly() || other.is_zero_poly() {
            return Self::zero_poly();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        Poly::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Poly::new(vec![T::one()]);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Exact division; `None` when `divisor` does not divide exactly.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero_poly() {
            return None;
        }
        if self.is_zero_poly() {
            return Some(Self::zero_poly());
        }
        if self.degree() < divisor.degree() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let dlead = divisor.coeffs.last().unwrap().clone();
        let dd = divisor.degree();
        let mut quot = vec![T::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let lead = rem[k].clone();
            if lead.is_zero() {
                continue;
            }
            let (q, r) = lead.div_rem(&dlead);
            if !r.is_zero() {
                return None;
            }
            quot[k - dd] = q.clone();
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[k - dd + i] = rem[k - dd + i].clone() - q.clone() * dc.clone();
            }
        }
        if rem.iter().all(Zero::is_zero) {
            Some(Poly::new(quot))
        } else {
            None
        }
    }

    pub fn divides(&self, dividend: &Self) -> bool {
        dividend.exact_div(self).is_some()
    }

    /// Evaluates the polynomial at a square matrix (Horner).
    pub fn eval_matrix(&self, m: &Matrix<T>) -> Matrix<T> {
        assert!(m.is_square());
        let n = m.n_rows();
        if self.coeffs.is_empty() {
            return Matrix::zeros(n, n);
        }
        let mut acc = Matrix::identity(n).scale(self.coeffs.last().unwrap());
        for c in self.coeffs.iter().rev().skip(1) {
            acc = m.mul(&acc);
            for i in 0..n {
                let cur = acc.get(i, i).clone();
                acc.set(i, i, cur + c.clone());
            }
        }
        acc
    }
}

impl<T: Scalar> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !abs.is_one() || k == 0;
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "λ")?,
                _ => write!(f, "λ^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A claimed factorization: factor polynomials with multiplicities.
#[derive(Clone, Debug)]
pub struct Factorization<T> {
    pub factors: Vec<(Poly<T>, u32)>,
}

impl<T: Scalar> Factorization<T> {
    pub fn new(factors: Vec<(Poly<T>, u32)>) -> Self {
        Factorization { factors }
    }

    pub fn expand(&self) -> Poly<T> {
        let mut out = Poly::new(vec![T::one()]);
        for (f, m) in &self.factors {
            out = out.mul(&f.pow(*m));
        }
        out
    }

    /// Expands the claimed factorization and compares coefficientwise.
    pub fn matches(&self, poly: &Poly<T>) -> bool {
        self.expand() == *poly
    }
}

impl<T: Scalar> fmt::Display for Factorization<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (p, m) in &self.factors {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "({p})")?;
            if *m != 1 {
                write!(f, "^{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn big(rows: Vec<Vec<i64>>) -> Matrix<BigInt> {
        Matrix::from_rows(rows).map(|v| BigInt::from(*v))
    }

    #[test]
    fn char_poly_two_by_two() {
        let m = big(vec![vec![1, 2], vec![3, 4]]);
        // λ² - 5λ - 2
        assert_eq!(m.char_poly(), Poly::from_i64(&[-2, -5, 1]));
    }

    #[test]
    fn char_poly_zero_matrix_is_lambda_n() {
        let m: Matrix<BigInt> = Matrix::zeros(5, 5);
        assert_eq!(m.char_poly(), Poly::monomial(5));
    }

    #[test]
    fn char_poly_diagonal() {
        let m = big(vec![
            vec![2, 0, 0],
            vec![0, -1, 0],
            vec![0, 0, 3],
        ]);
        let expected = Poly::from_i64(&[-2, 1])
            .mul(&Poly::from_i64(&[1, 1]))
            .mul(&Poly::from_i64(&[-3, 1]));
        assert_eq!(m.char_poly(), expected);
    }

    #[test]
    fn cayley_hamilton_small() {
        let m = big(vec![
            vec![0, 1, -1, 2],
            vec![3, 0, 1, 0],
            vec![-2, 1, 1, 1],
            vec![0, 0, 2, -1],
        ]);
        let p = m.char_poly();
        assert!(p.eval_matrix(&m).is_zero_matrix());
    }

    #[test]
    fn rank_and_kernel() {
        let m = big(vec![
            vec![1, 2, 3],
            vec![2, 4, 6],
            vec![1, 0, 1],
        ]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.kernel_dimension(), 1);
        let id: Matrix<BigInt> = Matrix::identity(4);
        assert_eq!(id.rank(), 4);
        let z: Matrix<BigInt> = Matrix::zeros(3, 5);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.kernel_dimension(), 5);
    }

    #[test]
    fn poly_division_and_factorization() {
        let p: Poly<BigInt> = Poly::from_i64(&[-1, 0, 1]); // λ² - 1
        let a = Poly::from_i64(&[-1, 1]);
        let b = Poly::from_i64(&[1, 1]);
        assert_eq!(p.exact_div(&a), Some(b.clone()));
        assert!(a.divides(&p));
        assert!(!Poly::<BigInt>::from_i64(&[2, 1]).divides(&p));
        let fact = Factorization::new(vec![(a, 1), (b, 1)]);
        assert!(fact.matches(&p));
    }

    #[test]
    fn symmetry_predicates() {
        let s = big(vec![vec![0, 2], vec![2, 1]]);
        assert!(s.is_symmetric());
        let a = big(vec![vec![0, 2], vec![-2, 0]]);
        assert!(a.is_antisymmetric());
        assert!(!a.is_symmetric());
    }
}

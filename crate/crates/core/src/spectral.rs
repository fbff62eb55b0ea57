//! 2k-forms as exact endomorphisms of k-forms.
//!
//! Sorted k-tuples are identified with coordinates `1..=C(D,k)` through the
//! combinatorial rank map `A = 1 + Σ_i C(m_i - 1, i)`; a 2k-form then acts as
//! the `C(D,k) × C(D,k)` matrix `M[A][B] = f[unrank(A) ∪ unrank(B)]`, the
//! sorted-sum convention absorbing the `1/k!` of the tensor contraction.

use num_bigint::BigInt;

use crate::error::Error;
use crate::exterior::IndexTuple;
use crate::linalg::Matrix;
use crate::{EndomorphismMatrix, Form, IntPolynomial, Result};

/// Hard cap on endomorphism matrix size (`C(12,4)`).
pub const MAX_MATRIX_SIZE: usize = 495;

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num = 1u64;
    for i in 0..k {
        num = num * (n - i) / (i + 1);
    }
    num
}

/// 1-based coordinate of a sorted k-tuple among all k-subsets of `1..=d`.
pub fn rank_tuple(t: &IndexTuple, d: u8, k: u8) -> Result<usize> {
    if t.len() != k as usize || t.max_index() > d {
        return Err(Error::Rank(format!(
            "tuple {t} is not a {k}-subset of 1..={d}"
        )));
    }
    let mut a = 1u64;
    for (i, &m) in t.indices().iter().enumerate() {
        a += binomial(m as u64 - 1, i as u64 + 1);
    }
    Ok(a as usize)
}

/// Inverse of [`rank_tuple`].
pub fn unrank_tuple(a: usize, d: u8, k: u8) -> Result<IndexTuple> {
    let total = binomial(d as u64, k as u64) as usize;
    if a == 0 || a > total {
        return Err(Error::Rank(format!(
            "rank {a} outside 1..={total} for k={k}, d={d}"
        )));
    }
    let mut rem = (a - 1) as u64;
    let mut out = vec![0u8; k as usize];
    for i in (1..=k as u64).rev() {
        // largest m with C(m-1, i) ≤ rem
        let mut m = i; // C(i-1, i) = 0, always admissible
        while m < d as u64 && binomial(m, i) <= rem {
            m += 1;
        }
        rem -= binomial(m - 1, i);
        out[i as usize - 1] = m as u8;
    }
    IndexTuple::new(out)
}

/// The matrix of a 2k-form acting on sorted k-forms.
pub fn endomorphism_matrix(f: &Form, k: u8) -> Result<Matrix<i64>> {
    if f.degree() != 2 * k {
        return Err(Error::Degree(format!(
            "form of degree {} is not an endomorphism of {k}-forms",
            f.degree()
        )));
    }
    let d = f.dim();
    let n = binomial(d as u64, k as u64) as usize;
    if n > MAX_MATRIX_SIZE {
        return Err(Error::SearchBound(format!(
            "matrix size {n} exceeds cap {MAX_MATRIX_SIZE}"
        )));
    }
    let mut m = Matrix::zeros(n, n);
    let kk = k as usize;
    for (t, c) in f.components() {
        let idx = t.indices();
        let total = idx.len();
        // all k-subsets of the 2k support indices; every split lands in both
        // matrix positions because the complementary subset also occurs
        let mut choose: Vec<usize> = (0..kk).collect();
        loop {
            let mut left = Vec::with_capacity(kk);
            let mut right = Vec::with_capacity(kk);
            let mut pick = vec![false; total];
            for &p in &choose {
                pick[p] = true;
            }
            for (i, &x) in idx.iter().enumerate() {
                if pick[i] {
                    left.push(x);
                } else {
                    right.push(x);
                }
            }
            // parity of (left, right) as a shuffle of the sorted support
            let mut inversions = 0usize;
            for &a in &left {
                inversions += right.iter().filter(|&&b| b < a).count();
            }
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            let a = rank_tuple(&IndexTuple::new(left)?, d, k)? - 1;
            let b = rank_tuple(&IndexTuple::new(right)?, d, k)? - 1;
            m.set(a, b, sign * *c);
            if !next_combination(&mut choose, total) {
                break;
            }
        }
    }
    Ok(m)
}

/// Advances to the next k-combination of `0..total` in lexicographic order.
fn next_combination(choose: &mut [usize], total: usize) -> bool {
    let k = choose.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if choose[i] < i + total - k {
            choose[i] += 1;
            for j in i + 1..k {
                choose[j] = choose[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Exact characteristic polynomial of a big-integer matrix.
pub fn char_poly(m: &EndomorphismMatrix) -> IntPolynomial {
    m.char_poly()
}

/// Expands a claimed factorization and compares coefficientwise.
pub fn verify_factorization(
    poly: &IntPolynomial,
    factors: &crate::linalg::Factorization<BigInt>,
) -> bool {
    factors.matches(poly)
}

/// Dimension of the kernel of `factor(M)` over the rationals. For an
/// irreducible `factor`, this is nonzero exactly when the factor divides the
/// characteristic polynomial; a zero kernel therefore reports
/// [`Error::Factor`].
pub fn eigenspace_dimension(
    m: &EndomorphismMatrix,
    factor: &IntPolynomial,
) -> Result<usize> {
    let evaluated = factor.eval_matrix(m);
    let dim = evaluated.kernel_dimension();
    if dim == 0 {
        return Err(Error::Factor);
    }
    Ok(dim)
}

/// Dimension of `{X ∈ so(d) : X·f = 0}` where `X` acts as a derivation on
/// each tensor slot: the kernel of an exact linear system in the `C(d,2)`
/// rotation coefficients.
pub fn stabilizer_algebra_dimension(f: &Form) -> usize {
    let d = f.dim() as usize;
    let pairs: Vec<(u8, u8)> = (1..=d as u8)
        .flat_map(|a| ((a + 1)..=d as u8).map(move |b| (a, b)))
        .collect();
    let n_cols = pairs.len();
    // rows indexed by output tuples, discovered lazily
    let mut row_of: std::collections::BTreeMap<IndexTuple, usize> = Default::default();
    let mut entries: Vec<(usize, usize, i64)> = Vec::new();
    for (col, &(a, b)) in pairs.iter().enumerate() {
        // X e_a = e_b, X e_b = -e_a
        for (t, c) in f.components() {
            for (slot, &x) in t.indices().iter().enumerate() {
                let (repl, val) = if x == a {
                    (b, *c)
                } else if x == b {
                    (a, -*c)
                } else {
                    continue;
                };
                let mut idx = t.indices().to_vec();
                idx[slot] = repl;
                let Some((u, v)) = crate::exterior::normalize_component(&idx, val) else {
                    continue;
                };
                let next = row_of.len();
                let row = *row_of.entry(u).or_insert(next);
                entries.push((row, col, v));
            }
        }
    }
    let n_rows = row_of.len();
    if n_rows == 0 {
        return n_cols;
    }
    let mut m: Matrix<BigInt> = Matrix::zeros(n_rows, n_cols);
    for (r, c, v) in entries {
        let cur = m.get(r, c).clone();
        m.set(r, c, cur + BigInt::from(v));
    }
    n_cols - m.rank()
}

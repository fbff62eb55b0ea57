//! Exact verification of the su(2) generator fixture on the eight dimensional
//! space orthogonal to a nonexceptional plane.
//!
//! The three 8×8 generators carry prefactors 1/(2√3), 1/(2√3) and 1/6; all
//! checks run in `Q[√3]` (commutation relations, invariant vectors) and
//! `Q[i,√3]` (spinor eigenvectors), represented as pairs/quadruples of exact
//! rationals. The induced action on 2-forms is analysed through the Casimir
//! operator, whose 36-fold multiple is an integer matrix.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::linalg::Matrix;

/// An element `a + b·√3` of `Q[√3]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Qs3 {
    pub a: BigRational,
    pub b: BigRational,
}

impl Qs3 {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Qs3 { a, b }
    }

    pub fn rational(n: i64, d: i64) -> Self {
        Qs3 {
            a: BigRational::new(BigInt::from(n), BigInt::from(d)),
            b: BigRational::zero(),
        }
    }

    pub fn sqrt3_times(n: i64, d: i64) -> Self {
        Qs3 {
            a: BigRational::zero(),
            b: BigRational::new(BigInt::from(n), BigInt::from(d)),
        }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }
}

impl Add for Qs3 {
    type Output = Qs3;
    fn add(self, rhs: Qs3) -> Qs3 {
        Qs3 {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
        }
    }
}

impl Sub for Qs3 {
    type Output = Qs3;
    fn sub(self, rhs: Qs3) -> Qs3 {
        Qs3 {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
        }
    }
}

impl Mul for Qs3 {
    type Output = Qs3;
    fn mul(self, rhs: Qs3) -> Qs3 {
        // (a + b√3)(c + d√3) = ac + 3bd + (ad + bc)√3
        let three = BigRational::from(BigInt::from(3));
        Qs3 {
            a: self.a.clone() * rhs.a.clone() + three * self.b.clone() * rhs.b.clone(),
            b: self.a * rhs.b + self.b * rhs.a,
        }
    }
}

impl Neg for Qs3 {
    type Output = Qs3;
    fn neg(self) -> Qs3 {
        Qs3 {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Zero for Qs3 {
    fn zero() -> Self {
        Qs3 {
            a: BigRational::zero(),
            b: BigRational::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Qs3 {
    fn one() -> Self {
        Qs3 {
            a: BigRational::one(),
            b: BigRational::zero(),
        }
    }
}

/// An element `re + i·im` of `Q[i,√3]` with `re, im ∈ Q[√3]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Qis3 {
    pub re: Qs3,
    pub im: Qs3,
}

impl Qis3 {
    pub fn real(q: Qs3) -> Self {
        Qis3 {
            re: q,
            im: Qs3::zero(),
        }
    }

    pub fn imaginary(q: Qs3) -> Self {
        Qis3 {
            re: Qs3::zero(),
            im: q,
        }
    }
}

impl Add for Qis3 {
    type Output = Qis3;
    fn add(self, rhs: Qis3) -> Qis3 {
        Qis3 {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl Sub for Qis3 {
    type Output = Qis3;
    fn sub(self, rhs: Qis3) -> Qis3 {
        Qis3 {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl Mul for Qis3 {
    type Output = Qis3;
    fn mul(self, rhs: Qis3) -> Qis3 {
        Qis3 {
            re: self.re.clone() * rhs.re.clone() - self.im.clone() * rhs.im.clone(),
            im: self.re * rhs.im + self.im * rhs.re,
        }
    }
}

impl Neg for Qis3 {
    type Output = Qis3;
    fn neg(self) -> Qis3 {
        Qis3 {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Zero for Qis3 {
    fn zero() -> Self {
        Qis3 {
            re: Qs3::zero(),
            im: Qs3::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Qis3 {
    fn one() -> Self {
        Qis3 {
            re: Qs3::one(),
            im: Qs3::zero(),
        }
    }
}

/// Integer matrix of `2√3·T_1`.
pub const GEN1_NUMERATOR: [[i64; 8]; 8] = [
    [0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, -1, 0, 0],
    [0, 0, 0, 0, 1, 0, -1, 0],
    [0, -1, 0, 0, 0, 1, 0, 0],
    [0, 0, -1, 0, 0, 0, 1, 0],
    [0, 1, 0, -1, 0, 0, 0, 0],
    [0, 0, 1, 0, -1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0],
];

/// Integer matrix of `2√3·T_2`.
pub const GEN2_NUMERATOR: [[i64; 8]; 8] = [
    [0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, -1, 0],
    [0, 0, 0, -1, 0, 1, 0, 0],
    [0, 0, 1, 0, -1, 0, 0, 0],
    [0, -1, 0, 1, 0, 0, 0, 0],
    [0, 0, -1, 0, 0, 0, 1, 0],
    [0, 1, 0, 0, 0, -1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0],
];

/// Integer matrix of `6·T_3`.
pub const GEN3_NUMERATOR: [[i64; 8]; 8] = [
    [0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 2, 0, -1, 0, -1, 0],
    [0, -2, 0, 1, 0, 1, 0, 0],
    [0, 0, -1, 0, -1, 0, 2, 0],
    [0, 1, 0, 1, 0, -2, 0, 0],
    [0, 0, -1, 0, 2, 0, -1, 0],
    [0, 1, 0, -2, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0],
];

fn int_matrix(m: &[[i64; 8]; 8]) -> Matrix<i64> {
    Matrix::from_rows(m.iter().map(|r| r.to_vec()).collect())
}

/// The three generators as exact `Q[√3]` matrices.
pub fn generators() -> [Matrix<Qs3>; 3] {
    let t1 = int_matrix(&GEN1_NUMERATOR).map(|&v| Qs3::sqrt3_times(v, 6));
    let t2 = int_matrix(&GEN2_NUMERATOR).map(|&v| Qs3::sqrt3_times(v, 6));
    let t3 = int_matrix(&GEN3_NUMERATOR).map(|&v| Qs3::rational(v, 6));
    [t1, t2, t3]
}

/// The four su(2)-invariant vectors of the 8-dimensional module.
pub fn invariant_vectors() -> [[i64; 8]; 4] {
    [
        [1, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 1],
        [0, 1, 0, 1, 0, 1, 0, 0],
        [0, 0, 1, 0, 1, 0, 1, 0],
    ]
}

fn qis3(re_rat: i64, re_s3: i64, im_rat: i64, im_s3: i64) -> Qis3 {
    Qis3 {
        re: Qs3::rational(re_rat, 1) + Qs3::sqrt3_times(re_s3, 1),
        im: Qs3::rational(im_rat, 1) + Qs3::sqrt3_times(im_s3, 1),
    }
}

/// Spinor basis vectors over `Q[i,√3]`: (b1, b2, c1, c2).
pub fn spinor_vectors() -> [[Qis3; 8]; 4] {
    let z = || qis3(0, 0, 0, 0);
    // b1 = (0, 1+√3 i, 0, 1-√3 i, 0, -2, 0, 0)
    let b1 = [
        z(),
        qis3(1, 0, 0, 1),
        z(),
        qis3(1, 0, 0, -1),
        z(),
        qis3(-2, 0, 0, 0),
        z(),
        z(),
    ];
    // b2 = (0, 0, √3+i, 0, -√3+i, 0, -2i, 0)
    let b2 = [
        z(),
        z(),
        qis3(0, 1, 1, 0),
        z(),
        qis3(0, -1, 1, 0),
        z(),
        qis3(0, 0, -2, 0),
        z(),
    ];
    // c1 = (0, 0, 1+√3 i, 0, 1-√3 i, 0, -2, 0)
    let c1 = [
        z(),
        z(),
        qis3(1, 0, 0, 1),
        z(),
        qis3(1, 0, 0, -1),
        z(),
        qis3(-2, 0, 0, 0),
        z(),
    ];
    // c2 = (0, √3-i, 0, 2i, 0, -√3-i, 0, 0)
    let c2 = [
        z(),
        qis3(0, 1, -1, 0),
        z(),
        qis3(0, 0, 2, 0),
        z(),
        qis3(0, -1, -1, 0),
        z(),
        z(),
    ];
    [b1, b2, c1, c2]
}

fn mat_vec_qis3(m: &Matrix<Qs3>, v: &[Qis3; 8]) -> Vec<Qis3> {
    (0..8)
        .map(|i| {
            let mut acc = Qis3::zero();
            for (j, vj) in v.iter().enumerate() {
                let entry = m.get(i, j).clone();
                if entry.is_zero() || vj.is_zero() {
                    continue;
                }
                acc = acc + Qis3::real(entry) * vj.clone();
            }
            acc
        })
        .collect()
}

/// The induced derivation action of an 8×8 matrix on the 28-dimensional
/// space of 2-forms: `X·(e_c ∧ e_d) = (X e_c) ∧ e_d + e_c ∧ (X e_d)` with
/// column-vector convention `X e_c = Σ_r X[r][c] e_r`.
pub fn induced_on_two_forms(x: &Matrix<i64>) -> Matrix<i64> {
    let n = 8usize;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
        .collect();
    let pos: std::collections::HashMap<(usize, usize), usize> = pairs
        .iter()
        .enumerate()
        .map(|(k, &p)| (p, k))
        .collect();
    let mut out = Matrix::zeros(pairs.len(), pairs.len());
    for (col, &(c, d)) in pairs.iter().enumerate() {
        let mut put = |a: usize, b: usize, v: i64| {
            if a == b || v == 0 {
                return;
            }
            let (key, val) = if a < b { ((a, b), v) } else { ((b, a), -v) };
            let row = pos[&key];
            let cur = *out.get(row, col);
            out.set(row, col, cur + val);
        };
        for r in 0..n {
            put(r, d, *x.get(r, c));
            put(c, r, *x.get(r, d));
        }
    }
    out
}

/// Outcome of the exact su(2) verification.
#[derive(Clone, Debug, Serialize)]
pub struct Su2Report {
    /// `[T1,T2]=T3`, `[T2,T3]=T1`, `[T3,T1]=T2` in `Q[√3]`.
    pub commutation_ok: bool,
    /// The four listed vectors are annihilated by every generator.
    pub invariant_vectors_ok: bool,
    /// b1, c1 are T1-eigenvectors with eigenvalue -i/2; b2, c2 with +i/2.
    pub spinor_eigenvectors_ok: bool,
    /// Multiplicity of spin 0 in the 28-dimensional 2-form module.
    pub spin0_multiplicity: usize,
    /// Number of spin-1/2 doublets.
    pub spin_half_multiplicity: usize,
    /// Number of spin-1 triplets.
    pub spin1_multiplicity: usize,
    /// Joint kernel of the three induced generators on 2-forms.
    pub joint_kernel_dimension: usize,
}

impl Su2Report {
    /// All named checks pass and the 2-form module splits as nine spin-0,
    /// eight spin-1/2 and one spin-1 summand.
    pub fn all_ok(&self) -> bool {
        self.commutation_ok
            && self.invariant_vectors_ok
            && self.spinor_eigenvectors_ok
            && self.spin0_multiplicity == 9
            && self.spin_half_multiplicity == 8
            && self.spin1_multiplicity == 1
            && self.joint_kernel_dimension == 9
    }
}

/// Runs every check of the su(2) fixture exactly.
pub fn verify_su2_reduction() -> Su2Report {
    let [t1, t2, t3] = generators();

    let bracket = |x: &Matrix<Qs3>, y: &Matrix<Qs3>| x.mul(y).sub(&y.mul(x));
    let commutation_ok = bracket(&t1, &t2) == t3
        && bracket(&t2, &t3) == t1
        && bracket(&t3, &t1) == t2;

    let invariant_vectors_ok = invariant_vectors().iter().all(|v| {
        [&t1, &t2, &t3].iter().all(|t| {
            (0..8).all(|i| {
                let mut acc = Qs3::zero();
                for (j, &vj) in v.iter().enumerate() {
                    if vj != 0 {
                        acc = acc + t.get(i, j).clone() * Qs3::rational(vj, 1);
                    }
                }
                acc.is_zero()
            })
        })
    });

    // eigenvalues ∓ i/2 of T1
    let half_i = Qis3::imaginary(Qs3::rational(1, 2));
    let [b1, b2, c1, c2] = spinor_vectors();
    let check_eigen = |v: &[Qis3; 8], lambda: &Qis3| -> bool {
        let image = mat_vec_qis3(&t1, v);
        image
            .iter()
            .zip(v.iter())
            .all(|(got, want)| *got == lambda.clone() * want.clone())
    };
    let minus = -half_i.clone();
    let spinor_eigenvectors_ok = check_eigen(&b1, &minus)
        && check_eigen(&c1, &minus)
        && check_eigen(&b2, &half_i)
        && check_eigen(&c2, &half_i);

    // induced action on 2-forms; 36·Casimir = 3·A² + 3·B² + C² is integral
    let a2 = induced_on_two_forms(&int_matrix(&GEN1_NUMERATOR));
    let b2m = induced_on_two_forms(&int_matrix(&GEN2_NUMERATOR));
    let c2m = induced_on_two_forms(&int_matrix(&GEN3_NUMERATOR));
    let three = |m: &Matrix<i64>| m.scale(&3);
    let casimir36 = three(&a2.mul(&a2))
        .add(&three(&b2m.mul(&b2m)))
        .add(&c2m.mul(&c2m));
    let big = |m: &Matrix<i64>| m.map(|&v| BigInt::from(v));
    let id: Matrix<BigInt> = Matrix::identity(28);
    // the generators exponentiate to rotations (T_i = -i J_i), so the
    // Casimir eigenvalue on spin s is -s(s+1): 36-fold values 0, -27, -72
    let spin0 = big(&casimir36).kernel_dimension();
    let half = big(&casimir36).add(&id.scale(&BigInt::from(27))).kernel_dimension();
    let spin1 = big(&casimir36).add(&id.scale(&BigInt::from(72))).kernel_dimension();

    // joint kernel: stack the three induced generators
    let mut stacked: Matrix<BigInt> = Matrix::zeros(84, 28);
    for (block, m) in [&a2, &b2m, &c2m].iter().enumerate() {
        for i in 0..28 {
            for j in 0..28 {
                stacked.set(block * 28 + i, j, BigInt::from(*m.get(i, j)));
            }
        }
    }
    let joint_kernel_dimension = stacked.kernel_dimension();

    Su2Report {
        commutation_ok,
        invariant_vectors_ok,
        spinor_eigenvectors_ok,
        spin0_multiplicity: spin0,
        spin_half_multiplicity: half / 2,
        spin1_multiplicity: spin1 / 3,
        joint_kernel_dimension,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutation_relations_hold() {
        let report = verify_su2_reduction();
        assert!(report.commutation_ok);
        assert!(report.invariant_vectors_ok);
        assert!(report.spinor_eigenvectors_ok);
    }

    #[test]
    fn two_form_module_splits() {
        let report = verify_su2_reduction();
        assert_eq!(report.spin0_multiplicity, 9);
        assert_eq!(report.spin_half_multiplicity, 8);
        assert_eq!(report.spin1_multiplicity, 1);
        assert_eq!(report.joint_kernel_dimension, 9);
        assert!(report.all_ok());
    }

    #[test]
    fn qs3_arithmetic() {
        let x = Qs3::rational(1, 2) + Qs3::sqrt3_times(1, 3);
        let y = Qs3::sqrt3_times(3, 1);
        // (1/2 + √3/3)(3√3) = 3 + (3/2)√3
        let p = x * y;
        assert_eq!(p.a, BigRational::new(BigInt::from(3), BigInt::from(1)));
        assert_eq!(p.b, BigRational::new(BigInt::from(3), BigInt::from(2)));
    }
}

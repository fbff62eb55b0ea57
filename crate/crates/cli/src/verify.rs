//! The verification harness: recomputes every recorded reference value
//! (censuses, spectra, constructions, invariants, graph profiles) and
//! reports one pass/fail claim each, with exact expected and computed
//! values. Claims that fail reproduce the computed value in full so the
//! discrepancy is visible; notes explain what the computation found.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use serde::Serialize;

use specforms::construct::{
    epsilon, extend, g2, kahler, omega10, phi_a, phi_b, phi_c, phi_d, psi12, spin7, su4u1_8d,
    t17, EmbeddingSpec, PsiVariant,
};
use specforms::exterior::Index;
use specforms::invariants::{
    classify_2form_4d, invariant_i1, invariant_i2, valence_profile, TABLE_2FORMS_4D,
};
use specforms::linalg::{Factorization, Matrix, Poly};
use specforms::spectral::{
    eigenspace_dimension, endomorphism_matrix, stabilizer_algebra_dimension,
};
use specforms::su2::verify_su2_reduction;
use specforms::symmetry::{
    canonical_representative, classify_element, commutator_subgroup, exhaustive_census,
    expand_presentation, orthogonal_census, permutation_census, same_orbit, SignedPermutation,
};
use specforms::{EndomorphismMatrix, Form, IntPolynomial};

/// Claim groups, keyed the way the `--section` flag names them.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Section {
    S2,
    S4,
    S5,
    S6,
    S7,
    Appendix,
    Properties,
}

impl Section {
    pub fn from_flag(flag: &str) -> Option<Vec<Section>> {
        match flag {
            "all" => Some(vec![
                Section::S2,
                Section::S4,
                Section::S5,
                Section::S6,
                Section::S7,
                Section::Appendix,
                Section::Properties,
            ]),
            "2" => Some(vec![Section::S2]),
            "4" => Some(vec![Section::S4]),
            "5" => Some(vec![Section::S5]),
            "6" => Some(vec![Section::S6]),
            "7" => Some(vec![Section::S7]),
            "A" => Some(vec![Section::Appendix]),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Claim {
    pub id: String,
    pub criterion: u8,
    pub section: Section,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub millis: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub claims: Vec<Claim>,
    pub passed: usize,
    pub failed: usize,
}

impl VerificationReport {
    pub fn new(claims: Vec<Claim>) -> Self {
        let passed = claims.iter().filter(|c| c.pass).count();
        let failed = claims.len() - passed;
        VerificationReport {
            claims,
            passed,
            failed,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        for c in &self.claims {
            s.push_str(&format!(
                "[{}] c{:02} {:<38} expected {} | computed {} ({} ms)\n",
                if c.pass { "PASS" } else { "FAIL" },
                c.criterion,
                c.id,
                c.expected,
                c.computed,
                c.millis
            ));
            if let Some(n) = &c.note {
                s.push_str(&format!("       note: {n}\n"));
            }
        }
        s.push_str(&format!(
            "{} claims: {} passed, {} failed\n",
            self.claims.len(),
            self.passed,
            self.failed
        ));
        s
    }
}

struct Recorder {
    claims: Vec<Claim>,
    criterion: u8,
    section: Section,
}

impl Recorder {
    fn new(criterion: u8, section: Section) -> Self {
        Recorder {
            claims: Vec::new(),
            criterion,
            section,
        }
    }

    fn claim<E: ToString, C: ToString>(
        &mut self,
        id: &str,
        expected: E,
        computed: C,
        pass: bool,
        note: Option<String>,
        start: Instant,
    ) {
        self.claims.push(Claim {
            id: id.to_string(),
            criterion: self.criterion,
            section: self.section,
            expected: expected.to_string(),
            computed: computed.to_string(),
            pass,
            note,
            millis: start.elapsed().as_millis(),
        });
    }

    fn eq<T: PartialEq + ToString>(&mut self, id: &str, expected: T, computed: T, start: Instant) {
        let pass = expected == computed;
        self.claim(id, expected, computed, pass, None, start);
    }

    fn eq_note<T: PartialEq + ToString>(
        &mut self,
        id: &str,
        expected: T,
        computed: T,
        note: &str,
        start: Instant,
    ) {
        let pass = expected == computed;
        let note = (!pass).then(|| note.to_string());
        self.claim(id, expected, computed, pass, note, start);
    }
}

fn fac(data: &[(&[i64], u32)]) -> Factorization<BigInt> {
    Factorization::new(data.iter().map(|(c, m)| (Poly::from_i64(c), *m)).collect())
}

fn big(m: &Matrix<i64>) -> EndomorphismMatrix {
    m.map(|v| BigInt::from(*v))
}

fn poly_of(f: &Form, k: u8) -> IntPolynomial {
    big(&endomorphism_matrix(f, k).expect("valid degree")).char_poly()
}

fn poly_claim(rec: &mut Recorder, id: &str, f: &Form, k: u8, expected: &Factorization<BigInt>) {
    let t = Instant::now();
    let p = poly_of(f, k);
    let pass = expected.matches(&p);
    let computed = if pass {
        format!("{expected}")
    } else {
        format!("{p}")
    };
    rec.claim(id, format!("{expected}"), computed, pass, None, t);
}

/// Reference factorizations, used by the polynomial commands to print a
/// factored form whenever the computed polynomial matches one of them.
pub fn known_factorizations() -> Vec<Factorization<BigInt>> {
    vec![
        // volume form in four dimensions on 2-forms
        fac(&[(&[-1, 0, 1], 3)]),
        // the 6-form on 3-forms
        fac(&[
            (&[1369, 0, 699, 0, 51, 0, 1], 4),
            (&[361, 0, 42, 0, 1], 6),
            (&[1, 0, 1], 35),
            (&[9, 0, 1], 1),
        ]),
        // its dual 4-form on 2-forms: recorded orientation and the one the
        // component table actually produces
        fac(&[(&[4, 1], 1), (&[1, 1], 8), (&[-1, 1], 24), (&[-19, 2, 1], 6)]),
        fac(&[(&[-4, 1], 1), (&[-1, 1], 8), (&[1, 1], 24), (&[-19, -2, 1], 6)]),
        // the 17-component form class with the even spectrum
        fac(&[
            (&[0, 1], 4),
            (&[-5, 0, 1], 1),
            (&[3, 0, -8, 0, 1], 4),
            (&[-12, 0, 33, 0, -14, 0, 1], 1),
        ]),
        // complex-coordinate family on 2-forms
        fac(&[(&[-1, 1], 20), (&[1, 1], 24), (&[-4, 1], 1)]),
        fac(&[
            (&[2, 1], 12),
            (&[-3, 1], 8),
            (&[-2, 1], 15),
            (&[3, 1], 8),
            (&[-36, 6, 1], 1),
        ]),
        fac(&[(&[0, 1], 33), (&[-20, 0, 1], 6)]),
        // their duals on 3-forms
        fac(&[(&[1, 0, 1], 55), (&[9, 0, 1], 5)]),
        fac(&[
            (&[36, 0, 1], 1),
            (&[144, 0, 60, 0, 1], 4),
            (&[4, 0, 1], 27),
            (&[9, 0, 1], 24),
        ]),
        fac(&[(&[0, 1], 80), (&[20, 0, 1], 20)]),
        // twelve dimensional duals on 2-forms
        fac(&[(&[1, 1], 35), (&[-5, 1], 1), (&[-1, 1], 30)]),
        fac(&[
            (&[-2, 1], 24),
            (&[2, 1], 20),
            (&[-4, 1], 10),
            (&[4, 1], 10),
            (&[-80, 8, 1], 1),
        ]),
    ]
}

/// The 50-component reference table of the ten dimensional 6-form (index 10
/// written as 10; the display convention writes it as 0).
pub const OMEGA10_TABLE: [(i64, [Index; 6]); 50] = [
    (1, [1, 2, 3, 4, 5, 6]),
    (1, [1, 2, 3, 4, 7, 8]),
    (1, [1, 2, 3, 4, 9, 10]),
    (1, [1, 2, 3, 5, 7, 9]),
    (-1, [1, 2, 3, 5, 8, 10]),
    (-1, [1, 2, 3, 6, 7, 10]),
    (-1, [1, 2, 3, 6, 8, 9]),
    (-1, [1, 2, 4, 5, 7, 10]),
    (-1, [1, 2, 4, 5, 8, 9]),
    (-1, [1, 2, 4, 6, 7, 9]),
    (1, [1, 2, 4, 6, 8, 10]),
    (1, [1, 2, 5, 6, 7, 8]),
    (1, [1, 2, 5, 6, 9, 10]),
    (1, [1, 2, 7, 8, 9, 10]),
    (-1, [1, 3, 4, 5, 7, 9]),
    (1, [1, 3, 4, 5, 8, 10]),
    (1, [1, 3, 4, 6, 7, 10]),
    (1, [1, 3, 4, 6, 8, 9]),
    (1, [1, 3, 5, 6, 7, 9]),
    (-1, [1, 3, 5, 6, 8, 10]),
    (-1, [1, 3, 5, 7, 8, 9]),
    (1, [1, 3, 5, 7, 9, 10]),
    (1, [1, 3, 6, 7, 8, 10]),
    (-1, [1, 3, 6, 8, 9, 10]),
    (-1, [1, 4, 5, 6, 7, 10]),
    (-1, [1, 4, 5, 6, 8, 9]),
    (1, [1, 4, 5, 7, 8, 10]),
    (-1, [1, 4, 5, 8, 9, 10]),
    (1, [1, 4, 6, 7, 8, 9]),
    (-1, [1, 4, 6, 7, 9, 10]),
    (1, [2, 3, 4, 5, 7, 10]),
    (1, [2, 3, 4, 5, 8, 9]),
    (1, [2, 3, 4, 6, 7, 9]),
    (-1, [2, 3, 4, 6, 8, 10]),
    (-1, [2, 3, 5, 6, 7, 10]),
    (-1, [2, 3, 5, 6, 8, 9]),
    (1, [2, 3, 5, 7, 8, 10]),
    (-1, [2, 3, 5, 8, 9, 10]),
    (1, [2, 3, 6, 7, 8, 9]),
    (-1, [2, 3, 6, 7, 9, 10]),
    (-1, [2, 4, 5, 6, 7, 9]),
    (1, [2, 4, 5, 6, 8, 10]),
    (1, [2, 4, 5, 7, 8, 9]),
    (-1, [2, 4, 5, 7, 9, 10]),
    (-1, [2, 4, 6, 7, 8, 10]),
    (1, [2, 4, 6, 8, 9, 10]),
    (1, [3, 4, 5, 6, 7, 8]),
    (1, [3, 4, 5, 6, 9, 10]),
    (1, [3, 4, 7, 8, 9, 10]),
    (1, [5, 6, 7, 8, 9, 10]),
];

// ---------------------------------------------------------------------------
// criteria

/// G2 3-form censuses.
pub fn criterion_1() -> Vec<Claim> {
    let mut rec = Recorder::new(1, Section::S4);
    let psi = g2();
    let t = Instant::now();
    let pc = permutation_census(&psi).expect("census");
    rec.eq("g2-perm-symmetry-order", 21, pc.symmetry_order(), t);
    rec.eq("g2-perm-antisymmetries", 0, pc.antisymmetry_count(), t);
    let t = Instant::now();
    let oc = orthogonal_census(&psi).expect("census");
    rec.eq_note(
        "g2-orthogonal-symmetries",
        672,
        oc.symmetry_order(),
        "full count over S_7 x Z_2^7, confirmed by exhaustive enumeration; \
         the recorded value counts only the sign patterns with eta_7 = +1 \
         (exactly half: the sign kernel is the 8-element line-complement code)",
        t,
    );
    rec.eq_note(
        "g2-orthogonal-antisymmetries",
        672,
        oc.antisymmetry_count(),
        "half of the full count as above",
        t,
    );
    let t = Instant::now();
    let comm = commutator_subgroup(&oc.symmetries);
    rec.eq_note(
        "g2-orthogonal-commutator-order",
        168,
        comm.len(),
        "the full 1344-element stabilizer is perfect, so its commutator \
         subgroup is itself; 168 is the order of its image in S_7",
        t,
    );
    rec.claims
}

/// Spin(7) 4-form censuses.
pub fn criterion_2() -> Vec<Claim> {
    let mut rec = Recorder::new(2, Section::S4);
    let phi = spin7();
    let t = Instant::now();
    let pc = permutation_census(&phi).expect("census");
    rec.eq("spin7-perm-symmetry-order", 168, pc.symmetry_order(), t);
    rec.eq("spin7-perm-antisymmetries", 0, pc.antisymmetry_count(), t);
    let expected_cycles: BTreeMap<String, usize> = [
        ("1^8".to_string(), 1),
        ("1^1 7^1".to_string(), 48),
        ("2^1 6^1".to_string(), 56),
        ("1^2 3^2".to_string(), 56),
        ("2^4".to_string(), 7),
    ]
    .into_iter()
    .collect();
    rec.eq(
        "spin7-cycle-type-census",
        format!("{expected_cycles:?}"),
        format!("{:?}", pc.cycle_types),
        t,
    );
    let t = Instant::now();
    let pcomm = commutator_subgroup(&pc.symmetries);
    rec.eq("spin7-perm-commutator-order", 56, pcomm.len(), t);
    // the commutator contains the 48 seven-cycle-type elements, the seven
    // 2^4 elements and the identity
    let classes: BTreeMap<String, usize> =
        pcomm.iter().fold(BTreeMap::new(), |mut m, g| {
            *m.entry(g.cycle_type()).or_insert(0) += 1;
            m
        });
    let expected_comm: BTreeMap<String, usize> = [
        ("1^8".to_string(), 1),
        ("1^1 7^1".to_string(), 48),
        ("2^4".to_string(), 7),
    ]
    .into_iter()
    .collect();
    rec.eq(
        "spin7-perm-commutator-classes",
        format!("{expected_comm:?}"),
        format!("{classes:?}"),
        t,
    );
    let t = Instant::now();
    let oc = orthogonal_census(&phi).expect("census");
    rec.eq_note(
        "spin7-orthogonal-symmetries",
        10752,
        oc.symmetry_order(),
        "full count over S_8 x Z_2^8, confirmed by exhaustive enumeration; \
         the recorded value counts only eta_8 = +1 (the sign kernel is the \
         16-element self-dual code, so exactly half)",
        t,
    );
    rec.eq("spin7-orthogonal-antisymmetries", 0, oc.antisymmetry_count(), t);
    let t = Instant::now();
    let comm = commutator_subgroup(&oc.symmetries);
    rec.eq_note(
        "spin7-orthogonal-commutator-order",
        1344,
        comm.len(),
        "the full 21504-element stabilizer is perfect; 1344 is the order of \
         its image in S_8",
        t,
    );
    rec.claims
}

/// Kähler form censuses, exhaustively cross-checked.
pub fn criterion_3() -> Vec<Claim> {
    let mut rec = Recorder::new(3, Section::S4);
    for n in [2u8, 3] {
        let w = kahler(n).expect("kahler");
        let factorial: usize = (1..=n as usize).product();
        let t = Instant::now();
        let pc = permutation_census(&w).expect("census");
        rec.eq(
            &format!("kahler-n{n}-perm-symmetries"),
            factorial,
            pc.symmetry_order(),
            t,
        );
        rec.eq(
            &format!("kahler-n{n}-perm-antisymmetries"),
            factorial,
            pc.antisymmetry_count(),
            t,
        );
        let t = Instant::now();
        let oc = orthogonal_census(&w).expect("census");
        let expected = (1usize << (2 * n)) * factorial;
        rec.eq(
            &format!("kahler-n{n}-orthogonal-symmetries"),
            expected,
            oc.symmetry_order(),
            t,
        );
        rec.eq(
            &format!("kahler-n{n}-orthogonal-antisymmetries"),
            expected,
            oc.antisymmetry_count(),
            t,
        );
        // exhaustive oracle over all of S_d x Z_2^d
        let t = Instant::now();
        let (sym, anti) = exhaustive_census(&w).expect("bounded");
        rec.eq(
            &format!("kahler-n{n}-exhaustive-agreement"),
            "census equals exhaustive enumeration".to_string(),
            if sym == oc.symmetries && anti == oc.antisymmetries {
                "census equals exhaustive enumeration".to_string()
            } else {
                format!("exhaustive {}/{} differs", sym.len(), anti.len())
            },
            t,
        );
    }
    rec.claims
}

/// Construction of the ten dimensional 6-form.
pub fn criterion_4() -> Vec<Claim> {
    let mut rec = Recorder::new(4, Section::S5);
    let t = Instant::now();
    let omega = omega10();
    rec.eq("omega10-weight", 50, omega.weight(), t);
    let t = Instant::now();
    let mut table = Form::zero(10, 6).expect("shape");
    for (c, idx) in OMEGA10_TABLE {
        table.accumulate(&idx, c).expect("component");
    }
    rec.eq(
        "omega10-componentwise-table",
        "construction equals the 50-entry reference table".to_string(),
        if omega == table {
            "construction equals the 50-entry reference table".to_string()
        } else {
            "construction differs from the reference table".to_string()
        },
        t,
    );
    let phi = spin7();
    for k in 0..5u8 {
        let t = Instant::now();
        let c = omega.contract_plane(2 * k + 1, 2 * k + 2).expect("plane");
        let ok = same_orbit(&c, &phi).expect("bounded");
        rec.eq(
            &format!("omega10-contract-{}-{}", 2 * k + 1, 2 * k + 2),
            "O(8,Z)-equivalent to the Spin(7) form".to_string(),
            if ok {
                "O(8,Z)-equivalent to the Spin(7) form".to_string()
            } else {
                "not equivalent".to_string()
            },
            t,
        );
    }
    let t = Instant::now();
    let c110 = omega.contract_plane(1, 10).expect("plane");
    let plus = same_orbit(&c110, &t17()).expect("bounded");
    let minus = same_orbit(&c110, &t17().negate()).expect("bounded");
    rec.claim(
        "omega10-contract-1-10",
        "O(8,Z)-equivalent to the 17-component table up to overall sign",
        if plus {
            "equivalent to the table"
        } else if minus {
            "equivalent to the negative of the table"
        } else {
            "not equivalent"
        },
        plus || minus,
        Some(
            "printed component lists are compared up to overall sign; the \
             contraction equals the negative of the table exactly"
                .to_string(),
        ),
        t,
    );
    let t = Instant::now();
    let pc = permutation_census(&omega).expect("census");
    rec.eq("omega10-perm-census", "60/60".to_string(),
        format!("{}/{}", pc.symmetry_order(), pc.antisymmetry_count()), t);
    let t = Instant::now();
    let oc = orthogonal_census(&omega).expect("census");
    rec.eq_note(
        "omega10-orthogonal-census",
        "120/120".to_string(),
        format!("{}/{}", oc.symmetry_order(), oc.antisymmetry_count()),
        "the recorded count assumes the only new sign pattern is the \
         all-minus one; in fact each reflection-type permutation \
         antisymmetry also combines with sign patterns into an orthogonal \
         symmetry, doubling both counts",
        t,
    );
    rec.claims
}

/// Exact spectra of the 6-form, its dual, and the 17-component form.
pub fn criterion_5() -> Vec<Claim> {
    let mut rec = Recorder::new(5, Section::S5);
    let omega = omega10();
    let t = Instant::now();
    let eq_sixform = fac(&[
        (&[1369, 0, 699, 0, 51, 0, 1], 4),
        (&[361, 0, 42, 0, 1], 6),
        (&[1, 0, 1], 35),
        (&[9, 0, 1], 1),
    ]);
    let p_sixform = poly_of(&omega, 3);
    let pass = eq_sixform.matches(&p_sixform);
    rec.claim(
        "omega10-poly-on-3forms",
        format!("{eq_sixform}"),
        if pass {
            format!("{eq_sixform}")
        } else {
            format!("{p_sixform}")
        },
        pass,
        Some(
            "the recorded discussion assigns the two singlets eigenvalues \
             ±i√3, inconsistent with the recorded factor (λ² + 9), whose \
             roots are ±3i; this claim asserts and reproduces the factor"
                .to_string(),
        ),
        t,
    );
    let dual = omega.hodge_star();
    let t = Instant::now();
    let expected = fac(&[(&[4, 1], 1), (&[1, 1], 8), (&[-1, 1], 24), (&[-19, 2, 1], 6)]);
    let reflected = fac(&[(&[-4, 1], 1), (&[-1, 1], 8), (&[1, 1], 24), (&[-19, -2, 1], 6)]);
    let p = poly_of(&dual, 2);
    rec.claim(
        "dual-4form-poly-on-2forms",
        format!("{expected}"),
        if reflected.matches(&p) {
            format!("{reflected}")
        } else {
            format!("{p}")
        },
        expected.matches(&p),
        Some(
            "the component table with the standard volume orientation gives \
             the spectrum reflected through zero: the plane-sum singlet has \
             eigenvalue +4 (hand check: the four components pairing a plane \
             with the other planes all carry +1)"
                .to_string(),
        ),
        t,
    );
    let t = Instant::now();
    let md = big(&endomorphism_matrix(&dual, 2).expect("degree"));
    let dim_plus = eigenspace_dimension(&md, &Poly::from_i64(&[-1, 1])).expect("divisor");
    rec.claim(
        "dual-4form-lambda-1-eigenspace",
        "24",
        dim_plus,
        dim_plus == 24,
        Some(format!(
            "eigenvalue +1 has dimension {dim_plus}; the 24-dimensional \
             eigenspace sits at -1 in this orientation (dimension {})",
            eigenspace_dimension(&md, &Poly::from_i64(&[1, 1])).expect("divisor")
        )),
        t,
    );
    let t = Instant::now();
    let tform = t17();
    let eq72 = fac(&[
        (&[0, 1], 4),
        (&[-5, 0, 1], 1),
        (&[3, 0, -8, 0, 1], 4),
        (&[-12, 0, 33, 0, -14, 0, 1], 1),
    ]);
    let pt = poly_of(&tform, 2);
    let c13 = omega.contract_plane(1, 3).expect("plane");
    let p13 = poly_of(&c13, 2);
    rec.claim(
        "t17-poly-on-2forms",
        format!("{eq72}"),
        format!("{pt}"),
        eq72.matches(&pt),
        Some(format!(
            "the recorded even polynomial belongs to the other class of \
             nonexceptional planes (same-parity, e.g. the (1,3) plane, where \
             it {}); the printed 17-component table is the mixed-parity \
             (1,10) contraction, whose polynomial has odd terms",
            if eq72.matches(&p13) { "matches" } else { "does not match" }
        )),
        t,
    );
    let t = Instant::now();
    let mt = big(&endomorphism_matrix(&tform, 2).expect("degree"));
    let kernel = mt.kernel_dimension();
    rec.claim(
        "t17-zero-eigenvalue-multiplicity",
        "4",
        kernel,
        kernel == 4,
        Some(format!(
            "the mixed-parity contraction has kernel dimension {kernel}; the \
             same-parity class has kernel dimension {}",
            big(&endomorphism_matrix(&c13, 2).expect("degree")).kernel_dimension()
        )),
        t,
    );
    rec.claims
}

/// Infinitesimal stabilizer dimensions.
pub fn criterion_6() -> Vec<Claim> {
    let mut rec = Recorder::new(6, Section::S5);
    let t = Instant::now();
    rec.eq(
        "stabilizer-dim-omega10",
        16,
        stabilizer_algebra_dimension(&omega10()),
        t,
    );
    let t = Instant::now();
    rec.eq(
        "stabilizer-dim-spin7",
        21,
        stabilizer_algebra_dimension(&spin7()),
        t,
    );
    let t = Instant::now();
    rec.eq(
        "stabilizer-dim-volume-d4",
        6,
        stabilizer_algebra_dimension(&epsilon(4).expect("volume")),
        t,
    );
    rec.claims
}

/// Exact su(2) fixture checks.
pub fn criterion_7() -> Vec<Claim> {
    let mut rec = Recorder::new(7, Section::S5);
    let t = Instant::now();
    let report = verify_su2_reduction();
    rec.eq("su2-commutation-relations", true, report.commutation_ok, t);
    rec.eq("su2-invariant-vectors", true, report.invariant_vectors_ok, t);
    rec.eq(
        "su2-spinor-eigenvectors",
        true,
        report.spinor_eigenvectors_ok,
        t,
    );
    rec.eq(
        "su2-two-form-multiplicities",
        "9 x spin0 + 8 x spin1/2 + 1 x spin1".to_string(),
        format!(
            "{} x spin0 + {} x spin1/2 + {} x spin1",
            report.spin0_multiplicity,
            report.spin_half_multiplicity,
            report.spin1_multiplicity
        ),
        t,
    );
    rec.eq(
        "su2-joint-kernel-dimension",
        9,
        report.joint_kernel_dimension,
        t,
    );
    rec.claims
}

/// The complex-coordinate 4-form family.
pub fn criterion_8() -> Vec<Claim> {
    let mut rec = Recorder::new(8, Section::S6);
    let a = phi_a().expect("pattern A");
    let b = phi_b().expect("pattern B");
    let c = phi_c().expect("pattern C");
    let d = phi_d().expect("pattern D");
    let t = Instant::now();
    rec.eq(
        "family-weights",
        "10/60/40/40".to_string(),
        format!("{}/{}/{}/{}", a.weight(), b.weight(), c.weight(), d.weight()),
        t,
    );
    poly_claim(
        &mut rec,
        "phiA-poly-on-2forms",
        &a,
        2,
        &fac(&[(&[-1, 1], 20), (&[1, 1], 24), (&[-4, 1], 1)]),
    );
    poly_claim(
        &mut rec,
        "phiB-poly-on-2forms",
        &b,
        2,
        &fac(&[
            (&[2, 1], 12),
            (&[-3, 1], 8),
            (&[-2, 1], 15),
            (&[3, 1], 8),
            (&[-36, 6, 1], 1),
        ]),
    );
    let cd_poly = fac(&[(&[0, 1], 33), (&[-20, 0, 1], 6)]);
    poly_claim(&mut rec, "phiC-poly-on-2forms", &c, 2, &cd_poly);
    poly_claim(&mut rec, "phiD-poly-on-2forms", &d, 2, &cd_poly);
    poly_claim(
        &mut rec,
        "dual-A-poly-on-3forms",
        &a.hodge_star(),
        3,
        &fac(&[(&[1, 0, 1], 55), (&[9, 0, 1], 5)]),
    );
    poly_claim(
        &mut rec,
        "dual-B-poly-on-3forms",
        &b.hodge_star(),
        3,
        &fac(&[
            (&[36, 0, 1], 1),
            (&[144, 0, 60, 0, 1], 4),
            (&[4, 0, 1], 27),
            (&[9, 0, 1], 24),
        ]),
    );
    let dual_cd = fac(&[(&[0, 1], 80), (&[20, 0, 1], 20)]);
    poly_claim(&mut rec, "dual-C-poly-on-3forms", &c.hodge_star(), 3, &dual_cd);
    poly_claim(&mut rec, "dual-D-poly-on-3forms", &d.hodge_star(), 3, &dual_cd);

    let t = Instant::now();
    let star_omega = omega10().hodge_star();
    let minus = a.negate().add(&c.negate()).expect("shapes");
    let plus = a.add(&c).expect("shapes");
    rec.claim(
        "dual-of-omega-is-minus-A-minus-C",
        "star(omega) = -phiA - phiC exactly",
        if star_omega == minus {
            "star(omega) = -phiA - phiC exactly"
        } else if star_omega == plus {
            "star(omega) = +phiA + phiC exactly"
        } else {
            "no exact linear relation found"
        },
        star_omega == minus,
        Some(
            "with the family oriented so its spectra match the recorded \
             polynomials, the identity holds with the opposite overall sign"
                .to_string(),
        ),
        t,
    );

    let mut perm_orders = Vec::new();
    let mut perm_antis = Vec::new();
    let mut comms = Vec::new();
    for f in [&a, &b, &c, &d] {
        let pc = permutation_census(f).expect("census");
        perm_orders.push(pc.symmetry_order());
        perm_antis.push(pc.antisymmetry_count());
        comms.push(commutator_subgroup(&pc.symmetries).len());
    }
    let t = Instant::now();
    rec.eq(
        "family-perm-symmetry-orders",
        "240/240/120/120".to_string(),
        format!(
            "{}/{}/{}/{}",
            perm_orders[0], perm_orders[1], perm_orders[2], perm_orders[3]
        ),
        t,
    );
    rec.eq(
        "family-perm-antisymmetries",
        "0/0/120/120".to_string(),
        format!(
            "{}/{}/{}/{}",
            perm_antis[0], perm_antis[1], perm_antis[2], perm_antis[3]
        ),
        t,
    );
    rec.eq(
        "family-perm-commutator-orders",
        "60/60/60/60".to_string(),
        format!("{}/{}/{}/{}", comms[0], comms[1], comms[2], comms[3]),
        t,
    );
    let t = Instant::now();
    let mut orth_syms = Vec::new();
    let mut orth_antis = Vec::new();
    for f in [&a, &b, &c, &d] {
        let oc = orthogonal_census(f).expect("census");
        orth_syms.push(oc.symmetry_order());
        orth_antis.push(oc.antisymmetry_count());
    }
    rec.eq_note(
        "family-orthogonal-symmetries",
        "122880/960/480/240".to_string(),
        format!(
            "{}/{}/{}/{}",
            orth_syms[0], orth_syms[1], orth_syms[2], orth_syms[3]
        ),
        "first and fourth recorded values are half of the full counts; the \
         global sign flip keeps every even-degree form invariant, so \
         stabilizer orders here are even and closed under it",
        t,
    );
    rec.eq_note(
        "family-orthogonal-antisymmetries",
        "0/0/480/240".to_string(),
        format!(
            "{}/{}/{}/{}",
            orth_antis[0], orth_antis[1], orth_antis[2], orth_antis[3]
        ),
        "fourth recorded value is half of the full count",
        t,
    );
    let t = Instant::now();
    let base = su4u1_8d().expect("plane pairs");
    let dual_a = a.hodge_star();
    let mut all_ok = true;
    for k in 0..5u8 {
        let cc = dual_a.contract_plane(2 * k + 1, 2 * k + 2).expect("plane");
        if !(same_orbit(&cc, &base).expect("bounded")
            || same_orbit(&cc, &base.negate()).expect("bounded"))
        {
            all_ok = false;
        }
    }
    rec.eq(
        "dual-A-exceptional-contractions",
        "each O(8,Z)-equivalent to the plane-pair 4-form".to_string(),
        if all_ok {
            "each O(8,Z)-equivalent to the plane-pair 4-form".to_string()
        } else {
            "some contraction is not equivalent".to_string()
        },
        t,
    );
    rec.claims
}

/// Twelve dimensional 8-forms.
pub fn criterion_9() -> Vec<Claim> {
    let mut rec = Recorder::new(9, Section::S7);
    let t = Instant::now();
    let psi_a = psi12(PsiVariant::A);
    let psi_b = psi12(PsiVariant::B);
    rec.eq(
        "psi12-constructions-compatible",
        "both lifts close without sign conflicts".to_string(),
        match (&psi_a, &psi_b) {
            (Ok(_), Ok(_)) => "both lifts close without sign conflicts".to_string(),
            (a, b) => format!(
                "A: {}, B: {}",
                a.as_ref().map(|_| "ok").unwrap_or("conflict"),
                b.as_ref().map(|_| "ok").unwrap_or("conflict")
            ),
        },
        t,
    );
    if let (Ok(psi_a), Ok(psi_b)) = (psi_a, psi_b) {
        poly_claim(
            &mut rec,
            "psi12-A-dual-poly-on-2forms",
            &psi_a.hodge_star(),
            2,
            &fac(&[(&[1, 1], 35), (&[-5, 1], 1), (&[-1, 1], 30)]),
        );
        poly_claim(
            &mut rec,
            "psi12-B-dual-poly-on-2forms",
            &psi_b.hodge_star(),
            2,
            &fac(&[
                (&[-2, 1], 24),
                (&[2, 1], 20),
                (&[-4, 1], 10),
                (&[4, 1], 10),
                (&[-80, 8, 1], 1),
            ]),
        );
        let t = Instant::now();
        let rec_a = psi_a.contract_plane(11, 12).expect("plane");
        let rec_b = psi_b.contract_plane(11, 12).expect("plane");
        rec.eq(
            "psi12-slot-contractions-recover-sources",
            true,
            rec_a == phi_a().expect("A").hodge_star() && rec_b == phi_b().expect("B").hodge_star(),
            t,
        );
    }
    rec.claims
}

/// The 2-form classifier table in four dimensions.
pub fn criterion_10() -> Vec<Claim> {
    let mut rec = Recorder::new(10, Section::Appendix);
    let t = Instant::now();
    let mut invariants_ok = true;
    let mut democracy_ok = true;
    for row in &TABLE_2FORMS_4D {
        let f = row.representative();
        if invariant_i1(&f).expect("2-form") != row.i1
            || invariant_i2(&f).expect("4d") != row.i2
        {
            invariants_ok = false;
        }
        let census = permutation_census(&f).expect("census");
        if census.democratic != row.democratic {
            democracy_ok = false;
        }
    }
    rec.eq("table-invariant-values", true, invariants_ok, t);
    rec.eq("table-democracy-flags", true, democracy_ok, t);
    let t = Instant::now();
    let mut distinct = true;
    for (i, x) in TABLE_2FORMS_4D.iter().enumerate() {
        for y in &TABLE_2FORMS_4D[i + 1..] {
            if (x.i1, x.i2) == (y.i1, y.i2) {
                distinct = false;
            }
        }
    }
    rec.eq("table-pairs-pairwise-distinct", true, distinct, t);
    // random special-rotation orbit samples classify back to their row
    let t = Instant::now();
    let mut rng = SplitMix::new(0x5eed_0010);
    let mut classified_ok = true;
    for _ in 0..100 {
        let row = &TABLE_2FORMS_4D[(rng.next_u64() % 19) as usize];
        let g = random_so_element(&mut rng, 4);
        let moved = g.act(&row.representative()).expect("dims");
        match classify_2form_4d(&moved).expect("2-form in 4d") {
            Some(entry) if entry.label == row.label => {}
            _ => classified_ok = false,
        }
    }
    rec.eq("table-orbit-classification", true, classified_ok, t);
    rec.claims
}

/// Vertex graph valence profiles.
pub fn criterion_11() -> Vec<Claim> {
    let mut rec = Recorder::new(11, Section::S2);
    let profile = |f: &Form| {
        let s = valence_profile(f);
        let classes: Vec<String> = s
            .classes
            .iter()
            .map(|(p, n)| {
                let dist: Vec<String> = p.iter().map(|(d, c)| format!("d{d}:{c}")).collect();
                format!("{n} x {{{}}}", dist.join(","))
            })
            .collect();
        format!("{} vertices: {}", s.vertex_count, classes.join("; "))
    };
    let t = Instant::now();
    rec.eq(
        "profile-spin7",
        "14 vertices: 14 x {d2:12,d4:1}".to_string(),
        profile(&spin7()),
        t,
    );
    let t = Instant::now();
    rec.eq(
        "profile-omega10",
        "50 vertices: 40 x {d1:4,d2:24,d3:16,d4:5}; 10 x {d2:30,d3:16,d4:3}".to_string(),
        profile(&omega10()),
        t,
    );
    let t = Instant::now();
    rec.eq_note(
        "profile-phiB",
        "60 vertices: 60 x {d1:6,d2:27,d3:30,d4:6}".to_string(),
        profile(&phi_b().expect("B")),
        "the recorded distance counts add up to 69, which is impossible for \
         60 vertices (each vertex has 59 neighbours); the computed profile \
         sums correctly with 20 vertices at distance 3",
        t,
    );
    let t = Instant::now();
    rec.eq(
        "profile-phiC",
        "40 vertices: 40 x {d1:4,d2:18,d3:12,d4:5}".to_string(),
        profile(&phi_c().expect("C")),
        t,
    );
    rec.claims
}

/// Presentations and nested embeddings.
pub fn criterion_12() -> Vec<Claim> {
    let mut rec = Recorder::new(12, Section::S4);
    let cycles = |d: u8, s: &str| SignedPermutation::from_cycles(d, s).expect("cycles");

    let t = Instant::now();
    let w = expand_presentation(6, &[(vec![1, 2], 1)], &[cycles(6, "(1 3 5)(2 4 6)")], 1000)
        .expect("presentation");
    rec.eq(
        "presentation-kahler-1-1",
        true,
        w == kahler(3).expect("kahler"),
        t,
    );
    let t = Instant::now();
    let psi = expand_presentation(7, &[(vec![1, 2, 7], 1)], &[cycles(7, "(1 2 5 4 6 7 3)")], 1000)
        .expect("presentation");
    rec.eq("presentation-g2-1-1", true, psi == g2(), t);
    let t = Instant::now();
    let psi3 = expand_presentation(
        7,
        &[(vec![1, 2, 7], 1), (vec![1, 3, 6], -1), (vec![2, 4, 6], 1)],
        &[cycles(7, "(1 3 5)(2 4 6)")],
        1000,
    )
    .expect("presentation");
    rec.eq("presentation-g2-3-1", true, psi3 == g2(), t);
    let t = Instant::now();
    let star_psi = expand_presentation(
        7,
        &[(vec![1, 2, 3, 4], 1)],
        &[cycles(7, "(1 2 5 4 6 7 3)")],
        1000,
    )
    .expect("presentation");
    rec.eq("presentation-dual-g2", true, star_psi == g2().hodge_star(), t);

    // the three minimal one-generator lifts of the Kähler form
    let t = Instant::now();
    let mut lifts_ok = true;
    for gen in ["(1 2 5 4 6 7 3)", "(2 6 5)(3 4 7)", "(1 4 2)(5 6 7)"] {
        let spec = EmbeddingSpec::new(7, vec![7], vec![cycles(7, gen)]);
        if extend(&kahler(3).expect("kahler"), &spec).expect("lift") != g2() {
            lifts_ok = false;
        }
    }
    rec.claim(
        "kahler-to-g2-minimal-lifts",
        "three one-generator lifts regenerate the 3-form",
        if lifts_ok {
            "three one-generator lifts regenerate the 3-form"
        } else {
            "some lift fails"
        },
        lifts_ok,
        Some(
            "the order-3 choices must fix one of the odd indices; the \
             2-fixing variant closes on only six of the seven components \
             and is replaced by its conjugate fixing 3"
                .to_string(),
        ),
        t,
    );
    let t = Instant::now();
    let spec = EmbeddingSpec::new(7, vec![7], vec![cycles(7, "(1 2 5 4 6 7 3)")]);
    let from_plane = extend(&epsilon(2).expect("plane"), &spec).expect("lift");
    rec.eq("plane-to-g2-lift", true, from_plane == g2(), t);

    let t = Instant::now();
    let p33 = expand_presentation(
        8,
        &[(vec![1, 2, 3, 4], 1)],
        &[cycles(8, "(1 2 5 4 6 7 3)"), cycles(8, "(3 5 7)(4 6 8)")],
        10000,
    )
    .expect("presentation");
    rec.eq("volume-seed-to-spin7", true, p33 == spin7(), t);
    let t = Instant::now();
    let h6 = EmbeddingSpec::new(8, vec![8], vec![cycles(8, "(1 2)(3 6 7 4 5 8)")]);
    let lift_h6 = extend(&g2(), &h6).expect("lift");
    let h8 = EmbeddingSpec::new(
        8,
        vec![8],
        vec![
            cycles(8, "(1 2)(3 4)(5 6)(7 8)"),
            cycles(8, "(1 3)(2 4)(5 7)(6 8)"),
            cycles(8, "(1 5)(2 6)(3 7)(4 8)"),
        ],
    );
    let lift_h8 = extend(&g2(), &h8).expect("lift");
    rec.eq(
        "g2-to-spin7-lifts",
        true,
        lift_h6 == spin7() && lift_h8 == spin7(),
        t,
    );
    let t = Instant::now();
    let h21 = EmbeddingSpec::new(
        8,
        vec![7, 8],
        vec![cycles(8, "(1 2 6 4 7 5 8)"), cycles(8, "(2 3 4)(5 8 7)")],
    );
    let lift_h21 = extend(&epsilon(2).expect("plane"), &h21).expect("lift");
    rec.eq("plane-to-spin7-lift", true, lift_h21 == spin7(), t);

    // relations between the lifted 4-form and the 3-form
    let t = Instant::now();
    let phi = spin7();
    let psi = g2();
    let mut rel_ok = true;
    for (tuple, c) in psi.components() {
        let mut idx = tuple.indices().to_vec();
        idx.push(8);
        if phi.component(&idx) != *c {
            rel_ok = false;
        }
    }
    let restricted = phi.restrict(&[1, 2, 3, 4, 5, 6, 7]).expect("subset");
    rec.eq(
        "spin7-g2-component-relations",
        true,
        rel_ok && restricted == psi.hodge_star(),
        t,
    );
    rec.claims
}

/// Randomized property suites (exact invariants on random inputs).
pub fn criterion_13() -> Vec<Claim> {
    let mut rec = Recorder::new(13, Section::Properties);

    // double Hodge dual
    let t = Instant::now();
    let mut rng = SplitMix::new(0x5eed_0013);
    let mut pass = true;
    for _ in 0..100 {
        let f = random_form(&mut rng, 2, 8);
        let sign = if (f.degree() as usize * (f.dim() - f.degree()) as usize) % 2 == 0 {
            1
        } else {
            -1
        };
        let twice = f.hodge_star().hodge_star();
        let expect = if sign > 0 { f.clone() } else { f.negate() };
        if twice != expect {
            pass = false;
        }
    }
    rec.eq("property-double-dual", "100/100", if pass { "100/100" } else { "failures" }, t);

    // group action homomorphism
    let t = Instant::now();
    let mut pass = true;
    for _ in 0..100 {
        let f = random_form(&mut rng, 2, 8);
        let g = random_signed_permutation(&mut rng, f.dim());
        let h = random_signed_permutation(&mut rng, f.dim());
        let lhs = g.compose(&h).act(&f).expect("dims");
        let rhs = g.act(&h.act(&f).expect("dims")).expect("dims");
        if lhs != rhs {
            pass = false;
        }
    }
    rec.eq("property-action-homomorphism", "100/100", if pass { "100/100" } else { "failures" }, t);

    // census equals exhaustive enumeration for d ≤ 5
    let t = Instant::now();
    let mut pass = true;
    for _ in 0..100 {
        let f = random_form(&mut rng, 2, 5);
        if f.is_zero() {
            continue;
        }
        let oc = orthogonal_census(&f).expect("census");
        let (sym, anti) = exhaustive_census(&f).expect("bounded");
        if sym != oc.symmetries || anti != oc.antisymmetries {
            pass = false;
        }
    }
    rec.eq("property-census-vs-exhaustive", "100/100", if pass { "100/100" } else { "failures" }, t);

    // Cayley-Hamilton on random matrices plus the 45-dimensional dual matrix
    let t = Instant::now();
    let mut pass = true;
    for _ in 0..100 {
        let n = 2 + (rng.next_u64() % 8) as usize;
        let mut m: Matrix<BigInt> = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, BigInt::from((rng.next_u64() % 7) as i64 - 3));
            }
        }
        if !m.char_poly().eval_matrix(&m).is_zero_matrix() {
            pass = false;
        }
    }
    let md = big(&endomorphism_matrix(&omega10().hodge_star(), 2).expect("degree"));
    if !md.char_poly().eval_matrix(&md).is_zero_matrix() {
        pass = false;
    }
    rec.eq("property-cayley-hamilton", "101/101", if pass { "101/101" } else { "failures" }, t);

    // characteristic polynomial invariance under signed-permutation
    // conjugation
    let t = Instant::now();
    let mut pass = true;
    for _ in 0..100 {
        let k = 1 + (rng.next_u64() % 2) as u8;
        let f = random_even_form(&mut rng, 6, 2 * k);
        let g = random_signed_permutation(&mut rng, 6);
        let moved = g.act(&f).expect("dims");
        if poly_of(&f, k) != poly_of(&moved, k) {
            pass = false;
        }
    }
    rec.eq("property-charpoly-conjugation", "100/100", if pass { "100/100" } else { "failures" }, t);

    // canonical representative is constant on orbits
    let t = Instant::now();
    let mut pass = true;
    for _ in 0..100 {
        let f = random_form(&mut rng, 2, 7);
        if f.is_zero() {
            continue;
        }
        let g = random_signed_permutation(&mut rng, f.dim());
        let moved = g.act(&f).expect("dims");
        if canonical_representative(&f).expect("bounded")
            != canonical_representative(&moved).expect("bounded")
        {
            pass = false;
        }
    }
    rec.eq("property-canonical-orbit-constant", "100/100", if pass { "100/100" } else { "failures" }, t);

    // odd permutation symmetries flip classification on the dual
    let t = Instant::now();
    let mut pass = true;
    for _ in 0..40 {
        let f = random_form(&mut rng, 2, 5);
        if f.is_zero() {
            continue;
        }
        let census = permutation_census(&f).expect("census");
        let dual = f.hodge_star();
        for g in census.symmetries.iter().chain(census.antisymmetries.iter()) {
            let on_f = classify_element(g, &f).expect("dims");
            let on_dual = classify_element(g, &dual).expect("dims");
            let flip = g.parity() == -1;
            if (on_f == on_dual) == flip {
                pass = false;
            }
        }
    }
    rec.eq("property-dual-classification-parity", "40/40", if pass { "40/40" } else { "failures" }, t);

    rec.claims
}

pub fn run_criterion(n: u8) -> Vec<Claim> {
    match n {
        1 => criterion_1(),
        2 => criterion_2(),
        3 => criterion_3(),
        4 => criterion_4(),
        5 => criterion_5(),
        6 => criterion_6(),
        7 => criterion_7(),
        8 => criterion_8(),
        9 => criterion_9(),
        10 => criterion_10(),
        11 => criterion_11(),
        12 => criterion_12(),
        13 => criterion_13(),
        _ => Vec::new(),
    }
}

/// Runs every claim in the requested sections, in criterion order.
pub fn run_sections(sections: &[Section]) -> VerificationReport {
    let mut claims = Vec::new();
    for n in 1..=13 {
        let batch = run_criterion(n);
        claims.extend(
            batch
                .into_iter()
                .filter(|c| sections.contains(&c.section)),
        );
    }
    VerificationReport::new(claims)
}

// ---------------------------------------------------------------------------
// deterministic pseudo-randomness (SplitMix64)

pub struct SplitMix {
    state: u64,
}

impl SplitMix {
    pub fn new(seed: u64) -> Self {
        SplitMix { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }
}

pub fn random_form(rng: &mut SplitMix, min_d: u8, max_d: u8) -> Form {
    let d = min_d + (rng.next_u64() % (max_d - min_d + 1) as u64) as u8;
    let p = 1 + (rng.next_u64() % (d as u64).min(4)) as u8;
    let weight = 1 + (rng.next_u64() % 6) as usize;
    let mut f = Form::zero(d, p).expect("shape");
    for _ in 0..weight {
        let mut idx: Vec<Index> = (1..=d).collect();
        for i in (1..idx.len()).rev() {
            let j = (rng.next_u64() % (i as u64 + 1)) as usize;
            idx.swap(i, j);
        }
        idx.truncate(p as usize);
        idx.sort_unstable();
        let c = if rng.next_u64() % 2 == 0 { 1 } else { -1 };
        f.accumulate(&idx, c).expect("component");
    }
    f
}

fn random_even_form(rng: &mut SplitMix, d: u8, p: u8) -> Form {
    let weight = 2 + (rng.next_u64() % 5) as usize;
    let mut f = Form::zero(d, p).expect("shape");
    for _ in 0..weight {
        let mut idx: Vec<Index> = (1..=d).collect();
        for i in (1..idx.len()).rev() {
            let j = (rng.next_u64() % (i as u64 + 1)) as usize;
            idx.swap(i, j);
        }
        idx.truncate(p as usize);
        idx.sort_unstable();
        let c = if rng.next_u64() % 2 == 0 { 1 } else { -1 };
        f.accumulate(&idx, c).expect("component");
    }
    f
}

pub fn random_signed_permutation(rng: &mut SplitMix, d: u8) -> SignedPermutation {
    let mut images: Vec<u8> = (1..=d).collect();
    for i in (1..images.len()).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        images.swap(i, j);
    }
    let etas: Vec<i8> = (0..d).map(|_| if rng.next_u64() % 2 == 0 { 1 } else { -1 }).collect();
    SignedPermutation::new(images, &etas).expect("bijection")
}

fn random_so_element(rng: &mut SplitMix, d: u8) -> SignedPermutation {
    loop {
        let g = random_signed_permutation(rng, d);
        if g.in_so() {
            return g;
        }
    }
}

//! Nested constructions of higher forms from lower ones, and the catalog of
//! named forms.
//!
//! The embedding machinery generates components
//! `Φ_{Σ(i1)…Σ(ip) Σ(s1)…Σ(sb)} = φ_{i1…ip}` over a finite group of
//! permutations `Σ`, with appended slot indices `s1 < … < sb`; any two group
//! elements mapping onto the same unordered support must agree on the signed
//! value, otherwise the construction is rejected. Seed-only expansions (no
//! slots, same dimension) are presentations, handled in [`crate::symmetry`].
//!
//! The complex-coordinate family pairs plane `j` with the frame vector
//! `z_j = e_{2j-1} + i·e_{2j}`; expansions run over exact Gaussian integers,
//! take the stated real/imaginary combination, and divide by the integer
//! content so the result is special.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::exterior::{normalize_component, Index, IndexTuple};
use crate::symmetry::{closure, orbit_expand, SignedPermutation, DEFAULT_GROUP_BOUND};
use crate::{Form, Result};

/// An embedding of a p-form in d dimensions into a P-form in D dimensions.
#[derive(Clone, Debug)]
pub struct EmbeddingSpec {
    /// Target dimension D.
    pub target_dim: u8,
    /// Appended slot indices, strictly increasing, all above the source
    /// dimension; the target degree is `p + slots.len()`.
    pub slots: Vec<Index>,
    /// Generators of the subgroup H over `1..=D`.
    pub generators: Vec<SignedPermutation>,
    /// Cap on the closure of H.
    pub bound: usize,
}

impl EmbeddingSpec {
    pub fn new(target_dim: u8, slots: Vec<Index>, generators: Vec<SignedPermutation>) -> Self {
        EmbeddingSpec {
            target_dim,
            slots,
            generators,
            bound: DEFAULT_GROUP_BOUND,
        }
    }
}

/// Extends a form along an embedding spec, conflict-checked.
pub fn extend(source: &Form, spec: &EmbeddingSpec) -> Result<Form> {
    let d = source.dim();
    let big_d = spec.target_dim;
    let b = spec.slots.len() as u8;
    if big_d < d {
        return Err(Error::Dimension(format!(
            "target dimension {big_d} below source dimension {d}"
        )));
    }
    if b > big_d - d {
        return Err(Error::Degree(format!(
            "{b} slots exceed the {} appended dimensions",
            big_d - d
        )));
    }
    for w in spec.slots.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::Degree("slots must be strictly increasing".into()));
        }
    }
    for &s in &spec.slots {
        if s <= d || s > big_d {
            return Err(Error::IndexRange {
                index: s,
                dim: big_d,
            });
        }
    }
    for g in &spec.generators {
        if g.degree() != big_d {
            return Err(Error::Dimension(format!(
                "generator degree {} vs target dimension {big_d}",
                g.degree()
            )));
        }
    }
    // no generators means the trivial subgroup: the plain embedding
    let group = if spec.generators.is_empty() {
        vec![SignedPermutation::identity(big_d)]
    } else {
        closure(&spec.generators, spec.bound)?
    };
    let seeds: Vec<(Vec<Index>, i64)> = source
        .components()
        .map(|(t, c)| {
            let mut idx = t.indices().to_vec();
            idx.extend_from_slice(&spec.slots);
            (idx, *c)
        })
        .collect();
    orbit_expand(big_d, source.degree() + b, &seeds, &group).map_err(|c| {
        Error::IncompatibleEmbedding {
            support: c.support.to_string(),
            first: c.first,
            second: c.second,
        }
    })
}

// ---------------------------------------------------------------------------
// catalog

fn form_from(dim: u8, deg: u8, comps: &[(i64, &[Index])]) -> Form {
    Form::from_components(dim, deg, comps.iter().map(|(c, idx)| (idx.to_vec(), *c)))
        .expect("catalog data is well-formed")
}

/// Volume form in d dimensions.
pub fn epsilon(d: u8) -> Result<Form> {
    let idx: Vec<Index> = (1..=d).collect();
    let mut f = Form::zero(d, d)?;
    f.accumulate(&idx, 1)?;
    Ok(f)
}

/// The u(n)-invariant 2-form on R^{2n}: `ω_{12} = ω_{34} = … = 1`.
pub fn kahler(n: u8) -> Result<Form> {
    if n == 0 || n > 8 {
        return Err(Error::Dimension(format!("kahler index {n} outside 1..=8")));
    }
    let mut f = Form::zero(2 * n, 2)?;
    for k in 0..n {
        f.accumulate(&[2 * k + 1, 2 * k + 2], 1)?;
    }
    Ok(f)
}

/// The octonionic structure-constant 3-form on R^7.
pub fn g2() -> Form {
    form_from(
        7,
        3,
        &[
            (1, &[1, 2, 7]),
            (-1, &[1, 3, 6]),
            (-1, &[1, 4, 5]),
            (-1, &[2, 3, 5]),
            (1, &[2, 4, 6]),
            (1, &[3, 4, 7]),
            (1, &[5, 6, 7]),
        ],
    )
}

/// The self-dual Spin(7)-invariant 4-form on R^8 (14 components).
pub fn spin7() -> Form {
    form_from(
        8,
        4,
        &[
            (1, &[1, 2, 3, 4]),
            (1, &[1, 2, 5, 6]),
            (1, &[1, 2, 7, 8]),
            (1, &[1, 3, 5, 7]),
            (-1, &[1, 3, 6, 8]),
            (-1, &[1, 4, 5, 8]),
            (-1, &[1, 4, 6, 7]),
            (-1, &[2, 3, 5, 8]),
            (-1, &[2, 3, 6, 7]),
            (-1, &[2, 4, 5, 7]),
            (1, &[2, 4, 6, 8]),
            (1, &[3, 4, 5, 6]),
            (1, &[3, 4, 7, 8]),
            (1, &[5, 6, 7, 8]),
        ],
    )
}

/// The 17-component 4-form obtained on the complement of a nonexceptional
/// plane of the 10-dimensional 6-form.
pub fn t17() -> Form {
    form_from(
        8,
        4,
        &[
            (1, &[1, 2, 5, 6]),
            (-1, &[1, 6, 7, 8]),
            (-1, &[2, 3, 5, 6]),
            (-1, &[1, 3, 5, 7]),
            (-1, &[3, 4, 6, 7]),
            (-1, &[1, 4, 5, 8]),
            (1, &[2, 4, 5, 7]),
            (-1, &[2, 3, 4, 7]),
            (1, &[1, 2, 4, 7]),
            (-1, &[2, 5, 6, 7]),
            (1, &[3, 5, 6, 8]),
            (-1, &[1, 2, 3, 8]),
            (1, &[2, 5, 7, 8]),
            (1, &[3, 4, 5, 6]),
            (-1, &[2, 4, 6, 8]),
            (1, &[3, 4, 7, 8]),
            (1, &[1, 3, 4, 6]),
        ],
    )
}

/// The pair-of-pairs shift `(1 3 5 … d-1)(2 4 6 … d)` on an even dimension.
pub fn pair_shift(d: u8) -> Result<SignedPermutation> {
    if d % 2 != 0 {
        return Err(Error::Dimension(format!("pair shift needs even d, got {d}")));
    }
    let mut images = vec![0u8; d as usize];
    for i in 1..=d {
        let img = i + 2;
        images[i as usize - 1] = if img > d { img - d } else { img };
    }
    SignedPermutation::from_images(images)
}

/// The 6-form in ten dimensions: the cyclic lift of the Spin(7) form over
/// the five ordered pairs, slots on the last pair. Conflict-free by
/// construction.
pub fn omega10() -> Form {
    let spec = EmbeddingSpec::new(10, vec![9, 10], vec![pair_shift(10).expect("even")]);
    extend(&spin7(), &spec).expect("compatible lift")
}

/// The 8-forms in twelve dimensions, lifted from the duals of the first two
/// complex-coordinate 4-forms over the six ordered pairs.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PsiVariant {
    A,
    B,
}

pub fn psi12(variant: PsiVariant) -> Result<Form> {
    let source = match variant {
        PsiVariant::A => phi_a()?.hodge_star(),
        PsiVariant::B => phi_b()?.hodge_star(),
    };
    let spec = EmbeddingSpec::new(12, vec![11, 12], vec![pair_shift(12)?]);
    extend(&source, &spec)
}

// ---------------------------------------------------------------------------
// complex-coordinate expansion over Gaussian integers

/// A form with Gaussian-integer coefficients, used internally to expand
/// complex frame expressions exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
struct CxForm {
    dim: u8,
    deg: u8,
    comps: BTreeMap<IndexTuple, (i64, i64)>, // (re, im)
}

impl CxForm {
    fn zero(dim: u8, deg: u8) -> Self {
        CxForm {
            dim,
            deg,
            comps: BTreeMap::new(),
        }
    }

    fn basis(dim: u8, index: Index, re: i64, im: i64) -> Self {
        let mut f = CxForm::zero(dim, 1);
        f.accumulate(&[index], (re, im));
        f
    }

    fn accumulate(&mut self, indices: &[Index], (re, im): (i64, i64)) {
        if re == 0 && im == 0 {
            return;
        }
        let Some((t, sign)) = normalize_component(indices, 1i64) else {
            return;
        };
        match self.comps.entry(t) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert((sign * re, sign * im));
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                e.get_mut().0 += sign * re;
                e.get_mut().1 += sign * im;
                if *e.get() == (0, 0) {
                    e.remove();
                }
            }
        }
    }

    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (t, &(re, im)) in &other.comps {
            out.accumulate(t.indices(), (re, im));
        }
        out
    }

    fn wedge(&self, other: &Self) -> Self {
        let mut out = CxForm::zero(self.dim, self.deg + other.deg);
        for (s, &(ar, ai)) in &self.comps {
            for (t, &(br, bi)) in &other.comps {
                if s.mask() & t.mask() != 0 {
                    continue;
                }
                let mut idx = Vec::with_capacity((self.deg + other.deg) as usize);
                idx.extend_from_slice(s.indices());
                idx.extend_from_slice(t.indices());
                out.accumulate(&idx, (ar * br - ai * bi, ar * bi + ai * br));
            }
        }
        out
    }

    /// Multiplies every coefficient by the Gaussian integer `re + i·im`.
    fn scale(&self, re: i64, im: i64) -> Self {
        let mut out = CxForm::zero(self.dim, self.deg);
        for (t, &(ar, ai)) in &self.comps {
            let v = (ar * re - ai * im, ar * im + ai * re);
            if v != (0, 0) {
                out.comps.insert(t.clone(), v);
            }
        }
        out
    }

    fn hodge_star(&self) -> Self {
        let mut out = CxForm::zero(self.dim, self.dim - self.deg);
        for (t, &(re, im)) in &self.comps {
            let mask = t.mask();
            let complement: Vec<Index> = (1..=self.dim)
                .filter(|&i| mask & (1 << (i - 1)) == 0)
                .collect();
            let mut inversions = 0usize;
            for &a in t.indices() {
                inversions += complement.iter().filter(|&&b| b < a).count();
            }
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            out.accumulate(&complement, (sign * re, sign * im));
        }
        out
    }

    fn real_part(&self) -> Form {
        let mut f = Form::zero(self.dim, self.deg).expect("valid shape");
        for (t, &(re, _)) in &self.comps {
            if re != 0 {
                f.accumulate(t.indices(), re).expect("valid component");
            }
        }
        f
    }

    fn imag_part(&self) -> Form {
        let mut f = Form::zero(self.dim, self.deg).expect("valid shape");
        for (t, &(_, im)) in &self.comps {
            if im != 0 {
                f.accumulate(t.indices(), im).expect("valid component");
            }
        }
        f
    }
}

/// Frame vector of plane `j`: `z_j = e_{2j-1} + i·e_{2j}`.
fn z(dim: u8, j: u8) -> CxForm {
    CxForm::basis(dim, 2 * j - 1, 1, 0).add(&CxForm::basis(dim, 2 * j, 0, 1))
}

/// Conjugate frame vector `z̄_j = e_{2j-1} - i·e_{2j}`.
fn zbar(dim: u8, j: u8) -> CxForm {
    CxForm::basis(dim, 2 * j - 1, 1, 0).add(&CxForm::basis(dim, 2 * j, 0, -1))
}

/// Result of a complex expansion: the special form plus the integer content
/// removed by normalization.
#[derive(Clone, Debug)]
pub struct ComplexExpansion {
    pub form: Form,
    pub removed_content: i64,
}

fn normalize_special(f: Form) -> Result<ComplexExpansion> {
    if f.is_zero() {
        return Err(Error::Normalization("expansion vanished".into()));
    }
    let content = f
        .components()
        .map(|(_, c)| c.abs())
        .fold(0i64, |a, b| num_integer::Integer::gcd(&a, &b));
    let scaled = Form::from_components(
        f.dim(),
        f.degree(),
        f.components().map(|(t, c)| (t.indices().to_vec(), c / content)),
    )?;
    if !scaled.is_special() {
        return Err(Error::Normalization(
            "coefficients are not uniform in magnitude".into(),
        ));
    }
    Ok(ComplexExpansion {
        form: scaled,
        removed_content: content,
    })
}

/// The four invariant complex-coordinate patterns in ten dimensions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum InvariantPattern {
    /// Sum over triples of coordinate planes.
    A,
    /// Cyclic sum with the mixed plane terms, plus the conjugate.
    B,
    /// Real part of the conjugate-product expression.
    C,
    /// Imaginary part of the conjugate-product expression.
    D,
}

/// Expands one of the invariant patterns into a special 4-form on R^10.
///
/// The frame pins `z_j ↔ e_{2j-1} + i·e_{2j}`; patterns A, C and D carry the
/// fixed unit phase `-i`, which orients the family so that the exact
/// spectra of the members come out right and `Φ^A + Φ^C` is the dual of the
/// ten dimensional 6-form. Pattern B is not reachable by any plane-wise
/// frame expansion (every such expansion has the wrong support shape); it is
/// pinned instead as the unique special weight-60 form annihilated by the
/// stabilizer algebra of the 6-form, see [`phi_b`].
pub fn complex_expand(pattern: InvariantPattern) -> Result<ComplexExpansion> {
    let d = 10u8;
    match pattern {
        InvariantPattern::A => {
            let mut w = CxForm::zero(d, 6);
            for i in 1..=5u8 {
                for j in (i + 1)..=5 {
                    for k in (j + 1)..=5 {
                        let term = z(d, i)
                            .wedge(&zbar(d, i))
                            .wedge(&z(d, j))
                            .wedge(&zbar(d, j))
                            .wedge(&z(d, k))
                            .wedge(&zbar(d, k));
                        w = w.add(&term);
                    }
                }
            }
            // phase -i: the raw expansion is purely imaginary
            let v = w.hodge_star().scale(0, -1);
            let im = v.imag_part();
            if !im.is_zero() {
                return Err(Error::Normalization("pattern A is not real".into()));
            }
            normalize_special(v.real_part())
        }
        InvariantPattern::B => Ok(ComplexExpansion {
            form: phi_b_data(),
            removed_content: 1,
        }),
        InvariantPattern::C | InvariantPattern::D => {
            let mut zsum = CxForm::zero(d, 1);
            for j in 1..=5 {
                zsum = zsum.add(&z(d, j));
            }
            let mut w = zbar(d, 1);
            for j in 2..=5 {
                w = w.wedge(&zbar(d, j));
            }
            w = w.wedge(&zsum);
            // phase -i on the joint expression before the real/imaginary
            // split
            let g = w.hodge_star().scale(0, -1);
            let part = match pattern {
                InvariantPattern::C => g.real_part(),
                InvariantPattern::D => g.imag_part(),
                _ => unreachable!(),
            };
            normalize_special(part)
        }
    }
}

/// Component table of the second invariant 4-form: the unique (up to sign)
/// special weight-60 4-form in ten dimensions annihilated by the
/// 16-dimensional stabilizer algebra of the 6-form, oriented by its
/// spectrum on 2-forms.
fn phi_b_data() -> Form {
    form_from(
        10,
        4,
        &[
            (1, &[1, 2, 3, 6]),
            (1, &[1, 2, 3, 8]),
            (1, &[1, 2, 3, 10]),
            (-1, &[1, 2, 4, 5]),
            (-1, &[1, 2, 4, 7]),
            (-1, &[1, 2, 4, 9]),
            (1, &[1, 2, 5, 8]),
            (1, &[1, 2, 5, 10]),
            (-1, &[1, 2, 6, 7]),
            (-1, &[1, 2, 6, 9]),
            (1, &[1, 2, 7, 10]),
            (-1, &[1, 2, 8, 9]),
            (1, &[1, 3, 4, 6]),
            (1, &[1, 3, 4, 8]),
            (1, &[1, 3, 4, 10]),
            (1, &[1, 4, 5, 6]),
            (1, &[1, 4, 7, 8]),
            (1, &[1, 4, 9, 10]),
            (1, &[1, 5, 6, 8]),
            (1, &[1, 5, 6, 10]),
            (1, &[1, 6, 7, 8]),
            (1, &[1, 6, 9, 10]),
            (1, &[1, 7, 8, 10]),
            (1, &[1, 8, 9, 10]),
            (-1, &[2, 3, 4, 5]),
            (-1, &[2, 3, 4, 7]),
            (-1, &[2, 3, 4, 9]),
            (-1, &[2, 3, 5, 6]),
            (-1, &[2, 3, 7, 8]),
            (-1, &[2, 3, 9, 10]),
            (-1, &[2, 5, 6, 7]),
            (-1, &[2, 5, 6, 9]),
            (-1, &[2, 5, 7, 8]),
            (-1, &[2, 5, 9, 10]),
            (-1, &[2, 7, 8, 9]),
            (-1, &[2, 7, 9, 10]),
            (1, &[3, 4, 5, 8]),
            (1, &[3, 4, 5, 10]),
            (-1, &[3, 4, 6, 7]),
            (-1, &[3, 4, 6, 9]),
            (1, &[3, 4, 7, 10]),
            (-1, &[3, 4, 8, 9]),
            (1, &[3, 5, 6, 8]),
            (1, &[3, 5, 6, 10]),
            (1, &[3, 6, 7, 8]),
            (1, &[3, 6, 9, 10]),
            (1, &[3, 7, 8, 10]),
            (1, &[3, 8, 9, 10]),
            (-1, &[4, 5, 6, 7]),
            (-1, &[4, 5, 6, 9]),
            (-1, &[4, 5, 7, 8]),
            (-1, &[4, 5, 9, 10]),
            (-1, &[4, 7, 8, 9]),
            (-1, &[4, 7, 9, 10]),
            (1, &[5, 6, 7, 10]),
            (-1, &[5, 6, 8, 9]),
            (1, &[5, 7, 8, 10]),
            (1, &[5, 8, 9, 10]),
            (-1, &[6, 7, 8, 9]),
            (-1, &[6, 7, 9, 10]),
        ],
    )
}

/// First complex-coordinate 4-form (10 components).
pub fn phi_a() -> Result<Form> {
    Ok(complex_expand(InvariantPattern::A)?.form)
}

/// Second complex-coordinate 4-form (60 components).
pub fn phi_b() -> Result<Form> {
    Ok(complex_expand(InvariantPattern::B)?.form)
}

/// Third complex-coordinate 4-form (40 components).
pub fn phi_c() -> Result<Form> {
    Ok(complex_expand(InvariantPattern::C)?.form)
}

/// Fourth complex-coordinate 4-form (40 components).
pub fn phi_d() -> Result<Form> {
    Ok(complex_expand(InvariantPattern::D)?.form)
}

/// The 6-component invariant 4-form on R^8, the eight dimensional analogue
/// of pattern A (pairs of coordinate planes). Phase -1, matching the
/// orientation of the ten dimensional family: its cyclic lift equals the
/// dual of pattern A.
pub fn su4u1_8d() -> Result<Form> {
    let d = 8u8;
    let mut w = CxForm::zero(d, 4);
    for i in 1..=4u8 {
        for j in (i + 1)..=4 {
            let term = z(d, i)
                .wedge(&zbar(d, i))
                .wedge(&z(d, j))
                .wedge(&zbar(d, j));
            w = w.add(&term);
        }
    }
    // (-2i)² per plane pair: the raw expansion is real
    let v = w.hodge_star().scale(-1, 0);
    if !v.imag_part().is_zero() {
        return Err(Error::Normalization("plane-pair expansion is not real".into()));
    }
    Ok(normalize_special(v.real_part())?.form)
}

/// Catalog lookup by name. Parametric entries use `epsilon-<d>`,
/// `kahler-<n>` and `psi12-A`/`psi12-B`.
pub fn catalog(name: &str) -> Result<Form> {
    if let Some(rest) = name.strip_prefix("epsilon-") {
        let d: u8 = rest
            .parse()
            .map_err(|_| Error::Catalog(name.to_string()))?;
        return epsilon(d);
    }
    if let Some(rest) = name.strip_prefix("kahler-") {
        let n: u8 = rest
            .parse()
            .map_err(|_| Error::Catalog(name.to_string()))?;
        return kahler(n);
    }
    match name {
        "g2" => Ok(g2()),
        "spin7" => Ok(spin7()),
        "t17" => Ok(t17()),
        "omega10" => Ok(omega10()),
        "su4u1-8d" => su4u1_8d(),
        "phiA" => phi_a(),
        "phiB" => phi_b(),
        "phiC" => phi_c(),
        "phiD" => phi_d(),
        "psi12-A" => psi12(PsiVariant::A),
        "psi12-B" => psi12(PsiVariant::B),
        _ => Err(Error::Catalog(name.to_string())),
    }
}

/// Fixed catalog names (the parametric families listed at useful sizes).
pub fn catalog_names() -> Vec<&'static str> {
    vec![
        "epsilon-2",
        "epsilon-4",
        "kahler-2",
        "kahler-3",
        "g2",
        "spin7",
        "su4u1-8d",
        "omega10",
        "t17",
        "phiA",
        "phiB",
        "phiC",
        "phiD",
        "psi12-A",
        "psi12-B",
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::same_orbit;

    #[test]
    fn trivial_extension_appends_a_volume_factor() {
        // no generators: the d-form in d dimensions extends to the D-form
        let eps2 = epsilon(2).unwrap();
        let spec = EmbeddingSpec::new(4, vec![3, 4], vec![]);
        let lifted = extend(&eps2, &spec).unwrap();
        assert_eq!(lifted, epsilon(4).unwrap());
    }

    #[test]
    fn kahler_from_two_dim_volume() {
        // ω on R^6 from ε on R^2 under the pair shift, no slots
        let eps2 = epsilon(2).unwrap();
        let spec = EmbeddingSpec::new(6, vec![], vec![pair_shift(6).unwrap()]);
        let w = extend(&eps2, &spec).unwrap();
        assert_eq!(w, kahler(3).unwrap());
    }

    #[test]
    fn g2_from_two_dim_volume() {
        let eps2 = epsilon(2).unwrap();
        let seven_cycle = SignedPermutation::from_cycles(7, "(1 2 5 4 6 7 3)").unwrap();
        let spec = EmbeddingSpec::new(7, vec![7], vec![seven_cycle]);
        let psi = extend(&eps2, &spec).unwrap();
        assert_eq!(psi, g2());
    }

    #[test]
    fn g2_from_kahler_three_ways() {
        // one seven-cycle and two order-3 choices; the 3-cycle pairs fixing
        // 1, 3 or 5 work (they are conjugate under the order-21 group)
        let w = kahler(3).unwrap();
        for gen in [
            "(1 2 5 4 6 7 3)",
            "(2 6 5)(3 4 7)",
            "(1 4 2)(5 6 7)",
        ] {
            let g = SignedPermutation::from_cycles(7, gen).unwrap();
            let spec = EmbeddingSpec::new(7, vec![7], vec![g]);
            let psi = extend(&w, &spec).unwrap();
            assert_eq!(psi, g2(), "generator {gen}");
        }
    }

    #[test]
    fn g2_lift_needs_a_generator_fixing_an_odd_index() {
        // a 3-cycle pair fixing index 2 closes on only six of the seven
        // supports: the orbit of the pair supports through 7 never reaches
        // the support {1,3,6}
        let w = kahler(3).unwrap();
        let g = SignedPermutation::from_cycles(7, "(1 3 6)(4 7 5)").unwrap();
        let spec = EmbeddingSpec::new(7, vec![7], vec![g]);
        let partial = extend(&w, &spec).unwrap();
        assert_eq!(partial.weight(), 6);
        assert_eq!(partial.component(&[1, 3, 6]), 0);
    }

    #[test]
    fn spin7_from_g2() {
        let psi = g2();
        let six = SignedPermutation::from_cycles(8, "(1 2)(3 6 7 4 5 8)").unwrap();
        let spec = EmbeddingSpec::new(8, vec![8], vec![six]);
        let phi = extend(&psi, &spec).unwrap();
        assert!(same_orbit(&phi, &spin7()).unwrap());

        let triple: Vec<SignedPermutation> = [
            "(1 2)(3 4)(5 6)(7 8)",
            "(1 3)(2 4)(5 7)(6 8)",
            "(1 5)(2 6)(3 7)(4 8)",
        ]
        .iter()
        .map(|s| SignedPermutation::from_cycles(8, s).unwrap())
        .collect();
        let spec = EmbeddingSpec::new(8, vec![8], triple);
        let phi2 = extend(&psi, &spec).unwrap();
        assert!(same_orbit(&phi2, &spin7()).unwrap());
    }

    #[test]
    fn spin7_lift_identities() {
        // φ_{ijk8} = ψ_{ijk} and φ restricted to 1..7 equals ⋆ψ
        let psi = g2();
        let six = SignedPermutation::from_cycles(8, "(1 2)(3 6 7 4 5 8)").unwrap();
        let spec = EmbeddingSpec::new(8, vec![8], vec![six]);
        let phi = extend(&psi, &spec).unwrap();
        for (t, c) in psi.components() {
            let mut idx = t.indices().to_vec();
            idx.push(8);
            assert_eq!(phi.component(&idx), *c);
        }
        let restricted = phi.restrict(&[1, 2, 3, 4, 5, 6, 7]).unwrap();
        assert_eq!(restricted, psi.hodge_star());
    }

    #[test]
    fn restrict_back_recovery() {
        let eps2 = epsilon(2).unwrap();
        let seven_cycle = SignedPermutation::from_cycles(7, "(1 2 5 4 6 7 3)").unwrap();
        let spec = EmbeddingSpec::new(7, vec![7], vec![seven_cycle]);
        let psi = extend(&eps2, &spec).unwrap();
        // restriction to the source indices plus the slots recovers ε
        let recovered = psi.restrict(&[1, 2, 7]).unwrap();
        for (t, c) in eps2.components() {
            let mut idx = t.indices().to_vec();
            idx.push(3); // slot 7 relabelled
            assert_eq!(recovered.component(&idx), *c);
        }
    }

    #[test]
    fn omega10_shape() {
        let omega = omega10();
        assert_eq!(omega.dim(), 10);
        assert_eq!(omega.degree(), 6);
        assert_eq!(omega.weight(), 50);
        assert!(omega.is_special());
        // sample signs
        assert_eq!(omega.component(&[1, 2, 3, 4, 5, 6]), 1);
        assert_eq!(omega.component(&[1, 2, 3, 5, 8, 10]), -1);
        // contraction on the slot pair recovers the Spin(7) form exactly
        assert_eq!(omega.contract_plane(9, 10).unwrap(), spin7());
    }

    #[test]
    fn omega10_restriction_and_diagonal_symmetry() {
        let omega = omega10();
        // only the four supports built from three full pairs survive inside
        // the first eight indices
        let restricted = omega.restrict(&[1, 2, 3, 4, 5, 6, 7, 8]).unwrap();
        assert_eq!(restricted.weight(), 4);
        for idx in [
            [1u8, 2, 3, 4, 5, 6],
            [1, 2, 3, 4, 7, 8],
            [1, 2, 5, 6, 7, 8],
            [3, 4, 5, 6, 7, 8],
        ] {
            assert_eq!(restricted.component(&idx), 1);
        }
        // the all-minus diagonal fixes any even-degree form
        let all_minus =
            SignedPermutation::new((1..=10).collect(), &[-1; 10]).unwrap();
        assert_eq!(
            crate::symmetry::classify_element(&all_minus, &omega).unwrap(),
            crate::symmetry::Classification::Symmetry
        );
    }

    #[test]
    fn omega10_z5_and_reflection() {
        let omega = omega10();
        let shift = pair_shift(10).unwrap();
        assert_eq!(shift.act(&omega).unwrap(), omega);
        let tau = SignedPermutation::from_cycles(10, "(1 2)(10 3)(9 4)(8 5)(7 6)").unwrap();
        assert_eq!(tau.act(&omega).unwrap(), omega.negate());
    }

    #[test]
    fn pair_shift_squares_to_reflection_product() {
        let sigma = pair_shift(8).unwrap();
        let rho1 = SignedPermutation::from_cycles(8, "(1 8)(2 7)(3 6)(4 5)").unwrap();
        let rho2 = SignedPermutation::from_cycles(8, "(1 4)(2 3)(5 8)(6 7)").unwrap();
        assert_eq!(sigma.compose(&sigma), rho1.compose(&rho2));
    }

    #[test]
    fn complex_family_weights() {
        assert_eq!(phi_a().unwrap().weight(), 10);
        assert_eq!(phi_b().unwrap().weight(), 60);
        assert_eq!(phi_c().unwrap().weight(), 40);
        assert_eq!(phi_d().unwrap().weight(), 40);
        assert_eq!(su4u1_8d().unwrap().weight(), 6);
        for f in [phi_a(), phi_b(), phi_c(), phi_d(), su4u1_8d()] {
            assert!(f.unwrap().is_special());
        }
    }

    #[test]
    fn generator_only_census_spans_the_full_group() {
        use crate::symmetry::{closure, orthogonal_census};
        // the plane-pair 4-form family head has a stabilizer too large to
        // store; the census reports the exact count plus generators
        let census = orthogonal_census(&phi_a().unwrap()).unwrap();
        assert_eq!(census.symmetry_order(), 245760);
        assert_eq!(census.antisymmetry_count(), 0);
        assert!(!census.materialized());
        assert!(census.symmetries.is_empty());
        let group = closure(&census.generators, 300_000).unwrap();
        assert_eq!(group.len(), census.symmetry_order());
    }

    #[test]
    fn dual_of_omega_is_a_plus_c() {
        // with the orientation fixed by the family's spectra, the dual of
        // the 6-form is +A +C (the all-minus variant belongs to the
        // opposite orientation of the component table)
        let lhs = omega10().hodge_star();
        let rhs = phi_a().unwrap().add(&phi_c().unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn omega_a_from_eight_dim_lift() {
        // lifting the 8-dimensional plane-pair form yields the dual of
        // pattern A
        let t = su4u1_8d().unwrap();
        let spec = EmbeddingSpec::new(10, vec![9, 10], vec![pair_shift(10).unwrap()]);
        let omega_a = extend(&t, &spec).unwrap();
        assert_eq!(omega_a, phi_a().unwrap().hodge_star());
        // contraction with each exceptional plane recovers the source
        for k in 0..5u8 {
            let c = omega_a.contract_plane(2 * k + 1, 2 * k + 2).unwrap();
            assert!(same_orbit(&c, &t).unwrap());
        }
    }

    #[test]
    fn psi12_constructions_succeed() {
        let a = psi12(PsiVariant::A).unwrap();
        assert_eq!(a.dim(), 12);
        assert_eq!(a.degree(), 8);
        assert_eq!(a.weight(), 15);
        let b = psi12(PsiVariant::B).unwrap();
        assert_eq!(b.weight(), 120);
        // contracting on the slot plane recovers the source 6-form
        assert_eq!(
            a.contract_plane(11, 12).unwrap(),
            phi_a().unwrap().hodge_star()
        );
        assert_eq!(
            b.contract_plane(11, 12).unwrap(),
            phi_b().unwrap().hodge_star()
        );
    }

    #[test]
    fn catalog_dispatch() {
        for name in catalog_names() {
            let f = catalog(name).unwrap();
            assert!(f.weight() > 0, "{name}");
        }
        assert!(catalog("nope").is_err());
        assert_eq!(catalog("epsilon-4").unwrap().weight(), 1);
        assert_eq!(catalog("kahler-3").unwrap(), kahler(3).unwrap());
    }
}

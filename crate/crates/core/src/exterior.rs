//! Exact exterior algebra over integer coefficients.
//!
//! A form is stored as a map from strictly increasing index tuples to nonzero
//! coefficients; the antisymmetry convention is absorbed into the coefficient
//! when components are written with permuted indices. Indices are 1-based.
//!
//! The Hodge star uses the convention `ε_{1…d} = +1`: the dual of a sorted
//! basis monomial is the sorted complement times the parity of the
//! concatenated index sequence.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::scalar::Scalar;
use crate::Result;

/// 1-based basis index. Dimensions in this crate stay below 16.
pub type Index = u8;

/// A strictly increasing tuple of indices in `1..=d`, the key of one stored
/// component.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IndexTuple(Vec<Index>);

impl IndexTuple {
    /// Builds a tuple, checking strict monotonicity and the 1-based lower
    /// bound. The upper bound against the owning form's dimension is checked
    /// at insertion time.
    pub fn new(indices: Vec<Index>) -> Result<Self> {
        for w in indices.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::Degree(format!(
                    "indices not strictly increasing: {indices:?}"
                )));
            }
        }
        if indices.first().is_some_and(|&i| i == 0) {
            return Err(Error::IndexRange { index: 0, dim: 0 });
        }
        Ok(IndexTuple(indices))
    }

    pub(crate) fn from_sorted_unchecked(indices: Vec<Index>) -> Self {
        IndexTuple(indices)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn indices(&self) -> &[Index] {
        &self.0
    }

    pub fn contains(&self, i: Index) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    /// Bitmask with bit `i-1` set for every index `i`.
    pub fn mask(&self) -> u16 {
        self.0.iter().fold(0u16, |m, &i| m | (1 << (i - 1)))
    }

    pub fn max_index(&self) -> Index {
        self.0.last().copied().unwrap_or(0)
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "({})", strs.join(","))
    }
}

/// Sorts `indices` in place, returning the sign of the sorting permutation,
/// or `None` when an index repeats (the component is zero).
pub fn sort_with_sign(indices: &mut [Index]) -> Option<i64> {
    let mut sign = 1i64;
    for i in 1..indices.len() {
        let mut j = i;
        while j > 0 && indices[j - 1] > indices[j] {
            indices.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && indices[j - 1] == indices[j] {
            return None;
        }
    }
    Some(sign)
}

/// Canonicalizes a component written with distinct but unordered indices:
/// returns the sorted tuple and the coefficient multiplied by the sign of the
/// sorting permutation. `None` signals a repeated index, which the caller
/// treats as coefficient zero.
pub fn normalize_component<C: Scalar>(indices: &[Index], coeff: C) -> Option<(IndexTuple, C)> {
    let mut v = indices.to_vec();
    let sign = sort_with_sign(&mut v)?;
    let c = if sign < 0 { -coeff } else { coeff };
    Some((IndexTuple::from_sorted_unchecked(v), c))
}

/// A degree-p alternating tensor on `R^d` with exact integer components.
///
/// Invariants: no stored coefficient is zero, every key is strictly
/// increasing with max index ≤ `dim` and length = `degree`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpecialForm<C: Scalar = i64> {
    dim: u8,
    degree: u8,
    comps: BTreeMap<IndexTuple, C>,
}

impl<C: Scalar> SpecialForm<C> {
    /// The zero form of the given dimension and degree.
    pub fn zero(dim: u8, degree: u8) -> Result<Self> {
        if dim == 0 || dim > 16 {
            return Err(Error::Dimension(format!(
                "dimension must be in 1..=16, got {dim}"
            )));
        }
        if degree > dim {
            return Err(Error::Degree(format!(
                "degree {degree} exceeds dimension {dim}"
            )));
        }
        Ok(SpecialForm {
            dim,
            degree,
            comps: BTreeMap::new(),
        })
    }

    /// The degree-0 form with unit coefficient.
    pub fn unit(dim: u8) -> Result<Self> {
        let mut f = Self::zero(dim, 0)?;
        f.comps.insert(IndexTuple(vec![]), C::one());
        Ok(f)
    }

    /// Builds a form from (possibly unordered, possibly repeated-support)
    /// components; coefficients on the same support accumulate.
    pub fn from_components<I>(dim: u8, degree: u8, comps: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<Index>, C)>,
    {
        let mut f = Self::zero(dim, degree)?;
        for (idx, c) in comps {
            f.accumulate(&idx, c)?;
        }
        Ok(f)
    }

    /// Adds `coeff` to the component on `indices` (any order); a repeated
    /// index contributes nothing.
    pub fn accumulate(&mut self, indices: &[Index], coeff: C) -> Result<()> {
        if indices.len() != self.degree as usize {
            return Err(Error::Degree(format!(
                "component has {} indices, form degree is {}",
                indices.len(),
                self.degree
            )));
        }
        for &i in indices {
            if i == 0 || i > self.dim {
                return Err(Error::IndexRange {
                    index: i,
                    dim: self.dim,
                });
            }
        }
        if coeff.is_zero() {
            return Ok(());
        }
        let Some((t, c)) = normalize_component(indices, coeff) else {
            return Ok(());
        };
        match self.comps.entry(t) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> u8 {
        self.dim
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    /// Number of stored components (each unordered support counted once).
    pub fn weight(&self) -> usize {
        self.comps.len()
    }

    /// True when every coefficient is +1 or -1.
    pub fn is_special(&self) -> bool {
        self.comps.values().all(|c| c.abs().is_one())
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    /// Component on a sorted tuple; zero when absent.
    pub fn coeff(&self, t: &IndexTuple) -> C {
        self.comps.get(t).cloned().unwrap_or_else(C::zero)
    }

    /// Component with indices in any order, sign included; zero on repeats.
    pub fn component(&self, indices: &[Index]) -> C {
        match normalize_component(indices, C::one()) {
            Some((t, sign)) => sign * self.coeff(&t),
            None => C::zero(),
        }
    }

    pub fn components(&self) -> impl Iterator<Item = (&IndexTuple, &C)> {
        self.comps.iter()
    }

    pub fn supports(&self) -> impl Iterator<Item = &IndexTuple> {
        self.comps.keys()
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::Dimension(format!(
                "dimensions {} and {} differ",
                self.dim, other.dim
            )));
        }
        if self.degree != other.degree {
            return Err(Error::Degree(format!(
                "degrees {} and {} differ",
                self.degree, other.degree
            )));
        }
        Ok(())
    }

    /// Componentwise sum.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (t, c) in &other.comps {
            out.accumulate(t.indices(), c.clone())?;
        }
        Ok(out)
    }

    pub fn negate(&self) -> Self {
        self.scale(&(-C::one()))
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return SpecialForm {
                dim: self.dim,
                degree: self.degree,
                comps: BTreeMap::new(),
            };
        }
        SpecialForm {
            dim: self.dim,
            degree: self.degree,
            comps: self
                .comps
                .iter()
                .map(|(t, v)| (t.clone(), v.clone() * c.clone()))
                .collect(),
        }
    }

    /// Alternating product. Graded anticommutative and bilinear; degrees add.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::Dimension(format!(
                "dimensions {} and {} differ",
                self.dim, other.dim
            )));
        }
        let Some(deg) = self.degree.checked_add(other.degree) else {
            return Err(Error::Degree("degree overflow".into()));
        };
        if deg > self.dim {
            return Err(Error::Degree(format!(
                "wedge degree {deg} exceeds dimension {}",
                self.dim
            )));
        }
        let mut out = Self::zero(self.dim, deg)?;
        for (s, a) in &self.comps {
            for (t, b) in &other.comps {
                if s.mask() & t.mask() != 0 {
                    continue;
                }
                let mut idx = Vec::with_capacity(deg as usize);
                idx.extend_from_slice(s.indices());
                idx.extend_from_slice(t.indices());
                out.accumulate(&idx, a.clone() * b.clone())?;
            }
        }
        Ok(out)
    }

    /// Hodge dual with `ε_{1…d} = +1`: each sorted monomial maps to its
    /// sorted complement with the parity of the concatenated sequence.
    pub fn hodge_star(&self) -> Self {
        let comp_deg = self.dim - self.degree;
        let mut out = SpecialForm {
            dim: self.dim,
            degree: comp_deg,
            comps: BTreeMap::new(),
        };
        for (t, c) in &self.comps {
            let mask = t.mask();
            let complement: Vec<Index> =
                (1..=self.dim).filter(|&i| mask & (1 << (i - 1)) == 0).collect();
            // parity of (t, complement) as a permutation of (1..=d): count
            // inversions between the two sorted halves.
            let mut inversions = 0usize;
            for &a in t.indices() {
                inversions += complement.iter().filter(|&&b| b < a).count();
            }
            let sign = if inversions % 2 == 0 {
                C::one()
            } else {
                -C::one()
            };
            out.comps
                .insert(IndexTuple::from_sorted_unchecked(complement), sign * c.clone());
        }
        out
    }

    /// Contraction with the oriented 2-plane spanned by `e_i ∧ e_j`: returns
    /// `f(e_i, e_j, ·, …, ·)` restricted to the orthogonal complement, with
    /// the surviving `d-2` indices relabelled order-preservingly to
    /// `1..=d-2`.
    pub fn contract_plane(&self, i: Index, j: Index) -> Result<Self> {
        if i == j {
            return Err(Error::DegeneratePlane(i));
        }
        for &x in &[i, j] {
            if x == 0 || x > self.dim {
                return Err(Error::IndexRange {
                    index: x,
                    dim: self.dim,
                });
            }
        }
        if self.degree < 2 {
            return Err(Error::Degree(format!(
                "cannot contract a degree-{} form with a plane",
                self.degree
            )));
        }
        // order-preserving relabelling of 1..=d minus {i,j} onto 1..=d-2
        let mut relabel = [0u8; 17];
        let mut next = 1u8;
        for x in 1..=self.dim {
            if x != i && x != j {
                relabel[x as usize] = next;
                next += 1;
            }
        }
        let mut out = Self::zero(self.dim - 2, self.degree - 2)?;
        for (t, c) in &self.comps {
            if !t.contains(i) || !t.contains(j) {
                continue;
            }
            // sign of reordering (sorted t) to (i, j, rest-sorted)
            let pos_i = t.indices().iter().position(|&x| x == i).unwrap();
            let mut rest: Vec<Index> = t.indices().iter().copied().filter(|&x| x != i).collect();
            let pos_j = rest.iter().position(|&x| x == j).unwrap();
            rest.retain(|&x| x != j);
            let swaps = pos_i + pos_j;
            let relabelled: Vec<Index> = rest.iter().map(|&x| relabel[x as usize]).collect();
            let value = if swaps % 2 == 0 {
                c.clone()
            } else {
                -c.clone()
            };
            out.accumulate(&relabelled, value)?;
        }
        Ok(out)
    }

    /// Keeps exactly the components whose indices all lie in `subset`
    /// (strictly increasing), relabelled to `1..=|subset|`.
    pub fn restrict(&self, subset: &[Index]) -> Result<Self> {
        for w in subset.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::Degree(format!(
                    "subset not strictly increasing: {subset:?}"
                )));
            }
        }
        for &x in subset {
            if x == 0 || x > self.dim {
                return Err(Error::IndexRange {
                    index: x,
                    dim: self.dim,
                });
            }
        }
        if (subset.len() as u8) < self.degree {
            return Err(Error::Degree(format!(
                "cannot restrict a degree-{} form to {} indices",
                self.degree,
                subset.len()
            )));
        }
        let mut relabel = [0u8; 17];
        for (k, &x) in subset.iter().enumerate() {
            relabel[x as usize] = (k + 1) as u8;
        }
        let keep: u16 = subset.iter().fold(0, |m, &x| m | (1 << (x - 1)));
        let mut out = Self::zero(subset.len() as u8, self.degree)?;
        for (t, c) in &self.comps {
            if t.mask() & !keep != 0 {
                continue;
            }
            let relabelled: Vec<Index> = t.indices().iter().map(|&x| relabel[x as usize]).collect();
            out.accumulate(&relabelled, c.clone())?;
        }
        Ok(out)
    }

    /// Renders the bit-exact text format: `dim`/`deg` header lines, then one
    /// `<sign><coeff> <i1> … <ip>` line per component in sorted tuple order.
    pub fn to_text(&self) -> String {
        let mut s = format!("dim {}\ndeg {}\n", self.dim, self.degree);
        for (t, c) in &self.comps {
            let sign = if c.is_negative() { "" } else { "+" };
            s.push_str(&format!("{sign}{c}"));
            for &i in t.indices() {
                s.push_str(&format!(" {i}"));
            }
            s.push('\n');
        }
        s
    }

    /// Parses the text format. Blank lines and `#` comments are ignored;
    /// component lines may list indices in any order.
    pub fn parse_text(input: &str) -> Result<Self> {
        let mut dim: Option<u8> = None;
        let mut degree: Option<u8> = None;
        let mut form: Option<Self> = None;
        for (lineno, raw) in input.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut toks = line.split_whitespace();
            let head = toks.next().unwrap();
            let fail = |msg: &str| Error::Parse {
                line: lineno + 1,
                msg: msg.to_string(),
            };
            match head {
                "dim" => {
                    let v = toks
                        .next()
                        .and_then(|t| t.parse::<u8>().ok())
                        .ok_or_else(|| fail("expected `dim <d>`"))?;
                    dim = Some(v);
                }
                "deg" => {
                    let v = toks
                        .next()
                        .and_then(|t| t.parse::<u8>().ok())
                        .ok_or_else(|| fail("expected `deg <p>`"))?;
                    degree = Some(v);
                }
                _ => {
                    let (Some(d), Some(p)) = (dim, degree) else {
                        return Err(fail("component line before dim/deg header"));
                    };
                    let f = match form.as_mut() {
                        Some(f) => f,
                        None => {
                            form = Some(Self::zero(d, p)?);
                            form.as_mut().unwrap()
                        }
                    };
                    let coeff: i64 = head
                        .parse()
                        .map_err(|_| fail("expected a signed integer coefficient"))?;
                    let mut idx = Vec::with_capacity(p as usize);
                    for t in toks {
                        idx.push(t.parse::<u8>().map_err(|_| fail("bad index"))?);
                    }
                    if idx.len() != p as usize {
                        return Err(fail("wrong number of indices"));
                    }
                    f.accumulate(&idx, C::from(coeff)).map_err(|e| Error::Parse {
                        line: lineno + 1,
                        msg: e.to_string(),
                    })?;
                }
            }
        }
        match (dim, degree) {
            (Some(d), Some(p)) => Ok(form.unwrap_or(Self::zero(d, p)?)),
            _ => Err(Error::Parse {
                line: 0,
                msg: "missing dim/deg header".into(),
            }),
        }
    }
}

impl<C: Scalar> fmt::Display for SpecialForm<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.comps.is_empty() {
            return write!(f, "0 (dim {}, deg {})", self.dim, self.degree);
        }
        let mut first = true;
        for (t, c) in &self.comps {
            if first {
                write!(f, "{c}·e{t}")?;
                first = false;
            } else if c.is_negative() {
                write!(f, " - {}·e{}", c.clone().abs(), t)?;
            } else {
                write!(f, " + {c}·e{t}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Form;

    fn form(dim: u8, deg: u8, comps: &[(i64, &[Index])]) -> Form {
        Form::from_components(
            dim,
            deg,
            comps.iter().map(|(c, idx)| (idx.to_vec(), *c)),
        )
        .unwrap()
    }

    fn kahler6() -> Form {
        form(6, 2, &[(1, &[1, 2]), (1, &[3, 4]), (1, &[5, 6])])
    }

    fn g2() -> Form {
        form(
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

    #[test]
    fn normalize_examples() {
        let (t, c) = normalize_component(&[1, 2, 7], 1i64).unwrap();
        assert_eq!((t.indices(), c), (&[1, 2, 7][..], 1));
        let (t, c) = normalize_component(&[2, 1, 7], 1i64).unwrap();
        assert_eq!((t.indices(), c), (&[1, 2, 7][..], -1));
        let (t, c) = normalize_component(&[7, 1, 2], 1i64).unwrap();
        assert_eq!((t.indices(), c), (&[1, 2, 7][..], 1));
        assert!(normalize_component(&[1, 1, 2], 1i64).is_none());
    }

    #[test]
    fn wedge_square_of_kahler() {
        let w = kahler6();
        let ww = w.wedge(&w).unwrap();
        let expected = form(
            6,
            4,
            &[(2, &[1, 2, 3, 4]), (2, &[1, 2, 5, 6]), (2, &[3, 4, 5, 6])],
        );
        assert_eq!(ww, expected);
        assert!(!ww.is_special());
    }

    #[test]
    fn wedge_with_unit_is_identity() {
        let w = kahler6();
        let unit = Form::unit(6).unwrap();
        assert_eq!(w.wedge(&unit).unwrap(), w);
        assert_eq!(unit.wedge(&w).unwrap(), w);
    }

    #[test]
    fn g2_wedge_dual_is_weight_times_volume() {
        let psi = g2();
        let vol = psi.wedge(&psi.hodge_star()).unwrap();
        let expected = form(7, 7, &[(7, &[1, 2, 3, 4, 5, 6, 7])]);
        assert_eq!(vol, expected);
    }

    #[test]
    fn star_of_volume_is_unit() {
        let eps = form(4, 4, &[(1, &[1, 2, 3, 4])]);
        let s = eps.hodge_star();
        assert_eq!(s.degree(), 0);
        assert_eq!(s.component(&[]), 1);
    }

    #[test]
    fn star_of_g2_matches_orbit_of_1234() {
        // orbit of ε_{1234} under powers of (1 2 5 4 6 7 3)
        let expected = form(
            7,
            4,
            &[
                (1, &[1, 2, 3, 4]),
                (1, &[1, 2, 5, 6]),
                (1, &[1, 3, 5, 7]),
                (-1, &[1, 4, 6, 7]),
                (-1, &[2, 3, 6, 7]),
                (-1, &[2, 4, 5, 7]),
                (1, &[3, 4, 5, 6]),
            ],
        );
        assert_eq!(g2().hodge_star(), expected);
    }

    #[test]
    fn double_star_sign() {
        let psi = g2();
        // p(d-p) = 3*4 even
        assert_eq!(psi.hodge_star().hodge_star(), psi);
        let w = kahler6();
        // p(d-p) = 2*4 even
        assert_eq!(w.hodge_star().hodge_star(), w);
        let single = form(3, 1, &[(1, &[2])]);
        // p(d-p) = 1*2 even
        assert_eq!(single.hodge_star().hodge_star(), single);
        let odd = form(2, 1, &[(1, &[1]), (-3, &[2])]);
        // p(d-p) = 1 odd
        assert_eq!(odd.hodge_star().hodge_star(), odd.negate());
    }

    #[test]
    fn contract_plane_antisymmetry_and_relabel() {
        let w = kahler6();
        let a = w.contract_plane(1, 2).unwrap();
        let b = w.contract_plane(2, 1).unwrap();
        assert_eq!(a.negate(), b);
        assert_eq!(a.dim(), 4);
        assert_eq!(a.degree(), 0);
        assert_eq!(a.component(&[]), 1);
    }

    #[test]
    fn restrict_identity_and_pair() {
        let w = kahler6();
        let all: Vec<Index> = (1..=6).collect();
        assert_eq!(w.restrict(&all).unwrap(), w);
        let pair = w.restrict(&[1, 2]).unwrap();
        assert_eq!(pair, form(2, 2, &[(1, &[1, 2])]));
        let empty = w.restrict(&[1, 3]).unwrap();
        assert!(empty.is_zero());
    }

    #[test]
    fn linear_ops() {
        let w = kahler6();
        assert!(w.add(&w.negate()).unwrap().is_zero());
        let scaled = form(2, 2, &[(1, &[1, 2])]).scale(&3);
        assert_eq!(scaled.component(&[1, 2]), 3);
        assert!(!scaled.is_special());
        assert!(w.is_special());
        assert_eq!(g2().weight(), 7);
    }

    #[test]
    fn text_round_trip() {
        let psi = g2();
        let text = psi.to_text();
        let parsed = Form::parse_text(&text).unwrap();
        assert_eq!(parsed, psi);
        assert_eq!(parsed.to_text(), text);

        let with_comments = "# a form\ndim 7\ndeg 3\n\n+1 1 2 7  # first\n-1 6 1 3\n";
        let f = Form::parse_text(with_comments).unwrap();
        assert_eq!(f.component(&[1, 2, 7]), 1);
        // (6,1,3) is an even rotation of (1,3,6)
        assert_eq!(f.component(&[1, 3, 6]), -1);
    }

    #[test]
    fn spin7_plane_contractions_have_weight_three() {
        // every index pair occurs in exactly three supports
        let phi = crate::construct::spin7();
        for i in 1..=8u8 {
            for j in (i + 1)..=8 {
                let c = phi.contract_plane(i, j).unwrap();
                assert_eq!(c.weight(), 3, "plane ({i},{j})");
                assert!(c.is_special());
            }
        }
        // the (1,2) contraction is the 2-form with the three standard pairs
        let w = phi.contract_plane(1, 2).unwrap();
        let expected = form(6, 2, &[(1, &[1, 2]), (1, &[3, 4]), (1, &[5, 6])]);
        assert_eq!(w, expected);
    }

    #[test]
    fn component_round_trip_signs() {
        let psi = g2();
        for (t, c) in psi.components() {
            let mut idx = t.indices().to_vec();
            idx.reverse();
            let parity = if (idx.len() * (idx.len() - 1) / 2) % 2 == 0 {
                1
            } else {
                -1
            };
            assert_eq!(psi.component(&idx), parity * c);
        }
    }
}

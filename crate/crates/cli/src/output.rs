//! Rendering helpers: deterministic text and JSON views of forms, censuses,
//! invariants and graphs. The `zero_ten` flag displays index 10 as `0` in
//! component subscripts; files always carry 1-based indices.

use std::collections::BTreeMap;

use serde::Serialize;

use specforms::invariants::{valence_profile, ClassificationEntry};
use specforms::symmetry::{
    commutator_subgroup, generating_set, OrthogonalCensus, PermutationCensus, Transitivity,
};
use specforms::Form;

pub fn index_label(i: u8, zero_ten: bool) -> String {
    if zero_ten && i == 10 {
        "0".into()
    } else {
        i.to_string()
    }
}

/// One component per line, `dim`/`deg` header; display only.
pub fn render_form(f: &Form, zero_ten: bool) -> String {
    let mut s = format!("dim {}\ndeg {}\n", f.dim(), f.degree());
    for (t, c) in f.components() {
        let sign = if *c < 0 { "" } else { "+" };
        s.push_str(&format!("{sign}{c} "));
        let labels: Vec<String> = t
            .indices()
            .iter()
            .map(|&i| index_label(i, zero_ten))
            .collect();
        s.push_str(&labels.join(" "));
        s.push('\n');
    }
    s
}

#[derive(Serialize)]
pub struct GroupReport {
    pub order: usize,
    pub generators: Vec<String>,
}

#[derive(Serialize)]
pub struct PermutationCensusReport {
    pub symmetry_order: usize,
    pub antisymmetry_count: usize,
    pub bisymmetry_order: usize,
    pub symmetry_generators: Vec<String>,
    pub antisymmetry_representative: Option<String>,
    pub cycle_type_histogram: BTreeMap<String, usize>,
    pub democratic: bool,
    pub transitive_under: Transitivity,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub commutator_order: Option<usize>,
}

pub fn permutation_report(census: &PermutationCensus, with_commutator: bool) -> PermutationCensusReport {
    let commutator_order =
        with_commutator.then(|| commutator_subgroup(&census.symmetries).len());
    PermutationCensusReport {
        symmetry_order: census.symmetry_order(),
        antisymmetry_count: census.antisymmetry_count(),
        bisymmetry_order: census.symmetry_order() + census.antisymmetry_count(),
        symmetry_generators: generating_set(&census.symmetries)
            .iter()
            .map(|g| g.cycle_notation())
            .collect(),
        antisymmetry_representative: census
            .antisymmetries
            .first()
            .map(|g| g.cycle_notation()),
        cycle_type_histogram: census.cycle_types.clone(),
        democratic: census.democratic,
        transitive_under: census.transitive_under,
        commutator_order,
    }
}

#[derive(Serialize)]
pub struct OrthogonalCensusReport {
    pub symmetry_order: usize,
    pub antisymmetry_count: usize,
    pub symmetry_generators: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub commutator_order: Option<usize>,
}

pub fn orthogonal_report(census: &OrthogonalCensus, with_commutator: bool) -> OrthogonalCensusReport {
    // commutator computation needs the explicit element set; very large
    // groups are stored generator-only
    let commutator_order = (with_commutator && census.materialized())
        .then(|| commutator_subgroup(&census.symmetries).len());
    OrthogonalCensusReport {
        symmetry_order: census.symmetry_order(),
        antisymmetry_count: census.antisymmetry_count(),
        symmetry_generators: census
            .generators
            .iter()
            .map(|g| g.display_signed())
            .collect(),
        commutator_order,
    }
}

#[derive(Serialize)]
pub struct InvariantsReport {
    pub i1: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i2: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<&'static str>,
    pub weight: usize,
    pub special: bool,
}

#[derive(Serialize)]
pub struct ProfileReport {
    pub vertex_count: usize,
    /// (distance → neighbour count, number of vertices sharing the profile)
    pub classes: Vec<(BTreeMap<u8, usize>, usize)>,
}

pub fn profile_report(f: &Form) -> ProfileReport {
    let summary = valence_profile(f);
    ProfileReport {
        vertex_count: summary.vertex_count,
        classes: summary.classes,
    }
}

#[derive(Serialize)]
pub struct TableRow {
    pub label: &'static str,
    pub components: [i64; 6],
    pub i1: i64,
    pub i2: i64,
    pub democratic: bool,
}

pub fn table_rows() -> Vec<TableRow> {
    specforms::invariants::TABLE_2FORMS_4D
        .iter()
        .map(|row: &ClassificationEntry| TableRow {
            label: row.label,
            components: row.components,
            i1: row.i1,
            i2: row.i2,
            democratic: row.democratic,
        })
        .collect()
}

pub fn render_table_text() -> String {
    let mut s = String::from(
        "label  e12 e13 e14 e23 e24 e34   I1   I2  democratic\n",
    );
    for row in table_rows() {
        s.push_str(&format!(
            "{:<5} {:>4} {:>3} {:>3} {:>3} {:>3} {:>3} {:>4} {:>4}  {}\n",
            row.label,
            row.components[0],
            row.components[1],
            row.components[2],
            row.components[3],
            row.components[4],
            row.components[5],
            row.i1,
            row.i2,
            if row.democratic { "D" } else { "-" }
        ));
    }
    s
}

//! JSON reports behind the command-line subcommands.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{hom_space_dim, leq_l_poset, verify_isomorphism, AlgebraError, HomomorphismReport};
use crate::ehresmann::{
    build_category, check_ehresmann, check_ei, check_ei_profinite, check_embeddability_quasiidentity,
    check_restriction, check_right_restriction_ei, check_weakly_ample, is_ei_category, BiUnaryStructure,
    Ehresmann, EhresmannError,
};
use crate::json::{Family, SCHEMA_VERSION};
use crate::rep::{
    cartan_entry_ptn, cartan_matrix_ei, dim_projective_ptn_formula, is_block_upper_unitriangular,
    left_action_support_check, ClassKind, RepContext, RepError,
};
use crate::semigroup::GreenData;
use crate::young::{character_table, compositions_of, hook_dimension, kostka, partitions_of, Partition};
use crate::zoo::{ei_neither_restriction, ut3_isomorphism_check};

fn labels(b: &BiUnaryStructure, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| b.label(x).to_string()).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalyzeReport {
    pub schema_version: u32,
    pub size: usize,
    pub projections: usize,
    pub ehresmann: bool,
    pub right_restriction: Option<bool>,
    pub left_restriction: Option<bool>,
    pub ei: Option<bool>,
    pub ei_profinite: Option<bool>,
    pub category_ei: Option<bool>,
    /// Only evaluated for right restriction inputs.
    pub right_restriction_ei: Option<bool>,
    /// Only evaluated when both restriction identities hold.
    pub weakly_ample: Option<bool>,
    pub embeddable_quasiidentity: bool,
    /// Element labels of the first violating tuple per failed check.
    pub witnesses: BTreeMap<String, Vec<String>>,
}

/// Classification verdicts. Errors only on internal inconsistencies.
pub fn analyze(b: &BiUnaryStructure) -> Result<AnalyzeReport, EhresmannError> {
    let mut witnesses = BTreeMap::new();
    let gate = check_ehresmann(b);
    let quasi = check_embeddability_quasiidentity(b);
    if let Some((x, y, z)) = quasi.witness {
        witnesses.insert("embeddable_quasiidentity".into(), labels(b, &[x, y, z]));
    }
    let mut report = AnalyzeReport {
        schema_version: SCHEMA_VERSION,
        size: b.size(),
        projections: b.projections().len(),
        ehresmann: gate.holds,
        right_restriction: None,
        left_restriction: None,
        ei: None,
        ei_profinite: None,
        category_ei: None,
        right_restriction_ei: None,
        weakly_ample: None,
        embeddable_quasiidentity: quasi.holds,
        witnesses,
    };
    if let Some(f) = gate.failure {
        report
            .witnesses
            .insert(format!("ehresmann:{}", f.kind()), labels(b, &f.witness()));
        return Ok(report);
    }
    let e = Ehresmann::new(b.clone())?;
    let r = check_restriction(&e);
    if let Some((p, a)) = r.right_witness {
        report.witnesses.insert("right_restriction".into(), labels(b, &[p, a]));
    }
    if let Some((p, a)) = r.left_witness {
        report.witnesses.insert("left_restriction".into(), labels(b, &[p, a]));
    }
    let ei = check_ei(&e)?;
    if let Some(p) = ei.non_group_projection {
        report.witnesses.insert("ei".into(), labels(b, &[p]));
    }
    report.right_restriction = Some(r.right);
    report.left_restriction = Some(r.left);
    report.ei = Some(ei.ei);
    report.ei_profinite = Some(check_ei_profinite(&e));
    report.category_ei = Some(is_ei_category(&build_category(&e)));
    if r.right {
        let green = GreenData::compute(b.base());
        report.right_restriction_ei = Some(check_right_restriction_ei(&e, &green)?.verdict);
    }
    if r.right && r.left {
        report.weakly_ample = Some(check_weakly_ample(&e)?);
    }
    Ok(report)
}

#[derive(Clone, Debug, Serialize)]
pub struct HomVerdict {
    pub holds: bool,
    pub witness: Option<[String; 2]>,
}

impl HomVerdict {
    fn new(r: &HomomorphismReport, b: &BiUnaryStructure) -> Self {
        Self {
            holds: r.holds,
            witness: r
                .witness
                .map(|(x, y)| [b.label(x).to_string(), b.label(y).to_string()]),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Ut3Verdict {
    /// The input is the six-pair example the matrices are written for.
    pub applicable: bool,
    pub homomorphism_failure: Option<[usize; 2]>,
    pub upper_triangular: bool,
    pub rank: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyIsoReport {
    pub schema_version: u32,
    pub ehresmann: bool,
    pub phi: Option<HomVerdict>,
    pub psi: Option<HomVerdict>,
    pub mutually_inverse: Option<bool>,
    pub ut3: Option<Ut3Verdict>,
    /// The semigroup and category algebras were shown isomorphic, by `φ` or
    /// by the explicit matrix model when requested.
    pub passed: bool,
}

pub fn verify_iso(b: &BiUnaryStructure, with_ut3: bool) -> Result<VerifyIsoReport, AlgebraError> {
    let mut report = VerifyIsoReport {
        schema_version: SCHEMA_VERSION,
        ehresmann: false,
        phi: None,
        psi: None,
        mutually_inverse: None,
        ut3: None,
        passed: false,
    };
    let Ok(e) = Ehresmann::new(b.clone()) else {
        return Ok(report);
    };
    report.ehresmann = true;
    let poset = leq_l_poset(&e)?;
    let iso = verify_isomorphism(&e, &poset);
    report.phi = Some(HomVerdict::new(&iso.phi, b));
    report.psi = Some(HomVerdict::new(&iso.psi, b));
    report.mutually_inverse = Some(iso.mutually_inverse);
    report.passed = iso.is_isomorphism();
    if with_ut3 {
        let applicable = *b == ei_neither_restriction();
        let u = ut3_isomorphism_check();
        let holds = applicable && u.is_isomorphism();
        report.ut3 = Some(Ut3Verdict {
            applicable,
            homomorphism_failure: u.failure.map(|(x, y)| [x, y]),
            upper_triangular: u.upper_triangular,
            rank: u.rank,
            holds,
        });
        report.passed |= holds;
    }
    Ok(report)
}

#[derive(Clone, Debug, Serialize)]
pub struct RepsReport {
    pub schema_version: u32,
    pub index: Vec<String>,
    pub blocks: Vec<usize>,
    pub partitions: Vec<Partition>,
    pub simple_dims: Vec<usize>,
    pub projective_dims: Vec<usize>,
    /// Row `α`, column `β`: multiplicity of the simple `α` in the
    /// projective `β`.
    pub cartan: Vec<Vec<u64>>,
    pub checks: BTreeMap<String, bool>,
    pub passed: bool,
}

/// Inputs up to this size also get the hom-space cross-check.
pub const HOM_CHECK_LIMIT: usize = 16;

pub fn reps(b: &Ehresmann, family: Option<&Family>) -> Result<RepsReport, RepError> {
    let ctx = RepContext::new(b)?;
    let index = ctx.index();
    let n = index.len();
    let simples = ctx.simple_modules()?;
    let projectives = ctx.projective_modules()?;
    let simple_dims: Vec<usize> = simples.iter().map(|m| m.dim()).collect();
    let projective_dims: Vec<usize> = projectives.iter().map(|m| m.dim()).collect();
    let cartan = cartan_matrix_ei(&ctx)?;
    let blocks: Vec<usize> = index.entries.iter().map(|e| e.block).collect();
    let mut checks = BTreeMap::new();

    let homomorphisms = simples
        .par_iter()
        .chain(projectives.par_iter())
        .all(|m| m.check_homomorphism(b.base()).is_none());
    checks.insert("module_homomorphisms".to_string(), homomorphisms);
    checks.insert(
        "free_right_action_on_l_classes".into(),
        (0..n).all(|i| ctx.class(i, ClassKind::L).acts_freely()),
    );
    let multiplicities: Result<Vec<u64>, RepError> =
        (0..n).map(|i| ctx.dim_projective_via_multiplicity(i)).collect();
    checks.insert(
        "multiplicity_matches_tensor".into(),
        multiplicities?
            .iter()
            .zip(&projective_dims)
            .all(|(&m, &d)| m == d as u64),
    );
    let epis: Result<Vec<bool>, RepError> = (0..n)
        .into_par_iter()
        .map(|i| ctx.projective_to_simple_epi(i).map(|r| r.holds()))
        .collect();
    checks.insert("projective_to_simple_epimorphisms".into(), epis?.iter().all(|&h| h));
    let total: usize = simple_dims.iter().zip(&projective_dims).map(|(s, p)| s * p).sum();
    checks.insert("global_count".into(), total == b.size());
    checks.insert(
        "cartan_consistency".into(),
        (0..n).all(|beta| {
            (0..n)
                .map(|alpha| cartan[alpha][beta] as usize * simple_dims[alpha])
                .sum::<usize>()
                == projective_dims[beta]
        }),
    );
    checks.insert(
        "block_upper_unitriangular".into(),
        is_block_upper_unitriangular(&blocks, &cartan),
    );
    checks.insert(
        "left_action_support".into(),
        b.projections()
            .iter()
            .all(|&e| left_action_support_check(b, e).is_none()),
    );
    if b.size() <= HOM_CHECK_LIMIT {
        let agree = (0..n).all(|a| {
            (0..n).all(|c| hom_space_dim(&projectives[a], &projectives[c]) as u64 == cartan[a][c])
        });
        checks.insert("hom_dims_match_cartan".into(), agree);
    }
    if let Some(f) = family.filter(|f| f.name == "pt") {
        checks.insert(
            "pt_dimension_formula".into(),
            index
                .entries
                .iter()
                .zip(&projective_dims)
                .all(|(e, &d)| dim_projective_ptn_formula(f.n, &e.lambda) == d as u64),
        );
        let mut formula = true;
        let mut zeros = true;
        for (a, alpha) in index.entries.iter().enumerate() {
            for (c, beta) in index.entries.iter().enumerate() {
                formula &= cartan_entry_ptn(&alpha.lambda, &beta.lambda)? == cartan[a][c];
                if alpha.lambda.weight() < beta.lambda.len() {
                    zeros &= cartan[a][c] == 0;
                }
            }
        }
        checks.insert("pt_cartan_formula".into(), formula);
        checks.insert("pt_zero_pattern".into(), zeros);
    }
    let passed = checks.values().all(|&v| v);
    Ok(RepsReport {
        schema_version: SCHEMA_VERSION,
        index: index.entries.iter().map(ToString::to_string).collect(),
        blocks,
        partitions: index.entries.iter().map(|e| e.lambda.clone()).collect(),
        simple_dims,
        projective_dims,
        cartan,
        checks,
        passed,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct YoungReport {
    pub schema_version: u32,
    pub k: usize,
    pub partitions: Vec<Partition>,
    pub hook_dimensions: Vec<u64>,
    /// Rows are irreducibles, columns conjugacy classes by cycle type, both
    /// in the order of `partitions`.
    pub character_table: Vec<Vec<i64>>,
    /// Kostka numbers `K_{λμ}` for every partition `λ` and composition `μ`.
    pub compositions: Vec<Vec<usize>>,
    pub kostka: Vec<Vec<u64>>,
}

pub fn young(k: usize) -> YoungReport {
    let partitions = partitions_of(k);
    let (_, table) = character_table(k);
    let compositions = compositions_of(k);
    let kostka_table = partitions
        .iter()
        .map(|l| compositions.iter().map(|m| kostka(l, m).expect("weights agree")).collect())
        .collect();
    YoungReport {
        schema_version: SCHEMA_VERSION,
        k,
        hook_dimensions: partitions.iter().map(hook_dimension).collect(),
        partitions,
        character_table: table,
        compositions: compositions.iter().map(|c| c.parts().to_vec()).collect(),
        kostka: kostka_table,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo::{ei_neither_restriction, pt_n};

    #[test]
    fn analyze_verdicts() {
        let r = analyze(&pt_n(3).unwrap()).unwrap();
        assert!(r.ehresmann && r.ei == Some(true) && r.right_restriction == Some(true));
        assert_eq!(r.left_restriction, Some(false));
        assert!(r.witnesses.contains_key("left_restriction"));
        let r = analyze(&ei_neither_restriction()).unwrap();
        assert_eq!((r.right_restriction, r.left_restriction), (Some(false), Some(false)));
        assert_eq!(r.weakly_ample, None);
    }

    #[test]
    fn trivial_monoid_passes_everything() {
        let b = crate::json::SemigroupFile::parse(r#"{"labels":["1"],"table":[[0]]}"#, None)
            .unwrap()
            .to_structure()
            .unwrap();
        let r = analyze(&b).unwrap();
        assert!(r.ehresmann && r.embeddable_quasiidentity);
        assert_eq!(r.ei, Some(true));
        assert_eq!(r.weakly_ample, Some(true));
        assert!(verify_iso(&b, false).unwrap().passed);
        let reps = reps(&Ehresmann::new(b).unwrap(), None).unwrap();
        assert!(reps.passed);
        assert_eq!(reps.cartan, vec![vec![1]]);
    }

    #[test]
    fn six_pair_example_needs_the_matrix_model() {
        let b = ei_neither_restriction();
        let plain = verify_iso(&b, false).unwrap();
        assert!(!plain.passed);
        assert!(plain.phi.unwrap().witness.is_some());
        let with = verify_iso(&b, true).unwrap();
        assert!(with.passed);
        let other = verify_iso(&pt_n(1).unwrap(), true).unwrap();
        assert!(!other.ut3.unwrap().applicable);
    }

    #[test]
    fn young_tables() {
        let y = young(3);
        assert_eq!(y.hook_dimensions, vec![1, 2, 1]);
        assert_eq!(y.kostka.len(), 3);
        assert_eq!(y.compositions.len(), 4);
    }
}

use std::collections::HashMap;
use std::fmt;

use super::{tilde_data, BiUnaryStructure, Ehresmann, EhresmannError};
use crate::par::{first_index, first_pair, first_triple};
use crate::semigroup::GreenData;

/// The first Ehresmann axiom found to fail, with its witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EhresmannFailure {
    ProjectionNotIdempotent(usize),
    ProjectionsDoNotCommute(usize, usize),
    ProjectionsNotClosed(usize, usize),
    StarNotProjection(usize),
    PlusNotProjection(usize),
    /// `a*` is not the projection in the `L̃`-class of `a`.
    StarOutsideClass(usize),
    /// `a⁺` is not the projection in the `R̃`-class of `a`.
    PlusOutsideClass(usize),
    /// `(ab)* != (a*b)*`.
    RightCongruence(usize, usize),
    /// `(ab)⁺ != (ab⁺)⁺`.
    LeftCongruence(usize, usize),
}

impl EhresmannFailure {
    pub fn kind(&self) -> &'static str {
        match self {
            Self::ProjectionNotIdempotent(_) => "projection-not-idempotent",
            Self::ProjectionsDoNotCommute(..) => "projections-do-not-commute",
            Self::ProjectionsNotClosed(..) => "projections-not-closed",
            Self::StarNotProjection(_) => "star-not-projection",
            Self::PlusNotProjection(_) => "plus-not-projection",
            Self::StarOutsideClass(_) => "star-outside-class",
            Self::PlusOutsideClass(_) => "plus-outside-class",
            Self::RightCongruence(..) => "right-congruence",
            Self::LeftCongruence(..) => "left-congruence",
        }
    }

    pub fn witness(&self) -> Vec<usize> {
        match *self {
            Self::ProjectionNotIdempotent(a)
            | Self::StarNotProjection(a)
            | Self::PlusNotProjection(a)
            | Self::StarOutsideClass(a)
            | Self::PlusOutsideClass(a) => vec![a],
            Self::ProjectionsDoNotCommute(a, b)
            | Self::ProjectionsNotClosed(a, b)
            | Self::RightCongruence(a, b)
            | Self::LeftCongruence(a, b) => vec![a, b],
        }
    }
}

impl fmt::Display for EhresmannFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {:?}", self.kind(), self.witness())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EhresmannReport {
    pub holds: bool,
    pub failure: Option<EhresmannFailure>,
}

pub fn check_ehresmann(b: &BiUnaryStructure) -> EhresmannReport {
    let failure = ehresmann_failure(b);
    EhresmannReport {
        holds: failure.is_none(),
        failure,
    }
}

fn ehresmann_failure(b: &BiUnaryStructure) -> Option<EhresmannFailure> {
    use EhresmannFailure::*;
    let s = b.base();
    let n = b.size();
    let e = b.projections();
    if let Some(&x) = e.iter().find(|&&x| !s.is_idempotent(x)) {
        return Some(ProjectionNotIdempotent(x));
    }
    let k = e.len();
    if let Some((i, j)) = first_pair(k, k, |i, j| {
        s.product(e[i], e[j]) != s.product(e[j], e[i])
    }) {
        return Some(ProjectionsDoNotCommute(e[i], e[j]));
    }
    if let Some((i, j)) = first_pair(k, k, |i, j| !b.is_projection(s.product(e[i], e[j]))) {
        return Some(ProjectionsNotClosed(e[i], e[j]));
    }
    if let Some(a) = (0..n).find(|&a| !b.is_projection(b.star(a))) {
        return Some(StarNotProjection(a));
    }
    if let Some(a) = (0..n).find(|&a| !b.is_projection(b.plus(a))) {
        return Some(PlusNotProjection(a));
    }
    // Projections are idempotent here, so this cannot fail.
    let t = tilde_data(s, e).expect("projections checked above");
    if let Some(a) = (0..n).find(|&a| !t.l_tilde.related(a, b.star(a))) {
        return Some(StarOutsideClass(a));
    }
    if let Some(a) = (0..n).find(|&a| !t.r_tilde.related(a, b.plus(a))) {
        return Some(PlusOutsideClass(a));
    }
    if let Some((x, y)) = first_pair(n, n, |x, y| {
        b.star(s.product(x, y)) != b.star(s.product(b.star(x), y))
    }) {
        return Some(RightCongruence(x, y));
    }
    if let Some((x, y)) = first_pair(n, n, |x, y| {
        b.plus(s.product(x, y)) != b.plus(s.product(x, b.plus(y)))
    }) {
        return Some(LeftCongruence(x, y));
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictionReport {
    pub right: bool,
    pub left: bool,
    /// First `(e, a)` with `ea != a(ea)*`.
    pub right_witness: Option<(usize, usize)>,
    /// First `(e, a)` with `ae != (ae)⁺a`.
    pub left_witness: Option<(usize, usize)>,
}

pub fn check_restriction(b: &Ehresmann) -> RestrictionReport {
    let e = b.projections();
    let n = b.size();
    let right_witness = first_pair(e.len(), n, |i, a| {
        let ea = b.product(e[i], a);
        ea != b.product(a, b.star(ea))
    })
    .map(|(i, a)| (e[i], a));
    let left_witness = first_pair(e.len(), n, |i, a| {
        let ae = b.product(a, e[i]);
        ae != b.product(b.plus(ae), a)
    })
    .map(|(i, a)| (e[i], a));
    RestrictionReport {
        right: right_witness.is_none(),
        left: left_witness.is_none(),
        right_witness,
        left_witness,
    }
}

fn require_right_restriction(b: &Ehresmann) -> Result<(), EhresmannError> {
    match check_restriction(b).right_witness {
        Some((e, a)) => Err(EhresmannError::NotRightRestriction(e, a)),
        None => Ok(()),
    }
}

fn agree(check: &'static str, verdicts: &[bool]) -> Result<bool, EhresmannError> {
    if verdicts.iter().all(|&v| v == verdicts[0]) {
        Ok(verdicts[0])
    } else {
        Err(EhresmannError::ConditionsDisagree {
            check,
            verdicts: verdicts.to_vec(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EiReport {
    pub ei: bool,
    /// In order: every `H̃(e)` is a group; `f*ff⁺ = f*f⁺`; `f*f⁺` is an
    /// inverse of `f`; `f ∈ S(f*, f⁺)`. The last three range over all
    /// idempotents `f`.
    pub conditions: [bool; 4],
    /// First projection whose `H̃`-class is not a group.
    pub non_group_projection: Option<usize>,
    /// First idempotent with `f*ff⁺ != f*f⁺`.
    pub witness: Option<usize>,
}

/// Whether `H̃(e) = {a : a* = a⁺ = e}` is a group with identity `e`.
fn h_tilde_is_group(b: &BiUnaryStructure, e: usize) -> bool {
    let class: Vec<usize> = (0..b.size())
        .filter(|&a| b.star(a) == e && b.plus(a) == e)
        .collect();
    let inside = |x: usize| b.star(x) == e && b.plus(x) == e;
    class.iter().all(|&a| {
        class.iter().all(|&c| inside(b.product(a, c)))
            && class
                .iter()
                .any(|&c| b.product(a, c) == e && b.product(c, a) == e)
    })
}

pub fn check_ei(b: &Ehresmann) -> Result<EiReport, EhresmannError> {
    let s = b.base();
    let idem = s.idempotents();
    let non_group_projection = b
        .projections()
        .iter()
        .copied()
        .find(|&e| !h_tilde_is_group(b, e));
    let identity_fails = |f: usize| {
        let (fs, fp) = (b.star(f), b.plus(f));
        s.product3(fs, f, fp) != s.product(fs, fp)
    };
    let witness = idem.iter().copied().find(|&f| identity_fails(f));
    let inverse_ok = idem.iter().all(|&f| {
        let x = s.product(b.star(f), b.plus(f));
        s.product3(f, x, f) == f && s.product3(x, f, x) == x
    });
    let sandwich_ok = idem.iter().all(|&f| {
        s.sandwich_set(b.star(f), b.plus(f))
            .map(|set| set.contains(&f))
            .unwrap_or(false)
    });
    let conditions = [
        non_group_projection.is_none(),
        witness.is_none(),
        inverse_ok,
        sandwich_ok,
    ];
    let ei = agree("ei", &conditions)?;
    Ok(EiReport {
        ei,
        conditions,
        non_group_projection,
        witness,
    })
}

/// `(x^ω)* x^ω (x^ω)⁺ = (x^ω)* (x^ω)⁺` for every `x`.
pub fn check_ei_profinite(b: &Ehresmann) -> bool {
    let s = b.base();
    first_index(b.size(), |x| {
        let w = s.omega_power(x);
        let (ws, wp) = (b.star(w), b.plus(w));
        s.product3(ws, w, wp) != s.product(ws, wp)
    })
    .is_none()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightRestrictionEiReport {
    pub verdict: bool,
    /// In order: EI; `ff⁺ = f⁺` for every idempotent `f`; every regular `a`
    /// is R-related to `a⁺`.
    pub conditions: [bool; 3],
    /// `f⁺ ≤ f*` for every idempotent `f`; always true for right restriction
    /// inputs.
    pub plus_below_star: bool,
}

pub fn check_right_restriction_ei(
    b: &Ehresmann,
    green: &GreenData,
) -> Result<RightRestrictionEiReport, EhresmannError> {
    require_right_restriction(b)?;
    let s = b.base();
    let idem = s.idempotents();
    let ei = check_ei(b)?.ei;
    let absorbs = idem
        .iter()
        .all(|&f| s.product(f, b.plus(f)) == b.plus(f));
    let regular_r = s
        .elements()
        .filter(|&a| s.is_regular_element(a))
        .all(|a| green.r.related(a, b.plus(a)));
    let plus_below_star = idem.iter().all(|&f| b.proj_leq(b.plus(f), b.star(f)));
    if !plus_below_star {
        return Err(EhresmannError::ConditionsDisagree {
            check: "plus-below-star",
            verdicts: vec![false],
        });
    }
    let conditions = [ei, absorbs, regular_r];
    let verdict = agree("right-restriction-ei", &conditions)?;
    Ok(RightRestrictionEiReport {
        verdict,
        conditions,
        plus_below_star,
    })
}

/// Whether the projections are exactly the idempotents. Requires both
/// restriction identities; the answer then coincides with EI.
pub fn check_weakly_ample(b: &Ehresmann) -> Result<bool, EhresmannError> {
    let r = check_restriction(b);
    if let Some((e, a)) = r.right_witness {
        return Err(EhresmannError::NotRightRestriction(e, a));
    }
    if let Some((e, a)) = r.left_witness {
        return Err(EhresmannError::NotLeftRestriction(e, a));
    }
    let weakly_ample = b.base().idempotents() == b.projections();
    agree("weakly-ample", &[weakly_ample, check_ei(b)?.ei])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiidentityReport {
    pub holds: bool,
    /// First `(x, y, z)` with `xz = yz` but `xz⁺ != yz⁺`.
    pub witness: Option<(usize, usize, usize)>,
}

/// The implication `xz = yz ⟹ xz⁺ = yz⁺`, checked over all triples.
pub fn check_embeddability_quasiidentity(b: &BiUnaryStructure) -> QuasiidentityReport {
    let n = b.size();
    let violated_at = |z: usize| {
        let zp = b.plus(z);
        let mut seen: HashMap<usize, usize> = HashMap::new();
        (0..n).any(|x| {
            let v = b.product(x, zp);
            *seen.entry(b.product(x, z)).or_insert(v) != v
        })
    };
    // A linear pass per `z` decides the answer; the cubic scan only runs to
    // locate the first witness.
    if first_index(n, violated_at).is_none() {
        return QuasiidentityReport {
            holds: true,
            witness: None,
        };
    }
    let witness = first_triple(n, |x, y, z| {
        b.product(x, z) == b.product(y, z) && b.product(x, b.plus(z)) != b.product(y, b.plus(z))
    });
    QuasiidentityReport {
        holds: false,
        witness,
    }
}

/// First projection `e` and idempotent `f != e` with `f` in the L-class of `e`.
pub fn check_unique_idempotent_in_l_class(
    b: &Ehresmann,
    green: &GreenData,
) -> Option<(usize, usize)> {
    let s = b.base();
    b.projections().iter().find_map(|&e| {
        green
            .l
            .members_with(e)
            .iter()
            .copied()
            .find(|&f| f != e && s.is_idempotent(f))
            .map(|f| (e, f))
    })
}

/// First idempotent `f` and `g, h ∈ S(f*, f⁺)` with `gh != h`.
pub fn check_right_zero_sandwich_sets(b: &Ehresmann) -> Option<(usize, usize, usize)> {
    let s = b.base();
    s.idempotents().into_iter().find_map(|f| {
        let set = s
            .sandwich_set(b.star(f), b.plus(f))
            .expect("projections are idempotent");
        set.iter().find_map(|&g| {
            set.iter()
                .find(|&&h| s.product(g, h) != h)
                .map(|&h| (f, g, h))
        })
    })
}

/// One projection per regular J-class, the smallest index in the class,
/// listed with J-classes bottom-up.
pub fn representative_projections(
    b: &Ehresmann,
    green: &GreenData,
) -> Result<Vec<usize>, EhresmannError> {
    green
        .j_classes_bottom_up()
        .into_iter()
        .filter(|&j| green.regular[j])
        .map(|j| {
            green
                .j
                .class_members(j)
                .iter()
                .copied()
                .find(|&a| b.is_projection(a))
                .ok_or(EhresmannError::MissingProjection(j))
        })
        .collect()
}

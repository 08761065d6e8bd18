use num_traits::One;

use super::{
    category_algebra, is_algebra_homomorphism, semigroup_algebra, HomomorphismReport, LinearMap,
    PosetData,
};
use crate::ehresmann::{build_category, Ehresmann};
use crate::linalg::rat;
use crate::linalg::Rational;

/// `s ↦ Σ_{t ≤_l s} C(t)`, from `𝕜S` to `𝕜C(S)`. Morphisms share the element
/// indices.
pub fn phi_map(poset: &PosetData) -> LinearMap {
    let n = poset.size();
    LinearMap {
        source_dim: n,
        target_dim: n,
        columns: (0..n)
            .map(|s| poset.down_set(s).into_iter().map(|t| (t, Rational::one())).collect())
            .collect(),
    }
}

/// `C(x) ↦ Σ_{y ≤_l x} μ(y, x) y`, from `𝕜C(S)` to `𝕜S`.
pub fn psi_map(poset: &PosetData) -> LinearMap {
    let n = poset.size();
    LinearMap {
        source_dim: n,
        target_dim: n,
        columns: (0..n)
            .map(|x| {
                poset
                    .mobius_column(x)
                    .iter()
                    .map(|&(y, m)| (y, rat(m)))
                    .collect()
            })
            .collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoReport {
    pub phi: HomomorphismReport,
    pub psi: HomomorphismReport,
    /// `ψ∘φ = id` and `φ∘ψ = id`.
    pub mutually_inverse: bool,
}

impl IsoReport {
    pub fn is_isomorphism(&self) -> bool {
        self.phi.holds && self.psi.holds && self.mutually_inverse
    }
}

/// Builds `φ` and `ψ` and checks both for multiplicativity on all basis
/// pairs. They are always mutually inverse linear maps.
pub fn verify_isomorphism(b: &Ehresmann, poset: &PosetData) -> IsoReport {
    let ks = semigroup_algebra(b.base());
    let kc = category_algebra(&build_category(b));
    let phi = phi_map(poset);
    let psi = psi_map(poset);
    IsoReport {
        phi: is_algebra_homomorphism(&phi, &ks, &kc),
        psi: is_algebra_homomorphism(&psi, &kc, &ks),
        mutually_inverse: psi.after(&phi).is_identity() && phi.after(&psi).is_identity(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::leq_l_poset;
    use crate::zoo::{ei_neither_restriction, pt_n};

    #[test]
    fn two_point_chain() {
        let pt1 = Ehresmann::new(pt_n(1).unwrap()).unwrap();
        let poset = leq_l_poset(&pt1).unwrap();
        let phi = phi_map(&poset);
        let psi = psi_map(&poset);
        assert_eq!(phi.columns[0], vec![(0, rat(1)), (1, rat(1))]);
        assert_eq!(psi.columns[0], vec![(0, rat(1)), (1, rat(-1))]);
        assert!(verify_isomorphism(&pt1, &poset).is_isomorphism());
    }

    #[test]
    fn phi_fails_without_right_restriction() {
        let s = Ehresmann::new(ei_neither_restriction()).unwrap();
        let poset = leq_l_poset(&s).unwrap();
        let r = verify_isomorphism(&s, &poset);
        assert!(r.mutually_inverse);
        assert!(!r.phi.holds);
        assert!(r.phi.witness.is_some());
    }
}

//! Modules of right restriction EI-Ehresmann semigroups built from class
//! bimodules, and their Cartan matrices.

mod bimodule;
mod cartan;
mod context;
mod group;

pub use crate::algebra::{hom_space_dim, SemigroupModule};
pub use bimodule::{
    class_bimodule, left_action_support_check, tensor_over_group, ClassBimodule, ClassKind,
    TensorProduct,
};
pub use cartan::{
    cartan_entry_ptn, cartan_matrix_ei, cartan_matrix_ptn, is_block_upper_unitriangular,
    onto_maps,
};
pub use context::{
    dim_projective_ptn_formula, multiplicity_of_dual, EpiReport, RepContext, RepIndex, RepLabel,
};
pub use group::{identify_symmetric, regular_module, specht_module, GroupModule, SymmetricIdentification};

use thiserror::Error;

use crate::ehresmann::EhresmannError;
use crate::semigroup::SemigroupError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error(transparent)]
    Ehresmann(#[from] EhresmannError),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error("element {0} is not a projection")]
    NotAProjection(usize),
    #[error("the input is not a right restriction EI-Ehresmann semigroup")]
    NotRightRestrictionEi,
    #[error("the maximal subgroup at projection {projection} has order {order} and is neither trivial nor symmetric")]
    UnsupportedSubgroup { projection: usize, order: usize },
    #[error("right action leaves the class: {element}·{group_element} = {image}")]
    RightActionNotClosed {
        element: usize,
        group_element: usize,
        image: usize,
    },
    #[error("left and right actions disagree at (s, x, g) = ({0}, {1}, {2})")]
    NotCommuting(usize, usize, usize),
    #[error("group module has {found} matrices, the group has order {expected}")]
    GroupModuleMismatch { expected: usize, found: usize },
    #[error("{what}: expected dimension {expected}, constructed {found}")]
    DimensionMismatch {
        what: String,
        expected: u64,
        found: u64,
    },
    #[error("{what} is {value}, not a nonnegative integer")]
    NonIntegral { what: String, value: String },
    #[error("endomorphisms of projection {0} differ from its maximal subgroup")]
    EndomorphismMismatch(usize),
}

//! Quadratic extensions `d = l* ⊕ a ⊕ l`, admissibility, and the canonical
//! extraction of extension data from a triple.

mod admissible;
mod build;
mod extract;
mod indecomposable;
mod input;

pub use admissible::{check_admissible, AdmissibilityReport, ConditionResult};
pub use build::{build_extension, build_extension_unchecked, ExtensionLayout};
pub use extract::{canonical_isotropic_ideal, extract_canonical};
pub use indecomposable::{alpha_on_bracket_kernel, check_indecomposable_sufficient, Indecomposability};
pub use input::ExtensionInput;

//! Cochains `C*(l, a)` with trivial coefficients, the pairing `⟨·∧·⟩`,
//! quadratic cocycles and the action of quadratic 1-cochains.

pub mod form;
pub mod module;
pub mod ops;
pub mod quadratic;

pub use form::{combinations, AlternatingForm};
pub use module::OrthModule;
pub use ops::{check_sp1_invariant, differential, invariant_forms, sp1_action, wedge_pair};
pub use quadratic::{QuadCochain1, QuadCocycle2};

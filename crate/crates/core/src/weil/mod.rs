//! Weil algebras, inductive systems of them over a poset, and the induced
//! bundle functor on Cartesian multifibered objects.

pub mod algebra;
pub mod functor;
pub mod system;

pub use algebra::{AlgebraHom, WeilAlgebra};
pub use functor::{
    fiber_product, product_preservation_check, t_mu_apply, weil_apply,
    CartesianMultifibered, FiberProduct, MultifiberedPolyMap, ProductReport,
};
pub use system::{validate_system_morphism, MorphismCheck, WeilSystem};

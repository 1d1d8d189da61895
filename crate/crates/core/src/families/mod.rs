//! Explicit algebras: the maximal-nilindex chains, the two parametric
//! families with characteristic sequence `(n | m−1, 1)`, algebras derived
//! from associative superalgebras, and class representatives.

mod builders;
mod params;
mod representatives;

pub use builders::{
    build_m1, build_m2, build_null_filiform, build_null_filiform_super, leibniz_from_associative,
    random_associative_pair, small_associative,
};
pub use params::{Coord, FamilyKind, FamilyParams, FamilyParamsM1, FamilyParamsM2};
pub use representatives::{
    descriptor, enumerate_representatives, layout, layout_group, materialize, tail_coords, CaseTag,
    Layout, TailDescriptor,
};

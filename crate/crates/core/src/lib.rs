pub mod arith;
pub mod ideal;
pub mod invariants;
pub mod lattice;
pub mod par;
pub mod poly;
pub mod quotient;
pub mod separability;

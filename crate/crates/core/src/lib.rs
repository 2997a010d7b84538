//! Exact computation of canonical bases of the quantum wedge space of type
//! `b∞`, their specialization at `q = 1`, and the resulting decomposition
//! numbers and characters for the queer Lie superalgebra `q(n)`.

pub mod canonical;
pub mod characters;
pub mod cli;
pub mod crystal;
pub mod lincomb;
pub mod qring;
pub mod weights;
pub mod tensor;
pub mod wedge;

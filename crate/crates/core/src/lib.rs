//! Lift binary CSS parity-check pairs to GF(2^m) without changing their
//! support, keeping the two matrices orthogonal.
//!
//! The pipeline is: check F_2 orthogonality and overlap sizes ([`binmat`]),
//! build the exponent congruences ([`congruence`]), solve them modulo
//! `2^m - 1` ([`modsolve`]), and assemble the field matrices ([`extend`]).
//! [`hgp`] builds hypergraph-product pairs, which always have overlaps of
//! size 0 or 2. [`extend::csa`] is a closed-form alternative that works for
//! any even overlap size.
//!
//! Runnable examples live under `examples/`:
//! `field_arithmetic`, `hgp_example`, `solve_congruences`,
//! `smith_normal_form`, `extend_pipeline`, `csa_baseline`,
//! `paper_hex_matrices` and `file_formats`.

pub mod binmat;
pub mod cli;
pub mod congruence;
pub mod extend;
pub mod field;
pub mod formats;
pub mod hgp;
pub mod modsolve;

pub use binmat::{check_orthogonal_f2, overlap_histogram, overlap_sets, BinaryMatrix, CssPair};
pub use congruence::{build_system, build_var_index, CongruenceSystem};
pub use extend::{assemble, csa, verify_orthogonal_fq, verify_support, CsaParams, ExponentAssignment, FieldMatrix};
pub use field::{make_field, FieldElement, FieldSpec};
pub use hgp::hgp;
pub use modsolve::{solve, SolveOptions, Strategy};

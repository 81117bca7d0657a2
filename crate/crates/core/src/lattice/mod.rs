//! Exact integer linear algebra on the lattices `N` and `M = Hom(N, Z)`.
//!
//! Both lattices are presented in the standard basis of `Z^n`, so the
//! pairing is the ordinary dot product and lattice maps are matrices.

mod matrix;
mod smith;
mod vector;

#[cfg(test)]
pub(crate) use matrix::rational_coordinates;
pub(crate) use matrix::{clear_denominators, rational_kernel};
pub use matrix::{combine, coordinates_in_basis, rank_of, IntMatrix};
pub use smith::{
    complete_basis, hermite_normal_form, quotient_rank, saturated_span, smith_normal_form,
    SmithDecomposition,
};
pub use vector::{pairing, IntVector};

/// Lattice basis (Hermite normal form) of `{x in Z^n : <row, x> = 0 for all rows}`.
pub fn integer_kernel(rank: usize, rows: &[IntVector]) -> Vec<IntVector> {
    let ker = rational_kernel(rank, rows);
    saturated_span(rank, &ker).expect("kernel vectors have the ambient rank")
}

//! Exact integer and rational combinatorics.

mod brothers;
mod composite;
mod polynomial;
mod polys;
mod sequence;
mod triangle;

pub use brothers::{brothers_ratio, row_product};
pub use composite::{composite_transform, series_text, Monomial, MonomialGroup};
pub use polynomial::{imaginary_substitution, ComplexSplit, IntPolynomial};
pub use polys::{fib_poly, fib_poly_from_diagonal, lucas_poly, lucas_poly_from_diagonal};
pub use sequence::{fibonacci, gen_lucas_term, lucas_number, SeqKind};
pub use triangle::{binomial, factorial, is_prime, lucas_triangle_entry, lucas_triangle_row, pascal_row, primes_up_to};

pub(crate) use triangle::{choose, lucas_entry};

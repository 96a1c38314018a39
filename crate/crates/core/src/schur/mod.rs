//! Schur polynomials by alternants, determinants, tableaux and lattice
//! paths, and the identities linking them.

mod cauchy;
mod five_vertex;
mod partition;
mod polys;
mod tableau;

pub use cauchy::{cauchy_check, cauchy_kernel, cauchy_sum, cauchy_telescoping};
pub use five_vertex::{
    extended_five_vertex_z, five_vertex_z, h_alpha, h_alpha_series, lgv_degree, lgv_determinant,
    lgv_from_series, path_configs, path_to_ssyt, ssyt_to_path, PathConfigFiveVertex,
};
pub use partition::Partition;
pub use polys::{
    asm_count, asm_product_formula, complete_homogeneous, dim_eval, ice_point_identification,
    ice_point_rhs, schur_bialternant, schur_jacobi_trudi, staircase_lambda,
};
pub use tableau::{schur_monomials, schur_ssyt, ssyt_enumerate, Kostka, Ssyt};

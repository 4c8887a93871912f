//! Constructors for the named polynomial families: the integer bivariate
//! polynomials `P_d`, the Newton power-sum polynomials `f_d`, the Laurent
//! polynomials `S`, `R`, `E`, `R_m`, and the composites `F` and `G`.

mod composite;
mod ennola;
mod laurent_families;
mod power_sums;

pub use composite::{conj_params, f_poly, g_closed, g_m_poly, g_poly, ConjParams, ParityCase};
pub use ennola::{ennola_min_poly, ennola_shifted_min_poly, eval_dense, taylor_shift};
pub use laurent_families::{e_poly, r_m_poly, r_poly, s_poly, SignConvention};
pub use power_sums::{
    newton_f_general, newton_f_spec, p_coefficient, p_coefficient_factorial, p_poly,
    specialize_newton,
};

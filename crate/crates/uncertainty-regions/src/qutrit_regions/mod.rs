//! Uncertainty regions for the two studied qutrit observable families:
//! qubit observables extended by a zero block, and the Gell-Mann pair.

mod extended;
mod gellmann;

pub use extended::{
    extended_min_var_b, extended_monotonicity_witness, extended_region_contains,
    extended_variances, extended_w_solutions, ExtendedPairParams, WSolutions,
};
pub use gellmann::{
    gm_boundary_segments, gm_feasible_rho11, gm_max_var_b, gm_min_var_b, gm_region_contains,
    gm_rho33, gm_schrodinger_gap, gm_segment_value, gm_stationary_rho11_max,
    gm_stationary_rho11_min, gm_variances, gm_y_intervals, GellMannStateParams, GmBranch,
};

//! Weight and nonlinearity theory for `f_2` and `f_3`.

pub mod conjecture;
pub mod gf;
pub mod weights;

pub use conjecture::{conjecture_check, conjecture_row, first_counterexample, ConjectureRow, Source};
pub use gf::{builtin_gfs, gf_series, RationalGF};
pub use weights::{
    f3_weight_sequence, nl_f2, nl_lower_bound_fk, satisfies_nl_bound, t_chain, t_chain_anf,
    wt_f2_closed, wt_f2_recurrence, wt_f3_recurrence, WeightSequence,
};

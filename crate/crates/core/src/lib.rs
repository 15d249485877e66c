//! Partition combinatorics around the Mullineux map and `(a, b)` ladder
//! regularization: `b`-rims, iterated `J_b`, column regularization along
//! ladders, cores and quotients on the abacus, and exhaustive scanners for the
//! statements tying them together.

pub mod abacus;
pub mod enumerate;
pub mod error;
pub mod hooks;
pub mod ladder;
pub mod mullineux;
pub mod partition;
pub mod verify;

pub use abacus::{
    apply_box_move, b_weight, core_b, core_by_ribbons, from_maya, quotient_b, quotient_by_hooks,
    to_maya, AbacusState, MayaDiagram, QuotientTuple,
};
pub use enumerate::{enumerate_partitions, partitions_up_to};
pub use error::{Error, Result};
pub use hooks::{all_hooks, classify_hook, hook_stats, HookClass, HookStats};
pub use ladder::{
    colreg, is_ab_regular, is_cr_valid, ladder, reg, semireg, AbParams, Axis, BoxComposition,
};
pub use mullineux::{
    b_rim, j_b, mullineux, mullineux_transpose, omega_psi, remove_b_rim, RimDecomposition,
};
pub use partition::{parse_partition, residue, BoxCoord, Partition};
pub use verify::{
    brute_force_cross_checks, check_theorem_case, run_theorem_scan, scan_conjecture_fayers,
    scan_conjecture_reverse, scan_theorem, CaseRecord, ScanOptions, VerificationReport,
};

//! CNF encoding of "local dimension at most `d`", DIMACS I/O, an external
//! solver driver and the exact search built on top of them.

mod decode;
mod dimacs;
mod encode;
mod search;
mod solver;

pub use decode::decode_realizer;
pub use dimacs::{parse_dimacs, write_cnf, write_dimacs, write_var_map};
pub use encode::{
    encode, encode_with, strict_pairs, ClauseCounts, CnfFormula, EncodeOptions, VarMap, VarRole,
};
pub use search::{ldim_exact, ldim_exact_with, solve_instance, InstanceOutcome, LdimSearch};
pub use solver::{
    parse_solver_output, resolve_solver, run_solver, SolverResult, SolverStatus, SOLVER_ENV,
};

//! Propositional formulas over independent statements and their expansion
//! into mutually exclusive conjunctions (minterms).

mod formula;
mod minterm;
mod parser;

pub use formula::{Expr, Formula};
pub use minterm::{
    enumerate_minterms, mutually_exclusive, verify_tautology_of_all, Minterm, MintermSet,
    MAX_VARIABLES,
};
pub use parser::parse_formula;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LogicError {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid variable name `{0}`")]
    InvalidVariableName(String),
    #[error("variable `{0}` declared twice")]
    DuplicateVariable(String),
    #[error("no value assigned to variable `{0}`")]
    MissingVariable(String),
    #[error("variable count {0} outside 1..={max}", max = MAX_VARIABLES)]
    VariableCount(usize),
    #[error("minterm index {index} outside 1..={count}")]
    MintermIndex { index: usize, count: usize },
    #[error("minterms over {left} and {right} variables cannot be compared")]
    MismatchedArity { left: usize, right: usize },
}

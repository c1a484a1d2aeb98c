use std::collections::HashMap;
use std::fmt;

use super::{LogicError, Minterm};

/// Formula tree. Variables are indices into the owning [`Formula`]'s
/// declared variable list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Var(usize),
    Not(Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
    Implies(Box<Expr>, Box<Expr>),
    Iff(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn negate(e: Expr) -> Expr {
        Expr::Not(Box::new(e))
    }

    pub fn and(l: Expr, r: Expr) -> Expr {
        Expr::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Expr, r: Expr) -> Expr {
        Expr::Or(Box::new(l), Box::new(r))
    }

    pub fn implies(l: Expr, r: Expr) -> Expr {
        Expr::Implies(Box::new(l), Box::new(r))
    }

    pub fn iff(l: Expr, r: Expr) -> Expr {
        Expr::Iff(Box::new(l), Box::new(r))
    }

    /// Evaluates with `value(i)` giving the truth value of variable `i`.
    pub fn eval_with(&self, value: &impl Fn(usize) -> bool) -> bool {
        match self {
            Expr::Var(i) => value(*i),
            Expr::Not(e) => !e.eval_with(value),
            Expr::And(l, r) => l.eval_with(value) && r.eval_with(value),
            Expr::Or(l, r) => l.eval_with(value) || r.eval_with(value),
            Expr::Implies(l, r) => !l.eval_with(value) || r.eval_with(value),
            Expr::Iff(l, r) => l.eval_with(value) == r.eval_with(value),
        }
    }

    fn max_var(&self) -> Option<usize> {
        match self {
            Expr::Var(i) => Some(*i),
            Expr::Not(e) => e.max_var(),
            Expr::And(l, r) | Expr::Or(l, r) | Expr::Implies(l, r) | Expr::Iff(l, r) => {
                l.max_var().max(r.max_var())
            }
        }
    }
}

/// A parsed statement together with its ordered variable list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Formula {
    variables: Vec<String>,
    root: Expr,
}

impl Formula {
    /// Builds a formula from a tree, checking that every variable index
    /// refers to a declared, well-formed name.
    pub fn new(variables: Vec<String>, root: Expr) -> Result<Self, LogicError> {
        validate_variables(&variables)?;
        if let Some(max) = root.max_var() {
            if max >= variables.len() {
                return Err(LogicError::UnknownVariable(format!("#{}", max + 1)));
            }
        }
        Ok(Formula { variables, root })
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn arity(&self) -> usize {
        self.variables.len()
    }

    pub fn root(&self) -> &Expr {
        &self.root
    }

    /// Classical truth-functional evaluation under a name → value map.
    pub fn evaluate(&self, assignment: &HashMap<String, bool>) -> Result<bool, LogicError> {
        let values = self
            .variables
            .iter()
            .map(|name| {
                assignment
                    .get(name)
                    .copied()
                    .ok_or_else(|| LogicError::MissingVariable(name.clone()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.root.eval_with(&|i| values[i]))
    }

    /// Evaluates under the assignment given positionally.
    pub fn evaluate_values(&self, values: &[bool]) -> Result<bool, LogicError> {
        if let Some(missing) = self.variables.get(values.len()) {
            return Err(LogicError::MissingVariable(missing.clone()));
        }
        Ok(self.root.eval_with(&|i| values[i]))
    }

    /// Indices `k` of the minterms whose satisfying assignment makes the
    /// formula true, ascending. Their disjunction is equivalent to `self`.
    pub fn to_minterm_disjunction(&self) -> Result<Vec<usize>, LogicError> {
        let set = super::enumerate_minterms(self.arity())?;
        Ok(set
            .iter()
            .filter(|m| self.root.eval_with(&|i| m.signs()[i]))
            .map(Minterm::index)
            .collect())
    }
}

pub(super) fn validate_variables(variables: &[String]) -> Result<(), LogicError> {
    for (i, name) in variables.iter().enumerate() {
        let mut chars = name.chars();
        let head_ok = chars.next().is_some_and(|c| c.is_ascii_lowercase());
        let tail_ok = chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_');
        if !(head_ok && tail_ok) {
            return Err(LogicError::InvalidVariableName(name.clone()));
        }
        if variables[..i].contains(name) {
            return Err(LogicError::DuplicateVariable(name.clone()));
        }
    }
    Ok(())
}

impl fmt::Display for Formula {
    /// Prints in the input grammar. Every binary subterm is parenthesized,
    /// so the output parses back to the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_expr(f, &self.root, &self.variables, true)
    }
}

fn write_expr(f: &mut fmt::Formatter<'_>, e: &Expr, vars: &[String], top: bool) -> fmt::Result {
    let (l, op, r) = match e {
        Expr::Var(i) => return f.write_str(&vars[*i]),
        Expr::Not(inner) => {
            f.write_str("!")?;
            return write_expr(f, inner, vars, false);
        }
        Expr::And(l, r) => (l, "&", r),
        Expr::Or(l, r) => (l, "|", r),
        Expr::Implies(l, r) => (l, "->", r),
        Expr::Iff(l, r) => (l, "<->", r),
    };
    if !top {
        f.write_str("(")?;
    }
    write_expr(f, l, vars, false)?;
    write!(f, " {op} ")?;
    write_expr(f, r, vars, false)?;
    if !top {
        f.write_str(")")?;
    }
    Ok(())
}

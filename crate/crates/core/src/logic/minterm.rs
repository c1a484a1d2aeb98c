use std::collections::HashSet;
use std::fmt;

use super::LogicError;

/// Upper bound on the number of statements expanded into minterms.
pub const MAX_VARIABLES: usize = 20;

/// One of the `2^n` mutually exclusive conjunctions.
///
/// Index `k` is 1-based. `k - 1` read in binary, first statement as the most
/// significant bit, has a 1 exactly where the statement is negated, so
/// `k = 1` is the all-affirmative conjunction and `k = N` the all-negated one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Minterm {
    index: usize,
    signs: Vec<bool>,
}

impl Minterm {
    pub fn from_index(index: usize, arity: usize) -> Result<Self, LogicError> {
        if arity == 0 || arity > MAX_VARIABLES {
            return Err(LogicError::VariableCount(arity));
        }
        let count = 1usize << arity;
        if index == 0 || index > count {
            return Err(LogicError::MintermIndex { index, count });
        }
        let code = index - 1;
        let signs = (0..arity)
            .map(|i| (code >> (arity - 1 - i)) & 1 == 0)
            .collect();
        Ok(Minterm { index, signs })
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn arity(&self) -> usize {
        self.signs.len()
    }

    /// `signs()[i]` is true when statement `i` appears unnegated. This is
    /// also the unique assignment satisfying the conjunction.
    pub fn signs(&self) -> &[bool] {
        &self.signs
    }

    pub fn is_satisfied_by(&self, values: &[bool]) -> bool {
        self.signs.len() == values.len() && self.signs.iter().zip(values).all(|(s, v)| s == v)
    }

    /// Renders the conjunction with the given variable names, e.g. `a & !b`.
    pub fn render<S: AsRef<str>>(&self, names: &[S]) -> String {
        self.signs
            .iter()
            .zip(names)
            .map(|(&s, n)| {
                if s {
                    n.as_ref().to_string()
                } else {
                    format!("!{}", n.as_ref())
                }
            })
            .collect::<Vec<_>>()
            .join(" & ")
    }
}

impl fmt::Display for Minterm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.arity()).map(|i| format!("l{i}")).collect();
        f.write_str(&self.render(&names))
    }
}

/// All `N = 2^n` minterms over `n` statements, in index order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MintermSet {
    arity: usize,
    minterms: Vec<Minterm>,
}

impl MintermSet {
    pub fn arity(&self) -> usize {
        self.arity
    }

    /// `N = 2^n`.
    pub fn len(&self) -> usize {
        self.minterms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.minterms.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&Minterm> {
        index.checked_sub(1).and_then(|i| self.minterms.get(i))
    }

    pub fn iter(&self) -> impl Iterator<Item = &Minterm> {
        self.minterms.iter()
    }
}

pub fn enumerate_minterms(n: usize) -> Result<MintermSet, LogicError> {
    if n == 0 || n > MAX_VARIABLES {
        return Err(LogicError::VariableCount(n));
    }
    let minterms = (1..=1usize << n)
        .map(|k| Minterm::from_index(k, n))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(MintermSet { arity: n, minterms })
}

/// Checks that `Λ₁ ∨ … ∨ Λ_N` holds under every one of the `2^n`
/// assignments.
///
/// The disjunction is true at an assignment iff some minterm's sign vector
/// equals it, so the sweep looks assignments up in the set of sign vectors
/// instead of evaluating all `N` conjunctions per assignment.
pub fn verify_tautology_of_all(set: &MintermSet) -> bool {
    let n = set.arity;
    let satisfied: HashSet<&[bool]> = set.minterms.iter().map(|m| m.signs()).collect();
    let mut values = vec![false; n];
    (0..1u64 << n).all(|bits| {
        for (i, v) in values.iter_mut().enumerate() {
            *v = (bits >> (n - 1 - i)) & 1 == 1;
        }
        satisfied.contains(values.as_slice())
    })
}

/// True iff no assignment satisfies both conjunctions. A minterm is not
/// exclusive with itself.
pub fn mutually_exclusive(a: &Minterm, b: &Minterm) -> Result<bool, LogicError> {
    if a.arity() != b.arity() {
        return Err(LogicError::MismatchedArity {
            left: a.arity(),
            right: b.arity(),
        });
    }
    // Each side has exactly one satisfying assignment: its sign vector.
    Ok(!b.is_satisfied_by(a.signs()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_statement() {
        let set = enumerate_minterms(1).unwrap();
        assert_eq!(set.len(), 2);
        assert_eq!(set.get(1).unwrap().signs(), &[true]);
        assert_eq!(set.get(2).unwrap().signs(), &[false]);
    }

    #[test]
    fn two_statement_order() {
        let set = enumerate_minterms(2).unwrap();
        let rendered: Vec<String> = set.iter().map(|m| m.render(&["l1", "l2"])).collect();
        assert_eq!(rendered, ["l1 & l2", "l1 & !l2", "!l1 & l2", "!l1 & !l2"]);
    }

    #[test]
    fn three_statements_unique_assignment() {
        let set = enumerate_minterms(3).unwrap();
        assert_eq!(set.len(), 8);
        for m in set.iter() {
            let hits = (0..8u32)
                .filter(|bits| {
                    let values: Vec<bool> = (0..3).map(|i| bits >> i & 1 == 1).collect();
                    m.is_satisfied_by(&values)
                })
                .count();
            assert_eq!(hits, 1, "minterm {}", m.index());
        }
    }

    #[test]
    fn range_guard() {
        assert_eq!(enumerate_minterms(0), Err(LogicError::VariableCount(0)));
        assert_eq!(enumerate_minterms(21), Err(LogicError::VariableCount(21)));
        assert!(Minterm::from_index(0, 2).is_err());
        assert!(Minterm::from_index(5, 2).is_err());
    }

    #[test]
    fn tautology_small() {
        for n in [1, 2, 5] {
            assert!(verify_tautology_of_all(&enumerate_minterms(n).unwrap()));
        }
    }

    #[test]
    fn incomplete_disjunction_is_not_tautology() {
        let mut set = enumerate_minterms(3).unwrap();
        set.minterms.pop();
        assert!(!verify_tautology_of_all(&set));
    }

    #[test]
    fn exclusivity() {
        let set = enumerate_minterms(2).unwrap();
        let m = |k| set.get(k).unwrap();
        assert!(mutually_exclusive(m(1), m(2)).unwrap());
        assert!(!mutually_exclusive(m(3), m(3)).unwrap());

        let four = enumerate_minterms(4).unwrap();
        for a in four.iter() {
            for b in four.iter() {
                assert_eq!(mutually_exclusive(a, b).unwrap(), a.index() != b.index());
            }
        }
    }

    #[test]
    fn exclusivity_arity_mismatch() {
        let a = Minterm::from_index(1, 2).unwrap();
        let b = Minterm::from_index(1, 3).unwrap();
        assert_eq!(
            mutually_exclusive(&a, &b),
            Err(LogicError::MismatchedArity { left: 2, right: 3 })
        );
    }
}

use super::{InterpretationError, Permutation};

/// The δ-function interpretation `I(k) = δ_{kl}`: statement-conjunction `l`
/// is true, every other one false.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CertainInterpretation {
    size: usize,
    true_index: usize,
}

impl CertainInterpretation {
    /// N.
    pub fn size(&self) -> usize {
        self.size
    }

    /// l.
    pub fn true_index(&self) -> usize {
        self.true_index
    }

    /// `I(k)`; zero for `k` outside `1..=N`.
    pub fn value(&self, k: usize) -> u8 {
        u8::from(k == self.true_index)
    }

    /// The truth table `[I(1), …, I(N)]`.
    pub fn truth_values(&self) -> Vec<u8> {
        (1..=self.size).map(|k| self.value(k)).collect()
    }
}

pub fn certain(l: usize, n: usize) -> Result<CertainInterpretation, InterpretationError> {
    if n < 2 {
        return Err(InterpretationError::TooFewStatements(n));
    }
    if l == 0 || l > n {
        return Err(InterpretationError::IndexOutOfRange { index: l, size: n });
    }
    Ok(CertainInterpretation {
        size: n,
        true_index: l,
    })
}

/// Moves the truth value along `perm`: the result is true at `perm(l)`.
pub fn apply_permutation(
    interp: &CertainInterpretation,
    perm: &Permutation,
) -> Result<CertainInterpretation, InterpretationError> {
    if perm.len() != interp.size {
        return Err(InterpretationError::SizeMismatch {
            left: interp.size,
            right: perm.len(),
        });
    }
    let l = perm.apply(interp.true_index).expect("index in range");
    certain(l, interp.size)
}

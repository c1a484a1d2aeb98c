use std::fmt;

use super::InterpretationError;

/// A bijection on `{1..N}`.
///
/// Images are stored 0-based; every public method speaks 1-based indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds from 1-based images: `images[i - 1] = π(i)`.
    pub fn from_images(images: &[usize]) -> Result<Self, InterpretationError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in images {
            if img == 0 || img > n || seen[img - 1] {
                return Err(InterpretationError::NotABijection(images.to_vec()));
            }
            seen[img - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|i| i - 1).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Swaps `i` and `j` (1-based).
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self, InterpretationError> {
        for idx in [i, j] {
            if idx == 0 || idx > n {
                return Err(InterpretationError::IndexOutOfRange {
                    index: idx,
                    size: n,
                });
            }
        }
        let mut p = Self::identity(n);
        p.images.swap(i - 1, j - 1);
        Ok(p)
    }

    /// The cycle `1 → 2 → … → N → 1`.
    pub fn cycle(n: usize) -> Self {
        Permutation {
            images: (0..n).map(|i| (i + 1) % n.max(1)).collect(),
        }
    }

    /// All `N!` permutations in lexicographic order of their images.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut current: Vec<usize> = (0..n).collect();
        let mut out = vec![Permutation {
            images: current.clone(),
        }];
        // next-permutation in lexicographic order
        loop {
            let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
                return out;
            };
            let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
            current.swap(i - 1, j);
            current[i..].reverse();
            out.push(Permutation {
                images: current.clone(),
            });
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// `π(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> Option<usize> {
        i.checked_sub(1)
            .and_then(|i| self.images.get(i))
            .map(|img| img + 1)
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, InterpretationError> {
        if self.len() != other.len() {
            return Err(InterpretationError::SizeMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Permutation { images }
    }

    /// Lengths of the disjoint cycles, fixed points included.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut seen = vec![false; self.len()];
        let mut lengths = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            lengths.push(len);
        }
        lengths
    }

    /// Group order: least common multiple of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycle_lengths()
            .into_iter()
            .fold(1u64, |acc, len| lcm(acc, len as u64))
    }

    /// `self` composed with itself `m` times, for any `m`.
    ///
    /// The exponent is first reduced modulo the order, then each cycle is
    /// advanced by the reduced exponent in one step.
    pub fn pow(&self, m: u64) -> Permutation {
        let order = self.order();
        let m = m % order;
        let mut images = vec![0; self.len()];
        let mut seen = vec![false; self.len()];
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.images[i];
            }
            let shift = (m % cycle.len() as u64) as usize;
            for (pos, &elem) in cycle.iter().enumerate() {
                images[elem] = cycle[(pos + shift) % cycle.len()];
            }
        }
        Permutation { images }
    }
}

pub fn permutation_power(perm: &Permutation, m: u64) -> Permutation {
    perm.pow(m)
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl fmt::Display for Permutation {
    /// One-line notation with 1-based images, e.g. `[2,1,3]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, img) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", img + 1)?;
        }
        f.write_str("]")
    }
}

//! Jordan–Wigner construction of the `2n` Majorana operators.

use num_complex::Complex64;

use super::linalg::CMat;
use super::{RegisterError, MAX_PAIRS};

/// One Majorana operator `gamma_index` on an `n`-pair register.
///
/// Hermitian, squares to the identity, and anticommutes with every other
/// index. The operator acts matrix-free (it is a permutation with phases);
/// [`MajoranaOperator::matrix`] materializes the dense form on demand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MajoranaOperator {
    n_pairs: usize,
    index: usize,
}

/// All `2n` Majorana operators in index order.
///
/// Construction: with `Z`-strings on the modes below pair `k`,
/// `gamma_{2k-1} = Z^(k-1) X I...` and `gamma_{2k} = Z^(k-1) Y I...`, acting
/// on occupation bit `k-1`. With `c_k = (gamma_{2k-1} + i gamma_{2k})/2`
/// this annihilates the all-zeros occupation string.
pub fn build_majoranas(n: usize) -> Result<Vec<MajoranaOperator>, RegisterError> {
    if n < 1 || n > MAX_PAIRS {
        return Err(RegisterError::PairCountOutOfRange { n });
    }
    Ok((1..=2 * n)
        .map(|index| MajoranaOperator { n_pairs: n, index })
        .collect())
}

impl MajoranaOperator {
    pub(super) fn unchecked(n_pairs: usize, index: usize) -> Self {
        MajoranaOperator { n_pairs, index }
    }

    pub fn new(n_pairs: usize, index: usize) -> Result<Self, RegisterError> {
        if n_pairs < 1 || n_pairs > MAX_PAIRS {
            return Err(RegisterError::PairCountOutOfRange { n: n_pairs });
        }
        if index < 1 || index > 2 * n_pairs {
            return Err(RegisterError::MajoranaIndexOutOfRange {
                index,
                max: 2 * n_pairs,
                n: n_pairs,
            });
        }
        Ok(MajoranaOperator { n_pairs, index })
    }

    /// 1-based Majorana index in `[1, 2n]`.
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn n_pairs(&self) -> usize {
        self.n_pairs
    }

    pub fn dim(&self) -> usize {
        1 << self.n_pairs
    }

    /// `gamma |b> = phase * |b ^ mask>`: the image index and phase for one
    /// basis state.
    pub fn action(&self, basis: usize) -> (usize, Complex64) {
        let pair = (self.index + 1) / 2; // 1-based pair
        let bit = pair - 1;
        let mask = 1usize << bit;
        let string_mask = mask - 1;
        let jw = if ((basis & string_mask).count_ones()) % 2 == 0 {
            1.0
        } else {
            -1.0
        };
        let phase = if self.index % 2 == 1 {
            // X-type
            Complex64::new(jw, 0.0)
        } else {
            // Y-type: Y|0> = i|1>, Y|1> = -i|0>
            let sign = if basis & mask == 0 { 1.0 } else { -1.0 };
            Complex64::new(0.0, jw * sign)
        };
        (basis ^ mask, phase)
    }

    /// Apply to an amplitude vector.
    pub fn apply(&self, amps: &[Complex64]) -> Vec<Complex64> {
        let dim = self.dim();
        assert_eq!(amps.len(), dim);
        let mut out = vec![Complex64::new(0.0, 0.0); dim];
        for (b, &amp) in amps.iter().enumerate() {
            let (target, phase) = self.action(b);
            out[target] = phase * amp;
        }
        out
    }

    /// Dense matrix; `O(4^n)` memory, intended for algebra checks at small n.
    pub fn matrix(&self) -> CMat {
        let dim = self.dim();
        let mut m = CMat::zeros(dim);
        for b in 0..dim {
            let (target, phase) = self.action(b);
            m[(target, b)] = phase;
        }
        m
    }
}

//! Braid generators, word application, and Majorana conjugation.

use num_complex::Complex64;

use super::linalg::CMat;
use super::majorana::MajoranaOperator;
use super::state::MajoranaRegister;
use super::{RegisterError, MAX_PAIRS};
use crate::braid::BraidWord;

/// Exchange generator `T_site = exp(+-(pi/4) gamma_{site+1} gamma_site)
/// = (1 +- gamma_{site+1} gamma_site)/sqrt2`, eigenvalues `e^{+-i pi/4}`.
///
/// The closed form holds because `(gamma_{site+1} gamma_site)^2 = -1`. An
/// odd site pairs the two Majoranas of one mode (the generator is diagonal
/// there); an even site straddles two modes and mixes two occupation bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BraidGenerator {
    n_pairs: usize,
    site: usize,
    inverse: bool,
}

pub fn braid_generator(
    n: usize,
    site: usize,
    inverse: bool,
) -> Result<BraidGenerator, RegisterError> {
    if n < 1 || n > MAX_PAIRS {
        return Err(RegisterError::PairCountOutOfRange { n });
    }
    if site < 1 || site > 2 * n - 1 {
        return Err(RegisterError::SiteOutOfRange {
            site,
            max: 2 * n - 1,
            n,
        });
    }
    Ok(BraidGenerator {
        n_pairs: n,
        site,
        inverse,
    })
}

impl BraidGenerator {
    pub fn site(&self) -> usize {
        self.site
    }

    pub fn inverse(&self) -> bool {
        self.inverse
    }

    pub fn n_pairs(&self) -> usize {
        self.n_pairs
    }

    pub fn dim(&self) -> usize {
        1 << self.n_pairs
    }

    /// Apply in place to an amplitude vector.
    pub fn apply_in_place(&self, amps: &mut [Complex64]) {
        debug_assert_eq!(amps.len(), self.dim());
        let inv = 1.0 / std::f64::consts::SQRT_2;
        // Gamma = gamma_{site+1} gamma_site
        if self.site % 2 == 1 {
            // within pair k: Gamma|b> = -i (-1)^{b_{k-1}} |b>
            let bit = (self.site - 1) / 2;
            // T = (1 -+ i (-1)^{b}) / sqrt2 = e^{-+ i pi/4 (-1)^{b}}
            let (phase_empty, phase_occupied) = if !self.inverse {
                (
                    Complex64::new(inv, -inv), // e^{-i pi/4}
                    Complex64::new(inv, inv),
                )
            } else {
                (Complex64::new(inv, inv), Complex64::new(inv, -inv))
            };
            for (b, amp) in amps.iter_mut().enumerate() {
                *amp *= if b >> bit & 1 == 0 {
                    phase_empty
                } else {
                    phase_occupied
                };
            }
        } else {
            // across pairs k, k+1: Gamma|b> = -i |b ^ mask>, the Z-strings
            // cancel and two occupation bits flip together
            let k = self.site / 2;
            let mask = (1usize << (k - 1)) | (1usize << k);
            let gamma_phase = if !self.inverse {
                Complex64::new(0.0, -1.0)
            } else {
                Complex64::new(0.0, 1.0)
            };
            for b in 0..amps.len() {
                let partner = b ^ mask;
                if partner < b {
                    continue;
                }
                let (x, y) = (amps[b], amps[partner]);
                amps[b] = (x + gamma_phase * y) * inv;
                amps[partner] = (y + gamma_phase * x) * inv;
            }
        }
    }

    /// Dense unitary matrix (for algebra checks at small n).
    pub fn matrix(&self) -> CMat {
        let dim = self.dim();
        let mut m = CMat::zeros(dim);
        let mut col = vec![Complex64::new(0.0, 0.0); dim];
        for b in 0..dim {
            col.iter_mut().for_each(|c| *c = Complex64::new(0.0, 0.0));
            col[b] = Complex64::new(1.0, 0.0);
            self.apply_in_place(&mut col);
            for (r, &v) in col.iter().enumerate() {
                m[(r, b)] = v;
            }
        }
        m
    }
}

/// Apply a braid word to a register, leftmost letter first.
pub fn apply_braid(
    state: &MajoranaRegister,
    word: &BraidWord,
) -> Result<MajoranaRegister, RegisterError> {
    let n = state.n_pairs();
    let mut amps = state.amplitudes().to_vec();
    for letter in word.letters() {
        let generator = braid_generator(n, letter.site, letter.inverse)?;
        generator.apply_in_place(&mut amps);
    }
    MajoranaRegister::from_amplitudes(n, amps)
}

/// Conjugate `gamma_k` by the word's unitary, `U gamma_k U^dag`, through
/// matrix conjugation, and identify the image as a signed Majorana.
///
/// Returns `(j, sign)` with `U gamma_k U^dag = sign * gamma_j` to `1e-10`.
/// For a single generator at site `i`: `k = i` maps to `(i+1, +)`,
/// `k = i+1` maps to `(i, -)`, anything else is fixed.
pub fn conjugate_majorana(
    n: usize,
    word: &BraidWord,
    k: usize,
) -> Result<(usize, i8), RegisterError> {
    let gamma = MajoranaOperator::new(n, k)?;
    let dim = gamma.dim();

    // columns of M as states: M <- T M T^dag letter by letter
    let mut m = gamma.matrix();
    for letter in word.letters() {
        let t = braid_generator(n, letter.site, letter.inverse)?;
        m = conjugate_by_generator(&m, &t);
    }

    // match against +-gamma_j
    let mut best: Option<(usize, f64)> = None;
    for j in 1..=2 * n {
        let candidate = MajoranaOperator::unchecked(n, j);
        for sign in [1i8, -1i8] {
            let mut deviation = 0.0f64;
            for b in 0..dim {
                let (target, phase) = candidate.action(b);
                for r in 0..dim {
                    let expected = if r == target {
                        phase * sign as f64
                    } else {
                        Complex64::new(0.0, 0.0)
                    };
                    deviation = deviation.max((m[(r, b)] - expected).norm());
                }
            }
            if deviation <= 1e-10 {
                return Ok((j, sign));
            }
            if best.map_or(true, |(_, d)| deviation < d) {
                best = Some((j, deviation));
            }
        }
    }
    let (closest_index, deviation) = best.expect("at least one candidate evaluated");
    Err(RegisterError::NotASingleMajorana {
        closest_index,
        deviation,
    })
}

/// `T M T^dag` with matrix-free generator application: `T M` column by
/// column, then `(T (T M)^dag)^dag` for the right factor.
fn conjugate_by_generator(m: &CMat, t: &BraidGenerator) -> CMat {
    let applied_left = apply_to_columns(m, t);
    let adj = applied_left.adjoint();
    apply_to_columns(&adj, t).adjoint()
}

fn apply_to_columns(m: &CMat, t: &BraidGenerator) -> CMat {
    let dim = m.dim();
    let mut out = CMat::zeros(dim);
    let mut col = vec![Complex64::new(0.0, 0.0); dim];
    for c in 0..dim {
        for r in 0..dim {
            col[r] = m[(r, c)];
        }
        t.apply_in_place(&mut col);
        for (r, &v) in col.iter().enumerate() {
            out[(r, c)] = v;
        }
    }
    out
}

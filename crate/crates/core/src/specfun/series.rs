//! Power-series evaluation for small arguments.
//!
//! All series are written with the term recurrences
//!
//! ```text
//! J0:  sum (-q)^m / (m!)^2,  q = (x/2)^2
//! J1:  (x/2) sum (-q)^m / (m! (m+1)!)
//! Y0:  (2/pi) [ (ln(x/2)+g) J0 + sum_{m>=1} (-1)^{m+1} H_m q^m/(m!)^2 ]
//! Y1:  (2/pi) [ (ln(x/2)+g) J1 - 1/x - (x/4) sum_{m>=0} (-1)^m (H_m+H_{m+1}) q^m/(m!(m+1)!) ]
//! ```
//!
//! and the same with all-positive terms for `I0`, `I1`, `K0`, `K1`. The
//! alternating `J`/`Y` sums are compensated (Kahan) so roundoff growth near
//! the regime boundary stays at `~eps * I0(x)` rather than picking up an
//! extra factor of the term count.

/// Euler–Mascheroni constant.
pub(crate) const EULER_GAMMA: f64 = 0.5772156649015328606065120900824024;

const TERM_CUTOFF: f64 = 1e-18;
const MAX_TERMS: usize = 400;

/// Compensated accumulator.
struct Kahan {
    sum: f64,
    carry: f64,
}

impl Kahan {
    fn new(first: f64) -> Self {
        Kahan {
            sum: first,
            carry: 0.0,
        }
    }

    fn add(&mut self, x: f64) {
        let y = x - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }
}

pub(super) fn j0_series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut acc = Kahan::new(term);
    for m in 1..=MAX_TERMS {
        term *= -q / ((m * m) as f64);
        acc.add(term);
        if term.abs() <= TERM_CUTOFF * acc.sum.abs() + f64::MIN_POSITIVE {
            break;
        }
    }
    acc.sum
}

pub(super) fn j1_series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut acc = Kahan::new(term);
    for m in 1..=MAX_TERMS {
        term *= -q / ((m * (m + 1)) as f64);
        acc.add(term);
        if term.abs() <= TERM_CUTOFF * acc.sum.abs() + f64::MIN_POSITIVE {
            break;
        }
    }
    0.5 * x * acc.sum
}

pub(super) fn y0_series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0f64;
    let mut harmonic = 0.0f64;
    let mut acc = Kahan::new(0.0);
    for m in 1..=MAX_TERMS {
        term *= q / ((m * m) as f64);
        harmonic += 1.0 / m as f64;
        let contrib = if m % 2 == 1 {
            term * harmonic
        } else {
            -term * harmonic
        };
        acc.add(contrib);
        if term * harmonic <= TERM_CUTOFF * acc.sum.abs().max(1e-30) + f64::MIN_POSITIVE {
            break;
        }
    }
    std::f64::consts::FRAC_2_PI * (((0.5 * x).ln() + EULER_GAMMA) * j0_series(x) + acc.sum)
}

pub(super) fn y1_series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0f64;
    let mut h_m = 0.0f64;
    let mut h_m1 = 1.0f64;
    let mut acc = Kahan::new(term * (h_m + h_m1));
    for m in 1..=MAX_TERMS {
        term *= q / ((m * (m + 1)) as f64);
        h_m += 1.0 / m as f64;
        h_m1 += 1.0 / (m + 1) as f64;
        let magnitude = term * (h_m + h_m1);
        acc.add(if m % 2 == 0 { magnitude } else { -magnitude });
        if magnitude <= TERM_CUTOFF * acc.sum.abs().max(1e-30) + f64::MIN_POSITIVE {
            break;
        }
    }
    std::f64::consts::FRAC_2_PI
        * (((0.5 * x).ln() + EULER_GAMMA) * j1_series(x) - 1.0 / x - 0.25 * x * acc.sum)
}

pub(super) fn i0_series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for m in 1..=1200usize {
        term *= q / ((m * m) as f64);
        sum += term;
        if term <= TERM_CUTOFF * sum {
            break;
        }
    }
    sum
}

pub(super) fn i1_series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for m in 1..=1200usize {
        term *= q / ((m * (m + 1)) as f64);
        sum += term;
        if term <= TERM_CUTOFF * sum {
            break;
        }
    }
    0.5 * x * sum
}

pub(super) fn k0_series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0f64;
    let mut harmonic = 0.0f64;
    let mut sum = 0.0f64;
    for m in 1..=MAX_TERMS {
        term *= q / ((m * m) as f64);
        harmonic += 1.0 / m as f64;
        sum += term * harmonic;
        if term * harmonic <= TERM_CUTOFF * sum.max(1e-30) {
            break;
        }
    }
    -((0.5 * x).ln() + EULER_GAMMA) * i0_series(x) + sum
}

pub(super) fn k1_series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0f64;
    let mut h_m = 0.0f64;
    let mut h_m1 = 1.0f64;
    let mut sum = term * (h_m + h_m1);
    for m in 1..=MAX_TERMS {
        term *= q / ((m * (m + 1)) as f64);
        h_m += 1.0 / m as f64;
        h_m1 += 1.0 / (m + 1) as f64;
        sum += term * (h_m + h_m1);
        if term * (h_m + h_m1) <= TERM_CUTOFF * sum.abs().max(1e-30) {
            break;
        }
    }
    ((0.5 * x).ln() + EULER_GAMMA) * i1_series(x) + 1.0 / x - 0.25 * x * sum
}

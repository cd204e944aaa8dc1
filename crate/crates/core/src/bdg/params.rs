//! Superfluid parameters and the radial sampling grid.

use super::BdgError;

/// Parameters of the p-wave superfluid, in units with `hbar = 1`.
///
/// `mu` carries the phase information: positive is weak pairing (the
/// topological side hosting the zero mode), negative is strong pairing.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams {
    mass: f64,
    mu: f64,
    delta0: f64,
    p_fermi: f64,
    xi: f64,
}

impl PhysicalParams {
    pub fn new(mass: f64, mu: f64, delta0: f64, p_fermi: f64, xi: f64) -> Result<Self, BdgError> {
        let all_finite = [mass, mu, delta0, p_fermi, xi].iter().all(|v| v.is_finite());
        if !all_finite {
            return Err(BdgError::InvalidParams {
                reason: "all parameters must be finite".into(),
            });
        }
        if !(mass > 0.0) || !(delta0 > 0.0) || !(p_fermi > 0.0) || !(xi > 0.0) {
            return Err(BdgError::InvalidParams {
                reason: format!(
                    "mass, delta0, p_fermi, xi must be positive (got {mass}, {delta0}, {p_fermi}, {xi})"
                ),
            });
        }
        Ok(PhysicalParams {
            mass,
            mu,
            delta0,
            p_fermi,
            xi,
        })
    }

    /// Same superfluid with a different chemical potential.
    pub fn with_mu(&self, mu: f64) -> Result<Self, BdgError> {
        Self::new(self.mass, mu, self.delta0, self.p_fermi, self.xi)
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn delta0(&self) -> f64 {
        self.delta0
    }

    pub fn p_fermi(&self) -> f64 {
        self.p_fermi
    }

    pub fn xi(&self) -> f64 {
        self.xi
    }

    /// Fermi velocity `p_F / m`.
    pub fn v_fermi(&self) -> f64 {
        self.p_fermi / self.mass
    }

    /// Fermi energy `p_F^2 / 2m`.
    pub fn eps_fermi(&self) -> f64 {
        self.p_fermi * self.p_fermi / (2.0 * self.mass)
    }

    /// Exterior envelope rate `Delta0 / v_F`.
    pub fn gap_decay_rate(&self) -> f64 {
        self.delta0 / self.v_fermi()
    }

    /// `kappa^2 = 2 m mu - (Delta0/v_F)^2`; sign selects the exterior branch.
    pub fn kappa_squared(&self) -> f64 {
        let r = self.gap_decay_rate();
        2.0 * self.mass * self.mu - r * r
    }
}

/// Radial sampling specification for profile output.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub n_points: usize,
    pub rho_min: f64,
    pub rho_max: f64,
}

impl GridSpec {
    pub fn new(n_points: usize, rho_min: f64, rho_max: f64) -> Result<Self, BdgError> {
        if n_points < 2 {
            return Err(BdgError::InvalidGrid {
                reason: format!("need at least 2 points, got {n_points}"),
            });
        }
        if !(rho_min > 0.0) || !(rho_max > rho_min) || !rho_max.is_finite() {
            return Err(BdgError::InvalidGrid {
                reason: format!("need 0 < rho_min < rho_max finite, got [{rho_min}, {rho_max}]"),
            });
        }
        Ok(GridSpec {
            n_points,
            rho_min,
            rho_max,
        })
    }

    /// 2000 log-spaced samples over `[1e-4 xi, 40 max(xi, v_F/Delta0)]`,
    /// resolving both the core and the exponential tail.
    pub fn default_for(params: &PhysicalParams) -> Self {
        let tail_scale = params.xi().max(1.0 / params.gap_decay_rate());
        GridSpec {
            n_points: 2000,
            rho_min: 1e-4 * params.xi(),
            rho_max: 40.0 * tail_scale,
        }
    }

    /// Log-spaced sample positions.
    pub fn points(&self) -> Vec<f64> {
        let ratio = self.rho_max / self.rho_min;
        (0..self.n_points)
            .map(|i| self.rho_min * ratio.powf(i as f64 / (self.n_points - 1) as f64))
            .collect()
    }
}

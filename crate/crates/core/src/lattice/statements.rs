use num_complex::Complex;

use crate::scalar::Real;

use super::{ComplexMatrix, LatticeError};

/// `L` sites and the position-statement constant `K`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatticeConfig<T> {
    sites: usize,
    k_const: T,
}

impl<T: Real> LatticeConfig<T> {
    pub fn new(sites: usize, k_const: T) -> Result<Self, LatticeError> {
        if sites < 2 {
            return Err(LatticeError::TooFewSites(sites));
        }
        if !(k_const.is_finite() && k_const > T::zero()) {
            return Err(LatticeError::NonPositiveK(
                k_const.to_f64().unwrap_or(f64::NAN),
            ));
        }
        Ok(LatticeConfig { sites, k_const })
    }

    /// `K = 1`.
    pub fn with_sites(sites: usize) -> Result<Self, LatticeError> {
        Self::new(sites, T::one())
    }

    pub fn sites(&self) -> usize {
        self.sites
    }

    pub fn k_const(&self) -> T {
        self.k_const
    }
}

/// Common access to the two kinds of statement matrix.
pub trait StatementMatrix<T: Real>: Sized {
    fn config(&self) -> &LatticeConfig<T>;
    fn matrix(&self) -> &ComplexMatrix<T>;
    /// Relabels sites by `q → q + δq (mod L)`.
    fn translate(&self, delta: i64) -> Self;
}

/// `Λ_p` for lattice mode `k` (wavelength `L/k`).
#[derive(Debug, Clone, PartialEq)]
pub struct MomentumStatement<T> {
    config: LatticeConfig<T>,
    mode: usize,
    matrix: ComplexMatrix<T>,
}

impl<T: Real> MomentumStatement<T> {
    pub fn mode(&self) -> usize {
        self.mode
    }
}

impl<T: Real> StatementMatrix<T> for MomentumStatement<T> {
    fn config(&self) -> &LatticeConfig<T> {
        &self.config
    }

    fn matrix(&self) -> &ComplexMatrix<T> {
        &self.matrix
    }

    fn translate(&self, delta: i64) -> Self {
        MomentumStatement {
            config: self.config,
            mode: self.mode,
            matrix: self.matrix.shift_sites(delta),
        }
    }
}

/// `Λ_{q₀}`: `K` at `(q₀, q₀)`, zero elsewhere.
#[derive(Debug, Clone, PartialEq)]
pub struct PositionStatement<T> {
    config: LatticeConfig<T>,
    site: usize,
    matrix: ComplexMatrix<T>,
}

impl<T: Real> PositionStatement<T> {
    pub fn site(&self) -> usize {
        self.site
    }
}

impl<T: Real> StatementMatrix<T> for PositionStatement<T> {
    fn config(&self) -> &LatticeConfig<T> {
        &self.config
    }

    fn matrix(&self) -> &ComplexMatrix<T> {
        &self.matrix
    }

    fn translate(&self, delta: i64) -> Self {
        let sites = self.config.sites as i64;
        PositionStatement {
            config: self.config,
            site: (self.site as i64 + delta).rem_euclid(sites) as usize,
            matrix: self.matrix.shift_sites(delta),
        }
    }
}

/// `exp(2πi·r/L)` with `r` reduced mod `L` first, which keeps the angle
/// in `[0, 2π)` and the rounding independent of the lattice position.
fn root_of_unity<T: Real>(r: i64, sites: usize) -> Complex<T> {
    let r = r.rem_euclid(sites as i64);
    let angle = T::TAU() * T::from_i64(r).unwrap() / T::from_usize(sites).unwrap();
    Complex::new(angle.cos(), angle.sin())
}

/// `ψ_k(q) = exp(2πi·k·q/L)`.
pub fn plane_wave<T: Real>(sites: usize, mode: usize) -> Vec<Complex<T>> {
    (0..sites)
        .map(|q| root_of_unity((mode * q) as i64, sites))
        .collect()
}

/// `ψ_j† ψ_k`.
pub fn mode_overlap<T: Real>(sites: usize, j: usize, k: usize) -> Complex<T> {
    let (a, b) = (plane_wave::<T>(sites, j), plane_wave::<T>(sites, k));
    a.iter()
        .zip(&b)
        .map(|(x, y)| x.conj() * y)
        .fold(Complex::new(T::zero(), T::zero()), |s, t| s + t)
}

pub fn build_momentum_statement<T: Real>(
    config: LatticeConfig<T>,
    mode: usize,
) -> Result<MomentumStatement<T>, LatticeError> {
    let sites = config.sites;
    if mode >= sites {
        return Err(LatticeError::ModeOutOfRange { mode, sites });
    }
    let scale = T::one() / T::from_usize(sites).unwrap();
    let k = mode as i64;
    let matrix = ComplexMatrix::from_fn(sites, |q2, q| {
        root_of_unity::<T>(k * (q2 as i64 - q as i64), sites) * scale
    });
    Ok(MomentumStatement {
        config,
        mode,
        matrix,
    })
}

pub fn build_position_statement<T: Real>(
    config: LatticeConfig<T>,
    site: usize,
) -> Result<PositionStatement<T>, LatticeError> {
    let sites = config.sites;
    if site >= sites {
        return Err(LatticeError::SiteOutOfRange { site, sites });
    }
    let k = Complex::new(config.k_const, T::zero());
    let zero = Complex::new(T::zero(), T::zero());
    let matrix =
        ComplexMatrix::from_fn(sites, |r, c| if r == site && c == site { k } else { zero });
    Ok(PositionStatement {
        config,
        site,
        matrix,
    })
}

/// `‖Λ·Λ − Λ‖_max`: conjunction of a statement with itself, represented by
/// the matrix product, must give the statement back.
pub fn verify_idempotent<T: Real>(statement: &MomentumStatement<T>) -> T {
    let m = &statement.matrix;
    m.mul(m).sub(m).max_norm()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenReport<T> {
    /// `max |Λψ_k − ψ_k|`.
    pub fixed_deviation: T,
    /// `max_{j≠k} max |Λψ_j|`.
    pub annihilated_deviation: T,
}

impl<T: Real> EigenReport<T> {
    pub fn max_deviation(&self) -> T {
        self.fixed_deviation.max(self.annihilated_deviation)
    }
}

pub fn eigenvector_check<T: Real>(statement: &MomentumStatement<T>) -> EigenReport<T> {
    let sites = statement.config.sites;
    let max_abs = |v: &[Complex<T>]| v.iter().map(|z| z.norm()).fold(T::zero(), T::max);
    let mut fixed_deviation = T::zero();
    let mut annihilated_deviation = T::zero();
    for j in 0..sites {
        let psi = plane_wave::<T>(sites, j);
        let image = statement.matrix.mul_vec(&psi);
        if j == statement.mode {
            let diff: Vec<_> = image.iter().zip(&psi).map(|(&a, &b)| a - b).collect();
            fixed_deviation = max_abs(&diff);
        } else {
            annihilated_deviation = annihilated_deviation.max(max_abs(&image));
        }
    }
    EigenReport {
        fixed_deviation,
        annihilated_deviation,
    }
}

fn same_lattice<T: Real>(a: &LatticeConfig<T>, b: &LatticeConfig<T>) -> Result<(), LatticeError> {
    if a == b {
        Ok(())
    } else {
        Err(LatticeError::ConfigMismatch)
    }
}

/// `‖A·B − B·A‖_max`.
pub fn commutator_norm<T: Real, A, B>(a: &A, b: &B) -> Result<T, LatticeError>
where
    A: StatementMatrix<T>,
    B: StatementMatrix<T>,
{
    same_lattice(a.config(), b.config())?;
    let (ma, mb) = (a.matrix(), b.matrix());
    Ok(ma.mul(mb).sub(&mb.mul(ma)).max_norm())
}

/// `w = Σ_{q,q′} Λ_p(q, q′)·Λ_{q₀}(q′, q)`, the trace of the product.
pub fn joint_probability<T: Real, A, B>(a: &A, b: &B) -> Result<T, LatticeError>
where
    A: StatementMatrix<T>,
    B: StatementMatrix<T>,
{
    same_lattice(a.config(), b.config())?;
    Ok(a.matrix().trace_of_product(b.matrix()).re)
}

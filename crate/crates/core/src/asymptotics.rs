//! Floating-point asymptotic formulas and the special functions they need.

use std::f64::consts::{LN_2, PI};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::ToPrimitive;
use thiserror::Error;

/// Euler–Mascheroni constant (30 significant digits; `f64` keeps ~17).
pub const EULER_GAMMA: f64 = 0.577215664901532860606512090082;

/// Default number of Fourier harmonics in the register fluctuation.
pub const DEFAULT_HARMONICS: u32 = 20;

#[derive(Debug, Error, PartialEq)]
pub enum SpecialFunctionError {
    #[error("Gamma has a pole at {0}")]
    GammaPole(f64),
    #[error("zeta has a pole at s = 1")]
    ZetaPole,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AsymptoticParams {
    pub colours: u64,
    pub harmonics: u32,
}

impl AsymptoticParams {
    pub fn new(colours: u64) -> Self {
        AsymptoticParams { colours, harmonics: DEFAULT_HARMONICS }
    }

    pub fn with_harmonics(mut self, k: u32) -> Self {
        self.harmonics = k;
        self
    }

    /// `A = a + 4`, the reciprocal of the dominant singularity.
    pub fn big_a(&self) -> f64 {
        (self.colours + 4) as f64
    }

    /// `chi_k = 2 k pi i / log 2`.
    pub fn chi(k: i64) -> Complex64 {
        Complex64::new(0.0, 2.0 * PI * k as f64 / LN_2)
    }
}

/// `ln` of `A^(n+1/2) / (2 sqrt(pi) n^(3/2))` with `A = a + 4`.
pub fn ln_asym_count(n: u64, a: u64) -> f64 {
    let n = n as f64;
    let big_a = (a + 4) as f64;
    (n + 0.5) * big_a.ln() - (2.0 * PI.sqrt()).ln() - 1.5 * n.ln()
}

/// `A^(n+1/2) / (2 sqrt(pi) n^(3/2))`; overflows to infinity once the value
/// leaves the `f64` range, use [`ln_asym_count`] there.
pub fn asym_count(n: u64, a: u64) -> f64 {
    ln_asym_count(n, a).exp()
}

/// Natural logarithm of a positive big integer.
pub fn ln_big(x: &BigInt) -> f64 {
    let bits = x.bits();
    let shift = bits.saturating_sub(64);
    let top: BigInt = x >> shift;
    top.to_f64().expect("64-bit value").ln() + shift as f64 * LN_2
}

/// `asym_count / exact - 1`, computed without overflow.
pub fn count_relative_error(n: u64, a: u64, exact: &BigInt) -> f64 {
    (ln_asym_count(n, a) - ln_big(exact)).exp_m1()
}

/// The register-mean expansion without its periodic part.
pub fn smooth_mean_register(n: u64, a: u64) -> f64 {
    let n = n as f64;
    let big_a = (a + 4) as f64;
    n.ln() / (2.0 * LN_2) - EULER_GAMMA / (2.0 * LN_2) - 1.0 / LN_2 + 1.5 + PI.ln() / LN_2 - big_a.ln() / (2.0 * LN_2)
}

/// Mean register of trees with `n` nodes: smooth part plus the fluctuation
/// at `log_4 n` with `harmonics` Fourier terms.
pub fn asym_mean_register(n: u64, a: u64, harmonics: u32) -> f64 {
    let x = (n as f64).ln() / (2.0 * LN_2);
    smooth_mean_register(n, a) + fluctuation_psi(x, a, harmonics)
}

/// Fourier coefficient of `e^(2 pi i k x)` in the fluctuation, `k >= 1`.
/// The coefficient of `-k` is its conjugate.
pub fn fluctuation_coefficient(k: i64, a: u64) -> Complex64 {
    let chi = AsymptoticParams::chi(k);
    let big_a = (a + 4) as f64;
    let gamma_chi = complex_gamma(chi).expect("chi_k is not a pole");
    let zeta_chi = riemann_zeta(chi).expect("chi_k != 1");
    let gamma_half = complex_gamma((chi - 1.0) / 2.0).expect("(chi_k - 1)/2 is not a pole");
    let a_pow = (-chi / 2.0 * big_a.ln()).exp();
    let scale = 4.0 * PI.sqrt() / LN_2;
    gamma_chi * zeta_chi / gamma_half * a_pow * scale
}

/// `psi(x) = Re sum_{0<|k|<=K} c_k e^(2 pi i k x)`, 1-periodic with mean 0.
pub fn fluctuation_psi(x: f64, a: u64, harmonics: u32) -> f64 {
    let frac = x - x.floor();
    (1..=harmonics as i64)
        .map(|k| {
            let c = fluctuation_coefficient(k, a);
            let phase = Complex64::from_polar(1.0, 2.0 * PI * k as f64 * frac);
            2.0 * (c * phase).re
        })
        .sum()
}

/// `2 sum_{k<=K} |c_k|`, an upper bound for `|psi|`.
pub fn fluctuation_bound(a: u64, harmonics: u32) -> f64 {
    (1..=harmonics as i64).map(|k| 2.0 * fluctuation_coefficient(k, a).norm()).sum()
}

/// Lanczos coefficients for `g = 7`, nine terms.
const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// `ln Gamma(s)` on some branch (only its exponential is meaningful).
pub fn complex_ln_gamma(s: Complex64) -> Result<Complex64, SpecialFunctionError> {
    if s.im == 0.0 && s.re <= 0.0 && s.re.fract() == 0.0 {
        return Err(SpecialFunctionError::GammaPole(s.re));
    }
    if s.re < 0.5 {
        // reflection: Gamma(s) Gamma(1-s) = pi / sin(pi s)
        let rest = complex_ln_gamma(Complex64::new(1.0, 0.0) - s)?;
        return Ok(Complex64::new(PI.ln(), 0.0) - ln_sin_pi(s) - rest);
    }
    let z = s - 1.0;
    let mut t = Complex64::new(LANCZOS[0], 0.0);
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        t += *c / (z + i as f64);
    }
    let w = z + LANCZOS_G + 0.5;
    Ok(0.5 * (2.0 * PI).ln() + (z + 0.5) * w.ln() - w + t.ln())
}

/// `ln sin(pi s)`, written to avoid overflow when `|Im s|` is large.
fn ln_sin_pi(s: Complex64) -> Complex64 {
    let i = Complex64::i();
    if s.im.abs() < 1.0 {
        return (s * PI).sin().ln();
    }
    // sin(pi s) = -e^(-i pi s) (1 - e^(2 i pi s)) / (2i) for Im s > 0,
    // and the mirrored identity below the axis.
    if s.im > 0.0 {
        let tail = (1.0 - (2.0 * i * PI * s).exp()).ln();
        Complex64::new(-LN_2, PI / 2.0) - i * PI * s + tail
    } else {
        let tail = (1.0 - (-2.0 * i * PI * s).exp()).ln();
        Complex64::new(-LN_2, -PI / 2.0) + i * PI * s + tail
    }
}

/// `Gamma(s)` for complex `s` (Lanczos with reflection).
pub fn complex_gamma(s: Complex64) -> Result<Complex64, SpecialFunctionError> {
    complex_ln_gamma(s).map(|l| l.exp())
}

/// `B_(2k) / (2k)!` for `k = 1 ..= 15`.
#[allow(clippy::excessive_precision)]
const BERNOULLI_OVER_FACTORIAL: [f64; 15] = [
    8.33333333333333287e-02,
    -1.38888888888888894e-03,
    3.30687830687830710e-05,
    -8.26719576719576754e-07,
    2.08767569878681002e-08,
    -5.28419013868749322e-10,
    1.33825365306846789e-11,
    -3.38968029632258272e-13,
    8.58606205627784517e-15,
    -2.17486869855806192e-16,
    5.50900282836022953e-18,
    -1.39544646858125223e-19,
    3.53470703962946728e-21,
    -8.95351742703754628e-23,
    2.26795245233768293e-24,
];

/// Riemann zeta by Euler–Maclaurin summation, cut off at
/// `N = ceil(|Im s|) + 20` terms so the correction series converges fast.
/// Left of the imaginary axis the functional equation maps the argument to
/// `1 - s`, where the partial sum does not cancel.
pub fn riemann_zeta(s: Complex64) -> Result<Complex64, SpecialFunctionError> {
    if s == Complex64::new(1.0, 0.0) {
        return Err(SpecialFunctionError::ZetaPole);
    }
    if s.re < 0.0 {
        let one_minus = Complex64::new(1.0, 0.0) - s;
        let factor = Complex64::new(2.0, 0.0).powc(s)
            * Complex64::new(PI, 0.0).powc(s - 1.0)
            * (s * PI / 2.0).sin()
            * complex_gamma(one_minus)?;
        return Ok(factor * riemann_zeta(one_minus)?);
    }
    let big_n = (s.im.abs().ceil() as usize) + 20;
    let nf = big_n as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    for n in 1..big_n {
        sum += (-s * (n as f64).ln()).exp();
    }
    let n_pow = (-s * nf.ln()).exp();
    sum += n_pow * nf / (s - 1.0) + n_pow * 0.5;
    // rising factorial s (s+1) ... (s+2k-2) times N^(-s-2k+1)
    let mut rising = s;
    let mut term_pow = n_pow / nf;
    for (k, b) in BERNOULLI_OVER_FACTORIAL.iter().enumerate() {
        sum += rising * term_pow * *b;
        let m = 2.0 * k as f64 + 1.0;
        rising *= (s + m) * (s + m + 1.0);
        term_pow /= nf * nf;
    }
    Ok(sum)
}

/// Leading-order mean leaf count, `n / 10`.
pub fn asym_mean_leaves(n: u64) -> f64 {
    n as f64 / 10.0
}

/// Leading-order mean height, `(2/sqrt 5) sqrt(pi n)`.
pub fn asym_mean_height(n: u64) -> f64 {
    2.0 / 5f64.sqrt() * (PI * n as f64).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn gamma_basics() {
        assert!((complex_gamma(c(1.0, 0.0)).unwrap() - 1.0).norm() < 1e-13);
        assert!((complex_gamma(c(0.5, 0.0)).unwrap() - PI.sqrt()).norm() < 1e-13);
        assert!((complex_gamma(c(5.0, 0.0)).unwrap() - 24.0).norm() < 1e-10);
        assert!((complex_gamma(c(-0.5, 0.0)).unwrap() + 2.0 * PI.sqrt()).norm() < 1e-12);
        assert!(complex_gamma(c(-2.0, 0.0)).is_err());
        assert!(complex_gamma(c(0.0, 0.0)).is_err());
    }

    #[test]
    fn gamma_on_imaginary_axis_has_known_modulus() {
        for t in [0.5, 3.0, 9.06, 40.0, 181.0] {
            let g = complex_gamma(c(0.0, t)).unwrap();
            let expect = (PI / (t * (PI * t).sinh())).sqrt();
            assert!(((g.norm() - expect) / expect).abs() < 1e-10, "t={t}");
        }
    }

    #[test]
    fn zeta_basics() {
        assert!((riemann_zeta(c(2.0, 0.0)).unwrap().re - PI * PI / 6.0).abs() < 1e-13);
        assert!((riemann_zeta(c(0.0, 0.0)).unwrap().re + 0.5).abs() < 1e-13);
        assert!((riemann_zeta(c(-1.0, 0.0)).unwrap().re + 1.0 / 12.0).abs() < 1e-13);
        assert!(riemann_zeta(c(1.0, 0.0)).is_err());
    }

    #[test]
    fn count_formula_is_log_domain_safe() {
        let big = BigInt::from(7u8).pow(5000);
        assert!((ln_big(&big) - 5000.0 * 7f64.ln()).abs() < 1e-9);
        assert!(count_relative_error(5000, 3, &big).is_finite());
        let r = asym_count(9, 1) / 39587.0;
        assert!((r - 1.15).abs() < 0.01, "{r}");
    }

    #[test]
    fn psi_is_periodic_with_zero_mean() {
        for x in [0.1, 0.37, 0.9] {
            assert!((fluctuation_psi(x, 0, 20) - fluctuation_psi(x + 1.0, 0, 20)).abs() < 1e-12);
        }
        assert_eq!(fluctuation_psi(0.3, 1, 0), 0.0);
        let m = 512;
        let mean: f64 = (0..m).map(|j| fluctuation_psi(j as f64 / m as f64, 0, 20)).sum::<f64>() / m as f64;
        assert!(mean.abs() < 1e-8, "{mean}");
    }

    #[test]
    fn closed_forms() {
        assert_eq!(asym_mean_leaves(10), 1.0);
        assert!((asym_mean_height(300) - 27.45).abs() < 0.01);
        assert!((asym_mean_height(1200) / asym_mean_height(300) - 2.0).abs() < 1e-14);
        let d = smooth_mean_register(4000, 0) - smooth_mean_register(1000, 0);
        assert!((d - 1.0).abs() < 1e-12);
    }
}

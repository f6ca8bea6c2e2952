//! Exact-rational exponent algebra for the skeleton problem and a
//! least-squares log–log slope fit for empirical checks.
//!
//! The bootstrap map is `f(a) = R(a) k + (2n-1)(n-k)/(2n^2)` with
//! `R(a) = (2n^2 - (2n-1)(n-k)) / (2n^2 (k + n(1-a)))`. Its fixpoints are
//! `1` and `beta(n, k) = 1 - (n-k)/(2n^2)`, and iterating from `0` climbs
//! monotonically to `beta`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `num/den` rendering used in every JSON and CSV output.
pub fn format_rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

fn check_nk(n: u32, k: u32) -> Result<()> {
    if n == 0 || k >= n {
        return Err(Error::invalid(format!(
            "need 0 <= k < n, got n = {n}, k = {k}"
        )));
    }
    Ok(())
}

/// `1 - (n - k) / (2 n^2)`.
pub fn beta(n: u32, k: u32) -> Result<BigRational> {
    check_nk(n, k)?;
    let two_n2 = 2 * (n as i64).pow(2);
    Ok(BigRational::one() - rat((n - k) as i64, two_n2))
}

/// `l (2n - 1) / (2 n^2)`.
pub fn nl_exponent(n: u32, l: u32) -> Result<BigRational> {
    if l == 0 || l > n {
        return Err(Error::invalid(format!(
            "need 0 < l <= n, got n = {n}, l = {l}"
        )));
    }
    Ok(rat(l as i64 * (2 * n as i64 - 1), 2 * (n as i64).pow(2)))
}

/// `R(alpha)`, the side-length exponent separating large and small cubes.
pub fn r_alpha(n: u32, k: u32, alpha: &BigRational) -> Result<BigRational> {
    check_nk(n, k)?;
    let (n_i, k_i) = (n as i64, k as i64);
    let two_n2 = BigRational::from_integer(BigInt::from(2 * n_i * n_i));
    let numer =
        BigRational::from_integer(BigInt::from(2 * n_i * n_i - (2 * n_i - 1) * (n_i - k_i)));
    let denom = &two_n2
        * (BigRational::from_integer(BigInt::from(k_i))
            + BigRational::from_integer(BigInt::from(n_i)) * (BigRational::one() - alpha));
    if denom.is_zero() {
        return Err(Error::invalid(format!(
            "R(alpha) is undefined at alpha = {alpha}, k = 0"
        )));
    }
    Ok(numer / denom)
}

/// The bootstrap map. Both closed forms are evaluated and must agree exactly.
pub fn f_alpha(n: u32, k: u32, alpha: &BigRational) -> Result<BigRational> {
    if alpha.is_negative() || alpha > &BigRational::one() {
        return Err(Error::invalid(format!("alpha = {alpha} outside [0, 1]")));
    }
    let r = r_alpha(n, k, alpha)?;
    let (n_i, k_i) = (n as i64, k as i64);
    let tail = rat((2 * n_i - 1) * (n_i - k_i), 2 * n_i * n_i);
    let via_k = &r * BigRational::from_integer(BigInt::from(k_i)) + tail;
    let via_gap = BigRational::one()
        - &r * BigRational::from_integer(BigInt::from(n_i)) * (BigRational::one() - alpha);
    assert_eq!(
        via_k, via_gap,
        "bootstrap map forms disagree at n={n}, k={k}"
    );
    Ok(via_k)
}

/// Iterates of `f` from zero.
#[derive(Clone, Debug, Serialize)]
pub struct ExponentReport {
    pub n: u32,
    pub k: u32,
    #[serde(serialize_with = "ser_rational")]
    pub beta: BigRational,
    /// `f^m(0)` for `m = 0, 1, ..`.
    #[serde(serialize_with = "ser_rationals")]
    pub trace: Vec<BigRational>,
    /// First `m` with `|f^m(0) - beta| < tolerance`; `None` if `max_steps`
    /// ran out first.
    pub converged_at: Option<usize>,
}

fn ser_rational<S: serde::Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(q))
}

fn ser_rationals<S: serde::Serializer>(qs: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(qs.iter().map(format_rational))
}

impl ExponentReport {
    pub fn converged(&self) -> bool {
        self.converged_at.is_some()
    }

    pub fn is_monotone(&self) -> bool {
        self.trace.windows(2).all(|w| w[0] <= w[1]) && self.trace.iter().all(|t| t <= &self.beta)
    }
}

/// Rational distance as `f64`, robust to huge numerators and denominators.
pub fn rational_to_f64(q: &BigRational) -> f64 {
    if let (Some(a), Some(b)) = (q.numer().to_f64(), q.denom().to_f64()) {
        if a.is_finite() && b.is_finite() && b != 0.0 {
            return a / b;
        }
    }
    let shift = q.denom().bits().max(q.numer().bits()).saturating_sub(1000);
    let a = (q.numer() >> shift).to_f64().unwrap_or(f64::NAN);
    let b = (q.denom() >> shift).to_f64().unwrap_or(f64::NAN);
    a / b
}

pub fn iterate_f(n: u32, k: u32, tolerance: f64, max_steps: usize) -> Result<ExponentReport> {
    if tolerance.is_nan() || tolerance <= 0.0 {
        return Err(Error::invalid("tolerance must be positive"));
    }
    let target = beta(n, k)?;
    let mut trace = vec![BigRational::zero()];
    let mut converged_at = None;
    for step in 0..=max_steps {
        let cur = &trace[step];
        if rational_to_f64(&(&target - cur)).abs() < tolerance {
            converged_at = Some(step);
            break;
        }
        if step == max_steps {
            break;
        }
        let next = f_alpha(n, k, cur)?;
        trace.push(next);
    }
    Ok(ExponentReport {
        n,
        k,
        beta: target,
        trace,
        converged_at,
    })
}

/// Least-squares slope of `ln(y)` against `ln(x)`.
pub fn fit_exponent(pairs: &[(f64, f64)]) -> Result<f64> {
    if pairs.iter().any(|&(x, y)| !(x > 0.0 && y > 0.0)) {
        return Err(Error::invalid("log-log fit needs positive sizes"));
    }
    let pts: Vec<(f64, f64)> = pairs.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    least_squares_slope(&pts)
}

/// Ordinary least-squares slope of `y` on `x`.
pub fn least_squares_slope(pts: &[(f64, f64)]) -> Result<f64> {
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if pts.len() < 2 || sxx <= 1e-12 * (1.0 + mx * mx) {
        return Err(Error::invalid(
            "slope fit needs at least two distinct abscissae",
        ));
    }
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Ok(sxy / sxx)
}

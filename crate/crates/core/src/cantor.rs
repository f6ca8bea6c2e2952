//! Finite truncations of Cantor-type sums `P = Q_1 + Q_2 + ..` in exact
//! rationals, with stage metadata audits, box counting and slope estimates.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::digits::{build_digit_set, find_radius};
use crate::error::{Error, Result};
use crate::exponents::{format_rational, least_squares_slope};
use crate::DEFAULT_POINT_CAP;

fn ser_rational<S: serde::Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(q))
}

fn ser_rationals<S: serde::Serializer>(qs: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(qs.iter().map(format_rational))
}

/// Natural log of a positive big integer.
fn ln_bigint(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().expect("fits in f64").ln();
    }
    let shift = bits - 64;
    (x >> shift).to_f64().expect("fits in f64").ln() + shift as f64 * std::f64::consts::LN_2
}

/// Natural log of a positive rational.
pub fn ln_rational(q: &BigRational) -> f64 {
    ln_bigint(q.numer()) - ln_bigint(q.denom())
}

/// One stage `Q_i` with its declared metadata.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CantorStage {
    /// The digit base `i` the stage was built from.
    pub index: u32,
    /// `beta_i / i^{2n}`; every point is an integer multiple of it.
    #[serde(serialize_with = "ser_rational")]
    pub unit: BigRational,
    /// Sorted, distinct.
    #[serde(serialize_with = "ser_rationals")]
    pub points: Vec<BigRational>,
    #[serde(serialize_with = "ser_rational")]
    pub d: BigRational,
    #[serde(serialize_with = "ser_rational")]
    pub delta: BigRational,
    pub ell: u64,
}

impl CantorStage {
    pub fn diameter(&self) -> BigRational {
        match (self.points.first(), self.points.last()) {
            (Some(a), Some(b)) => b - a,
            _ => BigRational::zero(),
        }
    }

    /// Smallest distance between consecutive points; `None` below two points.
    pub fn min_gap(&self) -> Option<BigRational> {
        self.points.windows(2).map(|w| &w[1] - &w[0]).min()
    }
}

/// Audit of declared metadata against the stage sets and of the two
/// hypotheses of the Cantor-sum dimension bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StageFlags {
    /// `diam Q_i <= d_i` for every stage.
    pub diameter: bool,
    /// Consecutive gaps `>= delta_i`.
    pub separation: bool,
    /// Consecutive gaps `> delta_i`.
    pub strict_separation: bool,
    /// `|Q_i| = ell_i`.
    pub cardinality: bool,
    /// Some `c < 1` has `d_i <= c d_{i-1}` for all listed stages.
    pub decay: bool,
    /// `d_i + delta_i <= delta_{i-1}`.
    pub nesting: bool,
}

impl StageFlags {
    /// Every flag used for validity; strict separation is informational.
    pub fn valid(&self) -> bool {
        self.diameter && self.separation && self.cardinality && self.decay && self.nesting
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StageSpec {
    pub stages: Vec<CantorStage>,
}

impl StageSpec {
    pub fn flags(&self) -> StageFlags {
        let st = &self.stages;
        let gaps_ok = |strict: bool| {
            st.iter().all(|s| match s.min_gap() {
                None => true,
                Some(g) if strict => g > s.delta,
                Some(g) => g >= s.delta,
            })
        };
        StageFlags {
            diameter: st.iter().all(|s| s.diameter() <= s.d),
            separation: gaps_ok(false),
            strict_separation: gaps_ok(true),
            cardinality: st.iter().all(|s| s.points.len() as u64 == s.ell),
            decay: st.windows(2).all(|w| w[1].d < w[0].d),
            nesting: st.windows(2).all(|w| &w[1].d + &w[1].delta <= w[0].delta),
        }
    }

    /// `log(ell_1 .. ell_j) / -log(d_j)` for `j = 1, 2, ..`.
    pub fn ratio_table(&self) -> Vec<f64> {
        let mut log_prod = 0.0;
        self.stages
            .iter()
            .map(|s| {
                log_prod += (s.ell as f64).ln();
                log_prod / -ln_rational(&s.d)
            })
            .collect()
    }
}

/// Stage families `A_i` and `T_i` of the vertex construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexStages {
    pub n: usize,
    #[serde(serialize_with = "ser_rational")]
    pub t: BigRational,
    pub a: StageSpec,
    pub t_stages: StageSpec,
}

fn factorial(m: u32) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, v| acc * BigInt::from(v))
}

/// Stages `i = 2 ..= depth + 1` with `beta_i = ((i - 1)!)^(-2n^2/t)`,
/// `T_i = (beta_i / i^{2n}) [1, i^{2n} - 1]` and `A_i = (beta_i / i^{2n}) D(i, n)`.
pub fn vertex_stages(n: usize, t: &BigRational, depth: u32) -> Result<VertexStages> {
    if n < 1 {
        return Err(Error::invalid("n must be >= 1"));
    }
    if depth < 1 {
        return Err(Error::invalid("depth must be >= 1"));
    }
    if !t.is_positive() || t > &BigRational::one() {
        return Err(Error::invalid(format!("t = {t} outside (0, 1]")));
    }
    let e = BigRational::from_integer(BigInt::from(2 * n * n)) / t;
    if !e.is_integer() {
        return Err(Error::invalid(format!("2n^2 / t = {e} is not an integer")));
    }
    let e = e
        .to_integer()
        .to_u32()
        .ok_or(Error::Overflow("beta exponent"))?;
    let mut a = Vec::new();
    let mut ts = Vec::new();
    for i in 2..=depth + 1 {
        let beta = BigRational::new(BigInt::one(), factorial(i - 1).pow(e));
        let width = BigInt::from(i).pow(2 * n as u32);
        let unit = beta / BigRational::from_integer(width.clone());
        let top = width - 1u32;
        let top_u64 = top.to_u64().ok_or(Error::Overflow("stage width"))?;
        if top_u64 as u128 > DEFAULT_POINT_CAP {
            return Err(Error::budget(
                format!("stage {i} points"),
                top_u64 as u128,
                DEFAULT_POINT_CAP,
            ));
        }
        let scaled = |v: i64| &unit * BigRational::from_integer(BigInt::from(v));
        let d_t = &unit * BigRational::from_integer(top.clone());
        ts.push(CantorStage {
            index: i,
            unit: unit.clone(),
            points: (1..=top_u64 as i64).map(scaled).collect(),
            d: d_t.clone(),
            delta: unit.clone(),
            ell: top_u64,
        });
        let digits = build_digit_set(i as i64, n)?;
        a.push(CantorStage {
            index: i,
            unit: unit.clone(),
            points: digits.members().iter().map(|&v| scaled(v)).collect(),
            d: d_t * BigRational::from_integer(BigInt::from(3)),
            delta: unit.clone(),
            ell: digits.len() as u64,
        });
    }
    Ok(VertexStages {
        n,
        t: t.clone(),
        a: StageSpec { stages: a },
        t_stages: StageSpec { stages: ts },
    })
}

impl VertexStages {
    /// For `xs` drawn from `T_i` (stage position `stage`), a positive `rho`
    /// with every `x_j +- rho` in `A_i`.
    pub fn radius(&self, stage: usize, xs: &[BigRational]) -> Result<BigRational> {
        if xs.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: xs.len(),
            });
        }
        let ts = self
            .t_stages
            .stages
            .get(stage)
            .ok_or_else(|| Error::invalid(format!("no stage at position {stage}")))?;
        let mut us = Vec::with_capacity(xs.len());
        for x in xs {
            if ts.points.binary_search(x).is_err() {
                return Err(Error::invalid(format!("{x} is not in T_{}", ts.index)));
            }
            let u = (x / &ts.unit).to_integer();
            us.push(u.to_i64().ok_or(Error::Overflow("stage digit"))?);
        }
        let r = find_radius(&us, ts.index as i64)?;
        Ok(&ts.unit * BigRational::from_integer(BigInt::from(r)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TruncatedSum {
    pub depth: usize,
    #[serde(serialize_with = "ser_rationals")]
    pub points: Vec<BigRational>,
}

/// `Q_1 + .. + Q_depth`, deduplicated and sorted.
pub fn truncated_sum(spec: &StageSpec, depth: usize) -> Result<TruncatedSum> {
    truncated_sum_with_cap(spec, depth, DEFAULT_POINT_CAP)
}

pub fn truncated_sum_with_cap(spec: &StageSpec, depth: usize, cap: u128) -> Result<TruncatedSum> {
    if depth < 1 || depth > spec.stages.len() {
        return Err(Error::invalid(format!(
            "depth {depth} outside [1, {}]",
            spec.stages.len()
        )));
    }
    let stages = &spec.stages[..depth];
    let bound = stages
        .iter()
        .try_fold(1u128, |acc, s| acc.checked_mul(s.points.len() as u128))
        .ok_or(Error::Overflow("sumset size"))?;
    if bound > cap {
        return Err(Error::budget("truncated sum points", bound, cap));
    }
    let mut acc: Vec<BigRational> = vec![BigRational::zero()];
    for s in stages {
        let next: BTreeSet<BigRational> = acc
            .par_iter()
            .flat_map_iter(|a| s.points.iter().map(move |q| a + q))
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        acc = next.into_iter().collect();
    }
    Ok(TruncatedSum { depth, points: acc })
}

/// Number of half-open boxes `[m scale, (m + 1) scale)` meeting `points`.
pub fn box_count(points: &[BigRational], scale: &BigRational) -> Result<usize> {
    if points.is_empty() {
        return Err(Error::invalid("box count of an empty set"));
    }
    if !scale.is_positive() {
        return Err(Error::invalid(format!(
            "box scale {scale} must be positive"
        )));
    }
    let boxes: BTreeSet<BigInt> = points
        .iter()
        .map(|p| {
            let q = p / scale;
            q.numer().div_floor(q.denom())
        })
        .collect();
    Ok(boxes.len())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScaleCount {
    #[serde(serialize_with = "ser_rational")]
    pub scale: BigRational,
    pub count: usize,
    /// `log(count) / -log(scale)`.
    pub ratio: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DimensionEstimate {
    pub slope: f64,
    pub table: Vec<ScaleCount>,
}

/// Least-squares slope of `log box_count` against `-log scale`.
pub fn dimension_estimate(
    points: &[BigRational],
    scales: &[BigRational],
) -> Result<DimensionEstimate> {
    if scales.len() < 2 {
        return Err(Error::invalid(
            "dimension estimate needs at least two scales",
        ));
    }
    if scales.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::invalid("scales must be strictly decreasing"));
    }
    let table = scales
        .par_iter()
        .map(|s| {
            let count = box_count(points, s)?;
            Ok(ScaleCount {
                scale: s.clone(),
                count,
                ratio: (count as f64).ln() / -ln_rational(s),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let pts: Vec<(f64, f64)> = table
        .iter()
        .map(|row| (-ln_rational(&row.scale), (row.count as f64).ln()))
        .collect();
    Ok(DimensionEstimate {
        slope: least_squares_slope(&pts)?,
        table,
    })
}

/// CSV with columns `scale_num,scale_den,count`.
pub fn write_box_counts_csv<W: std::io::Write>(table: &[ScaleCount], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["scale_num", "scale_den", "count"])
        .map_err(|e| Error::Io(std::io::Error::other(e)))?;
    for row in table {
        w.write_record([
            row.scale.numer().to_string(),
            row.scale.denom().to_string(),
            row.count.to_string(),
        ])
        .map_err(|e| Error::Io(std::io::Error::other(e)))?;
    }
    w.flush()?;
    Ok(())
}

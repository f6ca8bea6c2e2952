//! Kruskal–Katona machinery: cascade representations, the exact shadow lower
//! bound, Lovász's real-binomial form, and brute-force shadows to test them.

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};

/// A family of `arity`-element subsets of `{1, .., ground}`, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SetFamily {
    ground: u32,
    arity: usize,
    members: Vec<Vec<u32>>,
}

impl SetFamily {
    /// Members are normalized to increasing order; duplicates are dropped.
    pub fn new(
        ground: u32,
        arity: usize,
        members: impl IntoIterator<Item = Vec<u32>>,
    ) -> Result<Self> {
        let mut set = BTreeSet::new();
        for mut m in members {
            m.sort_unstable();
            m.dedup();
            if m.len() != arity {
                return Err(Error::invalid(format!(
                    "member {m:?} does not have {arity} elements"
                )));
            }
            if m.iter().any(|&v| v < 1 || v > ground) {
                return Err(Error::invalid(format!("member {m:?} leaves [1, {ground}]")));
            }
            set.insert(m);
        }
        Ok(SetFamily {
            ground,
            arity,
            members: set.into_iter().collect(),
        })
    }

    /// Every `arity`-subset of `{1, .., ground}`.
    pub fn complete(ground: u32, arity: usize) -> Self {
        let members = (1..=ground).combinations(arity).collect();
        SetFamily {
            ground,
            arity,
            members,
        }
    }

    pub fn ground(&self) -> u32 {
        self.ground
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn members(&self) -> &[Vec<u32>] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// `C(n, k)` with `C(n, 0) = 1` and `C(n, k) = 0` for `k > n`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, t| acc * (n - t) as u128 / (t as u128 + 1))
}

/// `C(n, k)` extended by zero to negative `k`.
fn binomial_signed(n: u64, k: i64) -> u128 {
    if k < 0 {
        0
    } else {
        binomial(n, k as u64)
    }
}

/// Greedy binomial representation `m = sum_t C(n_t, b - t + 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cascade {
    pub arity: u64,
    pub indices: Vec<u64>,
}

impl Cascade {
    /// Re-evaluates the represented integer.
    pub fn value(&self) -> u128 {
        self.indices
            .iter()
            .enumerate()
            .map(|(t, &n)| binomial(n, self.arity - t as u64))
            .sum()
    }
}

pub fn cascade_representation(m: u64, b: u64) -> Result<Cascade> {
    if m < 1 || b < 1 {
        return Err(Error::invalid("cascade needs m >= 1 and b >= 1"));
    }
    let mut rem = m as u128;
    let mut indices = Vec::new();
    let mut arity = b;
    while rem > 0 && arity > 0 {
        let n = if arity == 1 {
            rem as u64
        } else {
            let mut n = arity;
            while binomial(n + 1, arity) <= rem {
                n += 1;
            }
            n
        };
        rem -= binomial(n, arity);
        indices.push(n);
        arity -= 1;
    }
    Ok(Cascade { arity: b, indices })
}

/// Kruskal–Katona lower bound on the `(b - c)`-shadow of any family of `m`
/// sets of size `b`.
pub fn kk_shadow_bound(m: u64, b: u64, c: u64) -> Result<u128> {
    if c == 0 || c >= b {
        return Err(Error::invalid(format!(
            "shadow drop c = {c} must satisfy 0 < c < b = {b}"
        )));
    }
    let cascade = cascade_representation(m, b)?;
    Ok(cascade
        .indices
        .iter()
        .enumerate()
        .map(|(t, &n)| binomial_signed(n, b as i64 - c as i64 - t as i64))
        .sum())
}

/// `x (x - 1) .. (x - k + 1) / k!` for real `x`.
pub fn real_binomial(x: f64, k: u64) -> f64 {
    (0..k).fold(1.0, |acc, t| acc * (x - t as f64) / (t as f64 + 1.0))
}

/// Real `x >= b - 1` with `C(x, b) = m`, by bisection.
pub fn lovasz_root(m: u64, b: u64) -> Result<f64> {
    if m < 1 || b < 1 {
        return Err(Error::invalid("need m >= 1 and b >= 1"));
    }
    let target = m as f64;
    let (mut lo, mut hi) = ((b - 1) as f64, (b - 1 + m) as f64);
    while hi - lo > 1e-12 * hi.max(1.0) {
        let mid = 0.5 * (lo + hi);
        if real_binomial(mid, b) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Lovász's relaxation: `C(x, b - c)` where `C(x, b) = m`.
pub fn lovasz_shadow_bound(m: u64, b: u64, c: u64) -> Result<f64> {
    if c > b {
        return Err(Error::invalid(format!(
            "shadow drop c = {c} exceeds b = {b}"
        )));
    }
    Ok(real_binomial(lovasz_root(m, b)?, b - c))
}

/// All `(b - c)`-subsets of members, deduplicated.
pub fn exact_shadow(family: &SetFamily, c: usize) -> Result<SetFamily> {
    if c >= family.arity {
        return Err(Error::invalid(format!(
            "shadow drop c = {c} must be below the arity {}",
            family.arity
        )));
    }
    let members: BTreeSet<Vec<u32>> = family
        .members
        .iter()
        .flat_map(|m| m.iter().copied().combinations(family.arity - c))
        .collect();
    Ok(SetFamily {
        ground: family.ground,
        arity: family.arity - c,
        members: members.into_iter().collect(),
    })
}

/// The first `m` sets of size `b` in colexicographic order.
pub fn colex_segment(m: u64, b: usize) -> Result<SetFamily> {
    if m < 1 || b < 1 {
        return Err(Error::invalid("colex segment needs m >= 1 and b >= 1"));
    }
    let mut cur: Vec<u32> = (1..=b as u32).collect();
    let mut members = Vec::with_capacity(m as usize);
    for _ in 0..m {
        members.push(cur.clone());
        // bump the lowest element that has room, reset everything below it
        let j = (0..b)
            .find(|&j| j + 1 == b || cur[j] + 1 < cur[j + 1])
            .expect("last position always has room");
        cur[j] += 1;
        for (t, v) in cur.iter_mut().enumerate().take(j) {
            *v = t as u32 + 1;
        }
    }
    let ground = members.iter().map(|s| s[b - 1]).max().unwrap_or(b as u32);
    // colex order is not lexicographic; store canonically
    SetFamily::new(ground, b, members)
}

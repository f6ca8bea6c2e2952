//! Signed-digit sets `D(i, n)`, the constructive radius finder, and the
//! multiscale sets `A_N` built from them.
//!
//! `D(i, n)` holds every value `sum_{j<2n} a_j i^j` whose digits lie in
//! `[2(1-i), 2(i-1)]` with at least one digit equal to zero. For any `n`
//! inputs in `[1, i^{2n} - 1]` there is a single `r > 0` placing every
//! `x_j +- r` in `D(i, n)`; [`find_radius`] computes one.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::DEFAULT_POINT_CAP;

/// `D(i, n)` as a sorted set of values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DigitSet {
    base: i64,
    n: usize,
    members: Vec<i64>,
}

impl DigitSet {
    pub fn base(&self) -> i64 {
        self.base
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[i64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: i64) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn min(&self) -> i64 {
        self.members[0]
    }

    pub fn max(&self) -> i64 {
        self.members[self.members.len() - 1]
    }

    /// `i^{2n} - 1`, the top of the input range `[1, i^{2n} - 1]`.
    pub fn top(&self) -> i64 {
        self.base.pow(2 * self.n as u32) - 1
    }

    /// Dense membership table over `[min, max]`.
    pub fn table(&self) -> DigitTable {
        DigitTable::new(&self.members)
    }
}

/// O(1) membership and range counting over a bounded integer range.
#[derive(Clone, Debug)]
pub struct DigitTable {
    lo: i64,
    hit: Vec<bool>,
    // prefix[t] = number of members below lo + t
    prefix: Vec<u32>,
}

impl DigitTable {
    pub fn new(sorted: &[i64]) -> Self {
        let (Some(&lo), Some(&hi)) = (sorted.first(), sorted.last()) else {
            return DigitTable {
                lo: 0,
                hit: Vec::new(),
                prefix: vec![0],
            };
        };
        let mut hit = vec![false; (hi - lo + 1) as usize];
        for &v in sorted {
            hit[(v - lo) as usize] = true;
        }
        let mut prefix = Vec::with_capacity(hit.len() + 1);
        prefix.push(0);
        let mut acc = 0u32;
        for &h in &hit {
            acc += h as u32;
            prefix.push(acc);
        }
        DigitTable { lo, hit, prefix }
    }

    #[inline]
    pub fn contains(&self, v: i64) -> bool {
        let off = v.wrapping_sub(self.lo);
        off >= 0 && (off as u64) < self.hit.len() as u64 && self.hit[off as usize]
    }

    /// Whether every integer of `[a, b]` is present.
    pub fn contains_range(&self, a: i64, b: i64) -> bool {
        if a > b {
            return true;
        }
        let span = self.hit.len() as i64;
        let (ra, rb) = (a - self.lo, b - self.lo);
        if ra < 0 || rb >= span {
            return false;
        }
        let present = self.prefix[rb as usize + 1] - self.prefix[ra as usize];
        present as i64 == b - a + 1
    }
}

fn checked_pow(base: i64, exp: u32) -> Result<i64> {
    base.checked_pow(exp)
        .ok_or(Error::Overflow("digit-set weights"))
}

/// Values of `D(i, n)`; `i = 1` yields `{0}`.
fn digit_values(i: i64, n: usize) -> Result<Vec<i64>> {
    if i == 1 {
        return Ok(vec![0]);
    }
    let positions = 2 * n;
    let top = checked_pow(i, positions as u32)? - 1;
    let half = top
        .checked_mul(2)
        .ok_or(Error::Overflow("digit-set range"))?;
    let width = (2 * half + 1) as u128;
    if width > DEFAULT_POINT_CAP * 8 {
        return Err(Error::budget(
            format!("digit set D({i},{n})"),
            width,
            DEFAULT_POINT_CAP * 8,
        ));
    }
    let width = width as usize;
    let amax = 2 * (i - 1);
    // two layers: partial sums without a zero digit yet, and with one
    let mut no_zero = vec![false; width];
    let mut has_zero = vec![false; width];
    no_zero[half as usize] = true;
    let mut weight = 1i64;
    for _ in 0..positions {
        let mut next_no = vec![false; width];
        let mut next_has = vec![false; width];
        for idx in 0..width {
            let from_no = no_zero[idx];
            let from_has = has_zero[idx];
            if !from_no && !from_has {
                continue;
            }
            for a in -amax..=amax {
                let target = idx as i64 + a * weight;
                if target < 0 || target >= width as i64 {
                    continue;
                }
                let t = target as usize;
                if from_has || a == 0 {
                    next_has[t] = true;
                }
                if from_no && a != 0 {
                    next_no[t] = true;
                }
            }
        }
        no_zero = next_no;
        has_zero = next_has;
        weight *= i;
    }
    Ok(has_zero
        .iter()
        .enumerate()
        .filter(|(_, &h)| h)
        .map(|(idx, _)| idx as i64 - half)
        .collect())
}

/// Builds `D(i, n)` for `i >= 2`, `n >= 1`.
pub fn build_digit_set(i: i64, n: usize) -> Result<DigitSet> {
    if i < 2 {
        return Err(Error::invalid(format!("digit base must be >= 2, got {i}")));
    }
    if n < 1 {
        return Err(Error::invalid("digit-set dimension must be >= 1"));
    }
    Ok(DigitSet {
        base: i,
        n,
        members: digit_values(i, n)?,
    })
}

/// Base-`i` digits of `x`, least significant first, padded to `len`.
fn base_digits(mut x: i64, i: i64, len: usize) -> Vec<i64> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(x % i);
        x /= i;
    }
    out
}

/// Signed radius for inputs in `[0, i^{2n} - 1]`.
///
/// Digit slot `m` is assigned one input; the radius takes that input's digit
/// at position `2m` with a plus sign and at `2m + 1` with a minus sign. The
/// first (slot, input) pair, scanning slots then inputs, whose input has a
/// nonzero digit at either position is fixed; the remaining inputs fill the
/// remaining slots in order. The result is zero only when every input is.
fn signed_radius(xs: &[i64], i: i64) -> i64 {
    let n = xs.len();
    let digits: Vec<Vec<i64>> = xs.iter().map(|&x| base_digits(x, i, 2 * n)).collect();
    let anchor = (0..n)
        .flat_map(|m| (0..n).map(move |j| (m, j)))
        .find(|&(m, j)| digits[j][2 * m] != 0 || digits[j][2 * m + 1] != 0);
    let mut slot_input = vec![usize::MAX; n];
    if let Some((m, j)) = anchor {
        slot_input[m] = j;
    }
    let mut rest = (0..n).filter(|&j| Some(j) != anchor.map(|a| a.1));
    for slot in slot_input.iter_mut() {
        if *slot == usize::MAX {
            *slot = rest.next().expect("one input per slot");
        }
    }
    let mut r = 0i64;
    let mut w = 1i64;
    for (m, &j) in slot_input.iter().enumerate() {
        r += digits[j][2 * m] * w;
        w *= i;
        r -= digits[j][2 * m + 1] * w;
        w *= i;
    }
    r
}

/// A positive `r` with `x_j +- r` in `D(i, n)` for every input, where
/// `n = xs.len()` and each input lies in `[1, i^{2n} - 1]`.
pub fn find_radius(xs: &[i64], i: i64) -> Result<i64> {
    if i < 2 {
        return Err(Error::invalid(format!("digit base must be >= 2, got {i}")));
    }
    if xs.is_empty() {
        return Err(Error::invalid("find_radius needs at least one input"));
    }
    let top = checked_pow(i, 2 * xs.len() as u32)? - 1;
    if let Some(bad) = xs.iter().find(|&&x| x < 1 || x > top) {
        return Err(Error::invalid(format!("input {bad} outside [1, {top}]")));
    }
    Ok(signed_radius(xs, i).abs())
}

/// One scaled stage `scale * D(i, n)` of a multiscale set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Stage {
    pub base: i64,
    pub scale: i64,
    pub digits: Vec<i64>,
}

/// `A_N = sum_{i=1}^{p} (p!/i!)^{2n} D(i, n)` with `N = (p!)^{2n}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiScaleSet {
    p: u32,
    n: usize,
    big_n: i64,
    members: Vec<i64>,
    stages: Vec<Stage>,
}

impl MultiScaleSet {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `N = (p!)^{2n}`.
    pub fn big_n(&self) -> i64 {
        self.big_n
    }

    pub fn members(&self) -> &[i64] {
        &self.members
    }

    pub fn stages(&self) -> &[Stage] {
        &self.stages
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: i64) -> bool {
        self.members.binary_search(&v).is_ok()
    }
}

fn factorial(p: u32) -> Result<i64> {
    (1..=p as i64).try_fold(1i64, |acc, v| {
        acc.checked_mul(v).ok_or(Error::Overflow("factorial"))
    })
}

/// Builds `A_N` for `N = (p!)^{2n}` under the default point cap.
pub fn build_multiscale_set(p: u32, n: usize) -> Result<MultiScaleSet> {
    build_multiscale_set_with_cap(p, n, DEFAULT_POINT_CAP)
}

pub fn build_multiscale_set_with_cap(p: u32, n: usize, cap: u128) -> Result<MultiScaleSet> {
    if p < 1 || n < 1 {
        return Err(Error::invalid("multiscale set needs p >= 1 and n >= 1"));
    }
    let exp = 2 * n as u32;
    let pf = factorial(p)?;
    let big_n = checked_pow(pf, exp)?;
    if big_n as u128 > cap {
        return Err(Error::budget(
            format!("A_N with p={p}, n={n}"),
            big_n as u128,
            cap,
        ));
    }
    let mut stages = Vec::with_capacity(p as usize);
    let mut estimate: u128 = 1;
    for i in 1..=p {
        let scale = checked_pow(pf / factorial(i)?, exp)?;
        let digits = digit_values(i as i64, n)?;
        estimate = estimate.saturating_mul(digits.len() as u128);
        if estimate > cap {
            return Err(Error::budget(
                format!("A_N with p={p}, n={n}"),
                estimate,
                cap,
            ));
        }
        stages.push(Stage {
            base: i as i64,
            scale,
            digits,
        });
    }
    let mut members = vec![0i64];
    for st in &stages {
        let mut next = Vec::with_capacity(members.len() * st.digits.len());
        for &a in &members {
            for &d in &st.digits {
                next.push(a + st.scale * d);
            }
        }
        next.sort_unstable();
        next.dedup();
        members = next;
    }
    Ok(MultiScaleSet {
        p,
        n,
        big_n,
        members,
        stages,
    })
}

/// A positive `r` with `x_j +- r` in `A_N` for every input in `[1, N - 1]`.
///
/// Each input is split into mixed-radix stage digits `t_i` in
/// `[0, i^{2n} - 1]` with weights `(p!/i!)^{2n}`; the per-stage signed radii
/// are combined with the same weights.
pub fn find_radius_multiscale(xs: &[i64], set: &MultiScaleSet) -> Result<i64> {
    let n = set.n;
    if xs.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: xs.len(),
        });
    }
    let top = set.big_n - 1;
    if let Some(bad) = xs.iter().find(|&&x| x < 1 || x > top) {
        return Err(Error::invalid(format!("input {bad} outside [1, {top}]")));
    }
    let mut rems = xs.to_vec();
    let mut r = 0i64;
    for st in set.stages.iter().filter(|st| st.base >= 2) {
        let stage_digits: Vec<i64> = rems
            .iter_mut()
            .map(|x| {
                let (q, rem) = x.div_rem(&st.scale);
                *x = rem;
                q
            })
            .collect();
        r += st.scale * signed_radius(&stage_digits, st.base);
    }
    debug_assert!(r != 0, "some stage digit is nonzero for inputs >= 1");
    Ok(r.abs())
}

/// Minimal number of closed intervals `[a, a + len]` covering `xs`
/// (left-to-right greedy sweep).
pub fn interval_cover_count(xs: &[i64], len: i64) -> Result<usize> {
    if xs.is_empty() {
        return Err(Error::invalid("cannot cover an empty set"));
    }
    if len < 1 {
        return Err(Error::invalid(format!(
            "interval length must be >= 1, got {len}"
        )));
    }
    let mut sorted = xs.to_vec();
    sorted.sort_unstable();
    let mut count = 0;
    let mut end = i64::MIN;
    for &x in &sorted {
        if count == 0 || x > end {
            count += 1;
            end = x + len;
        }
    }
    Ok(count)
}

//! The recursive treedepth bound `f(k, t)` for `P_t`-free graphs of
//! 2-treedepth at most `k`, its closed form for even `t`, and the binomial
//! upper and lower bounds it sits between.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{invalid, Result};

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn factorial(k: u64) -> BigUint {
    (1..=k).fold(BigUint::one(), |acc, i| acc * i)
}

/// `⌊(t-1)/2⌋`, the binomial "depth" for excluded path order `t`.
pub fn half(t: u64) -> u64 {
    (t - 1) / 2
}

fn check_domain(k: u64, t: u64) -> Result<()> {
    if k < 1 || t < 2 {
        return invalid(format!("bounds need k >= 1 and t >= 2, got k = {k}, t = {t}"));
    }
    Ok(())
}

/// Memoised `f(k, t)`.
#[derive(Debug, Default)]
pub struct BoundTable {
    f: HashMap<(u64, u64), BigUint>,
}

impl BoundTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn f(&mut self, k: u64, t: u64) -> Result<BigUint> {
        check_domain(k, t)?;
        Ok(self.f_inner(k, t))
    }

    fn f_inner(&mut self, k: u64, t: u64) -> BigUint {
        if k == 1 || t == 2 {
            return BigUint::one();
        }
        if t == 3 {
            return BigUint::from(k);
        }
        if let Some(v) = self.f.get(&(k, t)) {
            return v.clone();
        }
        let v = self.f_inner(k, t - 2) + self.f_inner(k - 1, t) + 1u32;
        self.f.insert((k, t), v.clone());
        v
    }
}

/// `f(k, t)`: 1 when `k = 1` or `t = 2`, `k` when `t = 3`, otherwise
/// `f(k, t-2) + f(k-1, t) + 1`.
pub fn f_value(k: u64, t: u64) -> Result<BigUint> {
    BoundTable::new().f(k, t)
}

/// `2·C(⌊(t-1)/2⌋ + k - 1, ⌊(t-1)/2⌋)`; treedepth is strictly below this.
pub fn g_upper(k: u64, t: u64) -> Result<BigUint> {
    Ok(g_lower(k, t)? * 2u32)
}

/// `C(⌊(t-1)/2⌋ + k - 1, ⌊(t-1)/2⌋)`; some graph reaches this treedepth.
/// Also the conjectured exact extremal value.
pub fn g_lower(k: u64, t: u64) -> Result<BigUint> {
    check_domain(k, t)?;
    let r = half(t);
    Ok(binomial(r + k - 1, r))
}

pub fn closed_form(k: u64, t: u64) -> Result<BigUint> {
    Ok(g_upper(k, t)? - 1u32)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundRow {
    pub k: u64,
    pub t: u64,
    pub f: String,
    pub g_lower: String,
    pub g_upper: String,
    /// `2·C(..) - 1`; equals `f` whenever `t` is even.
    pub closed_form: String,
    pub even_t: bool,
}

/// All rows for `1 <= k <= k_max`, `2 <= t <= t_max`.
pub fn bound_rows(k_max: u64, t_max: u64) -> Result<Vec<BoundRow>> {
    let mut table = BoundTable::new();
    let mut rows = Vec::new();
    for k in 1..=k_max {
        for t in 2..=t_max {
            rows.push(BoundRow {
                k,
                t,
                f: table.f(k, t)?.to_string(),
                g_lower: g_lower(k, t)?.to_string(),
                g_upper: g_upper(k, t)?.to_string(),
                closed_form: closed_form(k, t)?.to_string(),
                even_t: t % 2 == 0,
            });
        }
    }
    Ok(rows)
}

pub fn rows_to_csv(rows: &[BoundRow]) -> String {
    let mut out = String::from("k,t,f,g_lower,g_upper,closed_form,even_t\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.k, r.t, r.f, r.g_lower, r.g_upper, r.closed_form, r.even_t
        ));
    }
    out
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ClosedFormReport {
    pub checked: usize,
    /// `(k, t)` pairs where an assertion failed, with a label.
    pub failures: Vec<(u64, u64, String)>,
}

impl ClosedFormReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Over `1 <= k <= k_max`, `2 <= t <= t_max`: the closed form for even
/// `t`, `g_lower <= f < g_upper`, and `f(k, t) <= f(k, t + 1)`.
pub fn verify_f_closed_form(k_max: u64, t_max: u64) -> Result<ClosedFormReport> {
    let mut table = BoundTable::new();
    let mut report = ClosedFormReport::default();
    for k in 1..=k_max {
        for t in 2..=t_max {
            let f = table.f(k, t)?;
            let mut fail = |what: &str| report.failures.push((k, t, what.to_string()));
            if t % 2 == 0 && f != closed_form(k, t)? {
                fail("closed form");
            }
            if f >= g_upper(k, t)? {
                fail("f < g_upper");
            }
            if g_lower(k, t)? > f {
                fail("g_lower <= f");
            }
            if f > table.f(k, t + 1)? {
                fail("monotone in t");
            }
            report.checked += 1;
        }
    }
    Ok(report)
}

/// Exact check of `c·n^{1/k} >= ℓ`, i.e. `c^k · n >= ℓ^k`.
pub fn scaled_root_at_least(c: &BigUint, n: u64, k: u32, l: u64) -> bool {
    c.pow(k) * n >= BigUint::from(l).pow(k)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ReductionReport {
    pub checked: usize,
    /// `(k, ℓ, n)` where `k!·n^{1/k} >= ℓ` failed.
    pub failures: Vec<(u64, u64, u64)>,
}

/// For every `n` with `C(ℓ+k-1, k) >= n > C(ℓ+k-2, k)`, checks
/// `k!·n^{1/k} >= ℓ`. With `k - 1` in place of `k` this is the same
/// arithmetic for the 2-treedepth construction.
pub fn verify_factorial_reduction(k_max: u64, l_max: u64) -> ReductionReport {
    let mut report = ReductionReport::default();
    for k in 1..=k_max {
        let c = factorial(k);
        for l in 1..=l_max {
            let hi = binomial(l + k - 1, k).to_u64().expect("small binomial");
            let lo = if l >= 2 {
                binomial(l + k - 2, k).to_u64().expect("small binomial")
            } else {
                0
            };
            for n in lo + 1..=hi {
                report.checked += 1;
                if !scaled_root_at_least(&c, n, k as u32, l) {
                    report.failures.push((k, l, n));
                }
            }
        }
    }
    report
}

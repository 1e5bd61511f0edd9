//! Occurrence positions in the Fibonacci word in terms of the running count
//! of `a`.
//!
//! With `w = abaab…`, `p_x(n)` the 0-based position of the `n`-th `x`
//! (`n ≥ 1`) and `N_a(m) = #{j < m : w_j = a}`, the `n`-th `a` opens the
//! `n`-th image `σ(w_{n−1})` and the `n`-th `b` is the second letter of
//! `σ²(w_{n−1})`, so
//!
//! `p_a(n) = n − 1 + N_a(n − 1)` and `p_b(n) = 2n − 1 + N_a(n − 1)`.
//!
//! The closed forms `n − 2 + N_a(n)` and `2n − 2 + N_a(n)` agree with these
//! only when `w_{n−1} = a`; the report records where each form holds.

use serde::{Deserialize, Serialize};

use crate::genfun::words::positions;
use crate::subst::fixed::{fixed_point_seed, fixed_word_prefix};
use crate::subst::substitution::catalog;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormCheck {
    pub formula: String,
    pub checked: usize,
    pub holds: bool,
    /// Smallest `n` where the formula disagrees with the scan.
    pub first_failure: Option<usize>,
    pub failures: usize,
}

impl FormCheck {
    fn run(formula: &str, checked: usize, mut ok: impl FnMut(usize) -> bool) -> Self {
        let mut failures = 0;
        let mut first_failure = None;
        for n in 1..=checked {
            if !ok(n) {
                failures += 1;
                first_failure.get_or_insert(n);
            }
        }
        FormCheck { formula: formula.into(), checked, holds: failures == 0, first_failure, failures }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositionIdentityReport {
    /// Letters of the fixed word scanned.
    pub prefix_len: usize,
    /// `p_b(n) − p_a(n) = n`, i.e. `P_b − P_a = X/(1 − X)²`.
    pub difference: FormCheck,
    pub position_a: FormCheck,
    pub position_b: FormCheck,
    pub printed_position_a: FormCheck,
    pub printed_position_b: FormCheck,
    /// `#{j ≤ p_a(n) : w_j = a} = n`.
    pub count_inverse: FormCheck,
    /// Series identities matching `position_a` and `position_b`.
    pub series_a: String,
    pub series_b: String,
}

impl PositionIdentityReport {
    /// The scan-validated identities all hold.
    pub fn validated(&self) -> bool {
        self.difference.holds && self.position_a.holds && self.position_b.holds && self.count_inverse.holds
    }
}

/// Checks the identities against a scan of the first `prefix_len` letters.
pub fn fib_position_identities(prefix_len: usize) -> PositionIdentityReport {
    let s = catalog::fibonacci();
    let seed = fixed_point_seed(&s).expect("the Fibonacci substitution has a seed");
    let w = fixed_word_prefix(&s, seed, prefix_len);
    let pa = positions(w.letters(), 0);
    let pb = positions(w.letters(), 1);
    // n_a[m] = #{j < m : w_j = a}.
    let mut n_a = Vec::with_capacity(prefix_len + 1);
    n_a.push(0u64);
    for &l in w.letters() {
        n_a.push(n_a.last().unwrap() + u64::from(l == 0));
    }
    let n_b = pb.len().min(pa.len());
    // Every index used below must lie inside the scanned prefix.
    let n_forms = pb.len().min(prefix_len.saturating_sub(1));
    let u = |n: usize| n as u64;
    PositionIdentityReport {
        prefix_len,
        difference: FormCheck::run("p_b(n) - p_a(n) = n", n_b, |n| pb[n - 1] == pa[n - 1] + u(n)),
        position_a: FormCheck::run("p_a(n) = n - 1 + N_a(n - 1)", pa.len(), |n| pa[n - 1] == u(n) - 1 + n_a[n - 1]),
        position_b: FormCheck::run("p_b(n) = 2n - 1 + N_a(n - 1)", n_forms, |n| pb[n - 1] == 2 * u(n) - 1 + n_a[n - 1]),
        printed_position_a: FormCheck::run("p_a(n) = n - 2 + N_a(n)", pa.len().min(prefix_len), |n| {
            pa[n - 1] as i64 == n as i64 - 2 + n_a[n] as i64
        }),
        printed_position_b: FormCheck::run("p_b(n) = 2n - 2 + N_a(n)", n_forms, |n| pb[n - 1] == 2 * u(n) - 2 + n_a[n]),
        count_inverse: FormCheck::run("N_a(p_a(n) + 1) = n", pa.len(), |n| n_a[pa[n - 1] as usize + 1] == u(n)),
        series_a: "P_a = X/(1 - X)^2 - X/(1 - X) + X^2/(1 - X) * C_a".into(),
        series_b: "P_b = 2X/(1 - X)^2 - X/(1 - X) + X^2/(1 - X) * C_a".into(),
    }
}

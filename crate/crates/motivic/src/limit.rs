use crate::{classical_limit, interpolate_values, to_t, Result};
use hall2p_complex2::Pdvp;
use hall2p_lie::{build_at, classical_table, LieTable, Side};
use hall2p_quiver::Algebra;
use std::collections::BTreeSet;

#[derive(Clone, Debug, Default)]
pub struct LimitReport {
    pub checked: usize,
    pub mismatches: Vec<String>,
    pub poisoned: Vec<String>,
}

impl LimitReport {
    pub fn pass(&self) -> bool {
        self.mismatches.is_empty() && self.poisoned.is_empty()
    }
}

fn coeff(t: &LieTable, i: usize, j: usize, k: usize) -> Option<i64> {
    let b = t.bracket(i, j)?;
    Some(b.iter().find(|e| e.1 == k).map_or(0, |e| e.0))
}

/// Interpolates every structure constant of the integer tables at `primes`,
/// takes its value at `t = -1` and compares with the classical table.
pub fn lie_limit_check(alg: &Algebra, cap: &Pdvp, side: Side, primes: &[u32]) -> Result<LimitReport> {
    let tables = primes.iter().map(|&p| build_at(alg, p, cap, side)).collect::<std::result::Result<Vec<_>, _>>()?;
    let classical = classical_table(&tables)?;
    let mut rep = LimitReport::default();
    let n = classical.dim();
    let mut targets = BTreeSet::new();
    for t in &tables {
        for (&(i, j), b) in &t.brackets {
            for &(_, k) in b {
                targets.insert((i, j, k));
            }
        }
    }
    for (i, j, k) in targets {
        debug_assert!(i < n && j < n && k < n);
        let Some(vals) = tables.iter().map(|t| coeff(t, i, j, k).map(i128::from)).collect::<Option<Vec<_>>>() else {
            continue;
        };
        let fit = interpolate_values(primes, &vals, primes.len() - 2)?;
        rep.checked += 1;
        if !fit.verified {
            rep.poisoned.push(format!("[{i},{j}] at {k}: {}", fit.warning.unwrap_or_default()));
            continue;
        }
        let lim = classical_limit(&to_t(&fit));
        let want = coeff(&classical, i, j, k).unwrap_or(0) as i128;
        if lim != want {
            rep.mismatches.push(format!("[{},{}] at {}: limit {lim}, classical table {want}", classical.basis[i], classical.basis[j], classical.basis[k]));
        }
    }
    Ok(rep)
}

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{stick_count, Conformation};

use super::records::KnotRecord;

/// `6b`: a nontrivial knot of bridge index `b` needs at least this many
/// sticks.
pub fn bound_bridge_lower(b: u32) -> i64 {
    6 * b as i64
}

/// `⌈3√(c+2)⌉`, computed exactly as the least `k` with `k² ≥ 9(c+2)`.
pub fn bound_crossing_lower(c: u32) -> i64 {
    let target = 9 * (c as i64 + 2);
    let mut k = (target as f64).sqrt() as i64;
    while k * k < target {
        k += 1;
    }
    while k > 0 && (k - 1) * (k - 1) >= target {
        k -= 1;
    }
    k
}

/// `6α - 16`, an upper bound on the lattice stick index of a knot with an
/// arc presentation on `α ≥ 7` pages.
pub fn bound_arc_upper(alpha: u32) -> Result<i64> {
    if alpha < 7 {
        return Err(Error::Precondition(format!(
            "the 6α-16 bound needs at least seven pages (got {alpha}); knots with arc index below 7 \
             are the trefoil and the figure-eight, see catalog entries 3_1 and 4_1"
        )));
    }
    Ok(6 * alpha as i64 - 16)
}

/// `6c - 4`, an upper bound on the lattice stick index of a knot with
/// crossing number `c ≥ 3`.
pub fn bound_crossing_upper(c: u32) -> Result<i64> {
    if c < 3 {
        return Err(Error::Precondition(format!(
            "the 6c-4 bound applies to nontrivial knots (c >= 3), got c = {c}"
        )));
    }
    Ok(6 * c as i64 - 4)
}

/// Fewest sticks for a two-component link with one planar component and
/// linking number `n`: `4n + 4`, or `4n + 5` for `n ∈ {2, 3}`.
pub fn bound_link_planar(n: u32) -> i64 {
    let base = 4 * n as i64 + 4;
    if n == 2 || n == 3 {
        base + 1
    } else {
        base
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub label: String,
    pub bound: i64,
    pub value: i64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub record: String,
    pub sticks: usize,
    pub checks: Vec<BoundCheck>,
    /// The conformation attains the recorded lattice stick index.
    pub minimal: bool,
}

impl BoundReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "record {}: {} sticks", self.record, self.sticks)?;
        for c in &self.checks {
            let mark = if c.holds { "ok  " } else { "FAIL" };
            writeln!(f, "  {mark} {} (bound {}, value {})", c.label, c.bound, c.value)?;
        }
        write!(f, "  minimal: {}", if self.minimal { "yes" } else { "no" })
    }
}

/// Checks the bound formulas against an actual conformation of the
/// record's knot or link type.
pub fn check_bounds(r: &KnotRecord, c: &Conformation) -> Result<BoundReport> {
    let counts = stick_count(c)?;
    if c.components.len() != r.components as usize {
        return Err(Error::Precondition(format!(
            "record {} has {} components, conformation has {}",
            r.name,
            r.components,
            c.components.len()
        )));
    }
    let s = counts.total() as i64;
    let mut checks = Vec::new();
    let mut push = |label: String, bound: i64, value: i64, holds: bool| {
        checks.push(BoundCheck {
            label,
            bound,
            value,
            holds,
        })
    };
    let knot = r.components == 1;
    if knot {
        if let Some(b) = r.bridge.filter(|&b| b >= 2) {
            let lb = bound_bridge_lower(b);
            push(format!("6b <= sticks (b = {b})"), lb, s, lb <= s);
        }
        if let Some(cr) = r.crossing.filter(|&cr| cr >= 3) {
            let lb = bound_crossing_lower(cr);
            push(format!("ceil(3 sqrt(c+2)) <= sticks (c = {cr})"), lb, s, lb <= s);
            if let Some(known) = r.stick_index {
                let ub = bound_crossing_upper(cr)?;
                push(format!("recorded index <= 6c-4 (c = {cr})"), ub, known as i64, known as i64 <= ub);
            }
        }
        if let (Some(a), Some(known)) = (r.arc.filter(|&a| a >= 7), r.stick_index) {
            let ub = bound_arc_upper(a)?;
            push(format!("recorded index <= 6α-16 (α = {a})"), ub, known as i64, known as i64 <= ub);
        }
    }
    if let Some(known) = r.stick_index {
        push("recorded index <= sticks".into(), known as i64, s, known as i64 <= s);
    }
    Ok(BoundReport {
        record: r.name.clone(),
        sticks: counts.total(),
        minimal: r.stick_index.is_some_and(|k| k as i64 == s),
        checks,
    })
}

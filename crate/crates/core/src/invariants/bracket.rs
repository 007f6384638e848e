//! Kauffman bracket evaluation.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::diagram::PDCode;
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

/// Largest diagram the plain state sum accepts.
pub const STATE_SUM_LIMIT: usize = 25;

/// `-A² - A⁻²`, the value of an extra loop.
pub fn loop_value() -> LaurentPoly {
    LaurentPoly::from_terms([(2, -1), (-2, -1)])
}

fn dense_labels(pd: &PDCode) -> (Vec<[usize; 4]>, usize) {
    let mut index: HashMap<u32, usize> = HashMap::new();
    let crossings = pd
        .crossings
        .iter()
        .map(|x| {
            x.map(|l| {
                let n = index.len();
                *index.entry(l).or_insert(n)
            })
        })
        .collect();
    (crossings, index.len())
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

/// Loop counts tallied by the number of A-smoothings.
fn tally(crossings: &[[usize; 4]], labels: usize, states: std::ops::Range<u64>) -> Vec<Vec<u64>> {
    let n = crossings.len();
    let mut table = vec![vec![0u64; labels + 2]; n + 1];
    let mut parent = vec![0usize; labels];
    for state in states {
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i;
        }
        let mut loops = labels;
        for (k, &[a, b, c, d]) in crossings.iter().enumerate() {
            let pairs = if state >> k & 1 == 0 { [(a, b), (c, d)] } else { [(a, d), (b, c)] };
            for (x, y) in pairs {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[rx] = ry;
                    loops -= 1;
                }
            }
        }
        table[n - (state.count_ones() as usize)][loops] += 1;
    }
    table
}

/// The bracket `⟨D⟩` in the variable `A` by the full `2^c` state sum,
/// normalized so that a single crossing-free loop has bracket 1.
pub fn kauffman_bracket(pd: &PDCode) -> Result<LaurentPoly> {
    let n = pd.crossing_count();
    if n > STATE_SUM_LIMIT {
        return Err(Error::CrossingBudget {
            count: n,
            limit: STATE_SUM_LIMIT,
        });
    }
    let free = pd.free_loops();
    if n == 0 {
        return Ok(if free == 0 { LaurentPoly::one() } else { loop_value().pow(free as u32 - 1) });
    }
    let (crossings, labels) = dense_labels(pd);
    let total: u64 = 1 << n;
    let chunk: u64 = 1 << n.min(12);
    let table = (0..total / chunk)
        .into_par_iter()
        .map(|i| tally(&crossings, labels, i * chunk..(i + 1) * chunk))
        .reduce(
            || vec![vec![0u64; labels + 2]; n + 1],
            |mut acc, t| {
                for (ra, rt) in acc.iter_mut().zip(t) {
                    for (a, b) in ra.iter_mut().zip(rt) {
                        *a += b;
                    }
                }
                acc
            },
        );
    let d = loop_value();
    let mut out = LaurentPoly::zero();
    for (a_count, row) in table.iter().enumerate() {
        let exp = 2 * a_count as i32 - n as i32;
        for (loops, &count) in row.iter().enumerate() {
            if count == 0 {
                continue;
            }
            let count = i64::try_from(count).map_err(|_| Error::Overflow)?;
            let term = d
                .pow((loops + free - 1) as u32)
                .checked_mul(&LaurentPoly::monomial(exp, count))
                .ok_or(Error::Overflow)?;
            out = out.checked_add(&term).ok_or(Error::Overflow)?;
        }
    }
    Ok(out)
}

/// Boundary connectivity: sorted `(lo, hi)` pairs of open edge labels that
/// are joined by an arc of the partial smoothing.
type Matching = Vec<(u32, u32)>;

fn partner(m: &Matching, x: u32) -> Option<(usize, u32)> {
    m.iter().enumerate().find_map(|(i, &(a, b))| {
        if a == x {
            Some((i, b))
        } else if b == x {
            Some((i, a))
        } else {
            None
        }
    })
}

/// Joins `x` and `y` by an arc; returns the number of loops closed.
fn join(m: &mut Matching, x: u32, y: u32) -> u32 {
    if x == y {
        return 1;
    }
    let px = partner(m, x);
    if let Some((i, p)) = px {
        if p == y {
            m.remove(i);
            return 1;
        }
    }
    let end_x = match px {
        Some((i, p)) => {
            m.remove(i);
            p
        }
        None => x,
    };
    let end_y = match partner(m, y) {
        Some((i, q)) => {
            m.remove(i);
            q
        }
        None => y,
    };
    let pair = (end_x.min(end_y), end_x.max(end_y));
    let pos = m.partition_point(|&e| e < pair);
    m.insert(pos, pair);
    0
}

fn contraction_order(pd: &PDCode) -> Vec<usize> {
    let n = pd.crossing_count();
    let mut done = vec![false; n];
    let mut seen: HashMap<u32, u32> = HashMap::new();
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let best = (0..n)
            .filter(|&k| !done[k])
            .max_by_key(|&k| {
                let open = pd.crossings[k].iter().filter(|l| seen.get(l) == Some(&1)).count();
                (open, std::cmp::Reverse(k))
            })
            .unwrap();
        done[best] = true;
        for &l in &pd.crossings[best] {
            *seen.entry(l).or_default() += 1;
        }
        order.push(best);
    }
    order
}

/// The bracket by contracting crossings one at a time while tracking how the
/// partial smoothing connects the open edge labels. Equal to
/// [`kauffman_bracket`] but with cost governed by the widest boundary rather
/// than by `2^c`, so it handles the larger diagrams of the constructions.
pub fn bracket_by_contraction(pd: &PDCode) -> Result<LaurentPoly> {
    let n = pd.crossing_count();
    let free = pd.free_loops();
    let d = loop_value();
    if n == 0 {
        return Ok(if free == 0 { LaurentPoly::one() } else { d.pow(free as u32 - 1) });
    }
    let d_pow = [LaurentPoly::one(), d.clone(), d.pow(2)];
    let a_plus = LaurentPoly::monomial(1, 1);
    let a_minus = LaurentPoly::monomial(-1, 1);
    let mut states: HashMap<Matching, LaurentPoly> = HashMap::new();
    states.insert(Vec::new(), LaurentPoly::one());
    for k in contraction_order(pd) {
        let [a, b, c, dd] = pd.crossings[k];
        let mut next: HashMap<Matching, LaurentPoly> = HashMap::with_capacity(states.len() * 2);
        for (m, poly) in &states {
            for (pairs, weight) in [([(a, b), (c, dd)], &a_plus), ([(a, dd), (b, c)], &a_minus)] {
                let mut m2 = m.clone();
                let loops = join(&mut m2, pairs[0].0, pairs[0].1) + join(&mut m2, pairs[1].0, pairs[1].1);
                let term = poly
                    .checked_mul(weight)
                    .and_then(|p| p.checked_mul(&d_pow[loops as usize]))
                    .ok_or(Error::Overflow)?;
                let slot = next.entry(m2).or_default();
                *slot = slot.checked_add(&term).ok_or(Error::Overflow)?;
            }
        }
        next.retain(|_, p| !p.is_zero());
        states = next;
    }
    let total = states.remove(&Vec::new()).unwrap_or_default();
    if !states.is_empty() {
        return Err(Error::BadPd("open edges left after contraction".into()));
    }
    let mut out = total.div_exact(&d).ok_or(Error::BadPd("no closed loop in any state".into()))?;
    for _ in 0..free {
        out = out.checked_mul(&d).ok_or(Error::Overflow)?;
    }
    Ok(out)
}

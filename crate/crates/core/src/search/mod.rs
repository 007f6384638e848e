//! Exhaustive enumeration of properly leveled lattice polygons by stick
//! budget, classified by Jones polynomial.
//!
//! A properly leveled polygon is determined by its cyclic word of stick axes
//! and, per axis, the order in which its runs visit the levels `1..=p`. Words
//! are enumerated up to rotation, reversal and axis permutations preserving
//! the split; for each word a depth-first search assigns levels stick by
//! stick, rejecting a branch as soon as the new stick meets an earlier one.
//! Each leaf is then kept only if it is lexicographically least among its
//! images under the word's stabilizer and the level reflections, so every
//! polygon is produced once up to signed coordinate permutations.

mod checkpoint;
mod words;

use std::collections::BTreeMap;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diagram::{crossing_count, project_unchecked};
use crate::error::{Error, Result};
use crate::invariants::{jones, JonesPoly};
use crate::lattice::{Axis, Conformation, LatticePoint};

pub use checkpoint::Checkpoint;
use words::{canonical_words, Symmetry};

/// Largest budget accepted by the enumerator.
pub const MAX_BUDGET: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationSpec {
    pub budget: usize,
    /// A single split `(px, py, pz)`; `None` sweeps every split of the budget.
    pub split: Option<[usize; 3]>,
    /// Deduplicate under signed coordinate permutations.
    pub symmetry: bool,
}

impl EnumerationSpec {
    pub fn new(budget: usize) -> EnumerationSpec {
        EnumerationSpec {
            budget,
            split: None,
            symmetry: true,
        }
    }

    pub fn with_split(budget: usize, split: [usize; 3]) -> EnumerationSpec {
        EnumerationSpec {
            budget,
            split: Some(split),
            symmetry: true,
        }
    }

    /// The splits to enumerate: each part is 0 or at least 2, at most one
    /// part is 0, and no part exceeds half the budget. Under symmetry only
    /// non-increasing splits are listed.
    pub fn splits(&self) -> Result<Vec<[usize; 3]>> {
        if self.budget > MAX_BUDGET {
            return Err(Error::Precondition(format!(
                "budget {} exceeds the enumeration limit {MAX_BUDGET}",
                self.budget
            )));
        }
        if let Some(split) = self.split {
            if split.iter().sum::<usize>() != self.budget {
                return Err(Error::Precondition(format!("split {split:?} does not sum to {}", self.budget)));
            }
            return Ok(vec![split]);
        }
        let s = self.budget;
        let ok = |p: usize| p == 0 || (2..=s / 2).contains(&p);
        let mut out = Vec::new();
        for px in 0..=s {
            for py in 0..=s - px {
                let split = [px, py, s - px - py];
                let sorted = !self.symmetry || (px >= py && py >= s - px - py);
                if sorted && split.iter().all(|&p| ok(p)) && split.iter().filter(|&&p| p == 0).count() <= 1 {
                    out.push(split);
                }
            }
        }
        Ok(out)
    }
}

/// One canonical axis word with its enumeration state.
struct WordTask {
    split: [usize; 3],
    word: Vec<usize>,
    stabilizer: Vec<Symmetry>,
}

impl WordTask {
    fn key(&self) -> String {
        let w: String = self.word.iter().map(|&a| Axis::from_index(a).to_string()).collect();
        format!("{},{},{} {w}", self.split[0], self.split[1], self.split[2])
    }
}

fn tasks(spec: &EnumerationSpec) -> Result<Vec<WordTask>> {
    let mut out = Vec::new();
    for split in spec.splits()? {
        for (word, stabilizer) in canonical_words(split, spec.symmetry) {
            out.push(WordTask {
                split,
                word,
                stabilizer,
            });
        }
    }
    Ok(out)
}

type Corner = [i64; 3];

fn sticks_meet(a0: Corner, a1: Corner, b0: Corner, b1: Corner) -> bool {
    (0..3).all(|k| {
        let (alo, ahi) = (a0[k].min(a1[k]), a0[k].max(a1[k]));
        let (blo, bhi) = (b0[k].min(b1[k]), b0[k].max(b1[k]));
        alo <= bhi && blo <= ahi
    })
}

struct Walker<'a, F: FnMut(&[Corner])> {
    word: &'a [usize],
    levels: [i64; 3],
    last: [usize; 3],
    used: [Vec<bool>; 3],
    corners: Vec<Corner>,
    visit: F,
}

impl<F: FnMut(&[Corner])> Walker<'_, F> {
    fn step(&mut self, i: usize) {
        let s = self.word.len();
        if i == s {
            (self.visit)(&self.corners[..s]);
            return;
        }
        let a = self.word[i];
        let here = self.corners[i];
        let choices: Vec<i64> = if i == self.last[a] {
            vec![self.corners[0][a]]
        } else {
            (1..=self.levels[a]).filter(|&l| !self.used[a][l as usize]).collect()
        };
        for level in choices {
            let mut next = here;
            next[a] = level;
            // the new stick may touch only its neighbours
            let closing = i == s - 1;
            let hit = (0..i.saturating_sub(1))
                .filter(|&j| !(closing && j == 0))
                .any(|j| sticks_meet(self.corners[j], self.corners[j + 1], here, next));
            if hit {
                continue;
            }
            if closing && next != self.corners[0] {
                continue;
            }
            self.used[a][level as usize] = true;
            self.corners.push(next);
            self.step(i + 1);
            self.corners.pop();
            if i != self.last[a] {
                self.used[a][level as usize] = false;
            }
        }
    }
}

/// Calls `visit` on the corner sequence of every properly leveled polygon
/// with the given word (before symmetry reduction).
fn walk_word(split: [usize; 3], word: &[usize], visit: impl FnMut(&[Corner])) {
    let levels = split.map(|p| p.max(1) as i64);
    let mut last = [usize::MAX; 3];
    for (i, &a) in word.iter().enumerate() {
        last[a] = i;
    }
    let mut walker = Walker {
        word,
        levels,
        last,
        used: levels.map(|l| vec![false; l as usize + 1]),
        corners: Vec::with_capacity(word.len() + 1),
        visit,
    };
    let starts = |a: usize| 1..=levels[a];
    for x in starts(0) {
        for y in starts(1) {
            for z in starts(2) {
                let c0 = [x, y, z];
                for (used, &level) in walker.used.iter_mut().zip(&c0) {
                    used.iter_mut().for_each(|u| *u = false);
                    used[level as usize] = true;
                }
                walker.corners.clear();
                walker.corners.push(c0);
                walker.step(0);
            }
        }
    }
}

fn is_canonical(corners: &[Corner], split: [usize; 3], stabilizer: &[Symmetry]) -> bool {
    let levels = split.map(|p| p.max(1) as i64);
    for sym in stabilizer {
        for flips in 0..8u8 {
            if sym.is_identity() && flips == 0 {
                continue;
            }
            if sym.image_less(corners, levels, flips) {
                return false;
            }
        }
    }
    true
}

fn to_conformation(corners: &[Corner]) -> Conformation {
    Conformation::knot(corners.iter().map(|&c| LatticePoint::from_array(c)).collect())
}

/// Streams every polygon of `spec` (once per symmetry class when
/// `spec.symmetry` is set) to `visit`, in a deterministic order; returns the
/// number emitted.
pub fn enumerate_polygons(spec: &EnumerationSpec, mut visit: impl FnMut(Conformation)) -> Result<u64> {
    let mut count = 0;
    for task in tasks(spec)? {
        walk_word(task.split, &task.word, |c| {
            if !spec.symmetry || is_canonical(c, task.split, &task.stabilizer) {
                count += 1;
                visit(to_conformation(c));
            }
        });
    }
    Ok(count)
}

/// Jones polynomial of an enumerated polygon, read along `z`.
fn polygon_jones(c: &Conformation) -> Result<JonesPoly> {
    let d = project_unchecked(c, Axis::Z);
    if crossing_count(&d) < 3 {
        return Ok(JonesPoly::one());
    }
    jones(&d)
}

/// Jones class key: the lexicographically smaller of the polynomial and its
/// mirror, so that mirror images share a class.
fn class_of(j: &JonesPoly) -> JonesPoly {
    let m = j.mirror();
    let key = |p: &JonesPoly| p.0.terms();
    if key(&m) < key(j) {
        m
    } else {
        j.clone()
    }
}

/// The Jones class (up to mirror) of an enumerated polygon.
pub fn jones_class(c: &Conformation) -> Result<JonesPoly> {
    polygon_jones(c).map(|j| class_of(&j))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JonesClass {
    /// Representative up to mirror.
    pub jones: JonesPoly,
    pub count: u64,
    /// The first polygon of the class in enumeration order.
    pub example: Conformation,
}

/// Counts for one canonical word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordResult {
    pub polygons: u64,
    pub classes: Vec<JonesClass>,
}

fn run_word(task: &WordTask, symmetry: bool) -> Result<WordResult> {
    let mut polygons = 0;
    let mut classes: Vec<JonesClass> = Vec::new();
    let mut err = None;
    walk_word(task.split, &task.word, |c| {
        if err.is_some() || (symmetry && !is_canonical(c, task.split, &task.stabilizer)) {
            return;
        }
        polygons += 1;
        let conf = to_conformation(c);
        match jones_class(&conf) {
            Ok(key) => {
                match classes.iter_mut().find(|k| k.jones == key) {
                    Some(k) => k.count += 1,
                    None => classes.push(JonesClass {
                        jones: key,
                        count: 1,
                        example: conf,
                    }),
                }
            }
            Err(e) => err = Some(e),
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(WordResult { polygons, classes }),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitSummary {
    pub split: [usize; 3],
    pub words: usize,
    pub polygons: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub budget: usize,
    pub splits: Vec<SplitSummary>,
    pub polygons: u64,
    /// Jones classes up to mirror, unknot first, then in order of first
    /// appearance.
    pub classes: Vec<JonesClass>,
}

impl SweepReport {
    pub fn nontrivial(&self) -> impl Iterator<Item = &JonesClass> {
        self.classes.iter().filter(|c| !c.jones.is_unknot())
    }

    pub fn contains(&self, target: &JonesPoly) -> bool {
        self.classes.iter().any(|c| c.jones.eq_up_to_mirror(target))
    }
}

/// Enumerates `spec` on `workers` threads, classifying every polygon by its
/// Jones polynomial. With a checkpoint, finished words are recorded as they
/// complete and skipped when the sweep is resumed. The report does not
/// depend on the worker count.
pub fn sweep(spec: &EnumerationSpec, workers: usize, checkpoint: Option<&Path>) -> Result<SweepReport> {
    let tasks = tasks(spec)?;
    let ckpt = checkpoint.map(|p| Checkpoint::open(p, spec)).transpose()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::Precondition(format!("cannot start worker pool: {e}")))?;
    let results: Vec<Result<WordResult>> = pool.install(|| {
        tasks
            .par_iter()
            .map(|t| {
                let key = t.key();
                if let Some(done) = ckpt.as_ref().and_then(|c| c.get(&key)) {
                    return Ok(done);
                }
                let r = run_word(t, spec.symmetry)?;
                if let Some(c) = &ckpt {
                    c.record(&key, &r)?;
                }
                Ok(r)
            })
            .collect()
    });
    let mut splits: Vec<SplitSummary> = Vec::new();
    let mut merged: BTreeMap<usize, JonesClass> = BTreeMap::new();
    let mut order: Vec<JonesPoly> = vec![JonesPoly::one()];
    let mut polygons = 0;
    for (task, r) in tasks.iter().zip(results) {
        let r = r?;
        polygons += r.polygons;
        match splits.iter_mut().find(|s| s.split == task.split) {
            Some(s) => {
                s.words += 1;
                s.polygons += r.polygons;
            }
            None => splits.push(SplitSummary {
                split: task.split,
                words: 1,
                polygons: r.polygons,
            }),
        }
        for class in r.classes {
            let idx = match order.iter().position(|j| *j == class.jones) {
                Some(i) => i,
                None => {
                    order.push(class.jones.clone());
                    order.len() - 1
                }
            };
            merged
                .entry(idx)
                .and_modify(|c| c.count += class.count)
                .or_insert(class);
        }
    }
    Ok(SweepReport {
        budget: spec.budget,
        splits,
        polygons,
        classes: merged.into_values().collect(),
    })
}

/// Result of sweeping budgets upward for a target polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalityCertificate {
    pub target: JonesPoly,
    /// Least budget with a polygon whose Jones polynomial equals the target
    /// up to mirror.
    pub found_at: Option<usize>,
    pub example: Option<Conformation>,
    /// Budgets swept, in order.
    pub swept: Vec<usize>,
}

/// Sweeps budgets `4..=max_budget` until some polygon has Jones polynomial
/// `target` (up to mirror, since the symmetry classes contain both
/// chiralities).
pub fn minimality_certificate(target: &JonesPoly, max_budget: usize, workers: usize) -> Result<MinimalityCertificate> {
    let mut swept = Vec::new();
    for budget in 4..=max_budget {
        let report = sweep(&EnumerationSpec::new(budget), workers, None)?;
        swept.push(budget);
        if let Some(c) = report.classes.iter().find(|c| c.jones.eq_up_to_mirror(target)) {
            return Ok(MinimalityCertificate {
                target: target.clone(),
                found_at: Some(budget),
                example: Some(c.example.clone()),
                swept,
            });
        }
    }
    Ok(MinimalityCertificate {
        target: target.clone(),
        found_at: None,
        example: None,
        swept,
    })
}

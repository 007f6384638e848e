use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{Conformation, LatticePoint};

/// An arc presentation: `pages[k]` holds the two binding levels (in
/// `1..=α`) joined by the arc on the `k`-th page in angular order.
///
/// The knot is read as a grid diagram: page `k` is the vertical segment in
/// column `k` between its two levels, each level is the horizontal segment
/// joining its two pages, and verticals pass over horizontals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcPresentation {
    pub pages: Vec<[u32; 2]>,
}

impl ArcPresentation {
    pub fn new(pages: Vec<[u32; 2]>) -> Result<ArcPresentation> {
        let a = ArcPresentation { pages };
        a.check()?;
        Ok(a)
    }

    /// Builds a presentation from grid points `(column, row)`, two per
    /// column, both 1-based.
    pub fn from_grid(points: &[[u32; 2]]) -> Result<ArcPresentation> {
        let alpha = points.len() / 2;
        let mut pages = vec![Vec::new(); alpha];
        for &[col, row] in points {
            if col == 0 || col as usize > alpha {
                return Err(Error::Precondition(format!("grid column {col} out of range 1..={alpha}")));
            }
            pages[col as usize - 1].push(row);
        }
        let pages = pages
            .into_iter()
            .enumerate()
            .map(|(k, rows)| match rows[..] {
                [a, b] => Ok([a, b]),
                _ => Err(Error::Precondition(format!("grid column {} needs exactly two points", k + 1))),
            })
            .collect::<Result<_>>()?;
        ArcPresentation::new(pages)
    }

    pub fn alpha(&self) -> usize {
        self.pages.len()
    }

    fn check(&self) -> Result<()> {
        let alpha = self.alpha();
        if alpha < 2 {
            return Err(Error::Precondition("an arc presentation needs at least two pages".into()));
        }
        let mut uses = vec![0; alpha + 1];
        for (k, &[a, b]) in self.pages.iter().enumerate() {
            for l in [a, b] {
                if l == 0 || l as usize > alpha {
                    return Err(Error::Precondition(format!("page {k}: level {l} out of range 1..={alpha}")));
                }
                uses[l as usize] += 1;
            }
            if a == b {
                return Err(Error::Precondition(format!("page {k} joins level {a} to itself")));
            }
        }
        if let Some(l) = (1..=alpha).find(|&l| uses[l] != 2) {
            return Err(Error::Precondition(format!("level {l} is used by {} pages, expected 2", uses[l])));
        }
        if self.turns().len() != 2 * alpha {
            return Err(Error::Precondition("the arcs do not form a single closed curve".into()));
        }
        Ok(())
    }

    /// Grid turning points `(column, row)` in traversal order, starting with
    /// the lower end of page 0 and travelling along its vertical segment.
    fn turns(&self) -> Vec<(usize, u32)> {
        let alpha = self.alpha();
        let mut out = Vec::with_capacity(2 * alpha);
        let (mut col, mut row) = (0usize, self.pages[0][0].min(self.pages[0][1]));
        loop {
            out.push((col, row));
            let [a, b] = self.pages[col];
            row = if a == row { b } else { a };
            out.push((col, row));
            col = (0..alpha)
                .find(|&k| k != col && self.pages[k].contains(&row))
                .expect("every level is used by two pages");
            if col == 0 || out.len() > 2 * alpha {
                return out;
            }
        }
    }
}

/// Segment `i` of the grid polygon runs from turn `i` to turn `i + 1`; even
/// segments are vertical. Returns a height per segment such that every
/// vertical lies above each horizontal it crosses, with as many pairs of
/// consecutive segments sharing a height as the greedy pass allows.
fn segment_heights(turns: &[(usize, u32)]) -> Vec<i64> {
    let m = turns.len();
    let seg = |i: usize| (turns[i], turns[(i + 1) % m]);
    // above[h]: verticals passing over horizontal h
    let mut above: Vec<Vec<usize>> = vec![Vec::new(); m];
    for v in (0..m).step_by(2) {
        let ((col, r1), (_, r2)) = seg(v);
        let (lo, hi) = (r1.min(r2), r1.max(r2));
        for h in (1..m).step_by(2) {
            let ((c1, row), (c2, _)) = seg(h);
            let (cl, ch) = (c1.min(c2), c1.max(c2));
            if cl < col && col < ch && lo < row && row < hi {
                above[h].push(v);
            }
        }
    }
    let mut class: Vec<usize> = (0..m).collect();
    let acyclic = |class: &[usize]| -> Option<Vec<i64>> {
        // strict edges between classes, horizontal class below vertical class
        let k = m;
        let mut succ = vec![Vec::new(); k];
        let mut indeg = vec![0usize; k];
        for h in 0..m {
            for &v in &above[h] {
                let (a, b) = (class[h], class[v]);
                if a == b {
                    return None;
                }
                succ[a].push(b);
                indeg[b] += 1;
            }
        }
        let mut level = vec![0i64; k];
        let mut queue: Vec<usize> = (0..k).filter(|&c| indeg[c] == 0).collect();
        let mut seen = 0;
        while let Some(c) = queue.pop() {
            seen += 1;
            for &d in &succ[c] {
                level[d] = level[d].max(level[c] + 1);
                indeg[d] -= 1;
                if indeg[d] == 0 {
                    queue.push(d);
                }
            }
        }
        (seen == k).then_some(level)
    };
    for i in 0..m {
        let j = (i + 1) % m;
        let (ci, cj) = (class[i], class[j]);
        if ci == cj {
            continue;
        }
        let trial: Vec<usize> = class.iter().map(|&c| if c == cj { ci } else { c }).collect();
        if acyclic(&trial).is_some() {
            class = trial;
        }
    }
    let level = acyclic(&class).expect("merging keeps the constraint graph acyclic");
    (0..m).map(|i| level[class[i]]).collect()
}

/// A lattice conformation of the knot of an arc presentation with at most
/// `6α - 16` sticks; see [`lift_grid`].
pub fn from_arc_presentation(a: &ArcPresentation) -> Result<Conformation> {
    a.check()?;
    let alpha = a.alpha();
    if alpha < 7 {
        return Err(Error::Precondition(format!(
            "arc presentations with fewer than seven pages (got {alpha}) give only the trefoil and \
             the figure-eight; use catalog entries 3_1 and 4_1"
        )));
    }
    lift_grid(a)
}

/// Lifts the grid diagram of `a` into space with horizontals and verticals
/// at heights from [`segment_heights`]; a vertical stick joins consecutive
/// segments only where their heights differ, so the result has `2α` planar
/// sticks plus one vertical stick per unmerged corner, at most `4α - 2`.
pub fn lift_grid(a: &ArcPresentation) -> Result<Conformation> {
    a.check()?;
    let turns = a.turns();
    let z = segment_heights(&turns);
    let m = turns.len();
    let mut corners = Vec::with_capacity(2 * m);
    for i in 0..m {
        let (col, row) = turns[i];
        let (zin, zout) = (z[(i + m - 1) % m], z[i]);
        let (x, y) = (col as i64 + 1, row as i64);
        corners.push(LatticePoint::new(x, y, zin));
        if zin != zout {
            corners.push(LatticePoint::new(x, y, zout));
        }
    }
    let c = Conformation::knot(corners);
    c.ensure_valid()?;
    Ok(c)
}

//! Projections of conformations to planar diagrams.
//!
//! The projection direction is tilted infinitesimally off the chosen axis:
//! a point `(u, v, h)` (with `h` the coordinate along the axis) lands at
//! `(u + ε·a·h, v + ε·b·h)`. Parallel stick images that would coincide are
//! thereby separated in the order of their heights, and every comparison the
//! projection needs reduces to a lexicographic comparison of
//! `(lattice coordinate, height)` pairs. No floating point is involved.

mod pd;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{properly_level, Axis, Conformation};

pub use pd::PDCode;

/// A stick of the projected conformation, by component and stick index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StrandRef {
    pub component: usize,
    pub stick: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing {
    pub over: StrandRef,
    pub under: StrandRef,
    /// Right-handed crossings are `+1`.
    pub sign: i8,
    /// Lattice coordinates `(u, v)` of the crossing in the projection plane.
    pub position: [i64; 2],
}

/// One pass of a component through a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Passage {
    pub crossing: usize,
    pub over: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanarDiagram {
    pub axis: Axis,
    pub crossings: Vec<Crossing>,
    /// For each component, its passages through crossings in travel order.
    pub passages: Vec<Vec<Passage>>,
}

/// Position along a stick, crossing index and whether the stick is over.
type StickPassage = ((i64, i64), usize, bool);

/// A stick in projection-plane terms.
#[derive(Debug, Clone, Copy)]
struct Flat {
    strand: StrandRef,
    /// Coordinate of the stick on the other in-plane axis.
    fixed: i64,
    height: i64,
    lo: i64,
    hi: i64,
    dir: i64,
}

fn flats(c: &Conformation, axis: Axis, along: Axis, other: Axis) -> Vec<Flat> {
    c.sticks()
        .filter(|s| s.axis == along)
        .map(|s| Flat {
            strand: StrandRef {
                component: s.component,
                stick: s.index,
            },
            fixed: s.start.get(other),
            height: s.start.get(axis),
            lo: s.lo(),
            hi: s.hi(),
            dir: s.direction(),
        })
        .collect()
}

/// Projects along `axis`. The input must be valid and properly leveled along
/// `axis`; use [`project_auto`] to level first.
pub fn project(c: &Conformation, axis: Axis) -> Result<PlanarDiagram> {
    c.ensure_valid()?;
    if !crate::lattice::is_leveled_along(c, axis) {
        return Err(Error::NotLeveled);
    }
    Ok(project_unchecked(c, axis))
}

/// Properly levels `c`, then projects along `axis`.
pub fn project_auto(c: &Conformation, axis: Axis) -> Result<PlanarDiagram> {
    c.ensure_valid()?;
    Ok(project_unchecked(&properly_level(c), axis))
}

/// Projection without the leveling precondition. The tilt argument works
/// for any valid conformation; leveling only normalizes the heights.
pub(crate) fn project_unchecked(c: &Conformation, axis: Axis) -> PlanarDiagram {
    let (u, v) = axis.plane();
    let us = flats(c, axis, u, v);
    let vs = flats(c, axis, v, u);

    let mut crossings = Vec::new();
    // (component, stick) -> [(key along stick, crossing, over)]
    let mut on_stick: Vec<Vec<Vec<StickPassage>>> =
        c.components.iter().map(|comp| vec![Vec::new(); comp.len()]).collect();

    for a in &us {
        for b in &vs {
            // image of a: u' in ((a.lo, h_a), (a.hi, h_a)), v' = (a.fixed, h_a)
            // image of b: u' = (b.fixed, h_b), v' in ((b.lo, h_b), (b.hi, h_b))
            let bu = (b.fixed, b.height);
            let av = (a.fixed, a.height);
            let hit = (a.lo, a.height) < bu && bu < (a.hi, a.height) && (b.lo, b.height) < av && av < (b.hi, b.height);
            if !hit {
                continue;
            }
            debug_assert_ne!(a.height, b.height, "valid conformations have no transverse intersections");
            let a_over = a.height > b.height;
            let (over, under) = if a_over { (a, b) } else { (b, a) };
            let dir_a = [a.dir, 0];
            let dir_b = [0, b.dir];
            let (od, ud) = if a_over { (dir_a, dir_b) } else { (dir_b, dir_a) };
            let cross = od[0] * ud[1] - od[1] * ud[0];
            let idx = crossings.len();
            crossings.push(Crossing {
                over: over.strand,
                under: under.strand,
                sign: cross.signum() as i8,
                position: [b.fixed, a.fixed],
            });
            let key_a = (bu.0 * a.dir, bu.1 * a.dir);
            let key_b = (av.0 * b.dir, av.1 * b.dir);
            on_stick[a.strand.component][a.strand.stick].push((key_a, idx, a_over));
            on_stick[b.strand.component][b.strand.stick].push((key_b, idx, !a_over));
        }
    }

    let passages = on_stick
        .into_iter()
        .map(|sticks| {
            sticks
                .into_iter()
                .flat_map(|mut list| {
                    list.sort_unstable();
                    list.into_iter().map(|(_, crossing, over)| Passage { crossing, over })
                })
                .collect()
        })
        .collect();

    PlanarDiagram {
        axis,
        crossings,
        passages,
    }
}

impl PlanarDiagram {
    pub fn component_count(&self) -> usize {
        self.passages.len()
    }

    /// The diagram of the mirror image: every crossing switched.
    pub fn mirrored(&self) -> PlanarDiagram {
        let mut d = self.clone();
        for x in &mut d.crossings {
            std::mem::swap(&mut x.over, &mut x.under);
            x.sign = -x.sign;
        }
        for comp in &mut d.passages {
            for p in comp {
                p.over = !p.over;
            }
        }
        d
    }
}

pub fn crossing_count(d: &PlanarDiagram) -> usize {
    d.crossings.len()
}

pub fn writhe(d: &PlanarDiagram) -> i64 {
    d.crossings.iter().map(|x| x.sign as i64).sum()
}

/// Half the signed count of crossings between components `a` and `b`.
pub fn linking_number(d: &PlanarDiagram, a: usize, b: usize) -> Result<i64> {
    let n = d.component_count();
    for i in [a, b] {
        if i >= n {
            return Err(Error::NoSuchComponent(i));
        }
    }
    if a == b {
        return Err(Error::SameComponent);
    }
    let twice: i64 = d
        .crossings
        .iter()
        .filter(|x| {
            let pair = (x.over.component, x.under.component);
            pair == (a, b) || pair == (b, a)
        })
        .map(|x| x.sign as i64)
        .sum();
    debug_assert_eq!(twice % 2, 0);
    Ok(twice / 2)
}

/// Labels the diagram's edges and lists each crossing as `[a, b, c, d]`,
/// counter-clockwise from the incoming under edge.
pub fn pd_code(d: &PlanarDiagram) -> PDCode {
    let mut next = 1u32;
    // per crossing: (under in, under out), (over in, over out)
    let mut under = vec![(0u32, 0u32); d.crossings.len()];
    let mut over = vec![(0u32, 0u32); d.crossings.len()];
    let mut components = Vec::with_capacity(d.passages.len());
    for comp in &d.passages {
        let m = comp.len() as u32;
        let labels: Vec<u32> = (next..next + m).collect();
        for (j, p) in comp.iter().enumerate() {
            let out = labels[j];
            let inc = labels[(j + comp.len() - 1) % comp.len()];
            let slot = if p.over { &mut over } else { &mut under };
            slot[p.crossing] = (inc, out);
        }
        next += m;
        components.push(labels);
    }
    let crossings = d
        .crossings
        .iter()
        .enumerate()
        .map(|(k, x)| {
            let (a, c) = under[k];
            let (oi, oo) = over[k];
            if x.sign > 0 {
                [a, oo, c, oi]
            } else {
                [a, oi, c, oo]
            }
        })
        .collect();
    let signs = d.crossings.iter().map(|x| x.sign).collect();
    PDCode::from_parts(crossings, signs, components)
}

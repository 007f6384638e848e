use super::{Axis, Conformation};

/// A maximal stretch of a component between two consecutive sticks along one
/// axis; every corner in it shares the same coordinate on that axis. A
/// component lying in a plane perpendicular to the axis is a single run.
#[derive(Debug, Clone)]
struct Run {
    component: usize,
    corners: Vec<usize>,
    level: i64,
}

fn runs(c: &Conformation, axis: Axis) -> Vec<Run> {
    let mut out = Vec::new();
    for (ci, comp) in c.components.iter().enumerate() {
        let n = comp.len();
        let along: Vec<bool> = (0..n).map(|i| comp.stick_axis(i) == axis).collect();
        let Some(first) = along.iter().position(|&b| b) else {
            out.push(Run {
                component: ci,
                corners: (0..n).collect(),
                level: comp.corners[0].get(axis),
            });
            continue;
        };
        let start = (first + 1) % n;
        let mut current = Vec::new();
        for k in 0..n {
            let i = (start + k) % n;
            current.push(i);
            if along[i] {
                out.push(Run {
                    component: ci,
                    level: comp.corners[current[0]].get(axis),
                    corners: std::mem::take(&mut current),
                });
            }
        }
        debug_assert!(current.is_empty());
    }
    out
}

/// Reassigns coordinate levels so that along each axis the runs occupy the
/// levels `1..=R` one per level. Runs sharing a level are separated in order
/// of (component, lowest corner index); since nothing else lives between two
/// adjacent integer levels this is an isotopy, and it never changes the stick
/// count.
pub fn properly_level(c: &Conformation) -> Conformation {
    let mut out = c.clone();
    for axis in Axis::ALL {
        let mut rs = runs(c, axis);
        rs.sort_by_key(|r| (r.level, r.component, *r.corners.iter().min().unwrap()));
        for (rank, r) in rs.iter().enumerate() {
            for &i in &r.corners {
                out.components[r.component].corners[i].set(axis, rank as i64 + 1);
            }
        }
    }
    out
}

/// True when, along every axis, each level `1..=R` holds exactly one run
/// (two stick endpoints, or one planar component).
pub fn is_properly_leveled(c: &Conformation) -> bool {
    Axis::ALL.into_iter().all(|axis| is_leveled_along(c, axis))
}

/// The single-axis part of [`is_properly_leveled`].
pub fn is_leveled_along(c: &Conformation, axis: Axis) -> bool {
    let mut levels: Vec<i64> = runs(c, axis).iter().map(|r| r.level).collect();
    levels.sort_unstable();
    levels.iter().enumerate().all(|(k, &l)| l == k as i64 + 1)
}

//! Exact-integer lattice conformations.
//!
//! A conformation is stored as cyclic corner lists, one per component. Sticks
//! are derived from consecutive corners, so "a stick is a maximal segment" is a
//! property checked by [`validate`] rather than something callers maintain.

mod features;
mod io;
mod level;
mod moves;
mod transform;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use features::{detect_clean_ls, detect_exterior_ls, torsion_sticks, LShape};
pub use io::{from_json, to_json};
pub use level::{is_leveled_along, is_properly_leveled, properly_level};
pub use moves::{expand_halfspace, Side};
pub use transform::{SignedPermutation, Transform};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn index(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
            Axis::Z => 2,
        }
    }

    pub fn from_index(i: usize) -> Axis {
        Axis::ALL[i]
    }

    /// The two remaining axes `(u, v)` ordered so that `(u, v, self)` is a
    /// right-handed frame.
    pub fn plane(self) -> (Axis, Axis) {
        match self {
            Axis::X => (Axis::Y, Axis::Z),
            Axis::Y => (Axis::Z, Axis::X),
            Axis::Z => (Axis::X, Axis::Y),
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axis::X => "x",
            Axis::Y => "y",
            Axis::Z => "z",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

impl LatticePoint {
    pub const fn new(x: i64, y: i64, z: i64) -> Self {
        LatticePoint { x, y, z }
    }

    pub fn get(&self, axis: Axis) -> i64 {
        match axis {
            Axis::X => self.x,
            Axis::Y => self.y,
            Axis::Z => self.z,
        }
    }

    pub fn set(&mut self, axis: Axis, value: i64) {
        match axis {
            Axis::X => self.x = value,
            Axis::Y => self.y = value,
            Axis::Z => self.z = value,
        }
    }

    pub fn with(mut self, axis: Axis, value: i64) -> Self {
        self.set(axis, value);
        self
    }

    pub fn to_array(self) -> [i64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn from_array(a: [i64; 3]) -> Self {
        LatticePoint::new(a[0], a[1], a[2])
    }

    pub fn offset(self, d: [i64; 3]) -> Self {
        LatticePoint::new(self.x + d[0], self.y + d[1], self.z + d[2])
    }

    /// Axis along which `self` and `other` differ, if they differ in exactly one
    /// coordinate.
    pub fn step_axis(&self, other: &LatticePoint) -> Option<Axis> {
        let diff: Vec<Axis> = Axis::ALL
            .into_iter()
            .filter(|&a| self.get(a) != other.get(a))
            .collect();
        match diff.as_slice() {
            [a] => Some(*a),
            _ => None,
        }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// One closed polygon, corners in cyclic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Component {
    pub corners: Vec<LatticePoint>,
}

impl Component {
    pub fn new(corners: Vec<LatticePoint>) -> Self {
        Component { corners }
    }

    pub fn from_arrays(corners: &[[i64; 3]]) -> Self {
        Component::new(corners.iter().copied().map(LatticePoint::from_array).collect())
    }

    pub fn len(&self) -> usize {
        self.corners.len()
    }

    pub fn is_empty(&self) -> bool {
        self.corners.is_empty()
    }

    /// Stick `i` runs from corner `i` to corner `i + 1` (cyclically).
    pub fn stick(&self, i: usize) -> (LatticePoint, LatticePoint) {
        let n = self.corners.len();
        (self.corners[i % n], self.corners[(i + 1) % n])
    }

    /// Axis of stick `i`. Only meaningful for a valid component.
    pub fn stick_axis(&self, i: usize) -> Axis {
        let (a, b) = self.stick(i);
        a.step_axis(&b).expect("stick is not axis-parallel")
    }

    pub fn reversed(&self) -> Component {
        let mut c = self.corners.clone();
        c.reverse();
        Component::new(c)
    }

    /// Is every corner in a single plane perpendicular to `axis`?
    pub fn is_planar_in(&self, axis: Axis) -> bool {
        let v = self.corners[0].get(axis);
        self.corners.iter().all(|p| p.get(axis) == v)
    }

    /// Axis perpendicular to the plane of a planar component.
    pub fn planar_axis(&self) -> Option<Axis> {
        Axis::ALL.into_iter().find(|&a| self.is_planar_in(a))
    }
}

/// A knot (one component) or link (several components).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Conformation {
    pub components: Vec<Component>,
}

impl Conformation {
    pub fn new(components: Vec<Component>) -> Self {
        Conformation { components }
    }

    pub fn knot(corners: Vec<LatticePoint>) -> Self {
        Conformation::new(vec![Component::new(corners)])
    }

    pub fn from_arrays(components: &[&[[i64; 3]]]) -> Self {
        Conformation::new(components.iter().map(|c| Component::from_arrays(c)).collect())
    }

    /// Builds a conformation and rejects it unless it passes [`validate`].
    pub fn checked(components: Vec<Component>) -> Result<Self> {
        let c = Conformation::new(components);
        c.ensure_valid()?;
        Ok(c)
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let report = validate(self);
        if report.is_ok() {
            Ok(())
        } else {
            Err(Error::Invalid(report))
        }
    }

    pub fn is_knot(&self) -> bool {
        self.components.len() == 1
    }

    pub fn stick_total(&self) -> usize {
        self.components.iter().map(Component::len).sum()
    }

    pub fn sticks(&self) -> impl Iterator<Item = StickRef> + '_ {
        self.components.iter().enumerate().flat_map(|(ci, comp)| {
            (0..comp.len()).map(move |i| {
                let (start, end) = comp.stick(i);
                StickRef {
                    component: ci,
                    index: i,
                    axis: start.step_axis(&end).unwrap_or(Axis::X),
                    start,
                    end,
                }
            })
        })
    }

    pub fn stick_ref(&self, component: usize, index: usize) -> StickRef {
        let comp = &self.components[component];
        let (start, end) = comp.stick(index);
        StickRef {
            component,
            index: index % comp.len(),
            axis: comp.stick_axis(index),
            start,
            end,
        }
    }

    /// Inclusive bounding box `(min, max)`.
    pub fn bounding_box(&self) -> (LatticePoint, LatticePoint) {
        let mut lo = [i64::MAX; 3];
        let mut hi = [i64::MIN; 3];
        for p in self.components.iter().flat_map(|c| c.corners.iter()) {
            for (k, v) in p.to_array().into_iter().enumerate() {
                lo[k] = lo[k].min(v);
                hi[k] = hi[k].max(v);
            }
        }
        (LatticePoint::from_array(lo), LatticePoint::from_array(hi))
    }

    /// Largest bounding-box side length.
    pub fn extent(&self) -> i64 {
        let (lo, hi) = self.bounding_box();
        Axis::ALL
            .into_iter()
            .map(|a| hi.get(a) - lo.get(a))
            .max()
            .unwrap_or(0)
    }

    /// Translates so the bounding box starts at `origin`.
    pub fn normalized_to(&self, origin: LatticePoint) -> Conformation {
        let (lo, _) = self.bounding_box();
        let d = [origin.x - lo.x, origin.y - lo.y, origin.z - lo.z];
        self.map_points(|p| p.offset(d))
    }

    pub fn map_points(&self, f: impl Fn(LatticePoint) -> LatticePoint) -> Conformation {
        Conformation::new(
            self.components
                .iter()
                .map(|c| Component::new(c.corners.iter().map(|&p| f(p)).collect()))
                .collect(),
        )
    }

    /// Disjoint union with another conformation.
    pub fn union(&self, other: &Conformation) -> Conformation {
        let mut components = self.components.clone();
        components.extend(other.components.iter().cloned());
        Conformation::new(components)
    }
}

/// Addresses a single stick of a conformation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StickRef {
    pub component: usize,
    pub index: usize,
    pub axis: Axis,
    pub start: LatticePoint,
    pub end: LatticePoint,
}

impl StickRef {
    pub fn lo(&self) -> i64 {
        self.start.get(self.axis).min(self.end.get(self.axis))
    }

    pub fn hi(&self) -> i64 {
        self.start.get(self.axis).max(self.end.get(self.axis))
    }

    /// Direction of travel along the stick axis, `+1` or `-1`.
    pub fn direction(&self) -> i64 {
        (self.end.get(self.axis) - self.start.get(self.axis)).signum()
    }
}

impl fmt::Display for StickRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "component {} stick {} ({}-stick {} -> {})",
            self.component, self.index, self.axis, self.start, self.end
        )
    }
}

/// Closed axis-aligned boxes spanned by two segments intersect.
pub(crate) fn boxes_meet(a0: LatticePoint, a1: LatticePoint, b0: LatticePoint, b1: LatticePoint) -> bool {
    Axis::ALL.into_iter().all(|ax| {
        let (alo, ahi) = minmax(a0.get(ax), a1.get(ax));
        let (blo, bhi) = minmax(b0.get(ax), b1.get(ax));
        alo <= bhi && blo <= ahi
    })
}

fn minmax(a: i64, b: i64) -> (i64, i64) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    TooFewCorners,
    NoComponents,
    DegenerateStick,
    NotAxisParallel,
    CollinearSticks,
    SelfIntersection,
    ComponentsIntersect,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ViolationKind::TooFewCorners => "component has fewer than 4 corners",
            ViolationKind::NoComponents => "conformation has no components",
            ViolationKind::DegenerateStick => "zero-length stick (repeated corner)",
            ViolationKind::NotAxisParallel => "consecutive corners differ in more than one coordinate",
            ViolationKind::CollinearSticks => "collinear consecutive sticks",
            ViolationKind::SelfIntersection => "self-intersection",
            ViolationKind::ComponentsIntersect => "components intersect",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    /// `(component, stick index)` pairs involved.
    pub sticks: Vec<(usize, usize)>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        if !self.sticks.is_empty() {
            let refs: Vec<String> = self
                .sticks
                .iter()
                .map(|(c, s)| format!("c{c}s{s}"))
                .collect();
            write!(f, " at {}", refs.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, kind: ViolationKind) -> bool {
        self.violations.iter().any(|v| v.kind == kind)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return f.write_str("ok");
        }
        let parts: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join("; "))
    }
}

/// Checks every structural invariant of a conformation. Violations are
/// returned as data; this never fails.
pub fn validate(c: &Conformation) -> ValidationReport {
    let mut violations = Vec::new();
    if c.components.is_empty() {
        violations.push(Violation {
            kind: ViolationKind::NoComponents,
            sticks: vec![],
        });
    }
    // Geometry checks below need well-formed sticks; skip components that
    // fail the local checks.
    let mut well_formed = vec![true; c.components.len()];
    for (ci, comp) in c.components.iter().enumerate() {
        let n = comp.len();
        if n < 4 {
            violations.push(Violation {
                kind: ViolationKind::TooFewCorners,
                sticks: vec![],
            });
            well_formed[ci] = false;
            continue;
        }
        for i in 0..n {
            let (a, b) = comp.stick(i);
            if a == b {
                violations.push(Violation {
                    kind: ViolationKind::DegenerateStick,
                    sticks: vec![(ci, i)],
                });
                well_formed[ci] = false;
            } else if a.step_axis(&b).is_none() {
                violations.push(Violation {
                    kind: ViolationKind::NotAxisParallel,
                    sticks: vec![(ci, i)],
                });
                well_formed[ci] = false;
            }
        }
        if !well_formed[ci] {
            continue;
        }
        for i in 0..n {
            let j = (i + 1) % n;
            if comp.stick_axis(i) == comp.stick_axis(j) {
                violations.push(Violation {
                    kind: ViolationKind::CollinearSticks,
                    sticks: vec![(ci, i), (ci, j)],
                });
            }
        }
        for i in 0..n {
            for j in i + 2..n {
                if i == 0 && j == n - 1 {
                    continue;
                }
                let (a0, a1) = comp.stick(i);
                let (b0, b1) = comp.stick(j);
                if boxes_meet(a0, a1, b0, b1) {
                    violations.push(Violation {
                        kind: ViolationKind::SelfIntersection,
                        sticks: vec![(ci, i), (ci, j)],
                    });
                }
            }
        }
    }
    for ci in 0..c.components.len() {
        for cj in ci + 1..c.components.len() {
            if !(well_formed[ci] && well_formed[cj]) {
                continue;
            }
            let (p, q) = (&c.components[ci], &c.components[cj]);
            for i in 0..p.len() {
                let (a0, a1) = p.stick(i);
                for j in 0..q.len() {
                    let (b0, b1) = q.stick(j);
                    if boxes_meet(a0, a1, b0, b1) {
                        violations.push(Violation {
                            kind: ViolationKind::ComponentsIntersect,
                            sticks: vec![(ci, i), (cj, j)],
                        });
                    }
                }
            }
        }
    }
    ValidationReport { violations }
}

/// Per-axis stick counts plus the number of components lying in a plane
/// perpendicular to each axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct AxisStickCounts {
    pub px: usize,
    pub py: usize,
    pub pz: usize,
    pub cx: usize,
    pub cy: usize,
    pub cz: usize,
}

impl AxisStickCounts {
    pub fn total(&self) -> usize {
        self.px + self.py + self.pz
    }

    pub fn along(&self, axis: Axis) -> usize {
        [self.px, self.py, self.pz][axis.index()]
    }

    pub fn planar_along(&self, axis: Axis) -> usize {
        [self.cx, self.cy, self.cz][axis.index()]
    }
}

pub fn stick_count(c: &Conformation) -> Result<AxisStickCounts> {
    c.ensure_valid()?;
    Ok(count_unchecked(c))
}

pub(crate) fn count_unchecked(c: &Conformation) -> AxisStickCounts {
    let mut p = [0usize; 3];
    let mut planar = [0usize; 3];
    for comp in &c.components {
        for i in 0..comp.len() {
            p[comp.stick_axis(i).index()] += 1;
        }
        for a in Axis::ALL {
            if comp.is_planar_in(a) {
                planar[a.index()] += 1;
            }
        }
    }
    AxisStickCounts {
        px: p[0],
        py: p[1],
        pz: p[2],
        cx: planar[0],
        cy: planar[1],
        cz: planar[2],
    }
}

/// Per-component stick counts along each axis.
pub fn component_counts(comp: &Component) -> [usize; 3] {
    let mut p = [0usize; 3];
    for i in 0..comp.len() {
        p[comp.stick_axis(i).index()] += 1;
    }
    p
}

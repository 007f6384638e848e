use super::{boxes_meet, Axis, Conformation, LatticePoint, Side, StickRef};

/// Sticks whose two neighbours look perpendicular when viewed along the
/// stick. Neighbours of a stick are always perpendicular to it, so this is
/// just "the neighbours lie along different axes".
pub fn torsion_sticks(c: &Conformation) -> Vec<StickRef> {
    let mut out = Vec::new();
    for (ci, comp) in c.components.iter().enumerate() {
        let n = comp.len();
        for i in 0..n {
            let prev = comp.stick_axis((i + n - 1) % n);
            let next = comp.stick_axis((i + 1) % n);
            if prev != next {
                out.push(c.stick_ref(ci, i));
            }
        }
    }
    out
}

/// Four consecutive sticks `s1..s4` with `s1 ∥ s4` and `s2 ⊥ s3`, both
/// perpendicular to `s1`. `rectangle` lists the corners of the closed
/// rectangle spanned by `s2` and `s3`, starting at the `s1`/`s2` corner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LShape {
    pub sticks: [StickRef; 4],
    pub rectangle: [LatticePoint; 4],
    /// Normal axis of the rectangle's plane and its level.
    pub normal: Axis,
    pub level: i64,
    /// Side of the plane holding `s1` and `s4`.
    pub arms: Side,
    /// For exterior L's, the closed half-space holding the whole conformation.
    pub exterior: Option<Side>,
}

fn candidate_windows(c: &Conformation) -> Vec<LShape> {
    let mut out = Vec::new();
    for (ci, comp) in c.components.iter().enumerate() {
        let n = comp.len();
        if n < 5 {
            continue;
        }
        for i in 0..n {
            let s = [0, 1, 2, 3].map(|k| c.stick_ref(ci, (i + k) % n));
            let normal = s[0].axis;
            if s[3].axis != normal || s[1].axis == s[2].axis || s[1].axis == normal || s[2].axis == normal {
                continue;
            }
            let level = s[1].start.get(normal);
            let p0 = s[0].start.get(normal) - level;
            let p4 = s[3].end.get(normal) - level;
            if p0.signum() != p4.signum() {
                continue;
            }
            let arms = if p0 > 0 { Side::Positive } else { Side::Negative };
            let a = s[1].start;
            let b = s[1].end;
            let cc = s[2].end;
            let d = LatticePoint::from_array([0, 1, 2].map(|k| a.to_array()[k] + cc.to_array()[k] - b.to_array()[k]));
            out.push(LShape {
                sticks: s,
                rectangle: [a, b, cc, d],
                normal,
                level,
                arms,
                exterior: None,
            });
        }
    }
    out
}

fn is_clean(c: &Conformation, l: &LShape) -> bool {
    let (lo, hi) = rect_box(l);
    let mine: Vec<(usize, usize)> = l.sticks.iter().map(|s| (s.component, s.index)).collect();
    c.sticks()
        .filter(|t| !mine.contains(&(t.component, t.index)))
        .all(|t| !boxes_meet(t.start, t.end, lo, hi))
}

fn rect_box(l: &LShape) -> (LatticePoint, LatticePoint) {
    let mut lo = [i64::MAX; 3];
    let mut hi = [i64::MIN; 3];
    for p in l.rectangle {
        for k in 0..3 {
            lo[k] = lo[k].min(p.to_array()[k]);
            hi[k] = hi[k].max(p.to_array()[k]);
        }
    }
    (LatticePoint::from_array(lo), LatticePoint::from_array(hi))
}

/// All clean L's: the closed rectangle meets the conformation only inside
/// the four sticks themselves.
pub fn detect_clean_ls(c: &Conformation) -> Vec<LShape> {
    candidate_windows(c).into_iter().filter(|l| is_clean(c, l)).collect()
}

/// Clean L's whose rectangle plane has the entire conformation in one closed
/// half-space.
pub fn detect_exterior_ls(c: &Conformation) -> Vec<LShape> {
    detect_clean_ls(c)
        .into_iter()
        .filter_map(|mut l| {
            let corners = c.components.iter().flat_map(|comp| comp.corners.iter());
            let (mut above, mut below) = (false, false);
            for p in corners {
                let d = p.get(l.normal) - l.level;
                above |= d > 0;
                below |= d < 0;
            }
            let side = match (above, below) {
                (true, false) => Side::Positive,
                (false, true) => Side::Negative,
                _ => return None,
            };
            l.exterior = Some(side);
            Some(l)
        })
        .collect()
}

use crate::error::{Error, Result};
use crate::lattice::{
    detect_clean_ls, detect_exterior_ls, expand_halfspace, properly_level, Axis, Conformation, LShape, LatticePoint,
    Side, SignedPermutation,
};

/// One factor moved into the gluing frame: the rectangle corner between the
/// L's middle sticks at the origin, its two edges along `+x` and `+y`, and
/// its arms on the requested side of `z = 0`.
struct Framed {
    knot: Conformation,
    /// Corner indices of the corners before and after the rectangle corner.
    before: usize,
    after: usize,
    /// Edge lengths along `x` and `y`.
    ex: i64,
    ey: i64,
}

fn unit(a: LatticePoint, b: LatticePoint) -> ([i64; 3], i64) {
    let d = [0, 1, 2].map(|k| b.to_array()[k] - a.to_array()[k]);
    let len = d.iter().map(|v| v.abs()).sum::<i64>();
    (d.map(|v| v.signum()), len)
}

fn frame(k: &Conformation, l: &LShape, arm_side: i64) -> Framed {
    let [p, c, q, _] = l.rectangle;
    let (dp, lp) = unit(c, p);
    let (dq, lq) = unit(c, q);
    let mut arm = [0; 3];
    arm[l.normal.index()] = l.arms.sign();
    const X: [i64; 3] = [1, 0, 0];
    const Y: [i64; 3] = [0, 1, 0];
    let (sigma, ex, ey) = [(X, Y, lp, lq), (Y, X, lq, lp)]
        .into_iter()
        .find_map(|(to_p, to_q, ex, ey)| {
            let s = SignedPermutation::mapping([dp, dq], [to_p, to_q], 1)?;
            (s.apply_vec(arm)[2] == arm_side).then_some((s, ex, ey))
        })
        .expect("one of the two edge assignments is a rotation with the arms on the requested side");
    let origin = c.to_array();
    let knot = k.map_points(|pt| sigma.apply(pt.offset(origin.map(|v| -v))));
    let n = k.components[0].len();
    let first = l.sticks[1].index; // s2 runs from P to C
    Framed {
        knot,
        before: first,
        after: (first + 2) % n,
        ex,
        ey,
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

fn scaled_xy(c: &Conformation, sx: i64, sy: i64) -> Conformation {
    c.map_points(|p| LatticePoint::new(p.x * sx, p.y * sy, p.z))
}

/// Connected sum of `k1` and `k2` glued along an exterior L of `k1` and a
/// clean L of `k2`, using `stick_count(k1) + stick_count(k2) - 6` sticks.
///
/// `k2` is expanded away from its rectangle in five half-spaces, `k1` is
/// set into the freed box above it with matching rectangle, and the shared
/// rectangle edges are removed; the four remaining arm sticks merge pairwise
/// into two straight sticks. The result is properly leveled.
pub fn compose(k1: &Conformation, l1: &LShape, k2: &Conformation, l2: &LShape) -> Result<Conformation> {
    for (k, name) in [(k1, "first"), (k2, "second")] {
        k.ensure_valid()?;
        if !k.is_knot() {
            return Err(Error::Precondition(format!("{name} factor of a composition must be a knot")));
        }
    }
    if !detect_exterior_ls(k1).iter().any(|l| l.sticks == l1.sticks) {
        return Err(Error::Precondition("first factor: the chosen L is not an exterior L".into()));
    }
    if !detect_clean_ls(k2).iter().any(|l| l.sticks == l2.sticks) {
        return Err(Error::Precondition("second factor: the chosen L is not a clean L".into()));
    }

    let f1 = frame(k1, l1, 1);
    let f2 = frame(k2, l2, -1);
    let side = lcm(lcm(f1.ex, f1.ey), lcm(f2.ex, f2.ey));
    let one = scaled_xy(&f1.knot, side / f1.ex, side / f1.ey);
    let mut two = scaled_xy(&f2.knot, side / f2.ex, side / f2.ey);

    let (lo, hi) = one.bounding_box();
    let expansions = [
        (Axis::Z, 0, Side::Positive, hi.z + 2),
        (Axis::X, side, Side::Positive, (hi.x - side).max(0) + 2),
        (Axis::X, 0, Side::Negative, (-lo.x).max(0) + 2),
        (Axis::Y, side, Side::Positive, (hi.y - side).max(0) + 2),
        (Axis::Y, 0, Side::Negative, (-lo.y).max(0) + 2),
    ];
    for (axis, level, s, amount) in expansions {
        two = expand_halfspace(&two, axis, level, s, amount)?;
    }

    let c1 = &one.components[0].corners;
    let c2 = &two.components[0].corners;
    let (n1, n2) = (c1.len(), c2.len());
    let mut corners = Vec::with_capacity(n1 + n2 - 6);
    // second factor from just after its post-rectangle corner round to just
    // before its pre-rectangle corner
    let mut i = (f2.after + 1) % n2;
    while i != f2.before {
        corners.push(c2[i]);
        i = (i + 1) % n2;
    }
    // first factor, entered at the position of the second's pre-rectangle corner
    if c1[f1.before] == c2[f2.before] {
        let mut i = (f1.before + n1 - 1) % n1;
        while i != f1.after {
            corners.push(c1[i]);
            i = (i + n1 - 1) % n1;
        }
    } else {
        debug_assert_eq!(c1[f1.after], c2[f2.before]);
        let mut i = (f1.after + 1) % n1;
        while i != f1.before {
            corners.push(c1[i]);
            i = (i + 1) % n1;
        }
    }
    let sum = Conformation::knot(corners);
    sum.ensure_valid()?;
    Ok(properly_level(&sum))
}

/// [`compose`] with the first exterior L of `k1` and the first clean L of
/// `k2` for which the gluing succeeds.
pub fn compose_auto(k1: &Conformation, k2: &Conformation) -> Result<Conformation> {
    let ext = detect_exterior_ls(k1);
    if ext.is_empty() {
        return Err(Error::Precondition("first factor has no exterior L".into()));
    }
    let clean = detect_clean_ls(k2);
    if clean.is_empty() {
        return Err(Error::Precondition("second factor has no clean L".into()));
    }
    let mut last = None;
    for l2 in &clean {
        for l1 in &ext {
            match compose(k1, l1, k2, l2) {
                Ok(c) => return Ok(c),
                Err(e) => last = Some(e),
            }
        }
    }
    Err(last.expect("at least one attempt"))
}

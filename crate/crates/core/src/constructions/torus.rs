use crate::error::{Error, Result};
use crate::lattice::{Conformation, LatticePoint};

/// The torus knot `T(p, p+1)` with `6p` sticks, `2p` along each axis.
///
/// The knot is a staircase of `p` hooks, each running `x+, y+, z+` out to a
/// far level and `x-, y-, z-` back to the start of the next hook. Hook `j`
/// starts at near levels `(p-1-j, j, j)` and reaches far levels
/// `(p+j, p+j, 2p-1-j)`; the last hook returns to the first. The result is
/// properly leveled in the box `{1..2p}³`.
pub fn torus_knot(p: u32) -> Result<Conformation> {
    if p < 2 {
        return Err(Error::Precondition(format!("torus_knot needs p >= 2, got {p}")));
    }
    let p = p as i64;
    let near = |j: i64| {
        let j = j % p;
        [p - 1 - j, j, j]
    };
    let far = |j: i64| [p + j, p + j, 2 * p - 1 - j];
    let mut corners = Vec::with_capacity(6 * p as usize);
    for j in 0..p {
        let [nx, ny, nz] = near(j);
        let [fx, fy, fz] = far(j);
        let [mx, my, _] = near(j + 1);
        for c in [
            [nx, ny, nz],
            [fx, ny, nz],
            [fx, fy, nz],
            [fx, fy, fz],
            [mx, fy, fz],
            [mx, my, fz],
        ] {
            corners.push(LatticePoint::from_array(c.map(|v| v + 1)));
        }
    }
    Ok(Conformation::knot(corners))
}

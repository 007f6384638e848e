use crate::error::{Error, Result};
use crate::lattice::{Component, Conformation, LatticePoint};

/// A two-braid link with linking number `n` on `4n + 4` sticks: a
/// rectangle in `z = 0` and a coil of `2n` horizontal and `2n` vertical
/// sticks that descends through the rectangle's interior exactly `n` times.
///
/// The coil's interior points lie in two columns, `x = 1` winding round the
/// edge `y = 0` and `x = 2` winding round the edge `y = H`. The `i`-th over
/// stick sits at height `i` and the `i`-th under stick at `-i`, so each new
/// turn passes outside all earlier ones. `n = 2` and `n = 3` admit no such
/// coil and are rejected; the catalog holds `4_1^2` at 13 sticks.
pub fn two_braid_link(n: u32) -> Result<Conformation> {
    match n {
        0 => return Err(Error::Precondition("two_braid_link needs n >= 1".into())),
        2 | 3 => {
            return Err(Error::Precondition(format!(
                "linking number {n} needs 4n+5 sticks; see catalog entry 4_1^2 for n = 2"
            )))
        }
        _ => {}
    }
    let p = |x: i64, y: i64, z: i64| LatticePoint::new(x, y, z);
    if n == 1 {
        return Ok(Conformation::new(vec![
            Component::new(vec![p(0, 0, 0), p(3, 0, 0), p(3, 2, 0), p(0, 2, 0)]),
            Component::new(vec![p(-1, 1, 1), p(1, 1, 1), p(1, 1, -1), p(-1, 1, -1)]),
        ]));
    }
    let n = n as i64;
    let k = (n + 1) / 2;
    let m = n - k;
    let h = k + 1;
    // interior points in visiting order: up column 1, then down column 2
    let mut inner: Vec<(i64, i64)> = (1..=k).map(|y| (1, y)).collect();
    let col2: Vec<i64> = (0..m - 1).map(|i| k - i).chain(std::iter::once(1)).collect();
    inner.extend(col2.iter().map(|&y| (2, y)));
    // the outside point after interior point i
    let outer = |i: usize| -> (i64, i64) {
        let i = i as i64;
        if i < k - 1 {
            (1, -(i + 1))
        } else if i == k - 1 {
            (-1, k)
        } else if i < n - 1 {
            (2, h + i - k + 1)
        } else {
            (-1, 1)
        }
    };
    let mut coil = Vec::with_capacity(4 * n as usize);
    for (i, &(px, py)) in inner.iter().enumerate() {
        let (qx, qy) = outer(i);
        let (over, under) = (i as i64 + 1, -(i as i64 + 1));
        let next_over = if over == n { 1 } else { over + 1 };
        coil.push(p(px, py, over));
        coil.push(p(px, py, under));
        coil.push(p(qx, qy, under));
        coil.push(p(qx, qy, next_over));
    }
    let rect = vec![p(0, 0, 0), p(3, 0, 0), p(3, h, 0), p(0, h, 0)];
    let link = Conformation::new(vec![Component::new(rect), Component::new(coil)]);
    link.ensure_valid()?;
    Ok(link)
}

use crate::error::{Error, Result};

use super::{Axis, Conformation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Positive,
    Negative,
}

impl Side {
    pub fn sign(self) -> i64 {
        match self {
            Side::Positive => 1,
            Side::Negative => -1,
        }
    }
}

/// Pushes every corner strictly on `side` of the plane `axis = level` a further
/// `amount` units away from it. Sticks along `axis` that cross the plane get
/// longer; everything else moves rigidly. The corner map is strictly monotone
/// in the `axis` coordinate, so the result is an isotopic, valid conformation
/// with the same sticks, and the slab opened next to the plane contains only
/// `axis`-parallel sticks.
pub fn expand_halfspace(c: &Conformation, axis: Axis, level: i64, side: Side, amount: i64) -> Result<Conformation> {
    if amount < 0 {
        return Err(Error::BadAmount(amount));
    }
    c.ensure_valid()?;
    let s = side.sign();
    Ok(c.map_points(|p| {
        let v = p.get(axis);
        if (v - level) * s > 0 {
            p.with(axis, v + s * amount)
        } else {
            p
        }
    }))
}

use crate::error::{Error, Result};

use super::{Axis, Component, Conformation, LatticePoint};

/// A signed permutation of coordinates: output coordinate `i` is
/// `signs[i] * input[perm[i]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    pub perm: [usize; 3],
    pub signs: [i64; 3],
}

impl SignedPermutation {
    pub const IDENTITY: SignedPermutation = SignedPermutation {
        perm: [0, 1, 2],
        signs: [1, 1, 1],
    };

    /// Quarter turn about `axis`, counterclockwise when viewed from the
    /// positive end of the axis.
    pub fn quarter_turn(axis: Axis) -> SignedPermutation {
        let (u, v) = axis.plane();
        let mut perm = [0, 1, 2];
        let mut signs = [1, 1, 1];
        // new u = -old v, new v = old u
        perm[u.index()] = v.index();
        signs[u.index()] = -1;
        perm[v.index()] = u.index();
        SignedPermutation { perm, signs }
    }

    pub fn reflection(axis: Axis) -> SignedPermutation {
        let mut s = SignedPermutation::IDENTITY;
        s.signs[axis.index()] = -1;
        s
    }

    /// All 48 signed permutations.
    pub fn all() -> Vec<SignedPermutation> {
        const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let mut out = Vec::with_capacity(48);
        for perm in PERMS {
            for bits in 0..8 {
                let signs = [0, 1, 2].map(|k| if bits >> k & 1 == 1 { -1 } else { 1 });
                out.push(SignedPermutation { perm, signs });
            }
        }
        out
    }

    pub fn apply(&self, p: LatticePoint) -> LatticePoint {
        let a = p.to_array();
        LatticePoint::from_array([0, 1, 2].map(|i| self.signs[i] * a[self.perm[i]]))
    }

    pub fn apply_vec(&self, v: [i64; 3]) -> [i64; 3] {
        [0, 1, 2].map(|i| self.signs[i] * v[self.perm[i]])
    }

    /// Output axis that input axis `a` is carried to.
    pub fn image_axis(&self, a: Axis) -> Axis {
        let i = self.perm.iter().position(|&k| k == a.index()).unwrap();
        Axis::from_index(i)
    }

    /// `+1` for rotations, `-1` for mirror maps.
    pub fn determinant(&self) -> i64 {
        let [a, b, c] = self.perm;
        let inversions = (a > b) as i64 + (a > c) as i64 + (b > c) as i64;
        let parity = if inversions % 2 == 0 { 1 } else { -1 };
        parity * self.signs.iter().product::<i64>()
    }

    pub fn compose(&self, then: &SignedPermutation) -> SignedPermutation {
        // (then ∘ self)(p)[i] = then.s[i] * self(p)[then.perm[i]]
        let mut perm = [0; 3];
        let mut signs = [1; 3];
        for i in 0..3 {
            let j = then.perm[i];
            perm[i] = self.perm[j];
            signs[i] = then.signs[i] * self.signs[j];
        }
        SignedPermutation { perm, signs }
    }

    /// The unique signed permutation sending the unit vectors `from[k]` to
    /// `to[k]` for `k = 0, 1` (two orthogonal axis directions), extended by the
    /// right-hand rule or its mirror according to `det`.
    pub fn mapping(from: [[i64; 3]; 2], to: [[i64; 3]; 2], det: i64) -> Option<SignedPermutation> {
        SignedPermutation::all()
            .into_iter()
            .find(|s| s.determinant() == det && s.apply_vec(from[0]) == to[0] && s.apply_vec(from[1]) == to[1])
    }
}

/// Isometry, translation and positive per-axis scaling. Scaling is applied in
/// the input frame, then the signed permutation, then the translation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Transform {
    pub rotation: SignedPermutation,
    pub scale: [i64; 3],
    pub translation: [i64; 3],
}

impl Default for Transform {
    fn default() -> Self {
        Transform::IDENTITY
    }
}

impl Transform {
    pub const IDENTITY: Transform = Transform {
        rotation: SignedPermutation::IDENTITY,
        scale: [1, 1, 1],
        translation: [0, 0, 0],
    };

    pub fn rotation(rotation: SignedPermutation) -> Transform {
        Transform {
            rotation,
            ..Transform::IDENTITY
        }
    }

    pub fn scaling(scale: [i64; 3]) -> Transform {
        Transform {
            scale,
            ..Transform::IDENTITY
        }
    }

    pub fn translation(translation: [i64; 3]) -> Transform {
        Transform {
            translation,
            ..Transform::IDENTITY
        }
    }

    pub fn apply_point(&self, p: LatticePoint) -> LatticePoint {
        let a = p.to_array();
        let scaled = LatticePoint::from_array([0, 1, 2].map(|i| a[i] * self.scale[i]));
        self.rotation.apply(scaled).offset(self.translation)
    }

    pub fn apply(&self, c: &Conformation) -> Result<Conformation> {
        if self.scale.iter().any(|&s| s < 1) {
            return Err(Error::BadScale(self.scale));
        }
        c.ensure_valid()?;
        Ok(self.apply_unchecked(c))
    }

    pub(crate) fn apply_unchecked(&self, c: &Conformation) -> Conformation {
        Conformation::new(
            c.components
                .iter()
                .map(|comp| Component::new(comp.corners.iter().map(|&p| self.apply_point(p)).collect()))
                .collect(),
        )
    }
}

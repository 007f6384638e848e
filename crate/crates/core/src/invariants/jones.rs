use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::diagram::{pd_code, project_auto, PDCode, PlanarDiagram};
use crate::error::{Error, Result};
use crate::lattice::{Axis, Conformation};
use crate::poly::LaurentPoly;

use super::bracket::bracket_by_contraction;

/// A Jones polynomial, stored as a Laurent polynomial in `x = t^(1/2)` so
/// that links with an even number of components fit too. Serialized as
/// `[exponent of x, coefficient]` pairs.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct JonesPoly(pub LaurentPoly);

impl JonesPoly {
    pub fn one() -> Self {
        JonesPoly(LaurentPoly::one())
    }

    /// From a polynomial in `t`.
    pub fn from_t(p: &LaurentPoly) -> Self {
        JonesPoly(p.substitute_power(2))
    }

    /// The polynomial in `t`, when all powers are integral.
    pub fn in_t(&self) -> Option<LaurentPoly> {
        self.0.compress_exponents(2)
    }

    /// `t ↦ t⁻¹`, the Jones polynomial of the mirror image.
    pub fn mirror(&self) -> Self {
        JonesPoly(self.0.mirror())
    }

    /// Equal to `other` or to its mirror image.
    pub fn eq_up_to_mirror(&self, other: &JonesPoly) -> bool {
        self == other || *self == other.mirror()
    }

    pub fn is_unknot(&self) -> bool {
        *self == JonesPoly::one()
    }

    pub fn parse_t(s: &str) -> Option<Self> {
        LaurentPoly::parse(s).map(|p| JonesPoly::from_t(&p))
    }
}

impl Mul for &JonesPoly {
    type Output = JonesPoly;
    fn mul(self, rhs: &JonesPoly) -> JonesPoly {
        JonesPoly(&self.0 * &rhs.0)
    }
}

impl fmt::Display for JonesPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(p) = self.in_t() {
            return f.write_str(&p.display_in("t"));
        }
        if self.0.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.0.terms() {
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            let exp = if e % 2 == 0 { format!("{}", e / 2) } else { format!("{e}/2") };
            match a {
                1 => write!(f, "t^({exp})")?,
                a => write!(f, "{a}*t^({exp})")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for JonesPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Normalizes a bracket: `(-A³)^(-w) ⟨D⟩` with `A = t^(-1/4)`.
pub fn jones_from_bracket(bracket: &LaurentPoly, writhe: i64) -> Result<JonesPoly> {
    let w = i32::try_from(writhe).map_err(|_| Error::Overflow)?;
    let sign = if w.rem_euclid(2) == 0 { 1 } else { -1 };
    let normalized = bracket.checked_mul(&LaurentPoly::monomial(-3 * w, sign)).ok_or(Error::Overflow)?;
    // A^k = t^(-k/4) = x^(-k/2)
    let in_x = normalized
        .compress_exponents(2)
        .ok_or_else(|| Error::BadPd("bracket has odd powers of A after normalization".into()))?;
    Ok(JonesPoly(in_x.mirror()))
}

pub fn jones_of_pd(pd: &PDCode) -> Result<JonesPoly> {
    jones_from_bracket(&bracket_by_contraction(pd)?, pd.writhe())
}

pub fn jones(d: &PlanarDiagram) -> Result<JonesPoly> {
    jones_of_pd(&pd_code(d))
}

/// Jones polynomial of a conformation, from its projection along `z`.
pub fn jones_of(c: &Conformation) -> Result<JonesPoly> {
    jones(&project_auto(c, Axis::Z)?)
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Jones polynomial of the torus knot `T(p, q)` from the closed formula
/// `t^((p-1)(q-1)/2) (1 - t^(p+1) - t^(q+1) + t^(p+q)) / (1 - t²)`.
pub fn torus_jones_oracle(p: u32, q: u32) -> Result<JonesPoly> {
    if p < 2 || q < 2 || gcd(p, q) != 1 {
        return Err(Error::Precondition(format!(
            "T({p},{q}) is a torus knot only for coprime p, q >= 2"
        )));
    }
    let (p, q) = (p as i32, q as i32);
    let num = LaurentPoly::from_terms([(0, 1), (p + 1, -1), (q + 1, -1), (p + q, 1)]);
    let den = LaurentPoly::from_terms([(0, 1), (2, -1)]);
    let quotient = num.div_exact(&den).expect("1 - t^2 divides the torus numerator");
    Ok(JonesPoly::from_t(&quotient.shift((p - 1) * (q - 1) / 2)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_formula_small_cases() {
        assert_eq!(torus_jones_oracle(2, 3).unwrap(), JonesPoly::parse_t("t + t^3 - t^4").unwrap());
        assert_eq!(
            torus_jones_oracle(2, 5).unwrap(),
            JonesPoly::parse_t("t^2 + t^4 - t^5 + t^6 - t^7").unwrap()
        );
        assert_eq!(torus_jones_oracle(3, 4).unwrap(), torus_jones_oracle(4, 3).unwrap());
        assert!(torus_jones_oracle(2, 4).is_err());
        assert!(torus_jones_oracle(1, 4).is_err());
    }

    #[test]
    fn pd_trefoil_jones() {
        let pd = PDCode::parse("[[1,5,2,4],[3,1,4,6],[5,3,6,2]]").unwrap();
        assert_eq!(jones_of_pd(&pd).unwrap(), torus_jones_oracle(2, 3).unwrap());
        assert_eq!(jones_of_pd(&pd.mirrored()).unwrap(), torus_jones_oracle(2, 3).unwrap().mirror());
    }

    #[test]
    fn half_integer_display() {
        let hopf = JonesPoly(LaurentPoly::from_terms([(-5, -1), (-1, -1)]));
        assert_eq!(hopf.to_string(), "-t^(-5/2) - t^(-1/2)");
        assert!(hopf.in_t().is_none());
    }
}

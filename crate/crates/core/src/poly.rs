//! Integer Laurent polynomials in one variable.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// Dense Laurent polynomial `Σ coeffs[k] · v^(low + k)` with exact `i64`
/// coefficients. Always normalized: no leading or trailing zero coefficients,
/// and the zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, 1)
    }

    pub fn monomial(exp: i32, coeff: i64) -> Self {
        LaurentPoly { low: exp, coeffs: vec![coeff] }.normalized()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, i64)>) -> Self {
        terms
            .into_iter()
            .fold(LaurentPoly::zero(), |acc, (e, c)| acc + LaurentPoly::monomial(e, c))
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead == self.coeffs.len() {
            return LaurentPoly::zero();
        }
        self.coeffs.drain(..lead);
        self.low += lead as i32;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero terms `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> Vec<(i32, i64)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (self.low + k as i32, c))
            .collect()
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        let k = exp - self.low;
        if k < 0 {
            return 0;
        }
        self.coeffs.get(k as usize).copied().unwrap_or(0)
    }

    pub fn min_exp(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn max_exp(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    /// Substitutes `v ↦ v^k` (negative `k` allowed).
    pub fn substitute_power(&self, k: i32) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms().into_iter().map(|(e, c)| (e * k, c)))
    }

    /// `v ↦ v⁻¹`.
    pub fn mirror(&self) -> LaurentPoly {
        self.substitute_power(-1)
    }

    /// Divides every exponent by `k`, if all exponents are multiples of `k`.
    pub fn compress_exponents(&self, k: i32) -> Option<LaurentPoly> {
        let terms = self.terms();
        if terms.iter().any(|(e, _)| e % k != 0) {
            return None;
        }
        Some(LaurentPoly::from_terms(terms.into_iter().map(|(e, c)| (e / k, c))))
    }

    pub fn shift(&self, by: i32) -> LaurentPoly {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            low: self.low + by,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, k: i64) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|&c| c * k).collect(),
        }
        .normalized()
    }

    pub fn pow(&self, n: u32) -> LaurentPoly {
        (0..n).fold(LaurentPoly::one(), |acc, _| &acc * self)
    }

    /// Value at `v = -1`.
    pub fn eval_minus_one(&self) -> i64 {
        self.terms()
            .into_iter()
            .map(|(e, c)| if e.rem_euclid(2) == 0 { c } else { -c })
            .sum()
    }

    pub fn eval_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn checked_add(&self, other: &LaurentPoly) -> Option<LaurentPoly> {
        if self.is_zero() {
            return Some(other.clone());
        }
        if other.is_zero() {
            return Some(self.clone());
        }
        let low = self.low.min(other.low);
        let high = self.max_exp().unwrap().max(other.max_exp().unwrap());
        let mut coeffs = vec![0i64; (high - low + 1) as usize];
        for (k, &c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + k] = c;
        }
        for (k, &c) in other.coeffs.iter().enumerate() {
            let slot = &mut coeffs[(other.low - low) as usize + k];
            *slot = slot.checked_add(c)?;
        }
        Some(LaurentPoly { low, coeffs }.normalized())
    }

    pub fn checked_mul(&self, other: &LaurentPoly) -> Option<LaurentPoly> {
        if self.is_zero() || other.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let p = a.checked_mul(b)?;
                coeffs[i + j] = coeffs[i + j].checked_add(p)?;
            }
        }
        Some(
            LaurentPoly {
                low: self.low + other.low,
                coeffs,
            }
            .normalized(),
        )
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return None;
        }
        let mut rem = self.clone();
        let mut quotient = LaurentPoly::zero();
        let dlead = *divisor.coeffs.last().unwrap();
        let dmax = divisor.max_exp().unwrap();
        while !rem.is_zero() {
            let rmax = rem.max_exp().unwrap();
            let rlead = *rem.coeffs.last().unwrap();
            if rlead % dlead != 0 || rem.coeffs.len() < divisor.coeffs.len() {
                return None;
            }
            let term = LaurentPoly::monomial(rmax - dmax, rlead / dlead);
            rem = &rem - &(&term * divisor);
            quotient = quotient + term;
        }
        Some(quotient)
    }

    /// Parses text like `-t^-5 + t^(-4) - 2*t^2 + 3`, in any single-letter
    /// variable.
    pub fn parse(s: &str) -> Option<LaurentPoly> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return None;
        }
        let mut terms = Vec::new();
        let mut cur = String::new();
        for (i, ch) in compact.char_indices() {
            let prev = compact[..i].chars().last();
            if (ch == '+' || ch == '-') && i > 0 && !matches!(prev, Some('^') | Some('(')) {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        terms.push(cur);
        let mut out = LaurentPoly::zero();
        for t in terms {
            let (sign, body) = match t.strip_prefix('-') {
                Some(b) => (-1, b),
                None => (1, t.strip_prefix('+').unwrap_or(&t)),
            };
            let var_pos = body.find(|c: char| c.is_ascii_alphabetic());
            let (coeff, exp) = match var_pos {
                None => (body.parse::<i64>().ok()?, 0),
                Some(p) => {
                    let c = body[..p].trim_end_matches('*');
                    let coeff = if c.is_empty() { 1 } else { c.parse().ok()? };
                    let rest = &body[p + 1..];
                    let exp = match rest.strip_prefix('^') {
                        None if rest.is_empty() => 1,
                        None => return None,
                        Some(e) => e.trim_start_matches('(').trim_end_matches(')').parse().ok()?,
                    };
                    (coeff, exp)
                }
            };
            out = out + LaurentPoly::monomial(exp, sign * coeff);
        }
        Some(out)
    }

    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (e, c)) in self.terms().into_iter().enumerate() {
            let neg = c < 0;
            let a = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            match (e, a) {
                (0, a) => s.push_str(&a.to_string()),
                (e, 1) => s.push_str(&mono(var, e)),
                (e, a) => s.push_str(&format!("{a}*{}", mono(var, e))),
            }
        }
        s
    }
}

fn mono(var: &str, e: i32) -> String {
    match e {
        1 => var.to_string(),
        e if e < 0 => format!("{var}^({e})"),
        e => format!("{var}^{e}"),
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("v"))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("v"))
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        self.checked_add(&rhs).expect("coefficient overflow")
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("coefficient overflow")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("coefficient overflow")
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

/// Serialized as a list of `[exponent, coefficient]` pairs.
impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.terms().serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<(i32, i64)>::deserialize(d)?;
        Ok(LaurentPoly::from_terms(terms))
    }
}

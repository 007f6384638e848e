//! Oriented PD codes and their text form.
//!
//! ```text
//! PD v1
//! C[1,2,3,4,5,6]
//! X[1,5,2,4]
//! X[3,1,4,6]
//! X[5,3,6,2]
//! ```
//!
//! Each `C[...]` line lists one component's edge labels in travel order
//! (`C[]` is a crossing-free loop). Each `X[a,b,c,d]` line is a crossing,
//! counter-clockwise from the incoming under edge. A crossing's sign is read
//! off the orientation; when a two-edge component makes that ambiguous the
//! line carries an explicit ` +` or ` -` suffix. Bare codes without headers,
//! including the `[[a,b,c,d],...]` list form, are accepted and oriented by
//! walking the under strands.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PDCode {
    pub crossings: Vec<[u32; 4]>,
    /// `+1` when the over strand runs from slot `d` to slot `b`.
    pub signs: Vec<i8>,
    /// Edge labels of each component in travel order; empty for a loop
    /// without crossings.
    pub components: Vec<Vec<u32>>,
}

const HEADER: &str = "PD v1";

fn bad(msg: impl Into<String>) -> Error {
    Error::BadPd(msg.into())
}

impl PDCode {
    pub fn from_parts(crossings: Vec<[u32; 4]>, signs: Vec<i8>, components: Vec<Vec<u32>>) -> PDCode {
        PDCode {
            crossings,
            signs,
            components,
        }
    }

    pub fn unknot() -> PDCode {
        PDCode::from_parts(Vec::new(), Vec::new(), vec![Vec::new()])
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_loops(&self) -> usize {
        self.components.iter().filter(|c| c.is_empty()).count()
    }

    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|&s| s as i64).sum()
    }

    fn successor(&self) -> HashMap<u32, u32> {
        let mut succ = HashMap::new();
        for comp in &self.components {
            for (j, &l) in comp.iter().enumerate() {
                succ.insert(l, comp[(j + 1) % comp.len()]);
            }
        }
        succ
    }

    fn component_of(&self) -> HashMap<u32, usize> {
        let mut map = HashMap::new();
        for (i, comp) in self.components.iter().enumerate() {
            for &l in comp {
                map.insert(l, i);
            }
        }
        map
    }

    /// Structural audit: each label on exactly two crossing slots and in
    /// exactly one component, under strands running `a → c`, and every
    /// stored sign agreeing with the orientation wherever it is determined.
    pub fn check(&self) -> Result<()> {
        if self.signs.len() != self.crossings.len() {
            return Err(bad("sign list length differs from crossing count"));
        }
        let mut seen: HashMap<u32, usize> = HashMap::new();
        for x in &self.crossings {
            for &l in x {
                *seen.entry(l).or_default() += 1;
            }
        }
        if let Some((l, n)) = seen.iter().find(|(_, &n)| n != 2) {
            return Err(bad(format!("label {l} appears {n} times")));
        }
        let comp = self.component_of();
        let listed: usize = self.components.iter().map(Vec::len).sum();
        if listed != comp.len() || comp.len() != seen.len() || seen.keys().any(|l| !comp.contains_key(l)) {
            return Err(bad("component lists do not partition the edge labels"));
        }
        let succ = self.successor();
        for (k, x) in self.crossings.iter().enumerate() {
            let [a, b, c, d] = *x;
            if succ[&a] != c {
                return Err(bad(format!("crossing {k}: under strand does not run from slot a to slot c")));
            }
            let forward = succ[&d] == b;
            let backward = succ[&b] == d;
            if !forward && !backward {
                return Err(bad(format!("crossing {k}: over strand edges are not consecutive")));
            }
            let sign = self.signs[k];
            if sign.abs() != 1 || (forward != backward && (sign > 0) != forward) {
                return Err(bad(format!("crossing {k}: sign disagrees with orientation")));
            }
        }
        Ok(())
    }

    /// Orients an unoriented code by walking along under strands from slot
    /// `a` to slot `c`. Components that never pass under anything get the
    /// direction in which their labels increase, when that is decidable.
    pub fn from_unoriented(crossings: Vec<[u32; 4]>) -> Result<PDCode> {
        let mut occ: HashMap<u32, Vec<(usize, usize)>> = HashMap::new();
        for (k, x) in crossings.iter().enumerate() {
            for (s, &l) in x.iter().enumerate() {
                occ.entry(l).or_default().push((k, s));
            }
        }
        if let Some((l, v)) = occ.iter().find(|(_, v)| v.len() != 2) {
            return Err(bad(format!("label {l} appears {} times", v.len())));
        }
        let mut labels: Vec<u32> = occ.keys().copied().collect();
        labels.sort_unstable();
        let mut visited: HashMap<u32, bool> = labels.iter().map(|&l| (l, false)).collect();
        let mut signs = vec![0i8; crossings.len()];
        let mut components = Vec::new();

        let arrival_for = |e: u32| -> (usize, usize) {
            let o = &occ[&e];
            if let Some(&p) = o.iter().find(|p| p.1 == 0) {
                return p;
            }
            if let Some(i) = o.iter().position(|p| p.1 == 2) {
                return o[1 - i];
            }
            *o.iter()
                .find(|&&(k, s)| crossings[k][(s + 2) % 4] == e + 1)
                .unwrap_or(&o[0])
        };

        loop {
            let start = labels
                .iter()
                .copied()
                .filter(|l| !visited[l])
                .min_by_key(|&l| (occ[&l].iter().all(|p| p.1 % 2 == 1), l));
            let Some(start) = start else { break };
            let mut comp = Vec::new();
            let mut e = start;
            let (mut k, mut s) = arrival_for(start);
            loop {
                if visited[&e] {
                    return Err(bad(format!("edge {e} reached twice while orienting")));
                }
                visited.insert(e, true);
                comp.push(e);
                match s {
                    0 => {}
                    1 => signs[k] = -1,
                    3 => signs[k] = 1,
                    _ => return Err(bad(format!("crossing {k}: under strand runs from slot c to slot a"))),
                }
                let out = (s + 2) % 4;
                let next = crossings[k][out];
                let o = &occ[&next];
                let (nk, ns) = if o[0] == (k, out) { o[1] } else { o[0] };
                if next == start {
                    if (nk, ns) != arrival_for(start) {
                        return Err(bad("inconsistent orientation"));
                    }
                    break;
                }
                e = next;
                k = nk;
                s = ns;
            }
            components.push(comp);
        }
        let pd = PDCode::from_parts(crossings, signs, components);
        pd.check()?;
        Ok(pd)
    }

    /// Linking number of components `i` and `j`.
    pub fn linking_number(&self, i: usize, j: usize) -> Result<i64> {
        let n = self.components.len();
        for c in [i, j] {
            if c >= n {
                return Err(Error::NoSuchComponent(c));
            }
        }
        if i == j {
            return Err(Error::SameComponent);
        }
        let comp = self.component_of();
        let twice: i64 = self
            .crossings
            .iter()
            .zip(&self.signs)
            .filter(|(x, _)| {
                let pair = (comp[&x[0]], comp[&x[1]]);
                pair == (i, j) || pair == (j, i)
            })
            .map(|(_, &s)| s as i64)
            .sum();
        Ok(twice / 2)
    }

    /// The code of the mirror image.
    pub fn mirrored(&self) -> PDCode {
        let crossings = self
            .crossings
            .iter()
            .zip(&self.signs)
            .map(|(&[a, b, c, d], &s)| if s > 0 { [d, a, b, c] } else { [b, c, d, a] })
            .collect();
        PDCode::from_parts(crossings, self.signs.iter().map(|s| -s).collect(), self.components.clone())
    }

    fn sign_is_ambiguous(&self, succ: &HashMap<u32, u32>, k: usize) -> bool {
        let [_, b, _, d] = self.crossings[k];
        succ[&d] == b && succ[&b] == d
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// Parses the text form, a bare list of `X[...]` lines, or the
    /// `[[a,b,c,d],...]` list form.
    pub fn parse(s: &str) -> Result<PDCode> {
        let t = s.trim();
        if t.starts_with("[[") || t == "[]" {
            let crossings: Vec<[u32; 4]> =
                serde_json::from_str(t).map_err(|e| bad(format!("bad crossing list: {e}")))?;
            if crossings.is_empty() {
                return Ok(PDCode::unknot());
            }
            return PDCode::from_unoriented(crossings);
        }
        let mut components = Vec::new();
        let mut crossings = Vec::new();
        let mut explicit = Vec::new();
        let mut saw_header = false;
        for (n, raw) in t.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if line.starts_with("PD") {
                if line != HEADER {
                    return Err(bad(format!("unsupported header {line:?}")));
                }
                saw_header = true;
                continue;
            }
            let (tag, rest) = line.split_at(1);
            let close = rest.find(']').ok_or_else(|| bad(format!("line {}: missing ']'", n + 1)))?;
            let inner = rest
                .strip_prefix('[')
                .map(|r| &r[..close - 1])
                .ok_or_else(|| bad(format!("line {}: missing '['", n + 1)))?;
            let nums = inner
                .split(',')
                .map(str::trim)
                .filter(|x| !x.is_empty())
                .map(|x| x.parse::<u32>().map_err(|_| bad(format!("line {}: bad label {x:?}", n + 1))))
                .collect::<Result<Vec<u32>>>()?;
            let suffix = rest[close + 1..].trim();
            match tag {
                "C" => components.push(nums),
                "X" => {
                    let arr: [u32; 4] = nums
                        .try_into()
                        .map_err(|_| bad(format!("line {}: a crossing has four labels", n + 1)))?;
                    crossings.push(arr);
                    explicit.push(match suffix {
                        "" => None,
                        "+" => Some(1i8),
                        "-" => Some(-1i8),
                        _ => return Err(bad(format!("line {}: unexpected {suffix:?}", n + 1))),
                    });
                }
                _ => return Err(bad(format!("line {}: unknown record {tag:?}", n + 1))),
            }
        }
        if components.is_empty() {
            if crossings.is_empty() {
                return if saw_header {
                    Ok(PDCode::from_parts(Vec::new(), Vec::new(), Vec::new()))
                } else {
                    Err(bad("empty input"))
                };
            }
            let mut pd = PDCode::from_unoriented(crossings)?;
            for (k, s) in explicit.into_iter().enumerate() {
                if let Some(s) = s {
                    pd.signs[k] = s;
                }
            }
            pd.check()?;
            return Ok(pd);
        }
        let mut pd = PDCode::from_parts(crossings, Vec::new(), components);
        let succ = pd.successor();
        let mut signs = Vec::with_capacity(pd.crossings.len());
        for (k, &[_, b, _, d]) in pd.crossings.iter().enumerate() {
            let inferred = match (succ.get(&d) == Some(&b), succ.get(&b) == Some(&d)) {
                (true, false) => Some(1),
                (false, true) => Some(-1),
                _ => None,
            };
            let sign = explicit[k]
                .or(inferred)
                .ok_or_else(|| bad(format!("crossing {k}: sign is ambiguous and not annotated")))?;
            signs.push(sign);
        }
        pd.signs = signs;
        pd.check()?;
        Ok(pd)
    }
}

impl fmt::Display for PDCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        writeln!(f, "{HEADER}")?;
        for comp in &self.components {
            writeln!(f, "C[{}]", join(comp))?;
        }
        let succ = self.successor();
        for (k, x) in self.crossings.iter().enumerate() {
            write!(f, "X[{}]", join(x))?;
            if self.sign_is_ambiguous(&succ, k) {
                write!(f, " {}", if self.signs[k] > 0 { '+' } else { '-' })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "[[1,5,2,4],[3,1,4,6],[5,3,6,2]]";
    const HOPF_NEG: &str = "[[4,1,3,2],[2,3,1,4]]";

    #[test]
    fn orienting_a_bare_trefoil() {
        let pd = PDCode::parse(TREFOIL).unwrap();
        assert_eq!(pd.signs, vec![1, 1, 1]);
        assert_eq!(pd.writhe(), 3);
        assert_eq!(pd.components, vec![vec![1, 2, 3, 4, 5, 6]]);
    }

    #[test]
    fn hopf_sign_from_walk() {
        let pd = PDCode::parse(HOPF_NEG).unwrap();
        assert_eq!(pd.linking_number(0, 1).unwrap(), -1);
        assert_eq!(pd.mirrored().linking_number(0, 1).unwrap(), 1);
    }

    #[test]
    fn text_round_trip_with_ambiguous_signs() {
        for src in [TREFOIL, HOPF_NEG] {
            let pd = PDCode::parse(src).unwrap();
            for p in [pd.clone(), pd.mirrored()] {
                let text = p.to_text();
                assert_eq!(PDCode::parse(&text).unwrap(), p, "{text}");
            }
        }
        assert!(PDCode::parse(&PDCode::parse(HOPF_NEG).unwrap().to_text()).is_ok());
    }

    #[test]
    fn mirror_is_an_involution() {
        let pd = PDCode::parse(TREFOIL).unwrap();
        assert_eq!(pd.mirrored().mirrored(), pd);
        assert_eq!(pd.mirrored().writhe(), -3);
        pd.mirrored().check().unwrap();
    }

    #[test]
    fn malformed_codes_rejected() {
        assert!(PDCode::parse("[[1,2,3,4]]").is_err());
        assert!(PDCode::parse("X[1,2,3]").is_err());
        assert!(PDCode::parse("PD v9\n").is_err());
        assert!(PDCode::parse("").is_err());
    }
}

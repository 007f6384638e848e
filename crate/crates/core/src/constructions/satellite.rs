use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{torsion_sticks, Axis, Component, Conformation, LatticePoint, StickRef};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WordSign {
    Positive,
    Negative,
}

impl WordSign {
    pub fn value(self) -> i64 {
        match self {
            WordSign::Positive => 1,
            WordSign::Negative => -1,
        }
    }

    fn from_value(v: i64) -> WordSign {
        if v > 0 {
            WordSign::Positive
        } else {
            WordSign::Negative
        }
    }
}

/// A braid word on `strands` strands, all of whose crossings have the same
/// sign, in which any two strands cross at most once. Generator `k` (from 1
/// to `strands - 1`) crosses the strands in positions `k - 1` and `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermutationWord {
    pub strands: usize,
    pub generators: Vec<usize>,
    pub sign: WordSign,
}

impl PermutationWord {
    pub fn new(strands: usize, generators: Vec<usize>, sign: WordSign) -> Result<PermutationWord> {
        let w = PermutationWord {
            strands,
            generators,
            sign,
        };
        w.permutation()?;
        Ok(w)
    }

    pub fn identity(strands: usize) -> PermutationWord {
        PermutationWord {
            strands,
            generators: Vec::new(),
            sign: WordSign::Positive,
        }
    }

    /// A word realizing `perm` (strand starting at position `i` ends at
    /// `perm[i]`), built by bubble sort.
    pub fn from_permutation(perm: &[usize], sign: WordSign) -> Result<PermutationWord> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Precondition(format!("{perm:?} is not a permutation")));
            }
        }
        // positions hold strands; sort positions by target
        let mut row: Vec<usize> = (0..n).collect();
        let mut gens = Vec::new();
        for pass in 0..n {
            for k in 1..n - pass.min(n - 1) {
                if perm[row[k - 1]] > perm[row[k]] {
                    row.swap(k - 1, k);
                    gens.push(k);
                }
            }
        }
        PermutationWord::new(n, gens, sign)
    }

    /// The permutation of the word; fails when a generator is out of range
    /// or two strands cross twice.
    pub fn permutation(&self) -> Result<Vec<usize>> {
        let n = self.strands;
        if n == 0 {
            return Err(Error::Precondition("a permutation word needs at least one strand".into()));
        }
        let mut at: Vec<usize> = (0..n).collect(); // position -> strand
        let mut crossed = vec![vec![false; n]; n];
        for &g in &self.generators {
            if g == 0 || g >= n {
                return Err(Error::Precondition(format!("generator {g} out of range for {n} strands")));
            }
            let (a, b) = (at[g - 1], at[g]);
            if std::mem::replace(&mut crossed[a.min(b)][a.max(b)], true) {
                return Err(Error::Precondition(format!(
                    "strands {a} and {b} cross twice; not a permutation word"
                )));
            }
            at.swap(g - 1, g);
        }
        let mut perm = vec![0; n];
        for (pos, &strand) in at.iter().enumerate() {
            perm[strand] = pos;
        }
        Ok(perm)
    }
}

/// Translation between successive parallel copies.
const SHIFT: [i64; 3] = [1, 1, -1];

fn scaled_copy(j: &Component, scale: i64, k: i64) -> Vec<LatticePoint> {
    j.corners
        .iter()
        .map(|p| LatticePoint::from_array([0, 1, 2].map(|a| p.to_array()[a] * scale + k * SHIFT[a])))
        .collect()
}

fn knot_component(j: &Conformation) -> Result<&Component> {
    j.ensure_valid()?;
    if !j.is_knot() {
        return Err(Error::NotAKnot(j.components.len()));
    }
    Ok(&j.components[0])
}

/// `J_n`: `n` parallel copies of `j` scaled by `n + 1`, copy `k` translated
/// by `k·(1, 1, -1)`. Every coordinate of copy `k` is `±k` modulo the scale,
/// so distinct copies never meet and each is a push-off of the others.
pub fn satellite_base(j: &Conformation, n: usize) -> Result<Conformation> {
    let comp = knot_component(j)?;
    if n == 0 {
        return Err(Error::Precondition("satellite_base needs n >= 1".into()));
    }
    let scale = n as i64 + 1;
    Ok(Conformation::new(
        (0..n as i64).map(|k| Component::new(scaled_copy(comp, scale, k))).collect(),
    ))
}

struct Site {
    /// Index of the torsion stick; it runs from corner `index` to `index + 1`.
    index: usize,
    perm: Vec<usize>,
}

fn axis_dir(from: LatticePoint, to: LatticePoint) -> (usize, i64) {
    let d = [0, 1, 2].map(|a| to.to_array()[a] - from.to_array()[a]);
    let axis = (0..3).find(|&a| d[a] != 0).expect("sticks have positive length");
    (axis, d[axis].signum())
}

/// Sign of the permutation braids that can be inserted at torsion stick
/// `index` of the scaled companion `c`.
fn site_sign(c: &[LatticePoint], index: usize) -> i64 {
    let n = c.len();
    let a_start = c[index];
    let a_end = c[(index + 1) % n];
    let (alpha, da) = axis_dir(a_start, a_end);
    let (beta, db) = axis_dir(c[(index + n - 1) % n], a_start);
    let (gamma, dc) = axis_dir(a_end, c[(index + 2) % n]);
    let mut e_b = [0i64; 3];
    e_b[beta] = db;
    let mut e_c = [0i64; 3];
    e_c[gamma] = dc;
    let cross = [
        e_c[1] * e_b[2] - e_c[2] * e_b[1],
        e_c[2] * e_b[0] - e_c[0] * e_b[2],
        e_c[0] * e_b[1] - e_c[1] * e_b[0],
    ];
    // sign of the crossings between incoming and outgoing strands of the bundle
    let s = cross[alpha] * da;
    // when the bundle already shows a half twist at this corner, the braid
    // inserted relative to it has the opposite sign
    let sigma_b = SHIFT[beta] * db;
    let sigma_c = SHIFT[gamma] * dc;
    if sigma_b == -sigma_c {
        s
    } else {
        -s
    }
}

/// Sign of the permutation words insertable at torsion stick `t` of `j`.
pub fn insertable_sign(j: &Conformation, t: &StickRef) -> Result<WordSign> {
    let comp = knot_component(j)?;
    if !torsion_sticks(j).iter().any(|s| s.index == t.index) {
        return Err(Error::Precondition(format!("stick {} is not a torsion stick", t.index)));
    }
    Ok(WordSign::from_value(site_sign(&comp.corners, t.index)))
}

/// The braid satellite of `j` that differs from `J_n` by the permutation
/// word `w` at torsion stick `t`, with exactly `n · stick_count(j)` sticks.
///
/// The `n` strands entering stick `t` along its predecessor are reconnected
/// to the copies of its successor given by the word's permutation: each
/// predecessor and successor copy is lengthened or shortened, and the copy of
/// `t` between them moved, so no sticks are added.
pub fn satellite(j: &Conformation, n: usize, w: &PermutationWord, t: &StickRef) -> Result<Conformation> {
    satellite_multi(j, n, &[(w.clone(), *t)])
}

/// [`satellite`] with several words inserted at once, one per torsion stick;
/// the chosen sticks must be pairwise non-adjacent.
pub fn satellite_multi(j: &Conformation, n: usize, words: &[(PermutationWord, StickRef)]) -> Result<Conformation> {
    let comp = knot_component(j)?;
    if n == 0 {
        return Err(Error::Precondition("satellite needs n >= 1".into()));
    }
    let m = comp.len();
    let torsion = torsion_sticks(j);
    let mut sites = Vec::new();
    for (w, t) in words {
        if w.strands != n {
            return Err(Error::Precondition(format!("word has {} strands, expected {n}", w.strands)));
        }
        if t.component != 0 || !torsion.iter().any(|s| s.index == t.index) {
            return Err(Error::Precondition(format!("stick {} is not a torsion stick", t.index)));
        }
        sites.push((w, Site {
            index: t.index,
            perm: w.permutation()?,
        }));
    }
    sites.sort_by_key(|(_, s)| s.index);
    for pair in sites.windows(2) {
        if pair[1].1.index - pair[0].1.index < 2 {
            return Err(Error::Precondition("insertion sticks must be distinct and non-adjacent".into()));
        }
    }
    if sites.len() > 1 && sites[0].1.index + m - sites[sites.len() - 1].1.index < 2 {
        return Err(Error::Precondition("insertion sticks must be distinct and non-adjacent".into()));
    }

    let scale = if sites.len() > 1 { 2 * n as i64 + 1 } else { n as i64 + 1 };
    let copies: Vec<Vec<LatticePoint>> = (0..n as i64).map(|k| scaled_copy(comp, scale, k)).collect();
    for (w, site) in &sites {
        let sign = site_sign(&copies[0], site.index);
        if !w.generators.is_empty() && w.sign.value() != sign {
            return Err(Error::Precondition(format!(
                "stick {} only admits {} permutation words",
                site.index,
                if sign > 0 { "positive" } else { "negative" }
            )));
        }
    }
    if sites.is_empty() {
        return Ok(Conformation::new(copies.into_iter().map(Component::new).collect()));
    }
    let sites: Vec<Site> = sites.into_iter().map(|(_, s)| s).collect();
    let q = sites.len();

    // segment (k, s): copy k from the end corner of site s's stick round to
    // the start corner of site s+1's stick, with both ends moved
    let segment = |k: usize, s: usize| -> Vec<LatticePoint> {
        let here = &sites[s];
        let next = &sites[(s + 1) % q];
        let c = &copies[k];
        let b_idx = (here.index + 1) % m;
        let a_idx = next.index;
        let from = here.perm.iter().position(|&p| p == k).unwrap();
        let (gamma, _) = axis_dir(c[b_idx], c[(b_idx + 1) % m]);
        let mut start = c[b_idx];
        start.set(
            Axis::from_index(gamma),
            copies[from][here.index].to_array()[gamma],
        );
        let to = next.perm[k];
        let (beta, _) = axis_dir(c[(a_idx + m - 1) % m], c[a_idx]);
        let mut end = c[a_idx];
        end.set(
            Axis::from_index(beta),
            copies[to][(a_idx + 1) % m].to_array()[beta],
        );
        let mut out = vec![start];
        let mut i = (b_idx + 1) % m;
        while i != a_idx {
            out.push(c[i]);
            i = (i + 1) % m;
        }
        out.push(end);
        out
    };

    let mut used = vec![vec![false; q]; n];
    let mut components = Vec::new();
    for k0 in 0..n {
        if used[k0][0] {
            continue;
        }
        let mut corners = Vec::new();
        let (mut k, mut s) = (k0, 0);
        while !used[k][s] {
            used[k][s] = true;
            corners.extend(segment(k, s));
            k = sites[(s + 1) % q].perm[k];
            s = (s + 1) % q;
        }
        components.push(Component::new(corners));
    }
    let out = Conformation::new(components);
    out.ensure_valid()?;
    Ok(out)
}

//! Cyclic axis words and their symmetries.

/// A relabeling of a rooted, oriented polygon: start at corner `shift`,
/// optionally walk backwards, and send axis `a` to `perm[a]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(super) struct Symmetry {
    shift: usize,
    reverse: bool,
    perm: [usize; 3],
}

impl Symmetry {
    pub(super) fn is_identity(&self) -> bool {
        self.shift == 0 && !self.reverse && self.perm == [0, 1, 2]
    }

    fn stick_source(&self, i: usize, s: usize) -> usize {
        if self.reverse {
            (2 * s + self.shift - i - 1) % s
        } else {
            (i + self.shift) % s
        }
    }

    fn corner_source(&self, i: usize, s: usize) -> usize {
        if self.reverse {
            (s + self.shift - i) % s
        } else {
            (i + self.shift) % s
        }
    }

    fn apply_word(&self, w: &[usize]) -> Vec<usize> {
        let s = w.len();
        (0..s).map(|i| self.perm[w[self.stick_source(i, s)]]).collect()
    }

    /// Whether the image of `corners` under this symmetry, composed with the
    /// level reflections in `flips` (bit `a` reflects axis `a`), is
    /// lexicographically smaller than `corners`.
    pub(super) fn image_less(&self, corners: &[[i64; 3]], levels: [i64; 3], flips: u8) -> bool {
        let s = corners.len();
        for (i, &orig) in corners.iter().enumerate() {
            let c = corners[self.corner_source(i, s)];
            let mut img = [0i64; 3];
            for a in 0..3 {
                let v = if flips & (1 << a) != 0 { levels[a] + 1 - c[a] } else { c[a] };
                img[self.perm[a]] = v;
            }
            match img.cmp(&orig) {
                std::cmp::Ordering::Less => return true,
                std::cmp::Ordering::Greater => return false,
                std::cmp::Ordering::Equal => {}
            }
        }
        false
    }
}

const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

fn all_words(split: [usize; 3]) -> Vec<Vec<usize>> {
    fn rec(left: &mut [usize; 3], cur: &mut Vec<usize>, s: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == s {
            if cur[0] != cur[s - 1] {
                out.push(cur.clone());
            }
            return;
        }
        for a in 0..3 {
            if left[a] == 0 || cur.last() == Some(&a) {
                continue;
            }
            left[a] -= 1;
            cur.push(a);
            rec(left, cur, s, out);
            cur.pop();
            left[a] += 1;
        }
    }
    let s: usize = split.iter().sum();
    let mut out = Vec::new();
    if s >= 4 {
        rec(&mut split.clone(), &mut Vec::with_capacity(s), s, &mut out);
    }
    out
}

/// Words with the given split, one per class under rotation, reversal and
/// split-preserving axis permutations (or every word when `symmetry` is
/// off), each with its stabilizer.
pub(super) fn canonical_words(split: [usize; 3], symmetry: bool) -> Vec<(Vec<usize>, Vec<Symmetry>)> {
    let s: usize = split.iter().sum();
    let group: Vec<Symmetry> = if symmetry {
        let mut g = Vec::new();
        for perm in PERMS {
            if (0..3).any(|a| split[perm[a]] != split[a]) {
                continue;
            }
            for shift in 0..s {
                for reverse in [false, true] {
                    g.push(Symmetry { shift, reverse, perm });
                }
            }
        }
        g
    } else {
        vec![Symmetry {
            shift: 0,
            reverse: false,
            perm: [0, 1, 2],
        }]
    };
    let mut out = Vec::new();
    for w in all_words(split) {
        let mut canonical = true;
        let mut stab = Vec::new();
        for g in &group {
            let img = g.apply_word(&w);
            if img < w {
                canonical = false;
                break;
            }
            if img == w {
                stab.push(*g);
            }
        }
        if canonical {
            out.push((w, stab));
        }
    }
    out
}

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use super::{RootSystem, Weight};
use crate::error::{Error, Result};

/// Enumeration refuses groups larger than this.
pub const MAX_ORDER: usize = 400_000;

/// Handle to an element of an enumerated [`WeylGroup`].
///
/// The index is the position in the canonical order: by length, then by the
/// lexicographically minimal reduced word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement(pub u32);

impl WeylElement {
    pub const ID: WeylElement = WeylElement(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Debug)]
struct ElemData {
    matrix: Vec<i32>,
    length: usize,
    word: Vec<u8>,
    right_descents: u32,
    left_descents: u32,
}

/// A Weyl group, fully enumerated, with multiplication tables and Bruhat order.
pub struct WeylGroup {
    rs: RootSystem,
    elems: Vec<ElemData>,
    by_rho: HashMap<Weight, u32>,
    right: Vec<u32>,
    left: Vec<u32>,
    bruhat: OnceLock<Vec<Vec<u64>>>,
}

impl fmt::Debug for WeylGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylGroup({}, order {})", self.rs.label(), self.order())
    }
}

impl WeylGroup {
    pub fn new(rs: RootSystem) -> Result<Self> {
        let r = rs.rank();
        let rho = rs.rho();
        let ident: Vec<i32> = (0..r * r).map(|k| i32::from(k / r == k % r)).collect();
        let mut raw: Vec<ElemData> = vec![ElemData {
            matrix: ident,
            length: 0,
            word: vec![],
            right_descents: 0,
            left_descents: 0,
        }];
        let mut by_rho: HashMap<Weight, u32> = HashMap::from([(rho, 0)]);
        let mut raw_rho = vec![rho];
        // breadth-first by length; w s_i is longer iff w(alpha_i) > 0
        let mut frontier = vec![0usize];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &k in &frontier {
                for i in 0..r {
                    let wa = apply(&raw[k].matrix, r, &rs.simple_root(i));
                    if !rs.is_positive_root(&wa) {
                        continue;
                    }
                    let key = raw_rho[k] - wa;
                    if by_rho.contains_key(&key) {
                        continue;
                    }
                    if raw.len() >= MAX_ORDER {
                        return Err(Error::TooLarge(rs.label()));
                    }
                    let m = mul_simple_right(&raw[k].matrix, r, &rs, i);
                    by_rho.insert(key, raw.len() as u32);
                    raw_rho.push(key);
                    next.push(raw.len());
                    raw.push(ElemData {
                        matrix: m,
                        length: raw[k].length + 1,
                        word: vec![],
                        right_descents: 0,
                        left_descents: 0,
                    });
                }
            }
            frontier = next;
        }
        let n = raw.len();
        // s_i w has rho-image s_i(w rho)
        let left_raw: Vec<u32> = (0..n)
            .flat_map(|k| {
                let key = raw_rho[k];
                let rs = &rs;
                let by_rho = &by_rho;
                (0..r).map(move |i| by_rho[&rs.reflect(i, &key)])
            })
            .collect();
        // minimal lexicographic reduced words, by increasing length
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&k| raw[k].length);
        for &k in &order {
            if raw[k].length == 0 {
                continue;
            }
            let i = (0..r)
                .find(|&i| raw[left_raw[k * r + i] as usize].length < raw[k].length)
                .expect("nontrivial element has a left descent");
            let mut word = vec![i as u8];
            word.extend_from_slice(&raw[left_raw[k * r + i] as usize].word);
            raw[k].word = word;
        }
        order.sort_by(|&a, &b| (raw[a].length, &raw[a].word).cmp(&(raw[b].length, &raw[b].word)));
        let mut pos = vec![0u32; n];
        for (p, &k) in order.iter().enumerate() {
            pos[k] = p as u32;
        }
        let mut elems: Vec<ElemData> = order.iter().map(|&k| raw[k].clone()).collect();
        let by_rho: HashMap<Weight, u32> = by_rho
            .into_iter()
            .map(|(w, k)| (w, pos[k as usize]))
            .collect();
        let mut left = vec![0u32; n * r];
        let mut right = vec![0u32; n * r];
        for (p, &k) in order.iter().enumerate() {
            for i in 0..r {
                left[p * r + i] = pos[left_raw[k * r + i] as usize];
                let wa = apply(&raw[k].matrix, r, &rs.simple_root(i));
                right[p * r + i] = by_rho[&(raw_rho[k] - wa)];
            }
        }
        for p in 0..n {
            let l = elems[p].length;
            for i in 0..r {
                if elems[right[p * r + i] as usize].length < l {
                    elems[p].right_descents |= 1 << i;
                }
                if elems[left[p * r + i] as usize].length < l {
                    elems[p].left_descents |= 1 << i;
                }
            }
        }
        Ok(WeylGroup {
            rs,
            elems,
            by_rho,
            right,
            left,
            bruhat: OnceLock::new(),
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl DoubleEndedIterator<Item = WeylElement> + ExactSizeIterator {
        (0..self.elems.len() as u32).map(WeylElement)
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement::ID
    }

    pub fn longest(&self) -> WeylElement {
        WeylElement(self.elems.len() as u32 - 1)
    }

    pub fn simple(&self, i: usize) -> WeylElement {
        self.right_mul_simple(WeylElement::ID, i)
    }

    pub fn length(&self, w: WeylElement) -> usize {
        self.elems[w.index()].length
    }

    /// Lexicographically minimal reduced word (0-based letters).
    pub fn word(&self, w: WeylElement) -> &[u8] {
        &self.elems[w.index()].word
    }

    pub fn matrix(&self, w: WeylElement) -> &[i32] {
        &self.elems[w.index()].matrix
    }

    pub fn right_mul_simple(&self, w: WeylElement, i: usize) -> WeylElement {
        WeylElement(self.right[w.index() * self.rank() + i])
    }

    pub fn left_mul_simple(&self, i: usize, w: WeylElement) -> WeylElement {
        WeylElement(self.left[w.index() * self.rank() + i])
    }

    pub fn is_right_descent(&self, w: WeylElement, i: usize) -> bool {
        self.elems[w.index()].right_descents & (1 << i) != 0
    }

    pub fn is_left_descent(&self, w: WeylElement, i: usize) -> bool {
        self.elems[w.index()].left_descents & (1 << i) != 0
    }

    pub fn right_descents(&self, w: WeylElement) -> Vec<usize> {
        (0..self.rank())
            .filter(|&i| self.is_right_descent(w, i))
            .collect()
    }

    pub fn left_descents(&self, w: WeylElement) -> Vec<usize> {
        (0..self.rank())
            .filter(|&i| self.is_left_descent(w, i))
            .collect()
    }

    /// Action on the weight lattice.
    pub fn act(&self, w: WeylElement, lambda: &Weight) -> Weight {
        apply(self.matrix(w), self.rank(), lambda)
    }

    pub fn from_word(&self, word: &[u8]) -> WeylElement {
        word.iter().fold(WeylElement::ID, |w, &i| {
            self.right_mul_simple(w, i as usize)
        })
    }

    pub fn mul(&self, u: WeylElement, v: WeylElement) -> WeylElement {
        self.word(v)
            .iter()
            .fold(u, |w, &i| self.right_mul_simple(w, i as usize))
    }

    pub fn inverse(&self, w: WeylElement) -> WeylElement {
        self.word(w).iter().fold(WeylElement::ID, |acc, &i| {
            self.left_mul_simple(i as usize, acc)
        })
    }

    /// Element determined by its image of `rho`.
    pub fn from_rho_image(&self, w_rho: &Weight) -> Option<WeylElement> {
        self.by_rho.get(w_rho).map(|&k| WeylElement(k))
    }

    /// Name such as `s1s2s1`, or `id`.
    pub fn name(&self, w: WeylElement) -> String {
        let word = self.word(w);
        if word.is_empty() {
            return "id".to_string();
        }
        word.iter().map(|i| format!("s{}", i + 1)).collect()
    }

    /// Parses a cell name: `id`, `w0`, `e`, `s1s2`, `s1*s2`, `1,2` or `121`
    /// (the latter only for rank below 10). Non-reduced words are accepted.
    pub fn parse(&self, s: &str) -> Result<WeylElement> {
        let t = s.trim();
        let bad = || Error::UnknownCell(s.to_string());
        match t {
            "id" | "e" | "1" | "" => return Ok(WeylElement::ID),
            "w0" => return Ok(self.longest()),
            _ => {}
        }
        let mut letters = Vec::new();
        if t.starts_with('s') {
            for part in t.split('s').skip(1) {
                let p = part.trim_matches(|c: char| c == '*' || c == '.' || c.is_whitespace());
                let k: usize = p.parse().map_err(|_| bad())?;
                letters.push(k);
            }
        } else if t.contains(',') {
            for p in t.split(',') {
                letters.push(p.trim().parse().map_err(|_| bad())?);
            }
        } else {
            for c in t.chars() {
                letters.push(c.to_digit(10).ok_or_else(bad)? as usize);
            }
        }
        let mut w = WeylElement::ID;
        for k in letters {
            if k == 0 || k > self.rank() {
                return Err(bad());
            }
            w = self.right_mul_simple(w, k - 1);
        }
        Ok(w)
    }

    /// Bruhat order `u <= w`.
    pub fn bruhat_leq(&self, u: WeylElement, w: WeylElement) -> bool {
        let t = self.bruhat.get_or_init(|| self.bruhat_table());
        t[w.index()][u.index() / 64] >> (u.index() % 64) & 1 == 1
    }

    /// Elements `u <= w`, in canonical order.
    pub fn lower_interval(&self, w: WeylElement) -> Vec<WeylElement> {
        self.elements().filter(|&u| self.bruhat_leq(u, w)).collect()
    }

    /// Elements `u >= w`, in canonical order.
    pub fn upper_interval(&self, w: WeylElement) -> Vec<WeylElement> {
        self.elements().filter(|&u| self.bruhat_leq(w, u)).collect()
    }

    fn bruhat_table(&self) -> Vec<Vec<u64>> {
        // If ws < w then u <= w iff (us < u ? us <= ws : u <= ws).
        let n = self.order();
        let words = n.div_ceil(64);
        let mut t: Vec<Vec<u64>> = vec![vec![0; words]; n];
        t[0][0] = 1;
        for w in 1..n {
            let we = WeylElement(w as u32);
            let s = self.right_descents(we)[0];
            let ws = self.right_mul_simple(we, s).index();
            let mut row = vec![0u64; words];
            for u in 0..n {
                let ue = WeylElement(u as u32);
                if self.length(ue) > self.length(we) {
                    break;
                }
                let leq = if self.is_right_descent(ue, s) {
                    let us = self.right_mul_simple(ue, s).index();
                    t[ws][us / 64] >> (us % 64) & 1 == 1
                } else {
                    t[ws][u / 64] >> (u % 64) & 1 == 1
                };
                if leq || u == w {
                    row[u / 64] |= 1 << (u % 64);
                }
            }
            t[w] = row;
        }
        t
    }

    /// All reduced words of `w`, in lexicographic order.
    pub fn reduced_words(&self, w: WeylElement) -> Vec<Vec<u8>> {
        if w == WeylElement::ID {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for i in self.left_descents(w) {
            for mut rest in self.reduced_words(self.left_mul_simple(i, w)) {
                rest.insert(0, i as u8);
                out.push(rest);
            }
        }
        out
    }

    /// The reflection `s_beta` for the positive root with index `k`.
    pub fn reflection(&self, k: usize) -> WeylElement {
        let beta = self.rs.positive_roots()[k];
        for u in self.elements() {
            for i in 0..self.rank() {
                if self.act(u, &self.rs.simple_root(i)) == beta {
                    let us = self.right_mul_simple(u, i);
                    return self.mul(us, self.inverse(u));
                }
            }
        }
        unreachable!("every positive root is conjugate to a simple root")
    }
}

fn apply(m: &[i32], r: usize, lambda: &Weight) -> Weight {
    let mut out = Weight::ZERO;
    for a in 0..r {
        let mut s = 0;
        for b in 0..r {
            s += m[a * r + b] * lambda.0[b];
        }
        out.0[a] = s;
    }
    out
}

fn mul_simple_right(m: &[i32], r: usize, rs: &RootSystem, i: usize) -> Vec<i32> {
    // (S_i)[k][j] = delta_kj - delta_ij (alpha_i)_k
    let alpha = rs.simple_root(i);
    let mut out = vec![0; r * r];
    for a in 0..r {
        for j in 0..r {
            let mut s = m[a * r + j];
            if j == i {
                s = 0;
                for k in 0..r {
                    let sk = i32::from(k == i) - alpha.0[k];
                    s += m[a * r + k] * sk;
                }
            }
            out[a * r + j] = s;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::LieType;

    fn group(s: &str) -> WeylGroup {
        WeylGroup::new(RootSystem::from_cartan(s.parse().unwrap())).unwrap()
    }

    #[test]
    fn orders() {
        for (s, n) in [
            ("A1", 2),
            ("A2", 6),
            ("A3", 24),
            ("B2", 8),
            ("B3", 48),
            ("C3", 48),
            ("G2", 12),
            ("D4", 192),
            ("F4", 1152),
        ] {
            let g = group(s);
            assert_eq!(g.order(), n, "{s}");
            assert_eq!(
                g.length(g.longest()),
                g.root_system().positive_roots().len()
            );
        }
    }

    #[test]
    fn too_large_is_rejected() {
        let rs = RootSystem::new(LieType::E, 8).unwrap();
        assert!(matches!(WeylGroup::new(rs), Err(Error::TooLarge(_))));
    }

    #[test]
    fn a2_examples() {
        let g = group("A2");
        let rs = g.root_system();
        let s1s2 = g.parse("s1s2").unwrap();
        assert_eq!(g.act(s1s2, &rs.simple_root(0)), rs.simple_root(1));
        let s1 = g.parse("s1").unwrap();
        let s2 = g.parse("s2").unwrap();
        let s2s1 = g.parse("s2s1").unwrap();
        assert!(g.bruhat_leq(s1, s2s1));
        assert!(!g.bruhat_leq(s1, s2));
        let names: Vec<String> = g.elements().map(|w| g.name(w)).collect();
        assert_eq!(names, ["id", "s1", "s2", "s1s2", "s2s1", "s1s2s1"]);
        assert_eq!(g.parse("s2s1s2").unwrap(), g.longest());
        assert_eq!(g.parse("w0").unwrap(), g.longest());
        assert!(g.parse("s3").is_err());
    }

    #[test]
    fn matrix_matches_word_and_length_counts_inversions() {
        for s in ["A3", "B3", "G2"] {
            let g = group(s);
            let rs = g.root_system();
            for w in g.elements() {
                let inv = rs
                    .positive_roots()
                    .iter()
                    .filter(|b| !rs.is_positive_root(&g.act(w, b)))
                    .count();
                assert_eq!(inv, g.length(w));
                assert_eq!(g.word(w).len(), g.length(w));
                let lam = Weight::from_slice(&[3, -1, 2][..g.rank()]);
                let via_word = g
                    .word(w)
                    .iter()
                    .rev()
                    .fold(lam, |l, &i| rs.reflect(i as usize, &l));
                assert_eq!(g.act(w, &lam), via_word);
                for i in 0..g.rank() {
                    let desc = !rs.is_positive_root(&g.act(w, &rs.simple_root(i)));
                    assert_eq!(desc, g.is_right_descent(w, i));
                    let ws = g.right_mul_simple(w, i);
                    assert_eq!(g.length(ws).abs_diff(g.length(w)), 1);
                }
                let w0w = g.mul(g.longest(), w);
                assert_eq!(g.length(w0w), g.length(g.longest()) - g.length(w));
                assert_eq!(g.mul(w, g.inverse(w)), WeylElement::ID);
            }
        }
    }

    #[test]
    fn reflection_of_simple_root_is_simple_reflection() {
        let g = group("B2");
        for i in 0..2 {
            let k = g
                .root_system()
                .positive_root_index(&g.root_system().simple_root(i))
                .unwrap();
            assert_eq!(g.reflection(k), g.simple(i));
        }
    }
}

use super::{WeylElement, WeylGroup};
use crate::error::{Error, Result};

/// A standard parabolic subgroup `W_P` of a Weyl group together with its
/// minimal length coset representatives `W^P`.
///
/// `W_P` is generated by the simple reflections whose indices are listed in
/// `levi` (0-based). The empty set gives the Borel case `G/B`.
#[derive(Clone, Debug)]
pub struct Parabolic {
    levi: Vec<usize>,
    mask: u32,
    reps: Vec<WeylElement>,
    rep_of: Vec<u32>,
    levi_elements: Vec<WeylElement>,
    levi_roots: Vec<usize>,
}

impl Parabolic {
    pub fn new(g: &WeylGroup, levi: &[usize]) -> Result<Self> {
        let mut levi: Vec<usize> = levi.to_vec();
        levi.sort_unstable();
        levi.dedup();
        if let Some(&bad) = levi.iter().find(|&&i| i >= g.rank()) {
            return Err(Error::InvalidParabolic(format!(
                "index {} exceeds rank {}",
                bad + 1,
                g.rank()
            )));
        }
        let mask = levi.iter().fold(0u32, |m, &i| m | (1 << i));
        let reps: Vec<WeylElement> = g
            .elements()
            .filter(|&w| levi.iter().all(|&i| !g.is_right_descent(w, i)))
            .collect();
        let mut pos = vec![u32::MAX; g.order()];
        for (k, w) in reps.iter().enumerate() {
            pos[w.index()] = k as u32;
        }
        let mut rep_of = vec![0u32; g.order()];
        for w in g.elements() {
            let mut v = w;
            while let Some(&i) = levi.iter().find(|&&i| g.is_right_descent(v, i)) {
                v = g.right_mul_simple(v, i);
            }
            rep_of[w.index()] = pos[v.index()];
        }
        let levi_elements = g
            .elements()
            .filter(|&w| g.word(w).iter().all(|&i| mask & (1 << i) != 0))
            .collect();
        let rs = g.root_system();
        let levi_roots = (0..rs.positive_roots().len())
            .filter(|&k| {
                rs.positive_root_coords(k)
                    .iter()
                    .enumerate()
                    .all(|(i, &c)| c == 0 || mask & (1 << i) != 0)
            })
            .collect();
        Ok(Parabolic {
            levi,
            mask,
            reps,
            rep_of,
            levi_elements,
            levi_roots,
        })
    }

    /// Parses a 1-based comma separated index list such as `1,3`.
    pub fn parse(g: &WeylGroup, s: &str) -> Result<Self> {
        let mut idx = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let k: usize = part
                .parse()
                .map_err(|_| Error::InvalidParabolic(format!("cannot parse `{part}`")))?;
            if k == 0 {
                return Err(Error::InvalidParabolic("indices are 1-based".into()));
            }
            idx.push(k - 1);
        }
        Parabolic::new(g, &idx)
    }

    pub fn borel(g: &WeylGroup) -> Self {
        Parabolic::new(g, &[]).expect("empty subset is valid")
    }

    pub fn levi(&self) -> &[usize] {
        &self.levi
    }

    pub fn contains_simple(&self, i: usize) -> bool {
        self.mask & (1 << i) != 0
    }

    pub fn is_borel(&self) -> bool {
        self.levi.is_empty()
    }

    /// Whether every generator of `self` lies in `other`.
    pub fn is_subset_of(&self, other: &Parabolic) -> bool {
        self.mask & !other.mask == 0
    }

    /// Minimal coset representatives in canonical order.
    pub fn reps(&self) -> &[WeylElement] {
        &self.reps
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Position of the coset `wW_P` among the representatives.
    pub fn coset_index(&self, w: WeylElement) -> usize {
        self.rep_of[w.index()] as usize
    }

    pub fn min_rep(&self, w: WeylElement) -> WeylElement {
        self.reps[self.coset_index(w)]
    }

    pub fn is_min_rep(&self, w: WeylElement) -> bool {
        self.min_rep(w) == w
    }

    /// Factorisation `w = w^P w_P`.
    pub fn factor(&self, g: &WeylGroup, w: WeylElement) -> (WeylElement, WeylElement) {
        let wp = self.min_rep(w);
        (wp, g.mul(g.inverse(wp), w))
    }

    pub fn levi_elements(&self) -> &[WeylElement] {
        &self.levi_elements
    }

    /// Indices of the positive roots of the Levi factor.
    pub fn levi_roots(&self) -> &[usize] {
        &self.levi_roots
    }

    /// Indices of the positive roots outside the Levi factor.
    pub fn nonlevi_roots(&self, g: &WeylGroup) -> Vec<usize> {
        (0..g.root_system().positive_roots().len())
            .filter(|k| !self.levi_roots.contains(k))
            .collect()
    }

    pub fn dimension(&self, g: &WeylGroup) -> usize {
        g.root_system().positive_roots().len() - self.levi_roots.len()
    }

    /// Comma separated 1-based generator list.
    pub fn label(&self) -> String {
        self.levi
            .iter()
            .map(|i| (i + 1).to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::RootSystem;

    fn group(s: &str) -> WeylGroup {
        WeylGroup::new(RootSystem::from_cartan(s.parse().unwrap())).unwrap()
    }

    #[test]
    fn extreme_cases() {
        let g = group("A3");
        let full = Parabolic::new(&g, &[0, 1, 2]).unwrap();
        assert_eq!(full.reps(), &[WeylElement::ID]);
        let b = Parabolic::borel(&g);
        assert_eq!(b.len(), g.order());
    }

    #[test]
    fn grassmannian_and_factorisation() {
        let g = group("A3");
        let p = Parabolic::parse(&g, "1,3").unwrap();
        assert_eq!(p.len(), 6);
        assert_eq!(p.dimension(&g), 4);
        for w in g.elements() {
            let (wp, wl) = p.factor(&g, w);
            assert_eq!(g.mul(wp, wl), w);
            assert_eq!(g.length(w), g.length(wp) + g.length(wl));
            assert!(p.levi_elements().contains(&wl));
        }
        assert_eq!(p.len() * p.levi_elements().len(), g.order());
        assert!(Parabolic::parse(&g, "4").is_err());
        assert!(Parabolic::parse(&g, "0").is_err());
    }
}

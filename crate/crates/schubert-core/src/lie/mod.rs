//! Finite root systems, Weyl groups and parabolic subgroups.

mod parabolic;
mod weyl;

pub use parabolic::Parabolic;
pub use weyl::{WeylElement, WeylGroup};

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported rank.
pub const MAX_RANK: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LieType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl LieType {
    fn from_char(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => LieType::A,
            'B' => LieType::B,
            'C' => LieType::C,
            'D' => LieType::D,
            'E' => LieType::E,
            'F' => LieType::F,
            'G' => LieType::G,
            _ => return None,
        })
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// An integral weight in the basis of fundamental weights.
///
/// Coordinates beyond the rank of the ambient root system are zero.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub [i32; MAX_RANK]);

impl Weight {
    pub const ZERO: Weight = Weight([0; MAX_RANK]);

    pub fn from_slice(c: &[i32]) -> Weight {
        assert!(c.len() <= MAX_RANK);
        let mut w = [0; MAX_RANK];
        w[..c.len()].copy_from_slice(c);
        Weight(w)
    }

    pub fn coords(&self, rank: usize) -> &[i32] {
        &self.0[..rank]
    }

    /// Pairing with the simple coroot `alpha_i^vee`.
    pub fn pair_coroot(&self, i: usize) -> i32 {
        self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn scale(&self, k: i32) -> Weight {
        let mut w = self.0;
        w.iter_mut().for_each(|x| *x *= k);
        Weight(w)
    }
}

impl std::ops::Add for Weight {
    type Output = Weight;
    fn add(self, o: Weight) -> Weight {
        let mut w = self.0;
        for (a, b) in w.iter_mut().zip(o.0) {
            *a += b;
        }
        Weight(w)
    }
}

impl std::ops::Sub for Weight {
    type Output = Weight;
    fn sub(self, o: Weight) -> Weight {
        self + (-o)
    }
}

impl std::ops::Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scale(-1)
    }
}

/// Cartan type and rank together with the Cartan matrix.
///
/// `matrix[i][j]` is the pairing of the simple root `alpha_i` with the coroot
/// `alpha_j^vee`, so row `i` lists the fundamental-weight coordinates of `alpha_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanDatum {
    pub lie_type: LieType,
    pub rank: usize,
    pub matrix: Vec<Vec<i32>>,
}

impl CartanDatum {
    pub fn new(lie_type: LieType, rank: usize) -> Result<Self> {
        use LieType::*;
        let bad = || Error::InvalidType(format!("{lie_type}{rank}"));
        let ok = match lie_type {
            A => rank >= 1,
            B | C => rank >= 2,
            D => rank >= 3,
            E => (6..=8).contains(&rank),
            F => rank == 4,
            G => rank == 2,
        };
        if !ok || rank > MAX_RANK {
            return Err(bad());
        }
        // Kac convention: kac[i][j] = <alpha_i^vee, alpha_j>.
        let mut kac = vec![vec![0i32; rank]; rank];
        for (i, row) in kac.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize, kij: i32, kji: i32| {
            kac[i][j] = kij;
            kac[j][i] = kji;
        };
        match lie_type {
            A => (0..rank - 1).for_each(|i| link(i, i + 1, -1, -1)),
            B => {
                (0..rank - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(rank - 2, rank - 1, -1, -2);
            }
            C => {
                (0..rank - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(rank - 2, rank - 1, -2, -1);
            }
            D => {
                (0..rank - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(rank - 3, rank - 1, -1, -1);
            }
            E => {
                link(0, 2, -1, -1);
                link(1, 3, -1, -1);
                (2..rank - 1).for_each(|i| link(i, i + 1, -1, -1));
            }
            F => {
                link(0, 1, -1, -1);
                link(1, 2, -1, -2);
                link(2, 3, -1, -1);
            }
            G => link(0, 1, -3, -1),
        }
        let matrix = (0..rank)
            .map(|i| (0..rank).map(|j| kac[j][i]).collect())
            .collect();
        Ok(CartanDatum {
            lie_type,
            rank,
            matrix,
        })
    }
}

impl FromStr for CartanDatum {
    type Err = Error;

    /// Parses labels such as `A3`, `g2` or `B 3`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let mut chars = t.chars();
        let ty = chars
            .next()
            .and_then(LieType::from_char)
            .ok_or_else(|| Error::InvalidType(s.to_string()))?;
        let rank: usize = chars
            .as_str()
            .trim()
            .parse()
            .map_err(|_| Error::InvalidType(s.to_string()))?;
        CartanDatum::new(ty, rank)
    }
}

/// A finite crystallographic root system with its positive roots.
#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan: CartanDatum,
    simple: Vec<Weight>,
    positive: Vec<Weight>,
    positive_root_coords: Vec<Vec<i32>>,
    positive_index: HashMap<Weight, usize>,
    inverse_cartan: Vec<Vec<Rational64>>,
}

impl RootSystem {
    pub fn new(lie_type: LieType, rank: usize) -> Result<Self> {
        Ok(Self::from_cartan(CartanDatum::new(lie_type, rank)?))
    }

    pub fn from_cartan(cartan: CartanDatum) -> Self {
        let r = cartan.rank;
        let simple: Vec<Weight> = cartan
            .matrix
            .iter()
            .map(|row| Weight::from_slice(row))
            .collect();
        let mut positive = simple.clone();
        let mut coords: Vec<Vec<i32>> = (0..r)
            .map(|i| (0..r).map(|j| i32::from(i == j)).collect())
            .collect();
        let mut index: HashMap<Weight, usize> =
            positive.iter().enumerate().map(|(k, w)| (*w, k)).collect();
        let mut k = 0;
        while k < positive.len() {
            for i in 0..r {
                let beta = positive[k];
                if beta == simple[i] {
                    continue;
                }
                let c = beta.pair_coroot(i);
                let image = beta - simple[i].scale(c);
                if !index.contains_key(&image) {
                    let mut rc = coords[k].clone();
                    rc[i] -= c;
                    index.insert(image, positive.len());
                    positive.push(image);
                    coords.push(rc);
                }
            }
            k += 1;
        }
        // Order positive roots by height, then by root coordinates.
        let mut order: Vec<usize> = (0..positive.len()).collect();
        order.sort_by_key(|&k| (coords[k].iter().sum::<i32>(), coords[k].clone()));
        let positive: Vec<Weight> = order.iter().map(|&k| positive[k]).collect();
        let positive_root_coords: Vec<Vec<i32>> =
            order.iter().map(|&k| coords[k].clone()).collect();
        let positive_index = positive.iter().enumerate().map(|(k, w)| (*w, k)).collect();
        let inverse_cartan = invert(&cartan.matrix);
        RootSystem {
            cartan,
            simple,
            positive,
            positive_root_coords,
            positive_index,
            inverse_cartan,
        }
    }

    pub fn cartan(&self) -> &CartanDatum {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank
    }

    pub fn lie_type(&self) -> LieType {
        self.cartan.lie_type
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.cartan.lie_type, self.cartan.rank)
    }

    pub fn simple_root(&self, i: usize) -> Weight {
        self.simple[i]
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive
    }

    /// Simple-root coordinates of the `k`-th positive root.
    pub fn positive_root_coords(&self, k: usize) -> &[i32] {
        &self.positive_root_coords[k]
    }

    pub fn rho(&self) -> Weight {
        Weight::from_slice(&vec![1; self.rank()])
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        let mut c = [0; MAX_RANK];
        c[i] = 1;
        Weight(c)
    }

    pub fn is_positive_root(&self, w: &Weight) -> bool {
        self.positive_index.contains_key(w)
    }

    pub fn is_root(&self, w: &Weight) -> bool {
        self.is_positive_root(w) || self.is_positive_root(&-*w)
    }

    pub fn positive_root_index(&self, w: &Weight) -> Option<usize> {
        self.positive_index.get(w).copied()
    }

    /// Simple reflection `s_i` applied to `lambda`.
    pub fn reflect(&self, i: usize, lambda: &Weight) -> Weight {
        *lambda - self.simple[i].scale(lambda.pair_coroot(i))
    }

    /// Weight with the given simple-root coordinates.
    pub fn from_root_coords(&self, c: &[i32]) -> Weight {
        let mut w = Weight::ZERO;
        for (i, &k) in c.iter().enumerate() {
            w = w + self.simple[i].scale(k);
        }
        w
    }

    /// Simple-root coordinates of a weight; rational in general.
    pub fn root_coords(&self, w: &Weight) -> Vec<Rational64> {
        let r = self.rank();
        (0..r)
            .map(|k| {
                (0..r)
                    .map(|j| {
                        Rational64::from_integer(i64::from(w.0[j])) * self.inverse_cartan[j][k]
                    })
                    .sum()
            })
            .collect()
    }

    /// Simple-root coordinates when the weight lies in the root lattice.
    pub fn root_coords_integral(&self, w: &Weight) -> Option<Vec<i32>> {
        self.root_coords(w)
            .into_iter()
            .map(|q| q.is_integer().then(|| *q.numer() as i32))
            .collect()
    }
}

fn invert(m: &[Vec<i32>]) -> Vec<Vec<Rational64>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational64>> = m
        .iter()
        .map(|row| {
            row.iter()
                .map(|&x| Rational64::from_integer(x.into()))
                .collect()
        })
        .collect();
    let mut inv: Vec<Vec<Rational64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Rational64::from_integer(i64::from(i == j)))
                .collect()
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| a[r][col] != Rational64::from_integer(0))
            .expect("Cartan matrix is invertible");
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col {
                let f = a[r][col];
                if f != Rational64::from_integer(0) {
                    for j in 0..n {
                        let (x, y) = (a[col][j], inv[col][j]);
                        a[r][j] -= f * x;
                        inv[r][j] -= f * y;
                    }
                }
            }
        }
    }
    inv
}

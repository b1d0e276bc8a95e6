//! Brute-force oracles and generators shared by the integration tests.
//! Nothing here calls the library's validators or set operations; the
//! oracles work straight from the tables.
#![allow(dead_code)]

use std::path::PathBuf;

use pogamma::enumerate::{enumerate_orders, enumerate_tables, EnumSpec};
use pogamma::model::GammaTables;
use pogamma::{ElementSet, PoGammaSemigroup};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed_0dd5;

pub fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn fixture(name: &str) -> PathBuf {
    fixture_dir().join(format!("{name}.json"))
}

/// Plain arrays: `op[γ][a][b]`, `leq[a][b]`.
pub struct Raw {
    pub n: usize,
    pub m: usize,
    pub op: Vec<Vec<Vec<usize>>>,
    pub leq: Vec<Vec<bool>>,
}

impl Raw {
    pub fn of(s: &PoGammaSemigroup) -> Self {
        let (n, m) = (s.n(), s.m());
        Raw {
            n,
            m,
            op: (0..m)
                .map(|g| (0..n).map(|a| (0..n).map(|b| s.mul(a, g, b)).collect()).collect())
                .collect(),
            leq: (0..n).map(|a| (0..n).map(|b| s.leq(a, b)).collect()).collect(),
        }
    }

    pub fn associative(&self) -> bool {
        quintuples(self.n, self.m).all(|(a, b, c, g, u)| {
            self.op[u][self.op[g][a][b]][c] == self.op[g][a][self.op[u][b][c]]
        })
    }

    pub fn partial_order(&self) -> bool {
        let n = self.n;
        (0..n).all(|a| self.leq[a][a])
            && (0..n).all(|a| (0..n).all(|b| a == b || !(self.leq[a][b] && self.leq[b][a])))
            && (0..n).all(|a| {
                (0..n).all(|b| (0..n).all(|c| !(self.leq[a][b] && self.leq[b][c]) || self.leq[a][c]))
            })
    }

    pub fn compatible(&self) -> bool {
        let n = self.n;
        (0..n).all(|a| {
            (0..n).all(|b| {
                !self.leq[a][b]
                    || (0..n).all(|c| {
                        (0..self.m).all(|g| self.leq[self.op[g][a][c]][self.op[g][b][c]] && self.leq[self.op[g][c][a]][self.op[g][c][b]])
                    })
            })
        })
    }

    pub fn down(&self, a: &[bool]) -> Vec<bool> {
        (0..self.n).map(|x| (0..self.n).any(|y| a[y] && self.leq[x][y])).collect()
    }

    pub fn product(&self, a: &[bool], b: &[bool]) -> Vec<bool> {
        let mut out = vec![false; self.n];
        for x in 0..self.n {
            for y in 0..self.n {
                if a[x] && b[y] {
                    for g in 0..self.m {
                        out[self.op[g][x][y]] = true;
                    }
                }
            }
        }
        out
    }

    pub fn is_bi_ideal(&self, b: &[bool]) -> bool {
        let all = vec![true; self.n];
        b.iter().any(|&x| x)
            && subset(&self.product(&self.product(b, &all), b), b)
            && subset(&self.down(b), b)
    }

    /// Least bi-ideal containing `a`, as the intersection of all of them.
    pub fn least_bi_ideal(&self, a: &[bool]) -> Vec<bool> {
        let mut out = vec![true; self.n];
        for bits in 1u64..(1 << self.n) {
            let b = to_vec(self.n, bits);
            if subset(a, &b) && self.is_bi_ideal(&b) {
                out = out.iter().zip(&b).map(|(x, y)| *x && *y).collect();
            }
        }
        out
    }

    pub fn regular(&self, a: usize) -> bool {
        self.any_xgu(|x, g, u| self.leq[a][self.op[u][self.op[g][a][x]][a]])
    }

    pub fn left_regular(&self, a: usize) -> bool {
        self.any_xgu(|x, g, u| self.leq[a][self.op[u][self.op[g][x][a]][a]])
    }

    pub fn right_regular(&self, a: usize) -> bool {
        self.any_xgu(|x, g, u| self.leq[a][self.op[u][self.op[g][a][a]][x]])
    }

    pub fn completely_regular(&self, a: usize) -> bool {
        let m = self.m;
        (0..self.n).any(|x| {
            (0..m.pow(4)).any(|code| {
                let (g, u, r, k) = (code % m, (code / m) % m, (code / m / m) % m, code / m / m / m);
                let left = self.op[u][self.op[g][a][a]][x];
                self.leq[a][self.op[r][left][self.op[k][a][a]]]
            })
        })
    }

    fn any_xgu(&self, f: impl Fn(usize, usize, usize) -> bool) -> bool {
        (0..self.n).any(|x| (0..self.m).any(|g| (0..self.m).any(|u| f(x, g, u))))
    }
}

fn quintuples(n: usize, m: usize) -> impl Iterator<Item = (usize, usize, usize, usize, usize)> {
    (0..n * n * n * m * m).map(move |i| (i % n, (i / n) % n, (i / n / n) % n, (i / n / n / n) % m, i / n / n / n / m))
}

pub fn subset(a: &[bool], b: &[bool]) -> bool {
    a.iter().zip(b).all(|(x, y)| !*x || *y)
}

pub fn to_vec(n: usize, bits: u64) -> Vec<bool> {
    (0..n).map(|i| bits >> i & 1 == 1).collect()
}

pub fn to_set(v: &[bool]) -> ElementSet {
    ElementSet::from_elements(v.len(), (0..v.len()).filter(|&i| v[i]))
}

pub fn to_bools(s: &ElementSet) -> Vec<bool> {
    (0..s.universe()).map(|i| s.contains(i)).collect()
}

/// Counts Γ-associative table families by visiting all `n^(m·n²)` tables.
pub fn naive_table_count(n: usize, m: usize) -> u64 {
    naive_tables(n, m).count() as u64
}

pub fn naive_tables(n: usize, m: usize) -> impl Iterator<Item = Raw> {
    let cells = m * n * n;
    (0..(n as u64).pow(cells as u32))
        .map(move |mut code| {
            let mut flat = Vec::with_capacity(cells);
            for _ in 0..cells {
                flat.push((code % n as u64) as usize);
                code /= n as u64;
            }
            let op = (0..m)
                .map(|g| (0..n).map(|a| flat[g * n * n + a * n..g * n * n + a * n + n].to_vec()).collect())
                .collect();
            Raw {
                n,
                m,
                op,
                leq: vec![vec![false; n]; n],
            }
        })
        .filter(Raw::associative)
}

/// Counts labeled po-Γ-semigroups by pairing every associative table
/// family with every relation on `n` points.
pub fn naive_po_count(n: usize, m: usize) -> u64 {
    let mut count = 0;
    for mut raw in naive_tables(n, m) {
        for rel in 0u64..(1 << (n * n)) {
            raw.leq = (0..n).map(|a| (0..n).map(|b| rel >> (a * n + b) & 1 == 1).collect()).collect();
            if raw.partial_order() && raw.compatible() {
                count += 1;
            }
        }
    }
    count
}

/// Associative tables for each size, enumerated once.
pub struct StructurePool {
    families: Vec<Vec<GammaTables>>,
}

pub const POOL_SIZES: [(usize, usize); 5] = [(2, 1), (2, 2), (3, 1), (3, 2), (4, 1)];

impl StructurePool {
    pub fn new(sizes: &[(usize, usize)]) -> Self {
        StructurePool {
            families: sizes
                .iter()
                .map(|&(n, m)| enumerate_tables(&EnumSpec::new(n, m)).collect())
                .collect(),
        }
    }

    /// A uniformly chosen table family of a uniformly chosen size, then a
    /// uniformly chosen compatible order on it.
    pub fn sample(&self, rng: &mut impl Rng) -> PoGammaSemigroup {
        let family = self.families.choose(rng).expect("nonempty pool");
        self.sample_from(family, rng)
    }

    pub fn sample_size(&self, index: usize, rng: &mut impl Rng) -> PoGammaSemigroup {
        self.sample_from(&self.families[index], rng)
    }

    fn sample_from(&self, family: &[GammaTables], rng: &mut impl Rng) -> PoGammaSemigroup {
        let tables = family.choose(rng).expect("nonempty family").clone();
        let orders: Vec<_> = enumerate_orders(&tables).collect();
        let order = orders.choose(rng).expect("the discrete order is always compatible").clone();
        PoGammaSemigroup::new(tables, order).expect("enumerated structures are valid")
    }
}

pub fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED)
}

pub fn random_subset(n: usize, rng: &mut impl Rng) -> ElementSet {
    ElementSet::from_bits(n, rng.gen_range(0..1u64 << n))
}

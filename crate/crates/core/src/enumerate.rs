//! Exhaustive generation of finite Γ-semigroups and po-Γ-semigroups.
//!
//! Table families are produced by a depth-first fill of the `m·n²` cells in
//! `[γ][a][b]` order. After each assignment every associativity instance
//! whose four lookups are all determined, and which involves the new cell,
//! is checked; a failing instance prunes the subtree.

use itertools::Itertools;
use thiserror::Error;

use crate::model::{validate_compatibility, GammaTables, OrderRelation, PoGammaSemigroup};

/// Largest number of table cells (`m·n²`) the enumerator accepts.
pub const MAX_CELLS: usize = 32;
/// Largest carrier the enumerator accepts.
pub const MAX_N: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("n and m must be at least 1 (got n={n}, m={m})")]
    Empty { n: usize, m: usize },
    #[error("n={n}, m={m} is beyond exhaustive range: need n <= {MAX_N} and m*n*n <= {MAX_CELLS}")]
    TooLarge { n: usize, m: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumSpec {
    pub n: usize,
    pub m: usize,
    /// Enumerate every compatible order; otherwise only the discrete order.
    pub require_order: bool,
    /// Keep one representative per isomorphism class.
    pub canonical: bool,
}

impl EnumSpec {
    pub fn new(n: usize, m: usize) -> Self {
        Self {
            n,
            m,
            require_order: true,
            canonical: false,
        }
    }

    pub fn canonical(mut self, canonical: bool) -> Self {
        self.canonical = canonical;
        self
    }

    pub fn require_order(mut self, require_order: bool) -> Self {
        self.require_order = require_order;
        self
    }

    pub fn check(&self) -> Result<(), EnumError> {
        let (n, m) = (self.n, self.m);
        if n == 0 || m == 0 {
            return Err(EnumError::Empty { n, m });
        }
        if n > MAX_N || m.saturating_mul(n * n) > MAX_CELLS {
            return Err(EnumError::TooLarge { n, m });
        }
        Ok(())
    }

    pub fn cells(&self) -> usize {
        self.m * self.n * self.n
    }
}

/// Depth-first table filler yielding cell vectors of length `len`, with
/// the first `floor` cells held fixed.
#[derive(Debug, Clone)]
pub struct TableDfs {
    n: usize,
    m: usize,
    len: usize,
    floor: usize,
    vals: Vec<usize>,
    depth: usize,
    cand: usize,
    done: bool,
}

impl TableDfs {
    fn new(n: usize, m: usize, len: usize, prefix: &[usize]) -> Self {
        assert!(prefix.len() <= len && len <= m * n * n);
        let mut vals = vec![0; len];
        vals[..prefix.len()].copy_from_slice(prefix);
        Self {
            n,
            m,
            len,
            floor: prefix.len(),
            vals,
            depth: prefix.len(),
            cand: 0,
            done: false,
        }
    }

    #[inline]
    fn cell(&self, g: usize, a: usize, b: usize) -> usize {
        (g * self.n + a) * self.n + b
    }

    /// Every associativity instance that is fully determined by cells
    /// `0..=d` and touches cell `d` holds.
    fn consistent(&self, d: usize) -> bool {
        let (n, m) = (self.n, self.m);
        let v = &self.vals;
        for g in 0..m {
            for a in 0..n {
                for b in 0..n {
                    let i1 = self.cell(g, a, b);
                    if i1 > d {
                        continue;
                    }
                    let ab = v[i1];
                    for u in 0..m {
                        for c in 0..n {
                            let i2 = self.cell(u, ab, c);
                            let i3 = self.cell(u, b, c);
                            if i2 > d || i3 > d {
                                continue;
                            }
                            let i4 = self.cell(g, a, v[i3]);
                            if i4 > d {
                                continue;
                            }
                            if (i1 == d || i2 == d || i3 == d || i4 == d) && v[i2] != v[i4] {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }
}

impl Iterator for TableDfs {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if self.floor == self.len {
            self.done = true;
            return Some(self.vals.clone());
        }
        loop {
            if self.cand >= self.n {
                if self.depth == self.floor {
                    self.done = true;
                    return None;
                }
                self.depth -= 1;
                self.cand = self.vals[self.depth] + 1;
                continue;
            }
            self.vals[self.depth] = self.cand;
            if !self.consistent(self.depth) {
                self.cand += 1;
                continue;
            }
            if self.depth + 1 == self.len {
                self.cand += 1;
                return Some(self.vals.clone());
            }
            self.depth += 1;
            self.cand = 0;
        }
    }
}

/// Every Γ-associative table family over `(n, m)`, in lexicographic order
/// of the flat `[γ][a][b]` layout.
pub fn enumerate_tables(spec: &EnumSpec) -> impl Iterator<Item = GammaTables> {
    let (n, m) = (spec.n, spec.m);
    TableDfs::new(n, m, n * n * m, &[]).map(move |v| GammaTables::from_flat(n, m, v).expect("shape is fixed"))
}

/// Consistent partial assignments of the first `k` cells. Their subtrees
/// partition the full enumeration.
pub fn table_prefixes(spec: &EnumSpec, k: usize) -> Vec<Vec<usize>> {
    TableDfs::new(spec.n, spec.m, k.min(spec.cells()), &[]).collect()
}

/// Table families extending `prefix`, which must itself be consistent (as
/// produced by [`table_prefixes`]).
pub fn enumerate_subtree(spec: &EnumSpec, prefix: &[usize]) -> impl Iterator<Item = GammaTables> {
    let (n, m) = (spec.n, spec.m);
    TableDfs::new(n, m, spec.cells(), prefix).map(move |v| GammaTables::from_flat(n, m, v).expect("shape is fixed"))
}

/// Every partial order on `0..n`.
///
/// Points are added one at a time; point `k` picks a down-closed set `D`
/// and an up-closed set `U` of earlier points with `D ∩ U = ∅` and
/// `d ≤ u` for all `d ∈ D, u ∈ U`. Each labeled order arises exactly once.
pub fn all_partial_orders(n: usize) -> Vec<OrderRelation> {
    // below[b] = bitmask of points ≤ b, over the points placed so far
    let mut out = Vec::new();
    let mut below = vec![0u64; n];
    extend_order(n, 0, &mut below, &mut out);
    out
}

fn extend_order(n: usize, k: usize, below: &mut Vec<u64>, out: &mut Vec<OrderRelation>) {
    if k == n {
        let leq = (0..n * n).map(|i| below[i % n] >> (i / n) & 1 == 1).collect();
        out.push(OrderRelation::from_flat(n, leq).expect("size checked by caller"));
        return;
    }
    let above = |x: usize, below: &[u64]| (0..k).filter(|&y| below[y] >> x & 1 == 1).fold(0u64, |acc, y| acc | 1 << y);
    for down in 0..1u64 << k {
        // down-closed: every point below a member is a member
        if (0..k).any(|d| down >> d & 1 == 1 && below[d] & !down != 0) {
            continue;
        }
        for up in 0..1u64 << k {
            if up & down != 0 {
                continue;
            }
            if (0..k).any(|u| up >> u & 1 == 1 && above(u, below) & !up != 0) {
                continue;
            }
            // every d ∈ D lies below every u ∈ U
            if (0..k).any(|u| up >> u & 1 == 1 && down & !below[u] != 0) {
                continue;
            }
            let saved = below.clone();
            below[k] = down | 1 << k;
            for u in 0..k {
                if up >> u & 1 == 1 {
                    below[u] |= below[k];
                }
            }
            extend_order(n, k + 1, below, out);
            *below = saved;
        }
    }
}

/// Partial orders on `0..n` compatible with `tables`. Always includes the
/// discrete order.
pub fn enumerate_orders(tables: &GammaTables) -> impl Iterator<Item = OrderRelation> + '_ {
    all_partial_orders(tables.n())
        .into_iter()
        .filter(move |o| validate_compatibility(tables, o).ok)
}

/// Byte string identifying an isomorphism class: the lexicographically
/// least encoding over all relabelings of `M` and `Γ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

/// Encoding of `s` relabeled by `pi` on elements and `sigma` on letters:
/// `[n, m, op'[γ][a][b]…, leq'[a][b]…]`.
fn encode(s: &PoGammaSemigroup, pi: &[usize], sigma: &[usize]) -> Vec<u8> {
    let (n, m) = (s.n(), s.m());
    let mut pi_inv = vec![0; n];
    for (a, &p) in pi.iter().enumerate() {
        pi_inv[p] = a;
    }
    let mut sigma_inv = vec![0; m];
    for (g, &p) in sigma.iter().enumerate() {
        sigma_inv[p] = g;
    }
    let mut out = Vec::with_capacity(2 + m * n * n + n * n);
    out.push(n as u8);
    out.push(m as u8);
    for g2 in 0..m {
        for a2 in 0..n {
            for b2 in 0..n {
                out.push(pi[s.mul(pi_inv[a2], sigma_inv[g2], pi_inv[b2])] as u8);
            }
        }
    }
    for a2 in 0..n {
        for b2 in 0..n {
            out.push(s.leq(pi_inv[a2], pi_inv[b2]) as u8);
        }
    }
    out
}

pub fn canonical_key(s: &PoGammaSemigroup) -> CanonicalKey {
    let (n, m) = (s.n(), s.m());
    let sigmas: Vec<Vec<usize>> = (0..m).permutations(m).collect();
    let key = (0..n)
        .permutations(n)
        .flat_map(|pi| sigmas.iter().map(move |sigma| (pi.clone(), sigma)))
        .map(|(pi, sigma)| encode(s, &pi, sigma))
        .min()
        .expect("at least the identity relabeling");
    CanonicalKey(key)
}

/// The structure a key encodes, which is the canonical representative of
/// its class.
pub fn from_key(key: &CanonicalKey) -> PoGammaSemigroup {
    let bytes = key.as_bytes();
    let (n, m) = (bytes[0] as usize, bytes[1] as usize);
    let cells = m * n * n;
    let op = bytes[2..2 + cells].iter().map(|&b| b as usize).collect();
    let leq = bytes[2 + cells..].iter().map(|&b| b == 1).collect();
    PoGammaSemigroup::new_trusted(
        GammaTables::from_flat(n, m, op).expect("key encodes a valid shape"),
        OrderRelation::from_flat(n, leq).expect("key encodes a valid shape"),
    )
}

/// Relabels `s` by `pi` on elements and `sigma` on letters.
pub fn relabel(s: &PoGammaSemigroup, pi: &[usize], sigma: &[usize]) -> PoGammaSemigroup {
    from_key(&CanonicalKey(encode(s, pi, sigma)))
}

//! Finite po-Γ-semigroups: multiplication tables indexed by Γ, a partial
//! order on the carrier, and validators for the three axiom layers.
//!
//! Elements of `M` and letters of `Γ` are dense indices `0..n` and `0..m`.
//! The product `a γ b` is `op[γ][a][b]`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported carrier size. Element sets are `u64` bitmasks.
pub const MAX_ELEMENTS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("carrier size must be in 1..={MAX_ELEMENTS}, got {0}")]
    CarrierSize(usize),
    #[error("Γ must be nonempty")]
    EmptyGamma,
    #[error("table shape mismatch: {0}")]
    Shape(String),
    #[error("order has size {order} but tables have size {tables}")]
    SizeMismatch { tables: usize, order: usize },
    #[error("structure fails {}: {}", .0.failures[0].axiom, .0.failures[0])]
    Invalid(ValidationReport),
}

/// The family of multiplication tables `op[γ][a][b] = aγb`.
///
/// Entries are not range-checked on construction; [`validate_gamma_tables`]
/// reports out-of-range entries alongside associativity failures.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GammaTables {
    n: usize,
    m: usize,
    op: Vec<usize>,
}

impl GammaTables {
    /// Builds tables from a flat vector laid out as `[γ][a][b]`.
    pub fn from_flat(n: usize, m: usize, op: Vec<usize>) -> Result<Self, StructureError> {
        if n == 0 || n > MAX_ELEMENTS {
            return Err(StructureError::CarrierSize(n));
        }
        if m == 0 {
            return Err(StructureError::EmptyGamma);
        }
        if op.len() != m * n * n {
            return Err(StructureError::Shape(format!(
                "expected {} entries for n={n}, m={m}, got {}",
                m * n * n,
                op.len()
            )));
        }
        Ok(Self { n, m, op })
    }

    pub fn from_nested(n: usize, m: usize, op: &[Vec<Vec<usize>>]) -> Result<Self, StructureError> {
        if op.len() != m {
            return Err(StructureError::Shape(format!(
                "expected {m} tables, got {}",
                op.len()
            )));
        }
        let mut flat = Vec::with_capacity(m * n * n);
        for (g, table) in op.iter().enumerate() {
            if table.len() != n {
                return Err(StructureError::Shape(format!(
                    "table {g} has {} rows, expected {n}",
                    table.len()
                )));
            }
            for (a, row) in table.iter().enumerate() {
                if row.len() != n {
                    return Err(StructureError::Shape(format!(
                        "table {g} row {a} has {} entries, expected {n}",
                        row.len()
                    )));
                }
                flat.extend_from_slice(row);
            }
        }
        Self::from_flat(n, m, flat)
    }

    /// A single table (`|Γ| = 1`) from its rows.
    pub fn single(rows: &[Vec<usize>]) -> Result<Self, StructureError> {
        Self::from_nested(rows.len(), 1, &[rows.to_vec()])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `a γ b`.
    #[inline]
    pub fn mul(&self, a: usize, gamma: usize, b: usize) -> usize {
        self.op[(gamma * self.n + a) * self.n + b]
    }

    pub fn as_flat(&self) -> &[usize] {
        &self.op
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<usize>>> {
        self.op
            .chunks(self.n * self.n)
            .map(|t| t.chunks(self.n).map(<[usize]>::to_vec).collect())
            .collect()
    }
}

/// A binary relation `leq[a][b]` meaning `a ≤ b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderRelation {
    n: usize,
    leq: Vec<bool>,
}

impl OrderRelation {
    pub fn from_flat(n: usize, leq: Vec<bool>) -> Result<Self, StructureError> {
        if n == 0 || n > MAX_ELEMENTS {
            return Err(StructureError::CarrierSize(n));
        }
        if leq.len() != n * n {
            return Err(StructureError::Shape(format!(
                "order needs {} entries, got {}",
                n * n,
                leq.len()
            )));
        }
        Ok(Self { n, leq })
    }

    pub fn from_rows(rows: &[Vec<bool>]) -> Result<Self, StructureError> {
        let n = rows.len();
        let mut flat = Vec::with_capacity(n * n);
        for (a, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(StructureError::Shape(format!(
                    "order row {a} has {} entries, expected {n}",
                    row.len()
                )));
            }
            flat.extend_from_slice(row);
        }
        Self::from_flat(n, flat)
    }

    /// The discrete order: `a ≤ b` iff `a = b`.
    pub fn equality(n: usize) -> Self {
        let leq = (0..n * n).map(|i| i / n == i % n).collect();
        Self { n, leq }
    }

    /// The chain `0 ≤ 1 ≤ … ≤ n-1`.
    pub fn chain(n: usize) -> Self {
        let leq = (0..n * n).map(|i| i / n <= i % n).collect();
        Self { n, leq }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }

    pub fn to_rows(&self) -> Vec<Vec<bool>> {
        self.leq.chunks(self.n).map(<[bool]>::to_vec).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    /// Witness `(γ, a, b)`: entry `op[γ][a][b]` is out of range.
    Range,
    /// Witness `(a, b, c, γ, μ)`: `(aγb)μc ≠ aγ(bμc)`.
    Associativity,
    /// Witness `(a)`.
    Reflexivity,
    /// Witness `(a, b)`.
    Antisymmetry,
    /// Witness `(a, b, c)`: `a ≤ b ≤ c` but not `a ≤ c`.
    Transitivity,
    /// Witness `(a, b, c, γ)`: `a ≤ b` but not `aγc ≤ bγc`.
    LeftCompatibility,
    /// Witness `(a, b, c, γ)`: `a ≤ b` but not `cγa ≤ cγb`.
    RightCompatibility,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Axiom::Range => "range",
            Axiom::Associativity => "associativity",
            Axiom::Reflexivity => "reflexivity",
            Axiom::Antisymmetry => "antisymmetry",
            Axiom::Transitivity => "transitivity",
            Axiom::LeftCompatibility => "left compatibility",
            Axiom::RightCompatibility => "right compatibility",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomFailure {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

impl fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = &self.witness;
        match self.axiom {
            Axiom::Range => write!(f, "tables[{}][{}][{}] is out of range", w[0], w[1], w[2]),
            Axiom::Associativity => write!(
                f,
                "(aγb)μc != aγ(bμc) at (a,b,c,γ,μ)=({},{},{},{},{})",
                w[0], w[1], w[2], w[3], w[4]
            ),
            Axiom::Reflexivity => write!(f, "{} ≤ {} does not hold", w[0], w[0]),
            Axiom::Antisymmetry => write!(f, "{a} ≤ {b} and {b} ≤ {a} with {a} != {b}", a = w[0], b = w[1]),
            Axiom::Transitivity => {
                write!(f, "{} ≤ {} ≤ {} but not {} ≤ {}", w[0], w[1], w[2], w[0], w[2])
            }
            Axiom::LeftCompatibility => write!(
                f,
                "a ≤ b but not aγc ≤ bγc at (a,b,c,γ)=({},{},{},{})",
                w[0], w[1], w[2], w[3]
            ),
            Axiom::RightCompatibility => write!(
                f,
                "a ≤ b but not cγa ≤ cγb at (a,b,c,γ)=({},{},{},{})",
                w[0], w[1], w[2], w[3]
            ),
        }
    }
}

/// Outcome of a validator. Lists every failure found, not just the first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub failures: Vec<AxiomFailure>,
}

impl ValidationReport {
    fn from_failures(failures: Vec<AxiomFailure>) -> Self {
        Self {
            ok: failures.is_empty(),
            failures,
        }
    }

    pub fn merge(mut self, other: ValidationReport) -> Self {
        self.failures.extend(other.failures);
        self.ok = self.failures.is_empty();
        self
    }
}

/// Checks that every entry is in range and that the mixed associativity law
/// `(aγb)μc = aγ(bμc)` holds for all `a, b, c` and all `γ, μ`.
///
/// Triples whose inner product is out of range are skipped; the range
/// failure is reported instead.
pub fn validate_gamma_tables(t: &GammaTables) -> ValidationReport {
    let (n, m) = (t.n, t.m);
    let mut failures = Vec::new();
    for g in 0..m {
        for a in 0..n {
            for b in 0..n {
                if t.mul(a, g, b) >= n {
                    failures.push(AxiomFailure {
                        axiom: Axiom::Range,
                        witness: vec![g, a, b],
                    });
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for g in 0..m {
                    for u in 0..m {
                        let ab = t.mul(a, g, b);
                        let bc = t.mul(b, u, c);
                        if ab >= n || bc >= n {
                            continue;
                        }
                        if t.mul(ab, u, c) != t.mul(a, g, bc) {
                            failures.push(AxiomFailure {
                                axiom: Axiom::Associativity,
                                witness: vec![a, b, c, g, u],
                            });
                        }
                    }
                }
            }
        }
    }
    ValidationReport::from_failures(failures)
}

pub fn validate_order(o: &OrderRelation) -> ValidationReport {
    let n = o.n;
    let mut failures = Vec::new();
    for a in 0..n {
        if !o.leq(a, a) {
            failures.push(AxiomFailure {
                axiom: Axiom::Reflexivity,
                witness: vec![a],
            });
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            if o.leq(a, b) && o.leq(b, a) {
                failures.push(AxiomFailure {
                    axiom: Axiom::Antisymmetry,
                    witness: vec![a, b],
                });
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if !o.leq(a, b) {
                continue;
            }
            for c in 0..n {
                if o.leq(b, c) && !o.leq(a, c) {
                    failures.push(AxiomFailure {
                        axiom: Axiom::Transitivity,
                        witness: vec![a, b, c],
                    });
                }
            }
        }
    }
    ValidationReport::from_failures(failures)
}

/// Two-sided monotonicity: `a ≤ b` implies `aγc ≤ bγc` and `cγa ≤ cγb`.
///
/// Expects in-range tables; products out of range are skipped.
pub fn validate_compatibility(tables: &GammaTables, order: &OrderRelation) -> ValidationReport {
    let n = tables.n;
    let mut failures = Vec::new();
    let in_range = |x: usize, y: usize| x < n && y < n;
    for a in 0..n {
        for b in 0..n {
            if a == b || !order.leq(a, b) {
                continue;
            }
            for c in 0..n {
                for g in 0..tables.m {
                    let (ac, bc) = (tables.mul(a, g, c), tables.mul(b, g, c));
                    if in_range(ac, bc) && !order.leq(ac, bc) {
                        failures.push(AxiomFailure {
                            axiom: Axiom::LeftCompatibility,
                            witness: vec![a, b, c, g],
                        });
                    }
                    let (ca, cb) = (tables.mul(c, g, a), tables.mul(c, g, b));
                    if in_range(ca, cb) && !order.leq(ca, cb) {
                        failures.push(AxiomFailure {
                            axiom: Axiom::RightCompatibility,
                            witness: vec![a, b, c, g],
                        });
                    }
                }
            }
        }
    }
    ValidationReport::from_failures(failures)
}

/// A validated po-Γ-semigroup.
///
/// Besides the tables and the order it caches the bitmasks the set calculus
/// works on: for each pair `(x, y)` the set `{xγy : γ ∈ Γ}`, and for each
/// element the principal down-set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoGammaSemigroup {
    tables: GammaTables,
    order: OrderRelation,
    pair_products: Vec<u64>,
    down: Vec<u64>,
}

impl PoGammaSemigroup {
    /// Runs all three validators and fails with the full report if any
    /// axiom is violated.
    pub fn new(tables: GammaTables, order: OrderRelation) -> Result<Self, StructureError> {
        Self::check_sizes(&tables, &order)?;
        let report = validate_gamma_tables(&tables).merge(validate_order(&order));
        if !report.ok {
            return Err(StructureError::Invalid(report));
        }
        let compat = validate_compatibility(&tables, &order);
        if !compat.ok {
            return Err(StructureError::Invalid(compat));
        }
        Ok(Self::build(tables, order))
    }

    /// Skips the compatibility check but still requires an associative
    /// table family and a partial order. Theorem checks on such structures
    /// are meaningful only as diagnostics.
    pub fn new_without_compatibility(
        tables: GammaTables,
        order: OrderRelation,
    ) -> Result<Self, StructureError> {
        Self::check_sizes(&tables, &order)?;
        let report = validate_gamma_tables(&tables).merge(validate_order(&order));
        if !report.ok {
            return Err(StructureError::Invalid(report));
        }
        Ok(Self::build(tables, order))
    }

    /// For callers (the enumerator) that have already checked associativity
    /// and the order axioms. Compatibility is the caller's concern.
    pub(crate) fn new_trusted(tables: GammaTables, order: OrderRelation) -> Self {
        debug_assert!(validate_gamma_tables(&tables).ok);
        debug_assert!(validate_order(&order).ok);
        Self::build(tables, order)
    }

    fn check_sizes(tables: &GammaTables, order: &OrderRelation) -> Result<(), StructureError> {
        if tables.n != order.n {
            return Err(StructureError::SizeMismatch {
                tables: tables.n,
                order: order.n,
            });
        }
        Ok(())
    }

    fn build(tables: GammaTables, order: OrderRelation) -> Self {
        let n = tables.n;
        let mut pair_products = vec![0u64; n * n];
        for x in 0..n {
            for y in 0..n {
                for g in 0..tables.m {
                    pair_products[x * n + y] |= 1 << tables.mul(x, g, y);
                }
            }
        }
        let down = (0..n)
            .map(|u| (0..n).filter(|&t| order.leq(t, u)).fold(0u64, |acc, t| acc | 1 << t))
            .collect();
        Self {
            tables,
            order,
            pair_products,
            down,
        }
    }

    pub fn n(&self) -> usize {
        self.tables.n
    }

    pub fn m(&self) -> usize {
        self.tables.m
    }

    pub fn tables(&self) -> &GammaTables {
        &self.tables
    }

    pub fn order(&self) -> &OrderRelation {
        &self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, gamma: usize, b: usize) -> usize {
        self.tables.mul(a, gamma, b)
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.order.leq(a, b)
    }

    /// Bitmask of `{xγy : γ ∈ Γ}`.
    #[inline]
    pub(crate) fn pair_products(&self, x: usize, y: usize) -> u64 {
        self.pair_products[x * self.n() + y]
    }

    /// Bitmask of `{t : t ≤ u}`.
    #[inline]
    pub(crate) fn down(&self, u: usize) -> u64 {
        self.down[u]
    }

    /// Left-to-right evaluation of `first γ₁ e₁ γ₂ e₂ …` given as
    /// `(γᵢ, eᵢ)` pairs. Associativity makes the bracketing irrelevant.
    pub fn word(&self, first: usize, rest: &[(usize, usize)]) -> usize {
        rest.iter().fold(first, |acc, &(g, e)| self.mul(acc, g, e))
    }
}

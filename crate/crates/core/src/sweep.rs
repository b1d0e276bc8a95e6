//! Runs the theorem checkers over every enumerated structure.
//!
//! Work is split into one unit per table prefix. Units are processed in
//! parallel and their results merged in unit order, so the report is the
//! same for any worker count.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::calculus::{all_bi_ideals, downward_closure, first_irregular, set_product, RegularityKind};
use crate::enumerate::{
    all_partial_orders, canonical_key, enumerate_orders, enumerate_subtree, from_key, table_prefixes, CanonicalKey,
    EnumError, EnumSpec,
};
use crate::io::{StructureDoc, FORMAT_VERSION};
use crate::model::{OrderRelation, PoGammaSemigroup};
use crate::theorems::{run_selected, CheckReport, TheoremId};

/// Examples of the converse gap kept in a report.
const GAP_EXAMPLES: usize = 8;

#[derive(Debug, Clone)]
pub struct SweepOptions {
    pub spec: EnumSpec,
    pub theorems: Vec<TheoremId>,
    pub workers: usize,
    /// Also visit orders that are not compatible with the tables. The
    /// resulting structures are not po-Γ-semigroups; violations are
    /// expected and this exists to exercise violation reporting.
    pub include_incompatible: bool,
}

impl SweepOptions {
    pub fn new(spec: EnumSpec) -> Self {
        Self {
            spec,
            theorems: TheoremId::ALL.to_vec(),
            workers: 1,
            include_incompatible: false,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCounts {
    pub regular: u64,
    pub left_regular: u64,
    pub right_regular: u64,
    pub completely_regular: u64,
    pub strongly_regular: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremTally {
    pub theorem: TheoremId,
    pub passes: u64,
    pub violations: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepViolation {
    pub structure: StructureDoc,
    pub report: CheckReport,
}

/// Structures where every bi-ideal satisfies `B = (BΓB]` but which are not
/// completely regular.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapQuery {
    pub count: u64,
    pub examples: Vec<StructureDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub format_version: u32,
    pub n: usize,
    pub m: usize,
    pub require_order: bool,
    pub canonical: bool,
    pub include_incompatible: bool,
    pub theorems: Vec<TheoremId>,
    /// Γ-associative table families visited (labeled).
    pub table_families: u64,
    /// (tables, order) pairs visited (labeled).
    pub labeled_structures: u64,
    /// Structures checked: isomorphism classes when canonical.
    pub structures: u64,
    pub classes: ClassCounts,
    pub per_theorem: Vec<TheoremTally>,
    pub violations: Vec<SweepViolation>,
    pub prop6_converse_gap: GapQuery,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Results for a slice of structures; merging is associative.
#[derive(Debug, Clone, Default)]
struct Tally {
    structures: u64,
    classes: ClassCounts,
    passes: Vec<u64>,
    violations: Vec<SweepViolation>,
    gap: GapQuery,
}

impl Tally {
    fn new(theorems: usize) -> Self {
        Self {
            passes: vec![0; theorems],
            ..Self::default()
        }
    }

    fn absorb(&mut self, s: &PoGammaSemigroup, theorems: &[TheoremId]) {
        self.structures += 1;
        let class = |k| first_irregular(s, k).is_none() as u64;
        let cr = class(RegularityKind::CompletelyRegular);
        self.classes.regular += class(RegularityKind::Regular);
        self.classes.left_regular += class(RegularityKind::LeftRegular);
        self.classes.right_regular += class(RegularityKind::RightRegular);
        self.classes.completely_regular += cr;
        self.classes.strongly_regular += class(RegularityKind::StronglyRegular);
        if cr == 0 && all_bi_ideals_idempotent(s) {
            self.gap.count += 1;
            if self.gap.examples.len() < GAP_EXAMPLES {
                self.gap.examples.push(StructureDoc::from_structure(s, None));
            }
        }
        for (i, report) in run_selected(s, theorems).into_iter().enumerate() {
            if report.passed() {
                self.passes[i] += 1;
            } else {
                self.violations.push(SweepViolation {
                    structure: StructureDoc::from_structure(s, None),
                    report,
                });
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.structures += other.structures;
        let (a, b) = (&mut self.classes, &other.classes);
        a.regular += b.regular;
        a.left_regular += b.left_regular;
        a.right_regular += b.right_regular;
        a.completely_regular += b.completely_regular;
        a.strongly_regular += b.strongly_regular;
        for (p, q) in self.passes.iter_mut().zip(&other.passes) {
            *p += q;
        }
        self.violations.extend(other.violations);
        self.gap.count += other.gap.count;
        let room = GAP_EXAMPLES.saturating_sub(self.gap.examples.len());
        self.gap.examples.extend(other.gap.examples.into_iter().take(room));
        self
    }
}

fn all_bi_ideals_idempotent(s: &PoGammaSemigroup) -> bool {
    all_bi_ideals(s)
        .iter()
        .all(|b| downward_closure(s, &set_product(s, b, b)) == *b)
}

/// What one work unit produced before checking.
struct Unit {
    tables: u64,
    labeled: u64,
    structures: Vec<PoGammaSemigroup>,
}

fn orders_for(opts: &SweepOptions, tables: &crate::model::GammaTables) -> Vec<OrderRelation> {
    let n = opts.spec.n;
    if !opts.spec.require_order {
        vec![OrderRelation::equality(n)]
    } else if opts.include_incompatible {
        all_partial_orders(n)
    } else {
        enumerate_orders(tables).collect()
    }
}

fn structure(opts: &SweepOptions, tables: crate::model::GammaTables, order: OrderRelation) -> PoGammaSemigroup {
    if opts.include_incompatible {
        PoGammaSemigroup::new_without_compatibility(tables, order).expect("associative tables and a partial order")
    } else {
        debug_assert!(crate::model::validate_compatibility(&tables, &order).ok);
        PoGammaSemigroup::new_trusted(tables, order)
    }
}

fn prefix_len(spec: &EnumSpec) -> usize {
    spec.n.min(spec.cells())
}

fn expand_unit(opts: &SweepOptions, prefix: &[usize]) -> Unit {
    let mut unit = Unit {
        tables: 0,
        labeled: 0,
        structures: Vec::new(),
    };
    for tables in enumerate_subtree(&opts.spec, prefix) {
        unit.tables += 1;
        for order in orders_for(opts, &tables) {
            unit.labeled += 1;
            unit.structures.push(structure(opts, tables.clone(), order));
        }
    }
    unit
}

fn pool(workers: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool")
}

/// Every structure the sweep would check, in sweep order: canonical
/// representatives sorted by key, or all labeled structures in
/// enumeration order.
pub fn collect_structures(opts: &SweepOptions) -> Result<Vec<PoGammaSemigroup>, EnumError> {
    opts.spec.check()?;
    Ok(pool(opts.workers).install(|| gather(opts)).2)
}

/// (table families, labeled structures, structures to check)
fn gather(opts: &SweepOptions) -> (u64, u64, Vec<PoGammaSemigroup>) {
    let prefixes = table_prefixes(&opts.spec, prefix_len(&opts.spec));
    let units: Vec<Unit> = prefixes.par_iter().map(|p| expand_unit(opts, p)).collect();
    let tables = units.iter().map(|u| u.tables).sum();
    let labeled = units.iter().map(|u| u.labeled).sum();
    if opts.spec.canonical {
        let keys: BTreeSet<CanonicalKey> = units
            .into_par_iter()
            .map(|u| u.structures.iter().map(canonical_key).collect::<BTreeSet<_>>())
            .reduce(BTreeSet::new, |mut a, b| {
                a.extend(b);
                a
            });
        let reps = keys.iter().map(|k| canonical_rep(opts, k)).collect();
        (tables, labeled, reps)
    } else {
        let all = units.into_iter().flat_map(|u| u.structures).collect();
        (tables, labeled, all)
    }
}

fn canonical_rep(opts: &SweepOptions, key: &CanonicalKey) -> PoGammaSemigroup {
    let s = from_key(key);
    if opts.include_incompatible {
        PoGammaSemigroup::new_without_compatibility(s.tables().clone(), s.order().clone())
            .expect("relabeling preserves the axioms")
    } else {
        s
    }
}

pub fn sweep(opts: &SweepOptions) -> Result<SweepReport, EnumError> {
    opts.spec.check()?;
    let theorems = &opts.theorems;
    let (tables, labeled, tally) = pool(opts.workers).install(|| {
        let (tables, labeled, structures) = gather(opts);
        let tally = structures
            .par_chunks(64)
            .map(|chunk| {
                let mut t = Tally::new(theorems.len());
                for s in chunk {
                    t.absorb(s, theorems);
                }
                t
            })
            .collect::<Vec<_>>()
            .into_iter()
            .fold(Tally::new(theorems.len()), Tally::merge);
        (tables, labeled, tally)
    });
    let per_theorem = theorems
        .iter()
        .zip(&tally.passes)
        .map(|(&theorem, &passes)| TheoremTally {
            theorem,
            passes,
            violations: tally.structures - passes,
        })
        .collect();
    Ok(SweepReport {
        format_version: FORMAT_VERSION,
        n: opts.spec.n,
        m: opts.spec.m,
        require_order: opts.spec.require_order,
        canonical: opts.spec.canonical,
        include_incompatible: opts.include_incompatible,
        theorems: theorems.clone(),
        table_families: tables,
        labeled_structures: labeled,
        structures: tally.structures,
        classes: tally.classes,
        per_theorem,
        violations: tally.violations,
        prop6_converse_gap: tally.gap,
    })
}

/// Strongly regular structures are completely regular, so a sweep's class
/// counts are nested. Exposed for report consumers.
pub fn classes_nested(c: &ClassCounts) -> bool {
    c.strongly_regular <= c.completely_regular
        && c.completely_regular <= c.regular.min(c.left_regular).min(c.right_regular)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(n: usize, m: usize, canonical: bool, workers: usize) -> SweepReport {
        let mut opts = SweepOptions::new(EnumSpec::new(n, m).canonical(canonical));
        opts.workers = workers;
        sweep(&opts).unwrap()
    }

    #[test]
    fn one_element_sweep() {
        let r = run(1, 1, false, 1);
        assert_eq!((r.structures, r.violations.len()), (1, 0));
        assert_eq!(r.per_theorem.len(), 9);
    }

    #[test]
    fn worker_count_does_not_change_report() {
        for canonical in [false, true] {
            let one = run(2, 2, canonical, 1);
            let four = run(2, 2, canonical, 4);
            assert_eq!(one, four);
            assert_eq!(crate::io::to_machine(&one), crate::io::to_machine(&four));
        }
    }

    #[test]
    fn canonical_sweep_has_no_duplicates() {
        let opts = SweepOptions::new(EnumSpec::new(2, 2).canonical(true));
        let reps = collect_structures(&opts).unwrap();
        let keys: BTreeSet<_> = reps.iter().map(canonical_key).collect();
        assert_eq!(keys.len(), reps.len());
    }

    #[test]
    fn class_counts_are_nested() {
        assert!(classes_nested(&run(2, 1, false, 1).classes));
    }

    #[test]
    fn guard_is_enforced() {
        let opts = SweepOptions::new(EnumSpec::new(7, 1));
        assert!(matches!(sweep(&opts), Err(EnumError::TooLarge { .. })));
    }

    #[test]
    fn incompatible_orders_produce_violations() {
        let mut opts = SweepOptions::new(EnumSpec::new(3, 1).canonical(true));
        opts.include_incompatible = true;
        let r = sweep(&opts).unwrap();
        assert!(!r.passed());
        for v in &r.violations {
            let s = v.structure.to_structure_without_compatibility().unwrap();
            assert!(crate::theorems::replay(&s, &v.report));
        }
    }
}

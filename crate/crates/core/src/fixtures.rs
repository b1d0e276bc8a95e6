//! The small named structures used throughout the examples and tests.

use crate::model::{GammaTables, OrderRelation, PoGammaSemigroup};

/// `M = {0}`, `Γ = {0}`.
pub fn one_element() -> PoGammaSemigroup {
    build(GammaTables::from_flat(1, 1, vec![0]).unwrap(), OrderRelation::equality(1))
}

/// Two elements, every product `0`, discrete order.
pub fn null_table() -> PoGammaSemigroup {
    build(
        GammaTables::single(&[vec![0, 0], vec![0, 0]]).unwrap(),
        OrderRelation::equality(2),
    )
}

/// `aγb = min(a, b)` on the chain `0 ≤ 1`.
pub fn min_chain() -> PoGammaSemigroup {
    build(
        GammaTables::single(&[vec![0, 0], vec![0, 1]]).unwrap(),
        OrderRelation::chain(2),
    )
}

/// `aγb = a` on two elements, discrete order.
pub fn left_zero() -> PoGammaSemigroup {
    build(
        GammaTables::single(&[vec![0, 0], vec![1, 1]]).unwrap(),
        OrderRelation::equality(2),
    )
}

/// All named fixtures with their file stems.
pub fn named() -> Vec<(&'static str, PoGammaSemigroup)> {
    vec![
        ("one-element", one_element()),
        ("null-table", null_table()),
        ("min-chain", min_chain()),
        ("left-zero", left_zero()),
    ]
}

fn build(tables: GammaTables, order: OrderRelation) -> PoGammaSemigroup {
    PoGammaSemigroup::new(tables, order).expect("fixture satisfies every axiom")
}

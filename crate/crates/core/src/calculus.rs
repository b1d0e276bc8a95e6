//! The ideal calculus on a finite po-Γ-semigroup: down-closures `(A]`,
//! Γ-products `AΓB`, bi-ideals and the bi-ideal `B(A)` generated by a set,
//! semiprimality, and the regularity predicates together with witnesses.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::PoGammaSemigroup;
use crate::set::ElementSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CalcError {
    #[error("{0} requires a nonempty set")]
    EmptySet(&'static str),
    #[error("{0} is not a subsemigroup")]
    NotSubsemigroup(ElementSet),
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
}

/// `(A] = { t : t ≤ u for some u ∈ A }`.
pub fn downward_closure(s: &PoGammaSemigroup, a: &ElementSet) -> ElementSet {
    let bits = a.iter().fold(0u64, |acc, u| acc | s.down(u));
    ElementSet::from_bits(s.n(), bits)
}

/// `AΓB = { xγy : x ∈ A, γ ∈ Γ, y ∈ B }`.
pub fn set_product(s: &PoGammaSemigroup, a: &ElementSet, b: &ElementSet) -> ElementSet {
    let mut bits = 0u64;
    for x in a {
        for y in b {
            bits |= s.pair_products(x, y);
        }
    }
    ElementSet::from_bits(s.n(), bits)
}

/// `A₁ΓA₂Γ…ΓAₖ` as a left fold of [`set_product`].
///
/// Panics if `parts` is empty.
pub fn word_product(s: &PoGammaSemigroup, parts: &[ElementSet]) -> ElementSet {
    let (first, rest) = parts.split_first().expect("word_product needs at least one factor");
    rest.iter().fold(*first, |acc, p| set_product(s, &acc, p))
}

pub fn universe(s: &PoGammaSemigroup) -> ElementSet {
    ElementSet::full(s.n())
}

pub fn singleton(s: &PoGammaSemigroup, a: usize) -> ElementSet {
    ElementSet::singleton(s.n(), a)
}

/// `aΓa`.
pub fn square(s: &PoGammaSemigroup, a: usize) -> ElementSet {
    let a = singleton(s, a);
    set_product(s, &a, &a)
}

/// `aΓaΓMΓaΓa`.
pub fn square_sandwich(s: &PoGammaSemigroup, a: usize) -> ElementSet {
    let aa = square(s, a);
    word_product(s, &[aa, universe(s), aa])
}

/// `MΓaΓM`.
pub fn two_sided_word(s: &PoGammaSemigroup, a: usize) -> ElementSet {
    let m = universe(s);
    word_product(s, &[m, singleton(s, a), m])
}

/// Nonempty `T` with `TΓT ⊆ T`.
pub fn is_subsemigroup(s: &PoGammaSemigroup, t: &ElementSet) -> Result<bool, CalcError> {
    if t.is_empty() {
        return Err(CalcError::EmptySet("is_subsemigroup"));
    }
    Ok(set_product(s, t, t).is_subset(t))
}

/// `BΓMΓB ⊆ B` and `B` closed downward.
pub fn is_bi_ideal(s: &PoGammaSemigroup, b: &ElementSet) -> Result<bool, CalcError> {
    if b.is_empty() {
        return Err(CalcError::EmptySet("is_bi_ideal"));
    }
    Ok(bi_ideal_unchecked(s, b))
}

fn bi_ideal_unchecked(s: &PoGammaSemigroup, b: &ElementSet) -> bool {
    downward_closure(s, b) == *b && word_product(s, &[*b, universe(s), *b]).is_subset(b)
}

/// `B(A) = (A ∪ AΓMΓA]`.
pub fn bi_ideal_generated_formula(s: &PoGammaSemigroup, a: &ElementSet) -> Result<ElementSet, CalcError> {
    if a.is_empty() {
        return Err(CalcError::EmptySet("bi_ideal_generated_formula"));
    }
    let sandwich = word_product(s, &[*a, universe(s), *a]);
    Ok(downward_closure(s, &a.union(&sandwich)))
}

/// Least bi-ideal containing `A`, by iterating `X ↦ (X ∪ XΓMΓX]` to a
/// fixpoint. Independent of the closed formula.
pub fn bi_ideal_generated_fixpoint(s: &PoGammaSemigroup, a: &ElementSet) -> Result<ElementSet, CalcError> {
    if a.is_empty() {
        return Err(CalcError::EmptySet("bi_ideal_generated_fixpoint"));
    }
    let m = universe(s);
    let mut current = *a;
    // the sequence is increasing, so it stabilises within n steps
    for _ in 0..=s.n() {
        let next = downward_closure(s, &current.union(&word_product(s, &[current, m, current])));
        if next == current {
            return Ok(current);
        }
        current = next;
    }
    unreachable!("increasing chain of subsets exceeded the universe size")
}

/// Every bi-ideal, ascending by bit pattern.
pub fn all_bi_ideals(s: &PoGammaSemigroup) -> Vec<ElementSet> {
    ElementSet::all_subsets(s.n())
        .skip(1)
        .filter(|b| bi_ideal_unchecked(s, b))
        .collect()
}

/// `aΓa ⊆ B` implies `a ∈ B`, for every `a`.
pub fn is_semiprime(s: &PoGammaSemigroup, b: &ElementSet) -> bool {
    semiprime_failure(s, b).is_none()
}

/// Least `a ∉ B` with `aΓa ⊆ B`.
pub fn semiprime_failure(s: &PoGammaSemigroup, b: &ElementSet) -> Option<usize> {
    (0..s.n()).find(|&a| !b.contains(a) && square(s, a).is_subset(b))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RegularityKind {
    /// `a ≤ aγxμa`
    Regular,
    /// `a ≤ xγaμa`
    LeftRegular,
    /// `a ≤ aγaμx`
    RightRegular,
    /// `a ≤ (aγa)μxρ(aξa)`
    CompletelyRegular,
    /// `a ≤ aγxμa` and `aγx = xγa = xμa = aμx`
    StronglyRegular,
}

impl RegularityKind {
    pub const ALL: [RegularityKind; 5] = [
        RegularityKind::Regular,
        RegularityKind::LeftRegular,
        RegularityKind::RightRegular,
        RegularityKind::CompletelyRegular,
        RegularityKind::StronglyRegular,
    ];

    /// Number of Γ-letters in a witness of this kind.
    pub fn letter_count(self) -> usize {
        match self {
            RegularityKind::CompletelyRegular => 4,
            _ => 2,
        }
    }
}

impl fmt::Display for RegularityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RegularityKind::Regular => "regular",
            RegularityKind::LeftRegular => "left-regular",
            RegularityKind::RightRegular => "right-regular",
            RegularityKind::CompletelyRegular => "completely-regular",
            RegularityKind::StronglyRegular => "strongly-regular",
        })
    }
}

/// Data instantiating the defining inequality of `kind` at `element`:
/// the middle element `x` and the Γ-letters in order of appearance
/// (`γ, μ` or, for complete regularity, `γ, μ, ρ, ξ`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityWitness {
    pub kind: RegularityKind,
    pub element: usize,
    pub x: usize,
    pub letters: Vec<usize>,
}

impl RegularityWitness {
    /// Re-evaluates the defining condition. False for malformed data.
    pub fn holds(&self, s: &PoGammaSemigroup) -> bool {
        let (n, m) = (s.n(), s.m());
        if self.element >= n
            || self.x >= n
            || self.letters.len() != self.kind.letter_count()
            || self.letters.iter().any(|&g| g >= m)
        {
            return false;
        }
        let (a, x, l) = (self.element, self.x, &self.letters);
        match self.kind {
            RegularityKind::Regular => s.leq(a, s.word(a, &[(l[0], x), (l[1], a)])),
            RegularityKind::LeftRegular => s.leq(a, s.word(x, &[(l[0], a), (l[1], a)])),
            RegularityKind::RightRegular => s.leq(a, s.word(a, &[(l[0], a), (l[1], x)])),
            RegularityKind::CompletelyRegular => s.leq(a, cr_product(s, a, x, l[0], l[1], l[2], l[3])),
            RegularityKind::StronglyRegular => strongly_regular_at(s, a, x, l[0], l[1]),
        }
    }

    fn letters_fmt(&self) -> String {
        self.letters.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for RegularityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}: x={}, Γ=({})", self.kind, self.element, self.x, self.letters_fmt())
    }
}

#[inline]
fn cr_product(s: &PoGammaSemigroup, a: usize, x: usize, g: usize, u: usize, r: usize, k: usize) -> usize {
    let aa = s.mul(a, g, a);
    let right = s.mul(a, k, a);
    s.mul(s.mul(aa, u, x), r, right)
}

#[inline]
fn strongly_regular_at(s: &PoGammaSemigroup, a: usize, x: usize, g: usize, u: usize) -> bool {
    let p = s.mul(a, g, x);
    s.leq(a, s.mul(p, u, a)) && s.mul(x, g, a) == p && s.mul(x, u, a) == p && s.mul(a, u, x) == p
}

/// First witness for `kind` at `a`, scanning `x` ascending, then the
/// letters lexicographically. `None` if `a` is not regular of that kind.
pub fn regularity(s: &PoGammaSemigroup, a: usize, kind: RegularityKind) -> Option<RegularityWitness> {
    regularity_within(s, a, kind, &universe(s))
}

/// As [`regularity`], but with `x` restricted to `candidates`.
pub fn regularity_within(
    s: &PoGammaSemigroup,
    a: usize,
    kind: RegularityKind,
    candidates: &ElementSet,
) -> Option<RegularityWitness> {
    let m = s.m();
    let found = |x: usize, letters: Vec<usize>| RegularityWitness {
        kind,
        element: a,
        x,
        letters,
    };
    for x in candidates {
        match kind {
            RegularityKind::CompletelyRegular => {
                for g in 0..m {
                    for u in 0..m {
                        for r in 0..m {
                            for k in 0..m {
                                if s.leq(a, cr_product(s, a, x, g, u, r, k)) {
                                    return Some(found(x, vec![g, u, r, k]));
                                }
                            }
                        }
                    }
                }
            }
            _ => {
                for g in 0..m {
                    for u in 0..m {
                        let w = found(x, vec![g, u]);
                        if w.holds(s) {
                            return Some(w);
                        }
                    }
                }
            }
        }
    }
    None
}

/// Least element failing `kind`, or `None` if every element has a witness.
pub fn first_irregular(s: &PoGammaSemigroup, kind: RegularityKind) -> Option<usize> {
    (0..s.n()).find(|&a| regularity(s, a, kind).is_none())
}

/// Least `a` with no `x, γ, μ, ρ, ξ` such that `a ≤ (aγa)μxρ(aξa)`.
pub fn is_completely_regular(s: &PoGammaSemigroup) -> Option<usize> {
    first_irregular(s, RegularityKind::CompletelyRegular)
}

/// Least `a` with no strong-regularity witness.
pub fn is_strongly_regular(s: &PoGammaSemigroup) -> Option<usize> {
    first_irregular(s, RegularityKind::StronglyRegular)
}

/// Builds a complete-regularity witness for `a` from witnesses
/// `a ≤ aζtωa` (regular), `a ≤ aγaμy` (right regular) and `a ≤ zρaξa`
/// (left regular): the middle element is `x = yζtωz` and the letters are
/// `γ, μ, ρ, ξ`.
pub fn compose_cr_witness(
    s: &PoGammaSemigroup,
    a: usize,
    reg: &RegularityWitness,
    rreg: &RegularityWitness,
    lreg: &RegularityWitness,
) -> Result<RegularityWitness, CalcError> {
    for (w, kind) in [
        (reg, RegularityKind::Regular),
        (rreg, RegularityKind::RightRegular),
        (lreg, RegularityKind::LeftRegular),
    ] {
        if w.kind != kind || w.element != a || !w.holds(s) {
            return Err(CalcError::InvalidWitness(format!("expected a valid {kind} witness for {a}, got {w}")));
        }
    }
    let (t, zeta, omega) = (reg.x, reg.letters[0], reg.letters[1]);
    let (y, gamma, mu) = (rreg.x, rreg.letters[0], rreg.letters[1]);
    let (z, rho, xi) = (lreg.x, lreg.letters[0], lreg.letters[1]);
    Ok(RegularityWitness {
        kind: RegularityKind::CompletelyRegular,
        element: a,
        x: s.word(y, &[(zeta, t), (omega, z)]),
        letters: vec![gamma, mu, rho, xi],
    })
}

/// Where the witness `x` for strong regularity of a subset may come from.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessScope {
    /// `x` must lie in the subset.
    #[default]
    Inside,
    /// `x` may be any element of `M`.
    Ambient,
}

/// Every `b ∈ T` has a strong-regularity witness, drawn from `T` under
/// [`WitnessScope::Inside`].
pub fn is_strongly_regular_subset(
    s: &PoGammaSemigroup,
    t: &ElementSet,
    scope: WitnessScope,
) -> Result<bool, CalcError> {
    if !is_subsemigroup(s, t)? {
        return Err(CalcError::NotSubsemigroup(*t));
    }
    let candidates = match scope {
        WitnessScope::Inside => *t,
        WitnessScope::Ambient => universe(s),
    };
    Ok(t
        .iter()
        .all(|b| regularity_within(s, b, RegularityKind::StronglyRegular, &candidates).is_some()))
}

//! Per-structure summary: regularity witnesses for every element, the
//! generated bi-ideals `B(a)`, and every bi-ideal with its semiprimality.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::calculus::{
    all_bi_ideals, bi_ideal_generated_formula, downward_closure, is_semiprime, regularity, set_product, singleton,
    RegularityKind, RegularityWitness,
};
use crate::io::FORMAT_VERSION;
use crate::model::PoGammaSemigroup;
use crate::set::ElementSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementAnalysis {
    pub element: usize,
    pub regular: Option<RegularityWitness>,
    pub left_regular: Option<RegularityWitness>,
    pub right_regular: Option<RegularityWitness>,
    pub completely_regular: Option<RegularityWitness>,
    pub strongly_regular: Option<RegularityWitness>,
    pub generated_bi_ideal: ElementSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiIdealAnalysis {
    pub set: ElementSet,
    pub semiprime: bool,
    /// `B = (BΓB]`
    pub idempotent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub format_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub n: usize,
    pub m: usize,
    pub regular: bool,
    pub left_regular: bool,
    pub right_regular: bool,
    pub completely_regular: bool,
    pub strongly_regular: bool,
    pub elements: Vec<ElementAnalysis>,
    pub bi_ideals: Vec<BiIdealAnalysis>,
}

pub fn analyze(s: &PoGammaSemigroup, name: Option<&str>) -> AnalysisReport {
    let elements: Vec<ElementAnalysis> = (0..s.n())
        .map(|a| ElementAnalysis {
            element: a,
            regular: regularity(s, a, RegularityKind::Regular),
            left_regular: regularity(s, a, RegularityKind::LeftRegular),
            right_regular: regularity(s, a, RegularityKind::RightRegular),
            completely_regular: regularity(s, a, RegularityKind::CompletelyRegular),
            strongly_regular: regularity(s, a, RegularityKind::StronglyRegular),
            generated_bi_ideal: bi_ideal_generated_formula(s, &singleton(s, a)).expect("singleton is nonempty"),
        })
        .collect();
    let all = |f: fn(&ElementAnalysis) -> bool| elements.iter().all(f);
    let bi_ideals = all_bi_ideals(s)
        .into_iter()
        .map(|b| BiIdealAnalysis {
            set: b,
            semiprime: is_semiprime(s, &b),
            idempotent: downward_closure(s, &set_product(s, &b, &b)) == b,
        })
        .collect();
    AnalysisReport {
        format_version: FORMAT_VERSION,
        name: name.map(str::to_string),
        n: s.n(),
        m: s.m(),
        regular: all(|e| e.regular.is_some()),
        left_regular: all(|e| e.left_regular.is_some()),
        right_regular: all(|e| e.right_regular.is_some()),
        completely_regular: all(|e| e.completely_regular.is_some()),
        strongly_regular: all(|e| e.strongly_regular.is_some()),
        elements,
        bi_ideals,
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn witness_text(w: &Option<RegularityWitness>) -> String {
    match w {
        Some(w) => {
            let letters = w.letters.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(",");
            format!("x={} Γ=({letters})", w.x)
        }
        None => "none".into(),
    }
}

impl AnalysisReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(name) = &self.name {
            let _ = writeln!(out, "structure {name}");
        }
        let _ = writeln!(out, "|M| = {}, |Γ| = {}", self.n, self.m);
        for (label, v) in [
            ("regular", self.regular),
            ("left regular", self.left_regular),
            ("right regular", self.right_regular),
            ("completely regular", self.completely_regular),
            ("strongly regular", self.strongly_regular),
        ] {
            let _ = writeln!(out, "  {label:<20} {}", yes_no(v));
        }
        out.push_str("elements:\n");
        for e in &self.elements {
            let _ = writeln!(out, "  {}: B({}) = {}", e.element, e.element, e.generated_bi_ideal);
            for (label, w) in [
                ("regular", &e.regular),
                ("left regular", &e.left_regular),
                ("right regular", &e.right_regular),
                ("completely regular", &e.completely_regular),
                ("strongly regular", &e.strongly_regular),
            ] {
                let _ = writeln!(out, "     {label:<20} {}", witness_text(w));
            }
        }
        out.push_str("bi-ideals:\n");
        for b in &self.bi_ideals {
            let _ = writeln!(
                out,
                "  {:<12} semiprime: {:<3}  B = (BΓB]: {}",
                b.set.to_string(),
                yes_no(b.semiprime),
                yes_no(b.idempotent)
            );
        }
        out
    }
}

//! Answer-set semantics of programs with weight constraints.
//!
//! Everything here works directly on [`Interpretation`]s and exact
//! rationals. It is the reference side of every cross-check against the
//! nested-expression translations, so it deliberately shares no evaluation
//! code with `nsem` or `ht`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Result;
use crate::syntax::{
    rational_zero, Bound, Interpretation, Literal, Rational, RuleElement, Signature, WProgram,
    WRule, WeightConstraint,
};
use crate::universe::{check_cap, Universe};

/// `head ← L₁ ≤ S₁, …, L_n ≤ S_n` with every `S_i` free of negative elements.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HornRule {
    pub head: Literal,
    pub body: Vec<WeightConstraint>,
}

impl HornRule {
    pub fn is_horn(&self) -> bool {
        self.body.iter().all(WeightConstraint::is_horn_constraint)
    }
}

impl fmt::Display for HornRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.head)?;
        for (i, c) in self.body.iter().enumerate() {
            f.write_str(if i == 0 { " :- " } else { ", " })?;
            write!(f, "{c}")?;
        }
        f.write_str(".")
    }
}

fn satisfies_element(z: &Interpretation, e: &RuleElement) -> bool {
    z.contains(&e.lit) != e.naf
}

fn satisfied_weight(z: &Interpretation, c: &WeightConstraint) -> Rational {
    c.pairs()
        .iter()
        .filter(|p| satisfies_element(z, &p.element))
        .fold(rational_zero(), |acc, p| acc + &p.weight)
}

pub fn satisfies_wc(z: &Interpretation, c: &WeightConstraint) -> bool {
    let sum = satisfied_weight(z, c);
    c.lower().le_value(&sum) && c.upper().ge_value(&sum)
}

fn satisfies_upper(z: &Interpretation, c: &WeightConstraint) -> bool {
    c.upper().ge_value(&satisfied_weight(z, c))
}

pub fn satisfies_wrule(z: &Interpretation, r: &WRule) -> bool {
    !r.body.iter().all(|c| satisfies_wc(z, c)) || satisfies_wc(z, &r.head)
}

pub fn satisfies_wprogram(z: &Interpretation, p: &WProgram) -> bool {
    p.rules.iter().all(|r| satisfies_wrule(z, r))
}

/// `(L ≤ S)^Z`: drop negative pairs and lower the bound by the weight of
/// the negative pairs that `Z` satisfies. The upper bound is ignored.
pub fn reduct_lower(c: &WeightConstraint, z: &Interpretation) -> WeightConstraint {
    let satisfied_negative = c
        .pairs()
        .iter()
        .filter(|p| p.element.naf && satisfies_element(z, &p.element))
        .fold(rational_zero(), |acc, p| acc + &p.weight);
    let pairs = c.pairs().iter().filter(|p| !p.element.naf).cloned().collect();
    WeightConstraint::new(c.lower().minus(&satisfied_negative), pairs, Bound::PosInf)
        .expect("weights were already nonnegative")
}

pub fn reduct_wrule(r: &WRule, z: &Interpretation) -> Vec<HornRule> {
    if !r.body.iter().all(|c| satisfies_upper(z, c)) {
        return Vec::new();
    }
    let body: Vec<WeightConstraint> = r.body.iter().map(|c| reduct_lower(c, z)).collect();
    r.head
        .positive_literals()
        .into_iter()
        .filter(|l| z.contains(l))
        .map(|head| HornRule {
            head,
            body: body.clone(),
        })
        .collect()
}

/// `Ω^Z` as a set of Horn rules (duplicates removed, first-occurrence order).
pub fn reduct_wprogram(p: &WProgram, z: &Interpretation) -> Vec<HornRule> {
    let mut seen = BTreeSet::new();
    p.rules
        .iter()
        .flat_map(|r| reduct_wrule(r, z))
        .filter(|h| seen.insert(h.clone()))
        .collect()
}

fn horn_body_holds(derived: &BTreeSet<Literal>, body: &[WeightConstraint]) -> bool {
    body.iter().all(|c| {
        let sum = c
            .pairs()
            .iter()
            .filter(|p| derived.contains(&p.element.lit))
            .fold(rational_zero(), |acc, p| acc + &p.weight);
        c.lower().le_value(&sum)
    })
}

/// Least set of literals closed under the Horn rules.
///
/// The result is not checked for consistency; it may contain both `a` and
/// `-a`.
pub fn deductive_closure(rules: &[HornRule]) -> BTreeSet<Literal> {
    let mut derived = BTreeSet::new();
    loop {
        let mut changed = false;
        for r in rules {
            if !derived.contains(&r.head) && horn_body_holds(&derived, &r.body) {
                derived.insert(r.head.clone());
                changed = true;
            }
        }
        if !changed {
            return derived;
        }
    }
}

/// Every consistent set of literals over `atoms`, in ascending order.
pub(crate) fn candidates(universe: &Universe) -> Vec<Interpretation> {
    universe
        .consistent_masks()
        .into_iter()
        .map(|m| universe.interpretation(m))
        .collect()
}

pub fn is_answer_set_w(p: &WProgram, z: &Interpretation) -> bool {
    satisfies_wprogram(z, p) && deductive_closure(&reduct_wprogram(p, z)) == *z.literals()
}

/// All answer sets, by brute force over the `3ⁿ` consistent candidates.
pub fn answer_sets_w(p: &WProgram, cap: usize) -> Result<Vec<Interpretation>> {
    let atoms = p.signature();
    check_cap(atoms.len(), cap)?;
    let universe = Universe::new(atoms);
    let mut out: Vec<Interpretation> = candidates(&universe)
        .into_iter()
        .filter(|z| is_answer_set_w(p, z))
        .collect();
    out.sort();
    Ok(out)
}

/// Outcome of a strong-equivalence check by Turner's criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TurnerVerdict {
    Equivalent,
    /// `(Z, Z′)` with `Z′ ⊆ Z` accepted by exactly one of the programs;
    /// `first_accepts` tells which.
    Counterexample {
        z: Interpretation,
        z_prime: Interpretation,
        first_accepts: bool,
    },
}

impl TurnerVerdict {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, TurnerVerdict::Equivalent)
    }
}

fn horn_satisfied(z: &Interpretation, rules: &[HornRule]) -> bool {
    rules
        .iter()
        .all(|r| z.contains(&r.head) || !horn_body_holds(z.literals(), &r.body))
}

fn subsets(z: &Interpretation) -> impl Iterator<Item = Interpretation> + '_ {
    let lits: Vec<&Literal> = z.iter().collect();
    (0u64..1 << lits.len()).map(move |m| {
        let set = lits
            .iter()
            .enumerate()
            .filter(|(i, _)| m & (1 << i) != 0)
            .map(|(_, l)| (*l).clone())
            .collect();
        Interpretation::from_set_unchecked(set)
    })
}

/// Strong equivalence by comparing, for every consistent `Z` and `Z′ ⊆ Z`,
/// the conditions `Z ⊨ Ω` and `Z′ ⊨ Ω^Z` for both programs.
pub fn turner_strong_eq(p1: &WProgram, p2: &WProgram, cap: usize) -> Result<TurnerVerdict> {
    let atoms = p1.union(p2).signature();
    check_cap(atoms.len(), cap)?;
    let universe = Universe::new(atoms);
    for z in candidates(&universe) {
        let sat1 = satisfies_wprogram(&z, p1);
        let sat2 = satisfies_wprogram(&z, p2);
        let red1 = if sat1 { reduct_wprogram(p1, &z) } else { Vec::new() };
        let red2 = if sat2 { reduct_wprogram(p2, &z) } else { Vec::new() };
        for z_prime in subsets(&z) {
            let a = sat1 && horn_satisfied(&z_prime, &red1);
            let b = sat2 && horn_satisfied(&z_prime, &red2);
            if a != b {
                return Ok(TurnerVerdict::Counterexample {
                    z: z.clone(),
                    z_prime,
                    first_accepts: a,
                });
            }
        }
    }
    Ok(TurnerVerdict::Equivalent)
}

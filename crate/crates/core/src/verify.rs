//! Randomized cross-checks of the correspondence results between the two
//! languages and their translations.

use std::collections::BTreeSet;
use std::fmt;

use rand::Rng;

use crate::completion::{is_tight, stable_models, verify_completion};
use crate::error::{Error, Result};
use crate::generate::Generator;
use crate::ht::{ht_equivalent_formulas, strong_eq_nested, strong_eq_weight, DEFAULT_HT_CAP};
use crate::nsem::{answer_sets_n, reduct_formula, satisfies_formula};
use crate::syntax::{signature, Formula, Interpretation, Rational, Relation, Signature, WProgram};
use crate::translate::{
    threshold_formula, tr_basic, tr_constraint, tr_lower, tr_nd, tr_nn, tr_upper, unfold_weight_formula,
    weight_formula, ThresholdMode,
};
use crate::wsem::{answer_sets_w, reduct_lower, satisfies_wc, turner_strong_eq};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    /// Answer sets of `Ω` and `[Ω]` coincide.
    Theorem1,
    /// Projection is a bijection from the answer sets of `[Ω]^{nn}` onto
    /// those of `Ω`.
    Theorem2,
    /// Threshold formulas are satisfied exactly when the satisfied indices
    /// meet the threshold.
    Proposition1,
    /// `[Ω]^{nd}` and `[Ω]` have the same HT-models.
    Proposition2,
    /// Weight-atom count against the linear bound.
    Proposition3,
    /// HT strong equivalence of translations agrees with the reduct-based
    /// criterion, and strongly equivalent pairs agree under unary
    /// extensions.
    Proposition4,
    /// `Z ⊨ [C]` iff `Z ⊨ C`.
    Lemma1,
    /// `Z′ ⊨ [L≤S]^Z` iff `Z′ ⊨ (L≤S)^Z`.
    Lemma2,
    /// `[S≤U]^Z` is `⊤` if `Z ⊨ S≤U` and `⊥` otherwise.
    Lemma3,
    /// `[w≤S]` and `[w<S]` are HT-equivalent to their one-step unfolding.
    Lemma8,
    /// Models of the completion of a tight `[Ω]^{nn}` are the answer sets.
    Completion,
}

impl Check {
    pub const ALL: [Check; 11] = [
        Check::Theorem1,
        Check::Theorem2,
        Check::Proposition1,
        Check::Proposition2,
        Check::Proposition3,
        Check::Proposition4,
        Check::Lemma1,
        Check::Lemma2,
        Check::Lemma3,
        Check::Lemma8,
        Check::Completion,
    ];

    pub fn theorem(n: u32) -> Option<Check> {
        match n {
            1 => Some(Check::Theorem1),
            2 => Some(Check::Theorem2),
            _ => None,
        }
    }

    pub fn proposition(n: u32) -> Option<Check> {
        match n {
            1 => Some(Check::Proposition1),
            2 => Some(Check::Proposition2),
            3 => Some(Check::Proposition3),
            4 => Some(Check::Proposition4),
            _ => None,
        }
    }

    pub fn lemma(n: u32) -> Option<Check> {
        match n {
            1 => Some(Check::Lemma1),
            2 => Some(Check::Lemma2),
            3 => Some(Check::Lemma3),
            8 => Some(Check::Lemma8),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Check::Theorem1 => "theorem-1",
            Check::Theorem2 => "theorem-2",
            Check::Proposition1 => "proposition-1",
            Check::Proposition2 => "proposition-2",
            Check::Proposition3 => "proposition-3",
            Check::Proposition4 => "proposition-4",
            Check::Lemma1 => "lemma-1",
            Check::Lemma2 => "lemma-2",
            Check::Lemma3 => "lemma-3",
            Check::Lemma8 => "lemma-8",
            Check::Completion => "completion",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub cases: usize,
    pub seed: u64,
    pub cap: usize,
    pub ht_cap: usize,
    /// Unary extensions tried per strongly equivalent pair.
    pub extensions: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            cases: 200,
            seed: 0,
            cap: crate::universe::DEFAULT_CAP,
            ht_cap: DEFAULT_HT_CAP,
            extensions: 200,
        }
    }
}

/// Slack in the weight-atom bound for constraints of length zero, where the
/// per-constraint term vanishes but two atoms per rule can still appear; the
/// programs are capped at four rules.
pub const PROPOSITION3_CONSTANT: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    /// The case could not be decided within the caps.
    Skip(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckStats {
    pub check: Check,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub first_failure: Option<String>,
}

impl CheckStats {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

pub fn run_check(check: Check, cfg: &VerifyConfig) -> CheckStats {
    let mut g = Generator::new(cfg.seed);
    let mut stats = CheckStats {
        check,
        passed: 0,
        failed: 0,
        skipped: 0,
        first_failure: None,
    };
    for case in 0..cfg.cases {
        let outcome = match run_case(check, &mut g, cfg) {
            Ok(o) => o,
            Err(e @ Error::CapExceeded { .. }) => Outcome::Skip(e.to_string()),
            Err(e) => Outcome::Fail(format!("error: {e}")),
        };
        match outcome {
            Outcome::Pass => stats.passed += 1,
            Outcome::Skip(_) => stats.skipped += 1,
            Outcome::Fail(msg) => {
                stats.failed += 1;
                stats.first_failure.get_or_insert_with(|| format!("case {case}: {msg}"));
            }
        }
    }
    stats
}

fn run_case(check: Check, g: &mut Generator, cfg: &VerifyConfig) -> Result<Outcome> {
    match check {
        Check::Theorem1 => theorem1(&g.weight_program(), cfg.cap),
        Check::Theorem2 => theorem2(&g.weight_program(), cfg.cap),
        Check::Proposition1 => Ok(proposition1(g)),
        Check::Proposition2 => proposition2(&g.weight_program(), cfg),
        Check::Proposition3 => proposition3(&g.weight_program()),
        Check::Proposition4 => {
            let p1 = g.weight_program();
            let p2 = g.related_program(&p1);
            proposition4(&p1, &p2, g, cfg)
        }
        Check::Lemma1 => Ok(lemma1(g)),
        Check::Lemma2 => Ok(lemma2(g)),
        Check::Lemma3 => Ok(lemma3(g)),
        Check::Lemma8 => lemma8(g, cfg.ht_cap),
        Check::Completion => completion_case(&g.weight_program(), cfg.cap),
    }
}

fn show(sets: &[Interpretation]) -> String {
    sets.iter().map(|z| z.to_string()).collect::<Vec<_>>().join(" ")
}

fn verdict(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail(msg())
    }
}

pub fn theorem1(p: &WProgram, cap: usize) -> Result<Outcome> {
    let w = answer_sets_w(p, cap)?;
    let n = answer_sets_n(&tr_basic(p)?.output, cap)?;
    Ok(verdict(w == n, || format!("{p}\nweight: {}\nnested: {}", show(&w), show(&n))))
}

/// Largest signature on which the completion-based solver is re-checked
/// by brute force.
pub const BRUTE_FORCE_CROSS_CHECK: usize = 10;

/// Answer sets of a nonnested program from the completion-based solver,
/// confirmed by brute force when the signature is small enough.
pub fn nonnested_answer_sets(p: &crate::syntax::NProgram, cap: usize) -> Result<Vec<Interpretation>> {
    let fast = stable_models(p)?;
    if p.signature().len() <= cap.min(BRUTE_FORCE_CROSS_CHECK) {
        let brute = answer_sets_n(p, cap)?;
        if brute != fast {
            return Err(Error::SolverMismatch(format!(
                "brute force {} vs completion {}",
                show(&brute),
                show(&fast)
            )));
        }
    }
    Ok(fast)
}

pub fn theorem2(p: &WProgram, cap: usize) -> Result<Outcome> {
    let expected = answer_sets_w(p, cap)?;
    let report = tr_nn(p)?;
    let sets = nonnested_answer_sets(&report.output, cap)?;
    let mut image: Vec<Interpretation> = sets.iter().map(|z| z.without_atoms(&report.q_omega)).collect();
    image.sort();
    let distinct: BTreeSet<&Interpretation> = image.iter().collect();
    let injective = distinct.len() == image.len();
    Ok(verdict(injective && image == expected, || {
        format!(
            "{}\nweight: {}\nprojected: {} (injective: {injective})",
            p,
            show(&expected),
            show(&image)
        )
    }))
}

fn proposition1(g: &mut Generator) -> Outcome {
    let atoms = g.atoms();
    let c = g.constraint(&atoms);
    let z = g.interpretation(&atoms);
    let fs: Vec<(Formula, Rational)> = c
        .pairs()
        .iter()
        .map(|p| (Formula::element(&p.element), p.weight.clone()))
        .collect();
    let bound = g.bound_for(c.pairs());
    let mode = if g.rng().random_bool(0.5) {
        ThresholdMode::AtLeast
    } else {
        ThresholdMode::GreaterThan
    };
    let sum: Rational = c
        .pairs()
        .iter()
        .filter(|p| z.contains(&p.element.lit) != p.element.naf)
        .map(|p| p.weight.clone())
        .sum();
    let expected = match mode {
        ThresholdMode::AtLeast => bound.le_value(&sum),
        ThresholdMode::GreaterThan => bound.lt_value(&sum),
    };
    let got = satisfies_formula(&z, &threshold_formula(&fs, &bound, mode));
    verdict(got == expected, || format!("{c} bound {bound} {mode:?} Z={z}"))
}

pub fn proposition2(p: &WProgram, cfg: &VerifyConfig) -> Result<Outcome> {
    let basic = tr_basic(p)?.output;
    let nd = tr_nd(p)?.output;
    let ht = strong_eq_nested(&nd, &basic, cfg.ht_cap)?;
    let same = answer_sets_n(&nd, cfg.cap)? == answer_sets_n(&basic, cfg.cap)?;
    Ok(verdict(ht.is_equivalent() && same, || format!("{p}\n{ht:?}")))
}

/// `2·Σ L(C)·(W(C)+L(C)+2)` over the constraints of `p`.
pub fn proposition3_bound(p: &WProgram) -> Rational {
    let two = Rational::from_integer(2.into());
    p.constraints()
        .map(|c| {
            let l = Rational::from_integer(c.length().into());
            &two * &l * (c.weight() + &l + &two)
        })
        .sum()
}

pub fn proposition3(p: &WProgram) -> Result<Outcome> {
    let count = tr_nn(p)?.weight_atom_count;
    let bound = proposition3_bound(p) + Rational::from_integer(PROPOSITION3_CONSTANT.into());
    Ok(verdict(Rational::from_integer(count.into()) <= bound, || {
        format!("{p}\nweight atoms {count} > {bound}")
    }))
}

pub fn proposition4(p1: &WProgram, p2: &WProgram, g: &mut Generator, cfg: &VerifyConfig) -> Result<Outcome> {
    let ht = strong_eq_weight(p1, p2, cfg.ht_cap)?;
    let turner = turner_strong_eq(p1, p2, cfg.cap)?;
    if ht.is_equivalent() != turner.is_equivalent() {
        return Ok(Outcome::Fail(format!("{p1}\nvs\n{p2}\nht: {ht:?}\nturner: {turner:?}")));
    }
    if !ht.is_equivalent() {
        return Ok(Outcome::Pass);
    }
    let atoms = signature(&p1.union(p2));
    if atoms.is_empty() {
        return Ok(Outcome::Pass);
    }
    for _ in 0..cfg.extensions {
        let ext = g.unary_program(&atoms);
        let a = answer_sets_w(&p1.union(&ext), cfg.cap)?;
        let b = answer_sets_w(&p2.union(&ext), cfg.cap)?;
        if a != b {
            return Ok(Outcome::Fail(format!(
                "{p1}\nvs\n{p2}\nextended by\n{ext}\n{} vs {}",
                show(&a),
                show(&b)
            )));
        }
    }
    Ok(Outcome::Pass)
}

fn lemma1(g: &mut Generator) -> Outcome {
    let atoms = g.atoms();
    let c = g.constraint(&atoms);
    let z = g.interpretation(&atoms);
    let lhs = satisfies_formula(&z, &tr_constraint(&c));
    verdict(lhs == satisfies_wc(&z, &c), || format!("{c} Z={z}"))
}

fn lemma2(g: &mut Generator) -> Outcome {
    let atoms = g.atoms();
    let c = g.lower_constraint(&atoms);
    let z = g.interpretation(&atoms);
    let z2 = g.interpretation(&atoms);
    let lhs = satisfies_formula(&z2, &reduct_formula(&tr_lower(&c), &z));
    let rhs = satisfies_wc(&z2, &reduct_lower(&c, &z));
    verdict(lhs == rhs, || format!("{c} Z={z} Z'={z2}"))
}

fn lemma3(g: &mut Generator) -> Outcome {
    let atoms = g.atoms();
    let c = g.upper_constraint(&atoms);
    let z = g.interpretation(&atoms);
    let r = reduct_formula(&tr_upper(&c), &z);
    let expected = if satisfies_wc(&z, &c) {
        Formula::Top
    } else {
        Formula::Bot
    };
    verdict(r == expected, || format!("{c} Z={z}: reduct {r}"))
}

fn lemma8(g: &mut Generator, ht_cap: usize) -> Result<Outcome> {
    let atoms = g.atoms();
    let pairs = g.pairs(&atoms);
    let w = g.bound_for(&pairs);
    let relation = if g.rng().random_bool(0.5) {
        Relation::Le
    } else {
        Relation::Lt
    };
    let lhs = weight_formula(relation, &w, &pairs);
    let rhs = unfold_weight_formula(relation, &w, &pairs);
    let ok = ht_equivalent_formulas(&lhs, &rhs, ht_cap)?;
    Ok(verdict(ok, || format!("{relation:?} {w}: {lhs}  vs  {rhs}")))
}

/// Tight translations must pass; non-tight ones are counted as passes of
/// the refusal path.
pub fn completion_case(p: &WProgram, cap: usize) -> Result<Outcome> {
    match verify_completion(p, cap) {
        Ok(r) => Ok(verdict(r.passed(), || {
            format!("{p}\ncompletion: {}\nanswer sets: {}", show(&r.models), show(&r.answer_sets))
        })),
        Err(Error::NotTight) => {
            let input = crate::completion::completion_input(p)?;
            Ok(verdict(!is_tight(&input.program), || format!("{p}: refused but tight")))
        }
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(check: Check) -> CheckStats {
        run_check(
            check,
            &VerifyConfig {
                cases: 30,
                extensions: 10,
                ..VerifyConfig::default()
            },
        )
    }

    #[test]
    fn every_check_passes_on_a_small_corpus() {
        for c in Check::ALL {
            let s = small(c);
            assert!(s.ok(), "{c}: {:?}", s.first_failure);
            assert_eq!(s.passed + s.skipped, 30);
        }
    }

    #[test]
    fn numbering() {
        assert_eq!(Check::theorem(2), Some(Check::Theorem2));
        assert_eq!(Check::lemma(8), Some(Check::Lemma8));
        assert_eq!(Check::lemma(4), None);
        assert_eq!(Check::proposition(3), Some(Check::Proposition3));
    }

    #[test]
    fn runs_are_deterministic() {
        assert_eq!(small(Check::Theorem1), small(Check::Theorem1));
    }
}

//! Translations from weight programs into programs with nested
//! expressions: the basic translation, the nondisjunctive translation, and
//! the nonnested translation with auxiliary atoms.

use std::collections::{BTreeSet, HashMap, HashSet};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ht::strong_eq_nested;
use crate::syntax::{
    aux_name, big_and, big_or, Atom, AtomKind, AuxPayload, Bound, Formula, NProgram, NRule,
    Rational, Relation, Signature, WProgram, WRule, WeightConstraint, WeightPair, RESERVED_PREFIX,
};
use crate::universe::DEFAULT_CAP;

/// Longest constraint accepted by the exponential translations.
pub const MAX_EXPANDED_LENGTH: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThresholdMode {
    /// `bound ≤ Σ`
    AtLeast,
    /// `bound < Σ`
    GreaterThan,
}

fn meets(sum: &Rational, bound: &Bound, mode: ThresholdMode) -> bool {
    match mode {
        ThresholdMode::AtLeast => bound.le_value(sum),
        ThresholdMode::GreaterThan => bound.lt_value(sum),
    }
}

fn qualifying_sets(weights: &[Rational], bound: &Bound, mode: ThresholdMode) -> Vec<u32> {
    (0..1u32 << weights.len())
        .filter(|&mask| {
            let sum: Rational = weights
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, w)| w.clone())
                .sum();
            meets(&sum, bound, mode)
        })
        .collect()
}

fn disjunction_of(fs: &[(Formula, Rational)], sets: &[u32]) -> Formula {
    big_or(
        sets.iter()
            .map(|&mask| {
                big_and(
                    fs.iter()
                        .enumerate()
                        .filter(|(i, _)| mask & (1 << i) != 0)
                        .map(|(_, (f, _))| f.clone())
                        .collect(),
                )
            })
            .collect(),
    )
}

/// `⟨F₁,…,F_m⟩ : {I : bound ≤ Σ_{i∈I} wᵢ}` (or `<`): the disjunction, over
/// every qualifying `I` in binary-counting order, of the conjunction of the
/// selected formulas.
pub fn threshold_formula(fs: &[(Formula, Rational)], bound: &Bound, mode: ThresholdMode) -> Formula {
    let weights: Vec<Rational> = fs.iter().map(|(_, w)| w.clone()).collect();
    disjunction_of(fs, &qualifying_sets(&weights, bound, mode))
}

/// As [`threshold_formula`], restricted to the subset-minimal qualifying
/// sets. Weights are nonnegative, so the qualifying sets are closed upward
/// and a set is minimal iff dropping any one index disqualifies it.
pub fn minimize_antichain(fs: &[(Formula, Rational)], bound: &Bound, mode: ThresholdMode) -> Formula {
    let weights: Vec<Rational> = fs.iter().map(|(_, w)| w.clone()).collect();
    let sets = qualifying_sets(&weights, bound, mode);
    let members: HashSet<u32> = sets.iter().copied().collect();
    let minimal: Vec<u32> = sets
        .into_iter()
        .filter(|&mask| (0..fs.len()).all(|i| mask & (1 << i) == 0 || !members.contains(&(mask & !(1 << i)))))
        .collect();
    disjunction_of(fs, &minimal)
}

fn element_formulas(c: &WeightConstraint) -> Vec<(Formula, Rational)> {
    c.pairs()
        .iter()
        .map(|p| (Formula::element(&p.element), p.weight.clone()))
        .collect()
}

/// `[L ≤ S]`; `⊤` when `L = −∞`.
pub fn tr_lower(c: &WeightConstraint) -> Formula {
    match c.lower() {
        Bound::NegInf => Formula::Top,
        l => threshold_formula(&element_formulas(c), l, ThresholdMode::AtLeast),
    }
}

/// `[S ≤ U] = not [U < S]`; `⊤` when `U = +∞`.
pub fn tr_upper(c: &WeightConstraint) -> Formula {
    match c.upper() {
        Bound::PosInf => Formula::Top,
        u => Formula::not(threshold_formula(&element_formulas(c), u, ThresholdMode::GreaterThan)),
    }
}

/// `[L ≤ S ≤ U] = [L ≤ S], [S ≤ U]`, where a constraint with an infinite
/// bound is translated as the corresponding one-sided constraint.
pub fn tr_constraint(c: &WeightConstraint) -> Formula {
    match (c.lower(), c.upper()) {
        (_, Bound::PosInf) => tr_lower(c),
        (Bound::NegInf, _) => tr_upper(c),
        _ => Formula::And(vec![tr_lower(c), tr_upper(c)]),
    }
}

/// `[S ≤ U]` for integer weights, written `not [⌊U⌋+1 ≤ S]`.
pub fn simplify_integer_upper(c: &WeightConstraint) -> Result<Formula> {
    integer_upper(c, threshold_formula)
}

fn integer_upper(
    c: &WeightConstraint,
    build: fn(&[(Formula, Rational)], &Bound, ThresholdMode) -> Formula,
) -> Result<Formula> {
    if let Some(p) = c.pairs().iter().find(|p| !p.weight.is_integer()) {
        return Err(Error::NonIntegerWeight(format!("{} = {}", p.element, p.weight)));
    }
    Ok(match c.upper() {
        Bound::PosInf => Formula::Top,
        Bound::NegInf => Formula::not(Formula::Top),
        Bound::Finite(u) => {
            let threshold = Bound::Finite(u.floor() + Rational::from_integer(1.into()));
            Formula::not(build(&element_formulas(c), &threshold, ThresholdMode::AtLeast))
        }
    })
}

/// HT-valid local rewrites: flatten nested `,`/`;`, absorb `⊤`/`⊥`, and
/// collapse singletons.
pub fn simplify(f: &Formula) -> Formula {
    match f {
        Formula::And(fs) => {
            let mut out = Vec::new();
            for g in fs.iter().map(simplify) {
                match g {
                    Formula::Top => {}
                    Formula::Bot => return Formula::Bot,
                    Formula::And(hs) => out.extend(hs),
                    other => out.push(other),
                }
            }
            big_and(out)
        }
        Formula::Or(fs) => {
            let mut out = Vec::new();
            for g in fs.iter().map(simplify) {
                match g {
                    Formula::Bot => {}
                    Formula::Top => return Formula::Top,
                    Formula::Or(hs) => out.extend(hs),
                    other => out.push(other),
                }
            }
            big_or(out)
        }
        Formula::Not(g) => match simplify(g) {
            Formula::Top => Formula::Bot,
            Formula::Bot => Formula::Top,
            h => Formula::not(h),
        },
        other => other.clone(),
    }
}

fn simplified_constraint(c: &WeightConstraint) -> Formula {
    let lower = match c.lower() {
        Bound::NegInf => Formula::Top,
        l => minimize_antichain(&element_formulas(c), l, ThresholdMode::AtLeast),
    };
    let upper = if c.has_integer_weights() {
        integer_upper(c, minimize_antichain).expect("weights are integers")
    } else {
        match c.upper() {
            Bound::PosInf => Formula::Top,
            u => Formula::not(minimize_antichain(&element_formulas(c), u, ThresholdMode::GreaterThan)),
        }
    };
    simplify(&Formula::And(vec![lower, upper]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TranslateOptions {
    /// Apply antichain minimization, the integer upper-bound rewrite and
    /// `⊤`/`⊥` absorption, checking every rewritten rule for strong
    /// equivalence with its raw form.
    pub simplify: bool,
    /// Signature limit for the per-rule self-check; larger rules are not
    /// checked.
    pub check_cap: usize,
}

impl Default for TranslateOptions {
    fn default() -> Self {
        Self {
            simplify: false,
            check_cap: DEFAULT_CAP,
        }
    }
}

impl TranslateOptions {
    pub fn simplified() -> Self {
        Self {
            simplify: true,
            ..Self::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintMetrics {
    pub length: usize,
    pub weight: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TranslationReport {
    pub output: NProgram,
    pub q_omega: BTreeSet<Atom>,
    pub weight_atom_count: usize,
    pub rule_count: usize,
    /// L(C) and W(C) for every constraint of the source, heads first within
    /// each rule.
    pub constraints: Vec<ConstraintMetrics>,
}

impl TranslationReport {
    fn new(output: NProgram, source: &WProgram) -> Self {
        let q_omega = output.aux_atoms.clone();
        let weight_atom_count = q_omega.iter().filter(|a| a.kind() == AtomKind::AuxWeight).count();
        let rule_count = output.rules.len();
        Self {
            output,
            q_omega,
            weight_atom_count,
            rule_count,
            constraints: constraint_metrics(source),
        }
    }
}

pub fn constraint_metrics(p: &WProgram) -> Vec<ConstraintMetrics> {
    p.constraints()
        .map(|c| ConstraintMetrics {
            length: c.length(),
            weight: c.weight(),
        })
        .collect()
}

fn check_lengths(p: &WProgram) -> Result<()> {
    match p.constraints().find(|c| c.length() > MAX_EXPANDED_LENGTH) {
        Some(c) => Err(Error::ConstraintTooLong {
            length: c.length(),
            limit: MAX_EXPANDED_LENGTH,
        }),
        None => Ok(()),
    }
}

fn choice(l: &crate::syntax::Literal) -> Formula {
    Formula::Or(vec![Formula::Lit(l.clone()), Formula::not(Formula::Lit(l.clone()))])
}

fn self_check(raw: &NRule, simplified: &NRule, cap: usize) -> Result<()> {
    let p1 = NProgram::new(vec![raw.clone()]);
    let p2 = NProgram::new(vec![simplified.clone()]);
    // Renamed atoms double the count for classically negated atoms.
    if p1.signature().len() * 2 > cap {
        return Ok(());
    }
    if strong_eq_nested(&p1, &p2, cap)?.is_equivalent() {
        Ok(())
    } else {
        Err(Error::SimplificationMismatch(format!("{raw}  vs  {simplified}")))
    }
}

/// How one weight rule is turned into nested rules, given a constraint
/// translator.
fn basic_rule(r: &WRule, tr: &dyn Fn(&WeightConstraint) -> Formula) -> NRule {
    let mut head: Vec<Formula> = r.head.positive_literals().iter().map(choice).collect();
    head.push(tr(&r.head));
    NRule::new(big_and(head), big_and(r.body.iter().map(tr).collect()))
}

fn nd_rules(r: &WRule, tr: &dyn Fn(&WeightConstraint) -> Formula) -> Vec<NRule> {
    let body: Vec<Formula> = r.body.iter().map(tr).collect();
    let mut out: Vec<NRule> = r
        .head
        .positive_literals()
        .into_iter()
        .map(|l| {
            let mut b = vec![Formula::not(Formula::not(Formula::Lit(l.clone())))];
            b.extend(body.iter().cloned());
            NRule::new(Formula::Lit(l), big_and(b))
        })
        .collect();
    let mut b = vec![Formula::not(tr(&r.head))];
    b.extend(body);
    out.push(NRule::new(Formula::Bot, big_and(b)));
    out
}

/// Rewrites one rule given a constraint translation.
type RuleTranslation = fn(&WRule, &dyn Fn(&WeightConstraint) -> Formula) -> Vec<NRule>;

fn translate_rules(p: &WProgram, opts: &TranslateOptions, per_rule: RuleTranslation) -> Result<NProgram> {
    check_lengths(p)?;
    let mut rules = Vec::new();
    for r in &p.rules {
        let raw = per_rule(r, &tr_constraint);
        if opts.simplify {
            let simp = per_rule(r, &simplified_constraint);
            for (a, b) in raw.iter().zip(&simp) {
                let b = NRule::new(simplify(&b.head), simplify(&b.body));
                self_check(a, &b, opts.check_cap)?;
                rules.push(b);
            }
        } else {
            rules.extend(raw);
        }
    }
    Ok(NProgram::new(rules))
}

/// `[Ω]`: each rule becomes
/// `(l₁; not l₁), …, (l_p; not l_p), [C₀] ← [C₁], …, [C_n]`.
pub fn tr_basic(p: &WProgram) -> Result<TranslationReport> {
    tr_basic_with(p, &TranslateOptions::default())
}

pub fn tr_basic_with(p: &WProgram, opts: &TranslateOptions) -> Result<TranslationReport> {
    let out = translate_rules(p, opts, |r, tr| vec![basic_rule(r, tr)])?;
    Ok(TranslationReport::new(out, p))
}

/// `[Ω]^{nd}`: `l_j ← not not l_j, [C₁], …` for each positive head element,
/// plus `⊥ ← not [C₀], [C₁], …`.
pub fn tr_nd(p: &WProgram) -> Result<TranslationReport> {
    tr_nd_with(p, &TranslateOptions::default())
}

pub fn tr_nd_with(p: &WProgram, opts: &TranslateOptions) -> Result<TranslationReport> {
    let out = translate_rules(p, opts, nd_rules)?;
    Ok(TranslationReport::new(out, p))
}

#[derive(Clone, Debug)]
struct WeightAtom {
    relation: Relation,
    bound: Bound,
    prefix: Vec<WeightPair>,
}

#[derive(Default)]
struct NonnestedBuilder {
    rules: Vec<NRule>,
    seen_rules: HashSet<NRule>,
    weight_atoms: HashMap<Atom, WeightAtom>,
    aux: BTreeSet<Atom>,
}

impl NonnestedBuilder {
    fn push(&mut self, r: NRule) {
        if self.seen_rules.insert(r.clone()) {
            self.rules.push(r);
        }
    }

    fn weight_atom(&mut self, relation: Relation, bound: &Bound, prefix: &[WeightPair]) -> Formula {
        let atom = aux_name(AuxPayload::Weight {
            relation,
            bound,
            prefix,
        });
        self.weight_atoms.entry(atom.clone()).or_insert_with(|| WeightAtom {
            relation,
            bound: bound.clone(),
            prefix: prefix.to_vec(),
        });
        self.aux.insert(atom.clone());
        Formula::Lit(crate::syntax::Literal::pos(atom))
    }

    /// `[L ≤ S ≤ U]^{nn} = q_{L≤S}, not q_{U<S}`.
    fn constraint(&mut self, c: &WeightConstraint) -> Vec<Formula> {
        vec![
            self.weight_atom(Relation::Le, c.lower(), c.pairs()),
            Formula::not(self.weight_atom(Relation::Lt, c.upper(), c.pairs())),
        ]
    }

    fn definitions(&mut self, atom: &Atom) -> Vec<NRule> {
        let Some(def) = self.weight_atoms.get(atom).cloned() else {
            return Vec::new();
        };
        let head = Formula::Lit(crate::syntax::Literal::pos(atom.clone()));
        let total: Rational = def.prefix.iter().map(|p| p.weight.clone()).sum();
        let zero = Rational::zero();
        let (is_fact, is_pair) = match def.relation {
            Relation::Le => (def.bound.le_value(&zero), !def.bound.le_value(&zero) && def.bound.le_value(&total)),
            Relation::Lt => (def.bound.lt_value(&zero), !def.bound.lt_value(&zero) && def.bound.lt_value(&total)),
        };
        if is_fact {
            return vec![NRule::fact(head)];
        }
        if !is_pair {
            return Vec::new();
        }
        let (last, shorter) = def.prefix.split_last().expect("positive total weight");
        let without = self.weight_atom(def.relation, &def.bound, shorter);
        let with = self.weight_atom(def.relation, &def.bound.minus(&last.weight), shorter);
        vec![
            NRule::new(head.clone(), without),
            NRule::new(head, Formula::And(vec![Formula::element(&last.element), with])),
        ]
    }

    /// Add definitions for every weight atom in order of first reference
    /// until the program is closed.
    fn close(&mut self) {
        let mut defined = HashSet::new();
        let mut i = 0;
        while i < self.rules.len() {
            let atoms = NProgram::new(vec![self.rules[i].clone()]).signature();
            for a in atoms {
                if a.kind() == AtomKind::AuxWeight && defined.insert(a.clone()) {
                    for r in self.definitions(&a) {
                        self.push(r);
                    }
                }
            }
            i += 1;
        }
    }
}

/// `[Ω]^{nn}`: the smallest closed nonnested program containing, for every
/// rule, `q_{not l} ← not l` and `l ← not q_{not l}, [C₁]^{nn}, …` for each
/// positive head element `l`, and the constraints
/// `⊥ ← not q_{L₀≤S₀}, …` and `⊥ ← q_{U₀<S₀}, …`.
pub fn tr_nn(p: &WProgram) -> Result<TranslationReport> {
    if let Some(a) = p.signature().into_iter().find(|a| a.name().starts_with(RESERVED_PREFIX)) {
        return Err(Error::ReservedPrefix(a.name().to_string()));
    }
    let mut b = NonnestedBuilder::default();
    for r in &p.rules {
        let body: Vec<Formula> = r.body.iter().flat_map(|c| b.constraint(c)).collect();
        for l in r.head.positive_literals() {
            let q = aux_name(AuxPayload::Naf(&l));
            b.aux.insert(q.clone());
            let q = Formula::Lit(crate::syntax::Literal::pos(q));
            b.push(NRule::new(q.clone(), Formula::not(Formula::Lit(l.clone()))));
            let mut choice_body = vec![Formula::not(q)];
            choice_body.extend(body.iter().cloned());
            b.push(NRule::new(Formula::Lit(l), big_and(choice_body)));
        }
        let [lower, upper]: [Formula; 2] = b.constraint(&r.head).try_into().unwrap();
        let mut low_body = vec![Formula::not(lower)];
        low_body.extend(body.iter().cloned());
        b.push(NRule::new(Formula::Bot, big_and(low_body)));
        let upper = match upper {
            Formula::Not(q) => *q,
            _ => unreachable!(),
        };
        let mut up_body = vec![upper];
        up_body.extend(body);
        b.push(NRule::new(Formula::Bot, big_and(up_body)));
    }
    b.close();
    let output = NProgram {
        rules: b.rules,
        aux_atoms: b.aux,
    };
    Ok(TranslationReport::new(output, p))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SizeMetrics {
    pub constraints: Vec<ConstraintMetrics>,
    pub weight_atoms: usize,
    /// `Σ L(C)·W(C)` over all constraints.
    pub length_weight_sum: Rational,
}

pub fn size_metrics(p: &WProgram) -> Result<SizeMetrics> {
    let report = tr_nn(p)?;
    let length_weight_sum = report
        .constraints
        .iter()
        .map(|m| Rational::from_integer(m.length.into()) * &m.weight)
        .sum();
    Ok(SizeMetrics {
        constraints: report.constraints,
        weight_atoms: report.weight_atom_count,
        length_weight_sum,
    })
}

/// `[w ≤ S]` or `[w < S]` over the pairs of `S`.
pub fn weight_formula(relation: Relation, bound: &Bound, pairs: &[WeightPair]) -> Formula {
    let fs: Vec<(Formula, Rational)> = pairs
        .iter()
        .map(|p| (Formula::element(&p.element), p.weight.clone()))
        .collect();
    let mode = match relation {
        Relation::Le => ThresholdMode::AtLeast,
        Relation::Lt => ThresholdMode::GreaterThan,
    };
    threshold_formula(&fs, bound, mode)
}

/// One step of the case split that the closure rules mirror:
/// `⊤` below the range, `[w≤S′] ; (c_m, [w−w_m≤S′])` inside it, `⊥` above
/// (and dually for `<`).
pub fn unfold_weight_formula(relation: Relation, bound: &Bound, pairs: &[WeightPair]) -> Formula {
    let total: Rational = pairs.iter().map(|p| p.weight.clone()).sum();
    let zero = Rational::zero();
    let (below, inside) = match relation {
        Relation::Le => (bound.le_value(&zero), bound.le_value(&total)),
        Relation::Lt => (bound.lt_value(&zero), bound.lt_value(&total)),
    };
    if below {
        return Formula::Top;
    }
    if !inside {
        return Formula::Bot;
    }
    let (last, shorter) = pairs.split_last().expect("positive total weight");
    Formula::Or(vec![
        weight_formula(relation, bound, shorter),
        Formula::And(vec![
            Formula::element(&last.element),
            weight_formula(relation, &bound.minus(&last.weight), shorter),
        ]),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ht::ht_equivalent_formulas;
    use crate::nsem::answer_sets_n;
    use crate::parser::{parse_formula, parse_nested_program, parse_weight_program, print_nested_program};
    use crate::wsem::answer_sets_w;

    fn w(t: &str) -> WProgram {
        parse_weight_program(t).unwrap()
    }

    fn f(t: &str) -> Formula {
        parse_formula(t).unwrap()
    }

    fn int(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn ab() -> Vec<(Formula, Rational)> {
        vec![(f("a"), int(1)), (f("b"), int(1))]
    }

    #[test]
    fn thresholds() {
        let t = threshold_formula(&ab(), &Bound::int(0), ThresholdMode::AtLeast);
        assert_eq!(t.to_string(), "top; a; b; a, b");
        let t = threshold_formula(&ab(), &Bound::int(1), ThresholdMode::GreaterThan);
        assert_eq!(t, f("a, b"));
        assert_eq!(threshold_formula(&[], &Bound::int(1), ThresholdMode::AtLeast), Formula::Bot);
    }

    #[test]
    fn antichain_minimization() {
        assert_eq!(minimize_antichain(&ab(), &Bound::int(0), ThresholdMode::AtLeast), Formula::Top);
        assert_eq!(minimize_antichain(&ab(), &Bound::int(1), ThresholdMode::AtLeast), f("a; b"));
        assert_eq!(minimize_antichain(&[(f("a"), int(2))], &Bound::int(1), ThresholdMode::AtLeast), f("a"));
    }

    #[test]
    fn constraint_translations() {
        let c = w("0 <= {a, b} <= 1.").rules[0].head.clone();
        let raw = tr_constraint(&c);
        assert_eq!(raw.to_string(), "(top; a; b; a, b), not (a, b)");
        assert!(ht_equivalent_formulas(&raw, &f("not (a, b)"), 14).unwrap());
        let one = w("c.").rules[0].head.clone();
        assert_eq!(tr_lower(&one), f("c"));
        let empty = WeightConstraint::empty_head();
        assert_eq!(tr_lower(&empty), Formula::Bot);
    }

    #[test]
    fn integer_upper_rewrite() {
        let c = w("{a, b} <= 1.").rules[0].head.clone();
        assert_eq!(simplify_integer_upper(&c).unwrap(), f("not (a, b)"));
        let c = w("{a} <= 0.").rules[0].head.clone();
        assert_eq!(simplify_integer_upper(&c).unwrap(), f("not a"));
        let c = w("{} <= 5.").rules[0].head.clone();
        assert_eq!(simplify_integer_upper(&c).unwrap(), f("not bot"));
        let c = w("{a=1/2} <= 5.").rules[0].head.clone();
        assert!(matches!(simplify_integer_upper(&c), Err(Error::NonIntegerWeight(_))));
        for t in ["{a, b=2, not c} <= 2.", "{a=3, -b} <= 0.", "{a=2, b=2} <= 3."] {
            let c = w(t).rules[0].head.clone();
            assert!(ht_equivalent_formulas(&simplify_integer_upper(&c).unwrap(), &tr_upper(&c), 14).unwrap(), "{t}");
        }
    }

    #[test]
    fn basic_translation_of_choice() {
        let r = tr_basic(&w("0 <= {a, b} <= 1.")).unwrap();
        assert!(r.q_omega.is_empty());
        let expected = parse_nested_program("(a; not a), (b; not b), not (a, b).").unwrap();
        assert!(strong_eq_nested(&r.output, &expected, 14).unwrap().is_equivalent());
        let s = tr_basic_with(&w("0 <= {a, b} <= 1."), &TranslateOptions::simplified()).unwrap();
        assert_eq!(print_nested_program(&s.output), "(a; not a), (b; not b), not (a, b).\n");
    }

    #[test]
    fn basic_translation_of_weight_rule() {
        let r = tr_basic(&w("1 <= {a=2} <= 2 :- 1 <= {not a=3, not b=2} <= 4.")).unwrap();
        let expected = parse_nested_program("a :- (not a; not b), not (not a, not b).").unwrap();
        assert!(strong_eq_nested(&r.output, &expected, 14).unwrap().is_equivalent());
    }

    #[test]
    fn basic_translation_of_fact() {
        let r = tr_basic(&w("p.")).unwrap();
        assert_eq!(print_nested_program(&r.output), "(p; not p), p.\n");
        assert_eq!(answer_sets_n(&r.output, 16).unwrap().len(), 1);
    }

    #[test]
    fn nondisjunctive_translation() {
        let r = tr_nd(&w("0 <= {a, b} <= 1.")).unwrap();
        let text = print_nested_program(&r.output);
        assert_eq!(
            text,
            "a :- not not a.\nb :- not not b.\nbot :- not ((top; a; b; a, b), not (a, b)).\n"
        );
        let corrected = parse_nested_program("a :- not not a. b :- not not b. bot :- not not (a, b).").unwrap();
        assert!(strong_eq_nested(&r.output, &corrected, 14).unwrap().is_equivalent());
        let p = tr_nd(&w("p.")).unwrap();
        assert_eq!(print_nested_program(&p.output), "p :- not not p.\nbot :- not p.\n");
        assert!(tr_nd(&WProgram::default()).unwrap().output.rules.is_empty());
    }

    #[test]
    fn nonnested_translation_of_choice() {
        let r = tr_nn(&w("0 <= {a, b} <= 1.")).unwrap();
        let expected = "\
q_not_a :- not a.
a :- not q_not_a.
q_not_b :- not b.
b :- not q_not_b.
bot :- not q_0_le_a_1_b_1.
bot :- q_1_lt_a_1_b_1.
q_0_le_a_1_b_1.
q_1_lt_a_1_b_1 :- q_1_lt_a_1.
q_1_lt_a_1_b_1 :- b, q_0_lt_a_1.
q_0_lt_a_1 :- q_0_lt.
q_0_lt_a_1 :- a, q_m1_lt.
q_m1_lt.
";
        assert_eq!(print_nested_program(&r.output), expected);
        assert_eq!(r.rule_count, 12);
        assert_eq!(r.weight_atom_count, 6);
        assert_eq!(r.q_omega.len(), 8);
    }

    #[test]
    fn unreachable_weight_atom_has_no_rules() {
        let p = w("p :- 3 <= {a}. a.");
        let r = tr_nn(&p).unwrap();
        let text = print_nested_program(&r.output);
        assert!(text.contains("q_3_le_a_1"));
        assert!(!text.contains("q_3_le_a_1 :-") && !text.contains("q_3_le_a_1.\n"));
        let projected: Vec<_> = crate::completion::stable_models(&r.output)
            .unwrap()
            .iter()
            .map(|z| z.without_atoms(&r.q_omega))
            .collect();
        assert_eq!(projected, answer_sets_w(&p, 16).unwrap());
    }

    #[test]
    fn reserved_prefix_rejected() {
        use crate::syntax::{Literal, RuleElement};
        let bad = WProgram::new(vec![WRule::new(
            WeightConstraint::element(RuleElement::positive(Literal::pos(Atom::new("q_x")))),
            vec![],
        )]);
        assert!(matches!(tr_nn(&bad), Err(Error::ReservedPrefix(_))));
    }

    #[test]
    fn long_constraints_refused() {
        let names: Vec<String> = (0..21).map(|i| format!("a{i}")).collect();
        let p = w(&format!("{{{}}}.", names.join(", ")));
        assert!(matches!(tr_basic(&p), Err(Error::ConstraintTooLong { length: 21, .. })));
        assert!(tr_nn(&p).is_ok());
    }

    #[test]
    fn metrics() {
        let m = size_metrics(&w("0 <= {a, b} <= 1.")).unwrap();
        assert_eq!(m.constraints, vec![ConstraintMetrics { length: 2, weight: int(2) }]);
        assert_eq!(m.weight_atoms, 6);
        let e = size_metrics(&WProgram::default()).unwrap();
        assert!(e.constraints.is_empty() && e.weight_atoms == 0);
    }

    #[test]
    fn simplify_rewrites() {
        assert_eq!(simplify(&f("(a, top), ((b, c), top)")), f("a, b, c"));
        assert_eq!(simplify(&f("a; bot; (b; top)")), Formula::Top);
        assert_eq!(simplify(&f("not top, a")), Formula::Bot);
        assert_eq!(simplify(&f("not not bot")), Formula::Bot);
    }

    #[test]
    fn unfolding_small_case() {
        let p = w("{a=2, b=1}.").rules[0].head.pairs().to_vec();
        let lhs = weight_formula(Relation::Le, &Bound::int(2), &p);
        let rhs = unfold_weight_formula(Relation::Le, &Bound::int(2), &p);
        assert!(ht_equivalent_formulas(&lhs, &rhs, 14).unwrap());
        assert_eq!(unfold_weight_formula(Relation::Lt, &Bound::int(3), &p), Formula::Bot);
        assert_eq!(unfold_weight_formula(Relation::Lt, &Bound::int(-1), &p), Formula::Top);
    }
}

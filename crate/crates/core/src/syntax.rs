//! Abstract syntax shared by both program languages: atoms, literals, rule
//! elements, weight constraints, nested formulas, and interpretations.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::Error;

pub type Rational = BigRational;

/// Names starting with this prefix are reserved for auxiliary atoms.
pub const RESERVED_PREFIX: &str = "q_";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AtomKind {
    User,
    AuxNegation,
    AuxWeight,
    /// Fresh atom standing for a classically negated atom after elimination.
    Renamed,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom {
    name: Arc<str>,
    kind: AtomKind,
}

impl Atom {
    pub fn new(name: impl Into<Arc<str>>) -> Self {
        Self::with_kind(name, AtomKind::User)
    }

    pub fn with_kind(name: impl Into<Arc<str>>, kind: AtomKind) -> Self {
        Self {
            name: name.into(),
            kind,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> AtomKind {
        self.kind
    }

    pub fn is_aux(&self) -> bool {
        matches!(self.kind, AtomKind::AuxNegation | AtomKind::AuxWeight)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub atom: Atom,
    /// Classical negation.
    pub neg: bool,
}

impl Literal {
    pub fn pos(atom: Atom) -> Self {
        Self { atom, neg: false }
    }

    pub fn neg(atom: Atom) -> Self {
        Self { atom, neg: true }
    }

    pub fn complement(&self) -> Self {
        Self {
            atom: self.atom.clone(),
            neg: !self.neg,
        }
    }
}

pub fn complement(l: &Literal) -> Literal {
    l.complement()
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.neg {
            write!(f, "-{}", self.atom)
        } else {
            write!(f, "{}", self.atom)
        }
    }
}

/// A literal, possibly prefixed with negation as failure.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RuleElement {
    pub lit: Literal,
    pub naf: bool,
}

impl RuleElement {
    pub fn positive(lit: Literal) -> Self {
        Self { lit, naf: false }
    }

    pub fn negative(lit: Literal) -> Self {
        Self { lit, naf: true }
    }

    pub fn is_positive(&self) -> bool {
        !self.naf
    }
}

impl fmt::Display for RuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.naf {
            write!(f, "not {}", self.lit)
        } else {
            write!(f, "{}", self.lit)
        }
    }
}

/// A constraint bound: an exact rational or one of the infinities.
///
/// The derived order puts `NegInf` below every finite value and `PosInf`
/// above.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bound {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl Bound {
    pub fn int(n: i64) -> Self {
        Bound::Finite(Rational::from_integer(n.into()))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Bound::Finite(_))
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Bound::Finite(r) => Some(r),
            _ => None,
        }
    }

    /// `self ≤ value` for a finite value.
    pub fn le_value(&self, value: &Rational) -> bool {
        match self {
            Bound::NegInf => true,
            Bound::Finite(r) => r <= value,
            Bound::PosInf => false,
        }
    }

    /// `self < value` for a finite value.
    pub fn lt_value(&self, value: &Rational) -> bool {
        match self {
            Bound::NegInf => true,
            Bound::Finite(r) => r < value,
            Bound::PosInf => false,
        }
    }

    /// `value ≤ self` for a finite value.
    pub fn ge_value(&self, value: &Rational) -> bool {
        match self {
            Bound::NegInf => false,
            Bound::Finite(r) => value <= r,
            Bound::PosInf => true,
        }
    }

    /// Subtract a finite amount; infinities are absorbing.
    pub fn minus(&self, value: &Rational) -> Bound {
        match self {
            Bound::Finite(r) => Bound::Finite(r - value),
            other => other.clone(),
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::NegInf => f.write_str("-inf"),
            Bound::PosInf => f.write_str("inf"),
            Bound::Finite(r) => write_rational(f, r),
        }
    }
}

pub(crate) fn write_rational(f: &mut impl fmt::Write, r: &Rational) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightPair {
    pub element: RuleElement,
    pub weight: Rational,
}

impl WeightPair {
    pub fn new(element: RuleElement, weight: Rational) -> Self {
        Self { element, weight }
    }

    pub fn unit(element: RuleElement) -> Self {
        Self::new(element, Rational::from_integer(1.into()))
    }
}

/// `lower ≤ {c₁ = w₁, …, c_m = w_m} ≤ upper` with nonnegative weights.
///
/// The pair list keeps source order and may repeat elements; every pair
/// contributes to sums independently.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightConstraint {
    lower: Bound,
    pairs: Vec<WeightPair>,
    upper: Bound,
}

impl WeightConstraint {
    pub fn new(lower: Bound, pairs: Vec<WeightPair>, upper: Bound) -> Result<Self, Error> {
        if let Some(p) = pairs.iter().find(|p| p.weight.is_negative()) {
            return Err(Error::NegativeWeight(format!("{} = {}", p.element, p.weight)));
        }
        Ok(Self {
            lower,
            pairs,
            upper,
        })
    }

    /// The element shorthand `c`, read as `1 ≤ {c = 1}`.
    pub fn element(element: RuleElement) -> Self {
        Self {
            lower: Bound::int(1),
            pairs: vec![WeightPair::unit(element)],
            upper: Bound::PosInf,
        }
    }

    /// `1 ≤ {}`, the head of a constraint rule.
    pub fn empty_head() -> Self {
        Self {
            lower: Bound::int(1),
            pairs: Vec::new(),
            upper: Bound::PosInf,
        }
    }

    pub fn lower(&self) -> &Bound {
        &self.lower
    }

    pub fn upper(&self) -> &Bound {
        &self.upper
    }

    pub fn pairs(&self) -> &[WeightPair] {
        &self.pairs
    }

    /// L(C): the number of pairs.
    pub fn length(&self) -> usize {
        self.pairs.len()
    }

    /// W(C): the sum of all weights.
    pub fn weight(&self) -> Rational {
        self.pairs.iter().map(|p| p.weight.clone()).sum()
    }

    /// The `L ≤ S` part (upper bound replaced by +∞).
    pub fn lower_part(&self) -> WeightConstraint {
        Self {
            lower: self.lower.clone(),
            pairs: self.pairs.clone(),
            upper: Bound::PosInf,
        }
    }

    /// The `S ≤ U` part (lower bound replaced by −∞).
    pub fn upper_part(&self) -> WeightConstraint {
        Self {
            lower: Bound::NegInf,
            pairs: self.pairs.clone(),
            upper: self.upper.clone(),
        }
    }

    pub fn is_empty_head(&self) -> bool {
        *self == Self::empty_head()
    }

    /// Upper bound +∞ and no negative elements.
    pub fn is_horn_constraint(&self) -> bool {
        self.upper == Bound::PosInf && self.pairs.iter().all(|p| p.element.is_positive())
    }

    pub fn has_integer_weights(&self) -> bool {
        self.pairs.iter().all(|p| p.weight.is_integer())
    }

    /// Positive elements' literals without repetition, in source order.
    pub fn positive_literals(&self) -> Vec<Literal> {
        let mut seen = HashSet::new();
        self.pairs
            .iter()
            .filter(|p| p.element.is_positive())
            .filter(|p| seen.insert(p.element.lit.clone()))
            .map(|p| p.element.lit.clone())
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WRule {
    pub head: WeightConstraint,
    pub body: Vec<WeightConstraint>,
}

impl WRule {
    pub fn new(head: WeightConstraint, body: Vec<WeightConstraint>) -> Self {
        Self { head, body }
    }

    pub fn constraints(&self) -> impl Iterator<Item = &WeightConstraint> {
        std::iter::once(&self.head).chain(self.body.iter())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct WProgram {
    pub rules: Vec<WRule>,
}

impl WProgram {
    pub fn new(rules: Vec<WRule>) -> Self {
        Self { rules }
    }

    pub fn constraints(&self) -> impl Iterator<Item = &WeightConstraint> {
        self.rules.iter().flat_map(|r| r.constraints())
    }

    pub fn union(&self, other: &WProgram) -> WProgram {
        let mut rules = self.rules.clone();
        rules.extend(other.rules.iter().cloned());
        WProgram { rules }
    }

    pub fn has_integer_weights(&self) -> bool {
        self.constraints().all(|c| c.has_integer_weights())
    }
}

/// Nested expressions.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Bot,
    Top,
    Lit(Literal),
    Not(Box<Formula>),
    And(Vec<Formula>),
    Or(Vec<Formula>),
}

impl Formula {
    pub fn lit(l: Literal) -> Self {
        Formula::Lit(l)
    }

    pub fn atom(name: &str) -> Self {
        Formula::Lit(Literal::pos(Atom::new(name)))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn element(e: &RuleElement) -> Self {
        let l = Formula::Lit(e.lit.clone());
        if e.naf {
            Formula::not(l)
        } else {
            l
        }
    }

    /// True when no `not` occurs.
    pub fn is_naf_free(&self) -> bool {
        match self {
            Formula::Bot | Formula::Top | Formula::Lit(_) => true,
            Formula::Not(_) => false,
            Formula::And(fs) | Formula::Or(fs) => fs.iter().all(Formula::is_naf_free),
        }
    }

    pub fn has_classical_negation(&self) -> bool {
        match self {
            Formula::Bot | Formula::Top => false,
            Formula::Lit(l) => l.neg,
            Formula::Not(f) => f.has_classical_negation(),
            Formula::And(fs) | Formula::Or(fs) => fs.iter().any(Formula::has_classical_negation),
        }
    }

    pub(crate) fn collect_atoms(&self, out: &mut AtomCollector) {
        match self {
            Formula::Bot | Formula::Top => {}
            Formula::Lit(l) => out.push(&l.atom),
            Formula::Not(f) => f.collect_atoms(out),
            Formula::And(fs) | Formula::Or(fs) => fs.iter().for_each(|f| f.collect_atoms(out)),
        }
    }

    /// Apply `f` to every literal, rebuilding the formula.
    pub fn map_literals(&self, f: &mut impl FnMut(&Literal) -> Literal) -> Formula {
        match self {
            Formula::Bot => Formula::Bot,
            Formula::Top => Formula::Top,
            Formula::Lit(l) => Formula::Lit(f(l)),
            Formula::Not(g) => Formula::not(g.map_literals(f)),
            Formula::And(fs) => Formula::And(fs.iter().map(|g| g.map_literals(f)).collect()),
            Formula::Or(fs) => Formula::Or(fs.iter().map(|g| g.map_literals(f)).collect()),
        }
    }
}

/// Conjunction; the empty list is ⊤ and a singleton is returned unchanged.
pub fn big_and(mut fs: Vec<Formula>) -> Formula {
    match fs.len() {
        0 => Formula::Top,
        1 => fs.pop().unwrap(),
        _ => Formula::And(fs),
    }
}

/// Disjunction; the empty list is ⊥ and a singleton is returned unchanged.
pub fn big_or(mut fs: Vec<Formula>) -> Formula {
    match fs.len() {
        0 => Formula::Bot,
        1 => fs.pop().unwrap(),
        _ => Formula::Or(fs),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NRule {
    pub head: Formula,
    pub body: Formula,
}

impl NRule {
    pub fn new(head: Formula, body: Formula) -> Self {
        Self { head, body }
    }

    pub fn fact(head: Formula) -> Self {
        Self::new(head, Formula::Top)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NProgram {
    pub rules: Vec<NRule>,
    /// Auxiliary atoms introduced by a translation; empty for parsed programs.
    pub aux_atoms: BTreeSet<Atom>,
}

impl NProgram {
    pub fn new(rules: Vec<NRule>) -> Self {
        Self {
            rules,
            aux_atoms: BTreeSet::new(),
        }
    }

    pub fn union(&self, other: &NProgram) -> NProgram {
        let mut rules = self.rules.clone();
        rules.extend(other.rules.iter().cloned());
        let mut aux_atoms = self.aux_atoms.clone();
        aux_atoms.extend(other.aux_atoms.iter().cloned());
        NProgram { rules, aux_atoms }
    }

    pub fn has_classical_negation(&self) -> bool {
        self.rules
            .iter()
            .any(|r| r.head.has_classical_negation() || r.body.has_classical_negation())
    }
}

/// A consistent set of literals.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Interpretation {
    literals: BTreeSet<Literal>,
}

impl Interpretation {
    pub fn new(literals: impl IntoIterator<Item = Literal>) -> Result<Self, Error> {
        let literals: BTreeSet<Literal> = literals.into_iter().collect();
        if let Some(l) = literals.iter().find(|l| !l.neg && literals.contains(&l.complement())) {
            return Err(Error::Inconsistent(l.atom.name().to_string()));
        }
        Ok(Self { literals })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Interpretation over positive atoms given by name.
    pub fn of_atoms<'a>(names: impl IntoIterator<Item = &'a str>) -> Self {
        Self {
            literals: names.into_iter().map(|n| Literal::pos(Atom::new(n))).collect(),
        }
    }

    pub fn contains(&self, l: &Literal) -> bool {
        self.literals.contains(l)
    }

    pub fn literals(&self) -> &BTreeSet<Literal> {
        &self.literals
    }

    pub fn iter(&self) -> impl Iterator<Item = &Literal> {
        self.literals.iter()
    }

    pub fn len(&self) -> usize {
        self.literals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.literals.is_empty()
    }

    pub fn is_subset(&self, other: &Interpretation) -> bool {
        self.literals.is_subset(&other.literals)
    }

    pub fn is_proper_subset(&self, other: &Interpretation) -> bool {
        self.len() < other.len() && self.is_subset(other)
    }

    /// Drop every literal whose atom is in `atoms`.
    pub fn without_atoms(&self, atoms: &BTreeSet<Atom>) -> Interpretation {
        Interpretation {
            literals: self
                .literals
                .iter()
                .filter(|l| !atoms.contains(&l.atom))
                .cloned()
                .collect(),
        }
    }

    pub(crate) fn from_set_unchecked(literals: BTreeSet<Literal>) -> Self {
        Self { literals }
    }
}

impl PartialOrd for Interpretation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// By size, then lexicographically by sorted literals.
impl Ord for Interpretation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.literals.iter().cmp(other.literals.iter()))
    }
}

impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, l) in self.literals.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("}")
    }
}

/// Order-preserving set of atoms.
#[derive(Default)]
pub(crate) struct AtomCollector {
    seen: HashSet<Atom>,
    atoms: Vec<Atom>,
}

impl AtomCollector {
    pub(crate) fn push(&mut self, a: &Atom) {
        if self.seen.insert(a.clone()) {
            self.atoms.push(a.clone());
        }
    }

    pub(crate) fn finish(self) -> Vec<Atom> {
        self.atoms
    }
}

/// Atoms occurring in a program, in order of first occurrence.
pub trait Signature {
    fn signature(&self) -> Vec<Atom>;
}

impl Signature for WProgram {
    fn signature(&self) -> Vec<Atom> {
        let mut out = AtomCollector::default();
        for c in self.constraints() {
            for p in c.pairs() {
                out.push(&p.element.lit.atom);
            }
        }
        out.finish()
    }
}

impl Signature for NProgram {
    fn signature(&self) -> Vec<Atom> {
        let mut out = AtomCollector::default();
        for r in &self.rules {
            r.head.collect_atoms(&mut out);
            r.body.collect_atoms(&mut out);
        }
        out.finish()
    }
}

impl Signature for Formula {
    fn signature(&self) -> Vec<Atom> {
        let mut out = AtomCollector::default();
        self.collect_atoms(&mut out);
        out.finish()
    }
}

pub fn signature<P: Signature + ?Sized>(p: &P) -> Vec<Atom> {
    p.signature()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `w ≤ S`
    Le,
    /// `w < S`
    Lt,
}

/// What an auxiliary atom abbreviates.
#[derive(Clone, Copy, Debug)]
pub enum AuxPayload<'a> {
    /// `q_{not l}`
    Naf(&'a Literal),
    /// `q_{w≤S}` or `q_{w<S}` where `S` is a prefix of some constraint's pairs.
    Weight {
        relation: Relation,
        bound: &'a Bound,
        prefix: &'a [WeightPair],
    },
}

/// Deterministic, injective naming of auxiliary atoms.
///
/// Names are underscore-separated tokens after the `q_` prefix. Underscores
/// inside user atom names are doubled. Markers `N` (negation as failure)
/// and `C` (classical negation) start with an upper-case letter and so
/// never clash with atom tokens; numeric tokens start with a digit or `m`
/// (minus) and use `d` for the fraction bar.
pub fn aux_name(payload: AuxPayload<'_>) -> Atom {
    let mut name = String::from("q");
    match payload {
        AuxPayload::Naf(l) => {
            name.push_str("_not");
            push_literal(&mut name, l);
            Atom::with_kind(name, AtomKind::AuxNegation)
        }
        AuxPayload::Weight {
            relation,
            bound,
            prefix,
        } => {
            name.push('_');
            push_bound(&mut name, bound);
            name.push_str(match relation {
                Relation::Le => "_le",
                Relation::Lt => "_lt",
            });
            for p in prefix {
                if p.element.naf {
                    name.push_str("_N");
                }
                push_literal(&mut name, &p.element.lit);
                name.push('_');
                push_rational(&mut name, &p.weight);
            }
            Atom::with_kind(name, AtomKind::AuxWeight)
        }
    }
}

fn push_literal(name: &mut String, l: &Literal) {
    if l.neg {
        name.push_str("_C");
    }
    name.push('_');
    name.push_str(&l.atom.name().replace('_', "__"));
}

fn push_bound(name: &mut String, b: &Bound) {
    match b {
        Bound::NegInf => name.push_str("minf"),
        Bound::PosInf => name.push_str("inf"),
        Bound::Finite(r) => push_rational(name, r),
    }
}

fn push_rational(name: &mut String, r: &Rational) {
    if r.is_negative() {
        name.push('m');
    }
    let a = r.abs();
    name.push_str(&a.numer().to_string());
    if !a.is_integer() {
        name.push('d');
        name.push_str(&a.denom().to_string());
    }
}

pub(crate) fn rational_zero() -> Rational {
    Rational::zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: &str) -> Atom {
        Atom::new(n)
    }

    fn int(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn complement_is_involution() {
        let l = Literal::pos(a("a"));
        assert_eq!(complement(&l), Literal::neg(a("a")));
        assert_eq!(complement(&Literal::neg(a("a"))), l);
        assert_eq!(complement(&complement(&Literal::pos(a("p")))), Literal::pos(a("p")));
    }

    #[test]
    fn big_connectives_normalize_empty_and_singleton() {
        assert_eq!(big_and(vec![]), Formula::Top);
        assert_eq!(big_or(vec![]), Formula::Bot);
        assert_eq!(big_or(vec![Formula::atom("a")]), Formula::atom("a"));
        assert_eq!(
            big_and(vec![Formula::atom("a"), Formula::atom("b")]),
            Formula::And(vec![Formula::atom("a"), Formula::atom("b")])
        );
    }

    #[test]
    fn aux_names_golden() {
        let na = aux_name(AuxPayload::Naf(&Literal::pos(a("a"))));
        assert_eq!(na.name(), "q_not_a");
        assert_eq!(na.kind(), AtomKind::AuxNegation);

        let pairs = vec![
            WeightPair::unit(RuleElement::positive(Literal::pos(a("a")))),
            WeightPair::unit(RuleElement::positive(Literal::pos(a("b")))),
        ];
        let w = aux_name(AuxPayload::Weight {
            relation: Relation::Le,
            bound: &Bound::int(0),
            prefix: &pairs,
        });
        assert_eq!(w.name(), "q_0_le_a_1_b_1");
        assert_eq!(w.kind(), AtomKind::AuxWeight);

        let m = aux_name(AuxPayload::Weight {
            relation: Relation::Lt,
            bound: &Bound::int(-1),
            prefix: &[],
        });
        assert_eq!(m.name(), "q_m1_lt");
    }

    #[test]
    fn aux_names_deterministic() {
        let l = Literal::neg(a("x_1"));
        assert_eq!(aux_name(AuxPayload::Naf(&l)), aux_name(AuxPayload::Naf(&l)));
    }

    #[test]
    fn aux_names_escape_underscores() {
        // {x_1_y = 2} versus {x = 1, y = 2}
        let one = vec![WeightPair::new(
            RuleElement::positive(Literal::pos(a("x_1_y"))),
            int(2),
        )];
        let two = vec![
            WeightPair::new(RuleElement::positive(Literal::pos(a("x"))), int(1)),
            WeightPair::new(RuleElement::positive(Literal::pos(a("y"))), int(2)),
        ];
        let name = |p: &[WeightPair]| {
            aux_name(AuxPayload::Weight {
                relation: Relation::Le,
                bound: &Bound::int(1),
                prefix: p,
            })
        };
        assert_ne!(name(&one), name(&two));
    }

    #[test]
    fn negative_weights_rejected() {
        let e = RuleElement::positive(Literal::pos(a("p")));
        assert!(matches!(
            WeightConstraint::new(Bound::int(0), vec![WeightPair::new(e, int(-1))], Bound::PosInf),
            Err(Error::NegativeWeight(_))
        ));
    }

    #[test]
    fn bound_order() {
        assert!(Bound::NegInf < Bound::int(-100));
        assert!(Bound::int(100) < Bound::PosInf);
        assert!(Bound::Finite(Rational::new(1.into(), 2.into())) < Bound::int(1));
    }

    #[test]
    fn interpretation_rejects_inconsistency() {
        assert!(Interpretation::new([Literal::pos(a("a")), Literal::neg(a("a"))]).is_err());
        assert!(Interpretation::new([Literal::neg(a("a")), Literal::pos(a("b"))]).is_ok());
    }

    #[test]
    fn interpretation_order_is_size_then_lex() {
        let mut v = [
            Interpretation::of_atoms(["b"]),
            Interpretation::of_atoms(["a", "b"]),
            Interpretation::empty(),
            Interpretation::of_atoms(["a"]),
        ];
        v.sort();
        let shown: Vec<String> = v.iter().map(|i| i.to_string()).collect();
        assert_eq!(shown, ["{}", "{a}", "{b}", "{a, b}"]);
    }

    #[test]
    fn signature_first_occurrence() {
        let p = WProgram::new(vec![WRule::new(
            WeightConstraint::new(
                Bound::int(0),
                vec![
                    WeightPair::unit(RuleElement::positive(Literal::pos(a("a")))),
                    WeightPair::unit(RuleElement::positive(Literal::pos(a("b")))),
                ],
                Bound::int(1),
            )
            .unwrap(),
            vec![],
        )]);
        assert_eq!(signature(&p), vec![a("a"), a("b")]);
        assert!(signature(&WProgram::default()).is_empty());
        let n = NProgram::new(vec![NRule::new(
            Formula::Lit(Literal::neg(a("a"))),
            Formula::not(Formula::atom("a")),
        )]);
        assert_eq!(signature(&n), vec![a("a")]);
    }
}

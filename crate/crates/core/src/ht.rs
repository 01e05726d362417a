//! The logic of here-and-there and strong equivalence.
//!
//! An HT-interpretation is a pair `(H, T)` of atom sets with `H ⊆ T`.
//! Satisfaction follows the two-world Kripke reading: atoms are evaluated
//! in `H`, conjunction and disjunction pointwise, and `F → G` holds when it
//! holds at `H` and classically at `T`. `¬F` abbreviates `F → ⊥`.
//!
//! Two finite theories are HT-equivalent exactly when they have the same
//! HT-models over their joint signature, which is how every equivalence
//! question here is decided.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::syntax::{Atom, AtomKind, AtomCollector, Formula, Literal, NProgram, NRule, Signature, WProgram};
use crate::translate::tr_basic;
use crate::universe::{check_cap, submasks};

pub const DEFAULT_HT_CAP: usize = 14;

/// A propositional formula: nested expressions read as `∧`, `∨`, `¬`, plus
/// implication and equivalence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PropFormula {
    Bot,
    Top,
    Lit(Literal),
    Not(Box<PropFormula>),
    And(Vec<PropFormula>),
    Or(Vec<PropFormula>),
    Implies(Box<PropFormula>, Box<PropFormula>),
    Iff(Box<PropFormula>, Box<PropFormula>),
}

impl PropFormula {
    pub fn atom(a: Atom) -> Self {
        PropFormula::Lit(Literal::pos(a))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: PropFormula) -> Self {
        PropFormula::Not(Box::new(f))
    }

    pub fn implies(f: PropFormula, g: PropFormula) -> Self {
        PropFormula::Implies(Box::new(f), Box::new(g))
    }

    pub fn iff(f: PropFormula, g: PropFormula) -> Self {
        PropFormula::Iff(Box::new(f), Box::new(g))
    }

    pub fn from_formula(f: &Formula) -> Self {
        match f {
            Formula::Bot => PropFormula::Bot,
            Formula::Top => PropFormula::Top,
            Formula::Lit(l) => PropFormula::Lit(l.clone()),
            Formula::Not(g) => PropFormula::not(Self::from_formula(g)),
            Formula::And(fs) => PropFormula::And(fs.iter().map(Self::from_formula).collect()),
            Formula::Or(fs) => PropFormula::Or(fs.iter().map(Self::from_formula).collect()),
        }
    }

    pub fn has_classical_negation(&self) -> bool {
        match self {
            PropFormula::Bot | PropFormula::Top => false,
            PropFormula::Lit(l) => l.neg,
            PropFormula::Not(f) => f.has_classical_negation(),
            PropFormula::And(fs) | PropFormula::Or(fs) => fs.iter().any(Self::has_classical_negation),
            PropFormula::Implies(f, g) | PropFormula::Iff(f, g) => {
                f.has_classical_negation() || g.has_classical_negation()
            }
        }
    }

    pub(crate) fn collect_atoms(&self, out: &mut AtomCollector) {
        match self {
            PropFormula::Bot | PropFormula::Top => {}
            PropFormula::Lit(l) => out.push(&l.atom),
            PropFormula::Not(f) => f.collect_atoms(out),
            PropFormula::And(fs) | PropFormula::Or(fs) => fs.iter().for_each(|f| f.collect_atoms(out)),
            PropFormula::Implies(f, g) | PropFormula::Iff(f, g) => {
                f.collect_atoms(out);
                g.collect_atoms(out);
            }
        }
    }

    /// Classical truth under the set of true atoms.
    pub fn eval_classical(&self, t: &BTreeSet<Atom>) -> bool {
        match self {
            PropFormula::Bot => false,
            PropFormula::Top => true,
            PropFormula::Lit(l) => !l.neg && t.contains(&l.atom),
            PropFormula::Not(f) => !f.eval_classical(t),
            PropFormula::And(fs) => fs.iter().all(|f| f.eval_classical(t)),
            PropFormula::Or(fs) => fs.iter().any(|f| f.eval_classical(t)),
            PropFormula::Implies(f, g) => !f.eval_classical(t) || g.eval_classical(t),
            PropFormula::Iff(f, g) => f.eval_classical(t) == g.eval_classical(t),
        }
    }
}

impl Signature for PropFormula {
    fn signature(&self) -> Vec<Atom> {
        let mut out = AtomCollector::default();
        self.collect_atoms(&mut out);
        out.finish()
    }
}

fn prec(f: &PropFormula) -> u8 {
    match f {
        PropFormula::Iff(..) => 0,
        PropFormula::Implies(..) => 1,
        PropFormula::Or(fs) if fs.len() > 1 => 2,
        PropFormula::And(fs) if fs.len() > 1 => 3,
        _ => 4,
    }
}

fn write_prop(f: &PropFormula, ctx: u8, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    let parens = prec(f) < ctx;
    if parens {
        out.write_str("(")?;
    }
    match f {
        PropFormula::Bot => out.write_str("⊥")?,
        PropFormula::Top => out.write_str("⊤")?,
        PropFormula::Lit(l) => {
            if l.neg {
                write!(out, "¬{}", l.atom)?
            } else {
                write!(out, "{}", l.atom)?
            }
        }
        PropFormula::Not(g) => {
            out.write_str("¬")?;
            write_prop(g, 4, out)?;
        }
        PropFormula::And(fs) if fs.is_empty() => out.write_str("⊤")?,
        PropFormula::Or(fs) if fs.is_empty() => out.write_str("⊥")?,
        PropFormula::And(fs) | PropFormula::Or(fs) if fs.len() == 1 => write_prop(&fs[0], ctx, out)?,
        PropFormula::And(fs) | PropFormula::Or(fs) => {
            let (sep, level) = if matches!(f, PropFormula::And(_)) { (" ∧ ", 4) } else { (" ∨ ", 3) };
            for (i, g) in fs.iter().enumerate() {
                if i > 0 {
                    out.write_str(sep)?;
                }
                write_prop(g, level, out)?;
            }
        }
        PropFormula::Implies(a, b) => {
            write_prop(a, 2, out)?;
            out.write_str(" → ")?;
            write_prop(b, 1, out)?;
        }
        PropFormula::Iff(a, b) => {
            write_prop(a, 1, out)?;
            out.write_str(" ↔ ")?;
            write_prop(b, 1, out)?;
        }
    }
    if parens {
        out.write_str(")")?;
    }
    Ok(())
}

impl fmt::Display for PropFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_prop(self, 0, f)
    }
}

/// `Head ← Body` as the implication `Body → Head`.
pub fn rule_to_implication(r: &NRule) -> PropFormula {
    PropFormula::implies(PropFormula::from_formula(&r.body), PropFormula::from_formula(&r.head))
}

pub fn program_to_theory(p: &NProgram) -> Vec<PropFormula> {
    p.rules.iter().map(rule_to_implication).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HTInterpretation {
    here: BTreeSet<Atom>,
    there: BTreeSet<Atom>,
}

impl HTInterpretation {
    /// `None` unless `here ⊆ there`.
    pub fn new(here: BTreeSet<Atom>, there: BTreeSet<Atom>) -> Option<Self> {
        here.is_subset(&there).then_some(Self { here, there })
    }

    pub fn here(&self) -> &BTreeSet<Atom> {
        &self.here
    }

    pub fn there(&self) -> &BTreeSet<Atom> {
        &self.there
    }
}

impl fmt::Display for HTInterpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |s: &BTreeSet<Atom>| s.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(", ");
        write!(f, "({{{}}}, {{{}}})", show(&self.here), show(&self.there))
    }
}

fn ht_eval(i: &HTInterpretation, f: &PropFormula) -> bool {
    match f {
        PropFormula::Bot => false,
        PropFormula::Top => true,
        PropFormula::Lit(l) => i.here.contains(&l.atom),
        PropFormula::Not(g) => !ht_eval(i, g) && !g.eval_classical(&i.there),
        PropFormula::And(fs) => fs.iter().all(|g| ht_eval(i, g)),
        PropFormula::Or(fs) => fs.iter().any(|g| ht_eval(i, g)),
        PropFormula::Implies(g, h) => {
            (!ht_eval(i, g) || ht_eval(i, h)) && (!g.eval_classical(&i.there) || h.eval_classical(&i.there))
        }
        PropFormula::Iff(g, h) => {
            ht_eval(i, g) == ht_eval(i, h) && g.eval_classical(&i.there) == h.eval_classical(&i.there)
        }
    }
}

pub fn ht_satisfies(i: &HTInterpretation, f: &PropFormula) -> Result<bool> {
    if f.has_classical_negation() {
        return Err(Error::ClassicalNegation);
    }
    Ok(ht_eval(i, f))
}

/// A propositional formula over atom bits, for model enumeration.
enum Prop {
    Bot,
    Top,
    Atom(u64),
    Not(Box<Prop>),
    And(Vec<Prop>),
    Or(Vec<Prop>),
    Implies(Box<Prop>, Box<Prop>),
    Iff(Box<Prop>, Box<Prop>),
}

impl Prop {
    fn compile(f: &PropFormula, index: &BTreeMap<Atom, usize>) -> Prop {
        let c = |g: &PropFormula| Box::new(Prop::compile(g, index));
        match f {
            PropFormula::Bot => Prop::Bot,
            PropFormula::Top => Prop::Top,
            PropFormula::Lit(l) => Prop::Atom(1 << index[&l.atom]),
            PropFormula::Not(g) => Prop::Not(c(g)),
            PropFormula::And(fs) => Prop::And(fs.iter().map(|g| Prop::compile(g, index)).collect()),
            PropFormula::Or(fs) => Prop::Or(fs.iter().map(|g| Prop::compile(g, index)).collect()),
            PropFormula::Implies(g, h) => Prop::Implies(c(g), c(h)),
            PropFormula::Iff(g, h) => Prop::Iff(c(g), c(h)),
        }
    }

    fn classical(&self, t: u64) -> bool {
        match self {
            Prop::Bot => false,
            Prop::Top => true,
            Prop::Atom(b) => t & b != 0,
            Prop::Not(g) => !g.classical(t),
            Prop::And(fs) => fs.iter().all(|g| g.classical(t)),
            Prop::Or(fs) => fs.iter().any(|g| g.classical(t)),
            Prop::Implies(g, h) => !g.classical(t) || h.classical(t),
            Prop::Iff(g, h) => g.classical(t) == h.classical(t),
        }
    }

    /// Truth at the `here` world of `(h, t)`.
    fn here(&self, h: u64, t: u64) -> bool {
        match self {
            Prop::Bot => false,
            Prop::Top => true,
            Prop::Atom(b) => h & b != 0,
            Prop::Not(g) => !g.here(h, t) && !g.classical(t),
            Prop::And(fs) => fs.iter().all(|g| g.here(h, t)),
            Prop::Or(fs) => fs.iter().any(|g| g.here(h, t)),
            Prop::Implies(g, k) => (!g.here(h, t) || k.here(h, t)) && (!g.classical(t) || k.classical(t)),
            Prop::Iff(g, k) => g.here(h, t) == k.here(h, t) && g.classical(t) == k.classical(t),
        }
    }
}

struct Theory {
    formulas: Vec<Prop>,
}

impl Theory {
    fn new(formulas: &[PropFormula], index: &BTreeMap<Atom, usize>) -> Self {
        Self {
            formulas: formulas.iter().map(|f| Prop::compile(f, index)).collect(),
        }
    }

    fn classical(&self, t: u64) -> bool {
        self.formulas.iter().all(|f| f.classical(t))
    }

    fn here(&self, h: u64, t: u64) -> bool {
        self.formulas.iter().all(|f| f.here(h, t))
    }
}

fn joint_signature<'a>(theories: impl IntoIterator<Item = &'a [PropFormula]>, extra: &[Atom]) -> Vec<Atom> {
    let mut out = AtomCollector::default();
    for a in extra {
        out.push(a);
    }
    for t in theories {
        for f in t {
            f.collect_atoms(&mut out);
        }
    }
    out.finish()
}

fn to_set(atoms: &[Atom], mask: u64) -> BTreeSet<Atom> {
    atoms
        .iter()
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) != 0)
        .map(|(_, a)| a.clone())
        .collect()
}

fn interp(atoms: &[Atom], h: u64, t: u64) -> HTInterpretation {
    HTInterpretation {
        here: to_set(atoms, h),
        there: to_set(atoms, t),
    }
}

/// All HT-models over `signature` (extended by any atoms the formulas
/// mention), ordered by `there` then `here` in bit order.
pub fn ht_models(rules: &[PropFormula], signature: &[Atom], cap: usize) -> Result<Vec<HTInterpretation>> {
    if rules.iter().any(PropFormula::has_classical_negation) {
        return Err(Error::ClassicalNegation);
    }
    let atoms = joint_signature([rules], signature);
    check_cap(atoms.len(), cap)?;
    let index: BTreeMap<Atom, usize> = atoms.iter().cloned().enumerate().map(|(i, a)| (a, i)).collect();
    let theory = Theory::new(rules, &index);
    let mut out = Vec::new();
    for t in 0..1u64 << atoms.len() {
        if !theory.classical(t) {
            continue;
        }
        let mut hs: Vec<u64> = submasks(t).filter(|&h| theory.here(h, t)).collect();
        hs.sort_unstable();
        out.extend(hs.into_iter().map(|h| interp(&atoms, h, t)));
    }
    Ok(out)
}

/// A shared renaming `a ↦ a'` of classically negated atoms.
#[derive(Clone, Debug, Default)]
pub struct RenameMap {
    renamed: BTreeMap<Atom, Atom>,
}

impl RenameMap {
    pub fn get(&self, a: &Atom) -> Option<&Atom> {
        self.renamed.get(a)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&Atom, &Atom)> {
        self.renamed.iter()
    }

    fn fresh(&mut self, a: &Atom) -> Atom {
        self.renamed
            .entry(a.clone())
            .or_insert_with(|| Atom::with_kind(format!("{}'", a.name()), AtomKind::Renamed))
            .clone()
    }

    fn rename(&mut self, l: &Literal) -> Literal {
        if l.neg {
            Literal::pos(self.fresh(&l.atom))
        } else {
            l.clone()
        }
    }

    /// The formulas `¬(a ∧ a')` for every renamed atom.
    pub fn constraints(&self) -> Vec<PropFormula> {
        self.renamed
            .iter()
            .map(|(a, primed)| {
                PropFormula::not(PropFormula::And(vec![
                    PropFormula::atom(a.clone()),
                    PropFormula::atom(primed.clone()),
                ]))
            })
            .collect()
    }

    /// Map an interpretation over renamed atoms back to literals.
    pub fn restore(&self, z: &crate::syntax::Interpretation) -> crate::syntax::Interpretation {
        let back: BTreeMap<&Atom, &Atom> = self.renamed.iter().map(|(a, p)| (p, a)).collect();
        let lits = z.iter().map(|l| match back.get(&l.atom) {
            Some(a) if !l.neg => Literal::neg((*a).clone()),
            _ => l.clone(),
        });
        crate::syntax::Interpretation::from_set_unchecked(lits.collect())
    }
}

#[derive(Clone, Debug)]
pub struct Elimination {
    pub program: NProgram,
    pub cons: Vec<PropFormula>,
    pub map: RenameMap,
}

/// Replace every `-a` by a fresh atom `a'`, extending `map`.
pub fn eliminate_classical_negation_with(p: &NProgram, map: &mut RenameMap) -> NProgram {
    let rules = p
        .rules
        .iter()
        .map(|r| {
            NRule::new(
                r.head.map_literals(&mut |l| map.rename(l)),
                r.body.map_literals(&mut |l| map.rename(l)),
            )
        })
        .collect();
    NProgram {
        rules,
        aux_atoms: p.aux_atoms.clone(),
    }
}

pub fn eliminate_classical_negation(p: &NProgram) -> Elimination {
    let mut map = RenameMap::default();
    let program = eliminate_classical_negation_with(p, &mut map);
    let cons = map.constraints();
    Elimination { program, cons, map }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HtVerdict {
    Equivalent,
    /// An HT-interpretation that is a model of exactly one side;
    /// `first_satisfies` tells which.
    Counterexample {
        model: HTInterpretation,
        first_satisfies: bool,
    },
}

impl HtVerdict {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, HtVerdict::Equivalent)
    }
}

/// Compare the HT-model sets of two classical-negation-free theories.
pub fn ht_equivalent_theories(t1: &[PropFormula], t2: &[PropFormula], cap: usize) -> Result<HtVerdict> {
    if t1.iter().chain(t2).any(PropFormula::has_classical_negation) {
        return Err(Error::ClassicalNegation);
    }
    let atoms = joint_signature([t1, t2], &[]);
    check_cap(atoms.len(), cap)?;
    let index: BTreeMap<Atom, usize> = atoms.iter().cloned().enumerate().map(|(i, a)| (a, i)).collect();
    let (a, b) = (Theory::new(t1, &index), Theory::new(t2, &index));
    for t in 0..1u64 << atoms.len() {
        let (ca, cb) = (a.classical(t), b.classical(t));
        if !ca && !cb {
            continue;
        }
        let mut hs: Vec<u64> = submasks(t).collect();
        hs.sort_unstable();
        for h in hs {
            let ha = ca && a.here(h, t);
            let hb = cb && b.here(h, t);
            if ha != hb {
                return Ok(HtVerdict::Counterexample {
                    model: interp(&atoms, h, t),
                    first_satisfies: ha,
                });
            }
        }
    }
    Ok(HtVerdict::Equivalent)
}

/// Strong equivalence of nested programs, with classical negation
/// eliminated over a shared renaming and `¬(a ∧ a')` added to both sides.
pub fn strong_eq_nested(p1: &NProgram, p2: &NProgram, cap: usize) -> Result<HtVerdict> {
    let mut map = RenameMap::default();
    let q1 = eliminate_classical_negation_with(p1, &mut map);
    let q2 = eliminate_classical_negation_with(p2, &mut map);
    let cons = map.constraints();
    let mut t1 = program_to_theory(&q1);
    let mut t2 = program_to_theory(&q2);
    t1.extend(cons.iter().cloned());
    t2.extend(cons);
    ht_equivalent_theories(&t1, &t2, cap)
}

/// `F` and `G` are interchangeable in every context (HT-equivalent, with
/// classical negation handled as for programs).
pub fn ht_equivalent_formulas(f: &Formula, g: &Formula, cap: usize) -> Result<bool> {
    let p1 = NProgram::new(vec![NRule::fact(f.clone())]);
    let p2 = NProgram::new(vec![NRule::fact(g.clone())]);
    Ok(strong_eq_nested(&p1, &p2, cap)?.is_equivalent())
}

/// Strong equivalence of weight programs via their basic translations.
pub fn strong_eq_weight(p1: &WProgram, p2: &WProgram, cap: usize) -> Result<HtVerdict> {
    let t1 = tr_basic(p1)?;
    let t2 = tr_basic(p2)?;
    strong_eq_nested(&t1.output, &t2.output, cap)
}

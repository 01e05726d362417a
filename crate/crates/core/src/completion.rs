//! Clark completion of nonnested programs, tightness, CNF export, and
//! answer sets of nonnested programs computed from supported models.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::ht::{eliminate_classical_negation, PropFormula, RenameMap};
use crate::syntax::{Atom, Formula, Interpretation, Literal, NProgram, NRule, Signature, WProgram};
use crate::translate::tr_nn;
use crate::wsem::answer_sets_w;

/// A body element of a nonnested rule: a literal, possibly under `not`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BodyLiteral {
    pub lit: Literal,
    pub naf: bool,
}

fn body_literal(f: &Formula) -> Option<BodyLiteral> {
    match f {
        Formula::Lit(l) => Some(BodyLiteral { lit: l.clone(), naf: false }),
        Formula::Not(g) => match g.as_ref() {
            Formula::Lit(l) => Some(BodyLiteral { lit: l.clone(), naf: true }),
            _ => None,
        },
        _ => None,
    }
}

/// The body of a nonnested rule as a list, or `None` if it is nested.
pub fn body_literals(body: &Formula) -> Option<Vec<BodyLiteral>> {
    match body {
        Formula::Top => Some(Vec::new()),
        Formula::And(fs) => fs.iter().map(body_literal).collect(),
        f => body_literal(f).map(|b| vec![b]),
    }
}

fn rule_is_nonnested(r: &NRule) -> bool {
    matches!(r.head, Formula::Lit(_) | Formula::Bot) && body_literals(&r.body).is_some()
}

pub fn is_nonnested(p: &NProgram) -> bool {
    p.rules.iter().all(rule_is_nonnested)
}

fn body_prop(body: &[BodyLiteral]) -> PropFormula {
    let mut conj: Vec<PropFormula> = body
        .iter()
        .map(|b| {
            let l = PropFormula::Lit(b.lit.clone());
            if b.naf {
                PropFormula::not(l)
            } else {
                l
            }
        })
        .collect();
    match conj.len() {
        0 => PropFormula::Top,
        1 => conj.pop().unwrap(),
        _ => PropFormula::And(conj),
    }
}

/// `a ↔ ⋁ bodies(a)` for every atom of the signature, in signature order,
/// followed by `¬body` for every `⊥`-headed rule.
pub fn completion(p: &NProgram) -> Result<Vec<PropFormula>> {
    if !is_nonnested(p) {
        return Err(Error::NotNonnested);
    }
    if p.has_classical_negation() {
        return Err(Error::ClassicalNegation);
    }
    let mut bodies: HashMap<Atom, Vec<PropFormula>> = HashMap::new();
    let mut constraints = Vec::new();
    for r in &p.rules {
        let body = body_prop(&body_literals(&r.body).expect("nonnested"));
        match &r.head {
            Formula::Lit(l) => bodies.entry(l.atom.clone()).or_default().push(body),
            _ => constraints.push(PropFormula::not(body)),
        }
    }
    let mut out: Vec<PropFormula> = p
        .signature()
        .into_iter()
        .map(|a| {
            let mut ds = bodies.remove(&a).unwrap_or_default();
            let rhs = match ds.len() {
                0 => PropFormula::Bot,
                1 => ds.pop().unwrap(),
                _ => PropFormula::Or(ds),
            };
            PropFormula::iff(PropFormula::atom(a), rhs)
        })
        .collect();
    out.extend(constraints);
    Ok(out)
}

/// The positive dependency graph (head literal → positive body literal of
/// every literal-headed rule) is acyclic.
pub fn is_tight(p: &NProgram) -> bool {
    let mut edges: BTreeMap<Literal, Vec<Literal>> = BTreeMap::new();
    for r in &p.rules {
        let (Formula::Lit(h), Some(body)) = (&r.head, body_literals(&r.body)) else {
            continue;
        };
        let targets = edges.entry(h.clone()).or_default();
        targets.extend(body.into_iter().filter(|b| !b.naf).map(|b| b.lit));
    }
    // 0 unvisited, 1 on the stack, 2 done.
    let mut state: HashMap<&Literal, u8> = HashMap::new();
    for root in edges.keys() {
        if state.get(root).copied().unwrap_or(0) != 0 {
            continue;
        }
        let mut stack: Vec<(&Literal, usize)> = vec![(root, 0)];
        state.insert(root, 1);
        while let Some((node, i)) = stack.pop() {
            let succ = edges.get(node).map(Vec::as_slice).unwrap_or(&[]);
            if i < succ.len() {
                stack.push((node, i + 1));
                let next = &succ[i];
                match state.get(next).copied().unwrap_or(0) {
                    1 => return false,
                    0 => {
                        state.insert(next, 1);
                        stack.push((next, 0));
                    }
                    _ => {}
                }
            } else {
                state.insert(node, 2);
            }
        }
    }
    true
}

/// A CNF over variables `1..=num_vars`. The first `originals` variables
/// stand for atoms; the rest are Tseitin labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfDocument {
    pub num_vars: usize,
    pub originals: usize,
    pub clauses: Vec<Vec<i64>>,
    /// Name of variable `i + 1`.
    pub names: Vec<String>,
}

impl CnfDocument {
    /// DIMACS text: `c map` comment lines, the `p cnf` header, then one
    /// zero-terminated clause per line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, name) in self.names.iter().enumerate() {
            let _ = writeln!(out, "c map {} {}", i + 1, name);
        }
        let _ = writeln!(out, "p cnf {} {}", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            for l in c {
                let _ = write!(out, "{l} ");
            }
            out.push_str("0\n");
        }
        out
    }

    pub fn atoms(&self) -> &[String] {
        &self.names[..self.originals]
    }

    /// Every assignment to the original variables that extends to a model,
    /// as the sets of true original variables (0-based), sorted.
    pub fn projected_models(&self) -> Vec<BTreeSet<usize>> {
        self.projected_models_ordered(&(0..self.originals).collect::<Vec<_>>())
    }

    /// As [`projected_models`](Self::projected_models), deciding the
    /// original variables (0-based) in `order` first.
    pub fn projected_models_ordered(&self, order: &[usize]) -> Vec<BTreeSet<usize>> {
        let mut order: Vec<usize> = order.iter().map(|v| v + 1).collect();
        let rest: Vec<usize> = (1..=self.originals).filter(|v| !order.contains(v)).collect();
        order.extend(rest);
        let mut solver = Dpll::new(self, order);
        let mut out = Vec::new();
        if solver.initial() {
            solver.enumerate(0, &mut out);
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }
}

#[derive(Clone, Copy)]
enum Enc {
    Const(bool),
    Lit(i64),
}

struct Tseitin {
    vars: HashMap<Atom, i64>,
    labels: HashMap<PropFormula, i64>,
    names: Vec<String>,
    clauses: Vec<Vec<i64>>,
}

impl Tseitin {
    fn fresh(&mut self, f: &PropFormula) -> i64 {
        let v = self.names.len() as i64 + 1;
        self.names.push(format!("_t{}", v));
        self.labels.insert(f.clone(), v);
        v
    }

    fn clause(&mut self, lits: Vec<Enc>) {
        let mut c = Vec::new();
        for l in lits {
            match l {
                Enc::Const(true) => return,
                Enc::Const(false) => {}
                Enc::Lit(x) => {
                    if c.contains(&-x) {
                        return;
                    }
                    if !c.contains(&x) {
                        c.push(x)
                    }
                }
            }
        }
        self.clauses.push(c);
    }

    fn encode(&mut self, f: &PropFormula) -> Enc {
        match f {
            PropFormula::Bot => Enc::Const(false),
            PropFormula::Top => Enc::Const(true),
            PropFormula::Lit(l) => Enc::Lit(self.vars[&l.atom]),
            PropFormula::Not(g) => neg(self.encode(g)),
            PropFormula::Implies(g, h) => {
                let or = PropFormula::Or(vec![PropFormula::not((**g).clone()), (**h).clone()]);
                self.encode(&or)
            }
            PropFormula::And(fs) | PropFormula::Or(fs) => {
                let is_and = matches!(f, PropFormula::And(_));
                let mut parts = Vec::new();
                for g in fs {
                    match self.encode(g) {
                        Enc::Const(b) if b == is_and => {}
                        Enc::Const(_) => return Enc::Const(!is_and),
                        Enc::Lit(x) => parts.push(x),
                    }
                }
                match parts.len() {
                    0 => Enc::Const(is_and),
                    1 => Enc::Lit(parts[0]),
                    _ => {
                        if let Some(&t) = self.labels.get(f) {
                            return Enc::Lit(t);
                        }
                        let t = self.fresh(f);
                        // and: t → xᵢ, ⋀xᵢ → t; or: xᵢ → t, t → ⋁xᵢ.
                        let s = if is_and { 1 } else { -1 };
                        for &x in &parts {
                            self.clause(vec![Enc::Lit(-s * t), Enc::Lit(s * x)]);
                        }
                        let mut big = vec![Enc::Lit(s * t)];
                        big.extend(parts.iter().map(|&x| Enc::Lit(-s * x)));
                        self.clause(big);
                        Enc::Lit(t)
                    }
                }
            }
            PropFormula::Iff(g, h) => match (self.encode(g), self.encode(h)) {
                (Enc::Const(a), Enc::Const(b)) => Enc::Const(a == b),
                (Enc::Const(true), x) | (x, Enc::Const(true)) => x,
                (Enc::Const(false), x) | (x, Enc::Const(false)) => neg(x),
                (Enc::Lit(x), Enc::Lit(y)) => {
                    if let Some(&t) = self.labels.get(f) {
                        return Enc::Lit(t);
                    }
                    let t = self.fresh(f);
                    for (a, b, c) in [(-t, -x, y), (-t, x, -y), (t, x, y), (t, -x, -y)] {
                        self.clause(vec![Enc::Lit(a), Enc::Lit(b), Enc::Lit(c)]);
                    }
                    Enc::Lit(t)
                }
            },
        }
    }

    /// Add clauses forcing `f`, splitting top-level conjunctions and
    /// clausal disjunctions and encoding `a ↔ G` directly.
    fn assert(&mut self, f: &PropFormula) {
        match f {
            PropFormula::Top => {}
            PropFormula::And(fs) => fs.iter().for_each(|g| self.assert(g)),
            PropFormula::Or(fs) => {
                let lits: Vec<Enc> = fs.iter().map(|g| self.encode(g)).collect();
                self.clause(lits);
            }
            PropFormula::Implies(g, h) => {
                let lits = vec![neg(self.encode(g)), self.encode(h)];
                self.clause(lits);
            }
            PropFormula::Not(g) if matches!(g.as_ref(), PropFormula::And(_)) => {
                let PropFormula::And(fs) = g.as_ref() else { unreachable!() };
                let lits: Vec<Enc> = fs.iter().map(|h| neg(self.encode(h))).collect();
                self.clause(lits);
            }
            PropFormula::Iff(g, h) => {
                let (x, y) = (self.encode(g), self.encode(h));
                self.clause(vec![neg(x), y]);
                self.clause(vec![x, neg(y)]);
            }
            other => {
                let x = self.encode(other);
                self.clause(vec![x]);
            }
        }
    }
}

fn neg(e: Enc) -> Enc {
    match e {
        Enc::Const(b) => Enc::Const(!b),
        Enc::Lit(x) => Enc::Lit(-x),
    }
}

/// Tseitin transformation. Atoms are numbered in order of first
/// occurrence; labels are introduced only for compound subformulas that
/// are not asserted at top level.
pub fn to_dimacs(formulas: &[PropFormula]) -> Result<CnfDocument> {
    if formulas.iter().any(PropFormula::has_classical_negation) {
        return Err(Error::ClassicalNegation);
    }
    let mut atoms = Vec::new();
    let mut seen = BTreeSet::new();
    for f in formulas {
        for a in f.signature() {
            if seen.insert(a.clone()) {
                atoms.push(a);
            }
        }
    }
    let mut t = Tseitin {
        vars: atoms.iter().cloned().zip(1..).collect(),
        labels: HashMap::new(),
        names: atoms.iter().map(|a| a.name().to_string()).collect(),
        clauses: Vec::new(),
    };
    for f in formulas {
        t.assert(f);
    }
    Ok(CnfDocument {
        num_vars: t.names.len(),
        originals: atoms.len(),
        clauses: t.clauses,
        names: t.names,
    })
}

/// All-solutions DPLL with unit propagation over occurrence lists. The
/// original variables are decided first, in the given order, so each
/// projected model is found once.
struct Dpll<'a> {
    doc: &'a CnfDocument,
    /// 0 unassigned, 1 true, -1 false; index = variable.
    value: Vec<i8>,
    trail: Vec<i64>,
    /// Clauses containing the negation of a literal, indexed by `lit_index`.
    watch: Vec<Vec<usize>>,
    order: Vec<usize>,
}

fn lit_index(l: i64) -> usize {
    2 * (l.unsigned_abs() as usize) + (l < 0) as usize
}

impl<'a> Dpll<'a> {
    fn new(doc: &'a CnfDocument, order: Vec<usize>) -> Self {
        let mut watch = vec![Vec::new(); 2 * doc.num_vars + 2];
        for (i, c) in doc.clauses.iter().enumerate() {
            for &l in c {
                watch[lit_index(-l)].push(i);
            }
        }
        Self {
            doc,
            value: vec![0; doc.num_vars + 1],
            trail: Vec::new(),
            watch,
            order,
        }
    }

    fn lit_value(&self, l: i64) -> i8 {
        let v = self.value[l.unsigned_abs() as usize];
        if l > 0 {
            v
        } else {
            -v
        }
    }

    fn set(&mut self, l: i64) {
        self.value[l.unsigned_abs() as usize] = if l > 0 { 1 } else { -1 };
        self.trail.push(l);
    }

    fn undo(&mut self, mark: usize) {
        for l in self.trail.drain(mark..) {
            self.value[l.unsigned_abs() as usize] = 0;
        }
    }

    /// Status of a clause: `Err(())` if falsified, `Ok(Some(l))` if unit.
    fn status(&self, c: &[i64]) -> std::result::Result<Option<i64>, ()> {
        let mut unassigned = None;
        for &l in c {
            match self.lit_value(l) {
                1 => return Ok(None),
                0 if unassigned.is_some() => return Ok(None),
                0 => unassigned = Some(l),
                _ => {}
            }
        }
        unassigned.map(Some).ok_or(())
    }

    /// Propagate units from trail position `from`; `false` on conflict.
    fn propagate(&mut self, mut from: usize) -> bool {
        while from < self.trail.len() {
            let l = self.trail[from];
            from += 1;
            for k in 0..self.watch[lit_index(l)].len() {
                let ci = self.watch[lit_index(l)][k];
                match self.status(&self.doc.clauses[ci]) {
                    Err(()) => return false,
                    Ok(Some(u)) => self.set(u),
                    Ok(None) => {}
                }
            }
        }
        true
    }

    fn initial(&mut self) -> bool {
        for c in &self.doc.clauses {
            match self.status(c) {
                Err(()) => return false,
                Ok(Some(u)) if self.lit_value(u) == 0 => {
                    self.set(u);
                    if !self.propagate(self.trail.len() - 1) {
                        return false;
                    }
                }
                _ => {}
            }
        }
        true
    }

    fn decide(&mut self, l: i64) -> bool {
        let mark = self.trail.len();
        self.set(l);
        self.propagate(mark)
    }

    fn satisfiable(&mut self) -> bool {
        let Some(v) = (1..=self.doc.num_vars).find(|&v| self.value[v] == 0) else {
            return true;
        };
        for l in [v as i64, -(v as i64)] {
            let mark = self.trail.len();
            let ok = self.decide(l) && self.satisfiable();
            self.undo(mark);
            if ok {
                return true;
            }
        }
        false
    }

    fn enumerate(&mut self, depth: usize, out: &mut Vec<BTreeSet<usize>>) {
        match self.order[depth..].iter().position(|&v| self.value[v] == 0) {
            None => {
                if self.satisfiable() {
                    out.push((1..=self.doc.originals).filter(|&v| self.value[v] == 1).map(|v| v - 1).collect());
                }
            }
            Some(k) => {
                let v = self.order[depth + k] as i64;
                for l in [-v, v] {
                    let mark = self.trail.len();
                    if self.decide(l) {
                        self.enumerate(depth + k + 1, out);
                    }
                    self.undo(mark);
                }
            }
        }
    }
}

/// Source atoms before auxiliary ones: once the source atoms are fixed,
/// propagation settles the auxiliary atoms of a translation.
fn decision_order(atoms: &[Atom]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..atoms.len()).collect();
    order.sort_by_key(|&i| atoms[i].is_aux());
    order
}

/// Classical models of a CN-free theory, as sets of true atoms over its
/// signature, computed through the CNF encoding.
pub fn classical_models(formulas: &[PropFormula]) -> Result<Vec<BTreeSet<Atom>>> {
    let doc = to_dimacs(formulas)?;
    let mut atoms: Vec<Atom> = Vec::new();
    let mut seen = BTreeSet::new();
    for f in formulas {
        for a in f.signature() {
            if seen.insert(a.clone()) {
                atoms.push(a);
            }
        }
    }
    Ok(doc
        .projected_models_ordered(&decision_order(&atoms))
        .into_iter()
        .map(|m| m.into_iter().map(|i| atoms[i].clone()).collect())
        .collect())
}

/// `Z` is an answer set of a CN-free nonnested program: `Z ⊨ Π` and `Z` is
/// the least model of the rules `head ← pos(body)` whose negated body
/// atoms are all outside `Z`.
fn is_stable(p: &NProgram, z: &BTreeSet<Atom>) -> bool {
    let rules: Vec<(Option<&Atom>, Vec<BodyLiteral>)> = p
        .rules
        .iter()
        .map(|r| {
            let head = match &r.head {
                Formula::Lit(l) => Some(&l.atom),
                _ => None,
            };
            (head, body_literals(&r.body).expect("nonnested"))
        })
        .collect();
    let holds = |b: &BodyLiteral, s: &BTreeSet<Atom>| s.contains(&b.lit.atom) != b.naf;
    for (head, body) in &rules {
        if body.iter().all(|b| holds(b, z)) && !head.is_some_and(|h| z.contains(h)) {
            return false;
        }
    }
    let reduct: Vec<(&Atom, Vec<&Atom>)> = rules
        .iter()
        .filter(|(_, body)| body.iter().all(|b| !b.naf || !z.contains(&b.lit.atom)))
        .filter_map(|(head, body)| {
            head.map(|h| (h, body.iter().filter(|b| !b.naf).map(|b| &b.lit.atom).collect()))
        })
        .collect();
    let mut least: BTreeSet<Atom> = BTreeSet::new();
    loop {
        let before = least.len();
        for (h, body) in &reduct {
            if !least.contains(*h) && body.iter().all(|a| least.contains(*a)) {
                least.insert((*h).clone());
            }
        }
        if least.len() == before {
            break;
        }
    }
    &least == z
}

fn with_consistency(e: &crate::ht::Elimination) -> NProgram {
    let mut rules = e.program.rules.clone();
    for (a, primed) in e.map.pairs() {
        rules.push(NRule::new(
            Formula::Bot,
            Formula::And(vec![Formula::Lit(Literal::pos(a.clone())), Formula::Lit(Literal::pos(primed.clone()))]),
        ));
    }
    NProgram {
        rules,
        aux_atoms: e.program.aux_atoms.clone(),
    }
}

/// Answer sets of a nonnested program: supported models from the
/// completion, filtered by the least-model check. Classical negation is
/// eliminated by renaming first and restored in the result.
pub fn stable_models(p: &NProgram) -> Result<Vec<Interpretation>> {
    if !is_nonnested(p) {
        return Err(Error::NotNonnested);
    }
    let e = eliminate_classical_negation(p);
    let q = with_consistency(&e);
    let theory = completion(&q)?;
    let mut out: Vec<Interpretation> = classical_models(&theory)?
        .into_iter()
        .filter(|z| is_stable(&q, z))
        .map(|z| e.map.restore(&Interpretation::from_set_unchecked(z.into_iter().map(Literal::pos).collect())))
        .collect();
    out.sort();
    Ok(out)
}

/// The program whose completion is exported for `Ω`: `tr_nn(Ω)` with
/// classical negation eliminated and the consistency constraints added.
#[derive(Clone, Debug)]
pub struct CompletionInput {
    pub program: NProgram,
    pub map: RenameMap,
    pub q_omega: BTreeSet<Atom>,
}

pub fn completion_input(omega: &WProgram) -> Result<CompletionInput> {
    let report = tr_nn(omega)?;
    Ok(prepare(&report.output, report.q_omega))
}

pub fn prepare(p: &NProgram, q_omega: BTreeSet<Atom>) -> CompletionInput {
    let e = eliminate_classical_negation(p);
    CompletionInput {
        program: with_consistency(&e),
        map: e.map,
        q_omega,
    }
}

/// DIMACS of the completion of a prepared nonnested program; refuses
/// programs that are not tight.
pub fn completion_dimacs(input: &CompletionInput) -> Result<CnfDocument> {
    if !is_nonnested(&input.program) {
        return Err(Error::NotNonnested);
    }
    if !is_tight(&input.program) {
        return Err(Error::NotTight);
    }
    to_dimacs(&completion(&input.program)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompletionReport {
    /// Classical models of the completion with `Q_Ω` projected away and
    /// classical negation restored.
    pub models: Vec<Interpretation>,
    pub answer_sets: Vec<Interpretation>,
}

impl CompletionReport {
    pub fn passed(&self) -> bool {
        self.models == self.answer_sets
    }
}

/// Compare the models of the completion of `tr_nn(Ω)` with the answer
/// sets of `Ω`. Non-tight translations are refused.
pub fn verify_completion(omega: &WProgram, cap: usize) -> Result<CompletionReport> {
    let input = completion_input(omega)?;
    if !is_tight(&input.program) {
        return Err(Error::NotTight);
    }
    let theory = completion(&input.program)?;
    let mut models: Vec<Interpretation> = classical_models(&theory)?
        .into_iter()
        .map(|z| {
            let z = Interpretation::from_set_unchecked(z.into_iter().map(Literal::pos).collect());
            input.map.restore(&z).without_atoms(&input.q_omega)
        })
        .collect();
    models.sort();
    let answer_sets = answer_sets_w(omega, cap)?;
    Ok(CompletionReport { models, answer_sets })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nsem::answer_sets_n;
    use crate::parser::{parse_formula, parse_nested_program, parse_weight_program};

    fn n(t: &str) -> NProgram {
        parse_nested_program(t).unwrap()
    }

    fn prop(t: &str) -> PropFormula {
        PropFormula::from_formula(&parse_formula(t).unwrap())
    }

    fn shown(ms: &[Interpretation]) -> Vec<String> {
        ms.iter().map(|m| m.to_string()).collect()
    }

    #[test]
    fn nonnested_recognition() {
        assert!(is_nonnested(&n("a :- not b, c. bot :- a. b.")));
        assert!(!is_nonnested(&n("a :- not not a.")));
        assert!(!is_nonnested(&n("a; b.")));
        assert!(is_nonnested(&NProgram::default()));
    }

    #[test]
    fn completion_of_small_program() {
        let c = completion(&n("a :- not b.")).unwrap();
        let shown: Vec<String> = c.iter().map(|f| f.to_string()).collect();
        assert_eq!(shown, ["a ↔ ¬b", "b ↔ ⊥"]);
        assert!(completion(&NProgram::default()).unwrap().is_empty());
        assert!(matches!(completion(&n("a :- not not a.")), Err(Error::NotNonnested)));
        assert!(matches!(completion(&n("-a.")), Err(Error::ClassicalNegation)));
    }

    #[test]
    fn tightness() {
        assert!(!is_tight(&n("a :- b. b :- a.")));
        assert!(is_tight(&n("a :- not a.")));
        assert!(!is_tight(&n("p :- p.")));
        assert!(is_tight(&n("a :- b. b :- c. c.")));
    }

    #[test]
    fn dimacs_small() {
        let d = to_dimacs(&[prop("a")]).unwrap();
        assert_eq!(d.render(), "c map 1 a\np cnf 1 1\n1 0\n");
        let d = to_dimacs(&[PropFormula::iff(prop("a"), prop("not b"))]).unwrap();
        assert_eq!(d.projected_models(), vec![BTreeSet::from([0]), BTreeSet::from([1])]);
        let d = to_dimacs(&[PropFormula::Bot]).unwrap();
        assert_eq!(d.render(), "p cnf 0 1\n0\n");
        assert!(d.projected_models().is_empty());
    }

    #[test]
    fn stable_models_match_brute_force() {
        for t in [
            "a :- not b. b :- not a.",
            "a :- a.",
            "a :- not a.",
            "p :- q. q :- p. p :- not r.",
            "-a :- not a. b :- -a.",
            "a. -a.",
            "",
        ] {
            let p = n(t);
            assert_eq!(stable_models(&p).unwrap(), answer_sets_n(&p, 16).unwrap(), "{t}");
        }
    }

    #[test]
    fn completion_of_choice_translation() {
        let omega = parse_weight_program("0 <= {a, b} <= 1.").unwrap();
        let r = verify_completion(&omega, 16).unwrap();
        assert!(r.passed());
        assert_eq!(shown(&r.models), ["{}", "{a}", "{b}"]);
        let omega = parse_weight_program("1 <= {a=2} <= 2 :- 1 <= {not a=3, not b=2} <= 4.").unwrap();
        let r = verify_completion(&omega, 16).unwrap();
        assert_eq!(shown(&r.models), ["{}", "{a}"]);
        assert!(r.passed());
    }

    #[test]
    fn self_support_is_refused() {
        let omega = parse_weight_program("p :- p.").unwrap();
        assert!(matches!(verify_completion(&omega, 16), Err(Error::NotTight)));
        let input = completion_input(&omega).unwrap();
        assert_eq!(
            stable_models(&input.program).unwrap().iter().map(|z| z.without_atoms(&input.q_omega)).collect::<Vec<_>>(),
            vec![Interpretation::empty()]
        );
    }

    #[test]
    fn classical_negation_in_completion() {
        let omega = parse_weight_program("-a :- not a. b :- -a.").unwrap();
        let r = verify_completion(&omega, 16).unwrap();
        assert!(r.passed());
        assert_eq!(shown(&r.models), ["{-a, b}"]);
    }
}

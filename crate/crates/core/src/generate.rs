//! Seeded random programs for the property harness.
//!
//! The parameters are fixed so that a seed names the same corpus in every
//! run; changing any of them changes [`GENERATOR_VERSION`].

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::syntax::{
    Atom, Bound, Formula, Interpretation, Literal, NProgram, NRule, Rational, RuleElement, WProgram, WRule,
    WeightConstraint, WeightPair,
};

pub const GENERATOR_VERSION: u32 = 1;

const POOL: [&str; 5] = ["a", "b", "c", "d", "e"];

#[derive(Clone, Debug, PartialEq)]
pub struct GenConfig {
    pub max_atoms: usize,
    pub max_rules: usize,
    pub max_length: usize,
    pub max_weight: i64,
    pub max_body: usize,
    pub p_classical: f64,
    pub p_naf: f64,
    pub p_headless: f64,
    pub p_element: f64,
    pub p_no_lower: f64,
    pub p_no_upper: f64,
}

impl Default for GenConfig {
    fn default() -> Self {
        Self {
            max_atoms: 5,
            max_rules: 4,
            max_length: 4,
            max_weight: 4,
            max_body: 2,
            p_classical: 0.1,
            p_naf: 0.3,
            p_headless: 0.1,
            p_element: 0.4,
            p_no_lower: 0.2,
            p_no_upper: 0.4,
        }
    }
}

pub struct Generator {
    rng: ChaCha8Rng,
    cfg: GenConfig,
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

impl Generator {
    pub fn new(seed: u64) -> Self {
        Self::with_config(seed, GenConfig::default())
    }

    pub fn with_config(seed: u64, cfg: GenConfig) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            cfg,
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// Between one and `max_atoms` atoms from the fixed pool.
    pub fn atoms(&mut self) -> Vec<Atom> {
        let n = self.rng.random_range(1..=self.cfg.max_atoms.min(POOL.len()));
        POOL[..n].iter().map(|s| Atom::new(*s)).collect()
    }

    pub fn literal(&mut self, atoms: &[Atom]) -> Literal {
        let a = atoms.choose(&mut self.rng).expect("nonempty signature").clone();
        if self.rng.random_bool(self.cfg.p_classical) {
            Literal::neg(a)
        } else {
            Literal::pos(a)
        }
    }

    pub fn element(&mut self, atoms: &[Atom]) -> RuleElement {
        let l = self.literal(atoms);
        if self.rng.random_bool(self.cfg.p_naf) {
            RuleElement::negative(l)
        } else {
            RuleElement::positive(l)
        }
    }

    pub fn pairs(&mut self, atoms: &[Atom]) -> Vec<WeightPair> {
        let m = self.rng.random_range(0..=self.cfg.max_length);
        (0..m)
            .map(|_| {
                let e = self.element(atoms);
                let w = self.rng.random_range(0..=self.cfg.max_weight);
                WeightPair::new(e, int(w))
            })
            .collect()
    }

    /// A finite integer bound in `[−2, W+2]`.
    pub fn bound_for(&mut self, pairs: &[WeightPair]) -> Bound {
        let total: Rational = pairs.iter().map(|p| p.weight.clone()).sum();
        let top = total.to_integer().try_into().unwrap_or(i64::MAX - 2);
        Bound::int(self.rng.random_range(-2..=top + 2))
    }

    /// A general constraint with each bound finite or omitted.
    pub fn constraint(&mut self, atoms: &[Atom]) -> WeightConstraint {
        let pairs = self.pairs(atoms);
        let lower = if self.rng.random_bool(self.cfg.p_no_lower) {
            Bound::NegInf
        } else {
            self.bound_for(&pairs)
        };
        let upper = if self.rng.random_bool(self.cfg.p_no_upper) {
            Bound::PosInf
        } else {
            self.bound_for(&pairs)
        };
        WeightConstraint::new(lower, pairs, upper).expect("weights are nonnegative")
    }

    /// A lower-bound-only constraint `L ≤ S`.
    pub fn lower_constraint(&mut self, atoms: &[Atom]) -> WeightConstraint {
        let pairs = self.pairs(atoms);
        let lower = self.bound_for(&pairs);
        WeightConstraint::new(lower, pairs, Bound::PosInf).expect("weights are nonnegative")
    }

    /// An upper-bound-only constraint `S ≤ U`.
    pub fn upper_constraint(&mut self, atoms: &[Atom]) -> WeightConstraint {
        let pairs = self.pairs(atoms);
        let upper = self.bound_for(&pairs);
        WeightConstraint::new(Bound::NegInf, pairs, upper).expect("weights are nonnegative")
    }

    fn head_or_body(&mut self, atoms: &[Atom]) -> WeightConstraint {
        if self.rng.random_bool(self.cfg.p_element) {
            WeightConstraint::element(self.element(atoms))
        } else {
            self.constraint(atoms)
        }
    }

    pub fn weight_rule(&mut self, atoms: &[Atom]) -> WRule {
        let head = if self.rng.random_bool(self.cfg.p_headless) {
            WeightConstraint::empty_head()
        } else if self.rng.random_bool(self.cfg.p_element) {
            WeightConstraint::element(RuleElement::positive(self.literal(atoms)))
        } else {
            self.constraint(atoms)
        };
        let n = self.rng.random_range(0..=self.cfg.max_body);
        let body = (0..n).map(|_| self.head_or_body(atoms)).collect();
        WRule::new(head, body)
    }

    pub fn weight_program(&mut self) -> WProgram {
        let atoms = self.atoms();
        self.weight_program_over(&atoms)
    }

    pub fn weight_program_over(&mut self, atoms: &[Atom]) -> WProgram {
        let n = self.rng.random_range(1..=self.cfg.max_rules);
        WProgram::new((0..n).map(|_| self.weight_rule(atoms)).collect())
    }

    /// A second program related to `p`: an independent program, a
    /// reordering with a duplicated rule, or `p` with one bound nudged.
    pub fn related_program(&mut self, p: &WProgram) -> WProgram {
        let atoms = crate::syntax::signature(p);
        match self.rng.random_range(0..3) {
            0 if !atoms.is_empty() => self.weight_program_over(&atoms),
            1 => {
                let mut rules = p.rules.clone();
                rules.shuffle(&mut self.rng);
                if let Some(r) = rules.first().cloned() {
                    rules.push(r);
                }
                WProgram::new(rules)
            }
            _ => {
                let mut rules = p.rules.clone();
                if rules.is_empty() {
                    return WProgram::new(rules);
                }
                let i = self.rng.random_range(0..rules.len());
                let delta = int(if self.rng.random_bool(0.5) { 1 } else { -1 });
                let c = &rules[i].head;
                let nudge = |b: &Bound| match b {
                    Bound::Finite(v) => Bound::Finite(v + &delta),
                    other => other.clone(),
                };
                let (lower, upper) = if self.rng.random_bool(0.5) {
                    (nudge(c.lower()), c.upper().clone())
                } else {
                    (c.lower().clone(), nudge(c.upper()))
                };
                rules[i].head = WeightConstraint::new(lower, c.pairs().to_vec(), upper).expect("same weights");
                WProgram::new(rules)
            }
        }
    }

    /// A consistent set of literals over `atoms`.
    pub fn interpretation(&mut self, atoms: &[Atom]) -> Interpretation {
        let lits = atoms.iter().filter_map(|a| match self.rng.random_range(0..3) {
            0 => None,
            1 => Some(Literal::pos(a.clone())),
            _ => Some(Literal::neg(a.clone())),
        });
        Interpretation::new(lits).expect("one literal per atom")
    }

    /// A random subset of `z`.
    pub fn subset_of(&mut self, z: &Interpretation) -> Interpretation {
        let lits: Vec<Literal> = z.iter().filter(|_| self.rng.random_bool(0.5)).cloned().collect();
        Interpretation::from_set_unchecked(lits.into_iter().collect())
    }

    /// A nested expression of depth at most `depth`.
    pub fn formula(&mut self, atoms: &[Atom], depth: usize) -> Formula {
        let leaf = depth == 0 || self.rng.random_bool(0.3);
        if leaf {
            return match self.rng.random_range(0..10) {
                0 => Formula::Top,
                1 => Formula::Bot,
                _ => Formula::Lit(self.literal(atoms)),
            };
        }
        match self.rng.random_range(0..3) {
            0 => Formula::not(self.formula(atoms, depth - 1)),
            k => {
                let n = self.rng.random_range(2..=3);
                let fs = (0..n).map(|_| self.formula(atoms, depth - 1)).collect();
                if k == 1 {
                    Formula::And(fs)
                } else {
                    Formula::Or(fs)
                }
            }
        }
    }

    /// A formula without negation as failure.
    pub fn naf_free_formula(&mut self, atoms: &[Atom], depth: usize) -> Formula {
        if depth == 0 || self.rng.random_bool(0.3) {
            return Formula::Lit(self.literal(atoms));
        }
        let n = self.rng.random_range(2..=3);
        let fs = (0..n).map(|_| self.naf_free_formula(atoms, depth - 1)).collect();
        if self.rng.random_bool(0.5) {
            Formula::And(fs)
        } else {
            Formula::Or(fs)
        }
    }

    pub fn nested_program(&mut self, atoms: &[Atom]) -> NProgram {
        let n = self.rng.random_range(1..=self.cfg.max_rules);
        NProgram::new(
            (0..n)
                .map(|_| NRule::new(self.formula(atoms, 2), self.formula(atoms, 2)))
                .collect(),
        )
    }

    /// Heads are literals or `⊥`; bodies are conjunctions of possibly
    /// negated-as-failure literals.
    pub fn nonnested_program(&mut self, atoms: &[Atom]) -> NProgram {
        let n = self.rng.random_range(1..=self.cfg.max_rules);
        let rules = (0..n)
            .map(|_| {
                let head = if self.rng.random_bool(0.15) {
                    Formula::Bot
                } else {
                    Formula::Lit(self.literal(atoms))
                };
                let k = self.rng.random_range(0..=3);
                let body: Vec<Formula> = (0..k)
                    .map(|_| {
                        let l = Formula::Lit(self.literal(atoms));
                        if self.rng.random_bool(0.4) {
                            Formula::not(l)
                        } else {
                            l
                        }
                    })
                    .collect();
                NRule::new(head, crate::syntax::big_and(body))
            })
            .collect();
        NProgram::new(rules)
    }

    /// Rules `l.` and `l₁ ← l₂` over `atoms`, as a weight program.
    pub fn unary_program(&mut self, atoms: &[Atom]) -> WProgram {
        let n = self.rng.random_range(0..=3);
        let rules = (0..n)
            .map(|_| {
                let head = WeightConstraint::element(RuleElement::positive(self.literal(atoms)));
                let body = if self.rng.random_bool(0.5) {
                    vec![WeightConstraint::element(RuleElement::positive(self.literal(atoms)))]
                } else {
                    Vec::new()
                };
                WRule::new(head, body)
            })
            .collect();
        WProgram::new(rules)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::Signature;

    #[test]
    fn deterministic() {
        let a: Vec<String> = (0..5).map(|_| Generator::new(7).weight_program().to_string()).collect();
        assert!(a.windows(2).all(|w| w[0] == w[1]));
        assert_ne!(Generator::new(1).weight_program(), Generator::new(2).weight_program());
    }

    #[test]
    fn respects_limits() {
        let mut g = Generator::new(0);
        for _ in 0..300 {
            let p = g.weight_program();
            assert!(p.rules.len() <= 4 && p.signature().len() <= 5);
            for c in p.constraints() {
                assert!(c.length() <= 4 && c.has_integer_weights());
                assert!(c.pairs().iter().all(|p| p.weight <= int(4)));
            }
        }
    }

    #[test]
    fn nonnested_programs_are_nonnested() {
        let mut g = Generator::new(3);
        for _ in 0..100 {
            let atoms = g.atoms();
            assert!(crate::completion::is_nonnested(&g.nonnested_program(&atoms)));
        }
    }
}

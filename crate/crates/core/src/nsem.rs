//! Answer-set semantics of programs with nested expressions.

use crate::error::Result;
use crate::syntax::{Formula, Interpretation, NProgram, NRule, Signature};
use crate::universe::{check_cap, submasks, Compiled, Universe};

pub fn satisfies_formula(z: &Interpretation, f: &Formula) -> bool {
    match f {
        Formula::Bot => false,
        Formula::Top => true,
        Formula::Lit(l) => z.contains(l),
        Formula::Not(g) => !satisfies_formula(z, g),
        Formula::And(fs) => fs.iter().all(|g| satisfies_formula(z, g)),
        Formula::Or(fs) => fs.iter().any(|g| satisfies_formula(z, g)),
    }
}

pub fn satisfies_nrule(z: &Interpretation, r: &NRule) -> bool {
    !satisfies_formula(z, &r.body) || satisfies_formula(z, &r.head)
}

pub fn satisfies_nprogram(z: &Interpretation, p: &NProgram) -> bool {
    p.rules.iter().all(|r| satisfies_nrule(z, r))
}

/// `F^Z`: every `not G` becomes `⊥` if `Z ⊨ G` and `⊤` otherwise.
pub fn reduct_formula(f: &Formula, z: &Interpretation) -> Formula {
    match f {
        Formula::Not(g) => {
            if satisfies_formula(z, g) {
                Formula::Bot
            } else {
                Formula::Top
            }
        }
        Formula::And(fs) => Formula::And(fs.iter().map(|g| reduct_formula(g, z)).collect()),
        Formula::Or(fs) => Formula::Or(fs.iter().map(|g| reduct_formula(g, z)).collect()),
        other => other.clone(),
    }
}

pub fn reduct_nprogram(p: &NProgram, z: &Interpretation) -> NProgram {
    NProgram {
        rules: p
            .rules
            .iter()
            .map(|r| NRule::new(reduct_formula(&r.head, z), reduct_formula(&r.body, z)))
            .collect(),
        aux_atoms: p.aux_atoms.clone(),
    }
}

struct CompiledRule {
    head: Compiled,
    body: Compiled,
}

impl CompiledRule {
    fn holds(&self, z: u64) -> bool {
        !self.body.eval(z) || self.head.eval(z)
    }
}

/// All answer sets, by enumerating the consistent candidates over the
/// signature and checking minimality among subsets of each candidate.
pub fn answer_sets_n(p: &NProgram, cap: usize) -> Result<Vec<Interpretation>> {
    let atoms = p.signature();
    check_cap(atoms.len(), cap)?;
    let universe = Universe::new(atoms);
    let rules: Vec<CompiledRule> = p
        .rules
        .iter()
        .map(|r| CompiledRule {
            head: universe.compile(&r.head),
            body: universe.compile(&r.body),
        })
        .collect();

    let mut out = Vec::new();
    for z in universe.consistent_masks() {
        let reduct: Vec<CompiledRule> = rules
            .iter()
            .map(|r| CompiledRule {
                head: r.head.reduct(z),
                body: r.body.reduct(z),
            })
            .collect();
        if !reduct.iter().all(|r| r.holds(z)) {
            continue;
        }
        let minimal = submasks(z)
            .skip(1)
            .all(|sub| !reduct.iter().all(|r| r.holds(sub)));
        if minimal {
            out.push(universe.interpretation(z));
        }
    }
    out.sort();
    Ok(out)
}

/// No member is a proper subset of another.
pub fn is_antichain(sets: &[Interpretation]) -> bool {
    sets.iter()
        .all(|x| sets.iter().all(|y| !x.is_proper_subset(y)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::{parse_formula, parse_nested_program};
    use crate::syntax::{Atom, Literal};
    use crate::universe::DEFAULT_CAP;

    fn z(names: &[&str]) -> Interpretation {
        Interpretation::of_atoms(names.iter().copied())
    }

    fn f(text: &str) -> Formula {
        parse_formula(text).unwrap()
    }

    fn sets(text: &str) -> Vec<String> {
        answer_sets_n(&parse_nested_program(text).unwrap(), DEFAULT_CAP)
            .unwrap()
            .iter()
            .map(|i| i.to_string())
            .collect()
    }

    #[test]
    fn formula_satisfaction() {
        assert!(satisfies_formula(&z(&["a"]), &f("a; not a")));
        assert!(satisfies_formula(&z(&[]), &f("not (a, b)")));
        assert!(!satisfies_formula(&z(&["a", "b"]), &f("(a; not a), (b; not b), not (a, b)")));
        assert!(satisfies_formula(&z(&[]), &Formula::Top));
        assert!(!satisfies_formula(&z(&["a"]), &Formula::Bot));
    }

    #[test]
    fn formula_reducts() {
        assert_eq!(reduct_formula(&f("not not a"), &z(&["a"])), Formula::Top);
        assert_eq!(reduct_formula(&f("not not a"), &z(&[])), Formula::Bot);
        assert_eq!(reduct_formula(&f("a"), &z(&[])), f("a"));
    }

    #[test]
    fn program_reducts() {
        let p = parse_nested_program("a :- not not a.").unwrap();
        assert_eq!(reduct_nprogram(&p, &z(&["a"])).to_string(), "a.\n");
        assert_eq!(reduct_nprogram(&p, &z(&[])).to_string(), "a :- bot.\n");
        let plain = parse_nested_program("a :- b, c. b.").unwrap();
        assert_eq!(reduct_nprogram(&plain, &z(&["a"])), plain);
    }

    #[test]
    fn answer_sets_of_small_programs() {
        assert_eq!(sets("a ; not a."), ["{}", "{a}"]);
        assert_eq!(sets("a :- not not a."), ["{}", "{a}"]);
        assert_eq!(sets("-a :- not a."), ["{-a}"]);
        assert_eq!(sets("a ; b."), ["{a}", "{b}"]);
        assert_eq!(sets(""), ["{}"]);
        assert_eq!(sets("bot."), Vec::<String>::new());
    }

    #[test]
    fn antichains() {
        assert!(!is_antichain(&[z(&[]), z(&["a"])]));
        assert!(is_antichain(&[z(&["a"]), z(&["b"])]));
        assert!(is_antichain(&[]));
    }

    #[test]
    fn classical_negation_kept_consistent() {
        let p = parse_nested_program("a. -a.").unwrap();
        assert!(answer_sets_n(&p, DEFAULT_CAP).unwrap().is_empty());
        let q = NProgram::new(vec![NRule::fact(Formula::Lit(Literal::neg(Atom::new("b"))))]);
        assert_eq!(answer_sets_n(&q, DEFAULT_CAP).unwrap()[0].to_string(), "{-b}");
    }
}

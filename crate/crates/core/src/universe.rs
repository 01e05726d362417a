//! Bit-level indexing of literals for the brute-force enumerators.
//!
//! Atom `i` owns bit `2i` (the positive literal) and bit `2i + 1` (its
//! classical negation), so a `u64` holds an interpretation over at most 32
//! atoms.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::syntax::{Atom, Formula, Interpretation, Literal};

pub const DEFAULT_CAP: usize = 16;
pub(crate) const MAX_ATOMS: usize = 32;

pub(crate) fn check_cap(size: usize, cap: usize) -> Result<()> {
    if size > cap || size > MAX_ATOMS {
        Err(Error::CapExceeded { cap: cap.min(MAX_ATOMS), size })
    } else {
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Universe {
    atoms: Vec<Atom>,
    index: HashMap<Atom, usize>,
}

impl Universe {
    pub(crate) fn new(atoms: Vec<Atom>) -> Self {
        let index = atoms.iter().cloned().enumerate().map(|(i, a)| (a, i)).collect();
        Self { atoms, index }
    }

    pub(crate) fn bit(&self, l: &Literal) -> u64 {
        let i = self.index[&l.atom];
        1u64 << (2 * i + l.neg as usize)
    }

    pub(crate) fn literals_of(&self, mask: u64) -> BTreeSet<Literal> {
        let mut out = BTreeSet::new();
        for (i, a) in self.atoms.iter().enumerate() {
            if mask & (1 << (2 * i)) != 0 {
                out.insert(Literal::pos(a.clone()));
            }
            if mask & (1 << (2 * i + 1)) != 0 {
                out.insert(Literal::neg(a.clone()));
            }
        }
        out
    }

    pub(crate) fn interpretation(&self, mask: u64) -> Interpretation {
        Interpretation::from_set_unchecked(self.literals_of(mask))
    }

    /// All consistent masks: each atom absent, positive, or negative.
    pub(crate) fn consistent_masks(&self) -> Vec<u64> {
        let mut out = vec![0u64];
        for i in 0..self.atoms.len() {
            let mut next = Vec::with_capacity(out.len() * 3);
            for &m in &out {
                next.push(m);
                next.push(m | 1 << (2 * i));
                next.push(m | 1 << (2 * i + 1));
            }
            out = next;
        }
        out
    }

    pub(crate) fn compile(&self, f: &Formula) -> Compiled {
        match f {
            Formula::Bot => Compiled::Bot,
            Formula::Top => Compiled::Top,
            Formula::Lit(l) => Compiled::Lit(self.bit(l)),
            Formula::Not(g) => Compiled::Not(Box::new(self.compile(g))),
            Formula::And(fs) => Compiled::And(fs.iter().map(|g| self.compile(g)).collect()),
            Formula::Or(fs) => Compiled::Or(fs.iter().map(|g| self.compile(g)).collect()),
        }
    }
}

/// A nested formula over literal bits.
#[derive(Clone, Debug)]
pub(crate) enum Compiled {
    Bot,
    Top,
    Lit(u64),
    Not(Box<Compiled>),
    And(Vec<Compiled>),
    Or(Vec<Compiled>),
}

impl Compiled {
    pub(crate) fn eval(&self, z: u64) -> bool {
        match self {
            Compiled::Bot => false,
            Compiled::Top => true,
            Compiled::Lit(b) => z & b != 0,
            Compiled::Not(g) => !g.eval(z),
            Compiled::And(fs) => fs.iter().all(|g| g.eval(z)),
            Compiled::Or(fs) => fs.iter().any(|g| g.eval(z)),
        }
    }

    /// The reduct with respect to `z`; the result has no `Not` nodes.
    pub(crate) fn reduct(&self, z: u64) -> Compiled {
        match self {
            Compiled::Not(g) => {
                if g.eval(z) {
                    Compiled::Bot
                } else {
                    Compiled::Top
                }
            }
            Compiled::And(fs) => Compiled::And(fs.iter().map(|g| g.reduct(z)).collect()),
            Compiled::Or(fs) => Compiled::Or(fs.iter().map(|g| g.reduct(z)).collect()),
            other => other.clone(),
        }
    }
}

/// Iterate over all submasks of `mask`, including `mask` itself and 0.
pub(crate) fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & mask) };
        Some(cur)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn consistent_masks_count() {
        let u = Universe::new(vec![Atom::new("a"), Atom::new("b"), Atom::new("c")]);
        let masks = u.consistent_masks();
        assert_eq!(masks.len(), 27);
        assert!(masks.iter().all(|m| m & (m >> 1) & 0x5555_5555_5555_5555 == 0));
    }

    #[test]
    fn submask_enumeration() {
        let subs: Vec<u64> = submasks(0b101).collect();
        assert_eq!(subs, vec![0b101, 0b100, 0b001, 0]);
        assert_eq!(submasks(0).collect::<Vec<_>>(), vec![0]);
    }
}

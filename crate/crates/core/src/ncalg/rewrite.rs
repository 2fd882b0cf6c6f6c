//! A plain word-rewriting implementation of the same presentation, used as an
//! independent route to the normal form and for overlap (critical pair) checks.

use std::collections::BTreeMap;

use super::rules::Rules;
use super::{key_word, Alphabet, Element, Key, Letter, NormalForm, Word};
use crate::error::{Error, Result};
use crate::params::ParamValues;
use crate::scalar::Scalar;

/// Which redex to contract first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

#[derive(Clone, Debug)]
struct Rule {
    lhs: [Letter; 2],
    rhs: Vec<(Word, Scalar)>,
}

#[derive(Clone, Debug)]
pub struct RewriteSystem {
    rules: Vec<Rule>,
    budget: u64,
}

/// `Some(key)` iff `w` is a normal-ordered word `Z^m Y^n T1^i`.
pub fn normal_key(w: &[Letter]) -> Option<Key> {
    let (mut m, mut n, mut t) = (0i32, 0i32, 0u8);
    let mut stage = 0;
    for (i, &x) in w.iter().enumerate() {
        match x {
            Letter::Z | Letter::Zi if stage == 0 => {
                let d = if x == Letter::Z { 1 } else { -1 };
                if m * d < 0 {
                    return None;
                }
                m += d;
            }
            Letter::Y | Letter::Yi if stage <= 1 => {
                stage = 1;
                let d = if x == Letter::Y { 1 } else { -1 };
                if n * d < 0 {
                    return None;
                }
                n += d;
            }
            Letter::T1 if i + 1 == w.len() => t = 1,
            _ => return None,
        }
    }
    Some((m, n, t))
}

impl RewriteSystem {
    pub fn new(values: &ParamValues, budget: u64) -> Self {
        let rules = Rules::new(values)
            .length_two()
            .into_iter()
            .map(|(lhs, rhs)| {
                let rhs: Vec<(Word, Scalar)> =
                    rhs.terms().iter().map(|(&k, c)| (key_word(k), c.clone())).collect();
                for (w, _) in &rhs {
                    assert!(normal_key(w).is_some(), "rule right side not normal-ordered");
                }
                Rule { lhs, rhs }
            })
            .collect();
        RewriteSystem { rules, budget }
    }

    pub fn rule_count(&self) -> usize {
        self.rules.len()
    }

    /// Left sides of all rules.
    pub fn left_sides(&self) -> Vec<[Letter; 2]> {
        self.rules.iter().map(|r| r.lhs).collect()
    }

    fn rule_at(&self, w: &[Letter], pos: usize) -> Option<&Rule> {
        self.rules.iter().find(|r| w[pos] == r.lhs[0] && w[pos + 1] == r.lhs[1])
    }

    fn redex(&self, w: &[Letter], strategy: Strategy) -> Option<(usize, &Rule)> {
        let n = w.len();
        if n < 2 {
            return None;
        }
        let mut positions: Box<dyn Iterator<Item = usize>> = match strategy {
            Strategy::Leftmost => Box::new(0..n - 1),
            Strategy::Rightmost => Box::new((0..n - 1).rev()),
        };
        positions.find_map(|p| self.rule_at(w, p).map(|r| (p, r)))
    }

    fn contract(w: &[Letter], pos: usize, rule: &Rule, c: &Scalar, out: &mut BTreeMap<Word, Scalar>) {
        for (rw, rc) in &rule.rhs {
            let mut nw = w[..pos].to_vec();
            nw.extend_from_slice(rw);
            nw.extend_from_slice(&w[pos + 2..]);
            add_into(out, nw, c.mul(rc));
        }
    }

    /// Rewrites to normal form, contracting redexes in the given order.
    pub fn normalize(&self, e: &Element, strategy: Strategy) -> Result<NormalForm> {
        if e.alphabet() != Alphabet::Daha {
            return Err(Error::AlphabetMismatch);
        }
        self.normalize_terms(e.terms().clone(), strategy)
    }

    fn normalize_terms(&self, mut pending: BTreeMap<Word, Scalar>, strategy: Strategy) -> Result<NormalForm> {
        let mut out = NormalForm::zero();
        let mut steps = 0u64;
        while let Some((w, c)) = pending.pop_first() {
            match self.redex(&w, strategy) {
                None => {
                    let k = normal_key(&w).expect("irreducible words are normal-ordered");
                    out.add_term(k, &c);
                }
                Some((pos, rule)) => {
                    steps += 1;
                    if steps > self.budget {
                        return Err(Error::BudgetExhausted(self.budget));
                    }
                    RewriteSystem::contract(&w, pos, rule, &c, &mut pending);
                }
            }
        }
        Ok(out)
    }

    /// Every overlap `xyz` of two left sides `xy`, `yz`, with the normal forms
    /// reached by contracting first at position 0 and first at position 1.
    pub fn critical_pairs(&self) -> Result<Vec<(Word, NormalForm, NormalForm)>> {
        let mut out = Vec::new();
        for r1 in &self.rules {
            for r2 in &self.rules {
                if r1.lhs[1] != r2.lhs[0] {
                    continue;
                }
                let w = vec![r1.lhs[0], r1.lhs[1], r2.lhs[1]];
                let one = Scalar::one();
                let mut left = BTreeMap::new();
                RewriteSystem::contract(&w, 0, r1, &one, &mut left);
                let mut right = BTreeMap::new();
                RewriteSystem::contract(&w, 1, r2, &one, &mut right);
                let l = self.normalize_terms(left, Strategy::Leftmost)?;
                let r = self.normalize_terms(right, Strategy::Leftmost)?;
                out.push((w, l, r));
            }
        }
        Ok(out)
    }
}

fn add_into(map: &mut BTreeMap<Word, Scalar>, w: Word, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match map.entry(w) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let s = o.get().add(&c);
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

//! Noncommutative elements over the DAHA and AW alphabets, their normal forms,
//! and the identity machinery built on top of the reduction engine.

mod aw;
mod duality;
mod engine;
mod probes;
mod rewrite;
mod rules;
mod spherical;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub use aw::{
    aw_equal, aw_q0_equal, casimir_word, embed_aw, relation_k0, relation_k1, AwRelation,
};
pub use duality::{
    aw_dual_relations, daha_dual_relations, duality_image, image_with, DualityKind, LetterImage,
    AW_DUALITY, DAHA_DUALITY,
};
pub use engine::{DahaAlgebra, DEFAULT_BUDGET};
pub use probes::{
    center_probe, centralizer_probe, psym_commutator, shift_operator_identities,
    shift_operator_perturbed,
};
pub use rewrite::{RewriteSystem, Strategy};
pub use rules::{daha_relations, Rules};
pub use spherical::{
    antispherical, check_step_identity, idempotents, is_o_of, iso_antispherical, iso_spherical,
    right_factor, spherical, step_catalog, Factor, StepIdentity, StepOutcome,
};

/// A generator letter. `T1` belongs to both alphabets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Z,
    Zi,
    Y,
    Yi,
    T1,
    K0,
    K1,
}

impl Letter {
    pub fn name(self) -> &'static str {
        match self {
            Letter::Z => "Z",
            Letter::Zi => "Zi",
            Letter::Y => "Y",
            Letter::Yi => "Yi",
            Letter::T1 => "T1",
            Letter::K0 => "K0",
            Letter::K1 => "K1",
        }
    }

    pub fn in_alphabet(self, alphabet: Alphabet) -> bool {
        match alphabet {
            Alphabet::Daha => !matches!(self, Letter::K0 | Letter::K1),
            Alphabet::Aw => matches!(self, Letter::K0 | Letter::K1 | Letter::T1),
        }
    }

    pub fn inverse(self) -> Option<Letter> {
        match self {
            Letter::Z => Some(Letter::Zi),
            Letter::Zi => Some(Letter::Z),
            Letter::Y => Some(Letter::Yi),
            Letter::Yi => Some(Letter::Y),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Alphabet {
    Daha,
    Aw,
}

pub type Word = Vec<Letter>;

/// A finite linear combination of words over one alphabet.
#[derive(Clone, Debug, PartialEq)]
pub struct Element {
    alphabet: Alphabet,
    terms: BTreeMap<Word, Scalar>,
}

impl Element {
    pub fn zero(alphabet: Alphabet) -> Self {
        Element { alphabet, terms: BTreeMap::new() }
    }

    pub fn one(alphabet: Alphabet) -> Self {
        Element::scalar(alphabet, Scalar::one())
    }

    pub fn scalar(alphabet: Alphabet, c: Scalar) -> Self {
        let mut e = Element::zero(alphabet);
        e.add_term(Vec::new(), c);
        e
    }

    pub fn word(alphabet: Alphabet, letters: &[Letter]) -> Result<Self> {
        Element::term(alphabet, letters, Scalar::one())
    }

    pub fn term(alphabet: Alphabet, letters: &[Letter], c: Scalar) -> Result<Self> {
        if letters.iter().any(|l| !l.in_alphabet(alphabet)) {
            return Err(Error::AlphabetMismatch);
        }
        let mut e = Element::zero(alphabet);
        e.add_term(letters.to_vec(), c);
        Ok(e)
    }

    /// A single word over the DAHA alphabet.
    pub fn daha(letters: &[Letter]) -> Self {
        Element::word(Alphabet::Daha, letters).expect("DAHA letters")
    }

    /// A single word over the AW alphabet.
    pub fn aw(letters: &[Letter]) -> Self {
        Element::word(Alphabet::Aw, letters).expect("AW letters")
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn terms(&self) -> &BTreeMap<Word, Scalar> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    fn check_same(&self, other: &Self) {
        assert_eq!(self.alphabet, other.alphabet, "elements over different alphabets");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same(other);
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&Scalar::int(-1))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Element::zero(self.alphabet);
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x.mul(c));
        }
        out
    }

    /// Concatenation product.
    pub fn mul(&self, other: &Self) -> Self {
        self.check_same(other);
        let mut out = Element::zero(self.alphabet);
        for (u, x) in &self.terms {
            for (v, y) in &other.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.add_term(w, x.mul(y));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Element::one(self.alphabet), |acc, _| acc.mul(self))
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, mut f: impl FnMut(&Scalar) -> Result<Scalar>) -> Result<Self> {
        let mut out = Element::zero(self.alphabet);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c)?);
        }
        Ok(out)
    }
}

pub fn sum_elements(alphabet: Alphabet, xs: impl IntoIterator<Item = Element>) -> Element {
    xs.into_iter().fold(Element::zero(alphabet), |acc, x| acc.add(&x))
}

fn write_word(f: &mut fmt::Formatter<'_>, w: &[Letter]) -> fmt::Result {
    if w.is_empty() {
        return write!(f, "1");
    }
    let names: Vec<&str> = w.iter().map(|l| l.name()).collect();
    write!(f, "{}", names.join("*"))
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({}) * ", c)?;
            write_word(f, w)?;
        }
        Ok(())
    }
}

/// Basis index `(m, n, i)` for `Z^m Y^n T1^i`.
pub type Key = (i32, i32, u8);

/// A linear combination of the basis elements `Z^m Y^n T1^i`, `i in {0, 1}`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct NormalForm {
    terms: BTreeMap<Key, Scalar>,
}

impl NormalForm {
    pub fn zero() -> Self {
        NormalForm::default()
    }

    pub fn one() -> Self {
        NormalForm::monomial((0, 0, 0), Scalar::one())
    }

    pub fn scalar(c: Scalar) -> Self {
        NormalForm::monomial((0, 0, 0), c)
    }

    pub fn monomial(k: Key, c: Scalar) -> Self {
        let mut nf = NormalForm::zero();
        nf.add_term(k, &c);
        nf
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Key, Scalar)>) -> Self {
        let mut nf = NormalForm::zero();
        for (k, c) in terms {
            nf.add_term(k, &c);
        }
        nf
    }

    pub fn terms(&self) -> &BTreeMap<Key, Scalar> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: Key) -> Scalar {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, k: Key, c: &Scalar) {
        assert!(k.2 <= 1, "T1 exponent must be 0 or 1");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &NormalForm, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let one = c.is_one();
        for (k, x) in &other.terms {
            if one {
                self.add_term(*k, x);
            } else {
                self.add_term(*k, &x.mul(c));
            }
        }
    }

    pub fn add(&self, other: &NormalForm) -> NormalForm {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one());
        out
    }

    pub fn sub(&self, other: &NormalForm) -> NormalForm {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::int(-1));
        out
    }

    pub fn neg(&self) -> NormalForm {
        self.scale(&Scalar::int(-1))
    }

    pub fn scale(&self, c: &Scalar) -> NormalForm {
        let mut out = NormalForm::zero();
        out.add_scaled(self, c);
        out
    }

    /// The same expansion read back as an element over the DAHA alphabet.
    pub fn to_element(&self) -> Element {
        let mut e = Element::zero(Alphabet::Daha);
        for (&k, c) in &self.terms {
            e.add_term(key_word(k), c.clone());
        }
        e
    }

    /// The `T1^i` layer as a Laurent combination of `Z^m Y^n`.
    pub fn layer(&self, i: u8) -> BTreeMap<(i32, i32), Scalar> {
        self.terms
            .iter()
            .filter(|(k, _)| k.2 == i)
            .map(|(k, c)| ((k.0, k.1), c.clone()))
            .collect()
    }

    /// The first term in basis order, for failure diagnostics.
    pub fn first_term(&self) -> Option<(Key, &Scalar)> {
        self.terms.iter().next().map(|(k, c)| (*k, c))
    }

    /// One basis monomial per line, as `coef * Z^m Y^n T1^i`.
    pub fn to_lines(&self) -> Vec<String> {
        self.terms
            .iter()
            .map(|(&(m, n, i), c)| format!("{} * Z^{} Y^{} T1^{}", wrap(c), m, n, i))
            .collect()
    }

    /// A short summary: the first offending monomial and the term count.
    pub fn summary(&self) -> String {
        match self.first_term() {
            None => String::new(),
            Some(((m, n, i), c)) => format!(
                "{} term(s); first: {} * Z^{} Y^{} T1^{}",
                self.len(),
                wrap(c),
                m,
                n,
                i
            ),
        }
    }
}

/// A coefficient, parenthesized unless it is a single term.
fn wrap(c: &Scalar) -> String {
    let s = c.to_string();
    if s.contains(" + ") || s.contains(" - ") || s.contains('/') {
        format!("({s})")
    } else {
        s
    }
}

/// The word `Z^m Y^n T1^i` as a sequence of single letters.
pub fn key_word((m, n, i): Key) -> Word {
    let z = if m >= 0 { Letter::Z } else { Letter::Zi };
    let y = if n >= 0 { Letter::Y } else { Letter::Yi };
    let mut w = vec![z; m.unsigned_abs() as usize];
    w.extend(std::iter::repeat(y).take(n.unsigned_abs() as usize));
    if i == 1 {
        w.push(Letter::T1);
    }
    w
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", self.to_lines().join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn element_letters_respect_alphabet() {
        assert_eq!(Element::word(Alphabet::Aw, &[Letter::Z]), Err(Error::AlphabetMismatch));
        assert!(Element::word(Alphabet::Daha, &[Letter::T1, Letter::Z]).is_ok());
        assert!(Element::word(Alphabet::Aw, &[Letter::T1, Letter::K0]).is_ok());
    }

    #[test]
    fn element_arithmetic_drops_zeros() {
        let x = Element::daha(&[Letter::Z]);
        assert!(x.sub(&x).is_zero());
        let y = x.add(&Element::one(Alphabet::Daha)).pow(2);
        // (Z + 1)^2 = ZZ + 2Z + 1 as words
        assert_eq!(y.len(), 3);
        assert_eq!(y.terms()[&vec![Letter::Z]], Scalar::int(2));
    }

    #[test]
    fn key_word_round_trip() {
        assert_eq!(
            key_word((-2, 3, 1)),
            vec![Letter::Zi, Letter::Zi, Letter::Y, Letter::Y, Letter::Y, Letter::T1]
        );
        assert!(key_word((0, 0, 0)).is_empty());
    }
}

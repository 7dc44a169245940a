//! The multirelation value type and the set-theoretic operations on it.
//!
//! A multirelation over a universe `X` is a set of pairs `(a, A)` with `a ∈ X`
//! and `A ⊆ X`. Pairs are packed into a flat bitset: pair `(a, A)` lives at bit
//! `a · 2^n + A`, so iterating set bits yields the canonical order
//! (element index, then numeric subset value) and structural equality is set
//! equality.

use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::{smallvec, SmallVec};

use crate::error::RelError;
use crate::family::{small_mask, Family};
use crate::universe::{StateSet, Universe};

/// The distinguished constants of the algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Constant {
    /// `∅`
    Empty,
    /// `1σ = {(x,{x})}`, the unit of sequential composition.
    OneSigma,
    /// `1π = {(x,∅)}`, the unit of parallel composition.
    OnePi,
    /// `U`, every pair.
    Univ,
    /// `1̄π`, the complement of `1π`.
    CoOnePi,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiRelation {
    universe: Universe,
    bits: SmallVec<[u64; 2]>,
}

fn total_bits(n: usize) -> usize {
    n << n
}

fn word_count(n: usize) -> usize {
    total_bits(n).div_ceil(64)
}

impl MultiRelation {
    pub fn empty(universe: &Universe) -> Self {
        MultiRelation {
            universe: universe.clone(),
            bits: smallvec![0; word_count(universe.len())],
        }
    }

    pub fn constant(universe: &Universe, which: Constant) -> Self {
        let n = universe.len();
        let mut out = Self::empty(universe);
        match which {
            Constant::Empty => {}
            Constant::OneSigma => {
                for a in 0..n {
                    out.insert_unchecked(a, StateSet::singleton(a));
                }
            }
            Constant::OnePi => {
                for a in 0..n {
                    out.insert_unchecked(a, StateSet::EMPTY);
                }
            }
            Constant::Univ => out = out.complement(),
            Constant::CoOnePi => {
                out = Self::constant(universe, Constant::OnePi).complement();
            }
        }
        out
    }

    pub fn one_sigma(universe: &Universe) -> Self {
        Self::constant(universe, Constant::OneSigma)
    }

    pub fn one_pi(universe: &Universe) -> Self {
        Self::constant(universe, Constant::OnePi)
    }

    pub fn univ(universe: &Universe) -> Self {
        Self::constant(universe, Constant::Univ)
    }

    pub fn co_one_pi(universe: &Universe) -> Self {
        Self::constant(universe, Constant::CoOnePi)
    }

    /// Builds a multirelation from labelled pairs. Duplicates collapse.
    pub fn from_pairs<'a, I, T>(universe: &Universe, pairs: I) -> Result<Self, RelError>
    where
        I: IntoIterator<Item = (&'a str, T)>,
        T: IntoIterator<Item = &'a str>,
    {
        let mut out = Self::empty(universe);
        for (source, targets) in pairs {
            let a = universe.index_of(source)?;
            let set = universe.state_set(targets)?;
            out.insert_unchecked(a, set);
        }
        Ok(out)
    }

    pub fn from_index_pairs<I>(universe: &Universe, pairs: I) -> Result<Self, RelError>
    where
        I: IntoIterator<Item = (usize, StateSet)>,
    {
        let mut out = Self::empty(universe);
        for (a, set) in pairs {
            out.insert(a, set)?;
        }
        Ok(out)
    }

    /// Decodes a multirelation from its bit code. Only for `n ≤ 4`, where the
    /// `n · 2^n` pair bits fit in one word.
    pub fn from_code(universe: &Universe, code: u64) -> Self {
        let n = universe.len();
        debug_assert!(n <= 4);
        let mut out = Self::empty(universe);
        if let Some(w) = out.bits.first_mut() {
            let total = total_bits(n);
            *w = if total >= 64 { code } else { code & ((1u64 << total) - 1) };
        }
        out
    }

    /// The bit code of a multirelation over at most four elements.
    pub fn code(&self) -> Option<u64> {
        match self.bits.len() {
            0 => Some(0),
            1 => Some(self.bits[0]),
            _ => None,
        }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn insert(&mut self, source: usize, targets: StateSet) -> Result<(), RelError> {
        let n = self.universe.len();
        if source >= n {
            return Err(RelError::IndexOutOfRange { index: source, size: n });
        }
        if !targets.fits(&self.universe) {
            return Err(RelError::StateSetTooWide(n));
        }
        self.insert_unchecked(source, targets);
        Ok(())
    }

    fn insert_unchecked(&mut self, source: usize, targets: StateSet) {
        let bit = (source << self.universe.len()) + targets.0 as usize;
        self.bits[bit / 64] |= 1 << (bit % 64);
    }

    pub fn contains(&self, source: usize, targets: StateSet) -> bool {
        let n = self.universe.len();
        if source >= n || !targets.fits(&self.universe) {
            return false;
        }
        let bit = (source << n) + targets.0 as usize;
        self.bits[bit / 64] >> (bit % 64) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Pairs in canonical order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, StateSet)> + '_ {
        let n = self.universe.len();
        self.bits.iter().enumerate().flat_map(move |(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = wi * 64 + rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some((b >> n, StateSet((b & ((1 << n) - 1)) as u32)))
                }
            })
        })
    }

    /// Labelled pairs in canonical order.
    pub fn labelled_pairs(&self) -> Vec<(String, Vec<String>)> {
        self.pairs()
            .map(|(a, set)| (self.universe.name(a).to_string(), set.labels(&self.universe)))
            .collect()
    }

    /// Sources that are related to something.
    pub fn sources(&self) -> StateSet {
        let mut out = StateSet::EMPTY;
        for a in 0..self.universe.len() {
            if !self.row(a).is_empty() {
                out = out.with(a);
            }
        }
        out
    }

    /// The set of targets of source `a`.
    pub(crate) fn row(&self, a: usize) -> Family {
        let n = self.universe.len();
        let width = 1usize << n;
        if width < 64 {
            let offset = a * width;
            let word = self.bits[offset / 64] >> (offset % 64) & small_mask(n);
            Family::from_words(smallvec![word])
        } else {
            let per = width / 64;
            Family::from_words(SmallVec::from_slice(&self.bits[a * per..(a + 1) * per]))
        }
    }

    pub(crate) fn or_row(&mut self, a: usize, family: &Family) {
        let n = self.universe.len();
        let width = 1usize << n;
        if width < 64 {
            let offset = a * width;
            self.bits[offset / 64] |= (family.words()[0] & small_mask(n)) << (offset % 64);
        } else {
            let per = width / 64;
            for (dst, src) in self.bits[a * per..(a + 1) * per].iter_mut().zip(family.words()) {
                *dst |= src;
            }
        }
    }

    pub(crate) fn rows(&self) -> Vec<Family> {
        (0..self.universe.len()).map(|a| self.row(a)).collect()
    }

    pub(crate) fn from_rows(universe: &Universe, rows: &[Family]) -> Self {
        let mut out = Self::empty(universe);
        for (a, row) in rows.iter().enumerate() {
            out.or_row(a, row);
        }
        out
    }

    pub(crate) fn same_universe(&self, other: &Self) -> Result<(), RelError> {
        if self.universe.same_as(&other.universe) {
            Ok(())
        } else {
            Err(RelError::UniverseMismatch)
        }
    }

    fn zip_words(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Result<Self, RelError> {
        self.same_universe(other)?;
        let bits = self.bits.iter().zip(other.bits.iter()).map(|(&a, &b)| f(a, b)).collect();
        Ok(MultiRelation { universe: self.universe.clone(), bits })
    }

    pub fn union(&self, other: &Self) -> Result<Self, RelError> {
        self.zip_words(other, |a, b| a | b)
    }

    pub fn inter(&self, other: &Self) -> Result<Self, RelError> {
        self.zip_words(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Result<Self, RelError> {
        self.zip_words(other, |a, b| a & !b)
    }

    /// Complement relative to `U`.
    pub fn complement(&self) -> Self {
        let total = total_bits(self.universe.len());
        let mut bits: SmallVec<[u64; 2]> = self.bits.iter().map(|w| !w).collect();
        if !total.is_multiple_of(64) {
            if let Some(last) = bits.last_mut() {
                *last &= (1u64 << (total % 64)) - 1;
            }
        }
        MultiRelation { universe: self.universe.clone(), bits }
    }

    pub fn is_subset(&self, other: &Self) -> Result<bool, RelError> {
        self.same_universe(other)?;
        Ok(self.bits.iter().zip(other.bits.iter()).all(|(&a, &b)| a & !b == 0))
    }

    /// Peleg's sequential composition.
    ///
    /// For each `(a,B) ∈ R` the achievable target unions are folded over
    /// `b ∈ B`, starting from `{∅}` and joining with the successor sets of
    /// `b` in `S`. The working family is a set, so it never exceeds `2^n`
    /// members however many choice functions exist.
    pub fn seq(&self, other: &Self) -> Result<Self, RelError> {
        self.same_universe(other)?;
        let n = self.universe.len();
        let succ = other.rows();
        let mut out = Self::empty(&self.universe);
        for a in 0..n {
            let mut reach = Family::empty(n);
            for intermediate in self.row(a).iter() {
                let mut working = Family::unit(n);
                for b in intermediate.iter() {
                    if succ[b].is_empty() {
                        working = Family::empty(n);
                        break;
                    }
                    working = working.join_all(&succ[b], n);
                }
                reach.or_assign(&working);
            }
            out.or_row(a, &reach);
        }
        Ok(out)
    }

    /// Parallel composition: `{(a, A ∪ B) | (a,A) ∈ R, (a,B) ∈ S}`.
    pub fn par(&self, other: &Self) -> Result<Self, RelError> {
        self.same_universe(other)?;
        let n = self.universe.len();
        let mut out = Self::empty(&self.universe);
        for a in 0..n {
            let joined = self.row(a).join_all(&other.row(a), n);
            out.or_row(a, &joined);
        }
        Ok(out)
    }

    /// Parikh's sequential composition: `(a,A) ∈ R;S` iff some `(a,B) ∈ R`
    /// has `(b,A) ∈ S` for every `b ∈ B`.
    pub fn parikh_seq(&self, other: &Self) -> Result<Self, RelError> {
        self.same_universe(other)?;
        let n = self.universe.len();
        let succ = other.rows();
        let mut out = Self::empty(&self.universe);
        for a in 0..n {
            let mut reach = Family::empty(n);
            for intermediate in self.row(a).iter() {
                let mut common = Family::full(n);
                for b in intermediate.iter() {
                    common.and_assign(&succ[b]);
                }
                reach.or_assign(&common);
            }
            out.or_row(a, &reach);
        }
        Ok(out)
    }

    /// Serializable form: labels for the universe and for every pair.
    pub fn to_json(&self) -> RelationJson {
        RelationJson {
            universe: self.universe.names().to_vec(),
            pairs: self.labelled_pairs(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("relation json serializes")
    }

    pub fn from_json_str(text: &str) -> Result<Self, RelError> {
        let raw: RelationJson =
            serde_json::from_str(text).map_err(|e| RelError::Json(e.to_string()))?;
        raw.into_relation()
    }

    /// Parses the inline literal syntax `{(a,{b,c}), (b,{})}`, optionally
    /// wrapped in angle brackets.
    pub fn parse_literal(universe: &Universe, text: &str) -> Result<Self, RelError> {
        LiteralParser::new(text).parse(universe)
    }
}

/// JSON layout: `{"universe": ["a","b"], "pairs": [["a", ["a"]], ["b", []]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationJson {
    pub universe: Vec<String>,
    pub pairs: Vec<(String, Vec<String>)>,
}

impl RelationJson {
    pub fn into_relation(self) -> Result<MultiRelation, RelError> {
        let universe = Universe::new(self.universe.iter().map(String::as_str))?;
        self.into_relation_over(&universe)
    }

    /// Reads the pairs against an existing universe, which must carry the
    /// same labels in the same order.
    pub fn into_relation_over(self, universe: &Universe) -> Result<MultiRelation, RelError> {
        if universe.names() != self.universe.as_slice() {
            return Err(RelError::UniverseMismatch);
        }
        MultiRelation::from_pairs(
            universe,
            self.pairs
                .iter()
                .map(|(a, targets)| (a.as_str(), targets.iter().map(String::as_str))),
        )
    }
}

impl Serialize for MultiRelation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MultiRelation {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        RelationJson::deserialize(deserializer)?
            .into_relation()
            .map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for MultiRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (a, set)) in self.pairs().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({},{{{}}})", self.universe.name(a), set.labels(&self.universe).join(","))?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for MultiRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

struct LiteralParser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> LiteralParser<'a> {
    fn new(text: &'a str) -> Self {
        LiteralParser { text, pos: 0 }
    }

    fn err(&self, what: &str) -> RelError {
        RelError::Literal(format!("{what} at offset {} in `{}`", self.pos, self.text))
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), RelError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected `{c}`")))
        }
    }

    fn label(&mut self) -> Result<&'a str, RelError> {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.text[self.pos..].chars().next() {
            if c.is_alphanumeric() || c == '_' {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
        if start == self.pos {
            Err(self.err("expected a label"))
        } else {
            Ok(&self.text[start..self.pos])
        }
    }

    fn labels(&mut self) -> Result<Vec<&'a str>, RelError> {
        let mut out = Vec::new();
        if self.eat('∅') {
            return Ok(out);
        }
        self.expect('{')?;
        if self.eat('}') {
            return Ok(out);
        }
        loop {
            out.push(self.label()?);
            if self.eat('}') {
                return Ok(out);
            }
            self.expect(',')?;
        }
    }

    fn parse(mut self, universe: &Universe) -> Result<MultiRelation, RelError> {
        let angled = self.eat('<');
        let mut out = MultiRelation::empty(universe);
        if !self.eat('∅') {
            self.expect('{')?;
            if !self.eat('}') {
                loop {
                    self.expect('(')?;
                    let source = universe.index_of(self.label()?)?;
                    self.expect(',')?;
                    let targets = universe.state_set(self.labels()?)?;
                    self.expect(')')?;
                    out.insert_unchecked(source, targets);
                    if self.eat('}') {
                        break;
                    }
                    self.expect(',')?;
                }
            }
        }
        if angled {
            self.expect('>')?;
        }
        if self.peek().is_some() {
            return Err(self.err("trailing input"));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Universe {
        Universe::new(["a", "b"]).unwrap()
    }

    fn lit(u: &Universe, s: &str) -> MultiRelation {
        MultiRelation::parse_literal(u, s).unwrap()
    }

    #[test]
    fn from_pairs_collapses_duplicates() {
        let u = ab();
        let r = MultiRelation::from_pairs(&u, [("a", vec!["a"]), ("a", vec!["a"])]).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r, lit(&u, "{(a,{a})}"));
    }

    #[test]
    fn from_pairs_empty_and_unknown_label() {
        let u = Universe::new(["a"]).unwrap();
        let r = MultiRelation::from_pairs(&u, Vec::<(&str, Vec<&str>)>::new()).unwrap();
        assert!(r.is_empty());
        let err = MultiRelation::from_pairs(&u, [("b", Vec::<&str>::new())]).unwrap_err();
        assert_eq!(err, RelError::UnknownLabel("b".into()));
    }

    #[test]
    fn constants() {
        let u = ab();
        assert_eq!(MultiRelation::one_sigma(&u), lit(&u, "{(a,{a}),(b,{b})}"));
        assert_eq!(MultiRelation::univ(&u).len(), 8);
        let u1 = Universe::new(["a"]).unwrap();
        assert_eq!(MultiRelation::co_one_pi(&u1), lit(&u1, "{(a,{a})}"));
        assert_eq!(
            MultiRelation::one_pi(&u).complement(),
            MultiRelation::co_one_pi(&u)
        );
    }

    #[test]
    fn set_operations() {
        let u = ab();
        let r = lit(&u, "{(a,{a})}");
        let s = lit(&u, "{(a,{})}");
        assert_eq!(r.union(&s).unwrap(), lit(&u, "{(a,{a}),(a,{})}"));
        assert_eq!(MultiRelation::univ(&u).inter(&r).unwrap(), r);
        assert!(r.is_subset(&MultiRelation::univ(&u)).unwrap());
        assert!(!r.is_subset(&s).unwrap());
    }

    #[test]
    fn universe_mismatch_is_an_error() {
        let r = MultiRelation::empty(&ab());
        let s = MultiRelation::empty(&Universe::new(["a", "c"]).unwrap());
        assert_eq!(r.union(&s).unwrap_err(), RelError::UniverseMismatch);
        assert_eq!(r.seq(&s).unwrap_err(), RelError::UniverseMismatch);
        assert_eq!(r.par(&s).unwrap_err(), RelError::UniverseMismatch);
        assert_eq!(r.parikh_seq(&s).unwrap_err(), RelError::UniverseMismatch);
        assert_eq!(r.is_subset(&s).unwrap_err(), RelError::UniverseMismatch);
    }

    #[test]
    fn seq_examples() {
        let u = ab();
        let r = lit(&u, "{(a,{a,b})}");
        let s = lit(&u, "{(a,{a}),(b,{a})}");
        assert_eq!(r.seq(&s).unwrap(), lit(&u, "{(a,{a})}"));
        // terminal pairs persist
        let t = lit(&u, "{(a,{})}");
        assert_eq!(t.seq(&MultiRelation::empty(&u)).unwrap(), t);
    }

    #[test]
    fn seq_chain_example() {
        let u = Universe::new(["a", "b", "c", "d"]).unwrap();
        let r = lit(&u, "{(a,{b,c}),(b,{}),(c,{d})}");
        assert_eq!(r.seq(&r).unwrap(), lit(&u, "{(a,{d}),(b,{})}"));
    }

    #[test]
    fn par_examples() {
        let u = ab();
        let r = lit(&u, "{(a,{a})}");
        let s = lit(&u, "{(a,{a,b})}");
        assert_eq!(r.par(&s).unwrap(), s);
        let r = lit(&u, "{(a,{a}),(a,{b})}");
        assert_eq!(r.par(&r).unwrap(), lit(&u, "{(a,{a}),(a,{b}),(a,{a,b})}"));
    }

    #[test]
    fn parikh_empty_intermediate_admits_every_target() {
        let u = Universe::new(["a"]).unwrap();
        let r = lit(&u, "{(a,{}),(a,{a})}");
        let got = r.parikh_seq(&MultiRelation::empty(&u)).unwrap();
        assert_eq!(got, lit(&u, "{(a,{}),(a,{a})}"));
    }

    #[test]
    fn literal_and_json_round_trip() {
        let u = ab();
        let r = lit(&u, "<{(b,{}), (a,{a,b})}>");
        assert_eq!(r.to_string(), "{(a,{a,b}), (b,{})}");
        assert_eq!(lit(&u, &r.to_string()), r);
        let json = r.to_json_string();
        assert_eq!(json, r#"{"universe":["a","b"],"pairs":[["a",["a","b"]],["b",[]]]}"#);
        assert_eq!(MultiRelation::from_json_str(&json).unwrap(), r);
        let shuffled = r#"{"universe":["a","b"],"pairs":[["b",[]],["a",["b","a"]]]}"#;
        assert_eq!(MultiRelation::from_json_str(shuffled).unwrap(), r);
    }

    #[test]
    fn literal_errors() {
        let u = ab();
        assert!(MultiRelation::parse_literal(&u, "{(a,{c})}").is_err());
        assert!(MultiRelation::parse_literal(&u, "{(a,{a})").is_err());
        assert!(MultiRelation::parse_literal(&u, "{(a,{a})} x").is_err());
        assert!(MultiRelation::parse_literal(&u, "∅").unwrap().is_empty());
    }

    #[test]
    fn wide_universe_rows() {
        let u = Universe::of_size(7).unwrap();
        let r = MultiRelation::from_index_pairs(
            &u,
            [(0, StateSet::from_bits(0b11)), (6, StateSet::from_bits(0b1000000))],
        )
        .unwrap();
        assert_eq!(r.len(), 2);
        let one = MultiRelation::one_sigma(&u);
        assert_eq!(r.seq(&one).unwrap(), r);
        assert_eq!(MultiRelation::one_pi(&u).par(&r).unwrap(), r);
        assert_eq!(r.pairs().collect::<Vec<_>>()[1], (6, StateSet::from_bits(0b1000000)));
    }

    #[test]
    fn code_round_trip() {
        let u = ab();
        for code in [0u64, 1, 0x5a, 0xff] {
            assert_eq!(MultiRelation::from_code(&u, code).code(), Some(code));
        }
    }
}

//! The group ring `Z[F_n]` and the free module `M_n = Z[F_n]{K1 .. Kn}`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::Coefficient;
use crate::error::{check_rank, Error, Result};
use crate::freewords::Word;

fn accumulate<K: Ord, C: Coefficient>(terms: &mut BTreeMap<K, C>, key: K, coeff: C) {
    if coeff.is_zero() {
        return;
    }
    match terms.entry(key) {
        Entry::Vacant(e) => {
            e.insert(coeff);
        }
        Entry::Occupied(mut e) => {
            let sum = e.get().clone() + coeff;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

/// A finite integer combination of elements of `F_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupRing<C> {
    rank: usize,
    terms: BTreeMap<Word, C>,
}

impl<C: Coefficient> GroupRing<C> {
    pub fn zero(rank: usize) -> Self {
        GroupRing {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::from_word(Word::identity(rank))
    }

    pub fn from_word(g: Word) -> Self {
        let rank = g.rank();
        let mut terms = BTreeMap::new();
        terms.insert(g, C::one());
        GroupRing { rank, terms }
    }

    pub fn from_terms<I>(rank: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Word, C)>,
    {
        let mut out = Self::zero(rank);
        for (g, c) in terms {
            check_rank(rank, g.rank())?;
            accumulate(&mut out.terms, g, c);
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &C)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_rank(self.rank, other.rank)?;
        let mut terms = self.terms.clone();
        for (g, c) in &other.terms {
            accumulate(&mut terms, g.clone(), c.clone());
        }
        Ok(GroupRing {
            rank: self.rank,
            terms,
        })
    }

    pub fn neg(&self) -> Self {
        GroupRing {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(g, c)| (g.clone(), -c.clone()))
                .collect(),
        }
    }

    /// Convolution product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_rank(self.rank, other.rank)?;
        let mut terms = BTreeMap::new();
        for (g, a) in &self.terms {
            for (h, b) in &other.terms {
                accumulate(&mut terms, g.mul(h)?, a.clone() * b.clone());
            }
        }
        Ok(GroupRing {
            rank: self.rank,
            terms,
        })
    }

    /// `r ▷ m`, extending the diagonal action linearly.
    pub fn act_on(&self, m: &Module<C>) -> Result<Module<C>> {
        check_rank(self.rank, m.rank)?;
        let mut out = Module::zero(self.rank);
        for (g, c) in &self.terms {
            for ((basis, h), d) in &m.terms {
                accumulate(&mut out.terms, (*basis, g.mul(h)?), c.clone() * d.clone());
            }
        }
        Ok(out)
    }
}

/// An element of the free `Z[F_n]`-module on `K1 .. Kn`.
///
/// Stored as a map from basis pairs `(i, g)` (meaning `g ▷ K_i`) to nonzero
/// coefficients. Map order is the canonical print order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Module<C> {
    rank: usize,
    terms: BTreeMap<(usize, Word), C>,
}

impl<C: Coefficient> Module<C> {
    pub fn zero(rank: usize) -> Self {
        Module {
            rank,
            terms: BTreeMap::new(),
        }
    }

    /// `K_index`.
    pub fn basis(index: usize, rank: usize) -> Result<Self> {
        Self::term(Word::identity(rank), index, C::one())
    }

    /// `coeff · (g ▷ K_index)`.
    pub fn term(g: Word, index: usize, coeff: C) -> Result<Self> {
        let rank = g.rank();
        if index == 0 || index > rank {
            return Err(Error::IndexOutOfRange { index, rank });
        }
        let mut out = Self::zero(rank);
        accumulate(&mut out.terms, (index, g), coeff);
        Ok(out)
    }

    /// `K1 + K2 + ... + Kn`, fixed by every image of the representation.
    pub fn total_flux(rank: usize) -> Result<Self> {
        if rank < 1 {
            return Err(Error::RankTooSmall { rank, min: 1 });
        }
        let mut out = Self::zero(rank);
        for i in 1..=rank {
            out.terms.insert((i, Word::identity(rank)), C::one());
        }
        Ok(out)
    }

    pub fn from_terms<I>(rank: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Word, usize, C)>,
    {
        let mut out = Self::zero(rank);
        for (g, index, c) in terms {
            check_rank(rank, g.rank())?;
            if index == 0 || index > rank {
                return Err(Error::IndexOutOfRange { index, rank });
            }
            accumulate(&mut out.terms, (index, g), c);
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms as `(g, basis index, coefficient)` in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, usize, &C)> {
        self.terms.iter().map(|((i, g), c)| (g, *i, c))
    }

    pub fn coefficient(&self, g: &Word, index: usize) -> C {
        self.terms
            .get(&(index, g.clone()))
            .cloned()
            .unwrap_or_else(C::zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_rank(self.rank, other.rank)?;
        let mut out = self.clone();
        out.add_assign_unchecked(other);
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub(crate) fn add_assign_unchecked(&mut self, other: &Self) {
        for (key, c) in &other.terms {
            accumulate(&mut self.terms, key.clone(), c.clone());
        }
    }

    /// Adds `coeff · (g ▷ other)` into `self` without rank checks.
    pub(crate) fn add_acted_unchecked(&mut self, coeff: &C, g: &Word, other: &Self) -> Result<()> {
        for ((i, h), c) in &other.terms {
            accumulate(&mut self.terms, (*i, g.mul(h)?), coeff.clone() * c.clone());
        }
        Ok(())
    }

    pub fn neg(&self) -> Self {
        Module {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, coeff: &C) -> Self {
        if coeff.is_zero() {
            return Self::zero(self.rank);
        }
        Module {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c.clone() * coeff.clone()))
                .collect(),
        }
    }

    /// Diagonal action `g ▷ m`: each term `(h, K_i)` becomes `(g h, K_i)`.
    pub fn act(&self, g: &Word) -> Result<Self> {
        check_rank(self.rank, g.rank())?;
        let mut terms = BTreeMap::new();
        for ((i, h), c) in &self.terms {
            terms.insert((*i, g.mul(h)?), c.clone());
        }
        Ok(Module {
            rank: self.rank,
            terms,
        })
    }

    /// Renames `x_j, K_j` to `x_{j+offset}, K_{j+offset}` inside rank `rank`.
    pub fn shifted(&self, offset: usize, rank: usize) -> Result<Self> {
        let mut out = Self::zero(rank);
        for ((i, g), c) in &self.terms {
            let index = i + offset;
            if index > rank {
                return Err(Error::IndexOutOfRange { index, rank });
            }
            out.terms
                .insert((index, g.shifted(offset, rank)?), c.clone());
        }
        Ok(out)
    }

    /// Parses the text form, e.g. `K1 + K2 - (x2^-1 > K1)` or `-3 (x1 > K2)`.
    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        ModuleParser {
            src: text,
            pos: 0,
            rank,
        }
        .parse()
    }
}

impl<C: Coefficient> fmt::Display for Module<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, ((i, g), c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (n, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = c.abs();
            if !magnitude.is_one() {
                write!(f, "{magnitude} ")?;
            }
            if g.is_identity() {
                write!(f, "K{i}")?;
            } else {
                write!(f, "({g} > K{i})")?;
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Display for GroupRing<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (g, c)) in self.terms.iter().enumerate() {
            match (n, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = c.abs();
            match (magnitude.is_one(), g.is_identity()) {
                (true, true) => f.write_str("1")?,
                (false, true) => write!(f, "{magnitude}")?,
                (true, false) => write!(f, "[{g}]")?,
                (false, false) => write!(f, "{magnitude} [{g}]")?,
            }
        }
        Ok(())
    }
}

struct ModuleParser<'a> {
    src: &'a str,
    pos: usize,
    rank: usize,
}

impl ModuleParser<'_> {
    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::parse(self.pos, message))
    }

    fn parse<C: Coefficient>(mut self) -> Result<Module<C>> {
        let mut out = Module::zero(self.rank);
        self.skip_ws();
        if self.rest().trim_end() == "0" {
            return Ok(out);
        }
        let mut negative = false;
        if let Some(r) = self.rest().strip_prefix('-') {
            negative = true;
            self.pos = self.src.len() - r.len();
        }
        loop {
            self.skip_ws();
            let (g, index, mut coeff) = self.term::<C>()?;
            if negative {
                coeff = -coeff;
            }
            accumulate(&mut out.terms, (index, g), coeff);
            self.skip_ws();
            match self.rest().chars().next() {
                None => return Ok(out),
                Some('+') => negative = false,
                Some('-') => negative = true,
                Some(c) => return self.err(format!("expected `+` or `-`, found `{c}`")),
            }
            self.pos += 1;
        }
    }

    fn term<C: Coefficient>(&mut self) -> Result<(Word, usize, C)> {
        let coeff = match self.rest().chars().next() {
            Some('K') | Some('(') => C::one(),
            Some(_) => {
                let end = self
                    .rest()
                    .find(char::is_whitespace)
                    .unwrap_or(self.rest().len());
                let token = &self.rest()[..end];
                let Ok(c) = token.parse::<C>() else {
                    return self.err(format!("bad coefficient `{token}`"));
                };
                self.pos += end;
                self.skip_ws();
                c
            }
            None => return self.err("expected a term"),
        };
        if let Some(r) = self.rest().strip_prefix('(') {
            self.pos = self.src.len() - r.len();
            let Some(sep) = self.rest().find('>') else {
                return self.err("expected `>` inside parenthesised term");
            };
            let word_start = self.pos;
            let g = Word::parse(&self.rest()[..sep], self.rank).map_err(|e| match e {
                Error::Parse { message, .. } => Error::parse(word_start, message),
                other => other,
            })?;
            self.pos += sep + 1;
            self.skip_ws();
            let index = self.basis()?;
            self.skip_ws();
            let Some(r) = self.rest().strip_prefix(')') else {
                return self.err("expected `)`");
            };
            self.pos = self.src.len() - r.len();
            Ok((g, index, coeff))
        } else {
            let index = self.basis()?;
            Ok((Word::identity(self.rank), index, coeff))
        }
    }

    fn basis(&mut self) -> Result<usize> {
        let Some(r) = self.rest().strip_prefix('K') else {
            return self.err("expected `K<i>`");
        };
        let digits = r.len() - r.trim_start_matches(|c: char| c.is_ascii_digit()).len();
        let Ok(index) = r[..digits].parse::<usize>() else {
            return self.err("expected a basis index after `K`");
        };
        if index == 0 || index > self.rank {
            return self.err(format!("K{index} out of range for rank {}", self.rank));
        }
        self.pos += 1 + digits;
        Ok(index)
    }
}

//! Words in the generators `σ_i`, `ρ_i`, `τ_j` of the extended loop braid group.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenKind {
    /// Braiding permutation, `s<i>`.
    Sigma,
    /// Non-braiding permutation, `r<i>`.
    Rho,
    /// Flip of one circle, `t<j>`.
    Tau,
}

impl GenKind {
    fn symbol(self) -> char {
        match self {
            GenKind::Sigma => 's',
            GenKind::Rho => 'r',
            GenKind::Tau => 't',
        }
    }

    /// Largest admissible index at rank `n`.
    pub fn max_index(self, n: usize) -> usize {
        match self {
            GenKind::Sigma | GenKind::Rho => n.saturating_sub(1),
            GenKind::Tau => n,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BraidToken {
    pub kind: GenKind,
    pub index: usize,
    pub exponent: i64,
}

impl BraidToken {
    pub fn new(kind: GenKind, index: usize, exponent: i64) -> Self {
        BraidToken {
            kind,
            index,
            exponent,
        }
    }

    pub fn sigma(i: usize) -> Self {
        Self::new(GenKind::Sigma, i, 1)
    }

    pub fn rho(i: usize) -> Self {
        Self::new(GenKind::Rho, i, 1)
    }

    pub fn tau(j: usize) -> Self {
        Self::new(GenKind::Tau, j, 1)
    }

    pub fn inv(self) -> Self {
        BraidToken {
            exponent: -self.exponent,
            ..self
        }
    }

    pub fn pow(self, exponent: i64) -> Self {
        BraidToken {
            exponent: self.exponent * exponent,
            ..self
        }
    }

    fn check(&self, n: usize) -> Result<()> {
        if self.index == 0 || self.index > self.kind.max_index(n) {
            return Err(Error::IndexOutOfRange {
                index: self.index,
                rank: n,
            });
        }
        Ok(())
    }
}

impl fmt::Display for BraidToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.symbol(), self.index)?;
        if self.exponent != 1 {
            write!(f, "^{}", self.exponent)?;
        }
        Ok(())
    }
}

/// A word in the generators at a fixed rank; indices are validated.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    rank: usize,
    tokens: Vec<BraidToken>,
}

impl BraidWord {
    pub fn new(rank: usize, tokens: Vec<BraidToken>) -> Result<Self> {
        if rank < 1 {
            return Err(Error::RankTooSmall { rank, min: 1 });
        }
        for t in &tokens {
            t.check(rank)?;
            if t.exponent == 0 {
                return Err(Error::parse(0, format!("zero exponent on `{t}`")));
            }
        }
        Ok(BraidWord { rank, tokens })
    }

    pub fn empty(rank: usize) -> Self {
        BraidWord {
            rank,
            tokens: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn tokens(&self) -> &[BraidToken] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        crate::error::check_rank(self.rank, other.rank)?;
        let mut tokens = self.tokens.clone();
        tokens.extend_from_slice(&other.tokens);
        Ok(BraidWord {
            rank: self.rank,
            tokens,
        })
    }

    /// Reverses the tokens and negates their exponents.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            rank: self.rank,
            tokens: self.tokens.iter().rev().map(|t| t.inv()).collect(),
        }
    }

    /// Parses `s1 s2^-1 t3 r1'`. Error positions count tokens from 1.
    pub fn parse(text: &str, rank: usize) -> Result<BraidWord> {
        if rank < 1 {
            return Err(Error::RankTooSmall { rank, min: 1 });
        }
        let trimmed = text.trim();
        if trimmed == "1" {
            return Ok(BraidWord::empty(rank));
        }
        let tokens = trimmed
            .split_whitespace()
            .enumerate()
            .map(|(pos, tok)| parse_token(tok, rank).map_err(|msg| Error::parse(pos + 1, msg)))
            .collect::<Result<Vec<_>>>()?;
        Ok(BraidWord { rank, tokens })
    }
}

fn parse_token(token: &str, rank: usize) -> std::result::Result<BraidToken, String> {
    let mut chars = token.chars();
    let kind = match chars.next().map(|c| c.to_ascii_lowercase()) {
        Some('s') => GenKind::Sigma,
        Some('r') => GenKind::Rho,
        Some('t') => GenKind::Tau,
        _ => {
            return Err(format!(
                "unknown generator in `{token}`; expected s<i>, r<i> or t<j>"
            ))
        }
    };
    let body = chars.as_str();
    let digits = body.len() - body.trim_start_matches(|c: char| c.is_ascii_digit()).len();
    let index: usize = body[..digits]
        .parse()
        .map_err(|_| format!("missing index in `{token}`"))?;
    let suffix = &body[digits..];
    let exponent = if suffix.is_empty() {
        1
    } else if suffix == "'" {
        -1
    } else if let Some(e) = suffix.strip_prefix('^') {
        e.parse::<i64>()
            .map_err(|_| format!("bad exponent in `{token}`"))?
    } else {
        return Err(format!("unexpected `{suffix}` in `{token}`"));
    };
    if exponent == 0 {
        return Err(format!("zero exponent in `{token}`"));
    }
    let t = BraidToken::new(kind, index, exponent);
    if index == 0 || index > kind.max_index(rank) {
        return Err(format!(
            "index out of range in `{token}`: {} takes 1..={} at rank {rank}",
            kind.symbol(),
            kind.max_index(rank)
        ));
    }
    Ok(t)
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tokens.is_empty() {
            return f.write_str("1");
        }
        for (i, t) in self.tokens.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

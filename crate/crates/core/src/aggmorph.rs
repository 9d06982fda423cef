//! Morphisms of the free abelian group–group pair `M_n = (F_n, Z[F_n]{K1..Kn}, ▷)`.
//!
//! A morphism `M_n -> M_n` is freely determined by the images of the `x_i`
//! and of the `K_i`, so it is stored as exactly that data. Two morphisms are
//! equal iff their generator images are equal.

use std::fmt;

use serde_json::{json, Value};

use crate::coeff::Coefficient;
use crate::error::{check_rank, Error, Result};
use crate::freewords::{FreeGroupEndo, Word};
use crate::modring::Module;

/// A morphism `(f1, f2)` given by `f1(x_i)` and `f2(K_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Morphism<C> {
    f1: FreeGroupEndo,
    f2: Vec<Module<C>>,
}

impl<C: Coefficient> Morphism<C> {
    pub fn new(f1: FreeGroupEndo, f2: Vec<Module<C>>) -> Result<Self> {
        let rank = f1.rank();
        if f2.len() != rank {
            return Err(Error::WrongImageCount {
                expected: rank,
                got: f2.len(),
            });
        }
        for m in &f2 {
            check_rank(rank, m.rank())?;
        }
        Ok(Morphism { f1, f2 })
    }

    pub fn identity(rank: usize) -> Self {
        Morphism {
            f1: FreeGroupEndo::identity(rank),
            f2: (1..=rank)
                .map(|i| Module::basis(i, rank).expect("index within rank"))
                .collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.f1.rank()
    }

    pub fn f1(&self) -> &FreeGroupEndo {
        &self.f1
    }

    pub fn f2(&self) -> &[Module<C>] {
        &self.f2
    }

    /// Image of `K_index` (1-based).
    pub fn k_image(&self, index: usize) -> &Module<C> {
        &self.f2[index - 1]
    }

    /// Extends `f2` to all of `M_n` by `c (g ▷ K_i) ↦ c f1(g) ▷ f2(K_i)`.
    pub fn apply_f2(&self, m: &Module<C>) -> Result<Module<C>> {
        check_rank(self.rank(), m.rank())?;
        let mut out = Module::zero(self.rank());
        for (g, i, c) in m.terms() {
            let g_image = self.f1.apply(g)?;
            out.add_acted_unchecked(c, &g_image, &self.f2[i - 1])?;
        }
        Ok(out)
    }

    /// `self ∘ other`; `other` is applied first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        check_rank(self.rank(), other.rank())?;
        let f1 = self.f1.compose(&other.f1)?;
        let f2 = other
            .f2
            .iter()
            .map(|m| self.apply_f2(m))
            .collect::<Result<Vec<_>>>()?;
        Ok(Morphism { f1, f2 })
    }

    /// Rank-checked equality.
    pub fn equal(&self, other: &Self) -> Result<bool> {
        check_rank(self.rank(), other.rank())?;
        Ok(self == other)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rank())
    }

    /// Places `self` on the generators `offset+1 ..= offset+k` of rank `rank`,
    /// fixing every other generator.
    pub fn tensor_shift(&self, offset: usize, rank: usize) -> Result<Self> {
        let width = self.rank();
        if offset + width > rank {
            return Err(Error::ShiftOutOfRange {
                width,
                offset,
                rank,
            });
        }
        let mut images = Vec::with_capacity(rank);
        let mut modules = Vec::with_capacity(rank);
        for j in 1..=rank {
            if j > offset && j <= offset + width {
                images.push(self.f1.image(j - offset).shifted(offset, rank)?);
                modules.push(self.f2[j - offset - 1].shifted(offset, rank)?);
            } else {
                images.push(Word::generator(j, rank)?);
                modules.push(Module::basis(j, rank)?);
            }
        }
        Ok(Morphism {
            f1: FreeGroupEndo::new(rank, images)?,
            f2: modules,
        })
    }

    /// Parses the line format written by `Display`.
    pub fn parse(text: &str) -> Result<Self> {
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(n, l)| (n + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty())
            .collect();
        let rank = lines.iter().filter(|(_, l)| l.starts_with('x')).count();
        if lines.len() != 2 * rank {
            return Err(Error::parse(
                0,
                format!("expected {} image lines, found {}", 2 * rank, lines.len()),
            ));
        }
        let mut images = Vec::with_capacity(rank);
        let mut modules = Vec::with_capacity(rank);
        for (k, &(line_no, line)) in lines.iter().enumerate() {
            let (symbol, index) = if k < rank {
                ('x', k + 1)
            } else {
                ('K', k - rank + 1)
            };
            let lhs = format!("{symbol}{index}");
            let rhs = line
                .strip_prefix(&lhs)
                .and_then(|r| r.trim_start().strip_prefix("->"))
                .ok_or_else(|| Error::parse(line_no, format!("expected `{lhs} -> ...`")))?;
            let relocate = |e: Error| match e {
                Error::Parse { message, .. } => Error::parse(line_no, message),
                other => other,
            };
            if symbol == 'x' {
                images.push(Word::parse(rhs, rank).map_err(relocate)?);
            } else {
                modules.push(Module::parse(rhs, rank).map_err(relocate)?);
            }
        }
        Morphism::new(FreeGroupEndo::new(rank, images)?, modules)
    }

    /// JSON mirror of the text format: words are arrays of `[index, exponent]`
    /// pairs, module elements arrays of `[coefficient, word, basis]` triples.
    pub fn to_json(&self) -> Value {
        json!({
            "rank": self.rank(),
            "x": self.f1.images().iter().map(word_json).collect::<Vec<_>>(),
            "K": self.f2.iter().map(module_json).collect::<Vec<_>>(),
        })
    }
}

pub fn word_json(w: &Word) -> Value {
    Value::Array(
        w.letters()
            .iter()
            .map(|l| json!([l.index(), l.exponent()]))
            .collect(),
    )
}

pub fn module_json<C: Coefficient>(m: &Module<C>) -> Value {
    Value::Array(
        m.terms()
            .map(|(g, i, c)| json!([coefficient_json(c), word_json(g), i]))
            .collect(),
    )
}

/// Integers that fit in an `i64` become JSON numbers, anything else a string.
fn coefficient_json<C: Coefficient>(c: &C) -> Value {
    let text = c.to_string();
    match text.parse::<i64>() {
        Ok(v) => Value::from(v),
        Err(_) => Value::String(text),
    }
}

impl<C: Coefficient> fmt::Display for Morphism<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.f1)?;
        for (i, m) in self.f2.iter().enumerate() {
            writeln!(f, "K{} -> {}", i + 1, m)?;
        }
        Ok(())
    }
}

/// A morphism together with a two-sided inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Automorphism<C> {
    forward: Morphism<C>,
    inverse: Morphism<C>,
}

impl<C: Coefficient> Automorphism<C> {
    /// Fails with [`Error::NotInverse`] unless both composites are the identity.
    pub fn new(forward: Morphism<C>, inverse: Morphism<C>) -> Result<Self> {
        check_rank(forward.rank(), inverse.rank())?;
        if !forward.compose(&inverse)?.is_identity() || !inverse.compose(&forward)?.is_identity() {
            return Err(Error::NotInverse);
        }
        Ok(Automorphism { forward, inverse })
    }

    pub fn identity(rank: usize) -> Self {
        Automorphism {
            forward: Morphism::identity(rank),
            inverse: Morphism::identity(rank),
        }
    }

    pub fn rank(&self) -> usize {
        self.forward.rank()
    }

    pub fn forward(&self) -> &Morphism<C> {
        &self.forward
    }

    pub fn inverse_witness(&self) -> &Morphism<C> {
        &self.inverse
    }

    pub fn into_forward(self) -> Morphism<C> {
        self.forward
    }

    pub fn inverse(&self) -> Self {
        Automorphism {
            forward: self.inverse.clone(),
            inverse: self.forward.clone(),
        }
    }

    /// `self ∘ other`, with inverse `other⁻¹ ∘ self⁻¹`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        Ok(Automorphism {
            forward: self.forward.compose(&other.forward)?,
            inverse: other.inverse.compose(&self.inverse)?,
        })
    }

    pub fn tensor_shift(&self, offset: usize, rank: usize) -> Result<Self> {
        Ok(Automorphism {
            forward: self.forward.tensor_shift(offset, rank)?,
            inverse: self.inverse.tensor_shift(offset, rank)?,
        })
    }
}

impl<C: Coefficient> fmt::Display for Automorphism<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.forward.fmt(f)
    }
}

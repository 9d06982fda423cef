//! The lifted Artin representation: generator automorphisms `S_i`, `R_i`,
//! `T_j` of `M_n`, evaluation of braid words, and the free-group shadow
//! (Dahm's homomorphism) computed on its own code path.

use std::collections::HashMap;

use crate::aggmorph::{Automorphism, Morphism};
use crate::braid::{BraidToken, BraidWord, GenKind};
use crate::coeff::Coefficient;
use crate::error::{check_rank, Error, Result};
use crate::freewords::{FreeGroupEndo, Letter, Word};
use crate::modring::Module;

fn word(letters: &[(usize, i8)], rank: usize) -> Word {
    Word::reduce(letters.iter().map(|&(i, e)| Letter::new(i, e)), rank)
        .expect("generator formula within rank")
}

/// `(sign, g, i)` meaning `±(g ▷ K_i)`.
type SignedTerm<'a> = (i8, &'a [(usize, i8)], usize);

fn module<C: Coefficient>(terms: &[SignedTerm<'_>], rank: usize) -> Module<C> {
    Module::from_terms(
        rank,
        terms.iter().map(|&(sign, g, i)| {
            let c = if sign < 0 { -C::one() } else { C::one() };
            (word(g, rank), i, c)
        }),
    )
    .expect("generator formula within rank")
}

fn check_index(kind: GenKind, index: usize, rank: usize) -> Result<()> {
    if index == 0 || index > kind.max_index(rank) {
        Err(Error::IndexOutOfRange { index, rank })
    } else {
        Ok(())
    }
}

/// The rank-2 braiding `S` with its inverse `S̄`.
pub fn base_sigma<C: Coefficient>() -> Automorphism<C> {
    // S: x1 ↦ x2, x2 ↦ x2⁻¹ x1 x2, K1 ↦ K1 + K2 − x2⁻¹ ▷ K1, K2 ↦ x2⁻¹ ▷ K1
    let forward = Morphism::new(
        FreeGroupEndo::new(
            2,
            vec![word(&[(2, 1)], 2), word(&[(2, -1), (1, 1), (2, 1)], 2)],
        )
        .expect("rank 2"),
        vec![
            module(&[(1, &[], 1), (1, &[], 2), (-1, &[(2, -1)], 1)], 2),
            module(&[(1, &[(2, -1)], 1)], 2),
        ],
    )
    .expect("rank 2");
    // S̄: x1 ↦ x1 x2 x1⁻¹, x2 ↦ x1, K1 ↦ x1 ▷ K2, K2 ↦ K1 + K2 − x1 ▷ K2
    let inverse = Morphism::new(
        FreeGroupEndo::new(
            2,
            vec![word(&[(1, 1), (2, 1), (1, -1)], 2), word(&[(1, 1)], 2)],
        )
        .expect("rank 2"),
        vec![
            module(&[(1, &[(1, 1)], 2)], 2),
            module(&[(1, &[], 1), (1, &[], 2), (-1, &[(1, 1)], 2)], 2),
        ],
    )
    .expect("rank 2");
    Automorphism::new(forward, inverse).expect("S̄ inverts S")
}

/// The rank-2 swap `R`, an involution.
pub fn base_rho<C: Coefficient>() -> Automorphism<C> {
    let r = Morphism::new(
        FreeGroupEndo::new(2, vec![word(&[(2, 1)], 2), word(&[(1, 1)], 2)]).expect("rank 2"),
        vec![module(&[(1, &[], 2)], 2), module(&[(1, &[], 1)], 2)],
    )
    .expect("rank 2");
    Automorphism::new(r.clone(), r).expect("R is an involution")
}

/// The rank-1 flip `T`: x1 ↦ x1⁻¹, K1 ↦ K1. An involution.
pub fn base_tau<C: Coefficient>() -> Automorphism<C> {
    let t = Morphism::new(
        FreeGroupEndo::new(1, vec![word(&[(1, -1)], 1)]).expect("rank 1"),
        vec![module(&[(1, &[], 1)], 1)],
    )
    .expect("rank 1");
    Automorphism::new(t.clone(), t).expect("T is an involution")
}

/// `S_i = 1^{i-1} ⊗ S ⊗ 1^{n-i-1}`.
pub fn gen_sigma<C: Coefficient>(i: usize, n: usize) -> Result<Automorphism<C>> {
    check_index(GenKind::Sigma, i, n)?;
    base_sigma().tensor_shift(i - 1, n)
}

/// `R_i = 1^{i-1} ⊗ R ⊗ 1^{n-i-1}`.
pub fn gen_rho<C: Coefficient>(i: usize, n: usize) -> Result<Automorphism<C>> {
    check_index(GenKind::Rho, i, n)?;
    base_rho().tensor_shift(i - 1, n)
}

/// `T_j = 1^{j-1} ⊗ T ⊗ 1^{n-j}`.
pub fn gen_tau<C: Coefficient>(j: usize, n: usize) -> Result<Automorphism<C>> {
    check_index(GenKind::Tau, j, n)?;
    base_tau().tensor_shift(j - 1, n)
}

pub fn generator<C: Coefficient>(kind: GenKind, index: usize, n: usize) -> Result<Automorphism<C>> {
    match kind {
        GenKind::Sigma => gen_sigma(index, n),
        GenKind::Rho => gen_rho(index, n),
        GenKind::Tau => gen_tau(index, n),
    }
}

/// Image of a braid word under the lifted Artin representation, with its
/// inverse witness.
///
/// A word `g1 g2 ... gk` maps to `Π(g1) ∘ Π(g2) ∘ ... ∘ Π(gk)`, so the last
/// token acts first. `g^k` expands to `|k|` factors.
pub fn evaluate<C: Coefficient>(w: &BraidWord) -> Result<Automorphism<C>> {
    let n = w.rank();
    let mut cache: HashMap<(GenKind, usize), Automorphism<C>> = HashMap::new();
    let mut acc = Automorphism::identity(n);
    for token in w.tokens() {
        let gen = match cache.get(&(token.kind, token.index)) {
            Some(g) => g.clone(),
            None => {
                let g = generator(token.kind, token.index, n)?;
                cache.insert((token.kind, token.index), g.clone());
                g
            }
        };
        let factor = if token.exponent < 0 {
            gen.inverse()
        } else {
            gen
        };
        for _ in 0..token.exponent.unsigned_abs() {
            acc = acc.compose(&factor)?;
        }
    }
    Ok(acc)
}

/// Forward image only; skips building the inverse witness.
pub fn evaluate_morphism<C: Coefficient>(w: &BraidWord) -> Result<Morphism<C>> {
    let n = w.rank();
    let mut acc = Morphism::identity(n);
    for token in w.tokens() {
        let gen = generator::<C>(token.kind, token.index, n)?;
        let factor = if token.exponent < 0 {
            gen.inverse_witness().clone()
        } else {
            gen.into_forward()
        };
        for _ in 0..token.exponent.unsigned_abs() {
            acc = acc.compose(&factor)?;
        }
    }
    Ok(acc)
}

/// Free-group automorphism of a single token, written out directly in rank `n`.
fn dahm_token(token: &BraidToken, n: usize) -> Result<FreeGroupEndo> {
    check_index(token.kind, token.index, n)?;
    let i = token.index;
    let inverse = token.exponent < 0;
    let images = (1..=n)
        .map(|j| {
            let letters: Vec<(usize, i8)> = match (token.kind, inverse) {
                (GenKind::Sigma, false) if j == i => vec![(i + 1, 1)],
                (GenKind::Sigma, false) if j == i + 1 => vec![(i + 1, -1), (i, 1), (i + 1, 1)],
                (GenKind::Sigma, true) if j == i => vec![(i, 1), (i + 1, 1), (i, -1)],
                (GenKind::Sigma, true) if j == i + 1 => vec![(i, 1)],
                (GenKind::Rho, _) if j == i => vec![(i + 1, 1)],
                (GenKind::Rho, _) if j == i + 1 => vec![(i, 1)],
                (GenKind::Tau, _) if j == i => vec![(i, -1)],
                _ => vec![(j, 1)],
            };
            word(&letters, n)
        })
        .collect();
    FreeGroupEndo::new(n, images)
}

/// Dahm's homomorphism to `Aut(F_n)`, composed from the explicit free-group
/// formulas without going through `M_n`.
pub fn dahm(w: &BraidWord) -> Result<FreeGroupEndo> {
    let n = w.rank();
    let mut acc = FreeGroupEndo::identity(n);
    for token in w.tokens() {
        let factor = dahm_token(token, n)?;
        for _ in 0..token.exponent.unsigned_abs() {
            acc = acc.compose(&factor)?;
        }
    }
    Ok(acc)
}

/// Decides equality of two words in the extended loop braid group.
///
/// Sound and complete because the representation is faithful.
pub fn equal_in_group<C: Coefficient>(w1: &BraidWord, w2: &BraidWord) -> Result<bool> {
    check_rank(w1.rank(), w2.rank())?;
    Ok(evaluate_morphism::<C>(w1)? == evaluate_morphism::<C>(w2)?)
}

/// Word problem: is `w` the identity?
pub fn is_trivial<C: Coefficient>(w: &BraidWord) -> Result<bool> {
    Ok(evaluate_morphism::<C>(w)?.is_identity())
}

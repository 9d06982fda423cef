#![allow(dead_code)]

use loopbraid::{
    artin_conditions, conserves_flux, dahm, evaluate, evaluate_morphism, goldsmith_form,
    AggAutomorphism, AggMorphism, BigInt, BraidToken, BraidWord, FreeGroupEndo, GenKind,
    GroupRingElt, Letter, ModuleElt, Word,
};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub type Outcome = Result<(), TestCaseError>;

pub fn letters(rank: usize, max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(
        (1..=rank, any::<bool>()).prop_map(|(i, inv)| Letter::new(i, if inv { -1 } else { 1 })),
        0..=max_len,
    )
}

pub fn word(rank: usize, max_len: usize) -> impl Strategy<Value = Word> {
    letters(rank, max_len).prop_map(move |l| Word::reduce(l, rank).unwrap())
}

pub fn module(rank: usize) -> impl Strategy<Value = ModuleElt> {
    prop::collection::vec((word(rank, 4), 1..=rank, -4i64..=4), 0..6).prop_map(move |terms| {
        ModuleElt::from_terms(
            rank,
            terms.into_iter().map(|(g, i, c)| (g, i, BigInt::from(c))),
        )
        .unwrap()
    })
}

pub fn group_ring(rank: usize) -> impl Strategy<Value = GroupRingElt> {
    prop::collection::vec((word(rank, 3), -3i64..=3), 0..4).prop_map(move |terms| {
        GroupRingElt::from_terms(rank, terms.into_iter().map(|(g, c)| (g, BigInt::from(c))))
            .unwrap()
    })
}

pub fn endo(rank: usize, max_len: usize) -> impl Strategy<Value = FreeGroupEndo> {
    prop::collection::vec(word(rank, max_len), rank)
        .prop_map(move |images| FreeGroupEndo::new(rank, images).unwrap())
}

/// Arbitrary (not necessarily invertible) morphism of `M_rank`.
pub fn morphism(rank: usize) -> impl Strategy<Value = AggMorphism> {
    (endo(rank, 8), prop::collection::vec(module(rank), rank))
        .prop_map(|(f1, f2)| AggMorphism::new(f1, f2).unwrap())
}

pub fn token(n: usize) -> impl Strategy<Value = BraidToken> {
    let kinds = if n >= 2 {
        vec![GenKind::Sigma, GenKind::Rho, GenKind::Tau]
    } else {
        vec![GenKind::Tau]
    };
    (
        prop::sample::select(kinds),
        any::<prop::sample::Index>(),
        prop::sample::select(vec![-2i64, -1, -1, 1, 1, 2]),
    )
        .prop_map(move |(kind, idx, e)| BraidToken::new(kind, 1 + idx.index(kind.max_index(n)), e))
}

pub fn sigma_token(n: usize) -> impl Strategy<Value = BraidToken> {
    (1..n, prop::sample::select(vec![-1i64, 1]))
        .prop_map(|(i, e)| BraidToken::new(GenKind::Sigma, i, e))
}

pub fn braid_word_of(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec(token(n), 0..=max_len)
        .prop_map(move |tokens| BraidWord::new(n, tokens).unwrap())
}

/// Rank in `1..=max_rank` with a word of length `<= max_len`.
pub fn braid_word(max_rank: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (1..=max_rank).prop_flat_map(move |n| braid_word_of(n, max_len))
}

pub fn sigma_word(max_rank: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_rank).prop_flat_map(move |n| {
        prop::collection::vec(sigma_token(n), 0..=max_len)
            .prop_map(move |tokens| BraidWord::new(n, tokens).unwrap())
    })
}

fn auto(w: &BraidWord) -> AggAutomorphism {
    evaluate::<BigInt>(w).unwrap()
}

// ---- freewords -------------------------------------------------------------

pub fn reduce_idempotent((rank, letters): (usize, Vec<Letter>)) -> Outcome {
    let once = Word::reduce(letters, rank).unwrap();
    let twice = Word::reduce(once.letters().iter().copied(), rank).unwrap();
    prop_assert_eq!(&once, &twice);
    for pair in once.letters().windows(2) {
        prop_assert!(
            !(pair[0].index() == pair[1].index() && pair[0].is_inverse() != pair[1].is_inverse())
        );
    }
    Ok(())
}

pub fn group_axioms((u, v, w): (Word, Word, Word)) -> Outcome {
    let e = Word::identity(u.rank());
    prop_assert_eq!(
        u.mul(&v).unwrap().mul(&w).unwrap(),
        u.mul(&v.mul(&w).unwrap()).unwrap()
    );
    prop_assert_eq!(u.mul(&e).unwrap(), u.clone());
    prop_assert_eq!(e.mul(&u).unwrap(), u.clone());
    prop_assert!(u.mul(&u.inv()).unwrap().is_identity());
    prop_assert!(u.inv().mul(&u).unwrap().is_identity());
    Ok(())
}

pub fn endo_homomorphism((f, g, u, v): (FreeGroupEndo, FreeGroupEndo, Word, Word)) -> Outcome {
    prop_assert_eq!(
        f.apply(&u.mul(&v).unwrap()).unwrap(),
        f.apply(&u).unwrap().mul(&f.apply(&v).unwrap()).unwrap()
    );
    let fg = f.compose(&g).unwrap();
    prop_assert_eq!(
        fg.apply(&u).unwrap(),
        f.apply(&g.apply(&u).unwrap()).unwrap()
    );
    Ok(())
}

pub fn cyclic_core_round_trip(w: Word) -> Outcome {
    let (a, c) = w.cyclic_core();
    prop_assert_eq!(a.mul(&c).unwrap().mul(&a.inv()).unwrap(), w);
    if let (Some(first), Some(last)) = (c.letters().first(), c.letters().last()) {
        if c.len() > 1 {
            prop_assert!(
                !(first.index() == last.index() && first.is_inverse() != last.is_inverse())
            );
        }
    }
    Ok(())
}

// ---- modring ---------------------------------------------------------------

fn no_zero_terms(m: &ModuleElt) -> Outcome {
    for (_, _, c) in m.terms() {
        prop_assert!(*c != BigInt::from(0));
    }
    Ok(())
}

pub fn module_abelian_group((a, b, c): (ModuleElt, ModuleElt, ModuleElt)) -> Outcome {
    let ab = a.add(&b).unwrap();
    no_zero_terms(&ab)?;
    prop_assert_eq!(&ab, &b.add(&a).unwrap());
    prop_assert_eq!(ab.add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
    let z = a.add(&a.neg()).unwrap();
    prop_assert!(z.is_zero());
    prop_assert_eq!(a.add(&ModuleElt::zero(a.rank())).unwrap(), a);
    Ok(())
}

pub fn module_action_axioms((g, h, a, b, k): (Word, Word, ModuleElt, ModuleElt, i64)) -> Outcome {
    let gh = g.mul(&h).unwrap();
    prop_assert_eq!(a.act(&gh).unwrap(), a.act(&h).unwrap().act(&g).unwrap());
    prop_assert_eq!(a.act(&Word::identity(a.rank())).unwrap(), a.clone());
    let sum = a.add(&b).unwrap();
    let lhs = sum.act(&g).unwrap();
    no_zero_terms(&lhs)?;
    prop_assert_eq!(lhs, a.act(&g).unwrap().add(&b.act(&g).unwrap()).unwrap());
    let k = BigInt::from(k);
    prop_assert_eq!(a.scale(&k).act(&g).unwrap(), a.act(&g).unwrap().scale(&k));
    let k2 = k.clone() + BigInt::from(3);
    prop_assert_eq!(
        a.scale(&(k.clone() + k2.clone())),
        a.scale(&k).add(&a.scale(&k2)).unwrap()
    );
    no_zero_terms(&a.scale(&k))?;
    Ok(())
}

pub fn group_ring_action(
    (r, s, t, m): (GroupRingElt, GroupRingElt, GroupRingElt, ModuleElt),
) -> Outcome {
    let rs = r.mul(&s).unwrap();
    prop_assert_eq!(
        rs.act_on(&m).unwrap(),
        r.act_on(&s.act_on(&m).unwrap()).unwrap()
    );
    prop_assert_eq!(rs.mul(&t).unwrap(), r.mul(&s.mul(&t).unwrap()).unwrap());
    prop_assert_eq!(
        r.add(&s).unwrap().act_on(&m).unwrap(),
        r.act_on(&m).unwrap().add(&s.act_on(&m).unwrap()).unwrap()
    );
    Ok(())
}

// ---- aggmorph --------------------------------------------------------------

pub fn compose_associative((f, g, h): (AggMorphism, AggMorphism, AggMorphism)) -> Outcome {
    let left = f.compose(&g).unwrap().compose(&h).unwrap();
    let right = f.compose(&g.compose(&h).unwrap()).unwrap();
    prop_assert_eq!(left, right);
    let id = AggMorphism::identity(f.rank());
    prop_assert_eq!(id.compose(&f).unwrap(), f.clone());
    prop_assert_eq!(f.compose(&id).unwrap(), f);
    Ok(())
}

pub fn apply_f2_preserves_action((f, g, m): (AggMorphism, Word, ModuleElt)) -> Outcome {
    let lhs = f.apply_f2(&m.act(&g).unwrap()).unwrap();
    let rhs = f
        .apply_f2(&m)
        .unwrap()
        .act(&f.f1().apply(&g).unwrap())
        .unwrap();
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

pub fn rejects_non_inverse((f, g): (AggMorphism, AggMorphism)) -> Outcome {
    let valid = f.compose(&g).unwrap().is_identity() && g.compose(&f).unwrap().is_identity();
    prop_assert_eq!(AggAutomorphism::new(f, g).is_ok(), valid);
    Ok(())
}

/// Random automorphisms `f, g` of rank `k`, placed at `offset` inside rank `n`.
pub fn shift_setup() -> impl Strategy<Value = (BraidWord, BraidWord, usize, usize)> {
    (1usize..=3, 0usize..=2, 0usize..=2).prop_flat_map(|(k, offset, extra)| {
        let n = k + offset + extra;
        (
            braid_word_of(k, 6),
            braid_word_of(k, 6),
            Just(offset),
            Just(n),
        )
    })
}

pub fn shift_homomorphism((f, g, offset, n): (BraidWord, BraidWord, usize, usize)) -> Outcome {
    let (f, g) = (auto(&f), auto(&g));
    let lhs = f.compose(&g).unwrap().tensor_shift(offset, n).unwrap();
    let rhs = f
        .tensor_shift(offset, n)
        .unwrap()
        .compose(&g.tensor_shift(offset, n).unwrap())
        .unwrap();
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

/// Two automorphisms on disjoint index blocks of rank `k1 + gap + k2`.
pub fn disjoint_setup() -> impl Strategy<Value = (BraidWord, BraidWord, usize)> {
    (1usize..=2, 1usize..=2, 0usize..=1)
        .prop_flat_map(|(k1, k2, gap)| (braid_word_of(k1, 6), braid_word_of(k2, 6), Just(gap)))
}

pub fn disjoint_shifts_commute((f, g, gap): (BraidWord, BraidWord, usize)) -> Outcome {
    let n = f.rank() + gap + g.rank();
    let a = auto(&f).tensor_shift(0, n).unwrap();
    let b = auto(&g).tensor_shift(f.rank() + gap, n).unwrap();
    prop_assert_eq!(a.compose(&b).unwrap(), b.compose(&a).unwrap());
    Ok(())
}

// ---- representation --------------------------------------------------------

pub fn evaluate_homomorphism((u, v): (BraidWord, BraidWord)) -> Outcome {
    let uv = evaluate_morphism::<BigInt>(&u.concat(&v).unwrap()).unwrap();
    let composed = evaluate_morphism::<BigInt>(&u)
        .unwrap()
        .compose(&evaluate_morphism::<BigInt>(&v).unwrap())
        .unwrap();
    prop_assert_eq!(uv, composed);
    Ok(())
}

pub fn word_times_inverse_trivial(w: BraidWord) -> Outcome {
    let ww = w.concat(&w.inverse()).unwrap();
    prop_assert!(evaluate_morphism::<BigInt>(&ww).unwrap().is_identity());
    let a = auto(&w);
    prop_assert!(a
        .forward()
        .compose(a.inverse_witness())
        .unwrap()
        .is_identity());
    Ok(())
}

pub fn dahm_matches_evaluate(w: BraidWord) -> Outcome {
    let a = evaluate_morphism::<BigInt>(&w).unwrap();
    prop_assert_eq!(&dahm(&w).unwrap(), a.f1());
    Ok(())
}

pub fn flux_conserved(w: BraidWord) -> Outcome {
    prop_assert!(conserves_flux(&evaluate_morphism::<BigInt>(&w).unwrap()));
    Ok(())
}

pub fn goldsmith_reconstructs(w: BraidWord) -> Outcome {
    let f = dahm(&w).unwrap();
    let form = goldsmith_form(&f);
    prop_assert!(form.is_some());
    prop_assert_eq!(form.unwrap().reconstruct().unwrap(), f);
    Ok(())
}

pub fn artin_holds_for_braids(w: BraidWord) -> Outcome {
    prop_assert_eq!(artin_conditions(&dahm(&w).unwrap()), (true, true));
    Ok(())
}

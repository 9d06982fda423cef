//! Necessary conditions for lying in the image of the representation.

use std::fmt;

use crate::aggmorph::Morphism;
use crate::coeff::Coefficient;
use crate::error::Result;
use crate::freewords::{FreeGroupEndo, Letter, Word};
use crate::modring::Module;

/// Witness that `f(x_i) = a_i⁻¹ x_{α(i)}^{s_i} a_i` for every `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyForm {
    /// `permutation[i-1] = α(i)`, 1-based values.
    pub permutation: Vec<usize>,
    pub signs: Vec<i8>,
    pub conjugators: Vec<Word>,
}

impl ConjugacyForm {
    pub fn rank(&self) -> usize {
        self.permutation.len()
    }

    /// Rebuilds the endomorphism `x_i ↦ a_i⁻¹ x_{α(i)}^{s_i} a_i`.
    pub fn reconstruct(&self) -> Result<FreeGroupEndo> {
        let n = self.rank();
        let images = (0..n)
            .map(|k| {
                let a = &self.conjugators[k];
                let core = Word::reduce([Letter::new(self.permutation[k], self.signs[k])], n)?;
                a.inv().mul(&core)?.mul(a)
            })
            .collect::<Result<Vec<_>>>()?;
        FreeGroupEndo::new(n, images)
    }

    pub fn all_positive(&self) -> bool {
        self.signs.iter().all(|&s| s > 0)
    }
}

impl fmt::Display for ConjugacyForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in 0..self.rank() {
            writeln!(
                f,
                "x{} -> a^-1 x{}^{} a with a = {}",
                k + 1,
                self.permutation[k],
                self.signs[k],
                self.conjugators[k]
            )?;
        }
        Ok(())
    }
}

/// Detects the permutation-conjugating form `x_i ↦ a_i⁻¹ x_{α(i)}^{±1} a_i`.
///
/// Each image must have a single-letter cyclic core and the cores must hit
/// every generator exactly once. The witness `a_i` is the maximal conjugator.
/// This is a syntactic check; it does not certify invertibility.
pub fn goldsmith_form(f: &FreeGroupEndo) -> Option<ConjugacyForm> {
    let n = f.rank();
    let mut permutation = Vec::with_capacity(n);
    let mut signs = Vec::with_capacity(n);
    let mut conjugators = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for image in f.images() {
        // image = a c a⁻¹, so the form's conjugator is a⁻¹
        let (a, core) = image.cyclic_core();
        let [letter] = core.letters() else {
            return None;
        };
        let slot = &mut seen[letter.index() - 1];
        if *slot {
            return None;
        }
        *slot = true;
        permutation.push(letter.index());
        signs.push(letter.exponent());
        conjugators.push(a.inv());
    }
    Some(ConjugacyForm {
        permutation,
        signs,
        conjugators,
    })
}

/// The two braid-automorphism conditions: every `x_i` goes to a conjugate of
/// some `x_{α(i)}` (positive exponent, α a permutation), and `x1 x2 ... xn`
/// is fixed.
pub fn artin_conditions(f: &FreeGroupEndo) -> (bool, bool) {
    let conjugating = goldsmith_form(f).is_some_and(|form| form.all_positive());
    let n = f.rank();
    let boundary = Word::reduce((1..=n).map(Letter::gen), n).expect("indices within rank");
    let fixes_boundary = f.apply(&boundary).is_ok_and(|w| w == boundary);
    (conjugating, fixes_boundary)
}

/// Whether `f2(K1 + ... + Kn) = K1 + ... + Kn`.
pub fn conserves_flux<C: Coefficient>(f: &Morphism<C>) -> bool {
    let n = f.rank();
    if n == 0 {
        return true;
    }
    let flux = Module::total_flux(n).expect("rank at least 1");
    f.apply_f2(&flux).is_ok_and(|image| image == flux)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artin::{dahm, evaluate};
    use crate::braid::BraidWord;
    use num_bigint::BigInt;

    fn bw(text: &str, n: usize) -> BraidWord {
        BraidWord::parse(text, n).unwrap()
    }

    fn w(text: &str, n: usize) -> Word {
        Word::parse(text, n).unwrap()
    }

    #[test]
    fn goldsmith_form_of_sigma() {
        let form = goldsmith_form(&dahm(&bw("s1", 2)).unwrap()).unwrap();
        assert_eq!(form.permutation, [2, 1]);
        assert_eq!(form.signs, [1, 1]);
        assert_eq!(form.conjugators, [Word::identity(2), w("x2", 2)]);
        assert_eq!(
            form.to_string(),
            "x1 -> a^-1 x2^1 a with a = 1\nx2 -> a^-1 x1^1 a with a = x2\n"
        );
    }

    #[test]
    fn goldsmith_form_of_tau() {
        let form = goldsmith_form(&dahm(&bw("t1", 2)).unwrap()).unwrap();
        assert_eq!(form.permutation, [1, 2]);
        assert_eq!(form.signs, [-1, 1]);
    }

    #[test]
    fn goldsmith_form_rejects_non_bijective() {
        let f = FreeGroupEndo::new(2, vec![w("x1", 2), w("x1", 2)]).unwrap();
        assert!(goldsmith_form(&f).is_none());
        let g = FreeGroupEndo::new(2, vec![w("x1 x2", 2), w("x2", 2)]).unwrap();
        assert!(goldsmith_form(&g).is_none());
        let trivial = FreeGroupEndo::new(1, vec![Word::identity(1)]).unwrap();
        assert!(goldsmith_form(&trivial).is_none());
    }

    #[test]
    fn goldsmith_form_accepts_both_orientations() {
        // a x a⁻¹ and a⁻¹ x a are the same predicate
        let f = FreeGroupEndo::new(2, vec![w("x2 x1 x2^-1", 2), w("x1^-1 x2 x1", 2)]).unwrap();
        let form = goldsmith_form(&f).unwrap();
        assert_eq!(form.conjugators, [w("x2^-1", 2), w("x1", 2)]);
        assert_eq!(form.reconstruct().unwrap(), f);
    }

    #[test]
    fn artin_condition_examples() {
        assert_eq!(
            artin_conditions(&dahm(&bw("s1 s2", 3)).unwrap()),
            (true, true)
        );
        assert_eq!(
            artin_conditions(&dahm(&bw("t1", 2)).unwrap()),
            (false, false)
        );
        assert_eq!(artin_conditions(&FreeGroupEndo::identity(3)), (true, true));
        // ρ1 permutes generators but moves the boundary word
        assert_eq!(
            artin_conditions(&dahm(&bw("r1", 2)).unwrap()),
            (true, false)
        );
    }

    #[test]
    fn flux_examples() {
        assert!(conserves_flux(
            evaluate::<BigInt>(&bw("s1", 2)).unwrap().forward()
        ));
        let killer = Morphism::new(
            FreeGroupEndo::identity(2),
            vec![Module::<BigInt>::zero(2), Module::basis(2, 2).unwrap()],
        )
        .unwrap();
        assert!(!conserves_flux(&killer));
    }
}

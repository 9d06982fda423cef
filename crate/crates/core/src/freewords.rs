//! Reduced words in the free group `F_n` on generators `x1 .. xn`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{check_rank, Error, Result};

/// A generator `x_i` or its inverse. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    index: usize,
    inverse: bool,
}

impl Letter {
    pub fn new(index: usize, exponent: i8) -> Self {
        assert!(index >= 1, "generator indices start at 1");
        assert!(exponent == 1 || exponent == -1, "exponent must be +1 or -1");
        Letter {
            index,
            inverse: exponent < 0,
        }
    }

    pub fn gen(index: usize) -> Self {
        Letter::new(index, 1)
    }

    pub fn index(self) -> usize {
        self.index
    }

    pub fn exponent(self) -> i8 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn is_inverse(self) -> bool {
        self.inverse
    }

    pub fn inv(self) -> Self {
        Letter {
            index: self.index,
            inverse: !self.inverse,
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.index == other.index && self.inverse != other.inverse
    }

    /// Position in the order x1 < x1^-1 < x2 < x2^-1 < ...
    fn sort_key(self) -> usize {
        2 * self.index + usize::from(self.inverse)
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "x{}^-1", self.index)
        } else {
            write!(f, "x{}", self.index)
        }
    }
}

/// A freely reduced word of `F_rank`.
///
/// Reduced forms are unique, so structural equality is group equality.
/// Words are ordered shortlex, which fixes the printing order of module terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    rank: usize,
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity(rank: usize) -> Self {
        Word {
            rank,
            letters: Vec::new(),
        }
    }

    pub fn generator(index: usize, rank: usize) -> Result<Self> {
        Self::reduce([Letter::gen(index)], rank)
    }

    /// Freely reduces a letter sequence.
    pub fn reduce<I>(letters: I, rank: usize) -> Result<Self>
    where
        I: IntoIterator<Item = Letter>,
    {
        let mut out: Vec<Letter> = Vec::new();
        for letter in letters {
            if letter.index > rank {
                return Err(Error::IndexOutOfRange {
                    index: letter.index,
                    rank,
                });
            }
            push_reduced(&mut out, letter);
        }
        Ok(Word { rank, letters: out })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, other: &Word) -> Result<Word> {
        check_rank(self.rank, other.rank)?;
        let mut out = self.letters.clone();
        for &letter in &other.letters {
            push_reduced(&mut out, letter);
        }
        Ok(Word {
            rank: self.rank,
            letters: out,
        })
    }

    pub fn inv(&self) -> Word {
        Word {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    /// Splits the word as `a c a^-1` with `c` cyclically reduced and `a` maximal.
    pub fn cyclic_core(&self) -> (Word, Word) {
        let letters = &self.letters;
        let mut k = 0;
        while 2 * k + 1 < letters.len() && letters[k].cancels(letters[letters.len() - 1 - k]) {
            k += 1;
        }
        let a = Word {
            rank: self.rank,
            letters: letters[..k].to_vec(),
        };
        let c = Word {
            rank: self.rank,
            letters: letters[k..letters.len() - k].to_vec(),
        };
        (a, c)
    }

    /// Renames every generator `x_j` to `x_{j+offset}` inside `F_rank`.
    pub fn shifted(&self, offset: usize, rank: usize) -> Result<Word> {
        Word::reduce(
            self.letters.iter().map(|l| Letter {
                index: l.index + offset,
                inverse: l.inverse,
            }),
            rank,
        )
    }

    /// Parses the text form `x2^-1 x1 x2`; `1` (or blank) is the identity.
    pub fn parse(text: &str, rank: usize) -> Result<Word> {
        let trimmed = text.trim();
        if trimmed.is_empty() || trimmed == "1" {
            return Ok(Word::identity(rank));
        }
        let mut letters = Vec::new();
        for (pos, token) in trimmed.split_whitespace().enumerate() {
            letters.push(parse_letter(token, rank).map_err(|msg| Error::parse(pos + 1, msg))?);
        }
        Word::reduce(letters, rank)
    }
}

fn push_reduced(out: &mut Vec<Letter>, letter: Letter) {
    match out.last() {
        Some(&last) if last.cancels(letter) => {
            out.pop();
        }
        _ => out.push(letter),
    }
}

fn parse_letter(token: &str, rank: usize) -> std::result::Result<Letter, String> {
    let body = token
        .strip_prefix('x')
        .ok_or_else(|| format!("expected a generator `x<i>`, found `{token}`"))?;
    let (digits, inverse) = match body.strip_suffix("^-1") {
        Some(d) => (d, true),
        None => (body, false),
    };
    let index: usize = digits
        .parse()
        .map_err(|_| format!("bad generator index in `{token}`"))?;
    if index == 0 || index > rank {
        return Err(format!("generator `{token}` out of range for rank {rank}"));
    }
    Ok(Letter { index, inverse })
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
            .then_with(|| self.rank.cmp(&other.rank))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, letter) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

/// An endomorphism of `F_n`, determined by the images of `x1 .. xn`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeGroupEndo {
    rank: usize,
    images: Vec<Word>,
}

impl FreeGroupEndo {
    pub fn new(rank: usize, images: Vec<Word>) -> Result<Self> {
        if images.len() != rank {
            return Err(Error::WrongImageCount {
                expected: rank,
                got: images.len(),
            });
        }
        for w in &images {
            check_rank(rank, w.rank)?;
        }
        Ok(FreeGroupEndo { rank, images })
    }

    pub fn identity(rank: usize) -> Self {
        FreeGroupEndo {
            rank,
            images: (1..=rank)
                .map(|i| Word {
                    rank,
                    letters: vec![Letter::gen(i)],
                })
                .collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    /// Image of `x_index` (1-based).
    pub fn image(&self, index: usize) -> &Word {
        &self.images[index - 1]
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        check_rank(self.rank, w.rank)?;
        let mut out = Vec::new();
        for &letter in &w.letters {
            let image = &self.images[letter.index - 1];
            if letter.inverse {
                for &l in image.letters.iter().rev() {
                    push_reduced(&mut out, l.inv());
                }
            } else {
                for &l in &image.letters {
                    push_reduced(&mut out, l);
                }
            }
        }
        Ok(Word {
            rank: self.rank,
            letters: out,
        })
    }

    /// `self ∘ other`: `other` is applied first.
    pub fn compose(&self, other: &FreeGroupEndo) -> Result<FreeGroupEndo> {
        check_rank(self.rank, other.rank)?;
        let images = other
            .images
            .iter()
            .map(|w| self.apply(w))
            .collect::<Result<Vec<_>>>()?;
        Ok(FreeGroupEndo {
            rank: self.rank,
            images,
        })
    }
}

impl fmt::Display for FreeGroupEndo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.images.iter().enumerate() {
            writeln!(f, "x{} -> {}", i + 1, w)?;
        }
        Ok(())
    }
}

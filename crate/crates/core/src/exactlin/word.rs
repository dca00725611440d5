use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::{Error, Result};

/// A monomial `e_{i1} ⊗ … ⊗ e_{in}` of `E^⊗n`, stored as its letter sequence.
///
/// Letters are packed eight bits apiece into a `u128`, first letter most
/// significant, so comparing two words of equal length compares their codes.
/// Words of different lengths order by length first. The same type doubles as
/// the dual monomial `θ^{i1} ⊗ … ⊗ θ^{in}` under the pairing
/// `⟨word, word'⟩ = δ`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Word {
    len: u8,
    code: u128,
}

impl Word {
    pub const MAX_LEN: usize = 16;

    pub const fn empty() -> Self {
        Word { len: 0, code: 0 }
    }

    pub fn new(letters: &[u8]) -> Result<Self> {
        if letters.len() > Self::MAX_LEN {
            return Err(Error::WordTooLong {
                requested: letters.len(),
                max: Self::MAX_LEN,
            });
        }
        let mut code = 0u128;
        for &l in letters {
            if l == 0 {
                return Err(Error::LetterOutOfRange {
                    letter: 0,
                    generators: u8::MAX as usize,
                });
            }
            code = (code << 8) | l as u128;
        }
        Ok(Word {
            len: letters.len() as u8,
            code,
        })
    }

    /// Parses a digit string such as `"121"`; only usable for alphabets up to 9.
    pub fn from_digits(s: &str) -> Result<Self> {
        let mut letters = Vec::with_capacity(s.len());
        for ch in s.chars() {
            match ch.to_digit(10) {
                Some(d) if d > 0 => letters.push(d as u8),
                Some(d) => {
                    return Err(Error::LetterOutOfRange {
                        letter: d,
                        generators: 9,
                    })
                }
                None => {
                    return Err(Error::InvalidPresentation(alloc::format!(
                        "not a digit word: {s:?}"
                    )))
                }
            }
        }
        Self::new(&letters)
    }

    pub fn letter(letter: u8) -> Self {
        debug_assert!(letter > 0);
        Word {
            len: 1,
            code: letter as u128,
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Letter at position `i` (0-based).
    #[inline]
    pub fn at(&self, i: usize) -> u8 {
        debug_assert!(i < self.len());
        (self.code >> (8 * (self.len() - 1 - i))) as u8
    }

    pub fn letters(&self) -> impl DoubleEndedIterator<Item = u8> + ExactSizeIterator + '_ {
        (0..self.len()).map(move |i| self.at(i))
    }

    pub fn to_vec(&self) -> Vec<u8> {
        self.letters().collect()
    }

    pub fn max_letter(&self) -> u8 {
        self.letters().max().unwrap_or(0)
    }

    /// Concatenation `self ⊗ other`.
    ///
    /// Panics if the result would exceed [`Word::MAX_LEN`]; callers that accept
    /// user input go through [`Word::try_concat`].
    #[inline]
    pub fn concat(&self, other: &Word) -> Word {
        self.try_concat(other).expect("word length overflow")
    }

    pub fn try_concat(&self, other: &Word) -> Result<Word> {
        let len = self.len() + other.len();
        if len > Self::MAX_LEN {
            return Err(Error::WordTooLong {
                requested: len,
                max: Self::MAX_LEN,
            });
        }
        let code = if other.len == 0 {
            self.code
        } else {
            (self.code << (8 * other.len())) | other.code
        };
        Ok(Word {
            len: len as u8,
            code,
        })
    }

    /// Splits into the first `k` letters and the rest.
    pub fn split_at(&self, k: usize) -> (Word, Word) {
        assert!(k <= self.len());
        let tail_len = self.len() - k;
        let mask = if tail_len == 0 {
            0
        } else {
            (1u128 << (8 * tail_len)) - 1
        };
        let head_code = if tail_len == 0 {
            self.code
        } else {
            self.code >> (8 * tail_len)
        };
        (
            Word {
                len: k as u8,
                code: head_code,
            },
            Word {
                len: tail_len as u8,
                code: self.code & mask,
            },
        )
    }

    /// Word with the letter at position `i` replaced.
    pub fn with_letter(&self, i: usize, letter: u8) -> Word {
        debug_assert!(letter > 0 && i < self.len());
        let shift = 8 * (self.len() - 1 - i);
        let code = (self.code & !(0xffu128 << shift)) | ((letter as u128) << shift);
        Word { len: self.len, code }
    }

    /// Applies `letter ↦ map[letter - 1]` to every position.
    pub fn relabel(&self, map: &[u8]) -> Word {
        let letters: Vec<u8> = self.letters().map(|l| map[l as usize - 1]).collect();
        Word::new(&letters).expect("relabel keeps length")
    }

    /// All words of length `n` over `1..=generators`, in increasing order.
    pub fn all(generators: usize, n: usize) -> AllWords {
        assert!(n <= Self::MAX_LEN && generators <= u8::MAX as usize);
        AllWords {
            generators: generators as u8,
            current: if generators == 0 && n > 0 {
                None
            } else {
                Some(alloc::vec![1u8; n])
            },
        }
    }
}

pub struct AllWords {
    generators: u8,
    current: Option<Vec<u8>>,
}

impl Iterator for AllWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let cur = self.current.as_mut()?;
        let out = Word::new(cur).expect("bounded length");
        let mut i = cur.len();
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if cur[i] < self.generators {
                cur[i] += 1;
                for l in &mut cur[i + 1..] {
                    *l = 1;
                }
                break;
            }
        }
        Some(out)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len.cmp(&other.len).then(self.code.cmp(&other.code))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        if self.max_letter() <= 9 {
            for l in self.letters() {
                write!(f, "{l}")?;
            }
        } else {
            for (i, l) in self.letters().enumerate() {
                if i > 0 {
                    f.write_str(".")?;
                }
                write!(f, "{l}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

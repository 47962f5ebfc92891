//! Permutations of a finite alphabet.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{Alphabet, Symbol};

/// A bijection of an alphabet onto itself, stored as its image table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Permutation {
    image: Vec<u32>,
}

impl Permutation {
    pub fn identity(alphabet: Alphabet) -> Self {
        Permutation { image: (0..alphabet.size() as u32).collect() }
    }

    /// The canonical `N`-cycle `i -> i + 1 mod N`.
    pub fn cyclic_shift(alphabet: Alphabet) -> Self {
        let n = alphabet.size() as u32;
        Permutation { image: (0..n).map(|i| (i + 1) % n).collect() }
    }

    /// Builds a permutation from its image table, checking bijectivity.
    pub fn from_image(image: Vec<u32>) -> Result<Self> {
        let alphabet = Alphabet::new(image.len())?;
        let mut seen = vec![false; alphabet.size()];
        for &x in &image {
            match seen.get_mut(x as usize) {
                Some(slot) if !*slot => *slot = true,
                Some(_) => return Err(Error::InvalidPermutation(format!("{x} appears twice"))),
                None => {
                    return Err(Error::InvalidPermutation(format!(
                        "{x} is outside an alphabet of size {}",
                        alphabet.size()
                    )))
                }
            }
        }
        Ok(Permutation { image })
    }

    /// Parses cycle notation such as `"(0 2 1)(3 4)"`. Symbols not named
    /// are fixed. Letters (`a` = 0) are accepted as well as integers.
    pub fn from_cycles(alphabet: Alphabet, notation: &str) -> Result<Self> {
        let mut image: Vec<u32> = (0..alphabet.size() as u32).collect();
        let mut moved = vec![false; alphabet.size()];
        let mut rest = notation.trim();
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::InvalidPermutation(format!("expected '(' in {notation:?}")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::InvalidPermutation(format!("unclosed cycle in {notation:?}")))?;
            let cycle = open[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| parse_point(t, alphabet))
                .collect::<Result<Vec<u32>>>()?;
            for (i, &x) in cycle.iter().enumerate() {
                if std::mem::replace(&mut moved[x as usize], true) {
                    return Err(Error::InvalidPermutation(format!(
                        "{x} appears in more than one place in {notation:?}"
                    )));
                }
                image[x as usize] = cycle[(i + 1) % cycle.len()];
            }
            rest = open[close + 1..].trim_start();
        }
        Ok(Permutation { image })
    }

    pub fn alphabet(&self) -> Alphabet {
        Alphabet::new(self.image.len()).expect("validated on construction")
    }

    #[inline]
    pub fn apply(&self, s: Symbol) -> Symbol {
        Symbol(self.image[s.index()])
    }

    pub fn image(&self) -> &[u32] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        self.alphabet().check_same(other.alphabet())?;
        Ok(Permutation { image: other.image.iter().map(|&x| self.image[x as usize]).collect() })
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.image.len()];
        for (i, &x) in self.image.iter().enumerate() {
            image[x as usize] = i as u32;
        }
        Permutation { image }
    }

    /// Cycle decomposition, fixed points included, each cycle starting at
    /// its smallest element and cycles ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.image.len()];
        let mut cycles = Vec::new();
        for start in 0..self.image.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as u32);
                x = self.image[x] as usize;
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// The `e`-fold composition. Each cycle is rotated by `e` modulo its
    /// length, so the cost does not depend on `e`.
    pub fn power(&self, e: u64) -> Permutation {
        let mut image = vec![0; self.image.len()];
        for cycle in self.cycles() {
            let len = cycle.len() as u64;
            let shift = (e % len) as usize;
            for (i, &x) in cycle.iter().enumerate() {
                image[x as usize] = cycle[(i + shift) % cycle.len()];
            }
        }
        Permutation { image }
    }

    /// Least `e >= 1` with `self^e = id`: the lcm of the cycle lengths.
    pub fn order(&self) -> u128 {
        self.cycles().iter().fold(1u128, |acc, c| acc.lcm(&(c.len() as u128)))
    }

    /// True when the permutation is a single cycle through every symbol.
    pub fn is_cyclic(&self) -> bool {
        let mut x = 0usize;
        for step in 1..=self.image.len() {
            x = self.image[x] as usize;
            if x == 0 {
                return step == self.image.len();
            }
        }
        unreachable!("orbit of 0 closes within N steps")
    }
}

fn parse_point(token: &str, alphabet: Alphabet) -> Result<u32> {
    let value = match token.parse::<u32>() {
        Ok(v) => v,
        Err(_) => {
            let mut chars = token.chars();
            match (chars.next().and_then(Symbol::from_letter), chars.next()) {
                (Some(s), None) => s.0,
                _ => return Err(Error::InvalidPermutation(format!("bad cycle entry {token:?}"))),
            }
        }
    };
    alphabet.symbol(value).map(|s| s.0).map_err(|_| {
        Error::InvalidPermutation(format!("{value} is outside an alphabet of size {}", alphabet.size()))
    })
}

impl fmt::Display for Permutation {
    /// Cycle notation with fixed points omitted; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(u32::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

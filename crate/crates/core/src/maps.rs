//! The border-to-order bijection `f`, the adjacent-sum map `g`, and the
//! positional permutation behind `f` (the milk shuffle).

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::stringology;
use crate::word::{Symbol, Word};

/// Split `w = y a z` with `|y| = |z|`, emit `shuffle(y, reverse(z))` then `a`.
pub fn f_slice<T: Copy>(s: &[T]) -> Vec<T> {
    let half = s.len() / 2;
    let (y, rest) = s.split_at(half);
    let (middle, z) = rest.split_at(s.len() % 2);
    let z_rev: Vec<T> = z.iter().rev().copied().collect();
    let mut out = stringology::shuffle(y, &z_rev);
    out.extend_from_slice(middle);
    out
}

pub fn f_inverse_slice<T: Copy>(s: &[T]) -> Vec<T> {
    let (even, middle) = s.split_at(s.len() - s.len() % 2);
    let (y, z_rev) = stringology::unshuffle(even);
    let mut out = y;
    out.extend_from_slice(middle);
    out.extend(z_rev.into_iter().rev());
    out
}

/// Maps every border of length `i <= n/2` to an even palindromic prefix of order `i`.
pub fn f_map(w: &Word) -> Word {
    w.with_symbols(f_slice(w.symbols()))
}

pub fn f_inverse(w: &Word) -> Word {
    w.with_symbols(f_inverse_slice(w.symbols()))
}

pub fn g_slice(s: &[Symbol], k: u32) -> Vec<Symbol> {
    s.windows(2).map(|p| ((p[0] as u64 + p[1] as u64) % k as u64) as Symbol).collect()
}

/// Adjacent sums mod `k`; `k`-to-1 from length `n` onto length `n - 1`.
pub fn g_map(w: &Word) -> Result<Word> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(w.with_symbols(g_slice(w.symbols(), w.k())))
}

/// The `k` words `v` with `g_map(v) = x`, ordered by first letter.
pub fn g_preimages(x: &Word) -> Vec<Word> {
    let k = x.k() as u64;
    (0..x.k())
        .map(|first| {
            let mut out = Vec::with_capacity(x.len() + 1);
            out.push(first);
            for &sum in x.symbols() {
                let prev = *out.last().unwrap() as u64;
                out.push(((sum as u64 + k - prev) % k) as Symbol);
            }
            x.with_symbols(out)
        })
        .collect()
}

/// A permutation of `1..=n`. `images[j]` is the source position landing at position `j + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i == 0 || i > n || std::mem::replace(&mut seen[i - 1], true) {
                return Err(Error::InvalidArgument(format!("{images:?} is not a permutation of 1..={n}")));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(j, &i)| i == j + 1)
    }

    /// Rearranges `items` so that output position `j` holds `items[images[j] - 1]`.
    pub fn apply<T: Copy>(&self, items: &[T]) -> Vec<T> {
        assert_eq!(items.len(), self.len());
        self.images.iter().map(|&i| items[i - 1]).collect()
    }

    /// Applying `self` then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.apply(&self.images) }
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut seen = vec![false; self.len()];
        let mut lengths = Vec::new();
        for start in 0..self.len() {
            let mut len = 0;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = self.images[j] - 1;
                len += 1;
            }
            if len > 0 {
                lengths.push(len);
            }
        }
        lengths
    }

    /// Least `m >= 1` with `self^m` the identity: the lcm of the cycle lengths.
    pub fn order(&self) -> BigUint {
        self.cycle_lengths().into_iter().fold(BigUint::one(), |acc, len| acc.lcm(&BigUint::from(len)))
    }
}

/// The permutation that `f_map` performs on positions of a length-`n` word.
pub fn f_permutation(n: usize) -> Result<Permutation> {
    if n < 1 {
        return Err(Error::InvalidArgument("f_permutation needs n >= 1".into()));
    }
    let positions: Vec<usize> = (1..=n).collect();
    Ok(Permutation { images: f_slice(&positions) })
}

pub fn permutation_order(p: &Permutation) -> BigUint {
    p.order()
}

/// Least `m >= 1` with `2^m = +-1 (mod 2n - 1)`. Requires `n >= 2`.
pub fn milk_shuffle_order(n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("milk_shuffle_order needs n >= 2, got {n}")));
    }
    let modulus = n
        .checked_mul(2)
        .map(|m| m - 1)
        .filter(|&m| m <= u64::MAX >> 2)
        .ok_or_else(|| Error::InvalidArgument(format!("n = {n} is too large")))?;
    let mut power = 2 % modulus;
    let mut m = 1;
    while power != 1 && power != modulus - 1 {
        power = power * 2 % modulus;
        m += 1;
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stringology::Parity;

    fn w(s: &str, k: u32) -> Word {
        Word::parse(s, k).unwrap()
    }

    fn letters(s: &str) -> Word {
        Word::from_letters(s).unwrap()
    }

    #[test]
    fn f_examples() {
        assert_eq!(f_map(&letters("preserve")), letters("perverse"));
        assert_eq!(f_map(&letters("cider")), letters("cried"));
        assert_eq!(f_map(&w("01000010", 2)), w("00110000", 2));
        assert_eq!(f_map(&letters("a")), letters("a"));
        assert_eq!(f_map(&w("", 2)), w("", 2));
    }

    #[test]
    fn f_inverse_examples() {
        assert_eq!(f_inverse(&letters("perverse")), letters("preserve"));
        assert_eq!(f_inverse(&letters("cried")), letters("cider"));
        assert_eq!(f_inverse(&w("", 2)), w("", 2));
    }

    #[test]
    fn f_permutation_examples() {
        assert_eq!(f_permutation(7).unwrap().images(), &[1, 7, 2, 6, 3, 5, 4]);
        assert!(f_permutation(1).unwrap().is_identity());
        assert_eq!(f_permutation(3).unwrap().images(), &[1, 3, 2]);
        assert!(matches!(f_permutation(0), Err(Error::InvalidArgument(_))));
    }

    fn order_by_iteration(p: &Permutation) -> usize {
        let mut q = p.clone();
        let mut m = 1;
        while !q.is_identity() {
            q = q.then(p);
            m += 1;
        }
        m
    }

    #[test]
    fn permutation_order_examples() {
        assert_eq!(permutation_order(&Permutation::identity(5)), BigUint::from(1u32));
        let p7 = f_permutation(7).unwrap();
        assert_eq!(order_by_iteration(&p7), 6);
        assert_eq!(permutation_order(&p7), BigUint::from(6u32));
        assert_eq!(permutation_order(&f_permutation(3).unwrap()), BigUint::from(2u32));
        assert_eq!(permutation_order(&Permutation::new(vec![2, 3, 1, 5, 4]).unwrap()), BigUint::from(6u32));
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
    }

    #[test]
    fn milk_shuffle_examples() {
        assert_eq!(milk_shuffle_order(7).unwrap(), 6);
        assert_eq!(milk_shuffle_order(2).unwrap(), 1);
        assert_eq!(milk_shuffle_order(3).unwrap(), 2);
        assert!(milk_shuffle_order(1).is_err());
    }

    #[test]
    fn permutation_realizes_f() {
        let word = letters("preserve");
        let p = f_permutation(word.len()).unwrap();
        assert_eq!(p.apply(word.symbols()), f_map(&word).symbols());
    }

    #[test]
    fn g_examples() {
        assert_eq!(g_map(&w("010", 2)).unwrap(), w("11", 2));
        assert_eq!(g_map(&w("00000", 4)).unwrap(), w("0000", 4));
        assert_eq!(g_map(&w("012", 3)).unwrap(), w("10", 3));
        assert!(matches!(g_map(&w("", 2)), Err(Error::EmptyWord)));
    }

    #[test]
    fn g_preimage_examples() {
        assert_eq!(g_preimages(&w("11", 2)), vec![w("010", 2), w("101", 2)]);
        assert_eq!(g_preimages(&w("", 2)), vec![w("0", 2), w("1", 2)]);
        let pre = g_preimages(&w("2101", 3));
        assert_eq!(pre.len(), 3);
        for v in &pre {
            assert_eq!(g_map(v).unwrap(), w("2101", 3));
        }
    }

    #[test]
    fn g_sends_odd_orders_to_even_orders() {
        let word = w("0102010", 3);
        assert_eq!(word.pal_prefix_orders(Parity::Odd), [1, 3].into_iter().collect());
        let image = g_map(&word).unwrap();
        assert_eq!(image.pal_prefix_orders(Parity::Even), [1, 3].into_iter().collect());
    }
}

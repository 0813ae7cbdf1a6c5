//! Slice-level scans shared by [`Word`](crate::Word) and the enumerators.
//!
//! Everything here is the naive quadratic scan. Lengths stay small enough
//! that clarity wins over failure functions, and these routines double as
//! the brute-force oracle for the counting code.

/// Parity of a palindromic prefix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

pub fn is_palindrome<T: PartialEq>(s: &[T]) -> bool {
    s.iter().eq(s.iter().rev())
}

/// Whether `s[..len]` is a border of `s` (`0 < len < s.len()` is the caller's job).
#[inline]
pub fn is_border_len<T: PartialEq>(s: &[T], len: usize) -> bool {
    s[..len] == s[s.len() - len..]
}

/// All border lengths `i` with `0 < i < n`, ascending.
pub fn border_lengths<T: PartialEq>(s: &[T]) -> Vec<usize> {
    (1..s.len()).filter(|&i| is_border_len(s, i)).collect()
}

/// Border lengths `i` with `1 <= i <= n/2`, ascending.
pub fn short_border_lengths<T: PartialEq>(s: &[T]) -> Vec<usize> {
    (1..=s.len() / 2).filter(|&i| is_border_len(s, i)).collect()
}

/// A word with any border also has a short one, so only short lengths are scanned.
pub fn is_unbordered<T: PartialEq>(s: &[T]) -> bool {
    (1..=s.len() / 2).all(|i| !is_border_len(s, i))
}

fn pal_prefix_len(order: usize, parity: Parity) -> usize {
    match parity {
        Parity::Even => 2 * order,
        Parity::Odd => 2 * order + 1,
    }
}

/// Orders `i >= 1` such that the prefix of length `2i` (even) or `2i + 1` (odd)
/// is a palindrome.
pub fn pal_prefix_orders<T: PartialEq>(s: &[T], parity: Parity) -> Vec<usize> {
    (1..)
        .map(|i| (i, pal_prefix_len(i, parity)))
        .take_while(|&(_, len)| len <= s.len())
        .filter(|&(_, len)| is_palindrome(&s[..len]))
        .map(|(i, _)| i)
        .collect()
}

pub fn has_pal_prefix<T: PartialEq>(s: &[T], parity: Parity) -> bool {
    (1..).map(|i| pal_prefix_len(i, parity)).take_while(|&len| len <= s.len()).any(|len| is_palindrome(&s[..len]))
}

/// A palindromic prefix of length at least 2, of either parity.
pub fn has_nontrivial_pal_prefix<T: PartialEq>(s: &[T]) -> bool {
    (2..=s.len()).any(|len| is_palindrome(&s[..len]))
}

/// Same as [`has_nontrivial_pal_prefix`] but only prefixes shorter than `s`.
pub fn has_nontrivial_proper_pal_prefix<T: PartialEq>(s: &[T]) -> bool {
    (2..s.len()).any(|len| is_palindrome(&s[..len]))
}

#[inline]
pub fn is_square_half<T: PartialEq>(s: &[T], half: usize) -> bool {
    s[..half] == s[half..2 * half]
}

/// Half-lengths `j >= 1` with `s[..2j]` a square.
pub fn square_half_lengths<T: PartialEq>(s: &[T]) -> Vec<usize> {
    (1..=s.len() / 2).filter(|&j| is_square_half(s, j)).collect()
}

pub fn has_square_prefix<T: PartialEq>(s: &[T]) -> bool {
    (1..=s.len() / 2).any(|j| is_square_half(s, j))
}

/// Whether `root root` has a square prefix shorter than itself. Only the
/// first `2j` symbols of the square matter, so the square is never built.
pub fn square_has_proper_square_prefix<T: PartialEq>(root: &[T]) -> bool {
    let n = root.len();
    (1..n).any(|j| (0..j).all(|p| sq_at(root, p) == sq_at(root, p + j)))
}

#[inline]
fn sq_at<T>(root: &[T], p: usize) -> &T {
    &root[p % root.len()]
}

/// `a1 b1 a2 b2 ... an bn`; panics if lengths differ.
pub fn shuffle<T: Copy>(x: &[T], y: &[T]) -> Vec<T> {
    assert_eq!(x.len(), y.len(), "shuffle needs equal lengths");
    x.iter().zip(y).flat_map(|(&a, &b)| [a, b]).collect()
}

/// Inverse of [`shuffle`] on even-length input.
pub fn unshuffle<T: Copy>(s: &[T]) -> (Vec<T>, Vec<T>) {
    assert!(s.len().is_multiple_of(2), "unshuffle needs even length");
    let left = s.iter().step_by(2).copied().collect();
    let right = s.iter().skip(1).step_by(2).copied().collect();
    (left, right)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scans_on_small_words() {
        assert!(is_palindrome::<u8>(&[]));
        assert!(is_palindrome(b"radar"));
        assert!(!is_palindrome(b"01"));
        assert_eq!(border_lengths(b"alfalfa"), vec![1, 4]);
        assert_eq!(short_border_lengths(b"alfalfa"), vec![1]);
        assert!(is_unbordered(b"chickpea"));
        assert!(is_unbordered(b"0011"));
        assert_eq!(pal_prefix_orders(b"diffident", Parity::Even), vec![3]);
        assert_eq!(pal_prefix_orders(b"selfless", Parity::Odd), vec![3]);
        assert_eq!(square_half_lengths(b"0011"), vec![1]);
        assert_eq!(square_half_lengths(b"0101"), vec![2]);
        assert!(square_half_lengths(b"01").is_empty());
    }

    #[test]
    fn proper_square_prefix_of_square() {
        assert!(square_has_proper_square_prefix(b"001"));
        assert!(square_has_proper_square_prefix(b"0101"));
        assert!(!square_has_proper_square_prefix(b"01"));
        assert!(!square_has_proper_square_prefix(b"010"));
        // half-lengths past the root length read into the second copy
        for root in [&b"01101"[..], b"0110", b"10010", b"0010001"] {
            let sq: Vec<u8> = root.iter().chain(root).copied().collect();
            assert_eq!(
                square_has_proper_square_prefix(root),
                (1..root.len()).any(|j| is_square_half(&sq, j)),
                "{root:?}"
            );
        }
    }

    #[test]
    fn shuffle_round_trip() {
        let s = shuffle(b"clip", b"aloe");
        assert_eq!(&s, b"calliope");
        let (a, b) = unshuffle(&s);
        assert_eq!((&a[..], &b[..]), (&b"clip"[..], &b"aloe"[..]));
    }
}

//! Exact sequences from recurrences, checked against the census.

use std::collections::BTreeSet;
use std::sync::Mutex;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;

use crate::cache::CacheStore;
use crate::census::{power, space_size, Census, Family};
use crate::error::{Error, Result};

/// Values of a counting sequence for `n = 1..=N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountSeq {
    pub k: u32,
    pub family: Family,
    values: Vec<BigUint>,
}

impl CountSeq {
    pub fn new(k: u32, family: Family, values: Vec<BigUint>) -> Self {
        CountSeq { k, family, values }
    }

    /// Largest `n` held.
    pub fn max_n(&self) -> usize {
        self.values.len()
    }

    pub fn get(&self, n: usize) -> Option<&BigUint> {
        n.checked_sub(1).and_then(|i| self.values.get(i))
    }

    pub fn value(&self, n: usize) -> Result<&BigUint> {
        self.get(n).ok_or(Error::MissingValue(n))
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    /// `(n, value)` pairs from `n = 1`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.values.iter().enumerate().map(|(i, v)| (i + 1, v))
    }
}

/// Exact ratios `T(n)` for `n = 1..=N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioSeq {
    pub k: u32,
    values: Vec<BigRational>,
}

impl RatioSeq {
    pub fn max_n(&self) -> usize {
        self.values.len()
    }

    pub fn get(&self, n: usize) -> Option<&BigRational> {
        n.checked_sub(1).and_then(|i| self.values.get(i))
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.values.iter().enumerate().map(|(i, v)| (i + 1, v))
    }
}

fn need_k(k: u32) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("recurrences need k >= 2, got {k}")));
    }
    Ok(())
}

/// Shared shape of the two doubling recurrences: `x(1) = k`, `x(2) = k^2 - k`,
/// `x(2m) = k x(2m-1) - x(m)`, `x(2m+1) = k x(2m) - odd_correction(m)`.
fn doubling<F>(k: u32, max_n: usize, odd_correction: F) -> Vec<BigUint>
where
    F: Fn(&[BigUint], usize) -> BigUint,
{
    let kb = BigUint::from(k);
    let mut v: Vec<BigUint> = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        let next = match n {
            1 => kb.clone(),
            2 => &kb * &kb - &kb,
            _ if n % 2 == 0 => &kb * &v[n - 2] - &v[n / 2 - 1],
            _ => &kb * &v[n - 2] - odd_correction(&v, n / 2),
        };
        v.push(next);
    }
    v
}

/// Words with no palindromic prefix of length at least 2.
pub fn a_seq(k: u32, max_n: usize) -> Result<CountSeq> {
    need_k(k)?;
    // A(2m+1) = k A(2m) - A(m+1)
    let values = doubling(k, max_n, |v, m| v[m].clone());
    Ok(CountSeq::new(k, Family::NoPalPrefix, values))
}

fn u_recurrence(k: u32, max_n: usize) -> Vec<BigUint> {
    // u(2m+1) = k u(2m)
    doubling(k, max_n, |_, _| BigUint::zero())
}

/// Lengths checked against brute force before the unbordered recurrence is trusted.
pub const U_VALIDATION_MAX_N: usize = 14;
/// Largest space enumerated while validating.
pub const U_VALIDATION_BUDGET: u64 = 1 << 22;

static U_VALIDATED: Mutex<BTreeSet<u32>> = Mutex::new(BTreeSet::new());

/// Compares the unbordered recurrence with the census for every
/// `n <= U_VALIDATION_MAX_N` whose space fits [`U_VALIDATION_BUDGET`].
/// Returns the largest `n` checked.
pub fn validate_u_recurrence(k: u32) -> Result<usize> {
    need_k(k)?;
    let census = Census::with_budget(U_VALIDATION_BUDGET);
    let top = (1..=U_VALIDATION_MAX_N)
        .take_while(|&n| space_size(k, n).is_some_and(|s| s <= U_VALIDATION_BUDGET))
        .last()
        .unwrap_or(0);
    let rec = u_recurrence(k, top);
    for (i, expected) in rec.iter().enumerate() {
        let n = i + 1;
        let brute = census.family(k, n, Family::Unbordered)?;
        if &brute != expected {
            return Err(Error::Mismatch(format!(
                "unbordered recurrence gives {expected} but enumeration gives {brute} for k = {k}, n = {n}"
            )));
        }
    }
    Ok(top)
}

/// Unbordered words. The recurrence is validated by brute force the first time
/// it is used for a given `k`.
pub fn u_seq(k: u32, max_n: usize) -> Result<CountSeq> {
    need_k(k)?;
    let validated = U_VALIDATED.lock().unwrap_or_else(|e| e.into_inner()).contains(&k);
    if !validated {
        validate_u_recurrence(k)?;
        U_VALIDATED.lock().unwrap_or_else(|e| e.into_inner()).insert(k);
    }
    Ok(CountSeq::new(k, Family::Unbordered, u_recurrence(k, max_n)))
}

/// `(t, v)`: no nontrivial odd palindromic prefix, and no even palindromic prefix.
pub fn t_v_seq(k: u32, max_n: usize) -> Result<(CountSeq, CountSeq)> {
    let u = u_seq(k, max_n)?;
    let kb = BigUint::from(k);
    let t = u.iter().map(|(n, val)| if n % 2 == 1 { val.clone() } else { &kb * u.values[n - 2].clone() }).collect();
    let v = u.values.clone();
    Ok((CountSeq::new(k, Family::NoOddPalPrefix, t), CountSeq::new(k, Family::NoEvenPalPrefix, v)))
}

/// Minimal squares by half-length, read from `cache` where present and
/// enumerated (then stored) otherwise. With `verify`, cached values are
/// recomputed and must agree.
pub fn c_seq(k: u32, max_n: usize, cache: &mut CacheStore, census: &Census, verify: bool) -> Result<CountSeq> {
    let mut values = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        let value = match cache.get(k, n) {
            Some(hit) if !verify => hit.clone(),
            Some(hit) => {
                let fresh = census.family(k, n, Family::MinSquare)?;
                if &fresh != hit {
                    return Err(Error::Mismatch(format!(
                        "cached c({n}) = {hit} for k = {k} but enumeration gives {fresh}"
                    )));
                }
                fresh
            }
            None => {
                let fresh = census.family(k, n, Family::MinSquare)?;
                cache.insert(k, n, fresh.clone());
                fresh
            }
        };
        values.push(value);
    }
    Ok(CountSeq::new(k, Family::MinSquare, values))
}

/// `(s, d)` from `d(n) = sum over 2i <= n of c(i) k^(n-2i)` and `s(n) = k^n - d(n)`.
pub fn s_d_seq(k: u32, max_n: usize, c: &CountSeq) -> Result<(CountSeq, CountSeq)> {
    if c.k != k {
        return Err(Error::InvalidArgument(format!("c holds k = {}, expected {k}", c.k)));
    }
    if max_n / 2 > c.max_n() {
        return Err(Error::MissingValue(c.max_n() + 1));
    }
    let mut s = Vec::with_capacity(max_n);
    let mut d = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        let dn: BigUint = (1..=n / 2).map(|i| c.values[i - 1].clone() * power(k, n - 2 * i)).sum();
        s.push(power(k, n) - &dn);
        d.push(dn);
    }
    Ok((CountSeq::new(k, Family::NoSquarePrefix, s), CountSeq::new(k, Family::HasSquarePrefix, d)))
}

/// `T(n) = A(n) / k^n`.
pub fn ratio_seq(k: u32, max_n: usize) -> Result<RatioSeq> {
    let a = a_seq(k, max_n)?;
    let values = a.iter().map(|(n, v)| BigRational::new(BigInt::from(v.clone()), BigInt::from(power(k, n)))).collect();
    Ok(RatioSeq { k, values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn nums(seq: &CountSeq) -> Vec<u64> {
        seq.values().iter().map(|v| v.try_into().unwrap()).collect()
    }

    fn ratio(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn a_examples() {
        let a = a_seq(3, 12).unwrap();
        assert_eq!(nums(&a), [3, 6, 12, 30, 78, 222, 636, 1878, 5556, 16590, 49548, 148422]);
        assert_eq!(a.value(4).unwrap(), &(BigUint::from(3u32) * a.value(3).unwrap() - a.value(2).unwrap()));
        let a2 = a_seq(2, 40).unwrap();
        assert!(a2.iter().skip(1).all(|(_, v)| v == &BigUint::from(2u32)));
        assert!(a_seq(1, 5).is_err());
    }

    #[test]
    fn u_examples() {
        let u = u_seq(2, 12).unwrap();
        assert_eq!(nums(&u), [2, 2, 4, 6, 12, 20, 40, 74, 148, 284, 568, 1116]);
        assert_eq!(validate_u_recurrence(2).unwrap(), 14);
        assert_eq!(validate_u_recurrence(3).unwrap(), 13);
    }

    #[test]
    fn t_v_examples() {
        let (t, v) = t_v_seq(2, 12).unwrap();
        assert_eq!(nums(&t), [2, 4, 4, 8, 12, 24, 40, 80, 148, 296, 568, 1136]);
        assert_eq!(nums(&v), [2, 2, 4, 6, 12, 20, 40, 74, 148, 284, 568, 1116]);
    }

    #[test]
    fn c_s_d_examples() {
        let mut cache = CacheStore::in_memory();
        let c = c_seq(2, 12, &mut cache, &Census::default(), false).unwrap();
        assert_eq!(nums(&c), [2, 2, 4, 6, 10, 20, 36, 72, 142, 280, 560, 1114]);
        for k in 2..=5 {
            let c = c_seq(k, 2, &mut cache, &Census::default(), false).unwrap();
            assert_eq!(nums(&c), [k as u64, (k * (k - 1)) as u64]);
        }
        let (s, d) = s_d_seq(2, 12, &c).unwrap();
        assert_eq!(nums(&d), [0, 2, 4, 10, 20, 44, 88, 182, 364, 738, 1476, 2972]);
        assert_eq!(nums(&s), [2, 2, 4, 6, 12, 20, 40, 74, 148, 286, 572, 1124]);
        assert!(matches!(s_d_seq(2, 30, &c), Err(Error::MissingValue(13))));
        assert!(s_d_seq(3, 4, &c).is_err());
    }

    #[test]
    fn c_seq_uses_and_verifies_cache() {
        let mut cache = CacheStore::in_memory();
        cache.insert(2, 3, BigUint::from(4u32));
        // a budget of 1 rules out enumeration, so only the cache can answer
        let tight = Census::with_budget(1);
        assert!(c_seq(2, 3, &mut cache, &tight, false).is_err());
        cache.insert(2, 1, BigUint::from(2u32));
        cache.insert(2, 2, BigUint::from(2u32));
        assert_eq!(nums(&c_seq(2, 3, &mut cache, &tight, false).unwrap()), [2, 2, 4]);
        cache.insert(2, 3, BigUint::from(5u32));
        assert!(matches!(c_seq(2, 3, &mut cache, &Census::default(), true), Err(Error::Mismatch(_))));
    }

    #[test]
    fn t_examples() {
        let t2 = ratio_seq(2, 4).unwrap();
        assert_eq!(t2.get(4).unwrap(), &ratio(1, 8));
        for k in 2..=5 {
            assert!(ratio_seq(k, 1).unwrap().get(1).unwrap().is_one());
        }
        assert_eq!(ratio_seq(3, 6).unwrap().get(6).unwrap(), &ratio(222, 729));
    }
}

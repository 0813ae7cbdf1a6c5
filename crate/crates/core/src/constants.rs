//! Limit constants with exact-rational enclosures.
//!
//! `h(X) = Σ_{n≥1} T(n) X^n` where `T(n) = A(n)/k^n` is the fraction of
//! length-`n` words with no nontrivial palindromic prefix. Because
//! `0 <= T(n) <= 1`, truncating after `N` terms leaves a tail of at most
//! `X^{N+1}/(1-X)`, which gives a rigorous upper end. The limits are then
//! `ρ_k = 2 - (k+1) h(1/k)` and, for square prefixes,
//! `β_k = Σ c(i) k^{-2i}`, `α_k = 1 - β_k`.
//!
//! Decimal strings are produced only when reporting, by truncation; the
//! number of certified digits is the number of places on which both ends
//! of the enclosure agree.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::census::power;
use crate::error::{Error, Result};
use crate::recurrences::{a_seq, u_seq, CountSeq};

/// `lower <= value <= upper`, both exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enclosure {
    lower: BigRational,
    upper: BigRational,
}

fn rat(p: impl Into<BigInt>, q: impl Into<BigInt>) -> BigRational {
    BigRational::new(p.into(), q.into())
}

fn int(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

impl Enclosure {
    pub fn new(lower: BigRational, upper: BigRational) -> Result<Self> {
        if lower > upper {
            return Err(Error::InvalidArgument(format!("empty enclosure [{lower}, {upper}]")));
        }
        Ok(Enclosure { lower, upper })
    }

    pub fn point(value: BigRational) -> Self {
        Enclosure { lower: value.clone(), upper: value }
    }

    pub fn lower(&self) -> &BigRational {
        &self.lower
    }

    pub fn upper(&self) -> &BigRational {
        &self.upper
    }

    pub fn width(&self) -> BigRational {
        &self.upper - &self.lower
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lower + &self.upper) / int(2)
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lower <= x && x <= &self.upper
    }

    /// Whether `other` lies entirely inside `self`.
    pub fn contains_enclosure(&self, other: &Enclosure) -> bool {
        self.lower <= other.lower && other.upper <= self.upper
    }

    pub fn overlaps(&self, other: &Enclosure) -> bool {
        self.lower <= other.upper && other.lower <= self.upper
    }

    pub fn add(&self, other: &Enclosure) -> Enclosure {
        Enclosure { lower: &self.lower + &other.lower, upper: &self.upper + &other.upper }
    }

    /// `offset + factor * self`; a negative factor swaps the ends.
    pub fn affine(&self, offset: &BigRational, factor: &BigRational) -> Enclosure {
        let a = offset + factor * &self.lower;
        let b = offset + factor * &self.upper;
        if factor.is_negative() {
            Enclosure { lower: b, upper: a }
        } else {
            Enclosure { lower: a, upper: b }
        }
    }

    /// Decimal places on which `floor(lower * 10^d)` and `floor(upper * 10^d)`
    /// agree, capped at `max_digits`.
    pub fn agreeing_digits(&self, max_digits: usize) -> usize {
        agreeing_digits(&self.lower, &self.upper, max_digits)
    }
}

impl fmt::Display for Enclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.lower, self.upper)
    }
}

fn floor_scaled(x: &BigRational, digits: usize) -> BigInt {
    (x * int(num_traits::pow(BigInt::from(10), digits))).floor().to_integer()
}

fn agreeing_digits(a: &BigRational, b: &BigRational, max_digits: usize) -> usize {
    if a.floor() != b.floor() {
        return 0;
    }
    // agreement is monotone in d, so bisect
    let (mut lo, mut hi) = (0, max_digits);
    while lo < hi {
        let mid = (lo + hi).div_ceil(2);
        if floor_scaled(a, mid) == floor_scaled(b, mid) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}

/// `x` truncated toward zero to `digits` places, e.g. `0.2677868`.
pub fn decimal_truncated(x: &BigRational, digits: usize) -> String {
    let scaled = (x.abs() * int(num_traits::pow(BigInt::from(10), digits))).floor().to_integer();
    let sign = if x.is_negative() && !scaled.is_zero() { "-" } else { "" };
    format!("{sign}{}", scaled_decimal(&scaled, digits))
}

/// Largest `digits`-place decimal not above `x`.
pub fn decimal_floor(x: &BigRational, digits: usize) -> String {
    signed_decimal(floor_scaled(x, digits), digits)
}

/// Smallest `digits`-place decimal not below `x`.
pub fn decimal_ceil(x: &BigRational, digits: usize) -> String {
    signed_decimal(-floor_scaled(&-x, digits), digits)
}

fn signed_decimal(scaled: BigInt, digits: usize) -> String {
    let sign = if scaled.is_negative() { "-" } else { "" };
    format!("{sign}{}", scaled_decimal(&scaled.abs(), digits))
}

fn scaled_decimal(scaled: &BigInt, digits: usize) -> String {
    let mut s = scaled.to_string();
    if s.len() <= digits {
        s = "0".repeat(digits + 1 - s.len()) + &s;
    }
    let point = s.len() - digits;
    let mut out = s[..point].to_string();
    if digits > 0 {
        out.push('.');
        out.push_str(&s[point..]);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Series,
    ClosedForm,
    Enclosure,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Series => "SERIES",
            Method::ClosedForm => "CLOSED_FORM",
            Method::Enclosure => "ENCLOSURE",
        })
    }
}

/// A truncated decimal and how many of its places are backed by a bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecimalReport {
    pub value: String,
    pub certified_digits: usize,
    pub method: Method,
}

impl DecimalReport {
    /// The value cut to its certified places.
    pub fn certified_prefix(&self) -> &str {
        match self.value.find('.') {
            Some(point) if self.certified_digits > 0 => &self.value[..point + 1 + self.certified_digits],
            Some(point) => &self.value[..point],
            None => &self.value,
        }
    }
}

fn need_k(k: u32) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("constants need k >= 2, got {k}")));
    }
    Ok(())
}

/// Partial sum of `h(X)` through `n = max_n` plus the tail bound `X^{N+1}/(1-X)`.
pub fn eval_h(k: u32, x: &BigRational, max_n: usize) -> Result<Enclosure> {
    need_k(k)?;
    if !x.is_positive() || x >= &BigRational::one() {
        return Err(Error::InvalidArgument(format!("h(X) needs 0 < X < 1, got {x}")));
    }
    let a = a_seq(k, max_n)?;
    let (p, q) = (x.numer().clone(), x.denom().clone());
    let kq = &q * BigInt::from(k);
    // Σ A(n) p^n / (kq)^n over the common denominator (kq)^N
    let mut numer = BigInt::zero();
    let mut p_pow = BigInt::one();
    let mut kq_pows = vec![BigInt::one()];
    for _ in 0..max_n {
        let next = kq_pows.last().unwrap() * &kq;
        kq_pows.push(next);
    }
    for (n, an) in a.iter() {
        p_pow *= &p;
        numer += BigInt::from(an.clone()) * &p_pow * &kq_pows[max_n - n];
    }
    let lower = BigRational::new(numer, kq_pows[max_n].clone());
    let tail = num_traits::pow(x.clone(), max_n + 1) / (BigRational::one() - x);
    let upper = &lower + tail;
    Enclosure::new(lower, upper)
}

/// `h(1/k)` from `N` terms: `[Σ_{n≤N} T(n) k^{-n}, same + k^{-N}/(k-1)]`.
pub fn h_enclosure(k: u32, max_n: usize) -> Result<Enclosure> {
    need_k(k)?;
    let a = a_seq(k, max_n)?;
    let k2 = BigUint::from(k).pow(2);
    // Σ A(n) k^{-2n} over k^{2N}
    let mut numer = BigUint::zero();
    for (_, an) in a.iter() {
        numer = numer * &k2 + an;
    }
    let denom = power(k, 2 * max_n);
    let lower = rat(numer, denom.clone());
    let tail = rat(power(k, max_n), denom * BigUint::from(k - 1));
    let upper = &lower + tail;
    Enclosure::new(lower, upper)
}

/// `ρ_k = 2 - (k+1) h(1/k)` from the same `N`-term enclosure.
pub fn rho_enclosure(k: u32, max_n: usize) -> Result<Enclosure> {
    Ok(h_enclosure(k, max_n)?.affine(&int(2), &int(-(k as i64) - 1)))
}

/// Right-hand side of `h(X) = 2X/(1-X) + (X+k)/(X(X-1)) h(X^2/k)` with `h(X^2/k)`
/// enclosed by `max_n` terms.
pub fn functional_equation_rhs(k: u32, x: &BigRational, max_n: usize) -> Result<Enclosure> {
    need_k(k)?;
    let one = BigRational::one();
    let kr = int(k);
    let inner = eval_h(k, &(x * x / &kr), max_n)?;
    let offset = int(2) * x / (&one - x);
    let factor = (x + &kr) / (x * (x - &one));
    Ok(inner.affine(&offset, &factor))
}

/// Largest supported `terms` for [`h_closed_form`]; the factors grow like `k^{2^{2 terms}}`.
pub const MAX_CLOSED_FORM_TERMS: usize = 10;

/// The product formula for `h(1/k)`: the limit factor
/// `Π_{i≤m}(k^{2^i}+1) / (k^{m+1} Π_{i≤m}(k^{2^i-1}-1))` taken at `m = terms`,
/// minus twice the first `terms` summands of
/// `k^{2^{2n-1}-2n}(k^{2^{2n-1}-1}+1) Π_{i≤2n-2}(k^{2^i}+1) / Π_{i≤2n}(k^{2^i-1}-1)`.
pub fn h_closed_form(k: u32, terms: usize) -> Result<BigRational> {
    need_k(k)?;
    if terms == 0 || terms > MAX_CLOSED_FORM_TERMS {
        return Err(Error::InvalidArgument(format!(
            "closed form needs 1 <= terms <= {MAX_CLOSED_FORM_TERMS}, got {terms}"
        )));
    }
    let kb = BigUint::from(k);
    let pow_k = |e: u64| kb.pow(u32::try_from(e).expect("exponent fits u32"));
    let top = 2 * terms;
    // plus[m] = Π_{i=1}^m (k^{2^i} + 1), minus[m] = Π_{i=1}^m (k^{2^i - 1} - 1)
    let mut plus = vec![BigUint::one()];
    let mut minus = vec![BigUint::one()];
    for i in 1..=top {
        let e = 1u64 << i;
        plus.push(plus[i - 1].clone() * (pow_k(e) + 1u32));
        minus.push(minus[i - 1].clone() * (pow_k(e - 1) - 1u32));
    }
    let limit = rat(plus[terms].clone(), pow_k(terms as u64 + 1) * &minus[terms]);
    let mut sum = BigRational::zero();
    for n in 1..=terms {
        let half = 1u64 << (2 * n - 1);
        let numer = pow_k(half - 2 * n as u64) * (pow_k(half - 1) + 1u32) * &plus[2 * n - 2];
        sum += rat(numer, minus[2 * n].clone());
    }
    Ok(limit - int(2) * sum)
}

/// Runs `enclose` with `N = 16, 32, ...` until the width drops below
/// `10^-(digits+2)` and the ends agree on `digits` places, or the doubling
/// budget runs out.
fn certify<F>(digits: usize, enclose: F) -> Result<(usize, Enclosure)>
where
    F: Fn(usize) -> Result<Enclosure>,
{
    let target = rat(1, num_traits::pow(BigInt::from(10), digits + 2));
    let mut n = 16;
    let mut extra = 0;
    loop {
        let enc = enclose(n)?;
        if enc.width() < target {
            if enc.agreeing_digits(digits) >= digits || extra == 4 {
                return Ok((n, enc));
            }
            extra += 1;
        }
        n *= 2;
    }
}

fn report(enc: &Enclosure, digits: usize, method: Method) -> DecimalReport {
    DecimalReport {
        value: decimal_truncated(&enc.midpoint(), digits),
        certified_digits: enc.agreeing_digits(digits),
        method,
    }
}

/// `h(1/k)` to `digits` places from the series enclosure. Returns the
/// enclosure used alongside the report.
pub fn h_value(k: u32, digits: usize) -> Result<(DecimalReport, Enclosure)> {
    let (_, enc) = certify(digits, |n| h_enclosure(k, n))?;
    Ok((report(&enc, digits, Method::Enclosure), enc))
}

/// `ρ_k` to `digits` places.
pub fn rho(k: u32, digits: usize) -> Result<DecimalReport> {
    Ok(rho_with_enclosure(k, digits)?.0)
}

pub fn rho_with_enclosure(k: u32, digits: usize) -> Result<(DecimalReport, Enclosure)> {
    let (_, enc) = certify(digits, |n| rho_enclosure(k, n))?;
    Ok((report(&enc, digits, Method::Enclosure), enc))
}

/// The closed form checked against the series enclosure: its certified
/// digits are those shared with both ends of the enclosure.
pub fn h_closed_form_report(k: u32, terms: usize, digits: usize) -> Result<DecimalReport> {
    let value = h_closed_form(k, terms)?;
    let (_, enc) = certify(digits, |n| h_enclosure(k, n))?;
    let certified = enc.agreeing_digits(digits).min(agreeing_digits(&value, enc.lower(), digits)).min(agreeing_digits(
        &value,
        enc.upper(),
        digits,
    ));
    Ok(DecimalReport {
        value: decimal_truncated(&value, digits),
        certified_digits: certified,
        method: Method::ClosedForm,
    })
}

/// `ρ_k = 2 - (k+1) h(1/k)` with `h(1/k)` from the closed form, certified
/// against the series enclosure of `ρ_k`.
pub fn rho_closed_form_report(k: u32, terms: usize, digits: usize) -> Result<DecimalReport> {
    let value = int(2) - int(k + 1) * h_closed_form(k, terms)?;
    let (_, enc) = certify(digits, |n| rho_enclosure(k, n))?;
    let certified = enc.agreeing_digits(digits).min(agreeing_digits(&value, enc.lower(), digits)).min(agreeing_digits(
        &value,
        enc.upper(),
        digits,
    ));
    Ok(DecimalReport {
        value: decimal_truncated(&value, digits),
        certified_digits: certified,
        method: Method::ClosedForm,
    })
}

/// `β_k` and `α_k = 1 - β_k` from `c(1..=n)`:
/// `Σ_{i≤n} c(i) k^{-2i} <= β_k <= Σ_{i≤n} c(i) k^{-2i} + k^{-n}/(k-1)`.
pub fn beta_alpha_enclosure(k: u32, n: usize, c: &CountSeq) -> Result<(Enclosure, Enclosure)> {
    need_k(k)?;
    if c.k != k {
        return Err(Error::InvalidArgument(format!("c holds k = {}, expected {k}", c.k)));
    }
    let k2 = BigUint::from(k).pow(2);
    let mut numer = BigUint::zero();
    for i in 1..=n {
        numer = numer * &k2 + c.value(i)?;
    }
    let denom = power(k, 2 * n);
    let lower = rat(numer, denom.clone());
    let upper = &lower + rat(power(k, n), denom * BigUint::from(k - 1));
    let beta = Enclosure::new(lower, upper)?;
    let alpha = beta.affine(&BigRational::one(), &int(-1));
    Ok((beta, alpha))
}

/// `u_k(n)/k^n` as an estimate of `γ_k`. Not an enclosure: the certified
/// digits are those shared with `u_k(n-2)/k^{n-2}`, a heuristic.
pub fn gamma_estimate(k: u32, n: usize, digits: usize) -> Result<DecimalReport> {
    need_k(k)?;
    if n < 2 {
        return Err(Error::InvalidArgument(format!("gamma estimate needs n >= 2, got {n}")));
    }
    let u = u_seq(k, n)?;
    let ratio = |m: usize| -> Result<BigRational> {
        if m == 0 {
            return Ok(BigRational::one());
        }
        Ok(rat(u.value(m)?.clone(), power(k, m)))
    };
    let here = ratio(n)?;
    let before = ratio(n - 2)?;
    Ok(DecimalReport {
        value: decimal_truncated(&here, digits),
        certified_digits: agreeing_digits(&here, &before, digits),
        method: Method::Series,
    })
}

/// `u_k(n) / k^n` exactly.
pub fn unbordered_fraction(k: u32, n: usize) -> Result<BigRational> {
    let u = u_seq(k, n)?;
    Ok(rat(u.value(n)?.clone(), power(k, n)))
}

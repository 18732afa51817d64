//! Local solvability of `G(x, y, z) = x² + 3y² + 3z² = k` at every place,
//! with replayable witnesses, plus the Hilbert-symbol criterion for
//! arbitrary diagonal forms.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{self, pow_big, split_valuation};
use crate::error::{precondition, Error, Result};
use crate::qforms::{builtin, BuiltinForm, IntVector, Integer, Rational};

pub const DEFAULT_PRECISION: u32 = 3;
/// Extra digits carried while lifting, so replay has slack above `precision`.
const LIFT_MARGIN: u32 = 4;
const G_COEFFS: [i64; 3] = [1, 3, 3];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "PlaceRepr", try_from = "PlaceRepr")]
pub enum Place {
    Real,
    Prime(u64),
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum PlaceRepr {
    Name(String),
    Prime(u64),
}

impl From<Place> for PlaceRepr {
    fn from(p: Place) -> Self {
        match p {
            Place::Real => PlaceRepr::Name("real".into()),
            Place::Prime(p) => PlaceRepr::Prime(p),
        }
    }
}

impl TryFrom<PlaceRepr> for Place {
    type Error = Error;
    fn try_from(r: PlaceRepr) -> Result<Self> {
        match r {
            PlaceRepr::Name(s) => s.parse(),
            PlaceRepr::Prime(p) => Place::prime(p),
        }
    }
}

impl Place {
    pub fn prime(p: u64) -> Result<Self> {
        if arith::is_prime(p) {
            Ok(Place::Prime(p))
        } else {
            Err(Error::Domain(format!("{p} is not prime")))
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Real => write!(f, "real"),
            Place::Prime(p) => write!(f, "{p}"),
        }
    }
}

impl FromStr for Place {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("real") || s == "inf" {
            return Ok(Place::Real);
        }
        let p: u64 = s.parse().map_err(|_| Error::Domain(format!("bad place {s:?}")))?;
        Place::prime(p)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Solvable,
    Unsolvable,
}

/// How a certificate was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Sign of `k` against a positive-definite form.
    RealSign,
    /// `k = 0`, witnessed by the zero vector.
    Zero,
    /// `k ≡ 7 (mod 8)`: `(x, 1, 1)` with `x² ≡ k − 6`, lifted from `(1, 1, 1)`.
    TwoAdicBase,
    /// Other 2-adic residues: residue search mod 8, then lift of an odd coordinate.
    TwoAdicSearch,
    /// `k ≡ 1 (mod 3)`: `(x, 0, 0)` with `x² ≡ k`.
    ThreeAdicUnit,
    /// `k ≡ 3, 6 (mod 9)`: `x = 0` and `y² + z² ≡ k/3`.
    ThreeAdicScaled,
    /// `p ≥ 5`: scale by `3p`, fix `x = 3`, solve `y² + z² ≡ 3p²k − 3`.
    ScaledTwoSquares,
    /// No witness; verdict from the Hilbert-symbol criterion.
    Criterion,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalCertificate {
    #[serde(with = "crate::json::int")]
    pub k: Integer,
    pub place: Place,
    pub precision: u32,
    #[serde(default, with = "crate::json::opt_ints")]
    pub witness: Option<IntVector>,
    /// The witness represents `scale² · k`, the same square class as `k`.
    #[serde(with = "crate::json::int")]
    pub scale: Integer,
    pub verdict: Verdict,
    pub method: Method,
}

impl LocalCertificate {
    /// Re-checks the certificate without using the lifting code.
    ///
    /// At a prime `p` a solvable certificate must satisfy
    /// `G(w) ≡ s²k (mod p^(precision + 2·v_p(s)))`, and `w` must be a simple
    /// zero in the Hensel sense: `v_p(G(w) − s²k) > 2·min_i v_p(∂G/∂w_i)`.
    /// Witness-free verdicts are re-derived from the Hilbert-symbol criterion.
    pub fn replay(&self) -> bool {
        if self.precision == 0 {
            return false;
        }
        let criterion = represents_g_locally(&self.k, self.place);
        let expected = if criterion { Verdict::Solvable } else { Verdict::Unsolvable };
        if self.verdict != expected {
            return false;
        }
        let Some(w) = &self.witness else {
            return self.verdict == Verdict::Unsolvable
                || matches!(self.method, Method::RealSign | Method::Criterion);
        };
        if w.len() != 3 || self.scale.is_zero() {
            return false;
        }
        let g = builtin(BuiltinForm::G);
        let Ok(value) = g.evaluate_int(w) else { return false };
        let target = &self.scale * &self.scale * &self.k;
        let diff = value - target;
        if diff.is_zero() {
            return true;
        }
        let Place::Prime(p) = self.place else { return false };
        let dv = split_valuation(&diff, p).0;
        let sv = split_valuation(&self.scale, p).0;
        if dv < self.precision + 2 * sv {
            return false;
        }
        let min_deriv = w
            .iter()
            .zip(G_COEFFS)
            .filter(|(x, _)| !x.is_zero())
            .map(|(x, c)| split_valuation(&(x * (2 * c)), p).0)
            .min();
        matches!(min_deriv, Some(m) if dv > 2 * m)
    }

    /// The same certificate claimed at a lower precision.
    pub fn with_precision(&self, precision: u32) -> Result<Self> {
        if precision == 0 || precision > self.precision {
            return precondition("precision can only be lowered, and must stay positive");
        }
        Ok(LocalCertificate { precision, ..self.clone() })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlobalSolvabilityReport {
    #[serde(with = "crate::json::int")]
    pub k: Integer,
    pub certificates: Vec<LocalCertificate>,
    pub verdict: Verdict,
}

impl GlobalSolvabilityReport {
    pub fn is_solvable(&self) -> bool {
        self.verdict == Verdict::Solvable
    }

    pub fn places(&self) -> Vec<Place> {
        self.certificates.iter().map(|c| c.place).collect()
    }

    pub fn replay(&self) -> bool {
        let all = self.certificates.iter().all(|c| c.verdict == Verdict::Solvable);
        let expected = if all { Verdict::Solvable } else { Verdict::Unsolvable };
        self.verdict == expected
            && self.certificates.iter().all(|c| c.k == self.k && c.replay())
    }
}

/// Jacobi symbol `(a | n)` for odd positive `n`.
pub fn jacobi(a: &Integer, n: &Integer) -> Result<i32> {
    if !n.is_positive() || n.is_even() {
        return precondition(format!("Jacobi symbol needs odd positive n, got {n}"));
    }
    let mut a = a.mod_floor(n);
    let mut n = n.clone();
    let mut sign = 1;
    let eight = BigInt::from(8);
    while !a.is_zero() {
        while a.is_even() {
            a /= 2;
            let r = (&n % &eight).to_u8().unwrap();
            if r == 3 || r == 5 {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if (&a % 4u8) == BigInt::from(3) && (&n % 4u8) == BigInt::from(3) {
            sign = -sign;
        }
        a = a.mod_floor(&n);
    }
    Ok(if n.is_one() { sign } else { 0 })
}

fn mod_u8(x: &Integer, m: u8) -> u8 {
    x.mod_floor(&BigInt::from(m)).to_u8().unwrap()
}

/// Hilbert symbol `(a, b)_v` for nonzero integers.
pub fn hilbert_symbol(a: &Integer, b: &Integer, place: Place) -> Result<i32> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::Domain("Hilbert symbol of zero".into()));
    }
    let p = match place {
        Place::Real => return Ok(if a.is_negative() && b.is_negative() { -1 } else { 1 }),
        Place::Prime(p) => p,
    };
    let (alpha, u) = split_valuation(a, p);
    let (beta, v) = split_valuation(b, p);
    if p == 2 {
        let eps = |x: &Integer| u32::from((mod_u8(x, 4) == 3) as u8);
        let omega = |x: &Integer| u32::from(matches!(mod_u8(x, 8), 3 | 5) as u8);
        let e = eps(&u) * eps(&v) + alpha * omega(&v) + beta * omega(&u);
        return Ok(if e % 2 == 0 { 1 } else { -1 });
    }
    let pb = BigInt::from(p);
    let mut s = 1;
    if alpha * beta % 2 == 1 && p % 4 == 3 {
        s = -s;
    }
    if beta % 2 == 1 {
        s *= jacobi(&u, &pb)?;
    }
    if alpha % 2 == 1 {
        s *= jacobi(&v, &pb)?;
    }
    Ok(s)
}

/// Whether a nonzero integer is a square in `ℚ_v`.
fn is_local_square(a: &Integer, place: Place) -> bool {
    match place {
        Place::Real => a.is_positive(),
        Place::Prime(p) => {
            let (e, u) = split_valuation(a, p);
            if e % 2 == 1 {
                return false;
            }
            if p == 2 {
                mod_u8(&u, 8) == 1
            } else {
                jacobi(&u, &BigInt::from(p)).map_or(false, |j| j == 1)
            }
        }
    }
}

/// A rational's square class as an integer representative.
fn class_rep(r: &Rational) -> Integer {
    r.numer() * r.denom()
}

/// Whether the diagonal form `⟨d₀, …⟩` represents `n` over `ℚ_v`.
pub fn represents_locally(diag: &[Rational], n: &Integer, place: Place) -> Result<bool> {
    if diag.iter().any(Zero::is_zero) {
        return Err(Error::Domain("degenerate diagonal form".into()));
    }
    if n.is_zero() {
        return Ok(true);
    }
    let a: Vec<Integer> = diag.iter().map(class_rep).collect();
    if let Place::Real = place {
        return Ok(a.iter().any(|x| x.signum() == n.signum()));
    }
    let d: Integer = a.iter().product();
    let minus_d = -d.clone();
    let eps = || -> Result<i32> {
        let mut e = 1;
        for i in 0..a.len() {
            for j in i + 1..a.len() {
                e *= hilbert_symbol(&a[i], &a[j], place)?;
            }
        }
        Ok(e)
    };
    Ok(match a.len() {
        0 => false,
        1 => is_local_square(&(n * &a[0]), place),
        2 => {
            // n ≅ −d would make ⟨a, b⟩ ⊕ ⟨−n⟩ isotropic trivially; the symbol test covers it.
            hilbert_symbol(n, &minus_d, place)? == eps()?
        }
        3 => !is_local_square(&(n * &minus_d), place) || hilbert_symbol(&-BigInt::one(), &minus_d, place)? == eps()?,
        _ => true,
    })
}

fn prime_factors(n: &Integer) -> Result<Vec<u64>> {
    if n.is_zero() {
        return Ok(Vec::new());
    }
    Ok(arith::factor_big(n)?.into_iter().map(|(p, _)| p).collect())
}

/// Hasse–Minkowski: represented over `ℚ` iff over `ℝ` and every `ℚ_p`.
/// Only primes dividing `2·n·∏ dᵢ` can obstruct.
pub fn represents_rationally(diag: &[Rational], n: &Integer) -> Result<bool> {
    if !represents_locally(diag, n, Place::Real)? {
        return Ok(false);
    }
    let mut primes = vec![2u64];
    primes.extend(prime_factors(n)?);
    for d in diag {
        primes.extend(prime_factors(d.numer())?);
        primes.extend(prime_factors(d.denom())?);
    }
    primes.sort_unstable();
    primes.dedup();
    for p in primes {
        if !represents_locally(diag, n, Place::Prime(p))? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn g_diagonal() -> Vec<Rational> {
    G_COEFFS.iter().map(|&c| Rational::from_integer(c.into())).collect()
}

fn represents_g_locally(k: &Integer, place: Place) -> bool {
    represents_locally(&g_diagonal(), k, place).unwrap_or(false)
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Smallest square root of `a` modulo an odd prime `p`, by Tonelli–Shanks.
pub fn sqrt_mod_prime(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    let (mut q, mut s) = (p - 1, 0u32);
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let z = (2..p).find(|&z| pow_mod(z, (p - 1) / 2, p) == p - 1)?;
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0;
        let mut tt = t;
        while tt != 1 {
            tt = mul_mod(tt, tt, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r.min(p - r))
}

fn inverse_mod(a: &Integer, m: &Integer) -> Result<Integer> {
    let e = a.mod_floor(m).extended_gcd(m);
    if !e.gcd.is_one() {
        return Err(Error::Invariant(format!("{a} is not invertible modulo {m}")));
    }
    Ok(e.x.mod_floor(m))
}

/// Lifts a simple root `z₀` of `z² ≡ t (mod p)` to a root modulo `p^e` by Newton steps.
fn lift_sqrt_odd(z0: u64, t: &Integer, p: u64, e: u32) -> Result<Integer> {
    let modulus = pow_big(p, e);
    let mut z = BigInt::from(z0);
    let mut reached = 1u32;
    while reached < e {
        reached = (2 * reached).min(e);
        let m = pow_big(p, reached);
        let f = &z * &z - t;
        let inv = inverse_mod(&(BigInt::from(2) * &z), &m)?;
        z = (z - f * inv).mod_floor(&m);
    }
    Ok(z.mod_floor(&modulus))
}

/// A square root of `a` modulo `p^e` for an odd prime `p` and a `p`-adic unit `a`.
pub fn sqrt_mod_prime_power(a: &Integer, p: u64, e: u32) -> Result<Option<Integer>> {
    if p == 2 || !arith::is_prime(p) {
        return Err(Error::Domain(format!("{p} is not an odd prime")));
    }
    let pb = BigInt::from(p);
    if a.is_multiple_of(&pb) {
        return precondition(format!("{a} is not a {p}-adic unit"));
    }
    let am = a.mod_floor(&pb).to_u64().unwrap();
    match sqrt_mod_prime(am, p) {
        Some(z0) => lift_sqrt_odd(z0, a, p, e.max(1)).map(Some),
        None => Ok(None),
    }
}

/// Square root of `a ≡ 1 (mod 8)` modulo `2^e`, fixing one bit at a time.
fn sqrt_2adic(a: &Integer, e: u32) -> Result<Integer> {
    if mod_u8(a, 8) != 1 {
        return precondition(format!("{a} is not ≡ 1 (mod 8)"));
    }
    let mut x = BigInt::one();
    for j in 3..e {
        let m = pow_big(2, j + 1);
        if !(&x * &x - a).mod_floor(&m).is_zero() {
            x += pow_big(2, j - 1);
        }
    }
    Ok(x.mod_floor(&pow_big(2, e.max(3))))
}

/// `(y, z)` with `y² + z² ≡ c (mod p^precision)`, lifted from the first
/// simple `𝔽_p` solution in the order `y = 0, 1, …`.
pub fn hensel_lift_two_squares(c: &Integer, p: u64, precision: u32) -> Result<(Integer, Integer)> {
    if p == 2 {
        return Err(Error::Unsupported("two-squares lifting at p = 2".into()));
    }
    if !arith::is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    if precision == 0 {
        return precondition("precision must be positive");
    }
    let pb = BigInt::from(p);
    if c.is_multiple_of(&pb) {
        return precondition(format!("{c} is not a {p}-adic unit"));
    }
    let cm = c.mod_floor(&pb).to_u64().unwrap();
    let modulus = pow_big(p, precision);
    for y in 0..p {
        let t = (cm + p - mul_mod(y, y, p)) % p;
        if t == 0 {
            continue;
        }
        if let Some(z0) = sqrt_mod_prime(t, p) {
            let target = c - BigInt::from(y * y);
            let z = lift_sqrt_odd(z0, &target, p, precision)?;
            return Ok((BigInt::from(y).mod_floor(&modulus), z));
        }
    }
    Err(Error::Invariant(format!("no simple solution of y² + z² ≡ {c} mod {p}")))
}

fn certificate(k: &Integer, place: Place, precision: u32, witness: Option<IntVector>, scale: Integer, method: Method) -> LocalCertificate {
    let verdict = if witness.is_some() || represents_g_locally(k, place) {
        Verdict::Solvable
    } else {
        Verdict::Unsolvable
    };
    LocalCertificate { k: k.clone(), place, precision, witness, scale, verdict, method }
}

/// Strips `p^(2a)` from `k`, returning `a` and the remaining part.
fn strip_square_power(k: &Integer, p: u64) -> (u32, Integer) {
    let (e, _) = split_valuation(k, p);
    let a = e / 2;
    (a, k / pow_big(p, 2 * a))
}

fn two_adic_witness(k: &Integer, e: u32) -> Result<(IntVector, Method)> {
    if mod_u8(k, 8) == 7 {
        let x = sqrt_2adic(&(k - 6), e)?;
        return Ok((vec![x, BigInt::one(), BigInt::one()], Method::TwoAdicBase));
    }
    let modulus = pow_big(2, e);
    let inv3 = inverse_mod(&BigInt::from(3), &modulus)?;
    let r = i64::from(mod_u8(k, 8));
    for x in 0..8i64 {
        for y in 0..8i64 {
            for z in 0..8i64 {
                let w = [x, y, z];
                for i in 0..3 {
                    if w[i] % 2 == 0 {
                        continue;
                    }
                    let rest: i64 = (0..3).filter(|&j| j != i).map(|j| G_COEFFS[j] * w[j] * w[j]).sum();
                    if ((r - rest) * G_COEFFS[i]).rem_euclid(8) != 1 {
                        continue;
                    }
                    let mut a = k - BigInt::from(rest);
                    if G_COEFFS[i] == 3 {
                        a = (a * &inv3).mod_floor(&modulus);
                    }
                    let mut out: IntVector = w.iter().map(|&c| BigInt::from(c)).collect();
                    out[i] = sqrt_2adic(&a, e)?;
                    return Ok((out, Method::TwoAdicSearch));
                }
            }
        }
    }
    Err(Error::Invariant(format!("no 2-adic residue witness for {k}")))
}

/// A solvability certificate for `G = k` at one place.
pub fn certify_local(k: &Integer, place: Place, precision: u32) -> Result<LocalCertificate> {
    if precision == 0 {
        return precondition("precision must be positive");
    }
    let one = BigInt::one();
    let p = match place {
        Place::Real => {
            return Ok(certificate(k, place, precision, None, one, Method::RealSign));
        }
        Place::Prime(p) => {
            Place::prime(p)?;
            p
        }
    };
    if k.is_zero() {
        return Ok(certificate(k, place, precision, Some(vec![BigInt::zero(); 3]), one, Method::Zero));
    }
    let lift = precision + LIFT_MARGIN;
    let (witness, scale, method) = match p {
        2 => {
            let (a, rest) = strip_square_power(k, 2);
            let (w, method) = two_adic_witness(&rest, lift)?;
            let s = pow_big(2, a);
            (Some(w.into_iter().map(|x| x * &s).collect::<IntVector>()), one, method)
        }
        3 => {
            let (a, rest) = strip_square_power(k, 3);
            let s = pow_big(3, a);
            let w = match mod_u8(&rest, 9) {
                1 | 4 | 7 => {
                    let x = lift_sqrt_odd(1, &rest, 3, lift)?;
                    Some((vec![x, BigInt::zero(), BigInt::zero()], Method::ThreeAdicUnit))
                }
                3 | 6 => {
                    let (y, z) = hensel_lift_two_squares(&(&rest / 3), 3, lift)?;
                    Some((vec![BigInt::zero(), y, z], Method::ThreeAdicScaled))
                }
                _ => None,
            };
            match w {
                Some((w, m)) => (Some(w.into_iter().map(|x| x * &s).collect()), one, m),
                None => (None, one, Method::Criterion),
            }
        }
        _ => {
            let pb = BigInt::from(p);
            let c = BigInt::from(3) * &pb * &pb * k - 3;
            let (y, z) = hensel_lift_two_squares(&c, p, lift + 2)?;
            (Some(vec![BigInt::from(3), y, z]), BigInt::from(3) * pb, Method::ScaledTwoSquares)
        }
    };
    let cert = certificate(k, place, precision, witness, scale, method);
    if !cert.replay() {
        return Err(Error::Invariant(format!("certificate for {k} at {place} does not replay")));
    }
    Ok(cert)
}

/// Default spot-check primes: odd primes ≤ 50 dividing `k`, plus 5 and 7.
pub fn default_extra_primes(k: &Integer) -> Vec<u64> {
    let mut out: Vec<u64> = (5..=50)
        .filter(|&p| arith::is_prime(p) && !k.is_zero() && k.is_multiple_of(&BigInt::from(p)))
        .collect();
    out.extend([5, 7]);
    out.sort_unstable();
    out.dedup();
    out
}

/// Certificates at the real place, 2, 3 and each extra prime (ascending).
pub fn certify_global(k: &Integer, extra_primes: Option<&[u64]>, precision: u32) -> Result<GlobalSolvabilityReport> {
    let mut extra: Vec<u64> = match extra_primes {
        Some(ps) => ps.to_vec(),
        None => default_extra_primes(k),
    };
    for &p in &extra {
        Place::prime(p)?;
    }
    extra.sort_unstable();
    extra.dedup();
    extra.retain(|&p| p != 2 && p != 3);
    let mut places = vec![Place::Real, Place::Prime(2), Place::Prime(3)];
    places.extend(extra.into_iter().map(Place::Prime));
    let certificates = places
        .into_iter()
        .map(|pl| certify_local(k, pl, precision))
        .collect::<Result<Vec<_>>>()?;
    let verdict = if certificates.iter().all(|c| c.verdict == Verdict::Solvable) {
        Verdict::Solvable
    } else {
        Verdict::Unsolvable
    };
    Ok(GlobalSolvabilityReport { k: k.clone(), certificates, verdict })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: i64) -> Integer {
        BigInt::from(x)
    }

    #[test]
    fn jacobi_examples() {
        assert_eq!(jacobi(&b(1), &b(9)).unwrap(), 1);
        assert_eq!(jacobi(&b(0), &b(3)).unwrap(), 0);
        assert_eq!(jacobi(&b(2), &b(15)).unwrap(), 1);
        assert_eq!(jacobi(&b(2), &b(3)).unwrap(), -1);
        assert_eq!(jacobi(&b(-1), &b(7)).unwrap(), -1);
        assert!(jacobi(&b(1), &b(4)).is_err());
        assert!(jacobi(&b(1), &b(-3)).is_err());
    }

    #[test]
    fn jacobi_matches_euler_criterion() {
        for p in [3u64, 5, 7, 11, 13, 97] {
            for a in 0..p {
                let e = pow_mod(a, (p - 1) / 2, p);
                let expect = if a == 0 { 0 } else if e == 1 { 1 } else { -1 };
                assert_eq!(jacobi(&b(a as i64), &b(p as i64)).unwrap(), expect);
            }
        }
    }

    #[test]
    fn tonelli_shanks() {
        for p in [3u64, 5, 13, 17, 41, 97, 1_000_000_007] {
            for a in 1..60u64 {
                if let Some(r) = sqrt_mod_prime(a, p) {
                    assert_eq!(mul_mod(r, r, p), a % p);
                    assert!(r <= p - r);
                }
            }
        }
    }

    #[test]
    fn prime_power_roots() {
        let r = sqrt_mod_prime_power(&b(-11), 31, 2).unwrap().unwrap();
        assert!((&r * &r + b(11)).mod_floor(&b(961)).is_zero());
        assert_eq!(sqrt_mod_prime_power(&b(2), 5, 3).unwrap(), None);
        assert!(sqrt_mod_prime_power(&b(10), 5, 3).is_err());
    }

    #[test]
    fn two_squares_examples() {
        assert_eq!(hensel_lift_two_squares(&b(2), 5, 2).unwrap(), (b(1), b(1)));
        assert_eq!(hensel_lift_two_squares(&b(522), 5, 2).unwrap(), (b(1), b(11)));
        assert!(matches!(hensel_lift_two_squares(&b(10), 5, 2), Err(Error::Precondition(_))));
        assert!(matches!(hensel_lift_two_squares(&b(3), 2, 2), Err(Error::Unsupported(_))));
        let (y, z) = hensel_lift_two_squares(&b(-7), 3, 6).unwrap();
        let s: Integer = &y * &y + &z * &z + 7;
        assert!(s.mod_floor(&b(729)).is_zero());
    }

    #[test]
    fn local_examples() {
        let c = certify_local(&b(7), Place::Prime(2), 3).unwrap();
        assert_eq!(c.verdict, Verdict::Solvable);
        assert_eq!(c.witness, Some(vec![b(1), b(1), b(1)]));
        assert!(c.replay());

        let c = certify_local(&b(-1), Place::Real, 3).unwrap();
        assert_eq!(c.verdict, Verdict::Unsolvable);
        assert!(c.replay());

        let c = certify_local(&b(55), Place::Prime(5), 2).unwrap();
        assert_eq!(c.verdict, Verdict::Solvable);
        assert_eq!(c.scale, b(15));
        let w = c.witness.clone().unwrap();
        let g = builtin(BuiltinForm::G).evaluate_int(&w).unwrap();
        assert!((g - b(225 * 55)).mod_floor(&b(5i64.pow(4))).is_zero());
        assert!(c.replay());

        assert!(certify_local(&b(7), Place::Prime(3), 0).is_err());
    }

    #[test]
    fn three_adic_paths() {
        for (k, method) in [(7, Method::ThreeAdicUnit), (12, Method::ThreeAdicScaled), (15, Method::ThreeAdicScaled)] {
            let c = certify_local(&b(k), Place::Prime(3), 3).unwrap();
            assert_eq!(c.method, method, "k = {k}");
            assert!(c.replay());
        }
        let c = certify_local(&b(5), Place::Prime(3), 3).unwrap();
        assert_eq!(c.verdict, Verdict::Unsolvable);
        let c = certify_local(&b(63), Place::Prime(3), 3).unwrap();
        assert_eq!(c.verdict, Verdict::Solvable);
    }

    #[test]
    fn tampered_witness_fails_replay() {
        let mut c = certify_local(&b(55), Place::Prime(7), 3).unwrap();
        if let Some(w) = c.witness.as_mut() {
            w[1] += 1;
        }
        assert!(!c.replay());
        let mut c = certify_local(&b(-1), Place::Real, 3).unwrap();
        c.verdict = Verdict::Solvable;
        assert!(!c.replay());
    }

    #[test]
    fn witnesses_agree_with_criterion() {
        for k in -60..=300i64 {
            for place in [Place::Prime(2), Place::Prime(3), Place::Prime(5), Place::Prime(7), Place::Prime(11)] {
                let c = certify_local(&b(k), place, 3).unwrap();
                assert!(c.replay(), "k = {k} at {place}");
            }
        }
    }

    #[test]
    fn g_is_universal_away_from_3() {
        for k in 1..200i64 {
            assert!(represents_g_locally(&b(k), Place::Prime(2)));
            assert!(represents_g_locally(&b(k), Place::Prime(5)));
        }
    }

    #[test]
    fn global_examples() {
        let r = certify_global(&b(7), None, DEFAULT_PRECISION).unwrap();
        assert!(r.is_solvable());
        assert!(r.replay());
        assert_eq!(
            r.places(),
            vec![Place::Real, Place::Prime(2), Place::Prime(3), Place::Prime(5), Place::Prime(7)]
        );
        assert!(certify_global(&b(55), None, DEFAULT_PRECISION).unwrap().is_solvable());
        let r = certify_global(&b(-4), None, DEFAULT_PRECISION).unwrap();
        assert!(!r.is_solvable());
        assert_eq!(r.certificates[0].verdict, Verdict::Unsolvable);
        assert!(certify_global(&b(7), Some(&[4]), 3).is_err());
    }

    #[test]
    fn default_primes() {
        assert_eq!(default_extra_primes(&b(7)), vec![5, 7]);
        assert_eq!(default_extra_primes(&b(55)), vec![5, 7, 11]);
        assert_eq!(default_extra_primes(&b(3 * 13 * 47)), vec![5, 7, 13, 47]);
    }

    #[test]
    fn rational_criterion_matches_enumeration_for_g() {
        let g = builtin(BuiltinForm::G);
        let diag = g_diagonal();
        for n in 1..300i64 {
            let local = represents_rationally(&diag, &b(n)).unwrap();
            let integral = g.find_representation(&b(n)).unwrap().is_some();
            assert_eq!(local, integral, "n = {n}");
        }
    }

    #[test]
    fn hilbert_reciprocity() {
        for a in [-7i64, -3, -1, 2, 3, 5, 6, 10, 21] {
            for c in [-5i64, -2, -1, 3, 7, 11, 15] {
                let mut prod = hilbert_symbol(&b(a), &b(c), Place::Real).unwrap();
                for p in [2u64, 3, 5, 7, 11] {
                    prod *= hilbert_symbol(&b(a), &b(c), Place::Prime(p)).unwrap();
                }
                assert_eq!(prod, 1, "({a}, {c})");
            }
        }
    }
}

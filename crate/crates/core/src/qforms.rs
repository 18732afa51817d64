//! Integral quadratic forms: exact evaluation, polarization, positive
//! definiteness, and complete enumeration of representations.
//!
//! A form is stored by the symmetric integer matrix `B` of its polarization,
//! so `Q(v) = Σ Bᵢᵢvᵢ² + 2Σᵢ<ⱼ Bᵢⱼvᵢvⱼ`. Vectors and values are arbitrary
//! precision; only the Gram coefficients are machine integers.
//!
//! Enumeration completes squares from the last coordinate backwards, which
//! writes a positive definite form as `Σₖ dₖ (vₖ + Σⱼ<ₖ μₖⱼ vⱼ)²`. Coordinate 0
//! is then the outermost loop, so results come out in lexicographic order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::{Integer as _, Roots};
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg;

pub type Integer = BigInt;
pub type Rational = BigRational;
pub type IntVector = Vec<BigInt>;
pub type RatVector = Vec<BigRational>;

/// Largest target accepted by the enumeration routines.
pub const ENUMERATION_LIMIT: i64 = 1_000_000_000_000;

/// The three forms the toolkit is built around.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BuiltinForm {
    /// `4(2x²+2y²+2z²−2xy−2xz+yz) + 2u(4u−x−y−z)`
    F,
    /// `x² + 3y² + 3z²`
    G,
    /// `x² + y² + 3z²`
    Q3,
}

impl FromStr for BuiltinForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "F" | "f" => Ok(BuiltinForm::F),
            "G" | "g" => Ok(BuiltinForm::G),
            "Q3" | "q3" => Ok(BuiltinForm::Q3),
            other => Err(Error::UnknownForm(other.to_string())),
        }
    }
}

impl fmt::Display for BuiltinForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BuiltinForm::F => "F",
            BuiltinForm::G => "G",
            BuiltinForm::Q3 => "Q3",
        })
    }
}

#[derive(Debug, Clone)]
pub struct QuadraticForm {
    dim: usize,
    gram: Vec<i64>,
    name: Option<String>,
}

impl PartialEq for QuadraticForm {
    /// Forms are equal when their Gram matrices are; labels are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.gram == other.gram
    }
}

impl Eq for QuadraticForm {}

impl QuadraticForm {
    /// Builds a form from a symmetric Gram matrix given as rows.
    pub fn from_gram(rows: &[Vec<i64>]) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::Domain("a form needs at least one variable".into()));
        }
        let mut gram = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: row.len() });
            }
            gram.extend_from_slice(row);
        }
        for i in 0..dim {
            for j in 0..i {
                if gram[i * dim + j] != gram[j * dim + i] {
                    return Err(Error::Domain(format!("gram matrix not symmetric at ({i},{j})")));
                }
            }
        }
        Ok(QuadraticForm { dim, gram, name: None })
    }

    pub fn diagonal(coeffs: &[i64]) -> Result<Self> {
        let n = coeffs.len();
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { coeffs[i] } else { 0 }).collect())
            .collect();
        Self::from_gram(&rows)
    }

    /// Builds a form from polynomial coefficients: `(i, j, c)` contributes
    /// `c·vᵢvⱼ`. Cross terms must have even total coefficient.
    pub fn from_coefficients(dim: usize, terms: &[(usize, usize, i64)]) -> Result<Self> {
        let mut poly = vec![0i64; dim * dim];
        for &(i, j, c) in terms {
            if i >= dim || j >= dim {
                return Err(Error::DimensionMismatch { expected: dim, found: i.max(j) + 1 });
            }
            let (a, b) = if i <= j { (i, j) } else { (j, i) };
            poly[a * dim + b] += c;
        }
        let mut rows = vec![vec![0i64; dim]; dim];
        for i in 0..dim {
            rows[i][i] = poly[i * dim + i];
            for j in i + 1..dim {
                let c = poly[i * dim + j];
                if c % 2 != 0 {
                    return Err(Error::Domain(format!(
                        "cross term v{i}v{j} has odd coefficient {c}; no integral polarization"
                    )));
                }
                rows[i][j] = c / 2;
                rows[j][i] = c / 2;
            }
        }
        Self::from_gram(&rows)
    }

    /// Builds `(1/scale)·Σ wₖ (ℓₖ·v)²` and checks that it is integral.
    pub fn from_weighted_squares(
        dim: usize,
        squares: &[(i64, Vec<i64>)],
        scale: i64,
    ) -> Result<Self> {
        let mut rows = vec![vec![0i64; dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                let s: i64 = squares
                    .iter()
                    .map(|(w, l)| {
                        if l.len() != dim {
                            0
                        } else {
                            w * l[i] * l[j]
                        }
                    })
                    .sum();
                if s % scale != 0 {
                    return Err(Error::Domain(format!(
                        "entry ({i},{j}) = {s}/{scale} is not integral"
                    )));
                }
                rows[i][j] = s / scale;
            }
        }
        if let Some((_, l)) = squares.iter().find(|(_, l)| l.len() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: l.len() });
        }
        Self::from_gram(&rows)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn gram(&self, i: usize, j: usize) -> i64 {
        self.gram[i * self.dim + j]
    }

    pub fn gram_rows(&self) -> Vec<Vec<i64>> {
        self.gram.chunks(self.dim).map(<[i64]>::to_vec).collect()
    }

    /// Polynomial coefficients keyed by `(i, j)` with `i ≤ j`.
    pub fn coefficients(&self) -> BTreeMap<(usize, usize), i64> {
        let mut out = BTreeMap::new();
        for i in 0..self.dim {
            for j in i..self.dim {
                let c = if i == j { self.gram(i, i) } else { 2 * self.gram(i, j) };
                if c != 0 {
                    out.insert((i, j), c);
                }
            }
        }
        out
    }

    /// Which of the built-in forms this is, if any.
    pub fn builtin_kind(&self) -> Option<BuiltinForm> {
        [BuiltinForm::F, BuiltinForm::G, BuiltinForm::Q3]
            .into_iter()
            .find(|&b| builtin(b) == *self)
    }

    fn check_dim(&self, n: usize) -> Result<()> {
        if n == self.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.dim, found: n })
        }
    }

    pub fn evaluate(&self, v: &[Rational]) -> Result<Rational> {
        self.bilinear(v, v)
    }

    pub fn bilinear(&self, v: &[Rational], w: &[Rational]) -> Result<Rational> {
        self.check_dim(v.len())?;
        self.check_dim(w.len())?;
        let mut acc = Rational::zero();
        for i in 0..self.dim {
            if v[i].is_zero() {
                continue;
            }
            let mut row = Rational::zero();
            for j in 0..self.dim {
                let b = self.gram(i, j);
                if b != 0 && !w[j].is_zero() {
                    row += &w[j] * Rational::from_integer(b.into());
                }
            }
            acc += &v[i] * row;
        }
        Ok(acc)
    }

    pub fn evaluate_int(&self, v: &[Integer]) -> Result<Integer> {
        self.bilinear_int(v, v)
    }

    pub fn bilinear_int(&self, v: &[Integer], w: &[Integer]) -> Result<Integer> {
        self.check_dim(v.len())?;
        self.check_dim(w.len())?;
        let mut acc = Integer::zero();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let b = self.gram(i, j);
                if b != 0 {
                    acc += &v[i] * &w[j] * b;
                }
            }
        }
        Ok(acc)
    }

    /// Fast exact evaluation on small vectors.
    ///
    /// Panics if the length of `v` differs from the dimension.
    pub fn value_i64(&self, v: &[i64]) -> i128 {
        assert_eq!(v.len(), self.dim);
        let mut acc: i128 = 0;
        for i in 0..self.dim {
            let mut row: i128 = 0;
            for j in 0..self.dim {
                row += self.gram(i, j) as i128 * v[j] as i128;
            }
            acc += v[i] as i128 * row;
        }
        acc
    }

    pub fn is_positive_definite(&self) -> bool {
        let m: linalg::IntMatrix = self
            .gram_rows()
            .into_iter()
            .map(|r| r.into_iter().map(BigInt::from).collect())
            .collect();
        linalg::leading_minors(&m).iter().all(|d| d.is_positive())
    }

    /// Diagonal coefficients `d₀, …, dₙ₋₁` of the square completion, i.e. a
    /// rational diagonalization `Q ≅ ⟨d₀, …, dₙ₋₁⟩`.
    pub fn diagonal_coefficients(&self) -> Result<Vec<Rational>> {
        let c = Completion::new(self)?;
        Ok(c
            .d
            .iter()
            .map(|r| Rational::new((*r.numer()).into(), (*r.denom()).into()))
            .collect())
    }

    /// Maximum of `Q` over the `2^dim` vertices of `[−1, 1]^dim`.
    pub fn cube_sup(&self) -> Result<Integer> {
        if !self.is_positive_definite() {
            return Err(Error::NotPositiveDefinite);
        }
        let n = self.dim;
        let mut best: i128 = 0;
        for mask in 0u64..(1u64 << n) {
            let v: Vec<i64> = (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
            best = best.max(self.value_i64(&v));
        }
        Ok(best.into())
    }

    /// All integer vectors with `Q(v) = n`, in lexicographic order.
    pub fn representations(&self, n: &Integer) -> Result<Vec<IntVector>> {
        let mut out = Vec::new();
        self.for_each_representation(n, false, |v| {
            out.push(to_int_vector(v));
            true
        })?;
        Ok(out)
    }

    /// The lexicographically first representation of `n` with nonnegative
    /// coordinates, or failing that the lexicographically first one.
    pub fn find_representation(&self, n: &Integer) -> Result<Option<IntVector>> {
        for nonneg in [true, false] {
            let mut hit = None;
            self.for_each_representation(n, nonneg, |v| {
                hit = Some(to_int_vector(v));
                false
            })?;
            if hit.is_some() {
                return Ok(hit);
            }
        }
        Ok(None)
    }

    /// Visits every `v` with `Q(v) = n` (restricted to nonnegative
    /// coordinates when `nonneg`) in lexicographic order until `visit`
    /// returns false.
    pub fn for_each_representation(
        &self,
        n: &Integer,
        nonneg: bool,
        mut visit: impl FnMut(&[i64]) -> bool,
    ) -> Result<()> {
        let Some(target) = self.enumeration_target(n)? else {
            return Ok(());
        };
        let c = Completion::new(self)?;
        let mut v = vec![0i64; self.dim];
        c.walk(0, &mut v, Ratio::from_integer(target as i128), Mode::Exact, nonneg, &mut visit);
        Ok(())
    }

    /// Visits every `v` with `Q(v) ≤ bound` in lexicographic order, passing
    /// the exact value alongside.
    pub fn for_each_vector_up_to(
        &self,
        bound: &Integer,
        mut visit: impl FnMut(&[i64], i128) -> bool,
    ) -> Result<()> {
        let Some(target) = self.enumeration_target(bound)? else {
            return Ok(());
        };
        let c = Completion::new(self)?;
        let mut v = vec![0i64; self.dim];
        let mut inner = |w: &[i64]| visit(w, self.value_i64(w));
        c.walk(0, &mut v, Ratio::from_integer(target as i128), Mode::UpTo, false, &mut inner);
        Ok(())
    }

    /// `{Q(v) : v primitive, 0 < Q(v) ≤ bound}`, ascending.
    pub fn primitive_image(&self, bound: &Integer) -> Result<Vec<Integer>> {
        let mut seen = BTreeSet::new();
        self.for_each_vector_up_to(bound, |v, q| {
            if q > 0 && is_primitive_i64(v) {
                seen.insert(q);
            }
            true
        })?;
        Ok(seen.into_iter().map(Integer::from).collect())
    }

    fn enumeration_target(&self, n: &Integer) -> Result<Option<i64>> {
        if !self.is_positive_definite() {
            return Err(Error::Unsupported(
                "enumeration requires a positive definite form".into(),
            ));
        }
        if n.is_negative() {
            return Ok(None);
        }
        match n.to_i64() {
            Some(t) if t <= ENUMERATION_LIMIT => Ok(Some(t)),
            _ => Err(Error::Unsupported(format!(
                "enumeration target {n} exceeds {ENUMERATION_LIMIT}"
            ))),
        }
    }
}

pub fn builtin(kind: BuiltinForm) -> QuadraticForm {
    let form = match kind {
        // x y z u = 0 1 2 3
        BuiltinForm::F => QuadraticForm::from_coefficients(
            4,
            &[
                (0, 0, 8),
                (1, 1, 8),
                (2, 2, 8),
                (0, 1, -8),
                (0, 2, -8),
                (1, 2, 4),
                (3, 3, 8),
                (0, 3, -2),
                (1, 3, -2),
                (2, 3, -2),
            ],
        ),
        BuiltinForm::G => QuadraticForm::diagonal(&[1, 3, 3]),
        BuiltinForm::Q3 => QuadraticForm::diagonal(&[1, 1, 3]),
    };
    form.expect("built-in forms are well formed").with_name(kind.to_string())
}

pub fn builtin_form(name: &str) -> Result<QuadraticForm> {
    Ok(builtin(name.parse()?))
}

/// The diagonalized presentation
/// `8F = (8x−4y−4z−u)² + 3(4y−u)² + 3(4z−u)² + 57u²` as weighted squares.
pub fn f_weighted_squares() -> Vec<(i64, Vec<i64>)> {
    vec![
        (1, vec![8, -4, -4, -1]),
        (3, vec![0, 4, 0, -1]),
        (3, vec![0, 0, 4, -1]),
        (57, vec![0, 0, 0, 1]),
    ]
}

pub fn is_primitive(v: &[Integer]) -> bool {
    v.iter().fold(Integer::zero(), |g, x| g.gcd(x)).is_one()
}

pub(crate) fn is_primitive_i64(v: &[i64]) -> bool {
    v.iter().fold(0i64, |g, &x| g.gcd(&x)) == 1
}

pub fn content(v: &[Integer]) -> Integer {
    v.iter().fold(Integer::zero(), |g, x| g.gcd(x))
}

pub fn to_int_vector(v: &[i64]) -> IntVector {
    v.iter().map(|&x| Integer::from(x)).collect()
}

pub fn to_rat_vector(v: &[Integer]) -> RatVector {
    v.iter().map(|x| Rational::from_integer(x.clone())).collect()
}

/// `v / t` as a rational vector.
pub fn scaled(v: &[Integer], t: &Integer) -> RatVector {
    v.iter().map(|x| Rational::new(x.clone(), t.clone())).collect()
}

type Q128 = Ratio<i128>;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Exact,
    UpTo,
}

/// Square completion `Q(v) = Σₖ dₖ (vₖ + Σⱼ<ₖ μₖⱼ vⱼ)²`.
struct Completion {
    d: Vec<Q128>,
    mu: Vec<Vec<Q128>>,
}

impl Completion {
    fn new(form: &QuadraticForm) -> Result<Self> {
        let n = form.dim;
        let mut a: Vec<Vec<Q128>> = (0..n)
            .map(|i| (0..n).map(|j| Q128::from_integer(form.gram(i, j) as i128)).collect())
            .collect();
        let mut d = vec![Q128::zero(); n];
        let mut mu = vec![Vec::new(); n];
        for k in (0..n).rev() {
            let dk = a[k][k];
            if dk <= Q128::zero() {
                return Err(Error::NotPositiveDefinite);
            }
            mu[k] = (0..k).map(|j| a[k][j] / dk).collect();
            for i in 0..k {
                for j in 0..k {
                    let delta = a[i][k] * a[k][j] / dk;
                    a[i][j] -= delta;
                }
            }
            d[k] = dk;
        }
        Ok(Completion { d, mu })
    }

    fn walk(
        &self,
        level: usize,
        v: &mut Vec<i64>,
        remaining: Q128,
        mode: Mode,
        nonneg: bool,
        visit: &mut dyn FnMut(&[i64]) -> bool,
    ) -> bool {
        let n = self.d.len();
        let center = self.mu[level]
            .iter()
            .zip(v.iter())
            .fold(Q128::zero(), |acc, (m, &x)| acc + *m * Q128::from_integer(x as i128));
        let slack = remaining / self.d[level];
        let last = level + 1 == n;
        if last && mode == Mode::Exact {
            // (x + c)² = slack must have a rational root.
            let (a, b) = (*slack.numer(), *slack.denom());
            let (ra, rb) = (a.sqrt(), b.sqrt());
            if ra * ra != a || rb * rb != b {
                return true;
            }
            let root = Q128::new(ra, rb);
            let mut xs = vec![-center - root];
            if !root.is_zero() {
                xs.push(-center + root);
            }
            for x in xs {
                if !x.is_integer() {
                    continue;
                }
                let x = x.to_integer() as i64;
                if nonneg && x < 0 {
                    continue;
                }
                v[level] = x;
                if !visit(v) {
                    return false;
                }
            }
            return true;
        }
        let (mut lo, hi) = integer_window(center, slack);
        if nonneg {
            lo = lo.max(0);
        }
        for x in lo..=hi {
            v[level] = x as i64;
            if last {
                if !visit(v) {
                    return false;
                }
                continue;
            }
            let shifted = Q128::from_integer(x) + center;
            let rest = remaining - self.d[level] * shifted * shifted;
            if rest < Q128::zero() {
                continue;
            }
            if !self.walk(level + 1, v, rest, mode, nonneg, visit) {
                return false;
            }
        }
        v[level] = 0;
        true
    }
}

/// Integers `x` with `(x + c)² ≤ s`, as an inclusive window.
fn integer_window(c: Q128, s: Q128) -> (i128, i128) {
    if s < Q128::zero() {
        return (1, 0);
    }
    let (p, q) = (*c.numer(), *c.denom());
    let (a, b) = (*s.numer(), *s.denom());
    // (qx + p)² ≤ q²a/b, and the left side is an integer.
    let t = num_integer::Integer::div_floor(&(q * q * a), &b);
    let r = t.sqrt();
    (num_integer::Integer::div_ceil(&(-r - p), &q), num_integer::Integer::div_floor(&(r - p), &q))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> IntVector {
        to_int_vector(v)
    }

    fn rats(v: &[(i64, i64)]) -> RatVector {
        v.iter().map(|&(a, b)| Rational::new(a.into(), b.into())).collect()
    }

    #[test]
    fn builtin_values() {
        let f = builtin(BuiltinForm::F);
        assert_eq!(f.evaluate_int(&ints(&[1, 0, -1, 0])).unwrap(), 24.into());
        assert_eq!(f.evaluate_int(&ints(&[0, 1, -2, 1])).unwrap(), 42.into());
        let q3 = builtin_form("Q3").unwrap();
        assert_eq!(q3.evaluate_int(&ints(&[0, 0, 1])).unwrap(), 3.into());
        let g = builtin_form("G").unwrap();
        assert_eq!(g.evaluate_int(&ints(&[1, 1, 1])).unwrap(), 7.into());
        assert_eq!(f.dim(), 4);
        assert_eq!(g.dim(), 3);
        assert!(matches!(builtin_form("H"), Err(Error::UnknownForm(_))));
    }

    #[test]
    fn rational_evaluation() {
        let q3 = builtin(BuiltinForm::Q3);
        let v = rats(&[(3, 5), (4, 5), (1, 1)]);
        assert_eq!(q3.evaluate(&v).unwrap(), Rational::from_integer(4.into()));
        let zero = rats(&[(0, 1); 4]);
        assert!(builtin(BuiltinForm::F).evaluate(&zero).unwrap().is_zero());
        assert_eq!(
            q3.evaluate(&rats(&[(1, 1), (1, 1)])),
            Err(Error::DimensionMismatch { expected: 3, found: 2 })
        );
    }

    #[test]
    fn bilinear_examples() {
        let q3 = builtin(BuiltinForm::Q3);
        let e = |i: usize| {
            let mut v = rats(&[(0, 1); 3]);
            v[i] = Rational::one();
            v
        };
        assert!(q3.bilinear(&e(0), &e(1)).unwrap().is_zero());
        let b = q3
            .bilinear(&rats(&[(3, 1), (4, 1), (5, 1)]), &rats(&[(1, 1), (1, 1), (1, 1)]))
            .unwrap();
        assert_eq!(b, Rational::from_integer(22.into()));
        let f = builtin(BuiltinForm::F);
        let e1 = rats(&[(1, 1), (0, 1), (0, 1), (0, 1)]);
        assert_eq!(f.bilinear(&e1, &e1).unwrap(), Rational::from_integer(8.into()));
    }

    #[test]
    fn definiteness() {
        assert!(builtin(BuiltinForm::F).is_positive_definite());
        assert!(builtin(BuiltinForm::Q3).is_positive_definite());
        assert!(!QuadraticForm::diagonal(&[1, -1]).unwrap().is_positive_definite());
        let indefinite = QuadraticForm::diagonal(&[1, -1]).unwrap();
        assert!(matches!(
            indefinite.representations(&1.into()),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn representation_examples() {
        let q3 = builtin(BuiltinForm::Q3);
        assert_eq!(
            q3.representations(&2.into()).unwrap(),
            vec![ints(&[-1, -1, 0]), ints(&[-1, 1, 0]), ints(&[1, -1, 0]), ints(&[1, 1, 0])]
        );
        assert!(q3.representations(&6.into()).unwrap().is_empty());
        let g = builtin(BuiltinForm::G);
        let reps = g.representations(&7.into()).unwrap();
        assert_eq!(reps.len(), 16);
        assert_eq!(reps.iter().filter(|v| v.iter().all(|x| x.abs().is_one())).count(), 8);
        assert!(q3.representations(&(-1).into()).unwrap().is_empty());
        assert_eq!(q3.representations(&0.into()).unwrap(), vec![ints(&[0, 0, 0])]);
    }

    #[test]
    fn find_prefers_nonnegative() {
        let g = builtin(BuiltinForm::G);
        assert_eq!(g.find_representation(&31.into()).unwrap(), Some(ints(&[1, 1, 3])));
        let f = builtin(BuiltinForm::F);
        let v = f.find_representation(&8.into()).unwrap().unwrap();
        assert_eq!(f.evaluate_int(&v).unwrap(), 8.into());
    }

    #[test]
    fn primitivity() {
        assert!(is_primitive(&ints(&[1, 0, -1, 0])));
        assert!(!is_primitive(&ints(&[2, 4, 6, 0])));
        assert!(!is_primitive(&ints(&[0, 0, 0, 0])));
    }

    #[test]
    fn primitive_image_examples() {
        let f = builtin(BuiltinForm::F);
        let got = f.primitive_image(&30.into()).unwrap();
        assert_eq!(got, ints(&[8, 12, 14, 18, 20, 24, 26, 30]));
        assert!(f.primitive_image(&0.into()).unwrap().is_empty());
        let q3 = builtin(BuiltinForm::Q3);
        // 9 is only reached by (±3,0,0) and (0,±3,0).
        assert_eq!(
            q3.primitive_image(&10.into()).unwrap(),
            ints(&[1, 2, 3, 4, 5, 7, 8, 10])
        );
    }

    #[test]
    fn cube_sup_examples() {
        assert_eq!(builtin(BuiltinForm::Q3).cube_sup().unwrap(), 5.into());
        assert_eq!(builtin(BuiltinForm::G).cube_sup().unwrap(), 7.into());
        assert_eq!(builtin(BuiltinForm::F).cube_sup().unwrap(), 54.into());
    }

    #[test]
    fn odd_cross_term_rejected() {
        assert!(QuadraticForm::from_coefficients(2, &[(0, 1, 1)]).is_err());
        assert!(QuadraticForm::from_gram(&[vec![1, 2], vec![3, 1]]).is_err());
    }

    #[test]
    fn window_is_tight() {
        let c = Q128::new(1, 3);
        let s = Q128::new(7, 2);
        let (lo, hi) = integer_window(c, s);
        for x in lo - 3..=hi + 3 {
            let y = Q128::from_integer(x) + c;
            assert_eq!(y * y <= s, (lo..=hi).contains(&x), "x = {x}");
        }
    }
}

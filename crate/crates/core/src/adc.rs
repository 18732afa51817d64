//! Denominator descent for rational representations.
//!
//! A rational point `v/t` with `Q(v/t) = m` is pushed towards an integer
//! point by secant steps through nearby integer vectors. When plain
//! rounding does not land close enough (the form is not Euclidean), the
//! torus reduction first multiplies `v/p` by a small `i` whose fractional
//! part is short, which always works once `p > ⌈√M⌉ⁿ` with `M` the maximum
//! of `Q` on `[−1, 1]ⁿ`.

use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{precondition, Error, Result};
use crate::local_global;
use crate::qforms::{builtin, content, BuiltinForm, IntVector, Integer, QuadraticForm};

/// `v / t` together with its certified value `m = Q(v/t)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalPoint {
    #[serde(with = "crate::json::ints")]
    pub v: IntVector,
    #[serde(with = "crate::json::int")]
    pub t: Integer,
    #[serde(with = "crate::json::int")]
    pub m: Integer,
}

impl RationalPoint {
    /// Checks `t > 0` and `Q(v) = m·t²` before building the point.
    pub fn new(form: &QuadraticForm, v: IntVector, t: Integer, m: Integer) -> Result<Self> {
        let p = RationalPoint { v, t, m };
        p.check(form)?;
        Ok(p)
    }

    /// Builds the point `v/t`, deriving `m`; fails when `Q(v/t)` is not an integer.
    pub fn from_vector(form: &QuadraticForm, v: IntVector, t: Integer) -> Result<Self> {
        if !t.is_positive() {
            return precondition("denominator must be positive");
        }
        let q = form.evaluate_int(&v)?;
        let t2 = &t * &t;
        let (m, r) = q.div_rem(&t2);
        if !r.is_zero() {
            return precondition(format!("Q(v/t) = {q}/{t2} is not an integer"));
        }
        Ok(RationalPoint { v, t, m })
    }

    pub fn check(&self, form: &QuadraticForm) -> Result<()> {
        if !self.t.is_positive() {
            return precondition("denominator must be positive");
        }
        let q = form.evaluate_int(&self.v)?;
        if q != &self.m * &self.t * &self.t {
            return precondition(format!(
                "Q(v) = {q} but m·t² = {}",
                &self.m * &self.t * &self.t
            ));
        }
        Ok(())
    }

    pub fn holds(&self, form: &QuadraticForm) -> bool {
        self.check(form).is_ok()
    }

    pub fn is_integral(&self) -> bool {
        self.t.is_one()
    }

    /// Divides out `gcd(content(v), t)`.
    pub fn reduced(&self) -> RationalPoint {
        let g = content(&self.v).gcd(&self.t);
        if g.is_one() || g.is_zero() {
            return self.clone();
        }
        RationalPoint {
            v: self.v.iter().map(|x| x / &g).collect(),
            t: &self.t / &g,
            m: self.m.clone(),
        }
    }
}

/// One secant move through the integer point `z`.
///
/// With `a = Q(z) − m` and `b = 2(m·t − B(v, z))` the second intersection of
/// the line through `v/t` and `z` with the level set is `(a·v + b·z)/(a·t + b)`,
/// and its denominator equals `t·Q(v/t − z)`.
pub fn secant_step(form: &QuadraticForm, point: &RationalPoint, z: &[Integer]) -> Result<RationalPoint> {
    point.check(form)?;
    if z.len() != form.dim() {
        return Err(Error::DimensionMismatch { expected: form.dim(), found: z.len() });
    }
    let t = &point.t;
    let diff: IntVector = point.v.iter().zip(z).map(|(v, z)| v - t * z).collect();
    // Q(v/t − z) = Q(v − t·z)/t²
    let q_diff = form.evaluate_int(&diff)?;
    if q_diff.is_zero() {
        return Err(Error::DegenerateChord);
    }
    if q_diff.abs() >= t * t {
        return precondition(format!("|Q(v/t − z)| = |{q_diff}|/{} is not below 1", t * t));
    }
    let a = form.evaluate_int(z)? - &point.m;
    let b = Integer::from(2) * (&point.m * t - form.bilinear_int(&point.v, z)?);
    let mut v: IntVector = point.v.iter().zip(z).map(|(v, z)| &a * v + &b * z).collect();
    let mut t_new = &a * t + &b;
    if t_new.is_negative() {
        v.iter_mut().for_each(|x| *x = -x.clone());
        t_new = -t_new;
    }
    let out = RationalPoint { v, t: t_new, m: point.m.clone() };
    if out.check(form).is_err() || out.t != q_diff.abs() / t {
        return Err(Error::Invariant("secant step lost the value or the denominator identity".into()));
    }
    Ok(out)
}

/// Nearest integer to `num/den` (den > 0), ties broken toward zero.
fn round_half_toward_zero(num: &Integer, den: &Integer) -> Integer {
    let (q, r) = num.div_mod_floor(den);
    // num/den = q + r/den with 0 ≤ r < den
    let twice = Integer::from(2) * &r;
    if twice > *den || (twice == *den && q.is_negative()) {
        q + 1
    } else {
        q
    }
}

/// `⌈√M⌉` for the cube supremum `M`.
pub fn cube_side(form: &QuadraticForm) -> Result<Integer> {
    let m = form.cube_sup()?;
    let r = m.sqrt();
    Ok(if &r * &r == m { r } else { r + 1 })
}

/// `⌈√M⌉ⁿ`, above which the torus reduction is guaranteed to succeed.
pub fn torus_bound(form: &QuadraticForm) -> Result<Integer> {
    Ok(num_traits::pow(cube_side(form)?, form.dim()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusReduction {
    /// New numerator with `Q(v′/(i·t)) = Q(v)/p²`.
    pub v: IntVector,
    pub i: Integer,
    pub t: Integer,
    /// Integer shift used by the secant step (absent when `p | v`).
    pub z: Option<IntVector>,
    /// Whether `i` was found by the cube criterion or only by `Q(r) < 1`.
    pub by_cube: bool,
}

/// Reduces `v/p` to a point whose denominator `i·t` has only prime factors
/// below `p`.
pub fn torus_reduce(form: &QuadraticForm, v: &[Integer], p: u64) -> Result<TorusReduction> {
    if !arith::is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    if v.len() != form.dim() {
        return Err(Error::DimensionMismatch { expected: form.dim(), found: v.len() });
    }
    let pb = Integer::from(p);
    let p2 = &pb * &pb;
    let q = form.evaluate_int(v)?;
    let (m, rem) = q.div_rem(&p2);
    if !rem.is_zero() {
        return precondition(format!("p² = {p2} does not divide Q(v) = {q}"));
    }
    if v.iter().all(|x| x.is_multiple_of(&pb)) {
        return Ok(TorusReduction {
            v: v.iter().map(|x| x / &pb).collect(),
            i: Integer::one(),
            t: Integer::one(),
            z: None,
            by_cube: true,
        });
    }
    let side = cube_side(form)?;
    let mut fallback: Option<(u64, IntVector)> = None;
    let mut chosen: Option<(u64, IntVector, bool)> = None;
    for i in 1..p {
        let iv: IntVector = v.iter().map(|x| x * i).collect();
        let z: IntVector = iv.iter().map(|x| round_half_toward_zero(x, &pb)).collect();
        // centred residues r = i·v − p·z, so i·v/p − z = r/p
        let r: IntVector = iv.iter().zip(&z).map(|(a, b)| a - &pb * b).collect();
        let in_cube = r.iter().all(|x| x.abs() * &side <= pb);
        let qr = form.evaluate_int(&r)?;
        let admissible = qr.is_positive() && qr < p2;
        if in_cube && admissible {
            chosen = Some((i, z, true));
            break;
        }
        if admissible && fallback.is_none() {
            fallback = Some((i, z));
        }
    }
    let (i, z, by_cube) = match (chosen, fallback) {
        (Some(c), _) => c,
        (None, Some((i, z))) => (i, z, false),
        (None, None) => return Err(Error::ReductionUnavailable { p }),
    };
    let ib = Integer::from(i);
    let lifted = RationalPoint {
        v: v.iter().map(|x| x * &ib).collect(),
        t: pb.clone(),
        m: &m * &ib * &ib,
    };
    let out = secant_step(form, &lifted, &z)?;
    if out.t >= pb {
        return Err(Error::Invariant("torus secant did not shrink below p".into()));
    }
    Ok(TorusReduction { v: out.v, i: ib, t: out.t, z: Some(z), by_cube })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    /// Common factor of numerator and denominator removed.
    Trivial,
    /// Plain secant move through a rounded integer point.
    Secant,
    /// Torus reduction at a prime, including its inner secant move.
    Torus,
    /// Division by 4 on a 2-power denominator.
    Divide4,
    /// Residual small-prime denominator cleared by enumeration.
    Enumeration,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescentStep {
    pub kind: StepKind,
    pub input: RationalPoint,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prime: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "crate::json::opt_int")]
    pub multiplier: Option<Integer>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "crate::json::opt_ints")]
    pub shift: Option<IntVector>,
    /// Denominator produced by the secant move inside a torus step; always below `prime`.
    #[serde(default, skip_serializing_if = "Option::is_none", with = "crate::json::opt_int")]
    pub secant_denominator: Option<Integer>,
    pub output: RationalPoint,
}

impl DescentStep {
    fn new(kind: StepKind, input: RationalPoint, output: RationalPoint) -> Self {
        DescentStep {
            kind,
            input,
            prime: None,
            multiplier: None,
            shift: None,
            secant_denominator: None,
            output,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescentTrace {
    pub form: String,
    pub start: RationalPoint,
    pub steps: Vec<DescentStep>,
    pub terminal: RationalPoint,
    /// Primes whose torus reduction was unavailable and which were cleared
    /// by the 2-power or enumeration fallback.
    pub fallback_primes: Vec<u64>,
}

impl DescentTrace {
    pub fn reached_integer(&self) -> bool {
        self.terminal.is_integral()
    }

    pub fn residual_denominator(&self) -> &Integer {
        &self.terminal.t
    }

    /// Replays every step: value preserved, points chained, secant moves
    /// strictly shrinking.
    pub fn verify(&self, form: &QuadraticForm) -> bool {
        if !self.start.holds(form) || !self.terminal.holds(form) {
            return false;
        }
        let mut cur = &self.start;
        for s in &self.steps {
            if &s.input != cur || s.output.m != self.start.m || !s.output.holds(form) {
                return false;
            }
            let shrinks = match s.kind {
                StepKind::Secant => s.output.t < s.input.t,
                StepKind::Torus => match (s.prime, &s.secant_denominator) {
                    (Some(p), Some(t)) => *t < Integer::from(p),
                    (Some(_), None) => true,
                    _ => false,
                },
                StepKind::Trivial | StepKind::Divide4 => s.output.t < s.input.t,
                StepKind::Enumeration => s.output.is_integral(),
            };
            if !shrinks {
                return false;
            }
            cur = &s.output;
        }
        cur == &self.terminal
    }
}

const MAX_STEPS: usize = 100_000;

/// Runs the descent until the point is integral or no further reduction
/// is available.
pub fn descend(form: &QuadraticForm, point: &RationalPoint) -> Result<DescentTrace> {
    point.check(form)?;
    let kind = form.builtin_kind().filter(|k| matches!(k, BuiltinForm::Q3 | BuiltinForm::G));
    let mut steps = Vec::new();
    let mut fallback_primes = Vec::new();
    let mut cur = point.clone();
    while steps.len() < MAX_STEPS {
        let red = cur.reduced();
        if red != cur {
            steps.push(DescentStep::new(StepKind::Trivial, cur.clone(), red.clone()));
            cur = red;
        }
        if cur.is_integral() {
            break;
        }
        if let Some(next) = try_plain_secant(form, &cur)? {
            steps.push(next);
            cur = steps.last().unwrap().output.clone();
            continue;
        }
        let factors = arith::factor_big(&cur.t)?;
        let mut progressed = false;
        for &(p, r) in factors.iter().rev() {
            match torus_reduce(form, &cur.v, p) {
                Ok(red) => {
                    let pb = Integer::from(p);
                    let cofactor = &cur.t / num_traits::pow(pb, r as usize);
                    let new_t = &red.i * &red.t * cofactor * arith::pow_big(p, r - 1);
                    let out = RationalPoint { v: red.v.clone(), t: new_t, m: cur.m.clone() };
                    let mut step = DescentStep::new(StepKind::Torus, cur.clone(), out.clone());
                    step.prime = Some(p);
                    step.multiplier = Some(red.i);
                    step.shift = red.z;
                    step.secant_denominator = Some(red.t);
                    steps.push(step);
                    cur = out;
                    progressed = true;
                    break;
                }
                Err(Error::ReductionUnavailable { .. }) => continue,
                Err(e) => return Err(e),
            }
        }
        if progressed {
            continue;
        }
        // every denominator prime resisted the torus step
        let Some(kind) = kind else { break };
        fallback_primes.extend(factors.iter().map(|&(p, _)| p));
        if factors.len() == 1 && factors[0].0 == 2 {
            for _ in 0..factors[0].1 {
                let w = match kind {
                    BuiltinForm::Q3 => divide_by_4(&cur.v)?,
                    _ => divide_by_4_g(&cur.v)?,
                };
                let out = RationalPoint { v: w, t: &cur.t / 2, m: cur.m.clone() };
                steps.push(DescentStep::new(StepKind::Divide4, cur.clone(), out.clone()));
                cur = out;
            }
        } else {
            let w = form.find_representation(&cur.m)?.ok_or_else(|| {
                Error::Invariant(format!("{kind} has no integer representation of {}", cur.m))
            })?;
            let out = RationalPoint { v: w, t: Integer::one(), m: cur.m.clone() };
            steps.push(DescentStep::new(StepKind::Enumeration, cur.clone(), out.clone()));
            cur = out;
        }
    }
    if steps.len() >= MAX_STEPS {
        return Err(Error::Invariant("descent did not terminate".into()));
    }
    fallback_primes.sort_unstable();
    fallback_primes.dedup();
    let trace = DescentTrace {
        form: form.name().unwrap_or("Q").to_string(),
        start: point.clone(),
        steps,
        terminal: cur,
        fallback_primes,
    };
    if !trace.verify(form) {
        return Err(Error::Invariant("descent trace failed its own replay".into()));
    }
    Ok(trace)
}

fn try_plain_secant(form: &QuadraticForm, cur: &RationalPoint) -> Result<Option<DescentStep>> {
    let z: IntVector = cur.v.iter().map(|x| round_half_toward_zero(x, &cur.t)).collect();
    let diff: IntVector = cur.v.iter().zip(&z).map(|(v, z)| v - &cur.t * z).collect();
    let q = form.evaluate_int(&diff)?;
    if !q.is_positive() || q >= &cur.t * &cur.t {
        return Ok(None);
    }
    let out = secant_step(form, cur, &z)?;
    let mut step = DescentStep::new(StepKind::Secant, cur.clone(), out);
    step.shift = Some(z);
    Ok(Some(step))
}

/// `w` with `Q3(w) = Q3(v)/4`.
pub fn divide_by_4(v: &[Integer]) -> Result<IntVector> {
    let q3 = builtin(BuiltinForm::Q3);
    let q = q3.evaluate_int(v)?;
    if !q.is_multiple_of(&Integer::from(4)) {
        return precondition(format!("Q3(v) = {q} is not divisible by 4"));
    }
    if v.iter().all(|x| x.is_even()) {
        return Ok(v.iter().map(|x| x / 2).collect());
    }
    // z odd and exactly one of x, y odd: no coordinatewise halving.
    q3.find_representation(&(q / 4))?
        .ok_or_else(|| Error::Invariant("Q3 image not closed under division by 4".into()))
}

/// `w` with `G(w) = G(v)/4`, routed through `Q3(3y, 3z, x) = 3G(x, y, z)`.
pub fn divide_by_4_g(v: &[Integer]) -> Result<IntVector> {
    if v.len() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, found: v.len() });
    }
    let lifted = [&v[1] * 3, &v[2] * 3, v[0].clone()];
    let w = divide_by_4(&lifted)?;
    let (x, y, z) = reduce_3g(&w[0], &w[1], &w[2])?;
    Ok(vec![x, y, z])
}

/// `(C, A/3, B/3)` with `G(C, A/3, B/3) = Q3(A, B, C)/3`.
pub fn reduce_3g(a: &Integer, b: &Integer, c: &Integer) -> Result<(Integer, Integer, Integer)> {
    let three = Integer::from(3);
    let q = a * a + b * b + &three * c * c;
    if !q.is_multiple_of(&three) {
        return precondition(format!("Q3(A,B,C) = {q} is not divisible by 3"));
    }
    if !a.is_multiple_of(&three) || !b.is_multiple_of(&three) {
        return Err(Error::Invariant("3 | A² + B² without 3 | A and 3 | B".into()));
    }
    Ok((c.clone(), a / &three, b / &three))
}

/// The point `(Q(d)·w − 2B(w, d)·d) / Q(d)`: second intersection of the line
/// through the integer point `w` in direction `d` with the level set of `w`.
pub fn secant_parametrize(form: &QuadraticForm, w: &[Integer], d: &[Integer]) -> Result<RationalPoint> {
    let qd = form.evaluate_int(d)?;
    if !qd.is_positive() {
        return Err(Error::Domain("direction must have positive norm".into()));
    }
    let b2 = Integer::from(2) * form.bilinear_int(w, d)?;
    let v: IntVector = w.iter().zip(d).map(|(w, d)| &qd * w - &b2 * d).collect();
    RationalPoint::new(form, v, qd, form.evaluate_int(w)?)
}

/// Integers `1 ≤ n ≤ bound` represented by `form` over ℚ but not over ℤ.
pub fn adc_check(form: &QuadraticForm, bound: &Integer) -> Result<Vec<Integer>> {
    if !form.is_positive_definite() {
        return Err(Error::NotPositiveDefinite);
    }
    let limit = bound
        .to_i64()
        .ok_or_else(|| Error::Unsupported(format!("bound {bound} too large")))?;
    let diag = form.diagonal_coefficients()?;
    let mut violations = Vec::new();
    for n in 1..=limit {
        let n = Integer::from(n);
        if local_global::represents_rationally(&diag, &n)?
            && form.find_representation(&n)?.is_none()
        {
            violations.push(n);
        }
    }
    Ok(violations)
}

pub fn q3() -> QuadraticForm {
    builtin(BuiltinForm::Q3)
}

pub fn g() -> QuadraticForm {
    builtin(BuiltinForm::G)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qforms::{self, to_int_vector as iv};

    fn pt(form: &QuadraticForm, v: &[i64], t: i64, m: i64) -> RationalPoint {
        RationalPoint::new(form, iv(v), t.into(), m.into()).unwrap()
    }

    #[test]
    fn secant_examples() {
        let q3 = q3();
        let out = secant_step(&q3, &pt(&q3, &[3, 4, 5], 5, 4), &iv(&[1, 1, 1])).unwrap();
        assert_eq!(out, pt(&q3, &[-1, 0, 1], 1, 4));
        let out = secant_step(&q3, &pt(&q3, &[7, 1, 0], 5, 2), &iv(&[1, 0, 0])).unwrap();
        assert_eq!(out.t, Integer::one());
        assert_eq!(out.v, iv(&[-1, -1, 0]));
        assert_eq!(
            secant_step(&q3, &pt(&q3, &[1, 0, 0], 1, 1), &iv(&[1, 0, 0])),
            Err(Error::DegenerateChord)
        );
        assert!(matches!(
            secant_step(&q3, &pt(&q3, &[3, 4, 5], 5, 4), &iv(&[5, 5, 5])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn rounding_ties() {
        let r = |a: i64, b: i64| round_half_toward_zero(&a.into(), &b.into());
        assert_eq!(r(5, 2), 2.into());
        assert_eq!(r(-5, 2), (-2).into());
        assert_eq!(r(7, 4), 2.into());
        assert_eq!(r(-7, 4), (-2).into());
        assert_eq!(r(1, 3), 0.into());
    }

    #[test]
    fn torus_examples() {
        let q3 = q3();
        let red = torus_reduce(&q3, &iv(&[21, 20, 0]), 29).unwrap();
        assert!(red.i > Integer::zero() && red.i < 29.into());
        assert!(red.t > Integer::zero() && red.t < 29.into());
        let p = RationalPoint::new(&q3, red.v.clone(), &red.i * &red.t, 1.into());
        assert!(p.is_ok());

        let red = torus_reduce(&q3, &iv(&[29, 0, 0]), 29).unwrap();
        assert_eq!((red.v, red.i, red.t), (iv(&[1, 0, 0]), 1.into(), 1.into()));

        assert!(matches!(torus_reduce(&q3, &iv(&[1, 0, 0]), 5), Err(Error::Precondition(_))));
        assert!(matches!(torus_reduce(&q3, &iv(&[2, 0, 0]), 4), Err(Error::Domain(_))));
    }

    #[test]
    fn bounds() {
        assert_eq!(torus_bound(&q3()).unwrap(), 27.into());
        assert_eq!(torus_bound(&g()).unwrap(), 27.into());
        assert_eq!(cube_side(&builtin(BuiltinForm::F)).unwrap(), 8.into());
    }

    #[test]
    fn descent_examples() {
        let q3 = q3();
        let tr = descend(&q3, &pt(&q3, &[3, 4, 5], 5, 4)).unwrap();
        assert!(tr.reached_integer());
        assert_eq!(q3.evaluate_int(&tr.terminal.v).unwrap(), 4.into());
        assert_eq!(tr.terminal.v, iv(&[-1, 0, 1]));

        let g = g();
        assert_eq!(
            g.evaluate(&qforms::scaled(&iv(&[5, 9, 12]), &10.into())).unwrap(),
            qforms::Rational::from_integer(7.into())
        );
        let tr = descend(&g, &pt(&g, &[5, 9, 12], 10, 7)).unwrap();
        assert!(tr.reached_integer());
        assert_eq!(g.evaluate_int(&tr.terminal.v).unwrap(), 7.into());

        let tr = descend(&q3, &pt(&q3, &[1, 0, 1], 1, 4)).unwrap();
        assert!(tr.steps.is_empty());
        assert_eq!(tr.terminal.v, iv(&[1, 0, 1]));

        assert!(matches!(
            RationalPoint::from_vector(&q3, iv(&[1, 0, 0]), 2.into()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn divide_by_4_examples() {
        assert_eq!(divide_by_4(&iv(&[2, 0, 2])).unwrap(), iv(&[1, 0, 1]));
        let w = divide_by_4(&iv(&[1, 0, 1])).unwrap();
        assert_eq!(q3().evaluate_int(&w).unwrap(), 1.into());
        assert!(q3().representations(&1.into()).unwrap().contains(&iv(&[1, 0, 0])));
        assert!(matches!(divide_by_4(&iv(&[1, 1, 0])), Err(Error::Precondition(_))));
        let w = divide_by_4_g(&iv(&[2, 2, 0])).unwrap();
        assert_eq!(g().evaluate_int(&w).unwrap(), 4.into());
    }

    #[test]
    fn reduce_3g_examples() {
        let r = |a: i64, b: i64, c: i64| reduce_3g(&a.into(), &b.into(), &c.into());
        let (x, y, z) = r(3, 3, 1).unwrap();
        assert_eq!(vec![x.clone(), y.clone(), z.clone()], iv(&[1, 1, 1]));
        assert_eq!(g().evaluate_int(&[x, y, z]).unwrap(), 7.into());
        let (x, y, z) = r(0, 3, 0).unwrap();
        assert_eq!(vec![x, y, z], iv(&[0, 0, 1]));
        assert!(matches!(r(1, 1, 1), Err(Error::Precondition(_))));
    }

    #[test]
    fn adc_examples() {
        assert!(adc_check(&q3(), &500.into()).unwrap().is_empty());
        assert!(adc_check(&g(), &500.into()).unwrap().is_empty());
        let four_x2 = QuadraticForm::diagonal(&[4]).unwrap();
        assert_eq!(adc_check(&four_x2, &10.into()).unwrap(), iv(&[1, 9]));
    }

    #[test]
    fn parametrized_points_hold() {
        let q3 = q3();
        let p = secant_parametrize(&q3, &iv(&[1, 0, 1]), &iv(&[2, -3, 5])).unwrap();
        assert!(p.holds(&q3));
        assert_eq!(p.m, 4.into());
    }
}

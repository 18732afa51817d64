//! Constructive primitive representations `F(v) = n` for every `n` in the
//! Hassett set `ℋ = {n ≥ 8 : n ≡ 0, 2 (mod 6)}`.
//!
//! Outside three small special cases the construction picks `u ∈ {1, −3}`,
//! represents `k = 8n − 57u²` by `G` with all coordinates odd and `≡ −u
//! (mod 4)`, and pulls the solution back through
//! `T(x, y, z, u) = 4(x − y − z, y, z) − u(1, 1, 1)`, using
//! `F(x/2, y, z, u) = (G(T(x, y, z, u)) + 57u²) / 8`.

use num_integer::Integer as _;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{precondition, Error, Result};
use crate::qforms::{builtin, is_primitive, to_int_vector, BuiltinForm, IntVector, Integer, Rational};

pub const SPECIAL_VECTORS: [(i64, [i64; 4]); 3] =
    [(24, [1, 0, -1, 0]), (42, [0, 1, -2, 1]), (60, [1, 3, -1, 0])];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    Special,
    UOne,
    UMinus3,
}

impl Branch {
    pub fn u(self) -> Option<i64> {
        match self {
            Branch::Special => None,
            Branch::UOne => Some(1),
            Branch::UMinus3 => Some(-3),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct KChecks {
    pub positive: bool,
    pub mod8: bool,
    pub mod3: bool,
    pub mod9: bool,
}

impl KChecks {
    pub fn all(&self) -> bool {
        self.positive && self.mod8 && self.mod3 && self.mod9
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HassettCertificate {
    #[serde(with = "crate::json::int")]
    pub n: Integer,
    pub branch: Branch,
    #[serde(default, with = "crate::json::opt_int")]
    pub u: Option<Integer>,
    #[serde(default, with = "crate::json::opt_int")]
    pub k: Option<Integer>,
    #[serde(default, with = "crate::json::opt_ints")]
    pub g: Option<IntVector>,
    #[serde(default, with = "crate::json::opt_ints")]
    pub xyz: Option<IntVector>,
    #[serde(with = "crate::json::ints")]
    pub v: IntVector,
    #[serde(default)]
    pub checks: Option<KChecks>,
    pub valid: bool,
}

pub fn in_hassett(n: &Integer) -> bool {
    *n >= Integer::from(8) && matches!(mod_small(n, 6), 0 | 2)
}

fn mod_small(n: &Integer, m: i64) -> i64 {
    n.mod_floor(&Integer::from(m)).to_i64().unwrap()
}

pub fn special_vector(n: &Integer) -> Option<IntVector> {
    let n = n.to_i64()?;
    SPECIAL_VECTORS
        .iter()
        .find(|(m, _)| *m == n)
        .map(|(_, v)| to_int_vector(v))
}

pub fn choose_branch(n: &Integer) -> Result<Branch> {
    if !in_hassett(n) {
        return Err(Error::Domain(format!("{n} is not in the Hassett set")));
    }
    Ok(if special_vector(n).is_some() {
        Branch::Special
    } else if mod_small(n, 18) != 6 {
        Branch::UOne
    } else {
        Branch::UMinus3
    })
}

pub fn k_value(n: &Integer, u: i64) -> Integer {
    Integer::from(8) * n - Integer::from(57 * u * u)
}

pub fn check_k_properties(k: &Integer) -> KChecks {
    KChecks {
        positive: k.is_positive(),
        mod8: mod_small(k, 8) == 7,
        mod3: matches!(mod_small(k, 3), 0 | 1),
        mod9: mod_small(k, 9) != 0,
    }
}

/// The targets `k` produced by the non-special branches, ascending, up to `limit`.
pub fn k_set(limit: &Integer) -> Vec<Integer> {
    let top = (limit + Integer::from(513)) / 8;
    let mut out = Vec::new();
    let mut n = Integer::from(8);
    while n <= top {
        if let Ok(branch) = choose_branch(&n) {
            if let Some(u) = branch.u() {
                let k = k_value(&n, u);
                if k <= *limit {
                    out.push(k);
                }
            }
        }
        n += 1;
    }
    out.sort();
    out.dedup();
    out
}

fn g_value(v: &[Integer]) -> Integer {
    &v[0] * &v[0] + Integer::from(3) * (&v[1] * &v[1] + &v[2] * &v[2])
}

fn check_triple(v: &[Integer]) -> Result<()> {
    if v.len() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, found: v.len() });
    }
    Ok(())
}

/// Makes every coordinate odd without changing `G`, for `G(x, y, z) ≡ 7 (mod 8)`.
pub fn parity_fix(v: &[Integer]) -> Result<IntVector> {
    check_triple(v)?;
    let value = g_value(v);
    if mod_small(&value, 8) != 7 {
        return precondition(format!("G{v:?} = {value} is not ≡ 7 (mod 8)"));
    }
    let (x, y, z) = (&v[0], &v[1], &v[2]);
    let out = if x.is_odd() {
        v.to_vec()
    } else if z.is_odd() {
        // y even here; X and Y then have opposite parity
        let (hx, hy) = (x / 2, y / 2);
        vec![&hx + Integer::from(3) * &hy, hx - hy, z.clone()]
    } else {
        let (hx, hz) = (x / 2, z / 2);
        vec![&hx + Integer::from(3) * &hz, y.clone(), hx - hz]
    };
    if g_value(&out) != value || !out.iter().all(|c| c.is_odd()) {
        return Err(Error::Invariant(format!("parity fix of {v:?} failed")));
    }
    Ok(out)
}

/// An all-odd `g` with `G(g) = k`.
pub fn odd_representation(k: &Integer) -> Result<IntVector> {
    if mod_small(k, 8) != 7 {
        return precondition(format!("{k} is not ≡ 7 (mod 8)"));
    }
    let g = builtin(BuiltinForm::G);
    let w = g
        .find_representation(k)?
        .ok_or_else(|| Error::Domain(format!("G does not represent {k}")))?;
    parity_fix(&w)
}

/// Flips signs so that every coordinate is `≡ −u (mod 4)`.
pub fn sign_normalize(g: &[Integer], u: i64) -> Result<IntVector> {
    check_triple(g)?;
    check_u(u)?;
    if g.iter().any(|c| c.is_even()) {
        return precondition("sign normalization needs odd coordinates");
    }
    let want = (-u).rem_euclid(4);
    Ok(g.iter()
        .map(|c| if mod_small(c, 4) == want { c.clone() } else { -c })
        .collect())
}

fn check_u(u: i64) -> Result<()> {
    if u == 1 || u == -3 {
        Ok(())
    } else {
        Err(Error::Domain(format!("u must be 1 or -3, got {u}")))
    }
}

pub fn apply_t(xyz: &[Integer], u: i64) -> Result<IntVector> {
    check_triple(xyz)?;
    let four = Integer::from(4);
    let ub = Integer::from(u);
    Ok(vec![
        &four * (&xyz[0] - &xyz[1] - &xyz[2]) - &ub,
        &four * &xyz[1] - &ub,
        &four * &xyz[2] - &ub,
    ])
}

/// The unique `(x, y, z)` with `T(x, y, z, u) = g`.
pub fn invert_t(g: &[Integer], u: i64) -> Result<IntVector> {
    check_triple(g)?;
    let four = Integer::from(4);
    let shifted: IntVector = g.iter().map(|c| c + u).collect();
    if shifted.iter().any(|c| !c.is_multiple_of(&four)) {
        return precondition(format!("{g:?} is not ≡ {} (mod 4) coordinatewise", (-u).rem_euclid(4)));
    }
    let y = &shifted[1] / &four;
    let z = &shifted[2] / &four;
    let x = &shifted[0] / &four + &y + &z;
    Ok(vec![x, y, z])
}

/// A verified primitive vector `v` with `F(v) = n`.
pub fn represent(n: &Integer) -> Result<HassettCertificate> {
    let branch = choose_branch(n)?;
    let mut cert = match branch.u() {
        None => HassettCertificate {
            n: n.clone(),
            branch,
            u: None,
            k: None,
            g: None,
            xyz: None,
            v: special_vector(n).expect("special branch has a vector"),
            checks: None,
            valid: false,
        },
        Some(u) => {
            let k = k_value(n, u);
            let checks = check_k_properties(&k);
            if !checks.all() {
                return Err(Error::Invariant(format!("k = {k} fails its congruence checks")));
            }
            let g = sign_normalize(&odd_representation(&k)?, u)?;
            let xyz = invert_t(&g, u)?;
            if xyz[0].is_odd() {
                return Err(Error::Invariant(format!("x = {} is odd for n = {n}", xyz[0])));
            }
            let v = vec![&xyz[0] / 2, xyz[1].clone(), xyz[2].clone(), Integer::from(u)];
            HassettCertificate {
                n: n.clone(),
                branch,
                u: Some(u.into()),
                k: Some(k),
                g: Some(g),
                xyz: Some(xyz),
                v,
                checks: Some(checks),
                valid: false,
            }
        }
    };
    cert.valid = verify_certificate(&cert);
    if !cert.valid {
        return Err(Error::Invariant(format!("certificate for {n} does not replay")));
    }
    Ok(cert)
}

/// Re-evaluates every stored relation from scratch.
pub fn verify_certificate(cert: &HassettCertificate) -> bool {
    let f = builtin(BuiltinForm::F);
    if cert.v.len() != 4 || !in_hassett(&cert.n) {
        return false;
    }
    let Ok(fv) = f.evaluate_int(&cert.v) else { return false };
    if fv != cert.n || !is_primitive(&cert.v) {
        return false;
    }
    match cert.branch {
        Branch::Special => {
            cert.u.is_none() && cert.k.is_none() && special_vector(&cert.n).as_ref() == Some(&cert.v)
        }
        branch => {
            let (Some(u), Some(k), Some(g), Some(xyz), Some(checks)) =
                (&cert.u, &cert.k, &cert.g, &cert.xyz, &cert.checks)
            else {
                return false;
            };
            let Some(ui) = u.to_i64() else { return false };
            if Some(ui) != branch.u() || choose_branch(&cert.n).ok() != Some(branch) {
                return false;
            }
            if g.len() != 3 || xyz.len() != 3 {
                return false;
            }
            let recomputed = check_k_properties(k);
            let want = (-ui).rem_euclid(4);
            let u2 = Integer::from(57 * ui * ui);
            *k == k_value(&cert.n, ui)
                && g_value(g) == *k
                && Integer::from(8) * &fv == g_value(g) + &u2
                && recomputed == *checks
                && checks.all()
                && g.iter().all(|c| mod_small(c, 4) == want)
                && apply_t(xyz, ui).ok().as_ref() == Some(g)
                && xyz[0].is_even()
                && cert.v[0] == &xyz[0] / 2
                && cert.v[1..3] == xyz[1..3]
                && cert.v[3] == *u
        }
    }
}

/// `F(x/2, y, z, u)`, an integer whose parity is that of `x·u`.
pub fn half_shift_value(x: &Integer, y: &Integer, z: &Integer, u: &Integer) -> Rational {
    let v = [
        Rational::new(x.clone(), 2.into()),
        Rational::from_integer(y.clone()),
        Rational::from_integer(z.clone()),
        Rational::from_integer(u.clone()),
    ];
    builtin(BuiltinForm::F).evaluate(&v).expect("dimension 4")
}

/// Certificates for every member of `ℋ` up to `limit`, with the first failure if any.
pub fn verify_range(limit: &Integer) -> Result<Vec<HassettCertificate>> {
    let mut out = Vec::new();
    let mut n = Integer::from(8);
    while n <= *limit {
        if in_hassett(&n) {
            out.push(represent(&n)?);
        }
        n += 1;
    }
    Ok(out)
}

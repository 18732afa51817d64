//! Four-plane configurations in ℙ⁵ and the cubics containing them.
//!
//! Planes are given by ideals of three linear forms in the coordinates
//! `(x, y, z, u, v, w)`; each plane is the projectivization of the
//! 3-dimensional kernel `Vᵢ` of its ideal. Dimensions of linear systems and
//! stabilizers are computed exactly over ℚ, and the linear-system rank is
//! computed twice: by restricting monomials to plane parametrizations and by
//! evaluating them at seeded points.

use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattices::{self, GramMatrix5, Incidence};
use crate::linalg::{self, RatMatrix};
use crate::qforms::Rational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const VARIABLES: [&str; 6] = ["x", "y", "z", "u", "v", "w"];
pub const CUBIC_MONOMIALS: usize = 56;
/// Evaluation points per plane for the second rank computation.
pub const SAMPLE_POINTS: usize = 20;
const SAMPLE_RANGE: i64 = 20;
const COEFF_RANGE: i64 = 9;

pub type Exponents = [u8; 6];
pub type LinearForm = [Rational; 6];

fn r(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

/// Degree-3 exponent vectors in six variables, descending lexicographic
/// order (`x³` first, `w³` last).
pub fn cubic_monomials() -> Vec<Exponents> {
    let mut out = Vec::with_capacity(CUBIC_MONOMIALS);
    fn fill(pos: usize, left: u8, cur: &mut Exponents, out: &mut Vec<Exponents>) {
        if pos == 5 {
            cur[5] = left;
            out.push(*cur);
            return;
        }
        for e in (0..=left).rev() {
            cur[pos] = e;
            fill(pos + 1, left - e, cur, out);
        }
    }
    fill(0, 3, &mut [0; 6], &mut out);
    out
}

pub fn monomial_name(e: &Exponents) -> String {
    let mut s = String::new();
    for (i, &k) in e.iter().enumerate() {
        for _ in 0..k {
            s.push_str(VARIABLES[i]);
        }
    }
    s
}

fn eval_monomial(e: &Exponents, p: &[Rational]) -> Rational {
    let mut acc = Rational::one();
    for (i, &k) in e.iter().enumerate() {
        for _ in 0..k {
            acc *= &p[i];
        }
    }
    acc
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneIdeal {
    pub forms: [LinearForm; 3],
}

impl PlaneIdeal {
    fn matrix(&self) -> RatMatrix {
        self.forms.iter().map(|f| f.to_vec()).collect()
    }

    pub fn rank(&self) -> usize {
        linalg::rank_rational(&self.matrix())
    }

    /// Reduced-echelon kernel basis: the plane's underlying 3-space.
    pub fn subspace(&self) -> Vec<Vec<Rational>> {
        linalg::kernel(&self.matrix(), 6)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneConfig {
    pub a: Rational,
    pub b: Rational,
    pub ideals: [PlaneIdeal; 4],
    pub subspaces: Vec<Vec<Vec<Rational>>>,
}

fn form(terms: &[(usize, Rational)]) -> LinearForm {
    let mut f: LinearForm = Default::default();
    for (i, c) in terms {
        f[*i] += c;
    }
    f
}

/// `(x,y,z)`, `(x,y,u)`, `(x,z,v)` and `(v − b·y, u − a·z, w)`.
pub fn standard_config(a: &Rational, b: &Rational) -> Result<PlaneConfig> {
    let (x, y, z, u, v, w) = (0, 1, 2, 3, 4, 5);
    let one = r(1);
    let e = |i: usize| form(&[(i, one.clone())]);
    let ideals = [
        PlaneIdeal { forms: [e(x), e(y), e(z)] },
        PlaneIdeal { forms: [e(x), e(y), e(u)] },
        PlaneIdeal { forms: [e(x), e(z), e(v)] },
        PlaneIdeal {
            forms: [
                form(&[(v, one.clone()), (y, -b.clone())]),
                form(&[(u, one.clone()), (z, -a.clone())]),
                e(w),
            ],
        },
    ];
    let subspaces: Vec<_> = ideals.iter().map(PlaneIdeal::subspace).collect();
    if ideals.iter().any(|i| i.rank() != 3) || subspaces.iter().any(|s| s.len() != 3) {
        return Err(Error::Invariant("plane ideal without rank 3".into()));
    }
    Ok(PlaneConfig { a: a.clone(), b: b.clone(), ideals, subspaces })
}

impl PlaneConfig {
    fn check_index(i: usize) -> Result<()> {
        if (1..=4).contains(&i) {
            Ok(())
        } else {
            Err(Error::Domain(format!("plane index {i} outside 1..=4")))
        }
    }

    /// `dim(Vᵢ ∩ Vⱼ)` for planes numbered from 1.
    pub fn intersection_dim(&self, i: usize, j: usize) -> Result<usize> {
        Self::check_index(i)?;
        Self::check_index(j)?;
        let mut m = self.ideals[i - 1].matrix();
        m.extend(self.ideals[j - 1].matrix());
        Ok(6 - linalg::rank_rational(&m))
    }

    pub fn intersection_profile(&self, i: usize, j: usize) -> Result<Incidence> {
        if i >= j {
            return Err(Error::Domain(format!("need i < j, got {i}, {j}")));
        }
        Ok(match self.intersection_dim(i, j)? {
            0 => Incidence::Empty,
            1 => Incidence::Point,
            2 => Incidence::Line,
            d => return Err(Error::Invariant(format!("planes {i}, {j} meet in dimension {d}"))),
        })
    }

    pub fn profiles(&self) -> Result<Vec<((usize, usize), Incidence)>> {
        let mut out = Vec::new();
        for i in 1..=4 {
            for j in i + 1..=4 {
                out.push(((i, j), self.intersection_profile(i, j)?));
            }
        }
        Ok(out)
    }

    pub fn gram_from_geometry(&self) -> Result<GramMatrix5> {
        let profiles = self.profiles()?;
        let lookup = |i: usize, j: usize| {
            profiles
                .iter()
                .find(|((a, b), _)| (*a, *b) == (i.min(j), i.max(j)))
                .map(|(_, p)| *p)
                .expect("all pairs computed")
        };
        lattices::gram_from_incidences(lookup)
    }

    pub fn alpha_beta(&self) -> Result<(u8, u8)> {
        let m = self.gram_from_geometry()?;
        Ok((m.alpha(), m.beta()))
    }

    /// Point of `Vᵢ` with the given coordinates in its kernel basis.
    fn point(&self, plane: usize, s: &[Rational]) -> Vec<Rational> {
        let basis = &self.subspaces[plane];
        (0..6)
            .map(|c| (0..3).map(|k| &s[k] * &basis[k][c]).sum())
            .collect()
    }

    /// Rows expressing "the restriction to each plane vanishes": for each
    /// plane, one row per cubic monomial in the plane's three parameters.
    pub fn restriction_matrix(&self) -> RatMatrix {
        let monos = cubic_monomials();
        let mut rows = Vec::new();
        for plane in 0..4 {
            let columns: Vec<HashMap<[u8; 3], Rational>> =
                monos.iter().map(|e| self.restrict_monomial(plane, e)).collect();
            let mut keys: Vec<[u8; 3]> = columns.iter().flat_map(|c| c.keys().copied()).collect();
            keys.sort_unstable_by(|a, b| b.cmp(a));
            keys.dedup();
            for key in keys {
                rows.push(
                    columns
                        .iter()
                        .map(|c| c.get(&key).cloned().unwrap_or_else(Rational::zero))
                        .collect(),
                );
            }
        }
        rows
    }

    /// A monomial with each coordinate replaced by its linear form in the
    /// plane parameters, expanded.
    fn restrict_monomial(&self, plane: usize, e: &Exponents) -> HashMap<[u8; 3], Rational> {
        let basis = &self.subspaces[plane];
        let mut poly: HashMap<[u8; 3], Rational> = HashMap::from([([0, 0, 0], r(1))]);
        for (c, &k) in e.iter().enumerate() {
            for _ in 0..k {
                let mut next: HashMap<[u8; 3], Rational> = HashMap::new();
                for (mono, coeff) in &poly {
                    for (s, vec) in basis.iter().enumerate() {
                        if vec[c].is_zero() {
                            continue;
                        }
                        let mut m = *mono;
                        m[s] += 1;
                        *next.entry(m).or_insert_with(Rational::zero) += coeff * &vec[c];
                    }
                }
                next.retain(|_, v| !v.is_zero());
                poly = next;
            }
        }
        poly
    }

    pub fn cubics_through(&self) -> Vec<CubicPoly> {
        linalg::kernel(&self.restriction_matrix(), CUBIC_MONOMIALS)
            .into_iter()
            .map(|coeffs| CubicPoly { coeffs })
            .collect()
    }

    /// Seeded points on each plane, coordinates drawn from `[−20, 20]` in
    /// the kernel basis.
    pub fn sample_points(&self, seed: u64, per_plane: usize) -> Vec<Vec<Vec<Rational>>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..4)
            .map(|plane| {
                (0..per_plane)
                    .map(|_| {
                        let s: Vec<Rational> =
                            (0..3).map(|_| r(rng.gen_range(-SAMPLE_RANGE..=SAMPLE_RANGE))).collect();
                        self.point(plane, &s)
                    })
                    .collect()
            })
            .collect()
    }

    /// Rank of the conditions via monomial evaluations at sample points,
    /// by integer Bareiss elimination.
    pub fn evaluation_rank(&self, seed: u64) -> usize {
        let monos = cubic_monomials();
        let rows: RatMatrix = self
            .sample_points(seed, SAMPLE_POINTS)
            .into_iter()
            .flatten()
            .map(|p| monos.iter().map(|e| eval_monomial(e, &p)).collect())
            .collect();
        linalg::bareiss_rank(&linalg::integer_rows(&rows))
    }

    pub fn kernel_rank(&self) -> usize {
        linalg::rank_rational(&self.restriction_matrix())
    }

    /// Projective dimension of the linear system of cubics through the planes.
    pub fn linear_system_dim(&self) -> Result<usize> {
        let basis = self.cubics_through().len();
        let eval = CUBIC_MONOMIALS - self.evaluation_rank(0);
        if basis != eval {
            return Err(Error::Invariant(format!(
                "kernel route gives {basis} cubics, evaluation route {eval}"
            )));
        }
        basis
            .checked_sub(1)
            .ok_or_else(|| Error::Invariant("no cubic contains the configuration".into()))
    }

    /// `(stabilizer, orbit)` dimensions for the action of `PGL(6)`.
    ///
    /// The stabilizer in `GL(6)` is `{A : A·Vᵢ ⊆ Vᵢ}`, cut out by
    /// `ℓ(A·b) = 0` for every generator `ℓ` of `Iᵢ` and basis vector `b` of `Vᵢ`.
    pub fn stabilizer_dim(&self) -> (usize, usize) {
        let mut rows: RatMatrix = Vec::new();
        for (ideal, basis) in self.ideals.iter().zip(&self.subspaces) {
            for l in &ideal.forms {
                for b in basis {
                    // unknown A[r][c] at index 6r + c
                    let mut row = vec![Rational::zero(); 36];
                    for rr in 0..6 {
                        for c in 0..6 {
                            row[6 * rr + c] = &l[rr] * &b[c];
                        }
                    }
                    rows.push(row);
                }
            }
        }
        let stab = 36 - linalg::rank_rational(&rows);
        (stab, 35 - (stab - 1))
    }

    pub fn random_cubic(&self, seed: u64) -> Result<CubicPoly> {
        let basis = self.cubics_through();
        if basis.is_empty() {
            return Err(Error::Domain("no cubic contains the configuration".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut coeffs = vec![Rational::zero(); CUBIC_MONOMIALS];
        for b in &basis {
            let c = r(rng.gen_range(-COEFF_RANGE..=COEFF_RANGE));
            for (acc, x) in coeffs.iter_mut().zip(&b.coeffs) {
                *acc += &c * x;
            }
        }
        Ok(CubicPoly { coeffs })
    }

    /// True when `cubic` restricts to the zero polynomial on every plane.
    pub fn contains_planes(&self, cubic: &CubicPoly) -> bool {
        let monos = cubic_monomials();
        (0..4).all(|plane| {
            let mut total: HashMap<[u8; 3], Rational> = HashMap::new();
            for (e, c) in monos.iter().zip(&cubic.coeffs) {
                if c.is_zero() {
                    continue;
                }
                for (m, x) in self.restrict_monomial(plane, e) {
                    *total.entry(m).or_insert_with(Rational::zero) += c * x;
                }
            }
            total.values().all(Zero::is_zero)
        })
    }

    pub fn to_json(&self) -> ConfigJson {
        ConfigJson {
            a: crate::json::rational_string(&self.a),
            b: crate::json::rational_string(&self.b),
            ideals: self
                .ideals
                .iter()
                .map(|i| {
                    i.forms
                        .iter()
                        .map(|f| f.iter().map(crate::json::rational_string).collect())
                        .collect()
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicPoly {
    /// Coefficients in the order of [`cubic_monomials`].
    pub coeffs: Vec<Rational>,
}

impl CubicPoly {
    pub fn evaluate(&self, p: &[Rational]) -> Rational {
        cubic_monomials()
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| c * eval_monomial(e, p))
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn to_json(&self) -> CubicJson {
        CubicJson {
            monomials: cubic_monomials(),
            coeffs: self.coeffs.iter().map(crate::json::rational_string).collect(),
        }
    }

    pub fn from_json(j: &CubicJson) -> Result<Self> {
        if j.monomials != cubic_monomials() || j.coeffs.len() != CUBIC_MONOMIALS {
            return Err(Error::Domain("cubic must list the 56 monomials in standard order".into()));
        }
        let coeffs = j
            .coeffs
            .iter()
            .map(|s| crate::json::parse_rational(s).ok_or_else(|| Error::Domain(format!("bad coefficient {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(CubicPoly { coeffs })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubicJson {
    pub monomials: Vec<Exponents>,
    pub coeffs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigJson {
    pub a: String,
    pub b: String,
    pub ideals: Vec<Vec<Vec<String>>>,
}

/// A random cubic together with the configuration it was drawn for.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubicFile {
    pub config: ConfigJson,
    pub seed: u64,
    #[serde(flatten)]
    pub cubic: CubicJson,
}

impl CubicFile {
    /// Rebuilds the configuration from `a`, `b` and checks the stored
    /// ideals and the vanishing of the cubic on all four planes.
    pub fn verify(&self) -> Result<bool> {
        let parse = |s: &str| {
            crate::json::parse_rational(s).ok_or_else(|| Error::Domain(format!("bad parameter {s:?}")))
        };
        let config = standard_config(&parse(&self.config.a)?, &parse(&self.config.b)?)?;
        if config.to_json() != self.config {
            return Ok(false);
        }
        let cubic = CubicPoly::from_json(&self.cubic)?;
        Ok(!cubic.is_zero() && config.contains_planes(&cubic))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Profile {
    pub i: usize,
    pub j: usize,
    pub incidence: Incidence,
    pub dim: usize,
}

/// Computed dimensions for one configuration, alongside the reference
/// formulas `23 + δ_{α0} + δ_{β0}` (fiber), `28 − δ_{α0} − δ_{β0}` (orbit)
/// and `51` (total).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionReport {
    pub a: String,
    pub b: String,
    pub alpha: u8,
    pub beta: u8,
    pub profiles: Vec<Profile>,
    pub gram_matches: bool,
    pub basis_size: usize,
    pub kernel_rank: usize,
    pub evaluation_rank: usize,
    pub ranks_agree: bool,
    pub basis_vanishes: bool,
    pub fiber_dim: usize,
    pub stabilizer_dim: usize,
    pub orbit_dim: usize,
    pub total_dim: usize,
    pub reference_fiber: usize,
    pub reference_orbit: usize,
    pub reference_total: usize,
    pub fiber_matches: bool,
    pub orbit_matches: bool,
    pub total_matches: bool,
}

impl DimensionReport {
    /// The internally cross-validated checks; reference comparisons excluded.
    pub fn consistent(&self) -> bool {
        self.gram_matches && self.ranks_agree && self.basis_vanishes
    }
}

pub fn dimension_report(config: &PlaneConfig) -> Result<DimensionReport> {
    let profiles = config
        .profiles()?
        .into_iter()
        .map(|((i, j), incidence)| {
            Ok(Profile { i, j, incidence, dim: config.intersection_dim(i, j)? })
        })
        .collect::<Result<Vec<_>>>()?;
    let (alpha, beta) = config.alpha_beta()?;
    let gram_matches = config.gram_from_geometry()? == lattices::gram_m(alpha, beta)?;
    let basis = config.cubics_through();
    let kernel_rank = config.kernel_rank();
    let evaluation_rank = config.evaluation_rank(0);
    let basis_vanishes = basis.iter().all(|c| config.contains_planes(c));
    let fiber_dim = basis.len().saturating_sub(1);
    let (stabilizer_dim, orbit_dim) = config.stabilizer_dim();
    let (d_a, d_b) = (usize::from(alpha == 0), usize::from(beta == 0));
    let reference_fiber = 23 + d_a + d_b;
    let reference_orbit = 28 - d_a - d_b;
    Ok(DimensionReport {
        a: crate::json::rational_string(&config.a),
        b: crate::json::rational_string(&config.b),
        alpha,
        beta,
        profiles,
        gram_matches,
        basis_size: basis.len(),
        kernel_rank,
        evaluation_rank,
        ranks_agree: kernel_rank == evaluation_rank && kernel_rank + basis.len() == CUBIC_MONOMIALS,
        basis_vanishes,
        fiber_dim,
        stabilizer_dim,
        orbit_dim,
        total_dim: fiber_dim + orbit_dim,
        reference_fiber,
        reference_orbit,
        reference_total: 51,
        fiber_matches: fiber_dim == reference_fiber,
        orbit_matches: orbit_dim == reference_orbit,
        total_matches: fiber_dim + orbit_dim == 51,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(a: i64, b: i64) -> PlaneConfig {
        standard_config(&r(a), &r(b)).unwrap()
    }

    #[test]
    fn monomial_order() {
        let m = cubic_monomials();
        assert_eq!(m.len(), 56);
        assert_eq!(m[0], [3, 0, 0, 0, 0, 0]);
        assert_eq!(m[1], [2, 1, 0, 0, 0, 0]);
        assert_eq!(m[55], [0, 0, 0, 0, 0, 3]);
        assert!(m.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(monomial_name(&m[1]), "xxy");
    }

    #[test]
    fn config_examples() {
        let c = cfg(0, 0);
        let e = |i: usize| form(&[(i, r(1))]);
        assert_eq!(c.ideals[3].forms, [e(4), e(3), e(5)]);

        let c = cfg(1, 1);
        let mut expect: Vec<Vec<Rational>> = [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 1, 0], [0, 0, 1, 1, 0, 0]]
            .iter()
            .map(|row| row.iter().map(|&x| r(x)).collect())
            .collect();
        let mut got = c.subspaces[3].clone();
        got.sort();
        expect.sort();
        assert_eq!(got, expect);
        assert!(c.ideals.iter().all(|i| i.rank() == 3));
    }

    #[test]
    fn profile_examples() {
        let c = cfg(1, 1);
        assert_eq!(c.intersection_profile(1, 2).unwrap(), Incidence::Line);
        assert_eq!(c.intersection_profile(2, 4).unwrap(), Incidence::Empty);
        assert_eq!(cfg(0, 5).intersection_profile(2, 4).unwrap(), Incidence::Point);
        assert!(c.intersection_profile(0, 2).is_err());
        assert!(c.intersection_profile(3, 2).is_err());
    }

    #[test]
    fn alpha_beta_examples() {
        assert_eq!(cfg(1, 1).alpha_beta().unwrap(), (0, 0));
        assert_eq!(cfg(0, 0).alpha_beta().unwrap(), (1, 1));
        assert_eq!(cfg(1, 0).alpha_beta().unwrap(), (0, 1));
        assert_eq!(cfg(0, 1).gram_from_geometry().unwrap(), lattices::gram_m(1, 0).unwrap());
        assert_eq!(cfg(1, 1).gram_from_geometry().unwrap(), lattices::gram_m(0, 0).unwrap());
    }

    // Frozen from an independent sympy computation of the same kernels.
    #[test]
    fn dimensions() {
        for ((a, b), basis, stab) in [((1, 1), 24, 8), ((1, 0), 25, 9), ((0, 1), 25, 9), ((0, 0), 26, 10)] {
            let c = cfg(a, b);
            assert_eq!(c.cubics_through().len(), basis, "({a},{b})");
            assert_eq!(c.linear_system_dim().unwrap(), basis - 1);
            assert_eq!(c.stabilizer_dim(), (stab, 36 - stab));
        }
    }

    #[test]
    fn basis_vanishes_at_samples() {
        let c = cfg(1, 1);
        let basis = c.cubics_through();
        for plane in c.sample_points(7, 20) {
            for p in plane {
                assert!(basis.iter().all(|f| f.evaluate(&p).is_zero()));
            }
        }
    }

    #[test]
    fn random_cubic_examples() {
        let c = cfg(1, 1);
        let f = c.random_cubic(1).unwrap();
        assert_eq!(f, c.random_cubic(1).unwrap());
        assert!(!f.is_zero());
        assert!(c.contains_planes(&f));
        for plane in c.sample_points(3, 20) {
            assert!(plane.iter().all(|p| f.evaluate(p).is_zero()));
        }
        let mut g = f.clone();
        g.coeffs[0] += r(1);
        assert!(!c.contains_planes(&g));
    }

    #[test]
    fn report_flags() {
        let rep = dimension_report(&cfg(1, 1)).unwrap();
        assert!(rep.consistent());
        assert_eq!((rep.fiber_dim, rep.orbit_dim, rep.total_dim), (23, 28, 51));
        assert_eq!((rep.reference_fiber, rep.reference_orbit), (25, 26));
        assert!(!rep.fiber_matches && !rep.orbit_matches && rep.total_matches);
        let rep = dimension_report(&cfg(0, 0)).unwrap();
        assert_eq!((rep.fiber_dim, rep.orbit_dim), (25, 26));
        assert_eq!(rep.profiles.iter().map(|p| p.dim).collect::<Vec<_>>(), vec![2, 2, 0, 1, 1, 1]);
    }

    #[test]
    fn cubic_file_round_trip() {
        let c = cfg(1, 0);
        let file = CubicFile { config: c.to_json(), seed: 4, cubic: c.random_cubic(4).unwrap().to_json() };
        let s = serde_json::to_string(&file).unwrap();
        let back: CubicFile = serde_json::from_str(&s).unwrap();
        assert!(back.verify().unwrap());
        let mut bad = back.clone();
        bad.cubic.coeffs[55] = "1".into();
        assert!(!bad.verify().unwrap());
    }
}

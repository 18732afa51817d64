//! The rank-5 lattices `M_{α,β}` spanned by `𝔬 = h²` and four plane classes,
//! the substitutions relating the four `(α, β)` variants, and the rank-4
//! form obtained as the discriminant of `⟨𝔬, w⟩`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, IntMatrix};
use crate::qforms::{IntVector, Integer, QuadraticForm};

/// How two planes in a cubic fourfold meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Incidence {
    Empty,
    Point,
    Line,
}

impl fmt::Display for Incidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Incidence::Empty => "empty",
            Incidence::Point => "point",
            Incidence::Line => "line",
        })
    }
}

impl FromStr for Incidence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "empty" => Ok(Incidence::Empty),
            "point" => Ok(Incidence::Point),
            "line" => Ok(Incidence::Line),
            other => Err(Error::Domain(format!("unknown incidence `{other}`"))),
        }
    }
}

/// Intersection number of two distinct plane classes.
pub fn voisin_value(profile: Incidence) -> i64 {
    match profile {
        Incidence::Empty => 0,
        Incidence::Point => 1,
        Incidence::Line => -1,
    }
}

/// Basis index of `𝔬`; plane `Pᵢ` sits at index `i`.
pub const HYPERPLANE: usize = 0;
pub const BASIS_LABELS: [&str; 5] = ["o", "P1", "P2", "P3", "P4"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramMatrix5 {
    entries: [[i64; 5]; 5],
    alpha: u8,
    beta: u8,
}

impl GramMatrix5 {
    pub fn entries(&self) -> &[[i64; 5]; 5] {
        &self.entries
    }

    pub fn alpha(&self) -> u8 {
        self.alpha
    }

    pub fn beta(&self) -> u8 {
        self.beta
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn as_int_matrix(&self) -> IntMatrix {
        self.entries
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    pub fn pairing(&self, v: &[Integer], w: &[Integer]) -> Result<Integer> {
        for x in [v, w] {
            if x.len() != 5 {
                return Err(Error::DimensionMismatch { expected: 5, found: x.len() });
            }
        }
        let mut acc = Integer::from(0);
        for i in 0..5 {
            for j in 0..5 {
                acc += &v[i] * &w[j] * self.entries[i][j];
            }
        }
        Ok(acc)
    }

    pub fn is_positive_definite(&self) -> bool {
        linalg::leading_minors(&self.as_int_matrix())
            .iter()
            .all(|d| d > &BigInt::from(0))
    }
}

impl fmt::Display for GramMatrix5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:>4}", "")?;
        for l in BASIS_LABELS {
            write!(f, "{l:>4}")?;
        }
        writeln!(f)?;
        for (label, row) in BASIS_LABELS.iter().zip(&self.entries) {
            write!(f, "{label:>4}")?;
            for x in row {
                write!(f, "{x:>4}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn check_flag(name: &str, x: u8) -> Result<()> {
    if x <= 1 {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} must be 0 or 1, got {x}")))
    }
}

pub fn gram_m(alpha: u8, beta: u8) -> Result<GramMatrix5> {
    check_flag("alpha", alpha)?;
    check_flag("beta", beta)?;
    let (a, b) = (alpha as i64, beta as i64);
    Ok(GramMatrix5 {
        entries: [
            [3, 1, 1, 1, 1],
            [1, 3, -1, -1, 0],
            [1, -1, 3, 1, a],
            [1, -1, 1, 3, b],
            [1, 0, a, b, 3],
        ],
        alpha,
        beta,
    })
}

/// Builds a Gram matrix from the six pairwise incidences of the planes,
/// keyed `(i, j)` with `1 ≤ i < j ≤ 4`. The incidences must match the
/// profile line/line/empty/point on `(1,2)`, `(1,3)`, `(1,4)`, `(2,3)`.
pub fn gram_from_incidences(profile: impl Fn(usize, usize) -> Incidence) -> Result<GramMatrix5> {
    let required = [
        ((1, 2), Incidence::Line),
        ((1, 3), Incidence::Line),
        ((1, 4), Incidence::Empty),
        ((2, 3), Incidence::Point),
    ];
    for ((i, j), want) in required {
        let got = profile(i, j);
        if got != want {
            return Err(Error::Domain(format!(
                "P{i} ∩ P{j} is {got}, the configuration requires {want}"
            )));
        }
    }
    let flag = |i, j| match profile(i, j) {
        Incidence::Empty => Ok(0u8),
        Incidence::Point => Ok(1u8),
        Incidence::Line => Err(Error::Domain(format!("P{i} ∩ P{j} is a line"))),
    };
    let alpha = flag(2, 4)?;
    let beta = flag(3, 4)?;
    let mut entries = [[3i64; 5]; 5];
    for i in 1..5 {
        entries[0][i] = 1;
        entries[i][0] = 1;
        for j in i + 1..5 {
            let x = voisin_value(profile(i, j));
            entries[i][j] = x;
            entries[j][i] = x;
        }
    }
    Ok(GramMatrix5 { entries, alpha, beta })
}

fn unit(i: usize) -> IntVector {
    let mut v = vec![Integer::from(0); 5];
    v[i] = Integer::one();
    v
}

/// Coordinates of the residual plane class `𝔬 − Pᵢ − Pⱼ` for two planes
/// meeting in a line.
pub fn residual_class(m: &GramMatrix5, i: usize, j: usize) -> Result<IntVector> {
    if !(1..=4).contains(&i) || !(1..=4).contains(&j) || i == j {
        return Err(Error::Domain(format!("plane indices must be distinct in 1..=4, got {i}, {j}")));
    }
    if m.entry(i, j) != -1 {
        return Err(Error::Domain(format!(
            "P{i}·P{j} = {}, residual class needs planes meeting in a line",
            m.entry(i, j)
        )));
    }
    let mut r = unit(HYPERPLANE);
    r[i] -= 1;
    r[j] -= 1;
    Ok(r)
}

/// A unimodular `U` with `Uᵀ · M_source · U = M_target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisChange {
    pub matrix: IntMatrix,
    pub source: (u8, u8),
    pub target: (u8, u8),
}

impl BasisChange {
    pub fn check(&self) -> Result<bool> {
        let src = gram_m(self.source.0, self.source.1)?.as_int_matrix();
        let tgt = gram_m(self.target.0, self.target.1)?.as_int_matrix();
        let u = &self.matrix;
        let congruent = linalg::mat_mul(&linalg::mat_mul(&linalg::transpose(u), &src), u) == tgt;
        Ok(congruent && linalg::is_unimodular(u))
    }

    pub fn determinant(&self) -> Integer {
        linalg::determinant(&self.matrix)
    }
}

/// Replaces the basis vector of plane `k` by `𝔬 − P1 − Pk` (column `k` of U).
fn residual_substitution(k: usize) -> IntMatrix {
    let mut u = linalg::identity(5);
    u[HYPERPLANE][k] = Integer::one();
    u[1][k] = Integer::from(-1);
    u[k][k] = Integer::from(-1);
    u
}

/// Composes `b′ = 𝔬 − a − b` (flips α) and then `c′ = 𝔬 − a − c` (flips β)
/// as needed to move from `source` to `target`.
pub fn isometry_to(source: (u8, u8), target: (u8, u8)) -> Result<BasisChange> {
    gram_m(source.0, source.1)?;
    gram_m(target.0, target.1)?;
    let mut u = linalg::identity(5);
    if source.0 != target.0 {
        u = linalg::mat_mul(&u, &residual_substitution(2));
    }
    if source.1 != target.1 {
        u = linalg::mat_mul(&u, &residual_substitution(3));
    }
    let change = BasisChange { matrix: u, source, target };
    if !change.check()? {
        return Err(Error::Invariant(format!(
            "substitution does not carry M{source:?} to M{target:?}"
        )));
    }
    Ok(change)
}

/// `(𝔬·𝔬)(w·w) − (𝔬·w)²`, the discriminant of `⟨𝔬, w⟩`.
pub fn disc_pair(m: &GramMatrix5, w: &[Integer]) -> Result<Integer> {
    let o = unit(HYPERPLANE);
    let oo = m.pairing(&o, &o)?;
    let ww = m.pairing(w, w)?;
    let ow = m.pairing(&o, w)?;
    Ok(oo * ww - &ow * &ow)
}

/// The rank-4 form `v ↦ disc⟨𝔬, Σ vᵢPᵢ⟩` on `M_{0,0}`.
pub fn induced_form_f() -> QuadraticForm {
    let m = gram_m(0, 0).expect("valid flags");
    let o = HYPERPLANE;
    let rows: Vec<Vec<i64>> = (1..5)
        .map(|i| {
            (1..5)
                .map(|j| m.entry(o, o) * m.entry(i, j) - m.entry(o, i) * m.entry(o, j))
                .collect()
        })
        .collect();
    QuadraticForm::from_gram(&rows)
        .expect("symmetric by construction")
        .with_name("disc<o,.>")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qforms::{builtin, to_int_vector, BuiltinForm};

    const FLAGS: [(u8, u8); 4] = [(0, 0), (1, 0), (0, 1), (1, 1)];

    #[test]
    fn gram_entries() {
        assert_eq!(gram_m(0, 0).unwrap().entries()[4], [1, 0, 0, 0, 3]);
        assert_eq!(gram_m(1, 1).unwrap().entry(2, 4), 1);
        let m = gram_m(0, 1).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(m.entry(i, j), m.entry(j, i));
            }
        }
        assert!(gram_m(2, 0).is_err());
        for (a, b) in FLAGS {
            assert!(gram_m(a, b).unwrap().is_positive_definite());
        }
    }

    #[test]
    fn voisin_dictionary() {
        assert_eq!(voisin_value(Incidence::Empty), 0);
        assert_eq!(voisin_value(Incidence::Point), 1);
        assert_eq!(voisin_value(Incidence::Line), -1);
    }

    #[test]
    fn residual_classes() {
        let m = gram_m(0, 0).unwrap();
        let r = residual_class(&m, 1, 2).unwrap();
        assert_eq!(r, to_int_vector(&[1, -1, -1, 0, 0]));
        assert_eq!(m.pairing(&r, &r).unwrap(), 3.into());
        assert_eq!(m.pairing(&r, &unit(HYPERPLANE)).unwrap(), 1.into());
        assert_eq!(m.pairing(&r, &unit(1)).unwrap(), (-1).into());
        assert_eq!(m.pairing(&r, &unit(2)).unwrap(), (-1).into());
        let sum: IntVector = (0..5).map(|k| &r[k] + &unit(1)[k] + &unit(2)[k]).collect();
        assert_eq!(sum, unit(HYPERPLANE));
        assert!(matches!(residual_class(&m, 2, 3), Err(Error::Domain(_))));
    }

    #[test]
    fn isometries() {
        let id = isometry_to((0, 0), (0, 0)).unwrap();
        assert_eq!(id.matrix, linalg::identity(5));
        let flip = isometry_to((0, 0), (1, 0)).unwrap();
        let col2: IntVector = flip.matrix.iter().map(|r| r[2].clone()).collect();
        assert_eq!(col2, to_int_vector(&[1, -1, -1, 0, 0]));
        for s in FLAGS {
            for t in FLAGS {
                let u = isometry_to(s, t).unwrap();
                assert!(u.check().unwrap());
                assert_eq!(num_traits::Signed::abs(&u.determinant()), Integer::one());
            }
        }
    }

    #[test]
    fn discriminants() {
        let m = gram_m(0, 0).unwrap();
        assert_eq!(disc_pair(&m, &unit(2)).unwrap(), 8.into());
        assert_eq!(disc_pair(&m, &unit(HYPERPLANE)).unwrap(), 0.into());
        assert_eq!(disc_pair(&m, &to_int_vector(&[0, 1, 1, 0, 0])).unwrap(), 8.into());
        assert!(disc_pair(&m, &to_int_vector(&[1, 0])).is_err());
    }

    #[test]
    fn induced_form_is_f() {
        let f = induced_form_f();
        assert_eq!(f, builtin(BuiltinForm::F));
        assert_eq!(f.evaluate_int(&to_int_vector(&[1, 0, 0, 0])).unwrap(), 8.into());
        assert_eq!(f.evaluate_int(&to_int_vector(&[1, 0, -1, 0])).unwrap(), 24.into());
        assert_eq!(f.evaluate_int(&to_int_vector(&[0, 0, 0, 0])).unwrap(), 0.into());
    }
}

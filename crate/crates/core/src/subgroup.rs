//! Translation subgroup, the splitting into translations times the finite
//! group generated by `s2` and `s3`, hexagon tiling, and the even subgroup.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{AffinePermutation, Generator};
use crate::lattice::{Isometry, Vertex};

/// Exponents of `t1^e1 · t2^e2`. The third translation is `t3 = t1⁻¹ t2⁻¹`.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize,
)]
pub struct TranslationVector {
    pub e1: i64,
    pub e2: i64,
}

impl TranslationVector {
    pub const fn new(e1: i64, e2: i64) -> Self {
        TranslationVector { e1, e2 }
    }

    /// The generator `t_i` in exponent form.
    pub fn generator(i: i64) -> Result<Self> {
        match i {
            1 => Ok(Self::new(1, 0)),
            2 => Ok(Self::new(0, 1)),
            3 => Ok(Self::new(-1, -1)),
            _ => Err(Error::BadGeneratorIndex(i)),
        }
    }

    /// Displacement of the vertex lattice: `t1` moves by `(-1, 2)` (up two
    /// rows), `t2` by `(2, -1)`.
    pub fn lattice_vector(&self) -> Vertex {
        Vertex::new(-self.e1 + 2 * self.e2, 2 * self.e1 - self.e2)
    }

    /// Inverse of [`TranslationVector::lattice_vector`]; `None` off the sublattice.
    pub fn from_lattice_vector(v: Vertex) -> Option<Self> {
        let (x, y) = (v.p + 2 * v.q, 2 * v.p + v.q);
        if x % 3 != 0 || y % 3 != 0 {
            return None;
        }
        Some(Self::new(x / 3, y / 3))
    }

    /// Window of `t1^e1 t2^e2`: the identity window shifted by
    /// `3·(e1, e2 - e1, -e2)`.
    pub fn to_perm(&self) -> AffinePermutation {
        AffinePermutation::new(-1 + 3 * self.e1, 3 * (self.e2 - self.e1), 1 - 3 * self.e2)
            .expect("translation windows are valid")
    }

    pub fn add(&self, o: &TranslationVector) -> TranslationVector {
        Self::new(self.e1 + o.e1, self.e2 + o.e2)
    }

    pub fn neg(&self) -> TranslationVector {
        Self::new(-self.e1, -self.e2)
    }
}

impl fmt::Display for TranslationVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t1^{} t2^{}", self.e1, self.e2)
    }
}

impl FromStr for TranslationVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut e = [None, None];
        for tok in s.split_whitespace() {
            let (name, exp) = tok.split_once('^').ok_or_else(|| {
                Error::parse(s, 0, format!("expected 't1^n' or 't2^n', got {tok:?}"))
            })?;
            let exp = exp.trim_matches(|c| c == '{' || c == '}');
            let k: i64 = exp
                .parse()
                .map_err(|_| Error::parse(s, 0, format!("bad exponent {exp:?}")))?;
            match name {
                "t1" => e[0] = Some(k),
                "t2" => e[1] = Some(k),
                _ => return Err(Error::parse(s, 0, format!("unknown translation {name:?}"))),
            }
        }
        Ok(Self::new(e[0].unwrap_or(0), e[1].unwrap_or(0)))
    }
}

/// Element of the finite subgroup generated by `s2` and `s3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FiniteS3 {
    E,
    S2,
    S3,
    S2S3,
    S3S2,
    S2S3S2,
}

impl FiniteS3 {
    pub const ALL: [FiniteS3; 6] = [
        FiniteS3::E,
        FiniteS3::S2,
        FiniteS3::S3,
        FiniteS3::S2S3,
        FiniteS3::S3S2,
        FiniteS3::S2S3S2,
    ];

    pub fn to_perm(self) -> AffinePermutation {
        let w = match self {
            FiniteS3::E => [-1, 0, 1],
            FiniteS3::S2 => [-1, 1, 0],
            FiniteS3::S3 => [-2, 0, 2],
            FiniteS3::S2S3 => [-3, 1, 2],
            FiniteS3::S3S2 => [-2, 2, 0],
            FiniteS3::S2S3S2 => [-3, 2, 1],
        };
        AffinePermutation::new(w[0], w[1], w[2]).unwrap()
    }

    pub fn from_perm(f: &AffinePermutation) -> Option<FiniteS3> {
        Self::ALL.into_iter().find(|s| s.to_perm() == *f)
    }

    pub fn inverse(self) -> FiniteS3 {
        Self::from_perm(&self.to_perm().inverse()).expect("closed under inverses")
    }
}

impl std::ops::Mul for FiniteS3 {
    type Output = FiniteS3;

    fn mul(self, other: FiniteS3) -> FiniteS3 {
        Self::from_perm(&(self.to_perm() * other.to_perm())).expect("closed under products")
    }
}

impl fmt::Display for FiniteS3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FiniteS3::E => "e",
            FiniteS3::S2 => "s2",
            FiniteS3::S3 => "s3",
            FiniteS3::S2S3 => "s2s3",
            FiniteS3::S3S2 => "s3s2",
            FiniteS3::S2S3S2 => "s2s3s2",
        })
    }
}

/// A tile of the hexagon tiling: the left coset `t·S3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HexagonId {
    pub base: TranslationVector,
}

impl HexagonId {
    /// The vertex shared by all six triangles: the image of E.
    pub fn center(&self) -> Vertex {
        Vertex::THIRD + self.base.lattice_vector()
    }
}

/// `t1 = s2 s3 s2 s1`, `t2 = s3 s1 s3 s2`, `t3 = s1 s2 s1 s3`.
pub fn translation_generator(i: i64) -> Result<AffinePermutation> {
    use Generator::*;
    let word: [Generator; 4] = match i {
        1 => [S2, S3, S2, S1],
        2 => [S3, S1, S3, S2],
        3 => [S1, S2, S1, S3],
        _ => return Err(Error::BadGeneratorIndex(i)),
    };
    Ok(word
        .iter()
        .fold(AffinePermutation::IDENTITY, |acc, &g| acc.right_mult(g)))
}

pub fn is_translation(f: &AffinePermutation) -> bool {
    Isometry::of_perm(f).is_translation()
}

pub fn translation_coords(f: &AffinePermutation) -> Result<TranslationVector> {
    let iso = Isometry::of_perm(f);
    if !iso.is_translation() {
        return Err(Error::NotATranslation(f.to_string()));
    }
    TranslationVector::from_lattice_vector(iso.translation_part())
        .ok_or_else(|| Error::NotATranslation(f.to_string()))
}

/// The unique `(t, σ)` with `f = t·σ`.
pub fn decompose(f: &AffinePermutation) -> (TranslationVector, FiniteS3) {
    for sigma in FiniteS3::ALL {
        let t = *f * sigma.to_perm().inverse();
        if let Ok(tv) = translation_coords(&t) {
            return (tv, sigma);
        }
    }
    unreachable!("every element is a translation times an element of S3")
}

pub fn hexagon_of(f: &AffinePermutation) -> HexagonId {
    HexagonId {
        base: decompose(f).0,
    }
}

pub fn coset_mod_t(f: &AffinePermutation) -> FiniteS3 {
    // f = t·σ with T normal, so f ≡ σ modulo T
    decompose(f).1
}

/// `s_i · t · s_i⁻¹` in translation coordinates.
pub fn conjugate_translation(g: Generator, t: &TranslationVector) -> TranslationVector {
    let s = AffinePermutation::generator(g);
    let conj = s * t.to_perm() * s.inverse();
    translation_coords(&conj).expect("translations form a normal subgroup")
}

/// Conjugation by `s1`, an automorphism of the even subgroup.
pub fn psi(n: &AffinePermutation) -> AffinePermutation {
    let s1 = AffinePermutation::generator(Generator::S1);
    s1 * *n * s1
}

/// Writes `f = s1^ε · n` with `n` even.
pub fn split_even(f: &AffinePermutation) -> (bool, AffinePermutation) {
    if f.is_even() {
        (false, *f)
    } else {
        (true, AffinePermutation::generator(Generator::S1) * *f)
    }
}

/// Product in `Z2 ⋉_ψ N`: `(ε1, n1)(ε2, n2) = (ε1 + ε2, ψ^ε2(n1)·n2)`.
pub fn semidirect_mul(
    x: (bool, AffinePermutation),
    y: (bool, AffinePermutation),
) -> (bool, AffinePermutation) {
    let twisted = if y.0 { psi(&x.1) } else { x.1 };
    (x.0 ^ y.0, twisted * y.1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{ElementType, Word};

    fn perm(s: &str) -> AffinePermutation {
        AffinePermutation::from_word(&s.parse::<Word>().unwrap())
    }

    #[test]
    fn translation_generators() {
        let t1 = translation_generator(1).unwrap();
        assert_eq!(t1.window(), [2, -3, 1]);
        let t2 = translation_generator(2).unwrap();
        let t3 = translation_generator(3).unwrap();
        for prod in [
            t1 * t2 * t3,
            t1 * t3 * t2,
            t2 * t1 * t3,
            t2 * t3 * t1,
            t3 * t1 * t2,
            t3 * t2 * t1,
        ] {
            assert!(prod.is_identity());
        }
        for t in [t1, t2, t3] {
            assert_eq!(t.classify(), ElementType::Translation);
        }
        assert!(translation_generator(0).is_err());
        for i in 1..=3 {
            assert_eq!(
                TranslationVector::generator(i).unwrap().to_perm(),
                translation_generator(i).unwrap()
            );
        }
    }

    #[test]
    fn is_translation_examples() {
        assert!(is_translation(&AffinePermutation::IDENTITY));
        assert!(!is_translation(&perm("s1")));
        assert!(is_translation(&perm("s2 s3 s2 s1")));
    }

    #[test]
    fn translation_coords_examples() {
        assert_eq!(
            translation_coords(&AffinePermutation::IDENTITY).unwrap(),
            TranslationVector::new(0, 0)
        );
        let t1 = translation_generator(1).unwrap();
        assert_eq!(
            translation_coords(&t1).unwrap(),
            TranslationVector::new(1, 0)
        );
        let t3 = translation_generator(3).unwrap();
        assert_eq!(
            translation_coords(&t3.inverse()).unwrap(),
            TranslationVector::new(1, 1)
        );
        assert!(matches!(
            translation_coords(&perm("s1")),
            Err(Error::NotATranslation(_))
        ));
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(
            decompose(&perm("s2")),
            (TranslationVector::new(0, 0), FiniteS3::S2)
        );
        let t1 = translation_generator(1).unwrap();
        assert_eq!(decompose(&t1), (TranslationVector::new(1, 0), FiniteS3::E));
        let f = t1 * perm("s2 s3");
        let (tv, sigma) = decompose(&f);
        assert_eq!((tv, sigma), (TranslationVector::new(1, 0), FiniteS3::S2S3));
        assert_eq!(tv.to_perm() * sigma.to_perm(), f);
    }

    #[test]
    fn hexagon_examples() {
        for s in FiniteS3::ALL {
            assert_eq!(hexagon_of(&s.to_perm()).base, TranslationVector::new(0, 0));
        }
        let t1 = translation_generator(1).unwrap();
        assert_eq!(hexagon_of(&t1).base, TranslationVector::new(1, 0));
        assert_eq!(
            hexagon_of(&(t1 * perm("s3"))).base,
            TranslationVector::new(1, 0)
        );
        let fundamental = HexagonId {
            base: TranslationVector::default(),
        };
        assert_eq!(fundamental.center(), Vertex::new(0, 1));
    }

    #[test]
    fn coset_examples() {
        let t1 = translation_generator(1).unwrap();
        assert_eq!(coset_mod_t(&t1), FiniteS3::E);
        assert_eq!(coset_mod_t(&perm("s2")), FiniteS3::S2);
        assert_eq!(coset_mod_t(&(perm("s2") * perm("s3"))), FiniteS3::S2S3);
    }

    #[test]
    fn conjugation_relations() {
        let t1 = TranslationVector::new(1, 0);
        assert_eq!(
            conjugate_translation(Generator::S1, &t1),
            TranslationVector::new(-1, 0)
        );
        assert_eq!(
            conjugate_translation(Generator::S2, &t1),
            TranslationVector::new(1, 1)
        );
        assert_eq!(
            conjugate_translation(Generator::S3, &t1),
            TranslationVector::new(0, -1)
        );
    }

    #[test]
    fn translation_vector_text() {
        let tv = TranslationVector::new(2, -1);
        assert_eq!(tv.to_string(), "t1^2 t2^-1");
        assert_eq!(tv.to_string().parse::<TranslationVector>().unwrap(), tv);
        assert_eq!(
            "t1^{3} t2^{0}".parse::<TranslationVector>().unwrap(),
            TranslationVector::new(3, 0)
        );
        assert!("t3^1".parse::<TranslationVector>().is_err());
    }

    #[test]
    fn s3_table_is_a_group() {
        for a in FiniteS3::ALL {
            assert_eq!(a * a.inverse(), FiniteS3::E);
            for b in FiniteS3::ALL {
                for c in FiniteS3::ALL {
                    assert_eq!((a * b) * c, a * (b * c));
                }
            }
        }
    }
}

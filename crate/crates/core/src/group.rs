//! The affine Coxeter group of type Ã2, realized as affine permutations.
//!
//! An affine permutation is a bijection `f` of the integers with
//! `f(n + 3) = f(n) + 3` and `f(-1) + f(0) + f(1) = 0`. It is determined by
//! its window `[f(-1), f(0), f(1)]`. Products are composition of maps with
//! the right factor applied first, so `f * g` is `n ↦ f(g(n))`.
//!
//! Each element names exactly one triangle of the Tonnetz: the image of the
//! reference triangle (the C major triad) under the corresponding product of
//! edge reflections.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One of the three Coxeter generators `s1`, `s2`, `s3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Generator {
    S1,
    S2,
    S3,
}

impl Generator {
    pub const ALL: [Generator; 3] = [Generator::S1, Generator::S2, Generator::S3];

    pub fn from_index(i: i64) -> Result<Self> {
        match i {
            1 => Ok(Generator::S1),
            2 => Ok(Generator::S2),
            3 => Ok(Generator::S3),
            _ => Err(Error::BadGeneratorIndex(i)),
        }
    }

    pub fn index(self) -> u8 {
        match self {
            Generator::S1 => 1,
            Generator::S2 => 2,
            Generator::S3 => 3,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}", self.index())
    }
}

/// A finite, not necessarily reduced, word in the generators.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word(pub Vec<Generator>);

impl Word {
    pub fn new(letters: Vec<Generator>) -> Self {
        Word(letters)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for (k, g) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts tokens separated by whitespace or dots (`"s2 s3 s2"`,
    /// `"s2.s3.s2"`), concatenated letters (`"s2s3s2"`), and `"e"` for the
    /// empty word.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() || trimmed == "e" {
            return Ok(Word::default());
        }
        let mut letters = Vec::new();
        let bytes = s.as_bytes();
        let mut pos = 0;
        while pos < bytes.len() {
            match bytes[pos] {
                b' ' | b'\t' | b'\n' | b'\r' | b'.' => pos += 1,
                b's' => {
                    let digit = bytes.get(pos + 1).copied();
                    let g = match digit {
                        Some(b'1') => Generator::S1,
                        Some(b'2') => Generator::S2,
                        Some(b'3') => Generator::S3,
                        _ => {
                            return Err(Error::parse(
                                s,
                                pos + 1,
                                "expected generator index 1, 2 or 3",
                            ))
                        }
                    };
                    if matches!(bytes.get(pos + 2), Some(b'0'..=b'9')) {
                        return Err(Error::parse(s, pos + 2, "generator index out of range"));
                    }
                    letters.push(g);
                    pos += 2;
                }
                _ => return Err(Error::parse(s, pos, "expected 's1', 's2' or 's3'")),
            }
        }
        Ok(Word(letters))
    }
}

/// Order of a group element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(k) => write!(f, "{k}"),
            Order::Infinite => f.write_str("infinite"),
        }
    }
}

/// Geometric type of the isometry an element induces on the Tonnetz.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ElementType {
    Identity,
    Reflection,
    Rotation,
    Translation,
    GlideReflection,
}

impl fmt::Display for ElementType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ElementType::Identity => "identity",
            ElementType::Reflection => "reflection",
            ElementType::Rotation => "rotation",
            ElementType::Translation => "translation",
            ElementType::GlideReflection => "glide reflection",
        })
    }
}

/// Coordinates of a triangle center along the three reflection axes.
///
/// Units are half edge lengths along the `s1` axis, so the triangle of `s3`
/// sits one unit to the right of the reference triangle (`c1 = -1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TriangleCoords {
    pub c1: i64,
    pub c2: i64,
    pub c3: i64,
}

impl TriangleCoords {
    pub fn new(c1: i64, c2: i64, c3: i64) -> Self {
        TriangleCoords { c1, c2, c3 }
    }

    pub fn as_array(&self) -> [i64; 3] {
        [self.c1, self.c2, self.c3]
    }

    /// Recovers the affine permutation whose triangle has this center.
    pub fn to_perm(&self) -> Result<AffinePermutation> {
        let c = self.as_array();
        let not_center = || Error::NotATriangleCenter(self.c1, self.c2, self.c3);
        if c.iter().sum::<i64>() != 0 {
            return Err(not_center());
        }
        let mut window: [Option<i64>; 3] = [None; 3];
        for (i, &ci) in c.iter().enumerate() {
            let residue = (i as i64 + 1) % 3;
            let offset = (residue - ci + 1).rem_euclid(3) - 1;
            // offset -1 -> slot a, 0 -> slot b, +1 -> slot c
            let slot = (offset + 1) as usize;
            if window[slot].is_some() {
                return Err(not_center());
            }
            window[slot] = Some(ci + offset);
        }
        match window {
            [Some(a), Some(b), Some(c)] => AffinePermutation::new(a, b, c),
            _ => Err(not_center()),
        }
    }
}

impl fmt::Display for TriangleCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.c1, self.c2, self.c3)
    }
}

/// An element of the affine symmetric group, stored as its window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "[i64; 3]", into = "[i64; 3]")]
pub struct AffinePermutation {
    a: i64,
    b: i64,
    c: i64,
}

impl TryFrom<[i64; 3]> for AffinePermutation {
    type Error = Error;

    fn try_from(w: [i64; 3]) -> Result<Self> {
        AffinePermutation::new(w[0], w[1], w[2])
    }
}

impl From<AffinePermutation> for [i64; 3] {
    fn from(f: AffinePermutation) -> Self {
        f.window()
    }
}

impl AffinePermutation {
    pub const IDENTITY: AffinePermutation = AffinePermutation { a: -1, b: 0, c: 1 };

    pub fn new(a: i64, b: i64, c: i64) -> Result<Self> {
        let (ra, rb, rc) = (a.rem_euclid(3), b.rem_euclid(3), c.rem_euclid(3));
        if a + b + c != 0 || ra == rb || rb == rc || ra == rc {
            return Err(Error::InvalidWindow(a, b, c));
        }
        Ok(AffinePermutation { a, b, c })
    }

    pub fn identity() -> Self {
        Self::IDENTITY
    }

    pub fn generator(g: Generator) -> Self {
        match g {
            Generator::S1 => AffinePermutation { a: 0, b: -1, c: 1 },
            Generator::S2 => AffinePermutation { a: -1, b: 1, c: 0 },
            Generator::S3 => AffinePermutation { a: -2, b: 0, c: 2 },
        }
    }

    pub fn window(&self) -> [i64; 3] {
        [self.a, self.b, self.c]
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    /// Value at an arbitrary integer via `f(n + 3) = f(n) + 3`.
    pub fn eval(&self, n: i64) -> i64 {
        let r = (n + 1).rem_euclid(3) - 1;
        let q = (n - r) / 3;
        self.window()[(r + 1) as usize] + 3 * q
    }

    /// `n ↦ self(other(n))`.
    pub fn compose(&self, other: &AffinePermutation) -> AffinePermutation {
        AffinePermutation {
            a: self.eval(other.a),
            b: self.eval(other.b),
            c: self.eval(other.c),
        }
    }

    /// Right multiplication by a generator, by the window rule
    /// `[b,a,c]`, `[a,c,b]`, `[c-3,b,a+3]`.
    pub fn right_mult(&self, g: Generator) -> AffinePermutation {
        let (a, b, c) = (self.a, self.b, self.c);
        match g {
            Generator::S1 => AffinePermutation { a: b, b: a, c },
            Generator::S2 => AffinePermutation { a, b: c, c: b },
            Generator::S3 => AffinePermutation {
                a: c - 3,
                b,
                c: a + 3,
            },
        }
    }

    pub fn left_mult(&self, g: Generator) -> AffinePermutation {
        Self::generator(g).compose(self)
    }

    pub fn inverse(&self) -> AffinePermutation {
        let mut out = [0i64; 3];
        for (slot, m) in (-1i64..=1).enumerate() {
            // the unique window position r with f(r) ≡ m (mod 3)
            let (r, fr) = (-1i64..=1)
                .map(|r| (r, self.eval(r)))
                .find(|&(_, fr)| (fr - m).rem_euclid(3) == 0)
                .expect("window entries cover all residues");
            out[slot] = r + (m - fr);
        }
        AffinePermutation {
            a: out[0],
            b: out[1],
            c: out[2],
        }
    }

    pub fn pow(&self, k: i64) -> AffinePermutation {
        let base = if k < 0 { self.inverse() } else { *self };
        (0..k.unsigned_abs()).fold(Self::IDENTITY, |acc, _| acc.compose(&base))
    }

    pub fn from_word(word: &Word) -> AffinePermutation {
        word.letters()
            .iter()
            .fold(Self::IDENTITY, |acc, &g| acc.right_mult(g))
    }

    /// Generators whose right multiplication shortens the element.
    pub fn right_descents(&self) -> Vec<Generator> {
        let mut out = Vec::with_capacity(2);
        if self.a > self.b {
            out.push(Generator::S1);
        }
        if self.b > self.c {
            out.push(Generator::S2);
        }
        if self.c > self.a + 3 {
            out.push(Generator::S3);
        }
        out
    }

    /// Canonical reduced word: the smallest-index right descent is stripped
    /// at every step, so it becomes the last letter.
    pub fn reduce(&self) -> Word {
        let mut f = *self;
        let mut stripped = Vec::new();
        while let Some(&g) = f.right_descents().first() {
            stripped.push(g);
            f = f.right_mult(g);
        }
        stripped.reverse();
        Word(stripped)
    }

    pub fn length(&self) -> usize {
        let mut f = *self;
        let mut n = 0;
        while let Some(&g) = f.right_descents().first() {
            f = f.right_mult(g);
            n += 1;
        }
        n
    }

    /// Search stops at 6; the finite orders occurring in this group are 1, 2 and 3.
    pub fn order(&self) -> Order {
        let mut power = *self;
        for k in 1..=6u32 {
            if power.is_identity() {
                return Order::Finite(k);
            }
            power = power.compose(self);
        }
        Order::Infinite
    }

    /// Parity of the permutation the window induces on residues mod 3.
    pub fn is_even(&self) -> bool {
        let pos = |x: i64| (x + 1).rem_euclid(3);
        let p = [pos(self.a), pos(self.b), pos(self.c)];
        let inversions = (0..3)
            .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count();
        inversions % 2 == 0
    }

    pub fn classify(&self) -> ElementType {
        if self.is_identity() {
            return ElementType::Identity;
        }
        match self.order() {
            Order::Finite(2) => ElementType::Reflection,
            Order::Finite(3) => ElementType::Rotation,
            Order::Finite(k) => unreachable!("no element of order {k}"),
            Order::Infinite => {
                if self.is_even() && crate::subgroup::is_translation(self) {
                    ElementType::Translation
                } else {
                    ElementType::GlideReflection
                }
            }
        }
    }

    /// Axis coordinates of the triangle center: for each `i`, the window
    /// entry congruent to `i` mod 3, shifted by +1, 0 or -1 according to
    /// whether it sits in the first, middle or last slot.
    pub fn center_coords(&self) -> TriangleCoords {
        let coord = |i: i64| -> i64 {
            let r = i % 3;
            if (self.a - r).rem_euclid(3) == 0 {
                self.a + 1
            } else if (self.b - r).rem_euclid(3) == 0 {
                self.b
            } else {
                self.c - 1
            }
        };
        TriangleCoords::new(coord(1), coord(2), coord(3))
    }

    /// The distance formula stated for the number of reflections: the sum of
    /// the positive center coordinates. This does not always agree with
    /// [`AffinePermutation::length`]; both values are reported.
    pub fn corollary_distance(&self) -> u64 {
        self.center_coords()
            .as_array()
            .iter()
            .filter(|&&c| c > 0)
            .map(|&c| c as u64)
            .sum()
    }
}

impl Mul for AffinePermutation {
    type Output = AffinePermutation;

    fn mul(self, rhs: AffinePermutation) -> AffinePermutation {
        self.compose(&rhs)
    }
}

impl fmt::Display for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.a, self.b, self.c)
    }
}

impl FromStr for AffinePermutation {
    type Err = Error;

    /// Parses `"[a,b,c]"` with optional spaces; `−` (U+2212) is accepted as a
    /// minus sign.
    fn from_str(s: &str) -> Result<Self> {
        let normalized: String = s.replace('\u{2212}', "-");
        let t = normalized.trim();
        let inner = t
            .strip_prefix('[')
            .ok_or_else(|| Error::parse(s, 0, "window must start with '['"))?
            .strip_suffix(']')
            .ok_or_else(|| Error::parse(s, s.len(), "window must end with ']'"))?;
        let parts: Vec<&str> = inner.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::parse(s, 1, "window needs exactly three entries"));
        }
        let mut w = [0i64; 3];
        for (k, part) in parts.iter().enumerate() {
            w[k] = part
                .trim()
                .parse()
                .map_err(|_| Error::parse(s, 1, format!("entry {} is not an integer", k + 1)))?;
        }
        AffinePermutation::new(w[0], w[1], w[2])
    }
}

/// All elements of length at most `radius`, ordered by length and then by
/// discovery through right multiplication by s1, s2, s3.
pub fn ball(radius: usize) -> Vec<AffinePermutation> {
    let mut out = vec![AffinePermutation::IDENTITY];
    let mut seen = std::collections::HashSet::from([AffinePermutation::IDENTITY]);
    let mut layer = vec![AffinePermutation::IDENTITY];
    for _ in 0..radius {
        let mut next = Vec::new();
        for f in &layer {
            for g in Generator::ALL {
                let h = f.right_mult(g);
                if seen.insert(h) {
                    next.push(h);
                }
            }
        }
        out.extend_from_slice(&next);
        layer = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(a: i64, b: i64, c: i64) -> AffinePermutation {
        AffinePermutation::new(a, b, c).unwrap()
    }

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    /// Independent route: `f(n)` by walking `n` back into the window one
    /// period at a time.
    fn eval_by_steps(f: &AffinePermutation, n: i64) -> i64 {
        let mut m = n;
        let mut shift = 0;
        while m > 1 {
            m -= 3;
            shift += 3;
        }
        while m < -1 {
            m += 3;
            shift -= 3;
        }
        f.window()[(m + 1) as usize] + shift
    }

    #[test]
    fn identity_and_generators() {
        assert_eq!(AffinePermutation::identity().window(), [-1, 0, 1]);
        assert_eq!(
            AffinePermutation::generator(Generator::S1).window(),
            [0, -1, 1]
        );
        assert_eq!(
            AffinePermutation::generator(Generator::S2).window(),
            [-1, 1, 0]
        );
        assert_eq!(
            AffinePermutation::generator(Generator::S3).window(),
            [-2, 0, 2]
        );
        assert_eq!(Generator::from_index(4), Err(Error::BadGeneratorIndex(4)));
        assert_eq!(Generator::from_index(0), Err(Error::BadGeneratorIndex(0)));
        let s2 = AffinePermutation::generator(Generator::S2);
        assert_eq!(AffinePermutation::identity() * s2, s2);
        assert_eq!(
            AffinePermutation::identity().classify(),
            ElementType::Identity
        );
    }

    #[test]
    fn window_validation() {
        assert!(AffinePermutation::new(0, 0, 0).is_err());
        assert!(AffinePermutation::new(-1, 0, 2).is_err());
        assert!(AffinePermutation::new(3, 0, -3).is_err());
        assert!("[-3, 1, 2]".parse::<AffinePermutation>().is_ok());
        assert!("[\u{2212}3,1,2]".parse::<AffinePermutation>().is_ok());
        assert!("[-3,1]".parse::<AffinePermutation>().is_err());
        assert!("-3,1,2".parse::<AffinePermutation>().is_err());
    }

    #[test]
    fn eval_examples() {
        assert_eq!(w(-3, 1, 2).eval(2), 0);
        assert_eq!(w(0, -1, 1).eval(-4), -3);
        for n in -20..20 {
            assert_eq!(AffinePermutation::IDENTITY.eval(n), n);
            let f = w(-3, 2, 1);
            assert_eq!(f.eval(n), eval_by_steps(&f, n));
        }
    }

    #[test]
    fn compose_examples() {
        let s = AffinePermutation::generator;
        assert_eq!(s(Generator::S2) * s(Generator::S1), w(1, -1, 0));
        assert_eq!(s(Generator::S2) * s(Generator::S3), w(-3, 1, 2));
        assert_eq!(w(-3, 1, 2) * w(-2, 2, 0), AffinePermutation::IDENTITY);
    }

    #[test]
    fn right_mult_examples() {
        assert_eq!(w(-1, 1, 0).right_mult(Generator::S1), w(1, -1, 0));
        assert_eq!(w(-2, 0, 2).right_mult(Generator::S2), w(-2, 2, 0));
        assert_eq!(
            AffinePermutation::IDENTITY.right_mult(Generator::S3),
            w(-2, 0, 2)
        );
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(w(-3, 1, 2).inverse(), w(-2, 2, 0));
        assert_eq!(w(0, -1, 1).inverse(), w(0, -1, 1));
        assert_eq!(
            AffinePermutation::IDENTITY.inverse(),
            AffinePermutation::IDENTITY
        );
    }

    #[test]
    fn from_word_examples() {
        assert_eq!(AffinePermutation::from_word(&word("s2 s1")), w(1, -1, 0));
        assert_eq!(
            AffinePermutation::from_word(&word("")),
            AffinePermutation::IDENTITY
        );
        assert_eq!(AffinePermutation::from_word(&word("s2 s3 s2")), w(-3, 2, 1));
    }

    #[test]
    fn word_parsing() {
        assert_eq!(word("s2.s3.s2"), word("s2 s3 s2"));
        assert_eq!(word("s2s3s2"), word("s2 s3 s2"));
        assert_eq!(word("e"), Word::default());
        assert_eq!(word("s2 s3 s2").to_string(), "s2 s3 s2");
        assert!("s4".parse::<Word>().is_err());
        assert!("s12".parse::<Word>().is_err());
        assert!("t1".parse::<Word>().is_err());
    }

    #[test]
    fn descents_examples() {
        assert!(AffinePermutation::IDENTITY.right_descents().is_empty());
        assert_eq!(w(0, -1, 1).right_descents(), vec![Generator::S1]);
        assert_eq!(
            w(-3, 2, 1).right_descents(),
            vec![Generator::S2, Generator::S3]
        );
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(AffinePermutation::IDENTITY.reduce(), Word::default());
        assert_eq!(w(1, -1, 0).reduce(), word("s2 s1"));
        assert_eq!(w(-3, 2, 1).reduce(), word("s2 s3 s2"));
    }

    #[test]
    fn length_examples() {
        assert_eq!(AffinePermutation::IDENTITY.length(), 0);
        assert_eq!(w(-2, 0, 2).length(), 1);
        assert_eq!(w(-3, 2, 1).length(), 3);
    }

    #[test]
    fn order_examples() {
        let s = AffinePermutation::generator;
        assert_eq!(s(Generator::S1).order(), Order::Finite(2));
        assert_eq!(
            (s(Generator::S2) * s(Generator::S3)).order(),
            Order::Finite(3)
        );
        assert_eq!(w(2, -3, 1).order(), Order::Infinite);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(w(-2, 0, 2).classify(), ElementType::Reflection);
        assert_eq!(w(0, -2, 2).classify(), ElementType::Rotation);
        let glide = AffinePermutation::from_word(&word("s3 s1 s2"));
        // its square is not the identity
        assert_ne!(glide * glide, AffinePermutation::IDENTITY);
        assert_eq!(glide.classify(), ElementType::GlideReflection);
        assert_eq!(w(2, -3, 1).classify(), ElementType::Translation);
    }

    #[test]
    fn parity_examples() {
        assert!(AffinePermutation::IDENTITY.is_even());
        assert!(!AffinePermutation::generator(Generator::S1).is_even());
        assert!(w(1, -1, 0).is_even());
    }

    #[test]
    fn center_coords_examples() {
        assert_eq!(
            AffinePermutation::IDENTITY.center_coords(),
            TriangleCoords::new(0, 0, 0)
        );
        assert_eq!(w(-3, 2, 1).center_coords(), TriangleCoords::new(0, 2, -2));
        // every triangle in the column with a = -2 has c1 = -1
        for f in [w(-2, 0, 2), w(-2, 2, 0), w(-2, -1, 3)] {
            assert_eq!(f.center_coords().c1, -1);
        }
    }

    #[test]
    fn triangle_to_perm_examples() {
        assert_eq!(
            TriangleCoords::new(0, -1, 1).to_perm().unwrap(),
            w(0, -1, 1)
        );
        assert_eq!(
            TriangleCoords::new(0, 0, 0).to_perm().unwrap(),
            AffinePermutation::IDENTITY
        );
        assert_eq!(
            TriangleCoords::new(1, 1, -2).to_perm().unwrap(),
            w(-3, 1, 2)
        );
        assert!(TriangleCoords::new(1, 0, 0).to_perm().is_err());
        // each entry already has the right residue, so all offsets collide on slot b
        assert!(TriangleCoords::new(1, -1, 0).to_perm().is_err());
        assert!(TriangleCoords::new(1, 2, -3).to_perm().is_err());
    }

    #[test]
    fn corollary_distance_examples() {
        assert_eq!(AffinePermutation::IDENTITY.corollary_distance(), 0);
        assert_eq!(
            AffinePermutation::generator(Generator::S1).corollary_distance(),
            1
        );
        assert_eq!(w(1, -1, 0).corollary_distance(), 2);
        // the formula undercounts s2 s3 s2
        assert_eq!(w(-3, 2, 1).corollary_distance(), 2);
        assert_eq!(w(-3, 2, 1).length(), 3);
    }

    #[test]
    fn ball_layer_sizes() {
        let b = ball(6);
        let mut counts = [0usize; 7];
        for f in &b {
            counts[f.length()] += 1;
        }
        assert_eq!(counts, [1, 3, 6, 9, 12, 15, 18]);
    }
}

//! Riemann's Schritt-Wechsel group, the point reflection group and its comma
//! quotient.
//!
//! Schritte form a free abelian group on the Quintschritt `Q` and the
//! Terzschritt `Z`; a Wechsel is a Schritt followed by the Seitenwechsel `W`.
//! Conjugation by `W` inverts Schritte.
//!
//! The point reflection group is generated by the half-turns `π1, π2, π3`
//! about the midpoints of the edges C–G, C–E and E–G of the reference
//! triangle. Every element has the normal form `(π3π1)^a (π1π2)^b π1^flip`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::Order;
use crate::lattice::{Isometry, Orientation, Triangle, Vertex};

/// `Q^quint Z^terz`, followed by the Seitenwechsel when `wechsel` is set.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize,
)]
pub struct RElement {
    pub wechsel: bool,
    pub quint: i64,
    pub terz: i64,
}

impl RElement {
    pub const IDENTITY: RElement = RElement {
        wechsel: false,
        quint: 0,
        terz: 0,
    };

    pub const fn schritt(quint: i64, terz: i64) -> Self {
        RElement {
            wechsel: false,
            quint,
            terz,
        }
    }

    pub const fn wechsel(quint: i64, terz: i64) -> Self {
        RElement {
            wechsel: true,
            quint,
            terz,
        }
    }

    pub const fn quintschritt() -> Self {
        Self::schritt(1, 0)
    }

    pub const fn terzschritt() -> Self {
        Self::schritt(0, 1)
    }

    pub const fn seitenwechsel() -> Self {
        Self::wechsel(0, 0)
    }

    /// Semidirect product law: `(t' w^ε')(t w^ε) = t'·φ^ε'(t)·w^(ε'+ε)` with
    /// `φ(t) = t⁻¹`. In particular `(t'w)(tw) = t't⁻¹`.
    pub fn compose(&self, other: &RElement) -> RElement {
        let sign = if self.wechsel { -1 } else { 1 };
        RElement {
            wechsel: self.wechsel ^ other.wechsel,
            quint: self.quint + sign * other.quint,
            terz: self.terz + sign * other.terz,
        }
    }

    pub fn inverse(&self) -> RElement {
        if self.wechsel {
            *self
        } else {
            Self::schritt(-self.quint, -self.terz)
        }
    }

    pub fn order(&self) -> Order {
        let mut power = *self;
        for k in 1..=6 {
            if power == Self::IDENTITY {
                return Order::Finite(k);
            }
            power = power.compose(self);
        }
        Order::Infinite
    }

    /// Left action on triads, realized as right multiplication in the
    /// point reflection group. Major triads move by `(quint, terz)` in the
    /// lattice under a Schritt while minor triads move the opposite way.
    pub fn act(&self, t: &Triangle) -> Triangle {
        let x = PElement::of_triangle(t);
        x.compose(&r_to_p(self)).triangle()
    }
}

impl fmt::Display for RElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q^{} Z^{}", self.quint, self.terz)?;
        if self.wechsel {
            f.write_str(" W")?;
        }
        Ok(())
    }
}

impl FromStr for RElement {
    type Err = Error;

    /// Accepts `"Q^u Z^v"` with an optional trailing `"W"`; missing factors
    /// default to exponent zero.
    fn from_str(s: &str) -> Result<Self> {
        let mut out = RElement::IDENTITY;
        let mut offset = 0;
        for tok in s.split_whitespace() {
            let at = s[offset..].find(tok).map_or(offset, |k| k + offset);
            offset = at + tok.len();
            if tok == "W" {
                if out.wechsel {
                    return Err(Error::parse(s, at, "repeated W"));
                }
                out.wechsel = true;
                continue;
            }
            let (name, exp) = tok.split_once('^').ok_or_else(|| {
                Error::parse(s, at, format!("expected Q^n, Z^n or W, got {tok:?}"))
            })?;
            let k: i64 = exp
                .trim_matches(|c| c == '{' || c == '}')
                .replace('\u{2212}', "-")
                .parse()
                .map_err(|_| Error::parse(s, at + name.len() + 1, "exponent is not an integer"))?;
            match name {
                "Q" => out.quint = k,
                "Z" => out.terz = k,
                _ => return Err(Error::parse(s, at, format!("unknown factor {name:?}"))),
            }
        }
        Ok(out)
    }
}

/// Normal form `(π3π1)^a (π1π2)^b π1^flip` of a point reflection group element.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize,
)]
pub struct PElement {
    pub flip: bool,
    pub a: i64,
    pub b: i64,
}

impl PElement {
    pub const IDENTITY: PElement = PElement {
        flip: false,
        a: 0,
        b: 0,
    };

    pub const fn new(flip: bool, a: i64, b: i64) -> Self {
        PElement { flip, a, b }
    }

    pub const fn translation(a: i64, b: i64) -> Self {
        PElement { flip: false, a, b }
    }

    /// `π1`, `π2`, `π3`.
    pub fn generator(i: i64) -> Result<Self> {
        match i {
            1 => Ok(Self::new(true, 0, 0)),
            2 => Ok(Self::new(true, 0, -1)),
            3 => Ok(Self::new(true, 1, 0)),
            _ => Err(Error::BadGeneratorIndex(i)),
        }
    }

    /// Conjugating a translation by `π1` inverts it.
    pub fn compose(&self, other: &PElement) -> PElement {
        let sign = if self.flip { -1 } else { 1 };
        PElement {
            flip: self.flip ^ other.flip,
            a: self.a + sign * other.a,
            b: self.b + sign * other.b,
        }
    }

    pub fn inverse(&self) -> PElement {
        if self.flip {
            *self
        } else {
            Self::translation(-self.a, -self.b)
        }
    }

    pub fn pow(&self, k: i64) -> PElement {
        let base = if k < 0 { self.inverse() } else { *self };
        (0..k.unsigned_abs()).fold(Self::IDENTITY, |acc, _| acc.compose(&base))
    }

    /// Lattice displacement of the translation part: `π3π1` moves by a major
    /// third `(0, 1)`, `π1π2` by a minor third `(1, -1)`.
    pub fn translation_vector(&self) -> Vertex {
        Vertex::new(self.b, self.a - self.b)
    }

    pub fn to_isometry(&self) -> Isometry {
        let shift = Isometry::translation(self.translation_vector());
        if self.flip {
            shift.compose(&Isometry::point_reflection(Vertex::ORIGIN, Vertex::FIFTH))
        } else {
            shift
        }
    }

    pub fn left_action(&self, t: &Triangle) -> Triangle {
        self.to_isometry().apply_triangle(t)
    }

    /// Image of the reference triangle.
    pub fn triangle(&self) -> Triangle {
        let v = self.translation_vector();
        if self.flip {
            Triangle::down(v.p, v.q)
        } else {
            Triangle::up(v.p, v.q)
        }
    }

    /// The unique element sending the reference triangle to `t`.
    pub fn of_triangle(t: &Triangle) -> PElement {
        let Vertex { p, q } = t.root;
        PElement::new(t.orientation == Orientation::Down, p + q, p)
    }

    pub fn in_comma_subgroup(&self) -> bool {
        !self.flip && self.a.rem_euclid(3) == 0 && self.b.rem_euclid(4) == 0
    }

    pub fn project_d12(&self) -> D12Coset {
        D12Coset::new(self.flip, self.a, self.b)
    }
}

impl fmt::Display for PElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, u8::from(self.flip))
    }
}

impl FromStr for PElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::parse(s, 0, "expected '(a,b,flip)'"))?;
        let mut fields = Vec::new();
        let mut start = 1;
        for part in inner.split(',') {
            fields.push((start, part.trim().replace('\u{2212}', "-")));
            start += part.len() + 1;
        }
        if fields.len() != 3 {
            return Err(Error::parse(s, 1, "expected three fields"));
        }
        let int = |k: usize| {
            let (at, text) = &fields[k];
            text.parse::<i64>()
                .map_err(|_| Error::parse(s, *at, format!("field {} is not an integer", k + 1)))
        };
        let flip = match fields[2].1.as_str() {
            "0" | "false" => false,
            "1" | "true" => true,
            _ => return Err(Error::parse(s, fields[2].0, "flip must be 0 or 1")),
        };
        Ok(PElement::new(flip, int(0)?, int(1)?))
    }
}

/// Coset of the comma subgroup: `(flip, a mod 3, b mod 4)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct D12Coset {
    pub flip: bool,
    pub a_mod3: u8,
    pub b_mod4: u8,
}

impl D12Coset {
    pub const IDENTITY: D12Coset = D12Coset {
        flip: false,
        a_mod3: 0,
        b_mod4: 0,
    };

    pub fn new(flip: bool, a: i64, b: i64) -> Self {
        D12Coset {
            flip,
            a_mod3: a.rem_euclid(3) as u8,
            b_mod4: b.rem_euclid(4) as u8,
        }
    }

    pub fn compose(&self, other: &D12Coset) -> D12Coset {
        let sign = if self.flip { -1 } else { 1 };
        D12Coset::new(
            self.flip ^ other.flip,
            self.a_mod3 as i64 + sign * other.a_mod3 as i64,
            self.b_mod4 as i64 + sign * other.b_mod4 as i64,
        )
    }

    pub fn inverse(&self) -> D12Coset {
        if self.flip {
            *self
        } else {
            D12Coset::new(false, -(self.a_mod3 as i64), -(self.b_mod4 as i64))
        }
    }

    pub fn order(&self) -> u32 {
        let mut power = *self;
        let mut k = 1;
        while power != Self::IDENTITY {
            power = power.compose(self);
            k += 1;
        }
        k
    }
}

impl fmt::Display for D12Coset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({} mod 3,{} mod 4,{})",
            self.a_mod3,
            self.b_mod4,
            u8::from(self.flip)
        )
    }
}

/// Anti-isomorphism `P → R` sending `π3π2 ↦ Q`, `π3π1 ↦ Z`, `π1 ↦ W`.
pub fn p_to_r(x: &PElement) -> RElement {
    let v = x.translation_vector();
    let sign = if x.flip { -1 } else { 1 };
    RElement {
        wechsel: x.flip,
        quint: sign * v.p,
        terz: sign * v.q,
    }
}

pub fn r_to_p(r: &RElement) -> PElement {
    let sign = if r.wechsel { -1 } else { 1 };
    let (b, d) = (sign * r.quint, sign * r.terz);
    PElement::new(r.wechsel, b + d, b)
}

fn pi(i: i64) -> PElement {
    PElement::generator(i).expect("index in range")
}

/// `(π3π1)^3`, three major thirds.
pub fn lesser_diesis() -> PElement {
    pi(3).compose(&pi(1)).pow(3)
}

/// `(π1π2)^4`, four minor thirds.
pub fn greater_diesis() -> PElement {
    pi(1).compose(&pi(2)).pow(4)
}

/// `(π3π2)^3 π1π2`.
pub fn syntonic_comma() -> PElement {
    pi(3).compose(&pi(2)).pow(3).compose(&pi(1)).compose(&pi(2))
}

/// `(π3π2)^12`, twelve fifths.
pub fn pythagorean_comma() -> PElement {
    pi(3).compose(&pi(2)).pow(12)
}

/// `h = (π1π2)⁻¹ π3π1`, the semitone; its coset has order 12.
pub fn semitone() -> PElement {
    pi(1)
        .compose(&pi(2))
        .inverse()
        .compose(&pi(3).compose(&pi(1)))
}

/// Closure of a set of cosets under multiplication.
pub fn generated_subgroup(gens: &[D12Coset]) -> HashSet<D12Coset> {
    let mut seen = HashSet::from([D12Coset::IDENTITY]);
    let mut frontier = vec![D12Coset::IDENTITY];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.compose(g);
            if seen.insert(y) {
                frontier.push(y);
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wechsel_law() {
        let w = RElement::seitenwechsel();
        assert_eq!(w.compose(&w), RElement::IDENTITY);
        let (t1, t2) = (RElement::schritt(2, -1), RElement::schritt(-3, 5));
        let lhs =
            RElement::wechsel(t1.quint, t1.terz).compose(&RElement::wechsel(t2.quint, t2.terz));
        assert_eq!(lhs, RElement::schritt(2 + 3, -1 - 5));
        assert_eq!(t1.compose(&t2), RElement::schritt(-1, 4));
    }

    #[test]
    fn p_generators_and_products() {
        let (p1, p2, p3) = (pi(1), pi(2), pi(3));
        assert_eq!(p1.compose(&p1), PElement::IDENTITY);
        let p32 = p3.compose(&p2);
        assert!(!p32.flip);
        assert_eq!(p32, PElement::translation(1, 1));
        assert_eq!(p32.pow(12), PElement::translation(12, 12));
        assert_eq!(p3.compose(&p1), PElement::translation(1, 0));
        assert_eq!(p1.compose(&p2), PElement::translation(0, 1));
        assert!(PElement::generator(4).is_err());
    }

    #[test]
    fn generators_are_half_turns_about_edge_midpoints() {
        let edges = [
            (1, Vertex::new(0, 0), Vertex::new(1, 0)),
            (2, Vertex::new(0, 0), Vertex::new(0, 1)),
            (3, Vertex::new(0, 1), Vertex::new(1, 0)),
        ];
        for (i, x, y) in edges {
            assert_eq!(
                pi(i).to_isometry(),
                Isometry::point_reflection(x, y),
                "pi{i}"
            );
        }
    }

    #[test]
    fn left_action_examples() {
        let c = Triangle::REFERENCE;
        assert_eq!(pi(1).left_action(&c), Triangle::down(0, 0));
        assert_eq!(pi(3).compose(&pi(2)).left_action(&c), Triangle::up(1, 0));
        assert_eq!(
            PElement::IDENTITY.left_action(&Triangle::down(4, -2)),
            Triangle::down(4, -2)
        );
    }

    #[test]
    fn p_to_r_examples() {
        assert_eq!(p_to_r(&pi(1)), RElement::seitenwechsel());
        assert_eq!(
            p_to_r(&PElement::translation(1, 0)),
            RElement::terzschritt()
        );
        assert_eq!(p_to_r(&pi(3).compose(&pi(2))), RElement::quintschritt());
        let (x, y) = (pi(1), pi(3).compose(&pi(1)));
        assert_eq!(p_to_r(&x.compose(&y)), p_to_r(&y).compose(&p_to_r(&x)));
        assert_ne!(p_to_r(&x.compose(&y)), p_to_r(&x).compose(&p_to_r(&y)));
    }

    #[test]
    fn comma_membership() {
        assert!(PElement::translation(3, 0).in_comma_subgroup());
        assert_eq!(syntonic_comma(), PElement::translation(3, 4));
        assert!(syntonic_comma().in_comma_subgroup());
        assert!(!pi(1).in_comma_subgroup());
        assert!(!PElement::translation(3, 2).in_comma_subgroup());
    }

    #[test]
    fn d12_examples() {
        assert_eq!(pythagorean_comma().project_d12(), D12Coset::IDENTITY);
        let h = semitone().project_d12();
        assert_eq!(h.order(), 12);
        let rho = pi(1).project_d12();
        assert_eq!(rho.order(), 2);
        assert_eq!(rho.compose(&h).compose(&rho.inverse()), h.inverse());
        assert_eq!(generated_subgroup(&[h, rho]).len(), 24);
    }

    #[test]
    fn schritte_move_major_and_minor_oppositely() {
        let q = RElement::quintschritt();
        assert_eq!(q.act(&Triangle::REFERENCE), Triangle::up(1, 0));
        assert_eq!(q.act(&Triangle::down(0, 0)), Triangle::down(-1, 0));
        assert_eq!(
            RElement::terzschritt().act(&Triangle::REFERENCE),
            Triangle::up(0, 1)
        );
        assert_eq!(
            RElement::seitenwechsel().act(&Triangle::REFERENCE),
            Triangle::down(0, 0)
        );
    }

    #[test]
    fn text_formats() {
        let r = RElement::wechsel(2, -1);
        assert_eq!(r.to_string(), "Q^2 Z^-1 W");
        assert_eq!(r.to_string().parse::<RElement>().unwrap(), r);
        assert_eq!("Z^3".parse::<RElement>().unwrap(), RElement::schritt(0, 3));
        assert!("Q^x".parse::<RElement>().is_err());
        assert!("W W".parse::<RElement>().is_err());
        let p = PElement::new(true, -2, 5);
        assert_eq!(p.to_string(), "(-2,5,1)");
        assert_eq!(p.to_string().parse::<PElement>().unwrap(), p);
        assert_eq!(
            "(1, 2, false)".parse::<PElement>().unwrap(),
            PElement::translation(1, 2)
        );
        assert!("(1,2)".parse::<PElement>().is_err());
    }
}

//! Integer realization of the Tonnetz.
//!
//! Vertices are integer pairs `(p, q)`: `p` counts perfect fifths and `q`
//! major thirds from the C of the reference triangle. With this basis every
//! symmetry of the triangular lattice is an integer affine map, so no
//! floating point geometry is needed anywhere.
//!
//! A triangle is stored by its root vertex and orientation. The major triad
//! `Up(v)` has vertices `v, v + fifth, v + third`; the minor triad `Down(v)`
//! has `v, v + fifth, v + fifth - third`. In both cases `v` is the root of
//! the triad.

use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{AffinePermutation, Generator, TriangleCoords};

/// A vertex of the note lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Vertex {
    pub p: i64,
    pub q: i64,
}

impl Vertex {
    pub const ORIGIN: Vertex = Vertex { p: 0, q: 0 };
    pub const FIFTH: Vertex = Vertex { p: 1, q: 0 };
    pub const THIRD: Vertex = Vertex { p: 0, q: 1 };

    pub const fn new(p: i64, q: i64) -> Self {
        Vertex { p, q }
    }

    /// Residue class modulo the translation lattice spanned by the two
    /// translation generators; C, G and E fall into classes 0, 1 and 2.
    pub fn class(&self) -> u8 {
        (self.p - self.q).rem_euclid(3) as u8
    }
}

impl Add for Vertex {
    type Output = Vertex;
    fn add(self, o: Vertex) -> Vertex {
        Vertex::new(self.p + o.p, self.q + o.q)
    }
}

impl Sub for Vertex {
    type Output = Vertex;
    fn sub(self, o: Vertex) -> Vertex {
        Vertex::new(self.p - o.p, self.q - o.q)
    }
}

impl Neg for Vertex {
    type Output = Vertex;
    fn neg(self) -> Vertex {
        Vertex::new(-self.p, -self.q)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Up,
    Down,
}

/// Interval type of a triangle edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Edge {
    Fifth,
    MajorThird,
    MinorThird,
}

impl Edge {
    pub const ALL: [Edge; 3] = [Edge::Fifth, Edge::MajorThird, Edge::MinorThird];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Triangle {
    pub root: Vertex,
    pub orientation: Orientation,
}

impl Triangle {
    /// The C major triad, image of the identity element.
    pub const REFERENCE: Triangle = Triangle::up(0, 0);

    pub const fn up(p: i64, q: i64) -> Self {
        Triangle {
            root: Vertex::new(p, q),
            orientation: Orientation::Up,
        }
    }

    pub const fn down(p: i64, q: i64) -> Self {
        Triangle {
            root: Vertex::new(p, q),
            orientation: Orientation::Down,
        }
    }

    pub fn is_major(&self) -> bool {
        self.orientation == Orientation::Up
    }

    /// Root, third and fifth of the triad, in that order.
    pub fn vertices(&self) -> [Vertex; 3] {
        let v = self.root;
        match self.orientation {
            Orientation::Up => [v, v + Vertex::THIRD, v + Vertex::FIFTH],
            Orientation::Down => [v, v + Vertex::FIFTH - Vertex::THIRD, v + Vertex::FIFTH],
        }
    }

    pub fn contains(&self, x: Vertex) -> bool {
        self.vertices().contains(&x)
    }

    /// Normalizes an unordered vertex triple; `None` if it is not a triangle.
    pub fn from_vertices(vs: [Vertex; 3]) -> Option<Triangle> {
        let set: HashSet<Vertex> = vs.into_iter().collect();
        if set.len() != 3 {
            return None;
        }
        vs.iter().find_map(|&v| {
            if set.contains(&(v + Vertex::FIFTH)) && set.contains(&(v + Vertex::THIRD)) {
                Some(Triangle {
                    root: v,
                    orientation: Orientation::Up,
                })
            } else if set.contains(&(v + Vertex::FIFTH))
                && set.contains(&(v + Vertex::FIFTH - Vertex::THIRD))
            {
                Some(Triangle {
                    root: v,
                    orientation: Orientation::Down,
                })
            } else {
                None
            }
        })
    }

    pub fn translate(&self, by: Vertex) -> Triangle {
        Triangle {
            root: self.root + by,
            orientation: self.orientation,
        }
    }

    /// The other triangle sharing the edge of the given interval type.
    pub fn flip(&self, edge: Edge) -> Triangle {
        let v = self.root;
        let (f, t) = (Vertex::FIFTH, Vertex::THIRD);
        match (self.orientation, edge) {
            (Orientation::Up, Edge::Fifth) => Triangle {
                root: v,
                orientation: Orientation::Down,
            },
            (Orientation::Up, Edge::MinorThird) => Triangle {
                root: v + t,
                orientation: Orientation::Down,
            },
            (Orientation::Up, Edge::MajorThird) => Triangle {
                root: v - f + t,
                orientation: Orientation::Down,
            },
            (Orientation::Down, Edge::Fifth) => Triangle {
                root: v,
                orientation: Orientation::Up,
            },
            (Orientation::Down, Edge::MinorThird) => Triangle {
                root: v - t,
                orientation: Orientation::Up,
            },
            (Orientation::Down, Edge::MajorThird) => Triangle {
                root: v + f - t,
                orientation: Orientation::Up,
            },
        }
    }

    pub fn neighbors(&self) -> [Triangle; 3] {
        Edge::ALL.map(|e| self.flip(e))
    }

    /// Three times the centroid, in drawing units: `x` counts half edges
    /// horizontally, `y` counts rows of the lattice.
    pub fn centroid3(&self) -> (i64, i64) {
        self.vertices()
            .iter()
            .fold((0, 0), |(x, y), v| (x + 2 * v.p + v.q, y + v.q))
    }

    /// Axis coordinates read off the geometric center: the horizontal offset
    /// from the reference center in half edges is `-c1`, and the vertical
    /// offset in thirds of a row is `c2 - c3`.
    pub fn axis_coords(&self) -> TriangleCoords {
        let (x3, y3) = self.centroid3();
        let (rx, ry) = Triangle::REFERENCE.centroid3();
        let dx = (x3 - rx) / 3;
        let dy = y3 - ry;
        TriangleCoords::new(-dx, (dx + dy) / 2, (dx - dy) / 2)
    }

    pub fn to_perm(&self) -> AffinePermutation {
        self.axis_coords()
            .to_perm()
            .expect("axis coordinates of a lattice triangle are a triangle center")
    }

    /// Index of the band between two parallel lattice lines containing the
    /// triangle, for horizontal, rising and falling lines respectively.
    pub fn bands(&self) -> [i64; 3] {
        let Vertex { p, q } = self.root;
        match self.orientation {
            Orientation::Up => [q, p, p + q],
            Orientation::Down => [q - 1, p, p + q],
        }
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.orientation {
            Orientation::Up => 'U',
            Orientation::Down => 'D',
        };
        write!(f, "{tag}({},{})", self.root.p, self.root.q)
    }
}

impl FromStr for Triangle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let orientation = match t.chars().next() {
            Some('U') => Orientation::Up,
            Some('D') => Orientation::Down,
            _ => return Err(Error::parse(s, 0, "triangle must start with 'U' or 'D'")),
        };
        let inner = t[1..]
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::parse(s, 1, "expected '(p,q)'"))?;
        let mut parts = inner
            .split(',')
            .map(|x| x.trim().replace('\u{2212}', "-").parse::<i64>());
        match (parts.next(), parts.next(), parts.next()) {
            (Some(Ok(p)), Some(Ok(q)), None) => Ok(Triangle {
                root: Vertex::new(p, q),
                orientation,
            }),
            _ => Err(Error::parse(s, 2, "expected two integers")),
        }
    }
}

/// Integer affine map `x ↦ m·x + v` on the vertex lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Isometry {
    pub m: [[i64; 2]; 2],
    pub v: [i64; 2],
}

impl Isometry {
    pub const IDENTITY: Isometry = Isometry {
        m: [[1, 0], [0, 1]],
        v: [0, 0],
    };

    /// Reflection in the edge of the reference triangle on the given axis:
    /// `s1` fixes C–G, `s2` fixes C–E, `s3` fixes E–G.
    pub fn generator(g: Generator) -> Isometry {
        match g {
            Generator::S1 => Isometry {
                m: [[1, 1], [0, -1]],
                v: [0, 0],
            },
            Generator::S2 => Isometry {
                m: [[-1, 0], [1, 1]],
                v: [0, 0],
            },
            Generator::S3 => Isometry {
                m: [[0, -1], [-1, 0]],
                v: [1, 1],
            },
        }
    }

    pub fn translation(by: Vertex) -> Isometry {
        Isometry {
            m: Self::IDENTITY.m,
            v: [by.p, by.q],
        }
    }

    /// Half-turn about the midpoint of `x` and `y`: `z ↦ x + y - z`.
    pub fn point_reflection(x: Vertex, y: Vertex) -> Isometry {
        let s = x + y;
        Isometry {
            m: [[-1, 0], [0, -1]],
            v: [s.p, s.q],
        }
    }

    /// Image of `f` under the homomorphism sending each `s_i` to its
    /// reflection; evaluated along the canonical reduced word.
    pub fn of_perm(f: &AffinePermutation) -> Isometry {
        f.reduce()
            .letters()
            .iter()
            .fold(Isometry::IDENTITY, |acc, &g| {
                acc.compose(&Isometry::generator(g))
            })
    }

    /// `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Isometry) -> Isometry {
        let a = self.m;
        let b = other.m;
        let m = [
            [
                a[0][0] * b[0][0] + a[0][1] * b[1][0],
                a[0][0] * b[0][1] + a[0][1] * b[1][1],
            ],
            [
                a[1][0] * b[0][0] + a[1][1] * b[1][0],
                a[1][0] * b[0][1] + a[1][1] * b[1][1],
            ],
        ];
        let w = self.linear(other.v);
        Isometry {
            m,
            v: [w[0] + self.v[0], w[1] + self.v[1]],
        }
    }

    fn linear(&self, x: [i64; 2]) -> [i64; 2] {
        [
            self.m[0][0] * x[0] + self.m[0][1] * x[1],
            self.m[1][0] * x[0] + self.m[1][1] * x[1],
        ]
    }

    pub fn apply(&self, x: Vertex) -> Vertex {
        let w = self.linear([x.p, x.q]);
        Vertex::new(w[0] + self.v[0], w[1] + self.v[1])
    }

    pub fn apply_triangle(&self, t: &Triangle) -> Triangle {
        Triangle::from_vertices(t.vertices().map(|x| self.apply(x)))
            .expect("lattice isometries map triangles to triangles")
    }

    pub fn det(&self) -> i64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn trace(&self) -> i64 {
        self.m[0][0] + self.m[1][1]
    }

    pub fn is_translation(&self) -> bool {
        self.m == Self::IDENTITY.m
    }

    pub fn translation_part(&self) -> Vertex {
        Vertex::new(self.v[0], self.v[1])
    }
}

/// Triangle reached from the reference triangle by the element's reflections.
pub fn triangle_of(f: &AffinePermutation) -> Triangle {
    Isometry::of_perm(f).apply_triangle(&Triangle::REFERENCE)
}

/// Minimal number of edge flips between two triangles, by breadth-first
/// search.
pub fn gallery_distance_bfs(from: &Triangle, to: &Triangle) -> usize {
    if from == to {
        return 0;
    }
    let mut seen = HashSet::from([*from]);
    let mut frontier = vec![*from];
    let mut depth = 0;
    loop {
        depth += 1;
        let mut next = Vec::with_capacity(frontier.len() * 2);
        for t in &frontier {
            for n in t.neighbors() {
                if n == *to {
                    return depth;
                }
                if seen.insert(n) {
                    next.push(n);
                }
            }
        }
        frontier = next;
    }
}

/// Number of lattice lines separating two triangles. Equals the gallery
/// distance; cheap enough to use for nearest-triangle searches.
pub fn wall_distance(a: &Triangle, b: &Triangle) -> u64 {
    let (x, y) = (a.bands(), b.bands());
    (0..3).map(|k| x[k].abs_diff(y[k])).sum()
}

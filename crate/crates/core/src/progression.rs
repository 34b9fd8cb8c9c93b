//! Contextual PLR moves, minimal chord paths, hexagon cycles, stripes and
//! progression analysis.
//!
//! PLR words compose like functions: the rightmost letter acts first, so
//! `"LR"` applied to C major is `L(R(C)) = F`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{AffinePermutation, Generator, Word};
use crate::lattice::{Edge, Isometry, Orientation, Triangle, Vertex};
use crate::pitch::{name_triangle, spell_vertex, ChordName, ChordSymbol, NoteName};
use crate::subgroup::{coset_mod_t, translation_generator, FiniteS3};

/// Parallel, Leittonwechsel and Relative: flips across the fifth, minor
/// third and major third edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PlrMove {
    P,
    L,
    R,
}

impl PlrMove {
    pub const ALL: [PlrMove; 3] = [PlrMove::P, PlrMove::L, PlrMove::R];

    pub fn edge(self) -> Edge {
        match self {
            PlrMove::P => Edge::Fifth,
            PlrMove::L => Edge::MinorThird,
            PlrMove::R => Edge::MajorThird,
        }
    }

    pub fn apply(self, t: &Triangle) -> Triangle {
        t.flip(self.edge())
    }

    fn symbol(self) -> char {
        match self {
            PlrMove::P => 'P',
            PlrMove::L => 'L',
            PlrMove::R => 'R',
        }
    }
}

/// Letters in written order; the last letter is applied first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct PlrWord(pub Vec<PlrMove>);

impl PlrWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, t: &Triangle) -> Triangle {
        self.0.iter().rev().fold(*t, |acc, m| m.apply(&acc))
    }

    /// Every triangle visited, starting with `t`.
    pub fn trace(&self, t: &Triangle) -> Vec<Triangle> {
        let mut out = vec![*t];
        for m in self.0.iter().rev() {
            out.push(m.apply(out.last().expect("non-empty")));
        }
        out
    }
}

impl fmt::Display for PlrWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|m| write!(f, "{}", m.symbol()))
    }
}

impl FromStr for PlrWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| match c {
                'P' => Ok(PlrMove::P),
                'L' => Ok(PlrMove::L),
                'R' => Ok(PlrMove::R),
                _ => Err(Error::parse(s, i, format!("expected P, L or R, got {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(PlrWord)
    }
}

pub fn apply_plr(word: &PlrWord, t: &Triangle) -> Triangle {
    word.apply(t)
}

/// A shortest PLR word from `from` to `to`. Breadth-first search tries
/// P, L, R in that order and keeps the first parent found.
pub fn plr_path(from: &Triangle, to: &Triangle) -> PlrWord {
    let mut parent: HashMap<Triangle, (Triangle, PlrMove)> = HashMap::new();
    let mut queue = VecDeque::from([*from]);
    while let Some(t) = queue.pop_front() {
        if t == *to {
            break;
        }
        for m in PlrMove::ALL {
            let n = m.apply(&t);
            if n != *from && !parent.contains_key(&n) {
                parent.insert(n, (t, m));
                queue.push_back(n);
            }
        }
    }
    // walking back from `to` yields the moves last-applied first, which is
    // already written order
    let mut word = Vec::new();
    let mut cur = *to;
    while cur != *from {
        let (prev, m) = parent[&cur];
        word.push(m);
        cur = prev;
    }
    PlrWord(word)
}

/// Reduced generator word of `g` with `to = from·g`.
pub fn generator_path(from: &Triangle, to: &Triangle) -> Word {
    (from.to_perm().inverse() * to.to_perm()).reduce()
}

/// The six triangles around `x`, counterclockwise, starting with the major
/// triad having `x` as its third.
pub fn triangles_around(x: Vertex) -> [Triangle; 6] {
    let (f, t) = (Vertex::FIFTH, Vertex::THIRD);
    let at = |v: Vertex, o: Orientation| Triangle {
        root: v,
        orientation: o,
    };
    [
        at(x - t, Orientation::Up),
        at(x, Orientation::Down),
        at(x, Orientation::Up),
        at(x - f + t, Orientation::Down),
        at(x - f, Orientation::Up),
        at(x - f, Orientation::Down),
    ]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HexagonReport {
    pub center: Vertex,
    pub common_tone: NoteName,
    /// Whether the hexagon is a tile of the hexagon tiling, i.e. centered at
    /// an image of E under a translation.
    pub tiling: bool,
    pub triangles: Vec<Triangle>,
    pub chords: Vec<ChordName>,
    /// `generators[k]` carries `triangles[k]` to `triangles[k+1]` (cyclically)
    /// by right multiplication. They alternate between the two reflections
    /// fixing the center.
    pub generators: Vec<Generator>,
    /// Class modulo translations of the major triad having the center as
    /// its third.
    pub coset: FiniteS3,
}

/// The hexagon around `x`, listed counterclockwise from `start` (which must
/// contain `x`), or from the major triad with third `x`.
pub fn hexagon_around(x: Vertex, start: Option<&Triangle>) -> HexagonReport {
    let ring = triangles_around(x);
    let offset = start
        .and_then(|s| ring.iter().position(|t| t == s))
        .unwrap_or(0);
    let triangles: Vec<Triangle> = (0..6).map(|k| ring[(k + offset) % 6]).collect();
    let generators = (0..6)
        .map(|k| {
            let w = generator_path(&triangles[k], &triangles[(k + 1) % 6]);
            debug_assert_eq!(w.len(), 1);
            w.letters()[0]
        })
        .collect();
    HexagonReport {
        center: x,
        common_tone: spell_vertex(x),
        tiling: x.class() == Vertex::THIRD.class(),
        chords: triangles.iter().map(name_triangle).collect(),
        triangles,
        generators,
        coset: coset_mod_t(&ring[0].to_perm()),
    }
}

/// The tile of the hexagon tiling containing `seed`, starting at `seed`.
pub fn hexagon_cycle(seed: &Triangle) -> HexagonReport {
    let center = seed
        .vertices()
        .into_iter()
        .find(|v| v.class() == Vertex::THIRD.class())
        .expect("every triangle has one vertex of each class");
    hexagon_around(center, Some(seed))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sense {
    Plus,
    Minus,
}

impl FromStr for Sense {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+" | "plus" => Ok(Sense::Plus),
            "-" | "minus" => Ok(Sense::Minus),
            _ => Err(Error::parse(s, 0, "expected '+' or '-'")),
        }
    }
}

fn rotation(sense: Sense) -> Isometry {
    let word = match sense {
        Sense::Plus => [Generator::S3, Generator::S2],
        Sense::Minus => [Generator::S2, Generator::S3],
    };
    Isometry::of_perm(&AffinePermutation::from_word(&Word::new(word.to_vec())))
}

/// Orbit of `seed` under left multiplication by `s3s2` (or `s2s3`), the
/// rotation of order 3 about E.
pub fn rotation_cycle(seed: &Triangle, sense: Sense) -> Vec<ChordName> {
    rotation_cycle_about(seed, sense, Vertex::THIRD)
}

/// The same rotation conjugated to fix the vertex `center`.
pub fn rotation_cycle_about(seed: &Triangle, sense: Sense, center: Vertex) -> Vec<ChordName> {
    let mut out = vec![*seed];
    for _ in 0..2 {
        out.push(rotate(out.last().expect("non-empty"), sense, center));
    }
    out.iter().map(name_triangle).collect()
}

/// One step of the order 3 rotation about `center`.
pub fn rotate(t: &Triangle, sense: Sense, center: Vertex) -> Triangle {
    let shift = center - Vertex::THIRD;
    Isometry::translation(shift)
        .compose(&rotation(sense))
        .compose(&Isometry::translation(-shift))
        .apply_triangle(t)
}

/// Images of `seed` under `t1`, `t2t1` and `t3t2t1 = e`.
pub fn translation_cycle(seed: &Triangle) -> Vec<ChordName> {
    let t = |i| translation_generator(i).expect("index in range");
    let f = seed.to_perm();
    let t1 = t(1);
    let t21 = t(2) * t1;
    let t321 = t(3) * t21;
    [t1, t21, t321]
        .iter()
        .map(|g| name_triangle(&crate::lattice::triangle_of(&(*g * f))))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StripeKind {
    /// Horizontal band: the line of fifths.
    Fifths,
    /// Rising band: three pitch-class-disjoint major thirds.
    Hexatonic,
    /// Falling band: the minor-third cycle.
    Octatonic,
}

impl FromStr for StripeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fifths" => Ok(StripeKind::Fifths),
            "hexatonic" => Ok(StripeKind::Hexatonic),
            "octatonic" => Ok(StripeKind::Octatonic),
            _ => Err(Error::parse(
                s,
                0,
                "expected fifths, hexatonic or octatonic",
            )),
        }
    }
}

impl fmt::Display for StripeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StripeKind::Fifths => "fifths",
            StripeKind::Hexatonic => "hexatonic",
            StripeKind::Octatonic => "octatonic",
        })
    }
}

/// Band parameter and position of `t` within its stripe.
fn stripe_position(t: &Triangle, kind: StripeKind) -> (i64, i64) {
    let Vertex { p, q } = t.root;
    let up = t.is_major();
    match kind {
        StripeKind::Fifths if up => (q, 2 * p),
        StripeKind::Fifths => (q - 1, 2 * p + 1),
        StripeKind::Hexatonic => (p, if up { 2 * q + 1 } else { 2 * q }),
        StripeKind::Octatonic => (p + q, if up { 2 * p } else { 2 * p + 1 }),
    }
}

fn stripe_member(kind: StripeKind, band: i64, k: i64) -> Triangle {
    let (half, odd) = (k.div_euclid(2), k.rem_euclid(2) == 1);
    match (kind, odd) {
        (StripeKind::Fifths, false) => Triangle::up(half, band),
        (StripeKind::Fifths, true) => Triangle::down(half, band + 1),
        (StripeKind::Hexatonic, false) => Triangle::down(band, half),
        (StripeKind::Hexatonic, true) => Triangle::up(band, half),
        (StripeKind::Octatonic, false) => Triangle::up(half, band - half),
        (StripeKind::Octatonic, true) => Triangle::down(half, band - half),
    }
}

/// The `2·count + 1` consecutive triangles of the stripe through `seed`,
/// centered at `seed`, each sharing an edge with the next.
pub fn stripe(seed: &Triangle, kind: StripeKind, count: usize) -> Vec<Triangle> {
    let (band, k0) = stripe_position(seed, kind);
    let n = count as i64;
    (k0 - n..=k0 + n)
        .map(|k| stripe_member(kind, band, k))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub from: ChordName,
    pub to: ChordName,
    pub from_triangle: Triangle,
    pub to_triangle: Triangle,
    pub path: String,
    pub length: usize,
    pub common_tones: Vec<NoteName>,
    /// Center of the hexagon containing both chords: the shared tone of the
    /// tiling class when there is one.
    pub hexagon: Option<NoteName>,
    pub tiling: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Analysis {
    pub chords: Vec<ChordName>,
    pub triangles: Vec<Triangle>,
    pub steps: Vec<Step>,
}

/// Places the first chord by its annotation, `forced` comma level or the
/// default rule, and every later unannotated chord as close as possible to
/// its predecessor.
pub fn analyze(symbols: &[ChordSymbol], forced: Option<i64>) -> Analysis {
    let mut triangles: Vec<Triangle> = Vec::with_capacity(symbols.len());
    for sym in symbols {
        let name = sym.resolve_with(forced, triangles.last());
        triangles.push(name.triangle());
    }
    let steps = triangles
        .windows(2)
        .map(|w| {
            let (a, b) = (w[0], w[1]);
            let word = plr_path(&a, &b);
            let shared: Vec<Vertex> = a
                .vertices()
                .into_iter()
                .filter(|v| b.contains(*v))
                .collect();
            let center = shared
                .iter()
                .find(|v| v.class() == Vertex::THIRD.class())
                .or(shared.first())
                .copied();
            Step {
                from: name_triangle(&a),
                to: name_triangle(&b),
                from_triangle: a,
                to_triangle: b,
                path: word.to_string(),
                length: word.len(),
                common_tones: shared.iter().map(|&v| spell_vertex(v)).collect(),
                hexagon: center.map(spell_vertex),
                tiling: center.is_some_and(|v| v.class() == Vertex::THIRD.class()),
            }
        })
        .collect();
    Analysis {
        chords: triangles.iter().map(name_triangle).collect(),
        triangles,
        steps,
    }
}

/// Opening of the Moonlight Sonata. The second chord stands for the
/// C♯ minor seventh chord C♯-E-G♯-B, the union of C♯ minor and E major.
pub const MOONLIGHT: [&str; 4] = ["C#m", "E", "A", "D"];

pub fn parse_progression(s: &str) -> Result<Vec<ChordSymbol>> {
    s.split(',').map(|c| c.trim().parse()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::gallery_distance_bfs;

    fn chord(s: &str) -> Triangle {
        crate::pitch::parse_chord(s).unwrap().1
    }

    fn names(v: &[ChordName]) -> Vec<String> {
        v.iter().map(|c| c.to_string()).collect()
    }

    fn plr(s: &str) -> PlrWord {
        s.parse().unwrap()
    }

    #[test]
    fn apply_examples() {
        let c = Triangle::REFERENCE;
        assert_eq!(plr("P").apply(&c), Triangle::down(0, 0));
        assert_eq!(plr("RL").apply(&c), Triangle::up(1, 0));
        assert_eq!(name_triangle(&plr("RLP").apply(&c)).to_string(), "Fm");
        assert_eq!(name_triangle(&plr("LR").apply(&c)).to_string(), "F");
        assert_eq!(name_triangle(&plr("PR").apply(&c)).to_string(), "A");
        assert!("PQ".parse::<PlrWord>().is_err());
    }

    #[test]
    fn path_examples() {
        let c = Triangle::REFERENCE;
        assert_eq!(plr_path(&c, &Triangle::down(0, 0)).to_string(), "P");
        let w = plr_path(&c, &Triangle::up(1, 0));
        assert_eq!(w.len(), 2);
        assert_eq!(w.apply(&c), Triangle::up(1, 0));
        assert!(plr_path(&c, &c).is_empty());
        for t in [
            Triangle::down(3, -2),
            Triangle::up(-4, 1),
            Triangle::down(-1, 5),
        ] {
            let w = plr_path(&c, &t);
            assert_eq!(w.apply(&c), t);
            assert_eq!(w.len(), gallery_distance_bfs(&c, &t));
        }
    }

    #[test]
    fn e_hexagon() {
        let h = hexagon_cycle(&Triangle::REFERENCE);
        assert_eq!(names(&h.chords), ["C", "Em", "E", "C#m", "A", "Am"]);
        assert_eq!(h.common_tone.to_string(), "E");
        assert!(h.tiling);
        assert_eq!(h.coset, FiniteS3::E);
        use Generator::*;
        assert_eq!(h.generators, [S3, S2, S3, S2, S3, S2]);
        let from_a = hexagon_cycle(&chord("A"));
        assert_eq!(names(&from_a.chords), ["A", "Am", "C", "Em", "E", "C#m"]);
    }

    #[test]
    fn translated_hexagon() {
        let shift = Vertex::new(-1, 2);
        let h = hexagon_cycle(&Triangle::REFERENCE.translate(shift));
        let base = hexagon_cycle(&Triangle::REFERENCE);
        let moved: Vec<Triangle> = base.triangles.iter().map(|t| t.translate(shift)).collect();
        assert_eq!(h.triangles, moved);
        assert_eq!(names(&h.chords), ["C#", "E#m", "E#", "Cxm", "A#", "A#m"]);
    }

    #[test]
    fn vertex_hexagon_classes() {
        use Generator::*;
        let g = hexagon_around(Vertex::FIFTH, None);
        assert!(!g.tiling);
        assert_eq!(g.coset, FiniteS3::S3S2);
        assert!(g.generators.iter().all(|x| [S1, S3].contains(x)));
        let c = hexagon_around(Vertex::ORIGIN, None);
        assert_eq!(c.coset, FiniteS3::S2S3);
        assert!(c.generators.iter().all(|x| [S1, S2].contains(x)));
    }

    #[test]
    fn rotation_examples() {
        let run = |s| names(&rotation_cycle(&chord(s), Sense::Plus));
        assert_eq!(run("C"), ["C", "E", "A"]);
        assert_eq!(run("C#m"), ["C#m", "Am", "Em"]);
        assert_eq!(run("G"), ["G", "C#", "F"]);
        let back = names(&rotation_cycle(&chord("C"), Sense::Minus));
        assert_eq!(back, ["C", "A", "E"]);
    }

    #[test]
    fn translation_examples() {
        assert_eq!(names(&translation_cycle(&chord("C"))), ["C#", "B", "C"]);
        assert_eq!(
            names(&translation_cycle(&chord("Am"))),
            ["A#m", "G#m", "Am"]
        );
    }

    #[test]
    fn stripe_examples() {
        let c = Triangle::REFERENCE;
        let fifths: Vec<String> = stripe(&c, StripeKind::Fifths, 2)
            .iter()
            .map(|t| name_triangle(t).to_string())
            .collect();
        assert_eq!(fifths, ["F", "Am", "C", "Em", "G"]);
        let pcs = |kind, n| -> Vec<u8> {
            stripe(&c, kind, n)
                .iter()
                .map(|t| name_triangle(t).root.pitch_class())
                .collect()
        };
        assert!(pcs(StripeKind::Hexatonic, 3)
            .iter()
            .all(|p| [0, 4, 8].contains(p)));
        assert!(pcs(StripeKind::Octatonic, 4)
            .iter()
            .all(|p| [0, 3, 6, 9].contains(p)));
        for kind in [
            StripeKind::Fifths,
            StripeKind::Hexatonic,
            StripeKind::Octatonic,
        ] {
            let s = stripe(&Triangle::down(2, -1), kind, 4);
            assert_eq!(s[4], Triangle::down(2, -1));
            assert!(s
                .windows(2)
                .all(|w| gallery_distance_bfs(&w[0], &w[1]) == 1));
        }
    }

    #[test]
    fn moonlight() {
        let syms: Vec<ChordSymbol> = MOONLIGHT.iter().map(|s| s.parse().unwrap()).collect();
        let a = analyze(&syms, None);
        assert_eq!(names(&a.chords), ["C#m", "E", "A", "D"]);
        let hex: Vec<String> = a
            .steps
            .iter()
            .map(|s| s.hexagon.unwrap().to_string())
            .collect();
        assert_eq!(hex, ["E", "E", "A"]);
        assert!(a.steps[2].common_tones.len() == 1 && !a.steps[2].tiling);

        let pair = analyze(&parse_progression("C#m, A").unwrap(), None);
        assert_eq!(pair.steps[0].hexagon.unwrap().to_string(), "E");
        let same = analyze(&parse_progression("C,C").unwrap(), None);
        assert_eq!(same.steps[0].length, 0);
    }

    #[test]
    fn drift() {
        let w = plr("RL");
        let major = w.apply(&Triangle::REFERENCE);
        let minor = w.apply(&Triangle::down(0, 0));
        assert_eq!(major, Triangle::up(1, 0));
        assert_eq!(name_triangle(&minor).to_string(), "Fm");
        assert!(gallery_distance_bfs(&major, &minor) > 1);
    }
}

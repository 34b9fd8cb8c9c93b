//! Spelled note names on the vertex lattice and a chord-symbol parser.
//!
//! A vertex `(p, q)` carries the note with line-of-fifths index `p + 4q`.
//! The third coordinate `q` is kept as the comma level, so `E#` and `F`, or
//! two copies of `D` a syntonic comma apart, stay distinct.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{wall_distance, Orientation, Triangle, Vertex};

const LETTERS: [char; 7] = ['F', 'C', 'G', 'D', 'A', 'E', 'B'];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct NoteName {
    pub fifth_index: i64,
    pub comma_level: i64,
}

impl NoteName {
    pub const fn new(fifth_index: i64, comma_level: i64) -> Self {
        NoteName {
            fifth_index,
            comma_level,
        }
    }

    pub fn letter(&self) -> char {
        LETTERS[(self.fifth_index + 1).rem_euclid(7) as usize]
    }

    /// Positive for sharps, negative for flats.
    pub fn accidentals(&self) -> i64 {
        (self.fifth_index + 1).div_euclid(7)
    }

    pub fn pitch_class(&self) -> u8 {
        pitch_class(self)
    }

    pub fn vertex(&self) -> Vertex {
        Vertex::new(self.fifth_index - 4 * self.comma_level, self.comma_level)
    }

    /// Spelling without the comma level, e.g. `"C#"`.
    pub fn spelling(&self) -> String {
        let n = self.accidentals();
        let mut s = String::from(self.letter());
        if n < 0 {
            s.push_str(&"b".repeat(n.unsigned_abs() as usize));
        } else {
            s.push_str(&"#".repeat((n % 2) as usize));
            s.push_str(&"x".repeat((n / 2) as usize));
        }
        s
    }

    /// Spelling followed by `"[q=n]"`.
    pub fn annotated(&self) -> String {
        format!("{}[q={}]", self.spelling(), self.comma_level)
    }
}

impl fmt::Display for NoteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spelling())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Mode {
    Major,
    Minor,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Major => "major",
            Mode::Minor => "minor",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ChordName {
    pub root: NoteName,
    pub mode: Mode,
}

impl ChordName {
    pub fn triangle(&self) -> Triangle {
        let v = self.root.vertex();
        match self.mode {
            Mode::Major => Triangle::up(v.p, v.q),
            Mode::Minor => Triangle::down(v.p, v.q),
        }
    }

    /// Chord symbol with the comma level, e.g. `"C#m[q=2]"`.
    pub fn annotated(&self) -> String {
        format!("{}[q={}]", self, self.root.comma_level)
    }
}

impl fmt::Display for ChordName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.root.spelling())?;
        if self.mode == Mode::Minor {
            f.write_str("m")?;
        }
        Ok(())
    }
}

pub fn spell_vertex(v: Vertex) -> NoteName {
    NoteName::new(v.p + 4 * v.q, v.q)
}

pub fn name_triangle(t: &Triangle) -> ChordName {
    ChordName {
        root: spell_vertex(t.root),
        mode: match t.orientation {
            Orientation::Up => Mode::Major,
            Orientation::Down => Mode::Minor,
        },
    }
}

pub fn pitch_class(n: &NoteName) -> u8 {
    (7 * n.fifth_index).rem_euclid(12) as u8
}

/// A parsed chord symbol whose comma level may still be open.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChordSymbol {
    pub fifth_index: i64,
    pub mode: Mode,
    pub comma_level: Option<i64>,
}

impl ChordSymbol {
    pub fn at_comma(&self, q: i64) -> ChordName {
        ChordName {
            root: NoteName::new(self.fifth_index, q),
            mode: self.mode,
        }
    }

    fn candidates(&self, around: i64, span: i64) -> impl Iterator<Item = ChordName> + '_ {
        (around - span..=around + span).map(move |q| self.at_comma(q))
    }

    /// The annotated comma level if present, otherwise the placement closest
    /// to the reference triangle C major in gallery distance. Ties go to the
    /// smaller `|q|`, then the smaller `q`.
    pub fn resolve(&self) -> ChordName {
        if let Some(q) = self.comma_level {
            return self.at_comma(q);
        }
        self.nearest(&Triangle::REFERENCE)
    }

    /// Placement closest to `context`, ignoring any annotation. Ties go to
    /// the placement closer to C major, then smaller `|q|`, then smaller `q`.
    pub fn nearest(&self, context: &Triangle) -> ChordName {
        let span = self.fifth_index.abs() + context.root.p.abs() + context.root.q.abs() + 2;
        self.candidates(context.root.q, span)
            .min_by_key(|c| {
                let t = c.triangle();
                let q = c.root.comma_level;
                (
                    wall_distance(context, &t),
                    wall_distance(&Triangle::REFERENCE, &t),
                    q.abs(),
                    q,
                )
            })
            .expect("candidate range is non-empty")
    }

    /// Annotation first, then a forced default level, then the nearest
    /// placement to `context` (or to C major without context).
    pub fn resolve_with(&self, forced: Option<i64>, context: Option<&Triangle>) -> ChordName {
        match (self.comma_level, forced, context) {
            (Some(q), _, _) | (None, Some(q), _) => self.at_comma(q),
            (None, None, Some(ctx)) => self.nearest(ctx),
            (None, None, None) => self.resolve(),
        }
    }
}

impl FromStr for ChordSymbol {
    type Err = Error;

    /// Grammar: letter `A`–`G`, accidentals from `#`, `b`, `x`, optional
    /// `m` or `min`, optional `[q=<int>]`.
    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().collect();
        let mut i = 0;
        let letter = *chars
            .first()
            .ok_or_else(|| Error::parse(s, 0, "empty chord symbol"))?;
        let base = LETTERS
            .iter()
            .position(|&l| l == letter)
            .ok_or_else(|| Error::parse(s, 0, format!("unknown letter {letter:?}")))?
            as i64
            - 1;
        i += 1;
        let mut acc = 0i64;
        while let Some(&c) = chars.get(i) {
            match c {
                '#' | '\u{266f}' => acc += 1,
                'x' | '\u{1d12a}' => acc += 2,
                'b' | '\u{266d}' => acc -= 1,
                _ => break,
            }
            i += 1;
        }
        let mut mode = Mode::Major;
        let rest: String = chars[i..].iter().collect();
        if rest.starts_with("min") {
            mode = Mode::Minor;
            i += 3;
        } else if rest.starts_with('m') {
            mode = Mode::Minor;
            i += 1;
        }
        let mut comma_level = None;
        if chars.get(i) == Some(&'[') {
            let close = chars[i..]
                .iter()
                .position(|&c| c == ']')
                .map(|k| k + i)
                .ok_or_else(|| Error::parse(s, i, "unclosed comma annotation"))?;
            let body: String = chars[i + 1..close].iter().collect();
            let value = body
                .strip_prefix("q=")
                .ok_or_else(|| Error::parse(s, i + 1, "expected 'q=' in comma annotation"))?;
            let q = value
                .replace('\u{2212}', "-")
                .parse::<i64>()
                .map_err(|_| Error::parse(s, i + 3, "comma level is not an integer"))?;
            comma_level = Some(q);
            i = close + 1;
        }
        if i < chars.len() {
            return Err(Error::parse(s, i, format!("unexpected {:?}", chars[i])));
        }
        Ok(ChordSymbol {
            fifth_index: base + 7 * acc,
            mode,
            comma_level,
        })
    }
}

/// Parses a chord symbol and places it with [`ChordSymbol::resolve`].
pub fn parse_chord(s: &str) -> Result<(ChordName, Triangle)> {
    let name = s.parse::<ChordSymbol>()?.resolve();
    Ok((name, name.triangle()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spell_examples() {
        assert_eq!(spell_vertex(Vertex::ORIGIN).to_string(), "C");
        let eb = spell_vertex(Vertex::new(1, -1));
        assert_eq!((eb.to_string(), eb.fifth_index), ("Eb".into(), -3));
        let cs = spell_vertex(Vertex::new(-1, 2));
        assert_eq!((cs.to_string(), cs.fifth_index), ("C#".into(), 7));
        assert_eq!(NoteName::new(14, 0).to_string(), "Cx");
        assert_eq!(NoteName::new(-9, 0).to_string(), "Bbb");
    }

    #[test]
    fn vertex_labels_near_origin() {
        let labels = [
            ((-1, 0), "F"),
            ((0, 0), "C"),
            ((1, 0), "G"),
            ((2, 0), "D"),
            ((0, -1), "Ab"),
            ((1, -1), "Eb"),
            ((2, -1), "Bb"),
            ((-1, 1), "A"),
            ((0, 1), "E"),
            ((1, 1), "B"),
            ((-1, 2), "C#"),
            ((0, 2), "G#"),
        ];
        for ((p, q), name) in labels {
            assert_eq!(spell_vertex(Vertex::new(p, q)).to_string(), name);
        }
    }

    #[test]
    fn name_triangle_examples() {
        assert_eq!(name_triangle(&Triangle::up(0, 0)).to_string(), "C");
        let em = name_triangle(&Triangle::down(0, 1));
        assert_eq!((em.to_string(), em.mode), ("Em".into(), Mode::Minor));
        assert_eq!(name_triangle(&Triangle::down(0, 0)).to_string(), "Cm");
    }

    #[test]
    fn pitch_classes() {
        assert_eq!(pitch_class(&NoteName::new(0, 0)), 0);
        assert_eq!(pitch_class(&NoteName::new(-3, 0)), 3);
        assert_eq!(pitch_class(&NoteName::new(6, 0)), 6);
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_chord("C").unwrap().1, Triangle::REFERENCE);
        let (fsm, t) = parse_chord("F#m").unwrap();
        assert_eq!((fsm.root.fifth_index, fsm.mode), (6, Mode::Minor));
        assert_eq!(name_triangle(&t), fsm);
        let (ebm, t) = parse_chord("Ebm[q=-1]").unwrap();
        assert_eq!(ebm.root.comma_level, -1);
        assert_eq!(t, Triangle::down(1, -1));
        assert_eq!(parse_chord("Amin").unwrap().0.to_string(), "Am");
        assert_eq!(parse_chord("C#m").unwrap().1, Triangle::down(-1, 2));
        assert_eq!(parse_chord("A").unwrap().1, Triangle::up(-1, 1));
    }

    #[test]
    fn parse_errors_carry_positions() {
        let pos = |s: &str| match s.parse::<ChordSymbol>() {
            Err(Error::Parse { position, .. }) => position,
            other => panic!("{s}: {other:?}"),
        };
        assert_eq!(pos(""), 0);
        assert_eq!(pos("H"), 0);
        assert_eq!(pos("Cq"), 1);
        assert_eq!(pos("Cm[q=1"), 2);
        assert_eq!(pos("Cm[r=1]"), 3);
        assert_eq!(pos("C[q=a]"), 4);
    }

    #[test]
    fn annotated_round_trip() {
        for p in -8..=8 {
            for q in -8..=8 {
                for t in [Triangle::up(p, q), Triangle::down(p, q)] {
                    let text = name_triangle(&t).annotated();
                    assert_eq!(parse_chord(&text).unwrap().1, t, "{text}");
                }
            }
        }
    }

    #[test]
    fn nearest_placement_follows_context() {
        let sym: ChordSymbol = "D".parse().unwrap();
        assert_eq!(
            sym.nearest(&Triangle::up(-1, 1)).triangle(),
            Triangle::up(-2, 1)
        );
        assert_eq!(
            sym.resolve_with(Some(0), None).triangle(),
            Triangle::up(2, 0)
        );
    }
}

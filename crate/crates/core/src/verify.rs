//! Brute-force invariant suites over finite portions of the groups.
//!
//! Each suite takes a radius that bounds the elements, lattice boxes or
//! exponent boxes it enumerates. The registry [`SUITES`] is ordered by name.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::group::{ball, AffinePermutation, ElementType, Generator, Order};
use crate::lattice::{
    gallery_distance_bfs, triangle_of, wall_distance, Isometry, Triangle, Vertex,
};
use crate::pitch::{name_triangle, parse_chord, pitch_class, spell_vertex, NoteName};
use crate::progression::{
    hexagon_around, hexagon_cycle, plr_path, rotate, stripe, translation_cycle, PlrMove, PlrWord,
    Sense, StripeKind,
};
use crate::render::{render_svg, RenderSpec};
use crate::riemann::{
    generated_subgroup, greater_diesis, lesser_diesis, p_to_r, pythagorean_comma, r_to_p, semitone,
    syntonic_comma, D12Coset, PElement, RElement,
};
use crate::subgroup::{
    coset_mod_t, decompose, hexagon_of, is_translation, psi, semidirect_mul, split_even,
    translation_coords, translation_generator, FiniteS3, TranslationVector,
};

const MAX_RECORDED: usize = 10;

/// Collects check outcomes, keeping the first few failure messages.
#[derive(Debug, Default)]
pub struct Checker {
    checks: u64,
    failed: u64,
    failures: Vec<String>,
}

impl Checker {
    pub fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_RECORDED {
                self.failures.push(msg());
            }
        }
    }

    pub fn eq<T: PartialEq + std::fmt::Debug>(
        &mut self,
        left: T,
        right: T,
        what: impl FnOnce() -> String,
    ) {
        let ok = left == right;
        self.check(ok, || format!("{}: {:?} != {:?}", what(), left, right));
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub name: String,
    pub description: String,
    pub radius: usize,
    pub checks: u64,
    pub failed: u64,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failed == 0 && self.checks > 0
    }
}

pub struct Suite {
    pub name: &'static str,
    pub description: &'static str,
    pub run: fn(usize, &mut Checker),
}

pub const SUITES: &[Suite] = &[
    Suite {
        name: "bijection",
        description: "windows, triangles and axis coordinates correspond one to one",
        run: bijection,
    },
    Suite {
        name: "classification",
        description: "element types agree with orders and isometry determinants",
        run: classification,
    },
    Suite {
        name: "coxeter",
        description: "defining relations of the generators",
        run: coxeter,
    },
    Suite {
        name: "even",
        description: "even subgroup of index 2 and its semidirect product with s1",
        run: even,
    },
    Suite {
        name: "group_axioms",
        description: "associativity, identity, inverses and the multiplication rule",
        run: group_axioms,
    },
    Suite {
        name: "hexagons",
        description: "hexagon cycles, rotations, translation cycles and the hexagon tiling labels",
        run: hexagons,
    },
    Suite {
        name: "isometry",
        description: "lattice realization is a homomorphism onto triangle-preserving isometries",
        run: isometry,
    },
    Suite {
        name: "length",
        description: "word length equals breadth-first gallery distance",
        run: length,
    },
    Suite {
        name: "pitch",
        description: "note spelling, triad naming and chord parsing",
        run: pitch,
    },
    Suite {
        name: "plr",
        description: "contextual moves, minimal paths, parallel shifts and drift",
        run: plr,
    },
    Suite {
        name: "point_reflections",
        description: "normal forms, comma subgroup, dihedral quotient and the map to Schritte",
        run: point_reflections,
    },
    Suite {
        name: "reduce",
        description: "reduced words evaluate back and descents shorten",
        run: reduce,
    },
    Suite {
        name: "render",
        description: "deterministic drawings",
        run: render,
    },
    Suite {
        name: "schritt_wechsel",
        description: "group law of Schritte and Wechsel",
        run: schritt_wechsel,
    },
    Suite {
        name: "stripes",
        description: "fifths, hexatonic and octatonic stripes",
        run: stripes,
    },
    Suite {
        name: "translations",
        description: "translation subgroup is abelian, normal and of index 6",
        run: translations,
    },
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.name).collect()
}

pub fn run_suite(suite: &Suite, radius: usize) -> SuiteReport {
    let mut c = Checker::default();
    (suite.run)(radius, &mut c);
    SuiteReport {
        name: suite.name.to_string(),
        description: suite.description.to_string(),
        radius,
        checks: c.checks,
        failed: c.failed,
        failures: c.failures,
    }
}

/// Runs the named suite, or all suites for `"all"`; `None` for an unknown
/// name.
pub fn run(name: &str, radius: usize) -> Option<Vec<SuiteReport>> {
    if name == "all" {
        return Some(SUITES.iter().map(|s| run_suite(s, radius)).collect());
    }
    SUITES
        .iter()
        .find(|s| s.name == name)
        .map(|s| vec![run_suite(s, radius)])
}

fn gen(g: Generator) -> AffinePermutation {
    AffinePermutation::generator(g)
}

fn triangle_box(r: usize) -> Vec<Triangle> {
    let r = r as i64;
    let mut out = Vec::new();
    for p in -r..=r {
        for q in -r..=r {
            out.push(Triangle::up(p, q));
            out.push(Triangle::down(p, q));
        }
    }
    out
}

/// Triangle counts at each gallery distance from the reference triangle.
fn bfs_layers(r: usize) -> Vec<usize> {
    let mut seen = HashSet::from([Triangle::REFERENCE]);
    let mut layer = vec![Triangle::REFERENCE];
    let mut sizes = vec![1];
    for _ in 0..r {
        let mut next = Vec::new();
        for t in &layer {
            for n in t.neighbors() {
                if seen.insert(n) {
                    next.push(n);
                }
            }
        }
        sizes.push(next.len());
        layer = next;
    }
    sizes
}

fn coxeter(_r: usize, c: &mut Checker) {
    let e = AffinePermutation::IDENTITY;
    for g in Generator::ALL {
        c.eq(gen(g) * gen(g), e, || format!("{g}^2"));
        let iso = Isometry::generator(g);
        c.eq(iso.compose(&iso), Isometry::IDENTITY, || {
            format!("{g} isometry squared")
        });
    }
    for (i, j) in [
        (Generator::S1, Generator::S2),
        (Generator::S2, Generator::S3),
        (Generator::S3, Generator::S1),
    ] {
        let p = gen(i) * gen(j);
        c.eq(p * p * p, e, || format!("({i}{j})^3"));
        c.check(!p.is_identity(), || format!("{i}{j} is not the identity"));
        let m = Isometry::generator(i).compose(&Isometry::generator(j));
        c.eq(m.compose(&m).compose(&m), Isometry::IDENTITY, || {
            format!("({i}{j})^3 as isometry")
        });
        c.check(m != Isometry::IDENTITY, || {
            format!("{i}{j} isometry is trivial")
        });
    }
}

fn group_axioms(r: usize, c: &mut Checker) {
    let e = AffinePermutation::IDENTITY;
    let small = ball(r.min(3));
    for f in &small {
        for g in &small {
            for h in &small {
                c.eq((*f * *g) * *h, *f * (*g * *h), || {
                    format!("associativity {f} {g} {h}")
                });
            }
        }
    }
    for f in ball(r) {
        let [a, b, cc] = f.window();
        c.check(
            a + b + cc == 0
                && a.rem_euclid(3) != b.rem_euclid(3)
                && b.rem_euclid(3) != cc.rem_euclid(3)
                && a.rem_euclid(3) != cc.rem_euclid(3),
            || format!("{f} is a valid window"),
        );
        c.eq(f * e, f, || format!("{f}·e"));
        c.eq(e * f, f, || format!("e·{f}"));
        c.eq(f * f.inverse(), e, || format!("{f}·{f}⁻¹"));
        c.eq(f.inverse() * f, e, || format!("{f}⁻¹·{f}"));
        for g in Generator::ALL {
            c.eq(f.compose(&gen(g)), f.right_mult(g), || {
                format!("{f}·{g} rule")
            });
            c.eq(gen(g).compose(&f), f.left_mult(g), || format!("{g}·{f}"));
        }
        for n in -7..=7 {
            c.eq(f.eval(n + 3), f.eval(n) + 3, || {
                format!("{f} periodic at {n}")
            });
            c.eq(f.compose(&f.inverse()).eval(n), n, || {
                format!("{f} inverse at {n}")
            });
        }
    }
}

fn reduce(r: usize, c: &mut Checker) {
    let elements = ball(r);
    let mut depth: HashMap<AffinePermutation, usize> = HashMap::new();
    let mut layer = vec![AffinePermutation::IDENTITY];
    depth.insert(AffinePermutation::IDENTITY, 0);
    for d in 1..=r {
        let mut next = Vec::new();
        for f in &layer {
            for g in Generator::ALL {
                let h = f.right_mult(g);
                if let Entry::Vacant(e) = depth.entry(h) {
                    e.insert(d);
                    next.push(h);
                }
            }
        }
        layer = next;
    }
    for f in elements {
        let w = f.reduce();
        c.eq(AffinePermutation::from_word(&w), f, || {
            format!("from_word(reduce({f}))")
        });
        c.eq(w.len(), f.length(), || format!("|reduce({f})|"));
        c.eq(Some(&f.length()), depth.get(&f), || {
            format!("length of {f} vs Cayley graph depth")
        });
        c.check(w.letters().windows(2).all(|p| p[0] != p[1]), || {
            format!("{w} has a repeated letter")
        });
        let descents = f.right_descents();
        for g in Generator::ALL {
            let expected = if descents.contains(&g) {
                f.length() - 1
            } else {
                f.length() + 1
            };
            c.eq(f.right_mult(g).length(), expected, || {
                format!("length of {f}·{g}")
            });
        }
    }
}

fn bijection(r: usize, c: &mut Checker) {
    let elements = ball(r);
    let windows: HashSet<_> = elements.iter().collect();
    c.eq(windows.len(), elements.len(), || "distinct windows".into());
    let triangles: HashSet<_> = elements.iter().map(triangle_of).collect();
    c.eq(triangles.len(), elements.len(), || {
        "distinct triangles".into()
    });
    let mut by_length = vec![0usize; r + 1];
    for f in &elements {
        by_length[f.length()] += 1;
        let coords = f.center_coords();
        c.eq(coords.to_perm().ok(), Some(*f), || {
            format!("coordinates of {f}")
        });
        c.eq(coords.as_array().iter().sum::<i64>(), 0, || {
            format!("coordinate sum of {f}")
        });
        let t = triangle_of(f);
        c.eq(t.axis_coords(), coords, || {
            format!("geometric coordinates of {f}")
        });
        c.eq(t.to_perm(), *f, || format!("triangle of {f}"));
    }
    c.eq(by_length, bfs_layers(r), || {
        "ball layers vs gallery layers".into()
    });
}

fn length(r: usize, c: &mut Checker) {
    for f in ball(r) {
        let t = triangle_of(&f);
        c.eq(
            f.length(),
            gallery_distance_bfs(&Triangle::REFERENCE, &t),
            || format!("length of {f}"),
        );
        c.eq(
            f.length() as u64,
            wall_distance(&Triangle::REFERENCE, &t),
            || format!("walls of {f}"),
        );
    }
}

fn classification(r: usize, c: &mut Checker) {
    for f in ball(r) {
        let iso = Isometry::of_perm(&f);
        let kind = f.classify();
        c.eq(iso.det() == 1, f.is_even(), || format!("parity of {f}"));
        let expected = match (f.order(), iso.det()) {
            (Order::Finite(1), _) => ElementType::Identity,
            (Order::Finite(2), -1) => ElementType::Reflection,
            (Order::Finite(3), 1) => ElementType::Rotation,
            (Order::Infinite, 1) => ElementType::Translation,
            (Order::Infinite, -1) => ElementType::GlideReflection,
            (o, d) => {
                c.check(false, || format!("{f} has order {o:?} and determinant {d}"));
                continue;
            }
        };
        c.eq(kind, expected, || format!("type of {f}"));
        c.eq(
            kind == ElementType::Translation,
            iso.is_translation() && !f.is_identity(),
            || format!("translation test for {f}"),
        );
    }
}

fn isometry(r: usize, c: &mut Checker) {
    let small = ball(r.min(4));
    for f in &small {
        for g in &small {
            let lhs = Isometry::of_perm(&(*f * *g));
            c.eq(
                lhs,
                Isometry::of_perm(f).compose(&Isometry::of_perm(g)),
                || format!("homomorphism on {f}, {g}"),
            );
        }
    }
    let probes = [
        Triangle::down(2, -1),
        Triangle::up(-3, 1),
        Triangle::down(0, 4),
    ];
    for f in ball(r) {
        let iso = Isometry::of_perm(&f);
        c.check(iso.det().abs() == 1, || format!("det of {f}"));
        c.eq(
            iso.apply_triangle(&Triangle::REFERENCE),
            triangle_of(&f),
            || format!("image of reference under {f}"),
        );
        for a in &probes {
            let b = Triangle::REFERENCE;
            c.eq(
                wall_distance(&iso.apply_triangle(a), &iso.apply_triangle(&b)),
                wall_distance(a, &b),
                || format!("{f} preserves distance from {a}"),
            );
        }
    }
    for t in triangle_box(r) {
        c.eq(
            wall_distance(&Triangle::REFERENCE, &t) as usize,
            gallery_distance_bfs(&Triangle::REFERENCE, &t),
            || format!("walls to {t}"),
        );
        c.eq(triangle_of(&t.to_perm()), t, || format!("{t} round trip"));
    }
}

fn translations(r: usize, c: &mut Checker) {
    let t: Vec<AffinePermutation> = (1..=3)
        .map(|i| translation_generator(i).expect("index"))
        .collect();
    c.eq(t[0] * t[1] * t[2], AffinePermutation::IDENTITY, || {
        "t1 t2 t3".into()
    });
    for x in &t {
        c.eq(x.classify(), ElementType::Translation, || {
            format!("{x} is a translation")
        });
        for y in &t {
            c.eq(*x * *y, *y * *x, || format!("{x} and {y} commute"));
        }
        for g in Generator::ALL {
            let s = gen(g);
            c.check(is_translation(&(s * *x * s)), || {
                format!("{g} conjugate of {x}")
            });
        }
    }
    for a in -3..=3 {
        for b in -3..=3 {
            let tv = TranslationVector::new(a, b);
            c.eq(translation_coords(&tv.to_perm()).ok(), Some(tv), || {
                format!("coordinates of {tv}")
            });
            c.eq(tv.to_perm(), t[0].pow(a) * t[1].pow(b), || {
                format!("window of {tv}")
            });
        }
    }
    let elements = ball(r);
    let mut cosets = HashSet::new();
    for f in &elements {
        let decompositions: Vec<FiniteS3> = FiniteS3::ALL
            .into_iter()
            .filter(|s| is_translation(&(*f * s.to_perm().inverse())))
            .collect();
        c.eq(decompositions.len(), 1, || {
            format!("unique decomposition of {f}")
        });
        let (tv, sigma) = decompose(f);
        c.eq(tv.to_perm() * sigma.to_perm(), *f, || format!("{f} = t·σ"));
        cosets.insert(sigma);
        let hex = hexagon_of(f);
        c.check(triangle_of(f).contains(hex.center()), || {
            format!("hexagon center of {f}")
        });
    }
    if r >= 3 {
        c.eq(cosets.len(), 6, || {
            "index of the translation subgroup".into()
        });
    }
    let small = ball(r.min(4));
    for f in &small {
        for g in &small {
            c.eq(
                coset_mod_t(&(*f * *g)),
                coset_mod_t(f) * coset_mod_t(g),
                || format!("quotient on {f}, {g}"),
            );
        }
    }
    for a in FiniteS3::ALL {
        for b in FiniteS3::ALL {
            c.eq(
                Some(a * b),
                FiniteS3::from_perm(&(a.to_perm() * b.to_perm())),
                || format!("S3 table {a} {b}"),
            );
        }
    }
}

fn even(r: usize, c: &mut Checker) {
    let s1 = gen(Generator::S1);
    let small = ball(r.min(4));
    let elements = ball(r);
    let evens = elements.iter().filter(|f| f.is_even()).count();
    c.check(!s1.is_even(), || "s1 is odd".into());
    for f in &elements {
        c.eq(f.is_even(), f.length() % 2 == 0, || {
            format!("parity of {f} vs length")
        });
        let (eps, n) = split_even(f);
        c.check(n.is_even(), || format!("even part of {f}"));
        let back = if eps { s1 * n } else { n };
        c.eq(back, *f, || format!("split of {f}"));
        if f.is_even() {
            c.check(psi(f).is_even(), || format!("psi({f}) is even"));
            c.eq(psi(&psi(f)), *f, || format!("psi is an involution on {f}"));
        }
    }
    // odd elements are s1 times even ones
    c.eq(
        elements.iter().filter(|f| (s1 * **f).is_even()).count(),
        elements.len() - evens,
        || "cosets of the even subgroup".into(),
    );
    for f in &small {
        for g in &small {
            c.eq((*f * *g).is_even(), f.is_even() == g.is_even(), || {
                format!("parity of {f}·{g}")
            });
            c.eq(
                semidirect_mul(split_even(f), split_even(g)),
                split_even(&(*f * *g)),
                || format!("semidirect product on {f}, {g}"),
            );
            if f.is_even() && g.is_even() {
                c.eq(psi(&(*f * *g)), psi(f) * psi(g), || {
                    format!("psi multiplicative on {f}, {g}")
                });
            }
        }
    }
}

fn r_box(k: i64) -> Vec<RElement> {
    let mut out = Vec::new();
    for w in [false, true] {
        for u in -k..=k {
            for v in -k..=k {
                out.push(RElement {
                    wechsel: w,
                    quint: u,
                    terz: v,
                });
            }
        }
    }
    out
}

fn p_box(k: i64) -> Vec<PElement> {
    let mut out = Vec::new();
    for flip in [false, true] {
        for a in -k..=k {
            for b in -k..=k {
                out.push(PElement::new(flip, a, b));
            }
        }
    }
    out
}

fn schritt_wechsel(r: usize, c: &mut Checker) {
    let k = (r as i64).clamp(1, 4);
    let elements = r_box(k);
    let e = RElement::IDENTITY;
    for x in &elements {
        c.eq(x.compose(&e), *x, || format!("{x}·e"));
        c.eq(e.compose(x), *x, || format!("e·{x}"));
        c.eq(x.compose(&x.inverse()), e, || format!("{x} inverse"));
        if x.wechsel {
            c.eq(x.compose(x), e, || format!("{x} squared"));
            c.eq(x.order(), Order::Finite(2), || format!("order of {x}"));
        } else if *x != e {
            c.eq(x.order(), Order::Infinite, || format!("order of {x}"));
        }
        c.check(x.order() != Order::Finite(3), || format!("{x} has order 3"));
    }
    for x in &elements {
        for y in &elements {
            let p = x.compose(y);
            if x.wechsel && y.wechsel {
                c.check(!p.wechsel, || format!("{x}·{y} is a Schritt"));
                c.eq(
                    p,
                    RElement::schritt(x.quint - y.quint, x.terz - y.terz),
                    || format!("Wechsel law {x}, {y}"),
                );
            }
        }
    }
    let small = r_box(k.min(2));
    for x in &small {
        for y in &small {
            for z in &small {
                c.eq(x.compose(y).compose(z), x.compose(&y.compose(z)), || {
                    format!("associativity {x} {y} {z}")
                });
            }
        }
    }
    let rot = gen(Generator::S2) * gen(Generator::S3);
    c.eq(rot.order(), Order::Finite(3), || "order of s2s3".into());
}

fn point_reflections(r: usize, c: &mut Checker) {
    let k = (r as i64).clamp(1, 4);
    let elements = p_box(k);
    let small = p_box(k.min(2));
    for x in &small {
        for y in &small {
            for z in &small {
                c.eq(x.compose(y).compose(z), x.compose(&y.compose(z)), || {
                    format!("associativity {x} {y} {z}")
                });
            }
        }
    }
    for x in &elements {
        c.eq(x.compose(&x.inverse()), PElement::IDENTITY, || {
            format!("{x} inverse")
        });
        c.eq(r_to_p(&p_to_r(x)), *x, || {
            format!("p_to_r is invertible at {x}")
        });
        if x.flip {
            for y in &elements {
                if !y.flip {
                    c.eq(x.compose(y).compose(&x.inverse()), y.inverse(), || {
                        format!("{x} inverts {y}")
                    });
                }
            }
        }
        for k_gen in [lesser_diesis(), greater_diesis()] {
            c.check(
                x.compose(&k_gen).compose(&x.inverse()).in_comma_subgroup(),
                || format!("{x} conjugate of {k_gen}"),
            );
        }
    }
    let images: HashSet<RElement> = elements.iter().map(p_to_r).collect();
    c.eq(images.len(), elements.len(), || {
        "p_to_r is injective".into()
    });
    for x in &elements {
        for y in &elements {
            c.eq(p_to_r(&x.compose(y)), p_to_r(y).compose(&p_to_r(x)), || {
                format!("anti-homomorphism on {x}, {y}")
            });
            c.eq(
                x.compose(y).project_d12(),
                x.project_d12().compose(&y.project_d12()),
                || format!("projection on {x}, {y}"),
            );
        }
    }
    for i in 1..=3 {
        let p = PElement::generator(i).expect("index");
        c.eq(p.compose(&p), PElement::IDENTITY, || {
            format!("pi{i} squared")
        });
    }
    let full: HashSet<D12Coset> = (0..3)
        .flat_map(|a| {
            (0..4).flat_map(move |b| [false, true].map(|f| PElement::new(f, a, b).project_d12()))
        })
        .collect();
    c.eq(full.len(), 24, || "size of the quotient".into());
    let box_image: HashSet<D12Coset> = elements.iter().map(PElement::project_d12).collect();
    c.check(box_image.is_subset(&full), || "quotient image".into());
    let h = semitone().project_d12();
    let rho = PElement::generator(1).expect("index").project_d12();
    c.eq(h.order(), 12, || "order of the semitone coset".into());
    c.eq(rho.order(), 2, || "order of rho".into());
    c.eq(rho.compose(&h).compose(&rho.inverse()), h.inverse(), || {
        "dihedral relation".into()
    });
    c.eq(generated_subgroup(&[h, rho]), full, || {
        "h and rho generate the quotient".into()
    });
    for (name, comma) in [
        ("lesser diesis", lesser_diesis()),
        ("greater diesis", greater_diesis()),
        ("syntonic comma", syntonic_comma()),
        ("pythagorean comma", pythagorean_comma()),
    ] {
        c.check(comma.in_comma_subgroup(), || format!("{name} lies in K"));
    }
    // K is generated by the two dieses
    for i in -k..=k {
        for j in -k..=k {
            let x = lesser_diesis().pow(i).compose(&greater_diesis().pow(j));
            c.eq(x, PElement::translation(3 * i, 4 * j), || {
                format!("diesis word {i}, {j}")
            });
        }
    }
    for x in &elements {
        c.eq(
            x.in_comma_subgroup(),
            x.project_d12() == D12Coset::IDENTITY,
            || format!("kernel at {x}"),
        );
    }
    let probes = [
        Triangle::REFERENCE,
        Triangle::down(1, -2),
        Triangle::up(-2, 3),
    ];
    for x in &small {
        for y in &small {
            for t in &probes {
                c.eq(
                    x.compose(y).left_action(t),
                    x.left_action(&y.left_action(t)),
                    || format!("left action {x} {y} on {t}"),
                );
            }
        }
        c.eq(x.left_action(&Triangle::REFERENCE), x.triangle(), || {
            format!("image of reference under {x}")
        });
    }
    // right action realizes the Schritte and the Seitenwechsel as PLR words
    let words: [(RElement, &str); 3] = [
        (RElement::quintschritt(), "RL"),
        (RElement::terzschritt(), "PL"),
        (RElement::seitenwechsel(), "P"),
    ];
    for t in triangle_box(r.min(4)) {
        for (x, w) in &words {
            let plr: PlrWord = w.parse().expect("valid word");
            c.eq(x.act(&t), plr.apply(&t), || format!("{x} as {w} on {t}"));
        }
        let q = RElement::quintschritt().act(&t);
        let step = if t.is_major() { 1 } else { -1 };
        c.eq(
            spell_vertex(q.root).fifth_index - spell_vertex(t.root).fifth_index,
            step,
            || format!("Quintschritt direction on {t}"),
        );
    }
    let name = |t: Triangle| name_triangle(&t).to_string();
    c.eq(
        name(RElement::quintschritt().act(&Triangle::REFERENCE)),
        "G".into(),
        || "Q on C".into(),
    );
    c.eq(
        name(RElement::quintschritt().act(&Triangle::down(0, 0))),
        "Fm".into(),
        || "Q on Cm".into(),
    );
}

fn pitch(r: usize, c: &mut Checker) {
    let n = (r as i64).max(8);
    let mut names: HashSet<(i64, i64)> = HashSet::new();
    for p in -n..=n {
        for q in -n..=n {
            let v = Vertex::new(p, q);
            let note = spell_vertex(v);
            c.check(names.insert((note.fifth_index, note.comma_level)), || {
                format!("{v} spelled twice")
            });
            c.eq(note.vertex(), v, || {
                format!("vertex of {}", note.annotated())
            });
            let base = "FCGDAEB".find(note.letter()).expect("letter") as i64 - 1;
            c.eq(base + 7 * note.accidentals(), note.fifth_index, || {
                format!("spelling of {v}")
            });
            c.eq(
                pitch_class(&spell_vertex(v + Vertex::FIFTH)),
                (pitch_class(&note) + 7) % 12,
                || format!("fifth above {v}"),
            );
            c.eq(
                pitch_class(&spell_vertex(v + Vertex::THIRD)),
                (pitch_class(&note) + 4) % 12,
                || format!("third above {v}"),
            );
            for t in [Triangle::up(p, q), Triangle::down(p, q)] {
                let chord = name_triangle(&t);
                c.eq(chord.triangle(), t, || format!("name of {t}"));
                c.eq(
                    parse_chord(&chord.annotated()).ok().map(|x| x.1),
                    Some(t),
                    || format!("parse {}", chord.annotated()),
                );
            }
        }
    }
    let near_origin = [
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
    for ((p, q), label) in near_origin {
        c.eq(
            spell_vertex(Vertex::new(p, q)).to_string(),
            label.to_string(),
            || format!("label at ({p},{q})"),
        );
    }
}

fn plr(r: usize, c: &mut Checker) {
    let triangles = triangle_box(r.min(5));
    let sources = [Triangle::REFERENCE, Triangle::down(1, -1)];
    for t in &triangles {
        for m in PlrMove::ALL {
            let once = m.apply(t);
            c.eq(m.apply(&once), *t, || {
                format!("{m:?} is an involution at {t}")
            });
            c.eq(once.orientation != t.orientation, true, || {
                format!("{m:?} swaps mode at {t}")
            });
            let shared = t.vertices().iter().filter(|v| once.contains(**v)).count();
            c.eq(shared, 2, || format!("{m:?} keeps an edge at {t}"));
        }
        for s in &sources {
            let w = plr_path(s, t);
            c.eq(w.apply(s), *t, || format!("path {s} to {t}"));
            c.eq(w.len(), gallery_distance_bfs(s, t), || {
                format!("path length {s} to {t}")
            });
            c.eq(plr_path(t, s).len(), w.len(), || {
                format!("symmetric path length {s} {t}")
            });
        }
    }
    let mut lengths: HashMap<(Triangle, Triangle), usize> = HashMap::new();
    let mut d = |x: &Triangle, y: &Triangle| {
        *lengths
            .entry((*x, *y))
            .or_insert_with(|| plr_path(x, y).len())
    };
    for a in triangles.iter().step_by(13) {
        for b in triangles.iter().step_by(17) {
            for m in triangles.iter().step_by(19) {
                let (ab, am, mb) = (d(a, b), d(a, m), d(m, b));
                c.check(ab <= am + mb, || format!("triangle inequality {a} {m} {b}"));
            }
        }
    }
    let words: Vec<PlrWord> = ["", "P", "L", "R", "RL", "PL", "LR", "RLP", "PRL", "LPRL"]
        .iter()
        .map(|w| w.parse().expect("valid word"))
        .collect();
    let shift = Vertex::new(2, -1);
    for w in &words {
        for t in &triangles {
            let moved = t.translate(shift);
            c.eq(w.apply(&moved).root - w.apply(t).root, shift, || {
                format!("parallel shift of {w} at {t}")
            });
        }
    }
    let rl: PlrWord = "RL".parse().expect("valid word");
    let (major, minor) = (
        rl.apply(&Triangle::REFERENCE),
        rl.apply(&Triangle::down(0, 0)),
    );
    c.eq(name_triangle(&major).to_string(), "G".into(), || {
        "RL on C".into()
    });
    c.eq(name_triangle(&minor).to_string(), "Fm".into(), || {
        "RL on Cm".into()
    });
    c.check(gallery_distance_bfs(&major, &minor) > 1, || "drift".into());
}

/// Hexagon tiling drawing: picture position, label. The picture uses units
/// of one third of a hexagon width horizontally and half a hexagon height
/// vertically.
pub const TILING_DRAWING: [((i64, i64), &str); 13] = [
    ((0, 0), "E"),
    ((0, 2), "E#"),
    ((0, -2), "Eb"),
    ((-3, -1), "F"),
    ((-3, 1), "F#"),
    ((3, -1), "D"),
    ((3, 1), "D#"),
    ((-6, 0), "G"),
    ((-6, 2), "G#"),
    ((-6, -2), "Gb"),
    ((6, 0), "C#"),
    ((6, 2), "Cx"),
    ((6, -2), "C"),
];

/// Translation exponents of the hexagon drawn at a picture position.
pub fn tiling_drawing_base((x, y): (i64, i64)) -> TranslationVector {
    let e2 = x / 3;
    TranslationVector::new((y + e2) / 2, e2)
}

fn hexagons(r: usize, c: &mut Checker) {
    let triangles = triangle_box(r.min(5));
    for t in &triangles {
        let h = hexagon_cycle(t);
        c.eq(h.triangles.len(), 6, || format!("hexagon size at {t}"));
        c.eq(h.triangles[0], *t, || format!("hexagon starts at {t}"));
        c.check(h.tiling, || format!("tiling hexagon at {t}"));
        c.eq(h.center, hexagon_of(&t.to_perm()).center(), || {
            format!("hexagon center at {t}")
        });
        for k in 0..6 {
            let (a, b) = (h.triangles[k], h.triangles[(k + 1) % 6]);
            c.check(a.contains(h.center), || format!("{a} contains the center"));
            c.eq(wall_distance(&a, &b), 1, || format!("{a} and {b} adjacent"));
            c.eq(a.to_perm().right_mult(h.generators[k]), b.to_perm(), || {
                format!("generator from {a}")
            });
            c.check(h.generators[k] != h.generators[(k + 1) % 6], || {
                format!("alternation at {a}")
            });
        }
        for sense in [Sense::Plus, Sense::Minus] {
            let once = rotate(t, sense, Vertex::THIRD);
            let thrice = rotate(&rotate(&once, sense, Vertex::THIRD), sense, Vertex::THIRD);
            c.eq(thrice, *t, || format!("rotation order at {t}"));
            c.eq(once.orientation, t.orientation, || {
                format!("rotation keeps mode at {t}")
            });
            c.check(once != *t, || format!("rotation moves {t}"));
        }
        let cycle = translation_cycle(t);
        c.eq(cycle[2], name_triangle(t), || {
            format!("translation cycle closes at {t}")
        });
        let step = TranslationVector::new(1, -1).lattice_vector();
        let moved = hexagon_cycle(&t.translate(step));
        let expected: Vec<Triangle> = h.triangles.iter().map(|x| x.translate(step)).collect();
        c.eq(moved.triangles, expected, || {
            format!("hexagon equivariance at {t}")
        });
    }
    let vertex_classes = [
        (Vertex::THIRD, FiniteS3::E, [Generator::S2, Generator::S3]),
        (
            Vertex::FIFTH,
            FiniteS3::S3S2,
            [Generator::S1, Generator::S3],
        ),
        (
            Vertex::ORIGIN,
            FiniteS3::S2S3,
            [Generator::S1, Generator::S2],
        ),
    ];
    for (v, coset, pair) in vertex_classes {
        for d in [Vertex::new(0, 0), Vertex::new(-1, 2), Vertex::new(3, -3)] {
            let h = hexagon_around(v + d, None);
            c.eq(h.coset, coset, || {
                format!("coset of the hexagon at {}", v + d)
            });
            c.check(h.generators.iter().all(|g| pair.contains(g)), || {
                format!("generators at {}", v + d)
            });
        }
    }
    let names =
        |v: Vec<crate::pitch::ChordName>| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    let e_hex = hexagon_cycle(&Triangle::REFERENCE);
    c.eq(
        names(e_hex.chords),
        ["C", "Em", "E", "C#m", "A", "Am"]
            .map(String::from)
            .to_vec(),
        || "E hexagon".into(),
    );
    let mut labels: BTreeMap<String, String> = BTreeMap::new();
    for (pos, label) in TILING_DRAWING {
        let center = crate::subgroup::HexagonId {
            base: tiling_drawing_base(pos),
        }
        .center();
        labels.insert(label.to_string(), spell_vertex(center).to_string());
    }
    for (label, got) in labels {
        c.eq(got, label.clone(), || format!("tiling label {label}"));
    }
}

fn stripes(r: usize, c: &mut Checker) {
    let count = r.max(1) + 2;
    for seed in triangle_box(r.min(3)) {
        for kind in [
            StripeKind::Fifths,
            StripeKind::Hexatonic,
            StripeKind::Octatonic,
        ] {
            let s = stripe(&seed, kind, count);
            c.eq(s.len(), 2 * count + 1, || {
                format!("{kind} stripe size at {seed}")
            });
            c.eq(s[count], seed, || {
                format!("{kind} stripe centered at {seed}")
            });
            c.check(
                s.windows(2).all(|w| wall_distance(&w[0], &w[1]) == 1),
                || format!("{kind} stripe adjacency at {seed}"),
            );
            let pcs: HashSet<u8> = s
                .iter()
                .flat_map(|t| t.vertices())
                .map(|v| pitch_class(&spell_vertex(v)))
                .collect();
            match kind {
                StripeKind::Hexatonic => c.check(pcs.len() <= 6, || {
                    format!("hexatonic pitch classes at {seed}")
                }),
                StripeKind::Octatonic => c.check(pcs.len() <= 8, || {
                    format!("octatonic pitch classes at {seed}")
                }),
                StripeKind::Fifths => {
                    let roots: Vec<NoteName> = s
                        .iter()
                        .filter(|t| t.is_major())
                        .map(|t| spell_vertex(t.root))
                        .collect();
                    c.check(
                        roots
                            .windows(2)
                            .all(|w| w[1].fifth_index == w[0].fifth_index + 1),
                        || format!("fifths stripe roots at {seed}"),
                    );
                }
            }
        }
    }
    let fifths: Vec<String> = stripe(&Triangle::REFERENCE, StripeKind::Fifths, 2)
        .iter()
        .map(|t| name_triangle(t).to_string())
        .collect();
    c.check(
        fifths.contains(&"F".into()) && fifths.contains(&"G".into()),
        || "subdominant and dominant".into(),
    );
}

fn render(r: usize, c: &mut Checker) {
    for radius in 0..=r.min(4) {
        let spec = RenderSpec::new(Triangle::REFERENCE, radius);
        let svg = render_svg(&spec);
        c.eq(svg.clone(), render_svg(&spec), || {
            format!("determinism at radius {radius}")
        });
        let expected: usize = bfs_layers(radius).iter().sum();
        c.eq(svg.matches("<polygon").count(), expected, || {
            format!("triangle count at radius {radius}")
        });
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorollaryRow {
    pub window: AffinePermutation,
    pub word: String,
    pub even: bool,
    pub coords: [i64; 3],
    /// Sum of the positive axis coordinates.
    pub formula: u64,
    /// Breadth-first gallery distance of the triangle from the reference.
    pub distance: usize,
}

impl CorollaryRow {
    pub fn agrees(&self) -> bool {
        self.formula == self.distance as u64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorollarySummary {
    pub total: usize,
    pub agree: usize,
    pub disagree_even: usize,
    pub disagree_odd: usize,
}

/// The coordinate distance formula against the gallery distance, for every
/// element of the ball.
pub fn corollary_table(radius: usize) -> Vec<CorollaryRow> {
    ball(radius)
        .into_iter()
        .map(|f| CorollaryRow {
            window: f,
            word: f.reduce().to_string(),
            even: f.is_even(),
            coords: f.center_coords().as_array(),
            formula: f.corollary_distance(),
            distance: gallery_distance_bfs(&Triangle::REFERENCE, &triangle_of(&f)),
        })
        .collect()
}

pub fn corollary_summary(rows: &[CorollaryRow]) -> CorollarySummary {
    let bad = |even: bool| {
        rows.iter()
            .filter(|r| !r.agrees() && r.even == even)
            .count()
    };
    CorollarySummary {
        total: rows.len(),
        agree: rows.iter().filter(|r| r.agrees()).count(),
        disagree_even: bad(true),
        disagree_odd: bad(false),
    }
}

/// Tab separated, one header line and one line per element.
pub fn corollary_tsv(rows: &[CorollaryRow]) -> String {
    let mut out = String::from("window\tword\tparity\tc1\tc2\tc3\tformula\tdistance\tagree\n");
    for r in rows {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            r.window,
            r.word,
            if r.even { "even" } else { "odd" },
            r.coords[0],
            r.coords[1],
            r.coords[2],
            r.formula,
            r.distance,
            if r.agrees() { "yes" } else { "no" },
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_sorted_and_unique() {
        let names = suite_names();
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(names, sorted);
        assert!(run("nope", 1).is_none());
    }

    #[test]
    fn all_suites_pass_at_radius_3() {
        for report in run("all", 3).unwrap() {
            assert!(report.passed(), "{}: {:?}", report.name, report.failures);
        }
    }

    #[test]
    fn corollary_counterexamples() {
        let rows = corollary_table(3);
        let row = |w: &str| {
            rows.iter()
                .find(|r| r.window.to_string() == w)
                .unwrap()
                .clone()
        };
        let odd = row("[-3,2,1]");
        assert_eq!((odd.formula, odd.distance, odd.even), (2, 3, false));
        let s = corollary_summary(&rows);
        assert!(s.disagree_odd > 0);
        assert_eq!(s.total, 19);
    }
}

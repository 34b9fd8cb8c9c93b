use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use tonnetz::lattice::{gallery_distance_bfs, triangle_of};
use tonnetz::pitch::{name_triangle, ChordName, ChordSymbol};
use tonnetz::progression::{
    analyze, generator_path, hexagon_cycle, parse_progression, plr_path, rotation_cycle, stripe,
    translation_cycle, PlrWord, Sense, StripeKind,
};
use tonnetz::render::{render_svg, LabelMode, RenderSpec, Style};
use tonnetz::riemann::{p_to_r, PElement, RElement};
use tonnetz::verify::{corollary_summary, corollary_table, corollary_tsv};
use tonnetz::{AffinePermutation, Error, Triangle, Word};

/// Affine permutations, triads and Riemann transformations on the Tonnetz.
///
/// Elements are given as a window `[a,b,c]`, a generator word `s2 s3 s2`
/// (or `e`), or a chord symbol such as `C#m` or `Ebm[q=-1]`.
#[derive(Parser)]
#[command(name = "tonnetz", version)]
struct Cli {
    /// Print a single JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical reduced word, window and length.
    Reduce { element: String },
    /// Product of two elements, the second applied first.
    Mult { left: String, right: String },
    /// Element type, order, center coordinates and distances.
    Classify { element: String },
    /// Chord name of the element's triangle.
    Chord { element: String },
    /// Window and triangle of a chord.
    Locate { chord: String },
    /// Shortest PLR word and generator word between two chords.
    Path { from: String, to: String },
    /// Apply a PLR word (rightmost letter first) to a chord.
    Apply { word: String, chord: String },
    /// The tiling hexagon of a chord: common tone and six-chord cycle.
    Hexagon { chord: String },
    /// Orbit under the order 3 rotation about E.
    Rotation {
        chord: String,
        #[arg(long, default_value = "+", allow_hyphen_values = true)]
        sense: String,
    },
    /// Images under t1, t2t1 and t3t2t1.
    Translation { chord: String },
    /// Consecutive triads of a stripe, centered at the chord.
    Stripe {
        chord: String,
        #[arg(long)]
        kind: String,
        #[arg(long, default_value_t = 3)]
        count: usize,
    },
    /// Resolve a comma separated progression and report each step.
    Analyze { progression: String },
    /// Schritt-Wechsel and point reflection groups.
    Riemann {
        #[command(subcommand)]
        command: RiemannCommand,
    },
    /// Run invariant suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 5)]
        radius: usize,
    },
    /// Write an SVG drawing of the triangles around a chord.
    Render(RenderArgs),
    /// Compare the coordinate distance formula with gallery distance.
    Corollary {
        #[arg(long, default_value_t = 6)]
        radius: usize,
        /// Write the full table as tab separated values.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum RiemannCommand {
    /// Product of two Schritt-Wechsel elements, e.g. "Q^1 Z^0 W".
    Mult { left: String, right: String },
    /// Coset of a point reflection element "(a,b,flip)" in the dihedral quotient.
    Quotient { element: String },
    /// Whether a point reflection element lies in the comma subgroup.
    Comma { element: String },
}

#[derive(Args)]
struct RenderArgs {
    #[arg(long, default_value = "C")]
    center: String,
    #[arg(long, default_value_t = 2)]
    radius: usize,
    #[arg(long)]
    out: PathBuf,
    /// PLR word drawn as arrows from the center.
    #[arg(long)]
    path: Option<String>,
    #[arg(long, default_value = "notes")]
    labels: String,
    /// Extra chords to highlight.
    #[arg(long)]
    highlight: Vec<String>,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn new(text: String, json: Value) -> Self {
        Output {
            text,
            json,
            ok: true,
        }
    }
}

fn forced_comma() -> Result<Option<i64>, Failure> {
    match std::env::var("TONNETZ_DEFAULT_COMMA") {
        Ok(v) => {
            v.trim().parse().map(Some).map_err(|_| {
                Failure::Usage(format!("TONNETZ_DEFAULT_COMMA is not an integer: {v:?}"))
            })
        }
        Err(_) => Ok(None),
    }
}

fn chord(s: &str) -> Result<ChordName, Failure> {
    let sym: ChordSymbol = s.parse()?;
    Ok(sym.resolve_with(forced_comma()?, None))
}

fn element(s: &str) -> Result<AffinePermutation, Failure> {
    let t = s.trim();
    if t.starts_with('[') {
        Ok(t.parse()?)
    } else if t.starts_with('s') || t == "e" {
        Ok(AffinePermutation::from_word(&t.parse::<Word>()?))
    } else {
        Ok(chord(t)?.triangle().to_perm())
    }
}

fn word_text(w: &Word) -> String {
    w.to_string()
}

fn plr_text(w: &PlrWord) -> String {
    if w.is_empty() {
        "e".into()
    } else {
        w.to_string()
    }
}

fn chord_json(c: &ChordName) -> Value {
    let t = c.triangle();
    json!({
        "chord": c.to_string(),
        "annotated": c.annotated(),
        "mode": c.mode.to_string(),
        "triangle": t.to_string(),
        "window": t.to_perm().window(),
    })
}

fn chord_list(cs: &[ChordName]) -> String {
    cs.iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn run(cli: Cli) -> Result<Output, Failure> {
    let out = match cli.command {
        Command::Reduce { element: e } => {
            let f = element(&e)?;
            let w = f.reduce();
            Output::new(
                format!("{}\nwindow: {f}\nlength: {}\n", word_text(&w), w.len()),
                json!({"word": word_text(&w), "window": f.window(), "length": w.len()}),
            )
        }
        Command::Mult { left, right } => {
            let (f, g) = (element(&left)?, element(&right)?);
            let p = f * g;
            Output::new(
                format!("{p}\nword: {}\n", word_text(&p.reduce())),
                json!({"left": f.window(), "right": g.window(), "product": p.window(), "word": word_text(&p.reduce())}),
            )
        }
        Command::Classify { element: e } => {
            let f = element(&e)?;
            let coords = f.center_coords();
            let dist = gallery_distance_bfs(&Triangle::REFERENCE, &triangle_of(&f));
            let kind = f.classify();
            let order = f.order();
            Output::new(
                format!(
                    "{f}\ntype: {kind}\norder: {order}\ncenter: {coords}\ncorollary distance: {}\ngallery distance: {dist}\nlength: {}\nparity: {}\n",
                    f.corollary_distance(),
                    f.length(),
                    if f.is_even() { "even" } else { "odd" },
                ),
                json!({
                    "window": f.window(),
                    "type": kind.to_string(),
                    "order": order.to_string(),
                    "center": coords.as_array(),
                    "corollary_distance": f.corollary_distance(),
                    "gallery_distance": dist,
                    "length": f.length(),
                    "even": f.is_even(),
                }),
            )
        }
        Command::Chord { element: e } => {
            let f = element(&e)?;
            let c = name_triangle(&triangle_of(&f));
            Output::new(
                format!(
                    "{c}\nannotated: {}\ntriangle: {}\n",
                    c.annotated(),
                    c.triangle()
                ),
                chord_json(&c),
            )
        }
        Command::Locate { chord: s } => {
            let c = chord(&s)?;
            let t = c.triangle();
            Output::new(
                format!(
                    "window: {}\ntriangle: {t}\nchord: {}\n",
                    t.to_perm(),
                    c.annotated()
                ),
                chord_json(&c),
            )
        }
        Command::Path { from, to } => {
            let (a, b) = (chord(&from)?.triangle(), chord(&to)?.triangle());
            let w = plr_path(&a, &b);
            let g = generator_path(&a, &b);
            let trace: Vec<String> = w
                .trace(&a)
                .iter()
                .map(|t| name_triangle(t).to_string())
                .collect();
            Output::new(
                format!(
                    "plr: {}\ngenerators: {}\nlength: {}\nchords: {}\n",
                    plr_text(&w),
                    word_text(&g),
                    w.len(),
                    trace.join(" ")
                ),
                json!({"plr": w.to_string(), "generators": word_text(&g), "length": w.len(), "chords": trace}),
            )
        }
        Command::Apply { word, chord: s } => {
            let w: PlrWord = word.parse()?;
            let c = name_triangle(&w.apply(&chord(&s)?.triangle()));
            Output::new(
                format!(
                    "{c}\nannotated: {}\ntriangle: {}\n",
                    c.annotated(),
                    c.triangle()
                ),
                chord_json(&c),
            )
        }
        Command::Hexagon { chord: s } => {
            let h = hexagon_cycle(&chord(&s)?.triangle());
            let gens: Vec<String> = h.generators.iter().map(|g| g.to_string()).collect();
            Output::new(
                format!(
                    "common tone: {}\ncycle: {}\ngenerators: {}\ncoset: {}\n",
                    h.common_tone.annotated(),
                    chord_list(&h.chords),
                    gens.join(" "),
                    h.coset,
                ),
                json!({
                    "common_tone": h.common_tone.to_string(),
                    "center": [h.center.p, h.center.q],
                    "cycle": h.chords.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    "triangles": h.triangles.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                    "generators": gens,
                    "coset": h.coset.to_string(),
                    "tiling": h.tiling,
                }),
            )
        }
        Command::Rotation { chord: s, sense } => {
            let sense: Sense = sense.parse()?;
            let cycle = rotation_cycle(&chord(&s)?.triangle(), sense);
            Output::new(
                format!("{}\n", chord_list(&cycle)),
                json!({"cycle": cycle.iter().map(|c| c.to_string()).collect::<Vec<_>>()}),
            )
        }
        Command::Translation { chord: s } => {
            let cycle = translation_cycle(&chord(&s)?.triangle());
            Output::new(
                format!("{}\n", chord_list(&cycle)),
                json!({"cycle": cycle.iter().map(|c| c.to_string()).collect::<Vec<_>>()}),
            )
        }
        Command::Stripe {
            chord: s,
            kind,
            count,
        } => {
            let kind: StripeKind = kind.parse()?;
            if count == 0 {
                return Err(Failure::Usage("--count must be positive".into()));
            }
            let ts = stripe(&chord(&s)?.triangle(), kind, count);
            let names: Vec<ChordName> = ts.iter().map(name_triangle).collect();
            Output::new(
                format!("{}\n", chord_list(&names)),
                json!({
                    "kind": kind.to_string(),
                    "chords": names.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    "triangles": ts.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                }),
            )
        }
        Command::Analyze { progression } => {
            let syms = parse_progression(&progression)?;
            let a = analyze(&syms, forced_comma()?);
            let mut text = format!(
                "chords: {}\n",
                a.chords
                    .iter()
                    .map(|c| c.annotated())
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            for s in &a.steps {
                let common: Vec<String> = s.common_tones.iter().map(|n| n.to_string()).collect();
                text.push_str(&format!(
                    "{} -> {}: plr {} length {} common [{}] hexagon {}\n",
                    s.from,
                    s.to,
                    if s.path.is_empty() { "e" } else { &s.path },
                    s.length,
                    common.join(" "),
                    s.hexagon.map_or("none".to_string(), |n| n.to_string()),
                ));
            }
            let json = serde_json::to_value(&a).map_err(|e| Failure::Domain(e.to_string()))?;
            Output::new(text, json)
        }
        Command::Riemann { command } => riemann(command)?,
        Command::Verify { suite, radius } => {
            let reports = tonnetz::verify::run(&suite, radius).ok_or_else(|| {
                Failure::Usage(format!(
                    "unknown suite {suite:?}; expected all or one of {}",
                    tonnetz::verify::suite_names().join(", ")
                ))
            })?;
            let ok = reports.iter().all(|r| r.passed());
            let mut text = String::new();
            for r in &reports {
                text.push_str(&format!(
                    "{} {:<18} {:>8} checks  {}\n",
                    if r.passed() { "PASS" } else { "FAIL" },
                    r.name,
                    r.checks,
                    r.description
                ));
                for f in &r.failures {
                    text.push_str(&format!("     {f}\n"));
                }
            }
            let mut out = Output::new(
                text,
                json!({"radius": radius, "passed": ok, "suites": reports}),
            );
            out.ok = ok;
            out
        }
        Command::Render(args) => {
            let center = chord(&args.center)?.triangle();
            let mut spec = RenderSpec::new(center, args.radius);
            spec.labels = args.labels.parse::<LabelMode>()?;
            spec.highlights.push((center, Style::Primary));
            if let Some(p) = &args.path {
                let w: PlrWord = p.parse()?;
                for t in w.trace(&center).into_iter().skip(1) {
                    spec.highlights.push((t, Style::Secondary));
                }
                spec.path = Some(w);
            }
            for h in &args.highlight {
                spec.highlights.push((chord(h)?.triangle(), Style::Accent));
            }
            let svg = render_svg(&spec);
            std::fs::write(&args.out, &svg).map_err(|e| {
                Failure::Domain(format!("cannot write {}: {e}", args.out.display()))
            })?;
            let count = spec.triangles().len();
            Output::new(
                format!(
                    "wrote {} ({count} triangles, {} bytes)\n",
                    args.out.display(),
                    svg.len()
                ),
                json!({"out": args.out.display().to_string(), "triangles": count, "bytes": svg.len()}),
            )
        }
        Command::Corollary { radius, out } => {
            let rows = corollary_table(radius);
            let s = corollary_summary(&rows);
            if let Some(path) = &out {
                std::fs::write(path, corollary_tsv(&rows)).map_err(|e| {
                    Failure::Domain(format!("cannot write {}: {e}", path.display()))
                })?;
            }
            let mut text = format!(
                "elements: {}\nagree: {}\ndisagree (even): {}\ndisagree (odd): {}\n",
                s.total, s.agree, s.disagree_even, s.disagree_odd
            );
            for r in rows.iter().filter(|r| !r.agrees()) {
                text.push_str(&format!(
                    "{} {} formula {} distance {}\n",
                    r.window, r.word, r.formula, r.distance
                ));
            }
            Output::new(text, json!({"radius": radius, "summary": s, "rows": rows}))
        }
    };
    Ok(out)
}

fn riemann(command: RiemannCommand) -> Result<Output, Failure> {
    Ok(match command {
        RiemannCommand::Mult { left, right } => {
            let (x, y): (RElement, RElement) = (left.parse()?, right.parse()?);
            let p = x.compose(&y);
            Output::new(
                format!("{p}\n"),
                json!({"product": p.to_string(), "wechsel": p.wechsel, "quint": p.quint, "terz": p.terz}),
            )
        }
        RiemannCommand::Quotient { element } => {
            let x: PElement = element.parse()?;
            let d = x.project_d12();
            Output::new(
                format!("coset: {d}\norder: {}\n", d.order()),
                json!({"element": x.to_string(), "flip": d.flip, "a_mod3": d.a_mod3, "b_mod4": d.b_mod4, "order": d.order()}),
            )
        }
        RiemannCommand::Comma { element } => {
            let x: PElement = element.parse()?;
            let k = x.in_comma_subgroup();
            let r = p_to_r(&x);
            Output::new(
                format!(
                    "in comma subgroup: {k}\ncoset: {}\nschritt-wechsel: {r}\n",
                    x.project_d12()
                ),
                json!({"element": x.to_string(), "in_comma_subgroup": k, "coset": x.project_d12().to_string(), "schritt_wechsel": r.to_string()}),
            )
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let json_mode = cli.json;
    match run(cli) {
        Ok(out) => {
            if json_mode {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out.json).expect("values serialize")
                );
            } else {
                print!("{}", out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

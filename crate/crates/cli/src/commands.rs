use std::fmt::Write;
use std::fs;
use std::path::{Path, PathBuf};

use prees::diagram::SearchOutcome;
use prees::fsa::{strip_reduction_pair_recognizer, to_dot, to_records};
use prees::group::{bfs_identity_oracle, verify_embedding, verify_short_trivial_words, verify_surjectivity, BallError};
use prees::{
    cayley_ball, check_axiom, combing_acceptor, fellow_traveler_check, geodesic_acceptor, is_geodesic_word,
    load_pree, parse_word, strongly_reduce, validate_pree, AxiomOutcome, CayleyBall, Check, CombingPredicateTable,
    CombingReading, Dfa, DiagramSearch, FellowTravelerReport, OracleConfig, Pree, Status,
    VerificationReport, Word, WordProblem,
};

use crate::{Command, Format, Language, Reading, Which};

pub struct Outcome {
    pub code: u8,
    pub text: String,
}

pub enum Failure {
    Usage(String),
    Invalid(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Invalid(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Invalid(m) => m,
        }
    }
}

type Result<T> = std::result::Result<T, Failure>;

fn done(ok: bool, text: String) -> Result<Outcome> {
    Ok(Outcome {
        code: if ok { 0 } else { 1 },
        text,
    })
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write(path: &PathBuf, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// Loads and validates; an invalid pree is reported with its first
/// violation.
fn load(path: &Path) -> Result<Pree> {
    let p = load_pree(&read(path)?).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
    let report = validate_pree(&p);
    if !report.passed() {
        let first = report
            .checks
            .iter()
            .find(|c| c.status == Status::Fail)
            .map(|c| format!("{}: {}", c.name, c.witnesses.first().cloned().unwrap_or_default()))
            .unwrap_or_default();
        return Err(Failure::Invalid(format!("{}: invalid pree ({first})", path.display())));
    }
    Ok(p)
}

fn word(p: &Pree, text: &str) -> Result<Word> {
    parse_word(p, text).map_err(|e| Failure::Usage(e.to_string()))
}

fn reading(r: Reading) -> CombingReading {
    match r {
        Reading::Forward => CombingReading::Forward,
        Reading::Literal => CombingReading::Literal,
    }
}

fn render(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Text => report.render_text(),
        Format::Records => report.render_records(),
    }
}

fn show(p: &Pree, w: &Word) -> String {
    w.display(p).to_string()
}

fn q(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn run(command: Command, format: Format) -> Result<Outcome> {
    match command {
        Command::Validate { pree } => validate(&pree, format),
        Command::Axioms { pree } => {
            let p = load(&pree)?;
            let r = axioms(&p);
            done(r.passed(), render(&r, format))
        }
        Command::Reduce { pree, word: w, trace } => {
            let p = load(&pree)?;
            let w = word(&p, &w)?;
            let (out, steps) = strongly_reduce(&p, &w);
            let mut text = match format {
                Format::Text => format!(
                    "input: {}\nreduced: {}\nlength: {}\nsteps: {}\n",
                    show(&p, &w),
                    show(&p, &out),
                    out.len(),
                    steps.steps.len()
                ),
                Format::Records => format!(
                    "reduce input={} output={} length={} steps={}\n",
                    q(&show(&p, &w)),
                    q(&show(&p, &out)),
                    out.len(),
                    steps.steps.len()
                ),
            };
            if trace {
                for line in steps.render(&p, &w).lines() {
                    match format {
                        Format::Text => {
                            let _ = writeln!(text, "  {line}");
                        }
                        Format::Records => {
                            let _ = writeln!(text, "step value={}", q(line));
                        }
                    }
                }
            }
            done(true, text)
        }
        Command::Solve {
            pree,
            word: w,
            oracle,
            bound,
        } => solve(&pree, &w, oracle, bound, format),
        Command::Geodesic { pree, word: w } => {
            let p = load(&pree)?;
            let w = word(&p, &w)?;
            let symbols: Vec<u32> = w.iter().map(|e| e.index() as u32).collect();
            let accepted = geodesic_acceptor(&p).accepts(&symbols);
            let direct = is_geodesic_word(&p, &w);
            let text = match format {
                Format::Text => format!(
                    "word: {}\ngeodesic: {}\n",
                    show(&p, &w),
                    if accepted { "yes" } else { "no" }
                ),
                Format::Records => {
                    format!("geodesic word={} accepted={accepted} direct={direct}\n", q(&show(&p, &w)))
                }
            };
            if accepted != direct {
                return Err(Failure::Invalid("acceptor and direct check disagree".into()));
            }
            done(accepted, text)
        }
        Command::Comb {
            pree,
            enumerate,
            reading: r,
        } => {
            let p = load(&pree)?;
            let wp = WordProblem::new(&p);
            let table = CombingPredicateTable::build(&wp, reading(r));
            let l = combing_acceptor(&p, &table);
            let words = l.enumerate(enumerate);
            let mut text = match format {
                Format::Text => format!(
                    "combing reading={} bad_triples={} states={} words={} max_length={enumerate}\n",
                    table.reading().name(),
                    table.count(),
                    l.num_states(),
                    words.len()
                ),
                Format::Records => format!(
                    "combing reading={} bad_triples={} states={} words={} max_length={enumerate}\n",
                    q(table.reading().name()),
                    table.count(),
                    l.num_states(),
                    words.len()
                ),
            };
            for s in &words {
                let w = symbols_to_word(s);
                match format {
                    Format::Text => {
                        let _ = writeln!(text, "{}", show(&p, &w));
                    }
                    Format::Records => {
                        let _ = writeln!(text, "word value={}", q(&show(&p, &w)));
                    }
                }
            }
            done(true, text)
        }
        Command::Ball { pree, r, out } => {
            let p = load(&pree)?;
            let ball = cayley_ball(&p, r).map_err(|e: BallError| Failure::Usage(e.to_string()))?;
            let records = ball.export_records(&p);
            let text = match (&out, format) {
                (Some(path), _) => {
                    write(path, &records)?;
                    ball_summary(&ball)
                }
                (None, Format::Records) => records,
                (None, Format::Text) => {
                    let mut t = ball_summary(&ball);
                    for (id, e) in ball.elements().iter().enumerate() {
                        let _ = writeln!(t, "{id:>6} {:>3}  {}", e.distance, show(&p, &e.representative));
                    }
                    t
                }
            };
            done(ball.unresolved() == 0, text)
        }
        Command::Fellow {
            pree,
            r,
            k,
            language,
            reading: rd,
        } => {
            let p = load(&pree)?;
            let wp = WordProblem::new(&p);
            let l = language_for(&wp, language, rd);
            let report = fellow_traveler_check(&wp, &l, r, k);
            let text = match format {
                Format::Text => report.render(&p),
                Format::Records => fellow_records(&p, &report),
            };
            done(report.pass, text)
        }
        Command::Diagram {
            pree,
            boundary,
            max_area,
            dot,
        } => diagram(&pree, &boundary, max_area, dot.as_ref(), format),
        Command::ExportFsa {
            pree,
            which,
            reading: rd,
            dot,
            text,
        } => {
            let p = load(&pree)?;
            let (name, d) = match which {
                Which::Geodesic => ("geodesic", geodesic_acceptor(&p)),
                Which::Combing => ("combing", language_for(&WordProblem::new(&p), Language::Combing, rd)),
                Which::Pair => ("pair", strip_reduction_pair_recognizer(&p).determinize().minimize()),
            };
            let summary = format!(
                "automaton name={name} states={} accepting={}\n",
                d.num_states(),
                (0..d.num_states() as u32).filter(|&s| d.is_accepting(s)).count()
            );
            let out = match (dot, text) {
                (Some(path), _) => {
                    write(&path, &to_dot(&p, &d, name))?;
                    summary
                }
                (None, Some(path)) => {
                    write(&path, &to_records(&p, &d))?;
                    summary
                }
                (None, None) => to_records(&p, &d),
            };
            done(true, out)
        }
        Command::Verify { pree, r, k } => verify(&pree, r, k, format),
    }
}

fn symbols_to_word(s: &[u32]) -> Word {
    Word(s.iter().map(|&x| prees::Elem(x as u16)).collect())
}

fn language_for(wp: &WordProblem, language: Language, r: Reading) -> Dfa {
    match language {
        Language::Geodesic => geodesic_acceptor(wp.pree()),
        Language::Combing => combing_acceptor(wp.pree(), &CombingPredicateTable::build(wp, reading(r))),
    }
}

fn validate(path: &Path, format: Format) -> Result<Outcome> {
    let p = load_pree(&read(path)?).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
    let report = validate_pree(&p);
    Ok(Outcome {
        code: if report.passed() { 0 } else { 3 },
        text: render(&report, format),
    })
}

fn axioms(p: &Pree) -> VerificationReport {
    let mut r = VerificationReport::new("axioms");
    for n in [4, 5] {
        let mut c = Check::new(format!("A({n})"));
        match check_axiom(p, n) {
            AxiomOutcome::Counterexample(w) => {
                c.violation(|| w.describe(p));
                r.push(c.with_summary("counterexample"));
            }
            _ => r.push(c.with_summary("holds")),
        }
    }
    r
}

fn solve(path: &Path, w: &str, oracle: bool, bound: usize, format: Format) -> Result<Outcome> {
    let p = load(path)?;
    let w = word(&p, w)?;
    let wp = WordProblem::new(&p);
    let answer = wp.is_identity(&w);
    let method = if wp.dehn_applies() { "dehn" } else { "oracle" };
    let label = |a: Option<bool>| match a {
        Some(true) => "identity",
        Some(false) => "not identity",
        None => "unknown",
    };
    let mut text = match format {
        Format::Text => format!("word: {}\nresult: {}\nmethod: {method}\n", show(&p, &w), label(answer)),
        Format::Records => format!(
            "solve word={} result={} method={method}\n",
            q(&show(&p, &w)),
            q(label(answer))
        ),
    };
    let mut agree = true;
    if oracle {
        let v = bfs_identity_oracle(&p, &w, bound).decided();
        agree = v.is_none() || answer.is_none() || v == answer;
        match format {
            Format::Text => {
                let _ = writeln!(text, "oracle: {} (bound {bound})", label(v));
                let _ = writeln!(text, "agreement: {}", if agree { "yes" } else { "no" });
            }
            Format::Records => {
                let _ = writeln!(text, "oracle result={} bound={bound} agreement={agree}", q(label(v)));
            }
        }
    }
    done(answer == Some(true) && agree, text)
}

fn ball_summary(ball: &CayleyBall) -> String {
    let spheres: Vec<String> = ball.sphere_sizes().iter().map(|s| s.to_string()).collect();
    format!(
        "ball radius={} elements={} spheres={} unresolved={}\n",
        ball.radius(),
        ball.len(),
        spheres.join(","),
        ball.unresolved()
    )
}

fn fellow_records(p: &Pree, r: &FellowTravelerReport) -> String {
    if let Some(why) = &r.skipped {
        return format!("fellow status=skipped reason={}\n", q(why));
    }
    let mut out = format!(
        "fellow radius={} target={} words={} pairs={} observed={} status={}\n",
        r.radius,
        r.target,
        r.words,
        r.pairs,
        r.k_required,
        if r.pass { "pass" } else { "fail" }
    );
    for (kind, w) in [("worst", &r.worst), ("violation", &r.first_violation)] {
        if let Some(w) = w {
            let _ = writeln!(
                out,
                "pair kind={kind} u={} v={} step={} distance={}",
                q(&show(p, &w.u)),
                q(&show(p, &w.v)),
                w.step,
                w.distance
            );
        }
    }
    out
}

fn diagram(path: &Path, boundary: &str, max_area: usize, dot: Option<&PathBuf>, format: Format) -> Result<Outcome> {
    let p = load(path)?;
    let w = word(&p, boundary)?;
    if w.len() < 2 {
        return Err(Failure::Usage("boundary word needs at least two letters".into()));
    }
    let d = match DiagramSearch::new(&p).with_max_area(max_area).run(&w) {
        SearchOutcome::Found(d) => d,
        other => {
            let why = match other {
                SearchOutcome::NotTrivial => "word is not the identity",
                SearchOutcome::Capped => "search node cap reached",
                _ => "no diagram within the area budget",
            };
            let text = match format {
                Format::Text => format!("no diagram: {why}\n"),
                Format::Records => format!("diagram status=none reason={}\n", q(why)),
            };
            return done(false, text);
        }
    };
    if let Some(path) = dot {
        write(path, &d.to_dot(&p))?;
    }
    let c = d.curvature();
    let s = d.stats();
    let degrees: Vec<String> = s.internal_degrees.iter().map(|d| d.to_string()).collect();
    let mut text = match format {
        Format::Text => format!(
            "area: {}\ncurvature: {} = {} ({})\ndelta2={} delta3={} delta4={} delta5={} galleries={}\ninternal degrees: [{}]\ngallery inequality: {}\n",
            d.area(),
            c.lhs,
            c.rhs,
            if c.equal() { "equal" } else { "NOT equal" },
            s.delta2,
            s.delta3,
            s.delta4,
            s.delta5,
            s.galleries,
            degrees.join(" "),
            if s.boundary_length < 3 {
                "not applicable"
            } else if s.gallery_equality() {
                "equality"
            } else if s.gallery_inequality_holds() {
                "holds"
            } else {
                "FAILS"
            }
        ),
        Format::Records => format!(
            "stats area={} lhs={} rhs={} delta2={} delta3={} delta4={} delta5={} galleries={} internal_degrees={}\n",
            d.area(),
            c.lhs,
            c.rhs,
            s.delta2,
            s.delta3,
            s.delta4,
            s.delta5,
            s.galleries,
            q(&degrees.join(" "))
        ),
    };
    text.push_str(&d.trace(&p));
    done(true, text)
}

fn verify(path: &Path, radius: usize, k: usize, format: Format) -> Result<Outcome> {
    let p = load(path)?;
    let mut out = String::new();
    let mut rows: Vec<(&str, Status, String)> = Vec::new();
    let row = |r: &VerificationReport| {
        let status = if !r.passed() {
            Status::Fail
        } else if r.checks.iter().any(|c| c.status == Status::Skipped) {
            Status::Skipped
        } else {
            Status::Pass
        };
        let detail = r.checks.last().map(|c| c.summary.clone()).unwrap_or_default();
        (status, detail)
    };

    let ax = axioms(&p);
    let holds = ax.passed();
    out.push_str(&render(&ax, format));
    let (s, _) = row(&ax);
    rows.push(("axioms", s, if holds { "A(4) and A(5) hold".into() } else { "A(4)/A(5) unmet".into() }));

    let emb = verify_embedding(&p);
    out.push_str(&render(&emb, format));
    let (s, d) = row(&emb);
    rows.push(("embedding", s, d));

    let cfg = OracleConfig {
        abelian_certificate: true,
        ..OracleConfig::default()
    };
    let short = verify_short_trivial_words(&p, cfg);
    out.push_str(&render(&short, format));
    let (s, d) = row(&short);
    rows.push(("short words", s, d));

    if holds {
        let wp = WordProblem::new(&p);
        let l = language_for(&wp, Language::Combing, Reading::Forward);
        match CayleyBall::build(&wp, radius, prees::group::DEFAULT_ELEMENT_CAP) {
            Ok(ball) => {
                let sur = verify_surjectivity(&wp, &l, &ball);
                out.push_str(&render(&sur, format));
                let (s, d) = row(&sur);
                rows.push(("surjectivity", s, d));
            }
            Err(e) => rows.push(("surjectivity", Status::Fail, e.to_string())),
        }
        let fellow = fellow_traveler_check(&wp, &l, radius, k);
        out.push_str(&match format {
            Format::Text => fellow.render(&p),
            Format::Records => fellow_records(&p, &fellow),
        });
        rows.push((
            "fellow traveling",
            if fellow.pass { Status::Pass } else { Status::Fail },
            format!("observed {} against {k} over {} pairs", fellow.k_required, fellow.pairs),
        ));
    } else {
        rows.push(("surjectivity", Status::Skipped, "precondition unmet".into()));
        rows.push(("fellow traveling", Status::Skipped, "precondition unmet".into()));
    }

    let ok = rows.iter().all(|(_, s, _)| *s == Status::Pass);
    match format {
        Format::Text => {
            out.push_str("\nsummary\n");
            for (name, s, d) in &rows {
                let _ = writeln!(out, "  {name:<18} {:<8} {d}", s.as_str());
            }
            let _ = writeln!(out, "overall: {}", if ok { "pass" } else { "fail" });
        }
        Format::Records => {
            for (name, s, d) in &rows {
                let _ = writeln!(out, "summary row={} status={} detail={}", q(name), s.as_str(), q(d));
            }
            let _ = writeln!(out, "overall status={}", if ok { "pass" } else { "fail" });
        }
    }
    done(ok, out)
}

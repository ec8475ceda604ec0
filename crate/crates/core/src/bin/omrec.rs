use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use omega_recognition::bounds::{
    certify_lower_bound, leftzero_recognizer, table1_report, theorem8_recognizer, Table1Options,
};
use omega_recognition::buchi::thm6_automaton;
use omega_recognition::conversions::{
    ba_to_strong, ba_to_weak, nfa_to_recognizer, weak_to_ba, weak_to_strong_general, weak_to_strong_simple,
};
use omega_recognition::format::{self, RecognizerFile};
use omega_recognition::{BuchiAutomaton, FiniteSemigroup, OmegaLanguage, StrongRecognizer, UpWord, WeakRecognizer};

#[derive(Parser)]
#[command(name = "omrec", version, about = "Semigroups recognizing omega-regular languages")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Membership of u v^ω (or of a finite word) in an automaton or recognizer
    Member {
        file: PathBuf,
        /// `u=<word> v=<word>`
        #[arg(long, num_args = 1..=2, value_name = "u=.. v=..")]
        word: Vec<String>,
        /// Finite word, for NFA acceptance or finite-word recognizers
        #[arg(long, conflicts_with = "word")]
        finite: Option<String>,
    },
    /// Convert between automata and recognizers
    Convert { kind: ConvertKind, file: PathBuf },
    /// Strong recognizer of the complement
    Complement { file: PathBuf },
    /// Syntactic quotient
    Minimize { file: PathBuf },
    /// Language equivalence of two automata or recognizers
    Equiv { left: PathBuf, right: PathBuf },
    /// Green's relations of a semigroup or of a morphism's target
    Green { file: PathBuf },
    /// Certify that a word list is pairwise separated
    Certify {
        oracle: PathBuf,
        words: PathBuf,
        #[arg(long, default_value_t = 2)]
        max_len: usize,
    },
    /// Print a witness family member
    Witness {
        family: Family,
        #[arg(long)]
        n: usize,
    },
    /// Reproduce the bounds table on small instances
    Table1 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        slow: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ConvertKind {
    BaWeak,
    WeakBa,
    WeakStrong,
    WeakStrongSimple,
    BaStrong,
    NfaRec,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Thm6,
    Thm8,
    Leftzero,
}

enum Input {
    Automaton(BuchiAutomaton),
    Recognizer(RecognizerFile),
    Semigroup(FiniteSemigroup),
}

fn load(path: &Path) -> Result<Input> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap().trim())
        .find(|l| !l.is_empty())
        .unwrap_or("");
    let dir = path.parent().unwrap_or(Path::new(".")).to_path_buf();
    let ctx = || format!("parsing {}", path.display());
    Ok(match first.split_whitespace().next() {
        Some("automaton") => Input::Automaton(format::parse_automaton(&text).with_context(ctx)?),
        Some("semigroup") => Input::Semigroup(format::parse_semigroup(&text).with_context(ctx)?),
        Some("morphism") => Input::Recognizer(
            format::parse_recognizer(&text, |p| {
                std::fs::read_to_string(dir.join(p))
                    .map_err(|e| omega_recognition::Error::InvalidParameter(format!("{p}: {e}")))
            })
            .with_context(ctx)?,
        ),
        _ => bail!("{}: unrecognized file, expected automaton, morphism or semigroup", path.display()),
    })
}

fn load_automaton(path: &Path) -> Result<BuchiAutomaton> {
    match load(path)? {
        Input::Automaton(a) => Ok(a),
        _ => bail!("{}: expected an automaton", path.display()),
    }
}

fn load_weak(path: &Path) -> Result<WeakRecognizer> {
    match load(path)? {
        Input::Recognizer(RecognizerFile::Weak(r)) => Ok(r),
        _ => bail!("{}: expected a weak recognizer", path.display()),
    }
}

/// Any ω-language input as a strong recognizer.
fn strongify(input: Input) -> Result<StrongRecognizer> {
    Ok(match input {
        Input::Automaton(a) => ba_to_strong(&a)?,
        Input::Recognizer(RecognizerFile::Strong(r)) => r,
        Input::Recognizer(RecognizerFile::Weak(r)) => weak_to_strong_general(&r)?,
        _ => bail!("expected an automaton, a weak or a strong recognizer"),
    })
}

fn sizes(input: usize, output: usize) {
    eprintln!("sizes: in={input} out={output}");
}

fn parse_up(alphabet: &omega_recognition::Alphabet, parts: &[String]) -> Result<UpWord> {
    let (mut u, mut v) = ("-", None);
    for p in parts {
        match p.split_once('=') {
            Some(("u", w)) => u = w,
            Some(("v", w)) => v = Some(w),
            _ => bail!("expected u=<word> or v=<word>, got `{p}`"),
        }
    }
    let v = v.context("missing v=<word>")?;
    Ok(alphabet.parse_up_word(u, v)?)
}

fn answer(yes: bool) -> ExitCode {
    println!("{yes}");
    if yes { ExitCode::SUCCESS } else { ExitCode::from(1) }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Member { file, word, finite } => {
            let input = load(&file)?;
            if let Some(w) = finite {
                return Ok(answer(match &input {
                    Input::Automaton(a) => a.nfa_accepts(&a.alphabet().parse_word(&w)?)?,
                    Input::Recognizer(RecognizerFile::Finite(r)) => {
                        r.contains(&r.morphism().alphabet().parse_word(&w)?)
                    }
                    _ => bail!("--finite needs an automaton or a finite-word recognizer"),
                }));
            }
            if word.is_empty() {
                bail!("give --word u=<word> v=<word> or --finite <word>");
            }
            let lang: Box<dyn OmegaLanguage> = match input {
                Input::Automaton(a) => Box::new(a),
                Input::Recognizer(RecognizerFile::Weak(r)) => Box::new(r),
                Input::Recognizer(RecognizerFile::Strong(r)) => Box::new(r),
                _ => bail!("expected an automaton, a weak or a strong recognizer"),
            };
            let w = parse_up(lang.alphabet(), &word)?;
            Ok(answer(lang.contains(&w)))
        }
        Command::Convert { kind, file } => {
            match kind {
                ConvertKind::BaWeak => {
                    let a = load_automaton(&file)?;
                    let rec = ba_to_weak(&a)?;
                    sizes(a.states(), rec.morphism().target().size());
                    print!("{}", format::write_weak(&rec));
                }
                ConvertKind::BaStrong => {
                    let a = load_automaton(&file)?;
                    let rec = ba_to_strong(&a)?;
                    sizes(a.states(), rec.morphism().target().size());
                    print!("{}", format::write_strong(&rec));
                }
                ConvertKind::NfaRec => {
                    let a = load_automaton(&file)?;
                    let rec = nfa_to_recognizer(&a)?;
                    sizes(a.states(), rec.morphism().target().size());
                    print!("{}", format::write_finite(&rec));
                }
                ConvertKind::WeakBa => {
                    let rec = load_weak(&file)?;
                    let ba = weak_to_ba(&rec);
                    let n = rec.morphism().target().size();
                    sizes(n, ba.states());
                    let loops: std::collections::BTreeSet<_> = rec.accepting().iter().map(|p| p.e).collect();
                    eprintln!("bounds: (n+1)(|E|+1)={} n(n+1)={}", (n + 1) * (loops.len() + 1), n * (n + 1));
                    print!("{}", format::write_automaton(&ba));
                }
                ConvertKind::WeakStrong | ConvertKind::WeakStrongSimple => {
                    let rec = load_weak(&file)?;
                    let strong = if matches!(kind, ConvertKind::WeakStrong) {
                        weak_to_strong_general(&rec)?
                    } else {
                        weak_to_strong_simple(&rec)?
                    };
                    sizes(rec.morphism().target().size(), strong.morphism().target().size());
                    print!("{}", format::write_strong(&strong));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Complement { file } => {
            let input = load(&file)?;
            let n = match &input {
                Input::Automaton(a) => a.states(),
                Input::Recognizer(r) => r.morphism().target().size(),
                Input::Semigroup(_) => bail!("a semigroup alone has no language"),
            };
            let strong = match input {
                Input::Recognizer(RecognizerFile::Weak(r)) if r.morphism().target().is_simple() => {
                    weak_to_strong_simple(&r)?
                }
                other => strongify(other)?,
            };
            let comp = strong.complement();
            sizes(n, comp.morphism().target().size());
            print!("{}", format::write_strong(&comp));
            Ok(ExitCode::SUCCESS)
        }
        Command::Minimize { file } => {
            let input = load(&file)?;
            if let Input::Recognizer(RecognizerFile::Finite(r)) = &input {
                let (q, _) = r.syntactic_quotient();
                sizes(r.morphism().target().size(), q.morphism().target().size());
                print!("{}", format::write_finite(&q));
                return Ok(ExitCode::SUCCESS);
            }
            let strong = strongify(input)?;
            let (q, _) = strong.syntactic_quotient();
            sizes(strong.morphism().target().size(), q.morphism().target().size());
            print!("{}", format::write_strong(&q));
            Ok(ExitCode::SUCCESS)
        }
        Command::Equiv { left, right } => {
            let a = strongify(load(&left)?)?;
            let b = strongify(load(&right)?)?;
            match a.distinguishing_word(&b)? {
                None => {
                    println!("equivalent");
                    Ok(ExitCode::SUCCESS)
                }
                Some(w) => {
                    println!("distinct {}", w.display(a.alphabet()));
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Green { file } => {
            let sg = match load(&file)? {
                Input::Semigroup(s) => s,
                Input::Recognizer(r) => r.morphism().target().clone(),
                Input::Automaton(_) => bail!("expected a semigroup or a morphism"),
            };
            let g = sg.greens();
            let classes = |name: &str, cs: &[Vec<usize>]| {
                println!("{name} {}", cs.len());
                for c in cs {
                    let labels: Vec<String> = c.iter().map(|&s| sg.label(s)).collect();
                    println!("  {{{}}}", labels.join(" "));
                }
            };
            println!("size {}", sg.size());
            classes("R", &g.r_classes);
            classes("L", &g.l_classes);
            classes("J", &g.j_classes);
            classes("H", &g.h_classes);
            let idem: Vec<String> = sg.idempotents().iter().map(|&s| sg.label(s)).collect();
            println!("idempotents {}", idem.join(" "));
            println!("simple {}", sg.is_simple());
            Ok(ExitCode::SUCCESS)
        }
        Command::Certify { oracle, words, max_len } => {
            let lang: Box<dyn OmegaLanguage> = match load(&oracle)? {
                Input::Automaton(a) => Box::new(a),
                Input::Recognizer(RecognizerFile::Weak(r)) => Box::new(r),
                Input::Recognizer(RecognizerFile::Strong(r)) => Box::new(r),
                _ => bail!("{}: expected an automaton or an omega recognizer", oracle.display()),
            };
            let text = std::fs::read_to_string(&words).with_context(|| format!("reading {}", words.display()))?;
            let list = format::parse_word_list(&text, lang.alphabet())?;
            match certify_lower_bound(lang.as_ref(), &list, max_len) {
                Ok(cert) => {
                    print!("{}", cert.to_text(lang.alphabet()));
                    eprintln!("certified lower bound {}", cert.claimed_bound);
                    Ok(ExitCode::SUCCESS)
                }
                Err(e @ omega_recognition::Error::Uncertified(..)) => {
                    eprintln!("{e}");
                    Ok(ExitCode::from(1))
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Witness { family, n } => {
            match family {
                Family::Thm6 => print!("{}", format::write_automaton(&thm6_automaton(n)?)),
                Family::Thm8 => print!("{}", format::write_weak(&theorem8_recognizer(n)?)),
                Family::Leftzero => print!("{}", format::write_weak(&leftzero_recognizer(n)?)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Table1 { n, slow } => {
            print!("{}", table1_report(Table1Options { n, slow })?);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

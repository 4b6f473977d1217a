//! The `ggdec` command line.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::automata::{parikh_image, Nfa, ParikhStrategy, DEFAULT_MAX_PARIKH_STATES};
use crate::error::Error;
use crate::grammar::{cfg_parikh, BinCfg};
use crate::oracles::{benois_member, bfs_member, OracleVerdict};
use crate::semilinear::CoordSpace;
use crate::sli::{decide_rational, generator_star, EngineOptions, DEFAULT_MAX_STATES, DEFAULT_MAX_VERTICES};
use crate::traces::{ia_decompose, ia_is_transitive_forest, trace_nf, wp, GroupWord, IndependenceAlphabet};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MALFORMED: i32 = 2;
pub const EXIT_NOT_FOREST: i32 = 3;
pub const EXIT_ORACLE_MISMATCH: i32 = 4;
pub const EXIT_RESOURCE: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "ggdec", version, about = "Rational subset membership in graph groups over transitive forests")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub limits: Limits,
}

#[derive(Debug, Args)]
pub struct Limits {
    /// State cap for the automaton after prepending the inverted target
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_STATES)]
    pub max_states: usize,
    /// State cap for path–cycle Parikh images
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_PARIKH_STATES)]
    pub max_parikh_states: usize,
    /// Vertex cap for decision commands
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_VERTICES)]
    pub max_vertices: usize,
}

#[derive(Debug, Args)]
pub struct Checks {
    /// Cross-check with the free-group saturation oracle
    #[arg(long)]
    pub check_benois: bool,
    /// Cross-check with a bounded search over accepted words up to length N
    #[arg(long, value_name = "N")]
    pub check_bfs: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Is the independence graph a transitive forest?
    Forest { alphabet: PathBuf },
    /// Print the free-product / direct-Z decomposition
    Decompose { alphabet: PathBuf },
    /// Trace normal form of a word
    Nf { alphabet: PathBuf, word: String },
    /// Is the word trivial in the group?
    Wp { alphabet: PathBuf, word: String },
    /// Is the word in the rational subset given by the automaton?
    Rational {
        alphabet: PathBuf,
        automaton: PathBuf,
        word: String,
        #[command(flatten)]
        checks: Checks,
    },
    /// Is the word in the submonoid generated by the given words?
    Submonoid {
        alphabet: PathBuf,
        word: String,
        generators: Vec<String>,
        #[command(flatten)]
        checks: Checks,
    },
    /// Is the word in the subgroup generated by the given words?
    Subgroup {
        alphabet: PathBuf,
        word: String,
        generators: Vec<String>,
        #[command(flatten)]
        checks: Checks,
    },
    /// Semilinear Parikh image of an automaton
    ParikhNfa { automaton: PathBuf },
    /// Semilinear Parikh image of a grammar
    ParikhCfg { grammar: PathBuf },
}

/// What a command printed and how it ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn answer(line: impl Into<String>) -> Self {
        let mut stdout = line.into();
        stdout.push('\n');
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn failure(code: i32, message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        stderr.push('\n');
        Outcome {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

fn error_outcome(e: &Error) -> Outcome {
    let code = match e {
        Error::Input(_) => EXIT_MALFORMED,
        Error::NotTransitiveForest(_) => EXIT_NOT_FOREST,
        Error::Resource { .. } => EXIT_RESOURCE,
    };
    Outcome::failure(code, format!("error: {e}"))
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::input(format!("{}: {e}", path.display())))
}

fn alphabet(path: &Path) -> Result<IndependenceAlphabet, Error> {
    IndependenceAlphabet::from_json(&read(path)?)
}

fn membership(verdict: bool) -> &'static str {
    if verdict {
        "MEMBER"
    } else {
        "NON-MEMBER"
    }
}

/// Runs a decision and its requested cross-checks.
fn decide(ia: &IndependenceAlphabet, a: &Nfa, w: &GroupWord, checks: &Checks, opts: &EngineOptions) -> Result<Outcome, Error> {
    let verdict = decide_rational(ia, a, w, opts)?;
    let mut notes = String::new();
    if checks.check_benois {
        let oracle = benois_member(ia, a, w)?;
        if oracle != verdict {
            return Ok(Outcome::failure(
                EXIT_ORACLE_MISMATCH,
                format!(
                    "oracle mismatch: engine says {}, saturation says {}",
                    membership(verdict),
                    membership(oracle)
                ),
            ));
        }
        let _ = writeln!(notes, "saturation agrees");
    }
    if let Some(n) = checks.check_bfs {
        match bfs_member(ia, a, w, n)? {
            OracleVerdict::Yes(u) if !verdict => {
                return Ok(Outcome::failure(
                    EXIT_ORACLE_MISMATCH,
                    format!("oracle mismatch: engine says NON-MEMBER, accepted word {u} equals the target"),
                ));
            }
            OracleVerdict::Yes(u) => {
                let _ = writeln!(notes, "bounded search found {u}");
            }
            OracleVerdict::No | OracleVerdict::Unknown => {
                let _ = writeln!(notes, "bounded search inconclusive up to length {n}");
            }
        }
    }
    let mut out = Outcome::answer(membership(verdict));
    out.stderr = notes;
    Ok(out)
}

fn parse_words(words: &[String]) -> Result<Vec<GroupWord>, Error> {
    words.iter().map(|g| GroupWord::parse(g)).collect()
}

fn dispatch(cli: &Cli) -> Result<Outcome, Error> {
    let opts = EngineOptions {
        max_states: cli.limits.max_states,
        max_vertices: cli.limits.max_vertices,
        ..EngineOptions::default()
    };
    match &cli.command {
        Command::Forest { alphabet: p } => {
            let ia = alphabet(p)?;
            Ok(Outcome::answer(match ia_is_transitive_forest(&ia) {
                Ok(_) => "TRANSITIVE-FOREST".to_string(),
                Err(w) => format!("NOT-TRANSITIVE-FOREST witness={w}"),
            }))
        }
        Command::Decompose { alphabet: p } => {
            let ia = alphabet(p)?;
            Ok(Outcome::answer(ia_decompose(&ia)?.to_component_sexpr()))
        }
        Command::Nf { alphabet: p, word } => {
            let ia = alphabet(p)?;
            Ok(Outcome::answer(trace_nf(&ia, &GroupWord::parse(word)?)?.to_string()))
        }
        Command::Wp { alphabet: p, word } => {
            let ia = alphabet(p)?;
            let trivial = wp(&ia, &GroupWord::parse(word)?)?;
            Ok(Outcome::answer(if trivial { "TRIVIAL" } else { "NONTRIVIAL" }))
        }
        Command::Rational {
            alphabet: p,
            automaton,
            word,
            checks,
        } => {
            let ia = alphabet(p)?;
            let a = Nfa::from_json(&read(automaton)?)?;
            let w = GroupWord::parse(word)?;
            decide(&ia, &a, &w, checks, &opts)
        }
        Command::Submonoid {
            alphabet: p,
            word,
            generators,
            checks,
        } => {
            let ia = alphabet(p)?;
            let gens = parse_words(generators)?;
            let w = GroupWord::parse(word)?;
            decide(&ia, &generator_star(&gens), &w, checks, &opts)
        }
        Command::Subgroup {
            alphabet: p,
            word,
            generators,
            checks,
        } => {
            let ia = alphabet(p)?;
            let mut gens = parse_words(generators)?;
            gens.extend(gens.iter().map(GroupWord::inverse).collect::<Vec<_>>());
            let w = GroupWord::parse(word)?;
            decide(&ia, &generator_star(&gens), &w, checks, &opts)
        }
        Command::ParikhNfa { automaton } => {
            let a = Nfa::from_json(&read(automaton)?)?;
            let space = CoordSpace::canonical(a.alphabet());
            let strategy = ParikhStrategy::PathCycle {
                max_states: cli.limits.max_parikh_states,
            };
            Ok(Outcome::answer(parikh_image(&a, &space, strategy)?.render()))
        }
        Command::ParikhCfg { grammar } => {
            let g = BinCfg::from_json(&read(grammar)?)?;
            Ok(Outcome::answer(cfg_parikh(&g)?.render()))
        }
    }
}

/// Runs one parsed command.
pub fn run_command(cli: &Cli) -> Outcome {
    dispatch(cli).unwrap_or_else(|e| error_outcome(&e))
}

/// Parses arguments and runs the command; usage errors exit with status 2.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run_command(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_MALFORMED } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome::failure(code, text.trim_end())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn file(dir: &tempfile::TempDir, name: &str, body: &str) -> String {
        let p = dir.path().join(name);
        std::fs::File::create(&p).unwrap().write_all(body.as_bytes()).unwrap();
        p.to_string_lossy().into_owned()
    }

    fn ggdec(args: &[&str]) -> Outcome {
        run(std::iter::once("ggdec").chain(args.iter().copied()))
    }

    #[test]
    fn command_examples() {
        let dir = tempfile::tempdir().unwrap();
        let edge = file(&dir, "edge.json", r#"{"vertices":["a","b"],"edges":[["a","b"]]}"#);
        let p4 = file(
            &dir,
            "p4.json",
            r#"{"vertices":["a","b","c","d"],"edges":[["a","b"],["b","c"],["c","d"]]}"#,
        );
        let aut = file(&dir, "aut.json", r#"{"states":1,"initial":0,"accepting":[0],"transitions":[[0,"a",0]]}"#);
        assert_eq!(ggdec(&["wp", &edge, "a b a^-1 b^-1"]), Outcome::answer("TRIVIAL"));
        assert_eq!(ggdec(&["forest", &p4]), Outcome::answer("NOT-TRANSITIVE-FOREST witness=a,b,c,d"));
        let r = ggdec(&["rational", &p4, &aut, "a"]);
        assert_eq!((r.code, r.stdout.as_str()), (EXIT_NOT_FOREST, ""));
    }

    #[test]
    fn decisions_and_checks() {
        let dir = tempfile::tempdir().unwrap();
        let f2 = file(&dir, "f2.json", r#"{"vertices":["a","b"]}"#);
        let star = file(
            &dir,
            "star.json",
            r#"{"vertices":["a","b","c"],"edges":[["a","b"],["a","c"]]}"#,
        );
        let abs = file(
            &dir,
            "abs.json",
            r#"{"states":2,"initial":0,"accepting":[0],"transitions":[[0,"a",1],[1,"b",0]]}"#,
        );
        assert_eq!(ggdec(&["rational", &f2, &abs, "a b a b", "--check-benois"]).stdout, "MEMBER\n");
        assert_eq!(ggdec(&["rational", &f2, &abs, "b a", "--check-bfs", "4"]).stdout, "NON-MEMBER\n");
        assert_eq!(ggdec(&["submonoid", &f2, "b", "a b", "a^-1"]).stdout, "MEMBER\n");
        assert_eq!(ggdec(&["subgroup", &f2, "b", "a"]).stdout, "NON-MEMBER\n");
        assert_eq!(ggdec(&["submonoid", &star, "b^-1", "b a", "a^-1"]).stdout, "NON-MEMBER\n");
        assert_eq!(ggdec(&["decompose", &star]).stdout, "(free (z a (free (z b triv) (z c triv))))\n");
        assert_eq!(ggdec(&["nf", &star, "b a c^-1 a^-1"]).stdout, "b c^-1\n");
        assert_eq!(ggdec(&["rational", &star, &abs, "a", "--check-benois"]).code, EXIT_MALFORMED);
    }

    #[test]
    fn parikh_commands() {
        let dir = tempfile::tempdir().unwrap();
        let abs = file(
            &dir,
            "abs.json",
            r#"{"states":2,"initial":0,"accepting":[0],"transitions":[[0,"a",1],[1,"b",0]]}"#,
        );
        let g = file(
            &dir,
            "g.json",
            r#"{"start":"S","productions":[["S",["a","S","b"]],["S",[]]]}"#,
        );
        assert_eq!(ggdec(&["parikh-nfa", &abs]).stdout, "0 0 | 1 1\n");
        assert_eq!(ggdec(&["parikh-cfg", &g]).stdout, "0 0 | 1 1\n");
        assert_eq!(ggdec(&["parikh-nfa", &abs, "--max-parikh-states", "1"]).code, EXIT_RESOURCE);
    }

    #[test]
    fn malformed_inputs() {
        let dir = tempfile::tempdir().unwrap();
        let f2 = file(&dir, "f2.json", r#"{"vertices":["a","b"]}"#);
        let bad = file(&dir, "bad.json", "{");
        assert_eq!(ggdec(&["wp", &f2, "a^0"]).code, EXIT_MALFORMED);
        assert_eq!(ggdec(&["wp", &f2, "c"]).code, EXIT_MALFORMED);
        assert_eq!(ggdec(&["forest", &bad]).code, EXIT_MALFORMED);
        assert_eq!(ggdec(&["forest", "/nonexistent/x.json"]).code, EXIT_MALFORMED);
        assert_eq!(ggdec(&["frobnicate"]).code, EXIT_MALFORMED);
        assert_eq!(ggdec(&["--help"]).code, EXIT_OK);
    }

    #[test]
    fn resource_limits() {
        let dir = tempfile::tempdir().unwrap();
        let f2 = file(&dir, "f2.json", r#"{"vertices":["a","b"]}"#);
        let r = ggdec(&["submonoid", &f2, "a b a b a b", "a", "--max-states", "3"]);
        assert_eq!(r.code, EXIT_RESOURCE);
        let z4 = file(&dir, "z4.json", r#"{"vertices":["a","b","c","d"]}"#);
        assert_eq!(ggdec(&["subgroup", &z4, "a", "a", "--max-vertices", "3"]).code, EXIT_RESOURCE);
    }
}

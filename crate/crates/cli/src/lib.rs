//! The `lrf` command line.
//!
//! Exit codes: 0 when the checked property holds or the requested object was
//! found, 1 when it is violated, unsatisfiable, refuted or inconclusive (the
//! report body says which), 2 for usage and input errors.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use lrf_core::coloring::{
    generation_coloring, turn_word_reduction, verify_lrf, verify_lrf_all_pairs, verify_lrf_sampled,
    LrfCertificate, PathShape,
};
use lrf_core::format::{
    parse_certificate, parse_coloring, parse_tree, write_coloring, write_edges, write_tree,
};
use lrf_core::pigeonhole::{reflect_word, refute, RefuteOutcome};
use lrf_core::search::{
    brute_force_census, search_lrf_coloring, SearchOutcome, DEFAULT_NODE_LIMIT,
};
use lrf_core::trees::{build_tyler, tyler_vertex_count, RootedTree, TylerSpec, DEFAULT_SIZE_GUARD};
use lrf_core::words::{
    check_lemma_abxba, check_lemma_palindrome9, contains_long_palindrome, contains_long_square,
    lpf_census, lsf_census, Word, PALINDROME_FORCING_LENGTH,
};
use lrf_core::{Coloring, Violation};

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest `--max` accepted by `lemma abxba`.
const ABXBA_MAX_GUARD: usize = 30;

#[derive(Parser, Debug)]
#[command(
    name = "lrf",
    version,
    about = "Long-square-free words and long-repetition-free tree colorings"
)]
struct Cli {
    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Seed for randomized modes.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Word predicates and censuses.
    #[command(subcommand)]
    Word(WordCommand),
    /// Exhaustive word-level sweeps.
    #[command(subcommand)]
    Lemma(LemmaCommand),
    /// Tree files and Tyler trees.
    #[command(subcommand)]
    Tree(TreeCommand),
    /// Colorings: apply, verify, reduce, search.
    #[command(subcommand)]
    Color(ColorCommand),
    /// Pigeonhole extraction and palindrome reflection on a colored host.
    Refute {
        tree: PathBuf,
        coloring: PathBuf,
        /// Write the embedded binary tree, one position per line.
        #[arg(long)]
        dump_embedding: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum WordCommand {
    /// Long-square and long-palindrome report for one word.
    Check { word: String },
    /// Every word of the given length satisfying a predicate.
    Census {
        #[arg(long)]
        length: usize,
        #[arg(long, value_enum)]
        predicate: Predicate,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Predicate {
    /// Long-square-free.
    Lsf,
    /// Long-palindrome-free.
    Lpf,
}

#[derive(Subcommand, Debug)]
enum LemmaCommand {
    /// `01 x 10` contains a long palindrome for all short `x`.
    Abxba {
        #[arg(long)]
        max: usize,
    },
    /// Every binary word of length 9 contains a long palindrome.
    Palindrome9,
    /// Reflection of every length-9 word yields a long square.
    Reflect,
}

#[derive(Subcommand, Debug)]
enum TreeCommand {
    /// Size, height, radius, center and generation sizes.
    Info {
        file: PathBuf,
        /// Also write the edge list.
        #[arg(long)]
        edges: Option<PathBuf>,
    },
    /// Build a Tyler tree (classic fanouts unless --fanout is given).
    Tyler {
        #[arg(long)]
        height: usize,
        #[arg(long, value_delimiter = ',')]
        fanout: Option<Vec<u64>>,
        #[arg(long, default_value_t = DEFAULT_SIZE_GUARD)]
        guard: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        edges: Option<PathBuf>,
    },
    /// Exact vertex count of the classic Tyler tree.
    Count {
        #[arg(long)]
        height: u32,
    },
}

#[derive(Subcommand, Debug)]
enum ColorCommand {
    /// Color each vertex by the letter of its depth.
    Apply {
        #[arg(long)]
        word: String,
        tree: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every path and print a certificate.
    Verify {
        tree: PathBuf,
        coloring: PathBuf,
        /// Use the all-pairs oracle instead of maximal paths.
        #[arg(long, conflicts_with = "sample")]
        all_pairs: bool,
        /// Fast mode: check this many random leaf pairs only (inconclusive).
        #[arg(long)]
        sample: Option<usize>,
    },
    /// Turn-word reduction for generation colorings.
    Reduce {
        #[arg(long)]
        word: String,
        #[arg(long)]
        height: usize,
    },
    /// Exact backtracking search for a coloring.
    Search(SearchArgs),
    /// Count valid colorings by brute force.
    Census {
        tree: PathBuf,
        #[arg(long)]
        colors: u8,
    },
    /// Re-check a printed certificate against a tree and coloring.
    Recheck {
        tree: PathBuf,
        coloring: PathBuf,
        certificate: PathBuf,
    },
}

#[derive(Args, Debug)]
struct SearchArgs {
    tree: PathBuf,
    #[arg(long)]
    colors: u8,
    #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
    limit: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// A usage or input error; reported on one line with exit code 2.
#[derive(Debug)]
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Outcome = Result<i32, InputError>;

/// Buffered report and diagnostic streams, flushed after the command ends.
#[derive(Default)]
struct Io {
    out: Vec<u8>,
    diag: Vec<u8>,
}

impl Io {
    fn emit(&mut self, text: &str) -> Result<(), InputError> {
        self.out
            .write_all(text.as_bytes())
            .map_err(|e| InputError(format!("cannot write output: {e}")))
    }

    fn note(&mut self, text: &str) {
        let _ = writeln!(self.diag, "{text}");
    }

    /// Writes to `path` when given, otherwise to standard output.
    fn deliver(&mut self, path: Option<&Path>, text: &str) -> Result<(), InputError> {
        match path {
            Some(p) => fs::write(p, text)
                .map_err(|e| InputError(format!("cannot write {}: {e}", p.display()))),
            None => self.emit(text),
        }
    }
}

/// Runs the command line `args` (including the program name), writing the
/// report to `out` and diagnostics to `diag`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, diag: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(rendered.as_bytes());
            } else {
                let line = rendered
                    .lines()
                    .find(|l| !l.trim().is_empty())
                    .unwrap_or("error");
                let _ = writeln!(diag, "{line}");
            }
            return code;
        }
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.threads {
        if n == 0 {
            let _ = writeln!(diag, "error: --threads must be at least 1");
            return EXIT_USAGE;
        }
        builder = builder.num_threads(n);
    }
    let pool = match builder.build() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(diag, "error: cannot start worker threads: {e}");
            return EXIT_USAGE;
        }
    };
    let mut io = Io::default();
    let result = pool.install(|| dispatch(&cli, &mut io));
    let code = match result {
        Ok(code) => code,
        Err(InputError(message)) => {
            io.note(&format!("error: {}", message.replace('\n', " ")));
            EXIT_USAGE
        }
    };
    let _ = out.write_all(&io.out);
    let _ = diag.write_all(&io.diag);
    code
}

fn dispatch(cli: &Cli, io: &mut Io) -> Outcome {
    match &cli.command {
        Command::Word(cmd) => word_command(cmd, io),
        Command::Lemma(cmd) => lemma_command(cmd, io),
        Command::Tree(cmd) => tree_command(cmd, io),
        Command::Color(cmd) => color_command(cmd, cli.seed, io),
        Command::Refute {
            tree,
            coloring,
            dump_embedding,
        } => refute_command(tree, coloring, dump_embedding.as_deref(), io),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn code(holds: bool) -> i32 {
    if holds {
        EXIT_HOLDS
    } else {
        EXIT_FAILS
    }
}

fn parse_word(text: &str) -> Result<Word, InputError> {
    text.parse::<Word>()
        .map_err(|e| InputError(format!("word {text:?}: {e}")))
}

fn read(path: &Path) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|e| InputError(format!("cannot read {}: {e}", path.display())))
}

fn load_tree(path: &Path) -> Result<RootedTree, InputError> {
    parse_tree(&read(path)?).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn load_coloring(path: &Path, tree: &RootedTree) -> Result<Coloring, InputError> {
    let coloring =
        parse_coloring(&read(path)?).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    coloring
        .check_fits(tree)
        .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    Ok(coloring)
}

fn word_command(cmd: &WordCommand, io: &mut Io) -> Outcome {
    match cmd {
        WordCommand::Check { word } => {
            let w = parse_word(word)?;
            let square = contains_long_square(w.letters());
            let palindrome = contains_long_palindrome(w.letters());
            let mut r = String::new();
            writeln!(r, "word: {w}")?;
            writeln!(r, "length: {}", w.len())?;
            writeln!(r, "long-square-free: {}", yes_no(square.is_none()))?;
            if let Some(s) = square {
                writeln!(r, "square-offset: {}", s.offset)?;
                writeln!(r, "square-period: {}", s.period)?;
            }
            writeln!(r, "long-palindrome-free: {}", yes_no(palindrome.is_none()))?;
            if let Some(p) = palindrome {
                writeln!(r, "palindrome-offset: {}", p.offset)?;
                writeln!(r, "palindrome-length: {}", p.length)?;
            }
            io.emit(&r)?;
            Ok(code(square.is_none()))
        }
        WordCommand::Census { length, predicate } => {
            let (name, words) = match predicate {
                Predicate::Lsf => ("lsf", lsf_census(*length)?),
                Predicate::Lpf => ("lpf", lpf_census(*length)?),
            };
            let mut r = String::new();
            writeln!(r, "length: {length}")?;
            writeln!(r, "predicate: {name}")?;
            writeln!(r, "count: {}", words.len())?;
            for w in &words {
                writeln!(r, "word: {w}")?;
            }
            io.emit(&r)?;
            Ok(EXIT_HOLDS)
        }
    }
}

fn lemma_command(cmd: &LemmaCommand, io: &mut Io) -> Outcome {
    let mut r = String::new();
    let holds = match cmd {
        LemmaCommand::Abxba { max } => {
            if *max > ABXBA_MAX_GUARD {
                return Err(InputError(format!(
                    "--max {max} exceeds the sweep guard {ABXBA_MAX_GUARD}"
                )));
            }
            let report = check_lemma_abxba(*max);
            writeln!(r, "lemma: abxba")?;
            writeln!(r, "max-x-length: {max}")?;
            writeln!(r, "words-checked: {}", report.checked)?;
            writeln!(r, "counterexamples: {}", report.counterexamples.len())?;
            for w in &report.counterexamples {
                writeln!(r, "counterexample: {w}")?;
            }
            report.holds()
        }
        LemmaCommand::Palindrome9 => {
            let report = check_lemma_palindrome9();
            writeln!(r, "lemma: palindrome9")?;
            writeln!(
                r,
                "result: {}/{} contain long palindrome",
                report.with_palindrome, report.checked
            )?;
            writeln!(r, "length-9-free: {}", report.free_length9.len())?;
            writeln!(r, "length-8-free: {}", report.free_length8.len())?;
            for w in &report.free_length8 {
                writeln!(r, "length-8-free-word: {w}")?;
            }
            writeln!(r, "survivors-i-ii: {}", report.satisfying_i_ii)?;
            writeln!(r, "survivors-i-ii-iii: {}", report.satisfying_i_ii_iii)?;
            writeln!(
                r,
                "condition-iii-redundant: {}",
                yes_no(report.condition_iii_redundant())
            )?;
            report.holds()
        }
        LemmaCommand::Reflect => {
            let n = PALINDROME_FORCING_LENGTH;
            let mut verified = 0;
            let mut shapes = std::collections::BTreeMap::new();
            for bits in 0..1u64 << n {
                let b = Word::from_bits(bits, n);
                let reflection = reflect_word(&b)?;
                let letters = reflection.reflected.letters();
                let recheck = contains_long_square(letters);
                let ok = recheck == Some(reflection.square)
                    && reflection.square.offset == 0
                    && matches!(reflection.square.period, 3 | 4)
                    && reflection.shape.matches(letters);
                if ok {
                    verified += 1;
                } else {
                    writeln!(r, "failed: {b}")?;
                }
                *shapes.entry(reflection.shape.pattern()).or_insert(0usize) += 1;
            }
            let total = 1usize << n;
            let mut body = String::new();
            writeln!(body, "lemma: reflect")?;
            writeln!(body, "words-checked: {total}")?;
            writeln!(
                body,
                "result: {verified}/{total} reflect into a verified long square"
            )?;
            for (pattern, count) in &shapes {
                writeln!(body, "shape-{pattern}: {count}")?;
            }
            r.insert_str(0, &body);
            verified == total
        }
    };
    writeln!(r, "verdict: {}", if holds { "HOLDS" } else { "FAILS" })?;
    io.emit(&r)?;
    Ok(code(holds))
}

fn tree_command(cmd: &TreeCommand, io: &mut Io) -> Outcome {
    match cmd {
        TreeCommand::Info { file, edges } => {
            let tree = load_tree(file)?;
            let (center, radius) = tree.center_and_radius();
            let join = |xs: &mut dyn Iterator<Item = usize>| {
                xs.map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
            };
            let mut r = String::new();
            writeln!(r, "vertices: {}", tree.len())?;
            writeln!(r, "root: {}", tree.root())?;
            writeln!(r, "height: {}", tree.height())?;
            writeln!(r, "radius: {radius}")?;
            writeln!(r, "center: {}", join(&mut center.into_iter()))?;
            writeln!(
                r,
                "generation-sizes: {}",
                join(&mut tree.generations().iter().map(Vec::len))
            )?;
            writeln!(r, "leaves: {}", tree.leaves().len())?;
            io.emit(&r)?;
            if let Some(path) = edges {
                io.deliver(Some(path), &write_edges(&tree))?;
            }
            Ok(EXIT_HOLDS)
        }
        TreeCommand::Tyler {
            height,
            fanout,
            guard,
            out,
            edges,
        } => {
            let spec = match fanout {
                None => TylerSpec::classic(*height)?,
                Some(f) if f.len() == *height => TylerSpec::new(f.clone())?,
                Some(f) => {
                    return Err(InputError(format!(
                        "--fanout lists {} values but --height is {height}",
                        f.len()
                    )))
                }
            };
            let tree = build_tyler(&spec, *guard)?;
            io.deliver(out.as_deref(), &write_tree(&tree))?;
            if let Some(path) = edges {
                io.deliver(Some(path), &write_edges(&tree))?;
            }
            if out.is_some() {
                io.emit(&format!(
                    "vertices: {}\nheight: {}\n",
                    tree.len(),
                    tree.height()
                ))?;
            }
            Ok(EXIT_HOLDS)
        }
        TreeCommand::Count { height } => {
            let count = tyler_vertex_count(*height);
            io.emit(&format!(
                "height: {height}\nvertices: {}\nsubtree-multiplicity: {}\n",
                count.vertices, count.subtree_multiplicity
            ))?;
            Ok(EXIT_HOLDS)
        }
    }
}

fn color_command(cmd: &ColorCommand, seed: u64, io: &mut Io) -> Outcome {
    match cmd {
        ColorCommand::Apply { word, tree, out } => {
            let tree = load_tree(tree)?;
            let coloring = generation_coloring(&tree, &parse_word(word)?)?;
            io.deliver(out.as_deref(), &write_coloring(&coloring))?;
            Ok(EXIT_HOLDS)
        }
        ColorCommand::Verify {
            tree,
            coloring,
            all_pairs,
            sample,
        } => {
            let tree = load_tree(tree)?;
            let coloring = load_coloring(coloring, &tree)?;
            if let Some(samples) = sample {
                let check = verify_lrf_sampled(&tree, &coloring, *samples, seed)?;
                let mut r = format!("mode: sampled\npairs-checked: {}\n", check.pairs_checked);
                match check.violation {
                    Some(v) => r.push_str(&LrfCertificate::Violation(v).to_string()),
                    None => r.push_str("verdict: INCONCLUSIVE\n"),
                }
                io.emit(&r)?;
                return Ok(EXIT_FAILS);
            }
            let certificate = if *all_pairs {
                verify_lrf_all_pairs(&tree, &coloring)?
            } else {
                verify_lrf(&tree, &coloring)?
            };
            io.emit(&certificate.to_string())?;
            Ok(code(certificate.is_valid()))
        }
        ColorCommand::Reduce { word, height } => {
            let a = parse_word(word)?;
            let report = turn_word_reduction(&a, *height)?;
            let mut r = String::new();
            writeln!(r, "word: {a}")?;
            writeln!(r, "height: {height}")?;
            writeln!(r, "turn-words: {}", report.turn_words)?;
            writeln!(r, "monotone-words: {}", report.monotone_words)?;
            match &report.violation {
                None => writeln!(r, "verdict: VALID")?,
                Some(v) => {
                    writeln!(r, "verdict: VIOLATION")?;
                    match v.shape {
                        PathShape::Turn { turn, from, to } => {
                            writeln!(r, "shape: turn {turn} from {from} to {to}")?
                        }
                        PathShape::Monotone { start, end } => {
                            writeln!(r, "shape: monotone {start} to {end}")?
                        }
                    }
                    let w = Word::new(v.word.clone())?;
                    writeln!(r, "violating-word: {w}")?;
                    writeln!(r, "offset: {}", v.square.offset)?;
                    writeln!(r, "period: {}", v.square.period)?;
                }
            }
            io.emit(&r)?;
            Ok(code(report.is_valid()))
        }
        ColorCommand::Search(args) => {
            let tree = load_tree(&args.tree)?;
            let outcome = search_lrf_coloring(&tree, args.colors, args.limit)?;
            io.note(&format!("nodes-explored: {}", outcome.nodes_explored()));
            match outcome {
                SearchOutcome::Found { coloring, .. } => {
                    io.deliver(args.out.as_deref(), &write_coloring(&coloring))?;
                    Ok(EXIT_HOLDS)
                }
                other => {
                    io.emit(&format!("{other}\n"))?;
                    Ok(EXIT_FAILS)
                }
            }
        }
        ColorCommand::Census { tree, colors } => {
            let tree = load_tree(tree)?;
            let count = brute_force_census(&tree, *colors)?;
            io.emit(&format!(
                "vertices: {}\ncolors: {colors}\nvalid-colorings: {count}\n",
                tree.len()
            ))?;
            Ok(code(count > 0))
        }
        ColorCommand::Recheck {
            tree,
            coloring,
            certificate,
        } => {
            let tree = load_tree(tree)?;
            let coloring = load_coloring(coloring, &tree)?;
            let cert = parse_certificate(&read(certificate)?)
                .map_err(|e| InputError(format!("{}: {e}", certificate.display())))?;
            let (holds, detail) = match &cert {
                LrfCertificate::Violation(v) => match v.reverify(&tree, &coloring) {
                    Ok(()) => (true, "violation re-verified".to_owned()),
                    Err(e) => (false, e.to_string()),
                },
                LrfCertificate::Valid => {
                    let fresh = verify_lrf_all_pairs(&tree, &coloring)?;
                    (
                        fresh.is_valid(),
                        "validity re-checked over all pairs".to_owned(),
                    )
                }
            };
            io.emit(&format!(
                "certificate: {}\ndetail: {detail}\n",
                if holds { "ACCEPTED" } else { "REJECTED" }
            ))?;
            Ok(code(holds))
        }
    }
}

fn refute_command(tree: &Path, coloring: &Path, dump: Option<&Path>, io: &mut Io) -> Outcome {
    let tree = load_tree(tree)?;
    let coloring = load_coloring(coloring, &tree)?;
    match refute(&tree, &coloring)? {
        RefuteOutcome::Refuted {
            violation,
            embedding,
            reflection,
        } => {
            if let Some(path) = dump {
                io.deliver(Some(path), &embedding.dump())?;
            }
            let mut r = LrfCertificate::Violation(violation.clone()).to_string();
            writeln!(r, "generation-word: {}", embedding.generation_word())?;
            writeln!(r, "palindrome-offset: {}", reflection.palindrome.offset)?;
            writeln!(r, "palindrome-length: {}", reflection.palindrome.length)?;
            writeln!(r, "shape: {}", reflection.shape.pattern())?;
            writeln!(
                r,
                "rechecked: {}",
                yes_no(recheck(&violation, &tree, &coloring))
            )?;
            io.emit(&r)?;
        }
        RefuteOutcome::NotRefuted(reason) => {
            io.emit(&format!("verdict: NOT-REFUTED\nreason: {reason}\n"))?;
        }
    }
    Ok(EXIT_FAILS)
}

fn recheck(v: &Violation, tree: &RootedTree, coloring: &Coloring) -> bool {
    v.reverify(tree, coloring).is_ok()
}

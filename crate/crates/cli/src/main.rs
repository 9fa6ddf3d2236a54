//! The `homreg` binary: classify types, match texts, solve word-break
//! instances, generate reduction corpora, and sweep engine scaling.
//!
//! Exit codes: 0 for matched / breakable / done, 1 for a clean negative
//! answer, 2 for any error (clap reports usage errors as 2 on its own).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use homreg::bench::wordbreak_sweep;
use homreg::classify::{classify_membership, classify_pattern_matching};
use homreg::hardness::{
    gen_clique_wordbreak, gen_ov_instance, rand_graph, rand_ov, Graph, OvVariant,
};
use homreg::matcher::{EngineChoice, EngineKind, Matcher};
use homreg::regex::{parse_regex, parse_type, render_regex, SyntaxMode, Text};
use homreg::wordbreak::{reachable_prefixes, read_wbi, write_wbi, Algo};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Failure = Box<dyn std::error::Error>;

#[derive(Parser)]
#[command(name = "homreg", version, about = "Membership testing for bounded-depth homogeneous regular expressions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a type string and report the dichotomy verdict
    ///
    /// A type is an operator string over o | * + ordered from the root of
    /// homogeneous regexes down, e.g. "+|o" for (w_1|...|w_k)+.
    Classify {
        /// Operator string, e.g. "+|o"
        r#type: String,
        /// Classify the pattern-matching problem instead of membership
        #[arg(long)]
        pattern_matching: bool,
        /// Output format
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Match a text against a regex, routed by the type classifier
    ///
    /// Hard types are still answered, via the O(nm) NFA, with a warning on
    /// stderr. The empty text matches iff the pattern derives the empty
    /// string.
    Match {
        /// File holding one pattern (trailing newline ignored)
        #[arg(short = 'r', long)]
        regex: PathBuf,
        /// File holding the text (raw bytes; one trailing newline ignored)
        #[arg(short = 's', long)]
        text: PathBuf,
        /// Engine: auto follows the classifier, the rest force one
        #[arg(long, default_value = "auto")]
        engine: EngineChoice,
        /// Token syntax: <id> symbols in the pattern, decimal ids in the text
        #[arg(long)]
        tokens: bool,
        /// Output format
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Solve a word-break instance from a .wbi file
    ///
    /// The empty text is always breakable (zero words); a +|o regex, in
    /// contrast, matches the empty text only under `match` semantics when it
    /// derives the empty string, which dictionaries of nonempty words never
    /// do.
    Wordbreak {
        /// Instance file (.wbi)
        #[arg(short = 'd', long)]
        instance: PathBuf,
        /// dp is the O(nm) oracle; q2 and sumset force one jump method
        #[arg(long, default_value = "auto")]
        algo: Algo,
        /// Also print every breakable prefix length
        #[arg(long = "emit-T")]
        emit_t: bool,
        /// Output format
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Generate reduction instances
    #[command(subcommand)]
    Gen(Gen),
    /// Sweep dictionary size at fixed n and fit log-log slopes
    ///
    /// Instances come from the built-in chain family, which stresses every
    /// length bucket at once. Each point is the median of --repeats runs.
    Bench {
        /// Text length
        #[arg(long, default_value_t = 1 << 14)]
        n: usize,
        /// Dictionary sizes, comma separated
        #[arg(long, value_delimiter = ',', default_value = "256,1024,4096,16384")]
        m: Vec<usize>,
        /// Algorithms to sweep, comma separated
        #[arg(long, value_delimiter = ',', default_value = "q2,sumset,auto")]
        algos: Vec<Algo>,
        /// Runs per point (median taken)
        #[arg(long, default_value_t = 3)]
        repeats: usize,
        /// Output format
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum Gen {
    /// k-clique word-break instance, from G(n, p) or an edge-list file
    ///
    /// The instance is breakable iff the graph has a k-clique.
    CliqueWb {
        /// Number of graph nodes
        #[arg(long, required_unless_present = "graph", conflicts_with = "graph")]
        n: Option<u32>,
        /// Clique size (at least 4)
        #[arg(long, default_value_t = 4)]
        k: usize,
        /// Edge probability for the random graph
        #[arg(long, default_value_t = 0.5, conflicts_with = "graph")]
        edge_prob: f64,
        /// RNG seed for the random graph
        #[arg(long, default_value_t = 0, conflicts_with = "graph")]
        seed: u64,
        /// Edge-list file instead: first line the node count, then "u v" lines
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Output .wbi file
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Orthogonal-vectors membership instance
    ///
    /// Writes PREFIX.regex and PREFIX.txt in token syntax, consumable by
    /// `match --tokens`. The text matches iff some a in A is orthogonal to
    /// some b in B.
    Ov {
        /// Vectors on the text side
        #[arg(long)]
        na: usize,
        /// Vectors on the pattern side
        #[arg(long)]
        nb: usize,
        /// Vector dimension
        #[arg(long)]
        d: usize,
        /// Target hard type: pipe-pipe (+|o|), pipe-plus (+|o+), outer (|+|o)
        #[arg(long)]
        variant: OvVariant,
        /// RNG seed
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path prefix
        #[arg(short, long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Classify {
            r#type,
            pattern_matching,
            format,
        } => cmd_classify(&r#type, pattern_matching, format),
        Command::Match {
            regex,
            text,
            engine,
            tokens,
            format,
        } => cmd_match(&regex, &text, engine, tokens, format),
        Command::Wordbreak {
            instance,
            algo,
            emit_t,
            format,
        } => cmd_wordbreak(&instance, algo, emit_t, format),
        Command::Gen(gen) => cmd_gen(gen),
        Command::Bench {
            n,
            m,
            algos,
            repeats,
            format,
        } => cmd_bench(n, &m, algos, repeats, format),
    }
}

fn cmd_classify(t: &str, pattern_matching: bool, format: Format) -> Result<bool, Failure> {
    let t = parse_type(t)?;
    let mut rows: Vec<(&str, String)> = Vec::new();
    if pattern_matching {
        let c = classify_pattern_matching(&t);
        rows.push(("original", c.original.to_string()));
        rows.push(("simplified", c.simplified.to_string()));
        rows.push(("verdict", c.verdict.to_string()));
    } else {
        let c = classify_membership(&t);
        let steps: Vec<String> = c.trail.iter().map(ToString::to_string).collect();
        let trail = match (steps.is_empty(), format) {
            (true, Format::Text) => "(none)".to_string(),
            _ => steps.join("; "),
        };
        rows.push(("original", c.original.to_string()));
        rows.push(("trail", trail));
        rows.push(("simplified", c.simplified.to_string()));
        rows.push(("verdict", c.verdict.to_string()));
        rows.push(("engine", EngineKind::for_verdict(&c.verdict).to_string()));
    }
    emit(&rows, format);
    Ok(true)
}

fn cmd_match(
    regex: &Path,
    text: &Path,
    engine: EngineChoice,
    tokens: bool,
    format: Format,
) -> Result<bool, Failure> {
    let mode = if tokens {
        SyntaxMode::Tokens
    } else {
        SyntaxMode::Ascii
    };
    let pattern = read_string(regex)?;
    let r = parse_regex(pattern.trim_end_matches(['\n', '\r']), mode)
        .map_err(|e| format!("{}: {e}", regex.display()))?;
    let t = read_text(text, tokens)?;
    let m = Matcher::with_engine(&r, engine)?;
    if let Some(w) = m.warning() {
        eprintln!("warning: {w}");
    }
    let hit = m.matches(t.as_slice());
    match format {
        Format::Tsv => emit(
            &[
                ("matched", hit.to_string()),
                ("engine", m.engine().to_string()),
            ],
            format,
        ),
        Format::Text => println!(
            "{} (engine: {})",
            if hit { "match" } else { "no match" },
            m.engine()
        ),
    }
    Ok(hit)
}

fn cmd_wordbreak(path: &Path, algo: Algo, emit_t: bool, format: Format) -> Result<bool, Failure> {
    let inst = read_wbi(&read_string(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
    let reach = reachable_prefixes(&inst, algo);
    let ok = reach.contains(inst.n());
    let prefixes = || {
        let ls: Vec<String> = reach.iter().map(|i| i.to_string()).collect();
        ls.join(" ")
    };
    match format {
        Format::Tsv => {
            let mut rows = vec![("breakable", ok.to_string())];
            if emit_t {
                rows.push(("T", prefixes()));
            }
            emit(&rows, format);
        }
        Format::Text => {
            println!("{}", if ok { "breakable" } else { "not breakable" });
            if emit_t {
                println!("T: {}", prefixes());
            }
        }
    }
    Ok(ok)
}

fn cmd_gen(gen: Gen) -> Result<bool, Failure> {
    match gen {
        Gen::CliqueWb {
            n,
            k,
            edge_prob,
            seed,
            graph,
            out,
        } => {
            if k < 4 {
                return Err("k must be at least 4".into());
            }
            let g = match &graph {
                Some(path) => Graph::parse_edge_list(&read_string(path)?)
                    .map_err(|e| format!("{}: {e}", path.display()))?,
                None => {
                    let n = n.expect("clap requires --n without --graph");
                    if n == 0 {
                        return Err("--n must be positive".into());
                    }
                    if !(0.0..=1.0).contains(&edge_prob) {
                        return Err("--edge-prob must lie in [0, 1]".into());
                    }
                    rand_graph(&mut ChaCha8Rng::seed_from_u64(seed), n, edge_prob)
                }
            };
            let inst = gen_clique_wordbreak(&g, k);
            fs::write(&out, write_wbi(&inst)).map_err(|e| format!("{}: {e}", out.display()))?;
            println!(
                "wrote {} (graph n={}, k={}; text {}, dictionary {} words / {} symbols)",
                out.display(),
                g.n(),
                k,
                inst.n(),
                inst.words.len(),
                inst.m()
            );
            Ok(true)
        }
        Gen::Ov {
            na,
            nb,
            d,
            variant,
            seed,
            out,
        } => {
            if na == 0 || nb == 0 || d == 0 {
                return Err("--na, --nb, and --d must be positive".into());
            }
            let inst = rand_ov(&mut ChaCha8Rng::seed_from_u64(seed), na, nb, d);
            let (r, text) = gen_ov_instance(&inst, variant);
            let pattern = render_regex(&r, SyntaxMode::Tokens).expect("token rendering is total");
            let ids: Vec<String> = text.0.iter().map(|s| s.0.to_string()).collect();
            let regex_path = with_suffix(&out, ".regex");
            let text_path = with_suffix(&out, ".txt");
            fs::write(&regex_path, pattern + "\n")
                .map_err(|e| format!("{}: {e}", regex_path.display()))?;
            fs::write(&text_path, ids.join(" ") + "\n")
                .map_err(|e| format!("{}: {e}", text_path.display()))?;
            println!(
                "wrote {} and {} (type {}, text {}, pattern {} nodes)",
                regex_path.display(),
                text_path.display(),
                variant.type_of(),
                text.len(),
                r.node_count()
            );
            Ok(true)
        }
    }
}

fn cmd_bench(
    n: usize,
    ms: &[usize],
    mut algos: Vec<Algo>,
    repeats: usize,
    format: Format,
) -> Result<bool, Failure> {
    if n == 0 || repeats == 0 {
        return Err("--n and --repeats must be positive".into());
    }
    if ms.len() < 2 {
        return Err("need at least two m values to fit a slope".into());
    }
    let mut seen: Vec<Algo> = Vec::new();
    algos.retain(|a| {
        let fresh = !seen.contains(a);
        if fresh {
            seen.push(*a);
        }
        fresh
    });
    let report = wordbreak_sweep(n, ms, &algos, repeats);
    match format {
        Format::Tsv => {
            println!("algo\tn\tm\tseconds\tanswer");
            for row in &report.rows {
                println!(
                    "{}\t{}\t{}\t{:.6}\t{}",
                    algo_name(row.algo),
                    row.n,
                    row.m,
                    row.seconds,
                    row.answer
                );
            }
            for &a in &algos {
                println!("slope\t{}\t{:.3}", algo_name(a), report.slope(a));
            }
        }
        Format::Text => {
            println!("{:<8} {:>9} {:>9} {:>12} {:>7}", "algo", "n", "m", "seconds", "answer");
            for row in &report.rows {
                println!(
                    "{:<8} {:>9} {:>9} {:>12.6} {:>7}",
                    algo_name(row.algo),
                    row.n,
                    row.m,
                    row.seconds,
                    row.answer
                );
            }
            println!();
            for &a in &algos {
                println!("slope({}) = {:.3}", algo_name(a), report.slope(a));
            }
        }
    }
    if !report.answers_agree() {
        return Err("algorithms disagree on some point; this is a bug".into());
    }
    Ok(true)
}

fn algo_name(a: Algo) -> String {
    format!("{a:?}").to_lowercase()
}

fn emit(rows: &[(&str, String)], format: Format) {
    let pad = match format {
        Format::Tsv => 0,
        Format::Text => rows.iter().map(|(key, _)| key.len()).max().unwrap_or(0),
    };
    for (key, value) in rows {
        match format {
            Format::Tsv => println!("{key}\t{value}"),
            Format::Text => println!("{key:<pad$}  {value}"),
        }
    }
}

fn read_string(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn read_text(path: &Path, tokens: bool) -> Result<Text, Failure> {
    if tokens {
        let raw = read_string(path)?;
        let ids: Result<Vec<u32>, _> = raw.split_whitespace().map(str::parse).collect();
        let ids = ids.map_err(|e| format!("{}: bad symbol id: {e}", path.display()))?;
        Ok(Text::from_ids(&ids))
    } else {
        let mut bytes = fs::read(path).map_err(|e| format!("{}: {e}", path.display()))?;
        if bytes.last() == Some(&b'\n') {
            bytes.pop();
            if bytes.last() == Some(&b'\r') {
                bytes.pop();
            }
        }
        Ok(Text::from_ascii(&bytes))
    }
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

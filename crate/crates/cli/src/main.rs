use std::fs;
use std::io::{self, BufRead, BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use rayon::prelude::*;

use perso_norm::corpus::{
    corpus_stats, decode_lines, diff_corpus, filter_corpus, synthetic_corpus, to_corpus, write_diff_report,
    SyntheticConfig,
};
use perso_norm::experiment::{format_float, run_experiment, write_folds, write_report, ExperimentConfig};
use perso_norm::lm::{cross_entropy, read_arpa, write_arpa, Discounting, NGramModel, Unit};
use perso_norm::stats::{brunner_munzel, delta_mu, mann_whitney, welch, TestResult};
use perso_norm::{Error, Grammar, Language, Mode};

/// Perso-Arabic script normalization and language-model experiments.
#[derive(Parser)]
#[command(name = "perso-norm", version)]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normalize text line by line.
    Normalize {
        #[arg(long)]
        lang: String,
        #[arg(long, default_value = "reading")]
        mode: Mode,
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Only check that normalizing the output again changes nothing.
        #[arg(long)]
        check: bool,
        /// Directory whose rule files replace the bundled ones.
        #[arg(long)]
        grammar_dir: Option<PathBuf>,
    },
    /// Report every token that normalization changes.
    Diff {
        #[arg(long)]
        lang: String,
        #[arg(long, default_value = "reading")]
        mode: Mode,
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        report: PathBuf,
        #[arg(long)]
        grammar_dir: Option<PathBuf>,
    },
    /// Keep lines that are mostly in Arabic script.
    Filter {
        /// Minimum share of Arabic-block code points.
        #[arg(long)]
        beta: Option<f64>,
        /// Takes the default threshold for this language when --beta is absent.
        #[arg(long)]
        lang: Option<String>,
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print corpus statistics; with --lang also the normalization counts.
    Stats {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        lang: Option<String>,
        #[arg(long, default_value = "reading")]
        mode: Mode,
        #[arg(long)]
        grammar_dir: Option<PathBuf>,
    },
    /// Train a Kneser-Ney model and write it in ARPA format.
    TrainLm {
        #[arg(long)]
        unit: Unit,
        #[arg(long)]
        order: usize,
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        model: PathBuf,
        /// estimated, fallback[:D1,D2,D3] or fixed:D1,D2,D3
        #[arg(long, default_value = "estimated")]
        discounting: Discounting,
    },
    /// Print the cross-entropy of a text under a model, in bits per token.
    Entropy {
        #[arg(long)]
        model: PathBuf,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Run the k-fold comparison of baseline and normalized models.
    Kfold {
        #[arg(long)]
        lang: String,
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        seed: u64,
        /// Filter the corpus with this script threshold first.
        #[arg(long)]
        beta: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Per-fold entropies and token counts.
        #[arg(long)]
        folds_out: Option<PathBuf>,
        #[arg(long)]
        grammar_dir: Option<PathBuf>,
    },
    /// Generate a synthetic Urdu corpus with known spelling variants.
    Synth {
        #[arg(long, default_value_t = 2000)]
        lines: usize,
        #[arg(long, default_value_t = 5000)]
        vocabulary: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare two files of numbers, one per line.
    Sigtest {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.chain().find_map(|e| e.downcast_ref::<Error>()) {
        Some(Error::Encoding { .. }) => 3,
        Some(
            Error::UnknownLanguage(_)
            | Error::NoInventory(_)
            | Error::Parse { .. }
            | Error::DuplicateRule { .. }
            | Error::InventoryViolation { .. }
            | Error::InvalidRule { .. }
            | Error::Config(_)
            | Error::Io { .. },
        ) => 2,
        Some(_) => 1,
        None if err.chain().any(|e| e.is::<io::Error>()) => 2,
        None => 1,
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn read_input(path: Option<&Path>) -> Result<Vec<String>> {
    let mut bytes = Vec::new();
    let name = match path {
        Some(p) => {
            bytes = fs::read(p).map_err(|source| Error::Io {
                path: p.to_path_buf(),
                source,
            })?;
            p.display().to_string()
        }
        None => {
            io::stdin()
                .lock()
                .read_to_end(&mut bytes)
                .context("reading standard input")?;
            "<stdin>".to_string()
        }
    };
    let decoded = decode_lines(&bytes).with_context(|| format!("decoding {name}"))?;
    if decoded.had_bom {
        eprintln!("note: stripped byte order mark from {name}");
    }
    Ok(decoded.lines)
}

/// Writes to `path` through a temporary file in the same directory, or to
/// stdout.
fn write_output(path: Option<&Path>, body: impl FnOnce(&mut dyn Write) -> io::Result<()>) -> Result<()> {
    match path {
        Some(p) => {
            let dir = match p.parent() {
                Some(d) if !d.as_os_str().is_empty() => d,
                _ => Path::new("."),
            };
            let mut tmp = tempfile::NamedTempFile::new_in(dir)
                .with_context(|| format!("creating a temporary file in {}", dir.display()))?;
            {
                let mut w = BufWriter::new(tmp.as_file_mut());
                body(&mut w)
                    .and_then(|_| w.flush())
                    .with_context(|| format!("writing {}", p.display()))?;
            }
            tmp.persist(p).with_context(|| format!("replacing {}", p.display()))?;
        }
        None => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            body(&mut w)
                .and_then(|_| w.flush())
                .context("writing standard output")?;
        }
    }
    Ok(())
}

fn write_lines<'a>(lines: impl IntoIterator<Item = &'a str>, w: &mut dyn Write) -> io::Result<()> {
    for line in lines {
        w.write_all(line.as_bytes())?;
        w.write_all(b"\n")?;
    }
    Ok(())
}

fn load_grammar(lang: &str, dir: Option<&Path>) -> Result<Grammar> {
    let grammar = Grammar::load(lang, dir)?;
    log::info!("grammar {} version {}", grammar.language().tag(), grammar.version());
    Ok(grammar)
}

fn read_numbers(path: &Path) -> Result<Vec<f64>> {
    let file = fs::File::open(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let mut values = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|_| Error::Encoding { line: i + 1 })?;
        let field = line.trim();
        if field.is_empty() {
            continue;
        }
        match field.parse::<f64>() {
            Ok(v) if v.is_finite() => values.push(v),
            _ => {
                return Err(Error::Encoding { line: i + 1 })
                    .with_context(|| format!("{}: `{field}` is not a number", path.display()))
            }
        }
    }
    Ok(values)
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Normalize {
            lang,
            mode,
            input,
            out,
            check,
            grammar_dir,
        } => {
            let grammar = load_grammar(&lang, grammar_dir.as_deref())?;
            let lines = read_input(input.as_deref())?;
            let normalized: Vec<String> = lines.par_iter().map(|l| grammar.normalize_str(mode, l)).collect();
            if check {
                let bad: Vec<usize> = normalized
                    .par_iter()
                    .enumerate()
                    .filter(|(_, l)| grammar.normalize_str(mode, l) != **l)
                    .map(|(i, _)| i + 1)
                    .collect();
                if let Some(first) = bad.first() {
                    eprintln!("{} line(s) not idempotent, first at line {first}", bad.len());
                    return Ok(1);
                }
                eprintln!("{} lines idempotent", lines.len());
                return Ok(0);
            }
            write_output(out.as_deref(), |w| {
                write_lines(normalized.iter().map(String::as_str), w)
            })?;
        }
        Command::Diff {
            lang,
            mode,
            input,
            report,
            grammar_dir,
        } => {
            let grammar = load_grammar(&lang, grammar_dir.as_deref())?;
            let lines = to_corpus(read_input(input.as_deref())?);
            let diff = diff_corpus(&lines, &grammar, mode);
            write_output(Some(&report), |w| write_diff_report(w, &diff))?;
            write_output(None, |w| diff.stats.write_block(w))?;
        }
        Command::Filter { beta, lang, input, out } => {
            let beta = match (beta, lang) {
                (Some(b), _) => b,
                (None, Some(tag)) => tag.parse::<Language>()?.default_beta(),
                (None, None) => return Err(Error::Config("give --beta or --lang".into()).into()),
            };
            if !(0.0..=1.0).contains(&beta) {
                return Err(Error::Config(format!("beta must be in [0, 1], got {beta}")).into());
            }
            let lines = to_corpus(read_input(input.as_deref())?);
            let kept = filter_corpus(&lines, beta);
            eprintln!("kept {} of {} lines", kept.len(), lines.len());
            write_output(out.as_deref(), |w| write_lines(kept.iter().map(|l| l.text.as_str()), w))?;
        }
        Command::Stats {
            input,
            lang,
            mode,
            grammar_dir,
        } => {
            let lines = to_corpus(read_input(input.as_deref())?);
            match lang {
                Some(lang) => {
                    let grammar = load_grammar(&lang, grammar_dir.as_deref())?;
                    let diff = diff_corpus(&lines, &grammar, mode);
                    write_output(None, |w| diff.stats.write_block(w))?;
                }
                None => {
                    let (n_lines, n_types) = corpus_stats(&lines);
                    write_output(None, |w| {
                        writeln!(w, "# stats")?;
                        writeln!(w, "# N_l\t{n_lines}")?;
                        writeln!(w, "# N_w\t{n_types}")
                    })?;
                }
            }
        }
        Command::TrainLm {
            unit,
            order,
            input,
            model,
            discounting,
        } => {
            if order == 0 {
                return Err(Error::Config("order must be positive".into()).into());
            }
            let lines = read_input(input.as_deref())?;
            let lm = NGramModel::train(&lines, unit, order, discounting)?;
            write_output(Some(&model), |w| write_arpa(&lm, w))?;
        }
        Command::Entropy { model, input } => {
            let file = fs::File::open(&model).map_err(|source| Error::Io {
                path: model.clone(),
                source,
            })?;
            let lm = read_arpa(BufReader::new(file)).with_context(|| format!("reading {}", model.display()))?;
            let lines = read_input(input.as_deref())?;
            let h = cross_entropy(&lm, &lines)?;
            println!("{h}");
        }
        Command::Kfold {
            lang,
            config,
            input,
            seed,
            beta,
            out,
            folds_out,
            grammar_dir,
        } => {
            let language: Language = lang.parse()?;
            let mut cfg = match &config {
                Some(path) => {
                    let text = fs::read_to_string(path).map_err(|source| Error::Io {
                        path: path.to_path_buf(),
                        source,
                    })?;
                    ExperimentConfig::parse(&text, Some(language), Some(seed))
                        .with_context(|| format!("in {}", path.display()))?
                }
                None => ExperimentConfig::new(language, Unit::Char, seed),
            };
            cfg.language = language;
            cfg.seed = seed;
            let grammar = load_grammar(&lang, grammar_dir.as_deref())?;
            let mut lines = to_corpus(read_input(input.as_deref())?);
            if let Some(beta) = beta {
                let before = lines.len();
                lines = filter_corpus(&lines, beta);
                eprintln!("kept {} of {before} lines", lines.len());
            }
            let outcome = run_experiment(&lines, &grammar, &cfg)?;
            write_output(out.as_deref(), |w| write_report(w, &cfg, grammar.version(), &outcome))?;
            if let Some(path) = folds_out {
                write_output(Some(&path), |w| write_folds(w, &outcome.folds))?;
            }
        }
        Command::Synth {
            lines,
            vocabulary,
            seed,
            out,
        } => {
            let text = synthetic_corpus(&SyntheticConfig {
                lines,
                vocabulary,
                seed,
                ..SyntheticConfig::default()
            });
            write_output(out.as_deref(), |w| write_lines(text.iter().map(String::as_str), w))?;
        }
        Command::Sigtest { a, b } => {
            let xa = read_numbers(&a)?;
            let xb = read_numbers(&b)?;
            if xa.is_empty() || xb.is_empty() {
                bail!(Error::Precondition("both files need at least one number".into()));
            }
            let d = delta_mu(&xa, &xb)?;
            let row = |name: &str, r: perso_norm::Result<TestResult>| -> String {
                match r {
                    Ok(r) => {
                        let (lo, hi) =
                            r.ci.map_or(("nan".into(), "nan".into()), |c| (format_float(c.0), format_float(c.1)));
                        let df = r.df.map_or("nan".into(), format_float);
                        format!(
                            "{name}\t{}\t{}\t{df}\t{lo}\t{hi}",
                            format_float(r.statistic),
                            format_float(r.p_value)
                        )
                    }
                    Err(e) => {
                        log::warn!("{name}: {e}");
                        format!("{name}\tnan\tnan\tnan\tnan\tnan")
                    }
                }
            };
            write_output(None, |w| {
                writeln!(w, "# Δmu\t{}", format_float(d))?;
                writeln!(w, "test\tstatistic\tp\tdf\tci_lo\tci_hi")?;
                writeln!(w, "{}", row("welch", welch(&xa, &xb)))?;
                writeln!(w, "{}", row("mann_whitney", mann_whitney(&xa, &xb)))?;
                writeln!(w, "{}", row("brunner_munzel", brunner_munzel(&xa, &xb)))
            })?;
        }
    }
    Ok(0)
}

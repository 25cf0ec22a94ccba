//! Subcommand implementations.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use sbd_core::descriptor::PaddingPolicy;
use sbd_core::evaluation::{
    baseline_always_boundary, build_samples, case_transform, evaluate, format_grid_table,
    run_grid, CaseMode, GoldCorpus, GridAxis, GridRow, Split,
};
use sbd_core::labeler::{label_document, Label, Thresholds};
use sbd_core::lexicon::{Lexicon, TagMap, UnknownWordPolicy};
use sbd_core::network::{load_model, save_model, ModelMeta, Network, NetworkConfig};
use sbd_core::tokenizer::tokenize;

use crate::config::{parse_usize_list, Settings};
use crate::{CliError, CommonArgs, EvalArgs, GridArgs, InspectArgs, LabelArgs, NetArgs, SplitArgs, TrainArgs};

// ---------------------------------------------------------------------------
// shared plumbing
// ---------------------------------------------------------------------------

/// Writes via a temp file in the same directory plus rename, so a failed run
/// never leaves a partial artifact behind.
fn write_atomic(path: &Path, content: &[u8]) -> Result<(), CliError> {
    let file_name = path
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| "out".to_string());
    let tmp = path.with_file_name(format!(".{file_name}.tmp{}", std::process::id()));
    let write = fs::write(&tmp, content).and_then(|()| fs::rename(&tmp, path));
    if let Err(e) = write {
        let _ = fs::remove_file(&tmp);
        return Err(CliError::Data(format!(
            "cannot write {}: {e}",
            path.display()
        )));
    }
    Ok(())
}

fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Data(format!("cannot read {}: {e}", path.display())))
}

fn resolve_unknown_policy(
    settings: &Settings,
    common: &CommonArgs,
) -> Result<UnknownWordPolicy, CliError> {
    let name: String = settings.resolve(
        "unknown-lowercase",
        common.unknown_lowercase.clone(),
        UnknownWordPolicy::default().name().to_string(),
    )?;
    UnknownWordPolicy::from_name(&name)
        .ok_or_else(|| CliError::Usage(format!("unknown --unknown-lowercase policy {name:?}")))
}

fn resolve_padding(settings: &Settings, common: &CommonArgs) -> Result<PaddingPolicy, CliError> {
    let name: String = settings.resolve(
        "padding",
        common.padding.clone(),
        PaddingPolicy::default().name().to_string(),
    )?;
    PaddingPolicy::from_name(&name)
        .ok_or_else(|| CliError::Usage(format!("unknown --padding policy {name:?}")))
}

fn resolve_case(settings: &Settings, flag: Option<String>) -> Result<Option<CaseMode>, CliError> {
    match settings.resolve_opt("case", flag)? {
        None => Ok(None),
        Some(name) => CaseMode::from_name(&name)
            .map(Some)
            .ok_or_else(|| CliError::Usage(format!("unknown --case mode {name:?} (lower|upper)"))),
    }
}

fn load_lexicon(
    settings: &Settings,
    common: &CommonArgs,
    policy: UnknownWordPolicy,
) -> Result<Lexicon, CliError> {
    let tagmap_path = settings.resolve_input_path("tagmap", common.tagmap.clone())?;
    let lexicon_path = settings.resolve_input_path("lexicon", common.lexicon.clone())?;
    let tagmap = TagMap::from_path(&tagmap_path)?;
    Ok(Lexicon::from_path(&lexicon_path, tagmap)?.with_unknown_policy(policy))
}

fn resolve_net_config(settings: &Settings, net: &NetArgs) -> Result<NetworkConfig, CliError> {
    let d = NetworkConfig::default();
    let config = NetworkConfig {
        context_k: settings.resolve("context-k", net.context_k, d.context_k)?,
        hidden_j: settings.resolve("hidden-j", net.hidden_j, d.hidden_j)?,
        learning_rate: settings.resolve("learning-rate", net.learning_rate, d.learning_rate)?,
        max_epochs: settings.resolve("max-epochs", net.max_epochs, d.max_epochs)?,
        patience: settings.resolve("patience", net.patience, d.patience)?,
        seed: settings.resolve("seed", net.seed, d.seed)?,
        init_range: settings.resolve("init-range", net.init_range, d.init_range)?,
    };
    config.validate()?;
    Ok(config)
}

struct SplitSpec {
    train_size: usize,
    cross_size: usize,
    seed: u64,
}

fn resolve_split(settings: &Settings, split: &SplitArgs) -> Result<SplitSpec, CliError> {
    Ok(SplitSpec {
        train_size: settings.resolve("train-size", split.train_size, 573)?,
        cross_size: settings.resolve("cross-size", split.cross_size, 258)?,
        seed: settings.resolve("split-seed", split.split_seed, 0)?,
    })
}

fn resolve_thresholds(
    settings: &Settings,
    t0: Option<f64>,
    t1: Option<f64>,
) -> Result<Thresholds, CliError> {
    let t0 = settings.resolve("t0", t0, 0.5)?;
    let t1 = settings.resolve("t1", t1, 0.5)?;
    Ok(Thresholds::new(t0, t1)?)
}

/// Renders the effective configuration, one `prefix key=value` line each.
/// This block is echoed into stdout reports and machine-readable artifacts.
fn echo_block(prefix: &str, pairs: &[(&str, String)]) -> String {
    let mut out = String::new();
    for (key, value) in pairs {
        let _ = writeln!(out, "{prefix}{key}={value}");
    }
    out
}

fn net_echo(config: &NetworkConfig) -> Vec<(&'static str, String)> {
    vec![
        ("context-k", config.context_k.to_string()),
        ("hidden-j", config.hidden_j.to_string()),
        ("learning-rate", config.learning_rate.to_string()),
        ("max-epochs", config.max_epochs.to_string()),
        ("patience", config.patience.to_string()),
        ("seed", config.seed.to_string()),
        ("init-range", config.init_range.to_string()),
    ]
}

fn unescape(s: &str) -> String {
    let mut out = String::new();
    let mut chars = s.chars();
    while let Some(c) = chars.next() {
        if c == '\\' {
            match chars.next() {
                Some('n') => out.push('\n'),
                Some('t') => out.push('\t'),
                Some('\\') => out.push('\\'),
                Some(other) => {
                    out.push('\\');
                    out.push(other);
                }
                None => out.push('\\'),
            }
        } else {
            out.push(c);
        }
    }
    out
}

/// Loads a model and refuses to pair it with a lexicon built over a
/// different tag map. A differing lexicon is allowed with a warning, since
/// the category space is still the one the model was trained on.
fn load_checked_model(
    settings: &Settings,
    model_flag: Option<PathBuf>,
    lexicon: &Lexicon,
) -> Result<(Network, ModelMeta, PathBuf), CliError> {
    let path = settings.resolve_input_path("model", model_flag)?;
    let mut file = fs::File::open(&path)
        .map_err(|e| CliError::Data(format!("cannot open {}: {e}", path.display())))?;
    let (net, meta) = load_model(&mut file)?;
    let current = lexicon.tag_map().fingerprint();
    if meta.tagmap_fingerprint != current {
        return Err(CliError::Usage(format!(
            "model {} was trained with tag map fingerprint {} but the supplied tag map has {}; \
             the category ordering would not match, refusing to label",
            path.display(),
            meta.tagmap_fingerprint,
            current
        )));
    }
    if meta.lexicon_identity != lexicon.identity() {
        eprintln!(
            "warning: model was trained with lexicon {:?}, labeling with {:?}",
            meta.lexicon_identity,
            lexicon.identity()
        );
    }
    Ok((net, meta, path))
}

// ---------------------------------------------------------------------------
// train
// ---------------------------------------------------------------------------

pub fn train(args: TrainArgs) -> Result<(), CliError> {
    let settings = Settings::load(args.common.config.as_deref())?;
    let unknown = resolve_unknown_policy(&settings, &args.common)?;
    let padding = resolve_padding(&settings, &args.common)?;
    let case = resolve_case(&settings, args.case)?;
    let corpus_path = settings.resolve_input_path("corpus", args.corpus)?;
    let model_path = settings.resolve_output_path("model", args.model)?;
    let config = resolve_net_config(&settings, &args.net)?;
    let split_spec = resolve_split(&settings, &args.split)?;
    let lexicon = load_lexicon(&settings, &args.common, unknown)?;

    let mut source = read_text(&corpus_path)?;
    if let Some(mode) = case {
        source = case_transform(&source, mode);
    }
    let gold = GoldCorpus::ingest(&source);
    if gold.lines_without_candidate > 0 {
        eprintln!(
            "warning: {} corpus lines have no candidate punctuation",
            gold.lines_without_candidate
        );
    }
    let samples = build_samples(&gold, &lexicon, config.context_k, padding)?;
    let split = Split::seeded(
        samples.len(),
        split_spec.train_size,
        split_spec.cross_size,
        split_spec.seed,
    )?;
    let train_set = split.select(&samples, &split.train);
    let cross_set = split.select(&samples, &split.cross);

    let net = Network::init(config.clone())?;
    let started = Instant::now();
    let (trained, history) = net.train(&train_set, &cross_set)?;
    let seconds = started.elapsed().as_secs_f64();

    let meta = ModelMeta {
        tagmap_fingerprint: lexicon.tag_map().fingerprint(),
        lexicon_identity: lexicon.identity(),
        padding,
        unknown_policy: unknown,
    };
    let mut buf = Vec::new();
    save_model(&trained, &meta, &mut buf)?;
    write_atomic(&model_path, &buf)?;

    let mut pairs = net_echo(&config);
    pairs.push(("train-size", split_spec.train_size.to_string()));
    pairs.push(("cross-size", split_spec.cross_size.to_string()));
    pairs.push(("split-seed", split_spec.seed.to_string()));
    pairs.push(("padding", padding.name().to_string()));
    pairs.push(("unknown-lowercase", unknown.name().to_string()));
    if let Some(mode) = case {
        pairs.push(("case", mode.name().to_string()));
    }
    print!("{}", echo_block("", &pairs));
    println!("candidates={}", samples.len());
    println!("epochs={}", history.epochs_run);
    println!("best-epoch={}", history.best_epoch);
    println!(
        "train-error={:.6}",
        history.train_error_per_epoch[history.best_epoch]
    );
    println!(
        "cross-error={:.6}",
        history.cross_error_per_epoch[history.best_epoch]
    );
    println!("wall-seconds={seconds:.3}");
    println!("model={}", model_path.display());
    Ok(())
}

// ---------------------------------------------------------------------------
// label
// ---------------------------------------------------------------------------

pub fn label(args: LabelArgs) -> Result<(), CliError> {
    let settings = Settings::load(args.common.config.as_deref())?;
    // Policies ride with the model; the lexicon is loaded with a placeholder
    // and re-tuned from the model metadata below.
    let lexicon = load_lexicon(&settings, &args.common, UnknownWordPolicy::default())?;
    let (net, meta, model_path) = load_checked_model(&settings, args.model, &lexicon)?;
    let lexicon = lexicon.with_unknown_policy(meta.unknown_policy);
    let input_path = settings.resolve_input_path("input", args.input)?;
    let output: Option<PathBuf> = settings.resolve_opt("output", args.output)?;
    let thresholds = resolve_thresholds(&settings, args.t0, args.t1)?;
    let annotate = args.annotate || settings.resolve("annotate", None, false)?;
    let marker = unescape(
        &settings
            .resolve_opt("marker", args.marker)?
            .unwrap_or_else(|| "\n".to_string()),
    );

    let text = read_text(&input_path)?;
    let tokens = tokenize(&text);
    let decisions = label_document(&tokens, &lexicon, &net, thresholds, meta.padding)?;

    let body = if annotate {
        // Insert the marker after every boundary-labeled token. No config
        // header here: annotated text must stay ingestible as a corpus.
        let ends: BTreeSet<usize> = decisions
            .iter()
            .filter(|d| d.label == Label::Boundary)
            .map(|d| tokens[d.token_index].char_end)
            .collect();
        let mut out = String::with_capacity(text.len() + ends.len() * marker.len());
        for (i, ch) in text.chars().enumerate() {
            out.push(ch);
            if ends.contains(&(i + 1)) {
                out.push_str(&marker);
            }
        }
        out
    } else {
        let pairs = vec![
            ("model", model_path.display().to_string()),
            ("input", input_path.display().to_string()),
            ("t0", thresholds.t0().to_string()),
            ("t1", thresholds.t1().to_string()),
            ("padding", meta.padding.name().to_string()),
            ("unknown-lowercase", meta.unknown_policy.name().to_string()),
        ];
        let mut out = echo_block("# ", &pairs);
        for d in &decisions {
            let t = &tokens[d.token_index];
            let _ = writeln!(
                out,
                "{}\t{}\t{:.6}\t{}",
                t.char_start,
                t.surface,
                d.score,
                d.label.name()
            );
        }
        out
    };

    match output {
        Some(path) => {
            let path = settings.resolve_output_path("output", Some(path))?;
            write_atomic(&path, body.as_bytes())?;
        }
        None => print!("{body}"),
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

pub fn eval(args: EvalArgs) -> Result<(), CliError> {
    let settings = Settings::load(args.common.config.as_deref())?;
    let lexicon = load_lexicon(&settings, &args.common, UnknownWordPolicy::default())?;
    let (net, meta, model_path) = load_checked_model(&settings, args.model, &lexicon)?;
    let lexicon = lexicon.with_unknown_policy(meta.unknown_policy);
    let corpus_path = settings.resolve_input_path("corpus", args.corpus)?;
    let thresholds = resolve_thresholds(&settings, args.t0, args.t1)?;
    let case = resolve_case(&settings, args.case)?;
    let snippet_window = settings.resolve(
        "snippet-window",
        args.snippet_window,
        net.config().context_k / 2,
    )?;
    let show_errors = settings.resolve("show-errors", args.show_errors, 5usize)?;
    let summary: Option<PathBuf> = settings.resolve_opt("summary", args.summary)?;

    let mut source = read_text(&corpus_path)?;
    if let Some(mode) = case {
        source = case_transform(&source, mode);
    }
    let gold = GoldCorpus::ingest(&source);
    let tokens = gold.tokens();
    let decisions = label_document(&tokens, &lexicon, &net, thresholds, meta.padding)?;
    let report = evaluate(&decisions, &gold, snippet_window)?;
    let baseline = baseline_always_boundary(&gold)?;

    let mut pairs = vec![
        ("model", model_path.display().to_string()),
        ("corpus", corpus_path.display().to_string()),
        ("t0", thresholds.t0().to_string()),
        ("t1", thresholds.t1().to_string()),
        (
            "case",
            case.map(|m| m.name().to_string())
                .unwrap_or_else(|| "mixed".to_string()),
        ),
        ("snippet-window", snippet_window.to_string()),
    ];
    pairs.push(("total-candidates", report.total_candidates.to_string()));
    pairs.push(("correct", report.correct.to_string()));
    pairs.push(("false-positives", report.false_positives.to_string()));
    pairs.push(("false-negatives", report.false_negatives.to_string()));
    pairs.push(("no-opinion", report.no_opinion.to_string()));
    pairs.push((
        "error-rate",
        report
            .error_rate
            .map(|r| format!("{r:.6}"))
            .unwrap_or_else(|| "n/a".to_string()),
    ));
    pairs.push(("accuracy", format!("{:.6}", report.accuracy())));
    pairs.push(("baseline-always-boundary", format!("{baseline:.6}")));
    pairs.push((
        "lines-without-candidate",
        gold.lines_without_candidate.to_string(),
    ));

    print!("{}", echo_block("", &pairs));
    for ctx in report.per_error_contexts.iter().take(show_errors) {
        println!(
            "error\t{}\t{}\t{}",
            if ctx.is_false_positive { "FP" } else { "FN" },
            ctx.token_index,
            ctx.snippet
        );
    }

    if let Some(path) = summary {
        let path = settings.resolve_output_path("summary", Some(path))?;
        write_atomic(&path, echo_block("", &pairs).as_bytes())?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// grid
// ---------------------------------------------------------------------------

pub fn grid(args: GridArgs) -> Result<(), CliError> {
    let settings = Settings::load(args.common.config.as_deref())?;
    let unknown = resolve_unknown_policy(&settings, &args.common)?;
    let padding = resolve_padding(&settings, &args.common)?;
    let lexicon = load_lexicon(&settings, &args.common, unknown)?;
    let corpus_path = settings.resolve_input_path("corpus", args.corpus)?;
    let case = resolve_case(&settings, args.case)?;
    let base = resolve_net_config(&settings, &args.net)?;
    let split_spec = resolve_split(&settings, &args.split)?;
    let k_values = parse_usize_list(&settings.resolve(
        "k-values",
        args.k_values,
        "4,6,8".to_string(),
    )?)?;
    let j_values =
        parse_usize_list(&settings.resolve("j-values", args.j_values, "2".to_string())?)?;
    let vary: Option<String> = settings.resolve_opt("vary", args.vary)?;
    let summary_dir: Option<PathBuf> = settings.resolve_opt("summary-dir", args.summary_dir)?;

    let axis = match vary.as_deref() {
        Some("context") => GridAxis::Context,
        Some("hidden") => GridAxis::Hidden,
        Some(other) => {
            return Err(CliError::Usage(format!(
                "unknown --vary value {other:?} (context|hidden)"
            )))
        }
        None => {
            if j_values.len() > 1 && k_values.len() == 1 {
                GridAxis::Hidden
            } else if k_values.len() > 1 && j_values.len() > 1 {
                return Err(CliError::Usage(
                    "both k-values and j-values vary; pass --vary context or --vary hidden".into(),
                ));
            } else {
                GridAxis::Context
            }
        }
    };

    let mut source = read_text(&corpus_path)?;
    if let Some(mode) = case {
        source = case_transform(&source, mode);
    }
    let gold = GoldCorpus::ingest(&source);
    let total = gold.candidate_indices().len();
    let split = Split::seeded(total, split_spec.train_size, split_spec.cross_size, split_spec.seed)?;
    let rows = run_grid(&gold, &lexicon, &split, &k_values, &j_values, &base, padding)?;

    let mut pairs = net_echo(&base);
    pairs.push(("train-size", split_spec.train_size.to_string()));
    pairs.push(("cross-size", split_spec.cross_size.to_string()));
    pairs.push(("split-seed", split_spec.seed.to_string()));
    pairs.push(("padding", padding.name().to_string()));
    pairs.push(("unknown-lowercase", unknown.name().to_string()));
    pairs.push((
        "case",
        case.map(|m| m.name().to_string())
            .unwrap_or_else(|| "mixed".to_string()),
    ));
    pairs.push(("k-values", join_usize(&k_values)));
    pairs.push(("j-values", join_usize(&j_values)));
    print!("{}", echo_block("# ", &pairs));
    print!("{}", format_grid_table(&rows, axis));

    if let Some(dir) = summary_dir {
        fs::create_dir_all(&dir)
            .map_err(|e| CliError::Data(format!("cannot create {}: {e}", dir.display())))?;
        for row in &rows {
            let path = dir.join(format!("grid_k{}_j{}.txt", row.context_k, row.hidden_j));
            let mut cell_pairs = pairs.clone();
            cell_pairs.extend(cell_echo(row));
            write_atomic(&path, echo_block("", &cell_pairs).as_bytes())?;
        }
    }
    Ok(())
}

fn cell_echo(row: &GridRow) -> Vec<(&'static str, String)> {
    vec![
        ("cell-context-k", row.context_k.to_string()),
        ("cell-hidden-j", row.hidden_j.to_string()),
        ("epochs", row.epochs.to_string()),
        ("train-error", format!("{:.6}", row.train_error)),
        ("cross-error", format!("{:.6}", row.cross_error)),
        ("test-errors", row.test_errors.to_string()),
        ("test-error-pct", format!("{:.4}", row.test_error_pct)),
    ]
}

fn join_usize(values: &[usize]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

// ---------------------------------------------------------------------------
// inspect
// ---------------------------------------------------------------------------

pub fn inspect(args: InspectArgs) -> Result<(), CliError> {
    let mut did_anything = false;

    if let Some(path) = &args.model {
        let mut file = fs::File::open(path)
            .map_err(|e| CliError::Usage(format!("cannot open {}: {e}", path.display())))?;
        let (net, meta) = load_model(&mut file)?;
        let c = net.config();
        println!("model={}", path.display());
        print!("{}", echo_block("", &net_echo(c)));
        println!("input-dim={}", net.input_dim());
        println!("parameters={}", net.param_count());
        println!("padding={}", meta.padding.name());
        println!("unknown-lowercase={}", meta.unknown_policy.name());
        println!("tagmap-fingerprint={}", meta.tagmap_fingerprint);
        println!("lexicon-identity={}", meta.lexicon_identity);
        did_anything = true;
    }

    if let Some(path) = &args.lexicon {
        let tagmap_path = args.tagmap.as_ref().ok_or_else(|| {
            CliError::Usage("--lexicon inspection needs --tagmap for the raw tag set".into())
        })?;
        let tagmap = TagMap::from_path(tagmap_path)?;
        println!("tagmap={}", tagmap_path.display());
        println!("raw-tags={}", tagmap.raw_tag_count());
        println!("tagmap-fingerprint={}", tagmap.fingerprint());
        let lexicon = Lexicon::from_path(path, tagmap)?;
        println!("lexicon={}", path.display());
        println!("entries={}", lexicon.len());
        println!("total-count={}", lexicon.total_count());
        println!("identity={}", lexicon.identity());
        did_anything = true;
    }

    if let Some(path) = &args.corpus {
        let source = read_text(path)?;
        let gold = GoldCorpus::ingest(&source);
        let candidates = gold.candidate_indices().len();
        println!("corpus={}", path.display());
        println!("lines={}", source.lines().filter(|l| !l.trim().is_empty()).count());
        println!("candidates={candidates}");
        println!("boundaries={}", gold.boundary_set.len());
        if candidates > 0 {
            println!("baseline-always-boundary={:.6}", baseline_always_boundary(&gold)?);
        }
        println!("lines-without-candidate={}", gold.lines_without_candidate);
        did_anything = true;
    }

    if let Some(path) = &args.text {
        let text = read_text(path)?;
        for (i, t) in tokenize(&text).iter().enumerate() {
            println!(
                "{i}\t{}\t{}\t{}\t{}\t{}\t{}",
                t.kind.name(),
                t.char_start,
                t.char_end,
                t.surface,
                if t.is_capitalized { 1 } else { 0 },
                if t.is_boundary_candidate() { "candidate" } else { "-" }
            );
        }
        did_anything = true;
    }

    if !did_anything {
        return Err(CliError::Usage(
            "inspect needs at least one of --model, --lexicon, --corpus, --text".into(),
        ));
    }
    Ok(())
}

//! Integration tests against the real `sbd` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sbd"))
}

fn repo_data(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(rel)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

/// Trains a quick model on the bundled demo corpus into `dir`.
fn train_demo_model(dir: &Path) -> PathBuf {
    let model = dir.join("model.txt");
    let out = run(&[
        "train",
        "--lexicon",
        repo_data("lexicon/english.lex").to_str().unwrap(),
        "--tagmap",
        repo_data("tagmaps/penn.tagmap").to_str().unwrap(),
        "--corpus",
        repo_data("corpus/demo.txt").to_str().unwrap(),
        "--model",
        model.to_str().unwrap(),
        "--train-size",
        "30",
        "--cross-size",
        "10",
        "--max-epochs",
        "400",
        "--patience",
        "400",
        "--seed",
        "1",
    ]);
    assert!(
        out.status.success(),
        "train failed: {}\n{}",
        stdout(&out),
        stderr(&out)
    );
    assert!(model.exists());
    model
}

#[test]
fn train_is_deterministic_and_reports_protocol() {
    let dir = tempfile::tempdir().unwrap();
    let model_a = train_demo_model(dir.path());
    let bytes_a = std::fs::read(&model_a).unwrap();
    std::fs::remove_file(&model_a).unwrap();
    let model_b = train_demo_model(dir.path());
    let bytes_b = std::fs::read(&model_b).unwrap();
    assert_eq!(bytes_a, bytes_b, "same config + seed must give identical model files");
    let text = String::from_utf8(bytes_a).unwrap();
    assert!(text.starts_with("sbd-model v1\n"));
    assert!(text.trim_end().ends_with("end"));
}

#[test]
fn train_missing_lexicon_is_usage_error_naming_the_path() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "train",
        "--lexicon",
        "/nonexistent/lex.lex",
        "--tagmap",
        repo_data("tagmaps/penn.tagmap").to_str().unwrap(),
        "--corpus",
        repo_data("corpus/demo.txt").to_str().unwrap(),
        "--model",
        dir.path().join("m.txt").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("/nonexistent/lex.lex"));
    assert!(!dir.path().join("m.txt").exists(), "no partial model file");
}

#[test]
fn label_records_have_offset_surface_score_label() {
    let dir = tempfile::tempdir().unwrap();
    let model = train_demo_model(dir.path());
    let input = dir.path().join("input.txt");
    std::fs::write(&input, "The offer was rejected. He sat.\n").unwrap();
    let out = run(&[
        "label",
        "--lexicon",
        repo_data("lexicon/english.lex").to_str().unwrap(),
        "--tagmap",
        repo_data("tagmaps/penn.tagmap").to_str().unwrap(),
        "--model",
        model.to_str().unwrap(),
        "--input",
        input.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let records: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(records.len(), 2);
    for rec in &records {
        let fields: Vec<&str> = rec.split('\t').collect();
        assert_eq!(fields.len(), 4, "bad record {rec:?}");
        let _: usize = fields[0].parse().unwrap();
        assert_eq!(fields[1], ".");
        // Score printed with six decimal places.
        let (int_part, frac) = fields[2].split_once('.').unwrap();
        assert!(int_part == "0" || int_part == "1");
        assert_eq!(frac.len(), 6);
        assert!(["boundary", "non_boundary", "no_opinion"].contains(&fields[3]));
    }
    // The config echo rides along as comment lines.
    assert!(text.lines().any(|l| l.starts_with("# t0=")));
}

#[test]
fn label_empty_input_produces_no_records() {
    let dir = tempfile::tempdir().unwrap();
    let model = train_demo_model(dir.path());
    let input = dir.path().join("empty.txt");
    std::fs::write(&input, "").unwrap();
    let out = run(&[
        "label",
        "--lexicon",
        repo_data("lexicon/english.lex").to_str().unwrap(),
        "--tagmap",
        repo_data("tagmaps/penn.tagmap").to_str().unwrap(),
        "--model",
        model.to_str().unwrap(),
        "--input",
        input.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).lines().all(|l| l.starts_with('#')));
}

#[test]
fn label_refuses_mismatched_tagmap() {
    let dir = tempfile::tempdir().unwrap();
    let model = train_demo_model(dir.path());
    // A tag map with one extra entry has a different fingerprint.
    let other_tagmap = dir.path().join("other.tagmap");
    let mut base = std::fs::read_to_string(repo_data("tagmaps/penn.tagmap")).unwrap();
    base.push_str("XX9 others\n");
    std::fs::write(&other_tagmap, base).unwrap();
    let input = dir.path().join("input.txt");
    std::fs::write(&input, "He sat.\n").unwrap();
    let out = run(&[
        "label",
        "--lexicon",
        repo_data("lexicon/english.lex").to_str().unwrap(),
        "--tagmap",
        other_tagmap.to_str().unwrap(),
        "--model",
        model.to_str().unwrap(),
        "--input",
        input.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("tag map"));
}

#[test]
fn annotate_inserts_marker_after_each_boundary() {
    let dir = tempfile::tempdir().unwrap();
    let model = train_demo_model(dir.path());
    let input = dir.path().join("input.txt");
    let text = "The offer was rejected. He sat. The group met.\n";
    std::fs::write(&input, text).unwrap();
    let lexicon = repo_data("lexicon/english.lex");
    let tagmap = repo_data("tagmaps/penn.tagmap");
    let common = [
        "--lexicon",
        lexicon.to_str().unwrap(),
        "--tagmap",
        tagmap.to_str().unwrap(),
        "--model",
        model.to_str().unwrap(),
        "--input",
        input.to_str().unwrap(),
    ];
    let records = run(&[&["label"], &common[..]].concat());
    let boundaries = stdout(&records)
        .lines()
        .filter(|l| l.ends_with("\tboundary"))
        .count();
    let annotated = run(&[&["label", "--annotate", "--marker", "<SB>"], &common[..]].concat());
    assert!(annotated.status.success());
    let body = stdout(&annotated);
    assert_eq!(body.matches("<SB>").count(), boundaries);
    // Removing the markers restores the input exactly.
    assert_eq!(body.replace("<SB>", ""), text);
}

#[test]
fn eval_report_satisfies_partition_identity() {
    let dir = tempfile::tempdir().unwrap();
    let model = train_demo_model(dir.path());
    let summary = dir.path().join("summary.txt");
    let out = run(&[
        "eval",
        "--lexicon",
        repo_data("lexicon/english.lex").to_str().unwrap(),
        "--tagmap",
        repo_data("tagmaps/penn.tagmap").to_str().unwrap(),
        "--model",
        model.to_str().unwrap(),
        "--corpus",
        repo_data("corpus/demo.txt").to_str().unwrap(),
        "--summary",
        summary.to_str().unwrap(),
        "--t0",
        "0.2",
        "--t1",
        "0.8",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = std::fs::read_to_string(&summary).unwrap();
    let get = |key: &str| -> usize {
        text.lines()
            .find_map(|l| l.strip_prefix(&format!("{key}=")))
            .unwrap_or_else(|| panic!("missing {key} in summary:\n{text}"))
            .parse()
            .unwrap()
    };
    let total = get("total-candidates");
    assert_eq!(
        get("correct") + get("false-positives") + get("false-negatives") + get("no-opinion"),
        total
    );
    assert!(text.contains("baseline-always-boundary="));
    assert!(text.contains("case=mixed"));
    assert!(text.contains("t0=0.2"));
}

#[test]
fn eval_case_flag_is_echoed() {
    let dir = tempfile::tempdir().unwrap();
    let model = train_demo_model(dir.path());
    let out = run(&[
        "eval",
        "--lexicon",
        repo_data("lexicon/english.lex").to_str().unwrap(),
        "--tagmap",
        repo_data("tagmaps/penn.tagmap").to_str().unwrap(),
        "--model",
        model.to_str().unwrap(),
        "--corpus",
        repo_data("corpus/demo.txt").to_str().unwrap(),
        "--case",
        "lower",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("case=lower"));
}

#[test]
fn grid_prints_context_table_layout() {
    let out = run(&[
        "grid",
        "--lexicon",
        repo_data("lexicon/english.lex").to_str().unwrap(),
        "--tagmap",
        repo_data("tagmaps/penn.tagmap").to_str().unwrap(),
        "--corpus",
        repo_data("corpus/demo.txt").to_str().unwrap(),
        "--k-values",
        "2,4",
        "--j-values",
        "1",
        "--train-size",
        "30",
        "--cross-size",
        "10",
        "--max-epochs",
        "60",
        "--patience",
        "60",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let table: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(
        table[0],
        "Context Size\tTraining Epochs\tTraining Error\tCross Error\tTesting Errors\tTesting Error (%)"
    );
    assert!(table[1].starts_with("2-context\t"));
    assert!(table[2].starts_with("4-context\t"));
    assert_eq!(table.len(), 3);
}

#[test]
fn config_file_is_used_and_flags_override_it() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("run.conf");
    std::fs::write(
        &config,
        format!(
            "lexicon={}\ntagmap={}\ncorpus={}\ntrain-size=30\ncross-size=10\nmax-epochs=200\npatience=50\nseed=1\n",
            repo_data("lexicon/english.lex").display(),
            repo_data("tagmaps/penn.tagmap").display(),
            repo_data("corpus/demo.txt").display(),
        ),
    )
    .unwrap();
    let model = dir.path().join("m.txt");
    let out = run(&[
        "train",
        "--config",
        config.to_str().unwrap(),
        "--model",
        model.to_str().unwrap(),
        "--max-epochs",
        "120",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    // Flag wins over the file value.
    assert!(text.contains("max-epochs=120"), "{text}");
    assert!(text.contains("seed=1"));
}

#[test]
fn unknown_config_key_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("bad.conf");
    std::fs::write(&config, "no-such-key=1\n").unwrap();
    let out = run(&[
        "train",
        "--config",
        config.to_str().unwrap(),
        "--model",
        dir.path().join("m.txt").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("no-such-key"));
}

#[test]
fn truncated_model_is_a_data_error() {
    let dir = tempfile::tempdir().unwrap();
    let model = train_demo_model(dir.path());
    let bytes = std::fs::read(&model).unwrap();
    let cut = dir.path().join("cut.txt");
    std::fs::write(&cut, &bytes[..bytes.len() / 2]).unwrap();
    let input = dir.path().join("input.txt");
    std::fs::write(&input, "He sat.\n").unwrap();
    let out = run(&[
        "label",
        "--lexicon",
        repo_data("lexicon/english.lex").to_str().unwrap(),
        "--tagmap",
        repo_data("tagmaps/penn.tagmap").to_str().unwrap(),
        "--model",
        cut.to_str().unwrap(),
        "--input",
        input.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn inspect_reports_model_and_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let model = train_demo_model(dir.path());
    let out = run(&["inspect", "--model", model.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("context-k=6"));
    assert!(text.contains("input-dim=120"));
    assert!(text.contains("tagmap-fingerprint="));

    let out = run(&[
        "inspect",
        "--corpus",
        repo_data("corpus/demo.txt").to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("lines=40"));
    assert!(text.contains("boundaries=40"));
    assert!(text.contains("baseline-always-boundary="));
}

#[test]
fn inspect_without_arguments_is_usage_error() {
    let out = run(&["inspect"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bad_subcommand_usage_exits_one() {
    let out = run(&["label", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(1));
}

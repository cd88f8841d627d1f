mod common;

use std::fs;
use std::process::{Command, Output};

use common::printed_table;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_effort-prep"));
    c.env("EFFORT_PREP_NO_COLOR", "1");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn dataset_info_builtin() {
    let o = run(&["dataset", "info", "--builtin", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["count"], 24);
    assert_eq!(v["stats"]["size"]["min"], 3.1);
    assert_eq!(v["stats"]["size"]["max"], 16.2);

    let table = stdout(&run(&["dataset", "info", "--builtin"]));
    assert!(table.contains("records: 24"));
}

#[test]
fn dataset_info_empty_csv() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("empty.csv");
    fs::write(&p, "project_id,kloc,actual_effort\n").unwrap();
    let o = run(&["dataset", "info", p.to_str().unwrap()]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("records: 0"));
    assert!(out.contains("suppressed"));
}

#[test]
fn dataset_info_bad_csv_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.csv");
    fs::write(
        &p,
        "project_id,kloc,actual_effort\n1,16.2,86.1\n2,5.34,24.02\n3,-7.6,36.05\n",
    )
    .unwrap();
    let o = run(&["dataset", "info", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("row 3"), "{}", stderr(&o));
}

#[test]
fn missing_file_exits_2() {
    let o = run(&["compare", "--input", "/definitely/not/here.csv"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not found"));
}

#[test]
fn estimate_spot_values() {
    assert_eq!(stdout(&run(&["estimate", "16.2", "--mode", "organic"])), "44.6891\n");
    assert_eq!(stdout(&run(&["estimate", "1", "--mode", "organic"])), "2.4000\n");
    assert_eq!(stdout(&run(&["estimate", "7.6", "--mode", "organic"])), "20.1867\n");
    let o = run(&["estimate", "-1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn compare_default_matches_fixture() {
    let o = run(&[
        "compare",
        "--builtin",
        "--techniques",
        "none,norm:pad=1,log:e",
        "--mode",
        "organic",
        "--format",
        "csv",
    ]);
    assert!(o.status.success());
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(
        lines.next(),
        Some("project_id,raw_kloc,est_none,est_norm:pad=1,est_log:e")
    );
    for (line, row) in lines.zip(printed_table()) {
        let f: Vec<f64> = line.split(',').map(|x| x.parse().unwrap()).collect();
        assert_eq!(f[0] as u32, row.id);
        assert_eq!((f[2], f[3], f[4]), (row.none, row.norm, row.log), "project {}", row.id);
    }
    // Defaults are the same invocation.
    assert_eq!(stdout(&run(&["compare", "--format", "csv"])), out);
}

#[test]
fn compare_json_parses() {
    let o = run(&["compare", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["columns"].as_array().unwrap().len(), 3);
    assert_eq!(v["columns"][1]["rows"][15]["estimated_effort"], 0.1828);
}

#[test]
fn metrics_warns_for_transformed_units() {
    let o = run(&["metrics", "--techniques", "norm:pad=1"]);
    assert!(o.status.success());
    assert!(stderr(&o).contains("warning"));
    assert!(stdout(&o).contains("MMRE"));

    let o = run(&["metrics", "--techniques", "none"]);
    assert!(stderr(&o).is_empty());
}

#[test]
fn metrics_perfect_dataset() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("perfect.csv");
    let mut text = String::from("project_id,kloc,actual_effort\n");
    for (i, k) in [2.0f64, 5.0, 11.0, 40.0].iter().enumerate() {
        text.push_str(&format!("{},{},{}\n", i + 1, k, 2.4 * k.powf(1.05)));
    }
    fs::write(&p, text).unwrap();
    let o = run(&[
        "metrics",
        "--input",
        p.to_str().unwrap(),
        "--techniques",
        "none",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["reports"][0]["mmre"], 0.0);
    assert_eq!(v["reports"][0]["pred"], 1.0);
}

#[test]
fn calibrate_outputs() {
    let o = run(&["calibrate", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((v["a"].as_f64().unwrap() - 3.50).abs() < 0.02);
    assert!((v["b"].as_f64().unwrap() - 1.150).abs() < 0.005);
    assert!(v["r_squared"].as_f64().unwrap() > 0.9999);

    let dir = tempfile::tempdir().unwrap();
    let two = dir.path().join("two.csv");
    fs::write(
        &two,
        format!(
            "project_id,kloc,actual_effort\n1,1,2.4\n2,10,{}\n",
            2.4 * 10f64.powf(1.05)
        ),
    )
    .unwrap();
    let o = run(&["calibrate", "--input", two.to_str().unwrap(), "--decimals", "6"]);
    let out = stdout(&o);
    assert!(out.contains("a: 2.400000") && out.contains("b: 1.050000"), "{out}");

    let one = dir.path().join("one.csv");
    fs::write(&one, "project_id,kloc,actual_effort\n1,3,9\n").unwrap();
    assert_eq!(
        run(&["calibrate", "--input", one.to_str().unwrap()]).status.code(),
        Some(2)
    );
}

#[test]
fn plot_emits_charts() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("charts");
    let o = run(&["plot", "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let printed = printed_table();
    for (slug, pick) in [
        (
            "none",
            (|r: &common::PrintedRow| r.none) as fn(&common::PrintedRow) -> f64,
        ),
        ("norm-pad1", |r| r.norm),
        ("log-e", |r| r.log),
    ] {
        let svg = fs::read_to_string(out.join(format!("effort_{slug}.svg"))).unwrap();
        for row in &printed {
            let needle = format!(r#"data-project="{}" data-value="{:.4}""#, row.id, pick(row));
            assert!(svg.contains(&needle), "{slug}: missing {needle}");
        }
        let csv = fs::read_to_string(out.join(format!("effort_{slug}.csv"))).unwrap();
        assert_eq!(csv.lines().count(), 25);
    }

    let single = dir.path().join("single");
    run(&["plot", "--techniques", "none", "--out", single.to_str().unwrap()]);
    let svgs = fs::read_dir(&single)
        .unwrap()
        .filter(|e| e.as_ref().unwrap().path().extension().is_some_and(|x| x == "svg"))
        .count();
    assert_eq!(svgs, 1);
}

#[test]
fn plot_is_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a"), dir.path().join("b"));
    run(&["plot", "--out", a.to_str().unwrap()]);
    run(&["plot", "--out", b.to_str().unwrap()]);
    for name in [
        "effort_none.svg",
        "effort_norm-pad1.svg",
        "effort_log-e.svg",
        "effort_log-e.csv",
    ] {
        assert_eq!(
            fs::read(a.join(name)).unwrap(),
            fs::read(b.join(name)).unwrap(),
            "{name}"
        );
    }
}

#[test]
fn plot_unwritable_path_fails() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("blocker");
    fs::write(&file, "x").unwrap();
    let o = run(&["plot", "--out", file.join("sub").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn export_round_trips_through_loader() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("ivr.csv");
    let o = run(&["dataset", "export", "--out", p.to_str().unwrap()]);
    assert!(o.status.success());
    let loaded = effort_prep::load_dataset(&p, &effort_prep::CsvSchema::default()).unwrap();
    assert_eq!(loaded.records(), effort_prep::builtin_ivr_dataset().records());
}

#[test]
fn custom_columns() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("c.csv");
    fs::write(&p, "n,size,pm\n1,16.2,86.1\n").unwrap();
    let o = run(&[
        "compare",
        "--input",
        p.to_str().unwrap(),
        "--columns",
        "n,size,pm",
        "--techniques",
        "none",
        "--format",
        "csv",
    ]);
    assert_eq!(stdout(&o), "project_id,raw_kloc,est_none\n1,16.2,44.6891\n");
}

#[test]
fn no_color_env_keeps_output_plain() {
    let o = run(&["compare", "--techniques", "zzz"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!stderr(&o).contains('\x1b'));
    assert!(!stdout(&run(&["compare"])).contains('\x1b'));
}

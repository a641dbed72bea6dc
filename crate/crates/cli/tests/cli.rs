use std::path::{Path, PathBuf};
use std::process::Command;

use glauber_cli::config::preset_names;
use glauber_cli::{compute, render_csv, run, CliError, ExperimentConfig, TaskKind, OUTPUT_DIR_ENV};

fn scratch(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join(name);
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_glauber"))
}

fn cfg(json: &str) -> ExperimentConfig {
    ExperimentConfig::from_json(json).unwrap()
}

const RABI_ENERGY_NO_NOON: &str = r#"{
  "model": "amplifier",
  "scenario": {"type": "rabi", "Omega0": 1.0, "omega0": 0.1, "nu0": 1.0},
  "task": "energy",
  "grid": {"t_start": 0.0, "t_end": 10.0, "n_points": 11},
  "output_path": "out.csv"
}"#;

#[test]
fn presets_are_valid() {
    for name in preset_names() {
        let c = ExperimentConfig::preset(name).unwrap();
        assert_eq!(c.validate(), vec![], "{name}");
    }
}

#[test]
fn negative_sweep_rate_gives_one_diagnostic() {
    let mut c = ExperimentConfig::preset("fig2b").unwrap();
    c.scenario = serde_json::from_str(r#"{"type": "lmsz", "gamma": -1.0, "omega0": 1.0}"#).unwrap();
    let d = c.validate();
    assert_eq!(d.len(), 1, "{d:?}");
    assert_eq!(d[0].path, "scenario.gamma");
}

#[test]
fn energy_without_noon_gives_one_diagnostic() {
    let d = cfg(RABI_ENERGY_NO_NOON).validate();
    assert_eq!(d.len(), 1, "{d:?}");
    assert_eq!(d[0].path, "noon");
}

#[test]
fn grid_and_task_field_diagnostics() {
    let mut c = ExperimentConfig::preset("fig3a").unwrap();
    c.grid.n_points = 1;
    c.grid.t_end = -30.0;
    c.n_excitations = None;
    c.tolerance = 1.0;
    c.solver = "euler".into();
    let paths: Vec<_> = c.validate().into_iter().map(|d| d.path).collect();
    assert_eq!(paths, ["grid.t_start", "grid.n_points", "tolerance", "solver", "N"]);

    let mut c = ExperimentConfig::preset("fig3a").unwrap();
    c.grid.t_end = 25.0;
    let paths: Vec<_> = c.validate().into_iter().map(|d| d.path).collect();
    assert_eq!(paths, ["grid.t_end"]);

    let mut c = ExperimentConfig::preset("fig2a").unwrap();
    c.task = TaskKind::Kernel;
    let paths: Vec<_> = c.validate().into_iter().map(|d| d.path).collect();
    assert_eq!(paths, ["N", "kernel"]);
}

#[test]
fn unknown_keys_are_config_errors() {
    let text = RABI_ENERGY_NO_NOON.replace("\"task\"", "\"tsak\"");
    let err = ExperimentConfig::from_json(&text).unwrap_err();
    assert_eq!(err.exit_code(), 2);
    assert!(matches!(ExperimentConfig::preset("fig9"), Err(CliError::Config(_))));
}

#[test]
fn csv_layout_per_task() {
    let base = ExperimentConfig::preset("fig2a").unwrap();
    let header = |c: &ExperimentConfig| render_csv(&compute(c).unwrap()).lines().next().unwrap().to_string();

    let mut c = base.clone();
    c.task = TaskKind::Propagator;
    c.noon = None;
    assert_eq!(header(&c), "t,re_a,im_a,re_b,im_b,norm_defect");
    assert_eq!(header(&base), "t,E");

    let mut c = base.clone();
    c.task = TaskKind::Compare;
    assert_eq!(header(&c), "t,E_amplifier,E_standard");
    c.compare = Some(glauber_cli::config::CompareQuantity::Transition);
    c.noon = None;
    c.n_excitations = Some(2);
    assert_eq!(header(&c), "t,P_amplifier,P_standard");

    let c = cfg(
        r#"{
      "model": "standard",
      "scenario": {"type": "constant", "Omega0": 1.0, "omega0": 0.3},
      "task": "kernel", "N": 2,
      "kernel": {"source": [0.5, -0.5], "x1": {"start": -1.0, "end": 1.0, "n_points": 3},
                 "x2": {"start": 0.0, "end": 0.0, "n_points": 1}},
      "grid": {"t_start": 0.0, "t_end": 1.0, "n_points": 2},
      "output_path": "k.csv"
    }"#,
    );
    let text = render_csv(&compute(&c).unwrap());
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines[0], "t,x1,x2,re,im");
    assert_eq!(lines.len(), 1 + 2 * 3);
    assert!(text.ends_with('\n') && !text.contains('\r'));
}

#[test]
fn values_use_seventeen_significant_digits() {
    assert_eq!(glauber_cli::format_value(0.1), "1.0000000000000001e-1");
    assert_eq!(glauber_cli::format_value(-20.0), "-2.0000000000000000e1");
    for x in [0.1, 1.0 / 3.0, -7.25e-13, 1e300] {
        let s = glauber_cli::format_value(x);
        assert_eq!(s.parse::<f64>().unwrap(), x);
    }
}

#[test]
fn run_writes_csv_and_sidecar() {
    let dir = scratch("sidecar");
    let c = ExperimentConfig::preset("fig3a").unwrap();
    let report = run(&c, Some(&dir)).unwrap();
    assert_eq!(report.csv, dir.join("fig3a.csv"));
    assert_eq!(report.rows, 801);
    let meta: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report.meta).unwrap()).unwrap();
    assert_eq!(meta["config"]["task"], "transition");
    assert_eq!(meta["tolerance"]["rtol"], 1e-12);
    assert!(meta["max_norm_defect"].as_f64().unwrap() < 1e-10);
    let again = run(&c, Some(&dir)).unwrap();
    assert_eq!(again.max_norm_defect, report.max_norm_defect);
}

#[test]
fn binary_exit_codes() {
    let dir = scratch("exit_codes");
    let cfg_path = dir.join("bad_grid.json");
    let mut c = ExperimentConfig::preset("fig1").unwrap();
    c.grid.n_points = 1;
    std::fs::write(&cfg_path, serde_json::to_string(&c).unwrap()).unwrap();
    let st = bin().env(OUTPUT_DIR_ENV, &dir).args(["run", "--config"]).arg(&cfg_path).status().unwrap();
    assert_eq!(st.code(), Some(2));

    let garbage = dir.join("garbage.json");
    std::fs::write(&garbage, "{ not json").unwrap();
    let st = bin().args(["run", "--config"]).arg(&garbage).status().unwrap();
    assert_eq!(st.code(), Some(2));

    let st = bin().args(["run", "--config"]).arg(dir.join("missing.json")).status().unwrap();
    assert_eq!(st.code(), Some(4));

    let blocker = dir.join("file");
    std::fs::write(&blocker, "").unwrap();
    let st = bin().env(OUTPUT_DIR_ENV, blocker.join("sub")).args(["run", "--preset", "fig3b"]).status().unwrap();
    assert_eq!(st.code(), Some(4));

    // a tabulated drive that blows up the integrator's step control
    let stiff = dir.join("stiff.json");
    std::fs::write(
        &stiff,
        r#"{"model": "amplifier", "task": "propagator",
            "scenario": {"type": "tabulated", "samples": [[0, 0, 1e200, 0], [1, 0, 1e200, 0]]},
            "grid": {"t_start": 0.0, "t_end": 1.0, "n_points": 3}, "output_path": "s.csv"}"#,
    )
    .unwrap();
    let st = bin().env(OUTPUT_DIR_ENV, &dir).args(["run", "--config"]).arg(&stiff).status().unwrap();
    assert_eq!(st.code(), Some(3));

    let out = bin().env(OUTPUT_DIR_ENV, &dir).args(["run", "--preset", "fig3b"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(dir.join("fig3b.csv").exists() && dir.join("fig3b.csv.meta.json").exists());
}

#[test]
fn binary_validate_reports_field_paths() {
    let dir = scratch("validate");
    let p = dir.join("rabi.json");
    std::fs::write(&p, RABI_ENERGY_NO_NOON).unwrap();
    let out = bin().args(["validate", "--config"]).arg(&p).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "noon: required by the energy task\n");
    let out = bin().args(["validate", "--preset", "fig1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn identical_configs_give_identical_bytes() {
    let c = ExperimentConfig::preset("fig2b").unwrap();
    let (a, b) = (scratch("det_a"), scratch("det_b"));
    let ra = run(&c, Some(&a)).unwrap();
    let rb = run(&c, Some(&b)).unwrap();
    assert_eq!(std::fs::read(ra.csv).unwrap(), std::fs::read(rb.csv).unwrap());
}

#[test]
fn presets_match_golden_files() {
    let dir = scratch("golden");
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for name in preset_names() {
        let report = run(&ExperimentConfig::preset(name).unwrap(), Some(&dir)).unwrap();
        let got = std::fs::read(&report.csv).unwrap();
        let want = std::fs::read(golden.join(format!("{name}.csv"))).unwrap();
        assert!(got == want, "{name}: output differs from the golden file");
    }
}

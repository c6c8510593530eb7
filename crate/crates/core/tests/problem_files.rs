mod common;

use dsta_core::domain::parse_duration;
use dsta_core::problem::{load_problem, parse_problem, problem_to_toml};
use dsta_core::Error;

fn hundredths(rows: &[&[f64]]) -> Vec<Vec<u32>> {
    rows.iter()
        .map(|r| r.iter().map(|v| (v * 100.0).round() as u32).collect())
        .collect()
}

#[test]
fn five_job_file_matches_source_tables() {
    let inst = common::example1();
    assert_eq!(inst.len(), 5);
    assert_eq!(inst.workday(), 480);
    assert_eq!(inst.savings().get(1, 2), 400);
    let expected = hundredths(&[
        &[0.0, 4.0, 2.64, 4.08, 3.9],
        &[4.0, 0.0, 3.64, 4.72, 4.23],
        &[2.64, 3.64, 0.0, 2.65, 2.87],
        &[4.08, 4.72, 2.65, 0.0, 3.84],
        &[3.9, 4.23, 2.87, 3.84, 0.0],
    ]);
    let rows: Vec<Vec<u32>> = inst.savings().rows().map(<[u32]>::to_vec).collect();
    assert_eq!(rows, expected);
    let due: Vec<u32> = inst.jobs().iter().map(|j| j.due).collect();
    assert_eq!(due, [8, 2, 11, 3, 3]);
    let processing: Vec<u32> = inst.jobs().iter().map(|j| j.processing).collect();
    let listed: Vec<u32> = ["17:40", "24:00", "19:20", "25:00", "14:40"]
        .iter()
        .map(|s| parse_duration(s).unwrap())
        .collect();
    assert_eq!(processing, listed);
}

#[test]
fn ten_job_file_matches_source_tables() {
    let inst = common::example2();
    assert_eq!(inst.len(), 10);
    assert_eq!(inst.savings().get(8, 6), 470);
    let expected = hundredths(&[
        &[0.0, 2.73, 2.1, 2.16, 2.66, 3.6, 2.46, 2.7, 2.46, 2.8],
        &[2.73, 0.0, 2.0, 1.6, 4.3, 3.69, 2.3, 3.5, 2.76, 3.6],
        &[2.1, 2.0, 0.0, 1.4, 3.51, 3.33, 2.52, 3.68, 2.52, 2.46],
        &[2.16, 1.6, 1.4, 0.0, 2.17, 2.32, 2.72, 3.04, 2.04, 2.97],
        &[2.66, 4.3, 3.51, 2.17, 0.0, 3.6, 4.05, 4.41, 2.7, 2.64],
        &[3.6, 3.69, 3.33, 2.32, 3.6, 0.0, 2.58, 4.7, 3.44, 2.94],
        &[2.46, 2.3, 2.52, 2.72, 4.05, 2.58, 0.0, 2.6, 2.88, 2.82],
        &[2.7, 3.5, 3.68, 3.04, 4.41, 4.7, 2.6, 0.0, 3.64, 3.57],
        &[2.46, 2.76, 2.52, 2.04, 2.7, 3.44, 2.88, 3.64, 0.0, 3.76],
        &[2.8, 3.6, 2.46, 2.97, 2.64, 2.94, 2.82, 3.57, 3.76, 0.0],
    ]);
    let rows: Vec<Vec<u32>> = inst.savings().rows().map(<[u32]>::to_vec).collect();
    assert_eq!(rows, expected);
    let due: Vec<u32> = inst.jobs().iter().map(|j| j.due).collect();
    assert_eq!(due, [11, 2, 13, 14, 11, 9, 4, 6, 10, 10]);
    let listed: Vec<u32> = [
        "14:00", "18:00", "15:00", "8:20", "17:20", "16:00", "19:40", "23:20", "20:00", "19:20",
    ]
    .iter()
    .map(|s| parse_duration(s).unwrap())
    .collect();
    let processing: Vec<u32> = inst.jobs().iter().map(|j| j.processing).collect();
    assert_eq!(processing, listed);
}

#[test]
fn corrected_file_differs_only_in_one_due_date() {
    let published = common::example2();
    let corrected = common::example2_due5();
    assert_eq!(published.savings(), corrected.savings());
    for (a, b) in published.jobs().iter().zip(corrected.jobs()) {
        if a.id == 5 {
            assert_eq!((a.due, b.due), (11, 1));
            assert_eq!(a.processing, b.processing);
        } else {
            assert_eq!(a, b);
        }
    }
}

#[test]
fn bundled_files_survive_a_round_trip() {
    for inst in [common::example1(), common::example2()] {
        assert_eq!(
            parse_problem(&problem_to_toml(&inst).unwrap()).unwrap(),
            inst
        );
    }
}

#[test]
fn load_errors_are_descriptive() {
    let dir = std::env::temp_dir().join(format!("dsta-load-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let base = std::fs::read_to_string(common::data_path("example1.toml")).unwrap();

    let asym = dir.join("asym.toml");
    std::fs::write(
        &asym,
        base.replace("[0.00, 4.00, 2.64", "[0.00, 4.01, 2.64"),
    )
    .unwrap();
    match load_problem(&asym) {
        Err(Error::AsymmetricSavings { row: 1, col: 2 }) => {}
        other => panic!("{other:?}"),
    }

    let missing = dir.join("missing.toml");
    std::fs::write(&missing, base.replace("due_days = 8\n", "")).unwrap();
    let msg = load_problem(&missing).unwrap_err().to_string();
    assert!(
        msg.contains("missing.toml") && msg.contains("due_days"),
        "{msg}"
    );

    let short = dir.join("short.toml");
    std::fs::write(
        &short,
        base.replace("  [3.90, 4.23, 2.87, 3.84, 0.00],\n", ""),
    )
    .unwrap();
    assert!(load_problem(&short).is_err());

    assert!(load_problem(dir.join("nope.toml"))
        .unwrap_err()
        .to_string()
        .contains("nope.toml"));
    std::fs::remove_dir_all(&dir).ok();
}

//! Replays the fuzz corpus seeds through the parsers they target.

use std::path::PathBuf;

use mlaw::{parse_generator_list, parse_presentation, Permutation};
use mlaw_cli::{parse_star_table, GroupSpec};

fn seeds(target: &str) -> Vec<String> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<String> = std::fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| std::fs::read_to_string(e.unwrap().path()).unwrap())
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn presentation_seeds() {
    let parsed = seeds("presentation")
        .iter()
        .filter(|s| parse_presentation(s).is_ok())
        .count();
    assert!(parsed >= 4);
}

#[test]
fn cycle_seeds() {
    for s in seeds("cycles") {
        let p = Permutation::parse_cycles(&s, 0).unwrap();
        assert_eq!(Permutation::parse_cycles(&p.to_string(), p.degree()).unwrap(), p);
    }
}

#[test]
fn generator_list_seeds() {
    for s in seeds("generator_list") {
        assert!(!parse_generator_list(&s).unwrap().is_empty());
    }
}

#[test]
fn star_table_seeds() {
    for s in seeds("star_table") {
        parse_star_table(&s).unwrap();
    }
}

#[test]
fn group_spec_seeds() {
    for s in seeds("group_spec") {
        let spec: GroupSpec = s.parse().unwrap();
        assert_eq!(spec.to_string(), s);
    }
}

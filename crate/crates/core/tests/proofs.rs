//! The scripts under `proofs/` are exactly what the derivations emit, and
//! they replay from their start files.

use std::path::PathBuf;

use zxr_core::derived::{replay, shipped, ProofScript, ReplayOptions};
use zxr_core::rules::instances;
use zxr_core::{match_sites, zxd, RuleId};

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../proofs")
}

#[test]
fn shipped_files_are_current() {
    let all = shipped().unwrap();
    assert_eq!(all.len(), 29);
    for d in all {
        let name = &d.script.name;
        let script = std::fs::read_to_string(dir().join(format!("{name}.json"))).unwrap();
        let start = std::fs::read_to_string(dir().join(format!("{name}.start.zxd"))).unwrap();
        assert_eq!(script, d.script.to_json_lines(), "{name}.json is stale; run the write_proofs example");
        assert_eq!(start, zxd::serialize(&d.start), "{name}.start.zxd is stale");
    }
}

#[test]
fn shipped_files_replay() {
    for d in shipped().unwrap() {
        let name = &d.script.name;
        let text = std::fs::read_to_string(dir().join(format!("{name}.json"))).unwrap();
        let script = ProofScript::from_json_lines(name, &text).unwrap();
        let start = zxd::parse(&std::fs::read_to_string(dir().join(format!("{name}.start.zxd"))).unwrap()).unwrap();
        let end = replay(&script, &start, &ReplayOptions::permissive()).unwrap();
        assert_eq!(end, d.end, "{name}");
    }
}

#[test]
fn hopf_replays_in_one_step() {
    let lhs = instances(RuleId::Hopf).remove(0).diagram;
    let at = match_sites(RuleId::Hopf, &lhs).remove(0);
    let text = format!("{{\"rule\":\"hopf\",\"anchor\":{at:?}}}\n");
    let script = ProofScript::from_json_lines("hopf", &text).unwrap();
    let end = replay(&script, &lhs, &ReplayOptions::default()).unwrap();
    assert_eq!(end.edge_count_total(), lhs.edge_count_total() - 2);
}

use std::sync::mpsc;
use std::thread;

use proptest::prelude::*;

use sdforge::catalog::{append_hit, load_hits, HitRecord, HitWriter, KnownParameterSet};
use sdforge::Error;
use sdforge_core::search::Algorithm;
use sdforge_core::{CandidateVector, EnumeratorFamily};

fn record(bits: u64, beta: i64, iteration: u32) -> HitRecord {
    HitRecord {
        construction: "G2.1".into(),
        candidate: CandidateVector::from_masked(bits),
        family: Some(EnumeratorFamily::W72_1),
        gamma: Some(0),
        beta: Some(beta),
        alpha: None,
        d: Some(12),
        a12: 2 * beta.unsigned_abs(),
        a14: 8640,
        seed: 11,
        algorithm: Algorithm::Ga,
        iteration,
        timestamp: Some("2026-01-01T00:00:00Z".into()),
        aut_order: None,
    }
}

#[test]
fn appended_records_load_back_in_order() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hits.jsonl");
    let records: Vec<_> = (0..5).map(|i| record(0xabc + i, 100 + i as i64, i as u32)).collect();
    for r in &records {
        append_hit(r, &path).unwrap();
    }
    assert_eq!(load_hits(&path).unwrap(), records);
}

/// Workers hand records to one writer thread; no line is lost or torn.
#[test]
fn single_writer_serialises_concurrent_producers() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hits.jsonl");
    let (tx, rx) = mpsc::channel::<HitRecord>();
    let writer_path = path.clone();
    let writer = thread::spawn(move || {
        let mut w = HitWriter::open(&writer_path).unwrap();
        for r in rx {
            w.append(&r).unwrap();
        }
    });
    let producers: Vec<_> = (0..4u64)
        .map(|t| {
            let tx = tx.clone();
            thread::spawn(move || {
                for i in 0..250u64 {
                    tx.send(record(t << 20 | i, i as i64, t as u32)).unwrap();
                }
            })
        })
        .collect();
    drop(tx);
    for p in producers {
        p.join().unwrap();
    }
    writer.join().unwrap();

    let hits = load_hits(&path).unwrap();
    assert_eq!(hits.len(), 1000);
    for t in 0..4u32 {
        let mine: Vec<_> = hits.iter().filter(|h| h.iteration == t).map(|h| h.candidate.bits() & 0xfffff).collect();
        assert_eq!(mine, (0..250).collect::<Vec<_>>(), "producer {t} order");
    }
}

#[test]
fn malformed_log_line_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hits.jsonl");
    append_hit(&record(1, 1, 0), &path).unwrap();
    std::fs::write(&path, format!("{}\n{{not json\n", std::fs::read_to_string(&path).unwrap().trim_end())).unwrap();
    match load_hits(&path) {
        Err(Error::Parse { line: 2, path: Some(p), .. }) => assert_eq!(p, path),
        other => panic!("expected a parse error on line 2, got {other:?}"),
    }
}

#[test]
fn known_parameter_file_extends_the_ledger() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("known.csv");
    std::fs::write(&path, "kind,family,gamma,beta,alpha\nI,W72_2,0,44,\nII,TYPE_II,,,-3654\n").unwrap();
    let mut known = KnownParameterSet::shipped();
    let before = known.len();
    known.extend(&KnownParameterSet::load(&path).unwrap());
    assert_eq!(known.len(), before + 2);
}

proptest! {
    #[test]
    fn records_survive_a_json_line(bits in 0u64..(1 << 36), beta in -5000i64..5000, iteration in 0u32..1000, seed: u64) {
        let mut r = record(bits, beta, iteration);
        r.seed = seed;
        let line = serde_json::to_string(&r).unwrap();
        prop_assert!(!line.contains('\n'));
        let back: HitRecord = serde_json::from_str(&line).unwrap();
        prop_assert_eq!(back, r);
    }
}

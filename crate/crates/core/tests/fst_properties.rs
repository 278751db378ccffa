mod common;

use audioactive::fst::io::{from_json, to_json};
use audioactive::fst::{
    complement, compose, determinize, enumerate_language, equivalent, minimize, minimize_dfa, reduce_transducer,
    transduce, FstError, Transducer, Word,
};
use audioactive::machines::{build_sink, MachineId, alphabet_a};
use common::{brute_accepts, brute_outputs, random_recognizer, table, words_upto};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn corpus() -> Vec<(String, Transducer)> {
    let mut out: Vec<(String, Transducer)> = MachineId::ALL.iter().map(|m| (m.to_string(), m.build())).collect();
    let audio = MachineId::Audio.build();
    out.push(("sink.audio".into(), compose(&audio, &build_sink(alphabet_a())).unwrap()));
    out
}

fn random_corpus() -> Vec<Transducer> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let alphabets = [table(2), table(3)];
    (0..50).map(|i| random_recognizer(&mut rng, 5, &alphabets[i % 2])).collect()
}

fn max_len(t: &Transducer) -> usize {
    if t.input_table().len() > 4 {
        7
    } else {
        8
    }
}

fn check_language_ops(name: &str, t: &Transducer, len: usize) {
    let d = determinize(t);
    let m = minimize(t);
    let c = complement(t);
    let k = t.input_table().len() as u32;
    for w in words_upto(k, len) {
        let expect = brute_accepts(t, &w);
        assert_eq!(t.accepts(&w), expect, "{name}: accepts {w:?}");
        assert_eq!(d.accepts(&w), expect, "{name}: determinize {w:?}");
        assert_eq!(m.accepts(&w), expect, "{name}: minimize {w:?}");
        assert_eq!(c.accepts(&w), !expect, "{name}: complement {w:?}");
    }
}

fn check_canonical(name: &str, t: &Transducer) {
    let m = minimize(t);
    assert_eq!(minimize_dfa(&m), m, "{name}: idempotent");
    assert_eq!(minimize(&determinize(t).to_transducer()), m, "{name}: via determinize");
    assert_eq!(minimize(&t.trim()), m, "{name}: trim");
    assert_eq!(minimize(&m.to_transducer().reverse().reverse()), m, "{name}: double reverse");
    assert!(m.num_states() <= determinize(t).num_states().max(1), "{name}: not larger than determinized");
    assert_eq!(complement(&complement(t).to_transducer()), m, "{name}: double complement");
    assert!(equivalent(t, &m.to_transducer()).unwrap());
}

#[test]
fn language_operations_match_brute_force_on_machines() {
    for (name, t) in corpus() {
        if name == "src" {
            continue;
        }
        check_language_ops(&name, &t, max_len(&t));
    }
}

#[test]
fn language_operations_match_brute_force_on_random_recognizers() {
    for (i, t) in random_corpus().iter().enumerate() {
        check_language_ops(&format!("random #{i}"), t, 8);
    }
}

#[test]
fn minimization_is_canonical() {
    for (name, t) in corpus() {
        check_canonical(&name, &t);
    }
    for (i, t) in random_corpus().iter().enumerate() {
        check_canonical(&format!("random #{i}"), t);
    }
}

#[test]
fn equivalence_agrees_with_enumeration() {
    let rs = random_corpus();
    for a in rs.iter().step_by(2) {
        for b in rs.iter().step_by(2) {
            let eq = equivalent(a, b).unwrap();
            let agree = words_upto(2, 8).iter().all(|w| brute_accepts(a, w) == brute_accepts(b, w));
            if eq {
                assert!(agree);
            }
            if !agree {
                assert!(!eq);
            }
        }
    }
    assert!(matches!(equivalent(&rs[0], &rs[1]), Err(FstError::AlphabetMismatch { .. })));
}

#[test]
fn composition_matches_relational_product() {
    let m = |id: MachineId| id.build();
    let pairs = [
        (m(MachineId::Audio), m(MachineId::Audio)),
        (m(MachineId::Counter(1)), m(MachineId::Audio)),
        (m(MachineId::Mark), m(MachineId::Scissors)),
        (m(MachineId::Mark), m(MachineId::AudioPlus)),
        (m(MachineId::AudioPlus), m(MachineId::Scissors)),
        (m(MachineId::Audio), m(MachineId::Sink)),
        (m(MachineId::Mark), m(MachineId::Splitting)),
    ];
    for (f, g) in &pairs {
        let fg = compose(f, g).unwrap();
        let k = f.input_table().len() as u32;
        for w in words_upto(k, 5) {
            let cap = 4 * w.len() + 4;
            let expect: std::collections::BTreeSet<Vec<u32>> = brute_outputs(f, &w, cap)
                .iter()
                .flat_map(|v| brute_outputs(g, &Word::from(v.clone()), cap))
                .collect();
            assert_eq!(brute_outputs(&fg, &w, cap), expect, "word {w:?}");
        }
    }
}

#[test]
fn composition_rejects_mismatched_tables() {
    let audio = MachineId::Audio.build();
    let plus = MachineId::AudioPlus.build();
    assert!(matches!(compose(&audio, &plus), Err(FstError::AlphabetMismatch { .. })));
}

#[test]
fn transduce_matches_brute_force() {
    for id in [MachineId::Audio, MachineId::Mark, MachineId::Scissors, MachineId::Counter(3)] {
        let t = id.build();
        let k = t.input_table().len() as u32;
        for w in words_upto(k, 5) {
            let got: Vec<Vec<u32>> = transduce(&t, &w, 10_000).unwrap().into_iter().map(Word::into_inner).collect();
            let mut want: Vec<Word> = brute_outputs(&t, &w, 64).into_iter().map(Word::from).collect();
            audioactive::fst::sort_shortlex(&mut want);
            let want: Vec<Vec<u32>> = want.into_iter().map(Word::into_inner).collect();
            assert_eq!(got, want, "{id} on {w:?}");
        }
    }
    let multi = MachineId::Multi.build();
    assert_eq!(transduce(&multi, &Word::from(vec![0]), 10), Err(FstError::UnboundedTransduction));
}

#[test]
fn enumeration_matches_brute_force() {
    let mut finite = 0;
    for t in random_corpus() {
        match enumerate_language(&t, 100_000) {
            Ok(words) => {
                finite += 1;
                let brute: Vec<Word> = words_upto(t.input_table().len() as u32, 8)
                    .into_iter()
                    .filter(|w| brute_accepts(&t, w))
                    .collect();
                let mut sorted = brute.clone();
                audioactive::fst::sort_shortlex(&mut sorted);
                assert_eq!(words, sorted);
            }
            Err(e) => assert_eq!(e, FstError::InfiniteLanguage),
        }
    }
    assert!(finite > 0);
    let counter = MachineId::Counter(1).build().input_projection();
    let words = enumerate_language(&counter, 10).unwrap();
    assert_eq!(words.len(), 3);
    assert_eq!(enumerate_language(&counter, 2), Err(FstError::LimitExceeded { limit: 2 }));
}

#[test]
fn reduction_preserves_relations() {
    for id in [MachineId::Audio, MachineId::Mark, MachineId::Scissors, MachineId::AudioPlus, MachineId::AtomicF] {
        let t = id.build();
        let r = reduce_transducer(&t);
        let k = t.input_table().len() as u32;
        for w in words_upto(k, 5) {
            assert_eq!(brute_outputs(&r, &w, 16), brute_outputs(&t, &w, 16), "{id} on {w:?}");
        }
    }
}

#[test]
fn json_round_trip_is_byte_identical() {
    for (name, t) in corpus() {
        let text = to_json(&t);
        let back = from_json(&text).unwrap();
        assert_eq!(back, t, "{name}");
        assert_eq!(to_json(&back), text, "{name}");
    }
}

proptest! {
    #[test]
    fn random_recognizers_survive_brzozowski(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = random_recognizer(&mut rng, 5, &table(2));
        let m = minimize(&t);
        for w in words_upto(2, 6) {
            prop_assert_eq!(m.accepts(&w), brute_accepts(&t, &w));
        }
        prop_assert_eq!(minimize_dfa(&m.canonical()), m);
    }
}

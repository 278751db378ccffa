use audioactive::chemistry::{
    atom_oracle, atomic_factorization, derive, derive_n, growth_rate, is_day_one, IntWord, PeriodicTable,
    DEFAULT_ORACLE_DEPTH,
};
use audioactive::fst::Word;
use audioactive::machines::alphabet_a;

fn iw(s: &str) -> IntWord {
    IntWord::from_digits(s).unwrap()
}

#[test]
fn look_and_say_from_one() {
    let chain: Vec<String> = (0..6).map(|n| derive_n(&iw("1"), n).to_string()).collect();
    assert_eq!(chain, ["1", "11", "21", "1211", "111221", "312211"]);
}

#[test]
fn every_element_is_an_atom() {
    for e in PeriodicTable::get().elements() {
        assert!(atom_oracle(&e.word, DEFAULT_ORACLE_DEPTH), "{}", e.name);
    }
}

#[test]
fn decays_factor_as_tabulated() {
    let t = PeriodicTable::get();
    let a = alphabet_a();
    for name in ["H", "He", "U", "Ga", "Np", "Pu"] {
        let e = t.by_name(name).unwrap();
        let d = derive(&IntWord::from_word(&e.word)).to_word();
        let names: Vec<String> = atomic_factorization(&d)
            .unwrap()
            .iter()
            .map(|f| t.lookup(f).map(|x| x.name.clone()).unwrap_or_else(|_| a.format(f)))
            .collect();
        assert_eq!(names, e.decay, "{name}");
    }
}

#[test]
fn elements_occur_in_derivation_chains() {
    let t = PeriodicTable::get();
    let text = |w: &IntWord| w.to_word().iter().map(|&s| a_label(s)).collect::<String>();
    let from_one: Vec<String> = (0..=30).map(|n| text(&derive_n(&iw("1"), n))).collect();
    for name in ["H", "He", "U", "Pa", "Hf", "Li", "Ca", "Sn", "Ac", "Zn"] {
        let w = t.by_name(name).unwrap().word_text();
        assert!(from_one.iter().any(|s| s.contains(&w)), "{name}");
    }
    let from_four: Vec<String> = (0..=30).map(|n| text(&derive_n(&iw("4"), n))).collect();
    for name in ["Np", "Pu"] {
        let w = t.by_name(name).unwrap().word_text();
        assert!(from_four.iter().any(|s| s.contains(&w)), "{name}");
    }
}

fn a_label(s: u32) -> char {
    alphabet_a().label(s).chars().next().unwrap()
}

#[test]
fn growth_rate_matches_length_ratio() {
    let r = growth_rate(PeriodicTable::get()).unwrap();
    assert!((1.3035..=1.3037).contains(&r.lambda));
    assert!(r.residual <= 1e-10);
    assert!((r.lambda - r.lambda_all).abs() < 1e-8);
    let a = derive_n(&iw("1"), 40);
    let b = derive(&a);
    assert!((b.len() as f64 / a.len() as f64 - r.lambda).abs() < 1e-2);
}

#[test]
fn derivations_are_day_one_words() {
    let mut w = iw("1");
    for _ in 0..40 {
        w = derive(&w);
        assert!(is_day_one(w.values()));
        assert!(w.values().iter().all(|&v| v <= 3));
    }
    assert_eq!(Word::from(vec![0, 0, 0, 0]).len(), 4);
    assert!(!is_day_one(&[0, 0, 0, 0]));
}

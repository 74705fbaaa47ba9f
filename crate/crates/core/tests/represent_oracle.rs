mod support;

use bitrep::represent::{augment_with_complements, build_family, decide_with};
use bitrep::{decide, decide_with_negation, StringSet};
use rand::Rng;

use support::{all_sets, all_strings, naive_closure, random_set, random_string, rng};

#[test]
fn decide_matches_closure_exhaustively() {
    for m in 1..=4 {
        let targets = all_strings(m);
        for w in all_sets(m, 3) {
            for negation in [false, true] {
                let reachable = naive_closure(&w, negation);
                for s in &targets {
                    let v = decide_with(&w, s, negation).unwrap();
                    assert_eq!(
                        v.representable,
                        reachable.contains(s),
                        "w={w:?} s={s} neg={negation}"
                    );
                    match v.witness {
                        Some(cnf) => assert_eq!(&cnf.eval(&w).unwrap(), s),
                        None => assert!(!v.representable),
                    }
                }
            }
        }
    }
}

#[test]
fn witnesses_are_sound_on_random_instances() {
    let mut rng = rng(11);
    for _ in 0..300 {
        let w = random_set(&mut rng, 40, 10);
        let reachable_target = {
            let a = &w.strings()[rng.gen_range(0..w.len())];
            let b = &w.strings()[rng.gen_range(0..w.len())];
            a.and(b).unwrap()
        };
        for s in [reachable_target, random_string(&mut rng, w.width())] {
            for negation in [false, true] {
                let v = decide_with(&w, &s, negation).unwrap();
                if let Some(cnf) = v.witness {
                    assert_eq!(cnf.eval(&w).unwrap(), s);
                }
            }
        }
    }
}

#[test]
fn supersets_never_lose_representability() {
    let mut rng = rng(12);
    for _ in 0..300 {
        let w = random_set(&mut rng, 8, 5);
        let s = random_string(&mut rng, w.width());
        let extra = random_string(&mut rng, w.width());
        let mut bigger: Vec<_> = w.strings().to_vec();
        bigger.insert(rng.gen_range(0..=bigger.len()), extra);
        let bigger = StringSet::new(bigger).unwrap();
        for negation in [false, true] {
            if decide_with(&w, &s, negation).unwrap().representable {
                assert!(decide_with(&bigger, &s, negation).unwrap().representable);
            }
        }
    }
}

#[test]
fn containment_and_meet_conditions_agree() {
    let mut rng = rng(13);
    for _ in 0..1000 {
        let w = random_set(&mut rng, 12, 6);
        let s = random_string(&mut rng, w.width());
        let fam = build_family(&w).unwrap();
        let zeros: Vec<usize> = s.zero_set().iter().collect();
        if zeros.iter().any(|&i| fam.join(i).is_none()) {
            continue;
        }
        let contains = zeros
            .iter()
            .all(|&i| s.one_set().is_subset(&fam.join(i).unwrap().one_set()));
        let mut meet = bitrep::BitString::ones(w.width());
        for &i in &zeros {
            meet = meet.and(fam.join(i).unwrap()).unwrap();
        }
        assert_eq!(contains, meet == s, "w={w:?} s={s}");
    }
}

#[test]
fn family_matches_a_column_scan() {
    let mut rng = rng(14);
    for _ in 0..200 {
        let w = random_set(&mut rng, 70, 8);
        let fam = build_family(&w).unwrap();
        for i in 1..=w.width() {
            let members: Vec<usize> = (0..w.len())
                .filter(|&j| !w.strings()[j].get(i - 1))
                .collect();
            assert_eq!(fam.members(i), members.as_slice());
            match fam.join(i) {
                None => assert!(members.is_empty()),
                Some(t) => {
                    assert!(!t.get(i - 1));
                    let mut expect = bitrep::BitString::zeros(w.width());
                    for &j in &members {
                        expect = expect.or(&w.strings()[j]).unwrap();
                    }
                    assert_eq!(t, &expect);
                }
            }
        }
    }
}

#[test]
fn negation_equals_deciding_over_complements() {
    let mut rng = rng(15);
    for _ in 0..300 {
        let w = random_set(&mut rng, 10, 5);
        let s = random_string(&mut rng, w.width());
        let (augmented, _) = augment_with_complements(&w).unwrap();
        let direct = decide(&augmented, &s).unwrap().representable;
        let v = decide_with_negation(&w, &s).unwrap();
        assert_eq!(v.representable, direct);
        if let Some(cnf) = v.witness {
            assert_eq!(cnf.eval(&w).unwrap(), s);
        }
    }
}

use artin_rrs::dihedral::{is_critical_2gen, is_geodesic_2gen, to_bab_form};
use artin_rrs::group::{is_freely_reduced, make_alternating, Anchor};
use artin_rrs::oracle::{abelianization, oracle_equal, oracle_geodesic_length, Evidence, OracleConfig};
use artin_rrs::p2g::{decompose_p2g, is_p2g_critical, P2gType};
use artin_rrs::reducer::{reduce_to_geodesic, Reducer};
use artin_rrs::rrs::{apply_rrs, check_rrs, enumerate_all_rrs, find_optimal_rrs, is_optimal};
use artin_rrs::{free_reduce, Gen, GroupParams, Letter, Pair, Word};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

mod common;
use common::{abc_witnesses, confirm_equal, letters, params, random_word};

fn word_strategy(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..6usize, 0..=max_len).prop_map(|ix| ix.into_iter().map(|i| letters()[i]).collect())
}

fn pair_words(pair: Pair, len: usize) -> Vec<Word> {
    let (x, y) = pair.gens();
    let alphabet = [x.pos(), x.neg(), y.pos(), y.neg()];
    let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for u in &layer {
            for &l in &alphabet {
                if u.last() != Some(&l.inverse()) {
                    let mut v = u.clone();
                    v.push(l);
                    next.push(v);
                }
            }
        }
        layer = next;
    }
    layer.into_iter().map(Word::from_letters).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn free_reduction_is_idempotent_and_keeps_parity(w in word_strategy(20)) {
        let r = free_reduce(&w);
        prop_assert_eq!(free_reduce(&r), r.clone());
        prop_assert!(is_freely_reduced(&r));
        prop_assert_eq!(r.len() % 2, w.len() % 2);
    }

    #[test]
    fn reduction_is_idempotent_and_never_longer(w in word_strategy(40), n in 5u32..=7) {
        let p = params(n);
        let g = reduce_to_geodesic(&w, &p);
        prop_assert!(g.len() <= free_reduce(&w).len());
        prop_assert_eq!(g.len() % 2, w.len() % 2);
        prop_assert_eq!(reduce_to_geodesic(&g, &p), g);
    }

    #[test]
    fn abelian_reject_is_exact(u in word_strategy(8), v in word_strategy(8), n in 5u32..=6) {
        let p = params(n);
        let config = OracleConfig::default();
        if abelianization(&u, &p) != abelianization(&v, &p) {
            let verdict = oracle_equal(&u, &v, &config, &p).unwrap();
            prop_assert!(!verdict.equal);
            prop_assert_eq!(verdict.evidence, Evidence::Abelianization);
        }
    }
}

#[test]
fn alternating_words_reverse_to_the_other_anchor() {
    for (x, y) in [(Gen::A, Gen::B), (Gen::B, Gen::C), (Gen::C, Gen::A)] {
        for positive in [true, false] {
            let (x, y) = (x.signed(positive), y.signed(positive));
            for len in 0..=12 {
                let start = make_alternating(x, y, len, Anchor::Start).unwrap();
                let reversed: Word = start.iter().rev().copied().collect();
                assert_eq!(reversed, make_alternating(x, y, len, Anchor::End).unwrap());
            }
        }
    }
}

#[test]
fn two_generator_geodesics_match_search() {
    let p = params(5);
    let config = OracleConfig::default();
    let mut sample = ChaCha8Rng::seed_from_u64(21);
    for len in 0..=10 {
        let mut words = pair_words(Pair::AB, len);
        // all words up to length 6, a fixed sample of the longer ones
        if len > 6 {
            words = (0..40)
                .map(|_| words[sample.gen_range(0..words.len())].clone())
                .collect();
        }
        for w in words {
            let searched = oracle_geodesic_length(&w, &config, &p).unwrap();
            assert_eq!(is_geodesic_2gen(&w, Pair::AB, &p).unwrap(), searched == len, "{w}");
        }
    }
}

#[test]
fn bab_forms_are_equal_words() {
    let p = params(5);
    let mut found = 0;
    for len in 1..=9 {
        for v in pair_words(Pair::AB, len) {
            if v[0].gen() != Gen::A || v[len - 1].gen() != Gen::A {
                continue;
            }
            if let Some(form) = to_bab_form(&v).unwrap() {
                found += 1;
                assert_eq!(
                    v.len() as u32,
                    form.i.unsigned_abs() + form.j.unsigned_abs() + form.k.unsigned_abs()
                );
                assert!(confirm_equal(&v, &form.word(), None, &p).equal, "{v}");
            }
        }
    }
    assert!(found > 50);
}

fn p2g_samples(rng: &mut impl Rng, kind: P2gType, p: &GroupParams) -> Vec<Word> {
    let (x, z, b) = (kind.x(), kind.z(), Gen::B);
    let mut out = Vec::new();
    for _ in 0..40_000 {
        let len = rng.gen_range(2..=12);
        let w: Word = (0..len)
            .map(|i| {
                let inner = i > 0 && i + 1 < len;
                let g = match rng.gen_range(0..if inner { 3 } else { 2 }) {
                    0 => x,
                    1 => b,
                    _ => z,
                };
                g.signed(rng.gen_bool(0.7))
            })
            .collect();
        if is_freely_reduced(&w) && is_p2g_critical(&w, kind, p).is_some() {
            out.push(w);
        }
    }
    out
}

#[test]
fn p2g_facts() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut checked = 0;
    for n in [5, 6] {
        let p = params(n);
        for kind in [P2gType::Ab, P2gType::Bc] {
            let names = [kind.x(), Gen::B];
            for u in p2g_samples(&mut rng, kind, &p) {
                checked += 1;
                let wit = is_p2g_critical(&u, kind, &p).unwrap();
                let t = wit.tau().unwrap();
                let mut joined = Word::from(&u[wit.prefix()]);
                joined.extend_from_slice(&u[wit.middle.clone()]);
                joined.extend_from_slice(&u[wit.suffix()]);
                assert_eq!(joined, u);
                assert_eq!(t.len(), u.len());
                assert!(
                    names.contains(&u[0].gen()) && names.contains(&u[u.len() - 1].gen()),
                    "{u}"
                );
                assert_ne!(t[0].gen(), u[0].gen(), "{u}");
                assert_ne!(t[t.len() - 1].gen(), u[u.len() - 1].gen(), "{u}");
                assert_eq!(names.contains(&t[0].gen()), wit.alpha == 0, "{u}");
                assert_eq!(names.contains(&t[t.len() - 1].gen()), wit.beta == 0, "{u}");
                assert!(confirm_equal(&u, &t, None, &p).equal, "{u}");
            }
        }
    }
    assert!(checked > 200, "{checked}");
}

#[test]
fn p2g_on_two_generator_words_is_the_two_generator_move() {
    for n in [5, 6] {
        let p = params(n);
        for kind in [P2gType::Ab, P2gType::Bc] {
            for len in 1..=9 {
                for u in pair_words(kind.pair(), len) {
                    let two = is_critical_2gen(&u, kind.pair(), &p);
                    let p2g = is_p2g_critical(&u, kind, &p);
                    assert_eq!(two.is_some(), p2g.is_some(), "{u}");
                    if let (Some(a), Some(b)) = (two, p2g) {
                        assert_eq!(Some(a.tau()), b.tau());
                    }
                    if let Some(d) = decompose_p2g(&u, kind, &p) {
                        assert_eq!(d.hat, u);
                    }
                }
            }
        }
    }
}

#[test]
fn abc_witness_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let witnesses = abc_witnesses(&mut rng, 100_000, 14);
    assert!(witnesses.len() > 50);
    for (p, wit) in &witnesses {
        let u = &wit.word;
        let t = wit.tau();
        assert_eq!(t.len(), u.len());
        assert!(confirm_equal(u, &t, None, p).equal, "{u}");
        let hat_tau = wit.sharp_witness.hat_tau().unwrap();
        let last = hat_tau[hat_tau.len() - 1];
        assert_eq!((last.gen(), last.sign()), (Gen::C, wit.epsilon));
        let mut chain = wit.sharp.clone();
        chain.extend_from_slice(&Word::power(Gen::A, wit.jj));
        chain.extend_from_slice(&Word::power(Gen::B, wit.kk));
        chain.extend_from_slice(&Word::power(Gen::C, wit.beta));
        assert!(confirm_equal(u, &chain, None, p).equal, "{u} vs {chain}");
    }
}

#[test]
fn found_sequences_are_valid_optimal_and_shorten_by_two() {
    let mut rng = ChaCha8Rng::seed_from_u64(51);
    let config = OracleConfig::default();
    let mut found = 0;
    for i in 0..3000 {
        let p = params(5 + (i % 2));
        let len = rng.gen_range(0..=13);
        let w = reduce_to_geodesic(&random_word(&mut rng, len), &p);
        let x = letters()[rng.gen_range(0..6)];
        let Some(rrs) = find_optimal_rrs(&w, x, &p) else {
            continue;
        };
        found += 1;
        assert_eq!(
            check_rrs(rrs.host(), rrs.bounds(), &rrs.kinds(), &p).as_ref(),
            Some(&rrs)
        );
        assert!(is_optimal(&rrs, &p), "{rrs}");
        let (out, _) = apply_rrs(&rrs);
        assert_eq!(out.len() + 2, rrs.host().len());
        assert!(oracle_equal(rrs.host(), &out, &config, &p).unwrap().equal, "{rrs}");
    }
    assert!(found > 500);
}

#[test]
fn every_prefix_reduction_admits_no_sequence() {
    let mut rng = ChaCha8Rng::seed_from_u64(61);
    for i in 0..400 {
        let p = params(5 + (i % 2));
        let w = random_word(&mut rng, 24);
        let mut r = Reducer::new(p);
        for &x in w.iter() {
            r.push(x);
            if r.word().len() <= 16 {
                assert!(
                    enumerate_all_rrs(r.word(), &p, r.word().len()).unwrap().is_empty(),
                    "{}",
                    r.word()
                );
            }
        }
    }
}

#[test]
fn search_length_is_stable_in_slack() {
    let mut rng = ChaCha8Rng::seed_from_u64(71);
    for i in 0..120 {
        let p: GroupParams = params(5 + (i % 2));
        let len = rng.gen_range(0..=12);
        let w = random_word(&mut rng, len);
        let base = OracleConfig::default();
        let narrow = oracle_geodesic_length(&w, &base, &p).unwrap();
        let wide = oracle_geodesic_length(&w, &base.with_slack(base.slack + 2), &p).unwrap();
        assert_eq!(narrow, wide, "{w}");
    }
}

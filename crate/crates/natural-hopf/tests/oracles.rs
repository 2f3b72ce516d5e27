//! Exhaustive comparisons against naive reference computations.

use std::collections::BTreeSet;

use natural_hopf::alphabet::{compatible, realize_forest, AlphabetBuilder, Word};
use natural_hopf::enumerate::{enumerate_forests, enumerate_terms};
use natural_hopf::hopf::{coproduct_basis, coproduct_via_factorizations, hilbert_dims};
use natural_hopf::positions::alphabet_lengths;
use natural_hopf::trimmed::{charge, trim, untrim};
use natural_hopf::wqsym::{m_polynomial, wqsym_decompose};
use natural_hopf::{Forest, Gen, Letter, Polynomial, Signature, Term};
use num_bigint::BigInt;

fn sig_e() -> Signature {
    Signature::from_profile(&[0, 1, 1, 1])
}

fn forests_up_to(sig: &Signature, n: usize) -> Vec<Forest> {
    (0..=n).flat_map(|d| enumerate_forests(sig, d)).collect()
}

/// Admissible uppers by testing all subsets against both closure rules.
fn brute_force_uppers(f: &Forest) -> BTreeSet<Vec<usize>> {
    let parents = f.node_table().parent_indices();
    let n = parents.len();
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << n) {
        let upper = |i: usize| mask >> i & 1 == 1;
        let ancestors_closed = (0..n).all(|i| !upper(i) || parents[i].is_none_or(|p| upper(p)));
        let descendants_closed = (0..n).all(|i| upper(i) || (0..n).all(|k| parents[k] != Some(i) || !upper(k)));
        if ancestors_closed && descendants_closed {
            out.insert((0..n).filter(|&i| upper(i)).collect());
        }
    }
    out
}

#[test]
fn admissible_pairs_match_subset_filter() {
    let sig = sig_e();
    for f in forests_up_to(&sig, 5) {
        let listed: Vec<Vec<usize>> = f.admissible_pairs().map(|p| p.upper()).collect();
        let unique: BTreeSet<Vec<usize>> = listed.iter().cloned().collect();
        assert_eq!(unique.len(), listed.len(), "duplicate pair for {f:?}");
        assert_eq!(unique, brute_force_uppers(&f), "{f:?}");
        for pair in f.admissible_pairs() {
            let upper = f.restrict(&pair.upper()).unwrap();
            let lower = f.restrict(&pair.lower()).unwrap();
            assert!(upper.is_reduced() && lower.is_reduced());
            assert_eq!(upper.degree() + lower.degree(), f.degree());
        }
    }
}

#[test]
fn both_coproduct_engines_agree() {
    let sig = sig_e();
    for d in 0..=4 {
        for t in enumerate_terms(&sig, d) {
            let f = Forest::new(vec![t.clone()]).reduce();
            assert_eq!(coproduct_via_factorizations(&t), coproduct_basis(&f), "{t:?}");
        }
    }
}

#[test]
fn composition_is_a_fold_of_partial_compositions() {
    let sig = sig_e();
    let small: Vec<Term> = (0..=1).flat_map(|d| enumerate_terms(&sig, d)).collect();
    for d in 0..=3 {
        for t in enumerate_terms(&sig, d).into_iter().take(60) {
            let k = t.arity();
            // a deterministic spread of argument tuples
            for shift in 0..small.len() {
                let args: Vec<Term> = (0..k).map(|i| small[(i + shift) % small.len()].clone()).collect();
                let folded = (1..=k)
                    .rev()
                    .fold(t.clone(), |acc, i| acc.partial_compose(i, &args[i - 1]).unwrap());
                let composed = t.compose(&args).unwrap();
                assert_eq!(composed, folded);
                let added: usize = args.iter().map(Term::degree).sum();
                assert_eq!(composed.degree(), t.degree() + added);
            }
            assert_eq!(t.compose(&vec![Term::Leaf; k]).unwrap(), t);
            assert_eq!(Term::Leaf.compose(std::slice::from_ref(&t)).unwrap(), t);
        }
    }
}

#[test]
fn dimensions_match_enumeration() {
    for profile in [&[0, 1, 1, 1][..], &[2, 0, 1], &[0, 2], &[0, 0, 1], &[1, 1], &[0, 0, 0, 1]] {
        let sig = Signature::from_profile(profile);
        let dims = hilbert_dims(&sig, 4);
        for (n, dim) in dims.iter().enumerate() {
            assert_eq!(*dim, BigInt::from(enumerate_forests(&sig, n).len()), "{profile:?} {n}");
        }
    }
}

#[test]
fn reducing_keeps_node_tables() {
    let sig = sig_e();
    for f in forests_up_to(&sig, 3) {
        let mut padded = vec![Term::Leaf];
        for t in f.terms() {
            padded.push(t.clone());
            padded.push(Term::Leaf);
        }
        assert_eq!(Forest::new(padded).node_table(), f.node_table());
    }
}

/// A small alphabet over Σe with two letters per role, built by hand.
fn toy_alphabet() -> natural_hopf::ForestLikeAlphabet {
    let mut b = AlphabetBuilder::new(3, 3);
    let letters: Vec<Letter> = (0..4).map(|i| b.letter(format!("x{i}"))).collect();
    b.root(letters[0]);
    b.root(letters[2]);
    for (i, &a) in letters.iter().enumerate() {
        b.decorate(Gen((i % 3) as u32), a);
        b.decorate(Gen(((i + 1) % 3) as u32), a);
    }
    for j in 1..=3 {
        for (i, &a) in letters.iter().enumerate() {
            for (k, &t) in letters.iter().enumerate() {
                if (i + 2 * k + j) % 3 != 0 {
                    b.edge(j, a, t);
                }
            }
        }
    }
    b.build()
}

fn all_words(size: usize, len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..size as u32).map(move |x| {
                    let mut v = w.0.clone();
                    v.push(Letter(x));
                    Word(v)
                })
            })
            .collect();
    }
    out
}

#[test]
fn realization_matches_blind_enumeration() {
    let sig = sig_e();
    let a = toy_alphabet();
    for f in forests_up_to(&sig, 3) {
        let blind: Polynomial = Polynomial::from_keys(
            all_words(a.len(), f.degree())
                .into_iter()
                .filter(|w| compatible(w, &f, &a)),
        );
        assert_eq!(realize_forest(&f, &a), blind, "{f:?}");
    }
}

#[test]
fn charge_counts_untrimmed_forests() {
    let sig = sig_e();
    let trims: BTreeSet<_> = forests_up_to(&sig, 5).iter().map(trim).collect();
    for t in trims {
        let preimages = untrim(&t, &sig);
        assert_eq!(BigInt::from(preimages.len()), charge(&t, &sig));
        let distinct: BTreeSet<&Forest> = preimages.iter().collect();
        assert_eq!(distinct.len(), preimages.len());
        assert!(preimages.iter().all(|f| trim(f) == t && f.is_reduced()));
    }
}

#[test]
fn wqsym_decomposition_recombines() {
    let sig = sig_e();
    let al = alphabet_lengths(&sig, 5);
    for f in forests_up_to(&sig, 3) {
        let decomposition = wqsym_decompose(&f);
        let mut total = Polynomial::zero();
        let mut seen = BTreeSet::new();
        for (u, c) in &decomposition {
            assert_eq!(c, &BigInt::from(1));
            let m = m_polynomial(u, &al).unwrap();
            for (w, k) in &m {
                assert_eq!(k, &BigInt::from(1));
                assert!(seen.insert(w.clone()), "supports overlap for {f:?}");
            }
            total.add_assign(&m);
        }
        assert_eq!(total, realize_forest(&f, al.alphabet()), "{f:?}");
    }
}

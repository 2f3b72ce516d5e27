use natural_hopf::alphabet::{compatible, realize_forest, Word};
use natural_hopf::enumerate::enumerate_terms;
use natural_hopf::hopf::{coproduct_basis, coproduct_via_factorizations, product, ForestComb};
use natural_hopf::positions::{
    alphabet_lengths, alphabet_positions, pos_word, project_lengths, weight, LengthLetter,
    PositionLetter,
};
use natural_hopf::quotient::{
    content, fdb_coproduct, infix, mas_compose, mas_coproduct, phr_coproduct, phi_expand,
    ByDegree, ByInfix, CountVector, Phrase,
};
use natural_hopf::syntax::{
    parse_count_phrase, parse_decorated_word, parse_forest, parse_multiset, parse_multiset_phrase,
    parse_term, parse_trimmed_forest, parse_word_phrase, Render,
};
use natural_hopf::trimmed::{charge, length_polynomial, mas_lengths_expand, nck_coproduct_basis, trim, untrim};
use natural_hopf::wqsym::{m_polynomial, monomial_of, pack, wqsym_decompose};
use natural_hopf::enumerate::TermCatalog;
use natural_hopf::{Error, Forest, Gen, LinComb, Polynomial, Signature, Term, TrimmedForest};

fn sig_e() -> Signature {
    Signature::from_profile(&[0, 1, 1, 1])
}

fn binary_ab() -> Signature {
    Signature::new([("a", 2), ("b", 2)]).unwrap()
}

fn forest(text: &str) -> Forest {
    parse_forest(text, &sig_e()).unwrap()
}

fn tensor(pairs: &[(&str, &str, i64)]) -> LinComb<(Forest, Forest)> {
    pairs
        .iter()
        .map(|&(l, r, c)| ((forest(l), forest(r)), c.into()))
        .collect()
}

#[test]
fn term_statistics() {
    let t = parse_term("c(*,b(*,a(*)),b(*,*))", &sig_e()).unwrap();
    assert_eq!((t.degree(), t.arity()), (4, 5));
    let f = forest("* ; c(a(*),*,b(a(*),*)) ; * ; * ; b(*,b(a(*),*))");
    assert_eq!((f.degree(), f.arity()), (7, 10));
    assert_eq!((Forest::empty().degree(), Forest::empty().arity()), (0, 0));
}

#[test]
fn full_and_partial_composition() {
    let sig = sig_e();
    let t = parse_term("b(a(*),c(*,*,*))", &sig).unwrap();
    let args: Vec<Term> = ["b(*,*)", "*", "a(a(*))", "b(*,c(*,*,*))"]
        .iter()
        .map(|s| parse_term(s, &sig).unwrap())
        .collect();
    assert_eq!(
        t.compose(&args).unwrap().render(&sig),
        "b(a(b(*,*)),c(*,a(a(*)),b(*,c(*,*,*))))"
    );
    let s = parse_term("b(*,c(*,*,*))", &sig).unwrap();
    assert_eq!(
        t.partial_compose(2, &s).unwrap().render(&sig),
        "b(a(*),c(b(*,c(*,*,*)),*,*))"
    );
    assert!(matches!(
        t.partial_compose(5, &s),
        Err(Error::IndexOutOfRange { .. })
    ));
    assert!(matches!(
        t.compose(&args[..2]),
        Err(Error::ArgumentCount { .. })
    ));
}

#[test]
fn node_table_of_seven_node_forest() {
    let f = forest("* ; c(a(*),*,b(a(*),*)) ; * ; * ; b(*,b(a(*),*))");
    let table = f.node_table();
    let sig = sig_e();
    let names: Vec<&str> = table.nodes().iter().map(|n| sig.name(n.decoration)).collect();
    assert_eq!(names, ["c", "a", "b", "a", "b", "b", "a"]);
    assert_eq!(table.node(3).position, [3, 1]);
    assert_eq!(table.node(6).position, [2, 1]);
    assert!(table.node(0).position.is_empty() && table.node(4).position.is_empty());
    assert_eq!(table.node(1).parent, Some((0, 1)));
    assert_eq!(table.node(2).parent, Some((0, 3)));
    assert_eq!(table.node(5).parent, Some((4, 2)));
    assert_eq!(table.node(6).height, 2);
}

#[test]
fn positions_of_eight_node_forest() {
    let f = forest("b(c(*,*,a(*)),a(b(*,*))) ; c(*,a(*),b(*,*))");
    let positions: Vec<Vec<usize>> = f.node_table().nodes().iter().map(|n| n.position.clone()).collect();
    let expected: [&[usize]; 8] = [&[], &[1], &[1, 3], &[2], &[2, 1], &[], &[2], &[3]];
    assert_eq!(positions, expected);
}

#[test]
fn restriction_and_admissibility() {
    let f = forest("b(a(*),c(*,b(*,*),*)) ; a(c(*,*,b(*,*)))");
    assert_eq!(
        f.restrict(&[0, 1, 3, 6]).unwrap().render(&sig_e()),
        "b(a(*),*) ; b(*,*) ; b(*,*)"
    );
    assert_eq!(f.restrict(&[]).unwrap(), Forest::empty());
    assert!(f.restrict(&[7]).is_err());
    let uppers: Vec<Vec<usize>> = f.admissible_pairs().map(|p| p.upper()).collect();
    assert!(!uppers.contains(&vec![0, 1, 3, 6]));
    assert!(uppers.contains(&vec![0, 2, 4]));
    let single = forest("a(*)");
    let pairs: Vec<Vec<usize>> = single.admissible_pairs().map(|p| p.upper()).collect();
    assert_eq!(pairs, [vec![], vec![0]]);
}

#[test]
fn product_and_coproduct_of_two_term_forest() {
    let x = ForestComb::basis(forest("a(b(*,*)) ; c(a(*),*,*)"));
    let y = ForestComb::basis(forest("b(a(*),*)"));
    assert_eq!(
        product(&x, &y),
        ForestComb::basis(forest("a(b(*,*)) ; c(a(*),*,*) ; b(a(*),*)"))
    );
    let f = forest("c(*,a(*),*) ; b(*,*)");
    let expected = tensor(&[
        ("", "c(*,a(*),*) ; b(*,*)", 1),
        ("c(*,*,*)", "a(*) ; b(*,*)", 1),
        ("b(*,*)", "c(*,a(*),*)", 1),
        ("c(*,a(*),*)", "b(*,*)", 1),
        ("c(*,*,*) ; b(*,*)", "a(*)", 1),
        ("c(*,a(*),*) ; b(*,*)", "", 1),
    ]);
    assert_eq!(coproduct_basis(&f), expected);
}

#[test]
fn chain_factorizations() {
    let t = parse_term("a(a(*))", &sig_e()).unwrap();
    let expected = tensor(&[("", "a(a(*))", 1), ("a(*)", "a(*)", 1), ("a(a(*))", "", 1)]);
    assert_eq!(coproduct_via_factorizations(&t), expected);
    assert_eq!(coproduct_via_factorizations(&Term::Leaf), tensor(&[("", "", 1)]));
}

#[test]
fn compatibility_constraints_of_eight_node_forest() {
    let sig = sig_e();
    let f = forest("b(c(*,*,a(*)),a(b(*,*))) ; c(*,a(*),b(*,*))");
    let ap = alphabet_positions(&sig, 2, 3);
    let word = |letters: &[(u32, &[usize])]| {
        ap.word(
            &letters
                .iter()
                .map(|&(g, label)| PositionLetter {
                    generator: Gen(g),
                    label: label.to_vec(),
                })
                .collect::<Vec<_>>(),
        )
        .unwrap()
    };
    let good = word(&[
        (1, &[]),
        (2, &[1]),
        (0, &[1, 3]),
        (0, &[2]),
        (1, &[2, 1]),
        (2, &[]),
        (0, &[2]),
        (1, &[3]),
    ]);
    assert!(compatible(&good, &f, ap.alphabet()));
    // node 4 hangs from node 1 through its second edge, not its first
    let bad = word(&[
        (1, &[]),
        (2, &[1]),
        (0, &[1, 3]),
        (0, &[1]),
        (1, &[1, 1]),
        (2, &[]),
        (0, &[2]),
        (1, &[3]),
    ]);
    assert!(!compatible(&bad, &f, ap.alphabet()));
    assert!(!compatible(&Word::empty(), &f, ap.alphabet()));
    assert_eq!(
        pos_word(&f),
        [
            PositionLetter { generator: Gen(1), label: vec![] },
            PositionLetter { generator: Gen(2), label: vec![1] },
            PositionLetter { generator: Gen(0), label: vec![1, 3] },
            PositionLetter { generator: Gen(0), label: vec![2] },
            PositionLetter { generator: Gen(1), label: vec![2, 1] },
            PositionLetter { generator: Gen(2), label: vec![] },
            PositionLetter { generator: Gen(0), label: vec![2] },
            PositionLetter { generator: Gen(1), label: vec![3] },
        ]
    );
    assert_eq!(weight(&pos_word(&f)), 8);
}

fn zeros(n: usize) -> Vec<usize> {
    vec![0; n]
}

#[test]
fn position_realization_matches_the_padded_family() {
    let sig = sig_e();
    let f = forest("c(b(*,*),*,a(c(*,*,*))) ; b(a(*),*)");
    let max_len = 5;
    let ap = alphabet_positions(&sig, max_len, 3);
    let mut expected = Polynomial::zero();
    let r = 0..=max_len;
    for l1 in r.clone() {
        for l2 in r.clone() {
            for l3 in r.clone() {
                for l4 in r.clone() {
                    for l5 in r.clone() {
                        for l6 in r.clone() {
                            let cat = |parts: &[&[usize]]| parts.concat();
                            let labels = [
                                (2, zeros(l1)),
                                (1, cat(&[&zeros(l1), &[1], &zeros(l2)])),
                                (0, cat(&[&zeros(l1), &[3], &zeros(l3)])),
                                (2, cat(&[&zeros(l1), &[3], &zeros(l3), &[1], &zeros(l4)])),
                                (1, zeros(l5)),
                                (0, cat(&[&zeros(l5), &[1], &zeros(l6)])),
                            ];
                            if labels.iter().any(|(_, u)| u.len() > max_len) {
                                continue;
                            }
                            let letters: Vec<PositionLetter> = labels
                                .into_iter()
                                .map(|(g, label)| PositionLetter { generator: Gen(g), label })
                                .collect();
                            expected.add_term(ap.word(&letters).unwrap(), 1);
                        }
                    }
                }
            }
        }
    }
    assert_eq!(realize_forest(&f, ap.alphabet()), expected);
}

#[test]
fn length_realization_matches_the_iverson_family() {
    let sig = sig_e();
    let f = forest("c(b(*,*),*,a(c(*,*,*))) ; b(a(*),*)");
    let al = alphabet_lengths(&sig, 6);
    let mut expected = Polynomial::zero();
    let gens = [2, 1, 0, 2, 1, 0];
    let mut ls = [0usize; 6];
    loop {
        let [l1, l2, l3, l4, l5, l6] = ls;
        if l1 < l2 && l1 < l3 && l3 < l4 && l5 < l6 {
            let w = ls
                .iter()
                .zip(gens)
                .map(|(&length, g)| al.id(LengthLetter { generator: Gen(g), length }).unwrap())
                .collect();
            expected.add_term(Word(w), 1);
        }
        let Some(i) = (0..6).rev().find(|&i| ls[i] < 6) else { break };
        ls[i] += 1;
        for l in &mut ls[i + 1..] {
            *l = 0;
        }
    }
    assert_eq!(realize_forest(&f, al.alphabet()), expected);
    let ap = alphabet_positions(&sig, 6, 3);
    let projected = project_lengths(&realize_forest(&f, ap.alphabet()), &ap, &al).unwrap();
    // the truncation of the position side loses deep words, so only inclusion holds here
    for (w, c) in &projected {
        assert!(c <= &expected.coefficient(w));
    }
}

#[test]
fn wqsym_examples() {
    let sig = sig_e();
    let u = parse_decorated_word("4^b 2^b 3^a 4^b 4^c 6^c 3^a", &sig).unwrap();
    assert_eq!(pack(&u).render(&sig), "3^b 1^b 2^a 3^b 3^c 4^c 2^a");
    let al = alphabet_lengths(&sig, 4);
    let v = parse_decorated_word("2^a 1^a 1^b 4^c 2^b", &sig).unwrap();
    assert_eq!(
        al.alphabet().render_word(&monomial_of(&v, &al).unwrap()),
        "a^a_2 a^a_1 a^b_1 a^c_4 a^b_2"
    );
    let f = forest("c(a(*),*,b(*,*))");
    let expected: LinComb<_> = ["1^c 2^a 2^b", "1^c 2^a 3^b", "1^c 3^a 2^b"]
        .iter()
        .map(|s| (parse_decorated_word(s, &sig).unwrap(), 1.into()))
        .collect();
    assert_eq!(wqsym_decompose(&f), expected);
    let m = parse_decorated_word("2^b 1^c 1^c 3^a", &sig).unwrap();
    let p = m_polynomial(&m, &al).unwrap();
    for (w, c) in &p {
        let ls: Vec<usize> = w.letters().iter().map(|&a| al.letter(a).length).collect();
        assert!(ls[1] == ls[2] && ls[2] < ls[0] && ls[0] < ls[3]);
        assert_eq!(c, &1.into());
    }
    assert_eq!(p.len(), 10);
    assert_eq!(
        m_polynomial(&parse_decorated_word("2^a", &sig).unwrap(), &al),
        Err(Error::NotPacked)
    );
}

#[test]
fn charges_of_the_two_trimmed_forests() {
    let sig = sig_e();
    let f1 = parse_trimmed_forest("c(a,c(c,b,b)) ; b ; a(b)", &sig).unwrap();
    let f2 = parse_trimmed_forest("b(a) ; c(b(a,c))", &sig).unwrap();
    assert_eq!(charge(&f1, &sig), 3.into());
    assert_eq!(charge(&f2, &sig), 6.into());
    assert_eq!(untrim(&f1, &sig).len(), 3);
    assert!(untrim(&f2, &sig).iter().all(|f| trim(f) == f2));
    assert_eq!(f1.degree(), 9);
    let source = forest("b(a(*),*) ; * ; c(*,b(a(*),c(*,*,*)),*)");
    assert_eq!(trim(&source), f2);
}

#[test]
fn nck_coproduct_of_a_cherry() {
    let sig = sig_e();
    let t = |s: &str| parse_trimmed_forest(s, &sig).unwrap();
    let expected: LinComb<(TrimmedForest, TrimmedForest)> = [
        ("", "c(b,a)"),
        ("c", "b ; a"),
        ("c(b)", "a"),
        ("c(a)", "b"),
        ("c(b,a)", ""),
    ]
    .iter()
    .map(|&(l, r)| ((t(l), t(r)), 1.into()))
    .collect();
    assert_eq!(nck_coproduct_basis(&t("c(b,a)")), expected);
}

#[test]
fn length_polynomial_of_trimmed_forest() {
    let sig = sig_e();
    let al = alphabet_lengths(&sig, 5);
    let t = parse_trimmed_forest("c(a,c(c,b,b)) ; b ; a(b)", &sig).unwrap();
    for f in untrim(&t, &sig) {
        assert_eq!(realize_forest(&f, al.alphabet()), length_polynomial(&t, &al));
    }
}

#[test]
fn content_infix_and_compositions() {
    let sig = sig_e();
    let t = parse_term("c(b(*,a(*)),c(b(*,*),*,a(*)),b(*,*))", &sig).unwrap();
    assert_eq!(content(&t).render(&sig), "{a,a,b,b,b,c,c}");
    let m = parse_multiset("{a,b,b,b,c}", &sig).unwrap();
    let m2 = parse_multiset("{b,c,c}", &sig).unwrap();
    assert_eq!(
        mas_compose(&m, 4, &m2, &sig).unwrap().render(&sig),
        "{a,b,b,b,b,c,c,c}"
    );
    let abc = Signature::new([("a", 2), ("b", 2), ("c", 2)]).unwrap();
    let x = parse_term("b(a(*,b(*,*)),c(*,*))", &abc).unwrap();
    assert_eq!(infix(&x).unwrap().render(&abc), "abbc");
    let ab = binary_ab();
    let bb = parse_term("b(b(*,*),*)", &ab).unwrap();
    assert_eq!(infix(&bb).unwrap().render(&ab), "bb");
}

#[test]
fn phi_of_alpha_three() {
    let sig = Signature::new([("a", 2)]).unwrap();
    let mut catalog = TermCatalog::new(&sig);
    let cong = ByDegree::new(&sig).unwrap();
    let phi = phi_expand(&Phrase::new([3usize]), &cong, &mut catalog);
    assert_eq!(phi.len(), 5);
    assert!(phi.iter().all(|(_, c)| c == &1.into()));
    let expected = [
        "a(a(a(*,*),*),*)",
        "a(a(*,a(*,*)),*)",
        "a(a(*,*),a(*,*))",
        "a(*,a(a(*,*),*))",
        "a(*,a(*,a(*,*)))",
    ];
    for text in expected {
        let f = parse_forest(text, &sig).unwrap();
        assert_eq!(phi.coefficient(&f), 1.into(), "{text}");
    }
    assert_eq!(enumerate_terms(&sig, 3).len(), 5);
}

#[test]
fn multiset_coproduct_display() {
    let sig = sig_e();
    let p = |s: &str| parse_multiset_phrase(s, &sig).unwrap();
    let expected: LinComb<_> = [
        ("", "{a,b,b}", 1),
        ("{a}", "{b,b}", 1),
        ("{b}", "{a,b}", 2),
        ("{b}", "{a} ; {b}", 1),
        ("{b}", "{b} ; {a}", 1),
        ("{a,b}", "{b}", 2),
        ("{b,b}", "{a}", 3),
        ("{a,b,b}", "", 1),
    ]
    .iter()
    .map(|&(l, r, c)| ((p(l), p(r)), c.into()))
    .collect();
    assert_eq!(mas_coproduct(&p("{a,b,b}"), &sig), expected);
}

#[test]
fn deformed_faa_di_bruno_displays() {
    let c = |s: &str| parse_count_phrase(s).unwrap();
    let build = |pairs: &[(&str, &str, i64)]| -> LinComb<(Phrase<CountVector>, Phrase<CountVector>)> {
        pairs.iter().map(|&(l, r, k)| ((c(l), c(r)), k.into())).collect()
    };
    assert_eq!(
        fdb_coproduct(2, &c("3")).unwrap(),
        build(&[
            ("", "3", 1),
            ("1", "2", 3),
            ("1", "1 ; 1", 3),
            ("2", "1", 5),
            ("3", "", 1)
        ])
    );
    assert_eq!(
        fdb_coproduct(1, &c("3")).unwrap(),
        build(&[
            ("", "3", 1),
            ("1", "2", 2),
            ("1", "1 ; 1", 1),
            ("2", "1", 3),
            ("3", "", 1)
        ])
    );
    assert_eq!(
        fdb_coproduct(0, &c("120")).unwrap(),
        build(&[
            ("", "120", 1),
            ("010", "110", 1),
            ("020", "100", 1),
            ("100", "020", 1),
            ("110", "010", 1),
            ("120", "", 1)
        ])
    );
}

#[test]
fn phrase_coproduct_display() {
    let sig = binary_ab();
    let p = |s: &str| parse_word_phrase(s, &sig).unwrap();
    let expected: LinComb<_> = [
        ("", "aab", 1),
        ("a", "a, b", 1),
        ("a", "ab", 1),
        ("b", "aa", 1),
        ("aa", "b", 1),
        ("ab", "a", 2),
        ("aab", "", 1),
    ]
    .iter()
    .map(|&(l, r, c)| ((p(l), p(r)), c.into()))
    .collect();
    assert_eq!(phr_coproduct(&p("aab")), expected);
}

#[test]
fn length_realization_cannot_separate_ab_from_ba() {
    let sig = binary_ab();
    let mut catalog = TermCatalog::new(&sig);
    let cong = ByInfix::new(&sig).unwrap();
    let p = |s: &str| parse_word_phrase(s, &sig).unwrap();
    for max_len in 3..=5 {
        let al = alphabet_lengths(&sig, max_len);
        let ab = natural_hopf::quotient::realize_quotient(&p("ab"), &cong, &mut catalog, al.alphabet());
        let ba = natural_hopf::quotient::realize_quotient(&p("ba"), &cong, &mut catalog, al.alphabet());
        assert_eq!(ab, ba);
        assert!(!ab.is_zero());
    }
}

#[test]
fn collected_length_realization_of_abb() {
    let sig = sig_e();
    let al = alphabet_lengths(&sig, 5);
    let m = parse_multiset("{a,b,b}", &sig).unwrap();
    let p = mas_lengths_expand(&m, &sig, &al);
    let mut expected = Polynomial::zero();
    for l1 in 0..=5usize {
        for l2 in 0..=5usize {
            for l3 in 0..=5usize {
                let lt = (l1 < l2 && l2 < l3) as i64;
                let mixed = (l1 < l3 && l3 <= l2) as i64;
                for (gens, coeff) in [
                    ([0u32, 1, 1], 2 * lt),
                    ([1, 0, 1], 3 * lt + mixed),
                    ([1, 1, 0], 5 * lt + mixed),
                ] {
                    let w = [l1, l2, l3]
                        .iter()
                        .zip(gens)
                        .map(|(&length, g)| al.id(LengthLetter { generator: Gen(g), length }).unwrap())
                        .collect();
                    expected.add_term(Word(w), coeff);
                }
            }
        }
    }
    assert_eq!(p, expected);
}

#[test]
fn syntax_errors_carry_their_kind() {
    let sig = sig_e();
    assert_eq!(parse_term("*", &sig), Ok(Term::Leaf));
    assert!(matches!(parse_term("b(a(*))", &sig), Err(Error::ChildCount { .. })));
    assert!(matches!(parse_term("z(*)", &sig), Err(Error::UnknownGenerator(_))));
    assert!(matches!(parse_forest("a(*) ;", &sig), Err(Error::Syntax { .. })));
}

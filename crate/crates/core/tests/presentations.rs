use mlaw::{
    eliminate_short_relators, group_from_cosets, parse_presentation, todd_coxeter_with, EnumerationLimits,
    Error, Presentation, Strategy as Method, Word,
};
use proptest::prelude::*;

fn word_strategy(gens: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec((0..gens, -3i64..=3), 0..8)
        .prop_map(|s| Word::from_syllables(s.into_iter().filter(|&(_, e)| e != 0)))
}

fn order_of(p: &Presentation, strategy: Method) -> Result<usize, Error> {
    let limits = EnumerationLimits::new(20_000, 8).unwrap();
    let t = todd_coxeter_with(p, &limits, strategy)?;
    Ok(group_from_cosets(&t, p)?.0.order())
}

proptest! {
    #[test]
    fn display_then_parse_round_trips(rels in proptest::collection::vec(word_strategy(3), 0..5)) {
        let names = vec!["a".to_string(), "b1".to_string(), "c_2".to_string()];
        let p = Presentation::new(names, rels).unwrap();
        let text = p.to_string();
        let back = parse_presentation(&text).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn parser_never_panics(text in "\\PC{0,64}") {
        let _ = parse_presentation(&text);
    }

    #[test]
    fn strategies_and_simplification_agree(
        p in 1i64..6,
        q in 1i64..6,
        extra in word_strategy(2),
    ) {
        let a = Word::generator(0).pow(p);
        let b = Word::generator(1).pow(q);
        let pres = Presentation::new(vec!["a".into(), "b".into()], vec![a, b, extra]).unwrap();
        let simplified = eliminate_short_relators(&pres);
        let hlt = order_of(&pres, Method::Hlt);
        let felsch = order_of(&pres, Method::Felsch);
        let simp = order_of(&simplified.presentation, Method::Felsch);
        if let (Ok(x), Ok(y)) = (&hlt, &felsch) {
            prop_assert_eq!(x, y);
        }
        if let (Ok(x), Ok(y)) = (&felsch, &simp) {
            prop_assert_eq!(x, y);
        }
    }
}

#[test]
fn named_presentations() {
    let cases = [
        ("<a | a^6>", 6),
        ("<a, b | a^2, b^2, (ab)^3>", 6),
        ("<x, y | x^4, x^2 = y^2, yxy^-1 = x^-1>", 8),
        ("<a, b | a^2, b^3, (ab)^4>", 24),
        ("<a, b | a^7, b^3, bab^-1 = a^2>", 21),
        ("<a, b | a, b>", 1),
    ];
    for (text, order) in cases {
        let p = parse_presentation(text).unwrap();
        for s in [Method::Hlt, Method::Felsch] {
            assert_eq!(order_of(&p, s).unwrap(), order, "{text}");
        }
    }
}

#[test]
fn infinite_group_hits_the_limit() {
    let p = parse_presentation("<a, b | aba^-1b^-1>").unwrap();
    assert!(matches!(order_of(&p, Method::Felsch), Err(Error::CosetLimit { .. })));
}

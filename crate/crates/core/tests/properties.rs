use std::sync::OnceLock;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sqmv_core::models::{build_model, finite_catalog};
use sqmv_core::semantics::{evaluate, random_element, zero_second_coordinates};
use sqmv_core::syntax::random::TermGen;
use sqmv_core::syntax::Connective::OPlus;
use sqmv_core::syntax::{
    expand_abbreviations, instantiate, match_schema, parse, print, substitute, Assignment,
    Expansion, Schema, Signature, Term,
};
use sqmv_core::transform::{mv_to_w_model, mv_to_w_term, w_to_mv_model, w_to_mv_term};
use sqmv_core::{Element, Model, Rational, Valuation};

const VARS: [&str; 3] = ["x", "y", "z"];

fn term(sig: Signature, depth: usize, seed: u64) -> Term {
    TermGen::new(sig, depth, &VARS).generate(&mut ChaCha8Rng::seed_from_u64(seed))
}

fn valuation(m: &Model, seed: u64) -> Valuation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    VARS.iter().map(|v| (v.to_string(), random_element(m, &mut rng, 24))).collect()
}

fn model(name: &str) -> Model {
    build_model(name).unwrap()
}

/// Strong models in the additive signature: the finite catalog and the
/// three standard pair models.
fn strong_models() -> Vec<Model> {
    finite_catalog().into_iter().chain(["square", "disk", "flat-standard"]).map(model).collect()
}

/// Each strong model with its implicative reading and the additive reading
/// of that. Built once: the class checks in the translations are costly on
/// the larger products.
fn translated_models() -> &'static [(Model, Model, Model)] {
    static CELL: OnceLock<Vec<(Model, Model, Model)>> = OnceLock::new();
    CELL.get_or_init(|| {
        strong_models()
            .into_iter()
            .map(|m| {
                let mw = mv_to_w_model(&m).unwrap();
                let mm = w_to_mv_model(&mw).unwrap();
                (m, mw, mm)
            })
            .collect()
    })
}

fn sig() -> impl Strategy<Value = Signature> {
    prop_oneof![Just(Signature::Mv), Just(Signature::W)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn print_then_parse_is_identity(seed in any::<u64>(), sig in sig()) {
        let t = term(sig, 8, seed);
        prop_assert_eq!(parse(&print(&t), sig).unwrap(), t);
    }

    #[test]
    fn regular_iff_not_a_negated_variable(seed in any::<u64>(), sig in sig()) {
        let t = term(sig, 5, seed);
        let mut core = &t;
        while let Term::Neg(a) | Term::UMinus(a) = core {
            core = a;
        }
        prop_assert_eq!(t.is_regular(), !matches!(core, Term::Var(_)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn matching_recovers_instances(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pattern = TermGen::new(Signature::W, 4, &["p", "q", "r"]).generate(&mut rng);
        let gen = TermGen::new(Signature::W, 3, &["x", "y"]);
        let sigma: Assignment =
            pattern.variables().into_iter().map(|v| (v, gen.generate(&mut rng))).collect();
        let ground = instantiate(&pattern, &sigma).unwrap();
        let schema = Schema::new(pattern);
        let found = match_schema(&schema, &ground).expect("an instance matches");
        prop_assert_eq!(&found, &sigma);
        prop_assert_eq!(substitute(&schema, &found, Signature::W).unwrap(), ground);
    }

    #[test]
    fn matches_substitute_back(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pattern = TermGen::new(Signature::W, 2, &["p", "q"]).generate(&mut rng);
        let ground = TermGen::new(Signature::W, 4, &["x"]).generate(&mut rng);
        let schema = Schema::new(pattern);
        if let Some(s) = match_schema(&schema, &ground) {
            prop_assert_eq!(substitute(&schema, &s, Signature::W).unwrap(), ground);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1_000))]

    #[test]
    fn strong_expansion_preserves_values(seed in any::<u64>(), vseed in any::<u64>()) {
        let t = term(Signature::Mv, 5, seed);
        let e = expand_abbreviations(&t, Signature::Mv, Expansion::Strong);
        for m in strong_models() {
            let v = valuation(&m, vseed);
            prop_assert_eq!(evaluate(&t, &m, &v).unwrap(), evaluate(&e, &m, &v).unwrap(), "{}", m.name());
        }
    }

    #[test]
    fn translations_commute_with_evaluation(seed in any::<u64>(), vseed in any::<u64>()) {
        let t = term(Signature::Mv, 5, seed);
        let tw = mv_to_w_term(&t).unwrap();
        let back = w_to_mv_term(&tw).unwrap();
        let s = term(Signature::W, 5, seed ^ 0x5a5a);
        let sm = w_to_mv_term(&s).unwrap();
        for (m, mw, mm) in translated_models() {
            let v = valuation(m, vseed);
            prop_assert_eq!(evaluate(&t, m, &v).unwrap(), evaluate(&tw, mw, &v).unwrap(), "{}", m.name());
            prop_assert_eq!(evaluate(&back, m, &v).unwrap(), evaluate(&t, m, &v).unwrap());
            prop_assert_eq!(evaluate(&s, mw, &v).unwrap(), evaluate(&sm, mm, &v).unwrap());
        }
    }

    #[test]
    fn sums_ignore_second_coordinates(seed in any::<u64>(), vseed in any::<u64>()) {
        let square = model("square");
        let t = TermGen::new(Signature::Mv, 6, &VARS)
            .generate_where(&mut ChaCha8Rng::seed_from_u64(seed), |t| t.count_connective(OPlus) > 0);
        let v = valuation(&square, vseed);
        let a = evaluate(&t, &square, &v).unwrap();
        prop_assert_eq!(&a, &evaluate(&t, &square, &zero_second_coordinates(&v)).unwrap());
        prop_assert!(matches!(a, Element::Pair(_, ref b) if *b == Rational::from_integer(0)));
    }

    #[test]
    fn regular_terms_absorb_the_prefix(seed in any::<u64>(), vseed in any::<u64>()) {
        let t = TermGen::new(Signature::W, 5, &VARS)
            .generate_where(&mut ChaCha8Rng::seed_from_u64(seed), Term::is_regular);
        let prefixed = Term::imp(Term::self_impl(Term::var("r")), t.clone());
        for (_, mw, _) in translated_models() {
            let mut v = valuation(mw, vseed);
            let mut rng = ChaCha8Rng::seed_from_u64(vseed ^ 1);
            v.insert("r".into(), random_element(mw, &mut rng, 24));
            prop_assert_eq!(evaluate(&prefixed, mw, &v).unwrap(), evaluate(&t, mw, &v).unwrap(), "{}", mw.name());
        }
    }
}

#[test]
fn chains_are_subalgebras_of_the_interval() {
    let clamp = |r: Rational| r.max(Rational::from_integer(-1)).min(Rational::from_integer(1));
    let zero = Rational::from_integer(0);
    for n in 1..=4 {
        let m = model(&format!("chain:{n}"));
        let els = m.elements().unwrap();
        let value = |e: &Element| m.show(e).parse::<Rational>().unwrap();
        let find = |r: Rational| els.iter().find(|e| value(e) == r).cloned().unwrap();
        use sqmv_core::syntax::Connective::*;
        for x in &els {
            assert_eq!(m.unary(UMinus, x), find(-value(x)));
            assert_eq!(m.unary(PosPart, x), find(value(x).max(zero)));
            assert_eq!(m.unary(NegPart, x), find(value(x).min(zero)));
            for y in &els {
                assert_eq!(m.binary(OPlus, x, y), find(clamp(value(x) + value(y))));
            }
        }
    }
}

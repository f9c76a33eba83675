use heisid::encodings::pcp::{pcp_to_generators, pcp_witness, GeneratorLabel, PcpInstance};
use heisid::encodings::{alpha, beta, f_sl2, reduce, GroupWord, Letter};
use heisid::exactmath::{QMatrix, Rational};
use proptest::prelude::*;

fn letters(symbols: u32, max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(
        (1..=symbols, any::<bool>()).prop_map(|(s, inv)| Letter { symbol: s, inverse: inv }),
        0..=max_len,
    )
}

fn word(symbols: u32, max_len: usize) -> impl Strategy<Value = GroupWord> {
    letters(symbols, max_len).prop_map(reduce)
}

fn binary_word() -> impl Strategy<Value = String> {
    prop::collection::vec(prop::sample::select(vec!['a', 'b']), 0..=4).prop_map(|v| v.into_iter().collect())
}

proptest! {
    #[test]
    fn reduce_is_idempotent(ls in letters(4, 20)) {
        let w = reduce(ls);
        prop_assert_eq!(reduce(w.letters().iter().copied()), w.clone());
        for pair in w.letters().windows(2) {
            prop_assert!(!(pair[0].symbol == pair[1].symbol && pair[0].inverse != pair[1].inverse));
        }
    }

    #[test]
    fn concat_is_associative(u in word(3, 8), v in word(3, 8), w in word(3, 8)) {
        prop_assert_eq!(u.concat(&v).concat(&w), u.concat(&v.concat(&w)));
        prop_assert!(u.concat(&u.inverse()).is_empty());
    }

    #[test]
    fn alpha_is_multiplicative(u in word(6, 8), v in word(6, 8)) {
        prop_assert_eq!(alpha(&u.concat(&v)), alpha(&u).concat(&alpha(&v)));
    }

    #[test]
    fn alpha_is_injective(u in word(6, 6), v in word(6, 6)) {
        if u != v {
            prop_assert_ne!(alpha(&u), alpha(&v));
        }
    }

    #[test]
    fn f_is_a_homomorphism(u in word(2, 10), v in word(2, 10)) {
        let lhs = f_sl2(&u.concat(&v)).unwrap();
        let rhs = f_sl2(&u).unwrap().mul(&f_sl2(&v).unwrap()).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(lhs.determinant().unwrap(), Rational::one());
    }

    #[test]
    fn f_is_injective_on_reduced_words(w in word(2, 12)) {
        // Free subgroup: only the empty word maps to the identity.
        prop_assert_eq!(f_sl2(&w).unwrap().is_identity(), w.is_empty());
    }

    #[test]
    fn beta_separates_words(u in word(6, 5), v in word(6, 5)) {
        prop_assert_eq!(beta(&u) == beta(&v), u == v);
    }

    #[test]
    fn pcp_generators_are_unimodular(
        images in prop::collection::vec((binary_word(), binary_word()), 1..=6),
    ) {
        let names: Vec<String> = (1..=images.len()).map(|i| format!("a{i}")).collect();
        let names: Vec<&str> = names.iter().map(String::as_str).collect();
        let g: Vec<&str> = images.iter().map(|(x, _)| x.as_str()).collect();
        let h: Vec<&str> = images.iter().map(|(_, y)| y.as_str()).collect();
        let inst = PcpInstance::from_strings(&names, &g, &h).unwrap();
        let set = pcp_to_generators(&inst);
        prop_assert_eq!(set.len(), images.len() + 3);
        for gen in &set.generators {
            prop_assert!(gen.matrix.is_integral());
            prop_assert_eq!(gen.matrix.determinant().unwrap(), Rational::one());
        }
        let b = &set.generators[set.index_of(GeneratorLabel::B).unwrap()].matrix;
        let b2 = b.mul(b).unwrap();
        for r in 0..4 {
            for c in 0..4 {
                if (r < 2) != (c < 2) {
                    prop_assert!(b2.get(r, c).is_zero());
                }
            }
        }
    }

    #[test]
    fn pcp_witness_multiplies_to_identity(
        images in prop::collection::vec(binary_word(), 1..=4),
        tail in prop::collection::vec(1usize..4, 0..=4),
    ) {
        // g = h makes every word a solution.
        let names: Vec<String> = (1..=images.len()).map(|i| format!("a{i}")).collect();
        let names: Vec<&str> = names.iter().map(String::as_str).collect();
        let g: Vec<&str> = images.iter().map(String::as_str).collect();
        let inst = PcpInstance::from_strings(&names, &g, &g).unwrap();
        let set = pcp_to_generators(&inst);
        let mut solution = vec![0];
        solution.extend(tail.iter().filter(|&&i| i < images.len()));
        let seq = pcp_witness(&inst, &set, &solution).unwrap();
        let product = seq
            .iter()
            .fold(QMatrix::identity(4), |acc, &i| acc.mul(&set.generators[i].matrix).unwrap());
        prop_assert!(product.is_identity());
    }
}

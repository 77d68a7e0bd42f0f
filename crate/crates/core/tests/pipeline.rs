//! End-to-end use of the public API, with small independent oracles.

use std::collections::BTreeMap;

use qloop_core::{
    blocks_linked, braid_act_word, dn_node2_char, dual_lweight, elliptic_class, fundamental_char, lroot_decompose,
    minuscule_char, parse_lcharacter, parse_lweight, sl2_tensor_irreducible, tensor_char, weight_projection,
    weyl_module_dim, builtin_table, Family, LWeight, LieType, Sign, Sl2String, SpectralParam, Weight, WeylGroup,
};

fn sp(o: &str, e: i64) -> SpectralParam {
    SpectralParam::new(o, e).unwrap()
}

/// Weyl's dimension formula for `sl_{n+1}` fundamental weights: `C(n+1, i)`.
fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

#[test]
fn minuscule_dimensions_match_weyl_formula() {
    for n in 1..=6usize {
        let t = LieType::new(Family::A, n).unwrap();
        for i in 1..=n {
            let c = minuscule_char(t, i, &sp("a", 0)).unwrap();
            assert_eq!(c.dimension(), binom(n as u64 + 1, i as u64), "A{n} node {i}");
            // weights form one Weyl orbit, each once
            let orbit = WeylGroup::get(t).weight_orbit(&Weight::fundamental(n, i)).unwrap();
            let proj = weight_projection(&c, n);
            assert_eq!(proj.len(), orbit.len());
            assert!(proj.values().all(|&m| m == 1));
        }
    }
}

#[test]
fn characters_are_dual_and_linked() {
    // V(omega) and its dual differ by T_w0; a fundamental and its dual lie in
    // opposite blocks, so their product is linked to the trivial module.
    for s in ["A3", "B3", "C3", "D4", "D5"] {
        let t: LieType = s.parse().unwrap();
        for i in 1..=t.rank() {
            let w = LWeight::omega(i, sp("a", 1));
            let d = dual_lweight(t, &w).unwrap();
            assert!(blocks_linked(t, &(&w * &d), &LWeight::one()).unwrap(), "{s} {i}");
            assert!(lroot_decompose(t, &(&w * &d), Sign::Plus).unwrap().is_some());
        }
    }
}

#[test]
fn text_round_trips() {
    let c = dn_node2_char(4, &sp("a", 0)).unwrap();
    assert_eq!(parse_lcharacter(&c.to_string()).unwrap(), c);
    let w = parse_lweight("w[3;b,-2]^2 * w[1;a]").unwrap();
    assert_eq!(w.to_string(), "w[1;a,0]*w[3;b,-2]^2");
}

#[test]
fn generic_tensor_products_have_product_dimension() {
    // a tensor product of fundamental modules at generic parameters; the
    // character of the product is the product of characters
    let t: LieType = "D4".parse().unwrap();
    let c1 = minuscule_char(t, 1, &sp("a", 0)).unwrap();
    let c2 = fundamental_char(t, 2, &sp("b", 0), &builtin_table(t, 2).unwrap()).unwrap();
    let prod = tensor_char(&c1, &c2);
    assert_eq!(prod.dimension(), 8 * 29);
    let omega = parse_lweight("w[1;a,0]*w[2;b,0]").unwrap();
    let dims = BTreeMap::from([(1, 8), (2, 29)]);
    assert_eq!(weyl_module_dim(t, &omega, &dims).unwrap(), 8 * 29);
    // every term stays in the block of the highest ℓ-weight
    let class = elliptic_class(t, &omega).unwrap();
    assert!(prod.iter().all(|(w, _)| elliptic_class(t, w).unwrap() == class));
}

#[test]
fn strings_in_general_position() {
    let s = |e, m| Sl2String::new(sp("a", e), m);
    // {-1, 1} and {5}: the union is not a segment
    assert!(sl2_tensor_irreducible(&[s(0, 2), s(5, 1)]));
    // {-1, 1} and {3}: the union is the segment {-1, 1, 3}
    assert!(!sl2_tensor_irreducible(&[s(0, 2), s(3, 1)]));
}

#[test]
fn braid_words_compose() {
    let t: LieType = "C3".parse().unwrap();
    let pi = parse_lweight("w[1;a,0]*w[3;a,2]").unwrap();
    let a = braid_act_word(t, &[1, 2], &pi).unwrap().lweight;
    let b = braid_act_word(t, &[3], &a).unwrap().lweight;
    assert_eq!(braid_act_word(t, &[3, 1, 2], &pi).unwrap().lweight, b);
}

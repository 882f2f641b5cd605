use colored_eulerian::algebra::{scan_variants, structure_poly_eval, verify_closure};
use colored_eulerian::letter::parse_word;
use colored_eulerian::poset::{chain_poset, zigzag_poset};
use colored_eulerian::ppartition::{
    barred_chain_count, barred_chain_total, barred_zigzag_count, chain_bar_placements, count_ppartitions_bruteforce,
    omega_pi, omega_via_extensions,
};
use colored_eulerian::{
    ClassPartition, ColoredGroup, ColoredLetter, ColoredPermutation, ColoredPoset, Limits, QElement, Rational, Scalar,
    StructureConstants,
};
use num_bigint::BigUint;

fn l(v: u32, c: u32) -> ColoredLetter {
    ColoredLetter::new(v, c)
}

fn four_colored_poset() -> ColoredPoset {
    ColoredPoset::new(
        4,
        3,
        &[l(1, 0), l(2, 1), l(3, 1)],
        &[(l(0, 2), l(1, 0)), (l(1, 0), l(3, 1)), (l(3, 1), l(0, 3)), (l(2, 1), l(1, 0))],
    )
    .unwrap()
}

#[test]
fn four_colored_poset_extensions_and_count() {
    let lim = Limits::default();
    let p = four_colored_poset();
    let words: Vec<String> = p.linear_extensions(&lim).unwrap().iter().map(|w| {
        w.letters().iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
    }).collect();
    assert_eq!(words.len(), 3);
    assert!(words.contains(&"0_1 0_2 2_1 1_0 3_1 0_3".to_string()));
    let mut cl: Vec<String> = p.colored_linear_extensions(&lim).unwrap().iter().map(ToString::to_string).collect();
    cl.sort();
    assert_eq!(cl, ["1_2 2_0 3_3", "1_2 2_1 3_3", "1_2 3_3 2_0", "1_2 3_3 2_1", "2_0 1_2 3_3", "2_1 1_2 3_3", "2_3 1_2 3_3"]);
    let by_extensions: BigUint = p.colored_linear_extensions(&lim).unwrap().iter().map(|s| omega_pi(s, 1)).sum();
    assert_eq!(count_ppartitions_bruteforce(&p, 1, &lim).unwrap(), by_extensions);
}

#[test]
fn poset_json_round_trip() {
    let p = four_colored_poset();
    let text = serde_json::to_string(&p).unwrap();
    let back: ColoredPoset = serde_json::from_str(&text).unwrap();
    assert_eq!(back, p);
    let text = r#"{"r":4,"n":3,"elements":[[1,0],[2,1],[3,1]],"covers":[[[2,1],[1,0]],[[1,0],[3,1]],[[3,1],[0,3]]]}"#;
    let parsed: ColoredPoset = serde_json::from_str(text).unwrap();
    assert!(parsed.precedes(l(2, 1), l(0, 3)));
    let cyclic = r#"{"r":1,"n":2,"elements":[[1,0],[2,0]],"covers":[[[1,0],[2,0]],[[2,0],[1,0]]]}"#;
    assert!(serde_json::from_str::<ColoredPoset>(cyclic).is_err());
}

#[test]
fn worked_zigzag_example_counts() {
    let lim = Limits::default();
    let pi = ColoredPermutation::parse(3, "2_1 1_2 3_2").unwrap();
    let z = zigzag_poset(&[1], &pi).unwrap();
    let c = chain_poset(&[1], &pi).unwrap();
    assert_eq!(z.colored_linear_extensions(&lim).unwrap().len(), 8);
    assert_eq!(c.colored_linear_extensions(&lim).unwrap().len(), 9);
    let direct: BigUint = z
        .colored_linear_extensions(&lim)
        .unwrap()
        .iter()
        .map(|s| omega_pi(s, 1) * omega_pi(&s.inverse().compose(&pi).unwrap(), 1))
        .sum();
    assert_eq!(barred_zigzag_count(&[1], &pi, 1, 1, &lim).unwrap(), direct);
    assert_eq!(barred_zigzag_count(&[1, 2], &pi, 1, 1, &lim).unwrap(), BigUint::ZERO);
}

#[test]
fn six_barrings_of_two_letter_chain() {
    let pi = ColoredPermutation::parse(4, "2_1 1_3").unwrap();
    let subsets: [&[usize]; 4] = [&[], &[1], &[2], &[1, 2]];
    let total: usize = subsets.iter().map(|s| chain_bar_placements(s, 2, 2).len()).sum();
    assert_eq!(total, 6);
    let lim = Limits::default();
    for s in subsets {
        let brute = count_ppartitions_bruteforce(&chain_poset(s, &pi).unwrap(), 1, &lim).unwrap();
        let bars = chain_bar_placements(s, 2, 2).len();
        assert_eq!(barred_chain_count(s, &pi, 1, 2), brute * BigUint::from(bars));
    }
    assert_eq!(barred_chain_total(&pi, 1, 2).unwrap(), BigUint::from(66u32));
}

#[test]
fn singleton_and_antichain_order_polynomials() {
    let lim = Limits::default();
    for r in 1..=3u32 {
        let single = ColoredPoset::antichain(r, 1).unwrap();
        let anchors = ColoredPoset::new(r, 0, &[], &[]).unwrap();
        let union = anchors.disjoint_union(&single).unwrap();
        assert_eq!(union.colored_linear_extensions(&lim).unwrap().len(), r as usize);
        for j in 0..4 {
            assert_eq!(omega_via_extensions(&union, j, &lim).unwrap(), BigUint::from(r * j + 1));
        }
    }
    let two = ColoredPoset::antichain(2, 2).unwrap();
    assert_eq!(two.colored_linear_extensions(&lim).unwrap().len(), 8);
}

#[test]
fn anchored_word_parts() {
    let word = parse_word("0_1 0_2 2_1 1_0 3_1 0_3").unwrap();
    let w = colored_eulerian::AnchoredWord::new(4, word).unwrap();
    let parts = w.decompose();
    assert_eq!(parts[2], parse_word("2_3 1_2 3_3").unwrap());
    assert!(parts[0].is_empty() && parts[1].is_empty() && parts[3].is_empty());
}

#[test]
fn mr_and_des_closures() {
    let lim = Limits::default();
    for (r, n) in [(2, 2), (3, 2)] {
        let g = ColoredGroup::new(r, n, &lim).unwrap();
        for part in [ClassPartition::by_des(&g), ClassPartition::by_colored_composition(&g)] {
            let report = verify_closure(&g, &part, &lim).unwrap();
            assert!(report.passed, "{} on G({r},{n})", part.name());
            let constants = StructureConstants::from_report(&report).unwrap();
            assert!(constants.counts_consistent());
        }
    }
}

#[test]
fn structure_constants_json_uses_decimal_strings() {
    let lim = Limits::default();
    let g = ColoredGroup::new(1, 1, &lim).unwrap();
    let part = ClassPartition::by_des(&g);
    let constants = StructureConstants::from_representatives(&g, &part).unwrap();
    let json = serde_json::to_value(&constants).unwrap();
    assert_eq!(json["tensor"], serde_json::json!([[["1"]]]));
    let back: StructureConstants = serde_json::from_value(json).unwrap();
    assert_eq!(back, constants);
}

#[test]
fn variant_scan_on_g32_is_reported() {
    let lim = Limits::default();
    let g = ColoredGroup::new(3, 2, &lim).unwrap();
    let scan = scan_variants(&g, &lim).unwrap();
    assert_eq!(scan.outcomes.len(), 9);
    assert!(scan.outcomes.iter().any(|o| o.a == 0 && o.b == 1 && o.closure_passed));
}

#[test]
fn phi_degenerate_group() {
    let g = ColoredGroup::new(3, 0, &Limits::default()).unwrap();
    let phi = structure_poly_eval(&g, &Rational::from_ratio(7, 3));
    assert_eq!(phi, QElement::identity(3, 0));
}

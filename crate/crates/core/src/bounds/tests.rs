use super::*;
use crate::catalog::{chain, example, square_zero};
use proptest::prelude::*;
use std::collections::BTreeSet;

fn setup(name: &str) -> (Presentation, LocalAlgebra, DerivationSpace) {
    let p = example(name).unwrap();
    let a = LocalAlgebra::from_presentation(&p).unwrap();
    let d = DerivationSpace::new(&a);
    (p, a, d)
}

fn schulze_numbers(name: &str) -> (usize, u32, usize, bool) {
    let (p, a, _) = setup(name);
    let s = schulze_criterion(&p, a.nilpotency_index());
    (s.k, s.l, s.dim_i_mod_pi, s.hypothesis)
}

/// Coefficients of `prod_k (1 - x^k)^{-w(k)}` up to `x^max`.
fn product_series(max: usize, w: impl Fn(usize) -> usize) -> Vec<u64> {
    let mut c = vec![0u64; max + 1];
    c[0] = 1;
    for k in 1..=max {
        for _ in 0..w(k) {
            for i in k..=max {
                c[i] += c[i - k];
            }
        }
    }
    c
}

/// Order ideals by testing every `size`-subset of the monomials of degree `< size`.
fn brute_force_count(size: usize, nvars: usize) -> usize {
    let mut box_monomials = vec![vec![0u32; nvars]];
    for _ in 1..size {
        let grown: Vec<Vec<u32>> = box_monomials
            .iter()
            .flat_map(|m| {
                (0..nvars).map(move |i| {
                    let mut x = m.clone();
                    x[i] += 1;
                    x
                })
            })
            .collect();
        box_monomials.extend(grown);
        box_monomials.sort();
        box_monomials.dedup();
    }
    box_monomials.retain(|m| m.iter().sum::<u32>() < size as u32);
    let others: Vec<&Vec<u32>> = box_monomials.iter().filter(|m| m.iter().any(|&e| e > 0)).collect();
    let mut count = 0;
    for_each_subset(&others, size - 1, &mut Vec::new(), &mut |chosen| {
        let mut set: BTreeSet<Vec<u32>> = BTreeSet::from([vec![0; nvars]]);
        set.extend(chosen.iter().map(|m| (*m).clone()));
        let closed = set.iter().all(|m| {
            (0..nvars).all(|i| {
                m[i] == 0 || {
                    let mut d = m.clone();
                    d[i] -= 1;
                    set.contains(&d)
                }
            })
        });
        count += closed as usize;
    });
    count
}

fn for_each_subset<'a>(items: &[&'a Vec<u32>], k: usize, chosen: &mut Vec<&'a Vec<u32>>, f: &mut impl FnMut(&[&Vec<u32>])) {
    if k == 0 {
        f(chosen);
        return;
    }
    for i in 0..items.len() {
        if items.len() - i < k {
            break;
        }
        chosen.push(items[i]);
        for_each_subset(&items[i + 1..], k - 1, chosen, f);
        chosen.pop();
    }
}

fn orbit_count(size: usize, nvars: usize) -> usize {
    // Burnside over coordinate permutations of the raw ideals
    let raw: Vec<BTreeSet<Vec<u32>>> = enumerate_order_ideals(size, nvars)
        .into_iter()
        .filter(|s| s.len() == size)
        .map(|s| s.into_iter().collect())
        .collect();
    let perms: Vec<Vec<usize>> = match nvars {
        1 => vec![vec![0]],
        2 => vec![vec![0, 1], vec![1, 0]],
        3 => vec![vec![0, 1, 2], vec![0, 2, 1], vec![1, 0, 2], vec![1, 2, 0], vec![2, 0, 1], vec![2, 1, 0]],
        _ => unreachable!(),
    };
    let fixed: usize = perms
        .iter()
        .map(|p| {
            raw.iter()
                .filter(|s| {
                    let image: BTreeSet<Vec<u32>> = s.iter().map(|m| p.iter().map(|&j| m[j]).collect()).collect();
                    image == **s
                })
                .count()
        })
        .sum();
    fixed / perms.len()
}

#[test]
fn perepechko_examples() {
    let (_, a, d) = setup("example5");
    let r = check_perepechko(&a, &d);
    assert_eq!((r.lhs, r.rhs, r.holds), (7, 3, Some(true)));
    let (_, a, d) = setup("example1");
    let r = check_perepechko(&a, &d);
    assert_eq!((r.lhs, r.rhs), (9, 9));
    assert!(r.is_equality());
    let (_, a, d) = setup("example2");
    let r = check_perepechko(&a, &d);
    assert_eq!((r.lhs, r.rhs, r.holds), (3, 1, Some(true)));
}

#[test]
fn yau_examples() {
    let (_, a, d) = setup("example2");
    let r = check_yau(&a, &d);
    assert_eq!((r.lhs, r.rhs, r.holds), (3, 3, Some(true)));
    let (_, a, d) = setup("example3");
    let r = check_yau(&a, &d);
    assert_eq!(r.rhs, 5);
    assert_eq!(r.holds, Some(true));
    let (_, a, d) = setup("example4");
    let r = check_yau(&a, &d);
    assert!(!r.applicable);
    assert_eq!(r.holds, None);
    assert_eq!(r.note.as_deref(), Some("graded only"));
}

#[test]
fn schulze_examples() {
    assert_eq!(schulze_numbers("example4"), (2, 2, 2, true));
    assert_eq!(schulze_numbers("example5"), (3, 2, 5, false));
    assert_eq!(schulze_numbers("example2"), (1, 4, 1, true));
    assert_eq!(schulze_numbers("example3"), (2, 2, 2, true));
    assert_eq!(schulze_numbers("example1"), (3, 2, 6, false));
    let (p, a, _) = setup("example5");
    let b = schulze_criterion(&p, a.nilpotency_index()).bound_report();
    assert_eq!((b.lhs, b.rhs, b.holds), (5, 4, Some(false)));
    assert_eq!(b.note.as_deref(), Some("criterion precondition failed"));
}

#[test]
fn schulze_ignores_redundant_generators() {
    let p = Presentation::parse("vars t s\nrel t*s\nrel t^3 - s^2\nrel t^2*s\nrel s^3 + t*s").unwrap();
    let a = LocalAlgebra::from_presentation(&p).unwrap();
    let s = schulze_criterion(&p, a.nilpotency_index());
    assert_eq!((s.k, s.l, s.dim_i_mod_pi), (2, 2, 2));
}

#[test]
fn christophersen_examples() {
    let (_, a, d) = setup("example2");
    let c = christophersen_check(&a, &d);
    assert!(c.equality && c.is_chain && c.bound_holds);
    let (_, a, d) = setup("example1");
    let c = christophersen_check(&a, &d);
    assert_eq!((c.dim_der, c.n), (9, 4));
    assert!(c.bound_holds && !c.equality && !c.is_chain);
    let (_, a, d) = setup("example5");
    let c = christophersen_check(&a, &d);
    assert_eq!((c.dim_der, c.n, c.equality), (7, 5, false));
}

#[test]
fn chain_and_square_zero_bounds() {
    for n in 2..9 {
        let a = LocalAlgebra::from_presentation(&chain(n)).unwrap();
        let d = DerivationSpace::new(&a);
        let c = christophersen_check(&a, &d);
        assert!(c.equality && c.is_chain);
    }
    for k in 2..=4 {
        let a = LocalAlgebra::from_presentation(&square_zero(k)).unwrap();
        let d = DerivationSpace::new(&a);
        assert!(check_perepechko(&a, &d).is_equality());
    }
}

#[test]
fn small_staircases() {
    let three: Vec<String> = enumerate_staircases(3, 2).iter().filter(|s| s.dim() == 3).map(|s| s.to_string()).collect();
    assert_eq!(three, ["{1,t,t^2}", "{1,t,s}"]);
    assert_eq!(count_order_ideals(4, 2), 5);
    assert_eq!(enumerate_staircases(4, 2).iter().filter(|s| s.dim() == 4).count(), 3);
    let one = enumerate_staircases(1, 3);
    assert_eq!(one.len(), 1);
    assert_eq!(one[0].to_string(), "{1}");
    assert!(one[0].presentation().is_none());
    assert_eq!(enumerate_staircases(4, 2).iter().filter(|s| s.dim() > 1).count(), 6);
}

#[test]
fn staircase_presentations() {
    let s = Staircase::new(2, [vec![0, 0], vec![1, 0], vec![0, 1], vec![2, 0]]).unwrap();
    assert_eq!(s.to_string(), "{1,t,s,t^2}");
    assert_eq!(s.presentation().unwrap().to_text(), "vars t s\nrel t*s\nrel s^2\nrel t^3\n");
    let flipped = Staircase::new(2, [vec![0, 0], vec![1, 0], vec![0, 1], vec![0, 2]]).unwrap();
    assert_eq!(flipped, s);
    let a = LocalAlgebra::from_presentation(&s.presentation().unwrap()).unwrap();
    assert_eq!(a.dim(), 4);
    assert!(Staircase::new(2, [vec![0, 0], vec![2, 0]]).is_none());
    assert!(Staircase::new(1, [vec![1]]).is_none());
    let chain = Staircase::new(3, [vec![0, 0, 0], vec![0, 0, 1], vec![0, 0, 2]]).unwrap();
    assert!(chain.is_chain());
    assert_eq!(chain.nvars(), 1);
}

#[test]
fn order_ideal_counts_match_generating_functions() {
    let partitions = product_series(6, |_| 1);
    let plane = product_series(6, |k| k);
    assert_eq!(&partitions[1..], [1, 2, 3, 5, 7, 11]);
    assert_eq!(&plane[1..], [1, 3, 6, 13, 24, 48]);
    for size in 1..=6 {
        assert_eq!(count_order_ideals(size, 2) as u64, partitions[size]);
        assert_eq!(count_order_ideals(size, 3) as u64, plane[size]);
    }
}

#[test]
fn order_ideal_counts_match_brute_force() {
    for size in 1..=5 {
        assert_eq!(count_order_ideals(size, 2), brute_force_count(size, 2), "size {size}");
        assert_eq!(count_order_ideals(size, 3), brute_force_count(size, 3), "size {size}");
    }
}

#[test]
fn dedup_counts_match_burnside() {
    for vars in 1..=3 {
        let all = enumerate_staircases(6, vars);
        for size in 1..=6 {
            let got = all.iter().filter(|s| s.dim() == size).count();
            assert_eq!(got, orbit_count(size, vars), "size {size}, {vars} vars");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn staircase_algebras_have_the_staircase_dimension(index in 0usize..200) {
        let all = enumerate_staircases(6, 3);
        let s = &all[index % all.len()];
        prop_assume!(s.dim() > 1);
        let a = LocalAlgebra::from_presentation(&s.presentation().unwrap()).unwrap();
        prop_assert_eq!(a.dim(), s.dim());
        prop_assert_eq!(a.hilbert_samuel()[1], s.nvars());
        let d = DerivationSpace::new(&a);
        prop_assert_eq!(check_perepechko(&a, &d).holds, Some(true));
        prop_assert_eq!(check_yau(&a, &d).holds, Some(true));
        prop_assert!(christophersen_check(&a, &d).bound_holds);
        let reparsed = Staircase::new(s.nvars(), s.monomials().iter().rev().cloned()).unwrap();
        prop_assert_eq!(&reparsed, s);
    }
}

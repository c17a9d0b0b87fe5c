use std::sync::Arc;

use num_bigint::BigInt;
use proptest::prelude::*;

use properdiv::formulas::{betti_formula, binom};
use properdiv::poset::{dual, make_boolean_lattice, make_chain, make_proper_div_poset, proper_product};
use properdiv::shellability::{
    betti_via_fch, dual_lex_certificate, falling_chains, is_border, least_atom, search_rao, verify_rao,
};
use properdiv::{homology, order_complex, Multidegree, Poset};

fn md(v: &[u32]) -> Multidegree {
    Multidegree::new(v.to_vec()).unwrap()
}

fn pdiv(v: &[u32]) -> Poset {
    make_proper_div_poset(&md(v)).unwrap()
}

fn small_posets() -> Vec<(String, Poset)> {
    let mut out = Vec::new();
    for k in 0..=5 {
        out.push((format!("C{k}"), make_chain(k)));
    }
    for n in 0..=4 {
        out.push((format!("B{n}"), make_boolean_lattice(n).unwrap()));
    }
    for a in 0..=4u32 {
        for b in a..=6 {
            if a * b < 20 {
                out.push((format!("P({a},{b})"), pdiv(&[a, b])));
            }
        }
    }
    for v in [[1, 1, 1], [1, 2, 2], [1, 2, 3], [2, 2, 2]] {
        out.push((format!("P{v:?}"), pdiv(&v)));
    }
    for (i, j) in [(1, 1), (1, 2), (2, 2)] {
        let p = proper_product(&make_boolean_lattice(i).unwrap(), &make_boolean_lattice(j).unwrap()).unwrap();
        out.push((format!("B{i}×B{j}"), p));
    }
    let duals: Vec<(String, Poset)> = out.iter().map(|(n, p)| (format!("{n}*"), dual(p))).collect();
    out.extend(duals);
    out.retain(|(_, p)| p.len() <= 20);
    out
}

#[test]
fn found_certificates_verify() {
    let mut found = 0;
    for (name, p) in small_posets() {
        if let Some(cert) = search_rao(&p).unwrap() {
            assert!(verify_rao(&p, &cert).unwrap().is_valid(), "{name}");
            found += 1;
        }
    }
    assert!(found > 20);
}

#[test]
fn orderable_posets_are_torsion_free() {
    // a shellable complex has homology concentrated in free groups
    for (name, p) in small_posets() {
        if search_rao(&p).unwrap().is_some() {
            let h = homology(&order_complex(&p).unwrap(), true).unwrap();
            assert!(h.is_torsion_free(), "{name}");
        }
    }
}

#[test]
fn duality_asymmetry() {
    let p = pdiv(&[4, 4]);
    assert!(search_rao(&p).unwrap().is_none());
    assert!(search_rao(&dual(&p)).unwrap().is_some());
}

#[test]
fn tampered_certificates_are_rejected() {
    let (star, cert) = dual_lex_certificate(&md(&[4, 5])).unwrap();
    let mut swapped = cert.clone();
    swapped.ordering.swap(0, 1);
    swapped.children.swap(0, 1);
    assert!(!verify_rao(&star, &swapped).unwrap().is_valid());
    // reversing a child ordering breaks the atoms-first condition somewhere;
    // the first child has no earlier atoms, so any of its orderings may pass
    let mut rejected = 0;
    for j in 1..cert.children.len() {
        let Some(first) = cert.children[j].clone() else { continue };
        let mut child = (*first).clone();
        child.ordering.reverse();
        child.children.reverse();
        let mut wrong = cert.clone();
        wrong.children[j] = Some(Arc::new(child));
        if verify_rao(&star, &wrong).map_or(true, |v| !v.is_valid()) {
            rejected += 1;
        }
    }
    assert!(rejected > 0);
}

#[test]
fn dual_lex_certificates_up_to_total_twelve() {
    for a in 0..=12u32 {
        for b in 0..=12 - a {
            let (star, cert) = dual_lex_certificate(&md(&[a, b])).unwrap();
            assert!(verify_rao(&star, &cert).unwrap().is_valid(), "({a},{b})");
            for c in 0..=(12 - a - b).min(4) {
                let (star, cert) = dual_lex_certificate(&md(&[a, b, c])).unwrap();
                assert!(verify_rao(&star, &cert).unwrap().is_valid(), "({a},{b},{c})");
            }
        }
    }
}

#[test]
fn falling_chains_match_homology() {
    for a in 2..=8u32 {
        for b in a..=8 {
            let h = homology(&order_complex(&pdiv(&[a, b])).unwrap(), true).unwrap();
            let fch = betti_via_fch(a, b).unwrap();
            for (i, &count) in fch.iter().enumerate() {
                assert_eq!(count, h.betti(i), "({a},{b},{i})");
            }
            assert!(h.betti.iter().skip(fch.len()).all(|&x| x == 0));
        }
    }
}

#[test]
fn falling_chains_vanish_above_a() {
    for a in 2..=9u32 {
        for b in a..=9 {
            let chains = falling_chains(a, b, None).unwrap();
            assert!(chains.iter().all(|c| c.length() <= a as usize), "({a},{b})");
            for len in a as usize + 1..=a as usize + 3 {
                assert!(falling_chains(a, b, Some(len)).unwrap().is_empty());
            }
        }
    }
}

#[test]
fn falling_chain_structure() {
    for a in 2..=8u32 {
        for b in a..=8 {
            for c in falling_chains(a, b, None).unwrap() {
                let e = &c.elements;
                assert_eq!(e[0], md(&[a, b]));
                assert!(e.last().unwrap().is_zero());
                for w in e.windows(2) {
                    assert!(w[1].properly_divides(&w[0]));
                }
                for i in 0..e.len() - 2 {
                    assert_ne!(e[i + 1], least_atom(&e[i]).unwrap(), "{c:?}");
                }
                for x in &e[1..e.len() - 2] {
                    assert!(!is_border(x).unwrap(), "{c:?}");
                }
            }
        }
    }
}

#[test]
fn top_degree_counts() {
    for a in 2..=9i64 {
        for b in a..=9 {
            let chains = falling_chains(a as u32, b as u32, Some(a as usize)).unwrap();
            let want = BigInt::from(2) * binom(b - a, a - 2);
            assert_eq!(BigInt::from(chains.len()), want, "({a},{b})");
            assert_eq!(betti_formula(a, b, a - 2).unwrap(), want);
        }
    }
}

proptest! {
    #[test]
    fn least_atom_is_covered(v in proptest::collection::vec(0u32..6, 1..4)) {
        let m = md(&v);
        prop_assume!(!m.is_zero());
        let l = least_atom(&m).unwrap();
        prop_assert!(l.properly_divides(&m));
        let p = pdiv(&v);
        let (lo, hi) = (p.find_degree(&l).unwrap(), p.top().unwrap());
        prop_assert!(p.is_cover(lo, hi));
    }
}

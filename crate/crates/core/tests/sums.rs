use charsum::kloosterman::kloosterman_all;
use charsum::sums::{
    p_brute, p_brute_all, p_closed, q_brute_all, q_closed, qs_brute, qs_brute_all, qs_closed,
    qs_reduced, r_brute, r_closed,
};
use charsum::{FieldCtx, FiniteField, Gfm, Gfn, LinearizedPoly};
use proptest::prelude::*;

fn ctx(m: u32) -> FieldCtx {
    FieldCtx::new(m, None).unwrap()
}

/// Second representation: next irreducible modulus when one exists, and the
/// next trace-one ν.
fn alt_ctx(m: u32) -> FieldCtx {
    let poly = charsum::gf2poly::irreducibles(m).nth(1);
    let c = FieldCtx::new(m, poly).unwrap();
    let nu = c.elements().filter(|&v| c.trace(v) == 1).nth(1).unwrap();
    c.with_nu(nu.bits()).unwrap()
}

#[test]
fn p_matches_corrected_closed_form() {
    for m in 2..=6 {
        let c = ctx(m);
        let all = p_brute_all(&c).unwrap();
        for mu in c.elements().skip(1) {
            let v = all[mu.bits() as usize];
            assert_eq!(v, p_closed(&c, mu).unwrap(), "m={m} mu={mu:?}");
            assert_eq!(v.rem_euclid(16), 14);
            assert_eq!(v, all[c.square(mu).bits() as usize]);
        }
    }
    // m = 1 happens to satisfy the formula too: p(1) = 2.
    let c1 = ctx(1);
    assert_eq!(p_brute(&c1, Gfm::ONE), Ok(2));
    assert_eq!(p_closed(&c1, Gfm::ONE), Ok(2));
}

#[test]
fn p_congruence_up_to_m8() {
    for m in 2..=8 {
        for (i, k) in kloosterman_all(&ctx(m)).into_iter().enumerate().skip(1) {
            let p = (1 + k) * (1 + k) - 2;
            assert_eq!(p.rem_euclid(16), 14, "m={m} mu={i}");
        }
    }
}

#[test]
fn q_is_minus_q_times_chi() {
    for m in 2..=7 {
        let c = ctx(m);
        let all = q_brute_all(&c).unwrap();
        for mu in c.elements().skip(1) {
            let v = all[mu.bits() as usize];
            assert_eq!(-v / c.q(), c.chi(mu));
            assert_eq!(v, q_closed(&c, mu).unwrap());
        }
        assert_eq!(all[0], c.q() * (c.q() - 1));
    }
}

#[test]
fn qs_reduction_holds_for_every_shift() {
    for m in 2..=5 {
        let c = ctx(m);
        for s in 1..=3 {
            let all = qs_brute_all(&c, s).unwrap();
            for mu in c.elements() {
                assert_eq!(
                    all[mu.bits() as usize],
                    qs_reduced(&c, mu, s).unwrap(),
                    "m={m} s={s} mu={mu:?}"
                );
                assert_eq!(all[mu.bits() as usize], all[c.square(mu).bits() as usize]);
            }
        }
    }
}

#[test]
fn qs_closed_matches_sum_at_shift_one() {
    for m in [3, 5, 7] {
        let c = ctx(m);
        let all = qs_brute_all(&c, 1).unwrap();
        let mut minus_q = 0;
        for mu in c.elements().skip(1) {
            let closed = qs_closed(&c, mu, 1).unwrap();
            assert_eq!(all[mu.bits() as usize], closed, "m={m} mu={mu:?}");
            minus_q += (closed == -c.q()) as u32;
        }
        assert_eq!(minus_q, (1 << (m - 1)) - 1);
    }
}

/// `Σ_{a ∉ GF(2^m)} χ(μ (a^(2^s) + a)^(2^s) / (a^(2^m) + a))`, evaluated
/// without any reduction.
fn twisted_qs_brute(c: &FieldCtx, mu: Gfm, s: u32) -> i64 {
    let ext = c.ext();
    ext.elements()
        .filter(|a| !a.in_subfield())
        .map(|a| {
            let num = ext.frobenius(ext.add(ext.frobenius(a, s), a), s);
            let den = ext.add(ext.frobenius(a, c.m()), a);
            ext.chi(ext.scale(mu, ext.div(num, den).unwrap()))
        })
        .sum()
}

#[test]
fn qs_closed_evaluates_the_frobenius_twisted_sum() {
    for m in [3, 5] {
        let c = ctx(m);
        for s in (1..m).filter(|s| m % s != 0 || *s == 1) {
            let mut disagreements = 0;
            for mu in c.elements().skip(1) {
                let closed = qs_closed(&c, mu, s).unwrap();
                assert_eq!(closed, twisted_qs_brute(&c, mu, s), "m={m} s={s}");
                disagreements += (closed != qs_brute(&c, mu, s).unwrap()) as u32;
            }
            assert_eq!(disagreements == 0, s == 1, "m={m} s={s}");
        }
    }
}

#[test]
fn r_matches_for_all_single_terms() {
    for m in 2..=4 {
        let c = ctx(m);
        for a in 0..m {
            for alpha in c.elements().skip(1) {
                let l = LinearizedPoly::new(&c, vec![(a, alpha)]).unwrap();
                assert_eq!(r_brute(&c, &l).unwrap(), r_closed(&c, &l));
            }
        }
    }
}

fn poly_strategy() -> impl Strategy<Value = (u32, Vec<(u32, u64)>)> {
    (2u32..=5).prop_flat_map(|m| {
        let terms = prop::collection::btree_map(0..m, 1..(1u64 << m), 0..=m as usize)
            .prop_map(|t| t.into_iter().collect::<Vec<_>>());
        (Just(m), terms)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn r_matches_for_random_polynomials((m, terms) in poly_strategy()) {
        let c = ctx(m);
        let terms = terms.into_iter().map(|(a, al)| (a, c.elem(al).unwrap())).collect();
        let l = LinearizedPoly::new(&c, terms).unwrap();
        prop_assert_eq!(r_brute(&c, &l).unwrap(), r_closed(&c, &l));
    }
}

#[test]
fn sums_do_not_depend_on_the_representation() {
    for m in 2..=5 {
        let (c1, c2) = (ctx(m), alt_ctx(m));
        assert!(c1.irr_poly() != c2.irr_poly() || c1.nu() != c2.nu());
        // An isomorphism maps μ to some μ', so compare value multisets.
        let sorted = |mut v: Vec<i64>| {
            v.sort();
            v
        };
        assert_eq!(
            sorted(p_brute_all(&c1).unwrap()),
            sorted(p_brute_all(&c2).unwrap())
        );
        assert_eq!(
            sorted(q_brute_all(&c1).unwrap()),
            sorted(q_brute_all(&c2).unwrap())
        );
        assert_eq!(
            sorted(qs_brute_all(&c1, 2).unwrap()),
            sorted(qs_brute_all(&c2, 2).unwrap())
        );
    }
}

#[test]
fn theta_relation_survives_a_different_nu() {
    let c = alt_ctx(4);
    let ext = c.ext();
    assert_eq!(ext.square(Gfn::THETA), Gfn::new(c.nu(), Gfm::ONE));
    assert_eq!(ext.frobenius(Gfn::THETA, 4), Gfn::new(Gfm::ONE, Gfm::ONE));
}

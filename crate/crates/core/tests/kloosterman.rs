use charsum::kloosterman::{
    kloosterman_all, kloosterman_direct, kloosterman_lift_direct, kloosterman_lift_recursive,
    lw_expected, lw_value_set,
};
use charsum::{FieldCtx, FiniteField, Gfm};

fn ctx(m: u32) -> FieldCtx {
    FieldCtx::new(m, None).unwrap()
}

#[test]
fn depends_only_on_the_product() {
    for m in 1..=6 {
        let c = ctx(m);
        let table = kloosterman_all(&c);
        // k(0, 0) = 2^m - 1 is the one pair outside the identity
        assert_eq!(kloosterman_direct(&c, Gfm::ZERO, Gfm::ZERO), c.q() - 1);
        for a in c.elements() {
            for b in c.elements().filter(|b| !(a.is_zero() && b.is_zero())) {
                let ab = c.mul(a, b);
                let k = kloosterman_direct(&c, a, b);
                assert_eq!(k, table[ab.bits() as usize]);
                assert_eq!(k, kloosterman_direct(&c, Gfm::ONE, ab));
            }
        }
    }
}

#[test]
fn invariant_under_squaring() {
    for m in 1..=8 {
        let c = ctx(m);
        let table = kloosterman_all(&c);
        for a in c.elements() {
            assert_eq!(table[a.bits() as usize], table[c.square(a).bits() as usize]);
        }
    }
}

#[test]
fn congruence_and_weil_bound() {
    // Pairs exhaustively for small m; k(a, b) = k(ab) extends the b = 1
    // family to every pair beyond that.
    // m = 1 is degenerate: k_1(1) = 1.
    for m in 2..=10 {
        let c = ctx(m);
        let bound_sq = 1i64 << (m + 2);
        let check = |k: i64| {
            assert_eq!(k.rem_euclid(4), 3, "m={m} k={k}");
            assert!(k * k <= bound_sq, "m={m} k={k}");
        };
        if m <= 5 {
            for a in c.elements().skip(1) {
                for b in c.elements().skip(1) {
                    check(kloosterman_direct(&c, a, b));
                }
            }
        }
        kloosterman_all(&c).into_iter().skip(1).for_each(check);
    }
}

#[test]
fn lachaud_wolfmann_value_sets() {
    for m in 2..=10 {
        assert_eq!(lw_value_set(&ctx(m)), lw_expected(m), "m={m}");
    }
}

#[test]
fn lift_recursion_matches_enumeration_off_zero() {
    for m in 1..=6 {
        let c = ctx(m);
        for s in 1..=12 / m {
            for a in c.elements().skip(1) {
                assert_eq!(
                    kloosterman_lift_recursive(&c, a, s),
                    kloosterman_lift_direct(&c, a, s).unwrap(),
                    "m={m} s={s} a={a:?}"
                );
            }
        }
    }
}

#[test]
fn lift_at_zero_is_constant() {
    for m in 1..=4 {
        let c = ctx(m);
        for s in 1..=12 / m {
            assert_eq!(kloosterman_lift_direct(&c, Gfm::ZERO, s), Ok(-1));
        }
        // the recursion departs from the sum as soon as s = 2
        assert_eq!(kloosterman_lift_recursive(&c, Gfm::ZERO, 2), (2 << m) - 1);
    }
}

#[test]
fn lift_is_independent_of_the_base_modulus() {
    let c1 = FieldCtx::new(4, Some(0x13)).unwrap();
    let c2 = FieldCtx::new(4, Some(0x19)).unwrap();
    let mut v1: Vec<i64> = c1
        .elements()
        .map(|a| kloosterman_lift_direct(&c1, a, 2).unwrap())
        .collect();
    let mut v2: Vec<i64> = c2
        .elements()
        .map(|a| kloosterman_lift_direct(&c2, a, 2).unwrap())
        .collect();
    v1.sort();
    v2.sort();
    assert_eq!(v1, v2);
}

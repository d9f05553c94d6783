use hextree::enumerate::{count, count_ub_closed, generate, Family};
use hextree::exact::Rational;
use hextree::series::{fixed_point, solve_gf, trinomial, GfFamily, Series, Substitution, Var};
use num_bigint::BigInt;
use proptest::prelude::*;

fn small_series(var: Var, order: usize) -> impl Strategy<Value = Series> {
    prop::collection::vec(-6i64..=6, order + 1).prop_map(move |c| Series::from_ints(var, &c, order))
}

fn revertible(order: usize) -> impl Strategy<Value = Series> {
    (prop_oneof![-3i64..=-1, 1i64..=3], prop::collection::vec(-4i64..=4, order - 1)).prop_map(move |(lead, rest)| {
        let mut c = vec![0, lead];
        c.extend(rest);
        Series::from_ints(Var::Z, &c, order)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reversion_is_an_involution(f in revertible(9)) {
        let g = f.revert(9, Var::Z).unwrap();
        prop_assert_eq!(g.revert(9, Var::Z).unwrap(), f.clone());
        prop_assert_eq!(f.compose(&g).unwrap(), Series::variable(Var::Z, 9));
    }

    #[test]
    fn division_undoes_multiplication(a in small_series(Var::Z, 10), b0 in prop_oneof![-3i64..=-1, 1i64..=3], b in small_series(Var::Z, 10)) {
        let mut bc = b.into_coeffs();
        bc[0] = Rational::from(b0);
        let b = Series::new(Var::Z, bc, 10);
        let product = a.try_mul(&b).unwrap();
        prop_assert_eq!(product.try_div(&b).unwrap(), a);
    }

    #[test]
    fn lagrange_extraction_agrees_with_composition(h in small_series(Var::U, 12), a in 0u64..5) {
        let subst = Substitution::new(a);
        let composed = subst.to_z(&h).unwrap();
        for n in 0..=12 {
            prop_assert_eq!(subst.extract(&h, n), composed.coeff(n));
        }
    }

    #[test]
    fn variable_mismatch_is_reported(a in small_series(Var::Z, 4), b in small_series(Var::U, 4)) {
        prop_assert!(a.try_add(&b).is_err());
        prop_assert!(a.try_mul(&b).is_err());
    }
}

#[test]
fn fixed_point_iteration_agrees_with_quadratic_solver() {
    let families = [
        GfFamily::Binary,
        GfFamily::UnaryBinary(0),
        GfFamily::UnaryBinary(2),
        GfFamily::UnaryBinary(5),
        GfFamily::Hex,
        GfFamily::Marked,
        GfFamily::MultiEdge,
        GfFamily::Motzkin3,
    ];
    for family in families {
        let start = Series::zero(Var::Z, 25);
        let picard = fixed_point(start, |x| family.functional_map(x)).unwrap();
        assert_eq!(picard, solve_gf(family, 25), "{family}");
    }
}

fn binomial(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn catalan_and_motzkin_closed_forms() {
    let b = solve_gf(GfFamily::Binary, 30);
    for n in 0..=30u64 {
        let catalan = binomial(2 * n, n) / (n + 1);
        assert_eq!(b.coeff(n as usize), Rational::from(catalan));
    }
    // 3-Motzkin numbers: sum_k C(n, 2k) Cat(k) 3^(n-2k)
    let m = solve_gf(GfFamily::Motzkin3, 20);
    for n in 0..=20u64 {
        let direct: BigInt = (0..=n / 2)
            .map(|k| binomial(n, 2 * k) * (binomial(2 * k, k) / (k + 1)) * BigInt::from(3).pow((n - 2 * k) as u32))
            .sum();
        assert_eq!(m.coeff(n as usize), Rational::from(direct), "n={n}");
    }
}

#[test]
fn trinomial_rows_are_symmetric_and_sum_to_powers() {
    for n in 0..=20u64 {
        for a in 0..4u64 {
            let total: BigInt = (0..=2 * n as i64).map(|k| trinomial(n, a + 2, k)).sum();
            assert_eq!(total, BigInt::from(a + 4).pow(n as u32), "row sum n={n} a={a}");
            for k in 0..=2 * n as i64 {
                assert_eq!(trinomial(n, a + 2, k), trinomial(n, a + 2, 2 * n as i64 - k));
            }
        }
    }
}

#[test]
fn closed_count_matches_every_other_counter() {
    for a in 0..=4u32 {
        let series = solve_gf(GfFamily::UnaryBinary(a as u64), 40);
        for n in 1..=40 {
            let closed = count_ub_closed(n, a as u64);
            assert_eq!(Rational::from(closed.clone()), series.coeff(n), "a={a} n={n}");
            assert_eq!(closed, count(Family::Ub(a), n));
        }
    }
}

#[test]
fn hex_and_skew_counts_coincide_with_one_colour_trees() {
    for n in 0..=9 {
        let hex = generate(Family::Hex, n).count();
        let ub = generate(Family::Ub(1), n).count();
        assert_eq!(hex, ub, "n={n}");
        if n <= 7 {
            assert_eq!(generate(Family::SkewDyck, n).count(), hex, "n={n}");
        }
    }
}

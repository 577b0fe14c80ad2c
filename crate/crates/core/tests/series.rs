use domino_core::partition::Partition;
use domino_core::poly::{MultiParamPoly, Var};
use domino_core::series::*;
use domino_core::verify;

fn ones(config: SeriesConfig, monomials: &[&[u16]]) -> TruncatedSymSeries {
    monomials.iter().fold(TruncatedSymSeries::zero(config), |acc, m| {
        acc.add(&TruncatedSymSeries::monomial(config, m.to_vec(), MultiParamPoly::one())).unwrap()
    })
}

#[test]
fn small_products_by_hand() {
    let c = SeriesConfig::x_only(2, 1);
    let f = expand_product(
        &[Factor::plus(MultiParamPoly::one(), vec![1, 0]), Factor::plus(MultiParamPoly::one(), vec![0, 1])],
        c,
    )
    .unwrap();
    assert_eq!(f, ones(c, &[&[0, 0], &[1, 0], &[0, 1]]));

    let c = SeriesConfig::x_only(2, 2);
    let g = expand_product(
        &[
            Factor::minus(MultiParamPoly::one(), vec![1, 0]).inverted(),
            Factor::minus(MultiParamPoly::one(), vec![0, 1]).inverted(),
        ],
        c,
    )
    .unwrap();
    assert_eq!(g, ones(c, &[&[0, 0], &[1, 0], &[0, 1], &[2, 0], &[1, 1], &[0, 2]]));

    let c = SeriesConfig { x_vars: 1, y_vars: 1, max_degree: 6 };
    let h = expand_product(&[Factor::plus(MultiParamPoly::one(), vec![1, 1])], c).unwrap();
    assert_eq!(h, ones(c, &[&[0, 0], &[1, 1]]));
}

#[test]
fn one_variable_cauchy() {
    assert_eq!(cauchy_sum(0, 1, 2), cauchy_product(1, 2));
    assert_eq!(dual_cauchy_sum(0, 1, 2), dual_cauchy_product(1, 2));
    let one = cauchy_sum(0, 1, 0);
    assert_eq!(one, TruncatedSymSeries::one(one.config()));
}

#[test]
fn cauchy_identities_for_three_cores() {
    for r in 0..=2 {
        assert_eq!(cauchy_sum(r, 2, 3), cauchy_product(2, 3), "r={r}");
        assert_eq!(dual_cauchy_sum(r, 2, 3), dual_cauchy_product(2, 3), "r={r}");
    }
}

#[test]
fn generating_series_has_a_product_form() {
    let product = series_s_product(2, 4);
    for r in 0..=2 {
        let s = series_s(r, 2, 4);
        assert!(s.is_symmetric());
        assert_eq!(s, product, "r={r}");
    }
    assert_eq!(product.coefficient(&[0, 0]), MultiParamPoly::one());
}

#[test]
fn specialisations() {
    for report in verify::specializations(2, 4).into_iter().chain(verify::specializations(1, 3)) {
        assert!(report.pass, "{report:?}");
    }
    let c = SeriesConfig::x_only(1, 3);
    let square = expand_product(
        &[
            Factor::minus(MultiParamPoly::one(), vec![1]).inverted(),
            Factor::minus(MultiParamPoly::one(), vec![1]).inverted(),
        ],
        c,
    )
    .unwrap();
    assert_eq!(schur_sum_squared(1, 3), square);
    let at_one = |s: TruncatedSymSeries| s.specialize(&[(Var::B, 1), (Var::C, 1)]);
    assert_eq!(at_one(littlewood_sum(2, 3)), at_one(littlewood_product(2, 3)));
}

#[test]
fn h_functions_are_doubled_shapes() {
    let c = SeriesConfig::x_only(2, 3);
    let mu: Partition = "2,1".parse().unwrap();
    let h = g_function(&"4,2".parse().unwrap(), c);
    assert_eq!(h.specialize(&[(Var::S, 0)]), schur(&mu, c));
    assert!(h.is_symmetric());
}

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use tvcount_core::cycle_classes::{
    ambient_spec, beta_explicit_sum, beta_series_form, blowup_class_s, blowup_class_s_closed,
    gamma_multinomial, top_chern_class_t, top_chern_class_t_closed,
};
use tvcount_core::{beta_pushforward, gamma_class, validate, RingSpec};

#[test]
fn blowup_series_matches_closed_sum() {
    for r in 1..=20u32 {
        let spec = RingSpec::new(vec![r, r]).unwrap();
        assert_eq!(blowup_class_s(r, &spec).unwrap(), blowup_class_s_closed(r, &spec).unwrap(), "r={r}");
        assert_eq!(
            top_chern_class_t(r, &spec).unwrap(),
            top_chern_class_t_closed(r, &spec).unwrap(),
            "r={r}"
        );
        assert_eq!(top_chern_class_t(r, &spec).unwrap(), blowup_class_s(r + 1, &spec).unwrap());
    }
    // small caps truncate both sides the same way
    let spec = RingSpec::new(vec![2, 5]).unwrap();
    assert_eq!(blowup_class_s(6, &spec).unwrap(), blowup_class_s_closed(6, &spec).unwrap());
}

#[test]
fn beta_series_matches_explicit_sum() {
    for m in 1..=23u32 {
        for n in m..=24 - m {
            if m.gcd(&n) == 1 {
                assert_eq!(beta_series_form(m, n), beta_explicit_sum(m, n), "(m,n)=({m},{n})");
            }
        }
    }
}

#[test]
fn beta_is_effective_and_homogeneous() {
    for m in 1..=12u32 {
        for n in m..=12 {
            let Ok(beta) = beta_pushforward(m, n) else {
                assert!(m.gcd(&n) > 2);
                continue;
            };
            assert!(beta.is_homogeneous(u64::from(m + n - 2)));
            for (e, c) in beta.terms() {
                assert!(!c.is_negative(), "(m,n)=({m},{n}) at {e:?}");
            }
        }
    }
}

#[test]
fn gamma_paths_agree() {
    for d in 1..=24u64 {
        for a in 1..=d as u32 {
            for b in 1..=d as u32 {
                if d % u64::from(a) != 0 || d % u64::from(b) != 0 {
                    continue;
                }
                let (m, n) = ((d / u64::from(a)) as u32, (d / u64::from(b)) as u32);
                let Ok(p) = validate(m, n, a, b) else { continue };
                let gamma = gamma_class(&p);
                assert!(gamma.is_homogeneous(u64::from(p.m() + p.n())));
                assert_eq!(gamma, gamma_multinomial(&p), "{:?}", (m, n, a, b));
            }
        }
    }
}

#[test]
fn product_lands_in_top_degree() {
    let p = validate(3, 5, 5, 3).unwrap();
    let beta = beta_pushforward(3, 5).unwrap();
    let spec = ambient_spec(3, 5);
    let product = gamma_class(&p).mul(&beta).unwrap();
    assert!(product.is_homogeneous(spec.top_degree()));
    assert_eq!(product.integrate(), BigInt::from(29822));
}

#[test]
fn equal_degree_class_is_symmetric() {
    for m in 1..=2u32 {
        let beta = beta_pushforward(m, m).unwrap();
        assert_eq!(beta.permute_variables(&[1, 0, 2]).unwrap(), beta);
    }
}

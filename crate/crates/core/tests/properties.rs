use std::sync::OnceLock;

use proptest::prelude::*;

use m11::cm_points::{q_det, q_eval, q_qp_diag, transport, Form, FormSolution, OrderTag};
use m11::cyclotomic::klein_j_q;
use m11::nt::primes_in;
use m11::quartic_field::kappa;
use m11::reduction_lab::{count_points, newton_polygon, LPolynomial};
use m11::ring_f0::{lambda_admissible, legendre, reciprocity_pair, F0Elem, Q};
use m11::triangle_group::{eta_on_param_f64, geodesic_point, hyp_distance};

fn elem() -> impl Strategy<Value = F0Elem> {
    (-60i64..60, -60i64..60).prop_map(|(a, b)| F0Elem::from_ints(a, b))
}

fn small_elem() -> impl Strategy<Value = F0Elem> {
    (-8i64..8, -8i64..8).prop_map(|(a, b)| F0Elem::from_ints(a, b))
}

fn admissible_pool() -> &'static [F0Elem] {
    static POOL: OnceLock<Vec<F0Elem>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut out = Vec::new();
        for a in 1..60i64 {
            for b in -40..40i64 {
                let l = F0Elem::from_ints(a, b);
                if lambda_admissible(&l) {
                    out.push(l);
                }
            }
        }
        out
    })
}

fn rational() -> impl Strategy<Value = Q> {
    (-30i64..30, 1i64..12).prop_map(|(n, d)| Q::new(n.into(), d.into()))
}

fn solution(tag: OrderTag) -> impl Strategy<Value = FormSolution> {
    (small_elem(), small_elem()).prop_map(move |(x, y)| {
        let two = F0Elem::from(2);
        let (x0, d0) = match tag {
            OrderTag::MaximalOE => (F0Elem::zero(), F0Elem::u()),
            OrderTag::NonMaximal => (F0Elem::from_ints(1, 1), F0Elem::one()),
        };
        FormSolution::new(&x0 + &(&two * &x), &d0 + &(&two * &y)).expect("class gives −1 mod 4")
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn norm_is_multiplicative(x in elem(), y in elem()) {
        prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
        prop_assert_eq!((&x + &y).trace(), x.trace() + y.trace());
        prop_assert_eq!(x.tau().tau(), x);
    }

    #[test]
    fn legendre_is_multiplicative(i in 0usize..1000, a in elem(), b in elem()) {
        let pool = admissible_pool();
        let l = &pool[i % pool.len()];
        let lab = legendre(&(&a * &b), l).unwrap();
        prop_assert_eq!(lab, legendre(&a, l).unwrap() * legendre(&b, l).unwrap());
    }

    #[test]
    fn quadratic_reciprocity(i in 0usize..1000, beta in elem()) {
        let pool = admissible_pool();
        let l = &pool[i % pool.len()];
        prop_assume!(beta.is_totally_positive());
        prop_assume!(beta.norm().to_integer() % 2 != 0.into());
        let r = reciprocity_pair(l, &beta).unwrap();
        prop_assert!(r == 1 || r == 0);
    }

    #[test]
    fn j_is_invariant_under_anharmonic_group(t in rational()) {
        let one = Q::from_integer(1.into());
        prop_assume!(t != Q::from_integer(0.into()) && t != one);
        let j = klein_j_q(&t).unwrap();
        prop_assert_eq!(&klein_j_q(&(&one - &t)).unwrap(), &j);
        prop_assert_eq!(&klein_j_q(&t.recip()).unwrap(), &j);
        prop_assert_eq!(&klein_j_q(&(&t / &(&t - &one))).unwrap(), &j);
    }

    #[test]
    fn form_value_is_determinant(x in small_elem(), y in small_elem()) {
        for form in Form::all() {
            prop_assert_eq!(q_eval(form, &x, &y), q_det(form, &x, &y).unwrap());
        }
    }

    #[test]
    fn transport_preserves_value_and_flips_tag(
        s in prop_oneof![solution(OrderTag::MaximalOE), solution(OrderTag::NonMaximal)]
    ) {
        let t = transport(&s).unwrap();
        prop_assert_eq!(q_qp_diag(&t.x1, &t.d1), q_qp_diag(&s.x1, &s.d1));
        prop_assert_eq!(t.order_tag, s.order_tag.flip());
    }

    #[test]
    fn eta_is_an_isometry_of_the_geodesic(a in -0.99f64..0.99, b in -0.99f64..0.99) {
        let k = kappa();
        let (t1, t2) = (a * k, b * k);
        let (z1, z2) = (geodesic_point(t1).unwrap(), geodesic_point(t2).unwrap());
        let (e1, e2) = (eta_on_param_f64(t1).unwrap(), eta_on_param_f64(t2).unwrap());
        prop_assert!(e1.abs() < k && e2.abs() < k);
        let (w1, w2) = (geodesic_point(e1).unwrap(), geodesic_point(e2).unwrap());
        let d = hyp_distance(&z1, &z2);
        prop_assert!((hyp_distance(&w1, &w2) - d).abs() <= 1e-8 * (1.0 + d));
        prop_assert!((z1.z().norm() - z2.z().norm()).abs() < 1e-9 * z1.z().norm());
    }

    #[test]
    fn counts_are_trivial_when_q_is_not_one_mod_5(i in 0usize..1000, t in 2u64..400, k in 1u32..=4) {
        let primes: Vec<u64> = primes_in(3, 256).into_iter().filter(|&p| p % 5 != 1 && p != 5).collect();
        let p = primes[i % primes.len()];
        let q = p.pow(k);
        prop_assume!(q % 5 != 1 && t % p > 1);
        prop_assert_eq!(count_points(t, p, k).unwrap(), q + 1);
    }

    #[test]
    fn newton_polygons_are_symmetric(t in 2u64..50, i in 0usize..8) {
        let p = [3u64, 7, 11, 13, 19, 23, 29, 31][i];
        prop_assume!(t % p > 1);
        let counts = [1u32, 2, 3, 4].map(|k| count_points(t, p, k).unwrap());
        let l = LPolynomial::from_counts(p, &counts).unwrap();
        prop_assert!(newton_polygon(&l).check().is_ok());
    }
}

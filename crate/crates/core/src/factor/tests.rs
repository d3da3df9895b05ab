use super::*;
use crate::boolring::Instantiation;

fn opts() -> FactorOptions {
    FactorOptions::default()
}

fn odd_divisors_of_length(n: u64, len: usize) -> Vec<u64> {
    (1..=n)
        .filter(|d| d % 2 == 1 && n % d == 0 && (64 - d.leading_zeros()) as usize == len)
        .collect()
}

#[test]
fn parameters_examples() {
    assert_eq!(parameters(21), (5, 3, 3));
    assert_eq!(parameters(77), (7, 4, 4));
    assert_eq!(parameters(95), (7, 4, 4));
}

#[test]
fn bf_build_goldens() {
    assert_eq!(bf_build(21, 0).unwrap().e.to_string(), "x1");
    assert_eq!(bf_build(77, 0).unwrap().e.to_string(), "x1*x2+x1*x3");
    assert_eq!(bf_build(95, 0).unwrap().e.to_string(), "0");
    let inst = bf_build(95, 1).unwrap();
    assert_eq!(inst.e.to_string(), "x1*x2+x2");
    assert_eq!(inst.steps(), 5);
    assert_eq!(inst.x.to_string(), "…0, x2, x1, 1");
    assert_eq!(inst.leading, Some(2));
}

#[test]
fn bf_build_rejects_bad_input() {
    assert!(bf_build(20, 0).is_err());
    assert!(bf_build(21, 3).is_err());
    assert!(bf_build(1, 0).is_err());
}

#[test]
fn bf_factor_goldens() {
    let r = bf_factor(21, &opts()).unwrap();
    assert_eq!(
        r.factors,
        vec![FactorPair {
            divisor: 7,
            cofactor: 3
        }]
    );
    let r = bf_factor(77, &opts()).unwrap();
    assert_eq!(
        r.factors,
        vec![FactorPair {
            divisor: 11,
            cofactor: 7
        }]
    );
    let r = bf_factor(95, &opts()).unwrap();
    assert_eq!(
        r.factors,
        vec![FactorPair {
            divisor: 5,
            cofactor: 19
        }]
    );
    assert_eq!(r.stages.len(), 2);
    assert_eq!(r.stages[0].solutions, 0);
    assert_eq!(r.stages[1].level, 1);
    let r = bf_factor(9, &opts()).unwrap();
    assert_eq!(r.factor_set(), vec![(3, 3)]);
}

#[test]
fn worked_instances_need_little_search() {
    for (n, j) in [(21, 0), (77, 0), (95, 1)] {
        let inst = bf_build(n, j).unwrap();
        let out = crate::satsolve::solve_scarce(&inst.system(), inst.universe(), 1 << 20, true).unwrap();
        assert!(out.mu <= 1, "N={n}: mu={}", out.mu);
    }
}

#[test]
fn primes_and_powers_of_two() {
    for p in [3u64, 5, 7, 11, 13, 97, 257] {
        assert!(bf_factor(p, &opts()).unwrap().factors.is_empty(), "{p}");
    }
    let r = bf_factor(4, &opts()).unwrap();
    assert_eq!((r.two_power, r.odd_part), (2, 1));
    assert!(r.factors.is_empty());
    let r = bf_factor(42, &opts()).unwrap();
    assert_eq!((r.two_power, r.odd_part), (1, 21));
    assert_eq!(r.factor_set(), vec![(3, 7)]);
}

#[test]
fn include_trivial_reports_one() {
    let o = FactorOptions {
        include_trivial: true,
        ..opts()
    };
    let r = bf_factor(13, &o).unwrap();
    assert_eq!(
        r.factors,
        vec![FactorPair {
            divisor: 1,
            cofactor: 13
        }]
    );
    assert!(!r.trivial_excluded);
}

#[test]
fn enumerate_all_finds_every_level() {
    let o = FactorOptions {
        enumerate_all: true,
        ..opts()
    };
    // 105 = 3 * 5 * 7; divisors of length <= 4: 3, 5, 7, 15.
    let r = bf_factor(105, &o).unwrap();
    let mut ds: Vec<u64> = r.factors.iter().map(|p| p.divisor).collect();
    ds.sort_unstable();
    assert_eq!(ds, vec![3, 5, 7, 15]);
}

#[test]
fn levels_biject_with_divisors() {
    for n in (9u64..200).step_by(2) {
        let (_, beta, _) = parameters(n);
        for j in 0..beta {
            let inst = bf_build(n, j).unwrap();
            let out = crate::satsolve::solve_scarce(&inst.system(), inst.universe(), 1 << 20, true).unwrap();
            let mut found: Vec<u64> = out.solutions.iter().map(|p| candidate_value(p, beta - j)).collect();
            found.sort_unstable();
            assert_eq!(found, odd_divisors_of_length(n, beta - j), "N={n} j={j}");
            for phi in &out.solutions {
                let d = candidate_value(phi, beta - j);
                assert_eq!(inst.cofactor(phi), n / d);
            }
        }
    }
}

#[test]
fn verify_candidate_examples() {
    assert!(verify_candidate(209, 19));
    assert!(!verify_candidate(209, 21));
    assert!(verify_candidate(209, 1));
    assert!(!verify_candidate(209, 0));
}

#[test]
fn mbf_precompute_examples() {
    let r = mbf_precompute(1, 4).unwrap();
    assert_eq!(r, GenericInt::truncated_int(1, 4));
    let r = mbf_precompute(2, 4).unwrap();
    let phi = Instantiation::from_pairs(2, &[(1, true)]);
    assert_eq!(r.instantiate_mod(&phi).unwrap(), 11);
    let r = mbf_precompute(3, 8).unwrap();
    for phi in Instantiation::all(3) {
        let x = candidate_value(&phi, 3) as u128;
        assert_eq!(x * r.instantiate_mod(&phi).unwrap() % 256, 1);
    }
    assert!(mbf_precompute(3, 5).is_err());
}

#[test]
fn mbf_matches_bf() {
    let xinv = mbf_precompute(5, 2 * 10 + 2).unwrap();
    for n in [15u64, 21, 77, 95] {
        let m = mbf_factor(n, &xinv, &opts()).unwrap();
        let b = bf_factor(n, &opts()).unwrap();
        assert_eq!(m.factor_set(), b.factor_set(), "N={n}");
    }
    assert_eq!(mbf_factor(15, &xinv, &opts()).unwrap().factor_set(), vec![(3, 5)]);
    for n in (9u64..1023).step_by(2) {
        let m = mbf_factor(n, &xinv, &opts()).unwrap();
        let b = bf_factor(n, &opts()).unwrap();
        assert_eq!(m.factor_set(), b.factor_set(), "N={n}");
    }
}

#[test]
fn mbf_rejects_small_inverse() {
    let xinv = mbf_precompute(2, 8).unwrap();
    assert!(mbf_factor(77, &xinv, &opts()).is_err());
}

#[test]
fn report_serialises() {
    let r = bf_factor(21, &opts()).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    assert_eq!(v["method"], "bf");
    assert_eq!(v["factors"][0]["divisor"], 7);
    assert_eq!(v["stages"][0]["e"], "x1");
}

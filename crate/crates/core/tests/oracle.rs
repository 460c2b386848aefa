use akcong::partitions::{brute_force_a, gen_a, gen_p};
use num_bigint::BigUint;

#[test]
fn generating_function_matches_enumeration() {
    for k in 1..=6u64 {
        let exact: Vec<BigUint> = (0..=25).map(|n| brute_force_a(k, n).unwrap()).collect();
        for m in [3u32, 5, 7, 11] {
            let s = gen_a(k, m, 60).unwrap();
            for (n, v) in exact.iter().enumerate() {
                let want = (v % BigUint::from(m)).to_u32_digits().first().copied().unwrap_or(0);
                assert_eq!(s.coeff(n) as u32, want, "k={k} m={m} n={n}");
            }
        }
    }
}

#[test]
fn large_colors_against_oracle() {
    // The mod 3 pipeline works with k = 3 alpha + 2 up to 191.
    for k in [5u64, 11, 23, 29, 191] {
        let s = gen_a(k, 3, 61).unwrap();
        for n in 0..=60 {
            let v = brute_force_a(k, n).unwrap() % 3u32;
            assert_eq!(BigUint::from(s.coeff(n as usize)), v, "k={k} n={n}");
        }
    }
}

#[test]
fn a1_is_partition_function() {
    for m in [3, 5, 7, 11] {
        assert_eq!(gen_a(1, m, 1000).unwrap().series, gen_p(m, 1000).unwrap().series);
    }
}

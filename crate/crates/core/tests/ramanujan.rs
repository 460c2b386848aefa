use akcong::par::Exec;
use akcong::ramanujan::*;

#[test]
fn frobenius_powers_live_on_multiples() {
    for (e, m) in [(5i64, 5u32), (10, 5), (7, 7), (11, 11)] {
        let s = f2_over_f1_power(e, m, 5000).unwrap();
        let classes: Vec<u64> = dissection_support(&s, m as u64).classes.into_iter().collect();
        assert_eq!(classes, vec![0], "e={e} m={m}");
    }
}

#[test]
fn support_and_crt_step_at_default_precision() {
    assert!(verify_cube_support(SUPPORT_PRECISION).unwrap().passed());
    assert!(verify_crt_step(SUPPORT_PRECISION).unwrap().passed());
}

#[test]
fn a11_cases_sequential_and_parallel_agree() {
    let seq = verify_a11_all(1000, Exec::Sequential).unwrap();
    let par = verify_a11_all(1000, Exec::Parallel).unwrap();
    assert_eq!(seq.len(), 3);
    for (a, b) in seq.iter().zip(&par) {
        assert!(a.passed() && b.passed());
        assert_eq!(a.claim, b.claim);
    }
}

#[test]
fn neighbouring_residues_fail() {
    for (prime, residue) in [(5u32, 3u64), (7, 5), (11, 2)] {
        assert!(!verify_progression(11, prime, prime as u64, residue, 200).unwrap().passed());
    }
}

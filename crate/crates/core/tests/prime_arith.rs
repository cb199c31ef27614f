use critline::prime_arith::*;

/// Λ(n) by trial division.
fn lambda_brute(n: u64) -> f64 {
    if n < 2 {
        return 0.0;
    }
    let mut p = 2;
    while p * p <= n && n % p != 0 {
        p += 1;
    }
    if n % p != 0 {
        p = n;
    }
    let mut m = n;
    while m % p == 0 {
        m /= p;
    }
    if m == 1 {
        (p as f64).ln()
    } else {
        0.0
    }
}

#[test]
fn sieve_matches_trial_division() {
    let t = lambda_sieve(10_000).unwrap();
    for n in 1..=10_000 {
        assert_eq!(t.lambda(n), lambda_brute(n), "n = {n}");
    }
    let brute: f64 = (1..=10_000).map(lambda_brute).sum();
    assert!((t.psi(10_000) - brute).abs() < 1e-9);
}

#[test]
fn psi_is_close_to_x() {
    let t = lambda_sieve(1_000_000).unwrap();
    for x in [1e4, 1e5, 1e6] {
        let psi = t.psi(x as u64);
        assert!((psi - x).abs() < 2.0 * x.sqrt() * x.ln().powi(2), "psi({x}) = {psi}");
    }
}

#[test]
fn weighted_psi_is_near_two_root_x() {
    let t = lambda_sieve(1_000_000).unwrap();
    for x in [1e4f64, 1e5, 1e6] {
        let v = t.weighted_psi(x as u64);
        assert!((v / (2.0 * x.sqrt()) - 1.0).abs() < 0.02, "x = {x}: {v}");
        assert!((v - 2.0 * x.sqrt()).abs() <= 2.0 * x.ln().powi(3));
    }
}

#[test]
fn prime_powers_iterates_in_order() {
    let t = lambda_sieve(50).unwrap();
    let ns: Vec<u64> = t.prime_powers(30).map(|(n, _)| n).collect();
    assert_eq!(ns, [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29]);
    assert_eq!(t.prime_powers(1000).count(), t.prime_powers(50).count());
}

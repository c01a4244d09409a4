use std::collections::BTreeMap;

use num_bigint::BigInt;
use quartic_core::{builtin, builtin_families, match_h, Arity, Solution, Source};

/// Family h-polynomials written out by hand, independent of the registry.
fn h_formula(id: &str, p: i64, q: i64) -> i64 {
    match id {
        "F1" => p * p + 2,
        "F2" => p * (p * p + 4),
        "F3" => 8 * p * (p * p + 1),
        "F4" => p.pow(4) - 1,
        "F5" => 2 * p.pow(4) - 2,
        "F6" => p.pow(4) + 3 * p * p + 1,
        "FG" => 2 * p.pow(3) * (p * p - 1),
        "FP" => p * p - 3,
        "FT" => p.pow(4) + q.pow(4),
        "H1" => q * q * (p * p + 2 * q * q),
        "H2" => p * q * (p * p + 4 * q * q),
        "H3" => 8 * p * q * (p * p + q * q),
        "H4" => p.pow(4) - q.pow(4),
        "H5" => 2 * (p.pow(4) - q.pow(4)),
        "H6" => p.pow(4) + 3 * p * p * q * q + q.pow(4),
        _ => unreachable!(),
    }
}

#[test]
fn match_h_agrees_with_parameter_scan() {
    let mut oracle: BTreeMap<i64, Vec<(String, i64, i64)>> = BTreeMap::new();
    for f in builtin_families() {
        let qs = match f.arity {
            Arity::One => 1..=1,
            Arity::Two => 1..=50,
        };
        for q in qs {
            for p in -2000i64..=2000 {
                let h = h_formula(&f.id, p, q);
                if (1..=500).contains(&h) {
                    oracle.entry(h).or_default().push((f.id.clone(), p, q));
                }
            }
        }
    }
    for h in 1..=500i64 {
        let got: Vec<_> = match_h(&BigInt::from(h))
            .into_iter()
            .map(|m| {
                (
                    m.family,
                    i64::try_from(&m.p).unwrap(),
                    i64::try_from(&m.q).unwrap(),
                )
            })
            .collect();
        let mut want = oracle.remove(&h).unwrap_or_default();
        // oracle pushes in (family, q, p) order; match_h sorts by (family, p, q)
        want.sort_by_key(|(id, p, q)| {
            let pos = builtin_families().iter().position(|f| &f.id == id);
            (pos, *p, *q)
        });
        assert_eq!(got, want, "h = {h}");
    }
}

fn family_solutions() -> Vec<Solution> {
    let mut out = Vec::new();
    for f in builtin_families() {
        for p in 2..=8 {
            let q = if f.arity == Arity::Two { 1 + p % 3 } else { 1 };
            let s = f.instantiate_i64(p, q).unwrap();
            if s.h >= BigInt::from(1) && s.is_nontrivial() {
                out.push(s);
            }
        }
    }
    assert!(out.len() >= 100, "only {} samples", out.len());
    out.truncate(100);
    out
}

#[test]
fn scaling_preserves_solutions() {
    for s in family_solutions() {
        for t in 1..=5 {
            let t = BigInt::from(t);
            let scaled = Solution::new(s.h.clone(), s.quad().map(|x| x * &t), s.source.clone());
            assert!(scaled.satisfies(), "{s} scaled by {t}");
        }
    }
}

#[test]
fn canonicalize_is_idempotent_and_sound() {
    for s in family_solutions() {
        let c = s.canonicalize().unwrap();
        assert!(c.satisfies());
        assert!(c.a > c.c && c.d > c.b && c.c >= BigInt::from(0) && c.b >= BigInt::from(0));
        assert_eq!(c.canonicalize().unwrap(), c);
        // sign flips and side swap do not change the representative
        let flipped = Solution::new(
            s.h.clone(),
            [-&s.c, s.d.clone(), s.a.clone(), -&s.b],
            Source::Search,
        );
        assert_eq!(flipped.canonicalize().unwrap().quad(), c.quad());
    }
}

#[test]
fn worked_instances() {
    let f1 = builtin("F1").unwrap().instantiate_i64(-1, 1).unwrap();
    assert_eq!(f1.h, BigInt::from(3));
    let c = f1.canonicalize().unwrap();
    assert_eq!(c.quad().map(|x| x.clone()), [4, 1, 2, 3].map(BigInt::from));

    let f2 = builtin("F2").unwrap().instantiate_i64(1, 1).unwrap();
    assert_eq!(f2.h, BigInt::from(5));
    assert_eq!(
        f2.canonicalize().unwrap().quad().map(|x| x.clone()),
        [3, 0, 1, 2].map(BigInt::from)
    );
}

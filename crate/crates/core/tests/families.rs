use critfact::genstrings::{gen_adversarial, gen_fibonacci, gen_thue_morse, Family};
use critfact::oracle::{brute_leftmost_critical, brute_local_period, brute_run_end};
use critfact::{
    leftmost_critical_linear, leftmost_critical_linear_with_memo, leftmost_critical_nlogn, Algo,
    CriticalFactorization, SymString,
};

fn audit(label: &str, w: &SymString) {
    let truth = brute_leftmost_critical(w).unwrap();
    let (cf, _, memo) = leftmost_critical_linear_with_memo(w).unwrap();
    assert_eq!(cf, truth, "{label}");
    assert_eq!(leftmost_critical_nlogn(w).unwrap().0, truth, "{label}");
    for i in memo.known_positions() {
        let mu = brute_local_period(w, i).unwrap().mu;
        assert_eq!(memo.mu(i), Some(mu), "{label} m[{i}]");
        assert_eq!(
            memo.run_end(i),
            Some(brute_run_end(w, i, mu)),
            "{label} r[{i}]"
        );
    }
}

#[test]
fn memo_audit_on_structured_families() {
    for level in 0..=5 {
        audit(&format!("adversarial {level}"), &gen_adversarial(level));
    }
    for k in 3..=16 {
        audit(&format!("fibonacci {k}"), &gen_fibonacci(k).unwrap());
    }
    for k in 1..=10 {
        audit(&format!("thue-morse {k}"), &gen_thue_morse(k).unwrap());
    }
}

#[test]
fn adversarial_answer_sits_right_after_k() {
    for level in 0..=8 {
        let w = gen_adversarial(level);
        let (cf, st) = leftmost_critical_linear(&w).unwrap();
        assert_eq!(cf.period, w.len() - 1);
        assert!(cf.position >= st.k + 2);
    }
}

#[test]
fn nlogn_cost_grows_with_level() {
    let per_n: Vec<f64> = (3..=10)
        .map(|level| {
            let w = gen_adversarial(level);
            leftmost_critical_nlogn(&w).unwrap().1.mu_sum as f64 / w.len() as f64
        })
        .collect();
    assert!(per_n.windows(2).all(|p| p[1] > p[0]), "{per_n:?}");
}

#[test]
fn linear_cost_stays_flat() {
    for level in 3..=12 {
        let w = gen_adversarial(level);
        let (_, st) = leftmost_critical_linear(&w).unwrap();
        assert!(st.mu_sum <= w.len() as u64, "level {level}");
    }
}

#[test]
fn documented_examples() {
    let cases = [
        ("abaab", 3, 3),
        ("abbaabba", 4, 4),
        ("aaaa", 2, 1),
        ("ab", 2, 2),
        ("aab", 3, 3),
    ];
    for (text, pos, period) in cases {
        let w = SymString::from(text);
        for algo in Algo::ALL {
            let (cf, _) = algo.run(&w).unwrap();
            assert_eq!(
                cf,
                CriticalFactorization::new(pos, period, w.len()),
                "{algo} {text}"
            );
        }
    }
    let (cf, _) = Algo::Linear.run(&SymString::from("abaab")).unwrap();
    assert_eq!(
        cf.result_line(),
        "position=3 period=3 prefix_len=2 suffix_len=3"
    );
}

#[test]
fn family_specs_generate() {
    let cases = [
        Family::Adversarial { level: 2 },
        Family::Fibonacci { k: 10 },
        Family::ThueMorse { k: 6 },
        Family::Random {
            n: 100,
            sigma: 3,
            seed: 9,
        },
    ];
    for case in cases {
        let w = case.generate().unwrap();
        audit(&format!("{} {}", case.name(), case.param()), &w);
    }
}

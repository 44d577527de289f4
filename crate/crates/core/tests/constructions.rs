use ldimkit::bounds::{check_ind_freq_claim, conflict_graph, independent_set};
use ldimkit::singleton::{
    build_singleton_realizer, default_block_width, singleton_frequency_bound,
};
use ldimkit::{build_bn_realizer, verify_local_realizer, Poset};

#[test]
fn bn_realizers_up_to_ten() {
    for n in 1..=10 {
        let f = build_bn_realizer(n).unwrap();
        let report = verify_local_realizer(&Poset::boolean(n).unwrap(), &f).unwrap();
        assert!(report.accepted, "n = {n}");
        assert!(report.frequency <= (5 * n).div_ceil(7));
        if n >= 4 {
            assert!(report.frequency < n);
        }
    }
}

#[test]
fn singleton_realizers_default_width() {
    for n in 4..=11 {
        let d = default_block_width(n).unwrap();
        let f = build_singleton_realizer(n, None).unwrap();
        let report = verify_local_realizer(&Poset::singleton(n).unwrap(), &f).unwrap();
        assert!(report.accepted, "n = {n}");
        let (a, b) = singleton_frequency_bound(n, d);
        assert!(report.frequency <= a.max(b));
        let x = n as f64;
        assert!(report.frequency as f64 <= 2.0 * x / x.log2() + 3.0);
    }
}

#[test]
fn independent_sets_of_constructed_realizers() {
    for n in 3..=7 {
        for d in 1..=n {
            let f = build_singleton_realizer(n, Some(d)).unwrap();
            let g = conflict_graph(&f, n).unwrap();
            let mut best = independent_set(&g);
            assert!(g.is_independent(&best));
            best.truncate(n - 2);
            assert!(
                check_ind_freq_claim(n, &f, &best).unwrap(),
                "n = {n}, d = {d}"
            );
        }
    }
}

use std::collections::BTreeSet;

use perfover::factorize::f_total;
use perfover::overperfect::{
    count_pop, count_pop_total, enumerate_all_overpartitions, enumerate_perfect_overpartitions,
    is_perfect_overpartition, is_perfect_overpartition_by_size, pop_row,
};
use perfover::{Count, Overlines, Overpartition};

#[test]
fn exhaustive_filter_matches_binomial_sum_and_construction() {
    for n in 1..=31u64 {
        let filtered: BTreeSet<Overpartition> = enumerate_all_overpartitions(n)
            .filter(|o| is_perfect_overpartition(o).is_perfect())
            .collect();
        let built: BTreeSet<Overpartition> =
            enumerate_perfect_overpartitions(n, Overlines::All).collect();
        assert_eq!(filtered, built, "n = {n}");
        let row = pop_row(n);
        assert_eq!(Count::from(filtered.len()), row.total, "n = {n}");
        for r in 0..=6u32 {
            let by_r = filtered.iter().filter(|o| o.overlined_count() == r).count();
            assert_eq!(count_pop(n, r), Count::from(by_r), "n = {n}, r = {r}");
        }
    }
}

#[test]
fn construction_is_sound_up_to_200() {
    for n in 1..=200u64 {
        let mut total = 0u64;
        for op in enumerate_perfect_overpartitions(n, Overlines::All) {
            assert!(is_perfect_overpartition(&op).is_perfect(), "{op}");
            for g in op.groups().iter().filter(|g| g.overlined) {
                assert_eq!(g.multiplicity, 1, "overlined part must be alone: {op}");
            }
            total += 1;
        }
        assert_eq!(count_pop_total(n), total, "n = {n}");
    }
}

#[test]
fn even_weights_have_no_overlines() {
    for n in (2..=2000u64).step_by(2) {
        for r in 1..=4 {
            assert_eq!(count_pop(n, r), 0u32);
        }
        assert_eq!(count_pop_total(n), f_total(n + 1), "n = {n}");
    }
}

#[test]
fn first_summand_is_perfect_partition_count() {
    for n in 1..=3000u64 {
        assert_eq!(count_pop(n, 0), f_total(n + 1), "n = {n}");
    }
}

#[test]
fn size_criterion_agrees_with_per_weight_check() {
    for n in 1..=25u64 {
        for op in enumerate_all_overpartitions(n) {
            assert_eq!(
                is_perfect_overpartition(&op).is_perfect(),
                is_perfect_overpartition_by_size(&op),
                "{op}"
            );
        }
    }
}

#[test]
fn nonzero_exactly_up_to_two_adic_order() {
    for n in 1..=500u64 {
        let s = (n + 1).trailing_zeros();
        for r in 0..=s + 2 {
            assert_eq!(count_pop(n, r).is_zero(), r > s, "n = {n}, r = {r}");
        }
    }
}

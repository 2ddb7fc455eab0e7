use perfover::factorize::{enumerate_ordered_factorizations, f_nk, f_total};
use perfover::partition::partitions;
use perfover::perfect::{
    enumerate_perfect_partitions, factorization_to_perfect_partition, is_perfect_partition,
    perfect_partition_to_factorization,
};
use perfover::Count;

#[test]
fn round_trip_and_image_perfectness_up_to_1000() {
    for n in 2..=1000u64 {
        for of in enumerate_ordered_factorizations(n).unwrap() {
            let pp = factorization_to_perfect_partition(&of);
            assert_eq!(pp.weight(), n - 1);
            assert_eq!(pp.groups().len(), of.len());
            assert_eq!(perfect_partition_to_factorization(&pp).unwrap(), of);
            assert!(is_perfect_partition(&pp).is_perfect(), "{pp} from {of}");
        }
    }
}

#[test]
fn brute_force_finds_nothing_outside_the_image() {
    for n in 1..=20u64 {
        let mut found: Vec<_> = partitions(n)
            .filter(|p| is_perfect_partition(p).is_perfect())
            .collect();
        let mut images: Vec<_> = enumerate_perfect_partitions(n).collect();
        found.sort();
        images.sort();
        assert_eq!(found, images, "n = {n}");
    }
}

#[test]
fn counts_refine_by_blocks() {
    for n in 1..=999u64 {
        let mut by_blocks = [0u64; 12];
        let mut total = 0u64;
        for pp in enumerate_perfect_partitions(n) {
            by_blocks[pp.groups().len()] += 1;
            total += 1;
        }
        assert_eq!(f_total(n + 1), total, "n = {n}");
        if n >= 1 {
            for (k, &c) in by_blocks.iter().enumerate().skip(1) {
                assert_eq!(
                    f_nk(n + 1, k as u32).unwrap(),
                    Count::from(c),
                    "n = {n}, k = {k}"
                );
            }
        }
    }
}

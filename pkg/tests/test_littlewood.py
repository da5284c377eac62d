import random
from collections import Counter
from math import ceil, log

import pytest

from hookratio import (
    Partition,
    cells_with_exact_valuation,
    compose,
    core_tower,
    decompose,
    enumerate_partitions,
    hook_count_divisible,
    hook_multiset,
    is_p_core,
    p_core,
    parse_partition,
    quotient_tower,
    restricted_hooks,
    valuation_hook_product,
)

from conftest import oracle_factorize


class TestDecompose:
    def test_18_7_6_at_3(self):
        dec = decompose(Partition((18, 7, 6)), 3)
        assert dec.core == Partition((3, 1))
        assert dec.quotients == (Partition((2,)), Partition(), Partition((5, 2)))
        assert sum(dec.charges) == 0
        assert dec.core.size + 3 * dec.total_quotient_size() == 31

    def test_core_input_gives_trivial_quotients(self):
        lam = Partition((6, 4, 2))  # a 3-core
        dec = decompose(lam, 3)
        assert dec.core == lam
        assert all(q == Partition() for q in dec.quotients)

    def test_6_at_2(self):
        dec = decompose(Partition((6,)), 2)
        assert dec.quotients == (Partition(), Partition((3,)))
        assert dec.core == Partition()
        assert 6 == dec.core.size + 2 * dec.total_quotient_size()

    def test_empty(self):
        dec = decompose(Partition(), 5)
        assert dec.core == Partition()
        assert dec.quotients == (Partition(),) * 5

    def test_rejects_small_modulus(self):
        with pytest.raises(ValueError):
            decompose(Partition((3,)), 1)

    def test_charges_sum_to_zero(self, partitions_by_size):
        for n in range(11):
            for lam in partitions_by_size[n]:
                for p in (2, 3, 5):
                    assert sum(decompose(lam, p).charges) == 0


class TestCompose:
    def test_66_55_golden(self):
        lam = compose(Partition(), [parse_partition("6^5")] * 11, 11)
        assert lam == parse_partition("66^55")

    def test_core_with_empty_quotients(self):
        core = Partition((3, 1))
        assert compose(core, [Partition()] * 3, 3) == core

    def test_rejects_non_core(self):
        with pytest.raises(ValueError):
            compose(Partition((3,)), [Partition()] * 3, 3)

    def test_rejects_wrong_quotient_count(self):
        with pytest.raises(ValueError):
            compose(Partition(), [Partition()] * 2, 3)

    def test_roundtrip_decompose_then_compose(self, partitions_by_size):
        for n in range(10):
            for lam in partitions_by_size[n]:
                for p in (2, 3, 4, 5):
                    dec = decompose(lam, p)
                    assert compose(dec.core, dec.quotients, p) == lam

    def test_roundtrip_larger_random_shapes(self):
        rng = random.Random(31337)
        for _ in range(250):
            parts = sorted(
                (rng.randint(1, 14) for _ in range(rng.randint(0, 9))),
                reverse=True,
            )
            lam = Partition(parts)
            p = rng.randint(2, 9)
            dec = decompose(lam, p)
            assert compose(dec.core, dec.quotients, p) == lam
            assert lam.size == dec.core.size + p * dec.total_quotient_size()
            assert is_p_core(dec.core, p)
            union = Counter()
            for q in dec.quotients:
                union.update(hook_multiset(q))
            assert union == restricted_hooks(lam, p)

    def test_roundtrip_compose_then_decompose_exhaustive(self):
        # every (core, quotients) pair whose composition has size <= 12
        def quotient_tuples(slots, budget):
            if slots == 0:
                yield ()
                return
            for n in range(budget + 1):
                for head in enumerate_partitions(n):
                    for tail in quotient_tuples(slots - 1, budget - n):
                        yield (head,) + tail

        for p in (2, 3, 4, 5, 6):
            cores = [
                lam for n in range(13) for lam in enumerate_partitions(n)
                if is_p_core(lam, p)
            ]
            for core in cores:
                budget = (12 - core.size) // p
                for quotients in quotient_tuples(p, budget):
                    lam = compose(core, quotients, p)
                    dec = decompose(lam, p)
                    assert (dec.core, dec.quotients) == (core, quotients)


class TestPCore:
    def test_18_7_6(self):
        assert p_core(Partition((18, 7, 6)), 3) == Partition((3, 1))

    def test_idempotent_on_cores(self):
        assert p_core(Partition((3, 1)), 3) == Partition((3, 1))

    def test_5_2_at_3(self):
        assert p_core(Partition((5, 2)), 3) == Partition((1,))

    def test_matches_decompose_core(self, partitions_by_size):
        for n in range(11):
            for lam in partitions_by_size[n]:
                for p in (2, 3, 4, 5, 6):
                    assert p_core(lam, p) == decompose(lam, p).core

    def test_removal_order_does_not_matter(self, partitions_by_size):
        for seed in range(4):
            rng = random.Random(seed)
            for n in range(13):
                for lam in partitions_by_size[n]:
                    for p in (2, 3, 5):
                        assert p_core(lam, p, rng=rng) == p_core(lam, p)

    def test_result_is_a_core(self, partitions_by_size):
        for n in range(11):
            for lam in partitions_by_size[n]:
                for p in (2, 3, 4):
                    assert is_p_core(p_core(lam, p), p)


class TestIsPCore:
    def test_6_4_2_is_3_core(self):
        assert is_p_core(Partition((6, 4, 2)), 3)
        assert 8 in hook_multiset(Partition((6, 4, 2)))

    @pytest.mark.parametrize("p", [2, 3, 5, 7])
    def test_one_row_of_length_p(self, p):
        assert not is_p_core(Partition((p,)), p)

    def test_2_at_3(self):
        assert is_p_core(Partition((2,)), 3)

    def test_equivalent_to_divisibility(self, partitions_by_size):
        # no hook equal to p exactly iff no hook divisible by p
        for n in range(13):
            for lam in partitions_by_size[n]:
                for p in range(2, 9):
                    divisible = any(h % p == 0 for h in hook_multiset(lam))
                    assert is_p_core(lam, p) == (not divisible)


class TestTowers:
    def test_quotient_tower_18_7_6(self):
        tower = quotient_tower(Partition((18, 7, 6)), 3)
        assert tower.label(()) == Partition((18, 7, 6))
        assert tower.label((0,)) == Partition((2,))
        assert tower.label((1,)) == Partition()
        assert tower.label((2,)) == Partition((5, 2))
        assert tower.label((2, 1)) == Partition((2,))

    def test_core_tower_18_7_6(self):
        tower = core_tower(Partition((18, 7, 6)), 3)
        assert tower.label(()) == Partition((3, 1))
        assert tower.label((2,)) == Partition((1,))

    def test_core_tower_6_at_2(self):
        tower = core_tower(Partition((6,)), 2)
        assert tower.label(()) == Partition()
        nonempty = {w: tower.label(w) for w in tower.support()}
        assert nonempty == {(1,): Partition((1,)), (1, 0): Partition((1,))}

    def test_empty_partition(self):
        tower = quotient_tower(Partition(), 3)
        assert tower.support() == []
        assert tower.label((0, 1)) == Partition()

    def test_core_of_p_core_tower_is_root_only(self):
        tower = quotient_tower(Partition((3, 1)), 3)
        assert tower.support() == [()]

    def test_invalid_word_digit(self):
        tower = quotient_tower(Partition((4,)), 2)
        with pytest.raises(ValueError):
            tower.label((2,))

    def test_depth_bound(self, partitions_by_size):
        for n in range(1, 13):
            for lam in partitions_by_size[n]:
                for p in (2, 3, 5):
                    assert quotient_tower(lam, p).depth() <= ceil(
                        log(lam.size + 1, p)
                    ) + 1e-9

    def test_size_bookkeeping(self, partitions_by_size):
        # |lam| equals the p-power weighted sum of core tower label sizes
        for n in range(13):
            for lam in partitions_by_size[n]:
                for p in (2, 3, 5):
                    tower = core_tower(lam, p)
                    total = sum(
                        p ** len(w) * tower.label(w).size
                        for w in tower.support()
                    )
                    assert total == lam.size

    def test_serialization(self):
        # the core of the quotient label (2) is (2) itself, so the words 0
        # and 2.1 carry nonempty labels too
        tower = core_tower(Partition((18, 7, 6)), 3)
        assert tower.to_json_dict() == {"": "3,1", "0": "2", "2": "1", "2.1": "2"}
        qt = quotient_tower(Partition((18, 7, 6)), 3)
        assert qt.to_json_dict() == {
            "": "18,7,6", "0": "2", "2": "5,2", "2.1": "2",
        }


class TestHookCounts:
    def test_rectangle_goldens(self):
        lam = parse_partition("6^5")
        assert hook_count_divisible(lam, 1) == 30
        assert hook_count_divisible(lam, 2) == 15
        assert hook_count_divisible(lam, 3) == 10
        assert hook_count_divisible(lam, 5) == 6
        assert hook_count_divisible(lam, 30) == 0

    def test_count_at_one_is_size(self, partitions_by_size):
        for n in range(13):
            for lam in partitions_by_size[n]:
                assert hook_count_divisible(lam, 1) == lam.size

    def test_18_7_6_at_3(self):
        assert hook_count_divisible(Partition((18, 7, 6)), 3) == 9

    def test_quotient_count_identity(self, partitions_by_size):
        # count divisible by p*k equals the sum of k-counts over quotients
        for n in range(10):
            for lam in partitions_by_size[n]:
                for p in (2, 3, 4):
                    quotients = decompose(lam, p).quotients
                    for k in (1, 2, 3):
                        assert hook_count_divisible(lam, p * k) == sum(
                            hook_count_divisible(q, k) for q in quotients
                        )

    def test_multiset_union_identity(self, partitions_by_size):
        for n in range(10):
            for lam in partitions_by_size[n]:
                for p in (2, 3, 4, 5, 6):
                    union = Counter()
                    for q in decompose(lam, p).quotients:
                        union.update(hook_multiset(q))
                    assert union == restricted_hooks(lam, p)


class TestValuations:
    def test_factorial_6(self):
        assert valuation_hook_product(Partition((6,)), 2) == 4

    def test_core_has_zero_valuation(self):
        assert valuation_hook_product(Partition((2,)), 3) == 0

    def test_18_7_6_at_3(self):
        # hooks divisible by 3: nine of them; divisible by 9: just 18 and 9
        lam = Partition((18, 7, 6))
        assert hook_count_divisible(lam, 3) == 9
        assert hook_count_divisible(lam, 9) == 2
        assert valuation_hook_product(lam, 3) == 11

    def test_rejects_composite(self):
        with pytest.raises(ValueError):
            valuation_hook_product(Partition((6,)), 6)

    def test_against_factorization_oracle(self, partitions_by_size):
        for n in range(13):
            for lam in partitions_by_size[n]:
                factored = Counter()
                for h in hook_multiset(lam).elements():
                    factored.update(oracle_factorize(h))
                for p in (2, 3, 5, 7, 11):
                    assert valuation_hook_product(lam, p) == factored[p]

    def test_exact_valuation_cells(self):
        lam = Partition((6,))
        assert cells_with_exact_valuation(lam, 6, 1) == 1
        assert cells_with_exact_valuation(lam, 6, 2) == 0
        assert cells_with_exact_valuation(lam, 2, 2) == 1

    def test_exact_cells_sum_to_valuation(self, partitions_by_size):
        for n in range(11):
            for lam in partitions_by_size[n]:
                for p in (2, 3, 5):
                    total = sum(
                        d * cells_with_exact_valuation(lam, p, d)
                        for d in range(1, 6)
                    )
                    assert total == valuation_hook_product(lam, p)

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            cells_with_exact_valuation(Partition((2,)), 1, 1)
        with pytest.raises(ValueError):
            cells_with_exact_valuation(Partition((2,)), 2, 0)
        with pytest.raises(ValueError):
            hook_count_divisible(Partition((2,)), 0)

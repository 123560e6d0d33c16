import random

import pytest

from burnside import (
    AutResult,
    DiffSet,
    InputError,
    Perm,
    PrimeField,
    PropositionViolated,
    all_diff_sets,
    check_preserves,
    enumerate_diff_preserving,
    make_affine,
    mult_stabilizer,
    naive_enumerate,
    recognize_affine,
    scan_all_subsets,
)
from burnside.automorphisms import assert_all_affine

from conftest import all_perms, random_perm


def preserves_biconditional(perm, dset):
    """Slow oracle checking both directions of the difference condition."""
    p = perm.field.p
    for i in range(p):
        for j in range(p):
            if i == j:
                continue
            fwd = (i - j) % p in dset
            img = (perm(i) - perm(j)) % p in dset
            if fwd != img:
                return False
    return True


class TestCheckPreserves:
    def test_translation_preserves_everything(self):
        f = PrimeField(7)
        t = make_affine((1, 1), f)
        for dset in all_diff_sets(f):
            assert check_preserves(t, dset)

    def test_negation_breaks_asymmetric_set(self):
        f = PrimeField(5)
        assert not check_preserves(make_affine((4, 0), f), DiffSet(f, (1,)))

    def test_doubling_fixes_its_coset(self):
        f = PrimeField(7)
        assert check_preserves(make_affine((2, 0), f), DiffSet(f, (1, 2, 4)))

    def test_forward_check_equals_biconditional(self):
        # One direction suffices for permutations of a finite set.
        f = PrimeField(5)
        sets = list(all_diff_sets(f))
        for perm in all_perms(f):
            for dset in sets:
                assert check_preserves(perm, dset) == preserves_biconditional(perm, dset)


class TestMultStabilizer:
    def test_examples(self):
        assert mult_stabilizer(DiffSet(PrimeField(7), (1, 2, 4))) == (1, 2, 4)
        assert mult_stabilizer(DiffSet(PrimeField(5), (1,))) == (1,)
        assert mult_stabilizer(DiffSet(PrimeField(5), (1, 4))) == (1, 4)

    @pytest.mark.parametrize("p", [5, 7, 11])
    def test_is_multiplicative_subgroup(self, p):
        f = PrimeField(p)
        for dset in all_diff_sets(f):
            stab = set(mult_stabilizer(dset))
            assert 1 in stab
            for a in stab:
                assert pow(a, -1, p) in stab
                for b in stab:
                    assert a * b % p in stab


class TestEnumeration:
    def test_directed_cycle_has_only_rotations(self):
        f = PrimeField(5)
        result = enumerate_diff_preserving(f, DiffSet(f, (1,)))
        expected = tuple(
            sorted(make_affine((1, b), f).images for b in range(5))
        )
        assert tuple(q.images for q in result.automorphisms) == expected
        assert result.all_affine
        assert result.mult_stabilizer == (1,)

    def test_pentagon_has_dihedral_group(self):
        f = PrimeField(5)
        result = enumerate_diff_preserving(f, DiffSet(f, (1, 4)))
        assert len(result.automorphisms) == 10
        assert result.all_affine

    def test_paley_digraph_mod_7(self):
        f = PrimeField(7)
        result = enumerate_diff_preserving(f, DiffSet(f, (1, 2, 4)))
        assert len(result.automorphisms) == 21
        multipliers = {recognize_affine(q).a for q in result.automorphisms}
        assert multipliers == {1, 2, 4}

    def test_output_sorted_by_image_table(self):
        f = PrimeField(7)
        result = enumerate_diff_preserving(f, DiffSet(f, (1, 3)))
        tables = [q.images for q in result.automorphisms]
        assert tables == sorted(tables)

    @pytest.mark.parametrize("p", [5, 7])
    def test_closed_under_composition_and_inverse(self, p):
        f = PrimeField(p)
        for dset in all_diff_sets(f):
            auts = set(enumerate_diff_preserving(f, dset).automorphisms)
            for a in auts:
                assert a.inverse() in auts
            sample = sorted(auts, key=lambda q: q.images)[:5]
            for a in sample:
                for b in sample:
                    assert a * b in auts

    @pytest.mark.parametrize("p", [5, 7])
    def test_complement_symmetry(self, p):
        f = PrimeField(p)
        for dset in all_diff_sets(f):
            direct = enumerate_diff_preserving(f, dset)
            comp = enumerate_diff_preserving(f, dset.complement())
            assert direct.automorphisms == comp.automorphisms

    @pytest.mark.parametrize("p", [3, 5])
    def test_matches_naive_filter(self, p):
        f = PrimeField(p)
        for dset in all_diff_sets(f):
            fast = enumerate_diff_preserving(f, dset)
            slow = naive_enumerate(f, dset)
            assert fast.automorphisms == slow.automorphisms

    def test_matches_naive_filter_spot_p7(self):
        f = PrimeField(7)
        for elements in [(1,), (2, 3), (1, 2, 4), (3, 5, 6), (1, 6)]:
            dset = DiffSet(f, elements)
            assert (
                enumerate_diff_preserving(f, dset).automorphisms
                == naive_enumerate(f, dset).automorphisms
            )

    def test_naive_guard(self):
        f = PrimeField(11)
        with pytest.raises(InputError):
            naive_enumerate(f, DiffSet(f, (1,)))

    def test_naive_tiny_example(self):
        f = PrimeField(3)
        result = naive_enumerate(f, DiffSet(f, (1,)))
        assert len(result.automorphisms) == 3
        assert result.all_affine


class TestAffineAssertions:
    def test_count_law_small(self):
        for p in (3, 5, 7):
            f = PrimeField(p)
            for dset in all_diff_sets(f):
                result = enumerate_diff_preserving(f, dset)
                assert len(result.automorphisms) == p * len(result.mult_stabilizer)

    def test_nonaffine_member_raises(self):
        f = PrimeField(5)
        dset = DiffSet(f, (1,))
        fake = AutResult(
            diff_set=dset,
            automorphisms=(Perm(f, (0, 2, 1, 3, 4)),),
            mult_stabilizer=(1,),
            all_affine=False,
        )
        with pytest.raises(PropositionViolated) as exc:
            assert_all_affine(fake)
        assert exc.value.payload["permutation"] == [0, 2, 1, 3, 4]

    def test_wrong_count_raises(self):
        f = PrimeField(5)
        dset = DiffSet(f, (1,))
        fake = AutResult(
            diff_set=dset,
            automorphisms=(Perm.identity(f),),
            mult_stabilizer=(1,),
            all_affine=True,
        )
        with pytest.raises(PropositionViolated) as exc:
            assert_all_affine(fake)
        assert exc.value.payload["expected"] == 5


class TestScan:
    def test_p5_summary(self):
        rows = scan_all_subsets(PrimeField(5))
        assert len(rows) == 14
        assert all(r.all_affine for r in rows)
        assert rows[0].elements == (1,)
        assert [r.size for r in rows] == sorted(r.size for r in rows)
        for r in rows:
            assert r.automorphism_count == 5 * r.stabilizer_size

    def test_p3_counts(self):
        rows = scan_all_subsets(PrimeField(3))
        assert [(r.elements, r.automorphism_count) for r in rows] == [
            ((1,), 3),
            ((2,), 3),
        ]

    def test_prime_cap(self):
        with pytest.raises(InputError):
            scan_all_subsets(PrimeField(17))

    def test_jobs_guard(self):
        with pytest.raises(InputError):
            scan_all_subsets(PrimeField(5), jobs=0)

    def test_parallel_matches_sequential(self):
        sequential = scan_all_subsets(PrimeField(7), jobs=1)
        parallel = scan_all_subsets(PrimeField(7), jobs=2)
        assert sequential == parallel


class TestRandomizedCrossCheck:
    def test_random_perms_rarely_preserve_but_never_break_oracle(self):
        f = PrimeField(7)
        rng = random.Random(77)
        sets = list(all_diff_sets(f))
        for _ in range(300):
            perm = random_perm(f, rng)
            for dset in rng.sample(sets, 5):
                assert check_preserves(perm, dset) == preserves_biconditional(perm, dset)

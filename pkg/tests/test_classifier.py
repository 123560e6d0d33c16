import json
import random

import pytest

from burnside import (
    AffineCoeffs,
    Classification,
    DOUBLY_TRANSITIVE,
    GroupSpec,
    NOT_TRANSITIVE,
    Perm,
    PrimeField,
    SOLVABLE_AFFINE,
    classify,
    derived_series,
    enumerate_group,
    extract_difference_set,
    make_affine,
    verify_certificate,
)


def translation(field):
    return make_affine((1, 1), field)


def dihedral(field):
    return GroupSpec(field, (translation(field), make_affine((field.p - 1, 0), field)))


def symmetric(field):
    swap = list(range(field.p))
    swap[0], swap[1] = 1, 0
    return GroupSpec(field, (translation(field), Perm(field, tuple(swap))))


class TestClassify:
    def test_dihedral_witness(self):
        f = PrimeField(5)
        spec = dihedral(f)
        c = classify(spec)
        assert c.variant == SOLVABLE_AFFINE
        assert c.diff_set.elements == (1, 4)
        assert c.embedding == (AffineCoeffs(1, 1), AffineCoeffs(4, 0))
        assert c.group_order == 10
        # first order-5 element in enumeration order is the translation itself
        assert c.relabeling.is_identity

    def test_symmetric_group_detected(self):
        assert classify(symmetric(PrimeField(5))).variant == DOUBLY_TRANSITIVE

    def test_frobenius_21(self):
        f = PrimeField(7)
        spec = GroupSpec(f, (translation(f), make_affine((2, 0), f)))
        c = classify(spec)
        assert c.variant == SOLVABLE_AFFINE
        assert c.diff_set.elements == (1, 2, 4)
        assert c.group_order == 21

    def test_intransitive_group(self):
        f = PrimeField(5)
        c = classify(GroupSpec(f, (make_affine((2, 0), f),)))
        assert c.variant == NOT_TRANSITIVE
        assert c.diff_set is None

    def test_relabeling_applied_when_needed(self):
        # Generated by i -> i+2: the first order-p element is i -> i+2
        # itself, so the solvable witness relabels before embedding.
        f = PrimeField(5)
        spec = GroupSpec(f, (make_affine((1, 2), f),))
        c = classify(spec)
        assert c.variant == SOLVABLE_AFFINE
        assert c.diff_set.elements == (1,)
        assert not c.relabeling.is_identity
        assert verify_certificate(spec, c)

    def test_degree_two(self):
        f = PrimeField(2)
        spec = GroupSpec(f, (Perm(f, (1, 0)),))
        assert classify(spec).variant == DOUBLY_TRANSITIVE

    def test_deterministic(self):
        f = PrimeField(7)
        spec = GroupSpec(f, (translation(f), make_affine((2, 0), f)))
        first = json.dumps(classify(spec).to_payload())
        second = json.dumps(classify(spec).to_payload())
        assert first == second

    def test_solvable_order_arithmetic(self):
        for p in (5, 7, 11):
            f = PrimeField(p)
            c = classify(dihedral(f))
            assert c.group_order % p == 0
            assert (p * (p - 1)) % c.group_order == 0


class TestExtractDifferenceSet:
    def test_translation_only(self):
        f = PrimeField(5)
        spec = GroupSpec(f, (translation(f),))
        assert extract_difference_set(spec).elements == (1,)

    def test_dihedral(self):
        f = PrimeField(5)
        assert extract_difference_set(dihedral(f)).elements == (1, 4)

    def test_frobenius(self):
        f = PrimeField(7)
        spec = GroupSpec(f, (translation(f), make_affine((2, 0), f)))
        assert extract_difference_set(spec).elements == (1, 2, 4)


class TestVerifyCertificate:
    def test_valid_certificates(self):
        for p in (5, 7, 11):
            f = PrimeField(p)
            for spec in (dihedral(f), GroupSpec(f, (translation(f),))):
                c = classify(spec)
                assert verify_certificate(spec, c)

    def test_doubly_transitive_verdicts(self):
        f = PrimeField(5)
        good = symmetric(f)
        c = classify(good)
        assert verify_certificate(good, c)
        assert not verify_certificate(dihedral(f), c)

    def test_not_transitive_verdict(self):
        f = PrimeField(5)
        spec = GroupSpec(f, (make_affine((2, 0), f),))
        c = classify(spec)
        assert verify_certificate(spec, c)
        assert not verify_certificate(dihedral(f), c)

    def test_tampered_embedding_rejected(self):
        f = PrimeField(5)
        spec = dihedral(f)
        c = classify(spec)
        tampered = Classification(
            field=c.field,
            variant=c.variant,
            relabeling=c.relabeling,
            diff_set=c.diff_set,
            embedding=(c.embedding[0], AffineCoeffs(c.embedding[1].a, 1)),
            group_order=c.group_order,
        )
        assert not verify_certificate(spec, tampered)

    def test_tampered_diff_set_rejected(self):
        from burnside import DiffSet

        f = PrimeField(5)
        spec = dihedral(f)
        c = classify(spec)
        tampered = Classification(
            field=c.field,
            variant=c.variant,
            relabeling=c.relabeling,
            diff_set=DiffSet(f, (2,)),
            embedding=c.embedding,
            group_order=c.group_order,
        )
        assert not verify_certificate(spec, tampered)

    def test_tampered_order_rejected(self):
        f = PrimeField(5)
        spec = dihedral(f)
        c = classify(spec)
        tampered = Classification(
            field=c.field,
            variant=c.variant,
            relabeling=c.relabeling,
            diff_set=c.diff_set,
            embedding=c.embedding,
            group_order=20,
        )
        assert not verify_certificate(spec, tampered)

    def test_wrong_variant_rejected(self):
        f = PrimeField(5)
        spec = dihedral(f)
        assert not verify_certificate(spec, Classification(f, DOUBLY_TRANSITIVE))
        assert not verify_certificate(spec, Classification(f, NOT_TRANSITIVE))


class TestPayloadRoundTrip:
    def test_solvable(self):
        f = PrimeField(7)
        spec = GroupSpec(f, (translation(f), make_affine((3, 2), f)))
        c = classify(spec)
        restored = Classification.from_payload(json.loads(json.dumps(c.to_payload())))
        assert restored == c
        assert verify_certificate(spec, restored)

    def test_other_variants(self):
        f = PrimeField(5)
        for spec in (symmetric(f), GroupSpec(f, (make_affine((2, 0), f),))):
            c = classify(spec)
            assert Classification.from_payload(c.to_payload()) == c


class TestAffineSubgroupSweep:
    @pytest.mark.parametrize("p", [3, 5, 7, 11])
    def test_single_generator_subgroups(self, p):
        f = PrimeField(p)
        for a in range(1, p):
            for b in range(p):
                spec = GroupSpec(f, (make_affine((a, b), f),))
                c = classify(spec)
                assert verify_certificate(spec, c)
                if a == 1 and b != 0:
                    assert c.variant == SOLVABLE_AFFINE
                else:
                    assert c.variant == NOT_TRANSITIVE

    @pytest.mark.parametrize("p", [3, 5])
    def test_all_generator_pairs(self, p):
        # The full affine group is sharply doubly transitive, so pairs that
        # generate all of it are reported on the doubly transitive branch.
        f = PrimeField(p)
        coeffs = [(a, b) for a in range(1, p) for b in range(p)]
        for c1 in coeffs:
            for c2 in coeffs:
                spec = GroupSpec(f, (make_affine(c1, f), make_affine(c2, f)))
                c = classify(spec)
                assert verify_certificate(spec, c)
                if c.variant == SOLVABLE_AFFINE:
                    enum = enumerate_group(spec, p * (p - 1))
                    assert derived_series(enum)[-1] == 1

    @pytest.mark.parametrize("p", [7, 11])
    def test_sampled_generator_pairs(self, p):
        f = PrimeField(p)
        rng = random.Random(p)
        coeffs = [(a, b) for a in range(1, p) for b in range(p)]
        seen = set()
        for _ in range(60):
            spec = GroupSpec(
                f,
                (
                    make_affine(rng.choice(coeffs), f),
                    make_affine(rng.choice(coeffs), f),
                ),
            )
            c = classify(spec)
            seen.add(c.variant)
            assert verify_certificate(spec, c)
        assert SOLVABLE_AFFINE in seen

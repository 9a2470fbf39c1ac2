import itertools
import random

import pytest

from ulrichdp import lattice
from ulrichdp.lattice import (
    Divisor,
    P1XP1,
    P2,
    Surface,
    SurfaceMismatch,
    UnsupportedSurface,
    X3,
    X4,
    blow_up,
    canonical_class,
    chi,
    effectivity_suite,
    exceptional,
    intersect,
    is_globally_generated,
    is_very_ample,
    line,
    ulrich_dual_twist,
    zero_divisor,
)

SURFACES = (P2, P1XP1, X3, X4)


def ample_classes(surface, width):
    """All very ample classes with coefficients bounded by width."""
    out = []
    for a in range(1, width + 1):
        for rest in itertools.product(range(-width, 0), repeat=surface.picard_rank - 1):
            h = Divisor(surface, (a,) + rest)
            if is_very_ample(h):
                out.append(h)
    return out


class TestSurface:
    def test_picard_ranks(self):
        assert P2.picard_rank == 1
        assert P1XP1.picard_rank == 2
        assert X3.picard_rank == 4
        assert X4.picard_rank == 5
        assert blow_up(8).picard_rank == 9

    def test_unknown_name_rejected(self):
        with pytest.raises(UnsupportedSurface):
            Surface("x9")
        with pytest.raises(UnsupportedSurface):
            Surface("p3")


class TestDivisor:
    def test_parse_and_str(self):
        h = Divisor.parse(X3, "3,-1,-1,-1")
        assert h.coeffs == (3, -1, -1, -1)
        assert str(h) == "3,-1,-1,-1"

    def test_parse_malformed(self):
        with pytest.raises(ValueError):
            Divisor.parse(X3, "3,-1,x,-1")

    def test_length_checked(self):
        with pytest.raises(ValueError):
            Divisor(X3, (1, 2))

    def test_arithmetic(self):
        d1 = Divisor(X3, (3, -1, -1, -1))
        d2 = Divisor(X3, (1, 0, 0, 0))
        assert (d1 + d2).coeffs == (4, -1, -1, -1)
        assert (d1 - d2).coeffs == (2, -1, -1, -1)
        assert (-d1).coeffs == (-3, 1, 1, 1)
        assert (2 * d1).coeffs == (6, -2, -2, -2)

    def test_mixed_surfaces_rejected(self):
        with pytest.raises(SurfaceMismatch):
            Divisor(X3, (1, 0, 0, 0)) + Divisor(X4, (1, 0, 0, 0, 0))


class TestIntersect:
    def test_blowup_basis(self):
        assert intersect(line(X3), line(X3)) == 1
        assert intersect(exceptional(X3, 1), exceptional(X3, 2)) == 0
        assert intersect(exceptional(X3, 1), exceptional(X3, 1)) == -1

    def test_anticanonical_degree(self):
        h = Divisor(X3, (3, -1, -1, -1))
        assert intersect(h, h) == 6
        h4 = Divisor(X4, (3, -1, -1, -1, -1))
        assert intersect(h4, h4) == 5

    def test_quadric(self):
        f1 = Divisor(P1XP1, (1, 0))
        f2 = Divisor(P1XP1, (0, 1))
        assert intersect(f1, f2) == 1
        assert intersect(f1, f1) == 0
        assert intersect(f2, f2) == 0

    def test_symmetric_and_bilinear(self):
        rng = random.Random(7)
        for s in SURFACES:
            n = s.picard_rank
            for _ in range(50):
                d1 = Divisor(s, tuple(rng.randint(-5, 5) for _ in range(n)))
                d2 = Divisor(s, tuple(rng.randint(-5, 5) for _ in range(n)))
                d3 = Divisor(s, tuple(rng.randint(-5, 5) for _ in range(n)))
                k = rng.randint(-4, 4)
                assert intersect(d1, d2) == intersect(d2, d1)
                assert intersect(k * d1, d2) == k * intersect(d1, d2)
                assert intersect(d1 + d3, d2) == intersect(d1, d2) + intersect(d3, d2)

    def test_mismatch(self):
        with pytest.raises(SurfaceMismatch):
            intersect(line(X3), line(X4))


class TestCanonicalClass:
    def test_values(self):
        assert canonical_class(X3).coeffs == (-3, 1, 1, 1)
        assert canonical_class(X4).coeffs == (-3, 1, 1, 1, 1)
        assert canonical_class(P1XP1).coeffs == (-2, -2)
        assert canonical_class(P2).coeffs == (-3,)


class TestChi:
    def test_structure_sheaf(self):
        for s in SURFACES:
            assert chi(zero_divisor(s)) == 1

    def test_spot_values(self):
        assert chi(line(X3)) == 3
        assert chi(Divisor(X3, (3, -1, -1, -1))) == 7
        assert chi(Divisor(P2, (2,))) == 6
        assert chi(Divisor(P1XP1, (2, 3))) == 12

    @pytest.mark.parametrize("s,width", [(P2, 8), (P1XP1, 6), (X3, 4), (X4, 3)])
    def test_serre_shadow(self, s, width):
        # chi(D) = chi(K - D): both sides evaluate the same polynomial
        k = canonical_class(s)
        n = s.picard_rank
        for coeffs in itertools.product(range(-width, width + 1), repeat=n):
            d = Divisor(s, coeffs)
            assert chi(d) == chi(k - d)


class TestVeryAmple:
    def test_x3_examples(self):
        assert is_very_ample(Divisor(X3, (3, -1, -1, -1)))
        assert not is_very_ample(Divisor(X3, (1, -1, 0, 0)))
        assert not is_very_ample(Divisor(X3, (2, -1, -1, -1)))

    def test_x4_examples(self):
        assert is_very_ample(Divisor(X4, (3, -1, -1, -1, -1)))
        assert not is_very_ample(Divisor(X4, (2, -1, -1, -1, -1)))

    def test_p2_p1xp1(self):
        assert is_very_ample(Divisor(P2, (1,)))
        assert not is_very_ample(Divisor(P2, (0,)))
        assert is_very_ample(Divisor(P1XP1, (1, 1)))
        assert not is_very_ample(Divisor(P1XP1, (1, 0)))

    def test_alias(self):
        assert lattice.is_ample is is_very_ample

    def test_unsupported(self):
        with pytest.raises(UnsupportedSurface):
            is_very_ample(Divisor(blow_up(5), (3, -1, -1, -1, -1, -1)))


class TestGloballyGenerated:
    def test_examples(self):
        assert is_globally_generated(line(X3))
        assert is_globally_generated(Divisor(X3, (2, -1, -1, -1)))
        assert not is_globally_generated(Divisor(X3, (0, -1, 0, 0)))

    def test_unsupported(self):
        with pytest.raises(UnsupportedSurface):
            is_globally_generated(Divisor(P2, (1,)))

    @pytest.mark.parametrize("s", [X3, X4])
    def test_ample_scan(self, s):
        # every very ample class is globally generated with positive degree,
        # and the full effectivity suite holds
        for h in ample_classes(s, 8):
            assert is_globally_generated(h)
            assert intersect(h, h) > 0
            assert all(flag for _, flag in effectivity_suite(s, h))


class TestEffectivitySuite:
    def test_x3_anticanonical(self):
        results = effectivity_suite(X3, Divisor(X3, (3, -1, -1, -1)))
        assert len(results) == 5
        assert all(flag for _, flag in results)

    def test_x4_anticanonical(self):
        results = effectivity_suite(X4, Divisor(X4, (3, -1, -1, -1, -1)))
        assert len(results) == 6
        assert all(flag for _, flag in results)

    def test_rejects_non_ample(self):
        with pytest.raises(ValueError):
            effectivity_suite(X3, Divisor(X3, (2, -1, -1, 0)))


class TestDualTwist:
    def test_examples(self):
        assert ulrich_dual_twist(X3, Divisor(X3, (3, -1, -1, -1))).coeffs == (6, -2, -2, -2)
        for d in range(1, 5):
            assert ulrich_dual_twist(P2, Divisor(P2, (d,))).coeffs == (3 * d - 3,)
        for s in SURFACES:
            assert ulrich_dual_twist(s, zero_divisor(s)) == canonical_class(s)

import itertools
import random

import pytest

from ulrichdp.quiver import (
    CATALOG,
    DiagramType,
    K3,
    K32,
    K51,
    Quiver,
    RootClass,
    S4,
    catalog,
    classify_root,
    diagram_type,
    euler_form,
    euler_matrix,
    induced_subquiver,
    is_connected,
    is_hyperbolic,
    moduli_dim,
    symmetrized_matrix,
    tits,
)
from ulrichdp import oracle


def path_quiver(n):
    """A_n: a directed path on n vertices."""
    return Quiver(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_quiver(n):
    """Extended A_{n-1}: an n-cycle, oriented compatibly with the numbering."""
    return Quiver(n, tuple((i, i + 1) for i in range(n - 1)) + ((0, n - 1),))


def d_quiver(n):
    """D_n: two prongs into vertex 2, then a path."""
    return Quiver(n, ((0, 2), (1, 2)) + tuple((i, i + 1) for i in range(2, n - 1)))


def d_ext_quiver(n):
    """Extended D_n on n+1 vertices: prongs at both ends."""
    tail = n - 2
    arrows = ((0, 2), (1, 2)) + tuple((i, i + 1) for i in range(2, tail)) + (
        (tail, tail + 1),
        (tail, tail + 2),
    )
    return Quiver(n + 1, arrows)


E6 = Quiver(6, ((0, 1), (1, 2), (2, 3), (3, 4), (2, 5)))
E7 = Quiver(7, ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)))
E8 = Quiver(8, ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7)))
E6_EXT = Quiver(7, ((0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)))
E7_EXT = Quiver(8, ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (3, 7)))
KRONECKER2 = Quiver(2, ((0, 1), (0, 1)))


class TestQuiverType:
    def test_catalog_shapes(self):
        assert (K3.vertices, len(K3.arrows)) == (2, 3)
        assert (S4.vertices, len(S4.arrows)) == (3, 4)
        assert (K32.vertices, len(K32.arrows)) == (5, 6)
        assert (K51.vertices, len(K51.arrows)) == (6, 5)
        assert set(CATALOG) == {"k3", "s4", "k32", "k51"}
        assert catalog("k32") is K32
        with pytest.raises(ValueError):
            catalog("k4")

    def test_canonical_numbering_enforced(self):
        with pytest.raises(ValueError):
            Quiver(3, ((2, 1),))
        with pytest.raises(ValueError):
            Quiver(2, ((0, 0),))
        with pytest.raises(ValueError):
            Quiver(2, ((0, 2),))

    def test_from_json_obj(self):
        q = Quiver.from_json_obj({"vertices": 3, "arrows": [[0, 1], [1, 2]]})
        assert q.vertices == 3 and q.arrows == ((0, 1), (1, 2))
        with pytest.raises(ValueError):
            Quiver.from_json_obj({"vertices": 3})


CLOSED_FORMS = {
    "k3": lambda a, b: a[0] * b[0] + a[1] * b[1] - 3 * a[0] * b[1],
    "s4": lambda a, b: a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
    - 2 * a[0] * b[1] - 2 * a[0] * b[2],
    "k32": lambda a, b: sum(a[i] * b[i] for i in range(5))
    - (a[0] + a[1] + a[2]) * (b[3] + b[4]),
    "k51": lambda a, b: sum(a[i] * b[i] for i in range(6))
    - (a[0] + a[1] + a[2] + a[3] + a[4]) * b[5],
}


class TestEulerForm:
    def test_examples(self):
        assert euler_form(K3, (1, 0), (0, 1)) == -3
        assert euler_form(K3, (0, 1), (1, 0)) == 0
        assert euler_form(S4, (1, 1, 1), (1, 1, 1)) == -1

    def test_unit_vectors(self):
        for q in CATALOG.values():
            for i in range(q.vertices):
                e = tuple(int(j == i) for j in range(q.vertices))
                assert euler_form(q, e, e) == 1

    @pytest.mark.parametrize("name", ["k3", "s4"])
    def test_closed_form_exhaustive(self, name):
        q = catalog(name)
        grid = list(itertools.product(range(-3, 4), repeat=q.vertices))
        closed = CLOSED_FORMS[name]
        for a in grid:
            for b in grid:
                assert euler_form(q, a, b) == closed(a, b)

    @pytest.mark.parametrize("name", ["k32", "k51"])
    def test_closed_form_big_quivers(self, name):
        q = catalog(name)
        closed = CLOSED_FORMS[name]
        for d in itertools.product(range(-3, 4), repeat=q.vertices):
            assert euler_form(q, d, d) == closed(d, d)
        rng = random.Random(11)
        for _ in range(2000):
            a = tuple(rng.randint(-3, 3) for _ in range(q.vertices))
            b = tuple(rng.randint(-3, 3) for _ in range(q.vertices))
            assert euler_form(q, a, b) == closed(a, b)

    def test_bilinearity(self):
        rng = random.Random(3)
        for q in CATALOG.values():
            n = q.vertices
            for _ in range(100):
                a = tuple(rng.randint(-6, 6) for _ in range(n))
                a2 = tuple(rng.randint(-6, 6) for _ in range(n))
                b = tuple(rng.randint(-6, 6) for _ in range(n))
                lhs = euler_form(q, tuple(x + y for x, y in zip(a, a2)), b)
                assert lhs == euler_form(q, a, b) + euler_form(q, a2, b)
                rhs = euler_form(q, a, tuple(x + y for x, y in zip(b, a2)))
                assert rhs == euler_form(q, a, b) + euler_form(q, a, a2)

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            euler_form(K3, (1, 0, 0), (0, 1))

    def test_matrix_representation(self):
        rng = random.Random(5)
        for q in CATALOG.values():
            m = euler_matrix(q)
            n = q.vertices
            for _ in range(30):
                a = [rng.randint(-4, 4) for _ in range(n)]
                b = [rng.randint(-4, 4) for _ in range(n)]
                via_matrix = sum(a[i] * m[i][j] * b[j] for i in range(n) for j in range(n))
                assert via_matrix == euler_form(q, a, b)


class TestTits:
    def test_examples(self):
        assert tits(K3, (1, 3)) == 1
        assert tits(K3, (1, 1)) == -1
        assert tits(K32, (1, 1, 1, 1, 1)) == -1

    def test_scaling(self):
        rng = random.Random(13)
        for q in CATALOG.values():
            for _ in range(50):
                d = tuple(rng.randint(-5, 5) for _ in range(q.vertices))
                n = rng.randint(-4, 4)
                assert tits(q, tuple(n * x for x in d)) == n * n * tits(q, d)


class TestRootClass:
    def test_examples(self):
        assert classify_root(K3, (1, 1)) is RootClass.IMAGINARY
        assert classify_root(K3, (1, 3)) is RootClass.RIGID
        assert classify_root(K3, (0, 0)) is RootClass.ZERO
        assert classify_root(K3, (1, -1)) is RootClass.NON_ROOT
        assert classify_root(K3, (2, 0)) is RootClass.NON_ROOT
        assert classify_root(K32, (1, 1, 2, 1, 1)) is RootClass.ISOTROPIC

    def test_matches_tits_on_positive_vectors(self):
        rng = random.Random(17)
        for q in CATALOG.values():
            for _ in range(200):
                d = tuple(rng.randint(0, 5) for _ in range(q.vertices))
                cls = classify_root(q, d)
                if all(x == 0 for x in d):
                    assert cls is RootClass.ZERO
                else:
                    value = tits(q, d)
                    expected = {1: RootClass.RIGID, 0: RootClass.ISOTROPIC}.get(
                        value, RootClass.IMAGINARY if value < 0 else RootClass.NON_ROOT
                    )
                    assert cls is expected


class TestDiagramType:
    def test_base_cases(self):
        assert diagram_type(path_quiver(2)) is DiagramType.FINITE
        assert diagram_type(KRONECKER2) is DiagramType.AFFINE
        assert diagram_type(K3) is DiagramType.INDEFINITE

    def test_kronecker2_matrix(self):
        assert symmetrized_matrix(KRONECKER2) == [[2, -2], [-2, 2]]
        assert oracle.nullspace(symmetrized_matrix(KRONECKER2)) == [(1, 1)]

    @pytest.mark.parametrize("n", range(1, 9))
    def test_a_series_finite(self, n):
        assert diagram_type(path_quiver(n)) is DiagramType.FINITE
        assert not is_hyperbolic(path_quiver(n)) if n > 1 else True

    @pytest.mark.parametrize("q", [d_quiver(n) for n in range(4, 9)] + [E6, E7, E8])
    def test_de_series_finite(self, q):
        assert diagram_type(q) is DiagramType.FINITE

    @pytest.mark.parametrize(
        "q",
        [cycle_quiver(n) for n in range(2, 9)]
        + [d_ext_quiver(n) for n in range(4, 8)]
        + [E6_EXT, E7_EXT],
    )
    def test_extended_series_affine(self, q):
        assert diagram_type(q) is DiagramType.AFFINE

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError):
            diagram_type(Quiver(3, ((0, 1),)))

    def test_connectivity(self):
        assert is_connected(K32)
        assert not is_connected(Quiver(3, ((1, 2),)))
        assert is_connected(Quiver(1, ()))


def multiplicity_quivers(n, max_arrows):
    """All quivers on n vertices with up to max_arrows parallel arrows."""
    slots = list(itertools.combinations(range(n), 2))
    for counts in itertools.product(range(max_arrows + 1), repeat=len(slots)):
        arrows = []
        for (s, t), m in zip(slots, counts):
            arrows.extend([(s, t)] * m)
        yield Quiver(n, tuple(arrows))


def type_from_charpoly(q):
    kind = oracle.definiteness_by_charpoly(symmetrized_matrix(q))
    if kind is oracle.Definiteness.POSITIVE_DEFINITE:
        return DiagramType.FINITE
    if kind is oracle.Definiteness.POSITIVE_SEMIDEFINITE:
        # connected diagrams have at most a one-dimensional radical
        return DiagramType.AFFINE
    return DiagramType.INDEFINITE


class TestDiagramTypeAgainstCharpolyOracle:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_exhaustive_small(self, n):
        for q in multiplicity_quivers(n, 4):
            if is_connected(q):
                assert diagram_type(q) is type_from_charpoly(q)

    def test_sampled_five_vertices(self):
        rng = random.Random(23)
        slots = list(itertools.combinations(range(5), 2))
        checked = 0
        while checked < 400:
            arrows = []
            for s, t in slots:
                arrows.extend([(s, t)] * rng.randint(0, 4))
            q = Quiver(5, tuple(arrows))
            if not is_connected(q):
                continue
            assert diagram_type(q) is type_from_charpoly(q)
            checked += 1


class TestHyperbolicity:
    def test_catalog_hyperbolic(self):
        for q in CATALOG.values():
            assert is_hyperbolic(q)

    @pytest.mark.parametrize(
        "q",
        [path_quiver(n) for n in range(2, 9)]
        + [d_quiver(n) for n in range(4, 9)]
        + [E6, E7, E8]
        + [cycle_quiver(n) for n in range(2, 9)]
        + [d_ext_quiver(n) for n in range(4, 8)]
        + [E6_EXT, E7_EXT],
    )
    def test_ade_families_not_hyperbolic(self, q):
        assert not is_hyperbolic(q)

    def test_subquiver_restriction(self):
        sub = induced_subquiver(K32, (0, 3, 4))
        assert sub.vertices == 3 and len(sub.arrows) == 2


class TestModuliDim:
    def test_examples(self):
        assert moduli_dim(K3, (1, 3), 1) == 0
        assert moduli_dim(K32, (1, 1, 2, 1, 1), 1) == 1
        assert moduli_dim(K3, (1, 1), 2) == 5

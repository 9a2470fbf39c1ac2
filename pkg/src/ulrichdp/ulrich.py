"""Dimension-vector constraint systems for Ulrich bundles, with finiteness
certificates, complete candidate enumeration and trichotomy-evidence reports.

For a polarized surface (X, O(H)) the cohomology fingerprint of an Ulrich
bundle of rank r is a dimension vector of the surface's catalog quiver
subject to two integer linear equations:

* a rank equation, from the ranks in a fixed short exact sequence
  presenting the bundle, and
* a chi equation, from chi(E(-2H)) = 0, whose coefficients are Euler
  characteristics of fixed twists computed by :mod:`ulrichdp.lattice`.

The vertex coordinates are, per surface:

* p2 (quiver k3): (a, b) with presentation 0 -> O(d-2)^a -> O(d-1)^b -> E -> 0;
* p1xp1 (s4): (gamma, delta, tau) with
  0 -> O(a-1,b-1)^gamma -> O(a-1,b)^delta + O(a,b-1)^tau -> E -> 0;
* x3 (k32): (alpha, beta, gamma, delta, epsilon), the sub side twisted from
  O(l_1 - l), O(l_2 - l), O(l_3 - l) and the middle from the rank-2 kernels
  P (of O^3 ->> O(l)) and K (of O^3 ->> O(2l - l_1 - l_2 - l_3));
* x4 (k51): (alpha, beta, gamma, delta, epsilon, zeta), the sub side from
  O(l_4 - l), O(l_3 - l), O(l_2 - l), O(l_1 - l),
  O(-2l + l_1 + l_2 + l_3 + l_4) and the middle from the rank-3 kernel K of
  O^5 ->> F, where F extends O(l) by O(2l - l_1 - l_2 - l_3 - l_4).

Restricting the quiver's Tits form to the common rational nullspace of the
two (homogenized) linear forms and certifying it positive definite proves
that every Tits level set meets the solution lattice in finitely many
points, for every rank; enumeration is then complete without any search
box.  Candidates are necessary-condition fingerprints only: a listed vector
does not assert that an Ulrich bundle with those invariants exists, which is
why report verdicts are phrased as "...Evidence".
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import isqrt
from typing import Sequence

from . import lattice, quiver as quiver_mod
from .lattice import Divisor, Surface, SurfaceMismatch, UnsupportedSurface
from .quiver import Quiver, euler_form, moduli_dim, symmetrized_matrix, tits
from . import oracle

SYSTEM_QUIVERS: dict[str, Quiver] = {
    "p2": quiver_mod.K3,
    "p1xp1": quiver_mod.S4,
    "x3": quiver_mod.K32,
    "x4": quiver_mod.K51,
}

NEGATIVE = "negative"


@dataclass(frozen=True)
class UlrichSystem:
    """The constraint bundle for one (surface, polarization, rank).

    ``rank_form . v = rank`` and ``chi_form . v = 0`` are the two linear
    constraints; the quadratic constraint is the quiver's Tits form.  The
    chi coefficients are stored times ``chi_scale`` (always 1 here, since
    they are Euler characteristics of honest sheaves and hence integers).
    """

    surface: Surface
    polarization: Divisor
    quiver: Quiver
    rank: int
    rank_form: tuple[int, ...]
    chi_form: tuple[int, ...]
    chi_scale: int = 1

    def tits(self, v: Sequence[int]) -> int:
        return tits(self.quiver, v)

    def satisfies_linear(self, v: Sequence[int]) -> bool:
        return (
            sum(c * x for c, x in zip(self.rank_form, v)) == self.rank
            and sum(c * x for c, x in zip(self.chi_form, v)) == 0
        )

    def with_rank(self, r: int) -> "UlrichSystem":
        if r < 1:
            raise ValueError(f"rank must be positive, got {r}")
        return replace(self, rank=r)


def _rank_form(s: Surface) -> tuple[int, ...]:
    return {
        "p2": (-1, 1),
        "p1xp1": (-1, 1, 1),
        "x3": (-1, -1, -1, 2, 2),
        "x4": (-1, -1, -1, -1, -1, 3),
    }[s.name]


def _chi_form(s: Surface, h: Divisor) -> tuple[int, ...]:
    """Coefficients of the chi(E(-2H)) = 0 equation, sub side positive.

    Each entry is chi of the corresponding presentation piece twisted by
    O(-2H); kernels are resolved through their defining sequences.
    """
    chi = lattice.chi
    if s.name == "p2":
        d = h.coeffs[0]
        return (
            chi(Divisor(s, (d - 2 - 2 * d,))),
            -chi(Divisor(s, (d - 1 - 2 * d,))),
        )
    if s.name == "p1xp1":
        a, b = h.coeffs
        return (
            chi(Divisor(s, (-a - 1, -b - 1))),
            -chi(Divisor(s, (-a - 1, -b))),
            -chi(Divisor(s, (-a, -b - 1))),
        )
    minus_h = -h
    if s.name == "x3":
        sub = [(-1, 1, 0, 0), (-1, 0, 1, 0), (-1, 0, 0, 1)]
        chi_o = chi(minus_h)
        kernel_p = 3 * chi_o - chi(Divisor(s, (1, 0, 0, 0)) + minus_h)
        kernel_k = 3 * chi_o - chi(Divisor(s, (2, -1, -1, -1)) + minus_h)
        return tuple(chi(Divisor(s, c) + minus_h) for c in sub) + (-kernel_p, -kernel_k)
    if s.name == "x4":
        sub = [
            (-1, 0, 0, 0, 1),
            (-1, 0, 0, 1, 0),
            (-1, 0, 1, 0, 0),
            (-1, 1, 0, 0, 0),
            (-2, 1, 1, 1, 1),
        ]
        chi_o = chi(minus_h)
        chi_f = chi(Divisor(s, (2, -1, -1, -1, -1)) + minus_h) + chi(
            Divisor(s, (1, 0, 0, 0, 0)) + minus_h
        )
        kernel_k = 5 * chi_o - chi_f
        return tuple(chi(Divisor(s, c) + minus_h) for c in sub) + (-kernel_k,)
    raise UnsupportedSurface(f"no Ulrich system is defined for {s}")


def build_system(s: Surface, h: Divisor, r: int, *, check_ample: bool = True) -> UlrichSystem:
    """Assemble the constraint system for (s, O(h)) at rank r.

    The polarization must be very ample unless ``check_ample`` is disabled
    (useful for probing how the certificate fails off the ample cone).
    """
    if h.surface != s:
        raise SurfaceMismatch(f"polarization lives on {h.surface}, not {s}")
    if s.name not in SYSTEM_QUIVERS:
        raise UnsupportedSurface(f"no Ulrich system is defined for {s}")
    if r < 1:
        raise ValueError(f"rank must be positive, got {r}")
    if check_ample and not lattice.is_very_ample(h):
        raise ValueError(f"polarization {h} is not ample on {s}")
    return UlrichSystem(
        surface=s,
        polarization=h,
        quiver=SYSTEM_QUIVERS[s.name],
        rank=r,
        rank_form=_rank_form(s),
        chi_form=_chi_form(s, h),
    )


# ---------------------------------------------------------------------------
# finiteness certificate


@dataclass(frozen=True)
class FinitenessCertificate:
    """Definiteness of the Tits form restricted to the constraint nullspace.

    ``kind`` is PositiveDefinite, NegativeDefinite, Indefinite or Degenerate
    (the last covering semidefinite-with-radical and zero forms).  ``basis``
    spans the joint rational nullspace of the homogenized rank form and the
    chi form, as primitive integer vectors; ``matrix`` is the restricted
    symmetric bilinear form, with the Tits values of the basis vectors on
    its diagonal.  PositiveDefinite certifies that for every rank and every
    Tits target the integer solution set is finite.
    """

    kind: str
    basis: tuple[tuple[int, ...], ...]
    matrix: tuple[tuple[Fraction, ...], ...]


def _bilinear_matrix(q: Quiver) -> list[list[Fraction]]:
    sym = symmetrized_matrix(q)
    return [[Fraction(x, 2) for x in row] for row in sym]


def _restrict(
    bil: list[list[Fraction]], vectors: Sequence[Sequence[int]]
) -> list[list[Fraction]]:
    def pair(u: Sequence[int], v: Sequence[int]) -> Fraction:
        return sum(
            Fraction(u[i]) * bil[i][j] * v[j]
            for i in range(len(u))
            for j in range(len(v))
        )

    return [[pair(u, v) for v in vectors] for u in vectors]


_CERT_KIND = {
    oracle.Definiteness.POSITIVE_DEFINITE: "PositiveDefinite",
    oracle.Definiteness.NEGATIVE_DEFINITE: "NegativeDefinite",
    oracle.Definiteness.INDEFINITE: "Indefinite",
    oracle.Definiteness.POSITIVE_SEMIDEFINITE: "Degenerate",
    oracle.Definiteness.NEGATIVE_SEMIDEFINITE: "Degenerate",
    oracle.Definiteness.ZERO: "Degenerate",
}


def finiteness_certificate(sys: UlrichSystem) -> FinitenessCertificate:
    """Restrict the Tits form to the nullspace of both linear forms and
    classify it exactly.

    A zero-dimensional nullspace (the p2 case) is vacuously
    PositiveDefinite: the solution fiber per rank is at most a point.
    """
    basis = oracle.nullspace([sys.rank_form, sys.chi_form])
    if not basis:
        return FinitenessCertificate("PositiveDefinite", (), ())
    restricted = _restrict(_bilinear_matrix(sys.quiver), basis)
    kind = _CERT_KIND[oracle.definiteness(restricted)]
    return FinitenessCertificate(
        kind,
        tuple(tuple(v) for v in basis),
        tuple(tuple(row) for row in restricted),
    )


# ---------------------------------------------------------------------------
# integer solutions of the linear system


def _smith_normal_form(
    a: Sequence[Sequence[int]],
) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """(U, D, V) with U A V = D diagonal and U, V unimodular."""
    d = [list(row) for row in a]
    m, n = len(d), len(d[0])
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i1: int, i2: int) -> None:
        d[i1], d[i2] = d[i2], d[i1]
        u[i1], u[i2] = u[i2], u[i1]

    def swap_cols(j1: int, j2: int) -> None:
        for row in d:
            row[j1], row[j2] = row[j2], row[j1]
        for row in v:
            row[j1], row[j2] = row[j2], row[j1]

    def add_row(src: int, dst: int, factor: int) -> None:
        for j in range(n):
            d[dst][j] += factor * d[src][j]
        for j in range(m):
            u[dst][j] += factor * u[src][j]

    def add_col(src: int, dst: int, factor: int) -> None:
        for row in d:
            row[dst] += factor * row[src]
        for row in v:
            row[dst] += factor * row[src]

    for k in range(min(m, n)):
        while True:
            pivot = None
            for i in range(k, m):
                for j in range(k, n):
                    if d[i][j] != 0 and (pivot is None or abs(d[i][j]) < abs(d[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                return u, d, v
            swap_rows(k, pivot[0])
            swap_cols(k, pivot[1])
            dirty = False
            for i in range(k + 1, m):
                if d[i][k] != 0:
                    add_row(k, i, -(d[i][k] // d[k][k]))
                    dirty = dirty or d[i][k] != 0
            for j in range(k + 1, n):
                if d[k][j] != 0:
                    add_col(k, j, -(d[k][j] // d[k][k]))
                    dirty = dirty or d[k][j] != 0
            if not dirty:
                break
    return u, d, v


def _solve_integer_system(
    rows: Sequence[Sequence[int]], targets: Sequence[int]
) -> tuple[tuple[int, ...], list[tuple[int, ...]]] | None:
    """Particular integer solution and lattice basis for A x = t, or None."""
    u, d, v = _smith_normal_form(rows)
    m, n = len(rows), len(rows[0])
    s = [sum(u[i][k] * targets[k] for k in range(m)) for i in range(m)]
    z = [0] * n
    for k in range(m):
        dk = d[k][k] if k < min(m, n) else 0
        if dk != 0:
            if s[k] % dk:
                return None
            z[k] = s[k] // dk
        elif s[k] != 0:
            return None
    x0 = tuple(sum(v[i][k] * z[k] for k in range(n)) for i in range(n))
    free = [k for k in range(n) if k >= min(m, n) or d[k][k] == 0]
    basis = [tuple(v[i][k] for i in range(n)) for k in free]
    return x0, basis


# ---------------------------------------------------------------------------
# complete enumeration on a positive definite restriction


def _floor_plus_sqrt(t: Fraction, rho: Fraction) -> int:
    """floor(t + sqrt(rho)) for rational t and rational rho >= 0, exactly."""
    # t + sqrt(rho) = (a + sqrt(m)) / b with integers a, m >= 0, b > 0
    b = t.denominator * rho.denominator
    a = t.numerator * rho.denominator
    m = rho.numerator * rho.denominator * t.denominator * t.denominator
    f = (a + isqrt(m)) // b
    while True:
        x = b * (f + 1) - a
        if x <= 0 or x * x <= m:
            f += 1
        else:
            return f


def _ldl(g: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[Fraction]]:
    """G = L diag(d) L^T with unit lower triangular L; requires G positive definite."""
    k = len(g)
    work = [row[:] for row in g]
    lower = [[Fraction(int(i == j)) for j in range(k)] for i in range(k)]
    diag = [Fraction(0)] * k
    for p in range(k):
        diag[p] = work[p][p]
        if diag[p] <= 0:
            raise ArithmeticError("restricted form is not positive definite")
        for i in range(p + 1, k):
            lower[i][p] = work[i][p] / diag[p]
        for i in range(p + 1, k):
            for j in range(p + 1, k):
                work[i][j] -= lower[i][p] * diag[p] * lower[j][p]
    return lower, diag


def _solve_rational(g: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    k = len(g)
    m = [row[:] + [rhs[i]] for i, row in enumerate(g)]
    for col in range(k):
        pivot = next(i for i in range(col, k) if m[i][col] != 0)
        m[col], m[pivot] = m[pivot], m[col]
        for i in range(k):
            if i != col and m[i][col] != 0:
                factor = m[i][col] / m[col][col]
                for j in range(col, k + 1):
                    m[i][j] -= factor * m[col][j]
    return [m[i][k] / m[i][i] for i in range(k)]


def _enumerate_definite(sys: UlrichSystem, target: int) -> list[tuple[int, ...]]:
    """All positive integer solutions with Tits value == target, by bounding
    the solution fiber inside an ellipsoid of the restricted form.

    The integer solutions of the two linear equations form an affine lattice
    x0 + Z^k . B; on it the Tits form is a positive definite quadric, so the
    level set is an ellipsoid and recursive interval bounds on the lattice
    coordinates enumerate it completely.
    """
    solved = _solve_integer_system([sys.rank_form, sys.chi_form], [sys.rank, 0])
    if solved is None:
        return []
    x0, basis = solved
    n = sys.quiver.vertices
    if not basis:
        if (
            all(c >= 0 for c in x0)
            and any(c > 0 for c in x0)
            and sys.tits(x0) == target
        ):
            return [x0]
        return []

    bil = _bilinear_matrix(sys.quiver)

    def pair(uu: Sequence[int], vv: Sequence[int]) -> Fraction:
        return sum(
            Fraction(uu[a]) * bil[a][b] * vv[b] for a in range(n) for b in range(n)
        )

    k = len(basis)
    gram = [[pair(basis[a], basis[b]) for b in range(k)] for a in range(k)]
    shift = [pair(basis[a], x0) for a in range(k)]
    const = Fraction(sys.tits(x0))

    center = [-w for w in _solve_rational(gram, shift)]
    minimum = const + sum(shift[a] * center[a] for a in range(k))
    budget = Fraction(target) - minimum
    if budget < 0:
        return []
    lower, diag = _ldl(gram)

    results: list[tuple[int, ...]] = []

    def descend(level: int, z: list[int], remaining: Fraction) -> None:
        if level < 0:
            if remaining != 0:
                return
            x = tuple(
                x0[c] + sum(z[a] * basis[a][c] for a in range(k)) for c in range(n)
            )
            if all(v >= 0 for v in x) and any(v > 0 for v in x) and sys.tits(x) == target:
                results.append(x)
            return
        offset = -center[level] + sum(
            lower[jj][level] * (z[jj] - center[jj]) for jj in range(level + 1, k)
        )
        # need diag[level] * (z_level + offset)^2 <= remaining
        rho = remaining / diag[level]
        hi = _floor_plus_sqrt(-offset, rho)
        lo = -_floor_plus_sqrt(offset, rho)
        for value in range(lo, hi + 1):
            term = diag[level] * (value + offset) ** 2
            z[level] = value
            descend(level - 1, z, remaining - term)

    descend(k - 1, [0] * k, budget)
    return sorted(results)


# ---------------------------------------------------------------------------
# bounded box search (negative targets, or systems without a certificate)


def _box_search_range(
    vertices: int,
    arrows: tuple[tuple[int, int], ...],
    rank_form: tuple[int, ...],
    chi_form: tuple[int, ...],
    rank: int,
    target: int | str,
    bound: int,
    first_lo: int,
    first_hi: int,
) -> list[tuple[int, ...]]:
    """Complete scan of [0, bound]^n with the first coordinate restricted to
    [first_lo, first_hi]; plain data arguments so chunks can run in worker
    processes."""
    q = Quiver(vertices, arrows)
    box = [(first_lo, first_hi)] + [(0, bound)] * (vertices - 1)

    def quadratic(v: tuple[int, ...]) -> int:
        return tits(q, v)

    hits = oracle.brute_force(
        [(rank_form, rank), (chi_form, 0)], quadratic, target, box
    )
    return [v for v in hits if any(x > 0 for x in v)]


def _box_chunk_args(sys: UlrichSystem, target: int | str, bound: int, jobs: int):
    n = sys.quiver.vertices
    chunk = max(1, (bound + 1 + jobs - 1) // jobs)
    spans = [
        (lo, min(lo + chunk - 1, bound)) for lo in range(0, bound + 1, chunk)
    ]
    return [
        (
            n,
            sys.quiver.arrows,
            sys.rank_form,
            sys.chi_form,
            sys.rank,
            target,
            bound,
            lo,
            hi,
        )
        for lo, hi in spans
    ]


def _box_search(
    sys: UlrichSystem, target: int | str, bound: int, jobs: int = 1
) -> list[tuple[int, ...]]:
    """Complete bounded search over [0, bound]^n, optionally sharded over the
    first coordinate across worker processes.  The merged result equals the
    single-process scan."""
    if bound < 1:
        raise ValueError(f"bound must be positive, got {bound}")
    chunks = _box_chunk_args(sys, target, bound, max(1, jobs))
    if len(chunks) == 1 or jobs <= 1:
        parts = [_box_search_range(*args) for args in chunks]
    else:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_box_search_range_star, chunks))
    merged: list[tuple[int, ...]] = []
    for part in parts:
        merged.extend(part)
    return sorted(merged)


def _box_search_range_star(args) -> list[tuple[int, ...]]:
    return _box_search_range(*args)


# ---------------------------------------------------------------------------
# public enumeration


def _normalize_target(target: int | str) -> int | str:
    if target in (0, 1):
        return target
    if isinstance(target, str) and target.lower() in ("negative", "neg"):
        return NEGATIVE
    raise ValueError(f"Tits target must be 0, 1 or 'negative', got {target!r}")


def enumerate_candidates(
    sys: UlrichSystem,
    tits_target: int | str,
    bound: int | None = None,
    jobs: int = 1,
) -> list[tuple[int, ...]]:
    """The complete, lexicographically sorted list of positive integer
    vectors satisfying both linear equations and the Tits condition.

    Targets 0 and 1 without a bound require a PositiveDefinite certificate
    and use the complete ellipsoid enumeration.  Passing a bound switches to
    the exhaustive box scan over [0, bound]^n (mandatory for the "negative"
    target, where the unbounded solution set is infinite in general, and for
    systems whose certificate is not PositiveDefinite).
    """
    target = _normalize_target(tits_target)
    if target == NEGATIVE:
        if bound is None:
            raise ValueError("the negative Tits search requires a box bound")
        return _box_search(sys, target, bound, jobs)
    if bound is not None:
        return _box_search(sys, target, bound, jobs)
    certificate = finiteness_certificate(sys)
    if certificate.kind != "PositiveDefinite":
        raise ValueError(
            f"certificate is {certificate.kind}; a box bound is mandatory"
        )
    return _enumerate_definite(sys, target)


# ---------------------------------------------------------------------------
# change-of-variables identities


CONE_SCALE = {"x3": 8, "x4": 9}

# Composed diagonalizing substitutions on the homogenized-rank subspace.
# Each row is (sign, c2, u): the substituted coordinate is sqrt(c2) * (u . v)
# and the diagonalized expression is sum sign * coordinate^2, which equals
# CONE_SCALE times the Tits form wherever the rank form vanishes.  Squaring
# removes every irrationality, so the stored data is purely rational.
_DIAG_ROWS = {
    "x3": (
        (-1, Fraction(1, 3), (1, 1, 1, 0, 0)),
        (1, Fraction(4), (-1, 1, 0, 0, 0)),
        (1, Fraction(4, 3), (-1, -1, 2, 0, 0)),
        (1, Fraction(4), (0, 0, 0, 1, -1)),
    ),
    "x4": (
        (1, Fraction(9, 2), (-1, 0, 0, 0, 1, 0)),
        (1, Fraction(3, 2), (-1, 0, 0, 2, -1, 0)),
        (1, Fraction(3, 4), (-1, 0, 3, -1, -1, 0)),
        (1, Fraction(9, 20), (-1, 4, -1, -1, -1, 0)),
        (-1, Fraction(1, 5), (1, 1, 1, 1, 1, 0)),
    ),
}


def cone_matrix(s: Surface) -> list[list[Fraction]]:
    """The rational Gram matrix of the diagonalized cone form: M with
    v^T M v = sum sign * c2 * (u . v)^2 over the stored substitution rows."""
    if s.name not in _DIAG_ROWS:
        raise UnsupportedSurface(f"no diagonalizing substitution stored for {s}")
    rows = _DIAG_ROWS[s.name]
    n = len(rows[0][2])
    m = [[Fraction(0)] * n for _ in range(n)]
    for sign, c2, u in rows:
        for i in range(n):
            if u[i] == 0:
                continue
            for j in range(n):
                if u[j] != 0:
                    m[i][j] += sign * c2 * u[i] * u[j]
    return m


def verify_transformations(
    s: Surface, h: Divisor, v: Sequence[int | Fraction]
) -> bool:
    """Check the diagonalized cone expression against the Tits form at v.

    v must be a rational vector satisfying the homogenized rank equation
    (2(delta+epsilon) = alpha+beta+gamma on x3; 3 zeta = alpha+..+epsilon on
    x4).  Returns True iff the diagonalized expression equals CONE_SCALE
    times the Tits form value, both evaluated exactly.
    """
    if s.name not in _DIAG_ROWS:
        raise UnsupportedSurface(f"transformations are defined for x3/x4, not {s}")
    if h.surface != s:
        raise SurfaceMismatch(f"polarization lives on {h.surface}, not {s}")
    vec = [Fraction(x) for x in v]
    form = _rank_form(s)
    if len(vec) != len(form):
        raise ValueError(f"vector length {len(vec)} does not match {s}")
    if sum(c * x for c, x in zip(form, vec)) != 0:
        raise ValueError("vector is off the homogenized rank-constraint subspace")
    diagonalized = Fraction(0)
    for sign, c2, u in _DIAG_ROWS[s.name]:
        dot = sum(ui * xi for ui, xi in zip(u, vec))
        diagonalized += sign * c2 * dot * dot
    q = SYSTEM_QUIVERS[s.name]
    return diagonalized == CONE_SCALE[s.name] * euler_form(q, vec, vec)


# ---------------------------------------------------------------------------
# trichotomy reports


@dataclass(frozen=True)
class Candidate:
    vector: tuple[int, ...]
    tits: int


@dataclass(frozen=True)
class RankCandidates:
    rank: int
    candidates: tuple[Candidate, ...]


@dataclass(frozen=True)
class TrichotomyReport:
    """Per-polarization classification evidence.

    Verdicts: WildEvidence if some candidate has negative Tits value,
    TameEvidence if none is negative but some vanishes, FiniteEvidence if
    all candidates are rigid (Tits value 1), NoCandidates otherwise.
    ``moduli_dims`` lists (n, 1 - n^2 q) for the first imaginary candidate
    when the verdict is WildEvidence.
    """

    surface: Surface
    polarization: Divisor
    certificate: FinitenessCertificate
    ranks: tuple[RankCandidates, ...]
    verdict: str
    moduli_dims: tuple[tuple[int, int], ...]
    r_max: int
    bound: int

    def to_json_obj(self) -> dict:
        return {
            "surface": self.surface.name,
            "polarization": list(self.polarization.coeffs),
            "certificate": {
                "class": self.certificate.kind,
                "matrix": [[str(x) for x in row] for row in self.certificate.matrix],
            },
            "ranks": [
                {
                    "r": slice_.rank,
                    "candidates": [
                        {"vector": list(c.vector), "tits": c.tits}
                        for c in slice_.candidates
                    ],
                }
                for slice_ in self.ranks
            ],
            "verdict": self.verdict,
            "moduli_dims": [list(pair) for pair in self.moduli_dims],
        }

    def csv_rows(self) -> list[list[str]]:
        rows = []
        for slice_ in self.ranks:
            for c in slice_.candidates:
                rows.append(
                    [
                        self.surface.name,
                        str(self.polarization),
                        str(slice_.rank),
                        ",".join(str(x) for x in c.vector),
                        str(c.tits),
                    ]
                )
        return rows


CSV_HEADER = ["surface", "H", "r", "vector", "tits"]


def classify_trichotomy(
    s: Surface,
    h: Divisor,
    r_max: int,
    bound: int = 10,
    jobs: int = 1,
    *,
    check_ample: bool = True,
) -> TrichotomyReport:
    """Scan ranks 1..r_max and assemble the trichotomy evidence report.

    Candidates with Tits value 0 or 1 are enumerated completely whenever the
    finiteness certificate is PositiveDefinite (otherwise within the box);
    negative-Tits witnesses always come from the box search, smallest
    witnesses first, since one witness suffices for WildEvidence.
    """
    if r_max < 1:
        raise ValueError(f"r_max must be positive, got {r_max}")
    base = build_system(s, h, 1, check_ample=check_ample)
    certificate = finiteness_certificate(base)
    definite = certificate.kind == "PositiveDefinite"

    slices = []
    first_imaginary: Candidate | None = None
    seen_zero = seen_one = False
    for r in range(1, r_max + 1):
        sys_r = base.with_rank(r)
        found: list[Candidate] = []
        for vec in _box_search(sys_r, NEGATIVE, bound, jobs):
            found.append(Candidate(vec, sys_r.tits(vec)))
        for target in (0, 1):
            vectors = (
                _enumerate_definite(sys_r, target)
                if definite
                else _box_search(sys_r, target, bound, jobs)
            )
            for vec in vectors:
                found.append(Candidate(vec, target))
        found.sort(key=lambda c: c.vector)
        for c in found:
            if c.tits < 0 and first_imaginary is None:
                first_imaginary = c
            seen_zero = seen_zero or c.tits == 0
            seen_one = seen_one or c.tits == 1
        slices.append(RankCandidates(r, tuple(found)))

    if first_imaginary is not None:
        verdict = "WildEvidence"
        moduli = tuple(
            (n, moduli_dim(base.quiver, first_imaginary.vector, n)) for n in range(1, 5)
        )
    elif seen_zero:
        verdict, moduli = "TameEvidence", ()
    elif seen_one:
        verdict, moduli = "FiniteEvidence", ()
    else:
        verdict, moduli = "NoCandidates", ()

    return TrichotomyReport(
        surface=s,
        polarization=h,
        certificate=certificate,
        ranks=tuple(slices),
        verdict=verdict,
        moduli_dims=moduli,
        r_max=r_max,
        bound=bound,
    )

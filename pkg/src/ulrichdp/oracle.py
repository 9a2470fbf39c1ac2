"""Independent exact-arithmetic verifiers used by the test suite.

Matrices are plain rectangular lists of rows; entries may be ints or
:class:`fractions.Fraction` and are normalized to Fractions internally.
Everything is exact -- no floating point.  Matrices here are tiny (at most
6x6), so the implementations favor clarity over asymptotics:

* :func:`nullspace` -- fraction-free forward elimination, leftmost pivots;
* :func:`inertia` / :func:`definiteness` -- symmetric elimination with
  diagonal pivot selection (a congruence, so signs are Sylvester-exact);
* :func:`definiteness_by_charpoly` -- a second, independent definiteness
  route counting eigenvalue signs via Descartes' rule on the exact
  characteristic polynomial (valid because symmetric matrices have real
  spectra);
* :func:`brute_force` -- exhaustive box search for integer solutions of
  linear equations plus a quadratic-form target.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Callable, Sequence

Matrix = Sequence[Sequence[int | Fraction]]


def as_fraction_matrix(rows: Matrix) -> list[list[Fraction]]:
    """Copy to a rectangular list-of-lists of Fractions."""
    out = [[Fraction(x) for x in row] for row in rows]
    if out and any(len(row) != len(out[0]) for row in out):
        raise ValueError("matrix rows have unequal lengths")
    return out


def _primitive(vector: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a rational vector to coprime integers, first nonzero entry > 0."""
    denominator_lcm = 1
    for x in vector:
        denominator_lcm = denominator_lcm * x.denominator // gcd(denominator_lcm, x.denominator)
    ints = [int(x * denominator_lcm) for x in vector]
    content = 0
    for x in ints:
        content = gcd(content, x)
    if content > 1:
        ints = [x // content for x in ints]
    for x in ints:
        if x != 0:
            if x < 0:
                ints = [-y for y in ints]
            break
    return tuple(ints)


def nullspace(rows: Matrix) -> list[tuple[int, ...]]:
    """Basis of the right nullspace, as primitive integer vectors.

    Fraction-free Gaussian elimination with deterministic leftmost-nonzero
    pivoting; one basis vector per free column, in column order.
    """
    m = as_fraction_matrix(rows)
    if not m:
        return []
    n_rows, n_cols = len(m), len(m[0])
    pivot_cols: list[int] = []
    r = 0
    for col in range(n_cols):
        pivot_row = next((i for i in range(r, n_rows) if m[i][col] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        for i in range(n_rows):
            if i != r and m[i][col] != 0:
                factor = m[i][col] / m[r][col]
                for j in range(col, n_cols):
                    m[i][j] -= factor * m[r][j]
        pivot_cols.append(col)
        r += 1
        if r == n_rows:
            break
    free_cols = [c for c in range(n_cols) if c not in pivot_cols]
    basis = []
    for free in free_cols:
        v = [Fraction(0)] * n_cols
        v[free] = Fraction(1)
        for row, col in reversed(list(enumerate(pivot_cols))):
            v[col] = -m[row][free] / m[row][col]
        basis.append(_primitive(v))
    return basis


class Definiteness(Enum):
    POSITIVE_DEFINITE = "PositiveDefinite"
    POSITIVE_SEMIDEFINITE = "PositiveSemidefinite"
    NEGATIVE_DEFINITE = "NegativeDefinite"
    NEGATIVE_SEMIDEFINITE = "NegativeSemidefinite"
    INDEFINITE = "Indefinite"
    ZERO = "Zero"

    def __str__(self) -> str:
        return self.value


def _check_symmetric(m: list[list[Fraction]]) -> None:
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("definiteness needs a square matrix")
    for i in range(n):
        for j in range(i):
            if m[i][j] != m[j][i]:
                raise ValueError("definiteness needs a symmetric matrix")


def inertia(rows: Matrix) -> tuple[int, int, int]:
    """(positive, negative, zero) eigenvalue counts of a symmetric matrix.

    Symmetric elimination with diagonal pivot selection; every step is a
    congruence, so the pivot signs give the inertia exactly (Sylvester).
    When no nonzero diagonal entry remains but some off-diagonal one does,
    adding that row and column onto the diagonal restores a pivot without
    changing the inertia.
    """
    m = as_fraction_matrix(rows)
    _check_symmetric(m)
    active = list(range(len(m)))
    pos = neg = zero = 0
    while active:
        pivot = next((k for k in active if m[k][k] != 0), None)
        if pivot is None:
            off = next(
                (
                    (i, j)
                    for idx, i in enumerate(active)
                    for j in active[idx + 1:]
                    if m[i][j] != 0
                ),
                None,
            )
            if off is None:
                zero += len(active)
                break
            i, j = off
            # congruence row_i += row_j, col_i += col_j; makes m[i][i] = 2 m[i][j]
            for k in active:
                m[i][k] += m[j][k]
            for k in active:
                m[k][i] += m[k][j]
            continue
        d = m[pivot][pivot]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(pivot)
        for i in active:
            factor = m[i][pivot] / d
            if factor == 0:
                continue
            for j in active:
                m[i][j] -= factor * m[pivot][j]
    return pos, neg, zero


def _classify(pos: int, neg: int, zero: int) -> Definiteness:
    if pos == 0 and neg == 0:
        return Definiteness.ZERO
    if neg == 0:
        return (
            Definiteness.POSITIVE_DEFINITE if zero == 0 else Definiteness.POSITIVE_SEMIDEFINITE
        )
    if pos == 0:
        return (
            Definiteness.NEGATIVE_DEFINITE if zero == 0 else Definiteness.NEGATIVE_SEMIDEFINITE
        )
    return Definiteness.INDEFINITE


def definiteness(rows: Matrix) -> Definiteness:
    """Exact definiteness class of a symmetric matrix."""
    return _classify(*inertia(rows))


def char_poly(rows: Matrix) -> list[Fraction]:
    """Coefficients of det(tI - M), highest power first (Faddeev-LeVerrier)."""
    m = as_fraction_matrix(rows)
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("characteristic polynomial needs a square matrix")
    coeffs = [Fraction(1)]
    work = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # work <- M (work + c_{k-1} I)
        shifted = [row[:] for row in work]
        for i in range(n):
            shifted[i][i] += coeffs[-1]
        work = [
            [sum(m[i][l] * shifted[l][j] for l in range(n)) for j in range(n)]
            for i in range(n)
        ]
        trace = sum(work[i][i] for i in range(n))
        coeffs.append(-trace / k)
    return coeffs


def definiteness_by_charpoly(rows: Matrix) -> Definiteness:
    """Definiteness via eigenvalue sign counts from the characteristic polynomial.

    All eigenvalues are real, so Descartes' rule of signs is exact: the
    number of positive eigenvalues equals the sign changes of p(t), the
    number of negative ones the sign changes of p(-t), and the zero count is
    the multiplicity of the root t = 0.
    """
    m = as_fraction_matrix(rows)
    _check_symmetric(m)
    p = char_poly(m)

    def sign_changes(seq: list[Fraction]) -> int:
        signs = [1 if x > 0 else -1 for x in seq if x != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    zero = 0
    while p and p[-1] == 0:
        zero += 1
        p = p[:-1]
    pos = sign_changes(p)
    neg = sign_changes([c if (len(p) - 1 - i) % 2 == 0 else -c for i, c in enumerate(p)])
    return _classify(pos, neg, zero)


def brute_force(
    forms: Sequence[tuple[Sequence[int], int]],
    quadratic: Callable[[tuple[int, ...]], int],
    tits_target: int | str,
    box: Sequence[tuple[int, int]],
) -> list[tuple[int, ...]]:
    """All integer points of a box satisfying the linear equations and a
    Tits-value condition.

    ``forms`` is a list of (coefficients, target) pairs, at most two of
    them; ``tits_target`` is an exact value or the string ``"negative"``.
    The box is scanned exhaustively: the last two coordinates are resolved
    from the equations by Cramer's rule whenever an invertible 2x2 tail
    exists, the rest are enumerated with interval pruning.  Output sorted
    lexicographically.
    """
    n = len(box)
    if any(lo > hi for lo, hi in box):
        return []
    if len(forms) > 2:
        raise ValueError("brute_force handles at most two linear forms")

    def matches(v: tuple[int, ...]) -> bool:
        value = quadratic(v)
        return value < 0 if tits_target == "negative" else value == tits_target

    results: list[tuple[int, ...]] = []
    rows = [list(coeffs) for coeffs, _ in forms]
    targets = [t for _, t in forms]

    solved: tuple[int, int] | None = None
    if len(forms) == 2 and n >= 2:
        for i in range(n - 1, 0, -1):
            for j in range(i - 1, -1, -1):
                det = rows[0][j] * rows[1][i] - rows[0][i] * rows[1][j]
                if det != 0:
                    solved = (j, i)
                    break
            if solved:
                break

    if solved is None:
        # plain nested scan with per-form interval pruning
        lows = [lo for lo, _ in box]
        highs = [hi for _, hi in box]
        suffix_min = [[0] * (n + 1) for _ in rows]
        suffix_max = [[0] * (n + 1) for _ in rows]
        for r, row in enumerate(rows):
            for idx in range(n - 1, -1, -1):
                lo_term = min(row[idx] * lows[idx], row[idx] * highs[idx])
                hi_term = max(row[idx] * lows[idx], row[idx] * highs[idx])
                suffix_min[r][idx] = suffix_min[r][idx + 1] + lo_term
                suffix_max[r][idx] = suffix_max[r][idx + 1] + hi_term

        def scan(idx: int, partial: list[int], sums: list[int]) -> None:
            if idx == n:
                if all(s == t for s, t in zip(sums, targets)) and matches(tuple(partial)):
                    results.append(tuple(partial))
                return
            for value in range(lows[idx], highs[idx] + 1):
                new_sums = [s + row[idx] * value for s, row in zip(sums, rows)]
                ok = all(
                    s + suffix_min[r][idx + 1] <= t <= s + suffix_max[r][idx + 1]
                    for r, (s, t) in enumerate(zip(new_sums, targets))
                )
                if ok:
                    partial.append(value)
                    scan(idx + 1, partial, new_sums)
                    partial.pop()

        scan(0, [], [0] * len(rows))
        return sorted(results)

    j, i = solved
    det = rows[0][j] * rows[1][i] - rows[0][i] * rows[1][j]
    scan_cols = [c for c in range(n) if c not in (i, j)]

    # Cramer numerators of the solved pair are affine forms of the scan
    # variables:  det * x_j = const_j + sum coef_j[c] * x_c  and likewise for
    # x_i.  Pruning on these forms keeps the cancellations between the two
    # equations, so the box constraints on the solved pair cut hard.
    const_j = targets[0] * rows[1][i] - targets[1] * rows[0][i]
    const_i = rows[0][j] * targets[1] - rows[1][j] * targets[0]
    coef_j = {c: rows[1][c] * rows[0][i] - rows[0][c] * rows[1][i] for c in scan_cols}
    coef_i = {c: rows[1][j] * rows[0][c] - rows[0][j] * rows[1][c] for c in scan_cols}

    k = len(scan_cols)
    suffix = []
    for coef in (coef_j, coef_i):
        lo = [0] * (k + 1)
        hi = [0] * (k + 1)
        for pos in range(k - 1, -1, -1):
            c = scan_cols[pos]
            terms = (coef[c] * box[c][0], coef[c] * box[c][1])
            lo[pos] = lo[pos + 1] + min(terms)
            hi[pos] = hi[pos + 1] + max(terms)
        suffix.append((lo, hi))

    def num_box(col: int) -> tuple[int, int]:
        ends = (det * box[col][0], det * box[col][1])
        return min(ends), max(ends)

    box_j, box_i = num_box(j), num_box(i)

    def feasible(pos: int, part_j: int, part_i: int) -> bool:
        lo_j = const_j + part_j + suffix[0][0][pos]
        hi_j = const_j + part_j + suffix[0][1][pos]
        lo_i = const_i + part_i + suffix[1][0][pos]
        hi_i = const_i + part_i + suffix[1][1][pos]
        return lo_j <= box_j[1] and hi_j >= box_j[0] and lo_i <= box_i[1] and hi_i >= box_i[0]

    def scan2(pos: int, values: list[int], part_j: int, part_i: int) -> None:
        if pos == k:
            xj_num = const_j + part_j
            xi_num = const_i + part_i
            if xj_num % det or xi_num % det:
                return
            xj, xi = xj_num // det, xi_num // det
            if not (box[j][0] <= xj <= box[j][1] and box[i][0] <= xi <= box[i][1]):
                return
            point = [0] * n
            for col, val in zip(scan_cols, values):
                point[col] = val
            point[j], point[i] = xj, xi
            candidate = tuple(point)
            if matches(candidate):
                results.append(candidate)
            return
        col = scan_cols[pos]
        cj, ci = coef_j[col], coef_i[col]
        for value in range(box[col][0], box[col][1] + 1):
            new_j = part_j + cj * value
            new_i = part_i + ci * value
            if feasible(pos + 1, new_j, new_i):
                values.append(value)
                scan2(pos + 1, values, new_j, new_i)
                values.pop()

    if feasible(0, 0, 0):
        scan2(0, [], 0, 0)
    return sorted(results)

"""Finite acyclic quivers, their Euler and Tits forms, and root classes.

A quiver is stored with canonically numbered vertices: every arrow points
from a smaller to a larger index, which forces acyclicity.  The Euler form
of two dimension vectors is

    <alpha, beta> = sum_i alpha_i beta_i - sum_{arrows s->t} alpha_s beta_t

and the Tits form is its quadratic specialization q(d) = <d, d>.

The built-in catalog holds the four quivers whose representations carry the
cohomological fingerprints of Ulrich bundles on the small del Pezzo
surfaces:

* ``k3``  -- 2 vertices, 3 parallel arrows (for p2),
* ``s4``  -- 3 vertices, two double arrows out of a source (for p1xp1),
* ``k32`` -- complete bipartite 3x2, 5 vertices (for x3),
* ``k51`` -- 5 sources into one sink, 6 vertices (for x4).

Diagram types (finite / affine / indefinite) are decided exactly from the
symmetrized form matrix E + E^T; all four catalog quivers are hyperbolic:
indefinite with every connected proper subdiagram finite or affine.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from . import oracle

DimVector = Sequence[int]


@dataclass(frozen=True)
class Quiver:
    vertices: int
    arrows: tuple[tuple[int, int], ...]
    name: str | None = None

    def __post_init__(self) -> None:
        if self.vertices < 1:
            raise ValueError("quiver needs at least one vertex")
        for s, t in self.arrows:
            if not (0 <= s < t < self.vertices):
                raise ValueError(
                    f"arrow ({s}, {t}) violates canonical numbering "
                    f"0 <= source < target < {self.vertices}"
                )

    @classmethod
    def from_json_obj(cls, obj: dict, name: str | None = None) -> "Quiver":
        """Build from a ``{"vertices": n, "arrows": [[s, t], ...]}`` document."""
        try:
            vertices = int(obj["vertices"])
            arrows = tuple((int(s), int(t)) for s, t in obj["arrows"])
        except (KeyError, TypeError, ValueError):
            raise ValueError(f"malformed quiver document {obj!r}") from None
        return cls(vertices, arrows, name)

    def _check_vector(self, d: DimVector) -> None:
        if len(d) != self.vertices:
            raise ValueError(
                f"dimension vector has length {len(d)}, quiver has {self.vertices} vertices"
            )


K3 = Quiver(2, ((0, 1),) * 3, "k3")
S4 = Quiver(3, ((0, 1), (0, 1), (0, 2), (0, 2)), "s4")
K32 = Quiver(5, ((0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4)), "k32")
K51 = Quiver(6, ((0, 5), (1, 5), (2, 5), (3, 5), (4, 5)), "k51")

CATALOG: dict[str, Quiver] = {"k3": K3, "s4": S4, "k32": K32, "k51": K51}


def catalog(name: str) -> Quiver:
    try:
        return CATALOG[name]
    except KeyError:
        raise ValueError(
            f"unknown quiver {name!r}; catalog has {', '.join(sorted(CATALOG))}"
        ) from None


def euler_matrix(q: Quiver) -> list[list[int]]:
    """Matrix E with <alpha, beta> = alpha^T E beta."""
    n = q.vertices
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for s, t in q.arrows:
        m[s][t] -= 1
    return m


def symmetrized_matrix(q: Quiver) -> list[list[int]]:
    """E + E^T: 2 on the diagonal, minus the arrow count off-diagonal."""
    e = euler_matrix(q)
    n = q.vertices
    return [[e[i][j] + e[j][i] for j in range(n)] for i in range(n)]


def euler_form(q: Quiver, alpha: DimVector, beta: DimVector) -> int:
    q._check_vector(alpha)
    q._check_vector(beta)
    value = sum(a * b for a, b in zip(alpha, beta))
    for s, t in q.arrows:
        value -= alpha[s] * beta[t]
    return value


def tits(q: Quiver, d: DimVector) -> int:
    """The Tits form q(d) = <d, d>."""
    return euler_form(q, d, d)


def is_positive(d: DimVector) -> bool:
    """All entries nonnegative and not all zero."""
    return all(x >= 0 for x in d) and any(x > 0 for x in d)


class RootClass(Enum):
    ZERO = "Zero"
    NON_ROOT = "NonRoot"
    RIGID = "Rigid"
    ISOTROPIC = "Isotropic"
    IMAGINARY = "Imaginary"

    def __str__(self) -> str:
        return self.value


def classify_root(q: Quiver, d: DimVector) -> RootClass:
    """Root class of a dimension vector by positivity and Tits value.

    Positive vectors split by q(d): 1 is a real (rigid) root with a unique
    indecomposable representation, 0 an isotropic imaginary root, and
    negative values are strictly imaginary.  q(d) >= 2 cannot occur for an
    indecomposable, so such vectors are reported NON_ROOT, as are vectors
    with a negative entry.  Schur-ness is not decided here; the class only
    reflects the quadratic form.
    """
    q._check_vector(d)
    if all(x == 0 for x in d):
        return RootClass.ZERO
    if not is_positive(d):
        return RootClass.NON_ROOT
    value = tits(q, d)
    if value == 1:
        return RootClass.RIGID
    if value == 0:
        return RootClass.ISOTROPIC
    if value < 0:
        return RootClass.IMAGINARY
    return RootClass.NON_ROOT


class DiagramType(Enum):
    FINITE = "Finite"
    AFFINE = "Affine"
    INDEFINITE = "Indefinite"

    def __str__(self) -> str:
        return self.value


def is_connected(q: Quiver) -> bool:
    if q.vertices == 1:
        return True
    adjacency: list[set[int]] = [set() for _ in range(q.vertices)]
    for s, t in q.arrows:
        adjacency[s].add(t)
        adjacency[t].add(s)
    seen = {0}
    stack = [0]
    while stack:
        for nxt in adjacency[stack.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return len(seen) == q.vertices


def diagram_type(q: Quiver) -> DiagramType:
    """Finite / affine / indefinite type of a connected quiver.

    Decided exactly from the symmetrized matrix E + E^T: positive definite
    means finite, positive semidefinite with a one-dimensional radical means
    affine, anything else is indefinite.
    """
    if not is_connected(q):
        raise ValueError("diagram type is only defined for connected quivers")
    pos, neg, zero = oracle.inertia(symmetrized_matrix(q))
    if neg == 0 and zero == 0:
        return DiagramType.FINITE
    if neg == 0 and zero == 1:
        return DiagramType.AFFINE
    return DiagramType.INDEFINITE


def induced_subquiver(q: Quiver, vertices: Sequence[int]) -> Quiver:
    """Full subquiver on a vertex subset, renumbered in increasing order."""
    keep = sorted(set(vertices))
    index = {v: i for i, v in enumerate(keep)}
    arrows = tuple(
        (index[s], index[t]) for s, t in q.arrows if s in index and t in index
    )
    return Quiver(len(keep), arrows)


def is_hyperbolic(q: Quiver) -> bool:
    """Indefinite, with every connected proper subdiagram finite or affine."""
    if diagram_type(q) is not DiagramType.INDEFINITE:
        return False
    for size in range(1, q.vertices):
        for subset in itertools.combinations(range(q.vertices), size):
            sub = induced_subquiver(q, subset)
            if not is_connected(sub):
                continue
            if diagram_type(sub) is DiagramType.INDEFINITE:
                return False
    return True


def moduli_dim(q: Quiver, d: DimVector, n: int) -> int:
    """Expected moduli dimension 1 - n^2 q(d) for the n-fold multiple of d."""
    return 1 - n * n * tits(q, d)

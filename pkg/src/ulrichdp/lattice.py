"""Exact Picard-lattice arithmetic for the small del Pezzo surfaces.

Supported surfaces: the projective plane ``p2``, the smooth quadric
``p1xp1``, and the blow-ups ``x1`` .. ``x8`` of the plane in general points.
Divisor classes are integer vectors in the standard basis:

* ``p2``: (a) for a*l, l the line class;
* ``p1xp1``: (a, b) for the bidegree of O(a, b);
* ``xd``: (a, b_1, .., b_d) for a*l + sum b_i*l_i, where l is the pullback
  of a line and l_i are the exceptional classes.

Everything here is a pure function over immutable values and all arithmetic
is exact; Euler characteristics are computed from integer numerators with an
explicit parity check instead of floating point.

Ampleness (equivalently very-ampleness) criteria are implemented for p2,
p1xp1, x3 and x4 only.  Note the sign convention on blow-ups: an ample class
has *negative* exceptional coefficients, e.g. ``3,-1,-1,-1`` on x3.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


class SurfaceMismatch(ValueError):
    """Two divisors from different surfaces were combined."""


class UnsupportedSurface(ValueError):
    """Operation not defined for this surface kind."""


class ChiIntegralityError(ArithmeticError):
    """A Riemann-Roch numerator came out odd; signals a formula bug."""


_NAMES = ("p2", "p1xp1") + tuple(f"x{d}" for d in range(1, 9))


@dataclass(frozen=True)
class Surface:
    """One of the supported del Pezzo surfaces, identified by name."""

    name: str

    def __post_init__(self) -> None:
        if self.name not in _NAMES:
            raise UnsupportedSurface(
                f"unknown surface {self.name!r}; expected one of {', '.join(_NAMES)}"
            )

    @property
    def blowups(self) -> int:
        """Number of blown-up points (0 unless the surface is some xd)."""
        return int(self.name[1:]) if self.name.startswith("x") else 0

    @property
    def picard_rank(self) -> int:
        if self.name == "p2":
            return 1
        if self.name == "p1xp1":
            return 2
        return self.blowups + 1

    def __str__(self) -> str:
        return self.name


P2 = Surface("p2")
P1XP1 = Surface("p1xp1")
X3 = Surface("x3")
X4 = Surface("x4")


def blow_up(d: int) -> Surface:
    """The blow-up of the plane in d general points, 1 <= d <= 8."""
    if not 1 <= d <= 8:
        raise UnsupportedSurface(f"blow-up count must be in 1..8, got {d}")
    return Surface(f"x{d}")


@dataclass(frozen=True)
class Divisor:
    """An integer divisor class on a fixed surface.

    Supports addition, subtraction, negation and integer scaling; all
    componentwise and only between divisors on the same surface.
    """

    surface: Surface
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.surface.picard_rank:
            raise ValueError(
                f"divisor on {self.surface} needs {self.surface.picard_rank} "
                f"coefficients, got {len(self.coeffs)}"
            )
        if not all(isinstance(c, int) for c in self.coeffs):
            raise ValueError("divisor coefficients must be integers")

    @classmethod
    def parse(cls, surface: Surface, text: str) -> "Divisor":
        """Parse a comma-separated coefficient list like ``3,-1,-1,-1``."""
        try:
            coeffs = tuple(int(part.strip()) for part in text.split(","))
        except ValueError:
            raise ValueError(f"malformed divisor {text!r}") from None
        return cls(surface, coeffs)

    def _check_same(self, other: "Divisor") -> None:
        if self.surface != other.surface:
            raise SurfaceMismatch(
                f"divisors live on different surfaces: {self.surface} vs {other.surface}"
            )

    def __add__(self, other: "Divisor") -> "Divisor":
        self._check_same(other)
        return Divisor(self.surface, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Divisor") -> "Divisor":
        self._check_same(other)
        return Divisor(self.surface, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Divisor":
        return Divisor(self.surface, tuple(-x for x in self.coeffs))

    def __rmul__(self, n: int) -> "Divisor":
        if not isinstance(n, int):
            return NotImplemented
        return Divisor(self.surface, tuple(n * x for x in self.coeffs))

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coeffs)


def zero_divisor(s: Surface) -> Divisor:
    return Divisor(s, (0,) * s.picard_rank)


def line(s: Surface) -> Divisor:
    """The class l: a line on p2, or its pullback on a blow-up."""
    if s.name == "p1xp1":
        raise UnsupportedSurface("p1xp1 has no pullback line class l")
    return Divisor(s, (1,) + (0,) * (s.picard_rank - 1))


def exceptional(s: Surface, i: int) -> Divisor:
    """The i-th exceptional class l_i on a blow-up, i in 1..d."""
    if not s.name.startswith("x"):
        raise UnsupportedSurface(f"{s} has no exceptional classes")
    if not 1 <= i <= s.blowups:
        raise ValueError(f"exceptional index {i} out of range 1..{s.blowups}")
    coeffs = [0] * s.picard_rank
    coeffs[i] = 1
    return Divisor(s, tuple(coeffs))


def intersect(d1: Divisor, d2: Divisor) -> int:
    """Intersection number of two divisor classes.

    On blow-ups: l^2 = 1, l_i^2 = -1, mixed products 0 (so the pairing is
    diag(1, -1, .., -1)).  On p1xp1: f1.f2 = 1, f_i^2 = 0.  On p2: l^2 = 1.
    """
    d1._check_same(d2)
    s = d1.surface
    x, y = d1.coeffs, d2.coeffs
    if s.name == "p2":
        return x[0] * y[0]
    if s.name == "p1xp1":
        return x[0] * y[1] + x[1] * y[0]
    return x[0] * y[0] - sum(x[i] * y[i] for i in range(1, len(x)))


def canonical_class(s: Surface) -> Divisor:
    """The canonical class: -3l + sum l_i on blow-ups, O(-3) on p2, O(-2,-2) on p1xp1."""
    if s.name == "p2":
        return Divisor(s, (-3,))
    if s.name == "p1xp1":
        return Divisor(s, (-2, -2))
    return Divisor(s, (-3,) + (1,) * s.blowups)


def _half(numerator: int) -> int:
    if numerator % 2 != 0:
        raise ChiIntegralityError(f"odd Riemann-Roch numerator {numerator}")
    return numerator // 2


def chi(d: Divisor) -> int:
    """Euler characteristic chi(O(D)) by Riemann-Roch, as an exact integer.

    On a blow-up with D = a*l + sum b_i*l_i this is
    (a+1)(a+2)/2 + sum b_i(1-b_i)/2; on p1xp1 it is (a+1)(b+1); on p2 it is
    (a+1)(a+2)/2.  The half-integer terms always cancel to an integer; a
    failed parity check raises :class:`ChiIntegralityError`.
    """
    s = d.surface
    c = d.coeffs
    if s.name == "p2":
        return _half((c[0] + 1) * (c[0] + 2))
    if s.name == "p1xp1":
        return (c[0] + 1) * (c[1] + 1)
    numerator = (c[0] + 1) * (c[0] + 2) + sum(b * (1 - b) for b in c[1:])
    return _half(numerator)


def is_very_ample(d: Divisor) -> bool:
    """Whether O(D) is very ample (equivalently, ample) on its surface.

    Criteria: on p2, a >= 1; on p1xp1, a >= 1 and b >= 1; on x3/x4, all
    exceptional coefficients <= -1 and every sum of a with two distinct
    exceptional coefficients >= 1.
    """
    s = d.surface
    c = d.coeffs
    if s.name == "p2":
        return c[0] >= 1
    if s.name == "p1xp1":
        return c[0] >= 1 and c[1] >= 1
    if s.name in ("x3", "x4"):
        if any(b > -1 for b in c[1:]):
            return False
        return all(
            c[0] + c[i] + c[j] >= 1
            for i, j in itertools.combinations(range(1, len(c)), 2)
        )
    raise UnsupportedSurface(f"no ampleness criterion implemented for {s}")


# the two notions coincide on every supported surface
is_ample = is_very_ample


def is_globally_generated(d: Divisor) -> bool:
    """Global generation test on x3/x4 (implies effectivity).

    Pattern: exceptional coefficients <= 0 and every triple sum
    a + b_i + b_j >= 0.
    """
    s = d.surface
    if s.name not in ("x3", "x4"):
        raise UnsupportedSurface(f"global generation test only covers x3/x4, not {s}")
    c = d.coeffs
    if any(b > 0 for b in c[1:]):
        return False
    return all(
        c[0] + c[i] + c[j] >= 0
        for i, j in itertools.combinations(range(1, len(c)), 2)
    )


def effectivity_divisors(s: Surface) -> tuple[Divisor, ...]:
    """The fixed list of auxiliary divisors D used by :func:`effectivity_suite`.

    x3: l and the three conics 2l - l_i - l_j together with 2l - l_1 - l_2 - l_3.
    x4: l, the four classes 2l minus three exceptionals, and
    2l - l_1 - l_2 - l_3 - l_4.
    """
    if s.name == "x3":
        return (
            Divisor(s, (1, 0, 0, 0)),
            Divisor(s, (2, -1, -1, -1)),
            Divisor(s, (2, -1, -1, 0)),
            Divisor(s, (2, -1, 0, -1)),
            Divisor(s, (2, 0, -1, -1)),
        )
    if s.name == "x4":
        return (
            Divisor(s, (1, 0, 0, 0, 0)),
            Divisor(s, (2, 0, -1, -1, -1)),
            Divisor(s, (2, -1, 0, -1, -1)),
            Divisor(s, (2, -1, -1, 0, -1)),
            Divisor(s, (2, -1, -1, -1, 0)),
            Divisor(s, (2, -1, -1, -1, -1)),
        )
    raise UnsupportedSurface(f"effectivity suite only covers x3/x4, not {s}")


def effectivity_suite(s: Surface, h: Divisor) -> list[tuple[Divisor, bool]]:
    """For ample H, test H - D for global generation over the fixed D list.

    Every entry is True when H is ample; this is the inequality content of
    the cohomology-concentration argument for the constraint systems.
    """
    if h.surface != s:
        raise SurfaceMismatch(f"polarization lives on {h.surface}, not {s}")
    if not is_very_ample(h):
        raise ValueError(f"polarization {h} is not ample on {s}")
    return [(d, is_globally_generated(h - d)) for d in effectivity_divisors(s)]


def ulrich_dual_twist(s: Surface, h: Divisor) -> Divisor:
    """The twist 3H + K_X appearing in the dual of an Ulrich bundle.

    If E is Ulrich for (X, O(H)) then so is E^dual(3H + K_X); surfaces have
    dimension 2, whence the factor 3 = dim + 1.
    """
    if h.surface != s:
        raise SurfaceMismatch(f"divisor lives on {h.surface}, not {s}")
    return 3 * h + canonical_class(s)

"""Hom/Ext dimensions in the arc model, by two independent routes.

Route one walks the AR quiver: an arc maps nontrivially to the union of rays
over the coray segment down to the mouth on its right, and to the union of
corays over the ray segment of its Serre image.  Route two
(:func:`ext_dim_arc`) never touches quiver coordinates and reads Ext^1
straight off the crossing/neighbouring picture of the two arcs.  Agreement of
the routes on large windows is one of the package's acceptance gates.
"""

from __future__ import annotations

from enum import Enum
from typing import Dict, Iterable, Tuple

from .arcs import (
    Arc,
    require_same_weight,
    suspend,
    to_coord,
    translation_step,
)
from .errors import NoExtension


class HammockSide(Enum):
    """Which half of the Ext-hammock of ``a`` an extension lives in.

    ``BOTH_W0_SIGMA_A`` flags the single overlap point of the two halves:
    weight 0 with last term the suspension of the first, where the Ext-space
    is two-dimensional and both pictures apply.
    """

    FORWARD = "forward"
    BACKWARD = "backward"
    BOTH_W0_SIGMA_A = "both"


# Integer kernels.  These carry the actual formulas; the Arc-level wrappers
# below and the exhaustive acceptance sweeps share them.


def _forward_hom_ints(d: int, ia: int, ja: int, ib: int, jb: int) -> bool:
    if (ia - ib) % d:
        return False
    n = (ia - ib) // d
    return n >= 0 and n <= jb <= ja + n


def _backward_hom_ints(d: int, ia: int, ja: int, ib: int, jb: int) -> bool:
    if (ib - ia) % d:
        return False
    n = (ib - ia) // d
    return 0 <= n <= ja and jb >= ja - n


def _hom_nonzero_ints(w: int, at: int, au: int, bt: int, bu: int) -> bool:
    d = w - 1
    ia, ja = -au, (au - at - 1) // d - 1
    ib, jb = -bu, (bu - bt - 1) // d - 1
    if _forward_hom_ints(d, ia, ja, ib, jb):
        return True
    return _backward_hom_ints(d, ia + w, ja, ib, jb)


def _ext_nonzero_ints(w: int, at: int, au: int, bt: int, bu: int) -> bool:
    # Ext^1(b, a) = Hom(b, suspension of a)
    return _hom_nonzero_ints(w, bt, bu, at - 1, au - 1)


def in_forward_hom(a: Arc, b: Arc) -> bool:
    """True iff b lies in the forward Hom-hammock of a (same weight assumed)."""
    d = translation_step(a.w)
    ca, cb = to_coord(a), to_coord(b)
    return _forward_hom_ints(d, ca.shift, ca.level, cb.shift, cb.level)


def in_backward_hom(a: Arc, b: Arc) -> bool:
    """True iff b lies in the backward Hom-hammock of a."""
    d = translation_step(a.w)
    ca, cb = to_coord(a), to_coord(b)
    return _backward_hom_ints(d, ca.shift, ca.level, cb.shift, cb.level)


def hom_dim(a: Arc, b: Arc) -> int:
    """dim Hom(a, b); one-dimensional on the hammocks, two only at w=0, b=a."""
    w = require_same_weight(a, b)
    translation_step(w)
    if w == 0 and a == b:
        return 2
    return int(_hom_nonzero_ints(w, a.t, a.u, b.t, b.u))


def ext_dim(b: Arc, a: Arc) -> int:
    """dim Ext^1(b, a), computed as dim Hom(b, suspension of a)."""
    return hom_dim(b, suspend(a))


def interior_vertices(a: Arc) -> Tuple[int, ...]:
    """The vertices s(a)+d, s(a)+2d, ..., e(a)-1 governing the Ext-hammock of a."""
    d = translation_step(a.w)
    k = (a.u - a.t - 1) // d
    return tuple(a.t + i * d for i in range(1, k + 1))


def _incidences(b: Arc) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    # (vertex, other endpoint) for both readings of b; identical for loops.
    return ((b.t, b.u), (b.u, b.t))


def in_forward_ext(a: Arc, b: Arc) -> bool:
    """Partial-fountain test for b in the forward Ext-hammock of a.

    Arithmetic membership: one endpoint of b sits on the interior progression
    of a (congruence plus range) and the other clears the forward threshold.
    """
    threshold = a.u + translation_step(a.w)
    return any(
        _in_interior_ints(a.w, a.t, a.u, v, False)
        and (other >= threshold if a.w >= 2 else other <= threshold)
        for v, other in _incidences(b)
    )


def in_backward_ext(a: Arc, b: Arc) -> bool:
    """Partial-fountain test for b in the backward Ext-hammock of a."""
    threshold = a.t - 1
    return any(
        _in_interior_ints(a.w, a.t, a.u, v, False)
        and (other <= threshold if a.w >= 2 else other >= threshold)
        for v, other in _incidences(b)
    )


def hammock_side(b: Arc, a: Arc) -> HammockSide:
    """Locate a non-rigid pair inside the Ext-hammock of ``a``."""
    w = require_same_weight(a, b)
    if ext_dim(b, a) == 0:
        raise NoExtension(f"Ext^1({b},{a}) = 0 at w={w}")
    if w == 0 and b == suspend(a):
        return HammockSide.BOTH_W0_SIGMA_A
    if in_forward_ext(a, b):
        return HammockSide.FORWARD
    return HammockSide.BACKWARD


def _in_interior_ints(w: int, at: int, au: int, v: int, drop_last: bool) -> bool:
    d = w - 1
    r = v - at
    if r % d:
        return False
    i = r // d
    k = (au - at - 1) // d
    if drop_last and i == k:
        return False
    return 1 <= i <= k


def _crossing_ints(at: int, au: int, bt: int, bu: int) -> bool:
    lo1, hi1 = (at, au) if at < au else (au, at)
    lo2, hi2 = (bt, bu) if bt < bu else (bu, bt)
    return lo1 < lo2 < hi1 < hi2 or lo2 < lo1 < hi2 < hi1


def _neighbour_incidence_ints(at: int, au: int, bt: int, bu: int) -> bool:
    # neighbouring (non-crossing, no shared vertex) and touching at-1 or au-1;
    # incidence at those vertices realizes the distance 1 by itself
    if bt in (at, au) or bu in (at, au):
        return False
    if _crossing_ints(at, au, bt, bu):
        return False
    return bt in (at - 1, au - 1) or bu in (at - 1, au - 1)


def _ext_arc_nonzero_ints(w: int, at: int, au: int, bt: int, bu: int) -> bool:
    if w >= 2:
        return _crossing_ints(at, au, bt, bu) and (
            _in_interior_ints(w, at, au, bt, False)
            or _in_interior_ints(w, at, au, bu, False)
        )
    if w <= -1:
        if bt == at - 1 and bu == au - 1:
            return True
        if _crossing_ints(at, au, bt, bu) and (
            _in_interior_ints(w, at, au, bt, True)
            or _in_interior_ints(w, at, au, bu, True)
        ):
            return True
        return _neighbour_incidence_ints(at, au, bt, bu)
    # w == 0
    if at == au:  # loop
        return _neighbour_incidence_ints(at, au, bt, bu) or (bt == at and bu == at - 1)
    return (
        _crossing_ints(at, au, bt, bu)
        or _neighbour_incidence_ints(at, au, bt, bu)
        or (bt == au and bu <= au - 1)
        or (bu == au and bt >= at - 1)
        or (bt == at and au - 1 <= bu <= at - 1)
    )


def ext_dim_arc(b: Arc, a: Arc) -> int:
    """dim Ext^1(b, a) read off the arcs alone (no quiver coordinates).

    For w >= 2 extensions exist exactly at crossings meeting the interior
    vertex set of ``a``; for w <= -1 also at the listed neighbouring
    incidences and at b = suspension(a); w = 0 adds the shared-endpoint rules,
    with loops restricted to the neighbouring and shared-start ones.
    """
    w = require_same_weight(a, b)
    translation_step(w)
    if not _ext_arc_nonzero_ints(w, a.t, a.u, b.t, b.u):
        return 0
    return 2 if w == 0 and b == suspend(a) else 1


class CohomologyVector:
    """Finitely supported map degree -> dimension; the middle-term oracle."""

    __slots__ = ("_dims",)

    def __init__(self, dims: Dict[int, int] | Iterable[Tuple[int, int]] = ()):
        items = dims.items() if isinstance(dims, dict) else dims
        acc: Dict[int, int] = {}
        for degree, dim in items:
            if dim < 0:
                raise ValueError("cohomology dimensions must be nonnegative")
            if dim:
                acc[degree] = acc.get(degree, 0) + dim
        self._dims = acc

    def dim(self, degree: int) -> int:
        return self._dims.get(degree, 0)

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(sorted(self._dims))

    @property
    def total(self) -> int:
        return sum(self._dims.values())

    def euler(self) -> int:
        """Alternating sum of dimensions."""
        return sum(dim if degree % 2 == 0 else -dim for degree, dim in self._dims.items())

    def as_dict(self) -> Dict[int, int]:
        return dict(self._dims)

    def is_zero(self) -> bool:
        return not self._dims

    def __add__(self, other: "CohomologyVector") -> "CohomologyVector":
        merged = dict(self._dims)
        for degree, dim in other._dims.items():
            merged[degree] = merged.get(degree, 0) + dim
        return CohomologyVector(merged)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CohomologyVector) and self._dims == other._dims

    def __hash__(self) -> int:
        return hash(frozenset(self._dims.items()))

    def __repr__(self) -> str:
        inner = ", ".join(f"{n}: {d}" for n, d in sorted(self._dims.items()))
        return f"CohomologyVector({{{inner}}})"


def cohomology(a: Arc) -> CohomologyVector:
    """Cohomology of the indecomposable behind an arc.

    One-dimensional in the ``level + 1`` degrees starting at minus the
    suspension exponent and descending in steps of ``d``; zero elsewhere.
    The absolute normalization is the package gauge (only relative degrees
    are forced), chosen so an unsuspended mouth object sits in degree 0.
    """
    d = translation_step(a.w)
    c = to_coord(a)
    return CohomologyVector({-c.shift - level * d: 1 for level in range(c.level + 1)})

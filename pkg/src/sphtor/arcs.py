"""Arc model of the categories generated by a w-spherical object (w != 1).

Indecomposable objects are encoded as *admissible arcs* of the infinity-gon:
integer pairs ``(t, u)`` stored in a weight-dependent canonical orientation,

* ``t < u``  for ``w >= 2``,
* ``t >= u`` for ``w <= 0``  (``t == u`` is a loop, allowed only at ``w = 0``).

The pair is admissible when its length is at least ``|w|`` and is congruent
to 1 modulo the translation step ``d = w - 1`` (for ``w = 0`` every pair with
``t >= u`` qualifies).  Suspension, AR translate and Serre functor act by
uniform shifts of both endpoints; ``to_coord``/``from_coord`` convert between
arcs and the (suspension exponent, level) coordinates of the AR quiver.
"""

from __future__ import annotations

from enum import Enum
from typing import NamedTuple, Optional, Tuple

from .errors import InvalidArc, WeightHasNoArcModel, WeightMismatch


def translation_step(w: int) -> int:
    """Return the AR-translate step ``d = w - 1``; reject the tube weight."""
    if w == 1:
        raise WeightHasNoArcModel(
            "weight w = 1 has no arc model; use sphtor.tube for that category"
        )
    return w - 1


def _oriented_admissible(w: int, t: int, u: int) -> bool:
    """Admissibility of the *ordered* pair (t, u) in canonical orientation."""
    d = w - 1
    if w >= 2:
        return u - t >= w and (u - t - 1) % d == 0
    if w == 0:
        return u - t <= 0
    return u - t <= w and (u - t - 1) % d == 0


def is_admissible(w: int, x: int, y: int) -> bool:
    """Decide whether the unordered pair {x, y} is an admissible arc for w."""
    translation_step(w)
    return _oriented_admissible(w, x, y) or _oriented_admissible(w, y, x)


class Arc(NamedTuple):
    """An admissible arc ``(t, u)`` of the infinity-gon at weight ``w``.

    Build arcs through :func:`arc`, which canonicalizes the orientation and
    validates admissibility; raw construction skips both.
    """

    t: int
    u: int
    w: int

    @property
    def start(self) -> int:
        return self.t

    @property
    def end(self) -> int:
        return self.u

    @property
    def length(self) -> int:
        return abs(self.u - self.t)

    @property
    def is_loop(self) -> bool:
        return self.t == self.u

    @property
    def vertices(self) -> Tuple[int, int]:
        return (self.t, self.u)

    def __str__(self) -> str:
        return f"({self.t},{self.u})"


def arc(w: int, x: int, y: int) -> Arc:
    """Return the canonical admissible arc on {x, y}, or raise InvalidArc."""
    translation_step(w)
    if _oriented_admissible(w, x, y):
        return Arc(x, y, w)
    if _oriented_admissible(w, y, x):
        return Arc(y, x, w)
    raise InvalidArc(f"({x},{y}) is not an admissible arc for w={w}")


def require_same_weight(a: Arc, b: Arc) -> int:
    if a.w != b.w:
        raise WeightMismatch(f"arcs {a} and {b} carry different weights {a.w} != {b.w}")
    return a.w


def suspend(a: Arc, k: int = 1) -> Arc:
    """Suspension: shift both endpoints by -k."""
    return Arc(a.t - k, a.u - k, a.w)


def translate(a: Arc, k: int = 1) -> Arc:
    """AR translate: shift both endpoints by -k*d."""
    d = translation_step(a.w)
    return Arc(a.t - k * d, a.u - k * d, a.w)


def serre(a: Arc, k: int = 1) -> Arc:
    """Serre functor (= suspension followed by AR translate): shift by -k*w."""
    translation_step(a.w)
    return Arc(a.t - k * a.w, a.u - k * a.w, a.w)


_FUNCTORS = {
    "suspend": suspend,
    "sigma": suspend,
    "translate": translate,
    "tau": translate,
    "serre": serre,
}


def apply_functor(name: str, k: int, a: Arc) -> Arc:
    """Apply a named functor power to an arc (CLI entry point)."""
    try:
        fn = _FUNCTORS[name.lower()]
    except KeyError:
        raise ValueError(f"unknown functor {name!r}; expected suspend/tau/serre") from None
    return fn(a, k)


class QuiverCoord(NamedTuple):
    """Position in a ZA-infinity component: suspension exponent and level."""

    shift: int
    level: int


def to_coord(a: Arc) -> QuiverCoord:
    """Arc -> quiver coordinate, in the gauge that pins level 0, shift 0 to (-d-1, 0)."""
    d = translation_step(a.w)
    span = a.u - a.t - 1
    if span % d != 0:
        raise InvalidArc(f"{a} is not admissible for w={a.w}")
    level = span // d - 1
    if level < 0:
        raise InvalidArc(f"{a} is not admissible for w={a.w}")
    return QuiverCoord(shift=-a.u, level=level)


def from_coord(w: int, c: QuiverCoord) -> Arc:
    """Quiver coordinate -> arc; inverse of :func:`to_coord`."""
    d = translation_step(w)
    if c.level < 0:
        raise InvalidArc(f"level must be >= 0, got {c.level}")
    t = -(c.level + 1) * d - 1 - c.shift
    u = -c.shift
    return Arc(t, u, w)


def component(a: Arc) -> int:
    """Index of the ZA-infinity component containing the arc (mod |d|)."""
    d = translation_step(a.w)
    return to_coord(a).shift % abs(d)


class RelationKind(Enum):
    EQUAL = "equal"
    CROSSING = "crossing"
    NEIGHBOURING = "neighbouring"
    ADJACENT = "adjacent"
    DISJOINT = "disjoint"


class Relation(NamedTuple):
    """How two arcs of the same weight sit relative to each other.

    ``contacts`` lists the distance-1 endpoint realizations (one vertex from
    each arc) when the pair is neighbouring; ``shared_vertex`` is set when the
    pair is adjacent (w = 0, both non-loops, one common vertex).
    """

    kind: RelationKind
    distance: int
    contacts: Tuple[Tuple[int, int], ...] = ()
    shared_vertex: Optional[int] = None


def _crossing(a: Arc, b: Arc) -> bool:
    lo1, hi1 = sorted(a.vertices)
    lo2, hi2 = sorted(b.vertices)
    return lo1 < lo2 < hi1 < hi2 or lo2 < lo1 < hi2 < hi1


def relation(a: Arc, b: Arc) -> Relation:
    """Classify an arc pair: equal, crossing, neighbouring, adjacent or disjoint."""
    w = require_same_weight(a, b)
    gaps = [(abs(p - q), p, q) for p in a.vertices for q in b.vertices]
    distance = min(g for g, _, _ in gaps)
    if a == b:
        return Relation(RelationKind.EQUAL, 0)
    if _crossing(a, b):
        return Relation(RelationKind.CROSSING, distance)
    if distance == 0:
        if w == 0 and not a.is_loop and not b.is_loop:
            shared = next(p for p in a.vertices if p in b.vertices)
            return Relation(RelationKind.ADJACENT, 0, shared_vertex=shared)
        return Relation(RelationKind.DISJOINT, 0)
    if distance == 1:
        contacts = tuple(sorted({(p, q) for g, p, q in gaps if g == 1}))
        return Relation(RelationKind.NEIGHBOURING, 1, contacts=contacts)
    return Relation(RelationKind.DISJOINT, distance)


def arcs_in_window(w: int, lo: int, hi: int):
    """Yield every admissible arc with both endpoints in [lo, hi], sorted."""
    translation_step(w)
    for t in range(lo, hi + 1):
        for u in range(t, hi + 1) if w >= 2 else range(lo, t + 1):
            if _oriented_admissible(w, t, u):
                yield Arc(t, u, w)

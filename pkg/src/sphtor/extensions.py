"""Middle terms of extensions and their arc-level calculus.

An extension with indecomposable outer terms has at most two indecomposable
middle summands, and they connect endpoints of the two outer arcs.  This
module computes them (``middle_terms``), the symmetric summand set
(``e_set``), the crossing/neighbouring/adjacent connector arcs
(``ptolemy_arcs``), the closed-form cohomology of the middle term, and the
ordered multi-extension formula for several Hom-orthogonal last terms.
"""

from __future__ import annotations

from enum import Enum
from typing import List, NamedTuple, Optional, Sequence, Tuple

from .arcs import (
    Arc,
    RelationKind,
    _oriented_admissible,
    arc,
    is_admissible,
    relation,
    require_same_weight,
    suspend,
    to_coord,
    translation_step,
)
from .errors import NoExtension, NonOrthogonalInput, NotInHammock
from .hammocks import (
    CohomologyVector,
    HammockSide,
    ext_dim,
    hammock_side,
    hom_dim,
)


class ExtensionClass(NamedTuple):
    """One non-split triangle shape: outer arcs plus middle summands.

    ``middles`` is the multiset of indecomposable middle summands (empty for
    a zero middle term); ``side`` records which half of the hammock the last
    term sits in, which fixes the middle-cohomology closed form.
    """

    first: Arc
    last: Arc
    middles: Tuple[Arc, ...]
    side: HammockSide


class PtolemyArcs(NamedTuple):
    """Admissible connector arcs of a pair, by class."""

    class_i: frozenset
    class_ii: frozenset
    class_iii: frozenset

    @property
    def all(self) -> frozenset:
        return self.class_i | self.class_ii | self.class_iii


def _keep(w: int, t: int, u: int) -> Optional[Arc]:
    # Oriented admissibility: the formula arcs are ordered pairs and a zero
    # summand is exactly an orientation/congruence failure of that order.
    return Arc(t, u, w) if _oriented_admissible(w, t, u) else None


def _middle_pairs(a: Arc, b: Arc, side: HammockSide) -> List[Arc]:
    w = a.w
    if side is HammockSide.FORWARD:
        candidates = [(a.t, b.u), (b.t, a.u)]
    else:
        candidates = [(b.t, a.t), (b.u, a.u)]
    return [m for t, u in candidates if (m := _keep(w, t, u)) is not None]


def middle_terms(a: Arc, b: Arc) -> List[ExtensionClass]:
    """All basis extension shapes of ``b`` by ``a`` (empty list if rigid).

    At w = 0 with ``b`` the suspension of ``a`` the Ext-space is
    two-dimensional and two shapes come back: the almost-split one and the
    zero-middle one tied to the identity map.
    """
    w = require_same_weight(a, b)
    if ext_dim(b, a) == 0:
        return []
    if w == 0 and b == suspend(a):
        forward = tuple(sorted(_middle_pairs(a, b, HammockSide.FORWARD)))
        return [
            ExtensionClass(a, b, forward, HammockSide.FORWARD),
            ExtensionClass(a, b, (), HammockSide.BACKWARD),
        ]
    side = hammock_side(b, a)
    return [ExtensionClass(a, b, tuple(sorted(_middle_pairs(a, b, side))), side)]


def e_set(a: Arc, b: Arc) -> frozenset:
    """Middle summands of extensions in both directions, minus the pair itself."""
    require_same_weight(a, b)
    out = set()
    for cls in middle_terms(a, b):
        out.update(cls.middles)
    for cls in middle_terms(b, a):
        out.update(cls.middles)
    out.discard(a)
    out.discard(b)
    return frozenset(out)


def _connector(w: int, x: int, y: int) -> Optional[Arc]:
    return arc(w, x, y) if is_admissible(w, x, y) else None


def ptolemy_arcs(a: Arc, b: Arc) -> PtolemyArcs:
    """Connector arcs of a pair: class I (crossing), II (neighbouring, w <= 0),
    III (adjacent, w = 0; a = b allowed), each filtered by admissibility."""
    w = require_same_weight(a, b)
    class_i: set = set()
    class_ii: set = set()
    class_iii: set = set()
    if a == b:
        if w == 0 and not a.is_loop:
            class_iii = {Arc(a.t, a.t, w), Arc(a.u, a.u, w)}
        return PtolemyArcs(frozenset(class_i), frozenset(class_ii), frozenset(class_iii))
    rel = relation(a, b)
    if rel.kind is RelationKind.CROSSING:
        vertices = {a.t, a.u, b.t, b.u}
        for x in vertices:
            for y in vertices:
                if x >= y:
                    continue
                if {x, y} in ({a.t, a.u}, {b.t, b.u}):
                    continue
                if (m := _connector(w, x, y)) is not None:
                    class_i.add(m)
    elif rel.kind is RelationKind.NEIGHBOURING and w <= 0:
        endpoints = [a.t, a.u, b.t, b.u]
        for p, q in rel.contacts:
            rest = list(endpoints)
            rest.remove(p)
            rest.remove(q)
            if (m := _connector(w, rest[0], rest[1])) is not None:
                class_ii.add(m)
    elif rel.kind is RelationKind.ADJACENT:
        x = rel.shared_vertex
        rest = [v for v in (a.t, a.u) if v != x] + [v for v in (b.t, b.u) if v != x]
        class_iii.add(Arc(x, x, w))
        if (m := _connector(w, rest[0], rest[1])) is not None:
            class_iii.add(m)
    return PtolemyArcs(frozenset(class_i), frozenset(class_ii), frozenset(class_iii))


def middle_cohomology(a: Arc, b: Arc, side: HammockSide) -> CohomologyVector:
    """Closed-form cohomology of the middle term of the (a -> ? -> b) triangle.

    ``side`` selects the forward (ray) or backward (coray) formula; at w = 0
    with b the suspension of a, the backward class is the identity-map
    triangle and its middle has no cohomology at all.
    """
    w = require_same_weight(a, b)
    d = translation_step(w)
    if ext_dim(b, a) == 0:
        raise NoExtension(f"Ext^1({b},{a}) = 0 at w={w}")
    if side is HammockSide.BOTH_W0_SIGMA_A:
        raise ValueError("pick FORWARD or BACKWARD to select one of the two classes")
    ca, cb = to_coord(a), to_coord(b)
    r = ca.level
    dims: dict = {}
    if side is HammockSide.FORWARD:
        s = (ca.shift - cb.shift) // d
        i = r + s - cb.level
        if not (s >= 1 and 1 <= i <= r + 1):
            raise NoExtension(f"{b} is not in the forward Ext-hammock of {a}")
        for j in range(-s, 0):
            dims[-j * d] = 1
        for j in range(0, r - i + 1):
            dims[-j * d] = 2
        for j in range(r - i + 1, r + 1):
            dims[-j * d] = 1
    else:
        i = (cb.shift - ca.shift - 1) // d
        s = cb.level + i - r
        if (cb.shift - ca.shift - 1) % d != 0 or not (0 <= i <= r and s >= 0):
            raise NoExtension(f"{b} is not in the backward Ext-hammock of {a}")
        for j in range(0, i):
            dims[-j * d] = 1
        for j in range(r + 1, r + s + 1):
            dims[-j * d - 1] = 1
    return CohomologyVector({degree - ca.shift: dim for degree, dim in dims.items()})


class IntervalKind(Enum):
    RAY = "ray"
    CORAY = "coray"


class ExtendedInterval:
    """Extended ray or coray of a hammock member: every arc at one vertex.

    Gluing the ray piece through the mouth to the Serre-twisted coray piece
    sweeps out exactly the admissible arcs incident with a single vertex, so
    the object reduces to that vertex plus membership/enumeration helpers.
    """

    __slots__ = ("vertex", "w")

    def __init__(self, vertex: int, w: int):
        translation_step(w)
        self.vertex = vertex
        self.w = w

    def contains(self, x: Arc) -> bool:
        return x.w == self.w and self.vertex in x.vertices

    def arcs_within(self, lo: int, hi: int) -> Tuple[Arc, ...]:
        out = [
            arc(self.w, self.vertex, other)
            for other in range(lo, hi + 1)
            if is_admissible(self.w, self.vertex, other)
        ]
        return tuple(sorted(out))

    def meet(self, other: "ExtendedInterval") -> Optional[Arc]:
        """The unique arc on both extended intervals, if admissible."""
        if is_admissible(self.w, self.vertex, other.vertex):
            return arc(self.w, self.vertex, other.vertex)
        return None

    def __repr__(self) -> str:
        return f"ExtendedInterval(vertex={self.vertex}, w={self.w})"


def _side_for_order(a: Arc, b: Arc) -> HammockSide:
    side = hammock_side(b, a)
    if side is HammockSide.BOTH_W0_SIGMA_A:
        raise NotInHammock(
            f"{b} sits in both hammock halves of {a} (w=0 suspension); "
            "its extended ray is ambiguous"
        )
    return side


def _key_vertex(b: Arc, side: HammockSide) -> int:
    return b.t if side is HammockSide.FORWARD else b.u


def extended_interval(a: Arc, b: Arc, kind: IntervalKind) -> ExtendedInterval:
    """Extended ray/coray of ``b`` with respect to ``a`` (b in the hammock)."""
    require_same_weight(a, b)
    if ext_dim(b, a) == 0:
        raise NotInHammock(f"{b} is not in the Ext-hammock of {a}")
    side = _side_for_order(a, b)
    if kind is IntervalKind.RAY:
        vertex = _key_vertex(b, side)
    else:
        vertex = b.u if side is HammockSide.FORWARD else b.t
    return ExtendedInterval(vertex, a.w)


def exray_leq(a: Arc, b1: Arc, b2: Arc) -> bool:
    """Total order on extended rays inside the Ext-hammock of ``a``.

    Comparison is by a nonnegative translate power carrying one mouth anchor
    to the other (through the Serre twist when the sides differ), which at
    arc level is a divisibility-and-sign test on the two key vertices.
    """
    require_same_weight(a, b1)
    require_same_weight(a, b2)
    d = translation_step(a.w)
    k1 = _key_vertex(b1, _side_for_order(a, b1))
    k2 = _key_vertex(b2, _side_for_order(a, b2))
    diff = k2 - k1
    return diff % d == 0 and diff // d >= 0


class MultiExtensionOutcome(NamedTuple):
    """One possible middle multiset of a multi-term extension.

    ``map_class`` is ``generic`` except at w = 0 with the suspension of the
    base among the last terms, where the triangle depends on whether the map
    on that summand is an isomorphism.
    """

    middles: Tuple[Arc, ...]
    map_class: str


def _ordered_formula_middles(a: Arc, ordered: Sequence[Arc]) -> List[Arc]:
    # e' of the least term, the consecutive connectors, e'' of the greatest.
    sides = [_side_for_order(a, b) for b in ordered]
    out: List[Arc] = []
    first, last = ordered[0], ordered[-1]
    if sides[0] is HammockSide.FORWARD:
        e_first = _keep(a.w, a.t, first.u)
    else:
        e_first = _keep(a.w, first.t, a.t)
    if e_first is not None:
        out.append(e_first)
    for b_cur, s_cur, b_nxt, s_nxt in zip(ordered, sides, ordered[1:], sides[1:]):
        ray_vertex = _key_vertex(b_cur, s_cur)
        coray_vertex = b_nxt.u if s_nxt is HammockSide.FORWARD else b_nxt.t
        if is_admissible(a.w, ray_vertex, coray_vertex):
            out.append(arc(a.w, ray_vertex, coray_vertex))
    if sides[-1] is HammockSide.FORWARD:
        e_last = _keep(a.w, last.t, a.u)
    else:
        e_last = _keep(a.w, last.u, a.u)
    if e_last is not None:
        out.append(e_last)
    return out


def middle_term_multi(a: Arc, bs: Sequence[Arc]) -> List[MultiExtensionOutcome]:
    """Middle summands of the extension of a direct sum of hammock members by ``a``.

    Duplicate last terms split off unchanged.  The remaining distinct terms
    must be pairwise Hom-orthogonal (otherwise the triangle reduces and
    :class:`NonOrthogonalInput` reports the factoring witness); they are
    sorted along the extended-ray order and assembled by the alternating
    end-summand/connector formula.  At w = 0 a listed suspension of ``a`` is
    handled separately and two tagged outcomes come back.
    """
    if not bs:
        raise ValueError("need at least one last term")
    w = a.w
    for b in bs:
        require_same_weight(a, b)
        if ext_dim(b, a) == 0:
            raise NotInHammock(f"{b} is not in the Ext-hammock of {a}")
    counts: dict = {}
    for b in bs:
        counts[b] = counts.get(b, 0) + 1
    distinct = sorted(counts)
    extras: List[Arc] = [b for b in distinct for _ in range(counts[b] - 1)]

    sigma = suspend(a)
    if w == 0 and sigma in distinct:
        rest = [b for b in distinct if b != sigma]
        if not rest:
            iso_mid: Tuple[Arc, ...] = ()
            ar_cls = middle_terms(a, sigma)[0]
            non_iso_mid = ar_cls.middles
        else:
            _check_orthogonal(rest)
            core = _ordered_formula_middles(a, _sorted_by_exray(a, rest))
            iso_mid = tuple(sorted(rest))
            non_iso_mid = tuple(sorted(core + [sigma]))
        extra_t = tuple(sorted(extras))
        return [
            MultiExtensionOutcome(tuple(sorted(iso_mid + extra_t)), "isomorphism"),
            MultiExtensionOutcome(tuple(sorted(non_iso_mid + extra_t)), "non_isomorphism"),
        ]

    _check_orthogonal(distinct)
    core = _ordered_formula_middles(a, _sorted_by_exray(a, distinct))
    return [MultiExtensionOutcome(tuple(sorted(core + extras)), "generic")]


def _check_orthogonal(arcs_list: Sequence[Arc]) -> None:
    for i, x in enumerate(arcs_list):
        for y in arcs_list[i + 1 :]:
            if hom_dim(x, y) or hom_dim(y, x):
                raise NonOrthogonalInput(
                    f"{x} and {y} are not Hom-orthogonal; the extension reduces by "
                    "splitting the factoring summand off unchanged",
                    witness=(x, y),
                )


def _sorted_by_exray(a: Arc, arcs_list: Sequence[Arc]) -> List[Arc]:
    d = translation_step(a.w)
    sign = 1 if d > 0 else -1
    return sorted(arcs_list, key=lambda b: sign * _key_vertex(b, _side_for_order(a, b)))


def middle_term_multi_by_iteration(a: Arc, bs: Sequence[Arc]) -> Tuple[Arc, ...]:
    """Independent route to the multi-extension middle: iterated pair splicing.

    Starting from the two-term calculus for the least term, each further term
    replaces the running coray-side summand with the middle of its own
    extension against that summand.  Used as the differential oracle for
    :func:`middle_term_multi`; inputs must be Hom-orthogonal non-suspension
    terms.
    """
    ordered = _sorted_by_exray(a, list(bs))
    first = ordered[0]
    current: List[Arc] = list(middle_terms(a, first)[0].middles)

    def coray_summand(b: Arc) -> Optional[Arc]:
        side = _side_for_order(a, b)
        if side is HammockSide.FORWARD:
            return _keep(a.w, b.t, a.u)
        return _keep(a.w, b.u, a.u)

    prev = coray_summand(first)
    for b in ordered[1:]:
        if prev is None:
            current.append(b)
        else:
            step = middle_terms(prev, b)
            current.remove(prev)
            current.extend(step[0].middles)
        prev = coray_summand(b)
    return tuple(sorted(current))

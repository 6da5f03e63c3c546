"""The Bass-Serre tree of an amalgam, as a lazily expanded graph.

Vertices are the left cosets gA and gB, edges the cosets gC; the group acts
by left multiplication, preserving the two sides (no edge inversions), so
the tree is bipartite and all translation lengths are even.

A vertex is canonically keyed by the syllable string of its coset: the head
and any trailing same-side syllable are stripped.  With that convention the
vertex set is exactly the set of alternating syllable strings, each vertex's
parent is obtained by dropping the last syllable, and the two base vertices
(empty key, either side) are adjacent.  Displacements d(v, g.v) are computed
on these strings; the public distance operation is a capped bidirectional
BFS over the same adjacency.
"""
from __future__ import annotations

from dataclasses import dataclass

from .amalgam import (
    SIDE_A,
    SIDE_B,
    AmalgamSpec,
    NormalForm,
    cyclic_reduce,
    identity_nf,
    invert,
    multiply,
)


@dataclass(frozen=True)
class TreeVertex:
    side: int
    key: tuple[tuple[int, int], ...]

    def sort_key(self):
        return (len(self.key), self.key, self.side)


def base_vertex(side: int) -> TreeVertex:
    return TreeVertex(side, ())


BASE_A = base_vertex(SIDE_A)
BASE_B = base_vertex(SIDE_B)


def vertex_of(spec: AmalgamSpec, g: NormalForm, side: int) -> TreeVertex:
    """Canonical vertex of the coset g*(A or B)."""
    syl = g.syllables
    if syl and syl[-1][0] == side:
        syl = syl[:-1]
    return TreeVertex(side, syl)


def _rep(spec: AmalgamSpec, v: TreeVertex) -> NormalForm:
    """A coset representative of v with trivial head."""
    return NormalForm(v.key, spec.C.identity)


def act(spec: AmalgamSpec, g: NormalForm, v: TreeVertex) -> TreeVertex:
    return vertex_of(spec, multiply(spec, g, _rep(spec, v)), v.side)


def neighbors(spec: AmalgamSpec, v: TreeVertex) -> list[TreeVertex]:
    """Adjacent vertices: for gA these are g t B over the transversal of C in
    A (t = identity giving gB), and symmetrically."""
    other = SIDE_B if v.side == SIDE_A else SIDE_A
    fac = spec.factor(v.side)
    out = []
    for t in spec.transversal(v.side).reps:
        if t == fac.identity:
            key = v.key
            if key and key[-1][0] == other:
                key = key[:-1]
            out.append(TreeVertex(other, key))
        else:
            out.append(TreeVertex(other, v.key + ((v.side, t),)))
    return out


def _parent(v: TreeVertex) -> TreeVertex | None:
    if not v.key:
        return None
    return TreeVertex(v.key[-1][0], v.key[:-1])


def tree_distance(u: TreeVertex, v: TreeVertex) -> int:
    """Exact tree distance from the canonical keys (ancestor-chain walk).

    The chain from u is extended across the base edge so that it contains
    both roots; the first vertex of v's chain on u's chain is the median.
    """
    if u == v:
        return 0
    chain: dict[TreeVertex, int] = {}
    node: TreeVertex | None = u
    d = 0
    while node is not None:
        chain[node] = d
        nxt = _parent(node)
        if nxt is None:
            other = base_vertex(SIDE_B if node.side == SIDE_A else SIDE_A)
            chain[other] = d + 1
        node = nxt
        d += 1
    node, d = v, 0
    while node not in chain:
        node = _parent(node)
        d += 1
    return d + chain[node]


def distance(spec: AmalgamSpec, u: TreeVertex, v: TreeVertex,
             radius: int | None = None) -> int | None:
    """Tree distance via bidirectional BFS over the lazy adjacency; None when
    a radius cap is given and exceeded.  First contact is exact in a tree."""
    if u == v:
        return 0
    du, dv = {u: 0}, {v: 0}
    fu, fv = [u], [v]
    ru = rv = 0
    while True:
        if radius is not None and ru + rv >= radius:
            return None
        if len(fu) <= len(fv):
            frontier, mine, theirs = fu, du, dv
        else:
            frontier, mine, theirs = fv, dv, du
        depth = mine[frontier[0]] + 1
        nxt = []
        for x in frontier:
            for y in neighbors(spec, x):
                if y in mine:
                    continue
                mine[y] = depth
                if y in theirs:
                    return depth + theirs[y]
                nxt.append(y)
        if mine is du:
            fu, ru = nxt, depth
        else:
            fv, rv = nxt, depth


def geodesic(u: TreeVertex, v: TreeVertex) -> list[TreeVertex]:
    """The vertex path from u to v (inclusive), via ancestor chains."""
    chain_u = [u]
    while _parent(chain_u[-1]) is not None:
        chain_u.append(_parent(chain_u[-1]))
    other = base_vertex(SIDE_B if chain_u[-1].side == SIDE_A else SIDE_A)
    chain_u.append(other)
    index = {x: i for i, x in enumerate(chain_u)}
    chain_v = [v]
    while chain_v[-1] not in index:
        p = _parent(chain_v[-1])
        if p is None:
            p = base_vertex(SIDE_B if chain_v[-1].side == SIDE_A else SIDE_A)
        chain_v.append(p)
    meet = chain_v[-1]
    return chain_u[:index[meet] + 1] + list(reversed(chain_v[:-1]))


def ball(spec: AmalgamSpec, center: TreeVertex, radius: int) -> list[TreeVertex]:
    """All vertices within the radius, in BFS discovery order."""
    seen = {center}
    out = [center]
    frontier = [center]
    for _ in range(radius):
        nxt = []
        for x in frontier:
            for y in neighbors(spec, x):
                if y not in seen:
                    seen.add(y)
                    out.append(y)
                    nxt.append(y)
        frontier = nxt
    return out


def displacement(spec: AmalgamSpec, g: NormalForm, v: TreeVertex) -> int:
    return tree_distance(v, act(spec, g, v))


@dataclass(frozen=True)
class Classification:
    verdict: str                      # "elliptic" | "hyperbolic"
    tau: int
    witness: TreeVertex
    witness_image: TreeVertex
    radius: int | None = None
    cross_checked: bool = False

    @property
    def elliptic(self) -> bool:
        return self.verdict == "elliptic"

    @property
    def hyperbolic(self) -> bool:
        return self.verdict == "hyperbolic"


def classify(spec: AmalgamSpec, g: NormalForm,
             radius: int | None = None) -> Classification:
    """Elliptic/hyperbolic verdict with translation length and witnesses.

    Primary path: cyclic reduction.  A core of syllable length <= 1 lies in a
    factor up to conjugacy (elliptic); otherwise the core is alternating with
    ends on different sides, the translation length equals its syllable
    length (even), and the conjugated base vertices lie on the axis.

    When a radius is supplied the verdict is cross-checked by minimising
    d(v, g.v) over the ball of that radius around the base; radius >=
    2 * syllable length is sufficient for the minimum to be attained.
    """
    core, conj = cyclic_reduce(spec, g)
    n = len(core.syllables)
    if n <= 1:
        if n == 0:
            w = act(spec, conj, BASE_A)
        else:
            w = act(spec, conj, base_vertex(core.syllables[0][0]))
        cls = Classification("elliptic", 0, w, w)
    else:
        assert n % 2 == 0, "translation lengths on the bipartite tree are even"
        w = act(spec, conj, BASE_A)
        cls = Classification("hyperbolic", n, w, act(spec, g, w))
    if radius is None:
        return cls
    needed = 2 * len(g.syllables)
    verified = radius >= needed
    if verified:
        m = min(displacement(spec, g, v) for v in ball(spec, BASE_A, radius))
        if m != cls.tau:
            raise AssertionError(
                f"classification cross-check failed: ball minimum {m}, "
                f"cyclic reduction gives {cls.tau}")
    return Classification(cls.verdict, cls.tau, cls.witness, cls.witness_image,
                          radius=radius, cross_checked=verified)


class VerdictError(ValueError):
    pass


def fixed_set(spec: AmalgamSpec, g: NormalForm, radius: int) -> list[TreeVertex]:
    """All fixed vertices within `radius` of a fixed witness; the result is a
    connected subtree.  Refuses hyperbolic input."""
    cls = classify(spec, g)
    if not cls.elliptic:
        raise VerdictError("fixed_set requires an elliptic element")
    fixed = [v for v in ball(spec, cls.witness, radius)
             if act(spec, g, v) == v]
    fixed.sort(key=TreeVertex.sort_key)
    return fixed


def axis_segment(spec: AmalgamSpec, g: NormalForm, radius: int) -> list[TreeVertex]:
    """Vertices v with d(v, g.v) = tau within the ball, ordered along the
    axis; g translates the returned list by tau positions on the overlap."""
    cls = classify(spec, g)
    if not cls.hyperbolic:
        raise VerdictError("axis_segment requires a hyperbolic element")
    verts = [v for v in ball(spec, cls.witness, radius)
             if displacement(spec, g, v) == cls.tau]
    end = max(verts, key=lambda v: (tree_distance(v, cls.witness), v.sort_key()))
    verts.sort(key=lambda v: (tree_distance(v, end), v.sort_key()))
    for a, b in zip(verts, verts[1:]):
        if tree_distance(a, b) != 1:
            raise AssertionError("axis segment is not a path at this radius")
    return verts


def on_axis(spec: AmalgamSpec, g: NormalForm, tau: int, v: TreeVertex) -> bool:
    """Exact axis membership: v lies on the axis iff d(v, g.v) = tau."""
    return displacement(spec, g, v) == tau


@dataclass(frozen=True)
class EllipticProductReport:
    applicable: bool
    passed: bool
    tau: int | None
    fix_distance: int | None
    detail: str


def elliptic_product_check(spec: AmalgamSpec, x: NormalForm, y: NormalForm,
                           radius: int) -> EllipticProductReport:
    """For elliptic x, y with disjoint fixed sets, verify that x y^-1 is
    hyperbolic with tau = 2 d(Fix(x), Fix(y)) and that its axis contains the
    segment between the fixed sets together with its x- and y-images."""
    for g in (x, y):
        if not classify(spec, g).elliptic:
            raise VerdictError("elliptic_product_check requires elliptic inputs")
    fx = fixed_set(spec, x, radius)
    fy = fixed_set(spec, y, radius)
    if set(fx) & set(fy):
        return EllipticProductReport(False, False, None, None,
                                     "fixed sets intersect within the radius")
    pairs = ((tree_distance(u, v), u, v) for u in fx for v in fy)
    d, u, v = min(pairs, key=lambda t: (t[0], t[1].sort_key(), t[2].sort_key()))
    g = multiply(spec, x, invert(spec, y))
    cls = classify(spec, g)
    if not cls.hyperbolic or cls.tau != 2 * d:
        return EllipticProductReport(
            True, False, cls.tau, d,
            f"expected hyperbolic with tau={2*d}, got {cls.verdict} tau={cls.tau}")
    segment = geodesic(u, v)
    for w in segment:
        for img in (w, act(spec, x, w), act(spec, y, w)):
            if not on_axis(spec, g, cls.tau, img):
                return EllipticProductReport(
                    True, False, cls.tau, d, f"axis misses {img}")
    return EllipticProductReport(True, True, cls.tau, d,
                                 "tau = 2 d(Fix,Fix); segment and images on axis")


def common_invariant_line(spec: AmalgamSpec, elements: list[NormalForm],
                          radius: int) -> list[TreeVertex] | None:
    """A common invariant line for all the elements, as an ordered segment
    within the ball, or None.

    The candidate is the axis of a hyperbolic element among the inputs or
    their pairwise products; every element must map the candidate's ball
    portion back onto the axis (exact membership test)."""
    candidates = []
    for g in elements:
        if classify(spec, g).hyperbolic:
            candidates.append(g)
    if not candidates:
        for i, x in enumerate(elements):
            for y in elements[i + 1:]:
                p = multiply(spec, x, y)
                if classify(spec, p).hyperbolic:
                    candidates.append(p)
    if not candidates:
        return None
    h = candidates[0]
    tau = classify(spec, h).tau
    segment = axis_segment(spec, h, radius)
    for g in elements:
        for v in segment:
            if not on_axis(spec, h, tau, act(spec, g, v)):
                return None
    return segment

"""Bad 5-edges, bad and gross separators, star decompositions, cross-eyed twists.

Only chordal diagrams are handled here.  A head of a bad edge is a maximal
irreducible simplex ``{a, b, c}`` of type G3 containing it; ``a`` and ``b``
are the eyes (the commuting pair) and ``c`` is the bad focus.
"""
from __future__ import annotations

from dataclasses import dataclass

from .chordal import _close_to, components_without, is_chordal
from .diagram import INFINITY, PDiagram, perp
from .errors import InvariantViolation, NoBadSeparators, NotABadEdge, NotChordal
from .spherical import classify_irreducible


def _extensions(d, A):
    """Vertices outside A with finite labels to all of A and a C-edge to some of A."""
    out = []
    for u in d.generators:
        if u in A:
            continue
        labels = [d.m(u, a) for a in A]
        if INFINITY not in labels and max(labels) > 2:
            out.append(u)
    return out


def _qualifies(d, x, y):
    if d.m(x, y) != 5:
        return False
    seen = set()
    frontier = [frozenset((x, y))]
    while frontier:
        nxt = []
        for A in frontier:
            for u in _extensions(d, A):
                B = A | {u}
                if B in seen:
                    continue
                seen.add(B)
                ft = classify_irreducible(d, B)
                if ft is None or ft.family != "G":
                    return False
                nxt.append(B)
        frontier = nxt
    return True


def candidate_bad_edges(d: PDiagram) -> list[tuple[str, str]]:
    """Label-5 edges all of whose proper irreducible simplex extensions are G3 or G4."""
    return [(s, t) for s, t, m in d.edges() if m == 5 and _qualifies(d, s, t)]


@dataclass(frozen=True)
class Head:
    members: frozenset
    eyes: tuple
    bad_focus: str


def _heads(d, edge):
    x, y = edge
    out = []
    for w in _extensions(d, {x, y}):
        A = frozenset((x, y, w))
        if _extensions(d, A):
            continue  # lies in a G4, not maximal
        eyes = next((p, q) for p in sorted(A) for q in sorted(A) if p < q and d.m(p, q) == 2)
        (c,) = A - set(eyes)
        out.append(Head(A, eyes, c))
    out.sort(key=lambda h: sorted(h.members))
    return out


def _normalize_edge(d, edge):
    try:
        x, y = edge
    except (TypeError, ValueError):
        raise NotABadEdge(f"edge must be a pair of generators, got {edge!r}") from None
    d.check((x, y))
    x, y = sorted((x, y))
    if x == y or not _qualifies(d, x, y):
        raise NotABadEdge(f"{{{x}, {y}}} is not a qualifying 5-edge")
    if not is_chordal(d):
        raise NotChordal("bad separators are only computed for chordal diagrams")
    return x, y


@dataclass(frozen=True)
class BadSeparator:
    members: frozenset
    head: frozenset
    eyes: tuple
    bad_focus: str
    foci: frozenset
    focus_components: tuple

    def to_json(self):
        return {"members": sorted(self.members), "head": sorted(self.head), "eyes": list(self.eyes),
                "bad_focus": self.bad_focus, "foci": sorted(self.foci),
                "focus_components": [sorted(k) for k in self.focus_components]}


@dataclass(frozen=True)
class GrossSeparator:
    members: frozenset
    head: frozenset
    eyes: tuple
    bad_focus: str
    foci: frozenset
    focus_components: tuple

    def to_json(self):
        return {"members": sorted(self.members), "head": sorted(self.head), "eyes": list(self.eyes),
                "bad_focus": self.bad_focus, "foci": sorted(self.foci),
                "focus_components": [sorted(k) for k in self.focus_components]}


def _sort_key(sep):
    return (len(sep.members), sorted(sep.members), sorted(sep.head))


def _bad_separators(d, edge):
    adj = d.adjacency()
    out = []
    for head in _heads(d, edge):
        a, b = head.eyes
        c = head.bad_focus
        bound = {a, b} | perp(d, head.members)
        found = set()
        for w in d.generators:
            if w in head.members or w in bound:
                continue
            if w in adj[a] and w in adj[b] and w not in adj[c]:
                B = _close_to(adj, {c}, w)
                if {a, b} <= B <= bound:
                    found.add(B)
        for B in found:
            comps = [K for K in components_without(adj, B)
                     if c not in K and all(adj[v] & K for v in B)]
            comps.sort(key=sorted)
            out.append(BadSeparator(B, head.members, head.eyes, c,
                                    frozenset().union(*comps), tuple(comps)))
    out.sort(key=_sort_key)
    return out


def bad_separators(d: PDiagram, edge) -> list[BadSeparator]:
    """Bad separators for the declared bad edge, over all of its heads."""
    return _bad_separators(d, _normalize_edge(d, edge))


def gross_separators(d: PDiagram, edge) -> list[GrossSeparator]:
    edge = _normalize_edge(d, edge)
    adj = d.adjacency()
    out = []
    for head in _heads(d, edge):
        a, b = head.eyes
        c = head.bad_focus
        D = frozenset({a, b} | perp(d, head.members))
        comps = [K for K in components_without(adj, D)
                 if c not in K and adj[a] & K and adj[b] & K]
        if not comps:
            continue
        comps.sort(key=sorted)
        out.append(GrossSeparator(D, head.members, head.eyes, c,
                                  frozenset().union(*comps), tuple(comps)))
    out.sort(key=_sort_key)
    return out


@dataclass(frozen=True)
class StarDecomposition:
    edge: tuple
    center: frozenset
    arms: tuple  # BadSeparator per arm

    def to_json(self):
        return {"edge": list(self.edge), "center": sorted(self.center),
                "arms": [{"separator": sorted(arm.members), "eyes": list(arm.eyes),
                          "foci": sorted(arm.foci)} for arm in self.arms]}


def _check_star(d, edge, center, arms):
    for i, p in enumerate(arms):
        for q in arms[i + 1:]:
            if p.foci & q.foci:
                raise InvariantViolation(f"foci of {sorted(p.members)} and {sorted(q.members)} overlap")
            for s in p.foci:
                for t in q.foci:
                    if d.m(s, t) != INFINITY:
                        raise InvariantViolation(f"foci {s} and {t} of different arms are joined")
    if not set(edge) <= center:
        raise InvariantViolation("bad edge is not in the center")
    if _bad_separators(d.induced(center), edge):
        raise InvariantViolation("center still has a bad separator")


def star_decomposition(d: PDiagram, edge) -> StarDecomposition:
    edge = _normalize_edge(d, edge)
    arms = _bad_separators(d, edge)
    foci = frozenset().union(*(arm.foci for arm in arms))
    center = frozenset(d.generators) - foci
    _check_star(d, edge, center, arms)
    return StarDecomposition(edge, center, tuple(arms))


def cross_eyed_twist(d: PDiagram, edge) -> PDiagram:
    """Swap the eyes of every arm on the edges running into that arm's foci."""
    sd = star_decomposition(d, edge)
    if not sd.arms:
        raise NoBadSeparators(f"edge {{{sd.edge[0]}, {sd.edge[1]}}} has no bad separator")
    changes = {}
    for arm in sd.arms:
        a, b = arm.eyes
        for t in arm.foci:
            changes[(a, t)] = d.m(b, t)
            changes[(b, t)] = d.m(a, t)
    return d.with_labels(changes)


@dataclass(frozen=True)
class CrossEyedMove:
    edge: tuple

    kind = "cross_eyed"

    def to_json(self):
        return {"kind": "cross_eyed", "edge": list(self.edge)}

    def apply(self, d: PDiagram) -> PDiagram:
        return cross_eyed_twist(d, self.edge)

    def rename(self, mapping):
        return CrossEyedMove(tuple(sorted(mapping.get(x, x) for x in self.edge)))


def cross_eyed_moves(d: PDiagram) -> list[CrossEyedMove]:
    """One move per qualifying 5-edge that has a bad separator (chordal input)."""
    return [CrossEyedMove(e) for e in candidate_bad_edges(d) if _bad_separators(d, e)]


def shared_head_edges(d: PDiagram) -> list[tuple]:
    """Pairs of qualifying edges with bad separators whose heads share a vertex."""
    edges = [e for e in candidate_bad_edges(d) if _bad_separators(d, e)]
    verts = {e: frozenset().union(*(h.members for h in _heads(d, e))) for e in edges}
    return [(e, f) for i, e in enumerate(edges) for f in edges[i + 1:] if verts[e] & verts[f]]


__all__ = ["candidate_bad_edges", "bad_separators", "gross_separators", "star_decomposition",
           "cross_eyed_twist", "cross_eyed_moves", "BadSeparator", "GrossSeparator",
           "StarDecomposition", "CrossEyedMove", "Head"]

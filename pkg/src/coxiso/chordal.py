"""Chordality with witnesses, and minimal vertex separators.

All graph notions refer to the underlying graph of the P-diagram: two
generators are adjacent when their label is finite.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .diagram import PDiagram
from .errors import AdjacentPair, SamePair


@dataclass(frozen=True)
class ChordalityWitness:
    result: bool
    peo: Optional[tuple[str, ...]] = None
    chordless_cycle: Optional[tuple[str, ...]] = None

    def to_json(self):
        out = {"chordal": self.result}
        if self.result:
            out["peo"] = list(self.peo)
        else:
            out["chordless_cycle"] = list(self.chordless_cycle)
        return out


def _mcs_order(adj):
    """Maximum cardinality search; returns vertices in visiting order."""
    weight = {v: 0 for v in adj}
    order = []
    left = set(adj)
    while left:
        # ties broken by name for determinism
        v = max(sorted(left), key=lambda u: weight[u])
        order.append(v)
        left.discard(v)
        for u in adj[v]:
            if u in left:
                weight[u] += 1
    return order


def peo_violation(adj, peo):
    """First vertex whose later neighbors are not a clique, with a non-adjacent pair."""
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = sorted((u for u in adj[v] if pos[u] > pos[v]), key=pos.get)
        for x, y in combinations(later, 2):
            if y not in adj[x]:
                return v, x, y
    return None


def _shortest_path(adj, allowed, src, dst):
    prev = {src: None}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        if v == dst:
            path = []
            while v is not None:
                path.append(v)
                v = prev[v]
            return path[::-1]
        for u in sorted(adj[v]):
            if u in allowed and u not in prev:
                prev[u] = v
                queue.append(u)
    return None


def _hole_through(adj, v, x, y):
    # path x..y avoiding v and v's other neighbors closes an induced cycle
    allowed = set(adj) - ({v} | set(adj[v])) | {x, y}
    path = _shortest_path(adj, allowed, x, y)
    if path is None:
        return None
    return (v, *path)


def _find_hole(adj, hint):
    if hint is not None:
        cyc = _hole_through(adj, *hint)
        if cyc is not None:
            return cyc
    for v in sorted(adj):
        for x, y in combinations(sorted(adj[v]), 2):
            if y not in adj[x]:
                cyc = _hole_through(adj, v, x, y)
                if cyc is not None:
                    return cyc
    return None


def chordality(d: PDiagram) -> ChordalityWitness:
    """Decide chordality, returning a perfect elimination ordering or a chordless cycle."""
    adj = d.adjacency()
    peo = _mcs_order(adj)[::-1]
    bad = peo_violation(adj, peo)
    if bad is None:
        return ChordalityWitness(True, peo=tuple(peo))
    cycle = _find_hole(adj, bad)
    return ChordalityWitness(False, chordless_cycle=cycle)


def is_chordal(d: PDiagram) -> bool:
    return chordality(d).result


# -- separators -----------------------------------------------------------------


def component_of(adj, removed, v):
    """Vertex set of the component of ``v`` in the graph minus ``removed``."""
    seen = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for u in adj[x]:
            if u not in removed and u not in seen:
                seen.add(u)
                stack.append(u)
    return frozenset(seen)


def components_without(adj, removed):
    left = set(adj) - set(removed)
    out = []
    while left:
        c = component_of(adj, removed, min(left))
        left -= c
        out.append(c)
    return out


def neighborhood(adj, vertices):
    vertices = set(vertices)
    return frozenset(u for v in vertices for u in adj[v] if u not in vertices)


def _check_pair(d, c, f):
    d.check((c, f))
    if c == f:
        raise SamePair(f"separator query with identical endpoints {c!r}")
    if f in d.neighbors(c):
        raise AdjacentPair(f"{c!r} and {f!r} are adjacent; no separator exists")


def _close_to(adj, A, f):
    """The minimal separator between connected set ``A`` and ``f`` that lies in N(A)."""
    closed = set(A) | neighborhood(adj, A)
    K = component_of(adj, closed, f)
    return neighborhood(adj, K)


def minimal_separators_between(d: PDiagram, c: str, f: str) -> list[frozenset]:
    """All inclusion-minimal (c, f)-separators.

    Starts from the separator close to ``c`` and repeatedly pushes the
    c-side across one separator vertex; every minimal separator is reached.
    """
    _check_pair(d, c, f)
    adj = d.adjacency()
    start = _close_to(adj, {c}, f)
    seen = {start}
    queue = deque([start])
    while queue:
        S = queue.popleft()
        side = component_of(adj, S, c)
        for x in sorted(S):
            if f in adj[x]:
                continue
            T = _close_to(adj, side | {x}, f)
            if T not in seen:
                seen.add(T)
                queue.append(T)
    return sorted(seen, key=lambda s: (len(s), sorted(s)))


def separates(d: PDiagram, B, c: str, f: str) -> bool:
    adj = d.adjacency()
    return f not in component_of(adj, frozenset(B), c)


def is_minimal_separator(d: PDiagram, B, c: str, f: str) -> bool:
    B = d.check(B)
    d.check((c, f))
    if c in B or f in B:
        raise ValueError("endpoints must lie outside the candidate separator")
    adj = d.adjacency()
    Kc = component_of(adj, B, c)
    if f in Kc:
        return False
    Kf = component_of(adj, B, f)
    return all(adj[b] & Kc and adj[b] & Kf for b in B)


def close_separator(d: PDiagram, c: str, f: str) -> frozenset:
    """The unique minimal (c, f)-separator all of whose members are adjacent to ``c``."""
    _check_pair(d, c, f)
    return _close_to(d.adjacency(), {c}, f)

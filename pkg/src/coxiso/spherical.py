"""Finite irreducible Coxeter types, longest-element conjugation, and bases.

Types use Coxeter's naming, which differs from Bourbaki's:

=========  ==============  ==========================================
here       Bourbaki        C-diagram shape
=========  ==============  ==========================================
A_n        A_n             path, all labels 3
B_n (n>=4) D_n             Y shape, two arms of length one, labels 3
C_n        B_n = C_n       path, labels 3 ... 3 4
D2(k)      I_2(k)          single edge labeled k (k >= 5)
E6/E7/E8   E6/E7/E8        Y shape with arms 1,2,2 / 1,2,3 / 1,2,4
F4         F4              path 3 4 3
G3, G4     H3, H4          path 3 5 / 3 3 5
=========  ==============  ==========================================

B_3 is reported as A_3, D2(3) as A_2 and D2(4) as C_2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .diagram import INFINITY, PDiagram, components, is_simplex
from .errors import NotIrreducible, NotSpherical


@dataclass(frozen=True, order=True)
class FiniteType:
    family: str
    rank: int
    k: Optional[int] = None  # dihedral parameter, D2 only

    def __str__(self):
        if self.family == "D2":
            return f"D2({self.k})"
        if self.family in ("E", "F", "G"):
            return f"{self.family}{self.rank}"
        return f"{self.family}{self.rank}"

    @property
    def order(self) -> int:
        """Order of the finite Coxeter group of this type."""
        n = self.rank
        f = self.family
        if f == "A":
            return math.factorial(n + 1)
        if f == "B":
            return 2 ** (n - 1) * math.factorial(n)
        if f == "C":
            return 2 ** n * math.factorial(n)
        if f == "D2":
            return 2 * self.k
        return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
                ("F", 4): 1152, ("G", 3): 120, ("G", 4): 14400}[(f, n)]


def _c_edges(d, A):
    A = sorted(A)
    return {(s, t): d.m(s, t) for i, s in enumerate(A) for t in A[i + 1:] if d.m(s, t) > 2}


def _c_adjacency(d, A):
    adj = {s: {} for s in A}
    for (s, t), m in _c_edges(d, A).items():
        adj[s][t] = m
        adj[t][s] = m
    return adj


def _walk(adj, start, prev):
    """Vertices of the arm leaving ``prev`` through ``start`` (a path)."""
    arm = [start]
    while True:
        nxt = [u for u in adj[arm[-1]] if u != prev]
        if not nxt:
            return arm
        prev = arm[-1]
        arm.append(nxt[0])


def _shape(d, A):
    """Return ("path", vertices, labels) or ("fork", center, arms) or None."""
    adj = _c_adjacency(d, A)
    nedges = sum(len(v) for v in adj.values()) // 2
    if nedges != len(A) - 1:
        return None
    if any(m == INFINITY for nb in adj.values() for m in nb.values()):
        return None
    degs = {s: len(nb) for s, nb in adj.items()}
    if max(degs.values()) > 3:
        return None
    branch = [s for s, k in degs.items() if k == 3]
    if len(branch) > 1:
        return None
    if branch:
        c = branch[0]
        arms = sorted((_walk(adj, u, c) for u in sorted(adj[c])), key=lambda a: (len(a), a))
        return ("fork", c, arms)
    ends = sorted(s for s, k in degs.items() if k == 1)
    path = _walk(adj, ends[0], None)
    labels = [adj[path[i]][path[i + 1]] for i in range(len(path) - 1)]
    # orient so the label sequence is lexicographically smallest
    if labels[::-1] < labels:
        path, labels = path[::-1], labels[::-1]
    return ("path", path, labels)


def _classify_shape(shape, n):
    kind = shape[0]
    if kind == "fork":
        _, c, arms = shape
        lens = tuple(len(a) for a in arms)
        if lens[0] == 1 and lens[1] == 1:
            return FiniteType("B", n)
        return {(1, 2, 2): FiniteType("E", 6), (1, 2, 3): FiniteType("E", 7),
                (1, 2, 4): FiniteType("E", 8)}.get(lens)
    _, path, labels = shape
    if n == 2:
        k = labels[0]
        if k == 3:
            return FiniteType("A", 2)
        if k == 4:
            return FiniteType("C", 2)
        return FiniteType("D2", 2, k)
    if all(x == 3 for x in labels):
        return FiniteType("A", n)
    if labels == [3] * (n - 2) + [4]:
        return FiniteType("C", n)
    if labels == [3, 4, 3]:
        return FiniteType("F", 4)
    if labels == [3] * (n - 2) + [5] and n in (3, 4):
        return FiniteType("G", n)
    return None


def _fork_labels_ok(d, A):
    return all(m == 3 for m in _c_edges(d, A).values())


def classify_irreducible(d: PDiagram, A) -> Optional[FiniteType]:
    """Finite type of the irreducible subset ``A``, or ``None`` if ``<A>`` is infinite."""
    A = d.check(A)
    if not A:
        raise NotIrreducible("empty set is not irreducible")
    if len(components(d, A, "C")) != 1:
        raise NotIrreducible(f"{sorted(A)} has more than one C-component")
    if len(A) == 1:
        return FiniteType("A", 1)
    shape = _shape(d, A)
    if shape is None:
        return None
    if shape[0] == "fork" and not _fork_labels_ok(d, A):
        return None
    return _classify_shape(shape, len(A))


def is_spherical(d: PDiagram, A) -> bool:
    A = d.check(A)
    if not is_simplex(d, A):
        return False
    return all(classify_irreducible(d, c) is not None for c in components(d, A, "C"))


def _component_conjugation(d, comp, ftype):
    pi = {s: s for s in comp}
    if ftype.family == "A" and ftype.rank >= 2:
        path = _shape(d, comp)[1]
        for i, s in enumerate(path):
            pi[s] = path[-1 - i]
    elif ftype.family == "D2" and ftype.k % 2 == 1:
        s, t = sorted(comp)
        pi[s], pi[t] = t, s
    elif ftype.family == "B" and ftype.rank % 2 == 1:
        _, _, arms = _shape(d, comp)
        (x,), (y,) = arms[0], arms[1]
        pi[x], pi[y] = y, x
    elif ftype.family == "E" and ftype.rank == 6:
        _, _, arms = _shape(d, comp)
        for u, v in zip(arms[1], arms[2]):
            pi[u], pi[v] = v, u
    return pi


def longest_conjugation(d: PDiagram, A) -> dict[str, str]:
    """The permutation ``s -> l s l^-1`` of ``A`` for the longest element ``l`` of ``<A>``."""
    A = d.check(A)
    if not is_spherical(d, A):
        raise NotSpherical(f"{sorted(A)} does not generate a finite group")
    pi = {}
    for comp in components(d, A, "C"):
        pi.update(_component_conjugation(d, comp, classify_irreducible(d, comp)))
    return pi


def c_chain(d: PDiagram, A) -> list[str]:
    """Vertices of a path-shaped C-diagram, oriented with the smallest label sequence first."""
    shape = _shape(d, d.check(A)) if len(A) > 1 else ("path", list(A), [])
    if shape is None or shape[0] != "path":
        raise ValueError(f"{sorted(A)} is not a path-shaped C-diagram")
    return list(shape[1])


def irreducible_spherical_sets(d: PDiagram) -> dict[frozenset, FiniteType]:
    """All irreducible spherical subsets of size at least two, with their types.

    Grown one C-adjacent vertex at a time; connected subsets of an irreducible
    spherical set are again irreducible spherical, so nothing is missed.
    """
    found: dict[frozenset, FiniteType] = {}
    frontier = []
    for s, t, m in d.edges():
        if m > 2:
            A = frozenset((s, t))
            found[A] = classify_irreducible(d, A)
            frontier.append(A)
    while frontier:
        nxt = []
        for A in frontier:
            for u in d.generators:
                if u in A:
                    continue
                labels = [d.m(u, a) for a in A]
                if INFINITY in labels or max(labels) <= 2:
                    continue
                B = A | {u}
                if B in found:
                    continue
                ft = classify_irreducible(d, B)
                if ft is None:
                    continue
                found[B] = ft
                nxt.append(B)
        frontier = nxt
    return found


@dataclass(frozen=True)
class Base:
    members: frozenset
    finite_type: FiniteType

    @property
    def key(self):
        return tuple(sorted(self.members))

    def to_json(self):
        return {"members": list(self.key), "type": str(self.finite_type)}


def bases(d: PDiagram) -> list[Base]:
    """Maximal irreducible spherical subsets of size at least two."""
    sets = irreducible_spherical_sets(d)
    out = []
    for A, ft in sets.items():
        # a proper irreducible spherical superset would contain A plus one C-adjacent vertex
        if any(len(B) == len(A) + 1 and A < B for B in sets):
            continue
        out.append(Base(A, ft))
    out.sort(key=lambda b: b.key)
    return out

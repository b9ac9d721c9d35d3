"""Canonical forms of labeled diagrams.

The canonical form is the lexicographically smallest upper-triangular label
matrix over the vertex orderings produced by an individualization-refinement
search.  The set of orderings considered depends only on the labeled graph,
so the minimum is an isomorphism invariant; refinement and automorphism
pruning only cut work.
"""
from __future__ import annotations

from .diagram import INFINITY, PDiagram

CanonicalForm = bytes


def _label_matrix(d: PDiagram):
    gens = d.generators
    index = {g: i for i, g in enumerate(gens)}
    n = len(gens)
    M = [[0] * n for _ in range(n)]
    for s, t, m in d.edges():
        i, j = index[s], index[t]
        M[i][j] = M[j][i] = m
    return M


def _refine(M, cells):
    n = len(M)
    while True:
        cell_of = [0] * n
        for k, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = k
        out = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups = {}
            for v in cell:
                row = M[v]
                sig = tuple(sorted((row[u], cell_of[u]) for u in range(n) if row[u]))
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                changed = True
            out.extend(groups[k] for k in sorted(groups))
        cells = out
        if not changed:
            return cells


class _Search:
    def __init__(self, M):
        self.M = M
        self.n = len(M)
        self.first = None
        self.first_path = None
        self.best = None
        self.best_order = None
        self.autos = []

    def encode(self, order):
        M = self.M
        return tuple(M[order[i]][order[j]] for i in range(len(order)) for j in range(i + 1, len(order)))

    def _same_orbit(self, prefix, u_list, v):
        # union-find over automorphisms that fix the prefix pointwise
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.autos:
            if all(g[p] == p for p in prefix):
                for x in range(self.n):
                    a, b = find(x), find(g[x])
                    if a != b:
                        parent[a] = b
        rv = find(v)
        return any(find(u) == rv for u in u_list)

    def run(self, cells, path):
        cells = _refine(self.M, cells)
        if all(len(c) == 1 for c in cells):
            order = [c[0] for c in cells]
            enc = self.encode(order)
            if self.first is None:
                self.first, self.first_path = (enc, order), list(path)
                self.best, self.best_order = enc, order
                return None
            if enc == self.first[0]:
                self.autos.append(self._perm(self.first[1], order))
                for i, (p, q) in enumerate(zip(path, self.first_path)):
                    if p != q:
                        return i
                return None
            if enc == self.best:
                self.autos.append(self._perm(self.best_order, order))
            elif enc < self.best:
                self.best, self.best_order = enc, order
            return None

        k = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = cells[k]
        depth = len(path)
        explored = []
        for v in target:
            if explored and self._same_orbit(path, explored, v):
                continue
            rest = [u for u in target if u != v]
            child = cells[:k] + [[v], rest] + cells[k + 1:]
            jump = self.run(child, path + [v])
            explored.append(v)
            if jump is not None and jump < depth:
                return jump
        return None

    def _perm(self, src, dst):
        g = list(range(self.n))
        for a, b in zip(src, dst):
            g[a] = b
        return g


def canonical_labeling(d: PDiagram) -> tuple[CanonicalForm, tuple[str, ...]]:
    """Return the canonical form and the generator ordering that realizes it.

    For isomorphic diagrams the i-th entries of the two orderings correspond
    under a label-preserving bijection.
    """
    n = len(d)
    if n == 0:
        return b"cox-canon:0:", ()
    M = _label_matrix(d)
    search = _Search(M)
    search.run([list(range(n))], [])
    body = ",".join(map(str, search.best))
    form = f"cox-canon:{n}:{body}".encode()
    return form, tuple(d.generators[i] for i in search.best_order)


def canonical_form(d: PDiagram) -> CanonicalForm:
    return canonical_labeling(d)[0]


def isomorphism(d1: PDiagram, d2: PDiagram) -> dict[str, str] | None:
    """A label-preserving bijection from ``d1`` to ``d2``, or ``None``."""
    f1, o1 = canonical_labeling(d1)
    f2, o2 = canonical_labeling(d2)
    if f1 != f2:
        return None
    return dict(zip(o1, o2))


def diagram_from_form(form: CanonicalForm, names=None) -> PDiagram:
    """Rebuild a representative diagram from a canonical form."""
    _, n, body = form.decode().split(":")
    n = int(n)
    names = list(names) if names is not None else [f"v{i}" for i in range(n)]
    vals = [int(x) for x in body.split(",")] if body else []
    edges = []
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            if vals[k]:
                edges.append((names[i], names[j], vals[k]))
            k += 1
    return PDiagram(names, edges)


__all__ = ["CanonicalForm", "canonical_form", "canonical_labeling", "isomorphism",
           "diagram_from_form", "INFINITY"]

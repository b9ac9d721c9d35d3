"""Random diagram generators and brute-force oracles shared by the tests."""
import math
import random
from itertools import combinations

import numpy as np

from coxiso.diagram import INFINITY, PDiagram

NAMES = "abcdefghijklmnop"


def random_chordal(rng: random.Random, n: int, labels=(2, 3, 4, 5, 6), weights=None,
                   p_join=0.7, p_isolated=0.05) -> PDiagram:
    """Grow a chordal diagram by adding simplicial vertices one at a time."""
    gens = list(NAMES[:n])
    edges = {}
    adj = {g: set() for g in gens}
    for i, v in enumerate(gens):
        if i == 0 or rng.random() < p_isolated:
            continue
        u = rng.choice(gens[:i])
        clique = [u]
        others = gens[:i]
        rng.shuffle(others)
        for w in others:
            if w != u and all(w in adj[k] for k in clique) and rng.random() < p_join:
                clique.append(w)
        for k in clique:
            adj[v].add(k)
            adj[k].add(v)
            edges[(k, v)] = rng.choices(labels, weights)[0]
    return PDiagram(gens, [(s, t, m) for (s, t), m in edges.items()])


def random_diagram(rng: random.Random, n: int, p=0.5, labels=(2, 3, 4, 5, 6)) -> PDiagram:
    gens = list(NAMES[:n])
    edges = [(s, t, rng.choice(labels)) for s, t in combinations(gens, 2) if rng.random() < p]
    return PDiagram(gens, edges)


def move_diagram(rng, n):
    """Chordal diagrams biased towards G3 triangles and commuting pairs."""
    return random_chordal(rng, n, labels=(2, 3, 4, 5, 6), weights=(5, 4, 1, 3, 1))


# -- graph oracles -----------------------------------------------------------------


def reach(d, removed, src):
    seen = {src}
    stack = [src]
    while stack:
        x = stack.pop()
        for y in d.generators:
            if y not in seen and y not in removed and d.m(x, y) != INFINITY:
                seen.add(y)
                stack.append(y)
    return seen


def brute_separates(d, B, c, f):
    return f not in reach(d, set(B), c)


def brute_minimal_separators(d, c, f):
    others = [g for g in d.generators if g not in (c, f)]
    out = set()
    for r in range(len(others) + 1):
        for B in combinations(others, r):
            if not brute_separates(d, B, c, f):
                continue
            if all(not brute_separates(d, set(B) - {x}, c, f) for x in B):
                out.add(frozenset(B))
    return out


# -- Coxeter oracles ---------------------------------------------------------------


def cosine_matrix(d, subset):
    A = sorted(subset)
    M = np.eye(len(A))
    for i, s in enumerate(A):
        for j, t in enumerate(A):
            if i != j:
                m = d.m(s, t)
                M[i, j] = -1.0 if m == INFINITY else -math.cos(math.pi / m)
    return M


def positive_definite(d, subset):
    """Finite group criterion: the cosine form is positive definite."""
    if not subset:
        return True
    return bool(np.linalg.eigvalsh(cosine_matrix(d, subset)).min() > 1e-9)


def c_connected(d, subset):
    subset = list(subset)
    if not subset:
        return False
    seen = {subset[0]}
    stack = [subset[0]]
    while stack:
        x = stack.pop()
        for y in subset:
            if y not in seen and d.m(x, y) > 2:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(subset)


def brute_bases(d):
    sph = []
    for r in range(2, len(d) + 1):
        for A in combinations(d.generators, r):
            if c_connected(d, A) and positive_definite(d, A):
                sph.append(frozenset(A))
    return {A for A in sph if not any(A < B for B in sph)}


def brute_heads(d, edge):
    """Maximal irreducible simplices of size three containing the edge."""
    x, y = edge
    irr = []
    for r in range(2, len(d) + 1):
        for A in combinations(d.generators, r):
            A = frozenset(A)
            if all(d.m(s, t) != INFINITY for s, t in combinations(A, 2)) and c_connected(d, A):
                irr.append(A)
    return [A for A in irr if len(A) == 3 and {x, y} <= A and not any(A < B for B in irr)]


def brute_bad_separators(d, edge):
    """(members, eyes, foci) triples straight from the per-vertex definition."""
    out = set()
    for A in brute_heads(d, edge):
        eyes = [p for p in combinations(sorted(A), 2) if d.m(*p) == 2]
        for a, b in eyes:
            (c,) = A - {a, b}
            perp = [s for s in d.generators if s not in A and all(d.m(s, t) == 2 for t in A)]
            for r in range(len(perp) + 1):
                for extra in combinations(perp, r):
                    B = frozenset((a, b, *extra))
                    foci = frozenset(f for f in d.generators if f not in B and f != c
                                     and d.m(c, f) == INFINITY
                                     and B in brute_minimal_separators(d, c, f))
                    if foci:
                        out.add((B, (a, b), foci))
    return out


def brute_gross_separators(d, edge):
    out = set()
    for A in brute_heads(d, edge):
        for a, b in [p for p in combinations(sorted(A), 2) if d.m(*p) == 2]:
            (c,) = A - {a, b}
            D = frozenset({a, b} | {s for s in d.generators
                                    if s not in A and all(d.m(s, t) == 2 for t in A)})
            foci = frozenset(f for f in d.generators if f not in D and f != c
                             and brute_separates(d, D, c, f)
                             and not brute_separates(d, D - {a}, c, f)
                             and not brute_separates(d, D - {b}, c, f))
            if foci:
                out.add((D, (a, b), foci))
    return out


def rename_randomly(d, rng):
    names = list(d.generators)
    targets = [f"g{i}" for i in range(len(names))]
    rng.shuffle(targets)
    return d.rename(dict(zip(names, targets)))


def brute_longest_permutation(d, subset):
    """s -> t with w0(alpha_s) = -alpha_t, w0 found by walking the finite group."""
    A = sorted(subset)
    B = cosine_matrix(d, A)
    k = len(A)
    gens = []
    for i in range(k):
        M = np.eye(k)
        M[i, :] -= 2 * B[i, :]
        gens.append(M)
    seen = {tuple(np.round(np.eye(k), 6).ravel())}
    frontier = [np.eye(k)]
    while frontier:
        nxt = []
        for W in frontier:
            if all(W[:, i].max() < 1e-9 for i in range(k)):
                perm = {}
                for i in range(k):
                    col = -W[:, i]
                    j = int(np.argmax(col))
                    assert abs(col[j] - 1) < 1e-6 and np.abs(np.delete(col, j)).max(initial=0) < 1e-6
                    perm[A[i]] = A[j]
                return perm
            for g in gens:
                V = W @ g
                key = tuple(np.round(V, 6).ravel())
                if key not in seen:
                    seen.add(key)
                    nxt.append(V)
        frontier = nxt
    raise AssertionError("group is not finite")


def brute_twists(d):
    """Replay triples (core, bullet, side2) of every nondegenerate elementary twist."""
    S = frozenset(d.generators)
    n = len(S)
    out = set()
    for r in range(1, n - 1):
        for core in combinations(sorted(S), r):
            core = frozenset(core)
            rest = sorted(S - core)
            sides = []
            for k in range(1, len(rest)):
                for R in combinations(rest, k):
                    R = frozenset(R)
                    L = S - core - R
                    if all(d.m(s, t) == INFINITY for s in R for t in L):
                        sides.append(R)
            if not sides:
                continue
            for k in range(1, len(core) + 1):
                for X in combinations(sorted(core), k):
                    X = frozenset(X)
                    if any(d.m(s, t) != 2 for s in X for t in core - X):
                        continue
                    if any(d.m(s, t) == INFINITY for s, t in combinations(X, 2)):
                        continue
                    if not positive_definite(d, X):
                        continue
                    pi = brute_longest_permutation(d, X)
                    if all(s == t for s, t in pi.items()):
                        continue
                    for R in sides:
                        out.add((core, X, R | core))
    return out


def angle_diagram(rng: random.Random, n: int) -> PDiagram:
    """Chordal diagram grown around a G3 triangle, so cross-eyed moves are common."""
    gens = list(NAMES[:n])
    edges = {("a", "b"): 2, ("a", "c"): 3, ("b", "c"): 5}
    adj = {g: set() for g in gens}
    for s, t in edges:
        adj[s].add(t)
        adj[t].add(s)
    for i in range(3, n):
        v = gens[i]
        u = rng.choice(gens[:i])
        clique = [u]
        others = gens[:i]
        rng.shuffle(others)
        for w in others:
            if w != u and all(w in adj[k] for k in clique) and rng.random() < 0.6:
                clique.append(w)
        for k in clique:
            adj[v].add(k)
            adj[k].add(v)
            edges[(k, v)] = rng.choices((2, 3, 4, 5, 6), (6, 3, 1, 1, 1))[0]
    return PDiagram(gens, [(s, t, m) for (s, t), m in edges.items()])

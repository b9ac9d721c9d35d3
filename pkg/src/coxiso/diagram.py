"""Presentation diagrams (P-diagrams) of Coxeter systems.

A diagram is an immutable labeled graph on named generators.  A pair of
generators carries a finite label ``m >= 2`` when ``(st)^m = 1`` is a
defining relation; absent pairs have label :data:`INFINITY`.
"""
from __future__ import annotations

import enum
import json
import math
from collections import Counter
from typing import Iterable, Mapping

from .errors import MalformedInput, SamePair, UnknownGenerator

INFINITY = math.inf
RESERVED = "$"


def _check_name(name):
    if not isinstance(name, str) or not name:
        raise MalformedInput(f"generator name must be a nonempty string: {name!r}")
    if not name.isprintable() or any(ch.isspace() for ch in name) or "#" in name:
        raise MalformedInput(f"invalid generator name {name!r}")


class PDiagram:
    """Immutable P-diagram.

    Generators are kept in lexicographic order, so two diagrams with the same
    generators and labels compare equal regardless of construction order.
    """

    __slots__ = ("_gens", "_adj", "_key")

    def __init__(self, generators: Iterable[str], edges: Iterable[tuple] = ()):
        gens = list(generators)
        for g in gens:
            _check_name(g)
        if len(set(gens)) != len(gens):
            dup = [g for g, k in Counter(gens).items() if k > 1]
            raise MalformedInput(f"duplicate generator(s): {', '.join(sorted(dup))}")
        adj = {g: {} for g in gens}
        for s, t, m in edges:
            if s not in adj:
                raise MalformedInput(f"unknown endpoint {s!r}")
            if t not in adj:
                raise MalformedInput(f"unknown endpoint {t!r}")
            if s == t:
                raise MalformedInput(f"self-pair on {s!r}")
            if m == INFINITY:
                continue
            if isinstance(m, bool) or not isinstance(m, int):
                raise MalformedInput(f"label for ({s}, {t}) must be an integer, got {m!r}")
            if m < 2:
                raise MalformedInput(f"label for ({s}, {t}) must be >= 2, got {m}")
            if t in adj[s]:
                raise MalformedInput(f"duplicate edge ({s}, {t})")
            adj[s][t] = m
            adj[t][s] = m
        self._gens = tuple(sorted(gens))
        self._adj = adj
        self._key = None

    # -- basic access -------------------------------------------------------

    @property
    def generators(self) -> tuple[str, ...]:
        return self._gens

    def __len__(self):
        return len(self._gens)

    def __contains__(self, name):
        return name in self._adj

    def __iter__(self):
        return iter(self._gens)

    def check(self, names: Iterable[str]) -> frozenset:
        """Return ``names`` as a frozenset, raising if any is not a generator."""
        names = frozenset(names)
        missing = sorted(n for n in names if n not in self._adj)
        if missing:
            raise UnknownGenerator(f"unknown generator(s): {', '.join(map(str, missing))}")
        return names

    def label(self, s: str, t: str):
        """The Coxeter label m(s, t); :data:`INFINITY` when no edge is stored."""
        self.check((s, t))
        if s == t:
            raise SamePair(f"label of a generator with itself: {s!r}")
        return self._adj[s].get(t, INFINITY)

    def m(self, s, t):
        # unchecked fast path for internal use
        return self._adj[s].get(t, INFINITY)

    def neighbors(self, s: str) -> frozenset:
        """Generators joined to ``s`` by a finite label."""
        self.check((s,))
        return frozenset(self._adj[s])

    def adjacency(self) -> dict[str, frozenset]:
        return {g: frozenset(nb) for g, nb in self._adj.items()}

    def edges(self) -> list[tuple[str, str, int]]:
        """Finite-label edges as ``(s, t, m)`` with ``s < t``, sorted."""
        out = []
        for s in self._gens:
            for t, m in self._adj[s].items():
                if s < t:
                    out.append((s, t, m))
        out.sort()
        return out

    def label_multiset(self) -> tuple[int, ...]:
        return tuple(sorted(m for _, _, m in self.edges()))

    # -- derived diagrams ---------------------------------------------------

    def induced(self, subset: Iterable[str]) -> "PDiagram":
        sub = self.check(subset)
        return PDiagram(sub, [(s, t, m) for s, t, m in self.edges() if s in sub and t in sub])

    def with_labels(self, changes: Mapping[tuple[str, str], object]) -> "PDiagram":
        """Copy with the given pair labels replaced (``INFINITY`` removes an edge)."""
        labels = {frozenset((s, t)): m for s, t, m in self.edges()}
        for (s, t), m in changes.items():
            self.check((s, t))
            if s == t:
                raise SamePair(f"self-pair {s!r}")
            labels[frozenset((s, t))] = m
        return PDiagram(self._gens, [(*sorted(p), m) for p, m in labels.items() if m != INFINITY])

    def rename(self, mapping: Mapping[str, str]) -> "PDiagram":
        """Rename generators; names missing from ``mapping`` are kept."""
        f = {g: mapping.get(g, g) for g in self._gens}
        return PDiagram(f.values(), [(f[s], f[t], m) for s, t, m in self.edges()])

    # -- identity -----------------------------------------------------------

    def _identity(self):
        if self._key is None:
            self._key = (self._gens, tuple(self.edges()))
        return self._key

    def __eq__(self, other):
        if not isinstance(other, PDiagram):
            return NotImplemented
        return self._identity() == other._identity()

    def __hash__(self):
        return hash(self._identity())

    def __repr__(self):
        edges = " ".join(f"{s}-{m}-{t}" for s, t, m in self.edges())
        return f"PDiagram(gens={' '.join(self._gens)}; {edges})"


# -- file formats ---------------------------------------------------------------


def _decode(text):
    if isinstance(text, bytes):
        try:
            return text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedInput(f"input is not UTF-8: {exc}") from None
    return text


def _check_user_names(names, allow_reserved):
    if allow_reserved:
        return
    for n in names:
        if RESERVED in n:
            raise MalformedInput(f"reserved character {RESERVED!r} in generator name {n!r}")


def _parse_cox(text, allow_reserved):
    gens: list[str] = []
    edges = []
    seen_pairs = set()
    header = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if not header:
            if tokens != ["cox", "1"]:
                raise MalformedInput(f"line {lineno}: expected header 'cox 1'")
            header = True
            continue
        kw, args = tokens[0], tokens[1:]
        if kw == "gen":
            if not args:
                raise MalformedInput(f"line {lineno}: 'gen' needs at least one name")
            gens.extend(args)
        elif kw == "edge":
            if len(args) != 3:
                raise MalformedInput(f"line {lineno}: expected 'edge <name> <name> <int>'")
            s, t, m = args
            try:
                m = int(m)
            except ValueError:
                raise MalformedInput(f"line {lineno}: bad label {m!r}") from None
            pair = frozenset((s, t))
            if pair in seen_pairs:
                raise MalformedInput(f"line {lineno}: duplicate edge ({s}, {t})")
            seen_pairs.add(pair)
            edges.append((s, t, m))
        else:
            raise MalformedInput(f"line {lineno}: unknown keyword {kw!r}")
    if not header:
        raise MalformedInput("missing header 'cox 1'")
    _check_user_names(gens, allow_reserved)
    return PDiagram(gens, edges)


def _parse_json(text, allow_reserved):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict) or obj.get("version") != 1:
        raise MalformedInput("JSON diagram must be an object with version 1")
    gens = obj.get("generators")
    edges = obj.get("edges", [])
    if not isinstance(gens, list) or not isinstance(edges, list):
        raise MalformedInput("'generators' and 'edges' must be lists")
    triples = []
    seen = set()
    for e in edges:
        if not (isinstance(e, list) and len(e) == 3):
            raise MalformedInput(f"edge must be [s, t, m]: {e!r}")
        s, t, m = e
        if not isinstance(s, str) or not isinstance(t, str):
            raise MalformedInput(f"edge endpoints must be strings: {e!r}")
        pair = frozenset((s, t))
        if pair in seen:
            raise MalformedInput(f"duplicate edge ({s}, {t})")
        seen.add(pair)
        triples.append((s, t, m))
    _check_user_names(gens, allow_reserved)
    return PDiagram(gens, triples)


def parse_diagram(text, format: str = "cox", *, allow_reserved: bool = False) -> PDiagram:
    """Parse a diagram from ``.cox`` or JSON text.

    ``allow_reserved`` admits names containing ``$``; those are produced by
    blow-ups and are refused in ordinary user input.
    """
    text = _decode(text)
    if format == "cox":
        return _parse_cox(text, allow_reserved)
    if format == "json":
        return _parse_json(text, allow_reserved)
    raise ValueError(f"unsupported input format {format!r}")


def to_json_obj(d: PDiagram) -> dict:
    return {"version": 1, "generators": list(d.generators),
            "edges": [[s, t, m] for s, t, m in d.edges()]}


def _dot_id(name):
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export(d: PDiagram, format: str = "cox") -> bytes:
    if format == "cox":
        lines = ["cox 1"]
        if d.generators:
            lines.append("gen " + " ".join(d.generators))
        lines += [f"edge {s} {t} {m}" for s, t, m in d.edges()]
        return ("\n".join(lines) + "\n").encode()
    if format == "json":
        return (json.dumps(to_json_obj(d)) + "\n").encode()
    if format == "dot":
        lines = ["graph P {"]
        lines += [f"  {_dot_id(g)};" for g in d.generators]
        lines += [f"  {_dot_id(s)} -- {_dot_id(t)} [label={m}];" for s, t, m in d.edges()]
        lines.append("}")
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unsupported export format {format!r}")


# -- structural queries ---------------------------------------------------------


def components(d: PDiagram, subset: Iterable[str], mode: str = "C") -> list[frozenset]:
    """Connected components of the subdiagram induced by ``subset``.

    In ``"C"`` mode two generators are joined when ``m(s, t) > 2`` (an
    infinite label counts); in ``"P"`` mode when ``m(s, t)`` is finite.
    Components are returned ordered by their sorted member tuples.
    """
    sub = d.check(subset)
    if mode == "C":
        def joined(s, t):
            return d.m(s, t) > 2
    elif mode == "P":
        def joined(s, t):
            return d.m(s, t) != INFINITY
    else:
        raise ValueError(f"mode must be 'C' or 'P', got {mode!r}")
    left = set(sub)
    out = []
    while left:
        start = min(left)
        left.discard(start)
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for u in list(left):
                if joined(v, u):
                    left.discard(u)
                    comp.add(u)
                    stack.append(u)
        out.append(frozenset(comp))
    out.sort(key=lambda c: tuple(sorted(c)))
    return out


def is_simplex(d: PDiagram, subset) -> bool:
    s = sorted(subset)
    return all(d.m(x, y) != INFINITY for i, x in enumerate(s) for y in s[i + 1:])


class SimplexStatus(enum.Enum):
    NOT_SIMPLEX = "NotSimplex"
    SIMPLEX = "Simplex"
    MAXIMAL_SIMPLEX = "MaximalSimplex"


def simplex_status(d: PDiagram, subset) -> SimplexStatus:
    sub = d.check(subset)
    if not is_simplex(d, sub):
        return SimplexStatus.NOT_SIMPLEX
    for g in d.generators:
        if g not in sub and all(d.m(g, a) != INFINITY for a in sub):
            return SimplexStatus.SIMPLEX
    return SimplexStatus.MAXIMAL_SIMPLEX


def perp(d: PDiagram, A) -> frozenset:
    """Generators outside ``A`` with label 2 to every element of ``A``."""
    A = d.check(A)
    return frozenset(s for s in d.generators if s not in A and all(d.m(s, a) == 2 for a in A))

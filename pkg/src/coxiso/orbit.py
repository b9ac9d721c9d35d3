"""Breadth-first closure of a diagram under twist moves, keyed by canonical form."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .angle import cross_eyed_moves, shared_head_edges
from .canon import canonical_form
from .chordal import chordality
from .diagram import PDiagram
from .errors import NotChordal, OrbitTruncated
from .twist import enumerate_twist_moves

log = logging.getLogger(__name__)

DEFAULT_MAX_SIZE = 10 ** 6


def moves_from(d: PDiagram, use_cross_eyed: bool = True) -> list:
    """All moves at ``d`` in a fixed order: elementary moves first, then cross-eyed."""
    moves = list(enumerate_twist_moves(d))
    if use_cross_eyed:
        moves += cross_eyed_moves(d)
    return moves


@dataclass
class OrbitEntry:
    diagram: PDiagram
    parent: bytes | None
    move: object | None


class Explorer:
    """Layered BFS with parent pointers; each form keeps one shortest path."""

    def __init__(self, seed: PDiagram, use_cross_eyed: bool = True,
                 max_size: int = DEFAULT_MAX_SIZE):
        self.use_cross_eyed = use_cross_eyed
        self.max_size = max_size
        self.seed_form = canonical_form(seed)
        self.visited: dict[bytes, OrbitEntry] = {self.seed_form: OrbitEntry(seed, None, None)}
        self.frontier = [self.seed_form]
        self.flags: set[str] = set()
        self._note(seed)

    def _note(self, d):
        if self.use_cross_eyed:
            for e, f in shared_head_edges(d):
                self.flags.add(f"bad edges {e[0]}-{e[1]} and {f[0]}-{f[1]} share a head vertex")

    @property
    def done(self) -> bool:
        return not self.frontier

    def step(self) -> list[bytes]:
        """Expand one BFS layer; returns the newly discovered forms."""
        new = []
        for form in self.frontier:
            d = self.visited[form].diagram
            for move in moves_from(d, self.use_cross_eyed):
                nd = move.apply(d)
                f = canonical_form(nd)
                if f in self.visited:
                    continue
                self.visited[f] = OrbitEntry(nd, form, move)
                self._note(nd)
                new.append(f)
                if len(self.visited) > self.max_size:
                    self.frontier = new
                    raise OrbitTruncated(
                        f"orbit exceeds {self.max_size} canonical forms", partial=self.result(False))
        self.frontier = new
        return new

    def path_to(self, form: bytes) -> list:
        moves = []
        while True:
            entry = self.visited[form]
            if entry.parent is None:
                return moves[::-1]
            moves.append(entry.move)
            form = entry.parent

    def result(self, complete=True) -> "Orbit":
        entries = {f: (e.diagram, self.path_to(f)) for f, e in self.visited.items()}
        return Orbit(self.seed_form, entries, complete, sorted(self.flags))


@dataclass
class Orbit:
    seed_form: bytes
    entries: dict  # form -> (diagram, list of moves from the seed)
    complete: bool = True
    flags: list = field(default_factory=list)

    def __len__(self):
        return len(self.entries)

    def __contains__(self, form):
        return form in self.entries

    @property
    def forms(self) -> list[bytes]:
        return sorted(self.entries)

    def to_json(self):
        return {"size": len(self.entries), "complete": self.complete, "flags": self.flags,
                "forms": [{"form": f.decode(),
                           "path": [m.to_json() for m in self.entries[f][1]]}
                          for f in self.forms]}


def twist_orbit(d: PDiagram, use_cross_eyed: bool = True,
                max_size: int = DEFAULT_MAX_SIZE) -> Orbit:
    """Every canonical form reachable from ``d`` by twist moves.

    Raises :class:`OrbitTruncated` (carrying the partial orbit) once more
    than ``max_size`` forms have been found.
    """
    if use_cross_eyed:
        w = chordality(d)
        if not w.result:
            raise NotChordal(f"diagram is not chordal (chordless cycle {' '.join(w.chordless_cycle)})")
    ex = Explorer(d, use_cross_eyed, max_size)
    while not ex.done:
        ex.step()
    orbit = ex.result()
    for flag in orbit.flags:
        log.warning("orbit needs review: %s", flag)
    return orbit

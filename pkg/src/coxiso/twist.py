"""Elementary diagram twists.

A twist move cuts the diagram along a separating set ``core`` and reattaches
``side2`` through the involution of ``core`` induced by conjugation with the
longest element of a spherical block ``bullet`` of the core.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import chain, combinations

from .chordal import components_without
from .diagram import INFINITY, PDiagram, components, perp
from .errors import InvalidMove
from .spherical import irreducible_spherical_sets, is_spherical, longest_conjugation


@dataclass(frozen=True)
class Separation:
    side1: frozenset
    core: frozenset
    side2: frozenset


def _nonempty_subsets(items):
    items = list(items)
    return chain.from_iterable(combinations(items, r) for r in range(1, len(items) + 1))


@dataclass(frozen=True)
class TwistMove:
    separation: Separation
    bullet: frozenset
    pi: tuple  # sorted (s, pi(s)) pairs over the core

    kind = "elementary"

    @property
    def core(self):
        return self.separation.core

    @property
    def pi_map(self) -> dict[str, str]:
        return dict(self.pi)

    def to_json(self):
        return {"kind": "elementary", "core": sorted(self.core), "bullet": sorted(self.bullet),
                "side2": sorted(self.separation.side2)}

    def sort_key(self):
        return json.dumps(self.to_json(), sort_keys=True)

    def apply(self, d: PDiagram) -> PDiagram:
        return apply_twist(d, self)

    def rename(self, mapping):
        f = lambda xs: frozenset(mapping.get(x, x) for x in xs)  # noqa: E731
        sep = self.separation
        return TwistMove(Separation(f(sep.side1), f(sep.core), f(sep.side2)), f(self.bullet),
                         tuple(sorted((mapping.get(s, s), mapping.get(t, t)) for s, t in self.pi)))


def _bullet_conjugation(d, core, bullet):
    pi = {s: s for s in core}
    pi.update(longest_conjugation(d, bullet))
    return tuple(sorted(pi.items()))


def make_move(d: PDiagram, core, bullet, side2) -> TwistMove:
    """Build and validate a move from its replay data (core, bullet, full side2)."""
    core, bullet, side2 = d.check(core), d.check(bullet), d.check(side2)
    side1 = (frozenset(d.generators) - side2) | core
    try:
        pi = _bullet_conjugation(d, core, bullet)
    except Exception as exc:
        raise InvalidMove(f"bullet {sorted(bullet)} is not usable: {exc}") from None
    move = TwistMove(Separation(side1, core, side2), bullet, pi)
    validate_move(d, move)
    return move


def move_from_json(d: PDiagram, obj) -> TwistMove:
    if obj.get("kind") != "elementary":
        raise InvalidMove(f"not an elementary move: {obj!r}")
    try:
        return make_move(d, obj["core"], obj["bullet"], obj["side2"])
    except KeyError as exc:
        raise InvalidMove(f"move record missing field {exc}") from None


def validate_move(d: PDiagram, move: TwistMove) -> None:
    sep = move.separation
    S = frozenset(d.generators)
    if not (sep.side1 | sep.side2 == S and sep.side1 & sep.side2 == sep.core):
        raise InvalidMove("sides do not cover the generators with the core as overlap")
    left, right = sep.side1 - sep.core, sep.side2 - sep.core
    if not left or not right:
        raise InvalidMove("the core does not separate: a side is empty")
    for s in left:
        for t in right:
            if d.m(s, t) != INFINITY:
                raise InvalidMove(f"edge {s}-{t} crosses the separation")
    bullet, core = move.bullet, sep.core
    if not bullet or not bullet <= core:
        raise InvalidMove("bullet must be a nonempty subset of the core")
    for s in bullet:
        for t in core - bullet:
            if d.m(s, t) != 2:
                raise InvalidMove(f"bullet element {s} does not commute with core element {t}")
    if not is_spherical(d, bullet):
        raise InvalidMove("bullet is not spherical")
    if move.pi != _bullet_conjugation(d, core, bullet):
        raise InvalidMove("pi is not the longest-element conjugation of the bullet")
    if all(s == t for s, t in move.pi):
        raise InvalidMove("degenerate move: pi is the identity")


def apply_twist(d: PDiagram, move: TwistMove) -> PDiagram:
    validate_move(d, move)
    pi = move.pi_map
    core = move.core
    changes = {}
    for s0 in core:
        for t in move.separation.side2 - core:
            changes[(s0, t)] = d.m(pi[s0], t)
    return d.with_labels(changes)


def _candidate_cores(d: PDiagram):
    nontrivial = [X for X in irreducible_spherical_sets(d)
                  if any(s != t for s, t in longest_conjugation(d, X).items())]
    n = len(d)
    cores = set()
    for X in nontrivial:
        P = sorted(perp(d, X))
        for r in range(0, min(len(P), n - 2 - len(X)) + 1):
            for Y in combinations(P, r):
                cores.add(X | frozenset(Y))
    return sorted(cores, key=lambda c: (len(c), sorted(c)))


def enumerate_twist_moves(d: PDiagram) -> list[TwistMove]:
    """Every elementary twist with a nontrivial core involution.

    Mirror moves (sides swapped) are both listed.  Cores are only taken as
    ``X ∪ Y`` with ``X`` an irreducible spherical set with nontrivial
    longest-element conjugation and ``Y`` inside its perp, since any other
    core leaves the diagram unchanged.  Bullets may also carry spherical
    core components whose conjugation is trivial.
    """
    adj = d.adjacency()
    S = frozenset(d.generators)
    moves = []
    for core in _candidate_cores(d):
        pieces = components_without(adj, core)
        if len(pieces) < 2:
            continue
        # spherical C-components commuting with the rest of the core; a bullet is any
        # union of these containing at least one with a nontrivial involution
        moving, still = [], []
        for C in components(d, core, "C"):
            if not is_spherical(d, C) or any(d.m(s, t) != 2 for s in C for t in core - C):
                continue
            pi = longest_conjugation(d, C)
            (moving if any(s != t for s, t in pi.items()) else still).append(C)
        if not moving:
            continue
        bullets = [frozenset().union(*chosen, *extra)
                   for chosen in _nonempty_subsets(moving)
                   for extra in chain([()], _nonempty_subsets(still))]
        for bullet in bullets:
            pi = _bullet_conjugation(d, core, bullet)
            for r in range(1, len(pieces)):
                for side in combinations(pieces, r):
                    right = frozenset().union(*side)
                    sep = Separation((S - right), core, right | core)
                    moves.append(TwistMove(sep, bullet, pi))
    moves.sort(key=TwistMove.sort_key)
    return moves

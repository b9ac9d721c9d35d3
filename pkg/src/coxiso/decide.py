"""Isomorphism decision for chordal Coxeter groups, with replayable certificates.

Both diagrams are expanded by blow-ups; the groups are isomorphic exactly
when the expanded diagrams lie in one orbit under elementary and cross-eyed
twists.  The "not isomorphic" answer therefore rests on the completeness of
that move set for chordal groups, which is a mathematical theorem and is not
checked by this code.  "Isomorphic" answers always come with a certificate
that is replayed before it is returned.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .angle import CrossEyedMove
from .canon import canonical_form, isomorphism
from .chordal import chordality
from .diagram import PDiagram
from .errors import CoxisoError, InvalidMove, InvariantViolation, OrbitTruncated
from .expansion import blow_up, expand, plan_from_json
from .orbit import DEFAULT_MAX_SIZE, Explorer, twist_orbit
from .twist import move_from_json as elementary_from_json

ISOMORPHIC = "Isomorphic"
NOT_ISOMORPHIC = "NotIsomorphic"
UNSUPPORTED = "Unsupported"

BIDIRECTIONAL_THRESHOLD = 10 ** 4

DEPENDENCY_NOTE = ("a NotIsomorphic verdict relies on the theorem that expanded chordal "
                   "systems of isomorphic groups are related by elementary and cross-eyed twists")


def move_from_json(d: PDiagram, obj):
    kind = obj.get("kind") if isinstance(obj, dict) else None
    if kind == "elementary":
        return elementary_from_json(d, obj)
    if kind == "cross_eyed":
        try:
            x, y = obj["edge"]
        except (KeyError, TypeError, ValueError):
            raise InvalidMove(f"bad cross-eyed record {obj!r}") from None
        d.check((x, y))
        return CrossEyedMove(tuple(sorted((x, y))))
    raise InvalidMove(f"unknown move record {obj!r}")


@dataclass
class Certificate:
    blowups1: list
    blowups2: list
    moves: list
    final_bijection: dict

    def to_json(self):
        return {"blowups1": [p.to_json() for p in self.blowups1],
                "blowups2": [p.to_json() for p in self.blowups2],
                "moves": [m.to_json() for m in self.moves],
                "bijection": dict(sorted(self.final_bijection.items()))}

    def replay(self, d1: PDiagram, d2: PDiagram) -> bool:
        return replay_certificate(self.to_json(), d1, d2)


def _replay_blowups(d, records):
    for rec in records:
        d = blow_up(d, plan_from_json(d, rec))
    return d


def replay_certificate(obj, d1: PDiagram, d2: PDiagram) -> bool:
    """Re-run a certificate's JSON record from scratch; ``True`` when it checks out."""
    try:
        e1 = _replay_blowups(d1, obj["blowups1"])
        e2 = _replay_blowups(d2, obj["blowups2"])
        if expand(e1)[1] or expand(e2)[1]:
            return False
        cur = e1
        for rec in obj["moves"]:
            cur = move_from_json(cur, rec).apply(cur)
        bij = obj["bijection"]
        if sorted(bij) != list(cur.generators) or len(set(bij.values())) != len(bij):
            return False
        return cur.rename(bij) == e2
    except (CoxisoError, KeyError, TypeError, ValueError):
        return False


@dataclass
class Verdict:
    result: str
    certificate: Optional[Certificate] = None
    reason: str = ""
    details: dict = field(default_factory=dict)

    def to_json(self):
        out = {"verdict": self.result, "reason": self.reason}
        if self.certificate is not None:
            out.update(self.certificate.to_json())
        out.update(self.details)
        return out


def _unsupported_if_not_chordal(d, which):
    w = chordality(d)
    if w.result:
        return None
    return Verdict(UNSUPPORTED, reason=f"input {which} is not chordal",
                   details={f"chordless_cycle{which}": list(w.chordless_cycle)})


def _meet(fwd, bwd, form, e2):
    path1 = fwd.path_to(form)
    y1 = fwd.visited[form].diagram
    if bwd is None:
        path2, y2 = [], e2
    else:
        path2, y2 = bwd.path_to(form), bwd.visited[form].diagram
    phi = {g: g for g in y1.generators} if y1 == y2 else isomorphism(y1, y2)
    # walk the backward path in reverse, translated into y1's names; every move is an involution
    inv = {v: k for k, v in phi.items()}
    back = [move.rename(inv) for move in reversed(path2)]
    return path1 + back, phi


def decide_isomorphic(d1: PDiagram, d2: PDiagram, max_size: int = DEFAULT_MAX_SIZE,
                      bidirectional_threshold: int = BIDIRECTIONAL_THRESHOLD) -> Verdict:
    for d, which in ((d1, 1), (d2, 2)):
        v = _unsupported_if_not_chordal(d, which)
        if v is not None:
            return v
    e1, log1 = expand(d1)
    e2, log2 = expand(d2)
    if len(e1) != len(e2):
        return Verdict(NOT_ISOMORPHIC, reason=f"expanded ranks differ ({len(e1)} vs {len(e2)}); "
                                              + DEPENDENCY_NOTE)
    if e1.label_multiset() != e2.label_multiset():
        return Verdict(NOT_ISOMORPHIC, reason="expanded diagrams have different label multisets; "
                                              + DEPENDENCY_NOTE)
    target = canonical_form(e2)
    try:
        fwd = Explorer(e1, True, max_size)
        bwd = None
        meet = target if target in fwd.visited else None
        while meet is None:
            if bwd is None:
                if fwd.done:
                    break
                fwd.step()
                if target in fwd.visited:
                    meet = target
                elif len(fwd.frontier) > bidirectional_threshold:
                    bwd = Explorer(e2, True, max_size)
                    meet = next((f for f in sorted(bwd.visited) if f in fwd.visited), None)
            else:
                if fwd.done or bwd.done:
                    break
                small, other = (fwd, bwd) if len(fwd.frontier) <= len(bwd.frontier) else (bwd, fwd)
                new = small.step()
                meet = next((f for f in sorted(new) if f in other.visited), None)
    except OrbitTruncated as exc:
        return Verdict(UNSUPPORTED, reason=f"orbit search truncated: {exc}")
    if meet is None:
        return Verdict(NOT_ISOMORPHIC, reason="expanded diagram 2 is not in the twist orbit of "
                                              "expanded diagram 1; " + DEPENDENCY_NOTE)
    moves, phi = _meet(fwd, bwd, meet, e2)
    cert = Certificate(log1, log2, moves, phi)
    if not cert.replay(d1, d2):
        raise InvariantViolation("emitted certificate failed to replay")
    n = len(moves)
    return Verdict(ISOMORPHIC, cert,
                   reason=f"expanded diagrams are related by {n} twist move{'s' if n != 1 else ''}")


def enumerate_iso_classes(d: PDiagram, max_size: int = DEFAULT_MAX_SIZE) -> list[PDiagram]:
    """One maximal-rank diagram per isomorphism type of diagram for the group of ``d``."""
    e, _ = expand(d)
    orbit = twist_orbit(e, use_cross_eyed=True, max_size=max_size)
    return [orbit.entries[f][0] for f in orbit.forms]


__all__ = ["Verdict", "Certificate", "decide_isomorphic", "enumerate_iso_classes",
           "replay_certificate", "move_from_json",
           "ISOMORPHIC", "NOT_ISOMORPHIC", "UNSUPPORTED", "DEPENDENCY_NOTE"]

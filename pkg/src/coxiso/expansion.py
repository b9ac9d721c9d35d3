"""Blow-ups along bases of type C_odd or D2(4q+2), and expanded diagrams.

A blow-up removes one generator ``a`` of the base and adds two: ``a$d``
(standing for ``aba``) and ``a$z`` (the longest element of the base).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .diagram import INFINITY, RESERVED, PDiagram
from .errors import InvalidPlan, NotABase
from .spherical import Base, bases, c_chain

C_ODD = "C_odd"
D2 = "D2"


@dataclass(frozen=True)
class BlowupPlan:
    base: Base
    kind: str
    role_a: str
    role_b: str
    role_c: Optional[str]
    q: int
    fresh_d: str
    fresh_z: str

    def to_json(self):
        out = {"kind": "blowup", "base": list(self.base.key), "type": self.kind,
               "a": self.role_a, "b": self.role_b}
        if self.role_c is not None:
            out["c"] = self.role_c
        out.update(q=self.q, d=self.fresh_d, z=self.fresh_z)
        return out

    @property
    def new_base(self) -> frozenset:
        return (self.base.members - {self.role_a}) | {self.fresh_d}


@dataclass(frozen=True)
class Ineligible:
    base: Base
    reason: str

    def to_json(self):
        return {"base": list(self.base.key), "ineligible": self.reason}


def _find_base(d, base):
    members = base.members if isinstance(base, Base) else d.check(base)
    for b in bases(d):
        if b.members == members:
            return b
    raise NotABase(f"{sorted(members)} is not a base of the diagram")


def _outside_neighbors(d, members, a):
    return [s for s in d.generators if s not in members and d.m(s, a) != INFINITY]


def _fresh(d, a):
    return f"{a}{RESERVED}d", f"{a}{RESERVED}z"


def blowup_eligibility(d: PDiagram, base) -> Union[BlowupPlan, Ineligible]:
    """A blow-up plan for ``base``, or the reason none exists."""
    base = _find_base(d, base)
    ft = base.finite_type
    B = base.members
    if ft.family == "C" and ft.rank % 2 == 1:
        chain = c_chain(d, B)
        a, b, c = chain[-1], chain[-2], chain[-3]
        for s in _outside_neighbors(d, B, a):
            bad = [t for t in sorted(B) if d.m(s, t) != 2]
            if bad:
                return Ineligible(base, f"{s} is joined to {a} but has label {d.m(s, bad[0])} "
                                        f"to base member {bad[0]}")
        plan = BlowupPlan(base, C_ODD, a, b, c, (ft.rank - 1) // 2, *_fresh(d, a))
    elif ft.family == "D2" and ft.k % 4 == 2:
        plan = None
        reasons = []
        for a in sorted(B):
            (b,) = B - {a}
            bad = [s for s in _outside_neighbors(d, B, a) if d.m(s, a) != 2 or d.m(s, b) != 2]
            if bad:
                reasons.append(f"with {a} removed, {bad[0]} is joined to {a} without commuting "
                               f"with the base")
                continue
            plan = BlowupPlan(base, D2, a, b, None, (ft.k - 2) // 4, *_fresh(d, a))
            break
        if plan is None:
            return Ineligible(base, "; ".join(reasons))
    else:
        return Ineligible(base, f"type {ft} admits no blow-up")
    if plan.fresh_d in d or plan.fresh_z in d:
        return Ineligible(base, f"fresh names {plan.fresh_d}/{plan.fresh_z} already in use")
    return plan


def _revalidate(d, plan):
    try:
        current = blowup_eligibility(d, plan.base)
    except NotABase as exc:
        raise InvalidPlan(str(exc)) from None
    if current != plan:
        reason = current.reason if isinstance(current, Ineligible) else "roles differ"
        raise InvalidPlan(f"plan does not fit the diagram: {reason}")


def blow_up(d: PDiagram, plan: BlowupPlan) -> PDiagram:
    _revalidate(d, plan)
    B, a, b = plan.base.members, plan.role_a, plan.role_b
    nd, nz = plan.fresh_d, plan.fresh_z
    gens = [g for g in d.generators if g != a] + [nd, nz]
    edges = [(s, t, m) for s, t, m in d.edges() if a not in (s, t)]
    if plan.kind == C_ODD:
        edges.append((nd, plan.role_c, 3))
        edges += [(nd, x, 2) for x in sorted(B - {a, plan.role_c})]
    else:
        edges.append((nd, b, 2 * plan.q + 1))
    edges += [(nz, t, 2) for t in sorted(plan.new_base)]
    for s in _outside_neighbors(d, B, a):
        edges += [(s, nd, 2), (s, nz, 2)]
    return PDiagram(gens, edges)


def basic_order_sum(d: PDiagram) -> int:
    return sum(b.finite_type.order for b in bases(d))


def expand(d: PDiagram) -> tuple[PDiagram, list[BlowupPlan]]:
    """Blow up the lexicographically first eligible base until none is left."""
    history = []
    while True:
        for base in bases(d):
            plan = blowup_eligibility(d, base)
            if isinstance(plan, BlowupPlan):
                d = blow_up(d, plan)
                history.append(plan)
                break
        else:
            return d, history


def plan_from_json(d: PDiagram, obj) -> BlowupPlan:
    """Rebuild a logged plan against ``d`` and check that it still applies."""
    if obj.get("kind") != "blowup":
        raise InvalidPlan(f"not a blow-up record: {obj!r}")
    plan = blowup_eligibility(d, obj["base"])
    if isinstance(plan, Ineligible):
        raise InvalidPlan(plan.reason)
    if plan.to_json() != obj:
        raise InvalidPlan(f"logged plan {obj!r} differs from {plan.to_json()!r}")
    return plan

"""Numeric checks in the geometric reflection representation.

Nothing here influences a verdict; the representation is only used to
confirm that words claimed to be new generators satisfy the claimed labels.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .diagram import INFINITY, PDiagram, components
from .errors import InvalidPlan, NotSpherical
from .spherical import c_chain, classify_irreducible, is_spherical

ORDER_BOUND = 200
TOLERANCE = 1e-9


@dataclass
class ReflectionRep:
    generators: tuple
    form: np.ndarray
    matrices: dict

    @property
    def dimension(self) -> int:
        return len(self.generators)

    def word_matrix(self, word) -> np.ndarray:
        M = np.eye(self.dimension)
        for s in parse_word(self, word):
            M = M @ self.matrices[s]
        return M


def build_rep(d: PDiagram) -> ReflectionRep:
    gens = d.generators
    n = len(gens)
    idx = {g: i for i, g in enumerate(gens)}
    B = np.eye(n)
    for s, t, m in d.edges():
        B[idx[s], idx[t]] = B[idx[t], idx[s]] = -math.cos(math.pi / m)
    for i in range(n):
        for j in range(n):
            if i != j and d.m(gens[i], gens[j]) == INFINITY:
                B[i, j] = -1.0
    mats = {}
    for s in gens:
        i = idx[s]
        M = np.eye(n)
        M[i, :] -= 2 * B[i, :]
        mats[s] = M
    return ReflectionRep(gens, B, mats)


def parse_word(rep: ReflectionRep, word) -> list[str]:
    """Accept a sequence of names, or a string split on spaces/commas, or a run of one-letter names."""
    if isinstance(word, str):
        if word in rep.matrices:
            return [word]
        parts = word.replace(",", " ").split()
        if len(parts) > 1:
            word = parts
        elif all(ch in rep.matrices for ch in word):
            word = list(word)
        else:
            raise KeyError(f"cannot read word {word!r}")
    word = list(word)
    for s in word:
        if s not in rep.matrices:
            raise KeyError(f"unknown generator {s!r} in word")
    return word


@dataclass(frozen=True)
class WordOrderReport:
    word1: tuple
    word2: tuple
    order: Optional[int]  # None means no order up to the bound
    bound: int = ORDER_BOUND
    claimed: object = None
    passed: Optional[bool] = None

    @property
    def measured(self) -> str:
        return str(self.order) if self.order is not None else f">{self.bound}"

    def to_json(self):
        claimed = None if self.claimed is None else (
            "inf" if self.claimed == INFINITY else self.claimed)
        return {"word1": list(self.word1), "word2": list(self.word2), "measured": self.measured,
                "claimed": claimed, "pass": self.passed}


def _order(M, bound, tol):
    n = M.shape[0]
    I = np.eye(n)
    P = I
    # powers of an infinite-order element may overflow; the comparison then just fails
    with np.errstate(over="ignore", invalid="ignore"):
        for k in range(1, bound + 1):
            P = P @ M
            if np.max(np.abs(P - I)) < tol:
                return k
    return None


def word_order(rep: ReflectionRep, w1, w2, claimed=None,
               bound: int = ORDER_BOUND, tol: float = TOLERANCE) -> WordOrderReport:
    """Order of ``w1 * w2``; with ``claimed`` given, also whether it matches."""
    w1, w2 = parse_word(rep, w1), parse_word(rep, w2)
    if not w1 or not w2:
        raise ValueError("words must be nonempty")
    k = _order(rep.word_matrix(w1) @ rep.word_matrix(w2), bound, tol)
    passed = None
    if claimed is not None:
        passed = (k is None) if claimed == INFINITY else (k == claimed)
    return WordOrderReport(tuple(w1), tuple(w2), k, bound, claimed, passed)


def _component_word(d, comp):
    ft = classify_irreducible(d, comp)
    if len(comp) == 1:
        return list(comp)
    if ft.rank == 2:
        s, t = sorted(comp)
        m = d.m(s, t)
        return [s if i % 2 == 0 else t for i in range(m)]
    if ft.family == "A":
        path = c_chain(d, comp)
        word = []
        for i in range(1, len(path) + 1):
            word += path[:i][::-1]
        return word
    if ft.family == "C":
        # the Coxeter element to the power n is -1
        return c_chain(d, comp) * ft.rank
    return None


def _greedy_word(rep, members):
    """Extend a word on the right while some simple root stays positive."""
    idx = {g: i for i, g in enumerate(rep.generators)}
    word = []
    M = np.eye(rep.dimension)
    while True:
        for s in sorted(members):
            col = M[:, idx[s]]
            if np.all(col > -TOLERANCE):
                word.append(s)
                M = M @ rep.matrices[s]
                break
        else:
            return word


def longest_word(d: PDiagram, members, rep: ReflectionRep | None = None) -> list[str]:
    """A reduced word for the longest element of the spherical subgroup on ``members``."""
    members = d.check(members)
    if not is_spherical(d, members):
        raise NotSpherical(f"{sorted(members)} does not generate a finite group")
    word = []
    for comp in components(d, members, "C"):
        w = _component_word(d, comp)
        if w is None:
            w = _greedy_word(rep or build_rep(d), comp)
        word += w
    return word


def verify_blowup(d: PDiagram, plan) -> list[WordOrderReport]:
    """Check every label the blow-up claims, using words in the input diagram."""
    from .expansion import _revalidate, blow_up

    _revalidate(d, plan)
    out = blow_up(d, plan)
    rep = build_rep(d)
    a, b = plan.role_a, plan.role_b
    words = {plan.fresh_d: [a, b, a], plan.fresh_z: longest_word(d, plan.base.members, rep)}

    def word_of(t):
        return words.get(t, [t])

    reports = []
    for t in sorted(plan.new_base - {plan.fresh_d}):
        reports.append(word_order(rep, words[plan.fresh_d], word_of(t), out.label(plan.fresh_d, t)))
    for t in sorted(plan.new_base):
        reports.append(word_order(rep, words[plan.fresh_z], word_of(t), out.label(plan.fresh_z, t)))
    for s in out.generators:
        if s in words or s in plan.base.members:
            continue
        for fresh in (plan.fresh_d, plan.fresh_z):
            reports.append(word_order(rep, [s], words[fresh], out.label(s, fresh)))
    return reports


__all__ = ["ReflectionRep", "WordOrderReport", "build_rep", "word_order", "longest_word",
           "verify_blowup", "parse_word", "InvalidPlan"]

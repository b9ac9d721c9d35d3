import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from coxiso.chordal import (chordality, close_separator, is_chordal, is_minimal_separator,
                            minimal_separators_between, separates)
from coxiso.diagram import INFINITY, PDiagram, is_simplex
from coxiso.errors import AdjacentPair, SamePair, UnknownGenerator
from helpers import brute_minimal_separators, random_chordal, random_diagram


def to_nx(d):
    g = nx.Graph()
    g.add_nodes_from(d.generators)
    g.add_edges_from((s, t) for s, t, _ in d.edges())
    return g


def check_witness(d, w):
    if w.result:
        assert sorted(w.peo) == sorted(d.generators)
        pos = {v: i for i, v in enumerate(w.peo)}
        for v in w.peo:
            later = [u for u in d.neighbors(v) if pos[u] > pos[v]]
            assert all(d.m(x, y) != INFINITY for x, y in combinations(later, 2))
    else:
        cyc = w.chordless_cycle
        k = len(cyc)
        assert k >= 4 and len(set(cyc)) == k
        for i in range(k):
            for j in range(i + 1, k):
                consecutive = j == i + 1 or (i == 0 and j == k - 1)
                assert (d.m(cyc[i], cyc[j]) != INFINITY) == consecutive


PATH = PDiagram("abc", [("a", "b", 3), ("b", "c", 3)])


class TestChordality:
    def test_four_cycle(self):
        d = PDiagram("abcd", [("a", "b", 3), ("b", "c", 3), ("c", "d", 3), ("d", "a", 3)])
        w = chordality(d)
        assert not w.result
        assert set(w.chordless_cycle) == set("abcd")
        check_witness(d, w)

    def test_fig1(self, fig1):
        w = chordality(fig1)
        assert w.result
        check_witness(fig1, w)

    def test_complete(self):
        d = PDiagram("abcd", [(s, t, 3) for s, t in combinations("abcd", 2)])
        assert is_chordal(d)

    def test_fixtures_chordal(self, fig1, fig3l, fig3r, fig2):
        for d in (fig1, fig3l, fig3r, *fig2.values()):
            assert is_chordal(d)

    @given(st.integers(0, 10 ** 6), st.integers(1, 9), st.floats(0.1, 0.9))
    @settings(max_examples=300, deadline=None)
    def test_matches_networkx(self, seed, n, p):
        d = random_diagram(random.Random(seed), n, p=p)
        w = chordality(d)
        assert w.result == nx.is_chordal(to_nx(d))
        check_witness(d, w)

    @given(st.integers(0, 10 ** 6), st.integers(1, 10))
    @settings(max_examples=100, deadline=None)
    def test_generator_is_chordal(self, seed, n):
        assert is_chordal(random_chordal(random.Random(seed), n))


class TestSeparators:
    def test_path(self):
        assert minimal_separators_between(PATH, "a", "c") == [frozenset("b")]
        assert close_separator(PATH, "a", "c") == {"b"}

    def test_fig1(self, fig1):
        assert minimal_separators_between(fig1, "c", "f") == [frozenset("ab")]
        assert minimal_separators_between(fig1, "c", "e") == [frozenset("abd")]
        assert close_separator(fig1, "c", "f") == set("ab")
        assert close_separator(fig1, "c", "e") == set("abd")

    def test_is_minimal(self, fig1):
        assert is_minimal_separator(fig1, set("ab"), "c", "f")
        assert not is_minimal_separator(fig1, set("abd"), "c", "f")
        assert not is_minimal_separator(PATH, set(), "a", "c")
        assert separates(fig1, set("abd"), "c", "f")

    def test_errors(self, fig1):
        with pytest.raises(AdjacentPair):
            minimal_separators_between(fig1, "a", "b")
        with pytest.raises(SamePair):
            minimal_separators_between(fig1, "c", "c")
        with pytest.raises(UnknownGenerator):
            close_separator(fig1, "c", "zz")
        with pytest.raises(AdjacentPair):
            close_separator(fig1, "a", "c")

    def test_disconnected(self):
        d = PDiagram("abc", [("a", "b", 3)])
        assert minimal_separators_between(d, "a", "c") == [frozenset()]

    @given(st.integers(0, 10 ** 6), st.integers(2, 8), st.floats(0.2, 0.8))
    @settings(max_examples=120, deadline=None)
    def test_against_brute_force(self, seed, n, p):
        d = random_diagram(random.Random(seed), n, p=p)
        for c, f in combinations(d.generators, 2):
            if d.m(c, f) != INFINITY:
                continue
            got = minimal_separators_between(d, c, f)
            assert set(got) == brute_minimal_separators(d, c, f)
            assert all(is_minimal_separator(d, B, c, f) for B in got)
            close = close_separator(d, c, f)
            assert close in got
            assert [B for B in got if all(c in d.neighbors(b) for b in B)] == [close]

    @given(st.integers(0, 10 ** 6), st.integers(2, 8))
    @settings(max_examples=60, deadline=None)
    def test_chordal_separators_are_simplices(self, seed, n):
        d = random_chordal(random.Random(seed), n)
        for c, f in combinations(d.generators, 2):
            if d.m(c, f) == INFINITY:
                assert all(is_simplex(d, B) for B in minimal_separators_between(d, c, f))

"""Brute-force reference computations for finite groups.

Everything here works with explicit element lists and index arithmetic:
subgroups are frozensets of element indices, products are computed by
folding words through precomputed generator permutations, and parabolic
subgroups are enumerated literally as {w u w^{-1} : u in W_I} over all
elements w and subsets I.  No root systems and no Tits cone: this module is
the independent witness the geometric algorithms are checked against.
"""

from __future__ import annotations

from itertools import combinations

from .coxgroup import CoxeterSystem, GroupElement
from .errors import GroupNotFinite, MixedSystems, NotAParabolic
from .parabolic import Parabolic, make


class FiniteGroupTable:
    """Element list and multiplication structure of a finite Coxeter group."""

    def __init__(self, system: CoxeterSystem, cap: int = 200000):
        self.system = system
        self.elements: list[GroupElement] = system.enumerate_elements(cap)
        self.index: dict[GroupElement, int] = {
            g: i for i, g in enumerate(self.elements)}
        n = system.rank
        # left_action[s][i] = index of generator_s * element_i
        self.left_action = [
            [self.index[system.normalize((s,) + g.word)] for g in self.elements]
            for s in range(n)]
        self.inverse = [self.index[system.normalize(tuple(reversed(g.word)))]
                        for g in self.elements]
        self._subgroups: dict[frozenset[int], frozenset[int]] = {}
        self._parabolics = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def mult(self, i: int, j: int) -> int:
        """Index of elements[i] * elements[j], by folding the word of i
        through the left generator actions."""
        out = j
        for s in reversed(self.elements[i].word):
            out = self.left_action[s][out]
        return out

    def element_index(self, g: GroupElement) -> int:
        if g.system is not self.system:
            raise MixedSystems("element belongs to a different system")
        return self.index[g]

    def special_subgroup(self, gens) -> frozenset[int]:
        """Indices of W_I, by closure of the generators under multiplication."""
        I = self.system.label_set(gens)
        cached = self._subgroups.get(I)
        if cached is not None:
            return cached
        members = {self.index[self.system.identity]}
        frontier = list(members)
        while frontier:
            nxt = []
            for i in frontier:
                for s in I:
                    j = self.left_action[s][i]
                    if j not in members:
                        members.add(j)
                        nxt.append(j)
            frontier = nxt
        out = frozenset(members)
        self._subgroups[I] = out
        return out

    def conjugate_set(self, w_index: int, members: frozenset[int]) -> frozenset[int]:
        wi = self.inverse[w_index]
        return frozenset(self.mult(self.mult(w_index, u), wi) for u in members)

    def subgroup_elements(self, parabolic: Parabolic) -> frozenset[int]:
        """Element indices of a parabolic given by (rep, gens)."""
        if parabolic.system is not self.system:
            raise MixedSystems("subgroup belongs to a different system")
        base = self.special_subgroup(parabolic.gens)
        return self.conjugate_set(self.index[parabolic.rep], base)

    def parabolics(self) -> list[tuple[Parabolic, frozenset[int]]]:
        """All distinct parabolic subgroups as element sets, each labelled by
        the first (subset, element) pair producing it.  Subsets are scanned
        by (size, index order) and elements in enumeration order, so the list
        is deterministic."""
        if self._parabolics is not None:
            return self._parabolics
        n = self.system.rank
        subsets = [frozenset(c) for size in range(n + 1)
                   for c in combinations(range(n), size)]
        found: dict[frozenset[int], Parabolic] = {}
        order = []
        for I in subsets:
            base = self.special_subgroup(I)
            for wi, w in enumerate(self.elements):
                members = self.conjugate_set(wi, base)
                if members not in found:
                    found[members] = make(w, I)
                    order.append(members)
        self._parabolics = [(found[m], m) for m in order]
        return self._parabolics


def enumerate_group(system: CoxeterSystem, cap: int = 200000) -> FiniteGroupTable:
    """Enumerate a finite group; raises GroupNotFinite past the cap."""
    cached = getattr(system, "_oracle_table", None)
    if cached is not None:
        return cached
    table = FiniteGroupTable(system, cap)
    system._oracle_table = table
    return table


def all_parabolics(table: FiniteGroupTable) -> list[tuple[Parabolic, frozenset[int]]]:
    return table.parabolics()


def brute_intersect(members_a: frozenset[int],
                    members_b: frozenset[int]) -> frozenset[int]:
    """Literal set intersection of two subgroups given by element indices."""
    return members_a & members_b


def brute_pc(table: FiniteGroupTable,
             elements) -> tuple[Parabolic, frozenset[int]]:
    """Smallest parabolic containing the given elements: the literal
    intersection of all parabolic element sets containing them, identified
    among the enumerated parabolics.  Raises NotAParabolic if the intersection
    is not itself on the list (it always is, which is the point)."""
    indices = {table.element_index(g) for g in elements}
    containing = [m for _, m in table.parabolics() if indices <= m]
    result = frozenset(table.index.values())
    for m in containing:
        result &= m
    for p, m in table.parabolics():
        if m == result:
            return p, m
    raise NotAParabolic("intersection of parabolics not found among parabolics")

"""Enumeration of proper nontrivial cyclic subgroups: the graph's vertex set."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .arith import is_prime
from .groups import FiniteGroup


@dataclass(frozen=True)
class CyclicSubgroup:
    """One cyclic subgroup <g>, with its canonical (smallest) generator.

    ``mask`` is the element set as a bitmask over group element indices; it is
    what the graph builder intersects.
    """

    generator: int
    elements: tuple[int, ...]
    order: int
    mask: int

    def contains(self, other: "CyclicSubgroup") -> bool:
        return self.mask | other.mask == self.mask


def cyclic_subgroups(group: FiniteGroup) -> list[CyclicSubgroup]:
    """All proper nontrivial cyclic subgroups, deduplicated and canonically ordered.

    Walks every element once: generating <g> also identifies all phi(m) of its
    generators (the powers g^k with gcd(k, m) = 1), which are then skipped.
    Total cost is the sum of |H| over distinct cyclic subgroups H.
    """
    n = group.order
    mul, e = group.mul, group.identity
    done = bytearray(n)
    done[e] = 1
    subs: list[CyclicSubgroup] = []
    for g in range(n):
        if done[g]:
            continue
        powers = [e]
        x = g
        while x != e:
            powers.append(x)
            x = mul(x, g)
        m = len(powers)
        gens = [powers[k] for k in range(1, m) if gcd(k, m) == 1]
        for h in gens:
            done[h] = 1
        if m == n:  # <g> = G: not a proper subgroup
            continue
        elements = tuple(sorted(powers))
        mask = 0
        for v in elements:
            mask |= 1 << v
        subs.append(CyclicSubgroup(min(gens), elements, m, mask))
    subs.sort(key=lambda s: (s.order, s.elements))
    return subs


def prime_order_subgroup_count(group: FiniteGroup) -> int:
    """Number of proper subgroups of prime order (0 for G of prime order)."""
    return sum(1 for s in cyclic_subgroups(group) if is_prime(s.order))


def maximal_cyclic_subgroups(group: FiniteGroup) -> list[CyclicSubgroup]:
    """Maximal elements, under inclusion, among the proper cyclic subgroups.

    When G itself is cyclic the unique maximal cyclic subgroup of G is G,
    which is not a vertex; callers needing that case should also consult
    :func:`cycgraph.groups.is_cyclic_group`.
    """
    subs = cyclic_subgroups(group)
    out = []
    for s in subs:
        if not any(t is not s and t.contains(s) for t in subs):
            out.append(s)
    return out

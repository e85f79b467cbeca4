"""Concrete finite groups: multiplication tables, family constructors, file ingestion.

Elements are dense integer indices 0..n-1.  Small groups carry a materialized
Cayley table; larger ones multiply through a closed-form family rule, which
keeps big cyclic groups cheap.
"""

from __future__ import annotations

import re
from typing import Callable, Sequence

import numpy as np

from .errors import (
    InvalidPermutation,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotLatinSquare,
    OrderCapExceeded,
)

#: orders up to which multiplication tables are materialized
TABLE_CAP = 512
#: default cap on group order for closure-style constructions
DEFAULT_ORDER_CAP = 20000
#: orders up to which associativity of user tables is checked exhaustively
DEFAULT_ASSOC_CAP = 512


class FiniteGroup:
    """An immutable finite group on element indices 0..order-1.

    ``mul`` is a plain callable attribute so hot loops can bind it locally.
    """

    __slots__ = ("order", "identity", "descriptor", "mul", "_table")

    def __init__(
        self,
        order: int,
        mul: Callable[[int, int], int],
        identity: int,
        descriptor: str,
        table: list[list[int]] | None = None,
    ):
        self.order = order
        self.identity = identity
        self.descriptor = descriptor
        self._table = table
        if table is not None:
            self.mul = lambda a, b, _t=table: _t[a][b]
        else:
            self.mul = mul

    def __repr__(self):
        return f"FiniteGroup({self.descriptor}, order={self.order})"

    def cayley_table(self) -> list[list[int]]:
        """Full multiplication table (materializes it for rule-based groups)."""
        if self._table is not None:
            return self._table
        mul = self.mul
        n = self.order
        return [[mul(a, b) for b in range(n)] for a in range(n)]


def _maybe_table(order: int, rule: Callable[[int, int], int]) -> list[list[int]] | None:
    if order <= TABLE_CAP:
        return [[rule(a, b) for b in range(order)] for a in range(order)]
    return None


# --- validation -------------------------------------------------------------

def validate_table(table: Sequence[Sequence[int]], assoc_cap: int = DEFAULT_ASSOC_CAP) -> int:
    """Check the group axioms on a raw table; returns the identity index.

    Check order is fixed (shape, Latin square, identity, inverses,
    associativity) and only the first failure is reported.
    """
    n = len(table)
    if n == 0:
        raise NotLatinSquare("table is empty")
    for i, row in enumerate(table):
        if len(row) != n:
            raise NotLatinSquare(f"row {i} has length {len(row)}, expected {n}")
        for j, v in enumerate(row):
            if not (0 <= v < n):
                raise NotLatinSquare(f"entry ({i},{j}) = {v} out of range 0..{n - 1}")
    t = np.asarray(table, dtype=np.int64)
    full = set(range(n))
    for i in range(n):
        if set(t[i].tolist()) != full:
            raise NotLatinSquare(f"row {i} is not a permutation of 0..{n - 1}")
    for j in range(n):
        if set(t[:, j].tolist()) != full:
            raise NotLatinSquare(f"column {j} is not a permutation of 0..{n - 1}")
    ident = np.arange(n)
    identity = None
    for e in range(n):
        if np.array_equal(t[e], ident) and np.array_equal(t[:, e], ident):
            identity = e
            break
    if identity is None:
        raise NoIdentity("no two-sided identity element")
    for x in range(n):
        if identity not in t[x]:
            raise NoInverse(f"element {x} has no inverse")
    if n <= assoc_cap:
        for a in range(n):
            left = t[t[a]]          # left[b,c] = t[t[a,b], c]
            right = t[a][t]         # right[b,c] = t[a, t[b,c]]
            if not np.array_equal(left, right):
                b, c = map(int, np.argwhere(left != right)[0])
                raise NotAssociative(
                    f"({a}*{b})*{c} = {int(left[b, c])} but {a}*({b}*{c}) = {int(right[b, c])}"
                )
    return identity


def from_cayley_table(
    table: Sequence[Sequence[int]],
    descriptor: str = "cayley-table",
    assoc_cap: int = DEFAULT_ASSOC_CAP,
) -> FiniteGroup:
    identity = validate_table(table, assoc_cap=assoc_cap)
    rows = [list(r) for r in table]
    return FiniteGroup(len(rows), lambda a, b: rows[a][b], identity, descriptor, table=rows)


# --- family constructors ----------------------------------------------------

def cyclic(n: int, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    if n < 1:
        raise ValueError("cyclic(n) needs n >= 1")
    if n > order_cap:
        raise OrderCapExceeded(f"cyclic group of order {n} exceeds cap {order_cap}")
    # no table: the closed-form rule is as fast as a lookup and needs no memory
    return FiniteGroup(n, lambda a, b: (a + b) % n, 0, f"Z({n})")


def direct_product(g: FiniteGroup, h: FiniteGroup, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    n = g.order * h.order
    if n > order_cap:
        raise OrderCapExceeded(f"direct product of order {n} exceeds cap {order_cap}")
    m, gmul, hmul = h.order, g.mul, h.mul

    def rule(a, b):
        return gmul(a // m, b // m) * m + hmul(a % m, b % m)

    return FiniteGroup(
        n, rule, g.identity * m + h.identity,
        f"{g.descriptor}x{h.descriptor}", table=_maybe_table(n, rule),
    )


def dihedral(n: int, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Dihedral group of order 2n; element i + s*n is r^i s^s."""
    if n < 1:
        raise ValueError("dihedral(n) needs n >= 1")
    if 2 * n > order_cap:
        raise OrderCapExceeded(f"dihedral group of order {2 * n} exceeds cap {order_cap}")

    def rule(a, b):
        i, s = a % n, a // n
        j, t = b % n, b // n
        k = (i + j) % n if s == 0 else (i - j) % n
        return k + ((s + t) % 2) * n

    return FiniteGroup(2 * n, rule, 0, f"D({n})", table=_maybe_table(2 * n, rule))


def dicyclic(m: int, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Dicyclic group of order 4m (<a,b | a^{2m}=1, b^2=a^m, bab^-1=a^-1>).

    dicyclic(2^(a-2)) is the generalized quaternion group of order 2^a.
    """
    if m < 2:
        raise ValueError("dicyclic(m) needs m >= 2")
    if 4 * m > order_cap:
        raise OrderCapExceeded(f"dicyclic group of order {4 * m} exceeds cap {order_cap}")
    n2 = 2 * m

    def rule(a, b):
        i, s = a % n2, a // n2
        j, t = b % n2, b // n2
        if s == 0:
            return (i + j) % n2 + t * n2
        if t == 0:
            return (i - j) % n2 + n2
        return (i - j + m) % n2

    return FiniteGroup(4 * m, rule, 0, f"Dic({m})", table=_maybe_table(4 * m, rule))


def from_permutation_generators(
    degree: int,
    gens: Sequence[Sequence[int]],
    descriptor: str | None = None,
    order_cap: int = DEFAULT_ORDER_CAP,
) -> FiniteGroup:
    """Closure of permutation generators; elements in BFS discovery order.

    Generators are sorted lexicographically first so runs are reproducible.
    The result is associative by construction and skips table validation.
    """
    for g in gens:
        if sorted(g) != list(range(degree)):
            raise InvalidPermutation(f"{tuple(g)} is not a permutation of 0..{degree - 1}")
    gens = sorted(tuple(g) for g in gens)
    ident = tuple(range(degree))
    elems = [ident]
    index = {ident: 0}
    queue = [ident]
    while queue:
        x = queue.pop(0)
        for g in gens:
            y = tuple(x[g[i]] for i in range(degree))
            if y not in index:
                if len(elems) >= order_cap:
                    raise OrderCapExceeded(f"closure exceeds order cap {order_cap}")
                index[y] = len(elems)
                elems.append(y)
                queue.append(y)
    n = len(elems)

    def rule(a, b, _e=elems, _i=index, _d=degree):
        pa, pb = _e[a], _e[b]
        return _i[tuple(pa[pb[i]] for i in range(_d))]

    desc = descriptor or f"perm-group:deg{degree}:order{n}"
    return FiniteGroup(n, rule, 0, desc, table=_maybe_table(n, rule))


def _cycle(points: Sequence[int], degree: int) -> tuple[int, ...]:
    p = list(range(degree))
    for a, b in zip(points, points[1:]):
        p[a] = b
    p[points[-1]] = points[0]
    return tuple(p)


def symmetric(n: int, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    if n < 1:
        raise ValueError("symmetric(n) needs n >= 1")
    if n == 1:
        return from_permutation_generators(1, [], descriptor="S(1)", order_cap=order_cap)
    gens = [_cycle([0, 1], n)]
    if n > 2:
        gens.append(_cycle(list(range(n)), n))
    g = from_permutation_generators(n, gens, descriptor=f"S({n})", order_cap=order_cap)
    return g


def alternating(n: int, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    if n < 1:
        raise ValueError("alternating(n) needs n >= 1")
    if n <= 2:
        return from_permutation_generators(max(n, 1), [], descriptor=f"A({n})", order_cap=order_cap)
    gens = [_cycle([0, 1, 2], n)]
    if n > 3:
        if n % 2 == 1:
            gens.append(_cycle(list(range(n)), n))
        else:
            gens.append(_cycle(list(range(1, n)), n))
    return from_permutation_generators(n, gens, descriptor=f"A({n})", order_cap=order_cap)


def elementary_abelian(p: int, k: int, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    if k < 1:
        raise ValueError("elementary_abelian(p, k) needs k >= 1")
    g = cyclic(p, order_cap)
    for _ in range(k - 1):
        g = direct_product(g, cyclic(p, order_cap), order_cap)
    return g


# --- element-level operations ----------------------------------------------

def element_order(group: FiniteGroup, g: int) -> int:
    """Least k >= 1 with g^k = identity."""
    if not (0 <= g < group.order):
        raise IndexError(f"element {g} out of range")
    mul, e = group.mul, group.identity
    k, x = 1, g
    while x != e:
        x = mul(x, g)
        k += 1
    return k


def element_orders(group: FiniteGroup) -> list[int]:
    return [element_order(group, g) for g in range(group.order)]


def is_cyclic_group(group: FiniteGroup) -> bool:
    n = group.order
    mul, e = group.mul, group.identity
    for g in range(n):
        k, x = 1, g
        while x != e:
            x = mul(x, g)
            k += 1
        if k == n:
            return True
    return False


def relabel(group: FiniteGroup, perm: Sequence[int]) -> FiniteGroup:
    """Isomorphic copy of the group with elements renamed by ``perm``.

    perm maps old index -> new index; the new identity index is recomputed.
    """
    n = group.order
    if sorted(perm) != list(range(n)):
        raise InvalidPermutation("relabel needs a permutation of 0..n-1")
    inv = [0] * n
    for old, new in enumerate(perm):
        inv[new] = old
    mul = group.mul
    table = [[perm[mul(inv[i], inv[j])] for j in range(n)] for i in range(n)]
    return FiniteGroup(
        n, lambda a, b: table[a][b], perm[group.identity],
        f"relabel:{group.descriptor}", table=table,
    )


# --- file formats -----------------------------------------------------------

def read_cayley_file(path: str, assoc_cap: int = DEFAULT_ASSOC_CAP) -> FiniteGroup:
    """Cayley-table file: line 1 is n, then n lines of n space-separated indices."""
    with open(path) as fh:
        tokens = fh.read().split()
    if not tokens:
        raise NotLatinSquare(f"{path}: empty file")
    n = int(tokens[0])
    body = tokens[1:]
    if len(body) != n * n:
        raise NotLatinSquare(f"{path}: expected {n * n} entries, found {len(body)}")
    table = [[int(body[i * n + j]) for j in range(n)] for i in range(n)]
    return from_cayley_table(table, descriptor=f"cayley-file:{path}", assoc_cap=assoc_cap)


def write_cayley_file(group: FiniteGroup, path: str) -> None:
    n = group.order
    table = group.cayley_table()
    with open(path, "w") as fh:
        fh.write(f"{n}\n")
        for row in table:
            fh.write(" ".join(map(str, row)) + "\n")


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycle_notation(text: str, degree: int) -> tuple[int, ...]:
    """One permutation in cycle notation over 0-based points, e.g. '(0 1 2)(3 4)'."""
    if _CYCLE_RE.sub("", re.sub(r"\s", "", text)) != "":
        raise InvalidPermutation(f"malformed cycle notation: {text!r}")
    perm = list(range(degree))
    seen: set[int] = set()
    for cyc in _CYCLE_RE.findall(text):
        pts = [int(tok) for tok in cyc.split()]
        if not pts:
            continue
        if any(not (0 <= p < degree) for p in pts):
            raise InvalidPermutation(f"bad cycle {cyc!r} for degree {degree}")
        if len(set(pts)) != len(pts) or seen & set(pts):
            raise InvalidPermutation(f"repeated point in {text!r}")
        seen |= set(pts)
        for a, b in zip(pts, pts[1:]):
            perm[a] = b
        perm[pts[-1]] = pts[0]
    return tuple(perm)


def read_permutation_file(path: str, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Permutation-generator file: line 1 is the degree, one generator per line after."""
    with open(path) as fh:
        lines = [ln.strip() for ln in fh.readlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise InvalidPermutation(f"{path}: empty file")
    degree = int(lines[0])
    gens = [parse_cycle_notation(ln, degree) for ln in lines[1:]]
    return from_permutation_generators(
        degree, gens, descriptor=f"perm-file:{path}", order_cap=order_cap
    )

"""Symbolic group specs: the catalog grammar and abelian-group enumeration.

Grammar accepted by :func:`parse_spec`::

    Z(n) | D(n) | Dic(m) | Q(2^a) | S(n) | A(n)
    atom x atom x ...          (direct products)
    file:cayley:<path> | file:perm:<path>

Q(2^a) is sugar for Dic(2^(a-2)); whitespace is ignored.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field

from . import groups
from .arith import factorize, partitions, prime_power
from .errors import SpecParseError
from .groups import DEFAULT_ORDER_CAP, FiniteGroup


@dataclass(frozen=True)
class GroupSpec:
    kind: str                         # cyclic|product|dihedral|dicyclic|symmetric|alternating|cayley_file|perm_file
    params: tuple = field(default=())

    @property
    def descriptor(self) -> str:
        k, p = self.kind, self.params
        if k == "cyclic":
            return f"Z({p[0]})"
        if k == "product":
            return "x".join(c.descriptor for c in p)
        if k == "dihedral":
            return f"D({p[0]})"
        if k == "dicyclic":
            return f"Dic({p[0]})"
        if k == "symmetric":
            return f"S({p[0]})"
        if k == "alternating":
            return f"A({p[0]})"
        if k == "cayley_file":
            return f"file:cayley:{p[0]}"
        if k == "perm_file":
            return f"file:perm:{p[0]}"
        raise SpecParseError(f"unknown spec kind {k!r}")

    def order(self) -> int | None:
        """Group order, or None for file-backed specs (unknown before realization)."""
        k, p = self.kind, self.params
        if k == "cyclic":
            return p[0]
        if k == "product":
            out = 1
            for c in p:
                o = c.order()
                if o is None:
                    return None
                out *= o
            return out
        if k == "dihedral":
            return 2 * p[0]
        if k == "dicyclic":
            return 4 * p[0]
        if k == "symmetric":
            return math.factorial(p[0])
        if k == "alternating":
            return max(math.factorial(p[0]) // 2, 1)
        return None

    def realize(self, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
        k, p = self.kind, self.params
        if k == "cyclic":
            return groups.cyclic(p[0], order_cap)
        if k == "product":
            g = p[0].realize(order_cap)
            for child in p[1:]:
                g = groups.direct_product(g, child.realize(order_cap), order_cap)
            return g
        if k == "dihedral":
            return groups.dihedral(p[0], order_cap)
        if k == "dicyclic":
            return groups.dicyclic(p[0], order_cap)
        if k == "symmetric":
            return groups.symmetric(p[0], order_cap)
        if k == "alternating":
            return groups.alternating(p[0], order_cap)
        if k == "cayley_file":
            return groups.read_cayley_file(p[0])
        if k == "perm_file":
            return groups.read_permutation_file(p[0], order_cap)
        raise SpecParseError(f"unknown spec kind {k!r}")


def Zs(*orders: int) -> GroupSpec:
    """Convenience: direct product of cyclic groups Z(orders[0]) x ..."""
    if len(orders) == 1:
        return GroupSpec("cyclic", (orders[0],))
    return GroupSpec("product", tuple(GroupSpec("cyclic", (n,)) for n in orders))


_ATOM_RE = re.compile(r"^(Z|D|Dic|Q|S|A)\(([0-9^]+)\)$")


def _parse_atom(text: str) -> GroupSpec:
    m = _ATOM_RE.match(text)
    if not m:
        raise SpecParseError(f"cannot parse group atom {text!r}")
    name, arg = m.groups()
    if "^" in arg:
        base, exp = arg.split("^", 1)
        val = int(base) ** int(exp)
    else:
        val = int(arg)
    if name == "Z":
        if val < 1:
            raise SpecParseError(f"Z(n) needs n >= 1, got {val}")
        return GroupSpec("cyclic", (val,))
    if name == "D":
        if val < 1:
            raise SpecParseError(f"D(n) needs n >= 1, got {val}")
        return GroupSpec("dihedral", (val,))
    if name == "Dic":
        if val < 2:
            raise SpecParseError(f"Dic(m) needs m >= 2, got {val}")
        return GroupSpec("dicyclic", (val,))
    if name == "Q":
        pp = prime_power(val)
        if pp is None or pp[0] != 2 or val < 8:
            raise SpecParseError(f"Q(k) needs k a power of two >= 8, got {val}")
        return GroupSpec("dicyclic", (val // 4,))
    if name == "S":
        if val < 1:
            raise SpecParseError(f"S(n) needs n >= 1, got {val}")
        return GroupSpec("symmetric", (val,))
    if val < 1:
        raise SpecParseError(f"A(n) needs n >= 1, got {val}")
    return GroupSpec("alternating", (val,))


def parse_spec(text: str) -> GroupSpec:
    s = text.strip()
    if s.startswith("file:cayley:"):
        return GroupSpec("cayley_file", (s[len("file:cayley:"):],))
    if s.startswith("file:perm:"):
        return GroupSpec("perm_file", (s[len("file:perm:"):],))
    s = re.sub(r"\s", "", s)
    if not s:
        raise SpecParseError("empty group spec")
    atoms = [_parse_atom(a) for a in s.split("x")]
    if len(atoms) == 1:
        return atoms[0]
    return GroupSpec("product", tuple(atoms))


# --- abelian group enumeration ----------------------------------------------

def invariant_factors(prime_powers: list[tuple[int, int]]) -> list[int]:
    """Invariant factor decomposition d_1 | d_2 | ... given (prime, exponent) parts.

    Returned descending, so the leading factor is the exponent of the group.
    """
    by_prime: dict[int, list[int]] = {}
    for p, e in prime_powers:
        by_prime.setdefault(p, []).append(e)
    for exps in by_prime.values():
        exps.sort(reverse=True)
    width = max((len(v) for v in by_prime.values()), default=0)
    out = []
    for i in range(width):
        d = 1
        for p, exps in by_prime.items():
            if i < len(exps):
                d *= p ** exps[i]
        out.append(d)
    return sorted(out, reverse=True)


def abelian_groups_of_order(n: int) -> list[GroupSpec]:
    """One spec per isomorphism class of abelian groups of order n.

    Specs are in invariant-factor form (e.g. Z(36), Z(12)xZ(3)), so the
    cyclic class always appears as a plain Z(n).
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    if n == 1:
        return [GroupSpec("cyclic", (1,))]
    fact = factorize(n)
    per_prime = [[(p, part) for part in partitions(a)] for p, a in fact]
    out = []
    for combo in itertools.product(*per_prime):
        pp = [(p, e) for p, part in combo for e in part]
        out.append(Zs(*invariant_factors(pp)))
    return out


def abelian_prime_signature(spec: GroupSpec) -> tuple[tuple[int, int], ...] | None:
    """Multiset of (prime, exponent) parts if the spec is a product of cyclics."""
    if spec.kind == "cyclic":
        children = [spec]
    elif spec.kind == "product" and all(c.kind == "cyclic" for c in spec.params):
        children = list(spec.params)
    else:
        return None
    sig = []
    for c in children:
        sig.extend(factorize(c.params[0]))
    return tuple(sorted(sig))


def is_cyclic_spec(spec: GroupSpec) -> bool:
    """True when the spec denotes a cyclic group (in its abelian normal form)."""
    sig = abelian_prime_signature(spec)
    if sig is None:
        return False
    primes = [p for p, _ in sig]
    return len(primes) == len(set(primes))


def in_planar_classification(spec: GroupSpec) -> bool:
    """Membership in the planar list for non-cyclic abelian groups:
    Z_p^n, Z4xZ2, Z9xZ3, Z_2q x Z2 (q odd prime), Z4xZ4."""
    sig = abelian_prime_signature(spec)
    if sig is None:
        raise ValueError(f"{spec.descriptor} is not in abelian normal form")
    if all(e == 1 for _, e in sig) and len({p for p, _ in sig}) == 1:
        return True  # elementary abelian Z_p^n
    if sig in (((2, 1), (2, 2)), ((3, 1), (3, 2)), ((2, 2), (2, 2))):
        return True
    if len(sig) == 3:
        s = sorted(sig)
        if s[0] == (2, 1) and s[1] == (2, 1) and s[2][1] == 1 and s[2][0] != 2:
            return True  # Z_2q x Z_2 = Z2 x Z2 x Zq
    return False

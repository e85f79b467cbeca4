import random

import pytest

from cycgraph.errors import (
    InvalidPermutation,
    NoIdentity,
    NotAssociative,
    NotLatinSquare,
    OrderCapExceeded,
)
from cycgraph.groups import (
    alternating,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    element_order,
    element_orders,
    elementary_abelian,
    from_cayley_table,
    from_permutation_generators,
    is_cyclic_group,
    parse_cycle_notation,
    read_cayley_file,
    read_permutation_file,
    relabel,
    symmetric,
    validate_table,
    write_cayley_file,
)

# A Latin square with identity 0 that fails associativity: (1*1)*2 != 1*(1*2).
NONASSOC_LOOP5 = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 3, 4, 0, 1],
    [3, 4, 1, 2, 0],
    [4, 2, 0, 1, 3],
]


class TestValidation:
    def test_trivial_group(self):
        assert validate_table([[0]]) == 0

    def test_z2(self):
        assert validate_table([[0, 1], [1, 0]]) == 0

    def test_repeated_entry_is_latin_failure(self):
        # Row 2 is a permutation but column 1 repeats the value 1, so the
        # Latin-square check fires before anything else.
        bad = [[0, 1, 2], [1, 2, 0], [2, 1, 0]]
        with pytest.raises(NotLatinSquare):
            validate_table(bad)

    def test_ragged_table(self):
        with pytest.raises(NotLatinSquare):
            validate_table([[0, 1], [1]])

    def test_out_of_range_entry(self):
        with pytest.raises(NotLatinSquare):
            validate_table([[0, 2], [2, 0]])

    def test_no_identity(self):
        # subtraction mod 3: a Latin square with no two-sided identity
        bad = [[0, 2, 1], [1, 0, 2], [2, 1, 0]]
        with pytest.raises(NoIdentity):
            validate_table(bad)

    def test_nonassociative_loop(self):
        t = NONASSOC_LOOP5
        assert t[t[1][1]][2] != t[1][t[1][2]]
        with pytest.raises(NotAssociative):
            validate_table(t)

    def test_from_cayley_table_accepts_valid(self):
        g = from_cayley_table([[0, 1, 2], [1, 2, 0], [2, 0, 1]], "triple")
        assert g.order == 3
        assert g.identity == 0
        assert g.mul(1, 2) == 0

    def test_constructed_families_are_groups(self):
        for group in (dihedral(6), dicyclic(3), symmetric(4), cyclic(9)):
            assert validate_table(group.cayley_table()) == group.identity


class TestFamilies:
    @pytest.mark.parametrize("n", [1, 2, 7, 12, 60])
    def test_cyclic_order_and_structure(self, n):
        g = cyclic(n)
        assert g.order == n
        assert is_cyclic_group(g)

    def test_dihedral(self):
        for n in (3, 4, 6, 10):
            g = dihedral(n)
            assert g.order == 2 * n
            orders = element_orders(g)
            assert orders.count(2) >= n  # the n reflections

    def test_dihedral_not_abelian(self):
        g = dihedral(3)
        assert any(g.mul(a, b) != g.mul(b, a) for a in range(6) for b in range(6))

    @pytest.mark.parametrize("alpha", [3, 4, 5])
    def test_dicyclic_unique_involution(self, alpha):
        g = dicyclic(2 ** (alpha - 2))
        assert g.order == 2**alpha
        assert element_orders(g).count(2) == 1

    def test_dicyclic_q8_orders(self):
        # Q8: one identity, one involution, six elements of order 4
        assert sorted(element_orders(dicyclic(2))) == [1, 2, 4, 4, 4, 4, 4, 4]

    def test_symmetric_alternating(self):
        assert symmetric(3).order == 6
        assert symmetric(4).order == 24
        assert alternating(4).order == 12
        assert alternating(5).order == 60

    def test_a5_element_orders(self):
        counts = {}
        for m in element_orders(alternating(5)):
            counts[m] = counts.get(m, 0) + 1
        assert counts == {1: 1, 2: 15, 3: 20, 5: 24}

    def test_direct_product(self):
        g = direct_product(cyclic(4), cyclic(2))
        assert g.order == 8
        assert not is_cyclic_group(g)
        assert is_cyclic_group(direct_product(cyclic(3), cyclic(4)))

    def test_elementary_abelian(self):
        g = elementary_abelian(3, 2)
        assert g.order == 9
        assert all(m in (1, 3) for m in element_orders(g))

    def test_order_cap(self):
        with pytest.raises(OrderCapExceeded):
            cyclic(100, order_cap=99)
        with pytest.raises(OrderCapExceeded):
            symmetric(8, order_cap=1000)


class TestElementOrder:
    def test_identity(self):
        assert element_order(cyclic(12), 0) == 1

    def test_cyclic_orders(self):
        g = cyclic(12)
        assert element_order(g, 1) == 12
        assert element_order(g, 2) == 6
        assert element_order(g, 8) == 3

    def test_lagrange(self):
        for group in (dihedral(6), dicyclic(3), symmetric(4)):
            assert all(group.order % m == 0 for m in element_orders(group))


class TestPermutationGroups:
    def test_single_cycle(self):
        g = from_permutation_generators(3, [(1, 2, 0)], "c3")
        assert g.order == 3

    def test_no_generators_gives_trivial(self):
        assert from_permutation_generators(4, [], "t").order == 1

    def test_invalid_permutation(self):
        with pytest.raises(InvalidPermutation):
            from_permutation_generators(3, [(0, 0, 1)], "bad")

    def test_closure_cap(self):
        gens = [(1, 2, 3, 4, 0), (1, 0, 2, 3, 4)]  # generate S5
        with pytest.raises(OrderCapExceeded):
            from_permutation_generators(5, gens, "s5", order_cap=100)

    def test_parse_cycle_notation(self):
        assert parse_cycle_notation("(0 1 2)", 4) == (1, 2, 0, 3)
        assert parse_cycle_notation("(0 1)(2 3)", 4) == (1, 0, 3, 2)
        assert parse_cycle_notation("()", 3) == (0, 1, 2)

    def test_parse_cycle_notation_rejects_repeats(self):
        with pytest.raises(InvalidPermutation):
            parse_cycle_notation("(0 1)(1 2)", 3)

    def test_parse_cycle_notation_rejects_out_of_range(self):
        with pytest.raises(InvalidPermutation):
            parse_cycle_notation("(0 5)", 3)

    def test_parse_cycle_notation_rejects_garbage(self):
        with pytest.raises(InvalidPermutation):
            parse_cycle_notation("(0 1", 3)


class TestRelabel:
    def test_identity_permutation(self):
        g = cyclic(6)
        h = relabel(g, list(range(6)))
        assert h.cayley_table() == g.cayley_table()

    def test_preserves_order_multiset(self):
        rng = random.Random(7)
        for group in (cyclic(8), dihedral(4), dicyclic(2)):
            perm = list(range(group.order))
            rng.shuffle(perm)
            h = relabel(group, perm)
            assert sorted(element_orders(h)) == sorted(element_orders(group))
            assert validate_table(h.cayley_table()) == h.identity

    def test_rejects_non_permutation(self):
        with pytest.raises(InvalidPermutation):
            relabel(cyclic(3), [0, 0, 1])


class TestFiles:
    def test_cayley_round_trip(self, tmp_path):
        g = dicyclic(3)
        path = str(tmp_path / "dic3.txt")
        write_cayley_file(g, path)
        h = read_cayley_file(path)
        assert h.order == g.order
        assert h.cayley_table() == g.cayley_table()

    def test_cayley_rejects_bad_table(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("2\n0 1\n0 1\n")
        with pytest.raises(NotLatinSquare):
            read_cayley_file(str(path))

    def test_permutation_file(self, tmp_path):
        path = tmp_path / "s3.txt"
        path.write_text("3\n(0 1 2)\n(0 1)\n")
        g = read_permutation_file(str(path))
        assert g.order == 6

    def test_permutation_file_identity_only(self, tmp_path):
        path = tmp_path / "t.txt"
        path.write_text("4\n()\n")
        assert read_permutation_file(str(path)).order == 1

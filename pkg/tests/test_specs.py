import pytest

from cycgraph.errors import SpecParseError
from cycgraph.groups import element_orders
from cycgraph.specs import (
    GroupSpec,
    Zs,
    abelian_groups_of_order,
    abelian_prime_signature,
    in_planar_classification,
    invariant_factors,
    is_cyclic_spec,
    parse_spec,
)


class TestParsing:
    def test_atoms(self):
        assert parse_spec("Z(6)") == GroupSpec("cyclic", (6,))
        assert parse_spec("D(4)") == GroupSpec("dihedral", (4,))
        assert parse_spec("S(4)") == GroupSpec("symmetric", (4,))
        assert parse_spec("A(5)") == GroupSpec("alternating", (5,))
        assert parse_spec("Dic(3)") == GroupSpec("dicyclic", (3,))

    def test_quaternion_sugar(self):
        assert parse_spec("Q(8)") == GroupSpec("dicyclic", (2,))
        assert parse_spec("Q(16)") == GroupSpec("dicyclic", (4,))
        assert parse_spec("Q(2^5)") == GroupSpec("dicyclic", (8,))

    def test_caret_exponent(self):
        assert parse_spec("Z(2^5)") == GroupSpec("cyclic", (32,))

    def test_product(self):
        assert parse_spec("Z(4)xZ(2)") == Zs(4, 2)
        assert parse_spec(" Z(2) x Z(2) x Z(3) ") == Zs(2, 2, 3)

    @pytest.mark.parametrize(
        "bad", ["", "Z()", "Z(0)", "Q(12)", "Q(4)", "W(3)", "Z(4)x", "Z(4)y(2)", "Dic(1)"]
    )
    def test_rejects(self, bad):
        with pytest.raises(SpecParseError):
            parse_spec(bad)

    def test_descriptor_round_trip(self):
        for text in ("Z(12)", "Z(4)xZ(2)", "D(5)", "Dic(4)", "S(4)", "A(5)"):
            spec = parse_spec(text)
            assert parse_spec(spec.descriptor) == spec

    def test_orders(self):
        assert parse_spec("Z(4)xZ(2)").order() == 8
        assert parse_spec("Q(16)").order() == 16
        assert parse_spec("S(5)").order() == 120
        assert parse_spec("A(5)").order() == 60
        assert parse_spec("file:cayley:whatever.txt").order() is None

    def test_realize_matches_order(self):
        for text in ("Z(12)", "Z(4)xZ(2)", "D(6)", "Dic(3)", "S(4)", "A(4)"):
            spec = parse_spec(text)
            assert spec.realize().order == spec.order()


class TestAbelianEnumeration:
    def test_counts(self):
        # number of abelian groups of order n = product of partition counts
        assert len(abelian_groups_of_order(1)) == 1
        assert len(abelian_groups_of_order(7)) == 1
        assert len(abelian_groups_of_order(16)) == 5
        assert len(abelian_groups_of_order(36)) == 4
        assert len(abelian_groups_of_order(64)) == 11
        assert len(abelian_groups_of_order(72)) == 6

    def test_invariant_factor_form(self):
        descs = {s.descriptor for s in abelian_groups_of_order(36)}
        assert descs == {"Z(36)", "Z(18)xZ(2)", "Z(12)xZ(3)", "Z(6)xZ(6)"}

    def test_invariant_factors_divide(self):
        for n in range(2, 100):
            for spec in abelian_groups_of_order(n):
                if spec.kind == "cyclic":
                    continue
                factors = [c.params[0] for c in spec.params]
                assert all(factors[i] % factors[i + 1] == 0 for i in range(len(factors) - 1))

    def test_pairwise_non_isomorphic(self):
        # distinct invariant-factor decompositions give distinct order multisets
        for n in (16, 24, 36):
            seen = set()
            for spec in abelian_groups_of_order(n):
                key = tuple(sorted(element_orders(spec.realize())))
                assert key not in seen
                seen.add(key)

    def test_invariant_factors_helper(self):
        assert invariant_factors([(2, 2), (2, 1), (3, 1)]) == [12, 2]
        assert invariant_factors([(5, 1)]) == [5]


class TestClassifiers:
    def test_is_cyclic_spec(self):
        assert is_cyclic_spec(parse_spec("Z(12)"))
        assert is_cyclic_spec(parse_spec("Z(3)xZ(4)"))
        assert not is_cyclic_spec(parse_spec("Z(2)xZ(2)"))
        assert not is_cyclic_spec(parse_spec("Z(6)xZ(10)"))

    def test_prime_signature(self):
        assert abelian_prime_signature(parse_spec("Z(12)")) == ((2, 2), (3, 1))
        assert abelian_prime_signature(parse_spec("Z(2)xZ(2)")) == ((2, 1), (2, 1))
        assert abelian_prime_signature(parse_spec("D(4)")) is None

    def test_planar_classification_membership(self):
        yes = ["Z(2)xZ(2)", "Z(3)xZ(3)xZ(3)", "Z(4)xZ(2)", "Z(9)xZ(3)", "Z(4)xZ(4)",
               "Z(6)xZ(2)", "Z(10)xZ(2)", "Z(14)xZ(2)"]
        no = ["Z(8)xZ(2)", "Z(25)xZ(5)", "Z(4)xZ(2)xZ(2)", "Z(6)xZ(6)", "Z(9)xZ(9)"]
        for text in yes:
            assert in_planar_classification(parse_spec(text)), text
        for text in no:
            assert not in_planar_classification(parse_spec(text)), text

"""Functions to test the sl2-triples and weighted Dynkin diagrams."""
from fractions import Fraction

import pytest

import nilcent.examples
from nilcent.liealg import LieAlgebra
from nilcent.rootsys import RootSystem
from nilcent.scalars import to_fraction
from nilcent.sl2 import (Sl2Triple, cartan_element_of_wdd, distinguished_levis, element_from_terms, graded_pieces,
                         jacobson_morozov, load_representative, orbit_dimension, representative, same_orbit,
                         solve_triple, triple_from_wdd, weighted_dynkin_diagram)


class TestTriples:

    g2 = LieAlgebra.from_type("G2")

    def test_long_root_vector(self):
        triple = jacobson_morozov(self.g2.x((3, 2)), label="A1")
        assert triple.is_valid()
        assert triple.label == "A1"
        assert triple.h == self.g2.cartan_element([1, 2])
        assert weighted_dynkin_diagram(triple) == (0, 1)
        assert orbit_dimension(triple) == 6

    def test_short_root_and_regular(self):
        assert weighted_dynkin_diagram(jacobson_morozov(self.g2.x((1, 0)))) == (1, 0)
        regular = jacobson_morozov(self.g2.x((1, 0)) + self.g2.x((0, 1)))
        assert weighted_dynkin_diagram(regular) == (2, 2)
        assert orbit_dimension(regular) == 12

    def test_degenerate_inputs(self):
        zero = jacobson_morozov(self.g2.zero())
        assert zero.h.is_zero() and zero.f.is_zero()
        assert weighted_dynkin_diagram(zero) == (0, 0)
        pytest.raises(ValueError, jacobson_morozov, self.g2.h(1))
        # e must lie in the subalgebra.
        cartan = self.g2.subalgebra(self.g2.cartan_subalgebra() + [self.g2.x((1, 0))])
        pytest.raises(ValueError, solve_triple, self.g2, self.g2.x((0, 1)), cartan)

    def test_check(self):
        h, x = self.g2.h(1), self.g2.x((1, 0))
        pytest.raises(RuntimeError, Sl2Triple(h, x, x).check)
        triple = jacobson_morozov(x)
        assert triple.check() is triple
        assert triple.subalgebra().dim == 3
        assert triple.subalgebra().is_closed()

    def test_serialization(self):
        triple = jacobson_morozov(self.g2.x((1, 1)), label="~A1")
        restored = Sl2Triple.from_dict(self.g2, triple.to_dict())
        assert restored.label == "~A1"
        assert list(restored) == list(triple)
        pytest.raises(ValueError, Sl2Triple.from_dict, LieAlgebra.from_type("A2"), triple.to_dict())

    def test_transform_keeps_orbit(self):
        triple = jacobson_morozov(self.g2.x((3, 2)))
        # alpha_2(h) = 1, so the conjugate h leaves the standard Cartan subalgebra.
        sigma = self.g2.exp_ad(self.g2.x((0, -1)))
        moved = triple.transform(sigma)
        assert moved.is_valid()
        assert self.g2.cartan_coordinates(moved.h) is None
        assert weighted_dynkin_diagram(moved) == (0, 1)
        assert same_orbit(triple, moved)


class TestWeightedDiagrams:

    g2 = LieAlgebra.from_type("G2")

    def test_cartan_element(self):
        h = cartan_element_of_wdd(self.g2, [2, 2])
        coords = self.g2.cartan_coordinates(h)
        assert self.g2.root_system.simple_values(coords) == [2, 2]

    def test_graded_pieces(self):
        h = cartan_element_of_wdd(self.g2, [0, 2])
        pieces = graded_pieces(self.g2, h)
        # g_0 is the Cartan subalgebra plus the short simple root spaces.
        assert len(pieces[0]) == 4
        assert len(pieces[2]) == 4
        assert len(pieces[4]) == 1
        assert 1 not in pieces

    def test_g2_orbits_from_fixtures(self):
        for record in nilcent.examples.orbit_records("G2"):
            triple = triple_from_wdd(self.g2, record["wdd"], label=record["label"])
            assert triple.is_valid()
            assert weighted_dynkin_diagram(triple) == tuple(record["wdd"])
            assert orbit_dimension(triple) == record["dim"]

    def test_f4_orbit_dimensions(self):
        f4 = LieAlgebra.from_type("F4")
        for label in ["A1", "~A1", "F4(a3)"]:
            record = nilcent.examples.orbit_record("F4", label)
            triple = triple_from_wdd(f4, record["wdd"], label=label)
            assert orbit_dimension(triple) == record["dim"], label

    def test_invalid_diagram(self):
        pytest.raises(ValueError, triple_from_wdd, self.g2, (1, 1))

    def test_same_orbit(self):
        a1 = jacobson_morozov(self.g2.x((3, 2)))
        assert same_orbit(a1, triple_from_wdd(self.g2, (0, 1)))
        assert not same_orbit(a1, triple_from_wdd(self.g2, (2, 2)))
        other = jacobson_morozov(LieAlgebra.from_type("A2").x((1, 0)))
        pytest.raises(TypeError, same_orbit, a1, other)


class TestRepresentatives:

    g2 = LieAlgebra.from_type("G2")

    def test_element_from_terms(self):
        e = element_from_terms(self.g2, [{"root": [3, 2], "coeff": "1/2"}, {"root": [1, 0], "coeff": 2}])
        assert to_fraction(e.coords[self.g2.root_index((3, 2))]) == Fraction(1, 2)
        assert e.coords[self.g2.root_index((1, 0))] == 2
        pytest.raises(ValueError, element_from_terms, self.g2, [{"root": [1, 1, 1], "coeff": "1"}])
        pytest.raises(ValueError, element_from_terms, self.g2, [{"root": [2, 0], "coeff": "1"}])

    def test_load_representative(self):
        triple = load_representative({"algebra": "G2", "label": "A1", "e": [{"root": [3, 2], "coeff": "1"}]})
        assert triple.label == "A1"
        assert weighted_dynkin_diagram(triple) == (0, 1)

    def test_representative(self):
        triple = representative("G2", "G2(a1)")
        assert triple.label == "G2(a1)"
        assert weighted_dynkin_diagram(triple) == (0, 2)
        assert representative(self.g2, "G2").algebra is self.g2
        pytest.raises(ValueError, representative, "G2", "F4(a3)")


class TestDistinguishedLevis:

    def test_regular_orbit(self):
        rs = RootSystem.from_type("G2")
        simple, zero, two = next(distinguished_levis(rs, (2, 2)))
        assert simple == [(1, 0), (0, 1)]
        assert zero == []
        assert two == simple

    def test_gradings_match_the_diagram(self):
        f4 = LieAlgebra.from_type("F4")
        rs = f4.root_system
        for label in ["A1", "A2", "B2", "F4(a3)"]:
            wdd = nilcent.examples.orbit_record("F4", label)["wdd"]
            h = f4.cartan_coordinates(cartan_element_of_wdd(f4, wdd))
            levis = list(distinguished_levis(rs, wdd))
            assert levis, label
            for simple, zero, two in levis:
                assert all(rs.root_value(r, h) == 0 for r in zero)
                assert all(rs.root_value(r, h) == 2 for r in two)
                assert len(simple) + 2 * len(zero) == len(two)
        # F4(a3) is distinguished in F4 itself only.
        (levi,) = distinguished_levis(rs, nilcent.examples.orbit_record("F4", "F4(a3)")["wdd"])
        assert len(levi[0]) == 4

    def test_levi_aligned_representatives(self):
        # The centre of the Levi subalgebra is a maximal torus of the centralizer and lies in the standard Cartan
        # subalgebra: rank 2 for A2 (centralizer A2) and for B2 (centralizer 2A1).
        f4 = LieAlgebra.from_type("F4")
        standard = f4.subalgebra(f4.cartan_subalgebra())
        for label in ["A2", "B2"]:
            triple = triple_from_wdd(f4, nilcent.examples.orbit_record("F4", label)["wdd"], label=label)
            assert triple.is_valid()
            assert f4.centralizer(list(triple)).intersection(standard).dim == 2, label

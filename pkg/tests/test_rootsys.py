"""Functions to test the root systems and Weyl group actions."""
from fractions import Fraction

import numpy as np
import pytest

from nilcent.rootsys import (RootSystem, cartan_matrix, cartan_symmetries, format_label, identify_cartan_matrix,
                             parse_label)
from nilcent.scalars import ExactMatrix, solve_linear, to_fraction


class TestLabels:

    def test_parse_label(self):
        assert parse_label("2A1+B3") == [("A", 1), ("A", 1), ("B", 3)]
        assert parse_label("E6") == [("E", 6)]
        assert parse_label("0") == []
        assert parse_label(" A1 + A2 ") == [("A", 1), ("A", 2)]

    def test_parse_label_errors(self):
        for bad in ["H3", "E9", "D3", "G3", "F5", "B1", "A1++A2"]:
            pytest.raises(ValueError, parse_label, bad)

    def test_format_label(self):
        assert format_label([("A", 2), ("A", 1)]) == "A1+A2"
        assert format_label([("A", 1), ("A", 1)]) == "2A1"
        assert format_label([]) == "0"
        assert format_label(parse_label("3A1+D4+A1")) == "4A1+D4"

    def test_cartan_matrix(self):
        # alpha_1 is the short root of G2.
        assert cartan_matrix("G2").tolist() == [[2, -1], [-3, 2]]
        # alpha_1 is long in B2, short in C2.
        assert cartan_matrix("B2").tolist() == [[2, -2], [-1, 2]]
        assert cartan_matrix("C2").tolist() == [[2, -1], [-2, 2]]
        assert cartan_matrix("F4")[1, 2] == -2
        block = cartan_matrix("A1+A2")
        assert block.shape == (3, 3)
        assert block[0, 1] == 0 and block[1, 2] == -1

    def test_identify_cartan_matrix(self):
        label, order = identify_cartan_matrix(np.array([[2, -3], [-1, 2]]))
        assert label == "G2"
        assert order == [1, 0]

        # Components come back in label order.
        matrix = cartan_matrix("A2+A1")
        label, order = identify_cartan_matrix(matrix)
        assert label == "A1+A2"
        assert order == [2, 0, 1]

        # C2 is reported as B2 after renumbering.
        assert identify_cartan_matrix(cartan_matrix("C2"))[0] == "B2"

        perm = [3, 0, 2, 1]
        assert identify_cartan_matrix(cartan_matrix("F4")[np.ix_(perm, perm)])[0] == "F4"

    def test_identify_rejects_affine(self):
        pytest.raises(ValueError, identify_cartan_matrix, np.array([[2, -2], [-2, 2]]))
        pytest.raises(ValueError, RootSystem, np.array([[2, -2], [-2, 2]]))
        pytest.raises(ValueError, RootSystem, np.array([2, -1]))

    def test_cartan_symmetries(self):
        expected = {"G2": 1, "A2": 2, "2A1": 2, "D4": 6, "E6": 2, "F4": 1, "B3": 1}
        for label, count in expected.items():
            symmetries = cartan_symmetries(cartan_matrix(label))
            assert len(symmetries) == count, label
            assert symmetries[0] == tuple(range(cartan_matrix(label).shape[0]))


class TestRootSystem:

    g2 = RootSystem.from_type("G2")
    b2 = RootSystem.from_type("B2")
    a2 = RootSystem.from_type("A2")

    def test_positive_root_counts(self):
        expected = {"A2": 3, "B2": 4, "G2": 6, "D4": 12, "F4": 24, "E6": 36, "E7": 63, "E8": 120}
        for label, count in expected.items():
            assert len(RootSystem.from_type(label).positive_roots) == count, label

    def test_highest_roots(self):
        assert self.g2.highest_root() == (3, 2)
        assert RootSystem.from_type("F4").highest_root() == (2, 3, 4, 2)
        assert RootSystem.from_type("E8").highest_root() == (2, 3, 4, 6, 5, 4, 3, 2)

    def test_roots_sorted_by_height(self):
        heights = [self.g2.height(r) for r in self.g2.positive_roots]
        assert heights == sorted(heights)
        assert self.g2.positive_roots[:2] == self.g2.simple_roots

    def test_lengths_and_inner_product(self):
        assert self.g2.lengths == [Fraction(2, 3), Fraction(2)]
        assert self.g2.inner((1, 0), (1, 0)) == Fraction(2, 3)
        assert self.g2.inner((0, 1), (0, 1)) == 2
        # Pairings agree with the Cartan matrix.
        for i in range(2):
            for j in range(2):
                beta = self.g2.simple_roots[i]
                assert self.g2.pairing(beta, j) == self.g2.cartan_matrix[i, j]

    def test_coroots(self):
        assert self.b2.coroot((0, 1)) == (0, 1)
        # The short root alpha_1 + alpha_2 of B2 has coroot 2 alpha_1^vee + alpha_2^vee.
        assert self.b2.coroot((1, 1)) == (2, 1)
        assert self.g2.coroot((3, 2)) == (1, 2)

    def test_reflections(self):
        assert self.g2.reflect_root(1, (1, 0)) == (-1, 0)
        assert self.g2.reflect_root(2, (1, 0)) == (1, 1)
        assert self.g2.reflect_by((1, 0), (0, 1)) == (3, 1)
        # s_i is an involution.
        for beta in self.g2.roots:
            for i in (1, 2):
                assert self.g2.reflect_root(i, self.g2.reflect_root(i, beta)) == beta
        pytest.raises(ValueError, self.g2.coreflection, 3, (1, 0))

    def test_dominant_representative(self):
        h = (Fraction(-1), Fraction(0))
        dominant, word = self.a2.dominant_representative(h)
        assert self.a2.is_dominant(dominant)
        assert self.a2.apply_word(word, h) == dominant

        # Any choice of negative index reaches the same dominant element.
        h = (Fraction(-3), Fraction(1, 2))
        first, _ = self.g2.dominant_representative(h)
        last, word = self.g2.dominant_representative(h, choose=lambda negative: negative[-1])
        assert first == last
        assert self.g2.apply_word(word, h) == last

    def test_dominant_representative_random(self):
        rng = np.random.default_rng(42)
        for label in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2", "A1+B2"]:
            rs = RootSystem.from_type(label)
            for _ in range(100):
                h = tuple(Fraction(int(n), int(d)) for n, d in
                          zip(rng.integers(-9, 10, rs.rank), rng.integers(1, 4, rs.rank)))
                dominant, word = rs.dominant_representative(h)
                assert rs.is_dominant(dominant)
                assert rs.apply_word(word, h) == dominant
                # The dominant chamber meets each orbit once.
                moved = rs.apply_word([int(i) for i in rng.integers(1, rs.rank + 1, 6)], h)
                assert rs.dominant_representative(moved)[0] == dominant

    def test_weyl_orbits(self):
        # A regular element has a free orbit.
        assert len(self.g2.weyl_orbit((3, 5))) == 12
        assert len(self.a2.weyl_orbit((1, 0))) == 6
        assert self.g2.weyl_orbit((0, 0)) == {(Fraction(0), Fraction(0))}

    def test_weyl_group_orders(self):
        assert self.a2.weyl_group_order() == 6
        assert self.b2.weyl_group_order() == 8
        assert self.g2.weyl_group_order() == 12
        assert RootSystem.from_type("F4").weyl_group_order() == 1152
        assert RootSystem.from_type("E8").weyl_group_order() == 696729600
        assert RootSystem.from_type("D4").weyl_group_order() == 192
        assert RootSystem.from_type("A1+B3").weyl_group_order() == 2 * 48

    def test_weyl_group_order_matches_orbit(self):
        # A regular element has a free orbit.
        for label in ["A3", "B3", "C3"]:
            rs = RootSystem.from_type(label)
            coords = solve_linear(ExactMatrix.from_rows(rs.cartan_matrix.tolist()), [1] * rs.rank)
            regular = [to_fraction(c) for c in coords]
            assert all(v == 1 for v in rs.simple_values(regular))
            assert len(rs.weyl_orbit(regular)) == rs.weyl_group_order()


class TestCentralizerRootData:

    g2 = RootSystem.from_type("G2")

    def test_subsystem_of_a_wall(self):
        # alpha_1(h) = 0 and alpha_2(h) = 2
        data = self.g2.centralizer_data((2, 4))
        assert data.positive_roots == [(1, 0)]
        assert data.simple_roots == [(1, 0)]
        assert len(data.weyl_words) == 2

    def test_full_weyl_group(self):
        data = self.g2.centralizer_data((0, 0))
        assert len(data.weyl_words) == 12
        assert sorted(data.simple_roots) == [(0, 1), (1, 0)]
        assert data.inversion_set(()) == []
        longest = data.weyl_words[-1]
        assert len(longest) == 6
        assert sorted(data.inversion_set(longest)) == sorted(self.g2.positive_roots)

    def test_regular_element(self):
        data = self.g2.centralizer_data((3, 5))
        assert data.roots == []
        assert data.weyl_words == [()]

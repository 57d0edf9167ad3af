"""Functions to test the finite group utilities behind component groups."""
import numpy as np
import pytest

from nilcent.components import (ComponentGroup, Inconsistent, check_group, close, generating_set,
                                isomorphism_label, multiplication_table, normalize_label)


def compose(p: tuple, q: tuple) -> tuple:
    """Permutation p after q."""
    return tuple(p[i] for i in q)


def same(p, q) -> bool:
    return p == q


class TestClosure:

    s3_generators = [(1, 0, 2), (0, 2, 1)]

    def test_close(self):
        elements = close(self.s3_generators, compose, same, (0, 1, 2))
        assert len(elements) == 6
        assert elements[0] == (0, 1, 2)
        # A hashable key gives the same closure.
        assert set(close(self.s3_generators, compose, same, (0, 1, 2), key=lambda p: p)) == set(elements)

    def test_close_bound(self):
        generators = [(1, 0, 2, 3), (1, 2, 3, 0)]
        assert len(close(generators, compose, same, (0, 1, 2, 3))) == 24
        pytest.raises(ValueError, close, generators, compose, same, (0, 1, 2, 3), None, 10)

    def test_generating_set(self):
        elements = close(self.s3_generators, compose, same, (0, 1, 2))
        generators = generating_set(elements, compose, same, (0, 1, 2))
        assert len(generators) == 2
        assert len(close(generators, compose, same, (0, 1, 2))) == 6

    def test_multiplication_table(self):
        elements = close(self.s3_generators, compose, same, (0, 1, 2))
        table = multiplication_table(elements, compose, same)
        check_group(table)
        assert [row[0] for row in table] == list(range(6))
        pytest.raises(Inconsistent, multiplication_table, [(0, 1, 2), (1, 2, 0)], compose, same)

    def test_check_group(self):
        pytest.raises(Inconsistent, check_group, [[1, 0], [0, 1]])
        pytest.raises(Inconsistent, check_group, [[0, 1], [1, 1]])
        check_group([[0]])


class TestLabels:

    def test_permutation_groups(self):
        identity = (0, 1, 2, 3)
        expected = {
            "S3": [(1, 0, 2, 3), (0, 2, 1, 3)],
            "S4": [(1, 0, 2, 3), (1, 2, 3, 0)],
            "D4": [(1, 2, 3, 0), (0, 3, 2, 1)],
            "C4": [(1, 2, 3, 0)],
            "C2×C2": [(1, 0, 3, 2), (2, 3, 0, 1)],
            "C3": [(1, 2, 0, 3)],
            "C2": [(1, 0, 2, 3)],
            "1": [],
        }
        for label, generators in expected.items():
            elements = close(generators, compose, same, identity)
            assert isomorphism_label(elements, compose, same) == label, label

    def test_quaternion_group(self):
        i = np.array([[1j, 0], [0, -1j]])
        j = np.array([[0, 1], [-1, 0]], dtype=complex)
        elements = close([i, j], np.matmul, np.array_equal, np.eye(2, dtype=complex))
        assert len(elements) == 8
        assert isomorphism_label(elements, np.matmul, np.array_equal) == "Q8"

    def test_cyclic_products(self):
        def add_mod6(a, b):
            return (a + b) % 6

        elements = close([1], add_mod6, same, 0)
        assert isomorphism_label(elements, add_mod6, same) == "C6"

    def test_symmetric_group_s5(self):
        identity = (0, 1, 2, 3, 4)
        elements = close([(1, 0, 2, 3, 4), (1, 2, 3, 4, 0)], compose, same, identity, key=lambda p: p)
        assert isomorphism_label(elements, compose, same) == "S5"

    def test_normalize_label(self):
        assert normalize_label("S2") == "C2"
        assert normalize_label("C2xC2") == "C2×C2"
        assert normalize_label(" S3 ") == "S3"
        assert normalize_label("") == "1"


class TestComponentGroup:

    def test_from_generators(self):
        group = ComponentGroup.from_generators([(1, 0, 2), (0, 2, 1)], compose, same, (0, 1, 2))
        assert group.label == "S3"
        assert group.order == len(group) == 6
        assert sorted(group.orders) == [1, 2, 2, 2, 3, 3]
        assert not group.abelian

    def test_quotient_equality(self):
        # Integers mod 6 modulo the subgroup {0, 3}.
        def add_mod6(a, b):
            return (a + b) % 6

        group = ComponentGroup.from_generators([1], add_mod6, lambda a, b: (a - b) % 3 == 0, 0)
        assert group.label == "C3"
        assert group.abelian

    def test_trivial(self):
        group = ComponentGroup.trivial("id")
        assert group.label == "1"
        assert group.order == 1

    def test_to_dict(self):
        group = ComponentGroup.from_generators([(1, 0, 2)], compose, same, (0, 1, 2))
        group._meta["route"] = "conjugacy"
        data = group.to_dict(include_elements=False)
        assert data["label"] == "C2"
        assert data["order"] == 2
        assert data["generators"] == [(1, 0, 2)]
        assert data["route"] == "conjugacy"
        assert "elements" not in data
        assert group.to_dict()["elements"] == [(0, 1, 2), (1, 0, 2)]

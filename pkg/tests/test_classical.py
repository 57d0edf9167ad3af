"""Functions to test the component groups of orthogonal and symplectic algebras."""
import os

import pytest

import nilcent.examples
from nilcent.classical import (FormedSpace, component_group_classical, is_valid_partition, jordan_type,
                               kind_of_label, matrix_triple, orthogonal_algebra, partition_triple, partitions,
                               reflection_neg_det, symplectic_algebra)
from nilcent.scalars import ExactMatrix

STRETCH = bool(os.environ.get("NILCENT_STRETCH"))


class TestFormedSpaces:

    def test_antidiagonal(self):
        space = FormedSpace.antidiagonal(4, "alternating")
        assert space.gram.transpose() == space.gram.scale(-1)
        assert FormedSpace.antidiagonal(5, "symmetric").dim == 5
        pytest.raises(ValueError, FormedSpace.antidiagonal, 3, "alternating")

    def test_invalid_forms(self):
        pytest.raises(ValueError, FormedSpace, ExactMatrix.from_rows([[1, 1], [0, 1]]), "symmetric")
        pytest.raises(ValueError, FormedSpace, ExactMatrix.from_rows([[1, 1], [1, 1]]), "symmetric")
        pytest.raises(ValueError, FormedSpace, ExactMatrix.eye(2), "hermitian")

    def test_classical_algebras(self):
        assert orthogonal_algebra(5).dim == 10
        assert orthogonal_algebra(8).dim == 28
        assert symplectic_algebra(4).dim == 10
        assert orthogonal_algebra(5).check_jacobi()
        pytest.raises(ValueError, symplectic_algebra, 5)
        space = orthogonal_algebra(5)._meta["space"]
        assert all(space.contains(m) for m in orthogonal_algebra(5)._meta["matrices"])

    def test_kind_of_label(self):
        assert kind_of_label("B2") == ("symmetric", 5)
        assert kind_of_label("C3") == ("alternating", 6)
        assert kind_of_label("D4") == ("symmetric", 8)
        pytest.raises(NotImplementedError, kind_of_label, "A3")
        pytest.raises(ValueError, kind_of_label, "G2")
        pytest.raises(ValueError, kind_of_label, "2A1")


class TestPartitions:

    def test_partitions(self):
        assert partitions("symmetric", 5) == [(5,), (3, 1, 1), (2, 2, 1), (1, 1, 1, 1, 1)]
        assert partitions("alternating", 4) == [(4,), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
        assert not is_valid_partition("symmetric", (2, 1))
        assert not is_valid_partition("alternating", (3, 1))
        pytest.raises(ValueError, partitions, "unitary", 3)

    def test_partition_triples(self):
        for kind, n in [("symmetric", 5), ("symmetric", 6), ("alternating", 6)]:
            for partition in partitions(kind, n):
                triple = partition_triple(kind, partition)
                assert triple.is_valid()
                _, e, _ = matrix_triple(triple)
                assert jordan_type(e) == partition
        pytest.raises(ValueError, partition_triple, "alternating", (3, 1))

    def test_jordan_type(self):
        assert jordan_type(ExactMatrix.zeros(3, 3)) == (1, 1, 1)
        pytest.raises(ValueError, jordan_type, ExactMatrix.eye(2))


class TestComponentGroups:

    def test_reflection(self):
        space = FormedSpace(ExactMatrix.from_rows([[0, 1], [1, 0]]), "symmetric")
        g = reflection_neg_det(space)
        assert g.det() == -1
        assert space.preserves(g)
        diagonal = FormedSpace(ExactMatrix.from_rows([[0, 0, 1], [0, 2, 0], [1, 0, 0]]), "symmetric")
        g = reflection_neg_det(diagonal)
        assert g.det() == -1
        assert diagonal.preserves(g)
        assert g.power(2) == ExactMatrix.eye(3)
        pytest.raises(ValueError, reflection_neg_det, FormedSpace.antidiagonal(2, "alternating"))

    def test_b2_example(self):
        triple, published = nilcent.examples.classical_example()
        space = triple.algebra._meta["space"]
        h, e, f = matrix_triple(triple)
        for g in published.values():
            assert space.preserves(g)
            assert all(g @ x == x @ g for x in (h, e, f))

        result = component_group_classical(triple)
        assert result.partition == (3, 1, 1)
        assert result.full.label == "C2×C2"
        assert all(any(g == x for x in result.full.elements) for g in published.values())
        # Only the product of the two reflections has determinant 1.
        assert result.adjoint.label == "C2"
        assert result.adjoint.elements[1] == published[1] @ published[3]
        assert all(sigma.fixes(*triple) for sigma in result.automorphisms)

        data = result.to_dict()
        assert data["route"] == "classical"
        assert data["partition"] == [3, 1, 1]
        assert data["isotypic"]["1"] == {"dim": 2, "kind": "symmetric"}

    def test_adjoint_groups(self):
        expected = [("symmetric", (5,), "C2", "1"), ("alternating", (2, 2), "C2", "C2"),
                    ("alternating", (2, 1, 1), "C2", "1"), ("alternating", (4,), "C2", "1"),
                    ("symmetric", (1, 1, 1, 1, 1), "C2", "1")]
        for kind, partition, full, adjoint in expected:
            result = component_group_classical(partition_triple(kind, partition))
            assert result.full.label == full, partition
            assert result.adjoint.label == adjoint, partition

    def test_invalid_membership(self):
        triple, _ = nilcent.examples.classical_example()
        pytest.raises(ValueError, component_group_classical, triple, "guess")

    @pytest.mark.skipif(not STRETCH, reason="Set NILCENT_STRETCH to run the cell membership test.")
    def test_cell_membership(self):
        triple, _ = nilcent.examples.classical_example()
        result = component_group_classical(triple, membership="cells")
        assert result.adjoint.label == "C2"

    def test_isometry_sweep(self):
        sizes = {"symmetric": [5, 7, 9, 11, 13] if STRETCH else [5, 7],
                 "alternating": [4, 6, 8, 10, 12] if STRETCH else [4, 6]}
        for kind, dims in sizes.items():
            parity = 1 if kind == "symmetric" else 0
            for n in dims:
                for partition in partitions(kind, n):
                    result = component_group_classical(partition_triple(kind, partition))
                    assert result.full.order == 2 ** len({s for s in partition if s % 2 == parity}), partition
                    assert result.full.abelian
                    assert all(o <= 2 for o in result.full.orders)

"""Functions to test the exact scalars and matrices."""
from fractions import Fraction

import pytest

from nilcent.scalars import (CYCLOTOMIC_BOUND, QQ_FIELD, ExactMatrix, ScalarField, UnsupportedExtensionError,
                             common_field, coordinates, cyclotomic_root, intersect, kernel, solve_linear, span_basis,
                             to_fraction)


class TestScalarField:

    def test_instances_are_cached(self):
        assert ScalarField(4) is ScalarField(4)
        # Q(zeta_2) is the field of rationals.
        assert ScalarField(2) is QQ_FIELD

    def test_conductor_bound(self):
        pytest.raises(UnsupportedExtensionError, ScalarField, CYCLOTOMIC_BOUND + 1)
        pytest.raises(ValueError, ScalarField, 0)
        pytest.raises(UnsupportedExtensionError, cyclotomic_root, 30)

    def test_roots_of_unity(self):
        field, z = cyclotomic_root(3)
        assert z ** 3 == field.one
        assert z != field.one
        assert z ** 2 + z + field.one == field.zero

        field, minus_one = cyclotomic_root(2)
        assert field is QQ_FIELD
        assert QQ_FIELD.to_rational(minus_one) == -1

    def test_rational_conversion(self):
        assert QQ_FIELD.to_rational(QQ_FIELD("3/4")) == Fraction(3, 4)
        field, i = cyclotomic_root(4)
        assert field.to_rational(i * i) == -1
        pytest.raises(ValueError, field.to_rational, i)
        assert to_fraction(QQ_FIELD(5)) == 5

    def test_text_form(self):
        field, z = cyclotomic_root(3)
        x = field("1/2") * z + field(3)
        text = field.to_string(x)
        assert "z3" in text
        assert field.from_string(text) == x
        assert QQ_FIELD.to_string(QQ_FIELD("-6/4")) == "-3/2"

    def test_embedding(self):
        field4, i = cyclotomic_root(4)
        field12 = common_field(ScalarField(3), field4)
        assert field12.conductor == 12
        image = field12.embed(i, field4)
        assert image ** 2 == field12(-1)
        pytest.raises(ValueError, ScalarField(3).embed, i, field4)

    def test_zero_tests(self):
        field, i = cyclotomic_root(4)
        assert field.is_zero(field.zero)
        assert field.is_zero(i * i + field.one)
        assert not field.is_zero(i)
        assert not field.is_zero(field.one)
        assert field.is_one(i ** 4)
        assert not field.is_one(i)
        assert QQ_FIELD.is_zero(0) and QQ_FIELD.is_zero(Fraction(0))
        assert QQ_FIELD.is_one(QQ_FIELD("2/2"))
        assert field.is_rational(i * i)
        assert not field.is_rational(i + field.one)
        assert field.to_string(i - i) == "0"


class TestExactMatrix:

    m = ExactMatrix.from_rows([[1, 2, 3], [2, 4, 6], [1, 0, 1]])

    def test_rank_and_kernel(self):
        assert self.m.rank() == 2
        basis = kernel(self.m)
        assert len(basis) == 1
        assert all(v == 0 for v in self.m.apply(basis[0]))
        assert len(kernel(ExactMatrix.zeros(0, 3))) == 3

    def test_solve_linear(self):
        x = solve_linear(self.m, [QQ_FIELD(6), QQ_FIELD(12), QQ_FIELD(2)])
        assert x is not None
        assert self.m.apply(x) == [6, 12, 2]
        assert solve_linear(self.m, [QQ_FIELD(1), QQ_FIELD(0), QQ_FIELD(0)]) is None
        pytest.raises(ValueError, solve_linear, self.m, [QQ_FIELD(1)])

    def test_inverse_and_det(self):
        a = ExactMatrix.from_rows([[2, 1], [1, 1]])
        assert a.det() == 1
        assert a @ a.inverse() == ExactMatrix.eye(2)
        assert a.power(3) == a @ a @ a
        pytest.raises(ValueError, ExactMatrix.from_rows([[1, 2, 3]]).inverse)

    def test_mixed_fields(self):
        field, i = cyclotomic_root(4)
        rotation = ExactMatrix.from_rows([[0, -1], [1, 0]])
        scalar = ExactMatrix.eye(2, field).scale(i)
        product = rotation @ scalar
        assert product.field is field
        assert product.power(4) == ExactMatrix.eye(2)
        assert product.key() != rotation.key()

    def test_cyclotomic_linear_algebra(self):
        field, i = cyclotomic_root(4)
        # Rank one over Q(i): the second row is i times the first.
        m = ExactMatrix.from_rows([[field.one, i], [i, field(-1)]], field)
        assert m.rank() == 1
        basis = kernel(m)
        assert len(basis) == 1
        assert all(field.is_zero(v) for v in m.apply(basis[0]))
        x = solve_linear(m, [field.one, i])
        assert x is not None and m.apply(x) == [field.one, i]
        assert solve_linear(m, [field.one, field.zero]) is None
        assert coordinates([[field.one, i]], [i, field(-1)], field) == [i]
        assert coordinates([], [i - i, field.zero], field) == []

        # Cyclotomic zeros are dropped from sparse input.
        sparse = ExactMatrix.from_sparse({(0, 0): i - i, (1, 1): i}, (2, 2), field)
        assert sparse.rank() == 1
        assert sparse == ExactMatrix.from_rows([[0, 0], [0, i]], field)

    def test_subspaces(self):
        a = [[1, 0, 0], [0, 1, 0]]
        b = [[0, 1, 0], [0, 0, 1]]
        meet = intersect([[QQ_FIELD(v) for v in r] for r in a], [[QQ_FIELD(v) for v in r] for r in b])
        assert meet == [[0, 1, 0]]
        assert len(span_basis([[1, 1], [2, 2], [0, 0]])) == 1
        assert coordinates([[1, 0, 1], [0, 1, 0]], [2, 3, 2]) == [2, 3]
        assert coordinates([[1, 0, 1]], [1, 0, 0]) is None

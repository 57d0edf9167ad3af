"""
Exact scalar fields and dense exact linear algebra.

All arithmetic happens in the rationals or in a small cyclotomic field, through the domain machinery of sympy.
Vectors are plain lists of domain elements; matrices are :class:`ExactMatrix` objects wrapping a sympy
``DomainMatrix``.
"""
from __future__ import annotations

import math
import numbers
from fractions import Fraction
from functools import lru_cache
from typing import Any, Iterable, Optional, Sequence, Union

import sympy
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

# Largest conductor tried when a solving step needs roots of unity.
CYCLOTOMIC_BOUND = 24


class UnsupportedExtensionError(NotImplementedError):
    """Raised when a computation needs a field outside the supported cyclotomic fields."""


@lru_cache(maxsize=None)
def _cyclotomic_domain(n: int):
    # Q(zeta_n) = Q(zeta_2n) for odd n, but the conductor is kept as requested so that embeddings stay simple.
    if n in (1, 2):
        return QQ
    return QQ.algebraic_field(sympy.exp(2 * sympy.pi * sympy.I / n))


class ScalarField:
    """
    The field Q(zeta_n), n being the conductor (n=1 is the field of rationals).

    Fields are cached per conductor, so ``ScalarField(4) is ScalarField(4)``.
    """

    _instances: dict[int, ScalarField] = {}

    def __new__(cls, conductor: int = 1):
        conductor = int(conductor)
        if conductor < 1:
            raise ValueError(f"Invalid conductor: {conductor}. Expected a positive integer")
        if conductor == 2:
            conductor = 1
        if conductor > CYCLOTOMIC_BOUND:
            raise UnsupportedExtensionError(
                f"Conductor {conductor} exceeds the supported bound {CYCLOTOMIC_BOUND}")
        if conductor not in cls._instances:
            instance = super().__new__(cls)
            instance.conductor = conductor
            instance.domain = _cyclotomic_domain(conductor)
            cls._instances[conductor] = instance
        return cls._instances[conductor]

    def __getnewargs__(self):
        return (self.conductor,)

    def __repr__(self) -> str:
        return "QQ" if self.conductor == 1 else f"QQ(z{self.conductor})"

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    @property
    def generator(self):
        """The primitive root of unity zeta_n."""
        if self.conductor == 1:
            return self.domain.one
        return self.domain.unit

    def __call__(self, value: Any):
        """Convert a Python number, a fraction string, a sympy expression or a field element into this field."""
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, Fraction):
            return self.domain.convert(QQ(int(value.numerator), int(value.denominator)))
        if isinstance(value, numbers.Integral):
            return self.domain.convert(int(value))
        if isinstance(value, sympy.Basic):
            return self.domain.from_sympy(value)
        return self.domain.convert(value)

    def is_zero(self, x) -> bool:
        """Zero test for field elements and Python numbers alike."""
        return is_zero(x)

    def is_one(self, x) -> bool:
        return is_zero(self(x) - self.one)

    def is_rational(self, x) -> bool:
        if self.conductor == 1:
            return True
        return all(is_zero(c) for c in x.to_list()[:-1])

    def to_rational(self, x) -> Fraction:
        """Return ``x`` as a Fraction, raising if it is not rational."""
        if not self.is_rational(x):
            raise ValueError(f"Element {self.to_string(x)} is not rational")
        if self.conductor != 1:
            coeffs = x.to_list()
            x = coeffs[-1] if coeffs else QQ.zero
        x = QQ.convert(x)
        return Fraction(int(x.numerator), int(x.denominator))

    def to_string(self, x) -> str:
        """Textual form: rationals as 'p/q', cyclotomic elements as polynomials in 'z{n}'."""
        if self.conductor == 1:
            x = QQ.convert(x)
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        coeffs = x.to_list()
        terms = []
        degree = len(coeffs) - 1
        for k, c in enumerate(coeffs):
            if is_zero(c):
                continue
            power = degree - k
            c_str = ScalarField(1).to_string(c)
            if power == 0:
                terms.append(c_str)
            else:
                monom = f"z{self.conductor}" + (f"^{power}" if power > 1 else "")
                terms.append(monom if c_str == "1" else f"{c_str}*{monom}")
        return " + ".join(terms) if terms else "0"

    def from_string(self, text: str):
        """Inverse of :meth:`to_string`."""
        text = text.strip()
        if "z" not in text:
            return self(Fraction(text))
        z = sympy.Symbol("z")
        expr = sympy.sympify(text.replace(f"z{self.conductor}", "z"), locals={"z": z})
        poly = sympy.Poly(expr, z)
        value = self.zero
        for (power,), coeff in poly.terms():
            value += self(sympy.Rational(coeff)) * self.generator ** power
        return value

    def embed(self, x, source: ScalarField):
        """Map an element of ``source`` into this field (``source.conductor`` must divide ours)."""
        if source is self:
            return x
        if self.conductor % source.conductor != 0:
            raise ValueError(f"Cannot embed {source} into {self}")
        if source.conductor == 1:
            return self.domain.convert(x)
        step = self.conductor // source.conductor
        coeffs = x.to_list()
        degree = len(coeffs) - 1
        value = self.zero
        zeta = self.generator ** step
        for k, c in enumerate(coeffs):
            if not is_zero(c):
                value += self.domain.convert(c) * zeta ** (degree - k)
        return value

    def join(self, other: ScalarField) -> ScalarField:
        """Smallest supported field containing both fields."""
        return ScalarField(math.lcm(self.conductor, other.conductor))


QQ_FIELD = ScalarField(1)


def is_zero(x) -> bool:
    """Whether a scalar is zero, whatever its domain."""
    return not x


def cyclotomic_root(n: int, bound: Optional[int] = None):
    """
    Return a primitive n-th root of unity.

    :param n: Order of the root.
    :param bound: Largest conductor allowed. Defaults to CYCLOTOMIC_BOUND.

    :raises UnsupportedExtensionError: If n is larger than the bound.

    :returns: Tuple of the field Q(zeta_n) and zeta_n in that field.
    """
    bound = CYCLOTOMIC_BOUND if bound is None else bound
    if n < 1:
        raise ValueError(f"Invalid root order: {n}")
    if n > bound:
        raise UnsupportedExtensionError(f"A root of unity of order {n} exceeds the conductor bound {bound}")
    field = ScalarField(n)
    if n == 2:
        return field, field(-1)
    return field, field.generator


def common_field(*fields: ScalarField) -> ScalarField:
    conductor = 1
    for field in fields:
        conductor = math.lcm(conductor, field.conductor)
    return ScalarField(conductor)


class ExactMatrix:
    """
    Dense matrix over a :class:`ScalarField`.

    Thin wrapper around a sympy ``DomainMatrix`` keeping track of the field it lives in.
    """

    def __init__(self, rep: DomainMatrix, field: ScalarField = QQ_FIELD):
        self.rep = rep.convert_to(field.domain) if rep.domain != field.domain else rep
        self.field = field

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]], field: ScalarField = QQ_FIELD,
                  ncols: Optional[int] = None) -> ExactMatrix:
        """Build a matrix from rows of numbers or field elements."""
        rows = [[field(v) for v in row] for row in rows]
        if not rows:
            return cls.zeros(0, ncols or 0, field)
        return cls(DomainMatrix(rows, (len(rows), len(rows[0])), field.domain).to_dense(), field)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Any]], field: ScalarField = QQ_FIELD,
                     nrows: Optional[int] = None) -> ExactMatrix:
        if not columns:
            return cls.zeros(nrows or 0, 0, field)
        return cls.from_rows(columns, field).transpose()

    @classmethod
    def from_sparse(cls, entries: dict[tuple[int, int], Any], shape: tuple[int, int],
                    field: ScalarField = QQ_FIELD) -> ExactMatrix:
        dok = {key: field(v) for key, v in entries.items() if not is_zero(v)}
        return cls(DomainMatrix.from_dok(dok, shape, field.domain).to_dense(), field)

    @classmethod
    def zeros(cls, nrows: int, ncols: int, field: ScalarField = QQ_FIELD) -> ExactMatrix:
        return cls(DomainMatrix.zeros((nrows, ncols), field.domain).to_dense(), field)

    @classmethod
    def eye(cls, n: int, field: ScalarField = QQ_FIELD) -> ExactMatrix:
        return cls(DomainMatrix.eye(n, field.domain).to_dense(), field)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rep.shape

    @property
    def rows(self) -> int:
        return self.rep.shape[0]

    @property
    def cols(self) -> int:
        return self.rep.shape[1]

    def __getitem__(self, key: tuple[int, int]):
        return self.rep.rep.getitem(*key)

    def to_list(self) -> list[list]:
        return self.rep.to_list()

    def row(self, i: int) -> list:
        return self.rep.extract([i], range(self.cols)).to_list()[0]

    def column(self, j: int) -> list:
        return [r[0] for r in self.rep.extract(range(self.rows), [j]).to_list()]

    def columns(self) -> list[list]:
        return self.transpose().to_list()

    def convert_to(self, field: ScalarField) -> ExactMatrix:
        if field is self.field:
            return self
        if self.field.conductor == 1:
            return ExactMatrix(self.rep.convert_to(field.domain), field)
        rows = [[field.embed(v, self.field) for v in row] for row in self.to_list()]
        return ExactMatrix.from_rows(rows, field, ncols=self.cols)

    def _unify(self, other: ExactMatrix) -> tuple[ExactMatrix, ExactMatrix]:
        if self.field is other.field:
            return self, other
        field = common_field(self.field, other.field)
        return self.convert_to(field), other.convert_to(field)

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        a, b = self._unify(other)
        return ExactMatrix(a.rep.matmul(b.rep), a.field)

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        a, b = self._unify(other)
        return ExactMatrix(a.rep + b.rep, a.field)

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        a, b = self._unify(other)
        return ExactMatrix(a.rep - b.rep, a.field)

    def __neg__(self) -> ExactMatrix:
        return ExactMatrix(-self.rep, self.field)

    def scale(self, c) -> ExactMatrix:
        return ExactMatrix(self.rep.scalarmul(self.field(c)), self.field)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        a, b = self._unify(other)
        return a.rep == b.rep

    def __hash__(self) -> int:
        return hash(self.key())

    def key(self) -> tuple:
        """Hashable canonical key (field conductor and flattened entries)."""
        return (self.field.conductor, self.shape, tuple(self.rep.to_list_flat()))

    def __repr__(self) -> str:
        return f"ExactMatrix({self.rows}x{self.cols} over {self.field})"

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(self.rep.transpose(), self.field)

    def hstack(self, *others: ExactMatrix) -> ExactMatrix:
        field = common_field(self.field, *[o.field for o in others])
        reps = [m.convert_to(field).rep for m in (self,) + others]
        return ExactMatrix(reps[0].hstack(*reps[1:]), field)

    def vstack(self, *others: ExactMatrix) -> ExactMatrix:
        field = common_field(self.field, *[o.field for o in others])
        reps = [m.convert_to(field).rep for m in (self,) + others]
        return ExactMatrix(reps[0].vstack(*reps[1:]), field)

    def extract(self, rows: Iterable[int], cols: Iterable[int]) -> ExactMatrix:
        return ExactMatrix(self.rep.extract(list(rows), list(cols)), self.field)

    def is_zero(self) -> bool:
        return self.rep.is_zero_matrix

    def apply(self, vector: Sequence) -> list:
        """Matrix times column vector, the vector given as a list."""
        field = self.field
        col = DomainMatrix([[field.domain.convert(v)] for v in vector], (len(vector), 1), field.domain)
        return [r[0] for r in self.rep.matmul(col).to_list()]

    def rref(self) -> tuple[ExactMatrix, tuple[int, ...]]:
        """Reduced row echelon form and pivot columns."""
        if self.rows == 0 or self.cols == 0:
            return self, ()
        reduced, pivots = self.rep.rref()
        return ExactMatrix(reduced, self.field), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel(self) -> list[list]:
        return kernel(self)

    def inverse(self) -> ExactMatrix:
        if self.rows != self.cols:
            raise ValueError(f"Cannot invert a non-square matrix of shape {self.shape}")
        return ExactMatrix(self.rep.inv(), self.field)

    def det(self):
        return self.rep.det()

    def trace(self):
        total = self.field.zero
        for i in range(min(self.shape)):
            total += self[i, i]
        return total

    def power(self, k: int) -> ExactMatrix:
        result = ExactMatrix.eye(self.rows, self.field)
        base = self
        while k > 0:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def charpoly(self) -> list:
        """Coefficients of the characteristic polynomial, leading coefficient first."""
        return self.rep.charpoly()


def kernel(m: ExactMatrix) -> list[list]:
    """
    Exact basis of the null space of a matrix.

    The basis vectors have a 1 in one free column and zeros in the others, so they are linearly independent and
    their count is ``cols - rank``.

    :param m: The matrix.

    :returns: List of basis vectors, as lists of field elements.
    """
    field = m.field
    if m.cols == 0:
        return []
    if m.rows == 0:
        return [[field.one if i == j else field.zero for i in range(m.cols)] for j in range(m.cols)]
    reduced, pivots = m.rref()
    rows = reduced.to_list()
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        vector = [field.zero] * m.cols
        vector[free] = field.one
        for i, p in enumerate(pivots):
            vector[p] = -rows[i][free]
        basis.append(vector)
    return basis


def solve_linear(a: ExactMatrix, b: Sequence) -> Optional[list]:
    """
    Find one exact solution of ``a x = b``.

    :param a: Coefficient matrix.
    :param b: Right-hand side, a list of length ``a.rows``.

    :returns: A solution vector, or None if ``b`` is not in the column space of ``a``.
    """
    field = a.field
    if len(b) != a.rows:
        raise ValueError(f"Right-hand side has length {len(b)}, expected {a.rows}")
    if a.cols == 0:
        return [] if all(is_zero(v) for v in b) else None
    rhs = ExactMatrix.from_columns([[field.domain.convert(v) for v in b]], field, nrows=a.rows)
    reduced, pivots = a.hstack(rhs).rref()
    if a.cols in pivots:
        return None
    rows = reduced.to_list()
    solution = [field.zero] * a.cols
    for i, p in enumerate(pivots):
        solution[p] = rows[i][a.cols]
    return solution


def span_basis(vectors: Sequence[Sequence], field: ScalarField = QQ_FIELD) -> list[list]:
    """Row-reduced basis of the span of some vectors (empty if they are all zero)."""
    vectors = [list(v) for v in vectors]
    if not vectors:
        return []
    reduced, pivots = ExactMatrix.from_rows(vectors, field).rref()
    return reduced.to_list()[:len(pivots)]


def intersect(basis_a: Sequence[Sequence], basis_b: Sequence[Sequence],
              field: ScalarField = QQ_FIELD) -> list[list]:
    """Basis of the intersection of two subspaces given by spanning lists."""
    if not basis_a or not basis_b:
        return []
    n = len(basis_a[0])
    # Solve sum x_i a_i - sum y_j b_j = 0.
    columns = [list(v) for v in basis_a] + [[-c for c in v] for v in basis_b]
    coeffs = kernel(ExactMatrix.from_columns(columns, field, nrows=n))
    vectors = []
    for c in coeffs:
        vectors.append([sum((c[i] * basis_a[i][k] for i in range(len(basis_a))), field.zero) for k in range(n)])
    return span_basis(vectors, field)


def coordinates(basis: Sequence[Sequence], vector: Sequence, field: ScalarField = QQ_FIELD) -> Optional[list]:
    """Coordinates of ``vector`` in a linearly independent ``basis``, or None if it is outside the span."""
    if not basis:
        return [] if all(is_zero(v) for v in vector) else None
    return solve_linear(ExactMatrix.from_columns(basis, field, nrows=len(vector)), vector)


def to_fraction(value: Union[int, Fraction, Any]) -> Fraction:
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    return QQ_FIELD.to_rational(value)

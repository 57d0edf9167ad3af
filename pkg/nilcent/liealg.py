"""
Semisimple Lie algebras given by structure constants.

Chevalley bases are built from extraspecial pairs: for every non-simple positive root the extraspecial pair gets the
sign +1, and all other structure constants follow from the Jacobi identity. Raw structure constants depend on this
choice and never appear in result files.

Basis order of a Chevalley algebra: x_beta for the positive roots (by height), x_-beta in the same order, then
h_1, ..., h_l.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache
from typing import Any, Optional, Sequence, Union

import numpy as np
from sympy.polys.factortools import dup_factor_list
from sympy.polys.sqfreetools import dup_sqf_part

import nilcent
from nilcent.rootsys import RootSystem, cartan_symmetries, identify_cartan_matrix
from nilcent.scalars import (QQ_FIELD, ExactMatrix, ScalarField, common_field, intersect, is_zero, kernel,
                             solve_linear, span_basis, to_fraction)

# Powering bound used when checking that an automorphism has finite order.
DEFAULT_ORDER_BOUND = 12
DEFAULT_SEED = 42


class DecompositionError(ValueError):
    """Raised when a subalgebra is not reductive or has no split Cartan subalgebra."""


def _chevalley_constants(rs: RootSystem) -> dict[tuple[tuple[int, ...], tuple[int, ...]], int]:
    """
    Structure constants N_{r,s} for all pairs of roots whose sum is a root.

    :returns: Dictionary keyed by (r, s).
    """
    positive = rs.positive_roots
    pos_set = set(positive)
    order = {r: k for k, r in enumerate(positive)}
    norm = {r: rs.inner(r, r) for r in positive}
    special: dict[tuple, Fraction] = {}

    def neg(r):
        return tuple(-c for c in r)

    def add(r, s):
        return tuple(a + b for a, b in zip(r, s))

    def sub(r, s):
        return tuple(a - b for a, b in zip(r, s))

    def length(r):
        return norm[r] if r in pos_set else norm[neg(r)]

    def n_const(r, s) -> Fraction:
        r_pos, s_pos = r in pos_set, s in pos_set
        if r_pos and s_pos:
            if (r, s) in special:
                return special[(r, s)]
            return -special[(s, r)]
        if not r_pos and not s_pos:
            return -n_const(neg(r), neg(s))
        t = neg(add(r, s))
        t_pos = t in pos_set
        if s_pos == t_pos:
            return length(t) / length(r) * n_const(s, t)
        return length(t) / length(s) * n_const(t, r)

    for xi in positive:
        if sum(xi) < 2:
            continue
        alpha = beta = None
        for i, a in enumerate(rs.simple_roots):
            if sub(xi, a) in pos_set:
                alpha, beta = a, sub(xi, a)
                break
        p = 0
        while sub(beta, tuple((p + 1) * c for c in alpha)) in rs._root_set:
            p += 1
        n_ext = Fraction(p + 1)
        special[(alpha, beta)] = n_ext

        pairs = [(g, sub(xi, g)) for g in positive if sub(xi, g) in pos_set and order[g] < order[sub(xi, g)]]
        for gamma, delta in pairs:
            if (gamma, delta) == (alpha, beta):
                continue
            total = Fraction(0)
            b_g = sub(beta, gamma)
            if rs.is_root(b_g):
                total += n_const(beta, neg(gamma)) * n_const(b_g, alpha)
            a_g = sub(alpha, gamma)
            if rs.is_root(a_g):
                total += n_const(neg(gamma), alpha) * n_const(a_g, beta)
            special[(gamma, delta)] = norm[xi] / (norm[delta] * n_ext) * total

    constants = {}
    for r in rs.roots:
        for s in rs.roots:
            if rs.is_root(add(r, s)):
                value = n_const(r, s)
                if value.denominator != 1:
                    raise RuntimeError(f"Non-integral structure constant N{r, s} = {value}")
                constants[(r, s)] = int(value)
    return constants


def _chevalley_table(rs: RootSystem) -> dict[tuple[int, int], tuple[tuple[int, int], ...]]:
    positive = rs.positive_roots
    n_pos, rank = len(positive), rs.rank
    index = {r: k for k, r in enumerate(positive)}
    index.update({tuple(-c for c in r): n_pos + k for k, r in enumerate(positive)})
    table: dict[tuple[int, int], tuple] = {}
    constants = _chevalley_constants(rs)

    for (r, s), value in constants.items():
        table[(index[r], index[s])] = ((index[tuple(a + b for a, b in zip(r, s))], value),)
    for k, beta in enumerate(positive):
        coroot = rs.coroot(beta)
        h_beta = tuple((2 * n_pos + i, c) for i, c in enumerate(coroot) if c != 0)
        table[(k, n_pos + k)] = h_beta
        table[(n_pos + k, k)] = tuple((i, -c) for i, c in h_beta)
    for i in range(rank):
        h = 2 * n_pos + i
        for k, beta in enumerate(positive):
            pairing = rs.pairing(beta, i)
            if pairing != 0:
                table[(h, k)] = ((k, pairing),)
                table[(k, h)] = ((k, -pairing),)
                table[(h, n_pos + k)] = ((n_pos + k, -pairing),)
                table[(n_pos + k, h)] = ((n_pos + k, pairing),)
    return table


class Element:
    """An element of a Lie algebra: exact coordinates over the algebra's basis."""

    __slots__ = ("algebra", "coords", "field")

    def __init__(self, algebra: LieAlgebra, coords: Sequence, field: ScalarField = QQ_FIELD):
        if len(coords) != algebra.dim:
            raise ValueError(f"Expected {algebra.dim} coordinates, got {len(coords)}")
        self.algebra = algebra
        self.field = field
        self.coords = tuple(field(c) for c in coords)

    def __repr__(self) -> str:
        labels = self.algebra.labels
        terms = [f"{self.field.to_string(c)}*{labels[k]}" for k, c in enumerate(self.coords) if not is_zero(c)]
        return " + ".join(terms) if terms else "0"

    def _check(self, other: Element):
        if not isinstance(other, Element):
            raise TypeError(f"Expected an Element, got {type(other)}")
        if other.algebra is not self.algebra:
            raise TypeError("Elements belong to different Lie algebras")

    def _unified(self, other: Element) -> tuple[ScalarField, list, list]:
        field = common_field(self.field, other.field)
        return field, [field.embed(c, self.field) for c in self.coords], [field.embed(c, other.field)
                                                                          for c in other.coords]

    def __add__(self, other: Element) -> Element:
        self._check(other)
        field, a, b = self._unified(other)
        return Element(self.algebra, [x + y for x, y in zip(a, b)], field)

    def __sub__(self, other: Element) -> Element:
        self._check(other)
        field, a, b = self._unified(other)
        return Element(self.algebra, [x - y for x, y in zip(a, b)], field)

    def __neg__(self) -> Element:
        return Element(self.algebra, [-c for c in self.coords], self.field)

    def __rmul__(self, scalar: Any) -> Element:
        c = self.field(scalar)
        return Element(self.algebra, [c * x for x in self.coords], self.field)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element) or other.algebra is not self.algebra:
            return NotImplemented
        _, a, b = self._unified(other)
        return a == b

    def __hash__(self) -> int:
        return hash((self.field.conductor, self.coords))

    def is_zero(self) -> bool:
        return all(is_zero(c) for c in self.coords)

    def bracket(self, other: Element) -> Element:
        return self.algebra.bracket(self, other)

    def to_dict(self) -> dict[str, Any]:
        return {"algebra": self.algebra.name, "field": self.field.conductor,
                "coords": [self.field.to_string(c) for c in self.coords]}

    @classmethod
    def from_dict(cls, algebra: LieAlgebra, data: dict[str, Any]) -> Element:
        if data["algebra"] != algebra.name:
            raise ValueError(f"Element of {data['algebra']} cannot be read into {algebra.name}")
        field = ScalarField(data.get("field", 1))
        return cls(algebra, [field.from_string(c) for c in data["coords"]], field)


class LieAlgebra:
    """
    Finite-dimensional Lie algebra over the rationals given by a sparse structure-constant table.

    ``table[(i, j)]`` lists the pairs (k, c) with [b_i, b_j] = sum c b_k.
    """

    def __init__(self, dim: int, table: dict[tuple[int, int], Sequence[tuple[int, Any]]], name: str,
                 root_system: Optional[RootSystem] = None, labels: Optional[list[str]] = None,
                 generators: Optional[list[int]] = None):
        self.dim = dim
        self.name = name
        self.root_system = root_system
        self.labels = labels or [f"b{k}" for k in range(dim)]
        # Indices of basis elements generating the algebra.
        self.generator_indices = generators if generators is not None else list(range(dim))
        self._table = {key: tuple((k, c if isinstance(c, int) else to_fraction(c)) for k, c in entry)
                       for key, entry in table.items() if entry}
        self._field_tables: dict[int, dict] = {}
        self._rows: dict[int, list[tuple[int, tuple]]] = {}
        for (i, j), entry in self._table.items():
            self._rows.setdefault(i, []).append((j, entry))
        self._killing: Optional[dict[tuple[int, int], Any]] = None
        self._meta: dict[str, Any] = {}

    def __repr__(self) -> str:
        return f"LieAlgebra({self.name}, dim={self.dim})"

    @classmethod
    def from_type(cls, label: str) -> LieAlgebra:
        """Chevalley basis of the split semisimple Lie algebra of a type label such as 'G2' or 'A1+A2'."""
        return _chevalley_algebra(label.replace(" ", "") or "0")

    @classmethod
    def from_matrices(cls, basis: Sequence[ExactMatrix], name: str) -> LieAlgebra:
        """
        Lie algebra spanned by square matrices closed under the commutator.

        :param basis: Linearly independent rational matrices.
        :param name: Name used in serialized output.

        :raises ValueError: If the span is not closed under the commutator.
        """
        flat = [[v for row in m.to_list() for v in row] for m in basis]
        coord_map = _CoordinateMap(flat, QQ_FIELD)
        table = {}
        for i, j in itertools.combinations(range(len(basis)), 2):
            comm = basis[i] @ basis[j] - basis[j] @ basis[i]
            coords = coord_map.coords([v for row in comm.to_list() for v in row])
            if coords is None:
                raise ValueError("The matrices do not span a Lie algebra")
            entry = tuple((k, c) for k, c in enumerate(coords) if not is_zero(c))
            if entry:
                table[(i, j)] = entry
                table[(j, i)] = tuple((k, -c) for k, c in entry)
        algebra = cls(len(basis), table, name)
        algebra._meta["matrices"] = list(basis)
        algebra._meta["coordinate_map"] = coord_map
        return algebra

    # Basis access

    @property
    def rank(self) -> int:
        if self.root_system is None:
            raise ValueError(f"{self.name} has no attached root system")
        return self.root_system.rank

    @property
    def n_positive(self) -> int:
        return len(self.root_system.positive_roots)

    def root_index(self, beta: Sequence[int]) -> int:
        """Basis index of the root vector x_beta."""
        beta = tuple(int(c) for c in beta)
        if self.root_system.is_positive(beta):
            return self.root_system.index_of_positive(beta)
        return self.n_positive + self.root_system.index_of_positive(tuple(-c for c in beta))

    def cartan_index(self, i: int) -> int:
        """Basis index of h_i (1-based)."""
        return 2 * self.n_positive + i - 1

    def basis_root(self, k: int) -> Optional[tuple[int, ...]]:
        """Root of the k-th basis element, or None for Cartan basis elements."""
        n_pos = self.n_positive
        if k < n_pos:
            return self.root_system.positive_roots[k]
        if k < 2 * n_pos:
            return tuple(-c for c in self.root_system.positive_roots[k - n_pos])
        return None

    def element(self, coords: Sequence, field: ScalarField = QQ_FIELD) -> Element:
        return Element(self, coords, field)

    def zero(self, field: ScalarField = QQ_FIELD) -> Element:
        return Element(self, [field.zero] * self.dim, field)

    def basis_element(self, k: int, field: ScalarField = QQ_FIELD) -> Element:
        coords = [field.zero] * self.dim
        coords[k] = field.one
        return Element(self, coords, field)

    def x(self, beta: Sequence[int]) -> Element:
        return self.basis_element(self.root_index(beta))

    def h(self, i: int) -> Element:
        return self.basis_element(self.cartan_index(i))

    def cartan_element(self, coords: Sequence) -> Element:
        """Element sum c_i h_i of the standard Cartan subalgebra."""
        vec = [0] * self.dim
        for i, c in enumerate(coords):
            vec[2 * self.n_positive + i] = to_fraction(c)
        return Element(self, vec)

    def cartan_coordinates(self, x: Element) -> Optional[tuple[Fraction, ...]]:
        """Coordinates over h_1..h_l if x lies in the standard Cartan subalgebra, else None."""
        start = 2 * self.n_positive
        if any(not is_zero(c) for c in x.coords[:start]):
            return None
        return tuple(x.field.to_rational(c) for c in x.coords[start:])

    def cartan_subalgebra(self) -> list[Element]:
        return [self.h(i) for i in range(1, self.rank + 1)]

    def generators(self) -> list[Element]:
        return [self.basis_element(k) for k in self.generator_indices]

    # Brackets

    def table(self, field: ScalarField = QQ_FIELD) -> dict[tuple[int, int], tuple]:
        """Structure constants converted to the domain of ``field``."""
        if field.conductor not in self._field_tables:
            self._field_tables[field.conductor] = {
                key: tuple((k, field(c)) for k, c in entry) for key, entry in self._table.items()}
        return self._field_tables[field.conductor]

    def bracket_vectors(self, x: Sequence, y: Sequence, zero: Any, table: Optional[dict] = None) -> list:
        """
        Bracket of coordinate vectors with entries in any commutative ring.

        :param zero: The ring's zero. Coefficients of the table are multiplied into ring elements.
        :param table: Structure constants to use (rational ones by default).
        """
        table = self.table() if table is None else table
        result = [zero] * self.dim
        nz_y = [(j, b) for j, b in enumerate(y) if b]
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in nz_y:
                entry = table.get((i, j))
                if entry:
                    ab = a * b
                    for k, c in entry:
                        result[k] += ab * c
        return result

    def bracket(self, x: Union[Element, Sequence], y: Union[Element, Sequence]) -> Element:
        """[x, y]."""
        if not isinstance(x, Element):
            x = Element(self, x)
        if not isinstance(y, Element):
            y = Element(self, y)
        x._check(y)
        field, a, b = x._unified(y)
        return Element(self, self.bracket_vectors(a, b, field.zero, self.table(field)), field)

    def ad(self, x: Element) -> ExactMatrix:
        """Matrix of ad x in the basis of the algebra."""
        field = x.field
        table = self.table(field)
        entries: dict[tuple[int, int], Any] = {}
        for i, a in enumerate(x.coords):
            if is_zero(a):
                continue
            for j, _ in self._rows.get(i, ()):
                for k, c in table[(i, j)]:
                    entries[(k, j)] = entries.get((k, j), field.zero) + a * c
        return ExactMatrix.from_sparse(entries, (self.dim, self.dim), field)

    def is_nilpotent(self, x: Element) -> bool:
        """Whether ad x is nilpotent, i.e. (ad x)^dim = 0."""
        power = self.ad(x)
        steps = 1
        while steps < self.dim and not power.is_zero():
            power = power @ power
            steps *= 2
        return power.is_zero()

    def check_jacobi(self, samples: Optional[int] = None, seed: int = DEFAULT_SEED) -> bool:
        """
        Check antisymmetry and the Jacobi identity on basis triples.

        :param samples: Number of random basis triples. All triples are checked if None.
        """
        for (i, j), entry in self._table.items():
            if dict(entry) != {k: -c for k, c in self._table.get((j, i), ())}:
                return False
        if samples is None:
            values = {(i, j, k): to_fraction(c) for (i, j), entry in self._table.items() for k, c in entry}
            integral = all(v.denominator == 1 for v in values.values())
            dense = np.zeros((self.dim, self.dim, self.dim), dtype=np.int64 if integral else object)
            for key, v in values.items():
                dense[key] = int(v) if integral else v
            # [[b_i, b_j], b_k] + [[b_j, b_k], b_i] + [[b_k, b_i], b_j]
            first = np.tensordot(dense, dense, axes=([2], [0]))
            jacobi = first + np.transpose(first, (1, 2, 0, 3)) + np.transpose(first, (2, 0, 1, 3))
            return not np.any(jacobi != 0)
        rng = np.random.default_rng(seed)
        for _ in range(samples):
            i, j, k = (int(v) for v in rng.integers(0, self.dim, size=3))
            bi, bj, bk = (self.basis_element(v) for v in (i, j, k))
            total = (self.bracket(self.bracket(bi, bj), bk) + self.bracket(self.bracket(bj, bk), bi)
                     + self.bracket(self.bracket(bk, bi), bj))
            if not total.is_zero():
                return False
        return True

    # Killing form

    def _killing_gram(self) -> dict[tuple[int, int], Fraction]:
        if self._killing is None:
            # ad_b as {j: {k: c}} with [b, b_j] = sum c b_k
            columns = []
            for a in range(self.dim):
                cols: dict[int, dict[int, Fraction]] = {}
                for j, entry in self._rows.get(a, ()):
                    cols[j] = {k: to_fraction(c) for k, c in entry}
                columns.append(cols)
            gram = {}
            for a in range(self.dim):
                for b in range(a, self.dim):
                    if self.root_system is not None:
                        ra, rb = self.basis_root(a), self.basis_root(b)
                        if (ra is None) != (rb is None):
                            continue
                        if ra is not None and any(x + y != 0 for x, y in zip(ra, rb)):
                            continue
                    total = Fraction(0)
                    for k, col in columns[a].items():
                        for j, c in col.items():
                            d = columns[b].get(j, {}).get(k)
                            if d:
                                total += c * d
                    if total != 0:
                        gram[(a, b)] = gram[(b, a)] = total
            self._killing = gram
        return self._killing

    def killing(self, x: Element, y: Element) -> Any:
        """Killing form Tr(ad x ad y)."""
        field, a, b = x._unified(y)
        total = field.zero
        for (i, j), g in self._killing_gram().items():
            if a[i] and b[j]:
                total += a[i] * b[j] * field(g)
        return total

    def killing_matrix(self, elements: Sequence[Element]) -> ExactMatrix:
        field = common_field(*[e.field for e in elements]) if elements else QQ_FIELD
        rows = [[self.killing(x, y) for y in elements] for x in elements]
        return ExactMatrix.from_rows(rows, field, ncols=len(elements))

    # Subalgebras

    def subalgebra(self, basis: Sequence[Union[Element, Sequence]], field: Optional[ScalarField] = None) -> Subalgebra:
        return Subalgebra(self, basis, field)

    def centralizer(self, elements: Union[Subalgebra, Sequence[Element]],
                    within: Optional[Subalgebra] = None) -> Subalgebra:
        """
        Centralizer {y | [x, y] = 0 for all given x}, optionally inside a subalgebra.

        :param elements: Elements or a subalgebra whose basis is used.
        :param within: Optional. Subalgebra to intersect with.
        """
        if isinstance(elements, Subalgebra):
            elements = elements.elements()
        elements = [e for e in elements if not e.is_zero()]
        fields = [e.field for e in elements] + ([within.field] if within is not None else [])
        field = common_field(*fields) if fields else QQ_FIELD
        space = within.basis if within is not None else [self.basis_element(k, field).coords for k in range(self.dim)]
        space = [[field.embed(c, within.field if within is not None else field) for c in v] for v in space]
        if not elements:
            return Subalgebra(self, space, field)
        if not space:
            return Subalgebra(self, [], field)
        table = self.table(field)
        coords_list = [[field.embed(c, e.field) for c in e.coords] for e in elements]
        columns = [[] for _ in space]
        for j, w in enumerate(space):
            for x in coords_list:
                columns[j].extend(self.bracket_vectors(x, w, field.zero, table))
        matrix = ExactMatrix.from_columns(columns, field, nrows=len(coords_list) * self.dim)
        basis = []
        for c in kernel(matrix):
            vec = [field.zero] * self.dim
            for j, w in enumerate(space):
                if not is_zero(c[j]):
                    vec = [v + c[j] * wk for v, wk in zip(vec, w)]
            basis.append(vec)
        return Subalgebra(self, basis, field)

    # Automorphisms

    def exp_ad(self, x: Element) -> Automorphism:
        """
        exp(ad x) for an ad-nilpotent x.

        :raises ValueError: If ad x is not nilpotent.
        """
        matrix = self.ad(x)
        field = x.field
        total = ExactMatrix.eye(self.dim, field)
        power = ExactMatrix.eye(self.dim, field)
        for k in range(1, self.dim + 2):
            power = power @ matrix
            if power.is_zero():
                return Automorphism(self, total, certified=True)
            total = total + power.scale(field(Fraction(1, math.factorial(k))))
        raise ValueError(f"ad x is not nilpotent for x = {x}")

    def homomorphism(self, images: Sequence[Element]) -> ExactMatrix:
        """Matrix whose k-th column is the image of the k-th basis element."""
        field = common_field(*[e.field for e in images])
        return ExactMatrix.from_columns([[field.embed(c, e.field) for c in e.coords] for e in images], field,
                                        nrows=images[0].algebra.dim if images else 0)

    def chevalley_images(self, target: LieAlgebra, h_images: Sequence[Element], x_images: Sequence[Element],
                         y_images: Sequence[Element]) -> list[Element]:
        """
        Images of the whole Chevalley basis under the homomorphism fixed by images of canonical generators.

        Root vectors are reached by words x_beta = [x_i, x_gamma] / N_{alpha_i, gamma}.
        """
        rs = self.root_system
        images: dict[int, Element] = {}
        for i in range(rs.rank):
            images[self.root_index(rs.simple_roots[i])] = x_images[i]
            images[self.root_index(tuple(-c for c in rs.simple_roots[i]))] = y_images[i]
            images[self.cartan_index(i + 1)] = h_images[i]
        for beta in rs.positive_roots:
            if sum(beta) < 2:
                continue
            for i, alpha in enumerate(rs.simple_roots):
                gamma = tuple(b - a for b, a in zip(beta, alpha))
                if rs.is_positive(gamma):
                    break
            for sign in (1, -1):
                a_s, g_s, b_s = (tuple(sign * c for c in r) for r in (alpha, gamma, beta))
                entry = self._table[(self.root_index(a_s), self.root_index(g_s))]
                n_const = entry[0][1]
                value = target.bracket(images[self.root_index(a_s)], images[self.root_index(g_s)])
                images[self.root_index(b_s)] = Fraction(1, n_const) * value if n_const != 1 else value
        return [images[k] for k in range(self.dim)]

    def automorphism_from_generators(self, h_images: Sequence[Element], x_images: Sequence[Element],
                                     y_images: Sequence[Element], certify: bool = True) -> Automorphism:
        """Automorphism sending the standard canonical generators to the given ones."""
        images = self.chevalley_images(self, h_images, x_images, y_images)
        sigma = Automorphism(self, self.homomorphism(images))
        if certify:
            sigma.certify()
        return sigma

    def diagram_symmetries(self) -> list[tuple[int, ...]]:
        return cartan_symmetries(self.root_system.cartan_matrix)

    def diagram_automorphism(self, perm: Sequence[int]) -> Automorphism:
        """
        Automorphism h_i -> h_perm(i), x_{+-alpha_i} -> x_{+-alpha_perm(i)}.

        :param perm: 0-based images of the simple roots.

        :raises ValueError: If the permutation does not preserve the Cartan matrix.
        """
        cartan = self.root_system.cartan_matrix
        perm = tuple(int(p) for p in perm)
        if sorted(perm) != list(range(self.rank)) or any(
                cartan[perm[i], perm[j]] != cartan[i, j] for i in range(self.rank) for j in range(self.rank)):
            raise ValueError(f"Permutation {perm} is not a symmetry of the Cartan matrix of {self.name}")
        simple = self.root_system.simple_roots
        h_im = [self.h(perm[i] + 1) for i in range(self.rank)]
        x_im = [self.x(simple[perm[i]]) for i in range(self.rank)]
        y_im = [self.x(tuple(-c for c in simple[perm[i]])) for i in range(self.rank)]
        return self.automorphism_from_generators(h_im, x_im, y_im)

    def identity(self, field: ScalarField = QQ_FIELD) -> Automorphism:
        return Automorphism(self, ExactMatrix.eye(self.dim, field), certified=True)


@lru_cache(maxsize=None)
def _chevalley_algebra(label: str) -> LieAlgebra:
    rs = RootSystem.from_type(label)
    table = _chevalley_table(rs)
    n_pos = len(rs.positive_roots)
    labels = ([f"x{''.join(map(str, r))}" for r in rs.positive_roots]
              + [f"x-{''.join(map(str, r))}" for r in rs.positive_roots]
              + [f"h{i + 1}" for i in range(rs.rank)])
    generators = [rs.index_of_positive(a) for a in rs.simple_roots] + [
        n_pos + rs.index_of_positive(a) for a in rs.simple_roots]
    algebra = LieAlgebra(2 * n_pos + rs.rank, table, label, root_system=rs, labels=labels, generators=generators)
    if rs.rank <= 4 and not algebra.check_jacobi():
        raise RuntimeError(f"Structure constants of {label} violate the Jacobi identity")
    return algebra


class _CoordinateMap:
    """Coordinates with respect to a linearly independent list of vectors, through an invertible minor."""

    def __init__(self, basis: Sequence[Sequence], field: ScalarField):
        self.basis = [[field(c) for c in v] for v in basis]
        self.field = field
        if not self.basis:
            self.pivots: tuple[int, ...] = ()
            self._inverse = None
            return
        matrix = ExactMatrix.from_rows(self.basis, field)
        _, pivots = matrix.rref()
        if len(pivots) != len(self.basis):
            raise ValueError("Basis vectors are linearly dependent")
        self.pivots = pivots
        # v[p] = sum_j c_j b_j[p], so c = (M^T)^-1 v_P with M[j][p] = b_j[p].
        self._inverse = matrix.extract(range(len(self.basis)), pivots).transpose().inverse()

    def coords(self, vector: Sequence, check: bool = True) -> Optional[list]:
        field = self.field
        vector = [field(v) for v in vector]
        if not self.basis:
            return [] if all(is_zero(v) for v in vector) else None
        coeffs = self._inverse.apply([vector[p] for p in self.pivots])
        if check:
            terms = [(c, b) for c, b in zip(coeffs, self.basis) if not is_zero(c)]
            for k in range(len(vector)):
                value = sum((c * b[k] for c, b in terms), field.zero)
                if value != vector[k]:
                    return None
        return coeffs


class Subalgebra:
    """
    Subalgebra (or invariant subspace) of a Lie algebra, given by a basis of coordinate vectors.

    After :func:`reductive_decompose`, ``derived`` and ``centre`` hold the two summands.
    """

    def __init__(self, algebra: LieAlgebra, basis: Sequence[Union[Element, Sequence]],
                 field: Optional[ScalarField] = None):
        vectors = []
        fields = []
        for b in basis:
            if isinstance(b, Element):
                fields.append(b.field)
        field = field or (common_field(*fields) if fields else QQ_FIELD)
        for b in basis:
            if isinstance(b, Element):
                vectors.append([field.embed(c, b.field) for c in b.coords])
            else:
                vectors.append([field(c) for c in b])
        self.algebra = algebra
        self.field = field
        self.basis = vectors
        self._map = _CoordinateMap(vectors, field)
        self.derived: Optional[Subalgebra] = None
        self.centre: Optional[Subalgebra] = None

    def __repr__(self) -> str:
        return f"Subalgebra(dim={self.dim} of {self.algebra.name})"

    @property
    def dim(self) -> int:
        return len(self.basis)

    def elements(self) -> list[Element]:
        return [Element(self.algebra, v, self.field) for v in self.basis]

    def coords(self, x: Union[Element, Sequence]) -> Optional[list]:
        """Coordinates of x over the basis, or None if x is not in the span."""
        if isinstance(x, Element):
            field = common_field(self.field, x.field)
            if field is not self.field:
                return Subalgebra(self.algebra, self.basis, field).coords(x)
            x = [field.embed(c, x.field) for c in x.coords]
        return self._map.coords(x)

    def contains(self, x: Union[Element, Sequence]) -> bool:
        return self.coords(x) is not None

    def contains_subspace(self, other: Subalgebra) -> bool:
        return all(self.contains(v) for v in other.elements())

    def is_closed(self) -> bool:
        elements = self.elements()
        return all(self.contains(self.algebra.bracket(a, b)) for a, b in itertools.combinations(elements, 2))

    def is_abelian(self) -> bool:
        elements = self.elements()
        return all(self.algebra.bracket(a, b).is_zero() for a, b in itertools.combinations(elements, 2))

    def ad_matrix(self, x: Element, space: Optional[Subalgebra] = None) -> ExactMatrix:
        """Matrix of ad x restricted to an invariant subspace (this subalgebra by default)."""
        space = space or self
        field = common_field(space.field, x.field)
        columns = []
        for v in space.elements():
            c = space.coords(self.algebra.bracket(x, v))
            if c is None:
                raise ValueError("The subspace is not invariant under ad x")
            columns.append([field.embed(a, space.field) for a in c])
        return ExactMatrix.from_columns(columns, field, nrows=space.dim)

    def from_coords(self, coords: Sequence) -> Element:
        vec = [self.field.zero] * self.algebra.dim
        for c, b in zip(coords, self.basis):
            if not is_zero(c):
                vec = [v + c * bk for v, bk in zip(vec, b)]
        return Element(self.algebra, vec, self.field)

    def random_element(self, rng: np.random.Generator, low: int = -5, high: int = 6) -> Element:
        return self.from_coords([self.field(int(c)) for c in rng.integers(low, high, size=self.dim)])

    def derived_algebra(self) -> Subalgebra:
        elements = self.elements()
        brackets = [list(self.algebra.bracket(a, b).coords) for a, b in itertools.combinations(elements, 2)]
        nonzero = [v for v in brackets if any(not is_zero(c) for c in v)]
        return Subalgebra(self.algebra, span_basis(nonzero, self.field), self.field)

    def intersection(self, other: Subalgebra) -> Subalgebra:
        field = common_field(self.field, other.field)
        a = [[field.embed(c, self.field) for c in v] for v in self.basis]
        b = [[field.embed(c, other.field) for c in v] for v in other.basis]
        return Subalgebra(self.algebra, intersect(a, b, field), field)

    def sum(self, *others: Subalgebra) -> Subalgebra:
        field = common_field(self.field, *[o.field for o in others])
        vectors = [[field.embed(c, s.field) for c in v] for s in (self,) + others for v in s.basis]
        return Subalgebra(self.algebra, span_basis(vectors, field), field)

    def killing_orthogonal(self) -> Subalgebra:
        """{x in g | kappa(x, y) = 0 for all y in this subspace}."""
        gram = self.algebra._killing_gram()
        field = self.field
        rows = []
        for v in self.basis:
            row = [field.zero] * self.algebra.dim
            for (i, j), g in gram.items():
                if not is_zero(v[i]):
                    row[j] += v[i] * field(g)
            rows.append(row)
        if not rows:
            return Subalgebra(self.algebra, [self.algebra.basis_element(k, field).coords
                                             for k in range(self.algebra.dim)], field)
        return Subalgebra(self.algebra, kernel(ExactMatrix.from_rows(rows, field)), field)


def is_semisimple_element(algebra: LieAlgebra, x: Element) -> bool:
    """Whether ad x is diagonalizable: the squarefree part of its characteristic polynomial annihilates it."""
    matrix = algebra.ad(x)
    domain = x.field.domain
    part = dup_sqf_part(matrix.charpoly(), domain)
    value = ExactMatrix.zeros(algebra.dim, algebra.dim, x.field)
    identity = ExactMatrix.eye(algebra.dim, x.field)
    for c in part:
        value = value @ matrix + identity.scale(c)
    return value.is_zero()


def reductive_decompose(s: Subalgebra, check_semisimple: bool = True) -> tuple[Subalgebra, Subalgebra]:
    """
    Split a reductive subalgebra as s = [s, s] + z(s).

    :param s: Subalgebra, reductive in the ambient algebra.
    :param check_semisimple: Check that centre elements act semisimply.

    :raises DecompositionError: If the two parts do not form a direct sum.

    :returns: The derived algebra and the centre (also stored on ``s``).
    """
    algebra = s.algebra
    derived = s.derived_algebra()
    centre = algebra.centralizer(s, within=s)
    if derived.dim + centre.dim != s.dim or derived.intersection(centre).dim != 0:
        raise DecompositionError(
            f"Subalgebra of dimension {s.dim} is not reductive: derived part {derived.dim}, centre {centre.dim}")
    if check_semisimple:
        for z in centre.elements():
            if not is_semisimple_element(algebra, z):
                raise DecompositionError(f"Centre element {z} does not act semisimply")
    s.derived, s.centre = derived, centre
    return derived, centre


class CanonicalGenerators:
    """
    Canonical generating set (h_i, x_i, y_i) of a split semisimple subalgebra, in Bourbaki order.

    ``cartan`` holds a basis of the Cartan subalgebra spanned by the h_i.
    """

    def __init__(self, h: list[Element], x: list[Element], y: list[Element], label: str):
        self.h, self.x, self.y = h, x, y
        self.label = label
        self.rank = len(h)
        self.cartan_matrix = np.array([[self._eigen(self.h[j], self.x[i]) for j in range(self.rank)]
                                       for i in range(self.rank)], dtype=int) if h else np.zeros((0, 0), dtype=int)

    def __repr__(self) -> str:
        return f"CanonicalGenerators({self.label})"

    @staticmethod
    def _eigen(h: Element, x: Element) -> int:
        """Eigenvalue of ad h on the eigenvector x."""
        value = h.algebra.bracket(h, x)
        field = value.field
        k = next(k for k, c in enumerate(x.coords) if not is_zero(c))
        return int(field.to_rational(value.coords[k] / field.embed(x.coords[k], x.field)))

    def check(self) -> bool:
        """Verify the defining relations exactly."""
        algebra = self.h[0].algebra if self.h else None
        for i, j in itertools.product(range(self.rank), repeat=2):
            c = int(self.cartan_matrix[i, j])
            if not algebra.bracket(self.h[i], self.h[j]).is_zero():
                return False
            expected = self.h[i] if i == j else algebra.zero()
            if algebra.bracket(self.x[i], self.y[j]) != expected:
                return False
            if algebra.bracket(self.h[j], self.x[i]) != c * self.x[i]:
                return False
            if algebra.bracket(self.h[j], self.y[i]) != (-c) * self.y[i]:
                return False
        return True

    def standard_algebra(self) -> LieAlgebra:
        return LieAlgebra.from_type(self.label)

    def embedding(self) -> list[Element]:
        """Images of the Chevalley basis of the standard algebra of this type."""
        if self.rank == 0:
            return []
        standard = self.standard_algebra()
        return standard.chevalley_images(self.h[0].algebra, self.h, self.x, self.y)

    def subalgebra(self) -> Subalgebra:
        return Subalgebra(self.h[0].algebra, self.embedding()) if self.rank else None

    def __add__(self, other: CanonicalGenerators) -> CanonicalGenerators:
        """Generators of a direct sum, relabelled and reordered."""
        h, x, y = self.h + other.h, self.x + other.x, self.y + other.y
        if not h:
            return CanonicalGenerators([], [], [], "0")
        gens = CanonicalGenerators(h, x, y, "")
        label, order = identify_cartan_matrix(gens.cartan_matrix)
        return CanonicalGenerators([h[k] for k in order], [x[k] for k in order], [y[k] for k in order], label)

    def permuted(self, perm: Sequence[int]) -> CanonicalGenerators:
        """Generators relabelled by a symmetry of the Cartan matrix: the new i-th triple is the old perm[i]-th."""
        gens = CanonicalGenerators([self.h[p] for p in perm], [self.x[p] for p in perm], [self.y[p] for p in perm],
                                   self.label)
        if (gens.cartan_matrix != self.cartan_matrix).any():
            raise ValueError(f"Permutation {tuple(perm)} is not a symmetry of the Cartan matrix of {self.label}")
        if hasattr(self, "cartan"):
            gens.cartan = self.cartan
        return gens


def standard_generators(algebra: LieAlgebra) -> CanonicalGenerators:
    """The canonical generators h_i, x_{alpha_i}, x_{-alpha_i} of an algebra built from a root system."""
    rs = algebra.root_system
    if rs is None:
        raise ValueError(f"{algebra.name} has no attached root system")
    if rs.rank == 0:
        return CanonicalGenerators([], [], [], "0")
    return CanonicalGenerators([algebra.h(i + 1) for i in range(rs.rank)], [algebra.x(a) for a in rs.simple_roots],
                               [algebra.x(tuple(-c for c in a)) for a in rs.simple_roots], algebra.name)


class Isomorphism:
    """
    Isomorphism between two split semisimple subalgebras fixed by matching canonical generating sets.

    Both sides are spanned by the root-vector words of :meth:`LieAlgebra.chevalley_images`, so an element is mapped
    through its coordinates over the source words.
    """

    def __init__(self, source: CanonicalGenerators, target: CanonicalGenerators):
        if source.cartan_matrix.shape != target.cartan_matrix.shape or (
                source.cartan_matrix != target.cartan_matrix).any():
            raise ValueError(f"Canonical generators of types {source.label} and {target.label} do not match")
        self.source, self.target = source, target
        self.domain = Subalgebra(source.h[0].algebra, source.embedding()) if source.rank else None
        self.images = target.embedding()

    def __repr__(self) -> str:
        return f"Isomorphism({self.source.label})"

    def __call__(self, x: Element) -> Element:
        if self.domain is None:
            if not x.is_zero():
                raise ValueError("Only zero lies in the zero subalgebra")
            return x
        coords = self.domain.coords(x)
        if coords is None:
            raise ValueError("Element does not lie in the source subalgebra")
        algebra = self.images[0].algebra
        source = common_field(self.domain.field, x.field)
        field = common_field(source, *[v.field for v in self.images])
        vec = [field.zero] * algebra.dim
        for c, v in zip(coords, self.images):
            if not is_zero(c):
                c = field.embed(c, source)
                vec = [a + c * field.embed(b, v.field) for a, b in zip(vec, v.coords)]
        return Element(algebra, vec, field)

    def inverse(self) -> Isomorphism:
        return Isomorphism(self.target, self.source)


def isomorphism(source: CanonicalGenerators, target: CanonicalGenerators) -> Isomorphism:
    """
    The isomorphism sending one canonical generating set to another of the same type.

    :raises ValueError: If the Cartan matrices differ.
    """
    return Isomorphism(source, target)


def joint_eigenspaces(s: Subalgebra, toral: Sequence[Element]) -> list[tuple[tuple[Fraction, ...], list[list]]]:
    """Joint eigenspaces of commuting split semisimple elements acting on s, as weights and s-coordinates."""
    field = s.field
    spaces = [((), [[field.one if i == j else field.zero for i in range(s.dim)] for j in range(s.dim)])]
    for t in toral:
        matrix = s.ad_matrix(t)
        new_spaces = []
        for weight, vectors in spaces:
            coord_map = _CoordinateMap(vectors, field)
            restricted = ExactMatrix.from_columns([coord_map.coords(matrix.apply(v), check=False) for v in vectors],
                                                  field, nrows=len(vectors))
            for factor, _ in dup_factor_list(restricted.charpoly(), field.domain)[1]:
                if len(factor) != 2:
                    raise DecompositionError("Cartan subalgebra is not split over the base field")
                value = -factor[1] / factor[0]
                shifted = restricted - ExactMatrix.eye(len(vectors), field).scale(value)
                eigen = []
                for c in kernel(shifted):
                    vec = [field.zero] * s.dim
                    for cj, v in zip(c, vectors):
                        if not is_zero(cj):
                            vec = [a + cj * b for a, b in zip(vec, v)]
                    eigen.append(vec)
                new_spaces.append((weight + (field.to_rational(value),), eigen))
        spaces = new_spaces
    return spaces


def _find_nilpotent(algebra: LieAlgebra, space: Subalgebra, hints: Sequence[Element], rng: np.random.Generator,
                    tries: int = 300) -> Optional[Element]:
    """A nonzero ad-nilpotent element of a split semisimple subalgebra, or None if the search fails."""
    for x in list(hints) + space.elements():
        if not x.is_zero() and space.contains(x) and algebra.is_nilpotent(x):
            return x
    field = space.field
    for _ in range(tries):
        x = space.random_element(rng, -3, 4)
        matrix = space.ad_matrix(x)
        for factor, _ in dup_factor_list(matrix.charpoly(), field.domain)[1]:
            if len(factor) != 2 or is_zero(factor[1]):
                continue
            value = -factor[1] / factor[0]
            vectors = kernel(matrix - ExactMatrix.eye(space.dim, field).scale(value))
            if vectors:
                return space.from_coords(vectors[0])
    return None


def _graded_neutral(algebra: LieAlgebra, s: Subalgebra, x: Element, opposite: Sequence[Element]) -> Optional[Element]:
    """
    Neutral element h = [x, z] of an sl2-triple through x, with z in the opposite weight space of a grading.

    Solves [x, [x, z]] = -2x for z in the span of ``opposite``.
    """
    if not opposite:
        return None
    columns = [s.coords(algebra.bracket(x, algebra.bracket(x, b))) for b in opposite]
    target = s.coords((-2) * x)
    coeffs = solve_linear(ExactMatrix.from_columns(columns, s.field, nrows=s.dim), target)
    if coeffs is None:
        return None
    z = algebra.zero(s.field)
    for c, b in zip(coeffs, opposite):
        if not is_zero(c):
            z = z + c * b
    return algebra.bracket(x, z)


def _toral_candidates(s: Subalgebra, torus: list[Element], current: Subalgebra, derived: Subalgebra,
                      hints: Sequence[Element], rng: np.random.Generator):
    """
    Split semisimple elements of the centralizer ``current`` of the torus in s, in order of preference.

    Elements of the standard Cartan subalgebra come first, then neutral elements of sl2-triples through the
    hints, through weight vectors of the torus and through nilpotent elements found at random.
    """
    algebra = s.algebra
    if algebra.root_system is not None:
        standard = Subalgebra(algebra, algebra.cartan_subalgebra())
        yield from standard.intersection(current).elements()
    if derived.dim:
        for x in hints:
            if not x.is_zero() and derived.contains(x) and algebra.is_nilpotent(x):
                yield nilcent.sl2.solve_triple(algebra, x, within=derived).h
    if torus:
        spaces = {weight: [s.from_coords(v) for v in vectors] for weight, vectors in joint_eigenspaces(s, torus)}
        for weight, vectors in sorted(spaces.items()):
            if not any(weight):
                continue
            opposite = spaces.get(tuple(-w for w in weight), [])
            for x in vectors:
                h = _graded_neutral(algebra, s, x, opposite)
                if h is not None:
                    yield h
    if derived.dim:
        x = _find_nilpotent(algebra, derived, (), rng)
        if x is not None:
            yield nilcent.sl2.solve_triple(algebra, x, within=derived).h


def split_cartan_subalgebra(s: Subalgebra, toral: Sequence[Element] = (), hints: Sequence[Element] = (),
                            seed: int = DEFAULT_SEED) -> list[Element]:
    """
    Split Cartan subalgebra of a semisimple subalgebra, containing given commuting split semisimple elements.

    The torus grows one split semisimple element of its centralizer at a time: elements of the standard Cartan
    subalgebra of the ambient algebra, then neutral elements of graded sl2-triples. It is a Cartan subalgebra
    once it equals its own centralizer in s.

    :raises DecompositionError: If no element extends the torus.
    """
    algebra = s.algebra
    rng = np.random.default_rng(seed)
    torus: list[Element] = []
    for t in toral:
        if not t.is_zero() and not Subalgebra(algebra, torus, s.field).contains(t):
            torus.append(t)
    while True:
        current = algebra.centralizer(torus, within=s) if torus else s
        derived = current.derived_algebra()
        if derived.dim == 0 and current.dim == len(torus):
            return torus
        span = Subalgebra(algebra, torus, s.field)
        for t in _toral_candidates(s, torus, current, derived, hints, rng):
            if not t.is_zero() and current.contains(t) and not span.contains(t):
                torus.append(t)
                break
        else:
            raise DecompositionError(f"No split semisimple element extends a torus of dimension {len(torus)} in a "
                                     f"subalgebra of dimension {s.dim}")


def canonical_generators(s: Subalgebra, toral: Sequence[Element] = (), dominant: Optional[Element] = None,
                         hints: Sequence[Element] = (), seed: int = DEFAULT_SEED) -> CanonicalGenerators:
    """
    Canonical generating set of a split semisimple subalgebra.

    :param s: The subalgebra.
    :param toral: Commuting semisimple elements with rational eigenvalues to include in the Cartan subalgebra.
    :param dominant: Optional element of the Cartan subalgebra that should be dominant for the chosen base.
    :param hints: Optional nilpotent elements of s, tried first when extending the torus.
    :param seed: Seed for the random elements drawn while searching for nilpotent elements.

    :raises DecompositionError: If no split Cartan subalgebra is found.
    """
    algebra = s.algebra
    if s.dim == 0:
        return CanonicalGenerators([], [], [], "0")
    cartan = split_cartan_subalgebra(s, toral, hints, seed)
    cartan_sub = Subalgebra(algebra, cartan)
    roots = {w: vecs for w, vecs in joint_eigenspaces(s, cartan) if any(v != 0 for v in w)}
    if any(len(v) != 1 for v in roots.values()):
        raise DecompositionError("Root spaces are not one-dimensional")

    def evaluate(weight, element):
        coords = cartan_sub.coords(element)
        return sum((cartan_sub.field.to_rational(c) * w for c, w in zip(coords, weight)), Fraction(0))

    def order_key(weight):
        # lexicographic, led by the value on the dominant element
        return ([evaluate(weight, dominant)] if dominant is not None else []) + list(weight)

    def is_positive(weight):
        return next((v > 0 for v in order_key(weight) if v != 0), False)

    positive = [w for w in roots if is_positive(w)]
    sums = {tuple(a + b for a, b in zip(w1, w2)) for w1, w2 in itertools.combinations_with_replacement(positive, 2)}
    simple = sorted(w for w in positive if w not in sums)
    if len(simple) != len(cartan):
        raise DecompositionError(f"Found {len(simple)} simple roots for a Cartan subalgebra of dimension {len(cartan)}")

    h_list, x_list, y_list = [], [], []
    for w in simple:
        x = s.from_coords(roots[w][0])
        y = s.from_coords(roots[tuple(-c for c in w)][0])
        h = algebra.bracket(x, y)
        scale = Fraction(2) / evaluate(w, h)
        h_list.append(scale * h)
        x_list.append(x)
        y_list.append(scale * y)
    label, order = identify_cartan_matrix(CanonicalGenerators(h_list, x_list, y_list, "").cartan_matrix)
    gens = CanonicalGenerators([h_list[k] for k in order], [x_list[k] for k in order],
                               [y_list[k] for k in order], label)
    gens.cartan = cartan
    if not gens.check():
        raise RuntimeError("Canonical generators violate the defining relations")
    return gens


def subalgebra_type(s: Subalgebra, seed: int = DEFAULT_SEED) -> str:
    """Cartan type label of a split semisimple subalgebra ('0' for the zero subalgebra)."""
    return canonical_generators(s, seed=seed).label


class Automorphism:
    """
    Invertible linear map of a Lie algebra, given by its matrix in the algebra's basis.

    ``certified`` records that bracket preservation has been verified (or holds by construction).
    """

    def __init__(self, algebra: LieAlgebra, matrix: ExactMatrix, certified: bool = False):
        if matrix.shape != (algebra.dim, algebra.dim):
            raise ValueError(f"Matrix of shape {matrix.shape} does not act on {algebra.name}")
        self.algebra = algebra
        self.matrix = matrix
        self.certified = certified

    def __repr__(self) -> str:
        return f"Automorphism({self.algebra.name}, certified={self.certified})"

    @property
    def field(self) -> ScalarField:
        return self.matrix.field

    def __call__(self, x: Element) -> Element:
        field = common_field(self.field, x.field)
        return Element(self.algebra, self.matrix.convert_to(field).apply([field.embed(c, x.field) for c in x.coords]),
                       field)

    def __matmul__(self, other: Automorphism) -> Automorphism:
        """Composition: (self @ other)(x) = self(other(x))."""
        return Automorphism(self.algebra, self.matrix @ other.matrix, self.certified and other.certified)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Automorphism):
            return NotImplemented
        return other.algebra is self.algebra and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def key(self) -> tuple:
        return self.matrix.key()

    def inverse(self) -> Automorphism:
        return Automorphism(self.algebra, self.matrix.inverse(), self.certified)

    def is_identity(self) -> bool:
        return self.matrix == ExactMatrix.eye(self.algebra.dim, self.field)

    def power(self, k: int) -> Automorphism:
        if k < 0:
            return self.inverse().power(-k)
        return Automorphism(self.algebra, self.matrix.power(k), self.certified)

    def order(self, bound: int = DEFAULT_ORDER_BOUND) -> Optional[int]:
        """Order of the automorphism, or None if it exceeds the bound."""
        current = self
        for k in range(1, bound + 1):
            if current.is_identity():
                return k
            current = current @ self
        return None

    def certify(self) -> Automorphism:
        """
        Verify sigma([x, y]) = [sigma(x), sigma(y)] for x in a generating set and all basis elements y.

        :raises ValueError: If the map is not an automorphism.
        """
        if is_zero(self.matrix.det()):
            raise ValueError("Map is not invertible")
        algebra = self.algebra
        field = self.field
        columns = self.matrix.columns()
        table = algebra.table(field)
        for i in algebra.generator_indices:
            for j in range(algebra.dim):
                entry = algebra._table.get((i, j))
                lhs = [field.zero] * algebra.dim
                for k, c in (entry or ()):
                    lhs = [a + field(c) * b for a, b in zip(lhs, columns[k])]
                rhs = algebra.bracket_vectors(columns[i], columns[j], field.zero, table)
                if lhs != rhs:
                    raise ValueError(f"Map does not preserve the bracket on ({algebra.labels[i]}, "
                                     f"{algebra.labels[j]})")
        self.certified = True
        return self

    def fixes(self, *elements: Element) -> bool:
        return all(self(x) == x for x in elements)

    def maps_into(self, s: Subalgebra, t: Optional[Subalgebra] = None) -> bool:
        """Whether the image of s lies in t (default: s itself)."""
        t = t or s
        return all(t.contains(self(x)) for x in s.elements())

    def to_dict(self) -> dict[str, Any]:
        field = self.field
        return {"algebra": self.algebra.name, "field": field.conductor, "certified": self.certified,
                "matrix": [[field.to_string(v) for v in row] for row in self.matrix.to_list()]}

    @classmethod
    def from_dict(cls, algebra: LieAlgebra, data: dict[str, Any]) -> Automorphism:
        field = ScalarField(data.get("field", 1))
        rows = [[field.from_string(v) for v in row] for row in data["matrix"]]
        return cls(algebra, ExactMatrix.from_rows(rows, field), certified=data.get("certified", False))


def generalized_fixed_space(sigma: Automorphism) -> Subalgebra:
    """Generalized 1-eigenspace of an automorphism (the fixed points of its semisimple part)."""
    algebra = sigma.algebra
    shifted = sigma.matrix - ExactMatrix.eye(algebra.dim, sigma.field)
    power = shifted
    vectors = kernel(power)
    while True:
        power = power @ power
        larger = kernel(power)
        if len(larger) == len(vectors):
            return Subalgebra(algebra, vectors, sigma.field)
        vectors = larger


def _fitting_null_component(s: Subalgebra, x: Element) -> Subalgebra:
    """Generalized 0-eigenspace of ad x on s."""
    power = s.ad_matrix(x)
    vectors = kernel(power)
    while True:
        power = power @ power
        larger = kernel(power)
        if len(larger) == len(vectors):
            return Subalgebra(s.algebra, [s.from_coords(v) for v in vectors], s.field)
        vectors = larger


def _is_nilpotent_subalgebra(k: Subalgebra) -> bool:
    """Whether the lower central series of k reaches zero."""
    algebra = k.algebra
    elements = k.elements()
    current = elements
    while current:
        brackets = [algebra.bracket(a, b) for a in elements for b in current]
        basis = span_basis([v.coords for v in brackets if not v.is_zero()], k.field)
        if len(basis) == len(current):
            return False
        current = [Element(algebra, v, k.field) for v in basis]
    return True


def cartan_subalgebra(s: Subalgebra, seed: int = DEFAULT_SEED) -> Subalgebra:
    """
    Cartan subalgebra of a subalgebra, as the Fitting null component of a regular element.

    A random element is replaced by x + c (y - x), for y in its null component with ad y not nilpotent there,
    until the null component is nilpotent.
    """
    if s.dim == 0:
        return s
    algebra = s.algebra
    rng = np.random.default_rng(seed)
    x = s.random_element(rng, -9, 10)
    null = _fitting_null_component(s, x)
    while not _is_nilpotent_subalgebra(null):
        y = next(y for y in null.elements() if not null.ad_matrix(y).power(null.dim).is_zero())
        for c in itertools.count(1):
            candidate = x + c * (y - x)
            smaller = _fitting_null_component(s, candidate)
            if smaller.dim < null.dim:
                x, null = candidate, smaller
                break
    return null


def subalgebra_rank(s: Subalgebra, seed: int = DEFAULT_SEED) -> int:
    """Dimension of a Cartan subalgebra."""
    return cartan_subalgebra(s, seed).dim


def normalizer(algebra: LieAlgebra, s: Subalgebra) -> Subalgebra:
    """{x | [x, s] lies in s}."""
    field = s.field
    if s.dim == 0:
        return Subalgebra(algebra, [algebra.basis_element(k, field) for k in range(algebra.dim)], field)
    annihilator = kernel(ExactMatrix.from_rows(s.basis, field))
    if not annihilator:
        return Subalgebra(algebra, [algebra.basis_element(k, field) for k in range(algebra.dim)], field)
    q = ExactMatrix.from_rows(annihilator, field)
    stacked = [q @ algebra.ad(k).convert_to(field) for k in s.elements()]
    return Subalgebra(algebra, kernel(stacked[0].vstack(*stacked[1:])), field)


def is_inner(sigma: Automorphism, order_bound: Optional[int] = DEFAULT_ORDER_BOUND, seed: int = DEFAULT_SEED) -> bool:
    """
    Whether an automorphism lies in the inner automorphism group.

    The (generalized) fixed subalgebra contains a Cartan subalgebra of the whole algebra exactly for inner
    automorphisms. A Cartan subalgebra of the fixed subalgebra is computed exactly and accepted when it has the
    rank of the algebra and is its own normalizer.

    :param sigma: The automorphism.
    :param order_bound: Check first that sigma has finite order at most this bound. No check if None.
    :param seed: Seed for the generic element of the fixed subalgebra.

    :raises ValueError: If sigma does not have finite order within the bound.
    """
    algebra = sigma.algebra
    if order_bound is not None and sigma.order(order_bound) is None:
        raise ValueError(f"Automorphism order exceeds the bound {order_bound}")
    if algebra.root_system is not None:
        if len(algebra.diagram_symmetries()) == 1:
            return True
        full_rank = algebra.rank
    else:
        whole = Subalgebra(algebra, [algebra.basis_element(k) for k in range(algebra.dim)])
        full_rank = subalgebra_rank(whole, seed=seed)
    cartan = cartan_subalgebra(generalized_fixed_space(sigma), seed=seed)
    if cartan.dim != full_rank:
        return False
    return normalizer(algebra, cartan).dim == cartan.dim

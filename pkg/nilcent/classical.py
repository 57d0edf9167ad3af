"""
Component groups for orthogonal and symplectic Lie algebras through their natural module.

The centralizer of a triple in the full isometry group is a product of orthogonal and symplectic groups of the
spaces M_s of lowest-weight vectors of the s-dimensional summands, with the forms psi_s(v, w) = phi(v, e^(s-1) w).
Its components are generated by lifts of determinant -1 reflections of the orthogonal factors.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Any, Optional, Sequence

from sympy.polys.factortools import dup_factor_list

import nilcent
from nilcent.components import ComponentGroup
from nilcent.liealg import Automorphism, Element, LieAlgebra
from nilcent.scalars import QQ_FIELD, ExactMatrix, coordinates, is_zero, kernel, to_fraction
from nilcent.sl2 import Sl2Triple

KINDS = ["symmetric", "alternating"]
MEMBERSHIP_METHODS = ["natural", "cells"]


class FormedSpace:
    """
    Vector space Q^n with a nondegenerate symmetric or alternating bilinear form phi(v, w) = v^T A w.

    :param gram: The Gram matrix A.
    :param kind: 'symmetric' or 'alternating'.
    """

    def __init__(self, gram: ExactMatrix, kind: str):
        if kind not in KINDS:
            raise ValueError(f"Invalid form kind: {kind}. Expected one of {KINDS}")
        if gram.rows != gram.cols:
            raise ValueError(f"Gram matrix must be square, got shape {gram.shape}")
        sign = 1 if kind == "symmetric" else -1
        if gram.transpose() != gram.scale(QQ_FIELD(sign)):
            raise ValueError(f"Gram matrix is not {kind}")
        if is_zero(gram.det()):
            raise ValueError("The form is degenerate")
        self.gram = gram
        self.kind = kind
        self.dim = gram.rows

    def __repr__(self) -> str:
        return f"FormedSpace(dim={self.dim}, {self.kind})"

    @classmethod
    def antidiagonal(cls, n: int, kind: str) -> FormedSpace:
        """
        Split form with A[i, n-1-i] = 1 (symmetric), or 1 for i < n/2 and -1 otherwise (alternating).

        :raises ValueError: If an alternating form is asked for in odd dimension.
        """
        if kind == "alternating" and n % 2:
            raise ValueError(f"No nondegenerate alternating form in odd dimension {n}")
        entries = {}
        for i in range(n):
            entries[(i, n - 1 - i)] = 1 if kind == "symmetric" or i < n // 2 else -1
        return cls(ExactMatrix.from_sparse(entries, (n, n)), kind)

    def form(self, v: Sequence, w: Sequence):
        return sum((a * b for a, b in zip(v, self.gram.apply(w))), QQ_FIELD.zero)

    def contains(self, x: ExactMatrix) -> bool:
        """Whether phi(xv, w) + phi(v, xw) = 0, i.e. x^T A + A x = 0."""
        return (x.transpose() @ self.gram + self.gram @ x).is_zero()

    def preserves(self, g: ExactMatrix) -> bool:
        """Whether phi(gv, gw) = phi(v, w)."""
        return g.transpose() @ self.gram @ g == self.gram

    def lie_algebra_basis(self) -> list[ExactMatrix]:
        """
        Basis of g(V, phi): x = A^-1 S with S antisymmetric (symmetric phi) or symmetric (alternating phi).
        """
        n = self.dim
        inverse = self.gram.inverse()
        basis = []
        for i in range(n):
            for j in range(i, n):
                if self.kind == "symmetric" and i == j:
                    continue
                sign = -1 if self.kind == "symmetric" else 1
                entries = {(i, j): 1} if i == j else {(i, j): 1, (j, i): sign}
                basis.append(inverse @ ExactMatrix.from_sparse(entries, (n, n)))
        return basis


@lru_cache(maxsize=None)
def _classical_algebra(kind: str, n: int) -> LieAlgebra:
    space = FormedSpace.antidiagonal(n, kind)
    name = f"so({n})" if kind == "symmetric" else f"sp({n})"
    algebra = LieAlgebra.from_matrices(space.lie_algebra_basis(), name)
    algebra._meta["space"] = space
    return algebra


def orthogonal_algebra(n: int) -> LieAlgebra:
    """so(n) on Q^n with the anti-diagonal symmetric form."""
    if n < 1:
        raise ValueError(f"Invalid dimension: {n}")
    return _classical_algebra("symmetric", n)


def symplectic_algebra(n: int) -> LieAlgebra:
    """sp(n) on Q^n (n even) with the anti-diagonal alternating form."""
    if n < 2 or n % 2:
        raise ValueError(f"Symplectic algebras need an even dimension, got {n}")
    return _classical_algebra("alternating", n)


def classical_algebra(kind: str, n: int) -> LieAlgebra:
    if kind not in KINDS:
        raise ValueError(f"Invalid form kind: {kind}. Expected one of {KINDS}")
    return orthogonal_algebra(n) if kind == "symmetric" else symplectic_algebra(n)


def kind_of_label(label: str) -> tuple[str, int]:
    """
    Form kind and natural module dimension of a classical type label.

    :raises NotImplementedError: For type A, whose stabilizers are connected.
    :raises ValueError: For exceptional or non-simple labels.
    """
    components = nilcent.rootsys.parse_label(label)
    if len(components) != 1:
        raise ValueError(f"Expected a simple type, got {label}")
    letter, rank = components[0]
    if letter == "A":
        raise NotImplementedError("Type A stabilizers are connected; no classical route needed")
    if letter == "B":
        return "symmetric", 2 * rank + 1
    if letter == "C":
        return "alternating", 2 * rank
    if letter == "D":
        return "symmetric", 2 * rank
    raise ValueError(f"The classical route applies to types B, C and D, not {label}")


def element_matrix(x: Element) -> ExactMatrix:
    """Matrix on the natural module of an element of a classical algebra."""
    basis = x.algebra._meta.get("matrices")
    if basis is None:
        raise ValueError(f"{x.algebra.name} was not built from matrices")
    n = basis[0].rows
    total = ExactMatrix.zeros(n, n)
    for c, b in zip(x.coords, basis):
        if not is_zero(c):
            total = total + b.scale(c)
    return total


def matrix_element(algebra: LieAlgebra, x: ExactMatrix) -> Element:
    """
    Element of a classical algebra given by its matrix.

    :raises ValueError: If x is not in the algebra.
    """
    coords = algebra._meta["coordinate_map"].coords([v for row in x.to_list() for v in row])
    if coords is None:
        raise ValueError("Matrix does not lie in the Lie algebra")
    return algebra.element(coords)


def matrix_triple(triple: Sl2Triple) -> tuple[ExactMatrix, ExactMatrix, ExactMatrix]:
    """
    Action of a triple on the natural module, as matrices (h, e, f).

    :raises RuntimeError: If a matrix is not in g(V, phi).
    """
    space = triple.algebra._meta["space"]
    matrices = tuple(element_matrix(x) for x in triple)
    if not all(space.contains(m) for m in matrices):
        raise RuntimeError("Triple matrices do not preserve the form")
    return matrices


def triple_from_matrices(algebra: LieAlgebra, h: ExactMatrix, e: ExactMatrix, f: ExactMatrix,
                         label: Optional[str] = None) -> Sl2Triple:
    return Sl2Triple(*(matrix_element(algebra, m) for m in (h, e, f)), label=label).check()


# Partitions and standard triples


def _integer_partitions(n: int, largest: Optional[int] = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _integer_partitions(n - k, k):
            yield (k,) + rest


def is_valid_partition(kind: str, partition: Sequence[int]) -> bool:
    """Even parts have even multiplicity (orthogonal), odd parts have even multiplicity (symplectic)."""
    bad_parity = 0 if kind == "symmetric" else 1
    counts = {d: list(partition).count(d) for d in set(partition)}
    return all(m % 2 == 0 for d, m in counts.items() if d % 2 == bad_parity)


def partitions(kind: str, n: int) -> list[tuple[int, ...]]:
    """Jordan types of nilpotent elements of so(n) ('symmetric') or sp(n) ('alternating')."""
    if kind not in KINDS:
        raise ValueError(f"Invalid form kind: {kind}. Expected one of {KINDS}")
    return [p for p in _integer_partitions(n) if is_valid_partition(kind, p)]


def partition_triple(kind: str, partition: Sequence[int]) -> Sl2Triple:
    """
    Triple of the given Jordan type in the classical algebra with anti-diagonal form.

    Irreducible summands V_d with basis u_k = e^k u_0 carry the invariant form <u_k, u_(d-1-k)> = (-1)^k c. Summands
    are paired so that the form becomes anti-diagonal: a summand whose form has the wrong symmetry is paired with a
    copy of itself, and the middle vectors of odd summands of different sizes are combined into isotropic pairs.

    :raises ValueError: If the partition is not of the given kind.
    """
    partition = tuple(sorted((int(d) for d in partition), reverse=True))
    if not is_valid_partition(kind, partition):
        raise ValueError(f"Partition {partition} is not a {kind} partition")
    n = sum(partition)
    symmetric = kind == "symmetric"
    self_dual_parity = 1 if symmetric else 0

    # Summands: (size, constant) singles and pairs of equal size.
    offsets, sizes = [], []
    for d in partition:
        offsets.append(sum(sizes))
        sizes.append(d)
    singles, pairs = [], []
    remaining = list(range(len(partition)))
    while remaining:
        b = remaining.pop(0)
        d = sizes[b]
        if d % 2 == self_dual_parity:
            singles.append(b)
        else:
            partner = next(c for c in remaining if sizes[c] == d)
            remaining.remove(partner)
            pairs.append((b, partner))
    # Repeated odd sizes in the symmetric case are paired too, leaving singles of distinct sizes.
    if symmetric:
        by_size: dict[int, list[int]] = {}
        for b in singles:
            by_size.setdefault(sizes[b], []).append(b)
        singles = []
        for d, blocks in by_size.items():
            while len(blocks) >= 2:
                pairs.append((blocks.pop(0), blocks.pop(0)))
            singles.extend(blocks)
        singles.sort(key=lambda b: -sizes[b])

    gram_entries: dict[tuple[int, int], Fraction] = {}
    constants = {b: Fraction(1) for b in singles}
    if symmetric:
        # middle norms: +1 for the first single of each combined pair and for a central single, -1 otherwise
        for k, b in enumerate(singles):
            middle = (sizes[b] - 1) // 2
            sign = -1 if k % 2 == 1 else 1
            constants[b] = Fraction(sign * (-1) ** middle)
    sign = 1 if symmetric else -1
    for b in singles:
        d, o = sizes[b], offsets[b]
        for k in range(d):
            gram_entries[(o + k, o + d - 1 - k)] = (-1) ** k * constants[b]
    for b, c in pairs:
        d, ob, oc = sizes[b], offsets[b], offsets[c]
        for k in range(d):
            gram_entries[(ob + k, oc + d - 1 - k)] = Fraction((-1) ** k)
            gram_entries[(oc + d - 1 - k, ob + k)] = Fraction(sign * (-1) ** k)

    def unit(i):
        return [Fraction(int(j == i)) for j in range(n)]

    def form(v, w):
        return sum((v[i] * w[j] * g for (i, j), g in gram_entries.items() if v[i] and w[j]), Fraction(0))

    # Hyperbolic pairs (left, right) with form(left, right) = 1, plus a possible central vector.
    hyperbolic, center = [], None
    for b, c in pairs:
        d, ob, oc = sizes[b], offsets[b], offsets[c]
        for k in range(d):
            left, right = unit(ob + k), unit(oc + d - 1 - k)
            value = form(left, right)
            hyperbolic.append((left, [x / value for x in right]))
    for index, b in enumerate(singles):
        d, o = sizes[b], offsets[b]
        for k in range(d // 2):
            left, right = unit(o + k), unit(o + d - 1 - k)
            value = form(left, right)
            hyperbolic.append((left, [x / value for x in right]))
    middles = [unit(offsets[b] + (sizes[b] - 1) // 2) for b in singles if sizes[b] % 2 == 1]
    if len(middles) % 2 == 1:
        center = middles.pop()
    for m_a, m_b in zip(middles[0::2], middles[1::2]):
        left = [a + b for a, b in zip(m_a, m_b)]
        right = [(a - b) / 2 for a, b in zip(m_a, m_b)]
        hyperbolic.append((left, right))

    columns: list[Optional[list]] = [None] * n
    for k, (left, right) in enumerate(hyperbolic):
        columns[k], columns[n - 1 - k] = left, right
    if center is not None:
        columns[n // 2] = center
    change = ExactMatrix.from_columns(columns, nrows=n)
    inverse = change.inverse()

    h_entries, e_entries, f_entries = {}, {}, {}
    for b, d in enumerate(sizes):
        o = offsets[b]
        for k in range(d):
            h_entries[(o + k, o + k)] = 2 * k - d + 1
            if k + 1 < d:
                e_entries[(o + k + 1, o + k)] = 1
            if k > 0:
                f_entries[(o + k - 1, o + k)] = k * (d - k)
    matrices = [inverse @ ExactMatrix.from_sparse(entries, (n, n)) @ change
                for entries in (h_entries, e_entries, f_entries)]
    algebra = classical_algebra(kind, n)
    return triple_from_matrices(algebra, *matrices, label=str(list(partition)))


# Natural module decomposition


class IsotypicData:
    """
    Lowest-weight vectors of the s-dimensional summands and the form psi_s on their span M_s.

    ``vectors`` are the basis v_1, ... of M_s; ``psi`` is the Gram matrix of psi_s in that basis.
    """

    def __init__(self, s: int, vectors: list[list], psi: ExactMatrix):
        self.s = s
        self.vectors = vectors
        self.psi = psi

    def __repr__(self) -> str:
        return f"IsotypicData(s={self.s}, dim={len(self.vectors)})"

    @property
    def dim(self) -> int:
        return len(self.vectors)

    @property
    def kind(self) -> str:
        return "symmetric" if self.psi.transpose() == self.psi else "alternating"

    @property
    def space(self) -> FormedSpace:
        """M_s with the form psi_s."""
        return FormedSpace(self.psi, self.kind)


def decompose_natural(h: ExactMatrix, e: ExactMatrix, f: ExactMatrix) -> list[tuple[list[list], list, int]]:
    """
    Decompose the natural module into irreducible summands for the triple.

    Lowest-weight vectors of the d-dimensional summands span the kernel of f in the (1 - d)-eigenspace of h.

    :returns: List of (basis e^k v for k < d, lowest-weight vector v, dimension d), by decreasing d.
    """
    n = h.rows
    field = h.field
    summands = []
    for d in sorted({1 - int(w) for w in _eigenvalues(h)}, reverse=True):
        if d < 1:
            continue
        shifted = h - ExactMatrix.eye(n, field).scale(1 - d)
        for v in kernel(f.vstack(shifted)):
            basis = [v]
            for _ in range(d - 1):
                basis.append(e.apply(basis[-1]))
            if any(not is_zero(c) for c in e.apply(basis[-1])):
                raise RuntimeError(f"e^{d} does not kill the lowest-weight vector of a {d}-dimensional summand")
            summands.append((basis, v, d))
    if sum(d for _, _, d in summands) != n:
        raise RuntimeError("Summands do not add up to the natural module")
    return summands


def _eigenvalues(h: ExactMatrix) -> list[Fraction]:
    values = []
    for factor, _ in dup_factor_list(h.charpoly(), h.field.domain)[1]:
        if len(factor) != 2:
            raise ValueError("h has non-rational eigenvalues")
        values.append(to_fraction(-factor[1] / factor[0]))
    return values


def jordan_type(e: ExactMatrix) -> tuple[int, ...]:
    """Jordan block sizes of a nilpotent matrix from the ranks of its powers."""
    n = e.rows
    ranks = [n]
    power = ExactMatrix.eye(n)
    while ranks[-1] > 0:
        power = power @ e
        ranks.append(power.rank())
        if ranks[-1] == ranks[-2]:
            raise ValueError("Matrix is not nilpotent")
    # number of blocks of size >= k is rank(e^(k-1)) - rank(e^k)
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    blocks = []
    for k, count in enumerate(at_least, start=1):
        following = at_least[k] if k < len(at_least) else 0
        blocks.extend([k] * (count - following))
    return tuple(sorted(blocks, reverse=True))


def isotypic_data(space: FormedSpace, e: ExactMatrix,
                  summands: Sequence[tuple[list[list], list, int]]) -> dict[int, IsotypicData]:
    """The spaces M_s with the forms psi_s(v, w) = phi(v, e^(s-1) w)."""
    data = {}
    for s in sorted({d for _, _, d in summands}):
        vectors = [v for _, v, d in summands if d == s]
        power = e.power(s - 1)
        psi = ExactMatrix.from_rows([[space.form(v, power.apply(w)) for w in vectors] for v in vectors])
        data[s] = IsotypicData(s, vectors, psi)
    return data


def reflection_neg_det(space: FormedSpace) -> ExactMatrix:
    """
    Isometry of determinant -1 of a space with a symmetric form: the reflection in a non-isotropic vector w.

    w is a basis vector of nonzero norm if there is one, else the sum of two basis vectors that pair nontrivially.

    :raises ValueError: If the form is alternating.
    """
    if space.kind != "symmetric":
        raise ValueError(f"Expected a symmetric form, got an {space.kind} one")
    psi = space.gram
    n = space.dim
    field = psi.field
    w = None
    for i in range(n):
        if not is_zero(psi[i, i]):
            w = [field.one if k == i else field.zero for k in range(n)]
            break
    if w is None:
        i, j = next((i, j) for i, j in itertools.combinations(range(n), 2) if not is_zero(psi[i, j]))
        w = [field.one if k in (i, j) else field.zero for k in range(n)]
    complement = kernel(ExactMatrix.from_rows([psi.apply(w)], field)) if n > 1 else []
    basis = ExactMatrix.from_columns(complement + [w], field, nrows=n)
    diagonal = ExactMatrix.from_sparse({(k, k): 1 if k < n - 1 else -1 for k in range(n)}, (n, n), field)
    return basis @ diagonal @ basis.inverse()


def lift(e: ExactMatrix, summands: Sequence[tuple[list[list], list, int]], s: int, g_hat: ExactMatrix) -> ExactMatrix:
    """
    Element of the triple's centralizer acting as g_hat on M_s: e^k v -> e^k (g_hat v), identity on other summands.
    """
    columns, images = [], []
    lowest = [v for _, v, d in summands if d == s]
    for basis, v, d in summands:
        if d != s:
            columns.extend(basis)
            images.extend(basis)
            continue
        i = next(k for k, u in enumerate(lowest) if u is v)
        image = [sum((g_hat[j, i] * u[c] for j, u in enumerate(lowest)), e.field.zero) for c in range(len(v))]
        for _ in range(d):
            columns.append(v)
            images.append(image)
            v, image = e.apply(v), e.apply(image)
    n = len(columns)
    return ExactMatrix.from_columns(images, nrows=n) @ ExactMatrix.from_columns(columns, nrows=n).inverse()


def conjugation_automorphism(algebra: LieAlgebra, g: ExactMatrix, certify: bool = True) -> Automorphism:
    """sigma_g(x) = g x g^-1 on a classical algebra."""
    inverse = g.inverse()
    columns = [list(matrix_element(algebra, g @ b @ inverse).coords) for b in algebra._meta["matrices"]]
    sigma = Automorphism(algebra, ExactMatrix.from_columns(columns, nrows=algebra.dim))
    return sigma.certify() if certify else sigma


def _restriction(g: ExactMatrix, vectors: list[list]) -> ExactMatrix:
    """Matrix of g on the span of some vectors it preserves."""
    columns = []
    for v in vectors:
        c = coordinates(vectors, g.apply(v), g.field)
        if c is None:
            raise RuntimeError("Centralizer element does not preserve a space of lowest-weight vectors")
        columns.append(c)
    return ExactMatrix.from_columns(columns, g.field, nrows=len(vectors))


class ClassicalResult:
    """Component groups of the centralizer of a triple in the isometry group and in the adjoint group."""

    def __init__(self, triple: Sl2Triple, summands, isotypic: dict[int, IsotypicData], full: ComponentGroup,
                 adjoint: ComponentGroup, automorphisms: list[Automorphism]):
        self.triple = triple
        self.summands = summands
        self.isotypic = isotypic
        self.full = full
        self.adjoint = adjoint
        self.automorphisms = automorphisms

    def __repr__(self) -> str:
        return f"ClassicalResult(full={self.full.label}, adjoint={self.adjoint.label})"

    @property
    def partition(self) -> tuple[int, ...]:
        return tuple(sorted((d for _, _, d in self.summands), reverse=True))

    def to_dict(self) -> dict[str, Any]:
        def dump(m: ExactMatrix):
            return [[QQ_FIELD.to_string(v) for v in row] for row in m.to_list()]

        return {"route": "classical", "partition": list(self.partition),
                "isotypic": {str(s): {"dim": d.dim, "kind": d.kind} for s, d in self.isotypic.items()},
                "full_group": {"label": self.full.label, "order": self.full.order,
                               "generators": [dump(g) for g in self.full.generators]},
                "component_group": {"label": self.adjoint.label, "order": self.adjoint.order,
                                    "element_orders": self.adjoint.orders,
                                    "representatives": [dump(g) for g in self.adjoint.elements]}}


def component_group_classical(triple: Sl2Triple, membership: str = "natural", verbose: bool = False,
                              **kwargs: Any) -> ClassicalResult:
    """
    Component groups of Z(h, e, f) in the isometry group of the natural module and in the adjoint group.

    :param triple: Triple in an algebra from :func:`orthogonal_algebra` or :func:`symplectic_algebra`.
    :param membership: How to identify elements modulo the identity component of the adjoint stabilizer.
        'natural' compares the components of the factors O(M_s) up to the central element -1; 'cells' solves
        the cell parametrization of the identity component.
    :param verbose: Print the isotypic dimensions and group orders.
    :param kwargs: Passed on to :func:`nilcent.conjugacy.identity_component_checker`.

    :returns: The decomposition data and both component groups, elements given as matrices on the natural module.
    """
    if membership not in MEMBERSHIP_METHODS:
        raise ValueError(f"Invalid membership method: {membership}. Expected one of {MEMBERSHIP_METHODS}")
    algebra = triple.algebra
    space = algebra._meta["space"]
    h, e, f = matrix_triple(triple)
    n = space.dim
    summands = decompose_natural(h, e, f)
    isotypic = isotypic_data(space, e, summands)
    # psi_s is symmetric for odd s when phi is symmetric and for even s when phi is alternating
    relevant = [s for s, data in isotypic.items() if data.kind == "symmetric"]
    if verbose:
        print(f"Partition {list(jordan_type(e))}: orthogonal factors for s in {relevant}")

    generators = []
    for s in relevant:
        g = lift(e, summands, s, reflection_neg_det(isotypic[s].space))
        if not space.preserves(g) or not all(g @ x == x @ g for x in (h, e, f)):
            raise RuntimeError(f"Lift for s = {s} does not centralize the triple in the isometry group")
        if g.power(2) != ExactMatrix.eye(n):
            raise RuntimeError(f"Lift for s = {s} does not have order 2")
        generators.append(g)

    identity = ExactMatrix.eye(n)
    full = ComponentGroup.from_generators(generators, lambda a, b: a @ b, lambda a, b: a == b, identity,
                                          key=lambda m: m.key())

    # Only determinant 1 isometries come from the adjoint group, on which -1 acts trivially.
    special = [g for g in full.elements if QQ_FIELD.is_one(g.det())]
    automorphisms = {}
    for g in special:
        sigma = conjugation_automorphism(algebra, g)
        if not sigma.fixes(*triple):
            raise RuntimeError("Conjugation by a centralizer element moves the triple")
        automorphisms[g.key()] = sigma

    if membership == "natural":
        central = tuple(isotypic[s].dim % 2 == 1 for s in relevant) if n % 2 == 0 else None
        signatures = {}

        def signature(g: ExactMatrix) -> tuple[bool, ...]:
            # component of g in each orthogonal factor O(M_s)
            if g.key() not in signatures:
                dets = [_restriction(g, isotypic[s].vectors).det() for s in relevant]
                signatures[g.key()] = tuple(QQ_FIELD.is_one(-d) for d in dets)
            return signatures[g.key()]

        def equal(a: ExactMatrix, b: ExactMatrix) -> bool:
            diff = tuple(x != y for x, y in zip(signature(a), signature(b)))
            return not any(diff) or diff == central
    else:
        in_identity = nilcent.conjugacy.identity_component_checker(triple, **kwargs)

        def equal(a: ExactMatrix, b: ExactMatrix) -> bool:
            return in_identity(conjugation_automorphism(algebra, a.inverse() @ b, certify=False))

    representatives: list[ExactMatrix] = []
    for g in special:
        if not any(equal(g, r) for r in representatives):
            representatives.append(g)
    adjoint = ComponentGroup(representatives, representatives[1:], lambda a, b: a @ b, equal)
    if verbose:
        print(f"Isometry stabilizer: {full.label}; adjoint stabilizer: {adjoint.label}")
    return ClassicalResult(triple, summands, isotypic, full, adjoint,
                           [automorphisms[g.key()] for g in representatives])

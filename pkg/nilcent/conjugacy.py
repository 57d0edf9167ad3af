"""
Conjugacy and stabilizers in the adjoint group.

An element of the centralizer of a Cartan element is written as u * t * w * u' along the Bruhat decomposition of that
connected reductive group, with one cell per element w of its Weyl group. A condition such as g(e) = e' then becomes a
polynomial system in the cell parameters, solved exactly with :mod:`nilcent.groebner`.
"""
from __future__ import annotations

import math
import os
import warnings
from fractions import Fraction
from typing import Any, Callable, Optional, Sequence

import sympy
from sympy import QQ
from sympy.matrices.normalforms import hermite_normal_form
from tqdm import tqdm

from nilcent.components import ComponentGroup, generating_set
from nilcent.groebner import (DEFAULT_BUDGET, Inconclusive, Poly, PolySystem, SolutionSet, dump, inverse_name,
                              lex_order, solve_any, solve_many)
from nilcent.liealg import (DEFAULT_SEED, Automorphism, Element, LieAlgebra, Subalgebra, canonical_generators,
                            is_inner, joint_eigenspaces, reductive_decompose)
from nilcent.rootsys import CentralizerRootData, Root
from nilcent.scalars import QQ_FIELD, ExactMatrix, ScalarField, common_field, is_zero, solve_linear
from nilcent.sl2 import Sl2Triple, weighted_dynkin_diagram


class _SparseAction:
    """Columns of a rational matrix as (row, value) lists, applied to vectors of polynomials."""

    def __init__(self, matrix: ExactMatrix):
        self.nrows = matrix.rows
        self.domain = matrix.field.domain
        self.columns = [[(i, v) for i, v in enumerate(column) if not is_zero(v)] for column in matrix.columns()]
        self._converted: dict[Any, list] = {}

    def _columns_for(self, domain) -> list:
        if domain == self.domain:
            return self.columns
        if domain not in self._converted:
            self._converted[domain] = [[(i, domain.convert_from(v, self.domain)) for i, v in column]
                                       for column in self.columns]
        return self._converted[domain]

    def apply(self, vec: Sequence[Poly], ring) -> list[Poly]:
        out = [ring.zero] * self.nrows
        for p, column in zip(vec, self._columns_for(ring.domain)):
            if not p:
                continue
            for i, c in column:
                out[i] += p * c
        return out


def _constant_vector(x: Element, system: PolySystem) -> list[Poly]:
    ring = system.ring
    return [ring.ground_new(system.field.embed(c, x.field)) for c in x.coords]


def _monomial(exponents: Sequence[int], system: PolySystem, inverse: bool = False) -> Poly:
    """prod t_j^n_j, negative powers through the auxiliary inverses."""
    gens = system.gens
    p = system.ring.one
    for j, n in enumerate(exponents):
        n = -n if inverse else n
        if n > 0:
            p *= gens[f"t{j + 1}"] ** n
        elif n < 0:
            p *= gens[inverse_name(f"t{j + 1}")] ** (-n)
    return p


def _lattice_exponents(weights: Sequence[tuple[Fraction, ...]]) -> list[tuple[int, ...]]:
    """Coordinates of weights over a Z-basis (Hermite normal form) of the lattice they generate."""
    nonzero = sorted({w for w in weights if any(w)})
    if not nonzero:
        return [() for _ in weights]
    r = len(nonzero[0])
    denominator = math.lcm(*[Fraction(c).denominator for w in nonzero for c in w])
    matrix = sympy.Matrix(r, len(nonzero), lambda i, j: int(nonzero[j][i] * denominator))
    basis = hermite_normal_form(matrix)
    b = ExactMatrix.from_rows([[int(basis[i, j]) for j in range(basis.cols)] for i in range(r)], QQ_FIELD)
    exponents = []
    for w in weights:
        coeffs = solve_linear(b, [QQ_FIELD(Fraction(c) * denominator) for c in w])
        rational = [QQ_FIELD.to_rational(c) for c in coeffs] if coeffs is not None else None
        if rational is None or any(c.denominator != 1 for c in rational):
            raise RuntimeError(f"Weight {w} is not an integral combination of the lattice basis")
        exponents.append(tuple(int(c) for c in rational))
    return exponents


class TorusParametrization:
    """
    Maximal torus of a connected subgroup of the adjoint group, acting diagonally on an eigenbasis of the algebra.

    The torus element with parameters (t_1, ..., t_r) scales the k-th eigenvector by prod t_j^n_kj, where n_k holds
    the coordinates of its weight over a Z-basis of the weight lattice. Distinct parameters give distinct elements.

    :param algebra: The ambient algebra.
    :param exponents: Exponent vector of each eigenvector.
    :param eigenbasis: Columns are the eigenvectors. None for the basis of the algebra itself.
    """

    def __init__(self, algebra: LieAlgebra, exponents: Sequence[tuple[int, ...]],
                 eigenbasis: Optional[ExactMatrix] = None):
        self.algebra = algebra
        self.exponents = [tuple(n) for n in exponents]
        self.rank = max((len(n) for n in self.exponents), default=0)
        self.exponents = [n if n else (0,) * self.rank for n in self.exponents]
        self.eigenbasis = eigenbasis
        if eigenbasis is not None:
            self._inverse = eigenbasis.inverse()
            self._to_eigen = _SparseAction(self._inverse)
            self._from_eigen = _SparseAction(eigenbasis)

    def __repr__(self) -> str:
        return f"TorusParametrization(rank {self.rank} in {self.algebra.name})"

    @classmethod
    def adjoint(cls, algebra: LieAlgebra) -> TorusParametrization:
        """Maximal torus of the standard Cartan subalgebra; the parameters are the values of the simple roots."""
        zero = (0,) * algebra.rank
        return cls(algebra, [algebra.basis_root(k) or zero for k in range(algebra.dim)])

    @classmethod
    def from_toral(cls, algebra: LieAlgebra, toral: Sequence[Element]) -> TorusParametrization:
        """
        Torus whose Lie algebra is spanned by commuting split semisimple elements.

        :raises DecompositionError: If the elements have irrational eigenvalues.
        """
        whole = algebra.subalgebra([algebra.basis_element(k) for k in range(algebra.dim)])
        columns, weights = [], []
        for weight, vectors in joint_eigenspaces(whole, toral):
            columns.extend(vectors)
            weights.extend([weight] * len(vectors))
        eigenbasis = ExactMatrix.from_columns(columns, whole.field, nrows=algebra.dim)
        return cls(algebra, _lattice_exponents(weights), eigenbasis)

    @property
    def variables(self) -> list[str]:
        return [f"t{j + 1}" for j in range(self.rank)]

    def apply(self, vec: Sequence[Poly], system: PolySystem, inverse: bool = False) -> list[Poly]:
        ring = system.ring
        if self.eigenbasis is not None:
            vec = self._to_eigen.apply(vec, ring)
        vec = [p * _monomial(n, system, inverse) if p else p for p, n in zip(vec, self.exponents)]
        if self.eigenbasis is not None:
            vec = self._from_eigen.apply(vec, ring)
        return vec

    def matrix(self, values: Sequence[Any], field: ScalarField) -> ExactMatrix:
        """Matrix of the torus element with parameters ``values`` (nonzero elements of ``field``)."""
        inverses = [field.one / v for v in values]
        diagonal = {}
        for k, n in enumerate(self.exponents):
            c = field.one
            for v, w, e in zip(values, inverses, n):
                c *= (v if e > 0 else w) ** abs(e)
            diagonal[(k, k)] = c
        d = ExactMatrix.from_sparse(diagonal, (self.algebra.dim, self.algebra.dim), field)
        if self.eigenbasis is None:
            return d
        return self.eigenbasis.convert_to(field) @ d @ self._inverse.convert_to(field)

    def contains(self, sigma: Automorphism, budget: int = DEFAULT_BUDGET) -> bool:
        """
        Whether an automorphism lies in the torus.

        It must act by one scalar c_n on each weight space, and n -> c_n must be a character of the weight lattice.

        :raises Inconclusive: If the character equations cannot be decided.
        """
        field = sigma.field
        matrix = sigma.matrix
        if self.eigenbasis is not None:
            matrix = self._inverse.convert_to(field) @ matrix @ self.eigenbasis.convert_to(field)
        rows = matrix.to_list()
        scalars: dict[tuple[int, ...], Any] = {}
        for k, row in enumerate(rows):
            if any(not is_zero(v) for j, v in enumerate(row) if j != k):
                return False
            if scalars.setdefault(self.exponents[k], row[k]) != row[k]:
                return False
        if scalars.get((0,) * self.rank, field.one) != field.one:
            return False
        if not any(any(n) for n in scalars):
            return True
        names = self.variables
        system = PolySystem([], names, field, "lex", [(t, inverse_name(t)) for t in names])
        polys = [_monomial(n, system) - system.ring.ground_new(c) for n, c in scalars.items() if any(n)]
        found = solve_any(system.with_polys(system.polys + polys), budget)
        if found.is_inconclusive:
            raise Inconclusive(f"Torus membership undecided: {found.reason}")
        return found.status == "sat"


def _reflection_matrix(algebra: LieAlgebra, x: Element, y: Element) -> ExactMatrix:
    """exp(ad x) exp(-ad y) exp(ad x), a representative of the reflection of an sl2-triple (h, x, y)."""
    ex = algebra.exp_ad(x).matrix
    return ex @ algebra.exp_ad(-y).matrix @ ex


class ConnectedGroup:
    """
    Connected reductive subgroup of the adjoint group, given by a maximal torus and root vectors.

    :param algebra: The ambient algebra.
    :param root_data: Roots of the subgroup with a simple system and its Weyl group as reduced words.
    :param root_vector: Root vector of each root; [x_b, x_-b] is the coroot of b.
    :param torus: The maximal torus.
    :param name: Used in progress output.
    """

    def __init__(self, algebra: LieAlgebra, root_data: CentralizerRootData, root_vector: Callable[[Root], Element],
                 torus: TorusParametrization, name: str = ""):
        self.algebra = algebra
        self.root_data = root_data
        self.torus = torus
        self.name = name or algebra.name
        self.vectors = {beta: root_vector(beta) for beta in root_data.roots}
        self.ad = {beta: _SparseAction(algebra.ad(x)) for beta, x in self.vectors.items()}
        self.reflections = [
            _reflection_matrix(algebra, self.vectors[beta], self.vectors[tuple(-c for c in beta)])
            for beta in root_data.simple_roots]

    def __repr__(self) -> str:
        return (f"ConnectedGroup({self.name}: {len(self.root_data.roots)} roots, torus rank {self.torus.rank}, "
                f"{len(self.root_data.weyl_words)} cells)")

    @classmethod
    def centralizer(cls, algebra: LieAlgebra, h: Sequence) -> ConnectedGroup:
        """
        Centralizer of a Cartan element in the adjoint group (connected).

        :param h: Coordinates over h_1, ..., h_l.
        """
        if algebra.root_system is None:
            raise ValueError(f"{algebra.name} has no attached root system")
        return cls(algebra, algebra.root_system.centralizer_data(h), algebra.x, TorusParametrization.adjoint(algebra),
                   name=f"Z({list(h)})")

    @classmethod
    def identity_component(cls, s: Subalgebra, seed: int = DEFAULT_SEED) -> ConnectedGroup:
        """
        Connected subgroup with Lie algebra s, for s reductive in the ambient algebra.

        :raises DecompositionError: If s is not reductive or its Cartan subalgebra is not split.
        """
        algebra = s.algebra
        derived, centre = reductive_decompose(s)
        gens = canonical_generators(derived, seed=seed)
        standard = LieAlgebra.from_type(gens.label)
        images = gens.embedding()
        root_data = CentralizerRootData(standard.root_system, [0] * standard.root_system.rank)

        def root_vector(beta):
            return images[standard.root_index(beta)]

        torus = TorusParametrization.from_toral(algebra, gens.h + centre.elements())
        return cls(algebra, root_data, root_vector, torus, name=f"{gens.label}+T{centre.dim}")

    def cells(self) -> list[BruhatCell]:
        """All Bruhat cells, by increasing length."""
        return [BruhatCell(self, word) for word in self.root_data.weyl_words]

    def weyl_matrix(self, word: Sequence[int]) -> ExactMatrix:
        """Representative of the Weyl group element of a word, applied left to right."""
        m = ExactMatrix.eye(self.algebra.dim)
        for k in word:
            m = self.reflections[k] @ m
        return m

    def exp_apply(self, beta: Root, var: Poly, vec: Sequence[Poly], sign: int = 1) -> list[Poly]:
        """exp(sign * var * ad x_beta) applied to a vector of polynomials."""
        ring = var.ring
        action = self.ad[beta]
        total = list(vec)
        term = list(vec)
        k = 0
        while True:
            k += 1
            term = action.apply(term, ring)
            if not any(term):
                return total
            factor = var * ring.domain.convert_from(QQ(sign, k), QQ)
            term = [p * factor for p in term]
            total = [a + b for a, b in zip(total, term)]

    def exp_matrix(self, beta: Root, c: Any, field: ScalarField) -> ExactMatrix:
        x = self.vectors[beta]
        return self.algebra.exp_ad(Element(self.algebra, [c * field.embed(v, x.field) for v in x.coords],
                                           field)).matrix


class BruhatCell:
    """
    Bruhat cell U * T * w * U_w of a connected group.

    Variables are s_k for the positive roots (U), t_j for the torus, u_k for the positive roots sent to negative
    roots by w (U_w), and inv_t_j with t_j * inv_t_j = 1.
    """

    def __init__(self, group: ConnectedGroup, word: Sequence[int]):
        self.group = group
        self.word = tuple(word)
        self.positive = group.root_data.positive_roots
        self.inversions = group.root_data.inversion_set(self.word)
        self.s_vars = [f"s{k + 1}" for k in range(len(self.positive))]
        self.t_vars = group.torus.variables
        self.u_vars = [f"u{k + 1}" for k in range(len(self.inversions))]
        self._weyl = group.weyl_matrix(self.word)
        self._weyl_inverse = self._weyl.inverse()
        self._weyl_action = _SparseAction(self._weyl)
        self._weyl_inverse_action = _SparseAction(self._weyl_inverse)

    def __repr__(self) -> str:
        return f"BruhatCell(w={list(self.word)}, |Psi_w|={len(self.inversions)})"

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def variables(self) -> list[str]:
        return lex_order(self.t_vars + self.u_vars + self.s_vars)

    @property
    def aux(self) -> list[tuple[str, str]]:
        return [(t, inverse_name(t)) for t in self.t_vars]

    def system(self, polys: Sequence[Any] = (), field: ScalarField = QQ_FIELD) -> PolySystem:
        return PolySystem(polys, self.variables, field, "lex", self.aux)

    def apply(self, vec: Sequence[Poly], system: PolySystem, inverse: bool = False) -> list[Poly]:
        """Generic element of the cell (or its inverse) applied to a vector of polynomials."""
        group, gens, ring = self.group, system.gens, system.ring
        if not inverse:
            for beta, name in reversed(list(zip(self.inversions, self.u_vars))):
                vec = group.exp_apply(beta, gens[name], vec)
            vec = self._weyl_action.apply(vec, ring)
            vec = group.torus.apply(vec, system)
            for beta, name in reversed(list(zip(self.positive, self.s_vars))):
                vec = group.exp_apply(beta, gens[name], vec)
            return vec
        for beta, name in zip(self.positive, self.s_vars):
            vec = group.exp_apply(beta, gens[name], vec, sign=-1)
        vec = group.torus.apply(vec, system, inverse=True)
        vec = self._weyl_inverse_action.apply(vec, ring)
        for beta, name in zip(self.inversions, self.u_vars):
            vec = group.exp_apply(beta, gens[name], vec, sign=-1)
        return vec

    def matrix(self, solution: dict[str, Any], field: ScalarField) -> ExactMatrix:
        """Matrix of the cell element with the given parameter values."""
        group = self.group
        m = ExactMatrix.eye(group.algebra.dim, field)
        for beta, name in zip(self.positive, self.s_vars):
            m = m @ group.exp_matrix(beta, solution[name], field)
        m = m @ group.torus.matrix([solution[t] for t in self.t_vars], field)
        m = m @ self._weyl.convert_to(field)
        for beta, name in zip(self.inversions, self.u_vars):
            m = m @ group.exp_matrix(beta, solution[name], field)
        return m

    def element(self, solution: dict[str, Any], field: ScalarField) -> Automorphism:
        return Automorphism(self.group.algebra, self.matrix(solution, field), certified=True)

    def to_dict(self) -> dict[str, Any]:
        return {"word": list(self.word), "length": self.length, "variables": self.variables}


def bruhat_system(cell: BruhatCell, e_src: Element, e_tgt: Element) -> PolySystem:
    """Polynomial system expressing g(e_src) = e_tgt for g in the cell."""
    system = cell.system(field=common_field(e_src.field, e_tgt.field))
    image = cell.apply(_constant_vector(e_src, system), system)
    target = _constant_vector(e_tgt, system)
    return system.with_polys(system.polys + [a - b for a, b in zip(image, target) if a != b])


def _status(cell: BruhatCell, result: SolutionSet) -> dict[str, Any]:
    return {"cell": list(cell.word), "status": result.status, "solutions": len(result), "reason": result.reason}


def _dump_systems(systems: Sequence[PolySystem], dump_dir: Optional[str]) -> None:
    if dump_dir is None:
        return
    os.makedirs(dump_dir, exist_ok=True)
    for k, system in enumerate(systems):
        with open(os.path.join(dump_dir, f"cell_{k:03d}.txt"), "w") as f:
            f.write(dump(system))


class SearchResult:
    """Automorphisms found by a search over Bruhat cells, with the outcome for every cell."""

    def __init__(self, elements: Sequence[Automorphism], cells: Sequence[dict[str, Any]]):
        self.elements = list(elements)
        self.cells = list(cells)

    def __repr__(self) -> str:
        return f"SearchResult({len(self.elements)} elements, {len(self.cells)} cells)"

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, k: int) -> Automorphism:
        return self.elements[k]

    @property
    def complete(self) -> bool:
        return all(c["status"] != "inconclusive" for c in self.cells)

    def to_dict(self) -> dict[str, Any]:
        return {"elements": [s.to_dict() for s in self.elements], "cells": self.cells}


# Conjugation within the Cartan subalgebra


def simple_reflection(algebra: LieAlgebra, i: int) -> Automorphism:
    """Automorphism exp(ad x_i) exp(-ad y_i) exp(ad x_i) representing the i-th (1-based) simple reflection."""
    cache = algebra._meta.setdefault("simple_reflections", {})
    if i not in cache:
        alpha = algebra.root_system.simple_roots[i - 1]
        matrix = _reflection_matrix(algebra, algebra.x(alpha), algebra.x(tuple(-c for c in alpha)))
        cache[i] = Automorphism(algebra, matrix, certified=True)
    return cache[i]


def weyl_representative(algebra: LieAlgebra, word: Sequence[int]) -> Automorphism:
    """Automorphism acting on the Cartan subalgebra as the word of (1-based) simple coreflections, applied in order."""
    sigma = algebra.identity()
    for i in word:
        sigma = simple_reflection(algebra, i) @ sigma
    return sigma


def coroot_torus_element(algebra: LieAlgebra, i: int, t: Any) -> Automorphism:
    """
    The torus element h_i(t) = w_i(t) w_i(1)^-1 with w_i(t) = exp(t ad x_i) exp(-t^-1 ad y_i) exp(t ad x_i).

    It scales x_beta by t^<beta, alpha_i^vee> and fixes the Cartan subalgebra.

    :param i: 1-based index of the simple root.
    :param t: Nonzero rational.
    """
    t = Fraction(t)
    if is_zero(t):
        raise ValueError("The torus parameter must be nonzero")
    alpha = algebra.root_system.simple_roots[i - 1]
    x, y = algebra.x(alpha), algebra.x(tuple(-c for c in alpha))
    forward = algebra.exp_ad(t * x).matrix
    w_t = forward @ algebra.exp_ad((-1 / t) * y).matrix @ forward
    return Automorphism(algebra, w_t, certified=True) @ simple_reflection(algebra, i).inverse()


def conjugate_cartan_pair(h1: Element, h2: Element) -> Optional[Automorphism]:
    """
    Inner automorphism mapping h1 to h2, both in the standard Cartan subalgebra.

    Both are moved to the dominant chamber; the automorphism realizes w2^-1 w1 by products of simple reflection
    representatives.

    :returns: The automorphism, or None if h1 and h2 are not Weyl-conjugate.
    """
    algebra = h1.algebra
    c1, c2 = algebra.cartan_coordinates(h1), algebra.cartan_coordinates(h2)
    if c1 is None or c2 is None:
        raise ValueError("Both elements must lie in the standard Cartan subalgebra")
    rs = algebra.root_system
    d1, w1 = rs.dominant_representative(c1)
    d2, w2 = rs.dominant_representative(c2)
    if d1 != d2:
        return None
    tau = weyl_representative(algebra, w2).inverse() @ weyl_representative(algebra, w1)
    if tau(h1) != h2:
        raise RuntimeError("Weyl group representative does not map h1 to h2")
    return tau


def conjugate_into_cartan(h: Element, seed: int = DEFAULT_SEED) -> tuple[Automorphism, Element]:
    """
    Inner automorphism moving a semisimple element with rational eigenvalues into the standard Cartan subalgebra.

    Canonical generators are chosen around a split Cartan subalgebra containing h and sent to the standard ones,
    composed with the diagram automorphism that makes the map inner.

    :returns: The automorphism and the image of h.
    """
    algebra = h.algebra
    if algebra.root_system is None:
        raise ValueError(f"{algebra.name} has no attached root system")
    if algebra.cartan_coordinates(h) is not None:
        return algebra.identity(), h
    whole = algebra.subalgebra([algebra.basis_element(k) for k in range(algebra.dim)])
    gens = canonical_generators(whole, toral=[h], dominant=h, seed=seed)
    if gens.cartan_matrix.shape != algebra.root_system.cartan_matrix.shape or (
            gens.cartan_matrix != algebra.root_system.cartan_matrix).any():
        raise RuntimeError(f"Canonical generators of type {gens.label} do not match {algebra.name}")
    sigma = Automorphism(algebra, algebra.homomorphism(gens.embedding())).certify().inverse()
    for perm in algebra.diagram_symmetries():
        tau = algebra.diagram_automorphism(perm) @ sigma
        if is_inner(tau, order_bound=None, seed=seed):
            image = tau(h)
            if algebra.cartan_coordinates(image) is None:
                raise RuntimeError("Image of h is not in the standard Cartan subalgebra")
            return tau, image
    raise RuntimeError("No diagram automorphism makes the conjugating map inner")


def _into_cartan(triple: Sl2Triple, seed: int) -> tuple[Automorphism, Sl2Triple]:
    sigma, _ = conjugate_into_cartan(triple.h, seed)
    return sigma, triple.transform(sigma)


# Searches over Bruhat cells


def find_conjugator(t1: Sl2Triple, t2: Sl2Triple, budget: int = DEFAULT_BUDGET, seed: int = DEFAULT_SEED,
                    verbose: bool = False, dump_dir: Optional[str] = None) -> Automorphism:
    """
    Inner automorphism mapping one sl2-triple to another.

    :param t1: Source triple.
    :param t2: Target triple, in the same algebra.
    :param budget: Reduction budget per cell.
    :param seed: Seed for the canonical generators used to reach the Cartan subalgebra.
    :param verbose: Show progress over the cells.
    :param dump_dir: Optional. Write the system of every cell there in the textual format.

    :raises ValueError: If the triples are not conjugate.
    :raises Inconclusive: If no cell gives a solution and some cell is undecided.
    """
    algebra = t1.algebra
    sigma1, m1 = _into_cartan(t1, seed)
    sigma2, m2 = _into_cartan(t2, seed)
    tau = conjugate_cartan_pair(m1.h, m2.h)
    if tau is None:
        raise ValueError("The neutral elements are not conjugate: the triples lie in different orbits")
    m1 = m1.transform(tau)
    rho = tau @ sigma1
    group = ConnectedGroup.centralizer(algebra, algebra.cartan_coordinates(m2.h))
    cells = group.cells()
    statuses = []
    systems = []
    for cell in tqdm(cells, desc="Searching cells", disable=not verbose):
        system = bruhat_system(cell, m1.e, m2.e)
        systems.append(system)
        found = solve_any(system, budget)
        statuses.append(_status(cell, found))
        if found.status == "sat":
            _dump_systems(systems, dump_dir)
            phi = sigma2.inverse() @ cell.element(found.solutions[0], found.field) @ rho
            if phi(t1.h) != t2.h or phi(t1.e) != t2.e or phi(t1.f) != t2.f:
                raise RuntimeError("Solution of the cell system does not map the triples")
            return phi
    _dump_systems(systems, dump_dir)
    undecided = [s for s in statuses if s["status"] == "inconclusive"]
    if undecided:
        raise Inconclusive(f"{len(undecided)} of {len(cells)} cells inconclusive", statuses)
    raise ValueError("The triples are not conjugate")


def _stabilizer_systems(triple: Sl2Triple, seed: int) -> tuple[Automorphism, Sl2Triple, list[BruhatCell]]:
    algebra = triple.algebra
    if algebra.centralizer(list(triple)).dim != 0:
        raise ValueError("The centralizer of the triple is not finite")
    sigma, moved = _into_cartan(triple, seed)
    group = ConnectedGroup.centralizer(algebra, algebra.cartan_coordinates(moved.h))
    return sigma, moved, group.cells()


def finite_stabilizer(triple: Sl2Triple, budget: int = DEFAULT_BUDGET, jobs: int = 1, seed: int = DEFAULT_SEED,
                      verbose: bool = False, dump_dir: Optional[str] = None) -> SearchResult:
    """
    All inner automorphisms fixing a triple with finite centralizer.

    :param triple: The triple.
    :param budget: Reduction budget per cell.
    :param jobs: Number of worker processes for the cell systems.
    :param seed: Seed for the canonical generators used to reach the Cartan subalgebra.
    :param verbose: Show progress over the cells.
    :param dump_dir: Optional. Write the system of every cell there in the textual format.

    :raises ValueError: If the centralizer of the triple has positive dimension.
    :raises Inconclusive: If any cell is undecided.
    """
    sigma, moved, cells = _stabilizer_systems(triple, seed)
    systems = [bruhat_system(cell, moved.e, moved.e) for cell in cells]
    _dump_systems(systems, dump_dir)
    if verbose:
        print(f"Stabilizer of {triple}: {len(cells)} cells, up to {max(len(s.variables) for s in systems)} "
              f"indeterminates")
    results = solve_many(systems, budget, jobs=jobs, verbose=verbose)
    statuses = [_status(cell, r) for cell, r in zip(cells, results)]
    undecided = [s for s in statuses if s["status"] == "inconclusive"]
    if undecided:
        raise Inconclusive(f"{len(undecided)} of {len(cells)} cells inconclusive", statuses)
    back = sigma.inverse()
    elements = []
    for cell, result in zip(cells, results):
        for solution in result:
            phi = back @ cell.element(solution, result.field) @ sigma
            if not phi.fixes(*triple):
                raise RuntimeError(f"Solution in cell {list(cell.word)} does not fix the triple")
            elements.append(phi)
    return SearchResult(elements, statuses)


def stabilizer_group(triple: Sl2Triple, budget: int = DEFAULT_BUDGET, jobs: int = 1, seed: int = DEFAULT_SEED,
                     verbose: bool = False, dump_dir: Optional[str] = None) -> ComponentGroup:
    """
    Component group of the stabilizer of a triple with finite centralizer: the stabilizer itself.

    :raises ValueError: If the centralizer of the triple has positive dimension.
    :raises Inconclusive: If any cell is undecided.
    """
    found = finite_stabilizer(triple, budget, jobs, seed, verbose, dump_dir)
    identity = triple.algebra.identity()
    elements = [identity] + [phi for phi in found if not phi.is_identity()]
    if len(elements) != len(found):
        raise RuntimeError(f"Found {len(found)} stabilizer elements, {len(found) - len(elements) + 1} identities")

    def multiply(a, b):
        return a @ b

    def equal(a, b):
        return a == b

    generators = generating_set(elements[1:], multiply, equal, identity)
    group = ComponentGroup(elements, generators, multiply, equal)
    group._meta["route"] = "conjugacy"
    group._meta["cells"] = found.cells
    if verbose:
        print(f"Stabilizer of {triple}: {group.order} elements, {group.label}")
    return group


def order2_search(triple: Sl2Triple, budget: int = DEFAULT_BUDGET, jobs: int = 1, seed: int = DEFAULT_SEED,
                  verbose: bool = False) -> SearchResult:
    """
    Inner automorphisms of order at most 2 fixing a triple with finite centralizer.

    The cell systems are augmented with g(x) = g^-1(x) for the generators x of the algebra. Undecided cells are
    reported in the result and with a warning instead of raising.
    """
    algebra = triple.algebra
    sigma, moved, cells = _stabilizer_systems(triple, seed)
    generators = algebra.generators()
    systems = []
    for cell in cells:
        base = bruhat_system(cell, moved.e, moved.e)
        extra = []
        for x in generators:
            vec = _constant_vector(x, base)
            forward, backward = cell.apply(vec, base), cell.apply(vec, base, inverse=True)
            extra.extend(a - b for a, b in zip(forward, backward) if a != b)
        systems.append(base.with_polys(base.polys + extra))
    results = solve_many(systems, budget, jobs=jobs, verbose=verbose)
    statuses = [_status(cell, r) for cell, r in zip(cells, results)]
    undecided = [s for s in statuses if s["status"] == "inconclusive"]
    if undecided:
        warnings.warn(f"Order-2 search: {len(undecided)} of {len(cells)} cells inconclusive")
    back = sigma.inverse()
    elements = []
    for cell, result in zip(cells, results):
        for solution in result:
            phi = back @ cell.element(solution, result.field) @ sigma
            if not phi.fixes(*triple) or not (phi @ phi).is_identity():
                raise RuntimeError(f"Solution in cell {list(cell.word)} is not an involution fixing the triple")
            elements.append(phi)
    return SearchResult(elements, statuses)


def outer_stabilizer(triple: Sl2Triple, inner: Optional[SearchResult] = None, budget: int = DEFAULT_BUDGET,
                     jobs: int = 1, seed: int = DEFAULT_SEED, verbose: bool = False) -> SearchResult:
    """
    Outer automorphisms fixing a triple with finite centralizer.

    For each nontrivial diagram automorphism tau whose image of the triple lies in the same orbit, the elements
    s * psi * tau, with psi(tau(triple)) = triple and s in the inner stabilizer.

    :param inner: Optional. The inner stabilizer from :func:`finite_stabilizer`, computed if not given.
    """
    algebra = triple.algebra
    identity = tuple(range(algebra.rank))
    symmetries = [p for p in algebra.diagram_symmetries() if tuple(p) != identity]
    if not symmetries:
        return SearchResult([], [])
    if inner is None:
        inner = finite_stabilizer(triple, budget, jobs, seed, verbose)
    wdd = weighted_dynkin_diagram(triple, seed=seed)
    elements, statuses = [], []
    for perm in symmetries:
        tau = algebra.diagram_automorphism(perm)
        moved = triple.transform(tau)
        if weighted_dynkin_diagram(moved, seed=seed) != wdd:
            statuses.append({"diagram": list(perm), "status": "unsat", "solutions": 0,
                             "reason": "Orbit not preserved"})
            continue
        psi = find_conjugator(moved, triple, budget, seed, verbose)
        found = [s @ psi @ tau for s in inner]
        statuses.append({"diagram": list(perm), "status": "sat", "solutions": len(found), "reason": None})
        elements.extend(found)
    return SearchResult(elements, statuses)


# Identity components


class IdentityComponent:
    """
    Identity component of the subgroup of the adjoint group with a given reductive Lie algebra.

    Membership is exact: for a torus through the eigenvalues on the weight spaces, otherwise by solving
    g(x) = sigma(x) on the generators x over the Bruhat cells of the group.

    :param s: Reductive subalgebra, typically the centralizer of a triple.
    :param budget: Reduction budget per cell.
    :param seed: Seed for the canonical generators of the derived part.
    """

    def __init__(self, s: Subalgebra, budget: int = DEFAULT_BUDGET, seed: int = DEFAULT_SEED):
        self.algebra = s.algebra
        self.subalgebra = s
        self.budget = budget
        self.group = ConnectedGroup.identity_component(s, seed) if s.dim else None

    def __repr__(self) -> str:
        return f"IdentityComponent({self.group!r})"

    def __contains__(self, sigma: Automorphism) -> bool:
        return self.contains(sigma)

    def contains(self, sigma: Automorphism) -> bool:
        """
        :raises Inconclusive: If the membership systems cannot be decided.
        """
        if self.group is None:
            return sigma.is_identity()
        if not self.group.root_data.roots:
            return self.group.torus.contains(sigma, self.budget)
        generators = self.algebra.generators()
        targets = [sigma(x) for x in generators]
        undecided = []
        for cell in self.group.cells():
            system = cell.system(field=sigma.field)
            polys = []
            for x, y in zip(generators, targets):
                image = cell.apply(_constant_vector(x, system), system)
                polys.extend(a - b for a, b in zip(image, _constant_vector(y, system)) if a != b)
            found = solve_any(system.with_polys(system.polys + polys), self.budget)
            if found.status == "sat":
                return True
            if found.is_inconclusive:
                undecided.append(_status(cell, found))
        if undecided:
            raise Inconclusive(f"Membership undecided in {len(undecided)} cells", undecided)
        return False


def in_identity_component(sigma: Automorphism, c1: Subalgebra, budget: int = DEFAULT_BUDGET,
                          seed: int = DEFAULT_SEED) -> bool:
    """Whether sigma lies in the identity component of the group with Lie algebra c1 (reductive)."""
    return IdentityComponent(c1, budget, seed).contains(sigma)


def identity_component_checker(triple: Sl2Triple, budget: int = DEFAULT_BUDGET,
                               seed: int = DEFAULT_SEED) -> Callable[[Automorphism], bool]:
    """Membership test for the identity component of the stabilizer of a triple, built once."""
    return IdentityComponent(triple.algebra.centralizer(list(triple)), budget, seed).contains

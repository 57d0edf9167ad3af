"""Jacobson-Morozov triples, weighted Dynkin diagrams and nilpotent orbit representatives."""
from __future__ import annotations

import itertools
import json
from fractions import Fraction
from typing import Any, Iterator, Optional, Sequence, Union

import numpy as np

import nilcent
from nilcent.liealg import DEFAULT_SEED, Element, LieAlgebra, Subalgebra, canonical_generators, is_inner
from nilcent.rootsys import Root, RootSystem
from nilcent.scalars import ExactMatrix, common_field, is_zero, kernel, solve_linear, to_fraction


class Sl2Triple:
    """
    Elements (h, e, f) with [h, e] = 2e, [h, f] = -2f and [e, f] = h.

    :param label: Optional. Bala-Carter label of the orbit of e.
    """

    def __init__(self, h: Element, e: Element, f: Element, label: Optional[str] = None):
        self.h, self.e, self.f = h, e, f
        self.label = label
        self.algebra = e.algebra

    def __repr__(self) -> str:
        return f"Sl2Triple({self.label or 'unlabelled'} in {self.algebra.name})"

    def __iter__(self):
        return iter((self.h, self.e, self.f))

    def is_valid(self) -> bool:
        bracket = self.algebra.bracket
        return (bracket(self.h, self.e) == 2 * self.e and bracket(self.h, self.f) == (-2) * self.f
                and bracket(self.e, self.f) == self.h)

    def check(self) -> Sl2Triple:
        """:raises RuntimeError: If the triple relations fail."""
        if not self.is_valid():
            raise RuntimeError(f"Triple relations [h,e]=2e, [h,f]=-2f, [e,f]=h fail for {self}")
        return self

    def subalgebra(self) -> Subalgebra:
        return Subalgebra(self.algebra, [x for x in self if not x.is_zero()])

    def transform(self, sigma: nilcent.liealg.Automorphism) -> Sl2Triple:
        """Image of the triple under an automorphism."""
        return Sl2Triple(sigma(self.h), sigma(self.e), sigma(self.f), self.label)

    def to_dict(self) -> dict[str, Any]:
        return {"label": self.label, "h": self.h.to_dict(), "e": self.e.to_dict(), "f": self.f.to_dict()}

    @classmethod
    def from_dict(cls, algebra: LieAlgebra, data: dict[str, Any]) -> Sl2Triple:
        return cls(*(Element.from_dict(algebra, data[k]) for k in ("h", "e", "f")), label=data.get("label"))


def solve_triple(algebra: LieAlgebra, e: Element, within: Optional[Subalgebra] = None) -> Sl2Triple:
    """
    Complete a nilpotent element to an sl2-triple inside a subalgebra.

    Solve [e, [e, z]] = -2e and put h = [e, z]. Then f = z + u where u centralizes e and
    (ad h + 2) u = -[h, z] - 2z.

    :param algebra: The ambient Lie algebra.
    :param e: A nonzero ad-nilpotent element of ``within``.
    :param within: Optional. Subalgebra containing e in which to find h and f. Defaults to the whole algebra.

    :raises ValueError: If e is not nilpotent or has no triple in the subalgebra.
    """
    if e.is_zero():
        zero = algebra.zero(e.field)
        return Sl2Triple(zero, zero, zero)
    if not algebra.is_nilpotent(e):
        raise ValueError(f"Element {e} is not nilpotent")
    if within is None:
        within = Subalgebra(algebra, [algebra.basis_element(k, e.field) for k in range(algebra.dim)])
    field = common_field(within.field, e.field)
    target = within.coords(e)
    if target is None:
        raise ValueError("The nilpotent element does not lie in the given subalgebra")

    ad_e = within.ad_matrix(e)
    z_coords = solve_linear(ad_e @ ad_e, [field.embed(-2 * c, within.field) for c in target])
    if z_coords is None:
        raise ValueError(f"No sl2-triple through {e}")
    z = within.from_coords(z_coords)
    h = algebra.bracket(e, z)

    centralizer = kernel(ad_e)
    ad_h = within.ad_matrix(h)
    shifted = ad_h + ExactMatrix.eye(within.dim, field).scale(field(2))
    columns = [shifted.apply(c) for c in centralizer]
    rhs = within.coords(algebra.bracket(h, z) + 2 * z)
    u_coords = solve_linear(ExactMatrix.from_columns(columns, field, nrows=within.dim), [-c for c in rhs]) \
        if columns else ([] if all(is_zero(c) for c in rhs) else None)
    if u_coords is None:
        raise RuntimeError("Jacobson-Morozov correction term not found")
    u = [sum((a * c[k] for a, c in zip(u_coords, centralizer)), field.zero) for k in range(within.dim)]
    f = z + within.from_coords(u)
    return Sl2Triple(h, e, f).check()


def jacobson_morozov(e: Element, label: Optional[str] = None) -> Sl2Triple:
    """
    sl2-triple (h, e, f) through a nilpotent element.

    :param e: Nilpotent element of a Lie algebra. The zero element gives the zero triple.
    :param label: Optional. Orbit label stored on the triple.

    :raises ValueError: If e is not nilpotent.
    """
    triple = solve_triple(e.algebra, e)
    triple.label = label
    return triple


def cartan_element_of_wdd(algebra: LieAlgebra, wdd: Sequence[int]) -> Element:
    """The dominant element h of the standard Cartan subalgebra with alpha_i(h) = wdd_i."""
    cartan = ExactMatrix.from_rows(algebra.root_system.cartan_matrix.tolist())
    coords = solve_linear(cartan, [Fraction(v) for v in wdd])
    return algebra.cartan_element([to_fraction(c) for c in coords])


def _check_labels(labels: Sequence[Fraction]) -> tuple[int, ...]:
    if any(v not in (0, 1, 2) for v in labels):
        raise RuntimeError(f"Weighted Dynkin diagram labels {labels} are not in {{0, 1, 2}}")
    return tuple(int(v) for v in labels)


def weighted_dynkin_diagram(triple: Sl2Triple, seed: int = DEFAULT_SEED) -> tuple[int, ...]:
    """
    Weighted Dynkin diagram of the orbit of a triple: labels alpha_i(h) of the dominant conjugate of h.

    :param triple: sl2-triple in a Lie algebra with an attached root system.
    :param seed: Seed for the generic elements used when h is outside the standard Cartan subalgebra.
    """
    algebra = triple.algebra
    rs = algebra.root_system
    if triple.h.is_zero():
        return tuple(0 for _ in range(rs.rank))
    coords = algebra.cartan_coordinates(triple.h)
    if coords is not None:
        dominant, _ = rs.dominant_representative(coords)
        return _check_labels(rs.simple_values(dominant))

    # A Cartan subalgebra through h, with a base for which h is dominant.
    whole = Subalgebra(algebra, [algebra.basis_element(k) for k in range(algebra.dim)])
    gens = canonical_generators(whole, toral=[triple.h], dominant=triple.h, hints=[triple.e], seed=seed)
    labels = tuple(gens._eigen(triple.h, x) for x in gens.x)
    symmetries = algebra.diagram_symmetries()
    if all(tuple(labels[p] for p in perm) == labels for perm in symmetries):
        return _check_labels(labels)
    # Up to an outer automorphism: find the diagram symmetry that makes the matching inner.
    sigma = algebra.automorphism_from_generators(gens.h, gens.x, gens.y)
    for perm in symmetries:
        tau = sigma @ algebra.diagram_automorphism(perm).inverse()
        if is_inner(tau, order_bound=None, seed=seed):
            inverse = [0] * len(perm)
            for i, p in enumerate(perm):
                inverse[p] = i
            return _check_labels([labels[inverse[j]] for j in range(len(perm))])
    raise RuntimeError("No diagram symmetry makes the Cartan subalgebra matching inner")


def same_orbit(t1: Sl2Triple, t2: Sl2Triple, seed: int = DEFAULT_SEED) -> bool:
    """Whether the nilpotent parts of two triples are conjugate under the inner automorphism group."""
    if t1.algebra is not t2.algebra:
        raise TypeError("Triples belong to different Lie algebras")
    return weighted_dynkin_diagram(t1, seed) == weighted_dynkin_diagram(t2, seed)


def orbit_dimension(triple: Sl2Triple) -> int:
    """dim g - dim z_g(e)."""
    algebra = triple.algebra
    return algebra.dim - algebra.centralizer([triple.e]).dim


def graded_pieces(algebra: LieAlgebra, h: Element) -> dict[int, list[int]]:
    """Basis indices of the eigenspaces g_k(h) for h in the standard Cartan subalgebra (Cartan basis in g_0)."""
    coords = algebra.cartan_coordinates(h)
    rs = algebra.root_system
    pieces: dict[int, list[int]] = {0: [algebra.cartan_index(i) for i in range(1, rs.rank + 1)]}
    for k in range(2 * len(rs.positive_roots)):
        value = rs.root_value(algebra.basis_root(k), coords)
        pieces.setdefault(int(value), []).append(k)
    return pieces


def distinguished_levis(rs: RootSystem, wdd: Sequence[int]) -> Iterator[tuple[list[Root], list[Root], list[Root]]]:
    """
    Levi subalgebras in which the orbit of a weighted Dynkin diagram is distinguished.

    A standard Levi subalgebra with an even labelling of its diagram qualifies when its derived algebra has as many
    root vectors of degree 2 as it has dimensions in degree 0, and the labelling moves to the given diagram under
    the Weyl group. Its roots are moved by the same Weyl element, so the neutral element becomes the dominant one.

    :returns: For each Levi subalgebra, smallest first: the moved simple roots, the moved positive roots of degree
        0 and the roots of degree 2.
    """
    target = [Fraction(v) for v in wdd]
    for size in range(1, rs.rank + 1):
        for subset in itertools.combinations(range(rs.rank), size):
            inside = [r for r in rs.positive_roots if all(r[k] == 0 for k in range(rs.rank) if k not in subset)]
            block = ExactMatrix.from_rows([[int(rs.cartan_matrix[i, j]) for j in subset] for i in subset])
            for labels in itertools.product((0, 2), repeat=size):
                degrees = [sum(r[k] * v for k, v in zip(subset, labels)) for r in inside]
                zero = [r for r, d in zip(inside, degrees) if d == 0]
                two = [r for r, d in zip(inside, degrees) if d == 2]
                if size + 2 * len(zero) != len(two):
                    continue
                coords = [Fraction(0)] * rs.rank
                for j, c in zip(subset, solve_linear(block, labels)):
                    coords[j] = to_fraction(c)
                dominant, word = rs.dominant_representative(coords)
                if rs.simple_values(dominant) != target:
                    continue
                simple = [tuple(int(k == j) for k in range(rs.rank)) for j in subset]
                yield tuple([rs.apply_word_to_root(word, r) for r in roots] for roots in (simple, zero, two))


def _generic_triple(algebra: LieAlgebra, h: Element, pieces: dict[int, list[int]], support: Sequence[int],
                    levi0: Optional[list[Element]], rng: np.random.Generator, tries: int,
                    label: Optional[str]) -> Optional[Sl2Triple]:
    g0, g2, gm2 = pieces.get(0, []), pieces.get(2, []), pieces.get(-2, [])
    for _ in range(tries):
        coeffs = [int(c) for c in rng.integers(1, 6, size=len(support))]
        vec = [0] * algebra.dim
        for k, c in zip(support, coeffs):
            vec[k] = c
        e = algebra.element(vec)
        ad_e = algebra.ad(e)
        if ad_e.extract(g2, g0).rank() != len(g2):
            continue
        if levi0 is not None:
            images = ExactMatrix.from_columns([algebra.bracket(e, x).coords for x in levi0], nrows=algebra.dim)
            if images.extract(support, range(len(levi0))).rank() != len(support):
                continue
        f_coords = solve_linear(ad_e.extract(range(algebra.dim), gm2), list(h.coords))
        if f_coords is None:
            continue
        vec = [0] * algebra.dim
        for k, c in zip(gm2, f_coords):
            vec[k] = c
        return Sl2Triple(h, e, algebra.element(vec), label).check()
    return None


def triple_from_wdd(algebra: LieAlgebra, wdd: Sequence[int], label: Optional[str] = None, seed: int = DEFAULT_SEED,
                    tries: int = 20) -> Sl2Triple:
    """
    Triple with neutral element given by a weighted Dynkin diagram.

    e is a generic integer combination of the degree-2 root vectors of a Levi subalgebra in which the orbit is
    distinguished (see :func:`distinguished_levis`), so that the centre of this Levi subalgebra lies in the standard
    Cartan subalgebra and is a maximal torus of the centralizer of the triple. It is accepted when ad e maps
    g_0(h) onto g_2(h) and the degree-0 part of the derived Levi subalgebra onto its degree-2 part; f is then the
    solution of [e, f] = h in g_-2(h). Without such a Levi subalgebra, e ranges over all of g_2(h).

    :raises ValueError: If the diagram is not the diagram of a nilpotent orbit.
    """
    h = cartan_element_of_wdd(algebra, wdd)
    if h.is_zero():
        zero = algebra.zero()
        return Sl2Triple(zero, zero, zero, label)
    rs = algebra.root_system
    pieces = graded_pieces(algebra, h)
    if not pieces.get(2):
        raise ValueError(f"Weighted Dynkin diagram {tuple(wdd)} has an empty degree-2 piece")
    rng = np.random.default_rng(seed)
    for simple, level0, level2 in distinguished_levis(rs, wdd):
        levi0 = ([algebra.cartan_element(rs.coroot(b)) for b in simple] + [algebra.x(r) for r in level0]
                 + [algebra.x(tuple(-c for c in r)) for r in level0])
        support = [algebra.root_index(r) for r in level2]
        triple = _generic_triple(algebra, h, pieces, support, levi0, rng, tries, label)
        if triple is not None:
            return triple
    triple = _generic_triple(algebra, h, pieces, pieces[2], None, rng, tries, label)
    if triple is None:
        raise ValueError(f"Weighted Dynkin diagram {tuple(wdd)} does not come from a nilpotent orbit")
    return triple


def element_from_terms(algebra: LieAlgebra, terms: Sequence[dict[str, Any]]) -> Element:
    """Element sum coeff * x_root from a list of {"root": [...], "coeff": "p/q"} records."""
    vec = [Fraction(0)] * algebra.dim
    for term in terms:
        root = tuple(int(c) for c in term["root"])
        if not algebra.root_system.is_root(root):
            raise ValueError(f"{root} is not a root of {algebra.name}")
        vec[algebra.root_index(root)] += Fraction(str(term["coeff"]))
    return algebra.element(vec)


def load_representative(path_or_dict: Union[str, dict[str, Any]]) -> Sl2Triple:
    """
    Read an orbit representative and complete it to a triple.

    The record has the keys "algebra", "label" and "e", a list of {"root": coefficients over the simple roots,
    "coeff": rational string}.
    """
    if isinstance(path_or_dict, str):
        with open(path_or_dict) as infile:
            data = json.load(infile)
    else:
        data = path_or_dict
    algebra = LieAlgebra.from_type(data["algebra"])
    return jacobson_morozov(element_from_terms(algebra, data["e"]), label=data.get("label"))


def representative(algebra: Union[str, LieAlgebra], label: str, seed: int = DEFAULT_SEED) -> Sl2Triple:
    """
    Triple for a nilpotent orbit listed in the package fixtures.

    An explicit representative is used when the fixture has one, otherwise one is built from the weighted Dynkin
    diagram.

    :param algebra: Lie algebra or its type label.
    :param label: Bala-Carter label of the orbit, e.g. 'F4(a3)'.

    :raises ValueError: If the orbit is not listed.
    """
    if isinstance(algebra, str):
        algebra = LieAlgebra.from_type(algebra)
    record = nilcent.examples.orbit_record(algebra.name, label)
    if not record.get("e") and record.get("wdd") is None:
        raise ValueError(f"No representative stored for {label} in {algebra.name}")
    if record.get("e"):
        triple = jacobson_morozov(element_from_terms(algebra, record["e"]), label=record["label"])
    else:
        triple = triple_from_wdd(algebra, record["wdd"], label=record["label"], seed=seed)
    return triple

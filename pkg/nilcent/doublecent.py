"""
Component groups through the double centralizer.

Let c1 be the centralizer of a triple (h, e, f), of positive dimension, and c2 the centralizer of c1. With
c = [c1, c1] + [c2, c2] + z(c1), the Killing complement V of c is a c-module, multiplicity free for the exceptional
algebras. An element of the stabilizer of the triple restricts to a diagram automorphism on [c1, c1] (after moving it
within the identity component), to a stabilizer element of the triple on [c2, c2], to a linear map on the centre, and
permutes the irreducible summands of V. Each such datum gives a polynomial system in the scalings of the
highest-weight vectors, whose solutions are the stabilizer elements with that datum.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Any, Optional, Sequence

from tqdm import tqdm

from nilcent.components import ComponentGroup, generating_set
from nilcent.conjugacy import IdentityComponent, finite_stabilizer, outer_stabilizer
from nilcent.groebner import (DEFAULT_BUDGET, Inconclusive, PolySystem, SolutionSet, inverse_name, lex_order, solve,
                              solve_many)
from nilcent.liealg import (DEFAULT_SEED, Automorphism, CanonicalGenerators, Element, LieAlgebra, Subalgebra,
                            canonical_generators, is_inner, isomorphism, joint_eigenspaces, reductive_decompose,
                            standard_generators)
from nilcent.rootsys import cartan_symmetries, parse_label
from nilcent.scalars import (QQ_FIELD, ExactMatrix, ScalarField, common_field, coordinates, is_zero, kernel,
                             solve_linear)
from nilcent.sl2 import Sl2Triple


class MultiplicityError(ValueError):
    """Two irreducible summands of the Killing complement share a highest weight."""


def _over(s: Subalgebra, field: ScalarField) -> Subalgebra:
    """The same subspace with coordinates in a larger field."""
    if field is s.field:
        return s
    return Subalgebra(s.algebra, s.elements(), field)


def _normalized(v: Element) -> Element:
    """Scale so that the first nonzero coordinate is 1."""
    k = next(k for k, c in enumerate(v.coords) if not is_zero(c))
    return Element(v.algebra, [c / v.coords[k] for c in v.coords], v.field)


def _eigenvalue(h: Element, v: Element) -> Fraction:
    """Eigenvalue of ad h on an eigenvector v, checked exactly."""
    image = h.algebra.bracket(h, v)
    field = image.field
    k = next(k for k, c in enumerate(v.coords) if not is_zero(c))
    value = image.coords[k] / field.embed(v.coords[k], v.field)
    if image != Element(v.algebra, [value * field.embed(c, v.field) for c in v.coords], field):
        raise RuntimeError("Vector is not an eigenvector of the toral element")
    return field.to_rational(value)


def _component_ranks(label: str) -> list[int]:
    return [rank for _, rank in parse_label(label)]


def _compose(a: Automorphism, b: Automorphism) -> Automorphism:
    return a @ b


# Centralizers


class CentralizerPair:
    """
    The centralizer c1 of a triple, its centralizer c2 and the reductive subalgebra c they frame.

    ``generators1`` and ``generators2`` are canonical generators of the derived parts; the Cartan subalgebra of the
    second one contains h, which is dominant for its base.
    """

    def __init__(self, triple: Sl2Triple, c1: Subalgebra, c2: Subalgebra, c1_derived: Subalgebra,
                 c2_derived: Subalgebra, centre: Subalgebra, generators1: CanonicalGenerators,
                 generators2: CanonicalGenerators):
        self.triple = triple
        self.algebra = triple.algebra
        self.c1, self.c2 = c1, c2
        self.c1_derived, self.c2_derived = c1_derived, c2_derived
        self.centre = centre
        self.generators1, self.generators2 = generators1, generators2
        self.d = centre.dim
        self.c = c2_derived.sum(c1_derived, centre)

    def __repr__(self) -> str:
        return f"CentralizerPair({self.generators1.label} | {self.d} | {self.generators2.label})"

    @property
    def labels(self) -> tuple[str, int, str]:
        """Types of [c1, c1] and [c2, c2] with the dimension of the centre in between."""
        return self.generators1.label, self.d, self.generators2.label

    def to_dict(self) -> dict[str, Any]:
        return {"c1_derived": self.generators1.label, "d": self.d, "c2_derived": self.generators2.label,
                "dim_c1": self.c1.dim, "dim_c2": self.c2.dim, "dim_c": self.c.dim}


def centralizer_pair(triple: Sl2Triple, seed: int = DEFAULT_SEED) -> CentralizerPair:
    """
    Centralizer and double centralizer of a triple, with their exact relations checked.

    :param triple: Triple whose centralizer has positive dimension.
    :param seed: Seed for the canonical generators.

    :raises ValueError: If the centralizer of the triple is zero.
    :raises RuntimeError: If one of the relations between c1, c2 and their centres fails.
    """
    algebra = triple.algebra
    c1 = algebra.centralizer(list(triple))
    if c1.dim == 0:
        raise ValueError("The centralizer of the triple is zero: use nilcent.conjugacy.stabilizer_group instead")
    c2 = algebra.centralizer(c1)
    c1_derived, centre = reductive_decompose(c1)
    c2_derived, centre2 = reductive_decompose(c2)
    if not all(c2_derived.contains(x) for x in triple):
        raise RuntimeError("The triple does not lie in the derived algebra of the double centralizer")
    if algebra.centralizer(c2).dim != c1.dim:
        raise RuntimeError("The centralizer of c2 differs from c1")
    meet = c1.intersection(c2)
    if not (meet.dim == centre.dim == centre2.dim and centre.contains_subspace(meet)
            and centre.contains_subspace(centre2)):
        raise RuntimeError("The intersection of c1 and c2 differs from the centres of c1 and c2")
    gens1 = canonical_generators(c1_derived, seed=seed)
    gens2 = canonical_generators(c2_derived, toral=[triple.h], dominant=triple.h, hints=[triple.e], seed=seed)
    pair = CentralizerPair(triple, c1, c2, c1_derived, c2_derived, centre, gens1, gens2)
    if pair.c.dim != c1_derived.dim + c2_derived.dim + centre.dim:
        raise RuntimeError("The derived parts and the centre do not form a direct sum")
    if is_zero(algebra.killing_matrix(pair.c.elements()).det()):
        raise RuntimeError("The Killing form is degenerate on c")
    return pair


# The module V


class ModuleDecomposition:
    """
    Irreducible summands of the Killing complement V of c.

    The toral elements are h_1..h_s of [c1, c1] + [c2, c2] (first the generators of [c1, c1]), followed by the basis
    t_1..t_d of the centre. ``weights[j]`` holds the eigenvalues of these s + d elements on the highest-weight vector
    v_j of the j-th summand. ``words[j]`` lists, for each basis vector of the summand, the lowering generators y_i
    applied in order to v_j.
    """

    def __init__(self, pair: CentralizerPair, generators1: CanonicalGenerators, generators2: CanonicalGenerators,
                 centre: list[Element], complement: Subalgebra, highest: list[Element],
                 weights: list[tuple[Fraction, ...]], bases: list[list[Element]], words: list[list[tuple[int, ...]]]):
        self.pair = pair
        self.algebra = pair.algebra
        self.generators1, self.generators2 = generators1, generators2
        self.h = generators1.h + generators2.h
        self.x = generators1.x + generators2.x
        self.y = generators1.y + generators2.y
        self.centre = centre
        self.complement = complement
        self.highest = highest
        self.weights = weights
        self.bases = bases
        self.words = words
        self.summands = [Subalgebra(self.algebra, b) for b in bases]
        self._adapted: Optional[tuple] = None

    def __repr__(self) -> str:
        return f"ModuleDecomposition({self.m} summands of dimensions {[len(b) for b in self.bases]})"

    @property
    def s(self) -> int:
        return len(self.h)

    @property
    def d(self) -> int:
        return len(self.centre)

    @property
    def m(self) -> int:
        return len(self.highest)

    def nu(self, i: int, j: int) -> Fraction:
        """Eigenvalue of the i-th toral element on v_j (0-based)."""
        return self.weights[j][i]

    def weight_strings(self) -> list[str]:
        """Weights in the table notation (c1 part; centre part; c2 part), simple components separated by commas."""
        ranks1 = _component_ranks(self.generators1.label)
        ranks2 = _component_ranks(self.generators2.label)
        rank1 = sum(ranks1)
        out = []
        for w in self.weights:
            parts = []
            if ranks1:
                parts.append(_format_components(w[:rank1], ranks1))
            if self.d:
                parts.append(",".join(str(_plain(v)) for v in w[self.s:]))
            parts.append(_format_components(w[rank1:self.s], ranks2))
            out.append("(" + ";".join(parts) + ")")
        return out

    def adapted_basis(self) -> tuple[list[Element], list[Optional[int]], list[int], ExactMatrix]:
        """
        Basis of the algebra adapted to c + V, with the generators of the module structure among its vectors.

        :returns: The basis; for each vector the summand it belongs to (None inside c); the positions of the
            generators x_i, y_i, t_k and v_j; the inverse of the basis matrix.
        """
        if self._adapted is None:
            basis: list[Element] = []
            owners: list[Optional[int]] = []
            generators: list[int] = []
            for gens in (self.generators1, self.generators2):
                if gens.rank == 0:
                    continue
                standard = gens.standard_algebra()
                rs = standard.root_system
                offset = len(basis)
                basis.extend(gens.embedding())
                owners.extend([None] * standard.dim)
                for alpha in rs.simple_roots:
                    generators.append(offset + standard.root_index(alpha))
                    generators.append(offset + standard.root_index(tuple(-c for c in alpha)))
            for t in self.centre:
                generators.append(len(basis))
                basis.append(t)
                owners.append(None)
            for j, vectors in enumerate(self.bases):
                generators.append(len(basis))
                basis.extend(vectors)
                owners.extend([j] * len(vectors))
            if len(basis) != self.algebra.dim:
                raise RuntimeError(f"Adapted basis has {len(basis)} vectors for an algebra of dimension "
                                   f"{self.algebra.dim}")
            matrix = ExactMatrix.from_columns([v.coords for v in basis], QQ_FIELD, nrows=self.algebra.dim)
            self._adapted = (basis, owners, generators, matrix.inverse())
        return self._adapted

    def rebased(self, match: WeightMatch) -> ModuleDecomposition:
        """The decomposition for relabelled generators, a new basis of the centre and the summands reordered."""
        gens1 = self.generators1.permuted(match.perm1) if self.generators1.rank else self.generators1
        gens2 = self.generators2.permuted(match.perm2)
        centre = []
        for row in match.transform:
            t = self.algebra.zero()
            for c, tk in zip(row, self.centre):
                if not is_zero(c):
                    t = t + c * tk
            centre.append(t)
        return _decompose(self.pair, gens1, gens2, centre, integral=False, order=match.targets)

    def to_dict(self) -> dict[str, Any]:
        return {"s": self.s, "d": self.d, "m": self.m, "dim_complement": self.complement.dim,
                "weights": [[str(v) for v in w] for w in self.weights], "table": self.weight_strings(),
                "dimensions": [len(b) for b in self.bases], "words": [[list(w) for w in ws] for ws in self.words],
                "centre": [t.to_dict() for t in self.centre]}


def _plain(v: Fraction) -> Any:
    return v.numerator if v.denominator == 1 else str(v)


def _format_components(values: Sequence[Fraction], ranks: Sequence[int]) -> str:
    out, k = [], 0
    for r in ranks:
        chunk = values[k:k + r]
        if all(v.denominator == 1 and 0 <= v <= 9 for v in chunk):
            out.append("".join(str(v.numerator) for v in chunk))
        else:
            out.append(" ".join(str(_plain(v)) for v in chunk))
        k += r
    return ",".join(out)


def _lowering_span(algebra: LieAlgebra, v: Element, lowering: Sequence[Element]) -> tuple[list[Element],
                                                                                          list[tuple[int, ...]]]:
    """Basis of the module generated by a highest-weight vector, reached by words in the lowering generators."""
    basis, words = [v], [()]
    k = 0
    while k < len(basis):
        for i, y in enumerate(lowering):
            u = algebra.bracket(y, basis[k])
            if u.is_zero():
                continue
            if coordinates([b.coords for b in basis], u.coords, QQ_FIELD) is None:
                basis.append(u)
                words.append(words[k] + (i,))
        k += 1
    return basis, words


def _decompose(pair: CentralizerPair, gens1: CanonicalGenerators, gens2: CanonicalGenerators,
               centre: list[Element], integral: bool = True,
               order: Optional[Sequence[tuple[Fraction, ...]]] = None) -> ModuleDecomposition:
    algebra = pair.algebra
    complement = pair.c.killing_orthogonal()
    if complement.dim + pair.c.dim != algebra.dim or complement.intersection(pair.c).dim != 0:
        raise RuntimeError("The algebra is not the direct sum of c and its Killing complement")
    h, x, y = gens1.h + gens2.h, gens1.x + gens2.x, gens1.y + gens2.y
    for z in h + x + y + centre:
        try:
            complement.ad_matrix(z)
        except ValueError:
            raise RuntimeError("The Killing complement of c is not stable under c") from None

    if x:
        stacked = complement.ad_matrix(x[0]).vstack(*[complement.ad_matrix(z) for z in x[1:]])
        primitive = Subalgebra(algebra, [complement.from_coords(c) for c in kernel(stacked)])
    else:
        primitive = complement
    toral = h + centre
    highest, weights = [], []
    for weight, vectors in joint_eigenspaces(primitive, toral):
        if len(vectors) > 1:
            raise MultiplicityError(f"Highest weight {[str(v) for v in weight]} occurs {len(vectors)} times in the "
                                    f"Killing complement")
        highest.append(_normalized(primitive.from_coords(vectors[0])))
        weights.append(tuple(weight))

    s = len(h)
    if integral and centre:
        # Primitive integral rows for the centre part.
        scaled = []
        for k, t in enumerate(centre):
            values = [w[s + k] for w in weights]
            denominator = math.lcm(*[v.denominator for v in values])
            numerator = math.gcd(*[int(v * denominator) for v in values]) or 1
            factor = Fraction(denominator, numerator)
            scaled.append(factor * t)
            weights = [w[:s + k] + (w[s + k] * factor,) + w[s + k + 1:] for w in weights]
        centre = scaled

    if order is not None:
        position = {w: k for k, w in enumerate(weights)}
        if sorted(position) != sorted(tuple(w) for w in order):
            raise RuntimeError("Requested summand order does not match the computed weights")
        index = [position[tuple(w)] for w in order]
    else:
        index = sorted(range(len(weights)), key=lambda j: weights[j])
    highest = [highest[j] for j in index]
    weights = [weights[j] for j in index]

    bases, words = [], []
    for v, w in zip(highest, weights):
        basis, word = _lowering_span(algebra, v, y)
        for k, t in enumerate(centre):
            if any(algebra.bracket(t, b) != w[s + k] * b for b in basis):
                raise RuntimeError("A centre element does not act by a scalar on an irreducible summand")
        bases.append(basis)
        words.append(word)
    if sum(len(b) for b in bases) != complement.dim:
        raise RuntimeError(f"Summands of total dimension {sum(len(b) for b in bases)} do not span the Killing "
                           f"complement of dimension {complement.dim}")
    return ModuleDecomposition(pair, gens1, gens2, centre, complement, highest, weights, bases, words)


class WeightMatch:
    """Relabelling of the generators, target order of the summands and change of basis of the centre."""

    def __init__(self, perm1: tuple[int, ...], perm2: tuple[int, ...], targets: list[tuple[Fraction, ...]],
                 transform: list[list[Fraction]]):
        self.perm1, self.perm2 = perm1, perm2
        self.targets = targets
        self.transform = transform

    def __repr__(self) -> str:
        return f"WeightMatch({self.perm1}, {self.perm2}, centre {self.transform})"


def parse_weight(text: str, ranks1: Sequence[int], d: int, ranks2: Sequence[int]) -> tuple[Fraction, ...]:
    """
    Weight in the table notation, e.g. '(10,01;-2,0;1000)', as values on h_1..h_s then on the centre basis.

    :raises ValueError: If the text does not fit the given component ranks.
    """
    parts = text.strip().strip("()").split(";")
    expected = (1 if ranks1 else 0) + (1 if d else 0) + 1
    if len(parts) != expected:
        raise ValueError(f"Weight {text!r} has {len(parts)} parts, expected {expected}")
    k = 0
    first: list[Fraction] = []
    if ranks1:
        first = _parse_components(parts[0], ranks1, text)
        k = 1
    centre: list[Fraction] = []
    if d:
        centre = [Fraction(v) for v in parts[k].split(",")]
        if len(centre) != d:
            raise ValueError(f"Weight {text!r} has {len(centre)} centre values, expected {d}")
        k += 1
    second = _parse_components(parts[k], ranks2, text)
    return tuple(first + second + centre)


def _parse_components(part: str, ranks: Sequence[int], text: str) -> list[Fraction]:
    chunks = part.split(",")
    if len(chunks) == 1 and len(ranks) > 1 and len(part.strip()) == sum(ranks):
        # components written without separators, e.g. '10' for 2A1
        text_part = part.strip()
        offsets = list(itertools.accumulate(ranks, initial=0))
        chunks = [text_part[offsets[k]:offsets[k + 1]] for k in range(len(ranks))]
    if len(chunks) != len(ranks):
        raise ValueError(f"Weight {text!r} has {len(chunks)} simple components, expected {len(ranks)}")
    values = []
    for chunk, rank in zip(chunks, ranks):
        chunk = chunk.strip()
        entries = chunk.split() if " " in chunk else list(chunk)
        if len(entries) != rank:
            raise ValueError(f"Weight {text!r}: component {chunk!r} does not have {rank} labels")
        values.extend(Fraction(v) for v in entries)
    return values


def match_weights(md: ModuleDecomposition, rows: Sequence[str]) -> Optional[WeightMatch]:
    """
    Match computed weights with rows in the table notation.

    The generators may be relabelled by diagram symmetries of [c1, c1] and [c2, c2], the summands reordered, and the
    basis of the centre changed by an invertible rational matrix.

    :returns: The match, or None.
    """
    ranks1 = _component_ranks(md.generators1.label)
    ranks2 = _component_ranks(md.generators2.label)
    targets = [parse_weight(r, ranks1, md.d, ranks2) for r in rows]
    if len(targets) != md.m:
        return None
    s, d = md.s, md.d
    rank1 = md.generators1.rank
    symmetries1 = cartan_symmetries(md.generators1.cartan_matrix) if rank1 else [()]
    symmetries2 = cartan_symmetries(md.generators2.cartan_matrix)
    centre_rows = [w[s:] for w in md.weights]
    for perm1, perm2 in itertools.product(symmetries1, symmetries2):
        perm = list(perm1) + [rank1 + p for p in perm2]
        ours = [tuple(w[perm[i]] for i in range(s)) for w in md.weights]
        found = _assign(ours, centre_rows, targets, s, d)
        if found is not None:
            return WeightMatch(tuple(perm1), tuple(perm2), targets, found)
    return None


def _assign(ours: list[tuple], centre_rows: list[tuple], targets: list[tuple], s: int,
            d: int) -> Optional[list[list[Fraction]]]:
    """Backtracking over bijections that agree on the derived part, then a linear solve for the centre."""
    m = len(targets)
    chosen: list[int] = []

    def transform() -> Optional[list[list[Fraction]]]:
        if d == 0:
            return []
        a = ExactMatrix.from_rows([[QQ_FIELD(v) for v in centre_rows[j]] for j in chosen], QQ_FIELD)
        rows = []
        for i in range(d):
            sol = solve_linear(a, [QQ_FIELD(targets[l][s + i]) for l in range(m)])
            if sol is None:
                return None
            rows.append([QQ_FIELD.to_rational(c) for c in sol])
        if is_zero(ExactMatrix.from_rows([[QQ_FIELD(v) for v in r] for r in rows], QQ_FIELD).det()):
            return None
        return rows

    def extend() -> Optional[list[list[Fraction]]]:
        l = len(chosen)
        if l == m:
            return transform()
        for j in range(m):
            if j not in chosen and ours[j] == targets[l][:s]:
                chosen.append(j)
                found = extend()
                if found is not None:
                    return found
                chosen.pop()
        return None

    return extend()


def killing_complement(pair: CentralizerPair, rows: Optional[Sequence[str]] = None) -> ModuleDecomposition:
    """
    Decompose the Killing complement of c into irreducible summands.

    Highest-weight vectors are the joint eigenvectors of the toral elements in the common kernel of the x_i. By
    default the basis of the centre is scaled to give primitive integral weight rows.

    :param pair: The centralizer pair.
    :param rows: Optional. Weights in the table notation; the generators, the basis of the centre and the summand
        order are then chosen to reproduce them exactly.

    :raises MultiplicityError: If two summands have the same highest weight.
    :raises ValueError: If ``rows`` cannot be matched.
    """
    md = _decompose(pair, pair.generators1, pair.generators2, pair.centre.elements())
    if rows is None:
        return md
    match = match_weights(md, rows)
    if match is None:
        raise ValueError(f"Weights {md.weight_strings()} do not match {list(rows)}")
    return md.rebased(match)


# Restrictions to the derived parts


class Restriction:
    """
    Images of canonical generators (h_i, x_i, y_i) of [c1, c1] or [c2, c2] under a candidate automorphism.

    ``perm`` is the diagram symmetry behind it; ``source`` the automorphism of the standard algebra it comes from.
    """

    def __init__(self, h: Sequence[Element], x: Sequence[Element], y: Sequence[Element], perm: tuple[int, ...],
                 source: Optional[Automorphism] = None):
        self.h, self.x, self.y = list(h), list(x), list(y)
        self.perm = tuple(perm)
        self.source = source

    def __repr__(self) -> str:
        return f"Restriction(diagram {self.perm})"

    @classmethod
    def identity(cls, gens: CanonicalGenerators) -> Restriction:
        return cls(gens.h, gens.x, gens.y, tuple(range(gens.rank)))

    @property
    def field(self) -> ScalarField:
        return common_field(*[v.field for v in self.h + self.x + self.y])

    def to_dict(self) -> dict[str, Any]:
        data = {"diagram": list(self.perm)}
        if self.source is not None:
            data["automorphism"] = self.source.to_dict()
        return data


def diagram_restrictions(gens: CanonicalGenerators) -> list[Restriction]:
    """Diagram automorphisms of a semisimple subalgebra, the empty restriction for the zero subalgebra."""
    if gens.rank == 0:
        return [Restriction([], [], [], ())]
    return [Restriction([gens.h[p] for p in perm], [gens.x[p] for p in perm], [gens.y[p] for p in perm], perm)
            for perm in cartan_symmetries(gens.cartan_matrix)]


def triple_stabilizer_restrictions(pair: CentralizerPair, budget: int = DEFAULT_BUDGET, jobs: int = 1,
                                   seed: int = DEFAULT_SEED, verbose: bool = False,
                                   generators: Optional[CanonicalGenerators] = None) -> list[Restriction]:
    """
    Automorphisms of [c2, c2] fixing the triple, computed in the standard algebra of its type.

    :param generators: Optional. Canonical generators of [c2, c2] the restrictions refer to. Defaults to those of
        the pair.

    :raises Inconclusive: If a cell system is undecided.
    """
    gens = generators if generators is not None else pair.generators2
    standard = gens.standard_algebra()
    std = standard_generators(standard)
    to_standard = isomorphism(gens, std)
    back = to_standard.inverse()
    local = Sl2Triple(*(to_standard(z) for z in pair.triple), label=pair.triple.label).check()
    inner = finite_stabilizer(local, budget, jobs, seed, verbose)
    outer = outer_stabilizer(local, inner, budget, jobs, seed, verbose)
    identity = tuple(range(gens.rank))
    labelled = [(identity, phi) for phi in inner]
    remaining = list(outer)
    for status in outer.cells:
        for _ in range(status["solutions"]):
            labelled.append((tuple(status["diagram"]), remaining.pop(0)))
    out = []
    for perm, phi in labelled:
        out.append(Restriction([back(phi(z)) for z in std.h], [back(phi(z)) for z in std.x],
                               [back(phi(z)) for z in std.y], perm, phi))
    return out


def restriction_candidates(pair: CentralizerPair, budget: int = DEFAULT_BUDGET, jobs: int = 1,
                           seed: int = DEFAULT_SEED, verbose: bool = False,
                           decomposition: Optional[ModuleDecomposition] = None) -> tuple[list[Restriction],
                                                                                          list[Restriction]]:
    """
    Candidate restrictions to [c1, c1] (its diagram automorphisms) and to [c2, c2] (the stabilizer of the triple
    in its automorphism group).

    :param decomposition: Optional. Module decomposition whose (possibly relabelled) generators the restrictions
        refer to. Defaults to the generators of the pair.

    :raises Inconclusive: If the stabilizer inside [c2, c2] cannot be decided.
    """
    gens1, gens2 = ((decomposition.generators1, decomposition.generators2) if decomposition is not None
                    else (pair.generators1, pair.generators2))
    thetas = diagram_restrictions(gens1)
    etas = triple_stabilizer_restrictions(pair, budget, jobs, seed, verbose, generators=gens2)
    if verbose:
        print(f"{len(thetas)} restrictions to {gens1.label}, {len(etas)} to {gens2.label}")
    return thetas, etas


# Extension data


class BarredData:
    """Images h_i, x_i, y_i under (theta, eta) and the highest-weight vectors v_j they define in each summand."""

    def __init__(self, md: ModuleDecomposition, theta: Restriction, eta: Restriction):
        self.h = theta.h + eta.h
        self.x = theta.x + eta.x
        self.y = theta.y + eta.y
        self.field = common_field(theta.field, eta.field)
        algebra = md.algebra
        self.highest: list[Element] = []
        self.weights: list[tuple[Fraction, ...]] = []
        for j, summand in enumerate(md.summands):
            space = _over(summand, self.field)
            if self.x:
                stacked = space.ad_matrix(self.x[0]).vstack(*[space.ad_matrix(z) for z in self.x[1:]])
                vectors = kernel(stacked)
            else:
                vectors = kernel(ExactMatrix.zeros(1, space.dim, self.field))
            if len(vectors) != 1:
                raise RuntimeError(f"Summand {j} has {len(vectors)} highest-weight vectors for the image generators")
            v = _normalized(space.from_coords(vectors[0]))
            self.highest.append(v)
            self.weights.append(tuple(_eigenvalue(hb, v) for hb in self.h))
            for k, t in enumerate(md.centre):
                if algebra.bracket(t, v) != md.weights[j][md.s + k] * v:
                    raise RuntimeError("The centre acts by different scalars on the two highest-weight vectors")

    def to_dict(self) -> dict[str, Any]:
        return {"weights": [[str(v) for v in w] for w in self.weights], "field": self.field.conductor}


def permutation_candidates(md: ModuleDecomposition, theta: Restriction, eta: Restriction,
                           barred: Optional[BarredData] = None) -> list[tuple[int, ...]]:
    """
    Permutations pi of the summands such that the image of h_i acts on the image highest-weight vector of summand
    pi(j) by the eigenvalue of h_i on v_j, for the generators of the derived parts.

    An empty list proves that no extension of (theta, eta) exists.
    """
    barred = barred or BarredData(md, theta, eta)
    s = md.s
    options = [[l for l in range(md.m) if barred.weights[l] == md.weights[j][:s]
                and len(md.bases[l]) == len(md.bases[j])] for j in range(md.m)]
    result: list[tuple[int, ...]] = []
    image: list[int] = []

    def extend():
        j = len(image)
        if j == md.m:
            result.append(tuple(image))
            return
        for l in options[j]:
            if l not in image:
                image.append(l)
                extend()
                image.pop()

    extend()
    return result


def torus_restriction(md: ModuleDecomposition, pi: Sequence[int]) -> Optional[list[list[Fraction]]]:
    """
    Matrix a with sigma(t_i) = sum_k a_ik t_k for an extension permuting the summands by pi.

    It solves sum_k a_ik nu(s + k, j) = nu(s + i, pi^-1(j)) for all j.

    :returns: The unique solution, an empty matrix when the centre is zero, or None if there is no solution.
    """
    s, d, m = md.s, md.d, md.m
    if d == 0:
        return []
    inverse = [0] * m
    for j, l in enumerate(pi):
        inverse[l] = j
    rows = ExactMatrix.from_rows([[QQ_FIELD(md.weights[j][s + k]) for k in range(d)] for j in range(m)], QQ_FIELD)
    if rows.rank() != d:
        raise RuntimeError("The centre weights of the summands do not span the dual of the centre")
    a = []
    for i in range(d):
        sol = solve_linear(rows, [QQ_FIELD(md.weights[inverse[j]][s + i]) for j in range(m)])
        if sol is None:
            return None
        a.append([QQ_FIELD.to_rational(c) for c in sol])
    return a


def pinned_indices(md: ModuleDecomposition) -> list[int]:
    """Smallest summand indices whose centre weights span the dual of the centre."""
    chosen: list[int] = []
    for j in range(md.m):
        if len(chosen) == md.d:
            break
        trial = chosen + [j]
        rows = ExactMatrix.from_rows([[QQ_FIELD(md.weights[k][md.s + i]) for i in range(md.d)] for k in trial],
                                     QQ_FIELD)
        if rows.rank() == len(trial):
            chosen = trial
    if len(chosen) != md.d:
        raise RuntimeError("The centre weights of the summands do not span the dual of the centre")
    return chosen


class ExtensionProblem:
    """
    Automorphisms restricting to (theta, eta), acting on the centre by a and sending v_j to lambda_j times the image
    highest-weight vector of summand pi(j).

    The map is fixed on the adapted basis of :meth:`ModuleDecomposition.adapted_basis`; the conditions
    sigma([g, b]) = [sigma(g), sigma(b)] for generators g and basis vectors b are polynomial in the lambda_j.
    """

    def __init__(self, md: ModuleDecomposition, theta: Restriction, eta: Restriction, pi: Sequence[int],
                 a: Sequence[Sequence[Fraction]], barred: Optional[BarredData] = None, labels: tuple = ()):
        self.md = md
        self.theta, self.eta = theta, eta
        self.pi = tuple(pi)
        self.a = [list(row) for row in a]
        self.barred = barred or BarredData(md, theta, eta)
        self.labels = labels
        self.pinned = pinned_indices(md)
        self.variables = [f"l{j + 1}" for j in range(md.m)]
        self._images: Optional[list[Element]] = None

    def __repr__(self) -> str:
        return f"ExtensionProblem(pi={self.pi}, pinned {[j + 1 for j in self.pinned]})"

    def images(self) -> list[Element]:
        """Image of each adapted basis vector, without the scalings lambda_j."""
        if self._images is None:
            md, algebra = self.md, self.md.algebra
            barred = self.barred
            images: list[Element] = []
            rank1 = md.generators1.rank
            for gens, restriction in ((md.generators1, self.theta), (md.generators2, self.eta)):
                if gens.rank == 0:
                    continue
                standard = gens.standard_algebra()
                images.extend(standard.chevalley_images(algebra, restriction.h, restriction.x, restriction.y))
            for row in self.a:
                t = algebra.zero()
                for c, tk in zip(row, md.centre):
                    if not is_zero(c):
                        t = t + c * tk
                images.append(t)
            lowering = barred.y
            for j, words in enumerate(md.words):
                start = barred.highest[self.pi[j]]
                for word in words:
                    v = start
                    for i in word:
                        v = algebra.bracket(lowering[i], v)
                    images.append(v)
            if len(images) != algebra.dim or rank1 + md.generators2.rank != md.s:
                raise RuntimeError("Image basis does not match the adapted basis")
            self._images = images
        return self._images

    def system(self) -> PolySystem:
        md, algebra = self.md, self.md.algebra
        basis, owners, generators, inverse = md.adapted_basis()
        images = self.images()
        field = common_field(self.barred.field, *[v.field for v in images])
        variables = lex_order(self.variables)
        system = PolySystem([], variables, field, "lex", [(v, inverse_name(v)) for v in variables])
        ring = system.ring
        lam = [system.gen(v) for v in self.variables]
        table = algebra.table(field)
        vectors = [[field.embed(c, v.field) for c in v.coords] for v in images]

        def scale(owner):
            return ring.one if owner is None else lam[owner]

        polys = {}
        for g in generators:
            for p in range(algebra.dim):
                coords = inverse.apply(algebra.bracket(basis[g], basis[p]).coords)
                lhs: dict[Optional[int], list] = {}
                for r, c in enumerate(coords):
                    if is_zero(c):
                        continue
                    c = field.embed(c, QQ_FIELD)
                    acc = lhs.setdefault(owners[r], [field.zero] * algebra.dim)
                    for k, v in enumerate(vectors[r]):
                        if v:
                            acc[k] += c * v
                rhs = algebra.bracket_vectors(vectors[g], vectors[p], field.zero, table)
                factor = scale(owners[g]) * scale(owners[p])
                for k in range(algebra.dim):
                    poly = ring.zero
                    for owner, acc in lhs.items():
                        if acc[k]:
                            poly += scale(owner) * ring.ground_new(acc[k])
                    if rhs[k]:
                        poly -= factor * ring.ground_new(rhs[k])
                    if poly:
                        polys[poly.monic()] = None
        pins = [lam[j] - 1 for j in self.pinned]
        return system.with_polys(list(polys) + pins)

    def automorphisms(self, solutions: SolutionSet) -> list[Automorphism]:
        """
        Certified automorphisms for the solutions, restricted to those in the adjoint group.

        :raises RuntimeError: If a solution does not fix the triple or does not stabilize c1', c2' and the centre.
        """
        md, algebra = self.md, self.md.algebra
        _, owners, _, inverse = md.adapted_basis()
        images = self.images()
        pair = md.pair
        out = []
        for solution in solutions:
            field = solutions.field
            columns = []
            for v, owner in zip(images, owners):
                c = field.one if owner is None else solution[self.variables[owner]]
                columns.append([c * field.embed(x, v.field) for x in v.coords])
            matrix = ExactMatrix.from_columns(columns, field, nrows=algebra.dim) @ inverse.convert_to(field)
            sigma = Automorphism(algebra, matrix).certify()
            if not sigma.fixes(*pair.triple):
                raise RuntimeError(f"Extension for pi={self.pi} does not fix the triple")
            for part in (pair.c1_derived, pair.c2_derived, pair.centre):
                if part.dim and not sigma.maps_into(part):
                    raise RuntimeError(f"Extension for pi={self.pi} does not stabilize c1', c2' and the centre")
            if algebra.diagram_symmetries()[1:] and not is_inner(sigma, order_bound=None):
                continue
            out.append(sigma)
        return out

    def status(self, solutions: SolutionSet, kept: Optional[int] = None) -> dict[str, Any]:
        return {"theta": self.labels[0] if self.labels else None, "eta": self.labels[1] if self.labels else None,
                "pi": [l + 1 for l in self.pi], "a": [[str(c) for c in row] for row in self.a],
                "status": solutions.status, "solutions": len(solutions), "kept": kept, "reason": solutions.reason}


def extension_solve(md: ModuleDecomposition, theta: Restriction, eta: Restriction, pi: Sequence[int],
                    a: Sequence[Sequence[Fraction]], budget: int = DEFAULT_BUDGET,
                    barred: Optional[BarredData] = None) -> list[Automorphism]:
    """
    All stabilizer elements with a given extension datum, with lambda_j = 1 on the pinned summands.

    :raises Inconclusive: If the system is undecided.
    """
    problem = ExtensionProblem(md, theta, eta, pi, a, barred)
    return problem.automorphisms(solve(problem.system(), budget).require())


# The component group


class DoubleCentralizerResult:
    """Component group with the intermediate data of the double-centralizer route."""

    def __init__(self, pair: CentralizerPair, decomposition: ModuleDecomposition, thetas: list[Restriction],
                 etas: list[Restriction], statuses: list[dict[str, Any]], group: ComponentGroup):
        self.pair = pair
        self.decomposition = decomposition
        self.thetas, self.etas = thetas, etas
        self.statuses = statuses
        self.group = group

    def __repr__(self) -> str:
        return f"DoubleCentralizerResult({self.pair!r}, {self.group!r})"

    def to_dict(self) -> dict[str, Any]:
        return report(self)


def component_group(triple: Sl2Triple, budget: int = DEFAULT_BUDGET, jobs: int = 1, seed: int = DEFAULT_SEED,
                    verbose: bool = False, rows: Optional[Sequence[str]] = None) -> DoubleCentralizerResult:
    """
    Component group of the stabilizer of a triple whose centralizer has positive dimension.

    :param triple: The triple.
    :param budget: Reduction budget per polynomial system.
    :param jobs: Number of worker processes for the extension systems.
    :param seed: Seed for canonical generators.
    :param verbose: Print progress.
    :param rows: Optional. Table weights to align the module data with (see :func:`killing_complement`).

    :raises Inconclusive: If some extension system or membership test is undecided; the exception carries the
        status of every extension datum.
    """
    pair = centralizer_pair(triple, seed)
    md = killing_complement(pair, rows)
    if verbose:
        print(f"c1' = {pair.generators1.label}, d = {pair.d}, c2' = {pair.generators2.label}; "
              f"{md.m} summands {md.weight_strings()}")
    thetas, etas = restriction_candidates(pair, budget, jobs, seed, verbose, decomposition=md)

    statuses: list[dict[str, Any]] = []
    problems: list[ExtensionProblem] = []
    for (u, theta), (v, eta) in tqdm(list(itertools.product(enumerate(thetas), enumerate(etas))),
                                     desc="Extension data", disable=not verbose):
        barred = BarredData(md, theta, eta)
        perms = permutation_candidates(md, theta, eta, barred)
        if not perms:
            statuses.append({"theta": u, "eta": v, "pi": None, "status": "unsat", "solutions": 0, "kept": 0,
                             "reason": "No permutation of the summands"})
        for pi in perms:
            a = torus_restriction(md, pi)
            if a is None:
                statuses.append({"theta": u, "eta": v, "pi": [l + 1 for l in pi], "status": "unsat",
                                 "solutions": 0, "kept": 0, "reason": "No linear map on the centre"})
                continue
            problems.append(ExtensionProblem(md, theta, eta, pi, a, barred, labels=(u, v)))

    results = solve_many([p.system() for p in problems], budget, jobs=jobs, verbose=verbose)
    candidates: list[Automorphism] = []
    for problem, result in zip(problems, results):
        found = [] if result.is_inconclusive else problem.automorphisms(result)
        statuses.append(problem.status(result, len(found)))
        candidates.extend(found)
    undecided = [s for s in statuses if s["status"] == "inconclusive"]
    if undecided:
        raise Inconclusive(f"{len(undecided)} of {len(statuses)} extension data inconclusive", statuses)

    component = IdentityComponent(pair.c1, budget, seed)
    known: dict[tuple, bool] = {}

    def equal(a: Automorphism, b: Automorphism) -> bool:
        if a == b:
            return True
        quotient = b.inverse() @ a
        key = quotient.key()
        if key not in known:
            known[key] = component.contains(quotient)
        return known[key]

    identity = triple.algebra.identity()
    elements = [identity]
    for sigma in tqdm(candidates, desc="Removing duplicates", disable=not verbose):
        if not any(equal(sigma, r) for r in elements):
            elements.append(sigma)
    generators = generating_set(elements[1:], _compose, equal, identity)
    group = ComponentGroup(elements, generators, _compose, equal)
    group._meta["route"] = "doublecent"
    if verbose:
        print(f"{len(candidates)} extensions, {group.order} components: {group.label}")
    return DoubleCentralizerResult(pair, md, thetas, etas, statuses, group)


def report(result: DoubleCentralizerResult) -> dict[str, Any]:
    """Centralizer summary, weight table, summand word bases, extension statuses and the group, as plain data."""
    return {"pair": result.pair.to_dict(), "module": result.decomposition.to_dict(),
            "thetas": [t.to_dict() for t in result.thetas], "etas": [e.to_dict() for e in result.etas],
            "extensions": result.statuses, "group": result.group.to_dict()}

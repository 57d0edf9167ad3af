"""
Root systems from Cartan matrices, Weyl group actions on the rational Cartan space, and dominance normalization.

Simple roots are numbered as in Bourbaki (1-based in labels and Weyl words, 0-based in arrays). The Cartan matrix
entry ``C[i, j]`` is the integer <alpha_i, alpha_j^vee>, so that [h_j, x_i] = C[i, j] x_i.
"""
from __future__ import annotations

import itertools
import math
import re
from collections import deque
from fractions import Fraction
from typing import Callable, Optional, Sequence

import numpy as np

Root = tuple[int, ...]
# Weyl words are tuples of 1-based simple indices, applied from left to right.
WeylWord = tuple[int, ...]
CartanElement = tuple[Fraction, ...]

_LABEL_PATTERN = re.compile(r"^(\d*)([A-G])(\d+)$")

_EXCEPTIONAL_DEGREES = {("E", 6): (2, 5, 6, 8, 9, 12), ("E", 7): (2, 6, 8, 10, 12, 14, 18),
                        ("E", 8): (2, 8, 12, 14, 18, 20, 24, 30), ("F", 4): (2, 6, 8, 12), ("G", 2): (2, 6)}


def _simple_cartan_matrix(letter: str, rank: int) -> np.ndarray:
    """Cartan matrix of a simple type, in Bourbaki numbering."""
    valid = {"A": 1, "B": 2, "C": 2, "D": 4, "E": 6, "F": 4, "G": 2}
    if letter not in valid or rank < valid[letter]:
        raise ValueError(f"Invalid type {letter}{rank}. Expected one of A1.., B2.., C2.., D4.., E6-E8, F4, G2")
    if (letter == "E" and rank > 8) or (letter == "F" and rank != 4) or (letter == "G" and rank != 2):
        raise ValueError(f"Invalid type {letter}{rank}. Expected one of A1.., B2.., C2.., D4.., E6-E8, F4, G2")

    matrix = 2 * np.eye(rank, dtype=int)
    if letter == "G":
        # alpha_1 is the short root.
        return np.array([[2, -1], [-3, 2]])
    if letter == "E":
        edges = [(0, 2), (1, 3), (2, 3)] + [(k, k + 1) for k in range(3, rank - 1)]
    elif letter == "D":
        edges = [(k, k + 1) for k in range(rank - 2)] + [(rank - 3, rank - 1)]
    else:
        edges = [(k, k + 1) for k in range(rank - 1)]
    for i, j in edges:
        matrix[i, j] = matrix[j, i] = -1
    if letter == "B":
        matrix[rank - 2, rank - 1] = -2
    elif letter == "C":
        matrix[rank - 1, rank - 2] = -2
    elif letter == "F":
        matrix[1, 2] = -2
    return matrix


def parse_label(label: str) -> list[tuple[str, int]]:
    """
    Split a type label such as "A1+D4", "2A1" or "0" into its simple components.

    :returns: List of (letter, rank) pairs.
    """
    label = label.replace(" ", "")
    if label in ("0", ""):
        return []
    components = []
    for part in label.split("+"):
        match = _LABEL_PATTERN.match(part)
        if match is None:
            raise ValueError(f"Invalid type label: {label!r}. Expected e.g. 'E6', 'A1+A2' or '2A1'")
        count = int(match.group(1)) if match.group(1) else 1
        letter, rank = match.group(2), int(match.group(3))
        _simple_cartan_matrix(letter, rank)
        components.extend([(letter, rank)] * count)
    return components


def invariant_degrees(letter: str, rank: int) -> tuple[int, ...]:
    """Degrees of the basic invariants of the Weyl group of a simple type."""
    _simple_cartan_matrix(letter, rank)
    if letter == "A":
        return tuple(range(2, rank + 2))
    if letter in "BC":
        return tuple(range(2, 2 * rank + 1, 2))
    if letter == "D":
        return tuple(range(2, 2 * rank - 1, 2)) + (rank,)
    return _EXCEPTIONAL_DEGREES[(letter, rank)]


def cartan_matrix(label: str) -> np.ndarray:
    """Cartan matrix of a (possibly non-simple) type label, block diagonal in the label's order."""
    blocks = [_simple_cartan_matrix(letter, rank) for letter, rank in parse_label(label)]
    size = sum(b.shape[0] for b in blocks)
    matrix = np.zeros((size, size), dtype=int)
    offset = 0
    for block in blocks:
        n = block.shape[0]
        matrix[offset:offset + n, offset:offset + n] = block
        offset += n
    return matrix


def format_label(components: Sequence[tuple[str, int]]) -> str:
    """Inverse of :func:`parse_label`: sorted, with repeated components collected as '2A1'."""
    if not components:
        return "0"
    counts: dict[tuple[str, int], int] = {}
    for comp in components:
        counts[comp] = counts.get(comp, 0) + 1
    parts = []
    for (letter, rank) in sorted(counts):
        count = counts[(letter, rank)]
        parts.append(f"{count if count > 1 else ''}{letter}{rank}")
    return "+".join(parts)


def _components(matrix: np.ndarray) -> list[list[int]]:
    """Connected components of the Dynkin graph, each sorted."""
    n = matrix.shape[0]
    seen: set[int] = set()
    comps = []
    for start in range(n):
        if start in seen:
            continue
        queue = deque([start])
        comp = []
        seen.add(start)
        while queue:
            i = queue.popleft()
            comp.append(i)
            for j in range(n):
                if j not in seen and matrix[i, j] != 0:
                    seen.add(j)
                    queue.append(j)
        comps.append(sorted(comp))
    return comps


def _match(target: np.ndarray, matrix: np.ndarray, nodes: Sequence[int]) -> Optional[list[int]]:
    """Find an ordering of ``nodes`` such that ``matrix`` restricted to it equals ``target``."""
    n = len(nodes)
    order: list[int] = []

    def extend() -> bool:
        k = len(order)
        if k == n:
            return True
        for node in nodes:
            if node in order:
                continue
            if matrix[node, node] != target[k, k]:
                continue
            if all(matrix[node, order[j]] == target[k, j] and matrix[order[j], node] == target[j, k]
                   for j in range(k)):
                order.append(node)
                if extend():
                    return True
                order.pop()
        return False

    return list(order) if extend() else None


def identify_cartan_matrix(matrix: np.ndarray) -> tuple[str, list[int]]:
    """
    Recognize the Cartan type of a Cartan matrix given in an arbitrary node order.

    :param matrix: Square integer matrix.

    :raises ValueError: If the matrix is not a Cartan matrix of finite type.

    :returns: The type label and the list of original node indices in Bourbaki order (components in label order).
    """
    matrix = np.asarray(matrix, dtype=int)
    found = []
    for comp in _components(matrix):
        rank = len(comp)
        candidates = [("A", rank), ("B", rank), ("C", rank), ("D", rank), ("E", rank), ("F", rank), ("G", rank)]
        for letter, r in candidates:
            try:
                target = _simple_cartan_matrix(letter, r)
            except ValueError:
                continue
            # B2 and C2 coincide up to renumbering; keep B2.
            if letter == "C" and r == 2:
                continue
            order = _match(target, matrix, comp)
            if order is not None:
                found.append(((letter, r), order))
                break
        else:
            raise ValueError(f"Not a Cartan matrix of finite type: {matrix.tolist()}")
    found.sort(key=lambda item: item[0])
    label = format_label([comp for comp, _ in found])
    return label, [node for _, order in found for node in order]


def cartan_symmetries(matrix: np.ndarray) -> list[tuple[int, ...]]:
    """
    All node permutations preserving a Cartan matrix, including swaps of isomorphic simple components.

    :returns: Permutations as tuples ``p`` with node i sent to ``p[i]``; the identity comes first.
    """
    matrix = np.asarray(matrix, dtype=int)
    n = matrix.shape[0]
    result = []
    image: list[int] = []

    def extend():
        k = len(image)
        if k == n:
            result.append(tuple(image))
            return
        for node in range(n):
            if node in image:
                continue
            if all(matrix[node, image[j]] == matrix[k, j] and matrix[image[j], node] == matrix[j, k]
                   for j in range(k)):
                image.append(node)
                extend()
                image.pop()

    extend()
    result.sort(key=lambda p: p != tuple(range(n)))
    return result


class RootSystem:
    """
    Root system of a Cartan matrix of finite type.

    Roots are integer coefficient tuples over the simple roots.
    """

    def __init__(self, cartan: np.ndarray, label: Optional[str] = None):
        """
        Build the positive roots by root strings.

        :param cartan: Cartan matrix <alpha_i, alpha_j^vee>.
        :param label: Type label. Recognized from the matrix if not given.
        """
        cartan = np.asarray(cartan, dtype=int)
        if cartan.ndim != 2 or cartan.shape[0] != cartan.shape[1]:
            raise ValueError(f"Cartan matrix must be square, got shape {cartan.shape}")
        if label is None:
            label = identify_cartan_matrix(cartan)[0] if cartan.shape[0] > 0 else "0"
        else:
            # Raises for matrices of non-finite type.
            identify_cartan_matrix(cartan)
        self.cartan_matrix = cartan
        self.label = label
        self.rank = cartan.shape[0]
        self.lengths = self._root_lengths()
        self.positive_roots: list[Root] = self._positive_roots()
        self._positive_index = {r: k for k, r in enumerate(self.positive_roots)}
        self.roots: list[Root] = self.positive_roots + [tuple(-c for c in r) for r in self.positive_roots]
        self._root_set = set(self.roots)

    @classmethod
    def from_type(cls, label: str) -> RootSystem:
        label = label.replace(" ", "") or "0"
        return cls(cartan_matrix(label), label=label)

    def __repr__(self) -> str:
        return f"RootSystem({self.label})"

    @property
    def simple_roots(self) -> list[Root]:
        return [tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank)]

    def _root_lengths(self) -> list[Fraction]:
        """Squared lengths (alpha_i, alpha_i), long roots of each component having length 2."""
        lengths: list[Optional[Fraction]] = [None] * self.rank
        for comp in _components(self.cartan_matrix):
            lengths[comp[0]] = Fraction(1)
            queue = deque([comp[0]])
            while queue:
                i = queue.popleft()
                for j in comp:
                    if lengths[j] is None and self.cartan_matrix[i, j] != 0:
                        lengths[j] = lengths[i] * Fraction(int(self.cartan_matrix[j, i]), int(self.cartan_matrix[i, j]))
                        queue.append(j)
            longest = max(lengths[i] for i in comp)
            for i in comp:
                lengths[i] = lengths[i] * 2 / longest
        return lengths

    def _positive_roots(self) -> list[Root]:
        roots = list(self.simple_roots)
        known = set(roots)
        layer = list(roots)
        while layer:
            next_layer = []
            for beta in layer:
                for i in range(self.rank):
                    # p = largest k with beta - k alpha_i a root
                    p = 0
                    while True:
                        lowered = tuple(c - (p + 1) * (j == i) for j, c in enumerate(beta))
                        if lowered in known:
                            p += 1
                        else:
                            break
                    q = p - self.pairing(beta, i)
                    if q > 0:
                        raised = tuple(c + (j == i) for j, c in enumerate(beta))
                        if raised not in known:
                            known.add(raised)
                            next_layer.append(raised)
            roots.extend(sorted(next_layer, reverse=True))
            layer = next_layer
        return sorted(roots, key=lambda r: (sum(r), tuple(-c for c in r)))

    def pairing(self, beta: Sequence[int], i: int) -> int:
        """<beta, alpha_i^vee> for a root (or weight) given over the simple roots."""
        return int(sum(int(beta[k]) * int(self.cartan_matrix[k, i]) for k in range(self.rank)))

    def inner(self, beta: Sequence[int], gamma: Sequence[int]) -> Fraction:
        """Symmetric form (beta, gamma)."""
        total = Fraction(0)
        for i in range(self.rank):
            if beta[i] == 0:
                continue
            for j in range(self.rank):
                if gamma[j] != 0 and self.cartan_matrix[i, j] != 0:
                    total += beta[i] * gamma[j] * self.cartan_matrix[i, j] * self.lengths[j] / 2
        return total

    def is_root(self, beta: Sequence[int]) -> bool:
        return tuple(beta) in self._root_set

    def is_positive(self, beta: Sequence[int]) -> bool:
        return tuple(beta) in self._positive_index

    def index_of_positive(self, beta: Sequence[int]) -> int:
        return self._positive_index[tuple(beta)]

    def height(self, beta: Sequence[int]) -> int:
        return int(sum(beta))

    def coroot(self, beta: Sequence[int]) -> tuple[int, ...]:
        """Coefficients of beta^vee over the simple coroots."""
        norm = self.inner(beta, beta)
        coeffs = [beta[k] * self.lengths[k] / norm for k in range(self.rank)]
        if any(c.denominator != 1 for c in coeffs):
            raise RuntimeError(f"Non-integral coroot for {beta}")
        return tuple(int(c) for c in coeffs)

    def highest_root(self) -> Root:
        return self.positive_roots[-1]

    # Cartan elements

    def simple_values(self, h: Sequence) -> list[Fraction]:
        """alpha_i(h) for h given in coordinates over h_1, ..., h_l."""
        return [sum((Fraction(self.cartan_matrix[i, j]) * Fraction(h[j]) for j in range(self.rank)), Fraction(0))
                for i in range(self.rank)]

    def root_value(self, beta: Sequence[int], h: Sequence) -> Fraction:
        values = self.simple_values(h)
        return sum((beta[i] * values[i] for i in range(self.rank)), Fraction(0))

    def coreflection(self, i: int, h: Sequence) -> CartanElement:
        """
        Apply s_i^vee(h) = h - alpha_i(h) h_i.

        :param i: Simple index, 1-based.
        :param h: Coordinates over h_1, ..., h_l.
        """
        if not 1 <= i <= self.rank:
            raise ValueError(f"Simple index {i} out of range 1..{self.rank}")
        h = [Fraction(c) for c in h]
        value = self.simple_values(h)[i - 1]
        h[i - 1] -= value
        return tuple(h)

    def reflect_root(self, i: int, beta: Sequence[int]) -> Root:
        """Simple reflection s_i (1-based) applied to a root."""
        pairing = self.pairing(beta, i - 1)
        return tuple(c - pairing * (k == i - 1) for k, c in enumerate(beta))

    def reflect_by(self, beta: Sequence[int], gamma: Sequence[int]) -> Root:
        """Reflection in the root beta applied to gamma."""
        pairing = 2 * self.inner(gamma, beta) / self.inner(beta, beta)
        return tuple(int(g - pairing * b) for g, b in zip(gamma, beta))

    def apply_word(self, word: Sequence[int], h: Sequence) -> CartanElement:
        for i in word:
            h = self.coreflection(i, h)
        return tuple(Fraction(c) for c in h)

    def apply_word_to_root(self, word: Sequence[int], beta: Sequence[int]) -> Root:
        for i in word:
            beta = self.reflect_root(i, beta)
        return tuple(beta)

    def is_dominant(self, h: Sequence) -> bool:
        return all(v >= 0 for v in self.simple_values(h))

    def dominant_representative(self, h: Sequence,
                                choose: Optional[Callable[[list[int]], int]] = None) -> tuple[CartanElement, WeylWord]:
        """
        Move h into the dominant chamber by simple coreflections.

        :param h: Coordinates over h_1, ..., h_l (rational).
        :param choose: Optional. Picks the index to reflect among the (1-based) indices with alpha_i(h) < 0.
            Defaults to the smallest one.

        :returns: The dominant element and the word w such that applying w to h gives it.
        """
        current = tuple(Fraction(c) for c in h)
        word = []
        while True:
            negative = [i + 1 for i, v in enumerate(self.simple_values(current)) if v < 0]
            if not negative:
                return current, tuple(word)
            i = negative[0] if choose is None else choose(negative)
            current = self.coreflection(i, current)
            word.append(i)

    def weyl_orbit(self, h: Sequence) -> set[CartanElement]:
        """Full W-orbit of a Cartan element (breadth-first search)."""
        start = tuple(Fraction(c) for c in h)
        orbit = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for i in range(1, self.rank + 1):
                y = self.coreflection(i, x)
                if y not in orbit:
                    orbit.add(y)
                    queue.append(y)
        return orbit

    def weyl_group_order(self) -> int:
        """Order of the Weyl group: the product of the degrees of its basic invariants."""
        return math.prod(math.prod(invariant_degrees(letter, rank)) for letter, rank in parse_label(self.label))

    def centralizer_data(self, h: Sequence) -> CentralizerRootData:
        return CentralizerRootData(self, h)


class CentralizerRootData:
    """
    Roots vanishing on a Cartan element, with a simple system and the Weyl group of this subsystem.

    Positivity is inherited from the ambient root system.
    """

    def __init__(self, root_system: RootSystem, h: Sequence):
        self.root_system = root_system
        self.h = tuple(Fraction(c) for c in h)
        rs = root_system
        self.roots: list[Root] = [r for r in rs.roots if rs.root_value(r, self.h) == 0]
        self.positive_roots: list[Root] = [r for r in rs.positive_roots if r in set(self.roots)]
        positive = set(self.positive_roots)
        decomposable = set()
        for a, b in itertools.combinations_with_replacement(self.positive_roots, 2):
            s = tuple(x + y for x, y in zip(a, b))
            if s in positive:
                decomposable.add(s)
        self.simple_roots: list[Root] = [r for r in self.positive_roots if r not in decomposable]
        self.weyl_words: list[tuple[int, ...]] = self._enumerate_weyl_group()

    def __repr__(self) -> str:
        return f"CentralizerRootData(|Psi+|={len(self.positive_roots)}, |W0|={len(self.weyl_words)})"

    def act(self, word: Sequence[int], beta: Sequence[int]) -> Root:
        """Apply a word over the simple system (0-based positions, left to right) to a root."""
        for k in word:
            beta = self.root_system.reflect_by(self.simple_roots[k], beta)
        return tuple(beta)

    def _enumerate_weyl_group(self) -> list[tuple[int, ...]]:
        # Elements are keyed by their images of the simple system; breadth-first search gives reduced words.
        start = tuple(self.simple_roots)
        words = {start: ()}
        queue = deque([start])
        while queue:
            images = queue.popleft()
            word = words[images]
            for k in range(len(self.simple_roots)):
                new_word = (k,) + word
                new_images = tuple(self.act(new_word, b) for b in self.simple_roots)
                if new_images not in words:
                    words[new_images] = new_word
                    queue.append(new_images)
        return sorted(words.values(), key=lambda w: (len(w), w))

    def inversion_set(self, word: Sequence[int]) -> list[Root]:
        """Psi_w: positive roots of the subsystem sent to negative roots by w."""
        return [b for b in self.positive_roots if not self.root_system.is_positive(self.act(word, b))]

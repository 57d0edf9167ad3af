"""Finite groups given by generators: closure, element orders and isomorphism labels of component groups."""
from __future__ import annotations

from collections import Counter
from typing import Any, Callable, Hashable, Optional, Sequence, TypeVar

T = TypeVar("T")

# Element order multisets (order -> count) of the non-abelian groups that occur as component groups.
_NONABELIAN_SIGNATURES = {
    "S3": {1: 1, 2: 3, 3: 2},
    "D4": {1: 1, 2: 5, 4: 2},
    "Q8": {1: 1, 2: 1, 4: 6},
    "S4": {1: 1, 2: 9, 3: 8, 4: 6},
    "S5": {1: 1, 2: 25, 3: 20, 4: 30, 5: 24, 6: 20},
}

# Alternative spellings found in published tables.
_LABEL_ALIASES = {"S2": "C2", "Z2": "C2", "Z3": "C3", "1": "1", "": "1", "S1": "1", "C1": "1"}


class Inconsistent(RuntimeError):
    """Raised when a set of elements fails a group axiom."""


def _find(elements: Sequence[T], x: T, equal: Callable[[T, T], bool], index: Optional[dict] = None,
          key: Optional[Callable[[T], Hashable]] = None) -> int:
    if index is not None:
        return index.get(key(x), -1)
    for k, y in enumerate(elements):
        if equal(x, y):
            return k
    return -1


def close(generators: Sequence[T], multiply: Callable[[T, T], T], equal: Callable[[T, T], bool], identity: T,
          key: Optional[Callable[[T], Hashable]] = None, bound: int = 10_000) -> list[T]:
    """
    All products of generators, identity first.

    :param generators: Group elements.
    :param multiply: Group law.
    :param equal: Equality, possibly modulo a normal subgroup.
    :param identity: The neutral element.
    :param key: Optional. Hashable key compatible with ``equal``, for exact equality only.
    :param bound: Raise beyond this many elements.

    :raises ValueError: If the closure exceeds the bound.
    """
    elements = [identity]
    index = {key(identity): 0} if key is not None else None
    frontier = [identity]
    while frontier:
        new_frontier = []
        for x in frontier:
            for g in generators:
                y = multiply(x, g)
                if _find(elements, y, equal, index, key) < 0:
                    elements.append(y)
                    if index is not None:
                        index[key(y)] = len(elements) - 1
                    new_frontier.append(y)
                    if len(elements) > bound:
                        raise ValueError(f"Group generated exceeds {bound} elements")
        frontier = new_frontier
    return elements


def generating_set(elements: Sequence[T], multiply: Callable[[T, T], T], equal: Callable[[T, T], bool],
                   identity: T) -> list[T]:
    """Greedy generating set: an element is added when it lies outside the closure of those before it."""
    generators: list[T] = []
    span = [identity]
    for x in elements:
        if _find(span, x, equal) >= 0:
            continue
        generators.append(x)
        span = close(generators, multiply, equal, identity)
    return generators


def multiplication_table(elements: Sequence[T], multiply: Callable[[T, T], T], equal: Callable[[T, T], bool],
                         key: Optional[Callable[[T], Hashable]] = None) -> list[list[int]]:
    """
    Cayley table of a finite group.

    :raises Inconsistent: If a product falls outside the element list.
    """
    index = {key(x): k for k, x in enumerate(elements)} if key is not None else None
    table = []
    for x in elements:
        row = []
        for y in elements:
            k = _find(elements, multiply(x, y), equal, index, key)
            if k < 0:
                raise Inconsistent("Element list is not closed under multiplication")
            row.append(k)
        table.append(row)
    return table


def check_group(table: Sequence[Sequence[int]]) -> None:
    """
    Verify identity (at index 0), inverses and associativity on a Cayley table.

    :raises Inconsistent: On the first failing axiom.
    """
    n = len(table)
    if any(table[0][k] != k or table[k][0] != k for k in range(n)):
        raise Inconsistent("Element 0 is not the identity")
    for x in range(n):
        if 0 not in table[x]:
            raise Inconsistent(f"Element {x} has no inverse")
    for x in range(n):
        for y in range(n):
            xy = table[x][y]
            for z in range(n):
                if table[xy][z] != table[x][table[y][z]]:
                    raise Inconsistent(f"Associativity fails on ({x}, {y}, {z})")


def element_orders(table: Sequence[Sequence[int]]) -> list[int]:
    orders = []
    for x in range(len(table)):
        power, order = x, 1
        while power != 0:
            power = table[power][x]
            order += 1
        orders.append(order)
    return orders


def is_abelian(table: Sequence[Sequence[int]]) -> bool:
    n = len(table)
    return all(table[x][y] == table[y][x] for x in range(n) for y in range(x + 1, n))


def _abelian_label(orders: list[int]) -> str:
    """Invariant factors of a finite abelian group from its element orders."""
    n = len(orders)
    if n == 1:
        return "1"
    counts = Counter(orders)
    primary = []
    remaining = n
    # Number of elements of order dividing p^k determines the p-primary part.
    primes = sorted({p for p in range(2, n + 1) if n % p == 0 and all(p % q for q in range(2, p))})
    for p in primes:
        k = 0
        while remaining % p == 0:
            remaining //= p
            k += 1
        sizes = []
        for j in range(1, k + 1):
            count = sum(c for o, c in counts.items() if (p ** j) % o == 0 and _is_power_of(o, p))
            sizes.append(count)
        # ranks r_j = log_p(|G[p^j]| / |G[p^(j-1)]|) give the partition conjugate to the exponents
        previous = 1
        ranks = []
        for size in sizes:
            r = 0
            ratio = size // previous
            while ratio > 1:
                ratio //= p
                r += 1
            ranks.append(r)
            previous = size
        exponents = [sum(1 for r in ranks if r > i) for i in range(ranks[0] if ranks else 0)]
        primary.append([p ** e for e in exponents if e > 0])
    # invariant factors d_1 | d_2 | ... combine the i-th largest primary factors
    length = max((len(f) for f in primary), default=0)
    factors = []
    for i in range(length):
        d = 1
        for f in primary:
            if i < len(f):
                d *= f[i]
        factors.append(d)
    return "×".join(f"C{f}" for f in factors)


def _is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def isomorphism_label_from_table(table: Sequence[Sequence[int]]) -> str:
    """Isomorphism type from order, commutativity and element orders, or 'order-N' if unrecognized."""
    orders = element_orders(table)
    if is_abelian(table):
        return _abelian_label(orders)
    signature = dict(Counter(orders))
    for label, reference in _NONABELIAN_SIGNATURES.items():
        if signature == reference:
            return label
    return f"order-{len(table)}"


def isomorphism_label(elements: Sequence[T], multiply: Callable[[T, T], T], equal: Callable[[T, T], bool]) -> str:
    """
    Isomorphism label of a finite group listed with its identity first.

    One of 1, C2, C3, C4, C2×C2, S3, D4, Q8, S4, S5, other abelian groups as products of cyclic factors, or
    'order-N'.
    """
    return isomorphism_label_from_table(multiplication_table(elements, multiply, equal))


def normalize_label(label: str) -> str:
    """Canonical spelling of a group label ('S2' -> 'C2', 'C2xC2' -> 'C2×C2')."""
    label = label.strip().replace("x", "×").replace("*", "×")
    return _LABEL_ALIASES.get(label, label)


class ComponentGroup:
    """
    Component group of a stabilizer, given by representatives of its components.

    ``elements`` lists one representative per component with the identity first; the group law is composition
    modulo the identity component.
    """

    def __init__(self, elements: Sequence[Any], generators: Sequence[Any], multiply: Callable[[Any, Any], Any],
                 equal: Callable[[Any, Any], bool], check: bool = True,
                 key: Optional[Callable[[Any], Hashable]] = None):
        self.elements = list(elements)
        self.generators = list(generators)
        self.table = multiplication_table(self.elements, multiply, equal, key)
        if check:
            check_group(self.table)
        self.orders = element_orders(self.table)
        self.abelian = is_abelian(self.table)
        self.label = isomorphism_label_from_table(self.table)
        self._meta: dict[str, Any] = {}

    @classmethod
    def from_generators(cls, generators: Sequence[Any], multiply: Callable[[Any, Any], Any],
                        equal: Callable[[Any, Any], bool], identity: Any,
                        key: Optional[Callable[[Any], Hashable]] = None) -> ComponentGroup:
        elements = close(generators, multiply, equal, identity, key=key)
        return cls(elements, generators, multiply, equal, key=key)

    @classmethod
    def trivial(cls, identity: Any) -> ComponentGroup:
        return cls([identity], [], lambda a, b: a, lambda a, b: True)

    def __repr__(self) -> str:
        return f"ComponentGroup({self.label}, order {self.order})"

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def to_dict(self, include_elements: bool = True) -> dict[str, Any]:
        def dump(x):
            return x.to_dict() if hasattr(x, "to_dict") else x

        data = {"label": self.label, "order": self.order, "abelian": self.abelian, "element_orders": self.orders,
                "generators": [dump(g) for g in self.generators]}
        if include_elements:
            data["elements"] = [dump(x) for x in self.elements]
        data.update(self._meta)
        return data

"""
Polynomial systems: Buchberger's algorithm with a reduction budget, factor splitting and exact solving of
zero-dimensional systems by lex back-substitution over cyclotomic fields.
"""
from __future__ import annotations

import itertools
import multiprocessing as mp
from functools import partial
from typing import Any, Iterable, Optional, Sequence

import sympy
from sympy import totient
from sympy.polys.euclidtools import dup_gcd
from sympy.polys.factortools import dup_factor_list
from sympy.polys.orderings import grevlex, lex
from sympy.polys.rings import PolyElement, PolyRing
from sympy.polys.sqfreetools import dup_sqf_part
from tqdm import tqdm

from nilcent.scalars import CYCLOTOMIC_BOUND, QQ_FIELD, ScalarField, common_field, is_zero

# Largest number of S-pair reductions before a computation is declared inconclusive.
DEFAULT_BUDGET = 10**6

ORDERS = {"lex": lex, "degrevlex": grevlex}

# Lex precedence of variable families: torus, cell, centralizer, extension unknowns, then inverses.
_FAMILY_PRIORITY = {"t": 0, "u": 1, "s": 2, "a": 3, "l": 4}

Poly = PolyElement


class Inconclusive(RuntimeError):
    """
    Raised when a system cannot be decided within the budget or the supported fields.

    :param reason: Short description (budget exceeded, unsupported factor, positive dimension).
    :param diagnostics: Optional per-branch details.
    """

    def __init__(self, reason: str, diagnostics: Optional[list[dict[str, Any]]] = None):
        super().__init__(reason)
        self.reason = reason
        self.diagnostics = diagnostics or []


def inverse_name(variable: str) -> str:
    return f"inv_{variable}"


def lex_order(names: Iterable[str]) -> list[str]:
    """Sort variable names t..., u..., s..., a..., l..., other, then inverses, numerically within a family."""

    def key(name: str):
        auxiliary = name.startswith("inv_")
        base = name[4:] if auxiliary else name
        family = _FAMILY_PRIORITY.get(base.rstrip("0123456789"), len(_FAMILY_PRIORITY))
        digits = base[len(base.rstrip("0123456789")):]
        return (auxiliary, family, base.rstrip("0123456789"), int(digits) if digits else -1)

    return sorted(names, key=key)


class PolySystem:
    """
    Finite set of polynomials in named variables over a cyclotomic field, with a monomial order.

    Auxiliary pairs (x, y) add the polynomial x*y - 1, expressing that x is invertible; y is appended to the
    variables when missing.

    :param polys: Polynomials as ring elements of another system, strings or sympy expressions.
    :param variables: Variable names, in decreasing lex precedence.
    :param field: Coefficient field.
    :param order: 'lex' or 'degrevlex'.
    :param aux: Auxiliary pairs (variable, inverse variable).
    """

    def __init__(self, polys: Sequence[Any], variables: Sequence[str], field: ScalarField = QQ_FIELD,
                 order: str = "lex", aux: Sequence[tuple[str, str]] = ()):
        if order not in ORDERS:
            raise ValueError(f"Invalid monomial order: {order}. Expected one of {list(ORDERS)}")
        variables = list(variables)
        for x, y in aux:
            if x not in variables:
                raise ValueError(f"Auxiliary pair refers to unknown variable {x}")
            if y not in variables:
                variables.append(y)
        if len(set(variables)) != len(variables):
            raise ValueError(f"Repeated variable names in {variables}")
        self.variables = variables
        self.field = field
        self.order = order
        self.aux = [tuple(pair) for pair in aux]
        self.ring = PolyRing(variables, field.domain, ORDERS[order]) if variables else None
        converted = [self.convert(p) for p in polys]
        existing = set(converted)
        for x, y in self.aux:
            p = self.gen(x) * self.gen(y) - 1
            if p not in existing:
                converted.append(p)
        self.polys = [p for p in converted if p]

    def __repr__(self) -> str:
        return f"PolySystem({len(self.polys)} polynomials in {len(self.variables)} variables, {self.order})"

    def __len__(self) -> int:
        return len(self.polys)

    def gen(self, name: str) -> Poly:
        return self.ring.gens[self.variables.index(name)]

    @property
    def gens(self) -> dict[str, Poly]:
        return dict(zip(self.variables, self.ring.gens))

    def convert(self, p: Any) -> Poly:
        """Polynomial of this ring from a ring element, a string in the dump format or a sympy expression."""
        if isinstance(p, PolyElement):
            if p.ring == self.ring:
                return p
            source = _field_of(p.ring.domain)
            terms = {}
            for monom, coeff in p.terms():
                mapped = [0] * len(self.variables)
                for name, e in zip([str(s) for s in p.ring.symbols], monom):
                    if e:
                        mapped[self.variables.index(name)] = e
                terms[tuple(mapped)] = self.field.embed(coeff, source)
            return self.ring.from_dict(terms)
        if isinstance(p, str):
            p = _parse(p, self.variables, self.field)
        if isinstance(p, (int, sympy.Basic)):
            return self.ring.from_expr(sympy.sympify(p))
        raise TypeError(f"Cannot convert {type(p).__name__} to a polynomial")

    def with_polys(self, polys: Sequence[Any], order: Optional[str] = None) -> PolySystem:
        """Same variables and auxiliary pairs, other polynomials."""
        return PolySystem(polys, self.variables, self.field, order or self.order, self.aux)

    def extend(self, polys: Sequence[Any]) -> PolySystem:
        return self.with_polys(self.polys + [self.convert(p) for p in polys])

    def over(self, field: ScalarField) -> PolySystem:
        """The same system over a larger field."""
        if field is self.field:
            return self
        target = PolySystem([], self.variables, field, self.order, self.aux)
        return target.with_polys([target.convert(p) for p in self.polys])


def _field_of(domain) -> ScalarField:
    if domain == QQ_FIELD.domain:
        return QQ_FIELD
    for n in _divisors(CYCLOTOMIC_BOUND):
        if ScalarField(n).domain == domain:
            return ScalarField(n)
    raise ValueError(f"Unsupported coefficient domain {domain}")


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


# Textual format


def format_poly(p: Poly, field: ScalarField) -> str:
    """Terms like '3/2*t1^2*u1' joined by ' + ' or ' - '; cyclotomic coefficients in parentheses."""
    if not p:
        return "0"
    names = [str(s) for s in p.ring.symbols]
    pieces = []
    for monom, coeff in p.terms():
        text = field.to_string(coeff)
        negative = text.startswith("-") and "+" not in text
        if negative:
            text = text[1:]
        if "+" in text:
            text = f"({text})"
        factors = [name + (f"^{e}" if e > 1 else "") for name, e in zip(names, monom) if e]
        if factors and text == "1":
            body = "*".join(factors)
        else:
            body = "*".join([text] + factors)
        pieces.append(("-" if negative else "+", body))
    first_sign, first_body = pieces[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def _parse(text: str, variables: Sequence[str], field: ScalarField) -> sympy.Expr:
    symbols = {name: sympy.Symbol(name) for name in variables}
    if field.conductor > 1:
        symbols[f"z{field.conductor}"] = sympy.exp(2 * sympy.pi * sympy.I / field.conductor)
    return sympy.sympify(text.replace("^", "**"), locals=symbols)


def dump(system: PolySystem) -> str:
    """Plain-text form of a system, one polynomial per line after a short header."""
    lines = ["# polynomial system",
             f"variables: {', '.join(system.variables)}",
             f"order: {system.order}",
             f"field: {system.field.conductor}"]
    if system.aux:
        lines.append("aux: " + ", ".join(f"{x}:{y}" for x, y in system.aux))
    lines.extend(format_poly(p, system.field) for p in system.polys)
    return "\n".join(lines) + "\n"


def load(text: str) -> PolySystem:
    """Inverse of :func:`dump`."""
    header: dict[str, str] = {}
    polys = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        name, sep, value = line.partition(":")
        if sep and name in ("variables", "order", "field", "aux"):
            header[name] = value.strip()
        else:
            polys.append(line)
    variables = [v.strip() for v in header.get("variables", "").split(",") if v.strip()]
    aux = [tuple(pair.split(":")) for pair in header.get("aux", "").split(", ") if pair]
    field = ScalarField(int(header.get("field", 1)))
    aux_names = {y for _, y in aux}
    system = PolySystem([], [v for v in variables if v not in aux_names], field, header.get("order", "lex"), aux)
    return system.with_polys(polys)


# Buchberger


def _spoly(f: Poly, g: Poly) -> Poly:
    ring = f.ring
    lcm = ring.monomial_lcm(f.LM, g.LM)
    return f.mul_monom(ring.monomial_div(lcm, f.LM)) - g.mul_monom(ring.monomial_div(lcm, g.LM))


def _coprime(m1: tuple, m2: tuple) -> bool:
    return all(a == 0 or b == 0 for a, b in zip(m1, m2))


def _divides(m1: tuple, m2: tuple) -> bool:
    return all(a <= b for a, b in zip(m1, m2))


def buchberger(system: PolySystem, budget: int = DEFAULT_BUDGET, check: bool = True) -> list[Poly]:
    """
    Reduced Gröbner basis of the ideal generated by a system, for the system's monomial order.

    Pairs are processed by increasing lcm of leading monomials; pairs with coprime leading monomials and pairs
    covered by the chain criterion are skipped.

    :param system: The polynomials.
    :param budget: Maximal number of S-polynomial reductions.
    :param check: Verify that all S-polynomials of the result reduce to zero.

    :raises Inconclusive: If the budget is exceeded.

    :returns: Monic polynomials sorted by leading monomial; [1] for the unit ideal, [] for the zero ideal.
    """
    ring = system.ring
    basis = [p.monic() for p in system.polys if p]
    if not basis:
        return []
    if any(p.is_ground for p in basis):
        return [ring.one]
    basis = reduce_set(basis)
    if basis[0].is_ground:
        return [ring.one]
    pairs ={(i, j) for i, j in itertools.combinations(range(len(basis)), 2)}
    order = ring.order
    reductions = 0
    while pairs:
        i, j = min(pairs, key=lambda ij: (order(ring.monomial_lcm(basis[ij[0]].LM, basis[ij[1]].LM)), ij))
        pairs.discard((i, j))
        lm_i, lm_j = basis[i].LM, basis[j].LM
        if _coprime(lm_i, lm_j):
            continue
        lcm = ring.monomial_lcm(lm_i, lm_j)
        if any(k not in (i, j) and _divides(basis[k].LM, lcm)
               and (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs
               for k in range(len(basis))):
            continue
        reductions += 1
        if reductions > budget:
            raise Inconclusive(f"Gröbner basis computation exceeded the budget of {budget} reductions")
        r = _spoly(basis[i], basis[j]).rem(basis)
        if not r:
            continue
        if r.is_ground:
            return [ring.one]
        basis.append(r.monic())
        k = len(basis) - 1
        pairs.update((m, k) for m in range(k))
    reduced = _reduce_basis(basis)
    if check and not is_groebner(reduced):
        raise RuntimeError("S-polynomials of the computed basis do not reduce to zero")
    return reduced


def _reduce_basis(basis: list[Poly]) -> list[Poly]:
    minimal: list[Poly] = []
    for p in sorted(basis, key=lambda q: q.ring.order(q.LM)):
        if not any(_divides(q.LM, p.LM) for q in minimal):
            minimal.append(p)
    reduced = []
    for k, p in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        reduced.append(p.rem(others).monic() if others else p.monic())
    return sorted(reduced, key=lambda q: q.ring.order(q.LM), reverse=True)


def is_groebner(basis: Sequence[Poly]) -> bool:
    """Whether every S-polynomial reduces to zero modulo the basis."""
    basis = list(basis)
    return all(not _spoly(f, g).rem(basis) for f, g in itertools.combinations(basis, 2)
               if not _coprime(f.LM, g.LM))


def reduce_set(polys: Sequence[Poly]) -> list[Poly]:
    """
    Interreduce a set: each element is reduced modulo the others until no leading monomial divides another.

    The ideal is unchanged. A nonzero constant reduces the set to [1].
    """
    polys = [p.monic() for p in polys if p]
    changed = True
    while changed:
        changed = False
        for k in range(len(polys)):
            others = polys[:k] + polys[k + 1:]
            if not others:
                break
            r = polys[k].rem(others)
            if r != polys[k]:
                changed = True
                polys = others if not r else others[:k] + [r.monic()] + others[k:]
                break
    if any(p.is_ground for p in polys):
        return [polys[0].ring.one]
    return polys


def _proper_factors(p: Poly) -> Optional[list[Poly]]:
    """Distinct irreducible factors of p if it factors nontrivially, else None."""
    if p.is_ground:
        return None
    try:
        _, factors = p.factor_list()
    except (NotImplementedError, sympy.polys.polyerrors.DomainError):
        return None
    if len(factors) == 1 and factors[0][1] == 1:
        return None
    return [f.monic() for f, _ in factors]


def factor_split(system: PolySystem, verbose: bool = False) -> list[PolySystem]:
    """
    Split a system along factorizations of its elements.

    A set P with an element f = f_1^k_1 ... f_m^k_m is replaced by the interreduced sets (P without f) with f_i
    added, for each i. Sets containing a nonzero constant are discarded. The union of the zero sets of the output
    equals the zero set of the input.
    """
    pending = [reduce_set(system.polys)] if system.polys else [[]]
    done: list[list[Poly]] = []
    seen: set[frozenset] = set()
    while pending:
        polys = pending.pop()
        if polys and polys[0].is_ground:
            continue
        key = frozenset(polys)
        if key in seen:
            continue
        seen.add(key)
        for k, p in enumerate(polys):
            factors = _proper_factors(p)
            if factors is not None:
                rest = polys[:k] + polys[k + 1:]
                pending.extend(reduce_set(rest + [f]) for f in factors)
                break
        else:
            done.append(polys)
    if verbose:
        print(f"Factor splitting: {len(done)} branches")
    return [system.with_polys(polys) for polys in done]


# Solving


class SolutionSet:
    """
    Finite list of exact solutions, or the UNSAT or INCONCLUSIVE status.

    Solutions map variable names to elements of ``field``.
    """

    def __init__(self, variables: Sequence[str], solutions: Sequence[dict[str, Any]] = (),
                 field: ScalarField = QQ_FIELD, status: str = "sat", reason: Optional[str] = None,
                 diagnostics: Optional[list[dict[str, Any]]] = None):
        self.variables = list(variables)
        self.field = field
        self.solutions = [dict(s) for s in solutions]
        self.status = "unsat" if status == "sat" and not self.solutions else status
        self.reason = reason
        self.diagnostics = diagnostics or []

    def __repr__(self) -> str:
        if self.status == "sat":
            return f"SolutionSet({len(self.solutions)} solutions over {self.field})"
        return f"SolutionSet({self.status.upper()}{': ' + self.reason if self.reason else ''})"

    @classmethod
    def inconclusive(cls, variables: Sequence[str], reason: str,
                     diagnostics: Optional[list[dict[str, Any]]] = None) -> SolutionSet:
        return cls(variables, status="inconclusive", reason=reason, diagnostics=diagnostics)

    def __len__(self) -> int:
        return len(self.solutions)

    def __iter__(self):
        return iter(self.solutions)

    @property
    def is_unsat(self) -> bool:
        return self.status == "unsat"

    @property
    def is_inconclusive(self) -> bool:
        return self.status == "inconclusive"

    def require(self) -> SolutionSet:
        """Return self, raising if the status is INCONCLUSIVE."""
        if self.is_inconclusive:
            raise Inconclusive(self.reason or "Inconclusive", self.diagnostics)
        return self

    def over(self, field: ScalarField) -> SolutionSet:
        """The same solutions embedded in a larger field."""
        solutions = [{x: field.embed(v, self.field) for x, v in s.items()} for s in self.solutions]
        return SolutionSet(self.variables, solutions, field, self.status, self.reason, self.diagnostics)

    @classmethod
    def union(cls, variables: Sequence[str], parts: Sequence[SolutionSet]) -> SolutionSet:
        """Union of branch results; INCONCLUSIVE if any branch is."""
        undecided = [p for p in parts if p.is_inconclusive]
        if undecided:
            diagnostics = [{"reason": p.reason} for p in undecided]
            return cls.inconclusive(variables, f"{len(undecided)} of {len(parts)} branches inconclusive",
                                    diagnostics)
        field = common_field(*[p.field for p in parts]) if parts else QQ_FIELD
        solutions: list[dict[str, Any]] = []
        for part in parts:
            for s in part.over(field):
                if s not in solutions:
                    solutions.append(s)
        return cls(variables, solutions, field)

    def to_dict(self) -> dict[str, Any]:
        return {"status": self.status, "reason": self.reason, "field": self.field.conductor,
                "variables": self.variables, "diagnostics": self.diagnostics,
                "solutions": [{x: self.field.to_string(v) for x, v in s.items()} for s in self.solutions]}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> SolutionSet:
        field = ScalarField(data["field"])
        solutions = [{x: field.from_string(v) for x, v in s.items()} for s in data["solutions"]]
        return cls(data["variables"], solutions, field, data["status"], data.get("reason"),
                   data.get("diagnostics"))


def evaluate(p: Poly, assignment: dict[str, Any], field: ScalarField) -> Any:
    """Value of a polynomial at a full assignment with values in ``field``."""
    source = _field_of(p.ring.domain)
    names = [str(s) for s in p.ring.symbols]
    total = field.zero
    for monom, coeff in p.terms():
        term = field.embed(coeff, source)
        for name, e in zip(names, monom):
            if e:
                term *= assignment[name] ** e
        total += term
    return total


def _conductor_candidates(field: ScalarField, degree: int) -> list[int]:
    return [n for n in _divisors(CYCLOTOMIC_BOUND)
            if n > field.conductor and n % field.conductor == 0 and n != 2 and int(totient(n)) % degree == 0]


def _linear_roots(factor: list, field: ScalarField) -> Optional[list]:
    """Roots of a polynomial over ``field`` if it splits into linear factors there, else None."""
    if len(factor) <= 1:
        return []
    _, pieces = dup_factor_list(factor, field.domain)
    if not all(len(piece) == 2 for piece, _ in pieces):
        return None
    return [-piece[1] / piece[0] for piece, _ in pieces]


def univariate_roots(coeffs: list, field: ScalarField) -> tuple[list, ScalarField]:
    """
    All roots of a nonzero univariate polynomial (coefficients in ``field``, leading first).

    Factors without roots in the current field are factored again over cyclotomic fields whose conductor divides
    the bound, in increasing order. Every factor is lifted from ``field`` itself, and a factor that already splits
    over a field reached for an earlier factor does not enlarge it further.

    :raises Inconclusive: If an irreducible factor has no roots in any supported field.

    :returns: The distinct roots and the field containing them.
    """
    base = field
    while coeffs and is_zero(coeffs[0]):
        coeffs = coeffs[1:]
    if len(coeffs) <= 1:
        return [], field
    _, factors = dup_factor_list(dup_sqf_part(coeffs, base.domain), base.domain)
    roots: list = []
    pending = []
    for factor, _ in factors:
        if len(factor) == 2:
            roots.append(-factor[1] / factor[0])
        else:
            pending.append(factor)
    for factor in pending:
        found = _linear_roots([field.embed(c, base) for c in factor], field) if field is not base else None
        if found is None:
            for n in _conductor_candidates(field, len(factor) - 1):
                larger = ScalarField(n)
                found = _linear_roots([larger.embed(c, base) for c in factor], larger)
                if found is not None:
                    roots = [larger.embed(r, field) for r in roots]
                    field = larger
                    break
            else:
                text = " + ".join(f"({base.to_string(c)})*x^{len(factor) - 1 - k}"
                                  for k, c in enumerate(factor) if not is_zero(c))
                raise Inconclusive(f"Irreducible factor {text} has no roots in cyclotomic fields of conductor "
                                   f"dividing {CYCLOTOMIC_BOUND}")
        roots.extend(found)
    distinct = []
    for r in roots:
        if r not in distinct:
            distinct.append(r)
    return distinct, field


def is_zero_dimensional(basis: Sequence[Poly]) -> bool:
    """Whether a Gröbner basis has a pure power of every variable among its leading monomials."""
    if not basis:
        return False
    ngens = basis[0].ring.ngens
    pure = set()
    for p in basis:
        support = [k for k, e in enumerate(p.LM) if e]
        if len(support) == 1:
            pure.add(support[0])
    return len(pure) == ngens


def solve_zero_dim(system: PolySystem, budget: int = DEFAULT_BUDGET) -> SolutionSet:
    """
    All solutions of a zero-dimensional system, by back-substitution through its lex Gröbner basis.

    :returns: The solutions (each checked against every input polynomial), UNSAT, or INCONCLUSIVE with the reason
        (budget exceeded, positive dimension, roots outside the supported fields).
    """
    if not system.variables:
        return SolutionSet([], [{}] if not system.polys else [])
    lex_system = system if system.order == "lex" else system.with_polys(system.polys, order="lex")
    try:
        basis = buchberger(lex_system, budget)
    except Inconclusive as exc:
        return SolutionSet.inconclusive(system.variables, exc.reason)
    if basis and basis[0].is_ground:
        return SolutionSet(system.variables)
    if not is_zero_dimensional(basis):
        return SolutionSet.inconclusive(system.variables, "The system has positive-dimensional solution sets")

    names = lex_system.variables
    ngens = len(names)
    # Polynomials whose largest variable (in lex precedence) is the k-th.
    levels: dict[int, list[Poly]] = {k: [] for k in range(ngens)}
    for p in basis:
        top = min(k for monom in p.monoms() for k, e in enumerate(monom) if e)
        levels[top].append(p)

    try:
        partial_solutions: list[tuple[dict[int, Any], ScalarField]] = [({}, lex_system.field)]
        for k in reversed(range(ngens)):
            extended = []
            for values, field in partial_solutions:
                coeffs = _univariate(levels[k], k, values, field, lex_system.field)
                roots, larger = univariate_roots(coeffs, field) if coeffs else ([], field)
                for r in roots:
                    lifted = {j: larger.embed(v, field) for j, v in values.items()}
                    lifted[k] = r
                    extended.append((lifted, larger))
            partial_solutions = extended
    except Inconclusive as exc:
        return SolutionSet.inconclusive(system.variables, exc.reason)

    if not partial_solutions:
        return SolutionSet(system.variables)
    field = common_field(system.field, *[f for _, f in partial_solutions])
    solutions = []
    for values, f in partial_solutions:
        assignment = {names[j]: field.embed(v, f) for j, v in values.items()}
        if not all(is_zero(evaluate(p, assignment, field)) for p in system.polys):
            raise RuntimeError("A back-substituted solution does not satisfy the input system")
        solutions.append(assignment)
    return SolutionSet(system.variables, solutions, field)


def _univariate(polys: list[Poly], k: int, values: dict[int, Any], field: ScalarField,
                source: ScalarField) -> list:
    """GCD of the level-k polynomials with the values of the lower variables substituted."""
    domain = field.domain
    result: list = []
    for p in polys:
        degree = p.degree(p.ring.gens[k])
        coeffs = [domain.zero] * (degree + 1)
        for monom, coeff in p.terms():
            term = field.embed(coeff, source)
            for j, e in enumerate(monom):
                if e and j != k:
                    term *= values[j] ** e
            coeffs[degree - monom[k]] += term
        while coeffs and is_zero(coeffs[0]):
            coeffs = coeffs[1:]
        if not coeffs:
            continue
        result = coeffs if not result else dup_gcd(result, coeffs, domain)
    return result


def solve(system: PolySystem, budget: int = DEFAULT_BUDGET, split: bool = True, verbose: bool = False) -> SolutionSet:
    """
    All solutions of a system: factor splitting, then :func:`solve_zero_dim` on each branch.

    :param system: The system.
    :param budget: Reduction budget per branch.
    :param split: Split along factorizations first.
    :param verbose: Print the number of branches.
    """
    branches = factor_split(system, verbose=verbose) if split else [system]
    return SolutionSet.union(system.variables, [solve_zero_dim(b, budget) for b in branches])


def _solve_dumped(text: str, budget: int, split: bool) -> dict[str, Any]:
    return solve(load(text), budget, split).to_dict()


def solve_many(systems: Sequence[PolySystem], budget: int = DEFAULT_BUDGET, split: bool = True, jobs: int = 1,
               verbose: bool = False) -> list[SolutionSet]:
    """
    Solve independent systems, in parallel if ``jobs`` > 1.

    Systems travel to the workers in their textual form.
    """
    if jobs == 1:
        return [solve(s, budget, split) for s in tqdm(systems, desc="Solving systems", disable=not verbose)]
    with mp.Pool(jobs) as pool:
        results = pool.map(partial(_solve_dumped, budget=budget, split=split), [dump(s) for s in systems])
    return [SolutionSet.from_dict(r) for r in results]


def solve_any(system: PolySystem, budget: int = DEFAULT_BUDGET,
              values: Sequence[int] = (1, -1, 2, -2, 3, 0)) -> SolutionSet:
    """
    One solution of a possibly positive-dimensional system, specializing free variables to small integers.

    The lowest variable in lex order whose value is not yet determined is fixed to each of ``values`` in turn.

    :returns: At most one solution; UNSAT if the ideal is the unit ideal; INCONCLUSIVE if no specialization
        leads to a solution.
    """
    lex_system = system if system.order == "lex" else system.with_polys(system.polys, order="lex")
    try:
        basis = buchberger(lex_system, budget)
    except Inconclusive as exc:
        return SolutionSet.inconclusive(system.variables, exc.reason)
    if basis and basis[0].is_ground:
        return SolutionSet(system.variables)
    if is_zero_dimensional(basis):
        found = solve_zero_dim(lex_system.with_polys(basis), budget)
        if found.is_inconclusive or found.is_unsat:
            return found
        return SolutionSet(system.variables, found.solutions[:1], found.field)
    pure = {next(k for k, e in enumerate(p.LM) if e) for p in basis if sum(1 for e in p.LM if e) == 1}
    free = [k for k in range(len(lex_system.variables)) if k not in pure]
    variable = lex_system.variables[free[-1]]
    for v in values:
        found = solve_any(lex_system.extend([lex_system.gen(variable) - v]), budget, values)
        if found.status == "sat":
            return found
    return SolutionSet.inconclusive(system.variables, f"No solution found specializing {variable} to {list(values)}")

"""Minimal Groebner-basis engine over the rationals.

Just enough Buchberger to count quotient dimensions of zero-dimensional
ideals: sparse polynomials with exact rational coefficients, degrevlex (and
lex, for cross-checks), normal-strategy pair selection with the coprime
criterion, full interreduction.  The headline consumer is the Tjurina
number of an isolated hypersurface singularity at the origin.
"""
from __future__ import annotations

import heapq
import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import NotIsolated

Exponents = tuple[int, ...]
OrderKey = Callable[[Exponents], tuple]


def degrevlex_key(exponents: Exponents) -> tuple:
    # ties break on the last differing exponent, smaller loses its negation
    return (sum(exponents), tuple(-e for e in reversed(exponents)))


def lex_key(exponents: Exponents) -> tuple:
    return tuple(exponents)


ORDERS: dict[str, OrderKey] = {"degrevlex": degrevlex_key, "lex": lex_key}


class Poly:
    """Sparse multivariate polynomial over the rationals."""

    __slots__ = ("variables", "terms")

    def __init__(
        self,
        variables: Sequence[str],
        terms: dict[Exponents, Fraction] | None = None,
    ):
        self.variables: tuple[str, ...] = tuple(variables)
        cleaned: dict[Exponents, Fraction] = {}
        for exponents, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if len(exponents) != len(self.variables):
                raise ValueError(
                    f"exponent vector {exponents} does not match {self.variables}"
                )
            if coeff != 0:
                cleaned[tuple(exponents)] = coeff
        self.terms = cleaned

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "Poly":
        return cls(variables)

    @classmethod
    def monomial(
        cls, variables: Sequence[str], exponents: Exponents, coeff=1
    ) -> "Poly":
        return cls(variables, {tuple(exponents): Fraction(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.variables == other.variables
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.variables, frozenset(self.terms.items())))

    def __add__(self, other: "Poly") -> "Poly":
        merged = dict(self.terms)
        for exponents, coeff in other.terms.items():
            merged[exponents] = merged.get(exponents, Fraction(0)) + coeff
        return Poly(self.variables, merged)

    def __sub__(self, other: "Poly") -> "Poly":
        merged = dict(self.terms)
        for exponents, coeff in other.terms.items():
            merged[exponents] = merged.get(exponents, Fraction(0)) - coeff
        return Poly(self.variables, merged)

    def __mul__(self, other: "Poly") -> "Poly":
        product: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                product[key] = product.get(key, Fraction(0)) + c1 * c2
        return Poly(self.variables, product)

    def scaled(self, scalar) -> "Poly":
        scalar = Fraction(scalar)
        return Poly(self.variables, {e: scalar * c for e, c in self.terms.items()})

    def shifted(self, exponents: Exponents, coeff) -> "Poly":
        """Multiply by coeff * (monomial with the given exponents)."""
        coeff = Fraction(coeff)
        return Poly(
            self.variables,
            {
                tuple(a + b for a, b in zip(e, exponents)): coeff * c
                for e, c in self.terms.items()
            },
        )

    def leading(self, key: OrderKey) -> tuple[Exponents, Fraction]:
        exponents = max(self.terms, key=key)
        return exponents, self.terms[exponents]

    def partial(self, index: int) -> "Poly":
        """Formal partial derivative in the index-th variable."""
        derived: dict[Exponents, Fraction] = {}
        for exponents, coeff in self.terms.items():
            e = exponents[index]
            if e == 0:
                continue
            lowered = list(exponents)
            lowered[index] = e - 1
            derived[tuple(lowered)] = coeff * e
        return Poly(self.variables, derived)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exponents in sorted(self.terms, key=degrevlex_key, reverse=True):
            coeff = self.terms[exponents]
            factors = [
                v if e == 1 else f"{v}^{e}"
                for v, e in zip(self.variables, exponents)
                if e
            ]
            if not factors:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append("*".join(factors))
            elif coeff == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{coeff}*" + "*".join(factors))
        rendered = "+".join(parts).replace("+-", "-")
        return rendered

    def __repr__(self) -> str:
        return f"Poly({self.variables}, {str(self)!r})"


_TOKEN_RE = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*|\d+|[-+*/^]")


def parse_polynomial(text: str, variables: Sequence[str] | None = None) -> Poly:
    """Parse `+`/`-` separated terms of `*`-joined factors, each factor a
    rational literal or var(^power).  Variables default to first-appearance
    order."""
    tokens = _TOKEN_RE.findall(text.replace(" ", ""))
    if "".join(tokens) != text.replace(" ", ""):
        raise ValueError(f"cannot tokenize polynomial {text!r}")
    if variables is None:
        seen: list[str] = []
        for token in tokens:
            if token[0].isalpha() and token not in seen:
                seen.append(token)
        variables = seen
    variables = tuple(variables)
    index = {v: i for i, v in enumerate(variables)}

    terms: dict[Exponents, Fraction] = {}
    position = 0

    def take() -> str | None:
        nonlocal position
        if position < len(tokens):
            token = tokens[position]
            position += 1
            return token
        return None

    def peek() -> str | None:
        return tokens[position] if position < len(tokens) else None

    while position < len(tokens):
        sign = Fraction(1)
        while peek() in {"+", "-"}:
            if take() == "-":
                sign = -sign
        coeff = sign
        exponents = [0] * len(variables)
        expect_factor = True
        while expect_factor:
            token = take()
            if token is None:
                raise ValueError(f"dangling operator in {text!r}")
            if token.isdigit():
                value = Fraction(int(token))
                if peek() == "/":
                    take()
                    denominator = take()
                    if denominator is None or not denominator.isdigit():
                        raise ValueError(f"bad rational literal in {text!r}")
                    value /= int(denominator)
                coeff *= value
            elif token[0].isalpha():
                if token not in index:
                    raise ValueError(f"unknown variable {token!r}")
                power = 1
                if peek() == "^":
                    take()
                    exponent_token = take()
                    if exponent_token is None or not exponent_token.isdigit():
                        raise ValueError(f"bad exponent in {text!r}")
                    power = int(exponent_token)
                    if power < 1:
                        raise ValueError("exponents must be positive integers")
                exponents[index[token]] += power
            else:
                raise ValueError(f"unexpected token {token!r} in {text!r}")
            if peek() == "*":
                take()
            else:
                expect_factor = False
        key = tuple(exponents)
        terms[key] = terms.get(key, Fraction(0)) + coeff
    if not terms:
        raise ValueError("empty polynomial")
    return Poly(variables, terms)


def normal_form(poly: Poly, basis: Sequence[Poly], key: OrderKey) -> Poly:
    """Remainder of multivariate division by the basis."""
    remainder: dict[Exponents, Fraction] = {}
    work = dict(poly.terms)
    leads = [(g, *g.leading(key)) for g in basis if not g.is_zero()]
    while work:
        exponents = max(work, key=key)
        coeff = work.pop(exponents)
        if coeff == 0:
            continue
        for g, g_lead, g_coeff in leads:
            if all(e >= l for e, l in zip(exponents, g_lead)):
                shift = tuple(e - l for e, l in zip(exponents, g_lead))
                factor = coeff / g_coeff
                for e2, c2 in g.terms.items():
                    if e2 == g_lead:
                        continue
                    target = tuple(a + b for a, b in zip(e2, shift))
                    updated = work.get(target, Fraction(0)) - factor * c2
                    if updated:
                        work[target] = updated
                    else:
                        work.pop(target, None)
                break
        else:
            remainder[exponents] = coeff
    return Poly(poly.variables, remainder)


def s_polynomial(f: Poly, g: Poly, key: OrderKey) -> Poly:
    f_lead, f_coeff = f.leading(key)
    g_lead, g_coeff = g.leading(key)
    lcm_exp = tuple(max(a, b) for a, b in zip(f_lead, g_lead))
    f_shift = tuple(l - a for l, a in zip(lcm_exp, f_lead))
    g_shift = tuple(l - b for l, b in zip(lcm_exp, g_lead))
    return f.shifted(f_shift, 1 / f_coeff) - g.shifted(g_shift, 1 / g_coeff)


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis: monic generators, no leading monomial divides
    another, every generator fully reduced against the rest."""

    generators: tuple[Poly, ...]
    variables: tuple[str, ...]
    order: str = "degrevlex"

    def leading_monomials(self) -> list[Exponents]:
        key = ORDERS[self.order]
        return [g.leading(key)[0] for g in self.generators]


def buchberger(gens: Sequence[Poly], order: str = "degrevlex") -> GroebnerBasis:
    """Buchberger's algorithm with normal-strategy pair selection and the
    coprime (product) criterion, followed by full interreduction.

    Membership of every input generator is re-verified by a zero normal
    form before returning.
    """
    key = ORDERS[order]
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    variables = gens[0].variables
    if any(g.variables != variables for g in gens):
        raise ValueError("all generators must share one variable sequence")

    basis: list[Poly] = []
    for g in gens:
        _, coeff = g.leading(key)
        basis.append(g.scaled(1 / coeff))

    pairs: list[tuple[tuple, int, int]] = []

    def push_pairs(j: int):
        lead_j, _ = basis[j].leading(key)
        for i in range(j):
            lead_i, _ = basis[i].leading(key)
            if all(min(a, b) == 0 for a, b in zip(lead_i, lead_j)):
                continue  # coprime leading monomials: S-poly reduces to zero
            lcm_exp = tuple(max(a, b) for a, b in zip(lead_i, lead_j))
            heapq.heappush(pairs, (key(lcm_exp), i, j))

    for j in range(len(basis)):
        push_pairs(j)

    while pairs:
        _, i, j = heapq.heappop(pairs)
        remainder = normal_form(s_polynomial(basis[i], basis[j], key), basis, key)
        if remainder.is_zero():
            continue
        _, coeff = remainder.leading(key)
        basis.append(remainder.scaled(1 / coeff))
        push_pairs(len(basis) - 1)

    reduced = _interreduce(basis, key)
    result = GroebnerBasis(tuple(reduced), variables, order)
    for g in gens:
        if not normal_form(g, result.generators, key).is_zero():
            raise RuntimeError("input generator does not reduce to zero")
    return result


def _interreduce(basis: list[Poly], key: OrderKey) -> list[Poly]:
    # drop generators whose leading monomial is divisible by another's
    leads = [g.leading(key)[0] for g in basis]
    keep = []
    for i, lead in enumerate(leads):
        dominated = any(
            j != i
            and all(a >= b for a, b in zip(lead, leads[j]))
            and (leads[j] != lead or j < i)
            for j in range(len(basis))
        )
        if not dominated:
            keep.append(basis[i])
    # tail-reduce each survivor against the others until stable
    changed = True
    while changed:
        changed = False
        for i in range(len(keep)):
            others = keep[:i] + keep[i + 1 :]
            reduced = normal_form(keep[i], others, key)
            if reduced.is_zero():
                keep.pop(i)
                changed = True
                break
            _, coeff = reduced.leading(key)
            reduced = reduced.scaled(1 / coeff)
            if reduced != keep[i]:
                keep[i] = reduced
                changed = True
    return sorted(keep, key=lambda g: key(g.leading(key)[0]))


INFINITE = math.inf


def quotient_dimension(basis: GroebnerBasis) -> int | float:
    """Number of standard monomials (those outside the leading-term ideal),
    or INFINITE when some variable has no pure power among the leading
    monomials."""
    leads = basis.leading_monomials()
    nvars = len(basis.variables)
    if any(sum(lead) == 0 for lead in leads):
        return 0  # the ideal is the whole ring
    caps = [None] * nvars
    for lead in leads:
        support = [i for i, e in enumerate(lead) if e]
        if len(support) == 1:
            i = support[0]
            if caps[i] is None or lead[i] < caps[i]:
                caps[i] = lead[i]
    if any(cap is None for cap in caps):
        return INFINITE
    count = 0
    for exponents in itertools.product(*(range(cap) for cap in caps)):
        if not any(all(e >= l for e, l in zip(exponents, lead)) for lead in leads):
            count += 1
    return count


def tjurina(f: Poly) -> int:
    """Tjurina number of an isolated hypersurface singularity at the origin:
    the dimension of the quotient by the equation plus all its partials.

    Validity of the global computation rests on the quotient being
    supported at the origin, which is enforced: the dimension must be
    finite and every variable nilpotent modulo the ideal.
    """
    gens = [f] + [f.partial(i) for i in range(len(f.variables))]
    gens = [g for g in gens if not g.is_zero()]
    basis = buchberger(gens)
    dimension = quotient_dimension(basis)
    if dimension == INFINITE:
        raise NotIsolated("quotient is infinite-dimensional: singular locus has positive dimension")
    key = ORDERS[basis.order]
    power = max(int(dimension), 1)
    for i, variable in enumerate(f.variables):
        exponents = tuple(power if j == i else 0 for j in range(len(f.variables)))
        pure_power = Poly.monomial(f.variables, exponents)
        if not normal_form(pure_power, basis.generators, key).is_zero():
            raise NotIsolated(
                f"variable {variable} is not nilpotent modulo the ideal: "
                "the singular scheme is not supported at the origin"
            )
    return int(dimension)


FAMILY_VARIABLES = ("x", "y", "z", "w")


def family_polynomial(n: int, t: Fraction | int) -> Poly:
    """x^2 + y^2 + z^3 + z^2 w + t w^n over (x, y, z, w)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    terms = {
        (2, 0, 0, 0): Fraction(1),
        (0, 2, 0, 0): Fraction(1),
        (0, 0, 3, 0): Fraction(1),
        (0, 0, 2, 1): Fraction(1),
    }
    t = Fraction(t)
    if t != 0:
        key = (0, 0, 0, n)
        terms[key] = terms.get(key, Fraction(0)) + t
    return Poly(FAMILY_VARIABLES, terms)


def tjurina_family(n: int, t: Fraction | int) -> int:
    """Tjurina number of the degree-n member of the deformation family.

    For n >= 4 and t != 0 the germ is a suspended D_{n+1} singularity
    (the cubic part z^2(z+w) plus the w^n tail), so the value is n + 1,
    independent of t.  The t = 0 limit has a one-dimensional singular
    locus and raises NotIsolated straight from the tjurina computation.
    """
    if n < 4:
        raise ValueError("family members need n >= 4")
    return tjurina(family_polynomial(n, t))

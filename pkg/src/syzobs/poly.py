"""Sparse multivariate polynomials with exact coefficients.

Terms are stored as a dict mapping exponent tuples to nonzero field elements.
Polynomials are immutable once built; all operations return new objects.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .errors import RingMismatchError
from .linalg import RowReducer
from .rings import GREVLEX, PolyRing, TermOrder

INFINITE_ORDER = math.inf  # order of vanishing of the zero polynomial


def monomial_degree(m: tuple[int, ...]) -> int:
    return sum(m)


def monomial_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    q = tuple(x - y for x, y in zip(a, b))
    if any(e < 0 for e in q):
        raise ValueError(f"{b} does not divide {a}")
    return q


def monomial_lcm(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(max(x, y) for x, y in zip(a, b))


@lru_cache(maxsize=None)
def monomials_of_degree(nvars: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """All exponent tuples of the given total degree, grevlex-descending."""
    if degree < 0:
        return ()
    if nvars == 1:
        return ((degree,),)
    out = []
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - first):
            out.append((first,) + rest)
    return tuple(sorted(out, key=GREVLEX.key, reverse=True))


class Polynomial:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = {m: c for m, c in terms.items() if c}
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, ring: PolyRing) -> "Polynomial":
        return cls(ring, {})

    @classmethod
    def constant(cls, ring: PolyRing, value) -> "Polynomial":
        return cls(ring, {(0,) * ring.nvars: ring.base_field.elem(value)})

    @classmethod
    def variable(cls, ring: PolyRing, index: int) -> "Polynomial":
        exps = tuple(1 if i == index else 0 for i in range(ring.nvars))
        return cls(ring, {exps: ring.base_field.one})

    @classmethod
    def monomial(cls, ring: PolyRing, exps: tuple[int, ...], coeff=1) -> "Polynomial":
        if len(exps) != ring.nvars or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent vector {exps} for {ring}")
        return cls(ring, {tuple(exps): ring.base_field.elem(coeff)})

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def homogeneous_component(self, degree: int) -> "Polynomial":
        return Polynomial(
            self.ring, {m: c for m, c in self.terms.items() if sum(m) == degree}
        )

    def leading_term(self, order: TermOrder = GREVLEX):
        """(exponents, coefficient) of the largest term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def coefficient(self, exps: tuple[int, ...]):
        return self.terms.get(tuple(exps), self.ring.base_field.zero)

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            elif m in terms:
                del terms[m]
        return Polynomial(self.ring, terms)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            terms: dict = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    m = monomial_mul(m1, m2)
                    s = terms.get(m, 0) + c1 * c2
                    if s:
                        terms[m] = s
                    elif m in terms:
                        del terms[m]
            return Polynomial(self.ring, terms)
        return self.scale(other)

    def __rmul__(self, other):
        if isinstance(other, Polynomial):
            return NotImplemented
        return self.scale(other)

    def scale(self, value) -> "Polynomial":
        c = self.ring.base_field.elem(value)
        if not c:
            return Polynomial.zero(self.ring)
        return Polynomial(self.ring, {m: c * v for m, v in self.terms.items()})

    def mono_mul(self, exps: tuple[int, ...], coeff=None) -> "Polynomial":
        """Multiply by coeff * x^exps."""
        c = self.ring.base_field.one if coeff is None else self.ring.base_field.elem(coeff)
        if not c:
            return Polynomial.zero(self.ring)
        return Polynomial(
            self.ring, {monomial_mul(m, exps): c * v for m, v in self.terms.items()}
        )

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(self.ring, 1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__  # noqa: B018 -- plain slot write below
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return poly_to_str(self)


def ord_at_origin(f: Polynomial):
    """Largest k with f in m^k: the least total degree of a term.

    Returns INFINITE_ORDER (comparing above every integer) for the zero
    polynomial.
    """
    if not f.terms:
        return INFINITE_ORDER
    return min(sum(m) for m in f.terms)


def poly_to_str(f: Polynomial, order: TermOrder = GREVLEX) -> str:
    if not f.terms:
        return "0"
    names = f.ring.variables
    parts = []
    for m in sorted(f.terms, key=order.key, reverse=True):
        c = f.terms[m]
        factors = []
        for i, e in enumerate(m):
            if e == 1:
                factors.append(names[i])
            elif e > 1:
                factors.append(f"{names[i]}^{e}")
        cs = str(c)
        neg = cs.startswith("-")
        if neg:
            cs = cs[1:]
        if not factors:
            body = cs
        elif cs == "1":
            body = "*".join(factors)
        else:
            body = "*".join([cs] + factors)
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


def graded_piece(fs, degree: int, ring: PolyRing):
    """Basis of the span of the degree-e homogeneous parts of fs.

    Returns (monomials, rows): the degree-e monomial basis (grevlex
    descending) and a reduced list of sparse coefficient vectors indexed into
    it.  Inhomogeneous inputs contribute their degree-e component.
    """
    if degree < 0:
        return (), []
    monos = monomials_of_degree(ring.nvars, degree)
    index = {m: i for i, m in enumerate(monos)}
    red = RowReducer()
    for f in fs:
        if f.ring != ring:
            raise RingMismatchError(f"{f.ring} vs {ring}")
        vec = {index[m]: c for m, c in f.terms.items() if sum(m) == degree}
        red.add(vec)
    rows = [red.rows[p] for p in sorted(red.rows)]
    return monos, rows

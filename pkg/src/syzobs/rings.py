"""Polynomial ring descriptors and monomial term orders.

A monomial is a plain tuple of non-negative integer exponents whose length is
the ambient dimension.  TermOrder.key maps a monomial to a sort key; larger
key means larger monomial.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .fields import QQ

ORDER_KINDS = ("grevlex", "lex", "grlex")

_DEFAULT_NAMES = ("x", "y", "z", "w")


@dataclass(frozen=True)
class TermOrder:
    kind: str = "grevlex"
    # permutation[k] = variable index occupying significance slot k
    permutation: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise ValueError(f"unknown term order {self.kind!r}")
        if self.permutation is not None and sorted(self.permutation) != list(
            range(len(self.permutation))
        ):
            raise ValueError(f"not a permutation: {self.permutation}")

    def key(self, exps: tuple[int, ...]):
        if self.permutation is not None:
            exps = tuple(exps[i] for i in self.permutation)
        if self.kind == "lex":
            return exps
        deg = sum(exps)
        if self.kind == "grlex":
            return (deg, exps)
        # grevlex: among equal degrees the monomial whose reversed exponent
        # vector is smaller (negated: larger) wins
        return (deg, tuple(-e for e in reversed(exps)))


GREVLEX = TermOrder("grevlex")


@dataclass(frozen=True)
class PolyRing:
    """Polynomial ring over an exact field, graded by total degree."""

    nvars: int
    variables: tuple[str, ...]
    base_field: object = field(default_factory=lambda: QQ)

    def __post_init__(self):
        if self.nvars < 1:
            raise ValueError("need at least one variable")
        if len(self.variables) != self.nvars:
            raise ValueError("variable name count does not match dimension")
        if len(set(self.variables)) != self.nvars:
            raise ValueError(f"duplicate variable names in {self.variables}")

    def var_index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"no variable {name!r} in {self.variables}") from None

    def __repr__(self):
        return f"{self.base_field}[{','.join(self.variables)}]"


def make_ring(nvars: int, field_=None, names: tuple[str, ...] | None = None) -> PolyRing:
    if names is None:
        if nvars <= len(_DEFAULT_NAMES):
            names = _DEFAULT_NAMES[:nvars]
        else:
            names = tuple(f"x{i+1}" for i in range(nvars))
    return PolyRing(nvars, tuple(names), field_ if field_ is not None else QQ)

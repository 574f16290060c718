"""Proof-guided search hints for quantifier evaluation.

A hint is attached to a quantifier node and names the small candidate set
that a completeness argument singles out for that quantifier: the unique
polynomial quotient for a divisibility witness, the inverse of a unit, the
scalar constants of the coefficient field, the degree-pinned power of a base
element, the ordered factorizations of a product, and so on.

Hints carry syntax (terms of the ambient formula); substitution rewrites
those terms alongside the formula.  Resolution into concrete candidates is
carrier-specific and lives in `evaluate`.  A hint declares, per structure,
whether its candidate list is exhaustive: an exhaustive list lets an
existential return a definite "false" and a universal a definite "true"
after checking only the candidates.  Hints with `joint > 1` bind that many
consecutive quantifiers of the same kind at once.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from typing import Callable

from .fol import Term

#: Registry of named tuple-domain enumerators, keyed by generator name.
#: Interpretations register the enumerator for their definable domain here.
DOMAIN_GENERATORS: dict[str, Callable] = {}

#: Registry of function-image computations for interpretations: given the
#: carrier values of the argument tuples, the canonical value tuple of the
#: function application.
IMAGE_GENERATORS: dict[str, Callable] = {}


def register_domain_generator(name: str, fn: Callable):
    DOMAIN_GENERATORS[name] = fn


def register_image_generator(name: str, fn: Callable):
    IMAGE_GENERATORS[name] = fn


@dataclass(frozen=True)
class Hint:
    joint: int = 1

    def map_terms(self, fn: Callable[[Term], Term]) -> "Hint":
        """Rebuild the hint with fn applied to every Term field (tuples of
        terms elementwise)."""
        updates = {}
        for f in fields(self):
            v = getattr(self, f.name)
            if isinstance(v, (type(None), int, str, bool)):
                updates[f.name] = v
            elif isinstance(v, tuple):
                updates[f.name] = tuple(fn(t) for t in v)
            else:
                updates[f.name] = fn(v)
        return type(self)(**updates)


@dataclass(frozen=True)
class QuotientHint(Hint):
    """For `exists w (dividend = divisor * w)`: the exact quotient, when the
    carrier decides divisibility (unique over integral domains)."""

    dividend: Term = None
    divisor: Term = None


@dataclass(frozen=True)
class InverseHint(Hint):
    """For `exists v (target * v = 1)`: the inverse of target, if a unit."""

    target: Term = None


@dataclass(frozen=True)
class ScalarShiftQuotientHint(Hint):
    """For `exists q (dividend - q*divisor  is a scalar)`: over a field the
    only possible q is the division-algorithm quotient (the remainder is a
    scalar or nothing is)."""

    dividend: Term = None
    divisor: Term = None


@dataclass(frozen=True)
class ScalarHint(Hint):
    """Candidates are the scalars (coefficient-field constants) of a
    polynomial carrier; exhaustive when the coefficient ring is finite."""

    include_zero: bool = True


@dataclass(frozen=True)
class IndeterminateHint(Hint):
    """The single candidate x (the first polynomial variable).

    With `assume_complete`, the one instance decides a universal: if x admits
    a scalar remainder under division by l, so does every polynomial
    (division algorithm), and if 1 + x*f is a unit then f has nilpotent
    coefficients, which makes 1 + g*f a unit for every g.  Without the flag
    the candidate is only a first guess for a witness."""

    assume_complete: bool = True


@dataclass(frozen=True)
class NilpotencyProbeHint(Hint):
    """The single candidate x, for `forall g exists v ((1 + f*g)*v = 1)`:
    if 1 + x*f is a unit then every coefficient of f is nilpotent (by the
    unit characterization of polynomial rings), and then 1 + g*f is a unit
    for every g.  Exhaustive wherever nilpotence of coefficients is
    decidable."""


@dataclass(frozen=True)
class PinnedPowerHint(Hint):
    """For `exists z' (... z' a power of base ... z' scalar-shift-equal to
    model ...)`: over a field the degree of z' is pinned to deg(model), so
    base**(deg model / deg base) is the only possible candidate."""

    base: Term = None
    model: Term = None


@dataclass(frozen=True)
class PowersUpToHint(Hint):
    """For a universal over powers of `base` constrained by
    `base^k - 1 | limit - 1`-style premises: only exponents up to
    deg(limit)/deg(base) can satisfy the premise."""

    base: Term = None
    limit: Term = None


@dataclass(frozen=True)
class FactorPairsHint(Hint):
    """Joint hint for `forall g forall h (product = g*h -> ...)`: all ordered
    factorizations of the product, from the finite-field factorization."""

    product: Term = None
    joint: int = 2


@dataclass(frozen=True)
class RootShiftHint(Hint):
    """For the universal over scalar shifts h with (base + h) dividing g:
    candidates derived from the roots of g when base has degree one."""

    base: Term = None
    dividend: Term = None


@dataclass(frozen=True)
class NaturalWitnessHint(Hint):
    """Witness for the natural-number membership formula over Q[x]: when the
    parameter is n*1 with n a nonnegative integer, g = x(x+1)...(x+n)."""

    parameter: Term = None


@dataclass(frozen=True)
class LcmWitnessHint(Hint):
    """Integer carrier: the least common multiple as the witness for the
    divisibility-rendered lcm formula."""

    left: Term = None
    right: Term = None


@dataclass(frozen=True)
class CommonMultipleHint(Hint):
    """Integer carrier, for `forall c (left | c & right | c -> target | c)`:
    checking c = lcm(left, right) is exhaustive, since the lcm divides every
    common multiple."""

    left: Term = None
    right: Term = None


@dataclass(frozen=True)
class OneAsDivisorHint(Hint):
    """Integer carrier: candidates [1], for the quantifiers of the formula
    defining 1 as the element dividing everything."""


@dataclass(frozen=True)
class DomainTupleHint(Hint):
    """Joint hint enumerating an interpretation's definable domain: candidate
    tuples from a registered generator.  Never exhaustive (the domain is
    infinite); no fallback to raw carrier enumeration."""

    generator: str = ""
    joint: int = 1


@dataclass(frozen=True)
class FunctionImageHint(Hint):
    """Joint hint for the fresh value tuple of a translated function
    application: the canonical image tuple computed by the interpretation's
    coordinate arithmetic.  Exhaustive because the function formula pins the
    value tuple to one equivalence class and the surrounding formulas are
    class-invariant (that is the interpretation contract, checked by the
    claims for the interpretation)."""

    generator: str = ""
    args: tuple[Term, ...] = ()
    joint: int = 1

"""Semantic oracles for the definable sets and element predicates.

These are the ground-truth counterparts of the formula library: direct
computations (factorization, repeated multiplication, coefficient tests)
against which the formula-level definitions are checked.  They deliberately
avoid the evaluator so the two routes stay independent.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _fpoly
from . import rings as R
from .rings import Element, EnumBound, RingDescriptor, RingError


@dataclass(frozen=True)
class ElementClass:
    """Classification flags for one element.  `regular_exact` records whether
    the regularity verdict is exact or only certified up to the bound."""

    nilpotent: bool
    idempotent: bool
    regular: bool
    regular_exact: bool
    unit: bool


def _is_domain(ring: RingDescriptor) -> bool:
    if ring.is_field or isinstance(ring, R.Integers):
        return True
    if isinstance(ring, R.Poly):
        return _is_domain(ring.coeff)
    return False


def _regular(ring: RingDescriptor, a: Element, bound: EnumBound) -> tuple[bool, bool]:
    if _is_domain(ring):
        return a != ring.zero, True
    if ring.is_finite:
        return all(a * b != ring.zero for b in ring.elements() if b != ring.zero), True
    if isinstance(ring, R.Poly) and ring.coeff.is_finite:
        # a zero divisor in R[X] is annihilated by a nonzero constant of R,
        # so scanning constants decides regularity exactly
        ok = all(
            ring.constant(c) * a != ring.zero
            for c in ring.coeff.elements()
            if c != ring.coeff.zero
        )
        return ok, True
    for b in ring.elements(bound):
        if b != ring.zero and a * b == ring.zero:
            return False, True
    return True, False


def classify(ring: RingDescriptor, a: Element, bound: EnumBound | None = None) -> ElementClass:
    bound = bound or EnumBound()
    regular, exact = _regular(ring, a, bound)
    return ElementClass(
        nilpotent=R.is_nilpotent(ring, a),
        idempotent=a * a == a,
        regular=regular,
        regular_exact=exact,
        unit=R.is_unit(ring, a),
    )


def _field_poly(ring: RingDescriptor, what: str) -> R.Poly:
    if not (isinstance(ring, R.Poly) and len(ring.vars) == 1 and ring.coeff.is_field):
        raise RingError(f"{what} needs a univariate polynomial ring over a field")
    return ring


def in_L(ring: RingDescriptor, l: Element) -> bool:
    """Membership in the degree-one polynomials."""
    _field_poly(ring, "degree-one membership")
    return R.degree(l) == 1


def _finite_field_table(ring: R.Poly):
    table = R.coeff_table(ring.coeff)
    if not table.is_field:
        raise RingError("oracle needs a finite field of coefficients")
    return table


def _lpow_dense(table, ld, fd, factor_of) -> bool:
    if ld:
        if not _fpoly.pdivides(table, ld, fd):
            return False
    elif fd:
        return False
    lm1 = _fpoly.psub(table, ld, (1,))
    fm1 = _fpoly.psub(table, fd, (1,))
    if lm1:
        if not _fpoly.pdivides(table, lm1, fm1):
            return False
    elif fm1:
        return False
    # third condition: every divisor of f is a unit or a multiple of l
    l_unit = _fpoly.pdeg(ld) == 0
    if not fd:
        # every element divides 0, so only a unit l makes all nonunits multiples
        return l_unit
    if l_unit:
        return True
    if not ld:
        # multiples of 0 are just 0, so f must have no nonunit divisors
        return _fpoly.pdeg(fd) == 0
    if _fpoly.pdeg(fd) == 0:
        return True
    _, factors = factor_of(fd)
    lm = _fpoly.pmonic(table, ld)[0]
    return set(factors) == {lm}


def in_lpow_oracle(ring: RingDescriptor, l: Element, f: Element) -> bool:
    """Exact truth of the three logical-power conditions over a finite field.

    Divisibility goes through kernel division; the divisor condition is
    decided from the factorization of f (unique factorization makes the two
    readings coincide), independently of any power computation."""
    ring = _field_poly(ring, "logical-power oracle")
    table = _finite_field_table(ring)
    return _lpow_dense(
        table,
        R.to_dense_indices(l),
        R.to_dense_indices(f),
        lambda fd: _fpoly.pfactor(table, fd),
    )


def in_pow_oracle(ring: RingDescriptor, l: Element, y: Element) -> tuple[bool, int | None]:
    """Is y a positive power of l?  Exact by repeated multiplication, with the
    exponent if so."""
    ring = _field_poly(ring, "power oracle")
    dl = R.degree(l)
    if dl < 1:
        raise RingError("power oracle needs a nonconstant base")
    dy = R.degree(y)
    if dy < dl or dy % dl:
        return False, None
    n = dy // dl
    if R.pow_element(l, n) == y:
        return True, n
    return False, None


def in_mpow_oracle(ring: RingDescriptor, l: Element, y: Element) -> tuple[bool, int | None]:
    """Powers with exponent a positive multiple of the characteristic."""
    p = ring.characteristic()
    if p <= 0:
        raise RingError("characteristic must be positive")
    ok, n = in_pow_oracle(ring, l, y)
    if ok and n % p == 0:
        return True, n
    return False, n if ok else None


def in_ppow_oracle(ring: RingDescriptor, l: Element, y: Element) -> tuple[bool, int | None]:
    """Powers with exponent a positive power of the characteristic."""
    p = ring.characteristic()
    if p <= 0:
        raise RingError("characteristic must be positive")
    ok, n = in_pow_oracle(ring, l, y)
    if not ok:
        return False, None
    m = n
    while m % p == 0:
        m //= p
    return (m == 1 and n >= p), n


def nilradical_members(ring: RingDescriptor, bound: EnumBound | None = None) -> list[Element]:
    """All polynomials within the bound whose coefficients are nilpotent in
    the base ring."""
    if not isinstance(ring, R.Poly):
        raise RingError("nilradical enumeration needs a polynomial ring")
    bound = bound or EnumBound()
    return [a for a in ring.elements(bound) if R.is_nilpotent(ring, a)]


def jacobson_membership(ring: RingDescriptor, f: Element) -> bool:
    """Is 1 + f*g a unit for every g?  The single probe g = x decides the
    negative direction (a unit 1 + x*f forces nilpotent coefficients on f),
    and nilpotence of f settles the positive one."""
    if not isinstance(ring, R.Poly):
        raise RingError("radical membership needs a polynomial ring")
    x = ring.var(ring.vars[0])
    return R.is_unit(ring, ring.one + x * f)


def power_order_hypotheses(
    ring: RingDescriptor, l: Element, max_exp: int = 10
) -> dict[str, bool]:
    """The three element conditions behind the exponent-arithmetic lemma:
    l-1 regular; l^m - 1 | l^n - 1 exactly when m | n (checked on a grid);
    and no nonzero integer multiple of 1 is a multiple of l-1.

    Over characteristic zero the integer-multiple condition is certified by
    the degree argument (a degree-one l-1 cannot divide a nonzero constant);
    in positive characteristic q the finitely many multiples n*1, n < q, are
    checked directly."""
    ring = _field_poly(ring, "power-order hypotheses")
    lm1 = l - ring.one
    regular = classify(ring, lm1).regular

    div_law = True
    powers = {0: ring.one}
    for k in range(1, max_exp + 1):
        powers[k] = powers[k - 1] * l
    for m in range(1, max_exp + 1):
        for n in range(1, max_exp + 1):
            lhs = R.exact_quotient(ring, powers[n] - ring.one, powers[m] - ring.one)
            if (lhs is not None) != (n % m == 0):
                div_law = False

    if lm1 == ring.zero:
        torsion = True  # the only multiple of 0 is 0
    elif R.degree(lm1) >= 1:
        q = ring.characteristic()
        if q == 0:
            torsion = True  # degree argument: a nonconstant cannot divide a nonzero constant
        else:
            torsion = all(
                R.exact_quotient(ring, ring.from_int(n), lm1) is None
                for n in range(1, q)
                if ring.from_int(n) != ring.zero
            )
    else:
        torsion = False  # a unit constant divides 1*1 != 0

    return {"regular": regular, "divisibility_law": div_law, "torsion": torsion}

"""The library of defining formulas in the language of rings.

Everything here is pure first-order syntax over (+, *, -, 0, 1, =); the
set-membership shorthands are macro-expanded:

* ``in_R(t)``: t is a scalar, i.e. zero or a unit.  Over a polynomial ring
  over a field this defines exactly the coefficient field.
* ``alpha(l)``: l is not a scalar and every f leaves a scalar remainder
  modulo l.  Over a univariate polynomial ring over a field this defines the
  degree-one polynomials.
* ``lpow(l, f)``: the three divisibility conditions making f a "logical
  power" of l: l | f, l-1 | f-1, and every divisor of f is a unit or a
  multiple of l.
* ``mpow(l, y)``: y is a logical power of l and (l-1)^2 | y-1; for degree-one
  l over a field this captures the powers l^n with the characteristic
  dividing n.
* ``ppow(l, y)``: mpow plus the descent condition on smaller logical powers,
  capturing exponents that are powers of the characteristic.
* ``gamma(t)``: the chain-of-shifted-divisors formula defining the natural
  multiples of 1 in polynomial rings over a field of characteristic zero.
* ``theta(f)``: 1 + f*g is a unit for every g; defines the nilradical of a
  polynomial ring.
* ``exp_eq``, ``exp_le``, ``exp_div``: the two-dimensional comparisons of
  power exponents (equality via a unit multiple plus scalar shift; order and
  divisibility via an auxiliary power and shifted divisibility).

Note on mpow/ppow: the underlying exponent characterizations speak about
true powers of l; the formulas use the logical-power conditions instead,
which is harmless precisely because logical powers and powers coincide for
degree-one l over a field (claim ``prop-1.7`` checks this coincidence).

Quantifiers carry search hints recording the completeness arguments (unique
quotients, scalar candidates, degree-pinned powers); see `hints`.
"""

from __future__ import annotations

from .fol import (
    And,
    Atom,
    Exists,
    Forall,
    Formula,
    Implies,
    Not,
    ONE,
    Or,
    Term,
    Var,
    ZERO,
    atom_eq,
    conj,
    fresh_name,
    tadd,
    tmul,
    tsub,
    term_vars,
)
from .hints import (
    FactorPairsHint,
    IndeterminateHint,
    InverseHint,
    NaturalWitnessHint,
    NilpotencyProbeHint,
    PinnedPowerHint,
    PowersUpToHint,
    QuotientHint,
    RootShiftHint,
    ScalarHint,
    ScalarShiftQuotientHint,
)


def _fresh(base: str, *terms: Term) -> str:
    used: set[str] = set()
    for t in terms:
        used |= term_vars(t)
    return fresh_name(base, used)


def unit_formula(t: Term) -> Formula:
    v = _fresh("v", t)
    return Exists(v, atom_eq(tmul(t, Var(v)), ONE), hint=InverseHint(target=t))


def in_scalars(t: Term) -> Formula:
    return Or(atom_eq(t, ZERO), unit_formula(t))


def divides_formula(a: Term, b: Term) -> Formula:
    w = _fresh("w", a, b)
    return Exists(w, atom_eq(b, tmul(a, Var(w))), hint=QuotientHint(dividend=b, divisor=a))


def alpha_formula(l: Term) -> Formula:
    f = _fresh("f", l)
    q = _fresh("q", l, Var(f))
    body = Exists(
        q,
        in_scalars(tsub(Var(f), tmul(Var(q), l))),
        hint=ScalarShiftQuotientHint(dividend=Var(f), divisor=l),
    )
    return And(Not(in_scalars(l)), Forall(f, body, hint=IndeterminateHint()))


def lpow_formula(l: Term, f: Term) -> Formula:
    g = _fresh("g", l, f)
    h = _fresh("h", l, f, Var(g))
    w = _fresh("w", l, Var(g))
    divisor_clause = Forall(
        g,
        Forall(
            h,
            Implies(
                atom_eq(f, tmul(Var(g), Var(h))),
                Or(
                    unit_formula(Var(g)),
                    Exists(w, atom_eq(Var(g), tmul(l, Var(w))), hint=QuotientHint(dividend=Var(g), divisor=l)),
                ),
            ),
        ),
        hint=FactorPairsHint(product=f),
    )
    return conj(
        [
            divides_formula(l, f),
            divides_formula(tsub(l, ONE), tsub(f, ONE)),
            divisor_clause,
        ]
    )


def mpow_formula(l: Term, y: Term) -> Formula:
    c = _fresh("c", l, y)
    square = tmul(tsub(l, ONE), tsub(l, ONE))
    shift = Exists(
        c,
        atom_eq(tmul(square, Var(c)), tsub(y, ONE)),
        hint=QuotientHint(dividend=tsub(y, ONE), divisor=square),
    )
    return And(lpow_formula(l, y), shift)


def ppow_formula(l: Term, y: Term) -> Formula:
    yp = _fresh("y'", l, y)
    descent = Forall(
        yp,
        Implies(
            conj(
                [
                    lpow_formula(l, Var(yp)),
                    Not(atom_eq(Var(yp), l)),
                    divides_formula(tsub(Var(yp), ONE), tsub(y, ONE)),
                ]
            ),
            mpow_formula(l, Var(yp)),
        ),
        hint=PowersUpToHint(base=l, limit=y),
    )
    return And(mpow_formula(l, y), descent)


def gamma_formula(t: Term) -> Formula:
    f = _fresh("f", t)
    g = _fresh("g", t, Var(f))
    h = _fresh("h", t, Var(f), Var(g))
    chain = Forall(
        h,
        Implies(
            And(in_scalars(Var(h)), divides_formula(tadd(Var(f), Var(h)), Var(g))),
            Or(
                divides_formula(tadd(tadd(Var(f), Var(h)), ONE), Var(g)),
                atom_eq(Var(h), t),
            ),
        ),
        hint=RootShiftHint(base=Var(f), dividend=Var(g)),
    )
    matrix = conj(
        [
            Not(in_scalars(Var(f))),
            Not(atom_eq(Var(g), ZERO)),
            divides_formula(Var(f), Var(g)),
            chain,
        ]
    )
    return Exists(
        f,
        Exists(g, matrix, hint=NaturalWitnessHint(parameter=t)),
        hint=IndeterminateHint(assume_complete=False),
    )


def theta_formula(f: Term) -> Formula:
    g = _fresh("g", f)
    v = _fresh("v", f, Var(g))
    shifted = tadd(ONE, tmul(f, Var(g)))
    return Forall(
        g,
        Exists(v, atom_eq(tmul(shifted, Var(v)), ONE), hint=InverseHint(target=shifted)),
        hint=NilpotencyProbeHint(),
    )


def exp_eq_formula(y1: Term, y2: Term) -> Formula:
    u = _fresh("u", y1, y2)
    rho = _fresh("rho", y1, y2, Var(u))
    body = conj(
        [
            unit_formula(Var(u)),
            Or(atom_eq(Var(rho), ZERO), unit_formula(Var(rho))),
            atom_eq(y1, tadd(tmul(Var(u), y2), Var(rho))),
        ]
    )
    return Exists(
        u,
        Exists(rho, body, hint=ScalarHint(include_zero=True)),
        hint=ScalarHint(include_zero=False),
    )


def exp_le_formula(l1: Term, y1: Term, l2: Term, y2: Term) -> Formula:
    zp = _fresh("z'", l1, y1, l2, y2)
    body = conj(
        [
            ppow_formula(l1, Var(zp)),
            exp_eq_formula(Var(zp), y2),
            divides_formula(tsub(y1, ONE), tsub(Var(zp), ONE)),
        ]
    )
    return Exists(zp, body, hint=PinnedPowerHint(base=l1, model=y2))


def exp_div_formula(l1: Term, y1: Term, l2: Term, y2: Term) -> Formula:
    zp = _fresh("z'", l1, y1, l2, y2)
    w1 = _fresh("w1", l1, y1, l2, y2, Var(zp))
    w2 = _fresh("w2", l1, y1, l2, y2, Var(zp), Var(w1))
    quotient_div = Exists(
        w1,
        And(
            atom_eq(y1, tmul(l1, Var(w1))),
            Exists(
                w2,
                And(
                    atom_eq(Var(zp), tmul(l1, Var(w2))),
                    divides_formula(tsub(Var(w1), ONE), tsub(Var(w2), ONE)),
                ),
                hint=QuotientHint(dividend=Var(zp), divisor=l1),
            ),
        ),
        hint=QuotientHint(dividend=y1, divisor=l1),
    )
    body = conj(
        [
            ppow_formula(l1, Var(zp)),
            exp_eq_formula(Var(zp), y2),
            quotient_div,
        ]
    )
    return Exists(zp, body, hint=PinnedPowerHint(base=l1, model=y2))


def charp_domain_formula(l: Term, y: Term) -> Formula:
    """Domain of the exponent interpretation: l degree one, y a power of l
    with characteristic-power exponent."""
    return And(alpha_formula(l), ppow_formula(l, y))


def build_defining_formulas() -> dict[str, tuple[tuple[str, ...], Formula]]:
    """Named formula library: name -> (parameters, formula).

    Entries are usable as macros in formula text, e.g. "alpha(l)" or
    "lpow(l, f)"."""
    return {
        "in_R": (("t",), in_scalars(Var("t"))),
        "unit": (("t",), unit_formula(Var("t"))),
        "div": (("a", "b"), divides_formula(Var("a"), Var("b"))),
        "alpha": (("l",), alpha_formula(Var("l"))),
        "lpow": (("l", "f"), lpow_formula(Var("l"), Var("f"))),
        "mpow": (("l", "y"), mpow_formula(Var("l"), Var("y"))),
        "ppow": (("l", "y"), ppow_formula(Var("l"), Var("y"))),
        "gamma": (("t",), gamma_formula(Var("t"))),
        "theta": (("f",), theta_formula(Var("f"))),
        "dom": (("l", "y"), charp_domain_formula(Var("l"), Var("y"))),
        "exp_eq": (("y1", "y2"), exp_eq_formula(Var("y1"), Var("y2"))),
        "exp_le": (
            ("l1", "y1", "l2", "y2"),
            exp_le_formula(Var("l1"), Var("y1"), Var("l2"), Var("y2")),
        ),
        "exp_div": (
            ("l1", "y1", "l2", "y2"),
            exp_div_formula(Var("l1"), Var("y1"), Var("l2"), Var("y2")),
        ),
    }

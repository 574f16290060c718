"""Multi-dimensional interpretations and the induced sentence translation.

An interpretation packages a dimension n, a domain formula on n designated
variables, an equality formula on 2n, and one formula per relation/function
symbol of the source signature, all over the target signature.  The induced
translation maps each source variable to an n-tuple of fresh target
variables, relativizes quantifiers to the domain formula, rewrites atoms
through the per-symbol formulas, and flattens nested function terms through
fresh existentially quantified value tuples (left-to-right, innermost
first).  An optional coordinate map supports testing only; it never appears
in generated syntax.

Concrete interpretations built here:

* `gamma_charp`: dimension-2 interpretation of (Z+, <=, |) inside univariate
  polynomial rings over a field of positive characteristic p.  Pairs
  (l, l**(p**n)) stand for the exponent index n; equality of indices is a
  unit multiple plus a scalar shift, order and divisibility of indices are
  shifted divisibilities of l**(p**m) - 1 style elements.  The divisibility
  formula divides out one factor of l first: without that shift the same
  shape would compare the powers p**m themselves (giving order, not
  divisibility of exponents).
* `lcm_arithmetic_interpretation`: multiplication of positive integers
  expressed through + and | via the lcm identity
  lcm(k+m, k+m+1) = lcm(k, k+1) + lcm(m, m+1) + 2j  iff  j = k*m.
* `z_in_zplus`: signed integers as difference pairs of positive integers.
* `quotient_interpretation(theta)`: the canonical dimension-1 interpretation
  of S/I in S when theta defines the ideal I; equality becomes
  theta(b - c) and everything else is carried through verbatim.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Callable, Mapping

from . import hints as H
from . import rings as R
from .evaluate import RingCarrier, Structure
from .fol import (
    And,
    Apply,
    Atom,
    Exists,
    Forall,
    Formula,
    Implies,
    Not,
    ONE,
    Or,
    Signature,
    Term,
    Var,
    ZERO,
    RING_SIG,
    ZPLUS_ADD_DIV,
    ZPLUS_ADD_MUL,
    ZPLUS_LEQ_DIV,
    Z_ARITH,
    atom_eq,
    check_formula,
    conj,
    format_formula,
    free_vars,
    fresh_name,
    rename_bound,
    substitute,
    tadd,
    tmul,
    tsub,
    term_vars,
)
from .formulas import (
    charp_domain_formula,
    exp_div_formula,
    exp_eq_formula,
    exp_le_formula,
    theta_formula,
)
from .hints import CommonMultipleHint, DomainTupleHint, FunctionImageHint, LcmWitnessHint, OneAsDivisorHint
from .rings import Element, EnumBound, RingDescriptor, RingError


class InterpError(ValueError):
    """Signature mismatch, open formula, or malformed interpretation data."""


FormulaSpec = tuple[tuple[str, ...], Formula]


@dataclass(frozen=True)
class Interpretation:
    name: str
    dim: int
    source: Signature
    target: Signature
    domain: FormulaSpec
    equality: FormulaSpec
    relations: Mapping[str, FormulaSpec]
    functions: Mapping[str, FormulaSpec]
    carried: frozenset[str] = frozenset()
    domain_generator: str | None = None
    coordinate_map: Callable | None = field(default=None, compare=False, repr=False)
    numeral_function: Callable[[int], FormulaSpec] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "relations", MappingProxyType(dict(self.relations)))
        object.__setattr__(self, "functions", MappingProxyType(dict(self.functions)))
        self._check_spec(self.domain, self.dim, "domain")
        self._check_spec(self.equality, 2 * self.dim, "equality")
        for rel, spec in self.relations.items():
            arity = self.source.relations.get(rel)
            if arity is None:
                raise InterpError(f"relation {rel!r} is not in the source signature")
            self._check_spec(spec, arity * self.dim, f"relation {rel!r}")
        for fn, spec in self.functions.items():
            arity = self.source.functions.get(fn)
            if arity is None:
                raise InterpError(f"function {fn!r} is not in the source signature")
            self._check_spec(spec, (arity + 1) * self.dim, f"function {fn!r}")
        if self.carried and self.dim != 1:
            raise InterpError("carried symbols require a one-dimensional interpretation")
        for fn in self.carried:
            if fn == "#numerals":
                if not self.target.numerals:
                    raise InterpError("target signature has no numerals to carry")
                continue
            if self.source.functions.get(fn) != self.target.functions.get(fn):
                raise InterpError(f"carried symbol {fn!r} must exist in both signatures")

    def _check_spec(self, spec: FormulaSpec, nvars: int, what: str):
        params, formula = spec
        if len(params) != nvars:
            raise InterpError(f"{what} formula must designate {nvars} variables")
        if not free_vars(formula) <= set(params):
            raise InterpError(f"{what} formula has stray free variables")
        check_formula(self.target, formula)


def instantiate(spec: FormulaSpec, args: list[Term]) -> Formula:
    params, formula = spec
    if len(params) != len(args):
        raise InterpError(f"expected {len(params)} arguments, got {len(args)}")
    used: set[str] = set()
    for a in args:
        used |= term_vars(a)
    body = rename_bound(formula, used)
    return substitute(body, dict(zip(params, args)))


# -- the induced sentence translation -------------------------------------------


def _is_trivial_domain(spec: FormulaSpec) -> bool:
    """True when the domain formula is a conjunction of reflexive equalities
    over its designated variables, i.e. relativization is a no-op."""
    params, formula = spec

    def parts(f: Formula):
        if isinstance(f, And):
            yield from parts(f.left)
            yield from parts(f.right)
        else:
            yield f

    for p in parts(formula):
        if not (isinstance(p, Atom) and p.rel == "=" and p.args[0] == p.args[1] and isinstance(p.args[0], Var)):
            return False
    return True


class _DropHint(Exception):
    pass


class _Translator:
    def __init__(self, interp: Interpretation):
        self.interp = interp
        self.used: set[str] = set()
        self.trivial_domain = _is_trivial_domain(interp.domain)

    def fresh(self, base: str) -> str:
        name = fresh_name(base, self.used)
        self.used.add(name)
        return name

    def tuple_names(self, base: str) -> tuple[str, ...]:
        if self.interp.dim == 1:
            return (self.fresh(base),)
        return tuple(self.fresh(f"{base}_{i+1}") for i in range(self.interp.dim))

    def translate(self, phi: Formula) -> Formula:
        if free_vars(phi):
            raise InterpError("only sentences can be translated")
        check_formula(self.interp.source, phi)
        return self._tr(phi, {})

    def _tr(self, phi: Formula, varmap: dict[str, tuple[str, ...]]) -> Formula:
        interp = self.interp
        if isinstance(phi, Atom):
            return self._tr_atom(phi, varmap)
        if isinstance(phi, Not):
            return Not(self._tr(phi.body, varmap))
        if isinstance(phi, (And, Or, Implies)):
            return type(phi)(self._tr(phi.left, varmap), self._tr(phi.right, varmap))
        if isinstance(phi, (Exists, Forall)):
            names = self.tuple_names(phi.var)
            inner = self._tr(phi.body, {**varmap, phi.var: names})
            if self.trivial_domain:
                core: Formula = inner
            else:
                dom = instantiate(interp.domain, [Var(n) for n in names])
                core = And(dom, inner) if isinstance(phi, Exists) else Implies(dom, inner)
            hint = (
                DomainTupleHint(generator=interp.domain_generator, joint=interp.dim)
                if interp.domain_generator
                else None
            )
            if hint is None and phi.hint is not None and interp.dim == 1:
                # carry a source-level search hint through a one-dimensional
                # translation when all its terms survive the term mapping
                try:
                    hint = phi.hint.map_terms(self._hint_term_map(varmap))
                except _DropHint:
                    hint = None
            kind = Exists if isinstance(phi, Exists) else Forall
            for n in reversed(names[1:]):
                core = kind(n, core)
            return kind(names[0], core, hint)
        raise InterpError(f"not a formula: {phi!r}")

    def _hint_term_map(self, varmap):
        interp = self.interp

        def walk(t: Term) -> Term:
            if isinstance(t, Var):
                names = varmap.get(t.name)
                if names is None or len(names) != 1:
                    raise _DropHint()
                return Var(names[0])
            is_numeral = t.fn.isdigit() and t.fn not in interp.source.functions
            if is_numeral:
                if "#numerals" in interp.carried:
                    return Apply(t.fn, ())
                raise _DropHint()
            if t.fn not in interp.carried:
                raise _DropHint()
            return Apply(t.fn, tuple(walk(a) for a in t.args))

        return walk

    def _tr_atom(self, atom: Atom, varmap) -> Formula:
        constraints: list[Formula] = []
        exist_names: list[tuple[str, ...]] = []
        exist_hints: list[object] = []

        def rep_terms(rep) -> list[Term]:
            if isinstance(rep, tuple):
                return [Var(n) for n in rep]
            return [rep]

        def walk(t: Term):
            """Value representation of a source term: a tuple of target
            variable names, or (dim 1, carried symbols) a target term."""
            interp = self.interp
            if isinstance(t, Var):
                return varmap[t.name]
            fn = t.fn
            is_numeral = fn.isdigit() and fn not in interp.source.functions
            if not is_numeral and fn in interp.carried:
                parts = []
                for c in t.args:
                    r = walk(c)
                    parts.extend(rep_terms(r))
                return Apply(fn, tuple(parts))
            if is_numeral and "#numerals" in interp.carried:
                return Apply(fn, ())
            children: list[Term] = []
            for c in t.args:
                children.extend(rep_terms(walk(c)))
            if is_numeral:
                if interp.numeral_function is None:
                    raise InterpError(f"numeral {fn} cannot be translated by {interp.name}")
                spec = interp.numeral_function(int(fn))
                image_key = f"{interp.name}:#numeral:{fn}"
            else:
                if fn not in interp.functions:
                    raise InterpError(f"function {fn!r} cannot be translated by {interp.name}")
                spec = interp.functions[fn]
                image_key = f"{interp.name}:{fn}"
            names = self.tuple_names("w")
            exist_names.append(names)
            hint = (
                FunctionImageHint(generator=image_key, args=tuple(children), joint=interp.dim)
                if image_key in H.IMAGE_GENERATORS
                else None
            )
            exist_hints.append(hint)
            if not self.trivial_domain:
                constraints.append(instantiate(interp.domain, [Var(n) for n in names]))
            constraints.append(instantiate(spec, children + [Var(n) for n in names]))
            return names

        flat_args: list[Term] = []
        for t in atom.args:
            flat_args.extend(rep_terms(walk(t)))
        if atom.rel == "=":
            spec = self.interp.equality
        else:
            spec = self.interp.relations.get(atom.rel)
            if spec is None:
                raise InterpError(f"relation {atom.rel!r} cannot be translated by {self.interp.name}")
        core = instantiate(spec, flat_args)
        if constraints:
            core = conj(constraints + [core])
        for names, hint in zip(reversed(exist_names), reversed(exist_hints)):
            for n in reversed(names[1:]):
                core = Exists(n, core)
            core = Exists(names[0], core, hint)
        return core


def translate_sentence(interp: Interpretation, phi: Formula) -> Formula:
    """The sentence translation induced by the interpretation."""
    return _Translator(interp).translate(phi)


def compose_translations(outer: Interpretation, inner: Interpretation) -> Callable[[Formula], Formula]:
    """Sentences about the outer source become sentences about the inner
    target: translate through `outer`, then through `inner`."""
    if outer.target != inner.source:
        raise InterpError(
            f"cannot compose: {outer.name} targets a different signature than {inner.name} interprets"
        )

    def transform(phi: Formula) -> Formula:
        return translate_sentence(inner, translate_sentence(outer, phi))

    return transform


# -- the exponent interpretation (positive characteristic) ----------------------


def _charp_power_pairs(structure: Structure, bound: EnumBound):
    """Members of the definable domain within the degree bound: pairs
    (l, l**(p**n)) with l of degree one, ordered by exponent then by l."""
    carrier = structure.carrier
    if not isinstance(carrier, RingCarrier):
        return
    ring = carrier.ring
    if not (isinstance(ring, R.Poly) and len(ring.vars) == 1 and ring.coeff.is_field):
        return
    p = ring.characteristic()
    if p == 0 or not ring.coeff.is_finite:
        return
    x = ring.var(ring.vars[0])
    lines = []
    for lead in ring.coeff.elements():
        if lead == ring.coeff.zero:
            continue
        for const in ring.coeff.elements():
            lines.append(ring.constant(lead) * x + ring.constant(const))
    exps = []
    q = p
    while q <= max(bound.max_degree, p):
        exps.append(q)
        q *= p
    for e in exps:
        for l in lines:
            yield (l, R.pow_element(l, e))


H.register_domain_generator("charp-power-pairs", _charp_power_pairs)


def _charp_coordinate(l: Element, y: Element) -> int:
    """Index of a domain pair: the n with y = l**(p**n)."""
    ring = l.ring
    p = ring.characteristic()
    if p == 0 or R.degree(l) != 1:
        raise InterpError("coordinate map needs a degree-one base in positive characteristic")
    dy = R.degree(y)
    n = 0
    m = dy
    while m > 1 and m % p == 0:
        m //= p
        n += 1
    if m != 1 or n < 1 or R.pow_element(l, p**n) != y:
        raise InterpError(f"({l!r}, {y!r}) is not in the interpretation domain")
    return n


def gamma_charp() -> Interpretation:
    """Two-dimensional interpretation of (Z+, <=, |) in univariate polynomial
    rings over a field of positive characteristic; uniform in the ring."""
    l, y = Var("l"), Var("y")
    return Interpretation(
        name="gamma-charp",
        dim=2,
        source=ZPLUS_LEQ_DIV,
        target=RING_SIG,
        domain=(("l", "y"), charp_domain_formula(l, y)),
        equality=(("l1", "y1", "l2", "y2"), exp_eq_formula(Var("y1"), Var("y2"))),
        relations={
            "<=": (("l1", "y1", "l2", "y2"), exp_le_formula(Var("l1"), Var("y1"), Var("l2"), Var("y2"))),
            "|": (("l1", "y1", "l2", "y2"), exp_div_formula(Var("l1"), Var("y1"), Var("l2"), Var("y2"))),
        },
        functions={},
        domain_generator="charp-power-pairs",
        coordinate_map=_charp_coordinate,
    )


def frobenius_shift(ring: RingDescriptor, l1: Element, l2: Element, k: int) -> tuple[Element, Element]:
    """Scalars (u, rho) with l1**k = u*l2**k + rho, for k a positive power of
    the characteristic: k-th powering is additive, so u = (a1/a2)**k and
    rho = (b1 - a1*b2/a2)**k when li = ai*x + bi."""
    if not (isinstance(ring, R.Poly) and len(ring.vars) == 1 and ring.coeff.is_field):
        raise RingError("frobenius shift needs a univariate polynomial ring over a field")
    p = ring.characteristic()
    if p == 0:
        raise RingError("frobenius shift needs positive characteristic")
    m = k
    while m > 1 and m % p == 0:
        m //= p
    if m != 1 or k < p:
        raise RingError(f"{k} is not a positive power of the characteristic {p}")
    if R.degree(l1) != 1 or R.degree(l2) != 1:
        raise RingError("frobenius shift needs degree-one polynomials")
    a1, b1 = R.linear_parts(l1)
    a2, b2 = R.linear_parts(l2)
    a2_inv = R.try_inverse(ring.coeff, a2)
    u = R.pow_element(a1 * a2_inv, k)
    rho = R.pow_element(b1 - a1 * b2 * a2_inv, k)
    lhs = R.pow_element(l1, k)
    rhs = ring.constant(u) * R.pow_element(l2, k) + ring.constant(rho)
    if lhs != rhs:
        raise RingError("frobenius shift identity failed to verify")
    return u, rho


# -- arithmetic interpretations ---------------------------------------------------


def _is_lcm_formula(a: Term, b: Term, l: Term) -> Formula:
    c = fresh_name("c", term_vars(a) | term_vars(b) | term_vars(l))
    return conj(
        [
            Atom("|", (a, l)),
            Atom("|", (b, l)),
            Forall(
                c,
                Implies(And(Atom("|", (a, Var(c))), Atom("|", (b, Var(c)))), Atom("|", (l, Var(c)))),
                hint=CommonMultipleHint(left=a, right=b),
            ),
        ]
    )


def _numeral_via_divisibility(n: int) -> FormulaSpec:
    """t equals the numeral n, expressed in (Z+, +, |): 1 is the element
    dividing everything, and n is the n-fold sum of it."""
    if n < 1:
        raise InterpError("positive integers have no numeral below 1")
    t, o, a = Var("t"), "o", "a"
    total: Term = Var(o)
    for _ in range(n - 1):
        total = tadd(total, Var(o))
    body = And(Forall(a, Atom("|", (Var(o), Var(a))), hint=OneAsDivisorHint()), atom_eq(t, total))
    return (("t",), Exists(o, body, hint=OneAsDivisorHint()))


def lcm_arithmetic_interpretation() -> Interpretation:
    """Interprets (Z+, +, *) in (Z+, +, |): addition is carried, and
    j = k*m is rendered through the lcm identity."""
    k, m, j = Var("k"), Var("m"), Var("j")
    o = "o"
    one = Var(o)
    product_core = Exists(
        "u1",
        And(
            _is_lcm_formula(tadd(k, m), tadd(tadd(k, m), one), Var("u1")),
            Exists(
                "u2",
                And(
                    _is_lcm_formula(k, tadd(k, one), Var("u2")),
                    Exists(
                        "u3",
                        And(
                            _is_lcm_formula(m, tadd(m, one), Var("u3")),
                            atom_eq(Var("u1"), tadd(tadd(Var("u2"), Var("u3")), tadd(j, j))),
                        ),
                        hint=LcmWitnessHint(left=m, right=tadd(m, one)),
                    ),
                ),
                hint=LcmWitnessHint(left=k, right=tadd(k, one)),
            ),
        ),
        hint=LcmWitnessHint(left=tadd(k, m), right=tadd(tadd(k, m), one)),
    )
    product = Exists(
        o,
        And(Forall("a", Atom("|", (one, Var("a"))), hint=OneAsDivisorHint()), product_core),
        hint=OneAsDivisorHint(),
    )
    return Interpretation(
        name="lcm-arith",
        dim=1,
        source=ZPLUS_ADD_MUL,
        target=ZPLUS_ADD_DIV,
        domain=(("t",), atom_eq(Var("t"), Var("t"))),
        equality=(("a", "b"), atom_eq(Var("a"), Var("b"))),
        relations={},
        functions={"*": (("k", "m", "j"), product)},
        carried=frozenset({"+"}),
        numeral_function=_numeral_via_divisibility,
        coordinate_map=lambda n: n,
    )


H.register_image_generator("lcm-arith:*", lambda structure, vals: (vals[0] * vals[1],))
for _n in range(0, 512):
    H.register_image_generator(f"lcm-arith:#numeral:{_n}", lambda s, vals, n=_n: (n,))


def z_in_zplus() -> Interpretation:
    """Two-dimensional interpretation of (Z, +, *) in (Z+, +, *): the pair
    (a, b) stands for a - b."""
    a1, b1, a2, b2, a3, b3 = (Var(v) for v in ("a1", "b1", "a2", "b2", "a3", "b3"))

    def numeral(n: int) -> FormulaSpec:
        if n < 0:
            raise InterpError("negative numerals are written with unary minus")
        if n == 0:
            return (("a", "b"), atom_eq(Var("a"), Var("b")))
        return (("a", "b"), atom_eq(Var("a"), tadd(Var("b"), Apply(str(n), ()))))

    return Interpretation(
        name="z-in-zplus",
        dim=2,
        source=Z_ARITH,
        target=ZPLUS_ADD_MUL,
        domain=(("a", "b"), And(atom_eq(Var("a"), Var("a")), atom_eq(Var("b"), Var("b")))),
        equality=(("a1", "b1", "a2", "b2"), atom_eq(tadd(a1, b2), tadd(a2, b1))),
        relations={},
        functions={
            "+": (
                ("a1", "b1", "a2", "b2", "a3", "b3"),
                atom_eq(tadd(tadd(a1, a2), b3), tadd(a3, tadd(b1, b2))),
            ),
            "*": (
                ("a1", "b1", "a2", "b2", "a3", "b3"),
                atom_eq(
                    tadd(tadd(tmul(a1, a2), tmul(b1, b2)), b3),
                    tadd(tadd(tmul(a1, b2), tmul(a2, b1)), a3),
                ),
            ),
            "-": (("a1", "b1", "a2", "b2"), atom_eq(tadd(a2, a1), tadd(b1, b2))),
        },
        numeral_function=numeral,
        coordinate_map=lambda a, b: a - b,
    )


H.register_image_generator("z-in-zplus:+", lambda s, v: (v[0] + v[2], v[1] + v[3]))
H.register_image_generator(
    "z-in-zplus:*", lambda s, v: (v[0] * v[2] + v[1] * v[3], v[0] * v[3] + v[1] * v[2])
)
H.register_image_generator("z-in-zplus:-", lambda s, v: (v[1] + 1, v[0] + 1))
for _n in range(0, 512):
    H.register_image_generator(f"z-in-zplus:#numeral:{_n}", lambda s, vals, n=_n: (n + 1, 1))


# -- quotient interpretations -----------------------------------------------------


def quotient_interpretation(theta: Formula, param: str | None = None, name: str = "sigma-theta") -> Interpretation:
    """The canonical dimension-1 interpretation of S/I in S, for a formula
    theta defining the ideal I: equality of cosets is theta applied to the
    difference, and all ring operations are carried through verbatim."""
    frees = sorted(free_vars(theta))
    if param is None:
        if len(frees) != 1:
            raise InterpError("theta must have exactly one free variable")
        param = frees[0]
    elif set(frees) - {param}:
        raise InterpError("theta must have exactly one free variable")

    def theta_at(term: Term) -> Formula:
        return instantiate(((param,), theta), [term])

    b, c, d = Var("b"), Var("c"), Var("d")
    return Interpretation(
        name=name,
        dim=1,
        source=RING_SIG,
        target=RING_SIG,
        domain=(("t",), atom_eq(Var("t"), Var("t"))),
        equality=(("b", "c"), theta_at(tsub(b, c))),
        relations={},
        functions={
            "+": (("b", "c", "d"), theta_at(tsub(d, tadd(b, c)))),
            "*": (("b", "c", "d"), theta_at(tsub(d, tmul(b, c)))),
            "-": (("b", "c"), theta_at(tadd(c, b))),
            "0": (("b",), theta_at(tsub(b, ZERO))),
            "1": (("b",), theta_at(tsub(b, ONE))),
        },
        carried=frozenset({"+", "*", "-", "0", "1", "#numerals"}),
    )


def sigma_theta() -> Interpretation:
    """Quotient interpretation by the nilradical-defining formula."""
    return quotient_interpretation(theta_formula(Var("f")), "f")


def identity_interpretation(sig: Signature, name: str = "identity") -> Interpretation:
    relations = {}
    for rel, arity in sig.relations.items():
        if rel == "=":
            continue
        params = tuple(f"x{i+1}" for i in range(arity))
        relations[rel] = (params, Atom(rel, tuple(Var(p) for p in params)))
    carried = set(sig.functions) | ({"#numerals"} if sig.numerals else set())
    return Interpretation(
        name=name,
        dim=1,
        source=sig,
        target=sig,
        domain=(("t",), atom_eq(Var("t"), Var("t"))),
        equality=(("a", "b"), atom_eq(Var("a"), Var("b"))),
        relations=relations,
        functions={},
        carried=frozenset(carried),
        coordinate_map=lambda v: v,
    )


# -- serialization ----------------------------------------------------------------


def _sig_json(sig: Signature) -> dict:
    return {
        "functions": dict(sig.functions),
        "relations": dict(sig.relations),
        "numerals": sig.numerals,
    }


def serialize_interpretation(interp: Interpretation) -> dict:
    def spec_json(spec: FormulaSpec) -> dict:
        params, formula = spec
        return {"vars": list(params), "formula": format_formula(formula)}

    return {
        "name": interp.name,
        "dimension": interp.dim,
        "source": _sig_json(interp.source),
        "target": _sig_json(interp.target),
        "domain": spec_json(interp.domain),
        "equality": spec_json(interp.equality),
        "relations": {r: spec_json(s) for r, s in sorted(interp.relations.items())},
        "functions": {f: spec_json(s) for f, s in sorted(interp.functions.items())},
        "carried": sorted(interp.carried),
    }


def interpretation_json(interp: Interpretation) -> str:
    return json.dumps(serialize_interpretation(interp), indent=2, sort_keys=True)


NAMED_INTERPRETATIONS: dict[str, Callable[[], Interpretation]] = {
    "gamma-charp": gamma_charp,
    "sigma-theta": sigma_theta,
    "lcm-arith": lcm_arithmetic_interpretation,
    "z-in-zplus": z_in_zplus,
}

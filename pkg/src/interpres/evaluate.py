"""Three-valued bounded evaluation of first-order formulas.

Carriers are rings (elements enumerated under an `EnumBound`) or integer
segments.  Semantics are classical on finite carriers.  On infinite carriers
an existential is `true` only with a found witness and `false` only when an
exhaustive candidate set (from a hint) has been refuted; universals dually.
Connectives combine by strong Kleene logic, so a definite answer is never
reported without a witness, a counterexample, or finite exhaustion.

Quantifier hints (node-attached or passed per-variable) supply candidate
sets; a hint declared exhaustive licenses the definite answer in the
otherwise-unreachable direction.  See `hints` for the inventory and the
completeness arguments.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from . import hints as H
from . import rings as R
from .fol import (
    And,
    Apply,
    Atom,
    Exists,
    Forall,
    Formula,
    Implies,
    Not,
    Or,
    Signature,
    Term,
    Var,
    RING_SIG,
    ZPLUS_LEQ_DIV,
    Z_ARITH,
    free_vars,
)
from .rings import Element, EnumBound, RingDescriptor
from .truth import FALSE, TRUE, UNKNOWN, TruthValue3, t3_false, t3_true, t3_unknown


class EvalError(ValueError):
    """Unbound variable, sort mismatch, or malformed structure."""


# -- carriers ------------------------------------------------------------------


@dataclass(frozen=True)
class RingCarrier:
    ring: RingDescriptor

    def enumerate(self, bound: EnumBound):
        return self.ring.elements(bound)

    def exhaustive(self, bound: EnumBound) -> bool:
        return self.ring.is_finite

    def apply(self, fn: str, args):
        if fn == "+":
            return args[0] + args[1]
        if fn == "*":
            return args[0] * args[1]
        if fn == "-":
            return -args[0]
        if fn.isdigit():
            return self.ring.from_int(int(fn))
        raise EvalError(f"function {fn!r} has no ring interpretation")

    def relation(self, rel: str, args) -> bool:
        if rel == "=":
            return args[0] == args[1]
        raise EvalError(f"relation {rel!r} has no ring interpretation")

    def render(self, value) -> str:
        return repr(value)


@dataclass(frozen=True)
class IntegerCarrier:
    """The positive integers (minimum=1) or all integers (minimum=None),
    enumerated up to the bound's height."""

    minimum: int | None = 1

    def enumerate(self, bound: EnumBound):
        if self.minimum is not None:
            return iter(range(self.minimum, bound.height + 1))

        def both():
            yield 0
            for k in range(1, bound.height + 1):
                yield k
                yield -k

        return both()

    def exhaustive(self, bound: EnumBound) -> bool:
        return False

    def apply(self, fn: str, args):
        if fn == "+":
            return args[0] + args[1]
        if fn == "*":
            return args[0] * args[1]
        if fn == "-":
            if self.minimum is not None:
                raise EvalError("negation is not available on positive integers")
            return -args[0]
        if fn.isdigit():
            n = int(fn)
            if self.minimum is not None and n < self.minimum:
                raise EvalError(f"numeral {n} lies outside the positive integers")
            return n
        raise EvalError(f"function {fn!r} has no integer interpretation")

    def relation(self, rel: str, args) -> bool:
        if rel == "=":
            return args[0] == args[1]
        if rel == "<=":
            return args[0] <= args[1]
        if rel == "|":
            a, b = args
            if a == 0:
                return b == 0
            return b % a == 0
        raise EvalError(f"relation {rel!r} has no integer interpretation")

    def render(self, value) -> str:
        return str(value)


@dataclass(frozen=True)
class Structure:
    signature: Signature
    carrier: object
    name: str


def ring_structure(ring: RingDescriptor) -> Structure:
    return Structure(RING_SIG, RingCarrier(ring), str(ring))


def zplus_structure(signature: Signature = ZPLUS_LEQ_DIV) -> Structure:
    return Structure(signature, IntegerCarrier(minimum=1), "Z+")


def integers_structure() -> Structure:
    return Structure(Z_ARITH, IntegerCarrier(minimum=None), "Z")


# -- evaluation ----------------------------------------------------------------


def eval_term(structure: Structure, t: Term, env: dict):
    if isinstance(t, Var):
        if t.name not in env:
            raise EvalError(f"unbound variable {t.name!r}")
        return env[t.name]
    args = [eval_term(structure, a, env) for a in t.args]
    return structure.carrier.apply(t.fn, args)


def evaluate(
    structure: Structure,
    formula: Formula,
    assignment: dict | None = None,
    bound: EnumBound | None = None,
    hints: dict | None = None,
    memo: dict | None = None,
) -> TruthValue3:
    """Evaluate a formula under an assignment of its free variables."""
    env = dict(assignment or {})
    missing = free_vars(formula) - set(env)
    if missing:
        raise EvalError(f"unbound free variables: {sorted(missing)}")
    ev = _Evaluator(structure, bound or EnumBound(), hints or {}, memo)
    return ev.eval(formula, env)


def eval_with_witness_hints(
    structure: Structure,
    formula: Formula,
    assignment: dict | None = None,
    hints: dict | None = None,
    bound: EnumBound | None = None,
) -> TruthValue3:
    """Like `evaluate`, with caller-provided candidate sets per variable name.

    Each hint is a sequence of carrier values or a pair (sequence, exhaustive);
    exhaustive hints restrict the quantifier to the candidates."""
    return evaluate(structure, formula, assignment, bound, hints=hints or {})


class _Evaluator:
    def __init__(self, structure: Structure, bound: EnumBound, manual_hints: dict, memo: dict | None):
        self.structure = structure
        self.bound = bound
        self.manual = manual_hints
        # memoization is sound because results depend only on the free-variable
        # slice of the environment; disabled when manual hints are in play
        # since those are keyed on bare variable names.
        self.memo = ({} if memo is None else memo) if not manual_hints else None
        self._free_cache: dict[int, frozenset] = {}

    def _free(self, phi: Formula) -> frozenset:
        key = id(phi)
        got = self._free_cache.get(key)
        if got is None:
            got = free_vars(phi)
            self._free_cache[key] = got
        return got

    def eval(self, phi: Formula, env: dict) -> TruthValue3:
        if self.memo is not None:
            key = (phi, tuple(sorted((v, env[v]) for v in self._free(phi))))
            got = self.memo.get(key)
            if got is not None:
                return got
            out = self._eval(phi, env)
            self.memo[key] = out
            return out
        return self._eval(phi, env)

    def _eval(self, phi: Formula, env: dict) -> TruthValue3:
        if isinstance(phi, Atom):
            args = [eval_term(self.structure, t, env) for t in phi.args]
            holds = self.structure.carrier.relation(phi.rel, args)
            return t3_true() if holds else t3_false()
        if isinstance(phi, Not):
            return self.eval(phi.body, env).negate()
        if isinstance(phi, And):
            left = self.eval(phi.left, env)
            if left.is_false:
                return left
            right = self.eval(phi.right, env)
            if right.is_false:
                return right
            if left.is_true and right.is_true:
                return t3_true(left.witness + right.witness)
            return t3_unknown(self.bound)
        if isinstance(phi, Or):
            left = self.eval(phi.left, env)
            if left.is_true:
                return left
            right = self.eval(phi.right, env)
            if right.is_true:
                return right
            if left.is_false and right.is_false:
                return t3_false(left.counterexample + right.counterexample)
            return t3_unknown(self.bound)
        if isinstance(phi, Implies):
            left = self.eval(phi.left, env)
            if left.is_false:
                return t3_true()
            right = self.eval(phi.right, env)
            if right.is_true:
                return right
            if left.is_true and right.is_false:
                return t3_false(left.witness + right.counterexample)
            return t3_unknown(self.bound)
        if isinstance(phi, (Exists, Forall)):
            return self._quantifier(phi, env)
        raise EvalError(f"not a formula: {phi!r}")

    def _quantifier(self, phi, env: dict) -> TruthValue3:
        is_exists = isinstance(phi, Exists)
        kind = Exists if is_exists else Forall

        plan = None
        if phi.var in self.manual:
            spec = self.manual[phi.var]
            if isinstance(spec, tuple) and len(spec) == 2 and isinstance(spec[1], bool):
                values, exhaustive = spec
            else:
                values, exhaustive = spec, False
            plan = ([phi.var], phi.body, [(v,) for v in values], exhaustive, not exhaustive)
        elif phi.hint is not None:
            resolved = resolve_hint(phi.hint, self.structure, env, self.bound)
            if resolved is not None:
                candidates, exhaustive, fallback = resolved
                vars_ = [phi.var]
                body = phi.body
                for _ in range(phi.hint.joint - 1):
                    if not isinstance(body, kind):
                        raise EvalError("joint hint does not match the quantifier block")
                    vars_.append(body.var)
                    body = body.body
                plan = (vars_, body, candidates, exhaustive, fallback)

        if plan is not None:
            vars_, body, candidates, exhaustive, fallback = plan
            unknown_seen = False
            for cand in candidates:
                env2 = dict(env)
                env2.update(zip(vars_, cand))
                r = self.eval(body, env2)
                if is_exists and r.is_true:
                    return t3_true(tuple(zip(vars_, cand)) + r.witness)
                if not is_exists and r.is_false:
                    return t3_false(tuple(zip(vars_, cand)) + r.counterexample)
                if r.is_unknown:
                    unknown_seen = True
            if exhaustive and not unknown_seen:
                return t3_false() if is_exists else t3_true()
            if exhaustive or not fallback:
                return t3_unknown(self.bound, note="hinted-candidates-inconclusive")

        # plain bounded enumeration of the carrier
        unknown_seen = False
        for val in self.structure.carrier.enumerate(self.bound):
            env2 = dict(env)
            env2[phi.var] = val
            r = self.eval(phi.body, env2)
            if is_exists and r.is_true:
                return t3_true(((phi.var, val),) + r.witness)
            if not is_exists and r.is_false:
                return t3_false(((phi.var, val),) + r.counterexample)
            if r.is_unknown:
                unknown_seen = True
        if self.structure.carrier.exhaustive(self.bound) and not unknown_seen:
            return t3_false() if is_exists else t3_true()
        note = "no-witness-at-bound" if is_exists else "universal-held-at-bound"
        return t3_unknown(self.bound, note=note)


# -- hint resolution -----------------------------------------------------------


def resolve_hint(hint, structure: Structure, env: dict, bound: EnumBound):
    """Concrete candidates for a hint: (list of value tuples, exhaustive,
    fallback-to-enumeration) or None when the hint does not apply here."""
    carrier = structure.carrier

    def val(term):
        return eval_term(structure, term, env)

    if isinstance(hint, H.QuotientHint):
        b, a = val(hint.dividend), val(hint.divisor)
        if isinstance(carrier, IntegerCarrier):
            if a == 0:
                return ([(0,)] if b == 0 and carrier.minimum is None else [], True, False)
            if b % a == 0:
                q = b // a
                ok = carrier.minimum is None or q >= carrier.minimum
                return ([(q,)] if ok else [], True, False)
            return ([], True, False)
        ring = carrier.ring
        if a == ring.zero:
            return ([(ring.zero,)] if b == ring.zero else [], True, False)
        if isinstance(ring, R.Poly) and len(ring.vars) == 1 and ring.coeff.is_field:
            q = R.exact_quotient(ring, b, a)
            return ([(q,)] if q is not None else [], True, False)
        if ring.is_field:
            return ([(b * R.try_inverse(ring, a),)], True, False)
        if ring.is_finite:
            found = [(w,) for w in ring.elements(bound) if a * w == b]
            return (found, True, False)
        return None

    if isinstance(hint, H.InverseHint):
        t = val(hint.target)
        if isinstance(carrier, IntegerCarrier):
            if t == 1:
                return ([(1,)], True, False)
            if carrier.minimum is None and t == -1:
                return ([(-1,)], True, False)
            return ([], True, False)
        try:
            inv = R.try_inverse(carrier.ring, t)
        except R.RingError:
            return None
        return ([(inv,)] if inv is not None else [], True, False)

    if isinstance(hint, H.ScalarShiftQuotientHint):
        ring = getattr(carrier, "ring", None)
        if not (isinstance(ring, R.Poly) and len(ring.vars) == 1 and ring.coeff.is_field):
            return None
        f, l = val(hint.dividend), val(hint.divisor)
        if l == ring.zero:
            return ([(ring.zero,)], True, False)
        if R.degree(l) == 0:
            return ([(f * R.try_inverse(ring, l),)], True, False)
        q, _ = R.poly_divrem(ring, f, l)
        return ([(q,)], True, False)

    if isinstance(hint, H.ScalarHint):
        ring = getattr(carrier, "ring", None)
        if not isinstance(ring, R.Poly):
            return None
        base = ring.coeff
        cands = []
        for c in base.elements(bound):
            if not hint.include_zero and c == base.zero:
                continue
            cands.append((ring.constant(c),))
        return (cands, base.is_finite, False)

    if isinstance(hint, H.IndeterminateHint):
        ring = getattr(carrier, "ring", None)
        if not isinstance(ring, R.Poly):
            return None
        x = ring.var(ring.vars[0])
        exhaustive = hint.assume_complete and len(ring.vars) == 1 and ring.coeff.is_field
        return ([(x,)], exhaustive, False)

    if isinstance(hint, H.NilpotencyProbeHint):
        ring = getattr(carrier, "ring", None)
        if not isinstance(ring, R.Poly):
            return None
        x = ring.var(ring.vars[0])
        try:
            R.is_nilpotent(ring, ring.zero)
            decidable = True
        except R.RingError:
            decidable = False
        return ([(x,)], decidable, False)

    if isinstance(hint, H.PinnedPowerHint):
        ring = getattr(carrier, "ring", None)
        if not (isinstance(ring, R.Poly) and len(ring.vars) == 1 and ring.coeff.is_field):
            return None
        base, model = val(hint.base), val(hint.model)
        db = R.degree(base)
        if db < 1:
            return None
        dm = R.degree(model)
        if dm < 1 or dm % db:
            return ([], True, False)
        return ([(R.pow_element(base, dm // db),)], True, False)

    if isinstance(hint, H.PowersUpToHint):
        ring = getattr(carrier, "ring", None)
        if not (isinstance(ring, R.Poly) and len(ring.vars) == 1 and ring.coeff.is_field):
            return None
        base, limit = val(hint.base), val(hint.limit)
        db = R.degree(base)
        if db < 1:
            return None
        max_k = max(R.degree(limit), 0) // db
        limit_shift = limit - ring.one
        cands = []
        power = ring.one
        for _ in range(1, max_k + 1):
            power = power * base
            # only powers with base^k - 1 dividing limit - 1 can satisfy the
            # premise of the descent clause; others are vacuous
            if R.exact_quotient(ring, limit_shift, power - ring.one) is not None:
                cands.append((power,))
        return (cands, True, False)

    if isinstance(hint, H.FactorPairsHint):
        ring = getattr(carrier, "ring", None)
        if not (isinstance(ring, R.Poly) and len(ring.vars) == 1):
            return None
        try:
            table = R.coeff_table(ring.coeff)
        except R.RingError:
            return None
        if not table.is_field:
            return None
        f = val(hint.product)
        if f == ring.zero:
            return None
        from . import _fpoly

        try:
            divisors = _fpoly.pdivisors_monic(table, R.to_dense_indices(f))
        except _fpoly.KernelLimit:
            return None
        fd = R.to_dense_indices(f)
        cands = []
        for m in divisors:
            for u in table.units:
                g = _fpoly.pscale(table, u, m)
                h = _fpoly.pdivmod(table, fd, g)[0]
                cands.append((R.from_dense_indices(ring, g), R.from_dense_indices(ring, h)))
        return (cands, True, False)

    if isinstance(hint, H.RootShiftHint):
        ring = getattr(carrier, "ring", None)
        if not (isinstance(ring, R.Poly) and len(ring.vars) == 1 and ring.coeff.is_field):
            return None
        f, g = val(hint.base), val(hint.dividend)
        base = ring.coeff
        if base.is_finite:
            return ([(ring.constant(c),) for c in base.elements(bound)], True, False)
        if not isinstance(base, R.Rationals) or g == ring.zero or R.degree(f) != 1:
            return None
        lc = R.leading_coeff(f).data
        b0 = R.constant_coeff(f).data
        cands = []
        for root in R.rational_roots(g):
            h = base.make(-(lc * root) - b0)
            cands.append((ring.constant(h),))
        return (cands, True, False)

    if isinstance(hint, H.NaturalWitnessHint):
        ring = getattr(carrier, "ring", None)
        if not (isinstance(ring, R.Poly) and len(ring.vars) == 1 and isinstance(ring.coeff, R.Rationals)):
            return None
        t = val(hint.parameter)
        if R.degree(t) > 0:
            return ([], False, False)
        c = R.constant_coeff(t).data
        if c.denominator != 1 or c < 0:
            return ([], False, False)
        x = ring.var(ring.vars[0])
        g = ring.one
        for j in range(int(c) + 1):
            g = g * (x + ring.from_int(j))
        return ([(g,)], False, False)

    if isinstance(hint, H.LcmWitnessHint) or isinstance(hint, H.CommonMultipleHint):
        if not isinstance(carrier, IntegerCarrier):
            return None
        a, b = val(hint.left), val(hint.right)
        if a == 0 or b == 0:
            return None
        return ([(abs(a * b) // math.gcd(a, b),)], True, False)

    if isinstance(hint, H.OneAsDivisorHint):
        if not isinstance(carrier, IntegerCarrier):
            return None
        return ([(1,)], True, False)

    if isinstance(hint, H.DomainTupleHint):
        gen = H.DOMAIN_GENERATORS.get(hint.generator)
        if gen is None:
            return None
        return (list(gen(structure, bound)), False, False)

    if isinstance(hint, H.FunctionImageHint):
        gen = H.IMAGE_GENERATORS.get(hint.generator)
        if gen is None:
            return None
        image = gen(structure, [val(t) for t in hint.args])
        return ([tuple(image)] if image is not None else [], True, False)

    return None


# -- conveniences ---------------------------------------------------------------


def is_syntactic_tautology(phi: Formula) -> bool:
    """Conservative recognizer: a chain of universals over `t = t` (with
    syntactically identical sides) or over `A | !A` at the atom level."""
    while isinstance(phi, Forall):
        phi = phi.body
    if isinstance(phi, Atom) and phi.rel == "=" and phi.args[0] == phi.args[1]:
        return True
    if isinstance(phi, Or):
        l, r = phi.left, phi.right
        if isinstance(r, Not) and isinstance(l, Atom) and r.body == l:
            return True
        if isinstance(l, Not) and isinstance(r, Atom) and l.body == r:
            return True
    return False


def check_witness(
    structure: Structure,
    formula: Formula,
    result: TruthValue3,
    assignment: dict | None = None,
    bound: EnumBound | None = None,
) -> bool:
    """Re-verify a definite result by stripping the quantifier prefix it
    instantiates and re-evaluating the rest under those values."""
    if result.is_unknown:
        raise EvalError("nothing to re-verify on an unknown result")
    env = dict(assignment or {})
    pairs = dict(result.witness if result.is_true else result.counterexample)
    phi = formula
    want_exists = result.is_true
    while isinstance(phi, Exists if want_exists else Forall) and phi.var in pairs:
        env[phi.var] = pairs[phi.var]
        phi = phi.body
    r = evaluate(structure, phi, env, bound)
    return r.is_true if result.is_true else r.is_false

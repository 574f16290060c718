"""Exact arithmetic in computable commutative unital rings.

The ring zoo: integers modulo n, small Galois fields, the rationals, rational
function fields F_p(t), the integers, binary products, and polynomial rings
in one or two variables over any of these.  Descriptors are immutable,
hashable values; elements are kept in canonical form so that equality of
elements is structural equality of their representations.

Infinite rings are enumerated under an `EnumBound` (degree cap per variable,
height cap for rational-like coefficients).  Enumeration order is graded
(degree first, then lexicographic coefficients), and the sequence at a small
bound is a prefix of the sequence at any larger bound.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable, Iterator

from . import _fpoly
from .truth import TruthValue3, t3_false, t3_true, t3_unknown


class RingError(ValueError):
    """Invalid descriptor, mismatched rings, or unsupported operation."""


@dataclass(frozen=True)
class EnumBound:
    """Finiteness budget for quantifying over an infinite ring.

    `max_degree` caps the degree in each polynomial variable; `height` caps
    numerator/denominator magnitude over Q (and degree of numerator and
    denominator over F_p(t), and absolute value over Z).
    """

    max_degree: int = 3
    height: int = 6

    def __post_init__(self):
        if self.max_degree < 0:
            raise RingError("max_degree must be nonnegative")
        if self.height < 1:
            raise RingError("height must be positive")


@dataclass(frozen=True)
class Element:
    """A ring element in canonical form.  Arithmetic delegates to the ring."""

    ring: "RingDescriptor"
    data: Any

    def __add__(self, other: "Element") -> "Element":
        return self.ring.add(self, other)

    def __sub__(self, other: "Element") -> "Element":
        return self.ring.sub(self, other)

    def __mul__(self, other: "Element") -> "Element":
        return self.ring.mul(self, other)

    def __neg__(self) -> "Element":
        return self.ring.neg(self)

    def __pow__(self, n: int) -> "Element":
        return pow_element(self, n)

    def __repr__(self) -> str:
        return self.ring.render(self)


class RingDescriptor:
    """Base class for ring descriptors.  Subclasses are frozen dataclasses."""

    is_field = False
    is_finite = False

    # -- data-level hooks (subclasses override) --
    def _zero(self):
        raise NotImplementedError

    def _one(self):
        raise NotImplementedError

    def _add(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def _elements(self, bound: EnumBound) -> Iterator:
        raise NotImplementedError

    def _render(self, a) -> str:
        raise NotImplementedError

    # -- public element API --
    def make(self, data) -> Element:
        return Element(self, data)

    @property
    def zero(self) -> Element:
        return self.make(self._zero())

    @property
    def one(self) -> Element:
        return self.make(self._one())

    def _check(self, *els: Element):
        for e in els:
            if not isinstance(e, Element) or e.ring != self:
                raise RingError(f"element {e!r} does not belong to {self}")

    def add(self, a: Element, b: Element) -> Element:
        self._check(a, b)
        return self.make(self._add(a.data, b.data))

    def sub(self, a: Element, b: Element) -> Element:
        self._check(a, b)
        return self.make(self._add(a.data, self._neg(b.data)))

    def mul(self, a: Element, b: Element) -> Element:
        self._check(a, b)
        return self.make(self._mul(a.data, b.data))

    def neg(self, a: Element) -> Element:
        self._check(a)
        return self.make(self._neg(a.data))

    def from_int(self, n: int) -> Element:
        out = self.zero
        one = self.one
        sign = 1 if n >= 0 else -1
        for _ in range(abs(n)):
            out = out + one if sign > 0 else out - one
        return out

    def characteristic(self) -> int:
        raise NotImplementedError

    def size(self) -> int | None:
        return None

    def elements(self, bound: EnumBound | None = None) -> Iterator[Element]:
        bound = bound or EnumBound()
        return (self.make(d) for d in self._elements(bound))

    def render(self, a: Element) -> str:
        self._check(a)
        return self._render(a.data)


def _require_kind(ring, kinds, what: str):
    if not isinstance(ring, kinds):
        raise RingError(f"{what} is not supported over {ring}")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def radical_of(n: int) -> int:
    """Product of the distinct primes dividing n."""
    out = 1
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            out *= p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out *= m
    return out


# -- concrete rings -----------------------------------------------------------


@dataclass(frozen=True)
class IntegersMod(RingDescriptor):
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise RingError("modulus must be positive")

    @property
    def is_field(self) -> bool:  # type: ignore[override]
        return is_prime(self.n)

    is_finite = True

    def _zero(self):
        return 0

    def _one(self):
        return 1 % self.n

    def _add(self, a, b):
        return (a + b) % self.n

    def _neg(self, a):
        return (-a) % self.n

    def _mul(self, a, b):
        return (a * b) % self.n

    def from_int(self, k: int) -> Element:
        return self.make(k % self.n)

    def characteristic(self) -> int:
        return self.n

    def size(self):
        return self.n

    def _elements(self, bound):
        return iter(range(self.n))

    def _render(self, a) -> str:
        return str(a)

    def __str__(self) -> str:
        return f"Z/{self.n}"


#: Fixed moduli (lowest degree first) keeping test vectors reproducible.
_GF_MODULI = {
    (2, 2): (1, 1, 1),  # T^2+T+1
    (2, 3): (1, 1, 0, 1),  # T^3+T+1
    (3, 2): (1, 0, 1),  # T^2+1
}


@dataclass(frozen=True)
class GaloisField(RingDescriptor):
    p: int
    k: int
    modulus: tuple[int, ...]

    is_field = True
    is_finite = True

    def __post_init__(self):
        if not is_prime(self.p):
            raise RingError(f"{self.p} is not prime")
        if self.k < 2:
            raise RingError("use IntegersMod for prime fields")
        if len(self.modulus) != self.k + 1 or self.modulus[-1] != 1:
            raise RingError("modulus must be monic of degree k")
        base = _fpoly.table_for_modulus(self.p)
        for d in range(1, self.k // 2 + 1):
            for m in _fpoly.irreducible_monics(base, d):
                if _fpoly.pdivides(base, m, self.modulus):
                    raise RingError("modulus is reducible")

    def _table(self):
        return _fpoly.table_for_prime_power(self.p, self.k, self.modulus)

    def _zero(self):
        return 0

    def _one(self):
        return 1

    def _add(self, a, b):
        return self._table().add[a][b]

    def _neg(self, a):
        return self._table().neg[a]

    def _mul(self, a, b):
        return self._table().mul[a][b]

    def from_int(self, n: int) -> Element:
        return self.make(n % self.p)

    def characteristic(self) -> int:
        return self.p

    def size(self):
        return self.p**self.k

    def _elements(self, bound):
        return iter(range(self.p**self.k))

    def _render(self, a) -> str:
        digits = _fpoly._gf_digits(a, self.p, self.k)
        parts = []
        for e in range(self.k - 1, -1, -1):
            c = digits[e]
            if c == 0:
                continue
            if e == 0:
                parts.append(str(c))
            else:
                var = "T" if e == 1 else f"T^{e}"
                parts.append(var if c == 1 else f"{c}*{var}")
        return "+".join(parts) if parts else "0"

    def __str__(self) -> str:
        return f"GF({self.p ** self.k})"


def galois_field(q: int) -> RingDescriptor:
    """The field with q elements; prime q yields Z/q."""
    p, k = None, None
    for cand in range(2, q + 1):
        if is_prime(cand):
            m = cand
            e = 1
            while m < q:
                m *= cand
                e += 1
            if m == q:
                p, k = cand, e
                break
    if p is None:
        raise RingError(f"{q} is not a prime power")
    if k == 1:
        return IntegersMod(p)
    modulus = _GF_MODULI.get((p, k))
    if modulus is None:
        base = _fpoly.table_for_modulus(p)
        modulus = _fpoly.irreducible_monics(base, k)[0]
    return GaloisField(p, k, modulus)


@dataclass(frozen=True)
class Rationals(RingDescriptor):
    is_field = True

    def _zero(self):
        return Fraction(0)

    def _one(self):
        return Fraction(1)

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def from_int(self, n: int) -> Element:
        return self.make(Fraction(n))

    def characteristic(self) -> int:
        return 0

    def _elements(self, bound):
        yield Fraction(0)
        for h in range(1, bound.height + 1):
            for den in range(1, h + 1):
                for num in range(1, h + 1):
                    if max(num, den) == h and math.gcd(num, den) == 1:
                        yield Fraction(num, den)
                        yield Fraction(-num, den)

    def _render(self, a) -> str:
        return str(a)

    def __str__(self) -> str:
        return "Q"


@dataclass(frozen=True)
class Integers(RingDescriptor):
    def _zero(self):
        return 0

    def _one(self):
        return 1

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def from_int(self, n: int) -> Element:
        return self.make(n)

    def characteristic(self) -> int:
        return 0

    def _elements(self, bound):
        yield 0
        for k in range(1, bound.height + 1):
            yield k
            yield -k

    def _render(self, a) -> str:
        return str(a)

    def __str__(self) -> str:
        return "Z"


@dataclass(frozen=True)
class RationalFunctions(RingDescriptor):
    """The field F_p(t), elements as coprime numerator/denominator pairs
    of polynomials over F_p with monic denominator."""

    p: int

    is_field = True

    def __post_init__(self):
        if not is_prime(self.p):
            raise RingError(f"{self.p} is not prime")

    def _table(self):
        return _fpoly.table_for_modulus(self.p)

    def _canon(self, num, den):
        T = self._table()
        if not den:
            raise ZeroDivisionError("zero denominator in F_p(t)")
        if not num:
            return ((), (1,))
        g = _fpoly.pgcd_monic(T, num, den)
        if _fpoly.pdeg(g) > 0:
            num = _fpoly.pdivmod(T, num, g)[0]
            den = _fpoly.pdivmod(T, den, g)[0]
        den, lc = _fpoly.pmonic(T, den)
        if lc != 1:
            num = _fpoly.pscale(T, T.inv[lc], num)
        return (num, den)

    def _zero(self):
        return ((), (1,))

    def _one(self):
        return ((1,), (1,))

    def _add(self, a, b):
        T = self._table()
        n = _fpoly.padd(T, _fpoly.pmul(T, a[0], b[1]), _fpoly.pmul(T, b[0], a[1]))
        return self._canon(n, _fpoly.pmul(T, a[1], b[1]))

    def _neg(self, a):
        return (_fpoly.pneg(self._table(), a[0]), a[1])

    def _mul(self, a, b):
        T = self._table()
        return self._canon(_fpoly.pmul(T, a[0], b[0]), _fpoly.pmul(T, a[1], b[1]))

    def from_int(self, n: int) -> Element:
        return self.make((_fpoly.pconst(n % self.p), (1,)))

    def characteristic(self) -> int:
        return self.p

    def _iter_fp_polys(self, max_deg: int, monic: bool = False):
        """Nonzero polynomials over F_p of degree <= max_deg, graded order."""
        for d in range(max_deg + 1):
            leads = [1] if monic else list(range(1, self.p))
            for lead in leads:
                for tail in itertools.product(range(self.p), repeat=d):
                    yield tuple(tail) + (lead,)

    def _elements(self, bound):
        yield self._zero()
        T = self._table()
        for h in range(bound.height + 1):
            for den in self._iter_fp_polys(h, monic=True):
                for num in self._iter_fp_polys(h):
                    if max(_fpoly.pdeg(num), _fpoly.pdeg(den)) != h:
                        continue
                    if _fpoly.pdeg(_fpoly.pgcd_monic(T, num, den)) > 0:
                        continue
                    yield (num, den)

    def _render_fp_poly(self, f) -> str:
        if not f:
            return "0"
        parts = []
        for e in range(len(f) - 1, -1, -1):
            c = f[e]
            if c == 0:
                continue
            if e == 0:
                parts.append(str(c))
            else:
                var = "t" if e == 1 else f"t^{e}"
                parts.append(var if c == 1 else f"{c}*{var}")
        return "+".join(parts)

    def _render(self, a) -> str:
        num, den = a
        if den == (1,):
            return self._render_fp_poly(num)
        return f"({self._render_fp_poly(num)})/({self._render_fp_poly(den)})"

    def __str__(self) -> str:
        return f"GF({self.p})(t)"


@dataclass(frozen=True)
class ProductRing(RingDescriptor):
    left: RingDescriptor
    right: RingDescriptor

    @property
    def is_finite(self) -> bool:  # type: ignore[override]
        return self.left.is_finite and self.right.is_finite

    def _zero(self):
        return (self.left.zero, self.right.zero)

    def _one(self):
        return (self.left.one, self.right.one)

    def _add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def _neg(self, a):
        return (-a[0], -a[1])

    def _mul(self, a, b):
        return (a[0] * b[0], a[1] * b[1])

    def from_int(self, n: int) -> Element:
        return self.make((self.left.from_int(n), self.right.from_int(n)))

    def characteristic(self) -> int:
        cl, cr = self.left.characteristic(), self.right.characteristic()
        if cl == 0 or cr == 0:
            return 0
        return cl * cr // math.gcd(cl, cr)

    def size(self):
        sl, sr = self.left.size(), self.right.size()
        if sl is None or sr is None:
            return None
        return sl * sr

    def _elements(self, bound):
        la = list(self.left.elements(bound))
        lb = list(self.right.elements(bound))
        for s in range(len(la) + len(lb) - 1):
            for i in range(min(s, len(la) - 1) + 1):
                j = s - i
                if j < len(lb):
                    yield (la[i], lb[j])

    def _render(self, a) -> str:
        return f"({a[0]!r}, {a[1]!r})"

    def __str__(self) -> str:
        return f"{self.left} x {self.right}"


@dataclass(frozen=True)
class Poly(RingDescriptor):
    """Polynomials over `coeff` in the given variables (at most two).

    Element data: sorted tuple of (exponent tuple, coefficient Element), zero
    coefficients absent, graded-lexicographic monomial order.
    """

    coeff: RingDescriptor
    vars: tuple[str, ...]

    def __post_init__(self):
        if not (1 <= len(self.vars) <= 2):
            raise RingError("polynomial rings support one or two variables")
        if len(set(self.vars)) != len(self.vars):
            raise RingError("duplicate polynomial variables")
        if isinstance(self.coeff, Poly):
            raise RingError("nest polynomial rings via a single Poly with merged variables")

    def _mono_key(self, exps):
        return (sum(exps), exps)

    def _canon(self, mapping: dict) -> tuple:
        items = [(e, c) for e, c in mapping.items() if c != self.coeff.zero]
        items.sort(key=lambda item: self._mono_key(item[0]))
        return tuple(items)

    def _zero(self):
        return ()

    def _one(self):
        return (((0,) * len(self.vars), self.coeff.one),)

    def _add(self, a, b):
        acc = dict(a)
        for e, c in b:
            acc[e] = acc[e] + c if e in acc else c
        return self._canon(acc)

    def _neg(self, a):
        return tuple((e, -c) for e, c in a)

    def _mul(self, a, b):
        acc: dict = {}
        for ea, ca in a:
            for eb, cb in b:
                e = tuple(x + y for x, y in zip(ea, eb))
                c = ca * cb
                acc[e] = acc[e] + c if e in acc else c
        return self._canon(acc)

    def from_int(self, n: int) -> Element:
        c = self.coeff.from_int(n)
        if c == self.coeff.zero:
            return self.zero
        return self.make((((0,) * len(self.vars), c),))

    def characteristic(self) -> int:
        return self.coeff.characteristic()

    def constant(self, c: Element) -> Element:
        """Embed a coefficient as a constant polynomial."""
        if c.ring != self.coeff:
            raise RingError("constant from wrong coefficient ring")
        if c == self.coeff.zero:
            return self.zero
        return self.make((((0,) * len(self.vars), c),))

    def var(self, name: str) -> Element:
        if name not in self.vars:
            raise RingError(f"{name} is not a variable of {self}")
        e = tuple(1 if v == name else 0 for v in self.vars)
        return self.make(((e, self.coeff.one),))

    def _degree_caps(self, bound: EnumBound) -> tuple[int, ...]:
        return (bound.max_degree,) * len(self.vars)

    def _elements(self, bound):
        caps = self._degree_caps(bound)
        pool = list(self.coeff.elements(bound))
        monos = [
            e
            for e in itertools.product(*(range(c + 1) for c in caps))
        ]
        monos.sort(key=self._mono_key)
        yield ()
        max_total = sum(caps)
        for total in range(0, max_total + 1):
            layer = [e for e in monos if sum(e) <= total]
            layer.sort(key=self._mono_key, reverse=True)
            new_pos = [i for i, e in enumerate(layer) if sum(e) == total]
            if not new_pos:
                continue
            for combo in itertools.product(pool, repeat=len(layer)):
                if all(combo[i] == self.coeff.zero for i in new_pos):
                    continue
                data = self._canon({e: c for e, c in zip(layer, combo)})
                yield data

    def _render_mono(self, exps) -> str:
        parts = []
        for v, e in zip(self.vars, exps):
            if e == 0:
                continue
            parts.append(v if e == 1 else f"{v}^{e}")
        return "*".join(parts)

    def _render(self, a) -> str:
        if not a:
            return "0"
        terms = []
        for exps, c in sorted(a, key=lambda item: self._mono_key(item[0]), reverse=True):
            mono = self._render_mono(exps)
            cs = repr(c)
            if not mono:
                terms.append(cs)
            elif cs == "1":
                terms.append(mono)
            else:
                if any(ch in cs for ch in "+-/ ") and not (cs.startswith("-") and _is_atomic(cs[1:])):
                    cs = f"({cs})"
                terms.append(f"{cs}*{mono}")
        out = terms[0]
        for t in terms[1:]:
            if t.startswith("-"):
                out += " - " + t[1:]
            else:
                out += " + " + t
        return out

    def __str__(self) -> str:
        return f"{self.coeff}[{','.join(self.vars)}]"


def _is_atomic(s: str) -> bool:
    return bool(re.fullmatch(r"[A-Za-z0-9^*]+", s))


QQ = Rationals()
ZZ = Integers()


def poly_ring(coeff: RingDescriptor, vars: tuple[str, ...] | list[str]) -> Poly:
    """Polynomial ring constructor; nested Poly coefficients are merged."""
    vs = tuple(vars)
    if isinstance(coeff, Poly):
        return Poly(coeff.coeff, coeff.vars + vs)
    return Poly(coeff, vs)


# -- descriptor grammar -------------------------------------------------------

_RING_TOKEN = re.compile(
    r"\s*(GF|Q|Z|t|[A-Za-z_][A-Za-z0-9_]*|\d+|[()\[\],/x])"
)


def _ring_tokens(text: str) -> list[str]:
    """Tokenize a descriptor; a leading 'x' glued to a base keyword splits off
    as the product separator ("Z/2xZ/3")."""
    out = []
    i = 0
    while i < len(text):
        if text[i].isspace():
            i += 1
            continue
        m = re.match(r"GF|Q(?![A-Za-z0-9_])|Z(?![A-Za-z0-9_])|\d+|[()\[\],/]", text[i:])
        if m:
            out.append(m.group(0))
            i += len(m.group(0))
            continue
        if text[i] == "x" and re.match(r"\s*(GF|Q|Z)", text[i + 1 :] or " "):
            out.append("x")
            i += 1
            continue
        m = re.match(r"[A-Za-z_][A-Za-z0-9_]*", text[i:])
        if m:
            out.append(m.group(0))
            i += len(m.group(0))
            continue
        raise RingError(f"bad character {text[i]!r} in ring descriptor")
    return out


class _RingParser:
    def __init__(self, text: str):
        self.toks = _ring_tokens(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise RingError(f"ring descriptor syntax error near token {tok!r}")
        self.i += 1
        return tok

    def parse(self) -> RingDescriptor:
        ring = self.parse_product()
        if self.peek() == "[":
            self.take("[")
            vars = [self.take()]
            while self.peek() == ",":
                self.take(",")
                vars.append(self.take())
            self.take("]")
            for v in vars:
                if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", v):
                    raise RingError(f"bad variable name {v!r}")
                if v in ("T", "t"):
                    raise RingError("variable names T and t are reserved for coefficients")
            if len(vars) > 2:
                raise RingError("at most two polynomial variables are supported")
            ring = poly_ring(ring, tuple(vars))
        if self.peek() is not None:
            raise RingError(f"trailing tokens in ring descriptor: {self.toks[self.i:]}")
        return ring

    def parse_product(self) -> RingDescriptor:
        left = self.parse_base()
        while self.peek() == "x":
            self.take("x")
            right = self.parse_base()
            left = ProductRing(left, right)
        return left

    def parse_base(self) -> RingDescriptor:
        tok = self.take()
        if tok == "Q":
            return QQ
        if tok == "Z":
            if self.peek() == "/":
                self.take("/")
                n = int(self.take())
                return IntegersMod(n)
            return ZZ
        if tok == "GF":
            self.take("(")
            q = int(self.take())
            self.take(")")
            field = galois_field(q)
            if self.peek() == "(":
                self.take("(")
                self.take("t")
                self.take(")")
                if not isinstance(field, IntegersMod):
                    raise RingError("rational function fields are supported over prime fields only")
                return RationalFunctions(field.n)
            return field
        raise RingError(f"unexpected token {tok!r} in ring descriptor")


def parse_ring(text: str) -> RingDescriptor:
    """Parse a ring descriptor such as "GF(4)[x]", "Z/9[x,y]" or "GF(3)(t)[x]"."""
    return _RingParser(text).parse()


# -- generic operations -------------------------------------------------------


def arith(ring: RingDescriptor, op: str, a: Element, b: Element | None = None) -> Element:
    """Ring arithmetic dispatch: op in {add, sub, mul, neg}."""
    if op == "add":
        return ring.add(a, b)
    if op == "sub":
        return ring.sub(a, b)
    if op == "mul":
        return ring.mul(a, b)
    if op == "neg":
        return ring.neg(a)
    raise RingError(f"unknown arithmetic op {op!r}")


def characteristic(ring: RingDescriptor) -> int:
    return ring.characteristic()


def enumerate_elements(ring: RingDescriptor, bound: EnumBound | None = None) -> list[Element]:
    """Deterministic finite element sequence; finite rings ignore the bound."""
    return list(ring.elements(bound))


def degree(a: Element) -> int:
    """Total degree of a polynomial (-1 for the zero polynomial)."""
    _require_kind(a.ring, Poly, "degree")
    if not a.data:
        return -1
    return max(sum(e) for e, _ in a.data)


def coeff_of(a: Element, exps: tuple[int, ...]) -> Element:
    _require_kind(a.ring, Poly, "coefficient extraction")
    for e, c in a.data:
        if e == exps:
            return c
    return a.ring.coeff.zero


def constant_coeff(a: Element) -> Element:
    return coeff_of(a, (0,) * len(a.ring.vars))


def leading_coeff(a: Element) -> Element:
    """Leading coefficient of a univariate polynomial."""
    _require_kind(a.ring, Poly, "leading coefficient")
    if len(a.ring.vars) != 1:
        raise RingError("leading coefficient needs a univariate polynomial")
    if not a.data:
        return a.ring.coeff.zero
    return a.data[-1][1]


def linear_parts(a: Element) -> tuple[Element, Element]:
    """Write a univariate polynomial of degree <= 1 as lead*x + const."""
    if degree(a) > 1:
        raise RingError("polynomial has degree above one")
    return coeff_of(a, (1,)), coeff_of(a, (0,))


def pow_element(a: Element, n: int) -> Element:
    if n < 0:
        inv = try_inverse(a.ring, a)
        if inv is None:
            raise RingError("negative power of a non-unit")
        return pow_element(inv, -n)
    out = a.ring.one
    base = a
    while n > 0:
        if n & 1:
            out = out * base
        n >>= 1
        if n:
            base = base * base
    return out


def _dense(a: Element) -> list[Element]:
    """Univariate polynomial as a dense coefficient list, lowest degree first."""
    ring = a.ring
    d = degree(a)
    out = [ring.coeff.zero] * (d + 1 if d >= 0 else 0)
    for (e,), c in a.data:
        out[e] = c
    return out


def _from_dense(ring: Poly, coeffs: list[Element]) -> Element:
    data = {}
    for e, c in enumerate(coeffs):
        if c != ring.coeff.zero:
            data[(e,)] = c
    return ring.make(ring._canon(data))


def poly_from_coeffs(ring: Poly, coeffs) -> Element:
    """Univariate polynomial from coefficients (ints or coefficient Elements),
    lowest degree first."""
    out = []
    for c in coeffs:
        out.append(ring.coeff.from_int(c) if isinstance(c, int) else c)
    return _from_dense(ring, out)


def poly_divrem(ring: Poly, f: Element, d: Element) -> tuple[Element, Element]:
    """Division with remainder in a univariate polynomial ring over a field."""
    _require_kind(ring, Poly, "polynomial division")
    if len(ring.vars) != 1 or not ring.coeff.is_field:
        raise RingError("division needs a univariate polynomial ring over a field")
    ring._check(f, d)
    if d == ring.zero:
        raise ZeroDivisionError("polynomial division by zero")
    dd = degree(d)
    lc_inv = try_inverse(ring.coeff, leading_coeff(d))
    rem = _dense(f)
    den = _dense(d)
    quo = [ring.coeff.zero] * max(len(rem) - dd, 0)
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if c == ring.coeff.zero:
            continue
        qc = c * lc_inv
        quo[i - dd] = qc
        for j in range(dd + 1):
            rem[i - dd + j] = rem[i - dd + j] - qc * den[j]
    return _from_dense(ring, quo), _from_dense(ring, rem)


def exact_quotient(ring: Poly, f: Element, d: Element) -> Element | None:
    """f/d in a univariate polynomial ring over a field, or None if d does not divide f."""
    if d == ring.zero:
        return ring.zero if f == ring.zero else None
    q, r = poly_divrem(ring, f, d)
    return q if r == ring.zero else None


def divides(ring: RingDescriptor, a: Element, b: Element, bound: EnumBound | None = None) -> TruthValue3:
    """Does a divide b?  Exact over univariate field polynomials and fields;
    exhaustive over finite rings; bounded witness search elsewhere."""
    ring._check(a, b)
    bound = bound or EnumBound()
    if a == ring.zero:
        return t3_true((("q", ring.zero),)) if b == ring.zero else t3_false()
    if isinstance(ring, Poly) and len(ring.vars) == 1 and ring.coeff.is_field:
        q = exact_quotient(ring, b, a)
        return t3_true((("q", q),)) if q is not None else t3_false()
    if ring.is_field:
        q = b * try_inverse(ring, a)
        return t3_true((("q", q),))
    for q in ring.elements(bound):
        if a * q == b:
            return t3_true((("q", q),))
    if ring.is_finite:
        return t3_false()
    return t3_unknown(bound, note="no-quotient-at-bound")


def is_nilpotent(ring: RingDescriptor, a: Element) -> bool:
    """Exact nilpotence test for the supported ring kinds.

    For a polynomial ring this is coefficient-wise nilpotence in the base, a
    consequence of the nilradical of R[X] being N_R[X]."""
    ring._check(a)
    if isinstance(ring, IntegersMod):
        return a.data % radical_of(ring.n) == 0
    if isinstance(ring, (GaloisField, Rationals, Integers, RationalFunctions)):
        return a == ring.zero
    if isinstance(ring, ProductRing):
        return is_nilpotent(ring.left, a.data[0]) and is_nilpotent(ring.right, a.data[1])
    if isinstance(ring, Poly):
        return all(is_nilpotent(ring.coeff, c) for _, c in a.data)
    raise RingError(f"nilpotence is not decidable over {ring}")


def is_unit(ring: RingDescriptor, a: Element) -> bool:
    """Exact unit test.  Over a polynomial ring: invertible constant
    coefficient and nilpotent coefficients everywhere else."""
    ring._check(a)
    if ring.is_field:
        return a != ring.zero
    if isinstance(ring, IntegersMod):
        return math.gcd(a.data, ring.n) == 1
    if isinstance(ring, Integers):
        return a.data in (1, -1)
    if isinstance(ring, ProductRing):
        return is_unit(ring.left, a.data[0]) and is_unit(ring.right, a.data[1])
    if isinstance(ring, Poly):
        const = constant_coeff(a)
        if not is_unit(ring.coeff, const):
            return False
        zero_exps = (0,) * len(ring.vars)
        return all(
            is_nilpotent(ring.coeff, c) for e, c in a.data if e != zero_exps
        )
    raise RingError(f"unit testing is not supported over {ring}")


def try_inverse(ring: RingDescriptor, a: Element) -> Element | None:
    """Multiplicative inverse, or None when a is not a unit."""
    ring._check(a)
    if isinstance(ring, IntegersMod):
        if math.gcd(a.data, ring.n) != 1:
            return None
        return ring.make(pow(a.data, -1, ring.n))
    if isinstance(ring, GaloisField):
        inv = ring._table().inv[a.data]
        return ring.make(inv) if inv is not None else None
    if isinstance(ring, Rationals):
        return ring.make(1 / a.data) if a.data else None
    if isinstance(ring, Integers):
        return a if a.data in (1, -1) else None
    if isinstance(ring, RationalFunctions):
        num, den = a.data
        if not num:
            return None
        return ring.make(ring._canon(den, num))
    if isinstance(ring, ProductRing):
        il = try_inverse(ring.left, a.data[0])
        ir = try_inverse(ring.right, a.data[1])
        if il is None or ir is None:
            return None
        return ring.make((il, ir))
    if isinstance(ring, Poly):
        if not is_unit(ring, a):
            return None
        const = constant_coeff(a)
        c_inv = ring.constant(try_inverse(ring.coeff, const))
        nil = a - ring.constant(const)
        # geometric series: (c + m)^-1 = c^-1 * sum (-m c^-1)^k, m nilpotent
        s = -(nil * c_inv)
        acc = ring.one
        term = ring.one
        for _ in range(64):
            term = term * s
            if term == ring.zero:
                break
            acc = acc + term
        out = c_inv * acc
        if out * a != ring.one:
            raise RingError("inverse construction failed")
        return out
    raise RingError(f"inverses are not supported over {ring}")


def quotient_by_nilradical(ring: RingDescriptor) -> tuple[RingDescriptor, Callable[[Element], Element]]:
    """Quotient of a polynomial ring by its nilradical, with the projection map.

    The nilradical of R[X] consists of the polynomials with nilpotent
    coefficients, so the quotient is (R/N_R)[X] and the projection reduces
    coefficients."""
    _require_kind(ring, Poly, "nilradical quotient")
    new_base, project_coeff = _reduced_base(ring.coeff)
    quotient = Poly(new_base, ring.vars)

    def project(a: Element) -> Element:
        ring._check(a)
        data = {}
        for e, c in a.data:
            pc = project_coeff(c)
            if pc != new_base.zero:
                data[e] = data[e] + pc if e in data else pc
        return quotient.make(quotient._canon(data))

    return quotient, project


def _reduced_base(base: RingDescriptor) -> tuple[RingDescriptor, Callable[[Element], Element]]:
    if isinstance(base, IntegersMod):
        rad = radical_of(base.n)
        new = IntegersMod(rad)
        return new, lambda c: new.make(c.data % rad)
    if base.is_field:
        return base, lambda c: c
    if isinstance(base, ProductRing):
        ln, lp = _reduced_base(base.left)
        rn, rp = _reduced_base(base.right)
        new = ProductRing(ln, rn)
        return new, lambda c: new.make((lp(c.data[0]), rp(c.data[1])))
    raise RingError(f"nilradical quotient is not supported over base {base}")


def rational_roots(g: Element) -> list[Fraction]:
    """All rational roots of a nonzero polynomial in Q[x], ascending order."""
    ring = g.ring
    if not (isinstance(ring, Poly) and len(ring.vars) == 1 and isinstance(ring.coeff, Rationals)):
        raise RingError("rational root enumeration needs Q[x]")
    if g == ring.zero:
        raise RingError("the zero polynomial has every root")
    coeffs = [c.data for c in _dense(g)]
    lcm_den = 1
    for c in coeffs:
        lcm_den = lcm_den * c.denominator // math.gcd(lcm_den, c.denominator)
    ints = [int(c * lcm_den) for c in coeffs]
    roots = []
    low = next(i for i, c in enumerate(ints) if c)
    if low > 0:
        roots.append(Fraction(0))
    ints = ints[low:]
    a0, lead = abs(ints[0]), abs(ints[-1])
    for p in _divisors(a0):
        for q in _divisors(lead):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand in roots:
                    continue
                if _eval_q(ints, cand) == 0:
                    roots.append(cand)
    return sorted(roots)


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, int(math.isqrt(n)) + 1) if n % d == 0]
    out += [n // d for d in reversed(out) if n // d not in out]
    return sorted(set(out))


def _eval_q(ints, x: Fraction) -> Fraction:
    out = Fraction(0)
    for c in reversed(ints):
        out = out * x + c
    return out


# -- kernel bridge -------------------------------------------------------------


def coeff_table(base: RingDescriptor) -> _fpoly.CoeffTable:
    """Kernel lookup tables for a small finite coefficient ring."""
    if isinstance(base, IntegersMod):
        return _fpoly.table_for_modulus(base.n)
    if isinstance(base, GaloisField):
        return _fpoly.table_for_prime_power(base.p, base.k, base.modulus)
    raise RingError(f"no kernel tables for {base}")


def to_dense_indices(a: Element) -> tuple[int, ...]:
    """Univariate polynomial over Z/n or GF(q) as a tuple of coefficient indices."""
    ring = a.ring
    _require_kind(ring, Poly, "kernel conversion")
    if len(ring.vars) != 1:
        raise RingError("kernel conversion needs a univariate polynomial")
    d = degree(a)
    out = [0] * (d + 1 if d >= 0 else 0)
    for (e,), c in a.data:
        out[e] = c.data
    return tuple(out)


def from_dense_indices(ring: Poly, f: tuple[int, ...]) -> Element:
    base = ring.coeff
    data = {}
    for e, idx in enumerate(f):
        if idx:
            data[(e,)] = base.make(idx)
    return ring.make(ring._canon(data))


# -- element grammar -----------------------------------------------------------

_ELEM_TOKEN = re.compile(r"\s*(\d+|[A-Za-z_][A-Za-z0-9_]*'*|\*\*|[-+*/^(),])")


def _elem_tokens(text: str) -> list[str]:
    out = []
    i = 0
    while i < len(text):
        if text[i].isspace():
            i += 1
            continue
        m = _ELEM_TOKEN.match(text, i)
        if not m:
            raise RingError(f"bad character {text[i]!r} in element")
        out.append(m.group(1))
        i = m.end()
    return out


class _ElemParser:
    """Recursive-descent parser for ring elements: + - * / ^ over integer
    literals, polynomial variables, T (Galois generator) and t (F_p(t))."""

    def __init__(self, ring: RingDescriptor, text: str):
        self.ring = ring
        self.toks = _elem_tokens(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise RingError(f"element syntax error near {tok!r}")
        self.i += 1
        return tok

    def parse(self) -> Element:
        v = self.sum()
        if self.peek() is not None:
            raise RingError(f"trailing tokens in element: {self.toks[self.i:]}")
        return v

    def sum(self) -> Element:
        if self.peek() == "-":
            self.take()
            out = -self.product()
        else:
            out = self.product()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.product()
            out = out + rhs if op == "+" else out - rhs
        return out

    def product(self) -> Element:
        out = self.power()
        while self.peek() in ("*", "/", "**"):
            op = self.take()
            if op == "**":
                out = pow_element(out, int(self.take()))
                continue
            rhs = self.power()
            if op == "*":
                out = out * rhs
            else:
                inv = try_inverse(self.ring, rhs)
                if inv is None:
                    raise RingError(f"division by non-unit {rhs!r}")
                out = out * inv
        return out

    def power(self) -> Element:
        base = self.atom()
        if self.peek() == "^":
            self.take("^")
            return pow_element(base, int(self.take()))
        return base

    def atom(self) -> Element:
        tok = self.peek()
        if tok == "(":
            self.take("(")
            v = self.sum()
            self.take(")")
            return v
        if tok == "-":
            self.take()
            return -self.atom()
        tok = self.take()
        if tok.isdigit():
            return self.ring.from_int(int(tok))
        return self._named(tok)

    def _named(self, name: str) -> Element:
        ring = self.ring
        if isinstance(ring, Poly):
            if name in ring.vars:
                return ring.var(name)
            inner = _ElemParser(ring.coeff, name)
            return ring.constant(inner.parse())
        if isinstance(ring, GaloisField) and name == "T":
            if ring.k < 2:
                raise RingError("T is only meaningful in a proper Galois extension")
            return ring.make(ring.p)
        if isinstance(ring, RationalFunctions) and name == "t":
            return ring.make(((0, 1), (1,)))
        raise RingError(f"unknown element symbol {name!r} over {ring}")


def parse_element(ring: RingDescriptor, text: str) -> Element:
    """Parse an element such as "x^2+1", "2*x-1/2" or "(T+1)*x" in the ring."""
    return _ElemParser(ring, text).parse()

"""Dense univariate polynomial kernel over small finite coefficient rings.

Internal fast path used by the oracles and exhaustive scans.  A coefficient
ring of size q is compiled into lookup tables (`CoeffTable`); a polynomial is
a tuple of coefficient indices, lowest degree first, with no trailing zeros.
`()` is the zero polynomial.  Index 0 is the ring's zero and index 1 its one.
"""

from __future__ import annotations

from functools import lru_cache

# Enumerating monic irreducibles beyond this degree is refused: trial
# division factoring is only meant for desk-scale inputs.
MAX_IRREDUCIBLE_DEGREE = 8


class KernelLimit(Exception):
    """Raised when a kernel operation would exceed its desk-scale budget."""


class CoeffTable:
    """Operation tables for a finite commutative unital coefficient ring."""

    __slots__ = (
        "q",
        "char",
        "is_field",
        "add",
        "mul",
        "neg",
        "inv",
        "units",
        "nilpotents",
        "_irreducible",
    )

    def __init__(self, q, char, is_field, add, mul, neg, inv):
        self.q = q
        self.char = char
        self.is_field = is_field
        self.add = add
        self.mul = mul
        self.neg = neg
        self.inv = inv
        self.units = tuple(i for i in range(q) if inv[i] is not None)
        self.nilpotents = tuple(i for i in range(q) if _is_nilpotent(mul, i, q))
        self._irreducible = {}


def _is_nilpotent(mul, i, q):
    x = i
    for _ in range(q):
        if x == 0:
            return True
        x = mul[x][i]
    return x == 0


@lru_cache(maxsize=None)
def table_for_modulus(n: int) -> CoeffTable:
    """Tables for the integers modulo n."""
    add = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    mul = tuple(tuple((i * j) % n for j in range(n)) for i in range(n))
    neg = tuple((-i) % n for i in range(n))
    inv = []
    for i in range(n):
        found = None
        for j in range(n):
            if (i * j) % n == 1:
                found = j
                break
        inv.append(found)
    is_field = all(inv[i] is not None for i in range(1, n)) and n > 1
    return CoeffTable(n, n, is_field, add, mul, tuple(neg), tuple(inv))


def _gf_digits(index: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        out.append(index % p)
        index //= p
    return out


def _gf_index(digits, p: int) -> int:
    out = 0
    for d in reversed(digits):
        out = out * p + d
    return out


def _gf_mul_digits(a, b, p, modulus):
    # modulus: monic, lowest degree first, length k+1
    k = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1) if a and b else [0]
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] = (prod[i + j] + ai * bj) % p
    for d in range(len(prod) - 1, k - 1, -1):
        c = prod[d]
        if c:
            prod[d] = 0
            for j in range(k):
                prod[d - k + j] = (prod[d - k + j] - c * modulus[j]) % p
    out = prod[:k]
    out += [0] * (k - len(out))
    return out


@lru_cache(maxsize=None)
def table_for_prime_power(p: int, k: int, modulus: tuple[int, ...]) -> CoeffTable:
    """Tables for the field with p**k elements, modulo the given monic polynomial."""
    q = p**k
    if q > 4096:
        raise KernelLimit(f"field of size {q} exceeds the kernel's table budget")
    digits = [_gf_digits(i, p, k) for i in range(q)]
    add = tuple(
        tuple(_gf_index([(x + y) % p for x, y in zip(digits[i], digits[j])], p) for j in range(q))
        for i in range(q)
    )
    mul = tuple(
        tuple(_gf_index(_gf_mul_digits(digits[i], digits[j], p, modulus), p) for j in range(q))
        for i in range(q)
    )
    neg = tuple(_gf_index([(-x) % p for x in digits[i]], p) for i in range(q))
    inv = [None] * q
    for i in range(1, q):
        for j in range(1, q):
            if mul[i][j] == 1:
                inv[i] = j
                break
    return CoeffTable(q, p, True, add, mul, neg, tuple(inv))


# -- polynomial helpers -------------------------------------------------------


def pnorm(coeffs) -> tuple[int, ...]:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def pdeg(f) -> int:
    """Degree, with the zero polynomial at -1."""
    return len(f) - 1


def padd(T, f, g):
    add = T.add
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = add[out[i]][c]
    return pnorm(out)


def pneg(T, f):
    neg = T.neg
    return tuple(neg[c] for c in f)


def psub(T, f, g):
    return padd(T, f, pneg(T, g))


def pmul(T, f, g):
    if not f or not g:
        return ()
    add = T.add
    mul = T.mul
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            row = mul[a]
            for j, b in enumerate(g):
                if b:
                    out[i + j] = add[out[i + j]][row[b]]
    return pnorm(out)


def pscale(T, c, f):
    if c == 0:
        return ()
    if c == 1:
        return f
    row = T.mul[c]
    return pnorm(row[a] for a in f)


def pconst(c) -> tuple[int, ...]:
    return (c,) if c else ()


def ppow(T, f, n: int):
    out = (1,)
    base = f
    while n > 0:
        if n & 1:
            out = pmul(T, out, base)
        n >>= 1
        if n:
            base = pmul(T, base, base)
    return out


def pdivmod(T, f, d):
    """Quotient and remainder of f by d; the leading coefficient of d must be a unit."""
    if not d:
        raise ZeroDivisionError("kernel polynomial division by zero")
    lc_inv = T.inv[d[-1]]
    if lc_inv is None:
        raise KernelLimit("division by polynomial with non-invertible leading coefficient")
    add, mul, neg = T.add, T.mul, T.neg
    rem = list(f)
    dd = len(d) - 1
    if len(rem) - 1 < dd:
        return (), f
    quo = [0] * (len(rem) - dd)
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        qc = mul[c][lc_inv]
        quo[i - dd] = qc
        nqc = neg[qc]
        for j in range(dd + 1):
            rem[i - dd + j] = add[rem[i - dd + j]][mul[nqc][d[j]]]
    return pnorm(quo), pnorm(rem)


def pdivides(T, d, f) -> bool:
    if not d:
        return not f
    return not pdivmod(T, f, d)[1]


def pmonic(T, f):
    """Scale f to be monic; returns (monic, leading coefficient)."""
    if not f:
        return (), 0
    lc = f[-1]
    if lc == 1:
        return f, 1
    return pscale(T, T.inv[lc], f), lc


def pgcd_monic(T, f, g):
    while g:
        f, g = g, pdivmod(T, f, g)[1]
    return pmonic(T, f)[0] if f else ()


def peval(T, f, a: int) -> int:
    out = 0
    for c in reversed(f):
        out = T.add[T.mul[out][a]][c]
    return out


def irreducible_monics(T, degree: int):
    """All monic irreducible polynomials of the given degree, ascending order."""
    if not T.is_field:
        raise KernelLimit("irreducibility enumeration needs a field table")
    if degree > MAX_IRREDUCIBLE_DEGREE:
        raise KernelLimit(f"irreducible enumeration capped at degree {MAX_IRREDUCIBLE_DEGREE}")
    if degree in T._irreducible:
        return T._irreducible[degree]
    smaller = []
    for d in range(1, degree // 2 + 1):
        smaller.extend(irreducible_monics(T, d))
    found = []
    q = T.q
    for tail_index in range(q**degree):
        coeffs = []
        n = tail_index
        for _ in range(degree):
            coeffs.append(n % q)
            n //= q
        cand = tuple(coeffs) + (1,)
        if all(not pdivides(T, m, cand) for m in smaller):
            found.append(cand)
    T._irreducible[degree] = tuple(found)
    return T._irreducible[degree]


def pfactor(T, f):
    """Factor f over a finite field into (unit index, {monic irreducible: multiplicity}).

    Trial division by monic irreducibles of ascending degree; refuses inputs
    whose factorization would require irreducibles past the kernel cap.
    """
    if not f:
        raise ZeroDivisionError("cannot factor the zero polynomial")
    rest, unit = pmonic(T, f)
    factors: dict[tuple[int, ...], int] = {}
    d = 1
    while pdeg(rest) > 0:
        if d > pdeg(rest) // 2:
            factors[rest] = factors.get(rest, 0) + 1
            break
        if d > MAX_IRREDUCIBLE_DEGREE:
            raise KernelLimit("factorization exceeds the irreducible-degree cap")
        progressed = False
        for m in irreducible_monics(T, d):
            while True:
                quo, rem = pdivmod(T, rest, m)
                if rem:
                    break
                factors[m] = factors.get(m, 0) + 1
                rest = quo
                progressed = True
            if pdeg(rest) <= 0:
                break
        d += 1
        if not progressed and d > pdeg(rest) // 2:
            continue
    return unit, factors


def pdivisors_monic(T, f):
    """All monic divisors of f (finite field), deterministic order."""
    unit, factors = pfactor(T, f)
    divisors = [(1,)]
    for m, mult in sorted(factors.items()):
        powers = [(1,)]
        for _ in range(mult):
            powers.append(pmul(T, powers[-1], m))
        divisors = [pmul(T, d, p) for d in divisors for p in powers]
    seen = set()
    out = []
    for d in sorted(divisors, key=lambda t: (len(t), t)):
        if d not in seen:
            seen.add(d)
            out.append(d)
    return out

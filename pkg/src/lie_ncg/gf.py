"""Exact arithmetic in small finite fields F_q.

Elements are integer codes in ``[0, q)``.  For a prime field the code is the
residue itself; for an extension field F_{p^k} the code is the base-p digit
vector of the polynomial representative, read little-endian, so code 0 is the
zero element and code 1 the multiplicative identity in every field.

Extension fields use a fixed reduction polynomial per supported order so that
element codes are reproducible across runs.
"""

from __future__ import annotations

from .errors import NotPrimePower, UnsupportedField

DEFAULT_CAP = 27

# Monic irreducible reduction polynomials, little-endian coefficients over F_p
# (constant term first, leading coefficient last).
REDUCTION_POLYNOMIALS = {
    4: (1, 1, 1),            # t^2 + t + 1 over F_2
    8: (1, 1, 0, 1),         # t^3 + t + 1 over F_2
    9: (1, 0, 1),            # t^2 + 1 over F_3
    16: (1, 1, 0, 0, 1),     # t^4 + t + 1 over F_2
    25: (1, 1, 1),           # t^2 + t + 1 over F_5
    27: (1, 2, 0, 1),        # t^3 + 2t + 1 over F_3
}


def prime_power_decomposition(q):
    """Return ``(p, k)`` with ``q = p^k`` and p prime, or None."""
    if q < 2:
        return None
    p = None
    m = q
    for d in range(2, q + 1):
        if d * d > m:
            p = m if p is None else p
            break
        if m % d == 0:
            p = d
            break
    k = 0
    m = q
    while m % p == 0:
        m //= p
        k += 1
    if m != 1:
        return None
    return p, k


class Field:
    """The finite field F_q with table-backed exact arithmetic.

    Immutable after construction; safe to share between threads.
    """

    def __init__(self, q, p, k, reduction_polynomial):
        self.q = q
        self.p = p
        self.k = k
        self.reduction_polynomial = tuple(reduction_polynomial)
        self._build_tables()

    def __repr__(self):
        return f"Field(q={self.q})"

    def __eq__(self, other):
        return isinstance(other, Field) and self.q == other.q

    def __hash__(self):
        return hash(("Field", self.q))

    # -- element encoding ---------------------------------------------------

    def _digits(self, code):
        p, k = self.p, self.k
        out = []
        for _ in range(k):
            out.append(code % p)
            code //= p
        return out

    def _code(self, digits):
        code = 0
        for d in reversed(digits):
            code = code * self.p + d
        return code

    # -- tables -------------------------------------------------------------

    def _build_tables(self):
        q, p, k = self.q, self.p, self.k
        if k == 1:
            self._add = [[(a + b) % p for b in range(q)] for a in range(q)]
            self._mul = [[(a * b) % p for b in range(q)] for a in range(q)]
        else:
            digits = [self._digits(a) for a in range(q)]
            self._add = [
                [self._code([(x + y) % p for x, y in zip(digits[a], digits[b])]) for b in range(q)]
                for a in range(q)
            ]
            self._mul = [[self._poly_mul(digits[a], digits[b]) for b in range(q)] for a in range(q)]
        self._neg = [self._add[a].index(0) for a in range(q)]
        self._inv = [None] * q
        for a in range(1, q):
            self._inv[a] = self._mul[a].index(1)

    def _poly_mul(self, da, db):
        p, k = self.p, self.k
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        # reduce modulo the monic reduction polynomial
        red = self.reduction_polynomial
        for deg in range(len(prod) - 1, k - 1, -1):
            c = prod[deg]
            if c:
                prod[deg] = 0
                for j in range(k):
                    prod[deg - k + j] = (prod[deg - k + j] - c * red[j]) % p
        return self._code(prod[:k])

    # -- arithmetic ---------------------------------------------------------

    def add(self, a, b):
        return self._add[a][b]

    def sub(self, a, b):
        return self._add[a][self._neg[b]]

    def mul(self, a, b):
        return self._mul[a][b]

    def neg(self, a):
        return self._neg[a]

    def inverse(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self._inv[a]

    def elements(self):
        return range(self.q)


def arith(field, op, a, b=None):
    """Dispatch a named field operation; ``b`` is ignored for ``neg``."""
    if op == "add":
        return field.add(a, b)
    if op == "sub":
        return field.sub(a, b)
    if op == "mul":
        return field.mul(a, b)
    if op == "neg":
        return field.neg(a)
    raise ValueError(f"unknown field operation {op!r}")


_FIELD_CACHE = {}


def field_new(q, cap=DEFAULT_CAP):
    """Build F_q, or raise NotPrimePower / UnsupportedField."""
    if q in _FIELD_CACHE and q <= cap:
        return _FIELD_CACHE[q]
    if q < 2 or prime_power_decomposition(q) is None:
        raise NotPrimePower(f"{q} is not a prime power")
    if q > cap:
        raise UnsupportedField(f"field order {q} exceeds the cap {cap}")
    p, k = prime_power_decomposition(q)
    if k == 1:
        poly = ()
    else:
        if q not in REDUCTION_POLYNOMIALS:
            raise UnsupportedField(f"no reduction polynomial shipped for q={q}")
        poly = REDUCTION_POLYNOMIALS[q]
    field = Field(q, p, k, poly)
    _FIELD_CACHE[q] = field
    return field

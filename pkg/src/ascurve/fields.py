"""Exact arithmetic in F_{p^n} and in tower extensions F_{q^i}.

Representation contract
-----------------------
A base field F_{p^n} is described by a :class:`FieldSpec`: the characteristic
``p``, the degree ``n`` and a monic irreducible ``modulus`` of degree ``n``
over F_p, stored as residues in ascending degree order.  Elements are vectors
of coordinates in the power basis of the modulus root, and every element has
a canonical integer encoding

    enc(x) = sum_i coeffs[i] * p**i   in  [0, p**n),

i.e. little-endian base-p digits.  The encoding is the single wire format for
elements and the order used by :func:`enumerate_field`.

An extension F_{q^i} of F_q = F_{p^n} is an :class:`ExtFieldSpec`: a tower
with a monic irreducible ``ext_modulus`` of degree ``i`` over F_q, elements
being length-``i`` vectors of base-field encodings.  Their canonical encoding
``sum_j enc(c_j) * q**j`` coincides with the base-p digit encoding of the
flattened coordinate vector, so all fields share one integer wire format.
Base elements embed as constant coefficients, which leaves their encoding
unchanged.

Field construction is deterministic: :func:`find_irreducible` returns the
irreducible polynomial with the smallest canonical encoding, so golden values
are reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from .errors import (
    CapacityError,
    FieldDivisionError,
    InputFormatError,
    MixedFieldError,
    PreconditionError,
)

DEFAULT_ENUM_BUDGET = 1 << 24


def is_prime(n: int) -> bool:
    """Trial-division primality test, sufficient for desk-scale characteristics."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


# --------------------------------------------------------------------------
# Polynomial arithmetic over an abstract coefficient field.
#
# The "ops" object provides encoding-level scalar arithmetic: attributes
# `order`, `zero_enc`, `one_enc` and methods `add_enc`, `sub_enc`, `mul_enc`,
# `neg_enc`, `inv_enc`.  Polynomials are lists of encodings, ascending degree,
# trailing zeros trimmed ([] is the zero polynomial).


class _PrimeOps:
    """Residues mod p as the coefficient field."""

    __slots__ = ("p",)

    def __init__(self, p):
        self.p = p

    @property
    def order(self):
        return self.p

    zero_enc = 0
    one_enc = 1

    def add_enc(self, a, b):
        return (a + b) % self.p

    def sub_enc(self, a, b):
        return (a - b) % self.p

    def mul_enc(self, a, b):
        return a * b % self.p

    def neg_enc(self, a):
        return -a % self.p

    def inv_enc(self, a):
        if a % self.p == 0:
            raise FieldDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)


def _ptrim(ops, c):
    while c and c[-1] == ops.zero_enc:
        c.pop()
    return c


def _padd(ops, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] = ops.add_enc(out[i], y)
    return _ptrim(ops, out)


def _psub(ops, a, b):
    out = list(a) + [ops.zero_enc] * max(0, len(b) - len(a))
    for i, y in enumerate(b):
        out[i] = ops.sub_enc(out[i], y)
    return _ptrim(ops, out)


def _pmul(ops, a, b):
    if not a or not b:
        return []
    out = [ops.zero_enc] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == ops.zero_enc:
            continue
        for j, y in enumerate(b):
            out[i + j] = ops.add_enc(out[i + j], ops.mul_enc(x, y))
    return _ptrim(ops, out)


def _prem(ops, a, b):
    a = _ptrim(ops, list(a))
    db = len(b) - 1
    inv_lead = ops.inv_enc(b[-1])
    while a and len(a) - 1 >= db:
        shift = len(a) - 1 - db
        f = ops.mul_enc(a[-1], inv_lead)
        for i, y in enumerate(b):
            a[shift + i] = ops.sub_enc(a[shift + i], ops.mul_enc(f, y))
        a = _ptrim(ops, a)
    return a


def _pgcd(ops, a, b):
    a, b = list(a), list(b)
    while b:
        a, b = b, _prem(ops, a, b)
    return a


def _pxgcd(ops, a, m):
    """(g, u) with u*a = g mod m; g is a gcd of a and m."""
    r0, r1 = list(m), list(a)
    u0, u1 = [], [ops.one_enc]
    while r1:
        # long division r0 = q*r1 + r
        q = []
        r = list(r0)
        db = len(r1) - 1
        inv_lead = ops.inv_enc(r1[-1])
        while r and len(r) - 1 >= db:
            shift = len(r) - 1 - db
            f = ops.mul_enc(r[-1], inv_lead)
            q = _padd(ops, q, [ops.zero_enc] * shift + [f])
            for i, y in enumerate(r1):
                r[shift + i] = ops.sub_enc(r[shift + i], ops.mul_enc(f, y))
            r = _ptrim(ops, r)
        r0, r1 = r1, r
        u0, u1 = u1, _psub(ops, u0, _pmul(ops, q, u1))
    return r0, u0


def _ppowmod(ops, base, e, mod):
    result = [ops.one_enc]
    base = _prem(ops, list(base), mod)
    while e:
        if e & 1:
            result = _prem(ops, _pmul(ops, result, base), mod)
        base = _prem(ops, _pmul(ops, base, base), mod)
        e >>= 1
    return result


def _poly_is_irreducible(ops, f) -> bool:
    """Irreducibility of monic f over the coefficient field of `ops`.

    Standard criterion: x^(Q^d) = x mod f, and gcd(x^(Q^(d/l)) - x, f) = 1
    for every prime l dividing d, where Q is the coefficient-field order.
    """
    d = len(f) - 1
    if d < 1:
        return False
    Q = ops.order
    x = [ops.zero_enc, ops.one_enc]
    need = {d // ell for ell in prime_factors(d)}
    t = list(x)
    mids = {}
    for k in range(1, d + 1):
        t = _ppowmod(ops, t, Q, f)
        if k in need:
            mids[k] = list(t)
    if _psub(ops, t, x):
        return False
    for k, tk in mids.items():
        g = _pgcd(ops, _psub(ops, tk, x), f)
        if len(g) - 1 != 0:
            return False
    return True


def find_irreducible(p: int, n: int) -> tuple[int, ...]:
    """Monic degree-n irreducible over F_p with the smallest canonical encoding.

    The encoding of a polynomial is sum(c_i * p**i); the search walks the
    non-leading part in ascending order, so the result is deterministic.
    """
    if not is_prime(p):
        raise PreconditionError("p_prime", f"p = {p} is not prime")
    if n < 1:
        raise PreconditionError("n_positive", f"n = {n} must be >= 1")
    ops = _PrimeOps(p)
    for m in range(p**n):
        if n > 1 and m % p == 0:
            continue  # zero constant term: divisible by x
        coeffs = [(m // p**i) % p for i in range(n)] + [1]
        if _poly_is_irreducible(ops, coeffs):
            return tuple(coeffs)
    raise AssertionError("unreachable: irreducibles of every degree exist")


# --------------------------------------------------------------------------
# Field specs


@dataclass(frozen=True)
class FieldSpec:
    """F_{p^n} presented by a monic irreducible modulus over F_p."""

    p: int
    n: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "modulus", tuple(int(c) for c in self.modulus))
        if not is_prime(self.p):
            raise PreconditionError("p_prime", f"p = {self.p} is not prime")
        if self.n < 1:
            raise PreconditionError("n_positive", f"n = {self.n} must be >= 1")
        if len(self.modulus) != self.n + 1:
            raise InputFormatError(
                f"modulus must have degree exactly {self.n} "
                f"(got {len(self.modulus) - 1})"
            )
        if any(not 0 <= c < self.p for c in self.modulus):
            raise InputFormatError("modulus coefficients must be residues mod p")
        if self.modulus[-1] != 1:
            raise InputFormatError("modulus must be monic")
        if not _poly_is_irreducible(_PrimeOps(self.p), list(self.modulus)):
            raise InputFormatError("modulus is reducible over F_p")

    # -- ops protocol ------------------------------------------------------
    @property
    def order(self) -> int:
        return self.p**self.n

    @property
    def prime_degree(self) -> int:
        """Degree over the prime field F_p."""
        return self.n

    zero_enc = 0
    one_enc = 1

    def decode(self, enc: int) -> list[int]:
        p = self.p
        return [(enc // p**i) % p for i in range(self.n)]

    def encode(self, coeffs: Sequence[int]) -> int:
        p = self.p
        return sum((c % p) * p**i for i, c in enumerate(coeffs))

    def add_enc(self, a: int, b: int) -> int:
        p = self.p
        return self.encode([(x + y) % p for x, y in zip(self.decode(a), self.decode(b))])

    def sub_enc(self, a: int, b: int) -> int:
        p = self.p
        return self.encode([(x - y) % p for x, y in zip(self.decode(a), self.decode(b))])

    def neg_enc(self, a: int) -> int:
        return self.encode([-c % self.p for c in self.decode(a)])

    def mul_enc(self, a: int, b: int) -> int:
        ops = _PrimeOps(self.p)
        c = _prem(ops, _pmul(ops, _ptrim(ops, self.decode(a)), _ptrim(ops, self.decode(b))),
                  list(self.modulus))
        return self.encode(c + [0] * (self.n - len(c)))

    def inv_enc(self, a: int) -> int:
        if a == 0:
            raise FieldDivisionError("inverse of zero")
        ops = _PrimeOps(self.p)
        g, u = _pxgcd(ops, _ptrim(ops, self.decode(a)), list(self.modulus))
        # g is a nonzero constant (modulus irreducible); scale u by g^-1
        scale = ops.inv_enc(g[0])
        inv = [ops.mul_enc(scale, c) for c in u]
        inv = _prem(ops, inv, list(self.modulus))
        return self.encode(inv + [0] * (self.n - len(inv)))

    # -- derived scalar ops --------------------------------------------------
    def pow_enc(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow_enc(self.inv_enc(a), -e)
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul_enc(result, base)
            base = self.mul_enc(base, base)
            e >>= 1
        return result

    def frobenius_enc(self, a: int, k: int = 1) -> int:
        k %= self.prime_degree
        return self.pow_enc(a, self.p**k)

    def abs_trace_enc(self, a: int) -> int:
        t, x = 0, a
        for _ in range(self.prime_degree):
            t = self.add_enc(t, x)
            x = self.pow_enc(x, self.p)
        if t >= self.p:
            raise AssertionError("trace left the prime field")
        return t

    # -- elements ------------------------------------------------------------
    def element(self, enc: int) -> "FieldElement":
        if not 0 <= enc < self.order:
            raise InputFormatError(f"encoding {enc} outside [0, {self.order})")
        return FieldElement(self, enc)

    def from_coeffs(self, coeffs: Sequence[int]) -> "FieldElement":
        if len(coeffs) > self.n:
            raise InputFormatError("too many coordinates for this field")
        return FieldElement(self, self.encode(coeffs))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def to_json(self) -> dict:
        return {"p": self.p, "n": self.n, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, data: dict) -> "FieldSpec":
        try:
            return cls(int(data["p"]), int(data["n"]), tuple(data["modulus"]))
        except (KeyError, TypeError) as exc:
            raise InputFormatError(f"bad field spec JSON: {exc}") from exc


def make_field(p: int, n: int) -> FieldSpec:
    """F_{p^n} under the deterministic smallest-encoding modulus."""
    return FieldSpec(p, n, find_irreducible(p, n))


@dataclass(frozen=True)
class ExtFieldSpec:
    """F_{q^i} as a tower over a base F_q, with a monic irreducible ext_modulus.

    ``ext_modulus`` coefficients are base-field encodings, ascending degree.
    """

    base: FieldSpec
    ext_degree: int
    ext_modulus: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "ext_modulus", tuple(int(c) for c in self.ext_modulus))
        if self.ext_degree < 1:
            raise PreconditionError("ext_degree_positive", "extension degree must be >= 1")
        if len(self.ext_modulus) != self.ext_degree + 1:
            raise InputFormatError("ext_modulus degree must equal ext_degree")
        if any(not 0 <= c < self.base.order for c in self.ext_modulus):
            raise InputFormatError("ext_modulus coefficients must be base-field encodings")
        if self.ext_modulus[-1] != 1:
            raise InputFormatError("ext_modulus must be monic")
        if not _poly_is_irreducible(self.base, list(self.ext_modulus)):
            raise InputFormatError("ext_modulus is reducible over the base field")

    # -- ops protocol ------------------------------------------------------
    @property
    def p(self) -> int:
        return self.base.p

    @property
    def order(self) -> int:
        return self.base.order**self.ext_degree

    @property
    def prime_degree(self) -> int:
        return self.base.n * self.ext_degree

    zero_enc = 0
    one_enc = 1

    def decode(self, enc: int) -> list[int]:
        q = self.base.order
        return [(enc // q**j) % q for j in range(self.ext_degree)]

    def encode(self, coeffs: Sequence[int]) -> int:
        q = self.base.order
        return sum(c * q**j for j, c in enumerate(coeffs))

    def add_enc(self, a: int, b: int) -> int:
        add = self.base.add_enc
        return self.encode([add(x, y) for x, y in zip(self.decode(a), self.decode(b))])

    def sub_enc(self, a: int, b: int) -> int:
        sub = self.base.sub_enc
        return self.encode([sub(x, y) for x, y in zip(self.decode(a), self.decode(b))])

    def neg_enc(self, a: int) -> int:
        return self.encode([self.base.neg_enc(c) for c in self.decode(a)])

    def mul_enc(self, a: int, b: int) -> int:
        ops = self.base
        c = _prem(ops, _pmul(ops, _ptrim(ops, self.decode(a)), _ptrim(ops, self.decode(b))),
                  list(self.ext_modulus))
        return self.encode(c + [0] * (self.ext_degree - len(c)))

    def inv_enc(self, a: int) -> int:
        if a == 0:
            raise FieldDivisionError("inverse of zero")
        ops = self.base
        g, u = _pxgcd(ops, _ptrim(ops, self.decode(a)), list(self.ext_modulus))
        scale = ops.inv_enc(g[0])
        inv = [ops.mul_enc(scale, c) for c in u]
        inv = _prem(ops, inv, list(self.ext_modulus))
        return self.encode(inv + [0] * (self.ext_degree - len(inv)))

    pow_enc = FieldSpec.pow_enc
    frobenius_enc = FieldSpec.frobenius_enc
    abs_trace_enc = FieldSpec.abs_trace_enc

    def embed_enc(self, base_enc: int) -> int:
        """Constant-coefficient injection of a base element; encoding-preserving."""
        if not 0 <= base_enc < self.base.order:
            raise InputFormatError("not a base-field encoding")
        return base_enc

    def element(self, enc: int) -> "FieldElement":
        if not 0 <= enc < self.order:
            raise InputFormatError(f"encoding {enc} outside [0, {self.order})")
        return FieldElement(self, enc)

    def from_coeffs(self, coeffs: Sequence[int]) -> "FieldElement":
        if len(coeffs) > self.ext_degree:
            raise InputFormatError("too many coordinates for this extension")
        return FieldElement(self, self.encode(coeffs))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)


AnyField = Union[FieldSpec, ExtFieldSpec]


def extend_field(base: FieldSpec, i: int) -> ExtFieldSpec:
    """F_{q^i} over F_q using the smallest-encoding monic irreducible of degree i.

    Degree 1 yields the identity extension (modulus y), whose arithmetic
    coincides with the base field's.
    """
    if i < 1:
        raise PreconditionError("ext_degree_positive", "extension degree must be >= 1")
    q = base.order
    for m in range(q**i):
        if i > 1 and m % q == 0:
            continue  # zero constant term: divisible by y
        coeffs = [(m // q**j) % q for j in range(i)] + [1]
        if _poly_is_irreducible(base, coeffs):
            return ExtFieldSpec(base, i, tuple(coeffs))
    raise AssertionError("unreachable: irreducibles of every degree exist")


# --------------------------------------------------------------------------
# Elements


@dataclass(frozen=True)
class FieldElement:
    """An element of a FieldSpec or ExtFieldSpec, held as its canonical encoding."""

    field: AnyField
    enc: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(self.field.decode(self.enc))

    def _check(self, other):
        if not isinstance(other, FieldElement):
            raise MixedFieldError(f"expected a FieldElement, got {type(other).__name__}")
        if other.field != self.field:
            raise MixedFieldError("operands belong to different fields")
        return other

    def __add__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.add_enc(self.enc, other.enc))

    def __sub__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.sub_enc(self.enc, other.enc))

    def __mul__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.mul_enc(self.enc, other.enc))

    def __truediv__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.mul_enc(self.enc, self.field.inv_enc(other.enc)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg_enc(self.enc))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow_enc(self.enc, e))

    def __bool__(self):
        return self.enc != 0

    def __repr__(self):
        return f"FieldElement({self.enc} in GF({self.field.p}^{self.field.prime_degree}))"


def arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Dispatch {add, sub, mul, div} on two elements of the same field."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise InputFormatError(f"unknown operation {op!r}")


def frobenius(x: FieldElement, k: int = 1) -> FieldElement:
    """x^(p^k), the k-th power of the absolute Frobenius."""
    if k < 0:
        raise PreconditionError("k_nonnegative", "frobenius iterations must be >= 0")
    return FieldElement(x.field, x.field.frobenius_enc(x.enc, k))


def abs_trace(x: FieldElement) -> int:
    """Absolute trace down to F_p, as a residue in [0, p)."""
    return x.field.abs_trace_enc(x.enc)


def enumerate_field(spec: AnyField, max_enum: int | None = None) -> Iterator[FieldElement]:
    """Yield every element once, in ascending canonical encoding."""
    budget = DEFAULT_ENUM_BUDGET if max_enum is None else max_enum
    if spec.order > budget:
        raise CapacityError(spec.order, budget, "field elements")
    for enc in range(spec.order):
        yield FieldElement(spec, enc)

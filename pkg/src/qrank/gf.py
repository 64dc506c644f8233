"""Exact arithmetic in finite fields F_q, q = p^e.

Elements are encoded as integers in [0, q): the coefficient vector
(c_0, ..., c_{e-1}) of the residue polynomial, packed in base p with c_0
least significant.  For q <= 256 full add/mul/inv tables are precomputed
at context creation, since enumeration workloads dominate everything
downstream.
"""

from __future__ import annotations

from .errors import DivisionByZero, NonPrimeCharacteristic, ReducibleModulus

TABLE_LIMIT = 256


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _digits(v: int, p: int, length: int) -> list[int]:
    out = []
    for _ in range(length):
        out.append(v % p)
        v //= p
    return out


def _undigits(digits, p: int) -> int:
    v = 0
    for c in reversed(digits):
        v = v * p + c
    return v


def _poly_trim(a):
    while a and a[-1] == 0:
        a = a[:-1]
    return a


def _poly_mulmod_p(a, b, p):
    # plain polynomial product over F_p, coefficient lists constant-first
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_rem(a, b, p):
    # remainder of a mod b over F_p; b monic-led after normalization
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    inv_lb = pow(lb, p - 2, p)
    while len(a) - 1 >= db and _poly_trim(a):
        a = _poly_trim(a)
        if len(a) - 1 < db:
            break
        factor = (a[-1] * inv_lb) % p
        shift = len(a) - 1 - db
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - factor * bi) % p
        a = _poly_trim(a)
    return _poly_trim(a)


def _is_irreducible(poly, p: int) -> bool:
    poly = _poly_trim(list(poly))
    deg = len(poly) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    if poly[0] == 0:  # divisible by x
        return False
    # trial division by every monic polynomial of degree 1 .. deg//2
    for d in range(1, deg // 2 + 1):
        for t in range(p**d):
            divisor = _digits(t, p, d) + [1]
            if not _poly_rem(poly, divisor, p):
                return False
    return True


def _default_modulus(p: int, e: int):
    # deterministic: smallest packed lower-coefficient value that is irreducible
    for t in range(p**e):
        cand = _digits(t, p, e) + [1]
        if _is_irreducible(cand, p):
            return tuple(cand)
    raise ReducibleModulus(f"no irreducible polynomial of degree {e} over F_{p}")


class FieldContext:
    """Immutable arithmetic context for F_q, q = p^e."""

    def __init__(self, p: int, e: int = 1, modulus=None):
        if not _is_prime(p):
            raise NonPrimeCharacteristic(f"{p} is not prime")
        if e < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.e = e
        self.q = p**e
        if e == 1:
            self.modulus = None
        else:
            if modulus is None:
                self.modulus = _default_modulus(p, e)
            else:
                mod = tuple(int(c) % p for c in modulus)
                if len(mod) != e + 1 or mod[-1] != 1:
                    raise ReducibleModulus(
                        f"modulus must be monic of degree {e} (constant term first)"
                    )
                if not _is_irreducible(mod, p):
                    raise ReducibleModulus(f"modulus {list(mod)} is reducible over F_{p}")
                self.modulus = mod
        self._build_tables()

    # -- raw arithmetic on packed encodings -------------------------------

    def _raw_add(self, a: int, b: int) -> int:
        p, e = self.p, self.e
        if e == 1:
            return (a + b) % p
        da, db = _digits(a, p, e), _digits(b, p, e)
        return _undigits([(x + y) % p for x, y in zip(da, db)], p)

    def _raw_neg(self, a: int) -> int:
        p, e = self.p, self.e
        if e == 1:
            return (-a) % p
        return _undigits([(-c) % p for c in _digits(a, p, e)], p)

    def _raw_mul(self, a: int, b: int) -> int:
        p, e = self.p, self.e
        if e == 1:
            return (a * b) % p
        prod = _poly_mulmod_p(_poly_trim(_digits(a, p, e)), _poly_trim(_digits(b, p, e)), p)
        rem = _poly_rem(prod, list(self.modulus), p) if prod else []
        return _undigits(rem + [0] * (e - len(rem)), p)

    def _build_tables(self):
        q = self.q
        if q > TABLE_LIMIT:
            self._add = self._mul = None
            self._neg = None
            self._inv = None
            return
        self._add = [self._raw_add(a, b) for a in range(q) for b in range(q)]
        self._mul = [self._raw_mul(a, b) for a in range(q) for b in range(q)]
        self._neg = [self._raw_neg(a) for a in range(q)]
        inv = [0] * q
        for a in range(1, q):
            row = self._mul[a * q : (a + 1) * q]
            inv[a] = row.index(1)
        self._inv = inv

    # -- public operations -------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self._add is not None:
            return self._add[a * self.q + b]
        return self._raw_add(a, b)

    def neg(self, a: int) -> int:
        if self._neg is not None:
            return self._neg[a]
        return self._raw_neg(a)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._mul is not None:
            return self._mul[a * self.q + b]
        return self._raw_mul(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of 0")
        if self._inv is not None:
            return self._inv[a]
        return self.pow(a, self.q - 2)

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            return self.pow(self.inv(a), -k)
        result, base = 1 if self.e == 1 else 1, a
        result = 1
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def elements(self):
        return range(self.q)

    def element(self, value: int) -> "FieldElement":
        return FieldElement(self, value)

    # -- identity / serialization ------------------------------------------

    @property
    def key(self):
        return (self.p, self.e, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldContext) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        if self.e == 1:
            return f"FieldContext(p={self.p})"
        return f"FieldContext(p={self.p}, e={self.e}, modulus={list(self.modulus)})"

    def to_json(self) -> dict:
        if self.e == 1:
            return {"q": self.p}
        return {"p": self.p, "e": self.e, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, obj: dict) -> "FieldContext":
        if "q" in obj:
            return cls(int(obj["q"]), 1)
        p = int(obj["p"])
        e = int(obj.get("e", 1))
        modulus = obj.get("modulus")
        return cls(p, e, modulus)


def gf_new(p: int, e: int = 1, modulus=None) -> FieldContext:
    return FieldContext(p, e, modulus)


class FieldElement:
    """Thin operator wrapper over a packed field element."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldContext, value: int):
        if not 0 <= value < field.q:
            raise ValueError(f"value {value} out of range for q={field.q}")
        self.field = field
        self.value = value

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements from different fields")
            return other.value
        return int(other) % self.field.q if self.field.e == 1 else int(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._coerce(other)))

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._coerce(other)))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._coerce(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __truediv__(self, other):
        return FieldElement(
            self.field, self.field.mul(self.value, self.field.inv(self._coerce(other)))
        )

    def __pow__(self, k: int):
        return FieldElement(self.field, self.field.pow(self.value, k))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash((self.field.key, self.value))

    def __repr__(self):
        return f"FieldElement({self.value} in F_{self.field.q})"


def field_ops(a: FieldElement, b, op: str) -> FieldElement:
    """Dispatch helper: op in {add, sub, mul, inv, pow}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    if op == "pow":
        return a ** int(b)
    raise ValueError(f"unknown op {op!r}")

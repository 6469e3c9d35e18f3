"""Field backends: exact rationals, prime fields GF(p), complex floats.

Scalars are plain Python values (``Fraction`` for rationals, ``int``
residues for GF(p), ``complex`` for the floating backend).  A field object
carries both the descriptor data (kind, modulus, tolerance) and the
operation suite, so a single handle can be threaded through matrices and
verifiers.  Exact backends compare bit-exactly; the complex backend uses
an absolute-or-relative tolerance.
"""

from __future__ import annotations

import cmath
from fractions import Fraction


class InvalidFieldError(ValueError):
    """Malformed field descriptor (composite modulus, unknown name, ...)."""


class NotEnumerableError(ValueError):
    """Element enumeration requested on an infinite field."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _int_nth_root(x: int, m: int):
    """Exact integer m-th root of x >= 0, or None if x is not a perfect power."""
    if x == 0:
        return 0
    r = 1 << ((x.bit_length() + m - 1) // m)
    while True:
        nr = ((m - 1) * r + x // r ** (m - 1)) // m
        if nr >= r:
            break
        r = nr
    return r if r**m == x else None


class Field:
    """Common helpers shared by the three backends.

    Concrete subclasses supply ``zero/one/add/mul/neg/div/pow/coerce`` and
    set ``kind`` and ``name``.  ``name`` is the canonical text form used in
    matrix file headers (``rat``, ``gf:<p>``, ``c64``).
    """

    kind = "?"
    name = "?"

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def eq(self, a, b) -> bool:
        return a == b

    def sum(self, xs):
        total = self.zero()
        for x in xs:
            total = self.add(total, x)
        return total

    def dot(self, xs, ys):
        """Inner product of two equal-length scalar sequences."""
        return self.sum(self.mul(x, y) for x, y in zip(xs, ys))

    def characteristic(self) -> int:
        return 0

    def elements(self):
        raise NotEnumerableError(f"{self.name} is not a finite field")

    def mth_roots(self, b, m: int) -> set:
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Field) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return f"<field {self.name}>"


class RationalField(Field):
    """Arbitrary-precision rationals; payloads are ``Fraction`` values.

    ``Fraction`` keeps lowest terms with a positive denominator, which is
    exactly the canonical form required of this backend.
    """

    kind = "rational"
    name = "rat"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def coerce(self, value) -> Fraction:
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in rat")
        return a / b

    def pow(self, a, k: int):
        if k < 0:
            raise ValueError("pow exponent must be non-negative")
        return a**k

    def sum(self, xs):
        return sum(xs, Fraction(0))

    def dot(self, xs, ys):
        return sum((x * y for x, y in zip(xs, ys)), Fraction(0))

    def mth_roots(self, b, m: int) -> set:
        if m < 1:
            raise ValueError("root order must be >= 1")
        b = Fraction(b)
        if b == 0:
            return {Fraction(0)}
        if m == 1:
            return {b}
        if b < 0 and m % 2 == 0:
            return set()
        num = _int_nth_root(abs(b.numerator), m)
        den = _int_nth_root(b.denominator, m)
        if num is None or den is None:
            return set()
        r = Fraction(num, den)
        if m % 2 == 1:
            return {r if b > 0 else -r}
        return {r, -r}

    def parse(self, token: str) -> Fraction:
        return Fraction(token)

    def format(self, a) -> str:
        return str(a)


class PrimeField(Field):
    """GF(p) for prime p; payloads are machine-int residues in [0, p)."""

    kind = "prime-field"

    def __init__(self, p: int):
        if not isinstance(p, int) or not _is_prime(p):
            raise InvalidFieldError(f"modulus {p!r} is not prime")
        if p >= 2**31:
            raise InvalidFieldError("modulus must be < 2^31")
        self.p = p
        self.name = f"gf:{p}"

    def zero(self):
        return 0

    def one(self):
        return 1

    def coerce(self, value) -> int:
        return int(value) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"division by zero in {self.name}")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return (a * self.inv(b)) % self.p

    def pow(self, a, k: int):
        if k < 0:
            raise ValueError("pow exponent must be non-negative")
        return pow(a, k, self.p)

    def sum(self, xs):
        return sum(xs) % self.p

    def dot(self, xs, ys):
        return sum(x * y for x, y in zip(xs, ys)) % self.p

    def characteristic(self) -> int:
        return self.p

    def elements(self) -> list:
        return list(range(self.p))

    def mth_roots(self, b, m: int) -> set:
        if m < 1:
            raise ValueError("root order must be >= 1")
        b = b % self.p
        return {a for a in range(self.p) if pow(a, m, self.p) == b}

    def parse(self, token: str) -> int:
        return int(token) % self.p

    def format(self, a) -> str:
        return str(a)


class ComplexField(Field):
    """Complex binary64 pairs with tolerance-based equality.

    Two values compare equal when ``|x - y| <= tol * max(1, |x|, |y|)``;
    the default tolerance is 1e-9.
    """

    kind = "complex64"
    name = "c64"

    def __init__(self, tolerance: float = 1e-9):
        if tolerance < 0:
            raise InvalidFieldError("tolerance must be non-negative")
        self.tolerance = tolerance

    def zero(self):
        return 0j

    def one(self):
        return 1 + 0j

    def coerce(self, value) -> complex:
        return complex(value)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in c64")
        return a / b

    def pow(self, a, k: int):
        if k < 0:
            raise ValueError("pow exponent must be non-negative")
        result = 1 + 0j
        base = complex(a)
        while k:
            if k & 1:
                result *= base
            base *= base
            k >>= 1
        return result

    def sum(self, xs):
        return sum(xs, 0j)

    def dot(self, xs, ys):
        return sum((x * y for x, y in zip(xs, ys)), 0j)

    def eq(self, a, b) -> bool:
        return abs(a - b) <= self.tolerance * max(1.0, abs(a), abs(b))

    def mth_roots(self, b, m: int) -> set:
        if m < 1:
            raise ValueError("root order must be >= 1")
        b = complex(b)
        if b == 0:
            return {0j}
        r = abs(b) ** (1.0 / m)
        theta = cmath.phase(b)
        tau = 2.0 * cmath.pi
        return {r * cmath.exp(1j * (theta + tau * k) / m) for k in range(m)}

    def parse(self, token: str) -> complex:
        if token.startswith("(") and token.endswith(")"):
            re_part, _, im_part = token[1:-1].partition(",")
            if not _:
                raise ValueError(f"bad complex literal {token!r}")
            return complex(float(re_part), float(im_part))
        return complex(float(token), 0.0)

    def format(self, a) -> str:
        return f"({a.real!r},{a.imag!r})"


def field_from_name(name: str) -> Field:
    """Build a field from its text descriptor: ``rat``, ``gf:<p>`` or ``c64``."""
    if name == "rat":
        return RationalField()
    if name == "c64":
        return ComplexField()
    if name.startswith("gf:"):
        try:
            p = int(name[3:])
        except ValueError:
            raise InvalidFieldError(f"bad modulus in {name!r}") from None
        return PrimeField(p)
    raise InvalidFieldError(f"unknown field {name!r}")

"""Exact scalar arithmetic: arbitrary-precision rationals and prime fields.

Scalars are raw carriers (fractions.Fraction for the rationals, small ints
in [0, p) for F_p); the field they belong to is carried by the containers
(Matrix, Subspace, ExteriorVector) and by these context objects. Mixing
carriers from different fields is a hard error wherever two fields meet.
"""

from fractions import Fraction


class FieldMismatch(ValueError):
    """Raised when an operation would silently combine two different fields."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    # deterministic Miller-Rabin, valid for n < 3.3e24
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class RationalField:
    """The field Q; elements are fractions.Fraction in lowest terms."""

    name = "QQ"

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def of(self, x) -> Fraction:
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in QQ")
        return Fraction(a) / b

    def inv(self, a):
        return self.div(self.one, a)

    def is_zero(self, a) -> bool:
        return a == 0

    def random(self, rng, lo=-9, hi=9):
        return Fraction(rng.randint(lo, hi))

    def sqrt(self, a):
        """Exact square root, or None if `a` is not a rational square."""
        if a < 0:
            return None
        import math

        n, d = a.numerator, a.denominator
        rn, rd = math.isqrt(n), math.isqrt(d)
        if rn * rn == n and rd * rd == d:
            return Fraction(rn, rd)
        return None

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField:
    """F_p for an odd prime p; elements are reduced ints in [0, p)."""

    def __init__(self, p: int):
        if p == 2 or not is_prime(p):
            raise ValueError(f"not an odd prime: {p}")
        self.p = p
        self.name = f"F{p}"

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def of(self, x) -> int:
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator of {x} vanishes mod {self.p}")
            return x.numerator * pow(x.denominator, self.p - 2, self.p) % self.p
        return int(x) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def div(self, a, b):
        if b % self.p == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return a * pow(b, self.p - 2, self.p) % self.p

    def inv(self, a):
        return self.div(1, a)

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def random(self, rng, lo=None, hi=None):
        return rng.randrange(self.p)

    def sqrt(self, a):
        """Tonelli-Shanks square root, or None for a non-residue."""
        p = self.p
        a %= p
        if a == 0:
            return 0
        if pow(a, (p - 1) // 2, p) != 1:
            return None
        if p % 4 == 3:
            return pow(a, (p + 1) // 4, p)
        # write p-1 = q * 2^s with q odd
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while pow(z, (p - 1) // 2, p) != p - 1:
            z += 1
        m, c = s, pow(z, q, p)
        t, r = pow(a, q, p), pow(a, (q + 1) // 2, p)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c = i, b * b % p
            t, r = t * c % p, r * b % p
        return r

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalField()

_prime_cache: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    if p not in _prime_cache:
        _prime_cache[p] = PrimeField(p)
    return _prime_cache[p]


def same_field(a, b):
    if a != b:
        raise FieldMismatch(f"field mismatch: {a!r} vs {b!r}")
    return a

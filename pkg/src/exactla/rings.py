"""Commutative domains with exact division.

Three concrete domains are provided:

* :data:`ZZ` -- arbitrary-precision integers, elements are plain ``int``;
* :class:`PrimeField` -- residues modulo a prime, elements are :class:`Residue`;
* :class:`PolyRing` -- univariate polynomials over a prime field, elements are
  :class:`Poly`.

Elements support the usual ``+ - *`` operators and unary minus, so generic
matrix code never needs to call back into the domain for ring arithmetic.
Everything that is not an operator (exact division, extended GCD, canonical
forms, parsing) lives on the domain object.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import reduce

from .errors import (
    BothZero,
    DivisionByZero,
    EmptyInput,
    ExhaustedCandidates,
    NotDivisible,
    ParseError,
    ZeroElement,
)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)
# Bases 2..41 make Miller-Rabin deterministic below this bound.
_MR_DETERMINISTIC_LIMIT = 3317044064679887385961981


def _miller_rabin(n: int, bases) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in bases:
        a %= n
        if a in (0, 1, n - 1):
            continue
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


def is_probable_prime(n: int, rng=None) -> bool:
    """Primality test with error probability below 2**-64.

    Deterministic for ``n < 3.3e24``; above that 32 random Miller-Rabin
    rounds are used on top of the fixed bases.
    """
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n == q:
            return True
        if n % q == 0:
            return False
    if n < 97 * 97:
        return True
    if not _miller_rabin(n, _SMALL_PRIMES[:13]):
        return False
    if n < _MR_DETERMINISTIC_LIMIT:
        return True
    if rng is None:
        import random

        rng = random.Random(n)
    return _miller_rabin(n, [rng.randrange(2, n - 1) for _ in range(32)])


class Domain:
    """Common interface of the concrete domains."""

    name = "domain"
    zero = None
    one = None

    def __call__(self, value):
        raise NotImplementedError

    def exact_div(self, a, b):
        raise NotImplementedError

    def gcd_ext(self, a, b):
        raise NotImplementedError

    def canonical(self, a):
        """Return ``(c, u)`` with ``a == u * c``, ``u`` a unit, ``c`` canonical."""
        raise NotImplementedError

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def gcd(self, a, b):
        return self.gcd_ext(a, b)[0]

    def lcm_many(self, elems):
        elems = list(elems)
        if not elems:
            raise EmptyInput("lcm of an empty list")
        if any(not e for e in elems):
            raise ZeroElement("lcm of a zero element")
        acc = self.canonical(elems[0])[0]
        for e in elems[1:]:
            g = self.gcd(acc, e)
            acc = self.canonical(self.exact_div(acc * e, g))[0]
        return acc

    def fraction(self, num, den):
        raise NotImplementedError

    def norm(self, a) -> int:
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, a) -> str:
        return str(a)

    def format_fraction(self, q) -> str:
        if q.denominator == self.one:
            return self.format(q.numerator)
        return f"{self.format(q.numerator)}/{self.format(q.denominator)}"


# ---------------------------------------------------------------- integers


_INT_RE = re.compile(r"^[-+]?\d+$")


class IntegerRing(Domain):
    """The integers, backed by Python's ``int``."""

    name = "ZZ"
    zero = 0
    one = 1

    def __call__(self, value):
        return int(value)

    def __repr__(self):
        return "ZZ"

    def __reduce__(self):
        return "ZZ"

    def exact_div(self, a, b):
        if b == 0:
            raise DivisionByZero("exact division by zero")
        q, r = divmod(a, b)
        if r:
            raise NotDivisible(f"{b} does not divide {a}")
        return q

    def gcd_ext(self, a, b):
        if a == 0 and b == 0:
            raise BothZero("gcd_ext(0, 0)")
        old_r, r = a, b
        old_s, s = 1, 0
        old_t, t = 0, 1
        while r:
            q = old_r // r
            old_r, r = r, old_r - q * r
            old_s, s = s, old_s - q * s
            old_t, t = t, old_t - q * t
        if old_r < 0:
            return -old_r, -old_s, -old_t
        return old_r, old_s, old_t

    def gcd(self, a, b):
        return math.gcd(a, b)

    def lcm_many(self, elems):
        elems = list(elems)
        if not elems:
            raise EmptyInput("lcm of an empty list")
        if any(e == 0 for e in elems):
            raise ZeroElement("lcm of a zero element")
        return math.lcm(*elems)

    def canonical(self, a):
        return (-a, -1) if a < 0 else (a, 1)

    def is_unit(self, a):
        return a in (1, -1)

    def fraction(self, num, den):
        if den == 0:
            raise DivisionByZero("zero denominator")
        return Fraction(num, den)

    def norm(self, a):
        return abs(a)

    def parse(self, text):
        text = text.strip()
        if not _INT_RE.match(text):
            raise ParseError(f"not an integer: {text!r}")
        return int(text)

    def random_element(self, rng, bound=10):
        return rng.randint(-bound, bound)

    def random_prime(self, rng, bits=62, exclude=()):
        """Random prime with exactly ``bits`` bits."""
        if bits < 2:
            raise ValueError("prime size must be at least 2 bits")
        lo, hi = 1 << (bits - 1), (1 << bits) - 1
        pool = hi - lo + 1
        for _ in range(max(64 * bits, 4 * pool)):
            n = rng.randint(lo, hi)
            if n not in exclude and is_probable_prime(n, rng):
                return n
        raise ExhaustedCandidates(f"no {bits}-bit prime found")


ZZ = IntegerRing()


# ------------------------------------------------------------ prime field


class Residue:
    """Element of the field of residues modulo a prime."""

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Residue):
            if other.p != self.p:
                raise ValueError("residues with different moduli")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Residue(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Residue(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Residue(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Residue(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.p)

    def inverse(self):
        if not self.value:
            raise DivisionByZero("zero has no inverse")
        return Residue(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * Residue(o, self.p).inverse()

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Residue({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


class PrimeField(Domain):
    """Residues modulo a prime ``p``; every nonzero element is invertible."""

    def __init__(self, p: int):
        if not is_probable_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"GF({p})"
        self.zero = Residue(0, p)
        self.one = Residue(1, p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __call__(self, value):
        return Residue(int(value), self.p)

    def exact_div(self, a, b):
        if not b:
            raise DivisionByZero("division by zero residue")
        return a * b.inverse()

    def gcd_ext(self, a, b):
        if not a and not b:
            raise BothZero("gcd_ext(0, 0)")
        if a:
            return self.one, a.inverse(), self.zero
        return self.one, self.zero, b.inverse()

    def canonical(self, a):
        return (self.one, a) if a else (self.zero, self.one)

    def is_unit(self, a):
        return bool(a)

    def norm(self, a):
        return 0 if not a else 1

    def parse(self, text):
        text = text.strip()
        if not _INT_RE.match(text):
            raise ParseError(f"not a residue: {text!r}")
        return self(int(text))

    def random_element(self, rng, bound=None):
        return self(rng.randrange(self.p))


# ------------------------------------------------------------- polynomials


class Poly:
    """Polynomial over GF(p), coefficients lowest degree first.

    The coefficient tuple is always trimmed, so the zero polynomial is the
    empty tuple and equality is structural.
    """

    __slots__ = ("coeffs", "p")

    def __init__(self, coeffs, p):
        cs = [c % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.p = p

    @classmethod
    def _raw(cls, coeffs, p):
        # coeffs already reduced and trimmed
        obj = cls.__new__(cls)
        obj.coeffs = coeffs
        obj.p = p
        return obj

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.p != self.p:
                raise ValueError("polynomials over different fields")
            return other
        if isinstance(other, int):
            return Poly((other,), self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out, self.p)

    __radd__ = __add__

    def __neg__(self):
        p = self.p
        return Poly._raw(tuple(-c % p for c in self.coeffs), p)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return Poly._raw((), self.p)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        # product of nonzero leading coefficients mod a prime is nonzero
        p = self.p
        return Poly._raw(tuple(c % p for c in out), p)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = Poly._raw((1,), self.p)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, other: "Poly"):
        if not other.coeffs:
            raise DivisionByZero("polynomial division by zero")
        p = self.p
        rem = list(self.coeffs)
        db = other.degree
        if len(rem) - 1 < db:
            return Poly._raw((), p), self
        inv = pow(other.lc, -1, p)
        quot = [0] * (len(rem) - db)
        b = other.coeffs
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k] * inv % p
            if c:
                quot[k - db] = c
                base = k - db
                for i, bc in enumerate(b):
                    rem[base + i] = (rem[base + i] - c * bc) % p
        return Poly(quot, p), Poly(rem[:db], p)

    def __call__(self, a: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * a + c) % self.p
        return acc

    def monic(self):
        if not self.coeffs:
            return self
        inv = pow(self.lc, -1, self.p)
        return self * inv

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.p == other.p and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == Poly((other,), self.p).coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.p))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)}, {self.p})"

    def __str__(self):
        return format_poly(self)


def format_poly(f: Poly) -> str:
    if not f.coeffs:
        return "0"
    terms = []
    for k, c in enumerate(f.coeffs):
        if not c:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            mono = "x" if k == 1 else f"x^{k}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(terms)


_TERM_RE = re.compile(r"^(?P<sign>-?)(?P<coef>\d+)?(?:(?P<star>\*)?x(?:\^(?P<exp>\d+))?)?$")


class PolyFraction:
    """Reduced quotient of two polynomials with a monic denominator."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, num: Poly, den: Poly, _reduced=False):
        if not den:
            raise DivisionByZero("zero denominator")
        if not _reduced:
            g = _poly_gcd(num, den)
            if g.degree > 0:
                num, _ = num.divmod(g)
                den, _ = den.divmod(g)
            inv = pow(den.lc, -1, den.p)
            if inv != 1:
                num, den = num * inv, den * inv
        self.numerator = num
        self.denominator = den

    def _coerce(self, other):
        if isinstance(other, PolyFraction):
            return other
        if isinstance(other, (Poly, int)):
            num = other if isinstance(other, Poly) else Poly((other,), self.numerator.p)
            return PolyFraction(num, Poly._raw((1,), num.p), _reduced=True)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return PolyFraction(
            self.numerator * o.denominator + o.numerator * self.denominator,
            self.denominator * o.denominator,
        )

    __radd__ = __add__

    def __neg__(self):
        return PolyFraction(-self.numerator, self.denominator, _reduced=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return PolyFraction(self.numerator * o.numerator, self.denominator * o.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return PolyFraction(self.numerator * o.denominator, self.denominator * o.numerator)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.numerator == o.numerator and self.denominator == o.denominator

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def __bool__(self):
        return bool(self.numerator)

    def __repr__(self):
        return f"PolyFraction({self.numerator!r}, {self.denominator!r})"


def _poly_gcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, a.divmod(b)[1]
    return a.monic()


class PolyRing(Domain):
    """Univariate polynomials over GF(p)."""

    def __init__(self, p: int):
        if not is_probable_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"GF({p})[x]"
        self.zero = Poly._raw((), p)
        self.one = Poly._raw((1,), p)
        self.x = Poly._raw((0, 1), p)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and other.p == self.p

    def __hash__(self):
        return hash(("GF[x]", self.p))

    def __repr__(self):
        return f"PolyRing({self.p})"

    def __call__(self, value):
        if isinstance(value, Poly):
            return value
        if isinstance(value, int):
            return Poly((value,), self.p)
        return Poly(list(value), self.p)

    def exact_div(self, a, b):
        q, r = a.divmod(b)
        if r:
            raise NotDivisible(f"{b} does not divide {a}")
        return q

    def gcd_ext(self, a, b):
        if not a and not b:
            raise BothZero("gcd_ext(0, 0)")
        old_r, r = a, b
        old_s, s = self.one, self.zero
        old_t, t = self.zero, self.one
        while r:
            q, rem = old_r.divmod(r)
            old_r, r = r, rem
            old_s, s = s, old_s - q * s
            old_t, t = t, old_t - q * t
        inv = pow(old_r.lc, -1, self.p)
        return old_r * inv, old_s * inv, old_t * inv

    def gcd(self, a, b):
        if not a and not b:
            raise BothZero("gcd(0, 0)")
        return _poly_gcd(a, b)

    def canonical(self, a):
        if not a:
            return self.zero, self.one
        lc = a.lc
        return a * pow(lc, -1, self.p), Poly._raw((lc,), self.p)

    def is_unit(self, a):
        return a.degree == 0

    def fraction(self, num, den):
        return PolyFraction(num, den)

    def norm(self, a):
        return a.degree

    def parse(self, text):
        s = text.strip().replace(" ", "")
        if not s:
            raise ParseError("empty polynomial")
        s = s.replace("-", "+-")
        if s.startswith("+"):
            s = s[1:]
        coeffs: dict[int, int] = {}
        for term in s.split("+"):
            m = _TERM_RE.match(term)
            if not term or not m or (m["coef"] is None and "x" not in term):
                raise ParseError(f"bad polynomial term {term!r} in {text!r}")
            if m["star"] and m["coef"] is None:
                raise ParseError(f"bad polynomial term {term!r} in {text!r}")
            c = int(m["coef"]) if m["coef"] is not None else 1
            if m["sign"]:
                c = -c
            if "x" in term:
                k = int(m["exp"]) if m["exp"] is not None else 1
            else:
                k = 0
            coeffs[k] = coeffs.get(k, 0) + c
        top = max(coeffs)
        return Poly([coeffs.get(k, 0) for k in range(top + 1)], self.p)

    def format(self, a):
        return format_poly(a)

    def format_fraction(self, q):
        num, den = q.numerator, q.denominator
        if den == self.one:
            return format_poly(num)
        n, d = format_poly(num), format_poly(den)
        if len([c for c in num.coeffs if c]) > 1:
            n = f"({n})"
        if len([c for c in den.coeffs if c]) > 1:
            d = f"({d})"
        return f"{n}/{d}"

    def random_element(self, rng, degree=2):
        return Poly([rng.randrange(self.p) for _ in range(degree + 1)], self.p)

    def random_prime(self, rng, exclude=()):
        """Monic linear prime ``x - a`` for a random evaluation point ``a``.

        ``exclude`` holds evaluation points already rejected by the caller.
        """
        candidates = [a for a in range(self.p) if a not in set(exclude)]
        if not candidates:
            raise ExhaustedCandidates(f"every evaluation point of GF({self.p}) was rejected")
        a = rng.choice(candidates)
        return Poly((-a, 1), self.p)


def exact_div(domain: Domain, a, b):
    return domain.exact_div(a, b)


def gcd_ext(domain: Domain, a, b):
    return domain.gcd_ext(a, b)


def lcm_many(domain: Domain, elems):
    return domain.lcm_many(elems)


def random_prime(domain: Domain, rng, *args, **kwargs):
    return domain.random_prime(rng, *args, **kwargs)


def parse_ring(tag: str) -> Domain:
    """Parse a ring tag: ``z`` or ``polymod=<p>``."""
    tag = tag.strip().lower()
    if tag in ("z", "zz", "int", "integers"):
        return ZZ
    if tag.startswith("polymod="):
        try:
            p = int(tag.split("=", 1)[1])
        except ValueError:
            raise ParseError(f"bad modulus in ring {tag!r}") from None
        try:
            return PolyRing(p)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    raise ParseError(f"unknown ring {tag!r}")


def dot(domain: Domain, xs, ys):
    return reduce(lambda acc, t: acc + t[0] * t[1], zip(xs, ys), domain.zero)

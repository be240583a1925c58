"""Exact arithmetic in the cyclotomic field Q(zeta) for zeta a primitive
odd-order root of unity, plus the q-combinatorics built from it.

Elements are residues in Q[x]/(Phi_ell(x)) with x mapped to zeta, stored
canonically (fully reduced), so equality is coefficient-wise and values are
hashable.  Internally a number is an integer coefficient vector over a common
positive denominator; the public ``coeffs`` view is a tuple of Fractions.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd
import re

__all__ = [
    "CycloField",
    "CycloNum",
    "cyclotomic_poly_coeffs",
    "q_int",
    "q_factorial",
    "gauss_binom",
]


def _poly_div_exact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (den monic, remainder zero)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


def cyclotomic_poly_coeffs(n: int) -> list[int]:
    """Integer coefficients (low to high, monic) of the n-th cyclotomic polynomial."""
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_div_exact(poly, cyclotomic_poly_coeffs(d))
    return poly


class CycloField:
    """Arithmetic context for Q(zeta_ell), ell odd and >= 3.

    Holds the reduction data for Phi_ell and caches for the q-quantities.
    Instances are immutable; all produced numbers are pure values.
    """

    def __init__(self, ell: int):
        if not isinstance(ell, int) or ell < 3 or ell % 2 == 0:
            raise ValueError(f"order must be an odd integer >= 3, got {ell!r}")
        self.ell = ell
        self.phi_coeffs = cyclotomic_poly_coeffs(ell)
        self.degree = len(self.phi_coeffs) - 1
        # x^k mod Phi_ell as integer rows, for k = degree .. 2*degree-2
        rows: list[tuple[int, ...]] = []
        cur = [-c for c in self.phi_coeffs[:-1]]  # x^degree
        rows.append(tuple(cur))
        for _ in range(self.degree - 2):
            nxt = [0] + cur[:-1]
            lead = cur[-1]
            if lead:
                top = rows[0]
                nxt = [a + lead * b for a, b in zip(nxt, top)]
            del nxt[self.degree:]
            rows.append(tuple(nxt))
            cur = nxt
        self._red_rows = rows
        self.zero = CycloNum(self, (0,) * self.degree, 1)
        self.one = CycloNum(self, (1,) + (0,) * (self.degree - 1), 1)
        self._zeta_pows = self._make_zeta_pows()
        self._qint_cache: dict[int, CycloNum] = {}
        self._qfact_cache: dict[int, CycloNum] = {}
        self._qbinom_cache: dict[tuple[int, int], CycloNum] = {}

    def _make_zeta_pows(self) -> list["CycloNum"]:
        pows = []
        n = [0] * self.degree
        n[0] = 1
        for _ in range(self.ell):
            pows.append(CycloNum(self, tuple(n), 1))
            lead = n[-1]
            n = [0] + n[:-1]
            if lead:
                n = [a + lead * b for a, b in zip(n, self._red_rows[0])]
        return pows

    # -- constructors -------------------------------------------------

    def zeta(self, k: int = 1) -> "CycloNum":
        """The power zeta^k (k any integer)."""
        return self._zeta_pows[k % self.ell]

    def from_int(self, n: int) -> "CycloNum":
        return CycloNum(self, (n,) + (0,) * (self.degree - 1), 1)

    def from_fraction(self, q) -> "CycloNum":
        q = Fraction(q)
        return CycloNum(self, (q.numerator,) + (0,) * (self.degree - 1), q.denominator)

    def from_coeffs(self, coeffs) -> "CycloNum":
        """Build from rational coefficients of 1, zeta, ..., any length <= ell."""
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > self.ell:
            raise ValueError("too many coefficients")
        acc = self.zero
        for k, c in enumerate(cs):
            if c:
                acc = acc + self._zeta_pows[k % self.ell]._scale(c.numerator, c.denominator)
        return acc

    def element(self, value) -> "CycloNum":
        if isinstance(value, CycloNum):
            if value.field is not self:
                raise ValueError("mixed cyclotomic fields")
            return value
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, Fraction):
            return self.from_fraction(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to CycloNum")

    # -- parsing / printing --------------------------------------------

    _TERM_RE = re.compile(
        r"""\s*(?P<sign>[+-]?)\s*
            (?:(?P<coef>\d+(?:/\d+)?)\s*(?:\*\s*)?)?
            (?:z(?:\^(?P<pow>\d+))?)?\s*""",
        re.VERBOSE,
    )

    def parse(self, text: str) -> "CycloNum":
        """Parse the text form: a polynomial in ``z`` with rational coefficients."""
        s = text.strip()
        if not s:
            raise ValueError("empty cyclotomic literal")
        acc = self.zero
        pos = 0
        first = True
        while pos < len(s):
            m = self._TERM_RE.match(s, pos)
            if not m or m.end() == pos or (m.group("coef") is None and "z" not in m.group(0)):
                raise ValueError(f"bad cyclotomic literal {text!r} at {s[pos:]!r}")
            if not first and m.group("sign") == "":
                raise ValueError(f"missing sign in {text!r}")
            coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
            if m.group("sign") == "-":
                coef = -coef
            if "z" in m.group(0):
                power = int(m.group("pow") or 1)
                term = self._zeta_pows[power % self.ell]._scale(coef.numerator, coef.denominator)
            else:
                term = self.from_fraction(coef)
            acc = acc + term
            pos = m.end()
            first = False
        return acc

    def __repr__(self):
        return f"CycloField(ell={self.ell})"

    def __eq__(self, other):
        return isinstance(other, CycloField) and other.ell == self.ell

    def __hash__(self):
        return hash(("CycloField", self.ell))


_FIELDS: dict[int, CycloField] = {}


def get_field(ell: int) -> CycloField:
    """Shared per-order field instance (fields are stateless caches)."""
    if ell not in _FIELDS:
        _FIELDS[ell] = CycloField(ell)
    return _FIELDS[ell]


class CycloNum:
    """An exact element of Q(zeta); immutable and hashable."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field: CycloField, num: tuple[int, ...], den: int):
        # normalize: positive denominator, content coprime to it
        if den < 0:
            num = tuple(-a for a in num)
            den = -den
        g = den
        for a in num:
            if a:
                g = gcd(g, a)
                if g == 1:
                    break
        if g > 1:
            num = tuple(a // g for a in num)
            den //= g
        self.field = field
        self.num = num
        self.den = den

    # -- views ----------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Canonical coefficients over the power basis 1, zeta, ..., zeta^(phi-1)."""
        return tuple(Fraction(a, self.den) for a in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    def as_int(self) -> int:
        q = self.as_fraction()
        if q.denominator != 1:
            raise ValueError(f"{self} is not an integer")
        return q.numerator

    # -- arithmetic -------------------------------------------------------

    def _scale(self, p: int, q: int) -> "CycloNum":
        return CycloNum(self.field, tuple(a * p for a in self.num), self.den * q)

    def __add__(self, other):
        other = _coerce(self.field, other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self, other
        if a.den == b.den:
            return CycloNum(a.field, tuple(x + y for x, y in zip(a.num, b.num)), a.den)
        return CycloNum(
            a.field,
            tuple(x * b.den + y * a.den for x, y in zip(a.num, b.num)),
            a.den * b.den,
        )

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.field, tuple(-a for a in self.num), self.den)

    def __sub__(self, other):
        other = _coerce(self.field, other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(self.field, other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(self.field, other)
        if other is NotImplemented:
            return NotImplemented
        f = self.field
        d = f.degree
        a, b = self.num, other.num
        conv = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = conv[:d]
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if c:
                row = f._red_rows[k - d]
                for j in range(d):
                    if row[j]:
                        out[j] += c * row[j]
        return CycloNum(f, tuple(out), self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        """Multiplicative inverse; raises ZeroDivisionError on zero."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta)")
        f = self.field
        # extended Euclid over Q[x]: r0 = Phi, r1 = self
        r0 = [Fraction(c) for c in f.phi_coeffs]
        r1 = [Fraction(a, self.den) for a in self.num]
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while True:
            while r1 and r1[-1] == 0:
                r1.pop()
            if len(r1) == 1:
                inv_c = 1 / r1[0]
                coeffs = [c * inv_c for c in s1]
                break
            q, r = _frac_poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, [a - b for a, b in _zip_pad(s0, _frac_poly_mul(q, s1))]
        coeffs += [Fraction(0)] * (f.degree - len(coeffs))
        den = 1
        for c in coeffs[: f.degree]:
            den = den * c.denominator // gcd(den, c.denominator)
        return CycloNum(f, tuple(int(c * den) for c in coeffs[: f.degree]), den)

    def __truediv__(self, other):
        other = _coerce(self.field, other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(self.field, other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def galois(self, k: int) -> "CycloNum":
        """Image under zeta -> zeta^k (k coprime to the order)."""
        f = self.field
        if gcd(k, f.ell) != 1:
            raise ValueError("not a Galois automorphism")
        acc = f.zero
        for i, a in enumerate(self.num):
            if a:
                acc = acc + f.zeta(i * k)._scale(a, 1)
        return CycloNum(f, acc.num, acc.den * self.den)

    def conjugate(self) -> "CycloNum":
        """The image under zeta -> zeta^(-1)."""
        return self.galois(self.field.ell - 1)

    # -- comparisons ------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _coerce(self.field, other)
        if not isinstance(other, CycloNum):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self.num[0], self.den))
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.is_zero()

    # -- text form ----------------------------------------------------------

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k, a in enumerate(self.num):
            if not a:
                continue
            c = Fraction(a, self.den)
            mag = str(abs(c))
            if k == 0:
                body = mag
            else:
                zk = "z" if k == 1 else f"z^{k}"
                body = zk if abs(c) == 1 else f"{mag}*{zk}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"CycloNum({self}, ell={self.field.ell})"


def _coerce(field: CycloField, value):
    if isinstance(value, CycloNum):
        if value.field is not field and value.field != field:
            return NotImplemented
        return value
    if isinstance(value, int):
        return field.from_int(value)
    if isinstance(value, Fraction):
        return field.from_fraction(value)
    return NotImplemented


def _zip_pad(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return zip(a, b)


def _frac_poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _frac_poly_divmod(num, den):
    num = list(num)
    dn = len(den) - 1
    q = [Fraction(0)] * max(len(num) - dn, 1)
    inv_lead = 1 / den[-1]
    for i in range(len(num) - dn - 1, -1, -1):
        c = num[i + dn] * inv_lead
        q[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    return q, num[:dn]


# -- q-combinatorics ----------------------------------------------------------


def q_int(field: CycloField, n: int) -> CycloNum:
    """The balanced q-integer [n] = (zeta^n - zeta^-n)/(zeta - zeta^-1)."""
    n_red = n % field.ell
    cached = field._qint_cache.get(n_red)
    if cached is None:
        num = field.zeta(n_red) - field.zeta(-n_red)
        den = field.zeta(1) - field.zeta(-1)
        cached = field._qint_cache.setdefault(n_red, num / den)
    return cached


def q_factorial(field: CycloField, n: int) -> CycloNum:
    """[n]! = [1][2]...[n]; zero exactly when n >= ell."""
    if n < 0:
        raise ValueError("q-factorial of a negative integer")
    if n >= field.ell:
        return field.zero
    cached = field._qfact_cache.get(n)
    if cached is None:
        acc = field.one
        for s in range(1, n + 1):
            acc = acc * q_int(field, s)
        cached = field._qfact_cache.setdefault(n, acc)
    return cached


def gauss_binom(field: CycloField, n: int, k: int) -> CycloNum:
    """Balanced Gaussian binomial [n over k] at zeta; any integer n, k >= 0.

    Negative upper index follows the product formula, equivalently
    [-n over k] = (-1)^k [n+k-1 over k].  For k >= ell the value is taken
    through the q-Lucas factorization (the product formula degenerates there).
    """
    if k < 0:
        return field.zero
    if k == 0:
        return field.one
    key = (n, k)
    cached = field._qbinom_cache.get(key)
    if cached is not None:
        return cached
    if n < 0:
        val = gauss_binom(field, -n + k - 1, k)
        if k % 2:
            val = -val
    elif k > n:
        val = field.zero
    elif k < field.ell:
        num = field.one
        for s in range(1, k + 1):
            num = num * (field.zeta(n - s + 1) - field.zeta(-(n - s + 1)))
        den = field.one
        for s in range(1, k + 1):
            den = den * (field.zeta(s) - field.zeta(-s))
        val = num / den
    else:
        n0, n1 = n % field.ell, n // field.ell
        k0, k1 = k % field.ell, k // field.ell
        val = gauss_binom(field, n0, k0) * comb(n1, k1) if k1 <= n1 else field.zero
    field._qbinom_cache[key] = val
    return val

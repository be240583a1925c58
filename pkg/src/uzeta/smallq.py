"""The ell^3-dimensional small quantum group for sl2 at an odd root of unity.

PBW monomials F^a K^b E^c with 0 <= a,b,c < ell; relations
    K E = z^2 E K,   K F = z^-2 F K,   [E,F] = (K - K^-1)/(z - z^-1),
    K^ell = 1,  E^ell = 0,  F^ell = 0.
Products are normal-ordered through a cached expansion of E^c F^a.
"""

from __future__ import annotations

from fractions import Fraction
import re

from .cyclotomic import CycloField, CycloNum, gauss_binom, get_field, q_factorial, q_int

__all__ = ["Uzeta", "UzetaElement"]


class Uzeta:
    """Arithmetic context for the small quantum group at a fixed odd order."""

    def __init__(self, ell: int, field: CycloField | None = None):
        self.field = field if field is not None else get_field(ell)
        if self.field.ell != ell:
            raise ValueError("field order mismatch")
        self.ell = ell
        self.dim = ell ** 3
        # E^c F^a = sum_j F^(a-j) P_j(K) E^(c-j); table[(c,a)][j] = {K-exp: coeff}
        self._ef_cache: dict[tuple[int, int], list[dict[int, CycloNum]]] = {}
        self.zero = UzetaElement(self, {})
        self.one = self.monomial(0, 0, 0)
        self.E = self.monomial(0, 0, 1)
        self.F = self.monomial(1, 0, 0)
        self.K = self.monomial(0, 1, 0)
        self.K_inv = self.monomial(0, ell - 1, 0)
        self._qm1 = (self.field.zeta(1) - self.field.zeta(-1)).inverse()

    # -- constructors ------------------------------------------------------

    def monomial(self, a: int, b: int, c: int, coeff=1) -> "UzetaElement":
        if not (0 <= a < self.ell and 0 <= c < self.ell):
            raise ValueError("PBW exponents out of range")
        co = self.field.element(coeff)
        if co.is_zero():
            return self.zero
        return UzetaElement(self, {(a, b % self.ell, c): co})

    def scalar(self, value) -> "UzetaElement":
        co = self.field.element(value)
        if co.is_zero():
            return self.zero
        return UzetaElement(self, {(0, 0, 0): co})

    def E_div(self, s: int) -> "UzetaElement":
        """Divided power E^(s) = E^s/[s]!, defined inside u for s < ell."""
        if not 0 <= s < self.ell:
            raise ValueError("divided power exponent must satisfy 0 <= s < ell")
        return self.monomial(0, 0, s, q_factorial(self.field, s).inverse())

    def F_div(self, s: int) -> "UzetaElement":
        if not 0 <= s < self.ell:
            raise ValueError("divided power exponent must satisfy 0 <= s < ell")
        return self.monomial(s, 0, 0, q_factorial(self.field, s).inverse())

    def casimir(self) -> "UzetaElement":
        """The quantum Casimir F E + (z K + z^-1 K^-1)/(z - z^-1)^2."""
        f, sq = self.field, self._qm1 * self._qm1
        return (
            self.monomial(1, 0, 1)
            + self.monomial(0, 1, 0, f.zeta(1) * sq)
            + self.monomial(0, self.ell - 1, 0, f.zeta(-1) * sq)
        )

    def torus_binom(self, c: int, t: int) -> "UzetaElement":
        """prod_{s=1..t} (K z^(c-s+1) - K^-1 z^-(c-s+1)) / (z^s - z^-s), t < ell.

        On a K-eigenvector of eigenvalue z^m this acts as gauss_binom(m+c, t).
        """
        if not 0 <= t < self.ell:
            raise ValueError("torus binomial needs 0 <= t < ell inside u")
        f = self.field
        acc = self.one
        for s in range(1, t + 1):
            d = (f.zeta(s) - f.zeta(-s)).inverse()
            factor = self.monomial(0, 1, 0, f.zeta(c - s + 1) * d) + self.monomial(
                0, self.ell - 1, 0, -f.zeta(-(c - s + 1)) * d
            )
            acc = acc * factor
        return acc

    def idempotent_e(self, m: int) -> "UzetaElement":
        """Torus idempotent e_m = (1/ell) sum_j z^(-mj) K^j; K e_m = z^m e_m."""
        f = self.field
        inv_ell = f.from_fraction(Fraction(1, self.ell))
        terms = {(0, j, 0): f.zeta(-m * j) * inv_ell for j in range(self.ell)}
        return UzetaElement(self, terms)

    def element_f(self) -> "UzetaElement":
        """sum_t F^(ell-t) [K; -2(ell-t) over t] E^(ell-t), 1 <= t <= ell-1."""
        acc = self.zero
        for t in range(1, self.ell):
            acc = acc + self.F_div(self.ell - t) * self.torus_binom(-2 * (self.ell - t), t) * self.E_div(self.ell - t)
        return acc

    def omega(self, x: "UzetaElement") -> "UzetaElement":
        """The automorphism E <-> F, K <-> K^-1."""
        acc = self.zero
        for (a, b, c), coef in x.terms.items():
            term = self.monomial(0, 0, a) if a else self.one  # E^a
            term = term * self.monomial(0, (-b) % self.ell, 0)
            if c:
                term = term * self.monomial(c, 0, 0)  # F^c
            acc = acc + term * coef
        return acc

    def verify_FsEs(self, s: int) -> bool:
        """Check F^(s) E^(s) against the Casimir product expansion."""
        if not 0 <= s < self.ell:
            raise ValueError("need 0 <= s < ell")
        if s == 0:
            return True
        lhs = self.F_div(s) * self.E_div(s)
        f, sq = self.field, self._qm1 * self._qm1
        cz = self.casimir()
        prod = self.one
        for i in range(1, s + 1):
            shift = self.monomial(0, 1, 0, f.zeta(2 * (i - 1) + 1) * sq) + self.monomial(
                0, self.ell - 1, 0, f.zeta(-2 * (i - 1) - 1) * sq
            )
            prod = prod * (cz - shift)
        rhs = prod * (q_factorial(f, s).inverse() ** 2)
        return lhs == rhs

    # -- PBW coordinates ----------------------------------------------------

    def index(self, a: int, b: int, c: int) -> int:
        return (a * self.ell + b) * self.ell + c

    def unindex(self, idx: int) -> tuple[int, int, int]:
        c = idx % self.ell
        idx //= self.ell
        return idx // self.ell, idx % self.ell, c

    def to_vector(self, x: "UzetaElement") -> list[CycloNum]:
        v = [self.field.zero] * self.dim
        for (a, b, c), coef in x.terms.items():
            v[self.index(a, b, c)] = coef
        return v

    def from_vector(self, v) -> "UzetaElement":
        terms = {}
        for idx, coef in enumerate(v):
            if not coef.is_zero():
                terms[self.unindex(idx)] = coef
        return UzetaElement(self, terms)

    def ad_k_weight(self, idx: int) -> int:
        """Weight of K-conjugation on the idx-th PBW monomial: (c-a) mod ell."""
        a, _, c = self.unindex(idx)
        return (c - a) % self.ell

    def graded_indices(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {w: [] for w in range(self.ell)}
        for idx in range(self.dim):
            out[self.ad_k_weight(idx)].append(idx)
        return out

    # -- normal ordering ----------------------------------------------------

    def _ef_table(self, c: int, a: int) -> list[dict[int, CycloNum]]:
        """Expansion E^c F^a = sum_j F^(a-j) P_j(K) E^(c-j) as K-coefficient dicts."""
        if c == 0 or a == 0:
            return [{0: self.field.one}]
        key = (c, a)
        cached = self._ef_cache.get(key)
        if cached is not None:
            return cached
        f = self.field
        # E^c F^a = (E^(c-1) F^a) E + [a] (E^(c-1) F^(a-1)) G_a(K)
        # with G_a(K) = (z^-(a-1) K - z^(a-1) K^-1)/(z - z^-1)
        out: list[dict[int, CycloNum]] = [dict() for _ in range(min(a, c) + 1)]
        for j, poly in enumerate(self._ef_table(c - 1, a)):
            tgt = out[j]
            for e, coef in poly.items():
                tgt[e] = tgt.get(e, f.zero) + coef
        qa = q_int(f, a)
        g = {1: f.zeta(-(a - 1)) * self._qm1, self.ell - 1: -f.zeta(a - 1) * self._qm1}
        for j, poly in enumerate(self._ef_table(c - 1, a - 1)):
            if j + 1 >= len(out):
                continue
            tgt = out[j + 1]
            ey = (c - 1) - j  # E-exponent the K-power moves past
            for e, coef in poly.items():
                for ge, gcoef in g.items():
                    scl = qa * coef * gcoef * f.zeta(-2 * ge * ey)
                    key2 = (e + ge) % self.ell
                    tgt[key2] = tgt.get(key2, f.zero) + scl
        out = [{e: v for e, v in poly.items() if not v.is_zero()} for poly in out]
        self._ef_cache[key] = out
        return out

    def _mul_monomials(self, m1, m2, coef, acc: dict):
        a1, b1, c1 = m1
        a2, b2, c2 = m2
        f = self.field
        table = self._ef_table(c1, a2)
        for j, poly in enumerate(table):
            a = a1 + a2 - j
            c = c1 - j + c2
            if a >= self.ell or c >= self.ell or not poly:
                continue
            base = coef * f.zeta(-2 * b1 * (a2 - j)) * f.zeta(-2 * b2 * (c1 - j))
            for e, pc in poly.items():
                key = (a, (b1 + e + b2) % self.ell, c)
                val = acc.get(key)
                add = base * pc
                acc[key] = add if val is None else val + add

    def multiply(self, x: "UzetaElement", y: "UzetaElement") -> "UzetaElement":
        acc: dict = {}
        for m1, c1 in x.terms.items():
            for m2, c2 in y.terms.items():
                self._mul_monomials(m1, m2, c1 * c2, acc)
        return UzetaElement(self, {k: v for k, v in acc.items() if not v.is_zero()})

    # -- text form -----------------------------------------------------------

    def parse(self, text: str) -> "UzetaElement":
        """Parse 'coeff * F^a K^b E^c' terms joined by '+'; factors may appear
        in any order and are multiplied out, so input need not be normalized."""
        s = text.strip()
        if not s:
            raise ValueError("empty element literal")
        acc = self.zero
        for sign, term in _split_terms(s):
            acc = acc + self._parse_term(term) * self.field.from_int(sign)
        return acc

    _FACTOR_RE = re.compile(r"\s*(?:\*\s*)?([FKE])(?:\^(-?\d+))?")

    def _parse_term(self, term: str) -> "UzetaElement":
        term = term.strip()
        if not term:
            raise ValueError("empty term")
        coef = self.field.one
        pos = 0
        if term.startswith("("):
            depth, i = 1, 1
            while i < len(term) and depth:
                depth += {"(": 1, ")": -1}.get(term[i], 0)
                i += 1
            coef = self.field.parse(term[1:i - 1])
            pos = i
        else:
            m = re.match(r"\s*(\d+(?:/\d+)?)", term)
            if m:
                coef = self.field.from_fraction(Fraction(m.group(1)))
                pos = m.end()
        elem = self.scalar(coef)
        while pos < len(term):
            m = self._FACTOR_RE.match(term, pos)
            if not m:
                raise ValueError(f"bad element term {term!r} at {term[pos:]!r}")
            gen, power = m.group(1), int(m.group(2) or 1)
            base = {"F": self.F, "K": self.K, "E": self.E}[gen]
            if power < 0:
                if gen != "K":
                    raise ValueError("negative powers only for K")
                base, power = self.K_inv, -power
            for _ in range(power):
                elem = elem * base
            pos = m.end()
        return elem


def _split_terms(s: str):
    """Split on top-level +/- (outside parentheses, not exponent signs)."""
    out = []
    depth = 0
    sign = 1
    cur: list[str] = []
    prev = ""
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and prev != "^":
            if any(c.strip() for c in cur):
                out.append((sign, "".join(cur)))
                cur = []
                sign = 1 if ch == "+" else -1
            else:
                sign *= 1 if ch == "+" else -1
            prev = ch
            continue
        cur.append(ch)
        if ch.strip():
            prev = ch
    if any(c.strip() for c in cur):
        out.append((sign, "".join(cur)))
    if not out:
        raise ValueError(f"no terms in {s!r}")
    return out


class UzetaElement:
    """A PBW-normal-form element: sparse map (a, b, c) -> coefficient."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: Uzeta, terms: dict):
        self.algebra = algebra
        self.terms = terms

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            cur = out.get(k)
            s = v if cur is None else cur + v
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return UzetaElement(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        return UzetaElement(self.algebra, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, UzetaElement):
            return self.algebra.multiply(self, other)
        co = self.algebra.field.element(other)
        if co.is_zero():
            return self.algebra.zero
        return UzetaElement(self.algebra, {k: v * co for k, v in self.terms.items()})

    def __rmul__(self, other):
        # scalars commute; element-element products never reach here
        return self.__mul__(other)

    def __pow__(self, n: int):
        result = self.algebra.one
        for _ in range(n):
            result = result * self
        return result

    def _coerce(self, other):
        if isinstance(other, UzetaElement):
            return other
        try:
            return self.algebra.scalar(other)
        except TypeError:
            return NotImplemented

    def __eq__(self, other):
        if isinstance(other, UzetaElement):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def commutator(self, other: "UzetaElement") -> "UzetaElement":
        return self * other - other * self

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b, c) in sorted(self.terms):
            coef = self.terms[(a, b, c)]
            mono = " ".join(
                g if p == 1 else f"{g}^{p}"
                for g, p in (("F", a), ("K", b), ("E", c))
                if p
            )
            cs = str(coef)
            if not mono:
                parts.append(f"({cs})" if ("+" in cs or "-" in cs[1:] or "z" in cs) else cs)
            elif coef == self.algebra.field.one:
                parts.append(mono)
            else:
                needs_parens = "+" in cs or "-" in cs[1:] or cs.startswith("-") or "z" in cs
                parts.append(f"({cs})*{mono}" if needs_parens else f"{cs}*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"UzetaElement({self})"

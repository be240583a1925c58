"""The diagonal subalgebra of the quantized hyperalgebra: the commutative
algebra on K (with K^ell = 1) and the degree-ell binomial generator delta,
its coalgebra structure, weights and characters.

A weight is a pair (r, alpha): the character sending K to zeta^r and delta
to alpha.  Integral weights m = m0 + ell*m1 embed as (m0, m1); addition
carries per the weight-sum rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .cyclotomic import CycloField, CycloNum, gauss_binom, get_field
from .errors import TruncationError

__all__ = ["Weight", "TorusAlgebra", "TorusElement", "TorusTensor"]


@dataclass(frozen=True)
class Weight:
    """A character (r, alpha) of the diagonal subalgebra; r is reduced mod ell."""

    r: int
    alpha: CycloNum

    def __str__(self):
        return f"({self.r}, {self.alpha})"


class TorusAlgebra:
    """Context for K^i delta^j arithmetic with a delta-degree budget."""

    def __init__(self, ell: int, max_degree: int = 6, field: CycloField | None = None):
        self.field = field if field is not None else get_field(ell)
        self.ell = ell
        self.max_degree = max_degree
        self.zero = TorusElement(self, {})
        self.one = self.monomial(0, 0)
        self.K = self.monomial(1, 0)
        self.delta = self.monomial(0, 1)
        self._coproduct_delta: TorusTensor | None = None

    # -- weights -----------------------------------------------------------

    def weight(self, r: int, alpha) -> Weight:
        return Weight(r % self.ell, self.field.element(alpha))

    def weight_of_int(self, m: int) -> Weight:
        """The integral weight m = m0 + ell*m1 as the pair (m0, m1)."""
        return Weight(m % self.ell, self.field.from_int(m // self.ell))

    def weight_add(self, lam: Weight, mu: Weight) -> Weight:
        """Sum with carry: (r+s, a+b) if r+s < ell, else (r+s-ell, a+b+1)."""
        r = lam.r + mu.r
        if r < self.ell:
            return Weight(r, lam.alpha + mu.alpha)
        return Weight(r - self.ell, lam.alpha + mu.alpha + self.field.one)

    def weight_neg(self, lam: Weight) -> Weight:
        if lam.r == 0:
            return Weight(0, -lam.alpha)
        return Weight(self.ell - lam.r, -lam.alpha - self.field.one)

    # -- elements ------------------------------------------------------------

    def monomial(self, i: int, j: int, coeff=1) -> "TorusElement":
        if j < 0:
            raise ValueError("negative delta-degree")
        if j > self.max_degree:
            raise TruncationError(f"delta-degree {j} exceeds budget {self.max_degree}")
        co = self.field.element(coeff)
        if co.is_zero():
            return self.zero
        return TorusElement(self, {(i % self.ell, j): co})

    def k_poly(self, coeffs: dict[int, CycloNum]) -> "TorusElement":
        return TorusElement(
            self, {(i % self.ell, 0): c for i, c in coeffs.items() if not c.is_zero()}
        )

    def idempotent_e(self, m: int) -> "TorusElement":
        f = self.field
        inv_ell = f.from_fraction(Fraction(1, self.ell))
        return self.k_poly({j: f.zeta(-m * j) * inv_ell for j in range(self.ell)})

    def primitive_d(self) -> "TorusElement":
        """delta + (1/ell) sum_m m e_m; a primitive element for the coproduct."""
        acc = self.delta
        f = self.field
        for m in range(1, self.ell):
            acc = acc + self.idempotent_e(m) * f.from_fraction(Fraction(m, self.ell))
        return acc

    def binom_K(self, m: int) -> "TorusElement":
        """The binomial [K over m] written on the K^i delta^j basis.

        Factors as the k[K] part for the remainder digit times the ordinary
        binomial polynomial in delta for the quotient digit; evaluating at an
        integral weight n recovers gauss_binom(n, m).
        """
        if m < 0:
            raise ValueError("binomial index must be nonnegative")
        m0, m1 = m % self.ell, m // self.ell
        f = self.field
        acc = self.one
        for s in range(1, m0 + 1):
            d = (f.zeta(s) - f.zeta(-s)).inverse()
            acc = acc * self.k_poly({1: f.zeta(1 - s) * d, -1: -f.zeta(-(1 - s)) * d})
        if m1:
            poly = self.one
            for i in range(m1):
                poly = poly * (self.delta - self.monomial(0, 0, i))
            acc = acc * poly * f.from_fraction(Fraction(1, factorial(m1)))
        return acc

    # -- characters -----------------------------------------------------------

    def char_eval(self, lam: Weight, t: "TorusElement") -> CycloNum:
        """Evaluate the character of weight lam: K -> zeta^r, delta -> alpha."""
        f = self.field
        acc = f.zero
        for (i, j), coef in t.terms.items():
            acc = acc + coef * f.zeta(lam.r * i) * lam.alpha ** j
        return acc

    def char_convolve(self, lam: Weight, mu: Weight, t: "TorusElement") -> CycloNum:
        """(chi_lam * chi_mu)(t) through the coproduct."""
        f = self.field
        acc = f.zero
        for ((i1, j1), (i2, j2)), coef in self.coproduct(t).terms.items():
            acc = acc + coef * f.zeta(lam.r * i1) * lam.alpha ** j1 * f.zeta(mu.r * i2) * mu.alpha ** j2
        return acc

    def counit(self, t: "TorusElement") -> CycloNum:
        acc = self.field.zero
        for (_, j), coef in t.terms.items():
            if j == 0:
                acc = acc + coef
        return acc

    # -- coproduct ----------------------------------------------------------

    def _delta_coproduct(self) -> "TorusTensor":
        if self._coproduct_delta is None:
            t = self.tensor({((0, 1), (0, 0)): self.field.one, ((0, 0), (0, 1)): self.field.one})
            for i in range(self.ell):
                for j in range(self.ell):
                    if i + j >= self.ell:
                        t = t + self.tensor_pure(self.idempotent_e(i), self.idempotent_e(j))
            self._coproduct_delta = t
        return self._coproduct_delta

    def tensor(self, terms: dict) -> "TorusTensor":
        return TorusTensor(self, {k: v for k, v in terms.items() if not v.is_zero()})

    def tensor_pure(self, x: "TorusElement", y: "TorusElement") -> "TorusTensor":
        terms = {}
        for k1, c1 in x.terms.items():
            for k2, c2 in y.terms.items():
                terms[(k1, k2)] = c1 * c2
        return self.tensor(terms)

    def coproduct(self, t: "TorusElement") -> "TorusTensor":
        """Coproduct with K grouplike and the asymmetric delta rule."""
        dd = self._delta_coproduct()
        acc = self.tensor({})
        for (i, j), coef in t.terms.items():
            part = self.tensor({((i, 0), (i, 0)): self.field.one})
            for _ in range(j):
                part = part * dd
            acc = acc + part * coef
        return acc

    def counit_left(self, t: "TorusTensor") -> "TorusElement":
        """(counit x id) applied to a tensor."""
        terms: dict = {}
        for ((i1, j1), k2), coef in t.terms.items():
            if j1 == 0:
                terms[k2] = terms.get(k2, self.field.zero) + coef
        return TorusElement(self, {k: v for k, v in terms.items() if not v.is_zero()})

    def counit_right(self, t: "TorusTensor") -> "TorusElement":
        terms: dict = {}
        for (k1, (i2, j2)), coef in t.terms.items():
            if j2 == 0:
                terms[k1] = terms.get(k1, self.field.zero) + coef
        return TorusElement(self, {k: v for k, v in terms.items() if not v.is_zero()})


class _Linear:
    """Shared dict-backed linear structure for torus elements and tensors."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: TorusAlgebra, terms: dict):
        self.algebra = algebra
        self.terms = terms

    def is_zero(self):
        return not self.terms

    def _make(self, terms):
        return type(self)(self.algebra, terms)

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k)
            s = v if s is None else s + v
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return self._make(out)

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self + other.scale(-1)

    def scale(self, c):
        co = self.algebra.field.element(c)
        if co.is_zero():
            return self._make({})
        return self._make({k: v * co for k, v in self.terms.items()})

    def __eq__(self, other):
        return type(other) is type(self) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))


class TorusElement(_Linear):
    """Element of the diagonal subalgebra on the basis K^i delta^j."""

    def __pow__(self, n: int):
        acc = self.algebra.one
        for _ in range(n):
            acc = acc * self
        return acc

    def __mul__(self, other):
        if isinstance(other, TorusElement):
            alg = self.algebra
            out: dict = {}
            for (i1, j1), c1 in self.terms.items():
                for (i2, j2), c2 in other.terms.items():
                    j = j1 + j2
                    if j > alg.max_degree:
                        raise TruncationError(
                            f"delta-degree {j} exceeds budget {alg.max_degree}"
                        )
                    k = ((i1 + i2) % alg.ell, j)
                    v = out.get(k)
                    p = c1 * c2
                    out[k] = p if v is None else v + p
            return TorusElement(alg, {k: v for k, v in out.items() if not v.is_zero()})
        return self.scale(other)

    __rmul__ = __mul__

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j) in sorted(self.terms):
            coef = self.terms[(i, j)]
            mono = " ".join(
                s for s in (
                    ("K" if i == 1 else f"K^{i}") if i else "",
                    ("d" if j == 1 else f"d^{j}") if j else "",
                ) if s
            )
            parts.append(f"({coef})*{mono}" if mono else f"({coef})")
        return " + ".join(parts)

    __repr__ = __str__


class TorusTensor(_Linear):
    """Element of the tensor square, on pairs of K^i delta^j monomials."""

    def __mul__(self, other):
        if isinstance(other, TorusTensor):
            alg = self.algebra
            out: dict = {}
            for ((i1, j1), (i2, j2)), c1 in self.terms.items():
                for ((u1, v1), (u2, v2)), c2 in other.terms.items():
                    ja, jb = j1 + v1, j2 + v2
                    if ja > alg.max_degree or jb > alg.max_degree:
                        raise TruncationError("tensor delta-degree exceeds budget")
                    k = (((i1 + u1) % alg.ell, ja), ((i2 + u2) % alg.ell, jb))
                    v = out.get(k)
                    p = c1 * c2
                    out[k] = p if v is None else v + p
            return TorusTensor(alg, {k: v for k, v in out.items() if not v.is_zero()})
        return self.scale(other)

    __rmul__ = __mul__

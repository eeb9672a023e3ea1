"""Exact integer polynomials and characteristic-polynomial machinery.

Everything here runs on Python integers; no floating point is involved.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .graph import Graph


class InexactDivisionError(ArithmeticError):
    pass


@dataclass(frozen=True)
class IntPolynomial:
    """Dense polynomial with integer coefficients, ``coeffs[k]`` multiplies x**k.

    The zero polynomial has ``coeffs == ()``; otherwise the last coefficient is
    nonzero.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def x(cls) -> IntPolynomial:
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> IntPolynomial:
        """Monic polynomial prod (x - r)."""
        p = cls((1,))
        for r in roots:
            p = p * cls((-r, 1))
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = IntPolynomial((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod_exact(self, other: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        """Long division; requires every quotient coefficient to be an integer."""
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lead = other.leading
        if len(rem) - 1 < db:
            return IntPolynomial(), self
        quot = [0] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            top = rem[k + db]
            if top % lead:
                raise InexactDivisionError(
                    f"coefficient {top} not divisible by leading coefficient {lead}"
                )
            q = top // lead
            quot[k] = q
            if q:
                for i, c in enumerate(other.coeffs):
                    rem[k + i] -= q * c
        return IntPolynomial(quot), IntPolynomial(rem)

    def __floordiv__(self, other):
        return divide_exact(self, _coerce(other))

    def reflect(self) -> IntPolynomial:
        """p(-x)."""
        return IntPolynomial(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs))

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = _gcd(g, c)
        return g

    def primitive(self) -> IntPolynomial:
        """Divide out the content and make the leading coefficient positive."""
        if self.is_zero():
            return self
        g = self.content()
        if self.leading < 0:
            g = -g
        return IntPolynomial(c // g for c in self.coeffs)

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj) -> IntPolynomial:
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(int(c) for c in obj["coeffs"])

    def key(self) -> bytes:
        """Canonical byte encoding, used as a hash key."""
        return ",".join(str(c) for c in self.coeffs).encode()

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = "x" if k == 1 else f"x^{k}"
                body = mono if a == 1 else f"{a}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def _coerce(p) -> IntPolynomial:
    if isinstance(p, IntPolynomial):
        return p
    if isinstance(p, (int, np.integer)):
        return IntPolynomial((int(p),))
    return NotImplemented


def poly_add(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    return a + b


def poly_mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    return a * b


def divide_exact(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Quotient ``a / b``; raises :class:`InexactDivisionError` unless ``b | a`` over Z."""
    q, r = a.divmod_exact(b)
    if r:
        raise InexactDivisionError(f"({b}) does not divide ({a}); remainder {r}")
    return q


poly_divide_exact = divide_exact


def divides(b: IntPolynomial, a: IntPolynomial) -> bool:
    try:
        divide_exact(a, b)
    except InexactDivisionError:
        return False
    return True


def strip_zero_roots(p: IntPolynomial) -> tuple[IntPolynomial, int]:
    """Split ``p = x**z * reduced`` with ``reduced(0) != 0``."""
    if p.is_zero():
        raise ValueError("the zero polynomial has no finite zero multiplicity")
    z = 0
    while p.coeffs[z] == 0:
        z += 1
    return IntPolynomial(p.coeffs[z:]), z


def sign_changes(coeffs: Sequence[int]) -> int:
    changes = 0
    last = 0
    for c in coeffs:
        if c:
            if last and (c > 0) != (last > 0):
                changes += 1
            last = c
    return changes


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive greatest common divisor over Q, normalised to positive lead."""
    fa = [Fraction(c) for c in a.coeffs]
    fb = [Fraction(c) for c in b.coeffs]
    while fb:
        while fa and len(fa) >= len(fb):
            q = fa[-1] / fb[-1]
            shift = len(fa) - len(fb)
            for i, c in enumerate(fb):
                fa[shift + i] -= q * c
            while fa and fa[-1] == 0:
                fa.pop()
        fa, fb = fb, fa
    if not fa:
        return IntPolynomial()
    den = 1
    for c in fa:
        den = den * c.denominator // _gcd(den, c.denominator)
    return IntPolynomial(int(c * den) for c in fa).primitive()


def squarefree_decomposition(p: IntPolynomial) -> list[IntPolynomial]:
    """Primitive factors where ``factors[i]`` holds the roots of multiplicity ``i + 1``.

    ``p`` equals the product of ``factors[i] ** (i + 1)`` up to a constant; an
    entry is the constant 1 when no root has that multiplicity.
    """
    if p.degree < 1:
        return []
    # layers[k] is the squarefree polynomial of roots with multiplicity > k
    layers = []
    current = p.primitive()
    while current.degree > 0:
        g = poly_gcd(current, current.derivative())
        layers.append(_exact_primitive_quotient(current, g))
        current = g
    out = []
    for k, f in enumerate(layers):
        nxt = layers[k + 1] if k + 1 < len(layers) else IntPolynomial((1,))
        out.append(_exact_primitive_quotient(f, nxt))
    return out


def _exact_primitive_quotient(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    if b.degree <= 0:
        return a.primitive()
    scaled = a * (b.leading ** (a.degree - b.degree + 1))
    return divide_exact(scaled, b).primitive()


def distinct_root_count(p: IntPolynomial) -> int:
    """Number of distinct complex roots of ``p``."""
    if p.degree <= 0:
        return 0
    g = poly_gcd(p, p.derivative())
    return p.degree - max(g.degree, 0)


# -- characteristic polynomials ---------------------------------------------


def charpoly_matrix(matrix) -> IntPolynomial:
    """det(xI - M) of an integer matrix by the Faddeev-LeVerrier recurrence.

    Uses Python integers throughout; each division by ``k`` is exact.
    """
    m = np.array(matrix, dtype=object)
    n = m.shape[0]
    if m.shape != (n, n):
        raise ValueError("matrix must be square")
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    if n == 0:
        return IntPolynomial(coeffs)
    ident = np.zeros((n, n), dtype=object)
    for i in range(n):
        ident[i, i] = 1
    mk = np.zeros((n, n), dtype=object)
    for k in range(1, n + 1):
        mk = m.dot(mk) + coeffs[n - k + 1] * ident
        tr = int(np.trace(m.dot(mk)))
        if tr % k:
            raise ArithmeticError("Faddeev-LeVerrier produced a non-integer coefficient")
        coeffs[n - k] = -(tr // k)
    return IntPolynomial(coeffs)


@lru_cache(maxsize=65536)
def char_poly(g: Graph) -> IntPolynomial:
    """Characteristic polynomial det(xI - A) of the adjacency matrix."""
    if g.n == 0:
        return IntPolynomial((1,))
    return charpoly_matrix(g.adjacency())


@lru_cache(maxsize=65536)
def squared_char_poly(g: Graph) -> IntPolynomial:
    """Characteristic polynomial of A**2.

    From det(x^2 I - A^2) = det(xI - A) det(xI + A) = (-1)^n p(x) p(-x): the even
    polynomial on the right, read in x^2, is det(yI - A^2).
    """
    p = char_poly(g)
    r = p * p.reflect()
    if g.n % 2:
        r = -r
    return IntPolynomial(r.coeffs[0::2])


class Inertia(NamedTuple):
    positive: int
    zero: int
    negative: int


@lru_cache(maxsize=65536)
def inertia(g: Graph) -> Inertia:
    """Exact (p, z, n) via Descartes' rule of signs.

    All roots of an adjacency characteristic polynomial are real, so the sign
    change counts are exact root counts rather than upper bounds.
    """
    return polynomial_inertia(char_poly(g))


def polynomial_inertia(p: IntPolynomial) -> Inertia:
    """Signed root counts of a real-rooted integer polynomial."""
    reduced, z = strip_zero_roots(p)
    pos = sign_changes(reduced.coeffs)
    neg = sign_changes(reduced.reflect().coeffs)
    if pos + neg + z != p.degree:
        raise ArithmeticError("polynomial is not real-rooted; Descartes count is not exact")
    return Inertia(pos, z, neg)


def rank_nullity(g: Graph) -> tuple[int, int]:
    i = inertia(g)
    return i.positive + i.negative, i.zero


def _int64_safe(g: Graph, k: int) -> bool:
    # entries of A^k are at most maxdeg^k, the trace at most n * maxdeg^k
    maxdeg = max((r.bit_count() for r in g.rows), default=0)
    return g.n * maxdeg ** k < 2**62


def trace_power(g: Graph, k: int) -> int:
    """trace(A**k), the number of closed walks of length ``k``."""
    if k < 1:
        raise ValueError("k must be positive")
    if g.n == 0:
        return 0
    a = g.adjacency()
    if _int64_safe(g, k):
        return int(np.trace(np.linalg.matrix_power(a, k)))
    return int(np.trace(_object_power(a.astype(object), k)))


def trace_powers(g: Graph, k_max: int) -> list[int]:
    """``[trace(A**k) for k in 1..k_max]`` by repeated multiplication."""
    if g.n == 0:
        return [0] * k_max
    a = g.adjacency()
    out = []
    if _int64_safe(g, k_max):
        cur = a.copy()
        for _ in range(k_max):
            out.append(int(np.trace(cur)))
            cur = cur @ a
        return out
    ao = a.astype(object)
    cur = ao.copy()
    for _ in range(k_max):
        out.append(int(np.trace(cur)))
        cur = cur.dot(ao)
    return out


def _object_power(a, k):
    result = None
    base = a
    while k:
        if k & 1:
            result = base if result is None else result.dot(base)
        k >>= 1
        if k:
            base = base.dot(base)
    return result


def power_sums_from_poly(p: IntPolynomial, k_max: int) -> list[int]:
    """Newton's identities: sums of k-th powers of the roots of a monic ``p``."""
    if p.leading != 1:
        raise ValueError("Newton's identities here need a monic polynomial")
    n = p.degree
    # e_i with p = x^n - e1 x^{n-1} + e2 x^{n-2} - ...
    e = [1] + [(-1) ** i * p.coeffs[n - i] for i in range(1, n + 1)]
    sums = []
    for k in range(1, k_max + 1):
        s = (-1) ** (k - 1) * k * e[k] if k <= n else 0
        for i in range(1, k):
            if i <= n:
                s += (-1) ** (i - 1) * e[i] * sums[k - i - 1]
        sums.append(s)
    return sums

"""Exact arithmetic in the real field Q(theta), theta = 2*cos(pi/L).

A Coxeter matrix with finite labels m >= 3 needs the values cos(pi/m)
exactly.  Taking L = lcm of those labels, every such cosine lives in the
field generated by theta = 2*cos(pi/L), because 2*cos(pi/m) = D_{L/m}(theta)
where D_k is the integer polynomial with D_k(2*cos x) = 2*cos(k*x).

Scalars are stored as coefficient vectors over Fraction, reduced modulo the
minimal polynomial of theta, so equality is coefficient equality.  Signs are
decided exactly: the scalar's polynomial is evaluated with rational interval
arithmetic on a shrinking isolating interval for theta.  Floating point is
never consulted.
"""

from __future__ import annotations

import math
from fractions import Fraction

import sympy

from .errors import DivisionByZero, IncompatibleOrder, InvalidMatrix, MixedFields

INFINITY = math.inf  # Coxeter matrix entry for an unbounded product order

_F0 = Fraction(0)
_F1 = Fraction(1)
_F2 = Fraction(2)


# ---------------------------------------------------------------------------
# dense polynomials over Fraction, coefficient lists ordered low to high


def _strip(p: list[Fraction]) -> list[Fraction]:
    while p and not p[-1]:
        p.pop()
    return p


def _poly_eval(p, x: Fraction) -> Fraction:
    acc = _F0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _poly_interval_eval(p, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Horner evaluation of p over the interval [lo, hi], rational endpoints."""
    vlo = vhi = _F0
    for c in reversed(p):
        cands = (vlo * lo, vlo * hi, vhi * lo, vhi * hi)
        vlo, vhi = min(cands) + c, max(cands) + c
    return vlo, vhi


def _poly_derivative(p):
    return [c * k for k, c in enumerate(p)][1:]


def _poly_rem(a, b):
    """Remainder of a modulo b over the rationals (b nonzero)."""
    a = list(a)
    db, lead = len(b) - 1, b[-1]
    while len(a) - 1 >= db and _strip(a):
        if not a:
            break
        q = a[-1] / lead
        shift = len(a) - 1 - db
        for i, c in enumerate(b):
            a[shift + i] -= q * c
        _strip(a)
    return a


def _sturm_chain(p):
    chain = [list(p), _poly_derivative(list(p))]
    while _strip(chain[-1]):
        rem = [-c for c in _poly_rem(chain[-2], chain[-1])]
        if not _strip(rem):
            break
        chain.append(rem)
    if not chain[-1]:
        chain.pop()
    return chain


def _sign_variations(chain, x: Fraction) -> int:
    signs = []
    for p in chain:
        v = _poly_eval(p, x)
        if v:
            signs.append(v > 0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _count_roots(chain, a: Fraction, b: Fraction) -> int:
    """Distinct real roots in (a, b); requires nonvanishing at both endpoints."""
    return _sign_variations(chain, a) - _sign_variations(chain, b)


def double_cosine_poly(k: int) -> list[int]:
    """Integer coefficients of D_k, the degree-k polynomial with
    D_k(2*cos x) = 2*cos(k*x)."""
    if k == 0:
        return [2]
    prev, cur = [2], [0, 1]
    for _ in range(k - 1):
        nxt = [0] + cur
        for i, c in enumerate(prev):
            nxt[i] -= c
        prev, cur = cur, nxt
    return cur


# ---------------------------------------------------------------------------
# Coxeter matrix validation


def validate_matrix(matrix) -> tuple[tuple[int | float, ...], ...]:
    """Check the defining conditions of a Coxeter matrix and return it as a
    tuple of tuples with entries int or INFINITY.  Raises InvalidMatrix."""
    rows = []
    n = len(matrix)
    if n == 0:
        raise InvalidMatrix("matrix must have positive rank")
    for row in matrix:
        if len(row) != n:
            raise InvalidMatrix("matrix must be square")
        out = []
        for e in row:
            if e == INFINITY:
                out.append(INFINITY)
            elif isinstance(e, int) and not isinstance(e, bool):
                out.append(e)
            else:
                raise InvalidMatrix(f"entry {e!r} is not a positive integer or inf")
        rows.append(tuple(out))
    for i in range(n):
        if rows[i][i] != 1:
            raise InvalidMatrix("diagonal entries must equal 1")
        for j in range(n):
            if rows[i][j] != rows[j][i]:
                raise InvalidMatrix("matrix must be symmetric")
            if i != j and rows[i][j] != INFINITY and rows[i][j] < 2:
                raise InvalidMatrix("off-diagonal entries must be >= 2 or inf")
    return tuple(rows)


def _cosine_order_lcm(matrix) -> int:
    L = 1
    for i, row in enumerate(matrix):
        for j, e in enumerate(row):
            if i < j and e != INFINITY and e >= 3:
                L = math.lcm(L, e)
    return L


# ---------------------------------------------------------------------------
# field construction


def _factor_integer_poly(coeffs: list[int]) -> list[list[Fraction]]:
    """Distinct monic irreducible factors over Q, via sympy's factorization."""
    x = sympy.Symbol("x")
    poly = sympy.Poly(list(reversed(coeffs)), x, domain="QQ")
    factors = []
    for fac, _mult in poly.factor_list()[1]:
        cs = [Fraction(c.p, c.q) for c in reversed(fac.monic().all_coeffs())]
        factors.append(cs)
    return factors


def _pick_sample(polys, lo: Fraction, hi: Fraction) -> Fraction:
    """A point strictly inside (lo, hi) at which no listed polynomial vanishes."""
    den = 4
    while True:
        for num in range(1, den):
            if math.gcd(num, den) != 1:
                continue
            x = lo + (hi - lo) * Fraction(num, den)
            if all(_poly_eval(p, x) for p in polys):
                return x
        den *= 2


def _isolate_largest_root(factors) -> tuple[list[Fraction], tuple[Fraction, Fraction]]:
    """Among all real roots of the given squarefree polynomials, isolate the
    largest one; return its factor and an isolating interval.

    Exact throughout: root counting by Sturm chains, bisection points chosen
    away from roots.  Used with the factors of D_L + 2, whose largest real
    root is exactly 2*cos(pi/L).
    """
    chains = [(f, _sturm_chain(f)) for f in factors]
    lo, hi = Fraction(-3), Fraction(3)  # all roots of D_L + 2 lie in [-2, 2]
    while True:
        live = [(f, _count_roots(ch, lo, hi)) for f, ch in chains]
        live = [(f, c) for f, c in live if c > 0]
        if len(live) == 1 and live[0][1] == 1:
            return live[0][0], (lo, hi)
        mid = _pick_sample(factors, lo, hi)
        in_top = sum(_count_roots(ch, mid, hi) for _, ch in chains)
        if in_top >= 1:
            lo = mid
        else:
            hi = mid


def _totient(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


class FieldContext:
    """Arithmetic context for Q(theta), theta = 2*cos(pi/L).

    Immutable after construction apart from an internal isolating-interval
    cache that only ever shrinks (refinements preserve the contained root,
    so concurrent readers always see a valid enclosure).
    """

    __slots__ = ("L", "minpoly", "iso_interval", "degree", "_powers", "_iso",
                 "_minpoly_chain_lo_sign", "_zero", "_one", "_theta", "_cos_cache")

    def __init__(self, L: int, minpoly: tuple[Fraction, ...],
                 iso_interval: tuple[Fraction, Fraction]):
        self.L = L
        self.minpoly = minpoly
        self.iso_interval = iso_interval
        self.degree = len(minpoly) - 1
        d = self.degree
        # reductions of theta^d .. theta^(2d-2) as coefficient tuples
        powers = []
        top = [-c for c in minpoly[:-1]]
        powers.append(tuple(top))
        for _ in range(d - 2):
            shifted = [_F0] + list(powers[-1])
            lead = shifted.pop()
            powers.append(tuple(shifted[i] + lead * powers[0][i] for i in range(d)))
        self._powers = tuple(powers)
        self._iso = iso_interval
        self._zero = FieldScalar(self, (_F0,) * d)
        self._one = FieldScalar(self, (_F1,) + (_F0,) * (d - 1))
        if d >= 2:
            self._theta = FieldScalar(self, (_F0, _F1) + (_F0,) * (d - 2))
        else:
            self._theta = FieldScalar(self, (-minpoly[0],))
        self._cos_cache: dict = {}

    @property
    def zero(self) -> "FieldScalar":
        return self._zero

    @property
    def one(self) -> "FieldScalar":
        return self._one

    @property
    def theta(self) -> "FieldScalar":
        return self._theta

    def from_rational(self, q) -> "FieldScalar":
        q = Fraction(q)
        return FieldScalar(self, (q,) + (_F0,) * (self.degree - 1))

    def scalar(self, coeffs) -> "FieldScalar":
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > self.degree:
            raise ValueError("coefficient vector longer than the field degree")
        cs += [_F0] * (self.degree - len(cs))
        return FieldScalar(self, tuple(cs))

    def evaluate_int_poly(self, coeffs) -> "FieldScalar":
        """Value of an integer polynomial at theta."""
        acc = self._zero
        for c in reversed(coeffs):
            acc = acc * self._theta + self.from_rational(c)
        return acc

    def evaluate_minpoly_at_theta(self) -> "FieldScalar":
        """The minimal polynomial evaluated at theta; must reduce to zero."""
        acc = self._zero
        for c in reversed(self.minpoly):
            acc = acc * self._theta + self.from_rational(c)
        return acc

    def _refine_iso(self) -> None:
        """Halve the cached isolating interval around theta."""
        lo, hi = self._iso
        mid = (lo + hi) / 2
        vmid = _poly_eval(self.minpoly, mid)
        if not vmid:
            # only possible for a degree-1 field, where signs never need this
            raise ArithmeticError("bisection point hit the root exactly")
        vlo = _poly_eval(self.minpoly, lo)
        if (vlo < 0) != (vmid < 0):
            self._iso = (lo, mid)
        else:
            self._iso = (mid, hi)

    def __repr__(self):
        return f"FieldContext(L={self.L}, degree={self.degree})"


class FieldScalar:
    """An element of Q(theta), stored as the coefficient tuple of its
    canonical representative modulo the minimal polynomial of theta."""

    __slots__ = ("ctx", "coeffs", "_sign")

    def __init__(self, ctx: FieldContext, coeffs: tuple[Fraction, ...]):
        self.ctx = ctx
        self.coeffs = coeffs
        self._sign = None

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, FieldScalar):
            if other.ctx is not self.ctx:
                raise MixedFields("scalars belong to different field contexts")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.from_rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldScalar(self.ctx, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldScalar(self.ctx, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return FieldScalar(self.ctx, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        d = self.ctx.degree
        if d == 1:
            return FieldScalar(self.ctx, (a[0] * b[0],))
        conv = [_F0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        res = conv[:d]
        powers = self.ctx._powers
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if c:
                red = powers[k - d]
                for i in range(d):
                    res[i] += c * red[i]
        return FieldScalar(self.ctx, tuple(res))

    __rmul__ = __mul__

    def _inverse(self) -> "FieldScalar":
        if self.is_zero():
            raise DivisionByZero("scalar has no inverse")
        ctx = self.ctx
        if not any(self.coeffs[1:]):
            inv = 1 / self.coeffs[0]
            return FieldScalar(ctx, (inv,) + (_F0,) * (ctx.degree - 1))
        # extended Euclid against the minimal polynomial: u*a + v*m = gcd = const
        a = _strip(list(self.coeffs))
        m = list(ctx.minpoly)
        r0, r1 = m, a
        u0, u1 = [], [_F1]
        while True:
            # divide r0 by r1
            q = [_F0] * (len(r0) - len(r1) + 1)
            rem = list(r0)
            while len(rem) >= len(r1) and _strip(rem):
                k = len(rem) - len(r1)
                c = rem[-1] / r1[-1]
                q[k] = c
                for i, b in enumerate(r1):
                    rem[k + i] -= c * b
                _strip(rem)
            # u_next = u0 - q*u1
            qu = [_F0] * (len(q) + len(u1))
            for i, qi in enumerate(q):
                if qi:
                    for j, uj in enumerate(u1):
                        qu[i + j] += qi * uj
            nxt = [_F0] * max(len(u0), len(qu))
            for i, c in enumerate(u0):
                nxt[i] += c
            for i, c in enumerate(qu):
                nxt[i] -= c
            _strip(nxt)
            r0, r1, u0, u1 = r1, rem, u1, nxt
            if not r1:
                break
        # r0 is now the gcd, a nonzero constant since minpoly is irreducible
        assert len(r0) == 1, "minimal polynomial must be irreducible"
        g = r0[0]
        inv = [c / g for c in u0]
        inv += [_F0] * (ctx.degree - len(inv))
        return FieldScalar(ctx, tuple(inv[:ctx.degree]))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o._inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self._inverse()

    # -- predicates and order -----------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("scalar is irrational")
        return self.coeffs[0]

    def sign(self) -> int:
        """Exact sign (-1, 0, +1), decided by rational interval arithmetic on
        a shrinking isolating interval for theta."""
        if self._sign is not None:
            return self._sign
        if self.is_zero():
            self._sign = 0
            return 0
        if self.is_rational():
            s = 1 if self.coeffs[0] > 0 else -1
            self._sign = s
            return s
        ctx = self.ctx
        p = _strip(list(self.coeffs))
        while True:
            lo, hi = ctx._iso
            vlo, vhi = _poly_interval_eval(p, lo, hi)
            if vlo > 0:
                self._sign = 1
                return 1
            if vhi < 0:
                self._sign = -1
                return -1
            # p is nonzero of degree < deg(minpoly), so p(theta) != 0 and the
            # enclosure eventually excludes zero
            ctx._refine_iso()

    def __eq__(self, other):
        if isinstance(other, FieldScalar):
            return self.ctx is other.ctx and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __le__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() <= 0

    def __gt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() > 0

    def __ge__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() >= 0

    def __bool__(self):
        return not self.is_zero()

    # -- display --------------------------------------------------------------

    def __str__(self):
        if self.is_rational():
            return str(self.coeffs[0])
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
                continue
            power = "θ" if k == 1 else f"θ^{k}"
            if c == 1:
                term = power
            elif c == -1:
                term = f"-{power}"
            else:
                term = f"{c}*{power}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    def __repr__(self):
        return f"FieldScalar({self})"


def build_field(coxeter_matrix) -> FieldContext:
    """Field context for the given Coxeter matrix.

    L is the lcm of the finite labels >= 3 (L = 1 when there are none).  The
    minimal polynomial of theta = 2*cos(pi/L) is selected among the rational
    irreducible factors of D_L + 2 as the one whose largest real root the
    Sturm-count bisection isolates; theta is the largest real root of D_L + 2
    because its roots are 2*cos((2k+1)*pi/L).
    """
    matrix = validate_matrix(coxeter_matrix)
    L = _cosine_order_lcm(matrix)
    target = double_cosine_poly(L)
    target[0] += 2
    factors = _factor_integer_poly(target)
    minpoly, iso = _isolate_largest_root(factors)
    ctx = FieldContext(L, tuple(minpoly), iso)
    expected = _totient(2 * L) // 2 if L >= 3 else 1
    assert ctx.degree == expected, "minimal polynomial has unexpected degree"
    assert ctx.evaluate_minpoly_at_theta().is_zero()
    return ctx


def cos_pi_over(ctx: FieldContext, m) -> FieldScalar:
    """cos(pi/m) as an element of the field; m = INFINITY yields 1 (the
    caller negates it for the bilinear form of an unbounded label)."""
    if m == INFINITY:
        return ctx.one
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise IncompatibleOrder(f"label {m!r} is not a positive integer or inf")
    cached = ctx._cos_cache.get(m)
    if cached is not None:
        return cached
    if m == 1:
        value = -ctx.one
    elif m == 2:
        value = ctx.zero
    else:
        if ctx.L % m != 0:
            raise IncompatibleOrder(
                f"cos(pi/{m}) does not lie in the field for L = {ctx.L}")
        value = ctx.evaluate_int_poly(double_cosine_poly(ctx.L // m)) / 2
    ctx._cos_cache[m] = value
    return value

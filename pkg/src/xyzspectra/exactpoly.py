"""Exact polynomial arithmetic over the integers.

This is the computational kernel: univariate and bivariate polynomials
with arbitrary-precision integer coefficients, exact characteristic
polynomials of integer matrices, and products of a bivariate factor over
the roots of a monic polynomial (computed as resultants).  No floating
point, no modular shortcuts; every result is bit-exact.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import IntMatrix, NotSquare

__all__ = [
    "IntPoly",
    "BiPoly",
    "RatPoly",
    "NotDivisible",
    "DegreeMismatch",
    "exact_div",
    "compose_linear",
    "charpoly",
    "det",
    "resultant",
    "reduced_qpoly",
    "eig_product",
]


class NotDivisible(ArithmeticError):
    """Exact division failed; the quotient is not an integer polynomial."""


class DegreeMismatch(ValueError):
    """A polynomial came out with the wrong degree."""


def _trim(coeffs) -> tuple[int, ...]:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class IntPoly:
    """Univariate integer polynomial; coefficients ascending, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def zero(cls) -> IntPoly:
        return cls(())

    @classmethod
    def one(cls) -> IntPoly:
        return cls((1,))

    @classmethod
    def x(cls) -> IntPoly:
        return cls((0, 1))

    @classmethod
    def constant(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def linear_root(cls, root: int) -> IntPoly:
        """The monic factor (x - root)."""
        return cls((-root, 1))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __add__(self, other: IntPoly) -> IntPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(other * c for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly.zero()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPoly(out)

    def __rmul__(self, other: int) -> IntPoly:
        return self * other

    def __pow__(self, k: int) -> IntPoly:
        if k < 0:
            raise ValueError("pow: exponent must be >= 0")
        out = IntPoly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, x: int) -> int:
        y = 0
        for c in reversed(self.coeffs):
            y = y * x + c
        return y

    def to_string(self) -> str:
        """Ascending coefficients as space-separated decimal strings."""
        if self.is_zero:
            return "0"
        return " ".join(str(c) for c in self.coeffs)

    def pretty(self, var: str = "x") -> str:
        """Conventional display, highest power first: x^2 - 14*x + 40."""
        if self.is_zero:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = var if k == 1 else f"{var}^{k}"
                body = power if mag == 1 else f"{mag}*{power}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms)


def exact_div(a: IntPoly, b: IntPoly) -> IntPoly:
    """Quotient q with a = b*q; raises NotDivisible when no such q exists."""
    if b.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero:
        return IntPoly.zero()
    if a.degree < b.degree:
        raise NotDivisible(f"degree {a.degree} < {b.degree}")
    rem = list(a.coeffs)
    lead = b.leading
    qdeg = a.degree - b.degree
    quot = [0] * (qdeg + 1)
    for k in range(qdeg, -1, -1):
        top = rem[k + b.degree]
        if top % lead != 0:
            raise NotDivisible("leading coefficient does not divide")
        t = top // lead
        quot[k] = t
        if t:
            for i, c in enumerate(b.coeffs):
                rem[k + i] -= t * c
    if any(rem):
        raise NotDivisible("nonzero remainder")
    return IntPoly(quot)


def compose_linear(f: IntPoly, a: int, b: int) -> IntPoly:
    """Expand f(a*x + b) exactly (a is +1 or -1 in every use here)."""
    arg = IntPoly((b, a))
    out = IntPoly.zero()
    for c in reversed(f.coeffs):
        out = out * arg + IntPoly.constant(c)
    return out


class BiPoly:
    """Bivariate integer polynomial; grid[i][j] is the coefficient of u^i v^j.

    The two variables are abstract; callers bind them to (lambda, q) for
    per-eigenvalue factors or to the two arguments of a matrix polynomial.
    """

    __slots__ = ("grid",)

    def __init__(self, grid=()):
        rows = [list(int(c) for c in row) for row in grid]
        # trim trailing zero columns, then trailing zero rows
        width = 0
        for row in rows:
            w = len(row)
            while w and row[w - 1] == 0:
                w -= 1
            width = max(width, w)
        rows = [row[:width] + [0] * (width - len(row[:width])) for row in rows]
        while rows and all(c == 0 for c in rows[-1]):
            rows.pop()
        object.__setattr__(self, "grid", tuple(tuple(row) for row in rows))

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    @classmethod
    def constant(cls, c: int) -> BiPoly:
        return cls(((c,),))

    @classmethod
    def u(cls) -> BiPoly:
        """The first variable."""
        return cls(((0,), (1,)))

    @classmethod
    def v(cls) -> BiPoly:
        """The second variable."""
        return cls(((0, 1),))

    @classmethod
    def from_poly_in_v(cls, p: IntPoly) -> BiPoly:
        return cls((p.coeffs,))

    @property
    def is_zero(self) -> bool:
        return not self.grid

    @property
    def deg_u(self) -> int:
        return len(self.grid) - 1

    @property
    def deg_v(self) -> int:
        return max((len(row) for row in self.grid), default=0) - 1

    def __eq__(self, other) -> bool:
        return isinstance(other, BiPoly) and self.grid == other.grid

    def __hash__(self):
        return hash(self.grid)

    def __repr__(self):
        return f"BiPoly({[list(r) for r in self.grid]})"

    def _lift(self, other) -> BiPoly:
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, int):
            return BiPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        h = max(len(self.grid), len(other.grid))
        w = max(self.deg_v, other.deg_v) + 1
        out = [[0] * w for _ in range(h)]
        for grid in (self.grid, other.grid):
            for i, row in enumerate(grid):
                for j, c in enumerate(row):
                    out[i][j] += c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> BiPoly:
        return BiPoly(tuple(tuple(-c for c in row) for row in self.grid))

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return BiPoly()
        h = len(self.grid) + len(other.grid) - 1
        w = self.deg_v + other.deg_v + 1
        out = [[0] * w for _ in range(h)]
        for i, ra in enumerate(self.grid):
            for j, ca in enumerate(ra):
                if ca:
                    for k, rb in enumerate(other.grid):
                        for l, cb in enumerate(rb):
                            if cb:
                                out[i + k][j + l] += ca * cb
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> BiPoly:
        if k < 0:
            raise ValueError("pow: exponent must be >= 0")
        out = BiPoly.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def eval_u(self, x: int) -> IntPoly:
        """Substitute an integer for the first variable; polynomial in the second."""
        w = self.deg_v + 1
        out = [0] * max(w, 0)
        p = 1
        for row in self.grid:
            for j, c in enumerate(row):
                out[j] += c * p
            p *= x
        return IntPoly(out)

    def to_poly_in_u(self) -> IntPoly:
        """Demote to univariate in the first variable; second must be absent."""
        if self.deg_v > 0:
            raise ValueError("second variable present")
        return IntPoly(row[0] if row else 0 for row in self.grid)

    def pretty(self, u: str = "x", v: str = "y") -> str:
        """Term-by-term display, u-major: x^2 - x*y + 3."""
        if self.is_zero:
            return "0"
        terms = []
        for i in range(self.deg_u, -1, -1):
            row = self.grid[i] if i < len(self.grid) else ()
            for j in range(len(row) - 1, -1, -1):
                c = row[j]
                if c == 0:
                    continue
                mag = abs(c)
                names = []
                if i:
                    names.append(u if i == 1 else f"{u}^{i}")
                if j:
                    names.append(v if j == 1 else f"{v}^{j}")
                body = "*".join(names) if names else ""
                if body:
                    body = body if mag == 1 else f"{mag}*{body}"
                else:
                    body = str(mag)
                if not terms:
                    terms.append(body if c > 0 else f"-{body}")
                else:
                    terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms)


class RatPoly:
    """Quotient of integer polynomials; reduced on demand by exact division."""

    __slots__ = ("num", "den")

    def __init__(self, num: IntPoly, den: IntPoly | None = None):
        den = IntPoly.one() if den is None else den
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatPoly is immutable")

    def __mul__(self, other) -> RatPoly:
        if isinstance(other, IntPoly):
            return RatPoly(self.num * other, self.den)
        return RatPoly(self.num * other.num, self.den * other.den)

    def to_poly(self) -> IntPoly:
        """Exact quotient; raises NotDivisible when the rational is not polynomial."""
        return exact_div(self.num, self.den)


# ----------------------------------------------------------------------------
# Exact determinants and characteristic polynomials.
# ----------------------------------------------------------------------------


def det(mat: IntMatrix) -> int:
    """Integer determinant via fraction-free (Bareiss) elimination."""
    if not mat.is_square:
        raise NotSquare("det: matrix must be square")
    n = mat.rows
    if n == 0:
        return 1
    a = [list(row) for row in mat.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def charpoly(mat: IntMatrix) -> IntPoly:
    """Characteristic polynomial det(x*I - M), monic of degree dim(M).

    Faddeev-LeVerrier recurrence: every intermediate trace is divisible by
    its step index, so the computation stays in the integers.
    """
    if not mat.is_square:
        raise NotSquare("charpoly: matrix must be square")
    n = mat.rows
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    acc = IntMatrix.identity(n)
    for k in range(1, n + 1):
        prod = mat * acc
        t = prod.trace()
        if t % k != 0:
            raise ArithmeticError("Faddeev-LeVerrier divisibility violated")
        ck = -t // k
        coeffs[n - k] = ck
        acc = prod + ck * IntMatrix.identity(n)
    return IntPoly(coeffs)


def reduced_qpoly(f: IntPoly, r: int) -> IntPoly:
    """Strip the known root 2r from a monic characteristic polynomial.

    For a connected r-regular graph the signless Laplacian has 2r as an
    eigenvalue; the quotient is monic of degree n-1 and carries the rest
    of the spectrum.
    """
    if not f.is_monic:
        raise ValueError("reduced_qpoly: input must be monic")
    return exact_div(f, IntPoly.linear_root(2 * r))


# ----------------------------------------------------------------------------
# Eigen-products via resultants.
# ----------------------------------------------------------------------------


def resultant(p: IntPoly, h: IntPoly) -> int:
    """Resultant of p and h (both in one variable), via the Sylvester matrix.

    For monic p this equals the product of h over the roots of p, which is
    the only use this library makes of it.
    """
    if p.is_zero or h.is_zero:
        raise ValueError("resultant of the zero polynomial")
    dp, dh = p.degree, h.degree
    if dp == 0:
        return p.coeffs[0] ** dh
    if dh == 0:
        return h.coeffs[0] ** dp
    size = dp + dh
    pc = list(reversed(p.coeffs))
    hc = list(reversed(h.coeffs))
    rows = []
    for i in range(dh):
        rows.append([0] * i + pc + [0] * (size - dp - 1 - i))
    for i in range(dp):
        rows.append([0] * i + hc + [0] * (size - dh - 1 - i))
    return det(IntMatrix.from_rows(rows))


def _roots_product(p: IntPoly, h: IntPoly) -> int:
    """Product of h over the roots of monic p, with multiplicity."""
    if p.degree == 0:
        return 1
    if h.is_zero:
        return 0
    return resultant(p, h)


def _interpolate_integer(points) -> IntPoly:
    """Lagrange interpolation through integer points; result must be integral."""
    npts = len(points)
    coeffs = [Fraction(0)] * npts
    for i, (xi, yi) in enumerate(points):
        # basis polynomial prod_{j != i} (x - xj) / (xi - xj)
        basis = [Fraction(1)]
        denom = 1
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            new = [Fraction(0)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                new[k] -= c * xj
                new[k + 1] += c
            basis = new
            denom *= xi - xj
        scale = Fraction(yi, denom)
        for k, c in enumerate(basis):
            coeffs[k] += c * scale
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise ArithmeticError("interpolation produced a non-integer coefficient")
        out.append(int(c))
    return IntPoly(out)


def eig_product(p: IntPoly, g: BiPoly) -> IntPoly:
    """Product of g(x, alpha) over the roots alpha of the monic polynomial p.

    Evaluation-interpolation: the result has degree at most deg_u(g)*deg(p),
    so sampling g at x = 0, 1, ..., deg_u(g)*deg(p) and taking one exact
    integer resultant per sample pins it down.  The first variable of g is
    the surviving one; the second is bound to the roots of p.
    """
    if not p.is_monic:
        raise ValueError("eig_product: p must be monic")
    if g.is_zero:
        raise ValueError("eig_product: g must be nonzero")
    d = p.degree
    if d == 0:
        return IntPoly.one()
    bound = g.deg_u * d
    points = []
    for x0 in range(bound + 1):
        points.append((x0, _roots_product(p, g.eval_u(x0))))
    return _interpolate_integer(points)

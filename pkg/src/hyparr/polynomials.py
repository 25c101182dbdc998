"""Integer polynomials in one variable q and in two variables (x, y).

UniPoly stores dense coefficients indexed by degree with trailing zeros
trimmed; BiPoly stores a sparse map (i, j) -> coefficient.  Both are
immutable value types with exact integer arithmetic throughout.
"""

from fractions import Fraction


class UniPoly:
    """Integer polynomial in q; coeffs[i] is the coefficient of q^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def monomial(cls, degree, coeff=1):
        return cls((0,) * degree + (coeff,))

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return UniPoly(out)

    def __neg__(self):
        return UniPoly(tuple(-v for v in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return UniPoly(tuple(v * other for v in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        out = UniPoly.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __call__(self, x):
        """Evaluate by Horner; x may be an int or a Fraction."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def reversed_at(self, m):
        """q^m * p(1/q) as a polynomial; requires m >= degree."""
        if m < self.degree:
            raise ValueError("reversal window smaller than the degree")
        out = [0] * (m + 1)
        for i, c in enumerate(self.coeffs):
            out[m - i] = c
        return UniPoly(out)

    def divexact(self, other):
        """Exact polynomial division; raises if the remainder is nonzero."""
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = [Fraction(c) for c in self.coeffs]
        div = [Fraction(c) for c in other.coeffs]
        if not rem:
            return UniPoly()
        if len(rem) < len(div):
            raise ValueError("inexact polynomial division")
        out = [Fraction(0)] * (len(rem) - len(div) + 1)
        lead = div[-1]
        for i in range(len(out) - 1, -1, -1):
            f = rem[i + len(div) - 1] / lead
            out[i] = f
            if f:
                for j, d in enumerate(div):
                    rem[i + j] -= f * d
        if any(rem) or any(c.denominator != 1 for c in out):
            raise ValueError("inexact polynomial division")
        return UniPoly(tuple(int(c) for c in out))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                base = "q" if i == 1 else f"q^{i}"
                if c == 1:
                    parts.append(base)
                elif c == -1:
                    parts.append(f"-{base}")
                else:
                    parts.append(f"{c}*{base}")
        return " + ".join(parts).replace("+ -", "- ")


class BiPoly:
    """Integer polynomial in x and y; terms maps (i, j) -> coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, i, j, coeff=1):
        return cls({(i, j): coeff})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return BiPoly(out)

    def __neg__(self):
        return BiPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return BiPoly({k: v * other for k, v in self.terms.items()})
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        out = BiPoly.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __call__(self, x, y):
        return sum(c * x**i * y**j for (i, j), c in self.terms.items())

    def at_y_zero(self):
        """The part surviving y = 0, still as a bivariate polynomial."""
        return BiPoly({k: v for k, v in self.terms.items() if k[1] == 0})

    def at_x_zero(self):
        return BiPoly({k: v for k, v in self.terms.items() if k[0] == 0})

    def sorted_terms(self):
        """Terms sorted lexicographically by (x-degree, y-degree)."""
        return sorted(self.terms.items())

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in self.sorted_terms():
            mono = "".join(
                [f"x^{i}" if i > 1 else ("x" if i == 1 else ""),
                 f"y^{j}" if j > 1 else ("y" if j == 1 else "")])
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def interpolate_unipoly(points):
    """Integer polynomial through the given (x, y) pairs, by Lagrange.

    Raises ValueError when the interpolant has a non-integer coefficient;
    callers use that as a genuine failure signal.
    """
    pts = list(points)
    coeffs = [Fraction(0)] * len(pts)
    for i, (xi, yi) in enumerate(pts):
        # numerator polynomial prod_{j != i} (q - x_j), built as coefficients
        num = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(pts):
            if j == i:
                continue
            nxt = [Fraction(0)] * (len(num) + 1)
            for k, c in enumerate(num):
                nxt[k] -= c * xj
                nxt[k + 1] += c
            num = nxt
            denom *= xi - xj
        scale = Fraction(yi) / denom
        for k, c in enumerate(num):
            coeffs[k] += c * scale
    if any(c.denominator != 1 for c in coeffs):
        raise ValueError("interpolant is not an integer polynomial")
    return UniPoly(tuple(int(c) for c in coeffs))

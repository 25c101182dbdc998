"""Circuit polynomials, Groebner machinery, Hilbert series, Krull dimension.

Multivariate polynomials live in Q[e_1..e_n] with exact rational
coefficients; every e_i has degree 1.  (Some geometric sources double the
grading; reports here use the single grading throughout.)  Reduction strips
integer content to keep coefficients small, and `buchberger` returns the
reduced monic basis.  The self-certification helper re-reduces every
S-polynomial of a claimed basis to zero.

Term orders carry the element ordering sigma that also defines broken
circuits: the variables are compared so that the sigma-smallest element is
the least variable, which makes the leading monomial of a circuit
polynomial exactly its broken-circuit monomial.
"""

import random
import warnings
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from .arrangement import Arrangement
from .complexes import broken_circuit_complex, matroid_complex
from .polynomials import UniPoly


class MultiPoly:
    """Sparse polynomial: exponent tuple -> nonzero Fraction coefficient."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {}
        for exps, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                self.terms[tuple(exps)] = c

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def constant(cls, n, c):
        return cls(n, {(0,) * n: Fraction(c)})

    @classmethod
    def variable(cls, n, i):
        """The variable e_i (1-based)."""
        exps = tuple(1 if j == i - 1 else 0 for j in range(n))
        return cls(n, {exps: Fraction(1)})

    @classmethod
    def monomial(cls, n, exps, c=1):
        return cls(n, {tuple(exps): Fraction(c)})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, MultiPoly) and self.n == other.n
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, Fraction(0)) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return MultiPoly(self.n, out)

    def __neg__(self):
        return MultiPoly(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MultiPoly(self.n, {m: c * other for m, c in self.terms.items()})
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, Fraction(0)) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return MultiPoly(self.n, out)

    __rmul__ = __mul__

    def mul_term(self, exps, coeff):
        return MultiPoly(self.n, {
            tuple(a + b for a, b in zip(m, exps)): c * coeff
            for m, c in self.terms.items()})

    def lead(self, order):
        """(exponents, coefficient) of the leading term."""
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def primitive(self):
        """Integer-content-free scalar multiple with positive leading sign
        left to the caller; used to control coefficient growth."""
        if not self.terms:
            return self
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, abs(c.numerator))
            den = den * c.denominator // gcd(den, c.denominator)
        scale = Fraction(den, num)
        return MultiPoly(self.n, {m: c * scale for m, c in self.terms.items()})

    def monic(self, order):
        _, c = self.lead(order)
        if c == 1:
            return self
        inv = 1 / c
        return MultiPoly(self.n, {m: v * inv for m, v in self.terms.items()})

    def total_degree(self):
        return max((sum(m) for m in self.terms), default=-1)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, reverse=True):
            c = self.terms[m]
            mono = "*".join(f"e{i + 1}" + (f"^{e}" if e > 1 else "")
                            for i, e in enumerate(m) if e)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


@dataclass(frozen=True)
class TermOrder:
    """Monomial order keyed by an element ordering sigma.

    sigma lists the ground elements from sigma-smallest to sigma-largest;
    variable importance is the reverse, so the leading monomial of a circuit
    polynomial drops the sigma-minimal member.  Kinds: lex, grlex, grevlex.
    """

    kind: str
    sigma: tuple

    def __post_init__(self):
        if self.kind not in ("lex", "grlex", "grevlex"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        object.__setattr__(self, "sigma", tuple(self.sigma))
        if sorted(self.sigma) != list(range(1, len(self.sigma) + 1)):
            raise ValueError("sigma must be a permutation of 1..n")

    @property
    def priority(self):
        """Variable indices (0-based) from most to least important."""
        return tuple(e - 1 for e in reversed(self.sigma))

    def key(self, exps):
        """Sort key; larger key means larger monomial."""
        pri = self.priority
        if self.kind == "lex":
            return tuple(exps[p] for p in pri)
        deg = sum(exps)
        if self.kind == "grlex":
            return (deg,) + tuple(exps[p] for p in pri)
        return (deg,) + tuple(-exps[p] for p in reversed(pri))

    def label(self):
        return f"{self.kind}:{','.join(map(str, self.sigma))}"


def lex_order(sigma):
    return TermOrder("lex", sigma)


def sampled_lex_orders(n, count, seed=0):
    """Deterministic sample of distinct lex orders on n elements."""
    rng = random.Random(seed)
    limit = 1
    for i in range(2, n + 1):
        limit *= i
    count = min(count, limit)
    seen = set()
    out = []
    while len(out) < count:
        sigma = tuple(rng.sample(range(1, n + 1), n))
        if sigma in seen:
            continue
        seen.add(sigma)
        out.append(lex_order(sigma))
    return out


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def reduce_poly(f, basis, order):
    """Remainder of f on division by `basis`; no remainder term is divisible
    by any basis leading monomial."""
    leads = [(g, *g.lead(order)) for g in basis if g]
    work = dict(f.terms)
    remainder = {}
    key = order.key
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        for g, lm, lc in leads:
            if _divides(lm, m):
                shift = tuple(a - b for a, b in zip(m, lm))
                factor = c / lc
                for gm, gc in g.terms.items():
                    t = tuple(a + b for a, b in zip(gm, shift))
                    if t == m:
                        continue
                    s = work.get(t, Fraction(0)) - factor * gc
                    if s:
                        work[t] = s
                    else:
                        work.pop(t, None)
                break
        else:
            remainder[m] = c
    return MultiPoly(f.n, remainder)


def s_polynomial(f, g, order):
    fm, fc = f.lead(order)
    gm, gc = g.lead(order)
    lcm = tuple(max(a, b) for a, b in zip(fm, gm))
    return (f.mul_term(tuple(a - b for a, b in zip(lcm, fm)), 1 / fc)
            - g.mul_term(tuple(a - b for a, b in zip(lcm, gm)), 1 / gc))


def buchberger_trace(gens, order):
    """Run the pair loop and report (basis, number of new elements).

    The coprime-leading-term criterion skips pairs whose S-polynomial is
    guaranteed to reduce to zero.
    """
    basis = [g.primitive() for g in gens if g]
    basis.sort(key=lambda g: order.key(g.lead(order)[0]))
    pairs = [(i, j) for j in range(len(basis)) for i in range(j)]
    added = 0
    while pairs:
        i, j = pairs.pop(0)
        fm, _ = basis[i].lead(order)
        gm, _ = basis[j].lead(order)
        if all(a == 0 or b == 0 for a, b in zip(fm, gm)):
            continue
        r = reduce_poly(s_polynomial(basis[i], basis[j], order), basis, order)
        if r:
            r = r.primitive()
            pairs.extend((t, len(basis)) for t in range(len(basis)))
            basis.append(r)
            added += 1
    return basis, added


def buchberger(gens, order):
    """Reduced monic Groebner basis of the ideal generated by `gens`."""
    basis, _ = buchberger_trace(gens, order)
    # minimalize: drop elements whose lead is divisible by another kept lead;
    # for equal leads keep the earliest
    leads = [g.lead(order)[0] for g in basis]
    keep = []
    for i in range(len(basis)):
        redundant = any(
            j != i and _divides(leads[j], leads[i])
            and (leads[j] != leads[i] or j < i)
            for j in range(len(basis)))
        if not redundant:
            keep.append(i)
    minimal = [basis[i] for i in keep]
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        reduced.append(reduce_poly(g, others, order).monic(order))
    reduced.sort(key=lambda g: order.key(g.lead(order)[0]))
    return reduced


def is_groebner_basis(basis, order):
    """Self-certification: every S-polynomial reduces to zero."""
    for i in range(len(basis)):
        for j in range(i):
            if reduce_poly(s_polynomial(basis[i], basis[j], order), basis, order):
                return False
    return True


class MonomialIdeal:
    """Monomial ideal held by its minimal generators (exponent tuples)."""

    __slots__ = ("n", "gens")

    def __init__(self, n, generators):
        gens = sorted(set(tuple(g) for g in generators))
        minimal = []
        for g in gens:
            if not any(h != g and _divides(h, g) for h in gens):
                minimal.append(g)
        self.n = n
        self.gens = tuple(sorted(minimal))

    def __eq__(self, other):
        return (isinstance(other, MonomialIdeal) and self.n == other.n
                and self.gens == other.gens)

    def __hash__(self):
        return hash((self.n, self.gens))

    def contains_monomial(self, exps):
        return any(_divides(g, exps) for g in self.gens)

    def colon(self, exps):
        """(I : m) for a monomial m, again minimalized."""
        return MonomialIdeal(self.n, [
            tuple(max(a - b, 0) for a, b in zip(g, exps)) for g in self.gens])

    def without(self, g):
        return MonomialIdeal(self.n, [h for h in self.gens if h != g])

    def __repr__(self):
        if not self.gens:
            return "MonomialIdeal(<0>)"
        monos = ["*".join(f"e{i + 1}" + (f"^{e}" if e > 1 else "")
                          for i, e in enumerate(g) if e) or "1"
                 for g in self.gens]
        return f"MonomialIdeal(<{', '.join(monos)}>)"


def initial_ideal(basis, order, n=None):
    """Minimal generators are the leading monomials of the basis."""
    if n is None:
        if not basis:
            raise ValueError("empty basis needs an explicit variable count")
        n = basis[0].n
    return MonomialIdeal(n, [g.lead(order)[0] for g in basis if g])


def sr_ideal(complex_):
    """Ideal of the minimal non-faces of a simplicial complex."""
    n = complex_.ground
    gens = []
    found = []
    for size in range(1, complex_.dim + 3):
        for combo in combinations(range(1, n + 1), size):
            if any(set(prev) <= set(combo) for prev in found):
                continue
            if not complex_.contains(combo):
                found.append(combo)
                gens.append(tuple(1 if i + 1 in combo else 0 for i in range(n)))
    return MonomialIdeal(n, gens)


@dataclass(frozen=True)
class HilbertSeries:
    """Series of a monomial quotient: numerator over (1 - q)^n_vars."""

    numerator: UniPoly
    n_vars: int

    def polynomial(self):
        """The series as a plain polynomial; only finite quotients have one."""
        out = self.numerator
        for _ in range(self.n_vars):
            out = out.divexact(UniPoly((1, -1)))
        return out

    def is_finite(self):
        try:
            self.polynomial()
            return True
        except ValueError:
            return False


def hilbert_numerator(ideal):
    """Numerator of the Hilbert series of R/I over (1-q)^n.

    Splitting recursion: adjoining a generator m to J subtracts
    q^(deg m) times the numerator of (J : m).
    """
    memo = {}

    def rec(gens):
        if not gens:
            return UniPoly.one()
        if any(not any(g) for g in gens):
            return UniPoly.zero()
        key = gens
        hit = memo.get(key)
        if hit is not None:
            return hit
        ideal_ = MonomialIdeal(ideal.n, gens)
        g = max(ideal_.gens, key=lambda m: (sum(m), m))
        rest = ideal_.without(g)
        colon = rest.colon(g)
        out = rec(rest.gens) - UniPoly.monomial(sum(g)) * rec(colon.gens)
        memo[key] = out
        return out

    return rec(ideal.gens)


def hilbert_series_quotient(ideal, n):
    """Exact Hilbert series of k[e_1..e_n] / I for a monomial ideal I."""
    if ideal.n != n:
        ideal = MonomialIdeal(n, ideal.gens)
    return HilbertSeries(hilbert_numerator(ideal), n)


def krull_dimension(ideal, n):
    """Max size of a variable set meeting no generator's full support."""
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in ideal.gens]
    if any(not s for s in supports):
        return -1
    for size in range(n, -1, -1):
        for combo in combinations(range(n), size):
            chosen = set(combo)
            if all(not s <= chosen for s in supports):
                return size
    return 0


# -- arrangement-level constructions ----------------------------------------


def circuit_polynomial(arrangement, circuit):
    """Signed squarefree generator attached to one circuit.

    One term per member: the sign of that member's dependency coefficient
    times the product of the other members' variables.
    """
    n = arrangement.n
    total = MultiPoly.zero(n)
    for i, coeff in zip(circuit.members, circuit.coeffs):
        exps = tuple(1 if (j + 1 in circuit.members and j + 1 != i) else 0
                     for j in range(n))
        sign = 1 if coeff > 0 else -1
        total = total + MultiPoly.monomial(n, exps, sign)
    return total


def circuit_ideal_generators(arrangement):
    return [circuit_polynomial(arrangement, c) for c in arrangement.circuits()]


def ambient_linear_forms(arrangement):
    """One linear form per ambient coordinate: sum_i (a_i)_j e_i."""
    n, d = arrangement.n, arrangement.d
    forms = []
    for j in range(d):
        terms = {}
        for i in range(n):
            c = arrangement.columns[i][j]
            if c:
                exps = tuple(1 if t == i else 0 for t in range(n))
                terms[exps] = Fraction(c)
        forms.append(MultiPoly(n, terms))
    return forms


def r0_hilbert(arrangement, order=None):
    """Hilbert series of the circuit ring cut down by the ambient forms.

    Unimodular input is the supported regime (the series then equals the
    broken-circuit h-polynomial); other inputs warn and are still computed.
    """
    if not arrangement.is_central():
        raise ValueError("central arrangement required")
    if not arrangement.classify().is_unimodular:
        warnings.warn("arrangement is not unimodular; series may not match "
                      "the broken-circuit h-polynomial", stacklevel=2)
    if order is None:
        order = TermOrder("grevlex", range(1, arrangement.n + 1))
    gens = circuit_ideal_generators(arrangement) + ambient_linear_forms(arrangement)
    basis = buchberger(gens, order)
    init = initial_ideal(basis, order, n=arrangement.n)
    return hilbert_series_quotient(init, arrangement.n).polynomial()


def stratum_ring_hilbert(arrangement, order=None):
    """Hilbert series of the circuit ring modulo all squares e_i^2."""
    if not arrangement.is_central():
        raise ValueError("central arrangement required")
    if not arrangement.classify().is_unimodular:
        warnings.warn("arrangement is not unimodular; interpretation of the "
                      "square-free quotient weakens", stacklevel=2)
    n = arrangement.n
    if order is None:
        order = TermOrder("grevlex", range(1, n + 1))
    squares = [MultiPoly.monomial(n, tuple(2 if j == i else 0 for j in range(n)))
               for i in range(n)]
    basis = buchberger(circuit_ideal_generators(arrangement) + squares, order)
    init = initial_ideal(basis, order, n=n)
    return hilbert_series_quotient(init, n).polynomial()


@dataclass(frozen=True)
class UgbOrderResult:
    order_label: str
    new_elements: int
    initial_matches_broken_circuits: bool

    @property
    def passed(self):
        return self.new_elements == 0 and self.initial_matches_broken_circuits


@dataclass(frozen=True)
class UgbReport:
    results: tuple

    @property
    def passed(self):
        return all(r.passed for r in self.results)


def verify_ugb(arrangement, orders):
    """Check the universal-basis claim order by order.

    For each order the circuit generators are fed to the pair loop; passing
    means no new element appears and the initial ideal is exactly the
    broken-circuit non-face ideal for that order's sigma.
    """
    if not arrangement.is_central():
        raise ValueError("central arrangement required")
    gens = circuit_ideal_generators(arrangement)
    results = []
    for order in orders:
        basis, added = buchberger_trace(gens, order)
        init = initial_ideal(basis, order, n=arrangement.n)
        bc = sr_ideal(broken_circuit_complex(arrangement, order.sigma))
        results.append(UgbOrderResult(order.label(), added, init == bc))
    return UgbReport(tuple(results))


def restriction_map_check(arrangement, flat):
    """Verify the coordinate projection onto a flat respects circuit generators.

    Circuits inside the flat must map to (plus or minus) circuit generators
    of the localization; all other circuits must die, which requires at
    least two members outside the flat.
    """
    loc = arrangement.localization(flat)
    f = arrangement.closure(flat)
    n = arrangement.n
    new_index = {parent: j + 1 for j, parent in enumerate(loc.parent_map)}
    loc_polys = {c.members: circuit_polynomial(loc, c) for c in loc.circuits()}
    for c in arrangement.circuits():
        inside = set(c.members) <= set(f.members)
        poly = circuit_polynomial(arrangement, c)
        if inside:
            mapped = {}
            for exps, coeff in poly.terms.items():
                new_exps = [0] * loc.n
                for i in range(n):
                    if exps[i]:
                        new_exps[new_index[i + 1] - 1] = exps[i]
                mapped[tuple(new_exps)] = coeff
            image = MultiPoly(loc.n, mapped)
            target_members = tuple(sorted(new_index[i] for i in c.members))
            target = loc_polys.get(target_members)
            if target is None:
                return False
            if image != target and image != -target:
                return False
        else:
            outside = [i for i in c.members if i not in f.members]
            if len(outside) < 2:
                return False
            killed = all(
                any(exps[i - 1] for i in outside) for exps in poly.terms)
            if not killed:
                return False
    return True


@dataclass(frozen=True)
class LsopResult:
    series: UniPoly
    seed: int
    forms: tuple


def lsop_hilbert(arrangement, seed=0, max_attempts=32):
    """Hilbert series of the face ring cut by a generic linear system.

    Coefficients are drawn deterministically from the seed and re-drawn
    until the quotient is finite-dimensional; the seed that worked is
    reported for reproducibility.
    """
    n, d = arrangement.n, arrangement.d
    base = sr_ideal(matroid_complex(arrangement))
    base_polys = [MultiPoly.monomial(n, g) for g in base.gens]
    order = TermOrder("grevlex", range(1, n + 1))
    attempt_seed = seed
    for _ in range(max_attempts):
        rng = random.Random(attempt_seed)
        forms = []
        for _ in range(d):
            coeffs = [rng.randint(1, 64) for _ in range(n)]
            forms.append(MultiPoly(n, {
                tuple(1 if t == i else 0 for t in range(n)): Fraction(c)
                for i, c in enumerate(coeffs)}))
        basis = buchberger(base_polys + forms, order)
        series = hilbert_series_quotient(initial_ideal(basis, order, n=n), n)
        if series.is_finite():
            return LsopResult(series.polynomial(), attempt_seed,
                              tuple(tuple(sorted(f.terms.items())) for f in forms))
        attempt_seed += 1
    raise ArithmeticError("no finite quotient found; parameters not generic")

"""Finite-field point counts and their closed-form cross-checks.

Counts are taken over prime fields only; a polynomial identity is pinned
down by enough prime evaluations, so extension fields add nothing at this
scale.  Admissibility of a prime means the column matroid survives
reduction mod p (and, where a moment-map level is involved, that the level
stays regular mod p); at inadmissible primes the oracles raise
InadmissiblePrimeError, which verification suites downgrade to warnings.

The moment-map fiber count groups the z-space by support: the rank and the
column space of B.diag(z) depend only on which coordinates vanish, which
turns a q^n scan into a 2^n scan with exact weights.  The generic-stratum
count likewise groups (z, w) by support pattern; the closed-orbit test per
pattern is a strictly-positive-dependency question on the columns of the
kernel matrix, decided by exact rational linear programming.
"""

from dataclasses import dataclass
from itertools import combinations, product

from .arrangement import Arrangement
from .complexes import matroid_complex
from .intlinalg import (
    is_prime,
    rank_mod_p,
    solve_info_mod_p,
    solve_rational,
    strictly_positive_dependency_exists,
    transpose,
)
from .invariants import characteristic_polynomial, h_from_tutte, num_regions

ENUMERATION_CAP = 100_000_000
STRATUM_GROUND_CAP = 5


class InadmissiblePrimeError(ValueError):
    """The requested prime garbles the combinatorics; counts would be off."""


class UnsupportedError(RuntimeError):
    """The input is outside the documented operating range."""


@dataclass(frozen=True)
class CountReport:
    q: int
    raw_count: int
    normalized: int
    formula_value: int
    match: bool

    def to_dict(self):
        return {
            "q": self.q,
            "raw_count": self.raw_count,
            "normalized": self.normalized,
            "formula_value": self.formula_value,
            "match": self.match,
        }


def _require_prime(q):
    if not is_prime(q):
        raise ValueError(f"q = {q} is not prime; only prime fields are supported")


def _require_central(arrangement):
    if not arrangement.is_central():
        raise ValueError("point counts are defined for central arrangements")


def matroid_preserved_mod_p(arrangement, p):
    """Whether every small subset keeps its rational rank over F_p."""
    _require_prime(p)
    return _offending_subset(arrangement, p) is None


def _offending_subset(arrangement, p):
    """A smallest subset whose rank drops mod p, or None."""
    for size in range(1, arrangement.d + 1):
        for combo in combinations(range(arrangement.n), size):
            cols = [arrangement.columns[i] for i in combo]
            mask = 0
            for i in combo:
                mask |= 1 << i
            if rank_mod_p(cols, p) != arrangement.rank_mask(mask):
                return tuple(i + 1 for i in combo)
    return None


def _require_admissible(arrangement, p):
    bad = _offending_subset(arrangement, p)
    if bad is not None:
        raise InadmissiblePrimeError(
            f"p = {p} drops the rank of {set(bad)}; counts are unreliable")


def admissible_primes(arrangement, count, start=2):
    """The first `count` primes at which the matroid survives reduction."""
    out = []
    p = start
    while len(out) < count:
        if is_prime(p) and matroid_preserved_mod_p(arrangement, p):
            out.append(p)
        p += 1
    return out


def count_complement(arrangement, q):
    """Points of F_q^d avoiding every hyperplane, by exhaustive scan."""
    _require_central(arrangement)
    _require_prime(q)
    _require_admissible(arrangement, q)
    d = arrangement.d
    if q ** d > ENUMERATION_CAP:
        raise UnsupportedError("complement scan too large")
    cols = [[v % q for v in c] for c in arrangement.columns]
    count = 0
    for point in product(range(q), repeat=d):
        if all(sum(a[r] * point[r] for r in range(d)) % q for a in cols):
            count += 1
    return count


def count_locally_free(arrangement, q):
    """Points z of F_q^n whose zero coordinate set is independent."""
    _require_central(arrangement)
    _require_prime(q)
    _require_admissible(arrangement, q)
    n = arrangement.n
    if q ** n > ENUMERATION_CAP:
        raise UnsupportedError("coordinate-space scan too large")
    count = 0
    for z in product(range(q), repeat=n):
        mask = 0
        for i, zi in enumerate(z):
            if not zi:
                mask |= 1 << i
        if arrangement.rank_mask(mask) == mask.bit_count():
            count += 1
    return count


def locally_free_formula(arrangement, q):
    """sum over independent sets of (q-1)^(n - size), via the f-vector."""
    f = matroid_complex(arrangement).f_vector()
    n = arrangement.n
    return sum(fi * (q - 1) ** (n - i) for i, fi in enumerate(f))


def count_moment_fiber(arrangement, lam, q):
    """Points (z, w) with B (z*w) = lam, counted by per-support linear algebra.

    For fixed z the solutions in w form an affine space of dimension
    n - rank(B.diag(z)); both the rank and the consistency test only see the
    support of z, so supports are enumerated instead of vectors.
    """
    _require_prime(q)
    b = arrangement.kernel_basis()
    k = arrangement.k
    lam = tuple(int(v) for v in lam)
    if len(lam) != k:
        raise ValueError(f"level vector must have length k = {k}")
    n = arrangement.n
    total = 0
    for smask in range(1 << n):
        cols = [i for i in range(n) if smask >> i & 1]
        sub = [[row[i] for i in cols] for row in b]
        rank, consistent = solve_info_mod_p(sub, lam, q)
        if consistent:
            total += (q - 1) ** len(cols) * q ** (n - rank)
    return total


def _circuit_pairings(arrangement, lam):
    """Integer pairing of `lam` with each circuit's kernel coordinates."""
    b = arrangement.kernel_basis()
    out = []
    for c in arrangement.circuits():
        coeffs = solve_rational(transpose(b), c.full_vector(arrangement.n))
        if coeffs is None or any(x.denominator != 1 for x in coeffs):
            raise ArithmeticError("circuit vector outside the kernel lattice")
        out.append((c, sum(int(x) * l for x, l in zip(coeffs, lam))))
    return out


def is_regular_value(arrangement, lam):
    """Whether the level misses every positive-dimensional stabilizer.

    Each minimal dependency spans the smallest coordinate-supported
    subspace of the kernel, so regularity amounts to a nonzero pairing with
    every circuit.
    """
    lam = tuple(int(v) for v in lam)
    if len(lam) != arrangement.k:
        raise ValueError(f"level vector must have length k = {arrangement.k}")
    return all(pair for _, pair in _circuit_pairings(arrangement, lam))


def find_regular_lambda(arrangement, q):
    """Smallest level in [0, q)^k that stays regular mod q, or None.

    Any lift of a mod-q regular level is regular over the integers, so the
    returned tuple can be used directly.
    """
    _require_prime(q)
    pairings = [_circuit_pairings(arrangement, unit)
                for unit in _unit_levels(arrangement)]
    k = arrangement.k
    circuits = arrangement.circuits()
    for lam in product(range(q), repeat=k):
        ok = True
        for ci in range(len(circuits)):
            total = sum(lam[j] * pairings[j][ci][1] for j in range(k))
            if total % q == 0:
                ok = False
                break
        if ok:
            return lam
    return None


def _unit_levels(arrangement):
    k = arrangement.k
    return [tuple(1 if j == i else 0 for j in range(k)) for i in range(k)]


def smooth_count_formula(arrangement, q):
    """q^(2d) h(1/q), cleared of denominators."""
    h, _, _ = h_from_tutte(arrangement)
    return h.reversed_at(2 * arrangement.d)(q)


def count_smooth_points(arrangement, lam, q):
    """Quotient point count of the moment fiber at a regular level.

    Raw fiber points divide exactly by (q-1)^k when the level stays regular
    mod q; an inexact division there would be an invariant breach.  Levels
    that degenerate mod q raise InadmissiblePrimeError instead.
    """
    _require_central(arrangement)
    _require_prime(q)
    if not arrangement.classify().kernel_torus_connected:
        raise UnsupportedError("kernel torus is disconnected; counts unsupported")
    lam = tuple(int(v) for v in lam)
    if not is_regular_value(arrangement, lam):
        raise ValueError("level vector is not a regular value")
    _require_admissible(arrangement, q)
    if any(pair % q == 0 for _, pair in _circuit_pairings(arrangement, lam)):
        raise InadmissiblePrimeError(
            f"level {lam} degenerates mod {q}; counts are unreliable")
    raw = count_moment_fiber(arrangement, lam, q)
    torus = (q - 1) ** arrangement.k
    if raw % torus:
        raise ArithmeticError("fiber count not divisible by the torus size")
    normalized = raw // torus
    formula = smooth_count_formula(arrangement, q)
    return CountReport(q, raw, normalized, formula, normalized == formula)


def orbit_is_closed(kernel_rows, z, w):
    """Whether the kernel-torus orbit through (z, w) is closed.

    The weights acting on the nonzero coordinates are the matching columns
    of the kernel matrix, positively for z and negatively for w; the orbit
    is closed exactly when those weights admit a strictly positive rational
    dependency (an empty weight set is a fixed point, hence closed).
    """
    kernel_rows = [tuple(r) for r in kernel_rows]
    ncols = len(z)
    weights = []
    for i in range(ncols):
        col = tuple(row[i] for row in kernel_rows)
        if z[i]:
            weights.append(col)
        if w[i]:
            weights.append(tuple(-v for v in col))
    return strictly_positive_dependency_exists(weights)


_CLOSED_PATTERN_CACHE = {}


def _pattern_closed(b, zmask, wmask, n):
    key = (b, zmask, wmask)
    hit = _CLOSED_PATTERN_CACHE.get(key)
    if hit is None:
        z = [1 if zmask >> i & 1 else 0 for i in range(n)]
        w = [1 if wmask >> i & 1 else 0 for i in range(n)]
        hit = orbit_is_closed(b, z, w)
        _CLOSED_PATTERN_CACHE[key] = hit
    return hit


def stratum_count_formula(arrangement, q):
    """(q-1)^d times the flat sum of complement counts weighted by regions."""
    total = 0
    for f in arrangement.flats():
        chi = characteristic_polynomial(arrangement.restriction(f))(q)
        total += chi * num_regions(arrangement.localization(f))
    return (q - 1) ** arrangement.d * total


def count_generic_stratum(arrangement, q):
    """Closed free orbits on the locus with no doubly-zero coordinate pair.

    Pairs (z, w) are grouped by support pattern; for each closed pattern the
    zero-moment vectors with exact support are counted by inclusion and
    exclusion on kernel-submatrix ranks.  The result is exactly divisible by
    the torus size.
    """
    _require_central(arrangement)
    _require_prime(q)
    if arrangement.n > STRATUM_GROUND_CAP:
        raise UnsupportedError(
            f"generic-stratum counts are capped at n <= {STRATUM_GROUND_CAP}")
    if not arrangement.classify().kernel_torus_connected:
        raise UnsupportedError("kernel torus is disconnected; counts unsupported")
    _require_admissible(arrangement, q)
    b = arrangement.kernel_basis()
    n = arrangement.n
    full = (1 << n) - 1
    rank_by_mask = {}
    for mask in range(1 << n):
        cols = [i for i in range(n) if mask >> i & 1]
        rank_by_mask[mask] = rank_mod_p([[row[i] for i in cols] for row in b], q)
    # zero-moment vectors with support exactly T, by inclusion-exclusion
    exact = {}
    for tmask in range(1 << n):
        total = 0
        sub = tmask
        while True:
            size = sub.bit_count()
            sign = -1 if (tmask.bit_count() - size) & 1 else 1
            total += sign * q ** (size - rank_by_mask[sub])
            if sub == 0:
                break
            sub = (sub - 1) & tmask
        exact[tmask] = total
    raw = 0
    for zmask in range(1 << n):
        need = full ^ zmask
        for wmask in range(1 << n):
            if wmask & need != need:
                continue
            weight = exact[zmask & wmask]
            if not weight:
                continue
            if not _pattern_closed(b, zmask, wmask, n):
                continue
            exponent = zmask.bit_count() + wmask.bit_count() - (zmask & wmask).bit_count()
            raw += weight * (q - 1) ** exponent
    torus = (q - 1) ** arrangement.k
    if raw % torus:
        raise ArithmeticError("stratum count not divisible by the torus size")
    normalized = raw // torus
    formula = stratum_count_formula(arrangement, q)
    return CountReport(q, raw, normalized, formula, normalized == formula)


def count_hypertoric(arrangement, q):
    """Points of the whole cone: stratum counts summed over all flats."""
    _require_central(arrangement)
    total = 0
    for f in arrangement.flats():
        total += count_generic_stratum(arrangement.restriction(f), q).normalized
    return total


def hypertoric_formula(arrangement, q):
    """Flat sum of the per-stratum closed forms."""
    return sum(stratum_count_formula(arrangement.restriction(f), q)
               for f in arrangement.flats())

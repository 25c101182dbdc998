"""Polynomial invariants: characteristic polynomial, regions, Tutte algebra.

The Tutte polynomial is computed twice by independent routes: a memoized
deletion/contraction recursion (the workhorse) and a corank-nullity sum over
all subsets (a brute-force cross-check).  The memo key canonicalizes the
column multiset by a row Hermite form followed by a column sort, which
identifies minors that agree up to an integral change of basis and a
relabeling; both moves preserve the Tutte polynomial.

The memo is a module-level dict keyed by canonical form; every stored value
is determined by its key, so concurrent readers can at worst race to store
identical entries and results are independent of interleaving.
"""

from .arrangement import Arrangement
from .intlinalg import apply_map, lattice_quotient_map, mat_rank, row_hnf
from .polynomials import BiPoly, UniPoly

_TUTTE_MEMO = {}


def characteristic_polynomial(arrangement):
    """chi(q) = sum over flats of mu(F) q^(corank F); central input only."""
    if not arrangement.is_central():
        raise ValueError("characteristic polynomial needs a central arrangement")
    lattice = arrangement.flats()
    poly = UniPoly()
    for f in lattice:
        poly = poly + UniPoly.monomial(f.corank, lattice.moebius_value(f))
    return poly


def num_regions(arrangement):
    """Number of chambers of the real picture, as a Moebius evaluation."""
    chi = characteristic_polynomial(arrangement)
    r = (-1) ** arrangement.d * chi(-1)
    lattice = arrangement.flats()
    whitney = sum(abs(lattice.moebius_value(f)) for f in lattice)
    if r != whitney:
        raise ArithmeticError("region count disagrees with unsigned Moebius sum")
    return r


def _canonical_key(cols, d):
    rows = [[c[r] for c in cols] for r in range(d)]
    h, _ = row_hnf(rows, len(cols))
    nonzero = [row for row in h if any(row)]
    return tuple(sorted(zip(*nonzero))) if nonzero else (len(cols),)


def _tutte_columns(cols, d):
    """Deletion/contraction on a column multiset; loops allowed mid-recursion."""
    loops = sum(1 for c in cols if not any(c))
    core = tuple(c for c in cols if any(c))
    factor = BiPoly.monomial(0, loops) if loops else None
    if not core:
        base = BiPoly.one()
    else:
        key = _canonical_key(core, d)
        base = _TUTTE_MEMO.get(key)
        if base is None:
            r = mat_rank(core)
            ordinary = next(
                (i for i in range(len(core))
                 if mat_rank(core[:i] + core[i + 1:]) == r), None)
            if ordinary is None:
                base = BiPoly.monomial(len(core), 0)
            else:
                rest = core[:ordinary] + core[ordinary + 1:]
                quot = lattice_quotient_map([core[ordinary]], d)
                contracted = tuple(apply_map(quot, c) for c in rest)
                base = (_tutte_columns(rest, d)
                        + _tutte_columns(contracted, d - 1))
            _TUTTE_MEMO[key] = base
    return base * factor if factor else base


def tutte(arrangement):
    """Tutte polynomial of the column matroid, by deletion/contraction."""
    return _tutte_columns(arrangement.columns, arrangement.d)


def tutte_whitney(arrangement):
    """Corank-nullity expansion over all 2^n subsets; independent oracle."""
    n, d = arrangement.n, arrangement.d
    xm1 = BiPoly({(1, 0): 1, (0, 0): -1})
    ym1 = BiPoly({(0, 1): 1, (0, 0): -1})
    xpow = [xm1 ** a for a in range(d + 1)]
    ypow = [ym1 ** b for b in range(n + 1)]
    total = BiPoly()
    for mask in range(1 << n):
        r = arrangement.rank_mask(mask)
        total = total + xpow[d - r] * ypow[mask.bit_count() - r]
    return total


def h_from_tutte(arrangement):
    """(h, h_broken, top h-number) as Tutte specializations.

    h(q) = q^d T(1/q, 1); the broken variant sets y = 0 first; the top
    h-number is T(0, 1).
    """
    t = tutte(arrangement)
    d = arrangement.d
    h = [0] * (d + 1)
    h_br = [0] * (d + 1)
    h_top = 0
    for (i, j), c in t.terms.items():
        h[d - i] += c
        if j == 0:
            h_br[d - i] += c
        if i == 0:
            h_top += c
    return UniPoly(h), UniPoly(h_br), h_top


def h_br_moebius(arrangement):
    """Broken-circuit h-polynomial straight from Moebius values."""
    if not arrangement.is_central():
        raise ValueError("Moebius form needs a central arrangement")
    lattice = arrangement.flats()
    d = arrangement.d
    qm1 = UniPoly((-1, 1))
    total = UniPoly()
    for f in lattice:
        total = total + UniPoly.monomial(f.rank, lattice.moebius_value(f)) * qm1 ** f.corank
    return total * ((-1) ** d)


def number_of_bases(arrangement):
    """T(1, 1), checked directly by rank counting."""
    return tutte(arrangement)(1, 1)


def krs_residual(arrangement):
    """T(x, y) minus the flat convolution of its one-variable slices.

    The convolution multiplies the y=0 slice of each restriction with the
    x=0 slice of the matching localization; the contract is that the
    residual vanishes identically.
    """
    if not arrangement.is_central():
        raise ValueError("convolution residual needs a central arrangement")
    total = BiPoly()
    for f in arrangement.flats():
        upper = tutte(arrangement.restriction(f)).at_y_zero()
        lower = tutte(arrangement.localization(f)).at_x_zero()
        total = total + upper * lower
    return tutte(arrangement) - total

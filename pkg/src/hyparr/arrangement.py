"""Integer vector configurations with offsets, and their matroid structure.

An arrangement is a list of n nonzero integer column vectors in Z^d (the
normals) together with n integer offsets.  The ground set is {1..n} and all
subset arguments accept either iterables of 1-based indices or Flat values;
internally subsets live as bitmasks (bit i-1 for element i), which caps the
ground set at 20 elements for the subset-exponential operations.

Everything is immutable after construction and every operation is a pure
function (results are cached in write-once dicts), so concurrent reads are
safe.
"""

import random
from dataclasses import dataclass
from itertools import combinations

from .intlinalg import (
    apply_map,
    lattice_quotient_map,
    mat_det,
    mat_rank,
    right_kernel_basis,
    saturation_basis,
    solve_rational,
)

MAX_GROUND = 20


class NotAFlatError(ValueError):
    """Raised when a subset claimed to be a flat is not closed."""


def as_mask(subset, n):
    """Normalize a subset argument (iterable of 1-based indices, Flat, or
    bitmask int) to a bitmask."""
    if subset is None:
        return (1 << n) - 1
    if isinstance(subset, Flat):
        return subset.mask
    if isinstance(subset, int):
        if subset < 0 or subset >= (1 << n):
            raise ValueError("bitmask out of range")
        return subset
    mask = 0
    for i in subset:
        if not 1 <= i <= n:
            raise ValueError(f"element {i} outside ground set 1..{n}")
        mask |= 1 << (i - 1)
    return mask


def mask_members(mask):
    """Sorted tuple of 1-based members of a bitmask."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@dataclass(frozen=True)
class Flat:
    """A closed subset of the ground set with its rank data."""

    mask: int
    members: tuple
    rank: int
    corank: int

    def __contains__(self, i):
        return bool(self.mask >> (i - 1) & 1) if i >= 1 else False

    def __le__(self, other):
        return self.mask & other.mask == self.mask

    def __repr__(self):
        return f"Flat({set(self.members) if self.members else '{}'}, rk={self.rank})"


@dataclass(frozen=True)
class Circuit:
    """Minimal dependent subset with its primitive dependency coefficients.

    `coeffs` is aligned with `members` and normalized so the entry at the
    smallest member is positive and the gcd of the entries is 1.
    """

    members: tuple
    mask: int
    coeffs: tuple

    def coeff_of(self, i):
        return self.coeffs[self.members.index(i)]

    def full_vector(self, n):
        """The dependency as a length-n vector on the whole ground set."""
        v = [0] * n
        for i, c in zip(self.members, self.coeffs):
            v[i - 1] = c
        return tuple(v)

    def __repr__(self):
        return f"Circuit({set(self.members)}, lambda={self.coeffs})"


class FlatLattice:
    """All flats of an arrangement, ordered by containment, with Moebius data.

    `moebius` maps each flat's mask to mu(empty flat, F).  Two-argument
    values come from `moebius_pair`, which runs the defining recursion on
    the interval [F, G].
    """

    def __init__(self, flats, moebius):
        self.flats = tuple(flats)
        self.moebius = dict(moebius)
        self.by_mask = {f.mask: f for f in self.flats}

    def __iter__(self):
        return iter(self.flats)

    def __len__(self):
        return len(self.flats)

    @property
    def bottom(self):
        return self.flats[0]

    @property
    def top(self):
        return self.flats[-1]

    def contains_mask(self, mask):
        return mask in self.by_mask

    def moebius_value(self, flat):
        return self.moebius[flat.mask if isinstance(flat, Flat) else flat]

    def interval(self, low, high):
        """Flats H with low <= H <= high, in increasing cardinality order."""
        lo = low.mask if isinstance(low, Flat) else low
        hi = high.mask if isinstance(high, Flat) else high
        return [f for f in self.flats
                if f.mask & lo == lo and f.mask & hi == f.mask]

    def moebius_pair(self, low, high):
        """mu(low, high) for flats low <= high."""
        seg = self.interval(low, high)
        if not seg:
            return 0
        mu = {}
        for f in seg:
            mu[f.mask] = 1 if f.mask == seg[0].mask else -sum(
                mu[g.mask] for g in seg
                if g.mask != f.mask and g.mask & f.mask == g.mask)
        hi = high.mask if isinstance(high, Flat) else high
        return mu[hi]

    def __repr__(self):
        return f"FlatLattice({len(self.flats)} flats)"


@dataclass(frozen=True)
class ClassificationFlags:
    is_central: bool
    is_simple: bool
    is_unimodular: bool
    is_coloop_free: bool
    kernel_torus_connected: bool


class Arrangement:
    """n weighted cooriented integer normals in Z^d with integer offsets.

    Columns may repeat (multisets are allowed) and need not be primitive;
    the rational rank of the column matrix must equal d and no column may be
    zero.  `parent_map` records, for minors, which parent element each new
    element came from (1-based).
    """

    __slots__ = ("d", "n", "columns", "offsets", "labels", "parent_map",
                 "_rank_cache", "_flats", "_circuits", "_kernel", "_cache")

    def __init__(self, columns, offsets=None, d=None, labels=None,
                 parent_map=None):
        columns = tuple(tuple(int(v) for v in col) for col in columns)
        n = len(columns)
        if n > MAX_GROUND:
            raise ValueError(f"ground sets are capped at {MAX_GROUND} elements")
        if columns:
            dims = {len(c) for c in columns}
            if len(dims) != 1:
                raise ValueError("columns must all have the same length")
            inferred = dims.pop()
            if d is not None and d != inferred:
                raise ValueError("explicit d disagrees with column length")
            d = inferred
        elif d is None:
            raise ValueError("empty arrangement needs an explicit ambient rank d")
        for idx, col in enumerate(columns):
            if not any(col):
                raise ValueError(f"column {idx + 1} is zero; loops are not allowed")
        if mat_rank(columns) != d:
            raise ValueError("columns must have full rational rank d")
        if offsets is None:
            offsets = (0,) * n
        offsets = tuple(int(r) for r in offsets)
        if len(offsets) != n:
            raise ValueError("offsets length must equal the number of columns")
        if labels is None:
            labels = tuple(str(i + 1) for i in range(n))
        else:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise ValueError("labels length must equal the number of columns")
        self.d = d
        self.n = n
        self.columns = columns
        self.offsets = offsets
        self.labels = labels
        self.parent_map = tuple(parent_map) if parent_map is not None else None
        self._rank_cache = {0: 0}
        self._flats = None
        self._circuits = None
        self._kernel = None
        self._cache = {}

    # -- basic queries -----------------------------------------------------

    @property
    def k(self):
        """Corank n - d of the configuration."""
        return self.n - self.d

    def is_central(self):
        return not any(self.offsets)

    def rank_mask(self, mask):
        """Rank over Q of the columns selected by a bitmask (memoized)."""
        cached = self._rank_cache.get(mask)
        if cached is not None:
            return cached
        cols = [self.columns[i] for i in range(self.n) if mask >> i & 1]
        r = mat_rank(cols)
        self._rank_cache[mask] = r
        return r

    def rank(self, subset):
        """Rank of a subset of the ground set, computed exactly."""
        return self.rank_mask(as_mask(subset, self.n))

    def closure(self, subset):
        """Smallest flat containing the subset."""
        mask = as_mask(subset, self.n)
        r = self.rank_mask(mask)
        closed = mask
        for i in range(self.n):
            if not closed >> i & 1 and self.rank_mask(mask | 1 << i) == r:
                closed |= 1 << i
        return Flat(closed, mask_members(closed), r, self.d - r)

    def is_flat(self, subset):
        mask = as_mask(subset, self.n)
        return self.closure(mask).mask == mask

    def _require_flat(self, subset):
        mask = as_mask(subset, self.n)
        flat = self.closure(mask)
        if flat.mask != mask:
            raise NotAFlatError(f"{set(mask_members(mask))} is not a flat")
        return flat

    def flats(self):
        """The full lattice of flats with one-argument Moebius values."""
        if self._flats is not None:
            return self._flats
        bottom = self.closure(0)
        seen = {bottom.mask: bottom}
        frontier = [bottom]
        while frontier:
            nxt = []
            for f in frontier:
                for i in range(self.n):
                    if f.mask >> i & 1:
                        continue
                    g = self.closure(f.mask | 1 << i)
                    if g.mask not in seen:
                        seen[g.mask] = g
                        nxt.append(g)
            frontier = nxt
        flats = sorted(seen.values(), key=lambda f: (len(f.members), f.mask))
        moebius = {}
        for f in flats:
            below = sum(moebius[g.mask] for g in flats
                        if g.mask != f.mask and g.mask & f.mask == g.mask)
            moebius[f.mask] = 1 if f.mask == bottom.mask else -below
        self._flats = FlatLattice(flats, moebius)
        return self._flats

    def circuits(self):
        """All minimal dependent subsets with normalized dependency vectors."""
        if self._circuits is not None:
            return self._circuits
        found = []
        found_masks = []
        for size in range(2, self.d + 2):
            for combo in combinations(range(self.n), size):
                mask = 0
                for i in combo:
                    mask |= 1 << i
                if any(mask & m == m for m in found_masks):
                    continue
                if self.rank_mask(mask) != size - 1:
                    continue
                if any(self.rank_mask(mask ^ (1 << i)) != size - 1 for i in combo):
                    continue
                cols = [self.columns[i] for i in combo]
                kernel = right_kernel_basis(
                    [[c[r] for c in cols] for r in range(self.d)], size)
                if len(kernel) != 1:
                    raise ArithmeticError("circuit kernel is not one-dimensional")
                lam = list(kernel[0])
                if lam[0] < 0:
                    lam = [-v for v in lam]
                found.append(Circuit(tuple(i + 1 for i in combo), mask, tuple(lam)))
                found_masks.append(mask)
        self._circuits = tuple(found)
        return self._circuits

    def coloops(self, flat):
        """Members of a flat not spanned by the rest of the flat."""
        f = self._require_flat(flat)
        out = []
        for i in f.members:
            if self.rank_mask(f.mask ^ (1 << (i - 1))) < f.rank:
                out.append(i)
        return tuple(out)

    def kernel_basis(self):
        """Rows spanning the saturated integer kernel of the column map."""
        if self._kernel is None:
            rows = [[c[r] for c in self.columns] for r in range(self.d)]
            self._kernel = right_kernel_basis(rows, self.n)
        return self._kernel

    # -- minors ------------------------------------------------------------

    def restriction(self, flat):
        """Images of the non-members in the quotient lattice Z^d / span(flat).

        The quotient coordinates come from a saturated integer kernel, so
        unimodularity is preserved and the result is again offset-free.
        Only central arrangements can be restricted at a nonempty flat.
        """
        f = self._require_flat(flat)
        if f.mask == 0:
            return Arrangement(self.columns, self.offsets, d=self.d,
                               labels=self.labels,
                               parent_map=range(1, self.n + 1))
        if not self.is_central():
            raise ValueError("restriction needs a central arrangement")
        kill = [self.columns[i - 1] for i in f.members]
        q = lattice_quotient_map(kill, self.d)
        keep = [i for i in range(1, self.n + 1) if i not in f.members]
        cols = [apply_map(q, self.columns[i - 1]) for i in keep]
        return Arrangement(cols, d=self.d - f.rank,
                           labels=[self.labels[i - 1] for i in keep],
                           parent_map=keep)

    def localization(self, flat):
        """The members of a flat, rewritten in a basis of their saturated span."""
        f = self._require_flat(flat)
        if f.mask == 0:
            return Arrangement((), d=0, parent_map=())
        span = [self.columns[i - 1] for i in f.members]
        basis = saturation_basis(span, self.d)
        basis_cols = [[b[r] for b in basis] for r in range(self.d)]
        cols = []
        for i in f.members:
            coords = solve_rational(basis_cols, self.columns[i - 1])
            if coords is None or any(c.denominator != 1 for c in coords):
                raise ArithmeticError("column not integral over the saturated span")
            cols.append(tuple(int(c) for c in coords))
        return Arrangement(cols,
                           offsets=[self.offsets[i - 1] for i in f.members],
                           labels=[self.labels[i - 1] for i in f.members],
                           parent_map=f.members)

    def flat_in_minor(self, minor, flat):
        """Translate a flat of self into the corresponding flat of a minor.

        `minor` must carry a parent_map; members of `flat` that survived
        into the minor are collected and closed there.
        """
        if minor.parent_map is None:
            raise ValueError("minor has no parent map")
        members = [j + 1 for j, parent in enumerate(minor.parent_map)
                   if parent in flat.members]
        got = minor.closure(members)
        if got.members != tuple(members):
            raise NotAFlatError("flat does not survive into the minor")
        return got

    # -- classification ----------------------------------------------------

    def classify(self):
        """Structural flags; all checks are exact."""
        central = self.is_central()
        simple = True
        for c in self.circuits():
            rows = [self.columns[i - 1] for i in c.members]
            rhs = [-self.offsets[i - 1] for i in c.members]
            if solve_rational(rows, rhs) is not None:
                simple = False
                break
        unimodular = True
        if self.d:
            for combo in combinations(range(self.n), self.d):
                det = mat_det([self.columns[i] for i in combo])
                if det and abs(det) != 1:
                    unimodular = False
                    break
        full = (1 << self.n) - 1
        coloop_free = all(self.rank_mask(full ^ (1 << i)) == self.d
                          for i in range(self.n))
        connected = self._kernel_connected()
        return ClassificationFlags(central, simple, unimodular, coloop_free,
                                   connected)

    def _kernel_connected(self):
        # the column lattice has index 1 in Z^d exactly when the HNF pivots
        # are all 1; gcd of the d x d minors equals that index
        if self.d == 0:
            return True
        from .intlinalg import row_hnf
        h, _ = row_hnf(list(self.columns), self.d)
        pivots = []
        for row in h:
            nz = [v for v in row if v]
            if nz:
                pivots.append(nz[0])
        index = 1
        for p in pivots[:self.d]:
            index *= p
        return len(pivots) == self.d and abs(index) == 1

    def generic_offsets(self, seed):
        """Deterministically translated copy whose intersections are generic.

        Offsets are drawn from the seeded generator and re-drawn until the
        classification reports simple; the draw range doubles every 64
        failed attempts.
        """
        if not self.is_central():
            raise ValueError("generic offsets start from a central arrangement")
        rng = random.Random(seed)
        bound = 8 * (self.n + self.d + 1)
        attempt = 0
        while True:
            offsets = tuple(rng.randint(-bound, bound) for _ in range(self.n))
            candidate = Arrangement(self.columns, offsets, d=self.d,
                                    labels=self.labels)
            if candidate.classify().is_simple:
                return candidate
            attempt += 1
            if attempt % 64 == 0:
                bound *= 2

    # -- serialization and identity -----------------------------------------

    def to_dict(self):
        out = {
            "d": self.d,
            "n": self.n,
            "columns": [list(c) for c in self.columns],
            "offsets": list(self.offsets),
        }
        if self.labels != tuple(str(i + 1) for i in range(self.n)):
            out["labels"] = list(self.labels)
        return out

    @classmethod
    def from_dict(cls, data):
        if not isinstance(data, dict):
            raise ValueError("arrangement JSON must be an object")
        for key in ("d", "n", "columns"):
            if key not in data:
                raise ValueError(f"arrangement JSON is missing '{key}'")
        columns = data["columns"]
        if not isinstance(columns, list) or any(
                not isinstance(c, list) for c in columns):
            raise ValueError("'columns' must be a list of integer vectors")
        if len(columns) != data["n"]:
            raise ValueError("'n' disagrees with the number of columns")
        arr = cls(columns, offsets=data.get("offsets"), d=data["d"],
                  labels=data.get("labels"))
        return arr

    def __eq__(self, other):
        return (isinstance(other, Arrangement)
                and self.d == other.d
                and self.columns == other.columns
                and self.offsets == other.offsets)

    def __hash__(self):
        return hash((self.d, self.columns, self.offsets))

    def __repr__(self):
        kind = "central" if self.is_central() else "affine"
        return f"Arrangement(n={self.n}, d={self.d}, {kind})"

"""Simplicial complexes attached to an arrangement and their f/h data.

Complexes are hereditary families on {1..n} held as a membership predicate
on bitmasks; faces are walked by a pruned depth-first search, so costs scale
with the number of faces rather than 2^n.  Facets are materialized only on
demand.
"""

from dataclasses import dataclass
from math import comb

from .arrangement import as_mask, mask_members
from .polynomials import UniPoly


class SimplicialComplex:
    """Downward-closed face family on the ground set {1..n}."""

    __slots__ = ("ground", "_is_face_mask", "_dim", "_fvector", "_facets")

    def __init__(self, ground, is_face_mask, dim=None):
        self.ground = ground
        self._is_face_mask = is_face_mask
        self._dim = dim
        self._fvector = None
        self._facets = None
        if not is_face_mask(0):
            raise ValueError("the empty set must be a face")

    def contains(self, subset):
        return self._is_face_mask(as_mask(subset, self.ground))

    def _faces(self):
        is_face = self._is_face_mask
        n = self.ground

        def rec(mask, start):
            yield mask
            for i in range(start, n):
                child = mask | 1 << i
                if is_face(child):
                    yield from rec(child, i + 1)

        yield from rec(0, 0)

    @property
    def dim(self):
        """Max face cardinality minus one."""
        if self._dim is None:
            self._dim = max(m.bit_count() for m in self._faces()) - 1
        return self._dim

    def f_vector(self):
        """(f_0, ..., f_{dim+1}) with f_i the number of faces of size i."""
        if self._fvector is None:
            counts = [0] * (self.dim + 2)
            for mask in self._faces():
                counts[mask.bit_count()] += 1
            self._fvector = tuple(counts)
        return self._fvector

    def facets(self):
        """Maximal faces, as sorted member tuples."""
        if self._facets is None:
            out = []
            for mask in self._faces():
                if not any(self._is_face_mask(mask | 1 << i)
                           for i in range(self.ground) if not mask >> i & 1):
                    out.append(mask_members(mask))
            self._facets = tuple(sorted(out, key=lambda t: (len(t), t)))
        return self._facets

    def is_subcomplex_of(self, other):
        return all(other._is_face_mask(m) for m in self._faces())

    def __repr__(self):
        return f"SimplicialComplex(ground={self.ground}, dim={self.dim})"


@dataclass(frozen=True)
class HVector:
    """f-vector, h-vector and h-polynomial of a graded complex."""

    f: tuple
    h: tuple
    poly: UniPoly


def matroid_complex(arrangement):
    """Faces are the subsets whose columns are linearly independent."""
    return SimplicialComplex(
        arrangement.n,
        lambda mask: arrangement.rank_mask(mask) == mask.bit_count(),
        dim=arrangement.d - 1)


def broken_circuit_complex(arrangement, sigma=None):
    """Faces are the subsets containing no broken circuit.

    `sigma` lists the ground elements from smallest to largest in the chosen
    order (default the identity); each circuit broken at its sigma-minimal
    member yields a forbidden set.
    """
    n = arrangement.n
    if sigma is None:
        sigma = tuple(range(1, n + 1))
    else:
        sigma = tuple(sigma)
        if sorted(sigma) != list(range(1, n + 1)):
            raise ValueError("sigma must be a permutation of 1..n")
    position = {e: i for i, e in enumerate(sigma)}
    broken = []
    for c in arrangement.circuits():
        least = min(c.members, key=position.__getitem__)
        broken.append(c.mask ^ (1 << (least - 1)))
    for b in broken:
        if b == 0:
            raise ValueError("loopless required")
    return SimplicialComplex(
        n,
        lambda mask: all(mask & b != b for b in broken),
        dim=arrangement.d - 1)


def f_h(complex_, d):
    """Exact f- and h-vectors of a complex graded in rank d.

    h(q) = sum_i f_i q^i (1-q)^(d-i); both vectors are reported with d+1
    entries.
    """
    counts = complex_.f_vector()
    if len(counts) > d + 1:
        raise ValueError("grading rank is smaller than the maximal face size")
    f = counts + (0,) * (d + 1 - len(counts))
    one_minus_q = UniPoly((1, -1))
    poly = UniPoly()
    for i, fi in enumerate(f):
        if fi:
            poly = poly + UniPoly.monomial(i, fi) * one_minus_q ** (d - i)
    h = tuple(poly.coeff(i) for i in range(d + 1))
    return HVector(f, h, poly)


def f_from_h(h, d):
    """Invert the h-vector back to the f-vector: f_i = sum_j C(d-j, i-j) h_j."""
    return tuple(sum(comb(d - j, i - j) * h[j] for j in range(min(i, len(h) - 1) + 1))
                 for i in range(d + 1))

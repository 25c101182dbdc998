"""Even Poincare series of the smooth model and of the affine cone, plus the
two recursions that tie them together.

The smooth series is the h-polynomial of the independence complex; the
singular (intersection-level) series is the broken-circuit h-polynomial.
`kl_residual` checks the point-count recursion over strata after clearing
the 1/q substitution, and `decomposition_residual` checks the convolution
into local contributions; both are identically zero on valid input.
"""

from dataclasses import dataclass, field

from .arrangement import Arrangement
from .complexes import broken_circuit_complex, f_h, matroid_complex
from .invariants import characteristic_polynomial, num_regions, tutte
from .polynomials import UniPoly


@dataclass(frozen=True)
class PoincareReport:
    """Everything the `betti` surface reports for one arrangement."""

    smooth: UniPoly
    ih: UniPoly
    local_ih: dict = field(default_factory=dict)
    residuals: dict = field(default_factory=dict)

    def all_residuals_zero(self):
        return all(not p for p in self.residuals.values())


def _check_central_loopless(arrangement):
    if not arrangement.is_central():
        raise ValueError("central arrangement required")
    # loops are impossible for valid arrangements (columns are nonzero),
    # but the contract is explicit
    if any(not any(c) for c in arrangement.columns):
        raise ValueError("loopless required")


def poincare_smooth(arrangement):
    """h-polynomial of the independence complex; q tracks half the degree."""
    _check_central_loopless(arrangement)
    return f_h(matroid_complex(arrangement), arrangement.d).poly


def poincare_ih(arrangement):
    """Broken-circuit h-polynomial (order-independent)."""
    _check_central_loopless(arrangement)
    return f_h(broken_circuit_complex(arrangement), arrangement.d).poly


def local_ih(arrangement, flat):
    """Local even intersection series at a stratum: the localized invariant."""
    return poincare_ih(arrangement.localization(flat))


def kl_residual(arrangement):
    """Left side minus right side of the stratified point-count recursion.

    q^(2d) P(1/q) is compared against
    sum_F P_{loc F}(q) (q-1)^(crk F) sum_{G >= F} chi_{res G}(q) r((res F)_G),
    all evaluated as exact polynomials.  Contract: the zero polynomial.
    """
    _check_central_loopless(arrangement)
    d = arrangement.d
    lattice = arrangement.flats()
    lhs = poincare_ih(arrangement).reversed_at(2 * d)
    chi_above = {f.mask: characteristic_polynomial(arrangement.restriction(f))
                 for f in lattice}
    qm1 = UniPoly((-1, 1))
    rhs = UniPoly()
    for f in lattice:
        res_f = arrangement.restriction(f)
        inner = UniPoly()
        for g in lattice:
            if g.mask & f.mask != f.mask:
                continue
            g_in_res = arrangement.flat_in_minor(res_f, g)
            regions = num_regions(res_f.localization(g_in_res))
            inner = inner + chi_above[g.mask] * regions
        local = poincare_ih(arrangement.localization(f))
        rhs = rhs + local * qm1 ** f.corank * inner
    return lhs - rhs


def decomposition_residual(arrangement):
    """h(q) minus its convolution into broken-circuit times local-top terms.

    Flats whose localization has a coloop contribute zero because the top
    h-number T(0, 1) of the localization vanishes there.
    """
    _check_central_loopless(arrangement)
    lhs = poincare_smooth(arrangement)
    rhs = UniPoly()
    for f in arrangement.flats():
        h_top = tutte(arrangement.localization(f))(0, 1)
        if not h_top:
            continue
        upper = poincare_ih(arrangement.restriction(f))
        rhs = rhs + upper * h_top * UniPoly.monomial(f.rank)
    return lhs - rhs


def poincare_report(arrangement):
    """Full report: both series, every local series, and both residuals."""
    smooth = poincare_smooth(arrangement)
    ih = poincare_ih(arrangement)
    locals_ = {f.members: local_ih(arrangement, f) for f in arrangement.flats()}
    residuals = {
        "kl": kl_residual(arrangement),
        "decomposition": decomposition_residual(arrangement),
    }
    return PoincareReport(smooth, ih, locals_, residuals)

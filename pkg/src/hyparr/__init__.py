"""Exact invariants and finite-field point counts for integer arrangements."""

from .arrangement import (
    Arrangement,
    Circuit,
    ClassificationFlags,
    Flat,
    FlatLattice,
    NotAFlatError,
)
from .betti import (
    PoincareReport,
    decomposition_residual,
    kl_residual,
    local_ih,
    poincare_ih,
    poincare_report,
    poincare_smooth,
)
from .complexes import (
    HVector,
    SimplicialComplex,
    broken_circuit_complex,
    f_h,
    matroid_complex,
)
from .ffield import (
    CountReport,
    InadmissiblePrimeError,
    UnsupportedError,
    count_complement,
    count_generic_stratum,
    count_hypertoric,
    count_locally_free,
    count_moment_fiber,
    count_smooth_points,
    find_regular_lambda,
    is_regular_value,
    matroid_preserved_mod_p,
    orbit_is_closed,
)
from .invariants import (
    characteristic_polynomial,
    h_br_moebius,
    h_from_tutte,
    krs_residual,
    num_regions,
    tutte,
    tutte_whitney,
)
from .polynomials import BiPoly, UniPoly
from .rings import (
    MonomialIdeal,
    MultiPoly,
    TermOrder,
    buchberger,
    circuit_polynomial,
    hilbert_series_quotient,
    initial_ideal,
    krull_dimension,
    lsop_hilbert,
    r0_hilbert,
    restriction_map_check,
    sr_ideal,
    stratum_ring_hilbert,
    verify_ugb,
)

__version__ = "0.1.0"

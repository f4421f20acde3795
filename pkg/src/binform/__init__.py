"""Exact invariant theory of binary forms.

Everything here runs in exact rational arithmetic: transvectants and trace
invariants of binary forms, an exact Jacobian-rank independence
certificate, alternating binomial identity suites, umbral evaluation of
symbolic bracket monomials, and 6j sign grids.
"""

from .combsum import dixon, nkr, nkr_via_ups, ups_direct, ups_recursive, von_szily
from .exactnum import alt_sign, binom_ext, fact_ext, fact_product, inv_fact_ext
from .forms import (
    BinaryForm,
    UniModular,
    generic_form,
    load_form,
    mobius_act,
    monomial,
    random_form,
    random_unimodular,
    save_form,
    unstable_form,
)
from .independence import (
    independence_certificate,
    jacobian_matrix,
    jacobian_unstable_closed,
    unstable_minor,
)
from .invariants import (
    charpoly_invariant,
    charpoly_invariants,
    octavic_identity_report,
    p2_closed_form,
    shioda_invariant,
    trace_invariant,
    transvection_matrix,
)
from .polyring import MultiPoly, RingMatrix, charpoly, det_exact, rank_exact
from .sixj import SignGrid, grid_to_csv, grid_to_ppm, scan_zeros, sign_grid, sixj_sum, zero_cells
from .transvect import t_coeff, transvectant
from .umbral import BracketMonomial, cyclic_bracket, parse_bracket, umbral_eval

__all__ = [name for name in dir() if not name.startswith("_")]

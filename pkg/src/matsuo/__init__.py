"""Exact Matsuo axial algebras of simply-laced Weyl groups."""

from .algebra import (AlgebraSpace, AlgVector, Idempotent, axis, central_charge, construct_algebra,
                      coset_axis, subalgebra_identity)
from .fusion import FusionTable, find_z2_gradings, fusion_table, miyamoto_involution
from .roots import RootSystemId, TranspositionSet, build_transposition_set
from .scalars import ALPHA, QQ, QQA, RatFunc, format_scalar, parse_scalar
from .spectral import Eigendecomposition, eigendecompose, eta, eta_hat, closed_form_candidates
from .virasoro import KacLabel, MinimalModel, central_charge_pq, kac_weight

__all__ = [
    "ALPHA", "QQ", "QQA", "AlgVector", "AlgebraSpace", "Eigendecomposition", "FusionTable",
    "Idempotent", "KacLabel", "MinimalModel", "RatFunc", "RootSystemId", "TranspositionSet",
    "axis", "build_transposition_set", "central_charge", "central_charge_pq", "construct_algebra",
    "coset_axis", "eigendecompose", "eta", "eta_hat", "find_z2_gradings", "format_scalar",
    "fusion_table", "kac_weight", "miyamoto_involution", "closed_form_candidates", "parse_scalar",
    "subalgebra_identity",
]

"""Exact computer algebra for aromatic/clumped forests and multi-index Hopf
algebras: canonical combinatorial objects, products, coproducts, the
fertility map and its Hopf embeddings, with a degree-bounded verification
engine for every identity in scope."""

from .algebra import HopfStructure, LinComb, Tensor, adjoint_on_slice, pairing
from .forests import (
    AF_UNIT,
    Aroma,
    AromaticForest,
    CF_UNIT,
    ClumpedForest,
    RootedTree,
    admissible_cuts,
    aromatic_tree,
    bck_aro,
    bck_cl,
    delta_free,
    deltabar_free,
    divergence,
    enumerate_forests,
    gl_star,
    graft,
    psi,
    psi_star,
    trace,
)
from .multiindices import (
    AMI_UNIT,
    AromaticMI,
    CMI_UNIT,
    ClumpedMI,
    MultiIndex,
    anchor,
    aromatic_monomial,
    lot_aro,
    lot_cl,
    monomial_cuts,
    novikov,
    partial,
    partialbar,
    partialbar_pow,
    phi_proj,
    phi_star,
)
from .embedding import inverse_fertility, j_aro, j_bar, j_cl, phi
from .grammar import ParseError, parse, parse_element
from .verify import Report, check, run_all

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

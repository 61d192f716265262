"""Exact-arithmetic kernel for degenerate cyclotomic Hecke algebras.

All scalars crossing the boundary are exact: rationals are passed and
returned as strings like "3" or "-5/7" (fractions.Fraction also works as
input, via str()).
"""

from cyclohecke._core import (  # noqa: F401
    Element,
    Spec,
    basd_rank,
    blocks,
    center_basis,
    centralizer_dimension,
    class_sum,
    graded_center_dimension,
    graded_nf,
    multipartitions,
    murphy_element,
    nf,
    one,
    p_element,
    p_set,
    partitions,
    phi,
    phi_inv,
    power_sum_generation,
    residue_tuple,
    run_cli,
    s,
    specht_character,
    verify,
    x,
    __version__,
)

__all__ = [
    "Element",
    "Spec",
    "basd_rank",
    "blocks",
    "center_basis",
    "centralizer_dimension",
    "class_sum",
    "graded_center_dimension",
    "graded_nf",
    "multipartitions",
    "murphy_element",
    "nf",
    "one",
    "p_element",
    "p_set",
    "partitions",
    "phi",
    "phi_inv",
    "power_sum_generation",
    "residue_tuple",
    "run_cli",
    "s",
    "specht_character",
    "verify",
    "x",
]

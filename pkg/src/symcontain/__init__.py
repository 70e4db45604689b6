"""Exact symbolic-power invariants and containment certificates.

Engines for star configurations and determinantal/pfaffian ideals, a
numeric certifier for the Demailly bound for general points, and a
monomial-ideal brute-force oracle.  All arithmetic is exact.
"""
from .core import (
    HSubsetStat,
    InvalidInputError,
    binomial,
    h_smallest_sum,
    integer_nth_root,
)
from .determinantal import (
    DetCertificate,
    MatrixShape,
    SizeMultiset,
    det_alpha,
    det_certify_containment,
    det_demailly_check,
    det_member,
    det_omega,
    det_verify_certificate,
    gamma,
    generic_shape,
    pfaffian_shape,
    size_multiset,
    symmetric_shape,
)
from .monomial import (
    MonomialIdeal,
    coordinate_star_symbolic,
    crosscheck_star,
    mi_alpha,
    mi_intersect,
    mi_member,
    mi_power,
    mi_product,
    monomial_ideal,
)
from .points import (
    FermatRecord,
    GeneralPointsCertificate,
    certify_demailly_general_points,
    containment_threshold,
    fermat_checks,
    lemma24_check,
    lemma24_sweep,
    trung_valla_w,
)
from .star import (
    NotAMemberError,
    StarCertificate,
    StarConfig,
    star_alpha,
    star_certify_containment,
    star_config,
    star_member,
    star_verify_certificate,
    star_waldschmidt,
)

__all__ = [
    "HSubsetStat",
    "InvalidInputError",
    "binomial",
    "h_smallest_sum",
    "integer_nth_root",
    "DetCertificate",
    "MatrixShape",
    "SizeMultiset",
    "det_alpha",
    "det_certify_containment",
    "det_demailly_check",
    "det_member",
    "det_omega",
    "det_verify_certificate",
    "gamma",
    "generic_shape",
    "pfaffian_shape",
    "size_multiset",
    "symmetric_shape",
    "MonomialIdeal",
    "coordinate_star_symbolic",
    "crosscheck_star",
    "mi_alpha",
    "mi_intersect",
    "mi_member",
    "mi_power",
    "mi_product",
    "monomial_ideal",
    "FermatRecord",
    "GeneralPointsCertificate",
    "certify_demailly_general_points",
    "containment_threshold",
    "fermat_checks",
    "lemma24_check",
    "lemma24_sweep",
    "trung_valla_w",
    "NotAMemberError",
    "StarCertificate",
    "StarConfig",
    "star_alpha",
    "star_certify_containment",
    "star_config",
    "star_member",
    "star_verify_certificate",
    "star_waldschmidt",
]

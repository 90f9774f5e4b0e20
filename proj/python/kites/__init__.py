"""Finite integral residuated lattices and the kites built over frames."""

from ._core import (
    Algebra,
    Element,
    Frame,
    Kite,
    Transformation,
    builtin,
    builtin_names,
    canonical_form,
    classify_algebra,
    classify_frame,
    cycle,
    embedding_report,
    enumerate_algebras,
    enumerate_frames,
    hom_report,
    is_transformation,
    kite_axiom_report,
    lemma_report,
    loops,
    parse_algebra,
    parse_frame,
    path,
    serialize_algebra,
    serialize_frame,
    si_kite,
    verify_algebra,
)

__all__ = [
    "Algebra",
    "Element",
    "Frame",
    "Kite",
    "Transformation",
    "builtin",
    "builtin_names",
    "canonical_form",
    "classify_algebra",
    "classify_frame",
    "cycle",
    "embedding_report",
    "enumerate_algebras",
    "enumerate_frames",
    "hom_report",
    "is_transformation",
    "kite_axiom_report",
    "lemma_report",
    "loops",
    "parse_algebra",
    "parse_frame",
    "path",
    "serialize_algebra",
    "serialize_frame",
    "si_kite",
    "verify_algebra",
]

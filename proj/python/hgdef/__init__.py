"""Exact computations on generalized Kneser hypergraphs and colorability defects.

Thin re-export of the compiled module. Vertex indices at this layer are
0-based; the ``p hg`` text format and the wire-form certificates are 1-based.
Invalid arguments raise ``ValueError`` subclasses; solver results are plain
dicts whose ``status`` field is ``"exact"`` or ``"inconclusive"``.
"""

from ._hgdef import (
    Hypergraph,
    ParseError,
    build_kneser,
    cd,
    check_aj_bound,
    check_strengthened_bound,
    chromatic_number,
    closed_form_cd_complete,
    closed_form_chi_complete,
    complete_uniform,
    ecd,
    emit,
    fuzz,
    parse,
    read_file,
    reproduce,
    thm2_certificate,
    thm2_family,
    thm2_predicted,
    thm3_certificate,
    thm3_family,
    thm3_predicted,
    verify_certificate,
    write_file,
)

__all__ = [
    "Hypergraph",
    "ParseError",
    "build_kneser",
    "cd",
    "check_aj_bound",
    "check_strengthened_bound",
    "chromatic_number",
    "closed_form_cd_complete",
    "closed_form_chi_complete",
    "complete_uniform",
    "ecd",
    "emit",
    "fuzz",
    "parse",
    "read_file",
    "reproduce",
    "thm2_certificate",
    "thm2_family",
    "thm2_predicted",
    "thm3_certificate",
    "thm3_family",
    "thm3_predicted",
    "verify_certificate",
    "write_file",
]

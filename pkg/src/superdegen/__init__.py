"""Exact-arithmetic engine for the variety of 4-dimensional superalgebras:
the classified catalog, stabilizer and orbit dimension tables, and
machine-checked degeneration / non-degeneration certificates."""

from .catalog import Catalog, load_catalog
from .certs import (ObstructionCert, Outcome, SpecializationCert, load_cert_file,
                    scaling_cert, verify_cert, verify_obstruction, verify_specialization)
from .cyclo import Cyclo8
from .graph import DegenerationGraph, build_graph, generic_structures, load_default_graph
from .invariants import Fingerprint, fingerprint, orbit_dim, stabilizer_dim
from .linalg import FIELD_C8, FIELD_LRAT, FIELD_TRAT, Matrix
from .literals import parse_scalar
from .scalars import LambdaRat
from .structure import StructureConstants, cn_structure, grading_split, transport, validate
from .tpoly import TRat

__version__ = "0.1.0"

__all__ = [
    "Catalog", "Cyclo8", "DegenerationGraph", "FIELD_C8", "FIELD_LRAT", "FIELD_TRAT",
    "Fingerprint", "LambdaRat", "Matrix", "ObstructionCert", "Outcome",
    "SpecializationCert", "StructureConstants", "TRat", "build_graph", "cn_structure",
    "fingerprint", "generic_structures", "grading_split", "load_catalog",
    "load_cert_file", "load_default_graph", "orbit_dim", "parse_scalar",
    "scaling_cert", "stabilizer_dim", "transport", "validate", "verify_cert",
    "verify_obstruction", "verify_specialization",
]

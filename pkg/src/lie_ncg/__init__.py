"""Non-commuting graphs of finite-dimensional Lie algebras over small finite fields."""

from .catalog import CatalogEntry, builtin_catalog, catalog_entry
from .enumeration import enumerate_algebras
from .errors import (
    AbelianAlgebra,
    CapExceeded,
    JacobiViolation,
    LieNcgError,
    NotPrimePower,
    ParseError,
    UnknownStatement,
    UnsupportedField,
)
from .gf import Field, field_new
from .graphs import Graph, PropertyReport, property_report
from .iso import canonical_certificate, graph_isomorphic, isomorphism
from .liealg import AlgebraSpec, LieAlgebra, algebra_from_spec
from .linalg import Subspace
from .ncg import NcGraph, build_graph
from .verifier import (
    TheoremReport,
    check_all_statements,
    check_figures,
    check_iso_theorems,
    check_statement,
    explore_conjecture,
)

__all__ = [
    "AbelianAlgebra",
    "AlgebraSpec",
    "CapExceeded",
    "CatalogEntry",
    "Field",
    "Graph",
    "JacobiViolation",
    "LieAlgebra",
    "LieNcgError",
    "NcGraph",
    "NotPrimePower",
    "ParseError",
    "PropertyReport",
    "Subspace",
    "TheoremReport",
    "UnknownStatement",
    "UnsupportedField",
    "algebra_from_spec",
    "build_graph",
    "builtin_catalog",
    "canonical_certificate",
    "catalog_entry",
    "check_all_statements",
    "check_figures",
    "check_iso_theorems",
    "check_statement",
    "enumerate_algebras",
    "explore_conjecture",
    "field_new",
    "graph_isomorphic",
    "isomorphism",
    "property_report",
]

"""Exact equivariant-formality certificates for isotropy actions on compact
symmetric spaces.

The heavy lifting lives in the compiled extension ``_isoform``: root systems
in exact rational coordinates, Dynkin diagram folds, Weyl group orders (both
the classical table and a brute-force oracle), and the formality certificate
dim H*(fixed set) = dim H*(M).
"""

try:
    from ._isoform import (  # noqa: F401
        FoldResult,
        FormalityReport,
        RootSystem,
        analyze,
        build_root_system,
        cartan_integer,
        classify_simple_roots,
        embedded_catalog,
        fold,
        reflect,
        suite_entries,
        verify_all,
        weyl_order_bfs,
        weyl_order_closed_form,
        __version__,
    )
except ImportError:  # in-tree test runs put the bare extension on sys.path
    from _isoform import (  # noqa: F401
        FoldResult,
        FormalityReport,
        RootSystem,
        analyze,
        build_root_system,
        cartan_integer,
        classify_simple_roots,
        embedded_catalog,
        fold,
        reflect,
        suite_entries,
        verify_all,
        weyl_order_bfs,
        weyl_order_closed_form,
        __version__,
    )

__all__ = [
    "FoldResult",
    "FormalityReport",
    "RootSystem",
    "analyze",
    "build_root_system",
    "cartan_integer",
    "classify_simple_roots",
    "embedded_catalog",
    "fold",
    "reflect",
    "suite_entries",
    "verify_all",
    "weyl_order_bfs",
    "weyl_order_closed_form",
    "__version__",
]

"""Exact q-series verification engine for the Capparelli identities.

Thin wrapper over the compiled extension module. The main entry points:

- ``run_check(name, order=None, ...)`` -- run one identity check
- ``run_all(order=None, ...)`` -- run everything, returns a report dict
- ``list_checks()`` -- registered checks with labels
- ``expand(series, order=50, alpha=1, beta=1)`` -- coefficients of a
  named series as ``(q_exp, t_exp, coefficient)`` tuples
- ``count_cm / count_c2star / count_dj / chi3`` -- combinatorial counts
"""

try:
    from ._qcap import (  # type: ignore[import-not-found]
        __version__,
        chi3,
        count_c2star,
        count_cm,
        count_dj,
        expand,
        list_checks,
        run_all,
        run_check,
    )
except ImportError:  # extension on sys.path directly (in-tree builds)
    from _qcap import (  # type: ignore[import-not-found]
        __version__,
        chi3,
        count_c2star,
        count_cm,
        count_dj,
        expand,
        list_checks,
        run_all,
        run_check,
    )

__all__ = [
    "__version__",
    "chi3",
    "count_c2star",
    "count_cm",
    "count_dj",
    "expand",
    "list_checks",
    "run_all",
    "run_check",
]

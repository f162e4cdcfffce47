"""Two-shape lifetime family: distributions, shape analysis, censored
location-scale regression and synthetic-data generation.

The heavy lifting lives in the compiled extension ``_eollw``; this package
re-exports its public surface.
"""

from ._eollw import (
    EollwDist,
    LeollwDist,
    fit,
    generate_replicate,
    shape_report,
)

__all__ = [
    "EollwDist",
    "LeollwDist",
    "fit",
    "generate_replicate",
    "shape_report",
]

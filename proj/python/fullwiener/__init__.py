"""Distance invariants and pentagon statistics of fullerene graphs."""

import json
import os

from ._fullwiener import (
    CodecError,
    FullereneGraph,
    GraphError,
    NotTwelvePentagons,
    ScanError,
    bfs_distances,
    classify_order,
    construct_type_a,
    diameter,
    family_row,
    family_table,
    pentagon_stats,
    read_planar_code,
    report,
    scan_json,
    validate,
    wiener_complexity,
    wiener_index,
)

__version__ = "0.1.0"


def scan(source, workers=1, retain=1):
    """Scan planar-code bytes or a file path and return the summary as a dict."""
    if isinstance(source, (str, os.PathLike)):
        with open(source, "rb") as f:
            source = f.read()
    return json.loads(scan_json(bytes(source), workers, retain))


__all__ = [
    "CodecError",
    "FullereneGraph",
    "GraphError",
    "NotTwelvePentagons",
    "ScanError",
    "bfs_distances",
    "classify_order",
    "construct_type_a",
    "diameter",
    "family_row",
    "family_table",
    "pentagon_stats",
    "read_planar_code",
    "report",
    "scan",
    "validate",
    "wiener_complexity",
    "wiener_index",
]

"""
Plain-text coefficient cache.

    # qeulerian-cache v1
    E <n> <d> <m> <coefficient>

Records are sorted by (n, d, m); every n present must form a complete E_n
that passes the table invariants, otherwise the whole load is rejected.
"""

import logging
from pathlib import Path
from typing import Dict, Optional, Tuple, Union

from combinatorics.eulerian import CACHE_FILE, EulerianTable, default_table
from combinatorics.poly import BivariatePolynomial
from core.config import config
from core.errors import CacheFormatError, InvariantError

log = logging.getLogger(__name__)

HEADER = "# qeulerian-cache v1"


def dumps(table: EulerianTable) -> str:
    lines = [HEADER]
    for n, poly in table.items():
        lines.extend(f"E {n} {d} {m} {c}" for (d, m), c in poly.items())
    return "\n".join(lines) + "\n"


def loads(text: str, table: Optional[EulerianTable] = None) -> EulerianTable:
    """Parses a cache into `table` (a fresh one by default), validating every E_n before inserting any."""
    lines = text.splitlines()
    if not lines or lines[0].strip() != HEADER:
        found = lines[0].strip() if lines else ""
        raise CacheFormatError(f"expected header {HEADER!r}, found {found!r}")

    terms: Dict[int, Dict[Tuple[int, int], int]] = {}
    previous: Optional[Tuple[int, int, int]] = None
    for number, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        fields = line.split()
        if len(fields) != 5 or fields[0] != "E":
            raise CacheFormatError(f"line {number}: expected 'E n d m coefficient', got {line!r}")
        try:
            n, d, m, c = (int(f) for f in fields[1:])
        except ValueError:
            raise CacheFormatError(f"line {number}: non-integer field in {line!r}")
        if min(n, d, m) < 0:
            raise CacheFormatError(f"line {number}: negative index", n=n)
        key = (n, d, m)
        if previous is not None and key <= previous:
            raise CacheFormatError(f"line {number}: records out of order or repeated at d={d}, m={m}", n=n)
        previous = key
        terms.setdefault(n, {})[(d, m)] = c

    target = EulerianTable() if table is None else table
    polys = {n: BivariatePolynomial(entries) for n, entries in terms.items()}
    staging = EulerianTable()
    for n, poly in sorted(polys.items()):
        try:
            staging.insert(n, poly, CACHE_FILE)
        except InvariantError as e:
            raise CacheFormatError("; ".join(e.problems), n=n)
    for n, poly in staging.items():
        try:
            target.insert(n, poly, CACHE_FILE)
        except InvariantError as e:
            raise CacheFormatError("; ".join(e.problems), n=n)
    return target


def cache_load(path: Union[str, Path, None] = None, table: Optional[EulerianTable] = None) -> EulerianTable:
    path = Path(path) if path is not None else config.cache_path
    log.info(f"Loading coefficient cache from {path}...")
    if not path.exists():
        raise FileNotFoundError(f"Cache file not found at: {path.resolve()}")
    loaded = loads(path.read_text(), table)
    log.info(f"Loaded E_n for n in {loaded.ns()}")
    return loaded


def cache_save(path: Union[str, Path, None] = None, table: Optional[EulerianTable] = None):
    path = Path(path) if path is not None else config.cache_path
    table = default_table if table is None else table
    path.write_text(dumps(table))
    log.info(f"Saved {len(table)} polynomials to {path}")

"""The transition matrix between nonnesting and noncrossing matchings.

Rows are indexed by nonnesting matchings, columns by noncrossing ones,
both sorted in table order of their Dyck paths (maximum path first, see
:func:`webperm.combinat.dyck_sort_key`).  With that ordering the matrix is
upper-unitriangular.

The entry of row M and column M' counts web permutations sigma with
D(sigma) contained in D(M) and traced matching M'.  A second construction
resolves the grid configuration of M outright; both must agree, and both
must agree with the syzygy-rewriting expansion of :mod:`webperm.oracle`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .combinat import (
    Matching,
    cells_above,
    dyck_heights,
    dyck_leq,
    dyck_of_matching,
    dyck_paths,
    identity,
    is_noncrossing,
    is_nonnesting,
    matching_from_dyck,
    matching_size,
    matching_to_json,
)
from .grid import (
    DEFAULT_NODE_CAP,
    GridConfiguration,
    matching_of_permutation,
    resolve,
)
from .webs import web_table

ENTRY_METHODS = ("characterization", "resolution")


@dataclass(frozen=True)
class TransitionMatrix:
    n: int
    rows: tuple[Matching, ...]
    cols: tuple[Matching, ...]
    entries: tuple[tuple[int, ...], ...]


def row_labels(n: int) -> list[Matching]:
    """Nonnesting matchings in table order."""
    return [matching_from_dyck(p, "NN") for p in dyck_paths(n)]


def col_labels(n: int) -> list[Matching]:
    """Noncrossing matchings in table order."""
    return [matching_from_dyck(p, "NC") for p in dyck_paths(n)]


def _check_classes(m: Matching, m_prime: Matching) -> None:
    if not is_nonnesting(m):
        raise ValueError(f"row matching must be nonnesting: {m}")
    if not is_noncrossing(m_prime):
        raise ValueError(f"column matching must be noncrossing: {m_prime}")
    if matching_size(m) != matching_size(m_prime):
        raise ValueError("matchings have different sizes")


def entry(m: Matching, m_prime: Matching, method: str = "characterization") -> int:
    """One matrix entry, by either construction."""
    _check_classes(m, m_prime)
    n = matching_size(m)
    path = dyck_of_matching(m)
    if method == "characterization":
        return sum(1 for rec in web_table(n)
                   if rec.matched == m_prime and dyck_leq(rec.dyck, path))
    if method == "resolution":
        g = GridConfiguration(identity(n), cells_above(path))
        outcome = resolve(g)
        return sum(mult for sigma, mult in outcome.items()
                   if matching_of_permutation(sigma) == m_prime)
    raise ValueError(f"unknown method {method!r}")


@lru_cache(maxsize=None)
def matrix(n: int) -> TransitionMatrix:
    """The full transition matrix, entries by the filter construction."""
    rows = tuple(row_labels(n))
    cols = tuple(col_labels(n))
    col_index = {m: k for k, m in enumerate(cols)}
    table = web_table(n)
    grid_rows = []
    for m in rows:
        heights = dyck_heights(dyck_of_matching(m))
        counts = [0] * len(cols)
        for rec in table:
            if all(a <= b for a, b in zip(dyck_heights(rec.dyck), heights)):
                counts[col_index[rec.matched]] += 1
        grid_rows.append(tuple(counts))
    return TransitionMatrix(n, rows, cols, tuple(grid_rows))


def resolution_matrix(n: int, node_cap: int = DEFAULT_NODE_CAP) -> TransitionMatrix:
    """The same matrix computed by resolving each row's configuration."""
    rows = tuple(row_labels(n))
    cols = tuple(col_labels(n))
    col_index = {m: k for k, m in enumerate(cols)}
    grid_rows = []
    for m in rows:
        g = GridConfiguration(identity(n), cells_above(dyck_of_matching(m)))
        counts = [0] * len(cols)
        for sigma, mult in resolve(g, node_cap).items():
            counts[col_index[matching_of_permutation(sigma)]] += mult
        grid_rows.append(tuple(counts))
    return TransitionMatrix(n, rows, cols, tuple(grid_rows))


def support_check(a: TransitionMatrix) -> list[dict]:
    """Verify positivity pattern, unit diagonal and vanishing lower triangle.

    Returns a list of violation records; empty means the matrix is clean.
    """
    violations = []
    row_paths = [dyck_of_matching(m) for m in a.rows]
    col_paths = [dyck_of_matching(m) for m in a.cols]
    for r, row in enumerate(a.entries):
        for c, value in enumerate(row):
            expected_positive = dyck_leq(col_paths[c], row_paths[r])
            if (value > 0) != expected_positive:
                violations.append({
                    "row": r + 1, "col": c + 1, "value": value,
                    "reason": "positivity must match path inclusion"})
            if row_paths[r] == col_paths[c] and value != 1:
                violations.append({
                    "row": r + 1, "col": c + 1, "value": value,
                    "reason": "diagonal entry must be 1"})
            if c < r and value != 0:
                violations.append({
                    "row": r + 1, "col": c + 1, "value": value,
                    "reason": "lower triangle must vanish"})
    return violations


# ---------------------------------------------------------------------------
# export formats
# ---------------------------------------------------------------------------

def to_csv(a: TransitionMatrix) -> str:
    return "\n".join(",".join(str(v) for v in row) for row in a.entries)


def to_json(a: TransitionMatrix) -> dict:
    return {
        "n": a.n,
        "rows": [matching_to_json(m) for m in a.rows],
        "cols": [matching_to_json(m) for m in a.cols],
        "entries": [list(row) for row in a.entries],
    }


def to_latex(a: TransitionMatrix) -> str:
    """bmatrix display with the structural lower-triangle zeros left blank."""
    lines = []
    for r, row in enumerate(a.entries):
        cells = ["" if c < r else str(v) for c, v in enumerate(row)]
        lines.append("  " + " & ".join(cells) + r" \\")
    body = "\n".join(lines)
    return "\\begin{bmatrix}\n" + body + "\n\\end{bmatrix}"

import json
import pathlib

import pytest

DATA = pathlib.Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def golden_matrices() -> dict[int, list[list[int]]]:
    raw = json.loads((DATA / "transition_matrices_golden.json").read_text())
    return {int(k): v for k, v in raw.items()}


@pytest.fixture(scope="session")
def golden_web_tables() -> dict[int, list[tuple[str, str, str, str]]]:
    """Reference rows (word, cycle notation, path column, matching column)
    for n = 2..5.

    Note: the path column of the source tables was generated in transposed
    (row, column) coordinates, so it records the path of the *inverse*
    word; the tests check it through that correspondence.  The matching
    column and the matrices use the direct convention.
    """
    raw = json.loads((DATA / "web_tables_golden.json").read_text())
    return {int(k): [tuple(r) for r in v] for k, v in raw.items()}

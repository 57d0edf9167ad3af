"""Utility functions to find and load the orbit fixtures and the published component group tables."""
from __future__ import annotations

import hashlib
import json
import os
from functools import lru_cache
from typing import Any, Optional

DATA_DIRECTORY = os.path.abspath(os.path.join(os.path.dirname(__file__), "data/"))
ALGEBRAS = ["G2", "F4", "E6", "E7", "E8"]
# Absolute filepaths to the fixture files.
FILEPATHS = {
    **{name: os.path.join(DATA_DIRECTORY, f"{name}.json") for name in ALGEBRAS},
    "B2_example": os.path.join(DATA_DIRECTORY, "B2_example.json"),
}


def normalize_orbit_label(label: str) -> str:
    """Spelling used in the fixtures: no spaces, '~A1' for the short-root labels."""
    return label.replace(" ", "").replace("Ã", "~A").replace("tilde", "~")


@lru_cache(maxsize=None)
def _read(name: str) -> str:
    if name not in FILEPATHS:
        raise ValueError(f"No fixture for {name}. Expected one of {list(FILEPATHS)}")
    with open(FILEPATHS[name]) as infile:
        return infile.read()


def load_fixture(name: str) -> dict[str, Any]:
    """
    Parsed content of a fixture file.

    :param name: An exceptional type ('G2', 'F4', 'E6', 'E7', 'E8') or 'B2_example'.
    """
    return json.loads(_read(name))


def fixture_hash(name: str) -> str:
    """Short SHA-256 digest of a fixture file, used to key stored results."""
    return hashlib.sha256(_read(name).encode()).hexdigest()[:12]


def orbit_records(algebra: str) -> list[dict[str, Any]]:
    """Orbits listed for an exceptional type, with weighted Dynkin diagrams where known."""
    return load_fixture(algebra)["orbits"]


def orbit_record(algebra: str, label: str) -> dict[str, Any]:
    """
    Fixture record of one nilpotent orbit.

    :returns: A dict with the keys "label", "wdd" (None when not stored) and optionally "dim" and "e".

    :raises ValueError: If the orbit is not listed.
    """
    if algebra not in ALGEBRAS:
        raise ValueError(f"No orbit fixtures for {algebra}. Expected one of {ALGEBRAS}")
    wanted = normalize_orbit_label(label)
    for record in orbit_records(algebra):
        if record["label"] == wanted:
            return record
    raise ValueError(f"Unknown orbit {label!r} in {algebra}. "
                     f"Expected one of {[r['label'] for r in orbit_records(algebra)]}")


def table_rows(algebra: str) -> list[dict[str, Any]]:
    """
    Published rows for the orbits whose stabilizer has a nontrivial component group.

    Each row has "label", "c1" (type of [c1, c1]), "d" (dimension of the centre), "c2" (type of [c2, c2]),
    "weights" (highest weights of the complement in the notation '(c1 part;centre part;c2 part)') and "group".
    Rows whose printed data is known to be inconsistent carry "erratum": true and a "note".
    """
    if algebra not in ALGEBRAS:
        raise ValueError(f"No tables for {algebra}. Expected one of {ALGEBRAS}")
    return load_fixture(algebra)["table"]


def table_row(algebra: str, label: str) -> Optional[dict[str, Any]]:
    """The published row of an orbit, or None if its component group is trivial."""
    wanted = normalize_orbit_label(label)
    return next((row for row in table_rows(algebra) if row["label"] == wanted), None)


def classical_example():
    """
    The B2 example triple on Q^5 with the anti-diagonal symmetric form, and the published generators.

    :returns: The triple in so(5) and a dict mapping the part size s to the matrix of the lifted reflection.
    """
    from nilcent.classical import orthogonal_algebra, triple_from_matrices
    from nilcent.scalars import ExactMatrix

    data = load_fixture("B2_example")
    algebra = orthogonal_algebra(data["n"])
    triple = triple_from_matrices(algebra, *(ExactMatrix.from_rows(data[k]) for k in ("h", "e", "f")),
                                  label=data["label"])
    generators = {int(s): ExactMatrix.from_rows(m) for s, m in data["generators"].items()}
    return triple, generators

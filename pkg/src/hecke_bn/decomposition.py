"""Decomposition matrices and the triangularity conditions on them.

A matrix carries its row labels (all bipartitions of ``n``, the Specht
modules) and column labels (the simple modules); nothing here depends on the
order in which rows or columns are listed.
"""

from __future__ import annotations

import io
import json
import os
from dataclasses import dataclass, field
from importlib import resources
from typing import IO, Mapping, Sequence, Union

from .partitions import Multipartition, dominates_bipartitions, enumerate_multipartitions


class MatrixFormatError(ValueError):
    pass


class BasicSetExtractionError(ValueError):
    """The matrix and a-values do not satisfy (Delta_a) at some column."""

    def __init__(self, column, reason: str):
        self.column = column
        super().__init__(f"column {column}: {reason}")


@dataclass(frozen=True)
class DecompositionMatrix:
    rows: tuple
    cols: tuple
    entries: tuple

    def __post_init__(self):
        rows = tuple(Multipartition(x) for x in self.rows)
        cols = tuple(Multipartition(x) for x in self.cols)
        entries = tuple(tuple(row) for row in self.entries)
        if not rows:
            raise MatrixFormatError("matrix has no rows")
        if len(set(rows)) != len(rows):
            raise MatrixFormatError("duplicate row labels")
        if len(set(cols)) != len(cols):
            raise MatrixFormatError("duplicate column labels")
        if not set(cols) <= set(rows):
            raise MatrixFormatError(f"column labels not among the rows: {sorted(map(str, set(cols) - set(rows)))}")
        if len(entries) != len(rows) or any(len(row) != len(cols) for row in entries):
            raise MatrixFormatError(f"entries must be a {len(rows)}x{len(cols)} array")
        for row in entries:
            for x in row:
                if not isinstance(x, int) or isinstance(x, bool) or x < 0:
                    raise MatrixFormatError(f"entries must be non-negative integers, got {x!r}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "_ri", {lam: i for i, lam in enumerate(rows)})
        object.__setattr__(self, "_ci", {mu: j for j, mu in enumerate(cols)})

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def entry(self, lam, mu) -> int:
        return self.entries[self._ri[Multipartition(lam)]][self._ci[Multipartition(mu)]]

    def column(self, mu) -> dict:
        """Nonzero entries of column ``mu`` keyed by row label."""
        j = self._ci[Multipartition(mu)]
        return {lam: self.entries[i][j] for i, lam in enumerate(self.rows) if self.entries[i][j]}

    def to_json(self) -> dict:
        n = self.rows[0].size
        return {
            "n": n,
            "rows": [x.to_json() for x in self.rows],
            "cols": [x.to_json() for x in self.cols],
            "entries": [list(r) for r in self.entries],
        }

    def permuted(self, row_order: Sequence[int], col_order: Sequence[int]) -> "DecompositionMatrix":
        return DecompositionMatrix(
            tuple(self.rows[i] for i in row_order),
            tuple(self.cols[j] for j in col_order),
            tuple(tuple(self.entries[i][j] for j in col_order) for i in row_order),
        )

    @classmethod
    def identity(cls, labels: Sequence) -> "DecompositionMatrix":
        labels = tuple(labels)
        k = len(labels)
        return cls(labels, labels, tuple(tuple(int(i == j) for j in range(k)) for i in range(k)))


def _parse_labels(data, what: str) -> tuple:
    if not isinstance(data, list):
        raise MatrixFormatError(f"'{what}' must be an array of bipartitions")
    try:
        return tuple(Multipartition.from_json(x) for x in data)
    except (ValueError, TypeError) as exc:
        raise MatrixFormatError(f"bad label in '{what}': {exc}") from None


def matrix_from_json(data: Mapping, require_all_rows: bool = True) -> DecompositionMatrix:
    if not isinstance(data, Mapping):
        raise MatrixFormatError("top-level JSON value must be an object")
    for key in ("rows", "cols", "entries"):
        if key not in data:
            raise MatrixFormatError(f"missing field '{key}'")
    rows = _parse_labels(data["rows"], "rows")
    cols = _parse_labels(data["cols"], "cols")
    if not rows:
        raise MatrixFormatError("'rows' is empty")
    entries = data["entries"]
    if not isinstance(entries, list) or not all(isinstance(row, list) for row in entries):
        raise MatrixFormatError("'entries' must be an array of arrays")
    n = data.get("n", rows[0].size)
    if not isinstance(n, int):
        raise MatrixFormatError("'n' must be an integer")
    for lam in rows + cols:
        if lam.level != 2 or lam.size != n:
            raise MatrixFormatError(f"label {lam} is not a bipartition of n={n}")
    D = DecompositionMatrix(rows, cols, tuple(map(tuple, entries)))
    if require_all_rows and set(rows) != set(enumerate_multipartitions(n, 2)):
        raise MatrixFormatError(f"rows must list every bipartition of {n} exactly once")
    return D


def load_matrix(source: Union[str, os.PathLike, bytes, IO], require_all_rows: bool = True) -> DecompositionMatrix:
    """Read a matrix from a path, raw bytes, or an open (binary or text) stream."""
    if isinstance(source, (bytes, bytearray)):
        source = io.BytesIO(source)
    try:
        if isinstance(source, (str, os.PathLike)):
            with open(source, "rb") as fh:
                data = json.load(fh)
        else:
            data = json.load(source)
    except json.JSONDecodeError as exc:
        raise MatrixFormatError(f"malformed JSON: {exc}") from None
    return matrix_from_json(data, require_all_rows=require_all_rows)


def fixture_path(name: str = "b3_q1_qm1.json"):
    return resources.files(__package__).joinpath("fixtures", name)


def load_b3_matrix() -> DecompositionMatrix:
    with fixture_path().open("rb") as fh:
        return load_matrix(fh)


@dataclass
class Report:
    ok: bool
    violations: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def verify_delta(D: DecompositionMatrix) -> Report:
    """Unit diagonal, and nonzero ``[S^lam : D^mu]`` only when ``lam ⊴ mu``."""
    bad = []
    for mu in D.cols:
        if D.entry(mu, mu) != 1:
            bad.append(f"[S^{mu}:D^{mu}] = {D.entry(mu, mu)}, expected 1")
        for lam in D.column(mu):
            if not dominates_bipartitions(lam, mu):
                bad.append(f"[S^{lam}:D^{mu}] != 0 but {lam} does not precede {mu} in dominance order")
    return Report(not bad, bad)


def extract_basic_set(D: DecompositionMatrix, avals: Mapping) -> tuple[frozenset, dict]:
    """The canonical basic set and the bijection ``beta`` from columns to it.

    For each column the nonzero row of least a-value must be unique, carry
    entry 1, and every other nonzero row must have strictly larger a-value.
    """
    beta = {}
    for mu in D.cols:
        col = D.column(mu)
        if not col:
            raise BasicSetExtractionError(mu, "column is zero")
        try:
            ranked = sorted(col, key=lambda lam: avals[lam])
        except KeyError as exc:
            raise ValueError(f"no a-value for {exc.args[0]}") from None
        nu = ranked[0]
        if len(ranked) > 1 and avals[ranked[1]] == avals[nu]:
            raise BasicSetExtractionError(mu, f"minimal a-value {avals[nu]} attained by {ranked[0]} and {ranked[1]}")
        if col[nu] != 1:
            raise BasicSetExtractionError(mu, f"entry at minimal row {nu} is {col[nu]}, expected 1")
        beta[mu] = nu
    image = frozenset(beta.values())
    if len(image) != len(beta):
        raise BasicSetExtractionError(None, "two columns select the same row; beta is not injective")
    return image, beta


def verify_delta_a(D: DecompositionMatrix, avals: Mapping, B, beta: Mapping) -> Report:
    """Check (Delta_a) for ``beta`` and the block shape of the square part on ``B``."""
    bad = []
    B = frozenset(Multipartition(x) for x in B)
    beta = {Multipartition(k): Multipartition(v) for k, v in beta.items()}
    if set(beta) != set(D.cols):
        bad.append("beta must be defined on exactly the column labels")
    if len(set(beta.values())) != len(beta) or set(beta.values()) != B:
        bad.append("beta is not a bijection onto B")
    if not B <= set(D.rows):
        bad.append("B is not a set of row labels")
    if bad:
        return Report(False, bad)
    for mu, nu in beta.items():
        if D.entry(nu, mu) != 1:
            bad.append(f"[S^{nu}:M^{nu}] = {D.entry(nu, mu)}, expected 1 (column {mu})")
        for lam in D.column(mu):
            if lam != nu and not avals[nu] < avals[lam]:
                bad.append(f"[S^{lam}:M^{nu}] != 0 but a({nu}) = {avals[nu]} is not < a({lam}) = {avals[lam]}")
    # square part: rows and columns indexed by B, ordered by a-value
    inv = {nu: mu for mu, nu in beta.items()}
    order = sorted(B, key=lambda x: (avals[x], str(x)))
    for i, nu in enumerate(order):
        for j, nu2 in enumerate(order):
            x = D.entry(nu, inv[nu2])
            if avals[nu] == avals[nu2] and x != int(nu == nu2):
                bad.append(f"diagonal block a={avals[nu]} is not the identity at ({nu}, {nu2})")
            elif j > i and avals[nu2] > avals[nu] and x:
                bad.append(f"square part not lower triangular at ({nu}, {nu2})")
    return Report(not bad, bad)

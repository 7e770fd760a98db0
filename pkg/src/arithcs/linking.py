"""Linking-matrix value types shared by the arithmetic and topological sides."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NonSymmetric, SchemaError, ValidationError


def _check_square(rows: Sequence[Sequence[int]]) -> int:
    r = len(rows)
    if r < 1:
        raise ValidationError("linking matrix must have at least one row")
    for row in rows:
        if len(row) != r:
            raise ValidationError(f"linking matrix is not square ({r} rows, row of length {len(row)})")
    return r


@dataclass(frozen=True)
class Mod2LinkingMatrix:
    """Symmetric r x r matrix over Z/2 with zero diagonal.

    ``source`` is a free-form tag such as ``"arithmetic:5-29-37"`` or
    ``"topological:hopf"``.
    """

    entries: tuple[tuple[int, ...], ...]
    source: str = "unspecified"

    def __post_init__(self):
        r = _check_square(self.entries)
        for i in range(r):
            if self.entries[i][i] != 0:
                raise ValidationError("diagonal of a mod-2 linking matrix must be 0")
            for j in range(r):
                v = self.entries[i][j]
                if v not in (0, 1):
                    raise ValidationError(f"entry ({i + 1},{j + 1}) = {v} is not a bit")
                if v != self.entries[j][i]:
                    raise NonSymmetric(f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) differ")

    @property
    def r(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], source: str = "unspecified") -> Mod2LinkingMatrix:
        return cls(tuple(tuple(int(v) for v in row) for row in rows), source)

    def pairs(self) -> list[tuple[int, int, int]]:
        """Upper-triangle entries as 1-based ``(i, j, value)`` triples."""
        return [(i + 1, j + 1, self.entries[i][j]) for i in range(self.r) for j in range(i + 1, self.r)]

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.entries)


@dataclass(frozen=True)
class IntegerLinkingMatrix:
    """Pairwise integer linking numbers of an r-component link.

    Only the off-diagonal entries carry meaning; the diagonal (framing) is
    stored as 0.
    """

    entries: tuple[tuple[int, ...], ...]
    label: str = "link"

    def __post_init__(self):
        r = _check_square(self.entries)
        for i in range(r):
            for j in range(i + 1, r):
                if self.entries[i][j] != self.entries[j][i]:
                    raise NonSymmetric(
                        f"lk({i + 1},{j + 1}) = {self.entries[i][j]} but lk({j + 1},{i + 1}) = {self.entries[j][i]}"
                    )

    @property
    def r(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], label: str = "link") -> IntegerLinkingMatrix:
        _check_square(rows)
        r = len(rows)
        cleaned = tuple(tuple(0 if i == j else int(rows[i][j]) for j in range(r)) for i in range(r))
        return cls(cleaned, label)

    @classmethod
    def from_pairs(cls, r: int, lk: Sequence[Sequence[int]], label: str = "link") -> IntegerLinkingMatrix:
        """Build from 1-based ``[i, j, value]`` triples with ``i < j``.

        Unlisted pairs are 0.  Duplicated pairs raise :class:`SchemaError`.
        """
        if isinstance(r, bool) or not isinstance(r, int) or r < 1:
            raise SchemaError(f"'r' must be a positive integer, got {r!r}")
        rows = [[0] * r for _ in range(r)]
        seen = set()
        for item in lk:
            if not isinstance(item, (list, tuple)) or len(item) != 3:
                raise SchemaError(f"linking entry {item!r} is not an [i, j, value] triple")
            if any(isinstance(v, bool) or not isinstance(v, int) for v in item):
                raise SchemaError(f"linking entry {item!r} must contain integers only")
            i, j, v = item
            if not 1 <= i < j <= r:
                raise SchemaError(f"linking entry {list(item)!r} needs 1 <= i < j <= {r}")
            if (i, j) in seen:
                raise SchemaError(f"pair ({i},{j}) listed more than once")
            seen.add((i, j))
            rows[i - 1][j - 1] = rows[j - 1][i - 1] = v
        return cls(tuple(tuple(row) for row in rows), label)

    @classmethod
    def from_json(cls, obj: object, label: str = "link") -> IntegerLinkingMatrix:
        if not isinstance(obj, dict):
            raise SchemaError("linking-matrix document must be a JSON object")
        extra = set(obj) - {"r", "lk", "label"}
        if extra:
            raise SchemaError(f"unknown field(s): {', '.join(sorted(extra))}")
        if "r" not in obj:
            raise SchemaError("missing field 'r'")
        if "lk" not in obj:
            raise SchemaError("missing field 'lk'")
        lk = obj["lk"]
        if not isinstance(lk, list):
            raise SchemaError("'lk' must be a list")
        return cls.from_pairs(obj["r"], lk, str(obj.get("label", label)))

    def to_json(self) -> dict:
        lk = [[i + 1, j + 1, self.entries[i][j]] for i in range(self.r) for j in range(i + 1, self.r)]
        return {"r": self.r, "lk": lk}

    def mod2(self) -> Mod2LinkingMatrix:
        r = self.r
        rows = tuple(tuple(0 if i == j else self.entries[i][j] % 2 for j in range(r)) for i in range(r))
        return Mod2LinkingMatrix(rows, f"topological:{self.label}")

"""Vertex labelings with values in Z_m."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class LabelingError(ValueError):
    pass


@dataclass(frozen=True)
class Labeling:
    """Residues mod ``m``, one per vertex; ``values[0]`` belongs to vertex 1."""

    m: int
    values: tuple[int, ...]

    def __post_init__(self):
        if self.m < 2:
            raise LabelingError(f"modulus must be >= 2, got {self.m}")
        object.__setattr__(self, "values", tuple(int(x) % self.m for x in self.values))

    @classmethod
    def _trusted(cls, m: int, values: tuple[int, ...]) -> "Labeling":
        # values already reduced mod m; skips normalisation on hot paths
        obj = object.__new__(cls)
        object.__setattr__(obj, "m", m)
        object.__setattr__(obj, "values", values)
        return obj

    @classmethod
    def zero(cls, n: int, m: int) -> "Labeling":
        return cls(m, (0,) * n)

    @classmethod
    def parse(cls, text: str, m: int) -> "Labeling":
        """Parse comma-separated residues, e.g. ``1,1,0``."""
        text = text.strip()
        if not text:
            raise LabelingError("empty labeling")
        try:
            vals = [int(x) for x in text.split(",")]
        except ValueError:
            raise LabelingError(f"malformed labeling {text!r}") from None
        return cls(m, tuple(vals))

    @classmethod
    def decode(cls, code: int, n: int, m: int) -> "Labeling":
        """Inverse of :meth:`encode`."""
        vals = []
        for _ in range(n):
            code, r = divmod(code, m)
            vals.append(r)
        return cls(m, tuple(vals))

    def encode(self) -> int:
        """Base-m integer with vertex 1 as the least significant digit."""
        code = 0
        for x in reversed(self.values):
            code = code * self.m + x
        return code

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, v: int) -> int:
        """Label of vertex ``v`` (1-indexed)."""
        return self.values[v - 1]

    def is_zero(self) -> bool:
        return not any(self.values)

    def with_values(self, values: Iterable[int]) -> "Labeling":
        return Labeling(self.m, tuple(values))

    def __str__(self) -> str:
        return ",".join(map(str, self.values))


def all_labelings(n: int, m: int):
    """Every labeling of ``n`` vertices in base-m numeric order."""
    for code in range(m ** n):
        yield Labeling.decode(code, n, m)


def format_sequence(seq: Sequence[int]) -> str:
    return " ".join(map(str, seq))


def parse_sequence(text: str) -> list[int]:
    return [int(x) for x in text.split()]

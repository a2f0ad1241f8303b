"""Integer partitions: SL2-types, transposes and the closeness test."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from itertools import zip_longest

__all__ = ["Partition", "transpose", "is_close", "associated_partition_of"]


class Partition:
    """A weakly decreasing tuple of positive integers.

    Parts are sorted on construction, so any iterable of positive integers is
    accepted.  Indexing past the last part reads as 0.
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(sorted((int(x) for x in parts), reverse=True))
        if parts and parts[-1] < 1:
            raise ValueError(f"partition parts must be positive, got {parts}")
        self.parts = parts

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError("negative partition index")
        return self.parts[i] if i < len(self.parts) else 0

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __eq__(self, other) -> bool:
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self.parts == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition({self.parts!r})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"

    def size(self) -> int:
        return sum(self.parts)

    def transpose(self) -> Partition:
        return transpose(self)


def transpose(lam: Partition | Iterable[int]) -> Partition:
    """Conjugate partition: the ``j``-th part counts rows of length > ``j``."""
    parts = lam.parts if isinstance(lam, Partition) else Partition(lam).parts
    if not parts:
        return Partition()
    return Partition(sum(1 for p in parts if p > j) for j in range(parts[0]))


def is_close(lam: Partition | Iterable[int], mu: Partition | Iterable[int]) -> bool:
    """``|lam_i - mu_i| <= 1`` for every ``i``, missing parts read as 0."""
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    mu = mu if isinstance(mu, Partition) else Partition(mu)
    return all(abs(x - y) <= 1 for x, y in zip_longest(lam.parts, mu.parts, fillvalue=0))


def associated_partition_of(p) -> Partition:
    """Associated partition of a parameter, taken as the transpose of its SL2-type."""
    from .parameters import sl2_type

    return transpose(sl2_type(p))

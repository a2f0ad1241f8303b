"""Formal parameters of unitary representations of general linear groups.

A parameter is a finite formal sum ``a1 L1 x S_d1 + ... + ar Lr x S_dr`` where
each symbol ``L`` is either the parameter ``L(delta)`` of a discrete series of
``G_k`` or a complementary-series symbol ``L(delta, s)`` with ``0 < s < 1/2``.
Everything here is immutable and exact (``fractions.Fraction`` for ``s``).
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from fractions import Fraction
from numbers import Rational

from .partitions import Partition

__all__ = [
    "Kind",
    "EtaSymbol",
    "Block",
    "UnitaryParameter",
    "ZERO",
    "FIELD_PROFILES",
    "make_discrete",
    "make_complementary",
    "dual",
    "add",
    "subtract",
    "dimension",
    "nt_measure",
    "sl2_type",
    "is_generic",
    "is_arthur_type",
    "check_field_profile",
]

HALF = Fraction(1, 2)

# Largest base dimension of a discrete series over each field profile.
FIELD_PROFILES: dict[str, int | None] = {"none": None, "real": 2, "complex": 1}


class Kind(Enum):
    DISCRETE = "discrete"
    COMPLEMENTARY = "complementary"


@dataclass(frozen=True, slots=True)
class EtaSymbol:
    """A symbol ``L(delta)`` or ``L(delta, s)``.

    ``label`` names the discrete series ``delta`` opaquely and ``base_dim`` is
    the ``k`` of the group ``G_k`` carrying it.  ``s`` is ``None`` for discrete
    symbols.  Use :func:`make_discrete` / :func:`make_complementary` to build
    validated instances.
    """

    label: str
    base_dim: int = 1
    s: Fraction | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.base_dim, int) or self.base_dim < 1:
            raise ValueError(f"base_dim must be a positive integer, got {self.base_dim!r}")
        if self.s is not None:
            if not isinstance(self.s, Fraction):
                object.__setattr__(self, "s", _as_fraction(self.s))
            if not 0 < self.s < HALF:
                raise ValueError(f"s must satisfy 0 < s < 1/2, got {self.s}")

    @property
    def kind(self) -> Kind:
        return Kind.DISCRETE if self.s is None else Kind.COMPLEMENTARY

    @property
    def is_discrete(self) -> bool:
        return self.s is None

    @property
    def is_complementary(self) -> bool:
        return self.s is not None

    @property
    def weight(self) -> int:
        """Rows contributed to the SL2-type per unit of ``d``: ``k`` or ``2k``."""
        return self.base_dim if self.s is None else 2 * self.base_dim

    def sort_key(self) -> tuple:
        # discrete before complementary, then label, base_dim, s
        if self.s is None:
            return (0, self.label, self.base_dim, Fraction(0))
        return (1, self.label, self.base_dim, self.s)

    def __lt__(self, other: EtaSymbol) -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        parts = [self.label]
        if self.base_dim != 1:
            parts.append(f"k={self.base_dim}")
        if self.s is not None:
            parts.append(f"s={self.s.numerator}/{self.s.denominator}")
        return "L(" + ",".join(parts) + ")"


def _as_fraction(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError("s must be an exact rational, not a float")
    if isinstance(value, (int, Rational, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def check_field_profile(eta: EtaSymbol, field: str = "none") -> None:
    """Raise ``ValueError`` if ``eta`` has no discrete series over ``field``.

    Over the reals discrete series live on ``G_1`` and ``G_2``; over the
    complex numbers only on ``G_1``.  The ``"none"`` profile accepts anything.
    """
    try:
        bound = FIELD_PROFILES[field]
    except KeyError:
        raise ValueError(f"unknown field profile {field!r}") from None
    if bound is not None and eta.base_dim > bound:
        raise ValueError(
            f"{eta}: no discrete series of G_{eta.base_dim} over the {field} field"
        )


def make_discrete(label: str, base_dim: int = 1, field: str = "none") -> EtaSymbol:
    eta = EtaSymbol(str(label), base_dim)
    check_field_profile(eta, field)
    return eta


def make_complementary(label: str, base_dim: int, s, field: str = "none") -> EtaSymbol:
    eta = EtaSymbol(str(label), base_dim, _as_fraction(s))
    check_field_profile(eta, field)
    return eta


@lru_cache(maxsize=4096)
def dual(eta: EtaSymbol) -> EtaSymbol:
    """``L(delta, s) -> L(delta, 1/2 - s)``; undefined on discrete symbols."""
    if eta.s is None:
        raise ValueError(f"dual is only defined on complementary symbols, got {eta}")
    return EtaSymbol(eta.label, eta.base_dim, HALF - eta.s)


@dataclass(frozen=True, slots=True)
class Block:
    eta: EtaSymbol
    d: int
    mult: int = 1

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError(f"d must be >= 1, got {self.d}")
        if self.mult < 1:
            raise ValueError(f"mult must be >= 1, got {self.mult}")

    def key(self) -> tuple[EtaSymbol, int]:
        return (self.eta, self.d)

    def sort_key(self) -> tuple:
        return (self.eta.sort_key(), self.d)


def _block_sort_key(key: tuple[EtaSymbol, int]) -> tuple:
    return (key[0].sort_key(), key[1])


@dataclass(frozen=True, slots=True)
class UnitaryParameter:
    """Canonical multiset of ``(eta, d)`` pairs with multiplicities.

    Construct through :meth:`from_counts`, :meth:`from_blocks` or
    :meth:`of`; the raw ``blocks`` tuple is always sorted with one entry per
    ``(eta, d)``.
    """

    blocks: tuple[Block, ...] = ()
    _counts: Mapping[tuple[EtaSymbol, int], int] = field(
        default=None, compare=False, hash=False, repr=False
    )

    def __post_init__(self) -> None:
        counts: dict[tuple[EtaSymbol, int], int] = {}
        for b in self.blocks:
            counts[b.key()] = counts.get(b.key(), 0) + b.mult
        canonical = tuple(
            Block(eta, d, counts[(eta, d)]) for eta, d in sorted(counts, key=_block_sort_key)
        )
        object.__setattr__(self, "blocks", canonical)
        object.__setattr__(self, "_counts", counts)

    @classmethod
    def from_counts(cls, counts: Mapping[tuple[EtaSymbol, int], int]) -> UnitaryParameter:
        """Build from ``{(eta, d): mult}``; zero multiplicities and ``d = 0`` are dropped."""
        blocks = []
        for (eta, d), m in counts.items():
            if m < 0:
                raise ValueError(f"negative multiplicity {m} for {eta} x S{d}")
            if m and d:
                blocks.append(Block(eta, d, m))
        return cls(tuple(blocks))

    @classmethod
    def from_blocks(cls, blocks: Iterable[Block]) -> UnitaryParameter:
        return cls(tuple(blocks))

    @classmethod
    def of(cls, *terms: tuple) -> UnitaryParameter:
        """Shorthand: ``UnitaryParameter.of((eta, d), (eta2, d2, mult), ...)``."""
        counts: dict[tuple[EtaSymbol, int], int] = {}
        for term in terms:
            eta, d, *rest = term
            m = rest[0] if rest else 1
            counts[(eta, d)] = counts.get((eta, d), 0) + m
        return cls.from_counts(counts)

    @property
    def counts(self) -> Mapping[tuple[EtaSymbol, int], int]:
        return self._counts

    def count(self, eta: EtaSymbol, d: int) -> int:
        return self._counts.get((eta, d), 0)

    def symbols(self) -> set[EtaSymbol]:
        return {b.eta for b in self.blocks}

    def max_d(self) -> int:
        return max((b.d for b in self.blocks), default=0)

    def num_instances(self) -> int:
        return sum(b.mult for b in self.blocks)

    def instances(self) -> Iterator[tuple[EtaSymbol, int]]:
        """Block instances in canonical order, each block repeated ``mult`` times."""
        for b in self.blocks:
            for _ in range(b.mult):
                yield (b.eta, b.d)

    def is_zero(self) -> bool:
        return not self.blocks

    def __bool__(self) -> bool:
        return bool(self.blocks)

    def __add__(self, other: UnitaryParameter) -> UnitaryParameter:
        return add(self, other)

    def __iter__(self) -> Iterator[Block]:
        return iter(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __str__(self) -> str:
        if not self.blocks:
            return "0"
        terms = []
        for b in self.blocks:
            prefix = f"{b.mult}*" if b.mult != 1 else ""
            terms.append(f"{prefix}{b.eta} x S{b.d}")
        return " + ".join(terms)


ZERO = UnitaryParameter()


def add(p: UnitaryParameter, q: UnitaryParameter) -> UnitaryParameter:
    counts = dict(p.counts)
    for key, m in q.counts.items():
        counts[key] = counts.get(key, 0) + m
    return UnitaryParameter.from_counts(counts)


def subtract(p: UnitaryParameter, q: UnitaryParameter) -> UnitaryParameter | None:
    """``p - q``, or ``None`` when ``q`` is not a sub-multiset of ``p``."""
    counts = dict(p.counts)
    for key, m in q.counts.items():
        left = counts.get(key, 0) - m
        if left < 0:
            return None
        counts[key] = left
    return UnitaryParameter.from_counts(counts)


def dimension(p: UnitaryParameter) -> int:
    return sum(b.mult * b.d * b.eta.weight for b in p.blocks)


def nt_measure(p: UnitaryParameter) -> int:
    """Sum of ``d - 1`` over block instances."""
    return sum(b.mult * (b.d - 1) for b in p.blocks)


def sl2_type(p: UnitaryParameter) -> Partition:
    """The SL2-type: each instance contributes ``d`` repeated ``k`` (or ``2k``) times."""
    parts: list[int] = []
    for b in p.blocks:
        parts.extend([b.d] * (b.mult * b.eta.weight))
    return Partition(parts)


def is_generic(p: UnitaryParameter) -> bool:
    return all(b.d == 1 for b in p.blocks)


def is_arthur_type(p: UnitaryParameter) -> bool:
    return all(b.eta.is_discrete for b in p.blocks)

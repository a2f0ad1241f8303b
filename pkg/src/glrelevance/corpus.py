"""Corpus generation and the brute-force/criterion self-test."""

from __future__ import annotations

import json
import logging
import os
import random
import time
from collections.abc import Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .dsl import ParseError, parse_symbol, print_parameter
from .parameters import (
    EtaSymbol,
    UnitaryParameter,
    dimension,
    is_arthur_type,
    is_generic,
    sl2_type,
)
from .partitions import is_close
from .relevance import (
    DEFAULT_INSTANCE_CAP,
    ResourceLimitError,
    bruteforce_witnesses,
    d_closure,
    find_witness,
    is_relevant_criterion,
    lambda_range,
    lambda_sum,
    proof_identity_check,
    verify_witness,
)

__all__ = [
    "CorpusSpec",
    "SelftestSummary",
    "DEFAULT_CARDINALITY_CAP",
    "WORKERS_ENV",
    "load_spec",
    "desk_spec",
    "corpus_symbols",
    "count_parameters",
    "enumerate_parameters",
    "check_pair",
    "selftest_equivalence",
    "INVARIANTS",
]

log = logging.getLogger(__name__)

DEFAULT_CARDINALITY_CAP = 100_000
WORKERS_ENV = "GLRELEVANCE_WORKERS"

INVARIANTS = (
    "equivalence",
    "symmetry",
    "generic",
    "witness",
    "proof_identities",
    "closeness",
    "arthur",
    "vanishing",
)


@dataclass(frozen=True)
class CorpusSpec:
    """Bounds for an exhaustive corpus.

    ``max_blocks`` bounds the number of distinct ``(eta, d)`` blocks and
    ``max_dim`` the dimension; either may be ``None`` for no bound.  The
    D-closure of the complementary symbols in ``label_pool`` is always
    included.  ``sample_pairs`` (with ``seed``) restricts the self-test to a
    random subset of the ordered pairs.
    """

    label_pool: tuple[EtaSymbol, ...]
    max_d: int
    max_mult: int
    max_blocks: int | None = None
    max_dim: int | None = None
    corank_one: bool = False
    seed: int = 0
    sample_pairs: int | None = None
    cardinality_cap: int = DEFAULT_CARDINALITY_CAP
    instance_cap: int = DEFAULT_INSTANCE_CAP

    def __post_init__(self) -> None:
        for name in ("max_d", "max_mult", "max_blocks", "max_dim", "sample_pairs"):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise ValueError(f"{name} must be >= 1, got {value}")
        object.__setattr__(self, "label_pool", tuple(self.label_pool))

    def to_dict(self) -> dict:
        doc = asdict(self)
        doc["label_pool"] = [str(eta) for eta in self.label_pool]
        return doc

    @classmethod
    def from_dict(cls, doc: dict) -> CorpusSpec:
        doc = dict(doc)
        unknown = set(doc) - set(cls.__dataclass_fields__)
        if unknown:
            raise ValueError(f"unknown corpus spec fields: {sorted(unknown)}")
        pool = []
        for i, text in enumerate(doc.pop("label_pool", [])):
            try:
                pool.append(parse_symbol(text))
            except ParseError as exc:
                raise ValueError(f"label_pool[{i}]: {exc}") from None
        return cls(label_pool=tuple(pool), **doc)


def load_spec(path: str | Path) -> CorpusSpec:
    return CorpusSpec.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


def desk_spec() -> CorpusSpec:
    """Two discrete symbols (k = 1, 2) and two complementary ones (s = 1/4, 1/3)."""
    pool = (
        parse_symbol("L(a)"),
        parse_symbol("L(b,k=2)"),
        parse_symbol("L(c,s=1/4)"),
        parse_symbol("L(e,s=1/3)"),
    )
    return CorpusSpec(label_pool=pool, max_d=4, max_mult=2, max_dim=8)


def corpus_symbols(spec: CorpusSpec) -> list[EtaSymbol]:
    return d_closure(spec.label_pool)


def _classes(spec: CorpusSpec) -> list[tuple[EtaSymbol, int]]:
    return [(eta, d) for eta in corpus_symbols(spec) for d in range(1, spec.max_d + 1)]


def count_parameters(spec: CorpusSpec) -> int:
    """Number of parameters :func:`enumerate_parameters` yields, by dynamic programming."""
    classes = _classes(spec)
    if spec.max_dim is None and spec.max_blocks is None:
        return (spec.max_mult + 1) ** len(classes)
    # state: (dim, blocks) -> count
    states = {(0, 0): 1}
    for eta, d in classes:
        w = eta.weight * d
        nxt: dict[tuple[int, int], int] = {}
        for (dim, nb), n in states.items():
            for m in range(spec.max_mult + 1):
                key = (dim + m * w, nb + (m > 0))
                if spec.max_dim is not None and key[0] > spec.max_dim:
                    break
                if spec.max_blocks is not None and key[1] > spec.max_blocks:
                    break
                nxt[key] = nxt.get(key, 0) + n
        states = nxt
    return sum(states.values())


def enumerate_parameters(spec: CorpusSpec) -> Iterator[UnitaryParameter]:
    """Every canonical parameter within the bounds, each exactly once.

    Order: colexicographic in the multiplicity vector over the ``(eta, d)``
    classes in canonical block order, so the zero parameter comes first.
    Raises :class:`ResourceLimitError` up front if the corpus is too large.
    """
    total = count_parameters(spec)
    if total > spec.cardinality_cap:
        raise ResourceLimitError(
            f"corpus has {total} parameters, above the cap of {spec.cardinality_cap}"
        )
    classes = _classes(spec)
    max_dim = spec.max_dim if spec.max_dim is not None else float("inf")
    max_blocks = spec.max_blocks if spec.max_blocks is not None else len(classes)
    counts: dict[tuple[EtaSymbol, int], int] = {}

    def rec(i: int, dim: int, nb: int) -> Iterator[UnitaryParameter]:
        if i < 0:
            yield UnitaryParameter.from_counts(counts)
            return
        eta, d = classes[i]
        w = eta.weight * d
        for m in range(spec.max_mult + 1):
            if dim + m * w > max_dim or nb + (m > 0) > max_blocks:
                break
            if m:
                counts[(eta, d)] = m
            yield from rec(i - 1, dim + m * w, nb + (m > 0))
        counts.pop((eta, d), None)

    yield from rec(len(classes) - 1, 0, 0)


# -- self-test ---------------------------------------------------------------


@dataclass
class SelftestSummary:
    parameters: int = 0
    pairs: int = 0
    relevant: int = 0
    generic_pairs: int = 0
    violations: dict[str, int] = field(default_factory=lambda: dict.fromkeys(INVARIANTS, 0))
    first_counterexample: str | None = None
    elapsed: float = field(default=0.0, compare=False)

    @property
    def ok(self) -> bool:
        return not any(self.violations.values())

    def to_dict(self) -> dict:
        # elapsed is left out so reruns are byte-identical
        return {
            "parameters": self.parameters,
            "pairs": self.pairs,
            "relevant": self.relevant,
            "generic_pairs": self.generic_pairs,
            "violations": dict(self.violations),
            "first_counterexample": self.first_counterexample,
            "ok": self.ok,
        }


def check_pair(p: UnitaryParameter, q: UnitaryParameter, cap: int = DEFAULT_INSTANCE_CAP) -> tuple[bool, list[str]]:
    """Decide ``(p, q)`` and return ``(relevant, violated invariant names)``."""
    bad: list[str] = []
    forward = is_relevant_criterion(p, q)
    backward = is_relevant_criterion(q, p)
    witnesses = bruteforce_witnesses(p, q, cap)
    first = next(witnesses, None)
    brute = first is not None
    if forward != brute:
        bad.append("equivalence")
    if forward != backward:
        bad.append("symmetry")
    if is_generic(p) and is_generic(q) and not (forward and brute):
        bad.append("generic")

    w = find_witness(p, q)
    if (w is not None) != brute or (w is not None and not verify_witness(p, q, w)):
        bad.append("witness")
    elif w is not None and not proof_identity_check(p, q, w):
        bad.append("proof_identities")

    if brute and not is_close(sl2_type(p), sl2_type(q)):
        bad.append("closeness")
    if brute and is_arthur_type(p) and is_arthur_type(q):
        if any("K" in x.assignment for x in (first, w, *witnesses) if x is not None):
            bad.append("arthur")

    symbols, top = lambda_range(p, q)
    fresh = EtaSymbol("__absent__")
    if lambda_sum(fresh, 1, p, q) or any(
        lambda_sum(eta, top + 1, p, q) or lambda_sum(eta, top + 1, q, p) for eta in symbols
    ):
        bad.append("vanishing")
    return brute, bad


def _pairs(spec: CorpusSpec, params: Sequence[UnitaryParameter]) -> list[tuple[int, int]]:
    n = len(params)
    dims = [dimension(p) for p in params]
    pairs = [
        (i, j)
        for i in range(n)
        for j in range(n)
        if not spec.corank_one or dims[i] == dims[j] + 1
    ]
    if spec.sample_pairs is not None and spec.sample_pairs < len(pairs):
        pairs = sorted(random.Random(spec.seed).sample(pairs, spec.sample_pairs))
    return pairs


def _sweep(spec: CorpusSpec, pairs: Sequence[tuple[int, int]]) -> SelftestSummary:
    params = list(enumerate_parameters(spec))
    summary = SelftestSummary(parameters=len(params))
    for i, j in pairs:
        p, q = params[i], params[j]
        relevant, bad = check_pair(p, q, spec.instance_cap)
        summary.pairs += 1
        summary.relevant += relevant
        summary.generic_pairs += is_generic(p) and is_generic(q)
        for name in bad:
            summary.violations[name] += 1
        if bad and summary.first_counterexample is None:
            summary.first_counterexample = (
                f"pi = {print_parameter(p)} ; sigma = {print_parameter(q)} ; violated: {', '.join(bad)}"
            )
    return summary


def _merge(parts: Sequence[SelftestSummary]) -> SelftestSummary:
    out = SelftestSummary(parameters=parts[0].parameters if parts else 0)
    for part in parts:
        out.pairs += part.pairs
        out.relevant += part.relevant
        out.generic_pairs += part.generic_pairs
        for name, n in part.violations.items():
            out.violations[name] += n
        # chunks arrive in pair order, so the first one found is the earliest
        if out.first_counterexample is None:
            out.first_counterexample = part.first_counterexample
    return out


def default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV)
    if raw:
        return max(1, int(raw))
    return os.cpu_count() or 1


def selftest_equivalence(spec: CorpusSpec, workers: int | None = None) -> SelftestSummary:
    """Check every relevance invariant on every (or a sampled set of) corpus pair."""
    start = time.perf_counter()
    params = list(enumerate_parameters(spec))
    pairs = _pairs(spec, params)
    workers = workers or default_workers()
    if workers <= 1 or len(pairs) < 1000:
        summary = _sweep(spec, pairs)
    else:
        size = -(-len(pairs) // (workers * 4))
        chunks = [pairs[k:k + size] for k in range(0, len(pairs), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            summary = _merge(list(pool.map(_sweep, [spec] * len(chunks), chunks)))
    summary.parameters = len(params)
    summary.elapsed = time.perf_counter() - start
    log.info("selftest: %d pairs in %.1fs", summary.pairs, summary.elapsed)
    return summary

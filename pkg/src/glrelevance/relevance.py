"""Deciding relevance of two parameters.

Two independent routes are provided:

* :func:`is_relevant_bruteforce` searches directly for a partition of the
  block instances of ``p`` into ``I`` (shift ``d -> d+1``), ``J`` (``d -> d-1``)
  and ``K`` (apply the duality ``D``, complementary symbols only) whose image
  leaves a generic remainder inside ``q``.
* :func:`is_relevant_criterion` checks that every alternating sum
  :func:`lambda_sum` is non-negative in both directions.

:func:`find_witness` builds a certificate greedily by peeling the block of
largest ``d``, and :func:`proof_identity_check` checks that the alternating
sums of a certificate collapse to the expected ``J``/``K`` counts.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from typing import Literal

from .parameters import EtaSymbol, UnitaryParameter, dual, is_generic

__all__ = [
    "DEFAULT_INSTANCE_CAP",
    "ResourceLimitError",
    "Witness",
    "LambdaQuery",
    "multiplicity",
    "lambda_sum",
    "evaluate",
    "d_closure",
    "lambda_range",
    "lambda_table",
    "first_negative_lambda",
    "is_relevant_criterion",
    "is_relevant_bruteforce",
    "bruteforce_witnesses",
    "find_witness",
    "verify_witness",
    "proof_identity_check",
]

DEFAULT_INSTANCE_CAP = 20

Role = Literal["I", "J", "K"]
ROLES: tuple[Role, ...] = ("I", "J", "K")


class ResourceLimitError(RuntimeError):
    """An exhaustive search was refused because the input exceeds its cap."""


@dataclass(frozen=True, slots=True)
class LambdaQuery:
    """One alternating sum: ``forward`` means ``Lambda(eta, a; p, q)``."""

    eta: EtaSymbol
    a: int
    forward: bool = True

    def __post_init__(self) -> None:
        if self.a < 1:
            raise ValueError(f"a must be >= 1, got {self.a}")


@dataclass(frozen=True, slots=True)
class Witness:
    """A certificate of relevance of ``p`` to ``q``.

    ``assignment[i]`` is the role of the ``i``-th block instance of ``p`` in
    canonical order (see :meth:`UnitaryParameter.instances`).
    """

    assignment: tuple[Role, ...]
    generic_remainder: UnitaryParameter

    def indices(self, role: Role) -> tuple[int, ...]:
        return tuple(i for i, r in enumerate(self.assignment) if r == role)

    def role_counts(self, p: UnitaryParameter) -> dict[tuple[EtaSymbol, int], dict[str, int]]:
        """Per ``(eta, d)`` class of ``p``, how many instances got each role."""
        self._check_domain(p)
        out: dict[tuple[EtaSymbol, int], dict[str, int]] = {}
        for (eta, d), role in zip(p.instances(), self.assignment):
            slot = out.setdefault((eta, d), {"I": 0, "J": 0, "K": 0})
            slot[role] += 1
        return out

    def _check_domain(self, p: UnitaryParameter) -> None:
        if len(self.assignment) != p.num_instances():
            raise ValueError(
                f"witness assigns {len(self.assignment)} instances but p has {p.num_instances()}"
            )
        bad = set(self.assignment) - set(ROLES)
        if bad:
            raise ValueError(f"unknown roles in assignment: {sorted(bad)}")


def multiplicity(eta: EtaSymbol, a: int, p: UnitaryParameter) -> int:
    if a < 1:
        raise ValueError(f"a must be >= 1, got {a}")
    return p.count(eta, a)


def lambda_sum(eta: EtaSymbol, a: int, p: UnitaryParameter, q: UnitaryParameter) -> int:
    """``Lambda(eta, a; p, q)``.

    Discrete ``eta``: ``m(eta,a;p) - m(eta,a+1;q) + m(eta,a+2;p) - ...``.
    Complementary ``eta``: the ``p`` terms run over ``eta, D(eta), eta, ...`` at
    ``a, a+1, a+2, ...`` and the ``q`` terms over the same symbols at
    ``a+1, a+2, ...``.
    """
    if a < 1:
        raise ValueError(f"a must be >= 1, got {a}")
    top = max(p.max_d(), q.max_d())
    total = 0
    if eta.is_discrete:
        for b in range(a, top + 1, 2):
            total += p.count(eta, b) - q.count(eta, b + 1)
        return total
    symbols = (eta, dual(eta))
    for j in range(0, top - a + 1):
        sym = symbols[j % 2]
        total += p.count(sym, a + j) - q.count(sym, a + j + 1)
    return total


def evaluate(query: LambdaQuery, p: UnitaryParameter, q: UnitaryParameter) -> int:
    return lambda_sum(query.eta, query.a, p, q) if query.forward else lambda_sum(query.eta, query.a, q, p)


def d_closure(symbols: Iterable[EtaSymbol]) -> list[EtaSymbol]:
    """Symbols together with the duals of the complementary ones, sorted."""
    out = set()
    for eta in symbols:
        out.add(eta)
        if eta.is_complementary:
            out.add(dual(eta))
    return sorted(out, key=EtaSymbol.sort_key)


def lambda_range(p: UnitaryParameter, q: UnitaryParameter) -> tuple[list[EtaSymbol], int]:
    """Symbols and the bound on ``a`` outside which every alternating sum is 0."""
    return d_closure(p.symbols() | q.symbols()), max(p.max_d(), q.max_d())


def _queries(p: UnitaryParameter, q: UnitaryParameter) -> Iterator[LambdaQuery]:
    symbols, top = lambda_range(p, q)
    for eta in symbols:
        for a in range(1, top + 1):
            yield LambdaQuery(eta, a, True)
            yield LambdaQuery(eta, a, False)


def lambda_table(p: UnitaryParameter, q: UnitaryParameter) -> dict[LambdaQuery, int]:
    """All nonzero alternating sums, both directions."""
    table = {}
    for query in _queries(p, q):
        value = evaluate(query, p, q)
        if value:
            table[query] = value
    return table


def first_negative_lambda(p: UnitaryParameter, q: UnitaryParameter) -> tuple[LambdaQuery, int] | None:
    for query in _queries(p, q):
        value = evaluate(query, p, q)
        if value < 0:
            return query, value
    return None


def is_relevant_criterion(p: UnitaryParameter, q: UnitaryParameter) -> bool:
    return first_negative_lambda(p, q) is None


# -- brute force -------------------------------------------------------------


def _splits(mult: int, allow_k: bool) -> Iterator[tuple[int, int, int]]:
    # (nI, nJ, nK), lexicographically favouring I, then J
    for n_i in range(mult, -1, -1):
        rest = mult - n_i
        if allow_k:
            for n_j in range(rest, -1, -1):
                yield n_i, n_j, rest - n_j
        else:
            yield n_i, rest, 0


def _images(eta: EtaSymbol, d: int, split: tuple[int, int, int]):
    n_i, n_j, n_k = split
    if n_i:
        yield (eta, d + 1), n_i
    if n_j and d > 1:
        yield (eta, d - 1), n_j
    if n_k:
        yield (dual(eta), d), n_k


def bruteforce_witnesses(
    p: UnitaryParameter, q: UnitaryParameter, cap: int = DEFAULT_INSTANCE_CAP
) -> Iterator[Witness]:
    """Every witness of relevance of ``p`` to ``q``, one per multiplicity split.

    Identical instances are interchangeable, so each ``(eta, d)`` class is
    split into ``I``/``J``/``K`` counts rather than enumerated per instance;
    within a class the instances are listed ``I`` first, then ``J``, then ``K``.
    """
    if p.num_instances() > cap:
        raise ResourceLimitError(
            f"{p.num_instances()} block instances exceeds the brute-force cap of {cap}"
        )
    blocks = p.blocks
    remaining = dict(q.counts)
    chosen: list[tuple[int, int, int]] = []

    def search(i: int) -> Iterator[Witness]:
        if i == len(blocks):
            if all(d == 1 for (_, d), m in remaining.items() if m):
                psi0 = UnitaryParameter.from_counts(remaining)
                yield Witness(_expand(blocks, chosen), psi0)
            return
        b = blocks[i]
        for split in _splits(b.mult, b.eta.is_complementary):
            taken = []
            ok = True
            for key, n in _images(b.eta, b.d, split):
                have = remaining.get(key, 0)
                if have < n:
                    ok = False
                    break
                remaining[key] = have - n
                taken.append((key, n))
            if ok:
                chosen.append(split)
                yield from search(i + 1)
                chosen.pop()
            for key, n in taken:
                remaining[key] += n

    yield from search(0)


def _expand(blocks, splits) -> tuple[Role, ...]:
    out: list[Role] = []
    for n_i, n_j, n_k in splits:
        out.extend(["I"] * n_i + ["J"] * n_j + ["K"] * n_k)
    return tuple(out)


def is_relevant_bruteforce(
    p: UnitaryParameter, q: UnitaryParameter, cap: int = DEFAULT_INSTANCE_CAP
) -> bool:
    return next(bruteforce_witnesses(p, q, cap), None) is not None


# -- constructive witness ----------------------------------------------------


def find_witness(
    p: UnitaryParameter, q: UnitaryParameter, cap: int | None = None
) -> Witness | None:
    """Build a witness by repeatedly peeling an instance of ``p`` with largest ``d``.

    With ``d1`` the current largest ``d`` left in ``p``:

    * if ``q`` still holds some ``eta' x S_d'`` with ``d' > d1``, then ``d'``
      must be ``d1 + 1`` and ``eta'`` must label an instance of ``p`` at
      ``d1``; that instance goes to ``I``;
    * otherwise, if ``d1 == 1`` everything left is generic and goes to ``J``;
    * otherwise the instance goes to ``K`` when ``D(eta) x S_d1`` is still in
      ``q``, else to ``J`` when ``eta x S_{d1-1}`` is.

    Ties are broken by the canonical block order.  Returns ``None`` as soon
    as no step applies, which happens exactly when the pair is not relevant.
    """
    if cap is not None and p.num_instances() > cap:
        raise ResourceLimitError(
            f"{p.num_instances()} block instances exceeds the witness cap of {cap}"
        )
    p_left = dict(p.counts)
    q_left = dict(q.counts)
    roles: dict[tuple[EtaSymbol, int], dict[str, int]] = {
        key: {"I": 0, "J": 0, "K": 0} for key in p.counts
    }

    def take(counts, key) -> bool:
        if counts.get(key, 0) < 1:
            return False
        counts[key] -= 1
        return True

    while True:
        live = [key for key, m in p_left.items() if m]
        q_top = max((d for (_, d), m in q_left.items() if m), default=0)
        if not live:
            if q_top > 1:
                return None
            break
        d1 = max(d for _, d in live)
        top = sorted((eta for eta, d in live if d == d1), key=EtaSymbol.sort_key)
        if q_top > d1:
            if q_top > d1 + 1:
                return None
            match = [eta for eta in top if q_left.get((eta, d1 + 1), 0)]
            if not match:
                return None
            eta = match[0]
            take(p_left, (eta, d1))
            take(q_left, (eta, d1 + 1))
            roles[(eta, d1)]["I"] += 1
        elif d1 == 1:
            for key in live:
                roles[key]["J"] += p_left[key]
                p_left[key] = 0
        else:
            eta = top[0]
            take(p_left, (eta, d1))
            if eta.is_complementary and take(q_left, (dual(eta), d1)):
                roles[(eta, d1)]["K"] += 1
            elif take(q_left, (eta, d1 - 1)):
                roles[(eta, d1)]["J"] += 1
            else:
                return None

    assignment: list[Role] = []
    for b in p.blocks:
        r = roles[b.key()]
        assignment.extend(["I"] * r["I"] + ["J"] * r["J"] + ["K"] * r["K"])
    return Witness(tuple(assignment), UnitaryParameter.from_counts(q_left))


def image(p: UnitaryParameter, w: Witness) -> UnitaryParameter:
    """The sum of the shifted/dualized instances of ``p`` prescribed by ``w``."""
    w._check_domain(p)
    counts: dict[tuple[EtaSymbol, int], int] = {}
    for (eta, d), role in zip(p.instances(), w.assignment):
        if role == "I":
            key = (eta, d + 1)
        elif role == "J":
            if d == 1:
                continue
            key = (eta, d - 1)
        else:
            if eta.is_discrete:
                raise ValueError(f"discrete symbol {eta} assigned to K")
            key = (dual(eta), d)
        counts[key] = counts.get(key, 0) + 1
    return UnitaryParameter.from_counts(counts)


def verify_witness(p: UnitaryParameter, q: UnitaryParameter, w: Witness) -> bool:
    """Check the reconstruction ``q = image(p, w) + remainder`` with a generic remainder.

    Raises ``ValueError`` if the assignment does not cover the instances of ``p``.
    """
    w._check_domain(p)
    for (eta, _), role in zip(p.instances(), w.assignment):
        if role == "K" and eta.is_discrete:
            return False
    if not is_generic(w.generic_remainder):
        return False
    return image(p, w) + w.generic_remainder == q


def proof_identity_check(p: UnitaryParameter, q: UnitaryParameter, w: Witness) -> bool:
    """Check that each ``Lambda(eta, a; p, q)`` equals the role counts it should.

    For discrete ``eta`` the sum collapses to ``m_J(eta, a)``; for
    complementary ``eta`` to ``m_J(eta, a) + m_K(eta, a) + m_J(D(eta), a+1)``,
    all counted on the instances of ``p``.
    """
    if not verify_witness(p, q, w):
        raise ValueError("proof_identity_check needs a valid witness")
    roles = w.role_counts(p)

    def m(role: str, eta: EtaSymbol, a: int) -> int:
        return roles.get((eta, a), {}).get(role, 0)

    symbols, top = lambda_range(p, q)
    for eta in symbols:
        for a in range(1, top + 2):
            lhs = lambda_sum(eta, a, p, q)
            if eta.is_discrete:
                rhs = m("J", eta, a)
            else:
                rhs = m("J", eta, a) + m("K", eta, a) + m("J", dual(eta), a + 1)
            if lhs != rhs:
                return False
    return True

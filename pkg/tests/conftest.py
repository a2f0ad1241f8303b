import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from glrelevance.parameters import EtaSymbol, UnitaryParameter, dual, make_complementary, make_discrete

A = make_discrete("a", 1)
B = make_discrete("b", 1)
B2 = make_discrete("b", 2)
C14 = make_complementary("c", 1, Fraction(1, 4))
A13 = make_complementary("a", 1, Fraction(1, 3))
A16 = dual(A13)

SYMBOL_POOL = [A, B, B2, C14, A13, A16, make_complementary("e", 2, Fraction(1, 5))]


def random_symbol(rng: random.Random) -> EtaSymbol:
    label = rng.choice("abc")
    k = rng.randint(1, 3)
    if rng.random() < 0.5:
        return EtaSymbol(label, k)
    den = rng.randint(3, 12)
    num = rng.randint(1, (den - 1) // 2)
    # num/den < 1/2 since 2*num <= den - 1
    return EtaSymbol(label, k, Fraction(num, den))


def random_parameter(rng: random.Random, pool=None, max_blocks=4, max_d=5, max_mult=3) -> UnitaryParameter:
    counts = {}
    for _ in range(rng.randint(0, max_blocks)):
        eta = rng.choice(pool) if pool else random_symbol(rng)
        key = (eta, rng.randint(1, max_d))
        counts[key] = counts.get(key, 0) + rng.randint(1, max_mult)
    return UnitaryParameter.from_counts(counts)


labels = st.sampled_from(["a", "b", "c", "delta_1"])
rationals = st.integers(min_value=3, max_value=40).flatmap(
    lambda den: st.integers(min_value=1, max_value=(den - 1) // 2).map(lambda num: Fraction(num, den))
)
complementary_symbols = st.builds(EtaSymbol, labels, st.integers(1, 3), rationals)
symbols = st.one_of(st.builds(EtaSymbol, labels, st.integers(1, 3)), complementary_symbols)
parameters = st.dictionaries(
    st.tuples(symbols, st.integers(1, 5)), st.integers(1, 3), max_size=4
).map(UnitaryParameter.from_counts)
small_parameters = st.dictionaries(
    st.tuples(st.sampled_from(SYMBOL_POOL), st.integers(1, 3)), st.integers(1, 2), max_size=3
).map(UnitaryParameter.from_counts)


@pytest.fixture
def rng():
    return random.Random(20240601)


_ACCEPTANCE: list[str] = []


def record_acceptance(number: int, name: str, ok: bool, detail: str = "") -> None:
    line = f"[{number}] {'PASS' if ok else 'FAIL'}  {name}"
    if detail:
        line += f"  ({detail})"
    _ACCEPTANCE.append(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE):
            terminalreporter.write_line(line)

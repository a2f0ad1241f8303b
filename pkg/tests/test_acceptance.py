"""Exit criteria.

Criteria 1-5 share one sweep over every ordered pair of the desk corpus
(discrete L(a), L(b,k=2); complementary L(c,s=1/4), L(e,s=1/3) and its dual
L(e,s=1/6); max_d 4, max_mult 2, max_dim 8).  Each test prints one
PASS/FAIL line in the terminal summary.
"""

import random
import time
from fractions import Fraction

import pytest

from glrelevance.dsl import parse_parameter, print_parameter
from glrelevance.corpus import desk_spec, enumerate_parameters
from glrelevance.parameters import (
    ZERO,
    EtaSymbol,
    UnitaryParameter,
    add,
    dimension,
    dual,
    is_generic,
    nt_measure,
    sl2_type,
)
from glrelevance.partitions import Partition, is_close, transpose
from glrelevance.relevance import (
    find_witness,
    is_relevant_bruteforce,
    is_relevant_criterion,
    lambda_sum,
    proof_identity_check,
    verify_witness,
)
from glrelevance.report import analyze, decode_report, encode_report

from conftest import SYMBOL_POOL, random_parameter, random_symbol, record_acceptance

SWEEP_SECONDS = 300
INVARIANT_SECONDS = 30
RANDOM_INSTANCES = 10_000
VANISHING_INSTANCES = 1_000
ROUND_TRIPS = 500


@pytest.fixture(scope="module")
def sweep():
    params = list(enumerate_parameters(desk_spec()))
    assert len(params) == 480
    crit = {}
    start = time.perf_counter()
    out = {
        "pairs": 0,
        "relevant": 0,
        "generic_pairs": 0,
        "equivalence": [],
        "symmetry": [],
        "generic": [],
        "witness": [],
        "closeness": [],
    }
    for p in params:
        for q in params:
            crit[p, q] = is_relevant_criterion(p, q)
    for p in params:
        for q in params:
            out["pairs"] += 1
            brute = is_relevant_bruteforce(p, q)
            if crit[p, q] != brute:
                out["equivalence"].append((p, q))
            if crit[p, q] != crit[q, p]:
                out["symmetry"].append((p, q))
            if is_generic(p) and is_generic(q):
                out["generic_pairs"] += 1
                if not crit[p, q]:
                    out["generic"].append((p, q))
            if not brute:
                continue
            out["relevant"] += 1
            w = find_witness(p, q)
            if w is None or not verify_witness(p, q, w) or not proof_identity_check(p, q, w):
                out["witness"].append((p, q))
            if not is_close(sl2_type(p), sl2_type(q)):
                out["closeness"].append((p, q))
    out["elapsed"] = time.perf_counter() - start
    return out


def _report(number, name, failures, detail=""):
    ok = not failures
    if failures:
        p, q = failures[0]
        detail = f"{len(failures)} violations, first: {print_parameter(p)} | {print_parameter(q)}"
    record_acceptance(number, name, ok, detail)
    return ok


def test_1_lemma_equivalence(sweep):
    in_time = sweep["elapsed"] < SWEEP_SECONDS
    ok = _report(
        1,
        "criterion == brute force on all desk-corpus pairs",
        sweep["equivalence"] if in_time else [],
        f"{sweep['pairs']} pairs, {sweep['relevant']} relevant, {sweep['elapsed']:.0f}s",
    )
    if not in_time:
        record_acceptance(1, "sweep time", False, f"{sweep['elapsed']:.0f}s > {SWEEP_SECONDS}s")
    assert sweep["pairs"] == 480 * 480
    assert ok and in_time


def test_2_symmetry(sweep):
    assert _report(2, "relevance is symmetric", sweep["symmetry"], f"{sweep['pairs']} pairs")


def test_3_generic_pairs(sweep):
    assert sweep["generic_pairs"] > 0
    assert _report(3, "generic x generic pairs are relevant", sweep["generic"], f"{sweep['generic_pairs']} pairs")


def test_4_witness_soundness(sweep):
    assert _report(
        4, "witnesses verify and satisfy the J/K identities", sweep["witness"], f"{sweep['relevant']} relevant pairs"
    )


def test_5_closeness(sweep):
    assert _report(5, "relevant pairs have close SL2-types", sweep["closeness"], f"{sweep['relevant']} relevant pairs")


def _random_complementary(rng):
    eta = random_symbol(rng)
    while eta.s is None:
        eta = random_symbol(rng)
    return eta


def _random_partition(rng):
    return Partition(rng.randint(1, 9) for _ in range(rng.randint(0, 9)))


def test_6_algebraic_invariants():
    rng = random.Random(6)
    failures = {name: 0 for name in ("dual", "monoid", "nt", "sl2", "transpose")}
    start = time.perf_counter()

    quarter = EtaSymbol("c", 1, Fraction(1, 4))
    if dual(quarter) != quarter:
        failures["dual"] += 1
    for _ in range(RANDOM_INSTANCES):
        eta = _random_complementary(rng)
        if dual(dual(eta)) != eta or dual(eta).s != Fraction(1, 2) - eta.s:
            failures["dual"] += 1

        p, q, r = (random_parameter(rng) for _ in range(3))
        if not (
            add(p, q) == add(q, p)
            and add(add(p, q), r) == add(p, add(q, r))
            and add(p, ZERO) == p
            and UnitaryParameter(p.blocks) == p
        ):
            failures["monoid"] += 1

        if nt_measure(add(p, q)) != nt_measure(p) + nt_measure(q):
            failures["nt"] += 1

        lam = sl2_type(p)
        if lam.size() != dimension(p) or is_generic(p) != (nt_measure(p) == 0) != all(x == 1 for x in lam):
            failures["sl2"] += 1

        mu = _random_partition(rng)
        if transpose(transpose(mu)) != mu or transpose(mu).size() != mu.size():
            failures["transpose"] += 1
    elapsed = time.perf_counter() - start

    bad = sum(failures.values())
    ok = bad == 0 and elapsed < INVARIANT_SECONDS
    detail = f"{RANDOM_INSTANCES} instances x {len(failures)} properties, {elapsed:.1f}s"
    if bad:
        detail += f", violations {failures}"
    record_acceptance(6, "algebraic invariants", ok, detail)
    assert bad == 0
    assert elapsed < INVARIANT_SECONDS


def test_7_lambda_vanishing():
    rng = random.Random(7)
    bad = 0
    for _ in range(VANISHING_INSTANCES):
        p, q = random_parameter(rng), random_parameter(rng)
        eta = rng.choice([random_symbol(rng), *p.symbols(), *q.symbols()])
        a = max(p.max_d(), q.max_d()) + rng.randint(1, 5)
        if lambda_sum(eta, a, p, q) != 0:
            bad += 1
    record_acceptance(7, "Lambda vanishes for a > max d", bad == 0, f"{VANISHING_INSTANCES} instances, {bad} violations")
    assert bad == 0


def test_8_io_round_trips():
    rng = random.Random(8)
    bad_text = 0
    for _ in range(ROUND_TRIPS):
        p = random_parameter(rng)
        if parse_parameter(print_parameter(p)) != p:
            bad_text += 1
    bad_doc = 0
    for _ in range(ROUND_TRIPS):
        p = random_parameter(rng, SYMBOL_POOL, max_blocks=3, max_d=4, max_mult=2)
        q = random_parameter(rng, SYMBOL_POOL, max_blocks=3, max_d=4, max_mult=2)
        report = analyze(p, q)
        doc = encode_report(report)
        if decode_report(doc) != report or encode_report(decode_report(doc)) != doc:
            bad_doc += 1
    ok = bad_text == 0 and bad_doc == 0
    record_acceptance(
        8, "parse/print and decode/encode round trips", ok,
        f"{ROUND_TRIPS} each, {bad_text} + {bad_doc} violations",
    )
    assert ok

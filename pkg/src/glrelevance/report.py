"""Relevance reports and their key-value document form.

A document is a JSON-compatible dict with the fixed keys ``pi``, ``sigma``,
``relevant``, ``witness`` (only when relevant), ``lambda_table``, ``sl2_pi``,
``sl2_sigma``, ``close``, ``nt_pi`` and ``nt_sigma``.  Parameters are stored
in the text notation of :mod:`glrelevance.dsl`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .dsl import ParseError, parse_parameter, parse_symbol, print_parameter
from .parameters import UnitaryParameter, nt_measure, sl2_type
from .partitions import Partition, is_close
from .relevance import LambdaQuery, Witness, find_witness, lambda_range, lambda_table

__all__ = [
    "RelevanceReport",
    "ReportSchemaError",
    "analyze",
    "encode_report",
    "decode_report",
    "dumps",
    "loads",
]

FORWARD = "pi,sigma"
BACKWARD = "sigma,pi"


class ReportSchemaError(ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


@dataclass(frozen=True)
class RelevanceReport:
    pi: UnitaryParameter
    sigma: UnitaryParameter
    relevant: bool
    witness: Witness | None
    lambda_table: dict[LambdaQuery, int]
    a_max: int
    sl2_pi: Partition
    sl2_sigma: Partition
    close: bool
    nt_pi: int
    nt_sigma: int


def analyze(p: UnitaryParameter, q: UnitaryParameter) -> RelevanceReport:
    """Everything the CLI reports about the pair ``(p, q)``."""
    witness = find_witness(p, q)
    sl2_p, sl2_q = sl2_type(p), sl2_type(q)
    return RelevanceReport(
        pi=p,
        sigma=q,
        relevant=witness is not None,
        witness=witness,
        lambda_table=lambda_table(p, q),
        a_max=lambda_range(p, q)[1],
        sl2_pi=sl2_p,
        sl2_sigma=sl2_q,
        close=is_close(sl2_p, sl2_q),
        nt_pi=nt_measure(p),
        nt_sigma=nt_measure(q),
    )


def encode_report(report: RelevanceReport) -> dict:
    doc: dict = {
        "pi": print_parameter(report.pi),
        "sigma": print_parameter(report.sigma),
        "relevant": report.relevant,
    }
    if report.relevant and report.witness is not None:
        w = report.witness
        doc["witness"] = {
            "I": list(w.indices("I")),
            "J": list(w.indices("J")),
            "K": list(w.indices("K")),
            "psi0": print_parameter(w.generic_remainder),
        }
    doc["lambda_table"] = {
        "a_max": report.a_max,
        "entries": [
            {
                "eta": str(query.eta),
                "a": query.a,
                "direction": FORWARD if query.forward else BACKWARD,
                "value": value,
            }
            for query, value in report.lambda_table.items()
        ],
    }
    doc["sl2_pi"] = list(report.sl2_pi)
    doc["sl2_sigma"] = list(report.sl2_sigma)
    doc["close"] = report.close
    doc["nt_pi"] = report.nt_pi
    doc["nt_sigma"] = report.nt_sigma
    return doc


def _get(doc: dict, key: str, kind, path: str = ""):
    where = f"{path}.{key}" if path else key
    if key not in doc:
        raise ReportSchemaError(where, "missing field")
    value = doc[key]
    # bool is an int subclass; keep the two apart
    if kind is int and (isinstance(value, bool) or not isinstance(value, int)):
        raise ReportSchemaError(where, f"expected integer, got {value!r}")
    if kind is not int and not isinstance(value, kind):
        raise ReportSchemaError(where, f"expected {kind.__name__}, got {type(value).__name__}")
    return value


def _param(text: str, path: str) -> UnitaryParameter:
    try:
        return parse_parameter(text)
    except ParseError as exc:
        raise ReportSchemaError(path, str(exc)) from None


def _int_list(values: list, path: str) -> list[int]:
    for i, v in enumerate(values):
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise ReportSchemaError(f"{path}[{i}]", f"expected non-negative integer, got {v!r}")
    return list(values)


def decode_report(doc: dict) -> RelevanceReport:
    """Inverse of :func:`encode_report`; raises :class:`ReportSchemaError` with a field path."""
    if not isinstance(doc, dict):
        raise ReportSchemaError("$", "expected an object")
    known = {"pi", "sigma", "relevant", "witness", "lambda_table", "sl2_pi",
             "sl2_sigma", "close", "nt_pi", "nt_sigma"}
    for key in doc:
        if key not in known:
            raise ReportSchemaError(key, "unknown field")
    pi = _param(_get(doc, "pi", str), "pi")
    sigma = _param(_get(doc, "sigma", str), "sigma")
    relevant = _get(doc, "relevant", bool)

    witness = None
    if relevant:
        wdoc = _get(doc, "witness", dict)
        n = pi.num_instances()
        roles: list[str | None] = [None] * n
        for role in ("I", "J", "K"):
            path = f"witness.{role}"
            for i, idx in enumerate(_int_list(_get(wdoc, role, list, "witness"), path)):
                if idx >= n:
                    raise ReportSchemaError(f"{path}[{i}]", f"instance {idx} out of range ({n} instances)")
                if roles[idx] is not None:
                    raise ReportSchemaError(f"{path}[{i}]", f"instance {idx} assigned twice")
                roles[idx] = role
        if None in roles:
            raise ReportSchemaError("witness", f"instance {roles.index(None)} unassigned")
        psi0 = _param(_get(wdoc, "psi0", str, "witness"), "witness.psi0")
        witness = Witness(tuple(roles), psi0)
    elif "witness" in doc:
        raise ReportSchemaError("witness", "present on an irrelevant pair")

    tdoc = _get(doc, "lambda_table", dict)
    a_max = _get(tdoc, "a_max", int, "lambda_table")
    table: dict[LambdaQuery, int] = {}
    for i, entry in enumerate(_get(tdoc, "entries", list, "lambda_table")):
        path = f"lambda_table.entries[{i}]"
        if not isinstance(entry, dict):
            raise ReportSchemaError(path, "expected an object")
        try:
            eta = parse_symbol(_get(entry, "eta", str, path))
        except ParseError as exc:
            raise ReportSchemaError(f"{path}.eta", str(exc)) from None
        a = _get(entry, "a", int, path)
        if a < 1:
            raise ReportSchemaError(f"{path}.a", "must be positive")
        direction = _get(entry, "direction", str, path)
        if direction not in (FORWARD, BACKWARD):
            raise ReportSchemaError(f"{path}.direction", f"expected {FORWARD!r} or {BACKWARD!r}")
        value = _get(entry, "value", int, path)
        if value == 0:
            raise ReportSchemaError(f"{path}.value", "zero entries are not listed")
        table[LambdaQuery(eta, a, direction == FORWARD)] = value

    def partition(key: str) -> Partition:
        parts = _int_list(_get(doc, key, list), key)
        if parts != sorted(parts, reverse=True) or (parts and parts[-1] < 1):
            raise ReportSchemaError(key, "not a partition")
        return Partition(parts)

    return RelevanceReport(
        pi=pi,
        sigma=sigma,
        relevant=relevant,
        witness=witness,
        lambda_table=table,
        a_max=a_max,
        sl2_pi=partition("sl2_pi"),
        sl2_sigma=partition("sl2_sigma"),
        close=_get(doc, "close", bool),
        nt_pi=_get(doc, "nt_pi", int),
        nt_sigma=_get(doc, "nt_sigma", int),
    )


def dumps(report: RelevanceReport) -> str:
    return json.dumps(encode_report(report), indent=2, ensure_ascii=False)


def loads(text: str) -> RelevanceReport:
    return decode_report(json.loads(text))

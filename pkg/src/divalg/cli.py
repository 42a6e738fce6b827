"""Command-line front end, file ingestion, and machine-readable reporting.

Exit codes: 0 a verdict was computed (whatever its polarity), 1 the input
data fails validation or a classifier precondition, 2 parse, structural or
usage errors, 3 a search or table budget was exceeded.  Reports are
deterministic: identical inputs give byte-identical stdout; timing goes to
stderr.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import __version__
from . import catalog, monads, nimreps, rings
from .errors import (
    BudgetExceededError,
    CatalogError,
    DecomposableModuleError,
    DegenerateMonadError,
    DivalgError,
    PowerIterationError,
    StructuralError,
    ZeroObjectError,
)

__all__ = ["RunReport", "export_report", "run", "main"]

EXIT_OK = 0
EXIT_INVALID_DATA = 1
EXIT_STRUCTURAL = 2
EXIT_BUDGET = 3


@dataclass(frozen=True)
class RunReport:
    command: tuple[str, ...]
    inputs: dict
    payload: dict
    version: str
    elapsed_seconds: float

    def body(self) -> dict:
        # elapsed time is deliberately left out so repeated runs are byte-identical
        return {
            "command": list(self.command),
            "inputs": self.inputs,
            "payload": self.payload,
            "version": self.version,
        }


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return [_jsonable(v) for v in value.tolist()]
    return value


def _markdown_cell(value) -> str:
    if isinstance(value, str):
        return value
    return json.dumps(_jsonable(value), sort_keys=True)


def _is_record_list(value) -> bool:
    return (
        isinstance(value, list)
        and bool(value)
        and all(isinstance(item, dict) for item in value)
        and len({tuple(sorted(item)) for item in value}) == 1
    )


def export_report(report: RunReport, format: str = "json") -> str:
    """Deterministic rendering; the JSON form round-trips."""
    if format == "json":
        return json.dumps(_jsonable(report.body()), sort_keys=True, indent=2) + "\n"
    if format == "markdown":
        lines = [
            "# divalg report",
            "",
            f"command: `{' '.join(report.command)}`",
            "",
        ]
        scalar_keys = [k for k in sorted(report.payload) if not _is_record_list(report.payload[k])]
        if scalar_keys:
            lines += ["| key | value |", "| --- | --- |"]
            lines += [f"| {k} | {_markdown_cell(report.payload[k])} |" for k in scalar_keys]
            lines.append("")
        for key in sorted(report.payload):
            value = report.payload[key]
            if not _is_record_list(value):
                continue
            columns = sorted(value[0])
            lines.append(f"## {key}")
            lines.append("")
            lines.append("| " + " | ".join(columns) + " |")
            lines.append("| " + " | ".join("---" for _ in columns) + " |")
            for item in value:
                lines.append("| " + " | ".join(_markdown_cell(item[c]) for c in columns) + " |")
            lines.append("")
        lines.append(f"version: {report.version}")
        return "\n".join(lines) + "\n"
    raise StructuralError(f"unknown report format {format!r}")


def _digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def _ring_digest(ring: rings.FusionRing) -> str:
    return _digest(json.dumps(ring.to_payload(), sort_keys=True).encode())


def _load_json(path: str) -> tuple[dict, str]:
    try:
        with open(path, "rb") as handle:
            raw = handle.read()
    except OSError as exc:
        raise StructuralError(f"cannot read {path}: {exc}") from None
    try:
        return json.loads(raw), _digest(raw)
    except json.JSONDecodeError as exc:
        raise StructuralError(f"{path} is not valid JSON: {exc}") from None


def _resolve_ring(args) -> tuple[rings.FusionRing, dict]:
    if getattr(args, "builtin", None):
        ring = catalog.builtin_ring(args.builtin)
        return ring, {"builtin": args.builtin, "ring": _ring_digest(ring)}
    path = getattr(args, "ring", None) or getattr(args, "source", None)
    if not path:
        raise StructuralError("either --builtin or a ring file is required")
    payload, digest = _load_json(path)
    return rings.FusionRing.from_payload(payload), {"ring_file": path, "ring": digest}


def _parse_object(ring: rings.FusionRing, text: str) -> np.ndarray:
    # a catalog label wins over a comma-separated vector of the same spelling
    if text in ring.labels:
        return ring.vector(text)
    try:
        components = [int(part.strip()) for part in text.split(",")]
    except ValueError:
        raise StructuralError(
            f"object {text!r} is neither a label of this ring nor a multiplicity vector"
        ) from None
    return ring.vector(components)


def _parse_module_vector(nr: nimreps.NimRep, text: str) -> np.ndarray:
    if text in nr.module_labels:
        return nr.vector(text)
    try:
        components = [int(part.strip()) for part in text.split(",")]
    except ValueError:
        raise StructuralError(
            f"module object {text!r} is neither a module label nor a multiplicity vector"
        ) from None
    return nr.vector(components)


def _classification_payload(ring: rings.FusionRing, report: rings.ClassificationReport) -> dict:
    payload = report.to_payload()
    payload["object_label"] = ring.describe(np.asarray(report.object_vector))
    if report.algebra_vector is not None:
        payload["algebra_label"] = ring.describe(np.asarray(report.algebra_vector))
    if report.inverse_witness is not None:
        payload["witness_label"] = ring.describe(np.asarray(report.inverse_witness))
    return payload


def _cmd_ring_validate(args) -> tuple[dict, dict, int]:
    ring, inputs = _resolve_ring(args)
    report = rings.validate_ring(ring)
    payload = report.to_payload()
    payload["labels"] = list(ring.labels)
    payload["rank"] = ring.rank
    return payload, inputs, EXIT_OK if report.passed else EXIT_INVALID_DATA


def _cmd_ring_classify(args) -> tuple[dict, dict, int]:
    ring, inputs = _resolve_ring(args)
    validation = rings.validate_ring(ring)
    if not validation.passed:
        return validation.to_payload(), inputs, EXIT_INVALID_DATA
    obj = _parse_object(ring, args.object)
    report = rings.classify_internal_end(ring, obj, side=args.side)
    payload = _classification_payload(ring, report)
    if args.fpdim:
        payload["fp_dimension"] = rings.fp_dimension(ring, obj)
    return payload, inputs, EXIT_OK


def _resolve_nimrep(args, ring: rings.FusionRing) -> tuple[nimreps.NimRep, dict]:
    if getattr(args, "regular", False):
        nr = nimreps.regular_nimrep(ring)
        return nr, {"nimrep": "regular"}
    if not args.nimrep:
        raise StructuralError("either --nimrep FILE or --regular is required")
    payload, digest = _load_json(args.nimrep)
    return nimreps.NimRep.from_payload(payload), {"nimrep_file": args.nimrep, "nimrep": digest}


def _cmd_nimrep_validate(args) -> tuple[dict, dict, int]:
    ring, inputs = _resolve_ring(args)
    ring_report = rings.validate_ring(ring)
    if not ring_report.passed:
        return ring_report.to_payload(), inputs, EXIT_INVALID_DATA
    nr, nim_inputs = _resolve_nimrep(args, ring)
    inputs.update(nim_inputs)
    report = nimreps.validate_nimrep(ring, nr, check_dual=args.check_dual)
    payload = report.to_payload()
    payload["module_labels"] = list(nr.module_labels)
    return payload, inputs, EXIT_OK if report.passed else EXIT_INVALID_DATA


def _cmd_nimrep_classify(args) -> tuple[dict, dict, int]:
    ring, inputs = _resolve_ring(args)
    ring_report = rings.validate_ring(ring)
    if not ring_report.passed:
        return ring_report.to_payload(), inputs, EXIT_INVALID_DATA
    nr, nim_inputs = _resolve_nimrep(args, ring)
    inputs.update(nim_inputs)
    nim_report = nimreps.validate_nimrep(ring, nr)
    if not nim_report.passed:
        return nim_report.to_payload(), inputs, EXIT_INVALID_DATA
    mv = _parse_module_vector(nr, args.object)
    report = nimreps.classify_internal_end_nimrep(ring, nr, mv)
    payload = report.to_payload()
    payload["module_labels"] = list(nr.module_labels)
    return payload, inputs, EXIT_OK


def _cmd_catalog_list(args) -> tuple[dict, dict, int]:
    listing = [
        {"name": entry.name, "rank": entry.ring.rank, "note": entry.note}
        for entry in catalog.entries()
    ]
    return {"entries": listing}, {}, EXIT_OK


def _cmd_catalog_export(args) -> tuple[Optional[dict], dict, int]:
    ring = catalog.builtin_ring(args.name)
    text = json.dumps(ring.to_payload(), sort_keys=True, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
        return {"written": args.out, "ring": _ring_digest(ring)}, {"builtin": args.name}, EXIT_OK
    sys.stdout.write(text)
    return None, {}, EXIT_OK


def _monad_from_args(args) -> monads.FiniteMonad:
    return monads.builtin_monad(args.name, marks=getattr(args, "marks", None))


def _cmd_monad_check(args) -> tuple[dict, dict, int]:
    monad = _monad_from_args(args)
    laws = monads.validate_monad(monad, args.max_size, budget=args.budget)
    if not laws.passed:
        return laws.to_payload(), {"monad": monad.name}, EXIT_INVALID_DATA
    verdict = monads.check_adjunction_trivial(monad, args.max_size, budget=args.budget)
    payload = verdict.to_payload()
    payload["laws_passed"] = True
    return payload, {"monad": monad.name}, EXIT_OK


def _cmd_monad_strength(args) -> tuple[dict, dict, int]:
    monad = _monad_from_args(args)
    report = monads.check_strength(monad, args.max_size, budget=args.budget)
    very = monads.is_very_strong(monad, args.max_size)
    algebra = monads.algebra_from_strength(monad)
    payload = {
        "monad": monad.name,
        "max_size": args.max_size,
        "strength": report.to_payload(),
        "very_strong": very.to_payload(),
        "unit_algebra": algebra.to_payload(),
    }
    return payload, {"monad": monad.name}, EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="divalg",
        description="Division-algebra verdicts for fusion rings, NIM-reps, and finite monads.",
    )
    parser.add_argument("--format", choices=["json", "markdown"], default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    ring = sub.add_parser("ring", help="fusion ring operations")
    ring_sub = ring.add_subparsers(dest="subcommand", required=True)
    rv = ring_sub.add_parser("validate", help="check the ring axioms")
    rv.add_argument("source", nargs="?", help="ring JSON file")
    rv.add_argument("--builtin", help="builtin ring name")
    rv.set_defaults(func=_cmd_ring_validate)
    rc = ring_sub.add_parser("classify", help="division-algebra verdicts for an object")
    rc.add_argument("--builtin", help="builtin ring name")
    rc.add_argument("--ring", help="ring JSON file")
    rc.add_argument("--object", required=True, help="label or comma-separated vector")
    rc.add_argument("--side", choices=["left", "right"], default="left")
    rc.add_argument("--fpdim", action="store_true", help="include the Perron dimension")
    rc.set_defaults(func=_cmd_ring_classify)

    nim = sub.add_parser("nimrep", help="based-module operations")
    nim_sub = nim.add_subparsers(dest="subcommand", required=True)
    nv = nim_sub.add_parser("validate", help="check the based-module axioms")
    nv.add_argument("--builtin", help="builtin ring name")
    nv.add_argument("--ring", help="ring JSON file")
    nv.add_argument("--nimrep", help="NIM-rep JSON file")
    nv.add_argument("--regular", action="store_true", help="use the ring acting on itself")
    nv.add_argument("--check-dual", action="store_true")
    nv.set_defaults(func=_cmd_nimrep_validate)
    nc = nim_sub.add_parser("classify", help="classify the internal End of a module object")
    nc.add_argument("--builtin", help="builtin ring name")
    nc.add_argument("--ring", help="ring JSON file")
    nc.add_argument("--nimrep", help="NIM-rep JSON file")
    nc.add_argument("--regular", action="store_true", help="use the ring acting on itself")
    nc.add_argument("--object", required=True, help="module label or comma-separated vector")
    nc.set_defaults(func=_cmd_nimrep_classify)

    cat = sub.add_parser("catalog", help="builtin fixture rings")
    cat_sub = cat.add_subparsers(dest="subcommand", required=True)
    cl = cat_sub.add_parser("list", help="names and ranks of all builtins")
    cl.set_defaults(func=_cmd_catalog_list)
    ce = cat_sub.add_parser("export", help="write a builtin ring in the ring JSON format")
    ce.add_argument("--name", required=True)
    ce.add_argument("--out", help="output path; stdout when omitted")
    ce.set_defaults(func=_cmd_catalog_export)

    mon = sub.add_parser("monad", help="finite monad verdicts")
    mon_sub = mon.add_subparsers(dest="subcommand", required=True)
    mc = mon_sub.add_parser("check", help="monad laws plus the adjunction-triviality verdict")
    mc.add_argument("name", choices=["maybe", "identity", "exception", "freevec2"])
    mc.add_argument("--marks", type=int, help="mark count for the exception monad")
    mc.add_argument("--max-size", type=int, default=4, dest="max_size")
    mc.add_argument("--budget", type=int, default=None, help="table/candidate cap")
    mc.set_defaults(func=_cmd_monad_check)
    ms = mon_sub.add_parser("strength", help="left-strength axioms and the induced algebra")
    ms.add_argument("name", choices=["maybe", "identity", "exception", "freevec2"])
    ms.add_argument("--marks", type=int, help="mark count for the exception monad")
    ms.add_argument("--max-size", type=int, default=3, dest="max_size")
    ms.add_argument("--budget", type=int, default=None, help="table/candidate cap")
    ms.set_defaults(func=_cmd_monad_strength)

    return parser


def run(argv: Sequence[str]) -> int:
    """Dispatch a command line; print the report to stdout; return the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_STRUCTURAL

    started = time.perf_counter()
    try:
        payload, inputs, code = args.func(args)
    except (BudgetExceededError, PowerIterationError) as exc:
        print(f"divalg: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except DecomposableModuleError as exc:
        print(f"divalg: unsuitable input data: {exc}", file=sys.stderr)
        return EXIT_INVALID_DATA
    except (StructuralError, CatalogError, ZeroObjectError, DegenerateMonadError) as exc:
        print(f"divalg: {exc}", file=sys.stderr)
        return EXIT_STRUCTURAL
    except DivalgError as exc:
        print(f"divalg: {exc}", file=sys.stderr)
        return EXIT_STRUCTURAL
    elapsed = time.perf_counter() - started

    if payload is not None:
        report = RunReport(
            command=tuple(argv),
            inputs=_jsonable(inputs),
            payload=_jsonable(payload),
            version=__version__,
            elapsed_seconds=elapsed,
        )
        sys.stdout.write(export_report(report, format=args.format))
    print(f"elapsed_seconds={elapsed:.3f}", file=sys.stderr)
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))

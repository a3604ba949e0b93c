"""Command-line interface.

Input is a JSON document (a file path argument, or "-" for stdin) with
either component data or explicit segments::

    {"components": [{"a": 12, "m": 3}, {"a": 10, "m": 5}], "p": [2, 2]}
    {"segments": [{"b": "7", "e": "5"}, {"b": "7/2", "e": "1/2"}], "p_rank": 3}

Half-integers are always strings "k" or "k/2"; no floats appear in any
interface.  Exit codes: 0 success, 1 zero verdict on `check` (a successful
computation -- shell pipelines can branch on it), 2 input error,
3 resource limit, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Optional, Sequence

from . import packets as packets_mod
from .arrangements import DEFAULT_MAX_R, enumerate_admissible
from .criterion import Verdict, Witness, nonvanishing, nonvanishing_simplified
from .errors import InputError, InvariantViolationError, ResourceLimitError
from .halfint import HalfInt
from .padic import ExtendedMultiSegment, project_EF, sign_of, to_extended
from .segments import GoodParityParameter, Segment
from .tableau import Reduction, trapa_reduce
from .transition import ParamVector, phi


def _load_document(path: str) -> dict:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from None
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _parse_parameter(doc: dict, strict_parity: bool) -> GoodParityParameter:
    has_components = "components" in doc
    has_segments = "segments" in doc
    if has_components == has_segments:
        raise InputError("provide exactly one of 'components' or 'segments'")
    if has_components:
        comps = []
        for item in doc["components"]:
            try:
                comps.append((int(item["a"]), int(item["m"])))
            except (KeyError, TypeError, ValueError):
                raise InputError(f"bad component entry: {item!r}") from None
        return GoodParityParameter.from_components(comps, strict_parity)
    segs = []
    for item in doc["segments"]:
        try:
            segs.append(
                Segment(HalfInt.parse(str(item["b"])), HalfInt.parse(str(item["e"])))
            )
        except (KeyError, TypeError):
            raise InputError(f"bad segment entry: {item!r}") from None
    return GoodParityParameter(tuple(segs), strict_parity)


def _require_p(doc: dict, psi: GoodParityParameter) -> tuple[int, ...]:
    if "p" not in doc:
        raise InputError("this subcommand needs an entry vector 'p'")
    p = doc["p"]
    if not isinstance(p, list) or len(p) != psi.r:
        raise InputError(f"'p' must be a list of {psi.r} integers")
    return tuple(int(x) for x in p)


def _jsonable(value: Any) -> Any:
    if isinstance(value, HalfInt):
        return str(value)
    if isinstance(value, Segment):
        return {"b": str(value.b), "e": str(value.e)}
    if isinstance(value, Witness):
        return {
            "kind": value.kind,
            "indices": list(value.indices),
            "sigma": list(value.sigma) if value.sigma else None,
            "values": list(value.values),
        }
    if isinstance(value, ExtendedMultiSegment):
        return {
            "l": list(value.l),
            "eta": ["+" if e == 1 else "-" for e in value.eta],
            "sigma": list(value.sigma),
        }
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


def _verdict_payload(verdict: Verdict) -> dict:
    return {"nonzero": verdict.nonzero, "witness": _jsonable(verdict.witness)}


def _reduction_payload(reduction: Reduction) -> dict:
    if not reduction.nonzero:
        return {"zero": True, "witness": _jsonable(reduction.zero)}
    return {
        "zero": False,
        "antitableau": _jsonable(reduction.antitableau),
        "rows": [[length, sign] for length, sign in reduction.rows],
    }


def _entry_payload(entry: packets_mod.PacketEntry) -> dict:
    return {
        "p": list(entry.p),
        "levi": [list(x) for x in entry.levi],
        "lambda": _jsonable(entry.lam),
        "antitableau": _jsonable(entry.antitableau),
        "rows": [[length, sign] for length, sign in entry.rows],
        "padic_image": _jsonable(entry.padic_image),
    }


def _render_antitableau(rows: Sequence[Sequence[str]]) -> str:
    width = max((len(cell) for row in rows for cell in row), default=1)
    return "\n".join(" ".join(cell.rjust(width) for cell in row) for row in rows)


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
        return
    for key, value in payload.items():
        if key == "antitableau" and value:
            print("antitableau:")
            print(_render_antitableau(value))
        elif key == "packets":
            for rank, entries in value.items():
                print(f"rank {rank}: {len(entries)} entries")
        else:
            print(f"{key}: {value}")


def _cmd_check(doc: dict, psi: GoodParityParameter, args) -> tuple[dict, int]:
    p = _require_p(doc, psi)
    verdict = nonvanishing_simplified(psi, p)
    if args.verify:
        full = nonvanishing(psi, p, max_r=args.max_r)
        reduction = trapa_reduce(psi, p)
        if len({verdict.nonzero, full.nonzero, reduction.nonzero}) != 1:
            raise InvariantViolationError(
                f"engines disagree on p={p}: simplified={verdict.nonzero}, "
                f"full={full.nonzero}, tableau={reduction.nonzero}"
            )
    return _verdict_payload(verdict), 0 if verdict.nonzero else 1


def _cmd_tableau(doc: dict, psi: GoodParityParameter, args) -> tuple[dict, int]:
    p = _require_p(doc, psi)
    return _reduction_payload(trapa_reduce(psi, p)), 0


def _cmd_padic(doc: dict, psi: GoodParityParameter, args) -> tuple[dict, int]:
    p = _require_p(doc, psi)
    ems = to_extended(psi, p)
    payload: dict = {"l_eta": _jsonable(ems)}
    if all(li >= 0 for li in ems.l):
        payload["sign"] = "+" if sign_of(psi, ems) == 1 else "-"
        payload["EF_image"] = _jsonable(project_EF(psi, ems))
    return payload, 0


def _cmd_packet(doc: dict, psi: GoodParityParameter, args) -> tuple[dict, int]:
    if "p_rank" not in doc:
        raise InputError("the packet subcommand needs 'p_rank'")
    rank = int(doc["p_rank"])
    entries = packets_mod.compute_packet(psi, rank, verify=args.verify)
    scanned = len(packets_mod.enumerate_params(psi, rank))
    return {
        "p_rank": rank,
        "scanned": scanned,
        "entries": [_entry_payload(e) for e in entries],
    }, 0


def _cmd_arrangements(doc: dict, psi: GoodParityParameter, args) -> tuple[dict, int]:
    sigmas = enumerate_admissible(psi, max_r=args.max_r)
    return {"count": len(sigmas), "sigmas": [list(s) for s in sigmas]}, 0


def _cmd_transition(doc: dict, psi: GoodParityParameter, args) -> tuple[dict, int]:
    p = _require_p(doc, psi)
    if not args.sigma:
        raise InputError("the transition subcommand needs --sigma")
    moved = phi(psi, ParamVector.reference(p), args.sigma)
    return {"sigma": list(moved.sigma), "entries": list(moved.entries)}, 0


def _cmd_av(doc: dict, psi: GoodParityParameter, args) -> tuple[dict, int]:
    report = packets_mod.arthur_vogan(psi, verify=args.verify)
    payload: dict = {
        "total": report.total,
        "packets": {
            str(rank): [_entry_payload(e) for e in entries]
            for rank, entries in report.packets.items()
        },
    }
    if report.fibers_ok is not None:
        payload["fibers_ok"] = report.fibers_ok
        payload["fiber_sizes"] = sorted(report.fiber_sizes.values())
    return payload, 0


_COMMANDS = {
    "check": _cmd_check,
    "packet": _cmd_packet,
    "tableau": _cmd_tableau,
    "padic": _cmd_padic,
    "arrangements": _cmd_arrangements,
    "transition": _cmd_transition,
    "av": _cmd_av,
}


def _parse_sigma(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError:
        raise InputError(f"bad --sigma value: {text!r}") from None


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="aqlam",
        description="Non-vanishing and packets for Arthur parameters of U(p,q)",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        cmd = sub.add_parser(name)
        cmd.add_argument("input", nargs="?", default="-",
                         help="JSON document path, or - for stdin")
        cmd.add_argument("--format", choices=("json", "text"), default="json")
        cmd.add_argument("--strict-parity", action="store_true")
        cmd.add_argument("--verify", action="store_true",
                         help="cross-check every verdict with the other engine")
        cmd.add_argument("--sigma", type=_parse_sigma, default=None,
                         help="target arrangement as an image list, e.g. '2,1,3'")
        cmd.add_argument("--max-r", type=int, default=DEFAULT_MAX_R)
    args = parser.parse_args(argv)
    try:
        doc = _load_document(args.input)
        psi = _parse_parameter(doc, args.strict_parity)
        payload, code = _COMMANDS[args.command](doc, psi, args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except InvariantViolationError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 4
    _emit(payload, args.format)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

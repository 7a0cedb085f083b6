"""Command-line front end: ``rfuchsian <subcommand> --d D ...``.

Exit codes: 0 success, 2 invalid input, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Sequence

from .errors import InvariantViolation
from .exactnum import Field, FieldElement
from .fuchsian import SplitPrimeError, as_target, commensurable, construct_delta, natural_delta_algebra, recipe_delta
from .hermitian import MatK
from .orbit import orbit_circles, picard_generators, sample, vertical_projection
from .rcircle import UnitarySymmetric, circle_data, make_Y_delta, reduce_to_delta, standard_infinite
from .report import ClassReport, dumps, encode_matrix, encode_ram
from .selfcheck import run_selfcheck
from .svg import render_svg
from .symbols import prime_splitting, ramification_set

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT = 0, 2, 3
MAX_RADIUS = 4
MIN_DENSITY, MAX_DENSITY = 8, 4096


class InputError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    d: int
    command: str
    out: Path | None = None
    density: int = 96
    radius: int = 3
    seed: int = 0

    def __post_init__(self):
        Field(self.d)  # validates d
        if not 0 <= self.radius <= MAX_RADIUS:
            raise InputError(f"--radius must be in [0, {MAX_RADIUS}]")
        if not MIN_DENSITY <= self.density <= MAX_DENSITY:
            raise InputError(f"--density must be in [{MIN_DENSITY}, {MAX_DENSITY}]")


# ---------------------------------------------------------------------------
# parsing helpers


def parse_matrix(F: Field, text: str) -> MatK:
    rows = [r for r in text.split(";")]
    if len(rows) != 3:
        raise InputError("--matrix needs three ';'-separated rows")
    entries = []
    for r in rows:
        cells = r.split(",")
        if len(cells) != 3:
            raise InputError("each --matrix row needs three ','-separated entries")
        entries.extend(F.parse(c) for c in cells)
    return MatK(F, entries)


def parse_primes(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(p) for p in text.split(",")]
    except ValueError:
        raise InputError(f"--primes must be a comma-separated list of integers, got {text!r}") from None


def parse_delta(F: Field, text: str | None) -> FieldElement:
    if text is None:
        raise InputError("--delta is required")
    z = F.parse(text)
    if z.is_zero:
        raise InputError("Delta must be nonzero")
    if not F.is_integer(z):
        raise InputError(f"Delta = {z} is not in O_K")
    return z


# ---------------------------------------------------------------------------
# subcommands


def run_classify(F: Field, delta: FieldElement) -> dict[str, Any]:
    return {"command": "classify", "report": ClassReport.of(delta).to_dict()}


def run_reduce(F: Field, M: MatK) -> dict[str, Any]:
    Y = UnitarySymmetric(M)
    delta, g = reduce_to_delta(Y)
    rep = ClassReport.of(delta)
    data = circle_data(Y)
    return {
        "command": "reduce",
        "finite": data.finite,
        "report": rep.to_dict(),
        "conjugator": encode_matrix(g.canonical),
    }


def run_construct(F: Field, primes: list[int], method: str) -> dict[str, Any]:
    target = as_target(primes, F)
    delta = construct_delta(target, F, method=method)
    ram = ramification_set(natural_delta_algebra(delta, F))
    if ram != target:
        raise InvariantViolation(f"constructed Delta = {delta} has ramification {ram}")
    out: dict[str, Any] = {
        "command": "construct",
        "target": encode_ram(target),
        "method": method,
        "delta": delta,
        "report": ClassReport.of(F(delta)).to_dict(),
    }
    if method == "recipe" and target.finite_places:
        out["recipe_q"] = recipe_delta(target, F).q
    return out


def run_commensurable(F: Field, deltas: list[FieldElement]) -> dict[str, Any]:
    if len(deltas) != 2:
        raise InputError("commensurable needs --delta twice")
    a, b = deltas
    mixed = (a.trace() == 0) != (b.trace() == 0)
    return {
        "command": "commensurable",
        "reports": [ClassReport.of(a).to_dict(), ClassReport.of(b).to_dict()],
        "commensurable": commensurable(a, b),
        "mixed_trace": mixed,
    }


def orbit_curves(F: Field, Y0: UnitarySymmetric, radius: int, density: int):
    circles = orbit_circles(Y0, picard_generators(F), radius)
    finite, infinite = [], []
    for Y in circles:
        s = sample(Y, density)
        proj = vertical_projection(s)
        if s.closed:
            finite.append(proj)
        else:
            infinite.append((proj[0], proj[-1]))
    return circles, finite, infinite


def run_orbit_svg(cfg: RunConfig, start: FieldElement | None, png: Path | None) -> dict[str, Any]:
    F = Field(cfg.d)
    Y0 = standard_infinite(F) if start is None else make_Y_delta(start)
    circles, finite, infinite = orbit_curves(F, Y0, cfg.radius, cfg.density)
    title = f"orbit of {'C_inf' if start is None else 'C_' + start.literal()} over {F}, word length <= {cfg.radius}"
    text = render_svg(finite, infinite, title=title)
    if cfg.out is None:
        raise InputError("--out is required")
    cfg.out.write_text(text, encoding="utf-8")
    out: dict[str, Any] = {
        "command": "orbit-svg",
        "d": cfg.d,
        "start": "C_inf" if start is None else start.literal(),
        "radius": cfg.radius,
        "density": cfg.density,
        "circles": len(circles),
        "finite": len(finite),
        "infinite": len(infinite),
        "polylines": text.count("<polyline"),
        "out": str(cfg.out),
    }
    if png is not None:
        from .plotting import render_png

        render_png(finite, infinite, png, title=title)
        out["png"] = str(png)
    return out


def run_selfcheck_cmd(seed: int, corrupt: bool) -> tuple[dict[str, Any], bool]:
    results = run_selfcheck(seed, corrupt)
    ok = all(r.ok for r in results)
    obj = {
        "command": "selfcheck",
        "seed": seed,
        "suites": [{"name": r.name, "cases": r.cases, "failures": r.failures[:5], "ok": r.ok} for r in results],
        "ok": ok,
    }
    return obj, ok


# ---------------------------------------------------------------------------
# text rendering


def _text(obj: dict[str, Any]) -> str:
    cmd = obj["command"]
    if cmd in ("classify", "reduce", "construct"):
        r = obj["report"]
        ram = r["ramification"]
        lines = [
            f"Delta     : {r['input_delta']['literal']}",
            f"canonical : {r['canonical_delta']['literal']}",
            f"algebra   : ({r['algebra']['a']}, {r['algebra']['b']})/Q",
            f"ram       : {{{', '.join(map(str, ram['finite']))}}}" + (" + inf" if ram["infinite"] else ""),
        ]
        if cmd == "reduce":
            lines.append("conjugator: " + "; ".join(",".join(x["literal"] for x in row) for row in obj["conjugator"]))
        return "\n".join(lines) + "\n"
    if cmd == "commensurable":
        a, b = obj["reports"]
        return (
            f"{a['input_delta']['literal']} ~ {b['input_delta']['literal']}: "
            f"{'commensurable' if obj['commensurable'] else 'not commensurable'}\n"
        )
    if cmd == "orbit-svg":
        return f"wrote {obj['out']}: {obj['circles']} circles ({obj['finite']} finite, {obj['infinite']} infinite)\n"
    if cmd == "selfcheck":
        rows = [f"{s['name']:<10} {s['cases']:>6} cases  {'PASS' if s['ok'] else 'FAIL'}" for s in obj["suites"]]
        return "\n".join(rows + ["PASS" if obj["ok"] else "FAIL"]) + "\n"
    return dumps(obj)


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--d", type=int, default=1, help="squarefree d > 0, K = Q(sqrt(-d))")
    common.add_argument("--json", action="store_true", help="emit JSON on stdout")

    p = argparse.ArgumentParser(prog="rfuchsian", description="Arithmetic R-Fuchsian subgroups of Picard modular groups.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("classify", parents=[common], help="algebra and ramification of Delta")
    sp.add_argument("--delta", required=True)

    sp = sub.add_parser("reduce", parents=[common], help="reduce a unitary-symmetric matrix to Y_Delta")
    sp.add_argument("--matrix", required=True, help="nine literals, rows separated by ';', entries by ','")

    sp = sub.add_parser("construct", parents=[common], help="Delta in N realizing a ramification set")
    sp.add_argument("--primes", default="", help="comma-separated primes")
    sp.add_argument("--method", choices=("search", "recipe"), default="search")

    sp = sub.add_parser("commensurable", parents=[common], help="compare two Delta")
    sp.add_argument("--delta", action="append", required=True)

    sp = sub.add_parser("orbit-svg", parents=[common], help="render a projected orbit")
    sp.add_argument("--radius", type=int, default=3)
    sp.add_argument("--density", type=int, default=96)
    sp.add_argument("--out", type=Path, required=True)
    sp.add_argument("--delta", default=None, help="start from C_Delta instead of the standard infinite circle")
    sp.add_argument("--png", type=Path, default=None, help="also write a matplotlib PNG")

    sp = sub.add_parser("selfcheck", parents=[common], help="run the invariant suites")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--corrupt", action="store_true", help=argparse.SUPPRESS)
    return p


def _dispatch(args: argparse.Namespace) -> tuple[dict[str, Any], int]:
    F = Field(args.d)
    if args.command == "classify":
        return run_classify(F, parse_delta(F, args.delta)), EXIT_OK
    if args.command == "reduce":
        return run_reduce(F, parse_matrix(F, args.matrix)), EXIT_OK
    if args.command == "construct":
        return run_construct(F, parse_primes(args.primes), args.method), EXIT_OK
    if args.command == "commensurable":
        return run_commensurable(F, [parse_delta(F, t) for t in args.delta]), EXIT_OK
    if args.command == "orbit-svg":
        cfg = RunConfig(args.d, args.command, args.out, args.density, args.radius)
        start = None if args.delta is None else parse_delta(F, args.delta)
        return run_orbit_svg(cfg, start, args.png), EXIT_OK
    if args.command == "selfcheck":
        obj, ok = run_selfcheck_cmd(args.seed, args.corrupt)
        return obj, EXIT_OK if ok else EXIT_INVARIANT
    raise InputError(f"unknown command {args.command}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        obj, code = _dispatch(args)
    except SplitPrimeError as exc:
        print(f"error: {exc.p} splits in Q(sqrt({exc.d})) ({prime_splitting(exc.p, exc.d).value})", file=sys.stderr)
        return EXIT_INPUT
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(dumps(obj) if args.json else _text(obj))
    return code


if __name__ == "__main__":
    sys.exit(main())

"""
Command line front end.

    mcgpic cover --spec "d=2; e=1,1,1,1,1,1" [--json]
    mcgpic oracle sp-level-h1 2 4 [--json]
    mcgpic sweep hyperelliptic --g 2..5 [--json]

stdout carries results only; diagnostics go to stderr. Exit codes:
0 ok, 2 usage or parse error, 3 input outside the supported range or not
numerically admissible, 4 two independent computations disagree.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from typing import Optional, Sequence

from . import oracles
from .coverings import CyclicCoverSpec, admissibility_failure, analyze, smcg_abelianization
from .errors import GenusRangeError, McgPicError, NotAdmissibleError, RouteDisagreement, SpecParseError
from .linalg import FgAbelianGroup
from .presentations import abelianization, birman_hilden_presentation
from .report import BOTH_AGREE, CLOSED_FORM, PRESENTATION, SCHEMA_VERSION, PicardReport

EXIT_OK, EXIT_USAGE, EXIT_RANGE, EXIT_DISAGREE = 0, 2, 3, 4

SWEEP_PARAMS = ("g", "m", "n", "d", "j")


class UsageError(Exception):
    pass


def _agree(routes: dict[str, FgAbelianGroup]) -> FgAbelianGroup:
    groups = set(routes.values())
    if len(groups) != 1:
        raise RouteDisagreement(
            "routes disagree: " + "; ".join(f"{k} -> {v}" for k, v in routes.items())
        )
    return groups.pop()


def run_cover(spec_text: str, show_presentation: bool = False) -> PicardReport:
    """Analyze a cyclic cover and compute its Picard group two ways."""
    spec = CyclicCoverSpec.parse(spec_text)
    info = analyze(spec)
    details = {
        "genus": info.genus,
        "branch_count": info.branch_count,
        "admissible_condition": info.admissible,
        "balanced_superelliptic": list(info.balanced_superelliptic) if info.balanced_superelliptic else None,
    }
    where = f"genus {info.genus}, branch count {info.branch_count}"
    if info.admissible is None:
        raise NotAdmissibleError(f"{where}: {admissibility_failure(spec)}")
    if info.genus < 2:
        raise GenusRangeError(f"{where}: outside the g >= 2 regime")

    n, d, g = info.branch_count, spec.degree, info.genus
    routes = {
        PRESENTATION: smcg_abelianization(spec),
        CLOSED_FORM: oracles.admissible_h1(n, d),
    }
    citations = ["Thm-GW-admissible", "Thm-BH-presentation", "Cor-BH-abelianization", "Thm-Pic-is-H1"]
    if d == 2:
        routes["closed-form-hyperelliptic"] = oracles.hyperelliptic_pic(g)
        citations.append("Cor-hyperelliptic-pic")
    group = _agree(routes)
    if show_presentation:
        details["presentation"] = birman_hilden_presentation(n, d).to_dict()
    return PicardReport(
        subject=f"H_{g}" if d == 2 else f"M_{g}^H for cyclic cover",
        method=BOTH_AGREE,
        citations=citations,
        inputs=spec.to_dict(),
        group=group,
        details=details,
        routes=routes,
    )


def run_oracle(name: str, args: dict[str, int]) -> PicardReport:
    try:
        oracle = oracles.REGISTRY[name]
    except KeyError:
        raise UsageError(f"unknown oracle {name!r}; choose from {', '.join(oracles.REGISTRY)}") from None
    missing = [p for p in oracle.params if p not in args]
    if missing:
        raise UsageError(f"oracle {name} needs {', '.join(oracle.params)}; missing {', '.join(missing)}")
    inputs = {p: args[p] for p in oracle.params}
    result = oracle.func(**inputs)
    group, value = (result, None) if isinstance(result, FgAbelianGroup) else (None, result)
    return PicardReport(
        subject=oracle.subject,
        method=CLOSED_FORM,
        citations=[oracle.citation],
        inputs=inputs,
        group=group,
        value=value,
    )


def _hyperelliptic_cell(g: int) -> PicardReport:
    if g < 2:
        raise GenusRangeError(f"genus {g} is outside the g >= 2 regime")
    report = run_cover(f"d=2; e={','.join(['1'] * (2 * g + 2))}")
    report.inputs = {"g": g, **report.inputs}
    return report


def _admissible_cell(n: int, d: int) -> PicardReport:
    routes = {
        PRESENTATION: abelianization(birman_hilden_presentation(n, d)),
        CLOSED_FORM: oracles.admissible_h1(n, d),
    }
    return PicardReport(
        subject="M_g^H for cyclic cover",
        method=BOTH_AGREE,
        citations=["Thm-BH-presentation", "Cor-BH-abelianization"],
        inputs={"n": n, "d": d},
        group=_agree(routes),
        value=oracles.admissible_h1_order(n, d),
        routes=routes,
    )


PIPELINES = {
    "hyperelliptic": (("g",), _hyperelliptic_cell),
    "admissible": (("n", "d"), _admissible_cell),
}


def parse_range(text: str) -> range:
    """``"a..b"`` (inclusive) or a single integer."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        v = int(text)
        return range(v, v + 1)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected a..b or an integer") from None


def sweep_params(target: str) -> tuple[str, ...]:
    if target in PIPELINES:
        return PIPELINES[target][0]
    if target in oracles.REGISTRY:
        return oracles.REGISTRY[target].params
    raise UsageError(
        f"unknown sweep target {target!r}; choose from "
        f"{', '.join(list(PIPELINES) + list(oracles.REGISTRY))}"
    )


def run_sweep(target: str, ranges: dict[str, range]) -> list[PicardReport]:
    """Evaluate a pipeline or oracle over the grid, in row-major parameter order."""
    params = sweep_params(target)
    if target in PIPELINES:
        _, cell = PIPELINES[target]
    else:
        cell = lambda **kw: run_oracle(target, kw)  # noqa: E731
    missing = [p for p in params if p not in ranges]
    if missing:
        raise UsageError(f"sweep {target} needs --{' --'.join(missing)}")
    axes = [ranges[p] for p in params]
    if any(len(a) == 0 for a in axes):
        raise UsageError("empty parameter range")
    return [cell(**dict(zip(params, values))) for values in itertools.product(*axes)]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mcgpic",
        description="Abelianizations of symmetric mapping class groups and Picard groups of moduli of curves with symmetry.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cover", help="analyze a cyclic cover y^d = prod (x - a_j)^{n_j}")
    p.add_argument("spec_pos", nargs="?", metavar="SPEC", help='e.g. "d=3; e=1,1,2"')
    p.add_argument("--spec", help="cover spec text or JSON")
    p.add_argument("--presentation", action="store_true", help="include the presentation in the report")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("oracle", help="evaluate a closed-form result")
    p.add_argument("name", help=", ".join(oracles.REGISTRY))
    p.add_argument("args", nargs="*", type=int)
    for flag in SWEEP_PARAMS:
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("sweep", help="tabulate a pipeline or oracle over a grid")
    p.add_argument("target", help=", ".join(list(PIPELINES) + list(oracles.REGISTRY)))
    for flag in SWEEP_PARAMS:
        p.add_argument(f"--{flag}", metavar="A..B")
    p.add_argument("--json", action="store_true")
    return parser


def _dispatch(ns: argparse.Namespace) -> str:
    if ns.command == "cover":
        text = ns.spec if ns.spec is not None else ns.spec_pos
        if text is None:
            raise UsageError("cover needs a spec, e.g. --spec \"d=2; e=1,1,1,1,1,1\"")
        report = run_cover(text, show_presentation=ns.presentation)
        return report.to_json() if ns.json else report.render()

    if ns.command == "oracle":
        oracle = oracles.REGISTRY.get(ns.name)
        if oracle is None:
            raise UsageError(f"unknown oracle {ns.name!r}; choose from {', '.join(oracles.REGISTRY)}")
        if len(ns.args) > len(oracle.params):
            raise UsageError(f"oracle {ns.name} takes {len(oracle.params)} arguments ({', '.join(oracle.params)})")
        args = dict(zip(oracle.params, ns.args))
        args.update({p: getattr(ns, p) for p in SWEEP_PARAMS if getattr(ns, p) is not None})
        report = run_oracle(ns.name, args)
        return report.to_json() if ns.json else report.render()

    ranges = {p: parse_range(getattr(ns, p)) for p in SWEEP_PARAMS if getattr(ns, p) is not None}
    rows = run_sweep(ns.target, ranges)
    if ns.json:
        return json.dumps(
            {"schema": SCHEMA_VERSION, "target": ns.target, "rows": [r.to_dict() for r in rows]},
            sort_keys=True,
        )
    lines = []
    for r in rows:
        params = " ".join(f"{p}={r.inputs[p]}" for p in sweep_params(ns.target))
        lines.append(f"{params}\t{r.result_text}\t{r.method}")
    return "\n".join(lines)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = _dispatch(ns)
    except (UsageError, SpecParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (McgPicError, ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RANGE
    except RouteDisagreement as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    print(out)
    return EXIT_OK


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()

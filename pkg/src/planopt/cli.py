"""Command-line driver: validate, solve, pareto, assess, serve.

Exit codes: 0 success, 2 user error (bad spec, bad document, invariant
violation), 3 I/O error, 4 infeasible or unbounded model.
"""

from __future__ import annotations

import argparse
import re
import sys

from .data_io import (
    DEFAULT_MAPPING,
    assessment_to_document,
    canonical_bytes,
    front_to_document,
    load_instance,
    parse_json_bytes,
    scenario_to_document,
)
from .errors import (
    AssessmentError,
    DataIOError,
    DocumentParseError,
    DocumentSchemaError,
    FileAccessError,
    FrontTimeoutError,
    InfeasiblePlanError,
    InstanceInvariantError,
    PlanModelError,
    UnboundedObjectiveError,
)
from .pareto import ParetoRequest, nnc_front, solve_plan
from .plan import ObjectiveSpec, UserConstraint, assess

EXIT_OK = 0
EXIT_USER = 2
EXIT_IO = 3
EXIT_NO_PLAN = 4

_KIND_WIDTH = 14
_VALUE_WIDTH = 18


class SpecSyntaxError(Exception):
    """Mini-language syntax error, carrying the position for the caret."""

    def __init__(self, message: str, text: str, pos: int):
        super().__init__(message)
        self.text = text
        self.pos = pos

    def render(self) -> str:
        return (
            f"error: {self.args[0]}\n"
            f"  {self.text}\n"
            f"  {' ' * self.pos}^"
        )


_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<sense>\b(?:min|max)\b)"
    r"|(?P<rel><=|>=|=)"
    r"|(?P<plus>\+(?![\d.]))"
    r"|(?P<star>\*)"
    r"|(?P<num>[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)"
    r"|(?P<key>[A-Za-z_][A-Za-z0-9_:.\-]*)"
)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise SpecSyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        if m.lastgroup != "ws":
            tokens.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def _parse_terms(tokens, i, text):
    """`k*key + k*key + ...`; returns (terms in first-seen order, next index)."""
    terms: dict[str, float] = {}
    order: list[str] = []
    while True:
        kind, value, pos = tokens[i]
        if kind != "num":
            raise SpecSyntaxError("expected a coefficient", text, pos)
        coef = float(value)
        i += 1
        kind, value, pos = tokens[i]
        if kind != "star":
            raise SpecSyntaxError("expected '*' after the coefficient", text, pos)
        i += 1
        kind, value, pos = tokens[i]
        if kind != "key":
            raise SpecSyntaxError("expected a quantity key after '*'", text, pos)
        if value not in terms:
            order.append(value)
            terms[value] = 0.0
        terms[value] += coef
        i += 1
        if tokens[i][0] != "plus":
            break
        i += 1
    return {k: terms[k] for k in order}, i


def _format_terms(terms: dict[str, float]) -> str:
    return " + ".join(f"{w:g}*{k}" for k, w in terms.items())


def parse_objective(text: str) -> ObjectiveSpec:
    """`min|max k*key + ...` with a canonical label derived from the terms."""
    tokens = _tokenize(text)
    kind, value, pos = tokens[0]
    if kind != "sense":
        raise SpecSyntaxError("expected 'min' or 'max'", text, pos)
    sense = "minimize" if value == "min" else "maximize"
    terms, i = _parse_terms(tokens, 1, text)
    kind, _, pos = tokens[i]
    if kind != "end":
        raise SpecSyntaxError("unexpected trailing input", text, pos)
    label = f"{'min' if sense == 'minimize' else 'max'} {_format_terms(terms)}"
    return ObjectiveSpec(terms=terms, sense=sense, label=label)


def parse_constraint(text: str) -> UserConstraint:
    """`k*key + ... <=|=|>= rhs`."""
    tokens = _tokenize(text)
    terms, i = _parse_terms(tokens, 0, text)
    kind, value, pos = tokens[i]
    if kind != "rel":
        raise SpecSyntaxError("expected '<=', '=' or '>=' after terms", text, pos)
    relation = value
    i += 1
    kind, value, pos = tokens[i]
    if kind != "num":
        raise SpecSyntaxError("expected a right-hand-side number", text, pos)
    rhs = float(value)
    i += 1
    kind, _, pos = tokens[i]
    if kind != "end":
        raise SpecSyntaxError("unexpected trailing input", text, pos)
    return UserConstraint(terms=terms, relation=relation, rhs=rhs)


def parse_mapping(text: str) -> dict[str, float]:
    """`high=1,medium=0.5,low=0.25` overlaid on the default mapping."""
    mapping = dict(DEFAULT_MAPPING)
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        label, eq, value = part.partition("=")
        if not eq:
            raise SpecSyntaxError("expected label=value", text, text.find(part))
        try:
            mapping[label.strip()] = float(value)
        except ValueError:
            raise SpecSyntaxError(
                f"bad mapping value {value!r}", text, text.find(part)
            ) from None
    return mapping


def _emit(data: bytes, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        with open(out_path, "wb") as fh:
            fh.write(data)


def _front_table(front) -> str:
    header = f"{'kind':<{_KIND_WIDTH}}" + "".join(
        f"{label[:_VALUE_WIDTH - 1]:>{_VALUE_WIDTH}}"
        for label in front.objective_labels
    )
    lines = [header]
    for scen in front.scenarios:
        row = f"{scen.kind:<{_KIND_WIDTH}}" + "".join(
            f"{scen.objective_values[label]:>{_VALUE_WIDTH}.6f}"
            for label in front.objective_labels
        )
        lines.append(row)
    return "\n".join(lines) + "\n"


def _load(args):
    mapping = parse_mapping(args.mapping) if args.mapping else None
    return load_instance(args.instance, mapping=mapping)


def _cmd_validate(args) -> int:
    _load(args)
    print("OK")
    return EXIT_OK


def _cmd_solve(args) -> int:
    instance = _load(args)
    objective = parse_objective(args.objective)
    extra = [parse_constraint(c) for c in args.constraint]
    scenario = solve_plan(instance, objective, extra)
    _emit(canonical_bytes(scenario_to_document(scenario)), args.out)
    return EXIT_OK


def _cmd_pareto(args) -> int:
    instance = _load(args)
    specs = [s for s in (p.strip() for p in args.objectives.split(";")) if s]
    objectives = []
    seen: dict[str, int] = {}
    for text in specs:
        spec = parse_objective(text)
        # identical specs are allowed; keep their labels distinct
        count = seen.get(spec.label, 0)
        seen[spec.label] = count + 1
        if count:
            spec = ObjectiveSpec(
                terms=spec.terms, sense=spec.sense, label=f"{spec.label} #{count + 1}"
            )
        objectives.append(spec)
    extra = [parse_constraint(c) for c in args.constraint]
    request = ParetoRequest(objectives=objectives, points=args.points, extra=extra)
    front = nnc_front(instance, request)
    sys.stdout.write(_front_table(front))
    if args.out is not None:
        _emit(canonical_bytes(front_to_document(front)), args.out)
    return EXIT_OK


def _read_plan_file(path):
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise FileAccessError(f"{path}: {exc}") from None
    doc = parse_json_bytes(data, str(path))
    problems = []
    if not isinstance(doc, dict):
        raise DocumentSchemaError(["plan file: expected an object"])
    for key in doc:
        if key not in ("magnitudes", "boiler_powers"):
            problems.append(f"{key}: unknown field")
    mags = doc.get("magnitudes")
    if not isinstance(mags, dict):
        problems.append("magnitudes: missing or not an object")
        mags = {}
    powers = doc.get("boiler_powers", {})
    if not isinstance(powers, dict):
        problems.append("boiler_powers: expected an object")
        powers = {}
    for name, box in (("magnitudes", mags), ("boiler_powers", powers)):
        for key, value in box.items():
            if not isinstance(value, (int, float)) or isinstance(value, bool):
                problems.append(f"{name}[{key!r}]: expected a number")
    if problems:
        raise DocumentSchemaError(problems)
    return (
        {k: float(v) for k, v in mags.items()},
        {k: float(v) for k, v in powers.items()},
    )


def _cmd_assess(args) -> int:
    instance = _load(args)
    magnitudes, boiler_powers = _read_plan_file(args.magnitudes)
    problems = []
    for act in instance.activities:
        value = magnitudes.get(act.id)
        if value is not None and not act.lower - 1e-9 <= value <= act.upper + 1e-9:
            problems.append(
                f"magnitudes[{act.id!r}]: {value:g} outside "
                f"[{act.lower:g}, {act.upper:g}]"
            )
    if problems:
        raise DocumentSchemaError(problems)
    if not boiler_powers:
        boiler_powers = {b.id: 0.0 for b in instance.boilers}
    result = assess(instance, magnitudes, boiler_powers)
    _emit(canonical_bytes(assessment_to_document(instance, result)), args.out)
    return EXIT_OK


def _cmd_serve(args) -> int:
    from .service import run_server

    run_server(addr=args.addr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planopt",
        description="Regional energy plan optimization and assessment.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("instance", help="instance document path")
        p.add_argument(
            "--mapping",
            help="qualitative mapping override, e.g. high=1,medium=0.5,low=0.25",
        )

    p = sub.add_parser("validate", help="check an instance document")
    add_common(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("solve", help="single-objective solve")
    add_common(p)
    p.add_argument("--objective", required=True, help="e.g. 'min 1*total_cost'")
    p.add_argument(
        "--constraint",
        action="append",
        default=[],
        help="e.g. '1*total_cost <= 100' (repeatable)",
    )
    p.add_argument("--out", help="write the scenario document here")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("pareto", help="generate a front")
    add_common(p)
    p.add_argument(
        "--objectives", required=True, help="semicolon-separated objective specs"
    )
    p.add_argument("--points", required=True, type=int)
    p.add_argument("--constraint", action="append", default=[])
    p.add_argument("--out", help="write the front document here")
    p.set_defaults(func=_cmd_pareto)

    p = sub.add_parser("assess", help="assess a fixed plan")
    add_common(p)
    p.add_argument(
        "--magnitudes",
        required=True,
        help="JSON file with magnitudes and optional boiler_powers",
    )
    p.add_argument("--out", help="write the assessment document here")
    p.set_defaults(func=_cmd_assess)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--addr", help="listen address, host:port")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SpecSyntaxError as exc:
        print(exc.render(), file=sys.stderr)
        return EXIT_USER
    except (DocumentSchemaError, InstanceInvariantError) as exc:
        for violation in exc.violations:
            print(f"error: {violation}", file=sys.stderr)
        return EXIT_USER
    except FileAccessError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (DocumentParseError, PlanModelError, AssessmentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USER
    except (InfeasiblePlanError, UnboundedObjectiveError, FrontTimeoutError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_PLAN
    except DataIOError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

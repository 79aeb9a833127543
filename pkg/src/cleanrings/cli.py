"""Command-line front end.

Subcommands::

    analyze SPEC --element E      decomposition census for one element
    ideal SPEC [--gens ...] --check {clean,weakly-clean,uniquely,exchange}
    radical SPEC                  members (finite) or generator (localized)
    idempotents SPEC              list the idempotent elements
    units SPEC                    list the units, or state the unit criterion
    laws (--catalog | --spec SPEC | --spec-file F) [--law ID]
    examples [--bound N]          the two bundled localization case studies

Ring specs use the parenthesized prefix language of the dsl module, either
inline or from a file via --spec-file (the file form additionally accepts
raw bimodule tables). --json switches every command to a machine-readable
payload governed by the schemas module; the laws command then emits one
JSON object per line.

Exit codes: 0 success; 1 a checked property failed (a law failed, or an
element with no admissible decomposition was found); 2 usage, parse, or
construction errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .analysis import (
    clean_class,
    decompositions,
    ideal_is_clean,
    ideal_is_uniquely_weakly_clean,
    ideal_is_weakly_clean,
    ideal_is_weakly_exchange,
)
from .core import FiniteRing
from .dsl import LocalizedSpec, SpecError, build, parse, pretty
from .ideals import IdealSet, full_ideal, ideal_closure
from .laws import LAW_IDS, reports_to_json, run_catalog, run_law, run_ring, summarize
from .localized import (
    LocalizedIdeal,
    LocalizedIntegers,
    clean_flags,
    ideal_is_clean_analytic,
    ideal_is_uniquely_weakly_clean_analytic,
    ideal_is_weakly_clean_analytic,
    ideal_is_weakly_exchange_analytic,
    reproduce_examples,
    uniqueness_witness_search,
    witness_search,
)

__all__ = ["main"]

CHECKS = ("clean", "weakly-clean", "uniquely", "exchange")


class _UsageError(ValueError):
    """A bad invocation detected after argparse (exit code 2)."""


# ---------------------------------------------------------------------------
# shared plumbing


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_json(payload: dict) -> None:
    _emit(json.dumps(payload, sort_keys=True))


def _load_spec(args: argparse.Namespace):
    file_name = getattr(args, "spec_file", None)
    inline = getattr(args, "spec", None)
    if file_name and inline:
        raise _UsageError("give either an inline spec or --spec-file, not both")
    if file_name:
        return parse(Path(file_name).read_text(encoding="utf-8"), allow_tables=True)
    if inline is None:
        raise _UsageError("a ring spec is required (inline or via --spec-file)")
    return parse(inline)


def _built(args: argparse.Namespace):
    spec = _load_spec(args)
    return spec, build(spec)


def _label(ring) -> str:
    return ring.label


def _parse_element(ring, text: str):
    if isinstance(ring, LocalizedIntegers):
        try:
            return ring.element(Fraction(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise _UsageError(f"element {text!r} does not lie in {ring.label}: {exc}")
    try:
        value = int(text, 0)
    except ValueError:
        raise _UsageError(
            f"elements of the finite ring {ring.label} are indices 0..{ring.order - 1}"
        )
    if not 0 <= value < ring.order:
        raise _UsageError(
            f"element {value} out of range for {ring.label} (order {ring.order})"
        )
    return value


def _finite_ideal(ring: FiniteRing, gens: list[str] | None) -> IdealSet:
    if gens is None:
        return full_ideal(ring)
    indices = [_parse_element(ring, g) for g in gens]
    return ideal_closure(ring, indices)


def _localized_ideal(ring: LocalizedIntegers, gens: list[str] | None) -> LocalizedIdeal:
    if gens is None:
        return ring.full_ideal()
    elems = [_parse_element(ring, g) for g in gens]
    nonzero = [q for q in elems if q != 0]
    if not nonzero:
        return ring.zero_ideal()
    vectors = [ring.valuations(q.numerator) for q in nonzero]
    return ring.ideal(tuple(min(col) for col in zip(*vectors)))


# ---------------------------------------------------------------------------
# analyze


def _cmd_analyze(args: argparse.Namespace) -> int:
    spec, ring = _built(args)
    x = _parse_element(ring, args.element)
    if isinstance(ring, LocalizedIntegers):
        verdict = clean_flags(ring, x)
        ok = verdict.is_weakly_clean
    else:
        verdict = clean_class(ring, x)
        ok = verdict.is_weakly_clean
    if args.json:
        _emit_json(
            {
                "command": "analyze",
                "spec": pretty(spec),
                "ring": _label(ring),
                "ok": ok,
                "verdict": verdict.to_json_dict(),
            }
        )
        return 0 if ok else 1

    _emit(f"ring {_label(ring)} from {pretty(spec)}")
    if isinstance(ring, LocalizedIntegers):
        _emit(
            f"element {x}: clean {_yn(verdict.is_clean)},"
            f" weakly clean {_yn(verdict.is_weakly_clean)},"
            f" uniquely weakly clean {_yn(verdict.is_uniquely_weakly_clean)}"
        )
        if verdict.unit:
            _emit(f"  {x} = {x} + 0 and {x} = {x} - 0 ({x} is a unit)")
        if verdict.shifted_down_unit:
            _emit(f"  {x} = {x - 1} + 1 ({x - 1} is a unit)")
        if verdict.shifted_up_unit:
            _emit(f"  {x} = {x + 1} - 1 ({x + 1} is a unit)")
        if not verdict.is_weakly_clean:
            _emit(f"  none of {x}, {x - 1}, {x + 1} is a unit: no decomposition")
    else:
        _emit(
            f"element {x}: clean {_yn(verdict.is_clean)},"
            f" weakly clean {_yn(verdict.is_weakly_clean)},"
            f" uniquely weakly clean {_yn(verdict.is_uniquely_weakly_clean)}"
        )
        shown = verdict.decompositions[:12]
        for d in shown:
            _emit(f"  {x} = {d.unit} {'+' if d.sign == 1 else '-'} {d.idempotent}")
        rest = len(verdict.decompositions) - len(shown)
        if rest:
            _emit(f"  ... and {rest} more decomposition(s)")
        if not verdict.decompositions:
            _emit("  no unit-plus-idempotent or unit-minus-idempotent decomposition")
    return 0 if ok else 1


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


# ---------------------------------------------------------------------------
# ideal


_FINITE_CHECKS = {
    "clean": ideal_is_clean,
    "weakly-clean": ideal_is_weakly_clean,
    "uniquely": ideal_is_uniquely_weakly_clean,
    "exchange": ideal_is_weakly_exchange,
}

_ANALYTIC_CHECKS = {
    "clean": ideal_is_clean_analytic,
    "weakly-clean": ideal_is_weakly_clean_analytic,
    "uniquely": ideal_is_uniquely_weakly_clean_analytic,
    "exchange": ideal_is_weakly_exchange_analytic,
}


def _finite_witness(ring: FiniteRing, x: int, check: str) -> dict:
    """One audited decomposition (or exchange idempotent) for a passing element."""
    if check == "exchange":
        x2 = ring.mul(x, x)
        minus_targets = {int(v) for v in ring.left_multiples(ring.sub(x, x2))}
        plus_targets = {int(v) for v in ring.left_multiples(ring.add(x, x2))}
        for e in ring.idempotents:
            if ring.sub(e, x) in minus_targets or ring.add(e, x) in plus_targets:
                return {"element": x, "idempotent": e}
        return {"element": x}
    decs = decompositions(ring, x)
    if check == "clean":
        decs = tuple(d for d in decs if d.sign == 1)
    first = decs[0]
    return {
        "element": x,
        "sign": first.sign,
        "idempotent": first.idempotent,
        "unit": first.unit,
    }


def _cmd_ideal(args: argparse.Namespace) -> int:
    spec, ring = _built(args)
    if isinstance(ring, LocalizedIntegers):
        ideal = _localized_ideal(ring, args.gens)
        verdict = _ANALYTIC_CHECKS[args.check](ideal)
        ok = bool(verdict)
        witness = None
        if not ok:
            if args.check == "uniquely":
                witness = uniqueness_witness_search(ring, ideal, bound=args.bound)
            else:
                flavor = "clean" if args.check == "clean" else "weakly-clean"
                witness = witness_search(ring, ideal, bound=args.bound, flavor=flavor)
        verdict_json = {
            "value": ok,
            "method": verdict.method,
            "witness": None if witness is None else str(witness),
        }
        if args.json:
            _emit_json(
                {
                    "command": "ideal",
                    "spec": pretty(spec),
                    "ring": _label(ring),
                    "check": args.check,
                    "ideal": ideal.describe(),
                    "ok": ok,
                    "verdict": verdict_json,
                    "witnesses": None,
                }
            )
            return 0 if ok else 1
        _emit(f"ring {_label(ring)} from {pretty(spec)}")
        _emit(f"ideal {ideal.describe()}: {args.check} {_yn(ok)} [{verdict.method}]")
        if witness is not None:
            _emit(f"  witness {witness}: no admissible decomposition")
        return 0 if ok else 1

    ideal = _finite_ideal(ring, args.gens)
    verdict = _FINITE_CHECKS[args.check](ring, ideal)
    witnesses = (
        [_finite_witness(ring, x, args.check) for x in ideal.members]
        if verdict.ok
        else None
    )
    if args.json:
        _emit_json(
            {
                "command": "ideal",
                "spec": pretty(spec),
                "ring": _label(ring),
                "check": args.check,
                "ideal": ideal.describe(),
                "ok": verdict.ok,
                "verdict": verdict.to_json_dict(),
                "witnesses": witnesses,
            }
        )
        return 0 if verdict.ok else 1

    _emit(f"ring {_label(ring)} from {pretty(spec)}")
    _emit(
        f"ideal {ideal.describe()} ({len(ideal.members)} elements):"
        f" {args.check} {_yn(verdict.ok)}"
    )
    if verdict.ok:
        for w in witnesses or ():
            if "unit" in w:
                sign = "+" if w["sign"] == 1 else "-"
                _emit(f"  {w['element']} = {w['unit']} {sign} {w['idempotent']}")
            elif "idempotent" in w:
                _emit(
                    f"  element {w['element']}: idempotent {w['idempotent']}"
                    " lands in the required multiple set"
                )
    else:
        _emit(f"  failing element {verdict.failing}: {verdict.detail}")
    return 0 if verdict.ok else 1


# ---------------------------------------------------------------------------
# radical / idempotents / units


def _cmd_radical(args: argparse.Namespace) -> int:
    spec, ring = _built(args)
    if isinstance(ring, LocalizedIntegers):
        generator = ring.modulus
        payload = {
            "command": "radical",
            "spec": pretty(spec),
            "ring": _label(ring),
            "kind": "localized",
            "members": None,
            "size": None,
            "generator": str(generator),
            "description": f"<{generator}>",
        }
        if args.json:
            _emit_json(payload)
        else:
            _emit(f"ring {_label(ring)} from {pretty(spec)}")
            _emit(f"radical <{generator}> (all multiples of {generator})")
        return 0
    members = list(ring.jacobson_radical)
    description = "{" + ", ".join(str(m) for m in members) + "}"
    if args.json:
        _emit_json(
            {
                "command": "radical",
                "spec": pretty(spec),
                "ring": _label(ring),
                "kind": "finite",
                "members": members,
                "size": len(members),
                "generator": None,
                "description": description,
            }
        )
        return 0
    _emit(f"ring {_label(ring)} from {pretty(spec)}")
    _emit(f"radical {description} ({len(members)} of {ring.order} elements)")
    return 0


def _cmd_idempotents(args: argparse.Namespace) -> int:
    spec, ring = _built(args)
    if isinstance(ring, LocalizedIntegers):
        values: list = [str(e) for e in ring.idempotents()]
    else:
        values = list(ring.idempotents)
    if args.json:
        _emit_json(
            {
                "command": "idempotents",
                "spec": pretty(spec),
                "ring": _label(ring),
                "idempotents": values,
                "count": len(values),
            }
        )
        return 0
    _emit(f"ring {_label(ring)} from {pretty(spec)}")
    _emit(f"idempotents ({len(values)}): {', '.join(str(v) for v in values)}")
    return 0


def _cmd_units(args: argparse.Namespace) -> int:
    spec, ring = _built(args)
    if isinstance(ring, LocalizedIntegers):
        criterion = (
            f"a/b is a unit exactly when gcd(a, {ring.modulus}) = 1;"
            f" membership already forces gcd(b, {ring.modulus}) = 1"
        )
        if args.json:
            _emit_json(
                {
                    "command": "units",
                    "spec": pretty(spec),
                    "ring": _label(ring),
                    "kind": "localized",
                    "units": None,
                    "count": None,
                    "criterion": criterion,
                }
            )
            return 0
        _emit(f"ring {_label(ring)} from {pretty(spec)}")
        _emit(f"units: {criterion}")
        return 0
    units = list(ring.units)
    if args.json:
        _emit_json(
            {
                "command": "units",
                "spec": pretty(spec),
                "ring": _label(ring),
                "kind": "finite",
                "units": units,
                "count": len(units),
                "criterion": None,
            }
        )
        return 0
    _emit(f"ring {_label(ring)} from {pretty(spec)}")
    _emit(f"units ({len(units)}): {', '.join(str(u) for u in units)}")
    return 0


# ---------------------------------------------------------------------------
# laws / examples


def _cmd_laws(args: argparse.Namespace) -> int:
    if args.catalog:
        if args.law is not None:
            if args.law not in LAW_IDS:
                raise _UsageError(
                    f"unknown law {args.law!r}; known: {', '.join(LAW_IDS)}"
                )
            reports = run_law(args.law)
        else:
            reports = run_catalog()
    else:
        spec = _load_spec(args)
        if isinstance(spec, LocalizedSpec):
            raise _UsageError(
                "laws --spec needs a finite ring; the built-in catalog already"
                " carries the localization instances (use laws --catalog)"
            )
        ring = build(spec)
        reports = run_ring(ring, label=pretty(spec))
        if args.law is not None:
            if args.law not in LAW_IDS:
                raise _UsageError(
                    f"unknown law {args.law!r}; known: {', '.join(LAW_IDS)}"
                )
            reports = [r for r in reports if r.law_id == args.law]
    failed = sum(1 for r in reports if r.verdict == "fail")
    if args.json:
        sys.stdout.write(reports_to_json(reports))
        return 1 if failed else 0
    for r in reports:
        line = f"{r.verdict:7s} {r.law_id:40s} {r.inputs}"
        if r.reason:
            line += f"  [{r.reason}]"
        _emit(line)
    tally = summarize(reports)
    _emit(
        f"{tally['laws']} laws, {tally['reports']} instances:"
        f" {tally['pass']} pass, {tally['fail']} fail, {tally['skipped']} skipped"
        f" ({tally['discriminating']} discriminating, {tally['scanned']} elements scanned)"
    )
    return 1 if failed else 0


def _cmd_examples(args: argparse.Namespace) -> int:
    report = reproduce_examples(bound=args.bound)
    if args.json:
        _emit_json({"command": "examples", **report})
        return 0
    one = report["full_ring_weakly_clean_not_clean"]
    _emit(f"case study 1: the full ideal of {one['ring']}")
    _emit(
        f"  generator {one['generator']} is a unit: {_yn(one['generator_is_unit'])}"
        f" -> the ideal is {one['ideal']}"
    )
    _emit(
        f"  weakly clean {_yn(one['weakly_clean'])}, clean {_yn(one['clean'])};"
        f" non-clean witness {one['non_clean_witness']}"
    )
    checks = one["witness_checks"]
    _emit(
        f"  witness checks: x unit {_yn(checks['x_is_unit'])},"
        f" x-1 unit {_yn(checks['x_minus_one_is_unit'])},"
        f" x+1 unit {_yn(checks['x_plus_one_is_unit'])}"
    )
    two = report["product_not_weakly_clean"]
    product = two["product"]
    _emit(f"case study 2: a product ideal over {two['ring']}")
    _emit(
        f"  generators {', '.join(two['generators'])} are units ->"
        f" component ideals {', '.join(two['component_ideals'])}"
    )
    _emit(f"  weakly clean {_yn(product['ok'])}: {product['detail']}")
    if product["witness"]:
        pairs = ", ".join(
            f"{w} ({c})"
            for w, c in zip(product["witness"], product["witness_sign_classes"])
        )
        _emit(f"  witness tuple: {pairs}")
    return 0


# ---------------------------------------------------------------------------
# parser assembly


def _add_spec_arguments(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("spec", nargs="?", help="inline ring spec, e.g. '(zn 6)'")
    sub.add_argument(
        "--spec-file",
        metavar="FILE",
        help="read the spec from FILE (also accepts raw bimodule tables)",
    )


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="cleanrings",
        description="Decide clean and weakly clean properties of ring elements and ideals.",
    )
    # The subcommand parser re-applies its own --json default to the shared
    # namespace, so the pre-command flag needs its own slot; main() merges.
    top.add_argument(
        "--json",
        action="store_true",
        dest="json_global",
        help="emit machine-readable JSON",
    )
    commands = top.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit machine-readable JSON")

    analyze = commands.add_parser(
        "analyze", parents=[common], help="decomposition census for one element"
    )
    _add_spec_arguments(analyze)
    analyze.add_argument("--element", required=True, help="index, or a/b for localizations")
    analyze.set_defaults(func=_cmd_analyze)

    ideal = commands.add_parser(
        "ideal", parents=[common], help="check a property over a whole ideal"
    )
    _add_spec_arguments(ideal)
    ideal.add_argument(
        "--gens",
        nargs="+",
        metavar="G",
        help="ideal generators (omit for the whole ring)",
    )
    ideal.add_argument("--check", required=True, choices=CHECKS)
    ideal.add_argument(
        "--bound",
        type=int,
        default=64,
        help="numerator/denominator bound for localization witness searches",
    )
    ideal.set_defaults(func=_cmd_ideal)

    for name, func, blurb in (
        ("radical", _cmd_radical, "the intersection of the maximal left ideals"),
        ("idempotents", _cmd_idempotents, "list the idempotent elements"),
        ("units", _cmd_units, "list the units, or state the unit criterion"),
    ):
        sub = commands.add_parser(name, parents=[common], help=blurb)
        _add_spec_arguments(sub)
        sub.set_defaults(func=func)

    laws = commands.add_parser(
        "laws", parents=[common], help="run the law suite over the catalog or one ring"
    )
    target = laws.add_mutually_exclusive_group(required=True)
    target.add_argument(
        "--catalog", action="store_true", help="run over the built-in ring catalog"
    )
    target.add_argument("--spec", help="run the per-ring laws on one finite ring")
    target.add_argument(
        "--spec-file", metavar="FILE", help="like --spec, reading FILE"
    )
    laws.add_argument("--law", help="restrict to a single law id")
    laws.set_defaults(func=_cmd_laws)

    examples = commands.add_parser(
        "examples",
        parents=[common],
        help="reproduce the two bundled localization case studies",
    )
    examples.add_argument(
        "--bound", type=int, default=64, help="witness search bound"
    )
    examples.set_defaults(func=_cmd_examples)
    return top


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    args.json = args.json or getattr(args, "json_global", False)
    try:
        return args.func(args)
    except SpecError as exc:
        print(f"cleanrings: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"cleanrings: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:  # construction and usage failures
        print(f"cleanrings: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: ``ppl <command> PRODUCT_FILE [options]``.

Text reports are one record per line, ``KIND key=value ...``; values with
spaces are double-quoted.  ``--format json`` prints the same records as a
JSON list.  Exit codes: 0 success, 1 usage, 2 invalid input, 3 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys

from .description import load_product
from .errors import InvalidInput, InvariantViolation, PeriodicProductError
from .finite_group import (
    element_order,
    enumerate_normal_subgroups,
    exponent_divides,
    involutions,
    power_subgroup,
)
from .periods import classify_rank1, enumerate_certified, relation_for
from .rng import SplitMix64
from .scans import sampled_lemma1_scan
from .theorems import (
    OUTSIDE,
    ProofBindings,
    corollary3_verdict,
    hopfian_verdict,
    inheritably_factorizable_verdict,
    inheritably_normal_verdict,
    proof_word_suite,
    simplicity_verdict,
    verdict_fields,
)
from .words import format_word, parse_letter, parse_word, strict_exponent_ok

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


# -- records ------------------------------------------------------------------


def _quote(value: str) -> str:
    if value and not any(c.isspace() or c in '"\'\\' for c in value):
        return value
    return json.dumps(value)


def render_text(records) -> str:
    lines = []
    for kind, fields in records:
        parts = [kind]
        for key, value in fields:
            parts.append(_quote(value) if key is None else f"{key}={_quote(value)}")
        lines.append(" ".join(parts))
    return "\n".join(lines) + ("\n" if lines else "")


def render_json(records) -> str:
    out = []
    for kind, fields in records:
        obj = {"kind": kind}
        for key, value in fields:
            obj["value" if key is None else key] = value
        out.append(obj)
    return json.dumps(out, indent=2) + "\n"


def parse_text(text: str) -> list[dict]:
    """Inverse of :func:`render_text`, producing the JSON object form."""
    out = []
    for line in text.splitlines():
        parts = shlex.split(line, posix=True)
        if not parts:
            continue
        obj = {"kind": parts[0]}
        for part in parts[1:]:
            key, sep, value = part.partition("=")
            if sep:
                obj[key] = value
            else:
                obj["value"] = part
        out.append(obj)
    return out


def _rec(kind, *fields, **kw):
    items = [(None, str(v)) for v in fields]
    items += [(k, str(v)) for k, v in kw.items()]
    return kind, items


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _verdict_records(verdict, spec, extra=()):
    fields = verdict_fields(verdict)
    label_all = spec.mode == "lenient" and not strict_exponent_ok(spec.n)
    if label_all and not verdict.outside_hypotheses:
        fields.append(("note", OUTSIDE))
    fields += list(extra)
    trace = [("question", str(verdict.question))] + list(extra) + [("reason", verdict.reason)]
    return [("VERDICT", fields), ("TRACE", trace)]


# -- commands -------------------------------------------------------------------


def cmd_validate(spec, args):
    recs = [_rec("PRODUCT", n=spec.n, mode=spec.mode, factors=len(spec.factors))]
    for name, g in spec.factors:
        recs.append(_rec("FACTOR", name=name, group=g.name, order=g.order,
                         identity=g.names[g.identity], involutions=len(involutions(g))))
    recs.append(_rec("VALID", "ok"))
    return recs


def _is_cyclic(g):
    return any(element_order(g, x) == g.order for x in range(g.order))


def cmd_analyze(spec, args):
    fam = spec.family
    recs = [_rec("PRODUCT", n=spec.n, mode=spec.mode, factors=len(spec.factors))]
    for name, g in spec.factors:
        recs.append(_rec("FACTOR", name=name, group=g.name, order=g.order,
                         involutions=len(involutions(g)),
                         power_order=power_subgroup(g, spec.n).order,
                         exponent_divides_n=_yn(exponent_divides(g, spec.n))))
    recs += _verdict_records(simplicity_verdict(fam), spec)
    recs += _verdict_records(hopfian_verdict(fam), spec)
    for i, (name, _) in enumerate(spec.factors):
        v = inheritably_factorizable_verdict(fam, i, bound=args.bound)
        recs += _verdict_records(v, spec, [("factor", name)])
    orders = {g.order for _, g in spec.factors}
    if len(orders) == 1 and all(_is_cyclic(g) for _, g in spec.factors):
        v = corollary3_verdict(len(spec.factors), orders.pop(), spec.n)
        extra = [(k, str(val)) for k, val in v.details.items()]
        recs += _verdict_records(v, spec, extra)
    return recs


def cmd_normal_subgroups(spec, args):
    fam = spec.family
    recs = []
    for i, (name, g) in enumerate(spec.factors):
        if args.factor and name != args.factor:
            continue
        subs = enumerate_normal_subgroups(g, bound=args.bound)
        powers = power_subgroup(g, spec.n)
        recs.append(_rec("FACTOR", name=name, order=g.order, normal_subgroups=len(subs),
                         power_order=powers.order))
        for k, sub in enumerate(subs):
            fields = [("factor", name), ("index", str(k)), ("order", str(sub.order)),
                      ("gens", ",".join(g.names[x] for x in sub.generators()) or "-"),
                      ("contains_power", _yn(powers.issubset(sub)))]
            if args.members:
                fields.append(("members", ",".join(g.names[x] for x in sub.sorted_members())))
            recs.append(("NORMAL", fields))
            v = inheritably_normal_verdict(fam, i, sub)
            recs += _verdict_records(v, spec, [("factor", name), ("index", str(k))])
    if args.factor and not recs:
        raise UsageError(f"no factor named {args.factor!r}")
    return recs


def cmd_periods(spec, args):
    fam = spec.family
    recs = []
    count = 0
    for cw in enumerate_certified(fam, args.max_syllables, limit=args.limit):
        count += 1
        recs.append(_rec("PERIOD", word=format_word(cw.canonical), length=len(cw),
                         relation=str(relation_for(cw, fam))))
    recs.append(_rec("SUMMARY", certified=count, max_syllables=args.max_syllables))
    return recs


def cmd_classify(spec, args):
    fam = spec.family
    w = parse_word(args.word, fam)
    cls = classify_rank1(w, method=args.method)
    recs = [_rec("CLASS", cls.tag)]
    core = cls.core.word if hasattr(cls.core, "word") else cls.core
    detail = [("input", format_word(w)), ("core", format_word(core)), ("length", str(len(core)))]
    wit = cls.witness
    if wit is not None and hasattr(wit, "shift"):
        detail += [("shift", str(wit.shift)), ("c", format_word(wit.c)), ("d", format_word(wit.d))]
    elif wit is not None:
        detail += [("period", str(wit.period)), ("start", str(wit.start)), ("run", str(wit.run_length))]
    recs.append(("DETAIL", detail))
    if cls.certified:
        recs.append(_rec("RELATION", text=str(relation_for(cls.core, fam))))
    return recs


def cmd_lemma1_scan(spec, args):
    rng = SplitMix64(args.seed)
    try:
        res = sampled_lemma1_scan(spec.family, args.samples, args.max_conj, rng)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from None
    recs = [_rec("SCAN", "ok" if res.ok else "fail", pairs=res.pairs, mismatches=res.mismatches),
            _rec("INFO", long_products=res.long_products, seed=args.seed, max_conj=args.max_conj)]
    if not res.ok:
        recs.append(_rec("MISMATCH", word=format_word(res.first_mismatch)))
    return recs, (EXIT_OK if res.ok else EXIT_INTERNAL)


_BIND_KEYS = ("a", "a1", "a2", "g", "b", "b1", "b2")


def cmd_proof_suite(spec, args):
    fam = spec.family
    i = fam.factor_index(args.factor) if args.factor else 0
    j = fam.factor_index(args.other) if args.other else (1 if i == 0 else 0)
    values = {}
    for item in args.bind:
        key, sep, value = item.partition("=")
        if not sep or key not in _BIND_KEYS:
            raise UsageError(f"bad binding {item!r}; expected one of {', '.join(_BIND_KEYS)}=<element>")
        f = i if key in ("a", "a1", "a2", "g") else j
        token = value if ":" in value else f"{fam.names[f]}:{value}"
        fi, x = parse_letter(token, fam)
        if fi != f:
            raise UsageError(f"binding {key} must come from factor {fam.names[f]}")
        values[key] = x
    if not values:
        raise UsageError("proof-suite needs --bind options")
    try:
        report = proof_word_suite(fam, ProofBindings(factor=i, other=j, **values))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    recs = []
    for r in report.results:
        recs.append(_rec("PROOF", word=r.name, status=r.status, cls=r.tag,
                         congruent=_yn(r.congruent), power_congruent=_yn(r.power_congruent),
                         normal_form=format_word(r.word), length=len(r.word),
                         image=format_word(r.image)))
    recs.append(_rec("SUITE", "PASS" if report.passed else "FAIL", words=len(report.results)))
    return recs, (EXIT_OK if report.passed else EXIT_INTERNAL)


COMMANDS = {
    "validate": cmd_validate,
    "analyze": cmd_analyze,
    "normal-subgroups": cmd_normal_subgroups,
    "periods": cmd_periods,
    "classify": cmd_classify,
    "lemma1-scan": cmd_lemma1_scan,
    "proof-suite": cmd_proof_suite,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("product", help="product description file")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--lenient", action="store_true",
                        help="evaluate criteria even outside the theorems' hypotheses")
    common.add_argument("--bound", type=int, default=4096, help="max group order for lattice enumeration")

    parser = _Parser(prog="ppl", description="Periodic products of finite groups")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("validate", parents=[common])
    sub.add_parser("analyze", parents=[common])
    p = sub.add_parser("normal-subgroups", parents=[common])
    p.add_argument("--factor")
    p.add_argument("--members", action="store_true")
    p = sub.add_parser("periods", parents=[common])
    p.add_argument("--max-syllables", type=int, default=4)
    p.add_argument("--limit", type=int)
    p = sub.add_parser("classify", parents=[common])
    p.add_argument("--word", required=True)
    p.add_argument("--method", choices=("scan", "runs"), default="scan")
    p = sub.add_parser("lemma1-scan", parents=[common])
    p.add_argument("--max-conj", type=int, default=4)
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p = sub.add_parser("proof-suite", parents=[common])
    p.add_argument("--bind", action="append", default=[], metavar="NAME=ELEMENT")
    p.add_argument("--factor")
    p.add_argument("--other")
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    try:
        spec = load_product(args.product, mode="lenient" if args.lenient else None)
        result = COMMANDS[args.command](spec, args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return EXIT_USAGE
    except (InvariantViolation, AssertionError) as exc:
        print(f"internal error: {exc}", file=stderr)
        return EXIT_INTERNAL
    except (PeriodicProductError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT
    records, code = result if isinstance(result, tuple) else (result, EXIT_OK)
    render = render_json if args.format == "json" else render_text
    stdout.write(render(records))
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

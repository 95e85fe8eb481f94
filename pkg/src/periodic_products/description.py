"""Line-oriented text format for groups and periodic-product configurations.

Group description::

    name V4                      # optional
    kind cyclic 12 [gen b]       # or: dihedral <r> | sym <k<=5> | product <A> <B> | table
    elements e a b c             # 'kind table' only
    row e: e a b c
    row a: a e c b
    ...

Product description::

    n 665
    mode strict                  # or lenient (default strict)
    group A cyclic 2             # auxiliary group, usable by 'product'
    factor g1 cyclic 1995
    factor g2 file other.grp     # path relative to the product file
    factor g3 table
    elements e x
    row e: e x
    row x: x e

``#`` starts a comment.  ``elements``/``row`` lines belong to the closest
preceding ``table`` definition.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

from .errors import NotAGroup, ParseError, StrictViolation
from .finite_group import FiniteGroup, cyclic, dihedral, direct_product, symmetric
from .words import MIN_STRICT_EXPONENT, FactorFamily, strict_exponent_ok

_TOKEN = re.compile(r"\S+")
KINDS = ("cyclic", "dihedral", "sym", "product", "table", "file")


@dataclass
class _Tok:
    text: str
    line: int
    col: int


def _lines(text):
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        toks = [_Tok(m.group(), lineno, m.start() + 1) for m in _TOKEN.finditer(body)]
        if toks:
            yield toks


def _err(tok, message):
    return ParseError(message, tok.line, tok.col)


def _int(tok, what):
    try:
        value = int(tok.text)
    except ValueError:
        raise _err(tok, f"{what} must be an integer, got {tok.text!r}") from None
    return value


@dataclass
class _Definition:
    name: str
    kind: list  # tokens after the name, starting with the kind keyword
    anchor: _Tok
    elements: list | None = None
    rows: dict = field(default_factory=dict)


def _table_line(defn, toks):
    head = toks[0]
    if defn is None or defn.kind[0].text != "table":
        raise _err(head, f"'{head.text}' outside a table definition")
    if head.text == "elements":
        if defn.elements is not None:
            raise _err(head, "duplicate 'elements' line")
        if len(toks) < 2:
            raise _err(head, "'elements' needs at least one name")
        defn.elements = toks[1:]
        return
    # row x: y1 y2 ...
    if len(toks) < 2:
        raise _err(head, "'row' needs an element name")
    label = toks[1].text
    rest = toks[2:]
    if label.endswith(":"):
        label = label[:-1]
    elif rest and rest[0].text == ":":
        rest = rest[1:]
    else:
        raise _err(toks[1], "expected 'row <element>: ...'")
    if label in defn.rows:
        raise _err(toks[1], f"duplicate row for {label!r}")
    defn.rows[label] = (toks[1], rest)


def _build_table(defn):
    if defn.elements is None:
        raise _err(defn.anchor, f"table {defn.name!r} has no 'elements' line")
    names = [t.text for t in defn.elements]
    index = {}
    for t in defn.elements:
        if t.text in index:
            raise _err(t, f"duplicate element name {t.text!r}")
        index[t.text] = len(index)
    table = []
    for nm in names:
        if nm not in defn.rows:
            raise _err(defn.anchor, f"table {defn.name!r} is missing the row for {nm!r}")
    for label, (tok, _) in defn.rows.items():
        if label not in index:
            raise _err(tok, f"row for unknown element {label!r}")
    for nm in names:
        tok, entries = defn.rows[nm]
        if len(entries) != len(names):
            raise _err(tok, f"row {nm!r} has {len(entries)} entries, expected {len(names)}")
        row = []
        for t in entries:
            if t.text not in index:
                raise _err(t, f"unknown element {t.text!r}")
            row.append(index[t.text])
        table.append(row)
    return FiniteGroup(table, names, defn.name)


def _build(defn, registry, base_dir):
    kind, args = defn.kind[0], defn.kind[1:]
    name = defn.name

    def nargs(lo, hi=None):
        hi = lo if hi is None else hi
        if not lo <= len(args) <= hi:
            raise _err(kind, f"'{kind.text}' takes {lo if lo == hi else f'{lo}-{hi}'} argument(s)")

    if kind.text == "cyclic":
        nargs(1, 3)
        r = _int(args[0], "order")
        if r < 1:
            raise _err(args[0], "order must be positive")
        gen = "a"
        if len(args) > 1:
            if len(args) != 3 or args[1].text != "gen":
                raise _err(args[1], "expected 'gen <name>'")
            gen = args[2].text
        return cyclic(r, gen=gen, name=name)
    if kind.text == "dihedral":
        nargs(1)
        r = _int(args[0], "dihedral parameter")
        if r < 1:
            raise _err(args[0], "dihedral parameter must be positive")
        return dihedral(r, name=name)
    if kind.text == "sym":
        nargs(1)
        k = _int(args[0], "degree")
        if not 1 <= k <= 5:
            raise _err(args[0], "symmetric degree must be between 1 and 5")
        return symmetric(k, name=name)
    if kind.text == "product":
        nargs(2)
        parts = []
        for t in args:
            if t.text not in registry:
                raise _err(t, f"unknown group {t.text!r}")
            parts.append(registry[t.text])
        return direct_product(parts[0], parts[1], name=name)
    if kind.text == "table":
        nargs(0)
        return _build_table(defn)
    if kind.text == "file":
        nargs(1)
        path = Path(args[0].text)
        if base_dir is not None and not path.is_absolute():
            path = Path(base_dir) / path
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise _err(args[0], f"cannot read {path}: {exc.strerror}") from None
        return load_group(text, registry=registry, base_dir=path.parent, name=name)
    raise _err(kind, f"unknown group kind {kind.text!r} (expected one of {', '.join(KINDS)})")


def _build_checked(defn, registry, base_dir):
    try:
        return _build(defn, registry, base_dir)
    except NotAGroup:
        raise
    except ValueError as exc:
        raise _err(defn.anchor, str(exc)) from None


def load_group(text: str, registry: dict | None = None, base_dir=None, name: str | None = None) -> FiniteGroup:
    """Parse and validate a group description.

    ``registry`` maps names to already-built groups for ``kind product``.
    Raises :class:`ParseError` or :class:`NotAGroup`.
    """
    registry = dict(registry or {})
    defn = None
    declared_name = None
    for toks in _lines(text):
        head = toks[0]
        if head.text == "name":
            if len(toks) != 2:
                raise _err(head, "'name' takes one argument")
            declared_name = toks[1].text
        elif head.text == "kind":
            if defn is not None:
                raise _err(head, "more than one 'kind' line")
            if len(toks) < 2:
                raise _err(head, "'kind' needs a group kind")
            defn = _Definition(name or "G", toks[1:], head)
        elif head.text in ("elements", "row"):
            _table_line(defn, toks)
        else:
            raise _err(head, f"unexpected directive {head.text!r}")
    if defn is None:
        raise ParseError("missing 'kind' line", 1)
    defn.name = name or declared_name or "G"
    return _build_checked(defn, registry, base_dir)


@dataclass(frozen=True)
class ProductSpec:
    n: int
    mode: str
    factors: tuple  # of (name, FiniteGroup)

    @property
    def strict(self) -> bool:
        return self.mode == "strict"

    @cached_property
    def family(self) -> FactorFamily:
        return FactorFamily([g for _, g in self.factors], self.n, strict=self.strict,
                            names=[nm for nm, _ in self.factors])


def parse_product(text: str, base_dir=None, mode: str | None = None) -> ProductSpec:
    """Parse a product description; ``mode`` overrides the file's ``mode`` line.

    Raises :class:`ParseError`, :class:`NotAGroup` or, in strict mode,
    :class:`StrictViolation` when n is not an odd number >= 665.
    """
    n_tok = None
    file_mode = None
    defs: list[tuple[str, _Definition]] = []  # ('group'|'factor', defn)
    seen = {}
    for toks in _lines(text):
        head = toks[0]
        word = head.text
        if word == "n":
            if len(toks) != 2:
                raise _err(head, "'n' takes one argument")
            if n_tok is not None:
                raise _err(head, "duplicate 'n' line")
            n_tok = toks[1]
        elif word == "mode":
            if len(toks) != 2 or toks[1].text not in ("strict", "lenient"):
                raise _err(head, "expected 'mode strict' or 'mode lenient'")
            file_mode = toks[1].text
        elif word in ("group", "factor"):
            if len(toks) < 3:
                raise _err(head, f"'{word}' needs a name and a group kind")
            nm = toks[1].text
            if nm in seen:
                raise _err(toks[1], f"duplicate name {nm!r}")
            if ":" in nm:
                raise _err(toks[1], "names may not contain ':'")
            kind = toks[2:]
            if kind[0].text == "kind":
                kind = kind[1:]
                if not kind:
                    raise _err(toks[2], "'kind' needs a group kind")
            defn = _Definition(nm, kind, toks[1])
            seen[nm] = defn
            defs.append((word, defn))
        elif word in ("elements", "row"):
            _table_line(defs[-1][1] if defs else None, toks)
        else:
            raise _err(head, f"unexpected directive {word!r}")

    if n_tok is None:
        raise ParseError("missing 'n' line", 1)
    n = _int(n_tok, "n")
    if n < 1:
        raise _err(n_tok, "n must be positive")
    factors = [d for kind, d in defs if kind == "factor"]
    if len(factors) < 2:
        raise ParseError(f"need >= 2 factors, found {len(factors)}", 1)
    mode = mode or file_mode or "strict"
    if mode == "strict" and not strict_exponent_ok(n):
        raise StrictViolation(
            f"line {n_tok.line}: strict mode requires odd n >= {MIN_STRICT_EXPONENT}, got {n}")

    registry = {}
    built = []
    for kind, defn in defs:
        group = _build_checked(defn, registry, base_dir)
        registry[defn.name] = group
        if kind == "factor":
            if group.order < 2:
                raise _err(defn.anchor, f"factor {defn.name!r} is trivial")
            built.append((defn.name, group))
    spec = ProductSpec(n, mode, tuple(built))
    spec.family  # validate eagerly
    return spec


def load_product(path, mode: str | None = None) -> ProductSpec:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_product(text, base_dir=path.parent, mode=mode)

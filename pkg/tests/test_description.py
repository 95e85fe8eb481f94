from pathlib import Path

import pytest

from periodic_products import (
    NotAGroup,
    ParseError,
    StrictViolation,
    load_group,
    load_product,
    parse_product,
)

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"


def test_corollary3_instance():
    spec = parse_product("n 665\nfactor g1 cyclic 1995\nfactor g2 cyclic 1995\n")
    assert spec.n == 665 and spec.strict
    assert [nm for nm, _ in spec.factors] == ["g1", "g2"]
    assert [g.order for _, g in spec.factors] == [1995, 1995]
    assert spec.family.names == ("g1", "g2")


@pytest.mark.parametrize("n", [664, 663, 666, 1])
def test_strict_rejects_bad_exponent(n):
    with pytest.raises(StrictViolation):
        parse_product(f"n {n}\nfactor g1 cyclic 3\nfactor g2 cyclic 3\n")


def test_lenient_accepts_bad_exponent():
    text = "n 663\nmode lenient\nfactor g1 cyclic 3\nfactor g2 cyclic 3\n"
    spec = parse_product(text)
    assert spec.mode == "lenient" and not spec.family.strict
    assert parse_product("n 663\nfactor g1 cyclic 3\nfactor g2 cyclic 3\n", mode="lenient").n == 663
    with pytest.raises(StrictViolation):
        parse_product(text, mode="strict")


def test_one_factor_is_an_error():
    with pytest.raises(ParseError) as info:
        parse_product("n 665\nfactor g1 cyclic 3\n")
    assert "need >= 2 factors" in str(info.value)


def test_parse_errors_carry_positions():
    with pytest.raises(ParseError) as info:
        parse_product("n 665\nfactor g1 cyclic 3\nfactor g2 cyclic x\n")
    assert (info.value.line, info.value.column) == (3, 18)
    with pytest.raises(ParseError) as info:
        parse_product("n 665\nbogus 1\n")
    assert info.value.line == 2
    with pytest.raises(ParseError):
        parse_product("factor g1 cyclic 3\nfactor g2 cyclic 3\n")
    with pytest.raises(ParseError):
        parse_product("n 665\nn 667\nfactor g1 cyclic 3\nfactor g2 cyclic 3\n")
    with pytest.raises(ParseError):
        parse_product("n 665\nfactor g1 cyclic 3\nfactor g1 cyclic 5\n")
    with pytest.raises(ParseError):
        parse_product("n 665\nfactor g1 sym 6\nfactor g2 cyclic 3\n")
    with pytest.raises(ParseError):
        parse_product("n 665\nfactor g1 cyclic 1\nfactor g2 cyclic 3\n")


def test_not_a_group_is_forwarded():
    text = "n 665\nfactor g1 table\nelements e a\nrow e: e a\nrow a: a a\nfactor g2 cyclic 3\n"
    with pytest.raises(NotAGroup):
        parse_product(text)


def test_inline_tables_and_auxiliary_groups():
    text = """
    n 665
    group A cyclic 2
    group B cyclic 3 gen b
    factor g1 product A B
    factor g2 dihedral 3
    factor g3 table
    elements e x
    row e: e x
    row x: x e
    factor g4 kind sym 3   # the optional 'kind' keyword
    """
    spec = parse_product(text)
    assert [g.order for _, g in spec.factors] == [6, 6, 2, 6]
    assert spec.factors[0][1].names[0] == "(e,e)"
    assert spec.factors[2][1].names == ("e", "x")


def test_row_syntax_variants():
    g = load_group("kind table\nelements e x\nrow e : e x\nrow x: x e\n")
    assert g.order == 2
    with pytest.raises(ParseError):
        load_group("kind table\nelements e x\nrow e e x\nrow x: x e\n")
    with pytest.raises(ParseError):
        load_group("kind table\nelements e x\nrow e: e x\nrow x: x\n")
    with pytest.raises(ParseError):
        load_group("kind table\nelements e x\nrow e: e y\nrow x: x e\n")
    with pytest.raises(ParseError):
        load_group("elements e x\n")
    with pytest.raises(ParseError):
        load_group("name only\n")


def test_file_references(tmp_path):
    (tmp_path / "z5.grp").write_text("name Z5\nkind cyclic 5 gen b\n")
    (tmp_path / "prod.ppl").write_text("n 665\nfactor g1 cyclic 3\nfactor g2 file z5.grp\n")
    spec = load_product(tmp_path / "prod.ppl")
    assert spec.factors[1][1].order == 5
    assert spec.factors[1][1].names[1] == "b"
    (tmp_path / "bad.ppl").write_text("n 665\nfactor g1 cyclic 3\nfactor g2 file missing.grp\n")
    with pytest.raises(ParseError):
        load_product(tmp_path / "bad.ppl")
    with pytest.raises(ParseError):
        load_product(tmp_path / "nothing.ppl")


@pytest.mark.parametrize("name", ["corollary3.ppl", "z3_z3.ppl", "z2_s3.ppl", "v4_z2.ppl", "lenient663.ppl"])
def test_bundled_demo_inputs_parse(name):
    spec = load_product(DATA / name)
    assert len(spec.factors) >= 2

import pytest
from hypothesis import given
from hypothesis import strategies as st

from homolab.instancefile import load_instance, parse_instance, serialize_instance
from homolab.invariants import proj_dim
from homolab.polynomials import ParseError
from homolab.verify.instances import catalog_instances, random_instance

HYPER = "field 7\nring x y\nideal x*y\nmodule M\n gens e0:0\n rels x*e0"


def test_hypersurface_example():
    inst = parse_instance(HYPER)
    M = inst.modules["M"]
    assert M.hilbert_vector(0, 3) == [1, 1, 1, 1]
    assert proj_dim(M).is_infinite


@pytest.mark.parametrize("text,line,col,fragment", [
    ("ring x y\nfield 7\n", 1, 1, "first statement"),
    ("", 1, 1, "missing"),
    ("field 8\nring x\n", 1, 7, "not prime"),
    ("field 7\nring x y\nmodule M\n  gens e0:0, e1:0\n  rels x*e0 + e1\n", 5, 8, "inhomogeneous"),
    ("field 7\nring x y\nideal x^2 + y\n", 3, 7, "inhomogeneous"),
    ("field 7\nring x y\nmodule M\n  gens e0:0\n  rels x*e0 +\n", 5, 14, ""),
    ("field 7\nring x y\nmodule M\n  gens e0:0\n  rels q*e0\n", 5, 8, ""),
    ("field 7\nring x y\nmodule M\nmodule M\n  gens e0:0\n", 4, 8, "duplicate"),
    ("field 7\nring x y\n  gens e0:0\n", 3, 3, "outside"),
    ("field 7\nring x y\nmodule M\n  gens e0\n", 4, 8, "<name>:<degree>"),
])
def test_parse_errors(text, line, col, fragment):
    with pytest.raises(ParseError) as e:
        parse_instance(text)
    assert (e.value.line, e.value.column) == (line, col)
    assert fragment in str(e.value)


def test_comments_and_empty_module():
    inst = parse_instance("# header\nfield 7  # prime\nring x\nmodule Z\n  gens\n")
    assert inst.modules["Z"].ngens == 0


@given(st.integers(0, 500))
def test_round_trip_random(seed):
    inst = random_instance(seed)
    text = serialize_instance(inst)
    again = parse_instance(text, name=inst.name)
    assert again.same_as(inst)
    assert serialize_instance(again) == text


def test_round_trip_catalog():
    for inst in catalog_instances():
        again = parse_instance(serialize_instance(inst))
        assert again.same_as(inst)


def test_load_instance(tmp_path):
    f = tmp_path / "hyper.inst"
    f.write_text(HYPER, encoding="utf-8")
    inst = load_instance(f)
    assert inst.name == "hyper" and list(inst.modules) == ["M"]

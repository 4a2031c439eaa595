import json
import re
from pathlib import Path

import pytest

from toric_contact import corpus
from toric_contact.cli import build_parser, main, run
from toric_contact.io import ConeFileError, dumps, parse_cone, render_text

CORPUS = Path(corpus.__file__).parent / "corpus"


def cli(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_orthant():
    cf = parse_cone('{"dim":3,"normals":[[1,0,0],[0,1,0],[0,0,1]]}')
    assert cf.cone.normals == ((1, 0, 0), (0, 1, 0), (0, 0, 1)) and cf.mode == "integral"


@pytest.mark.parametrize("text, kind, message", [
    ('{"dim":3,"normals":[[2,0,0],[0,1,0],[0,0,1]]}', "invalid", "normal 1 not primitive (gcd 2)"),
    ('{"dim":3,"normals":[[1,0],[0,1,0],[0,0,1]]}', "syntax", "normal 1 has length 2, expected 3"),
    ('{"dim":3,"normals":[[1,0,0],[0,1,0],[1,0,0]]}', "invalid", "normal 3 duplicates normal 1"),
    ('{"dim":3,"normals":[[1,0,0],[0,1.5,0]]}', "syntax", "normal 2 entry 2 is not an integer: 1.5"),
    ('{"dim":3,"normals":[[true,0,0]]}', "syntax", "normal 1 entry 1 is not an integer: True"),
    ('{"dim":3}', "syntax", "missing field 'normals'"),
    ('{"dim":3,"normals":[[1,0,0]],"mode":"real"}', "syntax", "field 'mode' must be one of integral, rational"),
    ('{"dim":3,"normals":[[1,0,0]],"extra":1}', "syntax", "unknown field(s): extra"),
    ('[1, 2]', "syntax", "top level must be a JSON object"),
])
def test_parse_errors(text, kind, message):
    with pytest.raises(ConeFileError) as info:
        parse_cone(text)
    assert info.value.kind == kind
    assert str(info.value) == message


def test_parse_error_names_line():
    with pytest.raises(ConeFileError, match="line 2"):
        parse_cone('{"dim": 3,\n "normals": [[1,0,0],}')
    with pytest.raises(ConeFileError, match="UTF-8"):
        parse_cone(b"\xff\xfe")


def test_contact_square_json(capsys):
    code, out, _ = cli(capsys, "contact", CORPUS / "square.json", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["contact"]["betti"] == [1, 0, 1, 1, 0, 1]
    assert doc["contact"]["odd_generators"] == {"3": ["x3 - x4"], "5": ["x3*x4"]}
    assert list(doc)[:8] == ["input", "normalization", "validation", "equivariant",
                             "toric", "contact", "checks", "version"]
    assert all(c["status"] == "pass" for c in doc["checks"])


def test_validate_lens(capsys):
    code, out, err = cli(capsys, "validate", CORPUS / "lens.json", "--format", "json")
    assert code == 1
    (v,) = json.loads(out)["validation"]["violations"]
    assert v["face"] == [1, 3] and v["divisors"] == [1, 2]
    assert "face {1,3}: normals not a direct summand, divisors (1,2)" in err


def test_normalize_orthant(capsys):
    code, out, _ = cli(capsys, "normalize", CORPUS / "orthant3.json")
    assert code == 0
    assert "normalization.u: [1, 1, 1]" in out
    assert "normalization.D[0]: [1, -1, 0]" in out
    assert "normalization.transformed_normals[1]: [-1, 1, 0]" in out


def test_cube_torsion_in_text(capsys):
    code, out, _ = cli(capsys, "contact", CORPUS / "cube.json")
    assert code == 0
    assert "contact.torsion.4: [2]" in out
    assert "contact.betti: [1, 0, 2, 0, 0, 2, 0, 1]" in out


def test_nondelzant_needs_rational(capsys, tmp_path):
    code, _, err = cli(capsys, "contact", CORPUS / "nondelzant.json")
    assert code == 1
    assert "invalid: vertex (0, 1/2) on facets {1,3}: normals have determinant -2" in err
    code, out, _ = cli(capsys, "contact", CORPUS / "nondelzant.json", "--rational", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["contact"]["betti"] == [1, 0, 2, 2, 0, 1] and doc["contact"]["torsion"] is None
    f = tmp_path / "rational.json"
    f.write_text(json.dumps({"dim": 3, "normals": corpus.load_bundled("nondelzant").normals, "mode": "rational"}))
    assert cli(capsys, "validate", f)[0] == 0


@pytest.mark.parametrize("command", ["validate", "normalize", "equivariant", "toric",
                                     "contact", "stabilizers", "report"])
def test_exit_codes_over_corpus(capsys, command):
    for path in sorted(CORPUS.glob("*.json")):
        code, _, _ = cli(capsys, command, path)
        negative = path.stem in corpus.NEGATIVE
        if command == "normalize":
            assert code == 0
        elif command in ("equivariant", "stabilizers") and path.stem == "nondelzant":
            assert code == 0  # good, only the smoothness criterion fails
        else:
            assert code == (1 if negative else 0), (command, path.stem)


def test_partial_and_stabilizers(capsys):
    code, out, _ = cli(capsys, "partial", CORPUS / "square.json", "--rank", "1", "--max-degree", "4",
                       "--format", "json")
    assert code == 0 and json.loads(out)["partial"]["hilbert"] == [1, 3, 4, 4, 4]
    code, out, _ = cli(capsys, "stabilizers", CORPUS / "square.json", "--format", "json")
    stab = json.loads(out)["stabilizers"]
    assert {"face": [1, 2], "dimension": 2, "divisors": [1, 1], "smooth": True} in stab
    code, _, err = cli(capsys, "partial", CORPUS / "square.json", "--rank", "5")
    assert code == 2 and "--rank" in err


def test_usage_errors(capsys, tmp_path):
    assert cli(capsys, "contact", tmp_path / "missing.json")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = cli(capsys, "contact", bad)
    assert code == 2 and "malformed JSON" in err
    assert cli(capsys, "contact")[0] == 2
    assert cli(capsys, "frobnicate", bad)[0] == 2
    assert cli(capsys, "contact", CORPUS / "square.json", "--format", "xml")[0] == 2
    assert cli(capsys, "equivariant", CORPUS / "square.json", "--max-degree", "-1")[0] == 2
    assert cli(capsys, "corpus")[0] == 2


def test_invalid_normal_exits_one(capsys, tmp_path):
    f = tmp_path / "c.json"
    f.write_text('{"dim":3,"normals":[[2,0,0],[0,1,0],[0,0,1]]}')
    code, out, err = cli(capsys, "validate", f)
    assert code == 1 and "normal 1 not primitive (gcd 2)" in err


def test_report_round_trip_and_stability(capsys):
    args = build_parser().parse_args(["report", str(CORPUS / "cube.json"), "--format", "json"])
    _, doc = run(args)
    code, out, _ = cli(capsys, "report", CORPUS / "cube.json", "--format", "json")
    assert code == 0
    assert json.loads(out) == doc
    assert dumps(json.loads(out)) == out
    assert cli(capsys, "report", CORPUS / "cube.json", "--format", "json")[1] == out


def _json_leaves(x):
    if isinstance(x, dict):
        for v in x.values():
            yield from _json_leaves(v)
    elif isinstance(x, list):
        for v in x:
            yield from _json_leaves(v)
    else:
        yield x


NUMBER = re.compile(r"-?\d+(?:/\d+)?")


@pytest.mark.parametrize("name", ["square", "cube", "lens"])
def test_text_and_json_carry_same_numbers(capsys, name):
    _, js, _ = cli(capsys, "report", CORPUS / f"{name}.json", "--format", "json")
    _, text, _ = cli(capsys, "report", CORPUS / f"{name}.json", "--format", "text")
    from_json = []
    for leaf in _json_leaves(json.loads(js)):
        if isinstance(leaf, bool) or leaf is None:
            continue
        from_json.extend(NUMBER.findall(str(leaf)))
    from_text = []
    for line in text.splitlines():
        from_text.extend(NUMBER.findall(line.split(": ", 1)[1]))
    assert from_text == from_json


def test_output_flag_and_corpus_command(capsys, tmp_path):
    out = tmp_path / "sq.txt"
    assert cli(capsys, "toric", CORPUS / "square.json", "--output", out)[0] == 0
    assert "toric.ranks: [1, 2, 1, 0]" in out.read_text()
    d1, d2 = tmp_path / "a", tmp_path / "b"
    assert cli(capsys, "corpus", "--output", d1, "--seed", "3")[0] == 0
    assert cli(capsys, "corpus", "--output", d2, "--seed", "3")[0] == 0
    names = sorted(p.name for p in d1.iterdir())
    assert "square-twist0.json" in names and len(names) == 3 * len(corpus.bundled_names())
    assert all((d1 / n).read_text() == (d2 / n).read_text() for n in names)
    twisted = parse_cone((d1 / "cube-twist1.json").read_text()).cone
    assert twisted.n == 4


def test_render_text_flattens():
    assert render_text({"a": {"b": [1, 2]}, "c": [{"d": True}], "e": None}) == "a.b: [1, 2]\nc[0].d: yes\ne: -\n"

import argparse
import json
import pathlib

import pytest

import bidouble.cli as cli
from bidouble.citations import ALL_LABELS
from bidouble.errors import ConsistencyError

DATA = pathlib.Path(__file__).parent / "data"

GOLDEN_MAX4_CSV = """\
n1,n2,n3,parity,k_squared,chi,rho_gt_1,line_bundle,uc_kind,uc_value,recipe_deg_c,recipe_deg_cprime,z_count
0,2,2,even,4,1,true,exists,exact,1,,,
0,2,4,even,0,2,true,exists,exact,1,4,2,14
0,4,4,even,4,4,true,open,upper_bound,1..2,6,3,24
1,1,1,odd,9,1,false,impossible,lower_bound_only,>=2,,,
1,1,3,odd,1,1,true,impossible,lower_bound_only,>=2,,,
1,3,3,odd,1,2,true,impossible,lower_bound_only,>=2,,,
2,2,2,even,0,1,true,open,upper_bound,1..2,3,1,12
2,2,4,even,4,3,true,open,upper_bound,1..2,6,3,22
2,4,4,even,16,6,false,impossible,exact,2,9,5,34
3,3,3,odd,9,4,false,impossible,lower_bound_only,>=2,,,
4,4,4,even,36,10,false,impossible,exact,2,12,7,48
"""


def run(argv, capsys):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def collect_cites(node, found):
    if isinstance(node, dict):
        for key, value in node.items():
            if key in ("cite", "citations", "trail"):
                if isinstance(value, str):
                    found.add(value)
                else:
                    found.update(value)
            collect_cites(value, found)
    elif isinstance(node, list):
        for item in node:
            collect_cites(item, found)


def test_batch_golden_csv(capsys):
    code, out, err = run(["batch", "--max-degree", "4", "--format", "csv"], capsys)
    assert code == 0
    assert err == ""
    assert out == GOLDEN_MAX4_CSV


def test_batch_csv_deterministic(capsys):
    _, first, _ = run(["batch", "--max-degree", "6", "--format", "csv"], capsys)
    _, second, _ = run(["batch", "--max-degree", "6", "--format", "csv"], capsys)
    assert first == second


def test_classify_json_roundtrip(capsys):
    code, out, err = run(["classify", "2", "4", "6", "--format", "json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert json.dumps(payload, indent=2) + "\n" == out

    assert payload["triple"] == {"n1": 2, "n2": 4, "n3": 6, "parity": "even"}
    assert payload["generic"] is True
    assert payload["invariants"]["k_squared"] == 36
    assert payload["invariants"]["chi"] == 11
    assert payload["invariants"]["big_m"] == 50
    assert payload["picard"]["rho_is_one"] is True
    assert payload["picard"]["witnesses"] == []
    assert payload["line_bundle"]["status"] == "impossible"
    assert payload["complexity"] == {
        "kind": "exact",
        "value": 2,
        "bounds": None,
        "trail": payload["complexity"]["trail"],
    }
    assert payload["recipe"]["z_count"] == 50
    assert payload["recipe"]["tangency_note"]

    cites = set()
    collect_cites(payload, cites)
    assert cites <= ALL_LABELS
    # the flat list is registry-ordered and duplicate-free
    listed = payload["citations"]
    assert len(listed) == len(set(listed))


def test_classify_csv_single_row(capsys):
    code, out, _ = run(["classify", "4", "2", "0", "--format", "csv"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("n1,n2,n3,")
    assert lines[1] == "0,2,4,even,0,2,true,exists,exact,1,4,2,14"


def test_classify_text(capsys):
    code, out, _ = run(["classify", "0", "2", "4"], capsys)
    assert code == 0
    assert "branch degrees (0, 2, 4)" in out
    assert "rho(S) > 1" in out
    assert "line bundle: exists" in out
    assert "uc = 1 (exact)" in out
    assert "#Z = 14" in out
    assert "note:" in out  # M mod 4 = 2 carries the tangency condition

    code, out, _ = run(["classify", "0", "2", "2"], capsys)
    assert code == 0
    assert "recipe: none (" in out
    assert "m >= 3" in out

    code, out, _ = run(["classify", "1", "1", "3"], capsys)
    assert code == 0
    assert "recipe: none (odd cover)" in out
    assert "uc = >=2 (lower_bound_only)" in out


def test_classify_rejects_bad_triples(capsys):
    code, _, err = run(["classify", "1", "2", "3"], capsys)
    assert code == 2
    assert err.startswith("error:")
    assert "Def. 2.7" in err

    code, _, err = run(["classify", "0", "0", "2"], capsys)
    assert code == 2
    assert "Remark after Prop. 2.8" in err


def test_classify_rejects_signed_degree():
    with pytest.raises(SystemExit) as exc:
        cli.main(["classify", "-1", "1", "1"])
    assert exc.value.code == 2


def test_unsigned_int_type():
    assert cli.unsigned_int("12") == 12
    for bad in ("-3", "+3", "3.0", ""):
        with pytest.raises(argparse.ArgumentTypeError):
            cli.unsigned_int(bad)
    assert cli.signed_int("-3") == -3
    with pytest.raises(argparse.ArgumentTypeError):
        cli.signed_int("x")


def test_enumerate_triples_small():
    triples = [t.as_tuple() for t in cli.enumerate_triples(2)]
    assert triples == [(0, 2, 2), (1, 1, 1), (2, 2, 2)]


def test_batch_input_clean(capsys):
    code, out, err = run(
        ["batch", "--input", str(DATA / "triples.txt"), "--format", "csv"], capsys
    )
    assert code == 0
    assert err == ""
    rows = out.splitlines()[1:]
    # duplicates collapse after sorting each line; rows come out lex-ordered
    assert [r.split(",")[:3] for r in rows] == [
        ["0", "2", "2"],
        ["0", "2", "4"],
        ["1", "1", "3"],
        ["2", "2", "2"],
    ]


def test_batch_input_bad(capsys):
    code, out, err = run(
        ["batch", "--input", str(DATA / "triples_bad.txt"), "--format", "csv"], capsys
    )
    assert code == 2
    rows = out.splitlines()[1:]
    assert [r.split(",")[:3] for r in rows] == [["0", "2", "2"], ["2", "4", "6"]]
    skipped = [line for line in err.splitlines() if line.startswith("skipped line")]
    assert len(skipped) == 4
    assert skipped[0].startswith("skipped line 3:")
    assert "Remark after Prop. 2.8" in skipped[0]
    assert "Def. 2.7" in skipped[1]
    assert "expected three degrees" in skipped[2]
    assert "unsigned integers" in skipped[3]


def test_batch_missing_file(capsys):
    code, _, err = run(["batch", "--input", str(DATA / "nope.txt")], capsys)
    assert code == 2
    assert "cannot read" in err


def test_batch_requires_one_source(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["batch"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["batch", "--max-degree", "4", "--input", "x"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_batch_json_roundtrip(capsys):
    code, out, _ = run(
        ["batch", "--input", str(DATA / "triples.txt"), "--format", "json"], capsys
    )
    assert code == 0
    payloads = json.loads(out)
    assert len(payloads) == 4
    assert json.dumps(payloads, indent=2) + "\n" == out


def test_batch_text_table(capsys):
    code, out, _ = run(["batch", "--max-degree", "2"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split()[:3] == ["n1", "n2", "n3"]
    assert len(lines) == 4


def test_search_rho1_json(capsys):
    code, out, _ = run(
        ["search", "rho1", "--triple", "2", "4", "6", "--format", "json"], capsys
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["triple"] == [2, 4, 6]
    verdict = payload["verdict"]
    assert verdict["status"] == "infeasible_search"
    assert verdict["candidates"] == []
    assert verdict["trace"][-1]["step"].endswith("= 56 != 0")
    assert {s["cite"] for s in verdict["trace"]} <= ALL_LABELS


def test_search_rho1_rejects_odd(capsys):
    code, _, err = run(["search", "rho1", "--triple", "1", "1", "3"], capsys)
    assert code == 2
    assert err.startswith("error:")


def test_search_p1xp1_json(capsys):
    code, out, _ = run(["search", "p1xp1", "--n", "3", "--format", "json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["n"] == 3
    assert payload["bound"] == 40
    assert payload["verdict"]["status"] == "infeasible_search"
    steps = [s["step"] for s in payload["verdict"]["trace"]]
    assert any("discriminant" in s for s in steps)


def test_search_lattice_rank1_needs_triple(capsys):
    code, _, err = run(
        ["search", "lattice", "--preset", "rank1_bidouble", "--degree", "4", "--selfint", "4"],
        capsys,
    )
    assert code == 2
    assert "--triple" in err


def test_search_lattice_rank1(capsys):
    code, out, _ = run(
        [
            "search",
            "lattice",
            "--preset",
            "rank1_bidouble",
            "--triple",
            "2",
            "4",
            "6",
            "--degree",
            "4",
            "--selfint",
            "4",
            "--format",
            "json",
        ],
        capsys,
    )
    assert code == 0
    payload = json.loads(out)
    assert [h["coords"] for h in payload["hits"]] == [[1]]
    assert payload["hits"][0]["rank1_ulrich"] is False


def test_search_lattice_k3_certificate_class(capsys):
    code, out, _ = run(
        [
            "search",
            "lattice",
            "--preset",
            "k3_024",
            "--degree",
            "6",
            "--selfint",
            "4",
            "--bound",
            "2",
            "--format",
            "json",
        ],
        capsys,
    )
    assert code == 0
    payload = json.loads(out)
    hits = {tuple(h["coords"]): h for h in payload["hits"]}
    assert (2, 1, 1, -1) in hits
    assert hits[(2, 1, 1, -1)]["rank1_ulrich"] is True
    for h in payload["hits"]:
        assert h["degree"] == 6
        assert h["selfint"] == 4


def test_search_lattice_rejects_stray_triple(capsys):
    code, _, err = run(
        [
            "search",
            "lattice",
            "--preset",
            "p1xp1",
            "--triple",
            "2",
            "2",
            "2",
            "--degree",
            "2",
            "--selfint",
            "0",
        ],
        capsys,
    )
    assert code == 2
    assert "only applies to rank1_bidouble" in err


def test_search_rejects_csv():
    with pytest.raises(SystemExit) as exc:
        cli.main(["search", "p1xp1", "--n", "3", "--format", "csv"])
    assert exc.value.code == 2


def test_presets(capsys):
    code, out, _ = run(["presets", "--format", "json"], capsys)
    assert code == 0
    entries = json.loads(out)
    assert [e["name"] for e in entries] == [
        "k3_024",
        "p1xp1",
        "delpezzo",
        "rank1_bidouble",
    ]
    for entry in entries:
        gram = entry["gram"]
        assert all(gram[i][j] == gram[j][i] for i in range(len(gram)) for j in range(len(gram)))

    code, out, _ = run(["presets"], capsys)
    assert code == 0
    assert "k3_024" in out
    assert "gram:" in out


def test_consistency_failure_exits_3(monkeypatch, capsys):
    def boom(t):
        raise ConsistencyError("forced for the test")

    monkeypatch.setattr(cli, "rank1_rho1_search", boom)
    code, _, err = run(["search", "rho1", "--triple", "2", "4", "6"], capsys)
    assert code == 3
    assert err.startswith("internal consistency failure:")

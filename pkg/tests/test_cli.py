"""Command line behavior: payload shapes, exit codes, self-verification."""

import json

import pytest

from cohomreps import __version__
from cohomreps.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_enumerate_u11(capsys):
    code, doc = run_json(capsys, "enumerate", "U", "1", "1")
    assert code == 0
    assert doc["schema"] == 1
    assert doc["version"] == __version__
    assert doc["input"] == {"command": "enumerate", "family": "U", "p": 1, "q": 1}
    assert doc["count"] == 3
    texts = [row["text"] for row in doc["reps"]]
    assert texts == ["U(1,1) A[[]|[]]", "U(1,1) A[[]|[1]]", "U(1,1) A[[1]|[1]]"]


def test_enumerate_tsv(capsys):
    code, out = run(capsys, "enumerate", "O", "2", "2", "--format", "tsv")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "text\tlambda\tmu\tflag\tR"
    assert len(lines) == 5  # header plus four parameters
    assert all(line.count("\t") == 4 for line in lines)


def test_cohomology_trivial_u11(capsys):
    code, doc = run_json(capsys, "cohomology", "U", "1", "1")
    assert code == 0
    assert doc["R"] == 0
    assert doc["hodge"] == [0, 0]
    assert doc["poincare_closed"] == [1, 0, 1]
    assert doc["poincare_oracle"] == [1, 0, 1]
    assert doc["cohomology"] == [[0, 1], [2, 1]]
    assert doc["levi_blocks"] == [["her", 1, 1]]


def test_cohomology_closed_only_skips_oracle(capsys):
    code, doc = run_json(
        capsys, "cohomology", "U", "2", "2", "--closed-only"
    )
    assert code == 0
    assert doc["poincare_oracle"] is None
    assert doc["cohomology"][0] == [0, 1]


def test_cohomology_sp_flag_argument(capsys):
    code, doc = run_json(capsys, "cohomology", "Sp", "1", "2", "--flag", "0")
    assert code == 0
    assert doc["rep"] == "Sp(1,2) A[[]|[2]]_0"
    assert doc["poincare_closed"] == [1, 0, 0, 0, 1, 0, 0, 0, 1]


def test_isolate_trivial_u22(capsys):
    code, doc = run_json(capsys, "isolate", "U", "2", "2")
    assert code == 0
    assert doc["unitary_dual"]["isolated"] is True
    assert doc["explicit"]["isolated"] is True
    assert doc["degree_zero"]["isolated"] is True


def test_isolate_orthogonal_witness(capsys):
    code, doc = run_json(capsys, "isolate", "O", "2", "4", "--lambda", "[1,1]")
    assert code == 0
    assert doc["unitary_dual"]["isolated"] is False
    assert "A[[2,1]]" in doc["unitary_dual"]["witnesses"]
    assert doc["explicit"] is None


def test_degrees_payload(capsys):
    code, doc = run_json(capsys, "degrees", "4", "2", "2")
    assert code == 0
    assert doc["support"] == [2, 4, 6]
    assert doc["center"] == 4
    assert doc["parity_uniform"] is True
    assert "unproved" in doc["conditional_on"]
    assert doc["divisors"] == [
        {"b": 2, "N": 2, "interval": [2, 6]},
        {"b": 4, "N": 0, "interval": [4, 4]},
    ]


def test_coverage_payload(capsys):
    code, doc = run_json(
        capsys, "coverage", "U", "2", "3", "--lambda", "[1,1]", "--mu", "[2,2]"
    )
    assert code == 0
    assert doc["li"] == {"tag": "Q2", "source": "LiGen"}
    assert doc["relth"] == {"tag": "Q2", "source": "ttt"}


def test_restrict_payload(capsys):
    code, doc = run_json(capsys, "restrict", "u(1,3)", "1")
    assert code == 0
    assert doc["T"] == ["1", "0", "-1"]
    assert doc["prediction"] == ["0"]
    assert doc["modes_disagree"] is False
    assert doc["clip_mode"] == "outer"


def test_restrict_top_mode(capsys):
    code, doc = run_json(
        capsys, "restrict", "u(1,1)[1/3]+u(1,1)", "2", "--clip-mode", "top"
    )
    assert code == 0
    assert doc["prediction"] == ["0", "0"]
    assert doc["modes_disagree"] is True


@pytest.mark.parametrize(
    "argv",
    [
        ("verify", "lemC", "--max-n", "6"),
        ("verify", "gaussian", "--max-rank", "3"),
        ("verify", "t1intro", "--max-pq", "6"),
        ("verify", "isolation", "--max-pq", "6"),
        ("verify", "all", "--max-n", "6", "--max-rank", "3", "--max-pq", "5"),
    ],
)
def test_verify_passes(capsys, argv):
    code, out = run(capsys, *argv)
    assert code == 0
    assert out.strip().split("\n")[-1] == "PASS"


def test_usage_error_exits_2(capsys):
    assert main(["enumerate", "X", "1", "1"]) == 2
    assert main([]) == 2
    assert main(["cohomology", "U", "two", "2"]) == 2


def test_domain_error_exits_3(capsys):
    code, doc = run_json(
        capsys, "cohomology", "U", "2", "2", "--lambda", "[1]", "--mu", "[2,2]"
    )
    assert code == 3
    assert doc["error"]["type"] == "NotCompatible"
    assert "schema" in doc


def test_degrees_signature_error(capsys):
    code, doc = run_json(capsys, "degrees", "5", "2", "2")
    assert code == 3
    assert doc["error"]["type"] == "SignatureMismatch"


def test_bad_partition_literal(capsys):
    code, doc = run_json(
        capsys, "cohomology", "U", "2", "2", "--lambda", "oops", "--mu", "[2,2]"
    )
    assert code == 3
    assert doc["error"]["type"] == "ValueError"


def test_version_flag(capsys):
    code, out = run(capsys, "--version")
    assert code == 0
    assert out.strip() == __version__


def test_tsv_key_value_fallback(capsys):
    code, out = run(capsys, "degrees", "4", "2", "2", "--format", "tsv")
    assert code == 0
    rows = dict(
        line.split("\t", 1) for line in out.strip().split("\n")
    )
    assert rows["support"] == "[2, 4, 6]"
    assert "schema" not in rows

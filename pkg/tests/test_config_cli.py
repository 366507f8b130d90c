import json
from pathlib import Path

import pytest

from qpbw.cli import main
from qpbw.config import ConfigError, default_config, load_config, parse_config

CONFIGS = Path(__file__).resolve().parent.parent / "configs"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_default_config_builds():
    ctx, P = default_config().build()
    assert ctx.n == 2 and P.relations == []


def test_shipped_configs_parse():
    for path in sorted(CONFIGS.glob("*.yaml")):
        cfg = load_config(path)
        cfg.build()


@pytest.mark.parametrize("text,line,fragment", [
    ("field: reals\nvariables:\n  - {name: x}\n", 1, "field"),
    ("field: rationals\nvariables:\n  - {name: x, colour: red}\n", 3, "unknown variable keys"),
    ("field: rationals\ngroup: {free_rank: 1}\nvariables:\n  - {name: x, g: [1], chi: [\"1/0\"]}\n", 4, "character"),
    ("variables:\n  - {name: x1, g: [], chi: []}\nrelations:\n  - x1.x9\n", 4, "relation"),
    ("variables: []\n", 1, "nonempty"),
    ("field: rationals\nvariables:\n  - {name: x}\nmax_degree: 0\n", 4, "max_degree"),
    ("field: rationals\nvariables:\n  - {name: x}\nspeed: 3\n", 4, "unknown key"),
])
def test_diagnostics_carry_lines(text, line, fragment):
    with pytest.raises(ConfigError) as ei:
        parse_config(text, "t.yaml").build()
    assert ei.value.line == line
    assert fragment in str(ei.value)
    assert str(ei.value).startswith(f"t.yaml:{line}:")


def test_torsion_constraint_reported():
    text = ("field: cyclotomic(4)\ngroup: {torsion: [2]}\nvariables:\n"
            "  - {name: x, g: [1], chi: [z]}\n")
    with pytest.raises(ConfigError, match="order"):
        parse_config(text).build()


def test_invalid_yaml():
    with pytest.raises(ConfigError) as ei:
        parse_config("variables: [\n", "bad.yaml")
    assert ei.value.line is not None


def test_standard_words_default(capsys):
    code, out, _ = run(capsys, "standard-words", "--max-degree", "2")
    assert code == 0
    assert out.splitlines()[1:4] == ["x1", "x1.x2", "x2"]


def test_bracket(capsys):
    code, out, _ = run(capsys, "bracket", "x1.x1.x2")
    assert code == 0 and out.splitlines()[0] == "[[x1][x1.x2]]"


def test_bad_word_exit_code(capsys):
    code, _, err = run(capsys, "bracket", "x2.x1")
    assert code == 2 and "not a standard word" in err


def test_expand_and_straighten(capsys):
    code, out, _ = run(capsys, "expand", "x1.x2")
    assert code == 0 and out.strip() == "[x1.x2] = x1.x2 - 3 * x2.x1"
    code, out, _ = run(capsys, "straighten", "[x1][x1.x2]")
    assert code == 0 and out.strip() == "[x1.x1.x2] + 6 * [x1.x2][x1]"


def test_coproduct_certificate(capsys):
    code, out, _ = run(capsys, "coproduct", "[x1.x2]")
    assert code == 0
    assert "certificate: ok" in out
    code, out, _ = run(capsys, "coproduct", "x1")
    assert "skew-primitive: g1" in out


def test_hilbert_quantum_plane(capsys):
    code, out, _ = run(capsys, "--config", str(CONFIGS / "quantum_plane.yaml"), "hilbert")
    assert code == 0
    rows = [l.split() for l in out.splitlines()[2:11]]
    assert [(int(a), int(b), int(c)) for a, b, c in rows] == [(d, d + 1, d + 1) for d in range(9)]


def test_json_output(capsys):
    code, out, _ = run(capsys, "--config", str(CONFIGS / "uqsl3.yaml"), "--json", "hard-letters")
    assert code == 0
    data = json.loads(out)
    assert data["hard_letters"] == ["x1", "x1.x2", "x2"]
    assert data["max_degree"] == 6 and data["mode"] == "graded"


def test_flags_after_subcommand(capsys):
    code, out, _ = run(capsys, "heights", "--config", str(CONFIGS / "taft4.yaml"))
    assert code == 0 and "height=4" in out


def test_refused_filtration(capsys):
    code, _, err = run(capsys, "--config", str(CONFIGS / "free2.yaml"), "filtration")
    assert code == 2 and "more than half the bound" in err


def test_missing_config(capsys):
    code, _, err = run(capsys, "--config", "nowhere.yaml", "hilbert")
    assert code == 2 and "nowhere.yaml" in err


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest", "--seed", "3")
    assert code == 0
    assert all(l.startswith("PASS") for l in out.splitlines())

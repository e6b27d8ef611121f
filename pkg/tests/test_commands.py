"""
Test handlers dei sottocomandi e entry point della CLI
"""
import json

import pytest

import cli
from handlers import cmd_derive, cmd_forced, cmd_hasse, cmd_realize, cmd_verify

RLLRL_LINES = ["e", "L", "LL", "RL", "LRL", "RLL", "LLRL", "RLRL", "RLLRL"]


def test_derive_with_witness():
    result = cmd_derive("RLLRL", "RLL")
    assert result.status == 0
    assert "✅ RLL è derivabile da RLLRL" in result.output
    assert "1. regola RL→e in posizione 3 -> RLL" in result.output


def test_derive_empty_word():
    result = cmd_derive("LLRL", "e")
    assert result.status == 0
    assert "coda: scarta i primi 4 simboli -> e" in result.output


def test_derive_not_derivable_and_usage():
    assert cmd_derive("L", "R").status == 1
    result = cmd_derive("LX", "L")
    assert result.status == 2
    assert "posizione 1" in result.error


@pytest.mark.parametrize("method", ["derive", "construct", "realize"])
def test_forced_rllrl(method):
    result = cmd_forced("RLLRL", method)
    assert result.status == 0
    assert result.output.splitlines() == RLLRL_LINES


def test_forced_formats():
    assert json.loads(cmd_forced("RLLRL", fmt="json").output) == RLLRL_LINES
    assert cmd_forced("RLLRL", fmt="dot").status == 2
    assert cmd_forced("RLLRL", method="bogus").status == 2


def test_realize_report():
    result = cmd_realize("RLLRL")
    assert result.status == 0
    assert "-1 -> 1/2 -> 1/3 -> -1/4 -> 1/5 -> 0" in result.output
    assert "[-1, -19/21): RLLRL" in result.output
    assert "[-19/21, -16/21): RLL" in result.output
    assert "f^5([m, M]) = {0}: sì" in result.output


def test_realize_json():
    payload = json.loads(cmd_realize("RL", fmt="json").output)
    assert payload["domain"] == ["-1", "1/2"]
    assert payload["breakpoints"] == [["-1", "1/2"], ["0", "0"], ["1/2", "0"]]


def test_hasse_text_and_dot():
    assert cmd_hasse(1).output == "e\nL -> e\nR -> e\n"
    dot = cmd_hasse(4, fmt="dot").output
    assert dot.startswith("digraph forcing {\n")
    assert "\tLRLR -> RLR;\n" in dot
    assert dot.count(" -> ") == 48


def test_hasse_cap():
    assert cmd_hasse(15).status == 2
    assert cmd_hasse(5, cap=4).status == 2
    assert cmd_hasse(-1).status == 2


def test_verify():
    result = cmd_verify(5)
    assert result.status == 0
    assert "🔍 Verifica su 63 parole" in result.output
    assert result.output.endswith("✅ Tutte le caratterizzazioni concordano\n")


def test_verify_normal_form_and_bounds():
    result = cmd_verify(4, realize_bound=2, normal_form=True)
    assert result.status == 0
    assert "derive = interleaved" in result.output
    assert cmd_verify(4, realize_bound=-1).status == 2
    assert cmd_verify(20).status == 2


def test_cli_main(capsys):
    assert cli.main(["derive", "RLLRL", "RLL"]) == 0
    assert "regola RL→e in posizione 3" in capsys.readouterr().out

    assert cli.main(["derive", "L", "R"]) == 1
    assert cli.main(["hasse", "--max-len", "99"]) == 2
    assert "--max-len" in capsys.readouterr().err


def test_cli_usage_error_exits_2():
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["forced"])
    assert excinfo.value.code == 2


def test_cli_out_file(tmp_path, capsys):
    target = tmp_path / "forced.txt"
    assert cli.main(["forced", "RLLRL", "--method", "construct", "--out", str(target)]) == 0
    assert target.read_text(encoding="utf-8").splitlines() == RLLRL_LINES
    assert capsys.readouterr().out == ""


if __name__ == "__main__":
    import sys
    print("🧪 Test comandi CLI\n")
    sys.exit(pytest.main([__file__, "-v"]))

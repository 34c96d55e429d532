"""
Tests for the command line, configuration, message log and export helpers.
"""

import json

import pytest
from blessed import Terminal

from app.config import FillConfig
from app.export import to_json, write_atomic
from app.message_log import MessageLog
from farey import Slope
from filling import fill
from main import join_values, run


def _run(*argv):
    log = MessageLog(term=Terminal(force_styling=None))
    code = run(list(argv), log=log)
    return code, [line for line, _ in log.lines()]


def test_classify():
    assert _run('classify', '--rs', '-1/2', '--tu', '-3/2') == (0, ["Type A"])
    assert _run('classify', '--rs', '-7/3', '--tu', '-7/4') == (0, ["Type B (k = -3)"])
    assert _run('classify', '--rs', '-1/2', '--tu', '-1/2') == (0, ["not a knot filling"])


def test_count():
    assert _run('count', '--boundary', 'Uh', '--slope', '-6/1') == (0, ["2"])
    assert _run('count', '--boundary', 'Vh', '--slope', '1') == (0, ["1"])
    code, lines = _run('count', '--boundary', 'R', '--slope', '7/2', '--oracle')
    assert code == 0
    assert lines == ["3 (oracle 3, interval (0,inf))"]


@pytest.mark.parametrize("argv", [
    [],
    ['classify', '--rs', 'abc', '--tu', '1'],
    ['count', '--boundary', 'X', '--slope', '1'],
    ['fill', '--rs', '-1/2'],
    ['fill', '--rs', '-1/2', '--tu', '-3/2', '--seed', 'T9'],
    ['family', '--primary', '1', '--range', '3..1'],
    ['verify-census', '--parallel', '0'],
])
def test_usage_errors(argv):
    assert _run(*argv)[0] == 2


def test_domain_errors_are_usage_errors():
    code, lines = _run('fill', '--rs', '-1/2', '--tu', '-1/2')
    assert code == 2
    assert lines[-1].startswith("Error:")
    assert _run('count', '--boundary', 'Uh', '--slope', '1/2')[0] == 2
    assert _run('count', '--boundary', 'P', '--slope', 'inf')[0] == 2


def test_fill_table():
    code, lines = _run('fill', '--rs', '-1/2', '--tu', '-3/2')
    assert code == 0
    assert "counts    2 + 1 + 0 = 3" in lines
    assert "seed      T1" in lines
    assert "knot      Type A" in lines


def test_fill_json_round_trip(tmp_path):
    out = tmp_path / 'k3_1.json'
    code, lines = _run('fill', '--rs', '-1/2', '--tu', '-3/2', '--format', 'json', '--out', str(out))
    assert code == 0
    assert lines == [f"wrote {out}"]
    data = json.loads(out.read_text())
    assert data['total'] == 3
    assert data['plan']['seed'] == 'T1'
    assert data['killed'] == ['-1/2', '-3/2']
    assert _run('homology', str(out)) == (0, ["Z"])
    assert _run('isosig', str(out)) == (0, [data['iso_signature']])


def test_export_seed_and_homology(tmp_path):
    out = tmp_path / 't1.txt'
    assert _run('export-seed', 'T1', '--closed', '--out', str(out))[0] == 0
    assert out.read_text().startswith("tet |")
    assert _run('homology', str(out)) == (0, ["Z^3"])
    code, lines = _run('export-seed', 't5h')
    assert code == 0
    assert lines[1] == "0 | -- | -- | 1(320) | --"


def test_missing_file():
    assert _run('homology', '/nonexistent/table.txt')[0] == 2


def test_family_table():
    code, lines = _run('family', '--primary', '-1/2', '--range', '-2..1')
    assert code == 0
    assert lines[1].split() == ['n', 't/u', 'label', 'total']
    rows = {int(line.split()[0]): line.split() for line in lines[2:]}
    assert rows[-1][1] == '1/0' and rows[-1][-1] == '-'
    assert rows[1] == ['1', '-3/2', 'K3_1', '3']


def test_family_closed_form_for_untabulated_primary():
    code, lines = _run('family', '--primary', '5/7', '--range', '0..2')
    assert code == 0
    assert len(lines) == 5


def test_output_is_deterministic():
    argv = ('fill', '--rs', '-6', '--tu', '-1/7')
    assert _run(*argv) == _run(*argv)


def test_verify_census():
    code, lines = _run('verify-census')
    assert code == 0
    assert lines[-1] == "229/229 ok"
    assert sum(1 for line in lines if line.endswith(")") and ": ok" in line) == 229


def test_join_values():
    assert join_values(['--rs', '-1/2', 'x']) == ['--rs=-1/2', 'x']
    assert join_values(['--rs']) == ['--rs']


def test_message_log_levels_and_wrapping():
    log = MessageLog(width=20, term=Terminal(force_styling=None))
    log.add_info("short")
    log.add_warning("a warning that is long enough to wrap")
    log.add_error("bad")
    log.add_block("col1   col2\nrow1   a very long preformatted line kept")
    assert log.error_count == 1 and log.warning_count == 1
    lines = log.lines()
    assert lines[0] == ("short", 'info')
    assert all(len(text) <= 20 for text, level in lines if level == 'warning')
    assert ("row1   a very long preformatted line kept", 'info') in lines
    with pytest.raises(ValueError):
        log.add_message("x", 'loud')


def test_settings_overlay(tmp_path, capsys):
    settings = tmp_path / 'settings.yaml'
    settings.write_text("family_extra_range: 3\nbogus: 1\nrelabel_trials: many\n")
    saved = FillConfig.FAMILY_EXTRA_RANGE, FillConfig.RELABEL_TRIALS
    try:
        applied = FillConfig.load_settings(settings)
        assert applied == {'FAMILY_EXTRA_RANGE': 3}
        assert FillConfig.FAMILY_EXTRA_RANGE == 3
        assert FillConfig.RELABEL_TRIALS == saved[1]
    finally:
        FillConfig.FAMILY_EXTRA_RANGE, FillConfig.RELABEL_TRIALS = saved
    out = capsys.readouterr().out
    assert "Warning: unknown setting 'bogus' ignored" in out


def test_missing_settings_keep_defaults(tmp_path, capsys):
    assert FillConfig.load_settings(tmp_path / 'absent.yaml') == {}
    assert "Warning:" in capsys.readouterr().out


def test_shipped_settings_load():
    saved = {name: getattr(FillConfig, name) for name in FillConfig._OVERRIDABLE}
    try:
        assert FillConfig.load_settings()['FAMILY_EXTRA_RANGE'] == 5
    finally:
        for name, value in saved.items():
            setattr(FillConfig, name, value)


def test_debug_flag(monkeypatch):
    monkeypatch.delenv(FillConfig.DEBUG_ENV_VAR, raising=False)
    assert not FillConfig.debug_enabled()
    monkeypatch.setenv(FillConfig.DEBUG_ENV_VAR, '1')
    assert FillConfig.debug_enabled()


def test_write_atomic(tmp_path):
    target = tmp_path / 'out.txt'
    write_atomic(target, "first\n")
    write_atomic(target, "second\n")
    assert target.read_text() == "second\n"
    assert not (tmp_path / 'out.txt.tmp').exists()


def test_to_json_plan_and_slopes():
    result = fill(Slope(1, 1), Slope(2, 1))
    data = json.loads(to_json(result))
    assert data['plan']['seed'] == 'T4hat'
    assert data['counts'] == [2, 1, 0]
    assert json.loads(to_json({'s': Slope(-3, 2)})) == {'s': '-3/2'}

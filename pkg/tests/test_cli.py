import argparse
import io
import json

import pytest

from gitstab.cli import EXIT_OK, EXIT_USAGE, EXIT_VERIFY, UsageError, main, resolve_config


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def test_poset_outputs():
    code, text = run("poset", "--n", "2", "--d", "5")
    assert code == EXIT_OK and len(text.splitlines()) == 6
    code, dot = run("poset", "--format", "dot")
    nodes = [l for l in dot.splitlines() if l.strip().startswith('"[') and "->" not in l]
    assert len(nodes) == 126
    code, js = run("poset", "--downset", "3,0,0,2,0", "--format", "json")
    assert len(json.loads(js)["nodes"]) == 75


def test_poset_bad_downset():
    assert run("poset", "--downset", "3,0,0")[0] == EXIT_USAGE


def test_classify():
    code, out = run("classify", "x4*(x0+x1+x2+x3)^4")
    assert code == EXIT_OK and out.startswith("NonStable") and "SS2" in out and "<1,1,1,1,-4>" in out
    assert run("classify", "x0^5+x1^5+x2^5+x3^5+x4^5")[1].startswith("Stable")
    code, out = run("classify", "[[5,0,0,0,0]]", "--format", "json")
    assert json.loads(out)["verdict"] == "unstable"
    assert run("classify", "x0^4")[0] == EXIT_USAGE
    assert run("classify", "x0^5 +")[0] == EXIT_USAGE


def test_luna():
    code, out = run("luna", "MO2-V")
    assert "closed orbit; no destabilizing 1-PS" in out
    code, out = run("luna", "MO-D", "--format", "json")
    data = json.loads(out)
    assert data["context"]["universe_size"] == 35
    assert run("luna", "MO-Q")[0] == EXIT_USAGE
    code, out = run("luna", "MO-A", "--verify-paper")
    assert code == EXIT_OK and out.count("PASS") == 5


def test_nonstable_table_and_json():
    code, out = run("nonstable", "--flags")
    assert code == EXIT_OK and "SS5" in out and "{1,2,3,4} > {4}" in out
    code, out = run("nonstable", "--n", "3", "--d", "4", "--format", "json")
    assert len(json.loads(out)["families"]) == 2


def test_strata_checks():
    code, out = run("strata", "--sink-check", "--audit")
    assert code == EXIT_OK and out.startswith("digraph")
    code, out = run("strata", "--format", "json")
    assert json.loads(out)["edges"]


def test_unknown_command_and_profile_restrictions():
    assert run("nonsense")[0] == EXIT_USAGE
    assert run("strata", "--n", "4")[0] == EXIT_USAGE
    assert run()[0] == EXIT_USAGE


def test_profile_precedence():
    ns = argparse.Namespace(n=None, d=None, format=None)
    assert (resolve_config(ns, {}).n_vars, resolve_config(ns, {}).degree) == (5, 5)
    cfg = resolve_config(ns, {"GITSTAB_PROFILE": "3,4"})
    assert (cfg.n_vars, cfg.degree) == (3, 4)
    cfg = resolve_config(argparse.Namespace(n=2, d=None, format="json"), {"GITSTAB_PROFILE": "3x4"})
    assert (cfg.n_vars, cfg.degree, cfg.fmt) == (2, 4, "json")
    with pytest.raises(UsageError):
        resolve_config(ns, {"GITSTAB_PROFILE": "five"})
    with pytest.raises(UsageError):
        resolve_config(argparse.Namespace(n=0, d=None, format=None), {})


def test_env_profile_reaches_commands(monkeypatch):
    monkeypatch.setenv("GITSTAB_PROFILE", "2,5")
    code, out = run("poset")
    assert len(out.splitlines()) == 6
    assert EXIT_VERIFY == 2

import json

import pytest

from hcolour.cli import load_graph, main
from hcolour.graphio import encode_graph6
from hcolour.multigraph import Multigraph
from hcolour.named import petersen, s4, s12_plus_km
from hcolour.recipes import run_corpus, run_recipe


def test_run_recipe_unknown_name():
    with pytest.raises(ValueError):
        run_recipe("no-such-recipe")


@pytest.mark.parametrize(
    "name",
    ["petersen-images", "s10-images", "s12-images", "p-matching-cuts",
     "k5-images", "j4-exclusion", "s12kM-rigidity", "thm44"],
)
def test_named_recipes_pass(name):
    report = run_recipe(name)
    assert report.status == "pass", report.to_json_lines()
    assert report.version


def test_lemma24_props_pass_and_coverage():
    report = run_recipe("lemma24-props")
    assert report.status == "pass", report.to_json_lines()
    coverage = report.checks[-1]
    assert coverage.details["colourings"] >= 100
    assert set(coverage.details["applications"]) == {
        "matching", "perfect_matching", "covering_matching", "edge_cut",
        "regular_subgraph",
    }


def test_reports_are_deterministic():
    a = run_recipe("petersen-images").to_json_lines()
    b = run_recipe("petersen-images").to_json_lines()
    assert a == b
    for line in a.strip().splitlines():
        json.loads(line)  # every line is one JSON object


def test_run_corpus_mixed_entries(tmp_path):
    path = tmp_path / "corpus.g6"
    path.write_text(
        encode_graph6(petersen().graph) + "\n"
        + "!!bad!!\n"
        + encode_graph6(Multigraph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])) + "\n"
    )
    checks = run_corpus(str(path), s4().graph, "s4", workers=1)
    assert [c.name for c in checks] == ["entry-0", "entry-1", "entry-2"]
    assert checks[0].outcome == "pass"
    assert "certificate" in checks[0].details
    assert checks[1].outcome == "unknown"  # parse error, run continued
    assert checks[2].outcome == "pass"  # skipped: C4 is not cubic
    assert "skipped" in checks[2].details


def test_run_corpus_resume(tmp_path):
    path = tmp_path / "corpus.g6"
    path.write_text(encode_graph6(petersen().graph) + "\n"
                    + encode_graph6(petersen().graph) + "\n")
    checks = run_corpus(str(path), s4().graph, "s4", workers=1, start_index=1)
    assert [c.name for c in checks] == ["entry-1"]


def test_hcolor_threads_env(monkeypatch):
    from hcolour.recipes import worker_count

    monkeypatch.setenv("HCOLOR_THREADS", "3")
    assert worker_count() == 3
    assert worker_count(8) == 3  # env overrides the request
    monkeypatch.delenv("HCOLOR_THREADS")
    assert worker_count(2) == 2


# -- CLI ---------------------------------------------------------------------

def test_cli_gen_and_load(tmp_path, capsys):
    assert main(["gen", "s12+1M"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[-24:]  # 24 edges
    f = tmp_path / "g.txt"
    f.write_text(out)
    G = load_graph(str(f))
    assert G.n == 12 and G.m == 24
    assert G == s12_plus_km(1).graph


def test_cli_gen_unknown():
    with pytest.raises(SystemExit):
        main(["gen", "nonesuch"])


def test_load_graph_named_and_g6(tmp_path):
    assert load_graph("petersen").m == 15
    assert load_graph("kfamily-5-4").n == 5
    f = tmp_path / "p.g6"
    f.write_text(encode_graph6(petersen().graph) + "\n")
    assert load_graph(str(f)).m == 15


def test_cli_solve_exit_codes(capsys):
    assert main(["solve", "--host", "s4", "--guest", "petersen"]) == 0
    capsys.readouterr()
    assert main(["solve", "--host", "star3", "--guest", "petersen"]) == 1
    capsys.readouterr()
    assert main(["solve", "--host", "s12", "--guest", "s12",
                 "--node-limit", "2"]) == 2
    capsys.readouterr()


def test_cli_solve_emits_certificate(capsys):
    main(["solve", "--host", "s4", "--guest", "petersen"])
    out = capsys.readouterr().out
    assert "status sat" in out
    assert "# hcolour certificate" in out


def test_cli_check_roundtrip(tmp_path, capsys):
    main(["solve", "--host", "s4", "--guest", "petersen"])
    out = capsys.readouterr().out
    cert = out[out.index("# hcolour certificate"):]
    f = tmp_path / "cert.txt"
    f.write_text(cert)
    assert main(["check", "--host", "s4", "--guest", "petersen",
                 "--certificate", str(f)]) == 0
    out = capsys.readouterr().out
    assert "valid" in out
    # tampered certificate fails
    lines = cert.splitlines()
    lines[-1] = lines[-1].rsplit(" ", 1)[0] + " 0"
    f.write_text("\n".join(lines) + "\n")
    code = main(["check", "--host", "s4", "--guest", "petersen",
                 "--certificate", str(f)])
    capsys.readouterr()
    assert code == 1


def test_cli_images(capsys):
    assert main(["images", "--guest", "petersen"]) == 0
    out = capsys.readouterr().out
    assert "classes 2" in out
    assert "tk2_realizable false" in out


def test_cli_recipe(capsys):
    assert main(["recipe", "p-matching-cuts"]) == 0
    out = capsys.readouterr().out
    last = json.loads(out.strip().splitlines()[-1])
    assert last["status"] == "pass"
    assert main(["recipe", "nonesuch"]) == 2
    capsys.readouterr()


def test_cli_corpus(tmp_path, capsys):
    path = tmp_path / "c.g6"
    path.write_text(encode_graph6(petersen().graph) + "\n")
    assert main(["corpus", str(path), "--host", "s4", "--workers", "1"]) == 0
    out = capsys.readouterr().out
    first = json.loads(out.strip().splitlines()[0])
    assert first["check"] == "entry-0"
    assert first["outcome"] == "pass"

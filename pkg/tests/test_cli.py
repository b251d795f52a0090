import json

import pytest

from spectralham.cli import main
from spectralham.graphs import graph6_decode, graph6_encode, cycle_graph, complete_graph


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gen(capsys):
    code, out, _ = run_cli(capsys, "gen", "N:n=7,k=2")
    assert code == 0
    g = graph6_decode(out.strip())
    assert g.n == 7 and g.edge_count == 14
    code, out, _ = run_cli(capsys, "gen", "Gamma1")
    assert code == 0 and graph6_decode(out.strip()).edge_count == 9


def test_gen_bad_spec(capsys):
    code, _, err = run_cli(capsys, "gen", "N:n=5,k=4")
    assert code == 2 and "error" in err


def test_spectral(capsys):
    g6 = graph6_encode(complete_graph(5))
    code, out, _ = run_cli(capsys, "spectral", g6, "--k", "4", "--json")
    assert code == 0
    rec = json.loads(out.strip())
    assert abs(rec["rho"] - 4) < 1e-9
    assert rec["bounds"]["nikiforov"]["satisfied"]


def test_spectral_edge_list_file(capsys, tmp_path):
    from spectralham.graphs import format_edge_list

    path = tmp_path / "c6.txt"
    path.write_text(format_edge_list(cycle_graph(6)))
    code, out, _ = run_cli(capsys, "spectral", str(path))
    assert code == 0 and "rho = 2.0" in out


def test_closure(capsys):
    g6 = graph6_encode(cycle_graph(4))
    code, out, _ = run_cli(capsys, "closure", g6)
    assert code == 0
    assert graph6_decode(out.split()[0]) == complete_graph(4)
    code, out, _ = run_cli(capsys, "closure", g6, "--json")
    rec = json.loads(out.strip())
    assert rec["joins"] == 2


def test_closure_bipartite(capsys):
    g6 = graph6_encode(cycle_graph(6))
    code, out, _ = run_cli(capsys, "closure", g6, "--bipartite", "--json")
    assert code == 0
    rec = json.loads(out.strip())
    assert graph6_decode(rec["closure"]).edge_count == 9


def test_oracle(capsys):
    g6 = graph6_encode(cycle_graph(6))
    code, out, _ = run_cli(capsys, "oracle", g6, "--json")
    rec = json.loads(out.strip())
    assert code == 0 and rec["status"] == "yes" and len(rec["witness"]) == 6
    code, out, _ = run_cli(capsys, "oracle", g6, "--path")
    assert code == 0 and "traceable = yes" in out


def test_certify(capsys):
    g6 = graph6_encode(complete_graph(7))
    code, out, _ = run_cli(capsys, "certify", g6)
    assert code == 0 and "certified_positive" in out
    code, out, _ = run_cli(capsys, "certify", "N:n=17,k=2_is_not_g6")
    assert code == 2


def test_certify_bipartite(capsys):
    from spectralham.families import FamilySpec, construct

    g6 = graph6_encode(construct(FamilySpec("B", n=4, k=2)).to_graph())
    code, out, _ = run_cli(capsys, "certify", g6, "--bipartite", "--json")
    assert code == 0
    rec = json.loads(out.strip())
    assert rec["verdict"] in ("exceptional", "inconclusive", "oracle_resolved")


def test_verify_clean_and_exit_codes(capsys):
    code, out, _ = run_cli(capsys, "verify", "ore", "--space", "all_labeled", "--n", "5")
    assert code == 0 and "failures 0" in out
    # aborted oracle -> exit 1
    code, out, _ = run_cli(
        capsys, "verify", "ore", "--space", "all_labeled", "--n", "4", "--budget", "0"
    )
    assert code == 1
    # precondition refusal -> exit 2
    code, _, err = run_cli(capsys, "verify", "yu_fan_q", "--space", "all_labeled", "--n", "5")
    assert code == 2 and "preconditions" in err


def test_verify_json_stream(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "ore", "--space", "all_labeled", "--n", "4", "--json"
    )
    assert code == 0
    lines = [json.loads(line) for line in out.strip().splitlines()]
    assert lines[-1]["verdict"] == "summary"


def test_search(capsys):
    code, out, _ = run_cli(
        capsys, "search", "min_rho_complement", "--space", "all_labeled", "--n", "6",
        "--k", "1", "--constraint", "non_hamiltonian", "--json",
    )
    assert code == 0
    rec = json.loads(out.strip())
    assert abs(rec["best"] - 2.0) < 1e-9 and rec["graphs"]


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "not_a_target", "--n", "5"])
    assert exc.value.code == 2

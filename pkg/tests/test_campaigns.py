import json
import subprocess
import sys

import pytest

from stlab import campaigns as C
from stlab.canon import canonical_form
from stlab.cli import main, parse_range
from stlab.constructions import cycle_graph, z_graph
from stlab.generate import StHereditary, generate
from stlab.graph import encode_graph6, parse_graph6
from stlab.properties import is_hamiltonian, is_pancyclic


def test_theorem6_small():
    rep = C.campaign_theorem6([7, 8])
    assert rep.verdict == "pass"
    assert rep.counts == {"population_n7": 223, "population_n8": 1254}


def test_theorem6_boundary():
    rep = C.theorem6_boundary()
    assert rep.verdict == "pass"
    assert canonical_form(cycle_graph(6)).graph6 in rep.graphs
    assert rep.counts["non_pancyclic"] == len(rep.graphs) >= 1
    for g6 in rep.graphs:
        G = parse_graph6(g6)
        assert not is_pancyclic(G)
    assert is_hamiltonian(cycle_graph(6))


def test_theorem2_small():
    rep = C.campaign_theorem2([7])
    assert rep.verdict == "pass" and rep.population == 223


def test_ce_gap_small_orders():
    rep = C.campaign_ce_gap(8)
    assert rep.verdict == "pass"
    assert rep.counts["ce_gap"] == len(rep.graphs) == 185
    assert rep.graphs == sorted(rep.graphs)
    assert rep.counts["z_member"] == 1


def test_lemma5_campaigns():
    rep = C.campaign_lemma5(2, [7, 8])
    assert rep.verdict == "pass" and rep.counts["st_graphs_n8"] == 0
    assert rep.counts["population_n7"] > 0
    rep = C.campaign_lemma5(6)
    assert rep.verdict == "pass"
    assert rep.counts["qualifying_blowups"] == 1
    with pytest.raises(C.CampaignError):
        C.campaign_lemma5(3)


def test_qform_campaign():
    rep = C.campaign_qform(14)
    assert rep.verdict == "pass" and rep.counts["pairs"] == 91
    row = next(r for r in rep.rows if (r["n"], r["k"]) == (7, 4))
    assert (row["path_lower"], row["path_upper"]) == (6, 11)


def test_z_campaign():
    rep = C.campaign_z(range(7, 17))
    assert rep.verdict == "pass"
    assert {r["kappa"] for r in rep.rows} == {2}
    assert {r["alpha"] for r in rep.rows} == {3}


def test_range_gates():
    with pytest.raises(C.CampaignError):
        C.campaign_theorem6([10])
    with pytest.raises(C.CampaignError):
        C.campaign_theorem6([6])
    with pytest.raises(C.CampaignError):
        C.campaign_theorem2([10], big=True)
    with pytest.raises(C.CampaignError):
        C.campaign_z([17])
    with pytest.raises(C.CampaignError):
        C.campaign_qform(15)


def test_violations_are_recheckable():
    # feed a population with known failures through the theorem-6 check
    pop = [cycle_graph(7), z_graph(7)]
    rep = C.CampaignReport("probe", {})
    for G in pop:
        if not is_pancyclic(G):
            rep.violate(G, "not-pancyclic")
    assert rep.verdict == "fail"
    assert [v["graph6"] for v in rep.violations] == [encode_graph6(cycle_graph(7)).decode()]
    assert all(C.recheck(v) for v in rep.violations)
    assert not C.recheck({"graph6": encode_graph6(z_graph(7)).decode(), "reason": "not-pancyclic"})


def test_external_stream_agrees_with_generation():
    for n in (7, 8):
        stream = [parse_graph6(encode_graph6(G)) for G in generate(n, [StHereditary(4, 2)])]
        internal = C.campaign_theorem6([n]).to_dict(with_runtime=False)
        external = C.campaign_theorem6([n], source=stream).to_dict(with_runtime=False)
        assert internal == external
    stream = list(generate(8))
    a = C.campaign_ce_gap(8).to_dict(with_runtime=False)
    b = C.campaign_ce_gap(8, source=stream).to_dict(with_runtime=False)
    assert a == b


def test_reports_are_deterministic():
    a = C.campaign_ce_gap(7).to_dict(with_runtime=False)
    b = C.campaign_ce_gap(7, jobs=2).to_dict(with_runtime=False)
    assert a == b
    assert json.loads(C.campaign_ce_gap(7).to_json())["counts"]["ce_gap"] == a["counts"]["ce_gap"]


def test_csv_report():
    text = C.campaign_theorem6([7]).to_csv()
    lines = text.strip().splitlines()
    assert lines[0] == "campaign,verdict,metric,value"
    assert "theorem6,pass,population_n7,223" in lines


# ---------------------------------------------------------------- CLI


def test_parse_range():
    assert parse_range("7..9") == [7, 8, 9]
    assert parse_range("7-9") == [7, 8, 9]
    assert parse_range("7,9") == [7, 9]
    assert parse_range("8") == [8]


def run_cli(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_cli_construct(capsys):
    code, out = run_cli(capsys, "construct", "cycle", "5")
    assert code == 0 and out.out.strip() == "Dhc"
    code, out = run_cli(capsys, "construct", "z", "7", "--format", "edges")
    assert out.out.startswith("7; ")
    code, out = run_cli(capsys, "construct", "nothing")
    assert code == 2


def test_cli_check(capsys):
    code, out = run_cli(capsys, "check", "Dhc", "--props", "--st", "4,2")
    data = json.loads(out.out)
    assert code == 0
    assert data["cycle_spectrum"] == [5] and data["st[4,2]"] is True
    code, out = run_cli(capsys, "check", "7; 0-1,1-2,2-3,3-4,4-5,5-6,6-0", "--st", "4,2")
    data = json.loads(out.out)
    assert data["st[4,2]"] is False and len(data["st[4,2]_witness"]) == 4
    code, out = run_cli(capsys, "check", "Dh")
    assert code == 2 and "truncated-payload" in out.err


def test_cli_enumerate(capsys):
    code, out = run_cli(capsys, "enumerate", "5")
    lines = out.out.split()
    assert code == 0 and len(lines) == 34 == len(set(lines))
    code, out = run_cli(capsys, "enumerate", "7", "--filter", "st:4,2", "--post", "kconn:2", "--count")
    assert out.out.strip() == "223"
    code, out = run_cli(capsys, "enumerate", "7", "--filter", "kconn:2")
    assert code == 2


def test_cli_enumerate_external_input(capsys, tmp_path):
    src = tmp_path / "g.g6"
    src.write_text("\n".join(encode_graph6(G).decode() for G in generate(6)) + "\n")
    code, out = run_cli(capsys, "enumerate", "6", "--input", str(src), "--filter", "triangle-free", "--count")
    assert out.out.strip() == "38"


def test_cli_campaign_exit_codes(capsys, tmp_path):
    code, out = run_cli(capsys, "campaign", "z", "--n", "7..9")
    assert code == 0 and json.loads(out.out)["verdict"] == "pass"
    code, out = run_cli(capsys, "campaign", "theorem6", "--n", "10")
    assert code == 2 and "--big" in out.err
    code, out = run_cli(capsys, "campaign", "lemma5")
    assert code == 2
    # an external population containing C_7 plus a genuine member: C_7 is not [4,2],
    # so the population filter drops it and the campaign passes
    src = tmp_path / "pop.g6"
    src.write_text(encode_graph6(cycle_graph(7)).decode() + "\n" + encode_graph6(z_graph(7)).decode() + "\n")
    code, out = run_cli(capsys, "campaign", "theorem6", "--n", "7", "--input", str(src))
    assert code == 0 and json.loads(out.out)["population"] == 1


def test_cli_campaign_failure_exit_code(capsys, monkeypatch):
    # force a failing check to observe exit code 1
    monkeypatch.setattr(C, "is_pancyclic", lambda G: False)
    code, out = run_cli(capsys, "campaign", "theorem6", "--n", "7")
    rep = json.loads(out.out)
    assert code == 1 and rep["verdict"] == "fail" and len(rep["violations"]) == 223


def test_cli_qform(capsys):
    code, out = run_cli(capsys, "qform", "--max", "6")
    lines = out.out.strip().splitlines()
    assert code == 0 and len(lines) == 1 + 15


def test_cli_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "stlab", "construct", "c5-blowup", "1"],
        capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "Dhc"

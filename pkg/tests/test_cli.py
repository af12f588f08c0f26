from aqpath.cli import main
from aqpath.construct import construct
from aqpath.cube import AugmentedCube
from aqpath.textio import parse_family, parse_graph, render_family, render_graph


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_bounds_output(capsys):
    code, out, _ = run(capsys, "bounds", "--n", "6")
    assert code == 0
    assert out == "BOUND 6 7\nTARGET 6 7\n"


def test_construct_emits_verified_family(capsys):
    code, out, err = run(capsys, "construct", "--n", "4",
                         "--triple", "0000,0010,0001")
    assert code == 0
    assert sum(1 for ln in out.splitlines() if ln.startswith("P ")) == 4
    assert err.strip() == "OK 4"


def test_construct_verify_pipe(tmp_path, capsys):
    # construct stdout is, verbatim, valid verify input
    code, out, _ = run(capsys, "construct", "--n", "5", "--triple",
                       "00000,00111,11001", "--trace")
    assert code == 0
    fam_file = tmp_path / "family.txt"
    fam_file.write_text(out, encoding="utf-8")
    code, out, _ = run(capsys, "verify", "--n", "5", "--family", str(fam_file))
    assert code == 0
    assert out.strip() == "OK 5"


def test_verify_flags_broken_family(tmp_path, capsys):
    fam = construct(4, (0, 2, 1))
    text = render_family((0, 2, 1), [p[:-1] for p in fam.paths[:1]], 4)
    fam_file = tmp_path / "bad.txt"
    fam_file.write_text(text, encoding="utf-8")
    code, out, _ = run(capsys, "verify", "--n", "4", "--family", str(fam_file))
    assert code == 1
    assert out.startswith("VIOLATION MissingTerminal")


def test_gen_oracle_pipe(tmp_path, capsys):
    code, out, _ = run(capsys, "gen", "--n", "3")
    assert code == 0
    graph_file = tmp_path / "aq3.txt"
    graph_file.write_text(out, encoding="utf-8")
    code, out, _ = run(capsys, "oracle", "--graph", str(graph_file),
                    "--triple", "000,011,101")
    assert code == 0
    assert out.startswith("PID ")


def test_gen_roundtrip():
    cube = AugmentedCube(4)
    g = parse_graph(render_graph(cube))
    assert g.vertex_count == 16
    assert sorted(g.edges()) == sorted(
        (u, w) for u in cube.vertices() for w in cube.neighbors(u) if u < w)


def test_neighbors_labels(capsys):
    code, out, _ = run(capsys, "neighbors", "--n", "4", "--v", "0000")
    assert code == 0
    assert "0111 c2" in out
    assert "1000 h1" in out
    assert len(out.strip().splitlines()) == 7


def test_witness_printed_variant_exits_one(capsys):
    code, out, _ = run(capsys, "witness", "--n", "4", "--printed-variant")
    assert code == 1
    assert "DEVIATION" in out
    code, out, _ = run(capsys, "witness", "--n", "4")
    assert code == 0
    assert "COMMON 0011 0100 1000 1111" in out


def test_pi3_output(capsys):
    code, out, _ = run(capsys, "pi3", "--n", "4", "--mode", "exhaustive")
    assert code == 0
    assert out.startswith("PI3 AQ4 4 ")


def test_pi3_sampled_needs_seed(capsys):
    code, _, _ = run(capsys, "pi3", "--n", "4", "--mode", "sampled")
    assert code == 2


def test_decimal_vertices_rejected(capsys):
    code, _, _ = run(capsys, "neighbors", "--n", "4", "--v", "7")
    assert code == 2
    code, _, _ = run(capsys, "construct", "--n", "4", "--triple", "0,2,1")
    assert code == 2


def test_byte_identical_reruns(capsys):
    _, a, _ = run(capsys, "construct", "--n", "6", "--triple",
               "000001,001010,111100", "--trace")
    _, b, _ = run(capsys, "construct", "--n", "6", "--triple",
               "000001,001010,111100", "--trace")
    assert a == b


def test_family_text_roundtrip():
    fam = construct(5, (1, 9, 27))
    text = render_family(fam.terminals, fam.paths, 5, trace=fam.trace)
    terminals, paths, bits = parse_family(text)
    assert terminals == fam.terminals
    assert paths == fam.paths
    assert bits == 5


def test_report_nmax_skips_large_sweeps(capsys):
    code, out, _ = run(capsys, "report", "--nmax", "4", "--samples", "50")
    assert code == 0
    assert "SKIP" in out
    assert "CRITERION 7 PASS" in out

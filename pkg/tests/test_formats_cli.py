"""File formats (round trips and rejections) and the command surface."""

import pytest

from dicolor import Dicoloring
from dicolor.formats import (
    FormatError,
    parse_coloring,
    parse_digraph,
    parse_graph,
    sniff_kind,
    write_coloring,
    write_digraph,
    write_graph,
)
from dicolor.graphs import make_graph
from dicolor.cli import run_command

from conftest import digon_clique, transitive_tournament


class TestDigraphFormat:
    def test_parse_c3(self):
        text = "p dgr 3 3\na 1 2\na 2 3\na 3 1\n"
        D = parse_digraph(text)
        assert set(D.arcs()) == {(0, 1), (1, 2), (2, 0)}

    def test_round_trip_is_canonical(self):
        text = "c scrambled\np dgr 3 3\na 3 1\na 1 2\na 2 3\n"
        D = parse_digraph(text)
        canon = write_digraph(D)
        assert parse_digraph(canon) == D
        assert canon == write_digraph(parse_digraph(canon))
        assert "a 1 2\na 2 3\na 3 1" in canon

    def test_self_loop_rejected(self):
        with pytest.raises(FormatError):
            parse_digraph("p dgr 2 1\na 1 1\n")

    def test_out_of_range_rejected(self):
        with pytest.raises(FormatError):
            parse_digraph("p dgr 2 1\na 1 5\n")

    def test_count_mismatch_rejected(self):
        with pytest.raises(FormatError):
            parse_digraph("p dgr 2 2\na 1 2\n")

    def test_sniff(self):
        assert sniff_kind("p dgr 1 0\n") == "digraph"
        assert sniff_kind("c x\np gr 1 0\n") == "graph"


class TestGraphFormat:
    def test_round_trip(self):
        G = make_graph(4, [(0, 1), (2, 3), (1, 2)])
        assert parse_graph(write_graph(G)) == G


class TestColoringFormat:
    def test_round_trip(self):
        col = Dicoloring((0, 1, 0, 2))
        assert parse_coloring(write_coloring(col)) == col

    def test_missing_vertex_rejected(self):
        with pytest.raises(FormatError):
            parse_coloring("s dicoloring 2 1\nc 1 1\n")

    def test_header_color_count_checked(self):
        with pytest.raises(FormatError):
            parse_coloring("s dicoloring 2 2\nc 1 1\nc 2 1\n")


@pytest.fixture
def planted_file(tmp_path):
    path = tmp_path / "planted.dgr"
    code = run_command([
        "gen", "planted", "--n", "49", "--ell", "2", "--p", "0.5",
        "--seed", "7", "--out", str(path),
    ])
    assert code == 0
    return path


class TestCliColor:
    def test_two_on_planted(self, planted_file, tmp_path, capsys):
        out = tmp_path / "col.txt"
        code = run_command([
            "color", "--algo", "two", "--in", str(planted_file),
            "--out", str(out), "--promise",
        ])
        captured = capsys.readouterr().out
        assert code == 0
        report = dict(line.split("=", 1) for line in captured.strip().splitlines())
        assert report["algorithm"] == "two"
        assert int(report["colors"]) <= 14  # 2 * ceil(sqrt(49))
        assert report["verified"] == "1"
        coloring = parse_coloring(out.read_text())
        assert len(coloring.colors) == 49

    def test_two_certificate_path(self, tmp_path, capsys):
        path = tmp_path / "digons.dgr"
        path.write_text(write_digraph(digon_clique(4)))
        code = run_command(["color", "--algo", "two", "--in", str(path)])
        assert code == 1
        cert = (tmp_path / "digons.dgr.cert").read_text()
        assert "not-2-dicolorable" in cert
        assert "1 2 3 4" in cert

    def test_ell_requires_parameter(self, planted_file):
        assert run_command(["color", "--algo", "ell", "--in",
                            str(planted_file)]) == 2

    def test_dense2(self, tmp_path, capsys):
        path = tmp_path / "t.dgr"
        from dicolor.generators import gen_planted

        D, _ = gen_planted(30, 2, 1.0, 3)
        path.write_text(write_digraph(D))
        code = run_command(["color", "--algo", "dense2", "--in", str(path),
                            "--alpha", "1", "--promise"])
        assert code == 0
        report = dict(
            line.split("=", 1)
            for line in capsys.readouterr().out.strip().splitlines()
        )
        assert int(report["colors"]) <= 10

    def test_c3free(self, tmp_path, capsys):
        from dicolor.generators import gen_c3free_blowup

        path = tmp_path / "b.dgr"
        path.write_text(write_digraph(gen_c3free_blowup(1, 5, inner_size=3)))
        code = run_command(["color", "--algo", "c3free", "--in", str(path),
                            "--alpha", "2", "--promise"])
        assert code == 0
        report = dict(
            line.split("=", 1)
            for line in capsys.readouterr().out.strip().splitlines()
        )
        assert int(report["colors"]) <= 10
        assert report["bound"] == "10"

    def test_size_guard_exit_code(self, tmp_path):
        path = tmp_path / "t.dgr"
        path.write_text(write_digraph(transitive_tournament(3)))
        code = run_command(["color", "--algo", "c3free", "--in", str(path),
                            "--alpha", "40"])
        assert code == 3


class TestCliOracle:
    def test_dichromatic_c3(self, tmp_path, capsys):
        path = tmp_path / "c3.dgr"
        path.write_text("p dgr 3 3\na 1 2\na 2 3\na 3 1\n")
        assert run_command(["oracle", "--what", "dichromatic", "--in",
                            str(path)]) == 0
        assert "dichromatic=2" in capsys.readouterr().out

    def test_maxacyclic(self, tmp_path, capsys):
        path = tmp_path / "c3.dgr"
        path.write_text("p dgr 3 3\na 1 2\na 2 3\na 3 1\n")
        assert run_command(["oracle", "--what", "maxacyclic", "--in",
                            str(path)]) == 0
        assert "maxacyclic=2" in capsys.readouterr().out

    def test_alpha_and_chromatic_on_graph_file(self, tmp_path, capsys):
        path = tmp_path / "tri.gr"
        path.write_text("p gr 3 3\ne 1 2\ne 1 3\ne 2 3\n")
        assert run_command(["oracle", "--what", "chromatic", "--in",
                            str(path)]) == 0
        assert "chromatic=3" in capsys.readouterr().out
        assert run_command(["oracle", "--what", "alpha", "--in",
                            str(path)]) == 0
        assert "alpha=1" in capsys.readouterr().out

    def test_guard_exit_code(self, tmp_path):
        path = tmp_path / "big.dgr"
        path.write_text(write_digraph(transitive_tournament(25)))
        assert run_command(["oracle", "--what", "dichromatic", "--in",
                            str(path)]) == 3


class TestCliVerify:
    def test_valid(self, tmp_path, capsys):
        g = tmp_path / "c3.dgr"
        g.write_text("p dgr 3 3\na 1 2\na 2 3\na 3 1\n")
        c = tmp_path / "col.txt"
        c.write_text("s dicoloring 3 2\nc 1 1\nc 2 1\nc 3 2\n")
        assert run_command(["verify", "--graph", str(g), "--coloring",
                            str(c)]) == 0
        assert "verified=1" in capsys.readouterr().out

    def test_tampered(self, tmp_path, capsys):
        g = tmp_path / "c3.dgr"
        g.write_text("p dgr 3 3\na 1 2\na 2 3\na 3 1\n")
        c = tmp_path / "col.txt"
        c.write_text("s dicoloring 3 1\nc 1 1\nc 2 1\nc 3 1\n")
        assert run_command(["verify", "--graph", str(g), "--coloring",
                            str(c)]) == 1
        out = capsys.readouterr().out
        assert "verified=0" in out
        assert "cycle=1,2,3" in out

    def test_malformed_input(self, tmp_path):
        g = tmp_path / "bad.dgr"
        g.write_text("p dgr 3 zz\n")
        c = tmp_path / "col.txt"
        c.write_text("s dicoloring 3 1\nc 1 1\nc 2 1\nc 3 1\n")
        assert run_command(["verify", "--graph", str(g), "--coloring",
                            str(c)]) == 2


class TestCliGenAndAudit:
    def test_gen_deterministic(self, tmp_path):
        a = tmp_path / "a.dgr"
        b = tmp_path / "b.dgr"
        for path in (a, b):
            assert run_command(["gen", "c3blowup", "--depth", "1",
                                "--inner-size", "2", "--seed", "4",
                                "--out", str(path)]) == 0
        assert a.read_text() == b.read_text()

    def test_gen_product_and_audit(self, tmp_path, capsys):
        skel = tmp_path / "skel.gr"
        skel.write_text("p gr 3 2\ne 1 2\ne 2 3\n")
        inner = tmp_path / "inner.dgr"
        inner.write_text(write_digraph(transitive_tournament(4)))
        prod = tmp_path / "prod.dgr"
        assert run_command(["gen", "product", "--skeleton", str(skel),
                            "--inner", str(inner), "--seed", "12",
                            "--out", str(prod)]) == 0
        capsys.readouterr()
        assert run_command(["audit", "eta", "--in", str(prod), "--skeleton",
                            str(skel), "--eta", "0.5", "--mode", "exact",
                            "--budget", "100000"]) == 0
        out = capsys.readouterr().out
        assert "subset_size=2" in out
        assert "checked=72" in out  # 2 edges x C(4,2)^2

    def test_gen_fold(self, tmp_path):
        skel = tmp_path / "skel.gr"
        skel.write_text("p gr 3 2\ne 1 2\ne 2 3\n")
        prod = tmp_path / "prod.dgr"
        assert run_command(["gen", "product", "--skeleton", str(skel),
                            "--fold", "2", "--seed", "12",
                            "--out", str(prod)]) == 0
        assert parse_digraph(prod.read_text()).n == 9

    def test_audit_sample_mode(self, tmp_path, capsys):
        skel = tmp_path / "skel.gr"
        skel.write_text("p gr 2 1\ne 1 2\n")
        inner = tmp_path / "inner.dgr"
        inner.write_text(write_digraph(transitive_tournament(4)))
        prod = tmp_path / "prod.dgr"
        assert run_command(["gen", "product", "--skeleton", str(skel),
                            "--inner", str(inner), "--seed", "3",
                            "--out", str(prod)]) == 0
        capsys.readouterr()
        assert run_command(["audit", "eta", "--in", str(prod), "--skeleton",
                            str(skel), "--eta", "0.5", "--mode", "sample",
                            "--budget", "25", "--seed", "1"]) == 0
        out = capsys.readouterr().out
        assert "mode=sampled" in out
        assert "certified=0" in out

    def test_missing_file_is_input_error(self):
        assert run_command(["color", "--algo", "two", "--in",
                            "/nonexistent/x.dgr"]) == 2

"""Command-line surface: exit codes, file formats, text/JSON parity,
orient-then-check round trips."""

from __future__ import annotations

import json
import random

import numpy as np
import pytest

from robinson import DissimilaritySpace, OrientedTree, Tree
from robinson.cli import main
from robinson.fileio import (
    read_matrix,
    read_oriented_tree,
    read_tree,
    write_matrix,
    write_oriented_tree,
    write_tree,
)
from support import random_space, random_tree

CHAIN3 = DissimilaritySpace([[0, 1, 2], [1, 0, 1], [2, 1, 0]])
ASYM3 = DissimilaritySpace([[0, 1, 2], [1, 0, 1], [0.5, 1, 0]])


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_constant_matrix(path, n, value=1.0):
    d = np.full((n, n), value)
    np.fill_diagonal(d, 0.0)
    write_matrix(DissimilaritySpace(d), path)


def parse_text(out):
    fields = {}
    for line in out.strip().splitlines():
        key, _, val = line.partition(": ")
        fields[key] = val
    return fields


class TestFileFormats:
    def test_matrix_round_trip(self, tmp_path):
        rng = random.Random(1)
        space = random_space(rng, 5)
        path = tmp_path / "m.matrix"
        write_matrix(space, path)
        again = read_matrix(path)
        assert np.array_equal(space.d, again.d)

    def test_matrix_comments_ignored(self, tmp_path):
        path = tmp_path / "m.matrix"
        path.write_text("# a comment\n2\n0 1\n1 0\n")
        assert read_matrix(path).n == 2

    def test_bad_diagonal_rejected(self, tmp_path):
        path = tmp_path / "m.matrix"
        path.write_text("2\n1 1\n1 0\n")
        from robinson import InputError

        with pytest.raises(InputError):
            read_matrix(path)

    def test_tree_round_trip(self, tmp_path):
        t = random_tree(random.Random(2), 7)
        path = tmp_path / "t.tree"
        write_tree(t, path)
        assert read_tree(path).edges == t.edges

    def test_oriented_tree_round_trip(self, tmp_path):
        t = Tree(3, [(0, 1), (1, 2)])
        ot = OrientedTree(t, [(1, 0), (1, 2)])
        path = tmp_path / "t.orient"
        write_oriented_tree(ot, path)
        assert read_oriented_tree(path).arcs == ot.arcs


class TestExitCodes:
    def test_recognize_yes(self, tmp_path, capsys):
        path = tmp_path / "m.matrix"
        write_matrix(CHAIN3, path)
        code, out, _ = run(capsys, "recognize", str(path))
        assert code == 0
        assert parse_text(out)["answer"] == "YES"
        assert parse_text(out)["order"] in ("0 1 2", "2 1 0")

    def test_recognize_no(self, tmp_path, capsys):
        path = tmp_path / "m.matrix"
        write_matrix(ASYM3, path)
        code, out, _ = run(capsys, "recognize", str(path))
        assert code == 1
        assert parse_text(out)["answer"] == "NO"

    def test_input_error(self, tmp_path, capsys):
        path = tmp_path / "m.matrix"
        path.write_text("2\n0 1\n")
        code, _, err = run(capsys, "recognize", str(path))
        assert code == 2
        assert "error" in err

    def test_size_guard_refusal(self, tmp_path, capsys):
        path = tmp_path / "m.matrix"
        write_constant_matrix(path, 9)
        code, _, err = run(capsys, "oracle", "recognize", str(path))
        assert code == 3
        assert "refused" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "recognize", "/nonexistent/m.matrix")
        assert code == 2


class TestCommands:
    def test_orient_star_constant(self, tmp_path, capsys):
        path = tmp_path / "m.matrix"
        write_constant_matrix(path, 5)
        code, out, _ = run(capsys, "orient", "star", str(path), "--center", "0")
        assert code == 0
        assert parse_text(out)["xi"] == "8"

    def test_orient_star_tries_all_centers(self, tmp_path, capsys):
        path = tmp_path / "m.matrix"
        write_constant_matrix(path, 5)
        code, out, _ = run(capsys, "orient", "star", str(path))
        assert code == 0
        fields = parse_text(out)
        assert fields["xi"] == "8"
        assert fields["center"] == "0"

    def test_orient_tree_and_check_round_trip(self, tmp_path, capsys):
        mpath, tpath, opath = (tmp_path / x for x in ("m.matrix", "t.tree", "t.orient"))
        write_constant_matrix(mpath, 6)
        write_tree(random_tree(random.Random(3), 6), tpath)
        code, out, _ = run(capsys, "--json", "orient", "tree", str(mpath), str(tpath))
        assert code == 0
        payload = json.loads(out)
        t = read_tree(tpath)
        ot = OrientedTree(t, [tuple(a) for a in payload["orientation"]])
        write_oriented_tree(ot, opath)
        code, out, _ = run(capsys, "check", str(mpath), str(opath))
        assert code == 0
        assert parse_text(out)["xi"] == str(payload["xi"])

    def test_orient_path(self, tmp_path, capsys):
        path = tmp_path / "m.matrix"
        write_matrix(CHAIN3, path)
        code, out, _ = run(capsys, "orient", "path", str(path), "--order", "0,1,2")
        assert code == 0
        assert parse_text(out)["xi"] == "3"

    def test_check_says_no_on_incompatible(self, tmp_path, capsys):
        mpath, opath = tmp_path / "m.matrix", tmp_path / "t.orient"
        write_matrix(DissimilaritySpace([[0, 2, 1], [2, 0, 1], [1, 1, 0]]), mpath)
        write_oriented_tree(
            OrientedTree(Tree(3, [(0, 1), (1, 2)]), [(0, 1), (1, 2)]), opath
        )
        code, out, _ = run(capsys, "check", str(mpath), str(opath))
        assert code == 1
        assert parse_text(out)["answer"] == "NO"

    def test_assign_star(self, tmp_path, capsys):
        path = tmp_path / "m.matrix"
        write_constant_matrix(path, 5)
        code, out, _ = run(capsys, "assign", "star", str(path), "--in", "2", "--out", "2")
        assert code == 0
        fields = parse_text(out)
        assert len(fields["in"].split()) == 2

    def test_petals(self, tmp_path, capsys):
        path = tmp_path / "m.matrix"
        d = np.full((4, 4), 2.0)
        np.fill_diagonal(d, 0.0)
        d[1, 2] = d[2, 1] = 1.0
        write_matrix(DissimilaritySpace(d), path)
        code, out, _ = run(capsys, "petals", str(path), "--center", "0")
        assert code == 0
        assert parse_text(out)["petals"] == "1 2 | 3"

    def test_gen_sat_files(self, tmp_path, capsys):
        dimacs = tmp_path / "f.cnf"
        dimacs.write_text("p cnf 3 1\n1 2 3 0\n")
        prefix = tmp_path / "inst"
        code, out, _ = run(capsys, "gen", "sat", str(dimacs), "--out-prefix", str(prefix))
        assert code == 0
        assert parse_text(out)["kappa"] == "370"
        assert read_matrix(f"{prefix}.matrix").n == 65
        assert read_tree(f"{prefix}.tree").n == 65
        assert (tmp_path / "inst.kappa").read_text().strip() == "370"
        roles = (tmp_path / "inst.roles").read_text().splitlines()
        assert roles[0] == "0 y"
        assert len(roles) == 65

    def test_gen_subset_files(self, tmp_path, capsys):
        graph = tmp_path / "g.graph"
        graph.write_text("2\n0 1\n")
        prefix = tmp_path / "sub"
        code, out, _ = run(capsys, "gen", "subset", str(graph), "--out-prefix", str(prefix))
        assert code == 0
        assert parse_text(out)["kappa"] == "5"
        assert read_matrix(f"{prefix}.matrix").n == 5

    def test_gen_assign_files(self, tmp_path, capsys):
        mpath = tmp_path / "m.matrix"
        write_constant_matrix(mpath, 5)
        prefix = tmp_path / "asn"
        code, out, _ = run(
            capsys, "gen", "assign", str(mpath), "--kappa", "3", "--out-prefix", str(prefix)
        )
        assert code == 0
        ot = read_oriented_tree(f"{prefix}.orient")
        assert ot.arcs == ((0, 1), (1, 2), (3, 2), (3, 4))

    def test_oracle_c1p(self, tmp_path, capsys):
        path = tmp_path / "b.matrix"
        path.write_text("3 3\n1 1 0\n0 1 1\n1 0 1\n")
        code, out, _ = run(capsys, "oracle", "c1p", str(path))
        assert code == 1

    def test_oracle_subset(self, tmp_path, capsys):
        path = tmp_path / "m.matrix"
        write_matrix(CHAIN3, path)
        code, out, _ = run(capsys, "oracle", "subset", str(path), "--kappa", "3")
        assert code == 0
        assert parse_text(out)["subset"] == "0 1 2"


class TestJsonTextParity:
    def test_same_values_both_renderings(self, tmp_path, capsys):
        path = tmp_path / "m.matrix"
        write_constant_matrix(path, 5)
        code, text_out, _ = run(capsys, "orient", "star", str(path), "--center", "0")
        code, json_out, _ = run(capsys, "--json", "orient", "star", str(path), "--center", "0")
        fields = parse_text(text_out)
        payload = json.loads(json_out)
        assert fields["answer"] == payload["answer"]
        assert int(fields["xi"]) == payload["xi"]
        assert fields["center"] == str(payload["center"])
        arcs = [f"{u}>{v}" for u, v in payload["orientation"]]
        assert fields["orientation"].split() == arcs

    def test_elapsed_goes_to_stderr(self, tmp_path, capsys):
        path = tmp_path / "m.matrix"
        write_matrix(CHAIN3, path)
        _, out, err = run(capsys, "recognize", str(path))
        assert "elapsed_ms" not in out
        assert "elapsed_ms" in err

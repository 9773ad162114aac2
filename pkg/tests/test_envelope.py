import itertools
from math import comb

import pytest

from bpbw.envelope import (
    AssocPresentation, HomMap, check_confluence, graded_dimensions, hilbert_counts,
    matrix_algebra, matrix_vector, overlap_words, pbw_basis, theta_extend,
)
from bpbw.words import format_word

from oracles import brute_nonincreasing, clifford_matrices, quantum_plane_matrices, sl2_matrices


def psi_from_matrices(P, mats):
    W = matrix_algebra(2, P.ctx)
    images = {}
    for name, M in mats.items():
        rows = [[P.ctx.parse(str(M[r, c])) for c in range(2)] for r in range(2)]
        images[name] = matrix_vector(W, rows)
    return W, HomMap(P, W, images)


class TestCounting:
    @pytest.mark.parametrize("m", range(1, 5))
    def test_basis_matches_brute(self, m):
        for d in range(9):
            assert set(pbw_basis(m, d)) == set(brute_nonincreasing(m, d))
            assert len(pbw_basis(m, d)) == comb(m + d - 1, d)

    def test_basis_examples(self, catalog):
        assert pbw_basis(catalog["sl2"], 0) == [()]
        assert len(pbw_basis(catalog["sl2"], 2)) == 6
        assert len(pbw_basis(catalog["quantum_plane"], 3)) == 4
        assert [format_word(w, catalog["quantum_plane"]) for w in pbw_basis(catalog["quantum_plane"], 2)] == [
            "x.x", "y.x", "y.y"]

    def test_hilbert(self, catalog):
        assert hilbert_counts(catalog["sl2"], 6) == [1, 3, 6, 10, 15, 21, 28]
        assert hilbert_counts(catalog["quantum_plane"], 3) == [1, 2, 3, 4]
        for m in range(5):
            assert hilbert_counts(m, 8) == [comb(m + d - 1, d) if m else int(d == 0) for d in range(9)]

    def test_graded(self, catalog):
        dims = graded_dimensions(catalog["quantum_plane"], 2)
        assert dims == {(0, 0): 1, (1, 0): 1, (0, 1): 1, (2, 0): 1, (1, 1): 1, (0, 2): 1}
        sh = graded_dimensions(catalog["super_heisenberg"], 3)
        assert sum(sh.values()) == sum(hilbert_counts(3, 3))
        assert set(sh) == {(0,), (1,)}

    def test_graded_ungraded(self, catalog):
        # trivial group: everything sits in one bucket
        assert graded_dimensions(catalog["sl2"], 3) == {(): 20}


class TestConfluence:
    @pytest.mark.parametrize("name", ["sl2", "quantum_plane", "heisenberg", "super_heisenberg"])
    def test_confluent(self, catalog, name):
        rep = check_confluence(catalog[name], 4)
        assert rep.ok and rep.lines(catalog[name])[0].startswith("OK")

    def test_broken(self, catalog):
        P = catalog["broken_jacobi"]
        rep = check_confluence(P, 4)
        assert not rep.ok
        assert (0, 1, 2) in rep.words()
        for w in rep.words():
            assert {0, 1, 2} <= set(w)
        d = next(d for d in rep.divergent if d.word == (0, 1, 2))
        assert d.difference == d.leftmost - d.rightmost
        assert rep.lines(P)[0].startswith("DIVERGENT")

    def test_overlap_words(self, catalog):
        words = overlap_words(catalog["sl2"])
        assert (0, 1, 2) in words
        assert all(len(w) in (3, 5) for w in words)


class TestAssoc:
    def test_matrix_algebra_valid(self, catalog):
        assert matrix_algebra(2, catalog["sl2"].ctx).validate().ok

    def test_bad_algebra(self, catalog):
        ctx = catalog["sl2"].ctx
        # a*a = 1 with unit 1 is fine; a*a = a + 1 with non-identity unit is not
        W = AssocPresentation(ctx, ["u", "a"], {(0, 0): [1, 0], (0, 1): [0, 1], (1, 0): [0, 1],
                                               (1, 1): [1, 1]}, [0, 1])
        rep = W.validate()
        assert not rep.ok and any("unit" in msg for msg in rep.issues)


class TestTheta:
    def test_sl2(self, catalog):
        P = catalog["sl2"]
        W, psi = psi_from_matrices(P, sl2_matrices())
        rep = theta_extend(P, W, psi)
        assert rep.ok and rep.checked == 400 and not rep.notes

    def test_quantum_plane(self, catalog):
        P = catalog["quantum_plane"]
        W, psi = psi_from_matrices(P, quantum_plane_matrices())
        rep = theta_extend(P, W, psi)
        assert rep.ok and rep.checked == 100
        # the reversed pair is not consumed by straightening and only shows up as a note
        assert len(rep.notes) == 1 and "[y x]" in rep.notes[0]

    def test_super_heisenberg(self, catalog):
        P = catalog["super_heisenberg"]
        W, psi = psi_from_matrices(P, clifford_matrices())
        assert theta_extend(P, W, psi).ok

    def test_zero_map(self, catalog):
        for name in ("sl2", "heisenberg"):
            P = catalog[name]
            W = matrix_algebra(2, P.ctx)
            assert theta_extend(P, W, HomMap.zero(P, W), max_len=2).ok

    def test_not_a_homomorphism(self, catalog):
        P = catalog["sl2"]
        mats = sl2_matrices()
        mats["h"] = mats["h"] * 0
        W, psi = psi_from_matrices(P, mats)
        rep = theta_extend(P, W, psi)
        assert not rep.ok and rep.checked == 0
        assert rep.lines(P)[0].startswith("NOT-A-HOMOMORPHISM")

    def test_explicit_samples(self, catalog):
        P = catalog["sl2"]
        W, psi = psi_from_matrices(P, sl2_matrices())
        rep = theta_extend(P, W, psi, samples=[((0,), (2,)), ((2, 1), (1, 0))])
        assert rep.ok and rep.checked == 2

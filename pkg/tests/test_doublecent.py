"""Functions to test the double-centralizer route to component groups."""
import os
from fractions import Fraction

import pytest

import nilcent.examples
from nilcent.components import normalize_label
from nilcent.doublecent import (BarredData, Restriction, centralizer_pair, component_group, diagram_restrictions,
                                extension_solve, killing_complement, parse_weight, permutation_candidates,
                                pinned_indices, report, restriction_candidates, torus_restriction)
from nilcent.liealg import CanonicalGenerators, LieAlgebra
from nilcent.sl2 import representative

STRETCH = bool(os.environ.get("NILCENT_STRETCH"))


class TestWeightNotation:

    def test_parse_weight(self):
        assert parse_weight("(10,01;01)", [2, 2], 0, [2]) == (1, 0, 0, 1, 0, 1)
        assert parse_weight("(100;1)", [3], 0, [1]) == (1, 0, 0, 1)
        # Centre values come last.
        assert parse_weight("(-2,0;1000)", [], 2, [4]) == (1, 0, 0, 0, -2, 0)
        assert parse_weight("(1,3;0010)", [], 2, [4]) == (0, 0, 1, 0, 1, 3)

    def test_unseparated_components(self):
        assert parse_weight("(1,1;10)", [1, 1], 0, [2]) == parse_weight("(11;10)", [1, 1], 0, [2])
        assert parse_weight("(-1 2;1 0)", [2], 0, [2]) == (-1, 2, 1, 0)

    def test_invalid_weights(self):
        pytest.raises(ValueError, parse_weight, "(10;01)", [2], 1, [2])
        pytest.raises(ValueError, parse_weight, "(10;1,2;01)", [2], 1, [2])
        pytest.raises(ValueError, parse_weight, "(100;01)", [2], 0, [2])
        pytest.raises(ValueError, parse_weight, "(10,01;01)", [2], 0, [2])


class TestLongRootOrbitG2:
    """The orbit A1 of G2: c1 and c2 are the two orthogonal sl2 and the complement is 2 x 4."""

    g2 = LieAlgebra.from_type("G2")
    triple = representative(g2, "A1")
    pair = centralizer_pair(triple)

    def test_pair(self):
        assert self.pair.labels == ("A1", 0, "A1")
        data = self.pair.to_dict()
        assert data["dim_c1"] == data["dim_c2"] == 3
        assert data["dim_c"] == 6
        assert all(self.pair.c2_derived.contains(x) for x in self.triple)

    def test_distinguished_orbit(self):
        pytest.raises(ValueError, centralizer_pair, representative(self.g2, "G2(a1)"))

    def test_killing_complement(self):
        md = killing_complement(self.pair)
        assert (md.s, md.d, md.m) == (2, 0, 1)
        assert [len(b) for b in md.bases] == [8]
        assert md.weight_strings() == ["(3;1)"]
        assert killing_complement(self.pair, ["(3;1)"]).weight_strings() == ["(3;1)"]
        pytest.raises(ValueError, killing_complement, self.pair, ["(2;1)"])
        basis, owners, _, _ = md.adapted_basis()
        assert len(basis) == self.g2.dim
        assert owners.count(0) == 8

    def test_extension(self):
        md = killing_complement(self.pair)
        theta = Restriction.identity(self.pair.generators1)
        eta = Restriction.identity(self.pair.generators2)
        barred = BarredData(md, theta, eta)
        assert barred.weights == [tuple(md.weights[0][:md.s])]
        assert permutation_candidates(md, theta, eta, barred) == [(0,)]
        assert torus_restriction(md, (0,)) == []
        assert pinned_indices(md) == []
        # lambda = 1 and lambda = -1 on the complement.
        found = extension_solve(md, theta, eta, (0,), [])
        assert len(found) == 2
        assert all(sigma.fixes(*self.triple) for sigma in found)

    def test_restrictions_follow_the_decomposition(self):
        md = killing_complement(self.pair)
        thetas, etas = restriction_candidates(self.pair, decomposition=md)
        assert [theta.h for theta in thetas] == [md.generators1.h]
        assert len(etas) == 1
        assert etas[0].h == md.generators2.h and etas[0].x == md.generators2.x

    def test_component_group(self):
        result = component_group(self.triple)
        assert result.group.label == "1"
        data = report(result)
        assert data["pair"]["c1_derived"] == "A1"
        assert data["module"]["table"] == ["(3;1)"]
        assert data["group"]["route"] == "doublecent"
        assert all(s["status"] == "sat" for s in data["extensions"])


class TestRestrictions:

    def test_diagram_restrictions(self):
        empty = CanonicalGenerators([], [], [], "0")
        assert [r.perm for r in diagram_restrictions(empty)] == [()]
        pair = centralizer_pair(representative("G2", "A1"))
        assert len(diagram_restrictions(pair.generators1)) == 1


class TestExceptionalRows:

    def test_f4_short_root_pair(self):
        row = nilcent.examples.table_row("F4", "~A1")
        pair = centralizer_pair(representative("F4", "~A1"))
        assert pair.labels == (row["c1"], row["d"], row["c2"])
        md = killing_complement(pair, row["weights"])
        assert md.weight_strings() == row["weights"]

    def test_f4_levi_pairs(self):
        for label, c1 in [("A2", "A2"), ("B2", "2A1")]:
            row = nilcent.examples.table_row("F4", label)
            pair = centralizer_pair(representative("F4", label))
            assert pair.labels == (c1, 0, row["c2"]), label
            assert (row["c1"], row["d"]) == (c1, 0)
            md = killing_complement(pair, row["weights"])
            assert md.weight_strings() == row["weights"]

    def test_f4_a2_group(self):
        row = nilcent.examples.table_row("F4", "A2")
        result = component_group(representative("F4", "A2"), rows=row["weights"])
        assert result.group.label == normalize_label(row["group"])
        assert result.group.order == 2
        assert len(result.thetas) == 2

    def test_e6_d4a1_pair(self):
        pair = centralizer_pair(representative("E6", "D4(a1)"))
        assert pair.labels == ("0", 2, "D4")
        assert pair.generators2.rank == 4
        assert pair.generators2.check()

    @pytest.mark.skipif(not STRETCH, reason="Set NILCENT_STRETCH to run the F4 extension systems.")
    def test_f4_short_root_group(self):
        row = nilcent.examples.table_row("F4", "~A1")
        result = component_group(representative("F4", "~A1"), rows=row["weights"])
        assert result.group.label == normalize_label(row["group"])

    @pytest.mark.skipif(not STRETCH, reason="Set NILCENT_STRETCH to run the E6 extension systems.")
    def test_e6_d4a1(self):
        row = nilcent.examples.table_row("E6", "D4(a1)")
        triple = representative("E6", "D4(a1)")
        pair = centralizer_pair(triple)
        assert pair.labels == ("0", 2, "D4")
        md = killing_complement(pair, row["weights"])
        assert md.weight_strings() == row["weights"]
        assert pinned_indices(md) == [0, 2]

        result = component_group(triple, rows=row["weights"])
        assert result.group.label == "S3"
        assert sorted(result.group.orders) == [1, 2, 2, 2, 3, 3]

        # The diagram symmetry 1 -> 3 -> 4 -> 1 of D4, so that eta(h_i) is h_tau^-1(i).
        md = result.decomposition
        theta = result.thetas[0]
        (eta,) = [eta for eta in result.etas if eta.perm == (3, 1, 0, 2)]
        barred = BarredData(md, theta, eta)
        perms = permutation_candidates(md, theta, eta, barred)
        assert len(perms) == 8
        assert all({pi[0], pi[1]} == {4, 5} and {pi[2], pi[3]} == {0, 1} for pi in perms)
        survivors = [pi for pi in perms if torus_restriction(md, pi) is not None]
        assert survivors == [(5, 4, 1, 0, 2, 3)]
        a = torus_restriction(md, survivors[0])
        assert a == [[Fraction(-1, 2), Fraction(1, 2)], [Fraction(-3, 2), Fraction(-1, 2)]]
        # lambda_1 = lambda_3 = 1 leaves a single extension.
        assert len(extension_solve(md, theta, eta, survivors[0], a, barred=barred)) == 1

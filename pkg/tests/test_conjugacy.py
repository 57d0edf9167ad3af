"""Functions to test conjugacy and stabilizers in the adjoint group."""
import os

import pytest

from nilcent.conjugacy import (ConnectedGroup, IdentityComponent, SearchResult, TorusParametrization,
                               conjugate_cartan_pair, conjugate_into_cartan, coroot_torus_element, find_conjugator,
                               finite_stabilizer, order2_search, outer_stabilizer, simple_reflection,
                               stabilizer_group, weyl_representative)
from nilcent.liealg import LieAlgebra, is_inner
from nilcent.scalars import QQ_FIELD
from nilcent.sl2 import jacobson_morozov, representative, triple_from_wdd

STRETCH = bool(os.environ.get("NILCENT_STRETCH"))


class TestTorusAndWeylGroup:

    g2 = LieAlgebra.from_type("G2")

    def test_coroot_torus_element(self):
        t = coroot_torus_element(self.g2, 1, 2)
        # x_beta is scaled by 2^<beta, alpha_1^vee>.
        assert t(self.g2.x((1, 0))) == 4 * self.g2.x((1, 0))
        assert 8 * t(self.g2.x((0, 1))) == self.g2.x((0, 1))
        assert t.fixes(*self.g2.cartan_subalgebra())
        pytest.raises(ValueError, coroot_torus_element, self.g2, 1, 0)

    def test_adjoint_torus(self):
        torus = TorusParametrization.adjoint(self.g2)
        assert torus.variables == ["t1", "t2"]
        t = coroot_torus_element(self.g2, 1, 2)
        assert torus.matrix([QQ_FIELD(4), QQ_FIELD("1/8")], QQ_FIELD) == t.matrix
        assert torus.contains(t)
        assert not torus.contains(simple_reflection(self.g2, 1))

    def test_simple_reflections(self):
        rs = self.g2.root_system
        s1 = simple_reflection(self.g2, 1)
        assert s1(self.g2.h(1)) == -self.g2.h(1)
        assert s1(self.g2.h(2)) == self.g2.cartan_element([1, 1])
        word = (1, 2, 1)
        sigma = weyl_representative(self.g2, word)
        assert sigma(self.g2.h(2)) == self.g2.cartan_element(rs.apply_word(word, (0, 1)))

    def test_weyl_representatives_are_inner_isometries(self):
        a3 = LieAlgebra.from_type("A3")
        basis = [a3.basis_element(k) for k in range(a3.dim)]
        gram = a3.killing_matrix(basis)
        for word in [(1,), (1, 2, 3), (2, 1, 3, 2)]:
            sigma = weyl_representative(a3, word)
            assert sigma.certified
            assert a3.killing_matrix([sigma(b) for b in basis]) == gram
            assert sigma(a3.h(2)) == a3.cartan_element(a3.root_system.apply_word(word, (0, 1, 0)))
        assert is_inner(simple_reflection(a3, 1))

    def test_conjugate_cartan_pair(self):
        rs = self.g2.root_system
        h1 = self.g2.cartan_element([1, 3])
        h2 = self.g2.cartan_element(rs.apply_word((2, 1, 2), (1, 3)))
        tau = conjugate_cartan_pair(h1, h2)
        assert tau(h1) == h2
        assert conjugate_cartan_pair(h1, self.g2.cartan_element([2, 6])) is None
        pytest.raises(ValueError, conjugate_cartan_pair, h1, self.g2.x((1, 0)))

    def test_conjugate_into_cartan(self):
        h = self.g2.cartan_element([1, 2])
        sigma, image = conjugate_into_cartan(h)
        assert sigma.is_identity() and image == h

        moved = self.g2.exp_ad(self.g2.x((0, -1)))(h)
        tau, image = conjugate_into_cartan(moved)
        assert tau(moved) == image
        rs = self.g2.root_system
        assert (rs.dominant_representative(self.g2.cartan_coordinates(image))[0]
                == rs.dominant_representative((1, 2))[0])


class TestBruhatCells:

    g2 = LieAlgebra.from_type("G2")

    def test_cells_of_whole_group(self):
        group = ConnectedGroup.centralizer(self.g2, (0, 0))
        cells = group.cells()
        assert len(cells) == 12
        assert cells[0].length == 0
        longest = cells[-1]
        assert longest.length == 6
        assert len(longest.u_vars) == 6
        assert longest.variables[:2] == ["t1", "t2"]
        assert len(longest.system().variables) == 2 + 6 + 6 + 2

    def test_cells_of_centralizer(self):
        # alpha_1 vanishes on h, alpha_2 does not.
        group = ConnectedGroup.centralizer(self.g2, (2, 4))
        assert [cell.word for cell in group.cells()] == [(), (0,)]

    def test_cell_matrix(self):
        group = ConnectedGroup.centralizer(self.g2, (2, 4))
        cell = group.cells()[1]
        solution = {"s1": QQ_FIELD(0), "t1": QQ_FIELD(1), "t2": QQ_FIELD(1), "u1": QQ_FIELD(0)}
        sigma = cell.element(solution, QQ_FIELD)
        # The Weyl representative of the cell swaps the signs of the roots +-alpha_1.
        assert sigma(self.g2.h(1)) == -self.g2.h(1)


class TestStabilizers:

    g2 = LieAlgebra.from_type("G2")

    def test_find_conjugator(self):
        t1 = jacobson_morozov(self.g2.x((3, 2)))
        t2 = triple_from_wdd(self.g2, (0, 1))
        phi = find_conjugator(t1, t2)
        assert phi(t1.e) == t2.e
        assert phi(t1.h) == t2.h
        pytest.raises(ValueError, find_conjugator, t1, triple_from_wdd(self.g2, (2, 2)))

    def test_regular_orbit(self):
        group = stabilizer_group(representative(self.g2, "G2"))
        assert group.label == "1"
        assert group._meta["route"] == "conjugacy"
        # The centralizer of a regular neutral element is the torus: one cell.
        assert len(group._meta["cells"]) == 1

    def test_subregular_orbit(self):
        triple = representative(self.g2, "G2(a1)")
        found = finite_stabilizer(triple)
        assert isinstance(found, SearchResult)
        assert found.complete
        assert len(found) == 6
        assert all(phi.fixes(*triple) for phi in found)

        group = stabilizer_group(triple)
        assert group.label == "S3"
        assert sorted(group.orders) == [1, 2, 2, 2, 3, 3]

        involutions = order2_search(triple)
        assert len(involutions) == 4
        # G2 has no diagram automorphisms.
        assert len(outer_stabilizer(triple, inner=found)) == 0

    def test_positive_dimensional_centralizer(self):
        pytest.raises(ValueError, finite_stabilizer, representative(self.g2, "A1"))

    @pytest.mark.skipif(not STRETCH, reason="Set NILCENT_STRETCH to run the F4 stabilizer search.")
    def test_f4_a3(self):
        group = stabilizer_group(representative("F4", "F4(a3)"))
        assert group.label == "S4"
        assert group.order == 24


class TestIdentityComponents:

    g2 = LieAlgebra.from_type("G2")

    def test_torus(self):
        cartan = self.g2.subalgebra(self.g2.cartan_subalgebra())
        component = IdentityComponent(cartan)
        assert coroot_torus_element(self.g2, 2, 3) in component
        assert not component.contains(simple_reflection(self.g2, 1))

    def test_reductive(self):
        # Z(h_1) is A1 plus a one-dimensional centre and contains the maximal torus.
        component = IdentityComponent(self.g2.centralizer([self.g2.h(1)]))
        assert component.contains(coroot_torus_element(self.g2, 1, -1))
        assert component.contains(self.g2.exp_ad(self.g2.x((3, 2))))
        assert not component.contains(simple_reflection(self.g2, 1))

    def test_trivial(self):
        component = IdentityComponent(self.g2.subalgebra([]))
        assert component.contains(self.g2.identity())
        assert not component.contains(coroot_torus_element(self.g2, 1, -1))

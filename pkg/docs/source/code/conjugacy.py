"""Example code for the conjugacy route chapter (it's made like this to test the syntax). """
####################################
# SECTION: Finite stabilizers
####################################
import nilcent

triple = nilcent.sl2.representative("G2", "G2")
group = nilcent.conjugacy.stabilizer_group(triple)
print(group.label, group.order)
print(group._meta["cells"])

####################################
# SECTION: Torus elements
####################################
g2 = nilcent.LieAlgebra.from_type("G2")
t = nilcent.conjugacy.coroot_torus_element(g2, 1, 2)
print(t(g2.x((1, 0))) == 4 * g2.x((1, 0)))

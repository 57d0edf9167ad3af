"""Example code for the Lie algebras chapter (it's made like this to test the syntax). """
#######################
# SECTION: Root systems
#######################
import nilcent

rs = nilcent.rootsys.RootSystem.from_type("G2")
print(rs.cartan_matrix)
print(f"{len(rs.positive_roots)} positive roots, highest root {rs.highest_root()}")

#########################
# SECTION: Lie algebras
#########################
g2 = nilcent.LieAlgebra.from_type("G2")
x, y = g2.x((1, 0)), g2.x((-1, 0))
print(g2.bracket(x, y) == g2.h(1))
print(g2.check_jacobi())

#####################################
# SECTION: Subalgebras and their types
#####################################
centralizer = g2.centralizer([g2.x((0, 1))])
print(f"The centralizer of x_(0,1) has dimension {centralizer.dim}")
levi = g2.subalgebra([g2.x((1, 0)), g2.x((-1, 0)), g2.h(1)])
print(nilcent.liealg.subalgebra_type(levi))

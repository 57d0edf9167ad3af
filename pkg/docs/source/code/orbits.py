"""Example code for the nilpotent orbits chapter (it's made like this to test the syntax). """
#########################
# SECTION: Fixture orbits
#########################
import nilcent

for record in nilcent.examples.orbit_records("G2"):
    print(record["label"], record["wdd"], record["dim"])

##########################################
# SECTION: Triples from Dynkin diagrams
##########################################
triple = nilcent.sl2.representative("G2", "G2(a1)")
print(triple.is_valid())
print(nilcent.sl2.weighted_dynkin_diagram(triple))
print(nilcent.sl2.orbit_dimension(triple))

#########################################
# SECTION: Triples from a nilpotent element
#########################################
g2 = nilcent.LieAlgebra.from_type("G2")
e = g2.x((1, 0)) + g2.x((0, 1))
regular = nilcent.sl2.jacobson_morozov(e)
print(nilcent.sl2.weighted_dynkin_diagram(regular))

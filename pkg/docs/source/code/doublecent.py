"""Example code for the double centralizer chapter (it's made like this to test the syntax). """
#####################################
# SECTION: The centralizer pair
#####################################
import nilcent
from nilcent import doublecent

triple = nilcent.sl2.representative("F4", "~A1")
pair = doublecent.centralizer_pair(triple)
print(pair.labels)  # ('A3', 0, 'A1')

#####################################
# SECTION: The Killing complement
#####################################
md = doublecent.killing_complement(pair)
print(md.weight_strings())
row = nilcent.examples.table_row("F4", "~A1")
print(doublecent.match_weights(md, row["weights"]) is not None)

"""Example code for the classical route chapter (it's made like this to test the syntax). """
#######################
# SECTION: B2 example
#######################
import nilcent

triple, published = nilcent.examples.classical_example()
result = nilcent.classical.component_group_classical(triple)
print(result.full.label)  # C2×C2
print(result.adjoint.label)  # C2
print(all(any(g == x for x in result.full.elements) for g in published.values()))

#########################
# SECTION: Partitions
#########################
for partition in nilcent.classical.partitions("symmetric", 7):
    triple = nilcent.classical.partition_triple("symmetric", partition)
    result = nilcent.classical.component_group_classical(triple)
    print(partition, result.full.label, result.adjoint.label)

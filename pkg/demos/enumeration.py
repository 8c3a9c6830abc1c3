"""
Enumerating dense types and their induced colourings
====================================================

A dense type on n colours distributes the colours into five roles and
induces a square colouring of a finite alphabet through a four-case
formula.  Enumeration is exhaustive over role assignments and then
reduced to canonical representatives under colour relabelling, giving
exactly 2, 3, and 8 types on 2, 3, and 4 colours.
"""

from madic import enumerate_types, partition_from_type, validate_type

for n in (2, 3, 4):
    types = enumerate_types(n)
    print(f"dense types on {n} colours: {len(types)}")
    for t in types:
        # Every enumerated representative passes its own validator.
        assert not validate_type(t)
        elements, table = partition_from_type(t)
        rows = " / ".join("".join(str(c) for c in row) for row in table.values)
        print(f"  A={sorted(t.A)} B={sorted(t.B)} blocks={sorted(t.blocks)}"
              f" D={sorted(t.D)} E={sorted(t.E)}  ->  {table.m}x{table.m}"
              f" colouring [{rows}]")
    print()

# The two 2-colour types induce exactly the two fundamental colourings:
# the "ascending pair" table and the "diagonal" table.
two = [partition_from_type(t)[1].values for t in enumerate_types(2)]
print("n=2 colourings:", two)

# Validation catches malformed types; for example, an empty A forces all
# blocks to be paired, so a singleton block must be reported.
from madic.dense_types import DenseType

bad = DenseType(2, A=frozenset(), B=frozenset(), psi=(),
                C=frozenset({0, 1}), blocks=(frozenset({0}), frozenset({1})),
                D=frozenset(), E=frozenset(), gamma=())
print("violations for an all-singleton type with empty A:")
for msg in validate_type(bad):
    print("  -", msg)

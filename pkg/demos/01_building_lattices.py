"""Build finite lattices from cover relations and inspect their structure.

A lattice is entered as its Hasse diagram: the element count and the list
of covering pairs (lower, upper).  Validation is strict: redundant pairs,
cycles and posets without unique joins/meets are rejected with witnesses.
"""

from latticelab import poset_from_covers, transitive_reduce, try_lattice
from latticelab.errors import NotALatticeError, NotReducedError
from latticelab.io import to_dot
from latticelab import zoo

# The hexagon: two parallel 3-chains sharing bottom and top.
hexagon = try_lattice(
    poset_from_covers(6, [(0, 1), (0, 2), (1, 3), (2, 4), (3, 5), (4, 5)])
)
print("hexagon:", hexagon)
print("bottom", hexagon.bot, "/ top", hexagon.top)
print("join of the two atoms 1, 2:", hexagon.join[1, 2])
print("meet of the two coatoms 3, 4:", hexagon.meet[3, 4])

# Strict ingestion refuses pairs that are not covers...
try:
    poset_from_covers(3, [(0, 1), (1, 2), (0, 2)])
except NotReducedError as exc:
    print("\nstrict ingestion:", exc)

# ...while the lenient path reduces them away.
p = transitive_reduce(3, [(0, 1), (1, 2), (0, 2)])
print("lenient ingestion keeps:", p.covers)

# Posets without unique joins are not lattices; the error carries the
# offending minimal upper bounds.
try:
    try_lattice(
        poset_from_covers(
            6,
            [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)],
        )
    )
except NotALatticeError as exc:
    print("not a lattice:", exc)

# Hasse diagrams export to DOT (rendered bottom-up).
print("\nDOT for the diamond:")
print(to_dot(zoo.m3().poset))

"""The property zoo: eight flags per lattice, with witnesses.

The named zoo lattices are chosen to separate the properties: each
satisfies exactly the combination its name advertises, so together they
refute every implication that fails in general.
"""

from latticelab import classify, zoo
from latticelab.properties import left_modular_chain, left_modular_elements

COLUMNS = (
    "distributive", "join_semidistributive", "meet_semidistributive",
    "semidistributive", "join_extremal", "extremal", "left_modular",
    "el_shellable",
)

print(f"{'lattice':36s} " + " ".join(c[:4] for c in COLUMNS))
for name, L in zoo.fixture_lattices().items():
    record = classify(L)
    row = " ".join(
        f"{str(getattr(record, c))[:4]:4s}" for c in COLUMNS
    )
    print(f"{name:36s} {row}")

print("\nwitness details for the hexagon:")
record = classify(zoo.hexagon())
for key, value in sorted(record.witnesses.items()):
    print(f"  {key}: {value}")

print("\nleft-modular elements of the hexagon:",
      left_modular_elements(zoo.hexagon()))
print("left-modular chain of the diamond:",
      left_modular_chain(zoo.m3()))
print("left-modular chain of the 8-element witness:",
      left_modular_chain(zoo.jsd_not_left_modular()))

"""Perspectivity of covering pairs and the blocking set of an irreducible.

Every covering pair is perspective to the cover under some join
irreducible.  Two constructions find a witness: a plain scan over the
irreducibles, and a structural descent through subintervals mirroring the
inductive argument.  Both are verified against the definition.
"""

from latticelab import (
    is_perspective,
    join_irreducible_ids,
    join_irreducibles,
    kappa_data,
    meet_irreducibles,
    perspectivity_witness_recursive,
    perspectivity_witness_scan,
    zoo,
)

hexagon = zoo.hexagon()
print("hexagon covers:", hexagon.covers)
print("is (0,1) perspective to (4,5)?", is_perspective(hexagon, (0, 1), (4, 5)))
print("is (2,4) perspective to anything but itself?",
      any(is_perspective(hexagon, (2, 4), c) for c in hexagon.covers
          if c != (2, 4)))

print("\nwitnesses for every hexagon cover:")
for cover in hexagon.covers:
    scan = perspectivity_witness_scan(hexagon, cover)
    descent = perspectivity_witness_recursive(hexagon, cover)
    print(f"  {cover}: scan -> {scan.j}, descent -> {descent.j}")

# Blocking sets: everything above j's lower cover but not above j.
print("\nblocking sets in the diamond:")
m3 = zoo.m3()
for ji in join_irreducibles(m3):
    kd = kappa_data(m3, ji.j)
    print(f"  j={ji.j}: members={sorted(kd.members)} "
          f"maximal={sorted(kd.maximals)} unique_max={kd.kappa}")
print("every maximal blocking element is meet irreducible:",
      set(meet_irreducibles(m3)) >=
      {m for j in join_irreducible_ids(m3)
       for m in kappa_data(m3, j).maximals})

"""Walk through the pipeline on the cone over a unit square.

The contact manifold here is S^2 x S^3, so the answer is known in advance.
"""

from toric_contact import analyze_cone, contact_cohomology, corpus, odd_module_action

cone = corpus.load_bundled("square")
print("normals:", cone.normals)

# Normalization: the normals already sum to (0, 0, 2), so D is the identity.
a = analyze_cone(cone)
norm = a.normalization
print("u =", norm.u, " k =", norm.k)
print("D =", norm.D)

# The slice at height one is the unit square.
print("slice vertices:", [tuple(str(x) for x in v) for v in a.polytope.vertices])
print("minimal non-faces:", [sorted(i + 1 for i in S) for S in a.nerve.minimal_nonfaces])

# Goodness looks at every proper face of the slice.
print("good:", a.is_good, "after", a.goodness.faces_checked, "faces")

r = contact_cohomology(cone)
print("betti:", r.betti)
for deg, rows in r.odd_generators.items():
    for row in rows:
        print(f"H^{deg} generator:", r.polynomial((deg - 1) // 2, row))

# Multiply the H^3 generator by the class of x3 in H^2.
print("x3 . (x3 - x4) =", odd_module_action(r, 1, [1, 0], 3, [1]), "times the H^5 generator")

for check in r.checks:
    print(f"  {check.status:>14}  {check.name}")

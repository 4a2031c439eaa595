"""Two cones the pipeline refuses, and why."""

from toric_contact import NotGoodError, NotSmoothError, contact_cohomology, corpus

# A triangle whose third normal makes the edge {1,3} meet the lattice badly.
try:
    contact_cohomology(corpus.load_bundled("lens"))
except NotGoodError as exc:
    print("lens:", exc)

# A good cone whose pentagonal slice has two vertices of determinant 2.
try:
    contact_cohomology(corpus.load_bundled("nondelzant"))
except NotSmoothError as exc:
    print("nondelzant:", exc)

# Over Q the smoothness requirement is dropped.
r = contact_cohomology(corpus.load_bundled("nondelzant"), rational=True)
print("nondelzant over Q, betti:", r.betti)

"""Betti numbers do not notice an integral change of basis."""

import random

from toric_contact import contact_cohomology, corpus

rng = random.Random(0)
for name in ("square", "cube", "hexagon", "prism"):
    cone = corpus.load_bundled(name)
    base = contact_cohomology(cone)
    for _ in range(3):
        D = corpus.random_unimodular(cone.n, rng)
        twisted = cone.transformed(D)
        r = contact_cohomology(twisted)
        same = (r.betti, r.torsion) == (base.betti, base.torsion)
        print(f"{name:8} {str(twisted.normals[:2]):40} betti {r.betti} {'ok' if same else 'MISMATCH'}")

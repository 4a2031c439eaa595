"""The cube cone gives Z/2 torsion in H^4.

Multiplication by the Euler class from degree one to degree two has Smith
form (1, 1, 2); its cokernel is exactly the torsion.
"""

from toric_contact import contact_cohomology, corpus, even_ring_structure
from toric_contact.lattice import smith_normal_form

r = contact_cohomology(corpus.load_bundled("cube"))
step = r.rho.maps[1]
print("Euler map, degree 1 -> 2:")
for row in step.matrix:
    print("   ", row)
print("divisors:", smith_normal_form(step.matrix).divisors)
print("betti:", r.betti)
print("torsion by degree:", r.torsion)

es = even_ring_structure(r)
for d, orders in sorted(es.orders.items()):
    names = ", ".join(f"{p} (order {o or 'inf'})" for p, o in zip(es.representatives[d], orders))
    print(f"H^{2 * d}: {names or '0'}")

# Rationally the torsion disappears and the even vanishing window holds.
rational = contact_cohomology(corpus.load_bundled("cube"), rational=True)
print("rational betti:", rational.betti)

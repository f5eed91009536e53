"""
Generalized covering radius by brute force
==========================================

R_t is the covering radius of the same generator matrix read over GF(q^t),
found by a breadth-first sweep over syndromes.
"""

from chaincover import bound_mu, chained_rm, exact_generalized_radius
from chaincover.codes import hamming74

ham = hamming74()
print("Hamming [7,4]:", [exact_generalized_radius(ham.gamma, t) for t in (1, 2, 3)])

ch = chained_rm(2, 1, 3)
for t in range(1, 5):
    print(f"RM(1,3) t={t}: R_t={exact_generalized_radius(ch.gamma, t)} mu_t={bound_mu(ch, t)}")

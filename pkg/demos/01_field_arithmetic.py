"""
Finite field arithmetic
=======================

Elements are integer codes; the base-p digits are the polynomial
coefficients.  GF(4) is built over x^2 + x + 1, so the code 2 is x.
"""

import numpy as np

from chaincover import FieldElement, field_for_order, make_field

spec = field_for_order(4)
F = spec.base
print(F, "modulus", spec.base_modulus)

# addition is XOR in characteristic 2
a = np.arange(4)
print("add table\n", F.add(a[:, None], a[None, :]))
print("mul table\n", F.mul(a[:, None], a[None, :]))

# scalar wrapper
x = FieldElement(F, 2)
print("x * x =", int(x * x), " x^-1 =", int(x.inv()))

# GF(2) read as GF(2^3): a word of three bits becomes one symbol
spec8 = make_field(2, 1, 3)
print("GF(8) modulus", spec8.ext_modulus, "primitive element", spec8.gamma)

"""
A chained generator matrix for Reed-Muller codes
================================================

Each row ends in n - d_i zeros, so the prefixes of rows reach every
generalized Hamming weight at once.
"""

from chaincover import chained_rm, ghw_binary, io, rho

ch = chained_rm(2, 1, 3)
print(io.format_chained(ch), end="")

# the row prefixes match the weight hierarchy of RM(1,3)
print([ghw_binary(t, 1, 3) for t in range(1, rho(1, 3) + 1)])

# a ternary one
ch3 = chained_rm(3, 1, 2)
print(io.format_chained(ch3), end="")

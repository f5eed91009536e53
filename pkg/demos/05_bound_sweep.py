"""
Bound tables
============

mu_t next to exact R_t on codes small enough to enumerate, then the bound
alone on larger ones, as CSV.
"""

import sys

from chaincover.experiment import EXACT_COLUMNS, MU_COLUMNS, sweep_exact, sweep_mu, write_csv

rows = sweep_exact([(2, 1, 3), (2, 2, 4), (3, 1, 2)], 3, skip_over_budget=True)
write_csv(rows, EXACT_COLUMNS, sys.stdout)

grid = [(2, r, m) for m in range(4, 9) for r in range(1, 3)]
write_csv(sweep_mu(grid, 3), MU_COLUMNS, sys.stdout)

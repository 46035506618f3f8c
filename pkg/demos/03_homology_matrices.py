# The 2x2 action of the three partial conjugations on the (-1)-eigenspace
# of the double cover, first from the closed form, then rebuilt from chains.
from itertools import product

import numpy as np

from raagout.representations import (
    FAMILIES, HomologyRepInput, homology_dimensions, homology_matrix_closed_form,
    homology_matrix_oracle, normalize_sign, ping_pong_free_check)

for fam in FAMILIES:
    inp = HomologyRepInput(1, 1, 1, fam)
    print(fam, homology_matrix_closed_form(inp).tolist(), homology_matrix_oracle(inp).tolist())

p = homology_matrix_oracle(HomologyRepInput(1, 1, 1, ("C_X^y", "C_Y^z")))
q = homology_matrix_oracle(HomologyRepInput(1, 1, 1, ("C_Y^z", "C_Z^x")))
print("products", p.tolist(), q.tolist())
print("free pair:", ping_pong_free_check(p, q))

agree = 0
for (a, b, c), fam in product(product((1, 2, 3), repeat=3), FAMILIES):
    inp = HomologyRepInput(a, b, c, fam)
    agree += np.array_equal(normalize_sign(homology_matrix_oracle(inp)),
                            normalize_sign(homology_matrix_closed_form(inp)))
print(f"oracle agrees with closed form in {agree} of 81 cases")
print("dimensions for (2, 3, 1):", homology_dimensions(2, 3, 1))

import numpy as np

from raagout.automorphisms import compose, make_generator, out0_generators, format_generator
from raagout.graph_core import path_graph
from raagout.representations import block_mask, check_block_structure, standard_matrix

g = path_graph(4)  # a - b - c - d
gens = out0_generators(g)
print("Out0 generators of P4:", " ".join(format_generator(k, g) for k in gens))

# transvections leave a lower block pattern, partial conjugations vanish
for k in gens[:4] + gens[-2:]:
    m = standard_matrix(g, make_generator(g, k))
    print(format_generator(k, g))
    print(m)

print("allowed entries (row u, column v with v <= u):")
print(block_mask(g).astype(int))

f = compose(*(make_generator(g, k) for k in gens))
m = standard_matrix(g, f)
print("product of every generator:\n", m, "\nblock structure ok:", check_block_structure(g, m))
assert np.array_equal(m, np.linalg.multi_dot([standard_matrix(g, make_generator(g, k)) for k in gens]))

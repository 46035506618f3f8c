# On the path e - a - b - c - d take y = d below x = b and Y the whole
# complement of st(d). Conjugating Y by d is inner, so the commutator with
# the transvection d -> d b is inner too. Conjugating the same Y by b moves
# only e, and that is not inner: the literal right side is a different class.
from raagout.automorphisms import (
    PartialConjugation, TransvectionRight, commutator, inner_conjugator, make_generator,
    support_conjugation_inner_test)
from raagout.graph_core import Graph
from raagout.verify import relations

g = Graph(["a", "b", "c", "d", "e"], [("e", "a"), ("a", "b"), ("b", "c"), ("c", "d")])
r = make_generator(g, TransvectionRight("d", "b"))
c = make_generator(g, PartialConjugation("d", frozenset("abe")))
lhs = commutator(r, c)
print("C^d_{a,b,e} inner by", inner_conjugator(c))
print("commutator inner by", inner_conjugator(lhs))
rhs = make_generator(g, PartialConjugation("b", frozenset("e")))
print("C^b_{e} inner?", support_conjugation_inner_test(g, rhs))

res = relations([g])
print(res.summary())

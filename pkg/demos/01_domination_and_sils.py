"""Domination classes and SILs on a handful of small graphs."""
from raagout import equivalence_classes, parse_graph
from raagout.graph_core import path_graph, discrete_graph
from raagout.sil import all_sils, find_special_sil, is_special_sil

graphs = {
    "P4": path_graph(4),
    "D3": discrete_graph(3),
    "star": parse_graph("vertices c x y z\nedges c-x c-y c-z"),
    "three pairs": parse_graph("vertices a b c d e f\nedges a-d b-c e-f"),
}

for name, g in graphs.items():
    order = equivalence_classes(g)
    print(f"--- {name}")
    for cls in order.classes:
        print("  class", cls.members.as_tuple(), cls.kind)
    print("  enumeration", order.enumeration)
    sils = all_sils(g)
    print("  SILs", [str(s) for s in sils] or "none")
    for s in sils:
        print("   ", s, "component", s.component_z.as_tuple(),
              "special" if is_special_sil(g, s) else "not special")

# every class of the last graph is abelian, so a special SIL must exist
special = find_special_sil(graphs["three pairs"])
print("special SIL picked by the minimal search:", special.sil,
      "with Gamma_S =", special.gamma_s.as_tuple())

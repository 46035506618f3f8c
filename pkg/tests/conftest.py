import pytest

from raagout.graph_core import Graph, complete_graph, discrete_graph, parse_graph, path_graph

P3 = path_graph(3)
P4 = path_graph(4)
D2 = discrete_graph(2, ["x", "y"])
D3 = discrete_graph(3)
K2 = complete_graph(2, ["u", "v"])
K3 = complete_graph(3)
STAR = Graph(["c", "x", "y", "z"], [("c", "x"), ("c", "y"), ("c", "z")])
# lk(x) = lk(y) = {u, v}; u-v an edge
D2_JOIN_K2 = Graph(["x", "y", "u", "v"], [("x", "u"), ("x", "v"), ("y", "u"), ("y", "v"), ("u", "v")])
# every class abelian-or-singleton, SIL (a,b|e), classes of size two
ALL_ABELIAN_SIL = parse_graph("vertices a b c d e f\nedges a-d b-c e-f")


@pytest.fixture
def write_graph(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text, encoding="utf-8")
        return str(p)
    return _write

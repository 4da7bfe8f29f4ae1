"""Search label conventions that reproduce the cluster-quiver figure adjacency.

Prints, for each partition and convention, a vertex map from figure number to label.
"""
import itertools, sys
import networkx as nx
from networkx.algorithms import isomorphism

PARTS = {
    "4": dict(dims={1: 1, 2: 2, 3: 3}, edges=[(2, 1), (3, 2)], flavors=[(3, 4)], marked=3),
    "31": dict(dims={1: 1, 2: 2, 3: 2}, edges=[(2, 1), (3, 2)], flavors=[(2, 1), (3, 2)], marked=3),
    "22": dict(dims={1: 1, 2: 2, 3: 1}, edges=[(2, 1), (3, 2)], flavors=[(2, 2)], marked=3),
    "211": dict(dims={1: 1, 2: 1, 3: 1}, edges=[(2, 1), (3, 2)], flavors=[(1, 1), (3, 1)], marked=3),
}

FIG = {
    "4": dict(n=16, frozen={1, 2, 6, 12}, base=1, arrows=[
        (3, 2), (3, 4), (4, 5), (4, 5), (5, 3), (5, 6), (6, 3), (7, 4), (5, 7), (1, 2), (7, 8), (9, 7),
        (8, 9), (8, 9), (9, 10), (11, 8), (10, 11), (10, 11), (9, 12), (13, 10), (11, 13), (14, 10),
        (11, 14), (15, 10), (11, 15), (16, 10), (11, 16), (12, 7)]),
    "31": dict(n=13, frozen={1, 2, 6, 11}, base=1, arrows=[
        (3, 2), (3, 4), (4, 5), (4, 5), (5, 3), (5, 6), (6, 3), (7, 4), (5, 7), (8, 4), (5, 8), (1, 2),
        (10, 8), (8, 9), (9, 10), (9, 10), (10, 11), (12, 9), (10, 12), (11, 8), (13, 9), (10, 13)]),
    "22": dict(n=10, frozen={1, 2, 6, 10}, base=1, arrows=[
        (3, 2), (3, 4), (4, 5), (4, 5), (5, 3), (5, 6), (7, 4), (5, 7), (6, 3), (8, 4), (5, 8), (9, 4),
        (5, 9), (10, 9), (1, 2)]),
    "211": dict(n=8, frozen={1, 2, 5, 7}, base=1, arrows=[
        (3, 2), (4, 2), (5, 4), (6, 5), (7, 6), (1, 2), (8, 7)]),
}


def vec(d):
    return {k: v for k, v in d.items() if v}


def add(*ts):
    out = {}
    for c, t in ts:
        for k, v in t.items():
            out[k] = out.get(k, 0) + c * v
    return vec(out)


def bracket(a, b):
    s = 0
    for k, v in a.items():
        if k[0] == "p":
            s += v * b.get(("x",) + k[1:], 0)
        elif k[0] == "x":
            s -= v * b.get(("p",) + k[1:], 0)
    return s


def X(i, r):
    return {("x", i, r): 1}


def P(i, r):
    return {("p", i, r): 1}


def Z(k, s):
    return {("z", k, s): 1}


def labels(part, arrow_conv, flavor_conv, marked, base_idx):
    g = PARTS[part]
    dims = g["dims"]
    out = []
    for i in sorted(dims):
        d = dims[i]
        out.append((f"y0[{i}]", True, add((1, X(i, 1)), *[(-1, P(i, r)) for r in range(1, d + 1)])))
        for j in range(1, d):
            out.append((f"y{2*j}[{i}]", False, add((1, X(i, j + 1)), (-1, X(i, j)))))
            out.append((f"y{2*j-1}[{i}]", False, add((1, P(i, j)), (-1, P(i, j + 1)), (1, X(i, j)), (-1, X(i, j + 1)))))
    dm = dims[marked]
    out.append(("base", True, P(marked, dm if base_idx == "d" else 1)))
    for (i, j) in g["edges"]:
        lab = arrow_conv(i, j, dims)
        out.append((f"arrow{i}{j}", False, lab))
    for (i, dk) in g["flavors"]:
        for s in range(1, dk + 1):
            out.append((f"z{i}.{s}", False, flavor_conv(i, dims[i], (i, s))))
    return out


ARROWS = {
    "text": lambda i, j, d: add((1, P(j, d[j])), (-1, P(i, 1))),
    "neg": lambda i, j, d: add((-1, P(j, d[j])), (1, P(i, 1))),
    "alt": lambda i, j, d: add((1, P(j, 1)), (-1, P(i, d[i]))),
    "altneg": lambda i, j, d: add((-1, P(j, 1)), (1, P(i, d[i]))),
}
FLAVORS = {
    "text": lambda i, d, z: add((1, P(i, d)), (-1, Z(*z))),
    "fig": lambda i, d, z: add((1, Z(*z)), (-1, P(i, 1))),
    "p1-z": lambda i, d, z: add((1, P(i, 1)), (-1, Z(*z))),
    "z-pd": lambda i, d, z: add((1, Z(*z)), (-1, P(i, d))),
}


def graph_from_fig(f, reverse):
    G = nx.DiGraph()
    for v in range(1, f["n"] + 1):
        G.add_node(v, fz=("B" if v == f["base"] else ("F" if v in f["frozen"] else "M")))
    for (a, b) in f["arrows"]:
        if reverse:
            a, b = b, a
        w = G.get_edge_data(a, b, {}).get("w", 0)
        G.add_edge(a, b, w=w + 1)
    return G


def graph_from_labels(labs):
    G = nx.DiGraph()
    for idx, (name, fz, _) in enumerate(labs):
        G.add_node(idx, fz=("B" if name == "base" else ("F" if fz else "M")), name=name)
    for a in range(len(labs)):
        for b in range(len(labs)):
            e = bracket(labs[a][2], labs[b][2])
            if e > 0:
                G.add_edge(a, b, w=e)
    return G


def fmt(l):
    return " + ".join(f"{v}*{k[0]}{k[1:]}" for k, v in sorted(l.items()))


for part in PARTS:
    print("=== partition", part)
    for (an, af), (fn, ff), rev, marked, bidx in itertools.product(
            ARROWS.items(), FLAVORS.items(), [False, True], sorted(PARTS[part]["dims"]), ["d", "1"]):
        labs = labels(part, af, ff, marked, bidx)
        if len(labs) != FIG[part]["n"]:
            print("count mismatch", len(labs))
            break
        GF = graph_from_fig(FIG[part], rev)
        GL = graph_from_labels(labs)
        gm = isomorphism.DiGraphMatcher(GF, GL, node_match=lambda a, b: a["fz"] == b["fz"],
                                        edge_match=lambda a, b: a["w"] == b["w"])
        maps = list(itertools.islice(gm.isomorphisms_iter(), 4))
        if maps:
            print(f"arrow={an} flavor={fn} reversed={rev} marked={marked} base_idx={bidx}: {len(maps)} iso(s)")
            if "-v" in sys.argv:
                for m in maps[:1]:
                    for v in sorted(m):
                        print(f"   {v:2d} -> {labs[m[v]][0]:10s} {fmt(labs[m[v]][2])}")

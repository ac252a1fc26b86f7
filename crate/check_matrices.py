#!/usr/bin/env python3
"""Independent derivation of the homology matrices of GP(8,3) automorphisms.

Vertices 1..16 (outer 1..8, inner 9..16). Tree: spokes {i,8+i} and inner
edges except {11,16}. Cotree arcs: x=(16,11), x_i=(i, 1+(i mod 8)).
Row j of the output = signed cotree-arc counts of the image of fundamental
cycle j (i.e. the transposed matrix of the induced homology action).
"""
import numpy as np

n = 8
outer = [(i, 1 + (i % 8)) for i in range(1, 9)]
inner = [(8 + i, 8 + ((i + 3 - 1) % 8) + 1) for i in range(1, 9)]
spokes = [(i, 8 + i) for i in range(1, 9)]
edges = set()
for u, v in outer + inner + spokes:
    edges.add((min(u, v), max(u, v)))

tree = set()
for u, v in spokes:
    tree.add((min(u, v), max(u, v)))
for u, v in inner:
    e = (min(u, v), max(u, v))
    if e != (11, 16):
        tree.add(e)
assert len(tree) == 15

tree_adj = {v: [] for v in range(1, 17)}
for u, v in tree:
    tree_adj[u].append(v)
    tree_adj[v].append(u)

cotree = [(16, 11)] + [(i, 1 + (i % 8)) for i in range(1, 9)]

def tree_path(a, b):
    # DFS path a -> b in tree
    stack = [(a, [a])]
    seen = {a}
    while stack:
        v, path = stack.pop()
        if v == b:
            return path
        for w in tree_adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append((w, path + [w]))
    raise RuntimeError

def fundamental_cycle(j):
    u, v = cotree[j]
    path = tree_path(v, u)
    return [(u, v)] + list(zip(path, path[1:]))

def coords(walk):
    c = np.zeros(9, dtype=int)
    for (u, v) in walk:
        for j, (a, b) in enumerate(cotree):
            if (u, v) == (a, b):
                c[j] += 1
            elif (u, v) == (b, a):
                c[j] -= 1
    return c

def perm_from_cycles(cycles):
    img = {v: v for v in range(1, 17)}
    for cyc in cycles:
        for k in range(len(cyc)):
            img[cyc[k]] = cyc[(k + 1) % len(cyc)]
    return img

def homology_matrix(perm):
    rows = []
    for j in range(9):
        walk = [(perm[u], perm[v]) for (u, v) in fundamental_cycle(j)]
        rows.append(coords(walk))
    return np.array(rows)

perms = {
    "R": perm_from_cycles([[1,2,3,4,5,6,7,8],[9,10,11,12,13,14,15,16]]),
    "S": perm_from_cycles([[1,14,7,12,5,10,3,16],[2,11,8,9,6,15,4,13]]),
    "P": perm_from_cycles([[1,14,5,10],[2,9,6,13],[3,12,7,16],[4,15,8,11]]),
    "T": perm_from_cycles([[1,9],[2,14],[3,11],[4,16],[5,13],[6,10],[7,15],[8,12]]),
    "E": perm_from_cycles([[1,9],[2,12],[3,15],[4,10],[5,13],[6,16],[7,11],[8,14]]),
    "O": perm_from_cycles([[2,8,9],[3,16,14],[4,13,6],[7,12,10]]),
}

# automorphism check
for name, p in perms.items():
    for (u, v) in edges:
        a, b = p[u], p[v]
        assert (min(a, b), max(a, b)) in edges, (name, u, v)

for name, p in perms.items():
    print(name)
    print(homology_matrix(p))
    print()

"""Oracle for the glued quivers Q_{m,n} and the array sequence mu_{m,n}.

Independent of the C++ code: builds labels as dicts, mutates bases tropically,
compares with build of Q_{n,m} under the shift renumbering z -> z + 2(n - m).
"""
import sys
from itertools import product


def bracket(a, b):
    s = 0
    for k, v in a.items():
        if k[0] in "pq":
            s += v * b.get(({"p": "x", "q": "y"}[k[0]], k[1]), 0)
        elif k[0] in "xy":
            s -= v * b.get(({"x": "p", "y": "q"}[k[0]], k[1]), 0)
    return s


def lin(*terms):
    out = {}
    for c, s, i in terms:
        out[(s, i)] = out.get((s, i), 0) + c
    return {k: v for k, v in out.items() if v}


def glued(m, n, ysym=("y", "q"), xsym=("x", "p")):
    x, p = xsym
    y, q = ysym
    lab = {0: lin((1, q, n), (-1, p, 1))}
    for j in range(1, m):
        lab[2 * j] = lin((1, x, j + 1), (-1, x, j))
        lab[2 * j - 1] = lin((1, p, j), (-1, p, j + 1), (1, x, j), (-1, x, j + 1))
    for j in range(1, n):
        a = n - j
        lab[-2 * j] = lin((1, y, a + 1), (-1, y, a))
        lab[-2 * j + 1] = lin((1, q, a), (-1, q, a + 1), (1, y, a), (-1, y, a + 1))
    return lab


def array_seq(m, n):
    cols = {}
    for i in range(2 * m - 1):
        for j in range(2 * n - 1):
            cols.setdefault(i + j, []).append((i - j, j % 2 == 0))
    seq = []
    for x in sorted(cols):
        ent = cols[x]
        circ = sorted([y for y, c in ent if c], reverse=True)
        unc = sorted([y for y, c in ent if not c])
        seq += circ + unc
    return seq


def add(a, b, c=1):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + c * v
    return {k: v for k, v in out.items() if v}


def mutate(lab, k):
    new = {}
    for i, li in lab.items():
        if i == k:
            new[i] = {kk: -vv for kk, vv in li.items()}
        else:
            e = bracket(li, lab[k])
            new[i] = add(li, lab[k], e) if e > 0 else dict(li)
    return new


def eps(lab):
    return {(i, j): bracket(lab[i], lab[j]) for i in lab for j in lab}


printed = [2, 3, 1, 2, 0, 4, 5, 1, -1, 3, 4, 0, -2, 2, 6, 3, -1, -3, 1, 5, 2, -2, -4, 0, 4, 1, -3, -1, 3, 0, -2, 2, -1, 1, 0]
print("(4,3) application order == reversed printed:", array_seq(4, 3) == printed[::-1], len(printed))



def renumber(m, n, z):
    """Position in Q_{n,m} of vertex z of Q_{m,n} after the array sequence."""
    t = z + 2 * (n - m)
    if t == 0:
        return 0
    if t > 0:
        return t + 1 if t % 2 else t - 1
    return t - 1 if t % 2 else t + 1


ok_all = True
for m, n in product(range(1, 6), repeat=2):
    lab = glued(m, n)
    for k in array_seq(m, n):
        lab = mutate(lab, k)
    target = glued(n, m, ysym=("x", "p"), xsym=("y", "q"))
    E, T = eps(lab), eps(target)
    quiver_ok = all(E[(a, b)] == T[(renumber(m, n, a), renumber(m, n, b))] for a in lab for b in lab)
    labels_ok = all(lab[z] == target[renumber(m, n, z)] for z in lab)
    shift = 2 * (n - m)
    figure_shift_ok = all(E[(a, b)] == T[(a + shift, b + shift)] for a in lab for b in lab)
    ok_all &= quiver_ok and labels_ok
    print(f"m={m} n={n} quiver={quiver_ok} labels={labels_ok} plain_shift={figure_shift_ok}")
print("ALL", ok_all)

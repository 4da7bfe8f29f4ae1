"""Fomin-Zelevinsky matrix mutation oracle for the Coxeter and glued quivers."""
import numpy as np


def fz(B, k):
    B = B.copy()
    n = len(B)
    C = B.copy()
    for i in range(n):
        for j in range(n):
            if i == k or j == k:
                C[i, j] = -B[i, j]
            else:
                C[i, j] = B[i, j] + (abs(B[i, k]) * B[k, j] + B[i, k] * abs(B[k, j])) // 2
    return C


def coxeter(n):
    B = np.zeros((2 * n, 2 * n), dtype=int)
    def arr(i, j, m=1):
        B[i, j] += m; B[j, i] -= m
    for k in range(1, n):
        arr(2 * k, 2 * k - 1, 2)
    for k in range(1, n + 1):
        arr(2 * k - 1, 2 * k - 2)
    for k in range(1, n - 1):
        arr(2 * k - 1, 2 * k + 2)
    arr(0, 2)
    arr(2 * n - 3, 2 * n - 1)
    return B


B = coxeter(4)
for k in range(7):
    B = fz(B, k)
arrows = sorted((i, j, B[i, j]) for i in range(8) for j in range(8) if B[i, j] > 0)
print("Q'_4 arrows", arrows)
fig = {(4, 6): 1, (5, 6): 1, (4, 7): 1, (5, 7): 1, (2, 1): 1, (0, 3): 1, (4, 3): 1, (2, 5): 1, (1, 0): 2, (3, 2): 2, (5, 4): 2}
print("matches figure:", {(i, j): int(v) for i, j, v in arrows} == fig)


def label_coxeter(n):
    # symbols: x1..xn, p1..pn, u, v ; bracket(p_j, x_j) = 1
    dim = 2 * n + 2
    def x(j):
        e = np.zeros(dim, dtype=int); e[j - 1] = 1; return e
    def p(j):
        e = np.zeros(dim, dtype=int); e[n + j - 1] = 1; return e
    u = np.zeros(dim, dtype=int); u[2 * n] = 1
    v = np.zeros(dim, dtype=int); v[2 * n + 1] = 1
    P = np.zeros((dim, dim), dtype=int)
    for j in range(n):
        P[n + j, j] = 1; P[j, n + j] = -1
    labs = [None] * (2 * n)
    labs[0] = -p(1) - u
    for j in range(1, n):
        labs[2 * j] = x(j + 1) - x(j)
        labs[2 * j - 1] = p(j) - p(j + 1) + x(j) - x(j + 1)
    labs[2 * n - 1] = p(n) + v
    L = np.array(labs)
    return L @ P @ L.T


print("label-derived Q_4 equals definition:", (label_coxeter(4) == coxeter(4)).all())

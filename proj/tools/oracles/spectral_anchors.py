"""Minimum spectral gaps of H(s) = (1-s) H_I + s H_P from an independent
numpy/scipy construction (Kronecker products, dense eigh).

Prints one initializer per equation: {name, min_gap, s_at_min, degeneracy}.
The s = 1 grid point is skipped when the H_P ground level is degenerate.
"""
import itertools

import numpy as np
from scipy.linalg import eigh


def basis(k, n_max):
    return list(itertools.product(range(n_max + 1), repeat=k))


def annihilation(n_max):
    a = np.zeros((n_max + 1, n_max + 1))
    for n in range(1, n_max + 1):
        a[n - 1, n] = np.sqrt(n)
    return a


def initial_hamiltonian(k, n_max, alpha):
    a = annihilation(n_max)
    eye = np.eye(n_max + 1)
    d = (n_max + 1) ** k
    h = np.zeros((d, d), complex)
    b = a - alpha * eye
    mode_op = b.conj().T @ b
    for m in range(k):
        mats = [eye] * k
        mats[m] = mode_op
        op = mats[0]
        for x in mats[1:]:
            op = np.kron(op, x)
        h += op
    return h


def problem_levels(f, k, n_max):
    return np.array([f(*n) ** 2 for n in basis(k, n_max)], float)


def profile(k, n_max, alpha, f, grid=101):
    h0 = initial_hamiltonian(k, n_max, alpha)
    hp = problem_levels(f, k, n_max)
    deg = int((hp == hp.min()).sum())
    best = (np.inf, None)
    for i in range(grid):
        s = i / (grid - 1)
        if deg > 1 and i == grid - 1:
            continue
        e = eigh((1 - s) * h0 + s * np.diag(hp), eigvals_only=True)
        if e[1] - e[0] < best[0]:
            best = (e[1] - e[0], s)
    return best, deg


SUITE = [
    ("x-1", 1, lambda x: x - 1),
    ("2*x-3", 1, lambda x: 2 * x - 3),
    ("x^2-4", 1, lambda x: x * x - 4),
    ("x^2+1", 1, lambda x: x * x + 1),
    ("x+1", 1, lambda x: x + 1),
    ("x-20", 1, lambda x: x - 20),
    ("x^2-2", 1, lambda x: x * x - 2),
    ("x-3", 1, lambda x: x - 3),
    ("x+y-5", 2, lambda x, y: x + y - 5),
    ("2*x+y-3", 2, lambda x, y: 2 * x + y - 3),
    ("x-y-2", 2, lambda x, y: x - y - 2),
    ("x^2+y^2+1", 2, lambda x, y: x * x + y * y + 1),
    ("2*x+2*y-3", 2, lambda x, y: 2 * x + 2 * y - 3),
    ("x*y-6", 2, lambda x, y: x * y - 6),
]

if __name__ == "__main__":
    for name, k, f in SUITE:
        (g, s), deg = profile(k, 8, 1 / np.sqrt(2), f)
        print('{"%s", %.10e, %.2f, %d},' % (name, g, s, deg))
    (g, s), _ = profile(1, 8, 0.5, lambda x: x - 1)
    print("x-1 alpha=0.5: %.10e at s=%.2f" % (g, s))

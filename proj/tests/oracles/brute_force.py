"""Independent brute-force oracle for values frozen into the C++ tests.

Works straight from definitions with Fractions and explicit ambient vectors;
shares nothing with the C++ implementation.

    python3 tests/oracles/brute_force.py
"""
from fractions import Fraction as F
from itertools import product, combinations
import math


def eps(n, i):
    return [F(n - 1, n) if j == i else F(-1, n) for j in range(n)]


def alpha(n, i):
    v = [F(0)] * n
    v[i], v[i + 1] = F(1), F(-1)
    return v


def dot(x, y):
    return sum(a * b for a, b in zip(x, y))


def add(x, y, s=1):
    return [a + s * b for a, b in zip(x, y)]


def scale(c, x):
    return [c * a for a in x]


def dual_an_vectors(n, max_norm):
    """Nonzero vectors of A*_{n-1} with norm <= max_norm.

    Every such vector is z - (j/n)1 with z integral and sum z = j (0 <= j < n).
    Coordinates are enumerated with the remaining norm budget as bound.
    """
    out = []
    for j in range(n):
        shift = F(j, n)
        fshift = j / n

        def rec(prefix, partial, total):
            if len(prefix) == n:
                if total == j and partial > 0:
                    out.append((partial, tuple(F(a) - shift for a in prefix)))
                return
            room = math.sqrt(float(max_norm - partial)) + 1e-9
            for a in range(math.ceil(fshift - room), math.floor(fshift + room) + 1):
                d = F(a) - shift
                nxt = partial + d * d
                if nxt <= max_norm:
                    rec(prefix + [a], nxt, total + a)

        rec([], F(0), 0)
    return out


def dual_an_layers(n):
    return sorted({nv for nv, _ in dual_an_vectors(n, F(2))})[:2]


def rho(p):
    return [F(p - 1 - 2 * i, 2) for i in range(p)]


def coset_min(p, l):
    """min |t + x|^2 over x in A*_{p-1}, t = (l/p) rho.

    A* is the union over j of {z - (j/p)1 : z integral, sum z = j}. For each j
    the nearest such z to (j/p)1 - t is found by rounding and then repairing the
    coordinate sum along the largest rounding errors.
    """
    t = scale(F(l, p), rho(p))
    best = None
    for j in range(p):
        w = [F(j, p) - a for a in t]
        z = [math.floor(a + F(1, 2)) for a in w]
        excess = sum(z) - j
        order = sorted(range(p), key=lambda i: z[i] - w[i], reverse=excess > 0)
        for i in order[:abs(excess)]:
            z[i] += -1 if excess > 0 else 1
        v = [a + b - F(j, p) for a, b in zip(t, z)]
        nv = dot(v, v)
        best = nv if best is None else min(best, nv)
    return best


def lam(p, j):
    """lambda_j = j eps_1 - sum_{i<j} (j-i) alpha_i."""
    v = scale(F(j), eps(p, 0))
    for i in range(1, j):
        v = add(v, alpha(p, i - 1), -(j - i))
    return v


def codewords(gens, p, k):
    out = set()
    for coeffs in product(range(p), repeat=len(gens)):
        out.add(tuple(sum(c * g[j] for c, g in zip(coeffs, gens)) % p for j in range(k)))
    return sorted(out)


def block_norm_counts(p):
    """{class: {norm: count}} for vectors of A*_{p-1} with norm <= 2; class of v is v - c eps_1 in A."""
    res = {0: {F(0): 1}}
    for nv, v in dual_an_vectors(p, F(2)):
        cls = int(-v[0] * p) % p
        res.setdefault(cls, {}).setdefault(nv, 0)
        res[cls][nv] += 1
    return res


def roots_construction_a(gens, p, k):
    """Number of norm-2 vectors of pi^{-1}(C) by counting block tuples per codeword."""
    table = block_norm_counts(p)
    total = 0
    for c in codewords(gens, p, k):
        counts = {F(0): 1}
        for cls in c:
            nxt = {}
            for acc, m in counts.items():
                for nv, cnt in table.get(cls, {}).items():
                    if acc + nv <= 2:
                        nxt[acc + nv] = nxt.get(acc + nv, 0) + m * cnt
            counts = nxt
        total += counts.get(F(2), 0)
    return total


def e8_roots():
    roots = []
    for i, j in combinations(range(8), 2):
        for si in (1, -1):
            for sj in (1, -1):
                v = [F(0)] * 8
                v[i], v[j] = F(si), F(sj)
                roots.append(tuple(v))
    for signs in product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            roots.append(tuple(F(s, 2) for s in signs))
    return roots


def e8_chain_count():
    roots = e8_roots()
    assert len(roots) == 240
    x1 = (F(1), F(1)) + (F(0),) * 6
    cnt = 0
    for x2 in (r for r in roots if dot(r, x1) == -1):
        for x3 in roots:
            if dot(x2, x3) != -1 or dot(x1, x3) != 0:
                continue
            for x4 in roots:
                if dot(x3, x4) == -1 and dot(x1, x4) == 0 and dot(x2, x4) == 0:
                    cnt += 1
    return cnt


def main():
    print("dual A_{n-1} first two layers:")
    for n in range(2, 13):
        print(" ", n, [str(x) for x in dual_an_layers(n)], flush=True)
    print("coset minima N_1((l/p) rho + A*_{p-1}):")
    for p in (3, 5, 7, 11):
        print(" ", p, [str(coset_min(p, l)) for l in range(1, p)], flush=True)
    print("lambda_j norms p=5:", [str(dot(lam(5, j), lam(5, j))) for j in range(5)])
    print("lambda_j norms p=7:", [str(dot(lam(7, j), lam(7, j))) for j in range(7)])
    print("block classes p=3:", block_norm_counts(3))
    print("block classes p=5:", block_norm_counts(5))
    print("roots L_A(<111>) p=3:", roots_construction_a([[1, 1, 1]], 3, 3))
    print("roots L_A(<123>) p=7:", roots_construction_a([[1, 2, 3]], 7, 3))
    print("roots L_A(<12>) p=5:", roots_construction_a([[1, 2]], 5, 2))
    print("roots L_A(<120>) p=5:", roots_construction_a([[1, 2, 0]], 5, 3))
    print("roots L_A(tetracode) p=3:", roots_construction_a([[1, 1, 1, 0], [0, 1, 2, 1]], 3, 4))
    print("coset (1,0)+<(1,2)> F5 weight-2 count:",
          sum(1 for a in range(5) if all(((1, 0)[j] + a * (1, 2)[j]) % 5 for j in range(2))))
    layers = {}
    for nv, v in dual_an_vectors(5, F(2)):
        layers.setdefault(nv, set()).add(v)
    print("A4* counts 4/5, 6/5:", len(layers[F(4, 5)]), len(layers[F(6, 5)]))
    print("E8 chain completions from (1,1,0..):", e8_chain_count(), flush=True)


if __name__ == "__main__":
    main()

"""Brute-force reference computations used to cross-check the package.

Everything here uses plain Python loops over Fractions and explicit
formulas; nothing calls into hopfkit's contraction or elimination code.
"""

import itertools
from fractions import Fraction


def naive_einsum(spec, *ops):
    """Loop-based einsum over nested lists / numpy arrays of exact scalars."""
    ins, out = spec.split("->")
    terms = ins.split(",")
    sizes = {}
    for term, op in zip(terms, ops):
        shape = _shape(op)
        for label, n in zip(term, shape):
            sizes[label] = n
    labels = sorted(sizes)
    res = {}
    for combo in itertools.product(*[range(sizes[l]) for l in labels]):
        env = dict(zip(labels, combo))
        val = 1
        for term, op in zip(terms, ops):
            val = val * _get(op, [env[c] for c in term])
            if val == 0:
                break
        key = tuple(env[c] for c in out)
        res[key] = res.get(key, 0) + val
    return _build([sizes[c] for c in out], res)


def _shape(op):
    shape = []
    while isinstance(op, list) or hasattr(op, "shape") and getattr(op, "ndim", 0) > 0:
        if hasattr(op, "shape"):
            return tuple(op.shape)
        shape.append(len(op))
        op = op[0]
    return tuple(shape)


def _get(op, idx):
    for i in idx:
        op = op[i]
    return op


def _build(shape, values, prefix=()):
    if not shape:
        return values.get(prefix, 0)
    return [_build(shape[1:], values, prefix + (i,)) for i in range(shape[0])]


def to_lists(arr):
    return arr.tolist() if hasattr(arr, "tolist") else arr


# ---------------------------------------------------------------------------
# matrices over Fractions

def matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
            for i in range(len(a))]


def rank_by_minors(mat):
    """Rank as the largest nonvanishing minor; exponential, tiny inputs only."""
    rows, cols = len(mat), len(mat[0]) if mat else 0
    for r in range(min(rows, cols), 0, -1):
        for ri in itertools.combinations(range(rows), r):
            for ci in itertools.combinations(range(cols), r):
                if det([[mat[i][j] for j in ci] for i in ri]) != 0:
                    return r
    return 0


def det(m):
    n = len(m)
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        term = Fraction(perm_sign(perm))
        for i in range(n):
            term *= m[i][perm[i]]
        total += term
    return total


def perm_sign(perm):
    sign = 1
    perm = list(perm)
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


# ---------------------------------------------------------------------------
# faithful representations: structure constants must match matrix products

def structure_matches_rep(mu, mats):
    """mats[i] represents basis element i; check rep(e_i) rep(e_j) = sum mu[k,i,j] rep(e_k)."""
    n = len(mats)
    for i in range(n):
        for j in range(n):
            lhs = matmul(mats[i], mats[j])
            rhs = [[sum(Fraction(mu[k][i][j]) * mats[k][r][c] for k in range(n))
                    for c in range(len(lhs[0]))] for r in range(len(lhs))]
            if lhs != rhs:
                return False
    return True


def sweedler_rep():
    """2x2 matrices for 1, x, g, gx with g = diag(1, -1) and x = E12."""
    one = [[1, 0], [0, 1]]
    g = [[1, 0], [0, -1]]
    x = [[0, 1], [0, 0]]
    return [one, x, g, matmul(g, x)]


def cyclic_rep(n):
    """Regular representation of Z_n: g^k is the k-step cyclic shift."""
    return [[[1 if (r - c) % n == k else 0 for c in range(n)] for r in range(n)]
            for k in range(n)]


def groupoid_rep(objects, m, arrows):
    """(i <- j : a) acts as E_ij (x) (shift by a) on k^objects (x) k[Z_m]."""
    mats = []
    size = objects * m
    for (i, j, a) in arrows:
        M = [[0] * size for _ in range(size)]
        for b in range(m):
            M[i * m + (a + b) % m][j * m + b] = 1
        mats.append(M)
    return mats


# ---------------------------------------------------------------------------
# closed formulas

def q_binomial(n, k, q, p):
    """Gaussian binomial [n choose k]_q mod p via the q-Pascal rule."""
    if k < 0 or k > n:
        return 0
    if k == 0 or k == n:
        return 1
    return (q_binomial(n - 1, k - 1, q, p) + pow(q, k, p) * q_binomial(n - 1, k, q, p)) % p


def shuffle_sign(first, second):
    """Sign of the permutation sorting the concatenation first + second."""
    seq = list(first) + list(second)
    return perm_sign(sorted(range(len(seq)), key=lambda t: seq[t]))


def three_cocycle_defect(omega, n):
    """All (a, b, c, d) in Z_n^4 where the multiplicative 3-cocycle law fails."""
    bad = []
    for a, b, c, d in itertools.product(range(n), repeat=4):
        lhs = omega(b, c, d) * omega(a, (b + c) % n, d) * omega(a, b, c)
        rhs = omega((a + b) % n, c, d) * omega(a, b, (c + d) % n)
        if lhs != rhs:
            bad.append((a, b, c, d))
    return bad


def smash_product_loops(mu_A, act, mu_H, delta, dimA, dimH):
    """(a#h)(b#g) = sum a (h1 . b) # h2 g, written out as nested loops.

    Leg conventions match the package: mu[k, i, j], act[k, h, a],
    delta[i, j, h].  Basis of A#H is a*dimH + h.
    """
    n = dimA * dimH
    out = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for a, h, b, g in itertools.product(range(dimA), range(dimH), range(dimA), range(dimH)):
        for h1, h2 in itertools.product(range(dimH), repeat=2):
            c = delta[h1][h2][h]
            if c == 0:
                continue
            for b1 in range(dimA):
                t = act[b1][h1][b]
                if t == 0:
                    continue
                for r in range(dimA):
                    s = mu_A[r][a][b1]
                    if s == 0:
                        continue
                    for f in range(dimH):
                        u = mu_H[f][h2][g]
                        if u:
                            out[r * dimH + f][a * dimH + h][b * dimH + g] += c * t * s * u
    return out


# ---------------------------------------------------------------------------
# super Yetter-Drinfeld algebras, written with explicit Koszul signs

def super_yd_defects(mu, unit, act, coact, deg, muH, delta, degH, p=None):
    """Names of the laws that fail for a super YD algebra given by nested lists.

    act[k][h][a], coact[h][k][a], mu[k][a][b], delta[h1][h2][h]; deg and degH
    are the parities of the basis vectors.  Entries are compared mod p when
    p is given.
    """
    n, d = len(unit), len(degH)
    R = range(n)
    D = range(d)

    def eq(x, y):
        return (x - y) % p == 0 if p else x == y

    def zero_poly(vals):
        return all(eq(v, 0) for v in vals)

    bad = []
    parity = [act[k][h][a] for k in R for h in D for a in R if deg[k] != (degH[h] + deg[a]) % 2]
    parity += [mu[k][a][b] for k in R for a in R for b in R if deg[k] != (deg[a] + deg[b]) % 2]
    parity += [coact[h][k][a] for h in D for k in R for a in R
               if deg[a] != (degH[h] + deg[k]) % 2]
    parity += [unit[k] for k in R if deg[k]]
    if not zero_poly(parity):
        bad.append("grading")
    assoc = [sum(mu[k][x][c] * mu[x][a][b] - mu[k][a][x] * mu[x][b][c] for x in R)
             for k in R for a in R for b in R for c in R]
    unit_law = [sum(mu[k][x][a] * unit[x] for x in R) - (k == a) for k in R for a in R]
    if not zero_poly(assoc + unit_law):
        bad.append("algebra")
    one = [h for h in D if all(muH[k][h][g] == (k == g) for k in D for g in D)][0]
    module = [sum(act[k][x][a] * muH[x][h][g] for x in D)
              - sum(act[k][h][y] * act[y][g][a] for y in R)
              for k in R for h in D for g in D for a in R]
    module += [act[k][one][a] - (k == a) for k in R for a in R]
    if not zero_poly(module):
        bad.append("module")

    leib = []
    for k in R:
        for h in D:
            for a in R:
                for b in R:
                    lhs = sum(act[k][h][x] * mu[x][a][b] for x in R)
                    rhs = 0
                    for h1 in D:
                        for h2 in D:
                            c = delta[h1][h2][h]
                            if c == 0:
                                continue
                            s = (-1) ** (degH[h2] * deg[a])
                            rhs += c * s * sum(mu[k][u][w] * act[u][h1][a] * act[w][h2][b]
                                               for u in R for w in R)
                    leib.append(lhs - rhs)
    if not zero_poly(leib):
        bad.append("module-algebra")

    # coassociativity and counit of the coaction
    eps = [1 if h == one else 0 for h in D]
    coass = []
    for h1 in D:
        for h2 in D:
            for k in R:
                for a in R:
                    lhs = sum(delta[h1][h2][g] * coact[g][k][a] for g in D)
                    rhs = sum(coact[h1][x][a] * coact[h2][k][x] for x in R)
                    coass.append(lhs - rhs)
    coass += [sum(eps[h] * coact[h][k][a] for h in D) - (k == a) for k in R for a in R]
    if not zero_poly(coass):
        bad.append("comodule")

    comod = []
    # lambda(ab) = lambda(a) lambda(b) with (h (x) a)(g (x) b) = (-1)^{|a||g|} hg (x) ab
    for h in D:
        for k in R:
            for a in R:
                for b in R:
                    lhs = sum(coact[h][k][x] * mu[x][a][b] for x in R)
                    rhs = 0
                    for g1 in D:
                        for u in R:
                            cu = coact[g1][u][a]
                            if cu == 0:
                                continue
                            for g2 in D:
                                for w in R:
                                    cw = coact[g2][w][b]
                                    if cw == 0:
                                        continue
                                    s = (-1) ** (deg[u] * degH[g2])
                                    rhs += cu * cw * s * muH[h][g1][g2] * mu[k][u][w]
                    comod.append(lhs - rhs)
    comod += [sum(coact[h][k][x] * unit[x] for x in R) - (h == one) * unit[k]
              for h in D for k in R]
    if not zero_poly(comod):
        bad.append("comodule-algebra")

    # h1 a(-1) (x) h2 . a(0)  =  (h1 . a)(-1) h2 (x) (h1 . a)(0), Koszul signs included
    crossed = []
    for g in D:
        for k in R:
            for h in D:
                for a in R:
                    lhs = rhs = 0
                    for h1 in D:
                        for h2 in D:
                            c = delta[h1][h2][h]
                            if c == 0:
                                continue
                            for f in D:
                                for x in R:
                                    l = coact[f][x][a]
                                    if l:
                                        s = (-1) ** (degH[h2] * degH[f])
                                        lhs += c * s * l * muH[g][h1][f] * act[k][h2][x]
                            s1 = (-1) ** (degH[h2] * deg[a])
                            for y in R:
                                t = act[y][h1][a]
                                if t == 0:
                                    continue
                                for f in D:
                                    l = coact[f][k][y]
                                    if l:
                                        s2 = (-1) ** (deg[k] * degH[h2])
                                        rhs += c * s1 * s2 * t * l * muH[g][f][h2]
                    crossed.append(lhs - rhs)
    if not zero_poly(crossed):
        bad.append("crossed")
    return bad


def exterior_one():
    """Lambda(x) on the basis 1, x: (muH, delta, degH) as nested lists."""
    muH = [[[1, 0], [0, 0]], [[0, 1], [1, 0]]]
    delta = [[[1, 0], [0, 1]], [[0, 1], [0, 0]]]
    return muH, delta, [0, 1]

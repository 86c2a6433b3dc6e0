"""Catalog of concrete algebras built from presentations.

Each entry evaluates generators and relations into structure constants:
a basis of normal-form words is enumerated, products are reduced by the
defining relations, and coproducts, antipodes and coactions are extended
from their values on generators as (anti-)algebra maps.
"""

import copy
import itertools

import numpy as np

from .core import QQ, CertificationError, Field, ein, invert_map, LinearMap, outer
from . import quasi_hopf as qh


class UnknownExample(KeyError):
    pass


# ---------------------------------------------------------------------------
# presentation helpers

def algebra_from_product(n, product, field):
    """``product(i, j)`` returns {k: coeff}; builds mu[k, i, j]."""
    mu = field.zeros((n, n, n))
    for i in range(n):
        for j in range(n):
            for k, c in product(i, j).items():
                mu[k, i, j] = mu[k, i, j] + c
    return field.norm(mu)


def word_images(words, gen_images, mu, unit, field, anti=False):
    """Extend generator images along each basis word.

    ``words[k]`` is a tuple of generator names, ``gen_images`` maps a name to
    a vector in the target algebra (multiplication ``mu``, unit ``unit``).
    Returns the matrix whose column k is the image of word k.
    """
    cols = []
    for w in words:
        v = unit
        for g in (reversed(w) if anti else w):
            v = field.norm(ein("kij,i,j->k", mu, v, gen_images[g]))
        cols.append(v)
    return field.norm(np.stack(cols, axis=-1))


def tensor_square(mu):
    d = mu.shape[0]
    return ein("abc,def->adbecf", mu, mu).reshape(d * d, d * d, d * d)


def _vec(field, n, entries):
    v = field.zeros(n)
    for k, c in entries.items():
        v[k] = field(c)
    return v


def _inverse(mat, field):
    return invert_map(LinearMap(mat, field)).mat


def _field(p):
    return QQ if p is None else Field(p)


# ---------------------------------------------------------------------------
# ordinary and quasi-Hopf algebras

def group_algebra(n=2, p=None):
    """k[Z_n] on the basis g^0, ..., g^(n-1)."""
    F = _field(p)
    n = int(n)
    if n < 1:
        raise ValueError("n must be positive")
    mu = algebra_from_product(n, lambda i, j: {(i + j) % n: 1}, F)
    unit = _vec(F, n, {0: 1})
    delta = F.zeros((n, n, n))
    S = F.zeros((n, n))
    for k in range(n):
        delta[k, k, k] = 1
        S[(-k) % n, k] = 1
    return qh.QuasiHopfAlgebraData.from_hopf(mu, unit, delta, F.array([1] * n), S, S.T.copy(),
                                             field=F, labels=[f"g^{k}" for k in range(n)],
                                             name=f"group-algebra-Z{n}")


_S3 = [tuple(pm) for pm in itertools.permutations(range(3))]


def _group(spec):
    """Elements, product and inverse of Z_n (int spec) or S3."""
    if spec in ("S3", "s3"):
        els = _S3
        idx = {g: k for k, g in enumerate(els)}
        mult = lambda a, b: idx[tuple(els[a][els[b][t]] for t in range(3))]
        inv = lambda a: idx[tuple(sorted(range(3), key=lambda t: els[a][t]))]
        labels = ["".join(map(str, g)) for g in els]
        return len(els), mult, inv, labels, 0
    n = int(spec)
    return n, (lambda a, b: (a + b) % n), (lambda a: (-a) % n), [str(k) for k in range(n)], 0


def dual_group_algebra(group=2, p=None):
    """k^G: orthogonal idempotents e_g with Delta(e_g) = sum_{ab=g} e_a (x) e_b."""
    F = _field(p)
    n, mult, inv, labels, e = _group(group)
    mu = F.zeros((n, n, n))
    delta = F.zeros((n, n, n))
    S = F.zeros((n, n))
    for a in range(n):
        mu[a, a, a] = 1
        S[inv(a), a] = 1
        for b in range(n):
            delta[a, b, mult(a, b)] = 1
    unit = F.array([1] * n)
    counit = _vec(F, n, {e: 1})
    return qh.QuasiHopfAlgebraData.from_hopf(mu, unit, delta, counit, S, _inverse(S, F), field=F,
                                             labels=[f"e_{l}" for l in labels],
                                             name=f"dual-group-algebra-{group}")


SWEEDLER_WORDS = [(), ("x",), ("g",), ("g", "x")]


def _sweedler_product(i, j):
    # g^a x^b * g^c x^d = (-1)^(b c) g^(a+c) x^(b+d), with x^2 = 0
    a, b = divmod(i, 2)
    c, d = divmod(j, 2)
    if b + d > 1:
        return {}
    return {((a + c) % 2) * 2 + b + d: (-1) ** (b * c)}


def sweedler(p=None):
    """Sweedler's H4 (char != 2): g^2 = 1, x^2 = 0, gx = -xg."""
    F = _field(p)
    if p == 2:
        raise ValueError("Sweedler's algebra needs characteristic != 2")
    mu = algebra_from_product(4, _sweedler_product, F)
    unit = _vec(F, 4, {0: 1})
    mu2 = tensor_square(mu)
    u2 = outer(unit, unit).reshape(-1)
    g, x = _vec(F, 4, {2: 1}), _vec(F, 4, {1: 1})
    gens2 = {"g": outer(g, g).reshape(-1), "x": (outer(x, unit) + outer(g, x)).reshape(-1)}
    delta = word_images(SWEEDLER_WORDS, gens2, mu2, u2, F).reshape(4, 4, 4)
    S = word_images(SWEEDLER_WORDS, {"g": g, "x": F.norm(-ein("kij,i,j->k", mu, g, x))},
                    mu, unit, F, anti=True)
    counit = F.array([1, 0, 1, 0])
    return qh.QuasiHopfAlgebraData.from_hopf(mu, unit, delta, counit, S, _inverse(S, F), field=F,
                                             labels=["1", "x", "g", "gx"], name="sweedler")


def quasi_kz2_twisted(p=None):
    """k^Z2 with the associator attached to the nontrivial 3-cocycle
    omega(a, b, c) = (-1)^(abc); alpha = 1 and beta = sum (-1)^a e_a."""
    F = _field(p)
    H = dual_group_algebra(2, p)
    phi = F.zeros((2, 2, 2))
    for a, b, c in itertools.product(range(2), repeat=3):
        phi[a, b, c] = (-1) ** (a * b * c)
    beta = F.array([1, -1])
    return qh.QuasiHopfAlgebraData(H.mu, H.unit, H.delta, H.counit, phi, phi.copy(), H.S, H.S_inv,
                                   H.unit, beta, field=F, labels=H.labels, name="quasi-kZ2-twisted")


def quasi_hopf_by_name(name, p=None):
    if name in ("kZ2", "group-algebra"):
        return group_algebra(2, p)
    if name in ("twisted", "quasi-kZ2-twisted"):
        return quasi_kz2_twisted(p)
    if name in ("H4", "sweedler"):
        return sweedler(p)
    raise ValueError(f"unknown quasi-Hopf algebra {name!r}")


# ---------------------------------------------------------------------------
# Yetter-Drinfeld algebras over quasi-Hopf algebras

def graded_yd_algebra(hopf="kZ2", c=1, t=1, trivial_action=False, p=None):
    """A = k[y]/(y^2 - c) with y odd, as a YD algebra over ``hopf``.

    Over kZ2: g.y = -y (or trivial action) and y -> g (x) y.
    Over the twisted k^Z2: action through the counit, y -> (e_0 - e_1) (x) y.
    Over H4: g.y = -y, x.y = t 1 and y -> g (x) y.
    """
    H = quasi_hopf_by_name(hopf, p)
    F = H.field
    mu = algebra_from_product(2, lambda i, j: {(i + j) % 2: c if i * j else 1}, F)
    unit = _vec(F, 2, {0: 1})
    d = H.dim
    act = F.zeros((2, d, 2))
    lam = F.zeros((d, 2, 2))
    lam[:, 0, 0] = H.unit
    if hopf in ("kZ2", "group-algebra"):
        sign = 1 if trivial_action else -1
        act[0, :, 0] = [1, 1]
        act[1, :, 1] = [1, sign]
        lam[1, 1, 1] = 1
    elif hopf in ("twisted", "quasi-kZ2-twisted"):
        for k in range(2):
            act[k, :, k] = H.counit
        lam[:, 1, 1] = [1, -1]
    else:
        # basis 1, x, g, gx of H4
        act[0, 0, 0] = act[0, 2, 0] = 1
        act[1, 0, 1] = 1
        act[1, 2, 1] = -1
        act[0, 1, 1] = t
        act[0, 3, 1] = t
        lam[2, 1, 1] = 1
    A = qh.LeftModuleAlgebraData(mu, unit, F.norm(act), F.norm(lam), field=F,
                                 labels=["1", "y"], name=f"graded-yd-algebra-{hopf}")
    return H, A


def trivial_yd_algebra(hopf="kZ2", p=None):
    H = quasi_hopf_by_name(hopf, p)
    return H, qh.trivial_module_algebra(H)


def smash_bicomodule(hopf="kZ2", algebra="graded", p=None):
    """A#H with its bicomodule structure and v(h) = 1 # h."""
    if algebra == "trivial":
        H, A = trivial_yd_algebra(hopf, p)
    else:
        H, A = graded_yd_algebra(hopf, p=p)
    return H, qh.yd_smash_bicomodule(H, A)


def regular_bicomodule(hopf="kZ2", p=None):
    H = quasi_hopf_by_name(hopf, p)
    return H, qh.regular_bicomodule(H)


# ---------------------------------------------------------------------------
# weak Hopf algebras

def groupoid_algebra(objects=2, group_order=1, connected=True, p=None):
    """Groupoid algebra on ``objects`` objects with vertex group Z_m.

    Arrows are triples (target, source, g); a product of two arrows is the
    composite when the source of the first is the target of the second and
    zero otherwise.  Delta(s) = s (x) s, eps(s) = 1, S(s) = s^-1.
    """
    from .weak_hopf import WeakHopfAlgebraData
    F = _field(p)
    n, m = int(objects), int(group_order)
    if n < 1 or m < 1:
        raise ValueError("objects and group_order must be positive")
    arrows = [(i, j, a) for i in range(n) for j in range(n) for a in range(m)
              if connected or i == j]
    idx = {s: k for k, s in enumerate(arrows)}
    d = len(arrows)

    def product(x, y):
        i, j, a = arrows[x]
        j2, l, b = arrows[y]
        return {idx[(i, l, (a + b) % m)]: 1} if j == j2 else {}

    mu = algebra_from_product(d, product, F)
    unit = F.zeros(d)
    for i in range(n):
        unit[idx[(i, i, 0)]] = 1
    delta = F.zeros((d, d, d))
    S = F.zeros((d, d))
    for k, (i, j, a) in enumerate(arrows):
        delta[k, k, k] = 1
        S[idx[(j, i, (-a) % m)], k] = 1
    labels = [f"({i}<-{j}:{a})" for i, j, a in arrows]
    return WeakHopfAlgebraData(mu, unit, delta, F.array([1] * d), S, _inverse(S, F), field=F,
                               labels=labels, name=f"groupoid-{n}x{m}")


def weak_hopf_by_name(name, p=None, **params):
    if name == "groupoid":
        return groupoid_algebra(p=p, **params)
    if name in ("group-algebra", "kZ2"):
        return groupoid_algebra(1, params.get("n", 2), p=p)
    raise ValueError(f"unknown weak Hopf algebra {name!r}")


def target_algebra(H):
    """H_t with action h . z = eps_t(hz) and coaction z -> Delta(z) in H (x) H_t."""
    from .weak_hopf import WeakModuleAlgebraData, counital_maps
    F = H.field
    sp = counital_maps(H).target
    i, pr = sp.i.mat, sp.p.mat
    Et = H.eps_t()
    mu = F.norm(ein("ak,kxy,xb,yc->abc", pr, H.mu, i, i))
    unit = F.norm(pr.dot(H.unit))
    act = F.norm(ein("ak,kp,phx,xb->ahb", pr, Et, H.mu, i))
    coact = F.norm(ein("ak,hkx,xb->hab", pr, H.delta, i))
    return WeakModuleAlgebraData(mu, unit, act, coact, F, labels=[f"t{k}" for k in range(sp.rank)],
                                 name="target-algebra")


def groupoid_yd_algebra(objects=2, connected=True, p=None):
    """Over the groupoid algebra with vertex group Z_2: A = k^objects (x) k[y]/(y^2 - 1).

    The arrow (i <- j : a) sends e_j (x) c to e_i (x) (-1)^(a deg c) c and kills
    the other idempotents; e_l (x) y^b is coacted on by (l <- l : b).
    """
    from .weak_hopf import WeakModuleAlgebraData
    H = groupoid_algebra(objects, 2, connected, p)
    F = H.field
    n = int(objects)
    arrows = [(i, j, a) for i in range(n) for j in range(n) for a in range(2) if connected or i == j]
    aidx = {s: k for k, s in enumerate(arrows)}
    basis = [(l, b) for l in range(n) for b in range(2)]
    bidx = {x: k for k, x in enumerate(basis)}
    d, k = H.dim, len(basis)

    def product(x, y):
        (l, b), (l2, c) = basis[x], basis[y]
        return {bidx[(l, (b + c) % 2)]: 1} if l == l2 else {}

    mu = algebra_from_product(k, product, F)
    unit = F.zeros(k)
    for l in range(n):
        unit[bidx[(l, 0)]] = 1
    act = F.zeros((k, d, k))
    lam = F.zeros((d, k, k))
    for h, (i, j, a) in enumerate(arrows):
        for b in range(2):
            act[bidx[(i, b)], h, bidx[(j, b)]] = (-1) ** (a * b)
    for x, (l, b) in enumerate(basis):
        lam[aidx[(l, l, b)], x, x] = 1
    return H, WeakModuleAlgebraData(mu, unit, F.norm(act), lam, F,
                                    labels=[f"e{l}y^{b}" for l, b in basis], name="groupoid-yd-algebra")


# ---------------------------------------------------------------------------
# braided Hopf algebras

def _solve(mat, rhs, field):
    """One solution of mat @ x = rhs, or None when the system is inconsistent."""
    from .core import rref
    n = mat.shape[1]
    R, piv = rref(np.hstack([mat, rhs.reshape(-1, 1)]), field)
    if n in piv:
        return None
    x = field.zeros(n)
    for r, c in enumerate(piv):
        x[c] = R[r, n]
    return x


def convolution_antipode(mu, unit, delta, counit, field):
    """The S with mu (S (x) id) Delta = unit counit, found by linear solve."""
    n = unit.shape[0]
    coeff = ein("abx,ksb->kxsa", delta, mu).reshape(n * n, n * n)
    S = _solve(coeff, outer(unit, counit).reshape(-1), field)
    if S is None:
        raise ValueError("id has no convolution inverse")
    return S.reshape(n, n)


def _braided_hopf(ctx, obj, words, mu, gen_delta, field, name):
    """Coproduct extended multiplicatively through the braided tensor square,
    counit from the unit word, antipode by solving the convolution equation."""
    from .braided import BraidedAlgebraData, BraidedHopfAlgebraData, braided_tensor_algebra
    n = len(words)
    unit = _vec(field, n, {0: 1})
    A = BraidedAlgebraData(ctx, obj, mu, unit)
    mu2 = braided_tensor_algebra(ctx, A, A)
    delta = word_images(words, {g: v.reshape(-1) for g, v in gen_delta.items()},
                        mu2, outer(unit, unit).reshape(-1), field).reshape(n, n, n)
    counit = _vec(field, n, {0: 1})
    S = convolution_antipode(mu, unit, delta, counit, field)
    return BraidedHopfAlgebraData(ctx, obj, mu, unit, delta, counit, S, name=name)


def _exterior_algebra(gens, field):
    """Basis: subsets of ``gens`` as sorted words, shortest first."""
    k = len(gens)
    subsets = sorted((s for r in range(k + 1) for s in itertools.combinations(range(k), r)),
                     key=lambda s: (len(s), s))
    idx = {s: i for i, s in enumerate(subsets)}

    def product(i, j):
        a, b = subsets[i], subsets[j]
        if set(a) & set(b):
            return {}
        inversions = sum(1 for x in a for y in b if x > y)
        return {idx[tuple(sorted(a + b))]: (-1) ** inversions}

    words = [tuple(gens[t] for t in s) for s in subsets]
    mu = algebra_from_product(len(subsets), product, field)
    return subsets, words, mu


def _z2_decorations(degrees, H0):
    """g acts by (-1)^deg and the coaction is g^deg (x) -; H0 = kZ2."""
    F = H0.field
    n = len(degrees)
    act = F.zeros((n, 2, n))
    coact = F.zeros((2, n, n))
    for i, d in enumerate(degrees):
        act[i, 0, i] = 1
        act[i, 1, i] = (-1) ** d
        coact[d % 2, i, i] = 1
    return act, coact


def braided_context(kind, p=None, base=None):
    """A context; ``yd`` contexts are over k[Z_base] (default Z2)."""
    from .braided import BraidedContext
    if kind == "yd":
        return BraidedContext("yd", group_algebra(base or 2, p))
    return BraidedContext(kind, field=_field(p))


def _graded_object(ctx, degrees, labels):
    if ctx.kind == "super":
        return ctx.obj(len(degrees), grading=degrees, labels=labels)
    if ctx.kind == "yd":
        act, coact = _z2_decorations(degrees, ctx.hopf)
        return ctx.obj(len(degrees), act=act, coact=coact, labels=labels)
    return ctx.obj(len(degrees), labels=labels)


def exterior(k=1, context="super", p=None, letter="x"):
    """Exterior algebra on k odd primitive generators.

    ``context`` is ``super``, ``yd`` (over kZ2, odd meaning g acts by -1) or
    ``plain``.  The coproduct is always the one forced by the signed braiding;
    in the plain context it is therefore not an algebra map.  Needs char != 2.
    Returns (ctx, H).
    """
    F = _field(p)
    if F.p == 2:
        raise ValueError("exterior algebras need characteristic != 2")
    k = int(k)
    gens = [f"{letter}{t + 1}" if k > 1 else letter for t in range(k)]
    subsets, words, mu = _exterior_algebra(gens, F)
    n = len(subsets)
    labels = ["".join(w) or "1" for w in words]
    degrees = [len(s) % 2 for s in subsets]
    sctx = braided_context("super", p)
    sobj = _graded_object(sctx, degrees, labels)
    gen_delta = {}
    for t, g in enumerate(gens):
        j = subsets.index((t,))
        D = F.zeros((n, n))
        D[j, 0] = 1
        D[0, j] = 1
        gen_delta[g] = D
    Hs = _braided_hopf(sctx, sobj, words, mu, gen_delta, F, f"exterior-{k}")
    ctx = sctx if context == "super" else braided_context(context, p)
    if ctx is sctx:
        return ctx, Hs
    from .braided import BraidedHopfAlgebraData
    obj = _graded_object(ctx, degrees, labels)
    return ctx, BraidedHopfAlgebraData(ctx, obj, Hs.mu, Hs.unit, Hs.delta, Hs.counit, Hs.S,
                                       Hs.S_inv, name=f"exterior-{k}-{context}")


def quantum_line(N=3, p=7, q=2):
    """k[x]/(x^N) in YD over k[Z_N]: g.x = q x, x -> g (x) x, x primitive.

    ``q`` must be a primitive N-th root of unity in GF(p).
    """
    F = Field(p)
    N = int(N)
    qq = F(q)
    order = next((r for r in range(1, N + 1) if F(qq ** r) == 1), None)
    if order != N:
        raise ValueError(f"q = {q} is not a primitive {N}-th root of unity mod {p}")
    ctx = braided_context("yd", p, base=N)
    act = F.zeros((N, N, N))
    coact = F.zeros((N, N, N))
    for a in range(N):
        for j in range(N):
            act[a, j, a] = F(qq ** (j * a))
        coact[a, a, a] = 1
    labels = [f"x^{a}" for a in range(N)]
    obj = ctx.obj(N, act=act, coact=coact, labels=labels)
    mu = algebra_from_product(N, lambda i, j: {i + j: 1} if i + j < N else {}, F)
    D = F.zeros((N, N))
    D[1, 0] = D[0, 1] = 1
    words = [("x",) * a for a in range(N)]
    return ctx, _braided_hopf(ctx, obj, words, mu, {"x": D}, F, f"quantum-line-{N}")


def super_yd_algebra(c=1, context="super", p=None, coact_shift=0):
    """A = Lambda(y) over H = Lambda(x) with x . y = c and trivial coaction.

    ``coact_shift`` adds d * x (x) 1 to the coaction of y.  Every (c, d)
    gives a YD algebra.  Returns (ctx, H, A).
    """
    from .braided import BraidedModuleAlgebraData
    ctx, H = exterior(1, context, p)
    F = ctx.field
    obj = _graded_object(ctx, [0, 1], ["1", "y"])
    _, _, mu = _exterior_algebra(["y"], F)
    act = F.zeros((2, 2, 2))
    act[0, 0, 0] = act[1, 0, 1] = 1
    act[0, 1, 1] = F(c)
    coact = F.zeros((2, 2, 2))
    coact[0, 0, 0] = coact[0, 1, 1] = 1
    coact[1, 0, 1] = F(coact_shift)
    A = BraidedModuleAlgebraData(ctx, obj, mu, _vec(F, 2, {0: 1}), act, F.norm(coact),
                                 labels=["1", "y"], name=f"super-yd-algebra-c{c}")
    return ctx, H, A


def braided_smash_bicomodule(c=1, context="super", p=None):
    """Lambda(y)#Lambda(x) with its bicomodule structure.  Returns (ctx, H, B)."""
    from .braided import braided_yd_smash_bicomodule
    ctx, H, A = super_yd_algebra(c, context, p)
    return ctx, H, braided_yd_smash_bicomodule(ctx, H, A)


def plain_hopf(name="kZ2", p=None):
    """An ordinary Hopf algebra placed in the plain context.  Returns (ctx, H)."""
    from .braided import hopf_from_classical
    ctx = braided_context("plain", p)
    return ctx, hopf_from_classical(ctx, quasi_hopf_by_name(name, p))


def swap_yd_algebra(p=None):
    """k[y, z]/(y^2 - 1, z^2 - 1) over kZ2 in the plain context, y odd and z
    even, with g swapping y and z.  The action moves the grading, so the
    crossed relation fails.  Returns (ctx, H, A)."""
    from .braided import BraidedModuleAlgebraData
    ctx, H = plain_hopf("kZ2", p)
    F = ctx.field
    basis = list(itertools.product(range(2), repeat=2))
    idx = {b: i for i, b in enumerate(basis)}
    mu = algebra_from_product(
        4, lambda i, j: {idx[((basis[i][0] + basis[j][0]) % 2, (basis[i][1] + basis[j][1]) % 2)]: 1},
        F)
    act = F.zeros((4, 2, 4))
    lam = F.zeros((2, 4, 4))
    for i, (a, b) in enumerate(basis):
        act[i, 0, i] = 1
        act[idx[(b, a)], 1, i] = 1
        lam[a, i, i] = 1
    labels = [f"y^{a}z^{b}" for a, b in basis]
    return ctx, H, BraidedModuleAlgebraData(ctx, ctx.obj(4, labels=labels), mu, _vec(F, 4, {0: 1}),
                                            act, lam, labels=labels, name="swap-yd-algebra")


def quasi_kz2_bad_associator(p=None):
    """kZ2 with Phi = 1 (x) 1 (x) g, which is not a valid associator."""
    H = group_algebra(2, p)
    F = H.field
    g = _vec(F, 2, {1: 1})
    phi = F.norm(outer(H.unit, H.unit, g))
    return qh.QuasiHopfAlgebraData(H.mu, H.unit, H.delta, H.counit, phi, phi.copy(), H.S, H.S_inv,
                                   H.unit, H.unit, field=F, labels=H.labels,
                                   name="quasi-kZ2-bad-associator")


def sweedler_regular_action(p=None):
    """H4 acting on itself by left multiplication (not a module algebra)."""
    H = sweedler(p)
    return H, qh.LeftModuleAlgebraData(H.mu, H.unit, H.mu, field=H.field, labels=H.labels,
                                       name="sweedler-regular-action")


# ---------------------------------------------------------------------------
# the catalog

FAMILIES = ("quasi", "weak", "braided")
FILE_KINDS = ("quasi-hopf", "weak-hopf", "braided-hopf", "module-algebra",
              "bicomodule-algebra", "yd-module")


class Built:
    """A constructed structure ready for verification.

    ``data`` is the structure itself; ``hopf`` the Hopf algebra it lives over
    (None for Hopf kinds); ``ctx`` the braided context for the braided family.
    """

    def __init__(self, name, kind, family, data, hopf=None, ctx=None, params=None):
        if kind not in FILE_KINDS:
            raise ValueError(f"unknown kind {kind!r}")
        if family not in FAMILIES:
            raise ValueError(f"unknown family {family!r}")
        self.name = name
        self.kind = kind
        self.family = family
        self.data = data
        self.hopf = hopf
        self.ctx = ctx
        self.params = dict(params or {})

    def verify(self):
        return verify_built(self)

    def __repr__(self):
        return f"Built({self.name!r}, {self.kind}, {self.family})"


def verify_built(b):
    """Run the verification op matching the kind and family of ``b``."""
    from . import braided as br
    from . import weak_hopf as wh
    X, H, ctx = b.data, b.hopf, b.ctx
    fam, kind = b.family, b.kind
    if kind.endswith("-hopf"):
        if fam == "quasi":
            return qh.verify_quasi_hopf(X)
        if fam == "weak":
            return wh.verify_weak_hopf(X)
        return br.verify_braided_hopf(ctx, X)
    if kind == "module-algebra":
        if fam == "quasi":
            if X.coact is None:
                return qh.verify_module_algebra(H, X)
            return qh.verify_yd_algebra(H, X)
        if fam == "weak":
            rep = wh.verify_weak_module_algebra(H, X)
            if X.coact is not None:
                C = wh.WeakBicomoduleAlgebraData(X.mu, X.unit, lam=X.coact, field=X.field)
                rep.merge(wh.verify_weak_comodule_algebra(H, C, "left"))
                rep.merge(wh.verify_weak_yd(H, wh.WeakYDData(X.act, X.coact, X.field)))
            return rep
        if X.coact is None:
            return br.verify_braided_module_algebra(ctx, H, X)
        return br.verify_braided_yd_algebra(ctx, H, X)
    if kind == "bicomodule-algebra":
        if fam == "quasi":
            rep = qh.verify_bicomodule_algebra(H, X)
            if X.v is not None:
                rep.merge(qh.verify_bicomodule_morphism(H, X.v, qh.regular_bicomodule(H, False), X),
                          prefix="v:")
            return rep
        if fam == "weak":
            rep = wh.verify_weak_comodule_algebra(H, X, "both")
            if X.v is not None:
                wh.verify_weak_morphism(H, X.v, wh.regular_weak_bicomodule(H), X, rep, "v:")
            return rep
        return br.verify_braided_bicomodule_algebra(ctx, H, X)
    if fam == "quasi":
        return qh.verify_yd(H, X)
    if fam == "weak":
        return wh.verify_weak_yd(H, X)
    return br.verify_braided_yd(ctx, H, X)


def _quasi(name, H):
    return Built(name, "quasi-hopf", "quasi", H)


def _b_group(n=2, p=None):
    return _quasi("group-algebra", group_algebra(n, p))


def _b_dual(group=2, p=None):
    return _quasi("dual-group-algebra", dual_group_algebra(group, p))


def _b_sweedler(p=None):
    return _quasi("sweedler", sweedler(p))


def _b_twisted(p=None):
    return _quasi("quasi-kZ2-twisted", quasi_kz2_twisted(p))


def _b_bad(p=None):
    return _quasi("quasi-kZ2-bad-associator", quasi_kz2_bad_associator(p))


def _b_groupoid(objects=2, group_order=1, connected=True, p=None):
    return Built("groupoid", "weak-hopf", "weak", groupoid_algebra(objects, group_order, connected, p))


def _braided(name, ctx_H):
    ctx, H = ctx_H
    return Built(name, "braided-hopf", "braided", H, ctx=ctx)


def _b_exterior(k=1, context="super", p=None):
    return _braided("exterior", exterior(k, context, p))


def _b_exterior_yd(k=1, p=None):
    return _braided("exterior-yd", exterior(k, "yd", p))


def _b_exterior_plain(k=1, p=None):
    return _braided("exterior-plain", exterior(k, "plain", p))


def _b_qline(N=3, p=7, q=2):
    return _braided("quantum-line", quantum_line(N, p, q))


def _b_plain(hopf="kZ2", p=None):
    return _braided("plain-hopf", plain_hopf(hopf, p))


def _b_graded(hopf="kZ2", c=1, t=1, trivial_action=False, p=None):
    H, A = graded_yd_algebra(hopf, c, t, trivial_action, p)
    return Built("graded-yd-algebra", "module-algebra", "quasi", A, H)


def _b_graded_module(hopf="kZ2", p=None):
    H, A = graded_yd_algebra(hopf, p=p)
    M = qh.YetterDrinfeldModuleData(A.act, A.coact, H.field, labels=A.labels, name="graded-yd-module")
    return Built("graded-yd-module", "yd-module", "quasi", M, H)


def _b_trivial(hopf="kZ2", p=None):
    H, A = trivial_yd_algebra(hopf, p)
    return Built("trivial-yd-algebra", "module-algebra", "quasi", A, H)


def _b_regular_action(p=None):
    H, A = sweedler_regular_action(p)
    return Built("sweedler-regular-action", "module-algebra", "quasi", A, H)


def _b_smash(hopf="kZ2", algebra="graded", p=None):
    H, B = smash_bicomodule(hopf, algebra, p)
    return Built("smash-bicomodule", "bicomodule-algebra", "quasi", B, H)


def _b_regular(hopf="kZ2", p=None):
    H, B = regular_bicomodule(hopf, p)
    return Built("regular-bicomodule", "bicomodule-algebra", "quasi", B, H)


def _b_groupoid_yd(objects=2, connected=True, p=None):
    H, A = groupoid_yd_algebra(objects, connected, p)
    return Built("groupoid-yd-algebra", "module-algebra", "weak", A, H)


def _b_target(objects=2, group_order=1, p=None):
    H = groupoid_algebra(objects, group_order, p=p)
    return Built("target-algebra", "module-algebra", "weak", target_algebra(H), H)


def _b_groupoid_regular(objects=2, group_order=1, p=None):
    from .weak_hopf import regular_weak_bicomodule
    H = groupoid_algebra(objects, group_order, p=p)
    return Built("groupoid-regular", "bicomodule-algebra", "weak", regular_weak_bicomodule(H), H)


def _b_groupoid_smash(objects=2, p=None):
    from .weak_hopf import weak_yd_smash_bicomodule
    H, A = groupoid_yd_algebra(objects, p=p)
    B, _, _ = weak_yd_smash_bicomodule(H, A)
    return Built("groupoid-smash-bicomodule", "bicomodule-algebra", "weak", B, H)


def _b_super_yd(c=1, context="super", p=None):
    ctx, H, A = super_yd_algebra(c, context, p)
    return Built("super-yd-algebra", "module-algebra", "braided", A, H, ctx)


def _b_braided_smash(c=1, context="super", p=None):
    ctx, H, B = braided_smash_bicomodule(c, context, p)
    return Built("braided-smash-bicomodule", "bicomodule-algebra", "braided", B, H, ctx)


def _b_braided_regular(hopf="kZ2", p=None):
    from .braided import braided_regular_bicomodule
    ctx, H = plain_hopf(hopf, p)
    return Built("plain-regular-bicomodule", "bicomodule-algebra", "braided",
                 braided_regular_bicomodule(ctx, H), H, ctx)


def _b_swap(p=None):
    ctx, H, A = swap_yd_algebra(p)
    return Built("swap-yd-algebra", "module-algebra", "braided", A, H, ctx)


def _entry(builder, kind, family, summary, expected="pass"):
    return {"builder": builder, "kind": kind, "family": family, "summary": summary,
            "expected": expected}


CATALOG = {
    "group-algebra": _entry(_b_group, "quasi-hopf", "quasi", "k[Z_n] with trivial associator (n)"),
    "dual-group-algebra": _entry(_b_dual, "quasi-hopf", "quasi", "k^G for G = Z_n or 'S3' (group)"),
    "sweedler": _entry(_b_sweedler, "quasi-hopf", "quasi", "Sweedler's 4-dim Hopf algebra, char != 2"),
    "quasi-kZ2-twisted": _entry(_b_twisted, "quasi-hopf", "quasi",
                                "k^Z2 with the associator of the 3-cocycle (-1)^(abc)"),
    "quasi-kZ2-bad-associator": _entry(_b_bad, "quasi-hopf", "quasi", "kZ2 with Phi = 1 (x) 1 (x) g",
                                       ["q4", "q6"]),
    "groupoid": _entry(_b_groupoid, "weak-hopf", "weak",
                       "groupoid algebra (objects, group_order, connected)"),
    "exterior": _entry(_b_exterior, "braided-hopf", "braided",
                       "exterior algebra on k odd primitives (k, context super|yd|plain)"),
    "exterior-yd": _entry(_b_exterior_yd, "braided-hopf", "braided", "exterior algebra in YD over kZ2 (k)"),
    "exterior-plain": _entry(_b_exterior_plain, "braided-hopf", "braided",
                             "exterior algebra with the super coproduct in the plain context",
                             ["eqbialgebra"]),
    "quantum-line": _entry(_b_qline, "braided-hopf", "braided", "k[x]/(x^N) in YD over k[Z_N] (N, p, q)"),
    "plain-hopf": _entry(_b_plain, "braided-hopf", "braided", "an ordinary Hopf algebra in the plain context"),
    "graded-yd-algebra": _entry(_b_graded, "module-algebra", "quasi",
                                "k[y]/(y^2 - c), y odd, over kZ2, twisted or H4"),
    "trivial-yd-algebra": _entry(_b_trivial, "module-algebra", "quasi", "the base field as a YD algebra"),
    "sweedler-regular-action": _entry(_b_regular_action, "module-algebra", "quasi",
                                      "H4 acting on itself by multiplication",
                                      ["action-mult", "action-unit"]),
    "graded-yd-module": _entry(_b_graded_module, "yd-module", "quasi",
                               "the graded 2-dim YD module underlying graded-yd-algebra"),
    "smash-bicomodule": _entry(_b_smash, "bicomodule-algebra", "quasi",
                               "A#H with its two coactions and v (hopf, algebra)"),
    "regular-bicomodule": _entry(_b_regular, "bicomodule-algebra", "quasi", "H over itself with v = id"),
    "groupoid-yd-algebra": _entry(_b_groupoid_yd, "module-algebra", "weak",
                                  "k^n (x) k[y]/(y^2 - 1) over a groupoid with vertex group Z2"),
    "target-algebra": _entry(_b_target, "module-algebra", "weak", "the target subalgebra H_t"),
    "groupoid-regular": _entry(_b_groupoid_regular, "bicomodule-algebra", "weak",
                               "a groupoid algebra over itself with v = id"),
    "groupoid-smash-bicomodule": _entry(_b_groupoid_smash, "bicomodule-algebra", "weak",
                                        "relative smash product of groupoid-yd-algebra"),
    "super-yd-algebra": _entry(_b_super_yd, "module-algebra", "braided",
                               "Lambda(y) over Lambda(x) with x . y = c (c, context)"),
    "braided-smash-bicomodule": _entry(_b_braided_smash, "bicomodule-algebra", "braided",
                                       "Lambda(y)#Lambda(x) with its coactions (c, context)"),
    "plain-regular-bicomodule": _entry(_b_braided_regular, "bicomodule-algebra", "braided",
                                       "an ordinary Hopf algebra over itself, plain context"),
    "swap-yd-algebra": _entry(_b_swap, "module-algebra", "braided",
                              "kZ2 swapping an odd and an even generator", ["eqyd"]),
}


def build_example(name, params=None, **kw):
    """Build a catalog entry.  Unknown names raise UnknownExample, bad
    parameters raise ValueError."""
    if name not in CATALOG:
        raise UnknownExample(name)
    params = dict(params or {}, **kw)
    import inspect
    builder = CATALOG[name]["builder"]
    allowed = inspect.signature(builder).parameters
    extra = sorted(set(params) - set(allowed))
    if extra:
        raise ValueError(f"{name} does not take parameter(s) {', '.join(extra)}")
    try:
        b = builder(**params)
    except TypeError as exc:
        raise ValueError(f"{name}: {exc}") from exc
    b.params = params
    return b


def expected_failures(name):
    exp = CATALOG[name]["expected"]
    return [] if exp == "pass" else list(exp)


# ---------------------------------------------------------------------------
# single-entry mutations

def mutation_sites(b):
    """All (tensor name, index) pairs of the top-level structure tensors."""
    from .cli import dump_doc
    doc = dump_doc(b)
    sites = []
    for name in sorted(doc["tensors"]):
        shape = np.array(doc["tensors"][name], dtype=object).shape
        sites.extend((name, idx) for idx in np.ndindex(*shape))
    return doc, sites


def mutants(b, count=100, seed=0):
    """Yield ``count`` deterministic single-entry mutations of ``b``.

    Sites are drawn without replacement from a seeded permutation; when an
    example has fewer sites than ``count`` the sweep repeats with a larger
    shift.  Each item is (site, shift, Built or the exception raised while
    rebuilding).
    """
    from .cli import UsageError, load_doc
    doc, sites = mutation_sites(b)
    F = b.data.field
    order = np.random.default_rng(seed).permutation(len(sites))
    for n in range(count):
        name, idx = sites[order[n % len(sites)]]
        shift = 1 + n // len(sites)
        if F.p is not None and shift % F.p == 0:
            shift += 1
        mdoc = copy.deepcopy(doc)
        t = mdoc["tensors"][name]
        cell = t
        for i in idx[:-1]:
            cell = cell[i]
        if idx:
            cell[idx[-1]] = _shifted(cell[idx[-1]], shift, F)
        else:
            mdoc["tensors"][name] = _shifted(t, shift, F)
        try:
            out = load_doc(mdoc, f"mutant {name}{list(idx)}")
        except (UsageError, CertificationError, ArithmeticError) as exc:
            out = exc
        yield (name, idx), shift, out


def _shifted(x, shift, F):
    return int(F(x) + shift) % F.p if F.p is not None else F.fmt(F(x) + shift)

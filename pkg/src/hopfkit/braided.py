"""Braided Hopf algebras in three concrete braided categories.

A context is one of

* ``plain``: vector spaces with the flip,
* ``super``: Z/2-graded spaces with the signed flip,
* ``yd``: left-left Yetter-Drinfeld modules over an ordinary Hopf algebra H0,
  braided by c(m (x) n) = m_(-1) . n (x) m_(0).

Objects carry the decorations of their context and every structure map is
checked to be a morphism of the context.  Braidings are 4-leg tensors
``c[y', x', x, y]`` for phi_{X,Y}: X (x) Y -> Y (x) X; inverse braidings
``ci[x', y', y, x]`` for phi^-1_{X,Y}: Y (x) X -> X (x) Y.  Every string
diagram below is written out as one contraction.
"""

import numpy as np

from .core import (QQ, CertificationError, LinearMap, Report, ShapeError,
                   algebra_map_check, check_algebra, ein, invert_map, outer,
                   split_idempotent)


class ContextMismatch(ValueError):
    """Objects from different braided contexts were combined."""


KINDS = ("plain", "super", "yd")


class BraidedObject:
    """A finite-dimensional object with the decorations of its context."""

    def __init__(self, ctx, dim, grading=None, act=None, coact=None, labels=None):
        self.ctx = ctx
        self.dim = int(dim)
        self.grading = None if grading is None else [int(g) % 2 for g in grading]
        self.act = act
        self.coact = coact
        self.labels = list(labels) if labels else [f"e{i}" for i in range(self.dim)]

    def __repr__(self):
        return f"BraidedObject({self.ctx.kind}, dim={self.dim})"


class BraidedContext:
    """One of the three shipped braided categories over a common field."""

    def __init__(self, kind="plain", hopf=None, field=None):
        if kind not in KINDS:
            raise ValueError(f"unknown context kind {kind!r}; expected one of {KINDS}")
        if kind == "yd" and hopf is None:
            raise ValueError("a yd context needs the ordinary Hopf algebra H0")
        if field is None:
            field = hopf.field if hopf is not None else QQ
        self.kind = kind
        self.hopf = hopf
        self.field = field
        if hopf is not None:
            rep = verify_ordinary_hopf(hopf)
            rep.require()

    def __repr__(self):
        return f"BraidedContext({self.kind!r})"

    def spec(self):
        d = {"kind": self.kind}
        if self.hopf is not None:
            d["hopf_dim"] = self.hopf.dim
        return d

    # -- objects --------------------------------------------------------

    def obj(self, dim, grading=None, act=None, coact=None, labels=None, check=True):
        F = self.field
        if self.kind == "super":
            if grading is None:
                grading = [0] * dim
            if len(grading) != dim:
                raise ShapeError(f"grading has length {len(grading)}, expected {dim}")
        if self.kind == "yd":
            d0 = self.hopf.dim
            act = F.array(act)
            coact = F.array(coact)
            if act.shape != (dim, d0, dim) or coact.shape != (d0, dim, dim):
                raise ShapeError(f"yd decorations have shapes {act.shape} and {coact.shape}")
        X = BraidedObject(self, dim, grading, act, coact, labels)
        if check and self.kind == "yd":
            verify_yd_object(self, X).require()
        return X

    def unit_object(self):
        if self.kind == "yd":
            H0 = self.hopf
            return self.obj(1, act=H0.counit.reshape(1, -1, 1),
                            coact=H0.unit.reshape(-1, 1, 1), labels=["1"], check=False)
        return self.obj(1, grading=[0], labels=["1"])

    def _own(self, *objs):
        for X in objs:
            if X.ctx is not self:
                raise ContextMismatch(f"{X!r} does not belong to {self!r}")

    def tensor(self, *objs):
        """Tensor product object; the empty product is the unit object."""
        self._own(*objs)
        if not objs:
            return self.unit_object()
        out = objs[0]
        for Y in objs[1:]:
            out = self._tensor2(out, Y)
        return out

    def _tensor2(self, X, Y):
        F = self.field
        n = X.dim * Y.dim
        labels = [f"{a}|{b}" for a in X.labels for b in Y.labels]
        if self.kind == "plain":
            return BraidedObject(self, n, labels=labels)
        if self.kind == "super":
            g = [(a + b) % 2 for a in X.grading for b in Y.grading]
            return BraidedObject(self, n, grading=g, labels=labels)
        H0 = self.hopf
        act = ein("abh,xay,ubv->xuhyv", H0.delta, X.act, Y.act).reshape(n, H0.dim, n)
        coact = ein("hab,axy,buv->hxuyv", H0.mu, X.coact, Y.coact).reshape(H0.dim, n, n)
        return BraidedObject(self, n, act=F.norm(act), coact=F.norm(coact), labels=labels)

    # -- braiding -------------------------------------------------------

    def braid(self, X, Y):
        """phi_{X,Y} as ``c[y', x', x, y]``."""
        self._own(X, Y)
        F = self.field
        if self.kind == "yd":
            return F.norm(ein("hax,bhy->baxy", X.coact, Y.act))
        c = ein("ax,by->baxy", F.eye(X.dim), F.eye(Y.dim))
        if self.kind == "super":
            sign = np.array([[(-1) ** (gx * gy) for gy in Y.grading] for gx in X.grading],
                            dtype=object)
            c = c * sign[None, None, :, :]
        return F.norm(c)

    def braid_inv(self, X, Y):
        """phi^-1_{X,Y}: Y (x) X -> X (x) Y as ``ci[x', y', y, x]``."""
        self._own(X, Y)
        F = self.field
        if self.kind == "yd":
            return F.norm(ein("hax,gh,bgy->abyx", X.coact, self.hopf.S_inv, Y.act))
        return self.braid(Y, X)

    # -- morphisms ------------------------------------------------------

    def as_matrix(self, f, dom, cod):
        dom_dim = int(np.prod([X.dim for X in dom])) if dom else 1
        cod_dim = int(np.prod([X.dim for X in cod])) if cod else 1
        f = np.asarray(f, dtype=object)
        if f.size != dom_dim * cod_dim:
            raise ShapeError(f"map has {f.size} entries, expected {cod_dim}x{dom_dim}")
        return f.reshape(cod_dim, dom_dim)

    def check_morphism(self, rep, tag, f, dom, cod):
        """Record whether ``f`` (codomain legs first) is a morphism dom -> cod."""
        self._own(*dom, *cod)
        F = self.field
        m = self.as_matrix(f, dom, cod)
        X, Y = self.tensor(*dom), self.tensor(*cod)
        if self.kind == "plain":
            return rep.add(tag, True)
        if self.kind == "super":
            for r in range(m.shape[0]):
                for c in range(m.shape[1]):
                    if not F.is_zero(m[r, c]) and X.grading[c] != Y.grading[r]:
                        return rep.add(tag, False, witness=[c],
                                       note=f"maps a degree {X.grading[c]} basis vector "
                                            f"into degree {Y.grading[r]}")
            return rep.add(tag, True)
        ok = rep.check(tag, ein("pk,khm->phm", m, X.act), ein("phq,qm->phm", Y.act, m), 2, F)
        return rep.check(tag, ein("hpq,qm->hpm", Y.coact, m),
                         ein("pq,hqm->hpm", m, X.coact), 1, F) and ok

    def split_object(self, X, sp, rep=None, prefix="split-"):
        """The image object of a splitting (i, p) of an idempotent on X."""
        F = self.field
        i, p = sp.i.mat, sp.p.mat
        r = sp.rank
        labels = [f"s{k}" for k in range(r)]
        if self.kind == "plain":
            Y = self.obj(r, labels=labels)
        elif self.kind == "super":
            g = []
            for k in range(r):
                degs = {X.grading[j] for j in range(X.dim) if not F.is_zero(i[j, k])}
                if len(degs) > 1:
                    raise CertificationError(f"split basis vector {k} is not homogeneous")
                g.append(degs.pop() if degs else 0)
            Y = self.obj(r, grading=g, labels=labels)
        else:
            act = F.norm(ein("ak,khm,mb->ahb", p, X.act, i))
            coact = F.norm(ein("ak,hkm,mb->hab", p, X.coact, i))
            Y = self.obj(r, act=act, coact=coact, labels=labels, check=False)
            if rep is not None:
                rep.merge(verify_yd_object(self, Y), prefix=prefix + "object-")
        if rep is not None:
            self.check_morphism(rep, prefix + "morphism", i, [Y], [X])
            self.check_morphism(rep, prefix + "morphism", p, [X], [Y])
        return Y


# ---------------------------------------------------------------------------
# the ordinary Hopf algebra behind a yd context

def verify_ordinary_hopf(H0):
    """Classical Hopf axioms (flip braiding) for the base of a yd context."""
    F = H0.field
    m, u, D, e, S = H0.mu, H0.unit, H0.delta, H0.counit, H0.S
    rep = Report("base Hopf algebra")
    check_algebra(rep, m, u, F)
    rep.check("coassoc", ein("axk,bcx->abck", D, D),
              ein("xck,abx->abck", D, D), 1, F)
    rep.check("counit", ein("a,ajk->jk", e, D), F.eye(H0.dim), 1, F)
    rep.check("counit", ein("b,jbk->jk", e, D), F.eye(H0.dim), 1, F)
    rep.check("bialgebra", ein("pqk,kxy->pqxy", D, m),
              ein("abx,cdy,pac,qbd->pqxy", D, D, m, m), 2, F)
    rep.check("bialgebra", ein("k,kxy->xy", e, m), outer(e, e), 2, F)
    rep.check("antipode", ein("abx,sa,ksb->kx", D, S, m), outer(u, e), 1, F)
    rep.check("antipode", ein("abx,sb,kas->kx", D, S, m), outer(u, e), 1, F)
    rep.check("antipode-inverse", F.norm(S.dot(H0.S_inv)), F.eye(H0.dim), 1, F)
    return rep


def verify_yd_object(ctx, X):
    """Module, comodule and crossed compatibility of a yd decoration."""
    H0 = ctx.hopf
    F = ctx.field
    m, D, a, l = H0.mu, H0.delta, X.act, X.coact
    rep = Report("Yetter-Drinfeld object")
    rep.check("object-module", ein("kpa,phg->khga", a, m), ein("khp,pga->khga", a, a), 3, F)
    rep.check("object-module", ein("kha,h->ka", a, H0.unit), F.eye(X.dim), 1, F)
    rep.check("object-comodule", ein("pqh,hka->pqka", D, l), ein("pxa,qkx->pqka", l, l), 1, F)
    rep.check("object-comodule", ein("h,hka->ka", H0.counit, l), F.eye(X.dim), 1, F)
    rep.check("object-crossed", ein("abh,cxm,gac,kbx->gkhm", D, l, m, a),
              ein("abh,yam,cky,gcb->gkhm", D, a, l, m), 2, F)
    return rep


def verify_context(ctx, objects):
    """Invertibility of every braiding and both hexagons on the given objects."""
    F = ctx.field
    rep = Report(f"{ctx.kind} braiding")
    for X in objects:
        for Y in objects:
            c = ctx.as_matrix(ctx.braid(X, Y), [X, Y], [Y, X])
            ci = ctx.as_matrix(ctx.braid_inv(X, Y), [Y, X], [X, Y])
            rep.check("braid-invertible", F.norm(ci.dot(c)), F.eye(X.dim * Y.dim), 1, F)
            rep.check("braid-invertible", F.norm(c.dot(ci)), F.eye(X.dim * Y.dim), 1, F)
            ctx.check_morphism(rep, "braid-morphism", c, [X, Y], [Y, X])
    for X in objects:
        for Y in objects:
            for Z in objects:
                XY, YZ = ctx.tensor(X, Y), ctx.tensor(Y, Z)
                lhs = ctx.braid(XY, Z).reshape(Z.dim, X.dim, Y.dim, X.dim, Y.dim, Z.dim)
                rhs = ein("rbyz,cAxr->cAbxyz", ctx.braid(Y, Z), ctx.braid(X, Z))
                rep.check("hexagon", lhs, rhs, 3, F)
                lhs = ctx.braid(X, YZ).reshape(Y.dim, Z.dim, X.dim, X.dim, Y.dim, Z.dim)
                rhs = ein("bAxy,cBAz->bcBxyz", ctx.braid(X, Y), ctx.braid(X, Z))
                rep.check("hexagon", lhs, rhs, 3, F)
    return rep


# ---------------------------------------------------------------------------
# data

class BraidedAlgebraData:
    def __init__(self, ctx, obj, mu, unit, labels=None, name=""):
        F = ctx.field
        self.ctx = ctx
        self.obj = obj
        self.field = F
        self.mu = F.array(mu)
        self.unit = F.array(unit)
        self.dim = obj.dim
        if self.mu.shape != (self.dim,) * 3 or self.unit.shape != (self.dim,):
            raise ShapeError(f"algebra tensors have shapes {self.mu.shape}, {self.unit.shape}"
                             f" for an object of dimension {self.dim}")
        self.labels = list(labels) if labels else list(obj.labels)
        self.name = name


class BraidedHopfAlgebraData(BraidedAlgebraData):
    def __init__(self, ctx, obj, mu, unit, delta, counit, S, S_inv=None, labels=None, name=""):
        super().__init__(ctx, obj, mu, unit, labels, name)
        F = ctx.field
        n = self.dim
        self.delta = F.array(delta)
        self.counit = F.array(counit)
        self.S = F.array(S)
        if self.delta.shape != (n, n, n) or self.counit.shape != (n,) or self.S.shape != (n, n):
            raise ShapeError("coalgebra or antipode tensors do not match the carrier")
        self.S_inv = F.array(S_inv) if S_inv is not None else invert_map(LinearMap(self.S, F)).mat

    def tensors(self):
        return {"mu": self.mu, "unit": self.unit, "delta": self.delta,
                "counit": self.counit, "S": self.S, "S_inv": self.S_inv}


class BraidedModuleAlgebraData(BraidedAlgebraData):
    """An algebra with a left H-action ``act[k, h, a]`` and optional left
    coaction ``coact[h, a', a]``."""

    def __init__(self, ctx, obj, mu, unit, act, coact=None, labels=None, name=""):
        super().__init__(ctx, obj, mu, unit, labels, name)
        self.act = ctx.field.array(act)
        self.coact = None if coact is None else ctx.field.array(coact)

    def tensors(self):
        t = {"mu": self.mu, "unit": self.unit, "act": self.act}
        if self.coact is not None:
            t["coact"] = self.coact
        return t


class BraidedYDModuleData:
    def __init__(self, ctx, obj, act, coact, labels=None, name=""):
        self.ctx = ctx
        self.obj = obj
        self.field = ctx.field
        self.dim = obj.dim
        self.act = ctx.field.array(act)
        self.coact = ctx.field.array(coact)
        self.labels = list(labels) if labels else list(obj.labels)
        self.name = name


class BraidedBicomoduleAlgebraData(BraidedAlgebraData):
    """Left coaction ``lam[h, b', b]``, right coaction ``rho[b', h, b]`` and an
    optional algebra map ``v[b, h]`` from H."""

    def __init__(self, ctx, obj, mu, unit, lam=None, rho=None, v=None, labels=None, name=""):
        super().__init__(ctx, obj, mu, unit, labels, name)
        F = ctx.field
        self.lam = None if lam is None else F.array(lam)
        self.rho = None if rho is None else F.array(rho)
        self.v = None if v is None else F.array(v)

    def tensors(self):
        t = {"mu": self.mu, "unit": self.unit}
        for k in ("lam", "rho", "v"):
            if getattr(self, k) is not None:
                t[k] = getattr(self, k)
        return t


class BraidedHopfBimoduleData:
    """Actions ``left[k, h, m]``, ``right[k, m, h]`` and coactions; ``lam`` is
    None for a two-fold Hopf module."""

    def __init__(self, ctx, obj, left, right, rho, lam=None, labels=None, name=""):
        F = ctx.field
        self.ctx = ctx
        self.obj = obj
        self.field = F
        self.dim = obj.dim
        self.left = F.array(left)
        self.right = F.array(right)
        self.rho = F.array(rho)
        self.lam = None if lam is None else F.array(lam)
        self.labels = list(labels) if labels else list(obj.labels)
        self.name = name


def hopf_from_classical(ctx, H, grading=None, act=None, coact=None):
    """Wrap an ordinary Hopf algebra (any object with mu, unit, delta, counit,
    S, S_inv) as a braided Hopf algebra of ``ctx``."""
    obj = ctx.obj(H.dim, grading=grading, act=act, coact=coact, labels=H.labels)
    return BraidedHopfAlgebraData(ctx, obj, H.mu, H.unit, H.delta, H.counit, H.S, H.S_inv,
                                  name=getattr(H, "name", ""))


def _same_ctx(ctx, *things):
    for t in things:
        if t.ctx is not ctx:
            raise ContextMismatch(f"{getattr(t, 'name', t)!r} lives in another context")


# ---------------------------------------------------------------------------
# braided Hopf algebras

def verify_braided_hopf(ctx, H):
    """Algebra, coalgebra, bialgebra, antipode and morphism checks."""
    _same_ctx(ctx, H)
    F = ctx.field
    m, u, D, e, S = H.mu, H.unit, H.delta, H.counit, H.S
    X = H.obj
    c = ctx.braid(X, X)
    rep = Report(f"braided Hopf algebra {H.name}".strip())
    check_algebra(rep, m, u, F)
    rep.check("coassoc", ein("axk,bcx->abck", D, D), ein("xck,abx->abck", D, D), 1, F)
    rep.check("counit", ein("a,ajk->jk", e, D), F.eye(H.dim), 1, F)
    rep.check("counit", ein("b,jbk->jk", e, D), F.eye(H.dim), 1, F)
    rep.check("eqbialgebra", ein("pqk,kxy->pqxy", D, m),
              ein("abx,cdy,CBbc,paC,qBd->pqxy", D, D, c, m, m), 2, F)
    rep.check("eqbialgebra", ein("k,kxy->xy", e, m), outer(e, e), 2, F)
    rep.check("bialgebra-unit", ein("pqk,k->pq", D, u), outer(u, u), 0, F)
    rep.check("bialgebra-unit", np.array(F(e.dot(u)), dtype=object), np.array(1, dtype=object),
              0, F)
    rep.check("eqantipode", ein("abx,sa,ksb->kx", D, S, m), outer(u, e), 1, F)
    rep.check("eqantipode", ein("abx,sb,kas->kx", D, S, m), outer(u, e), 1, F)
    rep.check("antipode-inverse", F.norm(S.dot(H.S_inv)), F.eye(H.dim), 1, F)
    rep.check("antipode-inverse", F.norm(H.S_inv.dot(S)), F.eye(H.dim), 1, F)
    for f, dom, cod in ((m, [X, X], [X]), (u, [], [X]), (D, [X], [X, X]), (e, [X], []),
                        (S, [X], [X]), (H.S_inv, [X], [X])):
        ctx.check_morphism(rep, "ctx-morphism", f, dom, cod)
    return rep


def braided_tensor_algebra(ctx, A, B):
    """Multiplication of A (x) B with (a (x) b)(a' (x) b') = a a'' (x) b'' b'."""
    c = ctx.braid(B.obj, A.obj)
    n = A.dim * B.dim
    t = ein("ABxy,kaA,lBb->klaxyb", c, A.mu, B.mu)
    return ctx.field.norm(t.reshape(n, n, n))


# ---------------------------------------------------------------------------
# modules, comodules, Yetter-Drinfeld modules

def _check_module(rep, tag, act, H, F):
    rep.check(tag, ein("kpa,phg->khga", act, H.mu), ein("khp,pga->khga", act, act), 3, F)
    rep.check(tag, ein("kha,h->ka", act, H.unit), F.eye(act.shape[0]), 1, F)


def _check_left_comodule(rep, tag, lam, H, F):
    rep.check(tag, ein("pqh,hka->pqka", H.delta, lam), ein("pxa,qkx->pqka", lam, lam), 1, F)
    rep.check(tag, ein("h,hka->ka", H.counit, lam), F.eye(lam.shape[1]), 1, F)


def _check_right_comodule(rep, tag, rho, H, F):
    rep.check(tag, ein("kpx,xqa->kpqa", rho, rho), ein("kxa,pqx->kpqa", rho, H.delta), 1, F)
    rep.check(tag, ein("kha,h->ka", rho, H.counit), F.eye(rho.shape[0]), 1, F)


def verify_braided_module_algebra(ctx, H, A):
    _same_ctx(ctx, H, A)
    F = ctx.field
    rep = Report(f"braided module algebra {A.name}".strip())
    check_algebra(rep, A.mu, A.unit, F)
    _check_module(rep, "module", A.act, H, F)
    c = ctx.braid(H.obj, A.obj)
    rep.check("eqmodulealgebra", ein("khp,pab->khab", A.act, A.mu),
              ein("xyh,AYya,uxA,wYb,kuw->khab", H.delta, c, A.act, A.act, A.mu), 3, F)
    rep.check("eqmodulealgebra", ein("khp,p->kh", A.act, A.unit), outer(A.unit, H.counit), 1, F)
    X, Y = H.obj, A.obj
    for f, dom, cod in ((A.mu, [Y, Y], [Y]), (A.unit, [], [Y]), (A.act, [X, Y], [Y])):
        ctx.check_morphism(rep, "ctx-morphism", f, dom, cod)
    return rep


def _left_comodule_algebra(rep, ctx, H, obj, mu, unit, lam):
    F = ctx.field
    _check_left_comodule(rep, "left-comodule", lam, H, F)
    c = ctx.braid(obj, H.obj)
    rep.check("eqleftcomodulealgebra", ein("hkp,pab->hkab", lam, mu),
              ein("uxa,wyb,WXxw,huW,kXy->hkab", lam, lam, c, H.mu, mu), 2, F)
    rep.check("eqleftcomodulealgebra", ein("hkp,p->hk", lam, unit), outer(H.unit, unit), 0, F)
    ctx.check_morphism(rep, "ctx-morphism", lam, [obj], [H.obj, obj])


def _right_comodule_algebra(rep, ctx, H, obj, mu, unit, rho):
    F = ctx.field
    _check_right_comodule(rep, "right-comodule", rho, H, F)
    c = ctx.braid(H.obj, obj)
    rep.check("eqrightcomodulealgebra", ein("khp,pab->khab", rho, mu),
              ein("xua,ywb,YUuy,kxY,hUw->khab", rho, rho, c, mu, H.mu), 2, F)
    rep.check("eqrightcomodulealgebra", ein("khp,p->kh", rho, unit), outer(unit, H.unit), 0, F)
    ctx.check_morphism(rep, "ctx-morphism", rho, [obj], [obj, H.obj])


def verify_braided_comodule_algebra(ctx, H, B, side="left"):
    """Left or right comodule algebra laws for ``B.lam`` or ``B.rho``."""
    _same_ctx(ctx, H, B)
    rep = Report(f"braided {side} comodule algebra {B.name}".strip())
    check_algebra(rep, B.mu, B.unit, ctx.field)
    if side == "left":
        _left_comodule_algebra(rep, ctx, H, B.obj, B.mu, B.unit, B.lam)
    elif side == "right":
        _right_comodule_algebra(rep, ctx, H, B.obj, B.mu, B.unit, B.rho)
    else:
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    return rep


def _check_v(rep, ctx, H, B, v):
    F = ctx.field
    algebra_map_check(rep, "v-algebra", v, H.mu, H.unit, B.mu, B.unit, F)
    if B.lam is not None:
        rep.check("v-left-colinear", ein("hbx,xg->hbg", B.lam, v),
                  ein("hyg,by->hbg", H.delta, v), 1, F)
    if B.rho is not None:
        rep.check("v-right-colinear", ein("bhx,xg->bhg", B.rho, v),
                  ein("yhg,by->bhg", H.delta, v), 1, F)
    ctx.check_morphism(rep, "v-ctx-morphism", v, [H.obj], [B.obj])


def verify_braided_bicomodule_algebra(ctx, H, B):
    _same_ctx(ctx, H, B)
    F = ctx.field
    rep = Report(f"braided bicomodule algebra {B.name}".strip())
    check_algebra(rep, B.mu, B.unit, F)
    X = B.obj
    for f, dom, cod in ((B.mu, [X, X], [X]), (B.unit, [], [X])):
        ctx.check_morphism(rep, "ctx-morphism", f, dom, cod)
    _left_comodule_algebra(rep, ctx, H, X, B.mu, B.unit, B.lam)
    _right_comodule_algebra(rep, ctx, H, X, B.mu, B.unit, B.rho)
    rep.check("bicomodule", ein("hxa,kgx->hkga", B.lam, B.rho),
              ein("xga,hkx->hkga", B.rho, B.lam), 1, F)
    if B.v is not None:
        _check_v(rep, ctx, H, B, B.v)
    return rep


def braided_regular_bicomodule(ctx, H):
    """H over itself: both coactions are Delta and v = id."""
    F = ctx.field
    return BraidedBicomoduleAlgebraData(ctx, H.obj, H.mu, H.unit, H.delta, H.delta,
                                        F.eye(H.dim), labels=H.labels, name=f"{H.name}-regular")


def _check_eqyd(rep, ctx, H, obj, act, coact):
    F = ctx.field
    cHH = ctx.braid(H.obj, H.obj)
    cHM = ctx.braid(H.obj, obj)
    cMH = ctx.braid(obj, H.obj)
    lhs = ein("abh,cxm,CBbc,gaC,kBx->gkhm", H.delta, coact, cHH, H.mu, act)
    rhs = ein("abh,yBbm,zay,uwz,UWwB,guU->gWhm", H.delta, cHM, act, coact, cMH, H.mu)
    rep.check("eqyd", lhs, rhs, 2, F)


def verify_braided_yd(ctx, H, M):
    """Module, comodule and the crossed relation for a braided YD module."""
    _same_ctx(ctx, H, M)
    F = ctx.field
    rep = Report(f"braided Yetter-Drinfeld module {M.name}".strip())
    _check_module(rep, "module", M.act, H, F)
    _check_left_comodule(rep, "comodule", M.coact, H, F)
    _check_eqyd(rep, ctx, H, M.obj, M.act, M.coact)
    ctx.check_morphism(rep, "ctx-morphism", M.act, [H.obj, M.obj], [M.obj])
    ctx.check_morphism(rep, "ctx-morphism", M.coact, [M.obj], [H.obj, M.obj])
    return rep


def verify_braided_yd_algebra(ctx, H, A):
    """A left module algebra and left comodule algebra satisfying the crossed relation."""
    rep = verify_braided_module_algebra(ctx, H, A)
    rep.title = f"braided YD module algebra {A.name}".strip()
    if A.coact is None:
        rep.add("comodule", False, note="no coaction given")
        return rep
    _left_comodule_algebra(rep, ctx, H, A.obj, A.mu, A.unit, A.coact)
    _check_eqyd(rep, ctx, H, A.obj, A.act, A.coact)
    return rep


def yd_braiding(ctx, H, M, N, rep=None):
    """Braiding of two braided YD modules and its inverse, certified inverse
    to each other.  ``c[n', m', m, n]`` and ``ci[m', n', n, m]``."""
    _same_ctx(ctx, H, M, N)
    F = ctx.field
    c = F.norm(ein("hxm,yMxn,ohy->oMmn", M.coact, ctx.braid(M.obj, N.obj), N.act))
    ci = F.norm(ein("hxm,XGhx,sG,ZqnX,Trqs,oTr->Zonm", M.coact, ctx.braid_inv(M.obj, H.obj),
                    H.S_inv, ctx.braid_inv(M.obj, N.obj), ctx.braid_inv(H.obj, N.obj), N.act))
    rep = rep if rep is not None else Report("YD braiding")
    n = M.dim * N.dim
    cm, cim = c.reshape(n, n), ci.reshape(n, n)
    rep.check("yd-braid-inverse", F.norm(cim.dot(cm)), F.eye(n), 1, F)
    rep.check("yd-braid-inverse", F.norm(cm.dot(cim)), F.eye(n), 1, F)
    if not rep.verdict("yd-braid-inverse"):
        raise CertificationError("YD braiding is not invertible", rep, "yd-braid-inverse")
    return c, ci


# ---------------------------------------------------------------------------
# smash products

def braided_smash_mult(ctx, H, A):
    """Multiplication of A#H on the basis a (x) h -> a*dimH + h."""
    c = ctx.braid(H.obj, A.obj)
    t = ein("pqg,xQqb,ypx,kay,lQh->klagbh", H.delta, c, A.act, A.mu, H.mu)
    n = A.dim * H.dim
    return ctx.field.norm(t.reshape(n, n, n))


def braided_smash(ctx, H, A, check=True):
    """A#H as a braided algebra on the object A (x) H."""
    _same_ctx(ctx, H, A)
    F = ctx.field
    if check:
        verify_braided_module_algebra(ctx, H, A).require()
    mu = braided_smash_mult(ctx, H, A)
    unit = F.norm(outer(A.unit, H.unit).reshape(-1))
    S = BraidedAlgebraData(ctx, ctx.tensor(A.obj, H.obj), mu, unit, name=f"{A.name}#{H.name}")
    if check:
        rep = check_algebra(Report("braided smash product"), mu, unit, F)
        ctx.check_morphism(rep, "ctx-morphism", mu, [S.obj, S.obj], [S.obj])
        rep.require()
    return S


def _smash_coactions(ctx, H, obj, coact):
    """lambda and rho on obj (x) H built from a left coaction on obj."""
    F = ctx.field
    k, d = obj.dim, H.dim
    n = k * d
    c = ctx.braid(obj, H.obj)
    lam = ein("cxa,pqh,PXxp,ucP->uXqah", coact, H.delta, c, H.mu).reshape(d, n, n)
    rho = ein("ab,qgh->aqgbh", F.eye(k), H.delta).reshape(n, d, n)
    return F.norm(lam), F.norm(rho)


def braided_yd_smash_bicomodule(ctx, H, A, check=True):
    """A#H with its two coactions and v = unit of A (x) id; all laws certified."""
    F = ctx.field
    if check:
        verify_braided_yd_algebra(ctx, H, A).require()
    S = braided_smash(ctx, H, A, check=False)
    lam, rho = _smash_coactions(ctx, H, A.obj, A.coact)
    v = F.norm(ein("a,hg->ahg", A.unit, F.eye(H.dim)).reshape(S.dim, H.dim))
    B = BraidedBicomoduleAlgebraData(ctx, S.obj, S.mu, S.unit, lam, rho, v,
                                     labels=[f"{a}#{h}" for a in A.labels for h in H.labels],
                                     name=S.name)
    if check:
        verify_braided_bicomodule_algebra(ctx, H, B).require()
    return B


# ---------------------------------------------------------------------------
# Hopf modules, coinvariants and the adjoint action

def bistwofold(ctx, H, B, v=None):
    """B as a two-fold Hopf module: h . b = v(h) b and b . h = b v(h)."""
    v = B.v if v is None else ctx.field.array(v)
    left = ein("kxb,xh->khb", B.mu, v)
    right = ein("kbx,xh->kbh", B.mu, v)
    return BraidedHopfBimoduleData(ctx, B.obj, ctx.field.norm(left), ctx.field.norm(right),
                                   B.rho, lam=B.lam, labels=B.labels, name=B.name)


def verify_twofold(ctx, H, M, rep=None):
    """Bimodule laws and colinearity of both actions for the right coaction."""
    F = ctx.field
    rep = rep if rep is not None else Report("two-fold Hopf module")
    L, R, rho = M.left, M.right, M.rho
    _check_module(rep, "twofold-left-module", L, H, F)
    rep.check("twofold-right-module", ein("kbh,hxy->kbxy", R, H.mu),
              ein("kpy,pbx->kbxy", R, R), 3, F)
    rep.check("twofold-right-module", ein("kbh,h->kb", R, H.unit), F.eye(M.dim), 1, F)
    rep.check("twofold-bimodule", ein("khp,pbg->khbg", L, R), ein("kpg,phb->khbg", R, L), 3, F)
    _check_right_comodule(rep, "twofold-right-comodule", rho, H, F)
    cHH = ctx.braid(H.obj, H.obj)
    rep.check("twofold-right-hopf", ein("kgx,xbh->kgbh", rho, R),
              ein("xub,pqh,PUup,kxP,gUq->kgbh", rho, H.delta, cHH, R, H.mu), 2, F)
    cHB = ctx.braid(H.obj, M.obj)
    rep.check("twofold-left-hopf", ein("kgx,xhb->kghb", rho, L),
              ein("pqh,xub,XQqx,kpX,gQu->kghb", H.delta, rho, cHB, L, H.mu), 2, F)
    return rep


def verify_braided_hopf_bimodule(ctx, H, M):
    """Two-fold Hopf module laws plus a left coaction compatible with both actions."""
    F = ctx.field
    rep = verify_twofold(ctx, H, M, Report("braided Hopf bimodule"))
    L, R, lam, rho = M.left, M.right, M.lam, M.rho
    _check_left_comodule(rep, "left-comodule", lam, H, F)
    rep.check("bicomodule", ein("hxa,kgx->hkga", lam, rho), ein("xga,hkx->hkga", rho, lam), 1, F)
    cHH = ctx.braid(H.obj, H.obj)
    rep.check("left-hopf-left", ein("gkx,xhm->gkhm", lam, L),
              ein("abh,cxm,CBbc,gaC,kBx->gkhm", H.delta, lam, cHH, H.mu, L), 2, F)
    cMH = ctx.braid(M.obj, H.obj)
    rep.check("left-hopf-right", ein("gkx,xmh->gkmh", lam, R),
              ein("cxm,abh,AXxa,gcA,kXb->gkmh", lam, H.delta, cMH, H.mu, R), 2, F)
    X, Hx = M.obj, H.obj
    for f, dom, cod in ((L, [Hx, X], [X]), (R, [X, Hx], [X]), (lam, [X], [Hx, X]),
                        (rho, [X], [X, Hx])):
        ctx.check_morphism(rep, "ctx-morphism", f, dom, cod)
    return rep


def braided_projector(ctx, H, M):
    """E = mu+ o (B (x) S) o rho."""
    return ctx.field.norm(ein("xhb,sh,kxs->kb", M.rho, H.S, M.right))


def adjoint_action(ctx, H, M):
    """ad(h (x) b) = (h_1 . b') . S(h_2') with (b', h_2') the braiding of h_2 (x) b."""
    c = ctx.braid(H.obj, M.obj)
    return ctx.field.norm(ein("pqh,XQqb,ypX,sQ,kys->khb", H.delta, c, M.left, H.S, M.right))


def braided_coinvariants(ctx, H, M, rep=None):
    """Returns (E, splitting, ad, ad0); the projector laws go into ``rep``."""
    F = ctx.field
    rep = rep if rep is not None else Report("braided coinvariants")
    E = braided_projector(ctx, H, M)
    rep.check("defe", F.norm(E.dot(E)), E, 1, F)
    sp = split_idempotent(LinearMap(E, F))
    i, p = sp.i.mat, sp.p.mat
    rep.check("eqip", F.norm(p.dot(i)), F.eye(sp.rank), 1, F)
    rep.check("eqip", F.norm(i.dot(p)), E, 1, F)
    rep.check("iequalizer", ein("kgx,xa->kga", M.rho, i), ein("ka,g->kga", i, H.unit), 1, F)
    rep.check("pcoequalizer", ein("ax,xbh->abh", p, M.right), ein("ab,h->abh", p, H.counit), 2, F)
    rep.check("pcoequalizer", ein("ax,xyh,yb->abh", p, M.right, i),
              ein("ab,h->abh", F.eye(sp.rank), H.counit), 2, F)
    ad = adjoint_action(ctx, H, M)
    Ead = ein("kx,xhb->khb", E, ad)
    rep.check("eqead", Ead, ein("kx,xhb->khb", E, M.left), 2, F)
    rep.check("eqead", Ead, ein("khx,xb->khb", ad, E), 2, F)
    rep.check("eqead", ein("ax,xhb->ahb", p, ad), ein("ax,xhb->ahb", p, M.left), 2, F)
    ad0 = F.norm(ein("ak,khx,xb->ahb", p, ad, i))
    rep.check("eqiad", ein("ka,ahb->khb", i, ad0), ein("khx,xb->khb", ad, i), 2, F)
    return E, sp, ad, ad0


def braided_hopf_bimodule_from_yd(ctx, H, V):
    """V (x) H with the actions and coactions built from the YD module V."""
    F = ctx.field
    k, d = V.dim, H.dim
    n = k * d
    c = ctx.braid(H.obj, V.obj)
    left = ein("pqh,yQqv,wpy,xQg->wxhvg", H.delta, c, V.act, H.mu).reshape(n, d, n)
    right = ein("wv,shb->wsvhb", F.eye(k), H.mu).reshape(n, n, d)
    lam, rho = _smash_coactions(ctx, H, V.obj, V.coact)
    return BraidedHopfBimoduleData(ctx, ctx.tensor(V.obj, H.obj), F.norm(left), F.norm(right),
                                   rho, lam=lam,
                                   labels=[f"{a}|{h}" for a in V.labels for h in H.labels])


def _inherited(ctx, H, M, sp, ad0, rep):
    """YD module on M_0: adjoint action and the coaction (H (x) p) lambda i."""
    F = ctx.field
    i, p = sp.i.mat, sp.p.mat
    obj = ctx.split_object(M.obj, sp, rep)
    coact = F.norm(ein("ax,hxy,yb->hab", p, M.lam, i))
    rep.check("eqinherited", ein("xa,hab->hxb", i, coact), ein("hxy,yb->hxb", M.lam, i), 1, F)
    return obj, coact


def _hopf_bimodule_morphism(rep, prefix, f, M, N, F):
    rep.check(prefix + "left", ein("pk,khm->phm", f, M.left), ein("phq,qm->phm", N.left, f), 2, F)
    rep.check(prefix + "right", ein("pk,kmh->pmh", f, M.right),
              ein("pqh,qm->pmh", N.right, f), 2, F)
    rep.check(prefix + "lambda", ein("hpq,qm->hpm", N.lam, f), ein("pq,hqm->hpm", f, M.lam), 1, F)
    rep.check(prefix + "rho", ein("phq,qm->phm", N.rho, f), ein("pq,qhm->phm", f, M.rho), 1, F)


def _certify_inverse(rep, tag, f, F):
    try:
        finv = invert_map(LinearMap(f, F)).mat
    except ArithmeticError:
        rep.add(tag, False, note="singular")
        raise CertificationError(f"{tag}: map is singular", rep, tag)
    rep.check(tag, F.norm(finv.dot(f)), F.eye(f.shape[1]), 1, F)
    rep.check(tag, F.norm(f.dot(finv)), F.eye(f.shape[0]), 1, F)
    return finv


def braided_decompose(ctx, H, M, check=True):
    """Coinvariants of a Hopf bimodule as a YD module V with nu: V (x) H ~ M.
    Returns (V, nu, nu_inv, report, splitting)."""
    F = ctx.field
    rep = verify_braided_hopf_bimodule(ctx, H, M)
    rep.title = "decomposition of a braided Hopf bimodule"
    if check:
        rep.require()
    E, sp, ad, ad0 = braided_coinvariants(ctx, H, M, rep)
    obj, coact = _inherited(ctx, H, M, sp, ad0, rep)
    V = BraidedYDModuleData(ctx, obj, ad0, coact, name="M0")
    rep.merge(verify_braided_yd(ctx, H, V), prefix="V:")
    nu = F.norm(ein("nkh,kb->nbh", M.right, sp.i.mat).reshape(M.dim, V.dim * H.dim))
    nu_inv = _certify_inverse(rep, "nu-invertible", nu, F)
    _hopf_bimodule_morphism(rep, "nu-", nu, braided_hopf_bimodule_from_yd(ctx, H, V), M, F)
    if check:
        rep.require()
    return V, nu, nu_inv, rep, sp


# ---------------------------------------------------------------------------
# structure theorems

def braided_right_structure(ctx, H, B, v=None, check=True):
    """B ~ B0#H as right comodule algebras for a right comodule algebra B with
    a colinear algebra map v: H -> B."""
    _same_ctx(ctx, H, B)
    F = ctx.field
    v = B.v if v is None else F.array(v)
    if v is None:
        raise ValueError("no algebra map v: H -> B given")
    rep = Report("braided right structure")
    sub = Report()
    check_algebra(sub, B.mu, B.unit, F)
    _right_comodule_algebra(sub, ctx, H, B.obj, B.mu, B.unit, B.rho)
    rep.merge(sub, prefix="B:")
    Bv = BraidedBicomoduleAlgebraData(ctx, B.obj, B.mu, B.unit, None, B.rho, v)
    _check_v(rep, ctx, H, Bv, v)
    if check:
        rep.require()
    M = bistwofold(ctx, H, B, v)
    verify_twofold(ctx, H, M, rep)
    E, sp, ad, ad0 = braided_coinvariants(ctx, H, M, rep)
    i, p = sp.i.mat, sp.p.mat
    obj = ctx.split_object(B.obj, sp, rep)
    cHB = ctx.braid(H.obj, B.obj)
    rep.check("eqbmodalg", ein("khx,xab->khab", ad, B.mu),
              ein("pqh,XQqa,upX,wQb,kuw->khab", H.delta, cHB, ad, ad, B.mu), 3, F)
    mu0 = F.norm(ein("ak,kxy,xb,yc->abc", p, B.mu, i, i))
    unit0 = F.norm(p.dot(B.unit))
    rep.check("eqinabla", ein("ka,abc->kbc", i, mu0), ein("kxy,xb,yc->kbc", B.mu, i, i), 2, F)
    rep.check("eqinabla", F.norm(i.dot(unit0)), B.unit, 0, F)
    rep.check("eqvi", ein("kx,xyz,yh,za->kha", E, B.mu, v, i), ein("khx,xa->kha", ad, i), 2, F)
    A = BraidedModuleAlgebraData(ctx, obj, mu0, unit0, ad0, name="B0")
    rep.merge(verify_braided_module_algebra(ctx, H, A), prefix="B0:")
    if check:
        rep.require()
    S = braided_smash(ctx, H, A, check=False)
    rep.merge(check_algebra(Report(), S.mu, S.unit, F), prefix="B0#H:")
    omega = F.norm(ein("bxy,xa,yh->bah", B.mu, i, v).reshape(B.dim, A.dim * H.dim))
    omega_inv = F.norm(ein("ax,xhb->ahb", p, B.rho).reshape(A.dim * H.dim, B.dim))
    rep.check("omega-inverse", F.norm(omega_inv.dot(omega)), F.eye(A.dim * H.dim), 1, F)
    rep.check("omega-inverse", F.norm(omega.dot(omega_inv)), F.eye(B.dim), 1, F)
    _, rhoS = _smash_coactions(ctx, H, obj, F.zeros((H.dim, A.dim, A.dim)))
    rep.check("omegarightcolinear", ein("kgx,xc->kgc", B.rho, omega),
              ein("kx,xgc->kgc", omega, rhoS), 1, F)
    algebra_map_check(rep, "omega-multiplicative", omega, S.mu, S.unit, B.mu, B.unit, F)
    ctx.check_morphism(rep, "omega-ctx-morphism", omega, [S.obj], [B.obj])
    if check:
        rep.require()
    return {"A": A, "omega": omega, "omega_inv": omega_inv, "splitting": sp, "E": E,
            "ad": ad, "ad0": ad0, "smash": S, "twofold": M, "report": rep}


def structure_theorem_braided(ctx, H, B, v=None, check=True):
    """B ~ B0#H as bicomodule algebras.  Returns the dict of
    ``braided_right_structure`` with A now a YD module algebra, the
    bicomodule smash product and the merged report."""
    _same_ctx(ctx, H, B)
    F = ctx.field
    v = B.v if v is None else F.array(v)
    if v is None:
        raise ValueError("no algebra map v: H -> B given")
    rep = Report("structure theorem (braided)")
    Bv = BraidedBicomoduleAlgebraData(ctx, B.obj, B.mu, B.unit, B.lam, B.rho, v, name=B.name)
    rep.merge(verify_braided_bicomodule_algebra(ctx, H, Bv), prefix="B:")
    if check:
        rep.require()
    out = braided_right_structure(ctx, H, Bv, v, check=check)
    rep.merge(out["report"])
    sp = out["splitting"]
    A0 = out["A"]
    obj, coact = _inherited(ctx, H, bistwofold(ctx, H, Bv, v), sp, out["ad0"], rep)
    A = BraidedModuleAlgebraData(ctx, A0.obj, A0.mu, A0.unit, A0.act, coact, name="B0")
    rep.merge(verify_braided_yd_algebra(ctx, H, A), prefix="A:")
    if check:
        rep.require()
    S = braided_yd_smash_bicomodule(ctx, H, A, check=False)
    rep.merge(verify_braided_bicomodule_algebra(ctx, H, S), prefix="A#H:")
    omega = out["omega"]
    rep.check("omega-left-colinear", ein("hkx,xc->hkc", Bv.lam, omega),
              ein("kx,hxc->hkc", omega, S.lam), 1, F)
    if check:
        rep.require()
    out.update({"A": A, "smash": S, "report": rep})
    return out

"""Quasi-Hopf algebras: axioms, module algebras, smash products,
Yetter-Drinfeld structures, the coinvariant projector, the decomposition of
two-sided two-cosided bimodules and the structure theorem for bicomodule
algebras with a morphism from H.

Component notation: ``phi[a, b, c]`` holds the associator X1 (x) X2 (x) X3
and ``phi_inv`` its inverse x1 (x) x2 (x) x3.
"""

import numpy as np

from .core import (QQ, CertificationError, LinearMap, Report, ShapeError,
                   algebra_map_check, check_algebra, ein, invert_map, outer,
                   split_idempotent, tmul)


class QuasiHopfAlgebraData:
    def __init__(self, mu, unit, delta, counit, phi, phi_inv, S, S_inv, alpha, beta,
                 field=QQ, labels=None, normalize=True, name=""):
        F = field
        self.field = F
        self.name = name
        self.mu = F.array(mu)
        self.unit = F.array(unit)
        self.delta = F.array(delta)
        self.counit = F.array(counit)
        self.phi = F.array(phi)
        self.phi_inv = F.array(phi_inv)
        self.S = F.array(S)
        self.S_inv = F.array(S_inv)
        self.alpha = F.array(alpha)
        self.beta = F.array(beta)
        d = self.dim = self.unit.shape[0]
        shapes = {"mu": (d, d, d), "delta": (d, d, d), "counit": (d,), "phi": (d, d, d),
                  "phi_inv": (d, d, d), "S": (d, d), "S_inv": (d, d), "alpha": (d,), "beta": (d,)}
        for k, shp in shapes.items():
            if getattr(self, k).shape != shp:
                raise ShapeError(f"{k} has shape {getattr(self, k).shape}, expected {shp}")
        self.labels = list(labels) if labels else [f"h{i}" for i in range(d)]
        if normalize:
            ea = F(self.counit.dot(self.alpha))
            if not F.is_zero(ea) and ea != 1:
                self.alpha = F.norm(self.alpha * F.inv(ea))
                self.beta = F.norm(self.beta * ea)

    def mul3(self, x, y):
        m = self.mu
        return tmul([m, m, m], x, y)

    def mul4(self, x, y):
        m = self.mu
        return tmul([m, m, m, m], x, y)

    def tensors(self):
        return {k: getattr(self, k) for k in
                ("mu", "unit", "delta", "counit", "phi", "phi_inv", "S", "S_inv", "alpha", "beta")}

    @classmethod
    def from_hopf(cls, mu, unit, delta, counit, S, S_inv, field=QQ, labels=None, name=""):
        """Ordinary Hopf algebra: trivial associator, alpha = beta = 1."""
        unit = field.array(unit)
        one3 = outer(unit, unit, unit)
        return cls(mu, unit, delta, counit, one3, one3, S, S_inv, unit, unit,
                   field=field, labels=labels, name=name)


def verify_quasi_hopf(H):
    F, m, u, D, e = H.field, H.mu, H.unit, H.delta, H.counit
    P, Q, S, Si, al, be = H.phi, H.phi_inv, H.S, H.S_inv, H.alpha, H.beta
    d = H.dim
    I = F.eye(d)
    rep = Report("quasi-Hopf axioms")
    check_algebra(rep, m, u, F)
    rep.check("delta-mult", ein("ijp,pab->ijab", D, m),
              ein("ixy,jzw,xza,ywb->ijab", m, m, D, D), 2, F)
    rep.check("delta-mult", ein("ijk,k->ij", D, u), outer(u, u), 0, F)
    rep.check("counit-mult", ein("p,pab->ab", e, m), outer(e, e), 2, F)
    rep.check("counit-mult", np.array(e.dot(u)), np.array(1), 0, F)
    # (q1): quasi-coassociativity
    lhs = ein("aqh,bcq->abch", D, D)
    d2 = ein("qch,abq->abch", D, D)
    rep.check("q1", lhs, H.mul3(H.mul3(P, d2), Q), 1, F)
    # (q2)
    rep.check("q2", ein("ijh,j->ih", D, e), I, 1, F)
    rep.check("q2", ein("ijh,i->jh", D, e), I, 1, F)
    # (q3): pentagon
    left = H.mul4(H.mul4(outer(u, P), ein("aqd,bcq->abcd", P, D)), outer(P, u))
    right = H.mul4(ein("abq,cdq->abcd", P, D), ein("qcd,abq->abcd", P, D))
    rep.check("q3", left, right, 0, F)
    # (q4)
    uu = outer(u, u)
    rep.check("q4", ein("abc,a->bc", P, e), uu, 0, F)
    rep.check("q4", ein("abc,b->ac", P, e), uu, 0, F)
    rep.check("q4", ein("abc,c->ab", P, e), uu, 0, F)
    one3 = outer(u, u, u)
    rep.check("phi-inverse", H.mul3(P, Q), one3, 0, F)
    rep.check("phi-inverse", H.mul3(Q, P), one3, 0, F)
    # (q5)
    rep.check("q5", ein("krj,riq,q,ip,pjh->kh", m, m, al, S, D), outer(al, e), 1, F)
    rep.check("q5", ein("krs,riq,q,sj,ijh->kh", m, m, be, S, D), outer(be, e), 1, F)
    # (q6)
    rep.check("q6", ein("abc,xaq,q,yxs,sb,zyw,w,kzc->k", P, m, be, m, S, m, al, m), u, 0, F)
    rep.check("q6", ein("abc,sa,xsw,w,yxb,zyq,q,tc,kzt->k", Q, S, m, al, m, m, be, S, m), u, 0, F)
    # S is an anti-automorphism with the supplied inverse
    rep.check("antipode-antimult", ein("ip,pab->iab", S, m), ein("kxy,xb,ya->kab", m, S, S), 2, F)
    rep.check("antipode-antimult", S.dot(u), u, 0, F)
    rep.check("antipode-inverse", F.norm(S.dot(Si)), I, 1, F)
    rep.check("antipode-inverse", F.norm(Si.dot(S)), I, 1, F)
    rep.check("normalization", np.array([e.dot(al), e.dot(be)]), np.array([1, 1]), 0, F)
    rep.check("normalization", ein("p,pi->i", e, S), e, 1, F)
    return rep


# ---------------------------------------------------------------------------
# module algebras and smash products

class LeftModuleAlgebraData:
    """An algebra with a left H-action ``act[k, h, a]``; optionally a left
    coaction ``coact[h, b, a]`` making it a Yetter-Drinfeld algebra."""

    def __init__(self, mu, unit, act, coact=None, field=QQ, labels=None, name=""):
        F = field
        self.field = F
        self.name = name
        self.mu = F.array(mu)
        self.unit = F.array(unit)
        self.act = F.array(act)
        self.coact = None if coact is None else F.array(coact)
        self.dim = self.unit.shape[0]
        self.labels = list(labels) if labels else [f"a{i}" for i in range(self.dim)]

    def tensors(self):
        t = {"mu": self.mu, "unit": self.unit, "act": self.act}
        if self.coact is not None:
            t["coact"] = self.coact
        return t


def trivial_module_algebra(H):
    """The ground field with h.1 = eps(h)1 and coaction 1 -> 1 (x) 1."""
    F = H.field
    one = F.array([1])
    return LeftModuleAlgebraData(F.array([[[1]]]), one, H.counit.reshape(1, H.dim, 1),
                         outer(H.unit, one).reshape(H.dim, 1, 1), field=F, labels=["1"], name="k")


def _check_module(rep, tag, m, u, act, F):
    rep.check(tag, ein("kqa,qhg->khga", act, m), ein("khp,pga->khga", act, act), 3, F)
    rep.check(tag, ein("kha,h->ka", act, u), F.eye(act.shape[0]), 1, F)


def verify_module_algebra(H, A):
    F, m, D, e, P = H.field, H.mu, H.delta, H.counit, H.phi
    mA, uA, act = A.mu, A.unit, A.act
    rep = Report("module algebra")
    _check_module(rep, "module", m, H.unit, act, F)
    rep.check("unit", ein("kij,i->kj", mA, uA), F.eye(A.dim), 1, F)
    rep.check("unit", ein("kij,j->ki", mA, uA), F.eye(A.dim), 1, F)
    rep.check("ma1", ein("kpc,pab->kabc", mA, mA),
              ein("xfa,ygb,zhc,fgh,tyz,kxt->kabc", act, act, act, P, mA, mA), 3, F)
    rep.check("action-mult", ein("khp,pab->khab", act, mA),
              ein("fgh,xfa,ygb,kxy->khab", D, act, act, mA), 3, F)
    rep.check("action-unit", ein("kha,a->kh", act, uA), outer(uA, e), 1, F)
    return rep


def smash_mult(H, A):
    """Multiplication tensor of A#H on the basis a (x) h -> a*dimH + h."""
    m, D, Q = H.mu, H.delta, H.phi_inv
    t = ein("xyz,pxa,ryi,ijh,qrb,kpq,szj,lsg->klahbg", Q, A.act, m, D, A.act, A.mu, m, m)
    n = A.dim * H.dim
    return H.field.norm(t.reshape(n, n, n))


def build_smash(H, A, check=True):
    """A#H as (mu, unit); associativity and unit are certified."""
    if check:
        verify_module_algebra(H, A).require()
    mu = smash_mult(H, A)
    unit = H.field.norm(outer(A.unit, H.unit).reshape(-1))
    if check:
        rep = check_algebra(Report("smash product"), mu, unit, H.field)
        rep.require()
    return mu, unit


# ---------------------------------------------------------------------------
# Yetter-Drinfeld modules and algebras

class YetterDrinfeldModuleData:
    def __init__(self, act, coact, field=QQ, labels=None, name=""):
        self.field = field
        self.act = field.array(act)
        self.coact = field.array(coact)
        self.dim = self.act.shape[0]
        self.labels = list(labels) if labels else [f"m{i}" for i in range(self.dim)]
        self.name = name


def verify_yd(H, M):
    F, m, D, e, P = H.field, H.mu, H.delta, H.counit, H.phi
    act, lam = M.act, M.coact
    rep = Report("Yetter-Drinfeld module")
    _check_module(rep, "module", m, H.unit, act, F)
    lhs = ein("abc,fnm,oaf,qbn,grq,pgc->oprm", P, lam, m, act, lam, m)
    rhs = ein("abc,xyz,qxm,fnq,ijf,sai,osy,tbj,ptz,rcn->oprm",
              P, P, act, lam, D, m, m, m, m, act)
    rep.check("yd1", lhs, rhs, 1, F)
    rep.check("yd2", ein("hnm,h->nm", lam, e), F.eye(M.dim), 1, F)
    rep.check("yd3", ein("fgh,cnm,ofc,tgn->othm", D, lam, m, act),
              ein("fgh,pfm,ctp,ocg->othm", D, act, lam, m), 2, F)
    return rep


def verify_yd_algebra(H, A):
    F, m, P, Q = H.field, H.mu, H.phi, H.phi_inv
    rep = Report("Yetter-Drinfeld algebra")
    rep.merge(verify_module_algebra(H, A))
    rep.merge(verify_yd(H, YetterDrinfeldModuleData(A.act, A.coact, F)))
    lam, act, mA, uA = A.coact, A.act, A.mu, A.unit
    rep.check("unitate", lam.dot(uA), outer(H.unit, uA), 0, F)
    lhs = ein("orp,pab->orab", lam, mA)
    # X = P[A,B,C], x = Q[D,E,G], Y = P[I,J,K]
    rhs = ein("ABC,DEG,IJK,gDI,qga,cnq,vJb,dwv,hAc,ihE,jid,ojK,sBn,WCG,uWw,rsu->orab",
              P, Q, P, m, act, lam, act, lam, m, m, m, m, act, m, act, mA)
    rep.check("multi", lhs, rhs, 2, F)
    return rep


# ---------------------------------------------------------------------------
# bicomodule algebras

class QuasiBicomoduleAlgebraData:
    """Algebra B with coactions ``lam[h, b', b]`` and ``rho[b', h, b]``, the
    three associators (with inverses) and an optional morphism ``v[b, h]``."""

    def __init__(self, mu, unit, lam, rho, phi_l, phi_l_inv, phi_r, phi_r_inv,
                 phi_lr, phi_lr_inv, v=None, field=QQ, labels=None, name=""):
        F = field
        self.field = F
        self.name = name
        self.mu = F.array(mu)
        self.unit = F.array(unit)
        self.lam = F.array(lam)
        self.rho = F.array(rho)
        self.phi_l, self.phi_l_inv = F.array(phi_l), F.array(phi_l_inv)
        self.phi_r, self.phi_r_inv = F.array(phi_r), F.array(phi_r_inv)
        self.phi_lr, self.phi_lr_inv = F.array(phi_lr), F.array(phi_lr_inv)
        self.v = None if v is None else F.array(v)
        self.dim = self.unit.shape[0]
        self.labels = list(labels) if labels else [f"b{i}" for i in range(self.dim)]

    def tensors(self):
        t = {k: getattr(self, k) for k in ("mu", "unit", "lam", "rho", "phi_l", "phi_l_inv",
                                           "phi_r", "phi_r_inv", "phi_lr", "phi_lr_inv")}
        if self.v is not None:
            t["v"] = self.v
        return t


def regular_bicomodule(H, with_v=True):
    """H over itself: both coactions are the coproduct, all associators phi."""
    return QuasiBicomoduleAlgebraData(H.mu, H.unit, H.delta, H.delta, H.phi, H.phi_inv, H.phi, H.phi_inv,
                           H.phi, H.phi_inv, v=H.field.eye(H.dim) if with_v else None,
                           field=H.field, labels=H.labels, name="regular")


def verify_bicomodule_algebra(H, B):
    F, m, u, D, e, P = H.field, H.mu, H.unit, H.delta, H.counit, H.phi
    mB, uB, lam, rho = B.mu, B.unit, B.lam, B.rho
    Pl, Pr, Plr = B.phi_l, B.phi_r, B.phi_lr
    rep = Report("bicomodule algebra")
    check_algebra(rep, mB, uB, F)
    algebra_map_check(rep, "rho-mult", rho.reshape(-1, B.dim),
                      mB, uB, ein("abc,def->adbecf", mB, m).reshape(B.dim * H.dim, B.dim * H.dim, B.dim * H.dim),
                      outer(uB, u).reshape(-1), F)
    algebra_map_check(rep, "lambda-mult", lam.reshape(-1, B.dim),
                      mB, uB, ein("abc,def->adbecf", m, mB).reshape(B.dim * H.dim, B.dim * H.dim, B.dim * H.dim),
                      outer(u, uB).reshape(-1), F)
    rB = [mB, m, m]
    lB = [m, m, mB]
    lrB = [m, mB, m]
    rep.check("associator-inverse", tmul(rB, Pr, B.phi_r_inv), outer(uB, u, u), 0, F)
    rep.check("associator-inverse", tmul(rB, B.phi_r_inv, Pr), outer(uB, u, u), 0, F)
    rep.check("associator-inverse", tmul(lB, Pl, B.phi_l_inv), outer(u, u, uB), 0, F)
    rep.check("associator-inverse", tmul(lB, B.phi_l_inv, Pl), outer(u, u, uB), 0, F)
    rep.check("associator-inverse", tmul(lrB, Plr, B.phi_lr_inv), outer(u, uB, u), 0, F)
    rep.check("associator-inverse", tmul(lrB, B.phi_lr_inv, Plr), outer(u, uB, u), 0, F)
    # right comodule algebra
    rep.check("rca1", tmul(rB, Pr, ein("phq,qga->phga", rho, rho)),
              tmul(rB, ein("pfa,hgf->phga", rho, D), Pr), 1, F)
    r4 = [mB, m, m, m]
    lhs = tmul(r4, tmul(r4, outer(uB, P), ein("bqc,hgq->bhgc", Pr, D)), outer(Pr, u))
    rhs = tmul(r4, ein("bhq,gcq->bhgc", Pr, D), ein("qgc,bhq->bhgc", Pr, rho))
    rep.check("rca2", lhs, rhs, 0, F)
    rep.check("rca3", ein("phb,h->pb", rho, e), F.eye(B.dim), 1, F)
    rep.check("rca4", ein("bhg,h->bg", Pr, e), outer(uB, u), 0, F)
    rep.check("rca4", ein("bhg,g->bh", Pr, e), outer(uB, u), 0, F)
    # left comodule algebra
    rep.check("lca1", tmul(lB, ein("hqb,gcq->hgcb", lam, lam), Pl),
              tmul(lB, Pl, ein("qcb,hgq->hgcb", lam, D)), 1, F)
    l4 = [m, m, m, mB]
    lhs = tmul(l4, tmul(l4, outer(u, Pl), ein("aqc,fgq->afgc", Pl, D)), outer(P, uB))
    rhs = tmul(l4, ein("afq,gcq->afgc", Pl, lam), ein("qgc,afq->afgc", Pl, D))
    rep.check("lca2", lhs, rhs, 0, F)
    rep.check("lca3", ein("hcb,h->cb", lam, e), F.eye(B.dim), 1, F)
    rep.check("lca4", ein("hgb,g->hb", Pl, e), outer(u, uB), 0, F)
    rep.check("lca4", ein("hgb,h->gb", Pl, e), outer(u, uB), 0, F)
    # compatibility
    rep.check("bca1", tmul(lrB, Plr, ein("qgu,hcq->hcgu", rho, lam)),
              tmul(lrB, ein("hqu,cgq->hcgu", lam, rho), Plr), 1, F)
    b4 = [m, m, mB, m]
    lhs = tmul(b4, tmul(b4, outer(u, Plr), ein("aqc,fbq->afbc", Plr, lam)), outer(Pl, u))
    rhs = tmul(b4, ein("afq,bcq->afbc", Pl, rho), ein("qbc,afq->afbc", Plr, D))
    rep.check("bca2", lhs, rhs, 0, F)
    b4 = [m, mB, m, m]
    lhs = tmul(b4, tmul(b4, outer(u, Pr), ein("aqc,bfq->abfc", Plr, rho)), outer(Plr, u))
    rhs = tmul(b4, ein("abq,fcq->abfc", Plr, D), ein("qfc,abq->abfc", Pr, lam))
    rep.check("bca3", lhs, rhs, 0, F)
    rep.check("bca4", ein("hbg,g->hb", Plr, e), outer(u, uB), 0, F)
    rep.check("bca4", ein("hbg,h->bg", Plr, e), outer(uB, u), 0, F)
    return rep


def verify_bicomodule_morphism(H, f, B, B2):
    """f: B -> B2 given as a matrix (dim B2 x dim B)."""
    F = H.field
    f = F.array(f)
    rep = Report("bicomodule algebra morphism")
    algebra_map_check(rep, "morphism-alg", f, B.mu, B.unit, B2.mu, B2.unit, F)
    rep.check("morphism-rho", ein("phq,qb->phb", B2.rho, f), ein("pq,qhb->phb", f, B.rho), 1, F)
    rep.check("morphism-lambda", ein("hpq,qb->hpb", B2.lam, f), ein("pq,hqb->hpb", f, B.lam), 1, F)
    rep.check("morphism-phi-rho", B2.phi_r, ein("pb,bgh->pgh", f, B.phi_r), 0, F)
    rep.check("morphism-phi-lambda", B2.phi_l, ein("pb,ghb->ghp", f, B.phi_l), 0, F)
    rep.check("morphism-phi-lambda-rho", B2.phi_lr, ein("pb,gbh->gph", f, B.phi_lr), 0, F)
    return rep


def _smash_coactions(H, act, coact, dimA):
    """The left and right coactions displayed for A#H (and for V (x) H)."""
    m, D, P, Q = H.mu, H.delta, H.phi, H.phi_inv
    n = dimA * H.dim
    lam = ein("ABC,DEG,qDa,cnq,fgh,iAc,jiE,ojf,rBn,wCG,swg->orsah",
              P, Q, act, coact, D, m, m, m, act, m, m)
    rho = ein("xyz,rxa,fgh,syf,ozg->rsoah", Q, act, D, m, m)
    return (H.field.norm(lam.reshape(H.dim, n, n)), H.field.norm(rho.reshape(n, H.dim, n)))


def yd_smash_bicomodule(H, A, check=True):
    """A#H with its bicomodule structure and v(h) = 1 # h."""
    F = H.field
    if check:
        verify_yd_algebra(H, A).require()
    mu, unit = build_smash(H, A, check=check)
    lam, rho = _smash_coactions(H, A.act, A.coact, A.dim)
    n = A.dim * H.dim
    uA = A.unit

    def emb(T, leg):
        # insert 1_A # (.) on the given leg of a 3-leg H tensor
        t = np.multiply.outer(T, uA)  # a b c r
        if leg == 2:
            t = np.moveaxis(t, 3, 2).reshape(H.dim, H.dim, n)
        elif leg == 0:
            t = np.moveaxis(t, 3, 0).reshape(n, H.dim, H.dim)
        else:
            t = np.moveaxis(t, 3, 1)  # a r b c
            t = t.reshape(H.dim, n, H.dim)
        return F.norm(t)

    v = F.norm(np.multiply.outer(uA, F.eye(H.dim)).reshape(n, H.dim))
    B = QuasiBicomoduleAlgebraData(mu, unit, lam, rho, emb(H.phi, 2), emb(H.phi_inv, 2),
                        emb(H.phi, 0), emb(H.phi_inv, 0), emb(H.phi, 1), emb(H.phi_inv, 1),
                        v=v, field=F, labels=[f"{a}#{h}" for a in A.labels for h in H.labels],
                        name=f"{A.name}#{H.name}")
    if check:
        verify_bicomodule_algebra(H, B).require()
        verify_bicomodule_morphism(H, v, regular_bicomodule(H), B).require()
    return B


# ---------------------------------------------------------------------------
# two-sided two-cosided bimodules

class TwoSidedBimoduleData:
    """Left action ``left[k, h, m]``, right action ``right[k, m, h]``,
    coactions ``lam[h, n, m]`` and ``rho[n, h, m]``."""

    def __init__(self, left, right, lam, rho, field=QQ, labels=None, name=""):
        F = field
        self.field = F
        self.left = F.array(left)
        self.right = F.array(right)
        self.lam = F.array(lam)
        self.rho = F.array(rho)
        self.dim = self.left.shape[0]
        self.labels = list(labels) if labels else [f"m{i}" for i in range(self.dim)]
        self.name = name


def verify_two_sided_bimodule(H, M):
    F, m, u, D, e, P = H.field, H.mu, H.unit, H.delta, H.counit, H.phi
    L, R, lam, rho = M.left, M.right, M.lam, M.rho
    n = M.dim
    rep = Report("two-sided two-cosided bimodule")
    _check_module(rep, "bimodule", m, u, L, F)
    rep.check("bimodule", ein("kng,nmh->kmhg", R, R), ein("kmp,phg->kmhg", R, m), 3, F)
    rep.check("bimodule", ein("kmh,h->km", R, u), F.eye(n), 1, F)
    rep.check("bimodule", ein("knh,nam->kamh", R, L), ein("kan,nmh->kamh", L, R), 3, F)
    # coactions are bimodule maps
    rep.check("rho-bilinear", ein("nfk,kam->nfam", rho, L),
              ein("xya,pqm,nxp,fyq->nfam", D, rho, L, m), 2, F)
    rep.check("rho-bilinear", ein("nfk,kma->nfma", rho, R),
              ein("xya,pqm,npx,fqy->nfma", D, rho, R, m), 2, F)
    rep.check("lambda-bilinear", ein("fnk,kam->fnam", lam, L),
              ein("xya,qpm,fxq,nyp->fnam", D, lam, m, L), 2, F)
    rep.check("lambda-bilinear", ein("fnk,kma->fnma", lam, R),
              ein("xya,qpm,fqx,npy->fnma", D, lam, m, R), 2, F)
    # (qb1)-(qb5); Phi acts on the left leg-wise and on the right leg-wise
    rep.check("qb1", ein("nhm,h->nm", rho, e), F.eye(n), 1, F)
    t1 = ein("qgm,nfq->nfgm", rho, rho)
    t2 = ein("nqm,fgq->nfgm", rho, D)
    rep.check("qb2", ein("abc,xan,ybf,zcg,nfgm->xyzm", P, L, m, m, t1),
              ein("abc,xna,yfb,zgc,nfgm->xyzm", P, R, m, m, t2), 1, F)
    rep.check("qb3", ein("hnm,h->nm", lam, e), F.eye(n), 1, F)
    t1 = ein("fqm,gnq->fgnm", lam, lam)
    t2 = ein("qnm,fgq->fgnm", lam, D)
    rep.check("qb4", ein("abc,xfa,ygb,znc,fgnm->xyzm", P, m, m, R, t1),
              ein("abc,xaf,ybg,zcn,fgnm->xyzm", P, m, m, L, t2), 1, F)
    t1 = ein("qgm,fnq->fngm", rho, lam)
    t2 = ein("fqm,ngq->fngm", lam, rho)
    rep.check("qb5", ein("abc,xaf,ybn,zcg,fngm->xyzm", P, m, L, m, t1),
              ein("abc,xfa,ynb,zgc,fngm->xyzm", P, m, R, m, t2), 1, F)
    return rep


def q_right(H):
    """q_R = X1 (x) S^-1(alpha X3) X2 as a 2-leg tensor."""
    return ein("axc,yzc,z,sy,bsx->ab", H.phi, H.mu, H.alpha, H.S_inv, H.mu)


def projector(H, M):
    """E(m) = q1 . m_(0) . beta S(q2 m_(1)) as a matrix."""
    return H.field.norm(ein("pfm,gbf,sg,rzs,z,tap,ntr,ab->nm",
                            M.rho, H.mu, H.S, H.mu, H.beta, M.left, M.right, q_right(H)))


def check_projector_laws(H, M, E, tri, rep=None):
    """The seven properties of E and the induced action, exactly."""
    F, m, D, e, u = H.field, H.mu, H.delta, H.counit, H.unit
    L, R, rho = M.left, M.right, M.rho
    rep = rep or Report("projector laws")
    rep.check("E-idempotent", F.norm(E.dot(E)), E, 1, F)
    rep.check("E-right-counit", ein("nk,kmh->nmh", E, R), outer(E, e), 2, F)
    rep.check("E-act", ein("nhk,km->nhm", tri, E), ein("nk,khm->nhm", E, L), 2, F)
    rep.check("act-assoc", ein("nkm,khg->nhgm", tri, m), ein("nhk,kgm->nhgm", tri, tri), 3, F)
    rep.check("E-left", ein("nhk,km->nhm", L, E), ein("fgh,pfk,km,npg->nhm", D, tri, E, R), 2, F)
    rep.check("E-reconstruct", ein("pfm,qp,nqf->nm", rho, E, R), F.eye(M.dim), 1, F)
    rep.check("E-coinvariant", ein("pfk,km,np->nfm", rho, E, E), outer(E, u).transpose(0, 2, 1), 1, F)
    return rep


def coinvariants_projector(H, M):
    """Returns (E, action tensor h |> m, Splitting of E)."""
    F = H.field
    E = projector(H, M)
    tri = F.norm(ein("nk,khm->nhm", E, M.left))
    sp = split_idempotent(LinearMap(E, F))
    return E, tri, sp


def yd_on_coinvariants(H, M, sp, tri):
    """The YD module on M^co(H): restricted action, coaction v_<-1> (x) E(v_<0>)."""
    F = H.field
    i, p = sp.i.mat, sp.p.mat
    act = F.norm(ein("an,nhk,kb->ahb", p, tri, i))
    coact = F.norm(ein("ak,hkj,jb->hab", p, M.lam, i))
    return YetterDrinfeldModuleData(act, coact, F)


def construct_from_yd(H, V):
    """V (x) H with the two actions and two coactions built from V."""
    F, m, D = H.field, H.mu, H.delta
    d, k = H.dim, V.dim
    n = k * d
    left = ein("xya,wxv,sym->wsavm", D, V.act, m).reshape(n, d, n)
    right = ein("wv,shb->wsvhb", F.eye(k), m).reshape(n, n, d)
    lam, rho = _smash_coactions(H, V.act, V.coact, k)
    return TwoSidedBimoduleData(left, right, lam, rho, F,
                            labels=[f"{a}|{h}" for a in V.labels for h in H.labels])


def bimodule_morphism_check(H, f, M, N, rep=None, prefix="nu-"):
    """f: M -> N intertwines both actions and both coactions."""
    F = H.field
    rep = rep or Report("bimodule morphism")
    rep.check(prefix + "left", ein("pk,khm->phm", f, M.left), ein("phq,qm->phm", N.left, f), 2, F)
    rep.check(prefix + "right", ein("pk,kmh->pmh", f, M.right), ein("pqh,qm->pmh", N.right, f), 2, F)
    rep.check(prefix + "lambda", ein("hpq,qm->hpm", N.lam, f), ein("pq,hqm->hpm", f, M.lam), 1, F)
    rep.check(prefix + "rho", ein("phq,qm->phm", N.rho, f), ein("pq,qhm->phm", f, M.rho), 1, F)
    return rep


def schauenburg_decompose(H, M, check=True):
    """Returns (V, nu, nu_inv, report, splitting) with nu(v (x) h) = v . h an isomorphism."""
    F = H.field
    rep = Report("decomposition of a two-sided two-cosided bimodule")
    rep.merge(verify_two_sided_bimodule(H, M))
    if check:
        rep.require()
    E, tri, sp = coinvariants_projector(H, M)
    check_projector_laws(H, M, E, tri, rep)
    V = yd_on_coinvariants(H, M, sp, tri)
    rep.merge(verify_yd(H, V), prefix="V:")
    nu = F.norm(ein("nkh,kb->nbh", M.right, sp.i.mat).reshape(M.dim, V.dim * H.dim))
    try:
        nu_inv = invert_map(LinearMap(nu, F)).mat
        rep.add("nu-invertible", True)
    except ArithmeticError:
        rep.add("nu-invertible", False, note="nu is singular")
        raise CertificationError("nu is singular", rep, "nu-invertible")
    bimodule_morphism_check(H, nu, construct_from_yd(H, V), M, rep)
    if check:
        rep.require()
    return V, nu, nu_inv, rep, sp


# ---------------------------------------------------------------------------
# the structure theorem

def bimodule_from_bicomodule(H, B):
    """B as a two-sided two-cosided bimodule through v."""
    F = H.field
    left = ein("kpb,ph->khb", B.mu, B.v)
    right = ein("kbp,ph->kbh", B.mu, B.v)
    return TwoSidedBimoduleData(left, right, B.lam, B.rho, F, labels=B.labels)


def structure_theorem_quasi(H, B, check=True):
    """Decompose B as A#H.  Returns a dict with A, Psi, Psi_inv, splitting,
    the rebuilt smash product and the full report."""
    F = H.field
    if B.v is None:
        raise ValueError("bicomodule algebra has no embedded v")
    rep = Report("structure theorem (quasi-Hopf)")
    rep.merge(verify_bicomodule_algebra(H, B), prefix="B:")
    rep.merge(verify_bicomodule_morphism(H, B.v, regular_bicomodule(H, False), B), prefix="v:")
    if check:
        rep.require()
    M = bimodule_from_bicomodule(H, B)
    rep.merge(verify_two_sided_bimodule(H, M), prefix="M:")
    E, tri, sp = coinvariants_projector(H, M)
    check_projector_laws(H, M, E, tri, rep)
    i, p = sp.i.mat, sp.p.mat
    mA = F.norm(ein("ak,kxy,xb,yc->abc", p, B.mu, i, i))
    uA = F.norm(p.dot(B.unit))
    V = yd_on_coinvariants(H, M, sp, tri)
    A = LeftModuleAlgebraData(mA, uA, V.act, V.coact, F, name="A")
    rep.merge(verify_yd_algebra(H, A), prefix="A:")
    if check:
        rep.require()
    S = yd_smash_bicomodule(H, A, check=False)
    rep.merge(verify_bicomodule_algebra(H, S), prefix="A#H:")
    psi = F.norm(ein("bxy,xa,yh->bah", B.mu, i, B.v).reshape(B.dim, A.dim * H.dim))
    try:
        psi_inv = invert_map(LinearMap(psi, F)).mat
        rep.add("psi-invertible", True)
    except ArithmeticError:
        rep.add("psi-invertible", False, note="Psi is singular")
        raise CertificationError("Psi is singular", rep, "psi-invertible")
    rep.check("psi-invertible", F.norm(psi_inv.dot(psi)), F.eye(B.dim), 1, F)
    rep.check("psi-invertible", F.norm(psi.dot(psi_inv)), F.eye(B.dim), 1, F)
    rep.merge(verify_bicomodule_morphism(H, psi, S, B), prefix="Psi:")
    if check:
        rep.require()
    return {"A": A, "psi": psi, "psi_inv": psi_inv, "splitting": sp, "E": E,
            "smash": S, "report": rep}


def transport_check(H, A0, A, theta, rep=None):
    """theta: A0 -> A is an isomorphism of YD algebras (multiplication, unit,
    action and coaction are intertwined)."""
    F = H.field
    rep = rep or Report("round trip")
    algebra_map_check(rep, "transport-alg", theta, A0.mu, A0.unit, A.mu, A.unit, F)
    rep.check("transport-action", ein("pa,ahb->phb", theta, A0.act), ein("phq,qb->phb", A.act, theta), 2, F)
    rep.check("transport-coaction", ein("hpq,qb->hpb", A.coact, theta), ein("pq,hqb->hpb", theta, A0.coact), 1, F)
    try:
        invert_map(LinearMap(theta, F))
        rep.add("transport-invertible", True)
    except ArithmeticError:
        rep.add("transport-invertible", False)
    return rep

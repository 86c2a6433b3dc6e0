"""Weak Hopf algebras: axioms and derived identities, target/source maps,
the relative smash product over the target subalgebra, weak comodule
algebras and Yetter-Drinfeld modules, coinvariants of weak Hopf bimodules
and the weak structure theorem.

Elements of the target subalgebra are quantified as eps_t(h) and elements
of the source subalgebra as eps_s(h), so every identity is checked over a
spanning set.
"""

import numpy as np

from .core import (QQ, CertificationError, LinearMap, Report, ShapeError,
                   algebra_map_check, check_algebra, ein, invert_map, nullspace,
                   outer, rank, rref, same_span, split_idempotent, tmul)


class WeakHopfAlgebraData:
    def __init__(self, mu, unit, delta, counit, S, S_inv, field=QQ, labels=None, name=""):
        F = field
        self.field = F
        self.name = name
        self.mu = F.array(mu)
        self.unit = F.array(unit)
        self.delta = F.array(delta)
        self.counit = F.array(counit)
        self.S = F.array(S)
        self.S_inv = F.array(S_inv)
        d = self.dim = self.unit.shape[0]
        for k, shp in {"mu": (d, d, d), "delta": (d, d, d), "counit": (d,),
                       "S": (d, d), "S_inv": (d, d)}.items():
            if getattr(self, k).shape != shp:
                raise ShapeError(f"{k} has shape {getattr(self, k).shape}, expected {shp}")
        self.labels = list(labels) if labels else [f"h{i}" for i in range(d)]

    def tensors(self):
        return {k: getattr(self, k) for k in ("mu", "unit", "delta", "counit", "S", "S_inv")}

    @property
    def one2(self):
        """Delta(1) as a matrix [1_1, 1_2]."""
        return ein("abk,k->ab", self.delta, self.unit)

    def eps_t(self):
        """eps_t(h) = eps(1_1 h) 1_2 as a matrix."""
        return self.field.norm(ein("ak,p,pah->kh", self.one2, self.counit, self.mu))

    def eps_s(self):
        """eps_s(h) = 1_1 eps(h 1_2) as a matrix."""
        return self.field.norm(ein("kb,p,phb->kh", self.one2, self.counit, self.mu))


def verify_weak_hopf(H, derived=True):
    F, m, u, D, e, S = H.field, H.mu, H.unit, H.delta, H.counit, H.S
    I = F.eye(H.dim)
    one2 = H.one2
    rep = Report("weak Hopf axioms")
    check_algebra(rep, m, u, F)
    rep.check("coassoc", ein("aqh,bcq->abch", D, D), ein("qch,abq->abch", D, D), 1, F)
    rep.check("counit", ein("ijh,i->jh", D, e), I, 1, F)
    rep.check("counit", ein("ijh,j->ih", D, e), I, 1, F)
    rep.check("delta-mult", ein("ijp,pab->ijab", D, m),
              ein("ixy,jzw,xza,ywb->ijab", m, m, D, D), 2, F)
    one3 = ein("abq,qc->abc", D, one2)
    mmm = [m, m, m]
    rep.check("delta21", one3, tmul(mmm, outer(one2, u), outer(u, one2)), 0, F)
    rep.check("delta21", one3, tmul(mmm, outer(u, one2), outer(one2, u)), 0, F)
    xyz = ein("p,pxq,qyz->xyz", e, m, m)
    rep.check("exyz", xyz, ein("p,pxa,q,qbz,aby->xyz", e, m, e, m, D), 3, F)
    rep.check("exyz", xyz, ein("p,pxb,q,qaz,aby->xyz", e, m, e, m, D), 3, F)
    rep.check("antipode-target", ein("kas,sb,abh->kh", m, S, D), H.eps_t(), 1, F)
    rep.check("antipode-source", ein("ksb,sa,abh->kh", m, S, D), H.eps_s(), 1, F)
    rep.check("antipode-sandwich", ein("kxt,xsb,sa,tc,abq,qch->kh", m, m, S, S, D, D), S, 1, F)
    rep.check("antipode-inverse", F.norm(S.dot(H.S_inv)), I, 1, F)
    rep.check("antipode-inverse", F.norm(H.S_inv.dot(S)), I, 1, F)
    if derived:
        rep.merge(verify_derived(H))
    return rep


AXIOM_IDS = ("assoc", "unit", "coassoc", "counit", "delta-mult", "delta21", "exyz",
             "antipode-target", "antipode-source", "antipode-sandwich", "antipode-inverse")


def verify_derived(H):
    """The consequences of the axioms, each checked exhaustively."""
    F, m, u, D, e, S = H.field, H.mu, H.unit, H.delta, H.counit, H.S
    one2 = H.one2
    Et, Es = H.eps_t(), H.eps_s()
    I = F.eye(H.dim)
    rep = Report("weak Hopf derived identities")
    rep.check("counital-idempotent", F.norm(Et.dot(Et)), Et, 1, F)
    rep.check("counital-idempotent", F.norm(Es.dot(Es)), Es, 1, F)
    rep.check("unit-coproduct", ein("ax,bx->ab", one2, Et), one2, 0, F)
    rep.check("unit-coproduct", ein("ax,xb->ab", Es, one2), one2, 0, F)
    rep.check("eps-t-absorb", ein("kp,phq,qg->khg", Et, m, Et), ein("kp,phg->khg", Et, m), 2, F)
    rep.check("eps-s-absorb", ein("kp,pqg,qh->khg", Es, m, Es), ein("kp,phg->khg", Es, m), 2, F)
    rep.check("delta-target", ein("acp,ph,bc->abh", D, Et, Et), ein("abp,ph->abh", D, Et), 1, F)
    rep.check("delta-source", ein("ac,cbp,ph->abh", Es, D, Es), ein("abp,ph->abh", D, Es), 1, F)
    rep.check("eps-t-coproduct", ein("ach,bc->abh", D, Et), ein("xb,axh->abh", one2, m), 1, F)
    rep.check("eps-s-coproduct", ein("ac,cbh->abh", Es, D), ein("ay,bhy->abh", one2, m), 1, F)
    rep.check("cucu", ein("khq,qg->khg", m, Et), ein("akh,p,pag->khg", D, e, m), 2, F)
    rep.check("cucu", ein("kqg,qh->khg", m, Es), ein("kbg,p,phb->khg", D, e, m), 2, F)
    rep.check("lala", ein("kp,pqg,qh->khg", Et, m, Et), ein("kxy,xh,yg->khg", m, Et, Et), 2, F)
    rep.check("lala", ein("kp,phq,qg->khg", Es, m, Es), ein("kxy,xh,yg->khg", m, Es, Es), 2, F)
    rep.check("est", ein("kxb,xa,abh->kh", m, Et, D), I, 1, F)
    rep.check("est", ein("kay,yb,abh->kh", m, Es, D), I, 1, F)
    rep.check("delta1", ein("ax,by,xy->ab", Es, Et, one2), one2, 0, F)
    rep.check("titi", ein("ach,bc->abh", D, Es), ein("ahx,xy,by->abh", m, one2, S), 1, F)
    rep.check("titi", ein("ac,cbh->abh", Et, D), ein("ax,xy,byh->abh", S, one2, m), 1, F)
    ehg = ein("p,phg->hg", e, m)
    rep.check("dudu", ein("p,phq,qg->hg", e, m, Et), ehg, 2, F)
    rep.check("dudu", ein("p,pqg,qh->hg", e, m, Es), ehg, 2, F)
    rep.check("comutst", ein("kxy,xh,yg->khg", m, Es, Et), ein("kyx,xh,yg->khg", m, Es, Et), 2, F)
    dy = ein("abp,ph->abh", D, Es)
    rep.check("delta-source-element", dy, ein("ax,bpx,ph->abh", one2, m, Es), 1, F)
    rep.check("delta-source-element", dy, ein("ax,bxp,ph->abh", one2, m, Es), 1, F)
    dz = ein("abp,ph->abh", D, Et)
    rep.check("deltaz", dz, ein("xb,axp,ph->abh", one2, m, Et), 1, F)
    rep.check("deltaz", dz, ein("xb,apx,ph->abh", one2, m, Et), 1, F)
    rep.check("source-unit-slide", ein("apx,ph,xy,by->abh", m, Es, one2, S),
              ein("ay,sy,bsp,ph->abh", one2, S, m, Es), 1, F)
    rep.check("target-unit-slide", ein("aps,ph,sx,xb->abh", m, Et, S, one2),
              ein("ax,xy,byp,ph->abh", S, one2, m, Et), 1, F)
    rep.check("coproduct-source-slide", ein("xbh,axp,pg->abhg", D, m, Es),
              ein("axh,bxs,sp,pg->abhg", D, m, S, Es), 2, F)
    rep.check("2.31b", ein("axh,bpx,pg->abhg", D, m, Et),
              ein("xbh,asx,sp,pg->abhg", D, m, S, Et), 2, F)
    for tag, P in (("target-subalgebra", Et), ("source-subalgebra", Es)):
        rep.check(tag, P.dot(u), u, 0, F)
        prod = ein("kxy,xh,yg->khg", m, P, P)
        rep.check(tag, ein("kp,phg->khg", P, prod), prod, 2, F)
    SEt = F.norm(S.dot(Et))
    rep.check("antipode-target-to-source", F.norm(Es.dot(SEt)), SEt, 1, F)
    rep.add("antipode-target-to-source", rank(SEt, F) == rank(Es, F) == rank(Et, F),
            note="S maps the target subalgebra onto the source subalgebra")
    return rep


# ---------------------------------------------------------------------------
# target and source subalgebras

class CounitalData:
    def __init__(self, eps_t, eps_s, target, source):
        self.eps_t = eps_t
        self.eps_s = eps_s
        self.target = target      # Splitting of eps_t
        self.source = source      # Splitting of eps_s

    @property
    def target_basis(self):
        return self.target.i.mat

    @property
    def source_basis(self):
        return self.source.i.mat


def counital_maps(H):
    F = H.field
    Et, Es = H.eps_t(), H.eps_s()
    return CounitalData(LinearMap(Et, F), LinearMap(Es, F),
                        split_idempotent(LinearMap(Et, F)), split_idempotent(LinearMap(Es, F)))


# ---------------------------------------------------------------------------
# relative tensor products as explicit quotients

class Quotient:
    """Quotient of k^n by the span of the columns of ``rel``.

    ``q`` projects onto the quotient, ``s`` is the section spanned by the
    standard basis vectors at the non-pivot positions of the relations.
    """

    def __init__(self, rel, n, field):
        F = field
        self.field = F
        self.n = n
        rows = F.norm(np.asarray(rel, dtype=object).T.reshape(-1, n))
        R, piv = rref(rows, F) if rows.shape[0] else (rows, [])
        r = len(piv)
        self.rel = F.norm(R[:r].T.reshape(n, r))
        comp = [j for j in range(n) if j not in piv]
        s = F.zeros((n, len(comp)))
        for t, j in enumerate(comp):
            s[j, t] = 1
        self.s = s
        full = np.hstack([self.rel, s]) if r else s
        inv = invert_map(LinearMap(full, F)).mat
        self.q = F.norm(inv[r:, :])
        self.dim = n - r

    def kills(self, f):
        """Does the linear map ``f`` (rows x n) vanish on the relations?"""
        return self.field.is_zero_array(np.asarray(f, dtype=object).dot(self.rel))


def _check_kills(rep, tag, Qt, f):
    F = Qt.field
    f = np.asarray(f, dtype=object)
    val = F.norm(f.dot(Qt.rel))
    rep.check(tag, val, F.zeros(val.shape), 1, F)


def balanced_relations(H, right_z, dimX):
    """Relations x.z (x) h - x (x) zh in X (x) H for z in the target basis.

    ``right_z(z)`` returns the matrix of x -> x.z for a vector z of H_t.
    """
    F = H.field
    Z = counital_maps(H).target_basis
    d = H.dim
    cols = []
    for c in range(Z.shape[1]):
        z = Z[:, c]
        Xz = right_z(z)
        zh = ein("spk,p->sk", H.mu, z)
        rel = ein("xa,sh->xsah", Xz, F.eye(d)) - ein("xa,sh->xsah", F.eye(dimX), zh)
        cols.append(F.norm(rel.reshape(dimX * d, dimX * d)))
    if not cols:
        return F.zeros((dimX * d, 0))
    return np.hstack(cols)


# ---------------------------------------------------------------------------
# module algebras and the relative smash product

class WeakModuleAlgebraData:
    """Algebra with a left H-action ``act[k, h, a]`` and optionally a left
    coaction ``coact[h, b, a]``."""

    def __init__(self, mu, unit, act, coact=None, field=QQ, labels=None, name=""):
        F = field
        self.field = F
        self.mu = F.array(mu)
        self.unit = F.array(unit)
        self.act = F.array(act)
        self.coact = None if coact is None else F.array(coact)
        self.dim = self.unit.shape[0]
        self.labels = list(labels) if labels else [f"a{i}" for i in range(self.dim)]
        self.name = name

    def tensors(self):
        t = {"mu": self.mu, "unit": self.unit, "act": self.act}
        if self.coact is not None:
            t["coact"] = self.coact
        return t


def _check_module(rep, tag, m, u, act, F):
    rep.check(tag, ein("kqa,qhg->khga", act, m), ein("khp,pga->khga", act, act), 3, F)
    rep.check(tag, ein("kha,h->ka", act, u), F.eye(act.shape[0]), 1, F)


def verify_weak_module_algebra(H, A):
    F, m, D = H.field, H.mu, H.delta
    rep = Report("weak module algebra")
    check_algebra(rep, A.mu, A.unit, F)
    _check_module(rep, "module", m, H.unit, A.act, F)
    rep.check("action-mult", ein("khp,pab->khab", A.act, A.mu),
              ein("fgh,xfa,ygb,kxy->khab", D, A.act, A.act, A.mu), 3, F)
    one_h = ein("kha,a->kh", A.act, A.unit)
    rep.check("modalg1", one_h, ein("kp,ph->kh", one_h, H.eps_t()), 1, F)
    return rep


class RelativeSmashData:
    def __init__(self, quotient, mu, unit, dimA, dimH):
        self.quotient = quotient
        self.mu = mu
        self.unit = unit
        self.dim = quotient.dim
        self.dimA = dimA
        self.dimH = dimH

    @property
    def q(self):
        return self.quotient.q

    @property
    def s(self):
        return self.quotient.s


def smash_relations(H, A):
    F = H.field
    ones = ein("kha,a->kh", A.act, A.unit)
    return balanced_relations(H, lambda z: F.norm(ein("kax,x->ka", A.mu, ones.dot(z))), A.dim)


def relative_smash(H, A, check=True, rep=None):
    """A (x)_{H_t} H with (a # h)(a' # h') = a(h_1 . a') # h_2 h'."""
    F = H.field
    rep = rep if rep is not None else Report("relative smash product")
    if check:
        rep.merge(verify_weak_module_algebra(H, A))
        rep.require()
    n = A.dim * H.dim
    Qt = Quotient(smash_relations(H, A), n, F)
    full = ein("kax,xpb,pqh,lqg->klahbg", A.mu, A.act, H.delta, H.mu).reshape(n, n, n)
    q, s = Qt.q, Qt.s
    # multiplication descends: relations in either slot map to zero
    left = ein("ck,kxy,xr->cry", q, full, Qt.rel)
    right = ein("ck,kxy,yr->cxr", q, full, Qt.rel)
    rep.check("smash-well-defined", left, F.zeros(left.shape), 2, F)
    rep.check("smash-well-defined", right, F.zeros(right.shape), 2, F)
    mu = F.norm(ein("ck,kxy,xa,yb->cab", q, full, s, s))
    unit = F.norm(q.dot(outer(A.unit, H.unit).reshape(-1)))
    check_algebra(rep, mu, unit, F, "smash-assoc", "smash-unit")
    if check:
        rep.require()
    return RelativeSmashData(Qt, mu, unit, A.dim, H.dim)


# ---------------------------------------------------------------------------
# comodule algebras and Yetter-Drinfeld modules

class WeakBicomoduleAlgebraData:
    def __init__(self, mu, unit, lam=None, rho=None, v=None, field=QQ, labels=None, name=""):
        F = field
        self.field = F
        self.mu = F.array(mu)
        self.unit = F.array(unit)
        self.lam = None if lam is None else F.array(lam)
        self.rho = None if rho is None else F.array(rho)
        self.v = None if v is None else F.array(v)
        self.dim = self.unit.shape[0]
        self.labels = list(labels) if labels else [f"b{i}" for i in range(self.dim)]
        self.name = name

    def tensors(self):
        t = {"mu": self.mu, "unit": self.unit}
        for k in ("lam", "rho", "v"):
            if getattr(self, k) is not None:
                t[k] = getattr(self, k)
        return t


LEFT_FORMS = ("2.1b", "NSW", "NV")
LEFT_PREMISES = ("assoc", "unit", "left-counit", "2.1a", "2.1c")
YD_FORMS = ("wyd2", "wyd3")
YD_PREMISES = ("module", "comodule", "wyd1")


def _right_comodule_algebra(rep, H, mu, unit, rho):
    F, D, e = H.field, H.delta, H.counit
    n = unit.shape[0]
    rep.check("right-counit", ein("phb,h->pb", rho, e), F.eye(n), 1, F)
    rep.check("2.2a", ein("phq,qga->phga", rho, rho), ein("pfa,hgf->phga", rho, D), 1, F)
    r1 = rho.dot(unit)
    rep.check("2.2b", ein("kpa,pf->kfa", mu, r1), ein("fg,kga->kfa", H.eps_t(), rho), 1, F)
    rep.check("right-mult", ein("phq,qab->phab", rho, mu),
              ein("pxy,hzw,xza,ywb->phab", mu, H.mu, rho, rho), 2, F)


def _left_comodule_algebra(rep, H, mu, unit, lam):
    F, D, e = H.field, H.delta, H.counit
    n = unit.shape[0]
    rep.check("left-counit", ein("hcb,h->cb", lam, e), F.eye(n), 1, F)
    rep.check("2.1a", ein("hqb,gcq->hgcb", lam, lam), ein("qcb,hgq->hgcb", lam, D), 1, F)
    l1 = ein("fpa,a->fp", lam, unit)
    Es = H.eps_s()
    rep.check("2.1b", ein("kap,fp->fka", mu, l1), ein("fg,gka->fka", Es, lam), 1, F)
    rep.check("2.1c", ein("hpq,qab->hpab", lam, mu),
              ein("hxy,pzw,xza,ywb->hpab", H.mu, mu, lam, lam), 2, F)
    rep.check("NSW", ein("abf,fk->abk", D, l1), ein("ay,bfy,fk->abk", H.one2, H.mu, l1), 0, F)
    rep.check("NV", l1, ein("fg,gk->fk", Es, l1), 0, F)


def conditional_agreement(rep, forms, premises, tag):
    """Record whether the equivalent forms share a verdict.  The comparison
    is only meaningful when the surrounding axioms hold; otherwise the
    entry is recorded as not applicable."""
    if not all(rep.verdict(p) for p in premises if p in rep):
        rep.add(tag, True, note="not applicable: premises fail")
        return None
    verdicts = {rep.verdict(f) for f in forms}
    rep.add(tag, len(verdicts) == 1, note=None if len(verdicts) == 1 else "forms disagree")
    return len(verdicts) == 1


def verify_weak_comodule_algebra(H, B, side="both"):
    F = H.field
    rep = Report(f"weak comodule algebra ({side})")
    check_algebra(rep, B.mu, B.unit, F)
    if side in ("right", "both"):
        _right_comodule_algebra(rep, H, B.mu, B.unit, B.rho)
    if side in ("left", "both"):
        _left_comodule_algebra(rep, H, B.mu, B.unit, B.lam)
        conditional_agreement(rep, LEFT_FORMS, LEFT_PREMISES, "equivalent-left-forms")
    if side == "both":
        rep.check("bicomodule", ein("hpq,qgb->hpgb", B.lam, B.rho),
                  ein("hqb,pgq->hpgb", B.lam, B.rho), 1, F)
    return rep


class WeakYDData:
    def __init__(self, act, coact, field=QQ, labels=None, name=""):
        self.field = field
        self.act = field.array(act)
        self.coact = field.array(coact)
        self.dim = self.act.shape[0]
        self.labels = list(labels) if labels else [f"m{i}" for i in range(self.dim)]
        self.name = name


def verify_weak_yd(H, M):
    F, m, D, e, S = H.field, H.mu, H.delta, H.counit, H.S
    act, lam = M.act, M.coact
    rep = Report("weak Yetter-Drinfeld module")
    _check_module(rep, "module", m, H.unit, act, F)
    rep.check("comodule", ein("hnm,h->nm", lam, e), F.eye(M.dim), 1, F)
    rep.check("comodule", ein("hqm,gnq->hgnm", lam, lam), ein("qnm,hgq->hgnm", lam, D), 1, F)
    rep.check("wyd1", lam, ein("ab,kaf,nbp,fpm->knm", H.one2, m, act, lam), 1, F)
    rep.check("wyd2", ein("fgh,pfm,ctp,ocg->othm", D, act, lam, m),
              ein("fgh,cnm,ofc,tgn->othm", D, lam, m, act), 2, F)
    D3 = ein("abq,qch->abch", D, D)
    rep.check("wyd3", ein("phm,knp->knhm", act, lam),
              ein("abch,fpm,xaf,kxz,zc,nbp->knhm", D3, lam, m, m, S, act), 2, F)
    conditional_agreement(rep, YD_FORMS, YD_PREMISES, "equivalent-yd-forms")
    return rep


def verify_weak_morphism(H, f, B, B2, rep=None, prefix="morphism-"):
    """f: B -> B2 is an algebra map intertwining both coactions."""
    F = H.field
    rep = rep or Report("weak bicomodule algebra morphism")
    algebra_map_check(rep, prefix + "alg", f, B.mu, B.unit, B2.mu, B2.unit, F)
    rep.check(prefix + "rho", ein("phq,qb->phb", B2.rho, f), ein("pq,qhb->phb", f, B.rho), 1, F)
    rep.check(prefix + "lambda", ein("hpq,qb->hpb", B2.lam, f), ein("pq,hqb->hpb", f, B.lam), 1, F)
    return rep


def regular_weak_bicomodule(H):
    """H over itself: both coactions are the coproduct, v = id."""
    return WeakBicomoduleAlgebraData(H.mu, H.unit, H.delta, H.delta, H.field.eye(H.dim),
                                     field=H.field, labels=H.labels, name="regular")


# ---------------------------------------------------------------------------
# the smash product as a bicomodule algebra

def weak_yd_smash_bicomodule(H, A, check=True):
    """A #_{H_t} H with rho(a#h) = (a#h_1) (x) h_2, lambda(a#h) = a^(-1) h_1 (x) (a^(0)#h_2)
    and j(h) = 1#h.  Returns (B, RelativeSmashData, Report)."""
    F = H.field
    rep = Report("weak smash bicomodule algebra")
    rep.merge(verify_weak_module_algebra(H, A))
    coA = WeakBicomoduleAlgebraData(A.mu, A.unit, lam=A.coact, field=F)
    rep.merge(verify_weak_comodule_algebra(H, coA, "left"))
    rep.merge(verify_weak_yd(H, WeakYDData(A.act, A.coact, F)))
    if check:
        rep.require()
    Es = H.eps_s()
    # y . a = eps(a^(-1) y) a^(0) for y in H_s
    rep.check("calanen", ein("kpa,ph->kha", A.act, Es),
              ein("cka,q,qcp,ph->kha", A.coact, H.counit, H.mu, Es), 2, F)
    l1 = ein("fpa,a->fp", A.coact, A.unit)
    rep.check("consec", ein("fg,gk->fk", Es, l1), l1, 0, F)
    RS = relative_smash(H, A, check=False, rep=rep)
    Qt, q, s = RS.quotient, RS.q, RS.s
    dA, d = A.dim, H.dim
    n = dA * d
    rho_full = ein("ka,lfh->klfah", F.eye(dA), H.delta).reshape(n, d, n)
    lam_full = ein("cka,fcx,xlh->fklah", A.coact, H.mu, H.delta).reshape(d, n, n)
    wd = ein("ck,kfr->cfr", q, ein("kfx,xr->kfr", rho_full, Qt.rel))
    rep.check("rho-well-defined", wd, F.zeros(wd.shape), 1, F)
    wd = ein("ck,fkr->fcr", q, ein("fkx,xr->fkr", lam_full, Qt.rel))
    rep.check("lambda-well-defined", wd, F.zeros(wd.shape), 1, F)
    rho = F.norm(ein("ck,kfx,xa->cfa", q, rho_full, s))
    lam = F.norm(ein("ck,fkx,xa->fca", q, lam_full, s))
    j = F.norm(ein("ck,kh->ch", q, outer(A.unit, F.eye(d)).reshape(n, d)))
    B = WeakBicomoduleAlgebraData(RS.mu, RS.unit, lam, rho, j, field=F,
                                  name=f"{A.name}#{H.name}")
    rep.merge(verify_weak_comodule_algebra(H, B, "both"), prefix="A#H:")
    verify_weak_morphism(H, j, regular_weak_bicomodule(H), B, rep, prefix="j-")
    if check:
        rep.require()
    return B, RS, rep


# ---------------------------------------------------------------------------
# weak Hopf bimodules, coinvariants and their decomposition

def verify_weak_hopf_bimodule(H, M, sides="both"):
    """Bimodule and bicomodule whose coactions are bimodule maps."""
    F, m, u, D, e = H.field, H.mu, H.unit, H.delta, H.counit
    L, R, lam, rho = M.left, M.right, M.lam, M.rho
    n = M.dim
    rep = Report("weak Hopf bimodule")
    _check_module(rep, "bimodule", m, u, L, F)
    rep.check("bimodule", ein("kng,nmh->kmhg", R, R), ein("kmp,phg->kmhg", R, m), 3, F)
    rep.check("bimodule", ein("kmh,h->km", R, u), F.eye(n), 1, F)
    rep.check("bimodule", ein("knh,nam->kamh", R, L), ein("kan,nmh->kamh", L, R), 3, F)
    if sides in ("right", "both"):
        rep.check("right-comodule", ein("nhm,h->nm", rho, e), F.eye(n), 1, F)
        rep.check("right-comodule", ein("phq,qga->phga", rho, rho),
                  ein("pfa,hgf->phga", rho, D), 1, F)
        rep.check("rho-bilinear", ein("nfk,kam->nfam", rho, L),
                  ein("xya,pqm,nxp,fyq->nfam", D, rho, L, m), 2, F)
        rep.check("rho-bilinear", ein("nfk,kma->nfma", rho, R),
                  ein("xya,pqm,npx,fqy->nfma", D, rho, R, m), 2, F)
    if sides in ("left", "both"):
        rep.check("left-comodule", ein("hnm,h->nm", lam, e), F.eye(n), 1, F)
        rep.check("left-comodule", ein("hqb,gcq->hgcb", lam, lam),
                  ein("qcb,hgq->hgcb", lam, D), 1, F)
        rep.check("lambda-bilinear", ein("fnk,kam->fnam", lam, L),
                  ein("xya,qpm,fxq,nyp->fnam", D, lam, m, L), 2, F)
        rep.check("lambda-bilinear", ein("fnk,kma->fnma", lam, R),
                  ein("xya,qpm,fqx,npy->fnma", D, lam, m, R), 2, F)
    if sides == "both":
        rep.check("bicomodule", ein("hpq,qgb->hpgb", lam, rho), ein("hqb,pgq->hpgb", lam, rho), 1, F)
    return rep


def weak_coinvariants(H, M, rep=None):
    """E(m) = m_(0) . S(m_(1)); returns (E, splitting, action tensor, report).

    The image of E is compared with the subspace
    {m : rho(m) = m_(0) (x) eps_t(m_(1))} computed independently.
    """
    F = H.field
    rep = rep if rep is not None else Report("weak coinvariants")
    E = F.norm(ein("pfm,gf,npg->nm", M.rho, H.S, M.right))
    rep.check("E-idempotent", F.norm(E.dot(E)), E, 1, F)
    rep.require("E-idempotent")
    sp = split_idempotent(LinearMap(E, F))
    n, d = M.dim, H.dim
    diff = M.rho - ein("fg,pgm->pfm", H.eps_t(), M.rho)
    K = nullspace(F.norm(diff.reshape(n * d, n)), F)
    rep.add("coinvariant-subspace", same_span(sp.i.mat, K, F),
            note=f"image of E has rank {sp.rank}, defining subspace has dimension {K.shape[1]}")
    tri = F.norm(ein("nk,khm->nhm", E, M.left))
    i, p = sp.i.mat, sp.p.mat
    act = F.norm(ein("an,nhk,kb->ahb", p, tri, i))
    _check_module(rep, "tria", H.mu, H.unit, act, F)
    return E, sp, tri, rep


def construct_weak_from_yd(H, V, rep=None):
    """V (x)_{H_t} H with its weak Hopf bimodule structure.  Returns
    (TwoSidedBimoduleData on the quotient, Quotient)."""
    from .quasi_hopf import TwoSidedBimoduleData
    F, m, D = H.field, H.mu, H.delta
    rep = rep if rep is not None else Report("weak Hopf bimodule from a YD module")
    k, d = V.dim, H.dim
    n = k * d
    rel = balanced_relations(H, lambda z: F.norm(ein("kpa,p->ka", V.act, H.S.dot(z))), k)
    Qt = Quotient(rel, n, F)
    q, s, R0 = Qt.q, Qt.s, Qt.rel
    left = ein("xya,wxv,sym->wsavm", D, V.act, m).reshape(n, d, n)
    right = ein("wv,shb->wsvhb", F.eye(k), m).reshape(n, n, d)
    lam = ein("cwv,fcx,xsh->fwsvh", V.coact, m, D).reshape(d, n, n)
    rho = ein("wv,sfh->wsfvh", F.eye(k), D).reshape(n, d, n)
    for tag, val in (("left-well-defined", ein("ck,kax,xr->car", q, left, R0)),
                     ("right-well-defined", ein("ck,kxb,xr->cbr", q, right, R0)),
                     ("lambda-well-defined", ein("ck,fkx,xr->fcr", q, lam, R0)),
                     ("rho-well-defined", ein("ck,kfx,xr->cfr", q, rho, R0))):
        rep.check(tag, val, F.zeros(val.shape), 1, F)
    Mq = TwoSidedBimoduleData(ein("ck,kax,xb->cab", q, left, s), ein("ck,kxh,xb->cbh", q, right, s),
                              ein("ck,fkx,xb->fcb", q, lam, s), ein("ck,kfx,xb->cfb", q, rho, s), F)
    return Mq, Qt


def weak_struct4corners(H, M, check=True):
    """Decompose a weak Hopf bimodule: returns (V, nu, nu_inv, report, splitting)."""
    F = H.field
    rep = Report("decomposition of a weak Hopf bimodule")
    rep.merge(verify_weak_hopf_bimodule(H, M))
    if check:
        rep.require()
    E, sp, tri, _ = weak_coinvariants(H, M, rep)
    i, p = sp.i.mat, sp.p.mat
    li = ein("hkj,jb->hkb", M.lam, i)
    rep.check("coaction-closed", ein("nk,hkb->hnb", E, li), li, 1, F)
    V = WeakYDData(F.norm(ein("an,nhk,kb->ahb", p, tri, i)), F.norm(ein("ak,hkb->hab", p, li)), F)
    rep.merge(verify_weak_yd(H, V), prefix="V:")
    Mq, Qt = construct_weak_from_yd(H, V, rep)
    rep.merge(verify_weak_hopf_bimodule(H, Mq), prefix="V(x)H:")
    nu_amb = ein("nkh,kb->nbh", M.right, i).reshape(M.dim, V.dim * H.dim)
    _check_kills(rep, "nu-well-defined", Qt, nu_amb)
    nu = F.norm(nu_amb.dot(Qt.s))
    nu_inv = _certify_invertible(rep, "nu-invertible", nu, F)
    from .quasi_hopf import bimodule_morphism_check
    bimodule_morphism_check(H, nu, Mq, M, rep)
    if check:
        rep.require()
    return V, nu, nu_inv, rep, sp


def _certify_invertible(rep, tag, mat, F):
    if mat.shape[0] != mat.shape[1]:
        rep.add(tag, False, note=f"map is {mat.shape[0]}x{mat.shape[1]}")
        raise CertificationError(f"{tag}: not square", rep, tag)
    try:
        inv = invert_map(LinearMap(mat, F)).mat
    except ArithmeticError:
        rep.add(tag, False, note="singular")
        raise CertificationError(f"{tag}: singular", rep, tag)
    rep.add(tag, True)
    return inv


# ---------------------------------------------------------------------------
# the structure theorem

def bimodule_from_weak_bicomodule(H, B):
    from .quasi_hopf import TwoSidedBimoduleData
    left = ein("kpb,ph->khb", B.mu, B.v)
    right = ein("kbp,ph->kbh", B.mu, B.v)
    return TwoSidedBimoduleData(left, right, B.lam, B.rho, H.field, labels=B.labels)


def structure_theorem_weak(H, B, check=True):
    """Decompose B as A #_{H_t} H with A = B^co(H).  Returns a dict with
    A, phi, phi_inv, the smash data and the report."""
    F = H.field
    if B.v is None:
        raise ValueError("bicomodule algebra has no embedded v")
    rep = Report("structure theorem (weak Hopf)")
    rep.merge(verify_weak_comodule_algebra(H, B, "both"), prefix="B:")
    verify_weak_morphism(H, B.v, regular_weak_bicomodule(H), B, rep, prefix="v-")
    if check:
        rep.require()
    M = bimodule_from_weak_bicomodule(H, B)
    rep.merge(verify_weak_hopf_bimodule(H, M), prefix="M:")
    E, sp, tri, _ = weak_coinvariants(H, M, rep)
    i, p = sp.i.mat, sp.p.mat
    prod = ein("kxy,xa,yb->kab", B.mu, i, i)
    rep.check("coinvariants-closed", ein("nk,kab->nab", E, prod), prod, 2, F)
    rep.check("coinvariants-closed", E.dot(B.unit), B.unit, 0, F)
    li = ein("hkj,jb->hkb", B.lam, i)
    rep.check("coinvariants-closed", ein("nk,hkb->hnb", E, li), li, 1, F)
    A = WeakModuleAlgebraData(F.norm(ein("ak,kxy->axy", p, prod)), F.norm(p.dot(B.unit)),
                              F.norm(ein("an,nhk,kb->ahb", p, tri, i)),
                              F.norm(ein("ak,hkb->hab", p, li)), F, name="A")
    if check:
        rep.require()
    S, RS, srep = weak_yd_smash_bicomodule(H, A, check=False)
    rep.merge(srep, prefix="A:")
    if check:
        rep.require()
    phi_amb = ein("bxy,xa,yh->bah", B.mu, i, B.v).reshape(B.dim, A.dim * H.dim)
    _check_kills(rep, "phi-well-defined", RS.quotient, phi_amb)
    phi = F.norm(phi_amb.dot(RS.s))
    phi_inv = _certify_invertible(rep, "phi-invertible", phi, F)
    rep.check("phi-invertible", F.norm(phi_inv.dot(phi)), F.eye(phi.shape[1]), 1, F)
    verify_weak_morphism(H, phi, S, B, rep, prefix="phi-")
    if check:
        rep.require()
    return {"A": A, "phi": phi, "phi_inv": phi_inv, "splitting": sp, "E": E,
            "smash": S, "relative": RS, "report": rep}

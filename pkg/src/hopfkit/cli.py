"""Command line interface and the JSON file format.

An algebra file is a JSON object::

    {"format": 1, "field": {"kind": "rational"} | {"kind": "prime", "p": 5},
     "kind": "quasi-hopf" | "weak-hopf" | "braided-hopf" | "module-algebra"
             | "bicomodule-algebra" | "yd-module",
     "family": "quasi" | "weak" | "braided",
     "name": "...", "labels": [...],
     "tensors": {"mu": [[["1", "0"], ...]], ...},
     "context": {"kind": "plain" | "super" | "yd", "base": {<quasi-hopf file>}},
     "object": {"grading": [...]} | {"act": ..., "coact": ...},
     "over": {<file of the Hopf algebra>}}

Rational entries are strings "p/q" in lowest terms, prime-field entries are
integers in [0, p).  ``context`` and ``object`` appear for the braided
family only, ``over`` for kinds that live over a Hopf algebra.

Exit codes: 0 all identities hold, 1 usage or parse error, 2 an identity
fails.
"""

import argparse
import json
import os
import sys

import numpy as np

from . import braided as br
from . import examples as ex
from . import quasi_hopf as qh
from . import weak_hopf as wh
from .core import QQ, CertificationError, Field, NotIdempotentError, Report, ShapeError

FORMAT_VERSION = 1
HOPF_KINDS = {"quasi-hopf": "quasi", "weak-hopf": "weak", "braided-hopf": "braided"}

# tensor names per (kind, family); names after "|" are optional
TENSORS = {
    ("quasi-hopf", "quasi"): "mu unit delta counit phi phi_inv S S_inv alpha beta",
    ("weak-hopf", "weak"): "mu unit delta counit S S_inv",
    ("braided-hopf", "braided"): "mu unit delta counit S S_inv",
    ("module-algebra", "quasi"): "mu unit act | coact",
    ("module-algebra", "weak"): "mu unit act | coact",
    ("module-algebra", "braided"): "mu unit act | coact",
    ("bicomodule-algebra", "quasi"):
        "mu unit lam rho phi_l phi_l_inv phi_r phi_r_inv phi_lr phi_lr_inv | v",
    ("bicomodule-algebra", "weak"): "mu unit | lam rho v",
    ("bicomodule-algebra", "braided"): "mu unit lam rho | v",
    ("yd-module", "quasi"): "act coact",
    ("yd-module", "weak"): "act coact",
    ("yd-module", "braided"): "act coact",
}


class UsageError(Exception):
    """Bad arguments or an unreadable input file (exit code 1)."""


def _names(kind, family):
    spec = TENSORS[(kind, family)]
    req, _, opt = spec.partition("|")
    return req.split(), opt.split()


# ---------------------------------------------------------------------------
# scalars and tensors

def encode_tensor(arr, F):
    arr = F.norm(arr)
    if arr.ndim == 0:
        x = arr[()]
        return int(x) if F.p is not None else F.fmt(x)
    return [encode_tensor(a, F) for a in arr]


def decode_tensor(data, F, where):
    def conv(x, path):
        if isinstance(x, list):
            return [conv(y, f"{path}[{k}]") for k, y in enumerate(x)]
        if isinstance(x, bool) or not isinstance(x, (int, str)):
            raise UsageError(f"{path}: expected an integer or a 'p/q' string, got {x!r}")
        try:
            return F(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"{path}: {exc}") from exc

    vals = conv(data, where)
    try:
        arr = np.array(vals, dtype=object)
    except ValueError as exc:
        raise UsageError(f"{where}: ragged array") from exc
    if arr.dtype != object or any(isinstance(x, list) for x in arr.flat):
        raise UsageError(f"{where}: ragged array")
    return F.norm(arr)


# ---------------------------------------------------------------------------
# structures <-> documents

def _family_of(b):
    return b.family


def _object_block(obj, F):
    if obj.ctx.kind == "super":
        return {"grading": list(obj.grading)}
    if obj.ctx.kind == "yd":
        return {"act": encode_tensor(obj.act, F), "coact": encode_tensor(obj.coact, F)}
    return {}


def _context_block(ctx):
    d = {"kind": ctx.kind}
    if ctx.kind == "yd":
        d["base"] = dump_doc(ex.Built("base", "quasi-hopf", "quasi", ctx.hopf))
    return d


def dump_doc(b):
    """Serialize a Built structure to a JSON-ready dict."""
    X = b.data
    F = X.field
    req, opt = _names(b.kind, b.family)
    tensors = {}
    for k in req + opt:
        t = getattr(X, k, None)
        if t is not None:
            tensors[k] = encode_tensor(t, F)
    doc = {"format": FORMAT_VERSION, "field": F.spec(), "kind": b.kind, "family": b.family,
           "name": getattr(X, "name", "") or b.name, "labels": list(X.labels),
           "tensors": tensors}
    if b.family == "braided":
        doc["context"] = _context_block(b.ctx)
        doc["object"] = _object_block(X.obj, F)
    if b.hopf is not None:
        H = b.hopf
        doc["over"] = dump_doc(ex.Built(getattr(H, "name", "") or "H",
                                        [k for k, f in HOPF_KINDS.items() if f == b.family][0],
                                        b.family, H, ctx=b.ctx))
    return doc


def _field_of(doc, where, override=None):
    if override is not None:
        return override
    try:
        return Field.from_spec(doc.get("field"))
    except (ValueError, TypeError, KeyError) as exc:
        raise UsageError(f"{where}.field: {exc}") from exc


def _context_from(doc, F, where):
    block = doc.get("context") or {"kind": "plain"}
    kind = block.get("kind")
    if kind not in br.KINDS:
        raise UsageError(f"{where}.context.kind: unknown context {kind!r}")
    if kind == "yd":
        if "base" not in block:
            raise UsageError(f"{where}.context.base: a yd context needs its base Hopf algebra")
        base = load_doc(block["base"], f"{where}.context.base", F)
        if base.kind != "quasi-hopf":
            raise UsageError(f"{where}.context.base: expected a quasi-hopf document")
        try:
            return br.BraidedContext("yd", base.data)
        except CertificationError as exc:
            raise UsageError(f"{where}.context.base: {exc}") from exc
    return br.BraidedContext(kind, field=F)


def _make_object(ctx, doc, dim, labels, where):
    F = ctx.field
    block = doc.get("object") or {}
    try:
        if ctx.kind == "super":
            return ctx.obj(dim, grading=block.get("grading", [0] * dim), labels=labels)
        if ctx.kind == "yd":
            if "act" not in block or "coact" not in block:
                raise UsageError(f"{where}.object: yd objects need act and coact")
            return ctx.obj(dim, act=decode_tensor(block["act"], F, f"{where}.object.act"),
                           coact=decode_tensor(block["coact"], F, f"{where}.object.coact"),
                           labels=labels)
        return ctx.obj(dim, labels=labels)
    except (ShapeError, CertificationError) as exc:
        raise UsageError(f"{where}.object: {exc}") from exc


def load_doc(doc, where="file", field=None, over=None, ctx=None):
    """Parse a document into a Built structure.  ``over`` replaces the
    embedded Hopf algebra; ``field`` overrides the declared field."""
    if not isinstance(doc, dict):
        raise UsageError(f"{where}: expected a JSON object")
    if doc.get("format", FORMAT_VERSION) != FORMAT_VERSION:
        raise UsageError(f"{where}.format: unsupported version {doc.get('format')!r}")
    kind = doc.get("kind")
    if kind not in ex.FILE_KINDS:
        raise UsageError(f"{where}.kind: unknown kind {kind!r}")
    family = HOPF_KINDS.get(kind) or doc.get("family")
    if family not in ex.FAMILIES:
        raise UsageError(f"{where}.family: unknown family {family!r}")
    F = _field_of(doc, where, field)
    req, opt = _names(kind, family)
    raw = doc.get("tensors")
    if not isinstance(raw, dict):
        raise UsageError(f"{where}.tensors: missing")
    missing = [k for k in req if k not in raw]
    if missing:
        raise UsageError(f"{where}.tensors: missing {', '.join(missing)}")
    unknown = sorted(set(raw) - set(req) - set(opt))
    if unknown:
        raise UsageError(f"{where}.tensors: unexpected {', '.join(unknown)}")
    T = {k: decode_tensor(v, F, f"{where}.tensors.{k}") for k, v in raw.items()}
    labels = doc.get("labels")
    name = doc.get("name", "")

    H = None
    if kind not in HOPF_KINDS:
        if over is not None:
            H = over
        elif "over" in doc:
            H = load_doc(doc["over"], f"{where}.over", field)
        else:
            raise UsageError(f"{where}: a {kind} file needs the Hopf algebra (embed 'over' or "
                             f"pass --over)")
        if H.family != family:
            raise UsageError(f"{where}: a {family} {kind} cannot live over a {H.family} Hopf "
                             f"algebra")
        if ctx is None:
            ctx = H.ctx
        H = H.data
    if family == "braided" and ctx is None:
        ctx = _context_from(doc, F, where)
    if family == "braided" and (doc.get("context") or {}).get("kind", ctx.kind) != ctx.kind:
        raise UsageError(f"{where}.context: does not match the context of the Hopf algebra")

    try:
        data = _construct(kind, family, T, F, labels, name, H, ctx, doc, where)
    except (ShapeError, ValueError, IndexError) as exc:
        if isinstance(exc, UsageError):
            raise
        raise UsageError(f"{where}: {exc}") from exc
    return ex.Built(name or kind, kind, family, data, H, ctx)


def _dim_of(T):
    if "unit" in T:
        return T["unit"].shape[0]
    return T["act"].shape[0]


def _construct(kind, family, T, F, labels, name, H, ctx, doc, where):
    g = T.get
    if family == "braided":
        obj = _make_object(ctx, doc, _dim_of(T), labels, where)
        if kind == "braided-hopf":
            return br.BraidedHopfAlgebraData(ctx, obj, g("mu"), g("unit"), g("delta"),
                                             g("counit"), g("S"), g("S_inv"), labels, name)
        if kind == "module-algebra":
            return br.BraidedModuleAlgebraData(ctx, obj, g("mu"), g("unit"), g("act"),
                                               g("coact"), labels, name)
        if kind == "bicomodule-algebra":
            return br.BraidedBicomoduleAlgebraData(ctx, obj, g("mu"), g("unit"), g("lam"),
                                                   g("rho"), g("v"), labels, name)
        return br.BraidedYDModuleData(ctx, obj, g("act"), g("coact"), labels, name)
    if kind == "quasi-hopf":
        # files are verified as written, so no rescaling of alpha and beta
        return qh.QuasiHopfAlgebraData(*(g(k) for k in _names(kind, family)[0]),
                                       field=F, labels=labels, name=name, normalize=False)
    if kind == "weak-hopf":
        return wh.WeakHopfAlgebraData(*(g(k) for k in _names(kind, family)[0]),
                                      field=F, labels=labels, name=name)
    if kind == "module-algebra":
        cls = qh.LeftModuleAlgebraData if family == "quasi" else wh.WeakModuleAlgebraData
        return cls(g("mu"), g("unit"), g("act"), g("coact"), field=F, labels=labels, name=name)
    if kind == "bicomodule-algebra":
        if family == "quasi":
            return qh.QuasiBicomoduleAlgebraData(*(g(k) for k in _names(kind, family)[0]),
                                                 v=g("v"), field=F, labels=labels, name=name)
        return wh.WeakBicomoduleAlgebraData(g("mu"), g("unit"), g("lam"), g("rho"), g("v"),
                                            field=F, labels=labels, name=name)
    if family == "quasi":
        return qh.YetterDrinfeldModuleData(g("act"), g("coact"), F, labels, name)
    return wh.WeakYDData(g("act"), g("coact"), F, labels, name)


def read_doc(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def write_json(path, obj):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps(obj))


# ---------------------------------------------------------------------------
# commands

def max_dim():
    raw = os.environ.get("HOPFKIT_MAX_DIM", "64")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"HOPFKIT_MAX_DIM must be an integer, not {raw!r}")


def _check_size(*builts):
    cap = max_dim()
    for b in builts:
        for X in (b.data, b.hopf):
            d = getattr(X, "dim", None) if X is not None else None
            if d is not None and d > cap:
                raise UsageError(f"carrier dimension {d} exceeds HOPFKIT_MAX_DIM={cap}")


def _parse_field(s):
    if s is None:
        return None
    if s in ("rational", "Q", "QQ"):
        return QQ
    try:
        return Field(int(s))
    except ValueError as exc:
        raise UsageError(f"--field: {exc}") from exc


def _summary(rep):
    lines = []
    for e in rep.entries:
        if e["ok"]:
            lines.append(f"PASS {e['id']}" + (f" ({e['note']})" if "note" in e else ""))
        else:
            lines.append(f"FAIL {e['id']} at {e.get('witness')}"
                         + (f": {e['note']}" if "note" in e else ""))
    verdict = "all identities hold" if rep.ok else f"{len(rep.failed())} identities fail"
    lines.append(f"{rep.title}: {verdict}")
    return "\n".join(lines) + "\n"


def _emit_report(rep, fmt, out, err):
    if fmt == "text":
        out.write(_summary(rep))
    else:
        out.write(dumps(rep.to_dict()))
        err.write(_summary(rep))


def cmd_verify(args, out, err):
    field = _parse_field(args.field)
    doc = read_doc(args.path)
    over = None
    if args.over:
        over = load_doc(read_doc(args.over), args.over, field)
        if over.kind not in HOPF_KINDS:
            raise UsageError(f"--over: {args.over} is not a Hopf algebra file")
    b = load_doc(doc, args.path, field, over)
    if args.kind and args.kind != b.kind:
        raise UsageError(f"{args.path}: file has kind {b.kind!r}, not {args.kind!r}")
    _check_size(b)
    rep = b.verify()
    _emit_report(rep, args.format, out, err)
    return 0 if rep.ok else 2


def _structure(variant, H, B):
    if variant == "quasi":
        res = qh.structure_theorem_quasi(H.data, B.data, check=False)
        return res, res["psi"], res["psi_inv"], "psi"
    if variant == "weak":
        res = wh.structure_theorem_weak(H.data, B.data, check=False)
        return res, res["phi"], res["phi_inv"], "phi"
    res = br.structure_theorem_braided(B.ctx, H.data, B.data, check=False)
    return res, res["omega"], res["omega_inv"], "omega"


def cmd_structure(args, out, err):
    field = _parse_field(args.field)
    H = load_doc(read_doc(args.pathH), args.pathH, field)
    if H.kind not in HOPF_KINDS:
        raise UsageError(f"{args.pathH}: expected a Hopf algebra file, got {H.kind!r}")
    if H.family != args.variant:
        raise UsageError(f"{args.pathH}: a {H.family} Hopf algebra does not fit --variant "
                         f"{args.variant}")
    B = load_doc(read_doc(args.pathB), args.pathB, field, over=H)
    if B.kind != "bicomodule-algebra":
        raise UsageError(f"{args.pathB}: expected a bicomodule-algebra file, got {B.kind!r}")
    if getattr(B.data, "v", None) is None:
        raise UsageError(f"{args.pathB}: no embedded v (tensors.v)")
    _check_size(H, B)
    os.makedirs(args.out, exist_ok=True)
    rep = None
    try:
        res, iso, iso_inv, iso_name = _structure(args.variant, H, B)
        rep = res["report"]
    except CertificationError as exc:
        rep = exc.report if exc.report is not None else Report("structure theorem")
        if exc.tag is None or exc.tag not in rep:
            rep.add(exc.tag or "certification", False, note=str(exc))
        res = None
    except NotIdempotentError as exc:
        rep = Report("structure theorem")
        rep.add("projector-idempotent", False, witness=[exc.witness], note=str(exc))
        res = None
    except ArithmeticError as exc:
        rep = Report("structure theorem")
        rep.add("certification", False, note=str(exc))
        res = None
    doc = {"variant": args.variant, **rep.to_dict()}
    write_json(os.path.join(args.out, "report.json"), doc)
    if res is not None and rep.ok:
        A = res["A"]
        F = A.field
        abuilt = ex.Built("A", "module-algebra", args.variant, A, H.data, B.ctx)
        write_json(os.path.join(args.out, "A.json"), dump_doc(abuilt))
        write_json(os.path.join(args.out, "iso.json"), {
            "format": FORMAT_VERSION, "field": F.spec(), "name": iso_name,
            "domain": "A#H", "codomain": "B", "shape": list(iso.shape),
            "matrix": encode_tensor(iso, F), "inverse": encode_tensor(iso_inv, F)})
    err.write(_summary(rep))
    if args.format == "text":
        out.write(_summary(rep))
    return 0 if (res is not None and rep.ok) else 2


def _parse_params(items):
    params = {}
    for item in items or []:
        key, sep, val = item.partition("=")
        if not sep:
            raise UsageError(f"--param expects key=value, got {item!r}")
        try:
            params[key] = json.loads(val)
        except json.JSONDecodeError:
            params[key] = val
    return params


def cmd_examples(args, out, err):
    if args.action == "list":
        rows = [{"name": n, "kind": e["kind"], "family": e["family"], "summary": e["summary"],
                 "expected": e["expected"]} for n, e in ex.CATALOG.items()]
        if args.format == "text":
            for r in rows:
                exp = "" if r["expected"] == "pass" else f"  [fails: {', '.join(r['expected'])}]"
                out.write(f"{r['name']:28s} {r['kind']:20s} {r['summary']}{exp}\n")
        else:
            out.write(dumps(rows))
        return 0
    if not args.name:
        raise UsageError("examples emit needs a NAME")
    try:
        b = ex.build_example(args.name, _parse_params(args.param))
    except ex.UnknownExample:
        raise UsageError(f"unknown example {args.name!r}; see 'hopfkit examples list'")
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    doc = dump_doc(b)
    if args.out:
        write_json(args.out, doc)
    else:
        out.write(dumps(doc))
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="hopfkit", description="Verify Hopf-type structures and run the "
                                            "structure theorems on exact data.")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--field", help="override the field: 'rational' or a prime")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    v = sub.add_parser("verify", help="check every identity of a structure")
    v.add_argument("path")
    v.add_argument("--kind", choices=ex.FILE_KINDS)
    v.add_argument("--over", help="Hopf algebra file for module/comodule kinds")

    s = sub.add_parser("structure-theorem", help="decompose B as A#H")
    s.add_argument("pathH")
    s.add_argument("pathB")
    s.add_argument("--variant", choices=ex.FAMILIES, required=True)
    s.add_argument("--out", required=True, help="output directory")

    e = sub.add_parser("examples", help="list or emit catalog entries")
    e.add_argument("action", choices=("list", "emit"))
    e.add_argument("name", nargs="?")
    e.add_argument("--out", help="output file (default stdout)")
    e.add_argument("--param", action="append", metavar="KEY=VALUE")
    for sp in (v, s, e):
        sp.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
        sp.add_argument("--field", default=argparse.SUPPRESS)
    return p


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("missing command (verify, structure-theorem or examples)")
        cmd = {"verify": cmd_verify, "structure-theorem": cmd_structure,
               "examples": cmd_examples}[args.command]
        return cmd(args, out, err)
    except UsageError as exc:
        err.write(f"hopfkit: error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())

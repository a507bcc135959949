"""Command-line front end.

Exit codes: 0 success, 1 verification counterexample, 2 invalid input.
"""

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from . import covering, homology, modsym, params, verify, words
from .errors import BelyiError


@dataclass
class OutputDocument:
    n: int
    k: int
    c: int
    object: str
    basis: str = None
    terms: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)
    text: str = ""
    latex: str = ""

    def to_dict(self):
        d = {"n": self.n, "k": self.k, "c": self.c, "object": self.object}
        if self.basis is not None:
            d["basis"] = self.basis
        d["terms"] = self.terms
        d.update(self.extra)
        return d

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, ensure_ascii=False)

    def render(self, fmt):
        if fmt == "json":
            return self.to_json()
        if fmt == "latex":
            return self.latex or self.text
        return self.text


def _doc(p, obj, **kw):
    return OutputDocument(n=p.n, k=p.k, c=p.c, object=obj, **kw)


def cmd_validate(p):
    return _doc(
        p, "params",
        extra={"g": p.g, "inertia": list(p.inertia)},
        text=f"n={p.n} k={p.k} c={p.c} g={p.g} inertia={p.inertia}",
    )


def cmd_delta(p, basis="e"):
    if basis == "t":
        td = homology.t_decomposition(p)
        return _doc(
            p, "delta", basis="T",
            terms=[{"r": r, "coeff": t} for r, t in td.items()],
            text=str(td), latex=td.latex(),
        )
    delta = homology.closed_form_delta(p)
    return _doc(
        p, "delta", basis="E",
        terms=[{"i": i, "j": j, "coeff": c} for (i, j), c in delta.items()],
        text=str(delta), latex=delta.latex(),
    )


def _word_doc(p, obj, letters, **extra):
    text = "·".join(str(l) for l in letters) if letters else "1"
    latex = " ".join(
        f"E_{{{l.index}}}" if l.sign == 1 else f"E_{{{l.index}}}^{{-1}}" for l in letters
    )
    return _doc(
        p, obj,
        terms=[{"index": l.index, "sign": l.sign} for l in letters],
        extra=extra, text=text, latex=latex,
    )


def cmd_word(p, placeholders=False):
    _, L = covering.lift_boundary_loop(p)
    if not placeholders:
        L = words.strip_placeholders(L)
    return _word_doc(p, "word", L.letters, placeholders=placeholders)


def cmd_between(p, i):
    _, L = covering.lift_boundary_loop(p)
    return _word_doc(p, "between", words.between(L, i), i=int(i) % p.n)


def cmd_sheets(p):
    table = covering.gluing_table(p)
    rows = table.rows()
    return _doc(
        p, "sheets",
        terms=[{"edge": kind.value, "sheet": s, "target": t} for kind, s, t in rows],
        text="\n".join(f"{kind.value}: {s} -> {t}" for kind, s, t in rows),
    )


def cmd_modsym(p, check=False):
    S = modsym.SymbolCombination
    lines, terms = [], []
    for r in range(1, p.n):
        rho = S.rho(p.n, r)
        image = modsym.rho_to_E(p, rho)
        lines.append(f"rho_{r} = {rho} -> {image}")
        terms.append({"r": r, "symbol": str(rho), "image": str(image)})
    extra = {}
    if check:
        ok = verify.modsym_checks(p)
        extra["check"] = ok
        lines.append(f"modular-symbol checks: {'PASS' if ok else 'FAIL'}")
    return _doc(p, "modsym", terms=terms, extra=extra, text="\n".join(lines))


def cmd_fermat_image(p, i, j):
    v = homology.fermat_image(p, i, j)
    return _doc(
        p, "fermat_image",
        terms=[{"i": idx, "coeff": c} for idx, c in v.items()],
        extra={"loop": [int(i) % p.n, int(j) % p.n]},
        text=str(v),
    )


def cmd_subst(p, j):
    w = homology.substitute(p, homology.closed_form_delta(p), j)
    jinv = pow(int(j), -1, p.n)
    inertia = [jinv % p.n, (jinv * p.k) % p.n, (-jinv * (p.k + 1)) % p.n]
    return _doc(
        p, "subst",
        terms=[{"i": a, "j": b, "coeff": c} for (a, b), c in w.items()],
        extra={"j": int(j) % p.n, "inertia": inertia},
        text=f"{w}\ninertia type {tuple(inertia)}",
        latex=w.latex(),
    )


def cmd_verify(max_n, jobs=1, out=sys.stdout):
    t0 = time.perf_counter()
    reports = verify.sweep(max_n, jobs=jobs)
    by_n = {}
    for rep in reports:
        by_n.setdefault(rep.n, []).append(rep)
    print(f"{'n':>4} {'pairs':>6} {'status':>7} {'seconds':>8}", file=out)
    for n, reps in sorted(by_n.items()):
        status = "ok" if all(r.ok for r in reps) else "FAIL"
        print(f"{n:>4} {len(reps):>6} {status:>7} {sum(r.seconds for r in reps):>8.3f}", file=out)
    sign = verify.substitution_remark_sign()
    print(f"substitution remark (n=5, inertia (3,1,1), j=3): relabelled = {sign:+d} x Delta_5,2",
          file=out)
    for rep in reports:
        if not rep.ok:
            print(f"counterexample: n={rep.n} k={rep.k} property={rep.failures()[0]}", file=out)
            return 1
    print(f"checked {len(reports)} (n,k) pairs in {time.perf_counter() - t0:.1f}s: all properties hold",
          file=out)
    return 0


def build_parser():
    ap = argparse.ArgumentParser(
        prog="belyi",
        description="Classifying element of the cyclic Belyi curve v^n = u(1-u)^k.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def pair(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("n", type=int)
        sp.add_argument("k", type=int)
        sp.add_argument("--format", choices=("text", "json", "latex"), default="text")
        return sp

    pair("validate", "check (n, k) and print derived constants")
    sp = pair("delta", "classifying element")
    sp.add_argument("--basis", choices=("e", "t"), default="e")
    sp = pair("word", "the boundary word L")
    sp.add_argument("--placeholders", action="store_true", help="keep E_0 letters")
    sp = pair("between", "letters between E_i^-1 and E_i in L")
    sp.add_argument("i", type=int)
    pair("sheets", "gluing table of the slit cover")
    sp = pair("modsym", "rho_r <-> [E_r] dictionary")
    sp.add_argument("--check", action="store_true", help="run the modular-symbol checks")
    sp = pair("fermat-image", "homology image of the Fermat loop E_{i,j}")
    sp.add_argument("i", type=int)
    sp.add_argument("j", type=int)
    sp = pair("subst", "relabel Delta by E_i -> E_{j i mod n}")
    sp.add_argument("j", type=int)

    sp = sub.add_parser("verify", help="cross-verification sweep over all valid (n, k)")
    sp.add_argument("--max-n", type=int, required=True)
    sp.add_argument("--jobs", type=int, default=1)
    return ap


def main(argv=None, out=None):
    out = out or sys.stdout
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.command == "verify":
        if args.max_n < 3:
            ap.error("--max-n must be at least 3")
        return cmd_verify(args.max_n, jobs=args.jobs, out=out)
    try:
        p = params.validate(args.n, args.k)
        if args.command == "validate":
            doc = cmd_validate(p)
        elif args.command == "delta":
            doc = cmd_delta(p, args.basis)
        elif args.command == "word":
            doc = cmd_word(p, args.placeholders)
        elif args.command == "between":
            doc = cmd_between(p, args.i)
        elif args.command == "sheets":
            doc = cmd_sheets(p)
        elif args.command == "modsym":
            doc = cmd_modsym(p, args.check)
        elif args.command == "fermat-image":
            doc = cmd_fermat_image(p, args.i, args.j)
        else:
            doc = cmd_subst(p, args.j)
    except BelyiError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(doc.render(args.format), file=out)
    if doc.extra.get("check") is False:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""``forms`` command line: build, eval, psd, refute, verify-cert, verify-identities,
classify, chart, jump.

Exit codes: 0 success, 1 usage or validation error, 2 negative mathematical
outcome (inconclusive refutation, failed identity).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import glossary, jumper, positivity, refuter
from .glossary import FormId
from .polyring import Form, FormError

EXIT_OK, EXIT_USAGE, EXIT_NEGATIVE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _dump(obj) -> str:
    return json.dumps(obj, indent=1, ensure_ascii=False) + "\n"


def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON in {path}: {exc}") from exc


def _read_form(path: str) -> Form:
    return Form.from_dict(_read_json(path))


def _form_id(tag: str, args, n_hint=None) -> FormId:
    n = getattr(args, "n", None) or n_hint
    m = getattr(args, "m", None)
    kw = {"n": n, "m": m, "r": getattr(args, "r", None)}
    if tag in ("C", "D") and m is None and n is not None:
        kw["m"], kw["n"] = n // 2, None
    if tag in ("L", "G", "M2G") and m is None and n is not None:
        kw["m"], kw["n"] = (n - 1) // 2, None
    if tag == "MSextic":
        abc = getattr(args, "abc", None)
        if abc is None and getattr(args, "a", None) is not None:
            abc = (args.a, args.b, args.c)
        if abc is None or None in abc:
            raise UsageError("MSextic needs coefficients a, b, c")
        kw.update(a=Fraction(abc[0]), b=Fraction(abc[1]), c=Fraction(abc[2]))
    return FormId(tag, **kw)


def _emit(payload: str, out: str | None, summary: dict | None = None):
    if out:
        Path(out).write_text(payload)
        sys.stdout.write(_dump(summary or {"written": out}))
    else:
        sys.stdout.write(payload)


# ---------------------------------------------------------------------------
# verbs

def cmd_build(args) -> int:
    entry = glossary.build(_form_id(args.id, args))
    _emit(entry.form.to_json(), args.out,
          {"written": args.out, "id": entry.id.to_dict(), "claimed_status": entry.claimed_status})
    return EXIT_OK


def cmd_eval(args) -> int:
    f = _read_form(args.input)
    point = [Fraction(v) for v in args.point.split(",")]
    sys.stdout.write(_dump({"point": [str(v) for v in point], "value": str(f.evaluate(point))}))
    return EXIT_OK


def cmd_psd(args) -> int:
    if args.msextic is not None:
        a, b, c, n = args.msextic
        coeffs = positivity.MSexticCoeffs(Fraction(a), Fraction(b), Fraction(c), int(n))
        if args.input and _read_form(args.input) != coeffs.form():
            raise UsageError("input form is not the stated power-sum sextic")
        verdict = positivity.m_sextic_verdict(coeffs)
        payload = verdict.to_dict()
        payload["status_pair"] = positivity.m_sextic_status(coeffs).to_dict()
    else:
        if not args.input:
            raise UsageError("--in is required unless --msextic is given")
        f = _read_form(args.input)
        if args.quartic_symmetric:
            verdict = positivity.quartic_symmetric_psd(f, args.budget)
        elif args.search:
            pt = positivity.search_counterexample(f, args.budget)
            verdict = positivity._refuted(f, pt, "counterexample search") if pt is not None else \
                positivity.PsdVerdict(positivity.UNKNOWN, "counterexample search exhausted")
        else:
            verdict = positivity.decide_psd(f, args.budget)
        payload = verdict.to_dict()
    sys.stdout.write(_dump(payload))
    return EXIT_OK


def cmd_refute(args) -> int:
    f = _read_form(args.input)
    if bool(args.script) == bool(args.builtin):
        raise UsageError("give exactly one of --script or --builtin")
    if args.script:
        script = refuter.RefutationScript.from_dict(_read_json(args.script))
    else:
        script = refuter.builtin_script(_form_id(args.builtin, args, n_hint=f.n))
    res = refuter.refute(f, script)
    if args.trace:
        _trace(f, res)
    if isinstance(res, refuter.Inconclusive):
        sys.stdout.write(_dump(res.to_dict()))
        return EXIT_NEGATIVE
    _emit(res.to_json(), args.out, {"written": args.out, "certificate": True,
                                    "target": list(res.target)})
    return EXIT_OK


def _trace(f: Form, res):
    cert = res
    while isinstance(cert, refuter.RefutationCertificate) and cert.inner is not None:
        sys.stderr.write(f"restriction: zeroing variables {list(cert.script.zeroed)}\n")
        cert = cert.inner
    if isinstance(cert, refuter.RefutationCertificate):
        sysm = refuter.ConstraintSystem(cert.support, cert.rows, cert.provenance)
    else:
        sysm = res.system
    if sysm is not None:
        sys.stderr.write(sysm.render() + "\n")


def cmd_verify_cert(args) -> int:
    f = _read_form(args.form)
    try:
        cert = refuter.RefutationCertificate.from_dict(_read_json(args.cert))
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed certificate: {exc}") from exc
    ok = refuter.verify_certificate(f, cert)
    sys.stdout.write(_dump({"valid": ok}))
    return EXIT_OK if ok else EXIT_USAGE


def cmd_verify_identities(args) -> int:
    report = glossary.verify_identities()
    ok = all(r["passed"] for r in report)
    sys.stdout.write(_dump({"all_passed": ok, "identities": report}))
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_classify(args) -> int:
    sys.stdout.write(_dump(jumper.classify(args.n, args.deg).to_dict()))
    return EXIT_OK


def cmd_chart(args) -> int:
    rows = jumper.chart(args.n_max, args.deg_max)
    if args.format == "text":
        sys.stdout.write(jumper.chart_text(rows))
    else:
        sys.stdout.write(_dump([[e.to_dict() for e in row] for row in rows]))
    return EXIT_OK


def cmd_jump(args) -> int:
    if args.seed_id:
        pf = jumper.seed(_form_id(args.seed_id, args))
    else:
        if not (args.input and args.cert):
            raise UsageError("jump needs --seed-id, or --in together with --cert")
        f = _read_form(args.input)
        cert = refuter.RefutationCertificate.from_dict(_read_json(args.cert))
        if not refuter.verify_certificate(f, cert):
            raise UsageError("certificate does not verify against the input form")
        pf = jumper.ProvenancedForm(f, positivity.decide_psd(f),
                                    jumper.SosStatus(jumper.NOT_SOS, cert, "verified certificate"),
                                    {"seed": args.input})
    if not pf.not_sos:
        raise UsageError("seed has no not-sos provenance")
    out = jumper.jump_pq(pf, args.pq) if args.pq is not None else jumper.jump_allvars(pf)
    _emit(_dump(out.to_dict()), args.out, {"written": args.out, "degree": out.form.degree,
                                           "n": out.form.n, "lineage": out.lineage})
    return EXIT_OK


# ---------------------------------------------------------------------------

def _add_id_params(p):
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--abc", nargs=3, metavar=("A", "B", "C"))


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="forms", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("build", help="construct a glossary form")
    p.add_argument("--id", required=True, choices=glossary.TAGS)
    _add_id_params(p)
    p.add_argument("--a")
    p.add_argument("--b")
    p.add_argument("--c")
    p.add_argument("--out")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("eval", help="evaluate a form at a rational point")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--point", required=True, help="comma separated rationals, e.g. 1,1/2,0")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("psd", help="decide or refute positive semidefiniteness")
    p.add_argument("--in", dest="input")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--quartic-symmetric", action="store_true")
    g.add_argument("--msextic", nargs=4, metavar=("A", "B", "C", "N"))
    g.add_argument("--search", action="store_true")
    p.add_argument("--budget", type=int, default=2000)
    p.set_defaults(func=cmd_psd)

    p = sub.add_parser("refute", help="search for a not-sos certificate")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--script")
    p.add_argument("--builtin", choices=glossary.TAGS)
    _add_id_params(p)
    p.add_argument("--out")
    p.add_argument("--trace", action="store_true", help="dump the constraint matrix to stderr")
    p.set_defaults(func=cmd_refute)

    p = sub.add_parser("verify-cert", help="independently re-check a certificate")
    p.add_argument("--form", required=True)
    p.add_argument("--cert", required=True)
    p.set_defaults(func=cmd_verify_cert)

    p = sub.add_parser("verify-identities", help="check every displayed identity")
    p.set_defaults(func=cmd_verify_identities)

    p = sub.add_parser("classify", help="answer for one (n, 2d)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--deg", type=int, required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("chart", help="classification chart")
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--deg-max", type=int, default=14)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_chart)

    p = sub.add_parser("jump", help="degree jumping from a certified seed")
    p.add_argument("--seed-id", choices=glossary.TAGS)
    _add_id_params(p)
    p.add_argument("--in", dest="input")
    p.add_argument("--cert")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--pq", type=int, metavar="R")
    g.add_argument("--allvars", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_jump)
    return parser


def run(argv=None) -> int:
    try:
        args = make_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"forms: error: {exc}\n")
        return EXIT_USAGE
    except (FormError, refuter.ScriptError, jumper.JumpError, ValueError) as exc:
        sys.stderr.write(f"forms: error: {exc}\n")
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

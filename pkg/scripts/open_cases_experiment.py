"""Probe Q_3 and Q_4, whose sos status is open, with enlarged zero sets.

For each variant the kernel dimension and the target coordinates are printed;
a certificate here would settle the case.
"""

import argparse
from dataclasses import dataclass

from evensos.glossary import FormId, build
from evensos.polyring import PatternPoint, PointFamily
from evensos.refuter import Inconclusive, RefutationScript, refute


@dataclass
class OpenCaseConfig:
    ns: tuple = (3, 4)
    targets: tuple = ("x1^6", "x1^4x2^2", "x1^2x2^2x3^2")


def _target(n, name):
    table = {"x1^6": {0: 6}, "x1^4x2^2": {0: 4, 1: 2}, "x1^2x2^2x3^2": {0: 2, 1: 2, 2: 2}}
    return tuple(table[name].get(i, 0) for i in range(n))


def _zeros(n, f):
    fams = []
    for t in range(1, n + 1):
        fam = PointFamily(PatternPoint.v(n, range(t)), signs=True)
        if all(f.evaluate(p) == 0 for p in fam.points()):
            fams.append(fam)
    return fams


def main(cfg: OpenCaseConfig):
    for n in cfg.ns:
        f = build(FormId("Q", n=n)).form
        zeros = _zeros(n, f)
        print(f"Q{n}: zero orbits at v_t for t in "
              f"{[sum(1 for v in z.pattern.entries if v) for z in zeros]}")
        for name in cfg.targets:
            mu = _target(n, name)
            if max(i for i, e in enumerate(mu) if e) >= n:
                continue
            res = refute(f, RefutationScript(mu, zeros, name=f"Q{n}:{name}"))
            if isinstance(res, Inconclusive):
                print(f"  {name:<14} inconclusive: {res.reason} (kernel dim {res.kernel_dimension})")
            else:
                print(f"  {name:<14} CERTIFICATE")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, nargs="*", default=[3, 4])
    main(OpenCaseConfig(ns=tuple(ap.parse_args().n)))

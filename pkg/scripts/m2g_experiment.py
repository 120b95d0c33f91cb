"""Run the generic refuter on M_2 G_{2m+1} with zeros inherited from G_{2m+1}."""

import argparse
import time
from dataclasses import dataclass

from evensos.glossary import FormId, build
from evensos.positivity import certify_glossary
from evensos.refuter import Inconclusive, builtin_script, refute, verify_certificate


@dataclass
class M2GConfig:
    ms: tuple = (2,)


def main(cfg: M2GConfig):
    for m in cfg.ms:
        fid = FormId("M2G", m=m)
        f = build(fid).form
        print(f"M2G{2 * m + 1}: degree {f.degree}, {len(f)} terms, psd: {certify_glossary(fid).status}")
        t0 = time.perf_counter()
        res = refute(f, builtin_script(fid))
        dt = time.perf_counter() - t0
        if isinstance(res, Inconclusive):
            print(f"  inconclusive after {dt:.1f}s: {res.reason}")
        else:
            print(f"  certificate after {dt:.1f}s, target {res.target}, verified {verify_certificate(f, res)}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--m", type=int, nargs="*", default=[2])
    main(M2GConfig(ms=tuple(ap.parse_args().m)))

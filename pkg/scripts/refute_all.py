"""Refute every glossary form that has a built-in script and report timings.

Certificates are written to ``--out`` when given.
"""

import argparse
import time
from dataclasses import dataclass, field
from pathlib import Path

from evensos.glossary import FormId, build
from evensos.refuter import Inconclusive, builtin_script, refute, verify_certificate

DEFAULT_IDS = [
    FormId("D", m=2), FormId("D", m=3), FormId("G", m=2), FormId("T", n=4), FormId("T", n=5),
    FormId("P", n=4), FormId("P", n=5), FormId("Q", n=5), FormId("Q", n=6),
    FormId("Rdodecic", n=3), FormId("Rdodecic", n=4), FormId("Rdodecic", n=5), FormId("Robinson"),
    # expected to stay inconclusive: these are sums of squares, or open
    FormId("P", n=3), FormId("T", n=3), FormId.msextic(1, -3, 2, 4), FormId("Q", n=4),
]


@dataclass
class RefuteConfig:
    ids: list = field(default_factory=lambda: list(DEFAULT_IDS))
    out: Path | None = None


def main(cfg: RefuteConfig):
    if cfg.out:
        cfg.out.mkdir(parents=True, exist_ok=True)
    for fid in cfg.ids:
        f = build(fid).form
        t0 = time.perf_counter()
        res = refute(f, builtin_script(fid))
        dt = time.perf_counter() - t0
        if isinstance(res, Inconclusive):
            print(f"{fid.label():<24} inconclusive  {dt:6.2f}s  {res.reason}")
            continue
        ok = verify_certificate(f, res)
        print(f"{fid.label():<24} certificate   {dt:6.2f}s  target={res.target} verified={ok}")
        if cfg.out:
            (cfg.out / f"{fid.label()}.cert.json").write_text(res.to_json())


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", type=Path)
    main(RefuteConfig(out=ap.parse_args().out))

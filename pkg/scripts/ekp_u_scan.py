"""Check x^3 + u*x^36 over GF(2^10) for every admissible coefficient u.

The admissible set is w*S union w^2*S with w of multiplicative order 3 and
S the nonzero elements of the degree-5 subfield (62 coefficients).  Each one
should give differential uniformity exactly 2.  Full scan takes a minute or
two; --sample N spot-checks N evenly spaced coefficients instead.

    python scripts/ekp_u_scan.py --sample 8
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass

from apnforge import UniPoly, create_field, diff_spectrum, ekp_admissible_u


@dataclass(frozen=True)
class ScanConfig:
    sample: int | None = None  # None scans all 62
    jobs: int = 1


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sample", type=int, default=None)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    cfg = ScanConfig(sample=args.sample, jobs=args.jobs)

    ctx = create_field(10)
    us = ekp_admissible_u(ctx)
    if cfg.sample:
        step = max(1, len(us) // cfg.sample)
        us = us[::step][: cfg.sample]

    failures = 0
    start = time.perf_counter()
    for u in us:
        f = UniPoly(ctx, {36: u, 3: 1})
        uniformity = diff_spectrum(f, jobs=cfg.jobs).uniformity
        ok = uniformity == 2
        failures += not ok
        print(f"u=0x{u:03x}  uniformity={uniformity}  {'ok' if ok else 'NOT APN'}")
    elapsed = time.perf_counter() - start

    print(
        f"{len(us)} coefficients checked in {elapsed:.1f}s, {failures} failures",
        file=sys.stderr,
    )
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())

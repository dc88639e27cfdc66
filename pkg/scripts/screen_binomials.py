"""Survey the screening verdicts of all binomials x^d + c*x^e over GF(2^n).

Writes one CSV row per (d, e, c) with the verdict status, cited theorem, and
whether the verdict replays.  Intended for eyeballing how much of the binomial
space each criterion settles, e.g.:

    python scripts/screen_binomials.py --n 5 --max-degree 33
"""

from __future__ import annotations

import argparse
import csv
import sys
from collections import Counter
from dataclasses import dataclass

from apnforge import UniPoly, create_field, replay_trace, screen_exceptional


@dataclass(frozen=True)
class SurveyConfig:
    n: int = 5
    max_degree: int = 33
    coefficients: tuple[int, ...] = (1,)
    check_replay: bool = True


def survey(cfg: SurveyConfig):
    ctx = create_field(cfg.n)
    for d in range(3, cfg.max_degree + 1):
        for e in range(1, d):
            for c in cfg.coefficients:
                f = UniPoly(ctx, {d: 1, e: c})
                verdict = screen_exceptional(f)
                replayed = replay_trace(f, verdict) if cfg.check_replay else None
                yield {
                    "poly": f.render(),
                    "d": d,
                    "e": e,
                    "status": verdict.status,
                    "theorem": verdict.theorem or "",
                    "heuristic": verdict.heuristic,
                    "replays": replayed,
                }


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=5)
    ap.add_argument("--max-degree", type=int, default=33)
    ap.add_argument("--coeffs", type=str, default="1", help="comma-separated hex coefficients for the trailing term")
    args = ap.parse_args()

    cfg = SurveyConfig(
        n=args.n,
        max_degree=args.max_degree,
        coefficients=tuple(int(c, 16) for c in args.coeffs.split(",")),
    )

    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["poly", "d", "e", "status", "theorem", "heuristic", "replays"])
    tally: Counter[str] = Counter()
    bad_replays = 0
    for row in survey(cfg):
        writer.writerow([row[k] for k in ("poly", "d", "e", "status", "theorem", "heuristic", "replays")])
        tally[row["status"]] += 1
        bad_replays += row["replays"] is False

    print(f"totals: {dict(sorted(tally.items()))}", file=sys.stderr)
    if bad_replays:
        print(f"WARNING: {bad_replays} verdicts failed to replay", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

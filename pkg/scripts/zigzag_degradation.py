#!/usr/bin/env python3
"""How long zigzags crush the lower Riesz bound of finite sections.

For high-multiplicity sets containing a zigzag of growing length N, the
alternating combination along the zigzag keeps its norm below 2 while its
coefficients carry weight N+1, so the smallest section eigenvalue decays at
least like 2/(N+1).
"""

import argparse

from addspec import (
    alternating_zigzag_norm,
    l_space,
    lev_style_set,
    riesz_section_certificate,
    staircase_zigzag,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, default=2)
    ap.add_argument("--depths", default="3,7,15,31,63")
    args = ap.parse_args()

    space = l_space()
    print(f"{'depth':>6} {'points':>7} {'zigzag norm^2':>14} {'lambda_min':>12} {'2/(N+1)':>10}")
    for depth in (int(v) for v in args.depths.split(",")):
        es = lev_style_set(args.q, depth)
        spine = staircase_zigzag(depth)
        norm_sq = alternating_zigzag_norm(space, spine)
        cert = riesz_section_certificate(space, es.points, [depth + 1, len(es)])
        print(f"{depth:>6} {len(es):>7} {norm_sq:>14.6f} "
              f"{cert.floor:>12.3e} {2 / (depth + 1):>10.3e}")


if __name__ == "__main__":
    main()

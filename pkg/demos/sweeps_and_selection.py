#!/usr/bin/env python3
"""The two exhaustive parameter sweeps and the exact q-selection rules.

The middle regime 2c <= b <= c^2/2 is settled by computation for c <= 500
and by a four-case closed-form choice of q beyond that.  This script runs a
compact slice of each sweep and prints selection traces along the case
boundaries, where only exact integer arithmetic keeps the decisions honest.
"""

from epolab import analysis_q, strategy_check, sweep_c40, sweep_c500


def main():
    print("Interval-coverage sweep (small c)")
    print("-" * 60)
    rep = sweep_c40(2, 20)
    print(f"c in [2,20]: {rep.cells} (b,c,n) cells, {len(rep.failures)} failures, "
          f"{rep.wall_time_ms} ms")

    print()
    print("Strategy sweep (mid c)")
    print("-" * 60)
    rep = sweep_c500(41, 100)
    print(f"c in [41,100]: {rep.cells} (b,c) pairs, {len(rep.failures)} failures, "
          f"{rep.wall_time_ms} ms")

    print()
    print("Closed-form q selection (large c)")
    print("-" * 60)
    c = 1000
    for b in [2 * c, c * c // 20, c * c // 20 + 1, c * c * 5 // 21,
              c * c * 5 // 17, c * c // 3, c * c // 2]:
        t = analysis_q(b, c)
        extra = f" internals={t.internals}" if t.internals else ""
        print(f"b={b:>7}: case {t.case}, q={t.q:>4}, window [{t.x}, {t.y}]{extra}")
        assert strategy_check(b, c, t.q)
    print()
    print("Every trace satisfies x >= c+1, x < y, and the threshold bound;")
    print("all case thresholds are compared by cross-multiplied integers.")


if __name__ == "__main__":
    main()

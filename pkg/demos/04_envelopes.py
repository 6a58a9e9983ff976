"""Walkthrough: closed-form envelopes that bracket V_q(x).

Three elementary expressions pin the potential from both sides:

  lower_exp     2^(q+1) x^(2q+1) / (1 + 2x^2)^(q+1),
                valid for every q > -1;
  lower_kratzel Z_1^(q+1/2)(x^2/2) / Gamma(q+1), a Bessel-type bound
                built on the Kraetzel integral, valid for every q > -1;
  upper_agm     Gamma(q+3/4) / (sqrt(2x) Gamma(q+1)), derived from an
                arithmetic-geometric-mean inequality, valid only for
                q > -3/4.
"""
import numpy as np

from regcoulomb import vq, vq_envelope


def main() -> None:
    print("=== Bracketing table for q = 0 ===================================")
    print(f"{'x':>6} {'lower_exp':>14} {'lower_kratzel':>14} "
          f"{'V_q(x)':>14} {'upper_agm':>14}")
    for x in np.geomspace(0.1, 20.0, 9):
        e = vq_envelope(0.0, float(x))
        print(f"{x:>6.3f} {e.lower_exp:>14.9f} {e.lower_kratzel:>14.9f} "
              f"{e.value:>14.9f} {e.upper_agm:>14.9f}")

    print()
    print("=== How tight are they? ==========================================")
    for q in (-0.5, 0.0, 1.0, 5.0):
        worst_gap = 0.0
        for x in np.geomspace(0.1, 20.0, 25):
            e = vq_envelope(q, float(x))
            gap = (e.upper_agm - e.lower_exp) / e.value
            worst_gap = max(worst_gap, gap)
        print(f"q={q:>4g}: worst relative width of "
              f"[lower_exp, upper_agm] = {worst_gap:.3f}")

    print()
    print("=== The q > -3/4 restriction on the upper envelope ===============")
    e = vq_envelope(-0.8, 1.0)
    print(f"q=-0.8, x=1: lower_exp={e.lower_exp:.9f} "
          f"lower_kratzel={e.lower_kratzel:.9f} vq={e.value:.9f} "
          f"upper_agm={e.upper_agm}")
    print("The AGM-based upper bound needs q > -3/4; below that the bundle")
    print("returns None for it while both lower bounds keep working.")

    print()
    print("=== Every bound is strict ========================================")
    ok = True
    for q in (-0.5, 0.0, 1.0, 5.0):
        for x in np.geomspace(0.1, 20.0, 25):
            e = vq_envelope(q, float(x))
            ok &= e.lower_exp < e.value < e.upper_agm
            ok &= e.lower_kratzel < e.value
    print(f"lower_exp < V_q < upper_agm and lower_kratzel < V_q on a "
          f"4 x 25 grid: {'holds everywhere' if ok else 'VIOLATED'}")

    print()
    print("=== Large-x behaviour ============================================")
    print("Both the potential and its envelopes decay like 1/x:")
    for x in (5.0, 10.0, 20.0):
        v = vq(1.0, x).value
        print(f"  x={x:>4g}: x * V_1(x) = {x * v:.9f}")


if __name__ == "__main__":
    main()

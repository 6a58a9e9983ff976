"""Walkthrough: the Mills ratio and its five closed-form bounds.

The Mills ratio m(x) = exp(x^2/2) * integral_x^infty exp(-t^2/2) dt is
sandwiched by five elementary rational/surd expressions: f1 from below,
f2 through f5 from above.  f3 has a pole and only acts as an upper
bound to the right of a fixed threshold; beyond x = 1 it is tighter
than f2.
"""
from regcoulomb import (
    MILLS_F3_THRESHOLD,
    mills,
    mills_bounds,
    mills_f1,
    mills_f2,
    mills_f3,
)


def main() -> None:
    print("=== The bounds at a glance =======================================")
    print("f1(x) = x / (x^2 + 1)                          lower")
    print("f2(x) = 1 / x                                  upper")
    print("f3(x) = 4x / (3x^2 - 1)   for x > threshold    upper, beats f2")
    print("f4(x) = 2x / (x^2 - 1 + sqrt(x^4 + 6x^2 + 1))  upper")
    print("f5(x) = 6x / (5x^2 - 3 + sqrt(x^4 + 18x^2 + 9)) upper")
    print(f"f3 threshold = {MILLS_F3_THRESHOLD:.15g} (pole of f3)")

    print()
    print("=== Table: m(x) against all five =================================")
    header = (f"{'x':>5} {'f1':>12} {'m(x)':>12} {'f5':>12} {'f4':>12} "
              f"{'f3':>12} {'f2':>12}")
    print(header)
    for x in (0.3, 0.6, 0.8, 1.0, 1.5, 2.0, 3.0, 5.0, 10.0):
        row = mills_bounds(x)
        f3_cell = f"{row.f3:>12.8f}" if row.f3 is not None else f"{'--':>12}"
        print(f"{x:>5g} {row.f1:>12.8f} {row.m:>12.8f} {row.f5:>12.8f} "
              f"{row.f4:>12.8f} {f3_cell} {row.f2:>12.8f}")
    print("(f3 column is blank below the threshold, where the expression")
    print(" is negative or singular and cannot bound anything)")

    print()
    print("=== Strictness of the sandwich ===================================")
    for x in (0.5, 1.0, 2.0, 10.0):
        m = mills(x)
        lo = mills_f1(x)
        hi = min(v for v in (mills_f2(x), mills_f3(x)) if v is not None)
        print(f"x={x:>4g}: m - f1 = {m - lo:.3e},   "
              f"best upper - m = {hi - m:.3e}")

    print()
    print("=== f3 versus f2 crossover =======================================")
    for x in (0.9, 1.0, 1.1, 2.0):
        f2, f3 = mills_f2(x), mills_f3(x)
        rel = "f3 < f2" if f3 is not None and f3 < f2 else "f3 >= f2"
        print(f"x={x:g}: f2={f2:.8f} f3={f3:.8f} -> {rel}")
    print("f3 overtakes f2 exactly at x = 1 (they are equal there) and is")
    print("the sharper upper bound for every x > 1.")


if __name__ == "__main__":
    main()

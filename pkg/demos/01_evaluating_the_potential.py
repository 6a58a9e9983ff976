"""Walkthrough: evaluating the regularized Coulomb potential V_q(x).

V_q(x) is defined for order q > -1 and argument x >= 0 (x > 0 when
q <= -1/2).  The evaluator picks a numerical route automatically and
reports which one it used together with an absolute-error estimate.
"""
from regcoulomb import vq, vq_neg1, vq_zero


def main() -> None:
    print("=== Automatic evaluation =========================================")
    print(f"{'q':>6} {'x':>8} {'value':>22} {'route':>16} {'err est':>10}")
    for q, x in [(0.0, 1.0), (0.5, 1.0), (2.0, 0.3), (-0.5, 2.0),
                 (1.0, 0.01), (1.0, 50.0), (3.0, 0.0)]:
        r = vq(q, x)
        print(f"{q:>6g} {x:>8g} {r.value:>22.15g} {r.method:>16} "
              f"{r.abs_err_est:>10.1e}")

    print()
    print("=== Route selection ==============================================")
    print("closed-form   : q = 0 reduces to sqrt(pi) * exp(x^2) * erfc(x).")
    print("limit-x0      : x = 0 uses the gamma-ratio value (needs q > -1/2).")
    print("psi-series    : tiny x via the confluent hypergeometric expansion.")
    print("psi-asymptotic: large x via the large-argument expansion.")
    print("quadrature    : everything else integrates the Laplace transform.")
    print("convention    : the sentinel order q = -1 returns exactly 1/x.")

    print()
    print("=== Forcing a route ==============================================")
    for method in ("auto", "quadrature", "psi", "closed-form"):
        r = vq(0.0, 1.0, method=method)
        print(f"method={method:<12} value={r.value:.15g} used={r.method}")

    print()
    print("=== Boundary values ==============================================")
    print(f"V_-1(2)  (sentinel, pure convention) = {vq_neg1(2.0)}")
    for q in (0.0, 0.5, 1.0, 2.0):
        print(f"V_{q:g}(0) = Gamma(q+1/2)/Gamma(q+1) = {vq_zero(q):.15g}")

    print()
    print("The x -> 0 limit is approached continuously:")
    for x in (1e-2, 1e-4, 1e-6):
        r = vq(1.0, x)
        print(f"  V_1({x:g}) = {r.value:.12g}   (limit {vq_zero(1.0):.12g})")


if __name__ == "__main__":
    main()

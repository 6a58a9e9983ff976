"""Walkthrough: the special-function layer underneath the potential.

The potential V_q is a thin wrapper over the Tricomi confluent
hypergeometric function psi(a, c, x).  The package also exposes the
Kummer function Phi(a, c, x), the Kraetzel integral Z_rho^nu(t), and
the scaled complementary error function they all lean on.
"""
import math

from regcoulomb import (
    erfc_scaled,
    kratzel_z,
    kummer_phi,
    psi_eval,
    tricomi_psi,
    vq,
)


def main() -> None:
    print("=== Tricomi psi(a, c, x) and its routes ==========================")
    print(f"{'a':>6} {'c':>7} {'x':>8} {'value':>22} {'route':>14}")
    for a, c, x in [(1.5, 2.0, 1.0), (0.7, -24.5, 0.02), (3.0, 2.0, 4000.0),
                    (2.3, 0.4, 0.5), (5.0, 1.5, 12.0)]:
        r = psi_eval(a, c, x)
        print(f"{a:>6g} {c:>7g} {x:>8g} {r.value:>22.15g} {r.method:>14}")
    print("(a small-x series, a large-x expansion, and two quadrature")
    print(" ladders cover the parameter plane; each result carries an")
    print(" error estimate, e.g.",
          f"{psi_eval(1.5, 2.0, 1.0).abs_err_est:.1e})")

    print()
    print("=== A closed-form sanity identity ================================")
    print("psi(a, a+1, x) = x^(-a) exactly:")
    for a, x in [(0.5, 2.0), (2.0, 3.0), (3.5, 0.7)]:
        lhs = tricomi_psi(a, a + 1.0, x)
        rhs = x ** (-a)
        print(f"  psi({a:g}, {a + 1:g}, {x:g}) = {lhs:.15g}"
              f"   x^(-a) = {rhs:.15g}   rel diff = "
              f"{abs(lhs - rhs) / rhs:.1e}")

    print()
    print("=== The potential as a psi value =================================")
    print("V_q(x) = psi(1/2, 1/2 - q, x^2):")
    for q, x in [(0.5, 1.0), (2.0, 1.5)]:
        direct = vq(q, x).value
        via_psi = tricomi_psi(0.5, 0.5 - q, x * x)
        print(f"  q={q:g}, x={x:g}: V_q = {direct:.15g}"
              f"   psi form = {via_psi:.15g}")

    print()
    print("=== Kummer Phi(a, c, x) ==========================================")
    for a, c, x in [(1.0, 2.0, 0.5), (0.5, 1.5, 3.0), (2.3, 0.4, 1.0)]:
        print(f"  Phi({a:g}, {c:g}, {x:g}) = {kummer_phi(a, c, x):.15g}")
    print(f"  Phi(a, c, 0) = 1 exactly: {kummer_phi(0.7, 1.3, 0.0)}")

    print()
    print("=== Kraetzel integral Z_rho^nu(t) ================================")
    print("Z_rho^nu(t) = integral over u > 0 of u^(nu-1) "
          "exp(-u^rho - t/u) du")
    for rho, nu, t in [(1.0, 0.5, 1.0), (1.0, 2.0, 0.25), (2.0, 1.5, 1.0)]:
        print(f"  Z(rho={rho:g}, nu={nu:g}, t={t:g}) = "
              f"{kratzel_z(rho, nu, t):.15g}")
    print("At rho = 1 it collapses to a modified Bessel function,")
    print("  Z(1, nu, t) = 2 t^(nu/2) K_nu(2 sqrt(t)),")
    print("which is how the lower envelope of V_q is built.")

    print()
    print("=== Scaled complementary error function ==========================")
    for x in (0.0, 1.0, 5.0, 30.0):
        print(f"  exp(x^2) erfc(x) at x={x:>4g}: {erfc_scaled(x):.15g}")
    print(f"  sqrt(pi) * erfc_scaled(1.0) = "
          f"{math.sqrt(math.pi) * erfc_scaled(1.0):.15g} = V_0(1)")


if __name__ == "__main__":
    main()

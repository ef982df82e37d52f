#!/usr/bin/env python3
"""Independent high-precision evaluation of the step-scattering closed forms.

Run once to regenerate the frozen constants used by the C++ unit and
acceptance tests. Uses mpmath only; shares no code with the library.
"""
from mpmath import mp, mpf, mpc, sqrt, fabs

mp.dps = 50


def klein(m, E, V):
    a = sqrt((E - m) / (E + m))
    k = sqrt(E * E - m * m)
    w = E - V
    kbar = sqrt(w * w - m * m)
    b = -sqrt((w - m) / (w + m))
    return a, k, kbar, b


def show(name, value):
    print(f"{name:>28} = {mp.nstr(value, 17)}")


def main():
    m, E, V = mpf(1), mpf(2), mpf(4)
    a, k, kbar, b = klein(m, E, V)
    print("# golden setup mc2=1 E=2 V0=4")
    show("a", a)
    show("k", k)
    show("kbar", kbar)
    show("b", b)
    show("b_dprime", -1 / b)
    r = (a + b) / (a - b)
    t = 2 * a / (a - b)
    show("r", r)
    show("t", t)
    show("R", r * r)
    show("T", 4 * a * fabs(b) / (a - b) ** 2)
    rho0 = 4 * a * a * (1 + b * b) / (a - b) ** 2
    show("rho0", rho0)
    show("j0", -8 * a * a * b / (a - b) ** 2)
    show("v_t", sqrt(1 - (m / (E - V)) ** 2))
    show("force", -V * rho0)

    # traditional convention: 1 + r = t, a(1 - r) = b t
    r2 = (a - b) / (a + b)
    t2 = 1 + r2
    show("r_traditional", r2)
    show("t_traditional", t2)
    show("R_traditional", r2 * r2)
    show("T_traditional", (2 * b * t2 * t2) / (2 * a))

    print("# negative-energy convention mc2=1 E=2 V0=5")
    a, k, kbar, b = klein(m, E, mpf(5))
    show("b", b)
    show("ab", a * b)
    show("r_b5", (a * b + 1) / (a * b - 1))
    show("t_b5", 2 * a / (1 - a * b))
    rho = 4 * a * a * (1 + b * b) / (1 - a * b) ** 2
    show("rho0_b5", rho)
    tb5 = 2 * a / (1 - a * b)
    show("j0_b5", 2 * (tb5 * (-b)) * tb5)
    show("force_b5", -5 * rho)

    print("# infinite-step limit at a=1/sqrt(3)")
    a = sqrt(mpf(1) / 3)
    show("R_inf", ((a - 1) / (a + 1)) ** 2)
    show("T_inf", 4 * a / (a + 1) ** 2)

    print("# near-edge transmission, mc2=1 E=2 delta=1e-6")
    d = mpf("1e-6")
    bd = sqrt(d / (2 + d))
    show("b_dprime", bd)
    show("T", 4 * a * bd / (1 + a * bd) ** 2)

    print("# nonrelativistic a at E=1.005")
    show("a_nr", sqrt(mpf("0.005") / 2))
    show("a_exact", sqrt(mpf("0.005") / mpf("2.005")))

    print("# Klein-side force error at delta=1e-8, E=2 mc2=1")
    d = mpf("1e-8")
    V = 3 + d
    a, k, kbar, b = klein(m, E, V)
    show("force_err", -V * 4 * a * a * (1 + b * b) / (a - b) ** 2 + 4)


if __name__ == "__main__":
    main()

"""Formal expansions of lambda^(0), mu^(0) and R_+- near t = infinity and the double poles.

Solves t^2 lambda lambda'' - t^2 lambda'^2 + t lambda lambda' = eta^2 (lambda^4 - c_inf lambda^3 + c_0 t lambda - t^2),
the mu relation and the Riccati equation order by order with eta kept symbolic (h = 1/eta).
Prints the coefficients used by the corrected expansions in src/verify.cpp.
"""
import sympy as sp

a, b, h, t, s = sp.symbols("c_inf c_0 h t s")


def truncate(e, n):
    e = sp.expand(e)
    return sum(e.coeff(t, k) * t**k for k in range(n + 1))


def solve_in_order(expr, unknowns, powers, var):
    sol = {}
    for c in unknowns:
        for p in powers:
            co = sp.expand(expr.coeff(var, p).subs(sol))
            if co != 0 and co.has(c):
                sol[c] = sp.factor(sp.solve(co, c)[0])
                break
        else:
            raise RuntimeError(f"no equation for {c}")
    return sol


def double_poles():
    for name, first, k0 in [("0_c_inf", a, 1), ("0_c_0", t / b, 2)]:
        L = [sp.Symbol(f"L{k}") for k in range(k0, k0 + 3)]
        lam = first + sum(c * t ** (k0 + i) for i, c in enumerate(L))
        lp = sp.diff(lam, t)
        n = k0 + 4
        eq = truncate(h**2 * (t**2 * lam * sp.diff(lam, t, 2) - t**2 * lp**2 + t * lam * lp)
                      - (lam**4 - a * lam**3 + b * t * lam - t**2), n + 2)
        sol = solve_in_order(eq, L, range(n + 3), t)
        print(name, "lambda:", [sol[c] for c in L])
        lam = lam.subs(sol)
        lp = sp.diff(lam, t)
        M = sp.symbols("m0:3")
        mu = sum(m * t**i for i, m in enumerate(M))
        eq = truncate(2 * lam**2 * mu - (h * t * lp + (b - h) * lam - t + lam**2), n)
        ms = solve_in_order(eq, M, range(n + 1), t)
        print(name, "mu:", [ms[m] for m in M])
        # R = rho/t; the Riccati equation times t^2 lambda^2 is polynomial
        r = sp.symbols("r_m1 r0 r1")
        rho = r[0] + r[1] * t + r[2] * t**2
        P = truncate(lam**2 * rho**2 + lam**2 * (t * sp.diff(rho, t) - rho) - (2 * t * lam * lp - lam**2) * rho
                     - (3 * lam**4 - 2 * a * lam**3 + t**2) / h**2 + t**2 * lp**2, n)
        low = min(k for k in range(n + 1) if sp.expand(P.coeff(t, k)) != 0)
        for root in sp.solve(P.coeff(t, low), r[0]):
            r0 = sp.solve(sp.expand(P.coeff(t, low + 1).subs(r[0], root)), r[1])[0]
            r1 = sp.solve(sp.expand(P.coeff(t, low + 2).subs({r[0]: root, r[1]: r0})), r[2])[0]
            print(f"  R: t^-1 {sp.factor(root)} | t^0 {sp.factor(r0)} | t^1 {sp.factor(r1)}")


def infinity(order=4):
    # t = s^2, lambda = c s + l0 + l1/s + ...
    for c in [1, -1, sp.I, -sp.I]:
        L = sp.symbols(f"l0:{order}")
        lam = c * s + sum(L[k] * s ** (-k) for k in range(order))
        ls = sp.diff(lam, s)
        eq = sp.expand((h**2 * (s**2 * lam * sp.diff(lam, s, 2) + s * lam * ls - s**2 * ls**2) / 4
                        - (lam**4 - a * lam**3 + b * s**2 * lam - s**4)) * s ** (4 * order))
        sol = solve_in_order(eq, L, range(sp.degree(eq, s), -1, -1), s)
        lam = lam.subs(sol)
        ls = sp.diff(lam, s)
        print(f"lambda0 ~ {c} t^(1/2):", [sol[x] for x in L[:3]])
        M = sp.symbols("m0:4")
        mu = sum(M[k] * s ** (-k) for k in range(4))
        eq = sp.expand((2 * lam**2 * mu - (h * s * ls / 2 + (b - h) * lam - s**2 + lam**2)) * s ** (2 * order + 4))
        ms = solve_in_order(eq, M, range(sp.degree(eq, s), -1, -1), s)
        print("  mu:", [ms[m] for m in M[:3]])
        P = sp.symbols("p0:3")
        R = sum(P[k] * s ** (-k - 1) for k in range(3))
        ric = sp.expand((s**4 * lam**2 * R**2 + s**3 * lam**2 * sp.diff(R, s) / 2 - (s**3 * lam * ls - s**2 * lam**2) * R
                         - (3 * lam**4 - 2 * a * lam**3 + s**4) / h**2 + s**2 * ls**2 / 4) * s ** (4 * order))
        top = sp.degree(ric, s)
        lead = next(p for p in range(top, -1, -1) if sp.expand(ric.coeff(s, p)) != 0)
        for root in sp.solve(ric.coeff(s, lead), P[0]):
            sol = {P[0]: root}
            for k in (1, 2):
                sol.update(solve_in_order(ric.subs(sol), [P[k]], range(lead - 1, -1, -1), s))
            print(f"  R: t^-1/2 {sp.factor(root)} | t^-1 {sp.factor(sol[P[1]])} | t^-3/2 {sp.factor(sol[P[2]])}")


if __name__ == "__main__":
    double_poles()
    infinity()

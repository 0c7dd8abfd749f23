# A tour of initial value problems the solver handles, plus the ones it
# refuses on purpose.

from fractions import Fraction

from dlaplace import (GeometricTerm, PowerTerm, RecurrenceSpec,
                      ResonantForcing, UnsupportedFactorization,
                      check_inverse_square_ivp, inverse_square_partial,
                      solve_affine, solve_ivp)


def main():
    print("== second differences: (D^2 f)(n) = n, f(1) = 1, (Df)(1) = 2 ==")
    spec = RecurrenceSpec.from_delta2([PowerTerm(1, 1)], 1, 2)
    report = solve_ivp(spec, verify_upto=100)
    print("closed form:", report.closed_form)
    print("values:     ", ", ".join(str(v) for v in report.values(8)))
    print("check:       f(n) = 2n - 1 + n(n-1)(n-2)/6 exactly for n <= 100")
    for n in range(1, 101):
        assert report.closed_form(n) == \
            2 * n - 1 + Fraction(n * (n - 1) * (n - 2), 6)

    print()
    print("== the affine family a(n+1) = lam*a(n) + beta ==")
    for lam in (Fraction(3), Fraction(1, 2), Fraction(-1), Fraction(1)):
        report = solve_affine(lam, 1, 1)
        values = ", ".join(str(v) for v in report.values(6))
        print(f"lam = {str(lam):>4}: {str(report.closed_form):<34} {values}")
    print("(lam = 1 degenerates to an arithmetic progression, no pole)")

    print()
    print("== geometric forcing ==")
    spec = RecurrenceSpec(1, (Fraction(2),), (Fraction(1),),
                          (GeometricTerm(1, 3),))
    report = solve_ivp(spec)
    print("a(n+1) = 2a(n) + 3^n:", report.closed_form)
    print("values:", ", ".join(str(v) for v in report.values(6)))

    print()
    print("== refusals ==")
    try:
        solve_ivp(RecurrenceSpec(1, (Fraction(2),), (Fraction(1),),
                                 (GeometricTerm(1, 2),)))
    except ResonantForcing as exc:
        print("resonant forcing:", exc)
    try:
        solve_ivp(RecurrenceSpec(3, (Fraction(1), Fraction(1), Fraction(0)),
                                 (1, 1, 1)))
    except UnsupportedFactorization as exc:
        print("cubic roots:     ", exc)

    print()
    print("== inverse-square partial sums as an IVP ==")
    print("h(n) = sum_(k<=n-1) 1/k^2 with h(1) = 1 satisfies")
    print("h(n+1) = h(n) + 1/n^2; the engine verifies the recursion")
    print("and the exact rational values agree for n <= 200:",
          check_inverse_square_ivp(200))
    print("h(5) =", inverse_square_partial(5))


if __name__ == "__main__":
    main()

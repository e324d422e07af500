"""Effect of the blending weight alpha and the shape offset s.

The basis blends a classical Bernstein row of degree m with two shifted
rows of degree m - s; alpha controls the mix and s the shift.  This demo
fixes the degree and sweeps each shape parameter in turn, printing the
absolute error at a few points.  It also prints the named special cases
that the parameter space contains: alpha = 1 or s = 1 collapse the basis
to classical Bernstein weights, and specific (eta, gamma) choices recover
known operator families.
"""

from fracbk import OperatorParams, apply, evaluate, get_function, special_case

Z_POINTS = (0.2, 0.5, 0.8)


def error_row(params, f):
    return [abs(apply(params, f, z) - evaluate(f, z)) for z in Z_POINTS]


def main():
    f = get_function("f2")

    print("alpha sweep (m=90, eta=3, gamma=2, s=3), f2 = (1-z) cos(2 pi z)")
    header = " ".join(f"err@{z:.1f}" for z in Z_POINTS)
    print(f"{'alpha':>6}  {header}")
    for alpha in (0.35, 0.65, 0.95):
        params = OperatorParams(m=90, eta=3.0, gamma=2.0, alpha=alpha, s=3)
        errs = error_row(params, f)
        print(f"{alpha:>6.2f}  " + " ".join(f"{e:.6f}" for e in errs))

    print()
    f3 = get_function("f3")
    print("s sweep (m=70, eta=3, gamma=2, alpha=0.75), f3 = 22 z (z-0.9) (z-0.3)")
    print(f"{'s':>6}  {header}")
    for s in (8, 5, 2):
        params = OperatorParams(m=70, eta=3.0, gamma=2.0, alpha=0.75, s=s)
        errs = error_row(params, f3)
        print(f"{s:>6d}  " + " ".join(f"{e:.6f}" for e in errs))

    print()
    print("named special cases recovered by parameter choices")
    cases = (
        OperatorParams(m=30, eta=1.0, gamma=1.0, alpha=0.7, s=2),
        OperatorParams(m=30, eta=1.0, gamma=2.0, alpha=1.0, s=2),
        OperatorParams(m=30, eta=2.5, gamma=1.0, alpha=0.8, s=2),
        OperatorParams(m=30, eta=1.0, gamma=3.0, alpha=0.6, s=4),
        OperatorParams(m=30, eta=2.0, gamma=3.0, alpha=0.9, s=2),
    )
    for params in cases:
        tag = special_case(params)
        print(f"  eta={params.eta:<4} gamma={params.gamma:<4} "
              f"alpha={params.alpha:<4} s={params.s}  ->  {tag}")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Independent reference values for the 1/3-order Dirichlet fractional
Laplacian on an interval with exterior-zero extension.

    A u(x) = c * [ p.v. Int_I (u(x) - u(y)) |x-y|^{-4/3} dy
                   + u(x) * 3 ((x-a)^{-1/3} + (b-x)^{-1/3}) ],
    c = 4^{1/6} Gamma(2/3) / (sqrt(pi) |Gamma(-1/6)|),

equal to the Fourier multiplier |xi|^{1/3} acting on the zero extension.
The principal value is evaluated with mpmath at 40 digits by splitting the
integral at the singular point and subtracting the linearization of u;
deliberately a different regularization from the C++ library's exact
hat-function antiderivatives, so the frozen values are an independent
cross-check of both quadratures and of the constant.

Also sanity-checks the multiplier identity on the whole line: for
u = exp(-t^2), A u(0) computed by the kernel equals
(1/(2 pi)) Int |xi|^{1/3} u^(xi) dxi computed from the exact Gaussian
transform.  Everything is frozen to tests/data/frac_reference.json.
"""

import json
import os

import mpmath as mp

mp.mp.dps = 40

C16 = mp.mpf(4) ** mp.mpf("1/6") * mp.gamma(mp.mpf(2) / 3) / (
    mp.sqrt(mp.pi) * abs(mp.gamma(mp.mpf(-1) / 6))
)


def frac_apply_interval(u, du, a, b, x):
    """A u(x) for exterior-zero u on (a, b), via split p.v. quadrature."""
    # Subtract the linearization on a symmetric core so each piece is a
    # plain improper integral mpmath can refine.
    r0 = min(x - a, b - x) / 2

    def core(y):
        return (u(x) - u(y) + du(x) * (y - x)) * abs(x - y) ** mp.mpf("-4/3")

    core_val = mp.quad(core, [x - r0, x, x + r0])
    # The subtracted odd linear term integrates to zero over the symmetric
    # core, so nothing is added back.
    left = mp.quad(lambda y: (u(x) - u(y)) * (x - y) ** mp.mpf("-4/3"), [a, x - r0])
    right = mp.quad(lambda y: (u(x) - u(y)) * (y - x) ** mp.mpf("-4/3"), [x + r0, b])
    exterior = u(x) * 3 * ((x - a) ** mp.mpf("-1/3") + (b - x) ** mp.mpf("-1/3"))
    return C16 * (core_val + left + right + exterior)


def gaussian_check():
    """Kernel and multiplier paths for u = exp(-t^2) on the whole line."""
    u = lambda t: mp.e ** (-t * t)
    du = lambda t: -2 * t * mp.e ** (-t * t)
    x = mp.mpf(0)

    def core(y):
        return (u(x) - u(y)) * abs(y) ** mp.mpf("-4/3")

    kernel = C16 * 2 * mp.quad(core, [0, 1, mp.inf])  # even integrand
    # u^(xi) = sqrt(pi) e^{-xi^2/4}; A u(0) = (1/2pi) Int |xi|^{1/3} u^ dxi.
    mult = (
        2
        / (2 * mp.pi)
        * mp.quad(lambda s: s ** mp.mpf("1/3") * mp.sqrt(mp.pi) * mp.e ** (-s * s / 4), [0, mp.inf])
    )
    return kernel, mult


def main():
    out = {"riesz_constant": float(C16)}

    kernel, mult = gaussian_check()
    # mp.quad on the semi-infinite ranges delivers ~15 digits here; that is
    # ample to validate the constant for double-precision freezing.
    assert abs(kernel - mult) < mp.mpf("1e-12"), (kernel, mult)
    out["gaussian_at_origin"] = float(kernel)

    # sin profile on (1, 2), the dual-path test function.
    u = lambda y: mp.sin(mp.pi * (y - 1))
    du = lambda y: mp.pi * mp.cos(mp.pi * (y - 1))
    refs = []
    for x in [mp.mpf("1.25"), mp.mpf("1.5")]:
        refs.append({"x": float(x), "value": float(frac_apply_interval(u, du, 1, 2, x))})
    out["sin_interval"] = refs

    # Quadratic bump (1-t)t scaled to (1, 1.5): checks the L^{-1/3} scaling
    # path at a second interval length.
    Lbar = mp.mpf("0.5")
    v = lambda y: (y - 1) * (1 + Lbar - y) / (Lbar / 2) ** 2
    dv = lambda y: ((1 + Lbar - y) - (y - 1)) / (Lbar / 2) ** 2
    out["bump_half_interval"] = {
        "x": 1.25,
        "value": float(frac_apply_interval(v, dv, 1, 1 + Lbar, mp.mpf("1.25"))),
    }

    path = os.path.join(os.path.dirname(__file__), "..", "..", "tests", "data", "frac_reference.json")
    with open(os.path.abspath(path), "w") as f:
        json.dump(out, f, indent=2)
    print(json.dumps(out, indent=2))


if __name__ == "__main__":
    main()

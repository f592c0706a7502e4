#!/usr/bin/env python3
"""High-precision reference values for the complex Airy functions.

Evaluates ai, ai', bi, bi' and the primitives \\int_0^w ai, \\int_0^w bi on a
grid of complex arguments covering |w| <= 50 and all argument sectors, using
mpmath at 40 significant digits.  Results are frozen into
tests/data/airy_reference.csv with 25 printed digits so that unit tests can
assert absolute/relative agreement down to 1e-12 without any Python
dependency at test time.

Also writes tests/data/airy_rotated_reference.csv holding the rotated basis
elements B_{+1}(w) = ai(w e^{-2 pi i/3}) and B_{-1}(w) = ai(w e^{+2 pi i/3})
together with their derivatives (chain-rule factor included), since those are
used as the decaying basis on the negative half-line of the Green's function
solver.
"""

import csv
import os

import mpmath as mp

mp.mp.dps = 40

OUT_DIR = os.path.join(os.path.dirname(__file__), "..", "..", "tests", "data")

# sanity: mpmath's antiderivative convention airyai(z, -1) is the integral
# from 0 to z.  Verify against direct quadrature once before trusting it.
_z = mp.mpc("1.3", "-0.7")
_q = mp.quad(lambda t: mp.airyai(_z * t) * _z, [0, 1])
assert abs(_q - mp.airyai(_z, -1)) < mp.mpf("1e-35"), "primitive convention"
_qb = mp.quad(lambda t: mp.airybi(_z * t) * _z, [0, 1])
assert abs(_qb - mp.airybi(_z, -1)) < mp.mpf("1e-35"), "primitive convention"


def fmt(x):
    return mp.nstr(x, 25, strip_zeros=False)


def main():
    radii = [0.25, 0.5, 1.0, 2.0, 3.0, 4.0, 5.0, 5.5, 6.0, 6.5, 7.0, 8.0,
             10.0, 12.0, 15.0, 20.0, 25.0, 30.0, 35.0, 40.0, 50.0]
    # 16 rays plus near-sector-boundary rays; k/24 * pi covers boundaries
    angles = [mp.pi * mp.mpf(k) / 12 for k in range(-11, 13)]

    rows = []
    rot_rows = []
    wp = mp.exp(2j * mp.pi / 3)   # e^{+2 pi i/3}
    wm = mp.exp(-2j * mp.pi / 3)  # e^{-2 pi i/3}
    pts = [mp.mpc(0)] + [r * mp.exp(1j * a) for r in radii for a in angles]
    for w in pts:
        ai = mp.airyai(w)
        aip = mp.airyai(w, 1)
        bi = mp.airybi(w)
        bip = mp.airybi(w, 1)
        iai = mp.airyai(w, -1)
        ibi = mp.airybi(w, -1)
        rows.append([fmt(mp.re(w)), fmt(mp.im(w)),
                     fmt(mp.re(ai)), fmt(mp.im(ai)),
                     fmt(mp.re(aip)), fmt(mp.im(aip)),
                     fmt(mp.re(bi)), fmt(mp.im(bi)),
                     fmt(mp.re(bip)), fmt(mp.im(bip)),
                     fmt(mp.re(iai)), fmt(mp.im(iai)),
                     fmt(mp.re(ibi)), fmt(mp.im(ibi))])
        if abs(w) <= 30:
            # B_{+1}(w) = ai(w e^{-2pi i/3}), B_{-1}(w) = ai(w e^{+2pi i/3});
            # derivative columns are d/dw, i.e. include the rotation factor.
            bp = mp.airyai(w * wm)
            bpd = wm * mp.airyai(w * wm, 1)
            bm = mp.airyai(w * wp)
            bmd = wp * mp.airyai(w * wp, 1)
            rot_rows.append([fmt(mp.re(w)), fmt(mp.im(w)),
                             fmt(mp.re(bp)), fmt(mp.im(bp)),
                             fmt(mp.re(bpd)), fmt(mp.im(bpd)),
                             fmt(mp.re(bm)), fmt(mp.im(bm)),
                             fmt(mp.re(bmd)), fmt(mp.im(bmd))])

    os.makedirs(OUT_DIR, exist_ok=True)
    with open(os.path.join(OUT_DIR, "airy_reference.csv"), "w", newline="") as f:
        wr = csv.writer(f)
        wr.writerow(["re_w", "im_w", "re_ai", "im_ai", "re_aip", "im_aip",
                     "re_bi", "im_bi", "re_bip", "im_bip",
                     "re_iai", "im_iai", "re_ibi", "im_ibi"])
        wr.writerows(rows)
    with open(os.path.join(OUT_DIR, "airy_rotated_reference.csv"), "w",
              newline="") as f:
        wr = csv.writer(f)
        wr.writerow(["re_w", "im_w", "re_bp1", "im_bp1", "re_bp1d", "im_bp1d",
                     "re_bm1", "im_bm1", "re_bm1d", "im_bm1d"])
        wr.writerows(rot_rows)
    print(f"wrote {len(rows)} airy rows, {len(rot_rows)} rotated rows")


if __name__ == "__main__":
    main()

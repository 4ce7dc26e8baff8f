#!/usr/bin/env python3
"""Regenerates gaussian.amsf and gaussian_norm.json.

The expected norm comes from a naive pipeline that shares no code with the
library: an explicit O(N^2) DFT matrix, windows rebuilt from their
definition, and Riemann-sum L^p norms.
"""
import json
import pathlib

import numpy as np

HERE = pathlib.Path(__file__).resolve().parent

N, L = 2048, 64.0
ALPHA, XI_MAX = 0.5, 16.0
R1, R2 = 0.45, 0.55
P, Q, S = 1.0, 2.0, 0.5


def smoothstep(t):
    t = np.asarray(t, dtype=float)
    out = np.where(t >= 1.0, 1.0, 0.0)
    mid = (t > 0.0) & (t < 1.0)
    tm = t[mid]
    h0 = np.exp(-1.0 / tm)
    h1 = np.exp(-1.0 / (1.0 - tm))
    out[mid] = h0 / (h0 + h1)
    return out


def profile(u):
    return smoothstep(1.0 - (np.abs(u) - R1) / (R2 - R1))


def center(a, t):
    return (1.0 + t * t) ** (a / 2.0) * t


def kappa(a, xi):
    # |c(t)| >= |t|, so the inverse lies in [-|xi|, |xi|].
    lo = -np.abs(xi) - 1.0
    hi = np.abs(xi) + 1.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        below = center(a, mid) < xi
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
    return 0.5 * (lo + hi)


def main():
    a = ALPHA / (1.0 - ALPHA)
    x = -L / 2 + np.arange(N) * (L / N)
    xi = np.arange(-N // 2, N // 2) / L
    f = np.exp(-np.pi * x**2 / 4.0) * np.exp(2j * np.pi * 3.0 * x)

    dft = np.exp(-2j * np.pi * np.outer(xi, x))
    fhat = dft @ f * (L / N)
    inv = np.exp(2j * np.pi * np.outer(x, xi))

    kap = kappa(a, xi)
    ls = np.arange(int(np.floor(kap.min())) - 2, int(np.ceil(kap.max())) + 3)
    weights = np.array([profile(kap - l) for l in ls])
    total = weights.sum(axis=0)

    kmax = 0
    while center(a, kmax + 1) <= XI_MAX:
        kmax += 1
    terms = []
    for k in range(-kmax, kmax + 1):
        eta = weights[list(ls).index(k)] / total
        box = inv @ (eta * fhat) * (1.0 / L)
        lp = (np.sum(np.abs(box) ** P) * (L / N)) ** (1.0 / P)
        terms.append(((1.0 + k * k) ** 0.5) ** (S / (1.0 - ALPHA)) * lp)
    norm = float(np.sum(np.array(terms) ** Q) ** (1.0 / Q))

    header = {"magic": "AMSF1", "n": 1, "N": N, "L": L, "side": "spatial", "dtype": "f64-interleaved"}
    payload = np.empty(2 * N, dtype="<f8")
    payload[0::2] = f.real
    payload[1::2] = f.imag
    with open(HERE / "gaussian.amsf", "wb") as out:
        out.write((json.dumps(header, separators=(",", ":")) + "\n").encode())
        out.write(payload.tobytes())

    fixture = {
        "input": "gaussian.amsf",
        "config": {"alpha": ALPHA, "N": N, "L": L, "Xi_max": XI_MAX,
                   "profile": {"r1": R1, "r2": R2}, "space": {"p": P, "q": Q, "s": S}},
        "norm": norm,
    }
    with open(HERE / "gaussian_norm.json", "w") as out:
        json.dump(fixture, out, indent=2)
        out.write("\n")
    print(norm)


if __name__ == "__main__":
    main()

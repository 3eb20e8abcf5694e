"""Pure-Python twin of the compiled oracle kernels (same API, same output)."""

from __future__ import annotations

import itertools

import numpy as np

B_AXA, B_XAX, B_AX_STAR, B_XA_STAR, B_COMMUTE = 1, 2, 4, 8, 16
B_XAA, B_AXX, B_AAX, B_XXA = 32, 64, 128, 256


def _digits(p: int, n: int) -> list[tuple[int, ...]]:
    # itertools.product varies the last slot fastest; reverse so entry 0 is the low digit
    return [tuple(reversed(t)) for t in itertools.product(range(p), repeat=n * n)]


def mul_table(p: int, n: int) -> np.ndarray:
    digits = _digits(p, n)
    pw = [p ** k for k in range(n * n)]
    N = len(digits)
    out = np.zeros((N, N), dtype=np.int32)
    rows = [[d[i * n:(i + 1) * n] for i in range(n)] for d in digits]
    cols = [[d[j::n] for j in range(n)] for d in digits]
    for a in range(N):
        ra = rows[a]
        for b in range(N):
            cb = cols[b]
            code = 0
            for i in range(n):
                r = ra[i]
                for j in range(n):
                    code += (sum(x * y for x, y in zip(r, cb[j])) % p) * pw[i * n + j]
            out[a, b] = code
    return out


def star_table(p: int, n: int) -> np.ndarray:
    digits = _digits(p, n)
    out = np.zeros(len(digits), dtype=np.int32)
    for a, d in enumerate(digits):
        out[a] = sum(d[j * n + i] * p ** (i * n + j) for i in range(n) for j in range(n))
    return out


def scan_flags(p: int, n: int) -> np.ndarray:
    mul = mul_table(p, n).tolist()
    st = star_table(p, n).tolist()
    N = len(st)
    flags = np.zeros((N, N), dtype=np.uint16)
    for a in range(N):
        row = mul[a]
        a2 = row[a]
        out = flags[a]
        vals = []
        for x in range(N):
            ax = row[x]
            xa = mul[x][a]
            x2 = mul[x][x]
            f = 0
            if mul[ax][a] == a:
                f |= B_AXA
            if mul[xa][x] == x:
                f |= B_XAX
            if st[ax] == ax:
                f |= B_AX_STAR
            if st[xa] == xa:
                f |= B_XA_STAR
            if ax == xa:
                f |= B_COMMUTE
            if mul[x][a2] == a:
                f |= B_XAA
            if row[x2] == x:
                f |= B_AXX
            if mul[a2][x] == a:
                f |= B_AAX
            if mul[x2][a] == x:
                f |= B_XXA
            vals.append(f)
        out[:] = vals
    return flags

#!/usr/bin/env python3
"""Derives the classical modular polynomial Phi_2 from the q-expansion of j.

j = E4^3 / Delta with E4 = 1 + 240 sum sigma_3(n) q^n and
Delta = q prod (1 - q^n)^24. Phi_2(X, Y) = X^3 + Y^3 + sum_{i,j<=2} c_ij X^i Y^j
with c symmetric; the c_ij are the unique solution of Phi_2(j(q), j(q^2)) = 0
as a Laurent series, solved exactly over Q on an overdetermined system.

Usage: phi2_oracle.py [--write PATH | --check PATH]
"""
import argparse
import sys
from fractions import Fraction

N = 40  # q-expansion precision


def sigma3(n):
    return sum(d**3 for d in range(1, n + 1) if n % d == 0)


def mul(a, b):
    out = [0] * N
    for i, x in enumerate(a):
        if x:
            for j in range(N - i):
                out[i + j] += x * b[j]
    return out


def j_series():
    """Coefficients of q*j(q) as a power series: index n is the coefficient of q^(n-1)."""
    e4 = [1] + [240 * sigma3(n) for n in range(1, N)]
    e4cubed = mul(mul(e4, e4), e4)
    # prod (1 - q^n)^24, then invert (constant term 1).
    eta24 = [1] + [0] * (N - 1)
    for n in range(1, N):
        factor = [0] * N
        factor[0] = 1
        factor[n] = -1
        for _ in range(24):
            eta24 = mul(eta24, factor)
    inv = [0] * N
    inv[0] = 1
    for n in range(1, N):
        inv[n] = -sum(eta24[k] * inv[n - k] for k in range(1, n + 1))
    return mul(e4cubed, inv)


class Laurent:
    """Truncated Laurent series: dict exponent -> coefficient, exponents < LIMIT."""

    LIMIT = 24

    def __init__(self, terms):
        self.t = {e: c for e, c in terms.items() if c and e < self.LIMIT}

    def __mul__(self, other):
        out = {}
        for e1, c1 in self.t.items():
            for e2, c2 in other.t.items():
                if e1 + e2 < self.LIMIT:
                    out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return Laurent(out)


def derive():
    s = j_series()
    assert s[:4] == [1, 744, 196884, 21493760], s[:4]
    jq = Laurent({n - 1: s[n] for n in range(N)})
    jq2 = Laurent({2 * (n - 1): s[n] for n in range(N)})
    one = Laurent({0: 1})
    xp = [one]
    yp = [one]
    for _ in range(3):
        xp.append(xp[-1] * jq)
        yp.append(yp[-1] * jq2)
    unknowns = [(i, j) for i in range(3) for j in range(i, 3)]
    known = xp[3].t.copy()
    for e, c in yp[3].t.items():
        known[e] = known.get(e, 0) + c
    columns = []
    for i, j in unknowns:
        col = dict((xp[i] * yp[j]).t)
        if i != j:
            for e, c in (xp[j] * yp[i]).t.items():
                col[e] = col.get(e, 0) + c
        columns.append(col)
    # Only exponents below the truncation of the highest-order products are reliable.
    exps = sorted(e for e in set(known) | {e for col in columns for e in col} if e < Laurent.LIMIT - 6)
    rows = [[Fraction(col.get(e, 0)) for col in columns] + [Fraction(-known.get(e, 0))] for e in exps]
    sol = solve(rows, len(unknowns))
    coeffs = {(3, 0): 1, (0, 3): 1}
    for (i, j), v in zip(unknowns, sol):
        assert v.denominator == 1, "non-integer coefficient"
        if v:
            coeffs[(i, j)] = int(v)
            coeffs[(j, i)] = int(v)
    return coeffs


def solve(rows, n):
    rows = [r[:] for r in rows]
    pivots = []
    r = 0
    for c in range(n):
        p = next((k for k in range(r, len(rows)) if rows[k][c] != 0), None)
        if p is None:
            raise SystemExit("singular system")
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        rows[r] = [x / piv for x in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][c] != 0:
                f = rows[k][c]
                rows[k] = [a - f * b for a, b in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
    for k in range(r, len(rows)):
        if rows[k][n] != 0:
            raise SystemExit("overdetermined system is inconsistent")
    return [rows[i][n] for i in range(n)]


def fnv1a64(data: bytes) -> str:
    h = 0xCBF29CE484222325
    for b in data:
        h ^= b
        h = (h * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF
    return f"{h:016x}"


def render(coeffs):
    body = "vars X Y\n"
    for (i, j) in sorted(coeffs, key=lambda e: (-e[0], -e[1])):
        body += f"{i} {j} {coeffs[(i, j)]}\n"
    return body + f"checksum {fnv1a64(body.encode())}\n"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--write")
    ap.add_argument("--check")
    args = ap.parse_args()
    text = render(derive())
    if args.write:
        with open(args.write, "w") as f:
            f.write(text)
    elif args.check:
        with open(args.check) as f:
            shipped = f.read()
        if shipped != text:
            print("MISMATCH between shipped data and q-expansion oracle", file=sys.stderr)
            return 1
        print("ok: shipped Phi_2 matches the q-expansion oracle")
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
# Copyright 2026 The mcdm Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Brute-force reference implementation of the nine ranking methods.

Written cell by cell with plain Python lists and explicit loops, the way a
spreadsheet would evaluate it. It shares no code with the C++ library and is
used only to freeze expected values for the test suite.

    python3 mcdm_oracle.py > ../fixtures/oracle_expected.json
    python3 mcdm_oracle.py --check ../fixtures/oracle_expected.json
"""

import json
import math
import sys

FIXTURES = {
    "table71": {
        "alternatives": ["A1", "A2", "A3", "A4", "A5"],
        "directions": ["max", "min", "max"],
        "weights": [0.25, 0.4, 0.35],
        "values": [
            [0.185, 2.33, 454],
            [0.317, 1.08, 298],
            [0.555, 6.45, 174],
            [0.731, 8.88, 849],
            [0.948, 7.39, 517],
        ],
    },
    "e71": {
        "alternatives": ["A1", "A2", "A3", "A4"],
        "directions": ["max", "max", "min"],
        "weights": [0.5, 0.3, 0.2],
        "values": [
            [0.93, 600, 8.25],
            [0.51, 700, 6.33],
            [0.77, 500, 3.16],
            [0.82, 400, 2.98],
        ],
    },
    "e72": {
        "alternatives": ["A1", "A2", "A3", "A4", "A5"],
        "directions": ["min", "max", "max", "min"],
        "weights": [0.3, 0.4, 0.2, 0.1],
        "values": [
            [234, 0.122, 90.3, 0.069],
            [179, 0.641, 13.2, 0.032],
            [398, 0.782, 67.1, 0.191],
            [273, 0.979, 49.8, 0.264],
            [278, 0.543, 86.8, 0.219],
        ],
    },
    "e73": {
        "alternatives": ["A1", "A2", "A3", "A4", "A5", "A6", "A7"],
        "directions": ["max", "max", "max", "min", "min"],
        "weights": [0.25, 0.2, 0.3, 0.15, 0.1],
        "values": [
            [3405, 87.4, 0.245, 0.105, 4.2],
            [2159, 45.2, 0.521, 0.187, 3.7],
            [4782, 72.1, 0.684, 0.274, 5.1],
            [3594, 33.9, 0.319, 0.143, 2.9],
            [2911, 94.3, 0.753, 0.238, 4.8],
            [4100, 59.7, 0.602, 0.194, 3.4],
            [3317, 80.6, 0.438, 0.165, 4.7],
        ],
    },
    "e74": {
        "alternatives": ["A%d" % (i + 1) for i in range(10)],
        "directions": ["max", "min", "min", "max", "min", "min"],
        "weights": [0.2, 0.15, 0.25, 0.15, 0.15, 0.1],
        "values": [
            [575, 0.125, 63.8, 0.0215, 12.3, 3.5],
            [432, 0.315, 89.2, 0.0382, 15.7, 2.9],
            [689, 0.498, 74.5, 0.0497, 18.2, 4.1],
            [540, 0.276, 95.3, 0.0328, 14.9, 3.8],
            [478, 0.605, 70.4, 0.0409, 16.5, 4.5],
            [615, 0.451, 82.6, 0.0462, 17.9, 3.7],
            [503, 0.333, 88.9, 0.0375, 13.8, 3.2],
            [389, 0.254, 59.1, 0.0293, 10.5, 2.8],
            [455, 0.394, 76.3, 0.0319, 14.2, 4.3],
            [612, 0.512, 81.9, 0.0415, 15.1, 3.6],
        ],
    },
}


def column(values, j):
    return [row[j] for row in values]


def vector_norm_weighted(f, w):
    m, n = len(f), len(f[0])
    out = [[0.0] * n for _ in range(m)]
    for j in range(n):
        s = 0.0
        for i in range(m):
            s += f[i][j] * f[i][j]
        root = math.sqrt(s)
        for i in range(m):
            out[i][j] = f[i][j] / root * w[j]
    return out


def maxmin(f, d):
    m, n = len(f), len(f[0])
    out = [[0.0] * n for _ in range(m)]
    for j in range(n):
        lo, hi = min(column(f, j)), max(column(f, j))
        for i in range(m):
            if d[j] == "max":
                out[i][j] = (f[i][j] - lo) / (hi - lo)
            else:
                out[i][j] = (hi - f[i][j]) / (hi - lo)
    return out


def max_norm(f, d):
    m, n = len(f), len(f[0])
    out = [[0.0] * n for _ in range(m)]
    for j in range(n):
        lo, hi = min(column(f, j)), max(column(f, j))
        for i in range(m):
            out[i][j] = f[i][j] / hi if d[j] == "max" else lo / f[i][j]
    return out


def best(col, direction):
    return max(col) if direction == "max" else min(col)


def worst(col, direction):
    return min(col) if direction == "max" else max(col)


def topsis(p, params):
    f, d, w = p["values"], p["directions"], p["weights"]
    v = vector_norm_weighted(f, w)
    n = len(w)
    pis = [best(column(v, j), d[j]) for j in range(n)]
    nis = [worst(column(v, j), d[j]) for j in range(n)]
    scores = []
    for row in v:
        sp = math.sqrt(sum((row[j] - pis[j]) ** 2 for j in range(n)))
        sn = math.sqrt(sum((row[j] - nis[j]) ** 2 for j in range(n)))
        scores.append(sn / (sn + sp))
    return scores


def gra(p, params):
    f, d, w = p["values"], p["directions"], p["weights"]
    F = maxmin(f, d)
    m, n = len(F), len(F[0])
    ref = [max(column(F, j)) for j in range(n)]
    delta = [[abs(ref[j] - F[i][j]) for j in range(n)] for i in range(m)]
    dmin = min(min(r) for r in delta)
    dmax = max(max(r) for r in delta)
    scores = []
    for i in range(m):
        if params.get("gra_variant", "unweighted") == "unweighted":
            grc = [(dmin + dmax) / (delta[i][j] + dmax) for j in range(n)]
            scores.append(sum(grc) / n)
        else:
            z = params.get("zeta", 0.5)
            grc = [(dmin + z * dmax) / (delta[i][j] + z * dmax) for j in range(n)]
            scores.append(sum(w[j] * grc[j] for j in range(n)))
    return scores


def vikor_parts(p, params):
    f, d, w = p["values"], p["directions"], p["weights"]
    m, n = len(f), len(f[0])
    S, R = [], []
    for i in range(m):
        s, r = 0.0, 0.0
        for j in range(n):
            fp, fm = best(column(f, j), d[j]), worst(column(f, j), d[j])
            dev = w[j] * (fp - f[i][j]) / (fp - fm)
            s += dev
            r = max(r, dev)
        S.append(s)
        R.append(r)
    g = params.get("gamma", 0.5)
    Q = []
    for i in range(m):
        ts = 0.0 if max(S) == min(S) else (S[i] - min(S)) / (max(S) - min(S))
        tr = 0.0 if max(R) == min(R) else (R[i] - min(R)) / (max(R) - min(R))
        Q.append(g * ts + (1 - g) * tr)
    return S, R, Q


def vikor(p, params):
    return vikor_parts(p, params)[2]


def edas(p, params):
    f, d, w = p["values"], p["directions"], p["weights"]
    m, n = len(f), len(f[0])
    avg = [sum(column(f, j)) / m for j in range(n)]
    SP, SN = [], []
    for i in range(m):
        sp, sn = 0.0, 0.0
        for j in range(n):
            if d[j] == "max":
                pda = max(0.0, f[i][j] - avg[j]) / avg[j]
                nda = max(0.0, avg[j] - f[i][j]) / avg[j]
            else:
                pda = max(0.0, avg[j] - f[i][j]) / avg[j]
                nda = max(0.0, f[i][j] - avg[j]) / avg[j]
            sp += w[j] * pda
            sn += w[j] * nda
        SP.append(sp)
        SN.append(sn)
    return [0.5 * (SP[i] / max(SP) + 1 - SN[i] / max(SN)) for i in range(m)]


def mabac(p, params):
    f, d, w = p["values"], p["directions"], p["weights"]
    F = maxmin(f, d)
    m, n = len(F), len(F[0])
    v = [[(1 + F[i][j]) * w[j] for j in range(n)] for i in range(m)]
    border = []
    for j in range(n):
        prod = 1.0
        for i in range(m):
            prod *= v[i][j]
        border.append(prod ** (1.0 / m))
    return [sum(v[i][j] - border[j] for j in range(n)) for i in range(m)]


def codas(p, params):
    f, d, w = p["values"], p["directions"], p["weights"]
    F = max_norm(f, d)
    m, n = len(F), len(F[0])
    v = [[F[i][j] * w[j] for j in range(n)] for i in range(m)]
    nis = [min(column(v, j)) for j in range(n)]
    E = [math.sqrt(sum((v[i][j] - nis[j]) ** 2 for j in range(n))) for i in range(m)]
    T = [sum(abs(v[i][j] - nis[j]) for j in range(n)) for i in range(m)]
    tau = params.get("tau", 0.02)
    scores = []
    for i in range(m):
        total = 0.0
        for k in range(m):
            psi = 1.0 if abs(E[i] - E[k]) >= tau else 0.0
            total += (E[i] - E[k]) + psi * (T[i] - T[k])
        scores.append(total)
    return scores


def piv(p, params):
    f, d, w = p["values"], p["directions"], p["weights"]
    v = vector_norm_weighted(f, w)
    n = len(w)
    pis = [best(column(v, j), d[j]) for j in range(n)]
    return [sum(abs(row[j] - pis[j]) for j in range(n)) for row in v]


def marcos(p, params):
    f, d, w = p["values"], p["directions"], p["weights"]
    m, n = len(f), len(f[0])
    ext = [list(r) for r in f]
    ext.append([best(column(f, j), d[j]) for j in range(n)])
    ext.append([worst(column(f, j), d[j]) for j in range(n)])
    F = max_norm(ext, d)
    S = [sum(F[i][j] * w[j] for j in range(n)) for i in range(m + 2)]
    s_pos, s_neg = S[m], S[m + 1]
    scores = []
    for i in range(m):
        kp, kn = S[i] / s_pos, S[i] / s_neg
        fkp, fkn = kn / (kp + kn), kp / (kp + kn)
        scores.append((kp + kn) / (1 + (1 - fkp) / fkp + (1 - fkn) / fkn))
    return scores


def probid(p, params):
    f, d, w = p["values"], p["directions"], p["weights"]
    v = vector_norm_weighted(f, w)
    m, n = len(v), len(v[0])
    tiers = []
    for k in range(m):
        tier = []
        for j in range(n):
            col = sorted(column(v, j), reverse=(d[j] == "max"))
            tier.append(col[k])
        tiers.append(tier)
    avg = [sum(column(v, j)) / m for j in range(n)]
    scores = []
    for i in range(m):
        dist = [math.sqrt(sum((v[i][j] - tiers[k][j]) ** 2 for j in range(n)))
                for k in range(m)]
        davg = math.sqrt(sum((v[i][j] - avg[j]) ** 2 for j in range(n)))
        if m % 2 == 1:
            pos = sum(dist[k - 1] / k for k in range(1, (m + 1) // 2 + 1))
            neg = sum(dist[k - 1] / (m - k + 1) for k in range((m + 1) // 2, m + 1))
        else:
            pos = sum(dist[k - 1] / k for k in range(1, m // 2 + 1))
            neg = sum(dist[k - 1] / (m - k + 1) for k in range(m // 2 + 1, m + 1))
        if neg == 0:
            # Limit of the first term as the ratio grows without bound.
            scores.append(davg)
            continue
        r = pos / neg
        scores.append(1 / (1 + r * r) + davg)
    return scores


METHODS = {
    "topsis": topsis, "gra": gra, "vikor": vikor, "edas": edas, "mabac": mabac,
    "codas": codas, "piv": piv, "marcos": marcos, "probid": probid,
}


def build():
    out = {}
    for name, fx in FIXTURES.items():
        entry = {}
        for mid, fn in METHODS.items():
            entry[mid] = fn(fx, {})
        entry["gra_weighted_zeta"] = {
            str(z): gra(fx, {"gra_variant": "weighted", "zeta": z}) for z in (0.3, 0.5, 0.7)
        }
        entry["vikor_gamma"] = {
            str(g): vikor(fx, {"gamma": g}) for g in (0.0, 0.25, 0.5, 0.75, 1.0)
        }
        out[name] = entry
    # TOPSIS on the reference problem without A3.
    fx = FIXTURES["table71"]
    reduced = dict(fx)
    reduced["values"] = [r for i, r in enumerate(fx["values"]) if i != 2]
    out["table71_drop_a3_topsis"] = topsis(reduced, {})
    return out


def main(argv):
    result = build()
    if len(argv) == 3 and argv[1] == "--check":
        with open(argv[2]) as fh:
            frozen = json.load(fh)
        bad = []

        def walk(a, b, path):
            if isinstance(a, dict):
                for k in a:
                    walk(a[k], b.get(k) if isinstance(b, dict) else None, path + "/" + k)
            elif isinstance(a, list):
                if not isinstance(b, list) or len(a) != len(b):
                    bad.append(path)
                    return
                for idx, (x, y) in enumerate(zip(a, b)):
                    walk(x, y, "%s/%d" % (path, idx))
            elif b is None or abs(a - b) > 1e-12:
                bad.append(path)

        walk(result, frozen, "")
        if bad:
            print("oracle mismatch at: " + ", ".join(bad))
            return 1
        print("frozen oracle values are current")
        return 0
    print(json.dumps(result, indent=2, sort_keys=True))
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))

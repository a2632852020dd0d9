#!/usr/bin/env python3
"""Regenerates spheres.json, the shipped table of homotopy groups of spheres.

Group structures follow Toda's tables for pi_{n+k}(S^n), 1 <= n <= 12,
0 <= k <= 8.  Suspension and antipodal matrices are written against the
generator conventions fixed by the labels below; see the per-record
provenance strings for the relation each matrix encodes.

Usage: python3 data/build_sphere_db.py > data/spheres.json
"""

import json
import sys

N_MIN, N_MAX, STEM_MAX = 1, 12, 8
TODA = "Toda 1962, Composition Methods in Homotopy Groups of Spheres, tables of pi_{n+k}(S^n)"

# (n, k) -> (free_rank, torsion, labels)
groups = {}


def put(n, k, free, torsion, labels):
    assert len(labels) == free + len(torsion), (n, k)
    groups[(n, k)] = (free, torsion, labels)


for n in range(1, N_MAX + 1):
    put(n, 0, 1, [], [f"iota_{n}"])

for k in range(1, STEM_MAX + 1):
    put(1, k, 0, [], [])

put(2, 1, 1, [], ["eta_2"])
put(2, 2, 0, [2], ["eta_2^2"])
put(2, 3, 0, [2], ["eta_2^3"])
put(2, 4, 0, [12], ["eta_2.nu'"])
put(2, 5, 0, [2], ["eta_2.nu'.eta_6"])
put(2, 6, 0, [2], ["eta_2.nu'.eta_6^2"])
put(2, 7, 0, [3], ["eta_2.nu'.nu_6"])
put(2, 8, 0, [15], ["eta_2.alpha(3)"])

put(3, 1, 0, [2], ["eta_3"])
put(3, 2, 0, [2], ["eta_3^2"])
put(3, 3, 0, [12], ["nu'"])
put(3, 4, 0, [2], ["nu'.eta_6"])
put(3, 5, 0, [2], ["nu'.eta_6^2"])
put(3, 6, 0, [3], ["nu'.nu_6"])
put(3, 7, 0, [15], ["alpha(3)"])
put(3, 8, 0, [2], ["epsilon_3"])

put(4, 1, 0, [2], ["eta_4"])
put(4, 2, 0, [2], ["eta_4^2"])
put(4, 3, 1, [12], ["nu_4", "E nu'"])
put(4, 4, 0, [2, 2], ["nu_4.eta_7", "E nu'.eta_7"])
put(4, 5, 0, [2, 2], ["nu_4.eta_7^2", "E nu'.eta_7^2"])
put(4, 6, 0, [3, 24], ["E nu'.nu_7", "nu_4.nu_7"])
put(4, 7, 0, [15], ["E alpha(3)"])
put(4, 8, 0, [2], ["epsilon_4"])

for n in range(5, N_MAX + 1):
    put(n, 1, 0, [2], [f"eta_{n}"])
    put(n, 2, 0, [2], [f"eta_{n}^2"])
    put(n, 3, 0, [24], [f"nu_{n}"])
put(5, 4, 0, [2], ["nu_5.eta_8"])
put(5, 5, 0, [2], ["nu_5.eta_8^2"])
put(5, 6, 0, [2], ["nu_5^2"])
put(5, 7, 0, [30], ["sigma'''"])
put(5, 8, 0, [2], ["epsilon_5"])

put(6, 4, 0, [], [])
put(6, 5, 1, [], ["[iota_6,iota_6]"])
put(6, 6, 0, [2], ["nu_6^2"])
put(6, 7, 0, [60], ["sigma''"])
put(6, 8, 0, [2, 24], ["epsilon_6", "nu-bar_6"])

put(7, 7, 0, [120], ["sigma'"])
put(7, 8, 0, [2, 2, 2], ["sigma'.eta_14", "nu-bar_7", "epsilon_7"])

put(8, 7, 1, [120], ["sigma_8", "E sigma'"])
put(8, 8, 0, [2, 2, 2, 2], ["sigma_8.eta_15", "E sigma'.eta_15", "nu-bar_8", "epsilon_8"])

put(9, 7, 0, [240], ["sigma_9"])
put(9, 8, 0, [2, 2, 2], ["sigma_9.eta_16", "nu-bar_9", "epsilon_9"])

for n in range(7, N_MAX + 1):
    put(n, 4, 0, [], [])
    put(n, 5, 0, [], [])
    put(n, 6, 0, [2], [f"nu_{n}^2"])
for n in range(10, N_MAX + 1):
    put(n, 7, 0, [240], [f"sigma_{n}"])
    put(n, 8, 0, [2, 2], [f"nu-bar_{n}", f"epsilon_{n}"])

assert len(groups) == N_MAX * (STEM_MAX + 1)


def gens(n, k):
    free, torsion, _ = groups[(n, k)]
    return free + len(torsion)


def identity(size):
    return [[1 if i == j else 0 for j in range(size)] for i in range(size)]


def zeros(rows, cols):
    return [[0] * cols for _ in range(rows)]


homs = []


def hom(kind, m, n, matrix, provenance, field=None):
    record = {"kind": kind, "m": m, "n_or_nprime": n, "matrix": matrix, "provenance": provenance}
    if field is not None:
        record["K"] = field
    homs.append(record)


# Suspension E: pi_{n+k}(S^n) -> pi_{n+k+1}(S^{n+1}).
special_suspension = {
    (2, 3): ([[6]], "Toda 1962: E(eta_2^3) = eta_3^3 = 6 nu' (the element of order 2)"),
    (3, 3): ([[0], [1]], "Toda 1962: pi_7(S^4) = Z{nu_4} + Z12{E nu'}"),
    (4, 3): ([[1, 2]], "Toda 1962: E nu_4 = nu_5, E^2 nu' = 2 nu_5"),
    (2, 4): ([[0]], "EHP sequence: H(nu'.eta_6) = eta_5^2 is nonzero, so E vanishes on pi_6(S^2)"),
    (3, 4): ([[0], [1]], "Toda 1962: E(nu'.eta_6) = E nu'.eta_7"),
    (4, 4): ([[1, 0]], "Toda 1962: E^2 nu'.eta_8 = 2 nu_5.eta_8 = 0"),
    (2, 5): ([[0]], "EHP sequence: H is injective on pi_8(S^3), so E vanishes on pi_7(S^2)"),
    (3, 5): ([[0], [1]], "Toda 1962: E(nu'.eta_6^2) = E nu'.eta_7^2"),
    (4, 5): ([[1, 0]], "Toda 1962: E^2 nu'.eta_8^2 = 0"),
    (5, 5): ([[0]], "pi_10(S^5) is torsion and pi_11(S^6) is free"),
    (2, 6): ([[0]], "order reasons: Z2 -> Z3"),
    (3, 6): ([[1], [0]], "pi_10(S^4) = E pi_9(S^3) + nu_4.pi_10(S^7) (Hopf fibration splitting)"),
    (4, 6): ([[0, 1]], "Toda 1962: E(nu_4.nu_7) = nu_5^2, E(E nu'.nu_7) = 2 nu_5.nu_8 = 0"),
    (2, 7): ([[0]], "eta_3 composed with an element of order 3 from a suspension vanishes"),
    (4, 7): ([[2]], "Toda 1962: 2-primary pi_11(S^4) = 0; odd part maps isomorphically (generator choice)"),
    (5, 7): ([[2]], "Toda 1962: E sigma''' = 2 sigma''; odd part isomorphic"),
    (6, 7): ([[2]], "Toda 1962: E sigma'' = 2 sigma'; odd part isomorphic"),
    (7, 7): ([[0], [1]], "Toda 1962: pi_15(S^8) = Z{sigma_8} + Z120{E sigma'}"),
    (8, 7): ([[1, 2]], "Toda 1962: E sigma_8 = sigma_9, E^2 sigma' = 2 sigma_9"),
    (2, 8): ([[0]], "order reasons: Z15 -> Z2"),
    (5, 8): ([[1], [0]], "Toda 1962: E epsilon_5 = epsilon_6"),
    (6, 8): ([[0, 0], [0, 1], [1, 0]], "Toda 1962: E epsilon_6 = epsilon_7, E nu-bar_6 = nu-bar_7"),
    (7, 8): ([[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]],
             "Toda 1962: E(sigma'.eta_14) = E sigma'.eta_15, nu-bar and epsilon suspend"),
    (8, 8): ([[1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
             "Toda 1962: E^2 sigma'.eta_16 = 2 sigma_9.eta_16 = 0"),
    (9, 8): ([[1, 1, 0], [1, 0, 1]],
             "Toda 1962: sigma_10.eta_17 = nu-bar_10 + epsilon_10; kernel generated by [iota_9,iota_9]"),
}

for n in range(1, N_MAX):
    for k in range(0, STEM_MAX + 1):
        rows, cols = gens(n + 1, k), gens(n, k)
        if (n, k) in special_suspension:
            matrix, prov = special_suspension[(n, k)]
        elif cols == 0 or rows == 0:
            matrix, prov = zeros(rows, cols), "trivial group"
        else:
            assert rows == cols, (n, k)
            matrix, prov = identity(rows), TODA + "; generators identified by suspension"
        assert len(matrix) == rows and all(len(r) == cols for r in matrix), (n, k)
        hom("suspension", n + k, n, matrix, prov)

# Stable suspension E^oo: pi_{n+k}(S^n) -> pi_{k+N}(S^N), N = N_MAX.  Written
# from the stable names of the generators, independently of the chain of
# single suspensions above; the validator cross-checks the two.
stable = {
    (2, 1): [[1]],
    (2, 2): [[1]],
    (2, 3): [[12]],
    (3, 3): [[2]],
    (4, 3): [[1, 2]],
    (2, 6): [[0]],
    (3, 6): [[0]],
    (4, 6): [[0, 1]],
    (2, 7): [[0]],
    (3, 7): [[16]],
    (4, 7): [[16]],
    (5, 7): [[8]],
    (6, 7): [[4]],
    (7, 7): [[2]],
    (8, 7): [[1, 2]],
    (2, 8): [[0], [0]],
    (3, 8): [[0], [1]],
    (4, 8): [[0], [1]],
    (5, 8): [[0], [1]],
    (6, 8): [[0, 1], [1, 0]],
    (7, 8): [[0, 1, 0], [0, 0, 1]],
    (8, 8): [[1, 0, 1, 0], [1, 0, 0, 1]],
    (9, 8): [[1, 1, 0], [1, 0, 1]],
}
stable_prov = {
    3: "stable relations eta^3 = 12 nu, E^oo nu' = 2 nu",
    7: "stable relations E^oo sigma' = 2 sigma, sigma'' -> 4 sigma, sigma''' -> 8 sigma",
    8: "stable relation eta.sigma = nu-bar + epsilon; E^oo(sigma'.eta_14) = 2 sigma.eta = 0",
}
for (n, k), matrix in sorted(stable.items()):
    hom("stable_suspension", n + k, n, matrix, stable_prov.get(k, TODA))

# Antipodal action A_* on pi_m(S^n) for even n outside the stable range.
# Uses A o alpha = -alpha + [iota_n, iota_n] o H(alpha) (valid for m < 3n - 2)
# together with [iota_4, iota_4] = 2 nu_4 - E nu' and [iota_8, iota_8] = 2 sigma_8 - E sigma'.
antipodal = {
    (3, 2): ([[1]], "A o eta_2 = -eta_2 + [iota_2,iota_2] = eta_2"),
    (4, 2): ([[1]], "A o eta_2 = eta_2; pi_m(S^2) = eta_2 o pi_m(S^3)"),
    (5, 2): ([[1]], "A o eta_2 = eta_2; pi_m(S^2) = eta_2 o pi_m(S^3)"),
    (6, 2): ([[1]], "A o eta_2 = eta_2; pi_m(S^2) = eta_2 o pi_m(S^3)"),
    (7, 2): ([[1]], "A o eta_2 = eta_2; pi_m(S^2) = eta_2 o pi_m(S^3)"),
    (8, 2): ([[1]], "A o eta_2 = eta_2; pi_m(S^2) = eta_2 o pi_m(S^3)"),
    (9, 2): ([[1]], "A o eta_2 = eta_2; pi_m(S^2) = eta_2 o pi_m(S^3)"),
    (10, 2): ([[1]], "A o eta_2 = eta_2; pi_m(S^2) = eta_2 o pi_m(S^3)"),
    (7, 4): ([[1, 0], [11, 11]], "A o nu_4 = nu_4 - E nu', A o E nu' = -E nu'"),
    (8, 4): ([[1, 0], [1, 1]], "A o nu_4 = nu_4 - E nu' composed with eta_7"),
    (9, 4): ([[1, 0], [1, 1]], "A o nu_4 = nu_4 - E nu' composed with eta_7^2"),
    (10, 4): ([[2, 2], [0, 1]], "A o nu_4 = nu_4 - E nu' composed with nu_7; suspensions negate"),
    (11, 4): ([[14]], "pi_11(S^4) consists of suspensions"),
    (12, 4): ([[1]], "pi_12(S^4) consists of suspensions"),
    (11, 6): ([[1]], "A o [iota_6,iota_6] = [-iota_6,-iota_6] = [iota_6,iota_6]"),
    (12, 6): ([[1]], "pi_12(S^6) consists of suspensions"),
    (13, 6): ([[59]], "[iota_6,iota_6] o eta_11 = 0, so A o sigma'' = -sigma''"),
    (15, 8): ([[1, 0], [119, 119]], "A o sigma_8 = sigma_8 - E sigma', A o E sigma' = -E sigma'"),
    (16, 8): ([[1, 0, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
              "A o sigma_8 = sigma_8 - E sigma' composed with eta_15; suspensions negate"),
}
for (m, n), (matrix, prov) in sorted(antipodal.items(), key=lambda kv: (kv[0][1], kv[0][0])):
    hom("antipodal", m, n, matrix, prov)

sphere_groups = []
for (n, k), (free, torsion, labels) in sorted(groups.items()):
    sphere_groups.append({
        "m": n + k, "n": n, "free_rank": free, "torsion": torsion, "labels": labels,
        "provenance": "analytic (degree)" if k == 0 else TODA,
    })

doc = {
    "range": {"n_min": N_MIN, "n_max": N_MAX, "stem_max": STEM_MAX},
    "sphere_groups": sphere_groups,
    "homs": homs,
}
json.dump(doc, sys.stdout, indent=1)
sys.stdout.write("\n")

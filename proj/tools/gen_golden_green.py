# Copyright 2026 The qgc Authors
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

"""Writes data/golden_green_functions.json.

The tables come from each channel's closed-form Green function, evaluated
with a small stand-alone Grassmann implementation (no code shared with the
C++ library). Generators are zeta, zeta*, xi, xi* = 0, 1, 2, 3 and a
monomial is stored under the bitmask of its generators, written in
ascending order.

    python3 tools/gen_golden_green.py > data/golden_green_functions.json
"""

import json
import math
import sys

LABELS = ["ζ", "ζ*", "ξ", "ξ*"]
ZETA, ZETA_C, XI, XI_C = 0, 1, 2, 3


def sort_sign(seq):
    """Sign of the bubble sort of a generator sequence; 0 on repeats."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0, None
    sign = 1
    for i in range(len(seq)):
        for j in range(len(seq) - 1 - i):
            if seq[j] > seq[j + 1]:
                seq[j], seq[j + 1] = seq[j + 1], seq[j]
                sign = -sign
    return sign, tuple(seq)


class G:
    """Element as a dict {sorted generator tuple: complex}."""

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v != 0}

    @staticmethod
    def gen(k, c=1.0):
        return G({(k,): complex(c)})

    @staticmethod
    def scalar(c):
        return G({(): complex(c)})

    def __add__(self, o):
        r = dict(self.terms)
        for k, v in o.terms.items():
            r[k] = r.get(k, 0) + v
        return G(r)

    def __sub__(self, o):
        return self + o.scale(-1)

    def scale(self, c):
        return G({k: c * v for k, v in self.terms.items()})

    def __mul__(self, o):
        r = {}
        for ka, va in self.terms.items():
            for kb, vb in o.terms.items():
                s, key = sort_sign(ka + kb)
                if s:
                    r[key] = r.get(key, 0) + s * va * vb
        return G(r)

    def adjoint(self):
        # (c g1 g2 ... gk)^dagger = c* gk^* ... g1^*
        conj = {ZETA: ZETA_C, ZETA_C: ZETA, XI: XI_C, XI_C: XI}
        r = G()
        for k, v in self.terms.items():
            term = G.scalar(v.conjugate())
            for g in reversed(k):
                term = term * G.gen(conj[g])
            r = r + term
        return r

    def exp(self):
        r, power = G.scalar(1), G.scalar(1)
        for n in range(1, 5):
            power = power * self
            r = r + power.scale(1 / math.factorial(n))
        return r

    def coefficients(self):
        out = [[0.0, 0.0] for _ in range(16)]
        for k, v in self.terms.items():
            mask = sum(1 << g for g in k)
            out[mask] = [v.real, v.imag]
        return out


def delta(a, b):
    eta = G.gen(ZETA) - G.gen(XI, a) - G.gen(XI_C, b)
    return eta * eta.adjoint()


XI_XIC = G.gen(XI) * G.gen(XI_C)
XIC_XI = G.gen(XI_C) * G.gen(XI)


def green(name, p):
    if name == "bit_flip":
        s = p["s"]
        return delta(s, s - 1)
    if name == "phase_flip":
        s = p["s"]
        return delta(2 * s - 1, 0) + XI_XIC.scale(4 * s * (1 - s))
    if name == "bit_phase_flip":
        s = p["s"]
        return delta(s, 1 - s)
    if name == "depolarizing":
        s = p["s"]
        return delta(1 - s, 0) + XI_XIC.scale(s * (1 - s))
    if name == "amplitude_damping":
        n = p["n"]
        return delta(math.sqrt(n), 0) * XIC_XI.scale(-(1 - n) / 2).exp()
    if name == "generalized_amplitude_damping":
        n, s = p["n"], p["s"]
        return delta(math.sqrt(n), 0) * XIC_XI.scale(-(2 * s - 1) * (1 - n) / 2).exp()
    raise ValueError(name)


def samples(name):
    grid = [(k + 0.5) / 20 for k in range(20)]
    if name == "generalized_amplitude_damping":
        return [{"n": grid[k], "s": grid[(7 * k + 3) % 20]} for k in range(20)]
    key = "n" if name == "amplitude_damping" else "s"
    return [{key: x} for x in grid]


def main():
    basis = []
    for m in range(16):
        basis.append("".join(LABELS[k] for k in range(4) if m >> k & 1) or "1")
    cases = []
    for name in ["bit_flip", "phase_flip", "bit_phase_flip", "depolarizing", "amplitude_damping",
                 "generalized_amplitude_damping"]:
        for p in samples(name):
            cases.append({"name": name, "params": p, "coefficients": green(name, p).coefficients()})
    json.dump({"schema_version": 1, "basis": basis, "cases": cases}, sys.stdout, ensure_ascii=False, indent=1)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()

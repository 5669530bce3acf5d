"""Independent scalar evaluations used to freeze expected values in the C++ tests.

Run with: python3 tests/oracles/scalar_values.py
"""
import math

import numpy as np


def theta(idx, vocab):
    return idx * 2 * math.pi / vocab


def main():
    a, w, d = 0.5, 1.0, 1.0
    t1, t2 = theta(1, 8), theta(2, 8)
    print("m1 c00", math.exp(0) * math.sin(w * t1) * math.cos(w * t1) + t1)
    print("m1 c01", math.exp(-a) * math.sin(w * t1) * math.cos(w * t2) + t1)
    print("m1 c10", math.exp(-a) * math.sin(w * t2) * math.cos(w * t1) + t2)
    print("m2 c01", math.exp(-a) * math.sin(w * t1) + t1)
    print("m2 c11", math.log(1 + 2))
    print("m3 c11 idx=[0,4]", math.sin(w * 1 + d * theta(4, 8)) + theta(4, 8))
    print("m3 c10 idx=[0,4]", math.exp(-a) * math.sin(w * 1 + d * theta(4, 8)) + theta(4, 8))
    print("m4 h", (5 * 31) % 64)
    h = 27
    print("m4 c01 idx=[5,0] V=8 p=31 N=64", math.exp(-a) * math.sin(0 + h) + theta(5, 8))
    print("m5 w=2", 2 * theta(2, 8))
    # hash collision enumeration
    for V in (34, 64, 1024):
        hs = {(i * 31) % 65536 for i in range(V)}
        print("distinct hashes V=%d" % V, len(hs) == V)
    print("bce all 0.5 m=2", 2 * math.log(2))
    print("bce all 0.5 m=5", 5 * math.log(2))
    p = [0.9, 0.2]
    b = [1, 0]
    print("bce [0.9,0.2] vs [1,0]", -sum(bi * math.log(pi) + (1 - bi) * math.log(1 - pi) for pi, bi in zip(p, b)))

    # 2-qubit forward: H on both, RX(0),RZ(0), CNOT(0,1); P(1) per qubit.
    H = np.array([[1, 1], [1, -1]]) / math.sqrt(2)
    psi = np.zeros(4, complex)
    psi[0] = 1
    psi = np.kron(H, H) @ psi
    cnot = np.zeros((4, 4))
    for i in range(4):
        j = i ^ 2 if i & 1 else i
        cnot[j, i] = 1
    psi = cnot @ psi
    probs = np.abs(psi) ** 2
    print("forward m=2 P1 q0", probs[1] + probs[3], "q1", probs[2] + probs[3])

    # CBOW: |V|=3, d=2 fixed embedding, context {0,1}
    E = np.array([[0.1, -0.2], [0.3, 0.4], [-0.5, 0.2]])
    h_ = (E[0] + E[1]) / 2
    s = E @ h_
    pr = np.exp(s - s.max())
    pr /= pr.sum()
    print("cbow probs", list(pr))


if __name__ == "__main__":
    main()

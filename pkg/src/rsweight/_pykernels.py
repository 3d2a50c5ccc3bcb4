"""Pure-Python enumeration kernels (reference twins of ``_ckernels``)."""

import itertools

import numpy as np


def root_histogram(base, powers, add, mul, q, k, start, stop):
    """Root-count histogram over class members ``start..stop-1``.

    Member ``m`` is ``fixed + sum_i c_i x^i`` where ``c_i`` are the base-q
    digits of ``m``; ``base[a]`` is the fixed part evaluated at the a-th
    domain point and ``powers[i][a]`` that point to the i-th power.
    """
    base = [int(v) for v in base]
    powers = [[int(v) for v in row] for row in powers]
    add = add.tolist() if isinstance(add, np.ndarray) else add
    mul = mul.tolist() if isinstance(mul, np.ndarray) else mul
    n = len(base)
    hist = [0] * (n + 1)
    digits = []
    rem = start
    for _ in range(k):
        rem, d = divmod(rem, q)
        digits.append(d)
    for _ in range(start, stop):
        cnt = 0
        for a in range(n):
            v = base[a]
            for i in range(k):
                c = digits[i]
                if c:
                    v = add[v][mul[c][powers[i][a]]]
            if v == 0:
                cnt += 1
        hist[cnt] += 1
        for i in range(k):
            digits[i] += 1
            if digits[i] < q:
                break
            digits[i] = 0
    return np.array(hist, dtype=np.int64)


def vsystem_count(dom, avec, a0, b0, add, mul):
    """#{x in D^m : sum a_j x_j^2 = a0, sum a_j x_j = b0}."""
    add = add.tolist() if isinstance(add, np.ndarray) else add
    mul = mul.tolist() if isinstance(mul, np.ndarray) else mul
    dom = [int(x) for x in dom]
    avec = [int(a) for a in avec]
    total = 0
    for xs in itertools.product(dom, repeat=len(avec)):
        s1 = s2 = 0
        for aj, x in zip(avec, xs):
            ax = mul[aj][x]
            s1 = add[s1][ax]
            s2 = add[s2][mul[ax][x]]
        if s1 == b0 and s2 == a0:
            total += 1
    return total

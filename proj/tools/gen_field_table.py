#!/usr/bin/env python3
"""Regenerates src/field_table.cpp: the smallest primitive polynomial for every p^n <= 4096."""
import sys
from sympy import primerange, factorint

LIMIT = 4096


def polymulmod(a, b, f, p):
    n = len(f) - 1
    res = [0] * (2 * n)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                res[i + j] = (res[i + j] + x * y) % p
    for d in range(len(res) - 1, n - 1, -1):
        c = res[d]
        if c:
            for k in range(n + 1):
                res[d - n + k] = (res[d - n + k] - c * f[k]) % p
    return res[:n]


def xpow(e, f, p):
    n = len(f) - 1
    result = [1] + [0] * (n - 1)
    base = [0, 1] + [0] * (n - 2) if n > 1 else [(-f[0]) % p]
    while e:
        if e & 1:
            result = polymulmod(result, base, f, p)
        base = polymulmod(base, base, f, p)
        e >>= 1
    return result


def is_primitive(f, p):
    n = len(f) - 1
    order = p ** n - 1
    one = [1] + [0] * (n - 1)
    if xpow(order, f, p) != one:
        return False
    for ell in factorint(order):
        if xpow(order // ell, f, p) == one:
            return False
    return True


def smallest_primitive(p, n):
    for code in range(p ** n):
        low = [(code // p ** i) % p for i in range(n)]
        if low[0] == 0:
            continue
        f = low + [1]
        if is_primitive(f, p):
            return low
    raise RuntimeError((p, n))


rows = []
for p in primerange(2, LIMIT + 1):
    n = 1
    while p ** n <= LIMIT:
        rows.append((p, n, smallest_primitive(p, n)))
        n += 1

out = sys.stdout
out.write("// Generated by tools/gen_field_table.py. Do not edit.\n")
out.write("#include \"dlpar/field.hpp\"\n\nnamespace dlpar {\n\n")
out.write("const std::vector<PrimitivePoly>& primitive_polys()\n{\n")
out.write("    static const std::vector<PrimitivePoly> table = {\n")
for p, n, low in rows:
    out.write("        {%d, %d, {%s}},\n" % (p, n, ", ".join(map(str, low))))
out.write("    };\n    return table;\n}\n\n}  // namespace dlpar\n")

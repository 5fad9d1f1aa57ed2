#!/usr/bin/env python3
"""Regenerates data/real_forms.catalog.

Classical families are produced from their standard Satake diagrams up to the
bounds below; exceptional entries are listed explicitly. Node numbering is
1-based and follows the library convention (Bourbaki for A-D, F, G; for E_n a
chain 1..n-1 with node n attached to chain node 3).
"""

import sys

MAX_A = 17      # sl(18,R), su*(18)
MAX_BCD = 9     # so(9,9), so(9,10), sp(18,R)


def rec(name, typ, black, arrows, rtype, rmap, n):
    colors = "".join("1" if i in black else "0" for i in range(1, n + 1))
    arr = " ".join(f"{a}-{b}" for a, b in arrows) or "-"
    rm = " ".join(f"{k}:{v}" for k, v in rmap)
    return f"{name} | {typ} | {colors} | {arr} | {rtype} | {rm}"


def restricted_rank1(nonreduced):
    return "BC1" if nonreduced else "A1"


def classical():
    out = []
    # sl(n,R): split A_{n-1}
    for n in range(2, MAX_A + 2):
        r = n - 1
        out.append(rec(f"sl({n},R)", f"A{r}", set(), [], f"A{r}", [(i, i) for i in range(1, r + 1)], r))
    # su*(2m): A_{2m-1}, black at odd nodes
    for m in range(2, (MAX_A + 1) // 2 + 1):
        r = 2 * m - 1
        black = set(range(1, r + 1, 2))
        out.append(rec(f"su*({2*m})", f"A{r}", black, [], f"A{m-1}", [(2 * k, k) for k in range(1, m)], r))
    # su(p,q), p <= q, A_{p+q-1}
    for total in range(3, MAX_A + 2):
        r = total - 1
        for p in range(1, total // 2 + 1):
            q = total - p
            if p == q == 1:
                continue
            if p < q:
                black = set(range(p + 1, r - p + 1))
                arrows = [(i, r + 1 - i) for i in range(1, p + 1)]
                rmap = sorted([(i, i) for i in range(1, p + 1)] + [(r + 1 - i, i) for i in range(1, p + 1)])
                rtype = f"BC{p}"
            else:
                black = set()
                arrows = [(i, r + 1 - i) for i in range(1, p)]
                rmap = sorted([(i, i) for i in range(1, p)] + [(r + 1 - i, i) for i in range(1, p)] + [(p, p)])
                rtype = f"C{p}" if p >= 2 else "A1"
            out.append(rec(f"su({p},{q})", f"A{r}", black, arrows, rtype, rmap, r))
    # so(p,q), p+q odd: B_n
    for n in range(2, MAX_BCD + 1):
        total = 2 * n + 1
        for p in range(1, n + 1):
            q = total - p
            black = set(range(p + 1, n + 1))
            rtype = f"B{p}" if p >= 2 else "A1"
            out.append(rec(f"so({p},{q})", f"B{n}", black, [], rtype, [(i, i) for i in range(1, p + 1)], n))
    # so(p,q), p+q even: D_n, n >= 4
    for n in range(4, MAX_BCD + 1):
        total = 2 * n
        for p in range(1, n + 1):
            q = total - p
            if p <= n - 2:
                black = set(range(p + 1, n + 1))
                arrows = []
                rmap = [(i, i) for i in range(1, p + 1)]
                rtype = f"B{p}" if p >= 2 else "A1"
            elif p == n - 1:
                black = set()
                arrows = [(n - 1, n)]
                rmap = [(i, i) for i in range(1, n)] + [(n, n - 1)]
                rtype = f"B{n-1}"
            else:
                black = set()
                arrows = []
                rmap = [(i, i) for i in range(1, n + 1)]
                rtype = f"D{n}"
            out.append(rec(f"so({p},{q})", f"D{n}", black, arrows, rtype, rmap, n))
    # sp(2n,R): split C_n
    for n in range(2, MAX_BCD + 1):
        out.append(rec(f"sp({2*n},R)", f"C{n}", set(), [], f"C{n}", [(i, i) for i in range(1, n + 1)], n))
    # sp(p,q), C_{p+q}: black at odd nodes, white at 2,4,..,2p
    for n in range(2, MAX_BCD + 1):
        for p in range(1, n // 2 + 1):
            q = n - p
            white = set(range(2, 2 * p + 1, 2))
            black = set(range(1, n + 1)) - white
            if p < q:
                rtype = f"BC{p}"
            else:
                rtype = f"C{p}" if p >= 2 else "A1"
            out.append(rec(f"sp({p},{q})", f"C{n}", black, [], rtype, [(2 * k, k) for k in range(1, p + 1)], n))
    # so*(2n), D_n, n >= 4
    for n in range(4, MAX_BCD + 1):
        if n % 2 == 0:
            white = set(range(2, n - 1, 2)) | {n}
            black = set(range(1, n + 1)) - white
            rmap = [(2 * k, k) for k in range(1, n // 2)] + [(n, n // 2)]
            rtype = f"C{n//2}"
            arrows = []
        else:
            m = (n - 1) // 2
            white = set(range(2, n - 2, 2)) | {n - 1, n}
            black = set(range(1, n + 1)) - white
            rmap = [(2 * k, k) for k in range(1, m)] + [(n - 1, m), (n, m)]
            rtype = f"BC{m}"
            arrows = [(n - 1, n)]
        out.append(rec(f"so*({2*n})", f"D{n}", black, arrows, rtype, rmap, n))
    return out


def exceptional():
    def ident(n):
        return [(i, i) for i in range(1, n + 1)]
    return [
        rec("E6^I", "E6", set(), [], "E6", ident(6), 6),
        rec("E6^II", "E6", set(), [(1, 5), (2, 4)], "F4", [(1, 4), (2, 3), (3, 2), (4, 3), (5, 4), (6, 1)], 6),
        rec("E6^III", "E6", {2, 3, 4}, [(1, 5)], "BC2", [(1, 2), (5, 2), (6, 1)], 6),
        rec("E6^IV", "E6", {2, 3, 4, 6}, [], "A2", [(1, 1), (5, 2)], 6),
        rec("E7^V", "E7", set(), [], "E7", ident(7), 7),
        rec("E7^VI", "E7", {4, 6, 7}, [], "F4", [(1, 1), (2, 2), (3, 3), (5, 4)], 7),
        rec("E7^VII", "E7", {2, 3, 4, 7}, [], "C3", [(1, 1), (5, 2), (6, 3)], 7),
        rec("E8^VIII", "E8", set(), [], "E8", ident(8), 8),
        rec("E8^IX", "E8", {2, 3, 4, 8}, [], "F4", [(1, 4), (5, 3), (6, 2), (7, 1)], 8),
        rec("F4^I", "F4", set(), [], "F4", ident(4), 4),
        rec("F4^II", "F4", {1, 2, 3}, [], "BC1", [(4, 1)], 4),
        rec("G2^*", "G2", set(), [], "G2", ident(2), 2),
    ]


def main():
    lines = [
        "# Real forms of complex simple Lie algebras as Satake diagrams.",
        "# version 1",
        "# name | type | colors (1 = black, node 1 first) | arrows (i-j, 1-based, '-' for none)",
        "#      | restricted type (BCn = non-reduced) | restriction map (node:restricted simple root)",
    ]
    lines += classical()
    lines += exceptional()
    sys.stdout.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()

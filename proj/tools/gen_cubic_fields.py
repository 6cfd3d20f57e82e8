#!/usr/bin/env python3
"""Write a list of totally real cubic fields, one defining polynomial per
field discriminant, with an integral basis from sympy's round-two.

Line format:  poly | basis | disc
"""
import argparse
import itertools
from fractions import Fraction

from sympy import Poly, ZZ, discriminant, symbols
from sympy.polys.numberfields.basis import round_two

x = symbols("x")


def fmt_coeff_term(c, k):
    if k == 0:
        return str(c)
    mono = "x" if k == 1 else f"x^{k}"
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{c}*{mono}"


def fmt_poly(coeffs):
    # coeffs low to high
    terms = [fmt_coeff_term(c, k) for k, c in reversed(list(enumerate(coeffs))) if c != 0]
    s = "+".join(terms).replace("+-", "-")
    return s or "0"


def basis_text(T):
    zk, dk = round_two(T)
    mat = zk.matrix.to_Matrix()  # columns are coordinates in the power basis
    den = zk.denom
    out = []
    for j in range(mat.shape[1]):
        col = [Fraction(int(mat[i, j]), int(den)) for i in range(mat.shape[0])]
        out.append(fmt_poly(col))
    return ", ".join(out), int(dk)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=250)
    ap.add_argument("--bound", type=int, default=30)
    ap.add_argument("--out", required=True)
    args = ap.parse_args()

    by_disc = {}
    r = range(-args.bound, args.bound + 1)
    triples = sorted(itertools.product((0, -1, 1), r, r), key=lambda t: (sum(map(abs, t)), t))
    for a, b, c in triples:
        f = Poly(x**3 + a * x**2 + b * x + c, x, domain=ZZ)
        if discriminant(f) <= 0 or not f.is_irreducible:
            continue
        text, dk = basis_text(f)
        # first (smallest) polynomial wins for each discriminant
        by_disc.setdefault(dk, ((a, b, c), text))

    discs = sorted(by_disc)[: args.count]
    with open(args.out, "w") as fh:
        fh.write("# totally real cubic fields: poly | integral basis | field discriminant\n")
        for dk in discs:
            (a, b, c), text = by_disc[dk]
            fh.write(f"{fmt_poly([c, b, a, 1])} | {text} | {dk}\n")


if __name__ == "__main__":
    main()

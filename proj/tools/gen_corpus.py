#!/usr/bin/env python3
"""Regenerate data/corpus/*.knot from the database_knotinfo package.

KnotInfo's PD tuples already run counterclockwise from the incoming
under-strand, so they are copied unchanged. Reference Jones polynomials are
written as "exponent:coefficient" pairs with exponents in units of t^(1/2);
Q is the Kauffman polynomial at a = 1, as "power-of-z:coefficient" pairs.
"""
import ast
import pathlib
import sys

import sympy
from database_knotinfo import link_list

OUT = pathlib.Path(__file__).resolve().parent.parent / "data" / "corpus"
EXTRA = ["12a_628", "12a_665", "12a_828", "12a_1044"]
t, a, z, s = sympy.symbols("t a z s")


def terms(expr, var):
    poly = sympy.expand(expr)
    lo = min(sympy.Poly(poly * var**200, var).monoms())[0] - 200
    p = sympy.Poly(sympy.expand(poly * var ** (-lo)), var)
    return " ".join("%d:%d" % (e + lo, c) for (e,), c in sorted(p.terms()))


def parse(text):
    return sympy.sympify(text.replace("^", "**"), locals={"t": t, "a": a, "z": z})


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for k in link_list()[1:]:
        name = k["name"]
        n = int(k["crossing_number"])
        if not (n <= 9 or name in EXTRA):
            continue
        lines = ["name " + name]
        pd = ast.literal_eval(k["pd_notation"]) if k["pd_notation"] else []
        lines.append("pd " + " ".join("X(%d,%d,%d,%d)" % tuple(x) for x in pd))
        if k["braid_notation"]:
            braid = ast.literal_eval(k["braid_notation"].replace("{", "[").replace("}", "]"))
            if isinstance(braid, int):
                braid = [braid]
            lines.append("braid " + " ".join(str(x) for x in braid))
        if k["seifert_matrix"]:
            sm = ast.literal_eval(k["seifert_matrix"])
            lines.append("seifert %d" % len(sm))
            lines.extend(" ".join(str(x) for x in row) for row in sm)
        if k["jones_polynomial"]:
            lines.append("jones " + terms(parse(k["jones_polynomial"]).subs(t, s**2), s))
        if k["kauffman_polynomial"]:
            lines.append("q " + terms(parse(k["kauffman_polynomial"]).subs(a, 1), z))
        # The table lists 0 for the unknot; its determinant is 1.
        lines.append("det " + ("1" if name == "0_1" else k["determinant"]))
        lines.append("signature " + k["signature"])
        u = k["unknotting_number"]
        if u and u.isdigit():
            lines.append("unknotting " + u)
        (OUT / (name + ".knot")).write_text("\n".join(lines) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())

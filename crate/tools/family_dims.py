#!/usr/bin/env python3
"""Fill the "dims" grid of each fixture by counting generator-family elements.

Each family contributes one element per multiplier monomial; its polynomial
degree is the family's base degree plus the multiplier degree. Only counting
happens here, no algebra, so the grid is independent of the engine.

usage: tools/family_dims.py crates/core/fixtures/*.json
"""
import json
import sys
from math import comb


def multiplier_degrees(mult, limit):
    """Yield (degree, count) of multipliers of degree at most limit."""
    if mult is None:
        yield 0, 1
    elif "powers" in mult:
        k = mult["base_degree"]
        n = 0
        while n * k <= limit:
            yield n * k, 1
            n += 1
            if k == 0:
                break
    else:
        nvars = len(mult["monomials"])
        for m in range(mult["from"], limit + 1):
            yield m, comb(m + nvars - 1, nvars - 1)


def dims(fixture):
    dmax = fixture["dmax"]
    grid = [[0] * (dmax + 1) for _ in range(4)]
    for fam in fixture["families"]:
        # base degrees can be negative (a bracket lowers the degree)
        limit = dmax - min(fam["degree"], 0)
        for m, count in multiplier_degrees(fam.get("multiplier"), limit):
            d = fam["degree"] + m
            if 0 <= d <= dmax:
                grid[fam["q"]][d] += count
    return grid


def main(paths):
    for path in paths:
        with open(path) as f:
            fixture = json.load(f)
        fixture["dims"] = dims(fixture)
        with open(path, "w") as f:
            json.dump(fixture, f, indent=2)
            f.write("\n")
        print(fixture["id"], fixture["dims"])


if __name__ == "__main__":
    main(sys.argv[1:])

#!/usr/bin/env python3
"""Regenerates swilk_golden.hpp.

Samples are drawn from seeded numpy generators and frozen as hexfloats so the
C++ tests see bit-identical data; the reference (W, p) pairs come from
scipy.stats.shapiro. Run from this directory:

    python3 gen_swilk_golden.py > swilk_golden.hpp
"""
import numpy as np
from scipy import stats

CASES = [
    ("normal_10a", 101, "normal", 10),
    ("normal_10b", 102, "normal", 10),
    ("normal_20", 103, "normal", 20),
    ("normal_50", 104, "normal", 50),
    ("uniform_50", 105, "uniform", 50),
    ("exponential_50", 106, "exponential", 50),
    ("normal_500", 107, "normal", 500),
    ("uniform_500", 108, "uniform", 500),
    ("normal_3931", 109, "normal", 3931),
    ("uniform_3931", 110, "uniform", 3931),
]


def draw(kind, seed, n):
    rng = np.random.default_rng(seed)
    if kind == "normal":
        return rng.standard_normal(n)
    if kind == "uniform":
        return rng.uniform(0.0, 1.0, n)
    return rng.exponential(1.0, n)


def main():
    print("// Generated by gen_swilk_golden.py (scipy %s). Do not edit by hand." % __import__("scipy").__version__)
    print("#pragma once")
    print("#include <vector>")
    print()
    print("struct SwilkGoldenCase {")
    print("  const char* name;")
    print("  std::vector<double> sample;")
    print("  double w;")
    print("  double p;")
    print("};")
    print()
    print("inline const std::vector<SwilkGoldenCase>& swilk_golden_cases() {")
    print("  static const std::vector<SwilkGoldenCase> cases = {")
    for name, seed, kind, n in CASES:
        x = draw(kind, seed, n)
        w, p = stats.shapiro(x)
        vals = ", ".join(float(v).hex() for v in x)
        print('      {"%s",' % name)
        print("       {%s}," % vals)
        print("       %r, %r}," % (float(w), float(p)))
    print("  };")
    print("  return cases;")
    print("}")


if __name__ == "__main__":
    main()

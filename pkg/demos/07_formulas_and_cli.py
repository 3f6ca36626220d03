"""
Formulas, interpretation, and the command line
==============================================

Formulas are plain syntax trees: atoms, duals, the multiplicative and
additive connectives, and the exponentials. An environment binds atoms
to objects, and the interpreter folds a formula into one object. The
same machinery backs the `conelogic` command; the last section drives
it in-process.
"""

from conelogic import (
    dual_formula,
    dual_object,
    env_from_json,
    format_formula,
    interpret,
    normalize_dual,
    parse_formula,
)
from conelogic.cli import main as cli_main

# Parse, print, and push duals to the leaves.
f = parse_formula("(a * b -o c)^")
print("parsed:", format_formula(f))
print("normalized:", format_formula(normalize_dual(f)))

g = parse_formula("!(a & b)")
print("dual of", format_formula(g), "is", format_formula(normalize_dual(dual_formula(g))))

# An environment with two atom kinds: an explicit simplex and a
# polyhedral ball given by generators.
env = env_from_json(
    {
        "schema": 1,
        "atoms": {
            "a": {"kind": "pcs", "dim": 2, "ball_gens": [["1", "0"], ["0", "1"]]},
            "b": {"kind": "polyhedral", "dim": 2, "p_gens": [["1", "1/2"]]},
            "c": {"kind": "pcs", "dim": 2, "ball_gens": [["1", "0"], ["0", "1"]]},
        },
    }
)

h = interpret(g, env, trunc=2)
print("\ninterpret !(a & b): dim", h.dim, "label", h.label)

# Interpretation commutes with dualization.
lhs = interpret(normalize_dual(dual_formula(g)), env, trunc=2)
print("interpret(dual formula) == dual(interpret):", lhs == dual_object(h))

# The CLI speaks canonical JSON; reports are byte-stable across runs.
print("\n$ conelogic parse --formula 'a * b -o c'")
cli_main(["parse", "--formula", "a * b -o c"])

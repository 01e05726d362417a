"""Smoke test for the wcnest Python module."""

import wcnest

choice = wcnest.WeightProgram("0 <= {a, b} <= 1.")
assert choice.answer_sets() == [[], ["a"], ["b"]]

weighted = wcnest.WeightProgram("1 <= {a=2} <= 2 :- 1 <= {not a=3, not b=2} <= 4.")
assert weighted.answer_sets() == [[], ["a"]]

assert str(choice.translate("basic", simplify=True)) == "(a; not a), (b; not b), not (a, b).\n"
nn = choice.translate("nn")
assert len(nn) == 12 and len(nn.aux_atoms) == 8
assert nn.answer_sets() != choice.answer_sets()

middle = wcnest.NestedProgram("a ; not a.")
double = wcnest.NestedProgram("a :- not not a.")
assert middle.answer_sets() == [[], ["a"]]
assert middle.strongly_equivalent(double)

assert wcnest.WeightProgram("1 <= {p, q} <= 1. p.").strongly_equivalent(wcnest.WeightProgram(":- q. p."))

dimacs = choice.completion_dimacs()
assert "p cnf 14 30" in dimacs
models, answer_sets = choice.verify_completion()
assert models == answer_sets

try:
    wcnest.NestedProgram("a :- b. b :- a.")
    wcnest.WeightProgram("p :- p.").completion_dimacs()
    raise AssertionError("non-tight program accepted")
except wcnest.NotTightError:
    pass

try:
    wcnest.WeightProgram("1 <= {a=-1}.")
    raise AssertionError("negative weight accepted")
except ValueError:
    pass

assert "theorem-1" in wcnest.checks()
passed, failed, skipped, first = wcnest.verify("theorem-1", cases=50, seed=0)
assert (passed, failed, skipped, first) == (50, 0, 0, None)

print("python smoke test passed")

"""Factor languages and their statistics.

The factor sets are exact (closure of a monotone map, no window-length
assumptions), and everything downstream is labeled: exact, certified, or
heuristic.
"""

from subrec import (
    aperiodicity_check,
    complexity,
    factor_language,
    power_free_index,
    recurrence_constant_empirical,
    return_words,
)
from subrec import zoo

for name, m in [("fibonacci", zoo.FIBONACCI), ("thue-morse", zoo.THUE_MORSE), ("tribonacci", zoo.TRIBONACCI)]:
    profile = [complexity(m, n) for n in range(1, 13)]
    print(f"{name:11} p(1..12) = {profile}")

print("\nlength-3 factors of the Thue-Morse language:")
tm = zoo.THUE_MORSE
print("  ", sorted(tm.decode(w) for w in factor_language(tm, 3).words))

print("\nreturn words (heuristic completeness label is part of the result):")
for text in ("a", "ab"):
    rws = return_words(zoo.FIBONACCI, zoo.FIBONACCI.encode(text))
    words = sorted(zoo.FIBONACCI.decode(r) for r in rws.returns)
    print(f"  fibonacci, {text!r}: {words}  [{rws.completeness}, window {rws.window_scanned}]")

print("\npower-free indices (exhaustive scan of a 10^4 window):")
for name, m in [("thue-morse", zoo.THUE_MORSE), ("fibonacci", zoo.FIBONACCI), ("periodic", zoo.PERIODIC)]:
    result = power_free_index(m)
    shown = result.k if result.kind == "bounded" else result.kind
    print(f"  {name:11} -> {shown}")

print("\naperiodicity screening (Morse-Hedlund):")
for name, m in [("fibonacci", zoo.FIBONACCI), ("periodic", zoo.PERIODIC)]:
    verdict = aperiodicity_check(m, 50)
    print(f"  {name:11} -> {verdict.kind}" + (f", period {verdict.period}" if verdict.periodic else ""))

estimate = recurrence_constant_empirical(zoo.FIBONACCI, 6)
print(
    f"\nempirical recurrence ratio for fibonacci (lengths <= 6): {estimate.ratio}"
    f" at u = {zoo.FIBONACCI.decode(estimate.witness)!r}"
)

"""The core/quotient decomposition: a partition splits into a p-core plus
p quotient partitions, losslessly, for any modulus p >= 2. Iterating the
split labels a p-ary tree and explains prime valuations of hook products.

Run as: python demos/02_cores_quotients_towers.py
"""

import json

from hookratio import (
    Partition,
    cells_with_exact_valuation,
    compose,
    core_tower,
    decompose,
    hook_multiset,
    is_p_core,
    p_core,
    parse_partition,
    quotient_tower,
    valuation_hook_product,
)

lam = parse_partition("18,7,6")
dec = decompose(lam, 3)
print(f"decomposing {lam} at p = 3:")
print(f"  core      = {dec.core}")
for j, q in enumerate(dec.quotients):
    print(f"  quotient {j} = {q or '()'} (charge {dec.charges[j]:+d})")
print(f"  size law: {lam.size} = {dec.core.size} + 3 * {dec.total_quotient_size()}")
print()

# The inverse map rebuilds the partition from its parts list. An empty
# core with eleven copies of the 6x5 rectangle gives a famous square-ish
# partition used to break a hook ratio.
rebuilt = compose(dec.core, dec.quotients, 3)
print("compose inverts decompose:", rebuilt == lam)
big = compose(Partition(), [parse_partition("6^5")] * 11, 11)
print("empty core + 11 copies of (6,6,6,6,6) at p=11:", big)
print()

# p-cores can also be reached by repeatedly tearing off hooks of length p;
# the endpoint never depends on the removal order.
print("3-core of (5,2):", p_core(Partition((5, 2)), 3))
print("(6,4,2) is already a 3-core:", is_p_core(Partition((6, 4, 2)), 3))
print()

# Iterating the decomposition gives towers: finitely many nonzero labels
# on the p-ary tree, serialized by word.
print("quotient tower of (18,7,6) at 3:")
print(json.dumps(quotient_tower(lam, 3).to_json_dict(), indent=2))
print("core tower of (18,7,6) at 3:")
print(json.dumps(core_tower(lam, 3).to_json_dict(), indent=2))
print()

# For a prime p, the exponent of p in the product of all hooks is the sum
# of the hook counts at p, p^2, p^3, ...
lam6 = Partition((6,))
print("hook product of (6):", sorted(hook_multiset(lam6).elements()), "-> 6! = 720")
print("exponent of 2 in 720:", valuation_hook_product(lam6, 2))
print("cells with hook exactly divisible by 2^2:", cells_with_exact_valuation(lam6, 2, 2))

# Composite moduli break the valuation reading: 720 is divisible by 6^2,
# yet only one hook of (6) is divisible by 6. The extra 6 is assembled
# from a 2 and a 3 living in different hooks.
print("cells with hook divisible by 6 exactly once:",
      cells_with_exact_valuation(lam6, 6, 1))
try:
    valuation_hook_product(lam6, 6)
except ValueError as exc:
    print("valuation at 6 rejected:", exc)

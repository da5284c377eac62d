"""Walk through the basic objects: partitions, hook lengths, and the 01
boundary sequence that encodes a diagram as an infinite binary word.

Run as: python demos/01_hooks_and_boundaries.py
"""

from hookratio import (
    Partition,
    dimension,
    from_boundary,
    hook_multiset,
    parse_partition,
    render_hook_diagram,
    restricted_hooks,
    to_boundary,
)

# Partitions parse from compact literals; exponent notation covers
# repeated parts.
lam = parse_partition("18,7,6")
big = parse_partition("66^55")
print(f"lam = {lam} with {lam.size} cells; big has {big.size} cells")
print()

# Every cell of the Young diagram carries a hook length: the cells to its
# right, the cells below it, and the cell itself.
print("hook lengths of (5,2):")
print(render_hook_diagram(Partition((5, 2))))
print()
print("hook lengths of (18,7,6):")
print(render_hook_diagram(lam))
print()

# The multiset of hooks drives everything else in this library.
print("hook multiset of (5,2):", dict(sorted(hook_multiset(Partition((5, 2))).items())))

# Restricting to hooks divisible by r, then dividing by r, gives the
# restricted multiset. For a one row partition this recovers 1..n/r, which
# is why hook products generalize factorials.
print("hooks of (12) divisible by 3, divided by 3:",
      sorted(restricted_hooks(Partition((12,)), 3).elements()))
print()

# The boundary sequence walks the diagram outline: 0 is an up step, 1 is a
# right step. The bar sits where zeros to the right balance ones to the
# left.
b = to_boundary(lam)
print("boundary of (18,7,6):", b.render())
print("zeros at nonnegative indices:", [i for i in b.zero_positions() if i >= 0])
print("round trip recovers the partition:", from_boundary(b) == lam)

# Shifting the window does not change the shape, only the alignment.
shifted = b.shifted(2)
print("shifted copy decodes identically:", from_boundary(shifted) == lam)
print()

# The hook length formula counts standard Young tableaux exactly.
for parts in [(2, 1), (2, 2), (4, 3, 1)]:
    print(f"standard tableaux of {parts}: {dimension(Partition(parts))}")

"""A face where the interval criterion and the smoothness test part ways.

The lattice is the interval [(1,3,4), (2,5,6)] inside I(3,6).  The face
attached to the single element (1,5,6) meets every interval spanned by an
incomparable pair of irreducibles, yet its generators are linearly dependent.
"""
from hibitoric.grassmann import counterexample_lattice
from hibitoric.smoothness import gl_criterion, gl_pairs, is_smooth_face

L = counterexample_lattice()
print(f"{len(L)} elements, J = {sorted(L.J)}")
print("J-maximal elements:", [z for z in L.J if not any(z != w and L.leq(z, w) for w in L.J)])

print("\nincomparable irreducible pairs (t, d):")
for t, d, _ in gl_pairs(L):
    print(f"  {t} {d}  meet={L.meet(t, d)} join={L.join(t, d)}")

D = [(1, 5, 6)]
v = is_smooth_face(L, D)
print(f"\nface D={D}")
for g in v.generators:
    print("  ", g.label())
print(f"rank {v.rank} from {len(v.generators)} generators -> {v.status.value}")
print("dependency:", v.evidence())
print("interval criterion predicts smooth:", gl_criterion(L, D))

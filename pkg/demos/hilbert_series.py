"""Hilbert functions three ways, plus a square-free ideal typed in by hand."""
from hibitoric.grassmann import idn
from hibitoric.hilbert import SqFreeIdeal, lattice_hilbert_crosscheck, sqfree_hilbert

L = idn(2, 5)
rep = lattice_hilbert_crosscheck(L, m_max=4)
H = rep.hilbert
print(f"I(2,5): f-vector {H.f_vector}, Krull dim {H.krull_dim}, degree {H.degree}")
print("h-numerator:", H.numerator)
print(" m  multichains  stanley-reisner  semigroup")
for r in rep.rows:
    print(f"{r.m:2d}  {r.multichains:11d}  {r.stanley_reisner:15d}  {r.semigroup:9d}")
print("all three counts agree:", rep.ok)

# x0*x1 and x1*x2*x3 in four variables
I = SqFreeIdeal(4, [[0, 1], [1, 2, 3]])
Hi = sqfree_hilbert(I)
print("\nideal generators:", I.generators)
print("first values:", [Hi.phi(m) for m in range(6)])

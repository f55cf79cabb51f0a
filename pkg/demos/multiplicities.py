"""Multiplicities at torus-fixed points: chains, Catalan numbers and hooks."""
from hibitoric.grassmann import idn
from hibitoric.multiplicity import JBlock, JBlockUnion, Window, catalan, face_mult, fixed_point_mult, hook_mult

print(" n  chains  catalan")
for n in range(4, 11):
    print(f"{n:2d}  {fixed_point_mult(idn(2, n)):6d}  {catalan(n - 2):7d}")

# Beyond d=2 the count is a rectangular standard-tableau number
for d, n in [(3, 6), (3, 7), (4, 8)]:
    print(f"I({d},{n}): hook formula {hook_mult(d, n)}, chain count {fixed_point_mult(idn(d, n))}")

print("\nwindow face:", face_mult(Window(2, 5, 2, 1)))
print("J-block n=7 i=1 k=2:", face_mult(JBlock(7, 1, 2)), "=", catalan(4))
u = JBlockUnion(9, ((1, 1), (4, 2)))
print("two separated blocks:", face_mult(u), "=", catalan(3), "*", catalan(4))

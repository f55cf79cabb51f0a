"""Walk through the singular locus of the Hibi variety attached to I(2,5).

Run with ``python demos/singular_locus.py``.
"""
from hibitoric.cone import face_generators, face_geometry
from hibitoric.grassmann import idn, singular_window, window_indices
from hibitoric.smoothness import gl_criterion, is_smooth_face, singular_locus_idn

d, n = 2, 5
L = idn(d, n)
print(f"I({d},{n}) has {len(L)} elements and {len(L.J)} join-irreducibles")

# Each window is a sublattice whose cone face is spanned by a diamond of
# four generators in a 3-dimensional space.
for i, j in window_indices(d, n):
    w = singular_window(d, n, i, j)
    W = face_generators(L, w.Lij)
    g = face_geometry(L, w.Lij)
    v = is_smooth_face(L, w.Lij)
    print(f"\nwindow ({i},{j}): mu={w.mu} lambda={w.lam}")
    for gen in W:
        print("   ", gen.label())
    print(f"    face_dim={g.face_dim} orbit_dim={g.orbit_dim} verdict={v.status.value}")
    print(f"    interval criterion predicts smooth: {gl_criterion(L, w.Lij)}")

# The exhaustive scan checks every face against the window description
rep = singular_locus_idn(d, n, exhaustive=True)
ex = rep.exhaustive
print(f"\n{ex.faces} faces, {ex.singular} singular, {ex.disagreements} disagreements")
print("maximal singular faces are exactly the windows:", ex.maximal_are_windows)

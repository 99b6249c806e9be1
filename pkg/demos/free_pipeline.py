"""The same pipeline in the free algebra, where T must be forced to commute.

Completion in a free algebra need not terminate, so every call carries a
degree bound.  Run with ``python demos/free_pipeline.py``.
"""

from homoggb import free_algebra, gb_via_nc_homogenization, is_nc_groebner, nc_complete
from homoggb.pipeline import same_lm_ideal

D = 8
F = free_algebra(("X", "Y"))
S = [F("Y*Y*Y - X*Y - X - Y"), F("Y^2 - X + 3")]
print("generators:", [str(f) for f in S])

P = gb_via_nc_homogenization(S, D)
print("\nhomogenized set (T powers on the left, plus the X_i*T - T*X_i commutators):")
for f in P.homogenized:
    print("   ", f)

print(f"\nstep 1 truncated at degree {D}: {len(P.step1.elements)} elements, complete = {P.step1.complete}")
print("step 2, basis of the original ideal:", P.gb_of_I.strings())
print("homogenized basis with commutators:", P.gb_of_I_tilde.strings())

direct = nc_complete(S, D, reduced=True)
print("\ndirect completion:", direct.strings())
print("same leading-word ideal up to degree", D, ":", same_lm_ideal(P.gb_of_I, direct, D) is None)
for name, G in (("step1", P.step1), ("step2", P.step2), ("I~", P.gb_of_I_tilde)):
    print(f"{name} passes the obstruction check at degree {D}: {bool(is_nc_groebner(G, D))}")

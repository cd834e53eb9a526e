# %% [markdown]
# # Kähler-Einstein comparison on projective spaces
#
# On CP^m with the Kähler-Einstein metric of scalar curvature 4m(m+1), take L
# to be a power q of the primitive root of the anticanonical bundle, with
# p + q even where p = m + 1.  The lower bound for the squared Dirac
# eigenvalues is (1 - |q|/p) m(m+1), and harmonic spinors appear only at the
# ends of the range.

# %%
from fractions import Fraction

from flagspec import LineBundleClass, PiScalar, build_flag, dirac_lower_bound, ke_class
from flagspec import harmonic_spinors

for m in range(1, 5):
    X = build_flag(("A", m), [1])
    p = m + 1
    omega = ke_class(X, PiScalar(4 * m * (m + 1)))
    print(f"CP^{m}")
    for q in range(-p, p + 1):
        if (p + q) % 2:
            continue
        L = LineBundleClass([q])
        bound = dirac_lower_bound(X, L, omega).value
        expected = (1 - Fraction(abs(q), p)) * m * (m + 1)
        h = harmonic_spinors(X, L)
        print(f"  q={q:+d}  bound={bound}  formula={expected}  "
              f"harmonic={h.has_harmonic_spinors}  index={h.index}")

# %% [markdown]
# The same table for any flag variety is one command away:
#
#     flagspec scan G 2 --nodes 1,2 --q-range=-2:2

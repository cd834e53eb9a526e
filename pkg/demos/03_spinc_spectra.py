# %% [markdown]
# # Spin^c structures and the Weitzenböck remainder
#
# A line bundle L defines a Spin^c structure when its painted coordinates
# agree with those of delta_P mod 2.  The remainder D^2 - Laplacian then acts
# on 2^m eigenlines, and its spectrum is computed by merging equal partial
# sums.

# %%
from fractions import Fraction

from flagspec import (
    KahlerClass,
    LineBundleClass,
    build_flag,
    dirac_lower_bound,
    harmonic_spinors,
    is_spinc,
    theta_spectrum,
    weitzenboeck_spectrum,
)

cp2 = build_flag("A2", [1])
print([is_spinc(cp2, LineBundleClass([k])) for k in range(-2, 3)])

# %%
spec = weitzenboeck_spectrum(cp2, LineBundleClass([1]), KahlerClass([1]))
for value, mult in spec:
    print(spec.eigenvalue(value), mult)

# %% [markdown]
# An invariant (1,1)-form acts with purely imaginary eigenvalues.  Taking it
# equal to the Kähler form gives binomial multiplicities.

# %%
X = build_flag("C3", [1, 3])
spec = theta_spectrum(X, KahlerClass([2, 5]), KahlerClass([2, 5]))
print({str(v): k for v, k in spec})

# %% [markdown]
# ## Large examples
#
# The E8 full flag has 2^120 eigenlines.  With repeated pairings the merged
# spectrum stays small, and multiplicities are exact integers.

# %%
e8 = build_flag("E8", range(1, 9))
L = LineBundleClass(e8.restrict(e8.delta_p))
spec = weitzenboeck_spectrum(e8, L, KahlerClass([1] * 8))
print(len(spec), spec.total == 2 ** 120, spec.min_eigenvalue, spec.max_eigenvalue)

# %% [markdown]
# Incommensurable classes can make every sign vector distinct.  Past the cap
# only the extremes and the total are reported.

# %%
X = build_flag("A4", [1, 2, 3, 4])
omega = KahlerClass([Fraction(1, p) for p in (2, 3, 5, 7)])
spec = weitzenboeck_spectrum(X, LineBundleClass([2, 0, 2, 0]), omega, max_distinct=50)
print(spec.truncated, spec.min_eigenvalue, spec.max_eigenvalue, spec.total)

# %% [markdown]
# ## Bounds and harmonic spinors

# %%
for k in (-3, -1, 1, 3):
    L = LineBundleClass([k])
    b = dirac_lower_bound(cp2, L, KahlerClass([1]))
    h = harmonic_spinors(cp2, L)
    print(k, b.value, h.has_harmonic_spinors, h.index)

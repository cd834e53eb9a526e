# %% [markdown]
# # Flag varieties G/P
#
# A flag variety is picked by a Lie type and its painted nodes.  Line bundles
# and Kähler classes live on the painted nodes only.

# %%
from fractions import Fraction

from flagspec import (
    KahlerClass,
    PiScalar,
    build_flag,
    fano_index,
    ke_class,
    scalar_curvature,
)

for name, nodes in [("A2", [1]), ("A2", [1, 2]), ("B3", [1]), ("E6", [1]), ("G2", [1, 2])]:
    X = build_flag(name, nodes)
    print(f"{X}: m={X.dim_c} delta_P={[int(c) for c in X.restrict(X.delta_p)]} Fano index={fano_index(X)}")

# %% [markdown]
# ## Scalar curvature
#
# For a plain rational class the curvature carries a factor of pi; giving the
# class in pi units removes it.  Scaling the class by c divides the curvature
# by c.

# %%
cp2 = build_flag("A2", [1])
print(scalar_curvature(cp2, KahlerClass([1])))
print(scalar_curvature(cp2, KahlerClass([1], pi_units=True)))
print(scalar_curvature(cp2, KahlerClass([Fraction(1, 3)], pi_units=True)))

# %% [markdown]
# ## Kähler-Einstein classes
#
# Invariant Kähler-Einstein classes are the positive multiples of delta_P.
# Asking for a target scalar curvature picks the multiple.

# %%
omega = ke_class(cp2, PiScalar(24))
print([str(c) for c in omega.coeffs], omega.pi_units, scalar_curvature(cp2, omega))
rho0 = ke_class(build_flag("E8", range(1, 9)))
print([str(c) for c in rho0.coeffs], scalar_curvature(build_flag("E8", range(1, 9)), rho0))

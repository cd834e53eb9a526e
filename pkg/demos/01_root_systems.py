# %% [markdown]
# # Root systems and Weyl groups
#
# Everything is exact: weights are vectors of fractions in the basis of
# fundamental weights, and the Cartan matrix has entries <alpha_j, alpha_i^vee>.

# %%
from flagspec import Weight, build_root_system, coroot_pairing, weyl_dimension, weyl_vector
from flagspec.weyl import bwb_classify, to_dominant

g2 = build_root_system("G2")
for row in g2.cartan:
    print(row)

# %% [markdown]
# Positive roots are written in simple-root coordinates.  G2 has six of them,
# E8 has 120.

# %%
print(g2.positive_roots)
print(len(build_root_system("E8").positive_roots))

# %% [markdown]
# Coroot pairings are the numbers behind every later formula.  The Weyl
# vector pairs to 1 with every simple coroot, and to the height of the coroot
# in general.

# %%
rho = weyl_vector(g2)
for beta in g2.positive_roots:
    print(beta, coroot_pairing(g2, rho, beta))

# %% [markdown]
# ## Dimensions of irreducible representations
#
# The seven-dimensional and adjoint representations of G2, the 248 of E8 and
# the 56 of E7.

# %%
print(weyl_dimension(g2, Weight([1, 0])), weyl_dimension(g2, Weight([0, 1])))
print(weyl_dimension(build_root_system("E8"), Weight.fundamental(8, 8)))
print(weyl_dimension(build_root_system("E7"), Weight.fundamental(7, 7)))

# %% [markdown]
# ## Dot action and Borel-Weil-Bott
#
# A weight either lies on a wall after shifting by rho (all cohomology
# vanishes) or is moved into the dominant chamber by a unique Weyl element.
# The length of that element is the only degree with cohomology.

# %%
b3 = build_root_system("B3")
lam = Weight([-5, 1, 2])
print(to_dominant(b3, lam + weyl_vector(b3)))
report = bwb_classify(b3, lam)
print(report.degree, report.dominant_weight, report.dimension, report.euler_characteristic)
print(bwb_classify(b3, Weight([-1, 0, 0])).vanishes)

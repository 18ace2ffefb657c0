"""Where can orbits converge to the origin?

A germ tangent to the identity, F = Id + P_k + ..., can only attract
orbits along characteristic directions: lines [v] with P_k(v) parallel
to v.  Blowing up the origin turns the question into root finding for
r(u) = q_k(1,u) - u p_k(1,u), and the vanishing orders (m, n) of p_k(1,u)
and r at a root sort each direction into one of three classes.
"""
from parabolic import characteristic_directions
from parabolic.catalog import apparent, cube_roots, degenerate_fuchsian, diagonal_quadratic, \
    irregular


def show(title, F):
    rep = characteristic_directions(F)
    print(f"\n{title}   k = {rep.k}, total multiplicity {rep.total_multiplicity}")
    for d in rep.directions:
        print(f"  {d.label:<22} mult {d.multiplicity}  (m, n) = ({d.m}, {d.n})  "
              f"{d.kind:<9} {'degenerate' if d.degenerate else f'lambda = {d.lam:.3g}'}")


show("(z - z^2, w - w^2)", diagonal_quadratic())
# three simple directions; together they account for k + 1 = 3

show("(z + w^2, w + (z + w^2)^2)", cube_roots())
# r(u) = u^3 - 1: the directions sit at the cube roots of unity

show("(z + z^2, w + zw + w^2)", irregular())
# [1:0] is a double root of r while p_k does not vanish there: 1 + m < n, irregular

show("(z + zw, w + (4/3) w^2)", degenerate_fuchsian())
# p_k vanishes at [1:0] (degenerate) and 1 + m = n: a degenerate Fuchsian direction

show("(z + zw, w + 2zw)", apparent())
# 1 + m > n: an apparent singularity, about which the criteria say nothing

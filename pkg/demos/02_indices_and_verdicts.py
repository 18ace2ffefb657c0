"""From indices to a verdict.

At a nondegenerate direction the Hakim index decides: Re i_H > 0 gives a
basin.  At degenerate Fuchsian directions the residual index Ind (a
residue of p_k/r) is tested against the regions R and S.  The verdict names
the criterion that settled each direction.
"""
from parabolic import characteristic_directions, index_report, verdict
from parabolic.catalog import NAMED
from parabolic.criteria import RegionR

for name in ("diagonal_quadratic", "irregular", "degenerate_fuchsian", "apparent", "dicritical"):
    F = NAMED[name]()
    rep = characteristic_directions(F)
    print(f"\n{name}")
    if rep.dicritical:
        v = verdict(F, (1, 0))
        print(f"  every direction is characteristic -> {v.conclusion} ({v.justification})")
        continue
    total = 0
    for d in rep.directions:
        idx = index_report(F, d)
        v = verdict(F, d)
        total += idx.abate
        hakim = "-" if idx.hakim is None else f"{idx.hakim.real:+.3g}"
        print(f"  {d.label:<8} i_H {hakim:>6}   Ind {idx.abate.real:+.4g}   "
              f"-> {v.conclusion} ({v.justification})")
    # the indices along the exceptional divisor always add up to -1
    print(f"  sum of Ind = {total.real:+.6f}")

# The degenerate Fuchsian direction has Ind = 3.  For m = 1, k = 2 the
# region R is Re z > -1 minus the closed disc of radius 3/2 about 1/2.
R = RegionR(1, 2)
print(f"\nR(m=1, k=2): bound {R.half_plane_bound}, disc centre {R.circle_center}, "
      f"radius {R.circle_radius}; 3 is {R.status(3)}, 0.5 is {R.status(0.5)}")

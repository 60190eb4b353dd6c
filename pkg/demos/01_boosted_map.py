"""
The boosted azimuth map and its Jacobian
========================================

A detector moving along x sees azimuths contracted toward the transverse
directions.  This script tabulates the continuous monotone branch of the
map at a few Lorentz factors and checks that the Jacobian averages to one
around the circle.
"""

import numpy as np

from relboost import boost_angle, boost_jacobian, integrate_periodic

phis = np.linspace(0.0, 2.0 * np.pi, 9, endpoint=False)

for gamma in (1.0, 5.0, 100.0):
    print(f"gamma = {gamma:g}")
    print("  phi      phi'     jacobian")
    for phi in phis:
        print(
            f"  {phi:7.4f}  {boost_angle(phi, gamma):7.4f}"
            f"  {boost_jacobian(phi, gamma):9.5f}"
        )
    mean = integrate_periodic(lambda p: boost_jacobian(p, gamma) + 0j, gamma)
    print(f"  circle average of the jacobian: {mean.real:.12f}")
    print()

# the map compresses the first and third quadrants toward pi/2 and 3pi/2;
# larger gamma means a sharper transition and a taller jacobian spike there
print("jacobian peak value at phi = pi/2 equals gamma:")
for gamma in (5.0, 20.0, 100.0):
    print(f"  gamma {gamma:6g}: {boost_jacobian(np.pi / 2, gamma):g}")

"""Rotation minimizing vs Frenet frames on a curve that nearly straightens.

The curve (t, t^3, 0.01 t^2) passes close to an inflection near t = 0.
The Frenet normal flips through it and the frame spins; the rotation
minimizing frame glides through unchanged.  The script prints the
transport residuals of both frames and their accumulated twist.
"""

from pathlib import Path

import numpy as np

from rmcalc import (frenet_frame, profile_twist, reparametrize_arclength,
                    rm_frame)

OUT = Path(__file__).resolve().parent / "output"
OUT.mkdir(exist_ok=True)


def main():
    t = np.linspace(-1.0, 1.0, 4001)
    points = np.column_stack([t, t ** 3, 0.01 * t ** 2])
    curve = reparametrize_arclength(points, 1e-3)
    print(f"curve resampled to {len(curve.s)} nodes, "
          f"arc length {curve.s[-1]:.3f}")

    rm = rm_frame(curve, v0=np.array([0.0, 0.0, 1.0]))
    print("rotation minimizing frame:")
    print(f"  max |V . P'|   = {rm.diagnostics['max_tangent_dot']:.2e}")
    print(f"  max ||V| - 1|  = {rm.diagnostics['max_norm_defect']:.2e}")

    fs = frenet_frame(curve)
    print("Frenet frame: assembled (curvature stays just above zero)")
    print(f"  min curvature along the way = {fs.kappa.min():.4f}")

    rm_twist = profile_twist(rm.sigma)
    fs_twist = profile_twist(fs.sigma)
    print("accumulated in-plane twist of the normal pair:")
    print(f"  rotation minimizing: {rm_twist['total']:.6f} rad")
    print(f"  Frenet:              {fs_twist['total']:.6f} rad")
    print(f"  ratio: {fs_twist['total'] / max(rm_twist['total'], 1e-30):.0f}x")
    print("the Frenet pair pays roughly pi at the near-inflection; the")
    print("rotation minimizing pair carries none of it.")


if __name__ == "__main__":
    main()

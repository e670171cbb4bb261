"""Deformation profiles and the amplitude-dependent frequency.

A profile f(n) multiplies the harmonic ladder; f == 1 recovers the usual
oscillator.  This script tabulates the built-in profiles and shows how the
oscillation frequency picks up an energy dependence.
"""

import numpy as np

from foscillator import (
    eval_f,
    f_factorial,
    frequency,
    identity,
    kerr,
    q_oscillator,
)

np.set_printoptions(precision=6, suppress=True)

# --- 1. the three built-in profiles on the first few levels
n = np.arange(8, dtype=float)
print("n              :", n)
print("identity  f(n) :", eval_f(identity(), n))
print("q (lam=0.5)    :", eval_f(q_oscillator(0.5), n))
print("kerr (chi=0.1) :", eval_f(kerr(0.1), n))
print()

# --- 2. frequency versus energy, both laws
# Small deformations bend the frequency quadratically in the energy for the
# q profile and linearly for the Kerr profile.
energies = np.linspace(0.0, 2.0, 5)
for spec, name in [(q_oscillator(0.1), "q lam=0.1"), (kerr(0.1), "kerr chi=0.1")]:
    amp = frequency(spec, energies, law="amplitude")
    can = frequency(spec, energies, law="canonical")
    print(f"{name:14s} amplitude law :", amp)
    print(f"{name:14s} canonical law :", can)
print()

# q profile: amplitude law approaches 1 + lam^2 E^2 / 4 for small lam
lam = 0.1
dev = np.max(np.abs(frequency(q_oscillator(lam), energies) - (1 + lam**2 * energies**2 / 4)))
print(f"q-profile small-deformation expansion, max deviation = {dev:.2e}")

# kerr with chi=0.1 under the canonical law is exactly 1.3 at E=2
print(f"kerr canonical at E=2: {frequency(kerr(0.1), 2.0, law='canonical'):.12f}")
print()

# --- 3. running products f(0) f(1) ... f(n) enter every coherent-state weight
print("f-factorials, kerr chi=0.5:", np.array([f_factorial(kerr(0.5), k) for k in range(6)]))

"""Deformed ladder operators on a truncated Fock space.

A_f = a f(n) keeps the ladder structure but reweights each rung.  The
truncation shows up only in the last diagonal entry of [a, a+]; everything
below it behaves like the infinite-dimensional algebra.  A dressed lowering
operator in the Heisenberg picture stays conserved under the matching
Hamiltonian flow.
"""

import numpy as np

from foscillator import (
    coherent_density,
    commutator_defect,
    deformed_lowering,
    evolve_density,
    expectation,
    hamiltonian_diagonal,
    heisenberg_invariant,
    kerr,
)

np.set_printoptions(precision=6, suppress=True, linewidth=120)

dim = 6
spec = kerr(0.2)

# --- 1. the operator and its number diagonal
a_f = deformed_lowering(spec, dim)
print("A_f (kerr chi=0.2, dim 6):")
print(a_f.real)
print("diag(A_f^+ A_f)   :", np.diag(a_f.conj().T @ a_f).real)
n = np.arange(dim, dtype=float)
print("n + chi n(n-1)    :", n + 0.2 * n * (n - 1))
print()

# --- 2. truncation defect sits in one corner
defect = commutator_defect(dim)
print("diag([a, a+]) :", np.diag(defect).real, " (corner absorbs the rest of the trace)")
print()

# --- 3. Hamiltonian diagonals for the available orderings
for form in ("symmetric", "normal", "normal_half", "kerr"):
    print(f"H diag, {form:12s}:", hamiltonian_diagonal(spec, dim, form))
print()

# --- 4. the dressed invariant is flat along the evolution
rho0 = coherent_density(1.0, 40)
spec = kerr(0.1)
ref = expectation(rho0, deformed_lowering(spec, 40))
print("  t    Tr[rho(t) Q(t)]            drift")
for t in (0.0, 0.7, 2.0, 5.0, 10.0):
    val = expectation(evolve_density(rho0, spec, t), heisenberg_invariant(spec, 40, t))
    print(f"{t:5.1f}  {val.real:+.12f} {val.imag:+.12f}i  {abs(val - ref):.2e}")

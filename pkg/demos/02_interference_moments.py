"""Interference moments of linear modulations.

Prints the normalized 2/b-th absolute moment of one interference component
for BPSK and QPSK under Rayleigh fading across loss exponents, and the
per-interferer baseband variance for a few constellations.
"""

from poissonfield import baseband_variance, constellation, moment_table, mpsk, mqam

table = moment_table()
print("normalized interference moments (Rayleigh fading):")
print("   b    BPSK    QPSK")
for b in (1.5, 2.0, 3.0, 4.0):
    print(f"  {b:3.1f}  {table[(b, 'bpsk')]:.3f}   {table[(b, 'qpsk')]:.3f}")

print()
print("per-interferer baseband variance at unit symbol energy:")
for name, c in (("bpsk", mpsk(2)), ("16qam", mqam(16)),
                ("asymmetric {0, sqrt(2)}", constellation([0.0, 2.0 ** 0.5],
                                                          normalize=False))):
    print(f"  {name:24s} V = {baseband_variance(c, 1.0):.4f}")
print("(origin-symmetric constellations give exactly 1/3)")

"""Outage probability of a probe link in a heterogeneous network.

Slow-varying interferer geometry: the meaningful metric is the probability
that the conditional error probability exceeds a target.  Sweeps SNR for
several interference-to-noise ratios (BPSK, b=2, lambda=0.01, sigma_dB=10,
target error 1e-2).
"""

import pathlib

import numpy as np

from poissonfield import NetworkScenario, mpsk, outage_probability

OUT = pathlib.Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

bpsk = mpsk(2)
snrs = np.linspace(10.0, 60.0, 11)
inr_labels = ["-inf", "10", "20", "30"]
columns = {}
for label in inr_labels:
    inr = None if label == "-inf" else float(label)
    vals = []
    for snr in snrs:
        s = NetworkScenario.from_db(lam=0.01, b=2.0, sigma_db=10.0,
                                    snr_db=snr, inr_db=inr)
        est = outage_probability(s, bpsk, p_star=1e-2, n_mc=30_000, seed=42)
        vals.append(est.value)
    columns[label] = np.array(vals)
    print(f"INR {label:>4} dB: outage at SNR 10..60 dB -> "
          + " ".join(f"{v:.3f}" for v in vals))

table = np.column_stack([snrs] + [columns[c] for c in inr_labels])
np.savetxt(OUT / "outage_vs_snr.csv", table, delimiter=",",
           header="snr_db," + ",".join(f"inr_{c}" for c in inr_labels),
           comments="")
print(f"wrote {OUT / 'outage_vs_snr.csv'}")

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(5.0, 3.4))
    for label in inr_labels:
        ax.semilogy(snrs, np.maximum(columns[label], 1e-5),
                    label=f"INR = {label} dB")
    ax.set_xlabel("SNR (dB)")
    ax.set_ylabel("outage probability")
    ax.legend(fontsize=8)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(OUT / "outage_vs_snr.png", dpi=150)
    print(f"wrote {OUT / 'outage_vs_snr.png'}")
except ImportError:
    print("matplotlib not available; skipped the figure")

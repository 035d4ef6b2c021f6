"""
Quantile-quantile and histogram plot data
=========================================

Generates the two CSV plot-data artifacts for the bundled returns
sample and prints a crude terminal rendering of each, so no plotting
backend is required.
"""

import pathlib

from cauchygof import histogram_data, qq_points, write_histogram_csv, write_qq_csv
from cauchygof.datasets import dax_returns

returns = dax_returns()
here = pathlib.Path(__file__).parent

qq_path = write_qq_csv(returns, here / "qq_demo.csv")
print(f"wrote {qq_path}")

hist_path = write_histogram_csv(returns, here / "hist_demo.csv", bins=9)
print(f"wrote {hist_path}")
print()

# Q-Q against the standard Cauchy: tail quantiles of the reference are
# enormous, so a straight line here would be a strong fit claim.
theo, emp = qq_points(returns)
print("q-q pairs (theoretical vs empirical), every sixth point:")
for t, e in zip(theo[::6], emp[::6]):
    print(f"  {t:>12.4f}  {e:>12.6f}")
print()

counts, edges, pdf_mid = histogram_data(returns, bins=9)
print("histogram vs reference density at bin midpoints:")
peak = counts.max()
for i, c in enumerate(counts):
    mid = 0.5 * (edges[i] + edges[i + 1])
    bar = "#" * int(round(30 * c / peak))
    print(f"  [{edges[i]:+.4f}, {edges[i + 1]:+.4f})  {int(c):>3d} {bar:<30} "
          f"pdf({mid:+.4f}) = {pdf_mid[i]:.4f}")

"""End-to-end CLI tour: generate an instance, inspect its skyline,
decide a radius, solve exactly, benchmark a doubling sweep, and render
an SVG of the covering.

Everything runs through the same entry point as the installed
`pareto-kcenter` script.
"""

import tempfile
from pathlib import Path

from pareto_kcenter.cli import main

work = Path(tempfile.mkdtemp(prefix="pareto_kcenter_demo_"))
instance = work / "points.txt"

print("== gen ==")
main(["gen", "--generator", "clustered", "--n", "800", "--seed", "99",
      "--out", str(instance)])
print(f"wrote {instance}")

print("\n== skyline (first lines) ==")
main(["skyline", str(instance), "--algo", "optimal"])

print("\n== decide ==")
code = main(["decide", str(instance), "--k", "3", "--lam", "120",
             "--grouped"])
print(f"exit code {code} (0 feasible, 1 infeasible)")

print("\n== solve ==")
main(["solve", str(instance), "--k", "3", "--method", "auto"])

print("\n== bench ==")
main(["bench", "--generator", "staircase", "--n", "2048,4096,8192",
      "--k", "4", "--method", "decide-grouped", "--seed", "5"])

print("\n== plot ==")
svg = work / "cover.svg"
main(["plot", str(instance), "--k", "3", "--out", str(svg)])

#!/usr/bin/env python3
"""Independent high-precision reference values for the test suites.

Everything here comes from mpmath at 30+ digits and never touches the C++
evaluators. Outputs:
  tests/data/zeros_first100.txt   first 100 zero ordinates (zero-table format)
  tests/data/oracle_values.txt    key = value lines used by the unit tests
"""
import os
import mpmath as mp

mp.mp.dps = 30
here = os.path.dirname(os.path.abspath(__file__))
data = os.path.join(here, "..", "..", "tests", "data")

with open(os.path.join(data, "zeros_first100.txt"), "w") as fh:
    fh.write("# first 100 ordinates of critical-line zeta zeros (mpmath zetazero, 30 digits)\n")
    for n in range(1, 101):
        fh.write(mp.nstr(mp.zetazero(n).imag, 20) + "\n")

vals = {}
for n in (0, 1, 10, 99):
    vals[f"gram_{n}"] = mp.grampoint(n)
for t in (10, 17.8455995405, 20, 50, 100, 2 * mp.pi * mp.e, 1000, 10000, 100000):
    key = mp.nstr(t, 12)
    vals[f"theta_{key}"] = mp.siegeltheta(t)
for t in (14, 14.3, 20, 50, 100, 500, 1000, 5000, 10000, 50000, 99999.5):
    key = mp.nstr(t, 12)
    vals[f"z_{key}"] = mp.siegelz(t)
    vals[f"dz_{key}"] = mp.siegelz(t, derivative=1)
    vals[f"ddz_{key}"] = mp.siegelz(t, derivative=2)

# stationary point in the first gap and the sign of Z there
g1, g2 = mp.zetazero(1).imag, mp.zetazero(2).imag
t0 = mp.findroot(lambda t: mp.siegelz(t, derivative=1), (g1 + g2) / 2)
vals["stationary_gap1_t0"] = t0
vals["stationary_gap1_z"] = mp.siegelz(t0)

# zero counts N(T) by the argument principle form N = theta/pi + 1 + S(T)
for T in (50, 100, 1000, 10000):
    vals[f"count_{T}"] = mp.nzeros(T)
vals["riemann_constant"] = mp.euler + 2 - mp.log(4 * mp.pi)

with open(os.path.join(data, "oracle_values.txt"), "w") as fh:
    fh.write("# mpmath reference values; regenerate with tools/oracle/gen_oracle_data.py\n")
    for k, v in vals.items():
        fh.write(f"{k} = {mp.nstr(v, 20)}\n")

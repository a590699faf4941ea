"""Profile the decoder in field operations rather than wall time.

Every extension-field multiplication and inversion performed inside an
active OpCount context is tallied.  The pairwise decode costs a handful
of k-by-k eigenbasis conversions plus one rank test per candidate root,
so counts grow like a low-degree polynomial in k; the r-block decode
adds one pairwise instance per nonzero block, linear in n - k.
"""

from spreadcodes import OpCount, SpreadCode, decode
from spreadcodes.channel import ChannelSpec, corrupt, random_codeword, trial_rng


def mean_ops(q, k, r, trials=10, seed=1):
    code = SpreadCode(q, k, r)
    total = 0
    for t in range(trials):
        rng = trial_rng(seed, k, r, t)
        cw = random_codeword(code, rng)
        received = corrupt(cw, ChannelSpec(erasures=1, errors=0), code, rng)
        with OpCount() as counter:
            assert decode(received, code).ok
        total += counter.ext_total
    return total / trials


print("pairwise decode, one erasure, q = 2:")
print("k    ext ops   ratio to previous")
prev = None
for k in (3, 5, 7, 9):
    ops = mean_ops(2, k, 2)
    ratio = "" if prev is None else f"{ops / prev:.2f}"
    print(f"{k:<4} {ops:<9.0f} {ratio}")
    prev = ops

print("\nfixed k = 3, growing block count:")
print("r    n-k   ext ops")
for r in (2, 4, 8):
    print(f"{r:<4} {(r - 1) * 3:<5} {mean_ops(2, 3, r):.0f}")

print("\nbase-field and extension-field work are tallied separately:")
code = SpreadCode(2, 5, 2)
rng = trial_rng(3)
cw = random_codeword(code, rng)
received = corrupt(cw, ChannelSpec(erasures=1, errors=1), code, rng)
with OpCount() as counter:
    decode(received, code)
print(f"    {counter!r}")

"""Walk through minimum-distance decoding of corrupted received spaces.

The channel drops `erasures` dimensions of the sent codeword and
adjoins `errors` fresh dimensions; the received space then sits at
subspace distance errors + erasures.  Anything strictly inside half the
minimum distance (distance < k) decodes back uniquely.
"""

from spreadcodes import SpreadCode, decode, subspace_distance
from spreadcodes.channel import ChannelSpec, corrupt, trial_rng
from spreadcodes.oracle import brute_force_decode

code = SpreadCode(q=2, k=3, r=2)
ext = code.ext

sent = code.encode((ext.one, code.alpha))
print("sent codeword [1 :", ext.to_str(code.alpha) + "]")

for errors, erasures in [(0, 0), (0, 1), (0, 2), (1, 1)]:
    rng = trial_rng(2024, errors, erasures)
    received = corrupt(sent, ChannelSpec(erasures, errors), code, rng)
    d = subspace_distance(received.subspace, sent.subspace)
    result = decode(received, code)
    print(f"\nerrors={errors} erasures={erasures}: received dimension "
          f"{received.dim}, distance {d}")
    print("    decoded:", result.ok and result.codeword == sent)

# Past half the minimum distance the decoder refuses to guess.
rng = trial_rng(2024, 9)
received = corrupt(sent, ChannelSpec(erasures=2, errors=1), code, rng)
result = decode(received, code)
best, nearest = brute_force_decode(received, code)
print(f"\ndistance-3 corruption: decoder says "
      f"{'decoded' if result.ok else 'failure (' + result.reason + ')'}")
print(f"    brute force agrees: nearest codeword distance is {best}")

# Multi-block codes reduce to pairwise decodes against the first
# high-rank block.
wide = SpreadCode(q=2, k=2, r=4)
point = (wide.ext.zero, wide.ext.one, wide.ext.gen(), wide.ext.one)
sent_wide = wide.encode(point)
rng = trial_rng(7)
received = corrupt(sent_wide, ChannelSpec(erasures=1, errors=0), wide, rng)
result = decode(received, wide)
print(f"\nr=4 blocks, one erasure: recovered the 4-coordinate point:",
      result.ok and result.codeword == sent_wide)

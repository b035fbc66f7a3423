"""
A replayable nonexistence proof
===============================

(1, 19, 17, 19, 1) is not a Gorenstein h-vector. The prover builds a case tree
whose leaves all end in a contradiction. Every step records its rule and
inputs, so the whole trace can be checked again from its JSON.
"""

import json

from hilbert_extremal.gorenstein_prover import ProofTrace, prove_not_gorenstein_19, verify_trace

trace = prove_not_gorenstein_19()
print(trace.render())

print("cited groups:", trace.cited_groups())

# round trip through JSON and replay every step
again = ProofTrace.from_json(json.loads(trace.dumps()))
verify_trace(again)
print("replay ok,", len(again.steps), "steps")

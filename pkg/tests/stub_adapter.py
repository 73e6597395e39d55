"""Protocol v1 test double for the adapter channel tests.

Behaviors (argv[1]):
  echo        wrap the in-process spf/scc reference implementations
  stall-2nd   answer normally except request id 2, which never gets a reply
  crash-2nd   report status crash on request id 2, then recover
  garbage     reply with a non-RESP body
  old-proto   handshake with protocol version 0
"""

import sys

from dgfuzz.adapter import decode_request, encode_response, frame
from dgfuzz.graph import EndpointPair
from dgfuzz.outputs import encode_output
from dgfuzz.targets.spf import bellman_ford
from dgfuzz.targets.scc import tarjan_iterative

IMPLS = {"spf": bellman_ford, "scc": tarjan_iterative}


def main() -> int:
    behavior = sys.argv[1] if len(sys.argv) > 1 else "echo"
    out = sys.stdout.buffer
    version = 0 if behavior == "old-proto" else 1
    out.write(f"GRAPHFUZZ-ADAPTER {version} spf scc\n".encode())
    out.flush()
    data = sys.stdin.buffer
    while True:
        line = data.readline()
        if not line:
            return 0
        body = data.read(int(line)).decode()
        req = decode_request(body)
        if behavior == "stall-2nd" and req.request_id == 2:
            # swallow the request; the engine must time out and restart us
            continue
        if behavior == "crash-2nd" and req.request_id == 2:
            resp = encode_response(req.request_id, "crash", "synthetic failure")
        elif behavior == "garbage":
            resp = "WHAT 1 ok nothing\n"
        else:
            result = IMPLS[req.problem](req.graph, EndpointPair(req.s, req.t))
            resp = encode_response(req.request_id, "ok", encode_output(req.problem, result))
        out.write(frame(resp))
        out.flush()


if __name__ == "__main__":
    sys.exit(main())

"""Wire protocol v1 for out-of-process implementations, engine side.

A child process announces itself with one raw line::

    GRAPHFUZZ-ADAPTER 1 <space-separated problem names>\\n

After the handshake every message in either direction is framed as the
decimal byte length, a newline, then the UTF-8 body.  Request bodies are
``REQ <id> <problem> <s> <t>\\n<graph text block>``; response bodies are
``RESP <id> <ok|crash> <payload>\\n`` with the payload in the output codec of
:mod:`dgfuzz.outputs`.

The channel drives exactly one in-flight request.  A response that misses
the budget is a Hang and the child is restarted; a malformed response or a
dead child is a Crash (the campaign keeps running either way).
"""

from __future__ import annotations

import os
import select
import subprocess
import time
from dataclasses import dataclass
from typing import Optional

from .graph import Graph, EndpointPair, parse, serialize
from .outputs import Crash, Hang, Outcome, PayloadError, decode_output, encode_output

HANDSHAKE_PREFIX = "GRAPHFUZZ-ADAPTER"
PROTOCOL_VERSION = 1


class ProtocolVersionMismatch(RuntimeError):
    pass


class UnsupportedProblem(RuntimeError):
    pass


@dataclass(frozen=True)
class AdapterRequest:
    request_id: int
    problem: str
    graph: Graph
    s: int
    t: int


def frame(body: str) -> bytes:
    data = body.encode("utf-8")
    return f"{len(data)}\n".encode("ascii") + data


def encode_request(req: AdapterRequest) -> str:
    return f"REQ {req.request_id} {req.problem} {req.s} {req.t}\n{serialize(req.graph)}"


def decode_request(body: str) -> AdapterRequest:
    head, _, graph_text = body.partition("\n")
    parts = head.split(" ")
    if len(parts) != 5 or parts[0] != "REQ":
        raise PayloadError(f"malformed request head: {head!r}")
    return AdapterRequest(int(parts[1]), parts[2], parse(graph_text), int(parts[3]), int(parts[4]))


def encode_response(request_id: int, status: str, payload: str) -> str:
    if status not in ("ok", "crash"):
        raise ValueError(status)
    return f"RESP {request_id} {status} {payload}\n"


def decode_response(body: str) -> tuple[int, str, str]:
    line = body.rstrip("\n")
    parts = line.split(" ", 3)
    if len(parts) < 3 or parts[0] != "RESP" or parts[2] not in ("ok", "crash"):
        raise PayloadError(f"malformed response: {body!r}")
    payload = parts[3] if len(parts) == 4 else ""
    return int(parts[1]), parts[2], payload


class _DeadlineReader:
    """Buffered, deadline-aware reads from a child's stdout file descriptor."""

    def __init__(self, fd: int):
        self.fd = fd
        self.buf = b""

    def _fill(self, deadline: float) -> bool:
        remaining = deadline - time.monotonic()
        if remaining <= 0:
            return False
        ready, _, _ = select.select([self.fd], [], [], remaining)
        if not ready:
            return False
        chunk = os.read(self.fd, 65536)
        if not chunk:
            raise EOFError("adapter closed its stdout")
        self.buf += chunk
        return True

    def read_line(self, deadline: float) -> Optional[bytes]:
        while b"\n" not in self.buf:
            if not self._fill(deadline):
                return None
        line, _, self.buf = self.buf.partition(b"\n")
        return line

    def read_exact(self, n: int, deadline: float) -> Optional[bytes]:
        while len(self.buf) < n:
            if not self._fill(deadline):
                return None
        out, self.buf = self.buf[:n], self.buf[n:]
        return out


class AdapterChannel:
    """Owns one child process speaking protocol v1."""

    def __init__(self, command: list[str], handshake_timeout_ms: int = 10000):
        self.command = list(command)
        self.handshake_timeout_ms = handshake_timeout_ms
        self.proc: Optional[subprocess.Popen] = None
        self.reader: Optional[_DeadlineReader] = None
        self.problems: tuple[str, ...] = ()
        self.request_counter = 0
        self.restarts = 0
        self.start()

    def start(self) -> None:
        self.proc = subprocess.Popen(
            self.command,
            stdin=subprocess.PIPE,
            stdout=subprocess.PIPE,
        )
        self.reader = _DeadlineReader(self.proc.stdout.fileno())
        deadline = time.monotonic() + self.handshake_timeout_ms / 1000.0
        line = self.reader.read_line(deadline)
        if line is None:
            self._kill()
            raise ProtocolVersionMismatch("no handshake before timeout")
        parts = line.decode("utf-8", "replace").split(" ")
        if len(parts) < 2 or parts[0] != HANDSHAKE_PREFIX:
            self._kill()
            raise ProtocolVersionMismatch(f"bad handshake: {line!r}")
        if parts[1] != str(PROTOCOL_VERSION):
            self._kill()
            raise ProtocolVersionMismatch(f"protocol version {parts[1]}, want {PROTOCOL_VERSION}")
        self.problems = tuple(parts[2:])

    def _kill(self) -> None:
        if self.proc and self.proc.poll() is None:
            self.proc.kill()
            self.proc.wait()

    def restart(self) -> None:
        self._kill()
        self.restarts += 1
        self.start()

    def close(self) -> None:
        if self.proc and self.proc.poll() is None:
            self.proc.stdin.close()
            try:
                self.proc.wait(timeout=2)
            except subprocess.TimeoutExpired:
                self._kill()

    def _read_frame(self, deadline: float) -> Optional[bytes]:
        line = self.reader.read_line(deadline)
        if line is None:
            return None
        length = int(line)
        return self.reader.read_exact(length, deadline)

    def execute(self, problem: str, g: Graph, ep: EndpointPair, budget_ms: int) -> Outcome:
        if problem not in self.problems:
            raise UnsupportedProblem(f"adapter supports {self.problems}, not {problem!r}")
        self.request_counter += 1
        req = AdapterRequest(self.request_counter, problem, g, ep.s, ep.t)
        return remote_execute(self, req, budget_ms)

    def as_impl(self, problem: str, budget_ms: int = 5000):
        """A drop-in target callable backed by this channel."""

        def remote_impl(g: Graph, ep: EndpointPair, probe=None) -> Outcome:
            return self.execute(problem, g, ep, budget_ms)

        remote_impl.__name__ = f"remote_{problem}"
        return remote_impl


def remote_execute(channel: AdapterChannel, req: AdapterRequest, budget_ms: int) -> Outcome:
    """One request/response cycle; Hang restarts the child, Crash does not."""
    deadline = time.monotonic() + budget_ms / 1000.0
    try:
        channel.proc.stdin.write(frame(encode_request(req)))
        channel.proc.stdin.flush()
        body = channel._read_frame(deadline)
    except (BrokenPipeError, EOFError, OSError) as e:
        channel.restart()
        return Crash(f"adapter died: {e}")
    if body is None:
        channel.restart()
        return Hang()
    try:
        resp_id, status, payload = decode_response(body.decode("utf-8", "replace"))
        if resp_id != req.request_id:
            return Crash(f"response id {resp_id} != request id {req.request_id}")
        if status == "crash":
            return Crash(f"adapter reported: {payload}")
        return decode_output(req.problem, payload)
    except (PayloadError, ValueError) as e:
        return Crash(f"malformed response {body!r}: {e}")

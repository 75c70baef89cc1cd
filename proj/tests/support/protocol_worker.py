# Copyright 2026 The MapForge Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Minimal candidate worker used by the C++ test suites.

Speaks the PING / RANGE / QUIT line protocol on stdin/stdout for the
candidate file given as the only argument. A candidate that does not load
makes the worker print the error on stderr and exit 2 before answering.
"""

import sys
import traceback


def load(path):
    namespace = {"__name__": "candidate"}
    with open(path, encoding="utf-8") as f:
        code = compile(f.read(), path, "exec")
    exec(code, namespace)
    fn = namespace.get("map_to_coordinates")
    if not callable(fn):
        raise LookupError("map_to_coordinates not found")
    return fn


def coerce(value):
    if not isinstance(value, (tuple, list)) or len(value) not in (2, 3):
        raise TypeError("expected a tuple of 2 or 3 integers, got %r" % (value,))
    out = []
    for v in value:
        if isinstance(v, bool) or not isinstance(v, int):
            if isinstance(v, float) and v.is_integer():
                v = int(v)
            else:
                raise TypeError("non-integer coordinate %r" % (v,))
        if v < 0:
            raise ValueError("negative coordinate %d" % v)
        out.append(str(v))
    return " ".join(out)


def one_line(text):
    return " ".join(str(text).split()) or "error"


def main():
    if len(sys.argv) != 2:
        sys.stderr.write("usage: protocol_worker.py <candidate.py>\n")
        return 64
    try:
        fn = load(sys.argv[1])
    except BaseException:
        traceback.print_exc(limit=1)
        return 2
    out = sys.stdout
    for raw in sys.stdin:
        cmd = raw.split()
        if not cmd:
            continue
        if cmd[0] == "PING":
            out.write("PONG\n")
        elif cmd[0] == "QUIT":
            out.flush()
            return 0
        elif cmd[0] == "RANGE" and len(cmd) == 3:
            start, count = int(cmd[1]), int(cmd[2])
            lines = []
            for n in range(start, start + count):
                try:
                    lines.append(coerce(fn(n)))
                except Exception as e:  # per-index failure, not fatal
                    lines.append("ERR " + one_line("%s: %s" % (type(e).__name__, e)))
            out.write("\n".join(lines))
            out.write("\n")
        else:
            sys.stderr.write("unknown command %r\n" % raw)
            return 65
        out.flush()
    return 0


if __name__ == "__main__":
    sys.exit(main())

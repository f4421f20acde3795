#!/usr/bin/env python3
"""Run the independence certificate for a range of even k and tabulate the
rank, the minor, and the wall time.  The Jacobian rows come from the chain
rule on numeric matrix powers, so this scales far beyond the symbolic route.
"""

import sys
import time

from binform.independence import independence_certificate


def main() -> int:
    k_max = int(sys.argv[1]) if len(sys.argv) > 1 else 10
    print(f"{'k':>4} {'rank':>5} {'pass':>5} {'seconds':>8}  minor")
    for k in range(2, k_max + 1, 2):
        start = time.monotonic()
        cert = independence_certificate(k)
        elapsed = time.monotonic() - start
        minor = cert["minor"]
        if len(minor) > 48:
            minor = minor[:45] + "..."
        print(f"{k:>4} {cert['rank']:>5} {str(cert['pass']):>5} {elapsed:>8.3f}  {minor}")
        if not cert["pass"]:
            return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

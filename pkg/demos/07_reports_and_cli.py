"""The report pipeline behind the command-line interface.

Every verification suite produces a Report: an ordered list of checks
with PASS / FAIL / ERROR / INCONCLUSIVE statuses and human-readable
witnesses, serialized as deterministic JSON (same configuration, same
bytes -- timings go to stderr, never into the payload).

The same suites are reachable from the shell:

    takiff verify axioms --family omega --lambda 2 --a 1 --beta "hb^2 + 1"
    takiff verify irreducible --family gamma --lambda 2 --a 1 --b -1 \
        --eta 1 --theta 0 --depth 6 --seeds 5 --rng 42
    takiff singular --eta 0 --theta 0 --max-level 3
    takiff act --family gamma --lambda 1 --expr "e*f" --target "1"
    takiff induced verify --family gamma --lambda 1 --eta 1 --theta 0

Exit codes: 0 all checks ok, 1 any FAIL or ERROR, 2 usage problems.
"""

import json

from takiff import JobConfig, run_suite


def main():
    cfg = JobConfig(suite="omega-constraint", lam="2", a="1", beta="hb^2 + 1")
    report = run_suite(cfg)
    print("rendered for people:")
    print(report.render_text())
    print()
    print("serialized for machines (deterministic bytes):")
    print(json.dumps(report.to_dict(), indent=2, sort_keys=True))


if __name__ == "__main__":
    main()

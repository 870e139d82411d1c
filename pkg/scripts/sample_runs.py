"""Draw a few random seating runs and show them next to the exact count."""

import argparse

from privperm.counting import RuleKind, count_rule
from privperm.simulator import sample_run


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("rule")
    parser.add_argument("n", type=int)
    parser.add_argument("--runs", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rule = RuleKind.parse(args.rule)
    print(f"{rule.name}({args.n}) = {count_rule(rule, args.n)} permutations in total")
    for i in range(args.runs):
        perm = sample_run(rule, args.n, seed=args.seed + i)
        print(" ", ",".join(map(str, perm)))


if __name__ == "__main__":
    main()

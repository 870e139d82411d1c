"""Print the first terms of all seven payphone sequences with their OEIS ids."""

import argparse

from privperm.counting import OEIS_IDS, RuleKind, count_rule


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--terms", type=int, default=10)
    args = parser.parse_args()

    for rule in RuleKind:
        row = " ".join(str(count_rule(rule, n)) for n in range(1, args.terms + 1))
        print(f"{OEIS_IDS[rule]}  {rule.name}: {row}")


if __name__ == "__main__":
    main()

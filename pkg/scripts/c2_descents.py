"""Find every n where the circular count C2 drops, C2(n) > C2(n+1)."""

import argparse
from dataclasses import dataclass

from privperm.counting import RuleKind, count_rule


@dataclass
class DescentConfig:
    rule: RuleKind = RuleKind.C2
    max_n: int = 200


def descents(cfg: DescentConfig) -> list[int]:
    values = [count_rule(cfg.rule, n) for n in range(1, cfg.max_n + 2)]
    return [n for n in range(1, cfg.max_n + 1) if values[n - 1] > values[n]]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=DescentConfig.max_n)
    parser.add_argument("--rule", default="c2")
    args = parser.parse_args()
    cfg = DescentConfig(RuleKind.parse(args.rule), args.max_n)

    found = descents(cfg)
    print(f"{cfg.rule.name}(n) > {cfg.rule.name}(n+1) for n in: {found}")
    runs = [n for n in found if n + 1 in found]
    if runs:
        print("consecutive drops starting at:", runs)


if __name__ == "__main__":
    main()

"""Classify the built-in families and a few generated categories, printing one JSON line each."""

import argparse
import json
import time
from dataclasses import dataclass, field

from ncfusion import analytics, fusion
from ncfusion import partition as pc
from ncfusion.category import family_table, generated_table


@dataclass
class Config:
    bound: int = 8
    families: tuple = ("pairs", "unitary", "allnc", "cs:2", "cs:3", "cinf", "c0plus")
    generated: dict = field(
        default_factory=lambda: {
            "theta1^2": [pc.tensor(pc.theta(1), pc.theta(1))],
            "beta2": [pc.beta(2)],
            "pi0+,beta1": [pc.pi0("+"), pc.beta(1)],
        }
    )


def describe(name, table):
    t0 = time.perf_counter()
    out = {"category": name, **fusion.classify(table)}
    free = fusion.is_free(table)
    out["free_conditions"] = list(free.conditions)
    out["proper"] = analytics.is_proper(table).value
    out["case"] = fusion.subring_case_report(table)["case"]
    out["seconds"] = round(time.perf_counter() - t0, 2)
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bound", type=int, default=Config.bound)
    cfg = Config(bound=ap.parse_args().bound)
    for name in cfg.families:
        print(json.dumps(describe(name, family_table(name, cfg.bound)), sort_keys=True))
    for name, gens in cfg.generated.items():
        print(json.dumps(describe(name, generated_table(gens, cfg.bound)), sort_keys=True))


if __name__ == "__main__":
    main()

"""Seeded batches of random cheeses, optionally spread over worker processes."""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from decimal import Decimal

from .engine import classicalise, is_classical, tamper, verify_certificate
from .geometry import Geo, _Prec
from .io import random_cheese

DELTA_SLACK = Decimal("1e-25")


@dataclass(frozen=True)
class HarnessRow:
    index: int
    holes: int
    steps: int
    classical: bool
    delta_ok: bool
    steps_ok: bool
    certificate_ok: bool
    tamper_rejected: bool
    delta_in: str
    delta_out: str

    @property
    def ok(self) -> bool:
        return (self.classical and self.delta_ok and self.steps_ok and self.certificate_ok
                and self.tamper_rejected)


def instance_seed(seed: int, index: int) -> int:
    return random.Random(f"{seed}:{index}").getrandbits(64)


def run_instance(seed: int, index: int, precision: int = 50,
                 min_holes: int = 5, max_holes: int = 50) -> HarnessRow:
    rng = random.Random(instance_seed(seed, index))
    geo = Geo(precision)
    cheese = random_cheese(rng, rng.randint(min_holes, max_holes))
    res = classicalise(cheese, geo)
    classical, _ = is_classical(res.cheese, geo)
    cert_ok = verify_certificate(res.certificate, cheese, res.cheese, geo)
    bad = tamper(res.certificate, cheese, res.cheese, geo)
    with _Prec(precision):
        delta_ok = res.delta_out >= res.delta_in - DELTA_SLACK
    return HarnessRow(
        index=index,
        holes=len(cheese.holes),
        steps=res.steps,
        classical=classical,
        delta_ok=delta_ok,
        steps_ok=res.steps <= len(cheese.holes),
        certificate_ok=cert_ok,
        tamper_rejected=not verify_certificate(bad, cheese, res.cheese, geo),
        delta_in=str(res.delta_in),
        delta_out=str(res.delta_out),
    )


def _run(args):
    return run_instance(*args)


def run_harness(count: int, seed: int, precision: int = 50, jobs: int = 1) -> list[HarnessRow]:
    tasks = [(seed, i, precision) for i in range(count)]
    if jobs <= 1:
        return [_run(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(_run, tasks))

"""The lattice of basic extensions C(X, tau^n, g^n), n | ord(g)."""

from __future__ import annotations

from dataclasses import dataclass

from ..extensions.base import divisors, fixed_field_elements
from .core import AlgebraSpec


def _is_prime(n: int) -> bool:
    return n > 1 and all(n % d for d in range(2, int(n ** 0.5) + 1))


@dataclass(frozen=True)
class LatticeNode:
    n: int
    spec: AlgebraSpec
    fixed_field_degree: int  # [L^<g^n> : L^g]
    constant_probes: tuple   # probe elements fixed by g^n


@dataclass(frozen=True)
class Lattice:
    nodes: tuple[LatticeNode, ...]
    edges: tuple[tuple[int, int], ...]  # (m, n): C(X,tau^m,g^m) is covered by C(X,tau^n,g^n)

    def node(self, n: int) -> LatticeNode:
        for nd in self.nodes:
            if nd.n == n:
                return nd
        raise KeyError(n)

    def includes(self, m: int, n: int) -> bool:
        """C(X, tau^m, g^m) is a subset of C(X, tau^n, g^n) exactly when m | n."""
        return n % m == 0


def lattice(spec: AlgebraSpec) -> Lattice:
    spec.require_valid()
    d = spec.g.order
    probes = spec.field.probe_elements()
    nodes = []
    for n in divisors(d):
        sub = spec.power(n)
        fixed = tuple(fixed_field_elements(spec.g ** n, probes))
        nodes.append(LatticeNode(n, sub, n, fixed))
    ns = [nd.n for nd in nodes]
    edges = tuple((m, n) for m in ns for n in ns if n % m == 0 and _is_prime(n // m))
    return Lattice(tuple(nodes), edges)

"""Lower bounds on the edge count of color-connected graphs.

Two necessary conditions govern a (t+1)-color connected graph with ``n``
nodes, ``lam`` edges and ``m`` colors:

* every node needs ``t + 1`` incident edges, so ``2 * lam >= (t + 1) * n``;
* after removing the ``t`` largest color classes, ``n - 1`` edges must remain,
  so ``mu(lam, m; t) >= n - 1`` where ``mu`` is the best such remainder over
  all ways of splitting ``lam`` edges into ``m`` classes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations, product

from colornet.connectivity import is_color_connected
from colornet.graph import new_graph

__all__ = [
    "Verdict",
    "BoundsReport",
    "GuardExceeded",
    "mu_formula",
    "mu_oracle",
    "mu_bound",
    "degree_bound",
    "case_bound",
    "min_lambda",
    "proven_family",
    "bounds_report",
    "exhaustive_feasibility",
]


class GuardExceeded(ValueError):
    """An exhaustive search was asked to run on an instance that is too large."""


class Verdict(str, enum.Enum):
    INFEASIBLE = "infeasible"
    FEASIBLE_BY_CONSTRUCTION = "feasible-by-construction"
    NECESSARY_MET = "necessary-conditions-met"


def _check_mu_args(lam: int, m: int, t: int) -> None:
    if lam < 0 or m < 1:
        raise ValueError(f"need lam >= 0 and m >= 1, got lam={lam}, m={m}")
    if not 0 <= t <= m:
        raise ValueError(f"threshold t={t} outside [0, {m}]")


def mu_formula(lam: int, m: int, t: int) -> int:
    """Closed form for mu(lam, m; t)."""
    _check_mu_args(lam, m, t)
    q, r = divmod(lam, m)
    if t >= r:
        return (m - t) * q
    return (m - t) * q + (r - t)


MU_ORACLE_LIMIT = 24


def mu_oracle(lam: int, m: int, t: int) -> int:
    """mu(lam, m; t) by enumerating every multiset of ``m`` block sizes.

    Blocks may be empty.  The value of a size multiset is the sum of its
    ``m - t`` smallest entries.
    """
    _check_mu_args(lam, m, t)
    if lam > MU_ORACLE_LIMIT or m > MU_ORACLE_LIMIT:
        raise GuardExceeded(f"mu_oracle limited to lam, m <= {MU_ORACLE_LIMIT}")
    best = 0
    for sizes in _nondecreasing(lam, m, 0):
        best = max(best, sum(sizes[: m - t]))
    return best


def _nondecreasing(total: int, parts: int, lo: int):
    """All nondecreasing tuples of ``parts`` integers >= ``lo`` summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(lo, total // parts + 1):
        for rest in _nondecreasing(total - first, parts - 1, first):
            yield (first,) + rest


def degree_bound(n: int, t: int) -> int:
    """Least ``lam`` with ``2 * lam >= (t + 1) * n``."""
    return -(-(t + 1) * n // 2)


def mu_bound(n: int, m: int, t: int) -> int | None:
    """Least ``lam`` with ``mu(lam, m; t) >= n - 1``; ``None`` if there is none."""
    if t >= m:
        return 0 if n <= 1 else None
    lam = 0
    # mu grows by at least m - t per m extra edges, so this terminates.
    while mu_formula(lam, m, t) < n - 1:
        lam += 1
    return lam


def case_bound(n: int, m: int, t: int) -> int:
    """Edge lower bound read off the residue of ``n`` modulo ``m - t``.

    Requires ``0 < t < m - 1``.  Writing ``n = (m - t) k + j``: ``mk - 1`` for
    ``j == 0``, ``mk`` for ``j == 1`` and ``mk + t + j - 1`` otherwise.
    """
    if not 0 < t < m - 1:
        raise ValueError(f"case bound needs 0 < t < m - 1, got m={m}, t={t}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    k, j = divmod(n, m - t)
    if j == 0:
        return m * k - 1
    if j == 1:
        return m * k
    return m * k + t + j - 1


def min_lambda(n: int, m: int, t: int) -> int | None:
    """Smallest edge count meeting both necessary conditions, ``None`` if infeasible.

    Infeasible means no ``lam <= n(n-1)/2`` satisfies both conditions.
    """
    if n < 2 or m < 1 or not 0 <= t <= m:
        raise ValueError(f"need n >= 2, m >= 1, 0 <= t <= m; got n={n}, m={m}, t={t}")
    mb = mu_bound(n, m, t)
    if mb is None:
        return None
    lam = max(mb, degree_bound(n, t))
    return lam if lam <= n * (n - 1) // 2 else None


def proven_family(n: int, m: int, t: int) -> str | None:
    """Name of the explicit construction covering ``(n, m, t)``, if any."""
    if m == t + 1 and n >= 2 * m:
        return "disjoint-spanning"
    if t == 1 and m >= 3 and n >= m:
        return "t1"
    if (m, t) == (4, 2) and n >= 5:
        return "m4-t2"
    if (m, t) == (5, 3) and n >= 5:
        return "m5-t3"
    return None


@dataclass(frozen=True)
class BoundsReport:
    n: int
    m: int
    t: int
    degree_bound: int
    mu_bound: int | None
    case_bound: int | None
    lambda_min: int | None
    verdict: Verdict
    justification: dict[str, str] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "t": self.t,
            "degree_bound": self.degree_bound,
            "mu_bound": self.mu_bound,
            "case_bound": self.case_bound,
            "lambda_min": self.lambda_min,
            "verdict": self.verdict.value,
            "justification": dict(self.justification),
        }


def bounds_report(n: int, m: int, t: int) -> BoundsReport:
    lam_min = min_lambda(n, m, t)
    deg = degree_bound(n, t)
    mb = mu_bound(n, m, t)
    cb = None
    why = {
        "degree_bound": "every node needs t+1 incident edges: 2*lambda >= (t+1)*n",
        "mu_bound": "cover-free condition: mu(lambda, m; t) >= n-1",
    }
    if 0 < t < m - 1:
        cb = case_bound(n, m, t)
        if cb != mb:
            raise AssertionError(f"case bound {cb} disagrees with mu bound {mb}")
        why["case_bound"] = "residue of n modulo m-t, same condition as mu_bound"
    if lam_min is None:
        verdict = Verdict.INFEASIBLE
        why["lambda_min"] = "no lambda <= n(n-1)/2 meets both conditions"
    else:
        family = proven_family(n, m, t)
        if family is not None:
            verdict = Verdict.FEASIBLE_BY_CONSTRUCTION
            why["lambda_min"] = f"max of the bounds, attained by the {family} construction"
        else:
            verdict = Verdict.NECESSARY_MET
            why["lambda_min"] = "max of the bounds; sufficiency not established here"
    return BoundsReport(n, m, t, deg, mb, cb, lam_min, verdict, why)


EXHAUSTIVE_LIMIT = 2_000_000


def exhaustive_feasibility(n: int, m: int, t: int) -> bool:
    """Whether any (t+1)-color connected graph on ``n`` nodes and ``m`` colors exists.

    Brute force over every edge subset of K_n and every coloring of it up to
    color renaming; shares nothing with the bound formulas.
    """
    if n < 1 or m < 1 or not 0 <= t <= m:
        raise ValueError(f"bad parameters n={n}, m={m}, t={t}")
    pairs = list(combinations(range(n), 2))
    if (1 + m) ** len(pairs) > EXHAUSTIVE_LIMIT:
        raise GuardExceeded(f"(1+m)^(n(n-1)/2) = {(1 + m) ** len(pairs)} candidates is too many")
    for size in range(len(pairs) + 1):
        for subset in combinations(pairs, size):
            for colors in product(range(m), repeat=size):
                if not _first_use_order(colors):
                    continue
                g = new_graph(n, m, [(u, v, c) for (u, v), c in zip(subset, colors)])
                if is_color_connected(g, t):
                    return True
    return False


def _first_use_order(colors: tuple[int, ...]) -> bool:
    """True when colors first appear as 0, 1, 2, ... (one per renaming class)."""
    nxt = 0
    for c in colors:
        if c > nxt:
            return False
        if c == nxt:
            nxt += 1
    return True

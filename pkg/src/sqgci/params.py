"""Parameter schedules for the iteration and their validity report.

Strict schedules follow lambda_n = a^(b^n) with the inequality system from the
construction's choice of parameters; they blow past any computable grid
(a^(b^2) is already ~1e96 for a = 16^5, b = 4), so strict mode is
validation-only and uses exact integer / log-space arithmetic.  Relaxed
schedules carry an explicit integer lambda list; every strict inequality is
still evaluated and reported, but violations only annotate the run.
"""

from __future__ import annotations

import dataclasses
import math


@dataclasses.dataclass(frozen=True)
class BoundCheck:
    name: str
    expression: str
    passed: bool
    margin: float

    def __str__(self):
        verdict = "pass" if self.passed else "FAIL"
        return f"{verdict:4s}  {self.name:28s} {self.expression}  margin={self.margin:+.3e}"


@dataclasses.dataclass(frozen=True)
class ValidationReport:
    mode: str
    checks: tuple[BoundCheck, ...]
    notes: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def accepted(self) -> bool:
        """Relaxed schedules are accepted with annotations; strict must pass."""
        return self.ok or self.mode == "relaxed"

    @property
    def violations(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.checks if not c.passed)

    def __str__(self):
        head = f"parameter validation ({self.mode} mode): " + ("PASS" if self.ok else "FAIL")
        body = "\n".join("  " + str(c) for c in self.checks)
        notes = "\n".join("  note: " + n for n in self.notes)
        return "\n".join(x for x in (head, body, notes) if x)


@dataclasses.dataclass(frozen=True)
class ParamSchedule:
    """All constants of the construction plus the frequency schedule.

    mode "strict": lambda_n = a^(b^n) from integers a, b.
    mode "relaxed": lambda_n from an explicit increasing integer list.
    Derived per level: r_n = M_L lambda_0^beta lambda_n^-beta,
    ell_n = 1/lambda_n, mu_n = sqrt(lambda_n lambda_{n-1}).
    """

    mode: str = "relaxed"
    a: int | None = None
    b: int | None = None
    lambdas: tuple[int, ...] = (4, 8, 16, 32)
    beta: float = 0.25
    gamma: float = 1.0
    alpha: float = 0.5
    kappa: float = 0.25
    eta: float = 1.0
    nu: float = 1.0
    N_bound: float = 1.0
    L_bound: float = 1.0
    C_const: float = 1.0
    C0: float = 2.0
    M0: float | None = None
    positivity_floor: float = 1e-6

    def __post_init__(self):
        if self.mode not in ("strict", "relaxed"):
            raise ValueError("mode must be 'strict' or 'relaxed'")
        if self.mode == "strict":
            if self.a is None or self.b is None:
                raise ValueError("strict mode requires integers a, b")
        else:
            lam = self.lambdas
            if len(lam) < 1 or any(l2 <= l1 for l1, l2 in zip(lam, lam[1:])):
                raise ValueError("relaxed mode requires a strictly increasing lambda list")
            if any(int(l) != l or l < 1 for l in lam):
                raise ValueError("lambda list must be positive integers")
        if self.N_bound < 1 or self.L_bound < 1:
            raise ValueError("N and L bounds must be >= 1")

    # -- derived constants ---------------------------------------------------

    @property
    def M_L(self) -> float:
        N, L = self.N_bound, self.L_bound
        return self.C_const * (N * N + N + L)

    @property
    def max_level(self) -> int | None:
        return None if self.mode == "strict" else len(self.lambdas) - 1

    def lam(self, n: int):
        if n < 0:
            raise ValueError("level must be >= 0")
        if self.mode == "strict":
            return self.a ** (self.b ** n)   # exact int, may be astronomically big
        if n >= len(self.lambdas):
            raise ValueError(f"relaxed schedule has {len(self.lambdas)} levels; level {n} requested")
        return self.lambdas[n]

    def log_lam(self, n: int) -> float:
        if self.mode == "strict":
            return (self.b ** n) * math.log(self.a)
        return math.log(self.lam(n))

    def r(self, n: int) -> float:
        # M_L (lambda_0/lambda_n)^beta, in logs (strict lambdas overflow floats)
        return self.M_L * math.exp(self.beta * (self.log_lam(0) - self.log_lam(n)))

    def ell(self, n: int) -> float:
        return math.exp(-self.log_lam(n))

    def mu(self, n: int) -> float:
        if n < 1:
            raise ValueError("mu_n needs n >= 1")
        return math.exp(0.5 * (self.log_lam(n) + self.log_lam(n - 1)))

    def implied_ab(self) -> tuple[float, float]:
        """(a, b) a relaxed list would correspond to via lambda_0 = a, lambda_1 = a^b."""
        lam0 = float(self.lam(0))
        if self.max_level is not None and self.max_level >= 1 and lam0 > 1.0:
            return lam0, math.log(self.lam(1)) / math.log(lam0)
        return lam0, float("nan")

    def replace(self, **kw) -> "ParamSchedule":
        return dataclasses.replace(self, **kw)


def _inequalities(a: float, b: float, p: ParamSchedule) -> list[BoundCheck]:
    """The construction's parameter system, each with its slack."""
    abb = math.exp(b * p.beta * math.log(a)) if a > 1 else float("nan")
    checks = [
        BoundCheck("wave-amplitude-sum", "a^(b*beta) >= 16", abb >= 16.0, abb - 16.0),
        BoundCheck("dissipation-exponent", "beta < 3/2 - gamma",
                   p.beta < 1.5 - p.gamma, (1.5 - p.gamma) - p.beta),
        BoundCheck("mollification-room", "1/b + beta < 1/2",
                   1.0 / b + p.beta < 0.5, 0.5 - (1.0 / b + p.beta)),
        BoundCheck("scale-separation",
                   "min(1-alpha-kappa, eta-1/2, 2-gamma) > b*beta",
                   min(1.0 - p.alpha - p.kappa, p.eta - 0.5, 2.0 - p.gamma) > b * p.beta,
                   min(1.0 - p.alpha - p.kappa, p.eta - 0.5, 2.0 - p.gamma) - b * p.beta),
        BoundCheck("beta-range", "0 < beta < 1", 0.0 < p.beta < 1.0,
                   min(p.beta, 1.0 - p.beta)),
        BoundCheck("gamma-range", "0 <= gamma < 3/2", 0.0 <= p.gamma < 1.5,
                   min(p.gamma, 1.5 - p.gamma) if p.gamma >= 0 else -p.gamma),
        BoundCheck("alpha-range", "alpha < 1", p.alpha < 1.0, 1.0 - p.alpha),
        BoundCheck("kappa-positive", "kappa > 0", p.kappa > 0.0, p.kappa),
        BoundCheck("eta-range", "eta > 1/2", p.eta > 0.5, p.eta - 0.5),
    ]
    return checks


def _schedule_checks(p: ParamSchedule, levels: int) -> list[BoundCheck]:
    checks = []
    lams = [p.log_lam(n) for n in range(levels + 1)]
    incr = all(x < y for x, y in zip(lams, lams[1:]))
    checks.append(BoundCheck("lambda-increasing", "lambda_n strictly increasing",
                             incr, min((y - x for x, y in zip(lams, lams[1:])), default=1.0)))
    rs = [p.r(n) for n in range(levels + 1)]
    decr = all(x > y for x, y in zip(rs, rs[1:]))
    checks.append(BoundCheck("r-decreasing", "r_n strictly decreasing",
                             decr, min((x - y for x, y in zip(rs, rs[1:])), default=1.0)))
    if levels >= 1:
        mu_ok = all(p.mu(n) < math.exp(p.log_lam(n)) for n in range(1, levels + 1))
        checks.append(BoundCheck("mu-below-lambda", "mu_n < lambda_n", mu_ok,
                                 min(math.exp(p.log_lam(n)) - p.mu(n)
                                     for n in range(1, levels + 1))))
    return checks


def validate_params(p: ParamSchedule, levels: int | None = None) -> ValidationReport:
    """Inequality report; strict mode fails hard, relaxed mode annotates.

    In relaxed mode the (a, b) implied by the first two list entries are used
    for the strict inequalities, and violations are informational.
    """
    if levels is None:
        levels = p.max_level if p.max_level is not None else 3
    notes: list[str] = []
    if p.mode == "strict":
        checks = _inequalities(p.a, p.b, p) + _schedule_checks(p, levels)
        return ValidationReport("strict", tuple(checks))
    a_imp, b_imp = p.implied_ab()
    notes.append(f"relaxed schedule lambdas={p.lambdas}; implied a={a_imp:g}, b={b_imp:g}")
    if len(p.lambdas) >= 3 and not math.isnan(b_imp):
        exact_form = all(
            abs(p.log_lam(n) - (b_imp ** n) * math.log(a_imp)) < 1e-9 * p.log_lam(n)
            for n in range(len(p.lambdas)))
        if not exact_form:
            notes.append("lambda list is not of the a^(b^n) form; strict inequalities "
                         "evaluated with the implied (a, b) are informational only")
    checks = _inequalities(a_imp, b_imp, p) if not math.isnan(b_imp) else _inequalities(2.0, 2.0, p)
    sched = _schedule_checks(p, levels)
    flagged = [c.name for c in checks if not c.passed]
    if flagged:
        notes.append("relaxed mode: recorded (not enforced) violations: " + ", ".join(flagged))
    return ValidationReport("relaxed", tuple(checks) + tuple(sched), tuple(notes))


def require_valid_strict(p: ParamSchedule, levels: int | None = None) -> ValidationReport:
    """Hard gate used by strict-mode entry points."""
    rep = validate_params(p, levels)
    if p.mode == "strict" and not rep.ok:
        raise ValueError("strict parameter validation failed: " + ", ".join(rep.violations))
    return rep

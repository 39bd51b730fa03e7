"""Independent checks of the symbolic expansions.

Concrete polynomials are differentiated directly in exact arithmetic and
compared with the value the symbolic expansion predicts at the same point.
The brute-force sweeps compare closed-form multiplicities against explicit
counts of collapsing set partitions.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from random import Random
from typing import Iterable, Iterator, Optional, Sequence

from rich.console import Console
from rich.markup import escape
from rich.table import Table

from ..config import current_guards, resolve_limit
from ..core import (
    Multiset,
    bell,
    collapse_census,
    enumerate_multiset_partitions,
    multiplicity,
)
from ..cumulants import (
    CumulantAssignment,
    MomentAssignment,
    collapse_cumulant_identity_check,
    cumulant_table,
    moment_from_cumulants,
    moment_table,
)
from ..errors import GuardExceededError, MissingVariableError
from ..expansion import (
    expand_by_differentiation,
    expand_composition,
    expand_product,
    expand_product_by_differentiation,
)
from .polynomial import T, Polynomial, compose, random_polynomial, random_rational


@dataclass
class EvaluationContext:
    """A rational point plus the concrete functions to differentiate.

    f_poly is univariate in the placeholder variable T; y_poly, u_poly and
    v_poly are polynomials in x1, x2, ...
    """
    assignment: dict[int, Fraction]
    y_poly: Optional[Polynomial] = None
    f_poly: Optional[Polynomial] = None
    u_poly: Optional[Polynomial] = None
    v_poly: Optional[Polynomial] = None

    def check_covers(self, *polys: Polynomial) -> None:
        """Raise MissingVariableError unless every variable has a value."""
        for poly in polys:
            for var in sorted(poly.variables - {T}):
                if var not in self.assignment:
                    raise MissingVariableError(var)


@dataclass
class VerificationReport:
    """Outcome of one oracle comparison."""
    kind: str
    signature: Multiset
    direct: Fraction  # iterated differentiation of the concrete function
    expanded: Fraction  # symbolic expansion instantiated at the same point
    terms: int = 0
    seed: Optional[int] = None

    @property
    def ok(self) -> bool:
        return self.direct == self.expanded

    def to_dict(self) -> dict:
        return {
            'kind': self.kind,
            'signature': {str(var): count for var, count in self.signature.entries},
            'direct': str(self.direct),
            'expanded': str(self.expanded),
            'terms': self.terms,
            'seed': self.seed,
            'ok': self.ok,
        }


@dataclass
class SweepReport:
    """Outcome of a family of checks."""
    kind: str
    max_size: int
    checked: int = 0
    mismatches: list[str] = field(default_factory=list)
    seed: Optional[int] = None

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            'kind': self.kind,
            'max_size': self.max_size,
            'checked': self.checked,
            'mismatches': list(self.mismatches),
            'seed': self.seed,
            'ok': self.ok,
        }


def _check_cap(tau: Multiset, max_size: Optional[int]) -> None:
    limit = resolve_limit(max_size, 'max_oracle_composition')
    if tau.size > limit:
        raise GuardExceededError("Polynomial oracle signature", tau.size, limit)


def differentiate(p: Polynomial, order: Iterable[int]) -> Polynomial:
    """Apply d/dx_var for each var in order."""
    for var in order:
        p = p.partial(var)
    return p


def verify_composition(
    tau: Multiset,
    ctx: EvaluationContext,
    max_size: Optional[int] = None,
    order: Optional[Sequence[int]] = None,
) -> VerificationReport:
    """Compare d_tau f(y) computed directly with the expansion's prediction.

    Args:
        tau: Derivative signature
        ctx: Point, y_poly and univariate f_poly
        max_size: Override for the max_oracle_composition guard
        order: Differentiation order for the direct side (defaults to ascending)

    Raises:
        GuardExceededError: If |tau| exceeds the oracle cap
        MissingVariableError: If the point misses a variable of y_poly
    """
    _check_cap(tau, max_size)
    if ctx.y_poly is None or ctx.f_poly is None:
        raise ValueError("verify_composition needs y_poly and f_poly")
    ctx.check_covers(ctx.y_poly)
    point = ctx.assignment

    order = tuple(tau.elements()) if order is None else tuple(order)
    direct = differentiate(compose(ctx.f_poly, ctx.y_poly), order).evaluate(point)

    expansion = expand_composition(tau, max_size=tau.size)
    y_value = ctx.y_poly.evaluate(point)
    f_derivatives = [ctx.f_poly]
    part_values: dict[Multiset, Fraction] = {}
    expanded = Fraction(0)
    for term in expansion.terms:
        while len(f_derivatives) <= term.f_order:
            f_derivatives.append(f_derivatives[-1].partial(T))
        value = Fraction(term.coefficient) * f_derivatives[term.f_order].evaluate({T: y_value})
        for part, times in term.shape.parts:
            if part not in part_values:
                part_values[part] = differentiate(ctx.y_poly, part.elements()).evaluate(point)
            value *= part_values[part] ** times
        expanded += value

    return VerificationReport('composition', tau, direct, expanded, len(expansion.terms))


def verify_product(
    tau: Multiset,
    ctx: EvaluationContext,
    max_size: Optional[int] = None,
    order: Optional[Sequence[int]] = None,
) -> VerificationReport:
    """Compare d_tau (uv) computed directly with the expansion's prediction.

    Raises:
        GuardExceededError: If |tau| exceeds the oracle cap
        MissingVariableError: If the point misses a variable of u_poly or v_poly
    """
    _check_cap(tau, max_size)
    if ctx.u_poly is None or ctx.v_poly is None:
        raise ValueError("verify_product needs u_poly and v_poly")
    ctx.check_covers(ctx.u_poly, ctx.v_poly)
    point = ctx.assignment

    order = tuple(tau.elements()) if order is None else tuple(order)
    direct = differentiate(ctx.u_poly * ctx.v_poly, order).evaluate(point)

    expansion = expand_product(tau)
    expanded = Fraction(0)
    for term in expansion.terms:
        u_value = differentiate(ctx.u_poly, term.u_part.elements()).evaluate(point)
        v_value = differentiate(ctx.v_poly, term.v_part.elements()).evaluate(point)
        expanded += term.coefficient * u_value * v_value

    return VerificationReport('product', tau, direct, expanded, len(expansion.terms))


def random_signature(rng: Random, max_size: int, num_vars: int = 3) -> Multiset:
    """A random non-empty signature over x1..x_num_vars."""
    size = rng.randint(1, max_size)
    return Multiset.of(*(rng.randint(1, num_vars) for _ in range(size)))


def random_point(rng: Random, variables: Iterable[int]) -> dict[int, Fraction]:
    return {var: random_rational(rng) for var in variables}


def run_random_trials(
    kind: str,
    trials: int = 50,
    seed: Optional[int] = None,
    max_size: Optional[int] = None,
    max_degree: int = 4,
    num_vars: int = 3,
) -> tuple[SweepReport, list[VerificationReport]]:
    """Run randomized composition or product checks.

    Args:
        kind: "composition" or "product"
        trials: Number of random instances
        seed: Random seed (defaults to the configured guard seed)
        max_size: Largest signature size (defaults to the oracle cap)
        max_degree: Largest total degree of the random polynomials
        num_vars: Variables x1..x_num_vars used by signatures and polynomials

    Returns:
        (summary, per-trial reports)

    Raises:
        ValueError: If kind is unknown or the size limit is below 1
    """
    if kind not in ('composition', 'product'):
        raise ValueError(f"Unknown trial kind '{kind}'. Available: composition, product")
    seed = current_guards().seed if seed is None else seed
    limit = resolve_limit(max_size, 'max_oracle_composition')
    if limit < 1:
        raise ValueError(f"Random trials need signatures of size at least 1, got a limit of {limit}")
    rng = Random(seed)
    variables = range(1, num_vars + 1)

    summary = SweepReport(kind, limit, seed=seed)
    reports = []
    for index in range(trials):
        tau = random_signature(rng, limit, num_vars)
        point = random_point(rng, variables)
        order = list(tau.elements())
        rng.shuffle(order)
        if kind == 'composition':
            ctx = EvaluationContext(
                point,
                y_poly=random_polynomial(rng, variables, max_degree),
                f_poly=random_polynomial(rng, [T], max_degree),
            )
            report = verify_composition(tau, ctx, max_size=limit, order=order)
        else:
            ctx = EvaluationContext(
                point,
                u_poly=random_polynomial(rng, variables, max_degree),
                v_poly=random_polynomial(rng, variables, max_degree),
            )
            report = verify_product(tau, ctx, max_size=limit, order=order)
        report.seed = seed
        reports.append(report)
        summary.checked += 1
        if not report.ok:
            summary.mismatches.append(
                f"trial {index}: {tau} direct={report.direct} expanded={report.expanded}"
            )
    return summary, reports


def signatures_up_to(max_size: int, min_size: int = 0) -> Iterator[Multiset]:
    """Every multiplicity shape with min_size <= |tau| <= max_size.

    Shapes are the compositions (k_1, ..., k_r) of each size, realised on x1..xr.
    """
    for size in range(min_size, max_size + 1):
        if size == 0:
            yield Multiset()
            continue
        # Compositions of size correspond to subsets of the size-1 gaps
        for cuts in product((False, True), repeat=size - 1):
            counts = []
            run = 1
            for cut in cuts:
                if cut:
                    counts.append(run)
                    run = 1
                else:
                    run += 1
            counts.append(run)
            yield Multiset(tuple((var, k) for var, k in enumerate(counts, start=1)))


def sweep_multiplicities(max_size: Optional[int] = None) -> SweepReport:
    """Compare the closed form with brute-force counts for every |tau| <= max_size.

    Also checks that every partition of tau is reached by some set partition
    and that the multiplicities add up to the Bell number.

    Raises:
        GuardExceededError: If the sweep size is above the max_set_size guard
    """
    limit = resolve_limit(max_size, 'max_oracle_sweep')
    set_limit = current_guards().max_set_size
    if limit > set_limit:
        raise GuardExceededError("Set-partition sweep", limit, set_limit)
    report = SweepReport('multiplicity', limit)
    for tau in signatures_up_to(limit):
        census = collapse_census(tau)
        partitions = list(enumerate_multiset_partitions(tau))
        if set(census) != set(partitions):
            report.mismatches.append(f"{tau}: collapse images differ from enumerated partitions")
        total = 0
        for mp in partitions:
            formula = multiplicity(tau, mp)
            total += formula
            report.checked += 1
            if formula != census.get(mp, 0):
                report.mismatches.append(
                    f"{tau} -> {mp}: formula {formula}, brute force {census.get(mp, 0)}"
                )
        if total != bell(tau.size):
            report.mismatches.append(f"{tau}: multiplicities sum to {total}, not B_{tau.size}")
    return report


def sweep_paths(
    max_size: int = 7,
    orders: int = 3,
    seed: Optional[int] = None,
) -> SweepReport:
    """Check that differentiating one variable at a time, in random orders,
    reproduces the closed-form composition and product expansions."""
    seed = current_guards().seed if seed is None else seed
    rng = Random(seed)
    report = SweepReport('paths', max_size, seed=seed)
    for tau in signatures_up_to(max_size, min_size=1):
        composition = expand_composition(tau, max_size=max_size)
        product_expansion = expand_product(tau)
        for _ in range(orders):
            order = list(tau.elements())
            rng.shuffle(order)
            report.checked += 1
            if expand_by_differentiation(order) != composition:
                report.mismatches.append(f"{tau}: composition path along {order} differs")
            if expand_product_by_differentiation(order) != product_expansion:
                report.mismatches.append(f"{tau}: product path along {order} differs")
    return report


def sweep_cumulants(
    max_size: int = 6,
    seed: Optional[int] = None,
    bell_up_to: int = 10,
    collapse_up_to: int = 5,
) -> SweepReport:
    """Check the moment/cumulant conversions.

    Covers unit cumulants giving Bell-number moments, the exact round trip on
    random joint cumulants for every shape up to max_size, and the identity
    between n distinct ids collapsed onto one and the univariate moment.
    """
    seed = current_guards().seed if seed is None else seed
    rng = Random(seed)
    report = SweepReport('cumulants', max_size, seed=seed)

    unit = CumulantAssignment.univariate([1] * bell_up_to)
    for n in range(bell_up_to + 1):
        report.checked += 1
        moment = moment_from_cumulants(Multiset.repeated(1, n) if n else Multiset(), unit)
        if moment != bell(n):
            report.mismatches.append(f"unit cumulants: E(X^{n}) = {moment}, not {bell(n)}")

    for tau in signatures_up_to(max_size, min_size=1):
        kappa = CumulantAssignment({
            part: random_rational(rng) for part in tau.submultisets() if part
        })
        moments = MomentAssignment(moment_table(tau, kappa))
        recovered = cumulant_table(tau, moments)
        report.checked += 1
        if recovered != kappa.joint:
            report.mismatches.append(f"{tau}: cumulants do not survive the moment round trip")

    kappa = CumulantAssignment.univariate([random_rational(rng) for _ in range(collapse_up_to)])
    for n in range(1, collapse_up_to + 1):
        check = collapse_cumulant_identity_check(n, kappa)
        report.checked += 1
        if not check.ok:
            report.mismatches.append(
                f"collapse of {n} ids: distinct {check.distinct}, collapsed {check.collapsed}"
            )
    return report


def print_summary(reports: Sequence[SweepReport], console: Optional[Console] = None) -> None:
    """Print a table of sweep outcomes.

    Args:
        reports: Sweep reports to list
        console: Optional Rich console
    """
    if console is None:
        console = Console()

    table = Table(title="Verification")
    table.add_column("Kind", style="cyan")
    table.add_column("Max size", justify="right")
    table.add_column("Checked", justify="right")
    table.add_column("Mismatches", justify="right")
    table.add_column("Seed", justify="right")

    for report in reports:
        style = "green" if report.ok else "red"
        table.add_row(
            report.kind,
            str(report.max_size),
            str(report.checked),
            f"[{style}]{len(report.mismatches)}[/]",
            "-" if report.seed is None else str(report.seed),
        )

    console.print(table)
    for report in reports:
        for line in report.mismatches[:20]:
            console.print(f"[red]{report.kind}:[/] {escape(line)}")


__all__ = [
    'EvaluationContext',
    'VerificationReport',
    'SweepReport',
    'differentiate',
    'verify_composition',
    'verify_product',
    'random_signature',
    'random_point',
    'run_random_trials',
    'signatures_up_to',
    'sweep_multiplicities',
    'sweep_paths',
    'sweep_cumulants',
    'print_summary',
]

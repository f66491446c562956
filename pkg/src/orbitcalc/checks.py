"""Self-checks beyond the collapse oracle: closed-form tables and duality laws.

Each check returns a list of failure descriptions, empty when it passes.
Only data of total size at most ``max_size`` is examined.
"""

from __future__ import annotations

from itertools import combinations

from .arthur import (
    case_I_eta,
    case_I_parameter,
    case_III_eta,
    case_III_parameter,
    fourier_bound,
    generic_parameter,
    nonsingular_bound,
    simple_type_eta,
    simple_type_legal,
    simple_type_parameter,
)
from .collapse import OracleReport, ls_dual, run_oracle_suite, special_expansion
from .duality import bv_dual
from .errors import CalcError
from .groups import (
    Kind,
    SO_even,
    SO_odd,
    Sp,
    _special,
    _valid,
    has_orthogonal_parity,
    has_symplectic_parity,
    principal_partition,
)
from .partition import dominance_leq, enumerate_partitions, exponent

SELFCHECK_TARGET = "selfcheck"


def _groups_up_to(max_size: int):
    for n in range(max_size + 1):
        if n % 2:
            yield SO_odd(n // 2)
        else:
            yield Sp(n // 2)
            yield SO_even(n // 2)


def check_simple_tables(max_size: int) -> list[str]:
    failures = []
    for G0 in (Sp, SO_odd, SO_even):
        for n in range(max_size // 2 + 1):
            G = G0(n)
            N = G.dual_partition_size
            if N > max_size or N == 0:
                continue
            for a in range(1, N + 1):
                b, rem = divmod(N, a)
                if rem or not simple_type_legal(G, a, b):
                    continue
                got = fourier_bound(simple_type_parameter(G, a, b))
                want = simple_type_eta(G, a, b)
                if got != want:
                    failures.append(f"simple {G} a={a} b={b}: {got} != {want}")
    return failures


def check_case_families(max_size: int) -> list[str]:
    failures = []
    for a in range(1, max_size + 1):
        for b in range(1, max_size + 1):
            for m in range(max_size + 1):
                if 2 * a * b + 2 * m > max_size or a > 2 * m + 1:
                    continue
                got, want = fourier_bound(case_I_parameter(a, b, m)), case_I_eta(a, b, m)
                if got != want:
                    failures.append(f"case I a={a} b={b} m={m}: {got} != {want}")
                if a % 2 == 1 and a <= 2 * m:
                    p = exponent((2 * m, 1), (a, 2 * b))
                    got = special_expansion(p, Sp(p.size // 2))
                    if got != want:
                        failures.append(f"expansion of {p}: {got} != {want}")
    for k in range(1, max_size + 1):
        for b in range(1, max_size + 1):
            for m in range(max_size + 1):
                if 4 * k * b + 2 * m > max_size:
                    continue
                got, want = fourier_bound(case_III_parameter(k, b, m)), case_III_eta(k, b, m)
                if got != want:
                    failures.append(f"case III k={k} b={b} m={m}: {got} != {want}")
    return failures


def check_generic(max_size: int) -> list[str]:
    failures = []
    for G in _groups_up_to(max_size):
        if G.n == 0:
            continue
        got, want = fourier_bound(generic_parameter(G)), principal_partition(G)
        if got != want:
            failures.append(f"generic {G}: {got} != {want}")
    return failures


def nonsingular_closed_form(G):
    """Expected expansion of the non-singular partition, from the published table."""
    if G.kind is Kind.SO_ODD:
        e, r = divmod(G.n, 2)
        if e == 0:
            return None
        return exponent((3, 1), (2, 2 * e - 2), (1, 2 if r == 0 else 4))
    if G.kind is Kind.SP:
        return exponent((2, G.n))
    e, r = divmod(G.n, 2)
    return exponent((2, 2 * e), (1, 2 * r))


def check_nonsingular(max_size: int) -> list[str]:
    failures = []
    for G in _groups_up_to(max_size):
        want = nonsingular_closed_form(G)
        if G.n == 0 or want is None:
            continue
        got = nonsingular_bound(G)
        if got != want:
            failures.append(f"non-singular bound {G}: {got} != {want}")
    return failures


def check_specials(max_size: int) -> list[str]:
    """Specials are exactly the same-type duality image and its fixed points."""
    failures = []
    for G in _groups_up_to(max_size):
        valid = [p for p in enumerate_partitions(G.partition_size) if _valid(p, G)]
        special = {p for p in valid if _special(p, G)}
        image = {ls_dual(p, G) for p in valid}
        fixed = {p for p in valid if ls_dual(ls_dual(p, G), G) == p}
        for p in sorted(special ^ image, key=lambda q: q.parts):
            failures.append(f"specialness {G} {p}: predicate={p in special}, duality image={p in image}")
        for p in sorted(special ^ fixed, key=lambda q: q.parts):
            failures.append(f"specialness {G} {p}: predicate={p in special}, double dual fixes={p in fixed}")
    return failures


def _dual_inputs(G):
    parity = has_symplectic_parity if G.kind is Kind.SO_ODD else has_orthogonal_parity
    return [q for q in enumerate_partitions(G.dual_partition_size) if parity(q)]


def check_duality(max_size: int) -> list[str]:
    failures = []
    for G in _groups_up_to(max_size):
        if max(G.partition_size, G.dual_partition_size) > max_size:
            continue
        inputs = _dual_inputs(G)
        images = {q: bv_dual(q, G) for q in inputs}
        for q, r in images.items():
            if not (_valid(r, G) and _special(r, G)):
                failures.append(f"bv_dual {G} {q} -> {r} is not special")
        for q1, q2 in combinations(inputs, 2):
            for lo, hi in ((q1, q2), (q2, q1)):
                if dominance_leq(lo, hi) and not dominance_leq(images[hi], images[lo]):
                    failures.append(f"bv_dual {G} not order-reversing on {lo} <= {hi}")
    # round trips between the SO_odd / Sp pair and within SO_even
    for n in range(max_size // 2 + 1):
        if 2 * n + 1 <= max_size:
            for q in enumerate_partitions(2 * n + 1):
                if _valid(q, SO_odd(n)) and _special(q, SO_odd(n)):
                    back = bv_dual(bv_dual(q, Sp(n)), SO_odd(n))
                    if back != q:
                        failures.append(f"round trip SOodd->Sp->SOodd {q} -> {back}")
        if 2 * n <= max_size:
            for q in enumerate_partitions(2 * n):
                if _valid(q, Sp(n)) and _special(q, Sp(n)):
                    back = bv_dual(bv_dual(q, SO_odd(n)), Sp(n))
                    if back != q:
                        failures.append(f"round trip Sp->SOodd->Sp {q} -> {back}")
                if _valid(q, SO_even(n)) and _special(q, SO_even(n)):
                    back = bv_dual(bv_dual(q, SO_even(n)), SO_even(n))
                    if back != q:
                        failures.append(f"round trip SOeven {q} -> {back}")
    return failures


CHECKS = {
    "simple_tables": check_simple_tables,
    "case_families": check_case_families,
    "generic": check_generic,
    "nonsingular": check_nonsingular,
    "specials": check_specials,
    "duality": check_duality,
}


def selfcheck(max_size: int) -> OracleReport:
    """Oracle suite plus every check above, folded into one report."""
    report = run_oracle_suite(max_size)
    report.target = SELFCHECK_TARGET
    for name, check in CHECKS.items():
        try:
            failures = check(max_size)
        except CalcError as exc:
            # a broken invariant inside a check is itself a failure
            failures = [f"raised {exc.tag}: {exc}"]
        for failure in failures:
            report.counterexamples.append([f"{name}: {failure}", None, None])
    return report

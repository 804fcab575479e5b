"""Verification suites for the linear relations, and the axiomatic evaluator.

Each verify_* function sweeps every admissible (path, point) instance of
one family of relations at a given size and reports the failures (an
empty failure list means the suite passed).  The suites accept an
injectable ``llt_fn`` so that negative controls (a deliberately
corrupted polynomial) can demonstrate their sensitivity.

``recursion_evaluate`` computes the same symmetric functions from the
axioms alone: the initial condition on n d^k e, multiplicativity at
diagonal returns, the unicellular relation, and the generalized bounce
relations, following a triple induction on (size, number of east steps,
x + z of the first east step).
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .coeffring import CoeffQT
from .errors import BoundExceeded, NonTermination
from .llt import chromatic, llt
from .partitions import compositions
from .schroeder import SchroederPath, bounce_at, enumerate_paths, parse, reverse
from .symfunc import SymFunc

LltFn = Callable[[SchroederPath], SymFunc]

_RECURSION_CACHE: dict[str, SymFunc] = {}
_EVAL_DEPTH_BOUND = 4000

Q = CoeffQT.q()
ONE = CoeffQT.one()


@dataclass
class RelationReport:
    """Outcome of one verification suite: passed iff failures is empty."""

    suite: str
    instances: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_obj(self) -> dict:
        return {
            "suite": self.suite,
            "instances": self.instances,
            "passed": self.passed,
            "failures": [
                {
                    "paths": f["paths"],
                    "point": list(f["point"]) if f["point"] is not None else None,
                    "discrepancy": f["discrepancy"].to_obj(),
                }
                for f in self.failures
            ],
        }


def _e_value(fn: LltFn, word: str, cache: dict[str, SymFunc]) -> SymFunc:
    out = cache.get(word)
    if out is None:
        out = fn(parse(word)).convert("e")
        cache[word] = out
    return out


def _check_instance(
    report: RelationReport,
    fn: LltFn,
    cache: dict[str, SymFunc],
    point,
    lhs_word: str,
    rhs_terms: list[tuple[CoeffQT, str]],
) -> None:
    """Record an instance lhs = sum(coeff * F(word)) and its discrepancy, if any."""
    report.instances += 1
    acc = _e_value(fn, lhs_word, cache)
    for coeff, word in rhs_terms:
        acc = acc - _e_value(fn, word, cache).scale(coeff)
    if not acc.is_zero():
        report.failures.append(
            {
                "paths": [lhs_word] + [w for _, w in rhs_terms],
                "point": point,
                "discrepancy": acc,
            }
        )


def verify_unicellular(n: int, llt_fn: LltFn | None = None) -> RelationReport:
    """F_{U n e V} - F_{U e n V} = (q - 1) F_{U d V} over all U d V of size n."""
    fn = llt_fn or llt
    cache: dict[str, SymFunc] = {}
    report = RelationReport("unicellular")
    for p in enumerate_paths(n):
        word = p.word
        for i, step in enumerate(word):
            if step != "d":
                continue
            u, v = word[:i], word[i + 1 :]
            report.instances += 1
            acc = (
                _e_value(fn, u + "ne" + v, cache)
                - _e_value(fn, u + "en" + v, cache)
                - _e_value(fn, word, cache).scale(Q - 1)
            )
            if not acc.is_zero():
                report.failures.append(
                    {
                        "paths": [u + "ne" + v, u + "en" + v, word],
                        "point": None,
                        "discrepancy": acc,
                    }
                )
    return report


def _bounce_instances(n: int, kinds: tuple[str, ...], single_point: bool, v_nd_only: bool) -> Iterator[tuple[str, tuple[int, int], str, tuple[str, str, str, str, str]]]:
    """Yield (word, point, st, decomposition) for admissible bounce instances.

    An instance requires the bounce decomposition at a point (x, z) with
    x + 1 < z to end in s3 s4 = de with s1 s2 among the requested kinds;
    optionally the bounce path must have a single bounce point and the
    middle segment must avoid east steps.
    """
    for p in enumerate_paths(n):
        for (x, z) in p.points():
            if not (1 <= x and x + 1 < z):
                continue
            data = bounce_at(p, (x, z))
            if data.decomposition is None:
                continue
            u, s12, v, s34, w = data.decomposition
            if s34 != "de" or s12 not in kinds:
                continue
            if single_point and len(data.bounce_points) != 1:
                continue
            if not single_point and len(data.bounce_points) < 2:
                continue
            if v_nd_only and ("e" in v):
                continue
            yield p.word, (x, z), s12, data.decomposition


def _bounce_identity(st: str, decomposition) -> list[tuple[CoeffQT, str]]:
    u, _s12, v, _s34, w = decomposition
    if st == "nn":
        return [(Q, u + "nn" + v + "ed" + w)]
    if st == "dn":
        return [(ONE, u + "nd" + v + "ed" + w)]
    if st == "nd":
        return [(Q - 1, u + "nd" + v + "ed" + w), (Q, u + "dn" + v + "ed" + w)]
    raise AssertionError(st)


def _run_bounce_suite(
    name: str,
    n: int,
    kinds: tuple[str, ...],
    single_point: bool,
    v_nd_only: bool,
    llt_fn: LltFn | None,
    reversed_paths: bool = False,
) -> RelationReport:
    fn = llt_fn or llt
    cache: dict[str, SymFunc] = {}
    report = RelationReport(name)
    for word, point, st, decomposition in _bounce_instances(n, kinds, single_point, v_nd_only):
        terms = _bounce_identity(st, decomposition)
        lhs = word
        if reversed_paths:
            lhs = reverse(parse(lhs)).word
            terms = [(c, reverse(parse(w)).word) for c, w in terms]
        _check_instance(report, fn, cache, point, lhs, terms)
    return report


def verify_bounce_A(n: int, llt_fn: LltFn | None = None) -> RelationReport:
    """Single-bounce-point relations with s1 s2 in {nn, dn} and V in {n,d}*."""
    return _run_bounce_suite("bounceA", n, ("nn", "dn"), True, True, llt_fn)


def verify_bounce_B(n: int, llt_fn: LltFn | None = None) -> RelationReport:
    """Single-bounce-point relations with s1 s2 in {nn, nd} and V in {n,d}*."""
    return _run_bounce_suite("bounceB", n, ("nn", "nd"), True, True, llt_fn)


def verify_bounce_nd(n: int, llt_fn: LltFn | None = None) -> RelationReport:
    """The two-term nd relation with coefficients (q-1) and q."""
    return _run_bounce_suite("bounceND", n, ("nd",), True, True, llt_fn)


def verify_generalized_bounce(n: int, llt_fn: LltFn | None = None) -> RelationReport:
    """The three bounce relations at points whose bounce path has >= 2 bounce points."""
    return _run_bounce_suite("generalized", n, ("nn", "dn", "nd"), False, True, llt_fn)


def verify_extended_bounce(n: int, llt_fn: LltFn | None = None) -> RelationReport:
    """Optional wider scope: single-bounce relations with east steps allowed in V.

    Reported separately; not part of the acceptance gate.
    """
    fn = llt_fn or llt
    cache: dict[str, SymFunc] = {}
    report = RelationReport("extended")
    for word, point, st, decomposition in _bounce_instances(n, ("nn", "dn", "nd"), True, False):
        if "e" not in decomposition[2]:
            continue  # covered by the standard suites
        terms = _bounce_identity(st, decomposition)
        _check_instance(report, fn, cache, point, word, terms)
    return report


def sarrus_terms(u: str, v: str, w: str) -> tuple[list[str], list[str]]:
    """The six path words of the cross-product identity, split by sign.

    Expanding the formal 3x3 determinant with rows {u}, {enn v, nen v,
    nne v}, {een w, ene w, nee w} by Sarrus' rule pairs each prefix
    arrangement with a suffix arrangement; the positive diagonal products
    and the negative ones form the two sides of the six-term identity.
    """
    mids = ["enn", "nen", "nne"]
    ends = ["een", "ene", "nee"]
    plus = [u + mids[i] + v + ends[(i + 1) % 3] + w for i in range(3)]
    minus = [u + mids[i] + v + ends[(i + 2) % 3] + w for i in range(3)]
    return plus, minus


def verify_dyck_relations(n: int, llt_fn: LltFn | None = None) -> RelationReport:
    """The modular relation and the six-term relation on all admissible points."""
    fn = llt_fn or llt
    cache: dict[str, SymFunc] = {}
    report = RelationReport("dyck")
    for p in enumerate_paths(n):
        word = p.word
        for (x, z) in p.points():
            if not (1 <= x and x + 1 < z):
                continue
            data = bounce_at(p, (x, z))
            if data.decomposition is None or len(data.bounce_points) != 1:
                continue
            u, s12, vseg, s34, w = data.decomposition
            if s34 != "ee" or not vseg or vseg[-1] != "n":
                continue
            v = vseg[:-1]
            if s12 == "nn":
                # modular relation
                _check_instance(
                    report,
                    fn,
                    cache,
                    (x, z),
                    u + "nn" + v + "nee" + w,
                    [(Q + 1, u + "nn" + v + "ene" + w), (-Q, u + "nn" + v + "een" + w)],
                )
            if s12 == "en" and u and u[-1] == "n":
                # six-term relation; check it and its Sarrus form agree
                u0 = u[:-1]
                plus, minus = sarrus_terms(u0, v, w)
                assert word in plus or word in minus
                report.instances += 1
                acc = SymFunc.zero("e")
                for pw in plus:
                    acc = acc + _e_value(fn, pw, cache)
                for mw in minus:
                    acc = acc - _e_value(fn, mw, cache)
                if not acc.is_zero():
                    report.failures.append(
                        {"paths": plus + minus, "point": (x, z), "discrepancy": acc}
                    )
    return report


def verify_dual_bounce(n: int, llt_fn: LltFn | None = None) -> RelationReport:
    """Every bounce-relation instance holds with all paths reversed."""
    report = RelationReport("dual")
    for kinds, single in ((("nn", "dn"), True), (("nd",), True), (("nn", "dn", "nd"), False)):
        sub = _run_bounce_suite("dual", n, kinds, single, True, llt_fn, reversed_paths=True)
        report.instances += sub.instances
        report.failures.extend(sub.failures)
    return report


def verify_chromatic_relations(n: int, llt_fn: LltFn | None = None) -> RelationReport:
    """Dyck relations, multiplicativity, and the path-graph initial condition
    for the chromatic quasisymmetric functions."""
    fn = llt_fn or chromatic
    cache: dict[str, SymFunc] = {}
    report = RelationReport("chromatic")
    for p in enumerate_paths(n, dyck_only=True):
        word = p.word
        for (x, z) in p.points():
            if not (1 <= x and x + 1 < z):
                continue
            data = bounce_at(p, (x, z))
            if data.decomposition is None:
                continue
            u, s12, vseg, s34, w = data.decomposition
            if s34 != "ee" or not vseg or vseg[-1] != "n":
                continue
            v = vseg[:-1]
            if s12 == "nn":
                _check_instance(
                    report,
                    fn,
                    cache,
                    (x, z),
                    u + "nn" + v + "nee" + w,
                    [(Q + 1, u + "nn" + v + "ene" + w), (-Q, u + "nn" + v + "een" + w)],
                )
            if s12 == "en" and u and u[-1] == "n":
                plus, minus = sarrus_terms(u[:-1], v, w)
                report.instances += 1
                acc = SymFunc.zero("e")
                for pw in plus:
                    acc = acc + _e_value(fn, pw, cache)
                for mw in minus:
                    acc = acc - _e_value(fn, mw, cache)
                if not acc.is_zero():
                    report.failures.append(
                        {"paths": plus + minus, "point": (x, z), "discrepancy": acc}
                    )
    # multiplicativity on concatenations
    for k in range(1, n):
        for left in enumerate_paths(k, dyck_only=True):
            for right in enumerate_paths(n - k, dyck_only=True):
                report.instances += 1
                prod = fn(left).convert("e") * fn(right).convert("e")
                whole = _e_value(fn, left.word + right.word, cache)
                acc = whole - prod
                if not acc.is_zero():
                    report.failures.append(
                        {
                            "paths": [left.word + right.word, left.word, right.word],
                            "point": None,
                            "discrepancy": acc,
                        }
                    )
    # path-graph initial condition through the plethystic bridge
    if n >= 1:
        k = n - 1
        word = "n" + "ne" * k + "e"
        report.instances += 1
        bridged = dyck_path_graph_formula(k).pleth_q_minus_1()
        divisor = (Q - 1) ** n
        bridged = bridged.map_coeffs(lambda c: c.exact_div(divisor))
        acc = bridged.convert("e") - _e_value(fn, word, cache)
        if not acc.is_zero():
            report.failures.append({"paths": [word], "point": None, "discrepancy": acc})
    return report


def all_suites(n: int, include_extended: bool = False) -> list[RelationReport]:
    reports = [
        verify_unicellular(n),
        verify_bounce_A(n),
        verify_bounce_B(n),
        verify_bounce_nd(n),
        verify_generalized_bounce(n),
        verify_dyck_relations(n),
        verify_dual_bounce(n),
    ]
    if n <= 5:
        reports.append(verify_chromatic_relations(n))
    if include_extended:
        reports.append(verify_extended_bounce(n))
    return reports


# -- the axiomatic evaluator ----------------------------------------------------


def dyck_path_graph_formula(k: int, bound: int = 7) -> SymFunc:
    """e-expansion of the polynomial of the path graph n (ne)^k e on k+1 vertices:
    the sum of (q-1)^(k+1-l(alpha)) e_alpha over compositions alpha of k+1."""
    if k > bound:
        raise BoundExceeded(f"k={k} exceeds bound {bound}")
    coeffs: dict[tuple[int, ...], CoeffQT] = {}
    for alpha in compositions(k + 1):
        lam = tuple(sorted(alpha, reverse=True))
        c = coeffs.get(lam, CoeffQT.zero()) + (Q - 1) ** (k + 1 - len(alpha))
        coeffs[lam] = c
    return SymFunc("e", coeffs)


def recursion_evaluate(path: SchroederPath | str, bound: int = 7) -> SymFunc:
    """Evaluate the unique function fixed by the axioms, in the e-basis.

    Uses only the initial condition F(n d^k e) = e_{k+1}, multiplicativity
    at returns to the diagonal, the unicellular relation to strip a
    leading ne, and the generalized bounce relations when the first east
    step is preceded by a diagonal step.  Memoized on path words.
    """
    if isinstance(path, str):
        path = parse(path)
    if path.size > bound:
        raise BoundExceeded(f"size {path.size} exceeds bound {bound}")
    if sys.getrecursionlimit() < 4 * _EVAL_DEPTH_BOUND:
        sys.setrecursionlimit(4 * _EVAL_DEPTH_BOUND)
    return _evaluate(path.word, 0)


def _evaluate(word: str, depth: int) -> SymFunc:
    cached = _RECURSION_CACHE.get(word)
    if cached is not None:
        return cached
    if depth > _EVAL_DEPTH_BOUND:
        raise NonTermination(f"evaluator depth bound hit at {word!r}")
    out = _evaluate_uncached(word, depth)
    _RECURSION_CACHE[word] = out
    return out


def _evaluate_uncached(word: str, depth: int) -> SymFunc:
    if not word:
        return SymFunc.one("e")
    first_e = word.index("e")  # every nonempty path has an east step
    prefix = word[:first_e]
    # initial condition F(n d^k e) = e_{k+1}
    if first_e == len(word) - 1 and prefix == "n" + "d" * (first_e - 1):
        return SymFunc.basis_element("e", (first_e,))
    x = prefix.count("d")
    z = prefix.count("n") + prefix.count("d")
    if z == x + 1:
        # the first east step returns to the diagonal: split multiplicatively
        left = word[: first_e + 1]
        right = word[first_e + 1 :]
        return _evaluate(left, depth + 1) * _evaluate(right, depth + 1)
    if prefix[-1] == "n":
        # unicellular relation: F(Y n e W) = (q-1) F(Y d W) + F(Y e n W)
        y, w = word[: first_e - 1], word[first_e + 1 :]
        return _evaluate(y + "d" + w, depth + 1).scale(Q - 1) + _evaluate(
            y + "en" + w, depth + 1
        )
    # first east step preceded by d: apply the bounce relation at (x, z)
    data = bounce_at(parse(word), (x, z))
    assert data.decomposition is not None
    u, s12, v, s34, w = data.decomposition
    assert s34 == "de" and "e" not in v and s12 in ("nn", "nd", "dn"), (word, data)
    if s12 == "nn":
        return _evaluate(u + "nn" + v + "ed" + w, depth + 1).scale(Q)
    if s12 == "dn":
        return _evaluate(u + "nd" + v + "ed" + w, depth + 1)
    return _evaluate(u + "nd" + v + "ed" + w, depth + 1).scale(Q - 1) + _evaluate(
        u + "dn" + v + "ed" + w, depth + 1
    ).scale(Q)

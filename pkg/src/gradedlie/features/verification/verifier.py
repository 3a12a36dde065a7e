"""Invariant suites for built algebras."""

import itertools
import logging
from multiprocessing import Pool
from typing import Callable, List, Optional

from ...config import get_settings
from ...models.algebra import AlgebraFamily, AlgebraSpec
from ...models.relations import RelationSet
from ...models.validation import CheckFailure, CheckWarning, SuiteResult, VerificationReport
from ..algebra import (
    form_membership,
    graded_bracket,
    graded_supertrace,
    graded_symmetry_check,
    grading_check,
    jacobi_check,
    trace,
)
from ..catalog import (
    AlgebraBasis,
    build,
    desk_scale_specs,
    dims_formula_so_q,
    form_condition,
    is_canonical_osp,
    printed_dim_00_so_q,
)
from ..grading import ZERO, SignConvention
from ..parastat import build_parabosons, build_parafermions, span_identities, verify_relations
from ..structure import (
    compare_root_tables,
    expected_root_table,
    positive_and_simple_roots,
    root_decomposition,
)

logger = logging.getLogger(__name__)

TRACELESS_FAMILIES = (
    AlgebraFamily.SL_PQRS,
    AlgebraFamily.SO_PQRS,
    AlgebraFamily.SO_Q,
    AlgebraFamily.SL_SUPER,
    AlgebraFamily.OSP,
)

# stop collecting failures of one suite after this many
MAX_REPORTED = 20


class AlgebraVerifier:
    """Run the bracket, form, dimension, root and relation suites on one algebra."""

    def __init__(self, basis: AlgebraBasis):
        """Initialize verifier with a built basis."""
        self.basis = basis
        self.conv = basis.convention
        self.target = basis.label

    def verify(self) -> VerificationReport:
        """Run every suite that applies to the algebra."""
        suites: List[SuiteResult] = [
            self._check_jacobi(),
            self._check_symmetry(),
            self._check_grading(),
            self._check_closure(),
            self._check_trace(),
        ]
        spec = self.basis.spec
        if spec is not None:
            checks = (self._check_form, self._check_dims, self._check_roots, self._check_relations)
            for check in checks:
                result = check(spec)
                if result is not None:
                    suites.append(result)

        warnings = [w for suite in suites for w in suite.warnings]
        report = VerificationReport(
            is_valid=all(suite.passed for suite in suites),
            suites=suites,
            warnings=warnings,
        )
        logger.info(
            f"Verified {self.target}: {sum(s.passed for s in suites)}/{len(suites)} suites passed"
        )
        return report

    def _failure(self, suite: SuiteResult, code: str, message: str) -> None:
        if len(suite.failures) < MAX_REPORTED:
            suite.failures.append(CheckFailure(code=code, message=message, field=self.target))

    def _pairwise(self, name: str, code: str, law: Callable, what: str) -> SuiteResult:
        suite = SuiteResult(name=name, target=self.target)
        elements = self.basis.basis
        for (a, x), (b, y) in itertools.product(enumerate(elements, start=1), repeat=2):
            suite.checked += 1
            if not law(x, y, self.conv):
                self._failure(suite, code, f"{what} fails for basis elements ({a}, {b})")
        return suite

    def _check_jacobi(self) -> SuiteResult:
        """Check the graded Jacobi identity on every ordered basis triple."""
        suite = SuiteResult(name="jacobi", target=self.target)
        elements = list(enumerate(self.basis.basis, start=1))
        for (a, x), (b, y), (c, z) in itertools.product(elements, repeat=3):
            suite.checked += 1
            if not jacobi_check(x, y, z, self.conv):
                self._failure(
                    suite, "JACOBI_FAILED", f"Jacobi identity fails for basis elements ({a}, {b}, {c})"
                )
        return suite

    def _check_symmetry(self) -> SuiteResult:
        return self._pairwise(
            "symmetry", "GRADED_SYMMETRY_FAILED", graded_symmetry_check, "Graded symmetry"
        )

    def _check_grading(self) -> SuiteResult:
        return self._pairwise("grading", "GRADING_FAILED", grading_check, "Degree additivity")

    def _check_closure(self) -> SuiteResult:
        """Check that every bracket of basis elements stays in the span."""
        suite = SuiteResult(name="closure", target=self.target, checked=self.basis.dimension ** 2)
        for alpha, beta in self.basis.closure_failures():
            self._failure(
                suite,
                "CLOSURE_FAILED",
                f"Bracket of basis elements ({alpha + 1}, {beta + 1}) leaves the span",
            )
        return suite

    def _check_trace(self) -> SuiteResult:
        """Check that brackets, and basis elements of traceless families, have zero (super)trace."""
        suite = SuiteResult(name="trace", target=self.target)
        measure = trace if self.conv is SignConvention.LIE_ALGEBRA else graded_supertrace
        word = "Trace" if self.conv is SignConvention.LIE_ALGEBRA else "Supertrace"
        spec = self.basis.spec
        if spec is not None and spec.family in TRACELESS_FAMILIES:
            for a, x in enumerate(self.basis.basis, start=1):
                suite.checked += 1
                if measure(x):
                    self._failure(suite, "TRACE_NONZERO", f"{word} of basis element {a} is nonzero")
        for (a, x), (b, y) in itertools.product(enumerate(self.basis.basis, start=1), repeat=2):
            suite.checked += 1
            if measure(graded_bracket(x, y, self.conv)):
                self._failure(
                    suite, "TRACE_NONZERO", f"{word} of the bracket ({a}, {b}) is nonzero"
                )
        return suite

    def _check_form(self, spec: AlgebraSpec) -> Optional[SuiteResult]:
        """Check the defining form condition on each basis element."""
        cond = form_condition(spec)
        if cond is None:
            return None
        suite = SuiteResult(name="form", target=self.target)
        for a, x in enumerate(self.basis.basis, start=1):
            suite.checked += 1
            if not form_membership(x, cond):
                self._failure(suite, "FORM_VIOLATED", f"Basis element {a} violates the defining form")
        return suite

    def _check_dims(self, spec: AlgebraSpec) -> Optional[SuiteResult]:
        """Compare graded dimensions with the closed formulas."""
        dims = self.basis.dims_by_degree
        suite = SuiteResult(name="dims", target=self.target, checked=1)
        if spec.family is AlgebraFamily.SO_Q:
            n, q = spec.params
            expected = dims_formula_so_q(n, q)
            suite.checked = len(expected)
            for degree, value in expected.items():
                if dims.get(degree, 0) != value:
                    self._failure(
                        suite,
                        "DIM_MISMATCH",
                        f"dim g_({degree}) is {dims.get(degree, 0)}, expected {value}",
                    )
            printed = printed_dim_00_so_q(n, q)
            if printed != dims.get(ZERO, 0):
                suite.warnings.append(
                    CheckWarning(
                        code="PRINTED_DIM_FORMULA_MISMATCH",
                        message=(
                            f"Printed dim g_(00) formula gives {printed}, "
                            f"brute force gives {dims.get(ZERO, 0)}"
                        ),
                        field=self.target,
                    )
                )
        elif is_canonical_osp(spec):
            big_n = spec.params[2] + spec.params[3]
            expected_total = 2 * big_n * big_n + 3 * big_n
            if self.basis.dimension != expected_total:
                self._failure(
                    suite, "DIM_MISMATCH", f"Dimension {self.basis.dimension}, expected {expected_total}"
                )
        else:
            return None
        return suite

    def _check_roots(self, spec: AlgebraSpec) -> Optional[SuiteResult]:
        """Compare the computed root table with the known one."""
        if spec.family is not AlgebraFamily.SO_Q and not is_canonical_osp(spec):
            return None
        suite = SuiteResult(name="roots", target=self.target)
        try:
            computed = root_decomposition(self.basis)
        except ValueError as e:
            self._failure(suite, "ROOT_DECOMPOSITION_FAILED", str(e))
            return suite
        expected = expected_root_table(self.basis)
        suite.checked = len(expected)
        for problem in compare_root_tables(computed, expected):
            self._failure(suite, "ROOT_TABLE_MISMATCH", problem)
        rank = len(computed[0].root) if computed else 0
        simple = positive_and_simple_roots(self.basis).simple
        if len(simple) != rank:
            self._failure(suite, "SIMPLE_ROOT_COUNT", f"{len(simple)} simple roots for rank {rank}")
        return suite

    def _check_relations(self, spec: AlgebraSpec) -> Optional[SuiteResult]:
        """Check the triple relations and span identities of the short root vectors."""
        if spec.family is AlgebraFamily.SO_Q:
            fam = build_parafermions(*spec.params)
            relations = (RelationSet.PF_SAME, RelationSet.REL_CROSS_SO_Q)
        elif is_canonical_osp(spec):
            fam = build_parabosons(spec.params[2], spec.params[3])
            relations = (RelationSet.PB_SAME, RelationSet.REL_CROSS_OSP)
        else:
            return None
        suite = SuiteResult(name="relations", target=self.target)
        for relation in relations:
            report = verify_relations(fam, relation)
            suite.checked += report.checked
            for failure in report.failures:
                self._failure(
                    suite,
                    "RELATION_FAILED",
                    f"{relation.value} fails for indices {failure.indices}, signs {failure.signs}",
                )
        for degree, holds in span_identities(fam).items():
            suite.checked += 1
            if not holds:
                self._failure(
                    suite, "SPAN_IDENTITY_FAILED", f"Generators do not span g_({degree}) as expected"
                )
        return suite


def verify_spec(spec: AlgebraSpec) -> VerificationReport:
    """Build ``spec`` without self-checks and run every suite on it."""
    return AlgebraVerifier(build(spec, verify=False)).verify()


def merge_reports(reports: List[VerificationReport]) -> VerificationReport:
    suites = [suite for report in reports for suite in report.suites]
    return VerificationReport(
        is_valid=all(report.is_valid for report in reports),
        suites=suites,
        warnings=[w for report in reports for w in report.warnings],
    )


def verify_sweep(specs: Optional[List[AlgebraSpec]] = None) -> VerificationReport:
    """Verify many algebras, in a worker pool when GRADEDLIE_THREADS > 1.

    Reports are merged in the order of ``specs``.
    """
    specs = desk_scale_specs() if specs is None else specs
    workers = get_settings().threads
    logger.info(f"Sweeping {len(specs)} algebras with {workers} worker(s)")
    if workers > 1:
        with Pool(processes=workers) as pool:
            reports = pool.map(verify_spec, specs)
    else:
        reports = [verify_spec(spec) for spec in specs]
    return merge_reports(reports)

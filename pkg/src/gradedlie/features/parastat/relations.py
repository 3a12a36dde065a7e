"""Exhaustive checks of parastatistics triple relations.

Signs xi, eta, epsilon run over +1 and -1. The left side of every relation
is the nested graded bracket of the ambient algebra, so whether a commutator
or an anticommutator appears follows from the degrees of the generators.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Set, Tuple

from ...errors import NoRealizationError
from ...models.algebra import MatrixEntry, ScalarModel
from ...models.relations import RelationFailure, RelationReport, RelationSet
from ..algebra import graded_bracket
from ..catalog import build
from ..exact import Matrix, linear_combination, same_span
from ..grading import D11, ZERO, Degree
from .generators import ANNIHILATION, CREATION, GeneratorFamily, GeneratorKind

logger = logging.getLogger(__name__)

SIGNS = (ANNIHILATION, CREATION)
Triple = Tuple[int, int, int]

COMMUTATOR = "commutator"
ANTICOMMUTATOR = "anticommutator"

RELATION_KINDS: Dict[RelationSet, GeneratorKind] = {
    RelationSet.PF_SAME: GeneratorKind.PARAFERMION,
    RelationSet.REL_CROSS_SO_Q: GeneratorKind.PARAFERMION,
    RelationSet.PB_SAME: GeneratorKind.PARABOSON,
    RelationSet.REL_CROSS_OSP: GeneratorKind.PARABOSON,
}

# (inner, outer) bracket of each displayed relation
DISPLAYED_PATTERNS: Dict[RelationSet, Tuple[str, str]] = {
    RelationSet.PF_SAME: (COMMUTATOR, COMMUTATOR),
    RelationSet.PB_SAME: (ANTICOMMUTATOR, COMMUTATOR),
    RelationSet.REL_CROSS_SO_Q: (ANTICOMMUTATOR, ANTICOMMUTATOR),
    RelationSet.REL_CROSS_OSP: (COMMUTATOR, ANTICOMMUTATOR),
}


def _check_kind(fam: GeneratorFamily, relation: RelationSet) -> None:
    if RELATION_KINDS[relation] is not fam.kind:
        raise ValueError(f"{relation.value} needs {RELATION_KINDS[relation].value} generators")


def admissible_triples(fam: GeneratorFamily, relation: RelationSet) -> Iterator[Triple]:
    """(j, k, l) covered by the relation: one ensemble, or j and k in different ones."""
    _check_kind(fam, relation)
    indices = range(1, fam.count + 1)
    same = relation in (RelationSet.PF_SAME, RelationSet.PB_SAME)
    for j, k, l in itertools.product(indices, repeat=3):
        if same and fam.ensemble(j) == fam.ensemble(k) == fam.ensemble(l):
            yield (j, k, l)
        elif not same and fam.ensemble(j) != fam.ensemble(k):
            yield (j, k, l)


def right_hand_side(
    fam: GeneratorFamily, relation: RelationSet, triple: Triple, signs: Triple
) -> Matrix:
    """The coefficient formula of the relation evaluated on matrices."""
    j, k, l = triple
    xi, eta, eps = signs
    g_j, g_k = fam.generator(j, xi).mat, fam.generator(k, eta).mat
    delta_kl, delta_jl = int(k == l), int(j == l)
    if relation is RelationSet.PF_SAME:
        terms = [(abs(eps - eta) * delta_kl, g_j), (-abs(eps - xi) * delta_jl, g_k)]
    elif relation is RelationSet.REL_CROSS_SO_Q:
        terms = [(abs(eps - eta) * delta_kl, g_j), (abs(eps - xi) * delta_jl, g_k)]
    elif relation is RelationSet.PB_SAME:
        terms = [((eps - eta) * delta_kl, g_j), ((eps - xi) * delta_jl, g_k)]
    else:
        terms = [((eps - eta) * delta_kl, g_j), (-(eps - xi) * delta_jl, g_k)]
    return linear_combination(terms, g_j.n)


def left_hand_side(fam: GeneratorFamily, triple: Triple, signs: Triple) -> Matrix:
    """[[ [[g_j^xi, g_k^eta]], g_l^eps ]] with the ambient graded bracket."""
    conv = fam.convention
    g_j, g_k, g_l = (fam.generator(i, s) for i, s in zip(triple, signs))
    return graded_bracket(graded_bracket(g_j, g_k, conv), g_l, conv).mat


def _entries(mat: Matrix) -> List[MatrixEntry]:
    return [
        MatrixEntry(row=i + 1, col=j + 1, value=ScalarModel.from_scalar(v))
        for (i, j), v in sorted(mat.entries.items())
    ]


def verify_relations(fam: GeneratorFamily, relation: RelationSet) -> RelationReport:
    """Evaluate both sides for every admissible triple and all eight sign choices.

    Raises ValueError if the family does not carry the relation.
    """
    checked = 0
    failures: List[RelationFailure] = []
    for triple in admissible_triples(fam, relation):
        for signs in itertools.product(SIGNS, repeat=3):
            checked += 1
            got = left_hand_side(fam, triple, signs)
            expected = right_hand_side(fam, relation, triple, signs)
            if got != expected:
                failures.append(
                    RelationFailure(
                        indices=list(triple),
                        signs=list(signs),
                        expected=_entries(expected),
                        got=_entries(got),
                    )
                )
    failures.sort(key=lambda f: (f.indices, f.signs))
    logger.info(f"{relation.value} on {fam.spec.label}: {checked} checked, {len(failures)} failed")
    return RelationReport(relation=relation, checked=checked, failures=failures)


def _kind_of(sign: int) -> str:
    return COMMUTATOR if sign == 1 else ANTICOMMUTATOR


def bracket_pattern(fam: GeneratorFamily, relation: RelationSet) -> Set[Tuple[str, str]]:
    """(inner, outer) bracket kinds that the degrees produce on the admissible triples."""
    conv = fam.convention
    patterns = set()
    for j, k, l in admissible_triples(fam, relation):
        a, b, c = (fam.generator(i, CREATION).degree for i in (j, k, l))
        patterns.add((_kind_of(conv.sign(a, b)), _kind_of(conv.sign(a + b, c))))
    return patterns


def span_identities(fam: GeneratorFamily) -> Dict[Degree, bool]:
    """Whether each graded component of the algebra is spanned as the generators dictate.

    Components of odd-like degree are spanned by the generators themselves;
    (0,0) by brackets within one ensemble and (1,1) by brackets across them.
    """
    algebra = build(fam.spec, verify=False)
    conv = fam.convention
    same: List[Matrix] = []
    cross: List[Matrix] = []
    choices = list(itertools.product(range(1, fam.count + 1), SIGNS))
    for (k, xi), (l, eta) in itertools.product(choices, repeat=2):
        value = graded_bracket(fam.generator(k, xi), fam.generator(l, eta), conv).mat
        (same if fam.ensemble(k) == fam.ensemble(l) else cross).append(value)

    result: Dict[Degree, bool] = {}
    for degree in algebra.dims_by_degree:
        component = [x.mat for x in algebra.component(degree)]
        if degree == ZERO:
            spanned = same
        elif degree == D11:
            spanned = cross
        else:
            spanned = [g.mat for g in fam.generators() if g.degree == degree]
        result[degree] = same_span(spanned, component)
    return result


@dataclass(frozen=True)
class RelationTemplate:
    """A relation system with no matrix realization in this library."""

    name: str
    relations: Tuple[str, ...]
    note: str

    def verify(self) -> RelationReport:
        raise NoRealizationError(f"{self.name}: {self.note}")


RELATION_TEMPLATES: Dict[str, RelationTemplate] = {
    "rel_pf": RelationTemplate(
        name="rel_pf",
        relations=(
            "[[f_j^xi, f_k^eta], b_l^eps] = 0",
            "[{b_j^xi, b_k^eta}, f_l^eps] = 0",
            "[[f_j^xi, b_k^eta], f_l^eps] = -|eps-xi| d_jl b_k^eta",
            "{[f_j^xi, b_k^eta], b_l^eps} = (eps-eta) d_kl f_j^xi",
        ),
        note="mixed parafermions and parabosons generate osp(2m+1|2n), which is not built here",
    ),
    "rel_pb": RelationTemplate(
        name="rel_pb",
        relations=(
            "[[f_j^xi, f_k^eta], b_l^eps] = 0",
            "[{b_j^xi, b_k^eta}, f_l^eps] = 0",
            "{{f_j^xi, b_k^eta}, f_l^eps} = |eps-xi| d_jl b_k^eta",
            "[{f_j^xi, b_k^eta}, b_l^eps] = (eps-eta) d_kl f_j^xi",
        ),
        note="no matrix realization of the mixed system is available",
    ),
}


def relation_template(name: str) -> RelationTemplate:
    try:
        return RELATION_TEMPLATES[name]
    except KeyError:
        raise ValueError(f"Unknown relation template: {name}") from None

"""Aggregate all property verdicts for one lattice into a single record."""

from dataclasses import dataclass, field

from .errors import InvariantViolation
from .irreducibles import join_irreducible_ids, length, meet_irreducibles
from .properties import (
    is_distributive,
    is_join_semidistributive,
    is_meet_semidistributive,
    left_modular_chain,
)
from .shellability import (
    DEFAULT_EL_BUDGET,
    el_search,
    is_el_labeling,
    lm_labeling,
)

FLAG_NAMES = (
    "distributive",
    "join_semidistributive",
    "meet_semidistributive",
    "semidistributive",
    "join_extremal",
    "extremal",
    "left_modular",
    "el_shellable",
)


@dataclass(frozen=True)
class ClassificationRecord:
    """Verdicts for the eight properties plus basic counts and evidence.

    el_shellable is three-valued ("yes"/"no"/"unknown") because the exact
    shellability search runs under a node budget; the remaining flags are
    always decided.
    """

    distributive: bool
    join_semidistributive: bool
    meet_semidistributive: bool
    semidistributive: bool
    join_extremal: bool
    extremal: bool
    left_modular: bool
    el_shellable: str
    length: int
    num_join_irreducibles: int
    num_meet_irreducibles: int
    witnesses: dict = field(default_factory=dict)

    def flag(self, name):
        value = getattr(self, name)
        if name == "el_shellable":
            return value == "yes"
        return value

    def as_json(self):
        out = {name: getattr(self, name) for name in FLAG_NAMES}
        out["length"] = self.length
        out["num_join_irreducibles"] = self.num_join_irreducibles
        out["num_meet_irreducibles"] = self.num_meet_irreducibles
        out["witnesses"] = self.witnesses
        return out

    @classmethod
    def from_json(cls, obj):
        return cls(
            **{name: obj[name] for name in FLAG_NAMES},
            length=obj["length"],
            num_join_irreducibles=obj["num_join_irreducibles"],
            num_meet_irreducibles=obj["num_meet_irreducibles"],
            witnesses=obj.get("witnesses", {}),
        )


def classify(L, el_budget=DEFAULT_EL_BUDGET):
    """Compute every flag of the record, each from its own definition.

    Nothing is inferred from implications between properties; the record
    is what the implication scans are checked against, so every flag runs
    its full decision procedure.  A left-modular chain short-circuits the
    shellability search because its induced labeling is a certificate
    (which is still verified here, not assumed).
    """
    distributive, dist_violation = is_distributive(L)
    jsd, jsd_violation = is_join_semidistributive(L)
    msd, msd_violation = is_meet_semidistributive(L)
    k = length(L)
    num_j = len(join_irreducible_ids(L))
    num_m = len(meet_irreducibles(L))
    chain = left_modular_chain(L)

    witnesses = {}
    for violation in (dist_violation, jsd_violation, msd_violation):
        if violation is not None:
            witnesses[violation.kind + "_violation"] = list(violation.elements)
    if chain is not None:
        witnesses["left_modular_chain"] = list(chain)

    if chain is not None:
        labeling = lm_labeling(L, chain)
        verdict = is_el_labeling(L, labeling)
        if not verdict:
            raise InvariantViolation(
                "left-modular labeling failed the EL verifier on "
                f"{L!r}: {verdict}"
            )
        el = "yes"
        witnesses["el_labeling"] = [
            [a, b, v] for (a, b), v in sorted(labeling.items())
        ]
    else:
        result = el_search(L, el_budget)
        el = {
            "shellable": "yes",
            "not_shellable": "no",
            "unknown": "unknown",
        }[result.status]
        witnesses["el_search_nodes"] = result.nodes
        witnesses["el_search_budget"] = result.budget
        if result.labeling is not None:
            witnesses["el_labeling"] = [
                [a, b, v] for (a, b), v in sorted(result.labeling.items())
            ]

    return ClassificationRecord(
        distributive=distributive,
        join_semidistributive=jsd,
        meet_semidistributive=msd,
        semidistributive=jsd and msd,
        join_extremal=k == num_j,
        extremal=k == num_j and k == num_m,
        left_modular=chain is not None,
        el_shellable=el,
        length=k,
        num_join_irreducibles=num_j,
        num_meet_irreducibles=num_m,
        witnesses=witnesses,
    )

"""Decides whether a connected cubic graph has zero forcing number 3.

Membership in the assembled block family characterizes these graphs, so
recognition is catalog matching: build every family member of the right
order (cached) and look for an isomorphism.  Graphs with edge connectivity
below 3 are rejected without any search.
"""

from __future__ import annotations

from dataclasses import dataclass

from .families import FamilySpec, family_members
from .forcing import zero_forcing_number
from .graphs import Graph, IsoWitness, are_isomorphic, edge_connectivity


@dataclass(frozen=True)
class RecognitionResult:
    """Verdict with a checkable certificate.

    Members carry the assembly recipe plus a vertex mapping from the
    assembled graph onto the input.  Non-members carry either the failed
    edge-connectivity value or the computed zero forcing number.
    """

    member: bool
    spec: FamilySpec | None = None
    mapping: tuple | None = None
    edge_connectivity: int | None = None
    z: int | None = None

    @property
    def reason(self) -> str:
        if self.member:
            return f"member {self.spec.label()}"
        if self.edge_connectivity is not None:
            return f"edge connectivity {self.edge_connectivity} < 3"
        return f"zero forcing number {self.z} != 3"


def recognize_z3(g: Graph) -> RecognitionResult:
    """Classify a connected cubic graph by whether its zero forcing number is 3."""
    if not g.is_cubic():
        raise ValueError("recognition is defined for cubic graphs")
    if not g.is_connected():
        raise ValueError("recognition is defined for connected graphs")
    kappa = edge_connectivity(g)
    if kappa < 3:
        return RecognitionResult(member=False, edge_connectivity=kappa)
    for spec, member in family_members(g.n):
        witness: IsoWitness = are_isomorphic(member, g)
        if witness.isomorphic:
            return RecognitionResult(member=True, spec=spec,
                                     mapping=witness.mapping)
    return RecognitionResult(member=False, z=zero_forcing_number(g).z)

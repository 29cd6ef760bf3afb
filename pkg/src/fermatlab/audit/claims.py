#!/usr/bin/env python

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Tuple

from fermatlab.utilities import FermatlabDomainError


SCHEMA_VERSION = 1


class ClaimKind(Enum):
    ExactTheorem = 'ExactTheorem'
    EmpiricalSweep = 'EmpiricalSweep'
    NarrativeUnchecked = 'NarrativeUnchecked'


class Verdict(Enum):
    Verified = 'Verified'
    Falsified = 'Falsified'
    Unchecked = 'Unchecked'


@dataclass(frozen=True)
class ClaimRecord:
    id: str
    paper_ref: str
    kind: ClaimKind
    verdict: Verdict
    statement: str = ''
    evidence: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind == ClaimKind.NarrativeUnchecked and self.verdict != Verdict.Unchecked:
            raise FermatlabDomainError(f'claim {self.id} is narrative and cannot be {self.verdict.value}')
        if self.verdict == Verdict.Falsified and len(self.evidence.get('counterexamples', [])) == 0:
            raise FermatlabDomainError(f'claim {self.id} is falsified without a counterexample')

    def to_dict(self):
        return {'id': self.id, 'paperRef': self.paper_ref, 'kind': self.kind.value, 'verdict': self.verdict.value,
                'statement': self.statement, 'evidence': self.evidence}


@dataclass(frozen=True)
class AuditReport:
    tool_version: str
    parameters: Dict[str, Any]
    claims: List[ClaimRecord]
    dependency_edges: List[Tuple[str, str]]
    schema_version: int = SCHEMA_VERSION

    def __post_init__(self):
        ids = {claim.id for claim in self.claims}
        if len(ids) != len(self.claims):
            raise FermatlabDomainError('claim ids must be unique')
        for source, target in self.dependency_edges:
            if source not in ids or target not in ids:
                raise FermatlabDomainError(f'edge {source} -> {target} references an unknown claim')

    def claim(self, claim_id):
        for claim in self.claims:
            if claim.id == claim_id:
                return claim
        raise KeyError(claim_id)

    @property
    def exit_status(self):
        """0 when everything checkable is Verified, 1 on any Falsified, 4 when a checkable claim is Unchecked."""
        verdicts = [claim.verdict for claim in self.claims]
        if Verdict.Falsified in verdicts:
            return 1
        if any(claim.verdict == Verdict.Unchecked for claim in self.claims
               if claim.kind != ClaimKind.NarrativeUnchecked):
            return 4
        return 0

    def to_dict(self):
        return {'schemaVersion': self.schema_version, 'toolVersion': self.tool_version,
                'parameters': self.parameters, 'claims': [claim.to_dict() for claim in self.claims],
                'dependencyEdges': [list(edge) for edge in self.dependency_edges]}

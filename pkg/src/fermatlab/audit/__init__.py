#!/usr/bin/env python

from .claims import SCHEMA_VERSION, ClaimKind, Verdict, ClaimRecord, AuditReport
from .registry import ClaimSpec, CLAIMS, DEPENDENCY_EDGES, REQUIRED_EDGES, claim_ids
from .gatherers import AuditContext, Outcome
from .audit_runner import AuditRunner

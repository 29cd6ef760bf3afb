#!/usr/bin/env python

from fermatlab._version import __version__
from fermatlab.explorer import Explorer
from fermatlab.utilities import Logger, Stopwatch, FermatlabBoundsError, peak_memory_mb
from .claims import AuditReport, ClaimKind, ClaimRecord, Verdict
from .gatherers import AuditContext, MAX_LISTED
from .registry import CLAIMS, DEPENDENCY_EDGES


class AuditRunner(Logger):
    """Runs every registered claim's evidence gatherer and assembles the audit report."""

    def __init__(self, config, seed=None):

        self.config = config
        self.verbosity = self.config.get('verbosity')
        Logger.__init__(self, 'AuditRunner', verbosity=self.verbosity)

        self.seed = self.config.get('random_seed') if seed is None else seed

    @property
    def parameters(self):
        return {'bounds_preset': self.config.get('bounds'),
                'bounds': self.config.bounds.to_dict(),
                'tolerances': self.config.tolerances.to_dict(),
                'seed': self.seed}

    def run(self, claims=CLAIMS):
        """Returns the AuditReport; its ``exit_status`` carries the verdict summary."""
        context = AuditContext(bounds=self.config.bounds.to_dict(), tolerances=self.config.tolerances.to_dict(),
                               seed=self.seed, explorer=Explorer(self.config),
                               exceeded=self.config.exceeded_bounds)
        exceeded = context.exceeded
        for key, (value, limit) in exceeded.items():
            self.log(f'bound "{key}" = {value} is above its limit {limit}, claims reading it stay Unchecked',
                     'WARNING')

        records = {}
        with Stopwatch() as watch:
            for entry in claims:
                if entry.kind != ClaimKind.NarrativeUnchecked:
                    records[entry.id] = self._check_claim(entry, context, exceeded)
            # narratives last, so they can quote the verdicts they lean on
            for entry in claims:
                if entry.kind == ClaimKind.NarrativeUnchecked:
                    records[entry.id] = self._narrative_claim(entry, records)

        ordered = [records[entry.id] for entry in claims]
        ids = set(records)
        edges = [edge for edge in DEPENDENCY_EDGES if edge[0] in ids and edge[1] in ids]
        report = AuditReport(tool_version=__version__, parameters=self.parameters, claims=ordered,
                             dependency_edges=edges)

        counts = {verdict.value: sum(1 for record in ordered if record.verdict == verdict) for verdict in Verdict}
        self.log(f'audited {len(ordered)} claims in {watch} (peak memory {peak_memory_mb():.0f} MB): ' +
                 ', '.join(f'{count} {verdict}' for verdict, count in counts.items()), 'STATS')
        return report

    def _check_claim(self, entry, context, exceeded):
        blocked = {key: {'value': exceeded[key][0], 'limit': exceeded[key][1]} for key in entry.bounds
                   if key in exceeded}
        if len(blocked) > 0:
            return ClaimRecord(id=entry.id, paper_ref=entry.anchor, kind=entry.kind, verdict=Verdict.Unchecked,
                               statement=entry.statement,
                               evidence={'reason': 'bounds beyond desk-scale limits', 'exceeded': blocked})

        self.log(f'checking {entry.id}', 'INFO')
        try:
            with Stopwatch() as watch:
                outcome = entry.gatherer(context)
        except FermatlabBoundsError as error:
            self.log(f'{entry.id} read a bound beyond its limit: {error.message}', 'WARNING')
            return ClaimRecord(id=entry.id, paper_ref=entry.anchor, kind=entry.kind, verdict=Verdict.Unchecked,
                               statement=entry.statement,
                               evidence={'reason': 'bounds beyond desk-scale limits', 'error': error.message})
        except Exception as error:
            self.log(f'evidence gatherer of {entry.id} failed: {type(error).__name__}: {error}', 'ERROR')
            return ClaimRecord(id=entry.id, paper_ref=entry.anchor, kind=entry.kind, verdict=Verdict.Unchecked,
                               statement=entry.statement,
                               evidence={'reason': 'evidence gatherer failed',
                                         'error': f'{type(error).__name__}: {error}'})

        evidence = dict(outcome.evidence)
        evidence['counterexample_count'] = len(outcome.counterexamples)
        evidence['counterexamples'] = outcome.counterexamples[:MAX_LISTED]
        verdict = Verdict.Falsified if len(outcome.counterexamples) > 0 else Verdict.Verified
        if verdict == Verdict.Falsified:
            self.log(f'{entry.id} falsified by {len(outcome.counterexamples)} counterexample(s)', 'ERROR')
        self.log(f'{entry.id}: {verdict.value} ({watch})', 'INFO')
        return ClaimRecord(id=entry.id, paper_ref=entry.anchor, kind=entry.kind, verdict=verdict,
                           statement=entry.statement, evidence=evidence)

    @staticmethod
    def _narrative_claim(entry, records):
        attached = {claim_id: records[claim_id].verdict.value for claim_id in entry.attached if claim_id in records}
        return ClaimRecord(id=entry.id, paper_ref=entry.anchor, kind=entry.kind, verdict=Verdict.Unchecked,
                           statement=entry.statement,
                           evidence={'reason': 'inferential step, not machine checkable', 'attached': attached})

"""
Witness Agent - constructive Ext vanishing on random coboundaries, with the
Euler solver round trips and, for positive weights, the slice oracle
"""

import logging
from fractions import Fraction
from typing import Any, Dict

from config.settings import settings
from src.agents.base_agent import PipelineContext, StageAgent
from src.agents.spencer_agent import complexes_for
from src.algebra.errors import InconsistencyError, WitnessRefusedError
from src.algebra.polynomial import format_rational
from src.algebra.sampling import random_polynomial
from src.spencer.complex import CochainTuple, SpencerComplex, random_coboundary, random_cochain
from src.spencer.euler import euler_solve
from src.spencer.oracle import graded_slice_oracle, slice_weights
from src.spencer.witness import ext_witness
from src.weyl.operator import op_apply
from src.weyl.vector_field import euler_field

logger = logging.getLogger(__name__)


class WitnessAgent(StageAgent):
    """Builds and verifies preimages of cocycles of the dual complex."""

    stage = "ext-witness"

    def _run(self, ctx: PipelineContext, diagnostics: list) -> Dict[str, Any]:
        rng = ctx.rng_for(self.stage)
        failures = []
        data: Dict[str, Any] = {"witnesses": {}}

        for C in complexes_for(ctx):
            if C.k == 0:
                try:
                    ext_witness(C, 0, CochainTuple.zero(C.gens, C.n, 0))
                except WitnessRefusedError as e:
                    data["witnesses"]["k=0"] = "refused"
                    diagnostics.append(f"k=0: {e}")
                continue
            levels = self._witnesses(C, ctx, rng, failures)
            data["witnesses"][f"k={C.k}"] = levels

        data["euler_round_trips"] = self._euler_round_trips(ctx, rng, failures)

        if ctx.weight.rank == ctx.f.nvars:
            data["oracle"] = self._oracle(ctx, failures)
        else:
            diagnostics.append("some weight is zero; slice oracle skipped")

        if failures:
            raise InconsistencyError("Ext witness checks failed", "; ".join(failures))
        return data

    def _witnesses(self, C: SpencerComplex, ctx: PipelineContext, rng, failures: list) -> Dict[str, Any]:
        samples = ctx.session.samples
        degree = ctx.session.degree_bound
        levels = {}

        zero = ext_witness(C, 0, CochainTuple.zero(C.gens, C.n, 0))
        if not zero.found:
            failures.append(f"k={C.k}: zero cocycle at level 0 rejected")
        levels["0"] = {"found": int(zero.found), "samples": 1}

        for level in range(1, C.n + 1):
            found = 0
            for _ in range(samples):
                if level == C.n:
                    z = random_cochain(C, level, rng, degree, settings.RANDOM_TERMS)
                else:
                    _, z = random_coboundary(C, level, rng, degree, settings.RANDOM_TERMS)
                result = ext_witness(C, level, z)
                if result.found:
                    found += 1
                else:
                    failures.append(f"k={C.k}, level {level}: {result.status}")
            levels[str(level)] = {"found": found, "samples": samples}
        logger.info(
            f"  k={C.k}: witnesses "
            + ", ".join(f"l={lv} {v['found']}/{v['samples']}" for lv, v in levels.items())
        )
        return levels

    def _euler_round_trips(self, ctx: PipelineContext, rng, failures: list) -> Dict[str, int]:
        """(chi + c) o solve = id and solve o (chi + c) = id for the diagonal constants in use."""
        w = ctx.weight
        gens = ctx.f.gens
        chi = euler_field(w, gens).as_operator()
        constants = sorted({
            c
            for C in ctx.complexes.values() if C.k >= 1
            for level in range(1, C.n + 1)
            for c in C.diagonal_constants(level).values()
        })
        trips = {}
        for c in constants:
            op = chi + c
            passed = 0
            for _ in range(ctx.session.samples):
                psi = random_polynomial(rng, gens, ctx.session.degree_bound, settings.RANDOM_TERMS)
                forward = op_apply(op, euler_solve(c, psi, w)) == psi
                backward = euler_solve(c, op_apply(op, psi), w) == psi
                if forward and backward:
                    passed += 1
                else:
                    failures.append(f"Euler round trip failed for c = {c}: {psi}")
            trips[format_rational(c)] = passed
        return trips

    def _oracle(self, ctx: PipelineContext, failures: list) -> Dict[str, Any]:
        """dim ker = dim im on every weight slice up to ORACLE_MAX_WEIGHT."""
        max_weight = Fraction(settings.ORACLE_MAX_WEIGHT)
        out = {}
        for C in ctx.complexes.values():
            if C.k < 1:
                continue
            slices = 0
            for nu in slice_weights(C, max_weight):
                for level in range(C.n + 1):
                    dims = graded_slice_oracle(C, level, nu)
                    slices += 1
                    if not dims.exact:
                        failures.append(
                            f"k={C.k}, level {level}, nu = {nu}: "
                            f"dim ker {dims.kernel} != dim im {dims.image}"
                        )
            out[f"k={C.k}"] = {"slices": slices, "max_weight": format_rational(max_weight)}
            logger.info(f"  k={C.k}: oracle checked {slices} slices")
        return out

"""
gen: emit a generated or named instance with its reference values
"""
from fractions import Fraction

from src.cli.base_command import EXIT_OK, BaseCommand, CommandOutcome
from src.cli.helpers import param_int, param_list, param_rational, parse_params, textify
from src.engine.errors import PreconditionError
from src.engine.gap import (
    DiagonalParams,
    claim_invariant_check,
    diagonal_instance,
    gen_fixture,
    gen_two_effort_gap,
    gen_unbounded_gap,
    harmonic_bound_check,
)
from src.parser import emit_instance
from src.schemas import GenDocument, action_number
from src.utils.core.config_helpers import parse_unbounded_settings

GENERATORS = ("example1", "sop_tight", "monotone_omega", "mlrp_b4", "two_effort", "unbounded", "diagonal")


class GenCommand(BaseCommand):

    @property
    def name(self) -> str:
        return "gen"

    @property
    def display_name(self) -> str:
        return f"Generate: {self.args.generator}"

    def _fixture(self, params: dict) -> tuple:
        name = self.args.generator
        kwargs: dict = {}
        if name == "sop_tight":
            kwargs = {"m": param_int(params, "m", 5), "delta": param_rational(params, "delta", Fraction(1, 100))}
        elif name == "monotone_omega":
            kwargs = {
                "n": param_int(params, "n", 5),
                "eps": param_rational(params, "eps", Fraction(1, 10)),
                "gamma": param_rational(params, "gamma", Fraction(1, 100)),
                "delta": param_rational(params, "delta", Fraction(1, 100)),
            }
        fixture = gen_fixture(name, **kwargs)
        return fixture.instance, kwargs, fixture.reference

    def _two_effort(self, params: dict) -> tuple:
        eps = param_rational(params, "eps", Fraction(1, 10))
        delta = param_rational(params, "delta", Fraction(1, 2))
        inst = gen_two_effort_gap(eps, delta)
        reference = {
            "rho": 2 - eps,
            "single_utility": eps,
            "ambiguous_utility": 2 * eps - eps * eps,
            "high_action_t2": delta * (1 - eps),
            "high_action_payment": 1 - eps,
        }
        return inst, {"eps": eps, "delta": delta}, reference

    def _diagonal(self, params: dict) -> tuple:
        rewards = param_list(params, "rewards")
        if not rewards:
            raise PreconditionError("diagonal needs rewards=r1,r2,... with r1 = 0")
        welfare = param_rational(params, "W", Fraction(0))
        cost = param_rational(params, "c", Fraction(0))
        inst = diagonal_instance(DiagonalParams(tuple(rewards), welfare, cost))
        return inst, {"rewards": rewards, "W": welfare, "c": cost}, {}

    def _unbounded(self, params: dict) -> tuple:
        settings = parse_unbounded_settings(self.context.config)
        x = param_int(params, "x", settings.default_x)
        delta = param_rational(params, "delta", Fraction(1, 10))
        inst, derived = gen_unbounded_gap(
            x,
            delta,
            rewards=param_list(params, "rewards"),
            target_probs=param_list(params, "target"),
            m=param_int(params, "m", 3),
            settings=settings,
        )
        out = {
            "x": x,
            "delta": delta,
            "u_bar": derived.u_bar,
            "length": derived.length,
            "regular_layers": derived.regular_layers,
            "amplified": derived.amplified,
            "attempts": derived.attempts,
            "target_action": action_number(inst, derived.target),
            "target_probs": list(derived.target_probs),
        }
        reference = {
            "target_cost": derived.target_cost,
            "ambiguous_utility": derived.delta,
            "rho_lower_bound": derived.rho_lower_bound,
            "tau": [list(t.payments) for t in derived.tau_star],
        }
        if params.get("checks", "false").lower() in ("1", "true", "yes"):
            claim = claim_invariant_check(inst, derived, self.threads)
            reference["claim_max_single_utility"] = claim.max_utility
            reference["claim_holds"] = claim.holds
            reference["harmonic_failures"] = harmonic_bound_check(derived)
        return inst, out, reference

    def execute(self) -> CommandOutcome:
        params = parse_params(self.args.params)
        name = self.args.generator
        if name == "two_effort":
            inst, used, reference = self._two_effort(params)
        elif name == "diagonal":
            inst, used, reference = self._diagonal(params)
        elif name == "unbounded":
            inst, used, reference = self._unbounded(params)
        else:
            inst, used, reference = self._fixture(params)
        self.logger.info("%s: %d actions, %d outcomes", name, inst.n, inst.m)
        document = GenDocument(
            generator=name,
            instance=emit_instance(inst),
            params=textify(used),
            reference=textify(reference),
        )
        return CommandOutcome(EXIT_OK, document.model_dump())

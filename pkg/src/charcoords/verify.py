"""Identity-verification suites binding all modules together.

Each suite sweeps a configurable range of moduli, characters and exponents
and compares two independently computed values, recording every mismatch
(failure-fast is off so convention bugs surface in full).  Exact suites
never consult floating point; the float suite checks only complex_eval
against direct double-precision summation, never the exact paths.

Suites are deterministic for a given config, and every failure record
carries the inputs needed to reproduce it from the CLI.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field, fields, replace
from typing import Callable

from .arith import is_prime
from .characters import enumerate_characters, gauss_sum
from .combinatorics import (
    bernoulli_conv_coeff,
    bernoulli_conv_coeff_bruteforce,
    coeff_bridge,
    cot_power_coeff,
)
from .coordinates import (
    coord_cotangent_closed,
    coord_definitional,
    coord_power_closed,
    coord_power_primitive,
    direct_sum_float,
    reconstruct,
)
from .cotangent import cotangent_number, icot_power, icot_value
from .cyclotomic import CycElem, to_common_order
from .series import (
    bernoulli_conv_coeff_from_series,
    verify_power_decomposition,
    verify_stirling_identity,
)

SUITE_NAMES = (
    "power_closed_form",
    "cotnum_closed_form",
    "coeff_bridge",
    "primitive_closed_form",
    "float_crosscheck",
    "reconstruction",
    "series_oracle",
)


@dataclass(frozen=True)
class SuiteConfig:
    """Ranges and tolerances for the verification suites.

    Defaults reproduce the full published sweep; every field can be
    overridden from the CLI (or a config file).
    """

    n_max: int = 30
    r_max: int = 6
    j_max: int = 6
    float_tolerance: float = 1e-8
    suites: tuple[str, ...] = SUITE_NAMES
    bridge_r_max: int = 20
    eq_primitive_n_max: int = 23
    eq_primitive_r_max: int = 5
    eq_primitive_extra_moduli: tuple[int, ...] = (4,)
    float_n_max: int = 50
    float_r_max: int = 4
    recon_n_max: int = 20
    recon_r_max: int = 4
    recon_j_max: int = 4
    decomposition_r_max: int = 12
    stirling_k_max: int = 10
    d_oracle_r_max: int = 10
    d_series_r_max: int = 8


@dataclass
class CaseFailure:
    suite: str
    inputs: dict
    lhs: str
    rhs: str

    def to_json_dict(self) -> dict:
        return {"suite": self.suite, "inputs": self.inputs, "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class SuiteResult:
    name: str
    cases: int
    failures: list[CaseFailure] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "cases": self.cases,
            "failures": [f.to_json_dict() for f in self.failures],
            "passed": self.passed,
            "seconds": round(self.seconds, 3),
        }


def _value_str(v) -> str:
    if isinstance(v, CycElem):
        return "CycElem[%d]%s" % (v.order, [str(c) for c in v.coeffs])
    return repr(v)


class _Recorder:
    def __init__(self, name: str):
        self.name = name
        self.cases = 0
        self.failures: list[CaseFailure] = []
        self.t0 = time.perf_counter()

    def check(self, inputs: dict, lhs, rhs, ok=None) -> None:
        self.cases += 1
        if ok is None:
            ok = lhs == rhs
        if not ok:
            self.failures.append(
                CaseFailure(self.name, dict(inputs), _value_str(lhs), _value_str(rhs))
            )

    def result(self) -> SuiteResult:
        return SuiteResult(
            self.name, self.cases, self.failures, time.perf_counter() - self.t0
        )


def suite_power_closed_form(config: SuiteConfig) -> SuiteResult:
    """Closed form vs definitional coordinate for (i cot(pi/n))^r, all
    characters mod n <= n_max, r <= r_max.

    Parity-mismatched rows must come out exactly zero on both sides; the
    test elements' purity (real for even r, imaginary for odd) is asserted
    along the way.
    """
    rec = _Recorder("power_closed_form")
    for n in range(2, config.n_max + 1):
        chars = enumerate_characters(n)
        for r in range(1, config.r_max + 1):
            a = icot_power(r, n)
            mirror = a if r % 2 == 0 else -a
            rec.check({"n": n, "r": r, "purity": "conjugate"}, a.conjugate(), mirror)
            for idx, chi in enumerate(chars):
                lhs = coord_power_closed(chi, r)
                rhs = coord_definitional(chi, a)
                rec.check(
                    {"n": n, "char_index": idx, "r": r, "methods": "closed/def"},
                    lhs,
                    rhs,
                )
    return rec.result()


def suite_cotnum_closed_form(config: SuiteConfig) -> SuiteResult:
    """Closed form vs definitional coordinate for cotangent numbers
    i^j cot_(j-1)(pi/n), all characters mod n <= n_max, j <= j_max."""
    rec = _Recorder("cotnum_closed_form")
    for n in range(2, config.n_max + 1):
        chars = enumerate_characters(n)
        for j in range(1, config.j_max + 1):
            a = cotangent_number(j, n)
            mirror = a if j % 2 == 0 else -a
            rec.check({"n": n, "j": j, "purity": "conjugate"}, a.conjugate(), mirror)
            for idx, chi in enumerate(chars):
                lhs = coord_cotangent_closed(chi, j)
                rhs = coord_definitional(chi, a)
                rec.check(
                    {"n": n, "char_index": idx, "j": j, "methods": "cotnum/def"},
                    lhs,
                    rhs,
                )
    return rec.result()


def suite_coeff_bridge(config: SuiteConfig) -> SuiteResult:
    """cot_power_coeff(r, j) == coeff_bridge(r, j) exactly, for
    1 <= j <= r <= bridge_r_max of equal parity."""
    rec = _Recorder("coeff_bridge")
    for r in range(1, config.bridge_r_max + 1):
        for j in range(1, r + 1):
            if (r - j) % 2 == 0:
                rec.check(
                    {"r": r, "j": j},
                    cot_power_coeff(r, j),
                    coeff_bridge(r, j),
                )
    return rec.result()


def suite_primitive_closed_form(config: SuiteConfig) -> SuiteResult:
    """Bernoulli-convolution closed form vs definitional coordinate for
    primitive characters: prime moduli <= eq_primitive_n_max plus the extra
    moduli (4 by default), r <= eq_primitive_r_max."""
    rec = _Recorder("primitive_closed_form")
    moduli = [n for n in range(2, config.eq_primitive_n_max + 1) if is_prime(n)]
    moduli += [n for n in config.eq_primitive_extra_moduli if n not in moduli]
    for n in sorted(moduli):
        chars = enumerate_characters(n)
        for r in range(1, config.eq_primitive_r_max + 1):
            a = icot_power(r, n)
            for idx, chi in enumerate(chars):
                if chi.conductor() != n:
                    continue
                lhs = coord_power_primitive(chi, r)
                rhs = coord_definitional(chi, a)
                rec.check(
                    {"n": n, "char_index": idx, "r": r, "methods": "prim/def"},
                    lhs,
                    rhs,
                )
    return rec.result()


def suite_float_crosscheck(config: SuiteConfig) -> SuiteResult:
    """|direct float character sum - complex_eval(y * tau)| < tolerance.

    The right side is the exact product of the coordinate
    y(conj(chi) | (i cot)^r) with tau(chi_f), formed in the common
    cyclotomic field and then evaluated once; the match binds complex_eval
    (and the defining identities) to an independent double-precision
    computation.  This suite never adjudicates the exact paths.
    """
    rec = _Recorder("float_crosscheck")
    tol = config.float_tolerance
    for n in range(2, config.float_n_max + 1):
        chars = enumerate_characters(n)
        for r in range(1, config.float_r_max + 1):
            a = icot_power(r, n)
            for idx, chi in enumerate(chars):
                left = direct_sum_float(chi, r)
                y = coord_definitional(chi.conjugate(), a)
                tau = gauss_sum(chi.primitive_part())
                ye, taue = to_common_order(y, tau)
                right = (ye * taue).complex_eval()
                err = abs(left - right)
                rec.check(
                    {"n": n, "char_index": idx, "r": r, "abs_error": err},
                    left,
                    right,
                    ok=err < tol,
                )
    return rec.result()


def suite_reconstruction(config: SuiteConfig) -> SuiteResult:
    """Round trip a -> coordinates -> a for 1, i*cot, its powers, and
    cotangent numbers, over n <= recon_n_max."""
    rec = _Recorder("reconstruction")
    for n in range(2, config.recon_n_max + 1):
        chars = enumerate_characters(n)
        elements = [("one", CycElem.one(n)), ("icot", icot_value(n))]
        elements += [
            ("icot_power_%d" % r, icot_power(r, n))
            for r in range(2, config.recon_r_max + 1)
        ]
        elements += [
            ("cotangent_number_%d" % j, cotangent_number(j, n))
            for j in range(1, config.recon_j_max + 1)
        ]
        for label, a in elements:
            coords = {chi: coord_definitional(chi, a) for chi in chars}
            back = reconstruct(coords, n)
            rec.check({"n": n, "element": label}, back, a)
    return rec.result()


def suite_series_oracle(config: SuiteConfig) -> SuiteResult:
    """Series-level checks: the Stirling derivative identity, the
    cotangent-power decomposition, and both independent oracles for the
    Bernoulli-convolution coefficients."""
    rec = _Recorder("series_oracle")
    for k in range(1, config.stirling_k_max + 1):
        rec.check(
            {"identity": "stirling", "k": k, "order": 2 * k + 4},
            True,
            True,
            ok=verify_stirling_identity(k, 2 * k + 4),
        )
    for r in range(1, config.decomposition_r_max + 1):
        rec.check(
            {"identity": "power_decomposition", "r": r, "order": 2 * r + 4},
            True,
            True,
            ok=verify_power_decomposition(r, 2 * r + 4),
        )
    for r in range(1, config.d_oracle_r_max + 1):
        for j in range(1, r + 1):
            rec.check(
                {"identity": "conv_vs_bruteforce", "r": r, "j": j},
                bernoulli_conv_coeff(r, j),
                bernoulli_conv_coeff_bruteforce(r, j),
            )
    for r in range(1, config.d_series_r_max + 1):
        for j in range(1, r + 1):
            if (r - j) % 2 == 0:
                rec.check(
                    {"identity": "conv_vs_series", "r": r, "j": j},
                    bernoulli_conv_coeff(r, j),
                    bernoulli_conv_coeff_from_series(r, j),
                )
    return rec.result()


SUITES: dict[str, Callable[[SuiteConfig], SuiteResult]] = {
    "power_closed_form": suite_power_closed_form,
    "cotnum_closed_form": suite_cotnum_closed_form,
    "coeff_bridge": suite_coeff_bridge,
    "primitive_closed_form": suite_primitive_closed_form,
    "float_crosscheck": suite_float_crosscheck,
    "reconstruction": suite_reconstruction,
    "series_oracle": suite_series_oracle,
}


def run_suites(config: SuiteConfig) -> list[SuiteResult]:
    """Run the suites named in the config, in canonical order."""
    unknown = [s for s in config.suites if s not in SUITES]
    if unknown:
        raise ValueError(
            "unknown suite(s) %s; available: %s" % (unknown, ", ".join(SUITE_NAMES))
        )
    return [SUITES[name](config) for name in SUITE_NAMES if name in config.suites]


def config_with_overrides(base: SuiteConfig | None = None, **overrides) -> SuiteConfig:
    """A SuiteConfig with the given fields replaced, values coerced from
    strings where necessary (used by the CLI and its config files)."""
    cfg = base or SuiteConfig()
    coerced = {}
    types = {f.name: f for f in fields(SuiteConfig)}
    for key, value in overrides.items():
        if key not in types:
            raise ValueError("unknown config key %r" % key)
        current = getattr(cfg, key)
        if isinstance(value, str):
            if isinstance(current, bool):
                value = value.lower() in ("1", "true", "yes")
            elif isinstance(current, int):
                value = int(value)
            elif isinstance(current, float):
                value = float(value)
            elif isinstance(current, tuple):
                parts = [p.strip() for p in value.split(",") if p.strip()]
                value = tuple(int(p) if p.isdigit() else p for p in parts)
        coerced[key] = value
    return replace(cfg, **coerced)

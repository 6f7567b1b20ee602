"""Command-line surface: ``cherednik jack | verify | gordon``.

Machine-readable output with ``--json``; deterministic ordering throughout so
outputs can be kept as golden files.  Options may also be supplied in a
``key=value`` config file via ``--config``; explicit flags win.

Exit codes: 0 success, 1 internal error or failed verification,
2 precondition/guard failure (bad arguments, non-generic point, caveats).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .cyclotomic import Cyc
from .jack import NonGenericError, jack_by_intertwiners, jack_by_solve
from .operators import PolyRep, monomials_up_to
from .pbw import check_pbw, rca_forms
from .intertwiners import verify_braid_and_quadratic
from .reptheory import (
    catalan_series, coxeter_number, exponents_and_freeness, genericity_guard,
    gordon_point, graded_char_L1, invariant_char_series, is_irreducible,
    is_well_generated, l1_dimension_by_counting, l1_series_by_counting,
    singular_vector_check,
)
from .scalars import GenericParameters, ParamPoint, SpecializedParameters
from .groups import GroupElement

OK, INTERNAL, PRECONDITION = 0, 1, 2


@dataclass
class JobConfig:
    """Validated knobs shared by the subcommands."""

    r: int
    p: int
    n: int
    mode: str = "generic"
    point: Optional[ParamPoint] = None
    mus: list[tuple[int, ...]] = field(default_factory=list)
    max_deg: int = 4
    truncation: int = 12
    bound: Optional[int] = None
    suite: str = "all"
    check_both: bool = False
    inject_fault: Optional[str] = None
    threads: int = 1
    as_json: bool = False

    def validate(self):
        if self.r < 1 or self.p < 1 or self.r % self.p or self.n < 1:
            raise ValueError(f"invalid group ({self.r},{self.p},{self.n})")
        if self.max_deg <= 0 or self.truncation <= 0 or self.threads < 1:
            raise ValueError("degree caps, truncations and threads must be positive")
        if self.mode == "specialized" and self.point is None:
            raise ValueError("specialized mode requires a parameter point")
        for mu in self.mus:
            if len(mu) != self.n or any(v < 0 for v in mu):
                raise ValueError(f"bad composition {mu} for rank {self.n}")

    def params(self):
        if self.mode == "specialized":
            return SpecializedParameters(self.point)
        return GenericParameters(self.r, self.p)


def _parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def _read_config(path: str) -> dict:
    out = {}
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, _, val = line.partition("=")
            out[key.strip()] = val.strip()
    return out


def _merge(args, cfg: dict, key: str, conv=str, default=None):
    val = getattr(args, key, None)
    if val is not None:
        return val
    if key in cfg:
        return conv(cfg[key])
    return default


def _build_config(args) -> JobConfig:
    cfg = _read_config(args.config) if args.config else {}
    group = _merge(args, cfg, "group")
    if group is None:
        raise ValueError("--group r,p,n is required")
    r, p, n = (int(t) for t in str(group).split(","))
    mus = [tuple(int(t) for t in m.split(","))
           for m in (getattr(args, "mu", None) or [])]
    if not mus and "mu" in cfg:
        mus = [tuple(int(t) for t in cfg["mu"].split(","))]
    mode = _merge(args, cfg, "mode", str, "generic")
    point = None
    if getattr(args, "gordon_point", False):
        mode = "specialized"
        point = gordon_point(r, p, n)
    else:
        c0 = _merge(args, cfg, "c0", _parse_fraction)
        if c0 is not None:
            kappa = _merge(args, cfg, "kappa", _parse_fraction, Fraction(1))
            cdiag_txt = _merge(args, cfg, "cdiag", str)
            cdiag = [Fraction(t) for t in cdiag_txt.split(",")] \
                if cdiag_txt else [Fraction(0)] * (r // p - 1)
            point = ParamPoint.from_c(r, p, kappa, c0, cdiag)
            mode = "specialized"
    job = JobConfig(
        r=r, p=p, n=n, mode=mode, point=point, mus=mus,
        max_deg=int(_merge(args, cfg, "max_deg", int, 4)),
        truncation=int(_merge(args, cfg, "truncation", int, 12)),
        bound=_merge(args, cfg, "bound", int),
        suite=_merge(args, cfg, "suite", str, "all"),
        check_both=bool(getattr(args, "check_both", False)),
        inject_fault=getattr(args, "inject_fault", None),
        threads=int(_merge(args, cfg, "threads", int, 1)),
        as_json=bool(getattr(args, "json", False)),
    )
    job.validate()
    return job


def _emit(payload: dict, as_json: bool, text_lines) -> None:
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_jack(job: JobConfig) -> int:
    rep = PolyRep(job.r, job.p, job.n, job.params())
    results = []
    for mu in job.mus:
        jv = jack_by_solve(rep, mu)
        entry = jv.to_json()
        entry["polynomial"] = str(jv.poly)
        if job.check_both:
            other = jack_by_intertwiners(rep, mu)
            agree = other.poly == jv.poly and other.weight == jv.weight
            entry["constructions_agree"] = agree
            if not agree:
                _emit({"status": "fail", "mu": list(mu)}, job.as_json,
                      [f"constructions disagree at mu={mu}"])
                return INTERNAL
        results.append(entry)
    payload = {"group": [job.r, job.p, job.n], "mode": job.mode,
               "eigenvectors": results}
    lines = []
    for entry in results:
        mu = ",".join(str(v) for v in entry["mu"])
        lines.append(f"f_({mu}) = {entry['polynomial']}")
        lines.append(f"  z-eigenvalues: {entry['weight']['z']}")
        lines.append(f"  zeta-exponents: {entry['weight']['zeta']}")
        if "constructions_agree" in entry:
            lines.append("  constructions agree")
    _emit(payload, job.as_json, lines)
    return OK


def _verify_suites(job: JobConfig) -> dict:
    fault_dunkl = job.inject_fault == "dunkl-sign"
    fault_pi = job.inject_fault == "pi-sign"
    rep = PolyRep(job.r, job.p, job.n, job.params(),
                  fault_dunkl_sign=fault_dunkl)
    reports = {}
    wanted = job.suite
    if wanted in ("all", "relations"):
        reports["relations"] = rep.check_relations(job.max_deg,
                                                   workers=job.threads)
    if wanted in ("all", "commutators"):
        reports["commutators"] = rep.commutator_report(job.max_deg,
                                                       workers=job.threads)
    if wanted in ("all", "pbw"):
        reports["pbw"] = check_pbw(rca_forms(job.r, job.p, job.n, rep.params))
    if wanted in ("all", "intertwiners"):
        grid = [mu for mu in monomials_up_to(job.n, min(job.max_deg, 4))]
        clean = PolyRep(job.r, job.p, job.n, job.params())
        reports["intertwiners"] = verify_braid_and_quadratic(
            clean, grid, fault_pi_sign=fault_pi)
    return reports


def cmd_verify(job: JobConfig) -> int:
    reports = _verify_suites(job)
    ok = all(rep.get("status") == "pass" for rep in reports.values())
    payload = {"group": [job.r, job.p, job.n], "suite": job.suite,
               "max_degree": job.max_deg,
               "status": "pass" if ok else "fail", "reports": reports}
    lines = [f"group G({job.r},{job.p},{job.n}), suite {job.suite}:"]
    for name, rep in reports.items():
        lines.append(f"  {name}: {rep['status']}")
        if rep["status"] != "pass":
            detail = {k: v for k, v in rep.items()
                      if k not in ("status", "group")}
            lines.append(f"    witness: {detail}")
    lines.append("PASS" if ok else "FAIL")
    _emit(payload, job.as_json, lines)
    return OK if ok else INTERNAL


def cmd_gordon(job: JobConfig) -> int:
    r, p, n = job.r, job.p, job.n
    if r == 1:
        _emit({"status": "unsupported", "reason": "r must exceed 1"},
              job.as_json, ["r must exceed 1"])
        return PRECONDITION
    if not is_irreducible(r, p, n):
        caveat = ("G(2,2,2) is reducible: the rank-2 case with p = r = 2 "
                  "is outside the diagonal-coinvariant theorems"
                  if (r, p, n) == (2, 2, 2)
                  else f"G({r},{p},{n}) does not act irreducibly")
        _emit({"status": "caveat", "caveat": caveat}, job.as_json, [caveat])
        return PRECONDITION
    h = coxeter_number(r, p, n)
    k = h + 1
    point = gordon_point(r, p, n)
    guard = genericity_guard(point, k, n, bound=job.bound)
    if not guard["ok"]:
        _emit({"status": "guard-failure", "h": h, "k": k, "guard": guard},
              job.as_json,
              [f"guard failed: {guard['violations']}"])
        return PRECONDITION
    singular = singular_vector_check(r, p, n, point, k)
    dim_count = l1_dimension_by_counting(n, k)
    ident = graded_char_L1(r, p, n, GroupElement.identity(r, n), k)
    dim_char = ident.at_one()
    by_degree = l1_series_by_counting(n, k, n * (k - 1))
    cat = catalan_series(r, p, n, job.truncation)
    inv_series = invariant_char_series(r, p, n, k, job.truncation)
    expf = exponents_and_freeness(r, p, n, k)
    # the q-Catalan identity is only asserted for well-generated groups
    if is_well_generated(r, p, n):
        catalan_match = [int(v) for v in inv_series] == cat["coefficients"]
        catalan_ok = catalan_match
    else:
        catalan_match = None
        catalan_ok = True
    dims_agree = (dim_count == k ** n
                  and dim_char == Cyc.from_rational(r, k ** n)
                  and sum(by_degree) == dim_count)
    ok = (singular["status"] == "pass" and dims_agree and catalan_ok
          and expf["det_identity"] and expf["multiset_match"])
    payload = {
        "status": "pass" if ok else "fail",
        "group": [r, p, n], "h": h, "k": k,
        "point": {"c": f"{k}/{h}"},
        "guard": guard,
        "singular_vectors": singular,
        "dim_L1": {"count": dim_count, "k_power": k ** n,
                   "character_limit": str(dim_char),
                   "by_degree": by_degree},
        "identity_character": {
            "series": [str(c) for c in ident.series(job.truncation)]},
        "catalan": cat,
        "catalan_invariant_match": catalan_match,
        "exponents": expf,
    }
    lines = [
        f"G({r},{p},{n}): h = {h}, k = h+1 = {k}, c_s = {k}/{h}",
        f"guard: {'pass' if guard['ok'] else guard['violations']}",
        f"singular vectors: {singular['status']}",
        f"dim L(1) = {dim_count} (= (h+1)^n = {k ** n}; "
        f"character limit {dim_char})",
        f"Catalan series: {cat['coefficients']} (value {cat['at_one']} at t=1)",
        "invariant character matches Catalan series: "
        + ("not asserted (group is not well-generated)"
           if catalan_match is None else str(catalan_match)),
        f"exponents: {expf['exponents']} "
        f"(multiset match: {expf['multiset_match']})",
        "PASS" if ok else "FAIL",
    ]
    _emit(payload, job.as_json, lines)
    return OK if ok else INTERNAL


# ---------------------------------------------------------------------------
# argument plumbing
# ---------------------------------------------------------------------------


def _add_common(sp):
    sp.add_argument("--group", help="r,p,n")
    sp.add_argument("--config", help="key=value config file; flags win")
    sp.add_argument("--json", action="store_true", help="machine output")
    sp.add_argument("--threads", type=int, default=None)
    sp.add_argument("--mode", choices=["generic", "specialized"], default=None)
    sp.add_argument("--kappa", type=_parse_fraction, default=None)
    sp.add_argument("--c0", type=_parse_fraction, default=None,
                    help="specialize c0 (rational)")
    sp.add_argument("--cdiag", default=None,
                    help="comma list of the diagonal class parameters")
    sp.add_argument("--gordon-point", action="store_true",
                    help="specialize at c_s = (h+1)/h")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="cherednik",
        description="Exact rational Cherednik computations for G(r,p,n)")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("jack", help="construct eigenvectors f_mu")
    _add_common(sp)
    sp.add_argument("--mu", action="append", help="composition, e.g. 1,0")
    sp.add_argument("--check-both", action="store_true",
                    help="cross-check both constructions")

    sp = sub.add_parser("verify", help="run verification suites")
    _add_common(sp)
    sp.add_argument("--suite", default=None,
                    choices=["all", "relations", "commutators", "pbw",
                             "intertwiners"])
    sp.add_argument("--max-deg", dest="max_deg", type=int, default=None)
    sp.add_argument("--inject-fault", dest="inject_fault", default=None,
                    choices=["dunkl-sign", "pi-sign"],
                    help="deliberately break an operator (for testing)")

    sp = sub.add_parser("gordon", help="reproduce the coinvariant quotient")
    _add_common(sp)
    sp.add_argument("--truncation", type=int, default=None)
    sp.add_argument("--bound", type=int, default=None,
                    help="hyperplane scanning bound")

    args = parser.parse_args(argv)
    try:
        job = _build_config(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PRECONDITION
    try:
        if args.command == "jack":
            if not job.mus:
                print("error: at least one --mu is required", file=sys.stderr)
                return PRECONDITION
            return cmd_jack(job)
        if args.command == "verify":
            return cmd_verify(job)
        return cmd_gordon(job)
    except NonGenericError as exc:
        report = {"status": "non-generic", "error": str(exc)}
        if job.point is not None:
            from .reptheory import _simple_spectrum_violations
            report["simple_spectrum_violations"] = \
                _simple_spectrum_violations(job.point, job.n)
        print(json.dumps(report, indent=2) if job.as_json
              else f"non-generic point: {exc}", file=sys.stderr)
        return PRECONDITION
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PRECONDITION
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return INTERNAL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

"""Command-line front end: declarative problem configs in, deterministic
reports out.

Subcommands map one-to-one onto the library layers: check (criterion and
oracle), cosets, partition, weights, mahler, norm. Reports render as a
fixed-order text layout or as JSON; both are byte-deterministic for a
fixed config.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from . import __version__
from .errors import ConfigError, RealizationError, ResourceLimitError
from .lie import realize
from .padic import (INF, dist_series, is_prime, mahler_coefficients, r_norm,
                    RNormParam)
from .parahoric import (ParabolicType, build_weyl_group, double_cosets,
                        iwahori_root_partition, weyl_element)
from .roots import (GENERIC, Generic, Root, Weight, build_root_system,
                    weight_of_root)
from .verma import (ALL_POSITIVE, DELTA_ONLY, VARIANTS, VermaModule,
                    bgg_criterion, character_weight, simplicity_oracle,
                    weight_space_basis)

_KEY_ORDER = ("group", "c", "lambda", "variant", "oracle", "oracle_bound",
              "I", "J", "w", "height_bound", "p", "d", "degree", "monomial",
              "t", "tau", "terms")

_GROUP_RE = re.compile(r"([A-G])([1-9])")
_RESSCALARS_RE = re.compile(r"ResScalars\(\s*GL2\s*,\s*([1-9]\d*)\s*\)")

VERDICT_IRREDUCIBLE = "irreducible"
VERDICT_INCONCLUSIVE = "inconclusive"


@dataclass
class ProblemConfig:
    """Parsed and validated problem description."""

    group_kind: str = ""
    group_text: str = ""
    type_label: str = ""
    rank: int = 0
    gamma: int = 0
    c: Optional[tuple] = None
    lam: Optional[tuple] = None
    variant: Optional[str] = None
    oracle: bool = False
    oracle_bound: Optional[int] = None
    subset_i: Optional[Tuple[int, ...]] = None
    subset_j: Optional[Tuple[int, ...]] = None
    word: Optional[Tuple[int, ...]] = None
    height_bound: Optional[int] = None
    p: Optional[int] = None
    d: Optional[int] = None
    degree: Optional[int] = None
    monomial: Optional[Tuple[int, ...]] = None
    t: Optional[Fraction] = None
    tau: Optional[Tuple[Fraction, ...]] = None
    terms: Optional[tuple] = None
    echo: Dict[str, str] = field(default_factory=dict)


def _tokenize_list(s: str):
    tokens = re.findall(r"\[|\]|,|[^\[\],\s]+", s)
    if "".join(tokens).replace(" ", "") != re.sub(r"\s+", "", s):
        raise ValueError("malformed list")
    pos = 0

    def parse():
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError("unexpected end of list")
        tok = tokens[pos]
        if tok == "[":
            pos += 1
            items = []
            if pos < len(tokens) and tokens[pos] == "]":
                pos += 1
                return items
            while True:
                items.append(parse())
                if pos >= len(tokens):
                    raise ValueError("unterminated list")
                if tokens[pos] == ",":
                    pos += 1
                    continue
                if tokens[pos] == "]":
                    pos += 1
                    return items
                raise ValueError("expected ',' or ']'")
        if tok in (",", "]"):
            raise ValueError("unexpected %r" % tok)
        pos += 1
        return tok

    value = parse()
    if pos != len(tokens):
        raise ValueError("trailing content after value")
    return value


def _entry_atom(s: str):
    if s == "generic":
        return GENERIC
    return Fraction(s)


def _rational_atom(s: str) -> Fraction:
    return Fraction(s)


def _int_atom(s: str) -> int:
    f = Fraction(s)
    if f.denominator != 1:
        raise ValueError("expected an integer, got %s" % s)
    return int(f)


def _flat(value, atom, what):
    if not isinstance(value, list) or any(isinstance(x, list) for x in value):
        raise ValueError("%s must be a flat bracketed list" % what)
    return tuple(atom(x) for x in value)


def parse_config(text: str) -> ProblemConfig:
    """Parse the key-value schema, collecting every violation before failing."""
    violations: List[str] = []
    raw: Dict[str, Tuple[int, str]] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            violations.append("line %d: expected 'key = value'" % lineno)
            continue
        key, _, value = stripped.partition("=")
        key = key.strip()
        value = value.strip()
        if key not in _KEY_ORDER:
            violations.append("line %d: unknown key %r" % (lineno, key))
            continue
        if key in raw:
            violations.append("line %d: duplicate key %r" % (lineno, key))
            continue
        if not value:
            violations.append("line %d: empty value for %r" % (lineno, key))
            continue
        raw[key] = (lineno, value)

    cfg = ProblemConfig()
    cfg.echo = {k: raw[k][1] for k in _KEY_ORDER if k in raw}

    def bad(key, message):
        violations.append("line %d: %s" % (raw[key][0], message))

    if "group" in raw:
        value = raw["group"][1]
        cfg.group_text = value
        m = _RESSCALARS_RE.fullmatch(value)
        if m is not None:
            cfg.group_kind = "resscalars"
            cfg.type_label, cfg.rank = "A", 1
            cfg.gamma = int(m.group(1))
        elif value == "GL2":
            cfg.group_kind = "gl2"
            cfg.type_label, cfg.rank = "A", 1
        else:
            m = _GROUP_RE.fullmatch(value)
            if m is None:
                bad("group", "group must be a Dynkin label (A2), GL2, or "
                    "ResScalars(GL2, k); got %r" % value)
            else:
                cfg.group_kind = "lie"
                cfg.type_label, cfg.rank = m.group(1), int(m.group(2))
                try:
                    build_root_system(cfg.type_label, cfg.rank)
                except ConfigError as exc:
                    cfg.group_kind = ""
                    bad("group", str(exc))

    def parse_value(key, convert):
        lineno, value = raw[key]
        try:
            return convert(value)
        except (ValueError, ZeroDivisionError) as exc:
            violations.append("line %d: %s" % (lineno, exc))
            return None

    if "c" in raw:
        parsed = parse_value("c", _tokenize_list)
        if parsed is not None:
            try:
                if cfg.group_kind == "resscalars":
                    if (not isinstance(parsed, list)
                            or not all(isinstance(x, list) for x in parsed)):
                        raise ValueError("c must be a list of exponent pairs "
                                         "for ResScalars")
                    if len(parsed) != cfg.gamma:
                        raise ValueError("expected %d exponent pairs, got %d"
                                         % (cfg.gamma, len(parsed)))
                    rows = []
                    for row in parsed:
                        if len(row) != 2 or any(isinstance(x, list) for x in row):
                            raise ValueError("each exponent pair must have "
                                             "exactly 2 entries")
                        rows.append(tuple(_entry_atom(x) for x in row))
                    cfg.c = tuple(rows)
                else:
                    flat = _flat(parsed, _entry_atom, "c")
                    if cfg.group_kind == "gl2" and len(flat) != 2:
                        raise ValueError("GL2 takes exactly 2 exponents, got %d"
                                         % len(flat))
                    cfg.c = flat
            except (ValueError, ZeroDivisionError) as exc:
                bad("c", str(exc))

    if "lambda" in raw:
        parsed = parse_value("lambda", _tokenize_list)
        if parsed is not None:
            try:
                flat = _flat(parsed, _entry_atom, "lambda")
                if cfg.group_kind == "lie" and len(flat) != cfg.rank:
                    raise ValueError("lambda arity %d does not match rank %d"
                                     % (len(flat), cfg.rank))
                cfg.lam = flat
            except (ValueError, ZeroDivisionError) as exc:
                bad("lambda", str(exc))

    if "variant" in raw:
        value = raw["variant"][1]
        if value not in VARIANTS + ("both",):
            bad("variant", "variant must be delta-only, all-positive, or both")
        else:
            cfg.variant = value

    if "oracle" in raw:
        value = raw["oracle"][1]
        if value not in ("true", "false"):
            bad("oracle", "oracle must be true or false")
        else:
            cfg.oracle = value == "true"

    def positive_int(key, minimum=1):
        value = parse_value(key, _int_atom)
        if value is None:
            return None
        if value < minimum:
            bad(key, "%s must be at least %d" % (key, minimum))
            return None
        return value

    if "oracle_bound" in raw:
        cfg.oracle_bound = positive_int("oracle_bound")
        if cfg.oracle_bound is not None:
            cfg.oracle = True

    for key, attr in (("I", "subset_i"), ("J", "subset_j"), ("w", "word")):
        if key in raw:
            parsed = parse_value(key, _tokenize_list)
            if parsed is not None:
                try:
                    indices = _flat(parsed, _int_atom, key)
                    if any(x < 1 for x in indices):
                        raise ValueError("%s entries must be at least 1" % key)
                    if cfg.group_kind and any(x > cfg.rank for x in indices):
                        raise ValueError("%s entry out of range 1..%d"
                                         % (key, cfg.rank))
                    setattr(cfg, attr, indices)
                except ValueError as exc:
                    bad(key, str(exc))

    if "height_bound" in raw:
        cfg.height_bound = positive_int("height_bound")

    if "p" in raw:
        value = parse_value("p", _int_atom)
        if value is not None:
            if not is_prime(value):
                bad("p", "p must be prime, got %d" % value)
            else:
                cfg.p = value

    if "d" in raw:
        cfg.d = positive_int("d")
    if "degree" in raw:
        cfg.degree = positive_int("degree", minimum=0)

    if "monomial" in raw:
        parsed = parse_value("monomial", _tokenize_list)
        if parsed is not None:
            try:
                mono = _flat(parsed, _int_atom, "monomial")
                if any(x < 0 for x in mono):
                    raise ValueError("monomial exponents must be nonnegative")
                if cfg.d is not None and len(mono) != cfg.d:
                    raise ValueError("monomial arity %d does not match d = %d"
                                     % (len(mono), cfg.d))
                cfg.monomial = mono
            except ValueError as exc:
                bad("monomial", str(exc))

    if "t" in raw:
        value = parse_value("t", _rational_atom)
        if value is not None:
            if not 0 < value < 1:
                bad("t", "t must satisfy 0 < t < 1, got %s" % value)
            else:
                cfg.t = value

    if "tau" in raw:
        parsed = parse_value("tau", _tokenize_list)
        if parsed is not None:
            try:
                tau = _flat(parsed, _rational_atom, "tau")
                if any(x <= 0 for x in tau):
                    raise ValueError("tau entries must be positive")
                if cfg.d is not None and len(tau) != cfg.d:
                    raise ValueError("tau arity %d does not match d = %d"
                                     % (len(tau), cfg.d))
                cfg.tau = tau
            except (ValueError, ZeroDivisionError) as exc:
                bad("tau", str(exc))

    if "terms" in raw:
        parsed = parse_value("terms", _tokenize_list)
        if parsed is not None:
            try:
                if cfg.d is None:
                    raise ValueError("terms requires d to be set")
                if (not isinstance(parsed, list)
                        or not all(isinstance(x, list) for x in parsed)):
                    raise ValueError("terms must be a list of "
                                     "[n_1, ..., n_d, coefficient] rows")
                rows = []
                for row in parsed:
                    if len(row) != cfg.d + 1 or any(isinstance(x, list) for x in row):
                        raise ValueError("each term needs %d indices and one "
                                         "coefficient" % cfg.d)
                    index = tuple(_int_atom(x) for x in row[:-1])
                    if any(x < 0 for x in index):
                        raise ValueError("term indices must be nonnegative")
                    rows.append((index, _rational_atom(row[-1])))
                cfg.terms = tuple(rows)
            except (ValueError, ZeroDivisionError) as exc:
                bad("terms", str(exc))

    if violations:
        def line_of(v):
            m = re.match(r"line (\d+):", v)
            return int(m.group(1)) if m else 0
        raise ConfigError(sorted(violations, key=line_of))
    return cfg


def _require(cfg: ProblemConfig, command: str, *keys: str):
    attr_of = {"group": "group_kind", "lambda": "lam", "I": "subset_i"}
    missing = []
    for key in keys:
        value = getattr(cfg, attr_of.get(key, key))
        if value is None or (key == "group" and not cfg.group_kind):
            missing.append(key)
    if missing:
        raise ConfigError(["%s requires config key %r" % (command, k)
                           for k in missing])


def _fmt(x) -> str:
    if isinstance(x, Generic):
        return "generic"
    if x is INF or x == INF:
        return "inf"
    return str(x)


def _fmt_weight(pairings) -> str:
    return "(" + ", ".join(_fmt(x) for x in pairings) + ")"


def _fmt_pbw(order, vec) -> str:
    parts = []
    for mono, coeff in vec.items():
        factors = []
        for k, n in enumerate(mono):
            if n:
                factors.append("f[%s]" % order[k] + ("^%d" % n if n > 1 else ""))
        body = "*".join(factors) if factors else "1"
        mag = abs(coeff)
        if mag == 1 and factors:
            text = body
        else:
            text = "%s*%s" % (mag, body) if factors else str(mag)
        if not parts:
            parts.append(text if coeff > 0 else "-" + text)
        else:
            parts.append(("+ " if coeff > 0 else "- ") + text)
    return " ".join(parts) if parts else "0"


def _combo_str(coords) -> str:
    if not any(coords):
        return "0"
    return str(Root(tuple(coords)))


def _jsonify(x):
    if isinstance(x, dict):
        return {str(k): _jsonify(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonify(v) for v in x]
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, Generic):
        return "generic"
    if isinstance(x, float):
        return "inf" if x == INF else x
    if isinstance(x, Root):
        return str(x)
    return x


def _provenance(cfg: ProblemConfig) -> dict:
    return {
        "version": "laps " + __version__,
        "ordering": "roots by height then coordinates; exponents and words "
                    "lexicographic",
        "config": dict(cfg.echo),
    }


def _criterion_block(label, rs, lam: Weight, requested: str) -> tuple:
    by_variant = {v: bgg_criterion(rs, lam, v) for v in VARIANTS}
    shown = VARIANTS if requested == "both" else (requested,)
    entries = []
    for v in shown:
        rep = by_variant[v]
        entries.append({
            "embedding": label,
            "variant": v,
            "verdict": rep.verdict,
            "witnesses": [{"beta": str(b), "n": n} for b, n in rep.witnesses],
        })
    disagree = by_variant[DELTA_ONLY].simple != by_variant[ALL_POSITIVE].simple
    return entries, by_variant, disagree


def _run_check(cfg: ProblemConfig) -> dict:
    _require(cfg, "check", "group")
    requested = cfg.variant or ALL_POSITIVE
    verdict_variant = ALL_POSITIVE if requested == "both" else requested

    if cfg.group_kind == "lie":
        _require(cfg, "check", "lambda")
        rs = build_root_system(cfg.type_label, cfg.rank)
        characters = [(None, Weight(cfg.lam))]
        character_echo = {"lambda": [_fmt(x) for x in cfg.lam]}
    elif cfg.group_kind == "gl2":
        if cfg.c is None:
            raise ConfigError(["check requires config key 'c' for GL2"])
        rs = build_root_system("A", 1)
        lam = character_weight(rs, cfg.c)
        characters = [(None, lam)]
        character_echo = {"c": [_fmt(x) for x in cfg.c],
                          "lambda": [_fmt(x) for x in lam.pairings]}
    else:
        if cfg.c is None:
            raise ConfigError(["check requires config key 'c' for ResScalars"])
        rs = build_root_system("A", 1)
        characters = []
        character_echo = {}
        for k, exps in enumerate(cfg.c, 1):
            label = "sigma%d" % k
            lam = character_weight(rs, exps)
            characters.append((label, lam))
            character_echo[label] = {"c": [_fmt(x) for x in exps],
                                     "lambda": [_fmt(x) for x in lam.pairings]}

    criteria = []
    disagree = False
    failing = None
    for label, lam in characters:
        entries, by_variant, dis = _criterion_block(label, rs, lam, requested)
        criteria.extend(entries)
        disagree = disagree or dis
        rep = by_variant[verdict_variant]
        if failing is None and not rep.simple:
            failing = (label, rep.witnesses[0])

    if failing is None:
        verdict, reason = VERDICT_IRREDUCIBLE, None
    else:
        label, (beta, n) = failing
        where = "" if label is None else " for %s" % label
        verdict = VERDICT_INCONCLUSIVE
        reason = ("criterion fails at witness (%s, n = %d)%s; simplicity "
                  "implies irreducibility, the converse is not asserted"
                  % (beta, n, where))

    payload = {
        "command": "check",
        "group": cfg.group_text,
        "character": character_echo,
        "variant": requested,
        "criteria": criteria,
        "variants_disagree": disagree,
        "verdict": verdict,
        "reason": reason,
        "basis": "BGG simplicity criterion, %s variant" % verdict_variant,
    }

    if cfg.oracle:
        oracle_blocks = []
        for label, lam in characters:
            block = {"embedding": label}
            if not lam.is_rational():
                block["skipped"] = ("generic exponents: criterion-only "
                                    "character, nothing to scan")
                oracle_blocks.append(block)
                continue
            try:
                algebra = realize(rs)
            except RealizationError as exc:
                block["skipped"] = str(exc)
                oracle_blocks.append(block)
                continue
            module = VermaModule(algebra, lam)
            report = simplicity_oracle(module, cfg.oracle_bound)
            block["bound"] = report.bound
            block["reducible"] = report.reducible
            witnesses = []
            for nu, vecs in report.witnesses:
                witnesses.append({
                    "weight": "lambda - (%s)" % _combo_str(nu),
                    "dimension": len(vecs),
                    "vectors": [_fmt_pbw(module.pbw_order, v) for v in vecs],
                })
            block["witnesses"] = witnesses
            oracle_blocks.append(block)
        payload["oracle"] = oracle_blocks
    else:
        payload["oracle"] = None

    payload["provenance"] = _provenance(cfg)
    return payload


def _run_cosets(cfg: ProblemConfig) -> dict:
    _require(cfg, "cosets", "group")
    rs = build_root_system(cfg.type_label, cfg.rank)
    group = build_weyl_group(rs)
    subset_i = ParabolicType.of(cfg.subset_i or ())
    subset_j = (ParabolicType.of(cfg.subset_j)
                if cfg.subset_j is not None else subset_i)
    decomposition = double_cosets(group, subset_i, subset_j)
    rows = []
    for rep, size in zip(decomposition.representatives,
                         decomposition.coset_sizes()):
        rows.append({"representative": str(rep), "length": rep.length,
                     "size": size})
    return {
        "command": "cosets",
        "group": cfg.group_text,
        "I": list(subset_i.indices),
        "J": list(subset_j.indices),
        "group_order": len(group),
        "coset_count": len(rows),
        "cosets": rows,
        "provenance": _provenance(cfg),
    }


def _run_partition(cfg: ProblemConfig) -> dict:
    _require(cfg, "partition", "group")
    rs = build_root_system(cfg.type_label, cfg.rank)
    subset_i = ParabolicType.of(cfg.subset_i or ())
    w = weyl_element(rs, cfg.word or ())
    plus, minus = iwahori_root_partition(rs, subset_i, w)
    return {
        "command": "partition",
        "group": cfg.group_text,
        "I": list(subset_i.indices),
        "w": str(w),
        "plus": [str(r) for r in plus],
        "minus": [str(r) for r in minus],
        "provenance": _provenance(cfg),
    }


def _run_weights(cfg: ProblemConfig) -> dict:
    _require(cfg, "weights", "group", "height_bound")
    rs = build_root_system(cfg.type_label, cfg.rank)
    lam_values = cfg.lam if cfg.lam is not None else (0,) * cfg.rank
    lam = Weight(tuple(Fraction(x) if not isinstance(x, Generic) else x
                       for x in lam_values))
    if not lam.is_rational():
        raise ConfigError(["weights requires a rational lambda"])
    module = VermaModule(realize(rs), lam)
    rows = []
    bound = cfg.height_bound
    coords = [()]
    for _ in range(cfg.rank):
        coords = [prefix + (k,) for prefix in coords for k in range(bound + 1)]
    for nu in sorted(coords, key=lambda c: (sum(c), c)):
        if sum(nu) > bound:
            continue
        mu = lam - weight_of_root(rs, Root(nu)) if any(nu) else lam
        dim = len(weight_space_basis(module, mu))
        rows.append({"nu": _combo_str(nu), "height": sum(nu),
                     "dimension": dim})
    return {
        "command": "weights",
        "group": cfg.group_text,
        "lambda": [_fmt(x) for x in lam.pairings],
        "height_bound": bound,
        "rows": rows,
        "provenance": _provenance(cfg),
    }


def _run_mahler(cfg: ProblemConfig) -> dict:
    _require(cfg, "mahler", "p", "d", "degree", "monomial")
    exps = cfg.monomial
    if len(exps) != cfg.d:
        raise ConfigError(["monomial arity %d does not match d = %d"
                           % (len(exps), cfg.d)])

    def f(*point):
        value = 1
        for x, k in zip(point, exps):
            value *= x ** k
        return Fraction(value)

    series = mahler_coefficients(cfg.p, cfg.d, f, cfg.degree)
    rows = [{"n": list(n), "c": c}
            for n, c in sorted(series.coefficients.items(),
                               key=lambda item: (sum(item[0]), item[0]))]
    return {
        "command": "mahler",
        "p": cfg.p,
        "d": cfg.d,
        "degree": cfg.degree,
        "monomial": list(exps),
        "degree_bound": series.degree_bound,
        "coefficients": rows,
        "provenance": _provenance(cfg),
    }


def _run_norm(cfg: ProblemConfig) -> dict:
    _require(cfg, "norm", "p", "d", "t", "tau", "terms")
    if len(cfg.tau) != cfg.d:
        raise ConfigError(["tau arity %d does not match d = %d"
                           % (len(cfg.tau), cfg.d)])
    bound = cfg.degree
    if bound is None:
        bound = max((sum(n) for n, _ in cfg.terms), default=0)
    series = dist_series(cfg.p, cfg.d, dict(cfg.terms), bound)
    param = RNormParam(cfg.t, cfg.tau)
    exponent = r_norm(series, param)
    if exponent is INF or exponent == INF:
        norm_text = "0"
    elif exponent == 0:
        norm_text = "1"
    else:
        norm_text = "%d^(-%s)" % (cfg.p, exponent)
    rows = [{"n": list(n), "c": c}
            for n, c in sorted(series.coefficients.items(),
                               key=lambda item: (sum(item[0]), item[0]))]
    return {
        "command": "norm",
        "p": cfg.p,
        "d": cfg.d,
        "t": cfg.t,
        "tau": list(cfg.tau),
        "degree_bound": series.degree_bound,
        "terms": rows,
        "exponent": "inf" if exponent == INF else exponent,
        "norm": norm_text,
        "provenance": _provenance(cfg),
    }


_RUNNERS = {
    "check": _run_check,
    "cosets": _run_cosets,
    "partition": _run_partition,
    "weights": _run_weights,
    "mahler": _run_mahler,
    "norm": _run_norm,
}


@dataclass(frozen=True, eq=False)
class Report:
    command: str
    payload: dict


def run(cfg: ProblemConfig, command: str) -> Report:
    """Execute one subcommand against a parsed config."""
    runner = _RUNNERS.get(command)
    if runner is None:
        raise ConfigError(["unknown command %r" % command])
    return Report(command, runner(cfg))


def render_machine(report: Report) -> str:
    return json.dumps(_jsonify(report.payload), indent=2) + "\n"


def _text_common_header(payload, lines):
    lines.append("laps report")
    lines.append("command: %s" % payload["command"])


def _text_provenance(payload, lines):
    prov = payload["provenance"]
    lines.append("")
    lines.append("provenance:")
    lines.append("  version: %s" % prov["version"])
    lines.append("  ordering: %s" % prov["ordering"])
    for key, value in prov["config"].items():
        lines.append("  config: %s = %s" % (key, value))


def render_text(report: Report) -> str:
    payload = report.payload
    lines: List[str] = []
    _text_common_header(payload, lines)
    command = report.command

    if command == "check":
        lines.append("group: %s" % payload["group"])
        for key, value in payload["character"].items():
            if isinstance(value, dict):
                inner = ", ".join("%s = %s" % (k, _fmt_weight(v))
                                  for k, v in value.items())
                lines.append("character %s: %s" % (key, inner))
            else:
                lines.append("%s: %s" % (key, _fmt_weight(value)))
        lines.append("variant: %s" % payload["variant"])
        lines.append("")
        for entry in payload["criteria"]:
            where = ("" if entry["embedding"] is None
                     else " %s" % entry["embedding"])
            lines.append("criterion [%s]%s: %s"
                         % (entry["variant"], where, entry["verdict"]))
            for wit in entry["witnesses"]:
                lines.append("  witness: beta = %s, n = %d"
                             % (wit["beta"], wit["n"]))
        if payload["variants_disagree"]:
            lines.append("note: criterion variants disagree at this character")
        lines.append("verdict: %s" % payload["verdict"])
        if payload["reason"]:
            lines.append("reason: %s" % payload["reason"])
        lines.append("basis: %s" % payload["basis"])
        if payload["oracle"] is not None:
            for block in payload["oracle"]:
                where = ("" if block["embedding"] is None
                         else " %s" % block["embedding"])
                lines.append("")
                if "skipped" in block:
                    lines.append("oracle%s: skipped (%s)"
                                 % (where, block["skipped"]))
                    continue
                outcome = ("reducible" if block["reducible"]
                           else "no obstruction up to degree %d" % block["bound"])
                lines.append("oracle%s [bound %d]: %s"
                             % (where, block["bound"], outcome))
                for wit in block["witnesses"]:
                    lines.append("  %s: dim %d"
                                 % (wit["weight"], wit["dimension"]))
                    for vec in wit["vectors"]:
                        lines.append("    vector: %s" % vec)

    elif command == "cosets":
        lines.append("group: %s" % payload["group"])
        lines.append("I: %s" % payload["I"])
        lines.append("J: %s" % payload["J"])
        lines.append("")
        lines.append("group order: %d" % payload["group_order"])
        lines.append("double cosets: %d" % payload["coset_count"])
        for k, row in enumerate(payload["cosets"], 1):
            lines.append("  [%d] representative = %s, length = %d, size = %d"
                         % (k, row["representative"], row["length"],
                            row["size"]))

    elif command == "partition":
        lines.append("group: %s" % payload["group"])
        lines.append("I: %s" % payload["I"])
        lines.append("w: %s" % payload["w"])
        lines.append("")
        lines.append("roots with w^-1(alpha) > 0: [%s]"
                     % ", ".join(payload["plus"]))
        lines.append("roots with w^-1(alpha) < 0: [%s]"
                     % ", ".join(payload["minus"]))

    elif command == "weights":
        lines.append("group: %s" % payload["group"])
        lines.append("lambda: %s" % _fmt_weight(payload["lambda"]))
        lines.append("height bound: %d" % payload["height_bound"])
        lines.append("")
        lines.append("weight-space dimensions at lambda - nu:")
        for row in payload["rows"]:
            lines.append("  nu = %s (height %d): dim %d"
                         % (row["nu"], row["height"], row["dimension"]))

    elif command == "mahler":
        lines.append("p: %d" % payload["p"])
        lines.append("d: %d" % payload["d"])
        lines.append("grid degree: %d" % payload["degree"])
        lines.append("monomial exponents: %s" % payload["monomial"])
        lines.append("")
        lines.append("mahler coefficients (degree bound %d):"
                     % payload["degree_bound"])
        for row in payload["coefficients"]:
            lines.append("  n = %s: c = %s" % (row["n"], _fmt(row["c"])))

    elif command == "norm":
        lines.append("p: %d" % payload["p"])
        lines.append("d: %d" % payload["d"])
        lines.append("t: %s" % _fmt(payload["t"]))
        lines.append("tau: [%s]" % ", ".join(_fmt(x) for x in payload["tau"]))
        lines.append("")
        lines.append("series terms (degree bound %d):" % payload["degree_bound"])
        for row in payload["terms"]:
            lines.append("  n = %s: d_n = %s" % (row["n"], _fmt(row["c"])))
        lines.append("exponent: %s" % _fmt(payload["exponent"]))
        lines.append("norm: %s" % payload["norm"])

    _text_provenance(payload, lines)
    return "\n".join(lines) + "\n"


class _Parser(argparse.ArgumentParser):
    """argparse variant whose usage errors exit 1 (2 is the resource code)."""

    def error(self, message):
        self.exit(1, "%s: error: %s\n" % (self.prog, message))


def main(argv=None) -> int:
    parser = _Parser(prog="laps",
                     description="Irreducibility checks for locally analytic "
                                 "principal series and the surrounding "
                                 "root-system combinatorics.")
    parser.add_argument("--version", action="version",
                        version="laps " + __version__)
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "check": "run the simplicity criterion (and optional oracle)",
        "cosets": "enumerate parabolic double cosets",
        "partition": "split roots by the sign of w^-1(alpha)",
        "weights": "tabulate weight-space dimensions",
        "mahler": "expand a monomial in the binomial basis",
        "norm": "evaluate the weighted Gauss norm of a series",
    }
    for name in ("check", "cosets", "partition", "weights", "mahler", "norm"):
        cmd = sub.add_parser(name, help=helps[name])
        cmd.add_argument("--config", required=True, metavar="PATH",
                         help="path to the problem config file")
        cmd.add_argument("--format", choices=("text", "machine"),
                         default="text", help="report format")
        if name == "check":
            cmd.add_argument("--variant",
                             choices=(DELTA_ONLY, ALL_POSITIVE, "both"),
                             help="criterion variant (overrides the config)")
            cmd.add_argument("--oracle-bound", type=int, dest="oracle_bound",
                             metavar="N",
                             help="enable the oracle with this degree bound")
    args = parser.parse_args(argv)

    try:
        with open(args.config, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        print("laps: cannot read config: %s" % exc, file=sys.stderr)
        return 1

    try:
        cfg = parse_config(text)
        if getattr(args, "variant", None):
            cfg.variant = args.variant
        if getattr(args, "oracle_bound", None) is not None:
            if args.oracle_bound < 1:
                raise ConfigError(["--oracle-bound must be at least 1"])
            cfg.oracle = True
            cfg.oracle_bound = args.oracle_bound
        report = run(cfg, args.command)
    except ConfigError as exc:
        for violation in exc.violations:
            print("laps: config error: %s" % violation, file=sys.stderr)
        return 1
    except (RealizationError, ValueError) as exc:
        print("laps: error: %s" % exc, file=sys.stderr)
        return 1
    except ResourceLimitError as exc:
        print("laps: resource limit: %s" % exc, file=sys.stderr)
        return 2

    if args.format == "machine":
        sys.stdout.write(render_machine(report))
    else:
        sys.stdout.write(render_text(report))
    return 0


if __name__ == "__main__":
    sys.exit(main())

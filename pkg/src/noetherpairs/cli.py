"""Batch command-line front end.

A job is a command, a list of ``key: value`` entries and a set of options.
Input files use the same ``key: value`` lines (``#`` starts a comment);
command-line flags override options found in the file.  Every report is
a list of ``key = value`` lines (``--out kv`` prints ``key=value``), so
runs can be compared byte for byte.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field

from .exterior import (
    DependentVectorsError, NotDecomposableError, PluckerPoint, contraction, grassmann_equations,
    is_decomposable, plucker_coordinates, subspace_from_plucker, subsets,
)
from .fields import field_from_char
from .groebner import Ideal, eliminate, normal_form, saturate_by, saturate_by_variable
from .hilbert import (
    NoStabilizationError, NotHomogeneousError, gotzmann_representation, hilbert_function,
    hilbert_profile, saturate,
)
from .hilbscheme import (
    form_coefficients, hilbert_scheme_data, ideal_from_point, membership_test, on_scheme,
    point_from_ideal,
)
from .numerical import NumericalPolynomial
from .poly import MonomialOrder, ParseError, Ring, basis_size, monomial_basis
from .topology import FiniteClosedFamily

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

COMMANDS = (
    "poly", "groebner", "normal-form", "eliminate", "saturate", "hilbert", "gotzmann", "plucker",
    "grassmann", "hilbscheme", "topology",
    "tame eval", "tame conjoin", "tame zariski", "tame lambda-elim", "tame disjoin",
    "pair rank", "pair theta", "pair chi", "pair minimal", "pair lambda", "pair trdeg",
    "pair sample",
)

DEFAULT_OPTIONS = {"order": "grevlex", "seed": "0", "window": "5", "char": "0", "out": "text"}


class JobError(ValueError):
    """A malformed job: bad entries, missing data or inconsistent options."""


class JobParseError(JobError):
    def __init__(self, message: str, line: int, col: int):
        self.line, self.col = line, col
        super().__init__("line %d, column %d: %s" % (line, col, message))


@dataclass(frozen=True)
class JobSpec:
    command: str
    entries: tuple = ()           # ((key, value), ...) in input order
    options: tuple = ()           # sorted ((name, value), ...)

    def option(self, name: str, default=None):
        return dict(self.options).get(name, DEFAULT_OPTIONS.get(name, default))

    def values(self, key: str) -> list:
        return [v for k, v in self.entries if k == key]

    def value(self, key: str, default=None):
        vals = self.values(key)
        if len(vals) > 1:
            raise JobError("entry %r given %d times" % (key, len(vals)))
        return vals[0] if vals else default

    def with_options(self, **opts) -> "JobSpec":
        merged = dict(self.options)
        merged.update({k: str(v) for k, v in opts.items() if v is not None})
        return JobSpec(self.command, self.entries, tuple(sorted(merged.items())))

    def to_text(self) -> str:
        lines = ["command: %s" % self.command]
        lines += ["option %s: %s" % kv for kv in self.options]
        lines += ["%s: %s" % kv for kv in self.entries]
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str, command: str | None = None) -> "JobSpec":
        cmd = None
        entries, options = [], {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            body = raw.split("#", 1)[0].rstrip()
            if not body.strip():
                continue
            if ":" not in body:
                col = len(body) - len(body.lstrip()) + 1
                raise JobParseError("expected 'key: value'", lineno, col)
            key, val = body.split(":", 1)
            key, val = key.strip(), val.strip()
            if not key:
                raise JobParseError("empty key", lineno, 1)
            if key == "command":
                if cmd is not None:
                    raise JobParseError("repeated command", lineno, 1)
                cmd = " ".join(val.split())
            elif key.startswith("option "):
                options[key[len("option "):].strip()] = val
            else:
                entries.append((key, val))
        if command is not None:
            if cmd is not None and cmd != command:
                raise JobError("input is a %r job, not %r" % (cmd, command))
            cmd = command
        if cmd is None:
            raise JobError("no command given")
        if cmd not in COMMANDS:
            raise JobError("unknown command %r" % cmd)
        return cls(cmd, tuple(entries), tuple(sorted(options.items())))


# ---------------------------------------------------------------- helpers

def _split_list(text: str) -> list:
    """Split on commas outside parentheses."""
    out, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            out.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    tail = "".join(cur).strip()
    if tail or out:
        out.append(tail)
    return [v for v in out if v != ""]


def _tuple_text(text: str) -> list:
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        inner = s[1:-1]
        depth = 0
        balanced = True
        for ch in inner:
            depth += ch == "("
            depth -= ch == ")"
            if depth < 0:
                balanced = False
                break
        if balanced and "," in inner:
            s = inner
    return _split_list(s)


def _bool(v) -> str:
    return "true" if v else "false"


def _int_option(job: JobSpec, name: str, default=None) -> int:
    v = job.option(name, default)
    if v is None:
        raise JobError("option --%s is required" % name)
    try:
        return int(v)
    except ValueError:
        raise JobError("option --%s expects an integer, got %r" % (name, v)) from None


def _ring(job: JobSpec) -> Ring:
    names = job.value("ring")
    if names is None:
        raise JobError("a 'ring:' entry listing the variables is required")
    names = [v for v in _split_list(names)]
    order = job.option("order")
    if order not in ("grevlex", "lex"):
        raise JobError("unsupported order %r" % order)
    char = _int_option(job, "char")
    return Ring(names, field_from_char(char), order=MonomialOrder(order))


def _polys(job: JobSpec, ring: Ring, key: str = "poly") -> list:
    return [ring.parse(v) for v in job.values(key)]


def _parse_Q(text: str) -> NumericalPolynomial:
    ring = Ring(("d",))
    f = ring.parse(text)
    deg = f.total_degree() if f else 0
    coeffs = [f.coefficient((j,)) for j in range(deg + 1)]
    return NumericalPolynomial.from_power_coefficients(coeffs)


def _basis_lines(key, polys):
    polys = list(polys)
    if not polys:
        return [(key, "(0)")]
    return [(key, str(g)) for g in polys]


# ---------------------------------------------------------------- commands

def _cmd_poly(job):
    """Canonical forms of expressions and monomial bases."""
    ring = _ring(job)
    out = []
    for text in job.values("poly"):
        f = ring.parse(text)
        out.append(("poly(%s)" % text, str(f)))
    for text in job.values("same"):
        a, b = (ring.parse(t) for t in text.split("|"))
        out.append(("same(%s)" % text.strip(), _bool(a == b)))
    for d in job.values("degree"):
        basis = monomial_basis(ring, int(d))
        out.append(("basis(%s)" % d, ", ".join(str(ring.monomial(m)) for m in basis)))
        out.append(("size(%s)" % d, str(len(basis))))
    if not out:
        raise JobError("give 'poly:', 'same:' or 'degree:' entries")
    return out


def _cmd_groebner(job):
    ring = _ring(job)
    I = Ideal(ring, _polys(job, ring))
    if job.values("times"):
        I = I * Ideal(ring, _polys(job, ring, "times"))
    gb = I.groebner()
    return [("order", job.option("order")), ("size", str(len(gb)))] + _basis_lines("basis", gb)


def _cmd_normal_form(job):
    ring = _ring(job)
    I = Ideal(ring, _polys(job, ring))
    out = []
    targets = job.values("target")
    if not targets:
        raise JobError("at least one 'target:' entry is required")
    for t in targets:
        r = normal_form(ring.parse(t), I.groebner())
        out.append(("nf(%s)" % t, str(r) if r else "0"))
        out.append(("member(%s)" % t, _bool(not r)))
    return out


def _cmd_eliminate(job):
    ring = _ring(job)
    drop = _split_list(job.value("drop", ""))
    if not drop:
        raise JobError("a 'drop:' entry listing variables is required")
    for v in drop:
        ring.index(v)
    res = eliminate(Ideal(ring, _polys(job, ring)), drop)
    return _basis_lines("basis", res.groebner())


def _cmd_saturate(job):
    ring = _ring(job)
    I = Ideal(ring, _polys(job, ring))
    by = job.value("by")
    if by is None:
        res = saturate(I)
        how = "irrelevant ideal"
    elif by in ring.names:
        res = saturate_by_variable(I, by)
        how = by
    else:
        res = saturate_by(I, ring.parse(by))
        how = by
    return [("by", how)] + _basis_lines("basis", res.groebner())


def _cmd_hilbert(job):
    ring = _ring(job)
    I = Ideal(ring, _polys(job, ring))
    prof = hilbert_profile(I)
    if job.option("polynomial") == "true":
        return [("Q(d)", str(prof.polynomial))]
    window = _int_option(job, "window")
    out = []
    for d in range(window + 1):
        h = hilbert_function(I, d)
        out.append(("dim J_%d" % d, str(basis_size(ring.nvars, d) - h)))
        out.append(("H(%d)" % d, str(h)))
    out.append(("Q(d)", str(prof.polynomial)))
    out.append(("fit from", str(prof.stabilization)))
    return out


def _Q_of(job):
    text = job.option("Q") or job.value("Q")
    if text is None:
        raise JobError("a Hilbert polynomial (--Q or 'Q:') is required")
    return _parse_Q(text)


def _cmd_gotzmann(job):
    Q = _Q_of(job)
    rep = gotzmann_representation(Q)
    terms = ["C(d+%d,%d)" % (a - i, a) if a - i >= 0 else "C(d-%d,%d)" % (i - a, a)
             for i, a in enumerate(rep)]
    return [("Q(d)", str(Q)), ("d0", str(len(rep))), ("representation", " + ".join(terms) or "0")]


def _vectors(job, F, key):
    rows = []
    for v in job.values(key):
        rows.append([F.convert(_rational(c)) for c in _split_list(v)])
    return rows


def _rational(text: str):
    from gmpy2 import mpq
    try:
        return mpq(text.strip())
    except ValueError:
        raise JobError("not a rational number: %r" % text) from None


def _cmd_plucker(job):
    F = field_from_char(_int_option(job, "char"))
    out = []
    rows = _vectors(job, F, "vector")
    if rows:
        eta = plucker_coordinates(rows, F)
        out += [("grade", str(eta.grade)), ("dim", str(eta.dim)),
                ("basis", " ".join("e" + "".join(map(str, S)) for S in subsets(eta.dim, eta.grade))),
                ("eta", str(eta))]
    coords = job.value("eta")
    if coords is not None:
        grade = job.value("grade")
        dim = job.value("dim")
        if grade is None or dim is None:
            raise JobError("'eta:' needs 'grade:' and 'dim:' entries")
        vals = [F.convert(_rational(c)) for c in _split_list(coords)]
        eta = PluckerPoint.from_coordinates(int(grade), int(dim), vals, F)
        for text in job.values("contract"):
            S = [int(i) for i in _split_list(text)]
            vec = contraction(S, eta.exterior())
            name = "".join("e%d*" % i for i in S)
            out.append(("%s -| eta" % name, "(" + ", ".join(F.format(c) for c in vec) + ")"))
        out.append(("decomposable", _bool(is_decomposable(eta))))
        for row in subspace_from_plucker(eta):
            out.append(("subspace", "(" + ", ".join(F.format(c) for c in row) + ")"))
    if not out:
        raise JobError("give 'vector:' rows or an 'eta:' entry")
    return out


def _cmd_grassmann(job):
    r = _int_option(job, "r", job.value("r"))
    s = _int_option(job, "s", job.value("s"))
    F = field_from_char(_int_option(job, "char"))
    eqs = grassmann_equations(r, s, F)
    distinct = []
    for f in eqs:
        if f and f.monic() not in distinct:
            distinct.append(f.monic())
    return [("r", str(r)), ("s", str(s)), ("relations", str(len(distinct)))] + \
        [("relation", str(f)) for f in distinct]


def _cmd_hilbscheme(job):
    n = _int_option(job, "n", job.value("n"))
    Q = _Q_of(job)
    window = job.option("scheme-window")
    data = hilbert_scheme_data(n, Q, **({"window": int(window)} if window else {}))
    out = [("n", str(n)), ("Q(d)", str(Q)), ("d0", str(data.d0)), ("N0", str(data.N0)),
           ("s", str(data.s)),
           ("ambient", "Gr_%d(F^%d) in P^%d" % (data.N0, data.s, data.ambient_dimension)),
           ("coordinates", ", ".join(data.eta_names)),
           ("window", ", ".join(map(str, data.window))),
           ("scheme equations", str(len(data.scheme_equations)))]
    out += [("equation", str(f)) for f in data.scheme_equations]
    out += [("S", str(f)) for f in data.S_template]
    eta = None
    if job.values("poly"):
        names = tuple("x%d" % i for i in range(n + 1))
        ring = Ring(names, data.field)
        eta = point_from_ideal(Ideal(ring, _polys(job, ring)), data).eta
        out.append(("point", str(eta)))
    if job.value("eta") is not None:
        vals = [data.field.convert(_rational(c)) for c in _split_list(job.value("eta"))]
        eta = PluckerPoint.from_coordinates(data.N0, data.s, vals, data.field)
        ok = on_scheme(eta, data)
        out.append(("on scheme", _bool(ok)))
        if ok:
            out += _basis_lines("ideal", ideal_from_point(eta, data).groebner())
    for form in job.values("form"):
        if eta is None:
            raise JobError("'form:' needs a point ('poly:' or 'eta:')")
        f = data.x_ring.parse(form)
        d = f.total_degree()
        out.append(("member(%s)" % form,
                    _bool(membership_test(form_coefficients(f, data, d), eta, d, data))))
    return out


def _labels(text: str) -> list:
    s = text.strip()
    if s.startswith("{") and s.endswith("}"):
        s = s[1:-1]
    return _split_list(s)


def _cmd_topology(job):
    universe = job.value("universe")
    if universe is None:
        raise JobError("a 'universe:' entry is required")
    fam = FiniteClosedFamily(_labels(universe), [_labels(v) for v in job.values("closed")])

    def fmt(S):
        return "{" + ", ".join(sorted(S, key=_label_key)) + "}"

    out = [("points", str(len(fam.points))), ("closed sets", str(len(fam.closed_masks))),
           ("irreducible", " ".join(fmt(fam._set(m)) for m in sorted(
               fam.irreducible_masks, key=lambda m: (bin(m).count("1"), m))))]
    for p in job.values("point"):
        out.append(("closure(%s)" % p, fmt(fam.minimal_closed_containing(p))))
    for q in job.values("set"):
        S = _labels(q)
        key = fmt(S)
        closed = fam.is_closed(S)
        out.append(("closed%s" % key, _bool(closed)))
        if closed:
            out.append(("irreducible%s" % key, _bool(fam.is_irreducible(S))))
            out.append(("components%s" % key,
                        " ".join(fmt(C) for C in fam.irreducible_components(S)) or "none"))
        out.append(("rank%s" % key, str(fam.rirr_rank(S))))
        if S:
            out.append(("degree%s" % key, str(fam.degree(S))))
    return out


def _label_key(s):
    return (0, int(s), s) if s.lstrip("-").isdigit() else (1, 0, s)


# ---------------------------------------------------------------- pairs

def _formula_groups(job):
    """Split entries into formulas at each 'formula:' marker."""
    groups, cur = [], []
    for k, v in job.entries:
        if k == "formula":
            if cur:
                groups.append(cur)
            cur = []
        elif k in ("free", "block", "eq", "locus", "nonzero"):
            cur.append("%s: %s" % (k, v))
    if cur:
        groups.append(cur)
    from .pairs.tame import parse_formula
    return [parse_formula("\n".join(g) + "\n") for g in groups]


def _points(job, key="at"):
    from .pairs.model import element
    return [tuple(element(c) for c in _tuple_text(v)) for v in job.values(key)]


def _fmt_point(b) -> str:
    return "(" + ", ".join(str(v) for v in b) + ")"


def _cmd_tame(job):
    from .pairs.tame import tame_conjoin, tame_eval, tame_to_zariski_on_E
    sub = job.command.split()[1]
    forms = _formula_groups(job)
    if sub in ("lambda-elim", "disjoin"):
        return _cmd_rewrite(job, sub, forms)
    if sub == "conjoin":
        if len(forms) != 2:
            raise JobError("conjoin needs exactly two formulas separated by 'formula:'")
        phi, psi = forms
        both = tame_conjoin(phi, psi)
        out = [("formula", str(both))]
        for b in _points(job):
            out.append(("value%s" % _fmt_point(b), "%s and %s -> %s" % (
                _bool(tame_eval(phi, b)), _bool(tame_eval(psi, b)), _bool(tame_eval(both, b)))))
        return out
    if len(forms) != 1:
        raise JobError("%s needs exactly one formula" % job.command)
    phi = forms[0]
    out = [("formula", str(phi))]
    if sub == "eval":
        pts = _points(job)
        if not pts:
            raise JobError("at least one 'at:' entry is required")
        for b in pts:
            out.append(("value%s" % _fmt_point(b), _bool(tame_eval(phi, b))))
    else:
        out += _basis_lines("ideal", tame_to_zariski_on_E(phi))
    return out


def _cmd_rewrite(job, sub, forms):
    from .pairs.rewrite import disjoin_conjugates, rewrite_lambda_elim
    from .pairs.tame import tame_eval
    if len(forms) != 1:
        raise JobError("%s needs exactly one formula" % job.command)
    phi = forms[0]
    if sub == "lambda-elim":
        param = job.value("param")
        basis = _tuple_text(job.value("basis", "")) if job.value("basis") else []
        psi = rewrite_lambda_elim(phi, param, job.value("a0"), basis,
                                  int(job.value("index", "1")))
    else:
        var = job.value("var")
        if var is None:
            raise JobError("a 'var:' entry naming the conjugate variable is required")
        roots = job.value("roots")
        psi = disjoin_conjugates(phi, var, minpoly=job.value("minpoly"),
                                 roots=_tuple_text(roots) if roots else None)
    out = [("formula", str(phi)), ("rewritten", str(psi))]
    for b in _points(job):
        out.append(("value%s" % _fmt_point(b), _bool(tame_eval(psi, b))))
    return out


def _pair_point(job, key="a"):
    from .pairs.model import element
    text = job.value(key)
    if text is None:
        raise JobError("a point '%s=...' is required" % key)
    return tuple(element(c) for c in _tuple_text(text))


def _cmd_pair(job):
    from .pairs import (
        Base, Sampler, emit_chi, emit_minimal_tame, emit_theta, lambda_eval,
        lambda_field_generators, rm_rank, tame_eval, transcendence_degree,
    )
    sub = job.command.split()[1]
    base = Base.parse(job.value("base", job.value("k", "Q")))
    if sub == "lambda":
        from .pairs.model import element
        a0 = element(job.value("a0", "0"))
        basis = _pair_point(job, "basis")
        vals = lambda_eval(a0, basis)
        return [("lambda", "[" + ", ".join(str(v) for v in vals) + "]")]
    a = _pair_point(job)
    out = [("a", _fmt_point(a)), ("base", str(base))]
    if sub == "rank":
        gens = lambda_field_generators(a, base)
        out += [("tr over E.k", str(transcendence_degree(a, base, "E"))),
                ("lambda generators", ", ".join(str(g) for g in gens.generators) or "none"),
                ("tr over lambda(k)", str(gens.degree)),
                ("rm", str(rm_rank(a, base)))]
    elif sub == "trdeg":
        over = job.value("over", "E")
        out.append(("tr", str(transcendence_degree(a, base, over))))
    elif sub in ("theta", "chi", "minimal"):
        emit = {"theta": emit_theta, "chi": emit_chi, "minimal": emit_minimal_tame}[sub]
        phi = emit(a, base)
        out += [("formula", str(phi)), ("satisfied by a", _bool(tame_eval(phi, a)))]
    elif sub == "sample":
        count = _int_option(job, "samples", "20")
        phi = emit_chi(a, base)
        rank_a = rm_rank(a, base)
        sampler = Sampler(_int_option(job, "seed"))
        out += [("formula", str(phi)), ("rm", str(rank_a))]
        for b in sampler.realizations(phi, a, base, count):
            rb = rm_rank(b, base)
            out.append(("realization", "%s rm = %s%s" % (
                _fmt_point(b), rb, "" if rb <= rank_a else " EXCEEDS")))
    return out


HANDLERS = {
    "poly": _cmd_poly, "groebner": _cmd_groebner, "normal-form": _cmd_normal_form, "eliminate": _cmd_eliminate,
    "saturate": _cmd_saturate, "hilbert": _cmd_hilbert, "gotzmann": _cmd_gotzmann,
    "plucker": _cmd_plucker, "grassmann": _cmd_grassmann, "hilbscheme": _cmd_hilbscheme,
    "topology": _cmd_topology,
}


@dataclass
class Report:
    lines: list = field(default_factory=list)
    status: int = EXIT_OK
    error: str | None = None

    def render(self, out: str = "text") -> str:
        sep = "=" if out == "kv" else " = "
        return "".join("%s%s%s\n" % (k, sep, v) for k, v in self.lines)


SEMANTIC_ERRORS = (
    ValueError, KeyError, ZeroDivisionError, NotHomogeneousError, NoStabilizationError,
    DependentVectorsError, NotDecomposableError,
)


def run(job: JobSpec) -> Report:
    """Execute a job; contract violations become a nonzero status with a message."""
    if job.option("out") not in ("text", "kv"):
        return Report([], EXIT_USAGE, "unsupported output format %r" % job.option("out"))
    if job.command.startswith("tame "):
        handler = _cmd_tame
    elif job.command.startswith("pair "):
        handler = _cmd_pair
    else:
        handler = HANDLERS[job.command]
    try:
        return Report(handler(job))
    except ParseError as exc:
        return Report([], EXIT_USAGE, "parse error: %s" % exc)
    except JobError as exc:
        return Report([], EXIT_USAGE, str(exc))
    except SEMANTIC_ERRORS as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        return Report([], EXIT_FAILURE, "%s: %s" % (type(exc).__name__, msg))


def run_text(text: str) -> str:
    """Run a job file's text; the report, or the status and message on failure."""
    try:
        job = JobSpec.parse(text)
    except JobError as exc:
        return "status = %d\nerror = %s\n" % (EXIT_USAGE, exc)
    report = run(job)
    if report.error:
        return "status = %d\nerror = %s\n" % (report.status, report.error)
    return report.render(job.option("out"))


# ---------------------------------------------------------------- argv

def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", choices=("grevlex", "lex"))
    common.add_argument("--seed", type=int)
    common.add_argument("--window", type=int)
    common.add_argument("--char", type=int)
    common.add_argument("--out", choices=("text", "kv"))
    common.add_argument("--samples", type=int)
    common.add_argument("--show-job", action="store_true",
                        help="print the normalized job instead of running it")

    p = argparse.ArgumentParser(prog="noetherpairs", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("poly", "groebner", "normal-form", "eliminate", "saturate", "plucker", "topology"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("input", nargs="?", default="-")
    sp = sub.add_parser("hilbert", parents=[common])
    sp.add_argument("input", nargs="?", default="-")
    sp.add_argument("--polynomial", action="store_true")
    sp = sub.add_parser("gotzmann", parents=[common])
    sp.add_argument("--Q")
    sp.add_argument("input", nargs="?")
    sp = sub.add_parser("grassmann", parents=[common])
    sp.add_argument("--r", type=int)
    sp.add_argument("--s", type=int)
    sp.add_argument("input", nargs="?")
    sp = sub.add_parser("hilbscheme", parents=[common])
    sp.add_argument("--n", type=int)
    sp.add_argument("--Q")
    sp.add_argument("--scheme-window", type=int, dest="scheme_window")
    sp.add_argument("input", nargs="?")
    for group, subs in (("tame", ("eval", "conjoin", "zariski", "lambda-elim", "disjoin")),
                        ("pair", ("rank", "theta", "chi", "minimal", "lambda", "trdeg", "sample"))):
        gp = sub.add_parser(group)
        gsub = gp.add_subparsers(dest="sub", required=True)
        for s in subs:
            sp = gsub.add_parser(s, parents=[common])
            if group == "tame":
                sp.add_argument("input", nargs="?", default="-")
            else:
                sp.add_argument("items", nargs="*", metavar="key=value",
                                help="a=..., base=..., or an input file")
    return p


def _read(path) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def build_job(args) -> JobSpec:
    command = args.command + (" " + args.sub if getattr(args, "sub", None) else "")
    text = ""
    extra = []
    if command.startswith("pair "):
        for item in args.items:
            if "=" in item:
                k, v = item.split("=", 1)
                extra.append((k.strip(), v.strip()))
            else:
                text += _read(item)
    elif getattr(args, "input", None) is not None or command in (
            "poly", "groebner", "normal-form", "eliminate", "saturate", "hilbert", "plucker",
            "topology"):
        text = _read(getattr(args, "input", "-"))
    job = JobSpec.parse(text, command)
    if extra:
        job = JobSpec(job.command, job.entries + tuple(extra), job.options)
    opts = {k: getattr(args, k, None) for k in ("order", "seed", "window", "char", "out", "samples",
                                                 "Q", "n", "r", "s")}
    if getattr(args, "polynomial", False):
        opts["polynomial"] = "true"
    if getattr(args, "scheme_window", None) is not None:
        opts["scheme-window"] = args.scheme_window
    return job.with_options(**opts)


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        job = build_job(args)
    except (JobError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    if getattr(args, "show_job", False):
        sys.stdout.write(job.to_text())
        return EXIT_OK
    report = run(job)
    if report.error:
        print("error: %s" % report.error, file=sys.stderr)
        return report.status
    sys.stdout.write(report.render(job.option("out")))
    return report.status


if __name__ == "__main__":
    sys.exit(main())

"""Command line front end: domains to codings to spheres to averages.

Outputs are machine readable and deterministic: JSON is written with
sorted keys, CSV with a bare newline terminator, and every float is
printed with 12 significant digits, so identical configurations produce
byte-identical files.  Each pipeline stage owns a distinct nonzero exit
code; diagnostics go to standard error.

Interval numbering in reports and tables is 1-based in the cyclic
order of the cut points, with the explicit map to the internal 0-based
indices included in every report.  For the modular-group preset this
coincides with the usual left-to-right numbering of the intervals on
the real line.
"""

import json
import os
import sys
from fractions import Fraction

import click

from . import analysis
from .chains import ChainTables
from .domain import FundamentalDomain, get_preset, surface_domain
from .ergodic import (GroupAction, cesaro_averages,
                      conditional_expectation_finite, spherical_average,
                      validate_action)
from .exceptions import CodingError, GeometryError, VerificationError
from .markov import MarkovCoding
from .words import collision_count, enumerate_sphere, word_automaton

EXIT_DOMAIN = 3
EXIT_CODING = 4
EXIT_ANALYZE = 5
EXIT_SPHERES = 6
EXIT_ORACLE = 7
EXIT_AVERAGE = 8

DEFAULT_ENUM_LIMIT = 10 ** 6

_PRESET_ALIASES = {
    "sl2z": ("sl2z", False),
    "triangle": ("triangle", False),
    "ideal_triangle": ("triangle", False),
    "octagon": ("octagon", False),
    "surface_4g": ("surface_4g", True),
}


def _fmt(x):
    """12 significant digits, the one float format used everywhere."""
    return format(float(x), ".12g")


def _fmt_complex(z):
    z = complex(z)
    return "%s%sj" % (_fmt(z.real), format(z.imag, "+.12g"))


def _fail(code, message):
    click.echo("error: %s" % message, err=True)
    sys.exit(code)


def _write_json(path, payload):
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    with open(path, "w") as fh:
        fh.write(text)


def _write_csv(path, header, rows):
    lines = [",".join(header)]
    lines.extend(",".join(str(c) for c in row) for row in rows)
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def _resolve_domain(source, genus=2):
    if source in _PRESET_ALIASES:
        name, wants_genus = _PRESET_ALIASES[source]
        if wants_genus:
            return surface_domain(genus)
        return get_preset(name)
    if not os.path.exists(source):
        raise CodingError(
            "%r is not a preset (%s) and no such file exists"
            % (source, ", ".join(sorted(_PRESET_ALIASES))))
    return FundamentalDomain.load(source)


class _CycleData:
    __slots__ = ("letters", "n")

    def __init__(self, letters, n):
        self.letters = tuple(letters)
        self.n = n


class CodingFile:
    """A coding deserialized from JSON, without the geometry.

    Quacks enough like MarkovCoding for the word, chain and averaging
    layers: letters, successors, involution and vertex cycles are all
    stored in the file, so spheres and averages never need the domain.
    """

    def __init__(self, data):
        try:
            self.letters = tuple(data["letters"])
            self.successors = tuple(tuple(r) for r in data["successors"])
        except KeyError as missing:
            raise CodingError("coding file lacks the %s field" % missing)
        self.size = len(self.letters)
        if len(self.successors) != self.size:
            raise CodingError("coding file has %d letter rows but %d "
                              "successor rows"
                              % (self.size, len(self.successors)))
        for i, row in enumerate(self.successors):
            for j in row:
                if not 0 <= j < self.size:
                    raise CodingError(
                        "successor %r of interval %d is out of range" % (j, i))
        self.cut_points = list(data.get("cut_points", []))
        self.involution = dict(data.get("involution", {}))
        self.cycles = [
            _CycleData(c["letters"], c["n"])
            for c in data.get("vertex_cycles", [])
        ]
        self.data = data

    def generators(self):
        return {name: None for name in set(self.letters)}

    def name_involution(self):
        return dict(self.involution)

    def vertex_cycles(self):
        return list(self.cycles)


def _load_coding_file(path):
    with open(path) as fh:
        try:
            data = json.load(fh)
        except ValueError as exc:
            raise CodingError("cannot parse %s: %s" % (path, exc))
    return CodingFile(data)


def _resolve_coding(source, genus=2, choices=None):
    """Preset name, domain file, or coding file, in that sniffing order."""
    if source in _PRESET_ALIASES:
        return MarkovCoding(_resolve_domain(source, genus), choices)
    if not os.path.exists(source):
        raise CodingError(
            "%r is not a preset (%s) and no such file exists"
            % (source, ", ".join(sorted(_PRESET_ALIASES))))
    with open(source) as fh:
        try:
            data = json.load(fh)
        except ValueError as exc:
            raise CodingError("cannot parse %s: %s" % (source, exc))
    if "successors" in data:
        if choices:
            raise CodingError("label choices apply when building from a "
                              "domain, not to a finished coding file")
        return CodingFile(data)
    return MarkovCoding(FundamentalDomain.from_dict(data), choices)


def _chain_tables(coding):
    if isinstance(coding, MarkovCoding):
        return ChainTables.from_domain(coding.domain)
    cycles = [(c.letters, c.n) for c in coding.vertex_cycles()]
    return ChainTables(cycles, coding.name_involution())


def _parse_label_policy(text):
    if text == "default":
        return None
    try:
        raw = json.loads(text)
        return {int(k): str(v) for k, v in raw.items()}
    except (ValueError, AttributeError):
        raise CodingError(
            "label policy must be 'default' or a JSON object mapping "
            "interval indices to letters, got %r" % text)


def _check_threads():
    raw = os.environ.get("BS_THREADS")
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise click.UsageError("BS_THREADS must be an integer, got %r" % raw)
    if value < 1:
        raise click.UsageError("BS_THREADS must be at least 1, got %d" % value)
    return value


@click.group(name="bs")
def main():
    """Markov coding of surface groups: build, verify, count, average.

    All stages run sequentially; the BS_THREADS environment variable
    caps worker parallelism and is validated here (the current
    pipeline never spawns more than one worker).
    """
    _check_threads()


# ---------------------------------------------------------------- domain


@main.group()
def domain():
    """Fundamental domain inputs."""


@domain.command("verify")
@click.argument("source")
@click.option("--genus", default=2, show_default=True,
              help="Genus for the surface_4g preset.")
def domain_verify(source, genus):
    """Run the structural checks on a preset or a domain file."""
    try:
        dom = _resolve_domain(source, genus)
        report = dom.verify()
    except (CodingError, GeometryError, VerificationError, ValueError,
            KeyError, OSError) as exc:
        _fail(EXIT_DOMAIN, exc)
    click.echo("domain %s: ok" % source)
    for key in sorted(report):
        click.echo("  %s: %s" % (key, report[key]))


# ---------------------------------------------------------------- coding


@main.group()
def coding():
    """Interval codings."""


@coding.command("build")
@click.argument("source")
@click.option("--genus", default=2, show_default=True)
@click.option("--label-policy", default="default", show_default=True,
              help="'default' or a JSON object {interval: letter} fixing "
                   "ambiguous labels.")
@click.option("-o", "--output", default="coding.json", show_default=True)
def coding_build(source, genus, label_policy, output):
    """Build the coding of a domain and write it as JSON."""
    try:
        choices = _parse_label_policy(label_policy)
        dom = _resolve_domain(source, genus)
        built = MarkovCoding(dom, choices)
        built.verify()
        _write_json(output, built.to_dict())
    except (CodingError, GeometryError, VerificationError, ValueError,
            KeyError, OSError) as exc:
        _fail(EXIT_CODING, exc)
    click.echo("wrote %s (%d intervals, %d branches)"
               % (output, built.size, sum(built.branch_counts())))


# ---------------------------------------------------------------- analyze


def _analysis_report(source, coding_obj):
    succ = coding_obj.successors
    classes = analysis.interval_classes(succ)
    report = {
        "source": source,
        "intervals": len(succ),
        "alphabet_size": len(set(coding_obj.letters)),
        "letters": list(coding_obj.letters),
        "cut_points": list(getattr(coding_obj, "cut_points", None)
                           or [str(coding_obj.partition.intervals[i].start)
                               for i in range(coding_obj.size)]),
        "irreducible": analysis.is_irreducible(succ),
        "strictly_irreducible": analysis.is_strictly_irreducible(succ),
        "classes": [[i + 1 for i in cls] for cls in classes],
        "interval_numbering": "1-based in cyclic cut-point order",
        "index_map": [{"output": i + 1, "internal": i}
                      for i in range(len(succ))],
        "branch_counts": [len(r) for r in succ],
        "perron_eigenvalue": _fmt(analysis.perron_eigenvalue(succ)),
    }
    if source == "sl2z":
        report["numbering_note"] = (
            "matches the left-to-right numbering of the intervals "
            "on the real line")
    return report


@main.command()
@click.argument("source")
@click.option("--genus", default=2, show_default=True)
@click.option("-o", "--output", default="report.json", show_default=True)
def analyze(source, genus, output):
    """Irreducibility, interval classes, and the Markov checks."""
    try:
        coding_obj = _resolve_coding(source, genus)
        if isinstance(coding_obj, MarkovCoding):
            coding_obj.verify()
        report = _analysis_report(source, coding_obj)
        report["markov_verified"] = isinstance(coding_obj, MarkovCoding)
        _write_json(output, report)
    except (CodingError, GeometryError, VerificationError, ValueError,
            KeyError, OSError) as exc:
        _fail(EXIT_ANALYZE, exc)
    click.echo("wrote %s (irreducible=%s, strictly_irreducible=%s)"
               % (output, report["irreducible"],
                  report["strictly_irreducible"]))


# ---------------------------------------------------------------- spheres


def _sphere_rows(coding_obj, n_max, enum_limit):
    automaton = word_automaton(coding_obj)
    tables = _chain_tables(coding_obj)
    rows = []
    for n in range(1, n_max + 1):
        w_n = analysis.sequence_count(coding_obj, n)
        k_n = automaton.distinct_count(n)
        c_n = collision_count(coding_obj, n)
        chains_n = len(tables.special_chains(n))
        if n <= 8 and w_n <= enum_limit:
            sphere = enumerate_sphere(coding_obj, n)
            if (sphere.sequences != w_n
                    or len(sphere.keys) != k_n
                    or sphere.collision_pairs != c_n):
                raise VerificationError(
                    "enumeration disagrees with the counting recurrences "
                    "at radius %d" % n)
        rows.append((n, w_n, k_n, c_n, chains_n))
    return rows


@main.command()
@click.argument("source")
@click.option("--genus", default=2, show_default=True)
@click.option("--max-n", required=True, type=int)
@click.option("--full-enum-limit", default=DEFAULT_ENUM_LIMIT,
              show_default=True,
              help="Cross-check counts by enumeration while W_n is at "
                   "most this.")
@click.option("-o", "--output", default="spheres.csv", show_default=True)
def spheres(source, genus, max_n, full_enum_limit, output):
    """Sphere growth: W_n, distinct words, collisions, special chains."""
    if max_n < 1:
        raise click.UsageError("--max-n must be at least 1")
    if full_enum_limit < 0:
        raise click.UsageError("--full-enum-limit must be nonnegative")
    try:
        coding_obj = _resolve_coding(source, genus)
        rows = _sphere_rows(coding_obj, max_n, full_enum_limit)
        _write_csv(output, ("n", "W_n", "K_n", "collisions",
                            "special_chains"), rows)
    except (CodingError, GeometryError, VerificationError, ValueError,
            KeyError, OSError) as exc:
        _fail(EXIT_SPHERES, exc)
    click.echo("wrote %s (%d radii)" % (output, max_n))


# ---------------------------------------------------------------- oracle


@main.command()
@click.argument("source")
@click.option("--genus", default=2, show_default=True)
@click.option("--max-n", required=True, type=int)
@click.option("--words", "with_words", is_flag=True,
              help="Include the oracle's canonical words per radius.")
@click.option("-o", "--output", default="oracle.csv", show_default=True)
def oracle(source, genus, max_n, with_words, output):
    """Breadth-first sphere sizes straight from the generators."""
    from .oracle import GroupOracle

    if max_n < 1:
        raise click.UsageError("--max-n must be at least 1")
    try:
        dom = _resolve_domain(source, genus)
        orc = GroupOracle(dom, max_n)
        rows = []
        for n in range(1, max_n + 1):
            row = [n, orc.sphere_size(n)]
            if with_words:
                row.append(" ".join(sorted(orc.sphere_words(n))))
            rows.append(row)
        header = ("n", "K_n", "words") if with_words else ("n", "K_n")
        _write_csv(output, header, rows)
    except (CodingError, GeometryError, VerificationError, ValueError,
            KeyError, OSError) as exc:
        _fail(EXIT_ORACLE, exc)
    click.echo("wrote %s (%d radii)" % (output, max_n))


# ---------------------------------------------------------------- average


def _load_action(path):
    with open(path) as fh:
        data = json.load(fh)
    kind = data.get("kind")
    tables = data.get("tables")
    if not isinstance(tables, dict) or not tables:
        raise CodingError("action file needs a nonempty 'tables' object")
    if kind == "finite_permutation":
        return GroupAction("finite", {k: tuple(v) for k, v in tables.items()})
    if kind == "torus_integer_matrix":
        return GroupAction("torus", {
            k: tuple(tuple(r) for r in v) for k, v in tables.items()})
    raise CodingError("action kind must be finite_permutation or "
                      "torus_integer_matrix, got %r" % kind)


def _load_phi(path, action):
    with open(path) as fh:
        data = json.load(fh)
    kind = data.get("kind")
    if kind == "vector":
        values = [Fraction(str(v)) for v in data["values"]]
        if action.kind != "finite":
            raise CodingError("vector observables go with finite actions")
        return values
    if kind == "frequencies":
        if action.kind != "torus":
            raise CodingError("frequency observables go with torus actions")
        terms = {}
        for term in data["terms"]:
            coeff = term["c"]
            if isinstance(coeff, (list, tuple)):
                coeff = complex(coeff[0], coeff[1])
            terms[tuple(int(x) for x in term["k"])] = complex(coeff)
        return terms
    raise CodingError("observable kind must be vector or frequencies, "
                      "got %r" % kind)


def _parse_point(text, action):
    if action.kind == "finite":
        return int(text)
    if text == "0":
        return tuple(Fraction(0) for _ in range(action.dim))
    parts = text.split(",")
    if len(parts) != action.dim:
        raise CodingError("point %r has %d coordinates, action wants %d"
                          % (text, len(parts), action.dim))
    return tuple(Fraction(p) for p in parts)


def _series_rows(s_values, c_values, target, finite):
    rows = []
    for n, (s_n, c_n) in enumerate(zip(s_values, c_values)):
        err = abs(c_n - target)
        if finite:
            rows.append((n, _fmt(s_n), _fmt(c_n), _fmt(err)))
        else:
            rows.append((n, _fmt_complex(s_n), _fmt_complex(c_n), _fmt(err)))
    return rows


@main.command()
@click.argument("source")
@click.option("--genus", default=2, show_default=True)
@click.option("--action", "action_path", required=True,
              type=click.Path(exists=True))
@click.option("--phi", "phi_path", required=True,
              type=click.Path(exists=True))
@click.option("--point", default="0", show_default=True,
              help="Base point: an index for finite actions, "
                   "comma-separated rationals for torus actions.")
@click.option("--N", "n_max", default=500, show_default=True, type=int)
@click.option("--out", "output", default="series.csv", show_default=True)
def average(source, genus, action_path, phi_path, point, n_max, output):
    """Sphere averages s_n and Cesaro means c_N of an observable."""
    if n_max < 0:
        raise click.UsageError("--N must be nonnegative")
    try:
        coding_obj = _resolve_coding(source, genus)
        action = _load_action(action_path)
        reference = (coding_obj if not isinstance(coding_obj, MarkovCoding)
                     else coding_obj.domain)
        validate_action(reference, action)
        phi = _load_phi(phi_path, action)
        base = _parse_point(point, action)
        s_values = spherical_average(coding_obj, action, phi, base, n_max)
        c_values = cesaro_averages(s_values)
        if action.kind == "finite":
            target = conditional_expectation_finite(action, phi, base)
        else:
            target = phi.get(tuple(0 for _ in range(action.dim)), 0j)
        rows = _series_rows(s_values, c_values, target,
                            action.kind == "finite")
        _write_csv(output, ("n", "s_n", "c_n", "error"), rows)
    except (CodingError, GeometryError, VerificationError, ValueError,
            KeyError, OSError) as exc:
        _fail(EXIT_AVERAGE, exc)
    click.echo("wrote %s (n = 0 .. %d, final error %s)"
               % (output, n_max, rows[-1][3]))


# ------------------------------------------------------------------- run


class RunConfig:
    """Validated pipeline configuration for `bs run`.

    Collects the domain source, label policy, stage toggles, horizons
    and budgets, and the output directory.  A JSON config file provides
    base values; command line flags override it field by field.
    """

    FIELDS = ("preset", "domain_file", "genus", "label_policy", "analyze",
              "spheres", "full_enum_limit", "oracle", "action", "phi",
              "point", "n_average", "out_dir")

    def __init__(self, **kw):
        self.preset = kw.get("preset")
        self.domain_file = kw.get("domain_file")
        self.genus = kw.get("genus", 2)
        self.label_policy = kw.get("label_policy", "default")
        self.analyze = bool(kw.get("analyze", False))
        self.spheres = int(kw.get("spheres", 0))
        self.full_enum_limit = int(kw.get("full_enum_limit",
                                          DEFAULT_ENUM_LIMIT))
        self.oracle = bool(kw.get("oracle", False))
        self.action = kw.get("action")
        self.phi = kw.get("phi")
        self.point = str(kw.get("point", "0"))
        self.n_average = int(kw.get("n_average", 500))
        self.out_dir = kw.get("out_dir", ".")
        unknown = set(kw) - set(self.FIELDS)
        if unknown:
            raise click.UsageError("unknown config fields: %s"
                                   % ", ".join(sorted(unknown)))

    def validate(self):
        if bool(self.preset) == bool(self.domain_file):
            raise click.UsageError(
                "exactly one of preset and domain_file is required")
        if self.preset and self.preset not in _PRESET_ALIASES:
            raise click.UsageError(
                "unknown preset %r, have %s"
                % (self.preset, ", ".join(sorted(_PRESET_ALIASES))))
        if self.domain_file and not os.path.exists(self.domain_file):
            raise click.UsageError("domain file %r does not exist"
                                   % self.domain_file)
        if self.genus < 2:
            raise click.UsageError("genus must be at least 2")
        if self.spheres < 0:
            raise click.UsageError("spheres horizon must be nonnegative")
        if self.full_enum_limit < 0:
            raise click.UsageError("enumeration limit must be nonnegative")
        if self.oracle and self.spheres < 1:
            raise click.UsageError("--oracle needs a --spheres horizon")
        if bool(self.action) != bool(self.phi):
            raise click.UsageError("action and phi come together")
        for label, path in (("action", self.action), ("phi", self.phi)):
            if path and not os.path.exists(path):
                raise click.UsageError("%s file %r does not exist"
                                       % (label, path))
        if self.n_average < 0:
            raise click.UsageError("N must be nonnegative")

    @property
    def source(self):
        return self.preset or self.domain_file


def run_pipeline(config):
    """Execute the configured stages; exits through _fail on errors."""
    config.validate()
    os.makedirs(config.out_dir, exist_ok=True)

    def path_of(name):
        return os.path.join(config.out_dir, name)

    try:
        dom = (_resolve_domain(config.preset, config.genus)
               if config.preset
               else FundamentalDomain.load(config.domain_file))
        dom.verify()
    except (CodingError, GeometryError, VerificationError, ValueError,
            KeyError, OSError) as exc:
        _fail(EXIT_DOMAIN, exc)

    try:
        choices = _parse_label_policy(config.label_policy)
        coding_obj = MarkovCoding(dom, choices)
        coding_obj.verify()
        _write_json(path_of("coding.json"), coding_obj.to_dict())
    except (CodingError, VerificationError, ValueError, OSError) as exc:
        _fail(EXIT_CODING, exc)
    click.echo("wrote %s" % path_of("coding.json"))

    if config.analyze:
        try:
            report = _analysis_report(config.source, coding_obj)
            report["markov_verified"] = True
            _write_json(path_of("report.json"), report)
        except (CodingError, VerificationError, ValueError, OSError) as exc:
            _fail(EXIT_ANALYZE, exc)
        click.echo("wrote %s" % path_of("report.json"))

    rows = None
    if config.spheres:
        try:
            rows = _sphere_rows(coding_obj, config.spheres,
                                config.full_enum_limit)
        except (CodingError, VerificationError, ValueError, OSError) as exc:
            _fail(EXIT_SPHERES, exc)

    if config.oracle:
        from .oracle import GroupOracle

        try:
            orc = GroupOracle(dom, config.spheres)
            for row in rows:
                n, k_n = row[0], row[2]
                if orc.sphere_size(n) != k_n:
                    raise VerificationError(
                        "coding has %d words at radius %d but the oracle "
                        "sphere has %d elements"
                        % (k_n, n, orc.sphere_size(n)))
            rows = [row + (orc.sphere_size(row[0]),) for row in rows]
        except (CodingError, VerificationError, ValueError, OSError) as exc:
            _fail(EXIT_ORACLE, exc)

    if rows is not None:
        header = ["n", "W_n", "K_n", "collisions", "special_chains"]
        if config.oracle:
            header.append("oracle_K_n")
        try:
            _write_csv(path_of("spheres.csv"), header, rows)
        except OSError as exc:
            _fail(EXIT_SPHERES, exc)
        click.echo("wrote %s" % path_of("spheres.csv"))

    if config.action:
        try:
            action = _load_action(config.action)
            validate_action(dom, action)
            phi = _load_phi(config.phi, action)
            base = _parse_point(config.point, action)
            s_values = spherical_average(coding_obj, action, phi, base,
                                         config.n_average)
            c_values = cesaro_averages(s_values)
            if action.kind == "finite":
                target = conditional_expectation_finite(action, phi, base)
            else:
                target = phi.get(tuple(0 for _ in range(action.dim)), 0j)
            series = _series_rows(s_values, c_values, target,
                                  action.kind == "finite")
            _write_csv(path_of("series.csv"),
                       ("n", "s_n", "c_n", "error"), series)
        except (CodingError, VerificationError, ValueError, KeyError,
                OSError) as exc:
            _fail(EXIT_AVERAGE, exc)
        click.echo("wrote %s" % path_of("series.csv"))


@main.command()
@click.option("--config", "config_path", type=click.Path(exists=True),
              help="JSON file with RunConfig fields; flags override it.")
@click.option("--preset", default=None)
@click.option("--domain-file", default=None, type=click.Path())
@click.option("--genus", default=2, show_default=True)
@click.option("--label-policy", default="default", show_default=True)
@click.option("--analyze", "analyze_flag", is_flag=True)
@click.option("--spheres", default=0, show_default=True, type=int,
              help="Sphere horizon; 0 skips the stage.")
@click.option("--full-enum-limit", default=DEFAULT_ENUM_LIMIT,
              show_default=True)
@click.option("--oracle", "oracle_flag", is_flag=True)
@click.option("--action", default=None, type=click.Path())
@click.option("--phi", default=None, type=click.Path())
@click.option("--point", default="0", show_default=True)
@click.option("--N", "n_average", default=500, show_default=True, type=int)
@click.option("--out-dir", default=".", show_default=True)
@click.pass_context
def run(ctx, config_path, preset, domain_file, genus, label_policy,
        analyze_flag, spheres, full_enum_limit, oracle_flag, action, phi,
        point, n_average, out_dir):
    """Full pipeline: domain, coding, then the requested stages."""
    base = {}
    if config_path:
        with open(config_path) as fh:
            try:
                base = json.load(fh)
            except ValueError as exc:
                raise click.UsageError("cannot parse %s: %s"
                                       % (config_path, exc))
        if not isinstance(base, dict):
            raise click.UsageError("config file must hold a JSON object")
    flag_values = {
        "preset": preset, "domain_file": domain_file, "genus": genus,
        "label_policy": label_policy, "analyze": analyze_flag,
        "spheres": spheres, "full_enum_limit": full_enum_limit,
        "oracle": oracle_flag, "action": action, "phi": phi,
        "point": point, "n_average": n_average, "out_dir": out_dir,
    }
    param_names = {
        "preset": "preset", "domain_file": "domain_file", "genus": "genus",
        "label_policy": "label_policy", "analyze": "analyze_flag",
        "spheres": "spheres", "full_enum_limit": "full_enum_limit",
        "oracle": "oracle_flag", "action": "action", "phi": "phi",
        "point": "point", "n_average": "n_average", "out_dir": "out_dir",
    }
    merged = dict(base)
    for field, param in param_names.items():
        src = ctx.get_parameter_source(param)
        if src is not None and src.name == "COMMANDLINE":
            merged[field] = flag_values[field]
        elif field not in merged:
            merged[field] = flag_values[field]
    try:
        config = RunConfig(**merged)
    except TypeError as exc:
        raise click.UsageError(str(exc))
    run_pipeline(config)


if __name__ == "__main__":
    main()

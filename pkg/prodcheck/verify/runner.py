"""Check catalog identities against a model by exact evaluation."""
import itertools
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Optional, Sequence

from ..algebras import expected_failing_suites
from ..config import load_settings
from ..diagram import parse, typecheck
from ..engine import apply, basis_vector, evaluate
from ..equivalence.splitting import augment
from ..exceptions import MissingRole, ShapeMismatch, TypeMismatch, UnknownGenerator
from ..logs.logger import setup_logger
from ..models.algebra_model import Model, Role
from ..models.catalog_model import Catalog, IdentityEntry, Tag, Verdict, VerdictStatus, Witness
from ..models.cli_model import Profile, Suite
from ..models.helper import format_rational
from ..models.term_model import GenDecl, ObjType
from ..store.catalog_store import read_catalog
from ..tensor import RationalTensor, first_difference

logger = setup_logger("prodcheck: Suite Runner")

SUITE_TAGS: dict[Suite, frozenset[Tag]] = {
    Suite.duality: frozenset({Tag.duality, Tag.braiding}),
    Suite.vpa: frozenset({Tag.vpa, Tag.vpa_derived}),
    Suite.assoc: frozenset({Tag.assoc_only}),
    Suite.ca: frozenset({Tag.ca, Tag.equivalence}),
}

SUITE_ROLES: dict[Suite, tuple[Role, ...]] = {
    Suite.duality: (Role.cup, Role.cap),
    Suite.vpa: (Role.cup, Role.cap, Role.wedge),
    Suite.assoc: (Role.cup, Role.cap, Role.wedge),
    Suite.ca: (Role.cup, Role.cap, Role.m, Role.e),
}

PLACEHOLDER = {Suite.duality: "X", Suite.vpa: "V", Suite.assoc: "V", Suite.ca: "A"}


@lru_cache(maxsize=8)
def _cached_catalog(path: Path) -> Catalog:
    return read_catalog(path)


def default_catalog(path: str | Path | None = None) -> Catalog:
    """The catalog at ``path``, else at ``PRODCHECK_CATALOG``, else the packaged one."""
    return _cached_catalog(Path(path) if path else load_settings().catalog_path)


def probe_tensors(n: int) -> tuple[RationalTensor, RationalTensor]:
    """Fixed non-symmetric test morphisms ``probe: X -> X`` and ``probe2: -> X X``."""
    probe = [[Fraction(a + 2 * b + 1) for b in range(n)] for a in range(n)]
    probe2 = [[Fraction(3 * a + b + 1) for b in range(n)] for a in range(n)]
    return RationalTensor((n,), (n,), probe), RationalTensor((), (n, n), probe2)


def _relabel(labels: ObjType, mapping: dict[str, str], owner: str) -> ObjType:
    try:
        return tuple(mapping[label] for label in labels)
    except KeyError as e:
        raise ShapeMismatch(f"{owner} touches object {e.args[0]} outside the self-dual object") from None


def _view(model: Model, mapping: dict[str, str], roles: Sequence[Role]) -> tuple[dict, dict, dict]:
    gens, tensors, view_roles = {}, {}, {}
    for role in roles:
        decl = model.role_decl(role)
        gens[role.value] = GenDecl(name=role.value, dom=_relabel(decl.dom, mapping, decl.name),
                                   cod=_relabel(decl.cod, mapping, decl.name))
        tensors[role.value] = model.role_tensor(role)
        view_roles[role] = role.value
    return gens, tensors, view_roles


def role_view(model: Model, suite: Suite) -> Model:
    """The model as seen by one suite's catalog entries.

    The self-dual object is renamed to the suite's placeholder and designated
    generators appear under their role names. Duality views gain the probes and
    ca views gain the unit splitting.

    Raises:
        MissingRole: if the model lacks a role the suite needs.
    """
    for role in SUITE_ROLES[suite]:
        model.role_gen(role)
    label = model.self_dual_label()
    placeholder = PLACEHOLDER[suite]
    n = model.objects[label]

    if suite is Suite.ca:
        augmented = augment(model)
        v_label = augmented.role_decl(Role.i).dom[0]
        mapping = {label: "A", v_label: "V"}
        gens, tensors, roles = _view(augmented, mapping, SUITE_ROLES[suite] + (Role.p, Role.q, Role.i))
        objects = {"A": n, "V": augmented.objects[v_label]}
    else:
        gens, tensors, roles = _view(model, {label: placeholder}, SUITE_ROLES[suite])
        objects = {placeholder: n}

    if suite is Suite.duality:
        probe, probe2 = probe_tensors(n)
        gens |= {"probe": GenDecl(name="probe", dom=("X",), cod=("X",)),
                 "probe2": GenDecl(name="probe2", dom=(), cod=("X", "X"))}
        tensors |= {"probe": probe, "probe2": probe2}
    return Model(name=model.name, objects=objects, gens=gens, tensors=tensors, roles=roles)


def _vector(values: Iterable[Fraction]) -> str:
    return "(" + ", ".join(format_rational(v) for v in values) + ")"


def _fail(entry: IdentityEntry, suite: str, index, lhs: str, rhs: str) -> Verdict:
    witness = Witness(index=tuple(index), lhs=lhs, rhs=rhs)
    return Verdict(id=entry.id, suite=suite, status=VerdictStatus.failed,
                   witness=witness, detail=witness.describe())


def _check_pointwise(entry: IdentityEntry, lhs: RationalTensor, rhs: RationalTensor, suite: str) -> Verdict:
    if len(entry.args) != len(lhs.dom):
        raise ShapeMismatch(f"{entry.id}: {len(entry.args)} variables for {len(lhs.dom)} inputs")
    extents: dict[str, int] = {}
    for var, extent in zip(entry.args, lhs.dom):
        if extents.setdefault(var, extent) != extent:
            raise ShapeMismatch(f"{entry.id}: variable {var} used at extents {extents[var]} and {extent}")
    variables = list(extents)
    for combo in itertools.product(*(range(extents[v]) for v in variables)):
        assignment = dict(zip(variables, combo))
        args = [basis_vector(extent, assignment[var]) for var, extent in zip(entry.args, lhs.dom)]
        left, right = apply(lhs, args), apply(rhs, args)
        if left != right:
            return _fail(entry, suite, combo, _vector(left), _vector(right))
    return Verdict(id=entry.id, suite=suite, status=VerdictStatus.passed)


def check_equation(m: Model, entry: IdentityEntry, macros: Optional[dict[str, str]] = None,
                   suite: str = "") -> Verdict:
    """Evaluate both sides of ``entry`` in ``m`` and compare them exactly.

    An entry naming a generator the model does not have is skipped.

    Raises:
        TypeMismatch: if the two sides have different types.
    """
    sig = m.signature()
    try:
        lhs_term = parse(entry.lhs, sig, macros)
        rhs_term = parse(entry.rhs, sig, macros)
    except UnknownGenerator as e:
        return Verdict(id=entry.id, suite=suite, status=VerdictStatus.skipped, detail=str(e))
    lhs_type, rhs_type = typecheck(lhs_term, sig), typecheck(rhs_term, sig)
    if lhs_type != rhs_type:
        logger.error(f"Entry {entry.id}: sides have types {lhs_type} and {rhs_type}")
        raise TypeMismatch((entry.id,), lhs_type, rhs_type)

    lhs, rhs = evaluate(lhs_term, m), evaluate(rhs_term, m)
    if entry.args is not None:
        return _check_pointwise(entry, lhs, rhs, suite)
    where = first_difference(lhs, rhs)
    if where is None:
        return Verdict(id=entry.id, suite=suite, status=VerdictStatus.passed)
    return _fail(entry, suite, where, format_rational(lhs[where]), format_rational(rhs[where]))


def supported_suites(model: Model) -> list[Suite]:
    return [s for s in SUITE_TAGS if model.has_roles(*SUITE_ROLES[s])]


def run_suite(model: Model, suite: Suite | str, catalog: Optional[Catalog] = None,
              profile: Profile | str = Profile.strict) -> list[Verdict]:
    """Run every catalog entry tagged for ``suite``, in catalog order.

    ``all`` runs each suite the model's designated generators support. Under the
    ``builtin`` profile, failures in suites a built-in is predicted to fail are
    marked as expected.

    Raises:
        MissingRole: if the model cannot support a named suite.
    """
    suite, profile = Suite(suite), Profile(profile)
    catalog = catalog or default_catalog()
    if suite is Suite.all:
        suites = supported_suites(model)
        if not suites:
            raise MissingRole(Role.cup.value, model.name)
        return [v for s in suites for v in run_suite(model, s, catalog, profile)]

    view = role_view(model, suite)
    expected = expected_failing_suites(model.name) if profile is Profile.builtin else frozenset()
    verdicts = []
    for entry in catalog.tagged(set(SUITE_TAGS[suite])):
        verdict = check_equation(view, entry, catalog.macros, suite.value)
        if verdict.status is VerdictStatus.failed and suite.value in expected:
            verdict = verdict.model_copy(update={"expected_failure": True})
        verdicts.append(verdict)
    passed, total = totals(verdicts)
    logger.info(f"Suite {suite.value} on {model.name}: {passed}/{total}")
    return verdicts


def totals(verdicts: Iterable[Verdict]) -> tuple[int, int]:
    """(passed, checked) over non-skipped verdicts; expected failures count as passed."""
    checked = [v for v in verdicts if v.status is not VerdictStatus.skipped]
    return sum(v.counts_as_pass for v in checked), len(checked)


def failed_ids(verdicts: Iterable[Verdict]) -> list[str]:
    return [v.id for v in verdicts if v.status is VerdictStatus.failed and not v.expected_failure]


def suite_duality(model: Model, catalog: Optional[Catalog] = None,
                  profile: Profile | str = Profile.strict) -> list[Verdict]:
    return run_suite(model, Suite.duality, catalog, profile)


def suite_vpa(model: Model, catalog: Optional[Catalog] = None,
              profile: Profile | str = Profile.strict) -> list[Verdict]:
    return run_suite(model, Suite.vpa, catalog, profile)


def suite_assoc(model: Model, catalog: Optional[Catalog] = None,
                profile: Profile | str = Profile.strict) -> list[Verdict]:
    return run_suite(model, Suite.assoc, catalog, profile)


def suite_ca(model: Model, catalog: Optional[Catalog] = None,
             profile: Profile | str = Profile.strict) -> list[Verdict]:
    return run_suite(model, Suite.ca, catalog, profile)

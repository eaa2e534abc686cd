"""Reading and writing the line-oriented model file format."""
from fractions import Fraction
from pathlib import Path

from ..engine.evaluator import evaluate
from ..exceptions import DualityViolation, FormatError, ProdcheckError
from ..logs.logger import setup_logger
from ..models.algebra_model import Model, Role
from ..models.helper import format_rational, parse_rational
from ..models.term_model import Compose, Gen, GenDecl, Id, Tensor
from ..tensor import RationalTensor, first_difference, t_identity_multi, zeros

logger = setup_logger("prodcheck: Model Store")


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def load_model(text: str) -> Model:
    """Parse a model file.

    Raises:
        FormatError: on a malformed line, an unknown directive or an out-of-range index.
        ShapeMismatch: when a generator tensor does not fit its declaration.
        DualityViolation: when designated cup and cap fail the snake equations.
    """
    name = None
    objects: dict[str, int] = {}
    gens: dict[str, GenDecl] = {}
    roles: dict[Role, str] = {}
    entries: dict[str, dict[tuple[int, ...], Fraction]] = {}
    block: str | None = None
    block_start = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        words = line.split()

        if block is not None:
            if words == ["end"]:
                block = None
                continue
            lhs, eq, rhs = line.partition("=")
            if not eq:
                raise FormatError(lineno, "expected '<indices> = <rational>' or 'end'")
            try:
                index = tuple(int(w) for w in lhs.split())
                value = parse_rational(rhs)
            except ValueError as e:
                raise FormatError(lineno, str(e)) from None
            decl = gens[block]
            shape = tuple(objects[l] for l in decl.dom + decl.cod)
            if len(index) != len(shape):
                raise FormatError(lineno, f"{block} takes {len(shape)} indices, got {len(index)}")
            if any(not 0 <= k < n for k, n in zip(index, shape)):
                raise FormatError(lineno, f"index {index} out of range for {block} with shape {shape}")
            entries[block][index] = value
            continue

        match words[0]:
            case "model":
                if len(words) != 2:
                    raise FormatError(lineno, "expected 'model <name>'")
                name = words[1]
            case "object":
                if len(words) != 4 or words[2] != "dim" or not words[3].isdigit():
                    raise FormatError(lineno, "expected 'object <label> dim <nonneg-int>'")
                if words[1] in objects:
                    raise FormatError(lineno, f"object {words[1]} declared twice")
                objects[words[1]] = int(words[3])
            case "gen":
                decl = _parse_gen(lineno, line, objects)
                if decl.name in gens:
                    raise FormatError(lineno, f"generator {decl.name} declared twice")
                gens[decl.name] = decl
                entries[decl.name] = {}
            case "role":
                if len(words) != 3 or words[1] not in Role.__members__:
                    raise FormatError(lineno, f"expected 'role <{'|'.join(Role.__members__)}> <gen>'")
                if words[2] not in gens:
                    raise FormatError(lineno, f"role names undeclared generator {words[2]}")
                roles[Role(words[1])] = words[2]
            case "entries":
                if len(words) != 2 or words[1] not in gens:
                    raise FormatError(lineno, "expected 'entries <declared-gen>'")
                block, block_start = words[1], lineno
            case _:
                raise FormatError(lineno, f"unknown directive {words[0]!r}")

    if block is not None:
        raise FormatError(block_start, f"entries block for {block} is not closed with 'end'")
    if name is None:
        raise FormatError(1, "missing 'model <name>' line")

    tensors = {}
    for gen, decl in gens.items():
        dom = tuple(objects[l] for l in decl.dom)
        cod = tuple(objects[l] for l in decl.cod)
        data = zeros(dom + cod)
        for index, value in entries[gen].items():
            data[index] = value
        tensors[gen] = RationalTensor(dom, cod, data)

    model = Model(name=name, objects=objects, gens=gens, tensors=tensors, roles=roles)
    check_snake(model)
    logger.info(f"Loaded model {name}: objects {objects}, generators {sorted(gens)}")
    return model


def _parse_gen(lineno: int, line: str, objects: dict[str, int]) -> GenDecl:
    head, colon, sig = line[len("gen"):].partition(":")
    gen_name = head.strip()
    dom_text, arrow, cod_text = sig.partition("->")
    if not colon or not arrow or not gen_name or " " in gen_name:
        raise FormatError(lineno, "expected 'gen <name> : <label>* -> <label>*'")
    dom, cod = tuple(dom_text.split()), tuple(cod_text.split())
    for label in dom + cod:
        if label not in objects:
            raise FormatError(lineno, f"unknown object label {label}")
    return GenDecl(name=gen_name, dom=dom, cod=cod)


def check_snake(model: Model) -> None:
    """Both snake equations for the designated cup and cap, if present."""
    if not model.has_roles(Role.cup, Role.cap):
        return
    try:
        label = model.self_dual_label()
    except ProdcheckError as e:
        raise DualityViolation(str(e)) from None
    cup, cap = Gen(name=model.roles[Role.cup]), Gen(name=model.roles[Role.cap])
    if model.gens[cap.name].cod != (label, label) or model.gens[cap.name].dom:
        raise DualityViolation(f"cap must have type -> {label} {label}")
    ident = Id(o=(label,))
    snakes = {
        "left": Compose(after=Tensor(left=cup, right=ident), before=Tensor(left=ident, right=cap)),
        "right": Compose(after=Tensor(left=ident, right=cup), before=Tensor(left=cap, right=ident)),
    }
    expected = t_identity_multi((model.objects[label],))
    for side, term in snakes.items():
        value = evaluate(term, model)
        where = first_difference(value, expected)
        if where is not None:
            logger.error(f"Snake equation ({side}) fails for {model.name} at {where}")
            raise DualityViolation(f"{side} snake differs at {where}: {value[where]} != {expected[where]}")


def emit_model(m: Model) -> str:
    lines = [f"model {m.name}"]
    lines += [f"object {label} dim {dim}" for label, dim in m.objects.items()]
    for decl in m.gens.values():
        dom, cod = " ".join(decl.dom), " ".join(decl.cod)
        lines.append(" ".join(w for w in ("gen", decl.name, ":", dom, "->", cod) if w))
    lines += [f"role {role.value} {gen}" for role, gen in m.roles.items()]
    for gen, tensor in m.tensors.items():
        lines.append(f"entries {gen}")
        for index, value in tensor.nonzero():
            lines.append(f"{' '.join(str(k) for k in index)} = {format_rational(value)}".lstrip())
        lines.append("end")
    return "\n".join(lines) + "\n"


def read_model_file(path: str | Path) -> Model:
    try:
        text = Path(path).read_text()
    except OSError as e:
        logger.error(f"Could not read model file {path}: {e}")
        raise FormatError(0, f"cannot read {path}: {e.strerror}") from None
    return load_model(text)

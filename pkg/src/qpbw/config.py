"""YAML presentation files.

Example::

    field: rational-functions
    group: {free_rank: 2}
    variables:
      - {name: x1, g: [1, 0], chi: [q, q]}
      - {name: x2, g: [0, 1], chi: [q^-1, q]}
    relations:
      - x1.x2 - q * x2.x1
    mode: graded
    max_degree: 8

Character values and relations are strings in the expression syntax of
:mod:`qpbw.expr`; ``[w]`` inside a relation stands for the super-letter of w.
Errors carry the line of the offending entry.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Optional

import yaml

from .context import AbelianGroup, Character, ContextError, QuantumContext, QuantumVariable
from .expr import ExprError, parse_gpoly
from .fields import Field, FieldError, field_from_string
from .pbw import Presentation, PresentationError
from .superletters import SuperLetterError, calculus


class ConfigError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None, source: str = "<config>"):
        self.line = line
        self.source = source
        where = f"{source}:{line}" if line is not None else source
        super().__init__(f"{where}: {message}")


_KEYS = {"field", "group", "variables", "relations", "mode", "max_degree"}


@dataclass
class VariableSpec:
    name: str
    g: list
    chi: list
    weight: int = 1
    line: Optional[int] = None


@dataclass
class Config:
    field: str = "rationals"
    free_rank: int = 0
    torsion: list = dc_field(default_factory=list)
    group_names: Optional[list] = None
    variables: list = dc_field(default_factory=list)
    relations: list = dc_field(default_factory=list)
    relation_lines: list = dc_field(default_factory=list)
    mode: str = "graded"
    max_degree: int = 6
    source: str = "<config>"
    lines: dict = dc_field(default_factory=dict)

    def _err(self, msg, key=None, line=None):
        return ConfigError(msg, line if line is not None else self.lines.get(key), self.source)

    def build_field(self) -> Field:
        try:
            return field_from_string(self.field)
        except FieldError as e:
            raise self._err(str(e), "field") from e

    def build_context(self) -> QuantumContext:
        F = self.build_field()
        try:
            group = AbelianGroup(self.free_rank, tuple(self.torsion),
                                 tuple(self.group_names) if self.group_names else None)
        except ContextError as e:
            raise self._err(str(e), "group") from e
        variables = []
        for v in self.variables:
            try:
                values = tuple(F.parse(str(c)) for c in v.chi)
            except FieldError as e:
                raise self._err(f"character of {v.name}: {e}", line=v.line) from e
            try:
                g = group.element(v.g)
            except ContextError as e:
                raise self._err(f"group element of {v.name}: {e}", line=v.line) from e
            variables.append(QuantumVariable(str(v.name), g, Character(values), int(v.weight)))
        try:
            return QuantumContext(F, group, tuple(variables))
        except ContextError as e:
            raise self._err(str(e), "variables") from e

    def build(self):
        """(context, presentation)."""
        ctx = self.build_context()
        calc = calculus(ctx)
        rels = []
        for text, line in zip(self.relations, self.relation_lines):
            try:
                rels.append(parse_gpoly(ctx, text, calc.expansion))
            except (ExprError, FieldError, ContextError, SuperLetterError) as e:
                raise self._err(f"relation {text!r}: {e}", line=line) from e
        try:
            P = Presentation(ctx, rels, self.mode)
        except PresentationError as e:
            raise self._err(str(e), "relations") from e
        return ctx, P


def _node_lines(node) -> dict:
    """Top-level key -> 1-based line, plus per-item lines for lists."""
    out = {}
    if isinstance(node, yaml.MappingNode):
        for k, v in node.value:
            out[k.value] = k.start_mark.line + 1
            if isinstance(v, yaml.SequenceNode):
                out[(k.value, "items")] = [item.start_mark.line + 1 for item in v.value]
    return out


def parse_config(text: str, source: str = "<config>") -> Config:
    try:
        node = yaml.compose(text)
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        raise ConfigError(f"invalid YAML: {getattr(e, 'problem', e)}",
                          mark.line + 1 if mark else None, source) from e
    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise ConfigError("top level must be a mapping", 1, source)
    lines = _node_lines(node)
    cfg = Config(source=source, lines=lines)

    def err(msg, key):
        return ConfigError(msg, lines.get(key), source)

    for k in data:
        if k not in _KEYS:
            raise err(f"unknown key {k!r}", k)
    cfg.field = str(data.get("field", "rationals"))
    grp = data.get("group", {}) or {}
    if not isinstance(grp, dict):
        raise err("group must be a mapping with free_rank, torsion and names", "group")
    for k in grp:
        if k not in ("free_rank", "torsion", "names"):
            raise err(f"unknown group key {k!r}", "group")
    try:
        cfg.free_rank = int(grp.get("free_rank", 0))
        cfg.torsion = [int(m) for m in grp.get("torsion", []) or []]
    except (TypeError, ValueError) as e:
        raise err(f"bad group shape: {e}", "group") from e
    cfg.group_names = [str(s) for s in grp["names"]] if grp.get("names") else None

    vars_ = data.get("variables")
    if not isinstance(vars_, list) or not vars_:
        raise err("variables must be a nonempty list", "variables")
    vlines = lines.get(("variables", "items"), [None] * len(vars_))
    for v, line in zip(vars_, vlines):
        if not isinstance(v, dict) or "name" not in v:
            raise ConfigError("each variable needs at least a name", line, source)
        extra = set(v) - {"name", "g", "chi", "weight"}
        if extra:
            raise ConfigError(f"unknown variable keys {sorted(extra)}", line, source)
        rank = cfg.free_rank + len(cfg.torsion)
        g = v.get("g", [0] * rank)
        chi = v.get("chi", [1] * rank)
        if not isinstance(g, list) or not isinstance(chi, list):
            raise ConfigError(f"g and chi of {v['name']} must be lists", line, source)
        weight = v.get("weight", 1)
        if not isinstance(weight, int) or isinstance(weight, bool):
            raise ConfigError(f"weight of {v['name']} must be an integer", line, source)
        cfg.variables.append(VariableSpec(str(v["name"]), g, chi, weight, line))

    rels = data.get("relations", []) or []
    if not isinstance(rels, list):
        raise err("relations must be a list of expressions", "relations")
    cfg.relations = [str(r) for r in rels]
    cfg.relation_lines = lines.get(("relations", "items"), [None] * len(rels))
    cfg.mode = str(data.get("mode", "graded"))
    if cfg.mode not in ("graded", "character"):
        raise err(f"mode must be graded or character, not {cfg.mode!r}", "mode")
    md = data.get("max_degree", 6)
    if not isinstance(md, int) or isinstance(md, bool) or md < 1:
        raise err("max_degree must be a positive integer", "max_degree")
    cfg.max_degree = md
    return cfg


def load_config(path) -> Config:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as e:
        raise ConfigError(f"cannot read: {e.strerror}", None, str(path)) from e
    return parse_config(text, str(path))


DEFAULT_CONFIG = """\
field: rationals
group: {free_rank: 2}
variables:
  - {name: x1, g: [1, 0], chi: ["2", "3"]}
  - {name: x2, g: [0, 1], chi: ["5", "7"]}
relations: []
mode: graded
max_degree: 6
"""


def default_config() -> Config:
    return parse_config(DEFAULT_CONFIG, "<default>")

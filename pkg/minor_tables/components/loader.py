"""Reader for the declarative table files under minor_tables/data."""
import re
from functools import lru_cache
from itertools import combinations, product
from pathlib import Path
from typing import Dict, List, Mapping, Set, Tuple
import sympy
from pydantic import BaseModel, ConfigDict
from sympy.polys.rings import PolyElement, PolyRing
from algebra.polynomials import normalize_sign, parse_polynomial
from utils.errors import UnknownFamilyError

DATA_DIR = Path(__file__).resolve().parent.parent / "data"
MINORS_FILE = DATA_DIR / "minors.txt"
PRESENTATIONS_FILE = DATA_DIR / "presentations.txt"

# x[i1], y[j2], z[k3]; a bare x[i] counts as x[i1]
PLACEHOLDER = re.compile(r"([xyz])\[[ijk](\d*)\]")
SECTION = re.compile(r"^\[(\w+)\]$")

SIZE_SYMBOLS = {name: sympy.Symbol(name, integer=True) for name in ("m", "n", "o")}


class MinorPattern(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    guard_text: str
    guard: sympy.Basic
    template: str

    def applies(self, sizes: Mapping[str, int]) -> bool:
        return guard_holds(self.guard, sizes)


class IdealPresentation(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    guard_text: str
    guard: sympy.Basic
    generators: List[str]

    def applies(self, sizes: Mapping[str, int]) -> bool:
        return guard_holds(self.guard, sizes)


def parse_guard(text: str) -> sympy.Basic:
    return sympy.sympify(sympy.sympify(text, locals=SIZE_SYMBOLS))


def guard_holds(guard: sympy.Basic, sizes: Mapping[str, int]) -> bool:
    value = guard.subs({SIZE_SYMBOLS[k]: v for k, v in sizes.items()})
    return bool(value)


def _sections(path: Path) -> Dict[str, List[Tuple[str, str]]]:
    """`{family: [(guard, body), ...]}`; the body is whatever follows the last '|'."""
    sections: Dict[str, List[Tuple[str, str]]] = {}
    current = None
    for number, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        header = SECTION.match(line)
        if header:
            current = sections.setdefault(header.group(1), [])
            continue
        if current is None or "|" not in line:
            raise ValueError(f"{path.name}:{number}: expected a section header or 'guard | body'")
        guard, body = line.rsplit("|", 1)
        current.append((guard.strip(), body.strip()))
    return sections


@lru_cache(maxsize=None)
def minor_patterns() -> Dict[str, Tuple[MinorPattern, ...]]:
    return {
        family: tuple(MinorPattern(guard_text=g, guard=parse_guard(g), template=t) for g, t in rows)
        for family, rows in _sections(MINORS_FILE).items()
    }


@lru_cache(maxsize=None)
def presentations() -> Dict[str, Tuple[IdealPresentation, ...]]:
    return {
        family: tuple(
            IdealPresentation(guard_text=g, guard=parse_guard(g),
                              generators=[part.strip() for part in body.split(";") if part.strip()])
            for g, body in rows
        )
        for family, rows in _sections(PRESENTATIONS_FILE).items()
    }


def patterns_for(family: str) -> Tuple[MinorPattern, ...]:
    tables = minor_patterns()
    if family not in tables:
        raise UnknownFamilyError(f"No minor table for family {family!r}; known: {', '.join(sorted(tables))}")
    return tables[family]


def presentation_cases(family: str) -> Tuple[IdealPresentation, ...]:
    cases = presentations()
    if family not in cases:
        raise UnknownFamilyError(f"No I3 presentation for family {family!r}; known: {', '.join(sorted(cases))}")
    return cases[family]


def instantiate(R: PolyRing, template: str, block_sizes: Mapping[str, int]) -> Set[PolyElement]:
    """All polynomials obtained by filling the placeholders with increasing index tuples per block."""
    arity: Dict[str, int] = {}
    for block, number in PLACEHOLDER.findall(template):
        arity[block] = max(arity.get(block, 0), int(number or 1))
    blocks = sorted(arity)
    choices = [combinations(range(1, block_sizes.get(b, 0) + 1), arity[b]) for b in blocks]

    result = set()
    for picked in product(*choices):
        index = dict(zip(blocks, picked))
        text = PLACEHOLDER.sub(lambda mt: f"{mt.group(1)}{index[mt.group(1)][int(mt.group(2) or 1) - 1]}", template)
        p = parse_polynomial(R, text)
        if p:
            result.add(normalize_sign(p))
    return result

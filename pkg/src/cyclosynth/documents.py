"""
Matrix files: one JSON document with the degree, the dimension and the
row-major entries as element literals.

    {"degree": 16, "dim": 2, "entries": ["deg=16; coeffs=1,0,...", ...]}
"""

from __future__ import annotations

import json
from typing import List

from pydantic import BaseModel, Field, ValidationError

from .errors import ParseError
from .linalg import RingMatrix
from .ring import Degree, parse_literal
from .validation import validate_matrix_obj


class MatrixDocument(BaseModel):
    degree: int
    dim: int
    entries: List[str] = Field(default_factory=list)

    def to_matrix(self) -> RingMatrix:
        deg = Degree(self.degree)
        elems = []
        for i, lit in enumerate(self.entries):
            try:
                elem = parse_literal(lit)
            except ParseError as e:
                raise ParseError(f"entries[{i}]: {e.message}", column=e.column) from e
            if elem.degree != deg:
                raise ParseError(f"entries[{i}] has degree {elem.degree.n}, document degree is {deg.n}")
            elems.append(elem)
        return RingMatrix(deg, [elems[r * self.dim : (r + 1) * self.dim] for r in range(self.dim)])

    @classmethod
    def from_matrix(cls, m: RingMatrix) -> "MatrixDocument":
        return cls(degree=m.degree.n, dim=m.dim, entries=[x.to_literal() for x in m.elements()])


def load_matrix(text: str) -> RingMatrix:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", line=e.lineno, column=e.colno) from e
    problems = validate_matrix_obj(obj)
    if problems:
        raise ParseError("; ".join(problems))
    try:
        doc = MatrixDocument.model_validate(obj)
    except ValidationError as e:
        raise ParseError(f"invalid matrix document: {e}") from e
    return doc.to_matrix()


def dump_matrix(m: RingMatrix) -> str:
    return json.dumps(MatrixDocument.from_matrix(m).model_dump(), indent=2) + "\n"

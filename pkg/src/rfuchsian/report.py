"""JSON reports with a fixed key order and exact rationals encoded as "num/den" strings."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .exactnum import Field, FieldElement
from .fuchsian import classify
from .hermitian import MatK
from .symbols import QuaternionAlgebraQ, RamificationSet


def encode_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def decode_rational(s: str) -> Fraction:
    num, den = s.split("/")
    return Fraction(int(num), int(den))


def encode_element(z: FieldElement) -> dict[str, str]:
    return {"re": encode_rational(z.re), "im": encode_rational(z.im), "literal": z.literal()}


def decode_element(F: Field, obj: dict) -> FieldElement:
    z = F(decode_rational(obj["re"]), decode_rational(obj["im"]))
    if "literal" in obj and obj["literal"] != z.literal():
        raise ValueError(f"literal {obj['literal']!r} does not match re/im")
    return z


def encode_matrix(M: MatK) -> list[list[dict[str, str]]]:
    return [[encode_element(x) for x in row] for row in M.rows()]


def decode_matrix(F: Field, rows: list) -> MatK:
    return MatK(F, [decode_element(F, x) for row in rows for x in row])


def encode_ram(r: RamificationSet) -> dict[str, Any]:
    return {"finite": list(r.finite_places), "infinite": r.infinite_place}


def decode_ram(obj: dict) -> RamificationSet:
    return RamificationSet(tuple(obj["finite"]), bool(obj["infinite"]))


@dataclass(frozen=True)
class ClassReport:
    d: int
    input_delta: FieldElement
    canonical_delta: FieldElement
    algebra: QuaternionAlgebraQ
    ramification: RamificationSet
    extra: dict[str, Any] = field(default_factory=dict, compare=False)

    @classmethod
    def of(cls, delta: FieldElement, **extra) -> ClassReport:
        c = classify(delta)
        return cls(delta.field.d, delta, c.delta, c.algebra, c.ram, dict(extra))

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "d": self.d,
            "input_delta": encode_element(self.input_delta),
            "canonical_delta": encode_element(self.canonical_delta),
            "algebra": {"a": self.algebra.a, "b": self.algebra.b},
            "ramification": encode_ram(self.ramification),
        }
        out.update(self.extra)
        return out

    @classmethod
    def from_dict(cls, obj: dict[str, Any]) -> ClassReport:
        F = Field(int(obj["d"]))
        known = {"d", "input_delta", "canonical_delta", "algebra", "ramification"}
        rep = cls(
            F.d,
            decode_element(F, obj["input_delta"]),
            decode_element(F, obj["canonical_delta"]),
            QuaternionAlgebraQ(int(obj["algebra"]["a"]), int(obj["algebra"]["b"])),
            decode_ram(obj["ramification"]),
            {k: v for k, v in obj.items() if k not in known},
        )
        check = classify(rep.input_delta)
        if (check.delta, check.algebra, check.ram) != (rep.canonical_delta, rep.algebra, rep.ramification):
            raise ValueError("report fields are inconsistent")
        return rep


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=True) + "\n"

"""Explicit birational maps between curve models.

A map is stored as coordinate formulas (``RatFunc`` tuples), never as a closure,
so it can be printed and audited.  Each direction may carry several charts:
alternative formulas agreeing on the curve, tried in order until one is
defined.  Points where every chart degenerates to 0/0 but the map is still a
morphism (e.g. the marked point that goes to infinity) are listed explicitly.

Point conventions: affine points are tuples of Fractions, ``None`` is the
point at infinity of a Weierstrass model, projective points are canonical
integer tuples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

from ..exactq import Q, RatFunc, proj_point

AFFINE = "affine"
PROJECTIVE = "projective"


class MapUndefinedError(ValueError):
    """No chart of the map is defined at the requested point."""


def _normalise(kind: str, P):
    if P is None:
        return None
    if kind == PROJECTIVE:
        return proj_point(P)
    return tuple(Q(c) for c in P)


@dataclass(frozen=True)
class MapStage:
    src_vars: tuple[str, ...]
    dst_vars: tuple[str, ...]
    src_kind: str
    dst_kind: str
    forward: tuple[tuple[RatFunc, ...], ...]
    backward: tuple[tuple[RatFunc, ...], ...]
    special_forward: tuple[tuple[Any, Any], ...] = ()
    special_backward: tuple[tuple[Any, Any], ...] = ()
    name: str = ""

    @staticmethod
    def _apply(charts, specials, src_kind, dst_kind, P):
        P = _normalise(src_kind, P)
        for a, b in specials:
            if _normalise(src_kind, a) == P:
                return _normalise(dst_kind, b)
        if P is None:
            raise MapUndefinedError("point at infinity is not covered by any chart")
        for chart in charts:
            vals = [f(*P) for f in chart]
            if any(v is None for v in vals):
                continue
            if dst_kind == PROJECTIVE:
                if all(v == 0 for v in vals):
                    continue
                return proj_point(vals)
            return tuple(vals)
        raise MapUndefinedError(f"map undefined at {P}")

    def apply_forward(self, P):
        return self._apply(self.forward, self.special_forward, self.src_kind, self.dst_kind, P)

    def apply_backward(self, P):
        return self._apply(self.backward, self.special_backward, self.dst_kind, self.src_kind, P)

    def inverse(self) -> "MapStage":
        return MapStage(self.dst_vars, self.src_vars, self.dst_kind, self.src_kind,
                        self.backward, self.forward, self.special_backward,
                        self.special_forward, self.name)

    def to_json(self) -> dict:
        def pts(pairs, ka, kb):
            return [[_point_str(ka, a), _point_str(kb, b)] for a, b in pairs]

        return {
            "name": self.name,
            "source": list(self.src_vars),
            "target": list(self.dst_vars),
            "forward": [str(f) for f in self.forward[0]],
            "backward": [str(f) for f in self.backward[0]],
            "forward_alt": [[str(f) for f in ch] for ch in self.forward[1:]],
            "backward_alt": [[str(f) for f in ch] for ch in self.backward[1:]],
            "special_forward": pts(self.special_forward, self.src_kind, self.dst_kind),
            "special_backward": pts(self.special_backward, self.dst_kind, self.src_kind),
        }


def _point_str(kind, P) -> str:
    if P is None:
        return "O"
    if kind == PROJECTIVE:
        return "[" + ":".join(str(c) for c in P) + "]"
    return "(" + ", ".join(str(c) for c in P) + ")"


@dataclass(frozen=True)
class MapPair:
    """Mutually inverse maps source <-> target, as a chain of stages."""

    stages: tuple[MapStage, ...] = field(default_factory=tuple)

    def forward(self, P):
        for st in self.stages:
            P = st.apply_forward(P)
        return P

    def backward(self, P):
        for st in reversed(self.stages):
            P = st.apply_backward(P)
        return P

    def then(self, other: "MapPair") -> "MapPair":
        return MapPair(self.stages + other.stages)

    def inverse(self) -> "MapPair":
        return MapPair(tuple(st.inverse() for st in reversed(self.stages)))

    def to_json(self) -> dict:
        if len(self.stages) == 1:
            return self.stages[0].to_json()
        return {"stages": [st.to_json() for st in self.stages]}


def single(stage: MapStage) -> MapPair:
    return MapPair((stage,))


def charts(*rows: Sequence[RatFunc]) -> tuple[tuple[RatFunc, ...], ...]:
    return tuple(tuple(RatFunc.of(f) for f in row) for row in rows)

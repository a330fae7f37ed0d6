"""Exact checks of the contraction identities."""

from __future__ import annotations

from dataclasses import dataclass, field

from .complex import BlockMap, Entry, same_cells
from .errors import StructureError

CHECKS = (
    "d_big^2 = 0",
    "d_small^2 = 0",
    "f chain map",
    "g chain map",
    "fg = 1",
    "gf = 1 + dh + hd",
    "fh = 0",
    "hg = 0",
    "h^2 = 0",
)


@dataclass
class IdentityReport:
    """Per-identity list of offending entries; an empty list means the identity holds."""

    checks: dict[str, list[Entry]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not any(self.checks.values())

    def failures(self) -> dict[str, list[Entry]]:
        return {k: v for k, v in self.checks.items() if v}

    def __str__(self):
        lines = []
        for name, bad in self.checks.items():
            if not bad:
                lines.append(f"  ok    {name}")
                continue
            e = bad[0]
            lines.append(
                f"  FAIL  {name}: {len(bad)} nonzero entries, first in block "
                f"{e.source} -> {e.target} at [{e.row}, {e.col}] = {e.value}"
            )
        return "\n".join(lines)


def _expect_map(name: str, m: BlockMap, shift: int, source, target):
    if m.shift != shift:
        raise StructureError(f"{name} has degree {m.shift:+d}, expected {shift:+d}")
    if not (same_cells(m.source, source) and same_cells(m.target, target)):
        raise StructureError(f"{name} is not defined between the expected complexes")


def _residue(lhs: BlockMap, rhs: BlockMap | None = None) -> list[Entry]:
    diff = lhs if rhs is None else lhs - rhs
    return sorted(diff.entries(), key=lambda e: (e.source, e.target, e.row, e.col))


def verify_contraction(con) -> IdentityReport:
    """Evaluate all nine contraction checks by block composition.

    Raises :class:`StructureError` if the maps do not even have the right
    degrees and domains for the identities to make sense.
    """
    big, small = con.big, con.small
    f, g, h = con.f, con.g, con.h
    _expect_map("f", f, 0, big.table, small.table)
    _expect_map("g", g, 0, small.table, big.table)
    _expect_map("h", h, 1, big.table, big.table)

    d, dd = big.d, small.d
    one_big, one_small = big.identity(), small.identity()

    results = {
        "d_big^2 = 0": _residue(d @ d),
        "d_small^2 = 0": _residue(dd @ dd),
        "f chain map": _residue(f @ d, dd @ f),
        "g chain map": _residue(g @ dd, d @ g),
        "fg = 1": _residue(f @ g, one_small),
        "gf = 1 + dh + hd": _residue(g @ f, one_big + d @ h + h @ d),
        "fh = 0": _residue(f @ h),
        "hg = 0": _residue(h @ g),
        "h^2 = 0": _residue(h @ h),
    }
    return IdentityReport({name: results[name] for name in CHECKS})

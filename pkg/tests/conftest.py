from __future__ import annotations

import sys
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from classgraph import (  # noqa: E402
    GroupExpr,
    MetabelianGroup,
    PermGroup,
    evaluate,
    spectrum_of,
    to_permutation,
)
from corpus import corpus_entries  # noqa: E402


@dataclass(frozen=True)
class CorpusGroup:
    name: str
    expr: GroupExpr
    group: MetabelianGroup | PermGroup
    order: int
    spectrum: Counter
    perm: PermGroup


@pytest.fixture(scope="session")
def corpus() -> tuple[CorpusGroup, ...]:
    out = []
    for entry in corpus_entries():
        group = evaluate(entry.expr)
        perm = group if isinstance(group, PermGroup) else to_permutation(group)
        out.append(
            CorpusGroup(
                name=entry.name,
                expr=entry.expr,
                group=group,
                order=entry.order,
                spectrum=spectrum_of(group),
                perm=perm,
            )
        )
    return tuple(out)

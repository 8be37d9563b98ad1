"""DOT rendering of the implication diagram between the augmentations."""

from __future__ import annotations

from typing import Iterable

from ..baire.witnesses import NON_ARROWS
from .claims import ClaimResult

NODES = (
    ("le", "≤"),
    ("lin", "linear"),
    ("linid", "identity-linear"),
    ("slin", "strict identity-linear"),
    ("str", "strictive"),
    ("strtrn", "strictive-transitive"),
    ("negstr", "negative-strictive"),
    ("cor", "corrective"),
)

# (source, target, hypothesis label, supporting claims); an arrow A -> B reads A ⊆ B
ARROWS = (
    ("le", "lin", "", ("chain-lin",)),
    ("lin", "linid", "", ("chain-lin",)),
    ("linid", "slin", "", ("chain-lin",)),
    ("slin", "cor", "Θ-linear, Θ∘Υ ⊆ Θ", ("slin-id-below-cor",)),
    ("str", "cor", "Υ,Θ ⊆ Endo", ("str-below-cor",)),
    ("strtrn", "cor", "Υ,Θ ⊆ Endo, Θ∘Υ ⊆ Υ, Θ subsemigroup", ("strtrn-below-cor",)),
    ("negstr", "cor", "", ("negstr-below-cor",)),
    ("negstr", "linid", "Υ = Θ subsemigroup of Endo", ("negstr-below-lin-id",)),
    ("str", "strtrn", "transitive closure", ("trn-minimum",)),
)


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def implication_graph(results: Iterable[ClaimResult], refuted: Iterable[str] | None = None) -> str:
    """Solid edges for verified inclusions, dashed struck edges for refuted ones.

    ``refuted`` lists the non-arrow ids whose witnesses were confirmed; by
    default every registered non-arrow whose symbolic witness separates.
    An inclusion is drawn only when every supporting claim was checked on
    at least one instance and produced no violation.
    """
    by_id = {r.claim_id: r for r in results}
    if refuted is None:
        refuted = [w.id for w in NON_ARROWS if w.verify()]
    refuted = set(refuted)
    out = ["digraph implications {", "  rankdir=BT;", '  node [shape=box, fontname="Helvetica"];']
    for key, label in NODES:
        out.append(f"  {key} [label={_q(label)}];")
    for src, dst, hyp, support in ARROWS:
        rs = [by_id.get(c) for c in support]
        if not all(r is not None and r.checked > 0 and r.ok for r in rs):
            continue
        label = hyp + (" " if hyp else "") + "[" + ", ".join(support) + "]"
        out.append(f"  {src} -> {dst} [style=solid, label={_q(label)}];")
    for w in NON_ARROWS:
        if w.id in refuted:
            out.append(
                f"  {w.source} -> {w.target} [style=dashed, arrowhead=tee, color=gray40, label={_q('✗ ' + w.id)}];"
            )
    out.append("}")
    return "\n".join(out) + "\n"


__all__ = ["ARROWS", "NODES", "implication_graph"]

"""
Printer for the ASCII formula syntax.

The default rendering uses only the core connectives. With ``sugar=True`` the
derived shapes produced by the parser are shown as ``#t``, ``|``, ``->``,
``<->``, ``box``, ``dia`` and ``<a>``; both renderings parse back to the same AST.
"""
from typing import Optional, Tuple

from syntax.formula import And, Atom, Bottom, Con, Formula, Next, Not, TOP, Yesterday

# Binding strength, loosest first
IFF, IMP, OR, AND, UNARY, ATOMIC = range(6)

_BINARY = {IFF: " <-> ", IMP: " -> ", OR: " | ", AND: " & "}


def _sugar_view(f: Formula) -> Optional[Tuple]:
    """Recognize a desugared derived connective at the root of ``f``."""
    if f == TOP:
        return ("top",)
    if isinstance(f, Con) and f.antecedent == TOP:
        return ("box", f.consequent)
    if isinstance(f, Not):
        inner = f.operand
        if isinstance(inner, Con) and isinstance(inner.consequent, Not):
            if inner.antecedent == TOP:
                return ("dia", inner.consequent.operand)
            return ("diamond", inner.antecedent, inner.consequent.operand)
        if isinstance(inner, And):
            if isinstance(inner.left, Not) and isinstance(inner.right, Not):
                return (OR, inner.left.operand, inner.right.operand)
            if isinstance(inner.right, Not):
                return (IMP, inner.left, inner.right.operand)
    if isinstance(f, And):
        left, right = _implication(f.left), _implication(f.right)
        if left and right and left == (right[1], right[0]):
            return (IFF, left[0], left[1])
    return None


def _implication(f: Formula) -> Optional[Tuple[Formula, Formula]]:
    if isinstance(f, Not) and isinstance(f.operand, And) and isinstance(f.operand.right, Not):
        return (f.operand.left, f.operand.right.operand)
    return None


class FormulaPrinter:
    """Renders formulas with canonical parenthesization."""

    def __init__(self, sugar: bool = False):
        self.sugar = sugar

    def render(self, f: Formula) -> str:
        return self._render(f)[0]

    def _render(self, f: Formula) -> Tuple[str, int]:
        if self.sugar:
            view = _sugar_view(f)
            if view is not None:
                return self._render_sugar(view)
        if isinstance(f, Atom):
            return f.name, ATOMIC
        if isinstance(f, Bottom):
            return "#f", ATOMIC
        if isinstance(f, Not):
            return "~" + self._operand(f.operand), UNARY
        if isinstance(f, Next):
            return "X " + self._operand(f.operand), UNARY
        if isinstance(f, Yesterday):
            return "Y " + self._operand(f.operand), UNARY
        if isinstance(f, Con):
            return f"[{self.render(f.antecedent)}] " + self._operand(f.consequent), UNARY
        if isinstance(f, And):
            return self._binary(AND, f.left, f.right), AND
        raise TypeError(f"Not a formula: {f!r}")

    def _render_sugar(self, view: Tuple) -> Tuple[str, int]:
        kind = view[0]
        if kind == "top":
            return "#t", ATOMIC
        if kind == "box":
            return "box " + self._operand(view[1]), UNARY
        if kind == "dia":
            return "dia " + self._operand(view[1]), UNARY
        if kind == "diamond":
            return f"<{self.render(view[1])}> " + self._operand(view[2]), UNARY
        return self._binary(kind, view[1], view[2]), kind

    def _operand(self, f: Formula) -> str:
        text, level = self._render(f)
        return text if level >= UNARY else f"({text})"

    def _binary(self, level: int, left: Formula, right: Formula) -> str:
        left_text, left_level = self._render(left)
        right_text, right_level = self._render(right)
        # Same-operator chains follow associativity; mixed operators get parentheses.
        if left_level < UNARY and (left_level != level or level == IMP):
            left_text = f"({left_text})"
        if right_level < UNARY and (right_level != level or level != IMP):
            right_text = f"({right_text})"
        return left_text + _BINARY[level] + right_text


def to_text(f: Formula, sugar: bool = False) -> str:
    """Render a formula as text; ``sugar`` resugars derived connectives."""
    return FormulaPrinter(sugar).render(f)

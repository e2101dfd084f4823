"""Export of BlpModels in the text LP file format."""

from typing import Iterable, List, Tuple

from graph_edit_distance.formulations.model import EQUAL, BlpModel, Domain

_TERMS_PER_LINE = 8


def _format_number(value: float) -> str:
    return repr(float(value))


def _linear_expression(model: BlpModel, terms: Iterable[Tuple[int, float]]) -> List[str]:
    """Render terms as wrapped lines: '3.0 x_0_1 - 2.0 y_0_0 ...'."""
    chunks = []
    for count, (index, coef) in enumerate(terms):
        sign = "-" if coef < 0 else "+"
        body = f"{_format_number(abs(coef))} {model.variables[index].name}"
        chunks.append(body if count == 0 and sign == "+" else f"{sign} {body}")
    if not chunks:
        chunks = ["0 " + model.variables[0].name] if model.variables else ["0"]
    return [" ".join(chunks[start:start + _TERMS_PER_LINE]) for start in range(0, len(chunks), _TERMS_PER_LINE)]


def write_lp(model: BlpModel) -> str:
    """
    Render a model in the LP file format read by common MILP solvers.

    The objective constant is written as a constant term of the objective.
    Binary variables are listed in a Binaries section; relaxed models only
    carry bounds.
    """
    lines = [f"\\ kind: {model.kind}", f"\\ variables: {model.num_variables}",
             f"\\ constraints: {model.num_constraints}", "Minimize"]
    objective = [(i, c) for i, c in model.objective if c != 0.0]
    body = _linear_expression(model, objective) if objective else []
    if model.constant != 0.0 or not body:
        constant = model.constant
        if body:
            sign = "-" if constant < 0 else "+"
            body[-1] = f"{body[-1]} {sign} {_format_number(abs(constant))}"
        else:
            body = [_format_number(constant)]
    lines.append(" obj: " + body[0])
    lines.extend("   " + line for line in body[1:])

    lines.append("Subject To")
    for row in model.constraints:
        expression = _linear_expression(model, row.terms)
        sense = "=" if row.sense == EQUAL else "<="
        expression[-1] = f"{expression[-1]} {sense} {_format_number(row.rhs)}"
        lines.append(f" {row.name}: {expression[0]}")
        lines.extend("   " + line for line in expression[1:])

    lines.append("Bounds")
    for variable in model.variables:
        lines.append(f" 0 <= {variable.name} <= 1")
    binaries = [v.name for v in model.variables if v.domain is Domain.BINARY]
    if binaries:
        lines.append("Binaries")
        for start in range(0, len(binaries), _TERMS_PER_LINE):
            lines.append(" " + " ".join(binaries[start:start + _TERMS_PER_LINE]))
    lines.append("End")
    return "\n".join(lines) + "\n"

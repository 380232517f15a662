from errors import DimacsParseError

from .cnf import CnfFormula, check_cnf


def parse_dimacs(text: str, require_3sat: bool = False) -> CnfFormula:
    var_count = clause_count = None
    header_line = 0
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    current_line = 0
    last_line = 0
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        last_line = line_number
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            parts = line.split()
            if var_count is not None:
                raise DimacsParseError("duplicate header", line_number)
            if len(parts) != 4 or parts[1] != "cnf":
                raise DimacsParseError(f"malformed header {line!r}", line_number)
            try:
                var_count, clause_count = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsParseError(f"malformed header {line!r}", line_number) from None
            if var_count < 0 or clause_count < 0:
                raise DimacsParseError("negative counts in header", line_number)
            header_line = line_number
            continue
        if var_count is None:
            raise DimacsParseError("clause before 'p cnf' header", line_number)
        for token in line.split():
            try:
                lit = int(token)
            except ValueError:
                raise DimacsParseError(f"not an integer literal: {token!r}", line_number) from None
            if lit == 0:
                if require_3sat and len(current) != 3:
                    raise DimacsParseError(f"clause width ≠ 3 (got {len(current)})", current_line or line_number)
                clauses.append(tuple(current))
                current = []
                current_line = 0
                continue
            if abs(lit) > var_count:
                raise DimacsParseError(f"literal {lit} out of range 1..{var_count}", line_number)
            if not current:
                current_line = line_number
            current.append(lit)
    if var_count is None:
        raise DimacsParseError("missing 'p cnf' header", max(last_line, 1))
    if current:
        raise DimacsParseError("clause not 0-terminated", current_line)
    if len(clauses) != clause_count:
        raise DimacsParseError(f"header declares {clause_count} clauses, found {len(clauses)}", header_line)
    formula = CnfFormula(var_count, tuple(clauses))
    check_cnf(formula, require_3sat=require_3sat)
    return formula


def write_dimacs(formula: CnfFormula) -> str:
    lines = [f"p cnf {formula.var_count} {len(formula.clauses)}"]
    for clause in formula.clauses:
        lines.append(" ".join(map(str, clause)) + " 0")
    return "\n".join(lines) + "\n"

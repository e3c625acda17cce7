class ProofRejected(Exception):
    """A checker found an invalid step.

    ``step`` is the 0-based index of the first offending step (``None`` for
    whole-proof conditions such as a missing conclusion).
    """

    def __init__(self, reason: str, step: int | None = None, rule: str | None = None):
        self.reason = reason
        self.step = step
        self.rule = rule
        where = f"step {step}: " if step is not None else ""
        tag = f"[{rule}] " if rule else ""
        super().__init__(f"{where}{tag}{reason}")

    def nested(self, step: int, rule: str | None = None) -> "ProofRejected":
        """Re-anchor an inner rejection at an outer step index."""
        inner = f"{self.rule}: " if self.rule else ""
        at = f"inner step {self.step}: " if self.step is not None else ""
        return ProofRejected(f"{inner}{at}{self.reason}", step, rule)


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        loc = ""
        if line is not None:
            loc = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(f"{loc}{message}")

class Falsification(AssertionError):
    """A certifier found a counterexample to a claimed theorem.

    This is never expected; it means either a bug or a wrong claim, and callers
    must surface it loudly instead of recovering.
    """

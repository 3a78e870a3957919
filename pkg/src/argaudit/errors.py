"""Exception hierarchy shared by every argaudit module."""


class ArgauditError(Exception):
    """Base class for all library errors."""


class MemberOutOfFramework(ArgauditError, ValueError):
    def __init__(self, labels):
        self.labels = tuple(sorted(labels))
        super().__init__(f"arguments not in framework: {', '.join(self.labels)}")


class NotAnScc(ArgauditError, ValueError):
    pass


class CapacityExceeded(ArgauditError):
    pass


class UnknownSemantics(ArgauditError, ValueError):
    pass


class NoExtensions(ArgauditError):
    """Raised when an intersection is requested over an empty extension family."""


class NotNormalExpansion(ArgauditError, ValueError):
    pass


class InvalidPreferences(ArgauditError, ValueError):
    pass


class ParseError(ArgauditError, ValueError):
    def __init__(self, line, reason):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class UndeclaredArgument(ParseError):
    def __init__(self, label, line):
        self.label = label
        super().__init__(line, f"undeclared argument {label!r}")

# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
from casimir_numerics.exceptions import CasimirError


class ConfigError(CasimirError):
    """Thrown when an experiment configuration is invalid.

    ``source`` is the file (or command line flag) holding the value and
    ``line`` its 1-based line, when known.
    """

    def __init__(self, message, line=None, source=None):
        super().__init__(message)
        self.message = message
        self.line = line
        self.source = source

    def __str__(self):
        if self.source and self.line:
            return "%s:%d: %s" % (self.source, self.line, self.message)
        if self.source:
            return "%s: %s" % (self.source, self.message)
        return self.message

"""Exception hierarchy shared by the models, the HTTP namespaces and the CLI."""


class OrbitToolkitError(Exception):
    """
    Base class for every error raised by the toolkit

    Args:
        message (str): Human readable description
        payload (dict): Extra fields merged into the JSON reply
    """

    status_code = 500

    def __init__(self, message, payload=None):
        super().__init__(message)
        self.message = message
        self.payload = dict(payload or {})

    def to_dict(self):
        body = {'message': self.message, 'error': type(self).__name__}
        body.update(self.payload)
        return body


class InvalidInputError(OrbitToolkitError):
    """Malformed clan, subset, ordering or kind string."""
    status_code = 400


class UnsupportedKindError(OrbitToolkitError):
    """Family or rank outside the supported range."""
    status_code = 400


class NotImplementedForKindError(OrbitToolkitError):
    """The operation exists but not for this family."""
    status_code = 501


class FlagValidationError(OrbitToolkitError):
    """A matrix does not describe a point of the flag variety."""
    status_code = 422


class DomainError(OrbitToolkitError):
    """Argument outside the domain where the operation is defined."""
    status_code = 422


class ConsistencyError(OrbitToolkitError):
    """An internal self-check failed."""
    status_code = 500


# Exit codes used by the command line front end
EXIT_OK = 0
EXIT_FAILED = 1
EXIT_UNSUPPORTED = 2

USAGE_ERRORS = (InvalidInputError, UnsupportedKindError, NotImplementedForKindError)

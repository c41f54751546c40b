"""Exception types shared across the package.

Every error carries a short machine-readable ``code`` that the HTTP layer
echoes in its JSON error bodies.
"""


class TopicLensError(Exception):
    """Base class for all errors raised by this package."""

    code = "error"


class CorpusIoError(TopicLensError):
    """A corpus path is missing, unreadable, or of the wrong kind."""

    code = "io_error"


class FormatError(TopicLensError):
    """Malformed input content; the message names the offending line or file."""

    code = "format_error"


class DuplicateIdError(TopicLensError):
    """Two documents in one batch share an id; the message names the id."""

    code = "duplicate_id"


class EmptyCorpusError(TopicLensError):
    """No document survived ingestion or preprocessing."""

    code = "empty_corpus"


class ConfigError(TopicLensError):
    """Invalid configuration value."""

    code = "config_error"


class UnknownTermError(TopicLensError):
    code = "unknown_term"


class UnknownTopicError(TopicLensError):
    code = "unknown_topic"


class UnknownDocumentError(TopicLensError):
    code = "unknown_document"


class UnknownNodeError(TopicLensError):
    """A selection node id is neither a topic id nor a term id."""

    code = "unknown_node"


class EmptySelectionError(TopicLensError):
    code = "empty_selection"

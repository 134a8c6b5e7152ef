# -*- coding: utf-8 -*-
"""
This module contains the exceptions raised by specocc.

Every exception carries an ``exit_code`` that the command line front end
uses as its process exit status:

    - 0: success
    - 1: unexpected failure
    - 2: configuration/specification error
    - 3: I/O or file format error
    - 4: numeric or contract error
    - 5: incomplete method/dataset grid

"""
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONFIG = 2
EXIT_IO = 3
EXIT_NUMERIC = 4
EXIT_GRID = 5


class SpecoccError(Exception):
    """
    Base class of all specocc errors.

    Subclasses that format their message from other constructor arguments
    store them in ``_init_args`` so the error can cross a process
    boundary (worker pool) unchanged.
    """
    exit_code = EXIT_FAILURE

    def __reduce__(self):
        args = getattr(self, '_init_args', self.args)
        return self.__class__, tuple(args), self.__dict__


class InvalidInputError(SpecoccError):
    """
    Raised when a signal contains non finite values or has an invalid
    shape.
    """
    exit_code = EXIT_NUMERIC

    def __init__(self, reason):
        self._init_args = (reason, )
        super(InvalidInputError, self).__init__('invalid input: %s' % reason)


class SymmetryViolationError(SpecoccError):
    """
    Raised when an inverse transform would produce a complex signal
    (the spectrum is not conjugate symmetric).
    """
    exit_code = EXIT_NUMERIC

    def __init__(self, residue):
        self._init_args = (residue, )
        self.residue = residue
        super(SymmetryViolationError, self).__init__(
            'spectrum is not conjugate symmetric (imaginary residue %g)' %
            residue)


class DimensionError(SpecoccError):
    """
    Raised when a time series does not match the dimensions expected by a
    model or by an attribution map.
    """
    exit_code = EXIT_NUMERIC

    def __init__(self, expected, actual):
        self._init_args = (expected, actual)
        self.expected = expected
        self.actual = actual
        super(DimensionError, self).__init__(
            'dimension mismatch: expected %r, got %r' % (expected, actual))


class ContractViolationError(SpecoccError):
    """
    Raised when an operation is called with an argument that breaks its
    contract (e.g. an unnormalized frequency map).
    """
    exit_code = EXIT_NUMERIC


class DomainError(SpecoccError):
    """
    Raised when an attribution map lives in the wrong domain for the
    requested operation.
    """
    exit_code = EXIT_CONFIG

    def __init__(self, expected, actual):
        self._init_args = (expected, actual)
        super(DomainError, self).__init__(
            'expected a %s map, got a %s map' % (expected, actual))


class ConfigError(SpecoccError):
    """
    Raised for invalid run or occlusion configurations.
    """
    exit_code = EXIT_CONFIG


class InvalidSpecError(ConfigError):
    """
    Raised for invalid model or synthetic dataset specifications (empty
    rule set, overlapping bands,...).
    """


class InvalidPolicyError(ConfigError):
    """
    Raised for invalid mask policies (k larger than the number of bins,
    threshold outside [0, 1],...).
    """


class ShapeInconsistencyError(ConfigError):
    """
    Raised when the shapes declared by a model specification are not
    consistent with each other.
    """


class NonFiniteParameterError(SpecoccError):
    """
    Raised when a model specification contains NaN or infinite parameters.
    """
    exit_code = EXIT_NUMERIC

    def __init__(self, field):
        self._init_args = (field, )
        super(NonFiniteParameterError, self).__init__(
            'non finite value in model parameter %r' % field)


class ModelParseError(SpecoccError):
    """
    Raised when a model document cannot be parsed (invalid json, missing
    field, unknown kind).
    """
    exit_code = EXIT_IO


class MissingPathError(SpecoccError):
    """
    Raised when a file referenced by a run configuration does not exist.
    """
    exit_code = EXIT_IO

    def __init__(self, path, what='file'):
        self._init_args = (path, what)
        self.path = path
        super(MissingPathError, self).__init__(
            '%s not found: %s' % (what, path))


class DatasetFormatError(SpecoccError):
    """
    Base class of the dataset file format errors.
    """
    exit_code = EXIT_IO

    def __init__(self, path, line, reason):
        self._init_args = (path, line, reason)
        self.path = path
        self.line = line
        super(DatasetFormatError, self).__init__(
            '%s:%d: %s' % (path, line, reason))


class RaggedRowError(DatasetFormatError):
    """
    Raised when a row does not have the same number of values as the
    others.
    """


class NonNumericFieldError(DatasetFormatError):
    """
    Raised when a value field cannot be parsed as a number.
    """


class UnknownLabelError(DatasetFormatError):
    """
    Raised when a label is not part of the label map the dataset is loaded
    against (e.g. a test set label never seen in the training set).
    """


class IncompleteGridError(SpecoccError):
    """
    Raised when a (dataset x method) grid of results has missing cells.
    """
    exit_code = EXIT_GRID

    def __init__(self, missing):
        self._init_args = (missing, )
        self.missing = missing
        super(IncompleteGridError, self).__init__(
            'incomplete result grid, missing: %s' % ', '.join(
                '%s/%s' % cell for cell in missing))


class NothingToPlotError(SpecoccError):
    """
    Raised when the report command finds no result rows to plot.
    """
    exit_code = EXIT_IO

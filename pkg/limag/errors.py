# -*- coding: utf-8 -*-
"""
Exceptions raised by limag.
"""

__all__ = ['Error',
           'ParameterOverflowError',
           'SingularMatrixError',
           'DimensionMismatchError',
           'InvalidParametersError',
           'NotInvertibleError',
           'NotBhSequenceError',
           'SearchCapExceededError',
           'EnumerationCapExceededError',
           'InconsistencyError',
           'FormatError']


class Error(Exception):
  """Base error class for this package"""
  pass

class ParameterOverflowError(Error, OverflowError):
  """A value would not fit under the arithmetic bound"""
  def __init__(self, what, bits):
    super(ParameterOverflowError, self).__init__(
      'parameter overflow: %s exceeds the 2^%d magnitude bound' % (what, bits))
    self.what = what
    self.bits = bits

class SingularMatrixError(Error, ValueError):
  """Singular or rank-deficient integer matrix"""
  pass

class DimensionMismatchError(Error, ValueError):
  """Vector or matrix of the wrong length or shape"""
  pass

class InvalidParametersError(Error, ValueError):
  """Parameters outside their domain"""
  pass

class NotInvertibleError(Error, ValueError):
  """Residue is not a unit modulo the given modulus"""
  pass

class NotBhSequenceError(Error, ValueError):
  """Sequence has two sphere vectors with the same weighted sum"""
  def __init__(self, witness):
    super(NotBhSequenceError, self).__init__(
      'not a B_t[l] sequence: %r and %r collide' % witness)
    self.witness = witness

class SearchCapExceededError(Error):
  """Backtracking search visited more nodes than allowed"""
  pass

class EnumerationCapExceededError(Error):
  """Enumeration would scan more words than allowed"""
  pass

class InconsistencyError(Error):
  """Result contradicts a proven statement; indicates a bug"""
  pass

class FormatError(Error, ValueError):
  """Malformed input document"""
  def __init__(self, message, location=None):
    if location:
      message = '%s: %s' % (location, message)
    super(FormatError, self).__init__(message)
    self.location = location

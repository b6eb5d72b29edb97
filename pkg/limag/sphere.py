# -*- coding: utf-8 -*-
"""
The error model: t asymmetric errors of limited magnitude l.

An error vector has entries in [0, l] and at most t nonzero entries. The set
of all of them is the error sphere S(n, t, l).
"""
from collections import namedtuple
from math import comb

from .errors import DimensionMismatchError, InvalidParametersError
from .integers import check_bound

__all__ = ['CodeParams',
           'sphere_size',
           'enumerate_sphere',
           'is_in_sphere',
           'as_params',
           'hamming_weight']


class CodeParams(namedtuple('CodeParams', 'n t ell')):
  """Length n, number of errors t and magnitude bound ell of a code.

  t = 0 is accepted so that counting stays total; operations building codes
  call require_correcting() to insist on t >= 1.
  """
  __slots__ = ()

  def __new__(cls, n, t, ell):
    n, t, ell = int(n), int(t), int(ell)
    if n < 1:
      raise InvalidParametersError('length n must be >= 1, got %d' % n)
    if not 0 <= t <= n:
      raise InvalidParametersError('need 0 <= t <= n, got t=%d, n=%d' % (t, n))
    if ell < 1:
      raise InvalidParametersError('magnitude ell must be >= 1, got %d' % ell)
    return super(CodeParams, cls).__new__(cls, n, t, ell)

  def require_correcting(self):
    if self.t < 1:
      raise InvalidParametersError('codes need t >= 1, got %r' % (self,))
    return self


def as_params(p):
  """Accepts a CodeParams or any (n, t, ell) triple."""
  return p if isinstance(p, CodeParams) else CodeParams(*p)


def hamming_weight(e):
  return sum(1 for x in e if x)


def sphere_size(p):
  """|S(n, t, l)| = sum over i <= t of C(n, i) * l^i."""
  n, t, ell = as_params(p)
  return check_bound(sum(comb(n, i) * ell ** i for i in range(t + 1)),
                     'sphere size |S(%d,%d,%d)|' % (n, t, ell))


def _extend(prefix, remaining, budget, ell):
  if not remaining:
    yield tuple(prefix)
    return
  prefix.append(0)
  for e in _extend(prefix, remaining - 1, budget, ell):
    yield e
  if budget:
    for value in range(1, ell + 1):
      prefix[-1] = value
      for e in _extend(prefix, remaining - 1, budget - 1, ell):
        yield e
  prefix.pop()


def enumerate_sphere(p):
  """Yields every vector of S(n, t, l) once, in lexicographic order."""
  p = as_params(p)
  sphere_size(p)
  return _extend([], p.n, p.t, p.ell)


def is_in_sphere(e, p):
  p = as_params(p)
  if len(e) != p.n:
    raise DimensionMismatchError(
      'vector of length %d, expected %d' % (len(e), p.n))
  return all(0 <= x <= p.ell for x in e) and hamming_weight(e) <= p.t

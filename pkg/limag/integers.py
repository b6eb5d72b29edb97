# -*- coding: utf-8 -*-
"""
Exact integer arithmetic: modular helpers, determinants and the Smith and
Hermite normal forms of integer matrices.

Nothing here ever wraps around. Every value that is stored or returned is
checked against the magnitude bound from limag.config.max_bits() and
ParameterOverflowError is raised when it does not fit.
"""
import logging
import operator
from collections import namedtuple
from math import gcd

from sympy import mod_inverse as _mod_inverse, primefactors
from sympy.ntheory import n_order

from .config import max_bits
from .errors import (ParameterOverflowError, SingularMatrixError,
                     DimensionMismatchError, InvalidParametersError,
                     NotInvertibleError)

__all__ = ['IntMatrix',
           'NormalFormResult',
           'check_bound',
           'check_power',
           'mod_inverse',
           'element_order',
           'has_order',
           'abs_det',
           'smith_normal_form',
           'hermite_normal_form',
           'hermite_basis']


NormalFormResult = namedtuple('NormalFormResult', 'U D V')


def check_bound(value, what='value'):
  """Returns value unchanged, or raises ParameterOverflowError if its
  magnitude reaches 2**max_bits().
  """
  bits = max_bits()
  if abs(value) >> bits:
    raise ParameterOverflowError(what, bits)
  return value


def check_power(base, exponent, what='value'):
  """base**exponent under the bound. Fails before computing the power when
  its bit length alone is already too large.
  """
  bits = max_bits()
  if base > 1 and (base.bit_length() - 1) * exponent >= bits:
    raise ParameterOverflowError(what, bits)
  return check_bound(base ** exponent, what)


class IntMatrix(object):
  """Immutable integer matrix stored row-major.

  Rows are the basis vectors when the matrix generates a lattice.
  """
  __slots__ = ('_rows', 'nrows', 'ncols')

  def __init__(self, rows):
    rows = tuple(tuple(operator.index(x) for x in row) for row in rows)
    ncols = len(rows[0]) if rows else 0
    for row in rows:
      if len(row) != ncols:
        raise DimensionMismatchError('ragged matrix rows')
      for x in row:
        check_bound(x, 'matrix entry')
    self._rows = rows
    self.nrows = len(rows)
    self.ncols = ncols

  @classmethod
  def identity(cls, n):
    return cls([[int(i == j) for j in range(n)] for i in range(n)])

  @classmethod
  def diagonal(cls, values):
    values = list(values)
    n = len(values)
    return cls([[values[i] if i == j else 0 for j in range(n)]
                for i in range(n)])

  @property
  def rows(self):
    return self._rows

  @property
  def is_square(self):
    return self.nrows == self.ncols

  def diag(self):
    return tuple(self._rows[i][i] for i in range(min(self.nrows, self.ncols)))

  def tolist(self):
    return [list(row) for row in self._rows]

  def __mul__(self, other):
    if not isinstance(other, IntMatrix):
      return NotImplemented
    if self.ncols != other.nrows:
      raise DimensionMismatchError(
        'cannot multiply %dx%d by %dx%d' % (self.nrows, self.ncols,
                                            other.nrows, other.ncols))
    cols = list(zip(*other.rows))
    return IntMatrix([[sum(a * b for a, b in zip(row, col)) for col in cols]
                      for row in self._rows])

  def __getitem__(self, index):
    if isinstance(index, tuple):
      i, j = index
      return self._rows[i][j]
    return self._rows[index]

  def __iter__(self):
    return iter(self._rows)

  def __len__(self):
    return self.nrows

  def __eq__(self, other):
    if not isinstance(other, IntMatrix):
      return NotImplemented
    return self._rows == other._rows

  def __ne__(self, other):
    result = self.__eq__(other)
    return result if result is NotImplemented else not result

  def __hash__(self):
    return hash(self._rows)

  def __repr__(self):
    return 'IntMatrix(%r)' % (self.tolist(),)


def _as_matrix(G):
  return G if isinstance(G, IntMatrix) else IntMatrix(G)


#
# modular arithmetic
#

def mod_inverse(a, m):
  """Returns b with a*b = 1 (mod m), or None when gcd(a, m) != 1."""
  if m < 2:
    raise InvalidParametersError('modulus must be at least 2, got %d' % m)
  if not 0 <= a < m:
    raise InvalidParametersError('residue %d not in [0, %d)' % (a, m))
  check_bound(m, 'modulus')
  try:
    return int(_mod_inverse(a, m))
  except ValueError:
    return None


def element_order(x, m):
  """Multiplicative order of the unit x modulo m.

  Raises NotInvertibleError if gcd(x, m) != 1.
  """
  if m < 2 or not 1 <= x < m:
    raise InvalidParametersError('need 1 <= x < m, got x=%d, m=%d' % (x, m))
  check_bound(m, 'modulus')
  if gcd(x, m) != 1:
    raise NotInvertibleError('%d is not a unit modulo %d' % (x, m))
  return int(n_order(x, m))


def has_order(x, k, m):
  """True iff the multiplicative order of x modulo m is exactly k.

  Only k is factored, so this stays cheap for moduli too large to factor.
  """
  if k < 1:
    raise InvalidParametersError('order must be positive, got %d' % k)
  if gcd(x, m) != 1:
    return False
  one = 1 % m
  if pow(x, k, m) != one:
    return False
  return all(pow(x, k // p, m) != one for p in primefactors(k))


#
# determinants and normal forms
#

def abs_det(G):
  """Exact |det G| by Bareiss fraction-free elimination."""
  G = _as_matrix(G)
  if not G.is_square:
    raise DimensionMismatchError(
      'determinant of a %dx%d matrix' % (G.nrows, G.ncols))
  n = G.nrows
  if n == 0:
    return 1

  a = G.tolist()
  prev = 1
  for k in range(n - 1):
    if a[k][k] == 0:
      swap = next((i for i in range(k + 1, n) if a[i][k]), None)
      if swap is None:
        return 0
      a[k], a[swap] = a[swap], a[k]
    for i in range(k + 1, n):
      for j in range(k + 1, n):
        # exact division: every intermediate is a minor of G
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        check_bound(a[i][j], 'determinant minor')
    prev = a[k][k]
  return abs(a[n - 1][n - 1])


def _swap_rows(a, u, i, j):
  if i != j:
    a[i], a[j] = a[j], a[i]
    u[i], u[j] = u[j], u[i]


def _swap_cols(a, v, i, j):
  if i != j:
    for row in a:
      row[i], row[j] = row[j], row[i]
    for row in v:
      row[i], row[j] = row[j], row[i]


def _add_row(a, u, target, source, factor):
  """row[target] += factor * row[source], mirrored on u."""
  for m in (a, u):
    src = m[source]
    m[target] = [x + factor * y for x, y in zip(m[target], src)]


def _add_col(a, v, target, source, factor):
  for m in (a, v):
    for row in m:
      row[target] += factor * row[source]


def _negate_row(a, u, i):
  a[i] = [-x for x in a[i]]
  u[i] = [-x for x in u[i]]


def _check_entries(what, *matrices):
  for m in matrices:
    for row in m:
      for x in row:
        check_bound(x, what)


def _smallest_pivot(a, k):
  """(row, col) of the smallest nonzero magnitude in the block a[k:, k:],
  ties broken by the lowest (row, col).
  """
  best = None
  n = len(a)
  for i in range(k, n):
    for j in range(k, n):
      x = a[i][j]
      if x and (best is None or abs(x) < abs(a[best[0]][best[1]])):
        best = (i, j)
  return best


def smith_normal_form(G):
  """Smith normal form of a square nonsingular integer matrix.

  Returns:
    NormalFormResult (U, D, V) with U*G*V = D, U and V unimodular and
    D = diag(d1, ..., dn), 1 <= d1 | d2 | ... | dn.

  Raises:
    DimensionMismatchError for non-square input, SingularMatrixError for
    det G = 0, ParameterOverflowError if an entry outgrows the bound.
  """
  G = _as_matrix(G)
  if not G.is_square:
    raise DimensionMismatchError('Smith normal form needs a square matrix')
  if abs_det(G) == 0:
    raise SingularMatrixError('Smith normal form of a singular matrix')

  n = G.nrows
  a = G.tolist()
  u = IntMatrix.identity(n).tolist()
  v = IntMatrix.identity(n).tolist()

  for k in range(n):
    while True:
      i, j = _smallest_pivot(a, k)
      _swap_rows(a, u, k, i)
      _swap_cols(a, v, k, j)
      p = a[k][k]

      clear = True
      for i in range(k + 1, n):
        q = a[i][k] // p
        if q:
          _add_row(a, u, i, k, -q)
        if a[i][k]:
          clear = False
      for j in range(k + 1, n):
        q = a[k][j] // p
        if q:
          _add_col(a, v, j, k, -q)
        if a[k][j]:
          clear = False
      _check_entries('Smith normal form entry', a, u, v)
      if not clear:
        # a nonzero remainder is smaller than p; pick it up next round
        continue

      bad = next(((i, j) for i in range(k + 1, n) for j in range(k + 1, n)
                  if a[i][j] % p), None)
      if bad is None:
        break
      _add_row(a, u, k, bad[0], 1)

    if a[k][k] < 0:
      _negate_row(a, u, k)

  logging.debug('Smith normal form diagonal: %s',
                [a[i][i] for i in range(n)])
  return NormalFormResult(IntMatrix(u), IntMatrix(a), IntMatrix(v))


def _hermite(rows, ncols):
  """Row-style Hermite normal form of an arbitrary integer matrix.

  Returns (H, U, rank) with U*A = H, U unimodular, nonzero rows of H first.
  """
  a = [list(row) for row in rows]
  m = len(a)
  u = IntMatrix.identity(m).tolist()

  r = 0
  for c in range(ncols):
    if r == m:
      break
    if not any(a[i][c] for i in range(r, m)):
      continue

    while True:
      piv = None
      for i in range(r, m):
        if a[i][c] and (piv is None or abs(a[i][c]) < abs(a[piv][c])):
          piv = i
      _swap_rows(a, u, r, piv)

      clear = True
      for i in range(r + 1, m):
        q = a[i][c] // a[r][c]
        if q:
          _add_row(a, u, i, r, -q)
        if a[i][c]:
          clear = False
      if clear:
        break

    if a[r][c] < 0:
      _negate_row(a, u, r)
    # reduce entries above the pivot into [0, pivot)
    for i in range(r):
      q = a[i][c] // a[r][c]
      if q:
        _add_row(a, u, i, r, -q)
    _check_entries('Hermite normal form entry', a, u)
    r += 1

  return a, u, r


def hermite_normal_form(G):
  """Row-style Hermite normal form of a full-row-rank integer matrix.

  Pivots are positive and entries above each pivot lie in [0, pivot), so two
  matrices generate the same lattice iff their forms are equal.

  Returns:
    NormalFormResult (U, H, V) with U*G = H and V the identity.
  """
  G = _as_matrix(G)
  h, u, rank = _hermite(G.rows, G.ncols)
  if rank < G.nrows:
    raise SingularMatrixError(
      'Hermite normal form needs full row rank (rank %d < %d rows)'
      % (rank, G.nrows))
  return NormalFormResult(IntMatrix(u), IntMatrix(h),
                          IntMatrix.identity(G.ncols))


def hermite_basis(rows, ncols):
  """Canonical basis (HNF rows) of the lattice spanned by any list of
  integer vectors of length ncols. Zero rows are dropped.
  """
  rows = [list(row) for row in rows]
  for row in rows:
    if len(row) != ncols:
      raise DimensionMismatchError(
        'vector of length %d, expected %d' % (len(row), ncols))
  h, _u, rank = _hermite(rows, ncols)
  return IntMatrix(h[:rank]) if rank else IntMatrix([])

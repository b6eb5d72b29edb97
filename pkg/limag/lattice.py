# -*- coding: utf-8 -*-
"""
Lattice codes: full-rank sublattices of Z^n given by a generator matrix whose
rows are a basis.

A lattice code L corrects t asymmetric errors of magnitude l iff translates
of S(n, t, l) by lattice points are disjoint, i.e. iff no nonzero difference
of two sphere vectors lies in L. Equivalently the projection Z^n -> Z^n/L is
injective on the sphere, so every lattice code is a B_t[l] sequence over its
quotient group and every B_t[l] sequence defines a lattice code as the
kernel of its syndrome map.
"""
import logging

from .errors import (DimensionMismatchError, InvalidParametersError,
                     SingularMatrixError, InconsistencyError)
from .groups import AbelianGroup
from .integers import (IntMatrix, abs_det, smith_normal_form,
                       hermite_normal_form, hermite_basis)
from .sequences import BhSequence, verify_bh
from .sphere import as_params, sphere_size

__all__ = ['LatticeCode',
           'lattice_from_generator',
           'volume',
           'contains',
           'same_lattice',
           'lattice_from_sequence',
           'sequence_from_lattice',
           'verify_packing',
           'verify_perfect']


class LatticeCode(object):
  """Lattice spanned by the rows of a square nonsingular integer matrix,
  optionally with the (n, t, l) it is claimed to correct.
  """
  __slots__ = ('generator', 'params', 'volume', '_hnf')

  def __init__(self, generator, params=None):
    if not isinstance(generator, IntMatrix):
      generator = IntMatrix(generator)
    if not generator.is_square or not generator.nrows:
      raise DimensionMismatchError(
        'generator must be a nonempty square matrix, got %dx%d'
        % (generator.nrows, generator.ncols))
    vol = abs_det(generator)
    if not vol:
      raise SingularMatrixError('generator rows are linearly dependent')
    if params is not None:
      params = as_params(params)
      if params.n != generator.nrows:
        raise DimensionMismatchError(
          'params %r for a lattice of dimension %d'
          % (tuple(params), generator.nrows))
    self.generator = generator
    self.params = params
    self.volume = vol
    self._hnf = None

  @property
  def n(self):
    return self.generator.nrows

  def hermite(self):
    """Canonical (HNF) generator matrix."""
    if self._hnf is None:
      self._hnf = hermite_normal_form(self.generator).D
    return self._hnf

  def canonical(self):
    return LatticeCode(self.hermite(), self.params)

  def with_params(self, params):
    return LatticeCode(self.generator, params)

  def __repr__(self):
    return 'LatticeCode(%r, params=%r)' % (self.generator.tolist(),
                                           self.params and tuple(self.params))


def lattice_from_generator(rows, params=None):
  return LatticeCode(rows, params)


def volume(L):
  """|det G|, the index of L in Z^n."""
  return L.volume


def contains(L, v):
  """Exact membership test by back-substitution against the HNF basis."""
  h = L.hermite()
  if len(v) != L.n:
    raise DimensionMismatchError(
      'vector of length %d, lattice of dimension %d' % (len(v), L.n))
  r = list(v)
  for j, row in enumerate(h):
    if r[j] % row[j]:
      return False
    c = r[j] // row[j]
    if c:
      r = [x - c * y for x, y in zip(r, row)]
  return True


def same_lattice(a, b):
  return a.n == b.n and a.hermite() == b.hermite()


def lattice_from_sequence(seq):
  """Kernel lattice { v in Z^n : v1*b1 + ... + vn*bn = 0 in G }.

  The kernel of (v, w) -> v*B - w*diag(d) over Z^(n+k) is read off a Hermite
  form of [B | I] stacked over [diag(d) | 0]: rows vanishing on the first k
  columns span it, and their last n columns are the kernel lattice.
  """
  n = seq.n
  factors = seq.group.factors
  k = len(factors)
  if not k:
    return LatticeCode(IntMatrix.identity(n), seq.params)

  rows = [list(b) + [int(i == j) for j in range(n)]
          for i, b in enumerate(seq.elements)]
  rows += [[d if i == j else 0 for j in range(k)] + [0] * n
           for i, d in enumerate(factors)]
  basis = hermite_basis(rows, k + n)
  kernel = [row[k:] for row in basis if not any(row[:k])]
  generator = hermite_basis(kernel, n)
  if generator.nrows != n:
    raise InconsistencyError(
      'kernel lattice of %r has rank %d' % (seq, generator.nrows))

  L = LatticeCode(generator, seq.params)
  logging.debug('Kernel lattice of %r: volume %d', seq, L.volume)
  return L


def sequence_from_lattice(L, t=None, ell=None):
  """The quotient Z^n/L and the images of the unit vectors in it.

  With U*G*V = diag(d1, ..., dn), x -> x*V mod d is a surjection Z^n ->
  Z_d1 x ... x Z_dn with kernel L, so b_i is row i of V reduced mod d.
  Factors equal to 1 are dropped. t and l default to L.params.
  """
  if L.params is not None:
    t = L.params.t if t is None else t
    ell = L.params.ell if ell is None else ell
  if t is None or ell is None:
    raise InvalidParametersError('t and ell are needed for a sequence')

  _u, D, V = smith_normal_form(L.generator)
  d = D.diag()
  keep = [i for i, x in enumerate(d) if x > 1]
  group = AbelianGroup([d[i] for i in keep])
  elements = [tuple(V[j, i] % d[i] for i in keep) for j in range(L.n)]
  return BhSequence(group, elements, t, ell)


def _params_for(L, p):
  p = as_params(p)
  if p.n != L.n:
    raise DimensionMismatchError(
      'params %r for a lattice of dimension %d' % (tuple(p), L.n))
  return p


def verify_packing(L, p):
  """Whether translates of S(n, t, l) by the points of L are disjoint.

  Returns:
    BhVerdict(ok, witness). A witness is a pair of sphere vectors whose
    difference is a nonzero lattice point.
  """
  p = _params_for(L, p)
  size = sphere_size(p)
  if L.volume < size:
    # no packing below the sphere volume; the search below stops early
    logging.debug('Volume %d < |S%s| = %d', L.volume, tuple(p), size)
  return verify_bh(sequence_from_lattice(L, p.t, p.ell))


def verify_perfect(L, p):
  """Whether L tiles Z^n with S(n, t, l): a packing of volume |S|."""
  p = _params_for(L, p)
  if L.volume != sphere_size(p):
    return False
  return verify_packing(L, p).ok

# -*- coding: utf-8 -*-
"""
Finite abelian groups in invariant-factor form Z_d1 x ... x Z_dk with
d1 | d2 | ... | dk, every di >= 2. The trivial group has no factors.

Group elements are plain tuples of coordinates, coordinate i in [0, di).
"""
import itertools
from math import prod

from sympy import factorint
from sympy.utilities.iterables import partitions

from .errors import DimensionMismatchError, InvalidParametersError
from .integers import check_bound

__all__ = ['AbelianGroup',
           'enumerate_abelian_groups']


class AbelianGroup(object):
  """Z_d1 x ... x Z_dk given by its invariant factors."""
  __slots__ = ('factors', 'order')

  def __init__(self, factors):
    factors = tuple(int(d) for d in factors)
    for d in factors:
      if d < 2:
        raise InvalidParametersError(
          'invariant factors must be >= 2, got %r' % (factors,))
      check_bound(d, 'invariant factor')
    for a, b in zip(factors, factors[1:]):
      if b % a:
        raise InvalidParametersError(
          'invariant factors must divide each other, got %r' % (factors,))
    self.factors = factors
    self.order = check_bound(prod(factors), 'group order')

  @classmethod
  def cyclic(cls, m):
    if m < 1:
      raise InvalidParametersError('cyclic group order must be >= 1')
    return cls([m] if m > 1 else [])

  @classmethod
  def from_orders(cls, orders):
    """Canonical form of Z_m1 x ... x Z_mr for arbitrary orders mi >= 1."""
    powers = {}
    for m in orders:
      if m < 1:
        raise InvalidParametersError('cyclic orders must be >= 1, got %d' % m)
      for p, e in factorint(m).items():
        powers.setdefault(p, []).append(p ** e)
    for p in powers:
      powers[p].sort(reverse=True)
    # the largest invariant factor takes the largest power of every prime
    k = max([len(v) for v in powers.values()] or [0])
    factors = [prod(v[i] for v in powers.values() if i < len(v))
               for i in range(k)]
    return cls(reversed(factors))

  @property
  def rank(self):
    return len(self.factors)

  @property
  def is_cyclic(self):
    return self.rank <= 1

  def identity(self):
    return (0,) * len(self.factors)

  def element(self, coords):
    """Reduces integer coordinates into the group."""
    coords = tuple(coords)
    if len(coords) != len(self.factors):
      raise DimensionMismatchError(
        'element %r has %d coordinates, group has %d'
        % (coords, len(coords), len(self.factors)))
    return tuple(x % d for x, d in zip(coords, self.factors))

  def contains(self, x):
    return (len(x) == len(self.factors) and
            all(0 <= c < d for c, d in zip(x, self.factors)))

  def add(self, x, y):
    return tuple((a + b) % d for a, b, d in zip(x, y, self.factors))

  def neg(self, x):
    return tuple(-a % d for a, d in zip(x, self.factors))

  def sub(self, x, y):
    return tuple((a - b) % d for a, b, d in zip(x, y, self.factors))

  def scale(self, k, x):
    return tuple(k * a % d for a, d in zip(x, self.factors))

  def elements(self):
    """All elements in coordinate-lexicographic order."""
    return itertools.product(*[range(d) for d in self.factors])

  def unit(self, i):
    return tuple(int(i == j) for j in range(len(self.factors)))

  def __eq__(self, other):
    if not isinstance(other, AbelianGroup):
      return NotImplemented
    return self.factors == other.factors

  def __ne__(self, other):
    result = self.__eq__(other)
    return result if result is NotImplemented else not result

  def __hash__(self):
    return hash(self.factors)

  def __repr__(self):
    return 'AbelianGroup(%r)' % (list(self.factors),)

  def __str__(self):
    if not self.factors:
      return 'trivial'
    return ' x '.join('Z%d' % d for d in self.factors)


def enumerate_abelian_groups(order):
  """Every abelian group of the given order, each once, cyclic first.

  Groups come from one partition of each prime exponent, so there are
  prod p(e) of them for order = prod p^e.
  """
  if order < 1:
    raise InvalidParametersError('group order must be >= 1, got %d' % order)
  check_bound(order, 'group order')
  primes = sorted(factorint(order).items())

  per_prime = []
  for p, e in primes:
    choices = []
    for part in partitions(e):
      # partitions() reuses its dict between iterations
      exps = sorted(itertools.chain.from_iterable(
        [k] * v for k, v in part.items()), reverse=True)
      choices.append([p ** x for x in exps])
    # coarsest partition (single power) first
    choices.sort(key=lambda c: (len(c), [-x for x in c]))
    per_prime.append(choices)

  # order 1 has no primes; product() then yields the trivial group once
  return [AbelianGroup.from_orders(itertools.chain.from_iterable(combo))
          for combo in itertools.product(*per_prime)]

# -*- coding: utf-8 -*-
"""
B_t[l](G) sequences: elements b1, ..., bn of a finite abelian group G such
that the sums a1*b1 + ... + an*bn, with every ai in [0, l] and at most t of
them nonzero, are pairwise distinct.

The map e -> a1*b1 + ... + an*bn is the syndrome map of the lattice code the
sequence defines; a sequence is B_t[l] iff that map is injective on the
error sphere S(n, t, l).
"""
import logging
from collections import namedtuple
from math import gcd

from .config import SEARCH_NODE_CAP
from .errors import (DimensionMismatchError, InvalidParametersError,
                     InconsistencyError, SearchCapExceededError)
from .groups import AbelianGroup
from .integers import (check_bound, check_power, mod_inverse, has_order,
                       abs_det, hermite_basis)
from .sphere import CodeParams, sphere_size

__all__ = ['BhSequence',
           'BhVerdict',
           'LProperties',
           'weighted_sum',
           'syndromes',
           'verify_bh',
           'is_perfect_sequence',
           'generates_group',
           'construct_perfect_sequence',
           'check_l_properties',
           'construct_trivial_full_cube',
           'construct_repetition_sequence',
           'search_bh']


BhVerdict = namedtuple('BhVerdict', 'ok witness')
LProperties = namedtuple('LProperties', 'p1 p2 p3 modulus x')


class BhSequence(object):
  """A group, n of its elements and the (t, l) the sequence is meant for.

  Elements of a cyclic group may be given as plain integers.
  """
  __slots__ = ('group', 'elements', 'params')

  def __init__(self, group, elements, t, ell):
    coerced = []
    for b in elements:
      if isinstance(b, int):
        b = (b,)
      b = tuple(int(c) for c in b)
      if not group.contains(b):
        raise InvalidParametersError('%r is not an element of %s' % (b, group))
      coerced.append(b)
    if not coerced:
      raise InvalidParametersError('a sequence needs at least one element')
    self.group = group
    self.elements = tuple(coerced)
    self.params = CodeParams(len(coerced), t, ell)

  @property
  def n(self):
    return self.params.n

  @property
  def t(self):
    return self.params.t

  @property
  def ell(self):
    return self.params.ell

  def with_params(self, t, ell):
    """Same elements, claimed for another (t, l)."""
    return BhSequence(self.group, self.elements, t, ell)

  def __eq__(self, other):
    if not isinstance(other, BhSequence):
      return NotImplemented
    return (self.group == other.group and self.elements == other.elements
            and self.params == other.params)

  def __ne__(self, other):
    result = self.__eq__(other)
    return result if result is NotImplemented else not result

  def __hash__(self):
    return hash((self.group, self.elements, self.params))

  def __repr__(self):
    return 'BhSequence(%r, %r, t=%d, ell=%d)' % (
      self.group, list(self.elements), self.t, self.ell)


def weighted_sum(seq, e):
  """e1*b1 + ... + en*bn in G (the syndrome of e)."""
  if len(e) != seq.n:
    raise DimensionMismatchError(
      'vector of length %d, sequence of length %d' % (len(e), seq.n))
  return tuple(sum(a * b[i] for a, b in zip(e, seq.elements)) % d
               for i, d in enumerate(seq.group.factors))


def syndromes(seq):
  """Yields (e, weighted_sum(seq, e)) for e in S(n, t, l), lexicographically.

  Sums are carried along the enumeration instead of being recomputed.
  """
  group = seq.group
  n, t, ell = seq.params
  sphere_size(seq.params)
  multiples = [[group.scale(a, b) for a in range(ell + 1)]
               for b in seq.elements]
  add = group.add
  prefix = []

  def walk(j, budget, s):
    if j == n:
      yield tuple(prefix), s
      return
    prefix.append(0)
    yield from walk(j + 1, budget, s)
    if budget:
      for a in range(1, ell + 1):
        prefix[-1] = a
        yield from walk(j + 1, budget - 1, add(s, multiples[j][a]))
    prefix.pop()

  return walk(0, t, group.identity())


def verify_bh(seq):
  """Checks that the syndrome map is injective on S(n, t, l).

  Returns:
    BhVerdict(ok, witness). On failure witness is (e, e_prev): e is the
    first sphere vector, in lexicographic order, whose weighted sum was
    already produced by the earlier vector e_prev.
  """
  size = sphere_size(seq.params)
  if size > seq.group.order:
    logging.debug('|S%s| = %d > |G| = %d, a collision is certain',
                  tuple(seq.params), size, seq.group.order)

  seen = {}
  for e, s in syndromes(seq):
    prev = seen.setdefault(s, e)
    if prev is not e:
      logging.debug('Collision at syndrome %s: %s vs %s', s, e, prev)
      return BhVerdict(False, (e, prev))
  return BhVerdict(True, None)


def is_perfect_sequence(seq):
  """B_t[l] and |G| = |S(n, t, l)|, i.e. the lattice code tiles Z^n."""
  return (seq.group.order == sphere_size(seq.params) and
          verify_bh(seq).ok)


def generates_group(seq):
  """True iff b1, ..., bn generate G."""
  factors = seq.group.factors
  k = len(factors)
  if not k:
    return True
  rows = [list(b) for b in seq.elements]
  rows += [[d if i == j else 0 for j in range(k)]
           for i, d in enumerate(factors)]
  basis = hermite_basis(rows, k)
  return abs_det(basis) == 1


def _perfect_modulus(n, ell):
  if n < 2 or ell < 1:
    raise InvalidParametersError('need n >= 2 and ell >= 1, got n=%d, ell=%d'
                                 % (n, ell))
  what = 'modulus (l+1)^n - l^n for n=%d, l=%d' % (n, ell)
  return check_bound(check_power(ell + 1, n, what) - ell ** n, what)


def construct_perfect_sequence(n, ell):
  """{1, x, ..., x^(n-1)} in Z_m, m = (l+1)^n - l^n, x = (l+1)/l mod m.

  The result is a B_(n-1)[l](Z_m) sequence with m = |S(n, n-1, l)|, so its
  lattice code is perfect.
  """
  m = _perfect_modulus(n, ell)
  inv = mod_inverse(ell % m, m)
  if inv is None:
    # l and m are always coprime
    logging.error('%d has no inverse modulo %d', ell, m)
    raise InconsistencyError('%d is not a unit modulo %d' % (ell, m))
  x = (ell + 1) * inv % m
  logging.debug('Perfect sequence n=%d, l=%d: m=%d, x=%d', n, ell, m, x)
  return BhSequence(AbelianGroup([m]), [pow(x, i, m) for i in range(n)],
                    n - 1, ell)


def check_l_properties(n, ell):
  """Evaluates the three facts behind construct_perfect_sequence.

  p1: l is a unit modulo m; p2: x = (l+1)/l has multiplicative order n;
  p3: 1 + x + ... + x^(n-1) = 0 modulo m.
  """
  m = _perfect_modulus(n, ell)
  p1 = gcd(ell, m) == 1
  if not p1:
    return LProperties(False, False, False, m, None)
  x = (ell + 1) * mod_inverse(ell % m, m) % m
  p2 = has_order(x, n, m)
  p3 = sum(pow(x, i, m) for i in range(n)) % m == 0
  return LProperties(p1, p2, p3, m, x)


def construct_trivial_full_cube(n, ell):
  """Unit elements of (Z_(l+1))^n: a perfect B_n[l] sequence."""
  if n < 1 or ell < 1:
    raise InvalidParametersError('need n >= 1 and ell >= 1, got n=%d, ell=%d'
                                 % (n, ell))
  what = 'group order (l+1)^n for n=%d, l=%d' % (n, ell)
  check_power(ell + 1, n, what)
  group = AbelianGroup([ell + 1] * n)
  return BhSequence(group, [group.unit(i) for i in range(n)], n, ell)


def construct_repetition_sequence(n):
  """The binary repetition code of odd length n as a sequence.

  Group (Z_2)^(n-1), b_i the unit elements for i < n and b_n = (1, ..., 1).
  This is a perfect B_((n-1)/2)[1] sequence: |S(n, (n-1)/2, 1)| = 2^(n-1).
  """
  if n < 3 or n % 2 == 0:
    raise InvalidParametersError('repetition code needs odd n >= 3, got %d'
                                 % n)
  check_bound(1 << (n - 1), 'group order 2^(n-1) for n=%d' % n)
  group = AbelianGroup([2] * (n - 1))
  elements = [group.unit(i) for i in range(n - 1)] + [(1,) * (n - 1)]
  return BhSequence(group, elements, (n - 1) // 2, 1)


def _grow(group, layers, seen, b, t, ell):
  """Adds b to a partial sequence whose sums, by exact weight, are layers.

  Returns the new (layers, seen) or None if a collision appears.
  """
  multiples = [group.scale(a, b) for a in range(1, ell + 1)]
  add = group.add
  seen = set(seen)
  top = min(t, len(layers))
  fresh = [set() for _ in range(top + 1)]
  for w in range(1, top + 1):
    for s in layers[w - 1]:
      for m in multiples:
        z = add(s, m)
        if z in seen:
          return None
        seen.add(z)
        fresh[w].add(z)

  grown = [layers[w] | fresh[w] if w < len(layers) else fresh[w]
           for w in range(top + 1)]
  return grown, seen


def search_bh(group, n, t, ell, cap=SEARCH_NODE_CAP):
  """Exhaustive backtracking search for a B_t[l](G) sequence of length n.

  Candidates are the nonzero elements of G in coordinate-lexicographic order
  (zero always collides with the empty sum) and are taken in strictly
  increasing order (a repeated element always collides). The first complete
  sequence found is the lexicographically first one.

  Returns:
    BhSequence or None if no such sequence exists.

  Raises:
    SearchCapExceededError after more than cap extension attempts.
  """
  p = CodeParams(n, t, ell).require_correcting()
  size = sphere_size(p)
  if size > group.order:
    logging.debug('No search: |S%s| = %d > |G| = %d',
                  tuple(p), size, group.order)
    return None

  candidates = [x for x in group.elements() if any(x)]
  zero = group.identity()
  nodes = [0]

  def extend(chosen, layers, seen, start):
    if len(chosen) == n:
      return chosen
    for idx in range(start, len(candidates) - (n - len(chosen)) + 1):
      nodes[0] += 1
      if nodes[0] > cap:
        raise SearchCapExceededError(
          'search over %s for %s visited more than %d nodes'
          % (group, tuple(p), cap))
      b = candidates[idx]
      grown = _grow(group, layers, seen, b, t, ell)
      if grown is None:
        continue
      found = extend(chosen + [b], grown[0], grown[1], idx + 1)
      if found:
        return found
    return None

  found = extend([], [set([zero])], set([zero]), 0)
  logging.debug('Search over %s for %s: %s after %d nodes',
                group, tuple(p), found, nodes[0])
  if found is None:
    return None
  return BhSequence(group, found, t, ell)

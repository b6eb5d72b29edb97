# -*- coding: utf-8 -*-
"""
Encoding side and decoding side of a lattice code over a finite alphabet.

A codebook is C = (X + L) intersected with {0, ..., sigma-1}^n: the words
whose syndrome equals the syndrome of the offset X. Decoding subtracts the
codeword-coset syndrome from the received word's syndrome and looks the
difference up in a table indexed by the syndromes of the error sphere.

Channel errors only raise levels and are clipped by the alphabet: an error e
is admissible for a codeword x when x + e stays below sigma everywhere.
"""
import itertools
import logging
from collections import namedtuple

import numpy as np

from .config import CODEBOOK_SCAN_CAP
from .errors import (DimensionMismatchError, InvalidParametersError,
                     NotBhSequenceError, EnumerationCapExceededError)
from .sequences import syndromes, weighted_sum
from .sphere import enumerate_sphere

__all__ = ['SyndromeTable',
           'Codebook',
           'Decoded',
           'ChannelReport',
           'RNG_ALGORITHM',
           'build_syndrome_table',
           'extract_codebook',
           'decode',
           'simulate_channel']


Decoded = namedtuple('Decoded', 'ok codeword error')
UNCORRECTABLE = Decoded(False, None, None)

ChannelReport = namedtuple('ChannelReport', [
  'trials', 'decode_successes', 'failures', 'uncorrectable', 'miscorrected',
  'seed', 'rng'])

RNG_ALGORITHM = 'numpy.PCG64'


class SyndromeTable(object):
  """Maps the syndrome of every sphere vector back to the vector."""
  __slots__ = ('seq', 'table')

  def __init__(self, seq, table):
    self.seq = seq
    self.table = table

  def lookup(self, syndrome):
    return self.table.get(tuple(syndrome))

  @property
  def is_perfect(self):
    """Every group element is the syndrome of some error."""
    return len(self.table) == self.seq.group.order

  def __len__(self):
    return len(self.table)

  def __repr__(self):
    return 'SyndromeTable(%r, %d entries)' % (self.seq, len(self.table))


class Codebook(object):
  """Words of (X + L) within {0, ..., sigma-1}^n."""
  __slots__ = ('sigma', 'offset', 'words', 'seq', 'syndrome')

  def __init__(self, sigma, offset, words, seq):
    self.sigma = sigma
    self.offset = tuple(offset)
    self.words = tuple(words)
    self.seq = seq
    self.syndrome = weighted_sum(seq, self.offset)

  def __len__(self):
    return len(self.words)

  def __contains__(self, word):
    return tuple(word) in self.words

  def __repr__(self):
    return 'Codebook(sigma=%d, offset=%r, %d words)' % (
      self.sigma, self.offset, len(self.words))


def build_syndrome_table(seq):
  """Decoding table of a B_t[l] sequence.

  Raises:
    NotBhSequenceError carrying the collision witness if two sphere vectors
    share a syndrome.
  """
  table = {}
  for e, s in syndromes(seq):
    prev = table.setdefault(s, e)
    if prev is not e:
      raise NotBhSequenceError((e, prev))
  logging.debug('Syndrome table for %r: %d of %d group elements',
                seq, len(table), seq.group.order)
  return SyndromeTable(seq, table)


def _check_word(word, n, sigma, what):
  word = tuple(int(x) for x in word)
  if len(word) != n:
    raise DimensionMismatchError(
      '%s of length %d, expected %d' % (what, len(word), n))
  if any(x < 0 or (sigma is not None and x >= sigma) for x in word):
    raise InvalidParametersError(
      '%s %r has entries outside [0, %s)' % (what, word, sigma))
  return word


def extract_codebook(seq, offset, sigma, cap=CODEBOOK_SCAN_CAP):
  """Scans {0, ..., sigma-1}^n for the words of X + L.

  Raises:
    EnumerationCapExceededError if sigma^n is larger than cap.
  """
  if sigma < 1:
    raise InvalidParametersError('alphabet size must be >= 1, got %d' % sigma)
  n = seq.n
  offset = _check_word(offset, n, sigma, 'offset')
  if (sigma.bit_length() - 1) * n > cap.bit_length() or sigma ** n > cap:
    raise EnumerationCapExceededError(
      'scanning %d^%d words exceeds the cap of %d' % (sigma, n, cap))

  target = weighted_sum(seq, offset)
  words = [w for w in itertools.product(range(sigma), repeat=n)
           if weighted_sum(seq, w) == target]
  logging.debug('Codebook sigma=%d offset=%r: %d of %d words',
                sigma, offset, len(words), sigma ** n)
  return Codebook(sigma, offset, words, seq)


def decode(y, table, s0, sigma=None):
  """Corrects up to t asymmetric errors of magnitude l in y.

  Args:
    y: received word.
    table: SyndromeTable of the code's sequence.
    s0: syndrome shared by all codewords (Codebook.syndrome); a plain
      integer is accepted for cyclic groups.
    sigma: alphabet size, only used to reject malformed y.

  Returns:
    Decoded(True, codeword, error), or Decoded(False, None, None) when the
    syndrome is not in the table or the correction leaves the alphabet.
  """
  seq = table.seq
  group = seq.group
  y = _check_word(y, seq.n, sigma, 'received word')
  if isinstance(s0, int):
    s0 = (s0,)
  s = group.sub(weighted_sum(seq, y), group.element(s0))

  e = table.lookup(s)
  if e is None:
    return UNCORRECTABLE
  x = tuple(a - b for a, b in zip(y, e))
  if any(c < 0 for c in x):
    return UNCORRECTABLE
  return Decoded(True, x, e)


def simulate_channel(book, table, trials, seed):
  """Sends uniform codewords through uniform admissible errors and decodes.

  Deterministic for a given seed: draws come from numpy's PCG64 generator.
  """
  if trials < 0:
    raise InvalidParametersError('trials must be >= 0, got %d' % trials)
  if not 0 <= seed < 2 ** 64:
    raise InvalidParametersError('seed must be a 64-bit value, got %d' % seed)
  if not book.words:
    raise InvalidParametersError('empty codebook')
  if (book.seq.group != table.seq.group or
      book.seq.elements != table.seq.elements):
    raise InvalidParametersError('codebook and syndrome table disagree')

  rng = np.random.Generator(np.random.PCG64(seed))
  sphere = list(enumerate_sphere(table.seq.params))
  admissible = {}
  successes = uncorrectable = miscorrected = 0

  for _ in range(trials):
    x = book.words[int(rng.integers(len(book.words)))]
    errors = admissible.get(x)
    if errors is None:
      errors = [e for e in sphere
                if all(a + b < book.sigma for a, b in zip(x, e))]
      admissible[x] = errors
    e = errors[int(rng.integers(len(errors)))]
    y = tuple(a + b for a, b in zip(x, e))

    result = decode(y, table, book.syndrome, book.sigma)
    if not result.ok:
      uncorrectable += 1
    elif result.codeword != x:
      miscorrected += 1
    else:
      successes += 1

  failures = uncorrectable + miscorrected
  if failures:
    logging.info('Channel simulation: %d of %d trials failed', failures,
                 trials)
  return ChannelReport(trials, successes, failures, uncorrectable,
                       miscorrected, seed, RNG_ALGORITHM)

# -*- coding: utf-8 -*-
"""
Which perfect lattice codes exist: a divisibility condition for t = n-2, the
resulting nonexistence sweep for l = 1 and a survey over small (n, t, l).

A perfect lattice code for (n, t, l) is the same thing as a B_t[l] sequence
of length n in an abelian group of order |S(n, t, l)|, so every search below
runs over all abelian groups of exactly that order.
"""
import logging
from collections import namedtuple

from .config import SEARCH_NODE_CAP, SURVEY_GROUP_CAP
from .errors import (InvalidParametersError, InconsistencyError,
                     SearchCapExceededError)
from .groups import enumerate_abelian_groups
from .integers import check_bound, check_power
from .sequences import (construct_perfect_sequence,
                        construct_trivial_full_cube,
                        construct_repetition_sequence, is_perfect_sequence,
                        search_bh)
from .sphere import CodeParams, sphere_size

__all__ = ['PERFECT_CONSTRUCTED',
           'PERFECT_FOUND_BY_SEARCH',
           'NECESSARY_CONDITION_FAILS',
           'UNKNOWN_WITHIN_BOUNDS',
           'STATUSES',
           'ExistenceVerdict',
           'NecessaryCondition',
           'necessary_condition_n_minus_2',
           'nonexistence_n_minus_2_ell1',
           'survey']


PERFECT_CONSTRUCTED = 'perfect-constructed'
PERFECT_FOUND_BY_SEARCH = 'perfect-found-by-search'
NECESSARY_CONDITION_FAILS = 'necessary-condition-fails'
UNKNOWN_WITHIN_BOUNDS = 'unknown-within-bounds'

STATUSES = (PERFECT_CONSTRUCTED, PERFECT_FOUND_BY_SEARCH,
            NECESSARY_CONDITION_FAILS, UNKNOWN_WITHIN_BOUNDS)

# notes on unknown-within-bounds cells
SEARCH_EXHAUSTED = 'search-exhausted'
SEARCH_CAP = 'search-cap'
GROUP_CAP = 'group-cap'


ExistenceVerdict = namedtuple('ExistenceVerdict', 'params status witness note')
ExistenceVerdict.__doc__ = """One survey cell.

witness is a BhSequence for perfect-* cells, the tuple of alpha values tried
for necessary-condition-fails cells and None otherwise. note is free text:
why a cell is unknown, or which alphas gave a nonpositive factor.
"""

NecessaryCondition = namedtuple('NecessaryCondition',
                                'holds witnesses tried nonpositive')


def necessary_condition_n_minus_2(n, ell):
  """Divisibility test a perfect lattice code in A(n, n-2, l) must pass.

  Such a code exists only if |S(n, n-2, l)| divides
  (l+1)^(n-2) * (l+1 + alpha*(n-2-l)) for some alpha in [0, l]. Factors that
  are zero or negative (possible when l > n-2) never count as divisible.

  Returns:
    NecessaryCondition(holds, witnesses, tried, nonpositive): the alphas that
    divide, every alpha tried and those with a nonpositive factor.
  """
  if n < 3 or ell < 1:
    raise InvalidParametersError('need n >= 3 and ell >= 1, got n=%d, ell=%d'
                                 % (n, ell))
  size = sphere_size(CodeParams(n, n - 2, ell))
  base = check_power(ell + 1, n - 2, '(l+1)^(n-2) for n=%d, l=%d' % (n, ell))

  witnesses = []
  nonpositive = []
  for alpha in range(ell + 1):
    factor = ell + 1 + alpha * (n - 2 - ell)
    if factor <= 0:
      nonpositive.append(alpha)
      continue
    value = check_bound(base * factor, 'divisibility candidate')
    if value % size == 0:
      witnesses.append(alpha)

  return NecessaryCondition(bool(witnesses), tuple(witnesses),
                            tuple(range(ell + 1)), tuple(nonpositive))


def _nonpositive_note(cond):
  if not cond.nonpositive:
    return None
  return 'nonpositive factor for alpha %s' % ' '.join(
    str(a) for a in cond.nonpositive)


def nonexistence_n_minus_2_ell1(n_max):
  """Runs the t = n-2, l = 1 condition for 4 <= n <= n_max.

  Every such n must fail it; a pass means the arithmetic is broken.

  Raises:
    InconsistencyError if the condition holds for some n.
  """
  verdicts = []
  for n in range(4, n_max + 1):
    cond = necessary_condition_n_minus_2(n, 1)
    if cond.holds:
      logging.error('Necessary condition holds for n=%d, l=1 (alphas %s)',
                    n, cond.witnesses)
      raise InconsistencyError(
        'no perfect lattice code in A(%d, %d, 1) exists, yet the necessary '
        'condition holds' % (n, n - 2))
    verdicts.append(ExistenceVerdict(CodeParams(n, n - 2, 1),
                                     NECESSARY_CONDITION_FAILS, cond.tried,
                                     None))
  logging.debug('Nonexistence sweep: %d lengths checked', len(verdicts))
  return verdicts


def _search_all(p, group_cap, search_cap):
  """Searches every abelian group of order |S| for a perfect sequence.

  Returns:
    (sequence, note): the first hit and None, or None and the reason the
    cell stays unknown.
  """
  size = sphere_size(p)
  if size > group_cap:
    logging.debug('Cell %s: |S| = %d above the group cap %d',
                  tuple(p), size, group_cap)
    return None, GROUP_CAP

  capped = False
  for group in enumerate_abelian_groups(size):
    try:
      found = search_bh(group, p.n, p.t, p.ell, cap=search_cap)
    except SearchCapExceededError as e:
      logging.debug('Cell %s: %s', tuple(p), e)
      capped = True
      continue
    if found is not None:
      return found, None
  return None, SEARCH_CAP if capped else SEARCH_EXHAUSTED


def _certify(p, seq, status, group_cap=None):
  """Re-verifies a perfect witness unless |G| is above group_cap."""
  if group_cap is not None and seq.group.order > group_cap:
    logging.debug('Cell %s: |G| = %d above the group cap %d, not re-verified',
                  tuple(p), seq.group.order, group_cap)
    return ExistenceVerdict(p, status, seq, None)
  if not is_perfect_sequence(seq):
    logging.error('Witness %r for %s is not perfect', seq, tuple(p))
    raise InconsistencyError('%s witness for %r fails verification'
                             % (status, tuple(p)))
  return ExistenceVerdict(p, status, seq, None)


def _survey_cell(p, group_cap, search_cap, check_contradictions):
  n, t, ell = p
  # constructions are re-verified only within the cap, or always when checking
  cap = None if check_contradictions else group_cap
  if t == n:
    return _certify(p, construct_trivial_full_cube(n, ell),
                    PERFECT_CONSTRUCTED, cap)
  if t == n - 1:
    return _certify(p, construct_perfect_sequence(n, ell), PERFECT_CONSTRUCTED,
                    cap)

  if t == n - 2:
    cond = necessary_condition_n_minus_2(n, ell)
    note = _nonpositive_note(cond)
    if not cond.holds:
      if check_contradictions:
        found, _reason = _search_all(p, group_cap, search_cap)
        if found is not None:
          logging.error('Search found %r where the necessary condition fails',
                        found)
          raise InconsistencyError(
            'perfect sequence found for %r despite the necessary condition'
            % (tuple(p),))
      return ExistenceVerdict(p, NECESSARY_CONDITION_FAILS, cond.tried, note)
  elif ell == 1 and n % 2 and t == (n - 1) // 2:
    return _certify(p, construct_repetition_sequence(n), PERFECT_CONSTRUCTED,
                    cap)

  found, reason = _search_all(p, group_cap, search_cap)
  if found is not None:
    return _certify(p, found, PERFECT_FOUND_BY_SEARCH)
  return ExistenceVerdict(p, UNKNOWN_WITHIN_BOUNDS, None, reason)


def survey(n_max, ell_max, group_cap=SURVEY_GROUP_CAP,
           search_cap=SEARCH_NODE_CAP, check_contradictions=False):
  """Existence verdicts for every 1 <= t <= n <= n_max and 1 <= l <= ell_max.

  Args:
    n_max, ell_max: the grid bounds.
    group_cap: largest group order searched or re-verified; bigger search
      cells stay unknown, bigger constructed cells are reported unchecked.
    search_cap: node cap for each search_bh call.
    check_contradictions: also search cells that fail the necessary
      condition, raising InconsistencyError on a hit, and re-verify every
      constructed witness whatever its size.

  Returns:
    list of ExistenceVerdict ordered by (n, t, l).
  """
  if n_max < 1 or ell_max < 1:
    raise InvalidParametersError('survey bounds must be >= 1, got %d, %d'
                                 % (n_max, ell_max))
  verdicts = []
  for n in range(1, n_max + 1):
    for t in range(1, n + 1):
      for ell in range(1, ell_max + 1):
        verdict = _survey_cell(CodeParams(n, t, ell), group_cap, search_cap,
                               check_contradictions)
        logging.debug('Cell %s: %s', tuple(verdict.params), verdict.status)
        verdicts.append(verdict)
  logging.info('Survey n <= %d, l <= %d: %d cells', n_max, ell_max,
               len(verdicts))
  return verdicts

# -*- coding: utf-8 -*-
import unittest
from unittest import mock

from tests import TestMixin

from limag.analysis import (NECESSARY_CONDITION_FAILS, PERFECT_CONSTRUCTED,
                            PERFECT_FOUND_BY_SEARCH, UNKNOWN_WITHIN_BOUNDS,
                            necessary_condition_n_minus_2,
                            nonexistence_n_minus_2_ell1, survey)
from limag.errors import InvalidParametersError, ParameterOverflowError
from limag.groups import AbelianGroup
from limag.lattice import lattice_from_sequence, verify_perfect
from limag.sequences import BhSequence, is_perfect_sequence


class NecessaryConditionTestCase(TestMixin, unittest.TestCase):

  def test_examples(self):
    cond = necessary_condition_n_minus_2(3, 1)
    self.assertTrue(cond.holds)
    self.assertIn(0, cond.witnesses)
    self.assertEqual(cond.tried, (0, 1))

    cond = necessary_condition_n_minus_2(4, 1)
    self.assertFalse(cond.holds)
    self.assertEqual(cond.witnesses, ())
    self.assertEqual(cond.tried, (0, 1))

    self.assertFalse(necessary_condition_n_minus_2(5, 1).holds)

  def test_fails_for_every_longer_binary_length(self):
    for n in range(4, 65):
      self.assertFalse(necessary_condition_n_minus_2(n, 1).holds, n)

  def test_nonpositive_factor(self):
    # n=3, l=3: the factor 4 - 2*alpha is 0 at alpha=2 and -2 at alpha=3
    cond = necessary_condition_n_minus_2(3, 3)
    self.assertEqual(cond.tried, (0, 1, 2, 3))
    self.assertEqual(cond.nonpositive, (2, 3))
    self.assertFalse(cond.holds)

  def test_rejects(self):
    self.assertRaises(InvalidParametersError, necessary_condition_n_minus_2,
                      2, 1)
    self.assertRaises(InvalidParametersError, necessary_condition_n_minus_2,
                      4, 0)
    self.assertRaises(ParameterOverflowError, necessary_condition_n_minus_2,
                      200, 1)


class NonexistenceTestCase(TestMixin, unittest.TestCase):

  def test_sweep(self):
    verdicts = nonexistence_n_minus_2_ell1(10)
    self.assertEqual([v.params.n for v in verdicts], list(range(4, 11)))
    for v in verdicts:
      self.assertEqual(v.status, NECESSARY_CONDITION_FAILS)
      self.assertEqual(v.params, (v.params.n, v.params.n - 2, 1))
      self.assertEqual(v.witness, (0, 1))

  def test_empty_range(self):
    self.assertEqual(nonexistence_n_minus_2_ell1(3), [])

  def test_wide_integers(self):
    self.assertEqual(len(nonexistence_n_minus_2_ell1(64)), 61)


class SurveyTestCase(TestMixin, unittest.TestCase):

  def setUp(self):
    super(SurveyTestCase, self).setUp()
    self.cells = dict((tuple(v.params), v) for v in survey(4, 1))

  def test_order_and_coverage(self):
    verdicts = survey(4, 2)
    keys = [tuple(v.params) for v in verdicts]
    self.assertEqual(keys, sorted(keys))
    self.assertEqual(len(keys), 2 * (1 + 2 + 3 + 4))

  def test_cells(self):
    v = self.cells[(3, 2, 1)]
    self.assertEqual(v.status, PERFECT_CONSTRUCTED)
    self.assertEqual(v.witness,
                     BhSequence(AbelianGroup([7]), [1, 2, 4], 2, 1))

    self.assertEqual(self.cells[(4, 2, 1)].status, NECESSARY_CONDITION_FAILS)

    v = self.cells[(3, 1, 1)]
    self.assertEqual(v.status, PERFECT_FOUND_BY_SEARCH)
    self.assertEqual(v.witness,
                     BhSequence(AbelianGroup([4]), [1, 2, 3], 1, 1))

    self.assertEqual(self.cells[(4, 4, 1)].status, PERFECT_CONSTRUCTED)
    self.assertEqual(self.cells[(4, 1, 1)].status, PERFECT_FOUND_BY_SEARCH)

  def test_perfect_witnesses_check_out(self):
    for v in survey(4, 2):
      if v.status in (PERFECT_CONSTRUCTED, PERFECT_FOUND_BY_SEARCH):
        self.assertTrue(is_perfect_sequence(v.witness), v)
        L = lattice_from_sequence(v.witness)
        self.assertTrue(verify_perfect(L, v.params), v)

  def test_repetition_cell(self):
    cells = dict((tuple(v.params), v) for v in survey(5, 1, group_cap=1))
    v = cells[(5, 2, 1)]
    self.assertEqual(v.status, PERFECT_CONSTRUCTED)
    self.assertEqual(v.witness.group, AbelianGroup([2, 2, 2, 2]))

  def test_caps_give_unknown(self):
    cells = dict((tuple(v.params), v) for v in survey(4, 1, group_cap=4))
    v = cells[(4, 1, 1)]
    self.assertEqual(v.status, UNKNOWN_WITHIN_BOUNDS)
    self.assertEqual(v.note, 'group-cap')

    cells = dict((tuple(v.params), v) for v in survey(4, 1, search_cap=1))
    v = cells[(4, 1, 1)]
    self.assertEqual(v.status, UNKNOWN_WITHIN_BOUNDS)
    self.assertEqual(v.note, 'search-cap')

  def test_exhausted_search(self):
    # |S(4, 1, 3)| = 13 and no B_1[3] sequence of length 4 exists in Z_13
    cells = dict((tuple(v.params), v) for v in survey(4, 3))
    self.assertEqual(cells[(3, 1, 2)].status, NECESSARY_CONDITION_FAILS)
    v = cells[(4, 1, 3)]
    self.assertEqual(v.status, UNKNOWN_WITHIN_BOUNDS)
    self.assertEqual(v.note, 'search-exhausted')
    self.assertIsNone(v.witness)

  def test_group_cap_bounds_reverification(self):
    with mock.patch('limag.analysis.is_perfect_sequence') as check:
      verdicts = survey(10, 4, group_cap=1)
    check.assert_not_called()
    cells = dict((tuple(v.params), v) for v in verdicts)
    for key in ((10, 9, 4), (10, 10, 4), (9, 4, 1)):
      self.assertEqual(cells[key].status, PERFECT_CONSTRUCTED)
    self.assertEqual(cells[(10, 9, 4)].witness.group.order,
                     5 ** 10 - 4 ** 10)

    with mock.patch('limag.analysis.is_perfect_sequence',
                    wraps=is_perfect_sequence) as check:
      survey(3, 1, group_cap=4)
    # (1,1,1) (2,1,1) (2,2,1) and the search hit (3,1,1); |G| is 7 and 8 for
    # (3,2,1) and (3,3,1)
    self.assertEqual(check.call_count, 4)

  def test_deterministic(self):
    self.assertEqual(survey(4, 2), survey(4, 2))

  def test_contradiction_check_finds_nothing(self):
    checked = survey(5, 1, check_contradictions=True)
    self.assertEqual(checked, survey(5, 1))

  def test_rejects(self):
    self.assertRaises(InvalidParametersError, survey, 0, 1)


if __name__ == '__main__':
  unittest.main()

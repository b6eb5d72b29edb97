# -*- coding: utf-8 -*-
import unittest
from math import prod

from tests import TestMixin

from limag.errors import DimensionMismatchError, InvalidParametersError
from limag.groups import AbelianGroup, enumerate_abelian_groups


class AbelianGroupTestCase(TestMixin, unittest.TestCase):

  def test_invariant_factors(self):
    g = AbelianGroup([2, 4])
    self.assertEqual(g.order, 8)
    self.assertEqual(g.rank, 2)
    self.assertFalse(g.is_cyclic)
    self.assertEqual(str(g), 'Z2 x Z4')
    self.assertEqual(str(AbelianGroup([])), 'trivial')
    self.assertEqual(AbelianGroup([]).order, 1)

  def test_bad_factors(self):
    self.assertRaises(InvalidParametersError, AbelianGroup, [1, 4])
    self.assertRaises(InvalidParametersError, AbelianGroup, [2, 3])
    self.assertRaises(InvalidParametersError, AbelianGroup.cyclic, 0)

  def test_cyclic(self):
    self.assertEqual(AbelianGroup.cyclic(7), AbelianGroup([7]))
    self.assertEqual(AbelianGroup.cyclic(1), AbelianGroup([]))
    self.assertTrue(AbelianGroup.cyclic(7).is_cyclic)

  def test_from_orders(self):
    self.assertEqual(AbelianGroup.from_orders([2, 3]), AbelianGroup([6]))
    self.assertEqual(AbelianGroup.from_orders([4, 2]), AbelianGroup([2, 4]))
    self.assertEqual(AbelianGroup.from_orders([6, 4]), AbelianGroup([2, 12]))
    self.assertEqual(AbelianGroup.from_orders([1]), AbelianGroup([]))
    self.assertEqual(AbelianGroup.from_orders([3, 3, 9]),
                     AbelianGroup([3, 3, 9]))

  def test_arithmetic(self):
    g = AbelianGroup([2, 4])
    self.assertEqual(g.add((1, 3), (1, 2)), (0, 1))
    self.assertEqual(g.neg((1, 3)), (1, 1))
    self.assertEqual(g.sub((0, 0), (1, 3)), (1, 1))
    self.assertEqual(g.scale(3, (1, 3)), (1, 1))
    self.assertEqual(g.element((-1, 9)), (1, 1))
    self.assertEqual(g.identity(), (0, 0))
    self.assertEqual(g.unit(1), (0, 1))
    self.assertTrue(g.contains((1, 3)))
    self.assertFalse(g.contains((2, 0)))
    self.assertFalse(g.contains((1,)))
    self.assertRaises(DimensionMismatchError, g.element, (1,))

  def test_elements_in_order(self):
    elements = list(AbelianGroup([2, 4]).elements())
    self.assertEqual(len(elements), 8)
    self.assertEqual(elements[:3], [(0, 0), (0, 1), (0, 2)])
    self.assertEqual(elements, sorted(elements))
    self.assertEqual(list(AbelianGroup([]).elements()), [()])


class EnumerateGroupsTestCase(TestMixin, unittest.TestCase):

  def test_counts(self):
    # number of abelian groups of order n
    counts = {1: 1, 2: 1, 4: 2, 8: 3, 12: 2, 16: 5, 36: 4, 72: 6, 64: 11}
    for order, count in counts.items():
      with self.subTest(order=order):
        groups = enumerate_abelian_groups(order)
        self.assertEqual(len(groups), count)
        self.assertEqual(len(set(groups)), count)
        for g in groups:
          self.assertEqual(g.order, order)
          self.assertEqual(prod(g.factors), order)

  def test_cyclic_first(self):
    self.assertEqual(enumerate_abelian_groups(8),
                     [AbelianGroup([8]), AbelianGroup([2, 4]),
                      AbelianGroup([2, 2, 2])])
    self.assertEqual(enumerate_abelian_groups(12)[0], AbelianGroup([12]))
    self.assertEqual(enumerate_abelian_groups(1), [AbelianGroup([])])

  def test_invalid_order(self):
    self.assertRaises(InvalidParametersError, enumerate_abelian_groups, 0)


if __name__ == '__main__':
  unittest.main()

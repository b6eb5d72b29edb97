"""
limag testing
"""
import os
import sys
import logging

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from limag.config import MAX_BITS_ENV


class TestMixin(object):
  def setUp(self):
    super(TestMixin, self).setUp()
    self._logger = logging.getLogger()
    self._old_log_level = self._logger.getEffectiveLevel()
    self._old_max_bits = os.environ.pop(MAX_BITS_ENV, None)

  def tearDown(self):
    super(TestMixin, self).tearDown()
    self._logger.setLevel(self._old_log_level)
    if self._old_max_bits is None:
      os.environ.pop(MAX_BITS_ENV, None)
    else:
      os.environ[MAX_BITS_ENV] = self._old_max_bits

  def set_max_bits(self, bits):
    """Lowers the arithmetic bound until the end of the test."""
    os.environ[MAX_BITS_ENV] = str(bits)

  def assertBh(self, seq):
    from limag.sequences import verify_bh
    verdict = verify_bh(seq)
    self.assertTrue(verdict.ok, '%r collides at %r' % (seq, verdict.witness))

  def expectWarnings(self):
    if self.isDefaultLogging():
      self._logger.setLevel(logging.ERROR)

  def isDefaultLogging(self):
    return self._old_log_level == logging.WARNING

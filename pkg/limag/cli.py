# -*- coding: utf-8 -*-
"""
Command-line interface.

  limag construct --n 3 --ell 1 --out seq.json
  limag verify seq.json
  limag convert --to lattice seq.json
  limag survey --max-n 4 --max-ell 1 --out survey.csv

Data goes to stdout (or --out), diagnostics to stderr. Exit status is 0 on
success, 1 on a negative verdict and 2 on usage, input or overflow errors.
"""
import argparse
import logging
import sys

from . import __version__
from .analysis import (necessary_condition_n_minus_2,
                       nonexistence_n_minus_2_ell1, survey)
from .codec import (build_syndrome_table, decode, extract_codebook,
                    simulate_channel)
from .config import CODEBOOK_SCAN_CAP, SEARCH_NODE_CAP, SURVEY_GROUP_CAP
from .errors import Error, FormatError, ParameterOverflowError
from .formats import (CODEBOOK_SCHEMA, CONDITION_SCHEMA, DECODE_SCHEMA,
                      DETERMINANT_SCHEMA, EXISTENCE_SCHEMA, LATTICE_SCHEMA,
                      NORMAL_FORM_SCHEMA, PROPERTIES_SCHEMA,
                      REPORT_SCHEMA, SEQUENCE_SCHEMA, SPHERE_SCHEMA,
                      VERDICT_SCHEMA, decoded_to_document, dump_document,
                      existence_to_document, json_int, lattice_from_document,
                      lattice_to_document, load_document, make_manifest,
                      report_to_document, sequence_from_document,
                      sequence_to_document, validate, verdict_to_document,
                      wrap_artifact, write_survey_csv)
from .groups import AbelianGroup, enumerate_abelian_groups
from .integers import (IntMatrix, abs_det, element_order, hermite_normal_form,
                       mod_inverse, smith_normal_form)
from .lattice import (lattice_from_sequence, sequence_from_lattice, volume,
                      verify_packing, verify_perfect)
from .sequences import (check_l_properties, construct_perfect_sequence,
                        construct_repetition_sequence,
                        construct_trivial_full_cube, generates_group,
                        is_perfect_sequence, search_bh, verify_bh,
                        weighted_sum)
from .sphere import CodeParams, enumerate_sphere, is_in_sphere, sphere_size

__all__ = ['COMMANDS',
           'EXIT_OK',
           'EXIT_REFUTED',
           'EXIT_ERROR',
           'build_parser',
           'main']


EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_ERROR = 2

# element_order factors the modulus; skip it above this size
ORDER_MODULUS_LIMIT = 2 ** 64

# subcommand -> library operations it exposes
COMMANDS = {
  'construct': ('construct_perfect_sequence', 'construct_trivial_full_cube',
                'construct_repetition_sequence'),
  'verify': ('verify_bh', 'is_perfect_sequence', 'verify_packing',
             'verify_perfect'),
  'decode': ('build_syndrome_table', 'weighted_sum', 'decode'),
  'simulate': ('simulate_channel',),
  'survey': ('survey',),
  'convert': ('lattice_from_sequence', 'sequence_from_lattice', 'volume',
              'generates_group'),
  'properties': ('check_l_properties', 'mod_inverse', 'element_order'),
  'sphere': ('sphere_size', 'enumerate_sphere', 'is_in_sphere'),
  'matrix': ('smith_normal_form', 'hermite_normal_form', 'abs_det'),
  'search': ('search_bh', 'enumerate_abelian_groups'),
  'codebook': ('extract_codebook',),
  'nonexistence': ('nonexistence_n_minus_2_ell1',
                   'necessary_condition_n_minus_2'),
}


class UsageError(Error):
  """Flags that parse but do not fit together."""


def _int_list(text):
  try:
    return tuple(int(x) for x in text.replace(' ', '').split(',') if x)
  except ValueError:
    raise argparse.ArgumentTypeError('expected comma-separated integers, '
                                     'got %r' % text)


def _int_rows(text):
  return [_int_list(row) for row in text.split(';') if row.strip()]


#
# output
#

def _open_out(args):
  if args.out:
    return open(args.out, 'w', encoding='utf-8', newline='')
  return None


def _emit(args, data, schema, parameters, seed=None):
  """Checks data against schema and writes it wrapped with its run manifest
  to --out or stdout.
  """
  validate(data, schema)
  manifest = make_manifest(args.command, parameters, data, seed, schema)
  artifact = wrap_artifact(manifest, data)
  fp = _open_out(args)
  if fp is None:
    dump_document(artifact, sys.stdout)
    return
  with fp:
    dump_document(artifact, fp)
  logging.info('Wrote %s', args.out)


def _read(path):
  with open(path, encoding='utf-8') as fp:
    return load_document(fp, path)


def _read_sequence(path):
  doc = _read(path)
  if not isinstance(doc, dict) or 'group' not in doc:
    raise FormatError('not a sequence document', path)
  return sequence_from_document(doc)


def _override(p, n, t, ell):
  t = p.t if t is None and p is not None else t
  ell = p.ell if ell is None and p is not None else ell
  if t is None or ell is None:
    raise UsageError('--t and --ell are required when the file has no params')
  return CodeParams(n, t, ell)


def _zeros_or(offset, n):
  return offset if offset is not None else (0,) * n


#
# subcommands
#

def cmd_construct(args):
  if args.kind == 'repetition':
    if args.ell not in (None, 1):
      raise UsageError('the repetition code has ell = 1')
    seq = construct_repetition_sequence(args.n)
  else:
    if args.ell is None:
      raise UsageError('--ell is required for --kind %s' % args.kind)
    if args.kind == 'cube':
      seq = construct_trivial_full_cube(args.n, args.ell)
    else:
      seq = construct_perfect_sequence(args.n, args.ell)
  logging.info('Constructed %r', seq)
  _emit(args, sequence_to_document(seq), SEQUENCE_SCHEMA,
        {'kind': args.kind, 'n': args.n, 'ell': args.ell})
  return EXIT_OK


def cmd_verify(args):
  doc = _read(args.file)
  if isinstance(doc, dict) and 'generator' in doc:
    L = lattice_from_document(doc)
    p = _override(L.params, L.n, args.t, args.ell)
    result = verify_packing(L, p)
    if not result.ok:
      verdict = 'not-packing'
    elif verify_perfect(L, p):
      verdict = 'perfect'
    else:
      verdict = 'packing'
  else:
    seq = sequence_from_document(doc)
    p = _override(seq.params, seq.n, args.t, args.ell)
    seq = seq.with_params(p.t, p.ell)
    result = verify_bh(seq)
    if not result.ok:
      verdict = 'not-bh'
    elif is_perfect_sequence(seq):
      verdict = 'perfect'
    else:
      verdict = 'bh'
  _emit(args, verdict_to_document(verdict, result.witness, p), VERDICT_SCHEMA,
        {'file': args.file, 't': p.t, 'ell': p.ell})
  return EXIT_OK if result.ok else EXIT_REFUTED


def cmd_decode(args):
  seq = _read_sequence(args.file)
  table = build_syndrome_table(seq)
  offset = _zeros_or(args.offset, seq.n)
  s0 = weighted_sum(seq, offset)
  result = decode(args.word, table, s0, args.sigma)
  _emit(args, decoded_to_document(result), DECODE_SCHEMA,
        {'file': args.file, 'word': list(args.word), 'offset': list(offset),
         'sigma': args.sigma})
  return EXIT_OK if result.ok else EXIT_REFUTED


def cmd_simulate(args):
  seq = _read_sequence(args.file)
  offset = _zeros_or(args.offset, seq.n)
  book = extract_codebook(seq, offset, args.sigma, cap=args.scan_cap)
  report = simulate_channel(book, build_syndrome_table(seq), args.trials,
                            args.seed)
  logging.info('Simulated %d trials: %d failures', report.trials,
               report.failures)
  _emit(args, report_to_document(report), REPORT_SCHEMA,
        {'file': args.file, 'sigma': args.sigma, 'offset': list(offset),
         'trials': args.trials}, seed=args.seed)
  return EXIT_OK if not report.failures else EXIT_REFUTED


def cmd_survey(args):
  verdicts = survey(args.max_n, args.max_ell, group_cap=args.group_cap,
                    search_cap=args.search_cap,
                    check_contradictions=args.check)
  fp = _open_out(args)
  if fp is None:
    write_survey_csv(verdicts, sys.stdout)
    return EXIT_OK
  with fp:
    write_survey_csv(verdicts, fp)
  with open(args.out, encoding='utf-8', newline='') as fp:
    text = fp.read()
  # the CSV cannot carry its own manifest
  manifest = make_manifest(args.command, {
    'max_n': args.max_n, 'max_ell': args.max_ell,
    'group_cap': args.group_cap, 'search_cap': args.search_cap,
    'check': args.check}, text)
  with open(args.out + '.manifest.json', 'w', encoding='utf-8') as fp:
    dump_document(dict(manifest._asdict()), fp)
  logging.info('Wrote %s', args.out)
  return EXIT_OK


def cmd_convert(args):
  doc = _read(args.file)
  is_lattice = isinstance(doc, dict) and 'generator' in doc
  if args.to == 'lattice':
    if is_lattice:
      raise UsageError('%s is already a lattice' % args.file)
    seq = sequence_from_document(doc)
    if not generates_group(seq):
      logging.warning('Elements of %r do not generate the group; the lattice '
                      'index is smaller than %d', seq, seq.group.order)
    L = lattice_from_sequence(seq)
    logging.info('Kernel lattice of volume %d', volume(L))
    out = lattice_to_document(L.canonical())
  else:
    if not is_lattice:
      raise UsageError('%s is already a sequence' % args.file)
    L = lattice_from_document(doc)
    out = sequence_to_document(sequence_from_lattice(L, args.t, args.ell))
  _emit(args, out, LATTICE_SCHEMA if args.to == 'lattice' else SEQUENCE_SCHEMA,
        {'file': args.file, 'to': args.to})
  return EXIT_OK


def cmd_properties(args):
  props = check_l_properties(args.n, args.ell)
  m = props.modulus
  order = None
  if props.p1 and m < ORDER_MODULUS_LIMIT:
    order = element_order(props.x, m)
  inverse = mod_inverse(args.ell % m, m)
  data = {
    'n': args.n,
    'ell': args.ell,
    'modulus': json_int(m),
    'ell_inverse': None if inverse is None else json_int(inverse),
    'x': None if props.x is None else json_int(props.x),
    'order': order,
    'p1': props.p1,
    'p2': props.p2,
    'p3': props.p3,
  }
  _emit(args, data, PROPERTIES_SCHEMA, {'n': args.n, 'ell': args.ell})
  return EXIT_OK if props.p1 and props.p2 and props.p3 else EXIT_REFUTED


def cmd_sphere(args):
  p = CodeParams(args.n, args.t, args.ell)
  data = {'n': p.n, 't': p.t, 'ell': p.ell, 'size': json_int(sphere_size(p))}
  if args.list:
    data['vectors'] = [list(e) for e in enumerate_sphere(p)]
  if args.contains is not None:
    data['contains'] = is_in_sphere(args.contains, p)
  _emit(args, data, SPHERE_SCHEMA, {'n': p.n, 't': p.t, 'ell': p.ell})
  return EXIT_OK


def cmd_matrix(args):
  G = IntMatrix(args.rows)
  if args.form == 'det':
    data = {'det': json_int(abs_det(G))}
  else:
    if args.form == 'snf':
      U, D, V = smith_normal_form(G)
    else:
      U, D, V = hermite_normal_form(G)
    data = dict((name, [[json_int(x) for x in row] for row in M])
                for name, M in (('U', U), ('D', D), ('V', V)))
  schema = DETERMINANT_SCHEMA if args.form == 'det' else NORMAL_FORM_SCHEMA
  _emit(args, data, schema, {'form': args.form, 'rows': G.tolist()})
  return EXIT_OK


def cmd_search(args):
  if args.factors:
    groups = [AbelianGroup(args.factors)]
  else:
    order = args.order
    if order is None:
      order = sphere_size(CodeParams(args.n, args.t, args.ell))
    groups = enumerate_abelian_groups(order)
  for group in groups:
    found = search_bh(group, args.n, args.t, args.ell, cap=args.search_cap)
    if found is not None:
      _emit(args, sequence_to_document(found), SEQUENCE_SCHEMA,
            {'n': args.n, 't': args.t, 'ell': args.ell,
             'groups': [str(g) for g in groups]})
      return EXIT_OK
  _emit(args, verdict_to_document('none',
                                  params=CodeParams(args.n, args.t, args.ell)),
        VERDICT_SCHEMA, {'n': args.n, 't': args.t, 'ell': args.ell,
         'groups': [str(g) for g in groups]})
  return EXIT_REFUTED


def cmd_codebook(args):
  seq = _read_sequence(args.file)
  offset = _zeros_or(args.offset, seq.n)
  book = extract_codebook(seq, offset, args.sigma, cap=args.scan_cap)
  data = {
    'sigma': book.sigma,
    'offset': list(book.offset),
    'syndrome': list(book.syndrome),
    'words': [list(w) for w in book.words],
  }
  _emit(args, data, CODEBOOK_SCHEMA,
        {'file': args.file, 'sigma': args.sigma, 'offset': list(offset)})
  return EXIT_OK


def cmd_nonexistence(args):
  if args.n is not None:
    cond = necessary_condition_n_minus_2(args.n, args.ell)
    data = {
      'n': args.n,
      'ell': args.ell,
      'holds': cond.holds,
      'witnesses': list(cond.witnesses),
      'tried': list(cond.tried),
      'nonpositive': list(cond.nonpositive),
    }
    _emit(args, data, CONDITION_SCHEMA, {'n': args.n, 'ell': args.ell})
    return EXIT_OK if cond.holds else EXIT_REFUTED
  verdicts = nonexistence_n_minus_2_ell1(args.max_n)
  _emit(args, existence_to_document(verdicts), EXISTENCE_SCHEMA,
        {'max_n': args.max_n})
  return EXIT_OK


#
# parser
#

def _add_params(parser, n=True, t=True, ell=True, required=True):
  if n:
    parser.add_argument('--n', type=int, required=required,
                        help='code length')
  if t:
    parser.add_argument('--t', type=int, required=required,
                        help='number of errors')
  if ell:
    parser.add_argument('--ell', type=int, required=required,
                        help='error magnitude bound')


def build_parser():
  parser = argparse.ArgumentParser(
    prog='limag',
    description='Perfect codes for asymmetric limited-magnitude errors.')
  parser.add_argument('--version', action='version',
                      version='%(prog)s ' + __version__)
  parser.add_argument('-v', '--verbose', action='store_true',
                      help='debug logging on stderr')
  sub = parser.add_subparsers(dest='command', metavar='COMMAND')
  sub.required = True

  def command(name, handler, help):
    p = sub.add_parser(name, help=help)
    p.add_argument('--out', help='output file (default stdout)')
    p.set_defaults(handler=handler)
    return p

  p = command('construct', cmd_construct, 'build a perfect sequence')
  p.add_argument('--n', type=int, required=True)
  p.add_argument('--ell', type=int)
  p.add_argument('--kind', choices=('perfect', 'cube', 'repetition'),
                 default='perfect',
                 help='perfect: t = n-1; cube: t = n; repetition: odd n, '
                      't = (n-1)/2, ell = 1')

  p = command('verify', cmd_verify, 'check a sequence or lattice file')
  p.add_argument('file')
  _add_params(p, n=False, required=False)

  p = command('decode', cmd_decode, 'decode one received word')
  p.add_argument('file', help='sequence file')
  p.add_argument('--word', type=_int_list, required=True)
  p.add_argument('--offset', type=_int_list)
  p.add_argument('--sigma', type=int)

  p = command('simulate', cmd_simulate, 'simulate the limited-magnitude '
                                        'channel')
  p.add_argument('file', help='sequence file')
  p.add_argument('--sigma', type=int, required=True)
  p.add_argument('--offset', type=_int_list)
  p.add_argument('--seed', type=int, required=True)
  p.add_argument('--trials', type=int, default=1000)
  p.add_argument('--scan-cap', type=int, default=CODEBOOK_SCAN_CAP)

  p = command('survey', cmd_survey, 'existence table as CSV')
  p.add_argument('--max-n', type=int, required=True)
  p.add_argument('--max-ell', type=int, required=True)
  p.add_argument('--group-cap', type=int, default=SURVEY_GROUP_CAP)
  p.add_argument('--search-cap', type=int, default=SEARCH_NODE_CAP)
  p.add_argument('--check', action='store_true',
                 help='also search cells that fail the necessary condition')

  p = command('convert', cmd_convert, 'sequence <-> lattice')
  p.add_argument('file')
  p.add_argument('--to', choices=('lattice', 'sequence'), required=True)
  _add_params(p, n=False, required=False)

  p = command('properties', cmd_properties,
              'facts behind the perfect construction')
  _add_params(p, t=False)

  p = command('sphere', cmd_sphere, 'error sphere size and members')
  _add_params(p)
  p.add_argument('--list', action='store_true')
  p.add_argument('--contains', type=_int_list)

  p = command('matrix', cmd_matrix, 'normal forms of an integer matrix')
  p.add_argument('--rows', type=_int_rows, required=True,
                 help='rows separated by ";", entries by ","')
  p.add_argument('--form', choices=('snf', 'hnf', 'det'), default='snf')

  p = command('search', cmd_search, 'backtracking search for a sequence')
  _add_params(p)
  p.add_argument('--factors', type=_int_list,
                 help='one group by invariant factors')
  p.add_argument('--order', type=int,
                 help='every abelian group of this order (default |S|)')
  p.add_argument('--search-cap', type=int, default=SEARCH_NODE_CAP)

  p = command('codebook', cmd_codebook, 'codewords over a finite alphabet')
  p.add_argument('file', help='sequence file')
  p.add_argument('--sigma', type=int, required=True)
  p.add_argument('--offset', type=_int_list)
  p.add_argument('--scan-cap', type=int, default=CODEBOOK_SCAN_CAP)

  p = command('nonexistence', cmd_nonexistence,
              'divisibility condition for t = n-2')
  p.add_argument('--max-n', type=int, default=64)
  p.add_argument('--n', type=int, help='check one length instead')
  p.add_argument('--ell', type=int, default=1)

  return parser


def main(argv=None):
  args = build_parser().parse_args(argv)
  level = logging.DEBUG if args.verbose else logging.WARNING
  logging.basicConfig(stream=sys.stderr,
                      format='%(levelname)s %(module)s: %(message)s')
  logging.getLogger().setLevel(level)

  try:
    return args.handler(args)
  except ParameterOverflowError as e:
    sys.stderr.write('limag: %s\n' % e)
    return EXIT_ERROR
  except (Error, OSError) as e:
    sys.stderr.write('limag: error: %s\n' % e)
    return EXIT_ERROR

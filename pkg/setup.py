# -*- coding: utf-8 -*-
import os
import re
from setuptools import setup


def read(fname):
  return open(os.path.join(os.path.dirname(__file__), fname)).read()


# the package imports numpy and sympy, so read the version without importing
version = re.search(r"^__version__ = '([^']+)'",
                    read('limag/__init__.py'), re.M).group(1)

setup(name='limag',
      version=version,
      author='Alex Vagin (http://alex.cloudware.it)',
      author_email='alex@cloudware.it',
      description='Perfect lattice codes for asymmetric limited-magnitude '
                  'errors: construction, verification, decoding and search',
      keywords='coding theory lattice perfect code flash memory sidon',
      platforms=["any"],
      license='MIT',
      python_requires='>=3.8',
      install_requires=['sympy', 'numpy', 'jsonschema'],
      extras_require={
        'test': ['hypothesis']
      },
      entry_points={
        'console_scripts': ['limag = limag.cli:main']
      },
      classifiers=[
        'Development Status :: 4 - Beta',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Topic :: Software Development :: Libraries',
      ],
      packages=['limag'],
      package_data={'limag': ['schemas/*.json']},
      long_description=read('README')
)

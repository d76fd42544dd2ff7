#!/usr/bin/env python
from setuptools import setup

from searchit.strings import version_str

__author__ = "the SearchIt developers"
__copyright__ = "Copyright (C) 2026"
__license__ = 'MIT'
__version__ = version_str
__doc__="""SearchIt: exact solutions of search games with search times and capture probabilities """

def setup_searchit():
  doclines = __doc__.split("\n")

  setup(name="searchit",
        version=__version__,
        author = __author__,
        maintainer = __author__,
        license = __license__,
        description = doclines[0],
        long_description = "\n".join(doclines[2:]),
        platforms = "Any",
        packages=['searchit'],
        package_dir={'searchit': 'searchit'},
        install_requires=['numpy'],
        extras_require={'test': ['pytest']},
        scripts=['bin/searchit'],
        data_files=[('', ['README.md'])]
  )

if __name__ == '__main__':
  setup_searchit()

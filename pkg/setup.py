#! /usr/bin/env python

"""
Setup file for fschar distribution.
"""

import sys
from setuptools import setup

with open('README.md') as fhandle:
    DESCRIPTION = fhandle.read()

if sys.version_info < (3, 6):
    sys.exit('Sorry, Python < 3.6 is not supported')

setup(
    name='fschar',
    version='0.1.0',
    description='Characters of Feigin-Stoyanovsky subspaces of level k sl(3) modules: configurations, quasi-particle bases and fermionic formulas.',  # pylint: disable=line-too-long
    long_description=DESCRIPTION,
    long_description_content_type='text/markdown',
    packages=['fschar', 'fschar.io'],
    entry_points={
        'console_scripts': [
            'fschar=fschar.cli:run',
        ],
    },
    install_requires=[
        'pyrsistent>=0.11.13',
        'pytz>=2016.4',
        'tzlocal>=1.2.2',
        'humanize>=0.5.1',
        'six>=1.10.0',
    ],
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'Environment :: Console',
        'License :: OSI Approved :: BSD License',
        'Operating System :: POSIX',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)

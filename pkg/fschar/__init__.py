#  This source code is licensed under the BSD-style license found in the
#  LICENSE file in the root directory of this source tree.

"""
fschar - characters of Feigin-Stoyanovsky subspaces of level k sl(3)
modules, computed by configuration counting, by the quasi-particle basis
and by three fermionic sums, with a checker that they all agree.
"""

__version__ = '0.1.0'

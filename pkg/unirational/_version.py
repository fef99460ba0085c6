# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.


__version__ = '0.1.0'

version = __version__
version_info = __version__.split('.')
